//! Monotone maps `[1]^m -> [1]^n` in antichain normal form, the named
//! generators, composition, tensor, permutation actions and variant tests.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::order::{full_mask, submasks, Interval, Permutation, Point, MAX_ARITY};

/// Default source-arity bound for [`oracle_interval_check`].
pub const ORACLE_BOUND: usize = 12;

/// Largest source arity for which truth tables are materialized.
pub const TABLE_BOUND: usize = 20;

/// Largest arity for which all monotone functions are enumerated.
pub const ENUM_BOUND: usize = 5;

/// Compares two masks as sorted lists of 1-based indices.
pub fn cmp_index_sets(mut a: u32, mut b: u32) -> Ordering {
    loop {
        match (a, b) {
            (0, 0) => return Ordering::Equal,
            (0, _) => return Ordering::Less,
            (_, 0) => return Ordering::Greater,
            _ => {
                let (x, y) = (a.trailing_zeros(), b.trailing_zeros());
                if x != y {
                    return x.cmp(&y);
                }
                a &= a - 1;
                b &= b - 1;
            }
        }
    }
}

/// 1-based indices of the set bits of `mask`.
pub fn indices(mask: u32) -> Vec<usize> {
    (0..32).filter(|i| mask >> i & 1 == 1).map(|i| i as usize + 1).collect()
}

/// Mask with the given 1-based indices set.
pub fn mask_of(arity: usize, idx: &[usize]) -> Result<u32> {
    idx.iter().try_fold(0u32, |acc, &i| {
        if i == 0 || i > arity {
            Err(Error::IndexOutOfRange { index: i, bound: arity })
        } else {
            Ok(acc | 1 << (i - 1))
        }
    })
}

/// A monotone function `[1]^m -> [1]`, stored as the antichain of its
/// minimal true points.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonotoneBoolFn {
    arity: usize,
    antichain: Vec<u32>,
}

/// Reduces a family of terms to the antichain of its minimal members,
/// sorted by index lists.
pub fn canonicalize(terms: impl IntoIterator<Item = u32>) -> Vec<u32> {
    let mut terms: Vec<u32> = terms.into_iter().collect();
    terms.sort_unstable_by_key(|t| (t.count_ones(), *t));
    terms.dedup();
    let mut kept: Vec<u32> = Vec::with_capacity(terms.len());
    for t in terms {
        if !kept.iter().any(|&k| k & !t == 0) {
            kept.push(t);
        }
    }
    kept.sort_unstable_by(|&a, &b| cmp_index_sets(a, b));
    kept
}

impl MonotoneBoolFn {
    /// Canonicalizes `terms` into a function of arity `m`.
    pub fn new(arity: usize, terms: impl IntoIterator<Item = u32>) -> Result<Self> {
        if arity > MAX_ARITY {
            return Err(Error::ArityTooLarge { arity, bound: MAX_ARITY });
        }
        let antichain = canonicalize(terms);
        if let Some(&bad) = antichain.iter().find(|&&t| t & !full_mask(arity) != 0) {
            let index = 32 - bad.leading_zeros() as usize;
            return Err(Error::IndexOutOfRange { index, bound: arity });
        }
        Ok(MonotoneBoolFn { arity, antichain })
    }

    /// Builds from 1-based index lists.
    pub fn from_index_sets(arity: usize, sets: &[Vec<usize>]) -> Result<Self> {
        let masks = sets.iter().map(|s| mask_of(arity, s)).collect::<Result<Vec<_>>>()?;
        MonotoneBoolFn::new(arity, masks)
    }

    pub fn constant(arity: usize, value: bool) -> Self {
        MonotoneBoolFn { arity, antichain: if value { vec![0] } else { vec![] } }
    }

    /// The projection `x ↦ x_i`, 1-based.
    pub fn var(arity: usize, i: usize) -> Result<Self> {
        let m = mask_of(arity, &[i])?;
        Ok(MonotoneBoolFn { arity, antichain: vec![m] })
    }

    /// Minimal true points of a monotone truth table.
    pub fn from_truth_table(arity: usize, f: impl Fn(u32) -> bool) -> Self {
        assert!(arity <= TABLE_BOUND);
        let terms = (0..1u32 << arity).filter(|&x| {
            f(x) && (0..arity).all(|i| x >> i & 1 == 0 || !f(x & !(1 << i)))
        });
        MonotoneBoolFn::new(arity, terms).expect("terms lie inside the arity")
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn antichain(&self) -> &[u32] {
        &self.antichain
    }

    /// The antichain as sorted 1-based index lists.
    pub fn index_sets(&self) -> Vec<Vec<usize>> {
        self.antichain.iter().map(|&t| indices(t)).collect()
    }

    pub fn eval(&self, x: u32) -> bool {
        self.antichain.iter().any(|&t| t & !x == 0)
    }

    pub fn eval_point(&self, x: &Point) -> Result<bool> {
        if x.arity() != self.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: x.arity() });
        }
        Ok(self.eval(x.bits()))
    }

    pub fn constant_value(&self) -> Option<bool> {
        match self.antichain.as_slice() {
            [] => Some(false),
            [0] => Some(true),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.constant_value().is_some()
    }

    /// Union of the antichain's members, as a mask.
    pub fn support_mask(&self) -> u32 {
        self.antichain.iter().fold(0, |acc, &t| acc | t)
    }

    /// Coordinates on which the function actually depends, 1-based.
    pub fn essential_support(&self) -> Vec<usize> {
        indices(self.support_mask())
    }

    pub fn join(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let terms = self.antichain.iter().chain(&other.antichain).copied();
        Ok(MonotoneBoolFn { arity: self.arity, antichain: canonicalize(terms) })
    }

    pub fn meet(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let terms = self.antichain.iter().cartesian_product(&other.antichain).map(|(a, b)| a | b);
        Ok(MonotoneBoolFn { arity: self.arity, antichain: canonicalize(terms) })
    }

    fn check_arity(&self, other: &Self) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: other.arity });
        }
        Ok(())
    }

    /// Substitutes `inners[i]` for variable `i + 1`; all inners share one
    /// arity, which becomes the arity of the result.
    pub fn substitute_shared(&self, inners: &[MonotoneBoolFn], arity: usize) -> Result<Self> {
        if inners.len() != self.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: inners.len() });
        }
        if let Some(bad) = inners.iter().find(|f| f.arity != arity) {
            return Err(Error::ArityMismatch { expected: arity, found: bad.arity });
        }
        let mut out: Vec<u32> = Vec::new();
        for &term in &self.antichain {
            // meet over the variables of the term, starting from constant 1
            let mut acc: Vec<u32> = vec![0];
            let mut t = term;
            while t != 0 {
                let i = t.trailing_zeros() as usize;
                t &= t - 1;
                let f = &inners[i].antichain;
                acc = canonicalize(acc.iter().cartesian_product(f).map(|(a, b)| a | b));
                if acc.is_empty() {
                    break;
                }
            }
            out.extend(acc);
        }
        Ok(MonotoneBoolFn { arity, antichain: canonicalize(out) })
    }

    /// The same function viewed in arity `arity`, variables shifted up by
    /// `offset`.
    pub fn shifted(&self, offset: usize, arity: usize) -> Self {
        assert!(offset + self.arity <= arity && arity <= MAX_ARITY);
        let antichain = self.antichain.iter().map(|&t| t << offset).collect();
        // shifting preserves the index-list order
        MonotoneBoolFn { arity, antichain }
    }

    /// Precomposition with the coordinate permutation `g`: the result `h`
    /// satisfies `h(x) = self(apply(g, x))`.
    pub fn permuted(&self, g: &Permutation) -> Result<Self> {
        if g.degree() != self.arity {
            return Err(Error::DegreeMismatch { expected: self.arity, found: g.degree() });
        }
        let inv = g.inverse();
        let terms = self.antichain.iter().map(|&t| inv.apply_bits(t));
        Ok(MonotoneBoolFn { arity: self.arity, antichain: canonicalize(terms) })
    }

    /// Substitutes constants or variables: `images[i]` is `Some(j)` to send
    /// variable `i + 1` to variable `j` (1-based, in arity `arity`), or
    /// `None` for a variable that must not occur.
    pub(crate) fn reindexed(&self, images: &[Option<usize>], arity: usize) -> Self {
        let terms = self.antichain.iter().map(|&t| {
            indices(t).into_iter().fold(0u32, |acc, i| {
                acc | 1 << (images[i - 1].expect("variable in support is mapped") - 1)
            })
        });
        MonotoneBoolFn { arity, antichain: canonicalize(terms) }
    }

    /// Truth table indexed by source point.
    pub fn truth_table(&self) -> Vec<bool> {
        assert!(self.arity <= TABLE_BOUND);
        (0..1u32 << self.arity).map(|x| self.eval(x)).collect()
    }
}

impl PartialOrd for MonotoneBoolFn {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic order of the serialized antichains.
impl Ord for MonotoneBoolFn {
    fn cmp(&self, other: &Self) -> Ordering {
        self.arity.cmp(&other.arity).then_with(|| {
            for (a, b) in self.antichain.iter().zip(&other.antichain) {
                match cmp_index_sets(*a, *b) {
                    Ordering::Equal => {}
                    o => return o,
                }
            }
            self.antichain.len().cmp(&other.antichain.len())
        })
    }
}

impl fmt::Display for MonotoneBoolFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.constant_value() {
            Some(v) => write!(f, "{}", u8::from(v)),
            None => {
                let terms = self.antichain.iter().map(|&t| {
                    indices(t).iter().map(|i| format!("x{i}")).join("∧")
                });
                write!(f, "{}", terms.format(" ∨ "))
            }
        }
    }
}

/// A monotone map `[1]^m -> [1]^n` given coordinatewise.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CubeMorphism {
    m: usize,
    n: usize,
    coords: Vec<MonotoneBoolFn>,
}

impl CubeMorphism {
    pub fn new(m: usize, coords: Vec<MonotoneBoolFn>) -> Result<Self> {
        if m > MAX_ARITY || coords.len() > MAX_ARITY {
            return Err(Error::ArityTooLarge { arity: m.max(coords.len()), bound: MAX_ARITY });
        }
        if let Some(bad) = coords.iter().find(|c| c.arity != m) {
            return Err(Error::ArityMismatch { expected: m, found: bad.arity });
        }
        Ok(CubeMorphism { m, n: coords.len(), coords })
    }

    pub fn identity(n: usize) -> Self {
        let coords = (1..=n).map(|i| MonotoneBoolFn::var(n, i).unwrap()).collect();
        CubeMorphism { m: n, n, coords }
    }

    /// The constant map onto `value`.
    pub fn constant(m: usize, value: Point) -> Self {
        let coords = (1..=value.arity()).map(|i| MonotoneBoolFn::constant(m, value.coord(i) == 1)).collect();
        CubeMorphism { m, n: value.arity(), coords }
    }

    /// Coordinate projection: coordinate `k` of the result is `x_{vars[k]}`.
    pub fn projection(m: usize, vars: &[usize]) -> Result<Self> {
        let coords = vars.iter().map(|&v| MonotoneBoolFn::var(m, v)).collect::<Result<_>>()?;
        CubeMorphism::new(m, coords)
    }

    /// The permutation `x ↦ apply(g, x)` as a morphism.
    pub fn from_permutation(g: &Permutation) -> Self {
        let inv = g.inverse();
        let n = g.degree();
        let coords = (1..=n).map(|k| MonotoneBoolFn::var(n, inv.image(k)).unwrap()).collect();
        CubeMorphism { m: n, n, coords }
    }

    pub fn source(&self) -> usize {
        self.m
    }

    pub fn target(&self) -> usize {
        self.n
    }

    pub fn coords(&self) -> &[MonotoneBoolFn] {
        &self.coords
    }

    pub fn coord(&self, k: usize) -> &MonotoneBoolFn {
        &self.coords[k - 1]
    }

    pub fn eval(&self, x: u32) -> u32 {
        self.coords.iter().enumerate().fold(0, |acc, (k, c)| acc | (u32::from(c.eval(x)) << k))
    }

    pub fn eval_point(&self, x: &Point) -> Result<Point> {
        if x.arity() != self.m {
            return Err(Error::ArityMismatch { expected: self.m, found: x.arity() });
        }
        Ok(Point::new(self.n, self.eval(x.bits())))
    }

    pub fn to_raw(&self) -> RawMap {
        assert!(self.m <= TABLE_BOUND);
        RawMap { m: self.m, n: self.n, table: (0..1u32 << self.m).map(|x| self.eval(x)).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.m == self.n && self.coords.iter().enumerate().all(|(k, c)| c.antichain == [1 << k])
    }

    /// Essential supports as masks, one per coordinate.
    pub fn support_masks(&self) -> Vec<u32> {
        self.coords.iter().map(MonotoneBoolFn::support_mask).collect()
    }

    /// First pair of coordinates sharing a variable, as
    /// `(first, second, variable)`, all 1-based.
    pub fn support_overlap(&self) -> Option<(usize, usize, usize)> {
        let s = self.support_masks();
        for a in 0..s.len() {
            for b in a + 1..s.len() {
                let common = s[a] & s[b];
                if common != 0 {
                    return Some((a + 1, b + 1, common.trailing_zeros() as usize + 1));
                }
            }
        }
        None
    }

    /// Membership in ⊞ via pairwise disjoint essential supports.
    pub fn is_interval_preserving(&self) -> bool {
        self.support_overlap().is_none()
    }

    pub(crate) fn require_boxplus(&self) -> Result<()> {
        match self.support_overlap() {
            None => Ok(()),
            Some((first, second, variable)) => Err(Error::NotBoxplus { first, second, variable }),
        }
    }

    /// `φ(0)` and `φ(1)`.
    pub fn extrema(&self) -> (u32, u32) {
        (self.eval(0), self.eval(full_mask(self.m)))
    }

    /// The image as an interval, for ⊞-morphisms.
    pub fn image_interval(&self) -> Result<Interval> {
        self.require_boxplus()?;
        let (lo, hi) = self.extrema();
        crate::order::make_interval(Point::new(self.n, lo), Point::new(self.n, hi))
    }

    /// Surjectivity, decided on the truth table.
    pub fn is_surjective(&self) -> bool {
        if self.is_interval_preserving() {
            return self.extrema() == (0, full_mask(self.n));
        }
        if self.n > self.m {
            return false;
        }
        let mut img: Vec<u32> = (0..1u32 << self.m).map(|x| self.eval(x)).collect();
        img.sort_unstable();
        img.dedup();
        img.len() == 1 << self.n
    }

    pub fn is_injective(&self) -> bool {
        if self.m > self.n {
            return false;
        }
        let mut img: Vec<u32> = (0..1u32 << self.m).map(|x| self.eval(x)).collect();
        img.sort_unstable();
        img.dedup();
        img.len() == 1 << self.m
    }

    /// `self ∘ inner`.
    pub fn after(&self, inner: &CubeMorphism) -> Result<CubeMorphism> {
        compose(self, inner)
    }

    pub fn tensor(&self, other: &CubeMorphism) -> CubeMorphism {
        tensor(self, other)
    }

    pub fn permuted(&self, g: &Permutation) -> Result<CubeMorphism> {
        act_permutation(self, g)
    }

    /// Sort key matching the serialized form.
    pub fn serial(&self) -> Vec<Vec<Vec<usize>>> {
        self.coords.iter().map(MonotoneBoolFn::index_sets).collect()
    }
}

impl fmt::Display for CubeMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]->[{}] ({})", self.m, self.n, self.coords.iter().join(", "))
    }
}

/// `ψ ∘ φ` by substituting φ's coordinates into each coordinate of ψ.
pub fn compose(psi: &CubeMorphism, phi: &CubeMorphism) -> Result<CubeMorphism> {
    if psi.m != phi.n {
        return Err(Error::ArityMismatch { expected: psi.m, found: phi.n });
    }
    let coords = psi
        .coords
        .iter()
        .map(|c| c.substitute_shared(&phi.coords, phi.m))
        .collect::<Result<_>>()?;
    Ok(CubeMorphism { m: phi.m, n: psi.n, coords })
}

/// Blockwise product `φ ⊗ ψ`.
pub fn tensor(phi: &CubeMorphism, psi: &CubeMorphism) -> CubeMorphism {
    let m = phi.m + psi.m;
    let coords = phi
        .coords
        .iter()
        .map(|c| c.shifted(0, m))
        .chain(psi.coords.iter().map(|c| c.shifted(phi.m, m)))
        .collect();
    CubeMorphism { m, n: phi.n + psi.n, coords }
}

/// `φg`, the precomposition with the coordinate permutation `g`.
pub fn act_permutation(phi: &CubeMorphism, g: &Permutation) -> Result<CubeMorphism> {
    let coords = phi.coords.iter().map(|c| c.permuted(g)).collect::<Result<_>>()?;
    Ok(CubeMorphism { m: phi.m, n: phi.n, coords })
}

/// An arbitrary function `[1]^m -> [1]^n` as an explicit table.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RawMap {
    m: usize,
    n: usize,
    table: Vec<u32>,
}

impl RawMap {
    pub fn new(m: usize, n: usize, table: Vec<u32>) -> Result<Self> {
        if m > TABLE_BOUND {
            return Err(Error::ArityTooLarge { arity: m, bound: TABLE_BOUND });
        }
        if n > MAX_ARITY {
            return Err(Error::ArityTooLarge { arity: n, bound: MAX_ARITY });
        }
        if table.len() != 1 << m {
            return Err(Error::Parse(format!("table has {} rows, expected {}", table.len(), 1u32 << m)));
        }
        if let Some(&bad) = table.iter().find(|&&v| v & !full_mask(n) != 0) {
            return Err(Error::Parse(format!("table value {bad:#b} exceeds target arity {n}")));
        }
        Ok(RawMap { m, n, table })
    }

    pub fn from_fn(m: usize, n: usize, f: impl Fn(u32) -> u32) -> Result<Self> {
        RawMap::new(m, n, (0..1u32 << m).map(f).collect())
    }

    pub fn source(&self) -> usize {
        self.m
    }

    pub fn target(&self) -> usize {
        self.n
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    pub fn eval(&self, x: u32) -> u32 {
        self.table[x as usize]
    }

    /// First edge `x < x + e_i` along which some coordinate drops, as
    /// `(coordinate, x, x + e_i)` with a 1-based coordinate.
    pub fn monotonicity_witness(&self) -> Option<(usize, u32, u32)> {
        for x in 0..1u32 << self.m {
            for i in 0..self.m {
                if x >> i & 1 == 0 {
                    let y = x | 1 << i;
                    let drop = self.table[x as usize] & !self.table[y as usize];
                    if drop != 0 {
                        return Some((drop.trailing_zeros() as usize + 1, x, y));
                    }
                }
            }
        }
        None
    }

    pub fn is_monotone(&self) -> bool {
        self.monotonicity_witness().is_none()
    }

    /// `self ∘ inner` on tables.
    pub fn after(&self, inner: &RawMap) -> Result<RawMap> {
        if self.m != inner.n {
            return Err(Error::ArityMismatch { expected: self.m, found: inner.n });
        }
        Ok(RawMap { m: inner.m, n: self.n, table: inner.table.iter().map(|&y| self.eval(y)).collect() })
    }
}

/// Canonical form of a monotone table.
pub fn from_table(raw: &RawMap) -> Result<CubeMorphism> {
    if let Some((coord, x, y)) = raw.monotonicity_witness() {
        return Err(Error::NotMonotone {
            coord,
            lo: Point::new(raw.m, x).to_string(),
            hi: Point::new(raw.m, y).to_string(),
        });
    }
    let coords = (0..raw.n)
        .map(|k| MonotoneBoolFn::from_truth_table(raw.m, |x| raw.table[x as usize] >> k & 1 == 1))
        .collect();
    Ok(CubeMorphism { m: raw.m, n: raw.n, coords })
}

/// Either representation of a map between cubes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CubeMap {
    Monotone(CubeMorphism),
    Raw(RawMap),
}

impl CubeMap {
    pub fn to_raw(&self) -> RawMap {
        match self {
            CubeMap::Monotone(f) => f.to_raw(),
            CubeMap::Raw(r) => r.clone(),
        }
    }

    /// The canonical form, failing for non-monotone tables.
    pub fn to_morphism(&self) -> Result<CubeMorphism> {
        match self {
            CubeMap::Monotone(f) => Ok(f.clone()),
            CubeMap::Raw(r) => from_table(r),
        }
    }
}

/// Finds an interval of `[1]^m` whose image is not the interval spanned by
/// the images of its endpoints.
pub fn oracle_interval_witness(phi: &CubeMorphism, bound: usize) -> Result<Option<Interval>> {
    if phi.m > bound.min(TABLE_BOUND) {
        return Err(Error::ArityTooLarge { arity: phi.m, bound: bound.min(TABLE_BOUND) });
    }
    let m = phi.m;
    let table: Vec<u32> = (0..1u32 << m).map(|x| phi.eval(x)).collect();
    let mut image = Vec::new();
    for free in 0..1u32 << m {
        let fixed = full_mask(m) & !free;
        let subs = submasks(free);
        for lo in submasks(fixed) {
            let (a, b) = (table[lo as usize], table[(lo | free) as usize]);
            let ok = a & !b == 0 && {
                image.clear();
                image.extend(subs.iter().map(|&s| table[(lo | s) as usize]));
                image.sort_unstable();
                image.dedup();
                image.len() == 1usize << (a ^ b).count_ones()
                    && image.iter().all(|&y| a & !y == 0 && y & !b == 0)
            };
            if !ok {
                return Ok(Some(
                    crate::order::make_interval(Point::new(m, lo), Point::new(m, lo | free))
                        .expect("lo <= lo | free"),
                ));
            }
        }
    }
    Ok(None)
}

/// Interval preservation checked on all `3^m` intervals.
pub fn oracle_interval_check(phi: &CubeMorphism) -> Result<bool> {
    Ok(oracle_interval_witness(phi, ORACLE_BOUND)?.is_none())
}

/// Membership predicates for the cube categories handled here.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum VariantTag {
    Monotone,
    Boxplus,
    MeetVariant,
    JoinVariant,
    LatticeVariant,
    Delta1Star,
    None,
}

impl VariantTag {
    pub const ALL: [VariantTag; 7] = [
        VariantTag::Monotone,
        VariantTag::Boxplus,
        VariantTag::MeetVariant,
        VariantTag::JoinVariant,
        VariantTag::LatticeVariant,
        VariantTag::Delta1Star,
        VariantTag::None,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            VariantTag::Monotone => "MONOTONE",
            VariantTag::Boxplus => "BOXPLUS",
            VariantTag::MeetVariant => "MEET_VARIANT",
            VariantTag::JoinVariant => "JOIN_VARIANT",
            VariantTag::LatticeVariant => "LATTICE_VARIANT",
            VariantTag::Delta1Star => "DELTA1_STAR",
            VariantTag::None => "NONE",
        }
    }

    /// Per-coordinate condition on top of support disjointness, for the
    /// tags below BOXPLUS.
    fn coord_ok(&self, f: &MonotoneBoolFn) -> bool {
        match self {
            VariantTag::MeetVariant => f.antichain.len() <= 1,
            VariantTag::JoinVariant => f.is_constant() || f.antichain.iter().all(|t| t.count_ones() == 1),
            VariantTag::LatticeVariant | VariantTag::Delta1Star => {
                f.is_constant() || (f.antichain.len() == 1 && f.antichain[0].count_ones() == 1)
            }
            _ => true,
        }
    }

    /// Whether `phi` carries this tag.
    pub fn holds(&self, phi: &CubeMorphism) -> bool {
        match self {
            VariantTag::Monotone => true,
            VariantTag::None => false,
            VariantTag::Boxplus => phi.is_interval_preserving(),
            VariantTag::Delta1Star => {
                let mut last = 0u32;
                phi.coords.iter().all(|c| {
                    self.coord_ok(c) && {
                        let s = c.support_mask();
                        let ok = s == 0 || s > last;
                        if s != 0 {
                            last = s;
                        }
                        ok
                    }
                })
            }
            tag => phi.is_interval_preserving() && phi.coords.iter().all(|c| tag.coord_ok(c)),
        }
    }
}

impl fmt::Display for VariantTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for VariantTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        VariantTag::ALL
            .into_iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown variant {s:?}")))
    }
}

/// All tags carried by a morphism, in declaration order.
pub fn classify(phi: &CubeMorphism) -> Vec<VariantTag> {
    VariantTag::ALL.into_iter().filter(|t| t.holds(phi)).collect()
}

pub fn classify_map(map: &CubeMap) -> Vec<VariantTag> {
    match map.to_morphism() {
        Ok(f) => classify(&f),
        Err(_) => vec![VariantTag::None],
    }
}

/// All monotone functions `[1]^m -> [1]`, sorted.
pub fn monotone_functions(m: usize) -> Result<&'static [MonotoneBoolFn]> {
    static CACHE: [OnceLock<Vec<MonotoneBoolFn>>; ENUM_BOUND + 1] =
        [OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new()];
    if m > ENUM_BOUND {
        return Err(Error::ArityTooLarge { arity: m, bound: ENUM_BOUND });
    }
    Ok(CACHE[m].get_or_init(|| {
        let mut out = Vec::new();
        let mut chosen = Vec::new();
        antichains_from(0, 1u32 << m, &mut chosen, &mut |a| {
            out.push(MonotoneBoolFn::new(m, a.iter().copied()).expect("in range"))
        });
        out.sort();
        out
    }))
}

fn antichains_from(next: u32, end: u32, chosen: &mut Vec<u32>, emit: &mut impl FnMut(&[u32])) {
    emit(chosen);
    for t in next..end {
        // later masks can never lie below earlier ones numerically, so only
        // subset checks against chosen terms are needed
        if chosen.iter().all(|&c| c & !t != 0) {
            chosen.push(t);
            antichains_from(t + 1, end, chosen, emit);
            chosen.pop();
        }
    }
}

/// Number of morphisms `[1]^m -> [1]^n` carrying `tag`.
pub fn count_hom(m: usize, n: usize, tag: VariantTag) -> Result<u128> {
    let fns = monotone_functions(m)?;
    match tag {
        VariantTag::None => Ok(0),
        VariantTag::Monotone => Ok((fns.len() as u128).pow(n as u32)),
        _ => {
            let mut count = 0u128;
            walk_hom(fns, n, tag, &mut Vec::new(), 0, 0, &mut |_| count += 1);
            Ok(count)
        }
    }
}

/// Guard on the number of morphisms materialized by [`enumerate_hom`].
pub const HOM_LIMIT: u128 = 5_000_000;

/// All morphisms `[1]^m -> [1]^n` carrying `tag`, sorted by their
/// serialized form.
pub fn enumerate_hom(m: usize, n: usize, tag: VariantTag) -> Result<Vec<CubeMorphism>> {
    let count = count_hom(m, n, tag)?;
    if count > HOM_LIMIT {
        return Err(Error::SizeExceeded(format!("{count} morphisms [1]^{m} -> [1]^{n}")));
    }
    let fns = monotone_functions(m)?;
    let mut out = Vec::with_capacity(count as usize);
    match tag {
        VariantTag::None => {}
        VariantTag::Monotone => {
            for combo in (0..n).map(|_| fns.iter()).multi_cartesian_product() {
                out.push(CubeMorphism { m, n, coords: combo.into_iter().cloned().collect() });
            }
        }
        _ => walk_hom(fns, n, tag, &mut Vec::new(), 0, 0, &mut |coords| {
            out.push(CubeMorphism { m, n, coords: coords.iter().map(|&f| f.clone()).collect() })
        }),
    }
    out.sort();
    Ok(out)
}

/// Depth-first walk over coordinate tuples with disjoint supports; `last`
/// tracks the largest support so far for the order condition of
/// DELTA1_STAR.
fn walk_hom<'a>(
    fns: &'a [MonotoneBoolFn],
    n: usize,
    tag: VariantTag,
    cur: &mut Vec<&'a MonotoneBoolFn>,
    used: u32,
    last: u32,
    emit: &mut impl FnMut(&[&'a MonotoneBoolFn]),
) {
    if cur.len() == n {
        emit(cur);
        return;
    }
    for f in fns {
        let s = f.support_mask();
        if s & used != 0 || !tag.coord_ok(f) {
            continue;
        }
        if tag == VariantTag::Delta1Star && s != 0 && s <= last {
            continue;
        }
        cur.push(f);
        walk_hom(fns, n, tag, cur, used | s, if s != 0 { s } else { last }, emit);
        cur.pop();
    }
}

/// The distinguished maps that generate the cube categories.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum GeneratorKind {
    Sigma,
    DeltaMinus,
    DeltaPlus,
    GammaMinus,
    GammaPlus,
    Tau,
    Diag,
    Reverse,
}

impl GeneratorKind {
    pub const ALL: [GeneratorKind; 8] = [
        GeneratorKind::Sigma,
        GeneratorKind::DeltaMinus,
        GeneratorKind::DeltaPlus,
        GeneratorKind::GammaMinus,
        GeneratorKind::GammaPlus,
        GeneratorKind::Tau,
        GeneratorKind::Diag,
        GeneratorKind::Reverse,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            GeneratorKind::Sigma => "sigma",
            GeneratorKind::DeltaMinus => "delta-",
            GeneratorKind::DeltaPlus => "delta+",
            GeneratorKind::GammaMinus => "gamma-",
            GeneratorKind::GammaPlus => "gamma+",
            GeneratorKind::Tau => "tau",
            GeneratorKind::Diag => "diag",
            GeneratorKind::Reverse => "reverse",
        }
    }

    /// Source and target arity of the basic map.
    pub fn shape(&self) -> (usize, usize) {
        match self {
            GeneratorKind::Sigma => (1, 0),
            GeneratorKind::DeltaMinus | GeneratorKind::DeltaPlus => (0, 1),
            GeneratorKind::GammaMinus | GeneratorKind::GammaPlus => (2, 1),
            GeneratorKind::Tau => (2, 2),
            GeneratorKind::Diag => (1, 2),
            GeneratorKind::Reverse => (1, 1),
        }
    }

    /// The basic map itself.
    pub fn base(&self) -> CubeMap {
        let v = |m: usize, i: usize| MonotoneBoolFn::var(m, i).unwrap();
        let mono = |m: usize, coords: Vec<MonotoneBoolFn>| CubeMap::Monotone(CubeMorphism::new(m, coords).unwrap());
        match self {
            GeneratorKind::Sigma => mono(1, vec![]),
            GeneratorKind::DeltaMinus => mono(0, vec![MonotoneBoolFn::constant(0, false)]),
            GeneratorKind::DeltaPlus => mono(0, vec![MonotoneBoolFn::constant(0, true)]),
            GeneratorKind::GammaMinus => mono(2, vec![MonotoneBoolFn::new(2, [0b11]).unwrap()]),
            GeneratorKind::GammaPlus => mono(2, vec![MonotoneBoolFn::new(2, [0b01, 0b10]).unwrap()]),
            GeneratorKind::Tau => mono(2, vec![v(2, 2), v(2, 1)]),
            GeneratorKind::Diag => mono(1, vec![v(1, 1), v(1, 1)]),
            GeneratorKind::Reverse => CubeMap::Raw(RawMap::new(1, 1, vec![1, 0]).unwrap()),
        }
    }
}

impl FromStr for GeneratorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let alias = match s {
            "σ" => "sigma",
            "δ-" | "δ₋" => "delta-",
            "δ+" | "δ₊" => "delta+",
            "γ-" | "γ₋" => "gamma-",
            "γ+" | "γ₊" => "gamma+",
            "τ" => "tau",
            other => other,
        };
        GeneratorKind::ALL
            .into_iter()
            .find(|k| k.name() == alias)
            .ok_or_else(|| Error::Parse(format!("unknown generator {s:?}")))
    }
}

/// `φ_{i;n} = id^{i-1} ⊗ φ ⊗ id^{n-i}` for the basic map `φ` of `kind`.
pub fn named_generator(kind: GeneratorKind, i: usize, n: usize) -> Result<CubeMap> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, bound: n });
    }
    let (before, after) = (CubeMorphism::identity(i - 1), CubeMorphism::identity(n - i));
    match kind.base() {
        CubeMap::Monotone(f) => Ok(CubeMap::Monotone(before.tensor(&f).tensor(&after))),
        CubeMap::Raw(r) => {
            // only reverse is raw: flip coordinate i
            debug_assert_eq!((r.m, r.n), (1, 1));
            let bit = 1u32 << (i - 1);
            Ok(CubeMap::Raw(RawMap::from_fn(n, n, |x| x ^ bit)?))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(arity: usize, sets: &[&[usize]]) -> MonotoneBoolFn {
        let sets: Vec<Vec<usize>> = sets.iter().map(|s| s.to_vec()).collect();
        MonotoneBoolFn::from_index_sets(arity, &sets).unwrap()
    }

    fn median() -> CubeMorphism {
        CubeMorphism::new(3, vec![f(3, &[&[1, 2], &[1, 3], &[2, 3]])]).unwrap()
    }

    fn mono(kind: GeneratorKind, i: usize, n: usize) -> CubeMorphism {
        named_generator(kind, i, n).unwrap().to_morphism().unwrap()
    }

    #[test]
    fn canonicalize_examples() {
        assert_eq!(f(2, &[&[1], &[1, 2]]).index_sets(), vec![vec![1]]);
        assert_eq!(f(3, &[&[2, 3], &[1, 2]]).index_sets(), vec![vec![1, 2], vec![2, 3]]);
        assert_eq!(f(2, &[]).constant_value(), Some(false));
        assert_eq!(f(2, &[&[]]).constant_value(), Some(true));
    }

    #[test]
    fn from_table_examples() {
        let and = RawMap::from_fn(2, 1, |x| u32::from(x == 3)).unwrap();
        assert_eq!(from_table(&and).unwrap().coords()[0].index_sets(), vec![vec![1, 2]]);
        let rev = RawMap::new(1, 1, vec![1, 0]).unwrap();
        assert_eq!(
            from_table(&rev),
            Err(Error::NotMonotone { coord: 1, lo: "0".into(), hi: "1".into() })
        );
        let maj = RawMap::from_fn(3, 1, |x| u32::from(x.count_ones() >= 2)).unwrap();
        assert_eq!(from_table(&maj).unwrap(), median());
    }

    #[test]
    fn essential_support_examples() {
        assert_eq!(median().coords()[0].essential_support(), vec![1, 2, 3]);
        assert!(MonotoneBoolFn::constant(3, true).essential_support().is_empty());
        assert_eq!(MonotoneBoolFn::var(3, 2).unwrap().essential_support(), vec![2]);
    }

    #[test]
    fn interval_preservation_examples() {
        assert!(median().is_interval_preserving());
        assert!(oracle_interval_check(&median()).unwrap());
        let diag = mono(GeneratorKind::Diag, 1, 1);
        assert!(!diag.is_interval_preserving());
        let w = oracle_interval_witness(&diag, ORACLE_BOUND).unwrap().unwrap();
        assert_eq!(w.to_string(), "[0,1]");
        let gg = CubeMorphism::new(2, vec![f(2, &[&[1, 2]]), f(2, &[&[1], &[2]])]).unwrap();
        assert!(!gg.is_interval_preserving());
        assert!(!oracle_interval_check(&gg).unwrap());
        // (γ_z(x, y), z): x∧y when z = 0, x∨y when z = 1
        let raw = RawMap::from_fn(3, 2, |p| {
            let (x, y, z) = (p & 1, p >> 1 & 1, p >> 2 & 1);
            let g = if z == 0 { x & y } else { x | y };
            g | z << 1
        })
        .unwrap();
        let phi = from_table(&raw).unwrap();
        assert!(!phi.is_interval_preserving());
        assert!(!oracle_interval_check(&phi).unwrap());
        assert!(oracle_interval_check(&CubeMorphism::identity(2)).unwrap());
    }

    #[test]
    fn compose_examples() {
        let sigma = mono(GeneratorKind::Sigma, 1, 1);
        let dm = mono(GeneratorKind::DeltaMinus, 1, 1);
        assert_eq!(compose(&sigma, &dm).unwrap(), CubeMorphism::identity(0));
        let freeze_z = CubeMorphism::identity(2).tensor(&mono(GeneratorKind::DeltaPlus, 1, 1));
        let or = compose(&median(), &freeze_z).unwrap();
        assert_eq!(or.coords()[0].index_sets(), vec![vec![1], vec![2]]);
        let freeze_x = dm.tensor(&CubeMorphism::identity(1));
        let zero = compose(&mono(GeneratorKind::GammaMinus, 1, 1), &freeze_x).unwrap();
        assert_eq!(zero.coords()[0].constant_value(), Some(false));
        assert!(compose(&median(), &CubeMorphism::identity(2)).is_err());
    }

    #[test]
    fn tensor_examples() {
        let g = mono(GeneratorKind::GammaMinus, 1, 1).tensor(&mono(GeneratorKind::GammaPlus, 1, 1));
        assert_eq!(g.serial(), vec![vec![vec![1, 2]], vec![vec![3], vec![4]]]);
        assert_eq!(CubeMorphism::identity(1).tensor(&CubeMorphism::identity(1)), CubeMorphism::identity(2));
        assert_eq!(median().tensor(&CubeMorphism::identity(0)), median());
    }

    #[test]
    fn permutation_examples() {
        let swap = Permutation::new(&[2, 1]).unwrap();
        let and = mono(GeneratorKind::GammaMinus, 1, 1);
        assert_eq!(and.permuted(&swap).unwrap(), and);
        assert_eq!(CubeMorphism::identity(2).permuted(&swap).unwrap(), mono(GeneratorKind::Tau, 1, 1));
        for g in Permutation::all(3) {
            assert_eq!(median().permuted(&g).unwrap(), median());
        }
    }

    #[test]
    fn permutation_action_matches_pointwise_definition() {
        let phi = CubeMorphism::new(3, vec![f(3, &[&[1, 2]]), f(3, &[&[3]])]).unwrap();
        for g in Permutation::all(3) {
            let pg = phi.permuted(&g).unwrap();
            for x in 0..8 {
                assert_eq!(pg.eval(x), phi.eval(g.apply_bits(x)));
            }
        }
    }

    #[test]
    fn classify_examples() {
        let proj = CubeMorphism::projection(2, &[2]).unwrap();
        assert_eq!(classify(&proj), VariantTag::ALL[..6].to_vec());
        use VariantTag::*;
        assert_eq!(classify(&mono(GeneratorKind::GammaMinus, 1, 1)), vec![Monotone, Boxplus, MeetVariant]);
        assert_eq!(classify(&mono(GeneratorKind::GammaPlus, 1, 1)), vec![Monotone, Boxplus, JoinVariant]);
        assert_eq!(classify(&median()), vec![Monotone, Boxplus]);
        assert_eq!(classify(&mono(GeneratorKind::Tau, 1, 1)), vec![Monotone, Boxplus, MeetVariant, JoinVariant, LatticeVariant]);
        assert_eq!(classify_map(&named_generator(GeneratorKind::Reverse, 1, 1).unwrap()), vec![None]);
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<u128> = (0..=4).map(|m| count_hom(m, 1, VariantTag::Monotone).unwrap()).collect();
        assert_eq!(counts, vec![2, 3, 6, 20, 168]);
        assert_eq!(enumerate_hom(2, 2, VariantTag::Boxplus).unwrap().len(), 22);
        let h = enumerate_hom(1, 1, VariantTag::Boxplus).unwrap();
        assert_eq!(h.len(), 3);
        assert!(h.windows(2).all(|w| w[0].serial() < w[1].serial()));
        assert_eq!(enumerate_hom(0, 0, VariantTag::Monotone).unwrap().len(), 1);
        assert_eq!(enumerate_hom(2, 0, VariantTag::Boxplus).unwrap().len(), 1);
        assert_eq!(count_hom(2, 2, VariantTag::Monotone).unwrap(), 36);
    }

    #[test]
    fn named_generator_examples() {
        let g = mono(GeneratorKind::GammaMinus, 1, 1);
        assert_eq!((0..4).map(|x| g.eval(x)).collect::<Vec<_>>(), vec![0, 0, 0, 1]);
        let s = mono(GeneratorKind::Sigma, 2, 3);
        assert_eq!(s.serial(), vec![vec![vec![1]], vec![vec![3]]]);
        match named_generator(GeneratorKind::Reverse, 1, 1).unwrap() {
            CubeMap::Raw(r) => assert_eq!(r.table(), &[1, 0]),
            _ => panic!("reverse must be raw"),
        }
        assert!(named_generator(GeneratorKind::Tau, 3, 2).is_err());
        let d = mono(GeneratorKind::DeltaPlus, 2, 2);
        assert_eq!((d.source(), d.target()), (1, 2));
        assert_eq!(d.eval(1), 0b11);
    }
}
