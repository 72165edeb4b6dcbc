//! Finite posets, the Boolean lattices `[1]^n`, their points and intervals,
//! and coordinate permutations.
//!
//! Points are bit vectors: coordinate `i` (1-based) lives in bit `i - 1`.
//! Every textual rendering prints coordinate 1 first.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest arity representable by a [`Point`].
pub const MAX_ARITY: usize = 32;

/// Mask with the low `n` bits set.
pub fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// An element of `[1]^n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Point {
    n: usize,
    bits: u32,
}

impl Point {
    pub fn new(n: usize, bits: u32) -> Self {
        assert!(n <= MAX_ARITY, "arity {n} exceeds {MAX_ARITY}");
        assert_eq!(bits & !full_mask(n), 0, "bits outside arity {n}");
        Point { n, bits }
    }

    pub fn bottom(n: usize) -> Self {
        Point::new(n, 0)
    }

    pub fn top(n: usize) -> Self {
        Point::new(n, full_mask(n))
    }

    /// Builds a point from coordinates listed coordinate 1 first.
    pub fn from_coords(coords: &[u8]) -> Result<Self> {
        if coords.len() > MAX_ARITY {
            return Err(Error::ArityTooLarge { arity: coords.len(), bound: MAX_ARITY });
        }
        let mut bits = 0;
        for (i, &c) in coords.iter().enumerate() {
            match c {
                0 => {}
                1 => bits |= 1 << i,
                _ => return Err(Error::Parse(format!("coordinate value {c} is not 0 or 1"))),
            }
        }
        Ok(Point::new(coords.len(), bits))
    }

    /// Parses a bit string such as `"01"` (coordinate 1 first).
    pub fn parse(s: &str) -> Result<Self> {
        let coords: Vec<u8> = s
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(Error::Parse(format!("bad point literal {s:?}"))),
            })
            .collect::<Result<_>>()?;
        Point::from_coords(&coords)
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// Coordinate `i`, 1-based.
    pub fn coord(&self, i: usize) -> u8 {
        assert!(i >= 1 && i <= self.n);
        ((self.bits >> (i - 1)) & 1) as u8
    }

    pub fn coords(&self) -> Vec<u8> {
        (1..=self.n).map(|i| self.coord(i)).collect()
    }

    pub fn leq(&self, other: &Point) -> bool {
        self.n == other.n && self.bits & !other.bits == 0
    }

    /// Lexicographic order with coordinate 1 most significant.
    pub fn lex_cmp(&self, other: &Point) -> Ordering {
        lex_cmp_bits(self.bits, other.bits, self.n.max(other.n))
    }
}

/// Lexicographic comparison of two `n`-bit vectors, coordinate 1 first.
pub fn lex_cmp_bits(a: u32, b: u32, n: usize) -> Ordering {
    for i in 0..n {
        let (x, y) = ((a >> i) & 1, (b >> i) & 1);
        if x != y {
            return x.cmp(&y);
        }
    }
    Ordering::Equal
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.n {
            write!(f, "{}", self.coord(i))?;
        }
        Ok(())
    }
}

/// A Boolean interval `[lo, hi]` of `[1]^n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Interval {
    lo: Point,
    hi: Point,
}

impl Interval {
    pub fn lo(&self) -> Point {
        self.lo
    }

    pub fn hi(&self) -> Point {
        self.hi
    }

    pub fn arity(&self) -> usize {
        self.lo.n
    }

    pub fn rank(&self) -> usize {
        (self.hi.bits ^ self.lo.bits).count_ones() as usize
    }

    /// Mask of the coordinates that vary inside the interval.
    pub fn free_mask(&self) -> u32 {
        self.hi.bits ^ self.lo.bits
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.lo.leq(p) && p.leq(&self.hi)
    }

    pub fn whole(n: usize) -> Self {
        Interval { lo: Point::bottom(n), hi: Point::top(n) }
    }

    /// Members in increasing order of their bit patterns.
    pub fn members(&self) -> Vec<Point> {
        submasks(self.free_mask())
            .into_iter()
            .map(|s| Point::new(self.lo.n, self.lo.bits | s))
            .collect()
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

pub fn make_interval(lo: Point, hi: Point) -> Result<Interval> {
    if lo.n != hi.n {
        return Err(Error::ArityMismatch { expected: lo.n, found: hi.n });
    }
    if !lo.leq(&hi) {
        return Err(Error::IncomparableEndpoints { lo: lo.to_string(), hi: hi.to_string() });
    }
    Ok(Interval { lo, hi })
}

/// All submasks of `mask`, in increasing numeric order.
pub fn submasks(mask: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(1 << mask.count_ones());
    let mut s: u32 = 0;
    loop {
        out.push(s);
        if s == mask {
            break;
        }
        s = (s.wrapping_sub(mask)) & mask;
    }
    out
}

/// A coordinate permutation of `[1]^n`, i.e. a bijection of `{1..n}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation {
    // map[j] = g(j+1) - 1
    map: Vec<usize>,
}

impl Permutation {
    /// Builds `g` from its 1-based images `[g(1), ..., g(n)]`.
    pub fn new(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut map = Vec::with_capacity(n);
        for &img in images {
            if img == 0 || img > n {
                return Err(Error::IndexOutOfRange { index: img, bound: n });
            }
            if seen[img - 1] {
                return Err(Error::Parse(format!("{images:?} is not a permutation")));
            }
            seen[img - 1] = true;
            map.push(img - 1);
        }
        Ok(Permutation { map })
    }

    pub(crate) fn from_zero_based(map: Vec<usize>) -> Self {
        debug_assert!({
            let mut s = map.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| i == v)
        });
        Permutation { map }
    }

    pub fn identity(n: usize) -> Self {
        Permutation { map: (0..n).collect() }
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    /// `g(j)`, 1-based.
    pub fn image(&self, j: usize) -> usize {
        self.map[j - 1] + 1
    }

    pub fn images(&self) -> Vec<usize> {
        self.map.iter().map(|&v| v + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.map.len()];
        for (j, &v) in self.map.iter().enumerate() {
            inv[v] = j;
        }
        Permutation { map: inv }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch { expected: self.degree(), found: other.degree() });
        }
        Ok(Permutation { map: other.map.iter().map(|&v| self.map[v]).collect() })
    }

    /// The point `y` with `y_{g(j)} = x_j`.
    pub fn apply(&self, x: &Point) -> Result<Point> {
        if x.n != self.degree() {
            return Err(Error::DegreeMismatch { expected: x.n, found: self.degree() });
        }
        Ok(Point::new(x.n, self.apply_bits(x.bits)))
    }

    pub(crate) fn apply_bits(&self, bits: u32) -> u32 {
        let mut y = 0;
        for (j, &v) in self.map.iter().enumerate() {
            y |= ((bits >> j) & 1) << v;
        }
        y
    }

    /// All of `Σ_n` in lexicographic order of image lists.
    pub fn all(n: usize) -> Vec<Permutation> {
        (0..n).permutations(n).map(|map| Permutation { map }).collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.images().iter().join(","))
    }
}

/// A finite poset on elements `0..len`, each carrying a display name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinPoset {
    names: Vec<String>,
    leq: Vec<Vec<bool>>,
    succ: Vec<Vec<usize>>,
}

impl FinPoset {
    /// Builds a poset from `(i, j)` pairs meaning `i <= j`.
    ///
    /// With `covers = true` the pairs are a Hasse relation and get closed
    /// reflexively and transitively. Otherwise they must already form a
    /// partial order (the diagonal may be omitted).
    pub fn from_relation(names: Vec<String>, pairs: &[(usize, usize)], covers: bool) -> Result<Self> {
        let n = names.len();
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(i, j) in pairs {
            if i >= n || j >= n {
                return Err(Error::InvalidPoset(format!("pair ({i},{j}) out of range")));
            }
            leq[i][j] = true;
        }
        if covers {
            // Warshall closure
            for k in 0..n {
                for i in 0..n {
                    if leq[i][k] {
                        for j in 0..n {
                            if leq[k][j] {
                                leq[i][j] = true;
                            }
                        }
                    }
                }
            }
        }
        FinPoset::from_matrix(names, leq)
    }

    /// Builds a poset from a predicate `leq(i, j)`, validating the axioms.
    pub fn from_fn(names: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let n = names.len();
        let m = (0..n).map(|i| (0..n).map(|j| leq(i, j)).collect()).collect();
        FinPoset::from_matrix(names, m)
    }

    fn from_matrix(names: Vec<String>, leq: Vec<Vec<bool>>) -> Result<Self> {
        let n = names.len();
        for i in 0..n {
            if !leq[i][i] {
                return Err(Error::InvalidPoset(format!("{} is not <= itself", names[i])));
            }
            for j in 0..n {
                if i != j && leq[i][j] && leq[j][i] {
                    return Err(Error::InvalidPoset(format!(
                        "{} and {} violate antisymmetry",
                        names[i], names[j]
                    )));
                }
                if leq[i][j] {
                    for k in 0..n {
                        if leq[j][k] && !leq[i][k] {
                            return Err(Error::InvalidPoset(format!(
                                "{} <= {} <= {} but not {} <= {}",
                                names[i], names[j], names[k], names[i], names[k]
                            )));
                        }
                    }
                }
            }
        }
        let succ = (0..n)
            .map(|x| {
                (0..n)
                    .filter(|&z| z != x && leq[x][z])
                    .filter(|&z| !(0..n).any(|y| y != x && y != z && leq[x][y] && leq[y][z]))
                    .collect()
            })
            .collect();
        Ok(FinPoset { names, leq, succ })
    }

    /// The Boolean lattice `[1]^n`; element ids are the bit patterns.
    pub fn cube(n: usize) -> Self {
        assert!(n <= 12, "cube poset of arity {n} is too large");
        let names = (0..1u32 << n).map(|b| Point::new(n, b).to_string()).collect();
        FinPoset::from_fn(names, |i, j| i & !j == 0).expect("cube is a poset")
    }

    /// The chain `0 < 1 < ... < len-1`.
    pub fn chain(len: usize) -> Self {
        let names = (0..len).map(|i| i.to_string()).collect();
        FinPoset::from_fn(names, |i, j| i <= j).expect("chain is a poset")
    }

    /// Cartesian product, element `(a, b)` has id `a * |other| + b`.
    pub fn product(&self, other: &FinPoset) -> Self {
        let q = other.len();
        let names = iproduct_names(&self.names, &other.names);
        FinPoset::from_fn(names, |i, j| self.leq(i / q, j / q) && other.leq(i % q, j % q))
            .expect("product of posets is a poset")
    }

    /// The induced subposet on all elements except `removed`.
    pub fn without(&self, removed: &[usize]) -> Self {
        let keep: Vec<usize> = (0..self.len()).filter(|i| !removed.contains(i)).collect();
        let names = keep.iter().map(|&i| self.names[i].clone()).collect();
        FinPoset::from_fn(names, |i, j| self.leq(keep[i], keep[j])).expect("subposet is a poset")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq[i][j]
    }

    /// Immediate successors of `x`.
    pub fn successors(&self, x: usize) -> &[usize] {
        &self.succ[x]
    }

    /// Cover pairs `(x, z)` with `z` an immediate successor of `x`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        (0..self.len()).flat_map(|x| self.succ[x].iter().map(move |&z| (x, z))).collect()
    }

    /// Members of `[x, z]` in increasing id order.
    pub fn interval(&self, x: usize, z: usize) -> Vec<usize> {
        (0..self.len()).filter(|&y| self.leq[x][y] && self.leq[y][z]).collect()
    }

    /// Greatest lower bound, if it exists.
    pub fn meet(&self, x: usize, y: usize) -> Option<usize> {
        let lower: Vec<usize> = (0..self.len()).filter(|&w| self.leq[w][x] && self.leq[w][y]).collect();
        lower.iter().copied().find(|&w| lower.iter().all(|&v| self.leq[v][w]))
    }

    /// Least upper bound of a set, if it exists. The empty set has the
    /// minimum as supremum.
    pub fn supremum(&self, xs: &[usize]) -> Option<usize> {
        let upper: Vec<usize> =
            (0..self.len()).filter(|&w| xs.iter().all(|&x| self.leq[x][w])).collect();
        upper.iter().copied().find(|&w| upper.iter().all(|&v| self.leq[w][v]))
    }

    pub fn join(&self, x: usize, y: usize) -> Option<usize> {
        self.supremum(&[x, y])
    }
}

fn iproduct_names(a: &[String], b: &[String]) -> Vec<String> {
    a.iter().cartesian_product(b.iter()).map(|(x, y)| format!("({x},{y})")).collect()
}

/// The Boolean structure of an interval `[lo, hi]` in a poset: its atoms and
/// the member sitting at each atom subset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BooleanStructure {
    /// Immediate successors of `lo` inside the interval, by increasing id.
    pub atoms: Vec<usize>,
    /// `members[mask]` is the element whose atoms below it are `mask`.
    pub members: Vec<usize>,
}

impl BooleanStructure {
    pub fn rank(&self) -> usize {
        self.atoms.len()
    }

    /// Atom mask of a member, if it belongs to the interval.
    pub fn mask_of(&self, element: usize) -> Option<u32> {
        self.members.iter().position(|&e| e == element).map(|m| m as u32)
    }
}

/// Tests whether `[x, z]` is Boolean by mapping each member to the set of
/// atoms below it and checking that this is an order-isomorphism onto the
/// powerset of the atoms.
pub fn boolean_structure(p: &FinPoset, x: usize, z: usize) -> Option<BooleanStructure> {
    if !p.leq(x, z) {
        return None;
    }
    let members = p.interval(x, z);
    let atoms: Vec<usize> = p.successors(x).iter().copied().filter(|&a| p.leq(a, z)).collect();
    let k = atoms.len();
    if k >= 31 || members.len() != 1usize << k {
        return None;
    }
    let mut by_mask = vec![usize::MAX; 1 << k];
    let mut masks = Vec::with_capacity(members.len());
    for &y in &members {
        let mask = atoms
            .iter()
            .enumerate()
            .filter(|(_, &a)| p.leq(a, y))
            .fold(0u32, |acc, (j, _)| acc | (1 << j));
        if by_mask[mask as usize] != usize::MAX {
            return None;
        }
        by_mask[mask as usize] = y;
        masks.push(mask);
    }
    for (a, &ya) in members.iter().enumerate() {
        for (b, &yb) in members.iter().enumerate() {
            if p.leq(ya, yb) != (masks[a] & !masks[b] == 0) {
                return None;
            }
        }
    }
    Some(BooleanStructure { atoms, members: by_mask })
}

/// A Boolean interval of a poset, as element ids.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct BooleanInterval {
    pub lo: usize,
    pub hi: usize,
    pub rank: usize,
}

/// Every Boolean interval of `p`, sorted by rank, then `lo`, then `hi`.
pub fn boolean_intervals(p: &FinPoset) -> Vec<BooleanInterval> {
    let mut out = Vec::new();
    for x in 0..p.len() {
        for z in 0..p.len() {
            if let Some(s) = boolean_structure(p, x, z) {
                out.push(BooleanInterval { lo: x, hi: z, rank: s.rank() });
            }
        }
    }
    out.sort_by_key(|b| (b.rank, b.lo, b.hi));
    out
}

/// The poset `P^{[k]}` of monotone maps `[k] -> P`, i.e. chains
/// `p_0 <= ... <= p_k`, ordered pointwise.
#[derive(Clone, Debug)]
pub struct FunctionPoset {
    pub poset: FinPoset,
    /// `chains[e]` lists `(p_0, ..., p_k)` for element `e`.
    pub chains: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl FunctionPoset {
    pub fn index_of(&self, chain: &[usize]) -> Option<usize> {
        self.index.get(chain).copied()
    }

    pub fn k(&self) -> usize {
        self.chains.first().map_or(0, |c| c.len() - 1)
    }
}

pub fn function_poset(p: &FinPoset, k: usize) -> FunctionPoset {
    fn extend(p: &FinPoset, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k + 1 {
            out.push(cur.clone());
            return;
        }
        for y in 0..p.len() {
            if cur.last().map_or(true, |&x| p.leq(x, y)) {
                cur.push(y);
                extend(p, k, cur, out);
                cur.pop();
            }
        }
    }
    let mut chains = Vec::new();
    extend(p, k, &mut Vec::new(), &mut chains);
    let names = chains.iter().map(|c| c.iter().map(|&i| p.name(i)).join(",")).collect();
    let poset = FinPoset::from_fn(names, |i, j| {
        chains[i].iter().zip(&chains[j]).all(|(&a, &b)| p.leq(a, b))
    })
    .expect("pointwise order is a partial order");
    let index = chains.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
    FunctionPoset { poset, chains, index }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn make_interval_examples() {
        let i = make_interval(Point::parse("00").unwrap(), Point::parse("11").unwrap()).unwrap();
        assert_eq!((i.rank(), i.members().len()), (2, 4));
        let i = make_interval(Point::parse("01").unwrap(), Point::parse("01").unwrap()).unwrap();
        assert_eq!((i.rank(), i.members().len()), (0, 1));
        let err = make_interval(Point::parse("10").unwrap(), Point::parse("01").unwrap());
        assert!(matches!(err, Err(Error::IncomparableEndpoints { .. })));
    }

    #[test]
    fn point_rendering_is_coordinate_one_first() {
        let p = Point::from_coords(&[0, 1]).unwrap();
        assert_eq!(p.bits(), 0b10);
        assert_eq!(p.to_string(), "01");
        assert_eq!(Point::parse("01").unwrap(), p);
    }

    #[test]
    fn permutation_apply_moves_coordinate_j_to_g_j() {
        let g = Permutation::new(&[2, 3, 1]).unwrap();
        let x = Point::parse("100").unwrap();
        assert_eq!(g.apply(&x).unwrap().to_string(), "010");
        assert!(g.compose(&g.inverse()).unwrap().is_identity());
    }

    #[test]
    fn boolean_interval_counts() {
        let count = |p: &FinPoset| {
            let mut c = [0usize; 4];
            for b in boolean_intervals(p) {
                c[b.rank] += 1;
            }
            c
        };
        assert_eq!(count(&FinPoset::chain(3)), [3, 2, 0, 0]);
        assert_eq!(count(&FinPoset::cube(2)), [4, 4, 1, 0]);
        assert_eq!(boolean_intervals(&FinPoset::cube(3)).len(), 27);
        let cube = FinPoset::cube(3);
        assert_eq!(count(&cube.without(&[7])), [7, 9, 3, 0]);
    }

    #[test]
    fn non_boolean_intervals_are_rejected() {
        // M3 and the pentagon N5 as whole intervals
        let names = |n: usize| (0..n).map(|i| i.to_string()).collect::<Vec<_>>();
        let m3 = FinPoset::from_relation(names(5), &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)], true)
            .unwrap();
        assert!(boolean_structure(&m3, 0, 4).is_none());
        let n5 = FinPoset::from_relation(names(5), &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)], true).unwrap();
        assert!(boolean_structure(&n5, 0, 4).is_none());
        // a 4-chain has 4 elements but only one atom
        assert!(boolean_structure(&FinPoset::chain(4), 0, 3).is_none());
    }

    #[test]
    fn poset_validation() {
        let names = vec!["a".to_string(), "b".to_string()];
        assert!(FinPoset::from_relation(names.clone(), &[(0, 1), (1, 0)], true).is_err());
        assert!(FinPoset::from_relation(names.clone(), &[(0, 1)], false).is_ok());
        let three: Vec<String> = ["a", "b", "c"].iter().map(|s| s.to_string()).collect();
        assert!(FinPoset::from_relation(three.clone(), &[(0, 1), (1, 2)], false).is_err());
        assert!(FinPoset::from_relation(three, &[(0, 1), (1, 2)], true).is_ok());
    }

    #[test]
    fn function_poset_examples() {
        let f = function_poset(&FinPoset::cube(1), 2);
        assert_eq!(f.poset.names(), &["0,0,0", "0,0,1", "0,1,1", "1,1,1"]);
        assert!((0..4).all(|i| (0..4).all(|j| f.poset.leq(i, j) == (i <= j))));
        assert_eq!(function_poset(&FinPoset::cube(2), 1).poset.len(), 9);
        let p = FinPoset::chain(3).product(&FinPoset::chain(2));
        let f0 = function_poset(&p, 0);
        assert_eq!(f0.poset.len(), p.len());
        assert!((0..p.len()).all(|i| (0..p.len()).all(|j| f0.poset.leq(i, j) == p.leq(i, j))));
    }

    #[test]
    fn function_poset_sizes_of_cubes() {
        for n in 0..=3 {
            for k in 0..=3 {
                let size = function_poset(&FinPoset::cube(n), k).poset.len();
                assert_eq!(size, (k + 2).pow(n as u32), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn meets_and_suprema() {
        let c = FinPoset::cube(2);
        assert_eq!(c.meet(1, 2), Some(0));
        assert_eq!(c.join(1, 2), Some(3));
        assert_eq!(c.supremum(&[]), Some(0));
        let v = c.without(&[0]);
        assert_eq!(v.meet(0, 1), None);
    }
}
