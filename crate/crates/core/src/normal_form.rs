//! Structure theory of ⊞ as algorithms: the tensor normal form, epi-mono
//! factorizations, sections of surjections, coface words for intervals,
//! extraction of reversals and diagonals, generator saturation and the
//! Reedy / Eilenberg-Zilber checks.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;

use itertools::Itertools;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::json::morphism_to_json;
use crate::morphism::{
    compose, enumerate_hom, from_table, named_generator, CubeMap, CubeMorphism, GeneratorKind,
    MonotoneBoolFn, RawMap, VariantTag, ENUM_BOUND,
};
use crate::order::{full_mask, lex_cmp_bits, make_interval, Interval, Permutation, Point};

/// `φg = factors₁ ⊗ … ⊗ factorsₙ ⊗ σ^{⊗dropped}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Decomposition {
    pub blocks: Vec<usize>,
    pub g: Permutation,
    pub factors: Vec<MonotoneBoolFn>,
    pub dropped: usize,
}

impl Decomposition {
    pub fn source(&self) -> usize {
        self.blocks.iter().sum::<usize>() + self.dropped
    }

    /// Block `i` (0-based) as a mask of positions.
    pub fn block_mask(&self, i: usize) -> u32 {
        let start: usize = self.blocks[..i].iter().sum();
        full_mask(self.blocks[i]) << start
    }

    /// The tensor product `factors₁ ⊗ … ⊗ σ^{⊗dropped}`.
    pub fn product(&self) -> Result<CubeMorphism> {
        let mut acc = CubeMorphism::identity(0);
        for f in &self.factors {
            acc = acc.tensor(&CubeMorphism::new(f.arity(), vec![f.clone()])?);
        }
        Ok(acc.tensor(&CubeMorphism::new(self.dropped, vec![])?))
    }

    /// The subgroup `Σ_{m₁} × … × Σ_{mₙ} × Σ_dropped` of block-preserving
    /// permutations.
    pub fn block_group(&self) -> Vec<Permutation> {
        let sizes: Vec<usize> = self.blocks.iter().copied().chain([self.dropped]).collect();
        let mut out = vec![Vec::<usize>::new()];
        let mut offset = 0;
        for &b in &sizes {
            let local = (0..b).permutations(b).collect::<Vec<_>>();
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    local.iter().map(move |p| {
                        let mut v = prefix.clone();
                        v.extend(p.iter().map(|&x| x + offset));
                        v
                    })
                })
                .collect();
            offset += b;
        }
        out.into_iter().map(Permutation::from_zero_based).collect()
    }

    /// The coset `g · (Σ_{m₁} × … × Σ_dropped)`, sorted.
    pub fn coset(&self) -> Vec<Permutation> {
        let mut c: Vec<Permutation> =
            self.block_group().iter().map(|k| self.g.compose(k).expect("equal degrees")).collect();
        c.sort();
        c
    }
}

/// Unique normal form of a ⊞-morphism.
pub fn decompose(phi: &CubeMorphism) -> Result<Decomposition> {
    phi.require_boxplus()?;
    let m = phi.source();
    let mut images = Vec::with_capacity(m);
    let mut blocks = Vec::with_capacity(phi.target());
    let mut factors = Vec::with_capacity(phi.target());
    for c in phi.coords() {
        let support = c.essential_support();
        let mut local = vec![None; m];
        for (j, &v) in support.iter().enumerate() {
            images.push(v - 1);
            local[v - 1] = Some(j + 1);
        }
        blocks.push(support.len());
        factors.push(c.reindexed(&local, support.len()));
    }
    let used: u32 = phi.support_masks().iter().fold(0, |a, &s| a | s);
    let tail: Vec<usize> = (0..m).filter(|&v| used >> v & 1 == 0).collect();
    let dropped = tail.len();
    images.extend(tail);
    Ok(Decomposition { blocks, g: Permutation::from_zero_based(images), factors, dropped })
}

/// Inverse of [`decompose`].
pub fn recompose(d: &Decomposition) -> Result<CubeMorphism> {
    if d.factors.len() != d.blocks.len() {
        return Err(Error::MalformedDecomposition(format!(
            "{} factors for {} blocks",
            d.factors.len(),
            d.blocks.len()
        )));
    }
    for (i, (f, &b)) in d.factors.iter().zip(&d.blocks).enumerate() {
        if f.arity() != b {
            return Err(Error::MalformedDecomposition(format!(
                "factor {} has arity {} but block size {}",
                i + 1,
                f.arity(),
                b
            )));
        }
        if f.support_mask() != full_mask(b) {
            return Err(Error::MalformedDecomposition(format!(
                "factor {} is constant in some coordinate",
                i + 1
            )));
        }
    }
    if d.g.degree() != d.source() {
        return Err(Error::MalformedDecomposition(format!(
            "permutation degree {} but blocks and dropped sum to {}",
            d.g.degree(),
            d.source()
        )));
    }
    d.product()?.permuted(&d.g.inverse())
}

/// Permutations `h` of the source for which `φh` is a tensor product of
/// functions with full support on the blocks of `d`, followed by deletion
/// of the tail. Brute force over all of `Σ_m`.
pub fn normal_form_permutations(phi: &CubeMorphism, blocks: &[usize]) -> Result<Vec<Permutation>> {
    let mut out = Vec::new();
    let mut masks = Vec::with_capacity(blocks.len());
    let mut offset = 0;
    for &b in blocks {
        masks.push(full_mask(b) << offset);
        offset += b;
    }
    if blocks.len() != phi.target() || offset > phi.source() {
        return Ok(out);
    }
    for h in Permutation::all(phi.source()) {
        let ph = phi.permuted(&h)?;
        if ph.support_masks() == masks {
            out.push(h);
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn symbol(&self) -> &'static str {
        match self {
            Sign::Minus => "-",
            Sign::Plus => "+",
        }
    }

    pub fn value(&self) -> bool {
        matches!(self, Sign::Plus)
    }
}

/// The coface `δ_{±position; ambient} : [1]^{ambient-1} -> [1]^{ambient}`
/// inserting a constant coordinate at `position`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Coface {
    pub sign: Sign,
    pub position: usize,
    pub ambient: usize,
}

impl Coface {
    pub fn morphism(&self) -> CubeMorphism {
        let kind = match self.sign {
            Sign::Minus => GeneratorKind::DeltaMinus,
            Sign::Plus => GeneratorKind::DeltaPlus,
        };
        match named_generator(kind, self.position, self.ambient) {
            Ok(CubeMap::Monotone(f)) => f,
            _ => unreachable!("validated coface"),
        }
    }
}

/// Cofaces applied in listed order to `[1]^source`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CofaceWord {
    pub source: usize,
    pub faces: Vec<Coface>,
}

impl CofaceWord {
    pub fn new(source: usize, faces: Vec<Coface>) -> Result<Self> {
        for (k, c) in faces.iter().enumerate() {
            if c.ambient != source + k + 1 {
                return Err(Error::ArityMismatch { expected: source + k + 1, found: c.ambient });
            }
            if c.position == 0 || c.position > c.ambient {
                return Err(Error::IndexOutOfRange { index: c.position, bound: c.ambient });
            }
        }
        Ok(CofaceWord { source, faces })
    }

    pub fn target(&self) -> usize {
        self.source + self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn evaluate(&self) -> CubeMorphism {
        self.faces.iter().fold(CubeMorphism::identity(self.source), |acc, c| {
            compose(&c.morphism(), &acc).expect("consecutive ambients match")
        })
    }

    pub fn image(&self) -> Interval {
        let f = self.evaluate();
        let (lo, hi) = f.extrema();
        make_interval(Point::new(self.target(), lo), Point::new(self.target(), hi)).expect("monotone")
    }
}

impl fmt::Display for CofaceWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts = self.faces.iter().map(|c| format!("({},{},{})", c.sign.symbol(), c.position, c.ambient));
        write!(f, "[{}]", parts.format(","))
    }
}

/// The coface word whose image is `interval`, freezing coordinates in
/// increasing order.
pub fn interval_inclusion(interval: &Interval) -> CofaceWord {
    let rank = interval.rank();
    let frozen = full_mask(interval.arity()) & !interval.free_mask();
    let faces = (0..interval.arity())
        .filter(|&i| frozen >> i & 1 == 1)
        .enumerate()
        .map(|(k, i)| Coface {
            sign: if interval.lo().bits() >> i & 1 == 1 { Sign::Plus } else { Sign::Minus },
            position: i + 1,
            ambient: rank + k + 1,
        })
        .collect();
    CofaceWord { source: rank, faces }
}

/// `φ = mono ∘ epi` with `epi` surjective onto `[1]^{image.rank}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Factorization {
    pub epi: CubeMorphism,
    pub mono: CofaceWord,
    pub image: Interval,
}

pub fn epi_mono_factorize(phi: &CubeMorphism) -> Result<Factorization> {
    let image = phi.image_interval()?;
    let free = image.free_mask();
    let coords = (0..phi.target()).filter(|&k| free >> k & 1 == 1).map(|k| phi.coords()[k].clone()).collect();
    let epi = CubeMorphism::new(phi.source(), coords)?;
    Ok(Factorization { epi, mono: interval_inclusion(&image), image })
}

/// The pair `(δ*(0), δ*(1))` for a surjection `[1]^m -> [1]` of full
/// support: the lexicographically greatest maximal zero, then the
/// lexicographically least minimal one above it.
fn split_factor(f: &MonotoneBoolFn) -> (u32, u32) {
    let m = f.arity();
    let top = full_mask(m);
    let zero = (0..=top)
        .filter(|&x| !f.eval(x) && (0..m).all(|i| x >> i & 1 == 1 || f.eval(x | 1 << i)))
        .max_by(|&a, &b| lex_cmp_bits(a, b, m))
        .expect("a non-constant function has a zero");
    let one = (0..=top)
        .filter(|&y| zero & !y == 0 && f.eval(y))
        .filter(|&y| (0..m).all(|i| y >> i & 1 == 0 || zero >> i & 1 == 1 || !f.eval(y & !(1 << i))))
        .min_by(|&a, &b| lex_cmp_bits(a, b, m))
        .expect("a non-constant function has a one above each zero");
    (zero, one)
}

/// A section `s` of a surjective ⊞-morphism, `π ∘ s = id`.
pub fn construct_section(pi: &CubeMorphism) -> Result<CubeMorphism> {
    pi.require_boxplus()?;
    if !pi.is_surjective() {
        return Err(Error::NotSurjective);
    }
    let d = decompose(pi)?;
    let n = pi.target();
    let m = pi.source();
    // section of the product, coordinate by coordinate of [1]^m
    let mut coords = Vec::with_capacity(m);
    for (i, f) in d.factors.iter().enumerate() {
        let (zero, one) = split_factor(f);
        for j in 0..f.arity() {
            let c = match (zero >> j & 1, one >> j & 1) {
                (0, 0) => MonotoneBoolFn::constant(n, false),
                (1, 1) => MonotoneBoolFn::constant(n, true),
                _ => MonotoneBoolFn::var(n, i + 1)?,
            };
            coords.push(c);
        }
    }
    coords.extend((0..d.dropped).map(|_| MonotoneBoolFn::constant(n, false)));
    let product_section = CubeMorphism::new(n, coords)?;
    compose(&CubeMorphism::from_permutation(&d.g), &product_section)
}

/// Every ⊞-section of `π`, by exhaustive search.
pub fn sections_of(pi: &CubeMorphism) -> Result<Vec<CubeMorphism>> {
    if pi.target() > ENUM_BOUND {
        return Err(Error::ArityTooLarge { arity: pi.target(), bound: ENUM_BOUND });
    }
    if !pi.is_surjective() {
        return Err(Error::NotSurjective);
    }
    let id = CubeMorphism::identity(pi.target());
    let mut out = Vec::new();
    for s in enumerate_hom(pi.target(), pi.source(), VariantTag::Boxplus)? {
        if compose(pi, &s)? == id {
            out.push(s);
        }
    }
    Ok(out)
}

/// `(project coordinate) ∘ φ ∘ (evaluate pre)` is the reversal of `[1]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReversalWitness {
    pub pre: CofaceWord,
    pub coordinate: usize,
}

impl ReversalWitness {
    /// Table of the witnessed composite `[1] -> [1]`.
    pub fn composite(&self, phi: &RawMap) -> Result<RawMap> {
        let pre = self.pre.evaluate().to_raw();
        let proj = RawMap::from_fn(phi.target(), 1, |y| y >> (self.coordinate - 1) & 1)?;
        proj.after(&phi.after(&pre)?)
    }
}

pub fn extract_reversal(phi: &RawMap) -> Result<ReversalWitness> {
    let (coordinate, x, y) = phi.monotonicity_witness().ok_or(Error::IsMonotone)?;
    let edge = make_interval(Point::new(phi.source(), x), Point::new(phi.source(), y))?;
    let w = ReversalWitness { pre: interval_inclusion(&edge), coordinate };
    debug_assert_eq!(w.composite(phi).map(|r| r.table().to_vec()), Ok(vec![1, 0]));
    Ok(w)
}

/// `(codegeneracies) ∘ retraction ∘ φ ∘ (evaluate pre)` is the diagonal
/// `[1] -> [1]^2`. Codegeneracies are `(position, ambient)` pairs applied
/// in order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DiagonalWitness {
    pub pre: CofaceWord,
    pub retraction: CubeMorphism,
    pub codegeneracies: Vec<(usize, usize)>,
}

impl DiagonalWitness {
    pub fn composite(&self, phi: &CubeMorphism) -> Result<CubeMorphism> {
        let mut acc = compose(&self.retraction, &compose(phi, &self.pre.evaluate())?)?;
        for &(p, a) in &self.codegeneracies {
            let sigma = named_generator(GeneratorKind::Sigma, p, a)?.to_morphism()?;
            acc = compose(&sigma, &acc)?;
        }
        Ok(acc)
    }
}

pub fn extract_diagonal(phi: &CubeMorphism) -> Result<DiagonalWitness> {
    let m = phi.source();
    for x in 0..1u32 << m {
        for i in 0..m {
            if x >> i & 1 == 1 {
                continue;
            }
            let y = x | 1 << i;
            let diff = phi.eval(x) ^ phi.eval(y);
            if diff.count_ones() < 2 {
                continue;
            }
            let edge = make_interval(Point::new(m, x), Point::new(m, y))?;
            let vars: Vec<usize> = (0..phi.target()).filter(|&k| diff >> k & 1 == 1).map(|k| k + 1).collect();
            let retraction = CubeMorphism::projection(phi.target(), &vars)?;
            let codegeneracies = (3..=vars.len()).rev().map(|a| (a, a)).collect();
            let w = DiagonalWitness { pre: interval_inclusion(&edge), retraction, codegeneracies };
            debug_assert_eq!(
                w.composite(phi).ok(),
                named_generator(GeneratorKind::Diag, 1, 1).ok().and_then(|d| d.to_morphism().ok())
            );
            return Ok(w);
        }
    }
    Err(Error::PreservesOneDimIntervals)
}

/// A map as its truth table, the working representation of [`saturate`].
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
struct Table {
    m: usize,
    n: usize,
    values: Vec<u32>,
}

impl Table {
    fn of(f: &CubeMorphism) -> Self {
        Table { m: f.source(), n: f.target(), values: f.to_raw().table().to_vec() }
    }

    fn identity(n: usize) -> Self {
        Table { m: n, n, values: (0..1u32 << n).collect() }
    }

    /// `self ∘ inner`.
    fn after(&self, inner: &Table) -> Table {
        Table { m: inner.m, n: self.n, values: inner.values.iter().map(|&y| self.values[y as usize]).collect() }
    }

    fn tensor(&self, other: &Table) -> Table {
        let mut values = Vec::with_capacity(self.values.len() * other.values.len());
        for &b in &other.values {
            for &a in &self.values {
                values.push(a | b << self.n);
            }
        }
        Table { m: self.m + other.m, n: self.n + other.n, values }
    }
}

/// Hom-sets of the smallest subcategory containing the generators,
/// identities and closed under composition and tensor, truncated at
/// `maxdim`.
#[derive(Clone, Debug)]
pub struct Saturation {
    pub maxdim: usize,
    pub homs: BTreeMap<(usize, usize), Vec<CubeMorphism>>,
}

impl Saturation {
    pub fn hom(&self, m: usize, n: usize) -> &[CubeMorphism] {
        self.homs.get(&(m, n)).map_or(&[], Vec::as_slice)
    }

    pub fn contains(&self, f: &CubeMorphism) -> bool {
        self.hom(f.source(), f.target()).binary_search(f).is_ok()
    }

    pub fn total(&self) -> usize {
        self.homs.values().map(Vec::len).sum()
    }
}

pub fn saturate(generators: &[CubeMorphism], maxdim: usize) -> Result<Saturation> {
    if let Some(g) = generators.iter().find(|g| g.source() > maxdim || g.target() > maxdim) {
        return Err(Error::ArityTooLarge { arity: g.source().max(g.target()), bound: maxdim });
    }
    if maxdim > ENUM_BOUND {
        return Err(Error::ArityTooLarge { arity: maxdim, bound: ENUM_BOUND });
    }
    let mut seen: HashSet<Table> = HashSet::new();
    let mut by_source: Vec<Vec<Table>> = vec![Vec::new(); maxdim + 1];
    let mut by_target: Vec<Vec<Table>> = vec![Vec::new(); maxdim + 1];
    let mut all: Vec<Table> = Vec::new();
    let mut queue: VecDeque<Table> = VecDeque::new();
    let seeds = (0..=maxdim).map(Table::identity).chain(generators.iter().map(Table::of));
    for t in seeds {
        if seen.insert(t.clone()) {
            queue.push_back(t);
        }
    }
    // Each element is combined with everything already processed when it is
    // dequeued, so every pair is visited once.
    while let Some(f) = queue.pop_front() {
        by_source[f.m].push(f.clone());
        by_target[f.n].push(f.clone());
        all.push(f.clone());
        let mut fresh = Vec::new();
        for g in &by_source[f.n] {
            fresh.push(g.after(&f));
        }
        for g in &by_target[f.m] {
            fresh.push(f.after(g));
        }
        for g in &all {
            if f.m + g.m <= maxdim && f.n + g.n <= maxdim {
                fresh.push(f.tensor(g));
                fresh.push(g.tensor(&f));
            }
        }
        for t in fresh {
            if !seen.contains(&t) {
                seen.insert(t.clone());
                queue.push_back(t);
            }
        }
    }
    let mut homs: BTreeMap<(usize, usize), Vec<CubeMorphism>> = BTreeMap::new();
    for m in 0..=maxdim {
        for n in 0..=maxdim {
            homs.insert((m, n), Vec::new());
        }
    }
    for t in all {
        let f = from_table(&RawMap::new(t.m, t.n, t.values)?)?;
        homs.get_mut(&(f.source(), f.target())).expect("within maxdim").push(f);
    }
    for v in homs.values_mut() {
        v.sort();
    }
    Ok(Saturation { maxdim, homs })
}

/// The basic maps of the named generators, as monotone morphisms.
pub fn generator_set(kinds: &[GeneratorKind]) -> Result<Vec<CubeMorphism>> {
    kinds.iter().map(|k| k.base().to_morphism()).collect()
}

/// `σ`, `δ₋`, `δ₊`.
pub const DELTA1: [GeneratorKind; 3] = [GeneratorKind::Sigma, GeneratorKind::DeltaMinus, GeneratorKind::DeltaPlus];

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq)]
pub struct CheckResult {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<Value>,
}

impl CheckResult {
    fn new(name: &str) -> Self {
        CheckResult { name: name.to_string(), cases: 0, failures: Vec::new() }
    }

    fn fail(&mut self, witness: Value) {
        // keep reports bounded
        if self.failures.len() < 20 {
            self.failures.push(witness);
        } else if self.failures.len() == 20 {
            self.failures.push(json!("further failures omitted"));
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Line-oriented report of a batch of checks.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Report {
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| json!({ "check": c.name, "passed": c.passed(), "cases": c.cases, "failures": c.failures }))
            .collect();
        json!({ "passed": self.passed(), "checks": checks })
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            if c.passed() {
                writeln!(f, "PASS {} ({} cases)", c.name, c.cases)?;
            } else {
                writeln!(f, "FAIL {} ({} cases)", c.name, c.cases)?;
                for w in &c.failures {
                    writeln!(f, "  {w}")?;
                }
            }
        }
        Ok(())
    }
}

fn permutation_morphisms(n: usize) -> Vec<(Permutation, CubeMorphism)> {
    Permutation::all(n).into_iter().map(|g| {
        let f = CubeMorphism::from_permutation(&g);
        (g, f)
    }).collect()
}

/// Preimage table `μ⁻¹ ∘ φ` for an injective `μ` whose image contains the
/// image of `φ`.
fn pull_back(mu: &CubeMorphism, phi: &CubeMorphism) -> Option<RawMap> {
    let inverse: HashMap<u32, u32> = (0..1u32 << mu.source()).map(|z| (mu.eval(z), z)).collect();
    let table = (0..1u32 << phi.source()).map(|x| inverse.get(&phi.eval(x)).copied()).collect::<Option<Vec<_>>>()?;
    RawMap::new(phi.source(), mu.source(), table).ok()
}

/// Generalized Reedy and Eilenberg-Zilber checks over all ⊞-morphisms
/// between cubes of dimension at most `maxdim`.
pub fn verify_reedy_ez(maxdim: usize) -> Result<Report> {
    if maxdim > 3 {
        return Err(Error::ArityTooLarge { arity: maxdim, bound: 3 });
    }
    let mut homs: BTreeMap<(usize, usize), Vec<CubeMorphism>> = BTreeMap::new();
    for m in 0..=maxdim {
        for n in 0..=maxdim {
            homs.insert((m, n), enumerate_hom(m, n, VariantTag::Boxplus)?);
        }
    }
    let perms: Vec<Vec<(Permutation, CubeMorphism)>> = (0..=maxdim).map(permutation_morphisms).collect();
    let mut factor = CheckResult::new("factorization");
    let mut unique = CheckResult::new("factorization-unique");
    let mut bij = CheckResult::new("bijections-are-permutations");
    let mut degree = CheckResult::new("degrees");
    let mut rigid = CheckResult::new("automorphism-rigidity");
    let mut split = CheckResult::new("surjections-split");
    let mut determined = CheckResult::new("section-determinacy");

    // injective ⊞-maps grouped by image
    let mut monos: HashMap<(usize, usize, u32, u32), Vec<CubeMorphism>> = HashMap::new();
    for ((k, n), fs) in &homs {
        for f in fs.iter().filter(|f| f.is_injective()) {
            let (lo, hi) = f.extrema();
            monos.entry((*k, *n, lo, hi)).or_default().push(f.clone());
        }
    }

    for ((m, n), fs) in &homs {
        for phi in fs {
            factor.cases += 1;
            let fact = match epi_mono_factorize(phi) {
                Ok(f) => f,
                Err(e) => {
                    factor.fail(json!({ "morphism": morphism_to_json(phi), "error": e.to_string() }));
                    continue;
                }
            };
            let mono = fact.mono.evaluate();
            let ok = fact.epi.is_surjective()
                && fact.epi.is_interval_preserving()
                && mono.is_injective()
                && compose(&mono, &fact.epi)? == *phi
                && fact.mono.image() == fact.image;
            if !ok {
                factor.fail(json!({ "morphism": morphism_to_json(phi) }));
                continue;
            }
            // every other factorization through the same middle object
            unique.cases += 1;
            let k = fact.image.rank();
            let key = (k, *n, fact.image.lo().bits(), fact.image.hi().bits());
            for mu in monos.get(&key).map_or(&[][..], Vec::as_slice) {
                let Some(raw) = pull_back(mu, phi) else {
                    unique.fail(json!({ "morphism": morphism_to_json(phi), "mono": morphism_to_json(mu) }));
                    continue;
                };
                let epi = from_table(&raw)?;
                if !(epi.is_interval_preserving() && epi.is_surjective()) {
                    unique.fail(json!({ "morphism": morphism_to_json(phi), "mono": morphism_to_json(mu) }));
                    continue;
                }
                let related = perms[k].iter().any(|(_, h)| {
                    compose(h, &epi).ok().as_ref() == Some(&fact.epi)
                        && compose(&mono, h).ok().as_ref() == Some(mu)
                });
                if !related {
                    unique.fail(json!({ "morphism": morphism_to_json(phi), "mono": morphism_to_json(mu) }));
                }
            }
            let surj = phi.is_surjective();
            let inj = phi.is_injective();
            degree.cases += 1;
            if (surj && m < n) || (inj && m > n) {
                degree.fail(json!({ "morphism": morphism_to_json(phi) }));
            }
            if surj && inj {
                bij.cases += 1;
                if !perms[*n].iter().any(|(_, h)| h == phi) {
                    bij.fail(json!({ "morphism": morphism_to_json(phi) }));
                }
            }
            if surj {
                rigid.cases += 1;
                for (g, h) in &perms[*n] {
                    if !g.is_identity() && compose(h, phi)? == *phi {
                        rigid.fail(json!({ "morphism": morphism_to_json(phi), "permutation": g.images() }));
                    }
                }
                split.cases += 1;
                match construct_section(phi) {
                    Ok(s) => {
                        let sections = sections_of(phi)?;
                        let ok = compose(phi, &s)? == CubeMorphism::identity(*n)
                            && s.is_interval_preserving()
                            && s.is_injective()
                            && sections.contains(&s);
                        if !ok {
                            split.fail(json!({ "morphism": morphism_to_json(phi), "section": morphism_to_json(&s) }));
                        }
                    }
                    Err(e) => split.fail(json!({ "morphism": morphism_to_json(phi), "error": e.to_string() })),
                }
            }
        }
        // surjections with the same section images agree up to a
        // permutation of the target
        if m >= n {
            let mut groups: BTreeMap<Vec<(u32, u32)>, Vec<&CubeMorphism>> = BTreeMap::new();
            for phi in fs.iter().filter(|f| f.is_surjective()) {
                let mut images: Vec<(u32, u32)> = sections_of(phi)?.iter().map(CubeMorphism::extrema).collect();
                images.sort_unstable();
                groups.entry(images).or_default().push(phi);
            }
            for group in groups.values() {
                determined.cases += group.len();
                for (a, b) in group.iter().tuple_combinations() {
                    if !perms[*n].iter().any(|(_, h)| compose(h, a).ok().as_ref() == Some(*b)) {
                        determined.fail(json!({ "first": morphism_to_json(a), "second": morphism_to_json(b) }));
                    }
                }
            }
        }
    }
    Ok(Report { checks: vec![factor, unique, bij, degree, rigid, split, determined] })
}

/// Whether a monotone map factors as a monotone surjection followed by a
/// monotone injection, by brute force over the injections.
pub fn factors_through_image(phi: &CubeMorphism) -> Result<bool> {
    let mut image: Vec<u32> = (0..1u32 << phi.source()).map(|x| phi.eval(x)).collect();
    image.sort_unstable();
    image.dedup();
    if !image.len().is_power_of_two() {
        return Ok(false);
    }
    let k = image.len().trailing_zeros() as usize;
    for mu in enumerate_hom(k, phi.target(), VariantTag::Monotone)? {
        let mut img: Vec<u32> = (0..1u32 << k).map(|z| mu.eval(z)).collect();
        img.sort_unstable();
        if img != image || !mu.is_injective() {
            continue;
        }
        if pull_back(&mu, phi).is_some_and(|r| r.is_monotone()) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Runs the factorization check over a family of monotone maps, reporting
/// every map that does not factor as surjection then injection.
pub fn check_monotone_factorization<'a>(
    name: &str,
    maps: impl IntoIterator<Item = &'a CubeMorphism>,
) -> Result<CheckResult> {
    let mut c = CheckResult::new(name);
    for phi in maps {
        c.cases += 1;
        if !factors_through_image(phi)? {
            c.failures.push(morphism_to_json(phi));
        }
    }
    Ok(c)
}

/// With diagonals present, the factorization axiom must fail: over all
/// monotone maps between cubes of dimension at most 2, the failures have
/// to include `(x, y) ↦ (x ∧ y, x ∨ y)`.
pub fn verify_negative_control() -> Result<Report> {
    let mut maps = Vec::new();
    for m in 0..=2 {
        for n in 0..=2 {
            maps.extend(enumerate_hom(m, n, VariantTag::Monotone)?);
        }
    }
    let scan = check_monotone_factorization("monotone-factorization", &maps)?;
    let target = GeneratorKind::GammaMinus.base().to_morphism()?;
    let target = compose(
        &target.tensor(&GeneratorKind::GammaPlus.base().to_morphism()?),
        &CubeMorphism::projection(2, &[1, 2, 1, 2])?,
    )?;
    let mut c = CheckResult::new("negative-control");
    c.cases = scan.cases;
    if !scan.failures.contains(&morphism_to_json(&target)) {
        c.fail(json!({ "expected failure not reported": morphism_to_json(&target) }));
    }
    Ok(Report { checks: vec![c] })
}

/// Saturations claimed to coincide with the closed-form variants.
pub fn verify_corollaries(maxdim: usize) -> Result<Report> {
    use GeneratorKind::*;
    let cases: [(&str, Vec<GeneratorKind>, VariantTag); 4] = [
        ("meet-variant", vec![Sigma, DeltaMinus, DeltaPlus, Tau, GammaMinus], VariantTag::MeetVariant),
        ("join-variant", vec![Sigma, DeltaMinus, DeltaPlus, Tau, GammaPlus], VariantTag::JoinVariant),
        ("lattice-variant", vec![Sigma, DeltaMinus, DeltaPlus, Tau], VariantTag::LatticeVariant),
        ("delta1-star", DELTA1.to_vec(), VariantTag::Delta1Star),
    ];
    let mut report = Report::default();
    for (name, kinds, tag) in cases {
        let sat = saturate(&generator_set(&kinds)?, maxdim)?;
        let mut c = CheckResult::new(name);
        for m in 0..=maxdim {
            for n in 0..=maxdim {
                c.cases += 1;
                let expected = enumerate_hom(m, n, tag)?;
                if sat.hom(m, n) != expected.as_slice() {
                    c.fail(json!({ "m": m, "n": n, "saturated": sat.hom(m, n).len(), "predicate": expected.len() }));
                }
            }
        }
        report.checks.push(c);
    }
    Ok(report)
}

/// Generators for ⊞ within `maxdim`: `σ`, `δ±`, `τ` and every monotone
/// surjection onto `[1]`.
pub fn boxplus_generators(maxdim: usize) -> Result<Vec<CubeMorphism>> {
    let mut gens = generator_set(&[GeneratorKind::Sigma, GeneratorKind::DeltaMinus, GeneratorKind::DeltaPlus, GeneratorKind::Tau])?;
    for m in 0..=maxdim {
        gens.extend(enumerate_hom(m, 1, VariantTag::Monotone)?.into_iter().filter(CubeMorphism::is_surjective));
    }
    Ok(gens)
}

/// Every ⊞-morphism within `maxdim` is generated by [`boxplus_generators`].
pub fn verify_generation(maxdim: usize) -> Result<Report> {
    let sat = saturate(&boxplus_generators(maxdim)?, maxdim)?;
    let mut c = CheckResult::new("generation");
    for m in 0..=maxdim {
        for n in 0..=maxdim {
            for f in enumerate_hom(m, n, VariantTag::Boxplus)? {
                c.cases += 1;
                if !sat.contains(&f) {
                    c.fail(morphism_to_json(&f));
                }
            }
            // and nothing outside ⊞ is generated
            for f in sat.hom(m, n) {
                if !f.is_interval_preserving() {
                    c.fail(json!({ "outside": morphism_to_json(f) }));
                }
            }
        }
    }
    Ok(Report { checks: vec![c] })
}
