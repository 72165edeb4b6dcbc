//! Boolean complexes of finite posets, their subdivisions and
//! triangulations, and the curvature checks.

use std::collections::{BTreeSet, HashMap};

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::morphism::{from_table, CubeMorphism, RawMap, VariantTag};
use crate::normal_form::Sign;
use crate::order::{
    boolean_intervals, boolean_structure, function_poset, BooleanInterval, BooleanStructure, FinPoset,
    FunctionPoset, Point,
};

/// A codimension-one face of a cell: freeze atom `direction` (1-based,
/// atoms ordered by element id) at the `lo` side (`-`) or `hi` side (`+`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Facet {
    pub facet: usize,
    pub direction: usize,
    pub sign: Sign,
}

/// The cells of `□[P]`: Boolean intervals of a poset with face incidence.
#[derive(Clone, Debug)]
pub struct CubeComplex {
    base: FinPoset,
    cells: Vec<BooleanInterval>,
    structures: Vec<BooleanStructure>,
    incidence: Vec<Vec<Facet>>,
    index: HashMap<(usize, usize), usize>,
}

impl CubeComplex {
    pub fn boolean_complex(p: &FinPoset) -> Self {
        CubeComplex::build(p.clone(), boolean_intervals(p))
    }

    /// The subcomplex on the listed `(lo, hi)` pairs, which must be Boolean
    /// intervals closed under taking facets.
    pub fn from_cells(p: &FinPoset, listed: &[(usize, usize)]) -> Result<Self> {
        let mut cells = Vec::with_capacity(listed.len());
        for &(lo, hi) in listed {
            if lo >= p.len() || hi >= p.len() {
                return Err(Error::InvalidPoset(format!("cell ({lo},{hi}) out of range")));
            }
            let s = boolean_structure(p, lo, hi).ok_or_else(|| {
                Error::InvalidPoset(format!("[{},{}] is not a Boolean interval", p.name(lo), p.name(hi)))
            })?;
            cells.push(BooleanInterval { lo, hi, rank: s.rank() });
        }
        cells.sort_by_key(|b| (b.rank, b.lo, b.hi));
        cells.dedup();
        let c = CubeComplex::build(p.clone(), cells);
        for (i, facets) in c.incidence.iter().enumerate() {
            if facets.iter().any(|f| f.facet == usize::MAX) {
                let cell = c.cells[i];
                return Err(Error::NotFaceClosed { simplex: vec![cell.lo, cell.hi] });
            }
        }
        Ok(c)
    }

    fn build(base: FinPoset, cells: Vec<BooleanInterval>) -> Self {
        let index: HashMap<(usize, usize), usize> =
            cells.iter().enumerate().map(|(i, b)| ((b.lo, b.hi), i)).collect();
        let structures: Vec<BooleanStructure> = cells
            .iter()
            .map(|b| boolean_structure(&base, b.lo, b.hi).expect("cells are Boolean"))
            .collect();
        let incidence = cells
            .iter()
            .zip(&structures)
            .map(|(b, s)| {
                let all = (1u32 << s.rank()) - 1;
                let lookup = |lo: usize, hi: usize| index.get(&(lo, hi)).copied().unwrap_or(usize::MAX);
                (0..s.rank())
                    .flat_map(|j| {
                        let minus = lookup(b.lo, s.members[(all & !(1 << j)) as usize]);
                        let plus = lookup(s.members[1 << j], b.hi);
                        [
                            Facet { facet: minus, direction: j + 1, sign: Sign::Minus },
                            Facet { facet: plus, direction: j + 1, sign: Sign::Plus },
                        ]
                    })
                    .collect()
            })
            .collect();
        CubeComplex { base, cells, structures, incidence, index }
    }

    pub fn base(&self) -> &FinPoset {
        &self.base
    }

    pub fn cells(&self) -> &[BooleanInterval] {
        &self.cells
    }

    pub fn incidence(&self) -> &[Vec<Facet>] {
        &self.incidence
    }

    pub fn structure(&self, cell: usize) -> &BooleanStructure {
        &self.structures[cell]
    }

    pub fn cell_index(&self, lo: usize, hi: usize) -> Option<usize> {
        self.index.get(&(lo, hi)).copied()
    }

    pub fn dimension(&self) -> Option<usize> {
        self.cells.iter().map(|b| b.rank).max()
    }

    /// Number of cells of each rank `0..=dimension`.
    pub fn counts(&self) -> Vec<usize> {
        let mut c = vec![0; self.dimension().map_or(0, |d| d + 1)];
        for b in &self.cells {
            c[b.rank] += 1;
        }
        c
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.cells.iter().map(|b| if b.rank % 2 == 0 { 1 } else { -1 }).sum()
    }

    /// Vertices as base element ids.
    pub fn vertices(&self) -> Vec<usize> {
        self.cells.iter().filter(|b| b.rank == 0).map(|b| b.lo).collect()
    }

    /// Cells of rank at most `d`.
    pub fn truncate(&self, d: usize) -> CubeComplex {
        let cells = self.cells.iter().copied().filter(|b| b.rank <= d).collect();
        CubeComplex::build(self.base.clone(), cells)
    }

    /// Chains of base elements lying in a single cell, closed under faces.
    pub fn triangulate(&self) -> SimplicialComplex {
        let mut simplices: BTreeSet<Vec<usize>> = BTreeSet::new();
        for s in &self.structures {
            let k = s.rank();
            let mut stack: Vec<Vec<u32>> = (0..1u32 << k).map(|m| vec![m]).collect();
            while let Some(chain) = stack.pop() {
                let last = *chain.last().expect("non-empty");
                for next in 0..1u32 << k {
                    if next != last && last & !next == 0 {
                        let mut c = chain.clone();
                        c.push(next);
                        stack.push(c);
                    }
                }
                let mut ids: Vec<usize> = chain.iter().map(|&m| s.members[m as usize]).collect();
                ids.sort_unstable();
                simplices.insert(ids);
            }
        }
        SimplicialComplex::from_closed(self.base.names().to_vec(), simplices.into_iter().collect())
    }
}

/// `□[P]`.
pub fn boolean_complex(p: &FinPoset) -> CubeComplex {
    CubeComplex::boolean_complex(p)
}

/// An abstract simplicial complex on named vertices, graded by dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    names: Vec<String>,
    graded: Vec<Vec<Vec<usize>>>,
}

impl SimplicialComplex {
    /// Validates that every simplex is strictly increasing and that all of
    /// its facets are present.
    pub fn new(names: Vec<String>, simplices: Vec<Vec<usize>>) -> Result<Self> {
        let set: BTreeSet<Vec<usize>> = simplices.iter().cloned().collect();
        for s in &set {
            if s.is_empty() || s.windows(2).any(|w| w[0] >= w[1]) || s.iter().any(|&v| v >= names.len()) {
                return Err(Error::Parse(format!("simplex {s:?} is not a strictly increasing vertex list")));
            }
            if s.len() > 1 {
                for skip in 0..s.len() {
                    let mut face = s.clone();
                    face.remove(skip);
                    if !set.contains(&face) {
                        return Err(Error::NotFaceClosed { simplex: s.clone() });
                    }
                }
            }
        }
        Ok(SimplicialComplex::from_closed(names, set.into_iter().collect()))
    }

    fn from_closed(names: Vec<String>, simplices: Vec<Vec<usize>>) -> Self {
        let top = simplices.iter().map(Vec::len).max().unwrap_or(0);
        let mut graded = vec![Vec::new(); top];
        for s in simplices {
            graded[s.len() - 1].push(s);
        }
        for g in &mut graded {
            g.sort();
        }
        SimplicialComplex { names, graded }
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.names
    }

    /// `graded()[d]` lists the `d`-simplices in lexicographic order.
    pub fn graded(&self) -> &[Vec<Vec<usize>>] {
        &self.graded
    }

    pub fn dimension(&self) -> Option<usize> {
        self.graded.len().checked_sub(1)
    }

    pub fn counts(&self) -> Vec<usize> {
        self.graded.iter().map(Vec::len).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.graded.iter().enumerate().map(|(d, s)| if d % 2 == 0 { s.len() as i64 } else { -(s.len() as i64) }).sum()
    }

    /// Same complex with vertex `v` renamed to `perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> Self {
        let mut names = vec![String::new(); self.names.len()];
        for (v, &w) in perm.iter().enumerate() {
            names[w] = self.names[v].clone();
        }
        let simplices = self
            .graded
            .iter()
            .flatten()
            .map(|s| s.iter().map(|&v| perm[v]).sorted().collect())
            .collect();
        SimplicialComplex::from_closed(names, simplices)
    }
}

/// Checks whether `images` (element `i` of `p` goes to `images[i]` of `q`)
/// induces a map of Boolean complexes in the given variant. Returns the
/// first offending Boolean interval of `p`, if any.
pub fn induces_map(
    p: &FinPoset,
    q: &FinPoset,
    images: &[usize],
    variant: VariantTag,
) -> Result<Option<BooleanInterval>> {
    if images.len() != p.len() {
        return Err(Error::ArityMismatch { expected: p.len(), found: images.len() });
    }
    if let Some(&bad) = images.iter().find(|&&y| y >= q.len()) {
        return Err(Error::IndexOutOfRange { index: bad, bound: q.len() });
    }
    for (x, y) in p.covers() {
        if !q.leq(images[x], images[y]) {
            return Err(Error::NotMonotone { coord: 1, lo: p.name(x).to_string(), hi: p.name(y).to_string() });
        }
    }
    if variant == VariantTag::None {
        return Err(Error::Parse("NONE does not name a variant of maps".into()));
    }
    for cell in boolean_intervals(p) {
        let s = boolean_structure(p, cell.lo, cell.hi).expect("listed interval is Boolean");
        let (lo, hi) = (images[cell.lo], images[cell.hi]);
        let Some(t) = boolean_structure(q, lo, hi) else {
            return Ok(Some(cell));
        };
        if variant == VariantTag::Monotone {
            continue;
        }
        // corestriction as a map of cubes
        let mut table = Vec::with_capacity(s.members.len());
        for &x in &s.members {
            match t.mask_of(images[x]) {
                Some(mask) => table.push(mask),
                None => return Ok(Some(cell)),
            }
        }
        let f = from_table(&RawMap::new(s.rank(), t.rank(), table)?)?;
        let ok = match variant {
            VariantTag::Boxplus => f.is_interval_preserving() && f.is_surjective(),
            tag => f.is_surjective() && tag.holds(&f),
        };
        if !ok {
            return Ok(Some(cell));
        }
    }
    Ok(None)
}

/// Largest `n` and `k` accepted by [`subdivide_representable`].
pub const SUBDIVISION_BOUND: (usize, usize) = (4, 3);

/// The poset `([1]^n)^{[k]}` underlying `sd_{k+1} □^n`.
pub fn subdivision_poset(n: usize, k: usize) -> Result<FunctionPoset> {
    if n > SUBDIVISION_BOUND.0 || k > SUBDIVISION_BOUND.1 {
        return Err(Error::SizeExceeded(format!(
            "subdivision of [1]^{n} with k = {k} exceeds n <= {}, k <= {}",
            SUBDIVISION_BOUND.0, SUBDIVISION_BOUND.1
        )));
    }
    Ok(function_poset(&FinPoset::cube(n), k))
}

/// `sd_{k+1} □^n = □[([1]^n)^{[k]}]`.
pub fn subdivide_representable(n: usize, k: usize) -> Result<CubeComplex> {
    Ok(boolean_complex(&subdivision_poset(n, k)?.poset))
}

/// The vertex part of the counit `sd₃ □^n -> □^n`: a chain
/// `f₀ <= f₁ <= f₂` goes to its middle entry.
pub fn counit_vertex_map(n: usize) -> Result<Vec<Point>> {
    let fp = subdivision_poset(n, 2)?;
    Ok(fp.chains.iter().map(|c| Point::new(n, c[1] as u32)).collect())
}

/// `φ^{[k]}: f ↦ φ ∘ f` between subdivision posets, with the result of
/// the ⊞ validity check.
#[derive(Clone, Debug)]
pub struct SubdivisionMap {
    pub source: FunctionPoset,
    pub target: FunctionPoset,
    pub images: Vec<usize>,
    pub offending: Option<BooleanInterval>,
}

impl SubdivisionMap {
    pub fn is_valid(&self) -> bool {
        self.offending.is_none()
    }
}

/// `φ^{[k]}` for any monotone `φ`, valid or not.
pub fn subdivision_map(phi: &CubeMorphism, k: usize) -> Result<SubdivisionMap> {
    let source = subdivision_poset(phi.source(), k)?;
    let target = subdivision_poset(phi.target(), k)?;
    let images = source
        .chains
        .iter()
        .map(|c| {
            let img: Vec<usize> = c.iter().map(|&x| phi.eval(x as u32) as usize).collect();
            target.index_of(&img).expect("monotone maps send chains to chains")
        })
        .collect::<Vec<_>>();
    let offending = induces_map(&source.poset, &target.poset, &images, VariantTag::Boxplus)?;
    Ok(SubdivisionMap { source, target, images, offending })
}

/// `φ^{[k]}` for a ⊞-morphism.
pub fn induced_subdivision_map(phi: &CubeMorphism, k: usize) -> Result<SubdivisionMap> {
    phi.image_interval()?;
    subdivision_map(phi, k)
}

/// A family `xs` and element `y` for which `sup(xᵢ ∧ y) = (sup xs) ∧ y`
/// fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistributivityWitness {
    pub xs: Vec<usize>,
    pub y: usize,
}

/// Checks binary meets, then distributivity of every existing supremum
/// over meets. Families are scanned as antichains, by size and then
/// lexicographically; larger families reduce to their maximal members.
pub fn is_distributive_meet_semilattice(p: &FinPoset) -> Result<Option<DistributivityWitness>> {
    let n = p.len();
    let mut meet = vec![vec![0usize; n]; n];
    for x in 0..n {
        for y in 0..n {
            meet[x][y] = p.meet(x, y).ok_or_else(|| Error::NotMeetSemilattice {
                x: p.name(x).to_string(),
                y: p.name(y).to_string(),
            })?;
        }
    }
    let mut antichains: Vec<Vec<usize>> = Vec::new();
    fn grow(p: &FinPoset, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        for z in start..p.len() {
            if cur.iter().all(|&c| !p.leq(c, z) && !p.leq(z, c)) {
                cur.push(z);
                if cur.len() >= 2 {
                    out.push(cur.clone());
                }
                grow(p, z + 1, cur, out);
                cur.pop();
            }
        }
    }
    grow(p, 0, &mut Vec::new(), &mut antichains);
    antichains.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    for xs in antichains {
        let Some(s) = p.supremum(&xs) else { continue };
        for y in 0..n {
            let parts: Vec<usize> = xs.iter().map(|&x| meet[x][y]).collect();
            if p.supremum(&parts) != Some(meet[s][y]) {
                return Ok(Some(DistributivityWitness { xs, y }));
            }
        }
    }
    Ok(None)
}

/// A set of edges at `vertex` that pairwise span squares but do not all
/// lie in one cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagWitness {
    pub vertex: usize,
    /// Edge cells of the complex, by cell index.
    pub edges: Vec<usize>,
}

/// Gromov's flag condition on every vertex link.
pub fn is_nonpositively_curved(c: &CubeComplex) -> Option<FlagWitness> {
    let mut links: HashMap<usize, BTreeSet<Vec<usize>>> = HashMap::new();
    for (i, cell) in c.cells().iter().enumerate() {
        if cell.rank == 0 {
            continue;
        }
        let s = c.structure(i);
        for (mask, &v) in s.members.iter().enumerate() {
            let mask = mask as u32;
            let mut edges: Vec<usize> = (0..s.rank())
                .map(|j| {
                    let other = s.members[(mask ^ (1 << j)) as usize];
                    let (lo, hi) = if mask >> j & 1 == 1 { (other, v) } else { (v, other) };
                    c.cell_index(lo, hi).expect("edges of a cell are cells")
                })
                .collect();
            edges.sort_unstable();
            links.entry(v).or_default().insert(edges);
        }
    }
    let mut vertices = c.vertices();
    vertices.sort_unstable();
    for v in vertices {
        let Some(simplices) = links.get(&v) else { continue };
        let points: Vec<usize> = simplices.iter().filter(|s| s.len() == 1).map(|s| s[0]).collect();
        let adjacent = |a: usize, b: usize| {
            let key = if a < b { vec![a, b] } else { vec![b, a] };
            simplices.contains(&key)
        };
        // grow cliques from simplices in lexicographic order
        let mut stack: Vec<Vec<usize>> = points.iter().rev().map(|&p| vec![p]).collect();
        while let Some(clique) = stack.pop() {
            if !simplices.contains(&clique) {
                return Some(FlagWitness { vertex: v, edges: clique });
            }
            let last = *clique.last().expect("non-empty");
            for &p in points.iter().rev().filter(|&&p| p > last) {
                if clique.iter().all(|&q| adjacent(q, p)) {
                    let mut next = clique.clone();
                    next.push(p);
                    stack.push(next);
                }
            }
        }
    }
    None
}
