//! Integer simplicial homology through Smith normal form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed, ToPrimitive};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

/// Dense integer matrix, row-major.
pub type Matrix = Vec<Vec<i64>>;

/// Boundary maps `∂_d : C_d -> C_{d-1}` for `d >= 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    /// Number of `d`-simplices, `d = 0..=dim`.
    pub ranks: Vec<usize>,
    /// `boundaries[d - 1]` is `∂_d`, with `ranks[d-1]` rows and `ranks[d]`
    /// columns.
    pub boundaries: Vec<Matrix>,
}

impl ChainComplex {
    pub fn boundary(&self, d: usize) -> Option<&Matrix> {
        d.checked_sub(1).and_then(|i| self.boundaries.get(i))
    }

    /// Whether `∂_{d-1} ∂_d = 0` for all `d`.
    pub fn squares_to_zero(&self) -> bool {
        self.boundaries.windows(2).all(|w| {
            let (lower, upper) = (&w[0], &w[1]);
            lower.iter().all(|row| {
                (0..upper.first().map_or(0, Vec::len)).all(|j| {
                    row.iter().zip(upper).map(|(&a, urow)| a * urow[j]).sum::<i64>() == 0
                })
            })
        })
    }
}

/// Alternating-sign boundary matrices over the lexicographic simplex order.
pub fn boundary_matrices(s: &SimplicialComplex) -> Result<ChainComplex> {
    let graded = s.graded();
    let ranks: Vec<usize> = graded.iter().map(Vec::len).collect();
    let mut boundaries = Vec::new();
    for d in 1..graded.len() {
        let lower = &graded[d - 1];
        let mut m = vec![vec![0i64; graded[d].len()]; lower.len()];
        for (j, simplex) in graded[d].iter().enumerate() {
            for skip in 0..simplex.len() {
                let mut face = simplex.clone();
                face.remove(skip);
                let i = lower.binary_search(&face).map_err(|_| Error::NotFaceClosed { simplex: simplex.clone() })?;
                m[i][j] = if skip % 2 == 0 { 1 } else { -1 };
            }
        }
        boundaries.push(m);
    }
    let c = ChainComplex { ranks, boundaries };
    debug_assert!(c.squares_to_zero());
    Ok(c)
}

/// Nonzero diagonal of the Smith normal form, `d₁ | d₂ | …`, all positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub divisors: Vec<BigInt>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.divisors.len()
    }
}

trait SnfInt: Clone + Integer + Signed + CheckedAdd + CheckedSub + CheckedMul {}
impl<T: Clone + Integer + Signed + CheckedAdd + CheckedSub + CheckedMul> SnfInt for T {}

/// `row_a -= q * row_b`, failing on overflow.
fn sub_multiple<T: SnfInt>(a: &mut [T], b: &[T], q: &T) -> Option<()> {
    for (x, y) in a.iter_mut().zip(b) {
        if !y.is_zero() {
            *x = x.checked_sub(&q.checked_mul(y)?)?;
        }
    }
    Some(())
}

/// Diagonalizes in place; `None` signals overflow.
fn snf_generic<T: SnfInt>(mut m: Vec<Vec<T>>) -> Option<Vec<T>> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // pivot: smallest nonzero absolute value in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in m.iter().enumerate().skip(t) {
            for (j, x) in row.iter().enumerate().skip(t) {
                if !x.is_zero() && best.map_or(true, |(bi, bj)| x.abs() < m[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut changed = false;
            // clear column t
            for i in t + 1..rows {
                if m[i][t].is_zero() {
                    continue;
                }
                let q = m[i][t].div_floor(&m[t][t]);
                let pivot_row = m[t].clone();
                sub_multiple(&mut m[i], &pivot_row, &q)?;
                if !m[i][t].is_zero() {
                    m.swap(t, i);
                    changed = true;
                }
            }
            // clear row t
            for j in t + 1..cols {
                if m[t][j].is_zero() {
                    continue;
                }
                let q = m[t][j].div_floor(&m[t][t]);
                for row in m.iter_mut() {
                    if !row[t].is_zero() {
                        row[j] = row[j].checked_sub(&q.checked_mul(&row[t])?)?;
                    }
                }
                if !m[t][j].is_zero() {
                    for row in m.iter_mut() {
                        row.swap(t, j);
                    }
                    changed = true;
                }
            }
            if changed {
                continue;
            }
            // the pivot must divide the rest of the block
            let p = m[t][t].clone();
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !m[i][j].is_multiple_of(&p)));
            match bad {
                Some(i) => {
                    let src = m[i].clone();
                    for (x, y) in m[t].iter_mut().zip(&src) {
                        *x = x.checked_add(y)?;
                    }
                }
                None => break,
            }
        }
        diag.push(m[t][t].abs());
        t += 1;
    }
    Some(diag)
}

/// Smith normal form with machine integers, falling back to arbitrary
/// precision if an intermediate value overflows.
pub fn smith_normal_form(m: &Matrix) -> SmithForm {
    let divisors = match snf_generic(m.clone()) {
        Some(d) => d.into_iter().map(BigInt::from).collect(),
        None => smith_normal_form_big(m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()).divisors,
    };
    SmithForm { divisors }
}

pub fn smith_normal_form_big(m: Vec<Vec<BigInt>>) -> SmithForm {
    SmithForm { divisors: snf_generic(m).expect("arbitrary precision does not overflow") }
}

/// `H_d ≅ ℤ^betti ⊕ ⨁ ℤ/tᵢ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyGroup {
    pub degree: usize,
    pub betti: usize,
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn is_zero(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

pub fn homology(c: &ChainComplex) -> Vec<HomologyGroup> {
    if c.ranks.is_empty() {
        return vec![HomologyGroup { degree: 0, betti: 0, torsion: vec![] }];
    }
    let forms: Vec<SmithForm> = c.boundaries.iter().map(smith_normal_form).collect();
    let rank = |d: usize| d.checked_sub(1).and_then(|i| forms.get(i)).map_or(0, SmithForm::rank);
    (0..c.ranks.len())
        .map(|d| {
            let torsion = forms
                .get(d)
                .map(|f| f.divisors.iter().filter(|x| !x.is_one()).cloned().collect())
                .unwrap_or_default();
            HomologyGroup { degree: d, betti: c.ranks[d] - rank(d) - rank(d + 1), torsion }
        })
        .collect()
}

pub fn simplicial_homology(s: &SimplicialComplex) -> Result<Vec<HomologyGroup>> {
    Ok(homology(&boundary_matrices(s)?))
}

/// Whether reduced homology vanishes in every degree.
pub fn is_acyclic(groups: &[HomologyGroup]) -> bool {
    groups.iter().all(|g| {
        let betti = if g.degree == 0 { g.betti.saturating_sub(1) } else { g.betti };
        betti == 0 && g.torsion.is_empty()
    }) && groups.first().is_some_and(|g| g.betti >= 1)
}

/// Reduced Betti number in degree `d`.
pub fn reduced_betti(groups: &[HomologyGroup], d: usize) -> usize {
    groups.get(d).map_or(0, |g| if d == 0 { g.betti.saturating_sub(1) } else { g.betti })
}

/// Torsion coefficients as machine integers where they fit.
pub fn torsion_u64(g: &HomologyGroup) -> Vec<Option<u64>> {
    g.torsion.iter().map(ToPrimitive::to_u64).collect()
}
