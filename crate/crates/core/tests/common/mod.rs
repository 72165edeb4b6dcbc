//! Brute-force reference implementations shared by the integration tests.
//! Nothing here calls the fast paths it is used to check.

#![allow(dead_code)]

use std::collections::BTreeSet;

use boxplus::morphism::{CubeMorphism, MonotoneBoolFn};
use boxplus::order::FinPoset;
use rand::seq::SliceRandom;
use rand::Rng;

/// Truth table of a map, indexed by source point.
pub fn table(f: &CubeMorphism) -> Vec<u32> {
    (0..1u32 << f.source()).map(|x| f.eval(x)).collect()
}

/// Whether a 0/1 table on `[1]^n` is monotone, checked on all comparable
/// pairs rather than just edges.
pub fn table_is_monotone(n: usize, t: &[bool]) -> bool {
    (0..1u32 << n).all(|x| (0..1u32 << n).all(|y| x & !y != 0 || !t[x as usize] || t[y as usize]))
}

/// Number of monotone functions `[1]^n -> [1]`, by scanning every truth
/// table.
pub fn dedekind_brute(n: usize) -> usize {
    let size = 1usize << n;
    (0u64..1u64 << size)
        .filter(|&bits| {
            let t: Vec<bool> = (0..size).map(|i| bits >> i & 1 == 1).collect();
            table_is_monotone(n, &t)
        })
        .count()
}

/// `ψ ∘ φ` by tables.
pub fn compose_tables(psi: &[u32], phi: &[u32]) -> Vec<u32> {
    phi.iter().map(|&y| psi[y as usize]).collect()
}

/// Interval preservation from the definition: for every `lo <= hi` the
/// image of `[lo, hi]` is exactly the set of points between the images
/// of the endpoints.
pub fn preserves_intervals(m: usize, n: usize, t: &[u32]) -> bool {
    for lo in 0..1u32 << m {
        for hi in 0..1u32 << m {
            if lo & !hi != 0 {
                continue;
            }
            let image: BTreeSet<u32> = (0..1u32 << m).filter(|&x| lo & !x == 0 && x & !hi == 0).map(|x| t[x as usize]).collect();
            let (a, b) = (t[lo as usize], t[hi as usize]);
            let between: BTreeSet<u32> = (0..1u32 << n).filter(|&y| a & !y == 0 && y & !b == 0).collect();
            if image != between {
                return false;
            }
        }
    }
    true
}

/// A uniformly random monotone function of arity `m <= 4`, drawn by
/// rejection from random truth tables when small, else by random
/// antichains.
pub fn random_monotone_fn(rng: &mut impl Rng, m: usize) -> MonotoneBoolFn {
    let pool: Vec<u32> = (0..1u32 << m).collect();
    let k = rng.gen_range(0..=pool.len().min(4));
    let terms: Vec<u32> = pool.choose_multiple(rng, k).copied().collect();
    MonotoneBoolFn::new(m, terms).unwrap()
}

/// A random monotone map; with `disjoint` the coordinates use disjoint
/// variable sets.
pub fn random_morphism(rng: &mut impl Rng, m: usize, n: usize, disjoint: bool) -> CubeMorphism {
    if !disjoint {
        return CubeMorphism::new(m, (0..n).map(|_| random_monotone_fn(rng, m)).collect()).unwrap();
    }
    let mut owner: Vec<usize> = (0..m).map(|_| rng.gen_range(0..=n)).collect();
    owner.shuffle(rng);
    let coords = (0..n)
        .map(|k| {
            let vars: Vec<u32> = (0..m as u32).filter(|&v| owner[v as usize] == k).collect();
            let k_terms = rng.gen_range(0..=3);
            let terms = (0..k_terms).map(|_| vars.iter().filter(|_| rng.gen_bool(0.5)).fold(0u32, |a, &v| a | 1 << v));
            MonotoneBoolFn::new(m, terms.collect::<Vec<_>>()).unwrap()
        })
        .collect();
    CubeMorphism::new(m, coords).unwrap()
}

/// Whether `[x, z]` in `p` is order-isomorphic to `[1]^k` for some `k`,
/// by trying every bijection from the cube.
pub fn interval_is_boolean_brute(p: &FinPoset, x: usize, z: usize) -> Option<usize> {
    if !p.leq(x, z) {
        return None;
    }
    let members: Vec<usize> = (0..p.len()).filter(|&y| p.leq(x, y) && p.leq(y, z)).collect();
    if !members.len().is_power_of_two() {
        return None;
    }
    let k = members.len().trailing_zeros() as usize;
    let mut perm: Vec<usize> = (0..members.len()).collect();
    loop {
        let iso = (0..members.len()).all(|a| {
            (0..members.len()).all(|b| (a & !b == 0) == p.leq(members[perm[a]], members[perm[b]]))
        });
        if iso {
            return Some(k);
        }
        if !next_permutation(&mut perm) {
            return None;
        }
    }
}

pub fn next_permutation(v: &mut [usize]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// The Boolean interval counts per rank, by brute-force isomorphism search.
pub fn boolean_counts_brute(p: &FinPoset) -> Vec<usize> {
    let mut counts = Vec::new();
    for x in 0..p.len() {
        for z in 0..p.len() {
            if let Some(k) = interval_is_boolean_brute(p, x, z) {
                if counts.len() <= k {
                    counts.resize(k + 1, 0);
                }
                counts[k] += 1;
            }
        }
    }
    counts
}

pub fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Product of chains with the given numbers of elements.
pub fn chain_product(lengths: &[usize]) -> FinPoset {
    lengths.iter().fold(FinPoset::chain(1), |acc, &l| acc.product(&FinPoset::chain(l)))
}

pub fn m3() -> FinPoset {
    let names = ["0", "a", "b", "c", "1"].iter().map(|s| s.to_string()).collect();
    FinPoset::from_relation(names, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)], true).unwrap()
}

pub fn n5() -> FinPoset {
    let names = ["0", "a", "b", "c", "1"].iter().map(|s| s.to_string()).collect();
    FinPoset::from_relation(names, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)], true).unwrap()
}
