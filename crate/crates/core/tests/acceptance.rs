//! Acceptance run: one PASS/FAIL line per criterion, each with a wall-clock
//! limit. Runs without the libtest harness so the lines always print.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use boxplus::complex::{
    boolean_complex, counit_vertex_map, induced_subdivision_map, is_nonpositively_curved, subdivide_representable,
};
use boxplus::homology::{is_acyclic, simplicial_homology};
use boxplus::morphism::{
    count_hom, enumerate_hom, monotone_functions, oracle_interval_check, MonotoneBoolFn, VariantTag,
};
use boxplus::normal_form::{
    decompose, normal_form_permutations, recompose, verify_corollaries, verify_generation, verify_negative_control,
    verify_reedy_ez,
};
use boxplus::operad::{enumerate_fdl, substitute, OperadElement};
use boxplus::order::FinPoset;
use common::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn monotone_counts() -> Outcome {
    let expected = [2usize, 3, 6, 20, 168];
    for (n, &e) in expected.iter().enumerate() {
        let fast = count_hom(n, 1, VariantTag::Monotone).map_err(|e| e.to_string())?;
        let brute = dedekind_brute(n);
        ensure(fast == e as u128 && brute == e, || format!("arity {n}: enumerated {fast}, scanned {brute}, want {e}"))?;
    }
    let five = monotone_functions(5).map_err(|e| e.to_string())?.len();
    ensure(five == 7581, || format!("arity 5: {five}"))?;
    Ok("2, 3, 6, 20, 168 and 7581".into())
}

fn oracle_equivalence() -> Outcome {
    let mut cases = 0;
    for m in 0..=3 {
        for n in 0..=3 {
            for f in enumerate_hom(m, n, VariantTag::Monotone).map_err(|e| e.to_string())? {
                cases += 1;
                let oracle = oracle_interval_check(&f).map_err(|e| e.to_string())?;
                ensure(f.is_interval_preserving() == oracle, || format!("disagree on {f}"))?;
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut positive = 0;
    for i in 0..600 {
        let n = rng.gen_range(1..=4);
        let f = random_morphism(&mut rng, 4, n, i % 2 == 0);
        let oracle = oracle_interval_check(&f).map_err(|e| e.to_string())?;
        let brute = preserves_intervals(4, n, &table(&f));
        ensure(f.is_interval_preserving() == oracle && oracle == brute, || format!("disagree on {f}"))?;
        positive += oracle as usize;
    }
    Ok(format!("{cases} exhaustive, 600 random at m=4 ({positive} interval-preserving)"))
}

fn decomposition_round_trip() -> Outcome {
    let mut cases = 0;
    let mut cosets = 0;
    for m in 0..=4 {
        for n in 0..=3 {
            for f in enumerate_hom(m, n, VariantTag::Boxplus).map_err(|e| e.to_string())? {
                cases += 1;
                let d = decompose(&f).map_err(|e| e.to_string())?;
                let back = recompose(&d).map_err(|e| e.to_string())?;
                ensure(table(&back) == table(&f), || format!("round trip fails on {f}"))?;
                ensure(d.factors.iter().all(|c| c.essential_support().len() == c.arity()), || format!("degenerate factor in {f}"))?;
                if m <= 3 {
                    cosets += 1;
                    let brute: BTreeSet<Vec<usize>> = normal_form_permutations(&f, &d.blocks)
                        .map_err(|e| e.to_string())?
                        .iter()
                        .map(|g| g.images())
                        .collect();
                    let coset: BTreeSet<Vec<usize>> = d.coset().iter().map(|g| g.images()).collect();
                    ensure(brute == coset, || format!("coset mismatch on {f}"))?;
                }
            }
        }
    }
    Ok(format!("{cases} round trips, {cosets} cosets"))
}

fn report_outcome(r: boxplus::Result<boxplus::normal_form::Report>) -> Outcome {
    let r = r.map_err(|e| e.to_string())?;
    let summary = r.checks.iter().map(|c| format!("{} {}", c.name, c.cases)).collect::<Vec<_>>().join(", ");
    if r.passed() {
        Ok(summary)
    } else {
        Err(r.to_string().lines().filter(|l| l.starts_with("FAIL")).collect::<Vec<_>>().join("; "))
    }
}

fn reedy() -> Outcome {
    let mut r = verify_reedy_ez(3).map_err(|e| e.to_string())?;
    r.extend(verify_negative_control().map_err(|e| e.to_string())?);
    report_outcome(Ok(r))
}

fn subdivision() -> Outcome {
    for n in 0..=3 {
        let c = subdivide_representable(n, 2).map_err(|e| e.to_string())?;
        let want: Vec<usize> = (0..=n).map(|d| binomial(n, d) * 3usize.pow(d as u32) * 4usize.pow((n - d) as u32)).collect();
        ensure(c.counts() == want, || format!("n={n}: counts {:?}, want {want:?}", c.counts()))?;
    }
    let counit = counit_vertex_map(2).map_err(|e| e.to_string())?;
    let homs = enumerate_hom(2, 2, VariantTag::Boxplus).map_err(|e| e.to_string())?;
    ensure(homs.len() == 22, || format!("{} maps in the square hom-set", homs.len()))?;
    for phi in &homs {
        let sd = induced_subdivision_map(phi, 2).map_err(|e| e.to_string())?;
        ensure(sd.is_valid(), || format!("induced map of {phi} is not a cube map"))?;
        for (v, &w) in sd.images.iter().enumerate() {
            ensure(counit[w].bits() == phi.eval(counit[v].bits()), || format!("counit not natural for {phi} at {v}"))?;
        }
    }
    Ok("cell counts for n <= 3, counit natural on 22 maps".into())
}

fn homology_checks() -> Outcome {
    for n in 0..=3 {
        let s = subdivide_representable(n, 2).map_err(|e| e.to_string())?.triangulate();
        let h = simplicial_homology(&s).map_err(|e| e.to_string())?;
        ensure(is_acyclic(&h), || format!("n={n}: {h:?}"))?;
    }
    let sphere = boolean_complex(&FinPoset::cube(3)).truncate(2).triangulate();
    let h = simplicial_homology(&sphere).map_err(|e| e.to_string())?;
    let betti: Vec<usize> = h.iter().map(|g| g.betti).collect();
    ensure(betti == [1, 0, 1] && h.iter().all(|g| g.torsion.is_empty()), || format!("boundary of the 3-cube: {h:?}"))?;
    Ok("subdivided cubes acyclic, cube boundary has H = Z, 0, Z".into())
}

fn flag_condition() -> Outcome {
    let mut passing: Vec<(String, FinPoset)> = (0..=3).map(|n| (format!("cube {n}"), FinPoset::cube(n))).collect();
    passing.push(("chain 4".into(), FinPoset::chain(4)));
    passing.push(("chain 5".into(), FinPoset::chain(5)));
    for a in 2..=4 {
        for b in 2..=a {
            passing.push((format!("chains {a}x{b}"), chain_product(&[a, b])));
            for c in 2..=b {
                passing.push((format!("chains {a}x{b}x{c}"), chain_product(&[a, b, c])));
            }
        }
    }
    for (name, p) in &passing {
        let w = is_nonpositively_curved(&boolean_complex(p));
        ensure(w.is_none(), || format!("{name} reported {w:?}"))?;
    }
    let hollow = FinPoset::cube(3).without(&[7]);
    let c = boolean_complex(&hollow);
    let w = is_nonpositively_curved(&c).ok_or("cube minus top passes the flag condition")?;
    ensure(w.vertex == 0 && w.edges.len() == 3, || format!("unexpected witness {w:?}"))?;
    Ok(format!("{} posets pass, cube minus top fails at the bottom", passing.len()))
}

fn operad_checks() -> Outcome {
    fn check(outer: &MonotoneBoolFn, inners: &[MonotoneBoolFn]) -> Result<(), String> {
        let inner_elems: Vec<OperadElement> = inners.iter().cloned().map(OperadElement::new).collect();
        let got = substitute(&OperadElement::new(outer.clone()), &inner_elems).map_err(|e| e.to_string())?;
        let mut offset = 0;
        let mut blocks = Vec::new();
        for f in inners {
            blocks.push((offset, f.arity()));
            offset += f.arity();
        }
        for x in 0..1u32 << offset {
            let y = blocks.iter().zip(inners).enumerate().fold(0u32, |acc, (i, (&(o, a), f))| {
                acc | (f.eval(x >> o & ((1 << a) - 1)) as u32) << i
            });
            ensure(got.value().eval(x) == outer.eval(y), || format!("{outer} with {inners:?} at {x}"))?;
        }
        Ok(())
    }
    let pool = |n: usize| monotone_functions(n).map(|s| s.to_vec()).map_err(|e| e.to_string());
    let mut exhaustive = 0;
    let small: Vec<MonotoneBoolFn> = (0..=2).map(pool).collect::<Result<Vec<_>, _>>()?.concat();
    for k in 0..=2 {
        for outer in pool(k)? {
            let lists: Vec<Vec<MonotoneBoolFn>> = match k {
                0 => vec![vec![]],
                1 => small.iter().map(|a| vec![a.clone()]).collect(),
                _ => small.iter().flat_map(|a| small.iter().map(move |b| vec![a.clone(), b.clone()])).collect(),
            };
            for inners in lists {
                check(&outer, &inners)?;
                exhaustive += 1;
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(0x0bad);
    for _ in 0..1000 {
        let k = rng.gen_range(0..=3);
        let outer = random_monotone_fn(&mut rng, k);
        let inners: Vec<MonotoneBoolFn> = (0..k).map(|_| {
            let a = rng.gen_range(0..=3);
            random_monotone_fn(&mut rng, a)
        }).collect();
        check(&outer, &inners)?;
    }
    for n in 0..=4 {
        let got = enumerate_fdl(n, false).map_err(|e| e.to_string())?.len();
        let want = dedekind_brute(n) - 2;
        ensure(got == want, || format!("free distributive lattice on {n}: {got}, want {want}"))?;
    }
    // composition sanity: substitution into the identity is the identity
    let id = OperadElement::generator(1, 1).map_err(|e| e.to_string())?;
    ensure(substitute(&id, &[id.clone()]).map_err(|e| e.to_string())? == id, || "unit law".into())?;
    Ok(format!("{exhaustive} exhaustive, 1000 random, lattice sizes 0, 1, 4, 18, 166"))
}

fn main() -> ExitCode {
    let criteria: Vec<(&str, Duration, fn() -> Outcome)> = vec![
        ("monotone function counts", Duration::from_secs(10), monotone_counts),
        ("interval test agrees with oracle", Duration::from_secs(120), oracle_equivalence),
        ("tensor normal form round trip", Duration::from_secs(120), decomposition_round_trip),
        ("variant subcategory equalities", Duration::from_secs(60), || report_outcome(verify_corollaries(3))),
        ("generation by named maps", Duration::from_secs(60), || report_outcome(verify_generation(3))),
        ("Reedy and Eilenberg-Zilber checks", Duration::from_secs(120), reedy),
        ("subdivision counts and counit", Duration::from_secs(30), subdivision),
        ("homology of subdivisions and sphere", Duration::from_secs(60), homology_checks),
        ("flag condition on links", Duration::from_secs(30), flag_condition),
        ("operad substitution and lattice sizes", Duration::from_secs(60), operad_checks),
    ];
    let mut failed = 0;
    for (i, (name, limit, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let line = match result {
            Ok(detail) if elapsed <= limit => format!("PASS {:>2} {name}: {detail}", i + 1),
            Ok(_) => format!("FAIL {:>2} {name}: exceeded limit", i + 1),
            Err(why) => format!("FAIL {:>2} {name}: {why}", i + 1),
        };
        if line.starts_with("FAIL") {
            failed += 1;
        }
        println!("{line} [{:.2}s / {}s]", elapsed.as_secs_f64(), limit.as_secs());
    }
    println!("acceptance: {} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
