//! Command-line front end. [`run`] is pure apart from reading input files
//! and writing `--out`, so it can be driven from tests.

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::complex::{
    boolean_complex, is_distributive_meet_semilattice, is_nonpositively_curved, subdivide_representable,
    CubeComplex,
};
use crate::error::{Error, Result};
use crate::homology::{reduced_betti, simplicial_homology};
use crate::json;
use crate::morphism::{
    classify_map, compose, count_hom, enumerate_hom, oracle_interval_check, CubeMap, CubeMorphism, GeneratorKind,
    VariantTag,
};
use crate::normal_form::{
    construct_section, decompose, epi_mono_factorize, generator_set, saturate, sections_of, verify_corollaries,
    verify_generation, verify_negative_control, verify_reedy_ez, CheckResult, Report,
};

#[derive(Parser, Debug)]
#[command(name = "boxplus", version, about = "Interval-preserving maps of Boolean lattices and Boolean complexes")]
struct Cli {
    /// Write the JSON result to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct MapArg {
    /// Morphism or raw-table JSON (file path or inline JSON).
    #[arg(long)]
    map: String,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Suite {
    Reedy,
    Corollaries,
    Generation,
    Oracle,
    All,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the variant tags a map carries.
    Classify(MapArg),
    /// Compose two morphisms, outer after inner.
    Compose {
        #[arg(long)]
        outer: String,
        #[arg(long)]
        inner: String,
    },
    /// Tensor normal form of a ⊞-morphism.
    Decompose(MapArg),
    /// Enumerate or count a hom-set.
    Homset {
        #[arg(short = 'm')]
        m: usize,
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, default_value = "BOXPLUS")]
        variant: String,
        #[arg(long)]
        count: bool,
    },
    /// A section of a surjective ⊞-morphism.
    Section {
        #[command(flatten)]
        map: MapArg,
        /// List every section instead of the canonical one.
        #[arg(long)]
        all: bool,
    },
    /// Epi-mono factorization of a ⊞-morphism.
    Factorize(MapArg),
    /// Close a set of generators under composition and tensor.
    Saturate {
        /// Named generator (sigma, delta-, delta+, gamma-, gamma+, tau, diag); repeatable.
        #[arg(long = "generator")]
        generators: Vec<String>,
        /// Additional generator given as morphism JSON; repeatable.
        #[arg(long = "generator-map")]
        generator_maps: Vec<String>,
        #[arg(long, default_value_t = 2)]
        maxdim: usize,
        #[arg(long)]
        count: bool,
    },
    /// The subdivision sd_{k+1} of the representable n-cube.
    Subdivide {
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
    /// The Boolean complex of a poset.
    Complex {
        #[arg(long)]
        poset: String,
    },
    /// Triangulate a Boolean complex.
    Triangulate {
        #[arg(long, conflicts_with = "poset", required_unless_present = "poset")]
        complex: Option<String>,
        #[arg(long)]
        poset: Option<String>,
        /// Keep only cells of rank at most this before triangulating.
        #[arg(long)]
        truncate: Option<usize>,
    },
    /// Integer homology of a simplicial complex, or of a triangulated complex.
    Homology {
        #[arg(long, conflicts_with_all = ["complex", "poset"])]
        simplicial: Option<String>,
        #[arg(long, conflicts_with = "poset")]
        complex: Option<String>,
        #[arg(long)]
        poset: Option<String>,
        #[arg(long)]
        truncate: Option<usize>,
    },
    /// Curvature and acyclicity verdicts for the Boolean complex of a poset.
    Cat0 {
        #[arg(long)]
        poset: String,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 3)]
        maxdim: usize,
    },
}

/// Exit status, stdout and stderr of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Domain(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

struct Ctx {
    log: Vec<String>,
}

impl Ctx {
    fn log(&mut self, msg: impl Into<String>) {
        self.log.push(msg.into());
    }
}

fn read_json(arg: &str) -> std::result::Result<Value, Failure> {
    let text = if arg.trim_start().starts_with(['{', '[']) {
        arg.to_string()
    } else {
        fs::read_to_string(arg).map_err(|e| Failure::Usage(format!("cannot read {arg}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| Failure::Domain(Error::Parse(format!("{arg}: {e}"))))
}

fn read_map(arg: &str) -> std::result::Result<CubeMap, Failure> {
    Ok(json::map_from_json(&read_json(arg)?)?)
}

fn read_morphism(arg: &str) -> std::result::Result<CubeMorphism, Failure> {
    Ok(read_map(arg)?.to_morphism()?)
}

fn read_complex(complex: Option<&str>, poset: Option<&str>) -> std::result::Result<CubeComplex, Failure> {
    match (complex, poset) {
        (Some(c), _) => Ok(json::complex_from_json(&read_json(c)?)?),
        (None, Some(p)) => Ok(boolean_complex(&json::poset_from_json(&read_json(p)?)?)),
        (None, None) => Err(Failure::Usage("one of --complex or --poset is required".into())),
    }
}

fn report_value(report: &Report) -> (Value, bool) {
    (report.to_json(), report.passed())
}

fn oracle_suite(maxdim: usize) -> Result<Report> {
    let mut c = CheckResult { name: "oracle-agreement".into(), cases: 0, failures: vec![] };
    let bound = maxdim.min(3);
    for m in 0..=bound {
        for n in 0..=bound {
            for f in enumerate_hom(m, n, VariantTag::Monotone)? {
                c.cases += 1;
                if f.is_interval_preserving() != oracle_interval_check(&f)? {
                    c.failures.push(json::morphism_to_json(&f));
                }
            }
        }
    }
    Ok(Report { checks: vec![c] })
}

fn execute(cmd: Command, ctx: &mut Ctx) -> std::result::Result<(Value, bool), Failure> {
    let value = match cmd {
        Command::Classify(MapArg { map }) => {
            let f = read_map(&map)?;
            let tags: Vec<&str> = classify_map(&f).iter().map(VariantTag::as_str).collect();
            json!({ "tags": tags })
        }
        Command::Compose { outer, inner } => {
            let (psi, phi) = (read_morphism(&outer)?, read_morphism(&inner)?);
            json::morphism_to_json(&compose(&psi, &phi)?)
        }
        Command::Decompose(MapArg { map }) => json::decomposition_to_json(&decompose(&read_morphism(&map)?)?),
        Command::Homset { m, n, variant, count } => {
            let tag: VariantTag = variant.parse()?;
            if count {
                json!({ "m": m, "n": n, "variant": tag.as_str(), "count": count_hom(m, n, tag)? as u64 })
            } else {
                let homs = enumerate_hom(m, n, tag)?;
                ctx.log(format!("homset: {} morphisms", homs.len()));
                let list: Vec<Value> = homs.iter().map(json::morphism_to_json).collect();
                json!({ "m": m, "n": n, "variant": tag.as_str(), "count": homs.len(), "morphisms": list })
            }
        }
        Command::Section { map, all } => {
            let pi = read_morphism(&map.map)?;
            if all {
                let list: Vec<Value> = sections_of(&pi)?.iter().map(json::morphism_to_json).collect();
                json!({ "sections": list })
            } else {
                json!({ "section": json::morphism_to_json(&construct_section(&pi)?) })
            }
        }
        Command::Factorize(MapArg { map }) => json::factorization_to_json(&epi_mono_factorize(&read_morphism(&map)?)?),
        Command::Saturate { generators, generator_maps, maxdim, count } => {
            let kinds = generators.iter().map(|g| g.parse()).collect::<Result<Vec<GeneratorKind>>>()?;
            if kinds.contains(&GeneratorKind::Reverse) {
                return Err(Error::Parse("reverse is not monotone and cannot be saturated".into()).into());
            }
            let mut gens = generator_set(&kinds)?;
            for g in &generator_maps {
                gens.push(read_morphism(g)?);
            }
            let sat = saturate(&gens, maxdim)?;
            ctx.log(format!("saturate: {} morphisms within dimension {maxdim}", sat.total()));
            let homs: Vec<Value> = sat
                .homs
                .iter()
                .map(|((m, n), fs)| {
                    if count {
                        json!({ "m": m, "n": n, "count": fs.len() })
                    } else {
                        let list: Vec<Value> = fs.iter().map(json::morphism_to_json).collect();
                        json!({ "m": m, "n": n, "count": fs.len(), "morphisms": list })
                    }
                })
                .collect();
            json!({ "maxdim": maxdim, "homs": homs })
        }
        Command::Subdivide { n, k } => {
            let c = subdivide_representable(n, k)?;
            let mut v = json::complex_to_json(&c);
            v["counts"] = json!(c.counts());
            v
        }
        Command::Complex { poset } => {
            let c = boolean_complex(&json::poset_from_json(&read_json(&poset)?)?);
            json::complex_to_json(&c)
        }
        Command::Triangulate { complex, poset, truncate } => {
            let mut c = read_complex(complex.as_deref(), poset.as_deref())?;
            if let Some(d) = truncate {
                c = c.truncate(d);
            }
            json::simplicial_to_json(&c.triangulate())
        }
        Command::Homology { simplicial, complex, poset, truncate } => {
            let s = match simplicial {
                Some(s) => json::simplicial_from_json(&read_json(&s)?)?,
                None => {
                    let mut c = read_complex(complex.as_deref(), poset.as_deref())?;
                    if let Some(d) = truncate {
                        c = c.truncate(d);
                    }
                    c.triangulate()
                }
            };
            json::homology_to_json(&simplicial_homology(&s)?)
        }
        Command::Cat0 { poset } => {
            let p = json::poset_from_json(&read_json(&poset)?)?;
            let c = boolean_complex(&p);
            let flag = match is_nonpositively_curved(&c) {
                None => json!({ "passed": true }),
                Some(w) => {
                    let edges: Vec<Value> = w
                        .edges
                        .iter()
                        .map(|&e| json!([p.name(c.cells()[e].lo), p.name(c.cells()[e].hi)]))
                        .collect();
                    json!({ "passed": false, "witness": { "vertex": p.name(w.vertex), "edges": edges } })
                }
            };
            let dms = match is_distributive_meet_semilattice(&p) {
                Ok(None) => json!({ "passed": true }),
                Ok(Some(w)) => {
                    let xs: Vec<&str> = w.xs.iter().map(|&x| p.name(x)).collect();
                    json!({ "passed": false, "witness": { "xs": xs, "y": p.name(w.y) } })
                }
                Err(e) => json!({ "passed": false, "witness": e.to_json() }),
            };
            let h = simplicial_homology(&c.triangulate())?;
            let h0 = !p.is_empty() && reduced_betti(&h, 0) == 0;
            let h1 = reduced_betti(&h, 1) == 0 && h.get(1).map_or(true, |g| g.torsion.is_empty());
            json!({
                "flag_link": flag,
                "distributive_meet_semilattice": dms,
                "reduced_h0_vanishes": h0,
                "reduced_h1_vanishes": h1,
            })
        }
        Command::Verify { suite, maxdim } => {
            let mut report = Report::default();
            let run_reedy = matches!(suite, Suite::Reedy | Suite::All);
            if run_reedy {
                report.extend(verify_reedy_ez(maxdim)?);
                report.extend(verify_negative_control()?);
            }
            if matches!(suite, Suite::Corollaries | Suite::All) {
                report.extend(verify_corollaries(maxdim)?);
            }
            if matches!(suite, Suite::Generation | Suite::All) {
                report.extend(verify_generation(maxdim)?);
            }
            if matches!(suite, Suite::Oracle | Suite::All) {
                report.extend(oracle_suite(maxdim)?);
            }
            for line in report.to_string().lines() {
                ctx.log(line.to_string());
            }
            let (mut v, ok) = report_value(&report);
            v["maxdim"] = json!(maxdim);
            return Ok((v, ok));
        }
    };
    Ok((value, true))
}

/// Runs one invocation; `args[0]` is the program name.
pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let mut ctx = Ctx { log: Vec::new() };
    let (code, value) = match execute(cli.command, &mut ctx) {
        Ok((v, true)) => (0, v),
        Ok((v, false)) => (1, v),
        Err(Failure::Domain(e)) => (1, json!({ "error": e.kind(), "witness": e.witness(), "message": e.to_string() })),
        Err(Failure::Usage(msg)) => {
            return Outcome { code: 2, stdout: String::new(), stderr: format!("error: {msg}\n") };
        }
    };
    let text = serde_json::to_string(&value).expect("JSON values serialize") + "\n";
    let mut stderr: String = ctx.log.iter().map(|l| format!("{l}\n")).collect();
    let stdout = match &cli.out {
        Some(path) => match fs::write(path, &text) {
            Ok(()) => String::new(),
            Err(e) => {
                stderr.push_str(&format!("error: cannot write {}: {e}\n", path.display()));
                return Outcome { code: 2, stdout: String::new(), stderr };
            }
        },
        None => text,
    };
    Outcome { code, stdout, stderr }
}
