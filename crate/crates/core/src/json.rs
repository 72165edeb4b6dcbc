//! JSON readers and writers for every value the CLI exchanges.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::complex::{CubeComplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::homology::HomologyGroup;
use crate::morphism::{CubeMap, CubeMorphism, MonotoneBoolFn, RawMap};
use crate::normal_form::{Coface, CofaceWord, Decomposition, Factorization, Sign};
use crate::operad::OperadElement;
use crate::order::{FinPoset, Permutation, Point};

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| parse_err(format!("missing field {key:?}")))
}

fn as_usize(v: &Value, what: &str) -> Result<usize> {
    v.as_u64().map(|x| x as usize).ok_or_else(|| parse_err(format!("{what} must be a natural number")))
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| parse_err(format!("{what} must be an array")))
}

fn usize_list(v: &Value, what: &str) -> Result<Vec<usize>> {
    as_array(v, what)?.iter().map(|x| as_usize(x, what)).collect()
}

pub fn antichain_to_json(f: &MonotoneBoolFn) -> Value {
    json!(f.index_sets())
}

fn antichain_from_json(v: &Value, arity: usize) -> Result<MonotoneBoolFn> {
    let sets = as_array(v, "antichain")?
        .iter()
        .map(|s| usize_list(s, "antichain member"))
        .collect::<Result<Vec<_>>>()?;
    MonotoneBoolFn::from_index_sets(arity, &sets)
}

pub fn morphism_to_json(f: &CubeMorphism) -> Value {
    let coords: Vec<Value> = f.coords().iter().map(|c| json!({ "antichain": antichain_to_json(c) })).collect();
    json!({ "m": f.source(), "n": f.target(), "coords": coords })
}

pub fn morphism_from_json(v: &Value) -> Result<CubeMorphism> {
    let m = as_usize(field(v, "m")?, "m")?;
    let coords = as_array(field(v, "coords")?, "coords")?
        .iter()
        .map(|c| antichain_from_json(field(c, "antichain")?, m))
        .collect::<Result<Vec<_>>>()?;
    if let Some(n) = v.get("n") {
        let n = as_usize(n, "n")?;
        if n != coords.len() {
            return Err(Error::ArityMismatch { expected: n, found: coords.len() });
        }
    }
    CubeMorphism::new(m, coords)
}

pub fn point_to_json(p: &Point) -> Value {
    json!(p.coords())
}

pub fn point_from_json(v: &Value, n: usize) -> Result<Point> {
    let coords = as_array(v, "point")?
        .iter()
        .map(|c| c.as_u64().filter(|&b| b <= 1).map(|b| b as u8).ok_or_else(|| parse_err("point entries must be 0 or 1")))
        .collect::<Result<Vec<u8>>>()?;
    if coords.len() != n {
        return Err(Error::ArityMismatch { expected: n, found: coords.len() });
    }
    Point::from_coords(&coords)
}

pub fn raw_to_json(r: &RawMap) -> Value {
    let rows: Vec<Value> = r.table().iter().map(|&y| point_to_json(&Point::new(r.target(), y))).collect();
    json!({ "m": r.source(), "n": r.target(), "table": rows })
}

pub fn raw_from_json(v: &Value) -> Result<RawMap> {
    let m = as_usize(field(v, "m")?, "m")?;
    let n = as_usize(field(v, "n")?, "n")?;
    let table = as_array(field(v, "table")?, "table")?
        .iter()
        .map(|row| point_from_json(row, n).map(|p| p.bits()))
        .collect::<Result<Vec<_>>>()?;
    RawMap::new(m, n, table)
}

pub fn map_to_json(f: &CubeMap) -> Value {
    match f {
        CubeMap::Monotone(f) => morphism_to_json(f),
        CubeMap::Raw(r) => raw_to_json(r),
    }
}

/// Reads either a morphism (`"coords"`) or a raw table (`"table"`).
pub fn map_from_json(v: &Value) -> Result<CubeMap> {
    if v.get("coords").is_some() {
        Ok(CubeMap::Monotone(morphism_from_json(v)?))
    } else if v.get("table").is_some() {
        Ok(CubeMap::Raw(raw_from_json(v)?))
    } else {
        Err(parse_err("a map needs either \"coords\" or \"table\""))
    }
}

pub fn operad_to_json(e: &OperadElement) -> Value {
    json!({ "arity": e.arity(), "antichain": antichain_to_json(e.value()) })
}

pub fn operad_from_json(v: &Value) -> Result<OperadElement> {
    let arity = as_usize(field(v, "arity")?, "arity")?;
    Ok(OperadElement::new(antichain_from_json(field(v, "antichain")?, arity)?))
}

pub fn permutation_to_json(g: &Permutation) -> Value {
    json!(g.images())
}

pub fn decomposition_to_json(d: &Decomposition) -> Value {
    let factors: Vec<Value> = d
        .factors
        .iter()
        .map(|f| json!({ "arity": f.arity(), "antichain": antichain_to_json(f) }))
        .collect();
    json!({ "blocks": d.blocks, "g": permutation_to_json(&d.g), "factors": factors, "dropped": d.dropped })
}

pub fn decomposition_from_json(v: &Value) -> Result<Decomposition> {
    let blocks = usize_list(field(v, "blocks")?, "blocks")?;
    let g = Permutation::new(&usize_list(field(v, "g")?, "g")?)?;
    let dropped = as_usize(field(v, "dropped")?, "dropped")?;
    let factors = as_array(field(v, "factors")?, "factors")?;
    if factors.len() != blocks.len() {
        return Err(Error::MalformedDecomposition(format!(
            "{} factors for {} blocks",
            factors.len(),
            blocks.len()
        )));
    }
    let factors = factors
        .iter()
        .zip(&blocks)
        .map(|(f, &b)| {
            let arity = match f.get("arity") {
                Some(a) => as_usize(a, "arity")?,
                None => b,
            };
            antichain_from_json(field(f, "antichain")?, arity)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Decomposition { blocks, g, factors, dropped })
}

pub fn coface_word_to_json(w: &CofaceWord) -> Value {
    let faces: Vec<Value> = w
        .faces
        .iter()
        .map(|c| json!({ "sign": c.sign.symbol(), "position": c.position, "ambient": c.ambient }))
        .collect();
    json!({ "source": w.source, "faces": faces })
}

pub fn coface_word_from_json(v: &Value) -> Result<CofaceWord> {
    let source = as_usize(field(v, "source")?, "source")?;
    let faces = as_array(field(v, "faces")?, "faces")?
        .iter()
        .map(|c| {
            let sign = match field(c, "sign")?.as_str() {
                Some("-") => Sign::Minus,
                Some("+") => Sign::Plus,
                _ => return Err(parse_err("sign must be \"-\" or \"+\"")),
            };
            Ok(Coface {
                sign,
                position: as_usize(field(c, "position")?, "position")?,
                ambient: as_usize(field(c, "ambient")?, "ambient")?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    CofaceWord::new(source, faces)
}

pub fn interval_to_json(i: &crate::order::Interval) -> Value {
    json!({ "lo": point_to_json(&i.lo()), "hi": point_to_json(&i.hi()), "rank": i.rank() })
}

pub fn factorization_to_json(f: &Factorization) -> Value {
    json!({
        "epi": morphism_to_json(&f.epi),
        "mono": coface_word_to_json(&f.mono),
        "image": interval_to_json(&f.image),
    })
}

pub fn poset_to_json(p: &FinPoset) -> Value {
    let covers: Vec<Value> = p.covers().iter().map(|&(a, b)| json!([p.name(a), p.name(b)])).collect();
    json!({ "elements": p.names(), "covers": covers })
}

pub fn poset_from_json(v: &Value) -> Result<FinPoset> {
    let names: Vec<String> = as_array(field(v, "elements")?, "elements")?
        .iter()
        .map(|e| match e {
            Value::String(s) => Ok(s.clone()),
            Value::Number(n) => Ok(n.to_string()),
            _ => Err(parse_err("elements must be strings or numbers")),
        })
        .collect::<Result<_>>()?;
    let lookup = |e: &Value| -> Result<usize> {
        let key = match e {
            Value::String(s) => s.clone(),
            Value::Number(n) => n.to_string(),
            _ => return Err(parse_err("cover entries must name elements")),
        };
        names.iter().position(|n| *n == key).ok_or_else(|| parse_err(format!("unknown element {key:?}")))
    };
    if let Some(covers) = v.get("covers") {
        let pairs = as_array(covers, "covers")?
            .iter()
            .map(|pair| match pair.as_array().map(Vec::as_slice) {
                Some([a, b]) => Ok((lookup(a)?, lookup(b)?)),
                _ => Err(parse_err("covers entries must be pairs")),
            })
            .collect::<Result<Vec<_>>>()?;
        FinPoset::from_relation(names, &pairs, true)
    } else if let Some(leq) = v.get("leq") {
        let pairs = as_array(leq, "leq")?
            .iter()
            .map(|pair| match pair.as_array().map(Vec::as_slice) {
                Some([a, b]) => Ok((as_usize(a, "leq entry")?, as_usize(b, "leq entry")?)),
                _ => Err(parse_err("leq entries must be pairs of ids")),
            })
            .collect::<Result<Vec<_>>>()?;
        FinPoset::from_relation(names, &pairs, false)
    } else {
        Err(parse_err("a poset needs \"covers\" or \"leq\""))
    }
}

pub fn complex_to_json(c: &CubeComplex) -> Value {
    let cells: Vec<Value> = c.cells().iter().map(|b| json!({ "lo": b.lo, "hi": b.hi, "rank": b.rank })).collect();
    let incidence: Vec<Value> = c
        .incidence()
        .iter()
        .enumerate()
        .map(|(cell, facets)| {
            let facets: Vec<Value> = facets
                .iter()
                .map(|f| json!({ "facet": f.facet, "direction": f.direction, "side": f.sign.symbol() }))
                .collect();
            json!({ "cell": cell, "facets": facets })
        })
        .collect();
    json!({ "poset": poset_to_json(c.base()), "cells": cells, "incidence": incidence })
}

/// Reads a complex; the cells are recomputed from the poset and, when
/// listed, only those up to the largest listed rank are kept.
pub fn complex_from_json(v: &Value) -> Result<CubeComplex> {
    let base = poset_from_json(field(v, "poset")?)?;
    let full = CubeComplex::boolean_complex(&base);
    match v.get("cells") {
        None => Ok(full),
        Some(cells) => {
            let mut listed = Vec::new();
            for cell in as_array(cells, "cells")? {
                let lo = as_usize(field(cell, "lo")?, "lo")?;
                let hi = as_usize(field(cell, "hi")?, "hi")?;
                listed.push((lo, hi));
            }
            CubeComplex::from_cells(&base, &listed)
        }
    }
}

pub fn simplicial_to_json(s: &SimplicialComplex) -> Value {
    let mut by_dim = Map::new();
    for (d, simplices) in s.graded().iter().enumerate() {
        by_dim.insert(d.to_string(), json!(simplices));
    }
    json!({ "vertices": s.vertex_names(), "simplices": Value::Object(by_dim) })
}

pub fn simplicial_from_json(v: &Value) -> Result<SimplicialComplex> {
    let names: Vec<String> = as_array(field(v, "vertices")?, "vertices")?
        .iter()
        .map(|e| match e {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        })
        .collect();
    let graded = field(v, "simplices")?
        .as_object()
        .ok_or_else(|| parse_err("simplices must be an object keyed by dimension"))?;
    let mut by_dim: BTreeMap<usize, Vec<Vec<usize>>> = BTreeMap::new();
    for (k, list) in graded {
        let d: usize = k.parse().map_err(|_| parse_err(format!("bad dimension key {k:?}")))?;
        let simplices = as_array(list, "simplices")?
            .iter()
            .map(|s| usize_list(s, "simplex"))
            .collect::<Result<Vec<_>>>()?;
        by_dim.insert(d, simplices);
    }
    SimplicialComplex::new(names, by_dim.into_values().flatten().collect())
}

pub fn homology_to_json(groups: &[HomologyGroup]) -> Value {
    let list: Vec<Value> = groups
        .iter()
        .map(|g| {
            let torsion: Vec<Value> = g
                .torsion
                .iter()
                .map(|t| t.to_u64().map_or_else(|| json!(t.to_string()), |x| json!(x)))
                .collect();
            json!({ "degree": g.degree, "betti": g.betti, "torsion": torsion })
        })
        .collect();
    json!({ "homology": list })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn morphism_json_round_trip() {
        let v = json!({"m":3,"n":2,"coords":[{"antichain":[[2]]},{"antichain":[[1,3]]}]});
        let f = morphism_from_json(&v).unwrap();
        assert_eq!(morphism_to_json(&f), v);
    }

    #[test]
    fn raw_json_round_trip() {
        let v = json!({"m":1,"n":1,"table":[[1],[0]]});
        let r = raw_from_json(&v).unwrap();
        assert_eq!(r.table(), &[1, 0]);
        assert_eq!(raw_to_json(&r), v);
    }

    #[test]
    fn poset_json_accepts_both_relations() {
        let a = poset_from_json(&json!({"elements":["a","b","c"],"covers":[["a","b"],["b","c"]]})).unwrap();
        let b = poset_from_json(&json!({"elements":["a","b","c"],"leq":[[0,1],[1,2],[0,2]]})).unwrap();
        assert_eq!(a, b);
        assert_eq!(poset_from_json(&poset_to_json(&a)).unwrap(), a);
    }

    #[test]
    fn malformed_inputs_are_parse_errors() {
        assert!(matches!(morphism_from_json(&json!({"m":1})), Err(Error::Parse(_))));
        assert!(map_from_json(&json!({"m":1,"n":1})).is_err());
        assert!(matches!(
            morphism_from_json(&json!({"m":1,"coords":[{"antichain":[[2]]}]})),
            Err(Error::IndexOutOfRange { .. })
        ));
    }
}
