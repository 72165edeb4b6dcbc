//! The distributive lattice operad: arity-`n` elements are the monotone
//! Boolean functions of `n` variables, composed by substituting terms for
//! generators.

use std::fmt;

use crate::error::{Error, Result};
use crate::morphism::{monotone_functions, MonotoneBoolFn};
use crate::order::{Permutation, MAX_ARITY};

/// An element of the free distributive lattice on `arity` generators,
/// possibly one of the two bounds.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct OperadElement {
    value: MonotoneBoolFn,
}

impl OperadElement {
    pub fn new(value: MonotoneBoolFn) -> Self {
        OperadElement { value }
    }

    /// The generator `x_i` of arity `n`.
    pub fn generator(n: usize, i: usize) -> Result<Self> {
        Ok(OperadElement { value: MonotoneBoolFn::var(n, i)? })
    }

    pub fn arity(&self) -> usize {
        self.value.arity()
    }

    pub fn value(&self) -> &MonotoneBoolFn {
        &self.value
    }

    pub fn into_value(self) -> MonotoneBoolFn {
        self.value
    }

    /// True for the two constants, which lie outside the bound-free lattice.
    pub fn is_bound(&self) -> bool {
        self.value.is_constant()
    }

    /// Right action of `Σ_n`: the result at `x` is `self(apply(g, x))`.
    pub fn permuted(&self, g: &Permutation) -> Result<Self> {
        Ok(OperadElement { value: self.value.permuted(g)? })
    }
}

impl fmt::Display for OperadElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value.fmt(f)
    }
}

pub fn op_meet(a: &OperadElement, b: &OperadElement) -> Result<OperadElement> {
    Ok(OperadElement { value: a.value.meet(&b.value)? })
}

pub fn op_join(a: &OperadElement, b: &OperadElement) -> Result<OperadElement> {
    Ok(OperadElement { value: a.value.join(&b.value)? })
}

/// Substitutes `inners[i]` for generator `i + 1` of `outer`, giving the
/// inners disjoint blocks of variables in order.
pub fn substitute(outer: &OperadElement, inners: &[OperadElement]) -> Result<OperadElement> {
    if inners.len() != outer.arity() {
        return Err(Error::ArityMismatch { expected: outer.arity(), found: inners.len() });
    }
    let total: usize = inners.iter().map(OperadElement::arity).sum();
    if total > MAX_ARITY {
        return Err(Error::ArityTooLarge { arity: total, bound: MAX_ARITY });
    }
    let mut offset = 0;
    let shifted: Vec<MonotoneBoolFn> = inners
        .iter()
        .map(|e| {
            let s = e.value.shifted(offset, total);
            offset += e.arity();
            s
        })
        .collect();
    Ok(OperadElement { value: outer.value.substitute_shared(&shifted, total)? })
}

/// All elements of arity `n`; without bounds the two constants are omitted.
pub fn enumerate_fdl(n: usize, with_bounds: bool) -> Result<Vec<OperadElement>> {
    Ok(monotone_functions(n)?
        .iter()
        .filter(|f| with_bounds || !f.is_constant())
        .map(|f| OperadElement { value: f.clone() })
        .collect())
}
