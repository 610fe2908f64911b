//! Pseudo-valuations with exact rational values.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::algebra::{Algebra, Elem};
use crate::error::{Error, Result, Verdict, Violation};
use crate::operators::{self, UnaryMap};
use crate::subset::Subset;

pub type Value = BigRational;

pub fn int(n: i64) -> Value {
    BigRational::from_integer(n.into())
}

fn arity(alg: &Algebra, values: &[Value]) -> Result<()> {
    if values.len() == alg.n() {
        Ok(())
    } else {
        Err(Error::MapArity { expected: alg.n(), got: values.len() })
    }
}

/// pv1 `φ(1) = 0` and pv2 `φ(y) − φ(x) ≤ min(φ(x→y), φ(x⇝y))`.
fn pv_verdict(alg: &Algebra, phi: &[Value]) -> Verdict {
    if !phi[alg.one()].is_zero() {
        return Err(Violation::new("pv1", vec![alg.one()]));
    }
    for x in alg.elements() {
        for y in alg.elements() {
            let diff = &phi[y] - &phi[x];
            let bound = (&phi[alg.imp(x, y)]).min(&phi[alg.sq(x, y)]);
            if &diff > bound {
                return Err(Violation::new("pv2", vec![x, y]));
            }
        }
    }
    Ok(())
}

pub fn is_pseudo_valuation(alg: &Algebra, values: &[Value]) -> Result<Verdict> {
    arity(alg, values)?;
    Ok(pv_verdict(alg, values))
}

/// pv1–pv2 plus pv3: `φ(x) = 0 ⇒ x = 1`.
pub fn is_valuation(alg: &Algebra, values: &[Value]) -> Result<Verdict> {
    arity(alg, values)?;
    Ok(pv_verdict(alg, values).and_then(|()| match alg.elements().find(|&x| x != alg.one() && values[x].is_zero()) {
        Some(x) => Err(Violation::new("pv3", vec![x])),
        None => Ok(()),
    }))
}

/// pv4 (order reversing) and pv5 (nonnegative), which every pseudo-valuation satisfies.
pub fn derived_verdict(alg: &Algebra, values: &[Value]) -> Verdict {
    for x in alg.elements() {
        if values[x].is_negative() {
            return Err(Violation::new("pv5", vec![x]));
        }
    }
    for x in alg.elements() {
        for y in alg.elements() {
            if alg.leq(x, y) && values[x] < values[y] {
                return Err(Violation::new("pv4", vec![x, y]));
            }
        }
    }
    Ok(())
}

/// A certified pseudo-valuation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PseudoValuation {
    values: Vec<Value>,
    parent: u64,
}

impl PseudoValuation {
    pub fn new(alg: &Algebra, values: Vec<Value>) -> Result<Self> {
        is_pseudo_valuation(alg, &values)?.map_err(Error::NotPseudoValuation)?;
        Ok(PseudoValuation { values, parent: alg.fingerprint() })
    }

    pub fn values(&self) -> &[Value] {
        &self.values
    }

    pub fn at(&self, x: Elem) -> &Value {
        &self.values[x]
    }

    pub fn zero(alg: &Algebra) -> Self {
        PseudoValuation { values: vec![Value::zero(); alg.n()], parent: alg.fingerprint() }
    }

    /// `0` on `d`, `weight` elsewhere; a pseudo-valuation whenever `d` is a deductive system.
    pub fn indicator(alg: &Algebra, d: Subset, weight: Value) -> Result<Self> {
        let values = alg.elements().map(|x| if d.contains(x) { Value::zero() } else { weight.clone() }).collect();
        PseudoValuation::new(alg, values)
    }

    /// Pointwise sum.
    pub fn sum(&self, other: &PseudoValuation) -> Result<Self> {
        if self.parent != other.parent {
            return Err(Error::ParentMismatch);
        }
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect();
        Ok(PseudoValuation { values, parent: self.parent })
    }

    pub fn render(&self) -> Vec<String> {
        self.values.iter().map(ToString::to_string).collect()
    }
}

/// `φ ∘ v`, re-certified.
pub fn compose_with_vto(alg: &Algebra, phi: &PseudoValuation, v: &UnaryMap) -> Result<PseudoValuation> {
    if phi.parent != alg.fingerprint() || !v.belongs_to(alg) {
        return Err(Error::ParentMismatch);
    }
    operators::is_vto(alg, v).map_err(Error::NotVto)?;
    let values: Vec<Value> = alg.elements().map(|x| phi.values[v.apply(x)].clone()).collect();
    pv_verdict(alg, &values)
        .map_err(|e| Error::Internal(format!("composition is not a pseudo-valuation: {}", e.render(alg))))?;
    Ok(PseudoValuation { values, parent: phi.parent })
}
