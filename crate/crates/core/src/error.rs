use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{Algebra, Elem};

/// A law that failed, together with the lexicographically least tuple witnessing it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub law: &'static str,
    pub witness: Vec<Elem>,
}

impl Violation {
    pub fn new(law: &'static str, witness: Vec<Elem>) -> Self {
        Violation { law, witness }
    }

    /// Witness rendered with element names instead of ids.
    pub fn render(&self, alg: &Algebra) -> String {
        let names: Vec<&str> = self.witness.iter().map(|&x| alg.name(x)).collect();
        format!("{} at ({})", self.law, names.join(", "))
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {:?}", self.law, self.witness)
    }
}

/// Outcome of a law check: `Ok(())` or the first violation found.
pub type Verdict = std::result::Result<(), Violation>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("algebra is not bounded (no zero element)")]
    Unbounded,
    #[error("{what}: carrier size {n} exceeds the cap of {cap}")]
    CarrierTooLarge { what: &'static str, n: usize, cap: usize },
    #[error("operands belong to different algebras")]
    ParentMismatch,
    #[error("map has {got} entries but the carrier has {expected}")]
    MapArity { expected: usize, got: usize },
    #[error("map value {value} at position {at} is outside the carrier")]
    MapOutOfRange { at: usize, value: usize },
    #[error("operation requires a good algebra with the Glivenko property")]
    GlivenkoRequired,
    #[error("induced map is not well defined: {0}")]
    WellDefinedness(String),
    #[error("subset is not a deductive system: {0}")]
    NotDeductiveSystem(Violation),
    #[error("deductive system is not normal: {0}")]
    NotNormal(Violation),
    #[error("deductive system is not stable under the operator (element {witness})")]
    NotVds { witness: Elem },
    #[error("map is not an interior operator: {0}")]
    NotInterior(Violation),
    #[error("values do not form a pseudo-valuation: {0}")]
    NotPseudoValuation(Violation),
    #[error("map is not a very true operator: {0}")]
    NotVto(Violation),
    #[error("map is not a homomorphism: {0}")]
    NotHom(Violation),
    #[error("homomorphism does not intertwine the operators: {0}")]
    NotVtHom(Violation),
    #[error("subset is not a subalgebra: {0}")]
    NotSubalgebra(Violation),
    #[error("homomorphism must be surjective for this statement")]
    SurjectivityRequired,
    #[error("deductive system is not contained in the kernel (element {witness})")]
    KernelContainmentViolated { witness: Elem },
    #[error("algebra lacks the pseudo-product: {0}")]
    PpRequired(Violation),
    #[error("algebra is not an FLw-algebra: {0}")]
    NotFlw(Violation),
    #[error("subset is not a Smarandache substructure: {0}")]
    NotSmarandache(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Unbounded => "E_UNBOUNDED",
            Error::CarrierTooLarge { .. } => "E_CARRIER_TOO_LARGE",
            Error::ParentMismatch => "E_PARENT_MISMATCH",
            Error::MapArity { .. } => "E_MAP_ARITY",
            Error::MapOutOfRange { .. } => "E_MAP_RANGE",
            Error::GlivenkoRequired => "E_GLIVENKO_REQUIRED",
            Error::WellDefinedness(_) => "E_WELL_DEFINEDNESS",
            Error::NotDeductiveSystem(_) => "E_NOT_DS",
            Error::NotNormal(_) => "E_NOT_NORMAL",
            Error::NotVds { .. } => "E_NOT_VDS",
            Error::NotInterior(_) => "E_NOT_INTERIOR",
            Error::NotPseudoValuation(_) => "E_NOT_PSEUDO_VALUATION",
            Error::NotVto(_) => "E_NOT_VTO",
            Error::NotHom(_) => "E_NOT_HOM",
            Error::NotVtHom(_) => "E_NOT_VTHOM",
            Error::NotSubalgebra(_) => "E_NOT_SUBALGEBRA",
            Error::SurjectivityRequired => "E_SURJECTIVITY_REQUIRED",
            Error::KernelContainmentViolated { .. } => "E_KERNEL_CONTAINMENT",
            Error::PpRequired(_) => "E_PP_REQUIRED",
            Error::NotFlw(_) => "E_NOT_FLW",
            Error::NotSmarandache(_) => "E_NOT_SMARANDACHE",
            Error::Internal(_) => "E_INTERNAL",
        }
    }
}

impl Error {
    /// Message with witnesses named by the elements of `alg`.
    pub fn render(&self, alg: &Algebra) -> String {
        let name = |x: Elem| alg.name(x).to_string();
        match self {
            Error::NotDeductiveSystem(v) => format!("subset is not a deductive system: {}", v.render(alg)),
            Error::NotNormal(v) => format!("deductive system is not normal: {}", v.render(alg)),
            Error::NotVds { witness } => {
                format!("deductive system is not stable under the operator (element {})", name(*witness))
            }
            Error::NotInterior(v) => format!("map is not an interior operator: {}", v.render(alg)),
            Error::NotPseudoValuation(v) => format!("values do not form a pseudo-valuation: {}", v.render(alg)),
            Error::NotVto(v) => format!("map is not a very true operator: {}", v.render(alg)),
            Error::NotHom(v) => format!("map is not a homomorphism: {}", v.render(alg)),
            Error::NotVtHom(v) => format!("homomorphism does not intertwine the operators: {}", v.render(alg)),
            Error::NotSubalgebra(v) => format!("subset is not a subalgebra: {}", v.render(alg)),
            Error::KernelContainmentViolated { witness } => {
                format!("deductive system is not contained in the kernel (element {})", name(*witness))
            }
            Error::PpRequired(v) => format!("algebra lacks the pseudo-product: {}", v.render(alg)),
            Error::NotFlw(v) => format!("algebra is not an FLw-algebra: {}", v.render(alg)),
            other => other.to_string(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
