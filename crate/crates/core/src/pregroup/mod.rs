//! Free pregroup types, contraction proofs, and the strong monoidal functor
//! into the diagram category.

mod functor;
mod lexicon;
mod reduce;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use functor::{functor_object, functor_reduction, meaning, meaning_all, Meaning};
pub use lexicon::{Entry, Lexicon, LexiconError};
pub use reduce::{reduce, reduce_all, ReductionProof};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PregroupError {
    #[error("empty basic type in term {0:?}")]
    EmptyBasic(String),
    #[error("bad adjoint suffix in term {0:?} (use ^l, ^r, ^ll, ^rr, ...)")]
    BadAdjoint(String),
    #[error("basic type {0:?} has no DNA assignment")]
    UnknownBasic(String),
    #[error("word {0:?} is not in the lexicon")]
    UnknownWord(String),
    #[error("proof does not fit the given types: {0}")]
    BadProof(String),
}

/// A basic type with an integer adjoint exponent: 0 plain, -1 left (`^l`),
/// +1 right (`^r`), iterated beyond that.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleTerm {
    pub basic: String,
    pub adjoint: i32,
}

impl SimpleTerm {
    pub fn new(basic: impl Into<String>, adjoint: i32) -> Self {
        SimpleTerm {
            basic: basic.into(),
            adjoint,
        }
    }

    pub fn plain(basic: impl Into<String>) -> Self {
        Self::new(basic, 0)
    }

    /// `self · next ≤ 1` is a generating contraction: same basic type and
    /// exponents `z`, `z + 1`.
    pub fn contracts_with(&self, next: &SimpleTerm) -> bool {
        self.basic == next.basic && self.adjoint + 1 == next.adjoint
    }
}

impl FromStr for SimpleTerm {
    type Err = PregroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (basic, suffix) = match s.split_once('^') {
            Some((b, suf)) => (b, Some(suf)),
            None => (s, None),
        };
        if basic.is_empty() {
            return Err(PregroupError::EmptyBasic(s.to_string()));
        }
        let adjoint = match suffix {
            None => 0,
            Some(suf) if !suf.is_empty() && suf.chars().all(|c| c == 'l') => -(suf.len() as i32),
            Some(suf) if !suf.is_empty() && suf.chars().all(|c| c == 'r') => suf.len() as i32,
            Some(_) => return Err(PregroupError::BadAdjoint(s.to_string())),
        };
        Ok(SimpleTerm::new(basic, adjoint))
    }
}

impl fmt::Display for SimpleTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.basic)?;
        match self.adjoint {
            0 => Ok(()),
            z if z < 0 => write!(f, "^{}", "l".repeat(z.unsigned_abs() as usize)),
            z => write!(f, "^{}", "r".repeat(z as usize)),
        }
    }
}

/// A product of simple terms; the empty product is the unit.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct PregroupType(pub Vec<SimpleTerm>);

impl PregroupType {
    pub fn unit() -> Self {
        PregroupType(Vec::new())
    }

    pub fn terms(&self) -> &[SimpleTerm] {
        &self.0
    }

    pub fn concat(&self, other: &PregroupType) -> PregroupType {
        PregroupType(self.0.iter().chain(&other.0).cloned().collect())
    }

    /// Every exponent shifted by `by`.
    pub fn shift_adjoints(&self, by: i32) -> PregroupType {
        PregroupType(
            self.0
                .iter()
                .map(|t| SimpleTerm::new(t.basic.clone(), t.adjoint + by))
                .collect(),
        )
    }

    /// Flattened product of a sequence of types.
    pub fn flatten<'a>(types: impl IntoIterator<Item = &'a PregroupType>) -> PregroupType {
        PregroupType(types.into_iter().flat_map(|t| t.0.iter().cloned()).collect())
    }
}

impl FromStr for PregroupType {
    type Err = PregroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split_whitespace()
            .filter(|t| *t != "1")
            .map(str::parse)
            .collect::<Result<Vec<_>, _>>()
            .map(PregroupType)
    }
}

impl fmt::Display for PregroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|t| t.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}
