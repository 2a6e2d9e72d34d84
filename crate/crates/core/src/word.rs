//! The four-letter alphabet, words over it, and the complement involution.

use std::fmt;
use std::ops::{Deref, Index};
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("invalid base {ch:?} at position {pos} (expected one of A, C, G, T)")]
    InvalidBase { ch: char, pos: usize },
}

/// A single nucleotide.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Base {
    A,
    C,
    G,
    T,
}

impl Base {
    pub const ALL: [Base; 4] = [Base::A, Base::C, Base::G, Base::T];

    /// Watson–Crick partner: A↔T, C↔G.
    pub fn complement(self) -> Base {
        match self {
            Base::A => Base::T,
            Base::T => Base::A,
            Base::C => Base::G,
            Base::G => Base::C,
        }
    }

    pub fn pairs_with(self, other: Base) -> bool {
        self.complement() == other
    }

    /// Which of the two pair families this base belongs to.
    pub fn pair_type(self) -> PairType {
        match self {
            Base::A | Base::T => PairType::AT,
            Base::C | Base::G => PairType::CG,
        }
    }

    pub fn from_char(ch: char) -> Option<Base> {
        match ch.to_ascii_uppercase() {
            'A' => Some(Base::A),
            'C' => Some(Base::C),
            'G' => Some(Base::G),
            'T' => Some(Base::T),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Base::A => 'A',
            Base::C => 'C',
            Base::G => 'G',
            Base::T => 'T',
        }
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// The two families of complementary pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairType {
    AT,
    CG,
}

/// A strand read 5′→3′. The empty word is the monoidal unit.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Base>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn new(bases: Vec<Base>) -> Word {
        Word(bases)
    }

    pub fn bases(&self) -> &[Base] {
        &self.0
    }

    /// Base at a 1-based position.
    pub fn at(&self, pos: usize) -> Base {
        self.0[pos - 1]
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut bases = Vec::with_capacity(self.len() + other.len());
        bases.extend_from_slice(&self.0);
        bases.extend_from_slice(&other.0);
        Word(bases)
    }

    /// The dual object: complement every base and reverse the order.
    pub fn reverse_complement(&self) -> Word {
        Word(self.0.iter().rev().map(|b| b.complement()).collect())
    }

    /// Sub-word over the 1-based inclusive range `start..=end`.
    pub fn slice(&self, start: usize, end: usize) -> Word {
        if start > end {
            return Word::empty();
        }
        Word(self.0[start - 1..end].to_vec())
    }

    pub fn starts_with(&self, prefix: &Word) -> bool {
        self.0.starts_with(&prefix.0)
    }

    pub fn ends_with(&self, suffix: &Word) -> bool {
        self.0.ends_with(&suffix.0)
    }

    /// Text form used by the diagram file format, where ε is written `-`.
    pub fn to_boundary_string(&self) -> String {
        if self.is_empty() {
            "-".to_string()
        } else {
            self.to_string()
        }
    }

    pub fn parse_boundary(s: &str) -> Result<Word, WordError> {
        if s == "-" {
            Ok(Word::empty())
        } else {
            s.parse()
        }
    }
}

impl Deref for Word {
    type Target = [Base];

    fn deref(&self) -> &[Base] {
        &self.0
    }
}

impl Index<usize> for Word {
    type Output = Base;

    fn index(&self, idx: usize) -> &Base {
        &self.0[idx]
    }
}

impl FromIterator<Base> for Word {
    fn from_iter<I: IntoIterator<Item = Base>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl FromStr for Word {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .enumerate()
            .map(|(i, ch)| Base::from_char(ch).ok_or(WordError::InvalidBase { ch, pos: i + 1 }))
            .collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{}", b.as_char())?;
        }
        Ok(())
    }
}

/// Shorthand for tests and fixtures; panics on a bad literal.
pub fn word(s: &str) -> Word {
    s.parse().unwrap_or_else(|e| panic!("bad word literal {s:?}: {e}"))
}
