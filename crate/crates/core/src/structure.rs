//! Secondary structures: noncrossing Watson–Crick matchings on a single word.
//!
//! A structure on `w` is the same thing as a morphism `ε → w`, and arcs use
//! 1-based positions `(i, j)` with `i < j`.

use std::fmt;

use thiserror::Error;

use crate::word::{PairType, Word};

pub type Arc = (usize, usize);

/// A single reason a candidate structure is not valid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StructureViolation {
    OutOfRange { arc: Arc, len: usize },
    Unordered { arc: Arc },
    SharedPosition { pos: usize, first: Arc, second: Arc },
    Crossing { first: Arc, second: Arc },
    NotComplementary { arc: Arc, left: char, right: char },
}

impl fmt::Display for StructureViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructureViolation::OutOfRange { arc, len } => {
                write!(f, "arc {arc:?} lies outside positions 1..={len}")
            }
            StructureViolation::Unordered { arc } => {
                write!(f, "arc {arc:?} must satisfy i < j")
            }
            StructureViolation::SharedPosition { pos, first, second } => {
                write!(f, "position {pos} is used by both {first:?} and {second:?}")
            }
            StructureViolation::Crossing { first, second } => {
                write!(f, "arcs {first:?} and {second:?} cross (pseudoknot)")
            }
            StructureViolation::NotComplementary { arc, left, right } => {
                write!(f, "arc {arc:?} joins {left}-{right}, which is not a Watson-Crick pair")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid secondary structure: {}", join_violations(.0))]
pub struct InvalidStructure(pub Vec<StructureViolation>);

fn join_violations(v: &[StructureViolation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

/// A noncrossing set of complementary base pairs on one word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SecondaryStructure {
    word: Word,
    arcs: Vec<Arc>,
}

impl SecondaryStructure {
    /// Validating constructor. Arcs are sorted into canonical order.
    pub fn new(word: Word, arcs: Vec<Arc>) -> Result<Self, InvalidStructure> {
        let s = Self::new_unchecked(word, arcs);
        let violations = s.violations();
        if violations.is_empty() {
            Ok(s)
        } else {
            Err(InvalidStructure(violations))
        }
    }

    /// Builds without checking; use [`violations`](Self::violations) to
    /// inspect the result.
    pub fn new_unchecked(word: Word, mut arcs: Vec<Arc>) -> Self {
        arcs.sort_unstable();
        SecondaryStructure { word, arcs }
    }

    pub fn empty(word: Word) -> Self {
        SecondaryStructure { word, arcs: Vec::new() }
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Number of base-pair bonds.
    pub fn bond_count(&self) -> usize {
        self.arcs.len()
    }

    /// Partner of every position (index 0 unused), or `None` if unpaired.
    pub fn partner_table(&self) -> Vec<Option<usize>> {
        let mut table = vec![None; self.word.len() + 1];
        for &(i, j) in &self.arcs {
            if i < table.len() && j < table.len() {
                table[i] = Some(j);
                table[j] = Some(i);
            }
        }
        table
    }

    pub fn pair_type(&self, arc: Arc) -> PairType {
        self.word.at(arc.0).pair_type()
    }

    pub fn is_valid(&self) -> bool {
        self.violations().is_empty()
    }

    /// Every violated invariant. Empty iff the structure is valid.
    pub fn violations(&self) -> Vec<StructureViolation> {
        let n = self.word.len();
        let mut out = Vec::new();
        let mut owner: Vec<Option<Arc>> = vec![None; n + 1];
        let mut in_range = Vec::new();
        for &arc in &self.arcs {
            let (i, j) = arc;
            if i == 0 || j == 0 || i > n || j > n {
                out.push(StructureViolation::OutOfRange { arc, len: n });
                continue;
            }
            if i >= j {
                out.push(StructureViolation::Unordered { arc });
                continue;
            }
            for pos in [i, j] {
                match owner[pos] {
                    Some(first) => out.push(StructureViolation::SharedPosition {
                        pos,
                        first,
                        second: arc,
                    }),
                    None => owner[pos] = Some(arc),
                }
            }
            let (l, r) = (self.word.at(i), self.word.at(j));
            if !l.pairs_with(r) {
                out.push(StructureViolation::NotComplementary {
                    arc,
                    left: l.as_char(),
                    right: r.as_char(),
                });
            }
            in_range.push(arc);
        }
        for (a, &(i, j)) in in_range.iter().enumerate() {
            for &(k, l) in &in_range[a + 1..] {
                if (i < k && k < j && j < l) || (k < i && i < l && l < j) {
                    out.push(StructureViolation::Crossing {
                        first: (i, j),
                        second: (k, l),
                    });
                }
            }
        }
        out
    }

    /// Nesting level of each arc, aligned with [`arcs`](Self::arcs): an arc
    /// enclosing no other arc has level 1, otherwise one more than the
    /// largest level it encloses.
    pub fn nesting_levels(&self) -> Vec<usize> {
        nesting_levels(&self.arcs)
    }
}

/// Nesting levels for a sorted, noncrossing arc list.
pub(crate) fn nesting_levels(arcs: &[Arc]) -> Vec<usize> {
    let mut levels = vec![1; arcs.len()];
    // Sorted by start, so every arc enclosed by arcs[a] comes after it.
    for a in (0..arcs.len()).rev() {
        let (i, j) = arcs[a];
        let inner = arcs[a + 1..]
            .iter()
            .zip(&levels[a + 1..])
            .filter(|(&(k, l), _)| i < k && l < j)
            .map(|(_, &lv)| lv)
            .max()
            .unwrap_or(0);
        levels[a] = inner + 1;
    }
    levels
}
