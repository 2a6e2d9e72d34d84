//! Morphisms of the DNA diagram category.
//!
//! A [`Diagram`] `x → y` is a typed noncrossing partial matching drawn in a
//! rectangle: `x` along the top, `y` along the bottom. Edges are through-wires
//! joining a source position to a target position carrying the same base,
//! source arcs pairing complementary bases of `x`, and target arcs pairing
//! complementary bases of `y`. All positions are 1-based.
//!
//! Diagram equality is structural on canonically sorted edge lists; the
//! combinatorial data determines the isotopy class.

mod bend;
mod compose;
pub mod format;
mod glue;

use std::fmt;

use thiserror::Error;

use crate::structure::{Arc, SecondaryStructure};
use crate::word::Word;

pub use bend::{bend, unbend, zip_and_transfer};
pub use compose::compose;

/// Which boundary of the rectangle a position lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Source,
    Target,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Source => write!(f, "source"),
            Side::Target => write!(f, "target"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    Through,
    SourceArc,
    TargetArc,
}

impl fmt::Display for EdgeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeKind::Through => write!(f, "through-wire"),
            EdgeKind::SourceArc => write!(f, "source arc"),
            EdgeKind::TargetArc => write!(f, "target arc"),
        }
    }
}

/// One violated diagram invariant, with the offending indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    OutOfRange { kind: EdgeKind, edge: (usize, usize) },
    UnorderedArc { side: Side, arc: Arc },
    Degree { side: Side, pos: usize },
    ThroughTyping { wire: (usize, usize), source: char, target: char },
    ArcTyping { side: Side, arc: Arc, left: char, right: char },
    ThroughCrossing { first: (usize, usize), second: (usize, usize) },
    ArcCrossing { side: Side, first: Arc, second: Arc },
    ArcEnclosesWire { side: Side, arc: Arc, wire: (usize, usize) },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::OutOfRange { kind, edge } => {
                write!(f, "{kind} {edge:?} refers to a position outside the boundary")
            }
            Violation::UnorderedArc { side, arc } => {
                write!(f, "{side} arc {arc:?} must satisfy i < j")
            }
            Violation::Degree { side, pos } => {
                write!(f, "{side} position {pos} has more than one edge")
            }
            Violation::ThroughTyping { wire, source, target } => write!(
                f,
                "through-wire {wire:?} joins {source} to {target}; wires must carry the same base"
            ),
            Violation::ArcTyping { side, arc, left, right } => write!(
                f,
                "{side} arc {arc:?} joins {left}-{right}, which is not a Watson-Crick pair"
            ),
            Violation::ThroughCrossing { first, second } => {
                write!(f, "through-wires {first:?} and {second:?} cross")
            }
            Violation::ArcCrossing { side, first, second } => {
                write!(f, "{side} arcs {first:?} and {second:?} cross")
            }
            Violation::ArcEnclosesWire { side, arc, wire } => {
                write!(f, "{side} arc {arc:?} traps through-wire {wire:?}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("invalid diagram: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<Violation>),
    #[error("interface mismatch: first morphism ends at {left}, second starts at {right}")]
    InterfaceMismatch { left: String, right: String },
    #[error("source length {source_len} exceeds structure length {len}")]
    SourceTooLong { source_len: usize, len: usize },
}

/// Bookkeeping from a composition: what was erased and how the bond total
/// moved. Never part of diagram equality.
///
/// The bond balance always satisfies
/// `bonds_after = bonds_before + interface_bonds_formed - loop_bonds_erased
///  - open_path_bonds_erased - dangle_bonds_erased - transfer_bonds_absorbed`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LoopReport {
    /// Erased closed components made of A–T pairs.
    pub closed_loops_at: usize,
    /// Erased closed components made of C–G pairs.
    pub closed_loops_cg: usize,
    /// Erased paths with both ends in the interior.
    pub erased_open_paths: usize,
    /// Boundary endpoints left unmatched because their path dead-ended inside.
    pub dangled_endpoints: usize,
    /// Interface pairs applied by the evaluation step (zero for plain stacking).
    pub interface_bonds_formed: usize,
    pub bonds_before: usize,
    pub bonds_after: usize,
    pub loop_bonds_erased: usize,
    pub open_path_bonds_erased: usize,
    pub dangle_bonds_erased: usize,
    /// Bonds along surviving paths beyond the single edge each path becomes.
    pub transfer_bonds_absorbed: usize,
}

impl LoopReport {
    pub fn closed_loops(&self) -> usize {
        self.closed_loops_at + self.closed_loops_cg
    }

    /// Loop-count fields only; these agree between both composition routes.
    pub fn loop_counts(&self) -> (usize, usize, usize, usize) {
        (
            self.closed_loops_at,
            self.closed_loops_cg,
            self.erased_open_paths,
            self.dangled_endpoints,
        )
    }

    pub fn bond_balance_holds(&self) -> bool {
        self.bonds_before + self.interface_bonds_formed
            == self.bonds_after
                + self.loop_bonds_erased
                + self.open_path_bonds_erased
                + self.dangle_bonds_erased
                + self.transfer_bonds_absorbed
    }

    pub fn is_trivial(&self) -> bool {
        self.closed_loops() == 0 && self.erased_open_paths == 0 && self.dangled_endpoints == 0
    }
}

impl fmt::Display for LoopReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "closed_loops = {}", self.closed_loops())?;
        writeln!(f, "closed_loops_at = {}", self.closed_loops_at)?;
        writeln!(f, "closed_loops_cg = {}", self.closed_loops_cg)?;
        writeln!(f, "erased_open_paths = {}", self.erased_open_paths)?;
        writeln!(f, "dangled_endpoints = {}", self.dangled_endpoints)?;
        writeln!(f, "interface_bonds_formed = {}", self.interface_bonds_formed)?;
        writeln!(f, "bonds_before = {}", self.bonds_before)?;
        write!(f, "bonds_after = {}", self.bonds_after)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Diagram {
    source: Word,
    target: Word,
    through: Vec<(usize, usize)>,
    source_arcs: Vec<Arc>,
    target_arcs: Vec<Arc>,
}

impl Diagram {
    /// Validating constructor; edge lists are sorted into canonical order.
    pub fn new(
        source: Word,
        target: Word,
        through: Vec<(usize, usize)>,
        source_arcs: Vec<Arc>,
        target_arcs: Vec<Arc>,
    ) -> Result<Diagram, DiagramError> {
        let d = Self::new_unchecked(source, target, through, source_arcs, target_arcs);
        let violations = d.validate();
        if violations.is_empty() {
            Ok(d)
        } else {
            Err(DiagramError::Invalid(violations))
        }
    }

    /// Builds without checking invariants, so every violation of
    /// hand-written input can be reported at once via [`validate`](Self::validate).
    pub fn new_unchecked(
        source: Word,
        target: Word,
        mut through: Vec<(usize, usize)>,
        mut source_arcs: Vec<Arc>,
        mut target_arcs: Vec<Arc>,
    ) -> Diagram {
        through.sort_unstable();
        source_arcs.sort_unstable();
        target_arcs.sort_unstable();
        Diagram {
            source,
            target,
            through,
            source_arcs,
            target_arcs,
        }
    }

    pub fn source(&self) -> &Word {
        &self.source
    }

    pub fn target(&self) -> &Word {
        &self.target
    }

    pub fn through(&self) -> &[(usize, usize)] {
        &self.through
    }

    pub fn source_arcs(&self) -> &[Arc] {
        &self.source_arcs
    }

    pub fn target_arcs(&self) -> &[Arc] {
        &self.target_arcs
    }

    /// Base-pair bonds; through-wires are not bonds.
    pub fn bond_count(&self) -> usize {
        self.source_arcs.len() + self.target_arcs.len()
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// Every violated invariant with its offending indices.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let (ns, nt) = (self.source.len(), self.target.len());
        let in_src = |i: usize| (1..=ns).contains(&i);
        let in_tgt = |j: usize| (1..=nt).contains(&j);

        let mut through = Vec::new();
        for &(i, j) in &self.through {
            if in_src(i) && in_tgt(j) {
                through.push((i, j));
            } else {
                out.push(Violation::OutOfRange {
                    kind: EdgeKind::Through,
                    edge: (i, j),
                });
            }
        }
        let mut arcs_on = |side: Side, arcs: &[Arc], len: usize, kind: EdgeKind| {
            let mut kept = Vec::new();
            for &(i, j) in arcs {
                if !(1..=len).contains(&i) || !(1..=len).contains(&j) {
                    out.push(Violation::OutOfRange { kind, edge: (i, j) });
                } else if i >= j {
                    out.push(Violation::UnorderedArc { side, arc: (i, j) });
                } else {
                    kept.push((i, j));
                }
            }
            kept
        };
        let source_arcs = arcs_on(Side::Source, &self.source_arcs, ns, EdgeKind::SourceArc);
        let target_arcs = arcs_on(Side::Target, &self.target_arcs, nt, EdgeKind::TargetArc);

        // Degree.
        let mut src_deg = vec![0usize; ns + 1];
        let mut tgt_deg = vec![0usize; nt + 1];
        for &(i, j) in &through {
            src_deg[i] += 1;
            tgt_deg[j] += 1;
        }
        for &(i, j) in &source_arcs {
            src_deg[i] += 1;
            src_deg[j] += 1;
        }
        for &(i, j) in &target_arcs {
            tgt_deg[i] += 1;
            tgt_deg[j] += 1;
        }
        for (pos, &d) in src_deg.iter().enumerate().skip(1) {
            if d > 1 {
                out.push(Violation::Degree { side: Side::Source, pos });
            }
        }
        for (pos, &d) in tgt_deg.iter().enumerate().skip(1) {
            if d > 1 {
                out.push(Violation::Degree { side: Side::Target, pos });
            }
        }

        // Typing.
        for &(i, j) in &through {
            let (a, b) = (self.source.at(i), self.target.at(j));
            if a != b {
                out.push(Violation::ThroughTyping {
                    wire: (i, j),
                    source: a.as_char(),
                    target: b.as_char(),
                });
            }
        }
        for (side, arcs, w) in [
            (Side::Source, &source_arcs, &self.source),
            (Side::Target, &target_arcs, &self.target),
        ] {
            for &(i, j) in arcs.iter() {
                let (a, b) = (w.at(i), w.at(j));
                if !a.pairs_with(b) {
                    out.push(Violation::ArcTyping {
                        side,
                        arc: (i, j),
                        left: a.as_char(),
                        right: b.as_char(),
                    });
                }
            }
        }

        // Planarity.
        for (a, &(i, j)) in through.iter().enumerate() {
            for &(k, l) in &through[a + 1..] {
                // Shared endpoints are reported as degree violations.
                if i != k && j != l && (i < k) != (j < l) {
                    out.push(Violation::ThroughCrossing {
                        first: (i, j),
                        second: (k, l),
                    });
                }
            }
        }
        for (side, arcs) in [(Side::Source, &source_arcs), (Side::Target, &target_arcs)] {
            for (a, &(i, j)) in arcs.iter().enumerate() {
                for &(k, l) in &arcs[a + 1..] {
                    if (i < k && k < j && j < l) || (k < i && i < l && l < j) {
                        out.push(Violation::ArcCrossing {
                            side,
                            first: (i, j),
                            second: (k, l),
                        });
                    }
                }
                for &wire in &through {
                    let end = if side == Side::Source { wire.0 } else { wire.1 };
                    if i < end && end < j {
                        out.push(Violation::ArcEnclosesWire {
                            side,
                            arc: (i, j),
                            wire,
                        });
                    }
                }
            }
        }
        out
    }

    /// The straight-through matching on `w`.
    pub fn identity(w: &Word) -> Diagram {
        Diagram {
            source: w.clone(),
            target: w.clone(),
            through: (1..=w.len()).map(|i| (i, i)).collect(),
            source_arcs: Vec::new(),
            target_arcs: Vec::new(),
        }
    }

    /// The empty diagram `ε → ε`.
    pub fn empty() -> Diagram {
        Diagram::identity(&Word::empty())
    }

    /// Evaluation (cup) `w·w∨ → ε`: nested source arcs `(i, 2n+1-i)`.
    pub fn ev(w: &Word) -> Diagram {
        let n = w.len();
        Diagram {
            source: w.concat(&w.reverse_complement()),
            target: Word::empty(),
            through: Vec::new(),
            source_arcs: nested_pairs(n),
            target_arcs: Vec::new(),
        }
    }

    /// Coevaluation (cap) `ε → w∨·w`: nested target arcs `(i, 2n+1-i)`.
    pub fn coev(w: &Word) -> Diagram {
        let n = w.len();
        Diagram {
            source: Word::empty(),
            target: w.reverse_complement().concat(w),
            through: Vec::new(),
            source_arcs: Vec::new(),
            target_arcs: nested_pairs(n),
        }
    }

    /// Horizontal juxtaposition, `self` on the left.
    pub fn tensor(&self, other: &Diagram) -> Diagram {
        let (ds, dt) = (self.source.len(), self.target.len());
        let mut through = self.through.clone();
        through.extend(other.through.iter().map(|&(i, j)| (i + ds, j + dt)));
        let mut source_arcs = self.source_arcs.clone();
        source_arcs.extend(other.source_arcs.iter().map(|&(i, j)| (i + ds, j + ds)));
        let mut target_arcs = self.target_arcs.clone();
        target_arcs.extend(other.target_arcs.iter().map(|&(i, j)| (i + dt, j + dt)));
        // Offsets preserve sortedness, so the lists are already canonical.
        Diagram {
            source: self.source.concat(&other.source),
            target: self.target.concat(&other.target),
            through,
            source_arcs,
            target_arcs,
        }
    }

    /// Tensor of a sequence, left to right; the empty product is `id_ε`.
    pub fn tensor_all<'a>(parts: impl IntoIterator<Item = &'a Diagram>) -> Diagram {
        parts
            .into_iter()
            .fold(Diagram::empty(), |acc, d| acc.tensor(d))
    }

    /// `self` followed by `next` (that is, `next ∘ self`).
    pub fn then(&self, next: &Diagram) -> Result<(Diagram, LoopReport), DiagramError> {
        compose(self, next)
    }

    /// Views a structure on `w` as a state `ε → w`.
    pub fn from_structure(s: &SecondaryStructure) -> Diagram {
        Diagram {
            source: Word::empty(),
            target: s.word().clone(),
            through: Vec::new(),
            source_arcs: Vec::new(),
            target_arcs: s.arcs().to_vec(),
        }
    }

    /// The mirror image: source and target exchanged.
    pub fn reflect(&self) -> Diagram {
        Diagram::new_unchecked(
            self.target.clone(),
            self.source.clone(),
            self.through.iter().map(|&(i, j)| (j, i)).collect(),
            self.target_arcs.clone(),
            self.source_arcs.clone(),
        )
    }
}

fn nested_pairs(n: usize) -> Vec<Arc> {
    (1..=n).map(|i| (i, 2 * n + 1 - i)).collect()
}
