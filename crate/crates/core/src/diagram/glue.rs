//! Path tracing on a glued matching graph.
//!
//! Both composition routes reduce to the same problem: a graph in which every
//! node has degree at most two, some nodes lie on the outer boundary and the
//! rest are interior. Each connected component is a path or a cycle; only
//! paths joining two boundary nodes survive.

use crate::word::{Base, PairType};

use super::LoopReport;

#[derive(Debug, Clone, Copy)]
struct Edge {
    ends: [usize; 2],
    bond: bool,
}

pub(crate) struct Gluing {
    bases: Vec<Base>,
    boundary: Vec<bool>,
    edges: Vec<Edge>,
    incident: Vec<Vec<usize>>,
}

/// A surviving component: a path between two boundary nodes.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Strand {
    pub ends: (usize, usize),
    /// Bond edges consumed along the path.
    pub bonds: usize,
}

impl Gluing {
    pub fn new(bases: Vec<Base>, boundary: Vec<bool>) -> Self {
        debug_assert_eq!(bases.len(), boundary.len());
        let n = bases.len();
        Gluing {
            bases,
            boundary,
            edges: Vec::new(),
            incident: vec![Vec::new(); n],
        }
    }

    /// Adds an edge; `bond` marks base-pair arcs (as opposed to identity
    /// wires).
    pub fn connect(&mut self, u: usize, v: usize, bond: bool) {
        let id = self.edges.len();
        self.edges.push(Edge { ends: [u, v], bond });
        self.incident[u].push(id);
        self.incident[v].push(id);
        debug_assert!(self.incident[u].len() <= 2 && self.incident[v].len() <= 2);
    }

    /// Walks from `start` along unused edges until the path ends or returns
    /// to `start`. Returns the far node and the (edge, bond) tallies.
    fn walk(&self, start: usize, used: &mut [bool], seen: &mut [bool]) -> (usize, usize, usize) {
        let mut node = start;
        let mut edges = 0;
        let mut bonds = 0;
        seen[node] = true;
        loop {
            let next = self.incident[node].iter().copied().find(|&e| !used[e]);
            let Some(e) = next else { break };
            used[e] = true;
            edges += 1;
            if self.edges[e].bond {
                bonds += 1;
            }
            let [a, b] = self.edges[e].ends;
            node = if a == node { b } else { a };
            seen[node] = true;
            if node == start {
                break;
            }
        }
        (node, edges, bonds)
    }

    /// Classifies every component, filling in the erasure fields of the
    /// report. Strands are returned with `ends.0 < ends.1`; bond accounting
    /// for them is left to the caller, which knows what each becomes.
    pub fn trace(&self, report: &mut LoopReport) -> Vec<Strand> {
        let n = self.bases.len();
        let mut used = vec![false; self.edges.len()];
        let mut seen = vec![false; n];
        let mut strands = Vec::new();

        // Paths touching the boundary.
        for start in 0..n {
            if !self.boundary[start] || seen[start] {
                continue;
            }
            if self.incident[start].is_empty() {
                seen[start] = true;
                continue;
            }
            let (end, _, bonds) = self.walk(start, &mut used, &mut seen);
            if self.boundary[end] {
                let ends = (start.min(end), start.max(end));
                strands.push(Strand { ends, bonds });
            } else {
                report.dangled_endpoints += 1;
                report.dangle_bonds_erased += bonds;
            }
        }

        // Interior paths: start from dead ends (degree < 2).
        for start in 0..n {
            if seen[start] || self.incident[start].len() == 2 {
                continue;
            }
            let (_, _, bonds) = self.walk(start, &mut used, &mut seen);
            report.erased_open_paths += 1;
            report.open_path_bonds_erased += bonds;
        }

        // Whatever remains lies on cycles.
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let (_, _, bonds) = self.walk(start, &mut used, &mut seen);
            match self.bases[start].pair_type() {
                PairType::AT => report.closed_loops_at += 1,
                PairType::CG => report.closed_loops_cg += 1,
            }
            report.loop_bonds_erased += bonds;
        }
        strands
    }
}
