//! Enumeration, counting and maximum-bond folding of the secondary structures
//! on a word (the hom-set `Hom(ε, w)`).

use num_bigint::BigUint;

use crate::structure::{Arc, SecondaryStructure};
use crate::word::Word;

/// Folding constraints.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FoldConfig {
    /// Minimum number of positions strictly inside every arc: `j - i - 1 >= min_loop`.
    pub min_loop: usize,
}

impl FoldConfig {
    pub fn new(min_loop: usize) -> Self {
        FoldConfig { min_loop }
    }

    fn allows(&self, (i, j): Arc) -> bool {
        j - i > self.min_loop
    }
}

fn pairable(w: &Word, cfg: &FoldConfig, i: usize, j: usize) -> bool {
    i < j && cfg.allows((i, j)) && w.at(i).pairs_with(w.at(j))
}

/// True iff `s` is a valid structure whose arcs all respect `cfg.min_loop`.
pub fn is_member(s: &SecondaryStructure, cfg: &FoldConfig) -> bool {
    s.is_valid() && s.arcs().iter().all(|&arc| cfg.allows(arc))
}

/// Lazily yields every structure on a word in lexicographic order of the
/// sorted arc list; the empty structure comes first.
pub struct Structures {
    word: Word,
    candidates: Vec<Arc>,
    // Each frame: the arcs chosen so far and the next candidate to try.
    stack: Vec<(Vec<Arc>, usize)>,
    started: bool,
}

impl Structures {
    fn extendable(arcs: &[Arc], (i, j): Arc) -> bool {
        match arcs.last() {
            // New arcs start strictly after every chosen one.
            Some(&(last_i, _)) if i <= last_i => false,
            _ => arcs.iter().all(|&(_, b)| {
                // a < i always holds here.
                if i < b {
                    j < b
                } else {
                    i > b
                }
            }),
        }
    }
}

impl Iterator for Structures {
    type Item = SecondaryStructure;

    fn next(&mut self) -> Option<SecondaryStructure> {
        if !self.started {
            self.started = true;
            self.stack.push((Vec::new(), 0));
            return Some(SecondaryStructure::empty(self.word.clone()));
        }
        loop {
            let (arcs, cursor) = self.stack.last_mut()?;
            let found = (*cursor..self.candidates.len())
                .find(|&k| Self::extendable(arcs, self.candidates[k]));
            match found {
                Some(k) => {
                    *cursor = k + 1;
                    let mut next = arcs.clone();
                    next.push(self.candidates[k]);
                    self.stack.push((next.clone(), k + 1));
                    return Some(SecondaryStructure::new_unchecked(self.word.clone(), next));
                }
                None => {
                    self.stack.pop();
                }
            }
        }
    }
}

pub fn enumerate(w: &Word, cfg: &FoldConfig) -> Structures {
    let n = w.len();
    let candidates = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .filter(|&(i, j)| pairable(w, cfg, i, j))
        .collect();
    Structures {
        word: w.clone(),
        candidates,
        stack: Vec::new(),
        started: false,
    }
}

/// Number of structures, by interval recursion (never materializes them).
pub fn count(w: &Word, cfg: &FoldConfig) -> BigUint {
    let n = w.len();
    // table[i][j] counts structures on positions i..=j; i > j is the empty
    // interval. Indices run 1..=n+1 so `j = i - 1` is representable.
    let one = BigUint::from(1u32);
    let mut table = vec![vec![one.clone(); n + 2]; n + 2];
    for i in (1..=n).rev() {
        for j in i..=n {
            let mut total = table[i + 1][j].clone();
            for k in i + 1..=j {
                if pairable(w, cfg, i, k) {
                    total += &table[i + 1][k - 1] * &table[k + 1][j];
                }
            }
            table[i][j] = total;
        }
    }
    if n == 0 {
        one
    } else {
        table[1][n].clone()
    }
}

/// Maximum bond count and every structure attaining it, in enumeration order.
pub fn max_bond(w: &Word, cfg: &FoldConfig) -> (usize, Vec<SecondaryStructure>) {
    let n = w.len();
    let mut best = vec![vec![0usize; n + 2]; n + 2];
    for i in (1..=n).rev() {
        for j in i..=n {
            let mut m = best[i + 1][j];
            for k in i + 1..=j {
                if pairable(w, cfg, i, k) {
                    m = m.max(1 + best[i + 1][k - 1] + best[k + 1][j]);
                }
            }
            best[i][j] = m;
        }
    }
    let top = if n == 0 { 0 } else { best[1][n] };

    fn witnesses(
        w: &Word,
        cfg: &FoldConfig,
        best: &[Vec<usize>],
        i: usize,
        j: usize,
    ) -> Vec<Vec<Arc>> {
        if i > j {
            return vec![Vec::new()];
        }
        let target = best[i][j];
        let mut out = Vec::new();
        if best[i + 1][j] == target {
            out.extend(witnesses(w, cfg, best, i + 1, j));
        }
        for k in i + 1..=j {
            if pairable(w, cfg, i, k) && 1 + best[i + 1][k - 1] + best[k + 1][j] == target {
                let inner = witnesses(w, cfg, best, i + 1, k - 1);
                let outer = witnesses(w, cfg, best, k + 1, j);
                for a in &inner {
                    for b in &outer {
                        let mut arcs = Vec::with_capacity(1 + a.len() + b.len());
                        arcs.push((i, k));
                        arcs.extend_from_slice(a);
                        arcs.extend_from_slice(b);
                        out.push(arcs);
                    }
                }
            }
        }
        out
    }

    let mut all: Vec<Vec<Arc>> = if n == 0 {
        vec![Vec::new()]
    } else {
        witnesses(w, cfg, &best, 1, n)
    };
    for arcs in &mut all {
        arcs.sort_unstable();
    }
    all.sort();
    let structures = all
        .into_iter()
        .map(|arcs| SecondaryStructure::new_unchecked(w.clone(), arcs))
        .collect();
    (top, structures)
}
