use super::{PregroupType, SimpleTerm};

/// A contraction-only reduction of a flattened term sequence.
///
/// Indices are 1-based positions in the flattened sequence. Links are
/// noncrossing, each joins `a^z` to `a^(z+1)`, and no survivor sits under a
/// link (everything between a linked pair must itself have contracted).
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct ReductionProof {
    pub links: Vec<(usize, usize)>,
    pub survivors: Vec<usize>,
}

impl ReductionProof {
    /// Checks this proof against the flattened terms it claims to reduce and
    /// the goal its survivors should spell.
    pub fn check(&self, terms: &PregroupType, goal: &PregroupType) -> Result<(), String> {
        let terms = terms.terms();
        let n = terms.len();
        let mut owner = vec![false; n + 1];
        let mut claim = |p: usize| -> Result<(), String> {
            if p == 0 || p > n {
                return Err(format!("index {p} outside 1..={n}"));
            }
            if owner[p] {
                return Err(format!("index {p} used twice"));
            }
            owner[p] = true;
            Ok(())
        };
        for &(p, q) in &self.links {
            if p >= q {
                return Err(format!("link ({p},{q}) must have p < q"));
            }
            claim(p)?;
            claim(q)?;
            if !terms[p - 1].contracts_with(&terms[q - 1]) {
                return Err(format!(
                    "link ({p},{q}) joins {} and {}, which do not contract",
                    terms[p - 1],
                    terms[q - 1]
                ));
            }
        }
        for &s in &self.survivors {
            claim(s)?;
        }
        if let Some(p) = (1..=n).find(|&p| !owner[p]) {
            return Err(format!("index {p} is neither linked nor a survivor"));
        }
        for (a, &(p, q)) in self.links.iter().enumerate() {
            for &(r, s) in &self.links[a + 1..] {
                if (p < r && r < q && q < s) || (r < p && p < s && s < q) {
                    return Err(format!("links ({p},{q}) and ({r},{s}) cross"));
                }
            }
            if let Some(s) = self.survivors.iter().find(|&&s| p < s && s < q) {
                return Err(format!("survivor {s} is trapped under link ({p},{q})"));
            }
        }
        if !self.survivors.windows(2).all(|w| w[0] < w[1]) {
            return Err("survivors must be in increasing order".into());
        }
        let spelled: Vec<&SimpleTerm> = self.survivors.iter().map(|&s| &terms[s - 1]).collect();
        if spelled.len() != goal.terms().len() || spelled.iter().zip(goal.terms()).any(|(a, b)| *a != b) {
            return Err(format!("survivors do not spell the goal {goal}"));
        }
        Ok(())
    }
}

struct Search<'a> {
    terms: &'a [SimpleTerm],
    goal: &'a [SimpleTerm],
    // reducible[i][j]: terms[i..j] contract away completely.
    reducible: Vec<Vec<bool>>,
    // reaches[p][g]: terms[p..] reduce to goal[g..].
    reaches: Vec<Vec<bool>>,
}

impl<'a> Search<'a> {
    fn new(terms: &'a [SimpleTerm], goal: &'a [SimpleTerm]) -> Self {
        let n = terms.len();
        let mut reducible = vec![vec![false; n + 1]; n + 1];
        for i in (0..=n).rev() {
            reducible[i][i] = true;
            for j in i + 1..=n {
                reducible[i][j] = (i + 1..j).any(|k| {
                    terms[i].contracts_with(&terms[k]) && reducible[i + 1][k] && reducible[k + 1][j]
                });
            }
        }
        let m = goal.len();
        let mut reaches = vec![vec![false; m + 1]; n + 1];
        reaches[n][m] = true;
        for p in (0..n).rev() {
            for g in 0..=m {
                let survive = g < m && terms[p] == goal[g] && reaches[p + 1][g + 1];
                let link = (p + 1..n).any(|k| {
                    terms[p].contracts_with(&terms[k]) && reducible[p + 1][k] && reaches[k + 1][g]
                });
                reaches[p][g] = survive || link;
            }
        }
        Search {
            terms,
            goal,
            reducible,
            reaches,
        }
    }

    fn inner_link_choices(&self, i: usize, j: usize) -> impl Iterator<Item = usize> + '_ {
        (i + 1..j).filter(move |&k| {
            self.terms[i].contracts_with(&self.terms[k])
                && self.reducible[i + 1][k]
                && self.reducible[k + 1][j]
        })
    }

    fn top_link_choices(&self, p: usize, g: usize) -> impl Iterator<Item = usize> + '_ {
        (p + 1..self.terms.len()).filter(move |&k| {
            self.terms[p].contracts_with(&self.terms[k])
                && self.reducible[p + 1][k]
                && self.reaches[k + 1][g]
        })
    }

    fn can_survive(&self, p: usize, g: usize) -> bool {
        g < self.goal.len() && self.terms[p] == self.goal[g] && self.reaches[p + 1][g + 1]
    }

    // Canonical choice: contract whenever possible, with the nearest partner.

    fn first_inner(&self, i: usize, j: usize, links: &mut Vec<(usize, usize)>) {
        if i == j {
            return;
        }
        let k = self
            .inner_link_choices(i, j)
            .next()
            .expect("reducible interval has a link");
        links.push((i + 1, k + 1));
        self.first_inner(i + 1, k, links);
        self.first_inner(k + 1, j, links);
    }

    fn first_top(&self, p: usize, g: usize, proof: &mut ReductionProof) {
        if p == self.terms.len() {
            return;
        }
        if let Some(k) = self.top_link_choices(p, g).next() {
            proof.links.push((p + 1, k + 1));
            self.first_inner(p + 1, k, &mut proof.links);
            self.first_top(k + 1, g, proof);
        } else {
            debug_assert!(self.can_survive(p, g));
            proof.survivors.push(p + 1);
            self.first_top(p + 1, g + 1, proof);
        }
    }

    fn all_inner(&self, i: usize, j: usize) -> Vec<Vec<(usize, usize)>> {
        if i == j {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for k in self.inner_link_choices(i, j) {
            let inside = self.all_inner(i + 1, k);
            let after = self.all_inner(k + 1, j);
            for a in &inside {
                for b in &after {
                    let mut links = vec![(i + 1, k + 1)];
                    links.extend_from_slice(a);
                    links.extend_from_slice(b);
                    out.push(links);
                }
            }
        }
        out
    }

    fn all_top(&self, p: usize, g: usize) -> Vec<ReductionProof> {
        if p == self.terms.len() {
            return vec![ReductionProof::default()];
        }
        let mut out = Vec::new();
        for k in self.top_link_choices(p, g) {
            let inside = self.all_inner(p + 1, k);
            let rest = self.all_top(k + 1, g);
            for a in &inside {
                for r in &rest {
                    let mut links = vec![(p + 1, k + 1)];
                    links.extend_from_slice(a);
                    links.extend_from_slice(&r.links);
                    out.push(ReductionProof {
                        links,
                        survivors: r.survivors.clone(),
                    });
                }
            }
        }
        if self.can_survive(p, g) {
            for mut r in self.all_top(p + 1, g + 1) {
                r.survivors.insert(0, p + 1);
                out.push(r);
            }
        }
        out
    }
}

fn normalize(mut proof: ReductionProof) -> ReductionProof {
    proof.links.sort_unstable();
    proof
}

/// Canonical contraction proof that the product of `types` reduces to
/// `goal`, or `None` when the sequence is ungrammatical for that goal.
pub fn reduce(types: &[PregroupType], goal: &PregroupType) -> Option<ReductionProof> {
    let flat = PregroupType::flatten(types);
    let search = Search::new(flat.terms(), goal.terms());
    if !search.reaches[0][0] {
        return None;
    }
    let mut proof = ReductionProof::default();
    search.first_top(0, 0, &mut proof);
    Some(normalize(proof))
}

/// Every contraction proof, canonical one first.
pub fn reduce_all(types: &[PregroupType], goal: &PregroupType) -> Vec<ReductionProof> {
    let flat = PregroupType::flatten(types);
    let search = Search::new(flat.terms(), goal.terms());
    if !search.reaches[0][0] {
        return Vec::new();
    }
    search.all_top(0, 0).into_iter().map(normalize).collect()
}
