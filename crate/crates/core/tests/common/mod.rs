#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};
use std::path::PathBuf;

use dnacat::fold::{self, FoldConfig};
use dnacat::structure::Arc;
use dnacat::{unbend, Base, Diagram, SecondaryStructure, Word};
use rand::seq::SliceRandom;
use rand::Rng;

pub const BASES: [Base; 4] = [Base::A, Base::C, Base::G, Base::T];

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

pub fn read_fixture(name: &str) -> String {
    std::fs::read_to_string(fixture(name)).unwrap()
}

pub fn random_word_of_len(rng: &mut impl Rng, len: usize) -> Word {
    Word::new((0..len).map(|_| *BASES.choose(rng).unwrap()).collect())
}

pub fn random_word(rng: &mut impl Rng, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    random_word_of_len(rng, len)
}

/// Uniform over the enumerated structures on `w`.
pub fn random_structure(rng: &mut impl Rng, w: &Word) -> SecondaryStructure {
    let all: Vec<SecondaryStructure> = fold::enumerate(w, &FoldConfig::default()).collect();
    all.choose(rng).unwrap().clone()
}

/// A random valid diagram `x → y`, obtained by unbending a random structure
/// on `x∨·y`.
pub fn random_diagram(rng: &mut impl Rng, x: &Word, y: &Word) -> Diagram {
    let s = random_structure(rng, &x.reverse_complement().concat(y));
    unbend(&s, x.len()).unwrap()
}

/// Subset filter over complementary pairs, with its own validity check.
pub fn brute_force_structures(w: &Word, min_loop: usize) -> BTreeSet<Vec<Arc>> {
    let n = w.len();
    let candidates: Vec<Arc> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .filter(|&(i, j)| j - i > min_loop && w.at(i).complement() == w.at(j))
        .collect();
    assert!(candidates.len() < 24, "oracle too large");
    let mut out = BTreeSet::new();
    'mask: for mask in 0u32..(1 << candidates.len()) {
        let chosen: Vec<Arc> = (0..candidates.len())
            .filter(|b| mask & (1 << b) != 0)
            .map(|b| candidates[b])
            .collect();
        let mut used = vec![false; n + 1];
        for &(i, j) in &chosen {
            if used[i] || used[j] {
                continue 'mask;
            }
            used[i] = true;
            used[j] = true;
        }
        for &(i, j) in &chosen {
            for &(k, l) in &chosen {
                if i < k && k < j && j < l {
                    continue 'mask;
                }
            }
        }
        out.insert(chosen);
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Node {
    X(usize),
    Y(usize),
    Z(usize),
}

/// Reference composite plus (closed loops, dangled endpoints), by walking
/// paths node to node. `None` on an interface mismatch.
pub fn compose_oracle(f: &Diagram, g: &Diagram) -> Option<(Diagram, usize, usize)> {
    if f.target() != g.source() {
        return None;
    }
    let mut edges: Vec<(Node, Node)> = Vec::new();
    edges.extend(f.through().iter().map(|&(i, j)| (Node::X(i), Node::Y(j))));
    edges.extend(f.source_arcs().iter().map(|&(i, j)| (Node::X(i), Node::X(j))));
    edges.extend(f.target_arcs().iter().map(|&(i, j)| (Node::Y(i), Node::Y(j))));
    edges.extend(g.through().iter().map(|&(j, k)| (Node::Y(j), Node::Z(k))));
    edges.extend(g.source_arcs().iter().map(|&(i, j)| (Node::Y(i), Node::Y(j))));
    edges.extend(g.target_arcs().iter().map(|&(i, j)| (Node::Z(i), Node::Z(j))));
    let mut incident: HashMap<Node, Vec<usize>> = HashMap::new();
    for (e, &(u, v)) in edges.iter().enumerate() {
        incident.entry(u).or_default().push(e);
        incident.entry(v).or_default().push(e);
    }
    let other = |e: usize, n: Node| if edges[e].0 == n { edges[e].1 } else { edges[e].0 };

    let mut used = vec![false; edges.len()];
    let (mut through, mut src, mut tgt) = (Vec::new(), Vec::new(), Vec::new());
    let mut dangles = 0;
    let boundary: Vec<Node> = (1..=f.source().len())
        .map(Node::X)
        .chain((1..=g.target().len()).map(Node::Z))
        .collect();
    for &start in &boundary {
        let Some(&first) = incident.get(&start).and_then(|v| v.first()) else {
            continue;
        };
        if used[first] {
            continue;
        }
        let (mut at, mut e) = (start, first);
        let end = loop {
            used[e] = true;
            at = other(e, at);
            if !matches!(at, Node::Y(_)) {
                break Some(at);
            }
            match incident[&at].iter().find(|&&n| !used[n]) {
                Some(&n) => e = n,
                None => break None,
            }
        };
        match (start, end) {
            (_, None) => dangles += 1,
            (Node::X(i), Some(Node::Z(k))) => through.push((i, k)),
            (Node::Z(k), Some(Node::X(i))) => through.push((i, k)),
            (Node::X(i), Some(Node::X(j))) => src.push((i.min(j), i.max(j))),
            (Node::Z(i), Some(Node::Z(j))) => tgt.push((i.min(j), i.max(j))),
            _ => unreachable!(),
        }
    }
    // Whatever remains unused lives on y only: open paths and cycles.
    let mut loops = 0;
    for e in 0..edges.len() {
        if used[e] {
            continue;
        }
        let (mut at, mut cur) = (edges[e].0, e);
        let start = at;
        // Walk one way until a dead end or back to the start.
        let closed = loop {
            used[cur] = true;
            at = other(cur, at);
            if at == start {
                break true;
            }
            match incident[&at].iter().find(|&&n| !used[n]) {
                Some(&n) => cur = n,
                None => break false,
            }
        };
        if closed {
            loops += 1;
        } else {
            // Finish the other direction of an open path.
            let mut at = start;
            while let Some(&n) = incident[&at].iter().find(|&&n| !used[n]) {
                used[n] = true;
                at = other(n, at);
            }
        }
    }
    let d = Diagram::new_unchecked(f.source().clone(), g.target().clone(), through, src, tgt);
    Some((d, loops, dangles))
}

/// A random in-range partial matching on `x∨·y`, unbent without any typing
/// or planarity check.
pub fn random_raw_diagram(rng: &mut impl Rng, x: &Word, y: &Word) -> Diagram {
    let n = x.len() + y.len();
    let mut positions: Vec<usize> = (1..=n).collect();
    positions.shuffle(rng);
    let pairs = rng.gen_range(0..=n / 2);
    let arcs: Vec<Arc> = positions
        .chunks(2)
        .take(pairs)
        .filter(|c| c.len() == 2)
        .map(|c| (c[0].min(c[1]), c[0].max(c[1])))
        .collect();
    let s = SecondaryStructure::new_unchecked(x.reverse_complement().concat(y), arcs);
    unbend(&s, x.len()).unwrap()
}

/// Checks an SVG parses and that every arc or wire starts and ends on the
/// rim of its base glyphs, colored by pair type. Returns the problems found.
pub fn svg_problems(svg: &str, at_color: &str, cg_color: &str) -> Vec<String> {
    let doc = match roxmltree::Document::parse(svg) {
        Ok(d) => d,
        Err(e) => return vec![format!("not well-formed: {e}")],
    };
    let mut glyphs: HashMap<(String, usize), (f64, f64, f64, char)> = HashMap::new();
    for g in doc.descendants().filter(|n| n.attribute("class") == Some("base")) {
        let row = g.attribute("data-row").unwrap().to_string();
        let pos: usize = g.attribute("data-pos").unwrap().parse().unwrap();
        let c = g.children().find(|n| n.has_tag_name("circle")).unwrap();
        let t = g.children().find(|n| n.has_tag_name("text")).unwrap();
        let num = |a: &str| c.attribute(a).unwrap().parse::<f64>().unwrap();
        let base = t.text().unwrap().chars().next().unwrap();
        glyphs.insert((row, pos), (num("cx"), num("cy"), num("r"), base));
    }
    let mut problems = Vec::new();
    for p in doc.descendants().filter(|n| n.has_tag_name("path")) {
        let class = p.attribute("class").unwrap_or("");
        let (rows, rims) = match class {
            "arc" => (("structure", "structure"), (-1.0, -1.0)),
            "source-arc" => (("source", "source"), (1.0, 1.0)),
            "target-arc" => (("target", "target"), (-1.0, -1.0)),
            "wire" => (("source", "target"), (1.0, -1.0)),
            "direction" => continue,
            other => {
                problems.push(format!("unexpected path class {other:?}"));
                continue;
            }
        };
        let i: usize = p.attribute("data-i").unwrap().parse().unwrap();
        let j: usize = p.attribute("data-j").unwrap().parse().unwrap();
        let nums: Vec<f64> = p
            .attribute("d")
            .unwrap()
            .split_whitespace()
            .filter_map(|t| t.parse().ok())
            .collect();
        let start = (nums[0], nums[1]);
        let end = (nums[nums.len() - 2], nums[nums.len() - 1]);
        let a = glyphs[&(rows.0.to_string(), i)];
        let b = glyphs[&(rows.1.to_string(), j)];
        let near = |x: f64, y: f64| (x - y).abs() < 1e-6;
        if !near(start.0, a.0) || !near(start.1, a.1 + rims.0 * a.2) {
            problems.push(format!("{class} ({i},{j}) does not start at its glyph"));
        }
        if !near(end.0, b.0) || !near(end.1, b.1 + rims.1 * b.2) {
            problems.push(format!("{class} ({i},{j}) does not end at its glyph"));
        }
        let expected = if matches!(a.3, 'A' | 'T') { at_color } else { cg_color };
        if p.attribute("stroke") != Some(expected) {
            problems.push(format!("{class} ({i},{j}) has the wrong color"));
        }
    }
    problems
}
