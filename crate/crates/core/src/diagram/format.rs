//! `.ddna` text format.
//!
//! ```text
//! ATCGC        source word (`-` for ε)
//! AGCTCG       target word
//! T 1 1        through-wire (source i, target j)
//! S 4 5        source arc
//! A 5 6        target arc
//! ```
//!
//! Positions are 1-based, `#` starts a comment, blank lines are ignored.
//! [`emit`] writes the canonical form (sorted edges, no comments), which
//! [`parse`] reads back byte-for-byte.

use thiserror::Error;

use crate::word::{Word, WordError};

use super::Diagram;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: missing {what}")]
    Missing { line: usize, what: &'static str },
    #[error("line {line}: {source}")]
    Word {
        line: usize,
        #[source]
        source: WordError,
    },
    #[error("line {line}: expected `T|S|A i j`, found {text:?}")]
    BadEdge { line: usize, text: String },
}

fn content(line: &str) -> &str {
    match line.find('#') {
        Some(cut) => line[..cut].trim(),
        None => line.trim(),
    }
}

/// Reads a diagram without validating its invariants.
pub fn parse(text: &str) -> Result<Diagram, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(n, l)| (n + 1, content(l)))
        .filter(|(_, l)| !l.is_empty());

    let mut boundary = |what| {
        let (line, text) = lines.next().ok_or(FormatError::Missing { line: 0, what })?;
        Word::parse_boundary(text).map_err(|source| FormatError::Word { line, source })
    };
    let source = boundary("source word")?;
    let target = boundary("target word")?;

    let mut through = Vec::new();
    let mut source_arcs = Vec::new();
    let mut target_arcs = Vec::new();
    for (line, text) in lines {
        let bad = || FormatError::BadEdge {
            line,
            text: text.to_string(),
        };
        let fields: Vec<&str> = text.split_whitespace().collect();
        let [tag, i, j] = fields[..] else {
            return Err(bad());
        };
        let i: usize = i.parse().map_err(|_| bad())?;
        let j: usize = j.parse().map_err(|_| bad())?;
        match tag {
            "T" => through.push((i, j)),
            "S" => source_arcs.push((i, j)),
            "A" => target_arcs.push((i, j)),
            _ => return Err(bad()),
        }
    }
    Ok(Diagram::new_unchecked(
        source,
        target,
        through,
        source_arcs,
        target_arcs,
    ))
}

pub fn emit(d: &Diagram) -> String {
    let mut out = String::new();
    out.push_str(&d.source().to_boundary_string());
    out.push('\n');
    out.push_str(&d.target().to_boundary_string());
    out.push('\n');
    for (tag, edges) in [
        ('T', d.through()),
        ('S', d.source_arcs()),
        ('A', d.target_arcs()),
    ] {
        for (i, j) in edges {
            out.push_str(&format!("{tag} {i} {j}\n"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::word;

    #[test]
    fn canonical_round_trip() {
        let text = "ATCGC\nAGCTCG\nT 1 1\nT 3 3\nS 4 5\nA 5 6\n";
        let d = parse(text).unwrap();
        assert!(d.is_valid());
        assert_eq!(emit(&d), text);
    }

    #[test]
    fn comments_and_epsilon() {
        let d = parse("# toehold release\nGAATCTCTC\n-  # empty target\n\n").unwrap();
        assert_eq!(d.source(), &word("GAATCTCTC"));
        assert!(d.target().is_empty());
        assert_eq!(emit(&d), "GAATCTCTC\n-\n");
    }

    #[test]
    fn edges_are_sorted_on_emit() {
        let d = parse("AT\nAT\nT 2 2\nT 1 1\n").unwrap();
        assert_eq!(emit(&d), "AT\nAT\nT 1 1\nT 2 2\n");
    }

    #[test]
    fn errors() {
        assert!(matches!(parse(""), Err(FormatError::Missing { .. })));
        assert!(matches!(parse("AT\n"), Err(FormatError::Missing { .. })));
        assert!(matches!(
            parse("AX\n-\n"),
            Err(FormatError::Word { line: 1, .. })
        ));
        assert!(matches!(
            parse("AT\n-\nS 1\n"),
            Err(FormatError::BadEdge { line: 3, .. })
        ));
        assert!(matches!(
            parse("AT\n-\nX 1 2\n"),
            Err(FormatError::BadEdge { .. })
        ));
    }
}
