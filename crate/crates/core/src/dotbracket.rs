//! Dot-bracket text encoding: a sequence line followed by a bracket line.

use thiserror::Error;

use crate::structure::{InvalidStructure, SecondaryStructure};
use crate::word::{Word, WordError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DotBracketError {
    #[error("expected a sequence line and a bracket line, found {0} line(s)")]
    LineCount(usize),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("sequence has {seq} bases but bracket line has {brackets} characters")]
    LengthMismatch { seq: usize, brackets: usize },
    #[error("unexpected character {ch:?} at position {pos} in bracket line")]
    BadChar { ch: char, pos: usize },
    #[error("unmatched ')' at position {0}")]
    UnmatchedClose(usize),
    #[error("unmatched '(' at position {0}")]
    UnmatchedOpen(usize),
    #[error(transparent)]
    Invalid(#[from] InvalidStructure),
}

/// Parses a structure from its sequence and bracket lines.
pub fn parse_lines(sequence: &str, brackets: &str) -> Result<SecondaryStructure, DotBracketError> {
    let word: Word = sequence.trim_end_matches('\r').parse()?;
    let brackets = brackets.trim_end_matches('\r');
    let n = brackets.chars().count();
    if n != word.len() {
        return Err(DotBracketError::LengthMismatch {
            seq: word.len(),
            brackets: n,
        });
    }
    let mut stack = Vec::new();
    let mut arcs = Vec::new();
    for (idx, ch) in brackets.chars().enumerate() {
        let pos = idx + 1;
        match ch {
            '(' => stack.push(pos),
            ')' => {
                let open = stack.pop().ok_or(DotBracketError::UnmatchedClose(pos))?;
                arcs.push((open, pos));
            }
            '.' => {}
            _ => return Err(DotBracketError::BadChar { ch, pos }),
        }
    }
    if let Some(&open) = stack.last() {
        return Err(DotBracketError::UnmatchedOpen(open));
    }
    Ok(SecondaryStructure::new(word, arcs)?)
}

/// Parses a two-line dot-bracket document.
pub fn parse(text: &str) -> Result<SecondaryStructure, DotBracketError> {
    let lines: Vec<&str> = text.split('\n').collect();
    // A trailing newline leaves one empty element.
    let lines = match lines.split_last() {
        Some((last, rest)) if last.is_empty() && !rest.is_empty() => rest,
        _ => &lines[..],
    };
    match lines {
        [seq, brackets] => parse_lines(seq, brackets),
        _ => Err(DotBracketError::LineCount(lines.len())),
    }
}

/// Parses every record of a stream of concatenated two-line documents.
pub fn parse_records(text: &str) -> Result<Vec<SecondaryStructure>, DotBracketError> {
    let mut lines = text.split('\n').collect::<Vec<_>>();
    if lines.last() == Some(&"") {
        lines.pop();
    }
    if lines.len() % 2 != 0 {
        return Err(DotBracketError::LineCount(lines.len()));
    }
    lines
        .chunks(2)
        .map(|pair| parse_lines(pair[0], pair[1]))
        .collect()
}

/// The bracket line alone.
pub fn bracket_line(s: &SecondaryStructure) -> String {
    let mut chars = vec!['.'; s.len()];
    for &(i, j) in s.arcs() {
        chars[i - 1] = '(';
        chars[j - 1] = ')';
    }
    chars.into_iter().collect()
}

/// Two-line document, LF-terminated.
pub fn emit(s: &SecondaryStructure) -> String {
    format!("{}\n{}\n", s.word(), bracket_line(s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::word;

    #[test]
    fn single_pair() {
        let s = parse_lines("AT", "()").unwrap();
        assert_eq!(s.arcs(), &[(1, 2)]);
        assert_eq!(emit(&s), "AT\n()\n");
    }

    #[test]
    fn hairpin() {
        let s = parse("ACGTAGGGTACGT\n(((((...)))))\n").unwrap();
        assert_eq!(s.arcs(), &[(1, 13), (2, 12), (3, 11), (4, 10), (5, 9)]);
        assert_eq!(bracket_line(&s), "(((((...)))))");
    }

    #[test]
    fn non_complementary_rejected() {
        assert!(matches!(
            parse_lines("ACGT", ".(.)"),
            Err(DotBracketError::Invalid(_))
        ));
        // (1,4) is A-T, so this one is fine
        assert!(parse_lines("ACGT", "(..)").is_ok());
    }

    #[test]
    fn shape_errors() {
        assert_eq!(
            parse_lines("ACG", "()"),
            Err(DotBracketError::LengthMismatch { seq: 3, brackets: 2 })
        );
        assert_eq!(parse_lines("AT", ")("), Err(DotBracketError::UnmatchedClose(1)));
        assert_eq!(parse_lines("ATA", "((."), Err(DotBracketError::UnmatchedOpen(2)));
        assert_eq!(
            parse_lines("AT", "[]"),
            Err(DotBracketError::BadChar { ch: '[', pos: 1 })
        );
        assert_eq!(parse("AT\n"), Err(DotBracketError::LineCount(1)));
        assert!(matches!(parse_lines("AX", ".."), Err(DotBracketError::Word(_))));
    }

    #[test]
    fn released_strand_has_no_arcs() {
        let s = SecondaryStructure::empty(word("GAGAGA"));
        assert_eq!(emit(&s), "GAGAGA\n......\n");
    }

    #[test]
    fn empty_word() {
        let s = parse("\n\n").unwrap();
        assert!(s.is_empty());
        assert_eq!(emit(&s), "\n\n");
    }

    #[test]
    fn lowercase_is_canonicalized() {
        let s = parse("acgt\n(())\n").unwrap();
        assert_eq!(emit(&s), "ACGT\n(())\n");
    }

    #[test]
    fn record_stream() {
        let recs = parse_records("AT\n..\nAT\n()\n").unwrap();
        assert_eq!(recs.len(), 2);
        assert_eq!(recs[1].arcs(), &[(1, 2)]);
    }
}
