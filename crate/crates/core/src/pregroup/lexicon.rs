use std::collections::BTreeMap;

use serde::Deserialize;
use thiserror::Error;

use crate::dotbracket::{self, DotBracketError};
use crate::fold::{is_member, FoldConfig};
use crate::structure::SecondaryStructure;
use crate::word::{Word, WordError};

use super::{functor_object, PregroupError, PregroupType};

#[derive(Debug, Error)]
pub enum LexiconError {
    #[error("lexicon is not valid TOML: {0}")]
    Toml(#[from] toml::de::Error),
    #[error("type {basic:?}: {source}")]
    Sequence {
        basic: String,
        #[source]
        source: WordError,
    },
    #[error("entry {word:?}: {source}")]
    Type {
        word: String,
        #[source]
        source: PregroupError,
    },
    #[error("entry {word:?}: structure does not parse: {source}")]
    Structure {
        word: String,
        #[source]
        source: DotBracketError,
    },
    #[error("entry {word:?}: structure has {got} positions but F({ty}) has {expected}")]
    LengthMismatch {
        word: String,
        ty: String,
        expected: usize,
        got: usize,
    },
    #[error("entry {word:?}: structure violates the folding constraints (min loop {theta})")]
    NotMember { word: String, theta: usize },
}

/// A vocabulary word's grammatical type and its lexical state on `F(type)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub ty: PregroupType,
    pub structure: SecondaryStructure,
}

/// DNA assignments for basic types plus the lexical entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lexicon {
    assignments: BTreeMap<String, Word>,
    entries: BTreeMap<String, Entry>,
    theta: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LexiconFile {
    #[serde(default)]
    theta: usize,
    types: BTreeMap<String, String>,
    #[serde(default)]
    entries: BTreeMap<String, EntryFile>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct EntryFile {
    #[serde(rename = "type")]
    ty: String,
    structure: String,
}

impl Lexicon {
    pub fn new(assignments: BTreeMap<String, Word>, theta: usize) -> Self {
        Lexicon {
            assignments,
            entries: BTreeMap::new(),
            theta,
        }
    }

    /// Adds an entry after checking its structure lives on `F(ty)` and
    /// satisfies the lexicon's folding constraints.
    pub fn insert(
        &mut self,
        word: impl Into<String>,
        ty: PregroupType,
        structure: SecondaryStructure,
    ) -> Result<(), LexiconError> {
        let word = word.into();
        let image = functor_object(&ty, self).map_err(|source| LexiconError::Type {
            word: word.clone(),
            source,
        })?;
        if structure.word() != &image {
            return Err(LexiconError::LengthMismatch {
                word,
                ty: ty.to_string(),
                expected: image.len(),
                got: structure.len(),
            });
        }
        if !is_member(&structure, &FoldConfig::new(self.theta)) {
            return Err(LexiconError::NotMember {
                word,
                theta: self.theta,
            });
        }
        self.entries.insert(word, Entry { ty, structure });
        Ok(())
    }

    /// Entry structures are given as bracket lines only; the sequence is
    /// `F(type)`.
    pub fn from_toml_str(text: &str) -> Result<Lexicon, LexiconError> {
        let file: LexiconFile = toml::from_str(text)?;
        let mut assignments = BTreeMap::new();
        for (basic, seq) in file.types {
            let w: Word = seq.parse().map_err(|source| LexiconError::Sequence {
                basic: basic.clone(),
                source,
            })?;
            assignments.insert(basic, w);
        }
        let mut lex = Lexicon::new(assignments, file.theta);
        for (word, entry) in file.entries {
            let ty: PregroupType = entry.ty.parse().map_err(|source| LexiconError::Type {
                word: word.clone(),
                source,
            })?;
            let image = functor_object(&ty, &lex).map_err(|source| LexiconError::Type {
                word: word.clone(),
                source,
            })?;
            let brackets = entry.structure.trim();
            if brackets.chars().count() != image.len() {
                return Err(LexiconError::LengthMismatch {
                    word,
                    ty: ty.to_string(),
                    expected: image.len(),
                    got: brackets.chars().count(),
                });
            }
            let structure = dotbracket::parse_lines(&image.to_string(), brackets).map_err(
                |source| LexiconError::Structure {
                    word: word.clone(),
                    source,
                },
            )?;
            lex.insert(word, ty, structure)?;
        }
        Ok(lex)
    }

    pub fn assignment(&self, basic: &str) -> Option<&Word> {
        self.assignments.get(basic)
    }

    pub fn entry(&self, word: &str) -> Option<&Entry> {
        self.entries.get(word)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&str, &Entry)> {
        self.entries.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn theta(&self) -> usize {
        self.theta
    }
}
