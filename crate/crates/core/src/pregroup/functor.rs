use crate::diagram::{bend, compose, Diagram, LoopReport};
use crate::structure::SecondaryStructure;
use crate::word::Word;

use super::{reduce, reduce_all, Lexicon, PregroupError, PregroupType, ReductionProof, SimpleTerm};

fn term_image(term: &SimpleTerm, lex: &Lexicon) -> Result<Word, PregroupError> {
    let base = lex
        .assignment(&term.basic)
        .ok_or_else(|| PregroupError::UnknownBasic(term.basic.clone()))?;
    // Double duals are identities in the target, so only parity matters.
    Ok(if term.adjoint.rem_euclid(2) == 0 {
        base.clone()
    } else {
        base.reverse_complement()
    })
}

/// `F` on objects: each basic type maps to its assigned word, and each
/// adjoint to the reverse complement.
pub fn functor_object(t: &PregroupType, lex: &Lexicon) -> Result<Word, PregroupError> {
    t.terms().iter().try_fold(Word::empty(), |acc, term| {
        Ok(acc.concat(&term_image(term, lex)?))
    })
}

/// `F` on a reduction: each link becomes an evaluation block of nested
/// source arcs, each survivor an identity block. The result runs from
/// `F(flattened types)` to `F(survivors)`.
pub fn functor_reduction(
    proof: &ReductionProof,
    types: &[PregroupType],
    lex: &Lexicon,
) -> Result<Diagram, PregroupError> {
    let flat = PregroupType::flatten(types);
    let terms = flat.terms();
    let images = terms
        .iter()
        .map(|t| term_image(t, lex))
        .collect::<Result<Vec<_>, _>>()?;
    // 1-based offset of each term's block in the source word.
    let mut starts = Vec::with_capacity(images.len());
    let mut next = 1;
    for img in &images {
        starts.push(next);
        next += img.len();
    }
    let block = |p: usize| -> Result<(usize, usize), PregroupError> {
        if p == 0 || p > terms.len() {
            return Err(PregroupError::BadProof(format!("index {p} out of range")));
        }
        Ok((starts[p - 1], images[p - 1].len()))
    };

    let mut source_arcs = Vec::new();
    for &(p, q) in &proof.links {
        let (sp, lp) = block(p)?;
        let (sq, lq) = block(q)?;
        if lp != lq {
            return Err(PregroupError::BadProof(format!(
                "link ({p},{q}) joins blocks of lengths {lp} and {lq}"
            )));
        }
        source_arcs.extend((1..=lp).map(|i| (sp + i - 1, sq + lp - i)));
    }
    let mut through = Vec::new();
    let mut target = Word::empty();
    for &s in &proof.survivors {
        let (start, len) = block(s)?;
        let offset = target.len();
        through.extend((1..=len).map(|i| (start + i - 1, offset + i)));
        target = target.concat(&images[s - 1]);
    }
    let source = images.iter().fold(Word::empty(), |acc, w| acc.concat(w));
    Diagram::new(source, target, through, source_arcs, Vec::new())
        .map_err(|e| PregroupError::BadProof(e.to_string()))
}

/// The outcome of interpreting a sentence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Meaning {
    pub proof: ReductionProof,
    pub structure: SecondaryStructure,
    pub report: LoopReport,
}

fn lexical_state(sentence: &[&str], lex: &Lexicon) -> Result<(Vec<PregroupType>, Diagram), PregroupError> {
    let mut types = Vec::with_capacity(sentence.len());
    let mut states = Vec::with_capacity(sentence.len());
    for &w in sentence {
        let entry = lex
            .entry(w)
            .ok_or_else(|| PregroupError::UnknownWord(w.to_string()))?;
        types.push(entry.ty.clone());
        states.push(Diagram::from_structure(&entry.structure));
    }
    Ok((types, Diagram::tensor_all(&states)))
}

fn interpret(
    proof: ReductionProof,
    types: &[PregroupType],
    state: &Diagram,
    lex: &Lexicon,
) -> Result<Meaning, PregroupError> {
    let reduction = functor_reduction(&proof, types, lex)?;
    let (composite, report) =
        compose(state, &reduction).map_err(|e| PregroupError::BadProof(e.to_string()))?;
    Ok(Meaning {
        proof,
        structure: bend(&composite),
        report,
    })
}

/// Tensors the lexical states, applies `F` of the canonical reduction, and
/// returns the resulting structure on `F(goal)`. `None` if the sentence does
/// not reduce to `goal`.
pub fn meaning(
    sentence: &[&str],
    goal: &PregroupType,
    lex: &Lexicon,
) -> Result<Option<Meaning>, PregroupError> {
    let (types, state) = lexical_state(sentence, lex)?;
    reduce(&types, goal)
        .map(|proof| interpret(proof, &types, &state, lex))
        .transpose()
}

/// One meaning per distinct reduction, canonical proof first.
pub fn meaning_all(
    sentence: &[&str],
    goal: &PregroupType,
    lex: &Lexicon,
) -> Result<Vec<Meaning>, PregroupError> {
    let (types, state) = lexical_state(sentence, lex)?;
    reduce_all(&types, goal)
        .into_iter()
        .map(|proof| interpret(proof, &types, &state, lex))
        .collect()
}
