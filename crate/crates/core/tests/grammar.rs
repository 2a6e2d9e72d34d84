mod common;

use std::collections::{BTreeMap, BTreeSet};

use common::{random_structure, random_word_of_len, read_fixture};
use dnacat::pregroup::{
    functor_object, functor_reduction, meaning, meaning_all, reduce, reduce_all, Lexicon,
    PregroupType, ReductionProof, SimpleTerm,
};
use dnacat::{bend, compose, Diagram};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn term() -> impl Strategy<Value = SimpleTerm> {
    (prop::sample::select(vec!["n", "s"]), -2i32..=2).prop_map(|(b, z)| SimpleTerm::new(b, z))
}

fn ptype(max: usize) -> impl Strategy<Value = PregroupType> {
    prop::collection::vec(term(), 0..=max).prop_map(PregroupType)
}

fn goal() -> impl Strategy<Value = PregroupType> {
    prop::sample::select(vec!["1", "s", "n", "n s", "s^l"]).prop_map(|g| g.parse().unwrap())
}

type Proofs = BTreeSet<(Vec<(usize, usize)>, Vec<usize>)>;

/// Every way to delete adjacent contracting pairs, stopping anywhere.
fn rewriting_oracle(terms: &[SimpleTerm], goal: &PregroupType) -> Proofs {
    fn go(
        terms: &[SimpleTerm],
        goal: &PregroupType,
        alive: Vec<usize>,
        links: Vec<(usize, usize)>,
        seen: &mut Proofs,
        out: &mut Proofs,
    ) {
        let mut key = links.clone();
        key.sort_unstable();
        if !seen.insert((key.clone(), alive.clone())) {
            return;
        }
        let spelled: Vec<&SimpleTerm> = alive.iter().map(|&i| &terms[i - 1]).collect();
        if spelled.len() == goal.terms().len() && spelled.iter().zip(goal.terms()).all(|(a, b)| *a == b) {
            out.insert((key, alive.clone()));
        }
        for k in 0..alive.len().saturating_sub(1) {
            let (p, q) = (alive[k], alive[k + 1]);
            if terms[p - 1].contracts_with(&terms[q - 1]) {
                let mut rest = alive.clone();
                rest.drain(k..k + 2);
                let mut l = links.clone();
                l.push((p, q));
                go(terms, goal, rest, l, seen, out);
            }
        }
    }
    let mut out = BTreeSet::new();
    go(terms, goal, (1..=terms.len()).collect(), Vec::new(), &mut BTreeSet::new(), &mut out);
    out
}

fn random_lexicon(seed: u64) -> Lexicon {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut a = BTreeMap::new();
    a.insert("n".to_string(), random_word_of_len(&mut rng, 1 + seed as usize % 2));
    a.insert("s".to_string(), random_word_of_len(&mut rng, 1 + (seed as usize / 2) % 2));
    Lexicon::new(a, 0)
}

proptest! {
    #[test]
    fn reduction_matches_rewriting(types in prop::collection::vec(ptype(3), 1..=3), goal in goal()) {
        let flat = PregroupType::flatten(&types);
        let oracle = rewriting_oracle(flat.terms(), &goal);
        let all = reduce_all(&types, &goal);
        let got: BTreeSet<_> = all.iter().map(|p| (p.links.clone(), p.survivors.clone())).collect();
        prop_assert_eq!(got.len(), all.len(), "duplicate proofs");
        prop_assert_eq!(&got, &oracle);
        for p in &all {
            prop_assert!(p.check(&flat, &goal).is_ok());
        }
        let canonical = reduce(&types, &goal);
        prop_assert_eq!(canonical.as_ref(), all.first());
    }

    #[test]
    fn functor_is_strong_monoidal(a in ptype(4), b in ptype(4), seed: u64) {
        let lex = random_lexicon(seed);
        let fa = functor_object(&a, &lex).unwrap();
        let fb = functor_object(&b, &lex).unwrap();
        prop_assert_eq!(functor_object(&a.concat(&b), &lex).unwrap(), fa.concat(&fb));
        let mut rev = a.terms().to_vec();
        rev.reverse();
        let right_adjoint = PregroupType(rev).shift_adjoints(1);
        prop_assert_eq!(functor_object(&right_adjoint, &lex).unwrap(), fa.reverse_complement());
    }

    #[test]
    fn reductions_map_to_valid_diagrams(types in prop::collection::vec(ptype(3), 1..=3), goal in goal(), seed: u64) {
        let lex = random_lexicon(seed);
        let flat = PregroupType::flatten(&types);
        for proof in reduce_all(&types, &goal) {
            let d = functor_reduction(&proof, &types, &lex).unwrap();
            prop_assert!(d.is_valid());
            prop_assert_eq!(d.source(), &functor_object(&flat, &lex).unwrap());
            prop_assert_eq!(d.target(), &functor_object(&goal, &lex).unwrap());
        }
    }

    #[test]
    fn meaning_ignores_tensor_bracketing(types in prop::collection::vec(ptype(2), 3..=3), goal in goal(), seed: u64) {
        let mut lex = random_lexicon(seed);
        let mut rng = StdRng::seed_from_u64(seed);
        let names = ["a", "b", "c"];
        let mut states = Vec::new();
        for (name, t) in names.iter().zip(&types) {
            let s = random_structure(&mut rng, &functor_object(t, &lex).unwrap());
            states.push(Diagram::from_structure(&s));
            lex.insert(*name, t.clone(), s).unwrap();
        }
        let left = states[0].tensor(&states[1]).tensor(&states[2]);
        let right = states[0].tensor(&states[1].tensor(&states[2]));
        prop_assert_eq!(&left, &right);
        let all = meaning_all(&names, &goal, &lex).unwrap();
        for m in &all {
            let reduction = functor_reduction(&m.proof, &types, &lex).unwrap();
            let via_right = bend(&compose(&right, &reduction).unwrap().0);
            prop_assert_eq!(&m.structure, &via_right);
            prop_assert!(m.structure.is_valid());
            prop_assert_eq!(m.structure.word(), &functor_object(&goal, &lex).unwrap());
        }
        let canonical = meaning(&names, &goal, &lex).unwrap();
        prop_assert_eq!(canonical.as_ref(), all.first());
    }
}

fn cats() -> Lexicon {
    Lexicon::from_toml_str(&read_fixture("cats.toml")).unwrap()
}

#[test]
fn cats_chase_mice() {
    let lex = cats();
    let s: PregroupType = "s".parse().unwrap();
    let m = meaning(&["Cats", "chase", "mice"], &s, &lex).unwrap().unwrap();
    assert_eq!(
        m.proof,
        ReductionProof {
            links: vec![(1, 2), (4, 5)],
            survivors: vec![3]
        }
    );
    assert_eq!(m.structure.word().to_string(), "GCTAGCATCGAT");
    assert_eq!(m.structure.arcs(), &[(3, 4), (5, 9)]);
    assert_eq!(meaning_all(&["Cats", "chase", "mice"], &s, &lex).unwrap().len(), 1);
}

#[test]
fn single_noun_means_its_lexical_state() {
    let lex = cats();
    let n: PregroupType = "n".parse().unwrap();
    let m = meaning(&["Cats"], &n, &lex).unwrap().unwrap();
    assert!(m.proof.links.is_empty());
    assert_eq!(m.structure, lex.entry("Cats").unwrap().structure);
}

#[test]
fn ungrammatical_and_unknown() {
    let lex = cats();
    let s: PregroupType = "s".parse().unwrap();
    assert!(meaning(&["Cats", "mice"], &s, &lex).unwrap().is_none());
    let err = meaning(&["Cats", "eat", "mice"], &s, &lex).unwrap_err();
    assert!(err.to_string().contains("eat"));
}
