//! The bending bijection `Hom(x, y) ≅ Hom(ε, x∨·y)` and composition carried
//! out on bent (straightened) states.

use crate::structure::SecondaryStructure;
use crate::word::Word;

use super::glue::Gluing;
use super::{Diagram, DiagramError, LoopReport};

/// Straightens `f: x → y` into a structure on `x∨·y`.
///
/// Source position `i` lands at `|x| + 1 - i` and target position `j` at
/// `|x| + j`; every edge of `f` becomes an arc.
pub fn bend(f: &Diagram) -> SecondaryStructure {
    let nx = f.source().len();
    let src = |i: usize| nx + 1 - i;
    let tgt = |j: usize| nx + j;
    let ordered = |a: usize, b: usize| (a.min(b), a.max(b));
    let arcs = f
        .through()
        .iter()
        .map(|&(i, j)| ordered(src(i), tgt(j)))
        .chain(f.source_arcs().iter().map(|&(i, j)| ordered(src(i), src(j))))
        .chain(f.target_arcs().iter().map(|&(i, j)| ordered(tgt(i), tgt(j))))
        .collect();
    let word = f.source().reverse_complement().concat(f.target());
    SecondaryStructure::new_unchecked(word, arcs)
}

/// Inverse of [`bend`]: reads the first `source_len` positions of `s` as
/// `x∨` and the rest as `y`.
pub fn unbend(s: &SecondaryStructure, source_len: usize) -> Result<Diagram, DiagramError> {
    let k = source_len;
    if k > s.len() {
        return Err(DiagramError::SourceTooLong {
            source_len: k,
            len: s.len(),
        });
    }
    let source = s.word().slice(1, k).reverse_complement();
    let target = s.word().slice(k + 1, s.len());
    let mut through = Vec::new();
    let mut source_arcs = Vec::new();
    let mut target_arcs = Vec::new();
    for &(a, b) in s.arcs() {
        if b <= k {
            source_arcs.push((k + 1 - b, k + 1 - a));
        } else if a <= k {
            through.push((k + 1 - a, b - k));
        } else {
            target_arcs.push((a - k, b - k));
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

/// Composes two straightened morphisms directly.
///
/// `fhat` lives on `x∨·y` and `ghat` on `y∨·z`. The two are juxtaposed, each
/// base of `y` is zipped to its partner in `y∨` (the arcs of `ev_y`), and the
/// connectivity is traced exactly as in [`compose`](super::compose). The
/// result lives on `x∨·z`.
pub fn zip_and_transfer(
    fhat: &SecondaryStructure,
    ghat: &SecondaryStructure,
    y: &Word,
) -> Result<(SecondaryStructure, LoopReport), DiagramError> {
    let ny = y.len();
    let y_dual = y.reverse_complement();
    if !fhat.word().ends_with(y) || !ghat.word().starts_with(&y_dual) {
        return Err(DiagramError::InterfaceMismatch {
            left: fhat.word().to_boundary_string(),
            right: ghat.word().to_boundary_string(),
        });
    }
    let nxd = fhat.len() - ny;
    let nf = fhat.len();
    let nz = ghat.len() - ny;

    let bases = fhat
        .word()
        .iter()
        .chain(ghat.word().iter())
        .copied()
        .collect();
    let mut boundary = vec![false; nf + ghat.len()];
    boundary[..nxd].fill(true);
    boundary[nf + ny..].fill(true);
    let mut glue = Gluing::new(bases, boundary);

    for &(i, j) in fhat.arcs() {
        glue.connect(i - 1, j - 1, true);
    }
    for &(i, j) in ghat.arcs() {
        glue.connect(nf + i - 1, nf + j - 1, true);
    }
    // Zip: y position i pairs with y∨ position ny + 1 - i.
    for i in 1..=ny {
        glue.connect(nxd + i - 1, nf + (ny + 1 - i) - 1, true);
    }

    let mut report = LoopReport {
        bonds_before: fhat.bond_count() + ghat.bond_count(),
        interface_bonds_formed: ny,
        ..Default::default()
    };
    let to_result = |node: usize| {
        if node < nxd {
            node + 1
        } else {
            nxd + (node - nf - ny) + 1
        }
    };
    let mut arcs = Vec::new();
    for strand in glue.trace(&mut report) {
        arcs.push((to_result(strand.ends.0), to_result(strand.ends.1)));
        report.transfer_bonds_absorbed += strand.bonds - 1;
    }
    let word = fhat.word().slice(1, nxd).concat(&ghat.word().slice(ny + 1, ny + nz));
    let result = SecondaryStructure::new_unchecked(word, arcs);
    report.bonds_after = result.bond_count();
    debug_assert!(result.is_valid(), "zip-and-transfer produced an invalid structure");
    Ok((result, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::tests::figure_bending_f;
    use crate::word::word;

    #[test]
    fn bending_figure() {
        let s = bend(&figure_bending_f());
        assert_eq!(s.word(), &word("GCGATAGCTCG"));
        assert_eq!(s.arcs(), &[(1, 2), (3, 8), (5, 6), (10, 11)]);
        assert!(s.is_valid());
        assert_eq!(unbend(&s, 5).unwrap(), figure_bending_f());
    }

    #[test]
    fn bend_identity_is_coev() {
        let w = word("ACGTT");
        let s = bend(&Diagram::identity(&w));
        assert_eq!(Diagram::from_structure(&s), Diagram::coev(&w));
        assert_eq!(unbend(&s, w.len()).unwrap(), Diagram::identity(&w));
    }

    #[test]
    fn bend_ev_of_single_base() {
        let s = bend(&Diagram::ev(&word("A")));
        assert_eq!(s.word(), &word("AT"));
        assert_eq!(s.arcs(), &[(1, 2)]);
    }

    #[test]
    fn unbend_with_empty_source() {
        let s = SecondaryStructure::new(word("ACGT"), vec![(1, 4)]).unwrap();
        assert_eq!(unbend(&s, 0).unwrap(), Diagram::from_structure(&s));
        assert!(matches!(
            unbend(&s, 5),
            Err(DiagramError::SourceTooLong { .. })
        ));
    }

    #[test]
    fn worked_zip_instance() {
        let fhat =
            SecondaryStructure::new(word("ACGCGCGAAGG"), vec![(2, 7), (3, 6), (4, 5)]).unwrap();
        let ghat =
            SecondaryStructure::new(word("CCTTCGCGCTATC"), vec![(4, 11), (5, 8), (6, 7)])
                .unwrap();
        let (out, report) = zip_and_transfer(&fhat, &ghat, &word("CGAAGG")).unwrap();
        assert_eq!(out.word(), &word("ACGCGCGCTATC"));
        assert_eq!(out.arcs(), &[(2, 7), (3, 6), (4, 5)]);
        assert_eq!(report.interface_bonds_formed, 6);
        assert_eq!(report.dangled_endpoints, 1);
        assert_eq!(report.erased_open_paths, 3);
        assert_eq!(report.closed_loops(), 0);
        assert!(report.bond_balance_holds());
    }

    #[test]
    fn toehold_zip() {
        let fhat = SecondaryStructure::new(
            word("GAGAGAGAATCTCTC"),
            (1..=6).map(|i| (i, 16 - i)).collect(),
        )
        .unwrap();
        let ghat = SecondaryStructure::empty(word("GAGAGATTC"));
        let (out, report) = zip_and_transfer(&fhat, &ghat, &word("GAATCTCTC")).unwrap();
        assert_eq!(out, SecondaryStructure::empty(word("GAGAGA")));
        assert_eq!(report.interface_bonds_formed, 9);
        assert_eq!(report.dangled_endpoints, 6);
    }

    #[test]
    fn zip_against_identity_is_snake() {
        let fhat = SecondaryStructure::new(word("GCGATAGCTCG"), vec![(1, 2), (3, 8), (5, 6), (10, 11)])
            .unwrap();
        let y = word("AGCTCG");
        let ghat = bend(&Diagram::identity(&y));
        let (out, _) = zip_and_transfer(&fhat, &ghat, &y).unwrap();
        assert_eq!(out, fhat);
    }

    #[test]
    fn zip_interface_mismatch() {
        let fhat = SecondaryStructure::empty(word("AC"));
        let ghat = SecondaryStructure::empty(word("CC"));
        assert!(matches!(
            zip_and_transfer(&fhat, &ghat, &word("C")),
            Err(DiagramError::InterfaceMismatch { .. })
        ));
    }
}
