use super::glue::Gluing;
use super::{Diagram, DiagramError, LoopReport};

/// Vertical stacking: `f: x → y` on top of `g: y → z`, giving `g ∘ f: x → z`.
///
/// The shared `y` boundary becomes interior. Paths that reach both outer
/// boundaries survive as composite edges; closed loops and interior-only
/// paths are erased, and an outer endpoint whose path dead-ends at an
/// unmatched interior position is left unmatched.
pub fn compose(f: &Diagram, g: &Diagram) -> Result<(Diagram, LoopReport), DiagramError> {
    if f.target() != g.source() {
        return Err(DiagramError::InterfaceMismatch {
            left: f.target().to_boundary_string(),
            right: g.source().to_boundary_string(),
        });
    }
    let (nx, ny, nz) = (f.source().len(), f.target().len(), g.target().len());
    let x = |i: usize| i - 1;
    let y = |j: usize| nx + j - 1;
    let z = |k: usize| nx + ny + k - 1;

    let bases = f
        .source()
        .iter()
        .chain(f.target().iter())
        .chain(g.target().iter())
        .copied()
        .collect();
    let mut boundary = vec![true; nx + ny + nz];
    boundary[nx..nx + ny].fill(false);
    let mut glue = Gluing::new(bases, boundary);

    for &(i, j) in f.through() {
        glue.connect(x(i), y(j), false);
    }
    for &(i, j) in f.source_arcs() {
        glue.connect(x(i), x(j), true);
    }
    for &(i, j) in f.target_arcs() {
        glue.connect(y(i), y(j), true);
    }
    for &(i, j) in g.through() {
        glue.connect(y(i), z(j), false);
    }
    for &(i, j) in g.source_arcs() {
        glue.connect(y(i), y(j), true);
    }
    for &(i, j) in g.target_arcs() {
        glue.connect(z(i), z(j), true);
    }

    let mut report = LoopReport {
        bonds_before: f.bond_count() + g.bond_count(),
        ..Default::default()
    };
    let mut through = Vec::new();
    let mut source_arcs = Vec::new();
    let mut target_arcs = Vec::new();
    for strand in glue.trace(&mut report) {
        let (a, b) = strand.ends;
        let emitted_bond = match (a < nx, b < nx) {
            (true, true) => {
                source_arcs.push((a + 1, b + 1));
                true
            }
            (true, false) => {
                through.push((a + 1, b - nx - ny + 1));
                false
            }
            _ => {
                target_arcs.push((a - nx - ny + 1, b - nx - ny + 1));
                true
            }
        };
        report.transfer_bonds_absorbed += strand.bonds - usize::from(emitted_bond);
    }
    let composite = Diagram::new_unchecked(
        f.source().clone(),
        g.target().clone(),
        through,
        source_arcs,
        target_arcs,
    );
    report.bonds_after = composite.bond_count();
    debug_assert!(composite.is_valid(), "composite violates invariants");
    Ok((composite, report))
}
