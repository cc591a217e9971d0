//! Benchmark inputs shared by the criterion targets.

use vassiliev_core::families::omega;
use vassiliev_core::lab::{enumerate_chords, EnumGuard};
use vassiliev_core::{BrElement, ChordDiagram, Diagram, FamilySpec};

/// Wheels `omega:k` for the given sizes.
pub fn wheels(sizes: impl IntoIterator<Item = usize>) -> Vec<(usize, Diagram)> {
    sizes
        .into_iter()
        .map(|k| (k, omega(k).expect("k >= 1")))
        .collect()
}

/// A named single diagram such as `psi` or `x3*omega:4`.
pub fn named(spec: &str) -> Diagram {
    let spec: FamilySpec = spec.parse().expect("valid spec");
    match spec.element().expect("buildable spec") {
        vassiliev_core::families::Element::Diagram(d) => d,
        _ => panic!("{spec} is not a single diagram"),
    }
}

pub fn chord_diagrams(n: usize, l: usize) -> Vec<ChordDiagram> {
    enumerate_chords(n, l, EnumGuard::default())
        .expect("within guard")
        .collect()
}

/// `d - h` in `Br_3`, whose powers trace to the gl wheel values.
pub fn wheel_generator() -> BrElement {
    vassiliev_core::brauer::parse(3, "d - h").expect("literal")
}
