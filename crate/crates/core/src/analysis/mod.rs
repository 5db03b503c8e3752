//! Unitarity, towers, Pell arcs and the exhaustive scans.

pub mod figures;
pub mod scan;
pub mod towers;
pub mod unitary;

pub use figures::{
    build_pell_figure, build_pell_witness, build_stack, build_tower, build_uncapped_pell_figure, pell_arc_weight,
    tower_arc_weight, zig_zag,
};
pub use scan::{
    conjecture_scan, conjecture_scan_sequential, lemma56_scan, lemma56_violations, HardFailure, IndexedDissection,
    Lemma56Report, Lemma56Violation, ScanCounts, ScanFilters, ScanOptions, ScanReport,
};
pub use towers::{
    enumerate_tower_decompositions, has_tower_decomposition, pell_arcs, tower_arcs, tower_decomposition,
    unitary_from_towers, PellArc, Tower, TowerDecomposition,
};
pub use unitary::{
    basic_triangles, enumerate_unitary_triangulations, find_unitary_triangulation, is_unitary,
    triangulation_algorithm, unit_arcs, Ear,
};
