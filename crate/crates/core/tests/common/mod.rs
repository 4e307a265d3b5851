//! Shared test corpus: small matrices covering the structural variety the
//! suite exercises (an infinite-bond triangle, right-angled path/cycle/
//! trees, finite types, and a mixed-label 2-rigid example).

use std::sync::Arc;
use twistlab_core::CoxeterMatrix;

pub fn arc(m: CoxeterMatrix) -> Arc<CoxeterMatrix> {
    Arc::new(m)
}

/// Triangle with orders 3, 3, infinity.
pub fn g1() -> Arc<CoxeterMatrix> {
    arc(CoxeterMatrix::from_edges(3, &[(0, 1, 3), (1, 2, 3)]).unwrap())
}

/// Right-angled path on five vertices.
pub fn p5() -> Arc<CoxeterMatrix> {
    arc(CoxeterMatrix::right_angled(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap())
}

pub fn h3() -> Arc<CoxeterMatrix> {
    arc(CoxeterMatrix::from_edges(3, &[(0, 1, 5), (1, 2, 3), (0, 2, 2)]).unwrap())
}

pub fn a2() -> Arc<CoxeterMatrix> {
    arc(CoxeterMatrix::from_edges(2, &[(0, 1, 3)]).unwrap())
}

pub fn a3() -> Arc<CoxeterMatrix> {
    arc(CoxeterMatrix::from_diagram(3, &[(0, 1, 3), (1, 2, 3)]).unwrap())
}

pub fn b3() -> Arc<CoxeterMatrix> {
    arc(CoxeterMatrix::from_diagram(3, &[(0, 1, 4), (1, 2, 3)]).unwrap())
}

/// Right-angled four-cycle.
pub fn square() -> Arc<CoxeterMatrix> {
    arc(CoxeterMatrix::right_angled(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap())
}

/// Right-angled path on six vertices.
pub fn tree6_path() -> Arc<CoxeterMatrix> {
    arc(CoxeterMatrix::right_angled(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]).unwrap())
}

/// Right-angled star: one center, five leaves.
pub fn tree6_star() -> Arc<CoxeterMatrix> {
    arc(CoxeterMatrix::right_angled(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]).unwrap())
}

/// Right-angled tree: path 0-1-2-3-4 with 5 hanging off 2.
pub fn tree6_t() -> Arc<CoxeterMatrix> {
    arc(CoxeterMatrix::right_angled(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)]).unwrap())
}

/// Mixed-label 2-rigid FC matrix whose complexity descent runs through the
/// second coordinate: two order-3 "wings" 0,1 over a core 2, a vertex 3
/// commuting with the wings, and a vertex 4 detached from 2 and 3.
pub fn mixed5() -> Arc<CoxeterMatrix> {
    arc(CoxeterMatrix::from_edges(
        5,
        &[(0, 2, 3), (1, 2, 3), (0, 3, 2), (1, 3, 2), (0, 4, 3), (1, 4, 3), (2, 3, 3)],
    )
    .unwrap())
}

/// The complexity corpus: FC and 2-rigid matrices.
pub fn complexity_corpus() -> Vec<(&'static str, Arc<CoxeterMatrix>)> {
    vec![
        ("g1", g1()),
        ("p5", p5()),
        ("h3", h3()),
        ("square", square()),
        ("tree6_path", tree6_path()),
        ("tree6_star", tree6_star()),
        ("tree6_t", tree6_t()),
        ("mixed5", mixed5()),
    ]
}

/// Matrices satisfying the marking standing assumptions: irreducible,
/// non-spherical, type FC (and 2-rigid).
pub fn marking_corpus() -> Vec<(&'static str, Arc<CoxeterMatrix>)> {
    vec![
        ("g1", g1()),
        ("p5", p5()),
        ("tree6_path", tree6_path()),
        ("tree6_t", tree6_t()),
        ("mixed5", mixed5()),
    ]
}
