//! Independent oracles for the word engine and the finite-type classifier:
//! bounded Cayley closures decide finiteness by brute force and the two
//! routes must agree; reflections, longest elements and wall distances are
//! cross-checked the same way.

mod common;

use std::collections::BTreeSet;
use std::sync::Arc;
use twistlab_core::{
    cox::{CoxeterMatrix, Gen, Subset},
    diagram, geometry,
    word::{
        self, canonical, enumerate_ball, enumerate_coset, is_reflection, longest_element,
        GroupElement, Word,
    },
};

/// Brute-force closure of the subgroup generated by `j`, capped. Returns
/// the group size when the closure terminates within the cap, `None` when
/// it keeps growing. Breadth-first, so words stay short even in infinite
/// groups.
fn cayley_closure_size(m: &Arc<CoxeterMatrix>, j: Subset, cap: usize) -> Option<usize> {
    let mut seen: BTreeSet<GroupElement> = BTreeSet::new();
    let mut frontier = std::collections::VecDeque::from([GroupElement::identity(m)]);
    seen.insert(GroupElement::identity(m));
    while let Some(x) = frontier.pop_front() {
        for s in j.iter() {
            let y = x.mul_gen(s).unwrap();
            if seen.insert(y.clone()) {
                if seen.len() > cap {
                    return None;
                }
                frontier.push_back(y);
            }
        }
    }
    Some(seen.len())
}

/// Rank <= 4 matrices with entries in {2,..,6} or infinity, listed by hand.
fn oracle_matrices() -> Vec<Arc<CoxeterMatrix>> {
    let e = |r, edges: &[(Gen, Gen, u32)]| common::arc(CoxeterMatrix::from_edges(r, edges).unwrap());
    let d = |r, edges: &[(Gen, Gen, u32)]| common::arc(CoxeterMatrix::from_diagram(r, edges).unwrap());
    vec![
        common::g1(),
        common::h3(),
        common::a3(),
        common::b3(),
        // Affine triangle.
        d(3, &[(0, 1, 3), (1, 2, 3), (0, 2, 3)]),
        // Affine C2 tilde and G2 tilde.
        d(3, &[(0, 1, 4), (1, 2, 4)]),
        d(3, &[(0, 1, 6), (1, 2, 3)]),
        // Dihedral of order 12 with an isolated generator.
        e(3, &[(0, 1, 6)]),
        // D4 star and B3 x A1.
        d(4, &[(0, 1, 3), (1, 2, 3), (1, 3, 3)]),
        d(4, &[(0, 1, 4), (1, 2, 3)]),
        // Right-angled path on four vertices.
        common::arc(CoxeterMatrix::right_angled(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()),
        // A mixed hyperbolic-looking rank 4 shape.
        e(4, &[(0, 1, 3), (1, 2, 5), (2, 3, 3)]),
    ]
}

#[test]
fn sphericity_matches_cayley_closure_on_every_subset() {
    // Largest finite subgroup in the list is B4-free; D4 has 192 elements,
    // B3xA1 has 96, so a cap of 400 decides every subset.
    let cap = 400;
    for m in oracle_matrices() {
        for j in m.full().subsets() {
            let classified = diagram::is_spherical(&m, j).unwrap();
            let enumerated = cayley_closure_size(&m, j, cap);
            assert_eq!(
                classified,
                enumerated.is_some(),
                "classification and closure disagree on {j} of\n{}",
                *m
            );
            if let Some(size) = enumerated {
                assert_eq!(
                    diagram::spherical_order(&m, j).unwrap(),
                    Some(size as u64),
                    "group order mismatch on {j}"
                );
            }
        }
    }
}

#[test]
fn coset_enumeration_matches_known_orders() {
    let cases: Vec<(Arc<CoxeterMatrix>, usize)> =
        vec![(common::a2(), 6), (common::a3(), 24), (common::b3(), 48), (common::h3(), 120)];
    for (m, expected) in cases {
        let full = m.full();
        let elements = enumerate_coset(&m, full).unwrap();
        assert_eq!(elements.len(), expected);
        // Canonical words are pairwise distinct spellings: the set is a
        // bijection between elements and canonical words.
        let words: BTreeSet<Vec<Gen>> = elements.iter().map(|x| x.word().to_vec()).collect();
        assert_eq!(words.len(), expected);
    }
}

#[test]
fn longest_element_is_coset_maximum() {
    for (m, j) in [
        (common::g1(), Subset::from_iter([0, 1])),
        (common::a3(), Subset::full(3)),
        (common::b3(), Subset::full(3)),
        (common::h3(), Subset::full(3)),
    ] {
        let w0 = longest_element(&m, j).unwrap();
        let all = enumerate_coset(&m, j).unwrap();
        let max = all.iter().max_by_key(|x| x.length()).unwrap();
        assert_eq!(w0.length(), max.length());
        assert_eq!(all.iter().filter(|x| x.length() == w0.length()).count(), 1);
        assert_eq!(&w0, max);
        for s in j.iter() {
            assert!(w0.mul_gen(s).unwrap().length() < w0.length());
        }
        assert!(w0.mul(&w0).unwrap().is_identity());
    }
}

#[test]
fn reflection_recognition_matches_conjugation_oracle() {
    for (m, radius) in [(common::g1(), 5u32), (common::p5(), 4u32)] {
        let ball = enumerate_ball(&m, radius).unwrap();
        // Oracle: all conjugates u s u^-1 that land inside the ball.
        let mut conjugates: BTreeSet<GroupElement> = BTreeSet::new();
        for u in &ball {
            for s in 0..m.rank() as Gen {
                let r = u.conjugate(&GroupElement::generator(&m, s).unwrap()).unwrap();
                if r.length() <= radius as usize {
                    conjugates.insert(r);
                }
            }
        }
        for x in &ball {
            let recognized = is_reflection(x).unwrap();
            assert_eq!(
                recognized.is_some(),
                conjugates.contains(x),
                "reflection recognition disagrees with the conjugation oracle at {x}"
            );
            if let Some(r) = recognized {
                let (u, s) = r.witness();
                let rebuilt = u.conjugate(&GroupElement::generator(&m, s).unwrap()).unwrap();
                assert_eq!(&rebuilt, x);
            }
        }
    }
}

#[test]
fn exchange_condition_on_radius_four_balls() {
    for m in [common::g1(), common::p5()] {
        for x in enumerate_ball(&m, 4).unwrap() {
            for s in 0..m.rank() as Gen {
                let sx = GroupElement::generator(&m, s).unwrap().mul(&x).unwrap();
                assert_eq!((sx.length() as i64 - x.length() as i64).abs(), 1);
            }
        }
    }
}

#[test]
fn wall_distance_bfs_agrees_with_formula() {
    let m = common::g1();
    let reflections: Vec<_> = enumerate_ball(&m, 3)
        .unwrap()
        .into_iter()
        .filter_map(|x| is_reflection(&x).unwrap())
        .collect();
    assert!(!reflections.is_empty());
    for c in enumerate_ball(&m, 3).unwrap() {
        for r in &reflections {
            let exact = geometry::wall_distance_formula(&c, r).unwrap();
            assert_eq!(geometry::wall_distance(&c, r, exact + 2).unwrap(), Some(exact));
        }
    }
}

#[test]
fn conjugate_example_is_reduced_by_exhaustive_search() {
    // No braid rewrite shortens [2,4,2] in the right-angled path: its
    // braid class is computed exhaustively and every member has length 3.
    let m = common::p5();
    let g = canonical(&m, &Word(vec![2, 4, 2])).unwrap();
    assert_eq!(g.length(), 3);
    let class = word::reduced_class(&g).unwrap();
    assert!(class.iter().all(|w| w.len() == 3));
}
