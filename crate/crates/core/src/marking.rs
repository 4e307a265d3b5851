//! Bases and markings over a reference matrix, the two moves that generate
//! their equivalence, and the half-spaces they pick out in an ambient
//! complex.
//!
//! A base `(s, w)` has a word `w = j1...jn` of pairwise distinct letters,
//! sits at wall distance `n` from the core's wall, and every wall it
//! crosses meets the core's wall; its support must be irreducible
//! spherical. A marking adds a marker not adjacent to some support
//! element.

use crate::cox::{CoxeterMatrix, Gen, Order, Subset};
use crate::diagram;
use crate::error::{Error, Result};
use crate::geometry::{half_space_containing_wall, wall_distance, HalfSpace, Intersection};
use crate::twist::GeneratingSet;
use crate::word::{canonical, GroupElement, Reflection, Word};
use serde::Serialize;
use std::fmt;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Base {
    core: Gen,
    support: Subset,
    letters: Vec<Gen>,
    element: GroupElement,
}

impl Base {
    pub fn core(&self) -> Gen {
        self.core
    }

    pub fn support(&self) -> Subset {
        self.support
    }

    /// The defining word, in its validated order.
    pub fn letters(&self) -> &[Gen] {
        &self.letters
    }

    pub fn element(&self) -> &GroupElement {
        &self.element
    }

    /// Validate a candidate word against all four base conditions.
    pub fn from_word(matrix: &Arc<CoxeterMatrix>, core: Gen, letters: &[Gen]) -> Result<Base> {
        matrix.check_gen(core)?;
        for &j in letters {
            matrix.check_gen(j)?;
        }
        let mut seen = Subset::singleton(core);
        for &j in letters {
            if seen.contains(j) {
                return Err(Error::BaseValidationFailed { clause: "distinct letters" });
            }
            seen.insert(j);
        }
        let support = seen;
        if !diagram::is_irreducible_spherical(matrix, support)? {
            return Err(Error::NotIrreducibleSpherical(support));
        }
        let element = canonical(matrix, &Word(letters.to_vec()))?;
        let n = letters.len() as u32;
        let core_refl = Reflection::of_generator(matrix, core)?;
        if wall_distance(&element, &core_refl, n)? != Some(n) {
            return Err(Error::BaseValidationFailed { clause: "wall distance" });
        }
        // Every wall crossed between the identity chamber and the base
        // chamber must meet the core's wall. The crossed walls are the
        // prefix conjugates of the word's letters.
        let group_order = diagram::spherical_order(matrix, support)?
            .expect("support verified spherical")
            .min(100_000) as u32;
        let cutoff = group_order.max(crate::defaults::CUTOFF);
        let mut prefix = GroupElement::identity(matrix);
        for &j in letters {
            let crossed = prefix.conjugate(&GroupElement::generator(matrix, j)?)?;
            if crossed != *core_refl.element() {
                let crossed = Reflection::new(&crossed)?;
                if walls_intersect_exact(&core_refl, &crossed, cutoff)? != Intersection::Yes {
                    return Err(Error::BaseValidationFailed { clause: "crossed walls meet core wall" });
                }
            }
            prefix = prefix.mul_gen(j)?;
        }
        Ok(Base { core, support, letters: letters.to_vec(), element })
    }
}

fn walls_intersect_exact(a: &Reflection, b: &Reflection, cutoff: u32) -> Result<Intersection> {
    crate::geometry::walls_intersect(a, b, cutoff)
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, [", self.core)?;
        for (k, j) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{j}")?;
        }
        write!(f, "])")
    }
}

/// Construct the base for a core inside an irreducible spherical support by
/// ordering the remaining elements so every prefix stays irreducible,
/// breaking ties by least index.
pub fn make_base(matrix: &Arc<CoxeterMatrix>, core: Gen, support: Subset) -> Result<Base> {
    matrix.check_gen(core)?;
    matrix.check_subset(support)?;
    if !support.contains(core) {
        return Err(Error::Precondition(format!("core {core} not in support {support}")));
    }
    if !diagram::is_irreducible_spherical(matrix, support)? {
        return Err(Error::NotIrreducibleSpherical(support));
    }
    let mut letters = Vec::with_capacity(support.len() - 1);
    let mut prefix = Subset::singleton(core);
    let mut remaining = support.difference(prefix);
    while !remaining.is_empty() {
        let next = remaining
            .iter()
            .find(|&j| prefix.iter().any(|p| matrix.dynkin_adjacent(j, p)));
        match next {
            Some(j) => {
                letters.push(j);
                prefix.insert(j);
                remaining.remove(j);
            }
            None => return Err(Error::NoValidOrdering),
        }
    }
    Base::from_word(matrix, core, &letters)
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Marking {
    base: Base,
    marker: Gen,
}

impl Marking {
    pub fn new(matrix: &CoxeterMatrix, base: Base, marker: Gen) -> Result<Marking> {
        matrix.check_gen(marker)?;
        if base.support.contains(marker) {
            return Err(Error::Precondition(format!("marker {marker} lies in the support")));
        }
        let detached = base
            .support
            .iter()
            .any(|j| matrix.order(marker, j) == Order::Infinite);
        if !detached {
            return Err(Error::Precondition(format!(
                "marker {marker} is adjacent to every element of {}",
                base.support
            )));
        }
        Ok(Marking { base, marker })
    }

    pub fn base(&self) -> &Base {
        &self.base
    }

    pub fn core(&self) -> Gen {
        self.base.core
    }

    pub fn support(&self) -> Subset {
        self.base.support
    }

    pub fn marker(&self) -> Gen {
        self.marker
    }

    /// The subset whose component locates this marking: the support minus
    /// the core, or the marker alone for a singleton support.
    pub fn seed(&self) -> Subset {
        if self.base.support.len() > 1 {
            self.base.support.difference(Subset::singleton(self.base.core))
        } else {
            Subset::singleton(self.marker)
        }
    }
}

impl fmt::Display for Marking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.base, self.marker)
    }
}

fn check_standing_assumptions(matrix: &CoxeterMatrix) -> Result<()> {
    let full = matrix.full();
    if !diagram::is_irreducible(matrix, full)? {
        return Err(Error::StandingAssumption("matrix must be irreducible"));
    }
    if diagram::is_spherical(matrix, full)? {
        return Err(Error::StandingAssumption("matrix must be non-spherical"));
    }
    if !diagram::is_fc(matrix) {
        return Err(Error::StandingAssumption("matrix must be of type FC"));
    }
    Ok(())
}

/// All markings with the given core, sorted. Requires the matrix to be
/// irreducible, non-spherical, and of type FC.
pub fn enumerate_markings(matrix: &Arc<CoxeterMatrix>, core: Gen) -> Result<Vec<Marking>> {
    matrix.check_gen(core)?;
    check_standing_assumptions(matrix)?;
    let mut out = Vec::new();
    for support in diagram::irreducible_spherical_subsets(matrix) {
        if !support.contains(core) {
            continue;
        }
        let base = make_base(matrix, core, support)?;
        for marker in matrix.full().difference(support).iter() {
            if support.iter().any(|j| matrix.order(marker, j) == Order::Infinite) {
                out.push(Marking { base: base.clone(), marker });
            }
        }
    }
    out.sort();
    debug_assert!(!out.is_empty(), "an irreducible non-spherical FC matrix always has markings");
    Ok(out)
}

/// Half-space of the core's ambient wall containing the translated marker
/// wall.
pub fn phi_of_marking(gens: &GeneratingSet, mu: &Marking, cutoff: u32) -> Result<HalfSpace> {
    if mu.base.element.matrix() != gens.claimed() {
        return Err(Error::MatrixMismatch);
    }
    let core_wall = gens.reflection(mu.core())?;
    let w = gens.lift(&mu.base.element)?;
    let marker = gens.generator(mu.marker())?;
    let translated = Reflection::new(&w.conjugate(marker)?)?;
    half_space_containing_wall(&core_wall, &translated, cutoff)
}

/// The two moves relating markings with a common core.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Move {
    M1,
    M2,
}

/// Whether two markings are related by a single move: M1 swaps adjacent
/// markers over one support, M2 grows or shrinks the support by one
/// element adjacent to the shared marker.
pub fn related_by_move(matrix: &CoxeterMatrix, a: &Marking, b: &Marking) -> Result<Option<Move>> {
    if a.core() != b.core() {
        return Err(Error::DifferentCores);
    }
    if a.support() == b.support() {
        if a.marker != b.marker && matrix.adjacent(a.marker, b.marker) {
            return Ok(Some(Move::M1));
        }
        return Ok(None);
    }
    if a.marker == b.marker {
        let (big, small) = if a.support().len() > b.support().len() {
            (a.support(), b.support())
        } else {
            (b.support(), a.support())
        };
        let extra = big.difference(small);
        if small.is_subset_of(big) && extra.len() == 1 {
            let j = extra.least().unwrap();
            if matrix.adjacent(a.marker, j) {
                return Ok(Some(Move::M2));
            }
        }
    }
    Ok(None)
}

/// Connected components of the move graph on all markings with the given
/// core.
pub fn equivalence_classes(matrix: &Arc<CoxeterMatrix>, core: Gen) -> Result<Vec<Vec<Marking>>> {
    let markings = enumerate_markings(matrix, core)?;
    let n = markings.len();
    let mut class_of: Vec<usize> = (0..n).collect();
    fn find(class_of: &mut Vec<usize>, mut x: usize) -> usize {
        while class_of[x] != x {
            class_of[x] = class_of[class_of[x]];
            x = class_of[x];
        }
        x
    }
    for i in 0..n {
        for j in i + 1..n {
            if related_by_move(matrix, &markings[i], &markings[j])?.is_some() {
                let (a, b) = (find(&mut class_of, i), find(&mut class_of, j));
                class_of[a.max(b)] = a.min(b);
            }
        }
    }
    let mut classes: Vec<Vec<Marking>> = Vec::new();
    let mut root_index: Vec<Option<usize>> = vec![None; n];
    for i in 0..n {
        let r = find(&mut class_of, i);
        match root_index[r] {
            Some(k) => classes[k].push(markings[i].clone()),
            None => {
                root_index[r] = Some(classes.len());
                classes.push(vec![markings[i].clone()]);
            }
        }
    }
    classes.sort_by(|a, b| a[0].cmp(&b[0]));
    Ok(classes)
}

/// The part of a marking's seed that lives outside the core's commutation
/// set; this is what must land inside a component.
fn anchor(matrix: &CoxeterMatrix, mu: &Marking) -> Result<Subset> {
    let cut = Subset::singleton(mu.core()).union(diagram::perp(matrix, Subset::singleton(mu.core()))?);
    Ok(mu.seed().difference(cut))
}

/// Half-space attached to a whole component of the complement of the core:
/// computed from every marking anchored in the component, with an error if
/// they disagree.
pub fn component_halfspace(
    gens: &GeneratingSet,
    core: Gen,
    component: Subset,
    cutoff: u32,
) -> Result<HalfSpace> {
    let claimed = gens.claimed();
    let cut = Subset::singleton(core).union(diagram::perp(claimed, Subset::singleton(core))?);
    let components = diagram::defining_components(claimed, claimed.full().difference(cut));
    if !components.contains(&component) {
        return Err(Error::Precondition(format!(
            "{component} is not a component of the complement of core {core}"
        )));
    }
    let mut phi: Option<HalfSpace> = None;
    let mut used = 0usize;
    for mu in enumerate_markings(claimed, core)? {
        let a = anchor(claimed, &mu)?;
        if a.is_empty() || !a.is_subset_of(component) {
            continue;
        }
        used += 1;
        let h = phi_of_marking(gens, &mu, cutoff)?;
        match &phi {
            None => phi = Some(h),
            Some(prev) if *prev == h => {}
            Some(prev) => {
                return Err(Error::InconsistentClass(format!(
                    "marking {mu} gives {h}, earlier markings gave {prev}"
                )))
            }
        }
    }
    if used == 0 {
        return Err(Error::Precondition(format!(
            "no marking with core {core} is anchored in {component}"
        )));
    }
    Ok(phi.expect("at least one marking used"))
}

/// Admissibility of a marking relative to an irreducible non-spherical
/// subset: its core lies in the subset and, for every irreducible
/// spherical obstacle, the relevant remainders share a component.
pub fn is_admissible(matrix: &CoxeterMatrix, p: Subset, mu: &Marking) -> Result<bool> {
    matrix.check_subset(p)?;
    if !diagram::is_irreducible(matrix, p)? || diagram::is_spherical(matrix, p)? {
        return Err(Error::Precondition(format!("{p} must be irreducible and non-spherical")));
    }
    if !p.contains(mu.core()) {
        return Ok(false);
    }
    let full = matrix.full();
    for l in diagram::irreducible_spherical_subsets(matrix) {
        let cut = l.union(diagram::perp(matrix, l)?);
        let comps = diagram::defining_components(matrix, full.difference(cut));
        // "In the same component as the remainder of p": the component must
        // meet p outside the obstacle. When p satisfies the one-component
        // hypothesis this is exact containment.
        let meets_p = |component: Subset| -> bool {
            !component.intersection(p.difference(cut)).is_empty()
        };
        if l.contains(mu.core()) && !mu.support().is_subset_of(l) {
            let rem = mu.support().difference(cut);
            debug_assert!(!rem.is_empty(), "irreducible support cannot hide in the obstacle");
            let home = comps
                .iter()
                .find(|c| c.contains(rem.least().expect("nonempty remainder")))
                .copied()
                .ok_or_else(|| Error::InternalCheck("support remainder outside complement".into()))?;
            debug_assert!(rem.is_subset_of(home), "support remainder is a clique");
            if !meets_p(home) {
                return Ok(false);
            }
        }
        if mu.support().is_subset_of(l) {
            let home = comps
                .iter()
                .find(|c| c.contains(mu.marker()))
                .copied()
                .ok_or_else(|| Error::InternalCheck("marker trapped in the obstacle".into()))?;
            if !meets_p(home) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cox::CoxeterMatrix;
    use crate::geometry::Side;
    use crate::twist::GeneratingSet;

    fn arc(m: CoxeterMatrix) -> Arc<CoxeterMatrix> {
        Arc::new(m)
    }

    fn g1() -> Arc<CoxeterMatrix> {
        arc(CoxeterMatrix::from_edges(3, &[(0, 1, 3), (1, 2, 3)]).unwrap())
    }

    fn p5() -> Arc<CoxeterMatrix> {
        arc(CoxeterMatrix::right_angled(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap())
    }

    fn h3() -> Arc<CoxeterMatrix> {
        arc(CoxeterMatrix::from_edges(3, &[(0, 1, 5), (1, 2, 3), (0, 2, 2)]).unwrap())
    }

    #[test]
    fn base_examples() {
        let m = g1();
        let b = make_base(&m, 1, Subset::singleton(1)).unwrap();
        assert!(b.letters().is_empty());

        let b = make_base(&m, 1, Subset::from_iter([0, 1])).unwrap();
        assert_eq!(b.letters(), &[0]);

        let h = h3();
        let b = make_base(&h, 0, h.full()).unwrap();
        assert_eq!(b.letters(), &[1, 2]);
    }

    #[test]
    fn base_rejects_bad_input() {
        let m = g1();
        assert!(matches!(
            make_base(&m, 0, Subset::from_iter([0, 2])),
            Err(Error::NotIrreducibleSpherical(_))
        ));
        assert!(matches!(
            Base::from_word(&m, 1, &[0, 0]),
            Err(Error::BaseValidationFailed { .. })
        ));
    }

    #[test]
    fn base_is_unique_per_support() {
        // Every valid ordering of the support yields the same element.
        let h = h3();
        for core in 0..3u8 {
            let support = h.full();
            let rest: Vec<Gen> = support.iter().filter(|&j| j != core).collect();
            let mut witnesses = Vec::new();
            let perms = [[0usize, 1], [1, 0]];
            for perm in perms {
                let letters: Vec<Gen> = perm.iter().map(|&i| rest[i]).collect();
                if let Ok(b) = Base::from_word(&h, core, &letters) {
                    witnesses.push(b.element().clone());
                }
            }
            assert!(!witnesses.is_empty());
            for w in &witnesses {
                assert_eq!(w, &witnesses[0]);
            }
        }
    }

    #[test]
    fn marking_enumeration_examples() {
        let p = p5();
        let ms = enumerate_markings(&p, 2).unwrap();
        let shown: Vec<String> = ms.iter().map(|m| m.to_string()).collect();
        assert_eq!(shown, vec!["((2, []), 0)", "((2, []), 4)"]);

        let g = g1();
        let ms = enumerate_markings(&g, 1).unwrap();
        let shown: Vec<String> = ms.iter().map(|m| m.to_string()).collect();
        assert_eq!(shown, vec!["((1, [0]), 2)", "((1, [2]), 0)"]);
        assert!(ms.iter().all(|m| m.support() != Subset::singleton(1)));
    }

    #[test]
    fn standing_assumptions_are_enforced() {
        let h = h3();
        assert!(matches!(enumerate_markings(&h, 0), Err(Error::StandingAssumption(_))));
        let square =
            arc(CoxeterMatrix::right_angled(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap());
        assert!(matches!(enumerate_markings(&square, 0), Err(Error::StandingAssumption(_))));
    }

    #[test]
    fn phi_examples() {
        let p = p5();
        let std_gens = GeneratingSet::standard(&p);
        for mu in enumerate_markings(&p, 2).unwrap() {
            let h = phi_of_marking(&std_gens, &mu, 60).unwrap();
            assert_eq!(h.side, Side::Identity);
            assert_eq!(h.wall.element().word(), &[2]);
        }
    }

    #[test]
    fn move_examples() {
        let p = p5();
        let ms = enumerate_markings(&p, 2).unwrap();
        // Markers 0 and 4 are not adjacent: no move relates them.
        assert_eq!(related_by_move(&p, &ms[0], &ms[1]).unwrap(), None);

        // Core 0 of the path: markers 2,3,4 with 2-3 and 3-4 adjacent.
        let ms = enumerate_markings(&p, 0).unwrap();
        let by_marker = |k: Gen| ms.iter().find(|m| m.marker() == k).unwrap();
        assert_eq!(
            related_by_move(&p, by_marker(2), by_marker(3)).unwrap(),
            Some(Move::M1)
        );
        assert_eq!(related_by_move(&p, by_marker(2), by_marker(4)).unwrap(), None);

        // Support growth with a marker adjacent to the new element.
        let m2 = arc(CoxeterMatrix::from_edges(3, &[(0, 1, 3), (1, 2, 2)]).unwrap());
        let small = Marking::new(
            &m2,
            make_base(&m2, 0, Subset::singleton(0)).unwrap(),
            2,
        )
        .unwrap();
        let big = Marking::new(
            &m2,
            make_base(&m2, 0, Subset::from_iter([0, 1])).unwrap(),
            2,
        )
        .unwrap();
        assert_eq!(related_by_move(&m2, &small, &big).unwrap(), Some(Move::M2));
    }

    #[test]
    fn class_examples() {
        let p = p5();
        let classes = equivalence_classes(&p, 2).unwrap();
        assert_eq!(classes.len(), 2);
        assert!(classes.iter().all(|c| c.len() == 1));

        let g = g1();
        let classes = equivalence_classes(&g, 1).unwrap();
        assert_eq!(classes.len(), 2);
        let seeds: Vec<Subset> = classes.iter().map(|c| c[0].seed()).collect();
        assert_eq!(seeds, vec![Subset::singleton(0), Subset::singleton(2)]);

        // A single complement component yields a single class.
        let classes = equivalence_classes(&p, 0).unwrap();
        assert_eq!(classes.len(), 1);
    }

    #[test]
    fn component_halfspace_examples() {
        let p = p5();
        let std_gens = GeneratingSet::standard(&p);
        let a = component_halfspace(&std_gens, 2, Subset::singleton(0), 60).unwrap();
        let b = component_halfspace(&std_gens, 2, Subset::singleton(4), 60).unwrap();
        assert_eq!(a.side, Side::Identity);
        assert_eq!(a, b);
        assert!(matches!(
            component_halfspace(&std_gens, 2, Subset::singleton(3), 60),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn admissibility_examples() {
        let p = p5();
        let full = p.full();
        let mu = enumerate_markings(&p, 2).unwrap().into_iter().next().unwrap();
        assert!(is_admissible(&p, full, &mu).unwrap());

        // A star: legs are mutually detached, so a marking pointing out of
        // the subset fails.
        let star = arc(CoxeterMatrix::right_angled(
            6,
            &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)],
        )
        .unwrap());
        let legs = Subset::from_iter([1, 2, 3]);
        let mu = Marking::new(
            &star,
            make_base(&star, 1, Subset::singleton(1)).unwrap(),
            4,
        )
        .unwrap();
        assert!(!is_admissible(&star, legs, &mu).unwrap());
    }
}
