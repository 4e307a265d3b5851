//! Elementary twists of generating sets, cell refinement, the lexicographic
//! complexity, descent to a minimal-complexity set, and end-to-end
//! verification of a claimed generating set.

use crate::cox::{CoxeterMatrix, Gen, Order, Subset};
use crate::diagram;
use crate::error::{Error, Result};
use crate::geometry::{half_space_containing_wall, maximal_cell, CellData};
use crate::marking;
use crate::word::{
    is_reflection, longest_element, order_bounded, GroupElement, OrderBound, Reflection, Word,
};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize, Serializer};
use std::collections::BTreeSet;
use std::fmt;
use std::path::Path;
use std::sync::Arc;

/// A list of involutions of the ambient group claimed to form a Coxeter
/// generating set with the given matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratingSet {
    ambient: Arc<CoxeterMatrix>,
    generators: Vec<GroupElement>,
    claimed: Arc<CoxeterMatrix>,
}

impl GeneratingSet {
    /// Validate involutions and pairwise order agreement with the claimed
    /// matrix, up to the cutoff.
    pub fn new(
        ambient: Arc<CoxeterMatrix>,
        generators: Vec<GroupElement>,
        claimed: Arc<CoxeterMatrix>,
        cutoff: u32,
    ) -> Result<GeneratingSet> {
        if generators.len() != claimed.rank() {
            return Err(Error::Precondition(format!(
                "{} generators for a claimed matrix of rank {}",
                generators.len(),
                claimed.rank()
            )));
        }
        for g in &generators {
            if g.matrix() != &ambient {
                return Err(Error::MatrixMismatch);
            }
            if g.is_identity() || !g.mul(g)?.is_identity() {
                return Err(Error::Precondition(format!("generator {g} is not an involution")));
            }
        }
        for i in 0..generators.len() {
            for j in i + 1..generators.len() {
                let claim = claimed.order(i as Gen, j as Gen);
                let product = generators[i].mul(&generators[j])?;
                match pair_order_status(&ambient, &product, claim, cutoff) {
                    Status::Fail => {
                        return Err(Error::Precondition(format!(
                            "generators {i},{j} do not realize the claimed order {claim}"
                        )));
                    }
                    Status::Pass | Status::Inconclusive => {}
                }
            }
        }
        Ok(GeneratingSet { ambient, generators, claimed })
    }

    /// The standard generating set of a matrix: its own generators.
    pub fn standard(matrix: &Arc<CoxeterMatrix>) -> GeneratingSet {
        let generators = (0..matrix.rank() as Gen)
            .map(|s| GroupElement::generator(matrix, s).expect("index within rank"))
            .collect();
        GeneratingSet {
            ambient: matrix.clone(),
            generators,
            claimed: matrix.clone(),
        }
    }

    pub fn ambient(&self) -> &Arc<CoxeterMatrix> {
        &self.ambient
    }

    pub fn claimed(&self) -> &Arc<CoxeterMatrix> {
        &self.claimed
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    pub fn generator(&self, i: Gen) -> Result<&GroupElement> {
        self.generators
            .get(i as usize)
            .ok_or(Error::IndexOutOfRange { index: i as usize, rank: self.generators.len() })
    }

    pub fn reflection(&self, i: Gen) -> Result<Reflection> {
        Reflection::new(self.generator(i)?)
    }

    /// Image in the ambient group of an element of the claimed system,
    /// letter by letter. Well defined because the generators satisfy the
    /// claimed relations.
    pub fn lift(&self, claimed_elem: &GroupElement) -> Result<GroupElement> {
        if claimed_elem.matrix() != &self.claimed {
            return Err(Error::MatrixMismatch);
        }
        let mut acc = GroupElement::identity(&self.ambient);
        for &s in claimed_elem.word() {
            acc = acc.mul(self.generator(s)?)?;
        }
        Ok(acc)
    }

    /// Parse a generating-set file: `ambient <file.cox>`, `claimed
    /// <file.cox>`, then one bracketed word per generator. Matrix paths are
    /// resolved relative to the file.
    pub fn load(path: &Path, cutoff: u32) -> Result<GeneratingSet> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        let dir = path.parent().unwrap_or_else(|| Path::new("."));
        let mut ambient: Option<Arc<CoxeterMatrix>> = None;
        let mut claimed: Option<Arc<CoxeterMatrix>> = None;
        let mut words: Vec<Word> = Vec::new();
        for (lno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("ambient ") {
                ambient = Some(Arc::new(CoxeterMatrix::load(&dir.join(rest.trim()))?));
            } else if let Some(rest) = line.strip_prefix("claimed ") {
                claimed = Some(Arc::new(CoxeterMatrix::load(&dir.join(rest.trim()))?));
            } else {
                let w: Word = line.parse().map_err(|_| Error::Parse {
                    line: lno + 1,
                    col: 1,
                    msg: format!("expected a bracketed word, got `{line}`"),
                })?;
                words.push(w);
            }
        }
        let ambient = ambient.ok_or_else(|| Error::Parse {
            line: 1,
            col: 1,
            msg: "missing `ambient <file.cox>` header".into(),
        })?;
        let claimed = claimed.ok_or_else(|| Error::Parse {
            line: 1,
            col: 1,
            msg: "missing `claimed <file.cox>` header".into(),
        })?;
        let generators = words
            .iter()
            .map(|w| crate::word::canonical(&ambient, w))
            .collect::<Result<Vec<_>>>()?;
        GeneratingSet::new(ambient, generators, claimed, cutoff)
    }

    /// Text form with the given matrix references echoed back.
    pub fn format(&self, ambient_ref: &str, claimed_ref: &str) -> String {
        let mut out = format!("ambient {ambient_ref}\nclaimed {claimed_ref}\n");
        for g in &self.generators {
            out.push_str(&format!("{g}\n"));
        }
        out
    }
}

/// Compare the order of a product against a claimed value, exploiting the
/// largest-spherical-subgroup bound: exhausting it certifies infinity.
fn pair_order_status(
    ambient: &CoxeterMatrix,
    product: &GroupElement,
    claim: Order,
    cutoff: u32,
) -> Status {
    let bound = u32::try_from(diagram::finite_order_bound(ambient)).unwrap_or(u32::MAX);
    let effective = cutoff.min(bound);
    match (crate::word::order_probe(product, effective), claim) {
        (crate::word::OrderProbe::Finite(k), Order::Finite(m)) if k == m => Status::Pass,
        (crate::word::OrderProbe::Finite(_), _) => Status::Fail,
        (crate::word::OrderProbe::Exhausted, Order::Infinite) if effective >= bound => Status::Pass,
        (crate::word::OrderProbe::Exhausted, Order::Infinite) => Status::Inconclusive,
        (crate::word::OrderProbe::Exhausted, Order::Finite(m)) => {
            if effective >= bound || m <= effective {
                Status::Fail
            } else {
                Status::Inconclusive
            }
        }
        (crate::word::OrderProbe::Aborted, _) => Status::Inconclusive,
    }
}

/// Serializable snapshot of a generating set, embedding both matrices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratingSetData {
    pub ambient: CoxeterMatrix,
    pub claimed: CoxeterMatrix,
    pub generators: Vec<Word>,
}

impl GeneratingSetData {
    pub fn capture(gens: &GeneratingSet) -> GeneratingSetData {
        GeneratingSetData {
            ambient: (**gens.ambient()).clone(),
            claimed: (**gens.claimed()).clone(),
            generators: gens.generators().iter().map(|g| g.to_word()).collect(),
        }
    }

    pub fn restore(&self, cutoff: u32) -> Result<GeneratingSet> {
        let ambient = Arc::new(self.ambient.clone());
        let claimed = Arc::new(self.claimed.clone());
        let generators = self
            .generators
            .iter()
            .map(|w| crate::word::canonical(&ambient, w))
            .collect::<Result<Vec<_>>>()?;
        GeneratingSet::new(ambient, generators, claimed, cutoff)
    }
}

/// An elementary twist: conjugate the `b` side by the longest element of
/// the subgroup on `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistMove {
    pub j: Subset,
    pub a: Subset,
    pub b: Subset,
}

impl fmt::Display for TwistMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "J={} A={} B={}", self.j, self.a, self.b)
    }
}

/// All twist moves available on a matrix, one representative per
/// `{A,B}`-swap (swapping is conjugation by the longest element). With
/// `only_z2`, restrict to singleton `j`.
pub fn enumerate_twists(claimed: &CoxeterMatrix, only_z2: bool) -> Vec<TwistMove> {
    let mut out = Vec::new();
    for j in diagram::irreducible_spherical_subsets(claimed) {
        if only_z2 && j.len() != 1 {
            continue;
        }
        let witness = match diagram::weakly_separates(claimed, j) {
            Ok(Some(w)) => w,
            _ => continue,
        };
        let k = witness.components.len();
        for mask in 1u64..((1 << k) - 1) {
            if mask & 1 != 0 {
                continue; // keep the first component on the fixed side
            }
            let mut a = Subset::EMPTY;
            let mut b = Subset::EMPTY;
            for (idx, comp) in witness.components.iter().enumerate() {
                if mask & (1 << idx) == 0 {
                    a = a.union(*comp);
                } else {
                    b = b.union(*comp);
                }
            }
            out.push(TwistMove { j, a, b });
        }
    }
    out
}

fn validate_move(claimed: &CoxeterMatrix, mv: &TwistMove) -> Result<()> {
    let witness = diagram::weakly_separates(claimed, mv.j)
        .map_err(|e| Error::InvalidMove(e.to_string()))?
        .ok_or_else(|| Error::InvalidMove(format!("{} does not weakly separate", mv.j)))?;
    if mv.b.is_empty() || mv.a.is_empty() {
        return Err(Error::InvalidMove("both sides of the partition must be nonempty".into()));
    }
    if !mv.a.intersection(mv.b).is_empty() {
        return Err(Error::InvalidMove("partition sides overlap".into()));
    }
    let rest = claimed.full().difference(mv.j.union(diagram::perp(claimed, mv.j)?));
    if mv.a.union(mv.b) != rest {
        return Err(Error::InvalidMove(format!(
            "partition must cover exactly the complement {rest}"
        )));
    }
    for comp in &witness.components {
        if !comp.is_subset_of(mv.a) && !comp.is_subset_of(mv.b) {
            return Err(Error::InvalidMove(format!("component {comp} is split by the partition")));
        }
    }
    Ok(())
}

/// Apply an elementary twist. The claimed matrix of the result is
/// re-validated against the input's, so a twist that would change it is
/// rejected.
pub fn apply_twist(gens: &GeneratingSet, mv: &TwistMove, cutoff: u32) -> Result<GeneratingSet> {
    validate_move(gens.claimed(), mv)?;
    let w_j = longest_element(gens.claimed(), mv.j)?;
    let lifted = gens.lift(&w_j)?;
    let mut new_gens = Vec::with_capacity(gens.generators().len());
    for (i, g) in gens.generators().iter().enumerate() {
        if mv.b.contains(i as Gen) {
            new_gens.push(lifted.conjugate(g)?);
        } else {
            new_gens.push(g.clone());
        }
    }
    GeneratingSet::new(gens.ambient().clone(), new_gens, gens.claimed().clone(), cutoff)
}

/// Goodness witnesses for one irreducible component of `j` against `i`:
/// non-adjacent pairs `(t, r)` with `t` good with respect to `r`, in index
/// order.
fn component_witnesses(
    claimed: &CoxeterMatrix,
    comp: Subset,
    i: Subset,
) -> Result<Vec<(Gen, Gen)>> {
    let mut out = Vec::new();
    for t in comp.iter() {
        for r in i.iter() {
            if t == r || claimed.adjacent(t, r) || comp.contains(r) {
                continue;
            }
            if diagram::is_good(claimed, t, r, comp)? {
                out.push((t, r));
            }
        }
    }
    Ok(out)
}

/// The subset of the hub of `j`'s cell selected toward `i`: for each
/// irreducible component with a goodness witness, keep the chambers on the
/// same side of the witness wall as the other cell's wall. All witnesses
/// are evaluated and must agree.
pub fn oriented_hub(
    gens: &GeneratingSet,
    j: Subset,
    i: Subset,
    radius: u32,
    cutoff: u32,
) -> Result<BTreeSet<GroupElement>> {
    if j == i {
        return Err(Error::Precondition("the two subsets must differ".into()));
    }
    let cell = maximal_cell(gens, j, radius)?;
    oriented_hub_of_cell(gens, &cell, i, cutoff)
}

fn oriented_hub_of_cell(
    gens: &GeneratingSet,
    cell: &CellData,
    i: Subset,
    cutoff: u32,
) -> Result<BTreeSet<GroupElement>> {
    let claimed = gens.claimed();
    let mut selected: BTreeSet<GroupElement> = cell.hub.clone();
    for comp in diagram::irreducible_components(claimed, cell.subset)? {
        let witnesses = component_witnesses(claimed, comp, i)?;
        if witnesses.is_empty() {
            continue;
        }
        let mut filtered: Option<(BTreeSet<GroupElement>, (Gen, Gen))> = None;
        for (t, r) in witnesses {
            let wall_t = gens.reflection(t)?;
            let wall_r = gens.reflection(r)?;
            let half = half_space_containing_wall(&wall_t, &wall_r, cutoff)?;
            let mut keep = BTreeSet::new();
            for c in &cell.hub {
                if half.contains(c)? {
                    keep.insert(c.clone());
                }
            }
            if keep.len() * 2 != cell.hub.len() {
                return Err(Error::InternalCheck(format!(
                    "witness ({t},{r}) does not split the hub of {} in half",
                    cell.subset
                )));
            }
            match &filtered {
                None => filtered = Some((keep, (t, r))),
                Some((prev, first)) => {
                    if *prev != keep {
                        return Err(Error::WitnessDisagreement(format!(
                            "component {comp} of {}: witness ({t},{r}) disagrees with {first:?}",
                            cell.subset
                        )));
                    }
                }
            }
        }
        let (keep, _) = filtered.expect("nonempty witness list");
        selected = selected.intersection(&keep).cloned().collect();
    }
    Ok(selected)
}

/// Lexicographic complexity of a generating set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Complexity {
    pub k1: u64,
    pub k2: u64,
}

impl fmt::Display for Complexity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.k1, self.k2)
    }
}

impl Serialize for Complexity {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(2))?;
        seq.serialize_element(&self.k1)?;
        seq.serialize_element(&self.k2)?;
        seq.end()
    }
}

fn set_distance(a: &BTreeSet<GroupElement>, b: &BTreeSet<GroupElement>) -> Result<u64> {
    let mut best: Option<u64> = None;
    for x in a {
        let xi = x.inverse()?;
        for y in b {
            let d = xi.mul(y)?.length() as u64;
            best = Some(best.map_or(d, |cur| cur.min(d)));
            if best == Some(0) {
                return Ok(0);
            }
        }
    }
    best.ok_or_else(|| Error::InternalCheck("distance between empty chamber sets".into()))
}

fn check_complexity_preconditions(claimed: &CoxeterMatrix) -> Result<()> {
    if !diagram::is_fc(claimed) {
        return Err(Error::NotFc);
    }
    if !diagram::is_k_rigid(claimed, 2) {
        return Err(Error::Precondition("claimed matrix must be 2-rigid".into()));
    }
    Ok(())
}

/// Complexity of a generating set: summed cell distances, then summed
/// oriented-hub distances, over unordered pairs of maximal spherical
/// subsets. Zero exactly on sets conjugate to the standard one.
pub fn complexity(gens: &GeneratingSet, radius: u32, cutoff: u32) -> Result<Complexity> {
    check_complexity_preconditions(gens.claimed())?;
    let subsets = diagram::maximal_spherical_subsets(gens.claimed())?;
    let cells: Vec<CellData> = subsets
        .iter()
        .map(|&j| maximal_cell(gens, j, radius))
        .collect::<Result<Vec<_>>>()?;
    let mut k1 = 0u64;
    let mut k2 = 0u64;
    for a in 0..cells.len() {
        for b in a + 1..cells.len() {
            k1 += set_distance(&cells[a].chambers, &cells[b].chambers)?;
            let e_ab = oriented_hub_of_cell(gens, &cells[a], subsets[b], cutoff)?;
            let e_ba = oriented_hub_of_cell(gens, &cells[b], subsets[a], cutoff)?;
            k2 += set_distance(&e_ab, &e_ba)?;
        }
    }
    Ok(Complexity { k1, k2 })
}

fn check_descent_preconditions(claimed: &CoxeterMatrix) -> Result<()> {
    check_complexity_preconditions(claimed)?;
    if !diagram::is_irreducible(claimed, claimed.full())? {
        return Err(Error::StandingAssumption("claimed matrix must be irreducible"));
    }
    if diagram::is_spherical(claimed, claimed.full())? {
        return Err(Error::StandingAssumption("claimed matrix must be non-spherical"));
    }
    Ok(())
}

/// Search for a single twist that lowers the complexity: scan cores whose
/// complement components disagree on their half-space, and try the
/// component-respecting partitions that separate a disagreeing pair.
pub fn find_descending_twist(
    gens: &GeneratingSet,
    radius: u32,
    cutoff: u32,
) -> Result<Option<(TwistMove, Complexity)>> {
    check_descent_preconditions(gens.claimed())?;
    let claimed = gens.claimed();
    let base = complexity(gens, radius, cutoff)?;
    for core in 0..claimed.rank() as Gen {
        let cut = Subset::singleton(core).union(diagram::perp(claimed, Subset::singleton(core))?);
        let comps = diagram::defining_components(claimed, claimed.full().difference(cut));
        if comps.len() < 2 {
            continue;
        }
        let phis = comps
            .iter()
            .map(|&c| marking::component_halfspace(gens, core, c, cutoff))
            .collect::<Result<Vec<_>>>()?;
        if phis.iter().all(|h| *h == phis[0]) {
            continue;
        }
        let k = comps.len();
        for mask in 1u64..((1 << k) - 1) {
            if mask & 1 != 0 {
                continue;
            }
            let splits_disagreeing_pair = (0..k).any(|x| {
                (0..k).any(|y| {
                    mask & (1 << x) == 0 && mask & (1 << y) != 0 && phis[x] != phis[y]
                })
            });
            if !splits_disagreeing_pair {
                continue;
            }
            let mut a = Subset::EMPTY;
            let mut b = Subset::EMPTY;
            for (idx, comp) in comps.iter().enumerate() {
                if mask & (1 << idx) == 0 {
                    a = a.union(*comp);
                } else {
                    b = b.union(*comp);
                }
            }
            let mv = TwistMove { j: Subset::singleton(core), a, b };
            let candidate = apply_twist(gens, &mv, cutoff)?;
            let k_new = complexity(&candidate, radius, cutoff)?;
            if k_new < base {
                return Ok(Some((mv, k_new)));
            }
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, Serialize)]
pub struct ReduceStep {
    #[serde(rename = "move")]
    pub mv: TwistMove,
    pub complexity_before: Complexity,
    pub complexity_after: Complexity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ReduceStatus {
    /// A conjugator onto the standard generators was found.
    Conjugate,
    /// Fixed point reached but some core still has disagreeing marking
    /// half-spaces.
    Stalled,
}

#[derive(Debug, Clone)]
pub struct ReduceOutcome {
    pub steps: Vec<ReduceStep>,
    pub final_set: GeneratingSet,
    pub conjugator: Option<GroupElement>,
    pub status: ReduceStatus,
}

/// Iterate descending twists to a fixed point, then check that every core
/// has a single marking half-space and search for a conjugator onto the
/// standard generators.
pub fn reduce(
    gens: &GeneratingSet,
    radius: u32,
    cutoff: u32,
    max_steps: u32,
) -> Result<ReduceOutcome> {
    check_descent_preconditions(gens.claimed())?;
    let mut current = gens.clone();
    let mut steps: Vec<ReduceStep> = Vec::new();
    loop {
        match find_descending_twist(&current, radius, cutoff)? {
            None => break,
            Some((mv, after)) => {
                let before = complexity(&current, radius, cutoff)?;
                if after >= before {
                    return Err(Error::InternalCheck(format!(
                        "descent step did not decrease complexity: {before} -> {after}"
                    )));
                }
                current = apply_twist(&current, &mv, cutoff)?;
                steps.push(ReduceStep { mv, complexity_before: before, complexity_after: after });
                if steps.len() as u32 > max_steps {
                    return Err(Error::StepBudgetExceeded { steps: max_steps });
                }
            }
        }
    }
    // Geometric criterion at the fixed point: all markings of each core
    // must agree on the half-space.
    let claimed = current.claimed().clone();
    for core in 0..claimed.rank() as Gen {
        let mut seen: Option<crate::geometry::HalfSpace> = None;
        for mu in marking::enumerate_markings(&claimed, core)? {
            let h = marking::phi_of_marking(&current, &mu, cutoff)?;
            match &seen {
                None => seen = Some(h),
                Some(prev) if *prev == h => {}
                Some(_) => {
                    return Ok(ReduceOutcome {
                        steps,
                        final_set: current,
                        conjugator: None,
                        status: ReduceStatus::Stalled,
                    });
                }
            }
        }
    }
    // Bounded conjugator search in shortlex order.
    let ambient = current.ambient().clone();
    let target: BTreeSet<GroupElement> = (0..ambient.rank() as Gen)
        .map(|s| GroupElement::generator(&ambient, s).expect("index within rank"))
        .collect();
    for layer in crate::word::ball_layers(&ambient, radius)? {
        for g in layer {
            let gi = g.inverse()?;
            let mut image = BTreeSet::new();
            for h in current.generators() {
                image.insert(gi.mul(h)?.mul(&g)?);
            }
            if image == target {
                return Ok(ReduceOutcome {
                    steps,
                    final_set: current,
                    conjugator: Some(g),
                    status: ReduceStatus::Conjugate,
                });
            }
        }
    }
    Err(Error::ConjugatorNotFound { radius })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Pass => write!(f, "pass"),
            Status::Fail => write!(f, "fail"),
            Status::Inconclusive => write!(f, "inconclusive"),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub items: Vec<(String, Status)>,
}

impl VerifyReport {
    pub fn overall(&self) -> Status {
        let mut out = Status::Pass;
        for (_, s) in &self.items {
            match s {
                Status::Fail => return Status::Fail,
                Status::Inconclusive => out = Status::Inconclusive,
                Status::Pass => {}
            }
        }
        out
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, status) in &self.items {
            writeln!(f, "{name}: {status}")?;
        }
        write!(f, "overall: {}", self.overall())
    }
}

/// Full report on a claimed generating set: involutions, pairwise orders,
/// reflection and angle compatibility, and a bounded generation check.
pub fn verify_genset(gens: &GeneratingSet, radius: u32, cutoff: u32) -> Result<VerifyReport> {
    let mut items = Vec::new();
    let claimed = gens.claimed();
    let ambient = gens.ambient();

    let involutions = gens
        .generators()
        .iter()
        .map(|g| Ok(!g.is_identity() && g.mul(g)?.is_identity()))
        .collect::<Result<Vec<bool>>>()?;
    items.push((
        "involutions".to_string(),
        if involutions.iter().all(|&b| b) { Status::Pass } else { Status::Fail },
    ));

    let mut orders = Status::Pass;
    for i in 0..gens.generators().len() {
        for j in i + 1..gens.generators().len() {
            let claim = claimed.order(i as Gen, j as Gen);
            let product = gens.generator(i as Gen)?.mul(gens.generator(j as Gen)?)?;
            match (order_bounded(&product, cutoff), claim) {
                (OrderBound::Finite(k), Order::Finite(m)) if k == m => {}
                (OrderBound::Finite(_), _) => orders = Status::Fail,
                (OrderBound::Unknown { .. }, Order::Finite(m)) => {
                    if m <= cutoff {
                        orders = Status::Fail;
                    } else if orders == Status::Pass {
                        orders = Status::Inconclusive;
                    }
                }
                (OrderBound::Unknown { .. }, Order::Infinite) => {}
            }
        }
    }
    items.push(("pair-orders".to_string(), orders));

    let mut reflections = Status::Pass;
    for g in gens.generators() {
        match is_reflection(g) {
            Ok(Some(_)) => {}
            Ok(None) => reflections = Status::Fail,
            Err(Error::WordBudgetExceeded) => {
                if reflections == Status::Pass {
                    reflections = Status::Inconclusive;
                }
            }
            Err(e) => return Err(e),
        }
    }
    items.push(("reflection-compatibility".to_string(), reflections));

    let mut angles = Status::Pass;
    let layers = crate::word::ball_layers(ambient, radius)?;
    for i in 0..gens.generators().len() {
        for j in i + 1..gens.generators().len() {
            if !claimed.order(i as Gen, j as Gen).is_finite() {
                continue;
            }
            let gi = gens.generator(i as Gen)?;
            let gj = gens.generator(j as Gen)?;
            let mut found = false;
            'outer: for layer in &layers {
                for x in layer {
                    let xi = x.inverse()?;
                    let a = xi.mul(gi)?.mul(x)?;
                    let b = xi.mul(gj)?.mul(x)?;
                    if a.length() == 1 && b.length() == 1 {
                        found = true;
                        break 'outer;
                    }
                }
            }
            if !found && angles == Status::Pass {
                angles = Status::Inconclusive;
            }
        }
    }
    items.push(("angle-compatibility".to_string(), angles));

    let maxlen = gens.generators().iter().map(|g| g.length()).max().unwrap_or(1) as u32;
    let depth = radius.saturating_mul(maxlen).max(1);
    let targets: BTreeSet<GroupElement> = (0..ambient.rank() as Gen)
        .map(|s| GroupElement::generator(ambient, s).expect("index within rank"))
        .collect();
    let mut seen: BTreeSet<GroupElement> = BTreeSet::new();
    seen.insert(GroupElement::identity(ambient));
    let mut frontier: Vec<GroupElement> = seen.iter().cloned().collect();
    let mut generation = Status::Inconclusive;
    let node_cap = 200_000usize;
    'gen: for _ in 0..depth {
        if targets.iter().all(|t| seen.contains(t)) {
            generation = Status::Pass;
            break;
        }
        let mut next = Vec::new();
        for x in &frontier {
            for g in gens.generators() {
                let y = x.mul(g)?;
                if seen.insert(y.clone()) {
                    next.push(y);
                }
            }
            if seen.len() > node_cap {
                break 'gen;
            }
        }
        if next.is_empty() {
            // The subgroup closed without reaching every ambient generator.
            generation =
                if targets.iter().all(|t| seen.contains(t)) { Status::Pass } else { Status::Fail };
            break;
        }
        frontier = next;
    }
    if generation != Status::Fail && targets.iter().all(|t| seen.contains(t)) {
        generation = Status::Pass;
    }
    items.push(("generation".to_string(), generation));

    Ok(VerifyReport { items })
}

/// Brute-force scan of a rank-3 triangle group: the chambers satisfying
/// the three sector conditions around the identity chamber. Supported
/// types: orders (2,3,3), (2,3,4), (2,3,5).
pub fn three_generator_chambers(p: u32, q: u32) -> Result<BTreeSet<GroupElement>> {
    if p != 3 || !(3..=5).contains(&q) {
        return Err(Error::Precondition(format!(
            "unsupported triangle type (2,{p},{q}); supported: (2,3,3), (2,3,4), (2,3,5)"
        )));
    }
    let m = Arc::new(CoxeterMatrix::from_edges(3, &[(0, 1, p), (1, 2, q), (0, 2, 2)])?);
    let s = |i: Gen| GroupElement::generator(&m, i).expect("rank 3");
    let r0 = Reflection::of_generator(&m, 0)?;
    let r2 = Reflection::of_generator(&m, 2)?;
    let e = GroupElement::identity(&m);
    let side = crate::geometry::side_of;
    let mut out = BTreeSet::new();
    for c in crate::word::enumerate_coset(&m, m.full())? {
        let s2c = s(1).mul(&c)?;
        let s2s3c = s(1).mul(&s(2).mul(&c)?)?;
        let s2s1c = s(1).mul(&s(0).mul(&c)?)?;
        let cond1 = side(&r0, &c)? == side(&r0, &e)?;
        let cond2 = side(&r0, &c)? == side(&r0, &s2c)? && side(&r0, &c)? == side(&r0, &s2s3c)?;
        let cond3 = side(&r2, &c)? == side(&r2, &s2c)? && side(&r2, &c)? == side(&r2, &s2s1c)?;
        if cond1 && cond2 && cond3 {
            out.insert(c);
        }
    }
    Ok(out)
}
