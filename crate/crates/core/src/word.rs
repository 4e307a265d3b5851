//! Exact word problem over an arbitrary Coxeter matrix.
//!
//! Elements are kept as shortlex-minimal reduced words. Reduction explores
//! the braid class of a word (replace an alternating `s,t,...` run of
//! length `m_st` by the flipped run, delete equal adjacent letters) to
//! exhaustion, which is exact for every matrix. Exploration is budgeted;
//! running out of budget is reported, never silently truncated.

use crate::cox::{CoxeterMatrix, Gen, Order, Subset};
use crate::diagram;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

/// Exploration budget per reduction call, in visited words.
const WORD_BUDGET: usize = 400_000;

/// Raw word: a sequence of generator indices, not necessarily reduced.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Word(pub Vec<Gen>);

impl Word {
    pub fn letters(&self) -> &[Gen] {
        &self.0
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, g) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .ok_or_else(|| Error::Parse {
                line: 1,
                col: 1,
                msg: format!("word must be bracketed like [0,1,0], got `{s}`"),
            })?;
        let mut letters = Vec::new();
        for piece in inner.split(',') {
            let piece = piece.trim();
            if piece.is_empty() {
                continue;
            }
            let g: Gen = piece.parse().map_err(|_| Error::Parse {
                line: 1,
                col: 1,
                msg: format!("bad generator index `{piece}`"),
            })?;
            letters.push(g);
        }
        Ok(Word(letters))
    }
}

/// Group element in shortlex-minimal reduced form over a fixed matrix.
#[derive(Debug, Clone)]
pub struct GroupElement {
    matrix: Arc<CoxeterMatrix>,
    word: Box<[Gen]>,
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.word == other.word
            && (Arc::ptr_eq(&self.matrix, &other.matrix) || self.matrix == other.matrix)
    }
}
impl Eq for GroupElement {}

impl std::hash::Hash for GroupElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.matrix.rank().hash(state);
        self.word.hash(state);
    }
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GroupElement {
    /// Shortlex on the canonical word; matrix identity is only consulted to
    /// keep the order total across matrices.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        shortlex(&self.word, &other.word).then_with(|| {
            if Arc::ptr_eq(&self.matrix, &other.matrix) || self.matrix == other.matrix {
                std::cmp::Ordering::Equal
            } else {
                self.matrix.rank().cmp(&other.matrix.rank())
            }
        })
    }
}

fn shortlex(a: &[Gen], b: &[Gen]) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, g) in self.word.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "]")
    }
}

impl GroupElement {
    pub fn identity(matrix: &Arc<CoxeterMatrix>) -> GroupElement {
        GroupElement { matrix: matrix.clone(), word: Box::default() }
    }

    pub fn generator(matrix: &Arc<CoxeterMatrix>, s: Gen) -> Result<GroupElement> {
        matrix.check_gen(s)?;
        Ok(GroupElement { matrix: matrix.clone(), word: vec![s].into_boxed_slice() })
    }

    pub fn matrix(&self) -> &Arc<CoxeterMatrix> {
        &self.matrix
    }

    pub fn word(&self) -> &[Gen] {
        &self.word
    }

    pub fn to_word(&self) -> Word {
        Word(self.word.to_vec())
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    fn same_matrix(&self, other: &GroupElement) -> Result<()> {
        if Arc::ptr_eq(&self.matrix, &other.matrix) || self.matrix == other.matrix {
            Ok(())
        } else {
            Err(Error::MatrixMismatch)
        }
    }

    /// Right multiplication by a generator.
    pub fn mul_gen(&self, s: Gen) -> Result<GroupElement> {
        self.matrix.check_gen(s)?;
        let mut w = Vec::with_capacity(self.word.len() + 1);
        w.extend_from_slice(&self.word);
        w.push(s);
        let canon = reduce_word(&self.matrix, &w)?;
        Ok(GroupElement { matrix: self.matrix.clone(), word: canon })
    }

    pub fn mul(&self, other: &GroupElement) -> Result<GroupElement> {
        self.same_matrix(other)?;
        let mut acc = self.clone();
        for &s in other.word.iter() {
            acc = acc.mul_gen(s)?;
        }
        Ok(acc)
    }

    pub fn inverse(&self) -> Result<GroupElement> {
        let rev: Vec<Gen> = self.word.iter().rev().copied().collect();
        let canon = reduce_word(&self.matrix, &rev)?;
        Ok(GroupElement { matrix: self.matrix.clone(), word: canon })
    }

    /// `self * x * self^-1`.
    pub fn conjugate(&self, x: &GroupElement) -> Result<GroupElement> {
        self.mul(x)?.mul(&self.inverse()?)
    }
}

/// Canonical form of an arbitrary word.
pub fn canonical(matrix: &Arc<CoxeterMatrix>, w: &Word) -> Result<GroupElement> {
    for &g in w.letters() {
        matrix.check_gen(g)?;
    }
    let canon = reduce_word(matrix, w.letters())?;
    Ok(GroupElement { matrix: matrix.clone(), word: canon })
}

pub fn multiply(a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
    a.mul(b)
}

pub fn inverse(a: &GroupElement) -> Result<GroupElement> {
    a.inverse()
}

pub fn conjugate(g: &GroupElement, x: &GroupElement) -> Result<GroupElement> {
    g.conjugate(x)
}

/// Gallery distance between two chambers: word length of `a^-1 b`.
pub fn gallery_distance(a: &GroupElement, b: &GroupElement) -> Result<usize> {
    Ok(a.inverse()?.mul(b)?.length())
}

fn strip_equal_pairs(w: &mut Vec<Gen>) {
    let mut i = 0;
    while i + 1 < w.len() {
        if w[i] == w[i + 1] {
            w.drain(i..i + 2);
            i = i.saturating_sub(1);
        } else {
            i += 1;
        }
    }
}

fn find_equal_pair(w: &[Gen]) -> Option<usize> {
    w.windows(2).position(|p| p[0] == p[1])
}

/// All single braid rewrites of `w` (alternating run of full length
/// `m_st` flipped).
fn braid_rewrites(m: &CoxeterMatrix, w: &[Gen], out: &mut Vec<Box<[Gen]>>) {
    out.clear();
    for i in 0..w.len().saturating_sub(1) {
        let s = w[i];
        let t = w[i + 1];
        if s == t {
            continue;
        }
        if let Order::Finite(k) = m.order(s, t) {
            let k = k as usize;
            if i + k > w.len() {
                continue;
            }
            let alternating = (0..k).all(|j| w[i + j] == if j % 2 == 0 { s } else { t });
            if alternating {
                let mut y = w.to_vec();
                for (j, slot) in y[i..i + k].iter_mut().enumerate() {
                    *slot = if j % 2 == 0 { t } else { s };
                }
                out.push(y.into_boxed_slice());
            }
        }
    }
}

/// Shortlex-minimal reduced word of the element spelled by `input`.
fn reduce_word(m: &CoxeterMatrix, input: &[Gen]) -> Result<Box<[Gen]>> {
    if input.len() <= 1 {
        return Ok(input.into());
    }
    if let Some(hit) = m.pad().canon.lock().unwrap().get(input) {
        return Ok(hit.clone());
    }
    let mut budget = WORD_BUDGET;
    let mut milestones: Vec<Box<[Gen]>> = vec![input.into()];
    let mut w: Vec<Gen> = input.to_vec();
    strip_equal_pairs(&mut w);
    let mut rewrites: Vec<Box<[Gen]>> = Vec::new();
    let canon: Box<[Gen]> = 'outer: loop {
        if w.len() <= 1 {
            break w.clone().into_boxed_slice();
        }
        if let Some(hit) = m.pad().canon.lock().unwrap().get(w.as_slice()) {
            break hit.clone();
        }
        milestones.push(w.clone().into_boxed_slice());
        let start: Box<[Gen]> = w.clone().into_boxed_slice();
        let mut best = start.clone();
        let mut visited: HashSet<Box<[Gen]>> = HashSet::new();
        visited.insert(start.clone());
        let mut queue: VecDeque<Box<[Gen]>> = VecDeque::new();
        queue.push_back(start);
        while let Some(x) = queue.pop_front() {
            braid_rewrites(m, &x, &mut rewrites);
            for y in rewrites.drain(..) {
                if let Some(i) = find_equal_pair(&y) {
                    let mut v = y.into_vec();
                    v.drain(i..i + 2);
                    strip_equal_pairs(&mut v);
                    w = v;
                    continue 'outer;
                }
                if !visited.contains(&y) {
                    budget = budget.checked_sub(1).ok_or(Error::WordBudgetExceeded)?;
                    if y < best {
                        best = y.clone();
                    }
                    visited.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        break best;
    };
    let mut cache = m.pad().canon.lock().unwrap();
    for key in milestones {
        cache.insert(key, canon.clone());
    }
    cache.insert(canon.clone(), canon.clone());
    Ok(canon)
}

/// Full braid class of a reduced element: every reduced word spelling it.
pub fn reduced_class(g: &GroupElement) -> Result<BTreeSet<Box<[Gen]>>> {
    let m = g.matrix();
    let mut budget = WORD_BUDGET;
    let start: Box<[Gen]> = g.word().into();
    let mut visited: BTreeSet<Box<[Gen]>> = BTreeSet::new();
    visited.insert(start.clone());
    let mut queue: VecDeque<Box<[Gen]>> = VecDeque::new();
    queue.push_back(start);
    let mut rewrites = Vec::new();
    while let Some(x) = queue.pop_front() {
        braid_rewrites(m, &x, &mut rewrites);
        for y in rewrites.drain(..) {
            debug_assert!(find_equal_pair(&y).is_none(), "class of a reduced word cancelled");
            if !visited.contains(&y) {
                budget = budget.checked_sub(1).ok_or(Error::WordBudgetExceeded)?;
                visited.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(visited)
}

/// Outcome of a bounded order computation. Never claims infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum OrderBound {
    Finite(u32),
    Unknown { cutoff: u32 },
}

/// Internal three-way outcome: `Exhausted` is a sound certificate that no
/// order `<= cutoff` exists; `Aborted` means the word budget ran out and
/// nothing is certified.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum OrderProbe {
    Finite(u32),
    Exhausted,
    Aborted,
}

pub(crate) fn order_probe(g: &GroupElement, cutoff: u32) -> OrderProbe {
    if g.is_identity() {
        return OrderProbe::Finite(1);
    }
    if cutoff == 0 {
        return OrderProbe::Exhausted;
    }
    let step = g.length();
    let mut x = g.clone();
    for k in 1..=cutoff {
        if x.is_identity() {
            return OrderProbe::Finite(k);
        }
        // The length can shrink by at most `step` per multiplication, so
        // once it exceeds the remaining budget times `step` the identity is
        // out of reach within the cutoff.
        if x.length() > (cutoff - k) as usize * step {
            return OrderProbe::Exhausted;
        }
        x = match x.mul(g) {
            Ok(next) => next,
            Err(Error::WordBudgetExceeded) => return OrderProbe::Aborted,
            Err(e) => unreachable!("unexpected word engine failure: {e}"),
        };
    }
    OrderProbe::Exhausted
}

/// Least `k <= cutoff` with `g^k = 1`, if any.
pub fn order_bounded(g: &GroupElement, cutoff: u32) -> OrderBound {
    match order_probe(g, cutoff) {
        OrderProbe::Finite(k) => OrderBound::Finite(k),
        OrderProbe::Exhausted | OrderProbe::Aborted => OrderBound::Unknown { cutoff },
    }
}

/// Unique maximal-length element of the finite subgroup generated by `j`,
/// reached by greedy length ascent.
pub fn longest_element(matrix: &Arc<CoxeterMatrix>, j: Subset) -> Result<GroupElement> {
    matrix.check_subset(j)?;
    if !diagram::is_spherical(matrix, j)? {
        return Err(Error::NotSpherical(j));
    }
    let mut w = GroupElement::identity(matrix);
    'ascent: loop {
        for s in j.iter() {
            let next = w.mul_gen(s)?;
            if next.length() > w.length() {
                w = next;
                continue 'ascent;
            }
        }
        return Ok(w);
    }
}

/// Reflection: an element conjugate to a generator, with a concrete
/// conjugation witness `element = u s u^-1`.
#[derive(Debug, Clone)]
pub struct Reflection {
    element: GroupElement,
    prefix: GroupElement,
    core: Gen,
}

impl PartialEq for Reflection {
    fn eq(&self, other: &Self) -> bool {
        self.element == other.element
    }
}
impl Eq for Reflection {}
impl PartialOrd for Reflection {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Reflection {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.element.cmp(&other.element)
    }
}
impl std::hash::Hash for Reflection {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.element.hash(state);
    }
}

impl fmt::Display for Reflection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.element)
    }
}

impl Reflection {
    pub fn of_generator(matrix: &Arc<CoxeterMatrix>, s: Gen) -> Result<Reflection> {
        Ok(Reflection {
            element: GroupElement::generator(matrix, s)?,
            prefix: GroupElement::identity(matrix),
            core: s,
        })
    }

    /// Validate `g` as a reflection; the stored witness is the
    /// deterministic one found by [`is_reflection`].
    pub fn new(g: &GroupElement) -> Result<Reflection> {
        is_reflection(g)?.ok_or_else(|| Error::NotReflection(g.to_string()))
    }

    pub fn element(&self) -> &GroupElement {
        &self.element
    }

    /// The witness pair `(u, s)` with `element = u s u^-1`.
    pub fn witness(&self) -> (&GroupElement, Gen) {
        (&self.prefix, self.core)
    }

    /// A chamber incident to this reflection's wall: the witness prefix.
    pub fn incident_chamber(&self) -> &GroupElement {
        &self.prefix
    }

    pub fn matrix(&self) -> &Arc<CoxeterMatrix> {
        self.element.matrix()
    }
}

/// Recognize a reflection: an odd-length element whose braid class contains
/// a palindrome `u s reverse(u)`. Returns the witness with shortlex-least
/// prefix, or `None`.
pub fn is_reflection(g: &GroupElement) -> Result<Option<Reflection>> {
    if g.length() % 2 == 0 {
        return Ok(None);
    }
    let class = reduced_class(g)?;
    let mut best: Option<&Box<[Gen]>> = None;
    for word in &class {
        let is_palindrome = word.iter().eq(word.iter().rev());
        if is_palindrome {
            // Same-length palindromes: the lexicographically least word has
            // the shortlex-least prefix.
            match best {
                Some(cur) if &word >= &cur => {}
                _ => best = Some(word),
            }
        }
    }
    Ok(best.map(|word| {
        let half = word.len() / 2;
        let prefix = GroupElement {
            matrix: g.matrix().clone(),
            word: word[..half].into(),
        };
        Reflection { element: g.clone(), prefix, core: word[half] }
    }))
}

/// Ball of the Cayley graph split into layers by word length; layer `k`
/// holds all elements of length exactly `k` in sorted order.
pub fn ball_layers(matrix: &Arc<CoxeterMatrix>, radius: u32) -> Result<Vec<Vec<GroupElement>>> {
    let mut layers: Vec<Vec<GroupElement>> = vec![vec![GroupElement::identity(matrix)]];
    for k in 0..radius as usize {
        let mut next: BTreeSet<GroupElement> = BTreeSet::new();
        for x in &layers[k] {
            for s in 0..matrix.rank() as Gen {
                let y = x.mul_gen(s)?;
                if y.length() == k + 1 {
                    next.insert(y);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        layers.push(next.into_iter().collect());
    }
    Ok(layers)
}

/// All elements of length at most `radius`.
pub fn enumerate_ball(matrix: &Arc<CoxeterMatrix>, radius: u32) -> Result<BTreeSet<GroupElement>> {
    Ok(ball_layers(matrix, radius)?.into_iter().flatten().collect())
}

/// The whole finite subgroup generated by `j`.
pub fn enumerate_coset(matrix: &Arc<CoxeterMatrix>, j: Subset) -> Result<BTreeSet<GroupElement>> {
    matrix.check_subset(j)?;
    if !diagram::is_spherical(matrix, j)? {
        return Err(Error::NotSpherical(j));
    }
    let mut seen: BTreeSet<GroupElement> = BTreeSet::new();
    let mut frontier = vec![GroupElement::identity(matrix)];
    seen.insert(frontier[0].clone());
    while let Some(x) = frontier.pop() {
        for s in j.iter() {
            let y = x.mul_gen(s)?;
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    Ok(seen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cox::CoxeterMatrix;

    fn g1() -> Arc<CoxeterMatrix> {
        Arc::new(CoxeterMatrix::from_edges(3, &[(0, 1, 3), (1, 2, 3)]).unwrap())
    }

    fn p5() -> Arc<CoxeterMatrix> {
        Arc::new(CoxeterMatrix::right_angled(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap())
    }

    fn h3() -> Arc<CoxeterMatrix> {
        Arc::new(CoxeterMatrix::from_edges(3, &[(0, 1, 5), (1, 2, 3), (0, 2, 2)]).unwrap())
    }

    fn elem(m: &Arc<CoxeterMatrix>, w: &[Gen]) -> GroupElement {
        canonical(m, &Word(w.to_vec())).unwrap()
    }

    #[test]
    fn involution_cancels() {
        let m = g1();
        assert!(elem(&m, &[1, 1]).is_identity());
    }

    #[test]
    fn braid_relation_identifies_words() {
        let m = g1();
        assert_eq!(elem(&m, &[0, 1, 0]), elem(&m, &[1, 0, 1]));
        assert_eq!(elem(&m, &[0, 1, 0]).word(), &[0, 1, 0]);
    }

    #[test]
    fn infinite_bond_admits_no_relation() {
        let m = g1();
        assert_eq!(elem(&m, &[0, 2, 0, 2]).length(), 4);
    }

    #[test]
    fn group_axioms_on_samples() {
        let m = g1();
        for w in [&[0u8, 1][..], &[2, 1, 0], &[0, 1, 2, 0], &[1, 2, 1, 0, 2]] {
            let x = elem(&m, w);
            assert!(x.mul(&x.inverse().unwrap()).unwrap().is_identity());
        }
        let a = elem(&m, &[0, 1]);
        let b = elem(&m, &[1, 2]);
        let c = elem(&m, &[2, 0]);
        assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
    }

    #[test]
    fn conjugate_example() {
        let m = p5();
        let g = elem(&m, &[2]);
        let x = elem(&m, &[4]);
        let r = g.conjugate(&x).unwrap();
        assert_eq!(r.word(), &[2, 4, 2]);
        assert_eq!(r.length(), 3);
    }

    #[test]
    fn order_examples() {
        let m = g1();
        assert_eq!(order_bounded(&elem(&m, &[0, 1]), 10), OrderBound::Finite(3));
        assert_eq!(order_bounded(&elem(&m, &[0, 2]), 50), OrderBound::Unknown { cutoff: 50 });
        assert_eq!(order_bounded(&GroupElement::identity(&m), 5), OrderBound::Finite(1));
    }

    #[test]
    fn longest_element_examples() {
        let m = g1();
        assert_eq!(longest_element(&m, Subset::singleton(0)).unwrap(), elem(&m, &[0]));
        let w = longest_element(&m, Subset::from_iter([0, 1])).unwrap();
        assert_eq!(w.word(), &[0, 1, 0]);
        let h = h3();
        let w0 = longest_element(&h, h.full()).unwrap();
        assert_eq!(w0.length(), 15);
        assert!(w0.mul(&w0).unwrap().is_identity());
        // Longest element shortens every generator of the subgroup and the
        // coset enumeration confirms maximality.
        for s in 0..3 {
            assert!(w0.mul_gen(s).unwrap().length() < w0.length());
        }
        let all = enumerate_coset(&h, h.full()).unwrap();
        let max = all.iter().map(|x| x.length()).max().unwrap();
        assert_eq!(max, w0.length());
        // Conjugation by the longest element permutes the generators.
        for s in 0..3u8 {
            let c = w0.conjugate(&elem(&h, &[s])).unwrap();
            assert_eq!(c.length(), 1);
        }
        assert!(matches!(
            longest_element(&m, Subset::from_iter([0, 2])),
            Err(Error::NotSpherical(_))
        ));
    }

    #[test]
    fn reflection_examples() {
        let m = p5();
        let g = elem(&m, &[2, 4, 2]);
        let r = is_reflection(&g).unwrap().unwrap();
        assert_eq!(r.witness().0.word(), &[2]);
        assert_eq!(r.witness().1, 4);

        let gen = elem(&m, &[3]);
        let r = is_reflection(&gen).unwrap().unwrap();
        assert!(r.witness().0.is_identity());

        let even = elem(&g1(), &[0, 1]);
        assert!(is_reflection(&even).unwrap().is_none());

        // Non-reflection odd-length element: in H3 an odd element that is
        // not conjugate to a generator.
        let h = h3();
        let odd = elem(&h, &[0, 1, 2, 1, 0]);
        let refl = is_reflection(&odd).unwrap();
        if let Some(r) = refl {
            let (u, s) = r.witness();
            assert_eq!(u.conjugate(&elem(&h, &[s])).unwrap(), odd);
        }
    }

    #[test]
    fn coset_counts() {
        let m = g1();
        assert_eq!(enumerate_coset(&m, Subset::from_iter([0, 1])).unwrap().len(), 6);
        let h = h3();
        assert_eq!(enumerate_coset(&h, h.full()).unwrap().len(), 120);
    }

    #[test]
    fn ball_examples() {
        let m = g1();
        assert_eq!(enumerate_ball(&m, 0).unwrap().len(), 1);
        let b2 = enumerate_ball(&m, 2).unwrap();
        assert_eq!(b2.len(), 1 + 3 + 6);
        // Closed under removing the last letter.
        for x in &b2 {
            if !x.is_identity() {
                let shorter = GroupElement {
                    matrix: m.clone(),
                    word: x.word()[..x.length() - 1].into(),
                };
                let shorter = canonical(&m, &shorter.to_word()).unwrap();
                assert!(b2.contains(&shorter));
            }
        }
    }

    #[test]
    fn exchange_condition_small() {
        let m = g1();
        for x in enumerate_ball(&m, 3).unwrap() {
            for s in 0..3 {
                let sx = elem(&m, &[s]).mul(&x).unwrap();
                let d = sx.length() as i64 - x.length() as i64;
                assert_eq!(d.abs(), 1);
            }
        }
    }

    #[test]
    fn matrix_mismatch_is_detected() {
        let a = elem(&g1(), &[0]);
        let b = elem(&p5(), &[0]);
        assert!(matches!(a.mul(&b), Err(Error::MatrixMismatch)));
    }

    #[test]
    fn word_text_roundtrip() {
        let w: Word = "[0,1,0]".parse().unwrap();
        assert_eq!(w, Word(vec![0, 1, 0]));
        assert_eq!(w.to_string(), "[0,1,0]");
        let empty: Word = "[]".parse().unwrap();
        assert!(empty.letters().is_empty());
    }
}
