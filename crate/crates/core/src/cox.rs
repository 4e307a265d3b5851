//! Coxeter matrices, generator subsets, and the `.cox` text format.
//!
//! A matrix stores the orders `m_st`; the defining graph (edge iff `m_st`
//! finite) and the diagram used for irreducibility (edge iff `m_st >= 3`)
//! are derived views, see [`crate::diagram`].

use crate::error::{Error, Result};
use serde::de::{self, Deserializer, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

/// Generator index within a fixed matrix. Rank is capped at 64 so subsets
/// fit in a machine word.
pub type Gen = u8;

pub const MAX_RANK: usize = 64;

/// Order `m_st` of a product of two generators. No arithmetic is defined,
/// only comparisons.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Order {
    Finite(u32),
    Infinite,
}

impl Order {
    pub fn is_finite(self) -> bool {
        matches!(self, Order::Finite(_))
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Order::Finite(n) => Some(n),
            Order::Infinite => None,
        }
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(n) => write!(f, "{n}"),
            Order::Infinite => write!(f, "inf"),
        }
    }
}

impl FromStr for Order {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        if s == "inf" {
            Ok(Order::Infinite)
        } else {
            s.parse::<u32>()
                .map(Order::Finite)
                .map_err(|_| format!("expected a positive integer or `inf`, got `{s}`"))
        }
    }
}

impl Serialize for Order {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Order::Finite(n) => s.serialize_u32(*n),
            Order::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Order {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = Order;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "a positive integer or the string \"inf\"")
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Order, E> {
                u32::try_from(v)
                    .map(Order::Finite)
                    .map_err(|_| E::custom("order too large"))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Order, E> {
                v.parse().map_err(E::custom)
            }
        }
        d.deserialize_any(V)
    }
}

/// Set of generator indices of one matrix, kept as a bitmask.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subset(pub u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn full(rank: usize) -> Subset {
        debug_assert!(rank <= MAX_RANK);
        if rank == MAX_RANK {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << rank) - 1)
        }
    }

    pub fn from_iter<I: IntoIterator<Item = Gen>>(iter: I) -> Subset {
        let mut s = Subset::EMPTY;
        for g in iter {
            s.insert(g);
        }
        s
    }

    pub fn singleton(g: Gen) -> Subset {
        Subset(1u64 << g)
    }

    pub fn contains(self, g: Gen) -> bool {
        self.0 & (1u64 << g) != 0
    }

    pub fn insert(&mut self, g: Gen) {
        self.0 |= 1u64 << g;
    }

    pub fn remove(&mut self, g: Gen) {
        self.0 &= !(1u64 << g);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    /// Members in increasing index order.
    pub fn iter(self) -> impl Iterator<Item = Gen> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let g = bits.trailing_zeros() as Gen;
                bits &= bits - 1;
                Some(g)
            }
        })
    }

    pub fn least(self) -> Option<Gen> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as Gen)
        }
    }

    /// All subsets of `self`, the empty set first, full set last.
    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        let mask = self.0;
        let mut cur = 0u64;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let out = Subset(cur);
            if cur == mask {
                done = true;
            } else {
                cur = (cur.wrapping_sub(mask)) & mask;
            }
            Some(out)
        })
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, g) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for Subset {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.len()))?;
        for g in self.iter() {
            seq.serialize_element(&g)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Subset {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<Gen> = Vec::deserialize(d)?;
        Ok(Subset::from_iter(v))
    }
}

/// Memoization pad for the word engine. Invisible to equality, hashing and
/// cloning, so a matrix behaves as a plain value.
#[derive(Default)]
pub(crate) struct CachePad {
    pub(crate) canon: Mutex<HashMap<Box<[u8]>, Box<[u8]>>>,
    pub(crate) order_bound: std::sync::OnceLock<u64>,
}

impl PartialEq for CachePad {
    fn eq(&self, _: &Self) -> bool {
        true
    }
}
impl Eq for CachePad {}
impl std::hash::Hash for CachePad {
    fn hash<H: std::hash::Hasher>(&self, _: &mut H) {}
}
impl Clone for CachePad {
    fn clone(&self) -> Self {
        CachePad::default()
    }
}
impl fmt::Debug for CachePad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CachePad")
    }
}

/// Symmetric matrix of orders `m_st` with `m_ss = 1` and `m_st >= 2` off
/// the diagonal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoxeterMatrix {
    rank: usize,
    orders: Vec<Order>,
    pad: CachePad,
}

impl CoxeterMatrix {
    pub fn new(rank: usize, orders: Vec<Order>) -> Result<Self> {
        if rank == 0 || rank > MAX_RANK {
            return Err(Error::InvalidMatrix(format!(
                "rank must be between 1 and {MAX_RANK}, got {rank}"
            )));
        }
        if orders.len() != rank * rank {
            return Err(Error::InvalidMatrix(format!(
                "expected {} entries, got {}",
                rank * rank,
                orders.len()
            )));
        }
        let m = CoxeterMatrix { rank, orders, pad: CachePad::default() };
        for i in 0..rank {
            if m.order_at(i, i) != Order::Finite(1) {
                return Err(Error::InvalidMatrix(format!("diagonal entry ({i},{i}) must be 1")));
            }
            for j in 0..i {
                if m.order_at(i, j) != m.order_at(j, i) {
                    return Err(Error::InvalidMatrix(format!("entries ({i},{j}) and ({j},{i}) differ")));
                }
                if let Order::Finite(n) = m.order_at(i, j) {
                    if n < 2 {
                        return Err(Error::InvalidMatrix(format!(
                            "off-diagonal entry ({i},{j}) must be at least 2"
                        )));
                    }
                }
            }
        }
        Ok(m)
    }

    /// Matrix with all off-diagonal entries infinite except the given
    /// labelled edges.
    pub fn from_edges(rank: usize, edges: &[(Gen, Gen, u32)]) -> Result<Self> {
        let mut orders = vec![Order::Infinite; rank * rank];
        for i in 0..rank {
            orders[i * rank + i] = Order::Finite(1);
        }
        for &(a, b, m) in edges {
            let (a, b) = (a as usize, b as usize);
            if a >= rank || b >= rank {
                return Err(Error::IndexOutOfRange { index: a.max(b), rank });
            }
            orders[a * rank + b] = Order::Finite(m);
            orders[b * rank + a] = Order::Finite(m);
        }
        CoxeterMatrix::new(rank, orders)
    }

    /// Right-angled matrix: listed edges get order 2, all other pairs are
    /// infinite.
    pub fn right_angled(rank: usize, edges: &[(Gen, Gen)]) -> Result<Self> {
        let labelled: Vec<(Gen, Gen, u32)> = edges.iter().map(|&(a, b)| (a, b, 2)).collect();
        CoxeterMatrix::from_edges(rank, &labelled)
    }

    /// Matrix given by its non-commuting diagram: listed edges carry their
    /// label, all other pairs commute.
    pub fn from_diagram(rank: usize, edges: &[(Gen, Gen, u32)]) -> Result<Self> {
        let mut orders = vec![Order::Finite(2); rank * rank];
        for i in 0..rank {
            orders[i * rank + i] = Order::Finite(1);
        }
        for &(a, b, m) in edges {
            let (a, b) = (a as usize, b as usize);
            if a >= rank || b >= rank {
                return Err(Error::IndexOutOfRange { index: a.max(b), rank });
            }
            orders[a * rank + b] = Order::Finite(m);
            orders[b * rank + a] = Order::Finite(m);
        }
        CoxeterMatrix::new(rank, orders)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.rank)
    }

    fn order_at(&self, i: usize, j: usize) -> Order {
        self.orders[i * self.rank + j]
    }

    pub fn order(&self, s: Gen, t: Gen) -> Order {
        debug_assert!((s as usize) < self.rank && (t as usize) < self.rank);
        self.order_at(s as usize, t as usize)
    }

    pub fn check_gen(&self, g: Gen) -> Result<()> {
        if (g as usize) < self.rank {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: g as usize, rank: self.rank })
        }
    }

    pub fn check_subset(&self, s: Subset) -> Result<()> {
        if s.is_subset_of(self.full()) {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: 63 - s.0.leading_zeros() as usize,
                rank: self.rank,
            })
        }
    }

    /// Adjacency in the defining graph: distinct generators with a finite
    /// order between them.
    pub fn adjacent(&self, s: Gen, t: Gen) -> bool {
        s != t && self.order(s, t).is_finite()
    }

    /// Adjacency in the diagram that tracks non-commuting pairs
    /// (order at least 3, including infinity).
    pub fn dynkin_adjacent(&self, s: Gen, t: Gen) -> bool {
        s != t && self.order(s, t) != Order::Finite(2)
    }

    pub(crate) fn pad(&self) -> &CachePad {
        &self.pad
    }

    /// Parse the `.cox` text format: a `rank n` line, then `n` rows of
    /// whitespace-separated entries (`inf` for infinity).
    pub fn parse(text: &str) -> Result<Self> {
        fn err(line: usize, col: usize, msg: impl Into<String>) -> Error {
            Error::Parse { line, col, msg: msg.into() }
        }
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l))
            .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
        let (hline, header) = lines.next().ok_or_else(|| err(1, 1, "empty input"))?;
        let mut parts = header.split_whitespace();
        match parts.next() {
            Some("rank") => {}
            _ => return Err(err(hline, 1, "first line must be `rank n`")),
        }
        let rank: usize = parts
            .next()
            .ok_or_else(|| err(hline, header.len() + 1, "missing rank value"))?
            .parse()
            .map_err(|_| err(hline, header.find(char::is_whitespace).unwrap_or(0) + 2, "rank must be a positive integer"))?;
        if parts.next().is_some() {
            return Err(err(hline, header.len(), "unexpected trailing tokens on rank line"));
        }
        if rank == 0 || rank > MAX_RANK {
            return Err(err(hline, 6, format!("rank must be between 1 and {MAX_RANK}")));
        }
        let mut orders = Vec::with_capacity(rank * rank);
        for row in 0..rank {
            let (lno, line) = lines
                .next()
                .ok_or_else(|| err(hline + row + 1, 1, format!("missing row {row}")))?;
            let mut count = 0;
            let mut pos = 0;
            let bytes = line.as_bytes();
            while pos < bytes.len() {
                while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
                    pos += 1;
                }
                if pos >= bytes.len() {
                    break;
                }
                let start = pos;
                while pos < bytes.len() && !bytes[pos].is_ascii_whitespace() {
                    pos += 1;
                }
                let tok = &line[start..pos];
                let ord: Order = tok.parse().map_err(|e: String| err(lno, start + 1, e))?;
                orders.push(ord);
                count += 1;
            }
            if count != rank {
                return Err(err(lno, line.len() + 1, format!("expected {rank} entries in row, got {count}")));
            }
        }
        if let Some((lno, _)) = lines.next() {
            return Err(err(lno, 1, "unexpected extra content after matrix rows"));
        }
        // Re-run through the structural validator so asymmetry and diagonal
        // defects are reported with their position.
        let m = CoxeterMatrix { rank, orders, pad: CachePad::default() };
        for i in 0..rank {
            if m.order_at(i, i) != Order::Finite(1) {
                return Err(err(hline + i + 1, 1, format!("diagonal entry ({i},{i}) must be 1")));
            }
            for j in 0..rank {
                if m.order_at(i, j) != m.order_at(j, i) {
                    return Err(err(hline + i + 1, j + 1, format!("entry ({i},{j}) is not symmetric")));
                }
                if i != j {
                    if let Order::Finite(n) = m.order_at(i, j) {
                        if n < 2 {
                            return Err(err(hline + i + 1, j + 1, format!("off-diagonal entry ({i},{j}) must be at least 2")));
                        }
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn load(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        CoxeterMatrix::parse(&text)
    }

    /// DOT rendering of the defining graph, or of the non-commuting diagram
    /// when `dynkin` is set.
    pub fn to_dot(&self, dynkin: bool) -> String {
        let mut out = String::from(if dynkin { "graph dynkin {\n" } else { "graph defining {\n" });
        for i in 0..self.rank {
            out.push_str(&format!("  {i};\n"));
        }
        for i in 0..self.rank {
            for j in i + 1..self.rank {
                let (s, t) = (i as Gen, j as Gen);
                let keep = if dynkin { self.dynkin_adjacent(s, t) } else { self.adjacent(s, t) };
                if keep {
                    out.push_str(&format!("  {i} -- {j} [label=\"{}\"];\n", self.order(s, t)));
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Display for CoxeterMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "rank {}", self.rank)?;
        for i in 0..self.rank {
            for j in 0..self.rank {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.order_at(i, j))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl Serialize for CoxeterMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            rank: usize,
            orders: &'a [Order],
        }
        Repr { rank: self.rank, orders: &self.orders }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CoxeterMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            rank: usize,
            orders: Vec<Order>,
        }
        let r = Repr::deserialize(d)?;
        CoxeterMatrix::new(r.rank, r.orders).map_err(de::Error::custom)
    }
}
