//! Integer partitions: the index objects for conjugacy classes, irreducible
//! characters and Young diagrams.
//!
//! Every table in the crate is indexed by the list returned from
//! [`enumerate_partitions`], which is in descending lexicographic order.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. Trailing zeros are never
/// stored; [`Partition::part`] reads absent parts as 0.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, rejecting zero parts and increasing sequences.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} contains a zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    /// Sorts the given entries into decreasing order and drops zeros.
    pub fn from_unsorted(mut entries: Vec<usize>) -> Self {
        entries.retain(|&x| x > 0);
        entries.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts: entries }
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]) && !parts.contains(&0));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// The rectangle `(r^s)`.
    pub fn rectangle(r: usize, s: usize) -> Self {
        if r == 0 {
            return Self::empty();
        }
        Partition { parts: vec![r; s] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i` (0-based), or 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts, `l(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Multiplicity of `i` as a part.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    /// Column lengths of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        let parts = (1..=first)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    pub fn is_rectangle(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] == w[1])
    }

    /// `(n-r, 1^r)` for some `r`, including `(n)` and `(1^n)`.
    pub fn is_hook(&self) -> bool {
        !self.is_empty() && self.parts[1..].iter().all(|&p| p == 1)
    }

    /// Componentwise containment of Young diagrams, `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// `true` iff `other ⊴ self` in dominance order.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        if self.weight() != other.weight() {
            return Err(Error::weights(self, other));
        }
        let mut mine = 0;
        let mut theirs = 0;
        for i in 0..self.len().max(other.len()) {
            mine += self.part(i);
            theirs += other.part(i);
            if theirs > mine {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Side of the largest square inside the diagram.
    pub fn durfee_rank(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p > i)
            .count()
    }

    /// Number of indices `i ≥ 1` with `λ_i - λ_{i+1} ≥ t`, where the part
    /// after the last one is read as 0.
    pub fn d_stat(&self, t: usize) -> usize {
        assert!(t >= 1, "d_stat needs t >= 1");
        (0..self.len())
            .filter(|&i| self.part(i) - self.part(i + 1) >= t)
            .count()
    }

    /// The pair `(k, l)` with
    /// `k = #{i : λ_i = λ_{i+1}, λ_{i+1} - λ_{i+2} ≥ 2}` and
    /// `l = #{i : λ_i - λ_{i+1} = 1, λ_{i+1} - λ_{i+2} ≥ 1}`.
    pub fn kl_stats(&self) -> (usize, usize) {
        let gap = |i: usize| self.part(i) - self.part(i + 1);
        let mut k = 0;
        let mut l = 0;
        // Only indices with λ_{i+1} > 0 can satisfy either condition.
        for i in 0..self.len() {
            if gap(i) == 0 && gap(i + 1) >= 2 {
                k += 1;
            }
            if gap(i) == 1 && gap(i + 1) >= 1 {
                l += 1;
            }
        }
        (k, l)
    }

    /// Number of boxes of `self` lying outside the diagram of `other`.
    pub fn outside_count(&self, other: &Partition) -> Result<usize> {
        if self.weight() != other.weight() {
            return Err(Error::weights(self, other));
        }
        Ok(self
            .parts
            .iter()
            .enumerate()
            .map(|(i, &p)| p.saturating_sub(other.part(i)))
            .sum())
    }

    /// The hook `(n - r, 1^r)`.
    pub fn hook(n: usize, r: usize) -> Result<Partition> {
        if n == 0 || r >= n {
            return Err(Error::OutOfRange {
                what: "hook leg",
                detail: format!("r = {r} needs 0 <= r <= n - 1 with n = {n}"),
            });
        }
        let mut parts = vec![n - r];
        parts.extend(std::iter::repeat_n(1, r));
        Ok(Partition { parts })
    }

    pub fn has_distinct_odd_parts(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 1) && self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// Arms of the diagonal hooks, `λ_i - i` for `i ≤ d(λ)` (0-based `i`).
    fn frobenius_arms(&self) -> Vec<usize> {
        (0..self.durfee_rank())
            .map(|i| self.parts[i] - i - 1)
            .collect()
    }

    /// Maps a partition with distinct odd parts to the self-conjugate
    /// partition whose i-th diagonal hook has length `μ_i`.
    pub fn fold(&self) -> Result<Partition> {
        if !self.has_distinct_odd_parts() {
            return Err(Error::Precondition(format!(
                "{self} does not have distinct odd parts"
            )));
        }
        let arms: Vec<usize> = self.parts.iter().map(|p| (p - 1) / 2).collect();
        Ok(from_frobenius(&arms, &arms))
    }

    /// Inverse of [`Partition::fold`]: diagonal hook lengths of a
    /// self-conjugate partition.
    pub fn unfold(&self) -> Result<Partition> {
        if !self.is_self_conjugate() {
            return Err(Error::Precondition(format!("{self} is not self-conjugate")));
        }
        let parts = self.frobenius_arms().iter().map(|a| 2 * a + 1).collect();
        Ok(Partition { parts })
    }

    /// Corner boxes: row indices `i` where a box can be removed.
    pub fn removable_rows(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .collect()
    }

    /// Row indices where a box can be added (the last one opens a new row).
    pub fn addable_rows(&self) -> Vec<usize> {
        (0..=self.len())
            .filter(|&i| i == 0 || self.part(i - 1) > self.part(i))
            .collect()
    }

    pub(crate) fn remove_box(&self, row: usize) -> Partition {
        let mut parts = self.parts.clone();
        parts[row] -= 1;
        if parts[row] == 0 {
            parts.pop();
        }
        Partition::from_parts_unchecked(parts)
    }

    pub(crate) fn add_box(&self, row: usize) -> Partition {
        let mut parts = self.parts.clone();
        if row == parts.len() {
            parts.push(1);
        } else {
            parts[row] += 1;
        }
        Partition::from_parts_unchecked(parts)
    }

    /// Partitions one box smaller, one box larger, and one box moved.
    pub fn box_neighbors(&self) -> BoxNeighbors {
        let minus: BTreeSet<Partition> = self
            .removable_rows()
            .into_iter()
            .map(|r| self.remove_box(r))
            .collect();
        let plus: BTreeSet<Partition> = self
            .addable_rows()
            .into_iter()
            .map(|r| self.add_box(r))
            .collect();
        let moved: BTreeSet<Partition> = minus
            .iter()
            .flat_map(|m| m.addable_rows().into_iter().map(move |r| m.add_box(r)))
            .collect();
        BoxNeighbors {
            minus: minus.into_iter().collect(),
            plus: plus.into_iter().collect(),
            moved: moved.into_iter().collect(),
        }
    }

    /// Centralizer order, class size, sign and (for distinct odd parts) the
    /// split sign of the conjugacy class with this cycle type.
    pub fn cycle_class_data(&self) -> CycleClassData {
        let n = self.weight();
        let mut z = BigUint::one();
        let mut i = 0;
        while i < self.len() {
            let part = self.parts[i];
            let mult = self.parts[i..].iter().take_while(|&&p| p == part).count();
            for j in 1..=mult {
                z *= BigUint::from(part) * BigUint::from(j);
            }
            i += mult;
        }
        let class_size = factorial(n) / &z;
        let sign = if (n - self.len()).is_multiple_of(2) {
            1
        } else {
            -1
        };
        let eps = self.has_distinct_odd_parts().then(|| {
            let total: usize = self.parts.iter().map(|p| (p - 1) / 2).sum();
            if total.is_multiple_of(2) {
                1
            } else {
                -1
            }
        });
        CycleClassData {
            mu: self.clone(),
            z,
            class_size,
            sign,
            eps,
        }
    }
}

fn from_frobenius(arms: &[usize], legs: &[usize]) -> Partition {
    let r = arms.len();
    if r == 0 {
        return Partition::empty();
    }
    let mut parts: Vec<usize> = arms.iter().enumerate().map(|(i, a)| a + i + 1).collect();
    // Rows below the Durfee square: row i (0-based, i ≥ r) has one box in each
    // column j < r whose leg reaches it.
    let depth = legs[0] + 1;
    for i in r..depth {
        parts.push(
            legs.iter()
                .enumerate()
                .filter(|&(j, &l)| l + j >= i)
                .count(),
        );
    }
    Partition::from_parts_unchecked(parts)
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

impl Ord for Partition {
    /// Smaller weight first, then descending lexicographic order, so sorted
    /// collections come out in canonical table order.
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `4,3,2,2`, `[4,3,2,2]`, `(4,3,2,2)` and exponent notation such
    /// as `2^2,1^2`. The empty string and `[]` give the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let parse_err = |reason: String| Error::Parse {
            input: s.to_string(),
            reason,
        };
        let trimmed = s.trim();
        let inner = trimmed
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .or_else(|| trimmed.strip_prefix('(').and_then(|t| t.strip_suffix(')')))
            .unwrap_or(trimmed)
            .trim();
        let mut parts = Vec::new();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        for token in inner.split(',') {
            let token = token.trim();
            let (base, exp) = match token.split_once('^') {
                Some((b, e)) => (b.trim(), e.trim()),
                None => (token, "1"),
            };
            let base: usize = base
                .parse()
                .map_err(|_| parse_err(format!("bad part {token:?}")))?;
            let exp: usize = exp
                .parse()
                .map_err(|_| parse_err(format!("bad exponent in {token:?}")))?;
            if base == 0 {
                return Err(parse_err("parts must be positive".into()));
            }
            parts.extend(std::iter::repeat_n(base, exp));
        }
        Partition::new(parts).map_err(|e| parse_err(e.to_string()))
    }
}

/// Serialized as the bracketed string `"[4,3,2,2]"`; an integer array is
/// also accepted on input.
impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Text(String),
            Parts(Vec<usize>),
        }
        match Repr::deserialize(deserializer)? {
            Repr::Text(s) => s.parse().map_err(serde::de::Error::custom),
            Repr::Parts(parts) => Partition::new(parts).map_err(serde::de::Error::custom),
        }
    }
}

/// `λ⁻`, `λ⁺` and `λ±` of a partition, each sorted canonically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxNeighbors {
    pub minus: Vec<Partition>,
    pub plus: Vec<Partition>,
    pub moved: Vec<Partition>,
}

/// Class data for the conjugacy class of `S_n` with cycle type `mu`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleClassData {
    pub mu: Partition,
    /// Order of the centralizer.
    pub z: BigUint,
    pub class_size: BigUint,
    /// Sign of the permutations in the class.
    pub sign: i8,
    /// `(-1)^{m_1 + m_2 + ...}` for `mu = (2m_1+1, 2m_2+1, ...)` with
    /// distinct odd parts; `None` otherwise.
    pub eps: Option<i8>,
}

/// A skew shape `outer / inner` with `inner ⊆ outer`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::Precondition(format!(
                "{inner} is not contained in {outer}"
            )));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.weight() - self.inner.weight()
    }

    /// Half-open column range `[inner_i, outer_i)` of row `i`.
    pub fn row_range(&self, i: usize) -> std::ops::Range<usize> {
        self.inner.part(i)..self.outer.part(i)
    }

    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    /// Each column holds at most one box.
    pub fn is_horizontal_strip(&self) -> bool {
        // Column j holds rows i with inner_i <= j < outer_i; at most one such
        // row for every j means outer_{i+1} <= inner_i.
        (0..self.rows()).all(|i| self.outer.part(i + 1) <= self.inner.part(i))
    }

    /// Each row holds at most one box.
    pub fn is_vertical_strip(&self) -> bool {
        (0..self.rows()).all(|i| self.outer.part(i) - self.inner.part(i) <= 1)
    }
}

/// All partitions of `n` in descending lexicographic order.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill_partitions(n, n, &mut current, &mut out);
    out
}

fn fill_partitions(
    remaining: usize,
    max: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition::from_parts_unchecked(current.clone()));
        return;
    }
    for part in (1..=max.min(remaining)).rev() {
        current.push(part);
        fill_partitions(remaining - part, part, current, out);
        current.pop();
    }
}

/// The canonical partition list of `n` with reverse lookup.
#[derive(Clone, Debug)]
pub struct PartitionIndex {
    n: usize,
    list: Vec<Partition>,
    lookup: HashMap<Partition, usize>,
}

impl PartitionIndex {
    pub fn new(n: usize) -> Self {
        let list = enumerate_partitions(n);
        let lookup = list
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        PartitionIndex { n, list, lookup }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.list.is_empty()
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.list
    }

    pub fn get(&self, i: usize) -> &Partition {
        &self.list[i]
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.lookup.get(p).copied()
    }

    /// Like [`PartitionIndex::index_of`] but reports a weight mismatch.
    pub fn position(&self, p: &Partition) -> Result<usize> {
        self.index_of(p)
            .ok_or_else(|| Error::weights(p, &Partition::row(self.n)))
    }
}

/// Shared canonical index for partitions of `n`, built once per process.
pub fn partition_index(n: usize) -> Arc<PartitionIndex> {
    static INDICES: OnceLock<Mutex<HashMap<usize, Arc<PartitionIndex>>>> = OnceLock::new();
    let map = INDICES.get_or_init(Default::default);
    if let Some(index) = map.lock().unwrap().get(&n) {
        return Arc::clone(index);
    }
    let built = Arc::new(PartitionIndex::new(n));
    Arc::clone(map.lock().unwrap().entry(n).or_insert(built))
}
