//! Constituent sets of powers of characters and covering numbers: the least
//! `k` such that every irreducible of `S_n` occurs in `χ^k`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use serde::Serialize;

use crate::characters::{character_table, decompose_character, sigma, ClassFunction};
use crate::error::{Error, Result};
use crate::kronecker::{collapse, collapse_targets, product_row};
use crate::partitions::{partition_index, Partition, PartitionIndex};

/// A set of irreducibles of `S_n`, stored as a bitset over the canonical
/// partition order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ConstituentSet {
    n: usize,
    size: usize,
    bits: Vec<u64>,
}

impl ConstituentSet {
    pub fn empty(n: usize) -> Self {
        let size = partition_index(n).len();
        ConstituentSet {
            n,
            size,
            bits: vec![0; size.div_ceil(64)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for i in 0..s.size {
            s.insert_index(i);
        }
        s
    }

    pub fn from_partitions<'a>(
        n: usize,
        parts: impl IntoIterator<Item = &'a Partition>,
    ) -> Result<Self> {
        let mut s = Self::empty(n);
        for p in parts {
            s.insert(p)?;
        }
        Ok(s)
    }

    pub fn singleton(lambda: &Partition) -> Result<Self> {
        Self::from_partitions(lambda.weight(), [lambda])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn index(&self) -> Arc<PartitionIndex> {
        partition_index(self.n)
    }

    pub fn insert(&mut self, p: &Partition) -> Result<()> {
        let i = self.index().position(p)?;
        self.insert_index(i);
        Ok(())
    }

    pub fn insert_index(&mut self, i: usize) {
        self.bits[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, p: &Partition) {
        if let Some(i) = self.index().index_of(p) {
            self.bits[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn contains(&self, p: &Partition) -> bool {
        self.index()
            .index_of(p)
            .is_some_and(|i| self.contains_index(i))
    }

    pub fn contains_index(&self, i: usize) -> bool {
        self.bits[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.size
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.size).filter(|&i| self.contains_index(i))
    }

    pub fn partitions(&self) -> Vec<Partition> {
        let index = self.index();
        self.indices().map(|i| index.get(i).clone()).collect()
    }

    pub fn union_with(&mut self, other: &ConstituentSet) {
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a |= b;
        }
    }

    pub fn is_subset(&self, other: &ConstituentSet) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    /// Members not in `other`.
    pub fn difference(&self, other: &ConstituentSet) -> ConstituentSet {
        let bits = self
            .bits
            .iter()
            .zip(&other.bits)
            .map(|(a, b)| a & !b)
            .collect();
        ConstituentSet {
            n: self.n,
            size: self.size,
            bits,
        }
    }
}

impl fmt::Debug for ConstituentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.partitions()).finish()
    }
}

/// The irreducibles occurring in `f`. Fails unless `f` is a character.
pub fn constituents(f: &ClassFunction) -> Result<ConstituentSet> {
    let parts = decompose_character(f)?;
    ConstituentSet::from_partitions(f.n(), parts.keys())
}

/// Lazily computed supports of `χ_i χ_j` for all pairs of irreducibles.
struct PairSupports {
    size: usize,
    cells: Vec<OnceLock<ConstituentSet>>,
}

fn pair_supports(n: usize) -> Result<Arc<PairSupports>> {
    static STORE: OnceLock<Mutex<HashMap<usize, Arc<PairSupports>>>> = OnceLock::new();
    // Make sure the table exists (and respects the limit) before caching.
    character_table(n)?;
    let mut store = STORE.get_or_init(Default::default).lock().unwrap();
    let entry = store.entry(n).or_insert_with(|| {
        let size = partition_index(n).len();
        Arc::new(PairSupports {
            size,
            cells: (0..size * size).map(|_| OnceLock::new()).collect(),
        })
    });
    Ok(Arc::clone(entry))
}

fn pair_support(n: usize, supports: &PairSupports, i: usize, j: usize) -> Result<ConstituentSet> {
    let (a, b) = (i.min(j), i.max(j));
    let cell = &supports.cells[a * supports.size + b];
    if let Some(s) = cell.get() {
        return Ok(s.clone());
    }
    let table = character_table(n)?;
    let mut s = ConstituentSet::empty(n);
    for (l, m) in product_row(&table, a, b).into_iter().enumerate() {
        if m > 0 {
            s.insert_index(l);
        }
    }
    Ok(cell.get_or_init(|| s).clone())
}

/// `c(χ_μ χ_ν)` for irreducibles `μ, ν`.
pub fn product_support(mu: &Partition, nu: &Partition) -> Result<ConstituentSet> {
    if mu.weight() != nu.weight() {
        return Err(Error::weights(mu, nu));
    }
    let n = mu.weight();
    let index = partition_index(n);
    pair_support(
        n,
        &*pair_supports(n)?,
        index.position(mu)?,
        index.position(nu)?,
    )
}

/// `c(χ ρ)` from `c(χ)` and `c(ρ)`: the union of `c(χ_μ χ_ν)` over the two
/// sets. Multiplicities are positive, so nothing cancels.
pub fn product_sets(left: &ConstituentSet, right: &ConstituentSet) -> Result<ConstituentSet> {
    if left.n != right.n {
        return Err(Error::GroupMismatch(left.n, right.n));
    }
    let n = left.n;
    let supports = pair_supports(n)?;
    let pairs: Vec<(usize, usize)> = left
        .indices()
        .flat_map(|i| right.indices().map(move |j| (i, j)))
        .collect();
    let parts = pairs
        .par_iter()
        .map(|&(i, j)| pair_support(n, &supports, i, j))
        .try_fold(
            || ConstituentSet::empty(n),
            |mut acc, s| {
                acc.union_with(&s?);
                Ok::<_, Error>(acc)
            },
        )
        .try_reduce(
            || ConstituentSet::empty(n),
            |mut a, b| {
                a.union_with(&b);
                Ok(a)
            },
        )?;
    Ok(parts)
}

/// `c(χ χ_λ)` from `c(χ)`.
pub fn product_closure_step(set: &ConstituentSet, lambda: &Partition) -> Result<ConstituentSet> {
    if set.n != lambda.weight() {
        return Err(Error::GroupMismatch(set.n, lambda.weight()));
    }
    product_sets(set, &ConstituentSet::singleton(lambda)?)
}

/// `[c(ρ), c(ρ²), …, c(ρ^k)]` for a character `ρ` with `c(ρ) = generators`.
pub fn power_constituents(generators: &ConstituentSet, k: usize) -> Result<Vec<ConstituentSet>> {
    let mut out: Vec<ConstituentSet> = Vec::with_capacity(k);
    for _ in 0..k {
        let next = match out.last() {
            None => generators.clone(),
            Some(prev) if prev.is_full() => prev.clone(),
            Some(prev) => product_sets(prev, generators)?,
        };
        out.push(next);
    }
    Ok(out)
}

/// Outcome of a covering-number search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Covering {
    /// The least power whose constituents are all irreducibles.
    Covered(usize),
    /// No power ever covers: the character is linear or the constituent
    /// sets of its powers cycle without becoming full.
    NotExists,
    /// Powers up to the cap were computed without covering.
    CapExhausted(usize),
}

impl Covering {
    pub fn value(&self) -> Option<usize> {
        match self {
            Covering::Covered(k) => Some(*k),
            _ => None,
        }
    }
}

impl fmt::Display for Covering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Covering::Covered(k) => write!(f, "{k}"),
            Covering::NotExists => f.write_str("covering number does not exist"),
            Covering::CapExhausted(cap) => write!(f, "not covered by power {cap}"),
        }
    }
}

/// A covering-number result with the size of `c(ρ^i)` for each power tried.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoveringRun {
    pub result: Covering,
    pub power_sizes: Vec<usize>,
}

/// Covering number of a character with constituent set `generators`.
pub fn ccn_of_set(generators: &ConstituentSet, cap: usize) -> Result<CoveringRun> {
    if cap == 0 {
        return Err(Error::OutOfRange {
            what: "cap",
            detail: "cap must be at least 1".into(),
        });
    }
    let mut seen: Vec<ConstituentSet> = Vec::new();
    let mut current = generators.clone();
    let mut power_sizes = Vec::new();
    for k in 1..=cap {
        power_sizes.push(current.len());
        if current.is_full() {
            return Ok(CoveringRun {
                result: Covering::Covered(k),
                power_sizes,
            });
        }
        if seen.contains(&current) {
            return Ok(CoveringRun {
                result: Covering::NotExists,
                power_sizes,
            });
        }
        let next = product_sets(&current, generators)?;
        seen.push(std::mem::replace(&mut current, next));
    }
    Ok(CoveringRun {
        result: Covering::CapExhausted(cap),
        power_sizes,
    })
}

/// `ccn(χ_λ; S_n)`, searching powers up to `cap`.
pub fn ccn_char(lambda: &Partition, cap: usize) -> Result<CoveringRun> {
    let n = lambda.weight();
    if n == 0 {
        return Err(Error::OutOfRange {
            what: "n",
            detail: "the empty partition has no character".into(),
        });
    }
    if *lambda == Partition::row(n) || *lambda == Partition::column(n) {
        if cap == 0 {
            return Err(Error::OutOfRange {
                what: "cap",
                detail: "cap must be at least 1".into(),
            });
        }
        // Powers of a linear character are linear; n = 1 is the exception.
        let result = if n == 1 {
            Covering::Covered(1)
        } else {
            Covering::NotExists
        };
        return Ok(CoveringRun {
            result,
            power_sizes: vec![1],
        });
    }
    ccn_of_set(&ConstituentSet::singleton(lambda)?, cap)
}

/// `c(σ_λ)`: all `μ` dominating `λ`.
pub fn sigma_constituents(lambda: &Partition) -> Result<ConstituentSet> {
    let n = lambda.weight();
    let mut s = ConstituentSet::empty(n);
    for (i, mu) in partition_index(n).partitions().iter().enumerate() {
        if mu.dominates(lambda)? {
            s.insert_index(i);
        }
    }
    Ok(s)
}

/// Result of the breadth-first search behind [`ccn_sigma`]: the covering
/// number and one shortest chain of collapses from `(n)` to `(1^n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SigmaRun {
    pub result: Covering,
    pub path: Option<Vec<Partition>>,
}

/// `ccn(σ_λ; S_n)`: the least `k` with `(1^n)` among the collapses of
/// `k`-fold products, found by breadth-first search from `(n)`.
pub fn ccn_sigma(lambda: &Partition, cap: usize) -> Result<SigmaRun> {
    let n = lambda.weight();
    if cap == 0 {
        return Err(Error::OutOfRange {
            what: "cap",
            detail: "cap must be at least 1".into(),
        });
    }
    if n == 0 {
        return Err(Error::OutOfRange {
            what: "n",
            detail: "the empty partition has no character".into(),
        });
    }
    let target = Partition::column(n);
    if n == 1 {
        return Ok(SigmaRun {
            result: Covering::Covered(1),
            path: Some(vec![target.clone(), target]),
        });
    }
    if *lambda == Partition::row(n) {
        return Ok(SigmaRun {
            result: Covering::NotExists,
            path: None,
        });
    }
    let mut parent: HashMap<Partition, Partition> = HashMap::new();
    let start = Partition::row(n);
    let mut frontier = vec![start.clone()];
    parent.insert(start.clone(), start.clone());
    for k in 1..=cap {
        let expanded: Vec<(Partition, BTreeSet<Partition>)> = frontier
            .par_iter()
            .map(|mu| collapse_targets(mu, lambda).map(|t| (mu.clone(), t)))
            .collect::<Result<_>>()?;
        let mut next = Vec::new();
        for (mu, targets) in expanded {
            for t in targets {
                if !parent.contains_key(&t) {
                    parent.insert(t.clone(), mu.clone());
                    next.push(t);
                }
            }
        }
        if parent.contains_key(&target) {
            let mut path = vec![target.clone()];
            while *path.last().unwrap() != start {
                path.push(parent[path.last().unwrap()].clone());
            }
            path.reverse();
            return Ok(SigmaRun {
                result: Covering::Covered(k),
                path: Some(path),
            });
        }
        if next.is_empty() {
            return Ok(SigmaRun {
                result: Covering::NotExists,
                path: None,
            });
        }
        frontier = next;
    }
    Ok(SigmaRun {
        result: Covering::CapExhausted(cap),
        path: None,
    })
}

/// A chain `(n) = α_0 → α_1 → ⋯ → α_r = (1^n)` in which each `α_{i+1}` is
/// the collapse of an `α_i × λ` matrix, stored with the matrices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitSequence {
    pub generator: Partition,
    pub steps: Vec<Partition>,
    /// `matrices[i]` has one row per part of `steps[i]` (in order) and one
    /// column per part of the generator.
    pub matrices: Vec<Vec<Vec<usize>>>,
}

impl SplitSequence {
    /// Number of collapses, `r`.
    pub fn len(&self) -> usize {
        self.matrices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matrices.is_empty()
    }

    /// Checks the endpoints and that every matrix has the right margins and
    /// collapses to the next step.
    pub fn validate(&self) -> Result<()> {
        let n = self.generator.weight();
        let bad = |msg: String| {
            Err(Error::Construction {
                lambda: self.generator.clone(),
                reason: msg,
            })
        };
        if self.steps.first() != Some(&Partition::row(n))
            || self.steps.last() != Some(&Partition::column(n))
        {
            return bad("sequence must run from (n) to (1^n)".into());
        }
        if self.steps.len() != self.matrices.len() + 1 {
            return bad("one matrix per step is required".into());
        }
        for (i, a) in self.matrices.iter().enumerate() {
            let rows: Vec<usize> = a.iter().map(|r| r.iter().sum()).collect();
            if rows != self.steps[i].parts() {
                return bad(format!(
                    "row sums of matrix {i} are {rows:?}, not {}",
                    self.steps[i]
                ));
            }
            let mut cols = vec![0; self.generator.len()];
            for r in a {
                if r.len() != cols.len() {
                    return bad(format!("matrix {i} has a row of the wrong width"));
                }
                for (c, x) in cols.iter_mut().zip(r) {
                    *c += x;
                }
            }
            if cols != self.generator.parts() {
                return bad(format!(
                    "column sums of matrix {i} are {cols:?}, not {}",
                    self.generator
                ));
            }
            if collapse(a) != self.steps[i + 1] {
                return bad(format!(
                    "matrix {i} collapses to {}, not {}",
                    collapse(a),
                    self.steps[i + 1]
                ));
            }
        }
        Ok(())
    }
}

/// Builds a chain for a two-part generator from the column-2 entry chosen
/// for each part at each step.
struct TwoColumnBuilder {
    generator: Partition,
    current: Vec<usize>,
    steps: Vec<Partition>,
    matrices: Vec<Vec<Vec<usize>>>,
}

impl TwoColumnBuilder {
    fn new(generator: Partition) -> Self {
        let n = generator.weight();
        TwoColumnBuilder {
            generator,
            current: vec![n],
            steps: vec![Partition::row(n)],
            matrices: Vec::new(),
        }
    }

    /// `second[i]` is the column-2 entry of the row for `current[i]`.
    fn step(&mut self, second: &[usize]) {
        let matrix: Vec<Vec<usize>> = self
            .current
            .iter()
            .zip(second)
            .map(|(&a, &y)| vec![a - y, y])
            .collect();
        let mut next: Vec<usize> = matrix.iter().map(|r| r[0]).collect();
        next.extend(matrix.iter().map(|r| r[1]));
        self.matrices.push(matrix);
        next.retain(|&x| x > 0);
        // Matrix rows always follow the parts in weakly decreasing order.
        next.sort_unstable_by(|a, b| b.cmp(a));
        self.current = next;
        self.steps
            .push(Partition::from_unsorted(self.current.clone()));
    }

    fn finish(self) -> SplitSequence {
        SplitSequence {
            generator: self.generator,
            steps: self.steps,
            matrices: self.matrices,
        }
    }
}

/// The explicit chain for `σ_{(n-k,k)}` of length `⌈2(n-1)/(k+1)⌉`: peel off
/// `k`'s from the first row, then break one tracked part and the `k - 1`
/// largest other parts by one box per step.
pub fn tworow_split_sequence(n: usize, k: usize) -> Result<SplitSequence> {
    if n < 2 || k < 1 || k * k > n || 2 * k > n {
        return Err(Error::OutOfRange {
            what: "k",
            detail: format!("need 1 <= k <= floor(sqrt(n)) and n >= 2, got n = {n}, k = {k}"),
        });
    }
    let generator = Partition::new(vec![n - k, k])?;
    let mut b = TwoColumnBuilder::new(generator);
    let (q, c) = ((n - 1) / (k + 1), (n - 1) % (k + 1));
    // α_i = (n - ik, k^i) for i <= q.
    for _ in 0..q {
        let mut second = vec![0; b.current.len()];
        second[0] = k;
        b.step(&second);
    }
    let mut tracked = q + 1;
    if c > 0 {
        // α_b = (b + c + 1, k^b) → (b + 1, k^{b-k+c}, (k-1)^{k-c}, c, 1^{k-c}).
        let mut second = vec![0; b.current.len()];
        second[0] = c;
        for y in second.iter_mut().skip(1).take(k - c) {
            *y = 1;
        }
        b.step(&second);
    }
    let target = Partition::column(n);
    while *b.steps.last().unwrap() != target {
        // Break the tracked part and the k - 1 largest of the others.
        let t = b
            .current
            .iter()
            .position(|&x| x == tracked)
            .ok_or_else(|| Error::Construction {
                lambda: b.generator.clone(),
                reason: format!("tracked part {tracked} vanished"),
            })?;
        let mut second = vec![0; b.current.len()];
        second[t] = 1;
        let mut left = k - 1;
        for (i, y) in second.iter_mut().enumerate() {
            if left == 0 {
                break;
            }
            if i != t {
                *y = 1;
                left -= 1;
            }
        }
        if left > 0 {
            return Err(Error::Construction {
                lambda: b.generator.clone(),
                reason: "too few parts to break".into(),
            });
        }
        b.step(&second);
        tracked = tracked.saturating_sub(1).max(1);
        if b.steps.len() > 2 * n + 2 {
            return Err(Error::Construction {
                lambda: b.generator.clone(),
                reason: "sequence does not terminate".into(),
            });
        }
    }
    let seq = b.finish();
    seq.validate()?;
    Ok(seq)
}

/// The chain for `σ_{(k,k-1)}`, `n = 2k - 1`, that halves every part at each
/// step, reaching `(1^n)` after `⌈log₂ n⌉` steps.
///
/// Each part `a` splits as `(⌈a/2⌉, ⌊a/2⌋)` across the two columns. With `o`
/// odd parts this puts `(n + o)/2` in the first column, so the split is
/// reversed for every odd part after the `(o+1)/2`-th one.
pub fn halving_sequence(n: usize) -> Result<SplitSequence> {
    if n.is_multiple_of(2) || n < 3 {
        return Err(Error::OutOfRange {
            what: "n",
            detail: format!("halving needs odd n >= 3, got {n}"),
        });
    }
    let k = n.div_ceil(2);
    let generator = Partition::new(vec![k, k - 1])?;
    let mut b = TwoColumnBuilder::new(generator);
    let target = Partition::column(n);
    while *b.steps.last().unwrap() != target {
        let odd_total = b.current.iter().filter(|&&a| a % 2 == 1).count();
        let keep = odd_total.div_ceil(2);
        let mut seen_odd = 0;
        let second: Vec<usize> = b
            .current
            .iter()
            .map(|&a| {
                if a % 2 == 1 {
                    seen_odd += 1;
                    if seen_odd > keep {
                        return a.div_ceil(2);
                    }
                }
                a / 2
            })
            .collect();
        b.step(&second);
    }
    let seq = b.finish();
    seq.validate()?;
    Ok(seq)
}

/// `{μ : |λ ∖ μ| ≤ kr}`, the constituents of `σ_{μ(k)}^r χ_λ`.
pub fn hook_power_constituents(lambda: &Partition, k: usize, r: usize) -> Result<ConstituentSet> {
    let n = lambda.weight();
    if k < 1 || k + 2 > n {
        return Err(Error::OutOfRange {
            what: "k",
            detail: format!("need 1 <= k <= n - 2, got k = {k}, n = {n}"),
        });
    }
    if r < 1 {
        return Err(Error::OutOfRange {
            what: "r",
            detail: "r must be at least 1".into(),
        });
    }
    let mut s = ConstituentSet::empty(n);
    for (i, mu) in partition_index(n).partitions().iter().enumerate() {
        if lambda.outside_count(mu)? <= k * r {
            s.insert_index(i);
        }
    }
    Ok(s)
}

/// Whether `χ_{μ(1)} χ_{μ(2)} ⋯ χ_{μ(n-2)}` contains every irreducible.
pub fn product_of_hooks_covers(n: usize) -> Result<bool> {
    if n < 5 {
        return Err(Error::OutOfRange {
            what: "n",
            detail: format!("need n >= 5, got {n}"),
        });
    }
    let mut s = ConstituentSet::singleton(&Partition::row(n))?;
    for k in 1..=n - 2 {
        s = product_closure_step(&s, &Partition::hook(n, k)?)?;
    }
    Ok(s.is_full())
}

/// `c(σ_λ^i)` for `i = 1..=k`.
pub fn sigma_power_constituents(lambda: &Partition, k: usize) -> Result<Vec<ConstituentSet>> {
    power_constituents(&sigma_constituents(lambda)?, k)
}

/// `c(σ_λ^k)` as a union of dominance up-sets over the collapses of all
/// `k`-fold matrix products; independent of the character tables.
pub fn sigma_power_by_collapses(lambda: &Partition, k: usize) -> Result<ConstituentSet> {
    let n = lambda.weight();
    let mut level: BTreeSet<Partition> = BTreeSet::from([Partition::row(n)]);
    for _ in 0..k {
        let mut next = BTreeSet::new();
        for mu in &level {
            next.extend(collapse_targets(mu, lambda)?);
        }
        level = next;
    }
    let mut s = ConstituentSet::empty(n);
    for nu in &level {
        s.union_with(&sigma_constituents(nu)?);
    }
    Ok(s)
}

/// One comparison made by [`conjecture_status`].
#[derive(Clone, Debug, Serialize)]
pub struct ConjectureEntry {
    pub lambda: Partition,
    pub power: usize,
    pub chi_constituents: usize,
    pub sigma_constituents: usize,
    pub equal: bool,
    pub ccn_char: Covering,
    pub ccn_sigma: Covering,
}

/// Evidence for the balanced two-row partition `(n/2, n/2)`.
#[derive(Clone, Debug, Serialize)]
pub struct BalancedEntry {
    pub lambda: Partition,
    pub ccn_char: Covering,
    pub low: usize,
    pub high: usize,
    pub within: bool,
}

/// Evidence about covering numbers of two-row characters at one `n`. Nothing
/// here is asserted; the report records what was observed.
#[derive(Clone, Debug, Serialize)]
pub struct ConjectureReport {
    pub n: usize,
    pub entries: Vec<ConjectureEntry>,
    pub balanced: Option<BalancedEntry>,
}

impl ConjectureReport {
    pub fn consistent(&self) -> bool {
        self.entries
            .iter()
            .all(|e| e.equal && e.ccn_char == e.ccn_sigma)
            && self.balanced.as_ref().is_none_or(|b| b.within)
    }
}

pub(crate) fn ceil_log2(n: usize) -> usize {
    (usize::BITS - (n.max(1) - 1).leading_zeros()) as usize
}

/// For each `λ = (n-k, k)`, compares `c(χ_λ^i)` with `c(σ_λ^i)`, where
/// `i = 2` for odd `n`, and for even `n` `i = 2` when `k < ⌈n/4⌉` and `i = 3`
/// otherwise. For even `n` also places `ccn(χ_{(n/2,n/2)})` against
/// `[⌈log₂ n⌉, ⌈log₂ n⌉ + 1]`.
pub fn conjecture_status(n: usize) -> Result<ConjectureReport> {
    if n < 5 {
        return Err(Error::OutOfRange {
            what: "n",
            detail: format!("need n >= 5, got {n}"),
        });
    }
    let mut entries = Vec::new();
    for k in 1..=n / 2 {
        if n.is_multiple_of(2) && 2 * k == n {
            continue;
        }
        let lambda = Partition::new(vec![n - k, k])?;
        let power = if n % 2 == 1 || k < n.div_ceil(4) {
            2
        } else {
            3
        };
        let chi = power_constituents(&ConstituentSet::singleton(&lambda)?, power)?
            .pop()
            .unwrap();
        let sig = sigma_power_constituents(&lambda, power)?.pop().unwrap();
        entries.push(ConjectureEntry {
            lambda: lambda.clone(),
            power,
            chi_constituents: chi.len(),
            sigma_constituents: sig.len(),
            equal: chi == sig,
            ccn_char: ccn_char(&lambda, n)?.result,
            ccn_sigma: ccn_sigma(&lambda, n)?.result,
        });
    }
    let balanced = if n.is_multiple_of(2) {
        let lambda = Partition::rectangle(2, n / 2).conjugate();
        let ccn = ccn_char(&lambda, n)?.result;
        let low = ceil_log2(n);
        let within = ccn.value().is_some_and(|v| low <= v && v <= low + 1);
        Some(BalancedEntry {
            lambda,
            ccn_char: ccn,
            low,
            high: low + 1,
            within,
        })
    } else {
        None
    };
    Ok(ConjectureReport {
        n,
        entries,
        balanced,
    })
}

/// `c(σ_λ^r χ_μ)` computed from class functions, for cross-checks.
pub fn sigma_power_times_char(
    lambda: &Partition,
    r: u32,
    mu: &Partition,
) -> Result<ConstituentSet> {
    let table = character_table(mu.weight())?;
    let f = sigma(lambda)?.pow(r).mul(&table.character(mu)?)?;
    constituents(&f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::enumerate_partitions;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn set(n: usize, items: &[&str]) -> ConstituentSet {
        let parts: Vec<Partition> = items.iter().map(|s| p(s)).collect();
        ConstituentSet::from_partitions(n, &parts).unwrap()
    }

    #[test]
    fn bitset_basics() {
        let mut s = ConstituentSet::empty(6);
        assert!(s.is_empty());
        s.insert(&p("3,3")).unwrap();
        s.insert(&p("6")).unwrap();
        assert!(s.contains(&p("3,3")) && !s.contains(&p("4,2")));
        assert!(!s.contains(&p("3,2")));
        assert_eq!(s.len(), 2);
        assert!(s.is_subset(&ConstituentSet::full(6)));
        assert_eq!(ConstituentSet::full(6).difference(&s).len(), 9);
        s.remove(&p("6"));
        assert_eq!(s.partitions(), vec![p("3,3")]);
        assert!(s.insert(&p("3,2")).is_err());
        assert_eq!(ConstituentSet::full(14).len(), 135);
    }

    #[test]
    fn constituent_examples() {
        let t = character_table(5).unwrap();
        assert_eq!(
            constituents(&t.character(&p("3,2")).unwrap()).unwrap(),
            set(5, &["3,2"])
        );
        assert!(constituents(&sigma(&Partition::column(5)).unwrap())
            .unwrap()
            .is_full());
        let chi = t.character(&p("3,2")).unwrap();
        let sq = constituents(&chi.mul(&chi).unwrap()).unwrap();
        let want: Vec<Partition> = enumerate_partitions(5)
            .into_iter()
            .filter(|m| m.len() <= 4)
            .collect();
        assert_eq!(sq, ConstituentSet::from_partitions(5, &want).unwrap());

        for n in 4..=8 {
            let std = Partition::hook(n, 1).unwrap();
            let triv = ConstituentSet::singleton(&Partition::row(n)).unwrap();
            assert_eq!(
                product_closure_step(&triv, &std).unwrap(),
                ConstituentSet::singleton(&std).unwrap()
            );
            let mut want = ConstituentSet::empty(n);
            for q in [vec![n], vec![n - 1, 1], vec![n - 2, 2], vec![n - 2, 1, 1]] {
                want.insert(&Partition::new(q).unwrap()).unwrap();
            }
            let got =
                product_closure_step(&ConstituentSet::singleton(&std).unwrap(), &std).unwrap();
            assert_eq!(got, want);
            for lambda in enumerate_partitions(n) {
                assert!(product_closure_step(&ConstituentSet::full(n), &lambda)
                    .unwrap()
                    .is_full());
            }
        }
    }

    #[test]
    fn small_covering_numbers() {
        assert_eq!(ccn_char(&p("4,1"), 5).unwrap().result, Covering::Covered(4));
        assert_eq!(ccn_char(&p("3,2"), 5).unwrap().result, Covering::Covered(3));
        assert_eq!(
            ccn_char(&p("3,1,1"), 5).unwrap().result,
            Covering::Covered(2)
        );
        assert_eq!(ccn_char(&p("5"), 5).unwrap().result, Covering::NotExists);
        assert_eq!(
            ccn_char(&p("1,1,1,1,1"), 5).unwrap().result,
            Covering::NotExists
        );
        assert_eq!(
            ccn_char(&p("4,1"), 2).unwrap().result,
            Covering::CapExhausted(2)
        );
        // χ_{(2,2)} has the Klein four-group in its kernel.
        assert_eq!(ccn_char(&p("2,2"), 10).unwrap().result, Covering::NotExists);
        let run = ccn_char(&p("3,2"), 5).unwrap();
        assert_eq!(run.power_sizes, vec![1, 6, 7]);
    }

    #[test]
    fn conjugate_invariance_and_sigma_bounds() {
        for n in 2..=9 {
            for lambda in enumerate_partitions(n) {
                let a = ccn_char(&lambda, n + 2).unwrap().result;
                assert_eq!(
                    a,
                    ccn_char(&lambda.conjugate(), n + 2).unwrap().result,
                    "{lambda}"
                );
                if lambda == Partition::row(n) || lambda == Partition::column(n) {
                    continue;
                }
                let s1 = ccn_sigma(&lambda, n + 2).unwrap().result.value();
                let s2 = ccn_sigma(&lambda.conjugate(), n + 2)
                    .unwrap()
                    .result
                    .value();
                if let Some(k) = a.value() {
                    assert!(k >= s1.unwrap().max(s2.unwrap()), "{lambda}");
                }
            }
        }
    }

    #[test]
    fn sigma_search() {
        for n in 5..=12 {
            for k in 1..=n - 2 {
                let run = ccn_sigma(&Partition::hook(n, k).unwrap(), n).unwrap();
                assert_eq!(
                    run.result,
                    Covering::Covered((n - 1).div_ceil(k)),
                    "n = {n}, k = {k}"
                );
                let path = run.path.unwrap();
                assert_eq!(path.len(), (n - 1).div_ceil(k) + 1);
            }
        }
        assert_eq!(
            ccn_sigma(&p("3,2"), 5).unwrap().result,
            Covering::Covered(3)
        );
        assert_eq!(ccn_sigma(&p("5"), 5).unwrap().result, Covering::NotExists);
        for n in 5..=12 {
            for k in 1..=n / 2 {
                let v = ccn_sigma(&Partition::new(vec![n - k, k]).unwrap(), n)
                    .unwrap()
                    .result
                    .value()
                    .unwrap();
                assert!(
                    v >= (2 * (n - 1)).div_ceil(k + 1) && v >= ceil_log2(n),
                    "n = {n}, k = {k}"
                );
            }
        }
    }

    #[test]
    fn sigma_power_routes_agree() {
        for n in 3..=7 {
            for lambda in enumerate_partitions(n) {
                let by_sets = sigma_power_constituents(&lambda, 3).unwrap();
                for (i, s) in by_sets.iter().enumerate() {
                    assert_eq!(
                        *s,
                        sigma_power_by_collapses(&lambda, i + 1).unwrap(),
                        "{lambda}^{}",
                        i + 1
                    );
                }
                let direct = constituents(&sigma(&lambda).unwrap().pow(2)).unwrap();
                assert_eq!(by_sets[1], direct);
            }
        }
    }

    fn parse_seq(s: &[&str]) -> Vec<Partition> {
        s.iter().map(|x| p(x)).collect()
    }

    #[test]
    fn worked_sequences() {
        let seq = tworow_split_sequence(21, 3).unwrap();
        assert_eq!(seq.len(), 10);
        let tail = parse_seq(&[
            "6,3^5",
            "5,3,3,3,2,2,1^3",
            "4,3,2,2,2,2,1^6",
            "3,2,2,2,2,1^10",
            "2,2,2,1^15",
            "1^21",
        ]);
        assert_eq!(seq.steps[5..], tail[..]);

        let seq = tworow_split_sequence(46, 6).unwrap();
        assert_eq!(seq.len(), 13);
        let tail = parse_seq(&[
            "10,6^6",
            "7,6^3,5^3,3,1^3",
            "6,5^4,4^2,3,1^9",
            "5,4^5,3^2,1^15",
            "4,3^7,1^21",
            "3^3,2^5,1^27",
            "2^5,1^36",
            "1^46",
        ]);
        assert_eq!(seq.steps[6..], tail[..]);

        let seq = tworow_split_sequence(69, 8).unwrap();
        assert_eq!(seq.len(), 16);
        let tail = parse_seq(&[
            "13,8^7",
            "8,8^4,7^3,5,1^3",
            "7^5,6^3,5,1^11",
            "6,6^4,5^4,1^19",
            "5,5^5,4^3,1^27",
            "4,4^6,3^2,1^35",
            "3,3^7,2,1^43",
            "2^9,1^51",
            "2,1^67",
            "1^69",
        ]);
        assert_eq!(seq.steps[7..], tail[..]);
        // The printed ninth step (7,7^4,6^3,3,1^11) has weight 67.
        assert_eq!(p("7,7^4,6^3,3,1^11").weight(), 67);
    }

    #[test]
    fn split_sequences_have_the_bound_length() {
        for n in 2..=60 {
            for k in 1..=n {
                if k * k > n || 2 * k > n {
                    assert!(tworow_split_sequence(n, k).is_err());
                    continue;
                }
                let seq = tworow_split_sequence(n, k).unwrap();
                assert_eq!(seq.len(), (2 * (n - 1)).div_ceil(k + 1), "n = {n}, k = {k}");
            }
        }
    }

    #[test]
    fn halving() {
        for n in (3..=101).step_by(2) {
            let seq = halving_sequence(n).unwrap();
            assert_eq!(seq.len(), ceil_log2(n), "n = {n}");
        }
        assert_eq!(halving_sequence(5).unwrap().len(), 3);
        assert_eq!(halving_sequence(9).unwrap().len(), 4);
        assert_eq!(halving_sequence(13).unwrap().len(), 4);
        assert!(halving_sequence(8).is_err());
    }

    #[test]
    fn validation_catches_bad_sequences() {
        let mut seq = halving_sequence(5).unwrap();
        seq.matrices[0][0].swap(0, 1);
        assert!(seq.validate().is_err());
        let mut seq = halving_sequence(5).unwrap();
        seq.steps.pop();
        assert!(seq.validate().is_err());
    }

    #[test]
    fn hook_powers() {
        assert_eq!(
            hook_power_constituents(&p("5"), 2, 1).unwrap(),
            set(5, &["5", "4,1", "3,2", "3,1,1"])
        );
        for n in 3..=8 {
            for lambda in enumerate_partitions(n) {
                for k in 1..=n - 2 {
                    for r in 1..=3u32 {
                        let want =
                            sigma_power_times_char(&Partition::hook(n, k).unwrap(), r, &lambda)
                                .unwrap();
                        assert_eq!(
                            hook_power_constituents(&lambda, k, r as usize).unwrap(),
                            want
                        );
                    }
                }
                assert!(hook_power_constituents(&lambda, 1, n).unwrap().is_full());
            }
        }
        assert!(hook_power_constituents(&p("5"), 4, 1).is_err());
    }

    #[test]
    fn products_of_hooks() {
        for n in 5..=9 {
            assert!(product_of_hooks_covers(n).unwrap());
        }
        assert!(product_of_hooks_covers(4).is_err());
    }

    #[test]
    fn conjecture_reports() {
        let r = conjecture_status(5).unwrap();
        assert_eq!(r.entries.len(), 2);
        assert!(r.entries.iter().all(|e| e.equal));
        let r = conjecture_status(6).unwrap();
        assert!(r.balanced.is_some());
        assert!(conjecture_status(4).is_err());
    }

    #[test]
    fn log2() {
        assert_eq!(
            [1, 2, 3, 4, 5, 8, 9, 13, 16, 17].map(ceil_log2),
            [0, 1, 2, 2, 3, 3, 4, 4, 4, 5]
        );
    }
}
