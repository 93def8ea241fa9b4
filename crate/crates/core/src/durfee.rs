//! Explicit Littlewood–Richardson fillings that split a partition `λ ⊢ n`
//! as `c^λ_{αβ} > 0` with `α ⊢ ⌊(n-1)/2⌋` and Durfee ranks of `α`, `β`
//! about half that of `λ`, plus the reverse gluing `α, β ↦ η`.
//!
//! Every construction is checked on the way out; a shape that defeats it
//! is reported as [`Error::Construction`] rather than patched.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, Partition, SkewShape};
use crate::tableaux::{lr_product, SemiStandardFilling};

/// `α ⊢ k`, `β ⊢ n - k` and an LR tableau of shape `λ/β` and type `α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DurfeeWitness {
    pub lambda: Partition,
    pub alpha: Partition,
    pub beta: Partition,
    pub filling: SemiStandardFilling,
}

#[derive(Serialize)]
struct WitnessRecord<'a> {
    lambda: &'a Partition,
    alpha: &'a Partition,
    beta: &'a Partition,
    filling: Vec<Vec<String>>,
}

impl Serialize for DurfeeWitness {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        WitnessRecord {
            lambda: &self.lambda,
            alpha: &self.alpha,
            beta: &self.beta,
            filling: self
                .filling
                .rows()
                .iter()
                .map(|r| r.iter().map(usize::to_string).collect())
                .collect(),
        }
        .serialize(s)
    }
}

impl DurfeeWitness {
    /// Re-checks the LR property and the Durfee ranks.
    pub fn validate(&self) -> Result<()> {
        let fail = |reason: String| {
            Err(Error::Construction {
                lambda: self.lambda.clone(),
                reason,
            })
        };
        let n = self.lambda.weight();
        if self.alpha.weight() != witness_k(n) || self.beta.weight() != n - witness_k(n) {
            return fail("weights of alpha and beta are wrong".into());
        }
        if !self.filling.is_littlewood_richardson() {
            return fail("filling is not an LR tableau".into());
        }
        if Partition::from_unsorted(self.filling.content()) != self.alpha {
            return fail("filling content differs from alpha".into());
        }
        let d = self.lambda.durfee_rank();
        let m = d.div_ceil(2);
        let (da, db) = (self.alpha.durfee_rank(), self.beta.durfee_rank());
        let ok = if d.is_multiple_of(2) {
            da == m && db == m
        } else {
            db == m && (m - 1..=m).contains(&da)
        };
        if !ok {
            return fail(format!(
                "d(alpha) = {da}, d(beta) = {db} for d(lambda) = {d}"
            ));
        }
        Ok(())
    }
}

/// `⌊(n-1)/2⌋`, the weight of `α`.
pub fn witness_k(n: usize) -> usize {
    n.saturating_sub(1) / 2
}

/// How the rows below the middle block are labelled.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TailRule {
    /// Row `i` of the tail is labelled `m + p + i`, counting every row.
    /// Fails when a row of `λ/β` inside the tail is empty.
    Literal,
    /// As `Literal`, but `i` counts only the nonempty rows of the tail.
    /// Agrees with `Literal` whenever that succeeds.
    #[default]
    SkipEmptyRows,
}

/// Witness for `d(λ) = 2m`, `m ≥ 2`, with `d(α) = d(β) = m`.
pub fn construct_witness_even(lambda: &Partition) -> Result<DurfeeWitness> {
    construct_witness_with(lambda, TailRule::default(), Some(false))
}

/// Witness for `d(λ) = 2m - 1`, `m ≥ 2`, with `d(β) = m` and
/// `m - 1 ≤ d(α) ≤ m`.
pub fn construct_witness_odd(lambda: &Partition) -> Result<DurfeeWitness> {
    construct_witness_with(lambda, TailRule::default(), Some(true))
}

/// Dispatches on the parity of `d(λ)`; needs `d(λ) ≥ 3`.
pub fn construct_witness(lambda: &Partition) -> Result<DurfeeWitness> {
    construct_witness_with(lambda, TailRule::default(), None)
}

/// `odd` forces the parity the caller expects; `None` takes it from `λ`.
pub fn construct_witness_with(
    lambda: &Partition,
    rule: TailRule,
    odd: Option<bool>,
) -> Result<DurfeeWitness> {
    let d = lambda.durfee_rank();
    let is_odd = d % 2 == 1;
    if d < 3 || odd.is_some_and(|o| o != is_odd) {
        let want = match odd {
            Some(true) => "an odd rank >= 3",
            Some(false) => "an even rank >= 4",
            None => "rank >= 3",
        };
        return Err(Error::Precondition(format!(
            "{lambda} has Durfee rank {d}; need {want}"
        )));
    }
    let mut b = Builder::new(lambda, d.div_ceil(2), is_odd);
    b.strict = rule == TailRule::Literal;
    b.run()
}

struct Builder<'a> {
    lambda: &'a Partition,
    m: usize,
    odd: bool,
    strict: bool,
}

/// Rows of `λ/β` being filled; `grid[r][j]` is the entry in column `β_r + j`.
struct Grid {
    beta: Vec<usize>,
    lambda: Vec<usize>,
    grid: Vec<Vec<usize>>,
    counts: Vec<usize>,
}

impl Grid {
    fn len(&self, r: usize) -> usize {
        self.grid.get(r).map_or(0, Vec::len)
    }

    fn get(&self, r: usize, col: usize) -> Option<usize> {
        let row = self.grid.get(r)?;
        (col >= self.beta[r] && col < self.lambda[r])
            .then(|| row[col - self.beta[r]])
            .filter(|&v| v > 0)
    }

    /// Least value the box `(r, col)` may take given the box above it.
    fn floor(&self, r: usize, col: usize) -> usize {
        if r == 0 {
            1
        } else {
            self.get(r - 1, col).map_or(1, |v| v + 1)
        }
    }

    fn count(&self, v: usize) -> usize {
        self.counts.get(v).copied().unwrap_or(0)
    }

    fn set(&mut self, r: usize, j: usize, v: usize) {
        self.grid[r][j] = v;
        if self.counts.len() <= v {
            self.counts.resize(v + 1, 0);
        }
        self.counts[v] += 1;
    }
}

impl<'a> Builder<'a> {
    fn new(lambda: &'a Partition, m: usize, odd: bool) -> Self {
        Builder {
            lambda,
            m,
            odd,
            strict: false,
        }
    }

    fn fail<T>(&self, reason: impl Into<String>) -> Result<T> {
        Err(Error::Construction {
            lambda: self.lambda.clone(),
            reason: reason.into(),
        })
    }

    fn run(&self) -> Result<DurfeeWitness> {
        let n = self.lambda.weight();
        let beta = self.select_beta(n - witness_k(n))?;
        if beta.durfee_rank() != self.m {
            return self.fail(format!(
                "beta = {beta} has Durfee rank {}",
                beta.durfee_rank()
            ));
        }
        match self.finish(&beta, false) {
            Err(e @ Error::Construction { .. }) if !self.strict => {
                self.finish(&beta, true).map_err(|_| e)
            }
            other => other,
        }
    }

    fn finish(&self, beta: &Partition, skip_empty: bool) -> Result<DurfeeWitness> {
        let beta = beta.clone();
        let rows = self.fill(&beta, skip_empty)?;
        let shape = SkewShape::new(self.lambda.clone(), beta.clone())?;
        let filling = SemiStandardFilling::new(shape, rows)
            .or_else(|e| self.fail(format!("filling is not semistandard: {e}")))?;
        let content = filling.content();
        if content.windows(2).any(|w| w[0] < w[1]) {
            return self.fail(format!("filling content {content:?} is not a partition"));
        }
        let alpha = Partition::from_unsorted(content);
        let witness = DurfeeWitness {
            lambda: self.lambda.clone(),
            alpha,
            beta,
            filling,
        };
        witness.validate()?;
        Ok(witness)
    }

    /// Chooses `target` boxes of `λ` in the prescribed order.
    fn select_beta(&self, target: usize) -> Result<Partition> {
        let parts = self.lambda.parts();
        let conj = self.lambda.conjugate();
        let conj = conj.parts();
        let m = self.m;
        // Rows and columns that the selection rules range over.
        let q = if self.odd { m - 1 } else { m };
        let mut chosen: Vec<Vec<bool>> = parts.iter().map(|&l| vec![false; l]).collect();
        let mut count = 0;
        let take = |chosen: &mut Vec<Vec<bool>>, count: &mut usize, r: usize, c: usize| {
            if !chosen[r][c] {
                chosen[r][c] = true;
                *count += 1;
            }
        };
        if self.odd {
            for r in 0..m {
                for c in 0..m {
                    take(&mut chosen, &mut count, r, c);
                }
            }
        }
        for (r, &len) in parts.iter().enumerate().take(q) {
            for (c, &height) in conj.iter().enumerate().take(len) {
                if height > r + m {
                    take(&mut chosen, &mut count, r, c);
                }
            }
        }
        for c in 0..q {
            let with_p = parts.iter().take_while(|&&l| l > c + m).count();
            for r in 0..with_p.saturating_sub(q) {
                take(&mut chosen, &mut count, r, c);
            }
        }
        if count > target {
            return self.fail(format!(
                "selection rules pick {count} boxes, more than {target}"
            ));
        }
        let mut order: Vec<(usize, usize)> = Vec::new();
        for (c, &height) in conj.iter().enumerate().take(q) {
            order.extend((0..height).map(|r| (r, c)));
        }
        for (r, &len) in parts.iter().enumerate().take(q) {
            order.extend((0..len).map(|c| (r, c)));
        }
        if self.odd {
            order.extend((0..conj[m - 1]).map(|r| (r, m - 1)));
            order.extend((0..parts[m - 1]).map(|c| (m - 1, c)));
        }
        for (r, c) in order {
            if count == target {
                break;
            }
            take(&mut chosen, &mut count, r, c);
        }
        if count < target {
            return self.fail(format!("only {count} of {target} boxes could be chosen"));
        }
        let mut beta = Vec::new();
        for row in &chosen {
            let len = row.iter().take_while(|&&b| b).count();
            if row[len..].iter().any(|&b| b) {
                return self.fail("chosen boxes are not left-justified");
            }
            beta.push(len);
        }
        while beta.last() == Some(&0) {
            beta.pop();
        }
        if beta.windows(2).any(|w| w[0] < w[1]) {
            return self.fail(format!("chosen boxes {beta:?} do not form a Young diagram"));
        }
        Partition::new(beta)
    }

    fn fill(&self, beta: &Partition, skip_empty: bool) -> Result<Vec<Vec<usize>>> {
        let m = self.m;
        let lam = self.lambda.parts().to_vec();
        let mut b = beta.parts().to_vec();
        b.resize(lam.len(), 0);
        let mut g = Grid {
            grid: lam.iter().zip(&b).map(|(&l, &x)| vec![0; l - x]).collect(),
            beta: b,
            lambda: lam.clone(),
            counts: Vec::new(),
        };
        let rows = lam.len();
        let head = if self.odd { 2 * m - 1 } else { 2 * m };

        if self.odd && !self.has_rectangle(&g, head) {
            return self.fail(format!(
                "the first {head} rows of the skew shape contain no {m} x {} rectangle",
                m - 1
            ));
        }

        // Head rows: each column numbered 1, 2, ... from its top box.
        for r in 0..head.min(rows) {
            for j in 0..g.len(r) {
                let v = g.floor(r, g.beta[r] + j);
                if v > m {
                    return self.fail(format!(
                        "a column of the first {head} rows has more than {m} boxes"
                    ));
                }
                g.set(r, j, v);
            }
        }
        let case_two = self.odd && g.count(m) < m;
        if self.odd && g.count(m) + 1 < m {
            return self.fail(format!(
                "{m} is used fewer than {} times in the first {head} rows",
                m - 1
            ));
        }

        // p: first row after the head with fewer than m boxes.
        let mut p = 1;
        while g.len(head + p - 1) >= m {
            p += 1;
        }
        let block = if case_two { m - 1 } else { m };
        for i in 1..p {
            let r = head + i - 1;
            let s = g.len(r);
            if s > head {
                return self.fail(format!("row {} has {s} boxes, more than {head}", r + 1));
            }
            for j in s - block..s {
                g.set(r, j, m + i);
            }
            for j in 0..s - block {
                let left = if j == 0 { 1 } else { g.grid[r][j - 1] };
                let mut v = left.max(g.floor(r, g.beta[r] + j));
                if case_two && v > m {
                    while g.count(v) >= m {
                        v += 1;
                    }
                }
                g.set(r, j, v);
            }
        }

        // Tail rows head+p-1+i, i = 0..=d.
        let start = head + p - 1;
        if start >= rows {
            return Ok(g.grid);
        }
        let mut tail: Vec<usize> = (start..rows).collect();
        let last = tail
            .iter()
            .rposition(|&x| g.len(x) > 0)
            .map_or(0, |i| i + 1);
        if skip_empty {
            if tail[..last].iter().all(|&x| g.len(x) > 0) {
                return self.fail("no empty row inside the tail to skip");
            }
            tail.retain(|&x| g.len(x) > 0);
        }
        let r: Vec<usize> = tail.iter().map(|&x| g.len(x)).collect();
        let rises: Vec<usize> = (1..r.len()).filter(|&i| r[i] > r[i - 1]).collect();
        let c = match rises.as_slice() {
            [] => None,
            [c] if r[*c] == r[*c - 1] + 1 => Some(*c),
            _ => {
                return self.fail(format!(
                    "tail row lengths {r:?} rise more than once or by more than one"
                ))
            }
        };
        let e = c.map(|c| (c + 1..r.len()).find(|&i| r[i] <= r[0]).unwrap_or(r.len()));
        // Values m+1 .. m+t-1 are closed to the first boxes of the tail in the second case.
        let t = (1..=p)
            .find(|&t| (t..p).all(|j| g.count(m + j) == m - 1))
            .unwrap_or(p);
        for (i, &row) in tail.iter().enumerate() {
            let val = m + p + i;
            let special = matches!((c, e), (Some(c), Some(e)) if c <= i && i < e);
            let from = usize::from(special);
            for j in from..r[i] {
                g.set(row, j, val);
            }
            if !special {
                continue;
            }
            let first = if case_two {
                let floor = g.floor(row, g.beta[row]);
                let lattice_ok = |v: usize| v == 1 || g.count(v) < g.count(v - 1);
                match (floor..=val).find(|&v| !(m + 1..m + t).contains(&v) && lattice_ok(v)) {
                    Some(v) => v,
                    None => {
                        return self.fail(format!("no admissible first entry in row {}", row + 1))
                    }
                }
            } else {
                val - c.unwrap()
            };
            g.set(row, 0, first);
        }
        Ok(g.grid)
    }

    /// Whether some `m` consecutive rows among the first `head` share
    /// `m - 1` columns of the skew shape.
    fn has_rectangle(&self, g: &Grid, head: usize) -> bool {
        let m = self.m;
        (0..=head - m).any(|top| {
            let rows = top..top + m;
            let left = rows.clone().map(|r| g.beta[r]).max().unwrap();
            let right = rows.map(|r| g.lambda[r]).min().unwrap();
            right >= left + m - 1
        })
    }
}

/// Glues `β` onto `α`: the first `m = d(β)` rows of `β` extend those of `α`,
/// and each later row of `β` drops one box to the foot of each of its
/// columns. Needs `d(α) ∈ {m - 1, m}`.
pub fn adjoin_eta(alpha: &Partition, beta: &Partition) -> Result<Partition> {
    let m = beta.durfee_rank();
    let da = alpha.durfee_rank();
    if !(da == m || da + 1 == m) {
        return Err(Error::Precondition(format!(
            "d({alpha}) = {da} and d({beta}) = {m} do not match"
        )));
    }
    let a = alpha.parts();
    let bp = beta.parts();
    let mut eta: Vec<usize> = (0..m.max(a.len()))
        .map(|i| a.get(i).copied().unwrap_or(0))
        .collect();
    for i in 0..m {
        eta[i] += bp[i];
    }
    let mut heights: Vec<usize> = (0..m)
        .map(|c| {
            alpha
                .conjugate()
                .parts()
                .get(c)
                .copied()
                .unwrap_or(0)
                .max(m)
        })
        .collect();
    for &len in &bp[m.min(bp.len())..] {
        for h in heights.iter_mut().take(len) {
            if eta.len() <= *h {
                eta.resize(*h + 1, 0);
            }
            eta[*h] += 1;
            *h += 1;
        }
    }
    if eta.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Construction {
            lambda: alpha.clone(),
            reason: format!("glued rows {eta:?} are not a partition"),
        });
    }
    while eta.last() == Some(&0) {
        eta.pop();
    }
    Partition::new(eta)
}

/// Checks `d(λ) ≤ d(μ) + d(ν)` whenever `c^λ_{μν} > 0`, over all
/// `μ ⊢ m`, `ν ⊢ n - m`.
pub fn durfee_subadditive_check(n: usize, m: usize) -> Result<bool> {
    if m >= n {
        return Err(Error::OutOfRange {
            what: "m",
            detail: format!("need m < n, got m = {m}, n = {n}"),
        });
    }
    for mu in enumerate_partitions(m) {
        for nu in enumerate_partitions(n - m) {
            let bound = mu.durfee_rank() + nu.durfee_rank();
            if lr_product(&mu, &nu)?
                .keys()
                .any(|l| l.durfee_rank() > bound)
            {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::lr_coefficient;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn worked_even_example() {
        let lambda = p("11,10,10,8,7,6,6,4,4,2,2,2,1");
        let w = construct_witness_even(&lambda).unwrap();
        assert_eq!(w.beta, p("8,7,6,3,2,2,2,2,1,1,1,1,1"));
        assert_eq!(w.alpha, p("9,8,8,3,3,2,1,1,1"));
        let rows: Vec<Vec<usize>> = vec![
            vec![1, 1, 1],
            vec![1, 2, 2],
            vec![1, 2, 3, 3],
            vec![1, 1, 1, 2, 3],
            vec![1, 2, 2, 2, 3],
            vec![2, 3, 3, 3],
            vec![3, 4, 4, 4],
            vec![5, 5],
            vec![5, 6, 6],
            vec![7],
            vec![8],
            vec![9],
            vec![],
        ];
        assert_eq!(w.filling.rows(), rows.as_slice());
        assert!(lr_coefficient(&lambda, &w.beta, &w.alpha).unwrap() > 0);
    }

    #[test]
    fn small_odd() {
        let w = construct_witness_odd(&p("3,3,3")).unwrap();
        assert_eq!(w.beta.weight(), 5);
        assert_eq!(w.alpha.weight(), 4);
        assert!(lr_coefficient(&w.lambda, &w.beta, &w.alpha).unwrap() > 0);
    }

    #[test]
    fn preconditions() {
        assert!(construct_witness_even(&p("3,3,3")).is_err());
        assert!(construct_witness_odd(&p("4,4,4,4")).is_err());
        assert!(construct_witness(&p("2,2")).is_err());
    }

    #[test]
    fn all_small_witnesses() {
        for n in 9..=16 {
            for lambda in enumerate_partitions(n) {
                if lambda.durfee_rank() >= 3 {
                    let w = construct_witness(&lambda).unwrap();
                    assert!(
                        lr_coefficient(&lambda, &w.beta, &w.alpha).unwrap() > 0,
                        "{lambda}"
                    );
                }
            }
        }
    }

    #[test]
    fn tail_rules() {
        let lambda = p("3,3,3,2,1,1,1");
        let err = construct_witness_with(&lambda, TailRule::Literal, None).unwrap_err();
        assert!(matches!(err, Error::Construction { .. }));
        let w = construct_witness(&lambda).unwrap();
        assert_eq!(w.beta, p("3,2,1,1,1"));
        assert_eq!(w.alpha, p("2,1,1,1,1"));
        let mut literal_failures = Vec::new();
        for n in 9..=16 {
            for lambda in enumerate_partitions(n)
                .into_iter()
                .filter(|l| l.durfee_rank() >= 3)
            {
                let skip = construct_witness(&lambda).unwrap();
                match construct_witness_with(&lambda, TailRule::Literal, None) {
                    Ok(w) => assert_eq!(w, skip),
                    Err(_) => literal_failures.push(lambda.to_string()),
                }
            }
        }
        assert_eq!(
            literal_failures,
            [
                "[3,3,3,2,1,1,1]",
                "[4,3,3,2,1,1,1]",
                "[3,3,3,2,1,1,1,1]",
                "[4,3,3,2,1,1,1,1]",
                "[3,3,3,2,2,1,1,1]",
                "[3,3,3,2,1,1,1,1,1]"
            ]
        );
    }

    #[test]
    fn gluing() {
        assert_eq!(
            adjoin_eta(&p("5,4,3,3,1"), &p("6,6,3,3,3,2,1")).unwrap(),
            p("11,10,6,3,3,3,2,1,1")
        );
        assert_eq!(adjoin_eta(&p("1"), &p("1")).unwrap(), p("2"));
        assert!(adjoin_eta(&p("3,3,3"), &p("1")).is_err());
        for a in 1..=6 {
            for b in 1..=6 {
                for alpha in enumerate_partitions(a) {
                    for beta in enumerate_partitions(b) {
                        let (da, db) = (alpha.durfee_rank(), beta.durfee_rank());
                        if da == db || da + 1 == db {
                            let eta = adjoin_eta(&alpha, &beta).unwrap();
                            assert_eq!(eta.durfee_rank(), db);
                            assert!(
                                lr_coefficient(&eta, &alpha, &beta).unwrap() > 0,
                                "{alpha} {beta}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn subadditivity() {
        assert!(durfee_subadditive_check(7, 3).unwrap());
        assert!(durfee_subadditive_check(6, 1).unwrap());
        assert!(durfee_subadditive_check(8, 4).unwrap());
        assert!(durfee_subadditive_check(4, 4).is_err());
    }

    #[test]
    fn witness_json() {
        let w = construct_witness_odd(&p("3,3,3")).unwrap();
        let v = serde_json::to_value(&w).unwrap();
        assert_eq!(v["lambda"], "[3,3,3]");
        assert!(v["filling"].is_array());
    }
}
