//! Semistandard tableaux: Kostka numbers, lattice words and
//! Littlewood–Richardson coefficients.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, Partition, SkewShape};

/// A filling of a skew shape whose rows weakly increase and whose columns
/// strictly increase. `rows[i]` holds the entries of row `i` from left to
/// right, starting at column `inner_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemiStandardFilling {
    shape: SkewShape,
    rows: Vec<Vec<usize>>,
}

impl SemiStandardFilling {
    pub fn new(shape: SkewShape, rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.len() > shape.rows() {
            return Err(Error::Precondition(format!(
                "{} rows given for a shape with {} rows",
                rows.len(),
                shape.rows()
            )));
        }
        let mut rows = rows;
        rows.resize(shape.rows(), Vec::new());
        for (i, row) in rows.iter().enumerate() {
            let range = shape.row_range(i);
            if row.len() != range.len() {
                return Err(Error::Precondition(format!(
                    "row {} has {} entries but the shape needs {}",
                    i + 1,
                    row.len(),
                    range.len()
                )));
            }
            if row.contains(&0) {
                return Err(Error::Precondition("entries must be positive".into()));
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::Precondition(format!("row {} decreases", i + 1)));
            }
        }
        let filling = SemiStandardFilling { shape, rows };
        for i in 1..filling.rows.len() {
            for col in filling.shape.row_range(i) {
                if let Some(above) = filling.entry(i - 1, col) {
                    if above >= filling.entry(i, col).unwrap() {
                        return Err(Error::Precondition(format!(
                            "column {} does not strictly increase at row {}",
                            col + 1,
                            i + 1
                        )));
                    }
                }
            }
        }
        Ok(filling)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Entry at `(row, col)` in diagram coordinates, if that box is in the shape.
    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        let range = self.shape.row_range(row);
        range
            .contains(&col)
            .then(|| self.rows[row][col - range.start])
    }

    /// `content[i]` is the number of entries equal to `i + 1`.
    pub fn content(&self) -> Vec<usize> {
        let mut content = Vec::new();
        for &v in self.rows.iter().flatten() {
            if content.len() < v {
                content.resize(v, 0);
            }
            content[v - 1] += 1;
        }
        content
    }

    /// Rows concatenated from bottom to top.
    pub fn reading_word(&self) -> ReadingWord {
        ReadingWord(self.rows.iter().rev().flatten().copied().collect())
    }

    /// Rows from top to bottom, each read right to left.
    pub fn reverse_reading_word(&self) -> ReadingWord {
        ReadingWord(
            self.rows
                .iter()
                .flat_map(|r| r.iter().rev())
                .copied()
                .collect(),
        )
    }

    /// The content is a partition and the reverse reading word is a lattice
    /// word.
    pub fn is_littlewood_richardson(&self) -> bool {
        let content = self.content();
        content.windows(2).all(|w| w[0] >= w[1]) && self.reverse_reading_word().is_lattice()
    }
}

/// A word of positive integers read off a tableau.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReadingWord(pub Vec<usize>);

impl ReadingWord {
    pub fn is_lattice(&self) -> bool {
        is_lattice(&self.0)
    }
}

/// Every prefix contains at least as many `i`s as `(i+1)`s.
pub fn is_lattice(word: &[usize]) -> bool {
    let mut counts: Vec<usize> = Vec::new();
    for &v in word {
        if v == 0 {
            return false;
        }
        if counts.len() < v {
            counts.resize(v, 0);
        }
        counts[v - 1] += 1;
        if v > 1 && counts[v - 1] > counts[v - 2] {
            return false;
        }
    }
    true
}

pub fn is_horizontal_strip(shape: &SkewShape) -> bool {
    shape.is_horizontal_strip()
}

pub fn is_vertical_strip(shape: &SkewShape) -> bool {
    shape.is_vertical_strip()
}

/// Number of semistandard tableaux of shape `lambda` and type `mu`.
///
/// Entries equal to `i` form a horizontal strip of size `mu_i`, so the count
/// is the number of chains of such strips from the empty shape to `lambda`.
pub fn kostka(lambda: &Partition, mu: &Partition) -> Result<u64> {
    if lambda.weight() != mu.weight() {
        return Err(Error::weights(lambda, mu));
    }
    let mut memo = HashMap::new();
    count_strip_chains(lambda, mu.parts(), &Partition::empty(), 0, &mut memo)
}

/// Number of semistandard fillings of `lambda / inner` with content `content`.
fn count_strip_chains(
    lambda: &Partition,
    content: &[usize],
    inner: &Partition,
    step: usize,
    memo: &mut HashMap<(Partition, usize), u64>,
) -> Result<u64> {
    if step == content.len() {
        return Ok(u64::from(inner == lambda));
    }
    if let Some(&v) = memo.get(&(inner.clone(), step)) {
        return Ok(v);
    }
    let mut total = 0u64;
    for next in horizontal_strips(inner, lambda, content[step]) {
        let sub = count_strip_chains(lambda, content, &next, step + 1, memo)?;
        total = total
            .checked_add(sub)
            .ok_or(Error::Overflow("Kostka number"))?;
    }
    memo.insert((inner.clone(), step), total);
    Ok(total)
}

/// Partitions `nu` with `inner ⊆ nu ⊆ outer` and `nu / inner` a horizontal
/// strip of `size` boxes.
pub(crate) fn horizontal_strips(
    inner: &Partition,
    outer: &Partition,
    size: usize,
) -> Vec<Partition> {
    let rows = outer.len();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(rows);
    fn go(
        row: usize,
        left: usize,
        inner: &Partition,
        outer: &Partition,
        current: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if row == outer.len() {
            if left == 0 {
                out.push(Partition::from_unsorted(current.clone()));
            }
            return;
        }
        let base = inner.part(row);
        let mut cap = outer.part(row);
        if row > 0 {
            cap = cap.min(inner.part(row - 1));
        }
        let most = cap.saturating_sub(base).min(left);
        for add in 0..=most {
            current.push(base + add);
            go(row + 1, left - add, inner, outer, current, out);
            current.pop();
        }
    }
    go(0, size, inner, outer, &mut current, &mut out);
    out
}

/// Littlewood–Richardson coefficient `c^λ_{μν}`: the number of semistandard
/// fillings of `λ/μ` with content `ν` whose reverse reading word is a lattice
/// word. Zero when `μ ⊄ λ`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    if mu.weight() + nu.weight() != lambda.weight() {
        return Err(Error::Precondition(format!(
            "|{mu}| + |{nu}| = {} but |{lambda}| = {}",
            mu.weight() + nu.weight(),
            lambda.weight()
        )));
    }
    if !lambda.contains(mu) {
        return Ok(0);
    }
    let mut search = LrSearch::new(lambda, mu, nu);
    search.run(0);
    Ok(search.found)
}

/// Depth-first search over boxes in reverse reading order with incremental
/// lattice pruning.
struct LrSearch<'a> {
    lambda: &'a Partition,
    mu: &'a Partition,
    nu: &'a Partition,
    boxes: Vec<(usize, usize)>,
    grid: Vec<Vec<usize>>,
    counts: Vec<usize>,
    found: u64,
}

impl<'a> LrSearch<'a> {
    fn new(lambda: &'a Partition, mu: &'a Partition, nu: &'a Partition) -> Self {
        let boxes = (0..lambda.len())
            .flat_map(|r| (mu.part(r)..lambda.part(r)).rev().map(move |c| (r, c)))
            .collect();
        let grid = lambda.parts().iter().map(|&p| vec![0; p]).collect();
        LrSearch {
            lambda,
            mu,
            nu,
            boxes,
            grid,
            counts: vec![0; nu.len() + 1],
            found: 0,
        }
    }

    fn run(&mut self, idx: usize) {
        if idx == self.boxes.len() {
            self.found += 1;
            return;
        }
        let (r, c) = self.boxes[idx];
        let hi = if c + 1 < self.lambda.part(r) {
            self.grid[r][c + 1]
        } else {
            self.nu.len()
        };
        let lo = if r > 0 && c >= self.mu.part(r - 1) {
            self.grid[r - 1][c] + 1
        } else {
            1
        };
        for v in lo..=hi {
            if self.counts[v] >= self.nu.part(v - 1) {
                continue;
            }
            if v > 1 && self.counts[v] >= self.counts[v - 1] {
                continue;
            }
            self.counts[v] += 1;
            self.grid[r][c] = v;
            self.run(idx + 1);
            self.counts[v] -= 1;
        }
        self.grid[r][c] = 0;
    }
}

/// `s_μ s_ν = Σ_λ c^λ_{μν} s_λ`, as a map over the nonzero coefficients.
pub fn lr_product(mu: &Partition, nu: &Partition) -> Result<BTreeMap<Partition, u64>> {
    let mut out = BTreeMap::new();
    for lambda in enumerate_partitions(mu.weight() + nu.weight()) {
        if !lambda.contains(mu) || !lambda.contains(nu) {
            continue;
        }
        let c = lr_coefficient(&lambda, mu, nu)?;
        if c > 0 {
            out.insert(lambda, c);
        }
    }
    Ok(out)
}

/// Multiplicities of the irreducibles in the permutation character `σ_μ`:
/// `χ_λ` occurs `K_{λμ}` times.
pub fn young_rule(mu: &Partition) -> Result<BTreeMap<Partition, u64>> {
    let mut out = BTreeMap::new();
    for lambda in enumerate_partitions(mu.weight()) {
        let k = kostka(&lambda, mu)?;
        if k > 0 {
            out.insert(lambda, k);
        }
    }
    Ok(out)
}
