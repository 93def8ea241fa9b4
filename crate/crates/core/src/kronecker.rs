//! Kronecker coefficients `g_{μνλ} = ⟨χ_μ χ_ν, χ_λ⟩`, computed from character
//! tables and by closed forms, together with products of permutation
//! characters via contingency matrices.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_traits::ToPrimitive;

use crate::characters::{character_table, CharacterTable};
use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, Partition};
use crate::tableaux::lr_coefficient;

/// A triple of partitions of `n` with its Kronecker coefficient.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct KroneckerTriple {
    pub mu: Partition,
    pub nu: Partition,
    pub lambda: Partition,
    pub g: u64,
}

impl KroneckerTriple {
    pub fn compute(mu: &Partition, nu: &Partition, lambda: &Partition) -> Result<Self> {
        let g = kron_coeff(mu, nu, lambda)?;
        Ok(KroneckerTriple {
            mu: mu.clone(),
            nu: nu.clone(),
            lambda: lambda.clone(),
            g,
        })
    }

    /// All six orderings of the three partitions, each carrying the same `g`.
    pub fn permutations(&self) -> [(Partition, Partition, Partition); 6] {
        let (a, b, c) = (&self.mu, &self.nu, &self.lambda);
        [
            (a.clone(), b.clone(), c.clone()),
            (a.clone(), c.clone(), b.clone()),
            (b.clone(), a.clone(), c.clone()),
            (b.clone(), c.clone(), a.clone()),
            (c.clone(), a.clone(), b.clone()),
            (c.clone(), b.clone(), a.clone()),
        ]
    }
}

/// `size_c · χ_i(c) · χ_j(c)` for every class `c`.
pub(crate) fn weighted_product(table: &CharacterTable, i: usize, j: usize) -> Vec<i128> {
    table
        .classes()
        .iter()
        .zip(table.row(i).iter().zip(table.row(j)))
        .map(|(class, (&a, &b))| {
            class.class_size.to_i128().expect("class size fits i128")
                * i128::from(a)
                * i128::from(b)
        })
        .collect()
}

/// Multiplicity of every irreducible (by row index) in `χ_i χ_j`.
pub(crate) fn product_row(table: &CharacterTable, i: usize, j: usize) -> Vec<u64> {
    let weighted = weighted_product(table, i, j);
    let order = table.order().to_i128().expect("n! fits i128");
    (0..table.size())
        .map(|l| {
            let sum: i128 = weighted
                .iter()
                .zip(table.row(l))
                .map(|(w, &x)| w * i128::from(x))
                .sum();
            debug_assert!(
                sum >= 0 && sum % order == 0,
                "Kronecker sum not a multiple of n!"
            );
            (sum / order) as u64
        })
        .collect()
}

fn same_weight(a: &Partition, b: &Partition) -> Result<()> {
    if a.weight() != b.weight() {
        return Err(Error::weights(a, b));
    }
    Ok(())
}

/// `g_{μνλ}` from the character table of `S_n`.
pub fn kron_coeff(mu: &Partition, nu: &Partition, lambda: &Partition) -> Result<u64> {
    same_weight(mu, nu)?;
    same_weight(mu, lambda)?;
    let table = character_table(mu.weight())?;
    let (i, j, l) = (
        table.position(mu)?,
        table.position(nu)?,
        table.position(lambda)?,
    );
    let weighted = weighted_product(&table, i, j);
    let sum: i128 = weighted
        .iter()
        .zip(table.row(l))
        .map(|(w, &x)| w * i128::from(x))
        .sum();
    let order = table
        .order()
        .to_i128()
        .ok_or(Error::Overflow("group order"))?;
    if sum % order != 0 || sum < 0 {
        return Err(Error::NonIntegral {
            label: lambda.to_string(),
            value: format!("{sum}/{order}"),
        });
    }
    Ok((sum / order) as u64)
}

/// The decomposition of `χ_μ χ_ν`, omitting zero multiplicities.
pub fn kron_decompose(mu: &Partition, nu: &Partition) -> Result<BTreeMap<Partition, u64>> {
    same_weight(mu, nu)?;
    let table = character_table(mu.weight())?;
    let row = product_row(&table, table.position(mu)?, table.position(nu)?);
    Ok(table
        .partitions()
        .iter()
        .cloned()
        .zip(row)
        .filter(|(_, m)| *m > 0)
        .collect())
}

fn indicator(p: bool) -> u64 {
    u64::from(p)
}

/// `g_{μ(e) μ(f) λ}` for hooks `μ(e) = (n-e, 1^e)`, `μ(f) = (n-f, 1^f)` with
/// `1 ≤ e ≤ f` and `e + f ≤ n - 1`, by the closed form for two hooks.
pub fn hook_hook_kron(e: usize, f: usize, lambda: &Partition) -> Result<u64> {
    let n = lambda.weight();
    if e < 1 || e > f || e + f > n.saturating_sub(1) {
        return Err(Error::Precondition(format!(
            "hook_hook_kron needs 1 <= e <= f and e + f <= n - 1, got e = {e}, f = {f}, n = {n}"
        )));
    }
    if lambda.durfee_rank() > 2 {
        return Ok(0);
    }
    if *lambda == Partition::row(n) {
        return Ok(indicator(e == f));
    }
    if *lambda == Partition::column(n) {
        return Ok(indicator(f == n - 1 - e));
    }
    if lambda.is_hook() {
        // The upper end is e + f: at r = e + f + 1 the coefficient vanishes.
        let r = lambda.len() - 1;
        return Ok(indicator(f - e <= r && r <= e + f));
    }
    let (n4, n3) = (lambda.part(0), lambda.part(1));
    let d2 = lambda.parts()[2..].iter().filter(|&&p| p == 2).count();
    let d1 = lambda.multiplicity(1);
    let x = 2 * d2 + d1;
    // Both halves are compared as rationals: with t = e + f - x (possibly
    // negative), n3 - 1 <= t/2 <= n4 iff 2(n3 - 1) <= t <= 2 n4.
    let t = (e + f) as i64 - x as i64;
    let (n3, n4, d1) = (n3 as i64, n4 as i64, d1 as i64);
    let gap = (f - e) as i64;
    let first = indicator(2 * (n3 - 1) <= t && t <= 2 * n4) * indicator(gap <= d1);
    let second = indicator(2 * n3 <= t + 1 && t < 2 * n4) * indicator(gap <= d1 + 1);
    Ok(first + second)
}

/// `g_{μ(e) μ(f) λ}` for any `0 ≤ e, f ≤ n - 1`, reduced to
/// [`hook_hook_kron`] by symmetry and the sign twist
/// `χ_{μ(f)} = sign · χ_{μ(n-1-f)}`.
pub fn hook_kron(e: usize, f: usize, lambda: &Partition) -> Result<u64> {
    let n = lambda.weight();
    if n == 0 || e >= n || f >= n {
        return Err(Error::OutOfRange {
            what: "hook index",
            detail: format!("e = {e}, f = {f} for n = {n}"),
        });
    }
    let (e, f) = (e.min(f), e.max(f));
    if e == 0 {
        return Ok(indicator(*lambda == Partition::hook(n, f)?));
    }
    if f == n - 1 {
        return Ok(indicator(*lambda == Partition::hook(n, n - 1 - e)?));
    }
    if e + f < n {
        return hook_hook_kron(e, f, lambda);
    }
    // Twist the larger hook: e + (n-1-f) <= n-1 holds now.
    let g = n - 1 - f;
    hook_hook_kron(e.min(g), e.max(g), &lambda.conjugate())
}

/// Calls `visit` on every non-negative integer matrix with the given row and
/// column sums, as a row-major list of rows.
pub fn for_each_contingency_matrix(
    rows: &[usize],
    cols: &[usize],
    mut visit: impl FnMut(&[Vec<usize>]),
) {
    if rows.iter().sum::<usize>() != cols.iter().sum::<usize>() {
        return;
    }
    let mut matrix = vec![vec![0; cols.len()]; rows.len()];
    let mut remaining = cols.to_vec();
    fill_row(
        rows,
        0,
        0,
        rows.first().copied().unwrap_or(0),
        &mut remaining,
        &mut matrix,
        &mut visit,
    );
}

fn fill_row(
    rows: &[usize],
    r: usize,
    c: usize,
    left: usize,
    remaining: &mut [usize],
    matrix: &mut [Vec<usize>],
    visit: &mut impl FnMut(&[Vec<usize>]),
) {
    if r == rows.len() {
        if remaining.iter().all(|&x| x == 0) {
            visit(matrix);
        }
        return;
    }
    let ncols = remaining.len();
    if c + 1 == ncols || ncols == 0 {
        if ncols == 0 {
            if left == 0 {
                fill_row(
                    rows,
                    r + 1,
                    0,
                    rows.get(r + 1).copied().unwrap_or(0),
                    remaining,
                    matrix,
                    visit,
                );
            }
            return;
        }
        if left > remaining[c] {
            return;
        }
        matrix[r][c] = left;
        remaining[c] -= left;
        // Later rows must be able to absorb what is left in the columns.
        let rest_rows: usize = rows[r + 1..].iter().sum();
        if remaining.iter().sum::<usize>() == rest_rows {
            fill_row(
                rows,
                r + 1,
                0,
                rows.get(r + 1).copied().unwrap_or(0),
                remaining,
                matrix,
                visit,
            );
        }
        remaining[c] += left;
        matrix[r][c] = 0;
        return;
    }
    let capacity_after: usize = remaining[c + 1..].iter().sum();
    let low = left.saturating_sub(capacity_after);
    for v in low..=left.min(remaining[c]) {
        matrix[r][c] = v;
        remaining[c] -= v;
        fill_row(rows, r, c + 1, left - v, remaining, matrix, visit);
        remaining[c] += v;
    }
    matrix[r][c] = 0;
}

/// The partition formed by the non-zero entries of a matrix.
pub fn collapse(matrix: &[Vec<usize>]) -> Partition {
    Partition::from_unsorted(
        matrix
            .iter()
            .flatten()
            .copied()
            .filter(|&x| x > 0)
            .collect(),
    )
}

/// `σ_λ σ_μ = Σ_A σ_{collapse(A)}`, summed over all `λ × μ` matrices `A`;
/// returns how many matrices collapse to each partition.
pub fn h_product_matrices(lambda: &Partition, mu: &Partition) -> Result<BTreeMap<Partition, u64>> {
    same_weight(lambda, mu)?;
    let mut out = BTreeMap::new();
    for_each_contingency_matrix(lambda.parts(), mu.parts(), |a| {
        *out.entry(collapse(a)).or_insert(0) += 1
    });
    Ok(out)
}

/// The distinct partitions `collapse(A)` over all `μ × λ` matrices `A`.
///
/// Rows are processed one at a time; columns with equal remaining sums are
/// interchangeable, so states are kept as sorted multisets and deduplicated.
pub fn collapse_targets(mu: &Partition, lambda: &Partition) -> Result<BTreeSet<Partition>> {
    same_weight(mu, lambda)?;
    type State = (Vec<usize>, Vec<usize>);
    let mut states: HashSet<State> = HashSet::from([(lambda.parts().to_vec(), Vec::new())]);
    for &a in mu.parts() {
        let mut next = HashSet::new();
        for (cols, entries) in &states {
            let mut row = vec![0; cols.len()];
            split_row(a, 0, cols, &mut row, &mut |row| {
                let mut c: Vec<usize> = cols
                    .iter()
                    .zip(row)
                    .map(|(x, y)| x - y)
                    .filter(|&x| x > 0)
                    .collect();
                c.sort_unstable_by(|x, y| y.cmp(x));
                let mut e = entries.clone();
                e.extend(row.iter().copied().filter(|&x| x > 0));
                e.sort_unstable_by(|x, y| y.cmp(x));
                next.insert((c, e));
            });
        }
        states = next;
    }
    Ok(states
        .into_iter()
        .map(|(_, e)| Partition::from_unsorted(e))
        .collect())
}

fn split_row(
    left: usize,
    c: usize,
    cols: &[usize],
    row: &mut [usize],
    emit: &mut impl FnMut(&[usize]),
) {
    if c == cols.len() {
        if left == 0 {
            emit(row);
        }
        return;
    }
    // Equal columns are interchangeable: force entries to weakly decrease
    // across a run of equal remaining sums.
    let cap = if c > 0 && cols[c] == cols[c - 1] {
        row[c - 1]
    } else {
        cols[c]
    };
    let rest: usize = cols[c + 1..].iter().sum();
    let low = left.saturating_sub(rest);
    for v in (low..=left.min(cap)).rev() {
        row[c] = v;
        split_row(left - v, c + 1, cols, row, emit);
    }
    row[c] = 0;
}

/// `Σ_{α ⊢ d, β ⊢ n-d} c^λ_{αβ} c^ν_{α'β}`, which equals
/// `g_{λ μ(d) ν} + g_{λ μ(d-1) ν}`.
pub fn hook_lr_sum(lambda: &Partition, nu: &Partition, d: usize) -> Result<u64> {
    same_weight(lambda, nu)?;
    let n = lambda.weight();
    if d < 1 || d + 1 > n {
        return Err(Error::OutOfRange {
            what: "d",
            detail: format!("need 1 <= d <= {}, got {d}", n.saturating_sub(1)),
        });
    }
    let betas = enumerate_partitions(n - d);
    let mut total = 0u64;
    for alpha in enumerate_partitions(d) {
        if !lambda.contains(&alpha) {
            continue;
        }
        let alpha_conj = alpha.conjugate();
        if !nu.contains(&alpha_conj) {
            continue;
        }
        for beta in &betas {
            let a = lr_coefficient(lambda, &alpha, beta)?;
            if a == 0 {
                continue;
            }
            total += a * lr_coefficient(nu, &alpha_conj, beta)?;
        }
    }
    Ok(total)
}

fn at_least(lambda: &Partition, n: usize) -> Result<()> {
    if lambda.weight() < n {
        return Err(Error::OutOfRange {
            what: "n",
            detail: format!("{lambda} has weight below {n}"),
        });
    }
    Ok(())
}

/// Multiplicities of `χ_{(n)}, χ_{(n-1,1)}, χ_{(n-2,2)}, χ_{(n-2,1,1)}` in
/// `χ_λ²`, from the descent statistics of `λ`.
pub fn low_square_multiplicities(lambda: &Partition) -> Result<[i64; 4]> {
    at_least(lambda, 4)?;
    let conj = lambda.conjugate();
    let d1 = lambda.d_stat(1) as i64;
    let d2 = lambda.d_stat(2) as i64;
    let d2c = conj.d_stat(2) as i64;
    Ok([1, d1 - 1, d1 * (d1 - 2) + d2 + d2c, (d1 - 1) * (d1 - 1)])
}

/// Multiplicities of `χ_{(n-3,3)}, χ_{(n-3,2,1)}, χ_{(n-3,1,1,1)}` in `χ_λ²`.
pub fn n3_multiplicities(lambda: &Partition) -> Result<[i64; 3]> {
    at_least(lambda, 6)?;
    let conj = lambda.conjugate();
    let d = |p: &Partition, t| p.d_stat(t) as i64;
    let (d1, d2, d3) = (d(lambda, 1), d(lambda, 2), d(lambda, 3));
    let (d1c, d2c, d3c) = (d(&conj, 1), d(&conj, 2), d(&conj, 3));
    let (k, l) = lambda.kl_stats();
    let kl = (k + l) as i64;
    Ok([
        d3 + d3c + d2 * (2 * d1 - 3) + d2c * (2 * d1c - 3) + d1 * (d1 - 1) * (d1 - 3) + kl,
        d2 * (3 * d1 - 4) + d2c * (3 * d1c - 4) + d1 * (2 * d1 * d1 - 8 * d1 + 7) + kl,
        d2 * (d1 - 1) + d2c * (d1c - 1) + (d1 - 1) * (d1 * d1 - 3 * d1 + 1) + kl,
    ])
}

/// `⟨χ_λ², χ_target⟩` from the table.
pub fn square_multiplicity(lambda: &Partition, target: &Partition) -> Result<u64> {
    kron_coeff(lambda, lambda, target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::{decompose, sigma, ClassFunction};
    use num_bigint::BigInt;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn basic_coefficients() {
        assert_eq!(
            kron_coeff(&p("3,1,1"), &p("3,1,1"), &p("3,1,1")).unwrap(),
            1
        );
        for n in 1..=7 {
            let ps = enumerate_partitions(n);
            for nu in &ps {
                for lambda in &ps {
                    assert_eq!(
                        kron_coeff(&Partition::row(n), nu, lambda).unwrap(),
                        u64::from(nu == lambda)
                    );
                }
                let d = kron_decompose(&Partition::column(n), nu).unwrap();
                assert_eq!(d.into_iter().collect::<Vec<_>>(), vec![(nu.conjugate(), 1)]);
            }
        }
        let sq = kron_decompose(&p("3,2"), &p("3,2")).unwrap();
        let want: BTreeMap<Partition, u64> = enumerate_partitions(5)
            .into_iter()
            .filter(|m| m.len() <= 4)
            .map(|m| (m, 1))
            .collect();
        assert_eq!(sq, want);
        assert!(kron_coeff(&p("3"), &p("2,1"), &p("4")).is_err());
    }

    #[test]
    fn standard_times_anything() {
        let n = 7;
        let std = Partition::hook(n, 1).unwrap();
        for lambda in enumerate_partitions(n) {
            // Remove a box and add one back, counted with multiplicity.
            let mut want: BTreeMap<Partition, i64> = BTreeMap::new();
            for smaller in lambda.box_neighbors().minus {
                for mu in smaller.box_neighbors().plus {
                    *want.entry(mu).or_default() += 1;
                }
            }
            *want.entry(lambda.clone()).or_default() -= 1;
            want.retain(|_, m| *m != 0);
            let got: BTreeMap<Partition, i64> = kron_decompose(&lambda, &std)
                .unwrap()
                .into_iter()
                .map(|(k, v)| (k, v as i64))
                .collect();
            assert_eq!(got, want, "{lambda}");
        }
    }

    #[test]
    fn symmetric_in_all_arguments() {
        for n in 1..=8 {
            let ps = enumerate_partitions(n);
            for (a, mu) in ps.iter().enumerate() {
                for nu in &ps[a..] {
                    for lambda in &ps {
                        let t = KroneckerTriple::compute(mu, nu, lambda).unwrap();
                        for (x, y, z) in t.permutations() {
                            assert_eq!(kron_coeff(&x, &y, &z).unwrap(), t.g);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn two_hook_formula_matches_tables() {
        for n in 3..=10 {
            for lambda in enumerate_partitions(n) {
                for e in 1..n {
                    for f in e..n {
                        if e + f > n - 1 {
                            continue;
                        }
                        let (mu, nu) = (
                            Partition::hook(n, e).unwrap(),
                            Partition::hook(n, f).unwrap(),
                        );
                        assert_eq!(
                            hook_hook_kron(e, f, &lambda).unwrap(),
                            kron_coeff(&mu, &nu, &lambda).unwrap(),
                            "e = {e}, f = {f}, lambda = {lambda}"
                        );
                    }
                }
                for e in 0..n {
                    for f in 0..n {
                        let (mu, nu) = (
                            Partition::hook(n, e).unwrap(),
                            Partition::hook(n, f).unwrap(),
                        );
                        assert_eq!(
                            hook_kron(e, f, &lambda).unwrap(),
                            kron_coeff(&mu, &nu, &lambda).unwrap()
                        );
                    }
                }
            }
        }
        assert!(hook_hook_kron(2, 1, &p("3,2")).is_err());
        assert!(hook_hook_kron(2, 3, &p("3,2")).is_err());
    }

    #[test]
    fn contingency_products() {
        let n = 6;
        let s = h_product_matrices(
            &Partition::hook(n, 1).unwrap(),
            &Partition::hook(n, 1).unwrap(),
        )
        .unwrap();
        let want = BTreeMap::from([(p("5,1"), 1), (p("4,1,1"), 1)]);
        assert_eq!(s, want);
        assert_eq!(
            h_product_matrices(&p("6"), &p("6")).unwrap(),
            BTreeMap::from([(p("6"), 1)])
        );

        for n in 1..=7 {
            let ps = enumerate_partitions(n);
            for lambda in &ps {
                for mu in &ps {
                    let mut sum = ClassFunction::constant(n, 0);
                    for (nu, m) in h_product_matrices(lambda, mu).unwrap() {
                        sum = sum
                            .add(&sigma(&nu).unwrap().scale(&BigInt::from(m)))
                            .unwrap();
                    }
                    assert_eq!(
                        sum,
                        sigma(lambda).unwrap().mul(&sigma(mu).unwrap()).unwrap()
                    );
                    let targets: BTreeSet<Partition> = h_product_matrices(lambda, mu)
                        .unwrap()
                        .into_keys()
                        .collect();
                    assert_eq!(collapse_targets(lambda, mu).unwrap(), targets);
                }
            }
        }
    }

    #[test]
    fn matrix_enumeration_counts() {
        // 2 x 2 matrices with margins (a, b), (c, d) number min(a, b, c, d) + 1.
        let mut count = 0;
        for_each_contingency_matrix(&[3, 2], &[4, 1], |_| count += 1);
        assert_eq!(count, 2);
        // Permutation matrices: margins all ones.
        let mut count = 0;
        for_each_contingency_matrix(&[1; 5], &[1; 5], |_| count += 1);
        assert_eq!(count, 120);
        let mut count = 0;
        for_each_contingency_matrix(&[2], &[1], |_| count += 1);
        assert_eq!(count, 0);
    }

    #[test]
    fn hook_lr_sum_identity() {
        assert_eq!(hook_lr_sum(&p("5"), &p("5"), 1).unwrap(), 1);
        assert_eq!(hook_lr_sum(&p("3,2"), &p("3,1,1"), 2).unwrap(), 3);
        for n in 2..=8 {
            let ps = enumerate_partitions(n);
            for lambda in &ps {
                for nu in &ps {
                    for d in 1..n {
                        let lhs = kron_coeff(lambda, &Partition::hook(n, d).unwrap(), nu).unwrap()
                            + kron_coeff(lambda, &Partition::hook(n, d - 1).unwrap(), nu).unwrap();
                        assert_eq!(
                            hook_lr_sum(lambda, nu, d).unwrap(),
                            lhs,
                            "{lambda} {nu} {d}"
                        );
                    }
                }
            }
        }
        assert!(hook_lr_sum(&p("3"), &p("3"), 3).is_err());
    }

    #[test]
    fn multiplicity_formulas_match_tables() {
        assert_eq!(low_square_multiplicities(&p("3,2")).unwrap(), [1, 1, 1, 1]);
        for (r, s) in [(3, 3), (3, 4), (4, 3), (5, 3)] {
            assert_eq!(
                n3_multiplicities(&Partition::rectangle(r, s)).unwrap(),
                [1, 0, 1]
            );
        }
        assert!(n3_multiplicities(&p("3,2,1")).unwrap()[0] > 0);
        assert!(low_square_multiplicities(&p("2,1")).is_err());
        assert!(n3_multiplicities(&p("3,2")).is_err());

        for n in 6..=10 {
            let targets4 = ["", "1", "2", "1,1"].map(|t| {
                let rest: Partition = if t.is_empty() {
                    Partition::empty()
                } else {
                    p(t)
                };
                let mut parts = vec![n - rest.weight()];
                parts.extend(rest.parts());
                Partition::new(parts).unwrap()
            });
            let targets3 = ["3", "2,1", "1,1,1"].map(|t| {
                let mut parts = vec![n - 3];
                parts.extend(p(t).parts());
                Partition::new(parts).unwrap()
            });
            for lambda in enumerate_partitions(n) {
                let z = low_square_multiplicities(&lambda).unwrap();
                for (m, t) in z.iter().zip(&targets4) {
                    assert_eq!(
                        *m,
                        square_multiplicity(&lambda, t).unwrap() as i64,
                        "{lambda} vs {t}"
                    );
                }
                let a = n3_multiplicities(&lambda).unwrap();
                for (m, t) in a.iter().zip(&targets3) {
                    assert_eq!(
                        *m,
                        square_multiplicity(&lambda, t).unwrap() as i64,
                        "{lambda} vs {t}"
                    );
                }
            }
        }
    }

    #[test]
    fn products_decompose_like_tables() {
        let lambda = p("3,2,1");
        let chi = character_table(6).unwrap().character(&lambda).unwrap();
        let d = decompose(&chi.mul(&chi).unwrap()).unwrap();
        let k = kron_decompose(&lambda, &lambda).unwrap();
        assert_eq!(d.len(), k.len());
        for (mu, m) in k {
            assert_eq!(d[&mu], BigInt::from(m));
        }
    }
}
