//! Character tables of `S_n` by the Murnaghan–Nakayama rule, and the algebra
//! of integer-valued class functions.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partitions::{factorial, partition_index, CycleClassData, Partition, PartitionIndex};
use crate::tableaux::{kostka, lr_coefficient, young_rule};

/// Largest `n` for which [`character_table`] builds a table unless the limit
/// is raised with [`set_table_limit`].
pub const DEFAULT_TABLE_LIMIT: usize = 14;

static TABLE_LIMIT: AtomicUsize = AtomicUsize::new(DEFAULT_TABLE_LIMIT);

pub fn set_table_limit(limit: usize) {
    TABLE_LIMIT.store(limit, Ordering::Relaxed);
}

pub fn table_limit() -> usize {
    TABLE_LIMIT.load(Ordering::Relaxed)
}

/// Number of standard Young tableaux of shape `lambda`, `n! / Π hooks`.
pub fn hook_length_degree(lambda: &Partition) -> BigUint {
    let conj = lambda.conjugate();
    let mut hooks = BigUint::one();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            hooks *= BigUint::from(row - j + conj.part(j) - i - 1);
        }
    }
    factorial(lambda.weight()) / hooks
}

type MnMemo = HashMap<(Vec<usize>, Vec<usize>), i64>;

thread_local! {
    static MN_MEMO: RefCell<MnMemo> = RefCell::new(HashMap::new());
}

/// `χ_λ(w_μ)`: strip border strips of length `μ_1, μ_2, …` and sum the signs
/// `(-1)^{height}`. Memoized per thread.
pub fn mn_value(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.weight() != mu.weight() {
        return Err(Error::weights(lambda, mu));
    }
    Ok(MN_MEMO.with(|memo| mn_rec(lambda.parts(), mu.parts(), &mut memo.borrow_mut())))
}

/// Like [`mn_value`] but removes strips in the given order of cycle lengths,
/// which need not be sorted.
pub fn mn_value_ordered(lambda: &Partition, cycles: &[usize]) -> Result<i64> {
    if lambda.weight() != cycles.iter().sum::<usize>() || cycles.contains(&0) {
        return Err(Error::Precondition(format!(
            "cycle lengths {cycles:?} do not fit {lambda}"
        )));
    }
    Ok(MN_MEMO.with(|memo| mn_rec(lambda.parts(), cycles, &mut memo.borrow_mut())))
}

fn mn_rec(lambda: &[usize], mu: &[usize], memo: &mut MnMemo) -> i64 {
    let Some((&r, rest)) = mu.split_first() else {
        return i64::from(lambda.is_empty());
    };
    if lambda.len() <= 1 || rest.is_empty() {
        // One row: every strip is horizontal. One cycle: a single hook.
        if lambda.len() <= 1 {
            return 1;
        }
        return single_hook_value(lambda);
    }
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let l = lambda.len();
    let beta: Vec<usize> = lambda
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (l - 1 - i))
        .collect();
    let mut total = 0i64;
    for i in 0..l {
        let b = beta[i];
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let crossed = beta.iter().filter(|&&x| x > b - r && x < b).count();
        let mut next = beta.clone();
        next[i] = b - r;
        next.sort_unstable_by(|x, y| y.cmp(x));
        let shape: Vec<usize> = next
            .iter()
            .enumerate()
            .map(|(j, &x)| x - (l - 1 - j))
            .filter(|&p| p > 0)
            .collect();
        let v = mn_rec(&shape, rest, memo);
        total += if crossed % 2 == 0 { v } else { -v };
    }
    memo.insert(key, total);
    total
}

/// `χ_λ` on an `n`-cycle: `(-1)^r` for the hook `(n-r, 1^r)`, else 0.
fn single_hook_value(lambda: &[usize]) -> i64 {
    if lambda[1..].iter().all(|&p| p == 1) {
        if (lambda.len() - 1).is_multiple_of(2) {
            1
        } else {
            -1
        }
    } else {
        0
    }
}

/// The character table of `S_n`. Rows are irreducibles and columns are
/// classes, both in canonical partition order.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    n: usize,
    index: Arc<PartitionIndex>,
    classes: Vec<CycleClassData>,
    values: Vec<i64>,
}

impl CharacterTable {
    /// Computes the table from scratch, in parallel over rows.
    pub fn build(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::OutOfRange {
                what: "n",
                detail: "character tables need n >= 1".into(),
            });
        }
        let index = partition_index(n);
        let parts = index.partitions();
        let rows: Vec<Vec<i64>> = parts
            .par_iter()
            .map(|lambda| {
                parts
                    .iter()
                    .map(|mu| mn_value(lambda, mu).unwrap())
                    .collect()
            })
            .collect();
        let values = rows.into_iter().flatten().collect();
        Self::from_parts(n, values)
    }

    /// Assembles a table from row-major values without checking them; see
    /// [`CharacterTable::check_orthogonality`].
    pub fn from_parts(n: usize, values: Vec<i64>) -> Result<Self> {
        let index = partition_index(n);
        let p = index.len();
        if values.len() != p * p {
            return Err(Error::Cache(format!(
                "expected {} entries for n = {n}, found {}",
                p * p,
                values.len()
            )));
        }
        let classes = index
            .partitions()
            .iter()
            .map(|mu| mu.cycle_class_data())
            .collect();
        Ok(CharacterTable {
            n,
            index,
            classes,
            values,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of rows (and columns).
    pub fn size(&self) -> usize {
        self.index.len()
    }

    pub fn partitions(&self) -> &[Partition] {
        self.index.partitions()
    }

    pub fn index(&self) -> &PartitionIndex {
        &self.index
    }

    pub fn position(&self, p: &Partition) -> Result<usize> {
        self.index.position(p)
    }

    pub fn classes(&self) -> &[CycleClassData] {
        &self.classes
    }

    pub fn value(&self, row: usize, col: usize) -> i64 {
        self.values[row * self.size() + col]
    }

    pub fn row(&self, row: usize) -> &[i64] {
        let p = self.size();
        &self.values[row * p..(row + 1) * p]
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// `χ_λ(w_μ)` looked up by partitions.
    pub fn get(&self, lambda: &Partition, mu: &Partition) -> Result<i64> {
        Ok(self.value(self.position(lambda)?, self.position(mu)?))
    }

    /// The identity class `(1^n)` is the last column.
    pub fn degree(&self, row: usize) -> i64 {
        self.value(row, self.size() - 1)
    }

    pub fn character(&self, lambda: &Partition) -> Result<ClassFunction> {
        Ok(self.row_function(self.position(lambda)?))
    }

    pub fn row_function(&self, row: usize) -> ClassFunction {
        ClassFunction {
            n: self.n,
            values: self.row(row).iter().map(|&v| BigInt::from(v)).collect(),
        }
    }

    pub fn order(&self) -> BigUint {
        factorial(self.n)
    }

    /// Verifies row orthogonality, column orthogonality, that degrees match
    /// the hook length formula, and the sign twist `χ_{λ'} = sign · χ_λ`.
    pub fn check_orthogonality(&self) -> Result<()> {
        let p = self.size();
        let fail = |what: String| {
            Err(Error::Cache(format!(
                "table for n = {} fails {what}",
                self.n
            )))
        };
        let order = self
            .order()
            .to_i128()
            .ok_or(Error::Overflow("group order"))?;
        let sizes: Vec<i128> = self
            .classes
            .iter()
            .map(|c| c.class_size.to_i128().ok_or(Error::Overflow("class size")))
            .collect::<Result<_>>()?;
        for i in 0..p {
            for j in i..p {
                let mut sum = 0i128;
                for (c, &size) in sizes.iter().enumerate() {
                    sum += size * i128::from(self.value(i, c)) * i128::from(self.value(j, c));
                }
                let expect = if i == j { order } else { 0 };
                if sum != expect {
                    return fail(format!(
                        "row orthogonality at ({}, {})",
                        self.partitions()[i],
                        self.partitions()[j]
                    ));
                }
            }
        }
        for c in 0..p {
            for d in c..p {
                let sum: i128 = (0..p)
                    .map(|i| i128::from(self.value(i, c)) * i128::from(self.value(i, d)))
                    .sum();
                let expect = if c == d {
                    self.classes[c].z.to_i128().unwrap_or(-1)
                } else {
                    0
                };
                if sum != expect {
                    return fail(format!(
                        "column orthogonality at ({}, {})",
                        self.partitions()[c],
                        self.partitions()[d]
                    ));
                }
            }
        }
        for (i, lambda) in self.partitions().iter().enumerate() {
            if BigUint::from(self.degree(i).unsigned_abs()) != hook_length_degree(lambda)
                || self.degree(i) < 0
            {
                return fail(format!("the hook length formula at {lambda}"));
            }
            let j = self.position(&lambda.conjugate())?;
            for c in 0..p {
                if self.value(j, c) != i64::from(self.classes[c].sign) * self.value(i, c) {
                    return fail(format!("the sign twist at {lambda}"));
                }
            }
        }
        Ok(())
    }
}

type TableSlot = Arc<OnceLock<Arc<CharacterTable>>>;

fn table_slots() -> &'static Mutex<HashMap<usize, TableSlot>> {
    static SLOTS: OnceLock<Mutex<HashMap<usize, TableSlot>>> = OnceLock::new();
    SLOTS.get_or_init(Default::default)
}

fn slot(n: usize) -> TableSlot {
    Arc::clone(table_slots().lock().unwrap().entry(n).or_default())
}

/// The shared table for `n`, built on first use. Fails for `n = 0` and for
/// `n` above [`table_limit`].
pub fn character_table(n: usize) -> Result<Arc<CharacterTable>> {
    if n == 0 {
        return Err(Error::OutOfRange {
            what: "n",
            detail: "character tables need n >= 1".into(),
        });
    }
    if n > table_limit() {
        return Err(Error::LimitExceeded {
            n,
            limit: table_limit(),
        });
    }
    let slot = slot(n);
    if let Some(t) = slot.get() {
        return Ok(Arc::clone(t));
    }
    let built = Arc::new(CharacterTable::build(n)?);
    Ok(Arc::clone(slot.get_or_init(|| built)))
}

/// Makes `table` the shared table for its `n`, unless one is already present.
pub fn install_table(table: CharacterTable) -> Arc<CharacterTable> {
    let slot = slot(table.n());
    Arc::clone(slot.get_or_init(|| Arc::new(table)))
}

/// Whether the shared table for `n` has been built or installed.
pub fn table_is_loaded(n: usize) -> bool {
    slot(n).get().is_some()
}

/// An integer-valued class function of `S_n`, one value per class in
/// canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    n: usize,
    values: Vec<BigInt>,
}

impl ClassFunction {
    pub fn new(n: usize, values: Vec<BigInt>) -> Result<Self> {
        let p = partition_index(n).len();
        if values.len() != p {
            return Err(Error::Precondition(format!(
                "{} values given, S_{n} has {p} classes",
                values.len()
            )));
        }
        Ok(ClassFunction { n, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    /// Value on the class with cycle type `mu`.
    pub fn at(&self, mu: &Partition) -> Result<&BigInt> {
        Ok(&self.values[partition_index(self.n).position(mu)?])
    }

    pub fn constant(n: usize, c: i64) -> Self {
        let p = partition_index(n).len();
        ClassFunction {
            n,
            values: vec![BigInt::from(c); p],
        }
    }

    fn check(&self, other: &ClassFunction) -> Result<()> {
        if self.n != other.n {
            return Err(Error::GroupMismatch(self.n, other.n));
        }
        Ok(())
    }

    /// Pointwise product, the character of the tensor product.
    pub fn mul(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.check(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a * b)
            .collect();
        Ok(ClassFunction { n: self.n, values })
    }

    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.check(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a + b)
            .collect();
        Ok(ClassFunction { n: self.n, values })
    }

    pub fn sub(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.check(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a - b)
            .collect();
        Ok(ClassFunction { n: self.n, values })
    }

    pub fn scale(&self, c: &BigInt) -> ClassFunction {
        ClassFunction {
            n: self.n,
            values: self.values.iter().map(|v| v * c).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> ClassFunction {
        ClassFunction {
            n: self.n,
            values: self
                .values
                .iter()
                .map(|v| num_traits::pow(v.clone(), k as usize))
                .collect(),
        }
    }
}

/// `⟨f, g⟩ = (1/n!) Σ_μ |C_μ| f(w_μ) g(w_μ)`. Every element of `S_n` is
/// conjugate to its inverse, so no complex conjugation is needed.
pub fn inner_product(f: &ClassFunction, g: &ClassFunction) -> Result<BigRational> {
    f.check(g)?;
    let index = partition_index(f.n);
    let mut sum = BigInt::zero();
    for (mu, (a, b)) in index
        .partitions()
        .iter()
        .zip(f.values.iter().zip(&g.values))
    {
        let size = BigInt::from(mu.cycle_class_data().class_size);
        sum += size * a * b;
    }
    Ok(BigRational::new(sum, BigInt::from(factorial(f.n))))
}

/// Multiplicity of every irreducible in `f`, omitting zeros. Any
/// non-integral multiplicity is an error.
pub fn decompose(f: &ClassFunction) -> Result<BTreeMap<Partition, BigInt>> {
    let table = character_table(f.n)?;
    let order = BigInt::from(table.order());
    let sizes: Vec<BigInt> = table
        .classes()
        .iter()
        .map(|c| BigInt::from(c.class_size.clone()))
        .collect();
    let weighted: Vec<BigInt> = f.values.iter().zip(&sizes).map(|(v, s)| v * s).collect();
    let mut out = BTreeMap::new();
    for (i, lambda) in table.partitions().iter().enumerate() {
        let sum: BigInt = weighted
            .iter()
            .zip(table.row(i))
            .map(|(w, &x)| w * BigInt::from(x))
            .sum();
        let (q, r) = sum.div_rem(&order);
        if !r.is_zero() {
            return Err(Error::NonIntegral {
                label: lambda.to_string(),
                value: BigRational::new(sum, order.clone()).to_string(),
            });
        }
        if !q.is_zero() {
            out.insert(lambda.clone(), q);
        }
    }
    Ok(out)
}

/// Like [`decompose`] but also rejects negative multiplicities.
pub fn decompose_character(f: &ClassFunction) -> Result<BTreeMap<Partition, BigInt>> {
    let parts = decompose(f)?;
    if let Some((lambda, m)) = parts.iter().find(|(_, m)| m.is_negative()) {
        return Err(Error::NonIntegral {
            label: lambda.to_string(),
            value: m.to_string(),
        });
    }
    Ok(parts)
}

/// The permutation character `σ_λ = Σ_μ K_{μλ} χ_μ`.
pub fn sigma(lambda: &Partition) -> Result<ClassFunction> {
    let n = lambda.weight();
    let table = character_table(n)?;
    let mut values = vec![BigInt::zero(); table.size()];
    for (mu, k) in young_rule(lambda)? {
        let row = table.row(table.position(&mu)?);
        for (v, &x) in values.iter_mut().zip(row) {
            *v += BigInt::from(k) * BigInt::from(x);
        }
    }
    Ok(ClassFunction { n, values })
}

/// Restriction of `χ_λ` to the Young subgroup `S_{a_1} × ⋯ × S_{a_k}`,
/// as multiplicities of outer tensor products `χ_{α_1} ⊗ ⋯ ⊗ χ_{α_k}`.
pub fn restrict_to_young(
    lambda: &Partition,
    composition: &[usize],
) -> Result<BTreeMap<Vec<Partition>, u64>> {
    if composition.iter().sum::<usize>() != lambda.weight() {
        return Err(Error::Precondition(format!(
            "composition {composition:?} does not sum to |{lambda}| = {}",
            lambda.weight()
        )));
    }
    restrict_rec(lambda, composition)
}

fn restrict_rec(
    lambda: &Partition,
    composition: &[usize],
) -> Result<BTreeMap<Vec<Partition>, u64>> {
    let mut out = BTreeMap::new();
    let Some((&last, init)) = composition.split_last() else {
        out.insert(Vec::new(), 1);
        return Ok(out);
    };
    if init.is_empty() {
        out.insert(vec![lambda.clone()], 1);
        return Ok(out);
    }
    let head = lambda.weight() - last;
    for gamma in crate::partitions::enumerate_partitions(head) {
        if !lambda.contains(&gamma) {
            continue;
        }
        let mut inner: Option<BTreeMap<Vec<Partition>, u64>> = None;
        for alpha in crate::partitions::enumerate_partitions(last) {
            let c = lr_coefficient(lambda, &gamma, &alpha)?;
            if c == 0 {
                continue;
            }
            let sub = match &inner {
                Some(s) => s,
                None => inner.insert(restrict_rec(&gamma, init)?),
            };
            for (tuple, m) in sub {
                let mut key = tuple.clone();
                key.push(alpha.clone());
                *out.entry(key).or_insert(0) += m * c;
            }
        }
    }
    Ok(out)
}

/// Kostka matrix row `K_{λ, ·}` is exposed for callers that need Young's rule
/// without a table.
pub fn kostka_row(lambda: &Partition) -> Result<Vec<(Partition, u64)>> {
    let mut out = Vec::new();
    for mu in crate::partitions::enumerate_partitions(lambda.weight()) {
        let k = kostka(lambda, &mu)?;
        if k > 0 {
            out.push((mu, k));
        }
    }
    Ok(out)
}
