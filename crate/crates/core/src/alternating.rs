//! Characters of the alternating group `A_n`, obtained by restricting those
//! of `S_n` and splitting the self-conjugate ones.
//!
//! A class of `S_n` whose cycle type `θ` has distinct odd parts splits into
//! two `A_n` classes `C_θ^+`, `C_θ^-`. For `λ = λ'` with `θ` the unfolding of
//! `λ`, the two constituents of `χ_λ↓` take the values
//! `(ε ± √(ε z_θ)) / 2` on `C_θ^+`, swapped on `C_θ^-`, and `χ_λ / 2`
//! elsewhere. Values are kept exactly as `a + b√D`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::characters::character_table;
use crate::covering::{Covering, CoveringRun};
use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, factorial, Partition};

/// Largest `n` for which [`an_character_table`] builds a table unless the
/// limit is raised with [`set_alt_table_limit`].
pub const DEFAULT_ALT_TABLE_LIMIT: usize = 12;

static ALT_LIMIT: AtomicUsize = AtomicUsize::new(DEFAULT_ALT_TABLE_LIMIT);

pub fn set_alt_table_limit(limit: usize) {
    ALT_LIMIT.store(limit, Ordering::Relaxed);
}

pub fn alt_table_limit() -> usize {
    ALT_LIMIT.load(Ordering::Relaxed)
}

/// Which half of a split class or split character.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    pub fn other(self) -> Branch {
        match self {
            Branch::Plus => Branch::Minus,
            Branch::Minus => Branch::Plus,
        }
    }

    fn sign(self) -> i64 {
        match self {
            Branch::Plus => 1,
            Branch::Minus => -1,
        }
    }

    fn symbol(self) -> char {
        match self {
            Branch::Plus => '+',
            Branch::Minus => '-',
        }
    }
}

/// A conjugacy class of `A_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AltClass {
    pub mu: Partition,
    pub split: Option<Branch>,
    #[serde(serialize_with = "decimal")]
    pub size: BigUint,
}

fn decimal<S: Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

impl fmt::Display for AltClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.mu)?;
        if let Some(b) = self.split {
            write!(f, "{}", b.symbol())?;
        }
        Ok(())
    }
}

/// An irreducible character of `A_n`: the common restriction of `χ_λ` and
/// `χ_{λ'}` for `λ ≠ λ'`, or one of the two halves of `χ_λ↓` for `λ = λ'`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AltIrrLabel {
    /// Stored under whichever of `λ`, `λ'` comes first in canonical order.
    Pair(Partition),
    Split(Partition, Branch),
}

impl AltIrrLabel {
    /// The label of `χ_λ↓` for `λ ≠ λ'`.
    pub fn pair(lambda: &Partition) -> Result<Self> {
        let conj = lambda.conjugate();
        if conj == *lambda {
            return Err(Error::Precondition(format!(
                "{lambda} is self-conjugate, so its restriction splits"
            )));
        }
        Ok(AltIrrLabel::Pair(if conj < *lambda {
            conj
        } else {
            lambda.clone()
        }))
    }

    pub fn split(lambda: &Partition, branch: Branch) -> Result<Self> {
        if !lambda.is_self_conjugate() {
            return Err(Error::Precondition(format!(
                "{lambda} is not self-conjugate"
            )));
        }
        Ok(AltIrrLabel::Split(lambda.clone(), branch))
    }

    /// The irreducible constituents of `χ_λ↓`.
    pub fn restriction(lambda: &Partition) -> Vec<AltIrrLabel> {
        if lambda.is_self_conjugate() {
            vec![
                AltIrrLabel::Split(lambda.clone(), Branch::Plus),
                AltIrrLabel::Split(lambda.clone(), Branch::Minus),
            ]
        } else {
            vec![AltIrrLabel::pair(lambda).expect("not self-conjugate")]
        }
    }

    pub fn partition(&self) -> &Partition {
        match self {
            AltIrrLabel::Pair(p) | AltIrrLabel::Split(p, _) => p,
        }
    }

    pub fn n(&self) -> usize {
        self.partition().weight()
    }

    pub fn is_trivial(&self) -> bool {
        matches!(self, AltIrrLabel::Pair(p) if p.len() <= 1)
    }
}

impl fmt::Display for AltIrrLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AltIrrLabel::Pair(p) => write!(f, "{p}"),
            AltIrrLabel::Split(p, b) => write!(f, "{p}{}", b.symbol()),
        }
    }
}

impl Serialize for AltIrrLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Parses `4,1` (either member of a conjugate pair) or `3,1,1+` / `3,1,1-`.
impl FromStr for AltIrrLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if let Some(rest) = t.strip_suffix('+') {
            return AltIrrLabel::split(&rest.parse()?, Branch::Plus);
        }
        if let Some(rest) = t.strip_suffix('-') {
            return AltIrrLabel::split(&rest.parse()?, Branch::Minus);
        }
        let lambda: Partition = t.parse()?;
        AltIrrLabel::pair(&lambda).map_err(|_| Error::Parse {
            input: s.to_string(),
            reason: "a self-conjugate partition needs a trailing + or -".into(),
        })
    }
}

/// An exact value `a + b√d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AltValue {
    pub a: BigRational,
    pub b: BigRational,
    pub d: i64,
}

impl AltValue {
    pub fn rational(a: BigRational) -> Self {
        AltValue {
            a,
            b: BigRational::zero(),
            d: 0,
        }
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Complex conjugate: `b` changes sign when `d < 0`.
    pub fn conj(&self) -> Self {
        let b = if self.d < 0 {
            -self.b.clone()
        } else {
            self.b.clone()
        };
        AltValue {
            a: self.a.clone(),
            b,
            d: self.d,
        }
    }

    /// `(a, b, d)` as decimal strings.
    pub fn to_strings(&self) -> [String; 3] {
        [self.a.to_string(), self.b.to_string(), self.d.to_string()]
    }
}

impl fmt::Display for AltValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let (sign, b) = if self.b < BigRational::zero() {
            ('-', -self.b.clone())
        } else {
            ('+', self.b.clone())
        };
        let coeff = if b == BigRational::from_integer(1.into()) {
            String::new()
        } else {
            format!("{b}*")
        };
        if self.a.is_zero() {
            let lead = if sign == '-' { "-" } else { "" };
            write!(f, "{lead}{coeff}sqrt({})", self.d)
        } else {
            write!(f, "{} {sign} {coeff}sqrt({})", self.a, self.d)
        }
    }
}

/// A value stored as `(a + b√D) / 2` with integers `a, b`; `D` is per class.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Half {
    a: i64,
    b: i64,
}

fn discriminants_of(classes: &[AltClass]) -> Vec<i64> {
    classes
        .iter()
        .map(|c| {
            let data = c.mu.cycle_class_data();
            match (c.split, data.eps) {
                (Some(_), Some(eps)) => i64::from(eps) * data.z.to_i64().expect("z fits i64"),
                _ => 0,
            }
        })
        .collect()
}

/// All classes of `A_n` in canonical order, a split pair as `+` then `-`.
pub fn an_classes(n: usize) -> Result<Vec<AltClass>> {
    if n < 1 {
        return Err(Error::OutOfRange {
            what: "n",
            detail: "alternating groups need n >= 1".into(),
        });
    }
    let mut out = Vec::new();
    for mu in enumerate_partitions(n) {
        let data = mu.cycle_class_data();
        if data.sign != 1 {
            continue;
        }
        if data.eps.is_some() && n > 1 {
            let size = data.class_size / 2u32;
            for b in [Branch::Plus, Branch::Minus] {
                out.push(AltClass {
                    mu: mu.clone(),
                    split: Some(b),
                    size: size.clone(),
                });
            }
        } else {
            out.push(AltClass {
                mu,
                split: None,
                size: data.class_size,
            });
        }
    }
    Ok(out)
}

/// The irreducible labels of `A_n` in canonical order.
pub fn an_labels(n: usize) -> Vec<AltIrrLabel> {
    let mut out = Vec::new();
    for lambda in enumerate_partitions(n) {
        let conj = lambda.conjugate();
        if conj == lambda {
            if n > 1 {
                out.push(AltIrrLabel::Split(lambda.clone(), Branch::Plus));
                out.push(AltIrrLabel::Split(lambda, Branch::Minus));
            } else {
                out.push(AltIrrLabel::Pair(lambda));
            }
        } else if conj > lambda {
            out.push(AltIrrLabel::Pair(lambda));
        }
    }
    out
}

/// The character table of `A_n`.
#[derive(Clone, Debug)]
pub struct AltCharacterTable {
    n: usize,
    swapped: bool,
    classes: Vec<AltClass>,
    labels: Vec<AltIrrLabel>,
    /// `D` for each class: `ε z` on split classes, 0 elsewhere.
    discriminants: Vec<i64>,
    cells: Vec<Half>,
}

impl AltCharacterTable {
    /// Builds the table; `swapped` exchanges which constituent is called `+`.
    pub fn build(n: usize, swapped: bool) -> Result<Self> {
        if n < 2 {
            return Err(Error::OutOfRange {
                what: "n",
                detail: "alternating tables need n >= 2".into(),
            });
        }
        let st = character_table(n)?;
        let classes = an_classes(n)?;
        let labels = an_labels(n);
        let discriminants = discriminants_of(&classes);
        let columns: Vec<usize> = classes
            .iter()
            .map(|c| st.position(&c.mu))
            .collect::<Result<_>>()?;
        let mut cells = Vec::with_capacity(labels.len() * classes.len());
        for label in &labels {
            let row = st.row(st.position(label.partition())?);
            match label {
                AltIrrLabel::Pair(_) => {
                    cells.extend(columns.iter().map(|&c| Half {
                        a: 2 * row[c],
                        b: 0,
                    }));
                }
                AltIrrLabel::Split(lambda, branch) => {
                    let theta = lambda.unfold()?;
                    let eps = i64::from(
                        theta
                            .cycle_class_data()
                            .eps
                            .expect("unfolding has distinct odd parts"),
                    );
                    let own = if swapped {
                        -branch.sign()
                    } else {
                        branch.sign()
                    };
                    for (class, &c) in classes.iter().zip(&columns) {
                        let cell = match class.split {
                            Some(b) if class.mu == theta => Half {
                                a: eps,
                                b: own * b.sign(),
                            },
                            _ => Half { a: row[c], b: 0 },
                        };
                        cells.push(cell);
                    }
                }
            }
        }
        Ok(AltCharacterTable {
            n,
            swapped,
            classes,
            labels,
            discriminants,
            cells,
        })
    }

    /// Assembles a table from exact values in row-major order without
    /// checking them; see [`AltCharacterTable::check_orthogonality`].
    pub fn from_values(n: usize, swapped: bool, values: &[AltValue]) -> Result<Self> {
        let classes = an_classes(n)?;
        let labels = an_labels(n);
        let discriminants = discriminants_of(&classes);
        let width = classes.len();
        if values.len() != labels.len() * width {
            return Err(Error::Cache(format!(
                "expected {} entries for A_{n}, found {}",
                labels.len() * width,
                values.len()
            )));
        }
        let doubled = |x: &BigRational| -> Option<i64> {
            let y = x * BigRational::from_integer(BigInt::from(2));
            if y.is_integer() {
                y.to_integer().to_i64()
            } else {
                None
            }
        };
        let cells = values
            .iter()
            .enumerate()
            .map(|(i, v)| {
                let bad =
                    || Error::Cache(format!("A_{n} entry {i} is not a value of the table: {v}"));
                let (a, b) = (
                    doubled(&v.a).ok_or_else(bad)?,
                    doubled(&v.b).ok_or_else(bad)?,
                );
                if b != 0 && v.d != discriminants[i % width] {
                    return Err(bad());
                }
                Ok(Half { a, b })
            })
            .collect::<Result<_>>()?;
        Ok(AltCharacterTable {
            n,
            swapped,
            classes,
            labels,
            discriminants,
            cells,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_swapped(&self) -> bool {
        self.swapped
    }

    pub fn classes(&self) -> &[AltClass] {
        &self.classes
    }

    pub fn labels(&self) -> &[AltIrrLabel] {
        &self.labels
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn discriminant(&self, col: usize) -> i64 {
        self.discriminants[col]
    }

    pub fn position(&self, label: &AltIrrLabel) -> Result<usize> {
        self.labels.iter().position(|l| l == label).ok_or_else(|| {
            Error::Precondition(format!("{label} is not an irreducible of A_{}", self.n))
        })
    }

    fn cell(&self, row: usize, col: usize) -> Half {
        self.cells[row * self.classes.len() + col]
    }

    pub fn value(&self, row: usize, col: usize) -> AltValue {
        let h = self.cell(row, col);
        let half = |x: i64| BigRational::new(BigInt::from(x), BigInt::from(2));
        AltValue {
            a: half(h.a),
            b: half(h.b),
            d: if h.b == 0 { 0 } else { self.discriminants[col] },
        }
    }

    /// The identity class comes last.
    pub fn degree(&self, row: usize) -> u64 {
        (self.cell(row, self.classes.len() - 1).a / 2) as u64
    }

    pub fn order(&self) -> BigUint {
        factorial(self.n) / 2u32
    }

    fn sizes(&self) -> Vec<i128> {
        self.classes
            .iter()
            .map(|c| c.size.to_i128().expect("class size fits i128"))
            .collect()
    }

    /// Hermitian row orthogonality and the sum of squared degrees.
    pub fn check_orthogonality(&self) -> Result<()> {
        let sizes = self.sizes();
        let order = self
            .order()
            .to_i128()
            .ok_or(Error::Overflow("group order"))?;
        for i in 0..self.size() {
            for j in i..self.size() {
                let (rational, irrational) = self.sum_terms(&sizes, &[i], j);
                // Two factors of 1/2: the sum carries a factor of 4.
                let expect = if i == j { 4 * order } else { 0 };
                if rational != expect || irrational.values().any(|&v| v != 0) {
                    return Err(Error::Cache(format!(
                        "A_{} table fails orthogonality at ({}, {})",
                        self.n, self.labels[i], self.labels[j]
                    )));
                }
            }
        }
        let squares: BigUint = (0..self.size())
            .map(|i| BigUint::from(self.degree(i)).pow(2))
            .sum();
        if squares != self.order() {
            return Err(Error::Cache(format!(
                "A_{} degrees do not square-sum to the order",
                self.n
            )));
        }
        Ok(())
    }

    /// `Σ_c |c| · Π_{f ∈ factors} f(c) · conj(last(c))` with every value
    /// scaled by 2. Returns the rational part and the irrational parts keyed
    /// by the squarefree kernel of `D`.
    fn sum_terms(
        &self,
        sizes: &[i128],
        factors: &[usize],
        last: usize,
    ) -> (i128, BTreeMap<i64, i128>) {
        let mut rational = 0i128;
        let mut irrational: BTreeMap<i64, i128> = BTreeMap::new();
        for (c, &size) in sizes.iter().enumerate() {
            let d = i128::from(self.discriminants[c]);
            let (mut p, mut q) = (1i128, 0i128);
            let rows = factors
                .iter()
                .map(|&r| (r, false))
                .chain(std::iter::once((last, true)));
            for (r, conj) in rows {
                let h = self.cell(r, c);
                let (a, mut b) = (i128::from(h.a), i128::from(h.b));
                if conj && d < 0 {
                    b = -b;
                }
                (p, q) = (p * a + q * b * d, p * b + q * a);
            }
            rational += size * p;
            if q != 0 {
                let (s, core) = squarefree_split(self.discriminants[c]);
                *irrational.entry(core).or_default() += size * q * i128::from(s);
            }
        }
        (rational, irrational)
    }

    /// Multiplicity of every irreducible in the product of the given rows.
    pub fn product_row(&self, factors: &[usize]) -> Result<Vec<u64>> {
        let sizes = self.sizes();
        let order = self
            .order()
            .to_i128()
            .ok_or(Error::Overflow("group order"))?;
        let scale = order << (factors.len() + 1);
        (0..self.size())
            .map(|l| {
                let (rational, irrational) = self.sum_terms(&sizes, factors, l);
                if irrational.values().any(|&v| v != 0) || rational % scale != 0 || rational < 0 {
                    return Err(Error::NonIntegral {
                        label: self.labels[l].to_string(),
                        value: format!("{rational}/{scale} with surd parts {irrational:?}"),
                    });
                }
                Ok((rational / scale) as u64)
            })
            .collect()
    }
}

/// `d = s² · core` with `core` squarefree and carrying the sign of `d`.
fn squarefree_split(d: i64) -> (i64, i64) {
    let sign = d.signum();
    let mut rest = d.abs();
    let mut s = 1;
    let mut p = 2;
    while p * p <= rest {
        while rest % (p * p) == 0 {
            rest /= p * p;
            s *= p;
        }
        p += 1;
    }
    (s, sign * rest)
}

type AltSlot = Arc<OnceLock<Arc<AltCharacterTable>>>;

fn alt_slot(n: usize, swapped: bool) -> AltSlot {
    static SLOTS: OnceLock<Mutex<HashMap<(usize, bool), AltSlot>>> = OnceLock::new();
    Arc::clone(
        SLOTS
            .get_or_init(Default::default)
            .lock()
            .unwrap()
            .entry((n, swapped))
            .or_default(),
    )
}

/// The shared table of `A_n` with the default branch.
pub fn an_character_table(n: usize) -> Result<Arc<AltCharacterTable>> {
    an_character_table_with(n, false)
}

/// The shared table of `A_n`; `swapped` exchanges the names `+` and `-` of
/// every split pair.
pub fn an_character_table_with(n: usize, swapped: bool) -> Result<Arc<AltCharacterTable>> {
    if n > alt_table_limit() {
        return Err(Error::LimitExceeded {
            n,
            limit: alt_table_limit(),
        });
    }
    let slot = alt_slot(n, swapped);
    if let Some(t) = slot.get() {
        return Ok(Arc::clone(t));
    }
    let built = Arc::new(AltCharacterTable::build(n, swapped)?);
    Ok(Arc::clone(slot.get_or_init(|| built)))
}

/// Makes `table` the shared table for its `n` and branch, unless one is
/// already present.
pub fn install_alt_table(table: AltCharacterTable) -> Arc<AltCharacterTable> {
    let slot = alt_slot(table.n, table.swapped);
    Arc::clone(slot.get_or_init(|| Arc::new(table)))
}

fn label_n(x: &AltIrrLabel, y: &AltIrrLabel) -> Result<usize> {
    if x.n() != y.n() {
        return Err(Error::GroupMismatch(x.n(), y.n()));
    }
    Ok(x.n())
}

/// The decomposition of the product of two irreducibles of `A_n`.
pub fn an_kron_decompose(x: &AltIrrLabel, y: &AltIrrLabel) -> Result<BTreeMap<AltIrrLabel, u64>> {
    an_product_decompose(&[x.clone(), y.clone()], false)
}

/// The decomposition of a product of irreducibles of `A_n`, using the table
/// with the given branch.
pub fn an_product_decompose(
    factors: &[AltIrrLabel],
    swapped: bool,
) -> Result<BTreeMap<AltIrrLabel, u64>> {
    let first = factors
        .first()
        .ok_or_else(|| Error::Precondition("empty product".into()))?;
    for f in factors {
        label_n(first, f)?;
    }
    let table = an_character_table_with(first.n(), swapped)?;
    let rows: Vec<usize> = factors
        .iter()
        .map(|f| table.position(f))
        .collect::<Result<_>>()?;
    let row = table.product_row(&rows)?;
    Ok(table
        .labels()
        .iter()
        .cloned()
        .zip(row)
        .filter(|(_, m)| *m > 0)
        .collect())
}

/// A set of irreducibles of `A_n` by row index.
pub type AltSet = BTreeSet<usize>;

struct AltSupports {
    size: usize,
    cells: Vec<OnceLock<AltSet>>,
}

fn alt_supports(n: usize, swapped: bool) -> Result<(Arc<AltCharacterTable>, Arc<AltSupports>)> {
    type Store = Mutex<HashMap<(usize, bool), Arc<AltSupports>>>;
    static STORE: OnceLock<Store> = OnceLock::new();
    let table = an_character_table_with(n, swapped)?;
    let mut store = STORE.get_or_init(Default::default).lock().unwrap();
    let s = store.entry((n, swapped)).or_insert_with(|| {
        let size = table.size();
        Arc::new(AltSupports {
            size,
            cells: (0..size * size).map(|_| OnceLock::new()).collect(),
        })
    });
    Ok((table, Arc::clone(s)))
}

fn alt_pair_support(
    table: &AltCharacterTable,
    supports: &AltSupports,
    i: usize,
    j: usize,
) -> Result<AltSet> {
    let (a, b) = (i.min(j), i.max(j));
    let cell = &supports.cells[a * supports.size + b];
    if let Some(s) = cell.get() {
        return Ok(s.clone());
    }
    let row = table.product_row(&[a, b])?;
    let s: AltSet = row
        .iter()
        .enumerate()
        .filter(|(_, m)| **m > 0)
        .map(|(l, _)| l)
        .collect();
    Ok(cell.get_or_init(|| s).clone())
}

fn alt_product_sets(
    table: &AltCharacterTable,
    supports: &AltSupports,
    left: &AltSet,
    right: &AltSet,
) -> Result<AltSet> {
    let pairs: Vec<(usize, usize)> = left
        .iter()
        .flat_map(|&i| right.iter().map(move |&j| (i, j)))
        .collect();
    let sets: Vec<AltSet> = pairs
        .par_iter()
        .map(|&(i, j)| alt_pair_support(table, supports, i, j))
        .collect::<Result<_>>()?;
    Ok(sets.into_iter().flatten().collect())
}

/// Constituents of the product of two `A_n` characters given by their
/// constituent sets.
pub fn an_product_support(
    n: usize,
    left: &AltSet,
    right: &AltSet,
    swapped: bool,
) -> Result<AltSet> {
    let (table, supports) = alt_supports(n, swapped)?;
    alt_product_sets(&table, &supports, left, right)
}

/// Covering number of a character of `A_n` with constituents `generators`.
pub fn ccn_an_set(n: usize, generators: &AltSet, cap: usize, swapped: bool) -> Result<CoveringRun> {
    if cap == 0 {
        return Err(Error::OutOfRange {
            what: "cap",
            detail: "cap must be at least 1".into(),
        });
    }
    let (table, supports) = alt_supports(n, swapped)?;
    let full = table.size();
    let mut seen: Vec<AltSet> = Vec::new();
    let mut current = generators.clone();
    let mut power_sizes = Vec::new();
    for k in 1..=cap {
        power_sizes.push(current.len());
        if current.len() == full {
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
        let next = alt_product_sets(&table, &supports, &current, generators)?;
        seen.push(std::mem::replace(&mut current, next));
    }
    Ok(CoveringRun {
        result: Covering::CapExhausted(cap),
        power_sizes,
    })
}

/// `ccn(χ; A_n)` for an irreducible `χ`.
pub fn ccn_an(label: &AltIrrLabel, cap: usize) -> Result<CoveringRun> {
    ccn_an_with(label, cap, false)
}

pub fn ccn_an_with(label: &AltIrrLabel, cap: usize, swapped: bool) -> Result<CoveringRun> {
    let n = label.n();
    let table = an_character_table_with(n, swapped)?;
    if label.is_trivial() {
        return Ok(CoveringRun {
            result: Covering::NotExists,
            power_sizes: vec![1],
        });
    }
    let row = table.position(label)?;
    ccn_an_set(n, &AltSet::from([row]), cap, swapped)
}

/// `ccn(χ_λ↓; A_n)` for the (possibly reducible) restriction of `χ_λ`.
pub fn ccn_an_restriction(lambda: &Partition, cap: usize) -> Result<CoveringRun> {
    let n = lambda.weight();
    let table = an_character_table(n)?;
    let labels = AltIrrLabel::restriction(lambda);
    if labels.iter().all(|l| l.is_trivial()) {
        return Ok(CoveringRun {
            result: Covering::NotExists,
            power_sizes: vec![1],
        });
    }
    let set: AltSet = labels
        .iter()
        .map(|l| table.position(l))
        .collect::<Result<_>>()?;
    ccn_an_set(n, &set, cap, false)
}

fn set_of(table: &AltCharacterTable, labels: &[AltIrrLabel]) -> Result<AltSet> {
    labels.iter().map(|l| table.position(l)).collect()
}

/// For every `λ ≠ λ'` and `μ = μ'` of `n`: `c(χ_λ↓ χ_μ^+)` and
/// `c(χ_λ↓ χ_μ^-)` agree away from `χ_μ^±`.
pub fn pair_split_products_agree(n: usize) -> Result<bool> {
    let table = an_character_table(n)?;
    let (_, supports) = alt_supports(n, false)?;
    let parts = enumerate_partitions(n);
    for mu in parts.iter().filter(|m| m.is_self_conjugate()) {
        let plus = table.position(&AltIrrLabel::Split(mu.clone(), Branch::Plus))?;
        let minus = table.position(&AltIrrLabel::Split(mu.clone(), Branch::Minus))?;
        for lambda in parts.iter().filter(|l| !l.is_self_conjugate()) {
            let row = table.position(&AltIrrLabel::pair(lambda)?)?;
            let mut a = alt_pair_support(&table, &supports, row, plus)?;
            let mut b = alt_pair_support(&table, &supports, row, minus)?;
            for s in [&mut a, &mut b] {
                s.remove(&plus);
                s.remove(&minus);
            }
            if a != b {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn odd_n(n: usize) -> Result<usize> {
    if n < 5 || n.is_multiple_of(2) {
        return Err(Error::OutOfRange {
            what: "n",
            detail: format!("need odd n >= 5, got {n}"),
        });
    }
    Ok((n - 1) / 2)
}

/// For odd `n` and `k = (n-1)/2`: every `1 ≤ r ≤ (n-3)/2` has some `ν` with
/// `d(ν) = 2` and `χ_ν↓` in both `c(χ_{μ(r)}↓ χ_{μ(k)}^±)`.
pub fn common_double_hook_exists(n: usize) -> Result<bool> {
    let k = odd_n(n)?;
    let table = an_character_table(n)?;
    let (_, supports) = alt_supports(n, false)?;
    let hook = Partition::hook(n, k)?;
    let plus = table.position(&AltIrrLabel::Split(hook.clone(), Branch::Plus))?;
    let minus = table.position(&AltIrrLabel::Split(hook, Branch::Minus))?;
    let double_hooks: Vec<usize> = table
        .labels()
        .iter()
        .enumerate()
        .filter(|(_, l)| matches!(l, AltIrrLabel::Pair(p) if p.durfee_rank() == 2))
        .map(|(i, _)| i)
        .collect();
    for r in 1..=(n - 3) / 2 {
        let row = table.position(&AltIrrLabel::pair(&Partition::hook(n, r)?)?)?;
        let a = alt_pair_support(&table, &supports, row, plus)?;
        let b = alt_pair_support(&table, &supports, row, minus)?;
        if !double_hooks.iter().any(|i| a.contains(i) && b.contains(i)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A decomposition predicted by formula, next to the computed one.
pub type PredictedDecomposition = (BTreeMap<AltIrrLabel, u64>, BTreeMap<AltIrrLabel, u64>);

/// The three decompositions of products of `χ_{μ(k)}^±` for odd `n`,
/// `k = (n-1)/2`: `χ^{+2}`, `χ^{-2}` and `χ^+χ^-`.
pub fn split_hook_square_decompositions(n: usize) -> Result<[PredictedDecomposition; 3]> {
    let k = odd_n(n)?;
    let hook = Partition::hook(n, k)?;
    let plus = AltIrrLabel::Split(hook.clone(), Branch::Plus);
    let minus = AltIrrLabel::Split(hook, Branch::Minus);
    let mut base_same = BTreeMap::new();
    let mut base_mixed = BTreeMap::new();
    for i in 0..=(n - 3) / 2 {
        let l = AltIrrLabel::pair(&Partition::hook(n, i)?)?;
        if (i + k) % 2 == 0 {
            base_same.insert(l, 1);
        } else {
            base_mixed.insert(l, 1);
        }
    }
    for nu in enumerate_partitions(n) {
        if nu.durfee_rank() == 2 {
            let l = AltIrrLabel::pair(&nu)?;
            base_same.insert(l.clone(), 1);
            base_mixed.insert(l, 1);
        }
    }
    let (same_plus, same_minus) = if n % 4 == 3 {
        (minus.clone(), plus.clone())
    } else {
        (plus.clone(), minus.clone())
    };
    let mut want_pp = base_same.clone();
    want_pp.insert(same_plus, 1);
    let mut want_mm = base_same;
    want_mm.insert(same_minus, 1);
    Ok([
        (want_pp, an_kron_decompose(&plus, &plus)?),
        (want_mm, an_kron_decompose(&minus, &minus)?),
        (base_mixed, an_kron_decompose(&plus, &minus)?),
    ])
}

/// Whether all three decompositions of [`split_hook_square_decompositions`] hold.
pub fn split_hook_squares_hold(n: usize) -> Result<bool> {
    Ok(split_hook_square_decompositions(n)?
        .iter()
        .all(|(want, got)| want == got))
}

/// The labels of `A_n` whose restriction-based set is used for a covering
/// number: `χ^+` for odd `n` (self-conjugate hook), `χ_λ↓` for even `n`
/// with `λ = (n/2 + 1, 1^{n/2 - 1})`.
pub fn near_self_conjugate_hook_labels(n: usize) -> Result<Vec<AltIrrLabel>> {
    if n % 2 == 1 {
        let hook = Partition::hook(n, (n - 1) / 2)?;
        Ok(vec![
            AltIrrLabel::Split(hook.clone(), Branch::Plus),
            AltIrrLabel::Split(hook, Branch::Minus),
        ])
    } else {
        Ok(vec![AltIrrLabel::pair(&Partition::hook(n, n / 2 - 1)?)?])
    }
}

/// Constituent set of a list of labels in a given table.
pub fn an_set(n: usize, labels: &[AltIrrLabel], swapped: bool) -> Result<AltSet> {
    set_of(&*an_character_table_with(n, swapped)?, labels)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn label(s: &str) -> AltIrrLabel {
        s.parse().unwrap()
    }

    #[test]
    fn classes() {
        let c5: Vec<String> = an_classes(5)
            .unwrap()
            .iter()
            .map(|c| c.to_string())
            .collect();
        assert_eq!(c5, ["[5]+", "[5]-", "[3,1,1]", "[2,2,1]", "[1,1,1,1,1]"]);
        let c4: Vec<String> = an_classes(4)
            .unwrap()
            .iter()
            .map(|c| c.to_string())
            .collect();
        assert_eq!(c4, ["[3,1]+", "[3,1]-", "[2,2]", "[1,1,1,1]"]);
        for n in 2..=12 {
            let classes = an_classes(n).unwrap();
            let total: BigUint = classes.iter().map(|c| c.size.clone()).sum();
            assert_eq!(total, factorial(n) / 2u32);
            let split = classes
                .iter()
                .filter(|c| c.split == Some(Branch::Plus))
                .count();
            let dop = enumerate_partitions(n)
                .iter()
                .filter(|m| m.has_distinct_odd_parts())
                .count();
            assert_eq!(split, dop);
            assert_eq!(an_labels(n).len(), classes.len());
        }
    }

    #[test]
    fn labels_parse() {
        assert_eq!(label("2,1,1,1"), AltIrrLabel::Pair(p("4,1")));
        assert_eq!(
            label("3,1,1+"),
            AltIrrLabel::Split(p("3,1,1"), Branch::Plus)
        );
        assert!("3,1,1".parse::<AltIrrLabel>().is_err());
        assert!("4,1-".parse::<AltIrrLabel>().is_err());
        assert_eq!(label("3,1,1-").to_string(), "[3,1,1]-");
    }

    #[test]
    fn a5_values() {
        let t = an_character_table(5).unwrap();
        let row = t.position(&label("3,1,1+")).unwrap();
        let v = t.value(row, 0);
        assert_eq!(v.to_strings(), ["1/2", "1/2", "5"]);
        assert_eq!(v.to_string(), "1/2 + 1/2*sqrt(5)");
        assert_eq!(t.value(row, 1).to_strings(), ["1/2", "-1/2", "5"]);
        let row = t.position(&label("4,1")).unwrap();
        assert_eq!(t.degree(row), 4);
        let surds = (0..t.size())
            .flat_map(|r| (0..t.size()).map(move |c| (r, c)))
            .filter(|&(r, c)| !t.value(r, c).is_rational());
        assert_eq!(surds.count(), 4);

        let t7 = an_character_table(7).unwrap();
        let row = t7.position(&label("4,1,1,1+")).unwrap();
        let v = t7.value(row, 0);
        assert_eq!(v.to_strings(), ["-1/2", "1/2", "-7"]);
        assert_eq!(v.conj().to_strings(), ["-1/2", "-1/2", "-7"]);
    }

    #[test]
    fn orthogonality() {
        for n in 2..=10 {
            an_character_table(n)
                .unwrap()
                .check_orthogonality()
                .unwrap();
            an_character_table_with(n, true)
                .unwrap()
                .check_orthogonality()
                .unwrap();
        }
    }

    #[test]
    fn restriction_structure() {
        for n in 2..=9 {
            let st = character_table(n).unwrap();
            let t = an_character_table(n).unwrap();
            for lambda in enumerate_partitions(n) {
                let srow = st.row(st.position(&lambda).unwrap());
                let labels = AltIrrLabel::restriction(&lambda);
                for (c, class) in t.classes().iter().enumerate() {
                    let want = srow[st.position(&class.mu).unwrap()];
                    let mut sum = AltValue::rational(BigRational::zero());
                    for l in &labels {
                        let v = t.value(t.position(l).unwrap(), c);
                        sum.a += v.a;
                        sum.b += v.b;
                    }
                    assert_eq!(sum.a, BigRational::from_integer(want.into()));
                    assert!(sum.b.is_zero());
                }
            }
        }
    }

    #[test]
    fn products() {
        let got = an_kron_decompose(&label("3,1,1+"), &label("3,1,1+")).unwrap();
        let want = BTreeMap::from([(label("5"), 1), (label("3,2"), 1), (label("3,1,1+"), 1)]);
        assert_eq!(got, want);
        let triv = label("5");
        for l in an_labels(5) {
            assert_eq!(
                an_kron_decompose(&triv, &l).unwrap(),
                BTreeMap::from([(l.clone(), 1)])
            );
        }
        assert!(an_kron_decompose(&label("5"), &label("4")).is_err());
    }

    #[test]
    fn covering_numbers() {
        // The 3-dimensional characters of A_5 square to 1 + 3 + 5.
        assert_eq!(
            ccn_an(&label("3,1,1+"), 5).unwrap().result,
            Covering::Covered(3)
        );
        assert_eq!(
            ccn_an(&label("3,1,1-"), 5).unwrap().result,
            Covering::Covered(3)
        );
        assert_eq!(
            ccn_an_restriction(&p("3,1,1"), 5).unwrap().result,
            Covering::Covered(2)
        );
        assert_eq!(ccn_an(&label("5"), 5).unwrap().result, Covering::NotExists);
        let mut best = 0;
        for l in an_labels(6) {
            if let Some(k) = ccn_an(&l, 6).unwrap().result.value() {
                best = best.max(k);
            }
        }
        assert_eq!(best, 3);
        for (n, want) in [(7, 4), (8, 5)] {
            let best = an_labels(n)
                .iter()
                .filter_map(|l| ccn_an(l, n).unwrap().result.value())
                .max();
            assert_eq!(best, Some(want));
        }
        assert!(ccn_an(&label("5,1"), 6).unwrap().result.value().unwrap() <= 3);
        for n in 5..=9 {
            for l in an_labels(n) {
                let a = ccn_an_with(&l, n, false).unwrap().result;
                let b = ccn_an_with(&l, n, true).unwrap().result;
                assert_eq!(a, b, "{l}");
            }
        }
    }

    #[test]
    fn lemmas() {
        for n in [5, 6, 7, 8] {
            assert!(pair_split_products_agree(n).unwrap(), "n = {n}");
        }
        for n in [5, 7, 9] {
            assert!(common_double_hook_exists(n).unwrap(), "n = {n}");
            for (want, got) in split_hook_square_decompositions(n).unwrap() {
                assert_eq!(want, got, "n = {n}");
            }
        }
        assert!(common_double_hook_exists(6).is_err());
    }

    #[test]
    fn squarefree() {
        assert_eq!(squarefree_split(45), (3, 5));
        assert_eq!(squarefree_split(-7), (1, -7));
        assert_eq!(squarefree_split(-72), (6, -2));
    }

    #[test]
    fn limits() {
        assert!(matches!(
            an_character_table(alt_table_limit() + 1),
            Err(Error::LimitExceeded { .. })
        ));
        assert!(an_character_table(1).is_err());
    }
}
