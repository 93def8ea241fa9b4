mod output;

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use symcover::alternating::{
    alt_table_limit, an_character_table_with, an_product_decompose, ccn_an_restriction,
    ccn_an_with, set_alt_table_limit, AltIrrLabel, DEFAULT_ALT_TABLE_LIMIT,
};
use symcover::cache::{AltTableFile, CacheEvent, SymTableFile, TableCache};
use symcover::characters::{character_table, set_table_limit, table_limit};
use symcover::covering::{
    ccn_char, ccn_sigma, conjecture_status, halving_sequence, tworow_split_sequence, Covering,
    CoveringRun,
};
use symcover::durfee::{construct_witness_with, TailRule};
use symcover::kronecker::{h_product_matrices, kron_coeff, kron_decompose};
use symcover::tableaux::{kostka, lr_coefficient, lr_product};
use symcover::verify::{check_range, run_suite, NRange, Status, Suite};
use symcover::{Error, Partition};

use output::{stringify, Format, Output};

/// Default largest `n` for covering-number searches.
const CCN_LIMIT: usize = 12;
const DEFAULT_TABLE_LIMIT: usize = 14;

#[derive(Parser)]
#[command(
    name = "symcover",
    version,
    about = "Characters of symmetric and alternating groups and their covering numbers"
)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Directory for cached character tables.
    #[arg(long, global = true, env = "SYMCOVER_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Raise the size limits to this n.
    #[arg(long, global = true)]
    max_n: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Group {
    Sym,
    Alt,
}

impl Group {
    fn name(self) -> &'static str {
        match self {
            Group::Sym => "sym",
            Group::Alt => "alt",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Character table of S_n or A_n.
    Table {
        n: usize,
        #[arg(long, value_enum, default_value_t = Group::Sym)]
        group: Group,
        /// Exchange the names + and - of split characters (A_n only).
        #[arg(long)]
        swapped: bool,
    },
    /// Number of semistandard tableaux of shape LAMBDA and content MU.
    Kostka { lambda: Partition, mu: Partition },
    /// `lr LAMBDA MU NU` gives c^LAMBDA_(MU,NU); `lr MU NU` expands the product.
    Lr {
        #[arg(num_args = 2..=3, required = true)]
        partitions: Vec<Partition>,
    },
    /// `kron MU NU LAMBDA` gives one Kronecker coefficient; `kron MU NU` decomposes the product.
    Kron {
        #[arg(num_args = 2..=3, required = true)]
        characters: Vec<String>,
        #[arg(long, value_enum, default_value_t = Group::Sym)]
        group: Group,
        #[arg(long)]
        swapped: bool,
    },
    /// Expand sigma_LAMBDA * sigma_MU as a sum of permutation characters.
    SigmaProduct { lambda: Partition, mu: Partition },
    /// Covering number of an irreducible character.
    Ccn {
        /// A partition, or for A_n a label such as `3,1,1+`. A self-conjugate
        /// partition without a sign means the whole restriction.
        lambda: String,
        /// Degree of the group; must equal the weight of LAMBDA.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value_t = Group::Sym)]
        group: Group,
        /// Largest power to try (default n).
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long)]
        swapped: bool,
    },
    /// Covering number of the permutation character sigma_LAMBDA, with a shortest chain.
    CcnSigma {
        lambda: Partition,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Splitting sequence for (n-k, k), or the halving sequence for odd n when --k is absent.
    Sequence {
        n: usize,
        #[arg(long)]
        k: Option<usize>,
    },
    /// LR witness (alpha, beta, filling) for a partition of Durfee rank at least 3.
    DurfeeWitness {
        lambda: Partition,
        /// Use the literal tail labels without the empty-row fallback.
        #[arg(long)]
        literal: bool,
    },
    /// Run a verification suite: thm1, thm2, thm3, thm4, lemmas, examples, conjecture or all.
    Verify {
        suite: Suite,
        /// Inclusive range such as 5..12.
        #[arg(long)]
        n: Option<NRange>,
    },
    /// Observations on two-row covering numbers (nothing is asserted).
    Conjecture {
        #[arg(long, default_value = "5..12")]
        n: NRange,
    },
}

/// How a command ended when it did not fail outright.
enum Outcome {
    Ok,
    VerificationFailed,
    Undefined(String),
    Limit(String),
}

struct Ctx {
    format: Format,
    cache: Option<TableCache>,
    ccn_limit: usize,
}

impl Ctx {
    fn warn(&self, msg: &str) {
        eprintln!("warning: {msg}");
    }

    fn sym(&self, n: usize) -> Result<()> {
        if n == 0 || n > table_limit() {
            return Ok(());
        }
        if let Some(c) = &self.cache {
            if let (_, CacheEvent::Rebuilt(why)) = c.sym_table(n)? {
                self.warn(&format!("cached S_{n} table was unusable ({why}); rebuilt"));
            }
        }
        Ok(())
    }

    fn alt(&self, n: usize, swapped: bool) -> Result<()> {
        if n < 2 || n > alt_table_limit() {
            return Ok(());
        }
        self.sym(n)?;
        if let Some(c) = &self.cache {
            if let (_, CacheEvent::Rebuilt(why)) = c.alt_table(n, swapped)? {
                self.warn(&format!("cached A_{n} table was unusable ({why}); rebuilt"));
            }
        }
        Ok(())
    }

    fn check_ccn_n(&self, n: usize) -> Result<()> {
        if n > self.ccn_limit {
            return Err(Error::LimitExceeded {
                n,
                limit: self.ccn_limit,
            }
            .into());
        }
        Ok(())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::VerificationFailed) => ExitCode::from(1),
        Ok(Outcome::Undefined(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Ok(Outcome::Limit(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(e) if broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

/// The reader of stdout went away (`symcover ... | head`).
fn broken_pipe(e: &anyhow::Error) -> bool {
    e.chain().any(|c| {
        c.downcast_ref::<std::io::Error>()
            .is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe)
            || c.downcast_ref::<serde_json::Error>()
                .and_then(|j| j.io_error_kind())
                .is_some_and(|k| k == std::io::ErrorKind::BrokenPipe)
    })
}

fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(
            Error::Parse { .. }
            | Error::InvalidPartition(_)
            | Error::WeightMismatch { .. }
            | Error::OutOfRange { .. }
            | Error::Precondition(_)
            | Error::LimitExceeded { .. }
            | Error::GroupMismatch(..),
        ) => 2,
        _ if e.downcast_ref::<Usage>().is_some() => 2,
        _ => 1,
    }
}

/// A usage error detected by the CLI itself.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Usage(msg.into()).into()
}

/// Number of partitions of `n`.
fn partition_count(n: usize) -> u128 {
    let mut p = vec![0u128; n + 1];
    p[0] = 1;
    for part in 1..=n {
        for m in part..=n {
            p[m] += p[m - part];
        }
    }
    p[n]
}

fn run(cli: Cli) -> Result<Outcome> {
    if let Some(j) = cli.jobs {
        if j == 0 {
            return Err(usage("--jobs must be at least 1"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build_global()
            .context("configuring the thread pool")?;
    }
    let mut ccn_limit = CCN_LIMIT;
    if let Some(m) = cli.max_n {
        set_table_limit(m.max(DEFAULT_TABLE_LIMIT));
        set_alt_table_limit(m.max(DEFAULT_ALT_TABLE_LIMIT));
        ccn_limit = m;
        let p = partition_count(m);
        let mib = (p * p * 8) as f64 / f64::from(1 << 20);
        eprintln!(
            "warning: limits raised to n = {m}; the S_{m} table alone has p({m})^2 = {} entries (about {mib:.1} MiB), \
             and covering searches grow faster than that",
            p * p
        );
    }
    let cache = cli
        .cache_dir
        .clone()
        .or_else(|| dirs::data_dir().map(|d| d.join("symcover")))
        .map(TableCache::new);
    let ctx = Ctx {
        format: cli.format,
        cache,
        ccn_limit,
    };
    let (out, outcome) = dispatch(&ctx, cli.command)?;
    let mut stdout = std::io::stdout().lock();
    out.emit(ctx.format, &mut stdout)?;
    stdout.flush()?;
    Ok(outcome)
}

fn dispatch(ctx: &Ctx, command: Command) -> Result<(Output, Outcome)> {
    match command {
        Command::Table { n, group, swapped } => cmd_table(ctx, n, group, swapped),
        Command::Kostka { lambda, mu } => {
            let k = kostka(&lambda, &mu)?;
            let mut o = Output::new(
                json!({"lambda": lambda, "mu": mu, "kostka": k.to_string()}),
                &["lambda", "mu", "kostka"],
            );
            o.row(vec![lambda.to_string(), mu.to_string(), k.to_string()]);
            Ok((o, Outcome::Ok))
        }
        Command::Lr { partitions } => cmd_lr(&partitions),
        Command::Kron {
            characters,
            group,
            swapped,
        } => cmd_kron(ctx, &characters, group, swapped),
        Command::SigmaProduct { lambda, mu } => {
            let terms = h_product_matrices(&lambda, &mu)?;
            let json = json!({
                "lambda": lambda,
                "mu": mu,
                "terms": terms.iter().map(|(nu, c)| json!({"sigma": nu, "multiplicity": c.to_string()})).collect::<Vec<_>>(),
            });
            let mut o = Output::new(json, &["sigma", "multiplicity"]);
            for (nu, c) in &terms {
                o.row(vec![nu.to_string(), c.to_string()]);
            }
            Ok((o, Outcome::Ok))
        }
        Command::Ccn {
            lambda,
            n,
            group,
            cap,
            swapped,
        } => cmd_ccn(ctx, &lambda, n, group, cap, swapped),
        Command::CcnSigma { lambda, n, cap } => cmd_ccn_sigma(ctx, &lambda, n, cap),
        Command::Sequence { n, k } => {
            let seq = match k {
                Some(k) => tworow_split_sequence(n, k)?,
                None => halving_sequence(n)?,
            };
            seq.validate()?;
            let mut o = Output::new(
                stringify(serde_json::to_value(&seq)?),
                &["step", "partition"],
            );
            o.preamble.push(format!(
                "generator {}, {} collapses",
                seq.generator,
                seq.len()
            ));
            for (i, s) in seq.steps.iter().enumerate() {
                o.row(vec![i.to_string(), s.to_string()]);
            }
            Ok((o, Outcome::Ok))
        }
        Command::DurfeeWitness { lambda, literal } => {
            let rule = if literal {
                TailRule::Literal
            } else {
                TailRule::SkipEmptyRows
            };
            let w = construct_witness_with(&lambda, rule, None)?;
            w.validate()?;
            let mut o = Output::new(stringify(serde_json::to_value(&w)?), &["row", "entries"]);
            o.preamble = vec![
                format!("lambda {}", w.lambda),
                format!("alpha  {}", w.alpha),
                format!("beta   {}", w.beta),
            ];
            for (i, r) in w.filling.rows().iter().enumerate() {
                let cells: Vec<String> = r.iter().map(usize::to_string).collect();
                o.row(vec![(i + 1).to_string(), cells.join(" ")]);
            }
            Ok((o, Outcome::Ok))
        }
        Command::Verify { suite, n } => cmd_verify(ctx, suite, n),
        Command::Conjecture { n } => cmd_conjecture(ctx, n),
    }
}

fn cmd_table(ctx: &Ctx, n: usize, group: Group, swapped: bool) -> Result<(Output, Outcome)> {
    if n == 0 {
        return Err(usage("table needs n >= 1"));
    }
    match group {
        Group::Sym => {
            if n > table_limit() {
                return Err(Error::LimitExceeded {
                    n,
                    limit: table_limit(),
                }
                .into());
            }
            ctx.sym(n)?;
            let t = character_table(n)?;
            let file = SymTableFile::from_table(&t);
            let mut header = vec!["chi \\ class".to_string()];
            header.extend(t.partitions().iter().map(|p| p.to_string()));
            let mut o = Output::new(serde_json::to_value(&file)?, &[]);
            o.header = header;
            o.preamble.push(format!(
                "S_{n}: rows are irreducibles, columns are cycle types"
            ));
            for (p, row) in t.partitions().iter().zip(&file.values) {
                let mut r = vec![p.to_string()];
                r.extend(row.iter().cloned());
                o.row(r);
            }
            Ok((o, Outcome::Ok))
        }
        Group::Alt => {
            if n < 2 {
                return Err(usage("A_n tables need n >= 2"));
            }
            if n > alt_table_limit() {
                return Err(Error::LimitExceeded {
                    n,
                    limit: alt_table_limit(),
                }
                .into());
            }
            ctx.alt(n, swapped)?;
            let t = an_character_table_with(n, swapped)?;
            let file = AltTableFile::from_table(&t);
            let mut o = Output::new(serde_json::to_value(&file)?, &[]);
            o.header = std::iter::once("chi \\ class".to_string())
                .chain(file.classes.iter().cloned())
                .collect();
            o.preamble
                .push(format!("A_{n}: rows are irreducibles, columns are classes"));
            for (i, label) in file.characters.iter().enumerate() {
                let mut r = vec![label.clone()];
                r.extend((0..t.classes().len()).map(|c| t.value(i, c).to_string()));
                o.row(r);
            }
            Ok((o, Outcome::Ok))
        }
    }
}

fn cmd_lr(ps: &[Partition]) -> Result<(Output, Outcome)> {
    if let [lambda, mu, nu] = ps {
        let c = lr_coefficient(lambda, mu, nu)?;
        let mut o = Output::new(
            json!({"lambda": lambda, "mu": mu, "nu": nu, "lr": c.to_string()}),
            &["lambda", "mu", "nu", "lr"],
        );
        o.row(vec![
            lambda.to_string(),
            mu.to_string(),
            nu.to_string(),
            c.to_string(),
        ]);
        return Ok((o, Outcome::Ok));
    }
    let (mu, nu) = (&ps[0], &ps[1]);
    let prod = lr_product(mu, nu)?;
    Ok((
        decomposition(
            json!({"mu": mu, "nu": nu}),
            prod.iter().map(|(k, v)| (k.to_string(), *v)),
        ),
        Outcome::Ok,
    ))
}

fn decomposition(mut json: Value, terms: impl Iterator<Item = (String, u64)>) -> Output {
    let terms: Vec<(String, u64)> = terms.collect();
    json["constituents"] = terms
        .iter()
        .map(|(l, m)| json!({"lambda": l, "multiplicity": m.to_string()}))
        .collect::<Vec<_>>()
        .into();
    let mut o = Output::new(json, &["lambda", "multiplicity"]);
    for (l, m) in terms {
        o.row(vec![l, m.to_string()]);
    }
    o
}

fn parse_partition(s: &str) -> Result<Partition> {
    Ok(s.parse::<Partition>()?)
}

fn cmd_kron(ctx: &Ctx, chars: &[String], group: Group, swapped: bool) -> Result<(Output, Outcome)> {
    match group {
        Group::Sym => {
            let ps: Vec<Partition> = chars
                .iter()
                .map(|s| parse_partition(s))
                .collect::<Result<_>>()?;
            ctx.sym(ps[0].weight())?;
            if let [mu, nu, lambda] = &ps[..] {
                let g = kron_coeff(mu, nu, lambda)?;
                let mut o = Output::new(
                    json!({"mu": mu, "nu": nu, "lambda": lambda, "kronecker": g.to_string()}),
                    &["mu", "nu", "lambda", "kronecker"],
                );
                o.row(vec![
                    mu.to_string(),
                    nu.to_string(),
                    lambda.to_string(),
                    g.to_string(),
                ]);
                return Ok((o, Outcome::Ok));
            }
            let d = kron_decompose(&ps[0], &ps[1])?;
            Ok((
                decomposition(
                    json!({"mu": ps[0], "nu": ps[1], "group": "sym"}),
                    d.iter().map(|(k, v)| (k.to_string(), *v)),
                ),
                Outcome::Ok,
            ))
        }
        Group::Alt => {
            let ls: Vec<AltIrrLabel> = chars
                .iter()
                .map(|s| s.parse())
                .collect::<symcover::Result<_>>()?;
            ctx.alt(ls[0].n(), swapped)?;
            let d = an_product_decompose(&ls[..2], swapped)?;
            if let Some(target) = ls.get(2) {
                let g = d.get(target).copied().unwrap_or(0);
                let mut o = Output::new(
                    json!({"mu": ls[0], "nu": ls[1], "lambda": target, "group": "alt", "kronecker": g.to_string()}),
                    &["mu", "nu", "lambda", "kronecker"],
                );
                o.row(vec![
                    ls[0].to_string(),
                    ls[1].to_string(),
                    target.to_string(),
                    g.to_string(),
                ]);
                return Ok((o, Outcome::Ok));
            }
            Ok((
                decomposition(
                    json!({"mu": ls[0], "nu": ls[1], "group": "alt"}),
                    d.iter().map(|(k, v)| (k.to_string(), *v)),
                ),
                Outcome::Ok,
            ))
        }
    }
}

fn check_weight(n: Option<usize>, weight: usize) -> Result<()> {
    match n {
        Some(n) if n != weight => Err(usage(format!(
            "--n {n} does not match the weight {weight} of the partition"
        ))),
        _ => Ok(()),
    }
}

fn covering_outcome(result: Covering) -> Outcome {
    match result {
        Covering::Covered(_) => Outcome::Ok,
        Covering::NotExists => Outcome::Undefined("covering number does not exist".into()),
        Covering::CapExhausted(cap) => {
            Outcome::Limit(format!("not covered by power {cap}; raise --cap"))
        }
    }
}

fn cmd_ccn(
    ctx: &Ctx,
    lambda: &str,
    n: Option<usize>,
    group: Group,
    cap: Option<usize>,
    swapped: bool,
) -> Result<(Output, Outcome)> {
    let (name, run): (String, CoveringRun) = match group {
        Group::Sym => {
            let p = parse_partition(lambda)?;
            check_weight(n, p.weight())?;
            ctx.check_ccn_n(p.weight())?;
            ctx.sym(p.weight())?;
            (p.to_string(), ccn_char(&p, cap.unwrap_or(p.weight()))?)
        }
        Group::Alt => match lambda.parse::<AltIrrLabel>() {
            Ok(label) => {
                check_weight(n, label.n())?;
                ctx.check_ccn_n(label.n())?;
                ctx.alt(label.n(), swapped)?;
                (
                    label.to_string(),
                    ccn_an_with(&label, cap.unwrap_or(label.n()), swapped)?,
                )
            }
            Err(e) => {
                let p = parse_partition(lambda).map_err(|_| e)?;
                if !p.is_self_conjugate() {
                    bail!("cannot read {lambda:?} as a character of A_n");
                }
                check_weight(n, p.weight())?;
                ctx.check_ccn_n(p.weight())?;
                ctx.alt(p.weight(), false)?;
                (
                    format!("{p}+{p}-"),
                    ccn_an_restriction(&p, cap.unwrap_or(p.weight()))?,
                )
            }
        },
    };
    let ccn = run.result.value().map(|k| k.to_string());
    let counts: Vec<String> = run.power_sizes.iter().map(usize::to_string).collect();
    let json = json!({
        "lambda": name,
        "group": group.name(),
        "ccn": ccn,
        "witness_power_constituent_counts": counts,
    });
    let mut o = Output::new(
        json,
        &["lambda", "group", "ccn", "witness_power_constituent_counts"],
    );
    o.row(vec![
        name,
        group.name().into(),
        run.result.to_string(),
        counts.join(" "),
    ]);
    Ok((o, covering_outcome(run.result)))
}

fn cmd_ccn_sigma(
    ctx: &Ctx,
    lambda: &Partition,
    n: Option<usize>,
    cap: Option<usize>,
) -> Result<(Output, Outcome)> {
    check_weight(n, lambda.weight())?;
    ctx.check_ccn_n(lambda.weight())?;
    let run = ccn_sigma(lambda, cap.unwrap_or(lambda.weight()))?;
    let json = json!({
        "lambda": lambda,
        "ccn_sigma": run.result.value().map(|k| k.to_string()),
        "chain": run.path,
    });
    let mut o = Output::new(json, &["step", "partition"]);
    o.preamble
        .push(format!("ccn of sigma_{lambda}: {}", run.result));
    for (i, p) in run.path.iter().flatten().enumerate() {
        o.row(vec![i.to_string(), p.to_string()]);
    }
    Ok((o, covering_outcome(run.result)))
}

fn preload(ctx: &Ctx, suite: Suite, range: Option<NRange>) -> Result<()> {
    let suites: Vec<Suite> = if suite == Suite::All {
        Suite::EACH.to_vec()
    } else {
        vec![suite]
    };
    for s in suites {
        let r = range.unwrap_or_else(|| s.default_range());
        for n in r.clip(1, table_limit().min(13)) {
            ctx.sym(n)?;
        }
        if s == Suite::Thm4 || s == Suite::Lemmas {
            for n in r.clip(2, alt_table_limit().min(11)) {
                ctx.alt(n, false)?;
                ctx.alt(n, true)?;
            }
        }
    }
    Ok(())
}

fn cmd_verify(ctx: &Ctx, suite: Suite, range: Option<NRange>) -> Result<(Output, Outcome)> {
    check_range(suite, range)?;
    preload(ctx, suite, range)?;
    let report = run_suite(suite, range)?;
    let (pass, fail, skip) = report.tally();
    let mut o = Output::new(
        stringify(serde_json::to_value(&report)?),
        &["id", "status", "detail"],
    );
    o.preamble.push(format!(
        "{}: {pass} passed, {fail} failed, {skip} skipped in {} ms",
        report.suite, report.wall_time_ms
    ));
    for c in &report.checks {
        o.row(vec![c.id.clone(), c.status.to_string(), c.detail.clone()]);
    }
    let outcome = if report.checks.iter().any(|c| c.status == Status::Fail) {
        Outcome::VerificationFailed
    } else {
        Outcome::Ok
    };
    Ok((o, outcome))
}

fn cmd_conjecture(ctx: &Ctx, range: NRange) -> Result<(Output, Outcome)> {
    if range.lo < 5 {
        return Err(usage("the conjecture report needs n >= 5"));
    }
    if range.hi > ctx.ccn_limit {
        return Err(Error::LimitExceeded {
            n: range.hi,
            limit: ctx.ccn_limit,
        }
        .into());
    }
    let mut reports = Vec::new();
    for n in range.iter() {
        ctx.sym(n)?;
        reports.push(conjecture_status(n)?);
    }
    let mut o = Output::new(
        stringify(serde_json::to_value(&reports)?),
        &[
            "n",
            "lambda",
            "power",
            "chi_constituents",
            "sigma_constituents",
            "equal",
            "ccn_char",
            "ccn_sigma",
        ],
    );
    let mut balanced = BTreeMap::new();
    for r in &reports {
        for e in &r.entries {
            o.row(vec![
                r.n.to_string(),
                e.lambda.to_string(),
                e.power.to_string(),
                e.chi_constituents.to_string(),
                e.sigma_constituents.to_string(),
                e.equal.to_string(),
                e.ccn_char.to_string(),
                e.ccn_sigma.to_string(),
            ]);
        }
        if let Some(b) = &r.balanced {
            balanced.insert(
                r.n,
                format!(
                    "{}: ccn {} vs [{}, {}]",
                    b.lambda, b.ccn_char, b.low, b.high
                ),
            );
        }
    }
    o.preamble.extend(
        balanced
            .into_iter()
            .map(|(n, s)| format!("n = {n}, balanced {s}")),
    );
    Ok((o, Outcome::Ok))
}
