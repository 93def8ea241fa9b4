//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Exits 0 when the failing checks are exactly the known counterexamples
//! listed in `KNOWN_FAILURES`; any other failure, or a known one that no
//! longer fails, exits 1.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use symcover::verify::{self, Check, NRange, Status};

/// Check ids whose failure is a genuine counterexample to the stated formula.
const KNOWN_FAILURES: [&str; 5] = [
    "thm1.cap.n06",
    "thm3.near_self_conjugate.n06",
    "thm3.near_self_conjugate.n08",
    "thm4.formula.n05",
    "thm4.formula.n07",
];

struct Criterion {
    number: u32,
    title: &'static str,
    limit: Duration,
    run: fn() -> Vec<Check>,
}

fn r(lo: usize, hi: usize) -> NRange {
    NRange::new(lo, hi)
}

fn minutes(m: u64) -> Duration {
    Duration::from_secs(60 * m)
}

fn examples_with_prefix(prefixes: &[&str]) -> Vec<Check> {
    verify::examples()
        .into_iter()
        .filter(|c| prefixes.iter().any(|p| c.id.starts_with(p)))
        .collect()
}

fn criteria() -> Vec<Criterion> {
    vec![
        Criterion {
            number: 1,
            title: "two-row and conjugate ccn equal ceil(2(n-1)/3), 5 <= n <= 12",
            limit: minutes(5),
            run: || verify::thm1_two_row(r(5, 12)),
        },
        Criterion {
            number: 2,
            title: "ccn <= ceil(2(n-1)/3) off the four extreme shapes, 5 <= n <= 10",
            limit: minutes(10),
            run: || verify::thm1_cap(r(5, 10)),
        },
        Criterion {
            number: 3,
            title: "ccn of (k,k-1) is ceil(log2 n), n in {5,7,9,11,13}",
            limit: minutes(2),
            run: || verify::thm2(r(5, 13)),
        },
        Criterion {
            number: 4,
            title: "ccn of (n-2,1,1) is floor(n/2); near-self-conjugate hooks hit the log bound, 5 <= n <= 12",
            limit: minutes(10),
            run: || {
                let mut v = verify::thm3_hook2(r(5, 12));
                v.extend(verify::thm3_near_self_conjugate(r(5, 12)));
                v
            },
        },
        Criterion {
            number: 5,
            title: "A_n covering number of the near-self-conjugate constituents, both branches, 5 <= n <= 11",
            limit: minutes(10),
            run: || verify::thm4_formula(r(5, 11)),
        },
        Criterion {
            number: 6,
            title: "maximum ccn is n-1 on S_n (5..10) and n-ceil(sqrt n) on A_n (6..9)",
            limit: minutes(10),
            run: || {
                let mut v = verify::sym_max_baseline(r(5, 10));
                v.extend(verify::alt_max_baseline(r(6, 9)));
                v
            },
        },
        Criterion {
            number: 7,
            title: "ccn of sigma on hooks is ceil((n-1)/k), 5 <= n <= 12",
            limit: minutes(10),
            run: || verify::sigma_hooks(r(5, 12)),
        },
        Criterion {
            number: 8,
            title: "splitting sequences: worked examples step for step, legality and length for n <= 60",
            limit: minutes(10),
            run: || {
                let mut v = examples_with_prefix(&["examples.split_sequence"]);
                v.extend(verify::split_sequences(r(2, 60)));
                v
            },
        },
        Criterion {
            number: 9,
            title: "closed forms agree with the exact tables (six oracle suites)",
            limit: minutes(5),
            run: || verify::oracles(r(1, 10)),
        },
        Criterion {
            number: 10,
            title: "orthogonality, tableau examples, containments, hook products, A_n lemmas, Durfee witnesses, gluing",
            limit: minutes(10),
            run: || {
                let mut v = examples_with_prefix(&["examples.kostka", "examples.reading_word", "examples.lattice"]);
                v.extend(verify::structural(r(1, 16)));
                v
            },
        },
        Criterion {
            number: 11,
            title: "sigma and chi powers agree; Durfee closure of hook powers",
            limit: minutes(10),
            run: || verify::thm3_internals(r(5, 12)),
        },
    ]
}

fn main() -> ExitCode {
    let known: BTreeSet<&str> = KNOWN_FAILURES.into_iter().collect();
    let mut failing: BTreeSet<String> = BTreeSet::new();
    let mut overtime = false;

    for c in criteria() {
        let start = Instant::now();
        let checks = (c.run)();
        let elapsed = start.elapsed();
        let fails: Vec<&Check> = checks.iter().filter(|k| k.status == Status::Fail).collect();
        let skips = checks
            .iter()
            .filter(|k| matches!(k.status, Status::Skipped(_)))
            .count();
        let late = elapsed > c.limit;
        overtime |= late;
        let verdict = if fails.is_empty() && !late && !checks.is_empty() {
            "PASS"
        } else {
            "FAIL"
        };
        println!(
            "{verdict} criterion {}: {} [{} checks, {} skipped, {:.2} s, limit {} s]",
            c.number,
            c.title,
            checks.len(),
            skips,
            elapsed.as_secs_f64(),
            c.limit.as_secs()
        );
        if late {
            println!("    over the time limit");
        }
        for f in &fails {
            let tag = if known.contains(f.id.as_str()) {
                "known counterexample"
            } else {
                "unexpected"
            };
            println!("    {} ({tag}): {}", f.id, f.detail);
            failing.insert(f.id.clone());
        }
        for s in checks
            .iter()
            .filter(|k| matches!(k.status, Status::Skipped(_)))
        {
            println!("    {} ({}): {}", s.id, s.status, s.detail);
        }
        for w in checks
            .iter()
            .filter(|k| k.id.starts_with("lemmas.durfee_witness") && k.status == Status::Pass)
        {
            println!("    {}: {}", w.id, w.detail);
        }
    }

    let unexpected: Vec<&String> = failing
        .iter()
        .filter(|id| !known.contains(id.as_str()))
        .collect();
    let vanished: Vec<&&str> = known.iter().filter(|id| !failing.contains(**id)).collect();
    println!();
    if unexpected.is_empty() && vanished.is_empty() && !overtime {
        println!(
            "acceptance: failures are exactly the {} known counterexamples",
            known.len()
        );
        ExitCode::SUCCESS
    } else {
        if !unexpected.is_empty() {
            println!("acceptance: unexpected failures: {unexpected:?}");
        }
        if !vanished.is_empty() {
            println!("acceptance: known counterexamples no longer fail: {vanished:?}");
        }
        if overtime {
            println!("acceptance: a criterion exceeded its time limit");
        }
        ExitCode::FAILURE
    }
}
