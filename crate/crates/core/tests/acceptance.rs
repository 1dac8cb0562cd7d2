//! Acceptance run: one PASS/FAIL line per criterion, with timings.
//!
//! Criterion 9 contains a checkpoint (both growth ratios at most 1.05 at
//! n = 300) that the exact values do not meet. It is evaluated as stated and
//! reported as FAIL. The run exits non-zero only when a criterion's outcome
//! differs from the recorded expectation, so an unexpected pass of that
//! checkpoint is also an error.

use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use pinj::asymptotics::{growth_report, mod_deviation_shrinks};
use pinj::bijections::{sweep, Bijection};
use pinj::counting::{
    count_table, domain_probabilities, enumerate, enumerated_table, verify_identities_with, Filter,
    Method, Sequences, VerifyOptions, DEFAULT_BUDGET,
};
use pinj::random_products::{
    brute_force_distribution, cross_checks, monte_carlo, rank_distribution,
    verify_spectral_identities,
};

type Q = BigRational;

fn q(a: i64, b: i64) -> Q {
    Q::new(BigInt::from(a), BigInt::from(b))
}

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn domain_probabilities_in_is3() -> Outcome {
    let start = Instant::now();
    let elements = match enumerate(3, Filter::All) {
        Ok(e) => e,
        Err(e) => return outcome(false, e.to_string()),
    };
    let (mut total, mut one, mut both) = (0i64, 0i64, 0i64);
    for a in elements {
        total += 1;
        one += i64::from(a.in_domain(1));
        both += i64::from(a.in_domain(1) && a.in_domain(2));
    }
    let (single, pair) = (q(one, total), q(both, total));
    let elapsed = start.elapsed();
    let closed = domain_probabilities(3) == Some((single.clone(), pair.clone()));
    let ok = single == q(21, 34)
        && pair == q(6, 17)
        && &single * &single != pair
        && closed
        && elapsed < Duration::from_secs(1);
    outcome(
        ok,
        format!("enumerated {total} elements: Pr(1 in dom) = {single}, Pr(1,2 in dom) = {pair}, closed form agrees {closed}"),
    )
}

fn count_table_matches_enumeration() -> Outcome {
    let mut bad = Vec::new();
    for n in 0..=7 {
        match enumerated_table(n, DEFAULT_BUDGET) {
            Ok(t) => {
                let diff = count_table(n).differences(&t);
                if !diff.is_empty() {
                    bad.push(format!("n={n}: {diff:?}"));
                }
            }
            Err(e) => bad.push(format!("n={n}: {e}")),
        }
    }
    let card = count_table(7).card_is.to_string();
    outcome(
        bad.is_empty() && card == "130922",
        format!(
            "all fields equal for n <= 7, |IS_7| = {card} {}",
            bad.join("; ")
        ),
    )
}

fn identity_suite() -> Outcome {
    let seq = Sequences::up_to(301);
    let mut failed = Vec::new();
    let mut enumerated = 0;
    let mut closed = 0;
    for n in 0..=300 {
        let opts = VerifyOptions {
            enumeration_limit: 7,
            budget: DEFAULT_BUDGET,
        };
        match verify_identities_with(&seq, n, opts) {
            Ok(report) => {
                for c in &report.checks {
                    match c.method {
                        Method::Enumeration => enumerated += 1,
                        Method::ClosedForm => closed += 1,
                    }
                    if !c.passed {
                        failed.push(format!("{}@{n}", c.name));
                    }
                }
            }
            Err(e) => failed.push(format!("n={n}: {e}")),
        }
    }
    outcome(
        failed.is_empty(),
        format!(
            "{enumerated} enumerated checks (n <= 7), {closed} closed-form checks (n <= 300) {}",
            failed.join(" ")
        ),
    )
}

fn bijection_round_trips() -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    for b in Bijection::ALL {
        for n in 0..=5 {
            match sweep(b, n, DEFAULT_BUDGET) {
                Ok(r) if r.passed() => count += 1,
                Ok(r) => bad.push(format!("{} n={n}", r.bijection)),
                Err(e) => bad.push(format!("{} n={n}: {e}", b.name())),
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("{count} sweeps passed {}", bad.join("; ")),
    )
}

fn random_products_exact() -> Outcome {
    let mut bad = Vec::new();
    for (n, k) in [(1, 2), (1, 3), (2, 2), (2, 3), (3, 2), (3, 3)] {
        match (
            brute_force_distribution(n, k, DEFAULT_BUDGET),
            rank_distribution(n, k),
        ) {
            (Ok(b), Ok(r)) if b == r => {}
            (Ok(_), Ok(_)) => bad.push(format!("({n},{k}) differs")),
            (Err(e), _) | (_, Err(e)) => bad.push(format!("({n},{k}): {e}")),
        }
    }
    for n in 0..=8 {
        for k in 1..=6 {
            match rank_distribution(n, k) {
                Ok(d) if d.total_probability().is_one() => {}
                _ => bad.push(format!("total ({n},{k})")),
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "brute force equal on 6 pairs, totals 1 for n <= 8, k <= 6 {}",
            bad.join("; ")
        ),
    )
}

fn spectral_suite() -> Outcome {
    let mut bad = Vec::new();
    for n in 0..=50 {
        let report = verify_spectral_identities(n);
        for c in report.checks.iter().filter(|c| !c.passed) {
            bad.push(format!("{}@{n}", c.name));
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "eigen-equations, alternating sums and ratio bound for n <= 50 {}",
            bad.join(" ")
        ),
    )
}

fn closed_forms_and_reduction() -> Outcome {
    let mut bad = Vec::new();
    for n in 0..=5 {
        for k in 1..=5 {
            match cross_checks(n, k, 2) {
                Ok(c) => {
                    if !c.top_rank {
                        bad.push(format!("top ({n},{k})"));
                    }
                    if !c.sandwich {
                        bad.push(format!("sandwich ({n},{k})"));
                    }
                    if !c.reduction {
                        bad.push(format!("reduction ({n},{k})"));
                    }
                }
                Err(e) => bad.push(format!("({n},{k}): {e}")),
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "top rank, sandwich and reduction for n, k <= 5 {}",
            bad.join("; ")
        ),
    )
}

fn monte_carlo_check() -> Outcome {
    let start = Instant::now();
    let seed = 20240611;
    let (first, second) = match (
        monte_carlo(3, 2, 1_000_000, seed),
        monte_carlo(3, 2, 1_000_000, seed),
    ) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return outcome(false, e.to_string()),
    };
    let elapsed = start.elapsed();
    let ok = first.within_tolerance() && first == second && elapsed < Duration::from_secs(60);
    outcome(
        ok,
        format!(
            "histogram {:?}, outliers {:?}, identical rerun {}, {:.1}s for both runs",
            first.rank_histogram,
            first.outliers(),
            first == second,
            elapsed.as_secs_f64()
        ),
    )
}

fn asymptotics_checks() -> Outcome {
    let report = match growth_report(300) {
        Ok(r) => r,
        Err(e) => return outcome(false, e.to_string()),
    };
    let bounds = report.bounds_hold();
    let sums = report.sums_hold();
    let band = report.growth_within(50, &Q::one(), &q(135, 100));
    let last = report.row(300).expect("row 300");
    let checkpoint = last.t_growth <= q(105, 100) && last.is_growth <= q(105, 100);
    let share = report
        .rows
        .iter()
        .filter(|r| r.n >= 3)
        .collect::<Vec<_>>()
        .windows(2)
        .all(|w| w[1].nilpotent_share < w[0].nilpotent_share);
    let residues = [20, 40, 80].iter().all(|&n| {
        [2, 3, 5]
            .iter()
            .all(|&m| mod_deviation_shrinks(n, m).unwrap_or(false))
    });
    let passed = bounds && sums && band && checkpoint && share && residues;
    outcome(
        passed,
        format!(
            "ratio bounds {bounds}, next-size sums {sums}, band (1, 1.35] from n = 50 {band}, \
             <= 1.05 at n = 300 {checkpoint} (values {:.5} and {:.5}), \
             nilpotent share decreasing {share}, residue deviation shrinking {residues}",
            pinj::arith::approx(&last.t_growth),
            pinj::arith::approx(&last.is_growth),
        ),
    )
}

fn cli_examples() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_pinj");
    let run = |args: &[&str]| Command::new(bin).args(args).output();
    let mut notes = Vec::new();
    let mut ok = true;

    match run(&[
        "decompose",
        "--n",
        "10",
        "--chart",
        "(1,7,2,4)[3,5,10][9,6][8]",
    ]) {
        Ok(o) => {
            let v: Result<serde_json::Value, _> = serde_json::from_slice(&o.stdout);
            let good = o.status.code() == Some(0)
                && v.as_ref()
                    .is_ok_and(|v| v["rank"] == 7 && v["defect"] == 3 && v["stable_rank"] == 4);
            ok &= good;
            notes.push(format!("decompose {good}"));
        }
        Err(e) => {
            ok = false;
            notes.push(e.to_string());
        }
    }
    match run(&["count", "--n", "3", "--field", "card_is"]) {
        Ok(o) => {
            let v: Result<serde_json::Value, _> = serde_json::from_slice(&o.stdout);
            let good = o.status.code() == Some(0) && v.is_ok_and(|v| v == "34");
            ok &= good;
            notes.push(format!("count {good}"));
        }
        Err(e) => {
            ok = false;
            notes.push(e.to_string());
        }
    }
    match run(&["verify", "--n", "5", "--all"]) {
        Ok(o) => {
            let v: Result<serde_json::Value, _> = serde_json::from_slice(&o.stdout);
            let good = o.status.code() == Some(0)
                && v.is_ok_and(|v| {
                    v["checks"]
                        .as_array()
                        .is_some_and(|cs| !cs.is_empty() && cs.iter().all(|c| c["passed"] == true))
                });
            ok &= good;
            notes.push(format!("verify {good}"));
        }
        Err(e) => {
            ok = false;
            notes.push(e.to_string());
        }
    }
    outcome(ok, notes.join(", "))
}

struct Criterion {
    id: u32,
    title: &'static str,
    run: fn() -> Outcome,
    /// Whether the criterion is expected to hold. Only the n = 300 growth
    /// checkpoint inside criterion 9 is known not to.
    expected: bool,
}

fn main() {
    let criteria = [
        Criterion {
            id: 1,
            title: "domain probabilities in IS_3",
            run: domain_probabilities_in_is3,
            expected: true,
        },
        Criterion {
            id: 2,
            title: "count table equals enumeration, n <= 7",
            run: count_table_matches_enumeration,
            expected: true,
        },
        Criterion {
            id: 3,
            title: "identity suite",
            run: identity_suite,
            expected: true,
        },
        Criterion {
            id: 4,
            title: "bijection round trips, n <= 5",
            run: bijection_round_trips,
            expected: true,
        },
        Criterion {
            id: 5,
            title: "random products exact",
            run: random_products_exact,
            expected: true,
        },
        Criterion {
            id: 6,
            title: "spectral suite, n <= 50",
            run: spectral_suite,
            expected: true,
        },
        Criterion {
            id: 7,
            title: "top rank, sandwich, reduction",
            run: closed_forms_and_reduction,
            expected: true,
        },
        Criterion {
            id: 8,
            title: "Monte Carlo (3, 2, 10^6)",
            run: monte_carlo_check,
            expected: true,
        },
        Criterion {
            id: 9,
            title: "asymptotics at finite n",
            run: asymptotics_checks,
            expected: false,
        },
        Criterion {
            id: 10,
            title: "CLI examples",
            run: cli_examples,
            expected: true,
        },
    ];
    let mut surprises = 0;
    for c in &criteria {
        let start = Instant::now();
        let o = (c.run)();
        let secs = start.elapsed().as_secs_f64();
        let mark = if o.passed { "PASS" } else { "FAIL" };
        let note = match (o.passed, c.expected) {
            (false, false) => " [known unattainable]",
            (true, false) => " [unexpected pass]",
            _ => "",
        };
        println!(
            "{mark} criterion {}: {} ({secs:.2}s){note}: {}",
            c.id,
            c.title,
            o.detail.trim_end()
        );
        if o.passed != c.expected {
            surprises += 1;
        }
    }
    if surprises > 0 {
        eprintln!("{surprises} criteria differ from their expected outcome");
        std::process::exit(1);
    }
}
