//! The `pinj` command line: every capability of the library as a
//! subcommand with JSON, CSV or plain-text output.
//!
//! Exit status is 0 on success, 1 when a verification fails and 2 on usage
//! or input errors. Diagnostics go to standard error.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::asymptotics::{growth_report, mod_distribution, unimodality_report};
use crate::bijections::{sweep, Bijection};
use crate::chart::parse_chart;
use crate::counting::{
    budget_from_env, count_table, verify_identities_with, Sequences, VerifyOptions, FIELD_NAMES,
    IDENTITY_NAMES,
};
use crate::element::PartialInjection;
use crate::random_products::{
    cross_checks, eigenbasis, monte_carlo, rank_distribution, verify_spectral_identities,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Parser)]
#[command(
    name = "pinj",
    version,
    about = "Partial injections and the symmetric inverse semigroup"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
    /// Maximum number of elements an enumeration may visit (overrides PINJ_BUDGET).
    #[arg(long, global = true)]
    pub budget: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Chart decomposition and invariants of one element.
    Decompose(ElementArgs),
    /// Left-to-right product of two or more elements.
    Compose(ElementArgs),
    /// Closed-form counts for IS_n.
    Count(CountArgs),
    /// Check the counting identities at one n.
    Verify(VerifyArgs),
    /// Exhaustive round-trip sweeps of the bijections.
    Bijection(BijectionArgs),
    /// Exact rank distribution of a product of k random elements.
    Distribution(DistributionArgs),
    /// Monte Carlo estimate of the rank distribution.
    Simulate(SimulateArgs),
    /// Growth, unimodality and residue reports.
    Asymptotics(AsymptoticsArgs),
}

#[derive(Debug, Args)]
pub struct ElementArgs {
    #[arg(long)]
    pub n: usize,
    /// Element in chart notation, e.g. "(1,7,2,4)[3,5,10][9,6][8]".
    #[arg(long)]
    pub chart: Vec<String>,
    /// Element as a JSON list of [x, y] pairs.
    #[arg(long)]
    pub pairs: Vec<String>,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub field: Option<String>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub n: usize,
    /// Run every identity (the default).
    #[arg(long, conflicts_with = "identity")]
    pub all: bool,
    #[arg(long)]
    pub identity: Option<String>,
}

#[derive(Debug, Args)]
pub struct BijectionArgs {
    #[arg(long)]
    pub n: usize,
    /// Run every bijection (the default).
    #[arg(long, conflicts_with = "identity")]
    pub all: bool,
    /// One bijection by name.
    #[arg(long)]
    pub identity: Option<String>,
}

#[derive(Debug, Args)]
pub struct DistributionArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    /// Also emit the transition eigenbasis and the exact cross-checks.
    #[arg(long)]
    pub all: bool,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub trials: u64,
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Args)]
pub struct AsymptoticsArgs {
    #[arg(long)]
    pub n: usize,
    /// Also group the ranks of IS_n by residue modulo m.
    #[arg(long)]
    pub m: Option<usize>,
}

/// Outcome of a command before it is written out.
enum Outcome {
    Ok,
    Failed,
}

type CmdResult = Result<Outcome, String>;

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    format: Format,
}

impl Io<'_> {
    fn json<T: Serialize>(&mut self, value: &T) -> Result<(), String> {
        let s = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
        writeln!(self.out, "{s}").map_err(|e| e.to_string())
    }

    fn line(&mut self, text: impl std::fmt::Display) -> Result<(), String> {
        writeln!(self.out, "{text}").map_err(|e| e.to_string())
    }

    fn csv<T: Serialize>(&mut self, rows: &[T]) -> Result<(), String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        for r in rows {
            w.serialize(r).map_err(|e| e.to_string())?;
        }
        let bytes = w.into_inner().map_err(|e| e.to_string())?;
        self.out.write_all(&bytes).map_err(|e| e.to_string())
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    let budget = cli.budget.unwrap_or_else(budget_from_env);
    let mut io = Io {
        out,
        err,
        format: cli.format,
    };
    let result = match cli.command {
        Command::Decompose(a) => decompose(&mut io, a),
        Command::Compose(a) => compose(&mut io, a),
        Command::Count(a) => count(&mut io, a),
        Command::Verify(a) => verify(&mut io, a, budget),
        Command::Bijection(a) => bijection(&mut io, a, budget),
        Command::Distribution(a) => distribution(&mut io, a),
        Command::Simulate(a) => simulate(&mut io, a),
        Command::Asymptotics(a) => asymptotics(&mut io, a),
    };
    match result {
        Ok(Outcome::Ok) => 0,
        Ok(Outcome::Failed) => 1,
        Err(msg) => {
            let _ = writeln!(io.err, "error: {msg}");
            2
        }
    }
}

fn elements(a: &ElementArgs) -> Result<Vec<PartialInjection>, String> {
    let mut out = Vec::new();
    for c in &a.chart {
        out.push(parse_chart(c, a.n).map_err(|e| format!("--chart {c:?}: {e}"))?);
    }
    for p in &a.pairs {
        let pairs: Vec<(usize, usize)> =
            serde_json::from_str(p).map_err(|e| format!("--pairs {p:?}: {e}"))?;
        out.push(
            PartialInjection::from_pairs(a.n, &pairs).map_err(|e| format!("--pairs {p:?}: {e}"))?,
        );
    }
    Ok(out)
}

#[derive(Serialize)]
struct Described {
    element: PartialInjection,
    chart: String,
    cycles: Vec<Vec<usize>>,
    chains: Vec<Vec<usize>>,
    #[serde(flatten)]
    profile: crate::element::Profile,
}

#[derive(Serialize)]
struct DescribedRow {
    n: usize,
    chart: String,
    rank: usize,
    defect: usize,
    stable_rank: usize,
    is_nilpotent: bool,
    nilpotency_index: usize,
    fixed_point_count: usize,
}

fn describe(io: &mut Io, a: &PartialInjection) -> CmdResult {
    let chart = a.chart();
    let profile = a.profile();
    match io.format {
        Format::Json => io.json(&Described {
            element: a.clone(),
            chart: chart.to_string(),
            cycles: chart.cycles.clone(),
            chains: chart.chains.clone(),
            profile,
        })?,
        Format::Csv => io.csv(&[DescribedRow {
            n: a.n(),
            chart: chart.to_string(),
            rank: profile.rank,
            defect: profile.defect,
            stable_rank: profile.stable_rank,
            is_nilpotent: profile.is_nilpotent,
            nilpotency_index: profile.nilpotency_index,
            fixed_point_count: profile.fixed_point_count,
        }])?,
        Format::Text => {
            io.line(&chart)?;
            io.line(format!(
                "rank {} defect {} stable rank {} nilpotent {} fixed points {}",
                profile.rank,
                profile.defect,
                profile.stable_rank,
                profile.is_nilpotent,
                profile.fixed_point_count
            ))?;
        }
    }
    Ok(Outcome::Ok)
}

fn decompose(io: &mut Io, a: ElementArgs) -> CmdResult {
    let els = elements(&a)?;
    match els.as_slice() {
        [x] => describe(io, x),
        _ => Err("decompose takes exactly one --chart or --pairs".into()),
    }
}

fn compose(io: &mut Io, a: ElementArgs) -> CmdResult {
    let els = elements(&a)?;
    if els.len() < 2 {
        return Err("compose needs at least two elements".into());
    }
    let mut product = els[0].clone();
    for x in &els[1..] {
        product = product.compose(x).map_err(|e| e.to_string())?;
    }
    describe(io, &product)
}

fn count(io: &mut Io, a: CountArgs) -> CmdResult {
    let table = count_table(a.n);
    if let Some(field) = &a.field {
        let value = table.field(field).ok_or_else(|| {
            format!(
                "unknown field {field:?}; expected one of {}",
                FIELD_NAMES.join(", ")
            )
        })?;
        match io.format {
            Format::Json => io.json(&value)?,
            Format::Csv | Format::Text => io.line(plain(&value))?,
        }
        return Ok(Outcome::Ok);
    }
    match io.format {
        Format::Json => io.json(&table)?,
        Format::Csv => {
            let value = serde_json::to_value(&table).map_err(|e| e.to_string())?;
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(FIELD_NAMES).map_err(|e| e.to_string())?;
            w.write_record(FIELD_NAMES.iter().map(|f| plain(&value[*f])))
                .map_err(|e| e.to_string())?;
            let bytes = w.into_inner().map_err(|e| e.to_string())?;
            io.out.write_all(&bytes).map_err(|e| e.to_string())?;
        }
        Format::Text => {
            let value = serde_json::to_value(&table).map_err(|e| e.to_string())?;
            for f in FIELD_NAMES {
                io.line(format!("{f}: {}", plain(&value[f])))?;
            }
        }
    }
    Ok(Outcome::Ok)
}

/// Scalar rendering of a count-table value: strings bare, rationals as
/// `a/b`, lists joined with `;`.
fn plain(v: &serde_json::Value) -> String {
    use serde_json::Value;
    match v {
        Value::String(s) => s.clone(),
        Value::Array(xs) => xs.iter().map(plain).collect::<Vec<_>>().join(";"),
        Value::Object(o) => match (o.get("num"), o.get("den")) {
            (Some(a), Some(b)) => format!("{}/{}", plain(a), plain(b)),
            _ => v.to_string(),
        },
        other => other.to_string(),
    }
}

fn verify(io: &mut Io, a: VerifyArgs, budget: u64) -> CmdResult {
    if let Some(name) = &a.identity {
        if !IDENTITY_NAMES.contains(&name.as_str()) {
            return Err(format!(
                "unknown identity {name:?}; expected one of {}",
                IDENTITY_NAMES.join(", ")
            ));
        }
    }
    let opts = VerifyOptions {
        budget,
        ..VerifyOptions::default()
    };
    let mut report =
        verify_identities_with(&Sequences::up_to(a.n + 1), a.n, opts).map_err(|e| e.to_string())?;
    if let Some(name) = &a.identity {
        report.checks.retain(|c| &c.name == name);
        if report.checks.is_empty() {
            return Err(format!("identity {name:?} does not apply at n = {}", a.n));
        }
    }
    match io.format {
        Format::Json => io.json(&report)?,
        Format::Csv => {
            #[derive(Serialize)]
            struct Row<'a> {
                n: usize,
                name: &'a str,
                method: String,
                passed: bool,
                closed_form: String,
                independent: String,
            }
            let rows: Vec<Row> = report
                .checks
                .iter()
                .map(|c| Row {
                    n: report.n,
                    name: &c.name,
                    method: format!("{:?}", c.method).to_lowercase(),
                    passed: c.passed,
                    closed_form: c.closed_form.join(";"),
                    independent: c.independent.join(";"),
                })
                .collect();
            io.csv(&rows)?;
        }
        Format::Text => write!(io.out, "{report}").map_err(|e| e.to_string())?,
    }
    Ok(if report.all_passed() {
        Outcome::Ok
    } else {
        Outcome::Failed
    })
}

fn bijection(io: &mut Io, a: BijectionArgs, budget: u64) -> CmdResult {
    let selected: Vec<Bijection> = match &a.identity {
        Some(name) => vec![Bijection::from_name(name).ok_or_else(|| {
            let names: Vec<&str> = Bijection::ALL.iter().map(|b| b.name()).collect();
            format!(
                "unknown bijection {name:?}; expected one of {}",
                names.join(", ")
            )
        })?],
        None => Bijection::ALL.to_vec(),
    };
    let mut reports = Vec::new();
    for b in selected {
        reports.push(sweep(b, a.n, budget).map_err(|e| e.to_string())?);
    }
    let ok = reports.iter().all(|r| r.passed());
    match io.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                passed: bool,
                sweeps: &'a [crate::bijections::SweepReport],
            }
            io.json(&Out {
                passed: ok,
                sweeps: &reports,
            })?
        }
        Format::Csv => {
            #[derive(Serialize)]
            struct Row {
                bijection: String,
                n: usize,
                domain_size: usize,
                codomain_size: usize,
                expected_size: String,
                left_inverse: bool,
                right_inverse: bool,
                injective: bool,
                passed: bool,
            }
            let rows: Vec<Row> = reports
                .iter()
                .map(|r| Row {
                    bijection: r.bijection.to_string(),
                    n: r.n,
                    domain_size: r.domain_size,
                    codomain_size: r.codomain_size,
                    expected_size: r.expected_size.to_string(),
                    left_inverse: r.left_inverse,
                    right_inverse: r.right_inverse,
                    injective: r.injective,
                    passed: r.passed(),
                })
                .collect();
            io.csv(&rows)?;
        }
        Format::Text => {
            for r in &reports {
                io.line(r)?;
                for f in &r.failures {
                    writeln!(io.err, "  {f}").map_err(|e| e.to_string())?;
                }
            }
        }
    }
    Ok(if ok { Outcome::Ok } else { Outcome::Failed })
}

fn distribution(io: &mut Io, a: DistributionArgs) -> CmdResult {
    let dist = rank_distribution(a.n, a.k).map_err(|e| e.to_string())?;
    if a.all {
        let checks = cross_checks(a.n, a.k, 12).map_err(|e| e.to_string())?;
        let spectral = verify_spectral_identities(a.n);
        let ok = checks.passed() && spectral.all_passed();
        match io.format {
            Format::Json => {
                #[derive(Serialize)]
                struct Out<'a> {
                    distribution: &'a crate::random_products::RankDistribution,
                    cross_checks: &'a crate::random_products::CrossChecks,
                    spectral: &'a crate::random_products::SpectralReport,
                    eigenbasis: Vec<crate::random_products::Eigenpair>,
                }
                io.json(&Out {
                    distribution: &dist,
                    cross_checks: &checks,
                    spectral: &spectral,
                    eigenbasis: eigenbasis(a.n),
                })?
            }
            Format::Csv => distribution_csv(io, &dist)?,
            Format::Text => {
                write!(io.out, "{dist}").map_err(|e| e.to_string())?;
                io.line(format!("cross-checks passed: {}", checks.passed()))?;
                write!(io.out, "{spectral}").map_err(|e| e.to_string())?;
            }
        }
        return Ok(if ok { Outcome::Ok } else { Outcome::Failed });
    }
    match io.format {
        Format::Json => io.json(&dist)?,
        Format::Csv => distribution_csv(io, &dist)?,
        Format::Text => write!(io.out, "{dist}").map_err(|e| e.to_string())?,
    }
    Ok(Outcome::Ok)
}

fn distribution_csv(
    io: &mut Io,
    dist: &crate::random_products::RankDistribution,
) -> Result<(), String> {
    #[derive(Serialize)]
    struct Row {
        n: usize,
        k: usize,
        rank: usize,
        p: String,
        rank_probability: String,
    }
    let rows: Vec<Row> = dist
        .p
        .iter()
        .zip(dist.by_rank())
        .enumerate()
        .map(|(i, (p, q))| Row {
            n: dist.n,
            k: dist.k,
            rank: i,
            p: p.to_string(),
            rank_probability: q.to_string(),
        })
        .collect();
    io.csv(&rows)
}

fn simulate(io: &mut Io, a: SimulateArgs) -> CmdResult {
    let seed = match a.seed {
        Some(s) => s,
        None => {
            let s: u64 = rand::random();
            writeln!(io.err, "seed {s}").map_err(|e| e.to_string())?;
            s
        }
    };
    let report = monte_carlo(a.n, a.k, a.trials, seed).map_err(|e| e.to_string())?;
    match io.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                #[serde(flatten)]
                report: &'a crate::random_products::SampleReport,
                within_tolerance: bool,
                outliers: Vec<usize>,
            }
            io.json(&Out {
                report: &report,
                within_tolerance: report.within_tolerance(),
                outliers: report.outliers(),
            })?
        }
        Format::Csv => {
            #[derive(Serialize)]
            struct Row {
                n: usize,
                k: usize,
                trials: u64,
                seed: u64,
                rank: usize,
                hits: u64,
                empirical: String,
                exact: String,
            }
            let rows: Vec<Row> = report
                .rank_histogram
                .iter()
                .zip(&report.empirical)
                .zip(report.reference.by_rank())
                .enumerate()
                .map(|(i, ((h, e), q))| Row {
                    n: report.n,
                    k: report.k,
                    trials: report.trials,
                    seed: report.seed,
                    rank: i,
                    hits: *h,
                    empirical: e.to_string(),
                    exact: q.to_string(),
                })
                .collect();
            io.csv(&rows)?;
        }
        Format::Text => io.line(&report)?,
    }
    Ok(Outcome::Ok)
}

fn asymptotics(io: &mut Io, a: AsymptoticsArgs) -> CmdResult {
    let growth = growth_report(a.n).map_err(|e| e.to_string())?;
    let unimodal = unimodality_report(a.n).map_err(|e| e.to_string())?;
    let residues =
        a.m.map(|m| mod_distribution(a.n, m))
            .transpose()
            .map_err(|e| e.to_string())?;
    let ok = growth.bounds_hold()
        && growth.sums_hold()
        && growth.ratios_at_least_one()
        && unimodal.passed();
    match io.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Summary {
                ratio_bounds: bool,
                next_size_sums: bool,
                growth_at_least_one: bool,
                t_growth_decreasing_from: Option<usize>,
                is_growth_decreasing_from: Option<usize>,
                nilpotent_share_decreasing_from: Option<usize>,
            }
            #[derive(Serialize)]
            struct Out<'a> {
                passed: bool,
                summary: Summary,
                growth: &'a crate::asymptotics::GrowthReport,
                unimodality: &'a crate::asymptotics::UnimodalityReport,
                #[serde(skip_serializing_if = "Option::is_none")]
                residues: Option<&'a crate::asymptotics::ModReport>,
            }
            io.json(&Out {
                passed: ok,
                summary: Summary {
                    ratio_bounds: growth.bounds_hold(),
                    next_size_sums: growth.sums_hold(),
                    growth_at_least_one: growth.ratios_at_least_one(),
                    t_growth_decreasing_from: growth.t_growth_burn_in(),
                    is_growth_decreasing_from: growth.is_growth_burn_in(),
                    nilpotent_share_decreasing_from: growth.nilpotent_share_decreasing_from(),
                },
                growth: &growth,
                unimodality: &unimodal,
                residues: residues.as_ref(),
            })?
        }
        Format::Csv => {
            let mut buf = Vec::new();
            growth.write_csv(&mut buf).map_err(|e| e.to_string())?;
            io.out.write_all(&buf).map_err(|e| e.to_string())?;
        }
        Format::Text => {
            io.line(&growth)?;
            write!(io.out, "{unimodal}").map_err(|e| e.to_string())?;
            if let Some(r) = &residues {
                io.line(r)?;
            }
        }
    }
    Ok(if ok { Outcome::Ok } else { Outcome::Failed })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("pinj").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn count_field() {
        let (code, out, _) = run_capture(&["count", "--n", "3", "--field", "card_is"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), "\"34\"");
        let (_, out, _) = run_capture(&[
            "count", "--n", "3", "--field", "card_is", "--format", "text",
        ]);
        assert_eq!(out.trim(), "34");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_capture(&["count"]).0, 2);
        assert_eq!(run_capture(&["frobnicate"]).0, 2);
        assert_eq!(
            run_capture(&["decompose", "--n", "3", "--chart", "(1,2"]).0,
            2
        );
        assert_eq!(
            run_capture(&["verify", "--n", "3", "--identity", "nope"]).0,
            2
        );
        let (code, _, err) = run_capture(&["bijection", "--n", "6", "--budget", "100"]);
        assert_eq!(code, 2);
        assert!(err.contains("budget"), "{err}");
    }

    #[test]
    fn compose_left_to_right() {
        let (code, out, _) = run_capture(&[
            "compose", "--n", "3", "--chart", "[1,2][3]", "--chart", "[2,3][1]", "--format", "text",
        ]);
        assert_eq!(code, 0);
        assert!(out.starts_with("[1,3][2]"), "{out}");
    }
}
