//! Exact checks of the counting identities for IS_n and T_n.
//!
//! Each check compares a closed-form side with an independent side. When
//! `n` is small enough the independent side is a brute-force tally over the
//! semigroup; otherwise it is a second closed-form route to the same number.

use std::fmt;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::enumerate::DEFAULT_BUDGET;
use super::sequences::{lah, lah_row, partial_injection_count, rank_count, Sequences};
use super::table::{count_table_with, CountTable};
use super::tally::{tally, Tally};
use crate::arith::{binomial, factorial, to_int};
use crate::error::Result;

type Q = BigRational;

fn q(x: &BigUint) -> Q {
    Q::from_integer(to_int(x))
}

fn qu(x: u64) -> Q {
    Q::from_integer(x.into())
}

fn qs(xs: &[BigUint]) -> Vec<Q> {
    xs.iter().map(q).collect()
}

fn qus(xs: &[u64]) -> Vec<Q> {
    xs.iter().map(|&x| qu(x)).collect()
}

fn render(q: &Q) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// Independent side tallied by enumerating the semigroup.
    Enumeration,
    /// Independent side computed through a second closed form.
    ClosedForm,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub name: String,
    pub statement: String,
    pub closed_form: Vec<String>,
    pub independent: Vec<String>,
    pub method: Method,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub n: usize,
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(
                f,
                "{} n={} {:<40} {:?}: {} vs {}",
                if c.passed { "PASS" } else { "FAIL" },
                self.n,
                c.name,
                c.method,
                c.closed_form.join(","),
                c.independent.join(",")
            )?;
        }
        Ok(())
    }
}

/// Names of every identity, in report order.
pub const IDENTITY_NAMES: [&str; 23] = [
    "nilpotent_count_by_defect",
    "lah_defect_relation",
    "stable_rank_distribution",
    "chains_and_cycles_by_length",
    "total_chains",
    "rank_defect_average",
    "total_chains_two_ways",
    "average_components",
    "total_stable_rank",
    "fixed_points",
    "orbit_of_one_total",
    "orbit_of_one_by_length",
    "nilpotent_orbit_of_one_by_length",
    "nilpotent_with_singleton_one",
    "nilpotent_count_from_chains",
    "semigroup_from_nilpotent_chains",
    "nilpotent_recursion",
    "semigroup_from_nilpotents",
    "stable_rank_decomposition",
    "nilpotent_convolution",
    "nilpotents_as_partial_injections",
    "idempotent_count",
    "domain_non_independence",
];

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    /// Largest `n` whose independent side is enumerated.
    pub enumeration_limit: usize,
    pub budget: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            enumeration_limit: 7,
            budget: DEFAULT_BUDGET,
        }
    }
}

pub fn verify_identities(n: usize) -> Result<IdentityReport> {
    verify_identities_with(&Sequences::up_to(n + 1), n, VerifyOptions::default())
}

/// Runs every applicable identity at `n`; `seq` must reach `n + 1`.
pub fn verify_identities_with(
    seq: &Sequences,
    n: usize,
    opts: VerifyOptions,
) -> Result<IdentityReport> {
    assert!(seq.max() > n, "sequences must reach n + 1");
    let enumerated = if n <= opts.enumeration_limit {
        Some(tally(n, opts.budget)?)
    } else {
        None
    };
    let enumerated_next = if n < opts.enumeration_limit {
        Some(tally(n + 1, opts.budget)?)
    } else {
        None
    };
    let ctx = Context {
        n,
        seq,
        table: count_table_with(seq, n),
        e: enumerated.as_ref(),
        e_next: enumerated_next.as_ref(),
    };
    let builders: [fn(&Context) -> Option<IdentityCheck>; 23] = [
        nilpotent_count_by_defect,
        lah_defect_relation,
        stable_rank_distribution,
        chains_and_cycles_by_length,
        total_chains,
        rank_defect_average,
        total_chains_two_ways,
        average_components,
        total_stable_rank,
        fixed_points,
        orbit_of_one_total,
        orbit_of_one_by_length,
        nilpotent_orbit_of_one_by_length,
        nilpotent_with_singleton_one,
        nilpotent_count_from_chains,
        semigroup_from_nilpotent_chains,
        nilpotent_recursion,
        semigroup_from_nilpotents,
        stable_rank_decomposition,
        nilpotent_convolution,
        nilpotents_as_partial_injections,
        idempotent_count,
        domain_non_independence,
    ];
    let checks = builders.iter().filter_map(|b| b(&ctx)).collect();
    Ok(IdentityReport { n, checks })
}

struct Context<'a> {
    n: usize,
    seq: &'a Sequences,
    table: CountTable,
    e: Option<&'a Tally>,
    e_next: Option<&'a Tally>,
}

impl Context<'_> {
    fn is(&self, m: usize) -> Q {
        q(&self.seq.semigroup[m])
    }

    fn t(&self, m: usize) -> Q {
        q(&self.seq.nilpotent[m])
    }

    fn chains(&self, m: usize) -> Q {
        q(&self.seq.chains[m])
    }

    fn falling(&self, n: usize, k: usize) -> Q {
        q(&self.seq.falling(n, k))
    }

    fn method(&self) -> Method {
        if self.e.is_some() {
            Method::Enumeration
        } else {
            Method::ClosedForm
        }
    }

    fn n_q(&self) -> Q {
        qu(self.n as u64)
    }
}

fn check(
    ctx: &Context,
    name: &str,
    statement: &str,
    closed_form: Vec<Q>,
    independent: Vec<Q>,
) -> Option<IdentityCheck> {
    check_with(name, statement, closed_form, independent, ctx.method())
}

fn check_with(
    name: &str,
    statement: &str,
    closed_form: Vec<Q>,
    independent: Vec<Q>,
    method: Method,
) -> Option<IdentityCheck> {
    let passed = closed_form == independent;
    Some(IdentityCheck {
        name: name.to_string(),
        statement: statement.to_string(),
        closed_form: closed_form.iter().map(render).collect(),
        independent: independent.iter().map(render).collect(),
        method,
        passed,
    })
}

fn nilpotent_count_by_defect(ctx: &Context) -> Option<IdentityCheck> {
    let n = ctx.n;
    if n == 0 {
        return None;
    }
    let nq = ctx.n_q();
    let by_defect: Q = (1..=n)
        .map(|k| qu(k as u64) * q(&ctx.table.d[k]) / &nq)
        .sum();
    let by_rank: Q = (0..=n)
        .map(|k| qu((n - k) as u64) * q(&ctx.table.r[k]) / &nq)
        .sum();
    let mut closed = vec![by_defect, by_rank];
    closed.extend((1..=n).map(|k| q(&lah(n, k))));
    let independent = match ctx.e {
        Some(e) => {
            let mut v = vec![qu(e.nilpotents), qu(e.nilpotents)];
            v.extend(qus(&e.nilpotent_by_defect[1..]));
            v
        }
        None => {
            // Lah numbers through the ratio L'(n,k+1)/L'(n,k) = (n-k)/(k(k+1)).
            let mut row = vec![q(&factorial(n))];
            for k in 1..n {
                let next = row[k - 1].clone() * qu((n - k) as u64) / qu((k * (k + 1)) as u64);
                row.push(next);
            }
            let total: Q = row.iter().cloned().sum();
            let mut v = vec![total.clone(), total];
            v.extend(row);
            v
        }
    };
    check(
        ctx,
        "nilpotent_count_by_defect",
        "|T_n| = Σ (k/n) D_{n,k} = Σ ((n-k)/n) R_{n,k}; nilpotents of defect k = L'(n,k)",
        closed,
        independent,
    )
}

fn lah_defect_relation(ctx: &Context) -> Option<IdentityCheck> {
    let n = ctx.n;
    if n == 0 {
        return None;
    }
    let closed = (1..=n).map(|k| ctx.n_q() * q(&lah(n, k))).collect();
    let independent = match ctx.e {
        Some(e) => (1..=n).map(|k| qu(k as u64 * e.by_defect[k])).collect(),
        None => (1..=n).map(|k| qu(k as u64) * q(&ctx.table.d[k])).collect(),
    };
    check(
        ctx,
        "lah_defect_relation",
        "n L'(n,k) = k D_{n,k}",
        closed,
        independent,
    )
}

fn stable_rank_distribution(ctx: &Context) -> Option<IdentityCheck> {
    let n = ctx.n;
    // Literal Lah sum for k < n; the k = n class uses |T_0| = 1.
    let closed: Vec<Q> = (0..=n)
        .map(|k| {
            let tail: BigUint = if k == n {
                BigUint::one()
            } else {
                lah_row(n - k).into_iter().sum()
            };
            ctx.falling(n, k) * q(&tail)
        })
        .collect();
    match ctx.e {
        Some(e) => check(
            ctx,
            "stable_rank_distribution",
            "St_{n,k} = [n]_k Σ_i L'(n-k,i)",
            closed,
            qus(&e.by_stable_rank),
        ),
        None => check(
            ctx,
            "stable_rank_distribution",
            "Σ_k St_{n,k} = |IS_n|",
            vec![closed.into_iter().sum()],
            vec![ctx.is(n)],
        ),
    }
}

fn chains_and_cycles_by_length(ctx: &Context) -> Option<IdentityCheck> {
    let n = ctx.n;
    let mut closed = qs(&ctx.table.chains_by_length);
    closed.extend(qs(&ctx.table.cycles_by_length));
    match ctx.e {
        Some(e) => {
            let mut ind = qus(&e.chains_by_length[1..]);
            ind.extend(qus(&e.cycles_by_length[1..]));
            check(
                ctx,
                "chains_and_cycles_by_length",
                "L_{n,k} = [n]_k |IS_{n-k}|, C_{n,k} = [n]_k |IS_{n-k}| / k",
                closed,
                ind,
            )
        }
        None => {
            let chains: Q = qs(&ctx.table.chains_by_length).into_iter().sum();
            let weighted: Q = (1..=n)
                .map(|k| qu(k as u64) * q(&ctx.table.cycles_by_length[k - 1]))
                .sum();
            check(
                ctx,
                "chains_and_cycles_by_length",
                "Σ_k L_{n,k} = L_n and Σ_k k C_{n,k} = L_n",
                vec![chains, weighted],
                vec![ctx.chains(n), ctx.chains(n)],
            )
        }
    }
}

fn total_chains(ctx: &Context) -> Option<IdentityCheck> {
    let n = ctx.n;
    let closed: Q = (0..=n)
        .map(|k| qu((n - k) as u64) * q(&rank_count(n, k)))
        .sum();
    let independent = match ctx.e {
        Some(e) => qu(e.chains),
        None => (0..=n).map(|k| qu(k as u64) * q(&ctx.table.d[k])).sum(),
    };
    check(
        ctx,
        "total_chains",
        "L_n = Σ (n-k) R_{n,k}",
        vec![closed],
        vec![independent],
    )
}

fn rank_defect_average(ctx: &Context) -> Option<IdentityCheck> {
    let n = ctx.n;
    if n == 0 {
        return None;
    }
    let closed: Q = (1..=n)
        .map(|k| qu(k as u64) * q(&ctx.table.r[k]) + ctx.falling(n, k) * ctx.is(n - k))
        .sum::<Q>()
        / ctx.n_q();
    let independent = match ctx.e {
        Some(e) => qu(e.rank_sum + e.chains) / ctx.n_q(),
        None => ctx.is(n),
    };
    check(
        ctx,
        "rank_defect_average",
        "(1/n) Σ (k R_{n,k} + [n]_k |IS_{n-k}|) = |IS_n|",
        vec![closed],
        vec![independent],
    )
}

fn total_chains_two_ways(ctx: &Context) -> Option<IdentityCheck> {
    let n = ctx.n;
    let lhs: Q = (0..n)
        .map(|k| {
            let c = binomial(n, k);
            qu((n - k) as u64) * q(&(&c * &c * factorial(k)))
        })
        .sum();
    let rhs: Q = (1..=n).map(|k| ctx.falling(n, k) * ctx.is(n - k)).sum();
    let mut independent = vec![rhs];
    if let Some(e) = ctx.e {
        independent.push(qu(e.chains));
    } else {
        independent.push(ctx.chains(n));
    }
    check(
        ctx,
        "total_chains_two_ways",
        "Σ (n-k) C(n,k)² k! = Σ [n]_k |IS_{n-k}|",
        vec![lhs.clone(), lhs],
        independent,
    )
}

fn average_components(ctx: &Context) -> Option<IdentityCheck> {
    let n = ctx.n;
    let independent = match ctx.e {
        Some(e) => qu(e.components()) / qu(e.elements),
        None => {
            (1..=n)
                .map(|k| {
                    ctx.falling(n, k)
                        * (Q::one() + Q::new(1.into(), (k as u64).into()))
                        * ctx.is(n - k)
                })
                .sum::<Q>()
                / ctx.is(n)
        }
    };
    check(
        ctx,
        "average_components",
        "c_n = b_n^{-1} Σ (1 + 1/k) b_{n-k}",
        vec![ctx.table.c_avg.clone()],
        vec![independent],
    )
}

fn total_stable_rank(ctx: &Context) -> Option<IdentityCheck> {
    let n = ctx.n;
    let independent = match ctx.e {
        Some(e) => qu(e.stable_rank_sum),
        None => (0..=n).map(|k| qu(k as u64) * q(&ctx.table.st[k])).sum(),
    };
    check(
        ctx,
        "total_stable_rank",
        "L_n = Σ_α st.rank(α)",
        vec![ctx.chains(n)],
        vec![independent],
    )
}

fn fixed_points(ctx: &Context) -> Option<IdentityCheck> {
    let n = ctx.n;
    if n == 0 {
        return None;
    }
    let (p, l) = match ctx.e {
        Some(e) => (qu(e.fixed_points), qu(e.chains)),
        None => (q(&ctx.table.fixed_points_total), ctx.chains(n)),
    };
    check(
        ctx,
        "fixed_points",
        "P_n + L_n / n = |IS_n|",
        vec![ctx.is(n)],
        vec![p + l / ctx.n_q()],
    )
}

fn orbit_of_one_total(ctx: &Context) -> Option<IdentityCheck> {
    let n = ctx.n;
    if n == 0 {
        return None;
    }
    let independent = match ctx.e {
        Some(e) => e
            .orbit_of_one
            .iter()
            .enumerate()
            .map(|(k, &c)| qu(k as u64 * c))
            .sum(),
        None => ctx
            .table
            .orbit_counts
            .iter()
            .enumerate()
            .map(|(k, c)| qu(k as u64) * q(c))
            .sum(),
    };
    check(
        ctx,
        "orbit_of_one_total",
        "Σ_α |orbit_α(1)| = L_n",
        vec![ctx.chains(n)],
        vec![independent],
    )
}

fn orbit_of_one_by_length(ctx: &Context) -> Option<IdentityCheck> {
    let n = ctx.n;
    if n == 0 {
        return None;
    }
    let closed = qs(&ctx.table.orbit_counts);
    match ctx.e {
        Some(e) => check(
            ctx,
            "orbit_of_one_by_length",
            "l_{n,0} = |T_n|, l_{n,1} = |IS_{n-1}|, l_{n,k} = [n-1]_{k-1} (L_{n-k} + 2|IS_{n-k}|)",
            closed,
            qus(&e.orbit_of_one),
        ),
        None => check(
            ctx,
            "orbit_of_one_by_length",
            "Σ_k l_{n,k} = |IS_n|",
            vec![closed.into_iter().sum()],
            vec![ctx.is(n)],
        ),
    }
}

fn nilpotent_orbit_of_one_by_length(ctx: &Context) -> Option<IdentityCheck> {
    let n = ctx.n;
    if n == 0 {
        return None;
    }
    let closed = qs(&ctx.table.orbit_counts_nilpotent);
    match ctx.e {
        Some(e) => check(
            ctx,
            "nilpotent_orbit_of_one_by_length",
            "l^{n,0} = |IS_{n-1}|, l^{n,k} = [n-1]_{k-1} (L^(n-k) + |T_{n-k}|)",
            closed,
            qus(&e.nilpotent_orbit_of_one),
        ),
        None => check(
            ctx,
            "nilpotent_orbit_of_one_by_length",
            "Σ_k l^{n,k} = |T_n|",
            vec![closed.into_iter().sum()],
            vec![ctx.t(n)],
        ),
    }
}

fn nilpotent_with_singleton_one(ctx: &Context) -> Option<IdentityCheck> {
    let n = ctx.n;
    if n == 0 {
        return None;
    }
    let independent = match ctx.e {
        Some(e) => qu(e.nilpotent_with_singleton_one),
        // Only the empty chart on zero points has no chains.
        None if n == 1 => Q::one(),
        None => (1..n).map(|k| q(&lah(n - 1, k))).sum(),
    };
    check(
        ctx,
        "nilpotent_with_singleton_one",
        "#{α ∈ T_n : [1] is a chain of α} = |T_{n-1}|",
        vec![ctx.t(n - 1)],
        vec![independent],
    )
}

fn nilpotent_count_from_chains(ctx: &Context) -> Option<IdentityCheck> {
    let n = ctx.n;
    if n == 0 {
        return None;
    }
    let independent = match ctx.e {
        Some(e) => qu(e.nilpotents),
        None => ctx.t(n),
    };
    check(
        ctx,
        "nilpotent_count_from_chains",
        "|T_n| = L_n / n",
        vec![ctx.chains(n) / ctx.n_q()],
        vec![independent],
    )
}

fn semigroup_from_nilpotent_chains(ctx: &Context) -> Option<IdentityCheck> {
    let n = ctx.n;
    let m = qu(n as u64 + 1);
    let closed_chains = q(&ctx.seq.nilpotent_chains[n + 1]);
    let mut closed = vec![closed_chains.clone() / &m];
    let mut independent = vec![match ctx.e {
        Some(e) => qu(e.elements),
        None => ctx.is(n),
    }];
    if let Some(e1) = ctx.e_next {
        closed.push(closed_chains);
        independent.push(qu(e1.nilpotent_chains));
    }
    check(
        ctx,
        "semigroup_from_nilpotent_chains",
        "|IS_n| = L^(n+1) / (n+1)",
        closed,
        independent,
    )
}

fn nilpotent_recursion(ctx: &Context) -> Option<IdentityCheck> {
    let n = ctx.n;
    if n == 0 {
        return None;
    }
    let independent = match ctx.e {
        Some(e) => qu(e.nilpotents),
        None => ctx.t(n),
    };
    check(
        ctx,
        "nilpotent_recursion",
        "|T_n| = |IS_{n-1}| + L_{n-1}",
        vec![ctx.is(n - 1) + ctx.chains(n - 1)],
        vec![independent],
    )
}

fn semigroup_from_nilpotents(ctx: &Context) -> Option<IdentityCheck> {
    let n = ctx.n;
    let independent = match ctx.e {
        Some(e) => qu(e.elements),
        None => ctx.is(n),
    };
    check(
        ctx,
        "semigroup_from_nilpotents",
        "|IS_n| = |T_n| + L^(n)",
        vec![ctx.t(n) + q(&ctx.seq.nilpotent_chains[n])],
        vec![independent],
    )
}

fn stable_rank_decomposition(ctx: &Context) -> Option<IdentityCheck> {
    let n = ctx.n;
    let first: Q = (0..=n).map(|k| ctx.falling(n, k) * ctx.t(n - k)).sum();
    let mut closed = vec![first];
    if n > 0 {
        closed.push(
            (1..=n)
                .map(|k| ctx.falling(n - 1, k - 1) * qu((n + k) as u64) * ctx.t(n - k))
                .sum(),
        );
    }
    let total = match ctx.e {
        Some(e) => qu(e.elements),
        None => ctx.is(n),
    };
    let independent = vec![total; closed.len()];
    check(
        ctx,
        "stable_rank_decomposition",
        "|IS_n| = Σ [n]_k |T_{n-k}| = Σ [n-1]_{k-1} (n+k) |T_{n-k}|",
        closed,
        independent,
    )
}

fn nilpotent_convolution(ctx: &Context) -> Option<IdentityCheck> {
    let n = ctx.n;
    if n == 0 {
        return None;
    }
    let closed: Q = (1..=n)
        .map(|k| qu(k as u64) * ctx.falling(n - 1, k - 1) * ctx.t(n - k))
        .sum();
    let independent = match ctx.e {
        Some(e) => qu(e.nilpotents),
        None => ctx.t(n),
    };
    check(
        ctx,
        "nilpotent_convolution",
        "|T_n| = Σ k [n-1]_{k-1} |T_{n-k}|",
        vec![closed],
        vec![independent],
    )
}

fn nilpotents_as_partial_injections(ctx: &Context) -> Option<IdentityCheck> {
    let n = ctx.n;
    if n == 0 {
        return None;
    }
    let closed = vec![
        q(&partial_injection_count(n - 1, n)),
        q(&partial_injection_count(n, n - 1)),
    ];
    let independent = match ctx.e {
        // Elements undefined at 1 are the partial injections {2..n} -> {1..n}.
        Some(e) => vec![qu(e.nilpotents), qu(e.elements - e.one_in_domain)],
        None => vec![ctx.t(n), ctx.t(n)],
    };
    check(
        ctx,
        "nilpotents_as_partial_injections",
        "|T_n| = I(n-1, n) = I(n, n-1)",
        closed,
        independent,
    )
}

fn idempotent_count(ctx: &Context) -> Option<IdentityCheck> {
    let n = ctx.n;
    let independent = match ctx.e {
        Some(e) => qu(e.idempotents),
        // Idempotents are the partial identities, one per subset.
        None => (0..=n).map(|k| q(&binomial(n, k))).sum(),
    };
    check(
        ctx,
        "idempotent_count",
        "|E(IS_n)| = 2^n",
        vec![q(&ctx.table.idempotents)],
        vec![independent],
    )
}

fn domain_non_independence(ctx: &Context) -> Option<IdentityCheck> {
    let n = ctx.n;
    if n < 2 {
        return None;
    }
    let total = ctx.is(n);
    let (one, both) = domain_probabilities(n)?;
    let independent = match ctx.e {
        Some(e) => vec![
            qu(e.one_in_domain) / qu(e.elements),
            qu(e.one_two_in_domain) / qu(e.elements),
        ],
        None => {
            // Inclusion-exclusion over "undefined at 1" and "undefined at 2".
            let i = |a: usize| q(&partial_injection_count(a, n));
            vec![
                (i(n) - i(n - 1)) / &total,
                (i(n) - i(n - 1) * qu(2) + i(n - 2)) / &total,
            ]
        }
    };
    check(
        ctx,
        "domain_non_independence",
        "Pr(1 ∈ dom), Pr(1 ∈ dom and 2 ∈ dom)",
        vec![one, both],
        independent,
    )
}

/// `Pr(1 ∈ dom α)` and `Pr(1, 2 ∈ dom α)` for uniform `α ∈ IS_n`, `n ≥ 2`.
pub fn domain_probabilities(n: usize) -> Option<(Q, Q)> {
    if n < 2 {
        return None;
    }
    let total = q(&partial_injection_count(n, n));
    let one: Q = (1..=n)
        .map(|k| q(&rank_count(n, k)) * qu(k as u64))
        .sum::<Q>()
        / qu(n as u64)
        / &total;
    let both: Q = (2..=n)
        .map(|k| q(&rank_count(n, k)) * qu((k * (k - 1)) as u64))
        .sum::<Q>()
        / qu((n * (n - 1)) as u64)
        / &total;
    Some((one, both))
}
