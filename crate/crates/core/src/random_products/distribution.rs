use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::matrix::transition_entries;
use crate::arith::{approx, falling, ratio, to_int};
use crate::counting::{check_budget, enumerate_within, lah, rank_count, Filter, Sequences};
use crate::element::PartialInjection;
use crate::error::{Error, Result};
use crate::json;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankDistribution {
    pub n: usize,
    pub k: usize,
    /// `p[i]`: probability that the product equals a given element of rank `i`.
    #[serde(with = "json::rational_vec")]
    pub p: Vec<BigRational>,
}

impl RankDistribution {
    /// Probability that the product has rank `i`: `R_{n,i} p[i]`.
    pub fn by_rank(&self) -> Vec<BigRational> {
        self.p
            .iter()
            .enumerate()
            .map(|(i, p)| p * BigRational::from_integer(to_int(&rank_count(self.n, i))))
            .collect()
    }

    /// `Σ_i R_{n,i} p[i]`, which must be 1.
    pub fn total_probability(&self) -> BigRational {
        self.by_rank().into_iter().sum()
    }
}

impl fmt::Display for RankDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (p, q)) in self.p.iter().zip(self.by_rank()).enumerate() {
            writeln!(
                f,
                "rank {i}: P = {p} (≈{:.6e}), Pr(rank = {i}) ≈ {:.6}",
                approx(p),
                approx(&q)
            )?;
        }
        Ok(())
    }
}

fn require_factor(k: usize) -> Result<()> {
    if k == 0 {
        Err(Error::InvalidArgument(
            "a product needs at least one factor".into(),
        ))
    } else {
        Ok(())
    }
}

/// Exact distribution for `k` factors: the transition matrix applied `k - 1`
/// times to the all-ones vector, over `|IS_n|^k`.
pub fn rank_distribution(n: usize, k: usize) -> Result<RankDistribution> {
    Ok(rank_distributions(n, k)?.pop().expect("k >= 1"))
}

/// Distributions for `1, 2, …, k_max` factors, sharing the matrix powers.
pub fn rank_distributions(n: usize, k_max: usize) -> Result<Vec<RankDistribution>> {
    require_factor(k_max)?;
    let a = transition_entries(n);
    let total = Sequences::up_to(n).semigroup[n].clone();
    let mut v = vec![BigUint::one(); n + 1];
    let mut denom = total.clone();
    let mut out = Vec::with_capacity(k_max);
    for k in 1..=k_max {
        if k > 1 {
            v = a
                .par_iter()
                .map(|row| row.iter().zip(&v).map(|(x, y)| x * y).sum())
                .collect();
            denom *= &total;
        }
        out.push(RankDistribution {
            n,
            k,
            p: v.iter().map(|x| ratio(x, &denom)).collect(),
        });
    }
    Ok(out)
}

/// Probability that the product lies in a set containing `m[i]` elements
/// of rank `i`.
pub fn prob_of_subset(dist: &RankDistribution, m: &[BigUint]) -> Result<BigRational> {
    if m.len() != dist.n + 1 {
        return Err(Error::InvalidArgument(format!(
            "expected {} multiplicities, got {}",
            dist.n + 1,
            m.len()
        )));
    }
    let mut sum = BigRational::zero();
    for (i, (mi, p)) in m.iter().zip(&dist.p).enumerate() {
        let available = rank_count(dist.n, i);
        if mi > &available {
            return Err(Error::MultiplicityOutOfRange {
                rank: i,
                value: mi.clone(),
                available,
            });
        }
        sum += p * BigRational::from_integer(to_int(mi));
    }
    Ok(sum)
}

/// Number of nilpotent elements of each rank, `m_i = L'(n, n-i)`.
pub fn nilpotent_multiplicities(n: usize) -> Vec<BigUint> {
    if n == 0 {
        return vec![BigUint::one()];
    }
    (0..=n).map(|i| lah(n, n - i)).collect()
}

/// Distribution obtained by composing concrete elements.
///
/// Counts how many `k`-tuples multiply to each element (one product table,
/// then `k - 1` convolution passes) and checks that the count is the same
/// for every element of a rank class. The budget bounds `|IS_n|^k`.
pub fn brute_force_distribution(n: usize, k: usize, budget: u64) -> Result<RankDistribution> {
    require_factor(k)?;
    let total = Sequences::up_to(n).semigroup[n].clone();
    check_budget(Pow::pow(&total, k as u32), budget)?;
    let elements: Vec<PartialInjection> = enumerate_within(n, Filter::All, budget)?.collect();
    let index: HashMap<&PartialInjection, usize> =
        elements.iter().enumerate().map(|(i, a)| (a, i)).collect();
    let size = elements.len();
    let table: Vec<Vec<usize>> = if k > 1 {
        elements
            .par_iter()
            .map(|a| {
                elements
                    .iter()
                    .map(|b| index[&a.compose(b).expect("same size")])
                    .collect()
            })
            .collect()
    } else {
        Vec::new()
    };
    let mut counts = vec![1u64; size];
    for _ in 1..k {
        let mut next = vec![0u64; size];
        for (row, &c) in table.iter().zip(&counts) {
            for &target in row {
                next[target] += c;
            }
        }
        counts = next;
    }
    let mut per_rank: Vec<Option<u64>> = vec![None; n + 1];
    for (a, &c) in elements.iter().zip(&counts) {
        let r = a.rank();
        match per_rank[r] {
            None => per_rank[r] = Some(c),
            Some(prev) if prev != c => return Err(Error::RankConstancyViolated { rank: r }),
            Some(_) => {}
        }
    }
    let denom = Pow::pow(&total, k as u32);
    Ok(RankDistribution {
        n,
        k,
        p: per_rank
            .into_iter()
            .map(|c| ratio(&BigUint::from(c.expect("every rank occurs")), &denom))
            .collect(),
    })
}

/// Exact consistency checks between the distribution at `(n, k)` and the
/// closed forms relating it to smaller sizes, plus the trend over
/// `k = 1..=trend_cap` factors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossChecks {
    pub n: usize,
    pub k: usize,
    /// `P_{k,n}^{(i)} = (|IS_{n-i}|/|IS_n|)^k ([n]_i)^{k-1} P_{k,n-i}^{(0)}` for all `i`.
    pub reduction: bool,
    /// `|IS_{n-i}|^{k-1} ([n]_i)^{k-1} / |IS_n|^k ≤ P^{(i)} ≤ |IS_{n-i}|^k ([n]_i)^{k-1} / |IS_n|^k`.
    pub sandwich: bool,
    /// `P^{(n)} = (n!)^{k-1} / |IS_n|^k`.
    pub top_rank: bool,
    pub trend_cap: usize,
    /// `P^{(0)}` for `1..=trend_cap` factors.
    #[serde(with = "json::rational_vec")]
    pub zero_rank_trend: Vec<BigRational>,
    /// `P^{(0)}` strictly increases with the number of factors (constant for `n = 0`).
    pub zero_rank_increasing: bool,
    /// `P^{(i)} ≤ ((n-i+1)/(n+1))^k / [n]_i` for `i > 0` and every `k` up to
    /// the cap; the right side tends to 0 geometrically.
    pub positive_rank_bound: bool,
}

impl CrossChecks {
    pub fn passed(&self) -> bool {
        self.reduction
            && self.sandwich
            && self.top_rank
            && self.zero_rank_increasing
            && self.positive_rank_bound
    }
}

pub fn cross_checks(n: usize, k: usize, trend_cap: usize) -> Result<CrossChecks> {
    require_factor(k)?;
    let seq = Sequences::up_to(n);
    let is = |m: usize| BigRational::from_integer(to_int(&seq.semigroup[m]));
    let dist = rank_distribution(n, k)?;
    let kk = k as i32;

    let mut reduction = true;
    let mut sandwich = true;
    for i in 0..=n {
        let ways = BigRational::from_integer(to_int(&falling(n, i))).pow(kk - 1);
        let base = (is(n - i) / is(n)).pow(kk) * &ways;
        let smaller = rank_distribution(n - i, k)?.p[0].clone();
        reduction &= dist.p[i] == &base * smaller;
        let lower = is(n - i).pow(kk - 1) * &ways / is(n).pow(kk);
        sandwich &= lower <= dist.p[i] && dist.p[i] <= base;
    }
    let top = BigRational::from_integer(to_int(&seq.factorial[n])).pow(kk - 1) / is(n).pow(kk);
    let top_rank = dist.p[n] == top;

    let cap = trend_cap.max(1);
    let trend = rank_distributions(n, cap)?;
    let zero_rank_trend: Vec<BigRational> = trend.iter().map(|d| d.p[0].clone()).collect();
    let zero_rank_increasing =
        zero_rank_trend
            .windows(2)
            .all(|w| if n == 0 { w[0] == w[1] } else { w[0] < w[1] });
    let positive_rank_bound = (1..=n).all(|i| {
        let shrink = BigRational::new((n - i + 1).into(), (n + 1).into());
        let ways = BigRational::from_integer(to_int(&falling(n, i)));
        trend
            .iter()
            .all(|d| d.p[i] <= shrink.clone().pow(d.k as i32) / &ways)
    });
    Ok(CrossChecks {
        n,
        k,
        reduction,
        sandwich,
        top_rank,
        trend_cap: cap,
        zero_rank_trend,
        zero_rank_increasing,
        positive_rank_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::DEFAULT_BUDGET;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn small_distributions() {
        assert_eq!(rank_distribution(1, 2).unwrap().p, vec![q(3, 4), q(1, 4)]);
        assert_eq!(rank_distribution(2, 2).unwrap().p[2], q(2, 49));
        for n in 0..5 {
            let d = rank_distribution(n, 1).unwrap();
            let u = q(
                1,
                Sequences::up_to(n).semigroup[n].clone().try_into().unwrap(),
            );
            assert!(d.p.iter().all(|p| p == &u));
        }
        assert!(rank_distribution(2, 0).is_err());
    }

    #[test]
    fn total_probability_is_one() {
        for n in 0..=8 {
            for d in rank_distributions(n, 6).unwrap() {
                assert_eq!(d.total_probability(), BigRational::one(), "n={n} k={}", d.k);
            }
        }
    }

    #[test]
    fn subsets() {
        let d = rank_distribution(1, 2).unwrap();
        let one = |x: u32| BigUint::from(x);
        assert_eq!(prob_of_subset(&d, &[one(1), one(0)]).unwrap(), q(3, 4));
        assert_eq!(prob_of_subset(&d, &[one(1), one(1)]).unwrap(), q(1, 1));
        assert!(matches!(
            prob_of_subset(&d, &[one(2), one(0)]),
            Err(Error::MultiplicityOutOfRange { rank: 0, .. })
        ));
        // Nilpotent products of two factors in IS_2, counted directly.
        let elements: Vec<_> = enumerate_within(2, Filter::All, DEFAULT_BUDGET)
            .unwrap()
            .collect();
        let mut hits = 0;
        for a in &elements {
            for b in &elements {
                if a.compose(b).unwrap().is_nilpotent() {
                    hits += 1;
                }
            }
        }
        let d = rank_distribution(2, 2).unwrap();
        let m = nilpotent_multiplicities(2);
        assert_eq!(m, vec![one(1), one(2), one(0)]);
        assert_eq!(prob_of_subset(&d, &m).unwrap(), q(hits, 49));
    }

    #[test]
    fn brute_force_agrees() {
        for (n, k) in [(1, 2), (1, 3), (2, 2), (2, 3), (3, 2), (3, 3)] {
            assert_eq!(
                brute_force_distribution(n, k, DEFAULT_BUDGET).unwrap(),
                rank_distribution(n, k).unwrap(),
                "n={n} k={k}"
            );
        }
        assert!(matches!(
            brute_force_distribution(3, 6, 1000),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn cross_check_range() {
        for n in 0..=5 {
            for k in 1..=5 {
                let c = cross_checks(n, k, 6).unwrap();
                assert!(c.passed(), "{c:?}");
            }
        }
        let c = cross_checks(3, 2, 12).unwrap();
        assert_eq!(c.zero_rank_trend.len(), 12);
        assert!(c.zero_rank_increasing);
    }
}
