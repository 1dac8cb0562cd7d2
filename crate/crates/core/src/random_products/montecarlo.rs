use std::fmt;

use num_bigint::{BigUint, RandBigInt};
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::distribution::{rank_distribution, RankDistribution};
use crate::arith::approx;
use crate::counting::Unranker;
use crate::element::PartialInjection;
use crate::error::{Error, Result};
use crate::json;

/// Trials per random stream. Block `b` draws from ChaCha8 seeded with the
/// run seed on stream `b`, so results do not depend on the thread count.
pub const BLOCK: u64 = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleReport {
    pub n: usize,
    pub k: usize,
    pub trials: u64,
    pub seed: u64,
    pub rank_histogram: Vec<u64>,
    #[serde(with = "json::rational_vec")]
    pub empirical: Vec<BigRational>,
    pub reference: RankDistribution,
    #[serde(with = "json::rational")]
    pub max_abs_deviation: BigRational,
}

impl SampleReport {
    /// Ranks whose frequency is more than four standard deviations from the
    /// exact probability `q`: `(freq - q)² > 16 q (1 - q) / trials`.
    pub fn outliers(&self) -> Vec<usize> {
        let trials = BigRational::from_integer(self.trials.into());
        let sixteen = BigRational::from_integer(16.into());
        self.reference
            .by_rank()
            .iter()
            .zip(&self.empirical)
            .enumerate()
            .filter(|(_, (q, e))| {
                let d = *e - *q;
                &d * &d > &sixteen * *q * (BigRational::from_integer(1.into()) - *q) / &trials
            })
            .map(|(i, _)| i)
            .collect()
    }

    pub fn within_tolerance(&self) -> bool {
        self.outliers().is_empty()
    }
}

impl fmt::Display for SampleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "n={} k={} trials={} seed={}",
            self.n, self.k, self.trials, self.seed
        )?;
        for (i, (c, q)) in self
            .rank_histogram
            .iter()
            .zip(self.reference.by_rank())
            .enumerate()
        {
            writeln!(
                f,
                "rank {i}: {c} hits, frequency {:.6}, exact {:.6}",
                *c as f64 / self.trials as f64,
                approx(&q)
            )?;
        }
        write!(f, "max deviation {:.6}", approx(&self.max_abs_deviation))
    }
}

fn run_block(unranker: &Unranker, k: usize, seed: u64, block: u64, len: u64) -> Vec<u64> {
    let n = unranker.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(block);
    let mut hist = vec![0u64; n + 1];
    for _ in 0..len {
        let mut product: Option<PartialInjection> = None;
        for _ in 0..k {
            let idx: BigUint = rng.gen_biguint_below(unranker.total());
            let x = unranker.unrank(&idx).expect("index below total");
            product = Some(match product {
                None => x,
                Some(p) => p.compose(&x).expect("same size"),
            });
        }
        hist[product.expect("k >= 1").rank()] += 1;
    }
    hist
}

/// Samples `trials` products of `k` uniform factors from IS_n.
pub fn monte_carlo(n: usize, k: usize, trials: u64, seed: u64) -> Result<SampleReport> {
    if trials == 0 {
        return Err(Error::InvalidArgument("trials must be at least 1".into()));
    }
    let reference = rank_distribution(n, k)?;
    let unranker = Unranker::new(n);
    let blocks = trials.div_ceil(BLOCK);
    let rank_histogram = (0..blocks)
        .into_par_iter()
        .map(|b| {
            let len = BLOCK.min(trials - b * BLOCK);
            run_block(&unranker, k, seed, b, len)
        })
        .reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        );
    let total = BigRational::from_integer(trials.into());
    let empirical: Vec<BigRational> = rank_histogram
        .iter()
        .map(|&c| BigRational::from_integer(c.into()) / &total)
        .collect();
    let max_abs_deviation = empirical
        .iter()
        .zip(reference.by_rank())
        .map(|(e, q)| (e - q).abs())
        .fold(BigRational::zero(), |a, b| if b > a { b } else { a });
    Ok(SampleReport {
        n,
        k,
        trials,
        seed,
        rank_histogram,
        empirical,
        reference,
        max_abs_deviation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn histogram_and_determinism() {
        let a = monte_carlo(2, 3, 10_000, 7).unwrap();
        assert_eq!(a.rank_histogram.iter().sum::<u64>(), 10_000);
        assert_eq!(a, monte_carlo(2, 3, 10_000, 7).unwrap());
        assert!(a.within_tolerance(), "{a}");
    }

    #[test]
    fn zero_rank_frequency_n1() {
        let r = monte_carlo(1, 2, 100_000, 2024).unwrap();
        let freq = r.rank_histogram[0] as f64 / 1e5;
        assert!((freq - 0.75).abs() < 0.01, "{freq}");
    }
}
