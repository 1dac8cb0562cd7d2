use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::sequences::{defect_count, lah, rank_count, Sequences};
use crate::arith::{ratio, to_int};
use crate::json;

/// Every closed-form count attached to IS_n.
///
/// Sequences indexed by length (`lah`, `chains_by_length`,
/// `cycles_by_length`) start at length 1; the rest start at 0. The orbit
/// tallies refer to the point 1 and are empty when `n = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountTable {
    pub n: usize,
    #[serde(with = "json::big")]
    pub card_is: BigUint,
    #[serde(with = "json::big")]
    pub card_t: BigUint,
    #[serde(with = "json::big_vec")]
    pub r: Vec<BigUint>,
    #[serde(with = "json::big_vec")]
    pub d: Vec<BigUint>,
    #[serde(with = "json::big_vec")]
    pub lah: Vec<BigUint>,
    #[serde(with = "json::big_vec")]
    pub st: Vec<BigUint>,
    #[serde(with = "json::big")]
    pub chains_total: BigUint,
    #[serde(with = "json::big")]
    pub chains_total_nilpotent: BigUint,
    #[serde(with = "json::big_vec")]
    pub chains_by_length: Vec<BigUint>,
    #[serde(with = "json::big_vec")]
    pub cycles_by_length: Vec<BigUint>,
    #[serde(with = "json::big")]
    pub fixed_points_total: BigUint,
    #[serde(with = "json::big_vec")]
    pub orbit_counts: Vec<BigUint>,
    #[serde(with = "json::big_vec")]
    pub orbit_counts_nilpotent: Vec<BigUint>,
    #[serde(with = "json::big")]
    pub idempotents: BigUint,
    #[serde(with = "json::rational")]
    pub b: BigRational,
    #[serde(with = "json::rational")]
    pub c_avg: BigRational,
}

/// Field names accepted by [`CountTable::field`].
pub const FIELD_NAMES: [&str; 17] = [
    "n",
    "card_is",
    "card_t",
    "r",
    "d",
    "lah",
    "st",
    "chains_total",
    "chains_total_nilpotent",
    "chains_by_length",
    "cycles_by_length",
    "fixed_points_total",
    "orbit_counts",
    "orbit_counts_nilpotent",
    "idempotents",
    "b",
    "c_avg",
];

impl CountTable {
    /// JSON value of a single field, by name.
    pub fn field(&self, name: &str) -> Option<serde_json::Value> {
        let full = serde_json::to_value(self).ok()?;
        full.get(name).cloned()
    }

    /// Names of the fields on which two tables disagree.
    pub fn differences(&self, other: &CountTable) -> Vec<&'static str> {
        let a = serde_json::to_value(self).expect("serializable");
        let b = serde_json::to_value(other).expect("serializable");
        FIELD_NAMES
            .iter()
            .copied()
            .filter(|f| a.get(f) != b.get(f))
            .collect()
    }
}

/// Closed-form count table for IS_n; no enumeration involved.
pub fn count_table(n: usize) -> CountTable {
    count_table_with(&Sequences::up_to(n), n)
}

/// As [`count_table`], reusing precomputed sequences (`seq.max() >= n`).
pub fn count_table_with(seq: &Sequences, n: usize) -> CountTable {
    assert!(seq.max() >= n, "sequences too short");
    let is = &seq.semigroup;
    let t = &seq.nilpotent;

    let r: Vec<BigUint> = (0..=n).map(|k| rank_count(n, k)).collect();
    let d: Vec<BigUint> = (0..=n).map(|k| defect_count(n, k)).collect();
    let lah_row: Vec<BigUint> = (1..=n).map(|k| lah(n, k)).collect();
    let st: Vec<BigUint> = (0..=n).map(|k| seq.falling(n, k) * &t[n - k]).collect();
    let chains_by_length: Vec<BigUint> = (1..=n).map(|k| seq.falling(n, k) * &is[n - k]).collect();
    let cycles_by_length: Vec<BigUint> = chains_by_length
        .iter()
        .zip(1..)
        .map(|(l, k): (&BigUint, usize)| l / k)
        .collect();
    let chains_total = r
        .iter()
        .enumerate()
        .map(|(k, rk)| rk * (n - k))
        .sum::<BigUint>();
    let chains_total_nilpotent = lah_row
        .iter()
        .zip(1usize..)
        .map(|(l, k)| l * k)
        .sum::<BigUint>();
    // Fixed points are the cycles of length one.
    let fixed_points_total = if n == 0 {
        BigUint::zero()
    } else {
        &is[n - 1] * n
    };

    let mut orbit_counts = Vec::new();
    let mut orbit_counts_nilpotent = Vec::new();
    if n > 0 {
        orbit_counts.push(t[n].clone());
        orbit_counts.push(is[n - 1].clone());
        orbit_counts_nilpotent.push(is[n - 1].clone());
        orbit_counts_nilpotent.push(BigUint::zero());
        for k in 2..=n {
            let ways = seq.falling(n - 1, k - 1);
            orbit_counts.push(&ways * (&seq.chains[n - k] + &is[n - k] * 2u32));
            orbit_counts_nilpotent.push(&ways * (&seq.nilpotent_chains[n - k] + &t[n - k]));
        }
    }

    let b_of = |m: usize| ratio(&is[m], &seq.factorial[m]);
    let b = b_of(n);
    let c_avg = (1..=n)
        .map(|k| {
            (BigRational::one() + BigRational::new(BigInt::one(), BigInt::from(k))) * b_of(n - k)
        })
        .fold(BigRational::zero(), |acc, x| acc + x)
        / &b;

    CountTable {
        n,
        card_is: is[n].clone(),
        card_t: t[n].clone(),
        r,
        d,
        lah: lah_row,
        st,
        chains_total,
        chains_total_nilpotent,
        chains_by_length,
        cycles_by_length,
        fixed_points_total,
        orbit_counts,
        orbit_counts_nilpotent,
        idempotents: BigUint::one() << n,
        b,
        c_avg,
    }
}

/// Helper for reports: exact rational `num/den` from two counts.
pub(crate) fn frac(num: &BigUint, den: &BigUint) -> BigRational {
    BigRational::new(to_int(num), to_int(den))
}
