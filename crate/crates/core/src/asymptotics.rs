//! Finite-n checks of the growth, unimodality and equidistribution facts
//! about |T_n|, |IS_n| and the rank counts `R_{n,k}`. Everything is exact;
//! floats appear only in rendered output.

use std::fmt;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{approx, factorial, ratio};
use crate::counting::Sequences;
use crate::error::{Error, Result};
use crate::json;

type Q = BigRational;

fn qn(x: usize) -> Q {
    Q::from_integer(x.into())
}

/// Row `k` of the signless Lah triangle, `L'(n,1..=n)`, via the ratio
/// `L'(n,k+1)/L'(n,k) = (n-k)/(k(k+1))`.
fn lah_row(n: usize, factorial: &BigUint) -> Vec<BigUint> {
    let mut row = Vec::with_capacity(n);
    if n == 0 {
        return row;
    }
    row.push(factorial.clone());
    for k in 1..n {
        let next = &row[k - 1] * (n - k) / (k * (k + 1));
        row.push(next);
    }
    row
}

/// `R_{n,0..=n}` via `R_{n,k+1}/R_{n,k} = (n-k)²/(k+1)`.
fn rank_row(n: usize) -> Vec<BigUint> {
    let mut row = vec![BigUint::one()];
    for k in 0..n {
        let next = &row[k] * (n - k) * (n - k) / (k + 1);
        row.push(next);
    }
    row
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrowthRow {
    pub n: usize,
    #[serde(with = "json::big")]
    pub t_prev: BigUint,
    #[serde(with = "json::big")]
    pub t: BigUint,
    #[serde(with = "json::big")]
    pub t_next: BigUint,
    #[serde(with = "json::big")]
    pub is_prev: BigUint,
    #[serde(with = "json::big")]
    pub is: BigUint,
    #[serde(with = "json::big")]
    pub is_next: BigUint,
    /// `Σ_k (n+k+1) L'(n,k)`, which should equal `t_next`.
    #[serde(with = "json::big")]
    pub t_next_by_defect: BigUint,
    /// `Σ_k (2n-k+2) R_{n,k}`, which should equal `is_next`.
    #[serde(with = "json::big")]
    pub is_next_by_rank: BigUint,
    /// `|T_n| / |T_{n-1}|`
    #[serde(with = "json::rational")]
    pub t_ratio: Q,
    /// `|IS_n| / |IS_{n-1}|`
    #[serde(with = "json::rational")]
    pub is_ratio: Q,
    /// `|T_{n+1}| / ((n+2) |T_n|)`
    #[serde(with = "json::rational")]
    pub t_growth: Q,
    /// `|IS_{n+1}| / ((n+2) |IS_n|)`
    #[serde(with = "json::rational")]
    pub is_growth: Q,
    /// `|T_n| / |IS_n|`
    #[serde(with = "json::rational")]
    pub nilpotent_share: Q,
}

impl GrowthRow {
    /// `n+1 ≤ |T_n|/|T_{n-1}| ≤ 2n-1`, strictly when `n > 2`.
    pub fn nilpotent_ratio_bounds(&self) -> bool {
        let r = ratio(&self.t, &self.t_prev);
        let (lo, hi) = (qn(self.n + 1), qn(2 * self.n - 1));
        if self.n > 2 {
            lo < r && r < hi
        } else {
            lo <= r && r <= hi
        }
    }

    /// `n+1 < |IS_n|/|IS_{n-1}| < 2n`.
    pub fn semigroup_ratio_bounds(&self) -> bool {
        let r = ratio(&self.is, &self.is_prev);
        qn(self.n + 1) < r && r < qn(2 * self.n)
    }

    /// The defect-weighted and rank-weighted sums reproduce the next sizes.
    pub fn next_size_sums(&self) -> bool {
        self.t_next_by_defect == self.t_next && self.is_next_by_rank == self.is_next
    }

    /// Both `|X_{n+1}| / ((n+2)|X_n|)` ratios are at least 1.
    pub fn ratios_at_least_one(&self) -> bool {
        self.t_growth >= Q::one() && self.is_growth >= Q::one()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrowthReport {
    pub n_max: usize,
    pub rows: Vec<GrowthRow>,
}

/// First index from which `xs` is strictly decreasing through the end.
fn decreasing_from(ns: &[usize], xs: &[&Q]) -> Option<usize> {
    if xs.is_empty() {
        return None;
    }
    let mut start = xs.len() - 1;
    while start > 0 && xs[start - 1] > xs[start] {
        start -= 1;
    }
    Some(ns[start])
}

impl GrowthReport {
    pub fn row(&self, n: usize) -> Option<&GrowthRow> {
        self.rows.iter().find(|r| r.n == n)
    }

    pub fn bounds_hold(&self) -> bool {
        self.rows
            .iter()
            .all(|r| r.nilpotent_ratio_bounds() && r.semigroup_ratio_bounds())
    }

    pub fn sums_hold(&self) -> bool {
        self.rows.iter().all(GrowthRow::next_size_sums)
    }

    pub fn ratios_at_least_one(&self) -> bool {
        self.rows.iter().all(GrowthRow::ratios_at_least_one)
    }

    fn ns(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.n).collect()
    }

    /// Index after which `|T_{n+1}|/((n+2)|T_n|)` keeps decreasing.
    pub fn t_growth_burn_in(&self) -> Option<usize> {
        let xs: Vec<&Q> = self.rows.iter().map(|r| &r.t_growth).collect();
        decreasing_from(&self.ns(), &xs)
    }

    pub fn is_growth_burn_in(&self) -> Option<usize> {
        let xs: Vec<&Q> = self.rows.iter().map(|r| &r.is_growth).collect();
        decreasing_from(&self.ns(), &xs)
    }

    /// Index after which `|T_n|/|IS_n|` keeps decreasing.
    pub fn nilpotent_share_decreasing_from(&self) -> Option<usize> {
        let xs: Vec<&Q> = self.rows.iter().map(|r| &r.nilpotent_share).collect();
        decreasing_from(&self.ns(), &xs)
    }

    /// Whether both growth ratios lie in `(lo, hi]` for every `n ≥ from`.
    pub fn growth_within(&self, from: usize, lo: &Q, hi: &Q) -> bool {
        self.rows.iter().filter(|r| r.n >= from).all(|r| {
            lo < &r.t_growth && &r.t_growth <= hi && lo < &r.is_growth && &r.is_growth <= hi
        })
    }

    pub fn write_csv<W: std::io::Write>(&self, out: W) -> Result<()> {
        #[derive(Serialize)]
        struct CsvRow {
            n: usize,
            t_ratio: String,
            is_ratio: String,
            t_growth: String,
            is_growth: String,
            nilpotent_share: String,
            t_growth_approx: f64,
            is_growth_approx: f64,
            nilpotent_share_approx: f64,
            nilpotent_ratio_bounds: bool,
            semigroup_ratio_bounds: bool,
            next_size_sums: bool,
        }
        let mut w = csv::Writer::from_writer(out);
        for r in &self.rows {
            w.serialize(CsvRow {
                n: r.n,
                t_ratio: r.t_ratio.to_string(),
                is_ratio: r.is_ratio.to_string(),
                t_growth: r.t_growth.to_string(),
                is_growth: r.is_growth.to_string(),
                nilpotent_share: r.nilpotent_share.to_string(),
                t_growth_approx: approx(&r.t_growth),
                is_growth_approx: approx(&r.is_growth),
                nilpotent_share_approx: approx(&r.nilpotent_share),
                nilpotent_ratio_bounds: r.nilpotent_ratio_bounds(),
                semigroup_ratio_bounds: r.semigroup_ratio_bounds(),
                next_size_sums: r.next_size_sums(),
            })
            .map_err(|e| Error::InvalidArgument(e.to_string()))?;
        }
        w.flush()
            .map_err(|e| Error::InvalidArgument(e.to_string()))?;
        Ok(())
    }
}

impl fmt::Display for GrowthReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "n  |T_n|/|T_n-1|  |IS_n|/|IS_n-1|  T-growth  IS-growth  |T_n|/|IS_n|"
        )?;
        for r in &self.rows {
            writeln!(
                f,
                "{:<3} {:<13.6} {:<15.6} {:<9.6} {:<10.6} {:.6}",
                r.n,
                approx(&r.t_ratio),
                approx(&r.is_ratio),
                approx(&r.t_growth),
                approx(&r.is_growth),
                approx(&r.nilpotent_share)
            )?;
        }
        writeln!(f, "ratio bounds: {}", self.bounds_hold())?;
        writeln!(f, "next-size sums: {}", self.sums_hold())?;
        let show = |n: Option<usize>| n.map_or_else(|| "-".to_string(), |n| n.to_string());
        writeln!(
            f,
            "growth ratios >= 1: {}; decreasing from n = {} (T) and {} (IS)",
            self.ratios_at_least_one(),
            show(self.t_growth_burn_in()),
            show(self.is_growth_burn_in())
        )?;
        write!(
            f,
            "|T_n|/|IS_n| decreasing from n = {}",
            show(self.nilpotent_share_decreasing_from())
        )
    }
}

/// Growth ratios for `2 ≤ n ≤ n_max`.
pub fn growth_report(n_max: usize) -> Result<GrowthReport> {
    if n_max < 2 {
        return Err(Error::InvalidArgument(
            "growth report needs n_max >= 2".into(),
        ));
    }
    let seq = Sequences::up_to(n_max + 1);
    let t = &seq.nilpotent;
    let is = &seq.semigroup;
    let rows = (2..=n_max)
        .map(|n| {
            let lah = lah_row(n, &seq.factorial[n]);
            let t_next_by_defect = lah.iter().zip(1usize..).map(|(l, k)| l * (n + k + 1)).sum();
            let is_next_by_rank = rank_row(n)
                .iter()
                .enumerate()
                .map(|(k, r)| r * (2 * n - k + 2))
                .sum();
            GrowthRow {
                n,
                t_prev: t[n - 1].clone(),
                t: t[n].clone(),
                t_next: t[n + 1].clone(),
                is_prev: is[n - 1].clone(),
                is: is[n].clone(),
                is_next: is[n + 1].clone(),
                t_next_by_defect,
                is_next_by_rank,
                t_ratio: ratio(&t[n], &t[n - 1]),
                is_ratio: ratio(&is[n], &is[n - 1]),
                t_growth: ratio(&t[n + 1], &(&t[n] * (n + 2))),
                is_growth: ratio(&is[n + 1], &(&is[n] * (n + 2))),
                nilpotent_share: ratio(&t[n], &is[n]),
            }
        })
        .collect();
    Ok(GrowthReport { n_max, rows })
}

/// Flatness of `R_{n,·}` near its peak, checked for `n > 10000`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeakFlatness {
    /// The `k` with `|k - k₀| < n^{1/4}/6 - 1`.
    pub window: Vec<usize>,
    /// `|R_{n,k+1}/R_{n,k} - 1| < n^{-1/4}` on the whole window.
    pub ratio_bound: bool,
    /// `⌊n^{1/4}/6⌋`
    pub half_width: usize,
    /// `R_{n,k₀}/R_{n,k} < 2` for `|k - k₀| ≤ half_width - 1`.
    pub peak_ratio_bound: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnimodalityReport {
    pub n: usize,
    /// `L'(n,k+1) > L'(n,k)` whenever `1 ≤ k < √(n+1) - 1`.
    pub lah_increasing: bool,
    /// `L'(n,k+1) < L'(n,k)` whenever `√(n+1) - 1 < k < n`.
    pub lah_decreasing: bool,
    /// `k = √(n+1) - 1` exactly, where `L'(n,k+1) = L'(n,k)`.
    pub lah_boundary: Vec<usize>,
    pub lah_peaks: Vec<usize>,
    /// `R_{n,k+1} > R_{n,k}` whenever `1 ≤ k < n + 1/2 - √(n + 5/4)`.
    pub rank_increasing: bool,
    /// `R_{n,k+1} < R_{n,k}` whenever `n + 1/2 - √(n + 5/4) < k < n`.
    pub rank_decreasing: bool,
    pub rank_boundary: Vec<usize>,
    pub rank_peaks: Vec<usize>,
    /// `⌈n + 1/2 - √(n + 5/4)⌉`
    pub k0: usize,
    pub k0_is_peak: bool,
    pub flatness: Option<PeakFlatness>,
}

impl UnimodalityReport {
    pub fn passed(&self) -> bool {
        self.lah_increasing
            && self.lah_decreasing
            && self.rank_increasing
            && self.rank_decreasing
            && self.k0_is_peak
            && self
                .flatness
                .as_ref()
                .is_none_or(|f| f.ratio_bound && f.peak_ratio_bound)
    }
}

impl fmt::Display for UnimodalityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n = {}", self.n)?;
        writeln!(
            f,
            "Lah row: increasing {} decreasing {} peaks {:?} boundary {:?}",
            self.lah_increasing, self.lah_decreasing, self.lah_peaks, self.lah_boundary
        )?;
        writeln!(
            f,
            "rank row: increasing {} decreasing {} peaks {:?} boundary {:?} k0 {} (peak: {})",
            self.rank_increasing,
            self.rank_decreasing,
            self.rank_peaks,
            self.rank_boundary,
            self.k0,
            self.k0_is_peak
        )?;
        if let Some(fl) = &self.flatness {
            writeln!(
                f,
                "near the peak: window {:?} ratio bound {} half width {} peak ratio bound {}",
                fl.window, fl.ratio_bound, fl.half_width, fl.peak_ratio_bound
            )?;
        }
        Ok(())
    }
}

/// Whether the step `x_k → x_{k+1}` goes up, given `x_{k+1}/x_k`.
fn step_sign(up: &Q) -> std::cmp::Ordering {
    up.cmp(&Q::one())
}

/// Indices of the local maxima given the comparisons `x_{k+1} ? x_k` for
/// consecutive `k` starting at `first`. On a unimodal row these are the
/// argmax positions.
fn peaks_from_steps(first: usize, steps: &[std::cmp::Ordering]) -> Vec<usize> {
    use std::cmp::Ordering::*;
    (0..=steps.len())
        .filter(|&i| {
            let rises_into = i == 0 || steps[i - 1] != Less;
            let falls_after = i == steps.len() || steps[i] != Greater;
            rises_into && falls_after
        })
        .map(|i| first + i)
        .collect()
}

fn argmax<T: Ord>(first: usize, row: &[T]) -> Vec<usize> {
    let best = row.iter().max();
    row.iter()
        .enumerate()
        .filter(|(_, x)| Some(*x) == best)
        .map(|(i, _)| first + i)
        .collect()
}

/// `⌈n + 1/2 - √(n + 5/4)⌉`: the least `k` with `2n + 1 - 2k ≤ √(4n+5)`.
pub fn rank_peak_index(n: usize) -> usize {
    (0..=n)
        .find(|&k| {
            let d = 2 * n as i128 + 1 - 2 * k as i128;
            d <= 0 || d * d <= 4 * n as i128 + 5
        })
        .unwrap_or(n)
}

/// Where the Lah row and the rank row increase and decrease.
///
/// For `n ≤ 600` the rows are compared value by value. Beyond that the
/// consecutive ratios `(n-k)/(k(k+1))` and `(n-k)²/(k+1)` are compared
/// with 1, which avoids materializing huge factorials, and the peaks are
/// read off the step pattern. Peak flatness is evaluated for `n > 10000`.
pub fn unimodality_report(n: usize) -> Result<UnimodalityReport> {
    if n < 2 {
        return Err(Error::InvalidArgument("unimodality needs n >= 2".into()));
    }
    use std::cmp::Ordering::*;
    let small = n <= 600;

    // Lah steps k -> k+1 for k = 1..n-1.
    let lah_steps: Vec<Q> = (1..n)
        .map(|k| Q::new((n - k).into(), (k * (k + 1)).into()))
        .collect();
    let lah_values = small.then(|| lah_row(n, &factorial(n)));
    let lah_cmp: Vec<std::cmp::Ordering> = match &lah_values {
        Some(row) => (1..n).map(|k| row[k].cmp(&row[k - 1])).collect(),
        None => lah_steps.iter().map(step_sign).collect(),
    };
    let mut lah_increasing = true;
    let mut lah_decreasing = true;
    let mut lah_boundary = Vec::new();
    for k in 1..n {
        let c = lah_cmp[k - 1];
        // k < √(n+1) - 1  ⟺  (k+1)² < n+1
        match ((k + 1) * (k + 1)).cmp(&(n + 1)) {
            Less => lah_increasing &= c == Greater,
            Greater => lah_decreasing &= c == Less,
            Equal => {
                lah_boundary.push(k);
            }
        }
    }

    let rank_steps: Vec<Q> = (0..n)
        .map(|k| Q::new(((n - k) * (n - k)).into(), (k + 1).into()))
        .collect();
    let rank_values = small.then(|| rank_row(n));
    let rank_cmp: Vec<std::cmp::Ordering> = match &rank_values {
        Some(row) => (0..n).map(|k| row[k + 1].cmp(&row[k])).collect(),
        None => rank_steps.iter().map(step_sign).collect(),
    };
    let mut rank_increasing = true;
    let mut rank_decreasing = true;
    let mut rank_boundary = Vec::new();
    for (k, &c) in rank_cmp.iter().enumerate().take(n).skip(1) {
        // k < n + 1/2 - √(n + 5/4)  ⟺  (n-k)² + (n-k) > n+1
        let s = n - k;
        match (s * s + s).cmp(&(n + 1)) {
            Greater => rank_increasing &= c == Greater,
            Less => rank_decreasing &= c == Less,
            Equal => rank_boundary.push(k),
        }
    }

    let lah_peaks = match &lah_values {
        Some(row) => argmax(1, row),
        None => peaks_from_steps(1, &lah_cmp),
    };
    let rank_peaks = match &rank_values {
        Some(row) => argmax(0, row),
        None => peaks_from_steps(0, &rank_cmp),
    };
    let k0 = rank_peak_index(n);
    let k0_is_peak = rank_peaks.contains(&k0);

    let flatness = (n > 10000).then(|| {
        // |k - k0| < n^{1/4}/6 - 1  ⟺  (6(|d|+1))⁴ < n
        let fits = |d: usize| {
            let w = 6 * (d as u128 + 1);
            w.pow(4) < n as u128
        };
        let mut window = Vec::new();
        let mut d = 0;
        while fits(d) {
            for k in [k0.checked_sub(d), Some(k0 + d)].into_iter().flatten() {
                if k < n && !window.contains(&k) {
                    window.push(k);
                }
            }
            d += 1;
        }
        window.sort_unstable();
        // |r - 1| < n^{-1/4}  ⟺  |r - 1|⁴ · n < 1
        let ratio_bound = window.iter().all(|&k| {
            let dev = (&rank_steps[k] - Q::one()).abs();
            let d2 = &dev * &dev;
            &d2 * &d2 * qn(n) < Q::one()
        });
        let mut half_width = 0;
        while (6 * (half_width as u128 + 1)).pow(4) <= n as u128 {
            half_width += 1;
        }
        // R_{n,k0}/R_{n,k} as a product of step ratios.
        let peak_ratio_bound = (1..half_width).all(|d| {
            let below: Q = (k0 - d..k0).map(|k| rank_steps[k].clone()).product();
            let above: Q = (k0..(k0 + d).min(n))
                .map(|k| rank_steps[k].recip())
                .product();
            below < qn(2) && above < qn(2)
        });
        PeakFlatness {
            window,
            ratio_bound,
            half_width,
            peak_ratio_bound,
        }
    });

    Ok(UnimodalityReport {
        n,
        lah_increasing,
        lah_decreasing,
        lah_boundary,
        lah_peaks,
        rank_increasing,
        rank_decreasing,
        rank_boundary,
        rank_peaks,
        k0,
        k0_is_peak,
        flatness,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModReport {
    pub n: usize,
    pub m: usize,
    /// `F_p = Σ_{k ≡ p (mod m)} R_{n,k}`
    #[serde(with = "json::big_vec")]
    pub f: Vec<BigUint>,
    #[serde(with = "json::rational_vec")]
    pub proportions: Vec<Q>,
    #[serde(with = "json::rational")]
    pub max_deviation_from_uniform: Q,
}

impl fmt::Display for ModReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (p, (fp, q)) in self.f.iter().zip(&self.proportions).enumerate() {
            writeln!(f, "rank ≡ {p} (mod {}): {fp} ({:.6})", self.m, approx(q))?;
        }
        write!(
            f,
            "max deviation from 1/{}: {:.6e}",
            self.m,
            approx(&self.max_deviation_from_uniform)
        )
    }
}

/// Ranks of IS_n grouped by residue mod `m`.
pub fn mod_distribution(n: usize, m: usize) -> Result<ModReport> {
    if m == 0 {
        return Err(Error::InvalidArgument("modulus must be at least 1".into()));
    }
    let mut f = vec![BigUint::zero(); m];
    for (k, r) in rank_row(n).into_iter().enumerate() {
        f[k % m] += r;
    }
    let total: BigUint = f.iter().sum();
    let proportions: Vec<Q> = f.iter().map(|x| ratio(x, &total)).collect();
    let uniform = Q::new(1.into(), m.into());
    let max_deviation_from_uniform = proportions
        .iter()
        .map(|p| (p - &uniform).abs())
        .max()
        .unwrap_or_else(Q::zero);
    Ok(ModReport {
        n,
        m,
        f,
        proportions,
        max_deviation_from_uniform,
    })
}

/// Whether the deviation from uniform at `2n` is strictly below that at `n`.
pub fn mod_deviation_shrinks(n: usize, m: usize) -> Result<bool> {
    Ok(mod_distribution(2 * n, m)?.max_deviation_from_uniform
        < mod_distribution(n, m)?.max_deviation_from_uniform)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> Q {
        Q::new(a.into(), b.into())
    }

    #[test]
    fn growth_small() {
        let g = growth_report(3).unwrap();
        let r2 = g.row(2).unwrap();
        assert_eq!(r2.t_ratio, q(3, 1));
        assert!(r2.nilpotent_ratio_bounds());
        let r3 = g.row(3).unwrap();
        assert_eq!(r3.t_ratio, q(13, 3));
        assert!(r3.nilpotent_ratio_bounds());
        assert_eq!(r2.t_next_by_defect, BigUint::from(13u32));
        assert!(g.sums_hold());
        assert!(growth_report(1).is_err());
    }

    #[test]
    fn growth_to_120() {
        let g = growth_report(120).unwrap();
        assert!(g.bounds_hold());
        assert!(g.sums_hold());
        assert!(g.ratios_at_least_one());
        assert_eq!(g.nilpotent_share_decreasing_from(), Some(2));
    }

    #[test]
    fn unimodality_small() {
        let u = unimodality_report(8).unwrap();
        assert!(u.passed(), "{u}");
        assert_eq!(u.lah_boundary, vec![2]);
        let u = unimodality_report(3).unwrap();
        assert_eq!(u.k0, 2);
        assert_eq!(u.rank_peaks, vec![2]);
        for n in 2..200 {
            assert!(unimodality_report(n).unwrap().passed(), "n={n}");
        }
        assert!(unimodality_report(1).is_err());
    }

    #[test]
    fn value_and_ratio_routes_agree() {
        // n = 601 uses step ratios; compare with the value route at 600.
        let a = unimodality_report(600).unwrap();
        let b = unimodality_report(601).unwrap();
        assert!(a.passed() && b.passed());
    }

    #[test]
    fn large_n_flatness() {
        let u = unimodality_report(10001).unwrap();
        let fl = u.flatness.as_ref().unwrap();
        assert_eq!(fl.window, vec![u.k0]);
        assert!(u.passed(), "{u}");
    }

    #[test]
    fn residues() {
        let r = mod_distribution(3, 2).unwrap();
        assert_eq!(r.f, vec![BigUint::from(19u32), BigUint::from(15u32)]);
        assert_eq!(r.proportions, vec![q(19, 34), q(15, 34)]);
        let r = mod_distribution(7, 1).unwrap();
        assert!(r.max_deviation_from_uniform.is_zero());
        assert!(mod_deviation_shrinks(30, 3).unwrap());
        assert!(mod_distribution(3, 0).is_err());
    }
}
