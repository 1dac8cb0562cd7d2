use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::matrix::transition_entries;
use crate::arith::{binomial, falling, to_int};
use crate::counting::{partial_injection_count, rank_count, Sequences};
use crate::json;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Eigenpair {
    pub k: usize,
    #[serde(with = "json::big")]
    pub eigenvalue: BigUint,
    #[serde(with = "json::signed_vec")]
    pub vector: Vec<BigInt>,
}

fn signed(x: BigUint, negative: bool) -> BigInt {
    let x = BigInt::from(x);
    if negative {
        -x
    } else {
        x
    }
}

/// Eigenvalues `[n]_k |IS_{n-k}|` and eigenvectors with coordinates
/// `(-1)^{k-j} R_{n-j,k-j}` (zero for `j > k`), for `k = 0..=n`.
pub fn eigenbasis(n: usize) -> Vec<Eigenpair> {
    let seq = Sequences::up_to(n);
    (0..=n)
        .map(|k| Eigenpair {
            k,
            eigenvalue: falling(n, k) * &seq.semigroup[n - k],
            vector: (0..=n)
                .map(|j| {
                    if j > k {
                        BigInt::zero()
                    } else {
                        signed(rank_count(n - j, k - j), (k - j) % 2 == 1)
                    }
                })
                .collect(),
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectralCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectralReport {
    pub n: usize,
    pub checks: Vec<SpectralCheck>,
}

impl SpectralReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&SpectralCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for SpectralReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(
                f,
                "{} n={} {}: {}",
                if c.passed { "PASS" } else { "FAIL" },
                self.n,
                c.name,
                c.detail
            )?;
        }
        Ok(())
    }
}

/// Exact checks of the eigen-decomposition of the transition matrix and of
/// the alternating sums behind it.
pub fn verify_spectral_identities(n: usize) -> SpectralReport {
    let seq = Sequences::up_to(n);
    let is = |m: usize| to_int(&seq.semigroup[m]);
    let a: Vec<Vec<BigInt>> = transition_entries(n)
        .iter()
        .map(|r| r.iter().map(to_int).collect())
        .collect();
    let basis = eigenbasis(n);
    let mut checks = Vec::new();
    let mut push = |name: &str, passed: bool, detail: String| {
        checks.push(SpectralCheck {
            name: name.to_string(),
            passed,
            detail,
        })
    };

    let bad: Vec<usize> = basis
        .iter()
        .filter(|e| {
            let lambda = BigInt::from(e.eigenvalue.clone());
            a.iter().zip(&e.vector).any(|(row, fj)| {
                let af: BigInt = row.iter().zip(&e.vector).map(|(x, y)| x * y).sum();
                af != &lambda * fj
            })
        })
        .map(|e| e.k)
        .collect();
    push(
        "eigen_equations",
        bad.is_empty(),
        format!("A f_k = λ_k f_k for k = 0..={n}; failing k: {bad:?}"),
    );

    let diag: Vec<BigInt> = (0..=n).map(|i| a[i][i].clone()).collect();
    let matches_eigenvalues = diag
        .iter()
        .zip(&basis)
        .all(|(d, e)| d == &BigInt::from(e.eigenvalue.clone()));
    let decreasing = diag.windows(2).all(|w| w[0] > w[1]);
    push(
        "eigenvalues_decreasing",
        matches_eigenvalues && decreasing,
        format!(
            "diagonal {}",
            diag.iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join(",")
        ),
    );

    // A_ii / A_{i+1,i+1} > (n-i+1)/(n-i), except at i = n-1 where both
    // sides equal 2.
    let mut ratio_ok = true;
    let mut equalities = Vec::new();
    for i in 0..n {
        let lhs = BigRational::new(diag[i].clone(), diag[i + 1].clone());
        let rhs = BigRational::new(BigInt::from(n - i + 1), BigInt::from(n - i));
        if i + 1 == n {
            ratio_ok &= lhs == rhs;
            equalities.push(i);
        } else {
            ratio_ok &= lhs > rhs;
        }
    }
    push(
        "eigenvalue_ratio_bound",
        ratio_ok,
        format!("strict for i < n-1, equality at i = {equalities:?}"),
    );

    let alternating: BigInt = (0..=n)
        .map(|k| signed(rank_count(n, k), k % 2 == 1) * is(n - k))
        .sum();
    push(
        "alternating_rank_sum",
        alternating.is_one(),
        format!("Σ (-1)^k |IS_(n-k)| R_(n,k) = {alternating}"),
    );

    // T (|IS_n|, …, |IS_0|)ᵗ with t_{i,j} = (-1)^{j-i} R_{n-i,j-i}.
    let t_applied: Vec<BigInt> = (0..=n)
        .map(|i| {
            (i..=n)
                .map(|j| signed(rank_count(n - i, j - i), (j - i) % 2 == 1) * is(n - j))
                .sum()
        })
        .collect();
    push(
        "basis_change_identity",
        t_applied.iter().all(|x| x.is_one()),
        format!(
            "T·(|IS_n|..|IS_0|) = ({})",
            t_applied
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        ),
    );

    let mut ie_bad = Vec::new();
    for k in 0..=n {
        let lhs: BigInt = (0..=k)
            .map(|i| {
                signed(
                    binomial(k, i) * partial_injection_count(n, n - i),
                    i % 2 == 1,
                )
            })
            .sum();
        let rhs = to_int(&(falling(n, k) * partial_injection_count(n - k, n - k)));
        if lhs != rhs {
            ie_bad.push(k);
        }
    }
    push(
        "inclusion_exclusion",
        ie_bad.is_empty(),
        format!(
            "Σ (-1)^i C(k,i) I(n,n-i) = [n]_k I(n-k,n-k) for k = 0..={n}; failing k: {ie_bad:?}"
        ),
    );

    SpectralReport { n, checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[BigInt]) -> Vec<i64> {
        v.iter().map(|x| x.try_into().unwrap()).collect()
    }

    #[test]
    fn small_eigenbases() {
        let b = eigenbasis(1);
        assert_eq!(b[0].eigenvalue, BigUint::from(2u32));
        assert_eq!(ints(&b[0].vector), vec![1, 0]);
        assert_eq!(b[1].eigenvalue, BigUint::from(1u32));
        assert_eq!(ints(&b[1].vector), vec![-1, 1]);
        let b = eigenbasis(0);
        assert_eq!(b.len(), 1);
        assert_eq!(ints(&b[0].vector), vec![1]);
        let b = eigenbasis(4);
        assert_eq!(ints(&b[2].vector), vec![72, -9, 1, 0, 0]);
        assert_eq!(b[2].eigenvalue, BigUint::from(84u32));
    }

    #[test]
    fn identities_hold() {
        for n in 0..=20 {
            let r = verify_spectral_identities(n);
            assert!(r.all_passed(), "{r}");
        }
    }

    #[test]
    fn inclusion_exclusion_n3_k2() {
        let lhs = 34 - 2 * 13 + 4;
        assert_eq!(lhs, 12);
        assert!(
            verify_spectral_identities(3)
                .get("inclusion_exclusion")
                .unwrap()
                .passed
        );
    }
}
