use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::arith::{binomial, factorial, to_int};
use crate::counting::{partial_injection_count, rank_count};
use crate::json::RationalJson;

/// Dense square matrix over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    pub order: usize,
    pub entries: Vec<Vec<BigRational>>,
}

impl RationalMatrix {
    pub fn from_integers(rows: Vec<Vec<BigInt>>) -> Self {
        let order = rows.len();
        let entries = rows
            .into_iter()
            .map(|r| r.into_iter().map(BigRational::from_integer).collect())
            .collect();
        RationalMatrix { order, entries }
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i][j]
    }

    pub fn mul_vec(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(v.len(), self.order);
        self.entries
            .iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.order).all(|i| (0..i).all(|j| self.entries[i][j].is_zero()))
    }

    pub fn diagonal(&self) -> Vec<BigRational> {
        (0..self.order)
            .map(|i| self.entries[i][i].clone())
            .collect()
    }
}

impl Serialize for RationalMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            order: usize,
            entries: Vec<Vec<RationalJson>>,
        }
        Repr {
            order: self.order,
            entries: self
                .entries
                .iter()
                .map(|r| r.iter().map(RationalJson::from).collect())
                .collect(),
        }
        .serialize(s)
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|q| q.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Integer entries of the transition matrix: for `i ≤ j`,
/// `A_{i,j} = C(n-i, j-i) C(n, j) j! I(n-i, n-j)`.
pub(crate) fn transition_entries(n: usize) -> Vec<Vec<BigUint>> {
    (0..=n)
        .map(|i| {
            (0..=n)
                .map(|j| {
                    if i > j {
                        BigUint::zero()
                    } else {
                        binomial(n - i, j - i)
                            * binomial(n, j)
                            * factorial(j)
                            * partial_injection_count(n - i, n - j)
                    }
                })
                .collect()
        })
        .collect()
}

/// The upper-triangular `(n+1)×(n+1)` matrix driving the rank distribution
/// from `k` factors to `k + 1`.
pub fn build_matrix(n: usize) -> RationalMatrix {
    RationalMatrix::from_integers(
        transition_entries(n)
            .iter()
            .map(|r| r.iter().map(to_int).collect())
            .collect(),
    )
}

/// Matrix with entries `t_{i,j} = (-1)^{j-i} R_{n-i,j-i}` for `i ≤ j`; its
/// columns are the eigenvectors of [`build_matrix`].
pub fn basis_change(n: usize) -> RationalMatrix {
    RationalMatrix::from_integers(
        (0..=n)
            .map(|i| {
                (0..=n)
                    .map(|j| {
                        if i > j {
                            BigInt::zero()
                        } else {
                            let r = to_int(&rank_count(n - i, j - i));
                            if (j - i) % 2 == 0 {
                                r
                            } else {
                                -r
                            }
                        }
                    })
                    .collect()
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(m: &RationalMatrix) -> Vec<Vec<i64>> {
        m.entries
            .iter()
            .map(|r| {
                r.iter()
                    .map(|q| q.to_integer().try_into().unwrap())
                    .collect()
            })
            .collect()
    }

    #[test]
    fn small_matrices() {
        assert_eq!(ints(&build_matrix(1)), vec![vec![2, 1], vec![0, 1]]);
        assert_eq!(ints(&build_matrix(0)), vec![vec![1]]);
        let a = build_matrix(3);
        assert!(a.is_upper_triangular());
        let diag: Vec<i64> = a
            .diagonal()
            .iter()
            .map(|q| q.to_integer().try_into().unwrap())
            .collect();
        assert_eq!(diag, vec![34, 21, 12, 6]);
    }

    #[test]
    fn basis_change_n1() {
        assert_eq!(ints(&basis_change(1)), vec![vec![1, -1], vec![0, 1]]);
    }
}
