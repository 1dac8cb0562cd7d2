use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::arith::{binomial, factorial, falling};

/// Number of elements of rank `k` in IS_n: `C(n,k)² k!`.
pub fn rank_count(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let c = binomial(n, k);
    &c * &c * factorial(k)
}

/// Number of elements of defect `k` in IS_n.
pub fn defect_count(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    rank_count(n, n - k)
}

/// Signless Lah number `L'(n,k) = (n!/k!) C(n-1, k-1)`: nilpotents of defect `k`.
pub fn lah(n: usize, k: usize) -> BigUint {
    if k == 0 || k > n {
        return BigUint::zero();
    }
    falling(n, n - k) * binomial(n - 1, k - 1)
}

/// `L'(n,0..=n)` built with the step `L'(n,k+1) = L'(n,k) (n-k) / (k(k+1))`.
pub fn lah_row(n: usize) -> Vec<BigUint> {
    let mut row = vec![BigUint::zero(); n + 1];
    if n == 0 {
        return row;
    }
    row[1] = factorial(n);
    for k in 1..n {
        row[k + 1] = &row[k] * (n - k) / (k * (k + 1));
    }
    row
}

/// `I(i,j)`: partial injections from an `i`-set to a `j`-set.
pub fn partial_injection_count(i: usize, j: usize) -> BigUint {
    (0..=i.min(j))
        .map(|k| binomial(i, k) * binomial(j, k) * factorial(k))
        .sum()
}

/// Cached size sequences for every `m ≤ max`.
///
/// `|T_0| = 1` (IS_0 = {0} and 0 is nilpotent); `L_0 = L⁽⁰⁾ = 0`.
#[derive(Debug, Clone)]
pub struct Sequences {
    pub factorial: Vec<BigUint>,
    /// `|IS_m|`
    pub semigroup: Vec<BigUint>,
    /// `|T_m|`
    pub nilpotent: Vec<BigUint>,
    /// `L_m`, chains summed over IS_m
    pub chains: Vec<BigUint>,
    /// `L⁽ᵐ⁾`, chains summed over T_m
    pub nilpotent_chains: Vec<BigUint>,
}

impl Sequences {
    pub fn up_to(max: usize) -> Self {
        let mut factorial = Vec::with_capacity(max + 1);
        let mut acc = BigUint::one();
        for m in 0..=max {
            if m > 0 {
                acc *= m;
            }
            factorial.push(acc.clone());
        }
        let mut semigroup = Vec::with_capacity(max + 1);
        let mut nilpotent = Vec::with_capacity(max + 1);
        let mut chains = Vec::with_capacity(max + 1);
        let mut nilpotent_chains = Vec::with_capacity(max + 1);
        for m in 0..=max {
            let mut is = BigUint::zero();
            let mut l = BigUint::zero();
            let mut t = BigUint::zero();
            let mut lt = BigUint::zero();
            let mut binom = BigUint::one();
            for (k, fk) in factorial.iter().enumerate().take(m + 1) {
                if k > 0 {
                    binom = binom * (m - k + 1) / k;
                }
                let r = &binom * &binom * fk;
                l += &r * (m - k);
                is += r;
            }
            // L'(m,k) = m!/k! · C(m-1,k-1)
            let mut binom = BigUint::one();
            for k in 1..=m {
                if k > 1 {
                    binom = binom * (m - k + 1) / (k - 1);
                }
                let lah = &factorial[m] / &factorial[k] * &binom;
                lt += &lah * k;
                t += lah;
            }
            if m == 0 {
                t = BigUint::one();
            }
            semigroup.push(is);
            chains.push(l);
            nilpotent.push(t);
            nilpotent_chains.push(lt);
        }
        Sequences {
            factorial,
            semigroup,
            nilpotent,
            chains,
            nilpotent_chains,
        }
    }

    pub fn max(&self) -> usize {
        self.semigroup.len() - 1
    }

    pub fn falling(&self, n: usize, k: usize) -> BigUint {
        if k > n {
            BigUint::zero()
        } else {
            &self.factorial[n] / &self.factorial[n - k]
        }
    }
}
