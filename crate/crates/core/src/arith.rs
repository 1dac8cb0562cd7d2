//! Small exact-arithmetic helpers shared by the counting code.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// Decreasing factorial `n (n-1) ... (n-k+1)`; zero when `k > n`.
pub fn falling(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    ((n - k + 1)..=n).fold(BigUint::one(), |acc, i| acc * i)
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn to_int(x: &BigUint) -> BigInt {
    BigInt::from(x.clone())
}

pub fn ratio(num: &BigUint, den: &BigUint) -> BigRational {
    BigRational::new(to_int(num), to_int(den))
}

pub fn int_ratio(num: BigInt) -> BigRational {
    BigRational::from_integer(num)
}

/// Floating-point rendering for reports only; never used in checks.
pub fn approx(q: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    match (q.numer().to_f64(), q.denom().to_f64()) {
        (Some(a), Some(b)) if a.is_finite() && b.is_finite() => a / b,
        _ => {
            // Shift both sides so the quotient survives f64 range.
            let bits = q.numer().bits().max(q.denom().bits()).saturating_sub(1000);
            let a = (q.numer() >> bits).to_f64().unwrap_or(f64::NAN);
            let b = (q.denom() >> bits).to_f64().unwrap_or(f64::NAN);
            a / b
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(factorial(0), BigUint::from(1u32));
        assert_eq!(factorial(5), BigUint::from(120u32));
        assert_eq!(falling(5, 2), BigUint::from(20u32));
        assert_eq!(falling(5, 0), BigUint::from(1u32));
        assert_eq!(falling(2, 3), BigUint::zero());
        assert_eq!(binomial(10, 3), BigUint::from(120u32));
        assert_eq!(binomial(3, 4), BigUint::zero());
    }
}
