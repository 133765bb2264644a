//! Factorials and binomial coefficients, in both the integer form and the
//! polynomial extension `C(x, k) = x(x-1)...(x-k+1)/k!` that accepts any
//! rational upper argument. The extension is what lets one closed form cover
//! a whole parameter family at once: `C(2n+s-1, n)` at s = 1 collapses to
//! the central binomial coefficient.

use crate::Rational;
use num_bigint::BigInt;
use num_traits::{One, Zero};

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Odd/even double factorial `n!! = n(n-2)(n-4)...`, with `0!! = (-1)!! = 1`.
pub fn double_factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    let mut k = n;
    while k > 1 {
        acc *= k;
        k -= 2;
    }
    acc
}

/// Integer binomial coefficient, zero for k > n.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    // acc holds C(n, i) after step i, so the division is always exact.
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Binomial coefficient with a rational upper argument:
/// `C(x, k) = x(x-1)...(x-k+1) / k!`. `C(x, 0) = 1` for every x.
pub fn binomial_general(x: &Rational, k: usize) -> Rational {
    let mut num = Rational::one();
    for i in 0..k {
        num = &num * &(x - &Rational::from_integer(i));
    }
    num / Rational::from_integer(factorial(k))
}

/// Rising factorial `x^(k) = x(x+1)...(x+k-1)`, empty product for k = 0.
pub fn rising_factorial(x: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    for i in 0..k {
        acc = &acc * &(x + &Rational::from_integer(i));
    }
    acc
}
