//! Closed-form evaluations: determinants, the shifted Legendre polynomials,
//! integer inverse-Hilbert entries, their s-generalizations, and the
//! summation identity behind the integrality of the inverse.
//!
//! None of these formulas is trusted on its own authority. Each has a test
//! pairing it with an independent route (the recurrence engine in
//! [`crate::stieltjes`] or the elimination oracles), and where a plausible
//! variant of a formula fails that comparison, the failing variant is kept
//! here with an `_unsquared` suffix as a negative control. Three such
//! controls exist: the determinant product, the squared norm, and the
//! rising-factorial inverse entry. In all three the validated form squares
//! a factor the naive reading would leave linear.

use crate::combinatorics::{binomial, binomial_general, factorial, rising_factorial};
use crate::{HankelError, Mat, Poly, Rational};
use num_bigint::BigInt;
use num_traits::One;

fn sign(k: usize) -> Rational {
    if k.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

fn check_entry(n: usize, i: usize, j: usize) -> Result<(), HankelError> {
    if i > n || j > n {
        Err(HankelError::IndexOutOfRange { i, j, n })
    } else {
        Ok(())
    }
}

/// `det (t^{i+j}/(i+j+1))_{i,j=0}^n = t^{n^2+n} / prod_{j=1}^n (2j+1) C(2j,j)^2`.
pub fn hilbert_det_closed(n: usize, t: &Rational) -> Rational {
    let mut den = BigInt::one();
    for j in 1..=n {
        let b = binomial(2 * j, j);
        den *= 2 * j + 1;
        den *= &b * &b;
    }
    t.pow((n * n + n) as i64) / Rational::from_integer(den)
}

fn generalized_det(n: usize, t: &Rational, s: &Rational, squared: bool) -> Rational {
    let mut den = Rational::one();
    for j in 1..=n {
        let b = binomial_general(&(s + &Rational::from_integer(2 * j - 1)), j);
        let b = if squared { &b * &b } else { b };
        den = &den * &(&(s + &Rational::from_integer(2 * j)) * &b);
    }
    &(&s.pow(n as i64) * &t.pow((n * n + n) as i64)) / &den
}

/// `det (s t^{i+j}/(i+j+s))_{i,j=0}^n = s^n t^{n^2+n} /
/// prod_{j=1}^n (2j+s) C(2j+s-1, j)^2`; reduces to [`hilbert_det_closed`]
/// at s = 1.
pub fn generalized_det_closed(n: usize, t: &Rational, s: &Rational) -> Rational {
    generalized_det(n, t, s, true)
}

/// Negative control: the same product with the binomial unsquared, the way
/// the formula is sometimes (mis)stated. Differs from the true determinant
/// for every n >= 1.
pub fn generalized_det_closed_unsquared(n: usize, t: &Rational, s: &Rational) -> Rational {
    generalized_det(n, t, s, false)
}

fn norm_closed(n: usize, t: &Rational, s: &Rational, squared: bool) -> Rational {
    let b = binomial_general(&(s + &Rational::from_integer(2 * n - 1)), n);
    let b = if squared { &b * &b } else { b };
    let den = &(s + &Rational::from_integer(2 * n)) * &b;
    &(s * &t.pow(2 * n as i64)) / &den
}

/// `F(p_n^2) = s t^{2n} / ((2n+s) C(2n+s-1, n)^2)`; at s = 1 this is
/// `t^{2n} / ((2n+1) C(2n,n)^2)`.
pub fn norm_squared_closed(n: usize, t: &Rational, s: &Rational) -> Rational {
    if n == 0 {
        return Rational::one();
    }
    norm_closed(n, t, s, true)
}

/// Negative control for the squared-norm closed form (binomial unsquared).
pub fn norm_squared_closed_unsquared(n: usize, t: &Rational, s: &Rational) -> Rational {
    if n == 0 {
        return Rational::one();
    }
    norm_closed(n, t, s, false)
}

/// Shifted Legendre polynomial
/// `P_n(x, t) = sum_j (-t)^{n-j} C(n,j) C(n+j,j) x^j`,
/// the `C(2n,n)`-multiple of the monic orthogonal polynomial of the
/// Hilbert kind.
pub fn shifted_legendre(n: usize, t: &Rational) -> Poly {
    let neg_t = -t;
    let coeffs = (0..=n)
        .map(|j| {
            let c = binomial(n, j) * binomial(n + j, j);
            &neg_t.pow((n - j) as i64) * &Rational::from_integer(c)
        })
        .collect();
    Poly::new(coeffs)
}

/// Triangle entry closed form for the Hilbert kind:
/// `a(n, k) = C(n,k) ((2k+1)!/k!) (n!/(n+k+1)!) t^{n-k}`.
pub fn hilbert_triangle_closed(n: usize, k: usize, t: &Rational) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let num = binomial(n, k) * factorial(2 * k + 1) * factorial(n);
    let den = factorial(k) * factorial(n + k + 1);
    &Rational::new(num, den) * &t.pow((n - k) as i64)
}

/// Triangle entry closed form for the generalized kind:
/// `a(n, k) = C(n,k) t^{n-k} prod_{j=0}^{k} (s+k+j)/(s+n+j)`.
pub fn generalized_triangle_closed(n: usize, k: usize, t: &Rational, s: &Rational) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let mut v = &Rational::from_integer(binomial(n, k)) * &t.pow((n - k) as i64);
    for j in 0..=k {
        let num = s + &Rational::from_integer(k + j);
        let den = s + &Rational::from_integer(n + j);
        v = &v * &(&num / &den);
    }
    v
}

/// Entry `(i, j)` of the inverse Hilbert matrix of order n:
/// `(-1)^{i+j} (i+j+1) C(n+i+1, n-j) C(n+j+1, n-i) C(i+j, i)^2`.
/// Always an integer.
pub fn inverse_hilbert_entry(n: usize, i: usize, j: usize) -> Result<Rational, HankelError> {
    check_entry(n, i, j)?;
    let c = binomial(i + j, i);
    let v = (i + j + 1) * binomial(n + i + 1, n - j) * binomial(n + j + 1, n - i) * &c * &c;
    Ok(&sign(i + j) * &Rational::from_integer(v))
}

/// The full inverse Hilbert matrix of order n.
pub fn inverse_hilbert_matrix(n: usize) -> Mat {
    Mat::from_fn(n + 1, n + 1, |i, j| {
        inverse_hilbert_entry(n, i, j).expect("indices in range")
    })
}

/// Entry `(i, j)` of the inverse of `(s/(i+j+s))_{i,j=0}^n`:
///
/// ```text
/// (-1)^{i+j} ((i+j+s)/s) C(n+i+s, n-j) C(n+j+s, n-i)
///            C(i+j+s-1, i) C(i+j+s-1, j)
/// ```
///
/// The rising-factorial restatement is evaluated alongside and asserted
/// equal, so this operation self-checks on every call. At s = 1 the value
/// is [`inverse_hilbert_entry`].
pub fn inverse_generalized_entry(
    n: usize,
    i: usize,
    j: usize,
    s: &Rational,
) -> Result<Rational, HankelError> {
    check_entry(n, i, j)?;
    let ipj = Rational::from_integer(i + j);
    let v = &(&(&ipj + s) / s)
        * &(&binomial_general(&(s + &Rational::from_integer(n + i)), n - j)
            * &binomial_general(&(s + &Rational::from_integer(n + j)), n - i));
    let tail = &binomial_general(&(&(&ipj + s) - &Rational::one()), i)
        * &binomial_general(&(&(&ipj + s) - &Rational::one()), j);
    let main = &sign(i + j) * &(&v * &tail);
    let alt = inverse_generalized_entry_rising(n, i, j, s)?;
    assert_eq!(
        main, alt,
        "the two inverse-entry forms disagree at ({n},{i},{j})"
    );
    Ok(main)
}

fn rising_entry(n: usize, i: usize, j: usize, s: &Rational, squared: bool) -> Rational {
    let nf = factorial(n);
    let den = if squared { &nf * &nf } else { nf };
    let ipj = Rational::from_integer(i + j);
    let num = Rational::from_integer(binomial(n, i) * binomial(n, j))
        * rising_factorial(&(s + &Rational::from_integer(i)), n + 1)
        * rising_factorial(&(s + &Rational::from_integer(j)), n + 1);
    let v = &num / &(&(s * &(s + &ipj)) * &Rational::from_integer(den));
    &sign(i + j) * &v
}

/// The rising-factorial form of the same inverse entry:
/// `(-1)^{i+j} / (s (s+i+j) (n!)^2) C(n,i) C(n,j) (s+i)^{(n+1)} (s+j)^{(n+1)}`.
pub fn inverse_generalized_entry_rising(
    n: usize,
    i: usize,
    j: usize,
    s: &Rational,
) -> Result<Rational, HankelError> {
    check_entry(n, i, j)?;
    Ok(rising_entry(n, i, j, s, true))
}

/// Negative control: the rising-factorial form with a single `1/n!`, which
/// looks plausible and is off by a factor `n!` for every n >= 2.
pub fn inverse_generalized_entry_rising_unsquared(
    n: usize,
    i: usize,
    j: usize,
    s: &Rational,
) -> Result<Rational, HankelError> {
    check_entry(n, i, j)?;
    Ok(rising_entry(n, i, j, s, false))
}

/// The full inverse of the order-n matrix `(s/(i+j+s))`.
pub fn inverse_generalized_matrix(n: usize, s: &Rational) -> Mat {
    Mat::from_fn(n + 1, n + 1, |i, j| {
        inverse_generalized_entry(n, i, j, s).expect("indices in range")
    })
}

/// Both sides of the summation identity that makes the inverse integral:
///
/// ```text
/// LHS = sum_{k=max(i,j)}^{n} C(k,i) C(k,j) C(k+i,i) C(k+j,j) (2k+1)
/// RHS = S(n,i,j) = (i+j+1) C(n+i+1, n-j) C(n+j+1, n-i) C(i+j, i)^2
/// ```
///
/// Returned as a pair so callers (and tests) assert the equality
/// themselves.
pub fn s_identity_sides(n: usize, i: usize, j: usize) -> Result<(Rational, Rational), HankelError> {
    check_entry(n, i, j)?;
    let mut lhs = BigInt::from(0);
    for k in i.max(j)..=n {
        lhs +=
            binomial(k, i) * binomial(k, j) * binomial(k + i, i) * binomial(k + j, j) * (2 * k + 1);
    }
    let c = binomial(i + j, i);
    let rhs = (i + j + 1) * binomial(n + i + 1, n - j) * binomial(n + j + 1, n - i) * &c * &c;
    Ok((Rational::from_integer(lhs), Rational::from_integer(rhs)))
}
