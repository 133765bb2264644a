//! The orthogonal-polynomial engine behind the Hankel factorization.
//!
//! For a moment functional `F(x^n) = a(n)` with `a(0) = 1` and nonvanishing
//! Hankel determinants, Favard's theorem gives monic orthogonal polynomials
//! through a three-term recurrence
//!
//! ```text
//! p_{n+1}(x) = (x - s(n)) p_n(x) - t(n-1) p_{n-1}(x)
//! ```
//!
//! and everything here flows from the two coefficient sequences `s(n)`,
//! `t(n)`:
//!
//! * the triangle `a(n, k)` expanding `x^n = sum_k a(n,k) p_k(x)`, built by
//!   `a(n+1, k) = a(n, k-1) + s(k) a(n, k) + t(k) a(n, k+1)`;
//! * the factorization `H = A D A^T` of the Hankel matrix, where `A` is the
//!   triangle and `D[k][k] = prod_{j<k} t(j) = F(p_k^2)`;
//! * `det H = prod_{i=1}^{n} prod_{j=0}^{i-1} t(j)` as an immediate
//!   consequence;
//! * the kernel-polynomial inverse: with `K_n(x, y) = sum_k p_k(x) p_k(y)
//!   / F(p_k^2)`, the coefficient matrix of `K_n` is the inverse of the
//!   Hankel matrix.
//!
//! The coefficient sequences themselves are closed-form guesses (rational
//! functions of n and the parameters); their correctness is not assumed but
//! pinned by tests comparing every derived quantity against the elimination
//! oracles in [`crate::elimination`].
//!
//! The harmonic family has `a(0) = 0`, is not a moment functional, and is
//! rejected by every operation here except [`hankel_matrix`].

use crate::elimination::det_oracle;
use crate::moments::MomentFamily;
use crate::{HankelError, Mat, MomentKind, Poly, Rational};
use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Jacobi coefficient sequences `s(n)`, `t(n)` for one moment kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiCoeffs {
    kind: MomentKind,
}

/// Builds the coefficient sequences, rejecting the harmonic family.
pub fn jacobi(kind: &MomentKind) -> Result<JacobiCoeffs, HankelError> {
    match kind.family() {
        MomentFamily::Harmonic => Err(HankelError::UnsupportedFamily {
            operation: "jacobi",
            family: kind.family().name(),
        }),
        _ => Ok(JacobiCoeffs { kind: kind.clone() }),
    }
}

impl JacobiCoeffs {
    pub fn kind(&self) -> &MomentKind {
        &self.kind
    }

    /// `s(n)`, the diagonal recurrence coefficient.
    pub fn s_coeff(&self, n: usize) -> Rational {
        let t = self.kind.t();
        let s = self.kind.s();
        match self.kind.family() {
            // s(n) = t/2 for every n.
            MomentFamily::Hilbert => t / Rational::from_integer(2),
            MomentFamily::Generalized => {
                if n == 0 {
                    // The general expression below is 0/0 at (n, s) = (0, 1);
                    // cancelling its (s-1) factor leaves st/(s+1), which is
                    // also the forced value s(0) = a(1) = F(x).
                    &(s * t) / &(s + &Rational::one())
                } else {
                    let n = Rational::from_integer(n);
                    let two_n = &n + &n;
                    let num = &(&(&n * &n) + &(&n * &n)) + &(&(&two_n - &Rational::one()) * s);
                    let num = &num + &(s * s);
                    let den =
                        &(&(s + &two_n) - &Rational::one()) * &(&(s + &two_n) + &Rational::one());
                    &(&num * t) / &den
                }
            }
            MomentFamily::Harmonic => unreachable!("rejected by jacobi()"),
        }
    }

    /// `t(n)`, the off-diagonal recurrence coefficient; nonzero for every
    /// admissible parameter choice, which is what keeps all the Hankel
    /// determinants nonvanishing.
    pub fn t_coeff(&self, n: usize) -> Rational {
        let t = self.kind.t();
        let s = self.kind.s();
        let np1 = Rational::from_integer(n + 1);
        match self.kind.family() {
            // t(n) = (n+1)^2 t^2 / (4 (2n+1)(2n+3)).
            MomentFamily::Hilbert => {
                let num = &(&np1 * &np1) * &t.pow(2);
                let den = Rational::from_integer(4 * (2 * n + 1) * (2 * n + 3));
                num / den
            }
            // t(n) = (n+1)^2 (n+s)^2 t^2 / ((s+2n)(s+2n+1)^2(s+2n+2)).
            MomentFamily::Generalized => {
                let ns = s + &Rational::from_integer(n);
                let num = &(&(&np1 * &np1) * &(&ns * &ns)) * &t.pow(2);
                let base = s + &Rational::from_integer(2 * n);
                let den = [0i64, 1, 1, 2]
                    .iter()
                    .map(|k| &base + &Rational::from(*k))
                    .product::<Rational>();
                num / den
            }
            MomentFamily::Harmonic => unreachable!("rejected by jacobi()"),
        }
    }
}

/// The `(n+1) x (n+1)` Hankel matrix `(a(i+j))`. Defined for all three
/// families; for the harmonic family the top-left entry is `H_0 = 0`.
pub fn hankel_matrix(kind: &MomentKind, n: usize) -> Mat {
    let moments = kind.moment_sequence(2 * n);
    Mat::from_fn(n + 1, n + 1, |i, j| moments[i + j].clone())
}

/// The expansion triangle `a(n, k)` for `0 <= k <= n <= nmax`, computed by
/// the recurrence; column 0 recovers the moments and the diagonal is 1.
pub fn triangle(kind: &MomentKind, nmax: usize) -> Result<Mat, HankelError> {
    let jc = jacobi(kind)?;
    let scoef: Vec<Rational> = (0..=nmax).map(|k| jc.s_coeff(k)).collect();
    let tcoef: Vec<Rational> = (0..=nmax).map(|k| jc.t_coeff(k)).collect();
    let mut m = Mat::zero(nmax + 1, nmax + 1);
    m[(0, 0)] = Rational::one();
    for n in 1..=nmax {
        for k in 0..=n {
            let mut v = &scoef[k] * &m[(n - 1, k)];
            if k > 0 {
                v = &v + &m[(n - 1, k - 1)];
            }
            if k < nmax {
                v = &v + &(&tcoef[k] * &m[(n - 1, k + 1)]);
            }
            m[(n, k)] = v;
        }
    }
    Ok(m)
}

/// The factorization `H = A D A^T` with `A` lower-unitriangular and `D`
/// diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    a: Mat,
    d: Mat,
}

impl Factorization {
    pub fn a(&self) -> &Mat {
        &self.a
    }

    pub fn d(&self) -> &Mat {
        &self.d
    }

    pub fn d_diag(&self) -> Vec<Rational> {
        self.d.diag_entries()
    }

    /// Matrix order n (matrices are (n+1) x (n+1)).
    pub fn order(&self) -> usize {
        self.a.rows() - 1
    }

    /// `A D A^T`, multiplied out exactly.
    pub fn reconstruct(&self) -> Mat {
        &(&self.a * &self.d) * &self.a.transpose()
    }
}

impl Serialize for Factorization {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Factorization", 2)?;
        st.serialize_field("A", &self.a)?;
        st.serialize_field("D", &self.d_diag())?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for Factorization {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            #[serde(rename = "A")]
            a: Mat,
            #[serde(rename = "D")]
            d: Vec<Rational>,
        }
        let raw = Raw::deserialize(deserializer)?;
        if !raw.a.is_square() || raw.a.rows() != raw.d.len() {
            return Err(D::Error::custom("factorization shape mismatch"));
        }
        for i in 0..raw.a.rows() {
            if !raw.a[(i, i)].is_one() {
                return Err(D::Error::custom("A must have a unit diagonal"));
            }
            for j in i + 1..raw.a.cols() {
                if !raw.a[(i, j)].is_zero() {
                    return Err(D::Error::custom("A must be lower triangular"));
                }
            }
        }
        Ok(Factorization {
            a: raw.a,
            d: Mat::diagonal(raw.d),
        })
    }
}

/// Factorizes the order-n Hankel matrix as `A D A^T`.
pub fn factorize(kind: &MomentKind, n: usize) -> Result<Factorization, HankelError> {
    let jc = jacobi(kind)?;
    let a = triangle(kind, n)?;
    let mut diag = Vec::with_capacity(n + 1);
    let mut prod = Rational::one();
    for k in 0..=n {
        diag.push(prod.clone());
        prod = &prod * &jc.t_coeff(k);
    }
    Ok(Factorization {
        a,
        d: Mat::diagonal(diag),
    })
}

/// `det H_n = prod_{i=1}^{n} prod_{j=0}^{i-1} t(j)`, i.e. the product of
/// the D diagonal.
pub fn hankel_det(kind: &MomentKind, n: usize) -> Result<Rational, HankelError> {
    let jc = jacobi(kind)?;
    let mut det = Rational::one();
    let mut norm = Rational::one();
    for k in 0..n {
        norm = &norm * &jc.t_coeff(k);
        det = &det * &norm;
    }
    Ok(det)
}

/// `F(p_n^2) = prod_{j=0}^{n-1} t(j)`, the squared norm of the n-th monic
/// orthogonal polynomial.
pub fn norm_squared(kind: &MomentKind, n: usize) -> Result<Rational, HankelError> {
    let jc = jacobi(kind)?;
    Ok((0..n).map(|j| jc.t_coeff(j)).product())
}

/// `p_0, ..., p_nmax` by the three-term recurrence.
pub fn orthogonal_polys(kind: &MomentKind, nmax: usize) -> Result<Vec<Poly>, HankelError> {
    let jc = jacobi(kind)?;
    let mut polys = Vec::with_capacity(nmax + 1);
    polys.push(Poly::one());
    for k in 0..nmax {
        let lin = Poly::new(vec![-jc.s_coeff(k), Rational::one()]);
        let mut next = &lin * &polys[k];
        if k > 0 {
            next = &next - &polys[k - 1].scale(&jc.t_coeff(k - 1));
        }
        polys.push(next);
    }
    Ok(polys)
}

/// The n-th monic orthogonal polynomial.
pub fn orthogonal_poly(kind: &MomentKind, n: usize) -> Result<Poly, HankelError> {
    Ok(orthogonal_polys(kind, n)?.pop().expect("nonempty"))
}

/// Independent route to `p_n`: the bordered-determinant definition,
/// expanded by cofactors along its last column and divided by the leading
/// Hankel determinant, everything evaluated through [`det_oracle`]. Shares
/// no code with the recurrence.
pub fn orthopoly_det_oracle(kind: &MomentKind, n: usize) -> Result<Poly, HankelError> {
    jacobi(kind)?;
    if n == 0 {
        return Ok(Poly::one());
    }
    let lead = det_oracle(&hankel_matrix(kind, n - 1))?;
    if lead.is_zero() {
        return Err(HankelError::VanishingDeterminant { order: n - 1 });
    }
    let moments = kind.moment_sequence(2 * n - 1);
    let mut coeffs = Vec::with_capacity(n + 1);
    for i in 0..=n {
        // Minor deleting row i and the (symbolic) x-column.
        let minor = Mat::from_fn(n, n, |r, c| {
            let row = if r < i { r } else { r + 1 };
            moments[row + c].clone()
        });
        let m = det_oracle(&minor)?;
        let cofactor = if (i + n).is_multiple_of(2) { m } else { -m };
        coeffs.push(cofactor / &lead);
    }
    Ok(Poly::new(coeffs))
}

/// Inverse of the order-n Hankel matrix as the coefficient matrix of the
/// kernel polynomial `K_n(x, y) = sum_k p_k(x) p_k(y) / F(p_k^2)`:
/// accumulates the outer product of each coefficient vector with itself,
/// scaled by the reciprocal norm.
pub fn kernel_inverse(kind: &MomentKind, n: usize) -> Result<Mat, HankelError> {
    let jc = jacobi(kind)?;
    let polys = orthogonal_polys(kind, n)?;
    let mut b = Mat::zero(n + 1, n + 1);
    let mut norm = Rational::one();
    for (k, p) in polys.iter().enumerate() {
        let w = norm.recip();
        for i in 0..=k {
            for j in 0..=k {
                let add = &(&p.coeff(i) * &p.coeff(j)) * &w;
                let v = &b[(i, j)] + &add;
                b[(i, j)] = v;
            }
        }
        norm = &norm * &jc.t_coeff(k);
    }
    Ok(b)
}
