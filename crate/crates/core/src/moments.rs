//! The three moment families and their sequences.
//!
//! A `MomentKind` pins down one sequence `a(0), a(1), ...`:
//!
//! * Hilbert: `a(n) = t^n / (n+1)`; `t = s = 1` gives the Hilbert matrix.
//! * Generalized: `a(n) = s t^n / (n+s)`, defined for rational `s` that is
//!   neither zero nor a negative integer.
//! * Harmonic: `a(n) = H_n(t, s) = sum_{k=1}^{n} s t^k / (k+s-1)`, the
//!   weighted harmonic numbers, with `H_0 = 0`.
//!
//! The first two have `a(0) = 1` and therefore define a linear functional
//! `F(x^n) = a(n)` with `F(1) = 1`; the harmonic family starts at 0 and does
//! not, which is why its Hankel determinants need the bordered-determinant
//! detour implemented in [`crate::harmonic`] instead of the factorization
//! route.

use crate::{HankelError, Poly, Rational};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MomentFamily {
    Hilbert,
    Generalized,
    Harmonic,
}

impl MomentFamily {
    pub fn name(&self) -> &'static str {
        match self {
            MomentFamily::Hilbert => "hilbert",
            MomentFamily::Generalized => "generalized",
            MomentFamily::Harmonic => "harmonic",
        }
    }
}

impl fmt::Display for MomentFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A moment family together with its parameters, validated on construction.
///
/// `t` is always nonzero (at `t = 0` every Hankel matrix in sight
/// degenerates) and `s` is never zero or a negative integer (those values
/// put a zero into some denominator `k + s - 1` or `n + s`). The Hilbert
/// family carries `s = 1` so that it is literally the `s = 1` slice of the
/// generalized family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MomentKind {
    family: MomentFamily,
    t: Rational,
    s: Rational,
}

impl MomentKind {
    pub fn hilbert(t: Rational) -> Result<Self, HankelError> {
        Self::build(MomentFamily::Hilbert, t, Rational::one())
    }

    pub fn generalized(t: Rational, s: Rational) -> Result<Self, HankelError> {
        Self::build(MomentFamily::Generalized, t, s)
    }

    pub fn harmonic(t: Rational, s: Rational) -> Result<Self, HankelError> {
        Self::build(MomentFamily::Harmonic, t, s)
    }

    pub fn new(family: MomentFamily, t: Rational, s: Rational) -> Result<Self, HankelError> {
        match family {
            MomentFamily::Hilbert if !s.is_one() => Err(HankelError::InvalidParameter(format!(
                "hilbert family fixes s = 1, got s = {s}"
            ))),
            _ => Self::build(family, t, s),
        }
    }

    fn build(family: MomentFamily, t: Rational, s: Rational) -> Result<Self, HankelError> {
        if t.is_zero() {
            return Err(HankelError::InvalidParameter(
                "t must be nonzero".to_owned(),
            ));
        }
        if s.is_zero() || (s.is_integer() && s.is_negative()) {
            return Err(HankelError::InvalidParameter(format!(
                "s must not be zero or a negative integer, got s = {s}"
            )));
        }
        Ok(MomentKind { family, t, s })
    }

    pub fn family(&self) -> MomentFamily {
        self.family
    }

    pub fn t(&self) -> &Rational {
        &self.t
    }

    pub fn s(&self) -> &Rational {
        &self.s
    }

    /// The n-th moment `a(n)`.
    pub fn moment(&self, n: usize) -> Rational {
        match self.family {
            MomentFamily::Hilbert => self.t.pow(n as i64) / Rational::from_integer(n + 1),
            MomentFamily::Generalized => {
                let denom = &self.s + &Rational::from_integer(n);
                &(&self.s * &self.t.pow(n as i64)) / &denom
            }
            MomentFamily::Harmonic => harmonic_number(n, &self.t, &self.s),
        }
    }

    /// `a(0), ..., a(nmax)` in one pass. For the harmonic family this runs
    /// the prefix sum once instead of re-summing per entry.
    pub fn moment_sequence(&self, nmax: usize) -> Vec<Rational> {
        match self.family {
            MomentFamily::Harmonic => harmonic_numbers(nmax, &self.t, &self.s),
            _ => (0..=nmax).map(|n| self.moment(n)).collect(),
        }
    }

    /// The moment functional `F(p) = sum_k p_k a(k)`, defined only for the
    /// families with `a(0) = 1`.
    pub fn apply_functional(&self, p: &Poly) -> Result<Rational, HankelError> {
        if self.family == MomentFamily::Harmonic {
            return Err(HankelError::UnsupportedFamily {
                operation: "apply_functional",
                family: self.family.name(),
            });
        }
        Ok(p.coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| c * &self.moment(k))
            .sum())
    }
}

impl<'de> Deserialize<'de> for MomentKind {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            family: MomentFamily,
            t: Rational,
            s: Rational,
        }
        let raw = Raw::deserialize(deserializer)?;
        MomentKind::new(raw.family, raw.t, raw.s).map_err(serde::de::Error::custom)
    }
}

/// `H_n(t, s) = sum_{k=1}^{n} s t^k / (k+s-1)`, with `H_0 = 0`.
pub fn harmonic_number(n: usize, t: &Rational, s: &Rational) -> Rational {
    harmonic_numbers(n, t, s)
        .pop()
        .expect("nonempty by construction")
}

/// `H_0, ..., H_nmax` by running prefix sums.
pub fn harmonic_numbers(nmax: usize, t: &Rational, s: &Rational) -> Vec<Rational> {
    let mut out = Vec::with_capacity(nmax + 1);
    out.push(Rational::zero());
    let mut acc = Rational::zero();
    let mut tk = Rational::one();
    for k in 1..=nmax {
        tk = &tk * t;
        let denom = &(s + &Rational::from_integer(k)) - &Rational::one();
        acc = &acc + &(&(s * &tk) / &denom);
        out.push(acc.clone());
    }
    out
}
