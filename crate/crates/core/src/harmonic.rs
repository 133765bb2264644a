//! Hankel determinants of the harmonic-number sequence.
//!
//! `H_0 = 0`, so `(H_{i+j}(t,s))` is not the moment matrix of a functional
//! and the factorization machinery does not apply to it directly. Instead,
//! row and column elimination reduce its determinant to a Hilbert-type
//! determinant of one lower order times a correction factor
//!
//! ```text
//! det (H_{i+j}(t,s))_{0..n} = (-t)^n / C(2n+s-1, n)
//!                             * det (s t^{i+j}/(i+j+s))_{0..n-1}
//!                             * r(n, t, s)
//! ```
//!
//! where `r` is the finite sum in [`r_direct`]. Everything else here is
//! bookkeeping around that reduction: recurrences that accelerate `r`,
//! closed forms for `t = 1` (any admissible s) and `t = 2`, and the scanner
//! for the integrality conjecture about `U_n * (H_{i+j})^{-1}`.

use crate::combinatorics::{binomial, binomial_general, double_factorial, factorial};
use crate::elimination::{det_oracle, invert_oracle};
use crate::moments::{harmonic_number, harmonic_numbers};
use crate::stieltjes::hankel_matrix;
use crate::{closed_forms, HankelError, Mat, MomentKind, Rational};
use num_bigint::BigInt;
use num_traits::One;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

/// Which route produced an [`RValue`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RRoute {
    DirectSum,
    Recurrence,
}

/// One computed value of `r(n, t, s)` tagged with the route that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RValue {
    pub n: usize,
    pub t: Rational,
    pub s: Rational,
    pub value: Rational,
    pub route: RRoute,
}

/// `r(n, t, s) = sum_{j=0}^{n} (-t)^{n-j} C(n,j) C(n+j+s-1, n) H_j(t, s)`,
/// the authoritative definition. `r(0) = 0` since `H_0 = 0`.
pub fn r_direct(n: usize, t: &Rational, s: &Rational) -> Rational {
    let hs = harmonic_numbers(n, t, s);
    let neg_t = -t;
    let mut acc = Rational::zero();
    for (j, h) in hs.iter().enumerate() {
        if h.is_zero() {
            continue;
        }
        let upper = &(s + &Rational::from_integer(n + j)) - &Rational::one();
        let term = &(&neg_t.pow((n - j) as i64) * &Rational::from_integer(binomial(n, j)))
            * &(&binomial_general(&upper, n) * h);
        acc = &acc + &term;
    }
    acc
}

/// `r(0..=nmax)` by the three-term recurrence
///
/// ```text
/// c2(n) r(n+2) = c1(n) r(n+1) - c0(n) r(n)
/// c0(n) = (n+1)(n+s)(2n+3+s) t^2
/// c1(n) = (2n+2+s) ((2n+1)(2n+3) + 4s(n+1) + s^2 - 2(n+1)^2 t - st(2n+1+s))
/// c2(n) = (n+2)(n+1+s)(2n+1+s)
/// ```
///
/// seeded with `r(0) = 0` and `r(1) = r_direct(1, t, s)`. Admissible s
/// keeps every `c2(n)` nonzero. At s = 1 each step coincides with the
/// classical `n r(n) + (t-2)(2n-1) r(n-1) + t^2 (n-1) r(n-2) = 0`.
pub fn r_recurrence(nmax: usize, t: &Rational, s: &Rational) -> Vec<Rational> {
    let mut seq = Vec::with_capacity(nmax + 1);
    seq.push(Rational::zero());
    if nmax == 0 {
        return seq;
    }
    seq.push(r_direct(1, t, s));
    let one = Rational::one();
    for n in 0..nmax - 1 {
        let nr = Rational::from_integer(n);
        let c0 = [
            &nr + &one,
            &nr + s,
            &(&(&nr + &nr) + s) + &Rational::from(3),
        ]
        .into_iter()
        .product::<Rational>()
            * t.pow(2);
        let two_np1 = Rational::from_integer(2 * n + 1);
        let np1 = Rational::from_integer(n + 1);
        let inner = &(&(&two_np1 * &Rational::from_integer(2 * n + 3))
            + &(&(s * &np1) * &Rational::from(4)))
            + &(s * s);
        let inner = &inner - &(&(&(&np1 * &np1) * &Rational::from(2)) * t);
        let inner = &inner - &(&(s * t) * &(&two_np1 + s));
        let c1 = &(&(&nr + &nr) + &(s + &Rational::from(2))) * &inner;
        let c2 = [
            &nr + &Rational::from(2),
            &(&nr + s) + &one,
            &(&(&nr + &nr) + s) + &one,
        ]
        .into_iter()
        .product::<Rational>();
        let next = &(&(&c1 * &seq[n + 1]) - &(&c0 * &seq[n])) / &c2;
        seq.push(next);
    }
    seq
}

/// The s = 1 recurrence in its classical shape, kept as an independent
/// check that the general recurrence really specializes to it:
/// `n r(n) = -(t-2)(2n-1) r(n-1) - t^2 (n-1) r(n-2)` from `r(0) = 0`,
/// `r(1) = 2t`.
pub fn r_recurrence_s1(nmax: usize, t: &Rational) -> Vec<Rational> {
    let mut seq = Vec::with_capacity(nmax + 1);
    seq.push(Rational::zero());
    if nmax == 0 {
        return seq;
    }
    seq.push(t * &Rational::from(2));
    for n in 2..=nmax {
        let a = &(&(t - &Rational::from(2)) * &Rational::from_integer(2 * n - 1)) * &seq[n - 1];
        let b = &(&t.pow(2) * &Rational::from_integer(n - 1)) * &seq[n - 2];
        seq.push(&(-(&a + &b)) / &Rational::from_integer(n));
    }
    seq
}

/// Computes `r(n, t, s)` by the requested route, tagged.
pub fn r_value(n: usize, t: &Rational, s: &Rational, route: RRoute) -> RValue {
    let value = match route {
        RRoute::DirectSum => r_direct(n, t, s),
        RRoute::Recurrence => r_recurrence(n, t, s).pop().expect("nonempty"),
    };
    RValue {
        n,
        t: t.clone(),
        s: s.clone(),
        value,
        route,
    }
}

/// `det (H_{i+j}(t,s))_{i,j=0}^n` through the reduction; 0 at n = 0.
pub fn harmonic_hankel_det(n: usize, t: &Rational, s: &Rational) -> Rational {
    if n == 0 {
        return Rational::zero();
    }
    let upper = &(s + &Rational::from_integer(2 * n)) - &Rational::one();
    let front = (-t).pow(n as i64) / binomial_general(&upper, n);
    let lower = closed_forms::generalized_det_closed(n - 1, t, s);
    &(&front * &lower) * &r_direct(n, t, s)
}

/// Closed form at t = 1, s = 1:
/// `(-1)^n 2 H_n / (C(2n,n) prod_{j=1}^{n-1} (2j+1) C(2j,j)^2)`; 0 at n = 0.
pub fn harmonic_det_closed_t1(n: usize) -> Rational {
    if n == 0 {
        return Rational::zero();
    }
    let mut den = binomial(2 * n, n);
    for j in 1..n {
        let b = binomial(2 * j, j);
        den *= 2 * j + 1;
        den *= &b * &b;
    }
    let h = harmonic_number(n, &Rational::one(), &Rational::one());
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    &(&Rational::from(2 * sign) * &h) / &Rational::from_integer(den)
}

/// Closed form at t = 1, general s:
/// `(-1)^n s^{n-1} (s H_n + H_n(1,s)) /
///  (C(2n+s-1, n) prod_{j=1}^{n-1} (2j+s) C(2j+s-1, j)^2)`; 0 at n = 0.
/// The numerator uses `r(n, 1, s) = s H_n + H_n(1, s)`.
pub fn harmonic_det_closed_s(n: usize, s: &Rational) -> Rational {
    if n == 0 {
        return Rational::zero();
    }
    let one = Rational::one();
    let h_classic = harmonic_number(n, &one, &one);
    let h_s = harmonic_number(n, &one, s);
    let num = &s.pow(n as i64 - 1) * &(&(s * &h_classic) + &h_s);
    let mut den = binomial_general(&(&(s + &Rational::from_integer(2 * n)) - &one), n);
    for j in 1..n {
        let b = binomial_general(&(&(s + &Rational::from_integer(2 * j)) - &one), j);
        den = &den * &(&(s + &Rational::from_integer(2 * j)) * &(&b * &b));
    }
    let v = &num / &den;
    if n.is_multiple_of(2) {
        v
    } else {
        -v
    }
}

/// Closed form at t = 2: 0 for even order; for odd order `n = 2m+1`
///
/// ```text
/// (-1)^{m+1} 2^{4m^2+7m+3} m! / ((2m+1)! (2m+1)!!)
///   / prod_{j=1}^{2m+1} C(2j,j) C(2j-1,j)
/// ```
pub fn harmonic_det_closed_t2(n: usize) -> Rational {
    if n.is_multiple_of(2) {
        return Rational::zero();
    }
    let m = (n - 1) / 2;
    let num = BigInt::one() << (4 * m * m + 7 * m + 3);
    let num = num * factorial(m);
    let mut den = factorial(2 * m + 1) * double_factorial(2 * m + 1);
    for j in 1..=n {
        den *= binomial(2 * j, j) * binomial(2 * j - 1, j);
    }
    let v = Rational::new(num, den);
    if m.is_multiple_of(2) {
        -v
    } else {
        v
    }
}

/// Verifies the elimination step behind the reduction, entirely by oracle:
/// `det (H_{i+j}(t))_{0..n}` against `(-t)^n` times the determinant of the
/// bordered matrix whose first n columns are the Hilbert moments and whose
/// last column is `(H_0, ..., H_n)`. Both sides go through [`det_oracle`].
pub fn bordered_reduction_check(n: usize, t: &Rational) -> Result<bool, HankelError> {
    if n == 0 {
        return Err(HankelError::InvalidParameter(
            "bordered reduction needs n >= 1".to_owned(),
        ));
    }
    let one = Rational::one();
    let kind = MomentKind::harmonic(t.clone(), one.clone())?;
    let lhs = det_oracle(&hankel_matrix(&kind, n))?;
    let hs = harmonic_numbers(n, t, &one);
    let bordered = Mat::from_fn(n + 1, n + 1, |i, j| {
        if j < n {
            t.pow((i + j) as i64) / Rational::from_integer(i + j + 1)
        } else {
            hs[i].clone()
        }
    });
    let rhs = (-t).pow(n as i64) * det_oracle(&bordered)?;
    Ok(lhs == rhs)
}

/// Witness that some entry of `U_n * (H_{i+j})^{-1}` is not an integer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureWitness {
    pub i: usize,
    pub j: usize,
    pub entry: Rational,
}

/// Integrality verdict for one order n: with `2 H_n = U_n / V_n` in lowest
/// terms, does `U_n * (H_{i+j})_{i,j=0}^n^{-1}` have integer entries?
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureReport {
    pub n: usize,
    pub u_n: BigInt,
    pub holds: bool,
    pub witness: Option<ConjectureWitness>,
}

impl Serialize for ConjectureReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("ConjectureReport", 4)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("U_n", &self.u_n.to_string())?;
        st.serialize_field("holds", &self.holds)?;
        st.serialize_field("witness", &self.witness)?;
        st.end()
    }
}

/// Scans the integrality conjecture for `1 <= n <= nmax` (t = s = 1).
/// `n = 0` is excluded: the 1x1 matrix `[H_0] = [0]` is singular.
pub fn conjecture_scan(nmax: usize) -> Result<Vec<ConjectureReport>, HankelError> {
    if nmax == 0 {
        return Err(HankelError::InvalidParameter(
            "conjecture scan needs nmax >= 1".to_owned(),
        ));
    }
    let one = Rational::one();
    let kind = MomentKind::harmonic(one.clone(), one.clone())?;
    let mut reports = Vec::with_capacity(nmax);
    for n in 1..=nmax {
        let inv = invert_oracle(&hankel_matrix(&kind, n))?;
        let two_h = &Rational::from(2) * &harmonic_number(n, &one, &one);
        let u_n = two_h.numer().clone();
        let u = Rational::from_integer(u_n.clone());
        let mut witness = None;
        'scan: for i in 0..=n {
            for j in 0..=n {
                let entry = &u * &inv[(i, j)];
                if !entry.is_integer() {
                    witness = Some(ConjectureWitness { i, j, entry });
                    break 'scan;
                }
            }
        }
        reports.push(ConjectureReport {
            n,
            u_n,
            holds: witness.is_none(),
            witness,
        });
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn r_direct_first_values() {
        assert_eq!(r_direct(0, &rat!(5), &rat!(1)), rat!(0));
        assert_eq!(r_direct(1, &rat!(3), &rat!(1)), rat!(6)); // r(1, t) = 2t
        assert_eq!(r_direct(3, &rat!(1), &rat!(1)), rat!(11, 3)); // 2 H_3
        assert_eq!(r_direct(1, &rat!(1), &rat!(2)), rat!(3)); // 1 + s
        assert_eq!(r_direct(5, &rat!(1), &rat!(1)), rat!(137, 30));
    }

    #[test]
    fn r_is_twice_harmonic_at_t1_s1() {
        let one = rat!(1);
        for n in 0..=25 {
            assert_eq!(
                r_direct(n, &one, &one),
                &rat!(2) * &harmonic_number(n, &one, &one),
                "n={n}"
            );
        }
    }

    #[test]
    fn r_at_t1_general_s() {
        let one = rat!(1);
        for s in [rat!(2), rat!(1, 2), rat!(7, 3)] {
            for n in 0..=12 {
                let expected =
                    &(&s * &harmonic_number(n, &one, &one)) + &harmonic_number(n, &one, &s);
                assert_eq!(r_direct(n, &one, &s), expected, "s={s} n={n}");
            }
        }
    }

    #[test]
    fn recurrence_routes_agree() {
        for (t, s) in [
            (rat!(1), rat!(1)),
            (rat!(2), rat!(1)),
            (rat!(1), rat!(2)),
            (rat!(1, 2), rat!(3, 2)),
            (rat!(3), rat!(7, 3)),
        ] {
            let seq = r_recurrence(15, &t, &s);
            assert_eq!(seq.len(), 16);
            for (n, v) in seq.iter().enumerate() {
                assert_eq!(v, &r_direct(n, &t, &s), "t={t} s={s} n={n}");
            }
        }
        assert_eq!(r_recurrence(0, &rat!(1), &rat!(1)), vec![rat!(0)]);
    }

    #[test]
    fn general_recurrence_specializes_to_classical_at_s1() {
        for t in [rat!(1), rat!(2), rat!(1, 2)] {
            assert_eq!(
                r_recurrence(20, &t, &rat!(1)),
                r_recurrence_s1(20, &t),
                "t={t}"
            );
        }
    }

    #[test]
    fn r_at_t2_vanishes_at_even_n() {
        let seq = r_recurrence_s1(9, &rat!(2));
        assert_eq!(seq[2], rat!(0));
        assert_eq!(seq[4], rat!(0));
        assert_eq!(seq[6], rat!(0));
        assert_eq!(seq[3], rat!(-32, 3));
        // r(2m+1, 2) = (-1)^m m! 2^{3m+2} / (2m+1)!!
        for m in 0..=4usize {
            let expected = &Rational::new(factorial(m) << (3 * m + 2), double_factorial(2 * m + 1))
                * &(if m % 2 == 0 { rat!(1) } else { rat!(-1) });
            assert_eq!(seq[2 * m + 1], expected, "m={m}");
        }
    }

    #[test]
    fn r_value_tags_routes() {
        let direct = r_value(4, &rat!(1), &rat!(1), RRoute::DirectSum);
        let rec = r_value(4, &rat!(1), &rat!(1), RRoute::Recurrence);
        assert_eq!(direct.value, rec.value);
        assert_eq!(direct.route, RRoute::DirectSum);
        assert_eq!(direct.value, rat!(25, 6));
    }

    #[test]
    fn determinant_reduction_matches_oracle() {
        for (t, s) in [
            (rat!(1), rat!(1)),
            (rat!(2), rat!(1)),
            (rat!(1), rat!(2)),
            (rat!(1), rat!(7, 3)),
            (rat!(1, 2), rat!(3, 2)),
        ] {
            let kind = MomentKind::harmonic(t.clone(), s.clone()).unwrap();
            for n in 0..=5 {
                assert_eq!(
                    harmonic_hankel_det(n, &t, &s),
                    det_oracle(&hankel_matrix(&kind, n)).unwrap(),
                    "t={t} s={s} n={n}"
                );
            }
        }
        assert_eq!(harmonic_hankel_det(2, &rat!(1), &rat!(1)), rat!(1, 24));
        assert_eq!(harmonic_hankel_det(2, &rat!(1), &rat!(2)), rat!(7, 270));
    }

    #[test]
    fn closed_form_t1() {
        assert_eq!(harmonic_det_closed_t1(0), rat!(0));
        assert_eq!(harmonic_det_closed_t1(1), rat!(-1));
        assert_eq!(harmonic_det_closed_t1(2), rat!(1, 24));
        assert_eq!(harmonic_det_closed_t1(3), rat!(-11, 129600));
        assert_eq!(harmonic_det_closed_t1(4), rat!(1, 101606400));
        for n in 0..=10 {
            assert_eq!(
                harmonic_det_closed_t1(n),
                harmonic_hankel_det(n, &rat!(1), &rat!(1)),
                "n={n}"
            );
            assert_eq!(
                harmonic_det_closed_t1(n),
                harmonic_det_closed_s(n, &rat!(1)),
                "s-form at 1, n={n}"
            );
        }
    }

    #[test]
    fn closed_form_general_s() {
        for s in [rat!(2), rat!(1, 2), rat!(7, 3)] {
            for n in 0..=8 {
                assert_eq!(
                    harmonic_det_closed_s(n, &s),
                    harmonic_hankel_det(n, &rat!(1), &s),
                    "s={s} n={n}"
                );
            }
        }
        // First-terms display at n = 2: s(1+3s)/((1+s)^3(2+s)(3+s)).
        assert_eq!(harmonic_det_closed_s(2, &rat!(2)), rat!(7, 270));
    }

    #[test]
    fn closed_form_t2() {
        assert_eq!(harmonic_det_closed_t2(0), rat!(0));
        assert_eq!(harmonic_det_closed_t2(2), rat!(0));
        assert_eq!(harmonic_det_closed_t2(1), rat!(-4));
        assert_eq!(harmonic_det_closed_t2(3), rat!(256, 2025));
        let two = rat!(2);
        let one = rat!(1);
        let kind = MomentKind::harmonic(two.clone(), one.clone()).unwrap();
        for n in 0..=9 {
            let closed = harmonic_det_closed_t2(n);
            assert_eq!(closed, harmonic_hankel_det(n, &two, &one), "n={n}");
            assert_eq!(
                closed,
                det_oracle(&hankel_matrix(&kind, n)).unwrap(),
                "oracle n={n}"
            );
        }
    }

    #[test]
    fn bordered_reduction_holds() {
        for t in [rat!(1), rat!(2), rat!(1, 2)] {
            for n in 1..=5 {
                assert!(bordered_reduction_check(n, &t).unwrap(), "t={t} n={n}");
            }
        }
        assert!(matches!(
            bordered_reduction_check(0, &rat!(1)),
            Err(HankelError::InvalidParameter(_))
        ));
    }

    #[test]
    fn conjecture_scan_small_orders() {
        let reports = conjecture_scan(5).unwrap();
        assert_eq!(reports.len(), 5);
        let expected_u: [i64; 5] = [2, 3, 11, 25, 137];
        for (r, &u) in reports.iter().zip(&expected_u) {
            assert!(r.holds, "n={}", r.n);
            assert!(r.witness.is_none());
            assert_eq!(r.u_n, BigInt::from(u), "n={}", r.n);
        }
        assert!(conjecture_scan(0).is_err());
    }

    #[test]
    fn conjecture_report_serde_shape() {
        let reports = conjecture_scan(1).unwrap();
        let json = serde_json::to_string(&reports[0]).unwrap();
        assert_eq!(json, r#"{"n":1,"U_n":"2","holds":true,"witness":null}"#);
        // A fabricated failing report keeps the witness schema honest.
        let fake = ConjectureReport {
            n: 7,
            u_n: BigInt::from(363),
            holds: false,
            witness: Some(ConjectureWitness {
                i: 1,
                j: 2,
                entry: rat!(1, 3),
            }),
        };
        let json = serde_json::to_string(&fake).unwrap();
        assert_eq!(
            json,
            r#"{"n":7,"U_n":"363","holds":false,"witness":{"i":1,"j":2,"entry":"1/3"}}"#
        );
    }
}
