//! Independent elimination oracles. Everything else in this crate that
//! claims a determinant or an inverse in closed form is checked against
//! these two functions, so they deliberately share no code with the
//! orthogonal-polynomial machinery: determinants go through integer
//! fraction-free elimination, inverses through plain rational Gauss-Jordan.

use crate::{HankelError, Mat, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Exact determinant via Bareiss fraction-free elimination.
///
/// Each row is first scaled by the lcm of its denominators, which keeps the
/// working matrix over the integers; the determinant of the original matrix
/// is the integer result divided by the product of the row scales. Bareiss'
/// pivot condensation keeps every intermediate entry an exact minor of the
/// scaled matrix, so divisions along the way are exact and intermediate
/// growth stays polynomial.
///
/// The empty 0x0 matrix has determinant 1.
pub fn det_oracle(m: &Mat) -> Result<Rational, HankelError> {
    if !m.is_square() {
        return Err(HankelError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(Rational::one());
    }

    let mut scale = BigInt::one();
    let mut work: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for i in 0..n {
        let lcm = m
            .row(i)
            .iter()
            .fold(BigInt::one(), |acc, e| acc.lcm(e.denom()));
        work.push(
            m.row(i)
                .iter()
                .map(|e| e.numer() * (&lcm / e.denom()))
                .collect(),
        );
        scale *= &lcm;
    }

    let det = bareiss(&mut work);
    Ok(Rational::new(det, scale))
}

fn bareiss(m: &mut [Vec<BigInt>]) -> BigInt {
    let n = m.len();
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = !sign;
                }
                None => return BigInt::zero(),
            }
        }
        let pivot_row = m[k].clone();
        for row in &mut m[k + 1..] {
            let lead = std::mem::replace(&mut row[k], BigInt::zero());
            for j in k + 1..n {
                let num = &row[j] * &pivot_row[k] - &lead * &pivot_row[j];
                row[j] = num / &prev;
            }
        }
        prev = pivot_row[k].clone();
    }
    let det = std::mem::take(&mut m[n - 1][n - 1]);
    if sign {
        -det
    } else {
        det
    }
}

/// Exact inverse via Gauss-Jordan elimination on `[M | I]`.
///
/// Fails with the pivot column index when no nonzero pivot can be found,
/// which is exactly the singular case.
pub fn invert_oracle(m: &Mat) -> Result<Mat, HankelError> {
    if !m.is_square() {
        return Err(HankelError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let width = 2 * n;
    let mut aug: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut row = m.row(i).to_vec();
            row.extend((0..n).map(|j| {
                if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            row
        })
        .collect();

    for k in 0..n {
        let found = (k..n)
            .find(|&r| !aug[r][k].is_zero())
            .ok_or(HankelError::Singular { pivot: k })?;
        aug.swap(k, found);
        let inv = aug[k][k].recip();
        for cell in &mut aug[k][k..] {
            *cell = &*cell * &inv;
        }
        let pivot_row = aug[k].clone();
        for (r, row) in aug.iter_mut().enumerate() {
            if r == k || row[k].is_zero() {
                continue;
            }
            let factor = std::mem::replace(&mut row[k], Rational::zero());
            for j in k + 1..width {
                row[j] = &row[j] - &(&factor * &pivot_row[j]);
            }
        }
    }

    Ok(Mat::from_fn(n, n, |i, j| aug[i][n + j].clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;
    use proptest::prelude::*;

    #[test]
    fn det_basic_shapes() {
        assert_eq!(det_oracle(&Mat::zero(0, 0)).unwrap(), rat!(1));
        assert_eq!(det_oracle(&Mat::from_i64(&[&[7]])).unwrap(), rat!(7));
        assert_eq!(
            det_oracle(&Mat::from_i64(&[&[1, 2], &[3, 4]])).unwrap(),
            rat!(-2)
        );
        assert_eq!(det_oracle(&Mat::identity(6)).unwrap(), rat!(1));
        assert_eq!(
            det_oracle(&Mat::zero(1, 2)),
            Err(HankelError::NotSquare { rows: 1, cols: 2 })
        );
    }

    #[test]
    fn det_needs_row_swaps() {
        let m = Mat::from_i64(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
        assert_eq!(det_oracle(&m).unwrap(), rat!(-1));
        let m = Mat::from_i64(&[&[0, 0, 2], &[0, 3, 0], &[5, 0, 0]]);
        assert_eq!(det_oracle(&m).unwrap(), rat!(-30));
    }

    #[test]
    fn det_rational_entries() {
        // Classic 3x3 Cauchy-type matrix with entries 1/(i+j+1).
        let m = Mat::from_fn(3, 3, |i, j| rat!(1, (i + j + 1) as i64));
        assert_eq!(det_oracle(&m).unwrap(), rat!(1, 2160));
    }

    #[test]
    fn det_of_singular_matrix_is_zero() {
        let m = Mat::from_i64(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(det_oracle(&m).unwrap(), rat!(0));
    }

    #[test]
    fn invert_round_trip() {
        let m = Mat::from_rows(vec![
            vec![rat!(1), rat!(1, 2), rat!(1, 3)],
            vec![rat!(1, 2), rat!(1, 3), rat!(1, 4)],
            vec![rat!(1, 3), rat!(1, 4), rat!(1, 5)],
        ]);
        let inv = invert_oracle(&m).unwrap();
        assert_eq!(
            inv,
            Mat::from_i64(&[&[9, -36, 30], &[-36, 192, -180], &[30, -180, 180]])
        );
        assert!((&m * &inv).is_identity());
        assert!((&inv * &m).is_identity());
    }

    #[test]
    fn invert_reports_singularity_with_pivot() {
        let m = Mat::from_i64(&[&[1, 2], &[2, 4]]);
        assert_eq!(invert_oracle(&m), Err(HankelError::Singular { pivot: 1 }));
        let z = Mat::zero(2, 2);
        assert_eq!(invert_oracle(&z), Err(HankelError::Singular { pivot: 0 }));
    }

    fn arb_matrix(n: usize) -> impl Strategy<Value = Mat> {
        prop::collection::vec((-20i64..20, 1i64..6).prop_map(Rational::from), n * n)
            .prop_map(move |data| Mat::from_fn(n, n, |i, j| data[i * n + j].clone()))
    }

    proptest! {
        #[test]
        fn det_matches_cofactor_expansion(m in arb_matrix(3)) {
            let cof = |r: usize| {
                let minor = Mat::from_fn(2, 2, |i, j| {
                    m[(if i < r { i } else { i + 1 }, j + 1)].clone()
                });
                det_oracle(&minor).unwrap()
            };
            let expanded = &(&m[(0, 0)] * &cof(0)) - &(&m[(1, 0)] * &cof(1))
                + &m[(2, 0)] * &cof(2);
            prop_assert_eq!(det_oracle(&m).unwrap(), expanded);
        }

        #[test]
        fn inverse_is_two_sided(m in arb_matrix(3)) {
            match invert_oracle(&m) {
                Ok(inv) => {
                    prop_assert!((&m * &inv).is_identity());
                    prop_assert!((&inv * &m).is_identity());
                }
                Err(_) => prop_assert_eq!(det_oracle(&m).unwrap(), rat!(0)),
            }
        }

        #[test]
        fn det_is_multiplicative(a in arb_matrix(3), b in arb_matrix(3)) {
            let prod = det_oracle(&(&a * &b)).unwrap();
            prop_assert_eq!(prod, det_oracle(&a).unwrap() * det_oracle(&b).unwrap());
        }
    }
}
