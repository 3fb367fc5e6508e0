use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use super::{ExactAlgError, Poly, Rational, Var};

/// Unique even polynomial of degree `≤ 2(k−1)` in `t` taking `value` at both
/// `±abscissa` for each of the `k` nodes.
///
/// Solved by Gaussian elimination in the basis `1, t², t⁴, …`.
pub fn interpolate_even(nodes: &[(Rational, Rational)]) -> Result<Poly, ExactAlgError> {
    if nodes.is_empty() {
        return Err(ExactAlgError::NoNodes);
    }
    for (i, (a, _)) in nodes.iter().enumerate() {
        if nodes[..i].iter().any(|(b, _)| b.abs() == a.abs()) {
            return Err(ExactAlgError::DuplicateAbscissa);
        }
    }

    let k = nodes.len();
    // Augmented matrix rows: [x^0, x^1, …, x^{k−1} | value] with x = abscissa².
    let mut rows: Vec<Vec<Rational>> = nodes
        .iter()
        .map(|(a, v)| {
            let x = a * a;
            let mut row = Vec::with_capacity(k + 1);
            let mut pow = Rational::from_integer(1.into());
            for _ in 0..k {
                row.push(pow.clone());
                pow *= &x;
            }
            row.push(v.clone());
            row
        })
        .collect();

    for col in 0..k {
        let pivot = (col..k)
            .find(|&r| !rows[r][col].is_zero())
            .ok_or(ExactAlgError::InconsistentSystem)?;
        rows.swap(col, pivot);
        let inv = Rational::from_integer(1.into()) / &rows[col][col];
        for x in rows[col].iter_mut().skip(col) {
            *x *= &inv;
        }
        let pivot_row = rows[col].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x -= &factor * p;
            }
        }
    }

    let mut coeffs = Vec::with_capacity(2 * k - 1);
    for (i, row) in rows.into_iter().enumerate() {
        if i > 0 {
            coeffs.push(Rational::zero());
        }
        coeffs.push(row[k].clone());
    }
    Ok(Poly::from_coeffs(Var::T, coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, rat};
    use alloc::vec;

    #[test]
    fn two_nodes() {
        let p = interpolate_even(&[(int(2), int(1)), (int(1), int(0))]).unwrap();
        assert_eq!(p, Poly::from_coeffs(Var::T, vec![rat(-1, 3), int(0), rat(1, 3)]));
    }

    #[test]
    fn all_ones_is_constant() {
        let p = interpolate_even(&[(int(3), int(1)), (int(2), int(1))]).unwrap();
        assert_eq!(p, Poly::one(Var::T));
        let single = interpolate_even(&[(rat(5, 2), int(1))]).unwrap();
        assert_eq!(single, Poly::one(Var::T));
    }

    #[test]
    fn duplicate_absolute_abscissa_is_rejected() {
        assert_eq!(
            interpolate_even(&[(int(2), int(1)), (int(-2), int(0))]),
            Err(ExactAlgError::DuplicateAbscissa)
        );
        assert_eq!(interpolate_even(&[]), Err(ExactAlgError::NoNodes));
    }

    #[test]
    fn zero_abscissa_is_allowed() {
        let p = interpolate_even(&[(int(0), int(4)), (int(1), int(5))]).unwrap();
        assert_eq!(p, Poly::from_coeffs(Var::T, vec![int(4), int(0), int(1)]));
    }
}
