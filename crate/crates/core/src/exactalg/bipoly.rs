use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::{ExactAlgError, Poly, Rational, Var};

/// Polynomial in `t` whose coefficients are polynomials in `m`.
///
/// Stored densely in ascending powers of `t`; trailing zero coefficients are
/// stripped so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BiPoly {
    coeffs: Vec<Poly>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_m(Poly::one(Var::M))
    }

    /// Embeds a polynomial in `m` as a `t`-constant.
    pub fn from_m(p: Poly) -> Self {
        Self::from_t_coeffs(vec![p])
    }

    /// `slope(m) * t + intercept(m)`.
    pub fn t_linear(slope: Poly, intercept: Poly) -> Self {
        Self::from_t_coeffs(vec![intercept, slope])
    }

    /// Embeds a polynomial in `t` with constant coefficients.
    pub fn from_t(p: &Poly) -> Self {
        Self::from_t_coeffs(
            p.coeffs()
                .iter()
                .map(|c| Poly::constant(Var::M, c.clone()))
                .collect(),
        )
    }

    pub fn from_t_coeffs(coeffs: Vec<Poly>) -> Self {
        let mut coeffs: Vec<Poly> = coeffs.into_iter().map(|p| p.with_var(Var::M)).collect();
        while coeffs.last().is_some_and(Poly::is_zero) {
            coeffs.pop();
        }
        BiPoly { coeffs }
    }

    pub fn t_coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn t_coeff(&self, i: usize) -> Poly {
        self.coeffs.get(i).cloned().unwrap_or_else(|| Poly::zero(Var::M))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree_t(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn degree_m(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(Poly::degree).max()
    }

    pub fn eval(&self, t: &Rational, m: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * t + c.eval(m))
    }

    /// Fixes `m`, leaving a polynomial in `t`.
    pub fn eval_m(&self, m: &Rational) -> Poly {
        Poly::from_coeffs(Var::T, self.coeffs.iter().map(|c| c.eval(m)).collect())
    }

    /// Fixes `t`, leaving a polynomial in `m`.
    pub fn eval_t(&self, t: &Rational) -> Poly {
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(Var::M), |acc, c| &acc.scale(t) + c)
    }

    /// Substitutes `t := upper(m)`.
    pub fn substitute_t(&self, upper: &Poly) -> Result<Poly, ExactAlgError> {
        if upper.var() != Var::M {
            return Err(ExactAlgError::VariableMismatch { left: Var::M, right: upper.var() });
        }
        Ok(self
            .coeffs
            .iter()
            .rev()
            .fold(Poly::zero(Var::M), |acc, c| &(&acc * upper) + c))
    }

    pub fn scale_m(&self, p: &Poly) -> BiPoly {
        let p = p.clone().with_var(Var::M);
        BiPoly::from_t_coeffs(self.coeffs.iter().map(|c| c * &p).collect())
    }

    /// Antiderivative in `t` vanishing at `t = 0`.
    pub fn antiderivative_t(&self) -> BiPoly {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Poly::zero(Var::M));
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c.scale(&Rational::new(1.into(), (i as i64 + 1).into())));
        }
        BiPoly::from_t_coeffs(coeffs)
    }

    /// `p(-t, m)`.
    pub fn reflect_t(&self) -> BiPoly {
        BiPoly::from_t_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    pub fn is_even_t(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(Poly::is_zero)
    }
}

/// Exact `∫₀^{upper(m)} integrand(t, m) dt` as a polynomial in `m`.
pub fn integrate_zero_to(upper: &Poly, integrand: &BiPoly) -> Result<Poly, ExactAlgError> {
    integrand.antiderivative_t().substitute_t(upper)
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        BiPoly::from_t_coeffs((0..n).map(|i| &self.t_coeff(i) + &rhs.t_coeff(i)).collect())
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        BiPoly::from_t_coeffs((0..n).map(|i| &self.t_coeff(i) - &rhs.t_coeff(i)).collect())
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        let mut coeffs = vec![Poly::zero(Var::M); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        BiPoly::from_t_coeffs(coeffs)
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{i}")?,
            }
        }
        Ok(())
    }
}
