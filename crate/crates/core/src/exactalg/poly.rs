use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{ExactAlgError, Rational};

/// Formal variable of a univariate polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    M,
    T,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::M => "m",
            Var::T => "t",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Dense univariate polynomial with rational coefficients, ascending order.
///
/// The coefficient vector never ends in a zero; the zero polynomial has an
/// empty vector and no degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    var: Var,
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero(var: Var) -> Self {
        Poly { var, coeffs: Vec::new() }
    }

    pub fn one(var: Var) -> Self {
        Self::constant(var, Rational::one())
    }

    pub fn constant(var: Var, c: Rational) -> Self {
        Self::from_coeffs(var, vec![c])
    }

    /// The polynomial `x` itself.
    pub fn x(var: Var) -> Self {
        Self::from_coeffs(var, vec![Rational::zero(), Rational::one()])
    }

    /// `slope * x + intercept`.
    pub fn linear(var: Var, slope: Rational, intercept: Rational) -> Self {
        Self::from_coeffs(var, vec![intercept, slope])
    }

    pub fn monomial(var: Var, c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(var, coeffs)
    }

    pub fn from_coeffs(var: Var, mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { var, coeffs }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` stands for the degree of the zero polynomial (−∞).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Same coefficients, different variable tag.
    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Poly::zero(self.var);
        }
        Poly { var: self.var, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    fn check_var(&self, other: &Poly) -> Result<(), ExactAlgError> {
        if self.var == other.var {
            Ok(())
        } else {
            Err(ExactAlgError::VariableMismatch { left: self.var, right: other.var })
        }
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly, ExactAlgError> {
        self.check_var(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Ok(Poly::from_coeffs(self.var, coeffs))
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly, ExactAlgError> {
        self.check_var(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - other.coeff(i)).collect();
        Ok(Poly::from_coeffs(self.var, coeffs))
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly, ExactAlgError> {
        self.check_var(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(self.var));
        }
        let (a, da) = integer_parts(&self.coeffs);
        let (b, db) = integer_parts(&other.coeffs);
        let mut acc = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                acc[i + j] += x * y;
            }
        }
        let den = da * db;
        let coeffs = acc.into_iter().map(|c| Rational::new(c, den.clone())).collect();
        Ok(Poly::from_coeffs(self.var, coeffs))
    }

    pub fn pow(&self, exp: u32) -> Poly {
        (0..exp).fold(Poly::one(self.var), |acc, _| &acc * self)
    }

    /// Substitutes `x := inner`, where `inner` may live in another variable.
    /// The result carries `inner`'s variable.
    pub fn compose(&self, inner: &Poly) -> Poly {
        self.coeffs.iter().rev().fold(Poly::zero(inner.var), |acc, c| {
            let shifted = acc.try_mul(inner).expect("same variable by construction");
            shifted
                .try_add(&Poly::constant(inner.var, c.clone()))
                .expect("same variable by construction")
        })
    }

    /// Substitutes `x := alpha * y + beta`, returning a polynomial in `y`.
    pub fn substitute_affine(&self, alpha: &Rational, beta: &Rational, y: Var) -> Poly {
        self.compose(&Poly::linear(y, alpha.clone(), beta.clone()))
    }

    /// Antiderivative vanishing at zero.
    pub fn antiderivative(&self) -> Poly {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / Rational::from_integer((i as i64 + 1).into()));
        }
        Poly::from_coeffs(self.var, coeffs)
    }

    pub fn derivative(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rational::from_integer((i as i64).into()))
            .collect();
        Poly::from_coeffs(self.var, coeffs)
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
            .collect();
        Poly::from_coeffs(self.var, coeffs)
    }

    /// True when every odd coefficient vanishes.
    pub fn is_even(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(Zero::is_zero)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.try_add(rhs).expect("polynomial variable mismatch")
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.try_sub(rhs).expect("polynomial variable mismatch")
    }
}

/// Integer numerators over the lcm of the denominators.
fn integer_parts(coeffs: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let den = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let nums = coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
    (nums, den)
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.try_mul(rhs).expect("polynomial variable mismatch")
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { var: self.var, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

/// Renders like `2/9*m^3 + m^2 - 1/3`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            let unit = abs.is_one();
            match i {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !unit {
                        write!(f, "{abs}*")?;
                    }
                    f.write_str(self.var.name())?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
