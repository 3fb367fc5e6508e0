//! JSON documents emitted on standard output.
//!
//! Rationals travel as `["num", "den"]` decimal strings, polynomials as
//! ascending coefficient arrays, bivariate densities as arrays of `m`-polynomials
//! indexed by the power of `t`.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use torsionlab_core::exactalg::{BiPoly, Poly, Rational, Var};
use torsionlab_core::torsion::SymbolicConstant;

use crate::error::{CliError, ErrorCode};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rat(pub Rational);

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [self.0.numer().to_string(), self.0.denom().to_string()].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let [num, den] = <[String; 2]>::deserialize(d)?;
        let num = BigInt::from_str(&num).map_err(D::Error::custom)?;
        let den = BigInt::from_str(&den).map_err(D::Error::custom)?;
        if !den.is_positive() {
            return Err(D::Error::custom("denominator must be positive"));
        }
        Ok(Rat(Rational::new(num, den)))
    }
}

impl From<Rational> for Rat {
    fn from(r: Rational) -> Self {
        Rat(r)
    }
}

impl From<&Rational> for Rat {
    fn from(r: &Rational) -> Self {
        Rat(r.clone())
    }
}

pub fn rats(xs: &[Rational]) -> Vec<Rat> {
    xs.iter().map(Rat::from).collect()
}

pub fn poly_json(p: &Poly) -> Vec<Rat> {
    rats(p.coeffs())
}

pub fn poly_from_json(var: Var, coeffs: &[Rat]) -> Poly {
    Poly::from_coeffs(var, coeffs.iter().map(|r| r.0.clone()).collect())
}

pub fn bipoly_json(b: &BiPoly) -> Vec<Vec<Rat>> {
    b.t_coeffs().iter().map(poly_json).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtraFactor {
    pub label: String,
    pub exp: i32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prefactor {
    pub rational: Rat,
    pub pi_exp: i32,
    #[serde(rename = "vol_X_exp")]
    pub vol_x_exp: i32,
    pub vol_dual_exp: i32,
    pub extra_factors: Vec<ExtraFactor>,
}

impl From<&SymbolicConstant> for Prefactor {
    fn from(c: &SymbolicConstant) -> Self {
        Prefactor {
            rational: Rat::from(&c.rational),
            pi_exp: c.pi_exp,
            vol_x_exp: c.vol_x_exp,
            vol_dual_exp: c.vol_dual_exp,
            extra_factors: c
                .extra_factors
                .iter()
                .map(|(label, exp)| ExtraFactor { label: label.clone(), exp: *exp })
                .collect(),
        }
    }
}

impl From<&Prefactor> for SymbolicConstant {
    fn from(p: &Prefactor) -> Self {
        SymbolicConstant {
            rational: p.rational.0.clone(),
            pi_exp: p.pi_exp,
            vol_x_exp: p.vol_x_exp,
            vol_dual_exp: p.vol_dual_exp,
            extra_factors: p.extra_factors.iter().map(|e| (e.label.clone(), e.exp)).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KostantRow {
    pub length: usize,
    /// `λ` as a polynomial in `m`, signed.
    pub lambda: Vec<Rat>,
    /// Coordinates of `σ` in the `M⁰` basis, each a polynomial in `m`.
    pub sigma: Vec<Vec<Rat>>,
    /// `‖σ+ρ_M‖² − ‖ρ_G‖²`.
    pub c_sigma: Vec<Rat>,
    /// `λ² + c(σ)` equals the Casimir polynomial.
    pub casimir_split: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub id: u32,
    pub name: String,
    pub passed: u64,
    pub total: u64,
    pub ok: bool,
    pub millis: u64,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub group: String,
    pub weight: Vec<i64>,
    /// Prefactor of the torsion polynomial.
    pub prefactor: Prefactor,
    /// `C_Λ` with `P(m) = C_Λ·m·dim τ(m) + O(m^{deg dim})`.
    pub leading_constant: Rat,
    /// Coefficient of `m·dim τ(m)` in `log T`.
    pub asymptotic_constant: Prefactor,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Response {
    Torsion {
        group: String,
        weight: Vec<i64>,
        delta: u32,
        zero_flag: bool,
        poly: Vec<Rat>,
        prefactor: Prefactor,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        m: Option<i64>,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        value: Option<Rat>,
    },
    Dimension {
        group: String,
        weight: Vec<i64>,
        poly: Vec<Rat>,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        m: Option<i64>,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        value: Option<Rat>,
    },
    Kostant {
        group: String,
        weight: Vec<i64>,
        /// θ-normalized representative the data were computed for.
        normalized: Vec<i64>,
        casimir: Vec<Rat>,
        data: Vec<KostantRow>,
    },
    Plancherel {
        group: String,
        sigma: Vec<Vec<Rat>>,
        density: Vec<Vec<Rat>>,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        m: Option<i64>,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        value: Option<Vec<Rat>>,
    },
    Gap {
        group: String,
        weight: Vec<i64>,
        m: i64,
        p: usize,
        casimir: Rat,
        max_spin: i64,
        gap: Rat,
    },
    Verify {
        seed: u64,
        max_rank: usize,
        ok: bool,
        millis: u64,
        suites: Vec<SuiteReport>,
    },
    Table {
        name: String,
        rows: Vec<TableRow>,
    },
    Golden {
        path: String,
        records: usize,
    },
    Error {
        code: ErrorCode,
        message: String,
    },
}

impl Response {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("response serializes")
    }

    pub fn from_json(text: &str) -> Result<Response, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::new(ErrorCode::Internal, e.to_string()))
    }
}

impl From<&CliError> for Response {
    fn from(e: &CliError) -> Self {
        Response::Error { code: e.code, message: e.message.clone() }
    }
}

/// Integer view of rational coordinates, for echoing validated weights.
pub fn int_coords(xs: &[Rational]) -> Vec<i64> {
    xs.iter()
        .map(|x| {
            debug_assert!(x.is_integer());
            i64::try_from(x.to_integer()).unwrap_or(if x.is_negative() { i64::MIN } else { i64::MAX })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use torsionlab_core::exactalg::rat;

    #[test]
    fn rational_wire_format() {
        let json = serde_json::to_string(&Rat(rat(-6, 4))).unwrap();
        assert_eq!(json, r#"["-3","2"]"#);
        assert!(serde_json::from_str::<Rat>(r#"["6","-4"]"#).is_err());
        assert!(serde_json::from_str::<Rat>(r#"["1.5","2"]"#).is_err());
        let reduced: Rat = serde_json::from_str(r#"["6","4"]"#).unwrap();
        assert_eq!(reduced, Rat(rat(3, 2)));
    }

    #[test]
    fn error_codes_match_wire_names() {
        for code in [ErrorCode::ThetaInvariantWeight, ErrorCode::Io, ErrorCode::BadGroup] {
            let json = serde_json::to_string(&code).unwrap();
            assert_eq!(json, format!("\"{}\"", code.as_str()));
        }
    }
}
