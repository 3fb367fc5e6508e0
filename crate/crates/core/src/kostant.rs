//! Kostant data for `W¹`: for each minimal coset representative `w`, its
//! length, the split component `λ_{τ,w}` and the `M⁰`-type `σ_{τ,w}`, all
//! as functions of the scaling parameter `m` in `τ = τ_{mΛ}`.
//!
//! Only closed forms are used. For `SO⁰(p,q)` the `k = 0..n` half of `W¹` is
//! produced; the mirrored half `(−λ, w₀σ, 2n−k)` contributes identically to
//! every downstream sum.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::exactalg::{int, rat, Poly, Rational, Var};
use crate::rootsys::{
    casimir_poly, sl3_fundamental_coords, validate_dominant, validate_m_dominant, AffineWeight,
    GroupSpec, RootSysError, Weight,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KostantError {
    RootSys(RootSysError),
    /// `Λ_θ = Λ`: no θ-normalization exists and the torsion formula does not apply.
    ThetaInvariantWeight,
    /// Caller passed the θ-twisted representative (`k_{n+1} < 0`, or `τ₁ < τ₂`).
    NotThetaNormalized,
}

impl From<RootSysError> for KostantError {
    fn from(e: RootSysError) -> Self {
        KostantError::RootSys(e)
    }
}

impl fmt::Display for KostantError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KostantError::RootSys(e) => e.fmt(f),
            KostantError::ThetaInvariantWeight => f.write_str("highest weight is θ-invariant"),
            KostantError::NotThetaNormalized => {
                f.write_str("highest weight is not θ-normalized; apply theta_twist first")
            }
        }
    }
}

impl core::error::Error for KostantError {}

/// One element of `W¹` evaluated on `τ_{mΛ}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KostantDatum {
    /// `ℓ(w)`.
    pub length: usize,
    /// `λ_{τ(m),w}`, signed.
    pub lambda: Poly,
    /// Highest weight of `σ_{τ(m),w}` in the `M⁰` basis.
    pub sigma: AffineWeight,
}

impl KostantDatum {
    /// `(−1)^ℓ(w)`.
    pub fn sign(&self) -> Rational {
        if self.length.is_multiple_of(2) {
            Rational::one()
        } else {
            -Rational::one()
        }
    }
}

/// Rejects θ-invariant weights and the twisted representative.
pub fn check_theta_normalized(group: GroupSpec, w: &Weight) -> Result<(), KostantError> {
    validate_dominant(group, w)?;
    let sig = group.theta_signature(w);
    if sig.is_zero() {
        Err(KostantError::ThetaInvariantWeight)
    } else if sig.is_negative() {
        Err(KostantError::NotThetaNormalized)
    } else {
        Ok(())
    }
}

/// The `A_k(m)` and `C_k(m)`, `k = 1, 2, 3`, attached to `τ₁ω₁ + τ₂ω₂` on
/// `SL(3,ℝ)`.
pub fn sl3_a_c(tau1: &Rational, tau2: &Rational) -> ([Poly; 3], [Poly; 3]) {
    let lin = |slope: Rational, intercept: Rational| Poly::linear(Var::M, slope, intercept);
    let half = rat(1, 2);
    let third = rat(1, 3);
    let a = [
        lin(tau1 * &half, half.clone()),
        lin((tau1 + tau2) * &half, int(1)),
        lin(tau2 * &half, half.clone()),
    ];
    let c = [
        lin((tau1 + tau2 * int(2)) * &third, int(1)),
        lin((tau1 - tau2) * &third, int(0)),
        lin((tau1 * int(2) + tau2) * &third, int(1)),
    ];
    (a, c)
}

/// Closed-form Kostant data for a θ-normalized dominant `Λ`.
///
/// `SO⁰(p,q)`: `n+1` entries with `ℓ = k`, `λ = mτ_{k+1} + n − k` and
/// `σ = (mτ₁+1, …, mτ_k+1, mτ_{k+2}, …, mτ_{n+1})` on `e₂ … e_{n+1}`.
/// `SL(3,ℝ)`: three entries `((2A_k − 1)f₂, ±C_k)` with the sign negative
/// for `ℓ = 2`.
pub fn kostant_data(group: GroupSpec, w: &Weight) -> Result<Vec<KostantDatum>, KostantError> {
    check_theta_normalized(group, w)?;
    Ok(closed_forms(group, w)?)
}

/// The same closed forms applied to either representative of `{Λ, Λθ}`.
/// Some `λ` may then be negative; consumers integrate up to `|λ|`.
pub fn kostant_data_raw(group: GroupSpec, w: &Weight) -> Result<Vec<KostantDatum>, KostantError> {
    validate_dominant(group, w)?;
    if group.theta_signature(w).is_zero() {
        return Err(KostantError::ThetaInvariantWeight);
    }
    Ok(closed_forms(group, w)?)
}

fn closed_forms(group: GroupSpec, w: &Weight) -> Result<Vec<KostantDatum>, RootSysError> {
    let m_basis = group.m_basis();
    match group {
        GroupSpec::So { .. } => {
            let n = group.n();
            let tau = w.coords();
            (0..=n)
                .map(|k| {
                    let lambda = Poly::linear(Var::M, tau[k].clone(), int((n - k) as i64));
                    let coords = (1..=n + 1)
                        .filter(|&i| i != k + 1)
                        .map(|i| {
                            let shift = if i <= k { int(1) } else { int(0) };
                            Poly::linear(Var::M, tau[i - 1].clone(), shift)
                        })
                        .collect();
                    Ok(KostantDatum { length: k, lambda, sigma: AffineWeight::new(m_basis, coords)? })
                })
                .collect()
        }
        GroupSpec::Sl3 => {
            let (t1, t2) = sl3_fundamental_coords(w);
            let (a, c) = sl3_a_c(&t1, &t2);
            let sigma = |ak: &Poly| {
                let coord = &ak.scale(&int(2)) - &Poly::one(Var::M);
                AffineWeight::new(m_basis, alloc::vec![coord])
            };
            Ok(alloc::vec![
                KostantDatum { length: 0, lambda: c[0].clone(), sigma: sigma(&a[0])? },
                KostantDatum { length: 1, lambda: c[1].clone(), sigma: sigma(&a[1])? },
                KostantDatum { length: 2, lambda: -&c[2], sigma: sigma(&a[2])? },
            ])
        }
    }
}

/// `c(σ) = ‖Λ(σ) + ρ_M‖² − ‖ρ_G‖²` as a polynomial in `m`.
pub fn c_const(group: GroupSpec, sigma: &AffineWeight) -> Result<Poly, KostantError> {
    validate_m_dominant(group, sigma)?;
    let rs = group.root_system();
    let shifted = sigma.shift(&rs.rho_m);
    Ok(&shifted.norm_sq() - &Poly::constant(Var::M, rs.rho_norm_sq()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CasimirCheck {
    pub length: usize,
    /// `λ² + c(σ)`.
    pub split: Poly,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CasimirSplitReport {
    /// `τ(Ω)`.
    pub casimir: Poly,
    pub checks: Vec<CasimirCheck>,
}

impl CasimirSplitReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    /// One line per datum, for diagnostics.
    pub fn describe(&self) -> alloc::string::String {
        let mut out = format!("τ(Ω) = {}\n", self.casimir);
        for c in &self.checks {
            out += &format!(
                "  ℓ={} λ²+c(σ) = {} [{}]\n",
                c.length,
                c.split,
                if c.holds { "ok" } else { "DEFECT" }
            );
        }
        out
    }
}

/// Checks `τ(Ω) = λ_{τ,w}² + c(σ_{τ,w})` for every datum as an identity of
/// polynomials in `m`.
pub fn verify_casimir_split(group: GroupSpec, w: &Weight) -> Result<CasimirSplitReport, KostantError> {
    let data = kostant_data(group, w)?;
    let casimir = casimir_poly(group, w)?;
    let checks = data
        .iter()
        .map(|d| {
            let split = &(&d.lambda * &d.lambda) + &c_const(group, &d.sigma)?;
            Ok(CasimirCheck { length: d.length, holds: split == casimir, split })
        })
        .collect::<Result<Vec<_>, KostantError>>()?;
    Ok(CasimirSplitReport { casimir, checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{dominant_weights_up_to, sl3_from_fundamental, theta_twist, Basis};
    use alloc::vec;

    fn so(p: u32, q: u32) -> GroupSpec {
        GroupSpec::so(p, q).unwrap()
    }

    fn lin(a: i64, b: i64) -> Poly {
        Poly::linear(Var::M, int(a), int(b))
    }

    fn lin_q(a: Rational, b: Rational) -> Poly {
        Poly::linear(Var::M, a, b)
    }

    #[test]
    fn so31_fundamental() {
        let g = so(3, 1);
        let w = Weight::from_ints(g.basis(), &[1, 1]).unwrap();
        let data = kostant_data(g, &w).unwrap();
        assert_eq!(data.len(), 2);
        assert_eq!(data[0].length, 0);
        assert_eq!(data[0].lambda, lin(1, 1));
        assert_eq!(data[0].sigma.coords(), &[lin(1, 0)]);
        assert_eq!(data[1].length, 1);
        assert_eq!(data[1].lambda, lin(1, 0));
        assert_eq!(data[1].sigma.coords(), &[lin(1, 1)]);
    }

    #[test]
    fn sl3_fundamental() {
        let w = sl3_from_fundamental(&int(1), &int(0));
        let data = kostant_data(GroupSpec::Sl3, &w).unwrap();
        let lambdas: Vec<_> = data.iter().map(|d| d.lambda.clone()).collect();
        assert_eq!(
            lambdas,
            vec![
                lin_q(rat(1, 3), int(1)),
                lin_q(rat(1, 3), int(0)),
                lin_q(rat(-2, 3), int(-1)),
            ]
        );
        let sigmas: Vec<_> = data.iter().map(|d| d.sigma.coords()[0].clone()).collect();
        assert_eq!(sigmas, vec![lin(1, 0), lin(1, 1), Poly::zero(Var::M)]);
        assert_eq!(data.iter().map(|d| d.length).collect::<Vec<_>>(), vec![0, 1, 2]);
    }

    #[test]
    fn sl3_a_c_values() {
        let (a, c) = sl3_a_c(&int(1), &int(0));
        assert_eq!(a[0], lin_q(rat(1, 2), rat(1, 2)));
        assert_eq!(a[1], lin_q(rat(1, 2), int(1)));
        assert_eq!(a[2], Poly::constant(Var::M, rat(1, 2)));
        assert_eq!(c[0], lin_q(rat(1, 3), int(1)));
        assert_eq!(c[1], lin_q(rat(1, 3), int(0)));
        assert_eq!(c[2], lin_q(rat(2, 3), int(1)));
    }

    #[test]
    fn list_lengths() {
        for g in [so(3, 1), so(5, 3), so(9, 7)] {
            let top = vec![1i64; g.rank()];
            let w = Weight::from_ints(g.basis(), &top).unwrap();
            assert_eq!(kostant_data(g, &w).unwrap().len(), g.n() + 1);
        }
    }

    #[test]
    fn normalization_guards() {
        let g = so(5, 3);
        let inv = Weight::from_ints(g.basis(), &[2, 1, 1, 0]).unwrap();
        assert_eq!(kostant_data(g, &inv), Err(KostantError::ThetaInvariantWeight));
        let twisted = Weight::from_ints(g.basis(), &[2, 1, 1, -1]).unwrap();
        assert_eq!(kostant_data(g, &twisted), Err(KostantError::NotThetaNormalized));
        let sl = sl3_from_fundamental(&int(0), &int(2));
        assert_eq!(kostant_data(GroupSpec::Sl3, &sl), Err(KostantError::NotThetaNormalized));
        let diag = sl3_from_fundamental(&int(2), &int(2));
        assert_eq!(kostant_data(GroupSpec::Sl3, &diag), Err(KostantError::ThetaInvariantWeight));
    }

    #[test]
    fn c_const_examples() {
        let g = so(3, 1);
        let sigma = AffineWeight::new(Basis::Em(1), vec![Poly::x(Var::M)]).unwrap();
        assert_eq!(c_const(g, &sigma).unwrap(), Poly::from_coeffs(Var::M, vec![int(-1), int(0), int(1)]));
        for k in 0..6i64 {
            let sigma = AffineWeight::new(Basis::Fm, vec![Poly::constant(Var::M, int(k))]).unwrap();
            let want = rat((k + 1) * (k + 1) - 4, 3);
            assert_eq!(c_const(GroupSpec::Sl3, &sigma).unwrap(), Poly::constant(Var::M, want));
        }
        let bad = AffineWeight::new(Basis::Fm, vec![Poly::constant(Var::M, int(-1))]).unwrap();
        assert!(c_const(GroupSpec::Sl3, &bad).is_err());
    }

    #[test]
    fn casimir_split_examples() {
        let g = so(3, 1);
        let w = Weight::from_ints(g.basis(), &[1, 1]).unwrap();
        let report = verify_casimir_split(g, &w).unwrap();
        assert!(report.all_hold(), "{}", report.describe());
        assert_eq!(report.casimir, Poly::from_coeffs(Var::M, vec![int(0), int(2), int(2)]));

        let w = sl3_from_fundamental(&int(1), &int(0));
        let report = verify_casimir_split(GroupSpec::Sl3, &w).unwrap();
        assert!(report.all_hold());
        assert_eq!(report.checks[2].split, Poly::from_coeffs(Var::M, vec![int(0), rat(4, 3), rat(4, 9)]));
    }

    #[test]
    fn so_lambdas_strictly_decrease() {
        for g in [so(5, 3), so(7, 5)] {
            for w in dominant_weights_up_to(g, 3) {
                let Ok(data) = kostant_data(g, &w) else { continue };
                for m in 1..=10 {
                    let m = int(m);
                    let vals: Vec<_> = data.iter().map(|d| d.lambda.eval(&m)).collect();
                    assert!(vals.windows(2).all(|p| p[0] > p[1]), "{g} {w}");
                    assert!(vals.last().unwrap().is_positive());
                }
            }
        }
    }

    #[test]
    fn sigma_is_m_dominant() {
        for g in [so(3, 1), so(5, 3), so(9, 3), GroupSpec::Sl3] {
            for w in dominant_weights_up_to(g, 3) {
                let w = if g.theta_signature(&w).is_negative() { theta_twist(g, &w).unwrap() } else { w };
                let Ok(data) = kostant_data(g, &w) else { continue };
                for d in data {
                    assert!(validate_m_dominant(g, &d.sigma).is_ok(), "{g} {w} {}", d.sigma);
                }
            }
        }
    }
}
