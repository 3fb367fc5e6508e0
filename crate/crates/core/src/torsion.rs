//! L²-torsion polynomials with their symbolic prefactors, the vanishing
//! classifier, leading constants, Euler characteristics and the product
//! formula for a factor of even dimension.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exactalg::{int, ExactAlgError, Poly, Rational, Var};
use crate::kostant::{kostant_data, kostant_data_raw, sl3_a_c, KostantDatum, KostantError};
use crate::plancherel::{factored_density, PlancherelError};
use crate::rootsys::{
    dominant_weight, sl3_fundamental_coords, theta_twist, validate_dominant, weyl_dim_poly, GroupName,
    GroupSpec, RootSysError, Weight,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TorsionError {
    RootSys(RootSysError),
    Kostant(KostantError),
    Plancherel(PlancherelError),
    Exact(ExactAlgError),
    /// `λ_{τ,w}(m)` changes sign on `m ≥ 1`, so `|λ|` is not a polynomial.
    SignChange(Poly),
    DegreeMismatch { poly: Option<usize>, dim: Option<usize> },
    OddDualDimension(u32),
    NonIntegerEulerRatio { weyl_order_g: u64, weyl_order_k: u64 },
    ZeroFlagged,
}

macro_rules! wrap {
    ($($src:ty => $var:ident),*) => {$(
        impl From<$src> for TorsionError {
            fn from(e: $src) -> Self {
                TorsionError::$var(e)
            }
        }
    )*};
}

wrap!(RootSysError => RootSys, KostantError => Kostant, PlancherelError => Plancherel, ExactAlgError => Exact);

impl TorsionError {
    /// True for the `Λθ = Λ` guard, wherever it was raised.
    pub fn is_theta_invariant(&self) -> bool {
        matches!(
            self,
            TorsionError::Kostant(KostantError::ThetaInvariantWeight)
                | TorsionError::Plancherel(PlancherelError::Kostant(KostantError::ThetaInvariantWeight))
        )
    }
}

impl fmt::Display for TorsionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TorsionError::RootSys(e) => e.fmt(f),
            TorsionError::Kostant(e) => e.fmt(f),
            TorsionError::Plancherel(e) => e.fmt(f),
            TorsionError::Exact(e) => e.fmt(f),
            TorsionError::SignChange(p) => write!(f, "{p} changes sign for m ≥ 1"),
            TorsionError::DegreeMismatch { poly, dim } => {
                write!(f, "deg P = {poly:?} but deg dim = {dim:?}; expected deg P = deg dim + 1")
            }
            TorsionError::OddDualDimension(d) => write!(f, "factor dimension {d} is odd"),
            TorsionError::NonIntegerEulerRatio { weyl_order_g, weyl_order_k } => {
                write!(f, "|W_G| = {weyl_order_g} is not a multiple of |W_K| = {weyl_order_k}")
            }
            TorsionError::ZeroFlagged => f.write_str("torsion vanishes identically for this group"),
        }
    }
}

impl core::error::Error for TorsionError {}

/// `rational · π^a · vol(X)^b · vol(X_d)^c · Π extra_i^{e_i}` with the
/// volumes kept as opaque symbols.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicConstant {
    pub rational: Rational,
    pub pi_exp: i32,
    pub vol_x_exp: i32,
    pub vol_dual_exp: i32,
    /// Further symbols such as volumes of compact duals of other factors.
    pub extra_factors: Vec<(String, i32)>,
}

impl SymbolicConstant {
    pub fn one() -> Self {
        Self::rational(Rational::one())
    }

    pub fn rational(r: Rational) -> Self {
        SymbolicConstant { rational: r, pi_exp: 0, vol_x_exp: 0, vol_dual_exp: 0, extra_factors: Vec::new() }
    }

    pub fn with_extra(mut self, label: &str, exp: i32) -> Self {
        match self.extra_factors.iter_mut().find(|(l, _)| l == label) {
            Some((_, e)) => *e += exp,
            None => self.extra_factors.push((label.into(), exp)),
        }
        self.extra_factors.retain(|(_, e)| *e != 0);
        self
    }

    pub fn mul(&self, other: &SymbolicConstant) -> SymbolicConstant {
        let mut out = SymbolicConstant {
            rational: &self.rational * &other.rational,
            pi_exp: self.pi_exp + other.pi_exp,
            vol_x_exp: self.vol_x_exp + other.vol_x_exp,
            vol_dual_exp: self.vol_dual_exp + other.vol_dual_exp,
            extra_factors: self.extra_factors.clone(),
        };
        for (label, e) in &other.extra_factors {
            out = out.with_extra(label, *e);
        }
        out
    }

    pub fn scale(&self, r: &Rational) -> SymbolicConstant {
        SymbolicConstant { rational: &self.rational * r, ..self.clone() }
    }
}

impl fmt::Display for SymbolicConstant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rational)?;
        let mut sym = |name: &str, e: i32| -> fmt::Result {
            match e {
                0 => Ok(()),
                1 => write!(f, "·{name}"),
                _ => write!(f, "·{name}^{e}"),
            }
        };
        sym("π", self.pi_exp)?;
        sym("vol(X)", self.vol_x_exp)?;
        sym("vol(X_d)", self.vol_dual_exp)?;
        for (label, e) in &self.extra_factors {
            sym(label, *e)?;
        }
        Ok(())
    }
}

/// `log T^{(2)}_X(τ_Λ(m)) = prefactor · poly(m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionResult {
    pub poly: Poly,
    pub prefactor: SymbolicConstant,
    /// Set when the torsion vanishes for structural reasons; `poly` is then 0.
    pub zero_flag: bool,
}

impl TorsionResult {
    pub fn vanishing() -> Self {
        TorsionResult { poly: Poly::zero(Var::M), prefactor: SymbolicConstant::one(), zero_flag: true }
    }
}

/// `rank_ℂ G − rank_ℂ K`.
pub fn deficiency(group: GroupName) -> u32 {
    match group {
        GroupName::So { p, q } => (p + q) / 2 - (p / 2 + q / 2),
        GroupName::Sl3 => 1,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub delta: u32,
    pub dim: u64,
    /// Torsion is identically zero: `δ ≠ 1` or `dim X̃` even.
    pub zero_flag: bool,
}

pub fn classify(group: GroupName) -> Classification {
    let delta = deficiency(group);
    let dim = match group {
        GroupName::So { p, q } => u64::from(p) * u64::from(q),
        GroupName::Sl3 => 5,
    };
    Classification { delta, dim, zero_flag: !(delta == 1 && dim % 2 == 1) }
}

fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

/// `C_{p,q} = (−1)^{(pq−1)/2} 2^{ε(q)} binom(n, (p−1)/2) · π / vol(X_d)` with
/// `ε(1) = 0` and `ε(q) = 1` otherwise.
pub fn prefactor_constant(p: u32, q: u32) -> Result<SymbolicConstant, TorsionError> {
    let g = GroupSpec::so(p, q)?;
    let (p, q) = (u64::from(p), u64::from(q));
    let sign = if ((p * q - 1) / 2) % 2 == 0 { 1 } else { -1 };
    let two_eps = if q == 1 { 1 } else { 2 };
    let r = binomial(g.n() as u64, (p - 1) / 2) * BigInt::from(sign * two_eps);
    Ok(SymbolicConstant { pi_exp: 1, vol_dual_exp: -1, ..SymbolicConstant::rational(Rational::from_integer(r)) })
}

/// The full prefactor of `l2_torsion` for `group`.
pub fn torsion_prefactor(group: GroupSpec) -> SymbolicConstant {
    let base = match group {
        GroupSpec::So { p, q } => prefactor_constant(p, q).expect("GroupSpec holds an odd-odd pair"),
        GroupSpec::Sl3 => SymbolicConstant { pi_exp: 1, vol_dual_exp: -1, ..SymbolicConstant::one() },
    };
    SymbolicConstant { vol_x_exp: base.vol_x_exp + 1, ..base }
}

/// `|p(m)|` as a polynomial, for affine `p` of constant sign on `m ≥ 1`.
fn abs_on_positive_m(p: &Poly) -> Result<Poly, TorsionError> {
    let at_one = p.eval(&Rational::one());
    let slope = p.coeff(1);
    let affine = p.degree().is_none_or(|d| d <= 1);
    if affine && !at_one.is_negative() && !slope.is_negative() {
        Ok(p.clone())
    } else if affine && !at_one.is_positive() && !slope.is_positive() {
        Ok(-p)
    } else {
        Err(TorsionError::SignChange(p.clone()))
    }
}

fn theta_normalize(group: GroupSpec, w: &Weight) -> Result<Weight, TorsionError> {
    validate_dominant(group, w)?;
    let sig = group.theta_signature(w);
    if sig.is_zero() {
        Err(KostantError::ThetaInvariantWeight.into())
    } else if sig.is_negative() {
        Ok(theta_twist(group, w)?)
    } else {
        Ok(w.clone())
    }
}

/// `Σ_w (−1)^{ℓ(w)} ∫₀^{|λ_w|} reduced_density(σ_w) dt` over the Kostant data
/// of a θ-normalized weight.
pub fn kostant_route(group: GroupSpec, w: &Weight) -> Result<Poly, TorsionError> {
    route_over(group, &kostant_data(group, w)?)
}

/// [`kostant_route`] evaluated on the given representative without
/// θ-normalizing it first.
pub fn kostant_route_raw(group: GroupSpec, w: &Weight) -> Result<Poly, TorsionError> {
    route_over(group, &kostant_data_raw(group, w)?)
}

fn route_over(group: GroupSpec, data: &[KostantDatum]) -> Result<Poly, TorsionError> {
    let mut total = Poly::zero(Var::M);
    for d in data {
        let density = factored_density(group, &d.sigma)?;
        let term = density.integrate_zero_to(&abs_on_positive_m(&d.lambda)?)?;
        total = &total + &term.scale(&d.sign());
    }
    Ok(total)
}

/// `Σ_{k=1}^{3} (−1)^{k+1} A_k |C_k| (3C_k² − 4A_k²) / 4` for a θ-normalized
/// SL3 weight.
pub fn sl3_closed_form(w: &Weight) -> Result<Poly, TorsionError> {
    let w = theta_normalize(GroupSpec::Sl3, w)?;
    let (t1, t2) = sl3_fundamental_coords(&w);
    let (a, c) = sl3_a_c(&t1, &t2);
    let mut total = Poly::zero(Var::M);
    for k in 0..3 {
        let ck = abs_on_positive_m(&c[k])?;
        let inner = &(&ck * &ck).scale(&int(3)) - &(&a[k] * &a[k]).scale(&int(4));
        let term = (&(&a[k] * &ck) * &inner).scale(&Rational::new(1.into(), 4.into()));
        total = if k % 2 == 0 { &total + &term } else { &total - &term };
    }
    Ok(total)
}

/// The torsion polynomial and prefactor for a dominant `Λ`. The θ-twisted
/// representative is normalized first; θ-invariant weights are rejected.
pub fn l2_torsion(group: GroupSpec, w: &Weight) -> Result<TorsionResult, TorsionError> {
    let w = theta_normalize(group, w)?;
    let poly = match group {
        GroupSpec::So { .. } => kostant_route(group, &w)?,
        GroupSpec::Sl3 => sl3_closed_form(&w)?,
    };
    Ok(TorsionResult { poly, prefactor: torsion_prefactor(group), zero_flag: false })
}

/// Front door taking any parsed group name. Groups outside the odd-odd SO
/// family and SL3 get the vanishing result after a shape check on the weight.
pub fn compute(group: GroupName, coords: &[Rational]) -> Result<TorsionResult, TorsionError> {
    if classify(group).zero_flag {
        if let GroupName::So { p, q } = group {
            let rank = ((p + q) / 2) as usize;
            if coords.len() != rank {
                return Err(RootSysError::WrongLength { expected: rank, got: coords.len() }.into());
            }
            if !coords.iter().all(Rational::is_integer) {
                return Err(RootSysError::NotDominant("coordinates must be integers".into()).into());
            }
        }
        return Ok(TorsionResult::vanishing());
    }
    let spec = GroupSpec::try_from(group)?;
    let w = dominant_weight(spec, coords)?;
    l2_torsion(spec, &w)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeadingConstant {
    /// `C_Λ` with `P(m) = C_Λ·m·dim τ_Λ(m) + lower order`.
    pub constant: Rational,
    /// Degree of `P − C_Λ·m·dim`; `None` when it vanishes.
    pub residual_degree: Option<usize>,
}

pub fn leading_constant(group: GroupSpec, w: &Weight) -> Result<LeadingConstant, TorsionError> {
    let p = l2_torsion(group, w)?.poly;
    let dim = weyl_dim_poly(group, w)?;
    let (dp, dd) = (p.degree(), dim.degree());
    let mismatch = TorsionError::DegreeMismatch { poly: dp, dim: dd };
    match (dp, dd) {
        (Some(a), Some(b)) if a == b + 1 => {}
        _ => return Err(mismatch),
    }
    let m_dim = &Poly::x(Var::M) * &dim;
    let constant = p.leading_coeff().expect("nonzero") / m_dim.leading_coeff().expect("nonzero");
    let residual = &p - &m_dim.scale(&constant);
    Ok(LeadingConstant { constant, residual_degree: residual.degree() })
}

/// `χ(X_d) = |W_G| / |W_K|`.
pub fn euler_ratio(weyl_order_g: u64, weyl_order_k: u64) -> Result<u64, TorsionError> {
    if weyl_order_g == 0 || weyl_order_k == 0 || !weyl_order_g.is_multiple_of(weyl_order_k) {
        return Err(TorsionError::NonIntegerEulerRatio { weyl_order_g, weyl_order_k });
    }
    Ok(weyl_order_g / weyl_order_k)
}

/// Data of a symmetric space needed for `χ(X, E_τ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EulerDescriptor {
    pub delta: u32,
    /// `n` with `dim X̃ = 2n`; ignored when `δ ≠ 0`.
    pub half_dim: u32,
    pub weyl_order_g: u64,
    pub weyl_order_k: u64,
}

/// `χ(X, E_τ) = (−1)^n χ(X_d)/vol(X_d) · vol(X) · dim τ` when `δ = 0`, else 0.
pub fn euler_characteristic(
    desc: &EulerDescriptor,
    dim_tau: &Poly,
) -> Result<(SymbolicConstant, Poly), TorsionError> {
    if desc.delta != 0 {
        return Ok((SymbolicConstant::rational(Rational::zero()), Poly::zero(Var::M)));
    }
    let chi = euler_ratio(desc.weyl_order_g, desc.weyl_order_k)?;
    let sign = if desc.half_dim.is_multiple_of(2) { 1 } else { -1 };
    let c = SymbolicConstant {
        vol_x_exp: 1,
        vol_dual_exp: -1,
        ..SymbolicConstant::rational(int(sign * chi as i64))
    };
    Ok((c, dim_tau.clone()))
}

/// Compact factor `X̃₀` with `δ(X̃₀) = 0` in `X̃ = X̃₀ × X̃₁`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualFactor {
    pub dim_x0: u32,
    /// `χ(X̃_{0,d})`; the matching `vol(X̃_{0,d})^{−1}` is appended by
    /// [`product_formula`].
    pub euler_ratio: SymbolicConstant,
    pub dim_tau0: Poly,
}

pub const DUAL_FACTOR_VOLUME: &str = "vol(X0_d)";

/// `t_X̃(τ₀⊗τ₁) = (−1)^{dim X̃₀/2} χ(X̃_{0,d})/vol(X̃_{0,d}) · dim τ₀ · t_X̃₁(τ₁)`.
pub fn product_formula(factor: &DualFactor, core: &TorsionResult) -> Result<TorsionResult, TorsionError> {
    if factor.dim_x0 % 2 == 1 {
        return Err(TorsionError::OddDualDimension(factor.dim_x0));
    }
    if core.zero_flag {
        return Ok(core.clone());
    }
    let sign = if (factor.dim_x0 / 2).is_multiple_of(2) { int(1) } else { int(-1) };
    let mut prefactor = core.prefactor.mul(&factor.euler_ratio).scale(&sign);
    if factor.dim_x0 > 0 {
        prefactor = prefactor.with_extra(DUAL_FACTOR_VOLUME, -1);
    }
    Ok(TorsionResult { poly: &core.poly * &factor.dim_tau0.clone().with_var(Var::M), prefactor, zero_flag: false })
}

/// Checks `τ_{n+1}·m ≤ P_Λ(m)/dim τ_Λ(m) ≤ (n+1)(mτ₁+n)` and `P_Λ(m) > 0`
/// for SO at every integer `1 ≤ m ≤ max_m`. Returns the first failing `m`.
pub fn sandwich_violation(group: GroupSpec, w: &Weight, max_m: i64) -> Result<Option<i64>, TorsionError> {
    let w = theta_normalize(group, w)?;
    let n = group.n() as i64;
    let p = kostant_route(group, &w)?;
    let dim = weyl_dim_poly(group, &w)?;
    let k = w.coords();
    for m in 1..=max_m {
        let mm = int(m);
        let value = p.eval(&mm);
        let ratio = &value / dim.eval(&mm);
        let lo = &k[k.len() - 1] * &mm;
        let hi = int(n + 1) * (&mm * &k[0] + int(n));
        if !(value.is_positive() && lo <= ratio && ratio <= hi) {
            return Ok(Some(m));
        }
    }
    Ok(None)
}
