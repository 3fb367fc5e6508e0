//! Root data, weights, θ-twist, Weyl dimension and Casimir polynomials for
//! the two supported families: `SO⁰(p,q)` with `p, q` odd and `SL(3,ℝ)`.
//!
//! Conventions:
//! - `SO⁰(p,q)`: rank `n+1` with `n = (p+q−2)/2`, orthonormal `e₁ … e_{n+1}`,
//!   `e₁` spanning the split part `𝔞*`. The Levi factor `M⁰` sees
//!   `e₂ … e_{n+1}` (basis [`Basis::Em`]).
//! - `SL(3,ℝ)`: basis `f₁, f₂` with `⟨f₁,f₁⟩ = 1`, `⟨f₂,f₂⟩ = 1/3`,
//!   `⟨f₁,f₂⟩ = 0`; `f₁` spans `𝔞*`, `M⁰` sees `f₂` ([`Basis::Fm`]).
//!   Dominant weights enter as fundamental-weight coordinates `(τ₁, τ₂)`
//!   with `ω₁ = f₁/3 + f₂` and `ω₂ = 2f₁/3`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::exactalg::{int, rat, Poly, Rational, Var};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootSysError {
    /// Group text did not parse, or violates the family constraints.
    BadGroup(String),
    /// Weight is not dominant integral for the group.
    NotDominant(String),
    /// Coordinate count does not match the basis rank.
    WrongLength { expected: usize, got: usize },
    /// Operands live in different bases.
    BasisMismatch,
}

impl fmt::Display for RootSysError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootSysError::BadGroup(msg) => write!(f, "bad group: {msg}"),
            RootSysError::NotDominant(msg) => write!(f, "weight not dominant: {msg}"),
            RootSysError::WrongLength { expected, got } => {
                write!(f, "expected {expected} coordinates, got {got}")
            }
            RootSysError::BasisMismatch => f.write_str("weights live in different bases"),
        }
    }
}

impl core::error::Error for RootSysError {}

/// A parsed group name before the odd-odd restriction is applied.
///
/// The vanishing classifier accepts every `so(p,q)` with `p ≥ q ≥ 1`; the
/// torsion machinery needs a [`GroupSpec`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupName {
    So { p: u32, q: u32 },
    Sl3,
}

impl GroupName {
    /// Accepts `so(p,q)`, `SO(p, q)`, `sl3`, `sl(3)` and similar spellings.
    pub fn parse(text: &str) -> Result<GroupName, RootSysError> {
        let compact: String = text
            .chars()
            .filter(|c| !c.is_whitespace())
            .flat_map(char::to_lowercase)
            .collect();
        let compact = compact.replace("so0", "so");
        if matches!(compact.as_str(), "sl3" | "sl(3)" | "sl(3,r)" | "sl3(r)") {
            return Ok(GroupName::Sl3);
        }
        let bad = || RootSysError::BadGroup(format!("cannot parse group `{text}`"));
        let inner = compact
            .strip_prefix("so(")
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (p, q) = inner.split_once(',').ok_or_else(bad)?;
        let p: u32 = p.parse().map_err(|_| bad())?;
        let q: u32 = q.parse().map_err(|_| bad())?;
        if q < 1 || p < q {
            return Err(RootSysError::BadGroup(format!(
                "so(p,q) needs p ≥ q ≥ 1, got so({p},{q})"
            )));
        }
        Ok(GroupName::So { p, q })
    }
}

impl fmt::Display for GroupName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupName::So { p, q } => write!(f, "so({p},{q})"),
            GroupName::Sl3 => f.write_str("sl3"),
        }
    }
}

/// A group of fundamental rank one that the torsion formulas cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    /// `SO⁰(p,q)`, `p ≥ q ≥ 1` both odd, `p > 1`.
    So { p: u32, q: u32 },
    Sl3,
}

impl GroupSpec {
    pub fn parse(text: &str) -> Result<GroupSpec, RootSysError> {
        GroupSpec::try_from(GroupName::parse(text)?)
    }

    pub fn so(p: u32, q: u32) -> Result<GroupSpec, RootSysError> {
        if p.is_multiple_of(2) || q.is_multiple_of(2) {
            return Err(RootSysError::BadGroup(format!("so({p},{q}): p and q must both be odd")));
        }
        if q < 1 || p < q {
            return Err(RootSysError::BadGroup(format!("so({p},{q}): need p ≥ q ≥ 1")));
        }
        if p == 1 {
            return Err(RootSysError::BadGroup("so(1,1) is not semisimple; need p > 1".into()));
        }
        Ok(GroupSpec::So { p, q })
    }

    /// Half the dimension of `𝔫`.
    pub fn n(&self) -> usize {
        match *self {
            GroupSpec::So { p, q } => ((p + q - 2) / 2) as usize,
            GroupSpec::Sl3 => 1,
        }
    }

    /// Half the dimension of `𝔭 ∩ 𝔪`.
    pub fn v(&self) -> usize {
        match *self {
            GroupSpec::So { p, q } => ((p - 1) * (q - 1) / 2) as usize,
            GroupSpec::Sl3 => 1,
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            GroupSpec::So { .. } => self.n() + 1,
            GroupSpec::Sl3 => 2,
        }
    }

    /// Dimension of the symmetric space `G/K`.
    pub fn symmetric_space_dim(&self) -> usize {
        match *self {
            GroupSpec::So { p, q } => (p * q) as usize,
            GroupSpec::Sl3 => 5,
        }
    }

    pub fn basis(&self) -> Basis {
        match self {
            GroupSpec::So { .. } => Basis::E(self.rank()),
            GroupSpec::Sl3 => Basis::F,
        }
    }

    pub fn m_basis(&self) -> Basis {
        match self {
            GroupSpec::So { .. } => Basis::Em(self.n()),
            GroupSpec::Sl3 => Basis::Fm,
        }
    }

    pub fn root_system(&self) -> RootSystemDesc {
        RootSystemDesc::new(*self)
    }
}

impl TryFrom<GroupName> for GroupSpec {
    type Error = RootSysError;
    fn try_from(name: GroupName) -> Result<Self, Self::Error> {
        match name {
            GroupName::So { p, q } => GroupSpec::so(p, q),
            GroupName::Sl3 => Ok(GroupSpec::Sl3),
        }
    }
}

impl From<GroupSpec> for GroupName {
    fn from(g: GroupSpec) -> Self {
        match g {
            GroupSpec::So { p, q } => GroupName::So { p, q },
            GroupSpec::Sl3 => GroupName::Sl3,
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        GroupName::from(*self).fmt(f)
    }
}

/// Coordinate system a weight is expressed in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    /// `e₁ … e_r`, orthonormal.
    E(usize),
    /// `e₂ … e_{r+1}` for the `M⁰` factor, orthonormal.
    Em(usize),
    /// `f₁, f₂` with Gram `diag(1, 1/3)`.
    F,
    /// `f₂` alone, Gram `[1/3]`.
    Fm,
}

impl Basis {
    pub fn rank(&self) -> usize {
        match *self {
            Basis::E(r) | Basis::Em(r) => r,
            Basis::F => 2,
            Basis::Fm => 1,
        }
    }

    /// Diagonal entry of the Gram form.
    pub fn gram(&self, i: usize) -> Rational {
        match (self, i) {
            (Basis::F, 1) | (Basis::Fm, 0) => rat(1, 3),
            _ => Rational::one(),
        }
    }

    /// The ambient basis an `M⁰` basis embeds into.
    pub fn ambient(&self) -> Basis {
        match *self {
            Basis::Em(r) => Basis::E(r + 1),
            Basis::Fm => Basis::F,
            b => b,
        }
    }
}

/// Rational coordinate vector in a tagged basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weight {
    basis: Basis,
    coords: Vec<Rational>,
}

impl Weight {
    pub fn new(basis: Basis, coords: Vec<Rational>) -> Result<Weight, RootSysError> {
        if coords.len() != basis.rank() {
            return Err(RootSysError::WrongLength { expected: basis.rank(), got: coords.len() });
        }
        Ok(Weight { basis, coords })
    }

    pub fn from_ints(basis: Basis, coords: &[i64]) -> Result<Weight, RootSysError> {
        Weight::new(basis, coords.iter().map(|&c| int(c)).collect())
    }

    pub fn zero(basis: Basis) -> Weight {
        Weight { basis, coords: vec![Rational::zero(); basis.rank()] }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// Gram-form inner product. Panics on a basis mismatch.
    pub fn inner(&self, other: &Weight) -> Rational {
        assert_eq!(self.basis, other.basis, "inner product across bases");
        self.coords
            .iter()
            .zip(&other.coords)
            .enumerate()
            .map(|(i, (a, b))| a * b * self.basis.gram(i))
            .sum()
    }

    pub fn norm_sq(&self) -> Rational {
        self.inner(self)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        assert_eq!(self.basis, other.basis, "sum across bases");
        Weight {
            basis: self.basis,
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Weight {
        Weight { basis: self.basis, coords: self.coords.iter().map(|a| a * c).collect() }
    }

    /// Embeds an `M⁰` weight into the ambient basis with zero split part.
    pub fn embed(&self) -> Weight {
        match self.basis {
            Basis::Em(_) | Basis::Fm => {
                let mut coords = Vec::with_capacity(self.coords.len() + 1);
                coords.push(Rational::zero());
                coords.extend(self.coords.iter().cloned());
                Weight { basis: self.basis.ambient(), coords }
            }
            _ => self.clone(),
        }
    }

    /// Drops the split coordinate of an ambient weight, landing in the `M⁰`
    /// basis. Identity on `M⁰` weights.
    pub fn restrict_to_m(&self) -> Weight {
        match self.basis {
            Basis::E(r) => Weight { basis: Basis::Em(r - 1), coords: self.coords[1..].to_vec() },
            Basis::F => Weight { basis: Basis::Fm, coords: self.coords[1..].to_vec() },
            _ => self.clone(),
        }
    }

    /// `⟨self, m·slope + intercept⟩` as a polynomial in `m`.
    pub fn inner_affine(&self, slope: &Weight, intercept: &Weight) -> Poly {
        Poly::linear(Var::M, self.inner(slope), self.inner(intercept))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// A weight whose coordinates are polynomials in `m`, typically affine.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineWeight {
    basis: Basis,
    coords: Vec<Poly>,
}

impl AffineWeight {
    pub fn new(basis: Basis, coords: Vec<Poly>) -> Result<AffineWeight, RootSysError> {
        if coords.len() != basis.rank() {
            return Err(RootSysError::WrongLength { expected: basis.rank(), got: coords.len() });
        }
        Ok(AffineWeight { basis, coords: coords.into_iter().map(|p| p.with_var(Var::M)).collect() })
    }

    /// `slope·m + intercept`, coordinatewise.
    pub fn from_parts(slope: &Weight, intercept: &Weight) -> AffineWeight {
        assert_eq!(slope.basis, intercept.basis);
        AffineWeight {
            basis: slope.basis,
            coords: slope
                .coords
                .iter()
                .zip(&intercept.coords)
                .map(|(a, b)| Poly::linear(Var::M, a.clone(), b.clone()))
                .collect(),
        }
    }

    /// An `m`-independent weight.
    pub fn constant(w: &Weight) -> AffineWeight {
        AffineWeight::from_parts(&Weight::zero(w.basis), w)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coords(&self) -> &[Poly] {
        &self.coords
    }

    pub fn eval(&self, m: &Rational) -> Weight {
        Weight { basis: self.basis, coords: self.coords.iter().map(|c| c.eval(m)).collect() }
    }

    pub fn shift(&self, w: &Weight) -> AffineWeight {
        assert_eq!(self.basis, w.basis);
        AffineWeight {
            basis: self.basis,
            coords: self
                .coords
                .iter()
                .zip(&w.coords)
                .map(|(c, x)| c + &Poly::constant(Var::M, x.clone()))
                .collect(),
        }
    }

    /// `⟨w, self⟩` as a polynomial in `m`.
    pub fn inner_with(&self, w: &Weight) -> Poly {
        assert_eq!(self.basis, w.basis);
        self.coords
            .iter()
            .zip(&w.coords)
            .enumerate()
            .fold(Poly::zero(Var::M), |acc, (i, (c, x))| {
                &acc + &c.scale(&(x * self.basis.gram(i)))
            })
    }

    pub fn norm_sq(&self) -> Poly {
        self.coords
            .iter()
            .enumerate()
            .fold(Poly::zero(Var::M), |acc, (i, c)| &acc + &(c * c).scale(&self.basis.gram(i)))
    }
}

impl fmt::Display for AffineWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// Positive roots and Weyl vectors of `G` and of its Levi factor `M⁰`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystemDesc {
    pub group: GroupSpec,
    pub rank: usize,
    pub positive_roots: Vec<Weight>,
    pub rho_g: Weight,
    /// In the `M⁰` basis.
    pub rho_m: Weight,
    /// In the `M⁰` basis.
    pub positive_roots_m: Vec<Weight>,
    pub n: usize,
}

fn d_type_positive_roots(basis: Basis) -> Vec<Weight> {
    let r = basis.rank();
    let mut roots = Vec::with_capacity(r * r.saturating_sub(1));
    for i in 0..r {
        for j in (i + 1)..r {
            for sign in [1, -1] {
                let mut c = vec![Rational::zero(); r];
                c[i] = int(1);
                c[j] = int(sign);
                roots.push(Weight { basis, coords: c });
            }
        }
    }
    roots
}

/// Half the sum of a root family.
pub fn half_sum(basis: Basis, roots: &[Weight]) -> Weight {
    roots
        .iter()
        .fold(Weight::zero(basis), |acc, r| acc.add(r))
        .scale(&rat(1, 2))
}

impl RootSystemDesc {
    fn new(group: GroupSpec) -> RootSystemDesc {
        let n = group.n();
        match group {
            GroupSpec::So { .. } => {
                let basis = group.basis();
                let m_basis = group.m_basis();
                let rho_g = Weight {
                    basis,
                    coords: (0..=n).map(|i| int((n - i) as i64)).collect(),
                };
                let rho_m = Weight {
                    basis: m_basis,
                    coords: (0..n).map(|i| int((n - 1 - i) as i64)).collect(),
                };
                RootSystemDesc {
                    group,
                    rank: n + 1,
                    positive_roots: d_type_positive_roots(basis),
                    rho_g,
                    rho_m,
                    positive_roots_m: d_type_positive_roots(m_basis),
                    n,
                }
            }
            GroupSpec::Sl3 => {
                let f = |a: i64, b: i64| Weight { basis: Basis::F, coords: vec![int(a), int(b)] };
                RootSystemDesc {
                    group,
                    rank: 2,
                    positive_roots: vec![f(0, 2), f(1, 1), f(1, -1)],
                    rho_g: f(1, 1),
                    rho_m: Weight { basis: Basis::Fm, coords: vec![int(1)] },
                    positive_roots_m: vec![Weight { basis: Basis::Fm, coords: vec![int(2)] }],
                    n,
                }
            }
        }
    }

    /// `⟨ρ_G, ρ_G⟩`.
    pub fn rho_norm_sq(&self) -> Rational {
        self.rho_g.norm_sq()
    }
}

fn integral(x: &Rational) -> bool {
    x.is_integer()
}

/// SL3 fundamental-weight coordinates `(τ₁, τ₂)` of an `f`-basis weight.
pub fn sl3_fundamental_coords(w: &Weight) -> (Rational, Rational) {
    let (a, b) = (&w.coords[0], &w.coords[1]);
    // a = (τ₁ + 2τ₂)/3, b = τ₁
    let tau2 = (a * int(3) - b) / int(2);
    (b.clone(), tau2)
}

/// `τ₁ω₁ + τ₂ω₂` in the `f`-basis.
pub fn sl3_from_fundamental(tau1: &Rational, tau2: &Rational) -> Weight {
    Weight { basis: Basis::F, coords: vec![(tau1 + tau2 * int(2)) / int(3), tau1.clone()] }
}

/// Builds a dominant integral highest weight from user coordinates:
/// `e`-coordinates for `so(p,q)`, `(τ₁, τ₂)` for `sl3`.
pub fn dominant_weight(group: GroupSpec, coords: &[Rational]) -> Result<Weight, RootSysError> {
    let w = match group {
        GroupSpec::So { .. } => Weight::new(group.basis(), coords.to_vec())?,
        GroupSpec::Sl3 => {
            if coords.len() != 2 {
                return Err(RootSysError::WrongLength { expected: 2, got: coords.len() });
            }
            sl3_from_fundamental(&coords[0], &coords[1])
        }
    };
    validate_dominant(group, &w)?;
    Ok(w)
}

/// Integer coordinates `k₁ ≥ … ≥ k_n ≥ |k_{n+1}|` (SO) or `τ₁, τ₂ ∈ ℤ≥0` (SL3).
pub fn validate_dominant(group: GroupSpec, w: &Weight) -> Result<(), RootSysError> {
    if w.basis != group.basis() {
        return Err(RootSysError::BasisMismatch);
    }
    match group {
        GroupSpec::So { .. } => {
            let k = &w.coords;
            if !k.iter().all(integral) {
                return Err(RootSysError::NotDominant(format!("{w}: coordinates must be integers")));
            }
            let r = k.len();
            let ordered = k[..r - 1].windows(2).all(|p| p[0] >= p[1]);
            let last_ok = r < 2 || k[r - 2] >= k[r - 1].abs();
            if !(ordered && last_ok) {
                return Err(RootSysError::NotDominant(format!(
                    "{w}: need k₁ ≥ … ≥ k_n ≥ |k_(n+1)|"
                )));
            }
            Ok(())
        }
        GroupSpec::Sl3 => {
            let (t1, t2) = sl3_fundamental_coords(w);
            if !(integral(&t1) && integral(&t2)) || t1.is_negative() || t2.is_negative() {
                return Err(RootSysError::NotDominant(format!(
                    "(τ₁, τ₂) = ({t1}, {t2}) must be non-negative integers"
                )));
            }
            Ok(())
        }
    }
}

/// Checks that `σ(m)` is an integral `M⁰`-dominant weight for every integer
/// `m ≥ 1`: coordinates are affine with integer slope and intercept, and each
/// dominance inequality holds at `m = 1` with non-negative slope.
pub fn validate_m_dominant(group: GroupSpec, sigma: &AffineWeight) -> Result<(), RootSysError> {
    if sigma.basis() != group.m_basis() {
        return Err(RootSysError::BasisMismatch);
    }
    let affine_int = |p: &Poly| {
        p.degree().is_none_or(|d| d <= 1) && integral(&p.coeff(0)) && integral(&p.coeff(1))
    };
    if !sigma.coords().iter().all(affine_int) {
        return Err(RootSysError::NotDominant(format!(
            "{sigma}: coordinates must be affine in m with integer coefficients"
        )));
    }
    let holds = |f: &Poly| !f.coeff(1).is_negative() && !f.eval(&Rational::one()).is_negative();
    let c = sigma.coords();
    let ok = match group {
        GroupSpec::So { .. } => {
            let r = c.len();
            let chain = c.windows(2).take(r.saturating_sub(2)).all(|p| holds(&(&p[0] - &p[1])));
            let tail = r < 2 || (holds(&(&c[r - 2] - &c[r - 1])) && holds(&(&c[r - 2] + &c[r - 1])));
            chain && tail
        }
        GroupSpec::Sl3 => holds(&c[0]),
    };
    if ok {
        Ok(())
    } else {
        Err(RootSysError::NotDominant(format!("{sigma} is not M-dominant for all m ≥ 1")))
    }
}

/// Highest weight of `τ_Λ ∘ θ`.
pub fn theta_twist(group: GroupSpec, w: &Weight) -> Result<Weight, RootSysError> {
    validate_dominant(group, w)?;
    Ok(match group {
        GroupSpec::So { .. } => {
            let mut coords = w.coords.clone();
            if let Some(last) = coords.last_mut() {
                *last = -last.clone();
            }
            Weight { basis: w.basis, coords }
        }
        GroupSpec::Sl3 => {
            let (t1, t2) = sl3_fundamental_coords(w);
            sl3_from_fundamental(&t2, &t1)
        }
    })
}

/// `dim τ_{mΛ} = Π_{α>0} ⟨mΛ+ρ_G, α⟩ / ⟨ρ_G, α⟩` as a polynomial in `m`.
pub fn weyl_dim_poly(group: GroupSpec, w: &Weight) -> Result<Poly, RootSysError> {
    validate_dominant(group, w)?;
    let rs = group.root_system();
    Ok(rs.positive_roots.iter().fold(Poly::one(Var::M), |acc, alpha| {
        let denom = alpha.inner(&rs.rho_g);
        debug_assert!(!denom.is_zero());
        let factor = alpha.inner_affine(w, &rs.rho_g).scale(&(Rational::one() / denom));
        &acc * &factor
    }))
}

/// `τ_{mΛ}(Ω) = ‖mΛ + ρ_G‖² − ‖ρ_G‖²` as a polynomial in `m`.
pub fn casimir_poly(group: GroupSpec, w: &Weight) -> Result<Poly, RootSysError> {
    validate_dominant(group, w)?;
    let rs = group.root_system();
    let shifted = AffineWeight::from_parts(w, &rs.rho_g);
    Ok(&shifted.norm_sq() - &Poly::constant(Var::M, rs.rho_norm_sq()))
}

/// Every dominant integral weight of `group` whose coordinates are at most
/// `bound` in absolute value (SO: `e`-coordinates, SL3: `(τ₁, τ₂)`).
pub fn dominant_weights_up_to(group: GroupSpec, bound: i64) -> Vec<Weight> {
    let mut out = Vec::new();
    match group {
        GroupSpec::So { .. } => {
            let r = group.rank();
            let mut prefix = Vec::with_capacity(r);
            fn rec(r: usize, bound: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
                if prefix.len() == r - 1 {
                    let last_max = prefix.last().copied().unwrap_or(bound);
                    for k in -last_max..=last_max {
                        prefix.push(k);
                        out.push(prefix.clone());
                        prefix.pop();
                    }
                    return;
                }
                let hi = prefix.last().copied().unwrap_or(bound);
                for k in 0..=hi {
                    prefix.push(k);
                    rec(r, bound, prefix, out);
                    prefix.pop();
                }
            }
            let mut raw = Vec::new();
            rec(r, bound, &mut prefix, &mut raw);
            for c in raw {
                out.push(Weight::from_ints(group.basis(), &c).expect("rank matches"));
            }
        }
        GroupSpec::Sl3 => {
            for t1 in 0..=bound {
                for t2 in 0..=bound {
                    out.push(sl3_from_fundamental(&int(t1), &int(t2)));
                }
            }
        }
    }
    out
}

impl GroupSpec {
    /// `k_{n+1}` for SO, `τ₁ − τ₂` for SL3: positive exactly on θ-normalized
    /// weights, zero on θ-invariant ones.
    pub fn theta_signature(&self, w: &Weight) -> Rational {
        match self {
            GroupSpec::So { .. } => w.coords.last().cloned().unwrap_or_else(Rational::zero),
            GroupSpec::Sl3 => {
                let (t1, t2) = sl3_fundamental_coords(w);
                t1 - t2
            }
        }
    }
}

/// Human-readable label for a dominant weight in the user's coordinates.
pub fn user_coords(group: GroupSpec, w: &Weight) -> Vec<Rational> {
    match group {
        GroupSpec::So { .. } => w.coords.clone(),
        GroupSpec::Sl3 => {
            let (t1, t2) = sl3_fundamental_coords(w);
            vec![t1, t2]
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn so(p: u32, q: u32) -> GroupSpec {
        GroupSpec::so(p, q).unwrap()
    }

    fn e(group: GroupSpec, c: &[i64]) -> Weight {
        Weight::from_ints(group.basis(), c).unwrap()
    }

    fn sl3(t1: i64, t2: i64) -> Weight {
        sl3_from_fundamental(&int(t1), &int(t2))
    }

    #[test]
    fn parse_groups() {
        assert_eq!(GroupSpec::parse("so(3,1)").unwrap(), so(3, 1));
        assert_eq!(GroupSpec::parse(" SO( 7 , 5 ) ").unwrap(), so(7, 5));
        assert_eq!(GroupSpec::parse("sl3").unwrap(), GroupSpec::Sl3);
        assert_eq!(GroupSpec::parse("SL(3)").unwrap(), GroupSpec::Sl3);
        for bad in ["so(4,3)", "so(3,5)", "so(1,1)", "so(3,2)", "su(2)", "so(3)", "so(a,b)"] {
            assert!(matches!(GroupSpec::parse(bad), Err(RootSysError::BadGroup(_))), "{bad}");
        }
        assert_eq!(GroupName::parse("so(4,3)").unwrap(), GroupName::So { p: 4, q: 3 });
        assert!(GroupName::parse("so(2,3)").is_err());
    }

    #[test]
    fn so31_roots() {
        let rs = so(3, 1).root_system();
        assert_eq!(rs.n, 1);
        assert_eq!(rs.positive_roots, vec![e(so(3, 1), &[1, 1]), e(so(3, 1), &[1, -1])]);
        assert_eq!(rs.rho_g, e(so(3, 1), &[1, 0]));
        assert!(rs.rho_m.is_zero());
        assert!(rs.positive_roots_m.is_empty());
    }

    #[test]
    fn sl3_roots() {
        let rs = GroupSpec::Sl3.root_system();
        let f = |a, b| Weight::from_ints(Basis::F, &[a, b]).unwrap();
        assert_eq!(rs.positive_roots, vec![f(0, 2), f(1, 1), f(1, -1)]);
        assert_eq!(rs.rho_g, f(1, 1));
        assert_eq!(rs.rho_norm_sq(), rat(4, 3));
    }

    #[test]
    fn so75_roots() {
        let g = so(7, 5);
        let rs = g.root_system();
        assert_eq!(rs.n, 5);
        assert_eq!(rs.positive_roots.len(), 30);
        assert_eq!(rs.rho_g, e(g, &[5, 4, 3, 2, 1, 0]));
        assert_eq!(g.v(), 12);
    }

    #[test]
    fn rho_is_half_sum_and_m_roots_embed() {
        for g in [so(3, 1), so(5, 1), so(5, 3), so(7, 5), so(11, 5), GroupSpec::Sl3] {
            let rs = g.root_system();
            assert_eq!(half_sum(g.basis(), &rs.positive_roots), rs.rho_g, "{g}");
            assert_eq!(half_sum(g.m_basis(), &rs.positive_roots_m), rs.rho_m, "{g}");
            for r in &rs.positive_roots_m {
                assert!(rs.positive_roots.contains(&r.embed()), "{g}: {r}");
            }
            assert_eq!(rs.rho_g.restrict_to_m(), rs.rho_m, "{g}");
        }
    }

    #[test]
    fn theta_twist_examples() {
        let g = so(5, 3);
        assert_eq!(theta_twist(g, &e(g, &[2, 1, 1, 1])).unwrap(), e(g, &[2, 1, 1, -1]));
        assert_eq!(theta_twist(GroupSpec::Sl3, &sl3(3, 0)).unwrap(), sl3(0, 3));
        assert!(theta_twist(g, &e(g, &[1, 2, 0, 0])).is_err());
    }

    #[test]
    fn theta_is_involution() {
        for g in [so(5, 3), GroupSpec::Sl3] {
            for w in dominant_weights_up_to(g, 3) {
                let tw = theta_twist(g, &w).unwrap();
                assert_eq!(theta_twist(g, &tw).unwrap(), w);
            }
        }
    }

    #[test]
    fn dominance_rules() {
        let g = so(5, 3);
        assert!(dominant_weight(g, &[int(2), int(1), int(1), int(-1)]).is_ok());
        assert!(dominant_weight(g, &[int(2), int(1), int(0), int(-1)]).is_err());
        assert!(dominant_weight(g, &[rat(1, 2), rat(1, 2), rat(1, 2), rat(1, 2)]).is_err());
        assert!(matches!(
            dominant_weight(g, &[int(1)]),
            Err(RootSysError::WrongLength { expected: 4, got: 1 })
        ));
        assert!(dominant_weight(GroupSpec::Sl3, &[int(-1), int(0)]).is_err());
        assert_eq!(sl3_fundamental_coords(&sl3(4, 7)), (int(4), int(7)));
    }

    #[test]
    fn weyl_dimension_examples() {
        let d = weyl_dim_poly(GroupSpec::Sl3, &sl3(1, 0)).unwrap();
        assert_eq!(d, Poly::from_coeffs(Var::M, vec![int(1), rat(3, 2), rat(1, 2)]));
        let g = so(3, 1);
        assert_eq!(
            weyl_dim_poly(g, &e(g, &[1, 1])).unwrap(),
            Poly::from_coeffs(Var::M, vec![int(1), int(2)])
        );
        for g in [so(3, 1), so(7, 5), GroupSpec::Sl3] {
            assert_eq!(weyl_dim_poly(g, &Weight::zero(g.basis())).unwrap(), Poly::one(Var::M));
        }
    }

    #[test]
    fn weyl_dimension_of_so_vector_and_spin() {
        // so(5,1) ≅ D₃: vector rep (1,0,0) has dimension 6, half-spin 4.
        let g = so(5, 1);
        let one = int(1);
        assert_eq!(weyl_dim_poly(g, &e(g, &[1, 0, 0])).unwrap().eval(&one), int(6));
        let half = Weight::new(g.basis(), vec![rat(1, 2), rat(1, 2), rat(1, 2)]).unwrap();
        // spin weights are outside the integral parametrization
        assert!(weyl_dim_poly(g, &half).is_err());
        assert_eq!(weyl_dim_poly(g, &e(g, &[1, 1, 1])).unwrap().eval(&one), int(10));
    }

    #[test]
    fn casimir_examples() {
        let g = so(3, 1);
        assert_eq!(
            casimir_poly(g, &e(g, &[1, 1])).unwrap(),
            Poly::from_coeffs(Var::M, vec![int(0), int(2), int(2)])
        );
        for (t1, t2) in [(1, 0), (2, 1), (0, 3), (4, 4)] {
            let got = casimir_poly(GroupSpec::Sl3, &sl3(t1, t2)).unwrap();
            let want = Poly::from_coeffs(
                Var::M,
                vec![
                    int(0),
                    rat(4 * (t1 + t2), 3),
                    rat(4 * (t1 * t1 + t1 * t2 + t2 * t2), 9),
                ],
            );
            assert_eq!(got, want);
        }
        assert!(casimir_poly(g, &Weight::zero(g.basis())).unwrap().is_zero());
    }

    #[test]
    fn theta_preserves_dimension_and_casimir() {
        for g in [so(3, 1), so(5, 3), so(7, 1), GroupSpec::Sl3] {
            for w in dominant_weights_up_to(g, 3) {
                let tw = theta_twist(g, &w).unwrap();
                assert_eq!(weyl_dim_poly(g, &w).unwrap(), weyl_dim_poly(g, &tw).unwrap());
                assert_eq!(casimir_poly(g, &w).unwrap(), casimir_poly(g, &tw).unwrap());
            }
        }
    }

    #[test]
    fn so_dimension_degree_counts_nonorthogonal_roots() {
        for g in [so(5, 3), so(7, 5)] {
            let rs = g.root_system();
            for w in dominant_weights_up_to(g, 2) {
                let count = rs.positive_roots.iter().filter(|a| !a.inner(&w).is_zero()).count();
                let deg = weyl_dim_poly(g, &w).unwrap().degree().unwrap();
                assert_eq!(deg, count, "{g} {w}");
            }
        }
    }

    #[test]
    fn dominant_enumeration_counts() {
        // so(3,1): k₁ ≥ |k₂|, k₁ ≤ 1 → (0,0), (1,−1), (1,0), (1,1)
        assert_eq!(dominant_weights_up_to(so(3, 1), 1).len(), 4);
        assert_eq!(dominant_weights_up_to(GroupSpec::Sl3, 2).len(), 9);
    }
}
