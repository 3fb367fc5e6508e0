//! Reduced Plancherel densities and the even Lagrange basis `Π_k`, `Q_k`
//! built on the nodes `±λ_j`.

use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::exactalg::{integrate_zero_to, interpolate_even, BiPoly, ExactAlgError, Poly, Rational, Var};
use crate::kostant::{kostant_data, KostantDatum, KostantError};
use crate::rootsys::{validate_m_dominant, weyl_dim_poly, AffineWeight, GroupSpec, RootSysError, Weight};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PlancherelError {
    RootSys(RootSysError),
    Kostant(KostantError),
    Exact(ExactAlgError),
    /// Abscissas must satisfy `λ₀ > λ₁ > … > λ_n > 0`.
    NotDecreasing,
    /// A `t`-free factor `⟨α, Λ(σ)+ρ_M⟩` vanishes identically.
    DegenerateFactor,
}

impl From<RootSysError> for PlancherelError {
    fn from(e: RootSysError) -> Self {
        PlancherelError::RootSys(e)
    }
}

impl From<KostantError> for PlancherelError {
    fn from(e: KostantError) -> Self {
        PlancherelError::Kostant(e)
    }
}

impl From<ExactAlgError> for PlancherelError {
    fn from(e: ExactAlgError) -> Self {
        PlancherelError::Exact(e)
    }
}

impl fmt::Display for PlancherelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlancherelError::RootSys(e) => e.fmt(f),
            PlancherelError::Kostant(e) => e.fmt(f),
            PlancherelError::Exact(e) => e.fmt(f),
            PlancherelError::NotDecreasing => f.write_str("abscissas must be strictly decreasing and positive"),
            PlancherelError::DegenerateFactor => f.write_str("density has a vanishing constant factor"),
        }
    }
}

impl core::error::Error for PlancherelError {}

/// `Π_{α>0} ⟨α, Λ(σ)+ρ_M+t·e₁⟩ / ⟨α, ρ_G⟩`, even in `t` of degree `2n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedDensity(pub BiPoly);

impl ReducedDensity {
    pub fn bipoly(&self) -> &BiPoly {
        &self.0
    }

    pub fn eval_m(&self, m: &Rational) -> Poly {
        self.0.eval_m(m)
    }
}

impl fmt::Display for ReducedDensity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The density split as `constant(m) · linear(t, m)`, where `linear`
/// collects the `2n` factors through `e₁`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredDensity {
    pub constant: Poly,
    pub linear: BiPoly,
}

impl FactoredDensity {
    pub fn expand(&self) -> ReducedDensity {
        ReducedDensity(self.linear.scale_m(&self.constant))
    }

    /// `∫₀^{upper(m)} density dt`, integrating only the `t`-dependent part.
    pub fn integrate_zero_to(&self, upper: &Poly) -> Result<Poly, PlancherelError> {
        Ok(&integrate_zero_to(upper, &self.linear)? * &self.constant)
    }
}

pub fn factored_density(group: GroupSpec, sigma: &AffineWeight) -> Result<FactoredDensity, PlancherelError> {
    validate_m_dominant(group, sigma)?;
    let rs = group.root_system();
    let shifted = sigma.shift(&rs.rho_m);
    let e1_gram = group.basis().gram(0);

    let mut constant = Poly::one(Var::M);
    let mut linear = BiPoly::one();
    for alpha in &rs.positive_roots {
        let inv = Rational::one() / alpha.inner(&rs.rho_g);
        let intercept = shifted.inner_with(&alpha.restrict_to_m()).scale(&inv);
        let slope = &alpha.coords()[0] * &e1_gram * &inv;
        if slope.is_zero() {
            if intercept.is_zero() {
                return Err(PlancherelError::DegenerateFactor);
            }
            constant = &constant * &intercept;
        } else {
            linear = &linear * &BiPoly::t_linear(Poly::constant(Var::M, slope), intercept);
        }
    }
    Ok(FactoredDensity { constant, linear })
}

pub fn reduced_density(group: GroupSpec, sigma: &AffineWeight) -> Result<ReducedDensity, PlancherelError> {
    Ok(factored_density(group, sigma)?.expand())
}

/// Even Lagrange basis on the nodes `±λ_j` and its partial sums.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiQ {
    /// `Π_k(t) = Π_{j≠k} (t²−λ_j²)/(λ_k²−λ_j²)`.
    pub pi: Vec<Poly>,
    /// `Q_k = Σ_{j≤k} Π_j`.
    pub q: Vec<Poly>,
}

fn check_decreasing(lambdas: &[Rational]) -> Result<(), PlancherelError> {
    let positive = lambdas.last().is_some_and(Signed::is_positive);
    if positive && lambdas.windows(2).all(|p| p[0] > p[1]) {
        Ok(())
    } else {
        Err(PlancherelError::NotDecreasing)
    }
}

pub fn pi_and_q(lambdas: &[Rational]) -> Result<PiQ, PlancherelError> {
    check_decreasing(lambdas)?;
    let sq: Vec<Rational> = lambdas.iter().map(|l| l * l).collect();
    let pi: Vec<Poly> = (0..lambdas.len())
        .map(|k| {
            (0..lambdas.len()).filter(|&j| j != k).fold(Poly::one(Var::T), |acc, j| {
                let num = Poly::from_coeffs(Var::T, alloc::vec![-sq[j].clone(), Rational::zero(), Rational::one()]);
                &acc * &num.scale(&(Rational::one() / (&sq[k] - &sq[j])))
            })
        })
        .collect();
    let mut q = Vec::with_capacity(pi.len());
    let mut acc = Poly::zero(Var::T);
    for p in &pi {
        acc = &acc + p;
        q.push(acc.clone());
    }
    Ok(PiQ { pi, q })
}

/// `Q_k` as the even interpolant taking the value 1 at `±λ_j`, `j ≤ k`, and
/// 0 at the remaining nodes.
pub fn q_by_interpolation(lambdas: &[Rational], k: usize) -> Result<Poly, PlancherelError> {
    check_decreasing(lambdas)?;
    let nodes: Vec<_> = lambdas
        .iter()
        .enumerate()
        .map(|(j, l)| (l.clone(), if j <= k { Rational::one() } else { Rational::zero() }))
        .collect();
    Ok(interpolate_even(&nodes)?)
}

/// Both sides of `Σ_k ∫₀^{λ_k} Π_k = Σ_k ∫_{λ_{k+1}}^{λ_k} Q_k` (`λ_{n+1} = 0`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegmentSplit {
    pub lhs: Rational,
    pub rhs: Rational,
    /// `∫_{λ_{k+1}}^{λ_k} Q_k dt` for each `k`.
    pub segments: Vec<Rational>,
}

impl SegmentSplit {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }

    pub fn all_positive(&self) -> bool {
        self.segments.iter().all(Signed::is_positive)
    }
}

pub fn segment_split(lambdas: &[Rational]) -> Result<SegmentSplit, PlancherelError> {
    let PiQ { pi, q } = pi_and_q(lambdas)?;
    let lhs = pi
        .iter()
        .zip(lambdas)
        .fold(Rational::zero(), |acc, (p, l)| acc + p.antiderivative().eval(l));
    let segments: Vec<Rational> = q
        .iter()
        .enumerate()
        .map(|(k, qk)| {
            let anti = qk.antiderivative();
            let lo = lambdas.get(k + 1).cloned().unwrap_or_else(Rational::zero);
            anti.eval(&lambdas[k]) - anti.eval(&lo)
        })
        .collect();
    let rhs = segments.iter().fold(Rational::zero(), |acc, s| acc + s);
    Ok(SegmentSplit { lhs, rhs, segments })
}

/// `λ_{τ(m),0..n}` for a θ-normalized SO weight, at a fixed `m`.
pub fn lambdas_at(group: GroupSpec, w: &Weight, m: &Rational) -> Result<Vec<Rational>, PlancherelError> {
    Ok(kostant_data(group, w)?.iter().map(|d| d.lambda.eval(m)).collect())
}

/// Checks `reduced_density(σ_{τ(m),k}) = (−1)^k · dim τ_Λ(m) · Π_k(t)` at one
/// value of `m`, for every `k`.
pub fn cross_identity_at(group: GroupSpec, w: &Weight, m: &Rational) -> Result<bool, PlancherelError> {
    CrossIdentity::new(group, w)?.holds_at(m)
}

/// Both sides of the cross identity, with the densities built once.
pub struct CrossIdentity {
    data: Vec<KostantDatum>,
    densities: Vec<ReducedDensity>,
    dim: Poly,
}

/// Outcome of [`CrossIdentity::check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossReport {
    /// Number of integer points `m = 1, 2, …` examined.
    pub points: usize,
    pub first_failure: Option<Rational>,
}

impl CrossIdentity {
    pub fn new(group: GroupSpec, w: &Weight) -> Result<Self, PlancherelError> {
        let data = kostant_data(group, w)?;
        let densities = data.iter().map(|d| reduced_density(group, &d.sigma)).collect::<Result<_, _>>()?;
        Ok(CrossIdentity { data, densities, dim: weyl_dim_poly(group, w)? })
    }

    pub fn holds_at(&self, m: &Rational) -> Result<bool, PlancherelError> {
        let lambdas: Vec<Rational> = self.data.iter().map(|d| d.lambda.eval(m)).collect();
        let PiQ { pi, .. } = pi_and_q(&lambdas)?;
        let dim = self.dim.eval(m);
        Ok(self.data.iter().zip(&self.densities).zip(&pi).all(|((d, dens), pk)| {
            dens.eval_m(m) == pk.scale(&(d.sign() * &dim))
        }))
    }

    /// Degree in `m` of the identity after clearing the denominators
    /// `Π_{j≠k} (λ_k² − λ_j²)`.
    pub fn degree_bound(&self) -> usize {
        let lhs = self.densities.iter().filter_map(|d| d.0.degree_m()).max().unwrap_or(0);
        let dim = self.dim.degree().unwrap_or(0);
        lhs.max(dim) + 2 * (self.data.len() - 1)
    }

    /// Evaluates at `m = 1, …, degree_bound + 1`, enough to decide the
    /// polynomial identity.
    pub fn check(&self) -> Result<CrossReport, PlancherelError> {
        let points = self.degree_bound() + 1;
        for m in 1..=points {
            let m = Rational::from_integer((m as i64).into());
            if !self.holds_at(&m)? {
                return Ok(CrossReport { points, first_failure: Some(m) });
            }
        }
        Ok(CrossReport { points, first_failure: None })
    }
}

/// `Σ_k ∫₀^{λ_k} Π_k dt` at fixed `m`; equals `P_Λ(m) / dim τ_Λ(m)`.
pub fn pi_integral_sum(lambdas: &[Rational]) -> Result<Rational, PlancherelError> {
    Ok(segment_split(lambdas)?.lhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int, rat};
    use crate::rootsys::Basis;
    use alloc::vec;

    fn t_poly(c: Vec<Rational>) -> Poly {
        Poly::from_coeffs(Var::T, c)
    }

    #[test]
    fn so31_density() {
        let g = GroupSpec::so(3, 1).unwrap();
        for k in 0..5 {
            let sigma = AffineWeight::new(Basis::Em(1), vec![Poly::constant(Var::M, int(k))]).unwrap();
            let d = reduced_density(g, &sigma).unwrap();
            assert_eq!(d.eval_m(&int(0)), t_poly(vec![int(-k * k), int(0), int(1)]));
        }
        let sigma = AffineWeight::new(Basis::Em(1), vec![Poly::x(Var::M)]).unwrap();
        let d = reduced_density(g, &sigma).unwrap();
        let want = BiPoly::from_t_coeffs(vec![
            Poly::monomial(Var::M, int(-1), 2),
            Poly::zero(Var::M),
            Poly::one(Var::M),
        ]);
        assert_eq!(d.0, want);
    }

    #[test]
    fn sl3_density() {
        for k in 0..=20i64 {
            let sigma = AffineWeight::new(Basis::Fm, vec![Poly::constant(Var::M, int(k))]).unwrap();
            let d = reduced_density(GroupSpec::Sl3, &sigma).unwrap().eval_m(&int(0));
            let s = int(k + 1);
            let want = t_poly(vec![-(&s * &s) / int(9), int(0), int(1)]).scale(&(rat(9, 8) * &s));
            assert_eq!(d, want);
        }
    }

    #[test]
    fn so53_density_shape() {
        let g = GroupSpec::so(5, 3).unwrap();
        let sigma = AffineWeight::constant(&Weight::from_ints(Basis::Em(3), &[1, 1, 0]).unwrap());
        let d = reduced_density(g, &sigma).unwrap();
        assert_eq!(d.0.degree_t(), Some(6));
        assert!(d.0.is_even_t());
        let f = factored_density(g, &sigma).unwrap();
        let upper = Poly::linear(Var::M, int(2), int(3));
        assert_eq!(f.integrate_zero_to(&upper).unwrap(), integrate_zero_to(&upper, &d.0).unwrap());
    }

    #[test]
    fn pi_q_at_three_two() {
        let PiQ { pi, q } = pi_and_q(&[int(3), int(2)]).unwrap();
        assert_eq!(pi[0], t_poly(vec![rat(-4, 5), int(0), rat(1, 5)]));
        assert_eq!(pi[1], t_poly(vec![rat(9, 5), int(0), rat(-1, 5)]));
        assert_eq!(q[1], Poly::one(Var::T));
        assert_eq!(q[0].eval(&int(3)), int(1));
        assert_eq!(q[0].eval(&int(2)), int(0));
        assert_eq!(q_by_interpolation(&[int(3), int(2)], 0).unwrap(), q[0]);
    }

    #[test]
    fn split_at_three_one() {
        let s = segment_split(&[int(3), int(1)]).unwrap();
        assert!(s.holds());
        assert_eq!(s.lhs, rat(11, 6));
        assert!(s.all_positive());
    }

    #[test]
    fn bad_abscissas() {
        assert_eq!(pi_and_q(&[int(2), int(3)]), Err(PlancherelError::NotDecreasing));
        assert_eq!(pi_and_q(&[int(2), int(0)]), Err(PlancherelError::NotDecreasing));
        assert_eq!(pi_and_q(&[]), Err(PlancherelError::NotDecreasing));
    }

    #[test]
    fn cross_identity_small() {
        let g = GroupSpec::so(5, 3).unwrap();
        let w = Weight::from_ints(g.basis(), &[2, 1, 1, 1]).unwrap();
        for m in 1..=8 {
            assert!(cross_identity_at(g, &w, &int(m)).unwrap());
        }
        let report = CrossIdentity::new(g, &w).unwrap().check().unwrap();
        assert_eq!(report.first_failure, None);
        assert!(report.points > 12);
    }
}
