//! `K`-types for `SL(3,ℝ)`: exact restriction of `τ_Λ(m)` to `SO(3)`, the
//! exterior powers of `𝔭*`, and lower bounds for `τ(Ω) − ν_p(τ)(Ω_K)`.
//! Also the convex-hull bound for `D`-type Weyl orbits.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactalg::{int, Rational};
use crate::rootsys::{casimir_poly, sl3_fundamental_coords, GroupSpec, RootSysError, Weight};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpectrumError {
    RootSys(RootSysError),
    /// Highest-label stripping hit a negative multiplicity.
    NegativeMultiplicity(i64),
    /// Labels are not symmetric under negation.
    Asymmetric(i64),
    BadDegree(usize),
    NotThetaNormalized,
}

impl From<RootSysError> for SpectrumError {
    fn from(e: RootSysError) -> Self {
        SpectrumError::RootSys(e)
    }
}

impl fmt::Display for SpectrumError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectrumError::RootSys(e) => e.fmt(f),
            SpectrumError::NegativeMultiplicity(l) => write!(f, "negative multiplicity at label {l}"),
            SpectrumError::Asymmetric(l) => write!(f, "label {l} has no matching −{l}"),
            SpectrumError::BadDegree(p) => write!(f, "exterior degree {p} outside 0..=5"),
            SpectrumError::NotThetaNormalized => f.write_str("need τ₁ > τ₂"),
        }
    }
}

impl core::error::Error for SpectrumError {}

/// Character of a finite-dimensional `SU(2)` representation: multiplicity of
/// each integer weight label. The `k`-root has label 1.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SU2Char {
    mult: BTreeMap<i64, i64>,
}

impl SU2Char {
    pub fn new() -> Self {
        Self::default()
    }

    /// `χ_s`: labels `s, s−1, …, −s`.
    pub fn spin(s: i64) -> Self {
        let mut c = Self::new();
        for l in -s..=s {
            c.add(l, 1);
        }
        c
    }

    pub fn from_labels(labels: impl IntoIterator<Item = i64>) -> Self {
        let mut c = Self::new();
        for l in labels {
            c.add(l, 1);
        }
        c
    }

    pub fn add(&mut self, label: i64, count: i64) {
        let e = self.mult.entry(label).or_insert(0);
        *e += count;
        if *e == 0 {
            self.mult.remove(&label);
        }
    }

    pub fn mult(&self, label: i64) -> i64 {
        self.mult.get(&label).copied().unwrap_or(0)
    }

    pub fn labels(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.mult.iter().map(|(&l, &c)| (l, c))
    }

    /// Total multiplicity, the dimension.
    pub fn dim(&self) -> i64 {
        self.mult.values().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.mult.iter().all(|(&l, &c)| self.mult(-l) == c)
    }

    pub fn tensor(&self, other: &SU2Char) -> SU2Char {
        let mut out = SU2Char::new();
        for (&a, &x) in &self.mult {
            for (&b, &y) in &other.mult {
                out.add(a + b, x * y);
            }
        }
        out
    }

    fn plus(&self, other: &SU2Char, sign: i64) -> SU2Char {
        let mut out = self.clone();
        for (&l, &c) in &other.mult {
            out.add(l, sign * c);
        }
        out
    }

    /// Adams operation: every label multiplied by `k`.
    fn adams(&self, k: i64) -> SU2Char {
        let mut out = SU2Char::new();
        for (&l, &c) in &self.mult {
            out.add(l * k, c);
        }
        out
    }

    /// `Λ^p` via Newton's identity `p·e_p = Σ_{i=1}^p (−1)^{i−1} e_{p−i} ψ^i`.
    pub fn exterior_power(&self, p: usize) -> SU2Char {
        let mut e = vec![SU2Char::from_labels([0])];
        for k in 1..=p {
            let mut acc = SU2Char::new();
            for i in 1..=k {
                let term = e[k - i].tensor(&self.adams(i as i64));
                acc = acc.plus(&term, if i % 2 == 1 { 1 } else { -1 });
            }
            let k = k as i64;
            acc.mult.values_mut().for_each(|c| {
                debug_assert_eq!(*c % k, 0);
                *c /= k;
            });
            acc.mult.retain(|_, c| *c != 0);
            e.push(acc);
        }
        e.swap_remove(p)
    }

    /// Spin multiplicities, highest label first.
    pub fn decompose(&self) -> Result<BTreeMap<i64, i64>, SpectrumError> {
        if let Some((&l, _)) = self.mult.iter().find(|(&l, &c)| self.mult(-l) != c) {
            return Err(SpectrumError::Asymmetric(l));
        }
        let mut rest = self.clone();
        let mut spins = BTreeMap::new();
        while let Some((&s, &c)) = rest.mult.iter().next_back() {
            if c < 0 || s < 0 {
                return Err(SpectrumError::NegativeMultiplicity(s));
            }
            *spins.entry(s).or_insert(0) += c;
            for l in -s..=s {
                rest.add(l, -c);
            }
        }
        if let Some((&l, _)) = rest.mult.iter().next() {
            return Err(SpectrumError::NegativeMultiplicity(l));
        }
        Ok(spins)
    }

    pub fn max_spin(&self) -> Option<i64> {
        self.mult.keys().next_back().copied()
    }
}

type Gl3 = [i64; 3];

fn dominant_conjugate(mut w: Gl3) -> Gl3 {
    w.sort_unstable_by(|a, b| b.cmp(a));
    w
}

fn dot(a: &Gl3, b: &Gl3) -> i64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// Weight multiplicities of the `sl₃` irrep with highest weight
/// `(a+b, b, 0)` in diagonal coordinates, via Freudenthal's formula on the
/// dominant chamber.
pub fn sl3_dominant_multiplicities(a: i64, b: i64) -> BTreeMap<Gl3, i64> {
    const POS: [Gl3; 3] = [[1, -1, 0], [0, 1, -1], [1, 0, -1]];
    const RHO: Gl3 = [1, 0, -1];
    let top: Gl3 = [a + b, b, 0];
    let add = |x: &Gl3, y: &Gl3, k: i64| [x[0] + k * y[0], x[1] + k * y[1], x[2] + k * y[2]];
    let lr = add(&top, &RHO, 1);
    let lr_sq = dot(&lr, &lr);

    // Dominant weights μ = top − iα₁ − jα₂ ordered by depth i + j.
    let mut dominant: Vec<(i64, Gl3)> = Vec::new();
    for i in 0..=(a + b) {
        for j in 0..=(a + 2 * b) {
            let mu = [top[0] - i, top[1] + i - j, top[2] + j];
            if mu[0] >= mu[1] && mu[1] >= mu[2] {
                dominant.push((i + j, mu));
            }
        }
    }
    dominant.sort();

    let mut mult: BTreeMap<Gl3, i64> = BTreeMap::new();
    mult.insert(top, 1);
    for (_, mu) in dominant.into_iter().filter(|(d, _)| *d > 0) {
        let mr = add(&mu, &RHO, 1);
        let denom = lr_sq - dot(&mr, &mr);
        let mut num = 0;
        for alpha in &POS {
            for j in 1..=(2 * a + 3 * b + 2) {
                let up = add(&mu, alpha, j);
                if let Some(&c) = mult.get(&dominant_conjugate(up)) {
                    num += 2 * c * dot(&up, alpha);
                }
            }
        }
        if num != 0 {
            debug_assert!(denom > 0 && num % denom == 0);
            mult.insert(mu, num / denom);
        }
    }
    mult
}

fn distinct_permutations(w: Gl3) -> Vec<Gl3> {
    let mut out: Vec<Gl3> = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ]
    .iter()
    .map(|p| [w[p[0]], w[p[1]], w[p[2]]])
    .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Restriction of `τ_{mΛ}` to `K = SO(3)`: each weight `(x, y, z)` is sent to
/// the label `x − y`.
pub fn sl3_weight_labels(w: &Weight, m: i64) -> SU2Char {
    let (t1, t2) = sl3_fundamental_coords(w);
    let a = (t1 * int(m)).to_integer();
    let b = (t2 * int(m)).to_integer();
    let a = i64::try_from(a).expect("label fits in i64");
    let b = i64::try_from(b).expect("label fits in i64");
    let mut out = SU2Char::new();
    for (mu, c) in sl3_dominant_multiplicities(a, b) {
        for v in distinct_permutations(mu) {
            out.add(v[0] - v[1], c);
        }
    }
    out
}

/// Labels of `𝔭 ⊗ ℂ`.
pub fn p_character() -> SU2Char {
    SU2Char::spin(2)
}

/// Casimir of spin `s` under `⟨f₂, f₂⟩ = 1/3`.
pub fn k_casimir(s: i64) -> Rational {
    Rational::new(BigInt::from(s * (s + 1)), BigInt::from(3))
}

/// `min_s [τ(Ω) − s(s+1)/3]` over the constituents of `Λ^p 𝔭* ⊗ τ_{mΛ}|_K`.
pub fn spectral_gap(w: &Weight, m: i64, p: usize) -> Result<Rational, SpectrumError> {
    let restriction = sl3_weight_labels(w, m);
    gap_from_restriction(w, &restriction, m, p)
}

/// Same as [`spectral_gap`] with the restriction already computed.
pub fn gap_from_restriction(w: &Weight, restriction: &SU2Char, m: i64, p: usize) -> Result<Rational, SpectrumError> {
    if p > 5 {
        return Err(SpectrumError::BadDegree(p));
    }
    let nu = p_character().exterior_power(p).tensor(restriction);
    let spins = nu.decompose()?;
    let smax = spins.keys().next_back().copied().unwrap_or(0);
    let omega = casimir_poly(GroupSpec::Sl3, w)?.eval(&int(m));
    Ok(omega - k_casimir(smax))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthCertificate {
    pub p: usize,
    /// `max_m ((τ₁−τ₂)²m²/9 − gap(m)) / m`.
    pub constant: Rational,
    /// `c(m)` never increases over the sampled range.
    pub tail_non_increasing: bool,
    pub holds: bool,
}

/// Fits `C` in `gap(m) ≥ (τ₁−τ₂)²m²/9 − C·m` over `1 ≤ m ≤ max_m` for every
/// `p` and checks the bound and the monotone tail.
pub fn growth_certificates(w: &Weight, max_m: i64) -> Result<Vec<GrowthCertificate>, SpectrumError> {
    let (t1, t2) = sl3_fundamental_coords(w);
    if t1 <= t2 {
        return Err(SpectrumError::NotThetaNormalized);
    }
    let d = &t1 - &t2;
    let q = &d * &d / int(9);
    let mut per_p: Vec<Vec<(Rational, Rational)>> = vec![Vec::new(); 6];
    for m in 1..=max_m {
        let restriction = sl3_weight_labels(w, m);
        for (p, row) in per_p.iter_mut().enumerate() {
            let gap = gap_from_restriction(w, &restriction, m, p)?;
            let mm = int(m);
            let c = (&q * &mm * &mm - &gap) / &mm;
            row.push((gap, c));
        }
    }
    Ok(per_p
        .into_iter()
        .enumerate()
        .map(|(p, row)| {
            let constant = row.iter().map(|(_, c)| c.clone()).max().expect("max_m ≥ 1");
            let tail_non_increasing = row.windows(2).all(|x| x[1].1 <= x[0].1);
            let holds = row.iter().enumerate().all(|(i, (gap, _))| {
                let mm = int(i as i64 + 1);
                *gap >= &q * &mm * &mm - &constant * &mm
            });
            GrowthCertificate { p, constant, tail_non_increasing, holds }
        })
        .collect())
}

fn d_orbit_point(rng: &mut ChaCha8Rng, k: &[i64]) -> Vec<i64> {
    let r = k.len();
    let mut v = k.to_vec();
    for i in (1..r).rev() {
        let j = rng.gen_range(0..=i);
        v.swap(i, j);
    }
    let mut flips = 0;
    for x in v.iter_mut().take(r - 1) {
        if rng.gen_bool(0.5) {
            *x = -*x;
            flips += 1;
        }
    }
    if flips % 2 == 1 {
        v[r - 1] = -v[r - 1];
    }
    v
}

/// Samples convex combinations of `D`-type Weyl images of `Λ` and checks
/// `‖Λ′|_𝔱‖² ≤ Σ_{i≤n} k_i²` after deleting the `𝔞`-coordinate. Returns the
/// number of violations.
pub fn convexhull_violations(group: GroupSpec, w: &Weight, samples: usize, seed: u64) -> Result<usize, SpectrumError> {
    if !matches!(group, GroupSpec::So { .. }) {
        return Err(RootSysError::BadGroup("convex-hull check needs so(p,q)".into()).into());
    }
    let k: Vec<i64> = w
        .coords()
        .iter()
        .map(|c| {
            if !c.is_integer() {
                return None;
            }
            i64::try_from(c.to_integer()).ok()
        })
        .collect::<Option<_>>()
        .ok_or_else(|| RootSysError::NotDominant("integer coordinates expected".into()))?;
    if k.len() != group.rank() || !k.windows(2).all(|p| p[0] >= p[1]) || k.last().is_some_and(|&x| x < 0) {
        return Err(RootSysError::NotDominant("need k₁ ≥ … ≥ k_(n+1) ≥ 0".into()).into());
    }
    let r = k.len();
    let bound: i128 = k[..r - 1].iter().map(|&x| i128::from(x) * i128::from(x)).sum();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut violations = 0;
    for _ in 0..samples {
        let count = rng.gen_range(1..=r + 1);
        let mut total = 0i128;
        let mut acc = vec![0i128; r];
        for _ in 0..count {
            let wt = i128::from(rng.gen_range(1u32..=1000));
            total += wt;
            for (a, x) in acc.iter_mut().zip(d_orbit_point(&mut rng, &k)) {
                *a += wt * i128::from(x);
            }
        }
        let projected: i128 = acc[1..].iter().map(|a| a * a).sum();
        if projected > bound * total * total {
            violations += 1;
        }
    }
    Ok(violations)
}

pub fn convexhull_check(group: GroupSpec, w: &Weight, samples: usize, seed: u64) -> Result<bool, SpectrumError> {
    Ok(convexhull_violations(group, w, samples, seed)? == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;
    use crate::rootsys::{sl3_from_fundamental, weyl_dim_poly};

    fn sl3(a: i64, b: i64) -> Weight {
        sl3_from_fundamental(&int(a), &int(b))
    }

    #[test]
    fn small_restrictions() {
        assert_eq!(sl3_weight_labels(&sl3(1, 0), 1), SU2Char::spin(1));
        let adj = sl3_weight_labels(&sl3(1, 1), 1);
        assert_eq!(adj.decompose().unwrap(), BTreeMap::from([(1, 1), (2, 1)]));
        assert_eq!(sl3_weight_labels(&sl3(0, 0), 5), SU2Char::spin(0));
    }

    #[test]
    fn exterior_table() {
        let p = p_character();
        let dims: Vec<i64> = (0..=5).map(|k| p.exterior_power(k).dim()).collect();
        assert_eq!(dims, vec![1, 5, 10, 10, 5, 1]);
        assert_eq!(p.exterior_power(2).decompose().unwrap(), BTreeMap::from([(1, 1), (3, 1)]));
        assert_eq!(p.exterior_power(5), SU2Char::spin(0));
        for k in 0..=5 {
            assert_eq!(p.exterior_power(k), p.exterior_power(5 - k));
        }
    }

    #[test]
    fn mass_is_dimension() {
        for (a, b) in [(1, 0), (2, 0), (2, 1), (3, 1)] {
            let dim = weyl_dim_poly(GroupSpec::Sl3, &sl3(a, b)).unwrap();
            for m in 1..=6 {
                let c = sl3_weight_labels(&sl3(a, b), m);
                assert_eq!(int(c.dim()), dim.eval(&int(m)));
                assert!(c.is_symmetric());
            }
        }
    }

    #[test]
    fn gaps() {
        assert_eq!(spectral_gap(&sl3(1, 0), 1, 0).unwrap(), rat(10, 9));
        assert_eq!(spectral_gap(&sl3(1, 0), 1, 1).unwrap(), rat(-20, 9));
        assert_eq!(spectral_gap(&sl3(0, 0), 3, 0).unwrap(), int(0));
        assert!(spectral_gap(&sl3(1, 0), 1, 6).is_err());
    }

    #[test]
    fn decomposition_rejects_garbage() {
        assert!(SU2Char::from_labels([1]).decompose().is_err());
        let mut c = SU2Char::spin(1);
        c.add(0, -2);
        assert!(c.decompose().is_err());
    }

    #[test]
    fn convex_hull_small() {
        let g = GroupSpec::so(3, 1).unwrap();
        let w = Weight::from_ints(g.basis(), &[2, 1]).unwrap();
        assert!(convexhull_check(g, &w, 500, 1).unwrap());
        let g = GroupSpec::so(5, 1).unwrap();
        let w = Weight::from_ints(g.basis(), &[2, 1, 1]).unwrap();
        assert!(convexhull_check(g, &w, 500, 2).unwrap());
    }
}
