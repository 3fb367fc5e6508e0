//! Library results against independent computations that share no code
//! with the implementation beyond the `Rational` type.

use num_bigint::BigInt;
use num_rational::BigRational as Q;
use num_traits::{One, Signed, Zero};

use torsionlab_core::exactalg::{Poly, Var};
use torsionlab_core::kostant::verify_casimir_split;
use torsionlab_core::rootsys::{
    dominant_weights_up_to, sl3_from_fundamental, theta_twist, weyl_dim_poly, GroupSpec, Weight,
};
use torsionlab_core::torsion::{kostant_route_raw, l2_torsion, leading_constant};

fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

fn qr(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

// Scalar polynomials as plain coefficient vectors.
fn vmul(a: &[Q], b: &[Q]) -> Vec<Q> {
    let mut out = vec![Q::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn vint(p: &[Q], upper: &Q) -> Q {
    let mut acc = Q::zero();
    let mut pow = upper.clone();
    for (i, c) in p.iter().enumerate() {
        acc += c * &pow / q(i as i64 + 1);
        pow *= upper;
    }
    acc
}

fn lagrange_eval(xs: &[Q], ys: &[Q], x: &Q) -> Q {
    let mut acc = Q::zero();
    for i in 0..xs.len() {
        let mut term = ys[i].clone();
        for j in 0..xs.len() {
            if i != j {
                term = term * (x - &xs[j]) / (&xs[i] - &xs[j]);
            }
        }
        acc += term;
    }
    acc
}

/// Signed permutations of `0..r` with an even number of sign changes,
/// paired with their determinant.
fn d_type_weyl(r: usize) -> Vec<(Vec<usize>, Vec<i64>, i64)> {
    fn perms(k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in perms(k - 1) {
            for pos in 0..=p.len() {
                let mut v = p.clone();
                v.insert(pos, k - 1);
                out.push(v);
            }
        }
        out
    }
    let mut out = Vec::new();
    for p in perms(r) {
        let inversions = (0..r).flat_map(|i| (i + 1..r).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
        let sign = if inversions % 2 == 0 { 1 } else { -1 };
        for mask in 0u32..(1 << r) {
            if mask.count_ones() % 2 == 1 {
                continue;
            }
            let signs = (0..r).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
            out.push((p.clone(), signs, sign));
        }
    }
    out
}

/// `P_Λ(m)` for SO from a brute-force search of `W¹` and a direct product
/// over all positive roots, at a fixed integer `m`.
fn so_torsion_oracle(n: usize, k: &[i64], m: i64) -> Q {
    let r = n + 1;
    let rho: Vec<i64> = (0..r).map(|i| (n - i) as i64).collect();
    let shifted: Vec<i64> = (0..r).map(|i| m * k[i] + rho[i]).collect();
    let mut roots = Vec::new();
    for i in 0..r {
        for j in i + 1..r {
            for s in [1, -1] {
                let mut a = vec![0i64; r];
                a[i] = 1;
                a[j] = s;
                roots.push(a);
            }
        }
    }
    let mut total = Q::zero();
    let mut count = 0;
    for (perm, signs, det) in d_type_weyl(r) {
        let img: Vec<i64> = (0..r).map(|i| signs[i] * shifted[perm[i]]).collect();
        let tail = &img[1..];
        let regular = tail.windows(2).all(|p| p[0] > p[1]) && (n < 2 || tail[n - 2] > tail[n - 1].abs());
        if !regular {
            continue;
        }
        count += 1;
        let lambda = q(img[0].abs());
        // the M-part of w(Λ+ρ) is already σ+ρ_M
        let sigma_rho = tail;
        // density in t: Π_α (α₁ t + ⟨α', σ+ρ_M⟩) / ⟨α, ρ⟩
        let mut dens = vec![Q::one()];
        for a in &roots {
            let den: i64 = a.iter().zip(&rho).map(|(x, y)| x * y).sum();
            let c: i64 = a[1..].iter().zip(sigma_rho).map(|(x, y)| x * y).sum();
            dens = vmul(&dens, &[q(c) / q(den), q(a[0]) / q(den)]);
        }
        total += q(det) * vint(&dens, &lambda);
    }
    assert_eq!(count, 2 * (n + 1), "|W¹| for rank {r}");
    total / q(2)
}

fn so(p: u32, qq: u32) -> GroupSpec {
    GroupSpec::so(p, qq).unwrap()
}

#[test]
fn so_torsion_matches_weyl_group_search() {
    let cases: &[(u32, u32, &[i64])] = &[
        (3, 1, &[1, 1]),
        (3, 1, &[3, 2]),
        (5, 1, &[2, 1, 1]),
        (5, 3, &[1, 1, 1, 1]),
        (5, 3, &[3, 2, 1, -1]),
        (7, 3, &[2, 2, 1, 1, 1]),
        (7, 5, &[1, 1, 1, 1, 1, 1]),
    ];
    for &(p, qq, k) in cases {
        let g = so(p, qq);
        let w = Weight::from_ints(g.basis(), k).unwrap();
        let poly = l2_torsion(g, &w).unwrap().poly;
        for m in 1..=4 {
            assert_eq!(poly.eval(&q(m)), so_torsion_oracle(g.n(), k, m), "so({p},{qq}) {k:?} m={m}");
        }
    }
}

fn sl3_closed_oracle(t1: i64, t2: i64, m: i64) -> Q {
    let (t1, t2, m) = (q(t1), q(t2), q(m));
    let a = [(&m * &t1 + q(1)) / q(2), (&m * (&t1 + &t2) + q(2)) / q(2), (&m * &t2 + q(1)) / q(2)];
    let c = [
        (&m * (&t1 + q(2) * &t2) + q(3)) / q(3),
        (&m * (&t1 - &t2)) / q(3),
        (&m * (q(2) * &t1 + &t2) + q(3)) / q(3),
    ];
    let mut total = Q::zero();
    for k in 0..3 {
        let term = &a[k] * c[k].abs() * (q(3) * &c[k] * &c[k] - q(4) * &a[k] * &a[k]) / q(4);
        if k % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

#[test]
fn sl3_fundamental_by_interpolation() {
    let xs: Vec<Q> = (1..=4).map(q).collect();
    let ys: Vec<Q> = (1..=4).map(|m| sl3_closed_oracle(1, 0, m)).collect();
    let want = Poly::from_coeffs(Var::M, vec![qr(9, 18), qr(24, 18), qr(18, 18), qr(4, 18)]);
    for m in -3..=8 {
        assert_eq!(lagrange_eval(&xs, &ys, &q(m)), want.eval(&q(m)));
    }
    assert_eq!(sl3_closed_oracle(1, 0, 5), want.eval(&q(5)));
    let w = sl3_from_fundamental(&q(1), &q(0));
    assert_eq!(l2_torsion(GroupSpec::Sl3, &w).unwrap().poly, want);
}

#[test]
fn sl3_torsion_matches_closed_form_samples() {
    for t1 in 0..=4 {
        for t2 in 0..=4 {
            if t1 == t2 {
                continue;
            }
            let w = sl3_from_fundamental(&q(t1), &q(t2));
            let poly = l2_torsion(GroupSpec::Sl3, &w).unwrap().poly;
            let (hi, lo) = if t1 > t2 { (t1, t2) } else { (t2, t1) };
            for m in 0..=6 {
                assert_eq!(poly.eval(&q(m)), sl3_closed_oracle(hi, lo, m));
            }
        }
    }
}

#[test]
fn sl3_top_coefficient_formula() {
    for t1 in 2..=5i64 {
        for t2 in 1..t1 {
            let w = sl3_from_fundamental(&q(t1), &q(t2));
            let p = l2_torsion(GroupSpec::Sl3, &w).unwrap().poly;
            let (a, b) = (q(t1), q(t2));
            let alpha4 = -(&b * &b * &b * &b) / q(18)
                + q(2) * &a * &a * &a * &b / q(9)
                + &a * &a * &b * &b / q(3);
            assert_eq!(p.degree(), Some(4));
            assert_eq!(p.leading_coeff().unwrap(), &alpha4, "({t1},{t2})");
        }
    }
    let w = sl3_from_fundamental(&q(2), &q(1));
    assert_eq!(l2_torsion(GroupSpec::Sl3, &w).unwrap().poly.leading_coeff().unwrap(), &qr(55, 18));
}

/// Pointwise Weyl product with an integer `m`.
fn weyl_dim_oracle(k: &[i64], m: i64) -> Q {
    let r = k.len();
    let rho: Vec<i64> = (0..r).map(|i| (r - 1 - i) as i64).collect();
    let mut acc = Q::one();
    for i in 0..r {
        for j in i + 1..r {
            for s in [1, -1] {
                let num = m * k[i] + rho[i] + s * (m * k[j] + rho[j]);
                acc = acc * q(num) / q(rho[i] + s * rho[j]);
            }
        }
    }
    acc
}

#[test]
fn weyl_dimension_pointwise() {
    for g in [so(3, 1), so(5, 3), so(7, 5)] {
        for w in dominant_weights_up_to(g, 2) {
            let k: Vec<i64> = w.coords().iter().map(|c| c.to_integer().try_into().unwrap()).collect();
            let d = weyl_dim_poly(g, &w).unwrap();
            for m in 0..=3 {
                assert_eq!(d.eval(&q(m)), weyl_dim_oracle(&k, m));
            }
        }
    }
    let vector = Weight::from_ints(so(5, 1).basis(), &[1, 0, 0]).unwrap();
    assert_eq!(weyl_dim_poly(so(5, 1), &vector).unwrap().eval(&q(1)), q(6));
}

#[test]
fn theta_symmetry_through_raw_route() {
    for g in [so(3, 1), so(5, 1), so(5, 3), GroupSpec::Sl3] {
        for w in dominant_weights_up_to(g, 3) {
            let Ok(r) = l2_torsion(g, &w) else { continue };
            let twisted = theta_twist(g, &w).unwrap();
            assert_eq!(kostant_route_raw(g, &twisted).unwrap(), r.poly, "{g} {w}");
            assert_eq!(kostant_route_raw(g, &w).unwrap(), r.poly, "{g} {w}");
            assert_eq!(l2_torsion(g, &twisted).unwrap(), r);
        }
    }
}

#[test]
fn casimir_split_sweep() {
    for g in [so(3, 1), so(5, 1), so(5, 3), so(7, 3), so(9, 3), GroupSpec::Sl3] {
        for w in dominant_weights_up_to(g, 4) {
            if g.theta_signature(&w) <= Q::zero() {
                continue;
            }
            let report = verify_casimir_split(g, &w).unwrap();
            assert!(report.all_hold(), "{g} {w}\n{}", report.describe());
        }
    }
}

#[test]
fn so_fundamental_leading_constant_is_one() {
    for (p, qq) in [(3, 1), (5, 1), (5, 3), (7, 5)] {
        let g = so(p, qq);
        let w = Weight::new(g.basis(), vec![qr(1, 1); g.rank()]).unwrap();
        let lc = leading_constant(g, &w).unwrap();
        assert_eq!(lc.constant, q(1), "so({p},{qq})");
    }
}
