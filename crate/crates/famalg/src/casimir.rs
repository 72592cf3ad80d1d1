//! The fundamental matrix `F` and the symmetric invariants built from it.
//!
//! With `u_α = Σ_β K^{αβ} x_β` the dual coordinates, the matrix
//!
//! ```text
//! F_ab = Σ_α (π_α)_ab · u_α
//! ```
//!
//! is an `n×n` matrix of linear polynomials.  Its power traces
//! `c_k = tr(F^k)` generate the invariant ring (`c_0 = n`, `c_1 = 0`,
//! `c_2 = Σ K^{αβ} x_α x_β`), and Newton's identities convert them into the
//! characteristic coefficients `d_2..d_n` with
//!
//! ```text
//! F^n = d_2·F^{n−2} + d_3·F^{n−3} + … + d_n·F^0
//! ```
//!
//! entrywise — the Cayley–Hamilton identity that drives every degree
//! reduction in the family algebra.

use crate::lie::LieData;
use crate::poly::{Poly, PolyMatrix};
use crate::rat::{rat, rat_int, Rat};
use num::{One, Zero};

/// The fundamental matrix `F` for sl(n): `n×n` entries, each a linear
/// polynomial in the `n²−1` coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FMatrix {
    pub n: usize,
    pub mat: PolyMatrix,
}

/// The dual coordinates `u_α = Σ_β K^{αβ} x_β` as linear polynomials.
pub fn dual_coords(lie: &LieData) -> Vec<Poly> {
    let dim = lie.dim;
    (0..dim)
        .map(|al| {
            Poly::from_terms(
                dim,
                (0..dim).map(|be| {
                    let mut exps = vec![0u8; dim];
                    exps[be] = 1;
                    (exps, lie.killing_inv[(al, be)].clone())
                }),
            )
        })
        .collect()
}

/// Builds `F_ab = Σ_α (π_α)_ab u_α`.
pub fn build_f(lie: &LieData) -> FMatrix {
    let dim = lie.dim;
    let u = dual_coords(lie);
    let mat = PolyMatrix::from_fn(lie.n, lie.n, dim, |a, b| {
        let mut acc = Poly::zero(dim);
        for (al, pi) in lie.pi.iter().enumerate() {
            let coeff = &pi[(a, b)];
            if !coeff.is_zero() {
                acc = acc.add(&u[al].scale(coeff));
            }
        }
        acc
    });
    FMatrix { n: lie.n, mat }
}

/// `c_k = tr(F^k)`, computed from scratch (`c_0 = n`, `c_1 = 0`).
pub fn casimir_c(f: &FMatrix, k: usize) -> Poly {
    f.mat.pow(k as u32).trace()
}

/// Characteristic coefficients as a list `[d_2, d_3, …, d_n]`
/// (index `j − 2` holds `d_j`), from Newton's identities.
pub fn coeffs_d(f: &FMatrix) -> Vec<Poly> {
    let n = f.n;
    let mut c = Vec::with_capacity(n + 1);
    let mut fpow = PolyMatrix::identity(n, f.mat.vars());
    c.push(fpow.trace());
    for _ in 1..=n {
        fpow = fpow.mul(&f.mat);
        c.push(fpow.trace());
    }
    newton_d(&c, n)
}

/// Newton's identities: from `c_1..c_n` (power traces) to `[d_2..d_n]` with
/// `d_j = (−1)^{j−1} e_j` the signed elementary symmetric functions of the
/// eigenvalues.
fn newton_d(c: &[Poly], n: usize) -> Vec<Poly> {
    let vars = c[0].dim();
    let mut e: Vec<Poly> = vec![Poly::one(vars)];
    for k in 1..=n {
        let mut acc = Poly::zero(vars);
        let mut sign = Rat::one();
        for i in 1..=k {
            acc = acc.add(&e[k - i].mul(&c[i]).scale(&sign));
            sign = -sign;
        }
        e.push(acc.scale(&rat(1, k as i64)));
    }
    (2..=n)
        .map(|j| {
            let sign = if (j - 1) % 2 == 0 { rat_int(1) } else { rat_int(-1) };
            e[j].scale(&sign)
        })
        .collect()
}

/// Entrywise Cayley–Hamilton: `F^n = Σ_{k=0}^{n−2} d_{n−k} F^k`.
pub fn verify_cayley_hamilton(f: &FMatrix) -> bool {
    let n = f.n;
    let d = coeffs_d(f);
    let vars = f.mat.vars();
    let mut fpow = Vec::with_capacity(n + 1);
    fpow.push(PolyMatrix::identity(n, vars));
    for k in 1..=n {
        let next = fpow[k - 1].mul(&f.mat);
        fpow.push(next);
    }
    let mut rhs = PolyMatrix::zero(n, n, vars);
    for k in 0..=n - 2 {
        // d_{n−k} lives at list index (n − k) − 2.
        rhs = rhs.add(&fpow[k].scale_poly(&d[n - k - 2]));
    }
    fpow[n] == rhs
}

/// All ordered compositions of `k` into parts `≥ min_part`, in lexicographic
/// order of the part sequence.  `compositions(0, _)` is the empty composition.
pub fn compositions(k: u32, min_part: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    fn rec(remaining: u32, min_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        for first in min_part..=remaining {
            prefix.push(first);
            rec(remaining - first, min_part, prefix, out);
            prefix.pop();
        }
    }
    rec(k, min_part, &mut prefix, &mut out);
    out
}

fn sandwich_from_c(c: &[Poly], n: usize, m: usize) -> Poly {
    let vars = c[0].dim();
    let minus_inv_n = rat(-1, n as i64);
    let mut acc = Poly::zero(vars);
    // Parts of size 1 would contribute a factor c_1 = 0, so restrict to ≥ 2.
    for comp in compositions(m as u32, 2) {
        let mut prod = Poly::one(vars);
        for part in comp {
            prod = prod.mul(&c[part as usize].scale(&minus_inv_n));
        }
        acc = acc.add(&prod);
    }
    acc.scale(&rat_int(-(n as i64)))
}

/// The scalar `σ_m` with `S·A·S = σ_{m+2}·S` for any length-`m` word `A` in
/// `L, R`:
///
/// ```text
/// σ_m = −n · Σ_{λ⊨m} Π_i (−c_{λ_i} / n)
/// ```
///
/// summed over ordered compositions `λ` of `m` (`σ_2 = c_2`, `σ_3 = c_3`,
/// `σ_4 = c_4 − c_2²/n`, …).
pub fn sandwich_scalar(f: &FMatrix, m: usize) -> Poly {
    let mut c = Vec::with_capacity(m + 1);
    let mut fpow = PolyMatrix::identity(f.n, f.mat.vars());
    c.push(fpow.trace());
    for _ in 1..=m {
        fpow = fpow.mul(&f.mat);
        c.push(fpow.trace());
    }
    sandwich_from_c(&c, f.n, m)
}

/// Cached `F` powers, power traces, and characteristic coefficients for one
/// value of `n`.
#[derive(Clone, Debug)]
pub struct CasimirData {
    pub n: usize,
    pub f: FMatrix,
    /// `fpow[k] = F^k` for `k = 0..=max_k`.
    pub fpow: Vec<PolyMatrix>,
    c: Vec<Poly>,
    /// `d[j]` meaningful for `j = 2..=n` (lower slots zero).
    d: Vec<Poly>,
}

impl CasimirData {
    /// Builds the cache with powers and traces up to `F^max_k`
    /// (`max_k ≥ n` required so the `d_j` exist).
    pub fn new(lie: &LieData, max_k: usize) -> CasimirData {
        let n = lie.n;
        assert!(max_k >= n, "need power traces at least up to c_n");
        let f = build_f(lie);
        let mut fpow = Vec::with_capacity(max_k + 1);
        fpow.push(PolyMatrix::identity(n, lie.dim));
        for k in 1..=max_k {
            let next = fpow[k - 1].mul(&f.mat);
            fpow.push(next);
        }
        let c: Vec<Poly> = fpow.iter().map(PolyMatrix::trace).collect();
        let dlist = newton_d(&c, n);
        let mut d = vec![Poly::zero(lie.dim); 2];
        d.extend(dlist);
        CasimirData { n, f, fpow, c, d }
    }

    pub fn max_k(&self) -> usize {
        self.fpow.len() - 1
    }

    /// `c_k = tr(F^k)` for `0 ≤ k ≤ max_k`.
    pub fn c(&self, k: usize) -> &Poly {
        &self.c[k]
    }

    /// `d_j` for `2 ≤ j ≤ n`.
    pub fn d(&self, j: usize) -> &Poly {
        assert!((2..=self.n).contains(&j), "d_j defined for 2 ≤ j ≤ n");
        &self.d[j]
    }

    /// Cached variant of [`sandwich_scalar`]; needs `m ≤ max_k`.
    pub fn sandwich_scalar(&self, m: usize) -> Poly {
        assert!(m <= self.max_k(), "sandwich scalar needs c_m in the cache");
        sandwich_from_c(&self.c, self.n, m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{random_group_element, random_point, LieData};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn xvar(dim: usize, i: usize) -> Poly {
        Poly::variable(dim, i)
    }

    #[test]
    fn sl2_fundamental_matrix() {
        // Variables: x1 = E(1,2)-coordinate, x2 = E(2,1), x3 = H(1).
        // F = [[x3/2, x2], [x1, −x3/2]].
        let lie = LieData::build(2).unwrap();
        let f = build_f(&lie);
        let half = rat(1, 2);
        assert_eq!(f.mat.get(0, 0), &xvar(3, 2).scale(&half));
        assert_eq!(f.mat.get(0, 1), &xvar(3, 1));
        assert_eq!(f.mat.get(1, 0), &xvar(3, 0));
        assert_eq!(f.mat.get(1, 1), &xvar(3, 2).scale(&-half));
    }

    #[test]
    fn low_power_traces() {
        for n in 2..=4 {
            let lie = LieData::build(n).unwrap();
            let f = build_f(&lie);
            assert_eq!(casimir_c(&f, 0), Poly::constant(lie.dim, rat_int(n as i64)));
            assert!(casimir_c(&f, 1).is_zero(), "c_1 must vanish at n = {n}");
            // c_2 = Σ K^{αβ} x_α x_β.
            let mut quad = Poly::zero(lie.dim);
            for a in 0..lie.dim {
                for b in 0..lie.dim {
                    let k = &lie.killing_inv[(a, b)];
                    if !k.is_zero() {
                        quad = quad.add(&xvar(lie.dim, a).mul(&xvar(lie.dim, b)).scale(k));
                    }
                }
            }
            assert_eq!(casimir_c(&f, 2), quad, "c_2 mismatch at n = {n}");
        }
    }

    #[test]
    fn sl2_quadratic_trace() {
        let lie = LieData::build(2).unwrap();
        let f = build_f(&lie);
        // c_2 = x3²/2 + 2·x1·x2.
        let expected = Poly::from_terms(
            3,
            vec![(vec![0, 0, 2], rat(1, 2)), (vec![1, 1, 0], rat_int(2))],
        );
        assert_eq!(casimir_c(&f, 2), expected);
        // sl(2) has no cubic invariant.
        assert!(casimir_c(&f, 3).is_zero());
    }

    #[test]
    fn characteristic_coefficients_n4() {
        let lie = LieData::build(4).unwrap();
        let cas = CasimirData::new(&lie, 4);
        assert_eq!(cas.d(2), &cas.c(2).scale(&rat(1, 2)));
        assert_eq!(cas.d(3), &cas.c(3).scale(&rat(1, 3)));
        let d4 = cas
            .c(4)
            .scale(&rat(1, 4))
            .sub(&cas.c(2).mul(cas.c(2)).scale(&rat(1, 8)));
        assert_eq!(cas.d(4), &d4);
        // The standalone list agrees with the cache.
        let list = coeffs_d(&cas.f);
        assert_eq!(&list[0], cas.d(2));
        assert_eq!(&list[2], cas.d(4));
    }

    #[test]
    fn cayley_hamilton_small_n() {
        for n in 2..=4 {
            let lie = LieData::build(n).unwrap();
            let f = build_f(&lie);
            assert!(verify_cayley_hamilton(&f), "n = {n}");
        }
    }

    #[test]
    fn composition_counts() {
        for k in 1..=8u32 {
            assert_eq!(compositions(k, 1).len(), 1 << (k - 1), "k = {k}");
        }
        assert_eq!(compositions(4, 2), vec![vec![2, 2], vec![4]]);
        assert_eq!(compositions(0, 2), vec![Vec::<u32>::new()]);
    }

    #[test]
    fn sandwich_scalars_low_degree() {
        let lie = LieData::build(3).unwrap();
        let cas = CasimirData::new(&lie, 5);
        assert_eq!(cas.sandwich_scalar(2), cas.c(2).clone());
        assert_eq!(cas.sandwich_scalar(3), cas.c(3).clone());
        let expected4 = cas.c(4).sub(&cas.c(2).mul(cas.c(2)).scale(&rat(1, 3)));
        assert_eq!(cas.sandwich_scalar(4), expected4);
        let expected5 = cas
            .c(5)
            .sub(&cas.c(2).mul(cas.c(3)).scale(&rat(2, 3)));
        assert_eq!(cas.sandwich_scalar(5), expected5);
        assert_eq!(sandwich_scalar(&cas.f, 4), expected4);
    }

    #[test]
    fn power_traces_are_invariant() {
        // c_k(g·ξ) = c_k(ξ) under the coadjoint action.
        let lie = LieData::build(3).unwrap();
        let cas = CasimirData::new(&lie, 3);
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..4 {
            let g = random_group_element(&lie, &mut rng);
            let xi = random_point(lie.dim, 7, &mut rng);
            let moved = lie.coadjoint(&g, &xi);
            for k in 2..=3 {
                assert_eq!(cas.c(k).evaluate(&moved), cas.c(k).evaluate(&xi), "k = {k}");
            }
        }
    }

    #[test]
    fn quintic_trace_reduces_at_n4() {
        // c_5 = (5/6)·c_2·c_3 on sl(4).
        let lie = LieData::build(4).unwrap();
        let cas = CasimirData::new(&lie, 5);
        let expected = cas.c(2).mul(cas.c(3)).scale(&rat(5, 6));
        assert_eq!(cas.c(5), &expected);
    }
}
