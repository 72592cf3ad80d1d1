//! Generators and operations of the family algebra of the adjoint
//! representation.
//!
//! A family element is a `dim×dim` matrix of polynomials in the coordinates
//! (`dim = n²−1`), i.e. a polynomial map from the dual space into the
//! endomorphisms of sl(n).  The three generators over the invariant ring are
//!
//! ```text
//! L_{αβ} = Σ_γ K^{αγ} tr(π_β π_γ F)      (left multiplication by F),
//! R_{αβ} = Σ_γ K^{αγ} tr(π_γ π_β F)      (right multiplication by F),
//! S_{αβ} = u_α · x_β                     (rank one),
//! ```
//!
//! together with the antisymmetric/symmetric pair `M = (L−R)/2`,
//! `N = (L+R)/2`.  In operator form `L` sends `v` to the traceless part of
//! `F·π(v)` and `R` to that of `π(v)·F`; both views agree because the
//! coordinates of a traceless matrix `X` are `Σ_γ K^{αγ} tr(π_γ X)`.
//!
//! The module also provides the higher elements
//!
//! ```text
//! L_k = L^k + (1/n) Σ_λ (Π_{i≥3} c_{λ_i}/n) · L^{λ₁−1} S R^{λ₂−1},
//! ```
//!
//! summed over ordered compositions `λ` of `k` with exactly two or exactly
//! three parts (`R_k` carries the identical correction sum,
//! `N_k = (L_k + R_k)/2`; longer compositions cancel — see
//! `ElementBuilder::correction_sum`), and the independent trace-form
//! construction
//!
//! ```text
//! (T_k)_{αβ} = Σ_γ K^{αγ} tr(π_β π_γ F^k),
//! ```
//!
//! whose equality with `L_k` is one of the verified identity families.

use crate::casimir::{dual_coords, CasimirData, FMatrix};
use crate::lie::{GroupElement, LieData};
use crate::poly::{dot, outer, row_mul, Poly, PolyMatrix};
use crate::rat::{rat, Rat, RatMatrix};
use crate::FamalgError;
use num::Zero;

/// A family element: a `dim×dim` matrix of polynomials in `dim` variables.
pub type FamilyElement = PolyMatrix;

/// Embeds a rational matrix as a matrix of constant polynomials.
fn constants(m: &RatMatrix, vars: usize) -> PolyMatrix {
    PolyMatrix::from_fn(m.rows(), m.cols(), vars, |r, c| Poly::constant(vars, m[(r, c)].clone()))
}

/// `X − (tr X / n)·1`: the traceless part of a square polynomial matrix.
fn project_traceless(x: &PolyMatrix) -> PolyMatrix {
    let n = x.rows();
    let tr_over_n = x.trace().scale(&rat(1, n as i64));
    let mut out = x.clone();
    for i in 0..n {
        out.set(i, i, x.get(i, i).sub(&tr_over_n));
    }
    out
}

/// Coordinates of a traceless polynomial matrix in the ordered basis
/// (entrywise analogue of [`LieData::expand`]).
fn expand_poly_matrix(lie: &LieData, x: &PolyMatrix) -> Vec<Poly> {
    let n = lie.n;
    let mut coords = Vec::with_capacity(lie.dim);
    for i in 0..n {
        for j in 0..n {
            if i != j {
                coords.push(x.get(i, j).clone());
            }
        }
    }
    let mut partial = Poly::zero(lie.dim);
    for i in 0..n - 1 {
        partial = partial.add(x.get(i, i));
        coords.push(partial.clone());
    }
    coords
}

enum Side {
    Left,
    Right,
}

/// The element whose column `β` holds the coordinates of the traceless part
/// of `F^k·π_β` (`Side::Left`) or `π_β·F^k` (`Side::Right`) — equivalently
/// `Σ_γ K^{αγ} tr(π_β π_γ F^k)` resp. `Σ_γ K^{αγ} tr(π_γ π_β F^k)`.
fn contraction_element(lie: &LieData, fk: &PolyMatrix, side: Side) -> FamilyElement {
    let dim = lie.dim;
    let mut out = PolyMatrix::zero(dim, dim, dim);
    for beta in 0..dim {
        let pi_beta = constants(&lie.pi[beta], dim);
        let prod = match side {
            Side::Left => fk.mul(&pi_beta),
            Side::Right => pi_beta.mul(fk),
        };
        let coords = expand_poly_matrix(lie, &project_traceless(&prod));
        for (alpha, p) in coords.into_iter().enumerate() {
            out.set(alpha, beta, p);
        }
    }
    out
}

/// The generator `L` (left multiplication by `F` on coordinates).
pub fn gen_l(lie: &LieData, f: &FMatrix) -> FamilyElement {
    contraction_element(lie, &f.mat, Side::Left)
}

/// The generator `R` (right multiplication by `F` on coordinates).
pub fn gen_r(lie: &LieData, f: &FMatrix) -> FamilyElement {
    contraction_element(lie, &f.mat, Side::Right)
}

/// The rank-one generator `S_{αβ} = u_α·x_β`.
pub fn gen_s(lie: &LieData) -> FamilyElement {
    let u = dual_coords(lie);
    let v: Vec<Poly> = (0..lie.dim).map(|b| Poly::variable(lie.dim, b)).collect();
    outer(&u, &v)
}

/// `M = (L − R)/2`.
pub fn gen_m(l: &FamilyElement, r: &FamilyElement) -> FamilyElement {
    l.sub(r).scale(&rat(1, 2))
}

/// `N = (L + R)/2`.
pub fn gen_n(l: &FamilyElement, r: &FamilyElement) -> FamilyElement {
    l.add(r).scale(&rat(1, 2))
}

/// The structure-constant contraction `Σ_γ K^{αγ} f_{γβ}^δ x_δ`, proportional
/// to `M` (the ratio is pinned by a test, not assumed).
pub fn gen_m_natural(lie: &LieData) -> FamilyElement {
    let dim = lie.dim;
    PolyMatrix::from_fn(dim, dim, dim, |alpha, beta| {
        let mut acc = Poly::zero(dim);
        for gamma in 0..dim {
            let k = &lie.killing_inv[(alpha, gamma)];
            if k.is_zero() {
                continue;
            }
            for (delta, f) in lie.bracket(gamma, beta) {
                let mut exps = vec![0u8; dim];
                exps[*delta] = 1;
                acc = acc.add(&Poly::from_terms(dim, [(exps, f * k)]));
            }
        }
        acc
    })
}

/// The Hessian contraction `Σ_γ K_{βγ} ∂_α ∂_γ c_3`, proportional to `N`
/// (the ratio is pinned by a test, not assumed).
pub fn gen_n_natural(lie: &LieData, c3: &Poly) -> FamilyElement {
    let dim = lie.dim;
    let partials: Vec<Poly> = (0..dim).map(|g| c3.partial(g)).collect();
    PolyMatrix::from_fn(dim, dim, dim, |alpha, beta| {
        let mut acc = Poly::zero(dim);
        for gamma in 0..dim {
            let k = &lie.killing[(beta, gamma)];
            if !k.is_zero() {
                acc = acc.add(&partials[gamma].partial(alpha).scale(k));
            }
        }
        acc
    })
}

/// Product in the family algebra (matrix product of polynomial matrices).
pub fn multiply(a: &FamilyElement, b: &FamilyElement) -> FamilyElement {
    a.mul(b)
}

/// The family algebra of sl(n): Lie data, Casimir cache (through `c_{n+2}`),
/// and the five generators.
#[derive(Clone, Debug)]
pub struct Family {
    pub lie: LieData,
    pub cas: CasimirData,
    pub l: FamilyElement,
    pub r: FamilyElement,
    pub s: FamilyElement,
    pub m: FamilyElement,
    pub n_el: FamilyElement,
    /// Dual coordinates `u_α` (the coordinates of `F` itself).
    pub u: Vec<Poly>,
    /// The coordinate variables `x_β` as polynomials.
    pub v: Vec<Poly>,
}

impl Family {
    pub fn new(n: usize) -> Result<Family, FamalgError> {
        let lie = LieData::build(n)?;
        let cas = CasimirData::new(&lie, n + 2);
        let l = gen_l(&lie, &cas.f);
        let r = gen_r(&lie, &cas.f);
        let s = gen_s(&lie);
        let m = gen_m(&l, &r);
        let n_el = gen_n(&l, &r);
        let u = dual_coords(&lie);
        let v = (0..lie.dim).map(|b| Poly::variable(lie.dim, b)).collect();
        Ok(Family { lie, cas, l, r, s, m, n_el, u, v })
    }

    pub fn n(&self) -> usize {
        self.lie.n
    }

    pub fn dim(&self) -> usize {
        self.lie.dim
    }

    /// Generator by name: `L`, `R`, `S`, `M`, or `N`.
    pub fn generator(&self, name: &str) -> Option<&FamilyElement> {
        match name {
            "L" => Some(&self.l),
            "R" => Some(&self.r),
            "S" => Some(&self.s),
            "M" => Some(&self.m),
            "N" => Some(&self.n_el),
            _ => None,
        }
    }
}

/// Shared power cache for assembling words and higher elements; all suite
/// checks at one `n` go through a single builder so `L^k`, `R^k`, `M^k`,
/// `N^k` are each computed once.
pub struct ElementBuilder<'a> {
    pub fam: &'a Family,
    lp: Vec<PolyMatrix>,
    rp: Vec<PolyMatrix>,
    mp: Vec<PolyMatrix>,
    np: Vec<PolyMatrix>,
    /// `xchain[m]` holds the `n×n` matrix obtained from `F` by `m` rounds of
    /// multiply-by-`F`-and-project; its coordinate vector is `L^k R^l u` for
    /// any `k + l = m` (see [`ElementBuilder::sandwich_scalar_lhs`]).
    xchain: Vec<PolyMatrix>,
}

fn ensure_pow(pows: &mut Vec<PolyMatrix>, base: &PolyMatrix, k: usize) {
    while pows.len() <= k {
        let next = pows.last().expect("seeded with the identity").mul(base);
        pows.push(next);
    }
}

impl<'a> ElementBuilder<'a> {
    pub fn new(fam: &'a Family) -> Self {
        let id = PolyMatrix::identity(fam.dim(), fam.dim());
        ElementBuilder {
            fam,
            lp: vec![id.clone()],
            rp: vec![id.clone()],
            mp: vec![id.clone()],
            np: vec![id],
            xchain: vec![fam.cas.f.mat.clone()],
        }
    }

    pub fn lpow(&mut self, k: usize) -> &PolyMatrix {
        ensure_pow(&mut self.lp, &self.fam.l, k);
        &self.lp[k]
    }

    pub fn rpow(&mut self, k: usize) -> &PolyMatrix {
        ensure_pow(&mut self.rp, &self.fam.r, k);
        &self.rp[k]
    }

    pub fn mpow(&mut self, k: usize) -> &PolyMatrix {
        ensure_pow(&mut self.mp, &self.fam.m, k);
        &self.mp[k]
    }

    pub fn npow(&mut self, k: usize) -> &PolyMatrix {
        ensure_pow(&mut self.np, &self.fam.n_el, k);
        &self.np[k]
    }

    /// Ensures and returns `(L^a, R^b)` together (for mixed products).
    pub fn lr(&mut self, a: usize, b: usize) -> (&PolyMatrix, &PolyMatrix) {
        ensure_pow(&mut self.lp, &self.fam.l, a);
        ensure_pow(&mut self.rp, &self.fam.r, b);
        (&self.lp[a], &self.rp[b])
    }

    /// Ensures and returns `(N^a, M^b)` together.
    pub fn nm(&mut self, a: usize, b: usize) -> (&PolyMatrix, &PolyMatrix) {
        ensure_pow(&mut self.np, &self.fam.n_el, a);
        ensure_pow(&mut self.mp, &self.fam.m, b);
        (&self.np[a], &self.mp[b])
    }

    /// `L^k · S · R^l`, assembled as the outer product
    /// `(L^k u)(vᵀ R^l)` — exact because `S = u·vᵀ` entrywise.
    pub fn word_lsr(&mut self, k: usize, l: usize) -> PolyMatrix {
        ensure_pow(&mut self.lp, &self.fam.l, k);
        ensure_pow(&mut self.rp, &self.fam.r, l);
        let col = self.lp[k].mat_vec(&self.fam.u);
        let row = row_mul(&self.fam.v, &self.rp[l]);
        outer(&col, &row)
    }

    /// The correction sum shared by `L_k`, `R_k`, and `N_k`:
    ///
    /// ```text
    /// (1/n)  Σ_{a+b=k,   a,b ≥ 1}        L^{a−1} S R^{b−1}
    ///  + (1/n²) Σ_{j=2}^{k−2} c_j Σ_{a+b=k−j, a,b ≥ 1} L^{a−1} S R^{b−1}
    /// ```
    ///
    /// — equivalently `(1/n) Σ_λ (Π_{i≥3} c_{λ_i}/n) L^{λ₁−1} S R^{λ₂−1}`
    /// over ordered compositions `λ ⊨ k` with exactly two or exactly three
    /// parts (a third part of 1 dies on `c_1 = 0`).  Compositions with four
    /// or more parts contribute nothing: the trace form obeys the recursion
    /// `T_k = L·T_{k−1} + (1/n)·S·T'_{k−2}`, whose cross term expands
    /// `S L^{a−1} S` through the sandwich scalars `σ_{a+1}`, and the
    /// alternating-sign composition expansion of `σ` cancels every term
    /// carrying two or more Casimir factors.  The first such cancellation
    /// occurs at `k = 6`, where the would-be `(1,1,2,2)` term `(c_2²/n³)·S`
    /// is annihilated by the `−c_2²/n` part of `σ_4`; a unit test pins that
    /// cancellation against the independently contracted trace form.
    fn correction_sum(&mut self, k: usize) -> PolyMatrix {
        let n = self.fam.n();
        let dim = self.fam.dim();
        let mut acc = PolyMatrix::zero(dim, dim, dim);
        if k < 2 {
            return acc;
        }
        for j in std::iter::once(0).chain(2..=k - 2) {
            let weight = if j == 0 {
                Poly::constant(dim, rat(1, n as i64))
            } else {
                self.fam.cas.c(j).scale(&rat(1, (n * n) as i64))
            };
            let mut inner = PolyMatrix::zero(dim, dim, dim);
            for a in 1..=k - j - 1 {
                let b = k - j - a;
                inner = inner.add(&self.word_lsr(a - 1, b - 1));
            }
            acc = acc.add(&inner.scale_poly(&weight));
        }
        acc
    }

    /// `L_k = L^k + (correction sum)`.
    pub fn element_lk(&mut self, k: usize) -> FamilyElement {
        let corr = self.correction_sum(k);
        self.lpow(k).add(&corr)
    }

    /// `R_k = R^k + (correction sum)` — the same corrections as `L_k`, as the
    /// trace-form anti-automorphism forces (swapping the first two parts of a
    /// composition is a bijection fixing the coefficient).
    pub fn element_rk(&mut self, k: usize) -> FamilyElement {
        let corr = self.correction_sum(k);
        self.rpow(k).add(&corr)
    }

    /// `N_k = (L_k + R_k)/2 = (L^k + R^k)/2 + (correction sum)`.
    pub fn element_nk(&mut self, k: usize) -> FamilyElement {
        let corr = self.correction_sum(k);
        ensure_pow(&mut self.lp, &self.fam.l, k);
        ensure_pow(&mut self.rp, &self.fam.r, k);
        self.lp[k].add(&self.rp[k]).scale(&rat(1, 2)).add(&corr)
    }

    /// `S · L^k · R^l · S`, computed through the rank-one structure of `S`:
    /// the middle word is applied to the vector `u` and contracted with `v`,
    /// giving `(vᵀ L^k R^l u) · S` exactly.
    pub fn sandwich_lhs(&mut self, k: usize, l: usize) -> FamilyElement {
        let mut w = self.fam.u.clone();
        for _ in 0..l {
            w = self.fam.r.mat_vec(&w);
        }
        for _ in 0..k {
            w = self.fam.l.mat_vec(&w);
        }
        let scalar = dot(&self.fam.v, &w);
        self.fam.s.scale_poly(&scalar)
    }

    /// The scalar `vᵀ W u` for any word `W` in `L`, `R`, `N` of length `m`
    /// (it depends only on the length): since `u` is the coordinate vector of
    /// `F` and each of `L`, `R` sends the coordinates of an equivariant
    /// matrix `X` to the coordinates of the traceless part of `F·X` resp.
    /// `X·F` — which agree once `X` is a polynomial in `F` — the whole word
    /// collapses to `m` rounds of multiply-by-`F`-and-project on `n×n`
    /// matrices.  `S·W·S = (vᵀ W u)·S` for every such word, so this is the
    /// left-hand scalar of each sandwich identity.
    pub fn sandwich_scalar_lhs(&mut self, m: usize) -> Poly {
        while self.xchain.len() <= m {
            let y = self.fam.cas.f.mat.mul(self.xchain.last().expect("seeded with F"));
            self.xchain.push(project_traceless(&y));
        }
        let coords = expand_poly_matrix(&self.fam.lie, &self.xchain[m]);
        dot(&self.fam.v, &coords)
    }
}

/// `L_k` built fresh (see [`ElementBuilder::element_lk`] for the shared-cache
/// variant used by the suites).
pub fn element_lk(fam: &Family, k: usize) -> FamilyElement {
    ElementBuilder::new(fam).element_lk(k)
}

/// `R_k` built fresh.
pub fn element_rk(fam: &Family, k: usize) -> FamilyElement {
    ElementBuilder::new(fam).element_rk(k)
}

/// `N_k` built fresh.
pub fn element_nk(fam: &Family, k: usize) -> FamilyElement {
    ElementBuilder::new(fam).element_nk(k)
}

/// The trace-form element `(T_k)_{αβ} = Σ_γ K^{αγ} tr(π_β π_γ F^k)`,
/// computed directly from the cached power `F^k` — the independent
/// counterpart of `L_k`.
pub fn trace_form_lk(fam: &Family, k: usize) -> FamilyElement {
    assert!(k <= fam.cas.max_k(), "F^k not cached");
    contraction_element(&fam.lie, &fam.cas.fpow[k], Side::Left)
}

/// `Σ_γ K^{αγ} tr(π_γ π_β F^k)`: the trace-form counterpart of `R_k`.
pub fn trace_form_rk(fam: &Family, k: usize) -> FamilyElement {
    assert!(k <= fam.cas.max_k(), "F^k not cached");
    contraction_element(&fam.lie, &fam.cas.fpow[k], Side::Right)
}

/// The symmetrization map to invariants: `A ↦ Σ_{αβ} A_{αβ} x_α u_β`
/// (e.g. the identity goes to `c_2` and `L`, `R` both go to `c_3`).
pub fn symmetrize(fam: &Family, a: &FamilyElement) -> Poly {
    let au = a.mat_vec(&fam.u);
    dot(&fam.v, &au)
}

/// The trace-form transpose `A† = K⁻¹ Aᵀ K`, an involutive
/// anti-automorphism with `L† = R`, `S† = S`, `M† = −M`, `N† = N`.
pub fn killing_transpose(lie: &LieData, a: &FamilyElement) -> FamilyElement {
    let kinv = constants(&lie.killing_inv, lie.dim);
    let k = constants(&lie.killing, lie.dim);
    kinv.mul(&a.transpose()).mul(&k)
}

/// The second-order invariant operator
/// `D(P) = Σ_{αβ} (∂_α c_3) K_{αβ} (∂_β P)` (e.g. `D(c_2) = 6·c_3`).
pub fn apply_d(lie: &LieData, c3: &Poly, p: &Poly) -> Poly {
    let dim = lie.dim;
    let dc3: Vec<Poly> = (0..dim).map(|a| c3.partial(a)).collect();
    let dp: Vec<Poly> = (0..dim).map(|b| p.partial(b)).collect();
    let w: Vec<Poly> = (0..dim)
        .map(|alpha| {
            let mut acc = Poly::zero(dim);
            for beta in 0..dim {
                let k = &lie.killing[(alpha, beta)];
                if !k.is_zero() {
                    acc = acc.add(&dp[beta].scale(k));
                }
            }
            acc
        })
        .collect();
    dot(&dc3, &w)
}

/// Equivariance of a family element at one group element and one point:
/// with `ξ' = g·ξ` the coadjoint image, checks `A(ξ')·Ad(g) = Ad(g)·A(ξ)`
/// in exact arithmetic.
pub fn equivariance_check(
    lie: &LieData,
    a: &FamilyElement,
    g: &GroupElement,
    xi: &[Rat],
) -> bool {
    let moved = lie.coadjoint(g, xi);
    let lhs = a.evaluate(&moved).mul(&g.adjoint);
    let rhs = g.adjoint.mul(&a.evaluate(xi));
    lhs == rhs
}
