//! The special linear Lie algebra sl(n) in a fixed ordered basis.
//!
//! Basis order: the off-diagonal matrix units `E_ij` (`i ≠ j`) in
//! lexicographic `(i, j)` order, followed by the simple coroot matrices
//! `H_i = E_ii − E_{i+1,i+1}` for `i = 1..n−1`.  The bilinear form is the
//! defining-representation trace form
//!
//! ```text
//! K_{αβ} = tr(π(x_α) π(x_β)),
//! ```
//!
//! under which `K(E_12, E_21) = 1` and `K(H_i, H_i) = 2`.  The module also
//! provides exact one-parameter adjoint-group elements
//!
//! ```text
//! exp(t·ad E_ij) = 1 + t·ad E_ij + t²/2·(ad E_ij)²,
//! ```
//! a finite sum because `(ad E_ij)³ = 0` on sl(n), together with the matching
//! defining-representation element `1 + t·E_ij` and the coadjoint action on
//! coordinate points of the dual space.

use crate::rat::{rat, rat_int, Rat, RatMatrix};
use crate::FamalgError;
use num::{One, Zero};
use rand::Rng;
use std::fmt;

/// One element of the ordered basis of sl(n).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisElement {
    /// Matrix unit `E_ij` with `i ≠ j` (indices 1-based).
    OffDiagonal { i: usize, j: usize },
    /// `H_i = E_ii − E_{i+1,i+1}` (1-based `i`, so `i = 1..n−1`).
    Diagonal { i: usize },
}

impl fmt::Display for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisElement::OffDiagonal { i, j } => write!(f, "E({},{})", i, j),
            BasisElement::Diagonal { i } => write!(f, "H({})", i),
        }
    }
}

/// sl(n) with its ordered basis, representation matrices, trace form, and
/// structure constants.
#[derive(Clone, Debug)]
pub struct LieData {
    pub n: usize,
    /// `n² − 1`.
    pub dim: usize,
    pub basis: Vec<BasisElement>,
    /// Defining-representation matrices `π(x_α)`, one per basis element.
    pub pi: Vec<RatMatrix>,
    /// `K_{αβ} = tr(π_α π_β)`.
    pub killing: RatMatrix,
    /// Exact inverse `K^{αβ}`.
    pub killing_inv: RatMatrix,
    /// `bracket[a * dim + b]` holds `[x_a, x_b]` as sparse coordinates.
    bracket: Vec<Vec<(usize, Rat)>>,
}

/// An element of SL(n) presented in both representations needed downstream:
/// `adjoint` is `Ad(g)` on the `dim`-dimensional algebra, `defining` is `g`
/// itself on column vectors of length `n`.
#[derive(Clone, Debug)]
pub struct GroupElement {
    pub adjoint: RatMatrix,
    pub defining: RatMatrix,
}

impl GroupElement {
    pub fn identity(lie: &LieData) -> Self {
        GroupElement {
            adjoint: RatMatrix::identity(lie.dim),
            defining: RatMatrix::identity(lie.n),
        }
    }

    /// Group product `self · other` in both representations.
    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        GroupElement {
            adjoint: self.adjoint.mul(&other.adjoint),
            defining: self.defining.mul(&other.defining),
        }
    }

    /// `Ad(g)ᵀ K Ad(g) = K`: the adjoint action preserves the trace form.
    pub fn preserves_form(&self, lie: &LieData) -> bool {
        self.adjoint.transpose().mul(&lie.killing).mul(&self.adjoint) == lie.killing
    }
}

impl LieData {
    /// Builds sl(n).  Fails for `n < 2`.
    pub fn build(n: usize) -> Result<LieData, FamalgError> {
        if n < 2 {
            return Err(FamalgError::InvalidDimension(n));
        }
        let dim = n * n - 1;
        let mut basis = Vec::with_capacity(dim);
        for i in 1..=n {
            for j in 1..=n {
                if i != j {
                    basis.push(BasisElement::OffDiagonal { i, j });
                }
            }
        }
        for i in 1..n {
            basis.push(BasisElement::Diagonal { i });
        }

        let pi: Vec<RatMatrix> = basis
            .iter()
            .map(|b| match *b {
                BasisElement::OffDiagonal { i, j } => RatMatrix::from_fn(n, n, |r, c| {
                    if r + 1 == i && c + 1 == j {
                        Rat::one()
                    } else {
                        Rat::zero()
                    }
                }),
                BasisElement::Diagonal { i } => RatMatrix::from_fn(n, n, |r, c| {
                    if r != c {
                        Rat::zero()
                    } else if r + 1 == i {
                        Rat::one()
                    } else if r == i {
                        -Rat::one()
                    } else {
                        Rat::zero()
                    }
                }),
            })
            .collect();

        let killing = RatMatrix::from_fn(dim, dim, |a, b| pi[a].mul(&pi[b]).trace());
        let killing_inv = killing
            .inverse()
            .expect("the trace form of sl(n) is nondegenerate");

        let mut lie = LieData { n, dim, basis, pi, killing, killing_inv, bracket: Vec::new() };
        let mut bracket = Vec::with_capacity(dim * dim);
        for a in 0..dim {
            for b in 0..dim {
                let comm = lie.pi[a].mul(&lie.pi[b]).sub(&lie.pi[b].mul(&lie.pi[a]));
                let coords = lie.expand(&comm);
                bracket.push(
                    coords
                        .into_iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .collect(),
                );
            }
        }
        lie.bracket = bracket;
        Ok(lie)
    }

    /// Basis index of `E_ij` (1-based `i ≠ j`).
    pub fn index_of_offdiag(&self, i: usize, j: usize) -> usize {
        let pos = self
            .basis
            .iter()
            .position(|b| matches!(b, BasisElement::OffDiagonal { i: bi, j: bj } if *bi == i && *bj == j));
        pos.expect("off-diagonal indices out of range")
    }

    /// Basis index of `H_i` (1-based `i`, `1 ≤ i ≤ n−1`).
    pub fn index_of_diag(&self, i: usize) -> usize {
        let n = self.n;
        assert!((1..n).contains(&i), "diagonal index out of range");
        n * (n - 1) + (i - 1)
    }

    /// Coordinates of a traceless `n×n` matrix in the ordered basis.
    ///
    /// Off-diagonal coordinates are the matrix entries; the coordinate of
    /// `H_k` is the partial sum `Σ_{i ≤ k} X_ii` (the unique solution of the
    /// triangular diagonal system).
    pub fn expand(&self, x: &RatMatrix) -> Vec<Rat> {
        let n = self.n;
        assert_eq!((x.rows(), x.cols()), (n, n), "expected an n×n matrix");
        debug_assert!(x.trace().is_zero(), "expected a traceless matrix");
        let mut coords = Vec::with_capacity(self.dim);
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    coords.push(x[(i, j)].clone());
                }
            }
        }
        let mut partial = Rat::zero();
        for i in 0..n - 1 {
            partial += &x[(i, i)];
            coords.push(partial.clone());
        }
        coords
    }

    /// The matrix `Σ_α coords_α · π_α`.
    pub fn to_matrix(&self, coords: &[Rat]) -> RatMatrix {
        assert_eq!(coords.len(), self.dim, "coordinate length mismatch");
        let mut m = RatMatrix::zero(self.n, self.n);
        for (c, p) in coords.iter().zip(&self.pi) {
            if !c.is_zero() {
                m = m.add(&p.scale(c));
            }
        }
        m
    }

    /// Sparse coordinates of `[x_a, x_b]`.
    pub fn bracket(&self, a: usize, b: usize) -> &[(usize, Rat)] {
        &self.bracket[a * self.dim + b]
    }

    /// Structure constant `f_{ab}^g` in `[x_a, x_b] = Σ_g f_{ab}^g x_g`.
    pub fn structure_constant(&self, a: usize, b: usize, g: usize) -> Rat {
        self.bracket(a, b)
            .iter()
            .find(|(idx, _)| *idx == g)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rat::zero)
    }

    /// The matrix of `ad(x_a)` in the ordered basis (column `b` holds
    /// the coordinates of `[x_a, x_b]`).
    pub fn ad_matrix(&self, a: usize) -> RatMatrix {
        let mut m = RatMatrix::zero(self.dim, self.dim);
        for b in 0..self.dim {
            for (g, c) in self.bracket(a, b) {
                m[(*g, b)] = c.clone();
            }
        }
        m
    }

    /// `exp(t·ad E_ij)` together with its defining-representation partner
    /// `1 + t·E_ij` (1-based `i ≠ j`).  The adjoint series terminates at the
    /// quadratic term because `(ad E_ij)³ = 0` on sl(n).
    pub fn exp_ad_nilpotent(&self, i: usize, j: usize, t: &Rat) -> Result<GroupElement, FamalgError> {
        if i == j || i == 0 || j == 0 || i > self.n || j > self.n {
            return Err(FamalgError::InvalidGenerator { i, j, n: self.n });
        }
        let a = self.index_of_offdiag(i, j);
        let ad = self.ad_matrix(a);
        let ad2 = ad.mul(&ad);
        debug_assert!(ad2.mul(&ad).is_zero(), "(ad E_ij)³ must vanish");
        let adjoint = RatMatrix::identity(self.dim)
            .add(&ad.scale(t))
            .add(&ad2.scale(&(t * t / rat_int(2))));
        let defining = RatMatrix::identity(self.n).add(&self.pi[a].scale(t));
        Ok(GroupElement { adjoint, defining })
    }

    /// Coadjoint action on a coordinate point of the dual space:
    /// `ξ ↦ K · Ad(g) · K⁻¹ · ξ`, the transform that makes the pairing
    /// invariant, `⟨g·ξ, Ad(g)v⟩ = ⟨ξ, v⟩`.
    pub fn coadjoint(&self, g: &GroupElement, xi: &[Rat]) -> Vec<Rat> {
        let v = self.killing_inv.mat_vec(xi);
        let v = g.adjoint.mat_vec(&v);
        self.killing.mat_vec(&v)
    }

    /// Completeness identity of the basis under the trace form:
    ///
    /// ```text
    /// Σ_{α,β} K^{αβ} (π_α)_{ab} (π_β)_{cd} = δ_{ad} δ_{cb} − δ_{ab} δ_{cd} / n
    /// ```
    ///
    /// for all index quadruples — the coordinate form of the statement that
    /// `Σ K^{αβ} π_α ⊗ π_β` is the traceless projector.
    pub fn projector_identity_check(&self) -> bool {
        let n = self.n;
        let dim = self.dim;
        let inv_n = rat(1, n as i64);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        let mut lhs = Rat::zero();
                        for al in 0..dim {
                            for be in 0..dim {
                                let k = &self.killing_inv[(al, be)];
                                if k.is_zero() {
                                    continue;
                                }
                                let x = &self.pi[al][(a, b)];
                                if x.is_zero() {
                                    continue;
                                }
                                let y = &self.pi[be][(c, d)];
                                if y.is_zero() {
                                    continue;
                                }
                                lhs += k * x * y;
                            }
                        }
                        let mut rhs = Rat::zero();
                        if a == d && c == b {
                            rhs += Rat::one();
                        }
                        if a == b && c == d {
                            rhs -= &inv_n;
                        }
                        if lhs != rhs {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Jacobi identity on all basis triples, computed from the bracket table.
    pub fn jacobi_check(&self) -> bool {
        let dim = self.dim;
        let mut acc = vec![Rat::zero(); dim];
        for a in 0..dim {
            for b in 0..dim {
                for c in 0..dim {
                    for v in acc.iter_mut() {
                        *v = Rat::zero();
                    }
                    self.double_bracket(a, b, c, &mut acc);
                    self.double_bracket(b, c, a, &mut acc);
                    self.double_bracket(c, a, b, &mut acc);
                    if acc.iter().any(|v| !v.is_zero()) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Adds the coordinates of `[[x_a, x_b], x_c]` into `acc`.
    fn double_bracket(&self, a: usize, b: usize, c: usize, acc: &mut [Rat]) {
        for (g, coeff) in self.bracket(a, b) {
            for (h, coeff2) in self.bracket(*g, c) {
                acc[*h] += coeff * coeff2;
            }
        }
    }
}

/// A generic group element: a short product of one-parameter unipotents with
/// small random parameters.
pub fn random_group_element(lie: &LieData, rng: &mut impl Rng) -> GroupElement {
    let mut g = GroupElement::identity(lie);
    let factors = rng.gen_range(2..=3);
    for _ in 0..factors {
        let i = rng.gen_range(1..=lie.n);
        let mut j = rng.gen_range(1..=lie.n);
        while j == i {
            j = rng.gen_range(1..=lie.n);
        }
        let mut t = 0i64;
        while t == 0 {
            t = rng.gen_range(-2..=2);
        }
        let f = lie
            .exp_ad_nilpotent(i, j, &rat_int(t))
            .expect("indices are valid by construction");
        g = g.compose(&f);
    }
    g
}

/// A random integer coordinate point with entries in `[−bound, bound]`.
pub fn random_point(dim: usize, bound: i64, rng: &mut impl Rng) -> Vec<Rat> {
    (0..dim).map(|_| rat_int(rng.gen_range(-bound..=bound))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn build_rejects_small_n() {
        assert!(LieData::build(0).is_err());
        assert!(LieData::build(1).is_err());
        assert!(LieData::build(2).is_ok());
    }

    #[test]
    fn sl2_trace_form() {
        let lie = LieData::build(2).unwrap();
        // Basis order: E(1,2), E(2,1), H(1).
        let e12 = lie.index_of_offdiag(1, 2);
        let e21 = lie.index_of_offdiag(2, 1);
        let h = lie.index_of_diag(1);
        assert_eq!(lie.killing[(e12, e21)], rat_int(1));
        assert_eq!(lie.killing[(e21, e12)], rat_int(1));
        assert_eq!(lie.killing[(h, h)], rat_int(2));
        assert_eq!(lie.killing[(e12, e12)], rat_int(0));
        assert_eq!(lie.killing[(e12, h)], rat_int(0));
    }

    #[test]
    fn cartan_trace_form_band() {
        let lie = LieData::build(4).unwrap();
        for i in 1usize..4 {
            for j in 1usize..4 {
                let expected = if i == j {
                    rat_int(2)
                } else if i.abs_diff(j) == 1 {
                    rat_int(-1)
                } else {
                    rat_int(0)
                };
                assert_eq!(lie.killing[(lie.index_of_diag(i), lie.index_of_diag(j))], expected);
            }
        }
    }

    #[test]
    fn expand_round_trips() {
        let lie = LieData::build(3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10 {
            let coords = random_point(lie.dim, 5, &mut rng);
            let m = lie.to_matrix(&coords);
            assert_eq!(lie.expand(&m), coords);
        }
    }

    #[test]
    fn sl2_exponential_action() {
        // exp(ad E_12) E_21 = E_21 + H_1 − E_12 at t = 1.
        let lie = LieData::build(2).unwrap();
        let g = lie.exp_ad_nilpotent(1, 2, &rat_int(1)).unwrap();
        let e21 = lie.index_of_offdiag(2, 1);
        let mut coords = vec![Rat::zero(); lie.dim];
        coords[e21] = Rat::one();
        let moved = g.adjoint.mat_vec(&coords);
        assert_eq!(moved[lie.index_of_offdiag(1, 2)], rat_int(-1));
        assert_eq!(moved[e21], rat_int(1));
        assert_eq!(moved[lie.index_of_diag(1)], rat_int(1));
    }

    #[test]
    fn exponential_rejects_diagonal_pairs() {
        let lie = LieData::build(3).unwrap();
        assert!(lie.exp_ad_nilpotent(2, 2, &rat_int(1)).is_err());
        assert!(lie.exp_ad_nilpotent(0, 1, &rat_int(1)).is_err());
        assert!(lie.exp_ad_nilpotent(1, 4, &rat_int(1)).is_err());
    }

    #[test]
    fn adjoint_matches_conjugation() {
        // Ad(g) in coordinates must agree with g·X·g⁻¹ in matrices.
        for n in 2..=4 {
            let lie = LieData::build(n).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(7 + n as u64);
            let g = random_group_element(&lie, &mut rng);
            let ginv = g.defining.inverse().expect("unipotent products are invertible");
            for b in 0..lie.dim {
                let conj = g.defining.mul(&lie.pi[b]).mul(&ginv);
                let direct = lie.expand(&conj);
                let mut coords = vec![Rat::zero(); lie.dim];
                coords[b] = Rat::one();
                assert_eq!(g.adjoint.mat_vec(&coords), direct, "n = {n}, basis index {b}");
            }
        }
    }

    #[test]
    fn group_elements_preserve_form_and_volume() {
        for n in 2..=4 {
            let lie = LieData::build(n).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(100 + n as u64);
            for _ in 0..3 {
                let g = random_group_element(&lie, &mut rng);
                assert!(g.preserves_form(&lie));
                assert_eq!(g.defining.det(), rat_int(1));
            }
        }
    }

    #[test]
    fn coadjoint_preserves_pairing() {
        let lie = LieData::build(3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..5 {
            let g = random_group_element(&lie, &mut rng);
            let xi = random_point(lie.dim, 9, &mut rng);
            let v = random_point(lie.dim, 9, &mut rng);
            let xi2 = lie.coadjoint(&g, &xi);
            let gv = g.adjoint.mat_vec(&v);
            let lhs: Rat = xi2.iter().zip(&gv).map(|(a, b)| a * b).sum();
            let rhs: Rat = xi.iter().zip(&v).map(|(a, b)| a * b).sum();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn projector_identity_small_n() {
        for n in 2..=4 {
            let lie = LieData::build(n).unwrap();
            assert!(lie.projector_identity_check(), "n = {n}");
        }
    }

    #[test]
    fn jacobi_small_n() {
        for n in 2..=3 {
            let lie = LieData::build(n).unwrap();
            assert!(lie.jacobi_check(), "n = {n}");
        }
    }
}
