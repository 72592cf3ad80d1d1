//! Monomial transversal and randomized exact rank certificates.
//!
//! The family algebra is a free module of rank `2n² − 3n + 1` over the
//! invariant ring.  This module enumerates a deterministic monomial
//! transversal `L^k S^m R^l` of that rank, certifies the linear independence
//! of the chosen monomials by evaluating each one at random small-integer
//! points and computing the exact rank of the stacked coordinate vectors,
//! and provides the symmetrized-power witness: `symmetrize((L+R)^m)` has a
//! nonzero `c_{m+2}` component, so no monic polynomial in `L + R` of degree
//! below `n − 1` with invariant coefficients can vanish.
//!
//! The certificate is one-sided: full rank at the sampled points proves the
//! evaluations are linearly independent over the rationals, which implies
//! independence over the invariant ring.  A reported deficiency at a single
//! point is evidence of a genuine dependence (the expected outcome for the
//! reducible monomials outside the transversal); stacking several points
//! destroys dependences whose coefficients are non-constant invariants, so
//! dependence tests run at one point while full-rank certification stacks
//! points and seeds.

use crate::casimir::compositions;
use crate::family::{ElementBuilder, Family, FamilyElement, symmetrize};
use crate::lie::random_point;
use crate::poly::Poly;
use crate::rat::{Rat, RatMatrix};
use crate::report::{RankReport, SCHEMA_VERSION};
use crate::FamalgError;
use num::{BigInt, Integer, One, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::fmt;

/// One monomial `L^k S^s R^l` of the transversal (`s` is 0 or 1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct MonomialIndex {
    pub k: usize,
    pub s: usize,
    pub l: usize,
}

impl MonomialIndex {
    pub fn new(k: usize, s: usize, l: usize) -> Self {
        assert!(s <= 1, "S exponent is 0 or 1");
        MonomialIndex { k, s, l }
    }

    /// Total degree as a polynomial matrix entry (`S` has degree 2).
    pub fn degree(&self) -> usize {
        self.k + 2 * self.s + self.l
    }
}

impl fmt::Display for MonomialIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 0 && self.s == 0 && self.l == 0 {
            return write!(f, "1");
        }
        let mut s = String::new();
        let power = |sym: &str, e: usize| match e {
            0 => String::new(),
            1 => sym.to_string(),
            _ => format!("{sym}^{e}"),
        };
        s.push_str(&power("L", self.k));
        if self.s == 1 {
            s.push('S');
        }
        s.push_str(&power("R", self.l));
        write!(f, "{s}")
    }
}

/// The monomial dropped from the pure `L^k R^l` grid in total degree `d`.
///
/// One pure monomial per degree `n−1 ≤ d ≤ 2n−2` is redundant over the
/// invariant ring (the power-sum relation and its products with `L + R`
/// supply one reduction per degree).  Which representative to drop is a
/// convention; this artifact drops `R^{n−1}` in degree `n − 1` and the
/// balanced monomial `L^⌊d/2⌋ R^⌈d/2⌉` in degrees `n ≤ d ≤ 2n−2`, the
/// transversal frozen in the unit tests below.
fn dropped_pure_monomial(n: usize, d: usize) -> MonomialIndex {
    debug_assert!((n - 1..=2 * n - 2).contains(&d));
    if d == n - 1 {
        MonomialIndex::new(0, 0, n - 1)
    } else {
        MonomialIndex::new(d / 2, 0, d - d / 2)
    }
}

/// The deterministic monomial transversal of size `2n² − 3n + 1`.
///
/// Contents: `L^k R^l` with `0 ≤ k, l ≤ n−1` minus one monomial in each
/// total degree from `n−1` to `2n−2` (see [`dropped_pure_monomial`]), plus
/// `L^k S R^l` with `0 ≤ k, l ≤ n−2`.  Ordering: ascending total degree;
/// within a degree, pure monomials before `S`-monomials; within each block,
/// descending power of `L`.
pub fn monomial_basis(n: usize) -> Result<Vec<MonomialIndex>, FamalgError> {
    if n < 2 {
        return Err(FamalgError::InvalidDimension(n));
    }
    let mut out = Vec::with_capacity(2 * n * n - 3 * n + 1);
    for d in 0..=2 * n - 2 {
        let drop = if d >= n - 1 { Some(dropped_pure_monomial(n, d)) } else { None };
        // Pure monomials L^k R^{d−k}, k descending.
        for k in (0..=d.min(n - 1)).rev() {
            let l = d - k;
            if l > n - 1 {
                continue;
            }
            let mi = MonomialIndex::new(k, 0, l);
            if Some(mi) != drop {
                out.push(mi);
            }
        }
        // S-monomials L^k S R^{d−2−k}, k descending.
        if d >= 2 {
            for k in (0..=(d - 2).min(n - 2)).rev() {
                let l = d - 2 - k;
                if l > n - 2 {
                    continue;
                }
                out.push(MonomialIndex::new(k, 1, l));
            }
        }
    }
    debug_assert_eq!(out.len(), 2 * n * n - 3 * n + 1);
    Ok(out)
}

/// Monomials outside the transversal, each reducible against the basis.
///
/// Covers the dropped pure monomials of every degree and the out-of-range
/// `S`-monomials `L^{n−1}S`, `S R^{n−1}`, and `L^{n−1}S R`.  Evaluated at a
/// single point, each one lies in the span of the basis evaluations, so
/// adjoining any of them must leave the certified rank unchanged.
pub fn reducible_monomials(n: usize) -> Vec<MonomialIndex> {
    let mut out: Vec<MonomialIndex> =
        (n - 1..=2 * n - 2).map(|d| dropped_pure_monomial(n, d)).collect();
    out.push(MonomialIndex::new(n - 1, 1, 0));
    out.push(MonomialIndex::new(0, 1, n - 1));
    out.push(MonomialIndex::new(n - 1, 1, 1));
    out
}

/// The monomial as an explicit polynomial matrix (product of generator
/// powers in the order `L^k · S^s · R^l`).
pub fn monomial_element(b: &mut ElementBuilder<'_>, mi: MonomialIndex) -> FamilyElement {
    if mi.s == 1 {
        b.word_lsr(mi.k, mi.l)
    } else {
        let (lp, rp) = b.lr(mi.k, mi.l);
        lp.mul(rp)
    }
}

// ---------------------------------------------------------------------------
// Rank certificates
// ---------------------------------------------------------------------------

/// Randomized exact rank certificate for a set of monomials.
///
/// Draws `num_points` points with integer coordinates in `[−20, 20]` from a
/// seeded generator, evaluates every monomial at every point (evaluation is
/// a ring homomorphism, so a monomial evaluates to the product of its
/// evaluated factors), flattens each evaluation to a vector of length
/// `(n²−1)²`, concatenates across points, and computes the rank of the
/// stacked rows.  Rank is first computed modulo a random 62-bit prime
/// (derived from the same seed); a full modular rank already certifies full
/// rational rank, since the modular rank can only be lower.  Any deficiency
/// escalates to exact rational elimination, and the `exact` flag in the
/// report records whether that fallback ran.
pub fn rank_certificate(
    fam: &Family,
    monomials: &[MonomialIndex],
    num_points: usize,
    seed: u64,
) -> RankReport {
    assert!(num_points >= 1, "at least one evaluation point");
    let n = fam.n();
    let dim = fam.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points: Vec<Vec<Rat>> =
        (0..num_points).map(|_| random_point(dim, 20, &mut rng)).collect();
    let prime = random_prime_62(&mut rng);

    // Per point, evaluate the generators once and build all monomial rows by
    // numeric matrix products.
    let chunks: Vec<Vec<Vec<Rat>>> = points
        .par_iter()
        .map(|xi| {
            let l = fam.l.evaluate(xi);
            let r = fam.r.evaluate(xi);
            let s = fam.s.evaluate(xi);
            let lp = matrix_powers(&l, n);
            let rp = matrix_powers(&r, n);
            monomials
                .iter()
                .map(|mi| {
                    let mut m = lp[mi.k].clone();
                    if mi.s == 1 {
                        m = m.mul(&s);
                    }
                    m = m.mul(&rp[mi.l]);
                    flatten(&m)
                })
                .collect()
        })
        .collect();
    let rows: Vec<Vec<Rat>> = (0..monomials.len())
        .map(|i| chunks.iter().flat_map(|c| c[i].iter().cloned()).collect())
        .collect();

    let expected = 2 * n * n - 3 * n + 1;
    let modular = modular_rows(&rows, prime)
        .map(|m| modular_rank(m, prime))
        .filter(|&r| r == rows.len());
    let (rank, exact) = match modular {
        Some(r) => (r, false),
        None => (rational_rank(rows), true),
    };

    RankReport {
        schema: SCHEMA_VERSION,
        command: "independence".to_string(),
        n,
        expected,
        rank,
        points: num_points,
        seed,
        exact,
        monomials: monomials.iter().map(|m| m.to_string()).collect(),
        note: Some(format!(
            "one-sided certificate at {num_points} random point(s), modulus {prime}: full rank \
             proves independence of the sampled evaluations exactly; rerun with independent \
             seeds to strengthen the probabilistic guarantee over the invariant ring"
        )),
    }
}

fn matrix_powers(m: &RatMatrix, max: usize) -> Vec<RatMatrix> {
    let mut out = vec![RatMatrix::identity(m.rows())];
    for k in 1..=max {
        out.push(out[k - 1].mul(m));
    }
    out
}

fn flatten(m: &RatMatrix) -> Vec<Rat> {
    let mut v = Vec::with_capacity(m.rows() * m.cols());
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            v.push(m[(i, j)].clone());
        }
    }
    v
}

/// Exact rank by rational Gaussian elimination (single-threaded).
pub fn rational_rank(mut rows: Vec<Vec<Rat>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut rank = 0;
    let mut col = 0;
    while rank < rows.len() && col < cols {
        let pivot = (rank..rows.len()).find(|&i| !rows[i][col].is_zero());
        let Some(p) = pivot else {
            col += 1;
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].recip();
        for j in col..cols {
            let v = &rows[rank][j] * &inv;
            rows[rank][j] = v;
        }
        for i in 0..rows.len() {
            if i != rank && !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                for j in col..cols {
                    let v = &rows[i][j] - &rows[rank][j] * &f;
                    rows[i][j] = v;
                }
            }
        }
        rank += 1;
        col += 1;
    }
    rank
}

/// Reduce rational rows modulo `p`; `None` if any denominator vanishes mod
/// `p` (then only the exact path is meaningful).
fn modular_rows(rows: &[Vec<Rat>], p: u64) -> Option<Vec<Vec<u64>>> {
    rows.iter()
        .map(|row| row.iter().map(|r| rat_mod(r, p)).collect())
        .collect()
}

fn rat_mod(r: &Rat, p: u64) -> Option<u64> {
    let pb = BigInt::from(p);
    let num = r.numer().mod_floor(&pb).to_u64().expect("reduced below p");
    let den = r.denom().mod_floor(&pb).to_u64().expect("reduced below p");
    if den == 0 {
        return None;
    }
    Some(mul_mod(num, pow_mod(den, p - 2, p), p))
}

/// Rank over `F_p` by in-place elimination.
fn modular_rank(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut rank = 0;
    let mut col = 0;
    while rank < rows.len() && col < cols {
        let pivot = (rank..rows.len()).find(|&i| rows[i][col] != 0);
        let Some(piv) = pivot else {
            col += 1;
            continue;
        };
        rows.swap(rank, piv);
        let inv = pow_mod(rows[rank][col], p - 2, p);
        for j in col..cols {
            rows[rank][j] = mul_mod(rows[rank][j], inv, p);
        }
        for i in rank + 1..rows.len() {
            if rows[i][col] != 0 {
                let f = rows[i][col];
                for j in col..cols {
                    let sub = mul_mod(rows[rank][j], f, p);
                    rows[i][j] = (rows[i][j] + p - sub) % p;
                }
            }
        }
        rank += 1;
        col += 1;
    }
    rank
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc: u64 = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin, valid for all 64-bit inputs with this
/// witness set.
fn is_prime_u64(x: u64) -> bool {
    if x < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if x == q {
            return true;
        }
        if x % q == 0 {
            return false;
        }
    }
    let mut d = x - 1;
    let mut s = 0u32;
    while d & 1 == 0 {
        d >>= 1;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut y = pow_mod(a, d, x);
        if y == 1 || y == x - 1 {
            continue;
        }
        for _ in 1..s {
            y = mul_mod(y, y, x);
            if y == x - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A random prime in `[2^61, 2^62)`.
fn random_prime_62(rng: &mut ChaCha8Rng) -> u64 {
    use rand::Rng;
    loop {
        let mut candidate: u64 = rng.gen_range(1u64 << 61..1u64 << 62) | 1;
        while candidate < 1u64 << 62 {
            if is_prime_u64(candidate) {
                return candidate;
            }
            candidate += 2;
        }
    }
}

// ---------------------------------------------------------------------------
// Symmetrized-power witness
// ---------------------------------------------------------------------------

/// Outcome of the symmetrized-power witness at one `m`.
#[derive(Clone, Debug)]
pub struct WitnessOutcome {
    pub m: usize,
    /// `symmetrize((L+R)^m)`, an invariant of degree `m + 2`.
    pub value: Poly,
    /// Expansion of `value` over products of Casimir generators: pairs of a
    /// partition of `m + 2` into parts `≥ 2` and the exact coefficient.
    pub expansion: Vec<(Vec<usize>, Rat)>,
    /// Coefficient of the single-part monomial `c_{m+2}`.
    pub leading: Rat,
}

/// Computes `symmetrize((L+R)^m)` and expands it exactly over the degree
/// `m + 2` monomials in the Casimir generators `c_2, …, c_n`.
///
/// The witness is the coefficient of `c_{m+2}` itself: it is nonzero for
/// every `m < n − 1`, which rules out any vanishing monic polynomial in
/// `L + R` of degree below `n − 1` with invariant coefficients, because the
/// symmetrization of such a polynomial would express `c_{m+2}` through
/// products of lower Casimir generators.
pub fn symmetrized_power_witness(
    fam: &Family,
    m: usize,
) -> Result<WitnessOutcome, FamalgError> {
    let n = fam.n();
    if m + 1 >= n {
        return Err(FamalgError::InvalidConfig(format!(
            "witness degree m = {m} requires m < n - 1 = {}",
            n - 1
        )));
    }
    let value = symmetrize(fam, &fam.l.add(&fam.r).pow(m as u32));
    let degree = m + 2;
    let parts = casimir_partitions(degree, n);
    let candidates: Vec<Poly> = parts
        .iter()
        .map(|lambda| {
            let mut p = Poly::one(fam.dim());
            for &part in lambda {
                p = p.mul(fam.cas.c(part));
            }
            p
        })
        .collect();
    let coeffs = solve_linear_combination(&candidates, &value).ok_or_else(|| {
        FamalgError::InvalidConfig(format!(
            "degree-{degree} invariant not in the span of Casimir monomials"
        ))
    })?;
    let leading = parts
        .iter()
        .zip(&coeffs)
        .find(|(lambda, _)| lambda.len() == 1)
        .map(|(_, c)| c.clone())
        .unwrap_or_else(Rat::zero);
    let expansion = parts.into_iter().zip(coeffs).collect();
    Ok(WitnessOutcome { m, value, expansion, leading })
}

/// Partitions of `k` into parts `2 ≤ part ≤ max_part`, each as a
/// nonincreasing list, in deterministic order.
fn casimir_partitions(k: usize, max_part: usize) -> Vec<Vec<usize>> {
    compositions(k as u32, 2)
        .into_iter()
        .filter(|c| c.windows(2).all(|w| w[0] >= w[1]) && c.iter().all(|&p| p as usize <= max_part))
        .map(|c| c.into_iter().map(|p| p as usize).collect())
        .collect()
}

/// Exact solution of `Σ aⱼ·candⱼ = target` in the coefficient space of the
/// polynomials, or `None` when the target is outside the span.  The
/// candidates must be linearly independent (Casimir monomials of one degree
/// are).
fn solve_linear_combination(cands: &[Poly], target: &Poly) -> Option<Vec<Rat>> {
    use std::collections::BTreeMap;
    let ncols = cands.len();
    let mut rows: BTreeMap<Vec<u8>, (Vec<Rat>, Rat)> = BTreeMap::new();
    for (j, cand) in cands.iter().enumerate() {
        for (exps, coeff) in cand.terms() {
            rows.entry(exps.to_vec())
                .or_insert_with(|| (vec![Rat::zero(); ncols], Rat::zero()))
                .0[j] = coeff.clone();
        }
    }
    for (exps, coeff) in target.terms() {
        rows.entry(exps.to_vec())
            .or_insert_with(|| (vec![Rat::zero(); ncols], Rat::zero()))
            .1 = coeff.clone();
    }
    let mut mat: Vec<(Vec<Rat>, Rat)> = rows.into_values().collect();
    let mut solution = vec![Rat::zero(); ncols];
    let mut rank = 0usize;
    for col in 0..ncols {
        let Some(p) = (rank..mat.len()).find(|&i| !mat[i].0[col].is_zero()) else {
            // Candidate never independent from the earlier ones — cannot
            // happen for distinct Casimir monomials of one degree.
            return None;
        };
        mat.swap(rank, p);
        let inv = mat[rank].0[col].recip();
        for j in 0..ncols {
            let v = &mat[rank].0[j] * &inv;
            mat[rank].0[j] = v;
        }
        let v = &mat[rank].1 * &inv;
        mat[rank].1 = v;
        for i in 0..mat.len() {
            if i != rank && !mat[i].0[col].is_zero() {
                let f = mat[i].0[col].clone();
                for j in 0..ncols {
                    let v = &mat[i].0[j] - &mat[rank].0[j] * &f;
                    mat[i].0[j] = v;
                }
                let v = &mat[i].1 - &mat[rank].1 * &f;
                mat[i].1 = v;
            }
        }
        rank += 1;
    }
    // Consistency: every eliminated row must have zero residual.
    for (coeffs, rhs) in mat.iter().skip(rank) {
        debug_assert!(coeffs.iter().all(|c| c.is_zero()));
        if !rhs.is_zero() {
            return None;
        }
    }
    for (i, (coeffs, rhs)) in mat.iter().take(rank).enumerate() {
        let col = coeffs.iter().position(|c| c.is_one());
        debug_assert_eq!(col, Some(i));
        solution[i] = rhs.clone();
    }
    // Exact verification, independent of the elimination bookkeeping.
    let mut recon = Poly::zero(target.dim());
    for (cand, a) in cands.iter().zip(&solution) {
        recon = recon.add(&cand.scale(a));
    }
    if recon == *target {
        Some(solution)
    } else {
        None
    }
}
