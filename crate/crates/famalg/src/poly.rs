//! Sparse multivariate polynomials over exact rationals, and dense matrices
//! of them.
//!
//! A polynomial in variables `x1..x_dim` is a vector of terms kept in
//! graded-lexicographic order with the leading term first and no zero
//! coefficients, so structural equality is polynomial equality.  All family
//! algebra identities in this crate reduce to equality of such matrices of
//! polynomials.
//!
//! Exact rational arithmetic is the source of truth everywhere; the modular
//! evaluation fast path (`evaluate_mod`) exists only to accelerate rank
//! certificates, which re-verify any deficient answer exactly.

use crate::rat::{is_negative, Rat, RatMatrix};
use num::{BigInt, Integer, One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
struct Term {
    deg: u32,
    exps: Box<[u8]>,
    coeff: Rat,
}

fn monomial_cmp(adeg: u32, aexps: &[u8], bdeg: u32, bexps: &[u8]) -> Ordering {
    adeg.cmp(&bdeg).then_with(|| aexps.cmp(bexps))
}

/// Sparse polynomial in `dim` variables with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    dim: usize,
    terms: Vec<Term>,
}

impl Poly {
    pub fn zero(dim: usize) -> Self {
        Poly { dim, terms: Vec::new() }
    }

    pub fn constant(dim: usize, c: Rat) -> Self {
        if c.is_zero() {
            return Poly::zero(dim);
        }
        Poly { dim, terms: vec![Term { deg: 0, exps: vec![0; dim].into_boxed_slice(), coeff: c }] }
    }

    pub fn one(dim: usize) -> Self {
        Poly::constant(dim, Rat::one())
    }

    /// The variable `x_{var+1}` (0-based index).
    pub fn variable(dim: usize, var: usize) -> Self {
        assert!(var < dim, "variable index out of range");
        let mut exps = vec![0u8; dim];
        exps[var] = 1;
        Poly { dim, terms: vec![Term { deg: 1, exps: exps.into_boxed_slice(), coeff: Rat::one() }] }
    }

    /// Builds a polynomial from raw `(exponents, coefficient)` pairs,
    /// combining duplicates and dropping zeros.
    pub fn from_terms(dim: usize, raw: impl IntoIterator<Item = (Vec<u8>, Rat)>) -> Self {
        let mut map: HashMap<Box<[u8]>, Rat> = HashMap::new();
        for (exps, coeff) in raw {
            assert_eq!(exps.len(), dim, "exponent vector length mismatch");
            let entry = map.entry(exps.into_boxed_slice()).or_insert_with(Rat::zero);
            *entry += coeff;
        }
        Poly::from_map(dim, map)
    }

    fn from_map(dim: usize, map: HashMap<Box<[u8]>, Rat>) -> Self {
        let mut terms: Vec<Term> = map
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(exps, coeff)| Term { deg: exps.iter().map(|&e| e as u32).sum(), exps, coeff })
            .collect();
        terms.sort_unstable_by(|a, b| monomial_cmp(b.deg, &b.exps, a.deg, &a.exps));
        Poly { dim, terms }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.first().map(|t| t.deg)
    }

    /// Iterates `(exponents, coefficient)` in graded-lex descending order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u8], &Rat)> {
        self.terms.iter().map(|t| (&*t.exps, &t.coeff))
    }

    /// The coefficient of the given monomial (zero if absent).
    pub fn coefficient(&self, exps: &[u8]) -> Rat {
        assert_eq!(exps.len(), self.dim, "exponent vector length mismatch");
        let deg: u32 = exps.iter().map(|&e| e as u32).sum();
        self.terms
            .binary_search_by(|t| monomial_cmp(deg, exps, t.deg, &t.exps))
            .map(|i| self.terms[i].coeff.clone())
            .unwrap_or_else(|_| Rat::zero())
    }

    /// The value of a constant polynomial; `None` if it has positive degree.
    pub fn constant_value(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 if self.terms[0].deg == 0 => Some(self.terms[0].coeff.clone()),
            _ => None,
        }
    }

    pub fn add(&self, rhs: &Poly) -> Poly {
        assert_eq!(self.dim, rhs.dim, "variable count mismatch");
        let mut terms = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < rhs.terms.len() {
            let a = &self.terms[i];
            let b = &rhs.terms[j];
            match monomial_cmp(b.deg, &b.exps, a.deg, &a.exps) {
                Ordering::Less => {
                    terms.push(a.clone());
                    i += 1;
                }
                Ordering::Greater => {
                    terms.push(b.clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &a.coeff + &b.coeff;
                    if !c.is_zero() {
                        terms.push(Term { deg: a.deg, exps: a.exps.clone(), coeff: c });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend_from_slice(&self.terms[i..]);
        terms.extend_from_slice(&rhs.terms[j..]);
        Poly { dim: self.dim, terms }
    }

    pub fn neg(&self) -> Poly {
        Poly {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|t| Term { deg: t.deg, exps: t.exps.clone(), coeff: -t.coeff.clone() })
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Poly) -> Poly {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.dim);
        }
        Poly {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|t| Term { deg: t.deg, exps: t.exps.clone(), coeff: &t.coeff * c })
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &Poly) -> Poly {
        Poly::sum_of_products(self.dim, [(self, rhs)])
    }

    /// `Σ_k aₖ·bₖ` accumulated in a single pass — the inner loop of every
    /// matrix product, kept allocation-light by sharing one accumulator map.
    pub fn sum_of_products<'a>(
        dim: usize,
        pairs: impl IntoIterator<Item = (&'a Poly, &'a Poly)>,
    ) -> Poly {
        let mut map: HashMap<Box<[u8]>, Rat> = HashMap::new();
        let mut exps_buf = vec![0u8; dim];
        for (a, b) in pairs {
            assert_eq!(a.dim, dim, "variable count mismatch");
            assert_eq!(b.dim, dim, "variable count mismatch");
            let (small, large) = if a.terms.len() <= b.terms.len() { (a, b) } else { (b, a) };
            for ta in &small.terms {
                for tb in &large.terms {
                    for (k, e) in exps_buf.iter_mut().enumerate() {
                        *e = ta.exps[k] + tb.exps[k];
                    }
                    let coeff = &ta.coeff * &tb.coeff;
                    match map.get_mut(exps_buf.as_slice()) {
                        Some(c) => *c += coeff,
                        None => {
                            map.insert(exps_buf.clone().into_boxed_slice(), coeff);
                        }
                    }
                }
            }
        }
        Poly::from_map(dim, map)
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one(self.dim);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Partial derivative with respect to `x_{var+1}` (0-based index).
    pub fn partial(&self, var: usize) -> Poly {
        assert!(var < self.dim, "variable index out of range");
        let terms = self
            .terms
            .iter()
            .filter(|t| t.exps[var] > 0)
            .map(|t| {
                let mut exps = t.exps.clone();
                let e = exps[var];
                exps[var] = e - 1;
                Term {
                    deg: t.deg - 1,
                    exps,
                    coeff: &t.coeff * Rat::from_integer(BigInt::from(e)),
                }
            })
            .collect();
        // Dropping one from each exponent preserves graded-lex order within
        // the surviving terms, so no re-sort is needed.
        Poly { dim: self.dim, terms }
    }

    pub fn evaluate(&self, xi: &[Rat]) -> Rat {
        let tables = pow_tables(self.dim, std::iter::once(self), xi);
        self.evaluate_with_tables(&tables)
    }

    pub(crate) fn evaluate_with_tables(&self, tables: &[Vec<Rat>]) -> Rat {
        let mut acc = Rat::zero();
        for t in &self.terms {
            let mut v = t.coeff.clone();
            for (i, &e) in t.exps.iter().enumerate() {
                if e > 0 {
                    v *= &tables[i][e as usize];
                }
            }
            acc += v;
        }
        acc
    }

    /// Evaluates at an integer point modulo the prime `p`.  Returns `None`
    /// when some coefficient denominator vanishes mod `p`, in which case the
    /// caller must fall back to exact arithmetic.
    pub fn evaluate_mod(&self, xi: &[u64], p: u64) -> Option<u64> {
        assert_eq!(xi.len(), self.dim, "point length mismatch");
        let bp = BigInt::from(p);
        let mut acc: u64 = 0;
        for t in &self.terms {
            let num = t.coeff.numer().mod_floor(&bp).to_u64().expect("reduced value fits in u64");
            let den = t.coeff.denom().mod_floor(&bp).to_u64().expect("reduced value fits in u64");
            if den == 0 {
                return None;
            }
            let mut v = mul_mod(num, pow_mod(den, p - 2, p), p);
            for (i, &e) in t.exps.iter().enumerate() {
                if e > 0 {
                    v = mul_mod(v, pow_mod(xi[i] % p, e as u64, p), p);
                }
            }
            acc = (acc + v) % p;
        }
        Some(acc)
    }
}

/// Power tables `tables[i][e] = xi[i]^e` sized by the largest exponent of
/// each variable across `polys`.
pub(crate) fn pow_tables<'a>(
    dim: usize,
    polys: impl Iterator<Item = &'a Poly>,
    xi: &[Rat],
) -> Vec<Vec<Rat>> {
    assert_eq!(xi.len(), dim, "point length mismatch");
    let mut maxe = vec![0u8; dim];
    for p in polys {
        for t in &p.terms {
            for (i, &e) in t.exps.iter().enumerate() {
                maxe[i] = maxe[i].max(e);
            }
        }
    }
    (0..dim)
        .map(|i| {
            let mut row = Vec::with_capacity(maxe[i] as usize + 1);
            row.push(Rat::one());
            for e in 1..=maxe[i] as usize {
                let next = &row[e - 1] * &xi[i];
                row.push(next);
            }
            row
        })
        .collect()
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
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

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, t) in self.terms.iter().enumerate() {
            let neg = is_negative(&t.coeff);
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = t.coeff.abs();
            let vars: Vec<String> = t
                .exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{}", i + 1, e)
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{}", abs)?;
            } else if abs.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{}*{}", abs, vars.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Dense matrix of polynomials; the container for both the `n×n` matrix `F`
/// and `dim×dim` family elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    vars: usize,
    data: Vec<Poly>,
}

impl PolyMatrix {
    pub fn zero(rows: usize, cols: usize, vars: usize) -> Self {
        PolyMatrix { rows, cols, vars, data: vec![Poly::zero(vars); rows * cols] }
    }

    pub fn identity(size: usize, vars: usize) -> Self {
        let mut m = PolyMatrix::zero(size, size, vars);
        for i in 0..size {
            m.set(i, i, Poly::one(vars));
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, vars: usize, mut f: impl FnMut(usize, usize) -> Poly) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                let p = f(r, c);
                assert_eq!(p.dim(), vars, "variable count mismatch");
                data.push(p);
            }
        }
        PolyMatrix { rows, cols, vars, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn get(&self, r: usize, c: usize) -> &Poly {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, p: Poly) {
        assert_eq!(p.dim(), self.vars, "variable count mismatch");
        self.data[r * self.cols + c] = p;
    }

    pub fn add(&self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix shape mismatch");
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            vars: self.vars,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix shape mismatch");
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            vars: self.vars,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn neg(&self) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            vars: self.vars,
            data: self.data.iter().map(Poly::neg).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            vars: self.vars,
            data: self.data.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// Entrywise product with a scalar polynomial.
    pub fn scale_poly(&self, s: &Poly) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            vars: self.vars,
            data: self.data.iter().map(|p| p.mul(s)).collect(),
        }
    }

    /// Exact matrix product, parallelized over output entries.
    pub fn mul(&self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix shape mismatch");
        assert_eq!(self.vars, rhs.vars, "variable count mismatch");
        let rows = self.rows;
        let cols = rhs.cols;
        let inner = self.cols;
        let data: Vec<Poly> = (0..rows * cols)
            .into_par_iter()
            .map(|idx| {
                let (r, c) = (idx / cols, idx % cols);
                Poly::sum_of_products(
                    self.vars,
                    (0..inner).map(|k| (self.get(r, k), rhs.get(k, c))),
                )
            })
            .collect();
        PolyMatrix { rows, cols, vars: self.vars, data }
    }

    pub fn pow(&self, k: u32) -> PolyMatrix {
        assert_eq!(self.rows, self.cols, "power of a non-square matrix");
        let mut acc = PolyMatrix::identity(self.rows, self.vars);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn trace(&self) -> Poly {
        assert_eq!(self.rows, self.cols, "trace of a non-square matrix");
        let mut acc = Poly::zero(self.vars);
        for i in 0..self.rows {
            acc = acc.add(self.get(i, i));
        }
        acc
    }

    pub fn transpose(&self) -> PolyMatrix {
        PolyMatrix::from_fn(self.cols, self.rows, self.vars, |r, c| self.get(c, r).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Poly::is_zero)
    }

    /// Maximum total degree over all entries (zero matrix ⇒ 0).
    pub fn max_degree(&self) -> u32 {
        self.data.iter().filter_map(Poly::degree).max().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = &Poly> {
        self.data.iter()
    }

    /// Exact evaluation at a rational point, with power tables shared across
    /// all entries.
    pub fn evaluate(&self, xi: &[Rat]) -> RatMatrix {
        let tables = pow_tables(self.vars, self.data.iter(), xi);
        RatMatrix::from_fn(self.rows, self.cols, |r, c| {
            self.get(r, c).evaluate_with_tables(&tables)
        })
    }

    /// Modular evaluation of every entry; `None` if any entry hits a bad
    /// denominator.
    pub fn evaluate_mod(&self, xi: &[u64], p: u64) -> Option<Vec<u64>> {
        self.data.iter().map(|q| q.evaluate_mod(xi, p)).collect()
    }

    /// Matrix–vector product with a polynomial vector.
    pub fn mat_vec(&self, v: &[Poly]) -> Vec<Poly> {
        assert_eq!(self.cols, v.len(), "matrix/vector shape mismatch");
        (0..self.rows)
            .into_par_iter()
            .map(|r| Poly::sum_of_products(self.vars, (0..self.cols).map(|k| (self.get(r, k), &v[k]))))
            .collect()
    }
}

/// Row-vector–matrix product `vᵀ·M`.
pub fn row_mul(v: &[Poly], m: &PolyMatrix) -> Vec<Poly> {
    assert_eq!(m.rows(), v.len(), "matrix/vector shape mismatch");
    (0..m.cols())
        .into_par_iter()
        .map(|c| Poly::sum_of_products(m.vars(), (0..m.rows()).map(|k| (&v[k], m.get(k, c)))))
        .collect()
}

/// Scalar product `Σ_i a_i·b_i`.
pub fn dot(a: &[Poly], b: &[Poly]) -> Poly {
    assert_eq!(a.len(), b.len(), "vector length mismatch");
    assert!(!a.is_empty(), "dot of empty vectors");
    Poly::sum_of_products(a[0].dim(), a.iter().zip(b.iter()))
}

/// Outer product: the matrix with entries `col_r · row_c`.
pub fn outer(col: &[Poly], row: &[Poly]) -> PolyMatrix {
    assert!(!col.is_empty(), "outer product of empty vectors");
    let vars = col[0].dim();
    let rows = col.len();
    let cols = row.len();
    let data: Vec<Poly> = (0..rows * cols)
        .into_par_iter()
        .map(|idx| col[idx / cols].mul(&row[idx % cols]))
        .collect();
    PolyMatrix { rows, cols, vars, data }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};
    use proptest::prelude::*;

    fn x(dim: usize, i: usize) -> Poly {
        Poly::variable(dim, i)
    }

    #[test]
    fn binomial_square() {
        let p = x(3, 0).add(&x(3, 1));
        let sq = p.mul(&p);
        assert_eq!(sq.num_terms(), 3);
        assert_eq!(sq.coefficient(&[2, 0, 0]), rat_int(1));
        assert_eq!(sq.coefficient(&[1, 1, 0]), rat_int(2));
        assert_eq!(sq.coefficient(&[0, 2, 0]), rat_int(1));
        assert_eq!(sq.coefficient(&[1, 0, 1]), rat_int(0));
    }

    #[test]
    fn leading_term_order() {
        // x1² > x1·x2 > x2² > x1 > 1 in graded lex.
        let p = Poly::from_terms(
            2,
            vec![
                (vec![0, 0], rat_int(1)),
                (vec![1, 0], rat_int(2)),
                (vec![0, 2], rat_int(3)),
                (vec![1, 1], rat_int(4)),
                (vec![2, 0], rat_int(5)),
            ],
        );
        let degs: Vec<Vec<u8>> = p.terms().map(|(e, _)| e.to_vec()).collect();
        assert_eq!(degs, vec![vec![2, 0], vec![1, 1], vec![0, 2], vec![1, 0], vec![0, 0]]);
    }

    #[test]
    fn display_format() {
        let p = Poly::from_terms(
            3,
            vec![
                (vec![2, 0, 1], rat(5, 2)),
                (vec![0, 1, 0], rat_int(-1)),
                (vec![0, 0, 0], rat(1, 3)),
            ],
        );
        assert_eq!(p.to_string(), "5/2*x1^2*x3 - x2 + 1/3");
        assert_eq!(Poly::zero(2).to_string(), "0");
        assert_eq!(x(2, 1).neg().to_string(), "-x2");
    }

    #[test]
    fn partial_derivative() {
        // ∂/∂x1 (x1²x2 + 3x1 + x2) = 2x1x2 + 3.
        let p = Poly::from_terms(
            2,
            vec![
                (vec![2, 1], rat_int(1)),
                (vec![1, 0], rat_int(3)),
                (vec![0, 1], rat_int(1)),
            ],
        );
        let d = p.partial(0);
        assert_eq!(
            d,
            Poly::from_terms(2, vec![(vec![1, 1], rat_int(2)), (vec![0, 0], rat_int(3))])
        );
    }

    #[test]
    fn modular_matches_exact_on_integer_points() {
        let p = Poly::from_terms(
            3,
            vec![
                (vec![2, 1, 0], rat(7, 3)),
                (vec![0, 0, 3], rat_int(-4)),
                (vec![0, 0, 0], rat(1, 2)),
            ],
        );
        let prime: u64 = 1_000_000_007;
        let xi = [3u64, 5, 11];
        let exact = p.evaluate(&[rat_int(3), rat_int(5), rat_int(11)]);
        // exact = a/b with b coprime to prime: compare a·b⁻¹ mod prime.
        let num = exact.numer().mod_floor(&BigInt::from(prime)).to_u64().unwrap();
        let den = exact.denom().mod_floor(&BigInt::from(prime)).to_u64().unwrap();
        let expected = mul_mod(num, pow_mod(den, prime - 2, prime), prime);
        assert_eq!(p.evaluate_mod(&xi, prime), Some(expected));
        // Denominator divisible by the modulus forces the exact fallback.
        assert_eq!(p.evaluate_mod(&[1, 1, 1], 3), None);
    }

    #[test]
    fn matrix_product_and_trace() {
        let dim = 2;
        let a = PolyMatrix::from_fn(2, 2, dim, |r, c| {
            if r == c {
                x(dim, r)
            } else {
                Poly::one(dim)
            }
        });
        let b = a.mul(&a);
        // tr(A²) = x1² + x2² + 2.
        let expected = x(dim, 0)
            .mul(&x(dim, 0))
            .add(&x(dim, 1).mul(&x(dim, 1)))
            .add(&Poly::constant(dim, rat_int(2)));
        assert_eq!(b.trace(), expected);
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn matrix_evaluation_is_a_homomorphism() {
        let dim = 3;
        let a = PolyMatrix::from_fn(3, 3, dim, |r, c| {
            if r == c {
                x(dim, r)
            } else if r < c {
                Poly::one(dim)
            } else {
                Poly::zero(dim)
            }
        });
        let b = a.transpose();
        let xi = [rat_int(2), rat(1, 2), rat_int(-3)];
        assert_eq!(a.mul(&b).evaluate(&xi), a.evaluate(&xi).mul(&b.evaluate(&xi)));
    }

    fn small_poly() -> impl Strategy<Value = Poly> {
        proptest::collection::vec(
            (proptest::collection::vec(0u8..3, 3), -5i64..=5),
            0..5,
        )
        .prop_map(|raw| {
            Poly::from_terms(3, raw.into_iter().map(|(e, c)| (e, rat_int(c))))
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.add(&b).mul(&c), a.mul(&c).add(&b.mul(&c)));
            prop_assert_eq!(a.sub(&a), Poly::zero(3));
        }

        #[test]
        fn leibniz_rule(a in small_poly(), b in small_poly()) {
            let prod = a.mul(&b);
            for v in 0..3 {
                let lhs = prod.partial(v);
                let rhs = a.partial(v).mul(&b).add(&a.mul(&b.partial(v)));
                prop_assert_eq!(lhs, rhs);
            }
        }

        #[test]
        fn evaluation_is_a_ring_map(a in small_poly(), b in small_poly(),
                                    p in -4i64..=4, q in -4i64..=4, r in -4i64..=4) {
            let xi = [rat_int(p), rat_int(q), rat_int(r)];
            prop_assert_eq!(a.mul(&b).evaluate(&xi), a.evaluate(&xi) * b.evaluate(&xi));
            prop_assert_eq!(a.add(&b).evaluate(&xi), a.evaluate(&xi) + b.evaluate(&xi));
        }
    }
}
