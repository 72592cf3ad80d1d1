//! Exact rational scalars and small dense rational matrices.
//!
//! Everything downstream (Killing forms, adjoint-group elements, evaluated
//! family elements, rank certificates) runs on `BigRational`, so no identity
//! is ever checked in floating point.

use num::{BigInt, BigRational, One, Signed, Zero};
use std::fmt;
use std::ops::{Index, IndexMut};

/// Exact rational scalar used throughout the crate.
pub type Rat = BigRational;

/// The integer `p` as an exact rational.
pub fn rat_int(p: i64) -> Rat {
    BigRational::from_integer(BigInt::from(p))
}

/// The fraction `p/q` as an exact rational.
///
/// Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rat {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Dense matrix of exact rationals, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        RatMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entries of row `r`, left to right.
    pub fn row(&self, r: usize) -> &[Rat] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> RatMatrix {
        RatMatrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn add(&self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix shape mismatch");
        RatMatrix::from_fn(self.rows, self.cols, |r, c| &self[(r, c)] + &rhs[(r, c)])
    }

    pub fn sub(&self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix shape mismatch");
        RatMatrix::from_fn(self.rows, self.cols, |r, c| &self[(r, c)] - &rhs[(r, c)])
    }

    pub fn scale(&self, s: &Rat) -> RatMatrix {
        RatMatrix::from_fn(self.rows, self.cols, |r, c| &self[(r, c)] * s)
    }

    pub fn mul(&self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix shape mismatch");
        RatMatrix::from_fn(self.rows, rhs.cols, |r, c| {
            let mut acc = Rat::zero();
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if !a.is_zero() {
                    acc += a * &rhs[(k, c)];
                }
            }
            acc
        })
    }

    pub fn mat_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len(), "matrix/vector shape mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = Rat::zero();
                for k in 0..self.cols {
                    let a = &self[(r, k)];
                    if !a.is_zero() {
                        acc += a * &v[k];
                    }
                }
                acc
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rat::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && self == &RatMatrix::identity(self.rows)
    }

    /// Trace; requires a square matrix.
    pub fn trace(&self) -> Rat {
        assert_eq!(self.rows, self.cols, "trace of a non-square matrix");
        (0..self.rows).map(|i| self[(i, i)].clone()).sum()
    }

    /// Determinant by exact Gaussian elimination; requires a square matrix.
    pub fn det(&self) -> Rat {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rat::one();
        for col in 0..n {
            let pivot = match (col..n).find(|&r| !m[(r, col)].is_zero()) {
                Some(p) => p,
                None => return Rat::zero(),
            };
            if pivot != col {
                for c in 0..n {
                    let tmp = m[(pivot, c)].clone();
                    m[(pivot, c)] = m[(col, c)].clone();
                    m[(col, c)] = tmp;
                }
                det = -det;
            }
            let p = m[(col, col)].clone();
            det *= &p;
            for r in col + 1..n {
                if m[(r, col)].is_zero() {
                    continue;
                }
                let factor = &m[(r, col)] / &p;
                for c in col..n {
                    let delta = &factor * &m[(col, c)];
                    m[(r, c)] = &m[(r, c)] - &delta;
                }
            }
        }
        det
    }

    /// Exact inverse by Gauss–Jordan elimination; `None` if singular.
    pub fn inverse(&self) -> Option<RatMatrix> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = RatMatrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[(r, col)].is_zero())?;
            if pivot != col {
                for c in 0..n {
                    let tmp = a[(pivot, c)].clone();
                    a[(pivot, c)] = a[(col, c)].clone();
                    a[(col, c)] = tmp;
                    let tmp = inv[(pivot, c)].clone();
                    inv[(pivot, c)] = inv[(col, c)].clone();
                    inv[(col, c)] = tmp;
                }
            }
            let p = a[(col, col)].clone();
            for c in 0..n {
                a[(col, c)] = &a[(col, c)] / &p;
                inv[(col, c)] = &inv[(col, c)] / &p;
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let factor = a[(r, col)].clone();
                for c in 0..n {
                    let delta = &factor * &a[(col, c)];
                    a[(r, c)] = &a[(r, c)] - &delta;
                    let delta = &factor * &inv[(col, c)];
                    inv[(r, c)] = &inv[(r, c)] - &delta;
                }
            }
        }
        Some(inv)
    }
}

impl Index<(usize, usize)> for RatMatrix {
    type Output = Rat;
    fn index(&self, (r, c): (usize, usize)) -> &Rat {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rat {
        &mut self.data[r * self.cols + c]
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(r, c)])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Renders a rational in the exact `p/q` form used by all reports
/// (integers render without the `/q` part).
pub fn render_rat(x: &Rat) -> String {
    x.to_string()
}

/// True if `x < 0`; used for sign-aware polynomial rendering.
pub fn is_negative(x: &Rat) -> bool {
    x.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_round_trip() {
        let m = RatMatrix::from_fn(3, 3, |r, c| {
            if r == c {
                rat_int(2)
            } else if r + 1 == c {
                rat_int(1)
            } else {
                rat_int(0)
            }
        });
        let inv = m.inverse().expect("invertible");
        assert!(m.mul(&inv).is_identity());
        assert!(inv.mul(&m).is_identity());
    }

    #[test]
    fn singular_has_no_inverse() {
        let m = RatMatrix::from_fn(2, 2, |_, _| rat_int(1));
        assert!(m.inverse().is_none());
        assert_eq!(m.det(), rat_int(0));
    }

    #[test]
    fn det_of_shear_is_one() {
        let mut m = RatMatrix::identity(4);
        m[(0, 2)] = rat(7, 3);
        assert_eq!(m.det(), rat_int(1));
    }
}
