//! Generalized exponents of the family algebra.
//!
//! The family algebra of the adjoint representation is a free module of rank
//! `2n² − 3n + 1` over the invariant ring, and the grading of a homogeneous
//! generating set is recorded by one q-polynomial per irreducible constituent
//! of `End(V)`: the *generalized exponents* of that constituent.  For `n ≥ 4`
//! the constituents are the trivial representation, two copies of the adjoint
//! representation, and the four irreducibles with highest weights
//! `2ω₁ + ω_{n−2}`, `ω₂ + 2ω_{n−1}`, `ω₂ + ω_{n−2}`, and `2ω₁ + 2ω_{n−1}`.
//! Each q-multiplicity has a closed form built from Gaussian binomial
//! coefficients ([`table1`]).
//!
//! Independently, the generalized exponents of an irreducible `sl(n)`-module
//! are a Kostka–Foulkes polynomial: normalize the highest weight to a
//! partition `λ` with `|λ| = k·n` ([`weight_to_partition`]), take content
//! `μ = (kⁿ)`, and sum `q^charge` over semistandard tableaux of shape `λ`
//! and content `μ` ([`kostka`]).  [`verify_table1`] checks every closed form
//! against this tableau computation, together with two structural facts:
//!
//! * the `2ω₁ + 2ω_{n−1}` row equals the `ω₂ + ω_{n−2}` row plus
//!   `q^{n−1} + ⋯ + q^{2n−2}`;
//! * evaluating all rows at `q = 1` (the adjoint row counted twice, once for
//!   each copy) reproduces the module rank `2n² − 3n + 1`, which is also the
//!   sum of squared weight multiplicities of the adjoint representation
//!   ([`family_dimension`]).
//!
//! Everything here is exact integer arithmetic on sparse q-polynomials.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::report::{ExponentsReport, ExponentsRow, SCHEMA_VERSION};
use crate::FamalgError;

/// A polynomial in the grading variable `q` with integer coefficients,
/// stored sparsely by degree.  Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QPoly {
    coeffs: BTreeMap<u32, i64>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        QPoly::monomial(0)
    }

    /// The single term `q^d`.
    pub fn monomial(d: u32) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(d, 1);
        QPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, d: u32) -> i64 {
        self.coeffs.get(&d).copied().unwrap_or(0)
    }

    /// Largest degree with a nonzero coefficient, or `None` for the zero
    /// polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, i64)> + '_ {
        self.coeffs.iter().map(|(&d, &c)| (d, c))
    }

    fn set(&mut self, d: u32, c: i64) {
        if c == 0 {
            self.coeffs.remove(&d);
        } else {
            self.coeffs.insert(d, c);
        }
    }

    pub fn add(&self, other: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (d, c) in other.terms() {
            out.set(d, out.coefficient(d) + c);
        }
        out
    }

    pub fn sub(&self, other: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (d, c) in other.terms() {
            out.set(d, out.coefficient(d) - c);
        }
        out
    }

    pub fn mul(&self, other: &QPoly) -> QPoly {
        let mut out = QPoly::zero();
        for (d1, c1) in self.terms() {
            for (d2, c2) in other.terms() {
                out.set(d1 + d2, out.coefficient(d1 + d2) + c1 * c2);
            }
        }
        out
    }

    /// Divide exactly by `divisor`, returning `None` when the division
    /// leaves a remainder.  Long division from the lowest degree up; the
    /// divisors used in this crate all have constant term `±1`, so the
    /// quotient stays integral whenever the division is exact.
    pub fn exact_div(&self, divisor: &QPoly) -> Option<QPoly> {
        if divisor.is_zero() {
            return None;
        }
        let (&low, &lead) = divisor.coeffs.iter().next().expect("nonzero divisor");
        let mut rem = self.clone();
        let mut quot = QPoly::zero();
        while let Some((&d, &c)) = rem.coeffs.iter().next() {
            if d < low || c % lead != 0 {
                return None;
            }
            let qd = d - low;
            let qc = c / lead;
            quot.set(qd, quot.coefficient(qd) + qc);
            for (dd, dc) in divisor.terms() {
                rem.set(qd + dd, rem.coefficient(qd + dd) - qc * dc);
            }
        }
        Some(quot)
    }

    /// Evaluate at `q = 1` (the total coefficient sum).
    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.values().sum()
    }
}

impl fmt::Display for QPoly {
    /// Compact ascending form: `1`, `q+q^2+q^3`, `q^2+q^3+2q^4+q^5+q^6`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (d, c)) in self.terms().enumerate() {
            let mag = c.unsigned_abs();
            if i == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else if c < 0 {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            match (d, mag) {
                (0, m) => write!(f, "{m}")?,
                (1, 1) => write!(f, "q")?,
                (1, m) => write!(f, "{m}q")?,
                (d, 1) => write!(f, "q^{d}")?,
                (d, m) => write!(f, "{m}q^{d}")?,
            }
        }
        Ok(())
    }
}

/// The q-integer `[m]_q = 1 + q + ⋯ + q^{m−1}`; `[0]_q = 0`.
pub fn q_integer(m: u32) -> QPoly {
    let mut out = QPoly::zero();
    for d in 0..m {
        out.set(d, 1);
    }
    out
}

/// The Gaussian binomial coefficient `binom(m, k)_q` via the product
/// formula `Π_{i=1}^{k} [m−k+i]_q / [i]_q`.  Every prefix of the product is
/// itself a Gaussian binomial, so each division is exact.
///
/// # Panics
///
/// Panics when `k > m`.
pub fn q_binomial(m: u32, k: u32) -> QPoly {
    assert!(k <= m, "q_binomial requires k <= m, got ({m}, {k})");
    let mut out = QPoly::one();
    for i in 1..=k {
        out = out.mul(&q_integer(m - k + i));
        out = out
            .exact_div(&q_integer(i))
            .expect("Gaussian binomial prefix products divide exactly");
    }
    out
}

/// A partition: weakly decreasing positive parts (empty allowed).
pub type Partition = Vec<usize>;

/// Weight multiplicities of the adjoint representation of `sl(n)`: each of
/// the `n(n−1)` roots `e_i − e_j` carries multiplicity 1 and the zero weight
/// carries multiplicity `n − 1`.  Keys are the weight labels `"ei-ej"` and
/// `"0"`.
pub fn weight_multiplicities(n: usize) -> Result<BTreeMap<String, usize>, FamalgError> {
    if n < 2 {
        return Err(FamalgError::InvalidDimension(n));
    }
    let mut out = BTreeMap::new();
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                out.insert(format!("e{i}-e{j}"), 1);
            }
        }
    }
    out.insert("0".to_string(), n - 1);
    Ok(out)
}

/// The rank of the family algebra over the invariant ring: the sum of
/// squared weight multiplicities of the adjoint representation,
/// `n(n−1)·1² + (n−1)² = 2n² − 3n + 1`.
pub fn family_dimension(n: usize) -> Result<usize, FamalgError> {
    let mult = weight_multiplicities(n)?;
    Ok(mult.values().map(|&m| m * m).sum())
}

/// Normalize a dominant weight of `sl(n)`, given by its coefficients
/// `a_1..a_{n−1}` over the fundamental weights, to a partition of `k·n`:
/// `λ_i = Σ_{j≥i} a_j` (so `λ_n = 0`), with `k = |λ| / n` and the content
/// `μ = (kⁿ)`.  Trailing zero parts are stripped from both outputs.
///
/// # Panics
///
/// Panics when `n` does not divide `Σ j·a_j`.  Weights of constituents of
/// `End(V)` lie in the root lattice, where divisibility always holds.
pub fn weight_to_partition(a: &[usize], n: usize) -> (Partition, Vec<usize>) {
    assert!(n >= 2, "weight_to_partition requires n >= 2");
    assert!(a.len() == n - 1, "expected {} fundamental coefficients, got {}", n - 1, a.len());
    let total: usize = a.iter().enumerate().map(|(idx, &c)| (idx + 1) * c).sum();
    assert!(
        total % n == 0,
        "weight lies outside the root lattice: n = {n} does not divide {total}"
    );
    let k = total / n;
    let mut lambda: Partition = (0..n).map(|i| a[i..].iter().sum()).collect();
    while lambda.last() == Some(&0) {
        lambda.pop();
    }
    let mu = vec![k; if k == 0 { 0 } else { n }];
    (lambda, mu)
}

/// Semistandard tableaux of shape `lambda` and content `mu`: rows weakly
/// increase left to right, columns strictly increase top to bottom, and the
/// value `i + 1` appears exactly `mu[i]` times.  Returns the reading words
/// (rows concatenated bottom row first, each row left to right).
fn ssyt_reading_words(lambda: &[usize], mu: &[usize]) -> Vec<Vec<usize>> {
    let cells: usize = lambda.iter().sum();
    if cells != mu.iter().sum::<usize>() {
        return Vec::new();
    }
    if cells == 0 {
        return vec![Vec::new()];
    }
    let rows = lambda.len();
    let mut tableau: Vec<Vec<usize>> = lambda.iter().map(|&len| vec![0; len]).collect();
    let mut remaining = mu.to_vec();
    let mut out = Vec::new();
    fill(&mut tableau, &mut remaining, 0, 0, rows, &mut out);
    return out;

    fn fill(
        tableau: &mut Vec<Vec<usize>>,
        remaining: &mut Vec<usize>,
        row: usize,
        col: usize,
        rows: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if row == rows {
            let mut word = Vec::new();
            for r in tableau.iter().rev() {
                word.extend_from_slice(r);
            }
            out.push(word);
            return;
        }
        if col == tableau[row].len() {
            fill(tableau, remaining, row + 1, 0, rows, out);
            return;
        }
        let min_left = if col > 0 { tableau[row][col - 1] } else { 1 };
        let min_above = if row > 0 && tableau[row - 1].len() > col {
            tableau[row - 1][col] + 1
        } else {
            1
        };
        let lo = min_left.max(min_above);
        for v in lo..=remaining.len() {
            if remaining[v - 1] == 0 {
                continue;
            }
            remaining[v - 1] -= 1;
            tableau[row][col] = v;
            fill(tableau, remaining, row, col + 1, rows, out);
            remaining[v - 1] += 1;
        }
        tableau[row][col] = 0;
    }
}

/// Charge of a word whose content is a partition (weakly decreasing
/// multiplicities), by standard-subword extraction:
///
/// 1. Pick the rightmost `1`; then, for each next value `v`, the rightmost
///    `v` strictly left of the previous pick, wrapping to the rightmost `v`
///    overall when none lies to the left; stop when `v` is absent.
/// 2. The picked letters, in their original order, form a standard word;
///    its charge gives letter `1` index `0`, and letter `r + 1` the index of
///    `r` plus one exactly when `r + 1` sits to the right of `r`.
/// 3. Remove the picked letters and repeat; charge is the sum over rounds.
pub fn charge(word: &[usize]) -> u32 {
    let mut positions: Vec<usize> = (0..word.len()).collect();
    let mut total = 0u32;
    while !positions.is_empty() {
        // One extraction round over the remaining letters.
        let mut picked: Vec<usize> = Vec::new();
        let mut value = 1usize;
        let mut prev_pos: Option<usize> = None;
        loop {
            let candidates: Vec<usize> = positions
                .iter()
                .copied()
                .filter(|&p| word[p] == value)
                .collect();
            if candidates.is_empty() {
                break;
            }
            let pick = match prev_pos {
                Some(pp) => candidates
                    .iter()
                    .copied()
                    .filter(|&p| p < pp)
                    .next_back()
                    .unwrap_or_else(|| *candidates.last().expect("nonempty")),
                None => *candidates.last().expect("nonempty"),
            };
            picked.push(pick);
            prev_pos = Some(pick);
            value += 1;
        }
        picked.sort_unstable();
        total += standard_charge(&picked.iter().map(|&p| word[p]).collect::<Vec<_>>());
        positions.retain(|p| !picked.contains(p));
    }
    total
}

/// Charge of a standard word (each value `1..=m` exactly once).
fn standard_charge(word: &[usize]) -> u32 {
    let m = word.len();
    let mut pos = vec![0usize; m + 1];
    for (p, &v) in word.iter().enumerate() {
        pos[v] = p;
    }
    let mut index = 0u32;
    let mut total = 0u32;
    for v in 2..=m {
        if pos[v] > pos[v - 1] {
            index += 1;
        }
        total += index;
    }
    total
}

/// The Kostka–Foulkes polynomial `K_{λ,μ}(q) = Σ q^{charge}` over
/// semistandard tableaux of shape `λ` and content `μ`.  Incompatible sizes
/// give the zero polynomial.  `μ` must be weakly decreasing (the charge
/// statistic is defined for partition content).
pub fn kostka(lambda: &[usize], mu: &[usize]) -> QPoly {
    assert!(
        lambda.windows(2).all(|w| w[0] >= w[1]),
        "shape must be weakly decreasing"
    );
    assert!(
        mu.windows(2).all(|w| w[0] >= w[1]),
        "content must be weakly decreasing for the charge statistic"
    );
    let mut out = QPoly::zero();
    for word in ssyt_reading_words(lambda, mu) {
        let d = charge(&word);
        out.set(d, out.coefficient(d) + 1);
    }
    out
}

/// One row of the generalized-exponents table: a constituent of `End(V)`
/// for the adjoint representation of `sl(n)`.
#[derive(Clone, Debug)]
pub struct TableRow {
    /// Human-readable weight label, e.g. `"2w1+w3"`.
    pub label: String,
    /// Fundamental-weight coefficients `a_1..a_{n−1}`.
    pub weight: Vec<usize>,
    /// Closed-form q-multiplicity.
    pub closed_form: QPoly,
}

fn weight_label(a: &[usize]) -> String {
    let terms: Vec<String> = a
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c > 0)
        .map(|(idx, &c)| {
            let i = idx + 1;
            if c == 1 {
                format!("w{i}")
            } else {
                format!("{c}w{i}")
            }
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

/// The closed-form generalized-exponents table for `n ≥ 4`, in display
/// order: trivial, adjoint (which occurs twice in `End(V)` but is listed
/// once), `2ω₁ + ω_{n−2}`, `ω₂ + 2ω_{n−1}`, `ω₂ + ω_{n−2}`, and
/// `2ω₁ + 2ω_{n−1}`.
pub fn table1(n: usize) -> Result<Vec<TableRow>, FamalgError> {
    if n < 4 {
        return Err(FamalgError::Unsupported {
            n,
            what: "the closed-form generalized-exponents table",
            supported: "n >= 4 (smaller n have degenerate constituent lists)",
        });
    }
    let nu = n as u32;
    let weight = |entries: &[(usize, usize)]| -> Vec<usize> {
        let mut a = vec![0usize; n - 1];
        for &(i, c) in entries {
            a[i - 1] += c;
        }
        a
    };
    let rows = vec![
        (weight(&[]), QPoly::one()),
        (weight(&[(1, 1), (n - 1, 1)]), QPoly::monomial(1).mul(&q_integer(nu - 1))),
        (weight(&[(1, 2), (n - 2, 1)]), QPoly::monomial(3).mul(&q_binomial(nu - 1, 2))),
        (weight(&[(2, 1), (n - 1, 2)]), QPoly::monomial(3).mul(&q_binomial(nu - 1, 2))),
        (
            weight(&[(2, 1), (n - 2, 1)]),
            QPoly::monomial(2).mul(&q_binomial(nu - 1, 2)).sub(&QPoly::monomial(nu - 1)),
        ),
        (weight(&[(1, 2), (n - 1, 2)]), QPoly::monomial(2).mul(&q_binomial(nu, 2))),
    ];
    Ok(rows
        .into_iter()
        .map(|(a, closed_form)| TableRow { label: weight_label(&a), weight: a, closed_form })
        .collect())
}

fn partition_string(p: &[usize]) -> String {
    let inner: Vec<String> = p.iter().map(|x| x.to_string()).collect();
    format!("({})", inner.join(","))
}

/// Verify the generalized-exponents table at one `n ≥ 4`: every closed form
/// against the charge statistic, the shift law relating the last two
/// constituents, and the `q = 1` dimension count (adjoint counted twice)
/// against [`family_dimension`].
pub fn verify_table1(n: usize) -> Result<ExponentsReport, FamalgError> {
    let rows = table1(n)?;
    let dim = family_dimension(n)?;
    let computed: Vec<(String, QPoly)> = rows
        .par_iter()
        .map(|row| {
            let (lambda, mu) = weight_to_partition(&row.weight, n);
            let charge_form = kostka(&lambda, &mu);
            let partitions = format!(
                "shape {}, content {}",
                partition_string(&lambda),
                partition_string(&mu)
            );
            (partitions, charge_form)
        })
        .collect();

    let report_rows: Vec<ExponentsRow> = rows
        .iter()
        .zip(computed.iter())
        .map(|(row, (partitions, charge_form))| ExponentsRow {
            weight: row.label.clone(),
            partitions: partitions.clone(),
            closed_form: row.closed_form.to_string(),
            charge_form: charge_form.to_string(),
            equal: *charge_form == row.closed_form,
        })
        .collect();

    // Shift law: the 2w1+2w_{n-1} row is the w2+w_{n-2} row plus
    // q^{n-1} + ... + q^{2n-2}, checked on both the closed forms and the
    // charge-computed forms.
    let mut shift = QPoly::zero();
    for d in (n as u32 - 1)..=(2 * n as u32 - 2) {
        shift = shift.add(&QPoly::monomial(d));
    }
    let closed_shift = rows[5].closed_form == rows[4].closed_form.add(&shift);
    let charge_shift = computed[5].1 == computed[4].1.add(&shift);

    // q = 1 totals; the adjoint row (index 1) occurs twice in End(V).
    let mut total: i64 = 0;
    for (idx, row) in rows.iter().enumerate() {
        let v = row.closed_form.eval_at_one();
        total += if idx == 1 { 2 * v } else { v };
    }

    Ok(ExponentsReport {
        schema: SCHEMA_VERSION,
        command: "exponents".to_string(),
        n,
        rows: report_rows,
        shift_law_holds: closed_shift && charge_shift,
        dimension_check: total == dim as i64,
        family_dimension: dim,
    })
}
