//! Serializable report types with a stable schema.
//!
//! Every command emits one of these structures; JSON field order follows the
//! struct declarations, so byte-identical output across runs only requires
//! deterministic content (reports carry `wall_time_ms: 0` unless timing
//! collection is switched on).

use serde::Serialize;

/// Version stamp carried by every report.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum RelationStatus {
    Holds,
    Fails,
    NotApplicable,
}

/// One verified identity.
#[derive(Serialize, Clone, Debug)]
pub struct RelationEntry {
    pub relation_id: String,
    pub n: usize,
    pub status: RelationStatus,
    /// Maximum total degree appearing in the identity.
    pub degree: u32,
    pub wall_time_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Output of `verify`: the full relation suite at one `n`.
#[derive(Serialize, Clone, Debug)]
pub struct RelationReport {
    pub schema: u32,
    pub command: String,
    pub n: usize,
    pub extended: bool,
    pub seed: u64,
    pub relations: Vec<RelationEntry>,
}

impl RelationReport {
    /// True when nothing failed (`not_applicable` entries do not count
    /// against the suite).
    pub fn all_hold(&self) -> bool {
        self.relations.iter().all(|r| r.status != RelationStatus::Fails)
    }

    pub fn counts(&self) -> (usize, usize, usize) {
        let mut holds = 0;
        let mut fails = 0;
        let mut na = 0;
        for r in &self.relations {
            match r.status {
                RelationStatus::Holds => holds += 1,
                RelationStatus::Fails => fails += 1,
                RelationStatus::NotApplicable => na += 1,
            }
        }
        (holds, fails, na)
    }
}

/// Output of `independence`: the monomial basis and its rank certificate.
#[derive(Serialize, Clone, Debug)]
pub struct RankReport {
    pub schema: u32,
    pub command: String,
    pub n: usize,
    /// `2n² − 3n + 1`, the module rank over the invariant ring.
    pub expected: usize,
    pub rank: usize,
    pub points: usize,
    pub seed: u64,
    /// Whether the exact (rational elimination) path ran; `false` means the
    /// modular certificate already met the expected rank, which certifies
    /// the rank over the rationals as well.
    pub exact: bool,
    pub monomials: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// One row of the generalized-exponents table.
#[derive(Serialize, Clone, Debug)]
pub struct ExponentsRow {
    /// Weight in fundamental coordinates, e.g. `2w1+w3`.
    pub weight: String,
    /// The shape/content pair fed to the charge statistic.
    pub partitions: String,
    /// Closed-form q-polynomial.
    pub closed_form: String,
    /// Charge-generating-function q-polynomial.
    pub charge_form: String,
    pub equal: bool,
}

/// Output of `exponents`.
#[derive(Serialize, Clone, Debug)]
pub struct ExponentsReport {
    pub schema: u32,
    pub command: String,
    pub n: usize,
    pub rows: Vec<ExponentsRow>,
    /// The top row equals the `w2 + w_{n−2}` row plus `Σ_{j=n−1}^{2n−2} q^j`.
    pub shift_law_holds: bool,
    /// Evaluating all rows at `q = 1`, counting the adjoint row twice,
    /// reproduces the family dimension.
    pub dimension_check: bool,
    pub family_dimension: usize,
}

impl ExponentsReport {
    pub fn all_hold(&self) -> bool {
        self.rows.iter().all(|r| r.equal) && self.shift_law_holds && self.dimension_check
    }
}

/// Output of `dump`: a named object rendered entry by entry.
#[derive(Serialize, Clone, Debug)]
pub struct DumpReport {
    pub schema: u32,
    pub command: String,
    pub n: usize,
    pub object: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    /// Matrix of rendered polynomial entries (a scalar is a 1×1 matrix).
    pub matrix: Vec<Vec<String>>,
    /// Meaning of each variable, e.g. `x1 = coordinate of E(1,2)`.
    pub legend: Vec<String>,
}
