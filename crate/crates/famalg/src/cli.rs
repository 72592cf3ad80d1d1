//! Command-line front end.
//!
//! Four commands, one configuration surface:
//!
//! * `verify` — run the defining-relation suite at one `n` (2..=5) and
//!   report every identity;
//! * `independence` — emit the monomial transversal and its randomized
//!   rank certificate (n 2..=5);
//! * `exponents` — the generalized-exponents table, closed forms against
//!   charge statistics (n 4..=8);
//! * `dump` — print one object (`F`, a Casimir `c_k`, or a generator)
//!   with a variable legend.
//!
//! Exit codes: `0` when every requested check holds, `1` when a check
//! fails, `2` for an invalid configuration, `3` for an `n` outside the
//! supported range of the requested command.
//!
//! JSON output is byte-identical across runs for identical configuration
//! and seed: reports carry `wall_time_ms: 0` unless `--timings` is given,
//! field order follows the struct declarations, and every collection is
//! deterministically ordered.  Text output is human-oriented and not a
//! stability surface.  All rational numbers render exactly as `p/q`.

use std::io::{self, Write};

use crate::exponents::verify_table1;
use crate::family::Family;
use crate::independence::{monomial_basis, rank_certificate};
use crate::relations::{full_suite, SuiteConfig};
use crate::report::{
    DumpReport, RankReport, RelationReport, RelationStatus, SCHEMA_VERSION,
};
use crate::{FamalgError, DEFAULT_POINTS, DEFAULT_SEED};

/// Every requested check holds.
pub const EXIT_OK: i32 = 0;
/// At least one check failed.
pub const EXIT_FAILED: i32 = 1;
/// The configuration is invalid (bad `n`, bad filter, bad object name).
pub const EXIT_INVALID: i32 = 2;
/// `n` is valid for the library but outside the command's supported range.
pub const EXIT_UNSUPPORTED: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

/// Options shared by all commands; defaults are stable and documented:
/// seed `0xFA417A`, 3 evaluation points, text output.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub seed: u64,
    pub points: usize,
    pub format: Format,
    /// Include the long-running comparisons that are skipped by default at
    /// `n = 5`.
    pub extended: bool,
    /// Record wall-clock times per relation; JSON output then varies from
    /// run to run.
    pub timings: bool,
    /// Relation-id filter for `verify`: keep entries whose id equals, or
    /// starts with, one of these strings.  Empty, or containing `"all"`,
    /// keeps everything.
    pub relations: Vec<String>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: DEFAULT_SEED,
            points: DEFAULT_POINTS,
            format: Format::Text,
            extended: false,
            timings: false,
            relations: Vec::new(),
        }
    }
}

#[derive(Clone, Debug)]
pub enum DumpObject {
    F,
    Casimir { k: usize },
    Generator { name: String },
}

#[derive(Clone, Debug)]
pub enum Command {
    Verify { n: usize },
    Independence { n: usize },
    Exponents { n: usize },
    Dump { n: usize, object: DumpObject },
}

/// Execute one command, writing the report to `out`, and return the exit
/// code.
pub fn run(cmd: &Command, cfg: &RunConfig, out: &mut dyn Write) -> i32 {
    match run_impl(cmd, cfg, out) {
        Ok(code) => code,
        Err(e) => match e {
            RunError::Io => EXIT_FAILED,
            RunError::Invalid(msg) => {
                let _ = writeln!(out, "error: {msg}");
                EXIT_INVALID
            }
            RunError::Unsupported(msg) => {
                let _ = writeln!(out, "error: {msg}");
                EXIT_UNSUPPORTED
            }
        },
    }
}

enum RunError {
    Io,
    Invalid(String),
    Unsupported(String),
}

impl From<io::Error> for RunError {
    fn from(_: io::Error) -> Self {
        RunError::Io
    }
}

impl From<FamalgError> for RunError {
    fn from(e: FamalgError) -> Self {
        match e {
            FamalgError::Unsupported { .. } => RunError::Unsupported(e.to_string()),
            _ => RunError::Invalid(e.to_string()),
        }
    }
}

/// `n < 2` never carries the construction: invalid configuration.  Larger
/// `n` outside `supported` is a valid but out-of-contract request.
fn check_n(n: usize, supported: std::ops::RangeInclusive<usize>, what: &str) -> Result<(), RunError> {
    if n < 2 {
        return Err(RunError::Invalid(format!(
            "invalid dimension parameter n = {n}: need n >= 2"
        )));
    }
    if !supported.contains(&n) {
        return Err(RunError::Unsupported(format!(
            "unsupported n = {n} for {what} (supported: {}..={})",
            supported.start(),
            supported.end()
        )));
    }
    Ok(())
}

fn run_impl(cmd: &Command, cfg: &RunConfig, out: &mut dyn Write) -> Result<i32, RunError> {
    match *cmd {
        Command::Verify { n } => run_verify(n, cfg, out),
        Command::Independence { n } => run_independence(n, cfg, out),
        Command::Exponents { n } => run_exponents(n, cfg, out),
        Command::Dump { n, ref object } => run_dump(n, object, cfg, out),
    }
}

fn emit_json<T: serde::Serialize>(report: &T, out: &mut dyn Write) -> Result<(), RunError> {
    let text = serde_json::to_string_pretty(report)
        .map_err(|e| RunError::Invalid(format!("serialization failed: {e}")))?;
    writeln!(out, "{text}")?;
    Ok(())
}

fn run_verify(n: usize, cfg: &RunConfig, out: &mut dyn Write) -> Result<i32, RunError> {
    check_n(n, 2..=5, "the relation suite")?;
    let fam = Family::new(n)?;
    let suite_cfg = SuiteConfig {
        extended: cfg.extended,
        timings: cfg.timings,
        seed: cfg.seed,
        ..SuiteConfig::default()
    };
    let mut entries = full_suite(&fam, &suite_cfg);
    let keep_all = cfg.relations.is_empty() || cfg.relations.iter().any(|f| f == "all");
    if !keep_all {
        entries.retain(|e| {
            cfg.relations
                .iter()
                .any(|f| e.relation_id == *f || e.relation_id.starts_with(f.as_str()))
        });
        if entries.is_empty() {
            return Err(RunError::Invalid(format!(
                "relation filter {:?} matches no relation id",
                cfg.relations
            )));
        }
    }
    let report = RelationReport {
        schema: SCHEMA_VERSION,
        command: "verify".to_string(),
        n,
        extended: cfg.extended,
        seed: cfg.seed,
        relations: entries,
    };
    match cfg.format {
        Format::Json => emit_json(&report, out)?,
        Format::Text => {
            writeln!(
                out,
                "relation suite: n = {}, seed = {}, extended = {}, {} relations",
                report.n,
                report.seed,
                report.extended,
                report.relations.len()
            )?;
            let width = report
                .relations
                .iter()
                .map(|e| e.relation_id.len())
                .max()
                .unwrap_or(0);
            for e in &report.relations {
                let status = match e.status {
                    RelationStatus::Holds => "holds",
                    RelationStatus::Fails => "FAILS",
                    RelationStatus::NotApplicable => "skip ",
                };
                write!(
                    out,
                    "  {status}  {:<width$}  degree {}",
                    e.relation_id, e.degree
                )?;
                if cfg.timings {
                    write!(out, "  {} ms", e.wall_time_ms)?;
                }
                if let Some(note) = &e.note {
                    write!(out, "  [{note}]")?;
                }
                writeln!(out)?;
            }
            let (holds, fails, na) = report.counts();
            writeln!(out, "summary: {holds} hold, {fails} fail, {na} skipped")?;
            writeln!(out, "{}", if report.all_hold() { "PASS" } else { "FAIL" })?;
        }
    }
    Ok(if report.all_hold() { EXIT_OK } else { EXIT_FAILED })
}

fn run_independence(n: usize, cfg: &RunConfig, out: &mut dyn Write) -> Result<i32, RunError> {
    check_n(n, 2..=5, "the rank certificate")?;
    if cfg.points == 0 {
        return Err(RunError::Invalid(
            "points must be at least 1".to_string(),
        ));
    }
    let fam = Family::new(n)?;
    let monomials = monomial_basis(n)?;
    let report: RankReport = rank_certificate(&fam, &monomials, cfg.points, cfg.seed);
    match cfg.format {
        Format::Json => emit_json(&report, out)?,
        Format::Text => {
            writeln!(
                out,
                "monomial transversal: n = {}, {} monomials, expected rank {}",
                report.n,
                report.monomials.len(),
                report.expected
            )?;
            writeln!(out, "  {}", report.monomials.join(", "))?;
            writeln!(
                out,
                "rank {} / {} over {} point(s), seed = {}, {} elimination",
                report.rank,
                report.expected,
                report.points,
                report.seed,
                if report.exact { "exact rational" } else { "modular" }
            )?;
            if let Some(note) = &report.note {
                writeln!(out, "note: {note}")?;
            }
            writeln!(
                out,
                "{}",
                if report.rank == report.expected { "PASS" } else { "FAIL" }
            )?;
        }
    }
    Ok(if report.rank == report.expected { EXIT_OK } else { EXIT_FAILED })
}

fn run_exponents(n: usize, cfg: &RunConfig, out: &mut dyn Write) -> Result<i32, RunError> {
    check_n(n, 4..=8, "the generalized-exponents table")?;
    let report = verify_table1(n)?;
    match cfg.format {
        Format::Json => emit_json(&report, out)?,
        Format::Text => {
            writeln!(
                out,
                "generalized exponents: n = {}, family dimension {}",
                report.n, report.family_dimension
            )?;
            let width = report.rows.iter().map(|r| r.weight.len()).max().unwrap_or(0);
            for row in &report.rows {
                writeln!(
                    out,
                    "  {:<width$}  closed {}  charge {}  {}  [{}]",
                    row.weight,
                    row.closed_form,
                    row.charge_form,
                    if row.equal { "ok" } else { "MISMATCH" },
                    row.partitions
                )?;
            }
            writeln!(
                out,
                "shift law: {}",
                if report.shift_law_holds { "holds" } else { "FAILS" }
            )?;
            writeln!(
                out,
                "q = 1 dimension count (adjoint twice): {}",
                if report.dimension_check { "holds" } else { "FAILS" }
            )?;
            writeln!(out, "{}", if report.all_hold() { "PASS" } else { "FAIL" })?;
        }
    }
    Ok(if report.all_hold() { EXIT_OK } else { EXIT_FAILED })
}

fn run_dump(
    n: usize,
    object: &DumpObject,
    cfg: &RunConfig,
    out: &mut dyn Write,
) -> Result<i32, RunError> {
    check_n(n, 2..=5, "object dumps")?;
    let fam = Family::new(n)?;
    let legend: Vec<String> = fam
        .lie
        .basis
        .iter()
        .enumerate()
        .map(|(idx, b)| format!("x{} = coordinate of {}", idx + 1, b))
        .collect();
    let (object_name, k, matrix): (String, Option<usize>, Vec<Vec<String>>) = match object {
        DumpObject::F => (
            "F".to_string(),
            None,
            render_matrix(&fam.cas.f.mat),
        ),
        DumpObject::Casimir { k } => {
            if *k > fam.cas.max_k() {
                return Err(RunError::Invalid(format!(
                    "casimir index k = {k} out of range (cached: 0..={})",
                    fam.cas.max_k()
                )));
            }
            (
                "casimir".to_string(),
                Some(*k),
                vec![vec![fam.cas.c(*k).to_string()]],
            )
        }
        DumpObject::Generator { name } => {
            let canonical = name.to_ascii_uppercase();
            let g = fam.generator(&canonical).ok_or_else(|| {
                RunError::Invalid(format!(
                    "unknown generator {name:?} (expected one of L, R, S, M, N)"
                ))
            })?;
            (format!("generator {canonical}"), None, render_matrix(g))
        }
    };
    let report = DumpReport {
        schema: SCHEMA_VERSION,
        command: "dump".to_string(),
        n,
        object: object_name,
        k,
        matrix,
        legend,
    };
    match cfg.format {
        Format::Json => emit_json(&report, out)?,
        Format::Text => {
            let rows = report.matrix.len();
            let cols = report.matrix.first().map(|r| r.len()).unwrap_or(0);
            writeln!(out, "{} for n = {} ({rows} x {cols})", report.object, report.n)?;
            for (r, row) in report.matrix.iter().enumerate() {
                for (c, entry) in row.iter().enumerate() {
                    writeln!(out, "  [{},{}] = {}", r + 1, c + 1, entry)?;
                }
            }
            writeln!(out, "legend:")?;
            for line in &report.legend {
                writeln!(out, "  {line}")?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn render_matrix(m: &crate::poly::PolyMatrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| m.get(r, c).to_string()).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_to_string(cmd: &Command, cfg: &RunConfig) -> (i32, String) {
        let mut buf = Vec::new();
        let code = run(cmd, cfg, &mut buf);
        (code, String::from_utf8(buf).expect("utf8 output"))
    }

    #[test]
    fn verify_n2_passes_and_n1_is_invalid() {
        let cfg = RunConfig::default();
        let (code, text) = run_to_string(&Command::Verify { n: 2 }, &cfg);
        assert_eq!(code, EXIT_OK, "output:\n{text}");
        assert!(text.contains("PASS"));

        let (code, text) = run_to_string(&Command::Verify { n: 1 }, &cfg);
        assert_eq!(code, EXIT_INVALID);
        assert!(text.contains("error:"));

        let (code, _) = run_to_string(&Command::Verify { n: 6 }, &cfg);
        assert_eq!(code, EXIT_UNSUPPORTED);
    }

    #[test]
    fn verify_relation_filter() {
        let cfg = RunConfig {
            relations: vec!["core/".to_string()],
            ..RunConfig::default()
        };
        let (code, text) = run_to_string(&Command::Verify { n: 2 }, &cfg);
        assert_eq!(code, EXIT_OK, "output:\n{text}");
        assert!(text.contains("core/cayley-hamilton"));
        assert!(!text.contains("alg/"));

        let bad = RunConfig {
            relations: vec!["nonsense/xyz".to_string()],
            ..RunConfig::default()
        };
        let (code, _) = run_to_string(&Command::Verify { n: 2 }, &bad);
        assert_eq!(code, EXIT_INVALID);
    }

    #[test]
    fn exponents_range_and_json_determinism() {
        let cfg = RunConfig { format: Format::Json, ..RunConfig::default() };
        let (code, first) = run_to_string(&Command::Exponents { n: 4 }, &cfg);
        assert_eq!(code, EXIT_OK);
        let (_, second) = run_to_string(&Command::Exponents { n: 4 }, &cfg);
        assert_eq!(first, second, "JSON output must be byte-identical");
        assert!(first.contains("\"schema\": 1"));
        assert!(first.contains("q^2+q^4"));

        let (code, _) = run_to_string(&Command::Exponents { n: 3 }, &RunConfig::default());
        assert_eq!(code, EXIT_UNSUPPORTED);
        let (code, _) = run_to_string(&Command::Exponents { n: 9 }, &RunConfig::default());
        assert_eq!(code, EXIT_UNSUPPORTED);
        let (code, _) = run_to_string(&Command::Exponents { n: 1 }, &RunConfig::default());
        assert_eq!(code, EXIT_INVALID);
    }

    #[test]
    fn independence_passes_at_n2() {
        let cfg = RunConfig::default();
        let (code, text) = run_to_string(&Command::Independence { n: 2 }, &cfg);
        assert_eq!(code, EXIT_OK, "output:\n{text}");
        assert!(text.contains("rank 3 / 3"));

        let zero_points = RunConfig { points: 0, ..RunConfig::default() };
        let (code, _) = run_to_string(&Command::Independence { n: 2 }, &zero_points);
        assert_eq!(code, EXIT_INVALID);
    }

    #[test]
    fn dump_objects() {
        let cfg = RunConfig::default();
        let (code, text) = run_to_string(
            &Command::Dump { n: 2, object: DumpObject::F },
            &cfg,
        );
        assert_eq!(code, EXIT_OK);
        assert!(text.contains("x1 = coordinate of E(1,2)"));

        let (code, text) = run_to_string(
            &Command::Dump { n: 2, object: DumpObject::Casimir { k: 2 } },
            &cfg,
        );
        assert_eq!(code, EXIT_OK, "output:\n{text}");

        let (code, _) = run_to_string(
            &Command::Dump { n: 2, object: DumpObject::Casimir { k: 99 } },
            &cfg,
        );
        assert_eq!(code, EXIT_INVALID);

        let (code, text) = run_to_string(
            &Command::Dump {
                n: 2,
                object: DumpObject::Generator { name: "l".to_string() },
            },
            &cfg,
        );
        assert_eq!(code, EXIT_OK);
        assert!(text.contains("generator L"));

        let (code, _) = run_to_string(
            &Command::Dump {
                n: 2,
                object: DumpObject::Generator { name: "Q".to_string() },
            },
            &cfg,
        );
        assert_eq!(code, EXIT_INVALID);
    }
}
