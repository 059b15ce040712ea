//! Command-line front end. Everything is validated before any computation
//! starts, and each report is rendered into a buffer and written once.
//!
//! Exit codes: 0 clean, 1 a proved result failed, 2 a conjecture
//! counterexample was found, 64 usage error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::par::{self, Mode};
use crate::partitions::{table, FunctionName};
use crate::recurrences::{q_via_recurrence, term_count, RecurrenceKind};
use crate::verifier::{
    check_conjecture_with, verify_identity, verify_inequality_family_with, verify_parity_with, ConjectureId,
    FamilyId, FamilyReport, IdentityId, IdentityParams, IdentityReport, ParityId,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_COUNTEREXAMPLE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Parser)]
#[command(name = "qtheta", version, about = "Truncated theta series: tables, identity checks and inequality sweeps")]
pub struct Cli {
    /// Run every sweep on one thread.
    #[arg(long, global = true)]
    pub sequential: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit a partition-function table.
    Table(TableArgs),
    /// Check one identity coefficientwise.
    Identity(IdentityArgs),
    /// Sweep one inequality family.
    Inequality(InequalityArgs),
    /// Gather evidence for one conjecture.
    Conjecture(ConjectureArgs),
    /// Check one parity corollary.
    Parity(ParityArgs),
    /// Time the recurrence-based Q tables.
    Bench(BenchArgs),
    /// Run every proved identity, family and parity check at default sizes.
    All(OutputArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// P, Q, Q_R, Q_2, Q_3, OVERPARTITION, POD, M_K, M_OK or MP_K.
    #[arg(long)]
    pub name: String,
    #[arg(long)]
    pub nmax: usize,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct IdentityArgs {
    #[arg(long)]
    pub id: IdentityId,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long, default_value_t = 300)]
    pub order: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct InequalityArgs {
    #[arg(long)]
    pub family: FamilyId,
    #[arg(long, default_value_t = 5)]
    pub kmax: usize,
    #[arg(long, default_value_t = 1000)]
    pub nmax: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ConjectureArgs {
    #[arg(long)]
    pub id: ConjectureId,
    #[arg(long, default_value_t = 4)]
    pub kmax: usize,
    /// Largest n, or the series order for CONJ41/CONJ42.
    #[arg(long, visible_alias = "order", default_value_t = 500)]
    pub nmax: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ParityArgs {
    #[arg(long)]
    pub id: ParityId,
    #[arg(long, default_value_t = 10_000)]
    pub nmax: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Table sizes to time; repeatable.
    #[arg(long, num_args = 1.., default_values_t = [10_000usize, 100_000])]
    pub nmax: Vec<usize>,
    /// Recurrence kinds to time; all six by default.
    #[arg(long, num_args = 1..)]
    pub kind: Vec<RecurrenceKind>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Parses `args` (program name first), runs the command and writes the
/// report to `stdout` or the `--out` file. Returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = stderr.write_all(rendered.as_bytes());
                return EXIT_USAGE;
            }
            let _ = stdout.write_all(rendered.as_bytes());
            return EXIT_OK;
        }
    };
    let mode = if cli.sequential { Mode::Sequential } else { Mode::Parallel };
    match execute(cli.command, mode) {
        Ok(out) => {
            let written = match &out.path {
                Some(path) => std::fs::write(path, &out.body),
                None => stdout.write_all(out.body.as_bytes()),
            };
            if let Err(e) = written {
                let _ = writeln!(stderr, "error: cannot write output: {e}");
                return EXIT_USAGE;
            }
            out.code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

struct Rendered {
    body: String,
    path: Option<PathBuf>,
    code: i32,
}

fn execute(command: Command, mode: Mode) -> Result<Rendered> {
    let (body, path, code) = match command {
        Command::Table(a) => {
            let name = parse_function_name(&a.name, a.k, a.r)?;
            let t = table(name, a.nmax)?;
            let body = match a.output.format {
                Format::Json => json(&t),
                Format::Csv => csv_rows(&["n", "value"], t.values().iter().enumerate().map(|(n, v)| vec![n.to_string(), v.to_string()])),
            };
            (body, a.output.out, EXIT_OK)
        }
        Command::Identity(a) => {
            let rep = verify_identity(a.id, IdentityParams { k: a.k, r: a.r }, a.order)?;
            let code = if rep.passed() { EXIT_OK } else { EXIT_FAILURE };
            (render_identities(std::slice::from_ref(&rep), a.output.format), a.output.out, code)
        }
        Command::Inequality(a) => {
            let rep = verify_inequality_family_with(a.family, a.kmax, a.nmax, mode)?;
            let code = family_code(&rep);
            (render_families(std::slice::from_ref(&rep), a.output.format), a.output.out, code)
        }
        Command::Conjecture(a) => {
            let rep = check_conjecture_with(a.id, a.kmax, a.nmax, mode)?;
            let code = family_code(&rep);
            (render_families(std::slice::from_ref(&rep), a.output.format), a.output.out, code)
        }
        Command::Parity(a) => {
            let rep = verify_parity_with(a.id, a.nmax, mode)?;
            let code = family_code(&rep);
            (render_families(std::slice::from_ref(&rep), a.output.format), a.output.out, code)
        }
        Command::Bench(a) => {
            let rows = bench(&a.kind, &a.nmax)?;
            let body = match a.format {
                Format::Json => json(&rows),
                Format::Csv => csv_rows(
                    &["kind", "n_max", "terms_at_nmax", "wall_millis"],
                    rows.iter().map(|r| {
                        vec![r.kind.to_string(), r.n_max.to_string(), r.terms_at_nmax.to_string(), r.wall_millis.to_string()]
                    }),
                ),
            };
            (body, a.out, EXIT_OK)
        }
        Command::All(o) => {
            let rep = run_all(mode)?;
            let code = if rep.summary.passed { EXIT_OK } else { EXIT_FAILURE };
            let body = match o.format {
                Format::Json => json(&rep),
                Format::Csv => {
                    let mut s = render_identities(&rep.identities, Format::Csv);
                    s.push('\n');
                    s.push_str(&render_families(&rep.families, Format::Csv));
                    s
                }
            };
            (body, o.out, code)
        }
    };
    Ok(Rendered { body, path, code })
}

fn family_code(rep: &FamilyReport) -> i32 {
    match (rep.is_clean(), rep.proved) {
        (true, _) => EXIT_OK,
        (false, true) => EXIT_FAILURE,
        (false, false) => EXIT_COUNTEREXAMPLE,
    }
}

/// Accepts the table names case-insensitively; `Q_2` and `Q_3` are
/// shorthands for `Q_R` with `--r`.
pub fn parse_function_name(name: &str, k: Option<usize>, r: Option<usize>) -> Result<FunctionName> {
    let need_k = || {
        k.filter(|&k| k >= 1)
            .ok_or_else(|| Error::InvalidParameter(format!("{name} needs --k >= 1")))
    };
    let upper = name.to_ascii_uppercase().replace('-', "_");
    Ok(match upper.as_str() {
        "P" => FunctionName::P,
        "Q" => FunctionName::Q,
        "Q_R" | "QR" => FunctionName::QR(r.ok_or_else(|| Error::InvalidParameter("Q_R needs --r".into()))?),
        "Q_2" | "Q2" => FunctionName::QR(2),
        "Q_3" | "Q3" => FunctionName::QR(3),
        "OVERPARTITION" => FunctionName::Overpartition,
        "POD" => FunctionName::Pod,
        "M_K" | "MK" => FunctionName::MK(need_k()?),
        "M_OK" | "MOK" => FunctionName::MOK(need_k()?),
        "MP_K" | "MPK" => FunctionName::MPK(need_k()?),
        _ => return Err(Error::UnknownId(name.to_string())),
    })
}

fn json<T: Serialize + ?Sized>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

fn csv_rows(header: &[&str], rows: impl Iterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8")
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

fn render_identities(reps: &[IdentityReport], format: Format) -> String {
    match format {
        Format::Json if reps.len() == 1 => json(&reps[0]),
        Format::Json => json(reps),
        Format::Csv => csv_rows(
            &["identity_id", "k", "r", "order", "outcome", "first_exponent", "lhs_coeff", "rhs_coeff", "warnings"],
            reps.iter().map(|r| {
                let m = r.mismatch.as_ref();
                vec![
                    r.identity_id.to_string(),
                    opt(r.parameters.k),
                    opt(r.parameters.r),
                    r.order.to_string(),
                    if r.passed() { "PASS" } else { "FAIL" }.to_string(),
                    opt(m.map(|m| m.first_exponent)),
                    opt(m.map(|m| &m.lhs_coeff)),
                    opt(m.map(|m| &m.rhs_coeff)),
                    r.warnings.join("; "),
                ]
            }),
        ),
    }
}

/// CSV keeps one summary row per report; the finding lists are JSON-only.
fn render_families(reps: &[FamilyReport], format: Format) -> String {
    match format {
        Format::Json if reps.len() == 1 => json(&reps[0]),
        Format::Json => json(reps),
        Format::Csv => csv_rows(
            &[
                "family_id",
                "proved",
                "k_min",
                "k_max",
                "n_min",
                "n_max",
                "violations",
                "boundary_mismatches",
                "unasserted",
                "evidence_count",
                "first_violation_n",
            ],
            reps.iter().map(|r| {
                vec![
                    r.family_id.clone(),
                    r.proved.to_string(),
                    opt(r.k_range.map(|k| k[0])),
                    opt(r.k_range.map(|k| k[1])),
                    r.n_range[0].to_string(),
                    r.n_range[1].to_string(),
                    r.violations.len().to_string(),
                    r.boundary_mismatches.len().to_string(),
                    r.unasserted.len().to_string(),
                    r.evidence_count.to_string(),
                    opt(r.violations.first().map(|f| f.n)),
                ]
            }),
        ),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BenchRow {
    pub kind: RecurrenceKind,
    pub n_max: usize,
    pub terms_at_nmax: usize,
    pub wall_millis: u128,
}

fn bench(kinds: &[RecurrenceKind], sizes: &[usize]) -> Result<Vec<BenchRow>> {
    if sizes.is_empty() {
        return Err(Error::InvalidParameter("bench needs at least one --nmax".into()));
    }
    let kinds = if kinds.is_empty() { RecurrenceKind::ALL.to_vec() } else { kinds.to_vec() };
    let mut rows = Vec::new();
    for &n_max in sizes {
        for &kind in &kinds {
            let start = Instant::now();
            let t = q_via_recurrence(kind, n_max);
            let wall_millis = start.elapsed().as_millis();
            std::hint::black_box(t);
            rows.push(BenchRow { kind, n_max, terms_at_nmax: term_count(kind, n_max as u64), wall_millis });
        }
    }
    Ok(rows)
}

pub const ALL_IDENTITY_ORDER: usize = 300;
pub const ALL_K_MAX: usize = 5;
pub const ALL_FAMILY_N_MAX: usize = 1000;
pub const ALL_PARITY_N_MAX: usize = 10_000;

#[derive(Debug, Clone, Serialize)]
pub struct AllSummary {
    pub passed: bool,
    pub identities_checked: usize,
    pub identities_failed: usize,
    pub families_checked: usize,
    pub families_failed: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct AllReport {
    pub summary: AllSummary,
    pub identities: Vec<IdentityReport>,
    /// Proved inequality families followed by the parity corollaries.
    pub families: Vec<FamilyReport>,
}

/// The proved-results suite: every identity for `k <= 5` (and `r <= 3` where
/// it applies) at order 300, every proved family for `k <= 5, n <= 1000`,
/// and every parity corollary for `n <= 10^4`.
pub fn run_all(mode: Mode) -> Result<AllReport> {
    let mut jobs = Vec::new();
    for &id in IdentityId::ALL {
        let ks: Vec<Option<usize>> = if id.uses_k() { (1..=ALL_K_MAX).map(Some).collect() } else { vec![None] };
        let rs: Vec<Option<usize>> = if id.uses_r() { (1..=3).map(Some).collect() } else { vec![None] };
        for &k in &ks {
            for &r in &rs {
                jobs.push((id, IdentityParams { k, r }));
            }
        }
    }
    let identities = par::map(mode, &jobs, |&(id, p)| verify_identity(id, p, ALL_IDENTITY_ORDER))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;

    let mut families = Vec::new();
    for &id in FamilyId::ALL.iter().filter(|id| id.is_proved()) {
        families.push(verify_inequality_family_with(id, ALL_K_MAX, ALL_FAMILY_N_MAX, mode)?);
    }
    for &id in ParityId::ALL {
        families.push(verify_parity_with(id, ALL_PARITY_N_MAX, mode)?);
    }

    let identities_failed = identities.iter().filter(|r| !r.passed()).count();
    let families_failed = families.iter().filter(|r| !r.is_clean()).count();
    Ok(AllReport {
        summary: AllSummary {
            passed: identities_failed == 0 && families_failed == 0,
            identities_checked: identities.len(),
            identities_failed,
            families_checked: families.len(),
            families_failed,
        },
        identities,
        families,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("qtheta").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn table_csv() {
        let (code, out, _) = call(&["table", "--name", "Q", "--nmax", "20", "--format", "csv"]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 22);
        assert_eq!(lines[21], "20,64");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(call(&["identity", "--id", "ID_NOPE"]).0, EXIT_USAGE);
        assert_eq!(call(&["identity", "--id", "ID_EQ2", "--k", "0"]).0, EXIT_USAGE);
        assert_eq!(call(&["table", "--name", "M_K", "--nmax", "5"]).0, EXIT_USAGE);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn identity_json() {
        let (code, out, _) = call(&["identity", "--id", "ID_LEMMA21", "--k", "3", "--order", "200"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["outcome"], "PASS");
        assert_eq!(v["parameters"]["k"], 3);
    }

    #[test]
    fn parity_clean() {
        let (code, out, _) = call(&["parity", "--id", "COR13", "--nmax", "100"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["violations"].as_array().unwrap().len(), 0);
    }

    #[test]
    fn function_names() {
        assert_eq!(parse_function_name("q_2", None, None).unwrap(), FunctionName::QR(2));
        assert_eq!(parse_function_name("mp_k", Some(2), None).unwrap(), FunctionName::MPK(2));
        assert!(parse_function_name("Q_R", None, None).is_err());
        assert!(parse_function_name("XYZ", None, None).is_err());
    }
}
