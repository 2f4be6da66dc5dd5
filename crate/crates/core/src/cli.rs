//! Command-line driver: seeded verification suites that stream JSON lines.
//!
//! Every suite produces one [`Record`] per trial or identity instance, in a
//! fixed order that does not depend on the worker pool. Exit status is 0 when
//! no record failed, 1 when some did, and 2 on usage or input errors.

use std::ffi::OsString;
use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::apolarity::stratify;
use crate::ci::{associated_form, roundtrip_span, verify_inverse_system};
use crate::error::{Error, Result};
use crate::identities::{
    check_a1, check_a2, check_a3, check_aux, check_delta_consistency, check_dimt2_equals_n,
    compare_a3_readings, IdentityId, IdentityResult,
};
use crate::poly::{FormTuple, Polynomial};
use crate::sample::{random_ci_tuple_with_cap, DEFAULT_COEFF_BOUND, DEFAULT_MAX_ATTEMPTS};
use crate::tangent::{
    koszul_kernel_check, relation_space_dim_bruteforce, relation_space_dim_formula, tangent_dim,
};

#[derive(Parser, Debug)]
#[command(
    name = "catalecticant",
    version,
    about = "Exact verification suites for associated forms of complete intersections"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write JSON lines to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Also write a CSV table of per-suite counts.
    #[arg(long, global = true)]
    csv: Option<PathBuf>,

    /// Worker threads; defaults to the available parallelism.
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Subcommand, Clone, Debug, PartialEq, Eq)]
pub enum Command {
    /// Binomial identities over exhaustive parameter ranges.
    Identities(IdentityRanges),
    /// Tangent dimension at associated forms of random complete intersections.
    Tangent(TrialArgs),
    /// Relation-space dimension, by elimination and by the closed formula.
    Relations(TrialArgs),
    /// Koszul kernel checks for every admissible degree.
    Koszul(TrialArgs),
    /// Stratum membership of forms read from a file.
    Stratify(FileArgs),
    /// Associated forms of tuples read from a file.
    Assoc(FileArgs),
}

impl Command {
    pub fn suite(&self) -> &'static str {
        match self {
            Command::Identities(_) => "identities",
            Command::Tangent(_) => "tangent",
            Command::Relations(_) => "relations",
            Command::Koszul(_) => "koszul",
            Command::Stratify(_) => "stratify",
            Command::Assoc(_) => "assoc",
        }
    }
}

#[derive(Args, Clone, Debug, PartialEq, Eq)]
pub struct TrialArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub d: usize,
    #[arg(long, default_value_t = 5)]
    pub trials: usize,
    /// Trial `i` samples with seed `seed + i`.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Coefficients are drawn uniformly from `[-coeff_bound, coeff_bound]`.
    #[arg(long, default_value_t = DEFAULT_COEFF_BOUND)]
    pub coeff_bound: i64,
    #[arg(long, default_value_t = DEFAULT_MAX_ATTEMPTS)]
    pub max_attempts: usize,
}

#[derive(Args, Clone, Debug, PartialEq, Eq)]
pub struct IdentityRanges {
    /// Restrict to these identities (comma separated).
    #[arg(long, value_delimiter = ',')]
    pub only: Vec<IdentityId>,
    #[arg(long, default_value_t = 40)]
    pub max_p: usize,
    #[arg(long, default_value_t = 40)]
    pub max_r: usize,
    #[arg(long, default_value_t = 30)]
    pub a3_max_n: usize,
    #[arg(long, default_value_t = 30)]
    pub aux_max_n: usize,
    #[arg(long, default_value_t = 40)]
    pub aux_max_m: usize,
    #[arg(long, default_value_t = 12)]
    pub dimt2_max_n: usize,
    #[arg(long, default_value_t = 12)]
    pub dimt2_max_d: usize,
    #[arg(long, default_value_t = 3)]
    pub delta_max_s: usize,
    #[arg(long, default_value_t = 5)]
    pub delta_max_n: usize,
}

impl Default for IdentityRanges {
    fn default() -> Self {
        IdentityRanges {
            only: Vec::new(),
            max_p: 40,
            max_r: 40,
            a3_max_n: 30,
            aux_max_n: 30,
            aux_max_m: 40,
            dimt2_max_n: 12,
            dimt2_max_d: 12,
            delta_max_s: 3,
            delta_max_n: 5,
        }
    }
}

impl IdentityRanges {
    fn wants(&self, id: IdentityId) -> bool {
        self.only.is_empty() || self.only.contains(&id)
    }
}

/// Input file: a header line `n d`, then one form per line. Blank lines and
/// lines starting with `#` are skipped. For `assoc`, consecutive groups of
/// `n` forms are tuples.
#[derive(Args, Clone, Debug, PartialEq, Eq)]
pub struct FileArgs {
    pub input: PathBuf,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub jobs: Option<usize>,
    pub output_path: Option<PathBuf>,
    pub csv_path: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig {
            command,
            jobs: None,
            output_path: None,
            csv_path: None,
        }
    }

    fn validate(&self) -> Result<()> {
        if let Command::Tangent(t) | Command::Relations(t) | Command::Koszul(t) = &self.command {
            if t.trials == 0 {
                return Err(Error::Precondition("--trials must be at least 1".into()));
            }
            if t.coeff_bound < 1 {
                return Err(Error::Precondition("--coeff-bound must be at least 1".into()));
            }
            if t.n < 2 || t.d < 2 {
                return Err(Error::Precondition(format!("need n, d >= 2 (got n = {}, d = {})", t.n, t.d)));
            }
        }
        if self.jobs == Some(0) {
            return Err(Error::Precondition("--jobs must be at least 1".into()));
        }
        Ok(())
    }
}

/// One line of a report.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Record {
    pub suite: &'static str,
    pub index: usize,
    pub ok: bool,
    #[serde(flatten)]
    pub detail: Value,
}

/// Counts for one suite, plus free-form notes for the human summary.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub suite: String,
    pub records: usize,
    pub ok: usize,
    pub failed: usize,
    pub notes: Vec<String>,
}

impl Summary {
    pub fn of(suite: &str, records: &[Record]) -> Self {
        let ok = records.iter().filter(|r| r.ok).count();
        Summary {
            suite: suite.to_string(),
            records: records.len(),
            ok,
            failed: records.len() - ok,
            notes: Vec::new(),
        }
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn texts(f: &FormTuple) -> Vec<String> {
    f.forms().iter().map(|g| g.to_text('x')).collect()
}

fn identity_record(index: usize, r: IdentityResult) -> Record {
    Record {
        suite: "identities",
        index,
        ok: !r.is_failure(),
        detail: to_value(&r),
    }
}

fn identity_results(ranges: &IdentityRanges) -> Result<Vec<IdentityResult>> {
    type Task = Box<dyn Fn() -> Result<Vec<IdentityResult>> + Send + Sync>;
    let mut tasks: Vec<Task> = Vec::new();
    if ranges.wants(IdentityId::A1) {
        for p in 1..=ranges.max_p {
            for r in 1..=ranges.max_r {
                tasks.push(Box::new(move || Ok(vec![check_a1(p, r)?])));
            }
        }
    }
    if ranges.wants(IdentityId::A2) {
        for p in 1..=ranges.max_p {
            for r in 1..=ranges.max_r {
                tasks.push(Box::new(move || Ok(vec![check_a2(p, r)?])));
            }
        }
    }
    if ranges.wants(IdentityId::A3) {
        for n in 5..=ranges.a3_max_n {
            for m in 5..=n + 1 {
                tasks.push(Box::new(move || Ok(vec![check_a3(n, m)?])));
            }
        }
    }
    let (first, second) = (ranges.wants(IdentityId::Aux788), ranges.wants(IdentityId::Aux778));
    if first || second {
        for n in 2..=ranges.aux_max_n {
            for m in 1..=ranges.aux_max_m {
                tasks.push(Box::new(move || {
                    let (a, b) = check_aux(n, m)?;
                    Ok([(first, a), (second, b)].into_iter().filter(|(w, _)| *w).map(|(_, r)| r).collect())
                }));
            }
        }
    }
    if ranges.wants(IdentityId::Dimt2EqN) {
        for n in 2..=ranges.dimt2_max_n {
            for d in 2..=ranges.dimt2_max_d {
                tasks.push(Box::new(move || Ok(vec![check_dimt2_equals_n(n, d)?])));
            }
        }
    }
    if ranges.wants(IdentityId::DeltaConsistency) {
        for s in 1..=ranges.delta_max_s {
            for n in 2..=ranges.delta_max_n {
                tasks.push(Box::new(move || Ok(vec![check_delta_consistency(s, n)?])));
            }
        }
    }
    let chunks: Vec<Vec<IdentityResult>> = tasks.par_iter().map(|t| t()).collect::<Result<_>>()?;
    Ok(chunks.into_iter().flatten().collect())
}

fn trial_seed(t: &TrialArgs, i: usize) -> u64 {
    t.seed.wrapping_add(i as u64)
}

fn sample(t: &TrialArgs, seed: u64) -> Result<FormTuple> {
    random_ci_tuple_with_cap(t.n, t.d, seed, t.coeff_bound, t.max_attempts)
}

fn error_record(suite: &'static str, index: usize, seed: u64, t: &TrialArgs, e: &Error) -> Record {
    Record {
        suite,
        index,
        ok: false,
        detail: json!({ "seed": seed, "n": t.n, "d": t.d, "error": e.to_string() }),
    }
}

fn tangent_trial(t: &TrialArgs, index: usize) -> Record {
    let seed = trial_seed(t, index);
    let run = || -> Result<Record> {
        let f = sample(t, seed)?;
        let report = tangent_dim(&associated_form(&f)?, t.d)?;
        Ok(Record {
            suite: "tangent",
            index,
            ok: report.matches_expected() && report.relations_agree(),
            detail: json!({ "seed": seed, "forms": texts(&f), "report": report }),
        })
    };
    run().unwrap_or_else(|e| error_record("tangent", index, seed, t, &e))
}

fn relations_trial(t: &TrialArgs, index: usize) -> Record {
    let seed = trial_seed(t, index);
    let run = || -> Result<Record> {
        let formula = relation_space_dim_formula(t.n, t.d)?;
        let f = sample(t, seed)?;
        let brute = relation_space_dim_bruteforce(&f)?;
        Ok(Record {
            suite: "relations",
            index,
            ok: formula == brute.into(),
            detail: json!({
                "seed": seed,
                "n": t.n,
                "d": t.d,
                "forms": texts(&f),
                "dim_R_bruteforce": brute,
                "dim_R_formula": formula.to_string(),
            }),
        })
    };
    run().unwrap_or_else(|e| error_record("relations", index, seed, t, &e))
}

fn koszul_trial(t: &TrialArgs, index: usize) -> Record {
    let seed = trial_seed(t, index);
    let run = || -> Result<Record> {
        let top = t.n * (t.d - 1);
        if top < 2 * t.d {
            return Err(Error::Precondition(format!(
                "no admissible ρ: n(d-1) - d < d for n = {}, d = {}",
                t.n, t.d
            )));
        }
        let f = sample(t, seed)?;
        let checks = (t.d..=top - t.d)
            .map(|rho| koszul_kernel_check(&f, rho))
            .collect::<Result<Vec<_>>>()?;
        Ok(Record {
            suite: "koszul",
            index,
            ok: checks.iter().all(|c| c.holds()),
            detail: json!({ "seed": seed, "forms": texts(&f), "checks": checks }),
        })
    };
    run().unwrap_or_else(|e| error_record("koszul", index, seed, t, &e))
}

fn trials(t: &TrialArgs, run: fn(&TrialArgs, usize) -> Record) -> Vec<Record> {
    (0..t.trials).into_par_iter().map(|i| run(t, i)).collect()
}

/// Header `n d` and the remaining content lines with their 1-based numbers.
fn read_input(path: &Path) -> Result<(usize, usize, Vec<(usize, String)>)> {
    let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim().to_string()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::Precondition(format!("{}: missing `n d` header", path.display())))?;
    let nums: Vec<usize> = header
        .split_whitespace()
        .map(str::parse)
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::Precondition(format!("line {hline}: `{header}`: expected `n d`")))?;
    let [n, d] = nums[..] else {
        return Err(Error::Precondition(format!("line {hline}: `{header}`: expected `n d`")));
    };
    Ok((n, d, lines.collect()))
}

fn echo<T>(line: usize, text: &str, r: Result<T>) -> Result<T> {
    r.map_err(|e| Error::Precondition(format!("line {line}: `{text}`: {e}")))
}

fn stratify_file(path: &Path) -> Result<Vec<Record>> {
    let (n, d, lines) = read_input(path)?;
    let parsed = lines
        .iter()
        .map(|(k, text)| echo(*k, text, Polynomial::parse(text, n)))
        .collect::<Result<Vec<_>>>()?;
    let reports = parsed
        .par_iter()
        .zip(&lines)
        .map(|(f, (k, text))| echo(*k, text, stratify(f, d)))
        .collect::<Result<Vec<_>>>()?;
    Ok(reports
        .into_iter()
        .zip(&lines)
        .enumerate()
        .map(|(index, (report, (k, text)))| Record {
            suite: "stratify",
            index,
            ok: report.is_coherent(),
            detail: json!({ "line": k, "form": text, "n": n, "d": d, "report": report }),
        })
        .collect())
}

fn assoc_file(path: &Path) -> Result<Vec<Record>> {
    let (n, d, lines) = read_input(path)?;
    if lines.len() % n != 0 {
        return Err(Error::Precondition(format!(
            "{}: {} forms do not split into tuples of {n}",
            path.display(),
            lines.len()
        )));
    }
    let groups: Vec<&[(usize, String)]> = lines.chunks(n).collect();
    groups
        .par_iter()
        .enumerate()
        .map(|(index, group)| {
            let (k, first) = &group[0];
            let forms = group
                .iter()
                .map(|(k, text)| echo(*k, text, Polynomial::parse(text, n)))
                .collect::<Result<Vec<_>>>()?;
            let f = echo(*k, first, FormTuple::new(d, forms))?;
            let a = echo(*k, first, associated_form(&f))?;
            let inverse = verify_inverse_system(&f, &a)?;
            let roundtrip = roundtrip_span(&f)?;
            Ok(Record {
                suite: "assoc",
                index,
                ok: inverse && roundtrip,
                detail: json!({
                    "line": k,
                    "forms": texts(&f),
                    "associated_form": a.to_text('y'),
                    "inverse_system": inverse,
                    "roundtrip_span": roundtrip,
                }),
            })
        })
        .collect()
}

/// Run one suite on the current thread pool.
pub fn run_suite(config: &RunConfig) -> Result<(Vec<Record>, Summary)> {
    config.validate()?;
    let suite = config.command.suite();
    let mut notes = Vec::new();
    let records = match &config.command {
        Command::Identities(ranges) => {
            if ranges.wants(IdentityId::A3) && ranges.a3_max_n >= 5 {
                let c = compare_a3_readings(ranges.a3_max_n);
                notes.push(format!(
                    "A3 constraint readings over {} instances: r_l >= 2 matches {}, all r_i >= 1 matches {}",
                    c.instances, c.last_at_least_two_passes, c.all_positive_passes
                ));
            }
            identity_results(ranges)?
                .into_iter()
                .enumerate()
                .map(|(i, r)| identity_record(i, r))
                .collect()
        }
        Command::Tangent(t) => trials(t, tangent_trial),
        Command::Relations(t) => trials(t, relations_trial),
        Command::Koszul(t) => trials(t, koszul_trial),
        Command::Stratify(f) => stratify_file(&f.input)?,
        Command::Assoc(f) => assoc_file(&f.input)?,
    };
    let mut summary = Summary::of(suite, &records);
    summary.notes = notes;
    Ok((records, summary))
}

/// One JSON object per line, in record order.
pub fn emit_report<W: Write>(records: &[Record], out: &mut W) -> io::Result<()> {
    for r in records {
        serde_json::to_writer(&mut *out, r)?;
        out.write_all(b"\n")?;
    }
    out.flush()
}

pub fn write_csv<W: Write>(summary: &Summary, out: &mut W) -> io::Result<()> {
    writeln!(out, "suite,records,ok,failed")?;
    writeln!(out, "{},{},{},{}", summary.suite, summary.records, summary.ok, summary.failed)
}

fn human_summary(records: &[Record], summary: &Summary) -> String {
    let mut s = format!(
        "{}: {} records, {} ok, {} failed\n",
        summary.suite, summary.records, summary.ok, summary.failed
    );
    for note in &summary.notes {
        s.push_str(&format!("  {note}\n"));
    }
    for r in records.iter().filter(|r| !r.ok).take(20) {
        s.push_str(&format!("  FAIL #{}: {}\n", r.index, r.detail));
    }
    s
}

fn execute(config: &RunConfig) -> Result<i32> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs.unwrap_or(0))
        .build()
        .map_err(|e| Error::Precondition(e.to_string()))?;
    let (records, summary) = pool.install(|| run_suite(config))?;
    match &config.output_path {
        Some(path) => emit_report(&records, &mut BufWriter::new(fs::File::create(path)?))?,
        None => emit_report(&records, &mut BufWriter::new(io::stdout().lock()))?,
    }
    if let Some(path) = &config.csv_path {
        write_csv(&summary, &mut BufWriter::new(fs::File::create(path)?))?;
    }
    eprint!("{}", human_summary(&records, &summary));
    Ok(if summary.failed == 0 { 0 } else { 1 })
}

/// Parse arguments (including the program name) and run; returns the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return code;
        }
    };
    let config = RunConfig {
        command: cli.command,
        jobs: cli.jobs,
        output_path: cli.out,
        csv_path: cli.csv,
    };
    match execute(&config) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial(n: usize, d: usize, trials: usize) -> TrialArgs {
        TrialArgs {
            n,
            d,
            trials,
            seed: 42,
            coeff_bound: 5,
            max_attempts: 100,
        }
    }

    #[test]
    fn parses_subcommands() {
        let cli = Cli::try_parse_from(["catalecticant", "tangent", "--n", "3", "--d", "3", "--trials", "2", "--seed", "7"]).unwrap();
        assert_eq!(
            cli.command,
            Command::Tangent(TrialArgs {
                seed: 7,
                ..trial(3, 3, 2)
            })
        );
        let cli = Cli::try_parse_from(["catalecticant", "identities", "--only", "A1,aux788", "--max-p", "3"]).unwrap();
        let Command::Identities(r) = cli.command else { panic!() };
        assert_eq!(r.only, vec![IdentityId::A1, IdentityId::Aux788]);
        assert!(Cli::try_parse_from(["catalecticant", "identities", "--only", "B7"]).is_err());
    }

    #[test]
    fn invalid_configs_are_rejected() {
        let mut t = trial(3, 3, 0);
        assert!(run_suite(&RunConfig::new(Command::Tangent(t.clone()))).is_err());
        t.trials = 1;
        t.coeff_bound = 0;
        assert!(run_suite(&RunConfig::new(Command::Relations(t))).is_err());
    }

    #[test]
    fn small_identity_run() {
        let ranges = IdentityRanges {
            max_p: 4,
            max_r: 4,
            a3_max_n: 7,
            aux_max_n: 4,
            aux_max_m: 4,
            dimt2_max_n: 4,
            dimt2_max_d: 4,
            delta_max_s: 1,
            delta_max_n: 3,
            ..IdentityRanges::default()
        };
        let (records, summary) = run_suite(&RunConfig::new(Command::Identities(ranges))).unwrap();
        // 16 + 16 + (2 + 3 + 4) + 2 * 3 * 4 + 9 + 2
        assert_eq!(records.len(), 16 + 16 + 9 + 24 + 9 + 2);
        assert_eq!(summary.failed, 0);
        assert_eq!(summary.notes.len(), 1);
        // The m = 1 aux instances are recorded but are not failures.
        assert!(records.iter().any(|r| r.detail["expected_exception"] == true));
    }

    #[test]
    fn reports_are_deterministic() {
        let config = RunConfig::new(Command::Koszul(trial(3, 3, 2)));
        let mut a = Vec::new();
        let mut b = Vec::new();
        emit_report(&run_suite(&config).unwrap().0, &mut a).unwrap();
        emit_report(&run_suite(&config).unwrap().0, &mut b).unwrap();
        assert_eq!(a, b);
        assert_eq!(String::from_utf8(a).unwrap().lines().count(), 2);
    }

    #[test]
    fn empty_report() {
        let mut out = Vec::new();
        emit_report(&[], &mut out).unwrap();
        assert!(out.is_empty());
        assert_eq!(Summary::of("x", &[]).failed, 0);
    }

    #[test]
    fn sampling_failures_become_failed_records() {
        let mut t = trial(2, 2, 1);
        t.max_attempts = 0;
        let (records, summary) = run_suite(&RunConfig::new(Command::Tangent(t))).unwrap();
        assert_eq!(summary.failed, 1);
        assert!(records[0].detail["error"].as_str().unwrap().contains("attempts"));
    }
}
