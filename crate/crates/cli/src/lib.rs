//! The `warpdeg` command line: argument grammar and command execution.

pub mod records;

use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use records::{
    AnalysisRecord, ConversionRecord, DiagramRecord, ErrorRecord, OracleRecord, Record, VerdictRecord,
};
use warpdeg::codes::{gauss_to_dt, gauss_to_pd, parse_any, GaussCode, Notation};
use warpdeg::families::{ozawa_twist, rational_pq, twist_minimal};
use warpdeg::oracle::{min_changes_to_monotone_capped, random_gauss_code, MONOTONE_SEARCH_CAP};
use warpdeg::table::{verify_families, verify_table, Table, VerificationReport};
use warpdeg::warping::{is_monotone, profile, summary, warping_degree};
use warpdeg::OrientedDiagram;

/// Seed of the randomized checks in `verify` when `--seed` is absent.
pub const DEFAULT_SEED: u64 = 0x5eed;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "warpdeg", version, about = "Warping degrees and warping sums of knot diagrams")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Notation of the input code; for `generate` and `convert`, of the output.
    #[arg(long, global = true, value_enum, default_value_t = Format::Auto)]
    pub format: Format,

    /// Human-readable text or one JSON record per line.
    #[arg(long, global = true, value_enum, default_value_t = OutputMode::Text)]
    pub output: OutputMode,

    /// Seed for randomized checks and random diagrams.
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// Largest crossing count the brute-force oracle will search.
    #[arg(long = "oracle-cap", global = true)]
    pub oracle_cap: Option<usize>,

    /// Knot table to verify instead of the bundled one.
    #[arg(long, global = true, env = "WARPDEG_TABLE")]
    pub table: Option<PathBuf>,

    /// Print only the essential result line.
    #[arg(long, global = true)]
    pub quiet: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Warping degrees, warping sum, span, profile and polynomial of a diagram.
    Analyze {
        /// A code, a file holding one, or `-` for stdin.
        input: String,
    },
    /// Compare the warping degree with a brute-force crossing-change search.
    Oracle { input: String },
    /// Print a diagram from a parameterized family.
    Generate {
        #[arg(value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: Option<i64>,
        #[arg(long)]
        p: Option<i64>,
        #[arg(long)]
        q: Option<i64>,
    },
    /// Analyze every code in a file, one per line (`-` for stdin).
    Batch { file: String },
    /// Check the knot table and the diagram families.
    Verify,
    /// Re-encode a code in the notation given by `--format`.
    Convert { input: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Auto,
    Gauss,
    Dt,
    Pd,
}

impl Format {
    fn notation(self) -> Option<Notation> {
        match self {
            Format::Auto => None,
            Format::Gauss => Some(Notation::Gauss),
            Format::Dt => Some(Notation::Dt),
            Format::Pd => Some(Notation::Pd),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputMode {
    Text,
    Records,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    /// Twist knot `2 n` (`--n`).
    Twist,
    /// Two-bridge diagram `p q` (`--p`, `--q`).
    Rational,
    /// Warping-sum-2 diagram of the twist knot `2 n` (`--n`).
    Ozawa,
    /// Random abstract Gauss code with `--n` crossings (`--seed`).
    Random,
}

enum Failure {
    Usage(String),
    Check,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

struct Ctx<'a> {
    cli: &'a Cli,
    out: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn records(&self) -> bool {
        self.cli.output == OutputMode::Records
    }

    fn emit(&mut self, record: Record) -> io::Result<()> {
        writeln!(self.out, "{}", record.to_line())
    }
}

/// Run the command line and return the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    let mut ctx = Ctx { cli: &cli, out };
    match execute(&mut ctx) {
        Ok(()) => EXIT_OK,
        Err(Failure::Check) => EXIT_CHECK_FAILED,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn execute(ctx: &mut Ctx) -> Result<(), Failure> {
    match &ctx.cli.command {
        Command::Analyze { input } => {
            let code = parse_any(&read_input(input)?, ctx.cli.format.notation())?;
            let rec = analysis(&code, None)?;
            if ctx.records() {
                ctx.emit(Record::Analysis(rec))?;
            } else {
                write_analysis(ctx, &rec)?;
            }
            Ok(())
        }
        Command::Oracle { input } => {
            let code = parse_any(&read_input(input)?, ctx.cli.format.notation())?;
            oracle(ctx, &code)
        }
        Command::Generate { family, n, p, q } => generate(ctx, *family, *n, *p, *q),
        Command::Batch { file } => batch(ctx, file),
        Command::Verify => verify(ctx),
        Command::Convert { input } => {
            let to = ctx
                .cli
                .format
                .notation()
                .ok_or_else(|| Failure::Usage("convert needs --format gauss, dt or pd".into()))?;
            let text = read_input(input)?;
            let from = Notation::detect(&text).map(|n| n.name()).unwrap_or("gauss");
            let code = encode(&parse_any(&text, None)?, to)?;
            if ctx.records() {
                let rec = ConversionRecord { from: from.into(), to: to.name().into(), code };
                ctx.emit(Record::Conversion(rec))?;
            } else {
                writeln!(ctx.out, "{code}")?;
            }
            Ok(())
        }
    }
}

/// Inline code, a path to a file holding one, or `-` for stdin.
fn read_input(input: &str) -> Result<String, Failure> {
    if input == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    let path = Path::new(input);
    if path.is_file() {
        return Ok(std::fs::read_to_string(path)?);
    }
    Ok(input.to_string())
}

fn encode(code: &GaussCode, to: Notation) -> Result<String, Failure> {
    Ok(match to {
        Notation::Gauss => code.to_string(),
        Notation::Dt => gauss_to_dt(code)?.to_string(),
        Notation::Pd => gauss_to_pd(code)?.to_string(),
    })
}

fn analysis(code: &GaussCode, line: Option<usize>) -> Result<AnalysisRecord, Failure> {
    let d = OrientedDiagram::from_gauss(code);
    let s = summary(&d)?;
    Ok(AnalysisRecord {
        line,
        code: code.to_string(),
        c: s.c,
        d_fwd: s.d_fwd,
        d_rev: s.d_rev,
        e: s.e,
        spn: s.spn,
        profile: profile(&d).degrees().to_vec(),
        polynomial: s.polynomial,
        monotone: is_monotone(&d),
    })
}

fn degrees_line(r: &AnalysisRecord) -> String {
    format!("d(D)={} d(-D)={} e={} spn={}", r.d_fwd, r.d_rev, r.e, r.spn)
}

fn joined(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn write_analysis(ctx: &mut Ctx, r: &AnalysisRecord) -> io::Result<()> {
    if ctx.cli.quiet {
        return writeln!(ctx.out, "{}", degrees_line(r));
    }
    writeln!(ctx.out, "code: {}", r.code)?;
    writeln!(ctx.out, "c={}", r.c)?;
    writeln!(ctx.out, "{}", degrees_line(r))?;
    writeln!(ctx.out, "profile: {}", joined(&r.profile))?;
    writeln!(ctx.out, "polynomial: {}", joined(&r.polynomial))?;
    writeln!(ctx.out, "monotone: {}", if r.monotone { "yes" } else { "no" })
}

fn oracle(ctx: &mut Ctx, code: &GaussCode) -> Result<(), Failure> {
    let cap = ctx.cli.oracle_cap.unwrap_or(MONOTONE_SEARCH_CAP);
    let d = OrientedDiagram::from_gauss(code);
    let mut all_agree = true;
    for (label, x) in [("D", d.clone()), ("-D", d.reverse())] {
        let result = min_changes_to_monotone_capped(&x, x.crossing_count(), cap)?;
        let fast = warping_degree(&x);
        let agrees = result.min_changes == fast;
        all_agree &= agrees;
        let rec = OracleRecord {
            code: x.to_gauss().to_string(),
            orientation: label.into(),
            min_changes: result.min_changes,
            witness: result.witness,
            nodes_searched: result.nodes_searched,
            warping_degree: fast,
            agrees,
        };
        if ctx.records() {
            ctx.emit(Record::Oracle(rec))?;
        } else if !ctx.cli.quiet {
            writeln!(
                ctx.out,
                "{:<2} min_changes={} witness={:?} nodes={} d={} {}",
                rec.orientation,
                rec.min_changes,
                rec.witness,
                rec.nodes_searched,
                rec.warping_degree,
                if agrees { "agree" } else { "DISAGREE" }
            )?;
        }
    }
    if !ctx.records() {
        writeln!(ctx.out, "verdict: {}", if all_agree { "AGREE" } else { "DISAGREE" })?;
    }
    if all_agree {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn generate(
    ctx: &mut Ctx,
    family: FamilyArg,
    n: Option<i64>,
    p: Option<i64>,
    q: Option<i64>,
) -> Result<(), Failure> {
    let need = |v: Option<i64>, flag: &str| v.ok_or_else(|| Failure::Usage(format!("this family needs {flag}")));
    let (name, params, diagram) = match family {
        FamilyArg::Twist => {
            let n = need(n, "--n")?;
            ("twist", vec![n], twist_minimal(n)?)
        }
        FamilyArg::Rational => {
            let (p, q) = (need(p, "--p")?, need(q, "--q")?);
            ("rational", vec![p, q], rational_pq(p, q)?)
        }
        FamilyArg::Ozawa => {
            let n = need(n, "--n")?;
            ("ozawa", vec![n], ozawa_twist(n)?)
        }
        FamilyArg::Random => {
            let n = need(n, "--n")?;
            let c = usize::try_from(n).map_err(|_| Failure::Usage(format!("--n must be non-negative, got {n}")))?;
            let mut rng = ChaCha8Rng::seed_from_u64(ctx.cli.seed.unwrap_or(DEFAULT_SEED));
            ("random", vec![n], OrientedDiagram::from_gauss(&random_gauss_code(c, &mut rng)))
        }
    };
    let to = ctx.cli.format.notation().unwrap_or(Notation::Gauss);
    let code = encode(&diagram.to_gauss(), to)?;
    if ctx.records() {
        let rec = DiagramRecord {
            family: name.into(),
            params,
            c: diagram.crossing_count(),
            notation: to.name().into(),
            code,
        };
        ctx.emit(Record::Diagram(rec))?;
    } else {
        writeln!(ctx.out, "{code}")?;
    }
    Ok(())
}

fn batch(ctx: &mut Ctx, file: &str) -> Result<(), Failure> {
    let text = if file == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(file).map_err(|e| Failure::Usage(format!("{file}: {e}")))?
    };
    let mut failed = 0;
    for (i, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let lineno = i + 1;
        let result = parse_any(body, ctx.cli.format.notation())
            .map_err(|e| e.to_string())
            .and_then(|code| analysis(&code, Some(lineno)).map_err(|_| "inconsistent diagram".to_string()));
        match result {
            Ok(rec) if ctx.records() => ctx.emit(Record::Analysis(rec))?,
            Ok(rec) => writeln!(ctx.out, "line {lineno}: c={} {}", rec.c, degrees_line(&rec))?,
            Err(message) => {
                failed += 1;
                if ctx.records() {
                    ctx.emit(Record::Error(ErrorRecord { line: Some(lineno), message }))?;
                } else {
                    writeln!(ctx.out, "line {lineno}: error: {message}")?;
                }
            }
        }
    }
    if failed > 0 {
        return Err(Failure::Usage(format!("{failed} line(s) could not be analyzed")));
    }
    Ok(())
}

fn verify(ctx: &mut Ctx) -> Result<(), Failure> {
    let table = match &ctx.cli.table {
        Some(path) => Table::load(path)?,
        None => Table::bundled(),
    };
    let mut report: VerificationReport = verify_table(&table);
    report.extend(verify_families(ctx.cli.seed.unwrap_or(DEFAULT_SEED)));
    let failed = report.failures().count();
    if ctx.records() {
        for check in &report.checks {
            ctx.emit(Record::Check(check.clone()))?;
        }
        ctx.emit(Record::Verdict(VerdictRecord { passed: failed == 0, checks: report.checks.len(), failed }))?;
    } else {
        let text = report.render_text();
        if ctx.cli.quiet {
            for c in report.failures() {
                writeln!(ctx.out, "FAIL {} {} {}", c.name, c.scope, c.details)?;
            }
            write!(ctx.out, "{}", text.lines().last().map(|l| format!("{l}\n")).unwrap_or_default())?;
        } else {
            write!(ctx.out, "{text}")?;
        }
    }
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}
