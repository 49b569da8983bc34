//! Command-line front end: sequence, triangle, determinant and series dumps,
//! and verification runs.
//!
//! Exit codes: 0 on success (for `verify`, every report verified), 1 when a
//! verification fails or an internal error occurs, 2 on usage errors.

use std::fmt::Write as _;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::hankel::{hankel_det, hankel_sequence};
use crate::ring::{Poly, Ring};
use crate::sequences::{AdmissibleTable, WeightSpec};
use crate::series::{motzkin_power, motzkin_series, reciprocal_power_coeffs};
use crate::verify::{self, CheckReport, ClaimId, Status};

pub const DEFAULT_ORDER: usize = 16;
pub const DEFAULT_N_MAX: usize = 8;

#[derive(Parser, Debug)]
#[command(
    name = "catalan-hankel",
    version,
    about = "Exact Hankel determinants of Catalan-like number triangles",
    after_help = "Weight specs: const:<v> | explicit:<v>,<v>,...[;tail=<v>] | shift^<j>:<spec>, \
                  where <v> is an integer or the symbol c.\n\
                  Exit codes: 0 success, 1 verification failure, 2 usage error."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Column k of the triangle: a(0,k), ..., a(n-1,k).
    Seq(SeqArgs),
    /// Rows 0..=n of the triangle.
    Table(TableArgs),
    /// Hankel determinant D(m,k,n), or the sequence D(m,k,0..=n-max).
    Det(DetArgs),
    /// Coefficients of A(x,c), x^k A^(k+1), or 1/A^(k+1).
    Series(SeriesArgs),
    /// Run a verification check.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
pub struct WeightArgs {
    /// Weight sequence spec.
    #[arg(long)]
    pub weights: Option<String>,
    /// Constant weight: an integer or `sym` for the symbol c. Shorthand for `--weights const:<c>`.
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Bfile,
}

#[derive(Args, Debug)]
pub struct SeqArgs {
    #[command(flatten)]
    pub weights: WeightArgs,
    #[arg(long, default_value_t = 0)]
    pub k: usize,
    /// Number of terms.
    #[arg(long, default_value_t = DEFAULT_N_MAX)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[command(flatten)]
    pub weights: WeightArgs,
    /// Last row.
    #[arg(long, default_value_t = DEFAULT_N_MAX)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct DetArgs {
    #[command(flatten)]
    pub weights: WeightArgs,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0)]
    pub m: i64,
    #[arg(long, default_value_t = 0)]
    pub k: usize,
    /// Matrix size.
    #[arg(long, conflicts_with = "n_max")]
    pub n: Option<usize>,
    /// Emit D(m,k,n) for n = 0..=n-max.
    #[arg(long)]
    pub n_max: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeriesKind {
    /// A(x,c)
    Motzkin,
    /// x^k A(x,c)^(k+1), i.e. column k of the triangle
    Power,
    /// 1/A(x,c)^(k+1)
    Reciprocal,
}

#[derive(Args, Debug)]
pub struct SeriesArgs {
    /// Integer or `sym`.
    #[arg(long, allow_hyphen_values = true, default_value = "1")]
    pub c: String,
    #[arg(long, default_value_t = 0)]
    pub k: usize,
    #[arg(long, default_value_t = DEFAULT_ORDER)]
    pub order: usize,
    #[arg(long, value_enum, default_value_t = SeriesKind::Motzkin)]
    pub kind: SeriesKind,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ClaimArg {
    Lemma13,
    Theorem1,
    Theorem2,
    Corollary6,
    #[value(name = "identities7_8")]
    Identities78,
    #[value(name = "conjectures9_10")]
    Conjectures910,
    SeriesIdentities,
    Theorem3,
    All,
}

impl ClaimArg {
    fn claims(self) -> Vec<ClaimId> {
        match self {
            ClaimArg::Lemma13 => vec![ClaimId::Lemma13],
            ClaimArg::Theorem1 => vec![ClaimId::Theorem1],
            ClaimArg::Theorem2 => vec![ClaimId::Theorem2],
            ClaimArg::Corollary6 => vec![ClaimId::Corollary6],
            ClaimArg::Identities78 => vec![ClaimId::Identities7_8],
            ClaimArg::Conjectures910 => vec![ClaimId::Conjectures9_10],
            ClaimArg::SeriesIdentities => vec![ClaimId::SeriesIdentities],
            ClaimArg::Theorem3 => vec![ClaimId::Theorem3],
            ClaimArg::All => ClaimId::ALL.to_vec(),
        }
    }
}

/// Defaults when a bound is not given: `--n-max 8` (4 for the lemma and the
/// conjectures, where it is a block index), `--m-max 3`, `--k-max 3`,
/// `--order 16` (20 for the lemma), `--trials 40` for theorem1 and 100 for
/// the lemma, `--rng-seed 0`.
#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub claim: ClaimArg,
    /// Integer or `sym`.
    #[arg(long, allow_hyphen_values = true, default_value = "1")]
    pub c: String,
    /// Weight spec for theorem1; without it, seeded random specs are used.
    #[arg(long)]
    pub weights: Option<String>,
    #[arg(long)]
    pub m_max: Option<usize>,
    #[arg(long)]
    pub k_max: Option<usize>,
    #[arg(long)]
    pub n_max: Option<usize>,
    #[arg(long)]
    pub order: Option<usize>,
    #[arg(long)]
    pub trials: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub rng_seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

/// Either coefficient ring, chosen once per invocation.
enum Scalar {
    Int(BigInt),
    Sym(Poly),
}

fn parse_c(s: &str) -> Result<Scalar> {
    match s.trim() {
        "sym" | "c" => Ok(Scalar::Sym(Poly::var())),
        v => v
            .parse::<BigInt>()
            .map(Scalar::Int)
            .map_err(|_| Error::Usage(format!("--c expects an integer or `sym`, got `{v}`"))),
    }
}

enum Weights {
    Int(WeightSpec<BigInt>),
    Sym(WeightSpec<Poly>),
}

fn parse_weights(args: &WeightArgs) -> Result<Weights> {
    let spec: WeightSpec<Poly> = match (&args.weights, &args.c) {
        (Some(w), None) => w.parse()?,
        (None, Some(c)) => match parse_c(c)? {
            Scalar::Int(v) => WeightSpec::constant(Poly::constant(v)),
            Scalar::Sym(p) => WeightSpec::constant(p),
        },
        (Some(_), Some(_)) => return Err(Error::Usage("give either --weights or --c, not both".into())),
        (None, None) => {
            return Err(Error::Usage(
                "one of --weights <spec> or --c <int|sym> is required".into(),
            ))
        }
    };
    Ok(match spec.to_integer() {
        Some(w) => Weights::Int(w),
        None => Weights::Sym(spec),
    })
}

/// Renders a list of ring values in the requested format.
pub fn render_values<R: Ring>(values: &[R], offset: usize, format: Format) -> String {
    let rendered: Vec<String> = values.iter().map(ToString::to_string).collect();
    match format {
        Format::Text => format!("{}\n", rendered.join(",")),
        Format::Json => format!("{}\n", serde_json::to_string(&rendered).expect("strings serialize")),
        Format::Csv => {
            let mut s = String::from("n,value\n");
            for (i, v) in rendered.iter().enumerate() {
                let _ = writeln!(s, "{},{}", i + offset, csv_field(v));
            }
            s
        }
        Format::Bfile => {
            let mut s = String::new();
            for (i, v) in rendered.iter().enumerate() {
                let _ = writeln!(s, "{} {}", i + offset, v);
            }
            s
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_owned()
    }
}

fn seq_values<R: Ring>(w: &WeightSpec<R>, k: usize, n: usize) -> Result<Vec<R>> {
    if n == 0 {
        return Ok(Vec::new());
    }
    let t = AdmissibleTable::build(w, n - 1);
    (0..n as i64).map(|i| t.column(k, i)).collect()
}

fn table_rows<R: Ring>(w: &WeightSpec<R>, n: usize, format: Format) -> Result<String> {
    let t = AdmissibleTable::build(w, n);
    let rows: Vec<Vec<String>> = (0..=n)
        .map(|i| {
            t.row(i)
                .expect("row within table")
                .iter()
                .map(ToString::to_string)
                .collect()
        })
        .collect();
    Ok(match format {
        Format::Json => format!("{}\n", serde_json::to_string(&rows).expect("strings serialize")),
        Format::Csv => {
            let mut s = String::from("n,k,value\n");
            for (i, row) in rows.iter().enumerate() {
                for (k, v) in row.iter().enumerate() {
                    let _ = writeln!(s, "{i},{k},{}", csv_field(v));
                }
            }
            s
        }
        Format::Text | Format::Bfile => rows.iter().map(|r| format!("{}\n", r.join(","))).collect(),
    })
}

fn det_output<R: Ring>(w: &WeightSpec<R>, args: &DetArgs) -> Result<String> {
    match (args.n, args.n_max) {
        (_, Some(n_max)) => Ok(render_values(
            &hankel_sequence(w, args.m, args.k, n_max)?,
            0,
            args.format,
        )),
        (n, None) => {
            let v = hankel_det(w, args.m, args.k, n.unwrap_or(0))?;
            Ok(render_values(&[v], n.unwrap_or(0), args.format))
        }
    }
}

fn series_values<R: Ring>(c: &R, args: &SeriesArgs) -> Vec<R> {
    match args.kind {
        SeriesKind::Motzkin => motzkin_series(c, args.order).into_coeffs(),
        SeriesKind::Power => motzkin_power(c, args.k, args.order).shift_up(args.k).into_coeffs(),
        SeriesKind::Reciprocal => reciprocal_power_coeffs(c, args.k, args.order),
    }
}

fn run_claim<R: Ring>(claim: ClaimId, c: &R, args: &VerifyArgs) -> Result<CheckReport> {
    let m_max = args.m_max.unwrap_or(3);
    let k_max = args.k_max.unwrap_or(3);
    let n_max = args.n_max.unwrap_or(DEFAULT_N_MAX);
    match claim {
        ClaimId::Lemma13 => verify::check_lemma13_random(
            args.rng_seed,
            args.trials.unwrap_or(100),
            args.order.unwrap_or(20),
            args.n_max.unwrap_or(4),
            m_max,
        ),
        ClaimId::Theorem1 => match &args.weights {
            Some(w) => match parse_weights(&WeightArgs {
                weights: Some(w.clone()),
                c: None,
            })? {
                Weights::Int(w) => verify::check_theorem1(&w, m_max, n_max),
                Weights::Sym(w) => verify::check_theorem1(&w, m_max, n_max),
            },
            None => verify::check_theorem1_random(args.rng_seed, args.trials.unwrap_or(40), m_max, n_max),
        },
        ClaimId::Theorem2 => verify::check_theorem2(c, m_max, k_max, n_max),
        ClaimId::Corollary6 => verify::check_corollary6(c, k_max, n_max),
        ClaimId::Identities7_8 => verify::check_identities7_8(c, k_max, n_max),
        ClaimId::Conjectures9_10 => verify::check_conjectures9_10(c, m_max, k_max, args.n_max.unwrap_or(4)),
        ClaimId::SeriesIdentities => verify::check_series_identities(c, k_max, args.order.unwrap_or(DEFAULT_ORDER)),
        ClaimId::Theorem3 => verify::check_theorem3(c, k_max, n_max),
    }
}

/// Renders one report. `text`: summary line, clause lines, witness lines;
/// `json`: the report object; `csv`: one row per clause.
pub fn emit_report(r: &CheckReport, format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", serde_json::to_string(r).expect("report serializes")),
        Format::Csv | Format::Bfile => {
            let mut s = String::from(CSV_HEADER);
            s.push_str(&csv_rows(r));
            s
        }
        Format::Text => {
            let mut s = format!(
                "{}: {} ({} instances, {} failures)\n",
                r.claim_id,
                r.status.name(),
                r.instances_tested,
                r.failures.len()
            );
            for c in &r.clauses {
                let tag = if c.asserted { "" } else { " [diagnostic]" };
                let _ = writeln!(
                    s,
                    "  clause {}{}: {} ({} instances, {} failures)",
                    c.clause,
                    tag,
                    c.status.name(),
                    c.instances_tested,
                    c.failures.len()
                );
            }
            for w in &r.failures {
                let params: Vec<String> = w.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let _ = writeln!(
                    s,
                    "  witness [{}] {}: lhs = {}, rhs = {}",
                    w.category,
                    params.join(" "),
                    w.lhs,
                    w.rhs
                );
            }
            s
        }
    }
}

const CSV_HEADER: &str = "claim_id,clause,asserted,instances_tested,failures,status\n";

fn csv_rows(r: &CheckReport) -> String {
    r.clauses
        .iter()
        .map(|c| {
            format!(
                "{},{},{},{},{},{}\n",
                r.claim_id,
                csv_field(&c.clause),
                c.asserted,
                c.instances_tested,
                c.failures.len(),
                c.status.name()
            )
        })
        .collect()
}

fn emit_reports(reports: &[CheckReport], format: Format) -> String {
    match format {
        Format::Json if reports.len() == 1 => emit_report(&reports[0], format),
        Format::Json => format!("{}\n", serde_json::to_string(reports).expect("reports serialize")),
        Format::Csv | Format::Bfile => {
            let mut s = String::from(CSV_HEADER);
            for r in reports {
                s.push_str(&csv_rows(r));
            }
            s
        }
        Format::Text => reports.iter().map(|r| emit_report(r, format)).collect(),
    }
}

fn dispatch(cli: &Cli) -> Result<(String, bool)> {
    match &cli.command {
        Command::Seq(a) => {
            let out = match parse_weights(&a.weights)? {
                Weights::Int(w) => render_values(&seq_values(&w, a.k, a.n)?, 0, a.format),
                Weights::Sym(w) => render_values(&seq_values(&w, a.k, a.n)?, 0, a.format),
            };
            Ok((out, true))
        }
        Command::Table(a) => {
            let out = match parse_weights(&a.weights)? {
                Weights::Int(w) => table_rows(&w, a.n, a.format)?,
                Weights::Sym(w) => table_rows(&w, a.n, a.format)?,
            };
            Ok((out, true))
        }
        Command::Det(a) => {
            if a.n.is_none() && a.n_max.is_none() {
                return Err(Error::Usage("det needs --n <size> or --n-max <bound>".into()));
            }
            let out = match parse_weights(&a.weights)? {
                Weights::Int(w) => det_output(&w, a)?,
                Weights::Sym(w) => det_output(&w, a)?,
            };
            Ok((out, true))
        }
        Command::Series(a) => {
            if a.order == 0 {
                return Err(Error::Usage("--order must be at least 1".into()));
            }
            let out = match parse_c(&a.c)? {
                Scalar::Int(c) => render_values(&series_values(&c, a), 0, a.format),
                Scalar::Sym(c) => render_values(&series_values(&c, a), 0, a.format),
            };
            Ok((out, true))
        }
        Command::Verify(a) => {
            let c = parse_c(&a.c)?;
            let reports = a
                .claim
                .claims()
                .into_iter()
                .map(|claim| match &c {
                    Scalar::Int(c) => run_claim(claim, c, a),
                    Scalar::Sym(c) => run_claim(claim, c, a),
                })
                .collect::<Result<Vec<_>>>()?;
            let ok = reports.iter().all(|r| r.status == Status::Verified);
            Ok((emit_reports(&reports, a.format), ok))
        }
    }
}

/// Parses `argv` (including the program name), runs the command, and returns
/// the process exit code.
pub fn parse_and_dispatch<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match dispatch(&cli) {
        Ok((text, ok)) => {
            let _ = out.write_all(text.as_bytes());
            if ok {
                0
            } else {
                1
            }
        }
        Err(Error::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}
