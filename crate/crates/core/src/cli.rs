//! Command-line front end for the `lh` binary.
//!
//! Exit codes: 0 on success, 1 on invalid input (including bad flags), 2 on
//! an internal-consistency failure.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{
    cayley_dickson_table, find_zero_divisors, scan_is_exhaustive, table_from_signed_square,
    AlgebraTable, MAX_DOUBLING,
};
use crate::chisq::{
    decompose, eigenbasis_from_hadamard, eigenbasis_from_latin_hadamard, sylvester_hadamard,
    CellCounts, EigenbasisMatrix, ProbabilityVector,
};
use crate::coloring::{enumerate_colorings_par, is_latin_hadamard, SignedLatinSquare};
use crate::design::{builtin_design_16, design_to_eigenbasis, printed_design_16, verify_design};
use crate::error::{Error, Result};
use crate::latin::LatinSquare;
use crate::montecarlo::{
    matched_normal_null, simulate_power, BasisSource, DistributionSpec, PowerSimConfig,
    PowerSimResult, Preset,
};
use crate::reference::{latin_hadamard_4x4, latin_hadamard_8x8};

/// Largest `w` accepted by `construct` (order 64).
pub const MAX_CONSTRUCT_W: u32 = 6;

/// Seed used when neither `--seed` nor `LH_SEED` is given.
pub const DEFAULT_SEED: u64 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
    Table,
}

#[derive(Debug, Parser)]
#[command(
    name = "lh",
    version,
    about = "Latin-Hadamard matrices and chi-square component tests"
)]
struct Cli {
    /// Output format (default: json).
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Master seed for simulations; LH_SEED overrides it.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Write results to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the structured Latin square of order 2^w.
    Construct {
        #[arg(long)]
        w: u32,
    },
    /// Enumerate all colorings of the order-2^w square.
    Enumerate {
        #[arg(long)]
        w: u32,
        /// Keep only Latin-Hadamard matrices.
        #[arg(long)]
        valid_only: bool,
    },
    /// Cayley-Dickson multiplication tables and zero divisors.
    #[command(group(ArgGroup::new("source").required(true).args(["dim", "from_coloring"])))]
    Algebra {
        /// Algebra dimension: 1, 2, 4, 8, 16 or 32.
        #[arg(long)]
        dim: Option<usize>,
        /// Read a signed Latin square and use it as a multiplication table.
        #[arg(long)]
        from_coloring: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "table")]
        report: AlgebraReport,
    },
    /// The 16x16 nine-variable orthogonal design.
    #[command(group(ArgGroup::new("action").required(true).args(["show", "verify", "eigenbasis"])))]
    Design {
        #[arg(long)]
        show: bool,
        #[arg(long)]
        verify: bool,
        /// Orthonormal basis for the nine variable probabilities in --pvars.
        #[arg(long, requires = "pvars")]
        eigenbasis: bool,
        /// Nine comma-separated variable probabilities.
        #[arg(long)]
        pvars: Option<String>,
        /// Use the matrix exactly as printed, without sign errata.
        #[arg(long)]
        printed: bool,
    },
    /// Partition Pearson's X² for observed counts.
    Decompose {
        /// Comma-separated cell probabilities, or a preset name (a, b, c).
        #[arg(long, conflicts_with = "preset")]
        p: Option<String>,
        #[arg(long)]
        preset: Option<Preset>,
        /// Comma-separated cell counts.
        #[arg(long)]
        counts: String,
        /// builtin:<i>, builtin4:<i>, sylvester, design, or a matrix file.
        #[arg(long, default_value = "builtin:0")]
        matrix: String,
        /// Variable probabilities for --matrix design.
        #[arg(long)]
        pvars: Option<String>,
    },
    /// Monte Carlo power of X² and its components.
    Power {
        /// Null distribution, or "matched" for the normal matching a gamma alternative.
        #[arg(long, default_value = "normal:0,1")]
        null: String,
        /// Alternative: normal:MEAN,SD, t:DF, gamma:SHAPE,SCALE or cauchy.
        #[arg(long)]
        alt: String,
        #[arg(long, conflicts_with = "p")]
        preset: Option<Preset>,
        /// Comma-separated cell probabilities.
        #[arg(long)]
        p: Option<String>,
        #[arg(long, default_value_t = 200)]
        n: usize,
        #[arg(long, default_value_t = 10000)]
        reps: u64,
        #[arg(long, default_value_t = 0.05)]
        alpha: f64,
        /// builtin:<i>, builtin4:<i>, sylvester, or a matrix file.
        #[arg(long, default_value = "builtin:0")]
        matrix: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AlgebraReport {
    Table,
    ZeroDivisors,
}

struct Globals {
    format: Format,
    seed: u64,
    threads: usize,
}

/// Runs the CLI with process stdio.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// Runs the CLI against the given writers and returns the exit code.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return 1;
            }
            let _ = write!(out, "{e}");
            return 0;
        }
    };
    match execute(cli) {
        Ok((text, path)) => {
            let written = match path {
                Some(path) => std::fs::write(&path, text).map_err(Error::from),
                None => out.write_all(text.as_bytes()).map_err(Error::from),
            };
            match written {
                Ok(()) => 0,
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    e.exit_code()
                }
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn resolve_seed(flag: Option<u64>) -> Result<u64> {
    match std::env::var("LH_SEED") {
        Ok(v) => v.trim().parse().map_err(|_| {
            Error::invalid(format!("LH_SEED is not a 64-bit unsigned integer: {v:?}"))
        }),
        Err(_) => Ok(flag.unwrap_or(DEFAULT_SEED)),
    }
}

fn execute(cli: Cli) -> Result<(String, Option<PathBuf>)> {
    let threads = match cli.threads {
        Some(0) => return Err(Error::invalid("--threads must be at least 1")),
        Some(t) => t,
        None => std::thread::available_parallelism().map_or(1, |n| n.get()),
    };
    let g = Globals {
        format: cli.format.unwrap_or(Format::Json),
        seed: resolve_seed(cli.seed)?,
        threads,
    };
    let text = match cli.command {
        Command::Construct { w } => construct(&g, w)?,
        Command::Enumerate { w, valid_only } => enumerate(&g, w, valid_only)?,
        Command::Algebra {
            dim,
            from_coloring,
            report,
        } => algebra(&g, dim, from_coloring.as_deref(), report)?,
        Command::Design {
            show,
            verify,
            eigenbasis,
            pvars,
            printed,
        } => design(&g, show, verify, eigenbasis, pvars.as_deref(), printed)?,
        Command::Decompose {
            p,
            preset,
            counts,
            matrix,
            pvars,
        } => decompose_cmd(&g, p.as_deref(), preset, &counts, &matrix, pvars.as_deref())?,
        Command::Power {
            null,
            alt,
            preset,
            p,
            n,
            reps,
            alpha,
            matrix,
        } => power(
            &g,
            &null,
            &alt,
            preset,
            p.as_deref(),
            n,
            reps,
            alpha,
            &matrix,
        )?,
    };
    Ok((text, cli.out))
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn grid<T: ToString>(rows: &[Vec<T>]) -> String {
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    let mut s = String::new();
    for r in &cells {
        let line: Vec<String> = r.iter().map(|c| format!("{c:>width$}")).collect();
        s.push_str(&line.join(" "));
        s.push('\n');
    }
    s
}

fn csv_matrix<T: ToString>(rows: &[Vec<T>]) -> String {
    let n = rows.first().map_or(0, Vec::len);
    let header: Vec<String> = (1..=n).map(|j| format!("c{j}")).collect();
    let mut s = header.join(",");
    s.push('\n');
    for r in rows {
        let line: Vec<String> = r.iter().map(ToString::to_string).collect();
        s.push_str(&line.join(","));
        s.push('\n');
    }
    s
}

fn construct(g: &Globals, w: u32) -> Result<String> {
    let s = LatinSquare::with_guard(w, MAX_CONSTRUCT_W)?;
    match g.format {
        Format::Json => to_json(&json!({ "w": w, "entries": s.rows() })),
        Format::Csv => Ok(csv_matrix(&s.rows())),
        Format::Pretty | Format::Table => Ok(grid(&s.rows())),
    }
}

#[derive(Serialize)]
struct ColoringRecord {
    index: usize,
    w: u32,
    choices: String,
    #[serde(rename = "H")]
    h: Vec<Vec<i64>>,
    latin_hadamard: bool,
}

fn in_pool<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::internal(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}

fn enumerate(g: &Globals, w: u32, valid_only: bool) -> Result<String> {
    if w > crate::coloring::MAX_ENUMERATION_W {
        return Err(Error::Size(format!(
            "enumeration supports w <= {}, got {w}",
            crate::coloring::MAX_ENUMERATION_W
        )));
    }
    let square = LatinSquare::new(w);
    let all = in_pool(g.threads, || enumerate_colorings_par(&square))??;
    let records: Vec<ColoringRecord> = all
        .iter()
        .enumerate()
        .map(|(index, h)| ColoringRecord {
            index,
            w,
            choices: h.choice_bits().unwrap_or_default(),
            h: h.rows(),
            latin_hadamard: is_latin_hadamard(h),
        })
        .filter(|r| !valid_only || r.latin_hadamard)
        .collect();
    match g.format {
        Format::Json => to_json(&records),
        Format::Csv => {
            let mut s = String::from("index,w,choices,latin_hadamard,H\n");
            for r in &records {
                let h: Vec<String> =
                    r.h.iter()
                        .map(|row| row.iter().map(i64::to_string).collect::<Vec<_>>().join(" "))
                        .collect();
                let _ = writeln!(
                    s,
                    "{},{},{},{},{}",
                    r.index,
                    r.w,
                    r.choices,
                    r.latin_hadamard,
                    h.join("|")
                );
            }
            Ok(s)
        }
        Format::Pretty | Format::Table => {
            let mut s = String::new();
            for r in &records {
                let status = if r.latin_hadamard {
                    "Latin-Hadamard"
                } else {
                    "not orthogonal"
                };
                let _ = writeln!(s, "# {} choices={} {status}", r.index, r.choices);
                s.push_str(&grid(&r.h));
                s.push('\n');
            }
            let _ = writeln!(s, "{} matrices", records.len());
            Ok(s)
        }
    }
}

/// Reads a signed integer matrix from JSON (`[[..]]`, or an object with
/// `"H"` or `"entries"`) or from whitespace/comma separated text rows.
pub fn read_matrix_file(path: &Path) -> Result<Vec<Vec<i64>>> {
    let text = std::fs::read_to_string(path)?;
    parse_matrix_text(&text)
}

pub fn parse_matrix_text(text: &str) -> Result<Vec<Vec<i64>>> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('[') || trimmed.starts_with('{') {
        let v: Value = serde_json::from_str(text)?;
        let m = match &v {
            Value::Object(o) => o
                .get("H")
                .or_else(|| o.get("entries"))
                .cloned()
                .ok_or_else(|| Error::invalid("JSON object has no \"H\" or \"entries\" field"))?,
            // An enumerate listing: take the first record.
            Value::Array(a) if a.first().is_some_and(Value::is_object) => a[0]
                .get("H")
                .cloned()
                .ok_or_else(|| Error::invalid("record has no \"H\" field"))?,
            _ => v.clone(),
        };
        return Ok(serde_json::from_value(m)?);
    }
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|l| {
            l.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<i64>()
                        .map_err(|_| Error::invalid(format!("not an integer: {t:?}")))
                })
                .collect()
        })
        .collect()
}

fn signed_square_from_spec(spec: &str) -> Result<SignedLatinSquare> {
    let index = |rest: &str| {
        rest.parse::<usize>()
            .map_err(|_| Error::invalid(format!("bad matrix index {rest:?}")))
    };
    if let Some(rest) = spec.strip_prefix("builtin4:") {
        latin_hadamard_4x4(index(rest)?)
    } else if let Some(rest) = spec.strip_prefix("builtin:") {
        latin_hadamard_8x8(index(rest)?)
    } else {
        SignedLatinSquare::from_rows(&read_matrix_file(Path::new(spec))?)
    }
}

fn algebra(
    g: &Globals,
    dim: Option<usize>,
    from_coloring: Option<&Path>,
    report: AlgebraReport,
) -> Result<String> {
    let table: AlgebraTable = match (dim, from_coloring) {
        (Some(d), None) => {
            if !d.is_power_of_two() || d > 1 << MAX_DOUBLING {
                return Err(Error::invalid(format!(
                    "--dim must be a power of two up to {}, got {d}",
                    1 << MAX_DOUBLING
                )));
            }
            cayley_dickson_table(d.trailing_zeros())?
        }
        (None, Some(path)) => {
            let h = SignedLatinSquare::from_rows(&read_matrix_file(path)?)?;
            table_from_signed_square(&h)?
        }
        _ => {
            return Err(Error::invalid(
                "give exactly one of --dim or --from-coloring",
            ))
        }
    };
    match report {
        AlgebraReport::Table => {
            let labels: Vec<Vec<String>> = (1..=table.dim())
                .map(|i| {
                    (1..=table.dim())
                        .map(|j| table.product(i, j).to_string())
                        .collect()
                })
                .collect();
            match g.format {
                Format::Json => to_json(&json!({ "dim": table.dim(), "table": table.rows() })),
                Format::Csv => Ok(csv_matrix(&table.rows())),
                Format::Pretty | Format::Table => Ok(grid(&labels)),
            }
        }
        AlgebraReport::ZeroDivisors => {
            let zd = find_zero_divisors(&table);
            let exhaustive = scan_is_exhaustive(table.dim());
            match g.format {
                Format::Json => to_json(&json!({
                    "dim": table.dim(),
                    "exhaustive": exhaustive,
                    "count": zd.len(),
                    "zero_divisors": zd.iter().map(ToString::to_string).collect::<Vec<_>>(),
                })),
                Format::Csv => {
                    let mut s = String::from("i,j,s1,k,l,s2\n");
                    for z in &zd {
                        let _ = writeln!(s, "{},{},{},{},{},{}", z.i, z.j, z.s1, z.k, z.l, z.s2);
                    }
                    Ok(s)
                }
                Format::Pretty | Format::Table => {
                    let mut s = String::new();
                    for z in &zd {
                        let _ = writeln!(s, "{z}");
                    }
                    Ok(s)
                }
            }
        }
    }
}

fn parse_floats(s: &str) -> Result<Vec<f64>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| Error::invalid(format!("not a number: {t:?}")))
        })
        .collect()
}

fn parse_counts(s: &str) -> Result<CellCounts> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| Error::invalid(format!("not a non-negative integer: {t:?}")))
        })
        .collect::<Result<Vec<_>>>()
        .map(CellCounts::new)
}

fn design(
    g: &Globals,
    show: bool,
    verify: bool,
    eigenbasis: bool,
    pvars: Option<&str>,
    printed: bool,
) -> Result<String> {
    let d = if printed {
        printed_design_16()
    } else {
        builtin_design_16()
    };
    if show {
        let rows = d.rows();
        return match g.format {
            Format::Json => to_json(&json!({
                "order": d.order(),
                "type": d.type_vector(),
                "entries": rows,
            })),
            Format::Csv => Ok(csv_matrix(&rows)),
            Format::Pretty | Format::Table => {
                let labels: Vec<Vec<String>> = rows
                    .iter()
                    .map(|r| {
                        r.iter()
                            .map(|&v| match v {
                                0 => "0".to_string(),
                                v if v > 0 => format!("+x{v}"),
                                v => format!("-x{}", -v),
                            })
                            .collect()
                    })
                    .collect();
                Ok(grid(&labels))
            }
        };
    }
    if verify {
        let ok = verify_design(&d);
        return match g.format {
            Format::Json => to_json(&json!({ "verified": ok, "type": d.type_vector() })),
            Format::Csv => Ok(format!("verified\n{ok}\n")),
            Format::Pretty | Format::Table => Ok(format!(
                "A·Aᵀ = (Σ s_i x_i²)·I: {}\n",
                if ok { "holds" } else { "fails" }
            )),
        };
    }
    debug_assert!(eigenbasis);
    let q = parse_floats(pvars.ok_or_else(|| Error::invalid("--eigenbasis needs --pvars"))?)?;
    let o = design_to_eigenbasis(&d, &q)?;
    match g.format {
        Format::Json => to_json(&json!({
            "p": o.probabilities().as_slice(),
            "O": o.matrix().rows(),
            "orthonormality_error": o.orthonormality_error(),
        })),
        Format::Csv => Ok(csv_matrix(&o.matrix().rows())),
        Format::Pretty | Format::Table => {
            let rows: Vec<Vec<String>> = o
                .matrix()
                .rows()
                .iter()
                .map(|r| r.iter().map(|v| format!("{v:.6}")).collect())
                .collect();
            Ok(grid(&rows))
        }
    }
}

fn probabilities(p: Option<&str>, preset: Option<Preset>) -> Result<Option<ProbabilityVector>> {
    match (p, preset) {
        (Some(_), Some(_)) => Err(Error::invalid("--p and --preset are mutually exclusive")),
        (None, Some(pr)) => Ok(Some(pr.probabilities())),
        (Some(s), None) => {
            let s = s.trim();
            let name = s
                .strip_prefix("preset")
                .map_or(s, |r| r.trim_start_matches([':', ' ']));
            if let Ok(pr) = name.parse::<Preset>() {
                return Ok(Some(pr.probabilities()));
            }
            Ok(Some(ProbabilityVector::new(parse_floats(s)?)?))
        }
        (None, None) => Ok(None),
    }
}

fn basis_for(spec: &str, p: &ProbabilityVector) -> Result<EigenbasisMatrix> {
    if spec == "sylvester" {
        let k = p.len();
        if !k.is_power_of_two() {
            return Err(Error::invalid(format!(
                "Sylvester basis needs a power-of-two cell count, got {k}"
            )));
        }
        return eigenbasis_from_hadamard(&sylvester_hadamard(k.trailing_zeros()), p);
    }
    eigenbasis_from_latin_hadamard(&signed_square_from_spec(spec)?, p)
}

fn decompose_cmd(
    g: &Globals,
    p: Option<&str>,
    preset: Option<Preset>,
    counts: &str,
    matrix: &str,
    pvars: Option<&str>,
) -> Result<String> {
    let m = parse_counts(counts)?;
    let given = probabilities(p, preset)?;
    let (p, o) = if matrix == "design" {
        if given.is_some() {
            return Err(Error::invalid(
                "with --matrix design the cell probabilities come from --pvars",
            ));
        }
        let q =
            parse_floats(pvars.ok_or_else(|| Error::invalid("--matrix design needs --pvars"))?)?;
        let o = design_to_eigenbasis(&builtin_design_16(), &q)?;
        (o.probabilities().clone(), o)
    } else {
        if pvars.is_some() {
            return Err(Error::invalid("--pvars only applies to --matrix design"));
        }
        let p = given.ok_or_else(|| Error::invalid("give --p or --preset"))?;
        let o = basis_for(matrix, &p)?;
        (p, o)
    };
    let d = decompose(&m, &p, &o)?;
    let sum_check = d.x2 - d.sum_of_squares();
    match g.format {
        Format::Json => to_json(&json!({
            "X2": d.x2,
            "components": d.components,
            "sum_check": sum_check,
        })),
        Format::Csv => {
            let mut s = String::from("statistic,value\n");
            let _ = writeln!(s, "X2,{}", d.x2);
            for (l, t) in d.components.iter().enumerate() {
                let _ = writeln!(s, "T{},{t}", l + 2);
            }
            let _ = writeln!(s, "sum_check,{sum_check}");
            Ok(s)
        }
        Format::Pretty | Format::Table => {
            let mut s = format!("X2 = {:.6}\n", d.x2);
            for (l, t) in d.components.iter().enumerate() {
                let _ = writeln!(s, "T{:<2} = {t:>10.6}   T² = {:.6}", l + 2, t * t);
            }
            let _ = writeln!(s, "X2 - sum T² = {sum_check:.3e}");
            Ok(s)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn power(
    g: &Globals,
    null: &str,
    alt: &str,
    preset: Option<Preset>,
    p: Option<&str>,
    n: usize,
    reps: u64,
    alpha: f64,
    matrix: &str,
) -> Result<String> {
    let alternative: DistributionSpec = alt.parse()?;
    let null = if null.trim().eq_ignore_ascii_case("matched") {
        matched_normal_null(&alternative)?
    } else {
        null.parse()?
    };
    let p = probabilities(p, preset)?.unwrap_or_else(|| Preset::A.probabilities());
    let basis = if matrix == "sylvester" {
        let k = p.len();
        if !k.is_power_of_two() {
            return Err(Error::invalid(format!(
                "Sylvester basis needs a power-of-two cell count, got {k}"
            )));
        }
        BasisSource::Hadamard(sylvester_hadamard(k.trailing_zeros()))
    } else {
        BasisSource::LatinHadamard(signed_square_from_spec(matrix)?)
    };
    let cfg = PowerSimConfig {
        null,
        alternative,
        p,
        n,
        reps,
        alpha,
        master_seed: g.seed,
        basis,
        threads: Some(g.threads),
    };
    let r = simulate_power(&cfg)?;
    emit_power(&r, g.format)
}

/// Power results: CSV has columns `statistic,rate,se`.
pub fn emit_power(r: &PowerSimResult, format: Format) -> Result<String> {
    match format {
        Format::Json => to_json(r),
        Format::Csv => {
            let mut s = String::from("statistic,rate,se\n");
            for row in &r.rates {
                let _ = writeln!(s, "{},{},{}", row.statistic, row.rate, row.se);
            }
            Ok(s)
        }
        Format::Pretty | Format::Table => {
            let c = &r.config;
            let mut s = format!(
                "null {}  alternative {}  n={} reps={} alpha={} seed={}\n",
                c.null, c.alternative, c.n, c.reps, c.alpha, c.master_seed
            );
            s.push_str("statistic   rate     se\n");
            for row in &r.rates {
                let _ = writeln!(s, "{:<9} {:>6.3} {:>7.4}", row.statistic, row.rate, row.se);
            }
            Ok(s)
        }
    }
}
