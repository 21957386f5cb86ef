//! Command-line front end over the library.
//!
//! One subcommand per capability, three output formats (`text` by default,
//! `json`, `csv`; the `HYPOTRIA_FORMAT` environment variable changes the
//! default and the `--format` flag overrides both). Results go to stdout,
//! diagnostics to stderr. Exit codes: 0 on success, 1 on domain errors (and
//! on a `verify` run that finds mismatches), 2 on usage errors.
//!
//! Output is deterministic: the same invocation always produces the same
//! bytes. JSON records carry `schema_version` `"1"`, echo the parsed inputs,
//! and encode every integer as a decimal string and every rational as
//! `"p/q"` (text mode suppresses a `/1` denominator; JSON and CSV keep it).

use crate::arith::Rational;
use crate::decompose::{classify_position, integral_positions, Decomposition, PositionClass};
use crate::oracle::{default_bound, verify_claim, OracleReport};
use crate::six::scan_six;
use crate::special::{
    analyze_altitude_foot, analyze_bisector_foot, analyze_midpoint, SpecialPointReport,
};
use crate::triple::{enumerate_params, recover_params, TripleParams};
use crate::{Error, Result};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use serde_json::{json, Value};
use std::ffi::OsString;
use std::io::Write;

/// Wire format for results.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    /// Human-readable table.
    Text,
    /// One self-describing JSON record.
    Json,
    /// Header row plus one line per result row.
    Csv,
}

#[derive(Parser)]
#[command(
    name = "hypotria",
    version,
    about = "Exact hypotenuse-cut calculator for Pythagorean triangles"
)]
struct Cli {
    /// Output format; HYPOTRIA_FORMAT changes the default.
    #[arg(
        long,
        value_enum,
        global = true,
        env = "HYPOTRIA_FORMAT",
        default_value_t = OutputFormat::Text
    )]
    format: OutputFormat,

    #[command(subcommand)]
    command: Command,
}

/// Scale-and-generator flags shared by the parametric subcommands.
#[derive(Args)]
struct ParamArgs {
    /// Scale factor d >= 1.
    #[arg(long, value_parser = parse_biguint)]
    d: BigUint,
    /// Larger generator m.
    #[arg(long, value_parser = parse_biguint)]
    m: BigUint,
    /// Smaller generator n.
    #[arg(long, value_parser = parse_biguint)]
    n: BigUint,
}

impl ParamArgs {
    fn params(&self) -> Result<TripleParams> {
        TripleParams::new(self.d.clone(), self.m.clone(), self.n.clone())
    }

    fn echo(&self) -> Vec<(&'static str, String)> {
        vec![
            ("d", self.d.to_string()),
            ("m", self.m.to_string()),
            ("n", self.n.to_string()),
        ]
    }
}

/// Raw sides shared by the triple-input subcommands.
#[derive(Args)]
struct SideArgs {
    /// First leg.
    #[arg(long, value_parser = parse_biguint)]
    a: BigUint,
    /// Second leg.
    #[arg(long, value_parser = parse_biguint)]
    b: BigUint,
    /// Hypotenuse.
    #[arg(long, value_parser = parse_biguint)]
    c: BigUint,
}

impl SideArgs {
    fn echo(&self) -> Vec<(&'static str, String)> {
        vec![
            ("a", self.a.to_string()),
            ("b", self.b.to_string()),
            ("c", self.c.to_string()),
        ]
    }
}

/// Which special point to analyze.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PointArg {
    /// Midpoint of the hypotenuse.
    Midpoint,
    /// Foot of the right-angle bisector.
    Bisector,
    /// Foot of the altitude from the right angle.
    Altitude,
}

#[derive(Subcommand)]
enum Command {
    /// List every (d, m, n) with hypotenuse at most --max-c, with its triple.
    Generate {
        /// Largest hypotenuse to include.
        #[arg(long = "max-c")]
        max_c: u64,
    },
    /// Recover the unique (d, m, n) generating a triple, legs in any order.
    Recover(SideArgs),
    /// Cut a triple at a hypotenuse point given by --t or --h1.
    Decompose {
        #[command(flatten)]
        sides: SideArgs,
        /// Hypotenuse fraction |BP|/|BA| as p/q.
        #[arg(long, value_parser = parse_rational_arg)]
        t: Option<Rational>,
        /// Hypotenuse piece |BP| as p/q.
        #[arg(long, value_parser = parse_rational_arg)]
        h1: Option<Rational>,
    },
    /// List the d - 1 cut positions where all six lengths are integers.
    Positions(ParamArgs),
    /// Analyze the midpoint, bisector foot, or altitude foot.
    Special {
        /// Which point to analyze.
        #[arg(value_enum)]
        point: PointArg,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Scan every cut position for all-six-Pythagorean configurations.
    Six(ParamArgs),
    /// Build a member of the constructive six-triangle family.
    Family1 {
        /// Outer larger generator m.
        #[arg(long, value_parser = parse_biguint)]
        m: BigUint,
        /// Outer smaller generator n.
        #[arg(long, value_parser = parse_biguint)]
        n: BigUint,
        /// Inner larger generator M.
        #[arg(long = "inner-m", value_parser = parse_biguint)]
        inner_m: BigUint,
        /// Inner smaller generator N.
        #[arg(long = "inner-n", value_parser = parse_biguint)]
        inner_n: BigUint,
        /// Free scale K >= 1.
        #[arg(long, value_parser = parse_biguint)]
        k: BigUint,
    },
    /// Check a registered claim against its brute-force scan.
    Verify {
        /// Claim id; see the documentation for the registry.
        claim_id: String,
        /// Scan bound; each claim documents its default.
        #[arg(long)]
        bound: Option<u64>,
    },
}

/// One table cell; rationals render differently per format.
enum Cell {
    Text(String),
    Rat(Rational),
}

impl Cell {
    fn text(value: impl ToString) -> Self {
        Cell::Text(value.to_string())
    }

    fn render(&self, keep_unit_denominator: bool) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Rat(r) => rat_str(r, keep_unit_denominator),
        }
    }
}

/// A fully computed command result, ready to serialize in any format.
struct Rendered {
    command: &'static str,
    inputs: Vec<(&'static str, String)>,
    columns: Vec<&'static str>,
    rows: Vec<Vec<Cell>>,
    results: Value,
    notes: Vec<String>,
}

/// Parses `argv`, runs the command, and writes results to `out` and
/// diagnostics to `err`, returning the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    2
                }
            };
        }
    };
    match build(&cli) {
        Ok((rendered, exit_code)) => {
            if let Err(e) = emit(&rendered, cli.format, out) {
                let _ = writeln!(err, "error: {e}");
                return 1;
            }
            exit_code
        }
        Err(BuildError::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
        Err(BuildError::Usage(message)) => {
            let _ = writeln!(err, "error: {message}");
            2
        }
    }
}

/// Errors while building a result: domain failures exit 1, argument-shape
/// problems that clap cannot express exit 2.
enum BuildError {
    Domain(Error),
    Usage(String),
}

impl From<Error> for BuildError {
    fn from(e: Error) -> Self {
        BuildError::Domain(e)
    }
}

fn build(cli: &Cli) -> std::result::Result<(Rendered, i32), BuildError> {
    match &cli.command {
        Command::Generate { max_c } => Ok((build_generate(*max_c), 0)),
        Command::Recover(sides) => Ok((build_recover(sides)?, 0)),
        Command::Decompose { sides, t, h1 } => {
            let rendered = match (t, h1) {
                (Some(t), None) => build_decompose(sides, Some(t), None)?,
                (None, Some(h1)) => build_decompose(sides, None, Some(h1))?,
                _ => {
                    return Err(BuildError::Usage(
                        "provide exactly one of --t or --h1".to_string(),
                    ));
                }
            };
            Ok((rendered, 0))
        }
        Command::Positions(params) => Ok((build_positions(params)?, 0)),
        Command::Special { point, params } => Ok((build_special(*point, params)?, 0)),
        Command::Six(params) => Ok((build_six(params)?, 0)),
        Command::Family1 {
            m,
            n,
            inner_m,
            inner_n,
            k,
        } => Ok((build_family1(m, n, inner_m, inner_n, k)?, 0)),
        Command::Verify { claim_id, bound } => {
            let bound = match bound {
                Some(b) => *b,
                None => default_bound(claim_id).ok_or(Error::UnknownClaim {
                    id: claim_id.clone(),
                })?,
            };
            let report = verify_claim(claim_id, bound)?;
            let exit_code = i32::from(!report.confirmed());
            Ok((build_verify(&report, bound), exit_code))
        }
    }
}

fn build_generate(max_c: u64) -> Rendered {
    let mut rows = Vec::new();
    let mut results = Vec::new();
    for p in enumerate_params(max_c) {
        let t = p.triple();
        rows.push(vec![
            Cell::text(p.d()),
            Cell::text(p.m()),
            Cell::text(p.n()),
            Cell::text(t.a()),
            Cell::text(t.b()),
            Cell::text(t.c()),
        ]);
        results.push(json!({
            "d": p.d().to_string(),
            "m": p.m().to_string(),
            "n": p.n().to_string(),
            "a": t.a().to_string(),
            "b": t.b().to_string(),
            "c": t.c().to_string(),
        }));
    }
    Rendered {
        command: "generate",
        inputs: vec![("max_c", max_c.to_string())],
        columns: vec!["d", "m", "n", "a", "b", "c"],
        rows,
        results: Value::Array(results),
        notes: Vec::new(),
    }
}

fn build_recover(sides: &SideArgs) -> Result<Rendered> {
    let rec = recover_params(sides.a.clone(), sides.b.clone(), sides.c.clone())?;
    let t = rec.triple();
    let p = &rec.params;
    let row = vec![
        Cell::text(p.d()),
        Cell::text(p.m()),
        Cell::text(p.n()),
        Cell::text(rec.legs_swapped),
        Cell::text(t.a()),
        Cell::text(t.b()),
        Cell::text(t.c()),
    ];
    let results = vec![json!({
        "d": p.d().to_string(),
        "m": p.m().to_string(),
        "n": p.n().to_string(),
        "legs_swapped": rec.legs_swapped,
        "a": t.a().to_string(),
        "b": t.b().to_string(),
        "c": t.c().to_string(),
    })];
    Ok(Rendered {
        command: "recover",
        inputs: sides.echo(),
        columns: vec!["d", "m", "n", "legs_swapped", "a", "b", "c"],
        rows: vec![row],
        results: Value::Array(results),
        notes: Vec::new(),
    })
}

fn build_decompose(
    sides: &SideArgs,
    t: Option<&Rational>,
    h1: Option<&Rational>,
) -> Result<Rendered> {
    let rec = recover_params(sides.a.clone(), sides.b.clone(), sides.c.clone())?;
    let tri = rec.triple();
    let dec = match (t, h1) {
        (Some(t), None) => Decomposition::at_fraction(&tri, t)?,
        (None, Some(h1)) => Decomposition::at_h1(&tri, h1)?,
        _ => unreachable!("build() enforces exactly one position flag"),
    };
    let class = classify_position(&rec.params, &dec.t)?;
    let (class_name, delta) = match &class {
        PositionClass::Integral { delta } => ("integral", Some(delta.clone())),
        PositionClass::RationalNonIntegral => ("rational", None),
    };

    let mut inputs = sides.echo();
    if let Some(t) = t {
        inputs.push(("t", rat_str(t, false)));
    }
    if let Some(h1) = h1 {
        inputs.push(("h1", rat_str(h1, false)));
    }

    let row = vec![
        Cell::Rat(dec.t.clone()),
        Cell::Rat(dec.x.clone()),
        Cell::Rat(dec.y.clone()),
        Cell::Rat(dec.a_minus_y.clone()),
        Cell::Rat(dec.b_minus_x.clone()),
        Cell::Rat(dec.h1.clone()),
        Cell::Rat(dec.h2.clone()),
        Cell::text(class_name),
        Cell::text(delta.as_ref().map(ToString::to_string).unwrap_or_default()),
        Cell::text(rec.legs_swapped),
    ];
    let results = vec![json!({
        "t": rat_str(&dec.t, true),
        "x": rat_str(&dec.x, true),
        "y": rat_str(&dec.y, true),
        "a_minus_y": rat_str(&dec.a_minus_y, true),
        "b_minus_x": rat_str(&dec.b_minus_x, true),
        "h1": rat_str(&dec.h1, true),
        "h2": rat_str(&dec.h2, true),
        "classification": class_name,
        "delta": delta.as_ref().map(ToString::to_string),
        "legs_swapped": rec.legs_swapped,
    })];
    Ok(Rendered {
        command: "decompose",
        inputs,
        columns: vec![
            "t",
            "x",
            "y",
            "a_minus_y",
            "b_minus_x",
            "h1",
            "h2",
            "classification",
            "delta",
            "legs_swapped",
        ],
        rows: vec![row],
        results: Value::Array(results),
        notes: Vec::new(),
    })
}

fn build_positions(params: &ParamArgs) -> Result<Rendered> {
    let p = params.params()?;
    let mut rows = Vec::new();
    let mut results = Vec::new();
    for ip in integral_positions(&p) {
        rows.push(vec![
            Cell::text(&ip.delta),
            Cell::text(ip.sub_bdp.a()),
            Cell::text(ip.sub_bdp.b()),
            Cell::text(ip.sub_bdp.c()),
            Cell::text(ip.sub_pea.a()),
            Cell::text(ip.sub_pea.b()),
            Cell::text(ip.sub_pea.c()),
        ]);
        results.push(json!({
            "delta": ip.delta.to_string(),
            "sub_bdp": {
                "a": ip.sub_bdp.a().to_string(),
                "b": ip.sub_bdp.b().to_string(),
                "c": ip.sub_bdp.c().to_string(),
            },
            "sub_pea": {
                "a": ip.sub_pea.a().to_string(),
                "b": ip.sub_pea.b().to_string(),
                "c": ip.sub_pea.c().to_string(),
            },
        }));
    }
    Ok(Rendered {
        command: "positions",
        inputs: params.echo(),
        columns: vec!["delta", "bdp_a", "bdp_b", "bdp_c", "pea_a", "pea_b", "pea_c"],
        rows,
        results: Value::Array(results),
        notes: Vec::new(),
    })
}

fn build_special(point: PointArg, params: &ParamArgs) -> Result<Rendered> {
    let p = params.params()?;
    let report: SpecialPointReport = match point {
        PointArg::Midpoint => analyze_midpoint(&p),
        PointArg::Bisector => analyze_bisector_foot(&p),
        PointArg::Altitude => analyze_altitude_foot(&p),
    };
    let l = &report.lengths;
    let witness = report
        .divisibility_witness
        .as_ref()
        .map(ToString::to_string);
    let row = vec![
        Cell::text(report.point_kind.name()),
        Cell::text(report.all_pythagorean),
        Cell::text(witness.clone().unwrap_or_default()),
        Cell::Rat(l.x.clone()),
        Cell::Rat(l.y.clone()),
        Cell::Rat(l.a_minus_y.clone()),
        Cell::Rat(l.b_minus_x.clone()),
        Cell::Rat(l.h1.clone()),
        Cell::Rat(l.h2.clone()),
        Cell::text(
            l.h.as_ref()
                .map(|h| rat_str(h, false))
                .unwrap_or_default(),
        ),
        Cell::text(report.inner_four_pythagorean),
        Cell::text(report.notes.join("; ")),
    ];
    let results = vec![json!({
        "point": report.point_kind.name(),
        "all_pythagorean": report.all_pythagorean,
        "k": witness,
        "x": rat_str(&l.x, true),
        "y": rat_str(&l.y, true),
        "a_minus_y": rat_str(&l.a_minus_y, true),
        "b_minus_x": rat_str(&l.b_minus_x, true),
        "h1": rat_str(&l.h1, true),
        "h2": rat_str(&l.h2, true),
        "h": l.h.as_ref().map(|h| rat_str(h, true)),
        "inner_four_pythagorean": report.inner_four_pythagorean,
        "notes": report.notes.clone(),
    })];
    let mut inputs = vec![("point", report.point_kind.name().to_string())];
    inputs.extend(params.echo());
    Ok(Rendered {
        command: "special",
        inputs,
        columns: vec![
            "point",
            "all_pythagorean",
            "k",
            "x",
            "y",
            "a_minus_y",
            "b_minus_x",
            "h1",
            "h2",
            "h",
            "inner_four_pythagorean",
            "notes",
        ],
        rows: vec![row],
        results: Value::Array(results),
        notes: report.notes,
    })
}

fn build_six(params: &ParamArgs) -> Result<Rendered> {
    let p = params.params()?;
    let scan = scan_six(&p);
    let mut rows = Vec::new();
    let mut configs = Vec::new();
    let mut rejected = Vec::new();
    for row in &scan {
        let (pyth, inner_d, inner_m, inner_n, orientation) = match &row.config {
            Some(cfg) => (
                true,
                cfg.inner.d().to_string(),
                cfg.inner.m().to_string(),
                cfg.inner.n().to_string(),
                cfg.orientation.name().to_string(),
            ),
            None => (false, String::new(), String::new(), String::new(), String::new()),
        };
        rows.push(vec![
            Cell::text(&row.delta),
            Cell::text(&row.y),
            Cell::text(&row.x),
            Cell::text(&row.sum_of_squares),
            Cell::text(pyth),
            Cell::text(inner_d),
            Cell::text(inner_m),
            Cell::text(inner_n),
            Cell::text(orientation),
        ]);
        match &row.config {
            Some(cfg) => configs.push(json!({
                "delta": cfg.delta.to_string(),
                "y": cfg.y.to_string(),
                "x": cfg.x.to_string(),
                "sum_of_squares": row.sum_of_squares.to_string(),
                "inner_hypotenuse": cfg.inner_hypotenuse.to_string(),
                "inner_d": cfg.inner.d().to_string(),
                "inner_m": cfg.inner.m().to_string(),
                "inner_n": cfg.inner.n().to_string(),
                "orientation": cfg.orientation.name(),
            })),
            None => rejected.push(Value::String(row.sum_of_squares.to_string())),
        }
    }
    Ok(Rendered {
        command: "six",
        inputs: params.echo(),
        columns: vec![
            "delta",
            "y",
            "x",
            "sum_of_squares",
            "pythagorean",
            "inner_d",
            "inner_m",
            "inner_n",
            "orientation",
        ],
        rows,
        results: json!({
            "configs": configs,
            "rejected_sums": rejected,
        }),
        notes: Vec::new(),
    })
}

fn build_family1(
    m: &BigUint,
    n: &BigUint,
    inner_m: &BigUint,
    inner_n: &BigUint,
    k: &BigUint,
) -> Result<Rendered> {
    let (outer, instance, config) = crate::six::family1_generate(
        m.clone(),
        n.clone(),
        inner_m.clone(),
        inner_n.clone(),
        k.clone(),
    )?;
    let t = outer.triple();
    let row = vec![
        Cell::text(outer.d()),
        Cell::text(t.a()),
        Cell::text(t.b()),
        Cell::text(t.c()),
        Cell::text(&instance.delta),
        Cell::text(&config.y),
        Cell::text(&config.x),
        Cell::text(&config.inner_hypotenuse),
        Cell::text(config.inner.d()),
        Cell::text(config.inner.m()),
        Cell::text(config.inner.n()),
        Cell::text(config.orientation.name()),
    ];
    let results = vec![json!({
        "d": outer.d().to_string(),
        "a": t.a().to_string(),
        "b": t.b().to_string(),
        "c": t.c().to_string(),
        "delta": instance.delta.to_string(),
        "y": config.y.to_string(),
        "x": config.x.to_string(),
        "inner_hypotenuse": config.inner_hypotenuse.to_string(),
        "inner_d": config.inner.d().to_string(),
        "inner_m": config.inner.m().to_string(),
        "inner_n": config.inner.n().to_string(),
        "orientation": config.orientation.name(),
    })];
    Ok(Rendered {
        command: "family1",
        inputs: vec![
            ("m", m.to_string()),
            ("n", n.to_string()),
            ("inner_m", inner_m.to_string()),
            ("inner_n", inner_n.to_string()),
            ("k", k.to_string()),
        ],
        columns: vec![
            "d",
            "a",
            "b",
            "c",
            "delta",
            "y",
            "x",
            "inner_hypotenuse",
            "inner_d",
            "inner_m",
            "inner_n",
            "orientation",
        ],
        rows: vec![row],
        results: Value::Array(results),
        notes: Vec::new(),
    })
}

fn build_verify(report: &OracleReport, bound: u64) -> Rendered {
    let mismatches: Vec<Value> = report
        .mismatches
        .iter()
        .map(|m| {
            json!({
                "params": m.params,
                "position": m.position,
                "expected": m.expected,
                "actual": m.actual,
            })
        })
        .collect();
    let notes = report
        .mismatches
        .iter()
        .map(|m| {
            format!(
                "mismatch at {} [{}]: expected {}, got {}",
                m.params, m.position, m.expected, m.actual
            )
        })
        .collect();
    let row = vec![
        Cell::text(&report.claim_id),
        Cell::text(bound),
        Cell::text(report.scanned),
        Cell::text(report.confirmed()),
        Cell::text(report.mismatches.len()),
    ];
    Rendered {
        command: "verify",
        inputs: vec![
            ("claim_id", report.claim_id.clone()),
            ("bound", bound.to_string()),
        ],
        columns: vec!["claim", "bound", "scanned", "confirmed", "mismatches"],
        rows: vec![row],
        results: json!({
            "claim": report.claim_id,
            "bound": bound.to_string(),
            "scanned": report.scanned.to_string(),
            "confirmed": report.confirmed(),
            "mismatches": mismatches,
        }),
        notes,
    }
}

/// Renders `r` in `p/q` form, optionally collapsing an integer to its
/// numerator alone.
fn rat_str(r: &Rational, keep_unit_denominator: bool) -> String {
    if !keep_unit_denominator && r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn parse_biguint(s: &str) -> std::result::Result<BigUint, String> {
    s.parse()
        .map_err(|_| format!("{s:?} is not a non-negative integer"))
}

fn parse_rational_arg(s: &str) -> std::result::Result<Rational, String> {
    let (num, den) = match s.split_once('/') {
        Some((num, den)) => (num, den),
        None => (s, "1"),
    };
    let num: BigInt = num
        .trim()
        .parse()
        .map_err(|_| format!("{s:?} is not a rational p/q"))?;
    let den: BigInt = den
        .trim()
        .parse()
        .map_err(|_| format!("{s:?} is not a rational p/q"))?;
    if den.is_zero() {
        return Err(format!("{s:?} has a zero denominator"));
    }
    Ok(Rational::new(num, den))
}

fn emit(r: &Rendered, format: OutputFormat, out: &mut dyn Write) -> std::io::Result<()> {
    match format {
        OutputFormat::Json => emit_json(r, out),
        OutputFormat::Csv => emit_csv(r, out),
        OutputFormat::Text => emit_text(r, out),
    }
}

fn emit_json(r: &Rendered, out: &mut dyn Write) -> std::io::Result<()> {
    let mut inputs = serde_json::Map::new();
    for (key, value) in &r.inputs {
        inputs.insert((*key).to_string(), Value::String(value.clone()));
    }
    let record = json!({
        "schema_version": "1",
        "command": r.command,
        "inputs": Value::Object(inputs),
        "results": r.results,
    });
    writeln!(out, "{}", serde_json::to_string_pretty(&record).expect("serializable record"))
}

fn emit_csv(r: &Rendered, out: &mut dyn Write) -> std::io::Result<()> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(&r.columns)?;
    for row in &r.rows {
        let cells: Vec<String> = row.iter().map(|c| c.render(true)).collect();
        writer.write_record(&cells)?;
    }
    let bytes = writer.into_inner().expect("in-memory csv writer");
    out.write_all(&bytes)
}

fn emit_text(r: &Rendered, out: &mut dyn Write) -> std::io::Result<()> {
    let rendered_rows: Vec<Vec<String>> = r
        .rows
        .iter()
        .map(|row| row.iter().map(|c| c.render(false)).collect())
        .collect();
    let mut widths: Vec<usize> = r.columns.iter().map(|c| c.len()).collect();
    for row in &rendered_rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let header: Vec<String> = r
        .columns
        .iter()
        .enumerate()
        .map(|(i, c)| format!("{c:<width$}", width = widths[i]))
        .collect();
    writeln!(out, "{}", header.join("  ").trim_end())?;
    for row in &rendered_rows {
        let line: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(i, cell)| format!("{cell:<width$}", width = widths[i]))
            .collect();
        writeln!(out, "{}", line.join("  ").trim_end())?;
    }
    for note in &r.notes {
        writeln!(out, "note: {note}")?;
    }
    Ok(())
}
