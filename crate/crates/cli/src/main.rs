use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use osp_core::growth::{full_report, min_report_depth, GrowthReport};
use osp_core::resolution::{write_csv, ProxyMode, TrivialResolution};
use osp_core::rootsys::{build_root_system, Root, SuperWeight};
use osp_core::szops::{a_plus_minus, check, classify_block, hat, QuiverType};
use osp_core::{atypicality, Error};

#[derive(Parser)]
#[command(
    name = "osp",
    version,
    about = "Weights, blocks and resolution growth for osp(k|2)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Roots, ρ, ρ0 and ρ1
    Rootsys(Common),
    /// Atypicality of a weight
    Atyp(Common),
    /// a±, λ̂, λ̌ and λ^(i) over a range of i
    Sz(Common),
    /// Quiver type of the block of a weight
    Block(Common),
    /// Terms of the resolution of the trivial module
    Resolution(Common),
    /// Complexity, z-complexity and geometric dimensions
    Report(Common),
}

#[derive(Args)]
struct Common {
    #[arg(long, value_parser = clap::value_parser!(u32).range(3..))]
    k: u32,
    /// Weight literal `l0|l1,...,lm`; halves are written `p/2`. Defaults to 0.
    #[arg(long, allow_hyphen_values = true)]
    weight: Option<String>,
    #[arg(long, env = "OSP_DEPTH", default_value_t = 60, value_parser = clap::value_parser!(u32).range(12..))]
    depth: u32,
    #[arg(long, value_enum, default_value_t = Mode::Lower)]
    mode: Mode,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Inclusive index range `a..b`
    #[arg(long, allow_hyphen_values = true, value_parser = parse_range, default_value = "-3..3")]
    range: (i64, i64),
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Lower,
    Upper,
}

impl From<Mode> for ProxyMode {
    fn from(mode: Mode) -> Self {
        match mode {
            Mode::Lower => ProxyMode::Lower,
            Mode::Upper => ProxyMode::Upper,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

fn parse_range(text: &str) -> Result<(i64, i64), String> {
    let (a, b) = text
        .split_once("..")
        .ok_or_else(|| format!("expected a..b, got {text:?}"))?;
    let a: i64 = a.parse().map_err(|_| format!("bad range start {a:?}"))?;
    let b: i64 = b.parse().map_err(|_| format!("bad range end {b:?}"))?;
    if a > b {
        return Err(format!("empty range {a}..{b}"));
    }
    Ok((a, b))
}

enum Failure {
    Input(String),
    Identity,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let mut out = io::stdout().lock();
    let result = match &cli.command {
        Command::Rootsys(c) => cmd_rootsys(c, &mut out),
        Command::Atyp(c) => cmd_atyp(c, &mut out),
        Command::Sz(c) => cmd_sz(c, &mut out),
        Command::Block(c) => cmd_block(c, &mut out),
        Command::Resolution(c) => cmd_resolution(c, &mut out),
        Command::Report(c) => cmd_report(c, &mut out),
    };
    let _ = out.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Identity) => {
            eprintln!("error: a geometric identity failed");
            ExitCode::from(2)
        }
    }
}

fn weight(c: &Common) -> Result<SuperWeight, Failure> {
    match &c.weight {
        None => Ok(SuperWeight::zero(c.k)?),
        Some(text) => SuperWeight::parse(c.k, text).map_err(|e| Failure::Input(e.to_string())),
    }
}

/// Emits `fields` as JSON, as a `field,value` CSV, or as `field: value` lines.
fn emit_record(format: Format, fields: &[(&str, Value)], out: &mut impl Write) -> Outcome {
    match format {
        Format::Json => {
            let map: serde_json::Map<String, Value> = fields
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect();
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&map).map_err(|e| Failure::Input(e.to_string()))?
            )?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["field", "value"]).map_err(csv_err)?;
            for (k, v) in fields {
                w.write_record([k.to_string(), plain(v)]).map_err(csv_err)?;
            }
            w.flush()?;
        }
        Format::Text => {
            for (k, v) in fields {
                writeln!(out, "{k}: {}", plain(v))?;
            }
        }
    }
    Ok(())
}

fn csv_err(e: csv::Error) -> Failure {
    Failure::Input(e.to_string())
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Array(items) => items.iter().map(plain).collect::<Vec<_>>().join("; "),
        other => other.to_string(),
    }
}

fn roots_value(roots: &[Root]) -> Value {
    Value::Array(
        roots
            .iter()
            .map(|r| json!(format!("{} = ({})", r.label, r.weight)))
            .collect(),
    )
}

fn cmd_rootsys(c: &Common, out: &mut impl Write) -> Outcome {
    let data = build_root_system(c.k)?;
    let fields = [
        ("k", json!(c.k.to_string())),
        ("m", json!(data.m.to_string())),
        ("s", json!(data.s.to_string())),
        ("rho", json!(data.rho.to_string())),
        ("rho0", json!(data.rho0.to_string())),
        ("rho1", json!(data.rho1.to_string())),
        ("simpleRoots", roots_value(&data.simple_roots)),
        ("positiveEven", roots_value(&data.pos_even)),
        ("positiveOdd", roots_value(&data.pos_odd)),
    ];
    emit_record(c.format, &fields, out)
}

fn report_depth(c: &Common) -> Result<usize, Failure> {
    Ok((c.depth as usize).max(min_report_depth(c.k)?))
}

fn cmd_atyp(c: &Common, out: &mut impl Write) -> Outcome {
    let lambda = weight(c)?;
    let info = atypicality(&lambda)?;
    let complexity = full_report(&lambda, report_depth(c)?, c.mode.into())?.complexity;
    if c.format == Format::Text {
        match info.root {
            None => writeln!(out, "typical, complexity {complexity}")?,
            Some(root) => {
                let sset: Vec<String> = info
                    .sset_descending()
                    .iter()
                    .map(ToString::to_string)
                    .collect();
                writeln!(
                    out,
                    "atypical, root {root}, S = {{{}}}, complexity {complexity}",
                    sset.join(",")
                )?
            }
        }
        return Ok(());
    }
    let fields = [
        ("weight", json!(lambda.to_string())),
        ("degree", json!(info.degree.to_string())),
        (
            "root",
            info.root.map_or(Value::Null, |r| json!(r.to_string())),
        ),
        (
            "sset",
            Value::Array(
                info.sset_descending()
                    .iter()
                    .map(|h| json!(h.to_string()))
                    .collect(),
            ),
        ),
        ("bothSignsOrthogonal", json!(info.both_signs_orthogonal)),
        ("complexity", json!(complexity.to_string())),
    ];
    emit_record(c.format, &fields, out)
}

fn cmd_sz(c: &Common, out: &mut impl Write) -> Outcome {
    let lambda = weight(c)?;
    let (a_plus, a_minus) = a_plus_minus(&lambda)?;
    let block = classify_block(&lambda)?;
    let mut orbit = Vec::new();
    if block.quiver == QuiverType::DInfinity {
        for i in c.range.0..=c.range.1 {
            orbit.push((i, block.lambda(i)?));
        }
    }
    match c.format {
        Format::Json => {
            let value = json!({
                "weight": lambda.to_string(),
                "aPlus": a_plus.to_string(),
                "aMinus": a_minus.to_string(),
                "hat": hat(&lambda)?.to_string(),
                "check": check(&lambda)?.to_string(),
                "quiver": block.quiver,
                "orbit": orbit.iter().map(|(i, w)| json!({"i": i.to_string(), "lambda": w.to_string()})).collect::<Vec<_>>(),
            });
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&value).map_err(|e| Failure::Input(e.to_string()))?
            )?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["i", "lambda"]).map_err(csv_err)?;
            for (i, lam) in &orbit {
                w.write_record([i.to_string(), lam.to_string()])
                    .map_err(csv_err)?;
            }
            w.flush()?;
        }
        Format::Text => {
            writeln!(out, "a+ = {a_plus}, a- = {a_minus}")?;
            writeln!(out, "hat   = ({})", hat(&lambda)?)?;
            writeln!(out, "check = ({})", check(&lambda)?)?;
            if orbit.is_empty() {
                writeln!(out, "{} block: λ^(i) not constructed", block.quiver)?;
            }
            for (i, lam) in &orbit {
                writeln!(out, "{i:>4}  ({lam})")?;
            }
        }
    }
    Ok(())
}

fn cmd_block(c: &Common, out: &mut impl Write) -> Outcome {
    let lambda = weight(c)?;
    let block = classify_block(&lambda)?;
    if c.format == Format::Text {
        writeln!(out, "{}", block.quiver)?;
        return Ok(());
    }
    let fields = [
        ("weight", json!(lambda.to_string())),
        ("quiver", json!(block.quiver)),
        (
            "root",
            block
                .info
                .root
                .map_or(Value::Null, |r| json!(r.to_string())),
        ),
        (
            "base",
            block
                .base
                .as_ref()
                .map_or(Value::Null, |b| json!(b.to_string())),
        ),
    ];
    emit_record(c.format, &fields, out)
}

fn cmd_resolution(c: &Common, out: &mut impl Write) -> Outcome {
    let res = TrivialResolution::new(c.k)?;
    let terms = res.terms(c.depth as usize)?;
    match c.format {
        Format::Csv => write_csv(&terms, &mut *out)?,
        Format::Json => writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&terms).map_err(|e| Failure::Input(e.to_string()))?
        )?,
        Format::Text => {
            let mode: ProxyMode = c.mode.into();
            writeln!(out, "{:>4} {:>6}  {:>24}  summands", "d", "count", "proxy")?;
            for t in &terms {
                let idx: Vec<String> = t.summands.iter().map(ToString::to_string).collect();
                writeln!(
                    out,
                    "{:>4} {:>6}  {:>24}  {}",
                    t.d,
                    t.count,
                    t.proxy(mode),
                    idx.join(" ")
                )?;
            }
        }
    }
    Ok(())
}

fn print_report(report: &GrowthReport, format: Format, out: &mut impl Write) -> Outcome {
    let value = serde_json::to_value(report).map_err(|e| Failure::Input(e.to_string()))?;
    let Value::Object(map) = value else {
        unreachable!("report serializes to an object")
    };
    let fields: Vec<(&str, Value)> = map
        .iter()
        .map(|(k, v)| {
            let flat = match v {
                Value::Object(inner) => json!(inner
                    .iter()
                    .map(|(ik, iv)| format!("{ik}={}", plain(iv)))
                    .collect::<Vec<_>>()
                    .join(" ")),
                other => other.clone(),
            };
            (
                k.as_str(),
                if format == Format::Json {
                    v.clone()
                } else {
                    flat
                },
            )
        })
        .collect();
    emit_record(format, &fields, out)
}

fn cmd_report(c: &Common, out: &mut impl Write) -> Outcome {
    let lambda = weight(c)?;
    let report = full_report(&lambda, c.depth as usize, c.mode.into())?;
    print_report(&report, c.format, out)?;
    if report.identities_hold.all() {
        Ok(())
    } else {
        Err(Failure::Identity)
    }
}
