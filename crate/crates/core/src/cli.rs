//! Command-line front end. [`run`] parses arguments, writes to the given
//! streams and returns the process exit code: 0 on success, 1 on a usage or
//! input error, 2 when `verify` finds a mismatch missing from the errata
//! table.

use std::io::Write;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::cform::dump_table;
use crate::fusion::{fusion_character, parse_points};
use crate::ramyip::{ramyip_sum, specialize};
use crate::ring::{QXPoly, XqRow};
use crate::walks::{enumerate_walks, survives, traverse, WalkRecord};
use crate::weylchar::verify::{
    frozen_conventions, frozen_errata, run_suite_with, Erratum, Report, Status, Suite, MAX_VERIFY_N,
};
use crate::weylchar::{
    approximant, ch_d, ch_gr_w_pbw, ch_gr_w_pbw_specialized, ch_w, ch_w_sigma, enumerate_basis, enumerate_limit_basis,
    limit_char, BasisKind, LimitKind,
};
use crate::{Family, Specialization};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SpecArg {
    Full,
    T0,
    Tinf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Module {
    #[value(name = "D")]
    D,
    #[value(name = "W")]
    W,
    #[value(name = "Wsigma")]
    WSigma,
    #[value(name = "grW")]
    GrW,
    #[value(name = "grWsigma")]
    GrWSigma,
}

#[derive(Parser, Debug)]
#[command(name = "ospmac", about = "Specialized A2(2) Macdonald polynomials and osp(1,2) Weyl-module characters")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Specialized (or full) polynomial from the walk sum.
    Epoly {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, value_enum, default_value = "t0")]
        spec: SpecArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Keep the printed global v-power (only affects `--spec full`).
        #[arg(long)]
        no_normalize: bool,
    },
    /// Coefficient table values as JSON.
    Ctable {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        r: u8,
        #[arg(long)]
        max_n: u32,
    },
    /// Weyl-module character.
    Weylchar {
        #[arg(long, value_enum)]
        module: Module,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Spanning monomials of a module.
    Basis {
        #[arg(long, value_parser = parse_basis_kind)]
        kind: BasisKind,
        /// Module index; the q-degree bound for `--kind limit`.
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Truncated limit character, or a finite approximant with `--n`.
    Limitchar {
        #[arg(long, value_parser = parse_limit_kind)]
        kind: LimitKind,
        #[arg(long)]
        qmax: u32,
        #[arg(long)]
        xmax: u32,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Graded character of a fusion product at the given points.
    Fusion {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        points: String,
        #[arg(long)]
        twisted: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Alcove walks for a target, optionally only the survivors of a specialization.
    Walks {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, value_parser = parse_family, requires = "spec")]
        family: Option<Family>,
        #[arg(long, value_parser = parse_specialization, requires = "family")]
        spec: Option<Specialization>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Cross-check identities and classify the results.
    Verify {
        #[arg(long, value_parser = parse_suite, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(i64).range(1..=MAX_VERIFY_N))]
        max_n: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Errata table to classify against instead of the built-in one.
        #[arg(long)]
        errata: Option<std::path::PathBuf>,
    },
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse()
}

fn parse_specialization(s: &str) -> Result<Specialization, String> {
    s.parse()
}

fn parse_basis_kind(s: &str) -> Result<BasisKind, String> {
    s.parse()
}

fn parse_limit_kind(s: &str) -> Result<LimitKind, String> {
    s.parse()
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

/// Output of one successful command.
struct Outcome {
    text: String,
    code: i32,
}

impl Outcome {
    fn ok(text: String) -> Outcome {
        Outcome { text, code: EXIT_OK }
    }
}

fn to_json(v: &impl Serialize) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn terms(p: &QXPoly) -> Vec<XqRow> {
    p.to_xq_rows()
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(cli.command) {
        Ok(o) => {
            let _ = writeln!(out, "{}", o.text);
            o.code
        }
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn execute(cmd: Command) -> Result<Outcome, String> {
    match cmd {
        Command::Epoly { family, n, spec, format, no_normalize } => epoly(family, n, spec, format, !no_normalize),
        Command::Ctable { family, r, max_n } => Ok(Outcome::ok(to_json(&dump_table(family, r, max_n as i64)))),
        Command::Weylchar { module, n, format } => weylchar(module, n, format),
        Command::Basis { kind, n, format } => basis(kind, n as i64, format),
        Command::Limitchar { kind, qmax, xmax, n, format } => {
            let (q, x) = (qmax as i64, xmax as i64);
            let series = match n {
                Some(n) => approximant(kind, n as i64, q, x),
                None => limit_char(kind, q, x),
            };
            Ok(Outcome::ok(match format {
                Format::Text => series.poly.render(),
                Format::Json => to_json(&json!({
                    "kind": kind.name(), "qmax": qmax, "xmax": xmax, "approximant_n": n, "terms": terms(&series.poly),
                })),
            }))
        }
        Command::Fusion { n, points, twisted, format } => {
            let pts = parse_points(&points).map_err(|e| e.to_string())?;
            let ch = fusion_character(n, &pts, twisted).map_err(|e| e.to_string())?;
            let dim = ch.eval_at_one();
            Ok(Outcome::ok(match format {
                Format::Text => format!("{}\ndimension: {dim}", ch.render()),
                Format::Json => to_json(&json!({
                    "n": n,
                    "points": pts.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                    "twisted": twisted,
                    "terms": terms(&ch),
                    "dimension": dim.to_string(),
                })),
            }))
        }
        Command::Walks { n, family, spec, format } => walks(n, family.zip(spec), format),
        Command::Verify { suite, max_n, format, errata } => {
            let errata = match errata {
                Some(path) => {
                    let raw = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
                    serde_json::from_str(&raw).map_err(|e| format!("{}: {e}", path.display()))?
                }
                None => frozen_errata(),
            };
            Ok(verify(suite, max_n, format, &errata))
        }
    }
}

fn epoly(family: Family, n: i64, spec: SpecArg, format: Format, normalize: bool) -> Result<Outcome, String> {
    let spec = match spec {
        SpecArg::T0 => Specialization::T0,
        SpecArg::Tinf => Specialization::TinfQinv,
        SpecArg::Full => {
            let sum = ramyip_sum(family, n, normalize).map_err(|e| e.to_string())?;
            return Ok(Outcome::ok(match format {
                Format::Text => sum.render(),
                Format::Json => {
                    let rows: Vec<_> = sum
                        .to_fraction_rows()
                        .into_iter()
                        .map(|(x, num, den)| json!({ "x": x, "numerator": num, "denominator": den }))
                        .collect();
                    to_json(&json!({
                        "terms": rows, "family": family, "n": n, "spec": "full", "normalized": normalize,
                    }))
                }
            }));
        }
    };
    let p = specialize(family, n, spec).map_err(|e| e.to_string())?;
    Ok(Outcome::ok(match format {
        Format::Text => p.render(),
        Format::Json => to_json(&json!({ "terms": terms(&p), "family": family, "n": n, "spec": spec })),
    }))
}

fn weylchar(module: Module, n: i64, format: Format) -> Result<Outcome, String> {
    let name = match module {
        Module::D => "D",
        Module::W => "W",
        Module::WSigma => "Wsigma",
        Module::GrW => "grW",
        Module::GrWSigma => "grWsigma",
    };
    let ch = match module {
        Module::D if n < 0 => return Err("D needs n >= 0".into()),
        Module::D => ch_d(n),
        Module::W => ch_w(n),
        Module::WSigma => ch_w_sigma(n),
        Module::GrW | Module::GrWSigma => {
            if n < 0 {
                return Err(format!("{name} needs n >= 0 (the module W_-n)"));
            }
            let twisted = module == Module::GrWSigma;
            let graded = ch_gr_w_pbw(n, twisted);
            let specialized = ch_gr_w_pbw_specialized(n, twisted);
            return Ok(Outcome::ok(match format {
                Format::Text => {
                    let mut lines: Vec<String> =
                        graded.layers.iter().map(|(p, l)| format!("pbw {p}: {}", l.render())).collect();
                    lines.push(format!("specialized: {}", specialized.render()));
                    lines.join("\n")
                }
                Format::Json => {
                    let layers: Vec<_> =
                        graded.layers.iter().map(|(p, l)| json!({ "pbw": p, "terms": terms(l) })).collect();
                    to_json(&json!({
                        "module": name, "n": n, "layers": layers, "specialized": terms(&specialized),
                    }))
                }
            }));
        }
    };
    Ok(Outcome::ok(match format {
        Format::Text => ch.render(),
        Format::Json => to_json(&json!({ "module": name, "n": n, "terms": terms(&ch) })),
    }))
}

fn basis(kind: BasisKind, n: i64, format: Format) -> Result<Outcome, String> {
    if kind == BasisKind::Limit && n > 8 {
        return Err("limit basis q-degree bound is capped at 8".into());
    }
    if kind != BasisKind::Limit && n > 9 {
        return Err("basis enumeration is capped at n = 9".into());
    }
    let monomials = if kind == BasisKind::Limit { enumerate_limit_basis(n) } else { enumerate_basis(kind, n) };
    Ok(Outcome::ok(match format {
        Format::Text => {
            let mut lines: Vec<String> = monomials
                .iter()
                .map(|m| {
                    format!("{:<28} weight {:>3}  t {:>3}  pbw {:>3}", m.render(), m.weight, m.t_degree, m.pbw_degree)
                })
                .collect();
            lines.push(format!("count: {}", monomials.len()));
            lines.join("\n")
        }
        Format::Json => {
            let rows: Vec<_> = monomials
                .iter()
                .map(|m| {
                    json!({
                        "monomial": m.render(), "weight": m.weight, "t_degree": m.t_degree,
                        "pbw_degree": m.pbw_degree, "e": m.e_degrees, "g": m.g_degrees,
                    })
                })
                .collect();
            to_json(&json!({ "kind": kind, "n": n, "count": monomials.len(), "monomials": rows }))
        }
    }))
}

fn walks(n: i64, filter: Option<(Family, Specialization)>, format: Format) -> Result<Outcome, String> {
    if n.abs() > crate::ramyip::DEFAULT_MAX_ABS_N {
        return Err(format!("|n| must be at most {}", crate::ramyip::DEFAULT_MAX_ABS_N));
    }
    let mut records = Vec::new();
    for w in enumerate_walks(n) {
        if let Some((family, spec)) = filter {
            let stats = traverse(&w).map_err(|e| e.to_string())?;
            if !survives(&stats, family, spec) {
                continue;
            }
        }
        records.push(WalkRecord::from_walk(&w).map_err(|e| e.to_string())?);
    }
    Ok(Outcome::ok(match format {
        Format::Json => to_json(&records),
        Format::Text => {
            let mut lines = vec![format!("{:<14} {:>4} {:>2} {:<14} {:>4}", "mask", "wt", "d", "h", "leg")];
            lines.extend(
                records.iter().map(|r| format!("{:<14} {:>4} {:>2} {:<14} {:>4}", r.mask, r.wt, r.d, r.h, r.leg)),
            );
            lines.join("\n")
        }
    }))
}

fn verify(suite: Suite, max_n: i64, format: Format, errata: &[Erratum]) -> Outcome {
    let report = run_suite_with(suite, max_n, errata, &frozen_conventions());
    let code = if report.unexpected().next().is_some() { EXIT_MISMATCH } else { EXIT_OK };
    let text = match format {
        Format::Json => to_json(&report),
        Format::Text => render_report(&report),
    };
    Outcome { text, code }
}

fn render_report(report: &Report) -> String {
    let mut lines = Vec::new();
    for e in &report.entries {
        let mut line = format!("{:<14} {:>3}  {}", e.status.to_string(), e.n, e.identity);
        if e.status == Status::EqualUpTo {
            line.push_str(&format!("  [{}]", e.transform));
        }
        if e.status == Status::Mismatch {
            let diff = QXPoly::from_xq_rows(&e.diff).map(|p| p.render()).unwrap_or_default();
            line.push_str(&format!("  diff: {diff}"));
            if let Some(note) = &e.note {
                line.push_str(&format!("  ({note})"));
            }
        }
        lines.push(line);
    }
    let known: Vec<_> = report.known_errata().collect();
    if !known.is_empty() {
        lines.push(String::new());
        lines.push(format!("warning: {} known errata", known.len()));
        for e in known {
            let diff = QXPoly::from_xq_rows(&e.diff).map(|p| p.render()).unwrap_or_default();
            lines.push(format!("  {} n={}: diff {}", e.identity, e.n, diff));
            if let Some(note) = &e.note {
                lines.push(format!("    {note}"));
            }
        }
    }
    lines.push(String::new());
    let counts: Vec<String> = [Status::Equal, Status::EqualUpTo, Status::KnownErratum, Status::Mismatch]
        .iter()
        .map(|s| format!("{s} {}", report.count(*s)))
        .collect();
    lines.push(counts.join(", "));
    lines.join("\n")
}
