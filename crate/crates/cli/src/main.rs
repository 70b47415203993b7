mod render;

use std::fs;
use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use contact3::{
    build_family_diagram, classification_table, classify, compute_invariants, family_invariants,
    homotopy_compare, sphere_search, InvariantReport, MonodromyExponents, SurgeryDiagram,
};

const MAX_ABS: i64 = 64;

#[derive(Parser, Debug)]
#[command(
    name = "contact3",
    version,
    about = "Exact invariants of contact (±1)-surgery diagrams"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(clap::Args, Debug)]
struct Triple {
    #[arg(short, allow_negative_numbers = true, value_parser = bounded)]
    p: i64,
    #[arg(short, allow_negative_numbers = true, value_parser = bounded)]
    q: i64,
    #[arg(short, allow_negative_numbers = true, value_parser = bounded)]
    r: i64,
}

impl Triple {
    fn exponents(&self) -> MonodromyExponents {
        MonodromyExponents::new(self.p, self.q, self.r)
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Invariants of a diagram read from a JSON file
    Invariants {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Surgery diagram of the family member (p, q, r)
    Family {
        #[command(flatten)]
        triple: Triple,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Tightness, binding number and topological type of (p, q, r)
    Classify {
        #[command(flatten)]
        triple: Triple,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Classification of every triple in a box, ordered by (r, p, q)
    Table {
        /// Value `a` or inclusive range `a:b`
        #[arg(short, allow_hyphen_values = true, default_value = "-3:3")]
        p: Span,
        #[arg(short, allow_hyphen_values = true, default_value = "-3:3")]
        q: Span,
        #[arg(short, allow_hyphen_values = true)]
        r: Span,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Triples with trivial first homology and their d3
    SphereSearch {
        #[arg(long, value_parser = clap::value_parser!(i64).range(0..=16))]
        bound: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Compare two structures by H1, c1 and d3
    ///
    /// Each operand is a diagram file, `family:P,Q,R`, `eta:M` or `s3`.
    Compare {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn bounded(s: &str) -> Result<i64, String> {
    let v: i64 = s.trim().parse().map_err(|e| format!("`{s}`: {e}"))?;
    if v.abs() > MAX_ABS {
        return Err(format!("{v} exceeds the bound |value| <= {MAX_ABS}"));
    }
    Ok(v)
}

#[derive(Clone, Debug)]
struct Span(RangeInclusive<i64>);

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (lo, hi) = match s.split_once(':') {
            Some((a, b)) => (bounded(a)?, bounded(b)?),
            None => {
                let v = bounded(s)?;
                (v, v)
            }
        };
        Ok(Span(lo..=hi))
    }
}

enum Failure {
    Input(anyhow::Error),
    Undefined(String),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Input(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.into())
    }
}

fn read_diagram(path: &Path) -> anyhow::Result<SurgeryDiagram> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    SurgeryDiagram::from_json(&text).with_context(|| format!("parsing {}", path.display()))
}

fn diagram_report(path: &Path) -> anyhow::Result<InvariantReport> {
    let d = read_diagram(path)?;
    compute_invariants(&d.to_framed_link()).with_context(|| format!("{}", path.display()))
}

fn operand_report(spec: &str) -> anyhow::Result<InvariantReport> {
    if spec == "s3" {
        return Ok(InvariantReport::standard_sphere());
    }
    if let Some(m) = spec.strip_prefix("eta:") {
        let m = bounded(m).map_err(|e| anyhow!(e))?;
        return Ok(InvariantReport::eta_reference(m)?);
    }
    if let Some(t) = spec.strip_prefix("family:") {
        let v = t
            .split(',')
            .map(bounded)
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| anyhow!(e))?;
        let [p, q, r] = v[..] else {
            bail!("`{spec}`: expected family:P,Q,R");
        };
        return Ok(family_invariants(MonodromyExponents::new(p, q, r)));
    }
    diagram_report(Path::new(spec))
}

fn check_defined(report: &InvariantReport) -> Result<(), Failure> {
    match report.undefined_reason {
        Some(reason) => Err(Failure::Undefined(format!("d3 undefined: {reason}"))),
        None => Ok(()),
    }
}

fn run(cli: Cli, out: &mut Vec<u8>) -> Result<(), Failure> {
    match cli.command {
        Command::Invariants { file, format } => {
            let report = diagram_report(&file)?;
            render::report(out, &report, format)?;
            check_defined(&report)
        }
        Command::Family { triple, format } => {
            let d = build_family_diagram(triple.exponents());
            render::diagram(out, &d, format)?;
            Ok(())
        }
        Command::Classify { triple, format } => {
            let c = classify(triple.exponents());
            render::classification(out, &c, format)?;
            match c.invariants.undefined_reason {
                Some(reason) => Err(Failure::Undefined(format!(
                    "d3 undefined: {reason} (type {})",
                    c.topo_type
                ))),
                None => Ok(()),
            }
        }
        Command::Table { p, q, r, format } => {
            let rows = classification_table(p.0, q.0, r.0);
            render::table(out, &rows, format)?;
            Ok(())
        }
        Command::SphereSearch { bound, format } => {
            let found = sphere_search(bound).map_err(anyhow::Error::from)?;
            render::spheres(out, &found, format)?;
            Ok(())
        }
        Command::Compare { a, b, format } => {
            let (ra, rb) = (operand_report(&a)?, operand_report(&b)?);
            render::comparison(out, homotopy_compare(&ra, &rb), format)?;
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let mut out = Vec::new();
    let result = run(cli, &mut out);
    let code = match &result {
        Ok(()) => 0,
        Err(Failure::Input(_)) => 2,
        Err(Failure::Undefined(_)) => 3,
    };
    if !matches!(result, Err(Failure::Input(_))) {
        let mut stdout = io::stdout().lock();
        if stdout.write_all(&out).and_then(|_| stdout.flush()).is_err() {
            return ExitCode::from(1);
        }
    }
    match result {
        Err(Failure::Input(e)) => eprintln!("error: {e:#}"),
        Err(Failure::Undefined(msg)) => eprintln!("{msg}"),
        Ok(()) => {}
    }
    ExitCode::from(code)
}
