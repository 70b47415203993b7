use std::io::Write;

use anyhow::{bail, Result};
use contact3::{
    ClassificationReport, Comparison, InvariantReport, Provenance, Rational, SphereEntry,
    SurgeryDiagram,
};
use serde::Serialize;

use crate::Format;

const TABLE_HEADER: [&str; 8] = ["p", "q", "r", "type", "tight", "c1_order", "d3", "bn"];

fn json<T: Serialize + ?Sized>(out: &mut Vec<u8>, value: &T) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn csv_out<const N: usize>(
    out: &mut Vec<u8>,
    header: [&str; N],
    rows: Vec<[String; N]>,
) -> Result<()> {
    let mut w = csv::Writer::from_writer(&mut *out);
    w.write_record(header)?;
    for row in rows {
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}

fn opt(r: Option<&Rational>) -> String {
    r.map_or_else(|| "undefined".to_string(), ToString::to_string)
}

fn csv_opt(r: Option<&Rational>) -> String {
    r.map_or_else(String::new, ToString::to_string)
}

fn report_lines(out: &mut Vec<u8>, r: &InvariantReport) -> Result<()> {
    writeln!(out, "k          {}", r.k)?;
    writeln!(out, "s          {}", r.s)?;
    writeln!(out, "chi        {}", r.chi)?;
    writeln!(out, "sigma      {}", r.sigma)?;
    writeln!(out, "c^2        {}", opt(r.c_squared.as_ref()))?;
    writeln!(out, "d3         {}", opt(r.d3.as_ref()))?;
    if let Some(reason) = r.undefined_reason {
        writeln!(out, "reason     {reason}")?;
    }
    writeln!(out, "H1         {}", r.h1)?;
    let zero = if r.c1_is_zero { "zero" } else { "nonzero" };
    writeln!(out, "c1         {zero}, order {}", r.c1_order)?;
    Ok(())
}

pub fn report(out: &mut Vec<u8>, r: &InvariantReport, format: Format) -> Result<()> {
    match format {
        Format::Json => json(out, r),
        Format::Text => report_lines(out, r),
        Format::Csv => csv_out(
            out,
            [
                "k",
                "s",
                "chi",
                "sigma",
                "c_squared",
                "d3",
                "h1",
                "c1_order",
            ],
            vec![[
                r.k.to_string(),
                r.s.to_string(),
                r.chi.to_string(),
                r.sigma.to_string(),
                csv_opt(r.c_squared.as_ref()),
                csv_opt(r.d3.as_ref()),
                r.h1.to_string(),
                r.c1_order.to_string(),
            ]],
        ),
    }
}

pub fn diagram(out: &mut Vec<u8>, d: &SurgeryDiagram, format: Format) -> Result<()> {
    match format {
        Format::Json => {
            writeln!(out, "{}", d.to_json())?;
            Ok(())
        }
        Format::Text => {
            if d.is_empty() {
                writeln!(out, "empty diagram")?;
                return Ok(());
            }
            writeln!(out, "id     tb  rot  coeff  tag")?;
            for c in d.components() {
                let tag = c.tag.map(|t| t.to_string()).unwrap_or_default();
                writeln!(
                    out,
                    "{:<5} {:>3} {:>4} {:>6}  {tag}",
                    c.id,
                    c.tb,
                    c.rot,
                    c.coeff.to_string()
                )?;
            }
            let f = d.to_framed_link();
            writeln!(out, "framed link matrix:")?;
            write!(out, "{}", f.matrix)?;
            let rot: Vec<String> = f.rot_vector.iter().map(ToString::to_string).collect();
            writeln!(out, "rot [{}]", rot.join(", "))?;
            Ok(())
        }
        Format::Csv => bail!("csv output is only available for tabular commands"),
    }
}

fn csv_row(c: &ClassificationReport) -> [String; 8] {
    let e = c.exponents;
    [
        e.p.to_string(),
        e.q.to_string(),
        e.r.to_string(),
        c.topo_type.to_string(),
        c.tight.to_string(),
        c.invariants.c1_order.to_string(),
        csv_opt(c.d3()),
        c.binding_number.to_string(),
    ]
}

fn provenance(p: Provenance) -> &'static str {
    match p {
        Provenance::Invariants => "from invariants",
        Provenance::ViaTheorem => "via theorem",
    }
}

pub fn classification(out: &mut Vec<u8>, c: &ClassificationReport, format: Format) -> Result<()> {
    match format {
        Format::Json => json(out, c),
        Format::Csv => csv_out(out, TABLE_HEADER, vec![csv_row(c)]),
        Format::Text => {
            writeln!(out, "triple     {}", c.exponents)?;
            writeln!(out, "tight      {}", c.tight)?;
            writeln!(out, "type       {}", c.topo_type)?;
            writeln!(out, "genus      {}", c.support_genus)?;
            writeln!(
                out,
                "bn         {} ({})",
                c.binding_number,
                provenance(c.binding_provenance)
            )?;
            report_lines(out, &c.invariants)
        }
    }
}

pub fn table(out: &mut Vec<u8>, rows: &[ClassificationReport], format: Format) -> Result<()> {
    match format {
        Format::Json => json(out, rows),
        Format::Csv => csv_out(out, TABLE_HEADER, rows.iter().map(csv_row).collect()),
        Format::Text => {
            writeln!(
                out,
                "{:>4} {:>4} {:>4}  {:<16} {:<6} {:>8} {:>10} {:>3}",
                "p", "q", "r", "type", "tight", "c1_order", "d3", "bn"
            )?;
            for c in rows {
                let e = c.exponents;
                writeln!(
                    out,
                    "{:>4} {:>4} {:>4}  {:<16} {:<6} {:>8} {:>10} {:>3}",
                    e.p,
                    e.q,
                    e.r,
                    c.topo_type.to_string(),
                    c.tight,
                    c.invariants.c1_order.to_string(),
                    opt(c.d3()),
                    c.binding_number
                )?;
            }
            Ok(())
        }
    }
}

pub fn spheres(out: &mut Vec<u8>, found: &[SphereEntry], format: Format) -> Result<()> {
    match format {
        Format::Json => json(out, found),
        Format::Csv => csv_out(
            out,
            ["p", "q", "r", "type", "d3", "bn"],
            found
                .iter()
                .map(|s| {
                    let e = s.exponents;
                    [
                        e.p.to_string(),
                        e.q.to_string(),
                        e.r.to_string(),
                        s.topo_type.to_string(),
                        csv_opt(s.d3.as_ref()),
                        s.binding_number.to_string(),
                    ]
                })
                .collect(),
        ),
        Format::Text => {
            for s in found {
                writeln!(
                    out,
                    "{:<12} {:<8} d3 {:>6}  bn {}",
                    s.exponents.to_string(),
                    s.topo_type.to_string(),
                    opt(s.d3.as_ref()),
                    s.binding_number
                )?;
            }
            Ok(())
        }
    }
}

pub fn comparison(out: &mut Vec<u8>, c: Comparison, format: Format) -> Result<()> {
    match (format, c) {
        (Format::Json, c) => json(out, &c),
        (Format::Csv, Comparison::Indistinguishable) => csv_out(
            out,
            ["verdict", "witness"],
            vec![["indistinguishable".into(), String::new()]],
        ),
        (Format::Csv, Comparison::Distinguishable(w)) => csv_out(
            out,
            ["verdict", "witness"],
            vec![["distinguishable".into(), w.to_string()]],
        ),
        (Format::Text, Comparison::Indistinguishable) => {
            writeln!(out, "indistinguishable")?;
            Ok(())
        }
        (Format::Text, Comparison::Distinguishable(w)) => {
            writeln!(out, "distinguishable (witness: {w})")?;
            Ok(())
        }
    }
}
