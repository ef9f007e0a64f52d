use std::fmt::Write;

use clap::ValueEnum;
use jacobound::reproduce::{Comparison, Reproduction};
use jacobound::report::render_decimal;
use jacobound::zeta::effective_divisor_counts;
use jacobound::{CurveProfile, Result, ZetaData};
use serde_json::{json, Value};

use crate::run::BoundRow;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(ToString::to_string).unwrap_or_default()
}

/// Integers that fit in `i64` become JSON numbers, larger ones strings.
fn int_json(s: &str) -> Value {
    s.parse::<i64>().map(Value::from).unwrap_or_else(|_| Value::from(s))
}

pub fn render_bounds(profile: &CurveProfile, rows: &[BoundRow], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Table => {
            let _ = writeln!(out, "{} q={} g={}", profile.name, profile.q, profile.genus);
            let width = rows.iter().map(|r| r.name.len()).max().unwrap_or(0);
            for r in rows {
                let sym = match r.side {
                    jacobound::BoundSide::Lower => ">=",
                    jacobound::BoundSide::Upper => "<=",
                };
                let _ = write!(out, "{:width$}  {sym} {:14} (integer {})", r.name, r.value, r.integer);
                if let Some(n) = r.n {
                    let _ = write!(out, "  N={n}");
                }
                if let Some(p) = r.policy {
                    let _ = write!(out, "  fill={p}");
                }
                if !r.assumptions.is_empty() {
                    let _ = write!(out, "  [{}]", r.assumptions.join("; "));
                }
                out.push('\n');
            }
        }
        Format::Csv => {
            out.push_str("bound_name,value,N,policy,assumptions,integer\n");
            for r in rows {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    csv_field(&r.name),
                    csv_field(&r.value),
                    opt(&r.n),
                    opt(&r.policy),
                    csv_field(&r.assumptions.join("; ")),
                    r.integer
                );
            }
        }
        Format::Json => {
            let bounds: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "name": r.name,
                        "side": r.side,
                        "value": r.value,
                        "integer": int_json(&r.integer),
                        "N": r.n,
                        "policy": r.policy,
                        "assumptions": r.assumptions,
                    })
                })
                .collect();
            let doc = json!({"name": profile.name, "q": profile.q, "g": profile.genus, "bounds": bounds});
            out = serde_json::to_string_pretty(&doc).expect("serialisable") + "\n";
        }
    }
    out
}

fn cmp_cell(c: &Option<Comparison>) -> String {
    match c {
        None => "-".into(),
        Some(c) => format!("{} vs {} ({:+.2e}{})", c.computed, c.printed, c.deviation, if c.matches { "" } else { " MISMATCH" }),
    }
}

pub fn render_reproduction(rep: &Reproduction, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Table => {
            for r in &rep.rows {
                let _ = writeln!(
                    out,
                    "{:7} g={:<3} q={:<2} h_LZ {} N {} vs {}{} | h_BRT {} | h_AHL(3) {}  [{}]",
                    r.label,
                    r.genus,
                    r.q,
                    cmp_cell(&Some(r.h_lz.clone())),
                    r.n_computed,
                    r.n_printed,
                    if r.n_matches() { "" } else { " (differs)" },
                    cmp_cell(&r.h_brt),
                    cmp_cell(&r.h_ahl),
                    r.citation
                );
            }
            let s = &rep.summary;
            let _ = writeln!(
                out,
                "summary: h_LZ {}/{}  N {}/{}  h_BRT {}/{}  h_AHL {}/{}",
                s.h_lz_matches, s.rows, s.n_matches, s.rows, s.h_brt_matches, s.h_brt_rows, s.h_ahl_matches, s.h_ahl_rows
            );
        }
        Format::Csv => {
            out.push_str("label,citation,q,g,quantity,printed,computed,deviation,tolerance,matches\n");
            for r in &rep.rows {
                let items = [("h_lz", Some(&r.h_lz)), ("h_brt", r.h_brt.as_ref()), ("h_ahl", r.h_ahl.as_ref())];
                for (what, c) in items {
                    if let Some(c) = c {
                        let _ = writeln!(
                            out,
                            "{},{},{},{},{what},{},{},{:e},{:e},{}",
                            csv_field(&r.label),
                            csv_field(&r.citation),
                            r.q,
                            r.genus,
                            c.printed,
                            c.computed,
                            c.deviation,
                            c.tolerance,
                            c.matches
                        );
                    }
                }
                let _ = writeln!(
                    out,
                    "{},{},{},{},N,{},{},,,{}",
                    csv_field(&r.label),
                    csv_field(&r.citation),
                    r.q,
                    r.genus,
                    r.n_printed,
                    r.n_computed,
                    r.n_matches()
                );
            }
        }
        Format::Json => {
            out = serde_json::to_string_pretty(rep).expect("serialisable") + "\n";
        }
    }
    out
}

pub fn zeta_json(z: &ZetaData, prec: u32) -> Result<String> {
    let kappa = z.kappa(prec);
    let mid = render_decimal(&kappa, 30)?;
    let radius = (kappa.width() / 2u32).to_string_radix(10, Some(3));
    let a: Vec<Value> = z.coeffs.iter().map(|c| int_json(&c.to_string())).collect();
    let big_a: Vec<Value> = effective_divisor_counts(z, 2 * z.genus)
        .iter()
        .map(|c| int_json(&c.to_string()))
        .collect();
    let doc = json!({
        "q": z.q,
        "g": z.genus,
        "a": a,
        "h": int_json(&z.class_number.to_string()),
        "kappa": {"mid": mid, "radius": radius},
        "A": big_a,
    });
    Ok(serde_json::to_string_pretty(&doc).expect("serialisable") + "\n")
}
