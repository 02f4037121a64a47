//! Deterministic text renderings of the crate's data: power series,
//! continued fractions, determinant walls, and verification reports, in
//! plain, CSV, JSON, and b-file forms.
//!
//! Tests and downstream scripts compare this output byte-for-byte, so every
//! function here is order- and locale-independent: JSON keys are emitted
//! sorted, coefficients render in decimal, every record ends with a newline,
//! and nothing nondeterministic (timings, machine data) is included.

use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::cfrac::{CExpansion, SuperDeltaExpansion};
use crate::coeff::{render, to_bigint, Coefficient};
use crate::hankel::HankelWall;
use crate::poly::QPolynomial;
use crate::recurrences::{ConjectureReport, ConjectureRow};
use crate::series::TruncatedSeries;
use crate::{Error, Result};

/// Output format selector shared by the serializers and the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Plain,
    Csv,
    Json,
    BFile,
}

impl Format {
    pub fn parse(text: &str) -> Option<Format> {
        match text {
            "plain" => Some(Format::Plain),
            "csv" => Some(Format::Csv),
            "json" => Some(Format::Json),
            "bfile" => Some(Format::BFile),
            _ => None,
        }
    }
}

/// Exact JSON image of a coefficient: a number when it is an integer that
/// fits in an `i64` directly, a decimal string otherwise (big integers and
/// rationals), so nothing is ever rounded.
fn coeff_value(c: &Coefficient) -> Value {
    if let Some(b) = to_bigint(c) {
        if let Some(small) = b.to_i64() {
            return json!(small);
        }
    }
    json!(render(c))
}

fn poly_value(p: &QPolynomial) -> Value {
    json!(format!("{p}"))
}

/// Renders a series. The b-file form is one `index value` pair per line
/// starting at index 0 (or at the valuation when that is negative); CSV has
/// an `n,coefficient` header; JSON gives the dense coefficient block with
/// its starting exponent; plain is the human polynomial form.
pub fn series_text(f: &TruncatedSeries, format: Format) -> String {
    let start = f.valuation().unwrap_or(0).min(0);
    let entries: Vec<(i64, Coefficient)> = (start..f.order())
        .map(|e| (e, f.coeff(e).expect("below order")))
        .collect();
    match format {
        Format::Plain => format!("{f}\n"),
        Format::BFile => {
            let mut out = String::new();
            for (e, c) in &entries {
                out.push_str(&format!("{} {}\n", e, render(c)));
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("n,coefficient\n");
            for (e, c) in &entries {
                out.push_str(&format!("{},{}\n", e, render(c)));
            }
            out
        }
        Format::Json => {
            let coeffs: Vec<Value> = entries.iter().map(|(_, c)| coeff_value(c)).collect();
            let value = json!({
                "start": start,
                "order": f.order(),
                "coefficients": coeffs,
            });
            format!("{value}\n")
        }
    }
}

/// Smallest `(preperiod, period)` after which `items` repeats, demanding at
/// least two full periods of evidence past the preperiod; `None` when no
/// repetition is witnessed that strongly.
pub fn detect_layer_period<T: PartialEq>(items: &[T]) -> Option<(usize, usize)> {
    for period in 1..=items.len() / 2 {
        for pre in 0..items.len() {
            if items.len() < pre + 2 * period {
                break;
            }
            if (pre..items.len() - period).all(|i| items[i] == items[i + period]) {
                return Some((pre, period));
            }
        }
    }
    None
}

fn layer_values(x: &CExpansion) -> Vec<Value> {
    x.cfrac
        .layers()
        .iter()
        .map(|l| {
            json!({
                "num_coeff": coeff_value(&l.num_coeff),
                "num_exp": l.num_exp,
                "den": poly_value(&l.den),
            })
        })
        .collect()
}

fn periodicity_value<T: PartialEq>(items: &[T]) -> Value {
    match detect_layer_period(items) {
        Some((pre, p)) => json!({ "preperiod": pre, "period": p }),
        None => Value::Null,
    }
}

/// Renders a C-fraction expansion. B-file output is for sequences, not
/// fractions, and is rejected.
pub fn cfrac_text(x: &CExpansion, format: Format) -> Result<String> {
    let layers = x.cfrac.layers();
    match format {
        Format::BFile => Err(Error::Parse {
            message: "continued fractions have no b-file form; use plain, csv, or json".into(),
        }),
        Format::Plain => {
            let mut out = format!("{}\n", x.cfrac.render(8));
            let (coeff, exp) = x.cfrac.head();
            out.push_str(&format!("head: {} q^{}\n", render(coeff), exp));
            for (i, l) in layers.iter().enumerate() {
                out.push_str(&format!(
                    "layer {}: num {} q^{}, den {}\n",
                    i,
                    render(&l.num_coeff),
                    l.num_exp,
                    l.den
                ));
            }
            match detect_layer_period(layers) {
                Some((pre, p)) => {
                    out.push_str(&format!("layer periodicity: period {p} from layer {pre}\n"))
                }
                None => out.push_str("layer periodicity: none detected\n"),
            }
            out.push_str(&format!(
                "certified order: {}\ncomplete: {}\n",
                x.certified_order, x.complete
            ));
            Ok(out)
        }
        Format::Csv => {
            let mut out = String::from("layer,num_coeff,num_exp,den\n");
            for (i, l) in layers.iter().enumerate() {
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    i,
                    render(&l.num_coeff),
                    l.num_exp,
                    l.den
                ));
            }
            Ok(out)
        }
        Format::Json => {
            let (coeff, exp) = x.cfrac.head();
            let value = json!({
                "kind": "c",
                "head": { "coeff": coeff_value(coeff), "exp": exp },
                "layers": layer_values(x),
                "layer_periodicity": periodicity_value(layers),
                "certified_order": x.certified_order,
                "complete": x.complete,
            });
            Ok(format!("{value}\n"))
        }
    }
}

/// Renders a super-delta staircase expansion, including its offset/unit
/// profile alongside the layers.
pub fn staircase_text(x: &SuperDeltaExpansion, format: Format) -> Result<String> {
    let layers = x.cfrac.layers();
    match format {
        Format::BFile => Err(Error::Parse {
            message: "continued fractions have no b-file form; use plain, csv, or json".into(),
        }),
        Format::Plain => {
            let mut out = format!("{}\n", x.cfrac.render(8));
            out.push_str(&format!("delta: {}\n", x.profile.delta));
            for (i, l) in layers.iter().enumerate() {
                out.push_str(&format!(
                    "layer {}: k {}, num {} q^{}, den {}\n",
                    i,
                    x.profile.k[i],
                    render(&l.num_coeff),
                    l.num_exp,
                    l.den
                ));
            }
            match detect_layer_period(layers) {
                Some((pre, p)) => {
                    out.push_str(&format!("layer periodicity: period {p} from layer {pre}\n"))
                }
                None => out.push_str("layer periodicity: none detected\n"),
            }
            out.push_str(&format!(
                "certified order: {}\ncomplete: {}\nterminated: {}\n",
                x.certified_order, x.complete, x.profile.terminated
            ));
            Ok(out)
        }
        Format::Csv => {
            let mut out = String::from("layer,k,unit,num_coeff,num_exp,den\n");
            for (i, l) in layers.iter().enumerate() {
                out.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    i,
                    x.profile.k[i],
                    render(&x.profile.v[i]),
                    render(&l.num_coeff),
                    l.num_exp,
                    l.den
                ));
            }
            Ok(out)
        }
        Format::Json => {
            let (coeff, exp) = x.cfrac.head();
            let k: Vec<Value> = x.profile.k.iter().map(|&v| json!(v)).collect();
            let v: Vec<Value> = x.profile.v.iter().map(coeff_value).collect();
            let layers_json: Vec<Value> = layers
                .iter()
                .map(|l| {
                    json!({
                        "num_coeff": coeff_value(&l.num_coeff),
                        "num_exp": l.num_exp,
                        "den": poly_value(&l.den),
                    })
                })
                .collect();
            let value = json!({
                "kind": "super_delta",
                "delta": x.profile.delta,
                "head": { "coeff": coeff_value(coeff), "exp": exp },
                "k": k,
                "v": v,
                "layers": layers_json,
                "layer_periodicity": periodicity_value(layers),
                "certified_order": x.certified_order,
                "complete": x.complete,
                "terminated": x.profile.terminated,
            });
            Ok(format!("{value}\n"))
        }
    }
}

/// Renders a wall. Plain gives one `shift l: ...` line per row; CSV the
/// long `shift,n,value` form; JSON the row block. B-file output needs a
/// single sequence, so it is only allowed for single-row walls.
pub fn wall_text(wall: &HankelWall, format: Format) -> Result<String> {
    match format {
        Format::Plain => {
            let mut out = String::new();
            for (i, row) in wall.rows.iter().enumerate() {
                let values: Vec<String> = row.iter().map(render).collect();
                out.push_str(&format!(
                    "shift {}: {}\n",
                    wall.shift_min + i as u32,
                    values.join(" ")
                ));
            }
            Ok(out)
        }
        Format::Csv => {
            let mut out = String::from("shift,n,value\n");
            for (i, row) in wall.rows.iter().enumerate() {
                for (n, v) in row.iter().enumerate() {
                    out.push_str(&format!("{},{},{}\n", wall.shift_min + i as u32, n, render(v)));
                }
            }
            Ok(out)
        }
        Format::Json => {
            let rows: Vec<Value> = wall
                .rows
                .iter()
                .map(|row| Value::Array(row.iter().map(coeff_value).collect()))
                .collect();
            let value = json!({
                "shift_min": wall.shift_min,
                "n_max": wall.n_max,
                "rows": rows,
            });
            Ok(format!("{value}\n"))
        }
        Format::BFile => {
            if wall.rows.len() != 1 {
                return Err(Error::Parse {
                    message: format!(
                        "b-file output needs a single row, but the wall has {} (narrow --shifts)",
                        wall.rows.len()
                    ),
                });
            }
            Ok(row_bfile(&wall.rows[0]))
        }
    }
}

/// One `index value` line per entry, indices from 0.
pub fn row_bfile(row: &[Coefficient]) -> String {
    let mut out = String::new();
    for (n, v) in row.iter().enumerate() {
        out.push_str(&format!("{} {}\n", n, render(v)));
    }
    out
}

fn option_value<T: Into<Value>>(x: Option<T>) -> Value {
    x.map_or(Value::Null, Into::into)
}

fn conjecture_row_value(row: &ConjectureRow) -> Value {
    let prefix: Vec<Value> = row.values_prefix.iter().map(coeff_value).collect();
    let detected = match row.periodicity.detected {
        Some((p, sign)) => json!([p, sign]),
        None => Value::Null,
    };
    let mut m = Map::new();
    m.insert("shift".into(), json!(row.shift));
    m.insert("values_prefix".into(), Value::Array(prefix));
    m.insert("in_range_pm1".into(), json!(row.in_range_pm1));
    m.insert(
        "range_first_failure".into(),
        option_value(row.range_first_failure),
    );
    m.insert(
        "periodicity".into(),
        json!({
            "p": row.periodicity.p,
            "sign": row.periodicity.sign,
            "holds": row.periodicity.holds,
            "first_failure": option_value(row.periodicity.first_failure),
            "cells": row.periodicity.cells,
            "detected": detected,
        }),
    );
    m.insert(
        "recurrence".into(),
        json!({
            "kind": row.recurrence.spec.kind_name(),
            "k": row.recurrence.spec.order(),
            "holds": row.recurrence.holds,
            "first_failure": option_value(row.recurrence.first_failure.map(|n| n as u64)),
            "tested": row.recurrence.tested,
        }),
    );
    m.insert(
        "interconnection".into(),
        json!({
            "holds": option_value(row.interconnection_holds),
            "first_failure": option_value(row.interconnection_first_failure),
        }),
    );
    Value::Object(m)
}

/// Renders a verification report. Timings are deliberately omitted so that
/// identical inputs give byte-identical output.
pub fn conjecture_text(report: &ConjectureReport, format: Format) -> Result<String> {
    match format {
        Format::BFile => Err(Error::Parse {
            message: "verification reports have no b-file form; use plain, csv, or json".into(),
        }),
        Format::Json => {
            let rows: Vec<Value> = report.rows.iter().map(conjecture_row_value).collect();
            let value = json!({
                "k": report.k,
                "n_max": report.n_max,
                "rows": rows,
                "all_pass": report.all_pass,
                "budget_exceeded": report.budget_exceeded,
            });
            Ok(format!("{value}\n"))
        }
        Format::Csv => {
            let mut out = String::from(
                "shift,in_range_pm1,periodicity_holds,recurrence_holds,interconnection_holds\n",
            );
            for row in &report.rows {
                let inter = match row.interconnection_holds {
                    None => "-".to_string(),
                    Some(b) => b.to_string(),
                };
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    row.shift, row.in_range_pm1, row.periodicity.holds, row.recurrence.holds, inter
                ));
            }
            Ok(out)
        }
        Format::Plain => {
            let mut out = format!("k = {}, n_max = {}\n", report.k, report.n_max);
            for row in &report.rows {
                let sign = if row.periodicity.sign < 0 { "anti" } else { "plain" };
                let inter = match row.interconnection_holds {
                    None => "-".to_string(),
                    Some(true) => "ok".to_string(),
                    Some(false) => format!(
                        "FAIL at n = {}",
                        row.interconnection_first_failure.unwrap_or(0)
                    ),
                };
                out.push_str(&format!(
                    "shift {}: range {}; period {} ({}) {}; recurrence {}; ladder {}\n",
                    row.shift,
                    pass_text(row.in_range_pm1, row.range_first_failure),
                    row.periodicity.p,
                    sign,
                    counted(
                        row.periodicity.holds,
                        row.periodicity.first_failure,
                        row.periodicity.cells,
                        "cells"
                    ),
                    counted(
                        row.recurrence.holds,
                        row.recurrence.first_failure.map(|n| n as u32),
                        row.recurrence.tested,
                        "equations"
                    ),
                    inter
                ));
            }
            if report.budget_exceeded {
                out.push_str("budget exceeded: report truncated\n");
            }
            out.push_str(if !report.all_pass {
                "FAIL\n"
            } else if report.budget_exceeded {
                "INCOMPLETE\n"
            } else {
                "PASS\n"
            });
            Ok(out)
        }
    }
}

fn pass_text(holds: bool, first_failure: Option<u32>) -> String {
    if holds {
        "ok".to_string()
    } else {
        format!("FAIL at n = {}", first_failure.unwrap_or(0))
    }
}

/// Like [`pass_text`], but a vacuous pass (zero checked instances) is called
/// out as an insufficient range rather than silently reading "ok".
fn counted(holds: bool, first_failure: Option<u32>, instances: usize, noun: &str) -> String {
    if holds && instances == 0 {
        format!("ok (insufficient range: 0 {noun})")
    } else {
        pass_text(holds, first_failure)
    }
}
