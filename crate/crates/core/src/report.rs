//! Report assembly and rendering. Every subcommand builds one JSON value;
//! text output is a deterministic indented walk of the same structure, so the
//! two formats can never drift apart.

use num_traits::{One, Signed, Zero};
use serde_json::{json, Map, Value};

use crate::bounds::BoundReport;
use crate::context::VariableContext;
use crate::groebner::GroebnerBasis;
use crate::invariants::{HilbertPolynomial, HilbertSeries, IdealInvariants};
use crate::parse::IdealInput;
use crate::pommaret::{PommaretBasis, TransformResult};
use crate::verify::VerifyReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Text,
}

/// Render a report. JSON objects serialize with sorted keys, so output for a
/// fixed value is byte-identical across runs and platforms.
pub fn render(value: &Value, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(value).expect("report values serialize");
            s.push('\n');
            s
        }
        ReportFormat::Text => {
            let mut out = String::new();
            walk(value, 0, &mut out);
            out
        }
    }
}

/// Scalars and flat arrays render inline; objects and mixed arrays do not.
fn inline(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("null".to_string()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(x) => Some(x.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) => {
            let parts: Option<Vec<String>> = items.iter().map(inline).collect();
            parts.map(|p| format!("[{}]", p.join(", ")))
        }
        Value::Object(map) if map.is_empty() => Some("{}".to_string()),
        Value::Object(_) => None,
    }
}

fn walk(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                match inline(val) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        walk(val, indent + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match inline(item) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        walk(item, indent + 1, out);
                    }
                }
            }
        }
        other => {
            let s = inline(other).expect("scalars always render inline");
            out.push_str(&format!("{pad}{s}\n"));
        }
    }
}

/// Numerator polynomial in t from integer coefficients, lowest degree first.
fn poly_in_t(coeffs: &[i64]) -> String {
    let mut out = String::new();
    for (k, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let mag = c.unsigned_abs();
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if c < 0 { " - " } else { " + " });
        }
        let coeff = if mag == 1 && k > 0 {
            String::new()
        } else {
            mag.to_string()
        };
        let power = match k {
            0 => String::new(),
            1 => "t".to_string(),
            _ => format!("t^{k}"),
        };
        out.push_str(&coeff);
        out.push_str(&power);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn series_display(series: &HilbertSeries) -> String {
    let num = poly_in_t(&series.numerator);
    if series.dimension == 0 {
        return num;
    }
    let wrapped = if num.contains(' ') {
        format!("({num})")
    } else {
        num
    };
    format!("{wrapped} / (1 - t)^{}", series.dimension)
}

pub fn hilbert_polynomial_display(hp: &HilbertPolynomial) -> String {
    let coeffs = hp.coefficients();
    let mut out = String::new();
    for k in (0..coeffs.len()).rev() {
        let c = &coeffs[k];
        if c.is_zero() {
            continue;
        }
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let mag = c.abs();
        let coeff = if mag.is_one() && k > 0 {
            String::new()
        } else if mag.is_integer() || k == 0 {
            mag.to_string()
        } else {
            format!("({mag})")
        };
        let power = match k {
            0 => String::new(),
            1 => "t".to_string(),
            _ => format!("t^{k}"),
        };
        out.push_str(&coeff);
        out.push_str(&power);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn input_value(input: &IdealInput) -> Value {
    json!({
        "ring": input.context.names(),
        "generators": input
            .generators
            .iter()
            .map(|g| g.display(&input.context).to_string())
            .collect::<Vec<_>>(),
        "degrees": input.degrees(),
    })
}

pub fn gb_value(gb: &GroebnerBasis, ctx: &VariableContext) -> Value {
    json!({
        "elements": gb
            .elements()
            .iter()
            .map(|g| g.display(ctx).to_string())
            .collect::<Vec<_>>(),
        "max_degree": gb.max_degree(),
        "zero_ideal": gb.is_zero_ideal(),
        "proper": !gb.is_improper(),
    })
}

pub fn basis_value(basis: &PommaretBasis, ctx: &VariableContext) -> Value {
    let n = ctx.nvars();
    json!({
        "size": basis.elements().len(),
        "elements": basis
            .elements()
            .iter()
            .map(|e| {
                json!({
                    "polynomial": e.poly().display(ctx).to_string(),
                    "class": e.class_index() + 1,
                    "degree": e.degree(),
                    "multiplicative": (e.class_index()..n)
                        .map(|i| ctx.name(i))
                        .collect::<Vec<_>>(),
                })
            })
            .collect::<Vec<_>>(),
    })
}

pub fn transform_value(t: &TransformResult) -> Value {
    let ctx = &t.input.context;
    json!({
        "identity": t.change.is_identity(),
        "matrix": t.change.matrix,
        "tries": t.tries,
        "seed": t.seed,
        "generators": t
            .input
            .generators
            .iter()
            .map(|g| g.display(ctx).to_string())
            .collect::<Vec<_>>(),
    })
}

pub fn series_value(series: &HilbertSeries) -> Value {
    json!({
        "numerator": series.numerator,
        "denominator_power": series.dimension,
        "display": series_display(series),
    })
}

pub fn hilbert_polynomial_value(hp: &HilbertPolynomial) -> Value {
    json!({
        "coefficients": hp
            .coefficients()
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>(),
        "display": hilbert_polynomial_display(hp),
    })
}

pub fn invariants_value(inv: &IdealInvariants) -> Value {
    json!({
        "dimension": inv.dimension,
        "degree": inv.degree,
        "regularity": inv.regularity,
        "depth": inv.depth,
        "satiety": inv.satiety,
        "hilbert_regularity": inv.hilbert_regularity,
        "gb_degree": inv.gb_degree,
    })
}

pub fn bound_report_value(r: &BoundReport) -> Value {
    let bounds: Vec<Value> = r
        .entries
        .iter()
        .map(|e| {
            let mut m = Map::new();
            m.insert("name".to_string(), json!(e.name));
            m.insert(
                "value".to_string(),
                match &e.value {
                    Some(v) => json!(v.to_string()),
                    None => Value::Null,
                },
            );
            if let Some(note) = &e.note {
                m.insert("note".to_string(), json!(note));
            }
            if let Some(reference) = e.compared_to {
                m.insert("compared_to".to_string(), json!(reference));
                m.insert("holds".to_string(), json!(e.holds.unwrap()));
                m.insert("attained".to_string(), json!(e.attained));
            }
            Value::Object(m)
        })
        .collect();
    json!({
        "n": r.n,
        "k": r.k,
        "degrees": r.degrees,
        "dimension": r.dimension,
        "depth": r.depth,
        "true_degree": r.true_degree,
        "gb_degree": r.gb_degree,
        "bounds": bounds,
    })
}

pub fn verify_value(reports: &[VerifyReport]) -> Value {
    json!({
        "checked": reports.len(),
        "passed": reports.iter().all(|r| r.all_passed()),
        "targets": reports
            .iter()
            .map(|r| {
                json!({
                    "target": r.target,
                    "passed": r.all_passed(),
                    "checks": r
                        .checks
                        .iter()
                        .map(|c| json!({
                            "name": c.name,
                            "passed": c.passed,
                            "detail": c.detail,
                        }))
                        .collect::<Vec<_>>(),
                })
            })
            .collect::<Vec<_>>(),
    })
}
