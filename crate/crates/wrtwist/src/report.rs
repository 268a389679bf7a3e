//! Serializable run reports.
//!
//! The JSON layout is fixed: field, ideal, tuples (lexicographic), classes
//! (ascending invariant, members as indices into the tuple list). Exact
//! values are reduced "num/den" strings; floats are printed with 17
//! significant digits, which parse back to the identical f64, so emit,
//! parse, re-emit is byte-identical. The emitter is hand-rolled to keep
//! key order and number formatting under our control; parsing uses serde.

use std::fmt::Write as _;

use num_traits::ToPrimitive;
use serde::Deserialize;

use crate::criteria::BasisPair;
use crate::enumerate::GoodTuple;
use crate::ideal::Ideal;
use crate::rat::to_frac_string;
use crate::similarity::TwistClass;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Deserialize)]
pub struct FieldReport {
    pub d: i64,
    pub case: String,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
pub struct IdealReport {
    pub t: i64,
    pub y: i64,
    pub g: i64,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
pub struct TupleReport {
    pub a: i64,
    pub c: i64,
    pub b: i64,
    pub d: i64,
    pub f1: String,
    pub f2: String,
    pub beta: String,
    pub cos: String,
    pub alpha_float: f64,
    pub basis_float: [[f64; 2]; 2],
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
pub struct ClassReport {
    pub cos_abs: String,
    pub label: String,
    pub members: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
pub struct Report {
    pub field: FieldReport,
    pub ideal: IdealReport,
    pub tuples: Vec<TupleReport>,
    pub classes: Vec<ClassReport>,
}

fn to_i64(x: &num_bigint::BigInt, what: &str) -> Result<i64> {
    x.to_i64()
        .ok_or_else(|| Error::Internal(format!("{what} {x} exceeds the report integer range")))
}

fn finite(x: f64, what: &str) -> Result<f64> {
    if x.is_finite() {
        Ok(x)
    } else {
        Err(Error::Internal(format!("{what} is not finite")))
    }
}

fn tuple_report(ideal: &Ideal, tuple: &GoodTuple) -> Result<TupleReport> {
    let bp: BasisPair = tuple.realize(ideal)?;
    let alpha = finite(bp.twist_alpha()?, "alpha")?;
    let basis = bp.twist_embed()?;
    for v in &basis {
        for x in v {
            finite(*x, "twisted basis entry")?;
        }
    }
    Ok(TupleReport {
        a: to_i64(&tuple.a, "tuple entry")?,
        c: to_i64(&tuple.c, "tuple entry")?,
        b: to_i64(&tuple.b, "tuple entry")?,
        d: to_i64(&tuple.d, "tuple entry")?,
        f1: to_frac_string(&bp.f1_coeff()),
        f2: to_frac_string(&bp.f2_coeff()),
        beta: to_frac_string(&bp.twist_beta()?),
        cos: to_frac_string(&bp.cos_theta()?),
        alpha_float: alpha,
        basis_float: basis,
    })
}

/// Assembles the full report. `tuples` must be sorted (as produced by the
/// enumeration); class members are stored as indices into it.
pub fn build(ideal: &Ideal, tuples: &[GoodTuple], classes: &[TwistClass]) -> Result<Report> {
    let case = match ideal.field().case() {
        crate::field::FieldCase::NonResidue => "non_residue",
        crate::field::FieldCase::Residue => "residue",
    };
    let mut tuple_reports = Vec::with_capacity(tuples.len());
    for t in tuples {
        tuple_reports.push(tuple_report(ideal, t)?);
    }
    let mut class_reports = Vec::with_capacity(classes.len());
    for class in classes {
        let mut members = Vec::with_capacity(class.members.len());
        for m in &class.members {
            let idx = tuples
                .binary_search(m)
                .map_err(|_| Error::Internal(format!("class member {m} missing from tuples")))?;
            members.push(idx);
        }
        class_reports.push(ClassReport {
            cos_abs: to_frac_string(&class.cos_abs),
            label: class.label.to_string(),
            members,
        });
    }
    Ok(Report {
        field: FieldReport {
            d: ideal.field().d(),
            case: case.to_string(),
        },
        ideal: IdealReport {
            t: to_i64(ideal.t(), "t")?,
            y: to_i64(ideal.y(), "y")?,
            g: to_i64(ideal.g(), "g")?,
        },
        tuples: tuple_reports,
        classes: class_reports,
    })
}

fn push_f64(out: &mut String, x: f64) {
    let _ = write!(out, "{x:.16e}");
}

fn push_vec2(out: &mut String, v: &[f64; 2]) {
    out.push('[');
    push_f64(out, v[0]);
    out.push(',');
    push_f64(out, v[1]);
    out.push(']');
}

/// Canonical JSON: fixed key order, floats with 17 significant digits.
pub fn to_json(r: &Report) -> String {
    let mut s = String::new();
    let _ = write!(
        s,
        "{{\"field\":{{\"d\":{},\"case\":\"{}\"}},\"ideal\":{{\"t\":{},\"y\":{},\"g\":{}}},\"tuples\":[",
        r.field.d, r.field.case, r.ideal.t, r.ideal.y, r.ideal.g
    );
    for (i, t) in r.tuples.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        let _ = write!(
            s,
            "{{\"a\":{},\"c\":{},\"b\":{},\"d\":{},\"f1\":\"{}\",\"f2\":\"{}\",\"beta\":\"{}\",\"cos\":\"{}\",\"alpha_float\":",
            t.a, t.c, t.b, t.d, t.f1, t.f2, t.beta, t.cos
        );
        push_f64(&mut s, t.alpha_float);
        s.push_str(",\"basis_float\":[");
        push_vec2(&mut s, &t.basis_float[0]);
        s.push(',');
        push_vec2(&mut s, &t.basis_float[1]);
        s.push_str("]}");
    }
    s.push_str("],\"classes\":[");
    for (i, c) in r.classes.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        let _ = write!(
            s,
            "{{\"cos_abs\":\"{}\",\"label\":\"{}\",\"members\":[",
            c.cos_abs, c.label
        );
        for (j, m) in c.members.iter().enumerate() {
            if j > 0 {
                s.push(',');
            }
            let _ = write!(s, "{m}");
        }
        s.push_str("]}");
    }
    s.push_str("]}");
    s
}

/// The bare canonical triple, used by the `canonical` command.
pub fn triple_json(i: &IdealReport) -> String {
    format!("{{\"t\":{},\"y\":{},\"g\":{}}}", i.t, i.y, i.g)
}

/// One row per tuple; class columns are empty when no classes were built.
pub fn to_csv(r: &Report) -> String {
    let mut class_of: Vec<Option<usize>> = vec![None; r.tuples.len()];
    for (ci, c) in r.classes.iter().enumerate() {
        for &m in &c.members {
            if m < class_of.len() {
                class_of[m] = Some(ci);
            }
        }
    }
    let mut s = String::from(
        "a,c,b,d,f1,f2,beta,cos,alpha_float,u_x,u_y,v_x,v_y,class_cos_abs,class_label\n",
    );
    for (i, t) in r.tuples.iter().enumerate() {
        let _ = write!(
            s,
            "{},{},{},{},{},{},{},{},",
            t.a, t.c, t.b, t.d, t.f1, t.f2, t.beta, t.cos
        );
        push_f64(&mut s, t.alpha_float);
        for v in &t.basis_float {
            for x in v {
                s.push(',');
                push_f64(&mut s, *x);
            }
        }
        match class_of[i] {
            Some(ci) => {
                let _ = write!(s, ",{},{}", r.classes[ci].cos_abs, r.classes[ci].label);
            }
            None => s.push_str(",,"),
        }
        s.push('\n');
    }
    s
}

/// Human-readable summary.
pub fn to_table(r: &Report) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "field d={} ({}), ideal (t, y, g) = ({}, {}, {})",
        r.field.d, r.field.case, r.ideal.t, r.ideal.y, r.ideal.g
    );
    let _ = writeln!(
        s,
        "{:>24}  {:>14} {:>14} {:>16} {:>12} {:>12}",
        "(a, c, b, d)", "f1", "f2", "beta", "cos", "alpha"
    );
    for t in &r.tuples {
        let _ = writeln!(
            s,
            "{:>24}  {:>14} {:>14} {:>16} {:>12} {:>12.6}",
            format!("({}, {}, {}, {})", t.a, t.c, t.b, t.d),
            t.f1,
            t.f2,
            t.beta,
            t.cos,
            t.alpha_float
        );
    }
    for c in &r.classes {
        let members: Vec<String> = c
            .members
            .iter()
            .map(|&m| {
                let t = &r.tuples[m];
                format!("({}, {}, {}, {})", t.a, t.c, t.b, t.d)
            })
            .collect();
        let _ = writeln!(
            s,
            "class |cos| = {} ({}): {}",
            c.cos_abs,
            c.label,
            members.join(", ")
        );
    }
    s
}
