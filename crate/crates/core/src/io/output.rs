//! JSON and text renderings of an analysis.
//!
//! Every field element is an exact expression string in the generator; the
//! JSON carries no timing so that it is byte-for-byte reproducible.

use std::fmt::Write as _;

use serde::Serialize;

use super::format_poly;
use crate::cluster::PointOrigin;
use crate::driver::{Analysis, VerificationReport};
use crate::field::format_rational;
use crate::poly::{AffineChart, BlowupChart};

#[derive(Serialize)]
pub struct OutputDocument {
    pub input: InputEcho,
    pub base_points: Vec<PointOut>,
    pub candidates: Vec<DegreeOut>,
    pub components: Vec<ComponentOut>,
    pub fibers: Vec<FiberOut>,
    pub verification: Option<VerificationReport>,
}

#[derive(Serialize)]
pub struct InputEcho {
    pub field: FieldOut,
    #[serde(rename = "F")]
    pub f: String,
    #[serde(rename = "G")]
    pub g: String,
    pub degree: u32,
}

#[derive(Serialize)]
pub struct FieldOut {
    pub generator: Option<String>,
    /// Coefficients from the constant term up.
    pub min_poly: Vec<String>,
}

#[derive(Serialize)]
pub struct PointOut {
    pub id: usize,
    pub level: usize,
    pub parent: Option<usize>,
    pub proximate_to: Vec<usize>,
    pub multiplicity: u32,
    /// Homogeneous coordinates of a proper point.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coordinates: Option<[String; 3]>,
    /// Blow-up chart of an infinitely near point: `finite` for the slope
    /// `center` on the parent's exceptional line, `infinite` for the vertical
    /// direction.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub direction: Option<DirectionOut>,
}

#[derive(Serialize)]
pub struct DirectionOut {
    pub chart: &'static str,
    pub center: String,
}

#[derive(Serialize)]
pub struct DegreeOut {
    pub e: u32,
    pub candidates: usize,
    pub dimension_zero: usize,
    pub without_exceptional_part: usize,
    pub new_components: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub dump: Vec<Vec<u32>>,
}

#[derive(Serialize)]
pub struct ComponentOut {
    pub index: usize,
    pub degree: u32,
    pub equation: String,
    pub v: Vec<u32>,
    pub actual_multiplicities: Vec<u32>,
}

#[derive(Serialize)]
pub struct FiberOut {
    pub lambda: String,
    pub mu: String,
    pub member: String,
    pub factorization: Vec<FactorOut>,
}

#[derive(Serialize)]
pub struct FactorOut {
    pub component: usize,
    pub exponent: u32,
}

impl OutputDocument {
    pub fn new(a: &Analysis, f_text: &str, g_text: &str) -> Self {
        let k = a.pencil.field();
        let field = FieldOut {
            generator: (k.degree() > 1).then(|| k.symbol().to_string()),
            min_poly: k.min_poly().iter().map(format_rational).collect(),
        };
        let base_points = a
            .cluster
            .points()
            .iter()
            .map(|p| {
                let (coordinates, direction) = match &p.origin {
                    PointOrigin::Proper { coords, .. } => (Some(coords.clone().map(|c| k.format(&c))), None),
                    PointOrigin::InfinitelyNear { chart, center } => {
                        let chart = match chart {
                            BlowupChart::Finite => "finite",
                            BlowupChart::Infinite => "infinite",
                        };
                        (None, Some(DirectionOut { chart, center: k.format(center) }))
                    }
                };
                PointOut {
                    id: p.id,
                    level: p.level,
                    parent: p.parent,
                    proximate_to: p.proximate_to.clone(),
                    multiplicity: p.generic_mult,
                    coordinates,
                    direction,
                }
            })
            .collect();
        let candidates = a
            .degrees
            .iter()
            .map(|s| DegreeOut {
                e: s.e,
                candidates: s.candidates,
                dimension_zero: s.dimension_zero,
                without_exceptional_part: s.without_exceptional_part,
                new_components: s.new_components,
                dump: s.dump.iter().map(|c| c.v.clone()).collect(),
            })
            .collect();
        let components = a
            .components
            .iter()
            .enumerate()
            .map(|(index, c)| ComponentOut {
                index,
                degree: c.degree,
                equation: format_poly(&c.form),
                v: c.candidate_v.clone(),
                actual_multiplicities: c.actual_mults.clone(),
            })
            .collect();
        let fibers = a
            .fibers
            .iter()
            .map(|f| FiberOut {
                lambda: k.format(&f.lambda_mu[0]),
                mu: k.format(&f.lambda_mu[1]),
                member: format_poly(&f.member_form),
                factorization: f
                    .factorization
                    .iter()
                    .map(|&(component, exponent)| FactorOut { component, exponent })
                    .collect(),
            })
            .collect();
        OutputDocument {
            input: InputEcho { field, f: f_text.to_string(), g: g_text.to_string(), degree: a.pencil.degree() },
            base_points,
            candidates,
            components,
            fibers,
            verification: a.report.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }
}

fn chart_name(c: AffineChart) -> &'static str {
    match c {
        AffineChart::Z => "Z = 1",
        AffineChart::Y => "Y = 1",
        AffineChart::X => "X = 1",
    }
}

/// Human-readable summary.
pub fn render_text(a: &Analysis) -> String {
    let k = a.pencil.field();
    let mut s = String::new();
    let _ = writeln!(s, "field: {}", k.describe());
    let _ = writeln!(s, "F = {}", format_poly(a.pencil.f()));
    let _ = writeln!(s, "G = {}", format_poly(a.pencil.g()));
    let _ = writeln!(s, "note: F and G are coprime; an irreducible general member is assumed, not checked");
    let _ = writeln!(s, "\nbase points ({}):", a.cluster.len());
    for p in a.cluster.points() {
        let indent = "  ".repeat(p.level + 1);
        let place = match &p.origin {
            PointOrigin::Proper { coords, chart } => format!(
                "({} : {} : {}) [{}]",
                k.format(&coords[0]),
                k.format(&coords[1]),
                k.format(&coords[2]),
                chart_name(*chart)
            ),
            PointOrigin::InfinitelyNear { chart: BlowupChart::Finite, center } => {
                format!("slope {} over p{}", k.format(center), p.parent.unwrap())
            }
            PointOrigin::InfinitelyNear { chart: BlowupChart::Infinite, .. } => {
                format!("vertical direction over p{}", p.parent.unwrap())
            }
        };
        let prox: Vec<String> = p.proximate_to.iter().map(|q| format!("p{q}")).collect();
        let prox = if prox.is_empty() { String::new() } else { format!(", proximate to {}", prox.join(", ")) };
        let _ = writeln!(s, "{indent}p{} {place}, m = {}{prox}", p.id, p.generic_mult);
    }
    let _ = writeln!(s, "\ncandidates:");
    for d in &a.degrees {
        let _ = writeln!(
            s,
            "  e = {}: {} candidates, {} of dimension 0, {} without exceptional part, {} new components",
            d.e, d.candidates, d.dimension_zero, d.without_exceptional_part, d.new_components
        );
        for c in &d.dump {
            let v: Vec<String> = c.v.iter().map(|x| x.to_string()).collect();
            let _ = writeln!(s, "    ({})", v.join(","));
        }
    }
    let _ = writeln!(s, "\ncomponents ({}):", a.components.len());
    for (i, c) in a.components.iter().enumerate() {
        let _ = writeln!(s, "  C{i} (degree {}): {}", c.degree, format_poly(&c.form));
    }
    let _ = writeln!(s, "\nfibers ({}):", a.fibers.len());
    for f in &a.fibers {
        let parts: Vec<String> = f
            .factorization
            .iter()
            .map(|&(i, e)| if e == 1 { format!("C{i}") } else { format!("C{i}^{e}") })
            .collect();
        let _ = writeln!(
            s,
            "  ({} : {}): {}",
            k.format(&f.lambda_mu[0]),
            k.format(&f.lambda_mu[1]),
            parts.join(" * ")
        );
    }
    if let Some(r) = &a.report {
        let _ = writeln!(s, "\nverification: {}", if r.passed() { "pass" } else { "FAIL" });
        for e in r.fibers.iter().filter(|e| !e.passed) {
            let _ = writeln!(s, "  fiber {}: {}", e.index, e.diagnostics.join("; "));
        }
        for e in r.components.iter().filter(|e| !e.passed) {
            let _ = writeln!(s, "  component {}: {}", e.index, e.diagnostics.join("; "));
        }
    }
    s
}
