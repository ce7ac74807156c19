//! The main loop over degrees, fiber grouping and end-to-end verification.

use rayon::prelude::*;
use serde::Serialize;

use crate::base_points::{resolve_base_locus_with, Pencil, ResolveOptions};
use crate::cluster::Cluster;
use crate::enumerator::{enumerate_candidates, Candidate};
use crate::error::Error;
use crate::field::{rank_and_kernel, Field, FieldElement, Matrix};
use crate::io::format_poly;
use crate::linear_systems::{
    has_exceptional_part, impose_cluster_conditions, is_component, projective_dimension, unique_member,
};
use crate::poly::MultiPoly;

/// An integral component of a special fiber.
#[derive(Clone, Debug, PartialEq)]
pub struct CurveComponent {
    /// Canonically scaled defining form.
    pub form: MultiPoly,
    pub degree: u32,
    /// Actual multiplicity at each cluster point, indexed by point id.
    pub actual_mults: Vec<u32>,
    /// The candidate whose linear system produced the form.
    pub candidate_v: Vec<u32>,
}

/// A special fiber `λF + μG` with its decomposition into components.
#[derive(Clone, Debug, PartialEq)]
pub struct Fiber {
    /// `(λ, μ)` with the first nonzero entry equal to 1.
    pub lambda_mu: [FieldElement; 2],
    /// `(component index, exponent)`, by component index.
    pub factorization: Vec<(usize, u32)>,
    pub member_form: MultiPoly,
}

#[derive(Clone, Copy, Debug)]
pub struct DriverOptions {
    /// Upper bound for the degree loop; defaults to the pencil degree.
    pub max_degree: Option<u32>,
    pub probe_seed: u32,
    pub verify: bool,
    /// Keep the full candidate lists in the analysis.
    pub keep_candidates: bool,
}

impl Default for DriverOptions {
    fn default() -> Self {
        DriverOptions { max_degree: None, probe_seed: 0, verify: true, keep_candidates: false }
    }
}

/// Candidates and survivors for one degree.
#[derive(Clone, Debug, Default)]
pub struct DegreeSummary {
    pub e: u32,
    pub candidates: usize,
    pub dimension_zero: usize,
    pub without_exceptional_part: usize,
    pub new_components: usize,
    pub dump: Vec<Candidate>,
}

#[derive(Clone, Debug)]
pub struct Analysis {
    pub pencil: Pencil,
    pub cluster: Cluster,
    pub degrees: Vec<DegreeSummary>,
    pub components: Vec<CurveComponent>,
    pub fibers: Vec<Fiber>,
    pub report: Option<VerificationReport>,
}

/// Resolves the base locus, finds the components and groups them into fibers.
pub fn analyze(pencil: &Pencil, opts: &DriverOptions) -> Result<Analysis, Error> {
    let cluster = resolve_base_locus_with(pencil, ResolveOptions { probe_seed: opts.probe_seed })?;
    let d = pencil.degree();
    let top = opts.max_degree.unwrap_or(d);
    let mut components: Vec<CurveComponent> = Vec::new();
    let mut degrees = Vec::new();
    for e in 1..=top {
        let candidates = enumerate_candidates(&cluster, e, d);
        let earlier = &components;
        let outcomes: Vec<Result<Outcome, Error>> =
            candidates.par_iter().map(|c| examine(c, &cluster, earlier)).collect();
        let mut summary = DegreeSummary { e, candidates: candidates.len(), ..Default::default() };
        let mut fresh: Vec<CurveComponent> = Vec::new();
        for outcome in outcomes {
            match outcome? {
                Outcome::PositiveDimension => {}
                Outcome::ExceptionalPart => summary.dimension_zero += 1,
                Outcome::Reducible => {
                    summary.dimension_zero += 1;
                    summary.without_exceptional_part += 1;
                }
                Outcome::Component(c) => {
                    summary.dimension_zero += 1;
                    summary.without_exceptional_part += 1;
                    if !fresh.iter().any(|f| f.form == c.form) {
                        fresh.push(c);
                    }
                }
            }
        }
        fresh.sort_by(|a, b| a.form.cmp_terms(&b.form));
        summary.new_components = fresh.len();
        if opts.keep_candidates {
            summary.dump = candidates;
        }
        degrees.push(summary);
        components.extend(fresh);
    }
    let fibers = group_into_fibers(&components, pencil)?;
    let report = opts.verify.then(|| verify_output(&fibers, &components, &cluster, pencil));
    Ok(Analysis { pencil: pencil.clone(), cluster, degrees, components, fibers, report })
}

enum Outcome {
    PositiveDimension,
    ExceptionalPart,
    Reducible,
    Component(CurveComponent),
}

fn examine(c: &Candidate, cluster: &Cluster, earlier: &[CurveComponent]) -> Result<Outcome, Error> {
    let sys = impose_cluster_conditions(c.e, c, cluster);
    if projective_dimension(&sys) != 0 {
        return Ok(Outcome::PositiveDimension);
    }
    let form = unique_member(&sys)?;
    if has_exceptional_part(&form, c, cluster)? {
        return Ok(Outcome::ExceptionalPart);
    }
    if earlier.iter().any(|q| is_component(&q.form, &form)) {
        return Ok(Outcome::Reducible);
    }
    Ok(Outcome::Component(CurveComponent {
        form,
        degree: c.e,
        actual_mults: c.v.clone(),
        candidate_v: c.v.clone(),
    }))
}

/// The integral components of the special fibers, ordered by degree and
/// then by canonical form.
pub fn special_fiber_components(pencil: &Pencil) -> Result<Vec<CurveComponent>, Error> {
    let opts = DriverOptions { verify: false, ..Default::default() };
    Ok(analyze(pencil, &opts)?.components)
}

/// The point `(λ:μ)` with `component | λF + μG`.
///
/// Remainders modulo a single polynomial are linear, so this is the kernel
/// of the two-column matrix of the remainders of `F` and `G`.
pub fn fiber_parameter(component: &MultiPoly, pencil: &Pencil) -> Result<[FieldElement; 2], Error> {
    let k = pencil.field();
    let rf = pencil.f().reduce_by(component);
    let rg = pencil.g().reduce_by(component);
    let mut monos: Vec<_> = rf.terms().chain(rg.terms()).map(|(m, _)| *m).collect();
    monos.sort();
    monos.dedup();
    let rows = monos
        .iter()
        .map(|m| {
            vec![
                rf.coeff(m).cloned().unwrap_or_else(|| k.zero()),
                rg.coeff(m).cloned().unwrap_or_else(|| k.zero()),
            ]
        })
        .collect();
    let (_, kernel) = rank_and_kernel(k, &Matrix::from_rows(2, rows));
    match kernel.len() {
        0 => Err(Error::NoFiberFound(format_poly(component))),
        1 => {
            let v = &kernel[0];
            let lead = if k.is_zero(&v[0]) { &v[1] } else { &v[0] };
            let inv = k.inv(lead);
            Ok([k.mul(&v[0], &inv), k.mul(&v[1], &inv)])
        }
        _ => Err(Error::AmbiguousFiber(format_poly(component))),
    }
}

/// Groups components by the member they divide; fibers are ordered by their
/// first component.
pub fn group_into_fibers(components: &[CurveComponent], pencil: &Pencil) -> Result<Vec<Fiber>, Error> {
    let mut fibers: Vec<Fiber> = Vec::new();
    for (i, c) in components.iter().enumerate() {
        let lm = fiber_parameter(&c.form, pencil)?;
        let fiber = match fibers.iter_mut().find(|f| f.lambda_mu == lm) {
            Some(f) => f,
            None => {
                let member_form = pencil.member(&lm[0], &lm[1]);
                fibers.push(Fiber { lambda_mu: lm, factorization: Vec::new(), member_form });
                fibers.last_mut().unwrap()
            }
        };
        let mut rest = fiber.member_form.clone();
        let mut exp = 0;
        while let Some(q) = rest.divide_exact(&c.form) {
            rest = q;
            exp += 1;
        }
        fiber.factorization.push((i, exp));
    }
    for f in &fibers {
        if let Some(msg) = residual_problem(f, components) {
            return Err(Error::Invariant(msg));
        }
    }
    Ok(fibers)
}

/// `None` when the member is a nonzero constant times the product of its
/// components; otherwise a diagnostic.
fn residual_problem(f: &Fiber, components: &[CurveComponent]) -> Option<String> {
    let k = f.member_form.field();
    let mut product = MultiPoly::one(k, 3);
    for &(i, exp) in &f.factorization {
        product = product.mul(&components[i].form.pow(exp));
    }
    match f.member_form.divide_exact(&product) {
        None => Some("product of the components does not divide the member".into()),
        Some(r) if !r.is_constant() => {
            Some(format!("residual factor of degree {}", r.total_degree().unwrap_or(0)))
        }
        Some(r) if r.is_zero() => Some("member is zero".into()),
        Some(_) => None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckEntry {
    pub index: usize,
    pub passed: bool,
    pub diagnostics: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub fibers: Vec<CheckEntry>,
    pub components: Vec<CheckEntry>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.fibers.iter().chain(&self.components).all(|e| e.passed)
    }
}

/// Independent re-check of the output: every fiber multiplies back to its
/// member, every component has the recorded multiplicities, is orthogonal to
/// the generic member's class, has non-positive self-intersection on the
/// blown-up surface and lies in exactly one fiber.
pub fn verify_output(
    fibers: &[Fiber],
    components: &[CurveComponent],
    cluster: &Cluster,
    pencil: &Pencil,
) -> VerificationReport {
    let k = pencil.field();
    let d = pencil.degree() as u64;
    let generic = cluster.generic_mults();
    let fiber_checks = fibers
        .iter()
        .enumerate()
        .map(|(index, f)| {
            let mut diagnostics = Vec::new();
            if let Some(msg) = residual_problem(f, components) {
                diagnostics.push(msg);
            }
            if f.member_form != pencil.member(&f.lambda_mu[0], &f.lambda_mu[1]) {
                diagnostics.push("member form does not match (λ:μ)".into());
            }
            if f.lambda_mu.iter().all(|c| k.is_zero(c)) {
                diagnostics.push("(λ:μ) is zero".into());
            }
            CheckEntry { index, passed: diagnostics.is_empty(), diagnostics }
        })
        .collect();
    let component_checks = components
        .iter()
        .enumerate()
        .map(|(index, c)| {
            let mut diagnostics = Vec::new();
            match cluster.curve_multiplicities(&c.form) {
                Ok(m) => {
                    if m != c.actual_mults {
                        diagnostics.push("recorded multiplicities differ from recomputed ones".into());
                    }
                    let e = c.degree as u64;
                    let dot: u64 = m.iter().zip(&generic).map(|(&a, &b)| a as u64 * b as u64).sum();
                    if e * d != dot {
                        diagnostics.push(format!("e·d = {} but Σ m_p(C)·m_p = {dot}", e * d));
                    }
                    let sq: u64 = m.iter().map(|&a| (a as u64).pow(2)).sum();
                    if e * e > sq {
                        diagnostics.push(format!("e² = {} exceeds Σ m_p(C)² = {sq}", e * e));
                    }
                }
                Err(err) => diagnostics.push(err.to_string()),
            }
            if c.form.homogeneous_degree() != Some(c.degree) {
                diagnostics.push("form is not homogeneous of the recorded degree".into());
            }
            let owners = fibers
                .iter()
                .filter(|f| f.factorization.iter().any(|&(i, exp)| i == index && exp > 0))
                .count();
            if owners != 1 {
                diagnostics.push(format!("belongs to {owners} fibers"));
            }
            CheckEntry { index, passed: diagnostics.is_empty(), diagnostics }
        })
        .collect();
    VerificationReport { fibers: fiber_checks, components: component_checks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::NumberField;

    fn xyz(k: &NumberField) -> [MultiPoly; 3] {
        [0, 1, 2].map(|i| MultiPoly::var(k, 3, i))
    }

    #[test]
    fn lines_pencil_has_no_components() {
        let k = NumberField::rationals();
        let [x, y, _] = xyz(&k);
        let a = analyze(&Pencil::new(x, y).unwrap(), &DriverOptions::default()).unwrap();
        assert!(a.components.is_empty());
        assert!(a.fibers.is_empty());
        assert!(a.report.unwrap().passed());
    }

    #[test]
    fn conic_pencil() {
        let k = NumberField::rationals();
        let [x, y, z] = xyz(&k);
        let pencil = Pencil::new(x.mul(&y), z.pow(2)).unwrap();
        let a = analyze(&pencil, &DriverOptions::default()).unwrap();
        let forms: Vec<_> = a.components.iter().map(|c| c.form.clone()).collect();
        assert_eq!(forms, vec![x.clone(), y.clone(), z.clone()]);
        assert_eq!(a.fibers.len(), 2);
        assert_eq!(a.fibers[0].lambda_mu, [k.one(), k.zero()]);
        assert_eq!(a.fibers[0].factorization, vec![(0, 1), (1, 1)]);
        assert_eq!(a.fibers[1].lambda_mu, [k.zero(), k.one()]);
        assert_eq!(a.fibers[1].factorization, vec![(2, 2)]);
        assert!(a.report.unwrap().passed());
    }

    #[test]
    fn corrupted_exponent_is_reported() {
        let k = NumberField::rationals();
        let [x, y, z] = xyz(&k);
        let pencil = Pencil::new(x.mul(&y), z.pow(2)).unwrap();
        let a = analyze(&pencil, &DriverOptions::default()).unwrap();
        let mut fibers = a.fibers.clone();
        fibers[1].factorization[0].1 = 1;
        let report = verify_output(&fibers, &a.components, &a.cluster, &pencil);
        assert!(!report.passed());
        assert_eq!(report.fibers[1].diagnostics, vec!["residual factor of degree 1".to_string()]);
    }

    #[test]
    fn fiber_parameter_errors() {
        let k = NumberField::rationals();
        let [x, y, z] = xyz(&k);
        let pencil = Pencil::new(x.mul(&y), z.pow(2)).unwrap();
        let l = x.add(&y).add(&z);
        assert!(matches!(fiber_parameter(&l, &pencil), Err(Error::NoFiberFound(_))));
        assert_eq!(fiber_parameter(&z, &pencil).unwrap(), [k.zero(), k.one()]);
    }
}
