//! Resolution of the base locus of a pencil.
//!
//! Proper base points are the common zeros of `F` and `G` in P², found with
//! resultants. Over each of them the pencil is blown up repeatedly: with
//! `m` the generic multiplicity at a point, the virtual transforms of `F`
//! and `G` (substitute, divide by `x^m`) span the transformed pencil, and
//! the next base points are the common zeros of those transforms on the new
//! exceptional line. They are read off from the degree-`m` forms of `F` and
//! `G` at the point. The process stops on a branch when the transforms share
//! no point of the exceptional line.

use rayon::prelude::*;

use crate::cluster::{satellite_detect, Cluster, ClusterPoint, LocalExceptional, PointOrigin};
use crate::error::Error;
use crate::field::{determinant, k_factor, Field, FieldElement, Matrix, NumberField, UniPoly};
use crate::poly::{AffineChart, BlowupChart, Monomial, MultiPoly};

/// A pencil `λF + μG` of plane curves of degree `d`.
#[derive(Clone, Debug, PartialEq)]
pub struct Pencil {
    field: NumberField,
    f: MultiPoly,
    g: MultiPoly,
    degree: u32,
}

impl Pencil {
    /// Checks that `F`, `G` are non-proportional forms of one degree `d ≥ 1`
    /// in `X, Y, Z`. Coprimality is checked by [`resolve_base_locus`].
    pub fn new(f: MultiPoly, g: MultiPoly) -> Result<Self, Error> {
        if f.nvars() != 3 || g.nvars() != 3 {
            return Err(Error::InvalidPencil("generators must be forms in X, Y, Z".into()));
        }
        let (Some(df), Some(dg)) = (f.homogeneous_degree(), g.homogeneous_degree()) else {
            return Err(Error::InvalidPencil("generators must be nonzero homogeneous forms".into()));
        };
        if df != dg || df == 0 {
            return Err(Error::InvalidPencil(format!("degrees {df} and {dg}")));
        }
        if f.canonical_form()? == g.canonical_form()? {
            return Err(Error::InvalidPencil("generators are proportional".into()));
        }
        let field = f.field().clone();
        Ok(Pencil { field, f, g, degree: df })
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn f(&self) -> &MultiPoly {
        &self.f
    }

    pub fn g(&self) -> &MultiPoly {
        &self.g
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// The member `λF + μG`.
    pub fn member(&self, lambda: &FieldElement, mu: &FieldElement) -> MultiPoly {
        self.f.scale(lambda).add(&self.g.scale(mu))
    }

    /// The same pencil with generators `(F + G, F − G)`.
    pub fn rebased_sum_difference(&self) -> Pencil {
        Pencil {
            field: self.field.clone(),
            f: self.f.add(&self.g),
            g: self.f.sub(&self.g),
            degree: self.degree,
        }
    }
}

/// Options for the resolution.
#[derive(Clone, Copy, Debug, Default)]
pub struct ResolveOptions {
    /// Offset of the third probe member `F + (1 + seed)·G`.
    pub probe_seed: u32,
}

/// Computes the cluster of base points of the pencil with generic multiplicities.
pub fn resolve_base_locus(pencil: &Pencil) -> Result<Cluster, Error> {
    resolve_base_locus_with(pencil, ResolveOptions::default())
}

pub fn resolve_base_locus_with(pencil: &Pencil, opts: ResolveOptions) -> Result<Cluster, Error> {
    let k = pencil.field();
    let gcd = form_gcd(pencil.f(), pencil.g());
    if !gcd.is_constant() {
        return Err(Error::FixedComponent { gcd: crate::io::format_poly(&gcd.canonical_form()?) });
    }
    let d = pencil.degree();
    let roots = proper_base_points(pencil)?;
    let depth_guard = 4 * (d as usize) * (d as usize);
    let subtrees: Vec<Result<Vec<Node>, Error>> = roots
        .par_iter()
        .map(|(coords, chart)| {
            let mut nodes = Vec::new();
            let [i, j] = chart.free_indices();
            let shift = [coords[i].clone(), coords[j].clone()];
            let f = pencil.f().dehomogenize(*chart).translate(&shift);
            let g = pencil.g().dehomogenize(*chart).translate(&shift);
            let origin = PointOrigin::Proper { coords: coords.clone(), chart: *chart };
            let ctx = Branch { k, probe_seed: opts.probe_seed, depth_guard, budget: (d as u64) * (d as u64) };
            ctx.resolve(f, g, None, origin, vec![], LocalExceptional::default(), 0, &mut nodes)?;
            Ok(nodes)
        })
        .collect();

    let mut points = Vec::new();
    for sub in subtrees {
        let sub = sub?;
        let offset = points.len();
        for node in sub {
            let id = points.len();
            points.push(ClusterPoint {
                id,
                level: node.level,
                parent: node.parent.map(|p| p + offset),
                origin: node.origin,
                proximate_to: node.proximate.iter().map(|p| p + offset).collect(),
                generic_mult: node.mult,
            });
        }
    }
    let cluster = Cluster::new(k, points)?;
    cluster.check_invariants(d)?;
    Ok(cluster)
}

struct Node {
    level: usize,
    parent: Option<usize>,
    origin: PointOrigin,
    proximate: Vec<usize>,
    mult: u32,
}

struct Branch<'a> {
    k: &'a NumberField,
    probe_seed: u32,
    depth_guard: usize,
    budget: u64,
}

impl Branch<'_> {
    #[allow(clippy::too_many_arguments)]
    fn resolve(
        &self,
        f: MultiPoly,
        g: MultiPoly,
        parent: Option<usize>,
        origin: PointOrigin,
        proximate: Vec<usize>,
        exc: LocalExceptional,
        level: usize,
        nodes: &mut Vec<Node>,
    ) -> Result<(), Error> {
        if level > self.depth_guard {
            return Err(Error::NonTermination { depth: self.depth_guard });
        }
        let k = self.k;
        let m = generic_member_multiplicity_seeded(&[f.clone(), g.clone()], self.probe_seed);
        if m == 0 {
            return Err(Error::Invariant("resolved point is not a base point".into()));
        }
        let id = nodes.len();
        nodes.push(Node { level, parent, origin, proximate, mult: m });
        let used: u64 = nodes.iter().map(|n| (n.mult as u64).pow(2)).sum();
        if used > self.budget {
            return Err(Error::Invariant(format!(
                "sum of squared multiplicities exceeds d^2 = {}",
                self.budget
            )));
        }

        for (chart, center) in exceptional_base_points(k, &f, &g, m)? {
            let f1 = f.blowup_transform(chart, &center, m)?;
            let g1 = g.blowup_transform(chart, &center, m)?;
            let (prox, exc1) = satellite_detect(k, id, &exc, chart, &center);
            let origin = PointOrigin::InfinitelyNear { chart, center };
            self.resolve(f1, g1, Some(id), origin, prox, exc1, level + 1, nodes)?;
        }
        Ok(())
    }
}

/// The common points, on the exceptional line of a blow-up at the origin,
/// of the virtual transforms (drop `m`) of `f` and `g`: finite slopes sorted,
/// then the direction at infinity if present.
fn exceptional_base_points(
    k: &NumberField,
    f: &MultiPoly,
    g: &MultiPoly,
    m: u32,
) -> Result<Vec<(BlowupChart, FieldElement)>, Error> {
    let fm = f.homogeneous_part(m);
    let gm = g.homogeneous_part(m);
    let one = k.one();
    let a = fm.to_univariate(1, &[one.clone(), one.clone()]);
    let b = gm.to_univariate(1, &[one.clone(), one]);
    let h = a.gcd(&b, k);
    let mut out = Vec::new();
    if h.degree().unwrap_or(0) > 0 {
        let mut slopes = Vec::new();
        for (factor, _) in k_factor(k, &h) {
            if factor.degree() != Some(1) {
                return Err(Error::ExtensionRequired { factor: format_univariate(k, &factor, "t") });
            }
            slopes.push(k.neg(&factor.coeffs()[0]));
        }
        slopes.sort();
        out.extend(slopes.into_iter().map(|c| (BlowupChart::Finite, c)));
    }
    let top = Monomial([0, m, 0]);
    if fm.coeff(&top).is_none() && gm.coeff(&top).is_none() {
        out.push((BlowupChart::Infinite, k.zero()));
    }
    Ok(out)
}

/// Multiplicity at the origin of a generic member of the pencil spanned by
/// the given local equations.
///
/// The minimum of the multiplicities of the probe members `f`, `g` and
/// `f + g`. The order of `λf + μg` is `min(ord f, ord g)` except when the
/// lowest forms cancel, which happens for at most one ratio, so the minimum
/// over the probes is attained by a generator and equals the generic value.
pub fn generic_member_multiplicity(members: &[MultiPoly]) -> u32 {
    generic_member_multiplicity_seeded(members, 0)
}

/// As [`generic_member_multiplicity`], with the third probe `f + (1 + seed)·g`.
pub fn generic_member_multiplicity_seeded(members: &[MultiPoly], seed: u32) -> u32 {
    assert!(!members.is_empty());
    let k = members[0].field();
    let mut probes: Vec<MultiPoly> = members.to_vec();
    if members.len() >= 2 {
        let t = k.from_int(1 + seed as i64);
        probes.push(members[0].add(&members[1].scale(&t)));
    }
    probes
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| p.multiplicity_at_origin().unwrap())
        .min()
        .expect("at least one nonzero member")
}

/// Proper base points, ordered: chart `Z` points by coordinates, then the
/// points `(a:1:0)` by `a`, then `(1:0:0)`.
fn proper_base_points(pencil: &Pencil) -> Result<Vec<([FieldElement; 3], AffineChart)>, Error> {
    let k = pencil.field();
    let (zero, one) = (k.zero(), k.one());
    let mut out = Vec::new();

    let fa = pencil.f().dehomogenize(AffineChart::Z);
    let ga = pencil.g().dehomogenize(AffineChart::Z);
    let mut affine = common_points(&fa, &ga)?;
    affine.sort();
    for [a, b] in affine {
        out.push(([a, b, one.clone()], AffineChart::Z));
    }

    // the line Z = 0 minus (1:0:0)
    let u = pencil.f().to_univariate(0, &[zero.clone(), one.clone(), zero.clone()]);
    let w = pencil.g().to_univariate(0, &[zero.clone(), one.clone(), zero.clone()]);
    let h = u.gcd(&w, k);
    if h.degree().unwrap_or(0) > 0 {
        let mut at_infinity = Vec::new();
        for (factor, _) in k_factor(k, &h) {
            if factor.degree() != Some(1) {
                return Err(Error::ExtensionRequired { factor: format_univariate(k, &factor, "X") });
            }
            at_infinity.push(k.neg(&factor.coeffs()[0]));
        }
        at_infinity.sort();
        for a in at_infinity {
            out.push(([a, one.clone(), zero.clone()], AffineChart::Y));
        }
    }

    let p = [one.clone(), zero.clone(), zero.clone()];
    if k.is_zero(&pencil.f().eval(&p)) && k.is_zero(&pencil.g().eval(&p)) {
        out.push((p, AffineChart::X));
    }
    Ok(out)
}

/// All common zeros with coordinates in K of two coprime bivariate
/// polynomials.
///
/// After a shear `x ↦ x + t·y` that gives `f` a constant leading coefficient
/// in `y`, every root of `Res_y(f, g)` is the `x`-coordinate of a common
/// zero, so a non-linear irreducible factor of the resultant (or of a
/// fiber gcd) witnesses a common zero outside K.
pub fn common_points(f: &MultiPoly, g: &MultiPoly) -> Result<Vec<[FieldElement; 2]>, Error> {
    let k = f.field();
    if f.is_constant() || g.is_constant() {
        return Ok(Vec::new());
    }
    let t = shear_for_monic(f);
    let shear = shear_matrix(k, &t);
    let fs = f.linear_change(&shear);
    let gs = g.linear_change(&shear);
    let res = resultant_y(&fs, &gs);
    if res.is_zero() {
        return Err(Error::FixedComponent { gcd: "a common factor of the affine equations".into() });
    }
    let mut points = Vec::new();
    for (factor, _) in k_factor(k, &res) {
        if factor.degree() != Some(1) {
            return Err(Error::ExtensionRequired { factor: format_univariate(k, &factor, "x") });
        }
        let xi = k.neg(&factor.coeffs()[0]);
        let u = fs.to_univariate(1, &[xi.clone(), k.zero()]);
        let w = gs.to_univariate(1, &[xi.clone(), k.zero()]);
        let h = u.gcd(&w, k);
        if h.degree().unwrap_or(0) == 0 {
            continue;
        }
        for (yf, _) in k_factor(k, &h) {
            if yf.degree() != Some(1) {
                return Err(Error::ExtensionRequired { factor: format_univariate(k, &yf, "y") });
            }
            let eta = k.neg(&yf.coeffs()[0]);
            // undo the shear: original x = x' + t·y
            let x = k.add(&xi, &k.mul(&t, &eta));
            points.push([x, eta]);
        }
    }
    for p in &points {
        debug_assert!(k.is_zero(&f.eval(p)) && k.is_zero(&g.eval(p)));
    }
    Ok(points)
}

/// The substitution matrix of `x ↦ x + t·y` on two variables.
fn shear_matrix(k: &NumberField, t: &FieldElement) -> Vec<Vec<FieldElement>> {
    vec![vec![k.one(), t.clone()], vec![k.zero(), k.one()]]
}

/// Smallest `t` in 0, 1, −1, 2, … such that `f(x + t·y, y)` has a constant
/// leading coefficient in `y`.
fn shear_for_monic(f: &MultiPoly) -> FieldElement {
    let k = f.field();
    let d = f.total_degree().unwrap();
    let top = f.homogeneous_part(d);
    for step in 0i64.. {
        let t = if step % 2 == 1 { (step + 1) / 2 } else { -(step / 2) };
        let t = k.from_int(t);
        if !k.is_zero(&top.eval(&[t.clone(), k.one()])) {
            return t;
        }
    }
    unreachable!()
}

/// `Res_y(f, g)` as a polynomial in `x`, by evaluation at integer points and
/// interpolation. `f` must have a constant leading coefficient in `y`.
fn resultant_y(f: &MultiPoly, g: &MultiPoly) -> UniPoly<FieldElement> {
    let k = f.field();
    let bound = f.total_degree().unwrap() * g.total_degree().unwrap();
    let ny = f.terms().map(|(m, _)| m.0[1]).max().unwrap() as usize;
    let my = g.terms().map(|(m, _)| m.0[1]).max().unwrap() as usize;
    let xs: Vec<FieldElement> = (0..=bound as i64).map(|i| k.from_int(i)).collect();
    let ys: Vec<FieldElement> = xs
        .iter()
        .map(|x| {
            let u = f.to_univariate(1, &[x.clone(), k.zero()]);
            let w = g.to_univariate(1, &[x.clone(), k.zero()]);
            sylvester_resultant(k, &u, ny, &w, my)
        })
        .collect();
    UniPoly::interpolate(&xs, &ys, k)
}

/// Resultant with formal degrees `n` for `u` and `m` for `w`.
fn sylvester_resultant(
    k: &NumberField,
    u: &UniPoly<FieldElement>,
    n: usize,
    w: &UniPoly<FieldElement>,
    m: usize,
) -> FieldElement {
    if n == 0 && m == 0 {
        return k.one();
    }
    let size = n + m;
    let mut rows = Vec::with_capacity(size);
    for i in 0..m {
        let mut row = vec![k.zero(); size];
        for j in 0..=n {
            row[i + j] = u.coeff(k, n - j);
        }
        rows.push(row);
    }
    for i in 0..n {
        let mut row = vec![k.zero(); size];
        for j in 0..=m {
            row[i + j] = w.coeff(k, m - j);
        }
        rows.push(row);
    }
    determinant(k, &Matrix::from_rows(size, rows))
}

/// Greatest common divisor of two forms in `X, Y, Z`, monic in the sense of
/// [`MultiPoly::canonical_form`] (a constant 1 when coprime).
pub fn form_gcd(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    let k = f.field();
    let zval = |p: &MultiPoly| p.terms().map(|(m, _)| m.0[2]).min().unwrap_or(0);
    let zpow = zval(f).min(zval(g));
    let strip = |p: &MultiPoly| {
        MultiPoly::from_terms(
            k,
            3,
            p.terms().map(|(m, c)| (Monomial([m.0[0], m.0[1], m.0[2] - zpow]), c.clone())),
        )
    };
    let (f0, g0) = (strip(f), strip(g));
    // at least one of them is no longer divisible by Z
    let (fa, ga) = (f0.dehomogenize(AffineChart::Z), g0.dehomogenize(AffineChart::Z));
    let (lead, other) = if zval(&f0) == 0 { (fa, ga) } else { (ga, fa) };
    let affine = if lead.is_constant() || other.is_constant() {
        MultiPoly::one(k, 2)
    } else {
        bivariate_gcd(&lead, &other)
    };
    // homogenize
    let dg = affine.total_degree().unwrap_or(0);
    let hom = MultiPoly::from_terms(
        k,
        3,
        affine
            .terms()
            .map(|(m, c)| (Monomial([m.0[0], m.0[1], dg - m.degree() + zpow]), c.clone())),
    );
    hom.canonical_form().expect("gcd is nonzero")
}

/// gcd of bivariate polynomials; `f` must have a term of top degree.
fn bivariate_gcd(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    let k = f.field();
    let t = shear_for_monic(f);
    let fs = f.linear_change(&shear_matrix(k, &t));
    let gs = g.linear_change(&shear_matrix(k, &t));
    let bound = fs.total_degree().unwrap() as usize;
    let mut samples: Vec<(FieldElement, UniPoly<FieldElement>)> = Vec::new();
    let mut x = 0i64;
    loop {
        while samples.len() < 2 * bound + 2 {
            let xv = k.from_int(x);
            x += 1;
            let u = fs.to_univariate(1, &[xv.clone(), k.zero()]);
            let w = gs.to_univariate(1, &[xv.clone(), k.zero()]);
            samples.push((xv, u.gcd(&w, k)));
        }
        let min_deg = samples.iter().map(|(_, h)| h.degree().unwrap_or(0)).min().unwrap();
        if min_deg == 0 {
            return MultiPoly::one(k, 2);
        }
        let good: Vec<_> = samples
            .iter()
            .filter(|(_, h)| h.degree() == Some(min_deg))
            .take(bound + 1)
            .collect();
        if good.len() == bound + 1 {
            let xs: Vec<FieldElement> = good.iter().map(|(x, _)| x.clone()).collect();
            let mut h = MultiPoly::zero(k, 2);
            for j in 0..=min_deg {
                let ys: Vec<FieldElement> = good.iter().map(|(_, p)| p.coeff(k, j)).collect();
                let cx = UniPoly::interpolate(&xs, &ys, k);
                for (i, c) in cx.coeffs().iter().enumerate() {
                    h.add_term(Monomial([i as u32, j as u32, 0]), c.clone());
                }
            }
            if fs.divide_exact(&h).is_some() && gs.divide_exact(&h).is_some() {
                let minus_t = k.neg(&t);
                return h.linear_change(&shear_matrix(k, &minus_t));
            }
        }
        // unlucky evaluation points; sample more
        let extra = samples.len();
        samples.reserve(extra);
        let target = samples.len() * 2;
        while samples.len() < target {
            let xv = k.from_int(x);
            x += 1;
            let u = fs.to_univariate(1, &[xv.clone(), k.zero()]);
            let w = gs.to_univariate(1, &[xv.clone(), k.zero()]);
            samples.push((xv, u.gcd(&w, k)));
        }
    }
}

pub(crate) fn format_univariate(k: &NumberField, p: &UniPoly<FieldElement>, var: &str) -> String {
    let poly = MultiPoly::from_univariate(k, 1, 0, p);
    crate::io::format_poly_with(&poly, &[var])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::q;

    fn vars(k: &NumberField) -> [MultiPoly; 3] {
        [0, 1, 2].map(|i| MultiPoly::var(k, 3, i))
    }

    #[test]
    fn lines_pencil() {
        let k = NumberField::rationals();
        let [x, y, _] = vars(&k);
        let c = resolve_base_locus(&Pencil::new(x, y).unwrap()).unwrap();
        assert_eq!(c.len(), 1);
        let p = &c.points()[0];
        assert_eq!(p.generic_mult, 1);
        assert_eq!(
            p.origin,
            PointOrigin::Proper { coords: [k.zero(), k.zero(), k.one()], chart: AffineChart::Z }
        );
    }

    #[test]
    fn conic_pencil_has_two_infinitely_near_points() {
        let k = NumberField::rationals();
        let [x, y, z] = vars(&k);
        let c = resolve_base_locus(&Pencil::new(x.mul(&y), z.pow(2)).unwrap()).unwrap();
        assert_eq!(c.len(), 4);
        assert!(c.points().iter().all(|p| p.generic_mult == 1));
        let levels: Vec<_> = c.points().iter().map(|p| p.level).collect();
        assert_eq!(levels, vec![0, 1, 0, 1]);
        // (0:1:0) comes first (chart Y), then (1:0:0) (chart X)
        let PointOrigin::Proper { chart, .. } = &c.points()[0].origin else { panic!() };
        assert_eq!(*chart, AffineChart::Y);
    }

    #[test]
    fn fixed_component_detected() {
        let k = NumberField::rationals();
        let [x, y, _] = vars(&k);
        let err = resolve_base_locus(&Pencil::new(x.pow(2), x.mul(&y)).unwrap()).unwrap_err();
        assert_eq!(err, Error::FixedComponent { gcd: "X".into() });
    }

    #[test]
    fn cusp_pencil_has_a_satellite() {
        // F = Y^2 Z - X^3, G = Y^2 Z: at (0:0:1) a double point followed by a
        // free point and a satellite; at (0:1:0) three free points.
        let k = NumberField::rationals();
        let [x, y, z] = vars(&k);
        let f = y.pow(2).mul(&z).sub(&x.pow(3));
        let g = y.pow(2).mul(&z);
        let c = resolve_base_locus(&Pencil::new(f, g).unwrap()).unwrap();
        let mults = c.generic_mults();
        assert_eq!(mults, vec![2, 1, 1, 1, 1, 1]);
        assert_eq!(c.points()[2].proximate_to, vec![0, 1]);
        assert!(matches!(
            c.points()[2].origin,
            PointOrigin::InfinitelyNear { chart: BlowupChart::Infinite, .. }
        ));
    }

    #[test]
    fn common_points_cases() {
        let k5 = NumberField::new("r", vec![q(-5), q(0), q(1)]).unwrap();
        let x = MultiPoly::var(&k5, 2, 0);
        let y = MultiPoly::var(&k5, 2, 1);
        let pts = common_points(&x, &y).unwrap();
        assert_eq!(pts, vec![[k5.zero(), k5.zero()]]);
        let f = x.pow(2).sub(&MultiPoly::constant(&k5, 2, k5.from_int(5)));
        let mut pts = common_points(&f, &y).unwrap();
        pts.sort();
        let r = k5.generator();
        let mut expected = vec![[r.clone(), k5.zero()], [k5.neg(&r), k5.zero()]];
        expected.sort();
        assert_eq!(pts, expected);

        let kq = NumberField::rationals();
        let x = MultiPoly::var(&kq, 2, 0);
        let y = MultiPoly::var(&kq, 2, 1);
        let f = x.pow(2).add(&MultiPoly::one(&kq, 2));
        assert_eq!(
            common_points(&f, &y),
            Err(Error::ExtensionRequired { factor: "x^2+1".into() })
        );
    }

    #[test]
    fn generic_multiplicity_examples() {
        let k = NumberField::rationals();
        let x = MultiPoly::var(&k, 2, 0);
        let y = MultiPoly::var(&k, 2, 1);
        assert_eq!(generic_member_multiplicity(&[x.clone(), y.clone()]), 1);
        assert_eq!(generic_member_multiplicity(&[x.pow(2).sub(&y), x.mul(&y)]), 1);
        let a = x.add(&y).add(&x.pow(2));
        let b = x.add(&y).add(&y.pow(2));
        assert_eq!(a.sub(&b).multiplicity_at_origin(), Ok(2));
        assert_eq!(generic_member_multiplicity(&[a, b]), 1);
    }

    #[test]
    fn gcd_of_forms() {
        let k = NumberField::rationals();
        let [x, y, z] = vars(&k);
        let l = x.add(&y.scale(&k.from_int(2))).sub(&z);
        let f = l.mul(&x.pow(2).add(&z.pow(2)));
        let g = l.mul(&y.sub(&z));
        assert_eq!(form_gcd(&f, &g), l.canonical_form().unwrap());
        assert!(form_gcd(&x.mul(&z), &y).is_constant());
        assert_eq!(form_gcd(&x.mul(&z), &y.mul(&z)), z);
    }
}
