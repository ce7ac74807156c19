use super::{factor_rational_poly, Field, FieldElement, NumberField, Rationals, UniPoly, Q};

/// Monic irreducible factors over K with multiplicities.
pub type KFactorization = Vec<(UniPoly<FieldElement>, usize)>;

/// Factors a nonzero polynomial over K into monic irreducibles.
///
/// Squarefree parts are split with Trager's norm method: shift by a small
/// multiple of the generator until the norm down to Q is squarefree, factor
/// the norm over Q, and take gcds back in K[t]. Polynomials with rational
/// coefficients are first factored over Q.
pub fn k_factor(k: &NumberField, p: &UniPoly<FieldElement>) -> KFactorization {
    assert!(!p.is_zero(), "factorization of the zero polynomial");
    let mut out = Vec::new();
    for (part, mult) in k_squarefree_decomposition(k, p) {
        for f in factor_squarefree(k, &part) {
            out.push((f, mult));
        }
    }
    out.sort_by(|a, b| {
        a.0.degree()
            .cmp(&b.0.degree())
            .then_with(|| a.0.coeffs().cmp(b.0.coeffs()))
    });
    out
}

/// The roots of `p` lying in K, with multiplicities, sorted.
pub fn k_rational_roots(k: &NumberField, p: &UniPoly<FieldElement>) -> Vec<(FieldElement, usize)> {
    let mut roots: Vec<(FieldElement, usize)> = k_factor(k, p)
        .into_iter()
        .filter(|(f, _)| f.degree() == Some(1))
        .map(|(f, m)| (k.neg(&f.coeffs()[0]), m))
        .collect();
    roots.sort();
    roots
}

fn k_squarefree_decomposition(
    k: &NumberField,
    p: &UniPoly<FieldElement>,
) -> Vec<(UniPoly<FieldElement>, usize)> {
    let mut out = Vec::new();
    if p.degree().unwrap_or(0) == 0 {
        return out;
    }
    let dp = p.derivative(k);
    let a0 = p.gcd(&dp, k);
    let mut b = p.div_exact(&a0, k).unwrap();
    let c = dp.div_exact(&a0, k).unwrap();
    let mut d = c.sub(&b.derivative(k), k);
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&d, k);
        b = b.div_exact(&a, k).unwrap();
        let c = d.div_exact(&a, k).unwrap();
        d = c.sub(&b.derivative(k), k);
        if a.degree().unwrap_or(0) > 0 {
            out.push((a.monic(k), i));
        }
        i += 1;
    }
    out
}

fn rational_coeffs(p: &UniPoly<FieldElement>) -> Option<Vec<Q>> {
    p.coeffs().iter().map(|c| c.as_rational().cloned()).collect()
}

fn lift_q(k: &NumberField, p: &UniPoly<Q>) -> UniPoly<FieldElement> {
    UniPoly::new(k, p.coeffs().iter().map(|c| k.from_rational(c)).collect())
}

fn factor_squarefree(k: &NumberField, p: &UniPoly<FieldElement>) -> Vec<UniPoly<FieldElement>> {
    let p = p.monic(k);
    if p.degree() == Some(1) {
        return vec![p];
    }
    if let Some(qc) = rational_coeffs(&p) {
        let qp = UniPoly::new(&Rationals, qc);
        let mut out = Vec::new();
        for (g, _) in factor_rational_poly(&qp) {
            let g = lift_q(k, &g);
            if k.degree() == 1 || g.degree() == Some(1) {
                out.push(g);
            } else {
                out.extend(trager(k, &g));
            }
        }
        return out;
    }
    trager(k, &p)
}

/// Norm down to Q of a polynomial over K, by evaluation and interpolation.
fn norm_poly(k: &NumberField, p: &UniPoly<FieldElement>) -> UniPoly<Q> {
    let deg = p.degree().unwrap() * k.degree();
    let xs: Vec<Q> = (0..=deg as i64).map(super::q).collect();
    let ys: Vec<Q> = xs
        .iter()
        .map(|x| k.norm(&p.eval(&k.from_rational(x), k)))
        .collect();
    UniPoly::interpolate(&xs, &ys, &Rationals)
}

fn trager(k: &NumberField, p: &UniPoly<FieldElement>) -> Vec<UniPoly<FieldElement>> {
    let qk = Rationals;
    let alpha = k.generator();
    for step in 0i64.. {
        // s = 0, 1, -1, 2, -2, ...
        let s = if step % 2 == 1 { (step + 1) / 2 } else { -(step / 2) };
        let shift = k.mul(&k.from_int(-s), &alpha);
        let shifted = p.shift(&shift, k); // p(t - sα)
        let norm = norm_poly(k, &shifted);
        let g = norm.gcd(&norm.derivative(&qk), &qk);
        if g.degree() != Some(0) {
            continue;
        }
        let back = k.neg(&shift);
        let mut out = Vec::new();
        for (g, _) in factor_rational_poly(&norm) {
            let h = shifted.gcd(&lift_q(k, &g), k);
            if h.degree().unwrap_or(0) > 0 {
                out.push(h.shift(&back, k).monic(k));
            }
        }
        return out;
    }
    unreachable!()
}
