use std::cmp::Ordering;

use super::{BlowupChart, Monomial, SparsePoly};
use crate::error::Error;
use crate::field::{Field, FieldElement, NumberField, UniPoly};

/// A polynomial with coefficients in K.
pub type MultiPoly = SparsePoly<FieldElement>;

impl MultiPoly {
    pub fn one(k: &NumberField, nvars: usize) -> Self {
        Self::constant(k, nvars, k.one())
    }

    pub fn constant(k: &NumberField, nvars: usize, c: FieldElement) -> Self {
        Self::from_terms(k, nvars, [(Monomial::default(), c)])
    }

    pub fn monomial(k: &NumberField, nvars: usize, m: Monomial, c: FieldElement) -> Self {
        Self::from_terms(k, nvars, [(m, c)])
    }

    /// The variable with the given index.
    pub fn var(k: &NumberField, nvars: usize, index: usize) -> Self {
        let mut e = [0; 3];
        e[index] = 1;
        Self::monomial(k, nvars, Monomial(e), k.one())
    }

    /// `var_index + shift`, bivariate.
    pub(crate) fn linear_shift(k: &NumberField, index: usize, shift: &FieldElement) -> Self {
        let mut p = Self::var(k, 2, index);
        p.add_term(Monomial::default(), shift.clone());
        p
    }

    pub fn mul(&self, other: &Self) -> Self {
        let k = self.field();
        let nvars = self.nvars().max(other.nvars());
        let mut out = Self::zero(k, nvars);
        for (m1, c1) in self.terms() {
            for (m2, c2) in other.terms() {
                out.add_term(m1.mul(m2), k.mul(c1, c2));
            }
        }
        out
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one(self.field(), self.nvars());
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn is_constant(&self) -> bool {
        self.total_degree().unwrap_or(0) == 0
    }

    /// Evaluates at a point with one coordinate per variable.
    pub fn eval(&self, point: &[FieldElement]) -> FieldElement {
        let k = self.field();
        let mut acc = k.zero();
        for (m, c) in self.terms() {
            let mut t = c.clone();
            for (i, x) in point.iter().enumerate().take(self.nvars()) {
                t = k.mul(&t, &k.pow(x, m.0[i]));
            }
            acc = k.add(&acc, &t);
        }
        acc
    }

    /// `num / den` when the division is exact, `None` otherwise.
    ///
    /// Leading-term division in the graded lex order; `{den}` is a Gröbner
    /// basis of the principal ideal, so a nonzero remainder term whose
    /// leading monomial is not divisible by that of `den` settles the answer.
    pub fn divide_exact(&self, den: &Self) -> Option<Self> {
        assert!(!den.is_zero(), "division by the zero polynomial");
        let k = self.field();
        let (lm, lc) = den.leading().map(|(m, c)| (*m, c.clone())).unwrap();
        let lc_inv = k.inv(&lc);
        let mut rem = self.clone();
        let mut quot = Self::zero(k, self.nvars().max(den.nvars()));
        while let Some((m, c)) = rem.leading().map(|(m, c)| (*m, c.clone())) {
            let qm = m.checked_div(&lm)?;
            let qc = k.mul(&c, &lc_inv);
            let t = Self::monomial(k, quot.nvars(), qm, qc.clone());
            rem = rem.sub(&t.mul(den));
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Remainder of leading-term division by `den`: every term left over is
    /// not divisible by the leading monomial of `den`. Linear in `self`.
    pub fn reduce_by(&self, den: &Self) -> Self {
        let k = self.field();
        let (lm, lc) = den.leading().map(|(m, c)| (*m, c.clone())).unwrap();
        let lc_inv = k.inv(&lc);
        let mut rem = self.clone();
        let mut out = Self::zero(k, self.nvars());
        while let Some((m, c)) = rem.leading().map(|(m, c)| (*m, c.clone())) {
            match m.checked_div(&lm) {
                Some(qm) => {
                    let t = Self::monomial(k, self.nvars(), qm, k.mul(&c, &lc_inv));
                    rem = rem.sub(&t.mul(den));
                }
                None => {
                    let t = Self::monomial(k, self.nvars(), m, c.clone());
                    rem = rem.sub(&t);
                    out.add_term(m, c);
                }
            }
        }
        out
    }

    /// Scales so that the coefficient of the greatest monomial is 1.
    pub fn canonical_form(&self) -> Result<Self, Error> {
        let (_, lc) = self.leading().ok_or(Error::ZeroPolynomial)?;
        let inv = self.field().inv(lc);
        Ok(self.scale(&inv))
    }

    /// Total order used for sorting outputs: degree, then terms from the
    /// greatest monomial down, a greater monomial sorting first (so `X`
    /// precedes `Y`), then coefficients.
    pub fn cmp_terms(&self, other: &Self) -> Ordering {
        self.total_degree().cmp(&other.total_degree()).then_with(|| {
            for ((ma, ca), (mb, cb)) in self.terms().rev().zip(other.terms().rev()) {
                let o = mb.cmp(ma).then_with(|| ca.cmp(cb));
                if o != Ordering::Equal {
                    return o;
                }
            }
            self.num_terms().cmp(&other.num_terms())
        })
    }

    /// Strict transform under one blow-up chart: substitute, then divide by
    /// `x^drop`. Fails if the division is not exact.
    pub fn blowup_transform(&self, chart: BlowupChart, center: &FieldElement, drop: u32) -> Result<Self, Error> {
        let (q, discarded) = self.blowup_substitute(chart, center).divide_by_x_power(drop);
        if discarded.is_empty() {
            Ok(q)
        } else {
            Err(Error::InexactDivision { drop })
        }
    }

    /// Partial derivative with respect to a variable.
    pub fn derivative(&self, var: usize) -> Self {
        let k = self.field();
        Self::from_terms(
            k,
            self.nvars(),
            self.terms().filter(|(m, _)| m.0[var] > 0).map(|(m, c)| {
                let mut e = m.0;
                let n = e[var];
                e[var] -= 1;
                (Monomial(e), k.mul(c, &k.from_int(n as i64)))
            }),
        )
    }

    /// Univariate view in the variable `var`, all other variables set to the
    /// given values (indexed by variable, entry for `var` ignored).
    pub fn to_univariate(&self, var: usize, others: &[FieldElement]) -> UniPoly<FieldElement> {
        let k = self.field();
        let deg = self.terms().map(|(m, _)| m.0[var]).max().unwrap_or(0) as usize;
        let mut coeffs = vec![k.zero(); deg + 1];
        for (m, c) in self.terms() {
            let mut t = c.clone();
            for i in 0..self.nvars() {
                if i != var {
                    t = k.mul(&t, &k.pow(&others[i], m.0[i]));
                }
            }
            let e = m.0[var] as usize;
            coeffs[e] = k.add(&coeffs[e], &t);
        }
        UniPoly::new(k, coeffs)
    }

    /// A binary form of degree `deg` in the first two variables as the
    /// univariate polynomial `form(1, t)`.
    pub fn binary_form_dehomogenized(&self) -> UniPoly<FieldElement> {
        self.to_univariate(1, &[self.field().one(), self.field().one(), self.field().one()])
    }

    /// Polynomial in `x` from a univariate one.
    pub fn from_univariate(k: &NumberField, nvars: usize, var: usize, p: &UniPoly<FieldElement>) -> Self {
        Self::from_terms(
            k,
            nvars,
            p.coeffs().iter().enumerate().map(|(i, c)| {
                let mut e = [0; 3];
                e[var] = i as u32;
                (Monomial(e), c.clone())
            }),
        )
    }

    /// Applies the linear change `X_i ↦ Σ_j m[i][j]·X_j` to every variable.
    pub fn linear_change(&self, m: &[Vec<FieldElement>]) -> Self {
        let k = self.field();
        let n = self.nvars();
        let images: Vec<MultiPoly> = (0..n)
            .map(|i| {
                Self::from_terms(
                    k,
                    n,
                    (0..n).map(|j| {
                        let mut e = [0; 3];
                        e[j] = 1;
                        (Monomial(e), m[i][j].clone())
                    }),
                )
            })
            .collect();
        self.substitute(n, |mon| {
            let mut acc = Self::one(k, n);
            for (i, img) in images.iter().enumerate() {
                acc = acc.mul(&img.pow(mon.0[i]));
            }
            acc
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::q;

    fn k5() -> NumberField {
        NumberField::new("r", vec![q(-5), q(0), q(1)]).unwrap()
    }

    fn xy(k: &NumberField) -> (MultiPoly, MultiPoly) {
        (MultiPoly::var(k, 2, 0), MultiPoly::var(k, 2, 1))
    }

    #[test]
    fn multiplicities() {
        let k = NumberField::rationals();
        let (x, y) = xy(&k);
        assert_eq!(x.pow(2).sub(&y).multiplicity_at_origin(), Ok(1));
        assert_eq!(x.mul(&y).multiplicity_at_origin(), Ok(2));
        // (x+y)^3 + x^5
        assert_eq!(x.add(&y).pow(3).add(&x.pow(5)).multiplicity_at_origin(), Ok(3));
        assert_eq!(MultiPoly::zero(&k, 2).multiplicity_at_origin(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn blowups_by_hand() {
        let k = NumberField::rationals();
        let (x, y) = xy(&k);
        let zero = k.zero();
        // xy -> x^2 y / x^2 = y
        assert_eq!(x.mul(&y).blowup_transform(BlowupChart::Finite, &zero, 2).unwrap(), y);
        // cusp y^2 - x^3 -> y^2 - x
        let cusp = y.pow(2).sub(&x.pow(3));
        assert_eq!(cusp.blowup_transform(BlowupChart::Finite, &zero, 2).unwrap(), y.pow(2).sub(&x));
        // y - x^2 -> y - x
        let para = y.sub(&x.pow(2));
        assert_eq!(para.blowup_transform(BlowupChart::Finite, &zero, 1).unwrap(), y.sub(&x));
        assert_eq!(
            para.blowup_transform(BlowupChart::Finite, &zero, 2),
            Err(Error::InexactDivision { drop: 2 })
        );
        // nonzero center: y - 2x - x^2 at slope 2 -> y - x
        let p = y.sub(&x.scale(&k.from_int(2))).sub(&x.pow(2));
        assert_eq!(p.blowup_transform(BlowupChart::Finite, &k.from_int(2), 1).unwrap(), y.sub(&x));
        // infinite chart: x - y^2 -> (x y - x^2)/x = y - x
        let q = x.sub(&y.pow(2));
        assert_eq!(q.blowup_transform(BlowupChart::Infinite, &zero, 1).unwrap(), y.sub(&x));
    }

    #[test]
    fn exact_division() {
        let k = NumberField::rationals();
        let vars: Vec<_> = (0..3).map(|i| MultiPoly::var(&k, 3, i)).collect();
        let (x, y) = (&vars[0], &vars[1]);
        let num = x.pow(2).sub(&y.pow(2));
        assert_eq!(num.divide_exact(&x.sub(y)), Some(x.add(y)));
        assert_eq!(x.divide_exact(y), None);
    }

    #[test]
    fn canonical_scaling() {
        let k = k5();
        let vars: Vec<_> = (0..3).map(|i| MultiPoly::var(&k, 3, i)).collect();
        let (x, y) = (&vars[0], &vars[1]);
        let three = k.from_int(3);
        assert_eq!(x.add(y).scale(&three).canonical_form().unwrap(), x.add(y));
        let r = k.generator();
        assert_eq!(x.mul(y).scale(&r).canonical_form().unwrap(), x.mul(y));
        // 2X - (7r+17)Y -> X - ((7r+17)/2) Y
        let c = k.add(&k.mul(&k.from_int(7), &r), &k.from_int(17));
        let l3 = x.scale(&k.from_int(2)).sub(&y.scale(&c));
        let half = k.inv(&k.from_int(2));
        let expected = x.sub(&y.scale(&k.mul(&c, &half)));
        assert_eq!(l3.canonical_form().unwrap(), expected);
    }

    #[test]
    fn reduction_is_remainder() {
        let k = NumberField::rationals();
        let vars: Vec<_> = (0..3).map(|i| MultiPoly::var(&k, 3, i)).collect();
        let (x, y, z) = (&vars[0], &vars[1], &vars[2]);
        let den = x.add(y);
        let f = x.mul(z).add(&y.pow(2)).add(&den.mul(&z.pow(3)));
        let r = f.reduce_by(&den);
        // x ≡ -y mod (x + y): xz + y^2 ≡ -yz + y^2
        assert_eq!(r, y.pow(2).sub(&y.mul(z)));
    }
}
