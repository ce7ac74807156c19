//! Sparse polynomials in up to three variables over a number field.
//!
//! [`SparsePoly`] is generic over its coefficient type so that the same
//! substitution machinery (dehomogenization, translation, blow-up charts)
//! serves both ordinary polynomials ([`MultiPoly`]) and polynomials whose
//! coefficients are linear forms in unknowns ([`LinCoeffPoly`]). The latter
//! carry a generic form of given degree through a chain of blow-ups, where
//! the conditions for prescribed multiplicities stay linear.

mod lincoeff;
mod multi;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Debug;

use serde::Serialize;

use crate::error::Error;
use crate::field::{Field, FieldElement, NumberField};

pub use lincoeff::{LinCoeffPoly, LinearForm};
pub use multi::MultiPoly;

/// An exponent vector; unused trailing slots are zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u32; 3]);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial([self.0[0] - other.0[0], self.0[1] - other.0[1], self.0[2] - other.0[2]]))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial([self.0[0] + other.0[0], self.0[1] + other.0[1], self.0[2] + other.0[2]])
    }

    /// All monomials of total degree `e` in `nvars` variables, descending.
    pub fn all_of_degree(e: u32, nvars: usize) -> Vec<Monomial> {
        let mut out = Vec::new();
        match nvars {
            1 => out.push(Monomial([e, 0, 0])),
            2 => {
                for a in (0..=e).rev() {
                    out.push(Monomial([a, e - a, 0]));
                }
            }
            3 => {
                for a in (0..=e).rev() {
                    for b in (0..=e - a).rev() {
                        out.push(Monomial([a, b, e - a - b]));
                    }
                }
            }
            _ => panic!("at most three variables"),
        }
        out
    }
}

/// Graded lexicographic order, first variable largest.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// What a polynomial coefficient must support: a K-vector space.
pub trait Coefficient: Clone + PartialEq + Debug + Send + Sync {
    fn is_zero_in(&self, k: &NumberField) -> bool;
    fn add_in(&self, other: &Self, k: &NumberField) -> Self;
    fn scale_in(&self, s: &FieldElement, k: &NumberField) -> Self;
}

impl Coefficient for FieldElement {
    fn is_zero_in(&self, k: &NumberField) -> bool {
        k.is_zero(self)
    }
    fn add_in(&self, other: &Self, k: &NumberField) -> Self {
        k.add(self, other)
    }
    fn scale_in(&self, s: &FieldElement, k: &NumberField) -> Self {
        k.mul(self, s)
    }
}

/// Which chart of a point blow-up a substitution uses.
///
/// `Finite` is `(x, y) ↦ (x, x·(y + c))`: the exceptional line is `x = 0`
/// and the new point sits at slope `c`. `Infinite` is `(x, y) ↦ (x·y, x)`:
/// the chart around the one direction (`x = 0`) that `Finite` misses, with
/// coordinates swapped so the exceptional line is again `x = 0` and the
/// strict transform of the old line `x = 0` becomes `y = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BlowupChart {
    Finite,
    Infinite,
}

/// The standard affine chart of P² a proper point is read in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum AffineChart {
    /// `Z = 1`, local variables `(X, Y)`.
    Z,
    /// `Y = 1`, local variables `(X, Z)`.
    Y,
    /// `X = 1`, local variables `(Y, Z)`.
    X,
}

impl AffineChart {
    /// Maps a monomial in `X, Y, Z` to the two affine variables of the chart.
    fn dehomogenize(self, m: &Monomial) -> Monomial {
        let [a, b, c] = m.0;
        match self {
            AffineChart::Z => Monomial([a, b, 0]),
            AffineChart::Y => Monomial([a, c, 0]),
            AffineChart::X => Monomial([b, c, 0]),
        }
    }

    /// Index of the coordinate set to 1.
    pub fn fixed_index(self) -> usize {
        match self {
            AffineChart::Z => 2,
            AffineChart::Y => 1,
            AffineChart::X => 0,
        }
    }

    /// Indices of the two affine coordinates, in local variable order.
    pub fn free_indices(self) -> [usize; 2] {
        match self {
            AffineChart::Z => [0, 1],
            AffineChart::Y => [0, 2],
            AffineChart::X => [1, 2],
        }
    }
}

/// A sparse polynomial in `nvars ≤ 3` variables with coefficients `C`.
#[derive(Clone, Debug, PartialEq)]
pub struct SparsePoly<C> {
    field: NumberField,
    nvars: usize,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coefficient> SparsePoly<C> {
    pub fn zero(field: &NumberField, nvars: usize) -> Self {
        assert!((1..=3).contains(&nvars), "between one and three variables");
        SparsePoly { field: field.clone(), nvars, terms: BTreeMap::new() }
    }

    pub fn from_terms(field: &NumberField, nvars: usize, terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut p = Self::zero(field, nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&C> {
        self.terms.get(m)
    }

    pub fn leading(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        debug_assert!(m.0[self.nvars..].iter().all(|&e| e == 0));
        let k = &self.field;
        match self.terms.remove(&m) {
            Some(old) => {
                let s = old.add_in(&c, k);
                if !s.is_zero_in(k) {
                    self.terms.insert(m, s);
                }
            }
            None => {
                if !c.is_zero_in(k) {
                    self.terms.insert(m, c);
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn scale(&self, s: &FieldElement) -> Self {
        Self::from_terms(
            &self.field,
            self.nvars,
            self.terms.iter().map(|(m, c)| (*m, c.scale_in(s, &self.field))),
        )
    }

    pub fn neg(&self) -> Self {
        self.scale(&self.field.from_int(-1))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Minimal total degree of a term: the multiplicity at the origin.
    pub fn multiplicity_at_origin(&self) -> Result<u32, Error> {
        self.terms.keys().map(Monomial::degree).min().ok_or(Error::ZeroPolynomial)
    }

    /// The homogeneous component of the given degree.
    pub fn homogeneous_part(&self, degree: u32) -> Self {
        Self::from_terms(
            &self.field,
            self.nvars,
            self.terms
                .iter()
                .filter(|(m, _)| m.degree() == degree)
                .map(|(m, c)| (*m, c.clone())),
        )
    }

    /// The common degree of all terms, if the polynomial is a nonzero form.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(Monomial::degree);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// Replaces each monomial by a polynomial image, in `nvars_out` variables.
    pub fn substitute(&self, nvars_out: usize, image: impl Fn(&Monomial) -> MultiPoly) -> Self {
        let k = &self.field;
        let mut out = Self::zero(k, nvars_out);
        for (m, c) in &self.terms {
            let img = image(m);
            for (mm, cc) in img.terms() {
                out.add_term(*mm, c.scale_in(cc, k));
            }
        }
        out
    }

    /// Restricts a polynomial in `X, Y, Z` to an affine chart.
    pub fn dehomogenize(&self, chart: AffineChart) -> Self {
        assert_eq!(self.nvars, 3);
        Self::from_terms(
            &self.field,
            2,
            self.terms.iter().map(|(m, c)| (chart.dehomogenize(m), c.clone())),
        )
    }

    /// `p(x + shift[0], y + shift[1])` for a bivariate polynomial.
    pub fn translate(&self, shift: &[FieldElement; 2]) -> Self {
        let k = &self.field;
        if shift.iter().all(|s| k.is_zero(s)) {
            return self.clone();
        }
        let x = MultiPoly::linear_shift(k, 0, &shift[0]);
        let y = MultiPoly::linear_shift(k, 1, &shift[1]);
        let mut cache_x = vec![MultiPoly::one(k, 2)];
        let mut cache_y = vec![MultiPoly::one(k, 2)];
        let max_x = self.terms.keys().map(|m| m.0[0]).max().unwrap_or(0) as usize;
        let max_y = self.terms.keys().map(|m| m.0[1]).max().unwrap_or(0) as usize;
        for i in 1..=max_x {
            let next = cache_x[i - 1].mul(&x);
            cache_x.push(next);
        }
        for i in 1..=max_y {
            let next = cache_y[i - 1].mul(&y);
            cache_y.push(next);
        }
        self.substitute(2, |m| cache_x[m.0[0] as usize].mul(&cache_y[m.0[1] as usize]))
    }

    /// The substitution of one blow-up chart, without dividing out the
    /// exceptional line.
    pub fn blowup_substitute(&self, chart: BlowupChart, center: &FieldElement) -> Self {
        assert_eq!(self.nvars, 2);
        let k = &self.field;
        match chart {
            BlowupChart::Infinite => Self::from_terms(
                k,
                2,
                self.terms
                    .iter()
                    .map(|(m, c)| (Monomial([m.0[0] + m.0[1], m.0[0], 0]), c.clone())),
            ),
            BlowupChart::Finite => {
                if k.is_zero(center) {
                    return Self::from_terms(
                        k,
                        2,
                        self.terms
                            .iter()
                            .map(|(m, c)| (Monomial([m.0[0] + m.0[1], m.0[1], 0]), c.clone())),
                    );
                }
                let lin = MultiPoly::linear_shift(k, 1, center);
                let max_y = self.terms.keys().map(|m| m.0[1]).max().unwrap_or(0) as usize;
                let mut powers = vec![MultiPoly::one(k, 2)];
                for i in 1..=max_y {
                    let next = powers[i - 1].mul(&lin);
                    powers.push(next);
                }
                self.substitute(2, |m| {
                    let xs = MultiPoly::monomial(k, 2, Monomial([m.0[0] + m.0[1], 0, 0]), k.one());
                    xs.mul(&powers[m.0[1] as usize])
                })
            }
        }
    }

    /// Divides by `x^drop`, returning the quotient and the coefficients of
    /// the terms whose `x`-exponent is below `drop` (which are discarded).
    pub fn divide_by_x_power(&self, drop: u32) -> (Self, Vec<C>) {
        let mut discarded = Vec::new();
        let mut q = Self::zero(&self.field, self.nvars);
        for (m, c) in &self.terms {
            if m.0[0] < drop {
                discarded.push(c.clone());
            } else {
                q.terms.insert(Monomial([m.0[0] - drop, m.0[1], m.0[2]]), c.clone());
            }
        }
        (q, discarded)
    }
}
