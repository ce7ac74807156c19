use super::{BlowupChart, Coefficient, Monomial, SparsePoly};
use crate::field::{Field, FieldElement, NumberField};

/// A homogeneous linear form `Σ a_i·u_i` in a fixed number of unknowns,
/// stored densely.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearForm(pub Vec<FieldElement>);

impl LinearForm {
    pub fn unknown(k: &NumberField, count: usize, index: usize) -> Self {
        let mut v = vec![k.zero(); count];
        v[index] = k.one();
        LinearForm(v)
    }
}

impl Coefficient for LinearForm {
    fn is_zero_in(&self, k: &NumberField) -> bool {
        self.0.iter().all(|c| k.is_zero(c))
    }

    fn add_in(&self, other: &Self, k: &NumberField) -> Self {
        LinearForm(self.0.iter().zip(&other.0).map(|(a, b)| k.add(a, b)).collect())
    }

    fn scale_in(&self, s: &FieldElement, k: &NumberField) -> Self {
        LinearForm(self.0.iter().map(|a| k.mul(a, s)).collect())
    }
}

/// A polynomial whose coefficients are linear forms in unknowns, such as the
/// generic form of degree `e` with its coefficients as unknowns.
pub type LinCoeffPoly = SparsePoly<LinearForm>;

impl LinCoeffPoly {
    /// `Σ u_i·m_i` over all monomials `m_i` of degree `e` in `X, Y, Z`,
    /// descending in the graded lex order (so `u_0` multiplies `X^e`).
    pub fn generic_form(k: &NumberField, e: u32) -> Self {
        let monos = Monomial::all_of_degree(e, 3);
        let n = monos.len();
        Self::from_terms(
            k,
            3,
            monos
                .into_iter()
                .enumerate()
                .map(|(i, m)| (m, LinearForm::unknown(k, n, i))),
        )
    }

    /// Number of unknowns (zero for the zero polynomial).
    pub fn unknown_count(&self) -> usize {
        self.terms().next().map_or(0, |(_, c)| c.0.len())
    }

    /// Virtual transform: substitute the chart and divide by `x^drop`. The
    /// linear forms attached to terms below `x^drop` are returned; requiring
    /// them to vanish is exactly the condition that makes the division exact.
    pub fn virtual_transform(
        &self,
        chart: BlowupChart,
        center: &FieldElement,
        drop: u32,
    ) -> (Self, Vec<LinearForm>) {
        self.blowup_substitute(chart, center).divide_by_x_power(drop)
    }

    /// The linear forms of all terms of total degree below `v`: the
    /// conditions for multiplicity at least `v` at the origin.
    pub fn low_order_conditions(&self, v: u32) -> Vec<LinearForm> {
        self.terms()
            .filter(|(m, _)| m.degree() < v)
            .map(|(_, c)| c.clone())
            .collect()
    }
}
