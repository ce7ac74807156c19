use std::cmp::Ordering;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::{factor_rational_poly, format_rational, Field, Rationals, UniPoly, Q};
use crate::error::Error;

/// An element `Σ coords[i]·α^i` of a number field, in reduced form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    coords: Vec<Q>,
}

impl FieldElement {
    pub fn coords(&self) -> &[Q] {
        &self.coords
    }

    /// The element as a rational, if it lies in Q.
    pub fn as_rational(&self) -> Option<&Q> {
        if self.coords[1..].iter().all(Zero::is_zero) {
            Some(&self.coords[0])
        } else {
            None
        }
    }
}

/// Lexicographic on coordinates, constant coordinate first. Only used to
/// make outputs deterministic; it is not a field ordering.
impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coords.cmp(&other.coords)
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug)]
struct Inner {
    symbol: String,
    /// Monic, constant term first, length `degree + 1`.
    min_poly: Vec<Q>,
    /// `α^(degree + j)` reduced, for `j < degree - 1`.
    high_powers: Vec<Vec<Q>>,
}

/// `K = Q(α)` for a root `α` of a monic irreducible polynomial over Q.
///
/// Cloning is cheap (shared).
#[derive(Clone, Debug)]
pub struct NumberField {
    inner: Arc<Inner>,
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.symbol == other.inner.symbol
                && self.inner.min_poly == other.inner.min_poly)
    }
}

impl NumberField {
    /// The rationals, viewed as a degree-one extension. `symbol` is unused
    /// except for printing; the generator is 0.
    pub fn rationals() -> Self {
        Self::build("a".to_string(), vec![Q::zero(), Q::one()])
    }

    /// Builds `Q(α)` from the minimal polynomial of `α` (constant term first).
    /// The polynomial must be monic and irreducible over Q.
    pub fn new(symbol: &str, min_poly: Vec<Q>) -> Result<Self, Error> {
        let mut min_poly = min_poly;
        while min_poly.last().is_some_and(Zero::is_zero) {
            min_poly.pop();
        }
        if min_poly.len() < 2 {
            return Err(Error::InvalidMinimalPolynomial(
                "degree must be at least 1".to_string(),
            ));
        }
        if !min_poly.last().unwrap().is_one() {
            return Err(Error::InvalidMinimalPolynomial(
                "polynomial must be monic".to_string(),
            ));
        }
        let p = UniPoly::new(&Rationals, min_poly.clone());
        let factors = factor_rational_poly(&p);
        if factors.len() != 1 || factors[0].1 != 1 {
            return Err(Error::ReducibleMinimalPolynomial(format_qpoly(&min_poly, symbol)));
        }
        Ok(Self::build(symbol.to_string(), min_poly))
    }

    fn build(symbol: String, min_poly: Vec<Q>) -> Self {
        let n = min_poly.len() - 1;
        let mut high_powers = Vec::new();
        // α^n = -Σ_{i<n} min_poly[i] α^i
        let mut cur: Vec<Q> = min_poly[..n].iter().map(|c| -c).collect();
        for _ in 0..n.saturating_sub(1) {
            high_powers.push(cur.clone());
            // multiply by α
            let top = cur[n - 1].clone();
            let mut next = vec![Q::zero(); n];
            for i in (1..n).rev() {
                next[i] = cur[i - 1].clone();
            }
            for i in 0..n {
                next[i] -= &top * &min_poly[i];
            }
            cur = next;
        }
        NumberField {
            inner: Arc::new(Inner { symbol, min_poly, high_powers }),
        }
    }

    pub fn degree(&self) -> usize {
        self.inner.min_poly.len() - 1
    }

    pub fn symbol(&self) -> &str {
        &self.inner.symbol
    }

    pub fn min_poly(&self) -> &[Q] {
        &self.inner.min_poly
    }

    /// The generator α. For `K = Q` this is the rational root of the
    /// linear minimal polynomial.
    pub fn generator(&self) -> FieldElement {
        let n = self.degree();
        if n == 1 {
            return self.from_rational(&-&self.inner.min_poly[0]);
        }
        let mut coords = vec![Q::zero(); n];
        coords[1] = Q::one();
        FieldElement { coords }
    }

    pub fn from_coords(&self, coords: Vec<Q>) -> FieldElement {
        assert_eq!(coords.len(), self.degree(), "coordinate vector length");
        FieldElement { coords }
    }

    /// Reduces an arbitrary polynomial in α (constant first) modulo the minimal polynomial.
    pub fn from_poly_in_generator(&self, poly: &[Q]) -> FieldElement {
        let n = self.degree();
        if n == 1 {
            let a = self.generator();
            let a = a.coords[0].clone();
            let v = poly.iter().rev().fold(Q::zero(), |acc, c| acc * &a + c);
            return FieldElement { coords: vec![v] };
        }
        let mut coords = vec![Q::zero(); n];
        let mut extra: Vec<Q> = Vec::new();
        for (i, c) in poly.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if i < n {
                coords[i] += c;
            } else {
                if extra.len() <= i - n {
                    extra.resize(i - n + 1, Q::zero());
                }
                extra[i - n] += c;
            }
        }
        // Fold the tail from the top down: α^(n+j) = α^j · α^n.
        while let Some(top) = extra.pop() {
            if top.is_zero() {
                continue;
            }
            let j = extra.len();
            for i in 0..n {
                let c = &top * &-&self.inner.min_poly[i];
                if c.is_zero() {
                    continue;
                }
                let pos = i + j;
                if pos < n {
                    coords[pos] += c;
                } else {
                    extra[pos - n] += c;
                }
            }
        }
        FieldElement { coords }
    }

    pub fn norm(&self, a: &FieldElement) -> Q {
        let m = self.multiplication_matrix(a);
        super::determinant(&Rationals, &m)
    }

    /// Matrix of `x ↦ a·x` on the power basis (column j = coords of a·α^j).
    pub fn multiplication_matrix(&self, a: &FieldElement) -> super::Matrix<Q> {
        let n = self.degree();
        let mut cols = Vec::with_capacity(n);
        let mut cur = a.clone();
        let alpha = self.generator();
        for _ in 0..n {
            cols.push(cur.coords.clone());
            cur = self.mul(&cur, &alpha);
        }
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for col in &cols {
                entries.push(col[i].clone());
            }
        }
        super::Matrix::new(n, n, entries)
    }

    /// Renders an element as an expression in the generator symbol, highest
    /// power first, e.g. `7/2*r+17/2`.
    pub fn format(&self, a: &FieldElement) -> String {
        let mut out = String::new();
        for (i, c) in a.coords.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if neg {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let power = match i {
                0 => String::new(),
                1 => self.inner.symbol.clone(),
                _ => format!("{}^{}", self.inner.symbol, i),
            };
            if power.is_empty() {
                out.push_str(&format_rational(&abs));
            } else if abs.is_one() {
                out.push_str(&power);
            } else {
                out.push_str(&format_rational(&abs));
                out.push('*');
                out.push_str(&power);
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// True when the printed form of `a` is a single signed term (no `+`/`-`
    /// between terms), so it can be used as a coefficient without parentheses.
    pub fn is_monomial_element(&self, a: &FieldElement) -> bool {
        a.coords.iter().filter(|c| !c.is_zero()).count() <= 1
    }

    pub fn pow(&self, a: &FieldElement, exp: u32) -> FieldElement {
        let mut acc = self.one();
        for _ in 0..exp {
            acc = self.mul(&acc, a);
        }
        acc
    }

    pub fn describe(&self) -> String {
        if self.degree() == 1 {
            "Q".to_string()
        } else {
            format!(
                "Q({}) with {} = 0",
                self.inner.symbol,
                format_qpoly(&self.inner.min_poly, &self.inner.symbol)
            )
        }
    }
}

pub(crate) fn format_qpoly(coeffs: &[Q], symbol: &str) -> String {
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let abs = c.abs();
        if c.is_negative() {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let power = match i {
            0 => String::new(),
            1 => symbol.to_string(),
            _ => format!("{symbol}^{i}"),
        };
        if power.is_empty() {
            out.push_str(&format_rational(&abs));
        } else if abs.is_one() {
            out.push_str(&power);
        } else {
            out.push_str(&format!("{}*{}", format_rational(&abs), power));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl Field for NumberField {
    type Elem = FieldElement;

    fn zero(&self) -> FieldElement {
        FieldElement { coords: vec![Q::zero(); self.degree()] }
    }

    fn one(&self) -> FieldElement {
        let mut coords = vec![Q::zero(); self.degree()];
        coords[0] = Q::one();
        FieldElement { coords }
    }

    fn is_zero(&self, a: &FieldElement) -> bool {
        a.coords.iter().all(Zero::is_zero)
    }

    fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        FieldElement {
            coords: a.coords.iter().zip(&b.coords).map(|(x, y)| x + y).collect(),
        }
    }

    fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        FieldElement {
            coords: a.coords.iter().zip(&b.coords).map(|(x, y)| x - y).collect(),
        }
    }

    fn neg(&self, a: &FieldElement) -> FieldElement {
        FieldElement { coords: a.coords.iter().map(|x| -x).collect() }
    }

    fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let n = self.degree();
        if n == 1 {
            return FieldElement { coords: vec![&a.coords[0] * &b.coords[0]] };
        }
        let mut prod = vec![Q::zero(); 2 * n - 1];
        for (i, x) in a.coords.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coords.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                prod[i + j] += x * y;
            }
        }
        let mut coords: Vec<Q> = prod[..n].to_vec();
        for (j, c) in prod[n..].iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, h) in self.inner.high_powers[j].iter().enumerate() {
                if !h.is_zero() {
                    coords[i] += c * h;
                }
            }
        }
        FieldElement { coords }
    }

    fn inv(&self, a: &FieldElement) -> FieldElement {
        assert!(!self.is_zero(a), "inverse of zero in number field");
        let n = self.degree();
        if n == 1 {
            return FieldElement { coords: vec![a.coords[0].recip()] };
        }
        let k = Rationals;
        let ap = UniPoly::new(&k, a.coords.clone());
        let m = UniPoly::new(&k, self.inner.min_poly.clone());
        let (g, s, _) = ap.ext_gcd(&m, &k);
        debug_assert_eq!(g.degree(), Some(0), "minimal polynomial not irreducible");
        let mut coords = s.into_coeffs();
        coords.resize(n, Q::zero());
        FieldElement { coords }
    }

    fn from_rational(&self, q: &Q) -> FieldElement {
        let mut coords = vec![Q::zero(); self.degree()];
        coords[0] = q.clone();
        FieldElement { coords }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::q;

    fn sqrt5() -> NumberField {
        NumberField::new("r", vec![q(-5), q(0), q(1)]).unwrap()
    }

    #[test]
    fn generator_satisfies_relation() {
        let k = sqrt5();
        let r = k.generator();
        assert_eq!(k.mul(&r, &r), k.from_int(5));
        assert_eq!(k.mul(&k.inv(&r), &r), k.one());
    }

    #[test]
    fn reducible_min_poly_rejected() {
        // t^2 - 4 = (t-2)(t+2)
        let err = NumberField::new("r", vec![q(-4), q(0), q(1)]).unwrap_err();
        assert!(matches!(err, Error::ReducibleMinimalPolynomial(_)));
        // (t^2+1)(t^2+2) has no rational root but still splits
        let err = NumberField::new("r", vec![q(2), q(0), q(3), q(0), q(1)]).unwrap_err();
        assert!(matches!(err, Error::ReducibleMinimalPolynomial(_)));
        assert!(NumberField::new("r", vec![q(2), q(0), q(1)]).is_ok());
        assert!(matches!(
            NumberField::new("r", vec![q(2), q(2)]),
            Err(Error::InvalidMinimalPolynomial(_))
        ));
    }

    #[test]
    fn quartic_field_reduction() {
        // θ = √2 + √5, θ^4 - 14θ^2 + 9 = 0
        let k = NumberField::new("t", vec![q(9), q(0), q(-14), q(0), q(1)]).unwrap();
        let t = k.generator();
        let t3 = k.pow(&t, 3);
        // √2 = (θ^3 - 11θ)/6
        let s2 = k.mul(&k.sub(&t3, &k.mul(&k.from_int(11), &t)), &k.inv(&k.from_int(6)));
        assert_eq!(k.mul(&s2, &s2), k.from_int(2));
        let s5 = k.sub(&t, &s2);
        assert_eq!(k.mul(&s5, &s5), k.from_int(5));
        assert_eq!(k.from_poly_in_generator(&[q(0), q(0), q(0), q(1)]), t3);
        assert_eq!(k.norm(&t), q(9));
    }

    #[test]
    fn formatting() {
        let k = sqrt5();
        let a = k.from_coords(vec![Q::new(17.into(), 2.into()), Q::new(7.into(), 2.into())]);
        assert_eq!(k.format(&a), "7/2*r+17/2");
        assert_eq!(k.format(&k.neg(&k.generator())), "-r");
        assert_eq!(k.format(&k.zero()), "0");
    }
}
