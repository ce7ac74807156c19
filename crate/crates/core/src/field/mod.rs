//! Exact arithmetic over Q and over number fields `K = Q(α)`, together with
//! the univariate and dense linear algebra needed by the rest of the crate.
//!
//! Arithmetic is context-style: a [`Field`] value owns whatever is needed to
//! combine elements (for a number field, the minimal polynomial), and elements
//! are plain data. This keeps elements cheap to store in polynomial maps.

mod factor_z;
mod matrix;
mod number_field;
mod roots;
mod upoly;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt::Debug;

pub use factor_z::{factor_rational_poly, factor_integer_poly};
pub use matrix::{determinant, rank_and_kernel, KMatrix, Matrix};
pub use number_field::{FieldElement, NumberField};
pub use roots::{k_factor, k_rational_roots, KFactorization};
pub use upoly::UniPoly;

/// Exact rationals.
pub type Q = BigRational;

/// A field context. Elements carry no reference to their field; every
/// operation goes through the context.
pub trait Field: Clone + Send + Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn from_rational(&self, q: &Q) -> Self::Elem;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b))
    }

    fn from_int(&self, n: i64) -> Self::Elem {
        self.from_rational(&Q::from_integer(BigInt::from(n)))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }
}

/// The field of rational numbers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = Q;

    fn zero(&self) -> Q {
        Q::zero()
    }
    fn one(&self) -> Q {
        Q::one()
    }
    fn is_zero(&self, a: &Q) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Q, b: &Q) -> Q {
        a + b
    }
    fn sub(&self, a: &Q, b: &Q) -> Q {
        a - b
    }
    fn neg(&self, a: &Q) -> Q {
        -a
    }
    fn mul(&self, a: &Q, b: &Q) -> Q {
        a * b
    }
    fn inv(&self, a: &Q) -> Q {
        assert!(!a.is_zero(), "inverse of zero rational");
        a.recip()
    }
    fn from_rational(&self, q: &Q) -> Q {
        q.clone()
    }
}

/// Formats a rational as `n` or `n/d`.
pub fn format_rational(q: &Q) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `n` or `n/d` (optional sign, no spaces).
pub fn parse_rational(text: &str) -> Option<Q> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let n: BigInt = num.parse().ok()?;
    let d: BigInt = den.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Q::new(n, d))
}

pub(crate) fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}
