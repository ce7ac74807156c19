use super::Field;

/// Dense univariate polynomial, coefficients stored constant term first.
/// The coefficient vector never ends in a zero; the zero polynomial is empty.
#[derive(Clone, Debug, PartialEq)]
pub struct UniPoly<E> {
    coeffs: Vec<E>,
}

impl<E: Clone + PartialEq + std::fmt::Debug> UniPoly<E> {
    pub fn new<F: Field<Elem = E>>(k: &F, mut coeffs: Vec<E>) -> Self {
        while coeffs.last().is_some_and(|c| k.is_zero(c)) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant<F: Field<Elem = E>>(k: &F, c: E) -> Self {
        Self::new(k, vec![c])
    }

    /// `x - root`
    pub fn linear_root<F: Field<Elem = E>>(k: &F, root: &E) -> Self {
        UniPoly { coeffs: vec![k.neg(root), k.one()] }
    }

    pub fn monomial<F: Field<Elem = E>>(k: &F, c: E, degree: usize) -> Self {
        let mut coeffs = vec![k.zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(k, coeffs)
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&E> {
        self.coeffs.last()
    }

    pub fn coeff<F: Field<Elem = E>>(&self, k: &F, i: usize) -> E {
        self.coeffs.get(i).cloned().unwrap_or_else(|| k.zero())
    }

    pub fn add<F: Field<Elem = E>>(&self, other: &Self, k: &F) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n).map(|i| k.add(&self.coeff(k, i), &other.coeff(k, i))).collect();
        Self::new(k, c)
    }

    pub fn sub<F: Field<Elem = E>>(&self, other: &Self, k: &F) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n).map(|i| k.sub(&self.coeff(k, i), &other.coeff(k, i))).collect();
        Self::new(k, c)
    }

    pub fn scale<F: Field<Elem = E>>(&self, s: &E, k: &F) -> Self {
        Self::new(k, self.coeffs.iter().map(|c| k.mul(c, s)).collect())
    }

    pub fn mul<F: Field<Elem = E>>(&self, other: &Self, k: &F) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![k.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if k.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = k.add(&out[i + j], &k.mul(a, b));
            }
        }
        Self::new(k, out)
    }

    pub fn pow<F: Field<Elem = E>>(&self, exp: u32, k: &F) -> Self {
        let mut acc = Self::constant(k, k.one());
        for _ in 0..exp {
            acc = acc.mul(self, k);
        }
        acc
    }

    /// Euclidean division. Panics if `divisor` is zero.
    pub fn div_rem<F: Field<Elem = E>>(&self, divisor: &Self, k: &F) -> (Self, Self) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lead_inv = k.inv(divisor.leading().unwrap());
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![k.zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = k.mul(&rem[i + dd], &lead_inv);
            if k.is_zero(&c) {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = k.sub(&rem[i + j], &k.mul(&c, dc));
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Self::new(k, quot), Self::new(k, rem))
    }

    pub fn rem<F: Field<Elem = E>>(&self, divisor: &Self, k: &F) -> Self {
        self.div_rem(divisor, k).1
    }

    /// Exact quotient, or `None` if `divisor` does not divide `self`.
    pub fn div_exact<F: Field<Elem = E>>(&self, divisor: &Self, k: &F) -> Option<Self> {
        let (q, r) = self.div_rem(divisor, k);
        r.is_zero().then_some(q)
    }

    pub fn monic<F: Field<Elem = E>>(&self, k: &F) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => {
                let inv = k.inv(l);
                self.scale(&inv, k)
            }
        }
    }

    /// Monic gcd; the gcd of two zero polynomials is zero.
    pub fn gcd<F: Field<Elem = E>>(&self, other: &Self, k: &F) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b, k);
            a = b;
            b = r;
        }
        a.monic(k)
    }

    /// Returns `(g, s, t)` with `s·self + t·other = g`, `g` monic.
    pub fn ext_gcd<F: Field<Elem = E>>(&self, other: &Self, k: &F) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::constant(k, k.one()), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::constant(k, k.one()));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1, k);
            let s2 = s0.sub(&q.mul(&s1, k), k);
            let t2 = t0.sub(&q.mul(&t1, k), k);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        match r0.leading() {
            None => (r0, s0, t0),
            Some(l) => {
                let inv = k.inv(l);
                (r0.scale(&inv, k), s0.scale(&inv, k), t0.scale(&inv, k))
            }
        }
    }

    pub fn derivative<F: Field<Elem = E>>(&self, k: &F) -> Self {
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| k.mul(c, &k.from_int(i as i64)))
            .collect();
        Self::new(k, c)
    }

    pub fn eval<F: Field<Elem = E>>(&self, x: &E, k: &F) -> E {
        self.coeffs
            .iter()
            .rev()
            .fold(k.zero(), |acc, c| k.add(&k.mul(&acc, x), c))
    }

    /// `self(x + shift)`
    pub fn shift<F: Field<Elem = E>>(&self, shift: &E, k: &F) -> Self {
        let lin = Self::new(k, vec![shift.clone(), k.one()]);
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            acc.mul(&lin, k).add(&Self::constant(k, c.clone()), k)
        })
    }

    /// The squarefree part `p / gcd(p, p')` (char 0), made monic.
    pub fn squarefree_part<F: Field<Elem = E>>(&self, k: &F) -> Self {
        let g = self.gcd(&self.derivative(k), k);
        if g.degree().unwrap_or(0) == 0 {
            return self.monic(k);
        }
        self.div_exact(&g, k).expect("gcd divides").monic(k)
    }

    /// Lagrange interpolation through `(xs[i], ys[i])`; the abscissae must be distinct.
    pub fn interpolate<F: Field<Elem = E>>(xs: &[E], ys: &[E], k: &F) -> Self {
        let one = k.one();
        // Newton divided differences
        let n = xs.len();
        let mut coef: Vec<E> = ys.to_vec();
        for j in 1..n {
            for i in (j..n).rev() {
                let num = k.sub(&coef[i], &coef[i - 1]);
                let den = k.sub(&xs[i], &xs[i - j]);
                coef[i] = k.div(&num, &den);
            }
        }
        let mut acc = Self::zero();
        for i in (0..n).rev() {
            let lin = Self::new(k, vec![k.neg(&xs[i]), one.clone()]);
            acc = acc.mul(&lin, k).add(&Self::constant(k, coef[i].clone()), k);
        }
        acc
    }
}
