//! Factorization of univariate polynomials over Z and Q.
//!
//! Squarefree decomposition over Q, then for each squarefree part the
//! classical Zassenhaus route: Berlekamp factorization modulo a small prime,
//! linear Hensel lifting past a Mignotte-type coefficient bound, and
//! recombination of lifted factors by trial division.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Rationals, UniPoly, Q};

type ZPoly = Vec<BigInt>;
type FpPoly = Vec<u64>;

/// Irreducible factors of a nonzero rational polynomial, each monic, with
/// multiplicities. Constants are dropped. Factors are sorted by degree and
/// then coefficients, so the output is deterministic.
pub fn factor_rational_poly(p: &UniPoly<Q>) -> Vec<(UniPoly<Q>, usize)> {
    let k = Rationals;
    let mut out = Vec::new();
    for (part, mult) in squarefree_decomposition(p) {
        let z = to_primitive_integer(part.coeffs());
        for f in zassenhaus(&z) {
            let coeffs: Vec<Q> = f.into_iter().map(Q::from_integer).collect();
            out.push((UniPoly::new(&k, coeffs).monic(&k), mult));
        }
    }
    out.sort_by(|a, b| {
        a.0.degree()
            .cmp(&b.0.degree())
            .then_with(|| a.0.coeffs().cmp(b.0.coeffs()))
    });
    out
}

/// Irreducible factors over Z of a nonzero integer polynomial (constant term
/// first), each primitive with positive leading coefficient.
pub fn factor_integer_poly(f: &[BigInt]) -> Vec<(Vec<BigInt>, usize)> {
    let k = Rationals;
    let p = UniPoly::new(&k, f.iter().cloned().map(Q::from_integer).collect());
    factor_rational_poly(&p)
        .into_iter()
        .map(|(g, m)| (to_primitive_integer(g.coeffs()), m))
        .collect()
}

/// Yun's algorithm. Returns monic squarefree, pairwise coprime parts `a_i`
/// with `p = c · Π a_i^i`.
fn squarefree_decomposition(p: &UniPoly<Q>) -> Vec<(UniPoly<Q>, usize)> {
    let k = Rationals;
    let mut out = Vec::new();
    if p.degree().unwrap_or(0) == 0 {
        return out;
    }
    let dp = p.derivative(&k);
    let a0 = p.gcd(&dp, &k);
    let mut b = p.div_exact(&a0, &k).unwrap();
    let c = dp.div_exact(&a0, &k).unwrap();
    let mut d = c.sub(&b.derivative(&k), &k);
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&d, &k);
        b = b.div_exact(&a, &k).unwrap();
        let c = d.div_exact(&a, &k).unwrap();
        d = c.sub(&b.derivative(&k), &k);
        if a.degree().unwrap_or(0) > 0 {
            out.push((a.monic(&k), i));
        }
        i += 1;
    }
    out
}

fn to_primitive_integer(coeffs: &[Q]) -> ZPoly {
    let lcm = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: ZPoly = coeffs
        .iter()
        .map(|c| (c * Q::from_integer(lcm.clone())).to_integer())
        .collect();
    primitive(ints)
}

fn primitive(mut f: ZPoly) -> ZPoly {
    while f.last().is_some_and(Zero::is_zero) {
        f.pop();
    }
    let g = f.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() {
        return f;
    }
    let sign = if f.last().unwrap().is_negative() { -BigInt::one() } else { BigInt::one() };
    let g = g * sign;
    f.iter().map(|c| c / &g).collect()
}

fn zmul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division over Z, `None` when `b` does not divide `a`.
fn zdiv_exact(a: &[BigInt], b: &[BigInt]) -> Option<ZPoly> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut rem: ZPoly = a.to_vec();
    if rem.len() < b.len() {
        return rem.iter().all(Zero::is_zero).then(Vec::new);
    }
    let mut quot = vec![BigInt::zero(); rem.len() - db];
    for i in (0..quot.len()).rev() {
        let top = &rem[i + db];
        if top.is_zero() {
            continue;
        }
        let (q, r) = top.div_rem(lb);
        if !r.is_zero() {
            return None;
        }
        for (j, c) in b.iter().enumerate() {
            rem[i + j] -= &q * c;
        }
        quot[i] = q;
    }
    rem.iter().all(Zero::is_zero).then_some(quot)
}

// ---------------------------------------------------------------------------
// arithmetic over F_p, p < 2^16

fn fp_trim(mut f: FpPoly) -> FpPoly {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

fn fp_from_z(f: &[BigInt], p: u64) -> FpPoly {
    let bp = BigInt::from(p);
    fp_trim(f.iter().map(|c| c.mod_floor(&bp).to_u64().unwrap()).collect())
}

fn fp_pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    r
}

fn fp_inv(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    fp_pow(a, p - 2, p)
}

fn fp_add(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    let n = a.len().max(b.len());
    fp_trim(
        (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p)
            .collect(),
    )
}

fn fp_sub(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    let n = a.len().max(b.len());
    fp_trim(
        (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p)
            .collect(),
    )
}

fn fp_mul(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    fp_trim(out)
}

fn fp_scale(a: &[u64], s: u64, p: u64) -> FpPoly {
    fp_trim(a.iter().map(|&x| x * s % p).collect())
}

fn fp_divrem(a: &[u64], b: &[u64], p: u64) -> (FpPoly, FpPoly) {
    let db = b.len() - 1;
    let inv = fp_inv(b[db], p);
    let mut rem = a.to_vec();
    if rem.len() <= db {
        return (Vec::new(), fp_trim(rem));
    }
    let mut quot = vec![0u64; rem.len() - db];
    for i in (0..quot.len()).rev() {
        let c = rem[i + db] * inv % p;
        if c == 0 {
            continue;
        }
        for (j, &bc) in b.iter().enumerate() {
            rem[i + j] = (rem[i + j] + p - c * bc % p) % p;
        }
        quot[i] = c;
    }
    rem.truncate(db);
    (fp_trim(quot), fp_trim(rem))
}

fn fp_monic(a: &[u64], p: u64) -> FpPoly {
    match a.last() {
        None => Vec::new(),
        Some(&l) => fp_scale(a, fp_inv(l, p), p),
    }
}

fn fp_gcd(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    while !b.is_empty() {
        let r = fp_divrem(&a, &b, p).1;
        a = b;
        b = r;
    }
    fp_monic(&a, p)
}

/// `(g, s, t)` with `s·a + t·b = g` monic.
fn fp_ext_gcd(a: &[u64], b: &[u64], p: u64) -> (FpPoly, FpPoly, FpPoly) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = fp_divrem(&r0, &r1, p);
        let s2 = fp_sub(&s0, &fp_mul(&q, &s1, p), p);
        let t2 = fp_sub(&t0, &fp_mul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    let inv = fp_inv(*r0.last().unwrap(), p);
    (fp_scale(&r0, inv, p), fp_scale(&s0, inv, p), fp_scale(&t0, inv, p))
}

fn fp_derivative(a: &[u64], p: u64) -> FpPoly {
    fp_trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| (i as u64 % p) * c % p)
            .collect(),
    )
}

fn fp_powmod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> FpPoly {
    let mut result = vec![1u64];
    let mut b = fp_divrem(base, m, p).1;
    while e > 0 {
        if e & 1 == 1 {
            result = fp_divrem(&fp_mul(&result, &b, p), m, p).1;
        }
        b = fp_divrem(&fp_mul(&b, &b, p), m, p).1;
        e >>= 1;
    }
    result
}

/// Kernel of an n×n matrix over F_p (row-major rows), standard basis from RREF.
fn fp_kernel(mut a: Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
    let n = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        if row == a.len() {
            break;
        }
        let Some(pr) = (row..a.len()).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(row, pr);
        let inv = fp_inv(a[row][col], p);
        for c in 0..n {
            a[row][c] = a[row][c] * inv % p;
        }
        for r in 0..a.len() {
            if r != row && a[r][col] != 0 {
                let f = a[r][col];
                for c in 0..n {
                    a[r][c] = (a[r][c] + p - f * a[row][c] % p) % p;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    let mut is_pivot = vec![false; n];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for free in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v = vec![0u64; n];
        v[free] = 1;
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = (p - a[r][free]) % p;
        }
        basis.push(v);
    }
    basis
}

/// Berlekamp factorization of a monic squarefree polynomial over F_p.
fn berlekamp(f: &[u64], p: u64) -> Vec<FpPoly> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.to_vec()];
    }
    let xp = fp_powmod(&[0, 1], p, f, p);
    // rows[i] = x^(i p) mod f
    let mut rows: Vec<FpPoly> = vec![vec![1]];
    for i in 1..n {
        let next = fp_divrem(&fp_mul(&rows[i - 1], &xp, p), f, p).1;
        rows.push(next);
    }
    // v is in the Berlekamp subalgebra iff Σ_i v_i (row_i - e_i) = 0,
    // i.e. v lies in the kernel of the transpose of (Q - I).
    let mut qt = vec![vec![0u64; n]; n];
    for (i, r) in rows.iter().enumerate() {
        for j in 0..n {
            let mut c = r.get(j).copied().unwrap_or(0);
            if i == j {
                c = (c + p - 1) % p;
            }
            qt[j][i] = c;
        }
    }
    let basis = fp_kernel(qt, p);
    let r = basis.len();
    let mut factors = vec![f.to_vec()];
    for v in &basis {
        if factors.len() == r {
            break;
        }
        let v = fp_trim(v.clone());
        if v.len() <= 1 {
            continue;
        }
        let mut next = Vec::new();
        for u in factors {
            if u.len() <= 2 {
                next.push(u);
                continue;
            }
            let mut pieces = Vec::new();
            for s in 0..p {
                let g = fp_gcd(&u, &fp_sub(&v, &[s], p), p);
                if g.len() > 1 {
                    pieces.push(g);
                }
            }
            if pieces.len() <= 1 {
                next.push(u);
            } else {
                next.extend(pieces);
            }
        }
        factors = next;
    }
    factors
}

fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..20_000).filter(|&n| (2..).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

/// Picks a prime keeping `f` squarefree with unchanged degree, preferring
/// the one with the fewest modular factors among the first few candidates.
fn choose_prime(f: &[BigInt]) -> (u64, Vec<FpPoly>) {
    let lc = f.last().unwrap();
    let mut best: Option<(u64, Vec<FpPoly>)> = None;
    let mut tried = 0;
    for p in small_primes() {
        if (lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = fp_from_z(f, p);
        let g = fp_gcd(&fp, &fp_derivative(&fp, p), p);
        if g.len() != 1 {
            continue;
        }
        let facs = berlekamp(&fp_monic(&fp, p), p);
        if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
            best = Some((p, facs));
        }
        tried += 1;
        if tried >= 6 || best.as_ref().unwrap().1.len() == 1 {
            break;
        }
    }
    best.expect("no suitable prime below 20000")
}

fn fp_to_z(f: &[u64]) -> ZPoly {
    f.iter().map(|&c| BigInt::from(c)).collect()
}

fn z_mod(f: &[BigInt], m: &BigInt) -> ZPoly {
    f.iter().map(|c| c.mod_floor(m)).collect()
}

/// Lifts `f ≡ lc·a·b (mod p)` with `a`, `b` monic to the same identity mod `p^k`.
fn hensel_two(f: &[BigInt], lc: &BigInt, a: &[u64], b: &[u64], p: u64, k: u32) -> (ZPoly, ZPoly) {
    let (g, s, t) = fp_ext_gcd(a, b, p);
    debug_assert_eq!(g, vec![1]);
    let bp = BigInt::from(p);
    let lc_inv = fp_inv(lc.mod_floor(&bp).to_u64().unwrap(), p);
    let mut big_a = fp_to_z(a);
    let mut big_b = fp_to_z(b);
    let mut pj = bp.clone();
    for _ in 1..k {
        let prod = zmul(&zmul(std::slice::from_ref(lc), &big_a), &big_b);
        let n = f.len().max(prod.len());
        let e: ZPoly = (0..n)
            .map(|i| {
                let x = f.get(i).cloned().unwrap_or_default();
                let y = prod.get(i).cloned().unwrap_or_default();
                x - y
            })
            .collect();
        let e: ZPoly = e
            .into_iter()
            .map(|c| {
                debug_assert!((&c % &pj).is_zero());
                c / &pj
            })
            .collect();
        let ep = fp_scale(&fp_from_z(&e, p), lc_inv, p);
        let (q, alpha) = fp_divrem(&fp_mul(&ep, &t, p), a, p);
        let beta = fp_add(&fp_mul(&ep, &s, p), &fp_mul(&q, b, p), p);
        for (i, c) in alpha.iter().enumerate() {
            big_a[i] += &pj * BigInt::from(*c);
        }
        for (i, c) in beta.iter().enumerate() {
            big_b[i] += &pj * BigInt::from(*c);
        }
        pj *= &bp;
        big_a = z_mod(&big_a, &pj);
        big_b = z_mod(&big_b, &pj);
    }
    (big_a, big_b)
}

fn hensel_multi(f: &[BigInt], lc: &BigInt, factors: &[FpPoly], p: u64, k: u32) -> Vec<ZPoly> {
    let modulus = BigInt::from(p).pow(k);
    if factors.len() == 1 {
        let lc_inv = lc.modinv(&modulus).expect("lc invertible mod p^k");
        return vec![z_mod(&zmul(f, &[lc_inv]), &modulus)];
    }
    let a = &factors[0];
    let b = factors[1..]
        .iter()
        .fold(vec![1u64], |acc, g| fp_mul(&acc, g, p));
    let (big_a, big_b) = hensel_two(f, lc, a, &b, p, k);
    let mut out = vec![big_a];
    out.extend(hensel_multi(&big_b, &BigInt::one(), &factors[1..], p, k));
    out
}

fn symmetric(f: &[BigInt], m: &BigInt) -> ZPoly {
    let half: BigInt = m / 2;
    f.iter()
        .map(|c| {
            let c = c.mod_floor(m);
            if c > half {
                c - m
            } else {
                c
            }
        })
        .collect()
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Irreducible factors of a primitive squarefree integer polynomial.
fn zassenhaus(f: &[BigInt]) -> Vec<ZPoly> {
    let f = primitive(f.to_vec());
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f];
    }
    let (p, modular) = choose_prime(&f);
    if modular.len() == 1 {
        return vec![f];
    }
    let lc = f.last().unwrap().clone();
    let norm1: BigInt = f.iter().map(|c| c.abs()).sum();
    let bound = BigInt::from(2) * lc.abs() * (BigInt::one() << n) * norm1;
    let bp = BigInt::from(p);
    let mut k = 1u32;
    let mut modulus = bp.clone();
    while modulus <= bound {
        modulus *= &bp;
        k += 1;
    }
    let lifted = hensel_multi(&f, &lc, &modular, p, k);

    let mut remaining: Vec<ZPoly> = lifted;
    let mut current = f;
    let mut found = Vec::new();
    let mut s = 1;
    while 2 * s <= remaining.len() {
        let mut hit = None;
        for subset in combinations(remaining.len(), s) {
            let b = current.last().unwrap().clone();
            let g = subset
                .iter()
                .fold(vec![b], |acc, &i| z_mod(&zmul(&acc, &remaining[i]), &modulus));
            let g = primitive(symmetric(&g, &modulus));
            if g.len() < 2 {
                continue;
            }
            if let Some(q) = zdiv_exact(&current, &g) {
                hit = Some((subset, g, q));
                break;
            }
        }
        match hit {
            Some((subset, g, q)) => {
                found.push(g);
                current = primitive(q);
                remaining = remaining
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, g)| g)
                    .collect();
            }
            None => s += 1,
        }
    }
    if current.len() > 1 {
        found.push(current);
    }
    found
}
