//! Finite fields GF(p^m) for small prime powers.
//!
//! Elements are integer codes: the base-p digits of a code, little-endian,
//! are the coefficients of `1, x, x^2, ...` in `GF(p)[x] / (modulus)`.
//! Multiplication goes through discrete log tables built from a primitive
//! element; addition is digit-wise (tabulated for q <= 256).

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};

pub const MAX_FIELD_SIZE: u64 = 1 << 16;
pub const MAX_EXTENSION_DEGREE: u32 = 8;

const ADD_TABLE_LIMIT: u32 = 256;

#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct FieldElement(pub u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn code(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct Tables {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    /// exp[i] = g^i for a fixed primitive element g, i in [0, q-1)
    exp: Vec<u32>,
    /// log[x] for x != 0; log[0] is unused
    log: Vec<u32>,
    neg: Vec<u32>,
    /// row-major q*q addition table, empty when q > ADD_TABLE_LIMIT
    add: Vec<u32>,
}

/// A concrete GF(p^m). Cheap to clone; all operations are pure.
#[derive(Clone)]
pub struct FieldSpec(Arc<Tables>);

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.m == other.0.m && self.0.modulus == other.0.modulus)
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}) mod {:?}", self.0.p, self.0.m, self.0.modulus)
    }
}

#[derive(Serialize)]
struct FieldSpecJson<'a> {
    p: u32,
    m: u32,
    modulus: &'a [u32],
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        FieldSpecJson {
            p: self.0.p,
            m: self.0.m,
            modulus: &self.0.modulus,
        }
        .serialize(serializer)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Returns `(p, m)` with `q = p^m`, or `None` when q is not a prime power.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u64;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        // q itself is prime
        p = q;
    }
    let mut rest = q;
    let mut m = 0u32;
    while rest.is_multiple_of(p) {
        rest /= p;
        m += 1;
    }
    (rest == 1 && p <= u32::MAX as u64).then_some((p as u32, m))
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

// Dense polynomials over GF(p), little-endian digit vectors.

fn digits_of(code: u32, p: u32, len: usize) -> Vec<u32> {
    let mut out = vec![0; len];
    let mut c = code;
    for slot in out.iter_mut() {
        *slot = c % p;
        c /= p;
    }
    out
}

fn code_of(digits: &[u32], p: u32) -> u32 {
    digits.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Remainder of `a` modulo the monic polynomial `b`.
fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        if lead != 0 {
            for (i, &bi) in b.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - (lead * bi) % p) % p;
            }
        }
        r.pop();
    }
    r
}

fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let m = modulus.len() - 1;
    for k in 1..=m / 2 {
        for low in 0..(p as u64).pow(k as u32) {
            let mut divisor = digits_of(low as u32, p, k);
            divisor.push(1);
            if poly_rem(modulus, &divisor, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn slow_mul(a: u32, b: u32, p: u32, modulus: &[u32]) -> u32 {
    let m = modulus.len() - 1;
    let da = digits_of(a, p, m);
    let db = digits_of(b, p, m);
    let mut prod = vec![0u32; 2 * m - 1];
    for (i, &x) in da.iter().enumerate() {
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    code_of(&poly_rem(&prod, modulus, p), p)
}

fn slow_pow(mut base: u32, mut e: u64, p: u32, modulus: &[u32]) -> u32 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = slow_mul(acc, base, p, modulus);
        }
        base = slow_mul(base, base, p, modulus);
        e >>= 1;
    }
    acc
}

fn digit_add(a: u32, b: u32, p: u32, m: u32) -> u32 {
    if m == 1 {
        return (a + b) % p;
    }
    let (mut a, mut b) = (a, b);
    let mut out = 0;
    let mut place = 1;
    for _ in 0..m {
        out += ((a % p + b % p) % p) * place;
        a /= p;
        b /= p;
        place *= p;
    }
    out
}

fn digit_neg(a: u32, p: u32, m: u32) -> u32 {
    let mut a = a;
    let mut out = 0;
    let mut place = 1;
    for _ in 0..m {
        out += ((p - a % p) % p) * place;
        a /= p;
        place *= p;
    }
    out
}

/// Builds GF(p^m) with the first monic irreducible modulus of degree m in
/// ascending code order.
pub fn make_field(p: u64, m: u32) -> Result<FieldSpec> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if m == 0 || m > MAX_EXTENSION_DEGREE {
        return Err(Error::FieldTooLarge { p, m });
    }
    let q = p
        .checked_pow(m)
        .filter(|&q| q <= MAX_FIELD_SIZE)
        .ok_or(Error::FieldTooLarge { p, m })?;
    let (p, q) = (p as u32, q as u32);

    let modulus = (0..q)
        .map(|low| {
            let mut cand = digits_of(low, p, m as usize);
            cand.push(1);
            cand
        })
        .find(|cand| is_irreducible(cand, p))
        .expect("an irreducible polynomial of every degree exists");

    let order = (q - 1) as u64;
    let factors = prime_factors(order);
    let generator = (1..q)
        .find(|&g| {
            factors
                .iter()
                .all(|&r| slow_pow(g, order / r, p, &modulus) != 1)
        })
        .expect("the multiplicative group is cyclic");

    let mut exp = Vec::with_capacity(order as usize);
    let mut log = vec![0u32; q as usize];
    let mut x = 1u32;
    for i in 0..order as u32 {
        exp.push(x);
        log[x as usize] = i;
        x = slow_mul(x, generator, p, &modulus);
    }
    let neg = (0..q).map(|a| digit_neg(a, p, m)).collect();
    let add = if q <= ADD_TABLE_LIMIT {
        let mut t = Vec::with_capacity((q * q) as usize);
        for a in 0..q {
            for b in 0..q {
                t.push(digit_add(a, b, p, m));
            }
        }
        t
    } else {
        Vec::new()
    };

    Ok(FieldSpec(Arc::new(Tables {
        p,
        m,
        q,
        modulus,
        exp,
        log,
        neg,
        add,
    })))
}

impl FieldSpec {
    /// The default field of order q (q must be a prime power).
    pub fn of_order(q: u64) -> Result<FieldSpec> {
        let (p, m) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        make_field(p as u64, m)
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn m(&self) -> u32 {
        self.0.m
    }

    pub fn q(&self) -> u32 {
        self.0.q
    }

    /// Base-p digits of the modulus, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn element(&self, code: u32) -> Result<FieldElement> {
        if code < self.0.q {
            Ok(FieldElement(code))
        } else {
            Err(Error::InvalidElement { code, q: self.0.q })
        }
    }

    pub fn contains(&self, x: FieldElement) -> bool {
        x.0 < self.0.q
    }

    /// All q elements in ascending code order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + Clone {
        (0..self.0.q).map(FieldElement)
    }

    /// The element `x` of the polynomial basis (code p); a generator of the
    /// field over GF(p) when m > 1.
    pub fn x(&self) -> FieldElement {
        if self.0.m == 1 {
            FieldElement::ONE
        } else {
            FieldElement(self.0.p)
        }
    }

    pub fn digits(&self, x: FieldElement) -> Vec<u32> {
        digits_of(x.0, self.0.p, self.0.m as usize)
    }

    pub fn from_digits(&self, digits: &[u32]) -> Result<FieldElement> {
        if digits.len() != self.0.m as usize || digits.iter().any(|&d| d >= self.0.p) {
            return Err(Error::MalformedPoly(format!("bad digit vector {digits:?}")));
        }
        Ok(FieldElement(code_of(digits, self.0.p)))
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let t = &self.0;
        if !t.add.is_empty() {
            FieldElement(t.add[(a.0 * t.q + b.0) as usize])
        } else {
            FieldElement(digit_add(a.0, b.0, t.p, t.m))
        }
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(self.0.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement::ZERO;
        }
        let t = &self.0;
        let order = t.q - 1;
        let s = t.log[a.0 as usize] + t.log[b.0 as usize];
        FieldElement(t.exp[(s % order) as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let t = &self.0;
        let order = t.q - 1;
        Ok(FieldElement(
            t.exp[((order - t.log[a.0 as usize]) % order) as usize],
        ))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e`, with `0^0 = 1`.
    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        if e == 0 {
            return FieldElement::ONE;
        }
        if a.0 == 0 {
            return FieldElement::ZERO;
        }
        let t = &self.0;
        let order = (t.q - 1) as u64;
        let l = (t.log[a.0 as usize] as u64 * (e % order)) % order;
        FieldElement(t.exp[l as usize])
    }

    /// Scalar `k * 1` for an integer k (reduced mod p).
    pub fn from_int(&self, k: i64) -> FieldElement {
        FieldElement(k.rem_euclid(self.0.p as i64) as u32)
    }
}

/// GF(p) inside GF(p^s). Elements of the prime field keep their code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionMap {
    base: FieldSpec,
    ext: FieldSpec,
}

impl ExtensionMap {
    pub fn new(p: u64, s: u32) -> Result<Self> {
        Self::from_fields(make_field(p, 1)?, make_field(p, s)?)
    }

    pub fn from_fields(base: FieldSpec, ext: FieldSpec) -> Result<Self> {
        if base.m() != 1 || base.p() != ext.p() {
            return Err(Error::InvalidConstruction(format!(
                "{base:?} is not the prime subfield of {ext:?}"
            )));
        }
        Ok(Self { base, ext })
    }

    pub fn base(&self) -> &FieldSpec {
        &self.base
    }

    pub fn ext(&self) -> &FieldSpec {
        &self.ext
    }

    /// Extension degree s.
    pub fn degree(&self) -> u32 {
        self.ext.m()
    }

    pub fn embed(&self, x: FieldElement) -> FieldElement {
        x
    }

    /// The base-field element equal to `x`, if `x` lies in the prime subfield.
    pub fn restrict(&self, x: FieldElement) -> Option<FieldElement> {
        (x.0 < self.base.p()).then_some(x)
    }

    /// `x^(p^k)`.
    pub fn frobenius(&self, x: FieldElement, k: u32) -> FieldElement {
        (0..k).fold(x, |y, _| self.ext.pow(y, self.base.p() as u64))
    }

    /// `[x, x^p, ..., x^(p^(s-1))]`.
    pub fn galois_conjugates(&self, x: FieldElement) -> Vec<FieldElement> {
        let p = self.base.p() as u64;
        let mut out = Vec::with_capacity(self.degree() as usize);
        let mut y = x;
        for _ in 0..self.degree() {
            out.push(y);
            y = self.ext.pow(y, p);
        }
        out
    }

    /// Product of the conjugates, as a base-field element.
    pub fn norm(&self, x: FieldElement) -> FieldElement {
        let n = self
            .galois_conjugates(x)
            .into_iter()
            .fold(FieldElement::ONE, |acc, y| self.ext.mul(acc, y));
        self.restrict(n).expect("norm lies in the prime field")
    }
}
