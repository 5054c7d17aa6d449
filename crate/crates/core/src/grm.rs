//! Affine generalized Reed-Muller codes: parameters, weights and bounds.
//!
//! All closed forms use exact arithmetic. Quantities that can be fractional
//! (a negative power of q, or the `d/u` factor) are [`Ratio`]s.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gf::prime_power;
use crate::poly::{affine_points, ReducedPoly};

pub type Q = Ratio<i128>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SplitAB {
    pub a: u64,
    pub b: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SplitST {
    pub s: u64,
    pub t: u64,
}

/// `d = a(q-1) + b` with `0 <= b < q-1`.
pub fn split_ab(d: u64, q: u64) -> SplitAB {
    assert!(q >= 2, "q must be at least 2");
    SplitAB {
        a: d / (q - 1),
        b: d % (q - 1),
    }
}

/// `d = s(q-1) + t` with `0 < t <= q-1`; needs d >= 1.
pub fn split_st(d: u64, q: u64) -> SplitST {
    assert!(q >= 2 && d >= 1, "split_st needs q >= 2 and d >= 1");
    let SplitAB { a, b } = split_ab(d, q);
    if b == 0 {
        SplitST { s: a - 1, t: q - 1 }
    } else {
        SplitST { s: a, t: b }
    }
}

/// `C(x, y)`, zero when `y < 0` or `x < y`.
pub fn binomial(x: i64, y: i64) -> Result<i128> {
    if y < 0 || x < y {
        return Ok(0);
    }
    let y = y.min(x - y);
    let mut acc: i128 = 1;
    for i in 0..y {
        acc = acc
            .checked_mul((x - i) as i128)
            .ok_or(Error::Overflow("binomial"))?
            / (i + 1) as i128;
    }
    Ok(acc)
}

pub(crate) fn ipow(q: u64, e: u64) -> Result<u64> {
    let e = u32::try_from(e).map_err(|_| Error::Overflow("power"))?;
    q.checked_pow(e).ok_or(Error::Overflow("power"))
}

/// `q^e` for any integer exponent.
pub(crate) fn qpow(q: u64, e: i64) -> Result<Q> {
    let base = ipow(q, e.unsigned_abs())? as i128;
    Ok(if e >= 0 {
        Q::from_integer(base)
    } else {
        Q::new(1, base)
    })
}

pub(crate) fn to_int(x: Q, what: &'static str) -> Result<u64> {
    if !x.is_integer() || x < Q::zero() {
        return Err(Error::Inconsistent(format!("{what} evaluated to {x}")));
    }
    x.to_integer().to_u64().ok_or(Error::Overflow(what))
}

pub(crate) fn check_q(q: u64) -> Result<()> {
    prime_power(q).map(|_| ()).ok_or(Error::NotPrimePower(q))
}

fn check_affine_range(q: u64, n: u64, d: u64) -> Result<()> {
    check_q(q)?;
    if n == 0 || d == 0 || d >= n * (q - 1) {
        return Err(Error::OutOfRange(format!(
            "affine code needs n >= 1 and 1 <= d < n(q-1); got q={q}, n={n}, d={d}"
        )));
    }
    Ok(())
}

/// Dimension of the affine code by the alternating binomial sum.
pub fn affine_dimension(q: u64, n: u64, d: u64) -> Result<u64> {
    check_q(q)?;
    let (qi, ni) = (q as i64, n as i64);
    let mut total: i128 = 0;
    for t in 0..=d as i64 {
        for j in 0..=ni {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            let m = t - j * qi;
            total += sign * binomial(ni, j)? * binomial(m + ni - 1, m)?;
        }
    }
    u64::try_from(total).map_err(|_| Error::Inconsistent(format!("dimension sum gave {total}")))
}

/// Exponent vectors with partial degrees <= q-1 and total degree <= d, in
/// graded-lex order.
pub fn reduced_monomials(q: u64, n: u64, d: u64) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n as usize];
    fn rec(i: usize, left: u64, q: u64, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for e in 0..=left.min(q - 1) {
            cur[i] = e as u32;
            rec(i + 1, left - e, q, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, d, q, &mut cur, &mut out);
    out.sort_by(|x, y| {
        let (dx, dy): (u32, u32) = (x.iter().sum(), y.iter().sum());
        dx.cmp(&dy).then_with(|| x.cmp(y))
    });
    out
}

/// `(q-b) q^(n-a-1)`, the minimum distance; 1 once d >= n(q-1).
pub fn min_distance_affine(q: u64, n: u64, d: u64) -> Result<u64> {
    check_q(q)?;
    if d >= n * (q - 1) {
        return Ok(1);
    }
    let SplitAB { a, b } = split_ab(d, q);
    Ok((q - b) * ipow(q, n - a - 1)?)
}

/// Second weight through the case tree on (n, q, d, b).
pub fn second_weight_tree(q: u64, n: u64, d: u64) -> Result<u64> {
    check_q(q)?;
    if d == 0 || n == 0 {
        return Err(Error::OutOfRange(format!(
            "second weight needs d, n >= 1; got n={n}, d={d}"
        )));
    }
    if d >= n * (q - 1) {
        return Ok(2);
    }
    let SplitAB { a, b } = split_ab(d, q);
    let p = |e: u64| ipow(q, e);
    if n == 1 {
        return Ok(q - d + 1);
    }
    if d == 1 {
        return p(n);
    }
    if q == 2 {
        return if d < n - 1 {
            Ok(3 * p(n - d - 1)?)
        } else {
            Ok(4)
        };
    }
    if d < q - 1 {
        return Ok(p(n)? - d * p(n - 1)? + (d - 1) * p(n - 2)?);
    }
    if d > (n - 1) * (q - 1) {
        return Ok(q - b + 1);
    }
    match b {
        0 => Ok(2 * p(n - a - 1)? * (q - 1)),
        1 if q == 3 => Ok(8 * ipow(3, n - a - 2)?),
        1 => p(n - a),
        _ => Ok(p(n - a - 2)? * (q - 1) * (q - b + 1)),
    }
}

/// The constant `c` in `W^(2) = (q-t) q^(n-s-1) + c q^(n-s-2)`.
#[allow(clippy::if_same_then_else)] // one branch per table row
pub fn c_table(q: u64, n: u64, d: u64) -> Result<u64> {
    let SplitST { s, t } = split_st(d, q);
    // rows are tried in order; comparisons are written to avoid unsigned underflow
    let c = if s + 1 == n {
        q
    } else if s + 1 < n && 1 < t && 2 * t <= q + 1 {
        t - 1
    } else if s + 1 < n && t == q - 1 && t != 1 {
        t - 1
    } else if s == 0 && t == 1 {
        q
    } else if q < 4 && s + 2 < n && t == 1 {
        q - 1
    } else if q == 3 && s + 2 == n && t == 1 {
        q - 1
    } else if q == 2 && s + 2 == n && t == 1 {
        q
    } else if q >= 4 && 0 < s && s + 2 <= n && t == 1 {
        q
    } else if q >= 4 && s + 2 <= n && 2 * t > q + 1 {
        t - 1
    } else {
        return Err(Error::Inconsistent(format!(
            "no c-table row for q={q}, n={n}, d={d}"
        )));
    };
    Ok(c)
}

/// Second weight through `(q-t) q^(n-s-1) + c q^(n-s-2)`.
pub fn second_weight_ctable(q: u64, n: u64, d: u64) -> Result<u64> {
    check_affine_range(q, n, d)?;
    let SplitST { s, t } = split_st(d, q);
    let c = c_table(q, n, d)?;
    let e = n as i64 - s as i64;
    let w = Q::from_integer((q - t) as i128) * qpow(q, e - 1)?
        + Q::from_integer(c as i128) * qpow(q, e - 2)?;
    to_int(w, "second weight")
}

/// Second weight of the affine code, cross-checked between both forms.
pub fn second_weight_affine(q: u64, n: u64, d: u64) -> Result<u64> {
    check_affine_range(q, n, d)?;
    let tree = second_weight_tree(q, n, d)?;
    let table = second_weight_ctable(q, n, d)?;
    if tree != table {
        return Err(Error::Inconsistent(format!(
            "second weight at ({q},{n},{d}): case tree {tree}, c-table {table}"
        )));
    }
    Ok(tree)
}

/// Second weight with the trivial-code extension (2 once d >= n(q-1)).
pub fn second_weight_affine_ext(q: u64, n: u64, d: u64) -> Result<u64> {
    check_q(q)?;
    if n >= 1 && d >= n * (q - 1) {
        return Ok(2);
    }
    second_weight_affine(q, n, d)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GrmParams {
    pub length: u64,
    pub dimension: u64,
    #[serde(rename = "w1")]
    pub min_distance: u64,
    #[serde(rename = "w2")]
    pub second_weight: u64,
}

pub fn grm_params(q: u64, n: u64, d: u64) -> Result<GrmParams> {
    check_affine_range(q, n, d)?;
    Ok(GrmParams {
        length: ipow(q, n)?,
        dimension: affine_dimension(q, n, d)?,
        min_distance: min_distance_affine(q, n, d)?,
        second_weight: second_weight_affine(q, n, d)?,
    })
}

/// Multiset of codeword weights.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct WeightDistribution {
    pub counts: BTreeMap<u64, u128>,
}

impl WeightDistribution {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, weight: u64, count: u128) {
        if count > 0 {
            *self.counts.entry(weight).or_insert(0) += count;
        }
    }

    pub fn merge(mut self, other: &WeightDistribution) -> Self {
        for (&w, &c) in &other.counts {
            self.add(w, c);
        }
        self
    }

    pub fn total(&self) -> u128 {
        self.counts.values().sum()
    }

    pub fn count(&self, weight: u64) -> u128 {
        self.counts.get(&weight).copied().unwrap_or(0)
    }

    /// Distinct positive weights, ascending.
    pub fn positive_weights(&self) -> Vec<u64> {
        self.counts.keys().copied().filter(|&w| w > 0).collect()
    }

    /// The k-th smallest distinct positive weight (k >= 1).
    pub fn kth_weight(&self, k: usize) -> Result<u64> {
        let ws = self.positive_weights();
        if k == 0 || k > ws.len() {
            return Err(Error::NotEnoughWeights {
                k,
                available: ws.len(),
            });
        }
        Ok(ws[k - 1])
    }
}

pub fn count_zeros_affine(f: &ReducedPoly) -> u64 {
    affine_points(f.field(), f.nvars())
        .iter()
        .filter(|pt| {
            f.evaluate(pt)
                .expect("point has the right length")
                .is_zero()
        })
        .count() as u64
}

pub fn weight_affine(f: &ReducedPoly) -> u64 {
    (f.field().q() as u64).pow(f.nvars() as u32) - count_zeros_affine(f)
}

pub(crate) fn ratio_str<S: Serializer>(x: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

fn opt_ratio_str<S: Serializer>(x: &Option<Q>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match x {
        Some(v) => s.serialize_str(&v.to_string()),
        None => s.serialize_none(),
    }
}

/// Strict upper bounds on the zero count of an irreducible but not
/// absolutely irreducible polynomial of degree d.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MlemBound {
    #[serde(serialize_with = "ratio_str")]
    pub generic_bound: Q,
    #[serde(serialize_with = "opt_ratio_str")]
    pub a0_bound: Option<Q>,
}

impl MlemBound {
    /// `n_zeros` is below every bound present.
    pub fn holds_for(&self, n_zeros: u64) -> bool {
        let z = Q::from_integer(n_zeros as i128);
        z < self.generic_bound && self.a0_bound.is_none_or(|b| z < b)
    }
}

fn check_u(d: u64, u: u64) -> Result<()> {
    if u < 2 {
        return Err(Error::OutOfRange(format!("u must be at least 2, got {u}")));
    }
    if d < 2 {
        return Err(Error::OutOfRange(format!("d must exceed 1, got {d}")));
    }
    Ok(())
}

/// `e = n - floor(d / (u(q-1))) - 1`.
fn mlem_exponent(q: u64, n: u64, d: u64, u: u64) -> Result<u64> {
    let e = n as i64 - (d / (u * (q - 1))) as i64 - 1;
    u64::try_from(e).map_err(|_| {
        Error::OutOfRange(format!(
            "n - floor(d/(u(q-1))) - 1 is negative for q={q}, n={n}, d={d}, u={u}"
        ))
    })
}

pub fn mlem_bound(q: u64, n: u64, d: u64, u: u64) -> Result<MlemBound> {
    check_q(q)?;
    check_u(d, u)?;
    let qn = ipow(q, n)? as i128;
    let e = mlem_exponent(q, n, d, u)?;
    let generic = Q::from_integer(qn - 2 * ipow(q, e)? as i128);
    let a0 = if split_ab(d, q).a == 0 {
        Some(Q::new(d as i128, u as i128) * Q::from_integer(ipow(q, n - 1)? as i128))
    } else {
        None
    };
    Ok(MlemBound {
        generic_bound: generic,
        a0_bound: a0,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NaiCheck {
    #[serde(serialize_with = "ratio_str")]
    pub lower_bound_on_weight: Q,
    pub second_weight: u64,
    pub exceeds: bool,
}

/// Weight lower bound for words without absolutely irreducible structure,
/// compared with the second weight.
pub fn nai_gap_check(q: u64, n: u64, d: u64, u: u64) -> Result<NaiCheck> {
    check_affine_range(q, n, d)?;
    check_u(d, u)?;
    let lower = if split_ab(d, q).a == 0 {
        Q::from_integer(ipow(q, n)? as i128)
            - Q::new(d as i128, u as i128) * Q::from_integer(ipow(q, n - 1)? as i128)
    } else {
        Q::from_integer(2 * ipow(q, mlem_exponent(q, n, d, u)?)? as i128)
    };
    let w2 = second_weight_affine(q, n, d)?;
    Ok(NaiCheck {
        lower_bound_on_weight: lower,
        second_weight: w2,
        exceeds: lower > Q::from_integer(w2 as i128),
    })
}

fn big_str<S: Serializer>(x: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

fn opt_big_str<S: Serializer>(x: &Option<BigUint>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match x {
        Some(v) => s.serialize_str(&v.to_string()),
        None => s.serialize_none(),
    }
}

/// Constants of the Weil-type estimate `|N - q^(n-1)| <= A q^(n-3/2) + B q^(n-2)`
/// and the threshold above which norm-form words lose to hyperplane unions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeilBounds {
    pub d: u64,
    /// `A^2 = 2 d^5`.
    #[serde(serialize_with = "big_str")]
    pub a_squared: BigUint,
    /// `A` itself when it is an integer.
    #[serde(serialize_with = "opt_big_str")]
    pub a: Option<BigUint>,
    #[serde(serialize_with = "big_str")]
    pub b: BigUint,
    #[serde(serialize_with = "big_str")]
    pub c: BigUint,
    /// Smallest integer q with `q > ((A + sqrt(A^2 + 4C)) / 2)^2`.
    #[serde(serialize_with = "big_str")]
    pub q_min: BigUint,
}

pub fn weil_bounds(d: u64) -> Result<WeilBounds> {
    if !(2..=4).contains(&d) {
        return Err(Error::OutOfRange(format!(
            "weil_bounds supports 2 <= d <= 4, got {d}"
        )));
    }
    let big = BigUint::from;
    let a_squared = big(2u64) * big(d).pow(5);
    let a = a_squared.sqrt();
    let a = (&a * &a == a_squared).then_some(a);
    let k = d * (d + 1) / 2;
    let b = big(4u64) * big(d * d) * big(k).pow(1u32 << k);
    let c = &b + big(d * (d - 1) / 2);

    // q > q0 iff q > C and (q - C)^2 > A^2 q. With y = q - C this is
    // y^2 - K y - K C > 0, K = A^2.
    let kk = &a_squared;
    let positive = |y: &BigUint| y * y > kk * y + kk * &c;
    let disc = kk * kk + big(4u64) * kk * &c;
    let mut y = (kk + disc.sqrt()) / big(2u64);
    while y > BigUint::zero() && positive(&(&y - BigUint::one())) {
        y -= BigUint::one();
    }
    while !positive(&y) {
        y += BigUint::one();
    }
    let q_min = &c + y;
    Ok(WeilBounds {
        d,
        a_squared,
        a,
        b,
        c,
        q_min,
    })
}
