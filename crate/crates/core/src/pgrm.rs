//! Projective generalized Reed-Muller codes.
//!
//! Points of P^n(q) are represented by normalized vectors: the first nonzero
//! coordinate is 1. They are listed by pivot position, then
//! lexicographically on the remaining coordinates; this fixes the coordinate
//! order of every projective codeword.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldSpec};
use crate::grm::{
    binomial, check_q, ipow, qpow, second_weight_affine, second_weight_affine_ext, split_ab,
    SplitAB, Q,
};
use crate::linalg::normalized_vectors;
use crate::poly::{AffineForm, HomogeneousPoly, ReducedPoly};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ProjPoint {
    pub coords: Vec<FieldElement>,
    pub pivot: usize,
}

impl ProjPoint {
    /// Normal form of a nonzero vector.
    pub fn normalize(field: &FieldSpec, v: &[FieldElement]) -> Option<ProjPoint> {
        let pivot = v.iter().position(|c| !c.is_zero())?;
        let inv = field.inv(v[pivot]).ok()?;
        Some(ProjPoint {
            coords: v.iter().map(|&c| field.mul(c, inv)).collect(),
            pivot,
        })
    }
}

/// The representatives of P^n(q), `(q^(n+1)-1)/(q-1)` of them.
pub fn proj_points(field: &FieldSpec, n: usize) -> Vec<ProjPoint> {
    normalized_vectors(field, n + 1)
        .into_iter()
        .map(|coords| {
            let pivot = coords
                .iter()
                .position(|c| !c.is_zero())
                .expect("normalized vectors are nonzero");
            ProjPoint { coords, pivot }
        })
        .collect()
}

pub fn proj_length(q: u64, n: u64) -> Result<u64> {
    Ok((ipow(q, n + 1)? - 1) / (q - 1))
}

/// Dimension by the alternating sum over `0 < t <= d`, `t = d mod (q-1)`.
pub fn proj_dimension(q: u64, n: u64, d: u64) -> Result<u64> {
    check_q(q)?;
    if d == 0 {
        return Err(Error::OutOfRange("projective code needs d >= 1".into()));
    }
    let (qi, ni) = (q as i64, n as i64);
    let mut total: i128 = 0;
    let mut t = (d - 1) % (q - 1) + 1;
    while t <= d {
        for j in 0..=ni + 1 {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            let m = t as i64 - j * qi;
            total += sign * binomial(ni + 1, j)? * binomial(m + ni, m)?;
        }
        t += q - 1;
    }
    u64::try_from(total)
        .map_err(|_| Error::Inconsistent(format!("projective dimension sum gave {total}")))
}

/// `(q-b) q^(n-a-1)` with `d-1 = a(q-1)+b`; 1 once d > n(q-1).
pub fn proj_min_distance(q: u64, n: u64, d: u64) -> Result<u64> {
    check_q(q)?;
    if d == 0 {
        return Err(Error::OutOfRange("projective code needs d >= 1".into()));
    }
    if d > n * (q - 1) {
        return Ok(1);
    }
    let SplitAB { a, b } = split_ab(d - 1, q);
    Ok((q - b) * ipow(q, n - a - 1)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ProjBounds {
    pub lower: u64,
    pub upper: Option<u64>,
    pub refined_lower: Option<u64>,
}

/// Bracketing of the projective second weight for n >= 2, 2 <= d <= n(q-1).
/// `w3_affine` is the third affine weight, when known.
pub fn proj_second_weight_bounds(
    q: u64,
    n: u64,
    d: u64,
    w3_affine: Option<u64>,
) -> Result<ProjBounds> {
    check_q(q)?;
    if n < 2 || d < 2 || d > n * (q - 1) {
        return Err(Error::OutOfRange(format!(
            "projective second-weight bounds need n >= 2 and 2 <= d <= n(q-1); got q={q}, n={n}, d={d}"
        )));
    }
    let hyper = proj_min_distance(q, n - 1, d)?;
    let lower = hyper + second_weight_affine_ext(q, n, d)?;
    let upper = second_weight_affine(q, n, d - 1)?;
    Ok(ProjBounds {
        lower,
        upper: Some(upper),
        refined_lower: w3_affine.map(|w3| (hyper + w3).min(upper)),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PgrmParams {
    pub length: u64,
    pub dimension: u64,
    #[serde(rename = "w1")]
    pub min_distance: u64,
    #[serde(rename = "w2_lower")]
    pub second_weight_lower: Option<u64>,
    #[serde(rename = "w2_upper")]
    pub second_weight_upper: Option<u64>,
}

/// Parameters of the projective code. The second-weight fields are exact
/// (lower = upper) for n = 1 and for d > n(q-1), bounds otherwise, and
/// absent when d = 1.
pub fn pgrm_params(q: u64, n: u64, d: u64) -> Result<PgrmParams> {
    check_q(q)?;
    if n == 0 || d == 0 {
        return Err(Error::OutOfRange(format!(
            "projective code needs n, d >= 1; got n={n}, d={d}"
        )));
    }
    let (lo, hi) = if d == 1 {
        (None, None)
    } else if d > n * (q - 1) {
        (Some(2), Some(2))
    } else if n == 1 {
        (Some(q - d + 2), Some(q - d + 2))
    } else {
        let b = proj_second_weight_bounds(q, n, d, None)?;
        (Some(b.lower), b.upper)
    };
    Ok(PgrmParams {
        length: proj_length(q, n)?,
        dimension: proj_dimension(q, n, d)?,
        min_distance: proj_min_distance(q, n, d)?,
        second_weight_lower: lo,
        second_weight_upper: hi,
    })
}

fn vanishing_count(f: &HomogeneousPoly) -> Result<u64> {
    let pts = proj_points(f.field(), f.nvars() - 1);
    let mut zeros = 0u64;
    for p in &pts {
        if f.evaluate(&p.coords)?.is_zero() {
            zeros += 1;
        }
    }
    if zeros == pts.len() as u64 {
        return Err(Error::VanishesEverywhere);
    }
    Ok(zeros)
}

/// Zeros of a form on P^n(q); errors if it vanishes at every point.
pub fn count_zeros_proj(f: &HomogeneousPoly) -> Result<u64> {
    vanishing_count(f)
}

pub fn weight_proj(f: &HomogeneousPoly) -> Result<u64> {
    let n = f.nvars() as u64 - 1;
    Ok(proj_length(f.field().q() as u64, n)? - vanishing_count(f)?)
}

/// A degree-d form that is nonzero at `omega` and vanishes at every other
/// point of P^n(q); needs d > n(q-1).
pub fn indicator_poly(
    field: &FieldSpec,
    n: usize,
    d: u32,
    omega: &ProjPoint,
) -> Result<HomogeneousPoly> {
    let q = field.q();
    let floor = n as u32 * (q - 1);
    if d <= floor {
        return Err(Error::OutOfRange(format!(
            "indicator forms need d > n(q-1) = {floor}, got {d}"
        )));
    }
    if omega.coords.len() != n + 1 {
        return Err(Error::DimensionMismatch {
            expected: n + 1,
            got: omega.coords.len(),
        });
    }
    let nv = n + 1;
    let j = omega.pivot;
    let xj = HomogeneousPoly::var(field, nv, j)?;
    let xj_q1 = xj.pow(q - 1);
    let mut f = xj.pow(d - floor);
    for i in 0..nv {
        if i == j {
            continue;
        }
        let xi = HomogeneousPoly::var(field, nv, i)?;
        let inner = if i < j {
            xi
        } else {
            xi.add(&xj.scale(field.neg(omega.coords[i])))?
        };
        let factor = xj_q1.add(&inner.pow(q - 1).scale(field.neg(FieldElement::ONE)))?;
        f = f.mul(&factor)?;
    }
    Ok(f)
}

/// A degree-d form (d > n(q-1)) whose zeros are exactly `u`.
pub fn poly_with_zero_set(
    field: &FieldSpec,
    n: usize,
    d: u32,
    u: &[ProjPoint],
) -> Result<HomogeneousPoly> {
    let pts = proj_points(field, n);
    if pts.iter().all(|p| u.contains(p)) {
        return Err(Error::OutOfRange(
            "the zero set must be a proper subset of P^n".into(),
        ));
    }
    let mut f = HomogeneousPoly::zero(field, n + 1, d);
    for p in pts.iter().filter(|p| !u.contains(p)) {
        f = f.add(&indicator_poly(field, n, d, p)?)?;
    }
    Ok(f)
}

/// Normal vectors (in [`proj_points`] order) of every projective hyperplane
/// on which `f` vanishes.
pub fn contained_proj_hyperplanes(f: &HomogeneousPoly) -> Vec<ProjPoint> {
    let field = f.field();
    let pts = proj_points(field, f.nvars() - 1);
    let zero: Vec<bool> = pts
        .iter()
        .map(|p| {
            f.evaluate(&p.coords)
                .expect("point has the right length")
                .is_zero()
        })
        .collect();
    pts.iter()
        .filter(|normal| {
            let form = AffineForm::linear(normal.coords.clone());
            pts.iter()
                .zip(&zero)
                .all(|(p, &z)| z || !form.evaluate(field, &p.coords).is_zero())
        })
        .cloned()
        .collect()
}

/// The first contained hyperplane, as its normal vector.
pub fn contains_proj_hyperplane(f: &HomogeneousPoly) -> Option<ProjPoint> {
    contained_proj_hyperplanes(f).into_iter().next()
}

/// `f` on the affine space `P^n \ {normal . X = 0}`.
///
/// Coordinates: `Y_0 = normal . X` and `Y_k` the remaining `X_i` (the pivot
/// of `normal` dropped) in their original order. The result is in the
/// variables `Y_1..Y_n` after setting `Y_0 = 1`.
pub fn affine_restriction(f: &HomogeneousPoly, normal: &ProjPoint) -> Result<ReducedPoly> {
    let field = f.field();
    let nv = f.nvars();
    if normal.coords.len() != nv {
        return Err(Error::DimensionMismatch {
            expected: nv,
            got: normal.coords.len(),
        });
    }
    let others: Vec<usize> = (0..nv).filter(|&i| i != normal.pivot).collect();
    // X = M Y
    let mut m = vec![vec![FieldElement::ZERO; nv]; nv];
    m[normal.pivot][0] = FieldElement::ONE;
    for (k, &i) in others.iter().enumerate() {
        m[normal.pivot][k + 1] = field.neg(normal.coords[i]);
        m[i][k + 1] = FieldElement::ONE;
    }
    f.substitute_linear(&m)?.dehomogenize(0)
}

/// The projective difference `W_a2(d-1) - W_h1(n-1, d) - W_a2(d)` and the
/// value predicted by the case analysis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeltaIneq {
    pub direct: i64,
    #[serde(serialize_with = "opt_ratio_str")]
    pub case_table: Option<Q>,
    pub case_row: Option<&'static str>,
    pub agree: bool,
}

fn opt_ratio_str<S: serde::Serializer>(
    x: &Option<Q>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match x {
        Some(v) => s.serialize_str(&v.to_string()),
        None => s.serialize_none(),
    }
}

fn check_delta_range(q: u64, n: u64, d: u64) -> Result<()> {
    check_q(q)?;
    if n < 2 || d < 2 || d > n * (q - 1) {
        return Err(Error::OutOfRange(format!(
            "delta needs n >= 2, d >= 2 and d-1 < n(q-1); got q={q}, n={n}, d={d}"
        )));
    }
    Ok(())
}

pub fn delta_direct(q: u64, n: u64, d: u64) -> Result<i64> {
    check_delta_range(q, n, d)?;
    let up = second_weight_affine(q, n, d - 1)? as i64;
    let h = proj_min_distance(q, n - 1, d)? as i64;
    let w = second_weight_affine_ext(q, n, d)? as i64;
    Ok(up - h - w)
}

/// Case-by-case value of the difference, keyed on `d-1 = a(q-1)+b`, with the
/// row label. Rows `A*` have `b <= q-3`, rows `B*` have `b = q-2`.
pub fn delta_case_table(q: u64, n: u64, d: u64) -> Result<(Q, &'static str)> {
    check_delta_range(q, n, d)?;
    let SplitAB { a, b } = split_ab(d - 1, q);
    let e = n as i64 - a as i64;
    let p = |k: i64| qpow(q, k);
    let qi = |x: i128| Q::from_integer(x);
    let (q_, b_) = (q as i128, b as i128);
    let out = if b + 3 <= q {
        if a + 1 == n && b == 0 {
            (p(e - 1)? * qi(q_ - 3), "A1")
        } else if a + 1 == n {
            (p(e - 2)? * qi(b_), "A2")
        } else if b == 0 && q == 3 {
            (p(e - 1)?, "A3")
        } else if b == 0 {
            (p(e - 1)? * qi(q_ - 3), "A4")
        } else if b == 1 && q == 3 {
            (qi(2) * p(e - 2)?, "A5")
        } else if b == 1 {
            (p(e - 1)?, "A6")
        } else {
            (p(e - 2)? * qi(b_ - 1), "A7")
        }
    } else if a + 1 == n {
        (Q::from_integer(0), "B1")
    } else if q == 2 && a + 2 == n {
        (Q::from_integer(0), "B2a")
    } else if q == 2 {
        (p(e - 2)?, "B2b")
    } else if q == 3 {
        (qi(2) * p(e - 2)?, "B2c")
    } else {
        (p(e - 2)? * qi(q_ - 3), "B2d")
    };
    Ok(out)
}

/// Direct difference (must be >= 0) and, for d >= 3, the case-table value.
pub fn delta_ineq(q: u64, n: u64, d: u64) -> Result<DeltaIneq> {
    let direct = delta_direct(q, n, d)?;
    if direct < 0 {
        return Err(Error::Inconsistent(format!(
            "negative difference {direct} at ({q},{n},{d})"
        )));
    }
    let (case_table, case_row) = if d >= 3 {
        let (v, row) = delta_case_table(q, n, d)?;
        (Some(v), Some(row))
    } else {
        (None, None)
    };
    let agree = case_table.is_none_or(|v| v == Q::from_integer(direct as i128));
    Ok(DeltaIneq {
        direct,
        case_table,
        case_row,
        agree,
    })
}

/// Upper end of the zero count for a nonzero form: length minus the
/// minimum distance.
pub fn proj_max_zeros(q: u64, n: u64, d: u64) -> Result<u64> {
    Ok(proj_length(q, n)? - proj_min_distance(q, n, d)?)
}
