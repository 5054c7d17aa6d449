//! Extremal codewords and zero-set recognizers.
//!
//! Geometry is done on point sets: a zero set is a bitset over GF(q)^n in
//! [`affine_points`] order, and a hyperplane is a normalized direction plus a
//! constant.

use fixedbitset::FixedBitSet;
use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{ExtensionMap, FieldElement, FieldSpec};
use crate::grm::{ipow, min_distance_affine, qpow, split_ab, to_int, SplitAB, Q};
use crate::linalg::{is_independent, normalized_vectors};
use crate::poly::{affine_points, AffineForm, ReducedPoly};

/// `{x : direction . x = constant}` with a normalized direction.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Hyperplane {
    pub direction: Vec<FieldElement>,
    pub constant: FieldElement,
}

/// Points, hyperplanes and incidence data of GF(q)^n.
pub struct AffineGeometry {
    field: FieldSpec,
    n: usize,
    points: Vec<Vec<FieldElement>>,
    directions: Vec<Vec<FieldElement>>,
    /// values[i][j] = directions[i] . points[j]
    values: Vec<Vec<u32>>,
}

impl AffineGeometry {
    pub fn new(field: &FieldSpec, n: usize) -> Self {
        let points = affine_points(field, n);
        let directions = normalized_vectors(field, n);
        let values = directions
            .iter()
            .map(|v| {
                let form = AffineForm::linear(v.clone());
                points.iter().map(|p| form.evaluate(field, p).0).collect()
            })
            .collect();
        Self {
            field: field.clone(),
            n,
            points,
            directions,
            values,
        }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn points(&self) -> &[Vec<FieldElement>] {
        &self.points
    }

    pub fn directions(&self) -> &[Vec<FieldElement>] {
        &self.directions
    }

    pub fn num_hyperplanes(&self) -> usize {
        self.directions.len() * self.field.q() as usize
    }

    /// Hyperplane `idx`; hyperplanes are numbered direction-major.
    pub fn hyperplane(&self, idx: usize) -> Hyperplane {
        let q = self.field.q() as usize;
        Hyperplane {
            direction: self.directions[idx / q].clone(),
            constant: FieldElement((idx % q) as u32),
        }
    }

    pub fn hyperplane_set(&self, idx: usize) -> FixedBitSet {
        let q = self.field.q() as usize;
        let (dir, c) = (idx / q, (idx % q) as u32);
        let mut s = FixedBitSet::with_capacity(self.points.len());
        for (j, &v) in self.values[dir].iter().enumerate() {
            if v == c {
                s.insert(j);
            }
        }
        s
    }

    pub fn zero_set(&self, f: &ReducedPoly) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(self.points.len());
        for (j, p) in self.points.iter().enumerate() {
            if f.evaluate(p).expect("point has the right length").is_zero() {
                s.insert(j);
            }
        }
        s
    }

    /// Indices of hyperplanes lying entirely inside `z`.
    pub fn contained_hyperplanes(&self, z: &FixedBitSet) -> Vec<usize> {
        let q = self.field.q() as usize;
        let full = self.points.len() / q;
        let mut out = Vec::new();
        for (dir, vals) in self.values.iter().enumerate() {
            let mut counts = vec![0usize; q];
            for j in z.ones() {
                counts[vals[j] as usize] += 1;
            }
            out.extend((0..q).filter(|&c| counts[c] == full).map(|c| dir * q + c));
        }
        out
    }

    /// `z` is the union of exactly `d` distinct hyperplanes.
    pub fn is_union_of_d_hyperplanes(&self, z: &FixedBitSet, d: usize) -> bool {
        if z.count_ones(..) == 0 {
            return d == 0;
        }
        let contained = self.contained_hyperplanes(z);
        if contained.len() < d {
            return false;
        }
        let sets: Vec<FixedBitSet> = contained.iter().map(|&h| self.hyperplane_set(h)).collect();
        let covered = FixedBitSet::with_capacity(self.points.len());
        cover_within(z, &sets, covered, d)
    }

    /// `z` is `a` blocks of q-1 parallel hyperplanes plus one block of `b`
    /// parallel hyperplanes, with a+1 independent directions (b = 0 drops
    /// the last block), where `d = a(q-1) + b`.
    pub fn is_delsarte_maximal_set(&self, z: &FixedBitSet, d: u64) -> bool {
        let q = self.field.q() as u64;
        let n = self.n as u64;
        if d == 0 || d >= n * (q - 1) {
            return false;
        }
        let expected = self.points.len() as u64 - min_distance_affine(q, n, d).expect("valid q");
        if z.count_ones(..) as u64 != expected {
            return false;
        }
        let SplitAB { a, b } = split_ab(d, q);
        let contained = self.contained_hyperplanes(z);
        let mut per_dir = vec![0u64; self.directions.len()];
        for &h in &contained {
            per_dir[h / q as usize] += 1;
        }
        // Any choice of hyperplanes inside z with this block structure covers
        // exactly `expected` points, so containment plus the count suffices.
        let full: Vec<usize> = (0..per_dir.len())
            .filter(|&i| per_dir[i] >= q - 1)
            .collect();
        let partial: Vec<usize> = (0..per_dir.len()).filter(|&i| per_dir[i] >= b).collect();
        full.iter().copied().combinations(a as usize).any(|chosen| {
            let mut rows: Vec<Vec<FieldElement>> =
                chosen.iter().map(|&i| self.directions[i].clone()).collect();
            if !is_independent(&self.field, &rows) {
                return false;
            }
            if b == 0 {
                return true;
            }
            partial.iter().any(|&i| {
                if chosen.contains(&i) {
                    return false;
                }
                rows.push(self.directions[i].clone());
                let ok = is_independent(&self.field, &rows);
                rows.pop();
                ok
            })
        })
    }
}

fn cover_within(
    z: &FixedBitSet,
    sets: &[FixedBitSet],
    covered: FixedBitSet,
    budget: usize,
) -> bool {
    let Some(first) = z.difference(&covered).next() else {
        return true;
    };
    if budget == 0 {
        return false;
    }
    sets.iter().filter(|s| s.contains(first)).any(|s| {
        let mut next = covered.clone();
        next.union_with(s);
        cover_within(z, sets, next, budget - 1)
    })
}

pub fn is_union_of_d_hyperplanes(f: &ReducedPoly, d: usize) -> bool {
    if f.is_zero() {
        return false;
    }
    let geo = AffineGeometry::new(f.field(), f.nvars());
    geo.is_union_of_d_hyperplanes(&geo.zero_set(f), d)
}

/// Zero set of `f` has the shape of a minimum-weight word of the degree-d
/// code. False for the zero polynomial or when deg f > d.
pub fn is_delsarte_maximal(f: &ReducedPoly, d: u64) -> bool {
    match f.total_degree() {
        None => false,
        Some(deg) if deg as u64 > d => false,
        Some(_) => {
            let geo = AffineGeometry::new(f.field(), f.nvars());
            geo.is_delsarte_maximal_set(&geo.zero_set(f), d)
        }
    }
}

/// Data for `w0 prod_i (1 - (l_i - w_i)^(q-1)) prod_j (l_{a+1} - w'_j)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaximalSpec {
    /// a+1 linear forms (the last is used only when b > 0)
    pub directions: Vec<Vec<FieldElement>>,
    pub w: Vec<FieldElement>,
    pub w_prime: Vec<FieldElement>,
    pub w0: FieldElement,
}

impl MaximalSpec {
    /// Coordinate forms `X_1..X_{a+1}`, `w_i = 0`, `w'` the first b elements.
    pub fn standard(field: &FieldSpec, n: usize, d: u64) -> Result<Self> {
        let q = field.q() as u64;
        let SplitAB { a, b } = split_ab(d, q);
        let k = (a + 1) as usize;
        if k > n {
            return Err(Error::OutOfRange(format!("need a+1 = {k} <= n = {n}")));
        }
        Ok(Self {
            directions: standard_directions(n, k),
            w: vec![FieldElement::ZERO; a as usize],
            w_prime: field.elements().take(b as usize).collect(),
            w0: FieldElement::ONE,
        })
    }
}

/// The unit vectors `e_1..e_k` of length n.
pub fn standard_directions(n: usize, k: usize) -> Vec<Vec<FieldElement>> {
    (0..k)
        .map(|i| {
            let mut v = vec![FieldElement::ZERO; n];
            v[i] = FieldElement::ONE;
            v
        })
        .collect()
}

fn distinct(xs: &[FieldElement]) -> bool {
    xs.iter().all_unique()
}

fn check_directions(field: &FieldSpec, n: usize, dirs: &[Vec<FieldElement>]) -> Result<()> {
    if dirs.iter().any(|v| v.len() != n) {
        return Err(Error::InvalidConstruction(format!(
            "every direction needs {n} coefficients"
        )));
    }
    if dirs.iter().flatten().any(|&c| !field.contains(c)) {
        return Err(Error::InvalidConstruction(
            "direction coefficient outside the field".into(),
        ));
    }
    if !is_independent(field, dirs) {
        return Err(Error::InvalidConstruction(
            "directions are linearly dependent".into(),
        ));
    }
    Ok(())
}

/// A minimum-weight word of the degree-d affine code on GF(q)^n.
pub fn maximal_codeword(
    field: &FieldSpec,
    n: usize,
    d: u64,
    spec: &MaximalSpec,
) -> Result<ReducedPoly> {
    let q = field.q() as u64;
    if d == 0 || d >= n as u64 * (q - 1) {
        return Err(Error::OutOfRange(format!(
            "need 1 <= d < n(q-1), got d={d}"
        )));
    }
    let SplitAB { a, b } = split_ab(d, q);
    if spec.directions.len() != a as usize + 1 {
        return Err(Error::InvalidConstruction(format!(
            "expected {} directions, got {}",
            a + 1,
            spec.directions.len()
        )));
    }
    if spec.w.len() != a as usize || spec.w_prime.len() != b as usize {
        return Err(Error::InvalidConstruction(format!(
            "expected {a} shifts w and {b} shifts w', got {} and {}",
            spec.w.len(),
            spec.w_prime.len()
        )));
    }
    if !distinct(&spec.w_prime) {
        return Err(Error::InvalidConstruction(
            "shifts w' must be distinct".into(),
        ));
    }
    if spec.w0.is_zero() || !field.contains(spec.w0) {
        return Err(Error::InvalidConstruction(
            "w0 must be a nonzero field element".into(),
        ));
    }
    check_directions(field, n, &spec.directions)?;

    let one = ReducedPoly::one(field, n);
    let mut f = ReducedPoly::constant(field, n, spec.w0);
    for (dir, &w) in spec.directions.iter().zip(&spec.w) {
        let shifted =
            ReducedPoly::from_affine_form(&AffineForm::new(dir.clone(), field.neg(w)), field);
        f = f.mul(&one.sub(&shifted.pow(q - 1))?)?;
    }
    let last = &spec.directions[a as usize];
    for &w in &spec.w_prime {
        f = f.mul(&ReducedPoly::from_affine_form(
            &AffineForm::new(last.clone(), field.neg(w)),
            field,
        ))?;
    }
    Ok(f)
}

/// Parallel hyperplanes `direction . x = u` for each shift u.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HyperplaneBlock {
    pub direction: Vec<FieldElement>,
    pub shifts: Vec<FieldElement>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Arrangement {
    #[serde(skip)]
    field: FieldSpec,
    n: usize,
    blocks: Vec<HyperplaneBlock>,
}

impl Arrangement {
    pub fn new(field: &FieldSpec, n: usize, blocks: Vec<HyperplaneBlock>) -> Result<Self> {
        let q = field.q() as usize;
        if blocks.is_empty() || blocks.len() > n {
            return Err(Error::InvalidConstruction(format!(
                "need between 1 and {n} blocks, got {}",
                blocks.len()
            )));
        }
        for blk in &blocks {
            if blk.shifts.is_empty() || blk.shifts.len() > q - 1 {
                return Err(Error::InvalidConstruction(format!(
                    "block sizes must lie in [1, {}], got {}",
                    q - 1,
                    blk.shifts.len()
                )));
            }
            if !distinct(&blk.shifts) || blk.shifts.iter().any(|&u| !field.contains(u)) {
                return Err(Error::InvalidConstruction(
                    "block shifts must be distinct field elements".into(),
                ));
            }
        }
        let dirs: Vec<_> = blocks.iter().map(|b| b.direction.clone()).collect();
        check_directions(field, n, &dirs)?;
        Ok(Self {
            field: field.clone(),
            n,
            blocks,
        })
    }

    /// Blocks along `e_1, e_2, ...` whose shifts are the first elements.
    pub fn standard(field: &FieldSpec, n: usize, sizes: &[usize]) -> Result<Self> {
        let dirs = standard_directions(n, sizes.len().min(n));
        if dirs.len() < sizes.len() {
            return Err(Error::InvalidConstruction(format!(
                "{} blocks need n >= {}",
                sizes.len(),
                sizes.len()
            )));
        }
        let blocks = dirs
            .into_iter()
            .zip(sizes)
            .map(|(direction, &k)| HyperplaneBlock {
                direction,
                shifts: field.elements().take(k).collect(),
            })
            .collect();
        Self::new(field, n, blocks)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[HyperplaneBlock] {
        &self.blocks
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.shifts.len()).collect()
    }

    pub fn degree(&self) -> usize {
        self.sizes().iter().sum()
    }

    /// `q^n - q^(n-k) prod (q - d_i)`.
    pub fn predicted_zeros(&self) -> u64 {
        arrangement_zeros(self.field.q() as u64, self.n as u64, &self.sizes())
            .expect("validated arrangement")
    }
}

/// Zero count of an arrangement with the given block sizes.
pub fn arrangement_zeros(q: u64, n: u64, sizes: &[usize]) -> Result<u64> {
    let k = sizes.len() as u64;
    if k > n || sizes.iter().any(|&s| s == 0 || s as u64 >= q) {
        return Err(Error::InvalidConstruction(format!(
            "bad block sizes {sizes:?} for q={q}, n={n}"
        )));
    }
    let prod: u64 = sizes.iter().map(|&s| q - s as u64).product();
    Ok(ipow(q, n)? - ipow(q, n - k)? * prod)
}

/// `prod_i prod_j (f_i(x) - u_ij)`.
pub fn arrangement_poly(arr: &Arrangement) -> ReducedPoly {
    let field = &arr.field;
    let mut f = ReducedPoly::one(field, arr.n);
    for blk in &arr.blocks {
        for &u in &blk.shifts {
            let l = ReducedPoly::from_affine_form(
                &AffineForm::new(blk.direction.clone(), field.neg(u)),
                field,
            );
            f = f.mul(&l).expect("same ring");
        }
    }
    f
}

fn check_config(q: u64, n: usize, d: u64, min_n: usize) -> Result<()> {
    if d < 3 || d >= q - 1 {
        return Err(Error::OutOfRange(format!(
            "configurations need 3 <= d < q-1, got q={q}, d={d}"
        )));
    }
    if n < min_n {
        return Err(Error::OutOfRange(format!(
            "configuration needs n >= {min_n}, got {n}"
        )));
    }
    Ok(())
}

fn config(
    field: &FieldSpec,
    n: usize,
    dirs: &[Vec<FieldElement>],
    sizes: &[usize],
) -> Result<Arrangement> {
    if dirs.len() != sizes.len() {
        return Err(Error::InvalidConstruction(format!(
            "expected {} directions, got {}",
            sizes.len(),
            dirs.len()
        )));
    }
    let blocks = dirs
        .iter()
        .zip(sizes)
        .map(|(dir, &k)| HyperplaneBlock {
            direction: dir.clone(),
            shifts: field.elements().take(k).collect(),
        })
        .collect();
    Arrangement::new(field, n, blocks)
}

/// Blocks of sizes (d-2, 2).
pub fn config_s(
    field: &FieldSpec,
    n: usize,
    d: u64,
    dirs: &[Vec<FieldElement>],
) -> Result<Arrangement> {
    check_config(field.q() as u64, n, d, 2)?;
    config(field, n, dirs, &[d as usize - 2, 2])
}

/// Blocks of sizes (d-2, 1, 1).
pub fn config_t(
    field: &FieldSpec,
    n: usize,
    d: u64,
    dirs: &[Vec<FieldElement>],
) -> Result<Arrangement> {
    check_config(field.q() as u64, n, d, 3)?;
    config(field, n, dirs, &[d as usize - 2, 1, 1])
}

/// `q^n - q^(n-2)(q-d+2)(q-2)`.
pub fn config_s_zeros(q: u64, n: u64, d: u64) -> Result<u64> {
    Ok(ipow(q, n)? - ipow(q, n - 2)? * (q - d + 2) * (q - 2))
}

/// `d q^(n-1) - (2d-3) q^(n-2) + (d-2) q^(n-3)`.
pub fn config_t_zeros(q: u64, n: u64, d: u64) -> Result<u64> {
    let (n, d) = (n as i64, d as i128);
    let v = Q::from_integer(d) * qpow(q, n - 1)? - Q::from_integer(2 * d - 3) * qpow(q, n - 2)?
        + Q::from_integer(d - 2) * qpow(q, n - 3)?;
    to_int(v, "configuration T zero count")
}

/// `d q^(n-1) - d(d-1)/2 q^(n-2)`, the least zero count of a union of d
/// distinct hyperplanes.
pub fn lemma_mini_bound(q: u64, n: u64, d: u64) -> Result<Q> {
    let d = d as i128;
    Ok(Q::from_integer(d) * qpow(q, n as i64 - 1)?
        - Q::new(d * (d - 1), 2) * qpow(q, n as i64 - 2)?)
}

/// `(d - d'/2) q^(n-1)`: strict upper bound on the zeros of a degree <= d
/// word with an irreducible, not absolutely irreducible factor of degree d'.
pub fn irrbutnotabs_bound(q: u64, n: u64, d: u64, d_prime: u64) -> Result<Q> {
    Ok((Q::from_integer(d as i128) - Q::new(d_prime as i128, 2)) * qpow(q, n as i64 - 1)?)
}

/// A polynomial g over GF(p^s) whose conjugate product is taken.
#[derive(Clone, Debug)]
pub struct NormFormSpec {
    ext: ExtensionMap,
    g: ReducedPoly,
    d_prime: u32,
}

impl NormFormSpec {
    pub fn new(ext: ExtensionMap, g: ReducedPoly) -> Result<Self> {
        if ext.degree() < 2 {
            return Err(Error::InvalidConstruction(
                "extension degree must be at least 2".into(),
            ));
        }
        if g.field() != ext.ext() {
            return Err(Error::FieldMismatch);
        }
        let Some(d_prime) = g.total_degree() else {
            return Err(Error::InvalidConstruction("g must be nonzero".into()));
        };
        if g.terms().all(|(_, c)| ext.restrict(c).is_some()) {
            return Err(Error::InvalidConstruction(
                "g has all coefficients in the base field".into(),
            ));
        }
        Ok(Self { ext, g, d_prime })
    }

    pub fn ext(&self) -> &ExtensionMap {
        &self.ext
    }

    pub fn g(&self) -> &ReducedPoly {
        &self.g
    }

    pub fn d_prime(&self) -> u32 {
        self.d_prime
    }

    /// `s * d'`.
    pub fn degree(&self) -> u64 {
        self.ext.degree() as u64 * self.d_prime as u64
    }
}

/// `g^sigma`: Frobenius applied `k` times to every coefficient.
pub fn conjugate_poly(ext: &ExtensionMap, g: &ReducedPoly, k: u32) -> ReducedPoly {
    ReducedPoly::reduce(
        ext.ext(),
        g.nvars(),
        g.terms().map(|(m, c)| (m.0.clone(), ext.frobenius(c, k))),
    )
    .expect("conjugation preserves shape")
}

/// `prod_sigma g^sigma`, as a reduced polynomial over the base field.
pub fn norm_form(spec: &NormFormSpec) -> Result<ReducedPoly> {
    let ext = &spec.ext;
    let mut prod = ReducedPoly::one(ext.ext(), spec.g.nvars());
    for k in 0..ext.degree() {
        prod = prod.mul(&conjugate_poly(ext, &spec.g, k))?;
    }
    let mut terms = Vec::with_capacity(prod.num_terms());
    for (m, c) in prod.terms() {
        let c = ext.restrict(c).ok_or_else(|| {
            Error::InvalidConstruction(format!(
                "conjugate product has coefficient {c} outside the base field"
            ))
        })?;
        terms.push((m.0.clone(), c));
    }
    ReducedPoly::reduce(ext.base(), spec.g.nvars(), terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;
    use crate::grm::count_zeros_affine;

    fn fe(c: u32) -> FieldElement {
        FieldElement(c)
    }

    fn poly(field: &FieldSpec, n: usize, terms: &[(&[u32], u32)]) -> ReducedPoly {
        ReducedPoly::reduce(field, n, terms.iter().map(|(e, c)| (e.to_vec(), fe(*c)))).unwrap()
    }

    #[test]
    fn maximal_examples() {
        let f3 = make_field(3, 1).unwrap();
        let f = maximal_codeword(&f3, 2, 2, &MaximalSpec::standard(&f3, 2, 2).unwrap()).unwrap();
        assert_eq!(f, poly(&f3, 2, &[(&[0, 0], 1), (&[2, 0], 2)]));
        assert_eq!(count_zeros_affine(&f), 6);
        assert!(is_delsarte_maximal(&f, 2));
        assert!(is_union_of_d_hyperplanes(&f, 2));

        let f4 = make_field(2, 2).unwrap();
        let f = maximal_codeword(&f4, 2, 2, &MaximalSpec::standard(&f4, 2, 2).unwrap()).unwrap();
        assert_eq!(count_zeros_affine(&f), 8);
        assert!(is_delsarte_maximal(&f, 2));
    }

    #[test]
    fn maximal_rejects_bad_data() {
        let f5 = make_field(5, 1).unwrap();
        let mut spec = MaximalSpec::standard(&f5, 2, 6).unwrap();
        spec.directions[1] = spec.directions[0].clone();
        assert!(matches!(
            maximal_codeword(&f5, 2, 6, &spec),
            Err(Error::InvalidConstruction(_))
        ));
        let mut spec = MaximalSpec::standard(&f5, 2, 3).unwrap();
        spec.w_prime[1] = spec.w_prime[0];
        assert!(maximal_codeword(&f5, 2, 3, &spec).is_err());
        let spec = MaximalSpec::standard(&f5, 2, 3).unwrap();
        assert!(maximal_codeword(&f5, 2, 2, &spec).is_err());
    }

    #[test]
    fn arrangement_examples() {
        let f4 = make_field(2, 2).unwrap();
        let arr = Arrangement::standard(&f4, 2, &[1, 1]).unwrap();
        assert_eq!(arr.predicted_zeros(), 7);
        assert_eq!(count_zeros_affine(&arrangement_poly(&arr)), 7);
        let f3 = make_field(3, 1).unwrap();
        let arr = Arrangement::standard(&f3, 2, &[2]).unwrap();
        assert_eq!(arr.predicted_zeros(), 6);
        assert_eq!(count_zeros_affine(&arrangement_poly(&arr)), 6);
        let f5 = make_field(5, 1).unwrap();
        let arr = Arrangement::standard(&f5, 3, &[2, 1]).unwrap();
        assert_eq!(arr.predicted_zeros(), 65);
        assert_eq!(count_zeros_affine(&arrangement_poly(&arr)), 65);
        assert!(Arrangement::standard(&f3, 2, &[3]).is_err());
        assert!(Arrangement::standard(&f3, 1, &[1, 1]).is_err());
    }

    #[test]
    fn configuration_examples() {
        let f7 = make_field(7, 1).unwrap();
        let s = config_s(&f7, 2, 5, &standard_directions(2, 2)).unwrap();
        assert_eq!(s.predicted_zeros(), 29);
        assert_eq!(config_s_zeros(7, 2, 5).unwrap(), 29);
        assert_eq!(count_zeros_affine(&arrangement_poly(&s)), 29);
        let t = config_t(&f7, 3, 5, &standard_directions(3, 3)).unwrap();
        assert_eq!(t.predicted_zeros(), 199);
        assert_eq!(config_t_zeros(7, 3, 5).unwrap(), 199);
        assert_eq!(count_zeros_affine(&arrangement_poly(&t)), 199);
        let s3 = config_s(&f7, 3, 5, &standard_directions(3, 2)).unwrap();
        assert_eq!(s3.predicted_zeros(), 203);
        assert!(config_s(&f7, 2, 2, &standard_directions(2, 2)).is_err());
        assert!(config_t(&f7, 2, 5, &standard_directions(2, 2)).is_err());
    }

    #[test]
    fn norm_form_over_gf4() {
        let ext = ExtensionMap::new(2, 2).unwrap();
        let g = poly(ext.ext(), 2, &[(&[1, 0], 1), (&[0, 1], 2)]);
        let spec = NormFormSpec::new(ext.clone(), g.clone()).unwrap();
        assert_eq!(spec.degree(), 2);
        let f = norm_form(&spec).unwrap();
        let expected = poly(ext.base(), 2, &[(&[2, 0], 1), (&[1, 1], 1), (&[0, 2], 1)]);
        assert_eq!(f, expected);
        assert_eq!(count_zeros_affine(&f), 1);
        // zeros of f over the base field are the base points where g vanishes
        for p in affine_points(ext.base(), 2) {
            assert_eq!(
                f.evaluate(&p).unwrap().is_zero(),
                g.evaluate(&p).unwrap().is_zero()
            );
        }
        assert!(!is_union_of_d_hyperplanes(&f, 2));
        let base_only = poly(ext.ext(), 2, &[(&[1, 0], 1), (&[0, 1], 1)]);
        assert!(matches!(
            NormFormSpec::new(ext, base_only),
            Err(Error::InvalidConstruction(_))
        ));
    }

    #[test]
    fn union_recognizer() {
        let f5 = make_field(5, 1).unwrap();
        let conic = poly(&f5, 2, &[(&[0, 1], 1), (&[2, 0], 4)]);
        assert!(!is_union_of_d_hyperplanes(&conic, 2));
        let f3 = make_field(3, 1).unwrap();
        let x1x2 = poly(&f3, 2, &[(&[1, 1], 1)]);
        assert!(is_union_of_d_hyperplanes(&x1x2, 2));
        assert!(!is_union_of_d_hyperplanes(&x1x2, 1));
        // three lines available inside X1 X2 (X1 - 1)... but only two cover X1 X2
        assert!(!is_union_of_d_hyperplanes(&x1x2, 3));
        assert!(!is_delsarte_maximal(&x1x2, 2));
        assert!(!is_delsarte_maximal(&ReducedPoly::one(&f3, 2), 2));
    }

    #[test]
    fn lemma_bounds() {
        assert_eq!(lemma_mini_bound(3, 2, 2).unwrap(), Q::from_integer(5));
        assert_eq!(irrbutnotabs_bound(5, 2, 2, 2).unwrap(), Q::from_integer(5));
    }
}
