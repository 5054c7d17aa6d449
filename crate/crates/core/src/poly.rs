//! Sparse multivariate polynomials over GF(q).
//!
//! [`ReducedPoly`] is the normal form of a polynomial function on GF(q)^n:
//! every partial degree is at most q-1, so two reduced polynomials are equal
//! as term maps iff they agree at every point. [`HomogeneousPoly`] keeps its
//! exponents as written, since reduction would break homogeneity.
//!
//! Terms are kept in graded-lex order (total degree, then exponent vector).

use std::cmp::Ordering;
use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldSpec};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    fn times(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn eval(&self, field: &FieldSpec, point: &[FieldElement]) -> FieldElement {
        self.0
            .iter()
            .zip(point)
            .fold(FieldElement::ONE, |acc, (&e, &x)| {
                field.mul(acc, field.pow(x, e as u64))
            })
    }
}

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

/// `e` rewritten modulo `X^q - X`: 0 stays 0, e >= 1 lands in [1, q-1].
pub fn reduce_exponent(e: u32, q: u32) -> u32 {
    if e == 0 {
        0
    } else {
        (e - 1) % (q - 1) + 1
    }
}

type Terms = BTreeMap<Monomial, FieldElement>;

fn accumulate(field: &FieldSpec, terms: &mut Terms, mono: Monomial, c: FieldElement) {
    if c.is_zero() {
        return;
    }
    match terms.entry(mono) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            let s = field.add(*o.get(), c);
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

fn check_point(nvars: usize, point: &[FieldElement]) -> Result<()> {
    if point.len() != nvars {
        return Err(Error::DimensionMismatch {
            expected: nvars,
            got: point.len(),
        });
    }
    Ok(())
}

fn eval_terms(field: &FieldSpec, terms: &Terms, point: &[FieldElement]) -> FieldElement {
    terms.iter().fold(FieldElement::ZERO, |acc, (m, &c)| {
        field.add(acc, field.mul(c, m.eval(field, point)))
    })
}

/// All points of GF(q)^n, lexicographic with the first coordinate most
/// significant.
pub fn affine_points(field: &FieldSpec, n: usize) -> Vec<Vec<FieldElement>> {
    let q = field.q() as usize;
    let total = q.pow(n as u32);
    (0..total)
        .map(|mut idx| {
            let mut pt = vec![FieldElement::ZERO; n];
            for slot in pt.iter_mut().rev() {
                *slot = FieldElement((idx % q) as u32);
                idx /= q;
            }
            pt
        })
        .collect()
}

/// Position of `point` in [`affine_points`] order.
pub fn affine_index(q: u32, point: &[FieldElement]) -> usize {
    point
        .iter()
        .fold(0usize, |acc, x| acc * q as usize + x.0 as usize)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedPoly {
    n: usize,
    field: FieldSpec,
    terms: Terms,
}

impl ReducedPoly {
    pub fn zero(field: &FieldSpec, n: usize) -> Self {
        Self {
            n,
            field: field.clone(),
            terms: Terms::new(),
        }
    }

    pub fn constant(field: &FieldSpec, n: usize, c: FieldElement) -> Self {
        let mut p = Self::zero(field, n);
        accumulate(field, &mut p.terms, Monomial::one(n), c);
        p
    }

    pub fn one(field: &FieldSpec, n: usize) -> Self {
        Self::constant(field, n, FieldElement::ONE)
    }

    /// The variable `X_{i+1}` (0-based index `i`).
    pub fn var(field: &FieldSpec, n: usize, i: usize) -> Result<Self> {
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i, nvars: n });
        }
        let mut p = Self::zero(field, n);
        p.terms.insert(Monomial::var(n, i), FieldElement::ONE);
        Ok(p)
    }

    /// Reduces an arbitrary term list modulo `X_i^q - X_i`.
    pub fn reduce<I>(field: &FieldSpec, n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, FieldElement)>,
    {
        let q = field.q();
        let mut out = Terms::new();
        for (exps, c) in terms {
            if exps.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: exps.len(),
                });
            }
            if !field.contains(c) {
                return Err(Error::InvalidElement { code: c.0, q });
            }
            let mono = Monomial(exps.iter().map(|&e| reduce_exponent(e, q)).collect());
            accumulate(field, &mut out, mono, c);
        }
        Ok(Self {
            n,
            field: field.clone(),
            terms: out,
        })
    }

    pub fn from_affine_form(form: &AffineForm, field: &FieldSpec) -> Self {
        let n = form.coefficients.len();
        let mut p = Self::constant(field, n, form.constant);
        for (i, &c) in form.coefficients.iter().enumerate() {
            accumulate(field, &mut p.terms, Monomial::var(n, i), c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, FieldElement)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.n != other.n || self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            accumulate(&self.field, &mut out.terms, m.clone(), c);
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        self.scale(self.field.neg(FieldElement::ONE))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: FieldElement) -> Self {
        let mut out = Self::zero(&self.field, self.n);
        for (m, &x) in &self.terms {
            accumulate(&self.field, &mut out.terms, m.clone(), self.field.mul(c, x));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let q = self.field.q();
        let mut out = Terms::new();
        for (ma, &ca) in &self.terms {
            for (mb, &cb) in &other.terms {
                let mono = Monomial(
                    ma.0.iter()
                        .zip(&mb.0)
                        .map(|(x, y)| reduce_exponent(x + y, q))
                        .collect(),
                );
                accumulate(&self.field, &mut out, mono, self.field.mul(ca, cb));
            }
        }
        Ok(Self {
            n: self.n,
            field: self.field.clone(),
            terms: out,
        })
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Self::one(&self.field, self.n);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same ring");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same ring");
            }
        }
        acc
    }

    pub fn evaluate(&self, point: &[FieldElement]) -> Result<FieldElement> {
        check_point(self.n, point)?;
        Ok(eval_terms(&self.field, &self.terms, point))
    }

    /// Values at every point of GF(q)^n in [`affine_points`] order.
    pub fn evaluations(&self) -> Vec<FieldElement> {
        affine_points(&self.field, self.n)
            .iter()
            .map(|pt| eval_terms(&self.field, &self.terms, pt))
            .collect()
    }

    /// Adds `X_0` (index 0) as homogenizing variable; `X_i` moves to index i.
    pub fn homogenize(&self, d: u32) -> Result<HomogeneousPoly> {
        let actual = self.total_degree().unwrap_or(0);
        if actual > d {
            return Err(Error::DegreeTooSmall {
                requested: d,
                actual,
            });
        }
        let mut terms = Terms::new();
        for (m, &c) in &self.terms {
            let mut e = Vec::with_capacity(self.n + 1);
            e.push(d - m.degree());
            e.extend_from_slice(&m.0);
            terms.insert(Monomial(e), c);
        }
        Ok(HomogeneousPoly {
            nvars: self.n + 1,
            d,
            field: self.field.clone(),
            terms,
        })
    }

    pub fn to_json(&self) -> PolyJson {
        PolyJson::from_terms(self.n, self.field.q(), None, &self.terms)
    }

    pub fn from_json(json: &PolyJson) -> Result<Self> {
        let field = FieldSpec::of_order(json.q as u64)?;
        Self::reduce(&field, json.n, json.raw_terms(&field)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogeneousPoly {
    nvars: usize,
    d: u32,
    field: FieldSpec,
    terms: Terms,
}

impl HomogeneousPoly {
    pub fn zero(field: &FieldSpec, nvars: usize, d: u32) -> Self {
        Self {
            nvars,
            d,
            field: field.clone(),
            terms: Terms::new(),
        }
    }

    /// Builds a degree-d form; every term must have total degree d.
    pub fn new<I>(field: &FieldSpec, nvars: usize, d: u32, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, FieldElement)>,
    {
        let mut out = Self::zero(field, nvars, d);
        for (exps, c) in terms {
            if exps.len() != nvars {
                return Err(Error::DimensionMismatch {
                    expected: nvars,
                    got: exps.len(),
                });
            }
            if !field.contains(c) {
                return Err(Error::InvalidElement {
                    code: c.0,
                    q: field.q(),
                });
            }
            let mono = Monomial(exps);
            if mono.degree() != d {
                return Err(Error::MalformedPoly(format!(
                    "term {:?} is not of degree {d}",
                    mono.0
                )));
            }
            accumulate(field, &mut out.terms, mono, c);
        }
        Ok(out)
    }

    pub fn var(field: &FieldSpec, nvars: usize, i: usize) -> Result<Self> {
        if i >= nvars {
            return Err(Error::IndexOutOfRange { index: i, nvars });
        }
        let mut p = Self::zero(field, nvars, 1);
        p.terms.insert(Monomial::var(nvars, i), FieldElement::ONE);
        Ok(p)
    }

    /// `sum c_i X_i`.
    pub fn linear(field: &FieldSpec, coeffs: &[FieldElement]) -> Self {
        let nvars = coeffs.len();
        let mut p = Self::zero(field, nvars, 1);
        for (i, &c) in coeffs.iter().enumerate() {
            accumulate(field, &mut p.terms, Monomial::var(nvars, i), c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, FieldElement)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars || self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        if self.d != other.d {
            return Err(Error::MalformedPoly(format!(
                "cannot add forms of degrees {} and {}",
                self.d, other.d
            )));
        }
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            accumulate(&self.field, &mut out.terms, m.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: FieldElement) -> Self {
        let mut out = Self::zero(&self.field, self.nvars, self.d);
        for (m, &x) in &self.terms {
            accumulate(&self.field, &mut out.terms, m.clone(), self.field.mul(c, x));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut out = Self::zero(&self.field, self.nvars, self.d + other.d);
        for (ma, &ca) in &self.terms {
            for (mb, &cb) in &other.terms {
                accumulate(
                    &self.field,
                    &mut out.terms,
                    ma.times(mb),
                    self.field.mul(ca, cb),
                );
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::zero(&self.field, self.nvars, 0);
        acc.terms
            .insert(Monomial::one(self.nvars), FieldElement::ONE);
        for _ in 0..e {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    pub fn evaluate(&self, point: &[FieldElement]) -> Result<FieldElement> {
        check_point(self.nvars, point)?;
        Ok(eval_terms(&self.field, &self.terms, point))
    }

    /// Sets the variable `chart` to 1 and reduces; the remaining variables
    /// keep their relative order.
    pub fn dehomogenize(&self, chart: usize) -> Result<ReducedPoly> {
        if chart >= self.nvars {
            return Err(Error::IndexOutOfRange {
                index: chart,
                nvars: self.nvars,
            });
        }
        let raw = self.terms.iter().map(|(m, &c)| {
            let e: Vec<u32> =
                m.0.iter()
                    .enumerate()
                    .filter(|&(i, _)| i != chart)
                    .map(|(_, &x)| x)
                    .collect();
            (e, c)
        });
        ReducedPoly::reduce(&self.field, self.nvars - 1, raw)
    }

    /// Substitutes `X_j = sum_k m[j][k] Y_k`; `m` is `nvars x nvars`.
    pub fn substitute_linear(&self, m: &[Vec<FieldElement>]) -> Result<Self> {
        if m.len() != self.nvars || m.iter().any(|row| row.len() != self.nvars) {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                got: m.len(),
            });
        }
        let images: Vec<HomogeneousPoly> =
            m.iter().map(|row| Self::linear(&self.field, row)).collect();
        let mut out = Self::zero(&self.field, self.nvars, self.d);
        for (mono, &c) in &self.terms {
            let mut prod = Self::zero(&self.field, self.nvars, 0);
            prod.terms.insert(Monomial::one(self.nvars), c);
            for (j, &e) in mono.0.iter().enumerate() {
                for _ in 0..e {
                    prod = prod.mul(&images[j])?;
                }
            }
            out = out.add(&prod)?;
        }
        Ok(out)
    }

    pub fn to_json(&self) -> PolyJson {
        PolyJson::from_terms(self.nvars, self.field.q(), Some(self.d), &self.terms)
    }

    /// Reads a form whose `n` is the variable count. `d` may be omitted when
    /// there is at least one term.
    pub fn from_json(json: &PolyJson) -> Result<Self> {
        let field = FieldSpec::of_order(json.q as u64)?;
        let d = match (json.d, json.terms.first()) {
            (Some(d), _) => d,
            (None, Some(t)) => t.e.iter().sum(),
            (None, None) => {
                return Err(Error::MalformedPoly(
                    "zero form needs an explicit degree".into(),
                ))
            }
        };
        Self::new(&field, json.n, d, json.raw_terms(&field)?)
    }
}

/// `sum coefficients_i X_i + constant`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AffineForm {
    pub coefficients: Vec<FieldElement>,
    pub constant: FieldElement,
}

impl AffineForm {
    pub fn new(coefficients: Vec<FieldElement>, constant: FieldElement) -> Self {
        Self {
            coefficients,
            constant,
        }
    }

    pub fn linear(coefficients: Vec<FieldElement>) -> Self {
        Self::new(coefficients, FieldElement::ZERO)
    }

    pub fn evaluate(&self, field: &FieldSpec, point: &[FieldElement]) -> FieldElement {
        self.coefficients
            .iter()
            .zip(point)
            .fold(self.constant, |acc, (&c, &x)| {
                field.add(acc, field.mul(c, x))
            })
    }

    pub fn is_constant(&self) -> bool {
        self.coefficients.iter().all(|c| c.is_zero())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub e: Vec<u32>,
    pub c: u32,
}

/// Wire form of a polynomial. For forms, `n` is the number of variables and
/// `d` the degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub n: usize,
    pub q: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<u32>,
    pub terms: Vec<TermJson>,
}

impl PolyJson {
    fn from_terms(n: usize, q: u32, d: Option<u32>, terms: &Terms) -> Self {
        Self {
            n,
            q,
            d,
            terms: terms
                .iter()
                .map(|(m, c)| TermJson {
                    e: m.0.clone(),
                    c: c.0,
                })
                .collect(),
        }
    }

    fn raw_terms(&self, field: &FieldSpec) -> Result<Vec<(Vec<u32>, FieldElement)>> {
        self.terms
            .iter()
            .map(|t| Ok((t.e.clone(), field.element(t.c)?)))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;

    fn fe(c: u32) -> FieldElement {
        FieldElement(c)
    }

    fn gf3() -> FieldSpec {
        make_field(3, 1).unwrap()
    }

    #[test]
    fn evaluate_examples() {
        let f = gf3();
        let x1x2 = ReducedPoly::reduce(&f, 2, [(vec![1, 1], fe(1))]).unwrap();
        assert_eq!(x1x2.evaluate(&[fe(2), fe(2)]).unwrap(), fe(1));
        assert_eq!(
            ReducedPoly::zero(&f, 2).evaluate(&[fe(1), fe(2)]).unwrap(),
            fe(0)
        );
        let g = ReducedPoly::reduce(&f, 1, [(vec![0], fe(1)), (vec![2], fe(2))]).unwrap();
        let vals: Vec<_> = (0..3).map(|x| g.evaluate(&[fe(x)]).unwrap()).collect();
        assert_eq!(vals, vec![fe(1), fe(0), fe(0)]);
        assert!(matches!(
            x1x2.evaluate(&[fe(1)]),
            Err(Error::DimensionMismatch {
                expected: 2,
                got: 1
            })
        ));
    }

    #[test]
    fn reduce_examples() {
        let f = gf3();
        let r = |e: u32| ReducedPoly::reduce(&f, 1, [(vec![e], fe(1))]).unwrap();
        assert_eq!(r(3), r(1));
        assert_eq!(r(2).terms().next().unwrap().0 .0, vec![2]);
        assert_eq!(r(4), r(2));
        for x in 0..3 {
            let x4 = f.pow(fe(x), 4);
            assert_eq!(r(4).evaluate(&[fe(x)]).unwrap(), x4);
        }
    }

    #[test]
    fn ring_examples() {
        let f = gf3();
        let x = ReducedPoly::var(&f, 1, 0).unwrap();
        let c = |k: u32| ReducedPoly::constant(&f, 1, fe(k));
        let prod = x.sub(&c(1)).unwrap().mul(&x.sub(&c(2)).unwrap()).unwrap();
        let expected = ReducedPoly::reduce(&f, 1, [(vec![2], fe(1)), (vec![0], fe(2))]).unwrap();
        assert_eq!(prod, expected);
        assert_eq!(prod.mul(&c(1)).unwrap(), prod);
        assert!(prod.add(&prod.neg()).unwrap().is_zero());
        let other = ReducedPoly::zero(&make_field(5, 1).unwrap(), 1);
        assert_eq!(prod.add(&other), Err(Error::FieldMismatch));
    }

    #[test]
    fn degrees() {
        let f = gf3();
        assert_eq!(ReducedPoly::one(&f, 2).total_degree(), Some(0));
        let p = ReducedPoly::reduce(&f, 2, [(vec![2, 1], fe(1))]).unwrap();
        assert_eq!(p.total_degree(), Some(3));
        assert_eq!(ReducedPoly::zero(&f, 2).total_degree(), None);
    }

    #[test]
    fn homogenize_examples() {
        let f = make_field(2, 1).unwrap();
        let p = ReducedPoly::reduce(&f, 1, [(vec![1], fe(1)), (vec![0], fe(1))]).unwrap();
        let h = p.homogenize(1).unwrap();
        let expected =
            HomogeneousPoly::new(&f, 2, 1, [(vec![0, 1], fe(1)), (vec![1, 0], fe(1))]).unwrap();
        assert_eq!(h, expected);
        let x1x2 = ReducedPoly::reduce(&f, 2, [(vec![1, 1], fe(1))]).unwrap();
        let h = x1x2.homogenize(3).unwrap();
        assert_eq!(h.terms().next().unwrap().0 .0, vec![1, 1, 1]);
        assert_eq!(h.dehomogenize(0).unwrap(), x1x2);
        assert!(matches!(
            x1x2.homogenize(1),
            Err(Error::DegreeTooSmall { .. })
        ));
    }

    #[test]
    fn dehomogenize_examples() {
        let f = gf3();
        let x0x1 = HomogeneousPoly::new(&f, 2, 2, [(vec![1, 1], fe(1))]).unwrap();
        assert_eq!(
            x0x1.dehomogenize(0).unwrap(),
            ReducedPoly::var(&f, 1, 0).unwrap()
        );
        let x0d = HomogeneousPoly::new(&f, 2, 4, [(vec![4, 0], fe(1))]).unwrap();
        assert_eq!(x0d.dehomogenize(0).unwrap(), ReducedPoly::one(&f, 1));
        let big = HomogeneousPoly::new(&f, 2, 5, [(vec![1, 4], fe(1))]).unwrap();
        let x1sq = ReducedPoly::reduce(&f, 1, [(vec![2], fe(1))]).unwrap();
        assert_eq!(big.dehomogenize(0).unwrap(), x1sq);
        assert!(matches!(
            big.dehomogenize(2),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn substitution_matches_pointwise() {
        let f = gf3();
        let form = HomogeneousPoly::new(&f, 3, 2, [(vec![1, 0, 1], fe(1)), (vec![0, 2, 0], fe(2))])
            .unwrap();
        let m = vec![
            vec![fe(1), fe(2), fe(0)],
            vec![fe(0), fe(1), fe(1)],
            vec![fe(2), fe(0), fe(1)],
        ];
        let sub = form.substitute_linear(&m).unwrap();
        for y in affine_points(&f, 3) {
            let x: Vec<_> = m
                .iter()
                .map(|row| AffineForm::linear(row.clone()).evaluate(&f, &y))
                .collect();
            assert_eq!(sub.evaluate(&y).unwrap(), form.evaluate(&x).unwrap());
        }
    }

    #[test]
    fn json_roundtrip_in_graded_lex_order() {
        let f = gf3();
        let p = ReducedPoly::reduce(
            &f,
            2,
            [
                (vec![2, 0], fe(1)),
                (vec![0, 1], fe(2)),
                (vec![0, 0], fe(1)),
            ],
        )
        .unwrap();
        let j = p.to_json();
        let degrees: Vec<u32> = j.terms.iter().map(|t| t.e.iter().sum()).collect();
        assert_eq!(degrees, vec![0, 1, 2]);
        let text = serde_json::to_string(&j).unwrap();
        assert_eq!(
            text,
            r#"{"n":2,"q":3,"terms":[{"e":[0,0],"c":1},{"e":[0,1],"c":2},{"e":[2,0],"c":1}]}"#
        );
        assert_eq!(
            ReducedPoly::from_json(&serde_json::from_str(&text).unwrap()).unwrap(),
            p
        );
        let h = p.homogenize(2).unwrap();
        assert_eq!(HomogeneousPoly::from_json(&h.to_json()).unwrap(), h);
    }

    #[test]
    fn point_order() {
        let f = make_field(2, 1).unwrap();
        let pts = affine_points(&f, 2);
        assert_eq!(
            pts,
            vec![
                vec![fe(0), fe(0)],
                vec![fe(0), fe(1)],
                vec![fe(1), fe(0)],
                vec![fe(1), fe(1)]
            ]
        );
        for (i, p) in pts.iter().enumerate() {
            assert_eq!(affine_index(2, p), i);
        }
    }
}
