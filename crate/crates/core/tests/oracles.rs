//! Cross-checks against deliberately naive reimplementations.

use std::collections::{BTreeMap, HashSet};

use grm_core::constructions::{arrangement_zeros, AffineGeometry, Arrangement};
use grm_core::grm::{
    affine_dimension, count_zeros_affine, min_distance_affine, second_weight_affine,
};
use grm_core::oracle::{enum_spectrum, homogeneous_monomials, GridPoint, OracleConfig};
use grm_core::pgrm::{proj_dimension, proj_min_distance, proj_points};
use grm_core::poly::affine_points;
use grm_core::{make_field, FieldElement, FieldSpec, HomogeneousPoly, ReducedPoly};
use itertools::Itertools;

/// Product of two field elements as polynomials over GF(p), reduced by the
/// field's modulus digit by digit.
fn schoolbook_mul(f: &FieldSpec, a: FieldElement, b: FieldElement) -> FieldElement {
    let p = f.p();
    let m = f.m() as usize;
    let (da, db) = (f.digits(a), f.digits(b));
    let mut prod = vec![0u32; 2 * m];
    for i in 0..m {
        for j in 0..m {
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        }
    }
    let modulus = f.modulus();
    for k in (m..2 * m).rev() {
        let c = prod[k];
        if c == 0 {
            continue;
        }
        // subtract c * x^(k-m) * modulus, modulus monic of degree m
        for (i, &mi) in modulus.iter().enumerate() {
            prod[k - m + i] = (prod[k - m + i] + p * p - c * mi % p) % p;
        }
    }
    f.from_digits(&prod[..m]).unwrap()
}

#[test]
fn multiplication_matches_schoolbook() {
    for (p, m) in [
        (2, 2),
        (2, 3),
        (2, 4),
        (2, 5),
        (3, 2),
        (3, 3),
        (5, 2),
        (7, 2),
    ] {
        let f = make_field(p, m).unwrap();
        for a in f.elements() {
            for b in f.elements() {
                assert_eq!(
                    f.mul(a, b),
                    schoolbook_mul(&f, a, b),
                    "GF({p}^{m}) {a:?}*{b:?}"
                );
            }
        }
    }
}

fn cfg() -> OracleConfig {
    OracleConfig {
        workers: 2,
        ..OracleConfig::default()
    }
}

fn histogram(words: impl Iterator<Item = Vec<FieldElement>>) -> (usize, BTreeMap<u64, u128>) {
    let distinct: HashSet<Vec<FieldElement>> = words.collect();
    let mut h = BTreeMap::new();
    for w in &distinct {
        *h.entry(w.iter().filter(|x| !x.is_zero()).count() as u64)
            .or_insert(0) += 1;
    }
    (distinct.len(), h)
}

/// Every polynomial with total degree <= d and arbitrary partial degrees,
/// deduplicated by evaluation vector.
fn naive_affine(q: u64, n: usize, d: u32) -> (usize, BTreeMap<u64, u128>) {
    let f = FieldSpec::of_order(q).unwrap();
    let monos: Vec<Vec<u32>> = (0..n)
        .map(|_| 0..=d)
        .multi_cartesian_product()
        .filter(|e| e.iter().sum::<u32>() <= d)
        .collect();
    let pts = affine_points(&f, n);
    let words = (0..monos.len())
        .map(|_| f.elements())
        .multi_cartesian_product()
        .map(|coeffs| {
            pts.iter()
                .map(|pt| {
                    monos
                        .iter()
                        .zip(&coeffs)
                        .fold(FieldElement::ZERO, |acc, (e, &c)| {
                            let m = e
                                .iter()
                                .zip(pt)
                                .fold(c, |m, (&k, &x)| f.mul(m, f.pow(x, k as u64)));
                            f.add(acc, m)
                        })
                })
                .collect()
        });
    histogram(words)
}

fn naive_projective(q: u64, n: usize, d: u32) -> (usize, BTreeMap<u64, u128>) {
    let f = FieldSpec::of_order(q).unwrap();
    let monos = homogeneous_monomials(n + 1, d);
    let pts = proj_points(&f, n);
    let words = (0..monos.len())
        .map(|_| f.elements())
        .multi_cartesian_product()
        .map(|coeffs| {
            let h = HomogeneousPoly::new(&f, n + 1, d, monos.iter().cloned().zip(coeffs)).unwrap();
            pts.iter().map(|p| h.evaluate(&p.coords).unwrap()).collect()
        });
    histogram(words)
}

#[test]
fn affine_spectra_match_naive_dedup() {
    for (q, n, d) in [(2, 2, 1), (2, 3, 2), (3, 2, 2), (3, 2, 1), (4, 2, 1)] {
        let (distinct, naive) = naive_affine(q, n, d);
        let fast = enum_spectrum(&GridPoint::affine(q, n as u64, d as u64), &cfg()).unwrap();
        assert_eq!(fast.counts, naive, "({q},{n},{d})");
        assert_eq!(
            distinct as u128,
            (q as u128).pow(affine_dimension(q, n as u64, d as u64).unwrap() as u32)
        );
        let positive: Vec<u64> = naive.keys().copied().filter(|&w| w > 0).collect();
        assert_eq!(
            positive[0],
            min_distance_affine(q, n as u64, d as u64).unwrap()
        );
        assert_eq!(
            positive[1],
            second_weight_affine(q, n as u64, d as u64).unwrap()
        );
    }
}

#[test]
fn projective_spectra_match_naive_dedup() {
    for (q, n, d) in [
        (2, 1, 1),
        (2, 2, 2),
        (2, 2, 3),
        (3, 1, 2),
        (4, 1, 2),
        (3, 2, 2),
    ] {
        let (distinct, naive) = naive_projective(q, n, d);
        let fast = enum_spectrum(&GridPoint::projective(q, n as u64, d as u64), &cfg()).unwrap();
        assert_eq!(fast.counts, naive, "({q},{n},{d})");
        assert_eq!(
            distinct as u128,
            (q as u128).pow(proj_dimension(q, n as u64, d as u64).unwrap() as u32)
        );
        let w1 = naive.keys().copied().find(|&w| w > 0).unwrap();
        assert_eq!(w1, proj_min_distance(q, n as u64, d as u64).unwrap());
    }
}

#[test]
fn arrangement_counts_match_point_membership() {
    for (q, n, sizes) in [
        (3u64, 2usize, vec![1usize, 1]),
        (4, 2, vec![2, 1]),
        (5, 3, vec![2, 2, 1]),
        (7, 2, vec![3, 2]),
        (8, 3, vec![3, 1, 1]),
    ] {
        let f = FieldSpec::of_order(q).unwrap();
        let arr = Arrangement::standard(&f, n, &sizes).unwrap();
        // a point is a zero iff it lies on one of the listed hyperplanes
        let on_some = affine_points(&f, n)
            .iter()
            .filter(|pt| {
                arr.blocks().iter().any(|b| {
                    let v = b
                        .direction
                        .iter()
                        .zip(pt.iter())
                        .fold(FieldElement::ZERO, |acc, (&c, &x)| f.add(acc, f.mul(c, x)));
                    b.shifts.contains(&v)
                })
            })
            .count() as u64;
        assert_eq!(on_some, arr.predicted_zeros());
        assert_eq!(on_some, arrangement_zeros(q, n as u64, &sizes).unwrap());
        assert_eq!(
            on_some,
            count_zeros_affine(&grm_core::constructions::arrangement_poly(&arr))
        );
    }
}

#[test]
fn zero_sets_agree_with_evaluation() {
    let f = FieldSpec::of_order(5).unwrap();
    let geo = AffineGeometry::new(&f, 2);
    let p = ReducedPoly::reduce(
        &f,
        2,
        [
            (vec![2, 0], FieldElement(1)),
            (vec![0, 1], FieldElement(4)),
            (vec![0, 0], FieldElement(1)),
        ],
    )
    .unwrap();
    let z = geo.zero_set(&p);
    assert_eq!(z.count_ones(..) as u64, count_zeros_affine(&p));
    for (i, pt) in geo.points().iter().enumerate() {
        assert_eq!(z.contains(i), p.evaluate(pt).unwrap().is_zero());
    }
}
