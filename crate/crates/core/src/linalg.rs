//! Gaussian elimination over GF(q).

use crate::gf::{FieldElement, FieldSpec};

/// Reduced row echelon form of `rows`; zero rows are dropped, so the result
/// is a basis of the row space with leading entries equal to 1.
pub fn row_echelon(field: &FieldSpec, rows: &[Vec<FieldElement>]) -> Vec<Vec<FieldElement>> {
    let mut m: Vec<Vec<FieldElement>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = field.inv(m[rank][col]).expect("pivot is nonzero");
        for x in m[rank].iter_mut() {
            *x = field.mul(*x, inv);
        }
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let factor = row[col];
            for (x, &p) in row.iter_mut().zip(&pivot_row) {
                *x = field.sub(*x, field.mul(factor, p));
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    m.truncate(rank);
    m
}

pub fn rank(field: &FieldSpec, rows: &[Vec<FieldElement>]) -> usize {
    row_echelon(field, rows).len()
}

pub fn is_independent(field: &FieldSpec, rows: &[Vec<FieldElement>]) -> bool {
    rank(field, rows) == rows.len()
}

/// Nonzero vectors of length `len` whose first nonzero entry is 1, ordered by
/// pivot position and then lexicographically on the entries after the pivot.
/// One representative per line through the origin.
pub fn normalized_vectors(field: &FieldSpec, len: usize) -> Vec<Vec<FieldElement>> {
    let q = field.q() as usize;
    let mut out = Vec::new();
    for pivot in 0..len {
        let free = len - pivot - 1;
        for idx in 0..q.pow(free as u32) {
            let mut v = vec![FieldElement::ZERO; len];
            v[pivot] = FieldElement::ONE;
            let mut rest = idx;
            for slot in v[pivot + 1..].iter_mut().rev() {
                *slot = FieldElement((rest % q) as u32);
                rest /= q;
            }
            out.push(v);
        }
    }
    out
}
