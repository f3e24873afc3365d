//! Dense matrices over F_q as row vectors.

use crate::error::{Error, Result};
use crate::gf::{Field, FieldElement};

pub type Matrix = Vec<Vec<FieldElement>>;

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| u32::from(i == j)).collect())
        .collect()
}

pub fn transpose(a: &[Vec<FieldElement>]) -> Matrix {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols).map(|j| a.iter().map(|r| r[j]).collect()).collect()
}

pub fn mat_mul(f: &Field, a: &[Vec<FieldElement>], b: &[Vec<FieldElement>]) -> Matrix {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            let mut out = vec![0; cols];
            for (k, &x) in row.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                for (o, &y) in out.iter_mut().zip(&b[k]) {
                    *o = f.add(*o, f.mul(x, y));
                }
            }
            out
        })
        .collect()
}

/// Row vector times matrix.
pub fn vec_mul(f: &Field, v: &[FieldElement], a: &[Vec<FieldElement>]) -> Vec<FieldElement> {
    let cols = a.first().map_or(0, Vec::len);
    let mut out = vec![0; cols];
    for (k, &x) in v.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (o, &y) in out.iter_mut().zip(&a[k]) {
            *o = f.add(*o, f.mul(x, y));
        }
    }
    out
}

pub fn dot(f: &Field, a: &[FieldElement], b: &[FieldElement]) -> FieldElement {
    a.iter().zip(b).fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
}

/// `a + c*b`, in place.
pub fn axpy(f: &Field, a: &mut [FieldElement], c: FieldElement, b: &[FieldElement]) {
    if c == 0 {
        return;
    }
    for (x, &y) in a.iter_mut().zip(b) {
        *x = f.add(*x, f.mul(c, y));
    }
}

/// Reduced row echelon form; returns the nonzero rows and their pivot columns.
pub fn rref(f: &Field, rows: &[Vec<FieldElement>]) -> (Matrix, Vec<usize>) {
    let mut m: Matrix = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, pr);
        let inv = f.inv(m[r][c]).expect("pivot is nonzero");
        for x in m[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let factor = f.neg(row[c]);
                axpy(f, row, factor, &pivot_row);
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(f: &Field, rows: &[Vec<FieldElement>]) -> usize {
    rref(f, rows).1.len()
}

pub fn inverse(f: &Field, a: &[Vec<FieldElement>]) -> Result<Matrix> {
    let n = a.len();
    if a.iter().any(|r| r.len() != n) {
        return Err(Error::LengthMismatch { expected: n, got: a.first().map_or(0, Vec::len) });
    }
    let aug: Matrix = a
        .iter()
        .zip(identity(n))
        .map(|(r, e)| r.iter().copied().chain(e).collect())
        .collect();
    let (red, pivots) = rref(f, &aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return Err(Error::SingularMatrix);
    }
    Ok(red.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn determinant(f: &Field, a: &[Vec<FieldElement>]) -> FieldElement {
    let n = a.len();
    let mut m = a.to_vec();
    let mut det = 1;
    for c in 0..n {
        let Some(pr) = (c..n).find(|&i| m[i][c] != 0) else {
            return 0;
        };
        if pr != c {
            m.swap(pr, c);
            det = f.neg(det);
        }
        det = f.mul(det, m[c][c]);
        let inv = f.inv(m[c][c]).expect("pivot is nonzero");
        let pivot_row = m[c].clone();
        for row in m.iter_mut().skip(c + 1) {
            if row[c] != 0 {
                let factor = f.neg(f.mul(row[c], inv));
                axpy(f, row, factor, &pivot_row);
            }
        }
    }
    det
}

/// Basis of `{x : a x^T = 0}` (right null space), one vector per free column.
pub fn null_space(f: &Field, a: &[Vec<FieldElement>], cols: usize) -> Matrix {
    let (red, pivots) = rref(f, a);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0; cols];
            v[fc] = 1;
            for (row, &pc) in red.iter().zip(&pivots) {
                v[pc] = f.neg(row[fc]);
            }
            v
        })
        .collect()
}
