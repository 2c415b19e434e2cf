//! Dense exact linear algebra over [`Scalar`]: reduced row echelon form,
//! rank, null spaces, and subspaces in canonical echelon form.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub type Matrix = Vec<Vec<Scalar>>;

/// Reduce `rows` (each of length `ncols`) to reduced row echelon form in
/// place, dropping zero rows. Returns the pivot columns.
pub fn rref(rows: &mut Matrix, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].inv().expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x = &*x - &(&f * p);
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank(rows: &Matrix, ncols: usize) -> usize {
    let mut m = rows.clone();
    rref(&mut m, ncols).len()
}

/// Basis of `{x : A x = 0}`, one vector per free column, in the canonical
/// form read off the reduced echelon matrix.
pub fn null_space(rows: &Matrix, ncols: usize) -> Matrix {
    let mut m = rows.clone();
    let pivots = rref(&mut m, ncols);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Scalar::zero(); ncols];
        v[free] = Scalar::one();
        for (row, &pc) in m.iter().zip(&pivots) {
            v[pc] = -&row[free];
        }
        basis.push(v);
    }
    basis
}

/// Inverse of a square matrix, `None` when singular.
pub fn inverse(m: &Matrix) -> Option<Matrix> {
    let n = m.len();
    if n == 0 {
        return Some(Vec::new());
    }
    let mut aug: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend(unit_vector(n, i + 1));
            r
        })
        .collect();
    let pivots = rref(&mut aug, 2 * n);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_vec(m: &Matrix, v: &[Scalar]) -> Vec<Scalar> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(Scalar::zero(), |acc, (a, b)| &acc + &(a * b))
        })
        .collect()
}

pub fn transpose(m: &Matrix, ncols: usize) -> Matrix {
    (0..ncols).map(|c| m.iter().map(|r| r[c].clone()).collect()).collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix, b_cols: usize) -> Matrix {
    let bt = transpose(b, b_cols);
    a.iter().map(|row| mat_vec(&bt, row)).collect()
}

/// Linear subspace of `Q(sqrt d)^n`, stored as a reduced echelon basis so
/// that equal subspaces have identical representations.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
}

impl Subspace {
    pub fn span(ambient: usize, vectors: &[Vec<Scalar>]) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(Error::DimensionMismatch {
                expected: ambient,
                found: v.len(),
            });
        }
        let mut basis = vectors.to_vec();
        rref(&mut basis, ambient);
        Ok(Subspace { ambient, basis })
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn whole(ambient: usize) -> Self {
        let basis = (0..ambient).map(|i| unit_vector(ambient, i + 1)).collect();
        Subspace { ambient, basis }
    }

    /// Span of the 1-based coordinate vectors `e_i`.
    pub fn coordinate(ambient: usize, indices: &[usize]) -> Result<Self> {
        let vs: Vec<_> = indices.iter().map(|&i| unit_vector(ambient, i)).collect();
        Subspace::span(ambient, &vs)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut m = self.basis.clone();
        m.push(v.to_vec());
        rank(&m, self.ambient) == self.dim()
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        let mut basis = vs;
        rref(&mut basis, self.ambient);
        Subspace {
            ambient: self.ambient,
            basis,
        }
    }

    /// `self (+) other` is the whole ambient space.
    pub fn is_complement_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient
            && self.dim() + other.dim() == self.ambient
            && self.sum(other).dim() == self.ambient
    }
}

pub fn unit_vector(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i - 1] = Scalar::one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        rows.iter().map(|r| r.iter().map(|&x| Scalar::int(x)).collect()).collect()
    }

    #[test]
    fn null_space_of_rank_one() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(rank(&a, 3), 1);
        let ns = null_space(&a, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(mat_vec(&a, v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn echelon_form_is_canonical() {
        let s1 = Subspace::span(3, &m(&[&[1, 1, 0], &[0, 1, 1]])).unwrap();
        let s2 = Subspace::span(3, &m(&[&[1, 2, 1], &[1, 0, -1]])).unwrap();
        assert_eq!(s1, s2);
        assert!(s1.contains(&m(&[&[2, 3, 1]])[0]));
        assert!(!s1.contains(&m(&[&[0, 0, 1]])[0]));
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = inverse(&a).unwrap();
        assert_eq!(mat_mul(&a, &inv, 2), m(&[&[1, 0], &[0, 1]]));
        assert!(inverse(&m(&[&[1, 2], &[2, 4]])).is_none());
    }

    #[test]
    fn complements() {
        let a = Subspace::coordinate(4, &[1, 2]).unwrap();
        let b = Subspace::coordinate(4, &[3, 4]).unwrap();
        let c = Subspace::coordinate(4, &[2, 3]).unwrap();
        assert!(a.is_complement_of(&b));
        assert!(!a.is_complement_of(&c));
        assert_eq!(Subspace::whole(4).dim(), 4);
    }
}
