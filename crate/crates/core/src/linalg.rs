//! Dense vectors and matrices over a [`GaloisField`].

use crate::error::{Error, Result};
use crate::field::{FieldElem, GaloisField};

/// Coordinate vector over a small finite field.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct SympVector {
    coords: Vec<FieldElem>,
}

impl SympVector {
    pub fn new(coords: Vec<FieldElem>) -> Self {
        SympVector { coords }
    }

    pub fn zero(dim: usize) -> Self {
        SympVector { coords: vec![FieldElem::ZERO; dim] }
    }

    /// Standard basis vector, 0-based index.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.coords[i] = FieldElem::ONE;
        v
    }

    pub fn from_values(values: &[u8]) -> Self {
        SympVector { coords: values.iter().map(|&x| FieldElem(x)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[FieldElem] {
        &self.coords
    }

    pub fn get(&self, i: usize) -> FieldElem {
        self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, field: &GaloisField, other: &SympVector) -> SympVector {
        SympVector {
            coords: self.coords.iter().zip(&other.coords).map(|(&a, &b)| field.add(a, b)).collect(),
        }
    }

    pub fn scale(&self, field: &GaloisField, c: FieldElem) -> SympVector {
        SympVector { coords: self.coords.iter().map(|&a| field.mul(c, a)).collect() }
    }

    /// Index of this vector in the enumeration order of [`all_vectors`].
    pub fn index(&self, q: u32) -> usize {
        self.coords.iter().rev().fold(0usize, |acc, c| acc * q as usize + c.0 as usize)
    }

    pub fn from_index(mut idx: usize, q: u32, dim: usize) -> SympVector {
        let mut coords = Vec::with_capacity(dim);
        for _ in 0..dim {
            coords.push(FieldElem((idx % q as usize) as u8));
            idx /= q as usize;
        }
        SympVector { coords }
    }

    /// Compact rendering, e.g. `0110` (or `0,1,3,2` when `q > 10`).
    pub fn render(&self) -> String {
        if self.coords.iter().all(|c| c.0 < 10) {
            self.coords.iter().map(|c| char::from(b'0' + c.0)).collect()
        } else {
            self.coords.iter().map(|c| c.0.to_string()).collect::<Vec<_>>().join(",")
        }
    }
}

/// All `q^dim` vectors in index order.
pub fn all_vectors(q: u32, dim: usize) -> impl Iterator<Item = SympVector> {
    let total = (q as usize).pow(dim as u32);
    (0..total).map(move |i| SympVector::from_index(i, q, dim))
}

/// Square matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix {
    dim: usize,
    entries: Vec<FieldElem>,
}

impl Matrix {
    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![FieldElem::ZERO; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = FieldElem::ONE;
        }
        Matrix { dim, entries }
    }

    pub fn zero(dim: usize) -> Self {
        Matrix { dim, entries: vec![FieldElem::ZERO; dim * dim] }
    }

    /// Builds a matrix from rows; errors unless the rows form a square array.
    pub fn from_rows(rows: Vec<Vec<FieldElem>>) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::InvalidMatrix("matrix is not square".into()));
        }
        Ok(Matrix { dim, entries: rows.into_iter().flatten().collect() })
    }

    /// The matrix whose `j`-th column is `cols[j]`.
    pub fn from_columns(cols: &[SympVector]) -> Result<Self> {
        let dim = cols.len();
        if cols.iter().any(|c| c.dim() != dim) {
            return Err(Error::InvalidMatrix("matrix is not square".into()));
        }
        let mut m = Matrix::zero(dim);
        for (j, c) in cols.iter().enumerate() {
            for i in 0..dim {
                m.entries[i * dim + j] = c.get(i);
            }
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElem {
        self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldElem) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn column(&self, j: usize) -> SympVector {
        SympVector::new((0..self.dim).map(|i| self.get(i, j)).collect())
    }

    pub fn apply(&self, field: &GaloisField, v: &SympVector) -> Result<SympVector> {
        if v.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: v.dim() });
        }
        Ok(SympVector::new(
            (0..self.dim)
                .map(|i| {
                    (0..self.dim).fold(FieldElem::ZERO, |acc, j| {
                        field.add(acc, field.mul(self.get(i, j), v.get(j)))
                    })
                })
                .collect(),
        ))
    }

    /// Matrix product `self * other` (apply `other` first).
    pub fn mul(&self, field: &GaloisField, other: &Matrix) -> Result<Matrix> {
        if other.dim != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: other.dim });
        }
        let n = self.dim;
        let mut out = Matrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = FieldElem::ZERO;
                for k in 0..n {
                    acc = field.add(acc, field.mul(self.get(i, k), other.get(k, j)));
                }
                out.entries[i * n + j] = acc;
            }
        }
        Ok(out)
    }

    pub fn sub(&self, field: &GaloisField, other: &Matrix) -> Matrix {
        Matrix {
            dim: self.dim,
            entries: self.entries.iter().zip(&other.entries).map(|(&a, &b)| field.sub(a, b)).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == Matrix::identity(self.dim)
    }

    /// Rank by Gaussian elimination.
    pub fn rank(&self, field: &GaloisField) -> usize {
        let n = self.dim;
        let mut rows: Vec<Vec<FieldElem>> =
            (0..n).map(|i| self.entries[i * n..(i + 1) * n].to_vec()).collect();
        rank_of_rows(field, &mut rows, n)
    }

    pub fn is_invertible(&self, field: &GaloisField) -> bool {
        self.rank(field) == self.dim
    }

    /// Inverse by Gauss-Jordan elimination; `None` when singular.
    pub fn inverse(&self, field: &GaloisField) -> Option<Matrix> {
        let n = self.dim;
        let mut rows: Vec<Vec<FieldElem>> = (0..n)
            .map(|i| {
                let mut r = self.entries[i * n..(i + 1) * n].to_vec();
                r.extend((0..n).map(|j| if i == j { FieldElem::ONE } else { FieldElem::ZERO }));
                r
            })
            .collect();
        let rank = rank_of_rows(field, &mut rows[..], n);
        if rank < n {
            return None;
        }
        let mut out = Matrix::zero(n);
        for (i, r) in rows.iter().enumerate() {
            for j in 0..n {
                out.entries[i * n + j] = r[n + j];
            }
        }
        Some(out)
    }

    /// Dimension of the fixed space `ker(self - 1)`.
    pub fn fixed_dim(&self, field: &GaloisField) -> usize {
        self.dim - self.sub(field, &Matrix::identity(self.dim)).rank(field)
    }
}

/// Rank of the first `width` columns of `rows`; the rows (including any
/// trailing augmented columns) are reduced in place.
pub fn rank_of_rows(field: &GaloisField, rows: &mut [Vec<FieldElem>], width: usize) -> usize {
    let mut rank = 0;
    let full = rows.first().map_or(width, |r| r.len());
    for col in 0..width {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = field.inv(rows[rank][col]).expect("nonzero pivot");
        for c in 0..full {
            rows[rank][c] = field.mul(inv, rows[rank][c]);
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col];
                for c in 0..full {
                    let t = field.mul(factor, rows[rank][c]);
                    rows[r][c] = field.sub(rows[r][c], t);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Span of `vectors` reduced to echelon form (nonzero rows only).
pub fn echelon_basis(field: &GaloisField, vectors: &[SympVector]) -> Vec<SympVector> {
    let Some(width) = vectors.first().map(|v| v.dim()) else {
        return Vec::new();
    };
    let mut rows: Vec<Vec<FieldElem>> = vectors.iter().map(|v| v.coords().to_vec()).collect();
    let r = rank_of_rows(field, &mut rows, width);
    rows.truncate(r);
    rows.into_iter().map(SympVector::new).collect()
}
