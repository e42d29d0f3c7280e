//! Subspaces of `K^n` kept in reduced row echelon form.

use super::cyclotomic::CyclotomicScalar as Scalar;
use super::matrix::{is_zero_vector, ExactMatrix, Vector};

/// A subspace of `K^ambient` stored as RREF rows sorted by ascending pivot column.
#[derive(Clone, Debug)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        let mut s = Self::zero(ambient);
        for i in 0..ambient {
            s.insert(super::matrix::unit_vector(ambient, i));
        }
        s
    }

    pub fn span<I: IntoIterator<Item = Vector>>(ambient: usize, vectors: I) -> Self {
        let mut s = Self::zero(ambient);
        for v in vectors {
            if s.dim() == ambient {
                break;
            }
            s.insert(v);
        }
        s
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// `v` minus its projection along the pivot columns; zero iff `v` is in the span.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if w[p].is_zero() {
                continue;
            }
            let f = w[p].clone();
            for (x, r) in w.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = &*x - &(&f * r);
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        is_zero_vector(&self.reduce(v))
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: Vector) -> bool {
        let mut w = self.reduce(&v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].inv().unwrap();
        for x in w.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, r) in row.iter_mut().zip(&w) {
                if !r.is_zero() {
                    *x = &*x - &(&f * r);
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, w);
        true
    }

    /// Coordinates of `v` (assumed in the span) with respect to [`Self::basis`].
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Columns that are not pivots; they index a basis of the quotient `K^n / self`.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.ambient - self.dim());
        let mut k = 0;
        for c in 0..self.ambient {
            if k < self.pivots.len() && self.pivots[k] == c {
                k += 1;
            } else {
                out.push(c);
            }
        }
        out
    }

    /// Coordinates of the class of `v` in the quotient by `self`, in the non-pivot basis.
    pub fn quotient_coords(&self, v: &[Scalar]) -> Vector {
        let w = self.reduce(v);
        self.non_pivots()
            .into_iter()
            .map(|c| w[c].clone())
            .collect()
    }

    /// Null space of the matrix whose rows span `self`: all `x` with `r . x = 0`.
    /// Basis vectors are indexed by free columns in ascending order.
    pub fn orthogonal_kernel(&self) -> Vec<Vector> {
        self.non_pivots()
            .into_iter()
            .map(|f| {
                let mut v = vec![Scalar::zero(); self.ambient];
                v[f] = Scalar::one();
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    if !row[f].is_zero() {
                        v[p] = -&row[f];
                    }
                }
                v
            })
            .collect()
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    pub fn sum(&self, other: &Self) -> Self {
        let mut s = self.clone();
        for r in &other.rows {
            s.insert(r.clone());
        }
        s
    }

    pub fn intersection(&self, other: &Self) -> Self {
        // x = sum a_i u_i = sum b_j w_j  <=>  (a, -b) in kernel of [U; W]^T
        let k = self.dim();
        let stacked: Vec<Vector> = self
            .rows
            .iter()
            .cloned()
            .chain(other.rows.iter().cloned())
            .collect();
        if stacked.is_empty() {
            return Self::zero(self.ambient);
        }
        let m = ExactMatrix::from_rows(stacked).transpose();
        let kernel = m.kernel();
        Self::span(
            self.ambient,
            kernel.into_iter().map(|coef| {
                let mut v = vec![Scalar::zero(); self.ambient];
                for (a, u) in coef[..k].iter().zip(&self.rows) {
                    if a.is_zero() {
                        continue;
                    }
                    for (x, y) in v.iter_mut().zip(u) {
                        *x = &*x + &(a * y);
                    }
                }
                v
            }),
        )
    }

    pub fn to_matrix(&self) -> ExactMatrix {
        if self.rows.is_empty() {
            return ExactMatrix::zeros(0, self.ambient);
        }
        ExactMatrix::from_rows(self.rows.clone())
    }
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.pivots == other.pivots && self.rows == other.rows
    }
}

impl Eq for Subspace {}
