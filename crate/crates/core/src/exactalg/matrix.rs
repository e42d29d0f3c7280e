//! Dense exact matrices over cyclotomic fields.

use std::fmt;

use num::{BigInt, BigRational, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::cyclotomic::CyclotomicScalar;
use super::subspace::Subspace;

pub type Scalar = CyclotomicScalar;
pub type Vector = Vec<Scalar>;

/// Dense row-major matrix whose entries all share one cyclotomic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    order: u32,
    data: Vec<Scalar>,
}

fn lift_all(order: u32, data: &mut [Scalar]) {
    for x in data.iter_mut() {
        if x.order() != order {
            *x = x.lift_to(order);
        }
    }
}

impl ExactMatrix {
    pub fn new(rows: usize, cols: usize, mut data: Vec<Scalar>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length mismatch");
        let order = data
            .iter()
            .map(|x| x.order())
            .fold(1u32, num::integer::lcm);
        lift_all(order, &mut data);
        ExactMatrix {
            rows,
            cols,
            order,
            data,
        }
    }

    pub fn from_rows(rows: Vec<Vector>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect())
                .collect(),
        )
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::new(rows, cols, vec![Scalar::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Scalar::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        let v = if v.order() == self.order {
            v
        } else {
            let m = num::integer::lcm(self.order, v.order());
            if m != self.order {
                self.order = m;
                lift_all(m, &mut self.data);
            }
            v.lift_to(m)
        };
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        ExactMatrix {
            rows: self.cols,
            cols: self.rows,
            order: self.order,
            data,
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut data = vec![Scalar::zero(); self.rows * rhs.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let t = a * b;
                        let slot = &mut data[i * rhs.cols + j];
                        *slot = &*slot + &t;
                    }
                }
            }
        }
        Self::new(self.rows, rhs.cols, data)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a + b)
            .collect();
        Self::new(self.rows, self.cols, data)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a - b)
            .collect();
        Self::new(self.rows, self.cols, data)
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self::new(
            self.rows,
            self.cols,
            self.data.iter().map(|x| x * s).collect(),
        )
    }

    pub fn pow(&self, mut e: u32) -> Self {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Row vector times matrix.
    pub fn left_apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![Scalar::zero(); self.cols];
        for (i, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, slot) in out.iter_mut().enumerate() {
                let b = self.get(i, j);
                if !b.is_zero() {
                    *slot = &*slot + &(a * b);
                }
            }
        }
        out
    }

    /// Matrix times column vector.
    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols);
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.data.iter().all(|x| x.to_rational().is_some())
    }

    pub fn is_nonnegative_rational(&self) -> bool {
        self.data
            .iter()
            .all(|x| x.to_rational().is_some_and(|r| !r.is_negative()))
    }

    pub fn to_rational_rows(&self) -> Option<Vec<Vec<BigRational>>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.to_rational()).collect())
            .collect()
    }

    /// Entries as machine integers, when every entry is an integer that fits.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        use num::ToPrimitive;
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|x| {
                        let r = x.to_rational()?;
                        if !r.is_integer() {
                            return None;
                        }
                        r.to_integer().to_i64()
                    })
                    .collect()
            })
            .collect()
    }

    pub fn pattern(&self) -> ZeroPattern {
        ZeroPattern {
            rows: self.rows,
            cols: self.cols,
            bits: self.data.iter().map(|x| !x.is_zero()).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        Subspace::span(self.cols, self.to_rows()).dim()
    }

    /// Kernel basis; see [`super::solve_kernel`].
    pub fn kernel(&self) -> Vec<Vector> {
        Subspace::span(self.cols, self.to_rows()).orthogonal_kernel()
    }

    /// Restriction of scalars: the `Q`-linear operator of an order-`n` matrix as a
    /// rational matrix of size `phi(n)` times larger.
    pub fn realify(&self) -> Vec<Vec<BigRational>> {
        let phi = self.data.first().map_or(1, |x| x.coeffs().len());
        let n = self.order;
        let mut out = vec![vec![BigRational::zero(); self.cols * phi]; self.rows * phi];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                for s in 0..phi {
                    // a * x^s expressed in the power basis
                    let prod = a * &Scalar::root_of_unity(n, s as i64);
                    for (t, c) in prod.coeffs().iter().enumerate() {
                        // column-vector convention: (A v)_i picks coordinates of a * v_j
                        out[i * phi + t][j * phi + s] = c.clone();
                    }
                }
            }
        }
        out
    }

    pub fn from_rational_rows(rows: &[Vec<BigRational>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().cloned().map(Scalar::from_rational).collect())
                .collect(),
        )
    }

    /// Solves `self * x = b`; `None` if inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vector> {
        assert_eq!(b.len(), self.rows);
        let aug: Vec<Vector> = (0..self.rows)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.push(-&b[i]);
                r
            })
            .collect();
        // kernel vectors with last coordinate 1 give solutions
        let kernel = Subspace::span(self.cols + 1, aug).orthogonal_kernel();
        let v = kernel.iter().find(|v| !v[self.cols].is_zero())?;
        let s = v[self.cols].inv().unwrap();
        Some(v[..self.cols].iter().map(|x| x * &s).collect())
    }

    pub fn hstack(&self, rhs: &Self) -> Self {
        assert_eq!(self.rows, rhs.rows);
        let rows = (0..self.rows)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend_from_slice(rhs.row(i));
                r
            })
            .collect();
        Self::from_rows(rows)
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.to_string()).collect())
            .collect();
        let width = cells.iter().flatten().map(|s| s.len()).max().unwrap_or(1);
        for r in &cells {
            write!(f, "(")?;
            for (j, c) in r.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:>w$}", c, w = width)?;
            }
            writeln!(f, ")")?;
        }
        Ok(())
    }
}

impl Serialize for ExactMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExactMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows: Vec<Vec<Scalar>> = Vec::deserialize(d)?;
        if rows.iter().any(|r| r.len() != rows[0].len()) {
            return Err(serde::de::Error::custom("ragged matrix rows"));
        }
        Ok(ExactMatrix::from_rows(rows))
    }
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    let mut acc = Scalar::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc = &acc + &(x * y);
        }
    }
    acc
}

pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(a: &[Scalar], s: &Scalar) -> Vector {
    a.iter().map(|x| x * s).collect()
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// Nonzero pattern of a matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ZeroPattern {
    pub rows: usize,
    pub cols: usize,
    pub bits: Vec<bool>,
}

impl ZeroPattern {
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.cols + j]
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.bits.len() == other.bits.len()
            && self.bits.iter().zip(&other.bits).all(|(a, b)| !a || *b)
    }

    pub fn is_full(&self) -> bool {
        self.bits.iter().all(|&b| b)
    }

    pub fn count(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }
}

pub fn int(i: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(i))
}
