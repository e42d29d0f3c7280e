//! Univariate polynomials over `Q`.

use std::cmp::Ordering;
use std::fmt;

use num::integer::Integer;
use num::{BigInt, BigRational, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::cyclotomic::CyclotomicScalar;
use super::matrix::{int, ExactMatrix};

/// Polynomial with rational coefficients, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactPolynomial {
    coeffs: Vec<BigRational>,
}

impl ExactPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        ExactPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Self::new(Vec::new())
    }

    pub fn one() -> Self {
        Self::new(vec![BigRational::one()])
    }

    /// `X`.
    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    /// `X - r`.
    pub fn linear(r: &BigRational) -> Self {
        Self::new(vec![-r.clone(), BigRational::one()])
    }

    /// Monic polynomial with the given roots (with repetition).
    pub fn from_roots<'a, I: IntoIterator<Item = &'a BigRational>>(roots: I) -> Self {
        roots
            .into_iter()
            .fold(Self::one(), |acc, r| acc.mul(&Self::linear(r)))
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(l) => {
                let l = l.clone();
                Self::new(self.coeffs.iter().map(|c| c / &l).collect())
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let z = BigRational::zero();
        Self::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + rhs.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let z = BigRational::zero();
        Self::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) - rhs.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead = d.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lead;
            if !c.is_zero() {
                for (j, dj) in d.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * dj;
                }
            }
            quot[k] = c;
        }
        (Self::new(quot), Self::new(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Monic least common multiple.
    pub fn lcm(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let g = self.gcd(rhs);
        self.div_rem(&g).0.mul(rhs).monic()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    pub fn is_square_free(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// `p(A)` by Horner's rule.
    pub fn eval_matrix(&self, a: &ExactMatrix) -> ExactMatrix {
        assert!(a.is_square());
        let n = a.rows();
        let mut acc = ExactMatrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(a);
            let cs = CyclotomicScalar::from_rational(c.clone());
            for i in 0..n {
                let v = acc.get(i, i) + &cs;
                acc.set(i, i, v);
            }
        }
        acc
    }

    /// Scales to a primitive integer polynomial with positive leading coefficient.
    pub fn integerize(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(den.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let sign = if ints.last().unwrap().is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        ints.into_iter().map(|c| c / &g * &sign).collect()
    }

    pub fn to_string_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if mono.is_empty() || !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            out.push_str(&mono);
        }
        out
    }
}

impl fmt::Display for ExactPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("X"))
    }
}

impl Serialize for ExactPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExactPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<String> = Vec::deserialize(d)?;
        let coeffs = v
            .iter()
            .map(|s| super::cyclotomic::parse_rational(s))
            .collect::<crate::Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        Ok(ExactPolynomial::new(coeffs))
    }
}

/// Rational roots of a polynomial together with the part that has none.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalRootFactorization {
    /// Distinct rational roots in ascending order with their multiplicities.
    pub roots: Vec<(BigRationalString, usize)>,
    /// Monic factor without rational roots.
    pub residual: ExactPolynomial,
}

/// Rational wrapper that serialises as a `p/q` string.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BigRationalString(pub BigRational);

impl Serialize for BigRationalString {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for BigRationalString {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        super::cyclotomic::parse_rational(&s)
            .map(BigRationalString)
            .map_err(serde::de::Error::custom)
    }
}

impl RationalRootFactorization {
    pub fn root_values(&self) -> Vec<BigRational> {
        self.roots.iter().map(|(r, _)| r.0.clone()).collect()
    }

    pub fn splits_over_q(&self) -> bool {
        self.residual.degree() == Some(0)
    }
}

/// Extracts every rational root of `p` exactly.
///
/// Candidates `u/v` come from the rational root test on the primitive integer form of the
/// square-free part, with `|u/v|` limited by Fujiwara's root bound.
pub fn factor_rational_roots(p: &ExactPolynomial) -> RationalRootFactorization {
    assert!(!p.is_zero(), "factor_rational_roots on the zero polynomial");
    let mut rest = p.monic();
    let mut roots: Vec<(BigRationalString, usize)> = Vec::new();

    let zeros = rest.coeffs.iter().take_while(|c| c.is_zero()).count();
    if zeros > 0 {
        rest = ExactPolynomial::new(rest.coeffs[zeros..].to_vec());
        roots.push((BigRationalString(BigRational::zero()), zeros));
    }

    let sqfree = if rest.degree().unwrap_or(0) > 0 {
        rest.div_rem(&rest.gcd(&rest.derivative())).0
    } else {
        rest.clone()
    };

    for r in rational_root_candidates(&sqfree) {
        let lin = ExactPolynomial::linear(&r);
        let mut mult = 0;
        loop {
            let (q, rem) = rest.div_rem(&lin);
            if !rem.is_zero() {
                break;
            }
            rest = q;
            mult += 1;
        }
        if mult > 0 {
            roots.push((BigRationalString(r), mult));
        }
    }
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    RationalRootFactorization {
        roots,
        residual: rest.monic(),
    }
}

fn rational_root_candidates(p: &ExactPolynomial) -> Vec<BigRational> {
    let Some(deg) = p.degree() else {
        return Vec::new();
    };
    if deg == 0 {
        return Vec::new();
    }
    let a = p.integerize();
    let an = a[deg].clone();
    let a0 = a[0].clone();
    debug_assert!(!a0.is_zero());

    // Fujiwara: |root| <= 2 max_k |a_{n-k}/a_n|^{1/k}
    let mut bound = BigInt::one();
    for k in 1..=deg {
        let c = &a[deg - k];
        if c.is_zero() {
            continue;
        }
        let ratio = BigRational::new(c.abs(), an.abs());
        let ceil = ratio.ceil().to_integer();
        let mut root = ceil.nth_root(k as u32);
        if root.pow(k as u32) < ceil {
            root += 1;
        }
        if root > bound {
            bound = root;
        }
    }
    bound *= 2;

    let mut out = Vec::new();
    for v in positive_divisors(&an.abs()) {
        let limit = &bound * &v;
        let mut u = BigInt::one();
        while u <= limit {
            if (&a0 % &u).is_zero() && u.gcd(&v).is_one() {
                for s in [1i64, -1] {
                    let r = BigRational::new(&u * s, v.clone());
                    if p.eval(&r).is_zero() {
                        out.push(r);
                    }
                }
            }
            u += 1;
        }
    }
    out.sort_by(|x, y| x.partial_cmp(y).unwrap_or(Ordering::Equal));
    out.dedup();
    out
}

fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            small.push(d.clone());
            let q = n / &d;
            if q != d {
                large.push(q);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Krylov relation for `v, Av, A^2 v, ...` over `Q`: the monic polynomial of least degree
/// with `p(A) v = 0`.
fn local_minimal_polynomial(a: &[Vec<BigRational>], start: Vec<BigRational>) -> ExactPolynomial {
    let n = a.len();
    // Echelon rows: (vector part, combination of Krylov vectors) with pivot positions.
    let mut rows: Vec<(Vec<BigRational>, Vec<BigRational>, usize)> = Vec::new();
    let mut current = start;
    for k in 0..=n {
        let mut vec_part = current.clone();
        let mut comb = vec![BigRational::zero(); k + 1];
        comb[k] = BigRational::one();
        for (rv, rc, p) in &rows {
            if vec_part[*p].is_zero() {
                continue;
            }
            let f = vec_part[*p].clone();
            for (x, y) in vec_part.iter_mut().zip(rv) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
            for (x, y) in comb.iter_mut().zip(rc) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        match vec_part.iter().position(|x| !x.is_zero()) {
            None => return ExactPolynomial::new(comb).monic(),
            Some(p) => {
                let inv = vec_part[p].recip();
                for x in vec_part.iter_mut() {
                    *x *= &inv;
                }
                for x in comb.iter_mut() {
                    *x *= &inv;
                }
                rows.push((vec_part, comb, p));
            }
        }
        current = (0..n)
            .map(|i| {
                a[i].iter()
                    .zip(&current)
                    .filter(|(x, y)| !x.is_zero() && !y.is_zero())
                    .fold(BigRational::zero(), |acc, (x, y)| acc + x * y)
            })
            .collect();
    }
    unreachable!("Krylov sequence longer than the dimension")
}

/// Minimal polynomial over `Q` of a square matrix.
///
/// Rational matrices are handled directly; matrices with irrational cyclotomic entries are
/// first realified, which preserves exactly the rational polynomials that annihilate them.
pub fn minimal_polynomial(a: &ExactMatrix) -> ExactPolynomial {
    assert!(a.is_square(), "minimal polynomial of a non-square matrix");
    let rows = match a.to_rational_rows() {
        Some(r) => r,
        None => a.realify(),
    };
    let n = rows.len();
    if n == 0 {
        return ExactPolynomial::one();
    }
    let mut m = ExactPolynomial::one();
    for i in 0..n {
        let mut e = vec![BigRational::zero(); n];
        e[i] = BigRational::one();
        let local = local_minimal_polynomial(&rows, e);
        m = m.lcm(&local);
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64) -> BigRational {
        int(p)
    }

    #[test]
    fn division_and_gcd() {
        let a = ExactPolynomial::from_roots(&[q(1), q(2), q(3)]);
        let b = ExactPolynomial::from_roots(&[q(2), q(5)]);
        assert_eq!(a.gcd(&b), ExactPolynomial::linear(&q(2)));
        let l = a.lcm(&b);
        assert_eq!(l, ExactPolynomial::from_roots(&[q(1), q(2), q(3), q(5)]));
        let (quo, rem) = a.div_rem(&b);
        assert_eq!(quo.mul(&b).add(&rem), a);
    }

    #[test]
    fn rational_roots_with_multiplicity() {
        let p = ExactPolynomial::from_roots(&[q(0), q(1), q(3)]);
        let f = factor_rational_roots(&p);
        assert_eq!(f.root_values(), vec![q(0), q(1), q(3)]);
        assert!(f.splits_over_q());

        let x2m2 = ExactPolynomial::from_i64(&[-2, 0, 1]);
        let f = factor_rational_roots(&x2m2);
        assert!(f.roots.is_empty());
        assert_eq!(f.residual, x2m2);

        let half = BigRational::new(1.into(), 2.into());
        let p = ExactPolynomial::from_roots(&[half.clone(), half.clone(), q(-4)])
            .mul(&x2m2)
            .scale(&q(6));
        let f = factor_rational_roots(&p);
        assert_eq!(
            f.roots,
            vec![(BigRationalString(q(-4)), 1), (BigRationalString(half), 2)]
        );
        assert_eq!(f.residual, x2m2);
    }

    #[test]
    fn minimal_polynomials_of_small_matrices() {
        let b = ExactMatrix::from_i64(&[vec![2, 1], vec![1, 2]]);
        assert_eq!(
            minimal_polynomial(&b),
            ExactPolynomial::from_roots(&[q(1), q(3)])
        );
        assert_eq!(
            minimal_polynomial(&ExactMatrix::identity(4)),
            ExactPolynomial::linear(&q(1))
        );
        let jordan = ExactMatrix::from_i64(&[vec![2, 1], vec![0, 2]]);
        assert_eq!(
            minimal_polynomial(&jordan),
            ExactPolynomial::from_roots(&[q(2), q(2)])
        );
    }

    #[test]
    fn minimal_polynomial_of_cyclotomic_matrix() {
        // diag(i, -i) has minimal polynomial X^2 + 1 over Q
        let i = CyclotomicScalar::root_of_unity(4, 1);
        let a = ExactMatrix::from_rows(vec![
            vec![i.clone(), CyclotomicScalar::zero()],
            vec![CyclotomicScalar::zero(), -&i],
        ]);
        let m = minimal_polynomial(&a);
        assert_eq!(m, ExactPolynomial::from_i64(&[1, 0, 1]));
        assert!(m.eval_matrix(&a).is_zero());
    }

    #[test]
    fn display() {
        let p = ExactPolynomial::from_roots(&[q(1), q(3)]);
        assert_eq!(p.to_string(), "X^2 - 4X + 3");
    }
}
