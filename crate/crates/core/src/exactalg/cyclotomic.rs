//! Elements of cyclotomic fields `Q(zeta_n)` in the power basis of `Q[x]/Phi_n(x)`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num::integer::Integer;
use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

/// Integer coefficients of the `n`-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_polynomial(n: u32) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    assert!(n >= 1, "cyclotomic polynomial of order 0");
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    let mut num: Vec<i64> = vec![0; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let den = cyclotomic_polynomial(d);
            num = exact_div_monic(&num, &den);
        }
    }
    let p = Arc::new(num);
    cache.lock().unwrap().insert(n, p.clone());
    p
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let nd = num.len() - 1;
    let mut quot = vec![0i64; nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[k + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

/// Euler's totient, the degree of `Q(zeta_n)` over `Q`.
pub fn totient(n: u32) -> usize {
    cyclotomic_polynomial(n).len() - 1
}

fn lcm(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

/// Exact element of `Q(zeta_n)`.
///
/// Order-2 fields are identified with `Q` on construction, so every rational lives in
/// order 1 unless it was produced by arithmetic inside a larger field.
#[derive(Clone, Debug)]
pub struct CyclotomicScalar {
    order: u32,
    coeffs: Vec<BigRational>,
}

impl CyclotomicScalar {
    /// Builds an element from arbitrary-length power-basis coefficients, reducing mod `Phi_n`.
    pub fn from_coeffs(order: u32, coeffs: Vec<BigRational>) -> Self {
        assert!(order >= 1, "cyclotomic order must be positive");
        let coeffs = reduce_mod_phi(order, coeffs);
        if order == 2 {
            return CyclotomicScalar { order: 1, coeffs };
        }
        CyclotomicScalar { order, coeffs }
    }

    pub fn from_rational(r: BigRational) -> Self {
        CyclotomicScalar {
            order: 1,
            coeffs: vec![r],
        }
    }

    pub fn from_int(i: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(i)))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// `zeta_n^k`.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        let e = k.rem_euclid(n as i64) as usize;
        let mut coeffs = vec![BigRational::zero(); e + 1];
        coeffs[e] = BigRational::one();
        Self::from_coeffs(n, coeffs)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// The rational value, if the element lies in `Q`.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Drops to order 1 when the value is rational.
    pub fn reduce_rational(self) -> Self {
        match self.to_rational() {
            Some(r) if self.order != 1 => Self::from_rational(r),
            _ => self,
        }
    }

    /// Re-expresses `self` inside `Q(zeta_m)`; `self.order()` must divide `m`.
    pub fn lift_to(&self, m: u32) -> Self {
        if m == self.order || (m == 2 && self.order == 1) {
            return self.clone();
        }
        assert!(
            m.is_multiple_of(self.order),
            "cannot lift order {} into order {}",
            self.order,
            m
        );
        let step = (m / self.order) as usize;
        let mut out = vec![BigRational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out[j * step] = c.clone();
            }
        }
        Self::from_coeffs(m, out)
    }

    fn common(a: &Self, b: &Self) -> (Self, Self) {
        if a.order == b.order {
            return (a.clone(), b.clone());
        }
        let m = lcm(a.order, b.order);
        (a.lift_to(m), b.lift_to(m))
    }

    /// Complex conjugation, the field automorphism `zeta -> zeta^{-1}`.
    pub fn conj(&self) -> Self {
        if self.order == 1 {
            return self.clone();
        }
        let n = self.order as usize;
        let mut out = vec![BigRational::zero(); n];
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out[(n - j) % n] += c;
            }
        }
        Self::from_coeffs(self.order, out)
    }

    /// Matrix of multiplication by `self` on the power basis (row `i` is `self * x^i`).
    fn multiplication_matrix(&self) -> Vec<Vec<BigRational>> {
        let phi = self.coeffs.len();
        (0..phi)
            .map(|i| {
                let mut shifted = vec![BigRational::zero(); i + phi];
                for (j, c) in self.coeffs.iter().enumerate() {
                    shifted[i + j] = c.clone();
                }
                reduce_mod_phi(self.order, shifted)
            })
            .collect()
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.order == 1 {
            return Some(Self::from_rational(self.coeffs[0].recip()));
        }
        // Solve y * self = 1, i.e. sum_i y_i (x^i * self) = e_0.
        let rows = self.multiplication_matrix();
        let phi = rows.len();
        // Augmented system in column form: unknowns y_i, equations per coordinate.
        let mut aug: Vec<Vec<BigRational>> = (0..phi)
            .map(|coord| {
                let mut r: Vec<BigRational> = (0..phi).map(|i| rows[i][coord].clone()).collect();
                r.push(if coord == 0 {
                    BigRational::one()
                } else {
                    BigRational::zero()
                });
                r
            })
            .collect();
        let sol = solve_square_rational(&mut aug)?;
        Some(Self::from_coeffs(self.order, sol))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Total order used for deterministic sorting: lexicographic on power-basis
    /// coordinates in the common field.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        let (a, b) = Self::common(self, other);
        for (x, y) in a.coeffs.iter().zip(b.coeffs.iter()) {
            match x.cmp(y) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }

    /// `z * conj(z)` as a rational, when that product is rational.
    pub fn norm_squared(&self) -> Option<BigRational> {
        (self * &self.conj()).to_rational()
    }
}

fn reduce_mod_phi(order: u32, mut coeffs: Vec<BigRational>) -> Vec<BigRational> {
    let phi_poly = cyclotomic_polynomial(order);
    let phi = phi_poly.len() - 1;
    if coeffs.len() > phi {
        for k in (phi..coeffs.len()).rev() {
            if coeffs[k].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut coeffs[k], BigRational::zero());
            for j in 0..phi {
                let pj = phi_poly[j];
                if pj != 0 {
                    coeffs[k - phi + j] -= &c * BigRational::from_integer(BigInt::from(pj));
                }
            }
        }
        coeffs.truncate(phi);
    }
    coeffs.resize(phi, BigRational::zero());
    coeffs
}

/// Gauss-Jordan on an `n x (n+1)` augmented rational system; `None` if singular.
fn solve_square_rational(aug: &mut [Vec<BigRational>]) -> Option<Vec<BigRational>> {
    let n = aug.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, piv);
        let inv = aug[col][col].recip();
        for x in aug[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for c in col..=n {
                    let t = &f * &aug[col][c];
                    aug[r][c] -= t;
                }
            }
        }
    }
    Some(aug.iter().map(|r| r[n].clone()).collect())
}

impl PartialEq for CyclotomicScalar {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = Self::common(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CyclotomicScalar {}

impl From<i64> for CyclotomicScalar {
    fn from(i: i64) -> Self {
        Self::from_int(i)
    }
}

impl From<BigRational> for CyclotomicScalar {
    fn from(r: BigRational) -> Self {
        Self::from_rational(r)
    }
}

impl<'a> Add<&'a CyclotomicScalar> for &'a CyclotomicScalar {
    type Output = CyclotomicScalar;
    fn add(self, rhs: &CyclotomicScalar) -> CyclotomicScalar {
        if self.order == rhs.order {
            let coeffs = self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect();
            return CyclotomicScalar {
                order: self.order,
                coeffs,
            };
        }
        let (a, b) = CyclotomicScalar::common(self, rhs);
        &a + &b
    }
}

impl<'a> Sub<&'a CyclotomicScalar> for &'a CyclotomicScalar {
    type Output = CyclotomicScalar;
    fn sub(self, rhs: &CyclotomicScalar) -> CyclotomicScalar {
        if self.order == rhs.order {
            let coeffs = self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect();
            return CyclotomicScalar {
                order: self.order,
                coeffs,
            };
        }
        let (a, b) = CyclotomicScalar::common(self, rhs);
        &a - &b
    }
}

impl<'a> Mul<&'a CyclotomicScalar> for &'a CyclotomicScalar {
    type Output = CyclotomicScalar;
    fn mul(self, rhs: &CyclotomicScalar) -> CyclotomicScalar {
        if self.order != rhs.order {
            let (a, b) = CyclotomicScalar::common(self, rhs);
            return &a * &b;
        }
        if self.order == 1 {
            return CyclotomicScalar {
                order: 1,
                coeffs: vec![&self.coeffs[0] * &rhs.coeffs[0]],
            };
        }
        let n = self.coeffs.len();
        let mut prod = vec![BigRational::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        CyclotomicScalar {
            order: self.order,
            coeffs: reduce_mod_phi(self.order, prod),
        }
    }
}

impl<'a> Div<&'a CyclotomicScalar> for &'a CyclotomicScalar {
    type Output = CyclotomicScalar;
    fn div(self, rhs: &CyclotomicScalar) -> CyclotomicScalar {
        self * &rhs.inv().expect("division by zero cyclotomic scalar")
    }
}

impl Neg for &CyclotomicScalar {
    type Output = CyclotomicScalar;
    fn neg(self) -> CyclotomicScalar {
        CyclotomicScalar {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for CyclotomicScalar {
            type Output = CyclotomicScalar;
            fn $m(self, rhs: CyclotomicScalar) -> CyclotomicScalar {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for CyclotomicScalar {
    type Output = CyclotomicScalar;
    fn neg(self) -> CyclotomicScalar {
        -&self
    }
}

impl fmt::Display for CyclotomicScalar {
    /// Rationals print as `p/q` (or `p`); everything else as `n:[c0,c1,...]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.to_rational() {
            return write!(f, "{}", r);
        }
        write!(f, "{}:[", self.order)?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, "]")
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse {
        location: format!("scalar {:?}", s),
        message: "expected an integer or p/q".into(),
    };
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => {
            let p: BigInt = s.parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(p))
        }
    }
}

impl FromStr for CyclotomicScalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let Some((n, rest)) = s.split_once(':') else {
            return Ok(Self::from_rational(parse_rational(s)?));
        };
        let bad = |m: &str| Error::Parse {
            location: format!("scalar {:?}", s),
            message: m.to_string(),
        };
        let order: u32 = n.trim().parse().map_err(|_| bad("bad order"))?;
        if order == 0 {
            return Err(bad("order must be positive"));
        }
        let body = rest
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| bad("expected [c0,c1,...]"))?;
        let coeffs = if body.trim().is_empty() {
            Vec::new()
        } else {
            body.split(',')
                .map(parse_rational)
                .collect::<Result<Vec<_>>>()?
        };
        if coeffs.len() > totient(order) {
            return Err(bad("more coefficients than the field degree"));
        }
        Ok(Self::from_coeffs(order, coeffs))
    }
}

impl serde::Serialize for CyclotomicScalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for CyclotomicScalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        match v {
            serde_json::Value::String(s) => s.parse().map_err(serde::de::Error::custom),
            serde_json::Value::Number(n) => n.to_string().parse().map_err(serde::de::Error::custom),
            other => Err(serde::de::Error::custom(format!(
                "expected scalar string, got {}",
                other
            ))),
        }
    }
}

/// Sign of a rational scalar; `None` when the value is irrational.
pub fn rational_sign(z: &CyclotomicScalar) -> Option<Ordering> {
    z.to_rational().map(|r| {
        if r.is_positive() {
            Ordering::Greater
        } else if r.is_negative() {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    })
}
