//! Dixon–Schneider: simultaneous eigenvectors of class-multiplication matrices over
//! `GF(p)`, lifted to `Q(zeta_e)` through eigenvalue multiplicities.

use crate::error::{Error, Result};
use crate::exactalg::CyclotomicScalar;
use crate::permgroup::GroupHandle;

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn mod_inv(a: u64, p: u64) -> u64 {
    mod_pow(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn primitive_root(p: u64) -> u64 {
    let factors = prime_factors(p - 1);
    (2..p)
        .find(|&g| factors.iter().all(|&q| mod_pow(g, (p - 1) / q, p) != 1))
        .expect("every prime has a primitive root")
}

/// Primes `p ≡ 1 (mod e)` with `p > 2 sqrt(order)`, ascending.
pub(crate) fn candidate_primes(e: u64, order: u64) -> impl Iterator<Item = u64> {
    let start = {
        let mut s = 1u64;
        while s * s <= 4 * order {
            s += 1;
        }
        s
    };
    (1u64..)
        .map(move |k| k * e + 1)
        .filter(move |&p| p >= start && is_prime(p))
}

/// Row-reduces `rows` (each of length `n`) mod `p`; returns a basis of the row space
/// in echelon form.
fn echelon(mut rows: Vec<Vec<u64>>, p: u64) -> (Vec<Vec<u64>>, Vec<usize>) {
    let n = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, piv);
        let inv = mod_inv(rows[r][c], p);
        for x in rows[r].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                for j in 0..n {
                    rows[i][j] = (rows[i][j] + p - f * rows[r][j] % p) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Null space of an `m x n` matrix mod `p` (vectors `v` with `A v = 0`).
fn kernel_mod(a: &[Vec<u64>], n: usize, p: u64) -> Vec<Vec<u64>> {
    let (rref, pivots) = echelon(a.to_vec(), p);
    let mut out = Vec::new();
    let mut k = 0;
    for f in 0..n {
        if k < pivots.len() && pivots[k] == f {
            k += 1;
            continue;
        }
        let mut v = vec![0u64; n];
        v[f] = 1;
        for (row, &pc) in rref.iter().zip(&pivots) {
            v[pc] = (p - row[f]) % p;
        }
        out.push(v);
    }
    out
}

/// Class structure constants `a[i][j][k] = #{x in C_i : x^{-1} z_k in C_j}` for fixed
/// representatives `z_k`.
pub fn class_structure_constants(g: &GroupHandle) -> Vec<Vec<Vec<u64>>> {
    let classes = g.classes();
    let r = classes.len();
    let mut a = vec![vec![vec![0u64; r]; r]; r];
    for (k, ck) in classes.classes.iter().enumerate() {
        let z = ck.rep();
        for x in 0..g.order() {
            let i = classes.class_of[x];
            let j = classes.class_of[g.mul(g.inv(x), z)];
            a[i][j][k] += 1;
        }
    }
    a
}

/// Simultaneous eigenvectors of all class matrices mod `p`, normalised so the identity
/// coordinate is 1. `None` when the splitting does not reach one-dimensional spaces.
fn split_eigenspaces(consts: &[Vec<Vec<u64>>], p: u64) -> Option<Vec<Vec<u64>>> {
    let r = consts.len();
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..r)
        .map(|i| {
            let mut e = vec![0u64; r];
            e[i] = 1;
            e
        })
        .collect()];
    for ai in consts.iter().skip(1) {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut next = Vec::new();
        for basis in spaces {
            if basis.len() == 1 {
                next.push(basis);
                continue;
            }
            // images A_i b for each basis vector b (column convention)
            let images: Vec<Vec<u64>> = basis
                .iter()
                .map(|b| {
                    (0..r)
                        .map(|j| (0..r).fold(0u64, |acc, k| (acc + ai[j][k] % p * b[k]) % p))
                        .collect()
                })
                .collect();
            let mut found = 0;
            for lambda in 0..p {
                // vectors sum c_l b_l with sum c_l (A_i b_l - lambda b_l) = 0
                let m = basis.len();
                let rows: Vec<Vec<u64>> = (0..r)
                    .map(|coord| {
                        (0..m)
                            .map(|l| (images[l][coord] + p - lambda * basis[l][coord] % p) % p)
                            .collect()
                    })
                    .collect();
                let ker = kernel_mod(&rows, m, p);
                if ker.is_empty() {
                    continue;
                }
                found += ker.len();
                let sub: Vec<Vec<u64>> = ker
                    .iter()
                    .map(|c| {
                        (0..r)
                            .map(|coord| {
                                (0..m).fold(0u64, |acc, l| (acc + c[l] * basis[l][coord]) % p)
                            })
                            .collect()
                    })
                    .collect();
                next.push(sub);
                if found == m {
                    break;
                }
            }
            if found != basis.len() {
                return None;
            }
        }
        spaces = next;
    }
    if spaces.iter().any(|s| s.len() != 1) {
        return None;
    }
    let mut out = Vec::new();
    for s in spaces {
        let v = &s[0];
        if v[0] == 0 {
            return None;
        }
        let inv = mod_inv(v[0], p);
        out.push(v.iter().map(|x| x * inv % p).collect());
    }
    Some(out)
}

/// Character values (rows: irreducibles, columns: classes) and degrees, unsorted.
pub(crate) fn dixon_schneider(g: &GroupHandle) -> Result<(Vec<Vec<CyclotomicScalar>>, Vec<u64>)> {
    let classes = g.classes();
    let order = g.order() as u64;
    let e = g.exponent();
    let consts = class_structure_constants(g);
    let sizes: Vec<u64> = classes.sizes().iter().map(|&s| s as u64).collect();
    let inverse_class: Vec<usize> = classes
        .classes
        .iter()
        .map(|c| classes.class_of[g.inv(c.rep())])
        .collect();
    // class of rep^j for j in 0..e
    let power_classes: Vec<Vec<usize>> = classes
        .classes
        .iter()
        .map(|c| {
            let mut x = g.identity();
            (0..e)
                .map(|_| {
                    let k = classes.class_of[x];
                    x = g.mul(x, c.rep());
                    k
                })
                .collect()
        })
        .collect();

    let mut last_err = String::new();
    for p in candidate_primes(e, order).take(8) {
        match attempt(p, e, order, &consts, &sizes, &inverse_class, &power_classes) {
            Ok(res) => return Ok(res),
            Err(msg) => last_err = format!("p = {p}: {msg}"),
        }
    }
    Err(Error::CharacterTable(format!(
        "no suitable prime found; last failure {last_err}"
    )))
}

fn attempt(
    p: u64,
    e: u64,
    order: u64,
    consts: &[Vec<Vec<u64>>],
    sizes: &[u64],
    inverse_class: &[usize],
    power_classes: &[Vec<usize>],
) -> std::result::Result<(Vec<Vec<CyclotomicScalar>>, Vec<u64>), String> {
    let r = sizes.len();
    let vectors = split_eigenspaces(consts, p).ok_or("eigenspaces did not split")?;
    if vectors.len() != r {
        return Err(format!(
            "found {} characters for {} classes",
            vectors.len(),
            r
        ));
    }
    let z = mod_pow(primitive_root(p), (p - 1) / e, p);
    let z_inv = mod_inv(z, p);
    let e_inv = mod_inv(e % p, p);
    let mut rows = Vec::with_capacity(r);
    let mut degrees = Vec::with_capacity(r);
    for w in vectors {
        // sum_k w_k w_{k*} / |C_k| = |G| / d^2
        let s = (0..r).fold(0u64, |acc, k| {
            (acc + w[k] * w[inverse_class[k]] % p * mod_inv(sizes[k] % p, p)) % p
        });
        if s == 0 {
            return Err("degenerate central character".into());
        }
        let d2 = order % p * mod_inv(s, p) % p;
        let d = (1..=order)
            .take_while(|d| d * d <= order)
            .find(|d| d * d % p == d2)
            .ok_or("no integer degree matches")?;
        let chi_p: Vec<u64> = (0..r)
            .map(|k| d % p * w[k] % p * mod_inv(sizes[k] % p, p) % p)
            .collect();
        let mut row = Vec::with_capacity(r);
        for k in 0..r {
            let mut coeffs = vec![0i64; e as usize];
            let mut total = 0u64;
            for (l, slot) in coeffs.iter_mut().enumerate() {
                let zl = mod_pow(z_inv, l as u64, p);
                let mut acc = 0u64;
                let mut zlj = 1u64;
                for j in 0..e as usize {
                    acc = (acc + chi_p[power_classes[k][j]] * zlj) % p;
                    zlj = zlj * zl % p;
                }
                let m = acc * e_inv % p;
                if m > d {
                    return Err("eigenvalue multiplicity exceeds degree".into());
                }
                total += m;
                *slot = m as i64;
            }
            if total != d {
                return Err("eigenvalue multiplicities do not sum to the degree".into());
            }
            let value = coeffs.iter().enumerate().filter(|(_, &m)| m != 0).fold(
                CyclotomicScalar::zero(),
                |acc, (l, &m)| {
                    &acc + &(&CyclotomicScalar::root_of_unity(e as u32, l as i64)
                        * &CyclotomicScalar::from_int(m))
                },
            );
            row.push(value.reduce_rational());
        }
        rows.push(row);
        degrees.push(d);
    }
    Ok((rows, degrees))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        assert_eq!(candidate_primes(30, 60).next(), Some(31));
        assert_eq!(candidate_primes(6, 6).next(), Some(7));
        assert_eq!(candidate_primes(1, 1).next(), Some(3));
        assert_eq!(primitive_root(31), 3);
    }

    #[test]
    fn kernel_mod_p() {
        let k = kernel_mod(&[vec![1, 1, 0], vec![0, 1, 1]], 3, 7);
        assert_eq!(k, vec![vec![1, 6, 1]]);
    }
}
