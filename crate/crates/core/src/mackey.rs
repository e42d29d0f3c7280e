//! Mackey decompositions of coset modules, core bounds and Hecke algebras.
//!
//! `Q^G_H` is the permutation module on right cosets `H\G`. Its restriction to `H` and its
//! tensor powers split into coset modules indexed by double cosets.

use std::collections::HashMap;

use num::{BigRational, Zero};
use serde::{Deserialize, Serialize};

use crate::chartab::permutation_character;
use crate::error::{Error, Result};
use crate::permgroup::{
    core_and_witness, distinct_conjugates, double_cosets, intersection_chain, SubgroupHandle,
};

/// Largest number of double-coset tuples a tensor power may index.
pub const TENSOR_TUPLE_BUDGET: u64 = 1_000_000;

/// One summand `Q_S` with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSummand {
    pub subgroup: SubgroupHandle,
    pub multiplicity: u64,
}

/// Summands `Q^X_S` of a decomposition, `X` being the group the modules live over.
#[derive(Clone, Debug)]
pub struct QSummandMultiset {
    /// Order of the group the summands are modules for.
    pub over_order: usize,
    pub power: usize,
    pub summands: Vec<QSummand>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QSummandJson {
    pub subgroup_generators: Vec<Vec<u32>>,
    pub multiplicity: u64,
    pub index: usize,
}

impl QSummandMultiset {
    pub fn total_multiplicity(&self) -> u64 {
        self.summands.iter().map(|s| s.multiplicity).sum()
    }

    /// `sum mult |X : S|`.
    pub fn dimension(&self) -> u64 {
        self.summands
            .iter()
            .map(|s| s.multiplicity * (self.over_order / s.subgroup.order()) as u64)
            .sum()
    }

    /// Character on the classes of the parent group (summands over the parent only).
    pub fn character(&self) -> Vec<u64> {
        let mut acc: Vec<u64> = Vec::new();
        for s in &self.summands {
            let pc = permutation_character(&s.subgroup);
            if acc.is_empty() {
                acc = vec![0; pc.len()];
            }
            for (a, v) in acc.iter_mut().zip(pc) {
                *a += s.multiplicity * v;
            }
        }
        acc
    }

    pub fn to_json(&self) -> Vec<QSummandJson> {
        self.summands
            .iter()
            .map(|s| QSummandJson {
                subgroup_generators: s.subgroup.generator_images(),
                multiplicity: s.multiplicity,
                index: self.over_order / s.subgroup.order(),
            })
            .collect()
    }
}

/// `Q^G_K` restricted to `H`: one summand `Q^H_{K^g ∩ H}` per double coset `K g H`.
pub fn mackey_restrict(k: &SubgroupHandle, h: &SubgroupHandle) -> QSummandMultiset {
    let summands = double_cosets(k, h)
        .into_iter()
        .map(|d| QSummand {
            subgroup: k.conjugate(d.rep).intersection(h),
            multiplicity: 1,
        })
        .collect();
    QSummandMultiset {
        over_order: h.order(),
        power: 1,
        summands,
    }
}

/// Canonical representative of a conjugacy class of subgroups: least member list.
struct ConjugacyCanon {
    cache: HashMap<Vec<usize>, SubgroupHandle>,
}

impl ConjugacyCanon {
    fn new() -> Self {
        ConjugacyCanon {
            cache: HashMap::new(),
        }
    }

    fn canon(&mut self, s: &SubgroupHandle) -> SubgroupHandle {
        if let Some(c) = self.cache.get(s.members()) {
            return c.clone();
        }
        let conj = distinct_conjugates(s);
        let best = conj
            .iter()
            .map(|(c, _)| c)
            .min_by(|a, b| a.members().cmp(b.members()))
            .expect("a subgroup is conjugate to itself")
            .clone();
        for (c, _) in &conj {
            self.cache.insert(c.members().to_vec(), best.clone());
        }
        best
    }
}

/// `(Q^G_H)^{⊗n}` as a sum of coset modules, conjugate summands merged.
///
/// Each step uses `Q_S ⊗ Q_H ≅ ⊕_{H x S} Q_{S ∩ H^x}`.
pub fn q_tensor_decomposition(h: &SubgroupHandle, n: usize) -> Result<QSummandMultiset> {
    if n == 0 {
        return Err(Error::malformed("tensor power must be at least 1"));
    }
    let t = double_cosets(h, h).len() as u64;
    let tuples = (1..n).try_fold(1u64, |acc, _| acc.checked_mul(t));
    match tuples {
        Some(c) if c <= TENSOR_TUPLE_BUDGET => {}
        _ => {
            return Err(Error::CapExceeded {
                what: "double-coset tuples",
                cap: TENSOR_TUPLE_BUDGET as usize,
                needed: tuples.map_or(usize::MAX, |c| c as usize),
            })
        }
    }
    let g = h.parent();
    let mut canon = ConjugacyCanon::new();
    let mut current: Vec<(SubgroupHandle, u64)> = vec![(canon.canon(h), 1)];
    for _ in 1..n {
        let mut next: Vec<(SubgroupHandle, u64)> = Vec::new();
        for (s, mult) in &current {
            for d in double_cosets(h, s) {
                let t = canon.canon(&s.intersection(&h.conjugate(d.rep)));
                match next.iter_mut().find(|(x, _)| *x == t) {
                    Some(e) => e.1 += mult,
                    None => next.push((t, *mult)),
                }
            }
        }
        current = next;
    }
    current.sort_by(|a, b| {
        b.0.order()
            .cmp(&a.0.order())
            .then_with(|| a.0.members().cmp(b.0.members()))
    });
    let out = QSummandMultiset {
        over_order: g.order(),
        power: n,
        summands: current
            .into_iter()
            .map(|(subgroup, multiplicity)| QSummand {
                subgroup,
                multiplicity,
            })
            .collect(),
    };
    let want = (h.index() as u64).pow(n as u32);
    if out.dimension() != want {
        return Err(Error::assertion(format!(
            "tensor power dimension {} differs from |G:H|^{n} = {want}",
            out.dimension()
        )));
    }
    Ok(out)
}

/// `(ε↑^G)ⁿ` pointwise, from coset fixed points.
pub fn permutation_character_power(h: &SubgroupHandle, n: usize) -> Vec<u64> {
    permutation_character(h)
        .into_iter()
        .map(|v| v.pow(n as u32))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoreDepthBound {
    pub core_order: usize,
    pub r: usize,
    pub bound_d_q: usize,
    pub bound_d_h: usize,
    /// The bounds need `kH` separable; always set over the cyclotomic fields used here.
    pub char_zero: bool,
}

pub fn core_depth_bound(h: &SubgroupHandle, char_zero: bool) -> CoreDepthBound {
    let w = core_and_witness(h);
    let r = w.r();
    CoreDepthBound {
        core_order: w.core.order(),
        r,
        bound_d_q: r + 1,
        bound_d_h: 2 * r + 3,
        char_zero,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CombinatorialBound {
    pub d_c_ev: usize,
    pub d_c_bracket: (usize, usize),
    pub d_c_is_one: bool,
    pub d_h: Option<u32>,
    /// `d_h <= d_c_ev + 1`, when `d_h` is known.
    pub holds: Option<bool>,
}

pub fn combinatorial_bound_check(h: &SubgroupHandle, d_h: Option<u32>) -> CombinatorialBound {
    let chain = intersection_chain(h);
    CombinatorialBound {
        d_c_ev: chain.d_c_ev,
        d_c_bracket: chain.bracket,
        d_c_is_one: chain.d_c_is_one,
        d_h,
        holds: d_h.map(|d| d as usize <= chain.d_c_ev + 1),
    }
}

/// Hecke algebra `e kG e`, `e` the averaging idempotent of `K`, in the basis
/// `b_j = |K|⁻¹ Σ_{x ∈ K γ_j K} x`, so `b_i b_j = Σ_k μ_ijk b_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeckeAlgebra {
    /// Representatives `γ_j` as 1-based image lists; `γ_1` is the identity.
    pub representatives: Vec<Vec<u32>>,
    /// `ind γ_j = |K γ_j K| / |K|`.
    pub indices: Vec<u64>,
    /// `mu[i][j][k]`; always an integer.
    pub mu: Vec<Vec<Vec<u64>>>,
}

impl HeckeAlgebra {
    pub fn dim(&self) -> usize {
        self.indices.len()
    }

    pub fn is_commutative(&self) -> bool {
        let t = self.dim();
        (0..t).all(|i| (0..t).all(|j| self.mu[i][j] == self.mu[j][i]))
    }

    pub fn is_associative(&self) -> bool {
        let t = self.dim();
        for i in 0..t {
            for j in 0..t {
                for k in 0..t {
                    for m in 0..t {
                        let lhs: u64 = (0..t).map(|l| self.mu[i][j][l] * self.mu[l][k][m]).sum();
                        let rhs: u64 = (0..t).map(|l| self.mu[j][k][l] * self.mu[i][l][m]).sum();
                        if lhs != rhs {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// `b_1` is a two-sided unit.
    pub fn has_unit(&self) -> bool {
        let t = self.dim();
        (0..t).all(|j| {
            (0..t).all(|k| {
                let d = u64::from(j == k);
                self.mu[0][j][k] == d && self.mu[j][0][k] == d
            })
        })
    }

    /// Product of two coefficient vectors in the `b` basis.
    pub fn multiply(&self, a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let t = self.dim();
        let mut out = vec![BigRational::zero(); t];
        for i in 0..t {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..t {
                if b[j].is_zero() {
                    continue;
                }
                let ab = &a[i] * &b[j];
                for (k, o) in out.iter_mut().enumerate() {
                    if self.mu[i][j][k] != 0 {
                        *o += &ab * BigRational::from_integer(self.mu[i][j][k].into());
                    }
                }
            }
        }
        out
    }
}

pub fn hecke_algebra(k: &SubgroupHandle) -> Result<HeckeAlgebra> {
    let g = k.parent();
    let dcs = double_cosets(k, k);
    let t = dcs.len();
    let mut label = vec![0usize; g.order()];
    for (j, d) in dcs.iter().enumerate() {
        for &x in &d.members {
            label[x] = j;
        }
    }
    let korder = k.order() as u64;
    let mut mu = vec![vec![vec![0u64; t]; t]; t];
    for (kk, dk) in dcs.iter().enumerate() {
        for (j, dj) in dcs.iter().enumerate() {
            // |D_i ∩ γ_k D_j⁻¹| for every i at once
            let mut counts = vec![0u64; t];
            for &y in &dj.members {
                counts[label[g.mul(dk.rep, g.inv(y))]] += 1;
            }
            for (i, c) in counts.into_iter().enumerate() {
                if c % korder != 0 {
                    return Err(Error::assertion(
                        "double coset intersection not a union of cosets",
                    ));
                }
                mu[i][j][kk] = c / korder;
            }
        }
    }
    let alg = HeckeAlgebra {
        representatives: dcs.iter().map(|d| g.element(d.rep).images()).collect(),
        indices: dcs.iter().map(|d| d.size() as u64 / korder).collect(),
        mu,
    };
    if !alg.has_unit() {
        return Err(Error::assertion("identity double coset is not a unit"));
    }
    if !alg.is_associative() {
        return Err(Error::assertion("Hecke multiplication is not associative"));
    }
    Ok(alg)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::permgroup::{enumerate_group, GroupHandle, Permutation};

    fn group(degree: usize, gens: &[&[&[u32]]]) -> Arc<GroupHandle> {
        let gens: Vec<Permutation> = gens
            .iter()
            .map(|c| Permutation::from_cycles(degree, c).unwrap())
            .collect();
        Arc::new(enumerate_group(degree, &gens, 1000).unwrap())
    }

    fn sub(g: &Arc<GroupHandle>, gens: &[&[&[u32]]]) -> SubgroupHandle {
        let idx: Vec<usize> = gens
            .iter()
            .map(|c| {
                g.index_of(&Permutation::from_cycles(g.degree(), c).unwrap())
                    .unwrap()
            })
            .collect();
        SubgroupHandle::generated(g, &idx)
    }

    #[test]
    fn restriction() {
        let g = group(4, &[&[&[1, 2, 3]], &[&[1, 2], &[3, 4]]]);
        let h = sub(&g, &[&[&[1, 2, 3]]]);
        let r = mackey_restrict(&SubgroupHandle::whole(&g), &h);
        assert_eq!(r.summands.len(), 1);
        assert!(r.summands[0].subgroup == h);
        // TI subgroup of A4: H itself once, regular module of H for the other double cosets
        let r = mackey_restrict(&h, &h);
        let orders: Vec<usize> = r.summands.iter().map(|s| s.subgroup.order()).collect();
        assert_eq!(orders, vec![3, 1]);
        assert_eq!(r.dimension(), 4);

        let v4 = sub(&g, &[&[&[1, 2], &[3, 4]], &[&[1, 3], &[2, 4]]]);
        let r = mackey_restrict(&v4, &v4);
        assert_eq!(r.summands.len(), 3);
        assert!(r.summands.iter().all(|s| s.subgroup == v4));
    }

    #[test]
    fn tensor_powers() {
        let g = group(4, &[&[&[1, 2, 3]], &[&[1, 2], &[3, 4]]]);
        let h = sub(&g, &[&[&[1, 2, 3]]]);
        let q1 = q_tensor_decomposition(&h, 1).unwrap();
        assert_eq!(q1.summands.len(), 1);
        let q2 = q_tensor_decomposition(&h, 2).unwrap();
        let shape: Vec<(usize, u64)> = q2
            .summands
            .iter()
            .map(|s| (s.subgroup.order(), s.multiplicity))
            .collect();
        assert_eq!(shape, vec![(3, 1), (1, 1)]);
        for n in 1..=3 {
            let q = q_tensor_decomposition(&h, n).unwrap();
            assert_eq!(q.character(), permutation_character_power(&h, n));
        }
        let v4 = sub(&g, &[&[&[1, 2], &[3, 4]], &[&[1, 3], &[2, 4]]]);
        let q2 = q_tensor_decomposition(&v4, 2).unwrap();
        assert_eq!(q2.summands.len(), 1);
        assert_eq!(q2.summands[0].multiplicity, 3);
    }

    #[test]
    fn bounds() {
        let g = group(4, &[&[&[1, 2, 3]], &[&[1, 2], &[3, 4]]]);
        let h = sub(&g, &[&[&[1, 2, 3]]]);
        let b = core_depth_bound(&h, true);
        assert_eq!((b.r, b.bound_d_h), (1, 5));
        let c = combinatorial_bound_check(&h, Some(5));
        assert_eq!(c.d_c_ev, 4);
        assert_eq!(c.holds, Some(true));
    }

    #[test]
    fn hecke() {
        let g = group(3, &[&[&[1, 2]], &[&[1, 2, 3]]]);
        let whole = hecke_algebra(&SubgroupHandle::whole(&g)).unwrap();
        assert_eq!(whole.dim(), 1);
        assert_eq!(whole.mu[0][0][0], 1);
        let s2 = sub(&g, &[&[&[1, 2]]]);
        let a = hecke_algebra(&s2).unwrap();
        assert_eq!(a.dim(), 2);
        assert!(a.is_commutative());
        assert_eq!(a.indices, vec![1, 2]);
        // b_2^2 = 2 b_1 + b_2
        assert_eq!(a.mu[1][1], vec![2, 1]);
        let triv = hecke_algebra(&SubgroupHandle::trivial(&g)).unwrap();
        assert_eq!(triv.dim(), 6);
        assert!(!triv.is_commutative());
    }
}
