//! Finite permutation groups by full enumeration: classes, cores, double cosets and the
//! conjugate-intersection chain.

mod group;
mod perm;

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

pub use group::{
    enumerate_group, ClassPartition, ConjugacyClass, GroupHandle, SubgroupHandle, DEFAULT_ORDER_CAP,
};
pub use perm::Permutation;

use crate::error::{Error, Result};

/// Conjugacy classes of `g`, ordered by least representative.
pub fn conjugacy_classes(g: &GroupHandle) -> &ClassPartition {
    g.classes()
}

/// Distinct conjugates `H^g`, each with the least `g` producing it.
pub fn distinct_conjugates(h: &SubgroupHandle) -> Vec<(SubgroupHandle, usize)> {
    let g = h.parent();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    // H^g depends only on the coset N_G(H) g, but a plain scan is cheap at this scale.
    for x in 0..g.order() {
        let c = h.conjugate(x);
        if seen.insert(c.members().to_vec()) {
            out.push((c, x));
        }
    }
    out
}

/// Core of `h` together with a shortest list of conjugating elements reaching it.
#[derive(Clone, Debug)]
pub struct CoreWitness {
    pub core: SubgroupHandle,
    /// `g_1..g_r` with `H^{g_1} ∩ ... ∩ H^{g_r} ∩ H = core`, `r` minimal.
    pub witness: Vec<usize>,
}

impl CoreWitness {
    pub fn r(&self) -> usize {
        self.witness.len()
    }
}

/// Core `∩_g H^g` and a minimal witness, by breadth-first search over intersections.
pub fn core_and_witness(h: &SubgroupHandle) -> CoreWitness {
    let conjugates = distinct_conjugates(h);
    let core = conjugates
        .iter()
        .fold(h.clone(), |acc, (c, _)| acc.intersection(c));

    let mut visited: HashSet<Vec<usize>> = HashSet::new();
    visited.insert(h.members().to_vec());
    let mut frontier: Vec<(SubgroupHandle, Vec<usize>)> = vec![(h.clone(), Vec::new())];
    loop {
        if let Some((_, w)) = frontier.iter().find(|(s, _)| *s == core) {
            return CoreWitness {
                core,
                witness: w.clone(),
            };
        }
        let mut next = Vec::new();
        for (s, w) in &frontier {
            for (c, g) in &conjugates {
                let t = s.intersection(c);
                if visited.insert(t.members().to_vec()) {
                    let mut w2 = w.clone();
                    w2.push(*g);
                    next.push((t, w2));
                }
            }
        }
        assert!(
            !next.is_empty(),
            "core search exhausted without reaching the core"
        );
        frontier = next;
    }
}

/// A double coset `K g H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleCoset {
    pub rep: usize,
    pub members: Vec<usize>,
}

impl DoubleCoset {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Double cosets `K \ G / H`, ordered by least representative.
pub fn double_cosets(k: &SubgroupHandle, h: &SubgroupHandle) -> Vec<DoubleCoset> {
    let g = k.parent();
    assert!(Arc::ptr_eq(g, h.parent()), "subgroups of different groups");
    let mut seen = vec![false; g.order()];
    let mut out = Vec::new();
    for x in 0..g.order() {
        if seen[x] {
            continue;
        }
        let mut members = Vec::new();
        for &a in k.members() {
            let ax = g.mul(a, x);
            for &b in h.members() {
                let y = g.mul(ax, b);
                if !seen[y] {
                    seen[y] = true;
                    members.push(y);
                }
            }
        }
        members.sort_unstable();
        out.push(DoubleCoset { rep: x, members });
    }
    out
}

/// The chain `F_0 ⊆ F_1 ⊆ ...` of sets of conjugate intersections with `H`.
#[derive(Clone, Debug)]
pub struct IntersectionChain {
    /// `levels[i]` is `F_i`, subgroups in canonical order.
    pub levels: Vec<Vec<SubgroupHandle>>,
    /// Least `n` with `F_{n-1} = F_n`.
    pub n: usize,
    pub d_c_ev: usize,
    /// `d_c` lies in `[d_c_ev - 1, d_c_ev]`.
    pub bracket: (usize, usize),
    /// `G = H C_G(H)`, which is equivalent to `d_c = 1`.
    pub d_c_is_one: bool,
}

pub fn intersection_chain(h: &SubgroupHandle) -> IntersectionChain {
    let conjugates: Vec<SubgroupHandle> =
        distinct_conjugates(h).into_iter().map(|(c, _)| c).collect();
    let sort = |v: &mut Vec<SubgroupHandle>| v.sort_by(|a, b| a.members().cmp(b.members()));

    let mut levels = vec![vec![h.clone()]];
    loop {
        let last = levels.last().unwrap();
        let mut set: HashMap<Vec<usize>, SubgroupHandle> = HashMap::new();
        for s in last {
            for c in &conjugates {
                let t = s.intersection(c);
                set.entry(t.members().to_vec()).or_insert(t);
            }
        }
        let mut next: Vec<SubgroupHandle> = set.into_values().collect();
        sort(&mut next);
        let stable = next == *last;
        levels.push(next);
        if stable {
            break;
        }
    }
    let n = levels.len() - 1;
    let g = h.parent();
    let hc = h.centralizer();
    let product_size = {
        // |H C_G(H)| = |H| |C| / |H ∩ C|
        let inter = h.intersection(&hc);
        h.order() * hc.order() / inter.order()
    };
    IntersectionChain {
        n,
        d_c_ev: 2 * n,
        bracket: (2 * n - 1, 2 * n),
        d_c_is_one: product_size == g.order(),
        levels,
    }
}

/// Whether conjugation by every generator of `G` fixes each conjugacy class of `H` setwise,
/// i.e. the adjoint action of `G` on the centre of `kH` is trivial.
pub fn depth_one_adjoint_test(h: &SubgroupHandle) -> bool {
    let g = h.parent();
    let hg = h.as_group();
    let classes = hg.classes();
    g.generator_indices().iter().all(|&s| {
        classes.classes.iter().all(|c| {
            let set: HashSet<usize> = c.members.iter().map(|&i| h.members()[i]).collect();
            set.iter().all(|&x| set.contains(&g.conj(x, s)))
        })
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TiStatus {
    pub ti: bool,
    pub normal: bool,
}

/// Trivial-intersection test: `H ∩ H^g = 1` for all `g` outside `N_G(H)`.
/// Normal subgroups report `ti = false` with `normal = true`.
pub fn is_ti_subgroup(h: &SubgroupHandle) -> TiStatus {
    if h.is_normal() {
        return TiStatus {
            ti: false,
            normal: true,
        };
    }
    let ti = distinct_conjugates(h)
        .iter()
        .filter(|(c, _)| c != h)
        .all(|(c, _)| c.intersection(h).is_trivial());
    TiStatus { ti, normal: false }
}

/// Every subgroup of `g`, ordered by order then canonical member list.
pub fn all_subgroups(g: &Arc<GroupHandle>) -> Vec<SubgroupHandle> {
    let mut found: HashMap<Vec<usize>, SubgroupHandle> = HashMap::new();
    let mut frontier = Vec::new();
    for x in 0..g.order() {
        let s = SubgroupHandle::generated(g, &[x]);
        if !found.contains_key(s.members()) {
            found.insert(s.members().to_vec(), s.clone());
            frontier.push(s);
        }
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for s in &frontier {
            for x in 0..g.order() {
                if s.contains(x) {
                    continue;
                }
                let mut gens = s.generators();
                gens.push(x);
                let t = SubgroupHandle::generated(g, &gens);
                if !found.contains_key(t.members()) {
                    found.insert(t.members().to_vec(), t.clone());
                    next.push(t);
                }
            }
        }
        frontier = next;
    }
    let mut all: Vec<SubgroupHandle> = found.into_values().collect();
    all.sort_by(|a, b| a.order().cmp(&b.order()).then(a.members().cmp(b.members())));
    all
}

/// One representative per conjugacy class of subgroups (the first in [`all_subgroups`] order).
pub fn subgroup_class_representatives(g: &Arc<GroupHandle>) -> Vec<SubgroupHandle> {
    let mut covered: HashSet<Vec<usize>> = HashSet::new();
    let mut reps = Vec::new();
    for s in all_subgroups(g) {
        if covered.contains(s.members()) {
            continue;
        }
        for (c, _) in distinct_conjugates(&s) {
            covered.insert(c.members().to_vec());
        }
        reps.push(s);
    }
    reps
}

/// Whether two subgroups are conjugate in their common parent.
pub fn are_conjugate(a: &SubgroupHandle, b: &SubgroupHandle) -> bool {
    a.order() == b.order() && distinct_conjugates(a).iter().any(|(c, _)| c == b)
}

/// Group description as read from JSON, with 1-based images.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct GroupInput {
    pub degree: usize,
    pub generators: Vec<Vec<u32>>,
    #[serde(default)]
    pub subgroups: std::collections::BTreeMap<String, Vec<Vec<u32>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl GroupInput {
    pub fn build(&self, cap: usize) -> Result<Arc<GroupHandle>> {
        let gens = self
            .generators
            .iter()
            .enumerate()
            .map(|(i, g)| {
                if g.len() != self.degree {
                    return Err(Error::Parse {
                        location: format!("generators[{i}]"),
                        message: format!("expected {} images, got {}", self.degree, g.len()),
                    });
                }
                Permutation::from_images(g).map_err(|e| Error::Parse {
                    location: format!("generators[{i}]"),
                    message: e.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Arc::new(enumerate_group(self.degree, &gens, cap)?))
    }

    pub fn subgroup(&self, g: &Arc<GroupHandle>, name: &str) -> Result<Option<SubgroupHandle>> {
        match self.subgroups.get(name) {
            None => Ok(None),
            Some(gens) => {
                for (i, x) in gens.iter().enumerate() {
                    if x.len() != self.degree {
                        return Err(Error::Parse {
                            location: format!("subgroups.{name}[{i}]"),
                            message: format!("expected {} images, got {}", self.degree, x.len()),
                        });
                    }
                }
                SubgroupHandle::from_image_lists(g, gens)
                    .map(Some)
                    .map_err(|e| Error::Parse {
                        location: format!("subgroups.{name}"),
                        message: e.to_string(),
                    })
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(d: usize, cycles: &[&[u32]]) -> Permutation {
        Permutation::from_cycles(d, cycles).unwrap()
    }

    fn sym(n: usize) -> Arc<GroupHandle> {
        let mut gens = vec![perm(n, &[&[1, 2]])];
        if n > 2 {
            let cyc: Vec<u32> = (1..=n as u32).collect();
            gens.push(perm(n, &[&cyc]));
        }
        Arc::new(enumerate_group(n, &gens, DEFAULT_ORDER_CAP).unwrap())
    }

    fn a4() -> Arc<GroupHandle> {
        Arc::new(
            enumerate_group(
                4,
                &[perm(4, &[&[1, 2, 3]]), perm(4, &[&[1, 2], &[3, 4]])],
                DEFAULT_ORDER_CAP,
            )
            .unwrap(),
        )
    }

    fn sub(g: &Arc<GroupHandle>, gens: &[Permutation]) -> SubgroupHandle {
        let idx: Vec<usize> = gens.iter().map(|p| g.index_of(p).unwrap()).collect();
        SubgroupHandle::generated(g, &idx)
    }

    #[test]
    fn enumeration() {
        assert_eq!(sym(3).order(), 6);
        assert_eq!(a4().order(), 12);
        let triv = enumerate_group(3, &[], DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(triv.order(), 1);
        assert!(matches!(
            enumerate_group(6, sym(6).generators(), 100),
            Err(Error::GroupTooLarge { cap: 100 })
        ));
        assert!(enumerate_group(4, &[perm(3, &[&[1, 2]])], 10).is_err());
        let g = sym(4);
        assert!(g.element(0).is_identity());
        assert!(g.elements().windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn class_sizes() {
        assert_eq!(sym(3).classes().sizes(), vec![1, 3, 2]);
        let a5 = Arc::new(
            enumerate_group(
                5,
                &[perm(5, &[&[1, 2, 3]]), perm(5, &[&[1, 2, 3, 4, 5]])],
                DEFAULT_ORDER_CAP,
            )
            .unwrap(),
        );
        assert_eq!(a5.order(), 60);
        let mut sizes = a5.classes().sizes();
        assert_eq!(sizes.iter().sum::<usize>(), 60);
        sizes.sort();
        assert_eq!(sizes, vec![1, 12, 12, 15, 20]);
        let c4 = enumerate_group(4, &[perm(4, &[&[1, 2, 3, 4]])], 100).unwrap();
        assert_eq!(c4.classes().sizes(), vec![1; 4]);
    }

    #[test]
    fn cores_and_witnesses() {
        let s3 = sym(3);
        let a3 = sub(&s3, &[perm(3, &[&[1, 2, 3]])]);
        let cw = core_and_witness(&a3);
        assert_eq!(cw.core, a3);
        assert_eq!(cw.r(), 0);

        for n in 3..=5 {
            let g = sym(n);
            let cyc: Vec<u32> = (1..n as u32).collect();
            let h = sub(&g, &[perm(n, &[&[1, 2]]), perm(n, &[&cyc])]);
            assert_eq!(h.order() * n, g.order());
            let cw = core_and_witness(&h);
            assert!(cw.core.is_trivial());
            assert_eq!(cw.r(), n - 2);
            let reached = cw
                .witness
                .iter()
                .fold(h.clone(), |acc, &x| acc.intersection(&h.conjugate(x)));
            assert_eq!(reached, cw.core);
        }

        let g = a4();
        let c3 = sub(&g, &[perm(4, &[&[1, 2, 3]])]);
        let cw = core_and_witness(&c3);
        assert!(cw.core.is_trivial());
        assert_eq!(cw.r(), 1);
    }

    #[test]
    fn double_coset_counts() {
        let s3 = sym(3);
        let s2 = sub(&s3, &[perm(3, &[&[1, 2]])]);
        let dc = double_cosets(&s2, &s2);
        assert_eq!(dc.iter().map(|d| d.size()).collect::<Vec<_>>(), vec![2, 4]);
        let whole = SubgroupHandle::whole(&s3);
        assert_eq!(double_cosets(&whole, &s2).len(), 1);
        let a3 = sub(&s3, &[perm(3, &[&[1, 2, 3]])]);
        assert_eq!(double_cosets(&a3, &a3).len(), 2);
    }

    #[test]
    fn intersection_chains() {
        let s3 = sym(3);
        let a3 = sub(&s3, &[perm(3, &[&[1, 2, 3]])]);
        let ch = intersection_chain(&a3);
        assert_eq!(ch.d_c_ev, 2);
        assert!(!ch.d_c_is_one);

        let g = a4();
        let c3 = sub(&g, &[perm(4, &[&[1, 2, 3]])]);
        let ch = intersection_chain(&c3);
        assert_eq!(ch.levels[1].len(), 2);
        assert_eq!(ch.d_c_ev, 4);

        let v =
            Arc::new(enumerate_group(4, &[perm(4, &[&[1, 2]]), perm(4, &[&[3, 4]])], 10).unwrap());
        let h = sub(&v, &[perm(4, &[&[1, 2]])]);
        assert!(intersection_chain(&h).d_c_is_one);
    }

    #[test]
    fn adjoint_and_ti() {
        let s3 = sym(3);
        let a3 = sub(&s3, &[perm(3, &[&[1, 2, 3]])]);
        assert!(!depth_one_adjoint_test(&a3));
        assert!(depth_one_adjoint_test(&SubgroupHandle::trivial(&s3)));
        let v =
            Arc::new(enumerate_group(4, &[perm(4, &[&[1, 2]]), perm(4, &[&[3, 4]])], 10).unwrap());
        assert!(depth_one_adjoint_test(&sub(&v, &[perm(4, &[&[1, 2]])])));

        let g = a4();
        let c3 = sub(&g, &[perm(4, &[&[1, 2, 3]])]);
        assert_eq!(
            is_ti_subgroup(&c3),
            TiStatus {
                ti: true,
                normal: false
            }
        );
        assert_eq!(
            is_ti_subgroup(&a3),
            TiStatus {
                ti: false,
                normal: true
            }
        );
        let s2 = sub(&s3, &[perm(3, &[&[1, 2]])]);
        assert!(is_ti_subgroup(&s2).ti);
    }

    #[test]
    fn subgroup_lattice_of_s4() {
        let g = sym(4);
        assert_eq!(all_subgroups(&g).len(), 30);
        assert_eq!(subgroup_class_representatives(&g).len(), 11);
    }
}
