//! Built-in catalogue of small permutation groups and the subgroup-pair sweep.

use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chartab::{
    class_fusion, compute_character_table, inclusion_matrix, subgroup_character_table,
    CharacterTable,
};
use crate::depthmat::{depth_report, DepthReport};
use crate::error::Result;
use crate::permgroup::{subgroup_class_representatives, GroupHandle, GroupInput, SubgroupHandle};

/// A named group given by 1-based generator images.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusGroup {
    pub name: String,
    pub order: usize,
    pub degree: usize,
    pub generators: Vec<Vec<u32>>,
}

impl CorpusGroup {
    pub fn build(&self) -> Result<Arc<GroupHandle>> {
        self.input().build(self.order.max(1))
    }

    pub fn input(&self) -> GroupInput {
        GroupInput {
            degree: self.degree,
            generators: self.generators.clone(),
            subgroups: BTreeMap::new(),
            name: Some(self.name.clone()),
        }
    }
}

/// Permutation generators, 1-based images, on `degree` points.
#[derive(Clone, Debug)]
struct Gens {
    degree: usize,
    gens: Vec<Vec<u32>>,
}

fn cyclic(n: usize) -> Gens {
    if n == 1 {
        return Gens {
            degree: 1,
            gens: vec![],
        };
    }
    Gens {
        degree: n,
        gens: vec![(0..n).map(|i| ((i + 1) % n + 1) as u32).collect()],
    }
}

fn symmetric(n: usize) -> Gens {
    let mut swap: Vec<u32> = (1..=n as u32).collect();
    swap.swap(0, 1);
    Gens {
        degree: n,
        gens: vec![swap, (0..n).map(|i| ((i + 1) % n + 1) as u32).collect()],
    }
}

fn alternating(n: usize) -> Gens {
    // 3-cycles (1 2 k)
    let gens = (3..=n)
        .map(|k| {
            let mut img: Vec<u32> = (1..=n as u32).collect();
            img[0] = 2;
            img[1] = k as u32;
            img[k - 1] = 1;
            img
        })
        .collect();
    Gens { degree: n, gens }
}

/// Disjoint union of the two actions.
fn direct(a: &Gens, b: &Gens) -> Gens {
    let d = a.degree + b.degree;
    let mut gens = Vec::new();
    for g in &a.gens {
        let mut img = g.clone();
        img.extend((a.degree as u32 + 1)..=(d as u32));
        gens.push(img);
    }
    for g in &b.gens {
        let mut img: Vec<u32> = (1..=a.degree as u32).collect();
        img.extend(g.iter().map(|&x| x + a.degree as u32));
        gens.push(img);
    }
    Gens { degree: d, gens }
}

fn product(parts: &[Gens]) -> Gens {
    parts[1..]
        .iter()
        .fold(parts[0].clone(), |acc, p| direct(&acc, p))
}

/// Right regular representation of a group given by its elements and multiplication.
fn regular<T, F>(elements: Vec<T>, mul: F, gens: &[T]) -> Gens
where
    T: Clone + Eq + Hash,
    F: Fn(&T, &T) -> T,
{
    let index: HashMap<T, usize> = elements
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, x)| (x, i))
        .collect();
    let perms = gens
        .iter()
        .map(|g| {
            elements
                .iter()
                .map(|x| index[&mul(x, g)] as u32 + 1)
                .collect()
        })
        .collect();
    Gens {
        degree: elements.len(),
        gens: perms,
    }
}

fn pow_mod(r: i64, e: i64, m: i64) -> i64 {
    (0..e).fold(1, |acc, _| (acc * r).rem_euclid(m))
}

/// `C_m ⋊ C_k`, the generator of `C_k` acting by `a ↦ a^r`.
fn metacyclic(m: i64, k: i64, r: i64) -> Gens {
    let els: Vec<(i64, i64)> = (0..m).flat_map(|i| (0..k).map(move |j| (i, j))).collect();
    let mul = |x: &(i64, i64), y: &(i64, i64)| {
        (
            (x.0 + pow_mod(r, x.1, m) * y.0).rem_euclid(m),
            (x.1 + y.1) % k,
        )
    };
    regular(els, mul, &[(1 % m, 0), (0, 1 % k)])
}

fn dihedral(n: i64) -> Gens {
    // on the n-gon
    let n_us = n as usize;
    let rot = (0..n_us).map(|i| ((i + 1) % n_us + 1) as u32).collect();
    let refl = (0..n_us).map(|i| ((n_us - i) % n_us + 1) as u32).collect();
    Gens {
        degree: n_us,
        gens: vec![rot, refl],
    }
}

/// `⟨a, x | a^{2n}, x² = aⁿ, x⁻¹ a x = a⁻¹⟩` of order `4n`.
fn dicyclic(n: i64) -> Gens {
    let m = 2 * n;
    let els: Vec<(i64, i64)> = (0..m).flat_map(|i| (0..2).map(move |j| (i, j))).collect();
    // a^i x^j
    let mul = |x: &(i64, i64), y: &(i64, i64)| {
        let (i1, j1) = *x;
        let (i2, j2) = *y;
        let i2 = if j1 == 1 { -i2 } else { i2 };
        let extra = if j1 == 1 && j2 == 1 { n } else { 0 };
        ((i1 + i2 + extra).rem_euclid(m), (j1 + j2) % 2)
    };
    regular(els, mul, &[(1, 0), (0, 1)])
}

/// `C_2² ⋊ C_4` with the generator swapping the factors.
fn klein_by_c4() -> Gens {
    let els: Vec<(u8, u8, u8)> = (0..2)
        .flat_map(|u| (0..2).flat_map(move |v| (0..4).map(move |t| (u, v, t))))
        .collect();
    let mul = |x: &(u8, u8, u8), y: &(u8, u8, u8)| {
        let (u2, v2) = if x.2 % 2 == 1 { (y.1, y.0) } else { (y.0, y.1) };
        (x.0 ^ u2, x.1 ^ v2, (x.2 + y.2) % 4)
    };
    regular(els, mul, &[(1, 0, 0), (0, 0, 1)])
}

/// `C_4 ∘ D_8`: `i^s X^x Z^z` with `ZX = -XZ`.
fn pauli() -> Gens {
    let els: Vec<(u8, u8, u8)> = (0..4)
        .flat_map(|s| (0..2).flat_map(move |x| (0..2).map(move |z| (s, x, z))))
        .collect();
    let mul = |a: &(u8, u8, u8), b: &(u8, u8, u8)| {
        ((a.0 + b.0 + 2 * (a.2 * b.1)) % 4, a.1 ^ b.1, a.2 ^ b.2)
    };
    regular(els, mul, &[(0, 1, 0), (0, 0, 1), (1, 0, 0)])
}

/// `C_3 ⋊ D_8` with `D_8 = ⟨r, s⟩` acting through `r ↦ inversion`, `s ↦ identity`.
fn c3_by_d8() -> Gens {
    // (c, k, e) = c · r^k s^e
    let els: Vec<(i64, i64, i64)> = (0..3)
        .flat_map(|c| (0..4).flat_map(move |k| (0..2).map(move |e| (c, k, e))))
        .collect();
    let mul = |x: &(i64, i64, i64), y: &(i64, i64, i64)| {
        let chi = if x.1 % 2 == 0 { 1 } else { -1 };
        let k2 = if x.2 == 1 { -y.1 } else { y.1 };
        (
            (x.0 + chi * y.0).rem_euclid(3),
            (x.1 + k2).rem_euclid(4),
            (x.2 + y.2) % 2,
        )
    };
    regular(els, mul, &[(1, 0, 0), (0, 1, 0), (0, 0, 1)])
}

/// `(C_3 × C_3) ⋊ C_2` by inversion.
fn generalized_dihedral_c3c3() -> Gens {
    let els: Vec<(i64, i64, i64)> = (0..3)
        .flat_map(|a| (0..3).flat_map(move |b| (0..2).map(move |e| (a, b, e))))
        .collect();
    let mul = |x: &(i64, i64, i64), y: &(i64, i64, i64)| {
        let s = if x.2 == 1 { -1 } else { 1 };
        (
            (x.0 + s * y.0).rem_euclid(3),
            (x.1 + s * y.1).rem_euclid(3),
            (x.2 + y.2) % 2,
        )
    };
    regular(els, mul, &[(1, 0, 0), (0, 1, 0), (0, 0, 1)])
}

/// `SL(2, 3)` acting on itself.
fn sl23() -> Gens {
    let mut els = Vec::new();
    for a in 0..3u8 {
        for b in 0..3u8 {
            for c in 0..3u8 {
                for d in 0..3u8 {
                    if (a * d + 9 - (b * c) % 3) % 3 == 1 {
                        els.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    let mul = |x: &[u8; 4], y: &[u8; 4]| {
        [
            (x[0] * y[0] + x[1] * y[2]) % 3,
            (x[0] * y[1] + x[1] * y[3]) % 3,
            (x[2] * y[0] + x[3] * y[2]) % 3,
            (x[2] * y[1] + x[3] * y[3]) % 3,
        ]
    };
    regular(els, mul, &[[1, 1, 0, 1], [1, 0, 1, 1]])
}

fn entry(name: &str, order: usize, g: Gens) -> CorpusGroup {
    CorpusGroup {
        name: name.to_string(),
        order,
        degree: g.degree,
        generators: g.gens,
    }
}

/// Every group of order at most 24 up to isomorphism, smallest first.
pub fn catalogue() -> Vec<CorpusGroup> {
    let c = cyclic;
    let mut out = vec![entry("C1", 1, cyclic(1))];
    for n in [
        2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24,
    ] {
        out.push(entry(&format!("C{n}"), n, cyclic(n)));
    }
    let mut more = vec![
        entry("C2xC2", 4, product(&[c(2), c(2)])),
        entry("S3", 6, symmetric(3)),
        entry("C4xC2", 8, product(&[c(4), c(2)])),
        entry("C2xC2xC2", 8, product(&[c(2), c(2), c(2)])),
        entry("D8", 8, dihedral(4)),
        entry("Q8", 8, dicyclic(2)),
        entry("C3xC3", 9, product(&[c(3), c(3)])),
        entry("D10", 10, dihedral(5)),
        entry("C6xC2", 12, product(&[c(6), c(2)])),
        entry("A4", 12, alternating(4)),
        entry("D12", 12, dihedral(6)),
        entry("Dic12", 12, metacyclic(3, 4, -1)),
        entry("D14", 14, dihedral(7)),
        entry("C4xC4", 16, product(&[c(4), c(4)])),
        entry("C8xC2", 16, product(&[c(8), c(2)])),
        entry("C4xC2xC2", 16, product(&[c(4), c(2), c(2)])),
        entry("C2^4", 16, product(&[c(2), c(2), c(2), c(2)])),
        entry("D16", 16, dihedral(8)),
        entry("Q16", 16, dicyclic(4)),
        entry("SD16", 16, metacyclic(8, 2, 3)),
        entry("M16", 16, metacyclic(8, 2, 5)),
        entry("C4:C4", 16, metacyclic(4, 4, -1)),
        entry("C2^2:C4", 16, klein_by_c4()),
        entry("C2xD8", 16, product(&[c(2), dihedral(4)])),
        entry("C2xQ8", 16, product(&[c(2), dicyclic(2)])),
        entry("C4oD8", 16, pauli()),
        entry("C6xC3", 18, product(&[c(6), c(3)])),
        entry("D18", 18, dihedral(9)),
        entry("C3xS3", 18, product(&[c(3), symmetric(3)])),
        entry("C3^2:C2", 18, generalized_dihedral_c3c3()),
        entry("C10xC2", 20, product(&[c(10), c(2)])),
        entry("D20", 20, dihedral(10)),
        entry("Dic20", 20, metacyclic(5, 4, -1)),
        entry("F20", 20, metacyclic(5, 4, 2)),
        entry("C7:C3", 21, metacyclic(7, 3, 2)),
        entry("D22", 22, dihedral(11)),
        entry("C12xC2", 24, product(&[c(12), c(2)])),
        entry("C6xC2xC2", 24, product(&[c(6), c(2), c(2)])),
        entry("S4", 24, symmetric(4)),
        entry("SL(2,3)", 24, sl23()),
        entry("C2xA4", 24, product(&[c(2), alternating(4)])),
        entry("D24", 24, dihedral(12)),
        entry("Dic24", 24, dicyclic(6)),
        entry("C3:C8", 24, metacyclic(3, 8, -1)),
        entry("C4xS3", 24, product(&[c(4), symmetric(3)])),
        entry("C2xDic12", 24, product(&[c(2), metacyclic(3, 4, -1)])),
        entry("C3:D8", 24, c3_by_d8()),
        entry("C2xC2xS3", 24, product(&[c(2), c(2), symmetric(3)])),
        entry("C3xD8", 24, product(&[c(3), dihedral(4)])),
        entry("C3xQ8", 24, product(&[c(3), dicyclic(2)])),
    ];
    out.append(&mut more);
    out.sort_by_key(|a| a.order);
    out
}

/// Groups beyond the catalogue used by the worked examples.
pub fn extras() -> Vec<CorpusGroup> {
    vec![
        entry("A5", 60, alternating(5)),
        entry("S5", 120, symmetric(5)),
    ]
}

pub fn groups_up_to(max_order: usize) -> Vec<CorpusGroup> {
    catalogue()
        .into_iter()
        .filter(|g| g.order <= max_order)
        .collect()
}

/// Looks a group up by name in the catalogue and the extras.
pub fn by_name(name: &str) -> Option<CorpusGroup> {
    catalogue()
        .into_iter()
        .chain(extras())
        .find(|g| g.name == name)
}

/// `S_n` on `n` points, for any `n`.
pub fn symmetric_group(n: usize) -> CorpusGroup {
    let order = (1..=n).product();
    entry(&format!("S{n}"), order, symmetric(n))
}

/// `S_{n-1}` as the stabiliser of the last point of `S_n`.
pub fn point_stabilizer(g: &Arc<GroupHandle>) -> SubgroupHandle {
    let last = g.degree() - 1;
    let members = (0..g.order())
        .filter(|&x| g.element(x).apply(last) == last)
        .collect();
    SubgroupHandle::from_members(g, members).expect("stabiliser is a subgroup")
}

/// One subgroup pair of the sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub group: String,
    pub group_order: usize,
    pub subgroup_order: usize,
    pub subgroup_generators: Vec<Vec<u32>>,
    pub report: DepthReport,
}

impl SweepRow {
    /// `d_0 > d_h` with both finite.
    pub fn violates_conjecture(&self) -> bool {
        matches!(
            (self.report.d_0.finite(), self.report.d_h.finite()),
            (Some(a), Some(b)) if a > b
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub max_order: usize,
    pub groups: Vec<CorpusGroup>,
}

impl SweepSpec {
    pub fn catalogue(max_order: usize) -> Self {
        SweepSpec {
            max_order,
            groups: groups_up_to(max_order),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub spec: SweepSpec,
    pub rows: Vec<SweepRow>,
    /// Indices into `rows` with `d_0 > d_h`.
    pub violations: Vec<usize>,
}

/// Depth report for a subgroup pair from freshly computed character tables.
pub fn pair_report(
    tab_g: &CharacterTable,
    h: &SubgroupHandle,
    cap_order: usize,
) -> Result<DepthReport> {
    let tab_h = subgroup_character_table(h, cap_order)?;
    let m = inclusion_matrix(tab_g, &tab_h, &class_fusion(h))?;
    depth_report(&m, Some(h))
}

/// All subgroup classes of every listed group, in parallel, in a fixed order.
pub fn run_sweep(spec: &SweepSpec, cap_order: usize) -> Result<SweepReport> {
    let pairs: Vec<(
        String,
        Arc<GroupHandle>,
        Arc<CharacterTable>,
        SubgroupHandle,
    )> = spec
        .groups
        .par_iter()
        .map(|cg| -> Result<Vec<_>> {
            let g = cg.build()?;
            let tab = Arc::new(compute_character_table(&g, cap_order)?);
            Ok(subgroup_class_representatives(&g)
                .into_iter()
                .map(|h| (cg.name.clone(), g.clone(), tab.clone(), h))
                .collect())
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let rows = pairs
        .par_iter()
        .map(|(name, g, tab, h)| {
            Ok(SweepRow {
                group: name.clone(),
                group_order: g.order(),
                subgroup_order: h.order(),
                subgroup_generators: h.generator_images(),
                report: pair_report(tab, h, cap_order)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let violations = rows
        .iter()
        .enumerate()
        .filter(|(_, r)| r.violates_conjecture())
        .map(|(i, _)| i)
        .collect();
    Ok(SweepReport {
        spec: spec.clone(),
        rows,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalogue_orders() {
        let cat = catalogue();
        assert_eq!(cat.len(), 74);
        for cg in &cat {
            let g = cg.build().unwrap();
            assert_eq!(g.order(), cg.order, "{}", cg.name);
        }
    }

    #[test]
    fn catalogue_is_irredundant() {
        // order, abelian, class count, element-order profile
        let mut seen = std::collections::HashSet::new();
        for cg in catalogue() {
            let g = cg.build().unwrap();
            let mut profile: Vec<u64> = (0..g.order()).map(|x| g.element_order(x)).collect();
            profile.sort_unstable();
            let subgroups = subgroup_class_representatives(&g).len();
            let key = (g.order(), g.classes().len(), profile, subgroups);
            assert!(seen.insert(key), "{} duplicates an earlier entry", cg.name);
        }
    }
}
