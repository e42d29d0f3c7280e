//! Exact character tables, class fusion and inclusion matrices.

mod dixon;

use std::cmp::Ordering;

use num::{BigRational, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{CyclotomicScalar, ExactMatrix};
use crate::permgroup::{GroupHandle, Permutation, SubgroupHandle};

pub use dixon::class_structure_constants;

/// Largest number of classes a table may have.
pub const MAX_CLASSES: usize = 60;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassInfo {
    pub rep: Permutation,
    pub size: usize,
}

/// Complex character table with exact values in `Q(zeta_e)`.
///
/// Class 0 is the identity class. The trivial character is row 0; the remaining rows
/// are in descending lexicographic order of their values on classes `1..r`.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    order: usize,
    exponent: u64,
    classes: Vec<ClassInfo>,
    irreducibles: Vec<Vec<CyclotomicScalar>>,
    degrees: Vec<u64>,
    inverse_class: Vec<usize>,
}

impl CharacterTable {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn classes(&self) -> &[ClassInfo] {
        &self.classes
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.size).collect()
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn irreducibles(&self) -> &[Vec<CyclotomicScalar>] {
        &self.irreducibles
    }

    pub fn character(&self, i: usize) -> &[CyclotomicScalar] {
        &self.irreducibles[i]
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    /// Index of the class of inverses.
    pub fn inverse_class(&self) -> &[usize] {
        &self.inverse_class
    }

    /// `(1/|G|) sum_C |C| a(C) conj(b(C))`.
    pub fn inner_product(
        &self,
        a: &[CyclotomicScalar],
        b: &[CyclotomicScalar],
    ) -> CyclotomicScalar {
        let mut acc = CyclotomicScalar::zero();
        for (k, c) in self.classes.iter().enumerate() {
            let term = &(&a[k] * &b[k].conj()) * &CyclotomicScalar::from_int(c.size as i64);
            acc = &acc + &term;
        }
        let n = CyclotomicScalar::from_int(self.order as i64);
        (&acc / &n).reduce_rational()
    }

    /// Decomposes a class function into irreducibles; `None` if some multiplicity is
    /// not a nonnegative integer.
    pub fn decompose(&self, f: &[CyclotomicScalar]) -> Option<Vec<u64>> {
        self.irreducibles
            .iter()
            .map(|chi| nonneg_integer(&self.inner_product(f, chi)))
            .collect()
    }

    /// Both orthogonality relations and `sum d^2 = |G|`.
    pub fn verify(&self) -> Result<()> {
        let r = self.classes.len();
        if self.irreducibles.len() != r {
            return Err(Error::CharacterTable(format!(
                "{} irreducibles for {} classes",
                self.irreducibles.len(),
                r
            )));
        }
        if self.classes.iter().map(|c| c.size).sum::<usize>() != self.order {
            return Err(Error::CharacterTable(
                "class sizes do not sum to the order".into(),
            ));
        }
        let sq: u64 = self.degrees.iter().map(|d| d * d).sum();
        if sq != self.order as u64 {
            return Err(Error::CharacterTable(format!(
                "sum of squared degrees {sq} differs from the order {}",
                self.order
            )));
        }
        for i in 0..r {
            for j in i..r {
                let ip = self.inner_product(&self.irreducibles[i], &self.irreducibles[j]);
                let want = if i == j {
                    CyclotomicScalar::one()
                } else {
                    CyclotomicScalar::zero()
                };
                if ip != want {
                    return Err(Error::CharacterTable(format!(
                        "rows {i} and {j} have inner product {ip}"
                    )));
                }
            }
        }
        for a in 0..r {
            for b in a..r {
                let mut acc = CyclotomicScalar::zero();
                for chi in &self.irreducibles {
                    acc = &acc + &(&chi[a] * &chi[b].conj());
                }
                let want = if a == b {
                    CyclotomicScalar::from_int((self.order / self.classes[a].size) as i64)
                } else {
                    CyclotomicScalar::zero()
                };
                if acc != want {
                    return Err(Error::CharacterTable(format!(
                        "columns {a} and {b} fail orthogonality"
                    )));
                }
            }
        }
        Ok(())
    }

    fn assemble(
        order: usize,
        exponent: u64,
        classes: Vec<ClassInfo>,
        inverse_class: Vec<usize>,
        mut rows: Vec<Vec<CyclotomicScalar>>,
    ) -> Result<Self> {
        for row in rows.iter_mut() {
            for v in row.iter_mut() {
                *v = v.clone().reduce_rational();
            }
        }
        sort_irreducibles(&mut rows);
        let degrees = rows
            .iter()
            .map(|row| {
                row.first()
                    .and_then(nonneg_integer)
                    .filter(|&d| d > 0)
                    .ok_or_else(|| Error::CharacterTable("degree is not a positive integer".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        let table = CharacterTable {
            order,
            exponent,
            classes,
            irreducibles: rows,
            degrees,
            inverse_class,
        };
        table.verify()?;
        Ok(table)
    }

    pub fn to_json(&self) -> TableJson {
        TableJson {
            exponent: self.exponent,
            classes: self
                .classes
                .iter()
                .map(|c| ClassJson {
                    rep: c.rep.images(),
                    size: c.size,
                })
                .collect(),
            irreducibles: self.irreducibles.clone(),
        }
    }

    /// Reads a table. With a group, classes are matched to the group's own class order,
    /// so the result is directly comparable with [`compute_character_table`].
    pub fn from_json(json: &TableJson, group: Option<&GroupHandle>) -> Result<Self> {
        let r = json.classes.len();
        if r == 0 {
            return Err(parse_err("classes", "no classes"));
        }
        if r > MAX_CLASSES {
            return Err(Error::CapExceeded {
                what: "conjugacy classes",
                cap: MAX_CLASSES,
                needed: r,
            });
        }
        for (i, row) in json.irreducibles.iter().enumerate() {
            if row.len() != r {
                return Err(parse_err(
                    &format!("irreducibles[{i}]"),
                    &format!("{} values for {} classes", row.len(), r),
                ));
            }
            for (k, v) in row.iter().enumerate() {
                if json.exponent == 0 || !json.exponent.is_multiple_of(v.order() as u64) {
                    return Err(parse_err(
                        &format!("irreducibles[{i}][{k}]"),
                        &format!("value {v} is not in Q(zeta_{})", json.exponent),
                    ));
                }
            }
        }
        let reps = json
            .classes
            .iter()
            .enumerate()
            .map(|(k, c)| {
                Permutation::from_images(&c.rep)
                    .map_err(|e| parse_err(&format!("classes[{k}].rep"), &e.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        let order: usize = json.classes.iter().map(|c| c.size).sum();

        let (perm, classes) = match group {
            Some(g) => {
                let part = g.classes();
                if part.len() != r {
                    return Err(parse_err(
                        "classes",
                        &format!("{} classes, the group has {}", r, part.len()),
                    ));
                }
                // perm[k] = json column holding group class k
                let mut perm = vec![usize::MAX; r];
                for (k, rep) in reps.iter().enumerate() {
                    let idx = g.index_of(rep).ok_or_else(|| {
                        parse_err(&format!("classes[{k}].rep"), "not an element of the group")
                    })?;
                    let c = part.class_of[idx];
                    if perm[c] != usize::MAX {
                        return Err(parse_err(
                            &format!("classes[{k}].rep"),
                            "two representatives of the same class",
                        ));
                    }
                    if part.classes[c].size() != json.classes[k].size {
                        return Err(parse_err(&format!("classes[{k}].size"), "wrong class size"));
                    }
                    perm[c] = k;
                }
                let classes = part
                    .classes
                    .iter()
                    .map(|c| ClassInfo {
                        rep: g.element(c.rep()).clone(),
                        size: c.size(),
                    })
                    .collect();
                (perm, classes)
            }
            None => {
                let classes = reps
                    .iter()
                    .zip(&json.classes)
                    .map(|(rep, c)| ClassInfo {
                        rep: rep.clone(),
                        size: c.size,
                    })
                    .collect();
                ((0..r).collect(), classes)
            }
        };
        let classes: Vec<ClassInfo> = classes;
        if !classes[0].rep.is_identity() || classes[0].size != 1 {
            return Err(parse_err("classes[0]", "first class must be the identity"));
        }
        let rows: Vec<Vec<CyclotomicScalar>> = json
            .irreducibles
            .iter()
            .map(|row| perm.iter().map(|&k| row[k].clone()).collect())
            .collect();
        let inverse_class = (0..r)
            .map(|k| {
                let inv = classes[k].rep.inverse();
                match group {
                    Some(g) => {
                        Ok(g.classes().class_of[g.index_of(&inv).expect("inverse in group")])
                    }
                    None => column_of_conjugate(&rows, k),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::assemble(order, json.exponent, classes, inverse_class, rows)
    }
}

/// Without group data the class of inverses is the column holding the conjugate values.
fn column_of_conjugate(rows: &[Vec<CyclotomicScalar>], k: usize) -> Result<usize> {
    let r = rows.first().map_or(0, |row| row.len());
    (0..r)
        .find(|&j| rows.iter().all(|row| row[j] == row[k].conj()))
        .ok_or_else(|| Error::CharacterTable(format!("no column conjugate to column {k}")))
}

fn parse_err(location: &str, message: &str) -> Error {
    Error::Parse {
        location: location.to_string(),
        message: message.to_string(),
    }
}

fn nonneg_integer(z: &CyclotomicScalar) -> Option<u64> {
    let q = z.to_rational()?;
    if !q.is_integer() || q.is_negative() {
        return None;
    }
    q.to_integer().to_u64()
}

fn is_trivial_row(row: &[CyclotomicScalar]) -> bool {
    row.iter().all(CyclotomicScalar::is_one)
}

fn sort_irreducibles(rows: &mut [Vec<CyclotomicScalar>]) {
    rows.sort_by(|a, b| {
        is_trivial_row(b)
            .cmp(&is_trivial_row(a))
            .then_with(|| {
                a.iter()
                    .zip(b)
                    .skip(1)
                    .map(|(x, y)| y.lex_cmp(x))
                    .find(|o| *o != Ordering::Equal)
                    .unwrap_or(Ordering::Equal)
            })
            .then_with(|| b[0].lex_cmp(&a[0]))
    });
}

/// Character table of `g` by Dixon–Schneider.
pub fn compute_character_table(g: &GroupHandle, cap_order: usize) -> Result<CharacterTable> {
    if g.order() > cap_order {
        return Err(Error::GroupTooLarge { cap: cap_order });
    }
    let part = g.classes();
    if part.len() > MAX_CLASSES {
        return Err(Error::CapExceeded {
            what: "conjugacy classes",
            cap: MAX_CLASSES,
            needed: part.len(),
        });
    }
    let (rows, _) = dixon::dixon_schneider(g)?;
    let classes = part
        .classes
        .iter()
        .map(|c| ClassInfo {
            rep: g.element(c.rep()).clone(),
            size: c.size(),
        })
        .collect();
    let inverse_class = part
        .classes
        .iter()
        .map(|c| part.class_of[g.inv(c.rep())])
        .collect();
    CharacterTable::assemble(g.order(), g.exponent(), classes, inverse_class, rows)
}

/// Character table of a subgroup, with classes in the order of `h.as_group()`.
pub fn subgroup_character_table(h: &SubgroupHandle, cap_order: usize) -> Result<CharacterTable> {
    compute_character_table(&h.as_group(), cap_order)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassJson {
    pub rep: Vec<u32>,
    pub size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    pub exponent: u64,
    pub classes: Vec<ClassJson>,
    pub irreducibles: Vec<Vec<CyclotomicScalar>>,
}

/// For each class of `H` (in the order of `h.as_group()`), the class of `G` containing it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassFusion {
    pub map: Vec<usize>,
}

pub fn class_fusion(h: &SubgroupHandle) -> ClassFusion {
    let g = h.parent();
    let hg = h.as_group();
    let map = hg
        .classes()
        .classes
        .iter()
        .map(|c| {
            let x = h.members()[c.rep()];
            let k = g.classes().class_of[x];
            debug_assert!(g.classes().classes[k].members.contains(&x));
            k
        })
        .collect();
    ClassFusion { map }
}

/// Restriction multiplicities: `entries[i][j]` is the multiplicity of the `i`-th
/// subgroup irreducible in the restriction of the `j`-th group irreducible.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u64>>", into = "Vec<Vec<u64>>")]
pub struct InclusionMatrix {
    entries: Vec<Vec<u64>>,
}

impl InclusionMatrix {
    /// Checks shape and that no row or column vanishes.
    pub fn new(entries: Vec<Vec<u64>>) -> Result<Self> {
        let p = entries.len();
        if p == 0 {
            return Err(Error::NotInclusionMatrix("no rows".into()));
        }
        let q = entries[0].len();
        if q == 0 || entries.iter().any(|r| r.len() != q) {
            return Err(Error::NotInclusionMatrix(
                "rows of unequal or zero length".into(),
            ));
        }
        if let Some(i) = entries.iter().position(|r| r.iter().all(|&x| x == 0)) {
            return Err(Error::NotInclusionMatrix(format!("row {i} is zero")));
        }
        if let Some(j) = (0..q).find(|&j| entries.iter().all(|r| r[j] == 0)) {
            return Err(Error::NotInclusionMatrix(format!("column {j} is zero")));
        }
        Ok(InclusionMatrix { entries })
    }

    pub fn from_exact(m: &ExactMatrix) -> Result<Self> {
        let rows = m
            .to_i64_rows()
            .filter(|rows| rows.iter().flatten().all(|&x| x >= 0))
            .ok_or_else(|| {
                Error::NotInclusionMatrix("entries must be nonnegative integers".into())
            })?;
        Self::new(
            rows.into_iter()
                .map(|r| r.into_iter().map(|x| x as u64).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.entries[0].len()
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<u64>] {
        &self.entries
    }

    pub fn to_exact(&self) -> ExactMatrix {
        ExactMatrix::from_i64(
            &self
                .entries
                .iter()
                .map(|r| r.iter().map(|&x| x as i64).collect())
                .collect::<Vec<_>>(),
        )
    }

    /// `sum_i m_ij deg(phi_i) = deg(chi_j)` for every column.
    pub fn column_identity_holds(&self, sub_degrees: &[u64], degrees: &[u64]) -> bool {
        sub_degrees.len() == self.rows()
            && degrees.len() == self.cols()
            && (0..self.cols()).all(|j| {
                (0..self.rows())
                    .map(|i| self.entries[i][j] * sub_degrees[i])
                    .sum::<u64>()
                    == degrees[j]
            })
    }

    /// Whether some row and column permutation turns `self` into `other`.
    pub fn is_permutation_equivalent(&self, other: &Self) -> bool {
        if self.rows() != other.rows() || self.cols() != other.cols() {
            return false;
        }
        let key = |m: &Self| {
            let mut rows: Vec<Vec<u64>> = m
                .entries
                .iter()
                .map(|r| {
                    let mut r = r.clone();
                    r.sort_unstable();
                    r
                })
                .collect();
            rows.sort();
            rows
        };
        if key(self) != key(&other.transposed()) && key(self) != key(other) {
            return false;
        }
        let q = self.cols();
        let mut perm: Vec<usize> = (0..q).collect();
        let target = {
            let mut rows = other.entries.clone();
            rows.sort();
            rows
        };
        loop {
            let mut rows: Vec<Vec<u64>> = self
                .entries
                .iter()
                .map(|r| perm.iter().map(|&j| r[j]).collect())
                .collect();
            rows.sort();
            if rows == target {
                return true;
            }
            if !next_permutation(&mut perm) {
                return false;
            }
        }
    }

    pub fn transposed(&self) -> Self {
        let (p, q) = (self.rows(), self.cols());
        InclusionMatrix {
            entries: (0..q)
                .map(|j| (0..p).map(|i| self.entries[i][j]).collect())
                .collect(),
        }
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl TryFrom<Vec<Vec<u64>>> for InclusionMatrix {
    type Error = Error;
    fn try_from(v: Vec<Vec<u64>>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<InclusionMatrix> for Vec<Vec<u64>> {
    fn from(m: InclusionMatrix) -> Self {
        m.entries
    }
}

/// Restriction of a class function of `G` to the classes of `H`.
pub fn restrict(values: &[CyclotomicScalar], fusion: &ClassFusion) -> Vec<CyclotomicScalar> {
    fusion.map.iter().map(|&k| values[k].clone()).collect()
}

/// `m_ij = <chi_j restricted to H, phi_i>`.
pub fn inclusion_matrix(
    tab_g: &CharacterTable,
    tab_h: &CharacterTable,
    fusion: &ClassFusion,
) -> Result<InclusionMatrix> {
    if fusion.map.len() != tab_h.num_classes() {
        return Err(Error::CharacterTable(
            "fusion does not match the subgroup table".into(),
        ));
    }
    let (p, q) = (tab_h.irreducibles.len(), tab_g.irreducibles.len());
    let mut entries = vec![vec![0u64; q]; p];
    for (j, chi) in tab_g.irreducibles.iter().enumerate() {
        let res = restrict(chi, fusion);
        for (i, phi) in tab_h.irreducibles.iter().enumerate() {
            let ip = tab_h.inner_product(&res, phi);
            entries[i][j] = nonneg_integer(&ip).ok_or_else(|| {
                Error::CharacterTable(format!(
                    "restriction multiplicity ({i},{j}) is {ip}, not a nonnegative integer"
                ))
            })?;
        }
    }
    let m = InclusionMatrix::new(entries)?;
    if !m.column_identity_holds(&tab_h.degrees, &tab_g.degrees) {
        return Err(Error::CharacterTable(
            "column dimension identity fails".into(),
        ));
    }
    Ok(m)
}

/// Number of right cosets `Hx` fixed by a representative of each class of `G`.
pub fn permutation_character(h: &SubgroupHandle) -> Vec<u64> {
    let g = h.parent();
    let transversal = h.right_transversal();
    g.classes()
        .classes
        .iter()
        .map(|c| {
            let y = c.rep();
            // Hx y = Hx  iff  x y x^-1 in H
            transversal
                .iter()
                .filter(|&&x| h.contains(g.mul(g.mul(x, y), g.inv(x))))
                .count() as u64
        })
        .collect()
}

/// Class function with integer values.
pub fn int_class_function(values: &[u64]) -> Vec<CyclotomicScalar> {
    values
        .iter()
        .map(|&v| CyclotomicScalar::from_int(v as i64))
        .collect()
}

/// The trivial-row multiplicities of `M` expand the induced trivial character; checks it
/// against the coset count.
pub fn frobenius_reciprocity_holds(
    tab_g: &CharacterTable,
    m: &InclusionMatrix,
    perm_char: &[u64],
) -> bool {
    let mut acc = vec![CyclotomicScalar::zero(); tab_g.num_classes()];
    for (j, chi) in tab_g.irreducibles.iter().enumerate() {
        let mult = CyclotomicScalar::from_int(m.get(0, j) as i64);
        for (a, v) in acc.iter_mut().zip(chi) {
            *a = &*a + &(&mult * v);
        }
    }
    acc == int_class_function(perm_char)
}

/// Rational value of a class function entry, if it has one.
pub fn rational_value(z: &CyclotomicScalar) -> Option<BigRational> {
    z.to_rational()
}

/// `|C cap H|` for each class `C` of `G`.
pub fn class_intersection_sizes(h: &SubgroupHandle) -> Vec<usize> {
    h.parent()
        .classes()
        .classes
        .iter()
        .map(|c| c.members.iter().filter(|&&x| h.contains(x)).count())
        .collect()
}

/// `<a, a>` is 1 exactly for irreducible characters.
pub fn is_irreducible(tab: &CharacterTable, values: &[CyclotomicScalar]) -> bool {
    tab.inner_product(values, values).to_rational() == Some(BigRational::one())
        && values
            .first()
            .and_then(CyclotomicScalar::to_rational)
            .is_some_and(|d| d > BigRational::zero())
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::permgroup::enumerate_group;

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

    fn s3() -> Arc<GroupHandle> {
        group(3, &[&[&[1, 2]], &[&[1, 2, 3]]])
    }

    #[test]
    fn s3_table() {
        let t = compute_character_table(&s3(), 1000).unwrap();
        assert_eq!(t.degrees(), &[1, 2, 1]);
        assert_eq!(t.class_sizes(), vec![1, 3, 2]);
        let sign: Vec<CyclotomicScalar> = [1, -1, 1].iter().map(|&v| v.into()).collect();
        assert_eq!(t.character(2), sign.as_slice());
    }

    #[test]
    fn c2_table() {
        let g = group(2, &[&[&[1, 2]]]);
        let t = compute_character_table(&g, 10).unwrap();
        assert_eq!(t.degrees(), &[1, 1]);
        assert_eq!(t.character(1)[1], CyclotomicScalar::from_int(-1));
    }

    #[test]
    fn a5_table() {
        let g = group(5, &[&[&[1, 2, 3]], &[&[1, 2, 3, 4, 5]]]);
        let t = compute_character_table(&g, 100).unwrap();
        let mut d = t.degrees().to_vec();
        d.sort_unstable();
        assert_eq!(d, vec![1, 3, 3, 4, 5]);
        // some value is irrational (golden ratio)
        assert!(t
            .irreducibles()
            .iter()
            .flatten()
            .any(|v| v.to_rational().is_none()));
        assert!(compute_character_table(&g, 59).is_err());
    }

    #[test]
    fn fusion_examples() {
        let g = s3();
        assert_eq!(class_fusion(&SubgroupHandle::whole(&g)).map, vec![0, 1, 2]);
        let s2 = sub(&g, &[&[&[1, 2]]]);
        let f = class_fusion(&s2);
        let sizes: Vec<usize> = f
            .map
            .iter()
            .map(|&k| g.classes().classes[k].size())
            .collect();
        assert_eq!(sizes, vec![1, 3]);
        let a3 = sub(&g, &[&[&[1, 2, 3]]]);
        let f = class_fusion(&a3);
        assert_eq!(f.map.len(), 3);
        assert_eq!(f.map[1], f.map[2]);
        assert_eq!(g.classes().classes[f.map[1]].size(), 2);
    }

    #[test]
    fn s2_in_s3_matrix() {
        let g = s3();
        let h = sub(&g, &[&[&[1, 2]]]);
        let tg = compute_character_table(&g, 100).unwrap();
        let th = subgroup_character_table(&h, 100).unwrap();
        let m = inclusion_matrix(&tg, &th, &class_fusion(&h)).unwrap();
        assert_eq!(m.entries(), &[vec![1, 1, 0], vec![0, 1, 1]]);
        let pc = permutation_character(&h);
        assert_eq!(pc, vec![3, 1, 0]);
        assert!(frobenius_reciprocity_holds(&tg, &m, &pc));
        assert_eq!(
            permutation_character(&SubgroupHandle::trivial(&g)),
            vec![6, 0, 0]
        );
        assert_eq!(
            permutation_character(&SubgroupHandle::whole(&g)),
            vec![1, 1, 1]
        );
    }

    #[test]
    fn a4_in_a5_matrix() {
        let g = group(5, &[&[&[1, 2, 3]], &[&[1, 2, 3, 4, 5]]]);
        let h = sub(&g, &[&[&[1, 2, 3]], &[&[1, 2], &[3, 4]]]);
        assert_eq!(h.order(), 12);
        let m = inclusion_matrix(
            &compute_character_table(&g, 100).unwrap(),
            &subgroup_character_table(&h, 100).unwrap(),
            &class_fusion(&h),
        )
        .unwrap();
        let expected = InclusionMatrix::new(vec![
            vec![1, 1, 0, 0, 0],
            vec![0, 0, 1, 0, 0],
            vec![0, 0, 1, 0, 0],
            vec![0, 1, 1, 1, 1],
        ])
        .unwrap();
        assert!(m.is_permutation_equivalent(&expected), "{:?}", m);
    }

    #[test]
    fn d8_in_s4_matrix() {
        let g = group(4, &[&[&[1, 2]], &[&[1, 2, 3, 4]]]);
        let h = sub(&g, &[&[&[1, 2, 3, 4]], &[&[1, 3]]]);
        assert_eq!(h.order(), 8);
        let m = inclusion_matrix(
            &compute_character_table(&g, 100).unwrap(),
            &subgroup_character_table(&h, 100).unwrap(),
            &class_fusion(&h),
        )
        .unwrap();
        let expected = InclusionMatrix::new(vec![
            vec![1, 1, 0, 0, 0],
            vec![0, 1, 1, 0, 0],
            vec![0, 0, 0, 1, 0],
            vec![0, 0, 0, 1, 1],
            vec![0, 0, 0, 0, 1],
        ])
        .unwrap();
        assert!(m.is_permutation_equivalent(&expected), "{:?}", m);
    }

    #[test]
    fn json_round_trip() {
        let g = group(4, &[&[&[1, 2]], &[&[1, 2, 3, 4]]]);
        let t = compute_character_table(&g, 100).unwrap();
        let text = serde_json::to_string(&t.to_json()).unwrap();
        let back: TableJson = serde_json::from_str(&text).unwrap();
        let t2 = CharacterTable::from_json(&back, Some(&g)).unwrap();
        assert_eq!(t2.irreducibles(), t.irreducibles());
        let t3 = CharacterTable::from_json(&back, None).unwrap();
        assert_eq!(t3.degrees(), t.degrees());
    }

    #[test]
    fn rejects_bad_matrices() {
        assert!(InclusionMatrix::new(vec![vec![1, 0], vec![0, 0]]).is_err());
        assert!(InclusionMatrix::new(vec![vec![1, 0], vec![1, 0]]).is_err());
        assert!(InclusionMatrix::new(vec![]).is_err());
    }
}
