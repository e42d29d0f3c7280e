use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::{Arc, OnceLock};

use super::perm::Permutation;
use crate::error::{Error, Result};

/// Default cap on group orders.
pub const DEFAULT_ORDER_CAP: usize = 20160;

const TABLE_LIMIT: usize = 512;

/// A finite permutation group with every element enumerated.
///
/// Elements are kept in lexicographic order of their image arrays, so index 0 is the
/// identity and element indices double as canonical names.
pub struct GroupHandle {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    inverse: Vec<usize>,
    table: Option<Vec<u32>>,
    classes: OnceLock<ClassPartition>,
}

impl fmt::Debug for GroupHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupHandle")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

/// Enumerates `<generators>` on `degree` points by breadth-first closure.
pub fn enumerate_group(
    degree: usize,
    generators: &[Permutation],
    cap: usize,
) -> Result<GroupHandle> {
    if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
        return Err(Error::malformed(format!(
            "generator {} has degree {}, expected {}",
            g,
            g.degree(),
            degree
        )));
    }
    let id = Permutation::identity(degree);
    let mut seen: HashMap<Permutation, ()> = HashMap::new();
    seen.insert(id.clone(), ());
    let mut queue = VecDeque::from([id]);
    let mut all = Vec::new();
    while let Some(x) = queue.pop_front() {
        for s in generators {
            let y = x.compose(s);
            if !seen.contains_key(&y) {
                if seen.len() >= cap {
                    return Err(Error::GroupTooLarge { cap });
                }
                seen.insert(y.clone(), ());
                queue.push_back(y);
            }
        }
        all.push(x);
    }
    Ok(GroupHandle::from_elements(degree, generators.to_vec(), all))
}

impl GroupHandle {
    /// Builds a handle from a complete, closed element list (any order).
    pub(crate) fn from_elements(
        degree: usize,
        generators: Vec<Permutation>,
        mut elements: Vec<Permutation>,
    ) -> Self {
        elements.sort();
        elements.dedup();
        let index: HashMap<Permutation, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let inverse = elements.iter().map(|p| index[&p.inverse()]).collect();
        let table = (elements.len() <= TABLE_LIMIT).then(|| {
            let n = elements.len();
            let mut t = Vec::with_capacity(n * n);
            for a in &elements {
                for b in &elements {
                    t.push(index[&a.compose(b)] as u32);
                }
            }
            t
        });
        GroupHandle {
            degree,
            generators,
            elements,
            index,
            inverse,
            table,
            classes: OnceLock::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.order() + b] as usize,
            None => self.index[&self.elements[a].compose(&self.elements[b])],
        }
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `g^{-1} x g`.
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn power(&self, x: usize, mut e: u64) -> usize {
        let mut acc = self.identity();
        let mut base = x;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn element_order(&self, x: usize) -> u64 {
        self.elements[x].order()
    }

    /// Least common multiple of element orders.
    pub fn exponent(&self) -> u64 {
        self.elements
            .iter()
            .fold(1u64, |acc, p| num::integer::lcm(acc, p.order()))
    }

    pub fn generator_indices(&self) -> Vec<usize> {
        self.generators.iter().map(|g| self.index[g]).collect()
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generator_indices();
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Conjugacy classes, computed once.
    pub fn classes(&self) -> &ClassPartition {
        self.classes.get_or_init(|| ClassPartition::compute(self))
    }
}

/// One conjugacy class: members in canonical order, the first being the representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub members: Vec<usize>,
}

impl ConjugacyClass {
    pub fn rep(&self) -> usize {
        self.members[0]
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Partition of a group into conjugacy classes, ordered by representative.
#[derive(Clone, Debug)]
pub struct ClassPartition {
    pub classes: Vec<ConjugacyClass>,
    pub class_of: Vec<usize>,
}

impl ClassPartition {
    fn compute(g: &GroupHandle) -> Self {
        let n = g.order();
        let gens = g.generator_indices();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let id = classes.len();
            class_of[x] = id;
            let mut members = vec![x];
            let mut stack = vec![x];
            while let Some(y) = stack.pop() {
                for &s in &gens {
                    let z = g.conj(y, s);
                    if class_of[z] == usize::MAX {
                        class_of[z] = id;
                        members.push(z);
                        stack.push(z);
                    }
                }
            }
            members.sort_unstable();
            classes.push(ConjugacyClass { members });
        }
        ClassPartition { classes, class_of }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.size()).collect()
    }
}

/// A subgroup of an enumerated group, stored as sorted parent element indices.
#[derive(Clone)]
pub struct SubgroupHandle {
    parent: Arc<GroupHandle>,
    members: Vec<usize>,
    mask: Vec<bool>,
}

impl fmt::Debug for SubgroupHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup(order {}, gens [", self.order())?;
        for (i, g) in self.generators().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", self.parent.element(*g))?;
        }
        write!(f, "])")
    }
}

impl PartialEq for SubgroupHandle {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for SubgroupHandle {}

impl std::hash::Hash for SubgroupHandle {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl SubgroupHandle {
    /// Checks closure before accepting `members`.
    pub fn from_members(parent: &Arc<GroupHandle>, mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        let mut mask = vec![false; parent.order()];
        for &m in &members {
            if m >= parent.order() {
                return Err(Error::malformed("subgroup member index out of range"));
            }
            mask[m] = true;
        }
        if members.first() != Some(&0) {
            return Err(Error::malformed("subgroup must contain the identity"));
        }
        for &a in &members {
            if !mask[parent.inv(a)] {
                return Err(Error::malformed("subset is not closed under inverses"));
            }
            for &b in &members {
                if !mask[parent.mul(a, b)] {
                    return Err(Error::malformed("subset is not closed under products"));
                }
            }
        }
        if !parent.order().is_multiple_of(members.len()) {
            return Err(Error::malformed(
                "subgroup order does not divide group order",
            ));
        }
        Ok(SubgroupHandle {
            parent: parent.clone(),
            members,
            mask,
        })
    }

    pub(crate) fn from_mask_unchecked(parent: &Arc<GroupHandle>, mask: Vec<bool>) -> Self {
        let members = mask
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| b.then_some(i))
            .collect();
        SubgroupHandle {
            parent: parent.clone(),
            members,
            mask,
        }
    }

    /// The subgroup generated by the given parent elements.
    pub fn generated(parent: &Arc<GroupHandle>, gens: &[usize]) -> Self {
        let mut mask = vec![false; parent.order()];
        mask[0] = true;
        let mut stack = vec![0usize];
        while let Some(x) = stack.pop() {
            for &s in gens {
                let y = parent.mul(x, s);
                if !mask[y] {
                    mask[y] = true;
                    stack.push(y);
                }
            }
        }
        Self::from_mask_unchecked(parent, mask)
    }

    /// The subgroup generated by permutations given as 1-based image lists.
    pub fn from_image_lists(parent: &Arc<GroupHandle>, gens: &[Vec<u32>]) -> Result<Self> {
        let idx = gens
            .iter()
            .map(|g| {
                let p = Permutation::from_images(g)?;
                parent.index_of(&p).ok_or_else(|| {
                    Error::malformed(format!("subgroup generator {} is not in the group", p))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::generated(parent, &idx))
    }

    pub fn whole(parent: &Arc<GroupHandle>) -> Self {
        Self::from_mask_unchecked(parent, vec![true; parent.order()])
    }

    pub fn trivial(parent: &Arc<GroupHandle>) -> Self {
        let mut mask = vec![false; parent.order()];
        mask[0] = true;
        Self::from_mask_unchecked(parent, mask)
    }

    pub fn parent(&self) -> &Arc<GroupHandle> {
        &self.parent
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.order()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.mask[x]
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order() == self.parent.order()
    }

    pub fn is_subgroup_of(&self, other: &Self) -> bool {
        self.members.iter().all(|&m| other.contains(m))
    }

    /// A small generating set chosen greedily in canonical order.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut cur = vec![false; self.parent.order()];
        cur[0] = true;
        for &m in &self.members {
            if !cur[m] {
                gens.push(m);
                cur = Self::generated(&self.parent, &gens).mask;
            }
        }
        gens
    }

    pub fn generator_images(&self) -> Vec<Vec<u32>> {
        self.generators()
            .iter()
            .map(|&g| self.parent.element(g).images())
            .collect()
    }

    /// The subgroup as a group in its own right; element `i` of the result is
    /// `self.members()[i]` in the parent.
    pub fn as_group(&self) -> GroupHandle {
        let gens = self
            .generators()
            .iter()
            .map(|&g| self.parent.element(g).clone())
            .collect();
        let elems = self
            .members
            .iter()
            .map(|&m| self.parent.element(m).clone())
            .collect();
        GroupHandle::from_elements(self.parent.degree(), gens, elems)
    }

    /// `H^g = g^{-1} H g`.
    pub fn conjugate(&self, g: usize) -> Self {
        let mut mask = vec![false; self.parent.order()];
        for &h in &self.members {
            mask[self.parent.conj(h, g)] = true;
        }
        Self::from_mask_unchecked(&self.parent, mask)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mask = self
            .mask
            .iter()
            .zip(&other.mask)
            .map(|(&a, &b)| a && b)
            .collect();
        Self::from_mask_unchecked(&self.parent, mask)
    }

    pub fn is_normal(&self) -> bool {
        self.parent.generator_indices().iter().all(|&g| {
            self.members
                .iter()
                .all(|&h| self.mask[self.parent.conj(h, g)])
        })
    }

    pub fn normalizer(&self) -> Self {
        let gens = self.generators();
        let mask = (0..self.parent.order())
            .map(|g| gens.iter().all(|&h| self.mask[self.parent.conj(h, g)]))
            .collect();
        Self::from_mask_unchecked(&self.parent, mask)
    }

    /// Elements of the parent commuting with every element of `self`.
    pub fn centralizer(&self) -> Self {
        let gens = self.generators();
        let p = &self.parent;
        let mask = (0..p.order())
            .map(|g| gens.iter().all(|&h| p.mul(g, h) == p.mul(h, g)))
            .collect();
        Self::from_mask_unchecked(p, mask)
    }

    /// Least representatives of the right cosets `Hx`, ascending.
    pub fn right_transversal(&self) -> Vec<usize> {
        let p = &self.parent;
        let mut seen = vec![false; p.order()];
        let mut reps = Vec::new();
        for x in 0..p.order() {
            if seen[x] {
                continue;
            }
            reps.push(x);
            for &h in &self.members {
                seen[p.mul(h, x)] = true;
            }
        }
        reps
    }

    /// Right coset index of each parent element, numbered as in [`Self::right_transversal`].
    pub fn right_coset_labels(&self) -> Vec<usize> {
        let p = &self.parent;
        let mut label = vec![usize::MAX; p.order()];
        let mut next = 0;
        for x in 0..p.order() {
            if label[x] != usize::MAX {
                continue;
            }
            for &h in &self.members {
                label[p.mul(h, x)] = next;
            }
            next += 1;
        }
        label
    }
}
