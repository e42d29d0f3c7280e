//! Finite-dimensional Hopf algebras given by structure constants.
//!
//! Elements are coefficient vectors in a fixed basis `b_0..b_{d-1}`. Linear maps act on row
//! vectors, so the matrix of right multiplication by `h` has `b_i h` as its `i`-th row.

mod analysis;
mod json;
mod module;

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactalg::{is_zero_vector, unit_vector, ExactMatrix, Scalar, Subspace, Vector};
use crate::permgroup::{GroupHandle, SubgroupHandle};

pub use analysis::*;
pub use json::*;
pub use module::*;

/// Sparse element: basis index to nonzero coefficient.
pub type Sparse = BTreeMap<usize, Scalar>;
/// Sparse element of `H ⊗ H`.
pub type Tensor2 = BTreeMap<(usize, usize), Scalar>;

pub(crate) fn add_to<K: Ord>(map: &mut BTreeMap<K, Scalar>, k: K, v: Scalar) {
    if v.is_zero() {
        return;
    }
    match map.entry(k) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(v);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let s = e.get() + &v;
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

pub(crate) fn sparse_of(v: &[Scalar]) -> Sparse {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub(crate) fn dense_of(s: &Sparse, dim: usize) -> Vector {
    let mut v = vec![Scalar::zero(); dim];
    for (&i, x) in s {
        v[i] = x.clone();
    }
    v
}

/// Hopf algebra with exact structure constants; the axioms are checked on construction.
#[derive(Clone)]
pub struct HopfAlgebraData {
    dim: usize,
    field_order: u32,
    labels: Vec<String>,
    /// `mult[i][j]` is `b_i b_j`.
    mult: Vec<Vec<Sparse>>,
    unit: Vector,
    /// `comult[i]` is `Δ(b_i)`.
    comult: Vec<Tensor2>,
    counit: Vector,
    /// Row `i` is `S(b_i)`.
    antipode: ExactMatrix,
    /// Basis indices generating the algebra; used to cut down module equations.
    generators: Vec<usize>,
}

impl fmt::Debug for HopfAlgebraData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HopfAlgebraData")
            .field("dim", &self.dim)
            .field("field_order", &self.field_order)
            .field("labels", &self.labels)
            .finish_non_exhaustive()
    }
}

pub struct HopfParts {
    pub field_order: u32,
    pub labels: Vec<String>,
    pub mult: Vec<Vec<Sparse>>,
    pub unit: Vector,
    pub comult: Vec<Tensor2>,
    pub counit: Vector,
    pub antipode: ExactMatrix,
    /// Algebra generators as basis indices; `None` means the whole basis.
    pub generators: Option<Vec<usize>>,
}

impl HopfAlgebraData {
    pub fn new(parts: HopfParts) -> Result<Self> {
        let dim = parts.labels.len();
        let bad = |m: &str| Err(Error::HopfAxiom(m.to_string()));
        if dim == 0 {
            return bad("dimension zero");
        }
        if parts.mult.len() != dim || parts.mult.iter().any(|r| r.len() != dim) {
            return bad("multiplication table has the wrong shape");
        }
        if parts.comult.len() != dim || parts.unit.len() != dim || parts.counit.len() != dim {
            return bad("comultiplication, unit or counit has the wrong length");
        }
        if parts.antipode.rows() != dim || parts.antipode.cols() != dim {
            return bad("antipode has the wrong shape");
        }
        let out_of_range = parts
            .mult
            .iter()
            .flatten()
            .any(|s| s.keys().any(|&k| k >= dim))
            || parts
                .comult
                .iter()
                .any(|t| t.keys().any(|&(a, b)| a >= dim || b >= dim));
        if out_of_range {
            return bad("basis index out of range");
        }
        let h = HopfAlgebraData {
            dim,
            field_order: parts.field_order,
            labels: parts.labels,
            mult: parts.mult,
            unit: parts.unit,
            comult: parts.comult,
            counit: parts.counit,
            antipode: parts.antipode,
            generators: parts.generators.unwrap_or_else(|| (0..dim).collect()),
        };
        h.verify_axioms()?;
        Ok(h)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field_order(&self) -> u32 {
        self.field_order
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn counit_vector(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn antipode(&self) -> &ExactMatrix {
        &self.antipode
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn basis(&self, i: usize) -> Vector {
        unit_vector(self.dim, i)
    }

    pub fn mult_basis(&self, i: usize, j: usize) -> &Sparse {
        &self.mult[i][j]
    }

    pub fn comult_basis(&self, i: usize) -> &Tensor2 {
        &self.comult[i]
    }

    pub fn mul_sparse(&self, a: &Sparse, b: &Sparse) -> Sparse {
        let mut out = Sparse::new();
        for (&i, x) in a {
            for (&j, y) in b {
                let xy = x * y;
                for (&k, c) in &self.mult[i][j] {
                    add_to(&mut out, k, &xy * c);
                }
            }
        }
        out
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        dense_of(&self.mul_sparse(&sparse_of(a), &sparse_of(b)), self.dim)
    }

    pub fn comult_sparse(&self, a: &Sparse) -> Tensor2 {
        let mut out = Tensor2::new();
        for (&i, x) in a {
            for (&k, c) in &self.comult[i] {
                add_to(&mut out, k, x * c);
            }
        }
        out
    }

    pub fn comult(&self, a: &[Scalar]) -> Tensor2 {
        self.comult_sparse(&sparse_of(a))
    }

    pub fn counit(&self, a: &[Scalar]) -> Scalar {
        crate::exactalg::dot(a, &self.counit)
    }

    pub fn apply_antipode(&self, a: &[Scalar]) -> Vector {
        self.antipode.left_apply(a)
    }

    pub fn tensor_mul(&self, x: &Tensor2, y: &Tensor2) -> Tensor2 {
        let mut out = Tensor2::new();
        for (&(a, b), s) in x {
            for (&(c, d), t) in y {
                let st = s * t;
                for (&p, u) in &self.mult[a][c] {
                    let stu = &st * u;
                    for (&q, v) in &self.mult[b][d] {
                        add_to(&mut out, (p, q), &stu * v);
                    }
                }
            }
        }
        out
    }

    /// Matrix of `v ↦ v h`.
    pub fn right_mult_matrix(&self, h: &[Scalar]) -> ExactMatrix {
        let hs = sparse_of(h);
        ExactMatrix::from_rows(
            (0..self.dim)
                .map(|i| {
                    dense_of(
                        &self.mul_sparse(&Sparse::from([(i, Scalar::one())]), &hs),
                        self.dim,
                    )
                })
                .collect(),
        )
    }

    /// Matrix of `v ↦ h v`.
    pub fn left_mult_matrix(&self, h: &[Scalar]) -> ExactMatrix {
        let hs = sparse_of(h);
        ExactMatrix::from_rows(
            (0..self.dim)
                .map(|i| {
                    dense_of(
                        &self.mul_sparse(&hs, &Sparse::from([(i, Scalar::one())])),
                        self.dim,
                    )
                })
                .collect(),
        )
    }

    /// Associativity, unit, coassociativity, counit, bialgebra and antipode axioms.
    pub fn verify_axioms(&self) -> Result<()> {
        let d = self.dim;
        let fail = |m: String| Err(Error::HopfAxiom(m));
        let unit = sparse_of(&self.unit);
        for i in 0..d {
            let bi = Sparse::from([(i, Scalar::one())]);
            if self.mul_sparse(&unit, &bi) != bi || self.mul_sparse(&bi, &unit) != bi {
                return fail(format!("unit law fails at {}", self.labels[i]));
            }
        }
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let lhs =
                        self.mul_sparse(&self.mult[i][j], &Sparse::from([(k, Scalar::one())]));
                    let rhs =
                        self.mul_sparse(&Sparse::from([(i, Scalar::one())]), &self.mult[j][k]);
                    if lhs != rhs {
                        return fail(format!(
                            "associativity fails at ({}, {}, {})",
                            self.labels[i], self.labels[j], self.labels[k]
                        ));
                    }
                }
            }
        }
        for i in 0..d {
            // (Δ ⊗ id)Δ = (id ⊗ Δ)Δ
            let mut left: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
            let mut right: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
            for (&(a, b), c) in &self.comult[i] {
                for (&(x, y), e) in &self.comult[a] {
                    add_to(&mut left, (x, y, b), c * e);
                }
                for (&(x, y), e) in &self.comult[b] {
                    add_to(&mut right, (a, x, y), c * e);
                }
            }
            if left != right {
                return fail(format!("coassociativity fails at {}", self.labels[i]));
            }
            // (ε ⊗ id)Δ = id = (id ⊗ ε)Δ
            let mut l = Sparse::new();
            let mut r = Sparse::new();
            for (&(a, b), c) in &self.comult[i] {
                add_to(&mut l, b, c * &self.counit[a]);
                add_to(&mut r, a, c * &self.counit[b]);
            }
            let bi = Sparse::from([(i, Scalar::one())]);
            if l != bi || r != bi {
                return fail(format!("counit law fails at {}", self.labels[i]));
            }
        }
        if !self.counit(&self.unit).is_one()
            || self.comult(&self.unit) != {
                let u = sparse_of(&self.unit);
                let mut t = Tensor2::new();
                for (&a, x) in &u {
                    for (&b, y) in &u {
                        add_to(&mut t, (a, b), x * y);
                    }
                }
                t
            }
        {
            return fail("unit is not grouplike".into());
        }
        for i in 0..d {
            for j in 0..d {
                let prod = &self.mult[i][j];
                let eps = self.counit(&dense_of(prod, d));
                if eps != &self.counit[i] * &self.counit[j] {
                    return fail(format!(
                        "counit not multiplicative at ({}, {})",
                        self.labels[i], self.labels[j]
                    ));
                }
                if self.comult_sparse(prod) != self.tensor_mul(&self.comult[i], &self.comult[j]) {
                    return fail(format!(
                        "comultiplication not multiplicative at ({}, {})",
                        self.labels[i], self.labels[j]
                    ));
                }
            }
        }
        let srows: Vec<Sparse> = (0..d).map(|i| sparse_of(self.antipode.row(i))).collect();
        for i in 0..d {
            let mut l = Sparse::new();
            let mut r = Sparse::new();
            for (&(a, b), c) in &self.comult[i] {
                let bb = Sparse::from([(b, c.clone())]);
                let ba = Sparse::from([(a, c.clone())]);
                for (k, v) in self.mul_sparse(&srows[a], &bb) {
                    add_to(&mut l, k, v);
                }
                for (k, v) in self.mul_sparse(&ba, &srows[b]) {
                    add_to(&mut r, k, v);
                }
            }
            let want: Sparse = sparse_of(
                &self
                    .unit
                    .iter()
                    .map(|u| u * &self.counit[i])
                    .collect::<Vec<_>>(),
            );
            if l != want || r != want {
                return fail(format!("antipode axiom fails at {}", self.labels[i]));
            }
        }
        Ok(())
    }

    /// Centre `Z(H)`.
    pub fn center(&self) -> Subspace {
        // h b_j = b_j h for all j: constraints on the coordinates of h
        let mut cons = Vec::new();
        for &j in &self.generators {
            let bj = self.basis(j);
            let l = self.right_mult_matrix(&bj);
            let r = self.left_mult_matrix(&bj);
            let diff = l.sub(&r);
            for c in 0..self.dim {
                let col = diff.column(c);
                if !is_zero_vector(&col) {
                    cons.push(col);
                }
            }
        }
        Subspace::span(self.dim, self.orth(cons))
    }

    fn orth(&self, constraints: Vec<Vector>) -> Vec<Vector> {
        Subspace::span(self.dim, constraints).orthogonal_kernel()
    }

    /// Smallest subalgebra containing the given elements and the unit.
    pub fn generated_subalgebra(&self, gens: &[Vector]) -> Subspace {
        let mut span = Subspace::span(self.dim, std::iter::once(self.unit.clone()));
        for g in gens {
            span.insert(g.clone());
        }
        loop {
            let basis = span.basis().to_vec();
            let mut grew = false;
            for a in &basis {
                for g in gens {
                    if span.insert(self.mul(a, g)) {
                        grew = true;
                    }
                }
            }
            if !grew {
                return span;
            }
        }
    }

    /// `span{ x y : x ∈ a, y ∈ b }`.
    pub fn product_span(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut s = Subspace::zero(self.dim);
        for x in a.basis() {
            for y in b.basis() {
                if s.is_full() {
                    return s;
                }
                s.insert(self.mul(x, y));
            }
        }
        s
    }

    /// `{ x - ε(x) 1 : x ∈ s }`.
    pub fn augmentation_part(&self, s: &Subspace) -> Subspace {
        Subspace::span(
            self.dim,
            s.basis().iter().map(|x| {
                let e = self.counit(x);
                x.iter()
                    .zip(&self.unit)
                    .map(|(a, u)| a - &(&e * u))
                    .collect::<Vector>()
            }),
        )
    }

    pub fn full_space(&self) -> Subspace {
        Subspace::full(self.dim)
    }
}

/// A Hopf subalgebra, given by a basis of its span inside `H`.
#[derive(Clone, Debug)]
pub struct SubalgebraEmbedding {
    pub name: String,
    pub space: Subspace,
}

impl SubalgebraEmbedding {
    /// Checks closure under product, unit, comultiplication and antipode.
    pub fn new(h: &HopfAlgebraData, name: &str, rows: Vec<Vector>) -> Result<Self> {
        if rows.iter().any(|r| r.len() != h.dim()) {
            return Err(Error::malformed(format!(
                "subalgebra {name}: vector of wrong length"
            )));
        }
        let space = Subspace::span(h.dim(), rows);
        let fail = |m: &str| Err(Error::HopfAxiom(format!("subalgebra {name}: {m}")));
        if !space.contains(h.unit()) {
            return fail("does not contain the unit");
        }
        for x in space.basis() {
            for y in space.basis() {
                if !space.contains(&h.mul(x, y)) {
                    return fail("not closed under multiplication");
                }
            }
            if !space.contains(&h.apply_antipode(x)) {
                return fail("not closed under the antipode");
            }
            if !tensor_in(&h.comult(x), &space, &space, h.dim()) {
                return fail("comultiplication leaves R ⊗ R");
            }
        }
        if !h.dim().is_multiple_of(space.dim()) {
            return fail("dimension does not divide dim H");
        }
        Ok(SubalgebraEmbedding {
            name: name.to_string(),
            space,
        })
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn basis(&self) -> &[Vector] {
        self.space.basis()
    }

    pub fn trivial(h: &HopfAlgebraData) -> Self {
        SubalgebraEmbedding {
            name: "k1".into(),
            space: Subspace::span(h.dim(), [h.unit().to_vec()]),
        }
    }

    pub fn whole(h: &HopfAlgebraData) -> Self {
        SubalgebraEmbedding {
            name: "H".into(),
            space: h.full_space(),
        }
    }
}

/// Whether a tensor lies in `A ⊗ B`: each row of its coefficient matrix in `B`, each column in `A`.
pub(crate) fn tensor_in(t: &Tensor2, a: &Subspace, b: &Subspace, dim: usize) -> bool {
    let mut rows: BTreeMap<usize, Vector> = BTreeMap::new();
    let mut cols: BTreeMap<usize, Vector> = BTreeMap::new();
    for (&(i, j), c) in t {
        rows.entry(i).or_insert_with(|| vec![Scalar::zero(); dim])[j] = c.clone();
        cols.entry(j).or_insert_with(|| vec![Scalar::zero(); dim])[i] = c.clone();
    }
    rows.values().all(|r| b.contains(r)) && cols.values().all(|c| a.contains(c))
}

/// `kG` with `Δ(g) = g ⊗ g`, `S(g) = g⁻¹`.
pub fn build_group_algebra(g: &GroupHandle) -> HopfAlgebraData {
    let n = g.order();
    let mult = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| Sparse::from([(g.mul(i, j), Scalar::one())]))
                .collect()
        })
        .collect();
    let comult = (0..n)
        .map(|i| Tensor2::from([((i, i), Scalar::one())]))
        .collect();
    let mut antipode = ExactMatrix::zeros(n, n);
    for i in 0..n {
        antipode.set(i, g.inv(i), Scalar::one());
    }
    let gens: Vec<usize> = g.generator_indices();
    HopfAlgebraData::new(HopfParts {
        field_order: 1,
        labels: g.elements().iter().map(|p| p.to_string()).collect(),
        mult,
        unit: unit_vector(n, g.identity()),
        comult,
        counit: vec![Scalar::one(); n],
        antipode,
        generators: Some(if gens.is_empty() { vec![0] } else { gens }),
    })
    .expect("group algebra axioms")
}

/// `kH ⊆ kG` for a subgroup `H`.
pub fn group_subalgebra(kg: &HopfAlgebraData, h: &SubgroupHandle) -> SubalgebraEmbedding {
    SubalgebraEmbedding {
        name: "kH".into(),
        space: Subspace::span(
            kg.dim(),
            h.members().iter().map(|&x| unit_vector(kg.dim(), x)),
        ),
    }
}

/// Small quantum group with its Hopf subalgebras `⟨K, F⟩`, `⟨K, E⟩` and `⟨K⟩`.
#[derive(Clone, Debug)]
pub struct SmallQuantumGroup {
    pub n: usize,
    pub hopf: HopfAlgebraData,
    /// `⟨K, F⟩`.
    pub r1: SubalgebraEmbedding,
    /// `⟨K, E⟩`.
    pub r2: SubalgebraEmbedding,
    /// `⟨K⟩`.
    pub b: SubalgebraEmbedding,
}

impl SmallQuantumGroup {
    /// Index of `K^a E^b F^c`.
    pub fn index(&self, a: usize, b: usize, c: usize) -> usize {
        pbw_index(self.n, a, b, c)
    }

    pub fn element(&self, a: usize, b: usize, c: usize) -> Vector {
        unit_vector(self.hopf.dim(), self.index(a, b, c))
    }

    pub fn subalgebra(&self, name: &str) -> Option<&SubalgebraEmbedding> {
        match name {
            "R1" => Some(&self.r1),
            "R2" => Some(&self.r2),
            "B" => Some(&self.b),
            _ => None,
        }
    }
}

fn pbw_index(n: usize, a: usize, b: usize, c: usize) -> usize {
    a + n * b + n * n * c
}

fn pbw_label(a: usize, b: usize, c: usize) -> String {
    let part = |s: &str, e: usize| match e {
        0 => String::new(),
        1 => s.to_string(),
        _ => format!("{s}^{e}"),
    };
    let l = format!("{}{}{}", part("K", a), part("E", b), part("F", c));
    if l.is_empty() {
        "1".into()
    } else {
        l
    }
}

/// `ū_q(sl_2)` for odd `n >= 3` at `q = ζ_n`:
/// `Kⁿ = 1`, `Eⁿ = Fⁿ = 0`, `KE = q²EK`, `KF = q⁻²FK`, `EF - FE = (K - K⁻¹)/(q - q⁻¹)`.
///
/// For `n = 2` the 8-dimensional algebra with `K² = 1`, `E² = F² = 0`, `EF = FE`,
/// `KE = -EK`, `KF = -FK`. In both cases `Δ(K) = K ⊗ K`, `Δ(E) = E ⊗ 1 + K ⊗ E`,
/// `Δ(F) = F ⊗ K⁻¹ + 1 ⊗ F`.
pub fn build_small_quantum_group(n: usize) -> Result<SmallQuantumGroup> {
    if n != 2 && (n < 3 || n.is_multiple_of(2)) {
        return Err(Error::malformed(format!(
            "small quantum group needs n = 2 or odd n >= 3, got {n}"
        )));
    }
    let (order, lambda, kappa) = if n == 2 {
        (1u32, Scalar::from_int(-1), Scalar::zero())
    } else {
        let q = Scalar::root_of_unity(n as u32, 1);
        let qi = Scalar::root_of_unity(n as u32, -1);
        (n as u32, &q * &q, (&q - &qi).inv().expect("q is not ±1"))
    };
    let lambda_inv = lambda.inv().expect("λ is a unit");
    let lpow = |e: i64| -> Scalar {
        if e >= 0 {
            lambda.pow(e as u64)
        } else {
            lambda_inv.pow((-e) as u64)
        }
    };
    let dim = n * n * n;
    let idx = |a: usize, b: usize, c: usize| pbw_index(n, a, b, c);
    let decode = |i: usize| (i % n, (i / n) % n, i / (n * n));

    let right_k = |x: &Sparse| -> Sparse {
        let mut out = Sparse::new();
        for (&i, v) in x {
            let (a, b, c) = decode(i);
            add_to(
                &mut out,
                idx((a + 1) % n, b, c),
                v * &lpow(c as i64 - b as i64),
            );
        }
        out
    };
    let right_f = |x: &Sparse| -> Sparse {
        let mut out = Sparse::new();
        for (&i, v) in x {
            let (a, b, c) = decode(i);
            if c + 1 < n {
                add_to(&mut out, idx(a, b, c + 1), v.clone());
            }
        }
        out
    };
    // F^c E in normal form
    let mut fce: Vec<Sparse> = vec![Sparse::from([(idx(0, 1, 0), Scalar::one())])];
    for c in 1..n {
        let mut next = right_f(&fce[c - 1]);
        add_to(
            &mut next,
            idx(1, 0, c - 1),
            -&(&kappa * &lpow(c as i64 - 1)),
        );
        add_to(
            &mut next,
            idx(n - 1, 0, c - 1),
            &kappa * &lpow(-(c as i64 - 1)),
        );
        fce.push(next);
    }
    let right_e = |x: &Sparse| -> Sparse {
        let mut out = Sparse::new();
        for (&i, v) in x {
            let (a, b, c) = decode(i);
            for (&j, w) in &fce[c] {
                let (a2, b2, c2) = decode(j);
                if b + b2 >= n {
                    continue;
                }
                let coeff = &(v * w) * &lpow(-((b * a2) as i64));
                add_to(&mut out, idx((a + a2) % n, b + b2, c2), coeff);
            }
        }
        out
    };
    let mut mult = vec![vec![Sparse::new(); dim]; dim];
    for (i, row) in mult.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate() {
            let (a, b, c) = decode(j);
            let mut x = Sparse::from([(i, Scalar::one())]);
            for _ in 0..a {
                x = right_k(&x);
            }
            for _ in 0..b {
                x = right_e(&x);
            }
            for _ in 0..c {
                x = right_f(&x);
            }
            *slot = x;
        }
    }
    let one = idx(0, 0, 0);
    let k = idx(1, 0, 0);
    let kinv = idx(n - 1, 0, 0);
    let e = idx(0, 1, 0);
    let f = idx(0, 0, 1);
    let unit_scalar = Scalar::one;

    let tmul = |x: &Tensor2, y: &Tensor2| -> Tensor2 {
        let mut out = Tensor2::new();
        for (&(a, b), s) in x {
            for (&(c, d), t) in y {
                let st = s * t;
                for (&p, u) in &mult[a][c] {
                    for (&q, w) in &mult[b][d] {
                        add_to(&mut out, (p, q), &(&st * u) * w);
                    }
                }
            }
        }
        out
    };
    let smul = |x: &Sparse, y: &Sparse| -> Sparse {
        let mut out = Sparse::new();
        for (&a, s) in x {
            for (&b, t) in y {
                for (&p, u) in &mult[a][b] {
                    add_to(&mut out, p, &(s * t) * u);
                }
            }
        }
        out
    };
    let dk = Tensor2::from([((k, k), unit_scalar())]);
    let de = Tensor2::from([((e, one), unit_scalar()), ((k, e), unit_scalar())]);
    let df = Tensor2::from([((f, kinv), unit_scalar()), ((one, f), unit_scalar())]);
    let sk = Sparse::from([(kinv, unit_scalar())]);
    let se = smul(
        &Sparse::from([(kinv, -unit_scalar())]),
        &Sparse::from([(e, unit_scalar())]),
    );
    let sf = smul(
        &Sparse::from([(f, -unit_scalar())]),
        &Sparse::from([(k, unit_scalar())]),
    );

    let mut comult = Vec::with_capacity(dim);
    let mut antipode = ExactMatrix::zeros(dim, dim);
    let mut counit = vec![Scalar::zero(); dim];
    let mut labels = Vec::with_capacity(dim);
    for i in 0..dim {
        let (a, b, c) = decode(i);
        labels.push(pbw_label(a, b, c));
        if b == 0 && c == 0 {
            counit[i] = Scalar::one();
        }
        let mut t = Tensor2::from([((one, one), unit_scalar())]);
        for _ in 0..a {
            t = tmul(&t, &dk);
        }
        for _ in 0..b {
            t = tmul(&t, &de);
        }
        for _ in 0..c {
            t = tmul(&t, &df);
        }
        comult.push(t);
        // S(K^a E^b F^c) = S(F)^c S(E)^b S(K)^a
        let mut s = Sparse::from([(one, unit_scalar())]);
        for _ in 0..c {
            s = smul(&s, &sf);
        }
        for _ in 0..b {
            s = smul(&s, &se);
        }
        for _ in 0..a {
            s = smul(&s, &sk);
        }
        for (&j, v) in &s {
            antipode.set(i, j, v.clone());
        }
    }
    let hopf = HopfAlgebraData::new(HopfParts {
        field_order: order,
        labels,
        mult,
        unit: unit_vector(dim, one),
        comult,
        counit,
        antipode,
        generators: Some(vec![k, e, f]),
    })?;
    let span_of = |pred: &dyn Fn(usize, usize, usize) -> bool| -> Vec<Vector> {
        (0..dim)
            .filter(|&i| {
                let (a, b, c) = decode(i);
                pred(a, b, c)
            })
            .map(|i| unit_vector(dim, i))
            .collect()
    };
    let r1 = SubalgebraEmbedding::new(&hopf, "R1", span_of(&|_, b, _| b == 0))?;
    let r2 = SubalgebraEmbedding::new(&hopf, "R2", span_of(&|_, _, c| c == 0))?;
    let b = SubalgebraEmbedding::new(&hopf, "B", span_of(&|_, b, c| b == 0 && c == 0))?;
    Ok(SmallQuantumGroup { n, hopf, r1, r2, b })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{vec_add, vec_sub};
    use crate::permgroup::{enumerate_group, Permutation};

    #[test]
    fn group_algebras() {
        let triv = enumerate_group(1, &[], 10).unwrap();
        assert_eq!(build_group_algebra(&triv).dim(), 1);
        let s3 = enumerate_group(
            3,
            &[
                Permutation::from_cycles(3, &[&[1, 2]]).unwrap(),
                Permutation::from_cycles(3, &[&[1, 2, 3]]).unwrap(),
            ],
            10,
        )
        .unwrap();
        let h = build_group_algebra(&s3);
        assert_eq!(h.dim(), 6);
        assert_eq!(h.center().dim(), 3);
    }

    #[test]
    fn eight_dimensional() {
        let u = build_small_quantum_group(2).unwrap();
        assert_eq!(u.hopf.dim(), 8);
        assert_eq!(u.r2.dim(), 4);
        let (e, f) = (u.element(0, 1, 0), u.element(0, 0, 1));
        assert_eq!(u.hopf.mul(&e, &f), u.hopf.mul(&f, &e));
        let k = u.element(1, 0, 0);
        let ke = u.hopf.mul(&k, &e);
        let ek = u.hopf.mul(&e, &k);
        assert_eq!(ke, ek.iter().map(|x| -x).collect::<Vec<_>>());
        assert_eq!(u.hopf.labels()[7], "KEF");
    }

    #[test]
    fn odd_small_quantum_group() {
        let u = build_small_quantum_group(3).unwrap();
        assert_eq!(u.hopf.dim(), 27);
        assert_eq!(u.r1.dim(), 9);
        assert_eq!(u.r2.dim(), 9);
        assert_eq!(u.b.dim(), 3);
        assert!(build_small_quantum_group(4).is_err());
    }

    #[test]
    fn eight_dimensional_pair() {
        let u = build_small_quantum_group(2).unwrap();
        let h = &u.hopf;
        let q = quotient_module(h, &u.r2).unwrap();
        assert_eq!(q.dim(), 2);
        assert_eq!(q.labels(h), vec!["1", "F"]);
        let chain = annihilator_chain(h, &q, 4).unwrap();
        let e = u.element(0, 1, 0);
        let eh = h.product_span(&Subspace::span(8, [e.clone()]), &h.full_space());
        assert_eq!(eh.dim(), 4);
        // Ann Q = EH + k(1 - K)F is not stable under S; EH is reached one step later
        let extra = vec_sub(&u.element(0, 0, 1), &u.element(1, 0, 1));
        assert_eq!(chain.ideals[0].space, eh.sum(&Subspace::span(8, [extra])));
        assert!(!chain.ideals[0].hopf_ideal);
        assert!(chain.ideals[1].hopf_ideal);
        assert_eq!(chain.ideals[1].space, eh);
        assert_eq!(chain.ell_q, Some(2));
        assert_eq!(chain.hopf_core_ideal.as_ref(), Some(&eh));
        let ir = integrals_and_modular(h, &u.r2, &q).unwrap();
        let one_plus_k: Vector = vec_add(h.unit(), &u.element(1, 0, 0));
        assert!(proportional(&ir.t_r, &h.mul(&e, &one_plus_k)));
        assert!(!ir.frobenius);
        assert!(ir.q_integral_basis.is_empty());
        assert!(integral_image_check(h, &q, &ir.t_r));
        let tr = trace_ideals(h, &q, &ir.t_r, 3, 4096).unwrap();
        assert_eq!(tr.ideals[0].dim(), 3);
        let expected = Subspace::span(8, [ir.t_r.clone(), u.element(0, 1, 1), u.element(1, 1, 1)]);
        assert_eq!(tr.ideals[0], expected);
        let id = idealizer_and_end_q(h, &u.r2, &q).unwrap();
        assert_eq!(id.t.dim(), 7);
        assert_eq!(id.dim_end_q, 1);
        assert!(!id.normal);
        for n in 1..=3 {
            let lit = literal_annihilator(h, &q, n, DEFAULT_TENSOR_CAP).unwrap();
            assert_eq!(lit, chain.ideals[(n - 1).min(1)].space);
        }
    }

    #[test]
    fn fundamental_isomorphism_and_ulbrich() {
        let u = build_small_quantum_group(2).unwrap();
        let h = &u.hopf;
        assert!(fundamental_isomorphism_check(h));
        for r in [&u.r1, &u.r2, &u.b] {
            let q = quotient_module(h, r).unwrap();
            let rep = ulbrich_verify(h, r, &q, &RModule::regular(h, r), 4096).unwrap();
            assert!(rep.bijective);
            assert_eq!(rep.dim_x, 8);
            assert_eq!(rep.dim_coinvariants, r.dim());
            let triv = ulbrich_verify(h, r, &q, &RModule::trivial(h, r), 4096).unwrap();
            assert_eq!(triv.dim_x, q.dim());
            assert!(triv.bijective);
        }
        let ld = linear_disjoint_check(h, &u.r1, &u.r2).unwrap();
        assert!(ld.linear_disjoint);
        assert_eq!(ld.map_iso, Some(true));
    }

    #[test]
    fn group_pair_hopf_data() {
        let s3 = enumerate_group(
            3,
            &[
                Permutation::from_cycles(3, &[&[1, 2]]).unwrap(),
                Permutation::from_cycles(3, &[&[1, 2, 3]]).unwrap(),
            ],
            10,
        )
        .unwrap();
        let kg = build_group_algebra(&s3);
        let s3 = std::sync::Arc::new(s3);
        let s2 = SubgroupHandle::generated(
            &s3,
            &[
                s3.index_of(&Permutation::from_cycles(3, &[&[1, 2]]).unwrap())
                    .unwrap(),
            ],
        );
        let r = group_subalgebra(&kg, &s2);
        let q = quotient_module(&kg, &r).unwrap();
        assert_eq!(q.dim(), 3);
        let ir = integrals_and_modular(&kg, &r, &q).unwrap();
        assert!(ir.frobenius);
        assert!(ir.semisimple_extension);
        let chain = annihilator_chain(&kg, &q, 5).unwrap();
        assert_eq!(chain.hopf_core_ideal.unwrap().dim(), 0);
        let id = idealizer_and_end_q(&kg, &r, &q).unwrap();
        assert_eq!(id.dim_end_q, 2);
        let tr = trace_ideals(&kg, &q, &ir.t_r, 3, 4096).unwrap();
        // the sign block is missing from Q
        assert_eq!(tr.dims(), vec![5, 6, 6]);
        assert_eq!(chain.ell_q, Some(2));
        assert_eq!(tr.l_q, Some(2));
        let f = faithful_check(&kg, &q);
        assert_eq!(f.faithful, f.central_meet_zero);
    }
}
