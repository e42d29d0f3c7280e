//! Right modules, the quotient module `Q = H/R⁺H`, tensor powers and ideals.

use std::collections::BTreeMap;

use super::{add_to, dense_of, sparse_of, HopfAlgebraData, Sparse, SubalgebraEmbedding, Tensor2};
use crate::error::{Error, Result};
use crate::exactalg::{ExactMatrix, Scalar, Subspace, Vector};

/// Default cap on `dim Q^{⊗n}` for explicit tensor powers.
pub const DEFAULT_TENSOR_CAP: usize = 4096;

/// Row-sparse matrix; rows act on the left of row vectors (`v ↦ v A`).
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Sparse>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            entries: vec![Sparse::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for (i, row) in m.entries.iter_mut().enumerate() {
            row.insert(i, Scalar::one());
        }
        m
    }

    pub fn from_dense(a: &ExactMatrix) -> Self {
        SparseMatrix {
            rows: a.rows(),
            cols: a.cols(),
            entries: (0..a.rows()).map(|i| sparse_of(a.row(i))).collect(),
        }
    }

    pub fn to_dense(&self) -> ExactMatrix {
        ExactMatrix::from_rows(
            self.entries
                .iter()
                .map(|r| dense_of(r, self.cols))
                .collect(),
        )
    }

    /// `v A`.
    pub fn left_apply(&self, v: &Sparse) -> Sparse {
        let mut out = Sparse::new();
        for (&i, c) in v {
            for (&j, a) in &self.entries[i] {
                add_to(&mut out, j, c * a);
            }
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        SparseMatrix {
            rows: self.rows,
            cols: rhs.cols,
            entries: self.entries.iter().map(|r| rhs.left_apply(r)).collect(),
        }
    }

    pub fn add_scaled(&mut self, other: &Self, s: &Scalar) {
        for (row, orow) in self.entries.iter_mut().zip(&other.entries) {
            for (&j, a) in orow {
                add_to(row, j, s * a);
            }
        }
    }

    /// Kronecker product; index `(x, y)` becomes `x * other.rows + y`.
    pub fn kron(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        for (x, ra) in self.entries.iter().enumerate() {
            for (y, rb) in other.entries.iter().enumerate() {
                let row = &mut out.entries[x * other.rows + y];
                for (&i, a) in ra {
                    for (&j, b) in rb {
                        row.insert(i * other.cols + j, a * b);
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|r| r.is_empty())
    }

    pub fn nnz(&self) -> usize {
        self.entries.iter().map(|r| r.len()).sum()
    }
}

/// Right `H`-module: `action[j]` is the matrix of `v ↦ v·b_j`.
#[derive(Clone, Debug)]
pub struct ModuleAction {
    pub dim: usize,
    pub action: Vec<SparseMatrix>,
}

impl ModuleAction {
    /// Matrix of an arbitrary element.
    pub fn action_of(&self, h: &[Scalar]) -> SparseMatrix {
        let mut m = SparseMatrix::zeros(self.dim, self.dim);
        for (j, c) in h.iter().enumerate() {
            if !c.is_zero() {
                m.add_scaled(&self.action[j], c);
            }
        }
        m
    }

    pub fn act(&self, v: &Sparse, j: usize) -> Sparse {
        self.action[j].left_apply(v)
    }

    /// Unit acts as the identity and `A_i A_j = A_{b_i b_j}`.
    pub fn verify(&self, h: &HopfAlgebraData) -> Result<()> {
        if self.action.len() != h.dim() {
            return Err(Error::HopfAxiom(
                "module action has the wrong length".into(),
            ));
        }
        if self.action_of(h.unit()) != SparseMatrix::identity(self.dim) {
            return Err(Error::HopfAxiom("unit does not act as the identity".into()));
        }
        for i in 0..h.dim() {
            for j in 0..h.dim() {
                let lhs = self.action[i].mul(&self.action[j]);
                let rhs = self.action_of(&dense_of(h.mult_basis(i, j), h.dim()));
                if lhs != rhs {
                    return Err(Error::HopfAxiom(format!(
                        "module action fails (v·b_{i})·b_{j} = v·(b_{i}b_{j})"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// `H` acting on itself by right multiplication.
pub fn regular_module(h: &HopfAlgebraData) -> ModuleAction {
    let n = h.dim();
    let action = (0..n)
        .map(|j| SparseMatrix {
            rows: n,
            cols: n,
            entries: (0..n).map(|i| h.mult_basis(i, j).clone()).collect(),
        })
        .collect();
    ModuleAction { dim: n, action }
}

/// Complement basis of a subspace made of the earliest possible unit vectors.
#[derive(Clone, Debug)]
pub struct QuotientBasis {
    reversed: Subspace,
    /// Ascending indices of the unit vectors spanning the quotient.
    pub lifts: Vec<usize>,
}

impl QuotientBasis {
    pub fn new(sub: &Subspace) -> Self {
        let n = sub.ambient();
        let reversed = Subspace::span(n, sub.basis().iter().map(|v| reverse(v)));
        let mut lifts: Vec<usize> = reversed
            .non_pivots()
            .into_iter()
            .map(|c| n - 1 - c)
            .collect();
        lifts.reverse();
        QuotientBasis { reversed, lifts }
    }

    pub fn dim(&self) -> usize {
        self.lifts.len()
    }

    /// Coordinates of the class of `v` in the basis given by `lifts`.
    pub fn coords(&self, v: &[Scalar]) -> Vector {
        let mut c = self.reversed.quotient_coords(&reverse(v));
        c.reverse();
        c
    }

    fn coords_of_unit(&self, i: usize) -> Sparse {
        let mut e = vec![Scalar::zero(); self.reversed.ambient()];
        e[i] = Scalar::one();
        sparse_of(&self.coords(&e))
    }
}

fn reverse(v: &[Scalar]) -> Vector {
    v.iter().rev().cloned().collect()
}

/// `H/I` for a right ideal `I`.
pub fn quotient_by_right_ideal(h: &HopfAlgebraData, ideal: &Subspace) -> ModuleAction {
    let qb = QuotientBasis::new(ideal);
    let proj: Vec<Sparse> = (0..h.dim()).map(|i| qb.coords_of_unit(i)).collect();
    let q = qb.dim();
    let action = (0..h.dim())
        .map(|j| SparseMatrix {
            rows: q,
            cols: q,
            entries: qb
                .lifts
                .iter()
                .map(|&a| project_sparse(&proj, h.mult_basis(a, j)))
                .collect(),
        })
        .collect();
    ModuleAction { dim: q, action }
}

fn project_sparse(proj: &[Sparse], v: &Sparse) -> Sparse {
    let mut out = Sparse::new();
    for (&i, c) in v {
        for (&k, p) in &proj[i] {
            add_to(&mut out, k, c * p);
        }
    }
    out
}

/// `M ⊗ N` with `(m ⊗ n)·h = m·h₁ ⊗ n·h₂`.
pub fn tensor_modules(h: &HopfAlgebraData, m: &ModuleAction, n: &ModuleAction) -> ModuleAction {
    let action = (0..h.dim())
        .map(|i| {
            let mut acc = SparseMatrix::zeros(m.dim * n.dim, m.dim * n.dim);
            for (&(j, k), c) in h.comult_basis(i) {
                acc.add_scaled(&m.action[j].kron(&n.action[k]), c);
            }
            acc
        })
        .collect();
    ModuleAction {
        dim: m.dim * n.dim,
        action,
    }
}

/// `Q^{⊗n}` with explicit action matrices.
pub fn tensor_power_action(
    h: &HopfAlgebraData,
    q: &ModuleAction,
    n: usize,
    cap: usize,
) -> Result<ModuleAction> {
    if n == 0 {
        return Err(Error::malformed("tensor power needs n >= 1"));
    }
    let needed = (q.dim as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if needed > cap as u128 {
        return Err(Error::CapExceeded {
            what: "tensor power dimension",
            cap,
            needed: needed.min(usize::MAX as u128) as usize,
        });
    }
    let mut acc = q.clone();
    for _ in 1..n {
        acc = tensor_modules(h, &acc, q);
    }
    Ok(acc)
}

/// `Ann M = { h : M·h = 0 }`.
pub fn annihilator(h: &HopfAlgebraData, m: &ModuleAction) -> Subspace {
    // h = Σ c_j b_j kills M iff Σ c_j A_j[a][b] = 0 at every position
    let mut positions: BTreeMap<(usize, usize), Vector> = BTreeMap::new();
    for (j, a) in m.action.iter().enumerate() {
        for (r, row) in a.entries.iter().enumerate() {
            for (&c, x) in row {
                positions
                    .entry((r, c))
                    .or_insert_with(|| vec![Scalar::zero(); h.dim()])[j] = x.clone();
            }
        }
    }
    let mut cons = Subspace::zero(h.dim());
    for v in positions.into_values() {
        if cons.is_full() {
            break;
        }
        cons.insert(v);
    }
    Subspace::span(h.dim(), cons.orthogonal_kernel())
}

/// A subspace of `H` with its ideal properties.
#[derive(Clone, Debug)]
pub struct IdealSubspace {
    pub space: Subspace,
    pub right_ideal: bool,
    pub two_sided: bool,
    pub hopf_ideal: bool,
}

impl IdealSubspace {
    pub fn classify(h: &HopfAlgebraData, space: Subspace) -> Self {
        let gens: Vec<Vector> = h.generators().iter().map(|&g| h.basis(g)).collect();
        let right_ideal = space
            .basis()
            .iter()
            .all(|x| gens.iter().all(|g| space.contains(&h.mul(x, g))));
        let left = space
            .basis()
            .iter()
            .all(|x| gens.iter().all(|g| space.contains(&h.mul(g, x))));
        let two_sided = right_ideal && left;
        let hopf_ideal = two_sided && is_hopf_ideal_space(h, &space);
        IdealSubspace {
            space,
            right_ideal,
            two_sided,
            hopf_ideal,
        }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

/// `ε(I) = 0`, `S(I) ⊆ I` and `(π ⊗ π)Δ(I) = 0` for `π : H → H/I`.
fn is_hopf_ideal_space(h: &HopfAlgebraData, space: &Subspace) -> bool {
    if space.basis().iter().any(|x| !h.counit(x).is_zero()) {
        return false;
    }
    if space
        .basis()
        .iter()
        .any(|x| !space.contains(&h.apply_antipode(x)))
    {
        return false;
    }
    let qb = QuotientBasis::new(space);
    let proj: Vec<Sparse> = (0..h.dim()).map(|i| qb.coords_of_unit(i)).collect();
    space
        .basis()
        .iter()
        .all(|x| project_tensor(&proj, &h.comult(x)).is_empty())
}

fn project_tensor(proj: &[Sparse], t: &Tensor2) -> Tensor2 {
    let mut out = Tensor2::new();
    for (&(i, k), c) in t {
        for (&x, a) in &proj[i] {
            for (&y, b) in &proj[k] {
                add_to(&mut out, (x, y), &(c * a) * b);
            }
        }
    }
    out
}

/// `Q = H/R⁺H` as a right module coalgebra.
#[derive(Clone, Debug)]
pub struct QuotientModule {
    pub r_plus: Subspace,
    pub r_plus_h: Subspace,
    /// Basis index of `H` lifting each basis vector of `Q`.
    pub lifts: Vec<usize>,
    /// Row `i` is the image of `b_i` in `Q`.
    pub projection: ExactMatrix,
    pub module: ModuleAction,
    /// `Δ_Q` of each basis vector.
    pub coproduct: Vec<Tensor2>,
    pub counit: Vector,
}

impl QuotientModule {
    pub fn dim(&self) -> usize {
        self.module.dim
    }

    /// Image of `x ∈ H`.
    pub fn project(&self, x: &[Scalar]) -> Vector {
        self.projection.left_apply(x)
    }

    /// Labels of the lifted basis, e.g. `1̄`, `F̄`.
    pub fn labels(&self, h: &HopfAlgebraData) -> Vec<String> {
        self.lifts.iter().map(|&i| h.labels()[i].clone()).collect()
    }
}

/// Builds `Q = H/R⁺H` and checks the module coalgebra axioms.
pub fn quotient_module(h: &HopfAlgebraData, r: &SubalgebraEmbedding) -> Result<QuotientModule> {
    let r_plus = h.augmentation_part(&r.space);
    let r_plus_h = h.product_span(&r_plus, &h.full_space());
    let dim_q = h.dim() - r_plus_h.dim();
    if dim_q * r.dim() != h.dim() {
        return Err(Error::assertion(format!(
            "dim Q · dim R = {} · {} differs from dim H = {}",
            dim_q,
            r.dim(),
            h.dim()
        )));
    }
    let module = quotient_by_right_ideal(h, &r_plus_h);
    let qb = QuotientBasis::new(&r_plus_h);
    let lifts = qb.lifts.clone();
    let proj: Vec<Sparse> = (0..h.dim()).map(|i| qb.coords_of_unit(i)).collect();
    let projection = ExactMatrix::from_rows(proj.iter().map(|p| dense_of(p, dim_q)).collect());
    for x in r_plus_h.basis() {
        if !h.counit(x).is_zero() {
            return Err(Error::assertion("ε does not vanish on R⁺H"));
        }
        if !project_tensor(&proj, &h.comult(x)).is_empty() {
            return Err(Error::assertion("Δ does not descend to Q"));
        }
    }
    let coproduct: Vec<Tensor2> = lifts
        .iter()
        .map(|&a| project_tensor(&proj, h.comult_basis(a)))
        .collect();
    let counit: Vector = lifts
        .iter()
        .map(|&a| h.counit_vector()[a].clone())
        .collect();
    let q = QuotientModule {
        r_plus,
        r_plus_h,
        lifts,
        projection,
        module,
        coproduct,
        counit,
    };
    verify_quotient(h, &q)?;
    Ok(q)
}

fn verify_quotient(h: &HopfAlgebraData, q: &QuotientModule) -> Result<()> {
    q.module.verify(h)?;
    let dq = q.dim();
    for a in 0..dq {
        let qa: Sparse = [(a, Scalar::one())].into_iter().collect();
        for j in 0..h.dim() {
            let img = q.module.act(&qa, j);
            // Δ_Q(q·h) = q₁h₁ ⊗ q₂h₂
            let mut lhs = Tensor2::new();
            for (&b, c) in &img {
                for (&(x, y), d) in &q.coproduct[b] {
                    add_to(&mut lhs, (x, y), c * d);
                }
            }
            let mut rhs = Tensor2::new();
            for (&(x, y), c) in &q.coproduct[a] {
                for (&(j1, j2), d) in h.comult_basis(j) {
                    let cd = c * d;
                    let u = q
                        .module
                        .act(&[(x, Scalar::one())].into_iter().collect(), j1);
                    let v = q
                        .module
                        .act(&[(y, Scalar::one())].into_iter().collect(), j2);
                    for (&s, us) in &u {
                        for (&t, vt) in &v {
                            add_to(&mut rhs, (s, t), &(&cd * us) * vt);
                        }
                    }
                }
            }
            if lhs != rhs {
                return Err(Error::assertion("Q is not a module coalgebra: Δ_Q(q·h)"));
            }
            let mut e = Scalar::zero();
            for (&b, c) in &img {
                e = &e + &(c * &q.counit[b]);
            }
            if e != &q.counit[a] * &h.counit_vector()[j] {
                return Err(Error::assertion("Q is not a module coalgebra: ε_Q(q·h)"));
            }
        }
    }
    let mut u = Scalar::zero();
    for (c, e) in q.project(h.unit()).iter().zip(&q.counit) {
        u = &u + &(c * e);
    }
    if !u.is_one() {
        return Err(Error::assertion("ε_Q(1̄) is not 1"));
    }
    Ok(())
}

/// Descending chain `Ann Q ⊇ Ann Q^{⊗2} ⊇ ⋯` up to the first Hopf ideal.
#[derive(Clone, Debug)]
pub struct AnnihilatorChain {
    pub ideals: Vec<IdealSubspace>,
    /// Least `n` at which the annihilator is a Hopf ideal, if reached.
    pub ell_q: Option<usize>,
    /// When `ell_q` is unknown: it exceeds this.
    pub lower_bound: Option<usize>,
    pub hopf_core_ideal: Option<Subspace>,
}

impl AnnihilatorChain {
    pub fn dims(&self) -> Vec<usize> {
        self.ideals.iter().map(|i| i.dim()).collect()
    }
}

/// Uses `Ann(M ⊗ Q) = Ann(H/Ann M ⊗ Q)`, so each step lives in dimension at most
/// `dim H · dim Q` whatever `n` is.
pub fn annihilator_chain(
    h: &HopfAlgebraData,
    q: &QuotientModule,
    n_max: usize,
) -> Result<AnnihilatorChain> {
    let mut ideals: Vec<IdealSubspace> = Vec::new();
    let mut current = annihilator(h, &q.module);
    for n in 1..=n_max {
        let ideal = IdealSubspace::classify(h, current.clone());
        if !ideal.two_sided {
            return Err(Error::assertion(format!(
                "Ann Q^⊗{n} is not a two-sided ideal"
            )));
        }
        if let Some(prev) = ideals.last() {
            if !ideal.space.is_subspace_of(&prev.space) {
                return Err(Error::assertion("annihilator chain is not descending"));
            }
        }
        let hopf = ideal.hopf_ideal;
        ideals.push(ideal);
        let next = annihilator(
            h,
            &tensor_modules(h, &quotient_by_right_ideal(h, &current), &q.module),
        );
        if hopf {
            if next != current {
                return Err(Error::assertion(format!(
                    "annihilator chain does not stabilize at the Hopf ideal, n = {n}"
                )));
            }
            return Ok(AnnihilatorChain {
                ideals,
                ell_q: Some(n),
                lower_bound: None,
                hopf_core_ideal: Some(current),
            });
        }
        current = next;
    }
    Ok(AnnihilatorChain {
        ideals,
        ell_q: None,
        lower_bound: Some(n_max),
        hopf_core_ideal: None,
    })
}

/// `Ann Q^{⊗n}` from the explicit tensor power, for cross-checking the chain.
pub fn literal_annihilator(
    h: &HopfAlgebraData,
    q: &QuotientModule,
    n: usize,
    cap: usize,
) -> Result<Subspace> {
    Ok(annihilator(h, &tensor_power_action(h, &q.module, n, cap)?))
}

/// `m ⊗ h ↦ m h₁ ⊗ h₂` from `H ⊗ H` (action on the right factor) to `H. ⊗ H.`
/// (diagonal action): bijective and equivariant.
pub fn fundamental_isomorphism_check(h: &HopfAlgebraData) -> bool {
    let n = h.dim();
    let phi = |m: usize, k: usize| -> Sparse {
        let mut out = Sparse::new();
        for (&(k1, k2), c) in h.comult_basis(k) {
            for (&p, d) in h.mult_basis(m, k1) {
                add_to(&mut out, p * n + k2, c * d);
            }
        }
        out
    };
    let images: Vec<Vec<Sparse>> = (0..n)
        .map(|m| (0..n).map(|k| phi(m, k)).collect())
        .collect();
    let span = Subspace::span(n * n, images.iter().flatten().map(|s| dense_of(s, n * n)));
    if !span.is_full() {
        return false;
    }
    let regular = regular_module(h);
    let diagonal = tensor_modules(h, &regular, &regular);
    for &x in h.generators() {
        for m in 0..n {
            for k in 0..n {
                // φ((m ⊗ k)·x) = φ(m ⊗ k x)
                let mut lhs = Sparse::new();
                for (&kx, c) in h.mult_basis(k, x) {
                    for (&i, d) in &images[m][kx] {
                        add_to(&mut lhs, i, c * d);
                    }
                }
                let rhs = diagonal.act(&images[m][k], x);
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

/// `Ann Q = 0` and `R⁺H ∩ Z(H) = 0`, computed separately.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaithfulCheck {
    pub faithful: bool,
    pub central_meet_zero: bool,
}

pub fn faithful_check(h: &HopfAlgebraData, q: &QuotientModule) -> FaithfulCheck {
    FaithfulCheck {
        faithful: annihilator(h, &q.module).dim() == 0,
        central_meet_zero: q.r_plus_h.intersection(&h.center()).dim() == 0,
    }
}
