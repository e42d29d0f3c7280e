//! Integrals, modular functions, trace ideals, idealizers and induced-module checks.

use super::module::{
    annihilator_chain, quotient_module, tensor_power_action, ModuleAction, QuotientModule,
};
use super::{HopfAlgebraData, SubalgebraEmbedding};
use crate::error::{Error, Result};
use crate::exactalg::{is_zero_vector, unit_vector, ExactMatrix, Scalar, Subspace, Vector};

#[derive(Clone, Debug)]
pub struct IntegralReport {
    /// Right integral of `R`, in `H` coordinates.
    pub t_r: Vector,
    pub t_h: Vector,
    /// `m_R` on the basis of `R`.
    pub m_r: Vec<Scalar>,
    /// `m_H` on the basis of `H`.
    pub m_h: Vec<Scalar>,
    pub q_integral_basis: Vec<Vector>,
    pub frobenius: bool,
    pub semisimple_extension: bool,
}

/// Right integral of the span of `basis`, unique up to scalar.
fn right_integral(h: &HopfAlgebraData, basis: &[Vector], tests: &[Vector]) -> Result<Vector> {
    let m = basis.len();
    let mut cons = Subspace::zero(m);
    for r in tests {
        let e = h.counit(r);
        let prods: Vec<Vector> = basis.iter().map(|b| h.mul(b, r)).collect();
        for p in 0..h.dim() {
            let v: Vector = (0..m)
                .map(|i| &prods[i][p] - &(&e * &basis[i][p]))
                .collect();
            if !is_zero_vector(&v) {
                cons.insert(v);
            }
        }
    }
    let sol = cons.orthogonal_kernel();
    if sol.len() != 1 {
        return Err(Error::HopfAxiom(format!(
            "right integral space has dimension {}, expected 1",
            sol.len()
        )));
    }
    let mut t = vec![Scalar::zero(); h.dim()];
    for (c, b) in sol[0].iter().zip(basis) {
        if !c.is_zero() {
            for (x, y) in t.iter_mut().zip(b) {
                *x = &*x + &(c * y);
            }
        }
    }
    Ok(t)
}

/// `x·t = m(x) t` for each `x`.
fn modular_values(h: &HopfAlgebraData, t: &[Scalar], xs: &[Vector]) -> Result<Vec<Scalar>> {
    let p = t
        .iter()
        .position(|c| !c.is_zero())
        .ok_or_else(|| Error::assertion("zero integral"))?;
    let inv = t[p].inv().expect("nonzero");
    xs.iter()
        .map(|x| {
            let xt = h.mul(x, t);
            let m = &xt[p] * &inv;
            let expect: Vector = t.iter().map(|c| &m * c).collect();
            if xt == expect {
                Ok(m)
            } else {
                Err(Error::HopfAxiom(
                    "integral is not an eigenvector of left multiplication".into(),
                ))
            }
        })
        .collect()
}

/// Integrals of `R ⊆ H`, modular functions, and integrals in `Q`.
pub fn integrals_and_modular(
    h: &HopfAlgebraData,
    r: &SubalgebraEmbedding,
    q: &QuotientModule,
) -> Result<IntegralReport> {
    let h_basis: Vec<Vector> = (0..h.dim()).map(|i| h.basis(i)).collect();
    let gens: Vec<Vector> = h.generators().iter().map(|&g| h.basis(g)).collect();
    let t_h = right_integral(h, &h_basis, &gens)?;
    let t_r = right_integral(h, r.basis(), r.basis())?;
    let m_h = modular_values(h, &t_h, &h_basis)?;
    let m_r = modular_values(h, &t_r, r.basis())?;
    let frobenius = r.basis().iter().zip(&m_r).all(|(x, mr)| {
        let mut s = Scalar::zero();
        for (c, mh) in x.iter().zip(&m_h) {
            if !c.is_zero() {
                s = &s + &(c * mh);
            }
        }
        &s == mr
    });
    let q_integral_basis = q_integrals(h, &q.module);
    let semisimple_extension = q_integral_basis.iter().any(|t| {
        let mut s = Scalar::zero();
        for (c, e) in t.iter().zip(&q.counit) {
            s = &s + &(c * e);
        }
        !s.is_zero()
    });
    if q_integral_basis.is_empty() == frobenius {
        return Err(Error::assertion(format!(
            "Q has {} integrals but m_H|_R = m_R is {}",
            q_integral_basis.len(),
            frobenius
        )));
    }
    Ok(IntegralReport {
        t_r,
        t_h,
        m_r,
        m_h,
        q_integral_basis,
        frobenius,
        semisimple_extension,
    })
}

/// `{ q : q·h = ε(h) q }`.
fn q_integrals(h: &HopfAlgebraData, m: &ModuleAction) -> Vec<Vector> {
    let mut cons = Subspace::zero(m.dim);
    for &g in h.generators() {
        let a = m.action[g].to_dense();
        let e = &h.counit_vector()[g];
        for y in 0..m.dim {
            let mut v = a.column(y);
            v[y] = &v[y] - e;
            if !is_zero_vector(&v) {
                cons.insert(v);
            }
        }
    }
    cons.orthogonal_kernel()
}

/// Whether `a` is a nonzero multiple of `b`.
pub fn proportional(a: &[Scalar], b: &[Scalar]) -> bool {
    let Some(p) = b.iter().position(|c| !c.is_zero()) else {
        return false;
    };
    if a[p].is_zero() {
        return false;
    }
    let s = &a[p] / &b[p];
    a.iter().zip(b).all(|(x, y)| *x == &s * y)
}

/// `q ↦ t_R·lift(q)` is well defined and injective, so `Q ≅ t_R H`.
pub fn integral_image_check(h: &HopfAlgebraData, q: &QuotientModule, t_r: &[Scalar]) -> bool {
    if q.r_plus_h
        .basis()
        .iter()
        .any(|x| !is_zero_vector(&h.mul(t_r, x)))
    {
        return false;
    }
    let img = Subspace::span(h.dim(), q.lifts.iter().map(|&a| h.mul(t_r, &h.basis(a))));
    img.dim() == q.dim()
}

/// Sum of images of all module maps `M → H`.
pub fn trace_ideal(h: &HopfAlgebraData, m: &ModuleAction) -> Subspace {
    let (dm, dh) = (m.dim, h.dim());
    let unknowns = dm * dh;
    let mut cons = Subspace::zero(unknowns);
    for &g in h.generators() {
        let a = &m.action[g];
        let rg = h.right_mult_matrix(&h.basis(g));
        // (A_g F - F R_g)[x][p] = 0
        for x in 0..dm {
            for p in 0..dh {
                let mut v = vec![Scalar::zero(); unknowns];
                for (&c, s) in &a.entries[x] {
                    v[c * dh + p] = &v[c * dh + p] + s;
                }
                for s in 0..dh {
                    let r = rg.get(s, p);
                    if !r.is_zero() {
                        v[x * dh + s] = &v[x * dh + s] - r;
                    }
                }
                if !is_zero_vector(&v) {
                    cons.insert(v);
                }
            }
        }
    }
    let mut tau = Subspace::zero(dh);
    for f in cons.orthogonal_kernel() {
        for x in 0..dm {
            if tau.is_full() {
                return tau;
            }
            tau.insert(f[x * dh..(x + 1) * dh].to_vec());
        }
    }
    tau
}

#[derive(Clone, Debug)]
pub struct TraceIdealChain {
    pub ideals: Vec<Subspace>,
    /// Least `n` with `τ(Q^{⊗n}) = τ(Q^{⊗(n+1)})`.
    pub l_q: Option<usize>,
    /// Set when a cap stopped the chain early.
    pub partial: bool,
    pub htrh: Subspace,
    pub htrh_check: bool,
}

impl TraceIdealChain {
    pub fn dims(&self) -> Vec<usize> {
        self.ideals.iter().map(|s| s.dim()).collect()
    }
}

/// Trace ideals of `Q^{⊗n}` for `n <= n_max`; a power is skipped when its
/// `dim · dim H` exceeds `cap_unknowns`.
pub fn trace_ideals(
    h: &HopfAlgebraData,
    q: &QuotientModule,
    t_r: &[Scalar],
    n_max: usize,
    cap_unknowns: usize,
) -> Result<TraceIdealChain> {
    let mut htrh = Subspace::zero(h.dim());
    for i in 0..h.dim() {
        let left = h.mul(&h.basis(i), t_r);
        for j in 0..h.dim() {
            htrh.insert(h.mul(&left, &h.basis(j)));
        }
    }
    let mut ideals: Vec<Subspace> = Vec::new();
    let mut l_q = None;
    let mut partial = false;
    for n in 1..=n_max + 1 {
        let dim_n = q.dim().checked_pow(n as u32).unwrap_or(usize::MAX);
        if dim_n.saturating_mul(h.dim()) > cap_unknowns {
            partial = true;
            break;
        }
        let m = tensor_power_action(h, &q.module, n, usize::MAX)?;
        let tau = trace_ideal(h, &m);
        if let Some(prev) = ideals.last() {
            if !prev.is_subspace_of(&tau) {
                return Err(Error::assertion("trace ideal chain is not ascending"));
            }
            if *prev == tau {
                l_q = Some(n - 1);
                ideals.push(tau);
                break;
            }
        }
        ideals.push(tau);
    }
    let htrh_check = ideals.first().is_none_or(|t| *t == htrh);
    if !htrh_check {
        return Err(Error::assertion("τ(Q) differs from H t_R H"));
    }
    if ideals.first().is_some_and(|t| t.is_full()) && h.counit(t_r).is_zero() {
        return Err(Error::assertion("Q is a generator but ε(t_R) = 0"));
    }
    if let Some(l) = l_q {
        let chain = annihilator_chain(h, q, l + 1)?;
        if let (Some(ell), Some(core)) = (chain.ell_q, &chain.hopf_core_ideal) {
            if core.dim() == 0 && ell != l {
                return Err(Error::assertion(format!(
                    "Q is conditionally faithful but L_Q = {l} and ℓ_Q = {ell}"
                )));
            }
        }
    }
    Ok(TraceIdealChain {
        ideals,
        l_q,
        partial,
        htrh,
        htrh_check,
    })
}

#[derive(Clone, Debug)]
pub struct IdealizerReport {
    pub t: Subspace,
    pub dim_r_plus_h: usize,
    pub dim_end_q: usize,
    /// `R⁺H = HR⁺`.
    pub normal: bool,
}

/// Idealizer `T = { h : h R⁺H ⊆ R⁺H }` and `dim End Q = dim T - dim R⁺H`.
pub fn idealizer_and_end_q(
    h: &HopfAlgebraData,
    r: &SubalgebraEmbedding,
    q: &QuotientModule,
) -> Result<IdealizerReport> {
    let mut cons = Subspace::zero(h.dim());
    for u in q.r_plus_h.basis() {
        let imgs: Vec<Vector> = (0..h.dim())
            .map(|i| q.project(&h.mul(&h.basis(i), u)))
            .collect();
        for x in 0..q.dim() {
            if cons.is_full() {
                break;
            }
            let v: Vector = imgs.iter().map(|w| w[x].clone()).collect();
            if !is_zero_vector(&v) {
                cons.insert(v);
            }
        }
    }
    let t = Subspace::span(h.dim(), cons.orthogonal_kernel());
    let dim_r_plus_h = q.r_plus_h.dim();
    let dim_end_q = t.dim() - dim_r_plus_h;
    let normal = h.product_span(&h.full_space(), &q.r_plus) == q.r_plus_h;
    if (dim_end_q == q.dim()) != normal {
        return Err(Error::assertion(format!(
            "evaluation End Q → Q is {}an isomorphism but R⁺H = HR⁺ is {normal} for {}",
            if dim_end_q == q.dim() { "" } else { "not " },
            r.name
        )));
    }
    Ok(IdealizerReport {
        t,
        dim_r_plus_h,
        dim_end_q,
        normal,
    })
}

/// `HK⁺ = K⁺H`.
pub fn is_normal_subalgebra(h: &HopfAlgebraData, k: &SubalgebraEmbedding) -> bool {
    let kp = h.augmentation_part(&k.space);
    h.product_span(&h.full_space(), &kp) == h.product_span(&kp, &h.full_space())
}

/// `HK⁺ ⊆ I`.
pub fn core_containment_check(
    h: &HopfAlgebraData,
    k: &SubalgebraEmbedding,
    core: &Subspace,
) -> bool {
    let kp = h.augmentation_part(&k.space);
    h.product_span(&h.full_space(), &kp).is_subspace_of(core)
}

/// `dim Q^H_K = dim(⁺Q^R_K)·dim H/dim R + dim Q^H_R` for `K ⊆ R ⊆ H`.
pub fn tower_dimension_check(
    h: &HopfAlgebraData,
    k: &SubalgebraEmbedding,
    r: &SubalgebraEmbedding,
) -> Result<bool> {
    if !k.space.is_subspace_of(&r.space) {
        return Err(Error::malformed("tower needs K ⊆ R"));
    }
    let qk = quotient_module(h, k)?;
    let qr = quotient_module(h, r)?;
    let k_plus_r = h.product_span(&h.augmentation_part(&k.space), &r.space);
    let plus_q_rk = r.dim() - k_plus_r.dim() - 1;
    Ok(qk.dim() == plus_q_rk * h.dim() / r.dim() + qr.dim())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearDisjointReport {
    pub dim_rk: usize,
    pub dim_b: usize,
    pub dimension_equation: bool,
    pub linear_disjoint: bool,
    /// `Q^K_B → Q^H_R` is a bijection, checked when disjoint.
    pub map_iso: Option<bool>,
}

pub fn linear_disjoint_check(
    h: &HopfAlgebraData,
    r: &SubalgebraEmbedding,
    k: &SubalgebraEmbedding,
) -> Result<LinearDisjointReport> {
    let rk = h.product_span(&r.space, &k.space);
    let b = r.space.intersection(&k.space);
    let dimension_equation = h.dim() * b.dim() == r.dim() * k.dim();
    let linear_disjoint = rk.is_full() && dimension_equation;
    let map_iso = if linear_disjoint {
        let qr = quotient_module(h, r)?;
        let b_plus_k = h.product_span(&h.augmentation_part(&b), &k.space);
        let well_defined = b_plus_k
            .basis()
            .iter()
            .all(|x| is_zero_vector(&qr.project(x)));
        let mut complement = b_plus_k.clone();
        let mut reps = Vec::new();
        for x in k.basis() {
            if complement.insert(x.clone()) {
                reps.push(x.clone());
            }
        }
        let image = Subspace::span(qr.dim(), reps.iter().map(|x| qr.project(x)));
        Some(well_defined && image.is_full() && reps.len() == qr.dim())
    } else {
        None
    };
    Ok(LinearDisjointReport {
        dim_rk: rk.dim(),
        dim_b: b.dim(),
        dimension_equation,
        linear_disjoint,
        map_iso,
    })
}

/// Right `R`-module: `action[i]` is the matrix of `w ↦ w·r_i` for the basis `r_i` of `R`.
#[derive(Clone, Debug)]
pub struct RModule {
    pub dim: usize,
    pub action: Vec<ExactMatrix>,
}

impl RModule {
    /// `k_ε`.
    pub fn trivial(h: &HopfAlgebraData, r: &SubalgebraEmbedding) -> Self {
        RModule {
            dim: 1,
            action: r
                .basis()
                .iter()
                .map(|x| ExactMatrix::from_rows(vec![vec![h.counit(x)]]))
                .collect(),
        }
    }

    /// `R` acting on itself.
    pub fn regular(h: &HopfAlgebraData, r: &SubalgebraEmbedding) -> Self {
        let action = r
            .basis()
            .iter()
            .map(|ri| {
                ExactMatrix::from_rows(
                    r.basis()
                        .iter()
                        .map(|ra| r.space.coordinates(&h.mul(ra, ri)).expect("closed"))
                        .collect(),
                )
            })
            .collect();
        RModule {
            dim: r.dim(),
            action,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UlbrichReport {
    pub dim_x: usize,
    pub dim_coinvariants: usize,
    pub bijective: bool,
}

struct Induced {
    rel: Subspace,
    lifts: Vec<usize>,
}

fn induce(h: &HopfAlgebraData, r: &SubalgebraEmbedding, w: &RModule) -> Induced {
    let dh = h.dim();
    let mut rel = Subspace::zero(w.dim * dh);
    let r_to_h: Vec<ExactMatrix> = r.basis().iter().map(|ri| h.left_mult_matrix(ri)).collect();
    for a in 0..w.dim {
        for (i, act) in w.action.iter().enumerate() {
            let wa_r = act.row(a);
            for j in 0..dh {
                if rel.is_full() {
                    break;
                }
                let mut v = vec![Scalar::zero(); w.dim * dh];
                for (b, c) in wa_r.iter().enumerate() {
                    if !c.is_zero() {
                        v[b * dh + j] = &v[b * dh + j] + c;
                    }
                }
                // r_i b_j
                let rb = r_to_h[i].row(j);
                for (p, c) in rb.iter().enumerate() {
                    if !c.is_zero() {
                        v[a * dh + p] = &v[a * dh + p] - c;
                    }
                }
                if !is_zero_vector(&v) {
                    rel.insert(v);
                }
            }
        }
    }
    let lifts = rel.non_pivots();
    Induced { rel, lifts }
}

/// `X = W ⊗_R H` with `ρ(w ⊗ h) = w ⊗ h₁ ⊗ h̄₂`; checks `X^{co Q} ⊗_R H → X` is bijective.
pub fn ulbrich_verify(
    h: &HopfAlgebraData,
    r: &SubalgebraEmbedding,
    q: &QuotientModule,
    w: &RModule,
    cap: usize,
) -> Result<UlbrichReport> {
    let dh = h.dim();
    if w.dim * dh > cap || w.dim * q.dim() > cap {
        return Err(Error::CapExceeded {
            what: "induced module dimension",
            cap,
            needed: w.dim * dh,
        });
    }
    if w.action.len() != r.dim() {
        return Err(Error::malformed("R-module action has the wrong length"));
    }
    let x = induce(h, r, w);
    let dx = x.lifts.len();
    let dq = q.dim();
    let px = |a: usize, j: usize| -> Vector {
        x.rel.quotient_coords(&unit_vector(w.dim * dh, a * dh + j))
    };
    let one_q = q.project(h.unit());
    // ρ(e_c) - e_c ⊗ 1̄ as a vector in X ⊗ Q
    let mut cons_rows: Vec<Vector> = Vec::with_capacity(dx);
    for (c, &l) in x.lifts.iter().enumerate() {
        let (a, j) = (l / dh, l % dh);
        let mut v = vec![Scalar::zero(); dx * dq];
        for (&(j1, j2), s) in h.comult_basis(j) {
            let xa = px(a, j1);
            let qb = q.projection.row(j2);
            for (u, xu) in xa.iter().enumerate() {
                if xu.is_zero() {
                    continue;
                }
                for (t, qt) in qb.iter().enumerate() {
                    if !qt.is_zero() {
                        v[u * dq + t] = &v[u * dq + t] + &(&(s * xu) * qt);
                    }
                }
            }
        }
        for (t, qt) in one_q.iter().enumerate() {
            v[c * dq + t] = &v[c * dq + t] - qt;
        }
        cons_rows.push(v);
    }
    let m = ExactMatrix::from_rows(cons_rows);
    let mut cons = Subspace::zero(dx);
    for col in 0..dx * dq {
        let v = m.column(col);
        if !is_zero_vector(&v) {
            cons.insert(v);
        }
    }
    let coinv = Subspace::span(dx, cons.orthogonal_kernel());
    // right action of b_k on X
    let act = |v: &[Scalar], k: usize| -> Vector {
        let mut out = vec![Scalar::zero(); dx];
        for (c, s) in v.iter().enumerate() {
            if s.is_zero() {
                continue;
            }
            let l = x.lifts[c];
            let (a, j) = (l / dh, l % dh);
            for (&p, t) in h.mult_basis(j, k) {
                let img = px(a, p);
                let st = s * t;
                for (o, y) in out.iter_mut().zip(&img) {
                    if !y.is_zero() {
                        *o = &*o + &(&st * y);
                    }
                }
            }
        }
        out
    };
    let mut generated = Subspace::zero(dx);
    for v in coinv.basis() {
        for k in 0..dh {
            generated.insert(act(v, k));
        }
    }
    let surjective = generated.is_full();
    // X^{co Q} as an R-module
    let mut closed = true;
    let mut action = Vec::with_capacity(r.dim());
    for ri in r.basis() {
        let mut rows = Vec::with_capacity(coinv.dim());
        for v in coinv.basis() {
            let mut img = vec![Scalar::zero(); dx];
            for (k, c) in ri.iter().enumerate() {
                if !c.is_zero() {
                    let a = act(v, k);
                    for (o, y) in img.iter_mut().zip(&a) {
                        *o = &*o + &(c * y);
                    }
                }
            }
            match coinv.coordinates(&img) {
                Some(co) => rows.push(co),
                None => {
                    closed = false;
                    rows.push(vec![Scalar::zero(); coinv.dim()]);
                }
            }
        }
        action.push(ExactMatrix::new(coinv.dim(), coinv.dim(), rows.concat()));
    }
    let bijective = closed && surjective && {
        let w2 = RModule {
            dim: coinv.dim(),
            action,
        };
        coinv.dim() > 0 && induce(h, r, &w2).lifts.len() == dx
    };
    Ok(UlbrichReport {
        dim_x: dx,
        dim_coinvariants: coinv.dim(),
        bijective,
    })
}
