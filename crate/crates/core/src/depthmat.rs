//! Depth and h-depth from an inclusion matrix.
//!
//! With `B = M Mᵗ` and `C = Mᵗ M`:
//!
//! * `d_odd = 2n + 1`, least `n >= 1` with `pattern(Bⁿ) = pattern(Bⁿ⁺¹)`;
//! * `d_ev = 2n`, least `n >= 1` with `pattern(M Cⁿ⁻¹) = pattern(M Cⁿ)`;
//! * `d_h = 2n + 1`, least `n >= 1` with `pattern(Cⁿ) = pattern(Cⁿ⁺¹)`;
//! * `d_0 = min(d_ev, d_odd)`.
//!
//! Depth one is read off group data (the adjoint test) or a permutation matrix.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use num::{BigRational, One, Zero};
use serde::{Deserialize, Serialize};

use crate::chartab::{class_fusion, InclusionMatrix};
use crate::error::{Error, Result};
use crate::exactalg::{
    factor_rational_roots, is_indecomposable, minimal_polynomial, pattern_stabilization_index,
    support_components, BigRationalString, ExactMatrix, ExactPolynomial, PatternScanError,
    RationalRootFactorization,
};
use crate::permgroup::{depth_one_adjoint_test, SubgroupHandle};

/// An odd or even depth, or the budget that was exhausted looking for it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DepthValue {
    Finite(u32),
    Unbounded { unbounded_within: usize },
}

impl DepthValue {
    pub fn finite(&self) -> Option<u32> {
        match self {
            DepthValue::Finite(d) => Some(*d),
            DepthValue::Unbounded { .. } => None,
        }
    }

    fn min(self, other: Self) -> Self {
        match (self, other) {
            (DepthValue::Finite(a), DepthValue::Finite(b)) => DepthValue::Finite(a.min(b)),
            (DepthValue::Finite(a), _) | (_, DepthValue::Finite(a)) => DepthValue::Finite(a),
            (a, _) => a,
        }
    }
}

impl fmt::Display for DepthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DepthValue::Finite(d) => write!(f, "{d}"),
            DepthValue::Unbounded { unbounded_within } => {
                write!(f, "unbounded within {unbounded_within} steps")
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EigenSource {
    ClassFormula,
    Minpoly,
}

/// Exact rational eigenvalues, largest first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigenvalueSet {
    pub values: Vec<BigRationalString>,
    pub source: EigenSource,
}

impl EigenvalueSet {
    pub fn rationals(&self) -> Vec<BigRational> {
        self.values.iter().map(|v| v.0.clone()).collect()
    }

    pub fn distinct(&self) -> BTreeSet<BigRational> {
        self.values.iter().map(|v| v.0.clone()).collect()
    }
}

/// Eigenvalues from class sizes alone, with the resulting depth bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassFormulaEigenvalues {
    pub set: EigenvalueSet,
    pub t: usize,
    /// Every class of `G` meets `H` in at most one class of `H`.
    pub single_class_restriction: bool,
    /// `2t - 1` when `single_class_restriction`, else `2t + 1`.
    pub d0_bound: u32,
}

/// `{ (|G|/|H|) |C ∩ H| / |C| : C ∩ H nonempty }`.
pub fn eigenvalues_via_class_formula(h: &SubgroupHandle) -> ClassFormulaEigenvalues {
    let g = h.parent();
    let index = BigRational::from_integer(h.index().into());
    let mut set = BTreeSet::new();
    for c in &g.classes().classes {
        let meet = c.members.iter().filter(|&&x| h.contains(x)).count();
        if meet > 0 {
            set.insert(&index * BigRational::new(meet.into(), c.size().into()));
        }
    }
    let fusion = class_fusion(h);
    let mut seen = vec![false; g.classes().len()];
    let single = fusion
        .map
        .iter()
        .all(|&k| !std::mem::replace(&mut seen[k], true));
    let t = set.len();
    ClassFormulaEigenvalues {
        set: EigenvalueSet {
            values: set.into_iter().rev().map(BigRationalString).collect(),
            source: EigenSource::ClassFormula,
        },
        t,
        single_class_restriction: single,
        d0_bound: if single {
            2 * t as u32 - 1
        } else {
            2 * t as u32 + 1
        },
    }
}

/// Eigenvalues of a symmetric rational matrix: rational roots of its minimal polynomial,
/// each repeated by the dimension of its eigenspace, plus the irrational residual.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub eigenvalues: EigenvalueSet,
    pub residual: ExactPolynomial,
}

fn spectrum(a: &ExactMatrix, roots: &RationalRootFactorization) -> SpectrumReport {
    let n = a.rows();
    let mut values = Vec::new();
    for r in roots.root_values().iter().rev() {
        let shifted = a.sub(&ExactMatrix::identity(n).scale(&r.clone().into()));
        let mult = n - shifted.rank();
        values.extend(std::iter::repeat_n(BigRationalString(r.clone()), mult));
    }
    SpectrumReport {
        eigenvalues: EigenvalueSet {
            values,
            source: EigenSource::Minpoly,
        },
        residual: roots.residual.clone(),
    }
}

/// Weighted digraph on irreducibles of the larger algebra; edge `i -> j` of weight `c_ij`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct McKayQuiver {
    pub labels: Vec<String>,
    pub edges: Vec<(usize, usize, u64)>,
    pub components: usize,
}

impl McKayQuiver {
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph mckay {\n");
        for (i, l) in self.labels.iter().enumerate() {
            s.push_str(&format!("  v{i} [label=\"{l}\"];\n"));
        }
        for &(i, j, w) in &self.edges {
            s.push_str(&format!("  v{i} -> v{j} [label=\"{w}\"];\n"));
        }
        s.push_str("}\n");
        s
    }
}

pub fn mckay_quiver(c: &ExactMatrix, labels: &[String]) -> Result<McKayQuiver> {
    let rows = c
        .to_i64_rows()
        .filter(|r| c.is_square() && r.iter().flatten().all(|&x| x >= 0))
        .ok_or_else(|| {
            Error::malformed("McKay quiver needs a square nonnegative integer matrix")
        })?;
    let labels = if labels.len() == rows.len() {
        labels.to_vec()
    } else {
        default_labels("chi", rows.len())
    };
    let mut edges = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        for (j, &w) in r.iter().enumerate() {
            if w > 0 {
                edges.push((i, j, w as u64));
            }
        }
    }
    Ok(McKayQuiver {
        labels,
        edges,
        components: support_components(c).len(),
    })
}

/// Bipartite inclusion graph: white vertices for the subalgebra, black for the algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BipartiteGraph {
    pub white: Vec<String>,
    pub black: Vec<String>,
    /// `(white, black, multiplicity)`.
    pub edges: Vec<(usize, usize, u64)>,
}

impl BipartiteGraph {
    pub fn from_matrix(m: &InclusionMatrix) -> Self {
        let mut edges = Vec::new();
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                if m.get(i, j) > 0 {
                    edges.push((i, j, m.get(i, j)));
                }
            }
        }
        BipartiteGraph {
            white: default_labels("phi", m.rows()),
            black: default_labels("chi", m.cols()),
            edges,
        }
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph inclusion {\n  rankdir=BT;\n");
        s.push_str("  { rank=same;\n");
        for (i, l) in self.white.iter().enumerate() {
            s.push_str(&format!(
                "    w{i} [label=\"{l}\", style=filled, fillcolor=white, fontcolor=black];\n"
            ));
        }
        s.push_str("  }\n  { rank=same;\n");
        for (j, l) in self.black.iter().enumerate() {
            s.push_str(&format!(
                "    b{j} [label=\"{l}\", style=filled, fillcolor=black, fontcolor=white];\n"
            ));
        }
        s.push_str("  }\n");
        for &(i, j, w) in &self.edges {
            if w == 1 {
                s.push_str(&format!("  w{i} -- b{j};\n"));
            } else {
                s.push_str(&format!("  w{i} -- b{j} [label=\"{w}\"];\n"));
            }
        }
        s.push_str("}\n");
        s
    }

    /// Largest edge distance between two white vertices in the same component.
    pub fn white_diameter(&self) -> usize {
        let (p, q) = (self.white.len(), self.black.len());
        let mut adj = vec![Vec::new(); p + q];
        for &(i, j, _) in &self.edges {
            adj[i].push(p + j);
            adj[p + j].push(i);
        }
        let mut best = 0;
        for s in 0..p {
            let mut dist = vec![usize::MAX; p + q];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &adj[u] {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        queue.push_back(v);
                    }
                }
            }
            best = dist[..p]
                .iter()
                .filter(|&&d| d != usize::MAX)
                .fold(best, |a, &d| a.max(d));
        }
        best
    }
}

fn default_labels(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

/// Invariants derived from the group pair itself.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupPairFacts {
    pub order: usize,
    pub subgroup_order: usize,
    pub index: usize,
    pub adjoint_test: bool,
    pub class_formula: ClassFormulaEigenvalues,
    /// Nonzero spectrum of `B` equals the class-formula set.
    pub class_formula_matches: bool,
    /// Least `n` with `supp(e_0 Cⁿ) = supp(e_0 Cⁿ⁺¹)`, row 0 being the trivial character.
    pub module_chain_length: Option<usize>,
}

/// Everything computed from an inclusion matrix, with the method behind each value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DepthReport {
    pub m: InclusionMatrix,
    pub b: ExactMatrix,
    pub c: ExactMatrix,
    pub d_odd: DepthValue,
    pub d_ev: DepthValue,
    pub d_0: DepthValue,
    pub d_h: DepthValue,
    pub minpoly_b: ExactPolynomial,
    pub minpoly_c: ExactPolynomial,
    pub eigen_b: SpectrumReport,
    pub eigen_c: SpectrumReport,
    /// `C` annihilated by the Perron–Frobenius value; absent without a known index.
    pub pf_check: Option<bool>,
    pub mckay: McKayQuiver,
    pub indecomposable_c: bool,
    pub white_diameter: usize,
    pub group: Option<GroupPairFacts>,
    pub method_tags: BTreeMap<String, String>,
}

fn scan(
    seq: impl FnMut(usize) -> ExactMatrix,
    k_max: usize,
    what: &str,
) -> Result<std::result::Result<usize, usize>> {
    match pattern_stabilization_index(seq, k_max) {
        Ok(k) => Ok(Ok(k)),
        Err(PatternScanError::Unbounded { k_max }) => Ok(Err(k_max)),
        Err(e @ PatternScanError::Malformed { .. }) => {
            Err(Error::assertion(format!("{what}: {e}")))
        }
    }
}

fn is_permutation_matrix(m: &InclusionMatrix) -> bool {
    m.rows() == m.cols()
        && m.entries()
            .iter()
            .all(|r| r.iter().filter(|&&x| x != 0).count() == 1 && r.iter().sum::<u64>() == 1)
        && (0..m.cols()).all(|j| (0..m.rows()).map(|i| m.get(i, j)).sum::<u64>() == 1)
}

/// Least `n >= 1` with `supp(v Cⁿ) = supp(v Cⁿ⁺¹)`.
fn support_chain_length(
    v: &[crate::exactalg::Scalar],
    c: &ExactMatrix,
    k_max: usize,
) -> Option<usize> {
    let supp =
        |w: &[crate::exactalg::Scalar]| -> Vec<bool> { w.iter().map(|x| !x.is_zero()).collect() };
    let mut cur = c.left_apply(v);
    for n in 1..=k_max {
        let next = c.left_apply(&cur);
        if supp(&cur) == supp(&next) {
            return Some(n);
        }
        cur = next;
    }
    None
}

fn odd(n: usize) -> DepthValue {
    DepthValue::Finite(2 * n as u32 + 1)
}

/// Depth report for an inclusion matrix, optionally enriched by the subgroup pair it
/// came from (rows and columns in character-table order, trivial characters first).
pub fn depth_report(m: &InclusionMatrix, pair: Option<&SubgroupHandle>) -> Result<DepthReport> {
    let m = InclusionMatrix::new(m.entries().to_vec())?;
    let mx = m.to_exact();
    let mt = mx.transpose();
    let b = mx.mul(&mt);
    let c = mt.mul(&mx);
    let (p, q) = (m.rows(), m.cols());
    let mut tags = BTreeMap::new();

    let (d_odd, d_ev, d_h) = {
        let mut bpow = b.clone();
        let odd_scan = scan(
            |k| {
                if k > 1 {
                    bpow = bpow.mul(&b);
                }
                bpow.clone()
            },
            p.max(1),
            "pattern of B powers",
        )?;
        let mut mcpow = mx.clone();
        let ev_scan = scan(
            |k| {
                if k > 1 {
                    mcpow = mcpow.mul(&c);
                }
                mcpow.clone()
            },
            q.max(1),
            "pattern of M C powers",
        )?;
        let mut cpow = c.clone();
        let h_scan = scan(
            |k| {
                if k > 1 {
                    cpow = cpow.mul(&c);
                }
                cpow.clone()
            },
            q.max(1),
            "pattern of C powers",
        )?;
        let conv = |r: std::result::Result<usize, usize>, f: fn(usize) -> DepthValue| match r {
            Ok(n) => f(n),
            Err(k) => DepthValue::Unbounded {
                unbounded_within: k,
            },
        };
        (
            conv(odd_scan, odd),
            conv(ev_scan, |n| DepthValue::Finite(2 * n as u32)),
            conv(h_scan, odd),
        )
    };
    tags.insert("d_odd".into(), "pattern-B-powers".into());
    tags.insert("d_ev".into(), "pattern-M-C-powers".into());
    tags.insert("d_h".into(), "pattern-C-powers".into());
    tags.insert("d_0".into(), "min-even-odd".into());
    let mut d_0 = d_ev.min(d_odd);
    let mut d_h = d_h;

    if is_permutation_matrix(&m) {
        d_0 = DepthValue::Finite(1);
        d_h = DepthValue::Finite(1);
        tags.insert("d_0".into(), "permutation-matrix".into());
        tags.insert("d_h".into(), "permutation-matrix".into());
    }

    let minpoly_b = minimal_polynomial(&b);
    let minpoly_c = minimal_polynomial(&c);
    tags.insert("minpoly_b".into(), "krylov".into());
    tags.insert("minpoly_c".into(), "krylov".into());
    if !c.mul(&minpoly_b.eval_matrix(&c)).is_zero() {
        return Err(Error::assertion(
            "C m(C) is not zero for m the minimal polynomial of B",
        ));
    }
    let xm = minpoly_b.mul(&ExactPolynomial::x());
    // Bare matrices may also give m(X)/X.
    let drops_x = pair.is_none() && minpoly_c.mul(&ExactPolynomial::x()) == minpoly_b;
    if minpoly_c != minpoly_b && minpoly_c != xm && !drops_x {
        return Err(Error::assertion(format!(
            "minimal polynomial of C is {minpoly_c}, expected {minpoly_b} or X times it"
        )));
    }
    let eigen_b = spectrum(&b, &factor_rational_roots(&minpoly_b));
    let eigen_c = spectrum(&c, &factor_rational_roots(&minpoly_c));

    let mckay = mckay_quiver(&c, &[])?;
    let indecomposable_c = is_indecomposable(&c);
    let graph = BipartiteGraph::from_matrix(&m);
    let white_diameter = graph.white_diameter();

    let mut pf_check = None;
    let mut group = None;
    if let Some(h) = pair {
        let index = h.index();
        let idx = BigRational::from_integer(index.into());
        pf_check = Some(minpoly_c.eval(&idx).is_zero());
        tags.insert("pf_check".into(), "minpoly-C-at-index".into());

        let adjoint = depth_one_adjoint_test(h);
        if adjoint {
            d_0 = DepthValue::Finite(1);
            tags.insert("d_0".into(), "adjoint-test".into());
        }
        if h.is_whole() {
            d_h = DepthValue::Finite(1);
            tags.insert("d_h".into(), "identity-inclusion".into());
        }

        let cf = eigenvalues_via_class_formula(h);
        let nonzero: BTreeSet<BigRational> = eigen_b
            .eigenvalues
            .distinct()
            .into_iter()
            .filter(|v| !v.is_zero())
            .collect();
        let matches = eigen_b.residual.degree() == Some(0) && nonzero == cf.set.distinct();

        let module_chain_length = if h.is_whole() {
            None
        } else {
            let e0 = crate::exactalg::unit_vector(q, 0);
            let n = support_chain_length(&e0, &c, q.max(1));
            if let (Some(n), Some(dh)) = (n, d_h.finite()) {
                if 2 * n as u32 + 1 != dh {
                    return Err(Error::assertion(format!(
                        "h-depth {dh} disagrees with the module chain length {n}"
                    )));
                }
            }
            n
        };
        group = Some(GroupPairFacts {
            order: h.parent().order(),
            subgroup_order: h.order(),
            index,
            adjoint_test: adjoint,
            class_formula: cf,
            class_formula_matches: matches,
            module_chain_length,
        });
    }

    let report = DepthReport {
        m,
        b,
        c,
        d_odd,
        d_ev,
        d_0,
        d_h,
        minpoly_b,
        minpoly_c,
        eigen_b,
        eigen_c,
        pf_check,
        mckay,
        indecomposable_c,
        white_diameter,
        group,
        method_tags: tags,
    };
    report.validate()?;
    Ok(report)
}

impl DepthReport {
    /// Re-checks the internal consistency of a (possibly deserialised) report.
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::assertion(msg));
        let mx = self.m.to_exact();
        if self.b != mx.mul(&mx.transpose()) || self.c != mx.transpose().mul(&mx) {
            return fail("B or C is not built from M".into());
        }
        for (name, v, parity) in [
            ("d_odd", self.d_odd, 1),
            ("d_ev", self.d_ev, 0),
            ("d_h", self.d_h, 1),
        ] {
            if let Some(d) = v.finite() {
                if d % 2 != parity && d != 1 {
                    return fail(format!("{name} = {d} has the wrong parity"));
                }
            }
        }
        let from_min = self.d_ev.min(self.d_odd);
        let overridden = matches!(
            self.method_tags.get("d_0").map(String::as_str),
            Some("adjoint-test") | Some("permutation-matrix")
        );
        if self.d_0 != from_min && !(overridden && self.d_0 == DepthValue::Finite(1)) {
            return fail(format!(
                "d_0 = {} but min(d_ev, d_odd) = {}",
                self.d_0, from_min
            ));
        }
        if let (Some(a), Some(b)) = (self.d_0.finite(), self.d_h.finite()) {
            if a.abs_diff(b) > 2 {
                return fail(format!("|d_0 - d_h| = |{a} - {b}| exceeds 2"));
            }
        }
        if !minimal_polynomial(&self.b).eq(&self.minpoly_b) {
            return fail("minimal polynomial of B does not match".into());
        }
        if self.pf_check == Some(false) {
            return fail("the index is not an eigenvalue of C".into());
        }
        if let Some(g) = &self.group {
            if !g.class_formula_matches {
                return fail("nonzero spectrum of B differs from the class formula".into());
            }
            if let Some(d0) = self.d_0.finite() {
                if d0 > g.class_formula.d0_bound {
                    return fail(format!(
                        "d_0 = {d0} exceeds the bound {}",
                        g.class_formula.d0_bound
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        s.push_str(&format!("M =\n{}\n", self.m.to_exact()));
        s.push_str(&format!("B = M M^t =\n{}\n", self.b));
        s.push_str(&format!("C = M^t M =\n{}\n", self.c));
        s.push_str(&format!("minpoly(B) = {}\n", self.minpoly_b));
        s.push_str(&format!("minpoly(C) = {}\n", self.minpoly_c));
        let fmt_eig = |e: &SpectrumReport| {
            let v: Vec<String> = e
                .eigenvalues
                .values
                .iter()
                .map(|x| x.0.to_string())
                .collect();
            if e.residual.degree() == Some(0) {
                format!("{{{}}}", v.join(", "))
            } else {
                format!("{{{}}} and roots of {}", v.join(", "), e.residual)
            }
        };
        s.push_str(&format!("eigenvalues(B) = {}\n", fmt_eig(&self.eigen_b)));
        s.push_str(&format!("eigenvalues(C) = {}\n", fmt_eig(&self.eigen_c)));
        s.push_str(&format!(
            "d_odd = {}\nd_ev = {}\nd_0 = {}\nd_h = {}\n",
            self.d_odd, self.d_ev, self.d_0, self.d_h
        ));
        s.push_str(&format!(
            "C indecomposable: {} ({} components)\n",
            self.indecomposable_c, self.mckay.components
        ));
        s.push_str(&format!("white diameter: {}\n", self.white_diameter));
        if let Some(g) = &self.group {
            let e: Vec<String> = g
                .class_formula
                .set
                .values
                .iter()
                .map(|x| x.0.to_string())
                .collect();
            s.push_str(&format!(
                "|G| = {}, |H| = {}, index = {}\nclass formula eigenvalues = {{{}}}, d_0 <= {}\nadjoint test: {}\n",
                g.order,
                g.subgroup_order,
                g.index,
                e.join(", "),
                g.class_formula.d0_bound,
                g.adjoint_test
            ));
        }
        s
    }
}

/// `true` when every entry of the matrix is positive.
pub fn is_positive(a: &ExactMatrix) -> bool {
    a.pattern().is_full()
}

/// `true` iff `x` is a root of `p`.
pub fn has_root(p: &ExactPolynomial, x: &BigRational) -> bool {
    p.eval(x).is_zero()
}

/// Perron–Frobenius value of `C` equals `dim H / dim R`.
pub fn pf_root_matches(report: &DepthReport, ratio: &BigRational) -> bool {
    has_root(&report.minpoly_c, ratio)
        && report
            .eigen_c
            .eigenvalues
            .rationals()
            .iter()
            .all(|v| v <= ratio)
        && !ratio.is_zero()
        && *ratio >= BigRational::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn im(rows: &[&[u64]]) -> InclusionMatrix {
        InclusionMatrix::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn column_of_ones() {
        let m = InclusionMatrix::new(vec![vec![1], vec![1]]).unwrap();
        let r = depth_report(&m, None).unwrap();
        assert_eq!(r.minpoly_b, ExactPolynomial::from_i64(&[0, -2, 1]));
        assert_eq!(r.minpoly_c, ExactPolynomial::from_i64(&[-2, 1]));
        r.validate().unwrap();
    }

    #[test]
    fn s2_in_s3() {
        let r = depth_report(&im(&[&[1, 1, 0], &[0, 1, 1]]), None).unwrap();
        assert_eq!(r.b, ExactMatrix::from_i64(&[vec![2, 1], vec![1, 2]]));
        assert_eq!(r.minpoly_b, ExactPolynomial::from_i64(&[3, -4, 1]));
        assert_eq!(r.minpoly_c, ExactPolynomial::from_i64(&[0, 3, -4, 1]));
        assert_eq!(r.d_0, DepthValue::Finite(3));
        assert_eq!(r.d_h, DepthValue::Finite(5));
        assert_eq!(r.white_diameter, 2);
        assert!(r.indecomposable_c);
        assert!(pf_root_matches(&r, &BigRational::from_integer(3.into())));
    }

    #[test]
    fn a4_in_a5() {
        let m = im(&[
            &[1, 1, 0, 0, 0],
            &[0, 0, 1, 0, 0],
            &[0, 0, 1, 0, 0],
            &[0, 1, 1, 1, 1],
        ]);
        let r = depth_report(&m, None).unwrap();
        assert_eq!(r.d_0, DepthValue::Finite(5));
        assert_eq!(r.d_h, DepthValue::Finite(5));
        let eig: BTreeSet<i64> = r
            .eigen_c
            .eigenvalues
            .rationals()
            .iter()
            .map(|v| v.to_integer().try_into().unwrap())
            .collect();
        assert_eq!(eig, BTreeSet::from([0, 1, 2, 5]));
        assert_eq!(r.minpoly_b, r.minpoly_c);
    }

    #[test]
    fn d8_in_s4() {
        let m = im(&[
            &[1, 1, 0, 0, 0],
            &[0, 1, 1, 0, 0],
            &[0, 0, 0, 1, 0],
            &[0, 0, 0, 1, 1],
            &[0, 0, 0, 0, 1],
        ]);
        let r = depth_report(&m, None).unwrap();
        assert_eq!(r.d_0, DepthValue::Finite(4));
        assert_eq!(r.d_odd, DepthValue::Finite(5));
        assert_eq!(r.d_h, DepthValue::Finite(5));
        assert!(!r.indecomposable_c);
        assert_eq!(r.mckay.components, 2);
        assert_eq!(r.white_diameter, 4);
    }

    #[test]
    fn identity_inclusion() {
        let r = depth_report(&im(&[&[0, 1], &[1, 0]]), None).unwrap();
        assert_eq!(r.d_0, DepthValue::Finite(1));
        assert_eq!(r.d_h, DepthValue::Finite(1));
        let q = mckay_quiver(&ExactMatrix::identity(3), &[]).unwrap();
        assert_eq!(q.edges, vec![(0, 0, 1), (1, 1, 1), (2, 2, 1)]);
    }

    #[test]
    fn dot_output() {
        let g = BipartiteGraph::from_matrix(&im(&[&[1, 1, 0], &[0, 1, 1]]));
        let dot = g.to_dot();
        assert_eq!(dot.matches("fillcolor=white").count(), 2);
        assert_eq!(dot.matches("fillcolor=black").count(), 3);
        assert_eq!(dot.matches(" -- ").count(), 4);
    }

    #[test]
    fn json_round_trip() {
        let r = depth_report(&im(&[&[1, 1, 0], &[0, 1, 1]]), None).unwrap();
        let text = serde_json::to_string(&r).unwrap();
        let back: DepthReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        back.validate().unwrap();
    }
}
