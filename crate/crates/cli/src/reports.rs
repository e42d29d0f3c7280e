//! Report assembly for each subcommand.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use subdepth::chartab::{
    class_fusion, compute_character_table, frobenius_reciprocity_holds, inclusion_matrix,
    permutation_character, subgroup_character_table, CharacterTable, InclusionMatrix, TableJson,
};
use subdepth::corpus::SweepReport;
use subdepth::depthmat::{depth_report, BipartiteGraph, DepthReport};
use subdepth::exactalg::Scalar;
use subdepth::hopfcore::{
    annihilator_chain, faithful_check, idealizer_and_end_q, integral_image_check,
    integrals_and_modular, quotient_module, trace_ideals, HopfAlgebraData, HopfBundle,
};
use subdepth::mackey::{
    combinatorial_bound_check, core_depth_bound, hecke_algebra, mackey_restrict,
    permutation_character_power, q_tensor_decomposition, CombinatorialBound, CoreDepthBound,
    HeckeAlgebra, QSummandJson,
};
use subdepth::permgroup::{is_ti_subgroup, GroupHandle, GroupInput, SubgroupHandle, TiStatus};
use subdepth::{Error, Result};

#[derive(Clone, Copy, Debug)]
pub struct Caps {
    pub order: usize,
    pub tensor_dim: usize,
}

/// A group file with one chosen subgroup.
pub struct GroupPair {
    pub name: Option<String>,
    pub subgroup_name: String,
    pub group: Arc<GroupHandle>,
    pub subgroup: SubgroupHandle,
}

pub fn load_pair(input: &GroupInput, subgroup: Option<&str>, caps: Caps) -> Result<GroupPair> {
    let group = input.build(caps.order)?;
    let name = match subgroup {
        Some(s) => s.to_string(),
        None => input
            .subgroups
            .keys()
            .next()
            .cloned()
            .ok_or_else(|| Error::Parse {
                location: "subgroups".into(),
                message: "no subgroup given".into(),
            })?,
    };
    let sub = input.subgroup(&group, &name)?.ok_or_else(|| Error::Parse {
        location: format!("subgroups.{name}"),
        message: "no such subgroup".into(),
    })?;
    Ok(GroupPair {
        name: input.name.clone(),
        subgroup_name: name,
        group,
        subgroup: sub,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupPairReport {
    pub group: Option<String>,
    pub subgroup: String,
    pub order: usize,
    pub subgroup_order: usize,
    pub depth: DepthReport,
    pub permutation_character: Vec<u64>,
    pub frobenius_reciprocity: bool,
    pub ti: TiStatus,
    pub core_bound: CoreDepthBound,
    pub combinatorial: CombinatorialBound,
    /// `Q` restricted to the subgroup, one summand per double coset.
    pub mackey_restriction: Vec<QSummandJson>,
    pub hecke: HeckeSummary,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeckeSummary {
    pub dim: usize,
    pub indices: Vec<u64>,
    pub commutative: bool,
}

impl GroupPairReport {
    pub fn validate(&self) -> Result<()> {
        self.depth.validate()?;
        if !self.frobenius_reciprocity {
            return Err(Error::Assertion("Frobenius reciprocity fails".into()));
        }
        if self.combinatorial.holds == Some(false) {
            return Err(Error::Assertion("d_h exceeds d_c_ev + 1".into()));
        }
        Ok(())
    }
}

pub fn group_tables(pair: &GroupPair, caps: Caps) -> Result<(CharacterTable, InclusionMatrix)> {
    let tab_g = compute_character_table(&pair.group, caps.order)?;
    let tab_h = subgroup_character_table(&pair.subgroup, caps.order)?;
    let m = inclusion_matrix(&tab_g, &tab_h, &class_fusion(&pair.subgroup))?;
    Ok((tab_g, m))
}

pub fn group_pair_report(pair: &GroupPair, caps: Caps) -> Result<GroupPairReport> {
    let h = &pair.subgroup;
    let (tab_g, m) = group_tables(pair, caps)?;
    let depth = depth_report(&m, Some(h))?;
    let pc = permutation_character(h);
    let hecke = hecke_algebra(h)?;
    let report = GroupPairReport {
        group: pair.name.clone(),
        subgroup: pair.subgroup_name.clone(),
        order: pair.group.order(),
        subgroup_order: h.order(),
        frobenius_reciprocity: frobenius_reciprocity_holds(&tab_g, &m, &pc),
        permutation_character: pc,
        ti: is_ti_subgroup(h),
        core_bound: core_depth_bound(h, true),
        combinatorial: combinatorial_bound_check(h, depth.d_h.finite()),
        mackey_restriction: mackey_restrict(h, h).to_json(),
        hecke: HeckeSummary {
            dim: hecke.dim(),
            indices: hecke.indices.clone(),
            commutative: hecke.is_commutative(),
        },
        depth,
    };
    report.validate()?;
    Ok(report)
}

pub fn group_pair_text(r: &GroupPairReport) -> String {
    let mut s = String::new();
    s += &format!(
        "pair {} <= {} (|H| = {}, |G| = {})\n",
        r.subgroup,
        r.group.as_deref().unwrap_or("G"),
        r.subgroup_order,
        r.order
    );
    s += &r.depth.to_text();
    s += &format!("permutation character {:?}\n", r.permutation_character);
    s += &format!(
        "core order {}, r = {}, bounds d_Q <= {}, d_h <= {}\n",
        r.core_bound.core_order, r.core_bound.r, r.core_bound.bound_d_q, r.core_bound.bound_d_h
    );
    s += &format!(
        "d_c_ev = {}, bracket {:?}, d_c = 1: {}\n",
        r.combinatorial.d_c_ev, r.combinatorial.d_c_bracket, r.combinatorial.d_c_is_one
    );
    s += &format!("TI {}, normal {}\n", r.ti.ti, r.ti.normal);
    s += &format!(
        "Q restricted to H: {} summands, orders {:?}\n",
        r.mackey_restriction.len(),
        r.mackey_restriction
            .iter()
            .map(|q| r.subgroup_order / q.index)
            .collect::<Vec<_>>()
    );
    s += &format!(
        "Hecke algebra: dim {}, indices {:?}, commutative {}\n",
        r.hecke.dim, r.hecke.indices, r.hecke.commutative
    );
    s
}

/// Bipartite graph and McKay quiver in one DOT file.
pub fn depth_dot(r: &DepthReport) -> String {
    let mut s = BipartiteGraph::from_matrix(&r.m).to_dot();
    s.push('\n');
    s += &r.mckay.to_dot();
    s
}

/// Accepts `{"m": [[...]]}` or a bare array of rows.
pub fn parse_matrix(text: &str) -> Result<InclusionMatrix> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum MatrixFile {
        Wrapped { m: Vec<Vec<u64>> },
        Bare(Vec<Vec<u64>>),
    }
    let parsed: MatrixFile = serde_json::from_str(text).map_err(|e| Error::Parse {
        location: format!("line {} column {}", e.line(), e.column()),
        message: format!("expected {{\"m\": [[...]]}} or [[...]] of nonnegative integers: {e}"),
    })?;
    let rows = match parsed {
        MatrixFile::Wrapped { m } | MatrixFile::Bare(m) => m,
    };
    InclusionMatrix::new(rows)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MackeyReport {
    pub power: usize,
    pub index: usize,
    pub summands: Vec<QSummandJson>,
    pub dimension: u64,
    pub character: Vec<u64>,
    pub character_matches: bool,
}

pub fn mackey_report(pair: &GroupPair, power: usize) -> Result<MackeyReport> {
    let d = q_tensor_decomposition(&pair.subgroup, power)?;
    let character = d.character();
    let expected = permutation_character_power(&pair.subgroup, power);
    let report = MackeyReport {
        power,
        index: pair.subgroup.index(),
        summands: d.to_json(),
        dimension: d.dimension(),
        character_matches: character == expected,
        character,
    };
    if !report.character_matches {
        return Err(Error::Assertion(
            "character of the decomposition differs from the power of the permutation character"
                .into(),
        ));
    }
    Ok(report)
}

pub fn mackey_text(r: &MackeyReport) -> String {
    let mut s = format!(
        "Q^{} has {} summands, dimension {} = {}^{}\n",
        r.power,
        r.summands.len(),
        r.dimension,
        r.index,
        r.power
    );
    for q in &r.summands {
        s += &format!(
            "{} x Q_S, |G:S| = {}, S generated by {:?}\n",
            q.multiplicity, q.index, q.subgroup_generators
        );
    }
    s += &format!("character {:?}\n", r.character);
    s
}

pub fn sweep_text(report: &SweepReport) -> String {
    let mut s = String::new();
    for row in &report.rows {
        s += &format!(
            "{:<10} |G| = {:>3}  |H| = {:>3}  d_0 = {:<3} d_h = {}\n",
            row.group,
            row.group_order,
            row.subgroup_order,
            row.report.d_0.to_string(),
            row.report.d_h
        );
    }
    s += &format!(
        "{} pairs, {} with d_0 > d_h\n",
        report.rows.len(),
        report.violations.len()
    );
    s
}

pub fn hecke_report(pair: &GroupPair) -> Result<HeckeAlgebra> {
    let h = hecke_algebra(&pair.subgroup)?;
    if !h.is_associative() || !h.has_unit() {
        return Err(Error::Assertion(
            "Hecke algebra is not unital associative".into(),
        ));
    }
    Ok(h)
}

pub fn hecke_text(h: &HeckeAlgebra) -> String {
    let mut s = format!(
        "Hecke algebra of dimension {}, commutative {}\nindices {:?}\n",
        h.dim(),
        h.is_commutative(),
        h.indices
    );
    for (i, row) in h.mu.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            s += &format!("b{} b{} = {:?}\n", i + 1, j + 1, v);
        }
    }
    s
}

pub fn chartab_text(t: &CharacterTable) -> String {
    let mut s = format!("order {}, {} classes\n", t.order(), t.num_classes());
    s += &format!("class sizes {:?}\n", t.class_sizes());
    for (i, row) in t.irreducibles().iter().enumerate() {
        s += &format!(
            "chi{} [{}]\n",
            i + 1,
            row.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        );
    }
    s
}

/// Imported table checked against the group, or a fresh one.
pub fn chartab(input: &GroupInput, import: Option<&str>, caps: Caps) -> Result<CharacterTable> {
    let g = input.build(caps.order)?;
    match import {
        None => compute_character_table(&g, caps.order),
        Some(text) => {
            let json: TableJson = serde_json::from_str(text).map_err(|e| Error::Parse {
                location: format!("table line {} column {}", e.line(), e.column()),
                message: e.to_string(),
            })?;
            CharacterTable::from_json(&json, Some(&g))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HopfPairReport {
    pub dim_h: usize,
    pub subalgebra: String,
    pub dim_r: usize,
    pub dim_q: usize,
    pub q_basis: Vec<String>,
    pub dim_r_plus_h: usize,
    pub dim_ann_q: usize,
    pub ann_q_is_hopf_ideal: bool,
    pub annihilator_chain: Vec<usize>,
    pub ell_q: Option<usize>,
    pub ell_q_exceeds: Option<usize>,
    pub dim_hopf_core_ideal: Option<usize>,
    pub t_r: String,
    pub t_h: String,
    pub frobenius: bool,
    pub q_integrals: usize,
    pub semisimple_extension: bool,
    pub q_isomorphic_to_t_r_h: bool,
    pub trace_ideals: Vec<usize>,
    pub l_q: Option<usize>,
    pub trace_chain_partial: bool,
    pub tau_q_equals_h_t_r_h: bool,
    pub dim_t: usize,
    pub dim_end_q: usize,
    pub normal: bool,
    pub faithful: bool,
    pub central_meet_zero: bool,
}

/// Nonzero terms of an element with the basis labels.
pub fn format_element(h: &HopfAlgebraData, v: &[Scalar]) -> String {
    let terms: Vec<String> = v
        .iter()
        .zip(h.labels())
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, l)| {
            if c.is_one() {
                l.clone()
            } else {
                format!("({c}){l}")
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

pub fn hopf_pair_report(
    bundle: &HopfBundle,
    sub: Option<&str>,
    caps: Caps,
) -> Result<HopfPairReport> {
    let h = &bundle.hopf;
    let name = match sub {
        Some(s) => s.to_string(),
        None => bundle
            .subalgebras
            .keys()
            .next()
            .cloned()
            .ok_or_else(|| Error::Parse {
                location: "subalgebras".into(),
                message: "no subalgebra given".into(),
            })?,
    };
    let r = bundle.subalgebras.get(&name).ok_or_else(|| Error::Parse {
        location: format!("subalgebras.{name}"),
        message: "no such subalgebra".into(),
    })?;
    let q = quotient_module(h, r)?;
    let chain = annihilator_chain(h, &q, 8)?;
    let ir = integrals_and_modular(h, r, &q)?;
    let tr = trace_ideals(h, &q, &ir.t_r, 4, caps.tensor_dim)?;
    let id = idealizer_and_end_q(h, r, &q)?;
    let f = faithful_check(h, &q);
    if f.faithful != f.central_meet_zero {
        return Err(Error::Assertion(format!(
            "Ann Q = 0 is {} but R⁺H ∩ Z(H) = 0 is {}",
            f.faithful, f.central_meet_zero
        )));
    }
    Ok(HopfPairReport {
        dim_h: h.dim(),
        subalgebra: name,
        dim_r: r.dim(),
        dim_q: q.dim(),
        q_basis: q.labels(h),
        dim_r_plus_h: q.r_plus_h.dim(),
        dim_ann_q: chain.ideals[0].dim(),
        ann_q_is_hopf_ideal: chain.ideals[0].hopf_ideal,
        annihilator_chain: chain.dims(),
        ell_q: chain.ell_q,
        ell_q_exceeds: chain.lower_bound,
        dim_hopf_core_ideal: chain.hopf_core_ideal.as_ref().map(|s| s.dim()),
        t_r: format_element(h, &ir.t_r),
        t_h: format_element(h, &ir.t_h),
        frobenius: ir.frobenius,
        q_integrals: ir.q_integral_basis.len(),
        semisimple_extension: ir.semisimple_extension,
        q_isomorphic_to_t_r_h: integral_image_check(h, &q, &ir.t_r),
        trace_ideals: tr.dims(),
        l_q: tr.l_q,
        trace_chain_partial: tr.partial,
        tau_q_equals_h_t_r_h: tr.htrh_check,
        dim_t: id.t.dim(),
        dim_end_q: id.dim_end_q,
        normal: id.normal,
        faithful: f.faithful,
        central_meet_zero: f.central_meet_zero,
    })
}

pub fn hopf_text(r: &HopfPairReport) -> String {
    let mut m = BTreeMap::new();
    let v = serde_json::to_value(r).expect("serialisable");
    if let serde_json::Value::Object(o) = v {
        for (k, x) in o {
            m.insert(k, x.to_string());
        }
    }
    m.into_iter().map(|(k, v)| format!("{k}: {v}\n")).collect()
}
