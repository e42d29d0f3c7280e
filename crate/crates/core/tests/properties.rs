//! Randomised property suites: table orthogonality, Hopf axioms, freeness over
//! Hopf subalgebras, and monotone annihilator and trace-ideal chains.

use std::sync::Arc;

use proptest::prelude::*;
use subdepth::chartab::{
    class_fusion, compute_character_table, inclusion_matrix, subgroup_character_table,
    CharacterTable, InclusionMatrix,
};
use subdepth::depthmat::{depth_report, DepthReport};
use subdepth::exactalg::Subspace;
use subdepth::hopfcore::{
    annihilator_chain, build_group_algebra, build_small_quantum_group, group_subalgebra,
    integrals_and_modular, quotient_module, trace_ideals, HopfAlgebraData, HopfInput,
    SubalgebraEmbedding,
};
use subdepth::permgroup::{GroupHandle, GroupInput, SubgroupHandle};

const CAP: usize = 10_000;

fn permutation(degree: usize) -> impl Strategy<Value = Vec<u32>> {
    Just((1..=degree as u32).collect::<Vec<_>>()).prop_shuffle()
}

/// A permutation group on at most five points with a subgroup generated by
/// one or two of its elements.
fn group_pair() -> impl Strategy<Value = (Arc<GroupHandle>, SubgroupHandle)> {
    (2usize..=5)
        .prop_flat_map(|d| (prop::collection::vec(permutation(d), 1..=3), Just(d)))
        .prop_flat_map(|(gens, degree)| {
            let g = GroupInput {
                degree,
                generators: gens,
                ..Default::default()
            }
            .build(CAP)
            .expect("small group");
            let n = g.order();
            (Just(g), prop::collection::vec(0..n, 1..=2))
        })
        .prop_map(|(g, picks)| {
            let h = SubgroupHandle::generated(&g, &picks);
            (g, h)
        })
}

fn freeness_and_chains(h: &HopfAlgebraData, r: &SubalgebraEmbedding) -> Result<(), TestCaseError> {
    prop_assert_eq!(h.dim() % r.dim(), 0);
    let q = quotient_module(h, r).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert_eq!(q.dim() * r.dim(), h.dim());
    let products = q
        .lifts
        .iter()
        .flat_map(|&i| r.basis().iter().map(move |b| h.mul(b, &h.basis(i))));
    prop_assert!(Subspace::span(h.dim(), products).is_full());

    let chain = annihilator_chain(h, &q, 10).map_err(|e| TestCaseError::fail(e.to_string()))?;
    for w in chain.ideals.windows(2) {
        prop_assert!(w[1].space.is_subspace_of(&w[0].space));
    }
    let ir = integrals_and_modular(h, r, &q).map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert_eq!(ir.q_integral_basis.is_empty(), !ir.frobenius);
    let tr =
        trace_ideals(h, &q, &ir.t_r, 3, 1024).map_err(|e| TestCaseError::fail(e.to_string()))?;
    for w in tr.ideals.windows(2) {
        prop_assert!(w[0].is_subspace_of(&w[1]));
    }
    Ok(())
}

fn table(g: &GroupHandle) -> CharacterTable {
    compute_character_table(g, CAP).expect("table")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn character_tables_are_orthogonal((g, h) in group_pair()) {
        let tg = table(&g);
        prop_assert!(tg.verify().is_ok());
        let th = subgroup_character_table(&h, CAP).unwrap();
        prop_assert!(th.verify().is_ok());
        let m = inclusion_matrix(&tg, &th, &class_fusion(&h)).unwrap();
        prop_assert!(m.column_identity_holds(th.degrees(), tg.degrees()));
    }

    #[test]
    fn imported_tables_round_trip((g, _) in group_pair()) {
        let t = table(&g);
        let back = CharacterTable::from_json(&t.to_json(), Some(&g)).unwrap();
        prop_assert_eq!(back.irreducibles(), t.irreducibles());
    }

    #[test]
    fn group_algebras_satisfy_the_axioms((g, h) in group_pair()) {
        let kg = build_group_algebra(&g);
        prop_assert!(kg.verify_axioms().is_ok());
        let rebuilt = kg.to_input();
        let text = serde_json::to_string(&rebuilt).unwrap();
        let bundle = HopfInput::from_json(&text).unwrap().build().unwrap();
        prop_assert!(bundle.hopf.verify_axioms().is_ok());
        prop_assert_eq!(bundle.hopf.dim(), g.order());
        prop_assert!(h.order() > 0 && g.order() % h.order() == 0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn group_algebras_are_free_with_monotone_chains((g, h) in group_pair()
        .prop_filter("keeps exact solves small", |(g, _)| g.order() <= 24)) {
        let kg = build_group_algebra(&g);
        let r = group_subalgebra(&kg, &h);
        freeness_and_chains(&kg, &r)?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn depth_reports_validate(rows in prop::collection::vec(prop::collection::vec(0u64..3, 1..5), 1..5)) {
        let width = rows[0].len();
        let rows: Vec<Vec<u64>> = rows.into_iter().map(|mut r| { r.resize(width, 0); r }).collect();
        if let Ok(m) = InclusionMatrix::new(rows) {
            let r = depth_report(&m, None).unwrap();
            prop_assert!(r.validate().is_ok());
            let back: DepthReport = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
            prop_assert_eq!(back, r);
        }
    }
}

#[test]
fn small_quantum_groups_satisfy_the_axioms_and_are_free_over_their_subalgebras() {
    for n in [2, 3] {
        let sq = build_small_quantum_group(n).unwrap();
        assert!(sq.hopf.verify_axioms().is_ok());
        for name in ["R1", "R2", "B"] {
            freeness_and_chains(&sq.hopf, sq.subalgebra(name).unwrap()).unwrap();
        }
    }
}
