//! Inc-lax terminal detection, the reverse-functor construction, and the
//! biequivalence certifier.

use bicat_core::cell::CellId;
use bicat_core::fixtures::*;
use bicat_core::functors::{constant_pseudofunctor, identity_functor, validate_lax_functor};
use bicat_core::quillen::*;
use bicat_core::slice::lax_slice;

#[test]
fn initial_one_cells_in_fixture_slices() {
    // Collapse slice: every hom is terminal, so every 1-cell is initial.
    let c2 = chaotic(2).unwrap();
    let collapse = constant_pseudofunctor(&c2, &one(), &"o0".into()).unwrap();
    let s = lax_slice(&collapse, &"o0".into()).unwrap();
    for (key, hom) in &s.bicategory.homs {
        if hom.one_cells.is_empty() {
            continue;
        }
        let found = initial_object_in_hom(&s.bicategory, &key.0, &key.1).unwrap();
        assert_eq!(found.as_ref(), hom.one_cells.iter().next());
    }

    // Strict point into BZ2: cross-homs are empty, no initial 1-cell there.
    let strict_point = constant_pseudofunctor(&one(), &bz2(), &"pt".into()).unwrap();
    let s = lax_slice(&strict_point, &"pt".into()).unwrap();
    let objs: Vec<CellId> = s.bicategory.objects.iter().cloned().collect();
    assert_eq!(objs.len(), 2);
    let found = initial_object_in_hom(&s.bicategory, &objs[0], &objs[1]).unwrap();
    assert!(found.is_none());

    // Terminal bicategory: the identity is initial.
    let b = one();
    let found = initial_object_in_hom(&b, &"o0".into(), &"o0".into()).unwrap();
    assert_eq!(found.unwrap().as_str(), "f0_0");
}

#[test]
fn find_terminal_in_lax_slice_over_p2() {
    let f = lax_into_p2();
    let s = lax_slice(&f, &"pt".into()).unwrap();
    let data = find_inc_lax_terminal(&s.bicategory).unwrap().unwrap();
    // Canonical-least of the two qualifying objects is (o0, 0).
    assert_eq!(data.terminal.as_str(), "[o0;0]");
    let candidates = inc_lax_terminal_candidates(&s.bicategory).unwrap();
    let names: Vec<&str> = candidates.iter().map(|c| c.as_str()).collect();
    assert_eq!(names, vec!["[o0;0]", "[o0;1]"]);
}

#[test]
fn no_terminal_in_strict_point_slice() {
    let strict_point = constant_pseudofunctor(&one(), &bz2(), &"pt".into()).unwrap();
    let s = lax_slice(&strict_point, &"pt".into()).unwrap();
    assert!(find_inc_lax_terminal(&s.bicategory).unwrap().is_none());
    assert!(inc_lax_terminal_candidates(&s.bicategory).unwrap().is_empty());
}

#[test]
fn terminal_in_terminal_bicategory() {
    let b = one();
    let data = find_inc_lax_terminal(&b).unwrap().unwrap();
    assert_eq!(data.terminal.as_str(), "o0");
    assert_eq!(data.k1[&CellId::from("o0")].as_str(), "f0_0");
    assert!(validate_inc_lax_terminal(&b, &data).unwrap().passed());
}

#[test]
fn preservation_for_constructive_fixtures() {
    for f in [
        lax_into_p2(),
        constant_pseudofunctor(&chaotic(2).unwrap(), &one(), &"o0".into()).unwrap(),
    ] {
        let assignment = terminal_assignment_by_search(&f).unwrap().unwrap();
        let rep = verify_preservation(&f, &assignment).unwrap();
        assert!(rep.passed(), "{rep}");
    }
}

#[test]
fn es_ef_ff_examples() {
    let c2 = chaotic(2).unwrap();
    let collapse = constant_pseudofunctor(&c2, &one(), &"o0".into()).unwrap();
    let out = check_es_ef_ff(&collapse).unwrap();
    assert!(out.all_hold());

    let strict_point = constant_pseudofunctor(&one(), &bz2(), &"pt".into()).unwrap();
    let out = check_es_ef_ff(&strict_point).unwrap();
    assert!(out.essentially_surjective.holds);
    assert!(!out.essentially_full.holds);
    let witness: Vec<&str> = out
        .essentially_full
        .witness
        .iter()
        .map(|c| c.as_str())
        .collect();
    assert_eq!(witness, vec!["o0", "o0", "g"]);
    assert!(out.fully_faithful.holds);
    assert_eq!(out.quantified_pairs.len(), 1);

    let pick0 = constant_pseudofunctor(&one(), &c2, &"o0".into()).unwrap();
    let out = check_es_ef_ff(&pick0).unwrap();
    assert!(out.all_hold());
}

#[test]
fn quillen_a_on_genuinely_lax_functor() {
    // The full pipeline on the lax functor into P2: G, eta, eps all validate,
    // and eps is lax but not strong, its component at the bottom 1-cell being
    // the non-invertible 2-cell.
    let f = lax_into_p2();
    let assignment = terminal_assignment_by_search(&f).unwrap().unwrap();
    let qa = quillen_a(&f, &assignment).unwrap();
    assert!(qa.g_report.report.passed(), "{}", qa.g_report.report);
    assert!(qa.eta_report.report.passed(), "{}", qa.eta_report.report);
    assert!(qa.eps_report.report.passed(), "{}", qa.eps_report.report);
    assert!(!qa.eps_report.strong);
    assert_eq!(qa.eps.comp1[&CellId::from("pt")].as_str(), "0");
    assert_eq!(qa.eps.comp2[&CellId::from("0")].as_str(), "lt_0_1");
    assert!(!f.tgt.is_invertible_two_cell(&qa.eps.comp2[&CellId::from("0")]));
    // G collapses P2 onto the terminal bicategory.
    assert_eq!(qa.g.obj_map[&CellId::from("pt")].as_str(), "o0");
}

#[test]
fn quillen_a_on_collapse() {
    let c2 = chaotic(2).unwrap();
    let f = constant_pseudofunctor(&c2, &one(), &"o0".into()).unwrap();
    let assignment = terminal_assignment_by_search(&f).unwrap().unwrap();
    let qa = quillen_a(&f, &assignment).unwrap();
    assert!(qa.g_report.report.passed());
    assert!(qa.eta_report.report.passed());
    assert!(qa.eps_report.report.passed());
    assert!(qa.eta_report.strong);
    assert!(qa.eps_report.strong);
    assert_eq!(qa.g.obj_map[&CellId::from("o0")].as_str(), "o0");
}

#[test]
fn quillen_a_on_identity_of_bz2() {
    let f = identity_functor(&bz2());
    let assignment = terminal_assignment_by_search(&f).unwrap().unwrap();
    let qa = quillen_a(&f, &assignment).unwrap();
    assert!(qa.g_report.report.passed(), "{}", qa.g_report.report);
    assert!(qa.eta_report.report.passed());
    assert!(qa.eps_report.report.passed());
    // Every choice is forced in a group delooping: G is the identity again.
    assert_eq!(qa.g.one_map[&CellId::from("e")].as_str(), "e");
    assert_eq!(qa.g.one_map[&CellId::from("g")].as_str(), "g");
}

#[test]
fn quillen_a_on_identity_of_terminal() {
    let f = identity_functor(&one());
    let assignment = terminal_assignment_by_search(&f).unwrap().unwrap();
    let qa = quillen_a(&f, &assignment).unwrap();
    assert!(qa.g_report.report.passed());
    assert!(qa.eta_report.strong);
    assert!(qa.eps_report.strong);
}

#[test]
fn build_witnesses_examples() {
    let c2 = chaotic(2).unwrap();
    let collapse = constant_pseudofunctor(&c2, &one(), &"o0".into()).unwrap();
    let w = build_witnesses(&collapse).unwrap();
    assert_eq!(w.per_object[&CellId::from("o0")].obj_bar.as_str(), "o0");

    let f = identity_functor(&two_group_z2(true));
    let w = build_witnesses(&f).unwrap();
    let ow = &w.per_object[&CellId::from("pt")];
    assert_eq!(ow.obj_bar.as_str(), "pt");
    assert_eq!(ow.equivalence.left.as_str(), "e");
}

#[test]
fn build_witnesses_fails_on_non_essentially_full() {
    let strict_point = constant_pseudofunctor(&one(), &bz2(), &"pt".into()).unwrap();
    match build_witnesses(&strict_point) {
        Err(QuillenError::WitnessSearchFailed { stage, .. }) => {
            assert_eq!(stage, "essential-fullness");
        }
        other => panic!("expected WitnessSearchFailed, got {other:?}"),
    }
}

#[test]
fn whitehead_positive_on_collapse() {
    let c2 = chaotic(2).unwrap();
    let f = constant_pseudofunctor(&c2, &one(), &"o0".into()).unwrap();
    let outcome = whitehead(&f).unwrap();
    let cert = match outcome {
        WhiteheadOutcome::Certificate(c) => c,
        WhiteheadOutcome::Counterexample(e) => panic!("unexpected counterexample: {e:?}"),
    };
    assert!(cert.evidence.g_classification.pseudo);
    assert!(cert.evidence.eta_strong);
    assert!(cert.evidence.eps_strong);
    let rep = check_certificate(&f, &cert).unwrap();
    assert!(rep.passed(), "{rep}");
}

#[test]
fn whitehead_positive_on_identity_of_nontrivial_two_group() {
    let f = identity_functor(&two_group_z2(true));
    let outcome = whitehead(&f).unwrap();
    let cert = match outcome {
        WhiteheadOutcome::Certificate(c) => c,
        WhiteheadOutcome::Counterexample(e) => panic!("unexpected counterexample: {e:?}"),
    };
    let rep = check_certificate(&f, &cert).unwrap();
    assert!(rep.passed(), "{rep}");
    // Determinism: a second run yields an identical certificate.
    let outcome2 = whitehead(&f).unwrap();
    match outcome2 {
        WhiteheadOutcome::Certificate(c2) => assert_eq!(cert, c2),
        _ => panic!("second run diverged"),
    }
}

#[test]
fn whitehead_negative_on_strict_point() {
    let f = constant_pseudofunctor(&one(), &bz2(), &"pt".into()).unwrap();
    let outcome = whitehead(&f).unwrap();
    let e = match outcome {
        WhiteheadOutcome::Counterexample(e) => e,
        WhiteheadOutcome::Certificate(_) => panic!("expected a counterexample"),
    };
    assert!(!e.essentially_full.holds);
    let witness = &e.essentially_full.witness[2];
    assert_eq!(witness.as_str(), "g");
    // Counterexample soundness: no 1-cell maps isomorphically onto g.
    for p in f.src.all_one_cells() {
        let fp = &f.one_map[p];
        assert!(f
            .tgt
            .two_cells_between(fp, witness)
            .iter()
            .all(|c| !f.tgt.is_invertible_two_cell(c)));
    }
}

#[test]
fn whitehead_rejects_non_pseudo_input() {
    let f = lax_into_p2();
    assert!(validate_lax_functor(&f).unwrap().report.passed());
    assert!(matches!(
        whitehead(&f),
        Err(QuillenError::HypothesisNotSatisfied { .. })
    ));
}

#[test]
fn lax_counit_cannot_be_inverted() {
    // The counit from the constructive route on the lax functor is not
    // strong; inversion refuses it, naming the first non-invertible
    // naturality component.
    use bicat_core::adjunctions::{invert_strong_transformation, AdjunctionError};
    let f = lax_into_p2();
    let assignment = terminal_assignment_by_search(&f).unwrap().unwrap();
    let qa = quillen_a(&f, &assignment).unwrap();
    match invert_strong_transformation(&qa.eps) {
        Err(AdjunctionError::NotInvertible { cell }) => assert_eq!(cell.as_str(), "0"),
        other => panic!("expected NotInvertible, got {other:?}"),
    }
}

#[test]
fn whitehead_reverse_of_identity_two_group_is_identity_on_cells() {
    let f = identity_functor(&two_group_z2(true));
    let cert = match whitehead(&f).unwrap() {
        WhiteheadOutcome::Certificate(c) => c,
        _ => panic!("expected a certificate"),
    };
    for (u, image) in &cert.g.one_map {
        assert_eq!(u, image);
    }
    for (gamma, image) in &cert.g.two_map {
        assert_eq!(gamma, image);
    }
    // eps components are the chosen equivalences; eta components the chosen
    // sections; here every choice lands back on the identity cell or e.
    assert_eq!(cert.eps.comp1[&CellId::from("pt")].as_str(), "e");
    assert_eq!(cert.eta.comp1[&CellId::from("pt")].as_str(), "e");
}

#[test]
fn quillen_a_rejects_tampered_terminal_data() {
    // Swap one chosen component for a non-initial 1-cell: the hypothesis
    // check must refuse the assignment.
    let f = identity_functor(&two_group_z2(true));
    let mut assignment = terminal_assignment_by_search(&f).unwrap().unwrap();
    let st = assignment.get_mut(&CellId::from("pt")).unwrap();
    let terminal = st.data.terminal.clone();
    let some_object = st
        .slice
        .bicategory
        .objects
        .iter()
        .find(|o| **o != terminal)
        .unwrap()
        .clone();
    // Point the component at a parallel but different 1-cell.
    let current = st.data.k1[&some_object].clone();
    let hom = st
        .slice
        .bicategory
        .hom(&some_object, &terminal)
        .unwrap();
    let other = hom
        .one_cells
        .iter()
        .find(|c| **c != current)
        .unwrap()
        .clone();
    st.data.k1.insert(some_object, other);
    // The stale naturality constraints no longer typecheck against the
    // swapped component, so the hypothesis validation rejects the data.
    match quillen_a(&f, &assignment) {
        Err(
            QuillenError::HypothesisNotSatisfied { .. } | QuillenError::Malformed(_),
        ) => {}
        other => panic!("expected the tampered data to be rejected, got {other:?}"),
    }
}

#[test]
fn whitehead_positive_across_more_fixtures() {
    // Certified biequivalences beyond the acceptance pair, including a
    // non-identity one between non-isomorphic bicategories (the point picks
    // out a chaotic bicategory) and one with non-invertible 2-cells around
    // (the identity on the ordered delooping).
    let c2 = chaotic(2).unwrap();
    let cases: Vec<(&str, bicat_core::functors::LaxFunctor)> = vec![
        ("Id_P2", identity_functor(&p2())),
        (
            "F_pick0",
            constant_pseudofunctor(&one(), &c2, &"o0".into()).unwrap(),
        ),
        ("Id_chaotic3", identity_functor(&chaotic(3).unwrap())),
        (
            "constant_endo_chaotic2",
            constant_pseudofunctor(&c2, &c2, &"o0".into()).unwrap(),
        ),
        ("Id_BZ3", identity_functor(&bz3())),
    ];
    for (name, f) in cases {
        let cert = match whitehead(&f).unwrap_or_else(|e| panic!("{name}: {e}")) {
            WhiteheadOutcome::Certificate(c) => c,
            WhiteheadOutcome::Counterexample(e) => panic!("{name}: counterexample {e:?}"),
        };
        let rep = check_certificate(&f, &cert).unwrap();
        assert!(rep.passed(), "{name}:\n{rep}");
    }
}

#[test]
fn whitehead_negative_on_skeletal_collapse_of_p2() {
    // The strict functor P2 -> One is essentially surjective and full but
    // not faithful on 2-cells: the hom of P2 has three 2-cells over one.
    let f = constant_pseudofunctor(&p2(), &one(), &"o0".into()).unwrap();
    match whitehead(&f).unwrap() {
        WhiteheadOutcome::Counterexample(e) => {
            assert!(e.essentially_surjective.holds);
            assert!(e.essentially_full.holds);
            assert!(!e.fully_faithful.holds);
            let w: Vec<&str> = e
                .fully_faithful
                .witness
                .iter()
                .map(|c| c.as_str())
                .collect();
            // First failing hom pair in canonical order: (0, 1) has no
            // 2-cell downstairs... rather, upstairs hom(1, 0) is empty while
            // the image hom has one cell.
            assert_eq!(w[0], "pt");
            assert_eq!(w[1], "pt");
        }
        WhiteheadOutcome::Certificate(_) => panic!("expected a counterexample"),
    }
}
