//! Lax functor, transformation, and modification validators on the fixtures.

use std::collections::BTreeMap;

use bicat_core::cell::CellId;
use bicat_core::fixtures::*;
use bicat_core::functors::*;
use bicat_core::report::AxiomTag;

#[test]
fn identity_functor_is_strict() {
    for b in [one(), bz2(), p2(), two_group_z2(true), chaotic(3).unwrap()] {
        let f = identity_functor(&b);
        let rep = validate_lax_functor(&f).unwrap();
        assert!(rep.report.passed(), "{}", rep.report);
        assert!(rep.classification.strict);
        assert!(rep.classification.pseudo);
        assert!(rep.classification.strictly_unitary);
    }
}

#[test]
fn lax_into_p2_is_lax_but_not_unitary() {
    let f = lax_into_p2();
    let rep = validate_lax_functor(&f).unwrap();
    assert!(rep.report.passed(), "{}", rep.report);
    assert!(!rep.classification.unitary);
    assert!(!rep.classification.pseudo);
    assert!(!rep.classification.strict);
}

#[test]
fn identity_on_cells_between_cocycle_classes_fails_hexagon() {
    // Identity maps from the nontrivial to the trivial two-group with
    // identity comparison cells: the hexagon pins the cocycle mismatch at
    // exactly (g, g, g).
    let src = two_group_z2(true);
    let tgt = two_group_z2(false);
    let mut f = identity_functor(&src);
    f.tgt = tgt;
    let rep = validate_lax_functor(&f).unwrap();
    assert!(!rep.report.passed());
    let hexagon: Vec<Vec<&str>> = rep
        .report
        .violations
        .iter()
        .filter(|v| v.axiom == AxiomTag::LaxAssociativity)
        .map(|v| v.witness.iter().map(|c| c.as_str()).collect())
        .collect();
    assert_eq!(hexagon, vec![vec!["g", "g", "g"]]);
}

#[test]
fn constant_pseudofunctor_classification() {
    let a = chaotic(2).unwrap();
    let b = bz2();
    let f = constant_pseudofunctor(&a, &b, &"pt".into()).unwrap();
    let rep = validate_lax_functor(&f).unwrap();
    assert!(rep.report.passed(), "{}", rep.report);
    assert!(rep.classification.pseudo);
    assert!(rep.classification.strictly_unitary);

    let f = constant_pseudofunctor(&one(), &one(), &"o0".into()).unwrap();
    assert!(validate_lax_functor(&f).unwrap().report.passed());
}

#[test]
fn constant_pseudofunctor_rejects_missing_object() {
    let a = one();
    let b = bz2();
    match constant_pseudofunctor(&a, &b, &"nope".into()) {
        Err(FunctorError::UnknownCell { id }) => assert_eq!(id.as_str(), "nope"),
        other => panic!("expected UnknownCell, got {other:?}"),
    }
}

#[test]
fn composition_closure_and_identity() {
    let f_lax = lax_into_p2();
    let id_one = identity_functor(&one());
    let composed = compose_lax_functors(&f_lax, &id_one).unwrap();
    assert_eq!(composed, f_lax);

    let collapse = constant_pseudofunctor(&chaotic(2).unwrap(), &one(), &"o0".into()).unwrap();
    let pick = constant_pseudofunctor(&one(), &chaotic(2).unwrap(), &"o0".into()).unwrap();
    let endo = compose_lax_functors(&collapse, &pick).unwrap();
    assert!(validate_lax_functor(&endo).unwrap().report.passed());

    // Strict associativity of composition as table data.
    let left = compose_lax_functors(&compose_lax_functors(&pick, &collapse).unwrap(), &pick).unwrap();
    let right = compose_lax_functors(&pick, &compose_lax_functors(&collapse, &pick).unwrap()).unwrap();
    assert_eq!(left, right);
}

#[test]
fn composition_rejects_mismatch() {
    let f = identity_functor(&one());
    let g = identity_functor(&bz2());
    assert!(matches!(
        compose_lax_functors(&g, &f),
        Err(FunctorError::Mismatch { .. })
    ));
}

#[test]
fn identity_transformation_is_strong() {
    for b in [one(), bz2(), p2(), two_group_z2(true)] {
        let f = identity_functor(&b);
        let t = identity_transformation(&f).unwrap();
        let rep = validate_lax_transformation(&t).unwrap();
        assert!(rep.report.passed(), "{}", rep.report);
        assert!(rep.strong);
    }
}

#[test]
fn conjugation_transformation_on_bz2() {
    // Components g on the identity functor of BZ2; the naturality cells are
    // forced identities because the group is abelian.
    let b = bz2();
    let f = identity_functor(&b);
    let mut comp1 = BTreeMap::new();
    comp1.insert(CellId::from("pt"), CellId::from("g"));
    let mut comp2 = BTreeMap::new();
    for p in ["e", "g"] {
        // (p . g => g . p), both composites are equal 1-cells.
        let src = b.horizontal1(&p.into(), &"g".into()).unwrap();
        comp2.insert(CellId::from(p), b.id2_of(src).unwrap().clone());
    }
    let t = LaxTransformation {
        src: f.clone(),
        tgt: f,
        comp1,
        comp2,
    };
    let rep = validate_lax_transformation(&t).unwrap();
    assert!(rep.report.passed(), "{}", rep.report);
    assert!(rep.strong);
}

#[test]
fn twisted_transformation_on_trivial_two_group() {
    // On the trivial two-group, components e with naturality labels
    // x_e = 0, x_g = a form a valid strong transformation.
    let b = two_group_z2(false);
    let f = identity_functor(&b);
    let mut comp1 = BTreeMap::new();
    comp1.insert(CellId::from("pt"), CellId::from("e"));
    let mut comp2 = BTreeMap::new();
    comp2.insert(CellId::from("e"), CellId::from("e@e"));
    comp2.insert(CellId::from("g"), CellId::from("a@g"));
    let t = LaxTransformation {
        src: f.clone(),
        tgt: f.clone(),
        comp1,
        comp2,
    };
    let rep = validate_lax_transformation(&t).unwrap();
    assert!(rep.report.passed(), "{}", rep.report);
    assert!(rep.strong);

    // No modification exists from the identity transformation to the twisted
    // one: every candidate fails at the 1-cell g.
    let id_t = identity_transformation(&f).unwrap();
    for label in ["a@e", "e@e"] {
        let mut comp = BTreeMap::new();
        comp.insert(CellId::from("pt"), CellId::from(label));
        let m = Modification {
            src: id_t.clone(),
            tgt: t.clone(),
            comp,
        };
        let rep = validate_modification(&m).unwrap();
        assert!(!rep.report.passed());
        let witness: Vec<&str> = rep.report.violations[0]
            .witness
            .iter()
            .map(|c| c.as_str())
            .collect();
        assert_eq!(witness, vec!["g"]);
    }
}

#[test]
fn identity_modification_passes_and_composes() {
    let b = two_group_z2(true);
    let f = identity_functor(&b);
    let t = identity_transformation(&f).unwrap();
    let m = identity_modification(&t).unwrap();
    let rep = validate_modification(&m).unwrap();
    assert!(rep.report.passed());
    assert!(rep.invertible);
    let mm = compose_modifications(&m, &m).unwrap();
    assert!(validate_modification(&mm).unwrap().report.passed());
}

#[test]
fn unique_modification_in_chaotic() {
    // In a chaotic bicategory all parallel transformations are connected by
    // the unique candidate modification.
    let b = chaotic(2).unwrap();
    let f = identity_functor(&b);
    let t = identity_transformation(&f).unwrap();
    let m = identity_modification(&t).unwrap();
    assert!(validate_modification(&m).unwrap().report.passed());
}

#[test]
fn transformation_composition_validates() {
    let b = bz2();
    let f = identity_functor(&b);
    let t = identity_transformation(&f).unwrap();
    let tt = compose_transformations(&t, &t).unwrap();
    let rep = validate_lax_transformation(&tt).unwrap();
    assert!(rep.report.passed(), "{}", rep.report);
    assert!(rep.strong);
}

#[test]
fn classification_flags_are_consistent() {
    // strict => strictly-unitary => unitary, and pseudo holds exactly when
    // every comparison cell is invertible.
    let c2 = chaotic(2).unwrap();
    let functors = vec![
        identity_functor(&two_group_z2(true)),
        lax_into_p2(),
        constant_pseudofunctor(&c2, &one(), &"o0".into()).unwrap(),
        constant_pseudofunctor(&one(), &c2, &"o0".into()).unwrap(),
        constant_pseudofunctor(&c2, &bz2(), &"pt".into()).unwrap(),
        constant_pseudofunctor(&one(), &p2(), &"pt".into()).unwrap(),
    ];
    for f in functors {
        let rep = validate_lax_functor(&f).unwrap();
        assert!(rep.report.passed());
        let c = rep.classification;
        if c.strict {
            assert!(c.strictly_unitary);
        }
        if c.strictly_unitary {
            assert!(c.unitary);
        }
        let all_invertible = f.f0.values().all(|v| f.tgt.is_invertible_two_cell(v))
            && f.f2.values().all(|v| f.tgt.is_invertible_two_cell(v));
        assert_eq!(c.pseudo, all_invertible);
    }
}
