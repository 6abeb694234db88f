//! Evaluator behaviour and the constraint-coherence smoke check.

use bicat_core::calculus::{boundary, constraint_coherence_check, eval, CalculusError, TwoCellExpr};
use bicat_core::cell::CellId;
use bicat_core::fixtures::*;

#[test]
fn boundary_of_identity_cell() {
    let b = bz2();
    let (s, t) = boundary(&b, &TwoCellExpr::id2("g")).unwrap();
    assert_eq!((s.as_str(), t.as_str()), ("g", "g"));
}

#[test]
fn boundary_of_left_unitor_in_p2() {
    // l_1: 0 v 1 => 1, and 0 v 1 = 1.
    let b = p2();
    let (s, t) = boundary(&b, &TwoCellExpr::lunit("1")).unwrap();
    assert_eq!((s.as_str(), t.as_str()), ("1", "1"));
}

#[test]
fn boundary_of_composite_in_terminal_bicategory() {
    let b = one();
    let e = TwoCellExpr::vcomp(
        TwoCellExpr::id2("f0_0"),
        TwoCellExpr::assoc("f0_0", "f0_0", "f0_0"),
    );
    let (s, t) = boundary(&b, &e).unwrap();
    assert_eq!((s.as_str(), t.as_str()), ("f0_0", "f0_0"));
}

#[test]
fn eval_horizontal_composite_of_identities() {
    // g . g = e in BZ2, identities compose to identities.
    let b = bz2();
    let got = eval(
        &b,
        &TwoCellExpr::hcomp(TwoCellExpr::id2("g"), TwoCellExpr::id2("g")),
    )
    .unwrap();
    assert_eq!(got.as_str(), "1_e");
}

#[test]
fn eval_associator_in_nontrivial_two_group() {
    let b = two_group_z2(true);
    let got = eval(&b, &TwoCellExpr::assoc("g", "g", "g")).unwrap();
    assert_eq!(got.as_str(), "a@g");
}

#[test]
fn eval_inverse_pair_cancels() {
    let b = one();
    let got = eval(
        &b,
        &TwoCellExpr::vcomp(TwoCellExpr::lunit("f0_0"), TwoCellExpr::lunit_inv("f0_0")),
    )
    .unwrap();
    assert_eq!(got.as_str(), "s0_0");
}

#[test]
fn vertical_identity_is_neutral() {
    // eval(vcomp(e, id2(source))) = eval(e) over a spread of generators.
    for b in [one(), bz2(), p2(), two_group_z2(true)] {
        let mut exprs = Vec::new();
        for f in b.all_one_cells() {
            exprs.push(TwoCellExpr::lunit(f.clone()));
            exprs.push(TwoCellExpr::runit_inv(f.clone()));
            exprs.push(TwoCellExpr::id2(f.clone()));
        }
        for a in b.all_two_cells() {
            exprs.push(TwoCellExpr::cell(a.clone()));
        }
        for e in exprs {
            let (src, _) = boundary(&b, &e).unwrap();
            let padded = TwoCellExpr::vcomp(e.clone(), TwoCellExpr::id2(src));
            assert_eq!(eval(&b, &padded).unwrap(), eval(&b, &e).unwrap());
        }
    }
}

#[test]
fn unknown_cell_is_reported() {
    let b = bz2();
    match eval(&b, &TwoCellExpr::cell("nope")) {
        Err(CalculusError::UnknownCell { id }) => assert_eq!(id.as_str(), "nope"),
        other => panic!("expected UnknownCell, got {other:?}"),
    }
}

#[test]
fn ill_typed_vertical_composite_is_reported() {
    let b = p2();
    // lt_0_1 . lt_0_1 does not typecheck (target 1 vs source 0).
    let e = TwoCellExpr::vcomp(TwoCellExpr::cell("lt_0_1"), TwoCellExpr::cell("lt_0_1"));
    assert!(matches!(eval(&b, &e), Err(CalculusError::IllTyped { .. })));
}

#[test]
fn coherence_smoke_on_accepted_fixtures() {
    for (name, b) in [
        ("one", one()),
        ("bz2", bz2()),
        ("p2", p2()),
        ("two_group_trivial", two_group_z2(false)),
        ("two_group_nontrivial", two_group_z2(true)),
        ("chaotic2", chaotic(2).unwrap()),
    ] {
        let disc = constraint_coherence_check(&b, 4, 5).unwrap();
        assert!(disc.is_empty(), "{name}: {disc:?}");
    }
}

#[test]
fn coherence_smoke_catches_a_broken_associator() {
    // Destroying the pentagon also breaks path-independence of the move graph.
    let mut b = two_group_z2(true);
    let key = (CellId::from("g"), CellId::from("g"), CellId::from("e"));
    b.assoc.insert(key.clone(), CellId::from("a@e"));
    b.assoc_inv.insert(key, CellId::from("a@e"));
    let disc = constraint_coherence_check(&b, 4, 5).unwrap();
    assert!(!disc.is_empty());
}
