//! Lax slice construction, change-of-slice, and the forgetful projection.

use bicat_core::cell::CellId;
use bicat_core::fixtures::*;
use bicat_core::functors::{
    constant_pseudofunctor, identity_functor, validate_lax_functor, LaxFunctor,
};
use bicat_core::slice::*;
use bicat_core::validate::validate_bicategory;

fn fixture_functors() -> Vec<(String, LaxFunctor)> {
    let c2 = chaotic(2).unwrap();
    vec![
        ("id_one".into(), identity_functor(&one())),
        (
            "collapse".into(),
            constant_pseudofunctor(&c2, &one(), &"o0".into()).unwrap(),
        ),
        (
            "pick0".into(),
            constant_pseudofunctor(&one(), &c2, &"o0".into()).unwrap(),
        ),
        ("lax_into_p2".into(), lax_into_p2()),
        (
            "strict_point_bz2".into(),
            constant_pseudofunctor(&one(), &bz2(), &"pt".into()).unwrap(),
        ),
        ("id_bz2".into(), identity_functor(&bz2())),
        ("id_two_group".into(), identity_functor(&two_group_z2(true))),
    ]
}

#[test]
fn cone_check_examples() {
    let b = one();
    assert!(cone_check(&b, &"f0_0".into(), &"s0_0".into(), &"s0_0".into(), &"s0_0".into()).unwrap());
    let b = bz2();
    assert!(cone_check(&b, &"e".into(), &"1_e".into(), &"1_e".into(), &"1_e".into()).unwrap());
    let b = p2();
    // theta0 = theta1 = (0 => 1), phi = id on 1: (1_1 * id) . lt = lt.
    assert!(cone_check(&b, &"1".into(), &"lt_0_1".into(), &"lt_0_1".into(), &"1_1".into()).unwrap());
    // Mismatched boundaries are ill-typed.
    assert!(cone_check(&b, &"1".into(), &"lt_0_1".into(), &"1_0".into(), &"1_1".into()).is_err());
}

#[test]
fn slice_of_identity_on_terminal_is_terminal() {
    let f = identity_functor(&one());
    let s = lax_slice(&f, &"o0".into()).unwrap();
    assert_eq!(s.bicategory.objects.len(), 1);
    assert_eq!(s.bicategory.all_one_cells().count(), 1);
    assert_eq!(s.bicategory.all_two_cells().count(), 1);
    assert!(validate_bicategory(&s.bicategory).unwrap().passed());
}

#[test]
fn slice_of_collapse_has_terminal_homs() {
    let c2 = chaotic(2).unwrap();
    let f = constant_pseudofunctor(&c2, &one(), &"o0".into()).unwrap();
    let s = lax_slice(&f, &"o0".into()).unwrap();
    assert_eq!(s.bicategory.objects.len(), 2);
    for hom in s.bicategory.homs.values() {
        assert_eq!(hom.one_cells.len(), 1);
        assert_eq!(hom.two_cells.len(), 1);
    }
    assert!(validate_bicategory(&s.bicategory).unwrap().passed());
}

#[test]
fn slice_of_lax_functor_into_p2() {
    let f = lax_into_p2();
    let s = lax_slice(&f, &"pt".into()).unwrap();
    assert_eq!(s.bicategory.objects.len(), 2);
    for hom in s.bicategory.homs.values() {
        assert_eq!(hom.one_cells.len(), 1);
        assert_eq!(hom.two_cells.len(), 1);
    }
    assert!(validate_bicategory(&s.bicategory).unwrap().passed());
}

#[test]
fn all_fixture_slices_validate() {
    for (name, f) in fixture_functors() {
        assert!(
            validate_lax_functor(&f).unwrap().report.passed(),
            "{name} functor invalid"
        );
        for x in f.tgt.objects.clone() {
            let s = lax_slice(&f, &x).unwrap();
            let rep = validate_bicategory(&s.bicategory).unwrap();
            assert!(rep.passed(), "slice of {name} over {x} failed:\n{rep}");
        }
    }
}

#[test]
fn all_change_of_slice_functors_are_strict() {
    for (name, f) in fixture_functors() {
        let one_cells: Vec<CellId> = f.tgt.all_one_cells().cloned().collect();
        for u in one_cells {
            let change = change_of_slice(&f, &u).unwrap();
            let rep = validate_lax_functor(&change.functor).unwrap();
            assert!(
                rep.report.passed(),
                "change-of-slice of {name} at {u} failed:\n{}",
                rep.report
            );
            assert!(
                rep.classification.strict,
                "change-of-slice of {name} at {u} is not strict"
            );
        }
    }
}

#[test]
fn change_of_slice_on_bz2_swaps_objects() {
    let f = identity_functor(&bz2());
    let change = change_of_slice(&f, &"g".into()).unwrap();
    // (pt, e) -> (pt, g e) = (pt, g) and vice versa.
    let o_e = change.source.tags.objects_rev[&("pt".into(), "e".into())].clone();
    let o_g = change.source.tags.objects_rev[&("pt".into(), "g".into())].clone();
    let t_e = change.target.tags.objects_rev[&("pt".into(), "e".into())].clone();
    let t_g = change.target.tags.objects_rev[&("pt".into(), "g".into())].clone();
    assert_eq!(change.functor.obj_map[&o_e], t_g);
    assert_eq!(change.functor.obj_map[&o_g], t_e);
}

#[test]
fn change_of_slice_on_p2_join_is_identity_on_objects() {
    let f = lax_into_p2();
    let change = change_of_slice(&f, &"0".into()).unwrap();
    for (o, img) in &change.functor.obj_map {
        let (a, fa) = &change.source.tags.objects[o];
        let (a2, fa2) = &change.target.tags.objects[img];
        assert_eq!(a, a2);
        assert_eq!(fa, fa2); // 0 v f = f
    }
}

#[test]
fn forgetful_projection_is_strict() {
    for (name, f) in fixture_functors() {
        for x in f.tgt.objects.clone() {
            let s = lax_slice(&f, &x).unwrap();
            let proj = forgetful_functor(&f, &s).unwrap();
            let rep = validate_lax_functor(&proj).unwrap();
            assert!(
                rep.report.passed(),
                "forgetful of {name} over {x} failed:\n{}",
                rep.report
            );
            assert!(rep.classification.strict);
        }
    }
}

#[test]
fn slice_rejects_unknown_base_object() {
    let f = identity_functor(&bz2());
    assert!(matches!(
        lax_slice(&f, &"nope".into()),
        Err(SliceError::UnknownCell { .. })
    ));
}
