//! Adjunctions, triangle identities, and the mate calculus, checked
//! exhaustively over the fixtures.

use bicat_core::adjunctions::*;
use bicat_core::cell::CellId;
use bicat_core::fixtures::*;
use bicat_core::FiniteBicategory;

/// Enumerate all quadruples passing the triangle identities.
fn all_adjunctions(b: &FiniteBicategory) -> Vec<Adjunction> {
    let mut out = Vec::new();
    let one: Vec<CellId> = b.all_one_cells().cloned().collect();
    for f in &one {
        let (x, y) = b.one_cell_boundary(f).unwrap();
        let (x, y) = (x.clone(), y.clone());
        for g in &one {
            let (gs, gt) = b.one_cell_boundary(g).unwrap();
            if gs != &y || gt != &x {
                continue;
            }
            let gf = match b.horizontal1(g, f) {
                Some(c) => c.clone(),
                None => continue,
            };
            let fg = match b.horizontal1(f, g) {
                Some(c) => c.clone(),
                None => continue,
            };
            let id_x = b.id1.get(&x).unwrap();
            let id_y = b.id1.get(&y).unwrap();
            for unit in b.two_cells_between(id_x, &gf) {
                for counit in b.two_cells_between(&fg, id_y) {
                    let adj = Adjunction {
                        left: f.clone(),
                        right: g.clone(),
                        unit: unit.clone(),
                        counit,
                    };
                    if check_adjunction(b, &adj).unwrap().report.passed() {
                        out.push(adj);
                    }
                }
            }
        }
    }
    out
}

fn adjoint_equivalences(b: &FiniteBicategory) -> Vec<Adjunction> {
    all_adjunctions(b)
        .into_iter()
        .filter(|adj| check_adjunction(b, adj).unwrap().adjoint_equivalence)
        .collect()
}

#[test]
fn bz2_group_delooping_adjunctions() {
    let b = bz2();
    let adj = Adjunction {
        left: "g".into(),
        right: "g".into(),
        unit: "1_e".into(),
        counit: "1_e".into(),
    };
    let rep = check_adjunction(&b, &adj).unwrap();
    assert!(rep.report.passed(), "{}", rep.report);
    assert!(rep.adjoint_equivalence);
}

#[test]
fn chaotic_unique_quadruple_is_adjunction() {
    let b = chaotic(2).unwrap();
    let adj = Adjunction {
        left: "f0_1".into(),
        right: "f1_0".into(),
        unit: "s0_0".into(),
        counit: "s1_1".into(),
    };
    assert!(check_adjunction(&b, &adj).unwrap().report.passed());
}

#[test]
fn nontrivial_associator_breaks_the_naive_quadruple() {
    // In the nontrivial two-group, (g, g, id, id) fails the left triangle
    // because the inverse associator contributes the nontrivial label.
    let b = two_group_z2(true);
    let adj = Adjunction {
        left: "g".into(),
        right: "g".into(),
        unit: "e@e".into(),
        counit: "e@e".into(),
    };
    let rep = check_adjunction(&b, &adj).unwrap();
    assert!(!rep.report.passed());
}

#[test]
fn promote_finds_the_twisted_counit() {
    // Promoting (g, g, iso1 = identity) in the nontrivial two-group must
    // pick the nontrivial counit to balance the associator label.
    let b = two_group_z2(true);
    let adj =
        promote_to_adjoint_equivalence(&b, &"g".into(), &"g".into(), &"e@e".into(), &"e@e".into())
            .unwrap();
    assert_eq!(adj.counit.as_str(), "a@e");
    let rep = check_adjunction(&b, &adj).unwrap();
    assert!(rep.report.passed());
    assert!(rep.adjoint_equivalence);
}

#[test]
fn promote_keeps_already_good_data() {
    let b = bz2();
    let adj =
        promote_to_adjoint_equivalence(&b, &"g".into(), &"g".into(), &"1_e".into(), &"1_e".into())
            .unwrap();
    assert_eq!(
        adj,
        Adjunction {
            left: "g".into(),
            right: "g".into(),
            unit: "1_e".into(),
            counit: "1_e".into(),
        }
    );
}

#[test]
fn promote_rejects_non_equivalence() {
    // In P2 the 1-cell "1" is not invertible; there is no iso onto the unit.
    let b = p2();
    assert!(matches!(
        promote_to_adjoint_equivalence(&b, &"1".into(), &"0".into(), &"1_0".into(), &"1_0".into()),
        Err(AdjunctionError::NoSolution { .. })
    ));
}

#[test]
fn find_equivalences_examples() {
    let b = bz2();
    let eq = find_equivalences(&b, &"pt".into(), &"pt".into()).unwrap();
    let names: Vec<&str> = eq.iter().map(|c| c.as_str()).collect();
    assert_eq!(names, vec!["e", "g"]);

    let b = p2();
    let eq = find_equivalences(&b, &"pt".into(), &"pt".into()).unwrap();
    let names: Vec<&str> = eq.iter().map(|c| c.as_str()).collect();
    assert_eq!(names, vec!["0"]);

    let b = chaotic(2).unwrap();
    let eq = find_equivalences(&b, &"o0".into(), &"o1".into()).unwrap();
    let names: Vec<&str> = eq.iter().map(|c| c.as_str()).collect();
    assert_eq!(names, vec!["f0_1"]);
}

#[test]
fn identity_is_always_an_equivalence() {
    for b in [one(), bz2(), bz3(), p2(), two_group_z2(true), chaotic(3).unwrap()] {
        for x in &b.objects {
            let eq = find_equivalences(&b, x, x).unwrap();
            assert!(eq.contains(&b.id1[x]), "1_{x} missing from {eq:?}");
        }
    }
}

#[test]
fn identity_adjunction_passes_everywhere() {
    for b in [one(), bz2(), p2(), two_group_z2(true)] {
        for x in &b.objects {
            let adj = identity_adjunction(&b, x).unwrap();
            let rep = check_adjunction(&b, &adj).unwrap();
            assert!(rep.report.passed(), "at {x}: {}", rep.report);
            assert!(rep.adjoint_equivalence);
        }
    }
}

#[test]
fn mate_round_trip_is_exhaustive() {
    // Lemma: taking mates is a bijection. Exhaustive over all adjoint
    // equivalence pairs, compatible framing 1-cells, and 2-cells.
    for b in [bz2(), chaotic(2).unwrap(), two_group_z2(false), p2()] {
        let adjs = adjoint_equivalences(&b);
        assert!(!adjs.is_empty());
        let one: Vec<CellId> = b.all_one_cells().cloned().collect();
        let mut checked = 0usize;
        for adj0 in &adjs {
            let (x0, y0) = {
                let (s, t) = b.one_cell_boundary(&adj0.left).unwrap();
                (s.clone(), t.clone())
            };
            for adj1 in &adjs {
                let (x1, y1) = {
                    let (s, t) = b.one_cell_boundary(&adj1.left).unwrap();
                    (s.clone(), t.clone())
                };
                for a in &one {
                    let (asrc, atgt) = b.one_cell_boundary(a).unwrap();
                    if asrc != &x0 || atgt != &x1 {
                        continue;
                    }
                    for bb in &one {
                        let (bsrc, btgt) = b.one_cell_boundary(bb).unwrap();
                        if bsrc != &y0 || btgt != &y1 {
                            continue;
                        }
                        let f1a = b.horizontal1(&adj1.left, a).unwrap().clone();
                        let bf0 = b.horizontal1(bb, &adj0.left).unwrap().clone();
                        for omega in b.two_cells_between(&f1a, &bf0) {
                            let mate = mate_right(&b, adj0, adj1, a, bb, &omega).unwrap();
                            let back = mate_left(&b, adj0, adj1, a, bb, &mate).unwrap();
                            assert_eq!(back, omega, "round trip failed");
                            // Mate-iso: invertibility transfers both ways.
                            assert_eq!(
                                b.is_invertible_two_cell(&omega),
                                b.is_invertible_two_cell(&mate)
                            );
                            checked += 1;
                        }
                        let ag0 = b.horizontal1(a, &adj0.right).unwrap().clone();
                        let g1b = b.horizontal1(&adj1.right, bb).unwrap().clone();
                        for nu in b.two_cells_between(&ag0, &g1b) {
                            let mate = mate_left(&b, adj0, adj1, a, bb, &nu).unwrap();
                            let back = mate_right(&b, adj0, adj1, a, bb, &mate).unwrap();
                            assert_eq!(back, nu, "reverse round trip failed");
                            checked += 1;
                        }
                    }
                }
            }
        }
        assert!(checked > 0);
    }
}

#[test]
fn mate_of_identity_along_identity_adjunctions() {
    let b = bz2();
    let id_adj = identity_adjunction(&b, &"pt".into()).unwrap();
    let mate = mate_right(&b, &id_adj, &id_adj, &"e".into(), &"e".into(), &"1_e".into()).unwrap();
    assert_eq!(mate.as_str(), "1_e");
    let adj = Adjunction {
        left: "g".into(),
        right: "g".into(),
        unit: "1_e".into(),
        counit: "1_e".into(),
    };
    let mate = mate_right(&b, &adj, &adj, &"e".into(), &"e".into(), &"1_g".into()).unwrap();
    assert_eq!(mate.as_str(), "1_g");
}

#[test]
fn invert_identity_transformation() {
    use bicat_core::functors::{identity_functor, identity_transformation};
    let b = bz2();
    let f = identity_functor(&b);
    let t = identity_transformation(&f).unwrap();
    let inv = invert_strong_transformation(&t).unwrap();
    assert_eq!(inv.inverse.comp1[&CellId::from("pt")].as_str(), "e");
    // Unit and counit modifications are identities here.
    assert_eq!(inv.unit.comp[&CellId::from("pt")].as_str(), "1_e");
    assert_eq!(inv.counit.comp[&CellId::from("pt")].as_str(), "1_e");
}

#[test]
fn invert_conjugation_transformation() {
    use bicat_core::functors::{identity_functor, LaxTransformation};
    use std::collections::BTreeMap;
    let b = bz2();
    let f = identity_functor(&b);
    let mut comp1 = BTreeMap::new();
    comp1.insert(CellId::from("pt"), CellId::from("g"));
    let mut comp2 = BTreeMap::new();
    for p in ["e", "g"] {
        let src = b.horizontal1(&p.into(), &"g".into()).unwrap();
        comp2.insert(CellId::from(p), b.id2_of(src).unwrap().clone());
    }
    let t = LaxTransformation {
        src: f.clone(),
        tgt: f,
        comp1,
        comp2,
    };
    let inv = invert_strong_transformation(&t).unwrap();
    assert_eq!(inv.inverse.comp1[&CellId::from("pt")].as_str(), "g");
}
