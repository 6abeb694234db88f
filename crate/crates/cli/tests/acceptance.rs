//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//!
//! Everything here is exhaustive over the fixture families; the expected
//! verdicts for the mutation sweep come from an independent brute-force
//! cocycle oracle implemented in this file, not from the library under test.

use std::collections::BTreeMap;
use std::path::Path;

use bicat_cli::schema::*;
use bicat_core::adjunctions::{check_adjunction, mate_left, mate_right, Adjunction};
use bicat_core::calculus::constraint_coherence_check;
use bicat_core::cell::CellId;
use bicat_core::fixtures::*;
use bicat_core::functors::{constant_pseudofunctor, identity_functor, validate_lax_functor, LaxFunctor};
use bicat_core::quillen::{
    check_certificate, quillen_a, terminal_assignment_by_search, whitehead, WhiteheadOutcome,
};
use bicat_core::report::AxiomTag;
use bicat_core::slice::{change_of_slice, lax_slice};
use bicat_core::validate::{check_derived_unitor_properties, validate_bicategory};
use bicat_core::FiniteBicategory;

fn announce(number: u32, label: &str, result: Result<(), String>) {
    match result {
        Ok(()) => println!("[acceptance] criterion {number} ({label}): PASS"),
        Err(e) => {
            println!("[acceptance] criterion {number} ({label}): FAIL: {e}");
            panic!("criterion {number} ({label}) failed: {e}");
        }
    }
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

/// The accepted fixture family used across the criteria.
fn accepted_fixtures() -> Vec<(String, FiniteBicategory)> {
    let mut out = Vec::new();
    for n in 1..=4 {
        out.push((format!("chaotic({n})"), chaotic(n).unwrap()));
    }
    out.push(("deloop(trivial)".into(), {
        let m = MonoidTable::new(["e"], "e", [("e", "e", "e")]);
        deloop_monoid(&m).unwrap()
    }));
    out.push(("deloop(Z2)".into(), bz2()));
    out.push(("deloop(bool-or)".into(), deloop_monoid(&boolean_or_monoid()).unwrap()));
    out.push(("deloop(Z3)".into(), bz3()));
    out.push(("p2".into(), p2()));
    out.push(("two_group(trivial)".into(), two_group_z2(false)));
    out.push(("two_group(nontrivial)".into(), two_group_z2(true)));
    out
}

/// The fixture functors quantified by the slice criterion.
fn fixture_functors() -> Vec<(String, LaxFunctor)> {
    let c2 = chaotic(2).unwrap();
    vec![
        ("Id_One".into(), identity_functor(&one())),
        (
            "F_collapse".into(),
            constant_pseudofunctor(&c2, &one(), &"o0".into()).unwrap(),
        ),
        (
            "F_pick0".into(),
            constant_pseudofunctor(&one(), &c2, &"o0".into()).unwrap(),
        ),
        ("F_lax".into(), lax_into_p2()),
        (
            "F_strict_g".into(),
            constant_pseudofunctor(&one(), &bz2(), &"pt".into()).unwrap(),
        ),
        ("Id_BZ2".into(), identity_functor(&bz2())),
        (
            "Id_two_group".into(),
            identity_functor(&two_group_z2(true)),
        ),
    ]
}

/// Independent oracle: the 3-cocycle condition for a Z/2-valued cochain on
/// Z/2, evaluated by brute force over all sixteen quadruples. Returns the
/// failing quadruples as (k, h, g, f) bit-tuples, 1 meaning the generator.
fn cocycle_failures(omega: &BTreeMap<(u8, u8, u8), u8>) -> Vec<(u8, u8, u8, u8)> {
    let w = |k: u8, h: u8, g: u8| -> u8 { *omega.get(&(k, h, g)).unwrap_or(&0) };
    let mut out = Vec::new();
    for k in 0..2u8 {
        for h in 0..2u8 {
            for g in 0..2u8 {
                for f in 0..2u8 {
                    let lhs = w((k + h) % 2, g, f) ^ w(k, h, (g + f) % 2);
                    let rhs = w(k, h, g) ^ w(k, (h + g) % 2, f) ^ w(h, g, f);
                    if lhs != rhs {
                        out.push((k, h, g, f));
                    }
                }
            }
        }
    }
    out
}

fn bit(name: &str) -> u8 {
    if name == "g" {
        1
    } else {
        0
    }
}

fn z2_cell(i: u8) -> CellId {
    if i == 1 {
        "g".into()
    } else {
        "e".into()
    }
}

#[test]
fn criterion_1_axiom_validator() {
    announce(1, "axiom validator", (|| {
        for (name, b) in accepted_fixtures() {
            let report = validate_bicategory(&b).map_err(|e| format!("{name}: {e}"))?;
            ensure(report.passed(), format!("{name} should pass:\n{report}"))?;
        }
        // Mutation sweep: every single-entry associator flip of the
        // nontrivial fixture, judged against the brute-force cocycle oracle.
        let base = two_group_z2(true);
        let base_omega: BTreeMap<(u8, u8, u8), u8> =
            [((1u8, 1u8, 1u8), 1u8)].into_iter().collect();
        let mut false_passes = 0;
        let mut false_failures = 0;
        for k in 0..2u8 {
            for h in 0..2u8 {
                for g in 0..2u8 {
                    let mut omega = base_omega.clone();
                    let entry = omega.entry((k, h, g)).or_insert(0);
                    *entry ^= 1; // flip to the other label
                    let flipped_label = if *entry == 1 { "a" } else { "e" };
                    let product = (k + h + g) % 2;
                    let mut mutant = base.clone();
                    let key = (z2_cell(k), z2_cell(h), z2_cell(g));
                    let cell: CellId = format!("{}@{}", flipped_label, z2_cell(product)).into();
                    mutant.assoc.insert(key.clone(), cell.clone());
                    mutant.assoc_inv.insert(key, cell);
                    let oracle = cocycle_failures(&omega);
                    let report = validate_bicategory(&mutant).map_err(|e| e.to_string())?;
                    if oracle.is_empty() && !report.passed() {
                        false_failures += 1;
                    }
                    if !oracle.is_empty() && report.passed() {
                        false_passes += 1;
                    }
                    if !oracle.is_empty() {
                        // The reported pentagon (or naturality) witnesses must
                        // be exactly the oracle's failing quadruples.
                        let witnesses: Vec<(u8, u8, u8, u8)> = report
                            .violations
                            .iter()
                            .filter(|v| {
                                v.axiom == AxiomTag::Pentagon
                                    || v.axiom == AxiomTag::AssociatorNaturality
                            })
                            .map(|v| {
                                let w: Vec<u8> =
                                    v.witness.iter().map(|c| bit(c.as_str())).collect();
                                (w[0], w[1], w[2], w[3])
                            })
                            .collect();
                        ensure(
                            witnesses == oracle,
                            format!(
                                "mutation at ({k},{h},{g}): witnesses {witnesses:?} vs oracle {oracle:?}"
                            ),
                        )?;
                    }
                }
            }
        }
        ensure(false_passes == 0, format!("{false_passes} false passes"))?;
        ensure(false_failures == 0, format!("{false_failures} false failures"))?;
        Ok(())
    })());
}

#[test]
fn criterion_2_derived_unitor_identities() {
    announce(2, "derived unitor identities", (|| {
        for (name, b) in accepted_fixtures() {
            let report =
                check_derived_unitor_properties(&b).map_err(|e| format!("{name}: {e}"))?;
            ensure(report.passed(), format!("{name}:\n{report}"))?;
        }
        Ok(())
    })());
}

#[test]
fn criterion_3_lax_slices_and_change_of_slice() {
    announce(3, "lax slice bicategories", (|| {
        for (name, f) in fixture_functors() {
            let fr = validate_lax_functor(&f).map_err(|e| format!("{name}: {e}"))?;
            ensure(fr.report.passed(), format!("{name} is not a valid functor"))?;
            for x in f.tgt.objects.clone() {
                let s = lax_slice(&f, &x).map_err(|e| format!("{name} over {x}: {e}"))?;
                let report =
                    validate_bicategory(&s.bicategory).map_err(|e| format!("{name}: {e}"))?;
                ensure(
                    report.passed(),
                    format!("slice of {name} over {x} fails:\n{report}"),
                )?;
            }
            let one_cells: Vec<CellId> = f.tgt.all_one_cells().cloned().collect();
            for u in one_cells {
                let change =
                    change_of_slice(&f, &u).map_err(|e| format!("{name} along {u}: {e}"))?;
                let rep = validate_lax_functor(&change.functor)
                    .map_err(|e| format!("{name} along {u}: {e}"))?;
                ensure(
                    rep.report.passed() && rep.classification.strict,
                    format!("change-of-slice of {name} along {u} is not a strict functor"),
                )?;
            }
        }
        Ok(())
    })());
}

fn adjoint_equivalences(b: &FiniteBicategory) -> Vec<Adjunction> {
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
            let (gf, fg) = match (b.horizontal1(g, f), b.horizontal1(f, g)) {
                (Some(a), Some(b2)) => (a.clone(), b2.clone()),
                _ => continue,
            };
            for unit in b.two_cells_between(&b.id1[&x], &gf) {
                for counit in b.two_cells_between(&fg, &b.id1[&y]) {
                    let adj = Adjunction {
                        left: f.clone(),
                        right: g.clone(),
                        unit: unit.clone(),
                        counit,
                    };
                    let rep = check_adjunction(b, &adj).unwrap();
                    if rep.report.passed() && rep.adjoint_equivalence {
                        out.push(adj);
                    }
                }
            }
        }
    }
    out
}

#[test]
fn criterion_4_mate_calculus() {
    announce(4, "mate calculus", (|| {
        for (name, b) in [
            ("BZ2", bz2()),
            ("chaotic(2)", chaotic(2).unwrap()),
            ("two_group(trivial)", two_group_z2(false)),
        ] {
            let adjs = adjoint_equivalences(&b);
            ensure(!adjs.is_empty(), format!("{name}: no adjoint equivalences"))?;
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
                                let mate = mate_right(&b, adj0, adj1, a, bb, &omega)
                                    .map_err(|e| format!("{name}: {e}"))?;
                                let back = mate_left(&b, adj0, adj1, a, bb, &mate)
                                    .map_err(|e| format!("{name}: {e}"))?;
                                ensure(
                                    back == omega,
                                    format!("{name}: mate_left . mate_right != id at {omega}"),
                                )?;
                                ensure(
                                    b.is_invertible_two_cell(&omega)
                                        == b.is_invertible_two_cell(&mate),
                                    format!("{name}: mate-iso fails at {omega}"),
                                )?;
                                checked += 1;
                            }
                            let ag0 = b.horizontal1(a, &adj0.right).unwrap().clone();
                            let g1b = b.horizontal1(&adj1.right, bb).unwrap().clone();
                            for nu in b.two_cells_between(&ag0, &g1b) {
                                let mate = mate_left(&b, adj0, adj1, a, bb, &nu)
                                    .map_err(|e| format!("{name}: {e}"))?;
                                let back = mate_right(&b, adj0, adj1, a, bb, &mate)
                                    .map_err(|e| format!("{name}: {e}"))?;
                                ensure(
                                    back == nu,
                                    format!("{name}: mate_right . mate_left != id at {nu}"),
                                )?;
                                checked += 1;
                            }
                        }
                    }
                }
            }
            ensure(checked > 0, format!("{name}: nothing checked"))?;
        }
        Ok(())
    })());
}

#[test]
fn criterion_5_quillen_a_beyond_pseudo() {
    announce(5, "reverse functor from a genuinely lax functor", (|| {
        let f = lax_into_p2();
        let fr = validate_lax_functor(&f).map_err(|e| e.to_string())?;
        ensure(
            fr.report.passed() && !fr.classification.pseudo,
            "the fixture must be genuinely lax",
        )?;
        let assignment = terminal_assignment_by_search(&f)
            .map_err(|e| e.to_string())?
            .map_err(|x| format!("no terminal data over {x}"))?;
        let qa = quillen_a(&f, &assignment).map_err(|e| e.to_string())?;
        ensure(
            qa.g_report.report.passed(),
            format!("reverse functor fails:\n{}", qa.g_report.report),
        )?;
        ensure(
            qa.eta_report.report.passed(),
            format!("unit fails:\n{}", qa.eta_report.report),
        )?;
        ensure(
            qa.eps_report.report.passed(),
            format!("counit fails:\n{}", qa.eps_report.report),
        )?;
        ensure(!qa.eps_report.strong, "counit should be lax but not strong")?;
        let at_zero = &qa.eps.comp2[&CellId::from("0")];
        ensure(
            at_zero.as_str() == "lt_0_1" && !f.tgt.is_invertible_two_cell(at_zero),
            "the counit component at 0 should be the non-invertible 2-cell",
        )?;
        Ok(())
    })());
}

#[test]
fn criterion_6_whitehead_positive() {
    announce(6, "biequivalence certificates", (|| {
        let c2 = chaotic(2).unwrap();
        let cases = vec![
            (
                "F_collapse".to_string(),
                constant_pseudofunctor(&c2, &one(), &"o0".into()).unwrap(),
            ),
            (
                "Id_two_group".to_string(),
                identity_functor(&two_group_z2(true)),
            ),
        ];
        for (name, f) in cases {
            let cert = match whitehead(&f).map_err(|e| format!("{name}: {e}"))? {
                WhiteheadOutcome::Certificate(c) => c,
                WhiteheadOutcome::Counterexample(e) => {
                    return Err(format!("{name}: unexpected counterexample {e:?}"))
                }
            };
            ensure(
                cert.evidence.g_classification.pseudo,
                format!("{name}: reverse functor is not pseudo"),
            )?;
            ensure(
                cert.evidence.eta_strong && cert.evidence.eps_strong,
                format!("{name}: unit or counit is not strong"),
            )?;
            for key in [
                "transformation-eta-inverse",
                "transformation-eps-inverse",
                "modification-eta-unit",
                "modification-eta-counit",
                "modification-eps-unit",
                "modification-eps-counit",
            ] {
                let rep = cert
                    .evidence
                    .reports
                    .get(key)
                    .ok_or_else(|| format!("{name}: missing evidence {key}"))?;
                ensure(rep.passed(), format!("{name}: evidence {key} fails"))?;
            }
            let report = check_certificate(&f, &cert).map_err(|e| format!("{name}: {e}"))?;
            ensure(
                report.passed(),
                format!("{name}: independent checker fails:\n{report}"),
            )?;
            // Byte-identical across repeated runs, in process...
            let again = match whitehead(&f).map_err(|e| format!("{name}: {e}"))? {
                WhiteheadOutcome::Certificate(c) => c,
                _ => return Err(format!("{name}: second run diverged")),
            };
            let doc1 = Document::new(
                "certificate",
                CertificatePayload::from_core(&cert).map_err(|e| e.to_string())?,
            );
            let doc2 = Document::new(
                "certificate",
                CertificatePayload::from_core(&again).map_err(|e| e.to_string())?,
            );
            ensure(
                doc1.to_canonical_string() == doc2.to_canonical_string(),
                format!("{name}: serialized certificates differ between runs"),
            )?;
            // ... and through the command-line driver.
            let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
            let fpath = dir.path().join("f.json");
            std::fs::write(
                &fpath,
                Document::new(
                    "functor",
                    FunctorPayload::from_core(&f).map_err(|e| e.to_string())?,
                )
                .to_canonical_string(),
            )
            .map_err(|e| e.to_string())?;
            let mut bytes = Vec::new();
            for run in 0..2 {
                let out = dir.path().join(format!("cert{run}.json"));
                let status = std::process::Command::new(env!("CARGO_BIN_EXE_bicat"))
                    .args([
                        "whitehead",
                        "--functor",
                        fpath.to_str().unwrap(),
                        "--output",
                        out.to_str().unwrap(),
                    ])
                    .status()
                    .map_err(|e| e.to_string())?;
                ensure(status.code() == Some(0), format!("{name}: CLI run failed"))?;
                bytes.push(std::fs::read(&out).map_err(|e| e.to_string())?);
            }
            ensure(
                bytes[0] == bytes[1],
                format!("{name}: CLI certificate files differ between runs"),
            )?;
        }
        Ok(())
    })());
}

#[test]
fn criterion_7_whitehead_negative() {
    announce(7, "essential-fullness counterexample", (|| {
        let f = constant_pseudofunctor(&one(), &bz2(), &"pt".into()).unwrap();
        let e = match whitehead(&f).map_err(|e| e.to_string())? {
            WhiteheadOutcome::Counterexample(e) => e,
            WhiteheadOutcome::Certificate(_) => {
                return Err("expected a counterexample".to_string())
            }
        };
        ensure(!e.essentially_full.holds, "essential fullness should fail")?;
        let witness = e
            .essentially_full
            .witness
            .get(2)
            .ok_or("missing witness")?
            .clone();
        ensure(witness.as_str() == "g", format!("witness is {witness}, not g"))?;
        // The witness verifiably has an empty iso-class preimage.
        for p in f.src.all_one_cells() {
            let fp = &f.one_map[p];
            let hit = f
                .tgt
                .two_cells_between(fp, &witness)
                .iter()
                .any(|c| f.tgt.is_invertible_two_cell(c));
            ensure(!hit, format!("{p} maps isomorphically onto the witness"))?;
        }
        // Exit code 1 through the command-line driver.
        let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
        let fpath = dir.path().join("f_strict_g.json");
        std::fs::write(
            &fpath,
            Document::new(
                "functor",
                FunctorPayload::from_core(&f).map_err(|e| e.to_string())?,
            )
            .to_canonical_string(),
        )
        .map_err(|e| e.to_string())?;
        let report = dir.path().join("report.json");
        let out = std::process::Command::new(env!("CARGO_BIN_EXE_bicat"))
            .args([
                "whitehead",
                "--functor",
                fpath.to_str().unwrap(),
                "--output",
                report.to_str().unwrap(),
            ])
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.code() == Some(1), "CLI exit code should be 1")?;
        let text = std::fs::read_to_string(Path::new(&report)).map_err(|e| e.to_string())?;
        ensure(
            text.contains("essential-fullness") && text.contains("\"g\""),
            "report should name the witness",
        )?;
        Ok(())
    })());
}

#[test]
fn criterion_8_coherence_smoke_suite() {
    announce(8, "constraint coherence", (|| {
        for (name, b) in [
            ("one", one()),
            ("BZ2", bz2()),
            ("p2", p2()),
            ("two_group(trivial)", two_group_z2(false)),
            ("two_group(nontrivial)", two_group_z2(true)),
            ("chaotic(2)", chaotic(2).unwrap()),
        ] {
            let discrepancies =
                constraint_coherence_check(&b, 4, 5).map_err(|e| format!("{name}: {e}"))?;
            ensure(
                discrepancies.is_empty(),
                format!("{name}: {} discrepancies, first: {:?}", discrepancies.len(), discrepancies.first()),
            )?;
        }
        Ok(())
    })());
}
