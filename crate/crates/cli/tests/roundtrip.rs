//! Canonical serialization round-trips and schema error reporting.

use bicat_cli::schema::*;
use bicat_core::fixtures;
use bicat_core::functors::{constant_pseudofunctor, identity_functor};
use bicat_core::quillen::{whitehead, WhiteheadOutcome};

#[test]
fn bicategory_round_trip_is_byte_identical() {
    for b in [
        fixtures::chaotic(2).unwrap(),
        fixtures::bz2(),
        fixtures::p2(),
        fixtures::two_group_z2(true),
    ] {
        let payload = BicategoryPayload::from_core(&b).unwrap();
        let doc = Document::new("bicategory", payload.clone());
        let text = doc.to_canonical_string();
        let parsed = Document::parse_str(&text, "mem").unwrap();
        let parsed_payload: BicategoryPayload = parsed.payload_as("mem").unwrap();
        assert_eq!(parsed_payload, payload);
        assert_eq!(parsed_payload.to_core().unwrap(), b);
        // Serialize the parsed form again: byte-for-byte equality.
        assert_eq!(Document::new("bicategory", parsed_payload).to_canonical_string(), text);
    }
}

#[test]
fn equal_values_serialize_identically() {
    let a = fixtures::two_group_z2(true);
    let b = fixtures::two_group_z2(true);
    let da = Document::new("bicategory", BicategoryPayload::from_core(&a).unwrap());
    let db = Document::new("bicategory", BicategoryPayload::from_core(&b).unwrap());
    assert_eq!(da.to_canonical_string(), db.to_canonical_string());
}

#[test]
fn functor_round_trip() {
    let f = fixtures::lax_into_p2();
    let payload = FunctorPayload::from_core(&f).unwrap();
    let doc = Document::new("functor", payload);
    let text = doc.to_canonical_string();
    let parsed = Document::parse_str(&text, "mem").unwrap();
    let parsed_payload: FunctorPayload = parsed.payload_as("mem").unwrap();
    assert_eq!(parsed_payload.to_core().unwrap(), f);
}

#[test]
fn slice_document_round_trips_with_tags() {
    let f = fixtures::lax_into_p2();
    let s = bicat_core::slice::lax_slice(&f, &"pt".into()).unwrap();
    let payload = BicategoryPayload::from_slice(&s).unwrap();
    let doc = Document::new("bicategory", payload);
    let text = doc.to_canonical_string();
    let parsed = Document::parse_str(&text, "mem").unwrap();
    let parsed_payload: BicategoryPayload = parsed.payload_as("mem").unwrap();
    let rebuilt = parsed_payload.to_slice().unwrap().unwrap();
    assert_eq!(rebuilt, s);
}

#[test]
fn dangling_vcomp_entry_is_a_schema_error() {
    let b = fixtures::bz2();
    let mut payload = BicategoryPayload::from_core(&b).unwrap();
    let hom = payload.homs.get_mut("pt|pt").unwrap();
    hom.vcomp.push(("1_e".into(), "1_e".into(), "ghost".into()));
    match payload.to_core() {
        Err(CliError::Schema { path, reason }) => {
            assert!(path.contains("vcomp"), "{path}");
            assert!(reason.contains("ghost"), "{reason}");
        }
        other => panic!("expected a schema error, got {other:?}"),
    }
}

#[test]
fn malformed_hom_key_is_a_schema_error() {
    let b = fixtures::bz2();
    let payload = BicategoryPayload::from_core(&b).unwrap();
    let doc = Document::new("bicategory", payload);
    let text = doc
        .to_canonical_string()
        .replace("\"pt|pt\"", "\"ptpt\"");
    let parsed = Document::parse_str(&text, "mem").unwrap();
    let parsed_payload: BicategoryPayload = parsed.payload_as("mem").unwrap();
    assert!(matches!(parsed_payload.to_core(), Err(CliError::Schema { .. })));
}

#[test]
fn version_mismatch_is_rejected() {
    let text = r#"{ "kind": "bicategory", "version": 99, "payload": {} }"#;
    assert!(matches!(
        Document::parse_str(text, "mem"),
        Err(CliError::Schema { .. })
    ));
}

#[test]
fn json_syntax_errors_carry_location() {
    let text = "{ \"kind\": \"bicategory\",\n  broken";
    match Document::parse_str(text, "mem") {
        Err(CliError::Schema { path, .. }) => assert!(path.starts_with("mem:2:"), "{path}"),
        other => panic!("expected schema error, got {other:?}"),
    }
}

#[test]
fn certificate_round_trip_through_documents() {
    let c2 = fixtures::chaotic(2).unwrap();
    let f = constant_pseudofunctor(&c2, &fixtures::one(), &"o0".into()).unwrap();
    let cert = match whitehead(&f).unwrap() {
        WhiteheadOutcome::Certificate(c) => c,
        _ => panic!("expected a certificate"),
    };
    let payload = CertificatePayload::from_core(&cert).unwrap();
    let doc = Document::new("certificate", payload);
    let text = doc.to_canonical_string();
    let parsed = Document::parse_str(&text, "mem").unwrap();
    let parsed_payload: CertificatePayload = parsed.payload_as("mem").unwrap();
    assert!(parsed_payload.is_complete());
    let rebuilt = parsed_payload.to_core().unwrap();
    assert_eq!(rebuilt, *cert);
    // The reconstructed certificate passes the independent checker.
    let rep = bicat_core::quillen::check_certificate(&f, &rebuilt).unwrap();
    assert!(rep.passed(), "{rep}");
}

#[test]
fn report_payload_round_trip() {
    let b = {
        let mut b = fixtures::two_group_z2(true);
        let key = ("g".into(), "g".into(), "e".into());
        b.assoc.insert(key, "a@e".into());
        let key = ("g".into(), "g".into(), "e".into());
        b.assoc_inv.insert(key, "a@e".into());
        b
    };
    let report = bicat_core::validate::validate_bicategory(&b).unwrap();
    assert!(!report.passed());
    let payload = ReportPayload::from_core(&report);
    let back = payload.to_core().unwrap();
    assert_eq!(back, report);
}

#[test]
fn transformation_round_trip() {
    let f = identity_functor(&fixtures::bz2());
    let t = bicat_core::functors::identity_transformation(&f).unwrap();
    let payload = TransformationPayload::from_core(&t).unwrap();
    assert_eq!(payload.to_core().unwrap(), t);
}
