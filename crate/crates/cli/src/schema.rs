//! Canonical JSON documents for every kernel value.
//!
//! A document is `{ "kind": ..., "version": 1, "payload": ... }`. Maps are
//! keyed lexicographically and table rows are sorted, so two equal in-memory
//! values serialize identically, and parsing a canonical document and
//! re-serializing it reproduces the bytes.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use bicat_core::bicategory::{FiniteBicategory, HomCategory};
use bicat_core::cell::CellId;
use bicat_core::functors::{
    FunctorClassification, LaxFunctor, LaxTransformation, Modification,
};
use bicat_core::quillen::{
    BiequivalenceCertificate, CertificateEvidence, EsEfFf, IncLaxTerminalData,
};
use bicat_core::report::{AxiomTag, Status, ValidationReport, Violation};
use bicat_core::slice::{LaxSlice, SliceCellTag};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("schema error at {path}: {reason}")]
    Schema { path: String, reason: String },
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("input error: {0}")]
    Input(String),
}

pub fn schema_error(path: impl Into<String>, reason: impl Into<String>) -> CliError {
    CliError::Schema {
        path: path.into(),
        reason: reason.into(),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Document {
    pub kind: String,
    pub version: u32,
    pub payload: serde_json::Value,
}

impl Document {
    pub fn new(kind: &str, payload: impl Serialize) -> Self {
        Document {
            kind: kind.to_string(),
            version: SCHEMA_VERSION,
            payload: serde_json::to_value(payload).expect("payloads serialize"),
        }
    }

    /// Canonical text form: pretty JSON with a trailing newline.
    pub fn to_canonical_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
        s.push('\n');
        s
    }

    pub fn parse_str(text: &str, origin: &str) -> Result<Document, CliError> {
        let doc: Document = serde_json::from_str(text).map_err(|e| {
            schema_error(
                format!("{origin}:{}:{}", e.line(), e.column()),
                e.to_string(),
            )
        })?;
        if doc.version != SCHEMA_VERSION {
            return Err(schema_error(
                format!("{origin}: version"),
                format!("unsupported version {}", doc.version),
            ));
        }
        Ok(doc)
    }

    pub fn payload_as<T: for<'de> Deserialize<'de>>(&self, origin: &str) -> Result<T, CliError> {
        serde_json::from_value(self.payload.clone())
            .map_err(|e| schema_error(format!("{origin}: payload"), e.to_string()))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CellRecord {
    pub id: String,
    pub src: String,
    pub tgt: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct HomPayload {
    pub one_cells: Vec<CellRecord>,
    pub two_cells: Vec<CellRecord>,
    pub id2: BTreeMap<String, String>,
    pub vcomp: Vec<(String, String, String)>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct SliceTagsPayload {
    pub base_object: String,
    pub objects: BTreeMap<String, (String, String)>,
    pub one_cells: BTreeMap<String, (String, String)>,
    pub two_cells: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct BicategoryPayload {
    pub objects: Vec<String>,
    pub id1: BTreeMap<String, String>,
    pub homs: BTreeMap<String, HomPayload>,
    pub hcomp1: Vec<(String, String, String)>,
    pub hcomp2: Vec<(String, String, String)>,
    pub assoc: Vec<(String, String, String, String)>,
    pub assoc_inv: Vec<(String, String, String, String)>,
    pub lunit: BTreeMap<String, String>,
    pub lunit_inv: BTreeMap<String, String>,
    pub runit: BTreeMap<String, String>,
    pub runit_inv: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub slice_tags: Option<SliceTagsPayload>,
}

fn hom_key(x: &CellId, y: &CellId) -> String {
    format!("{x}|{y}")
}

impl BicategoryPayload {
    pub fn from_core(b: &FiniteBicategory) -> Result<Self, CliError> {
        for x in &b.objects {
            if x.as_str().contains('|') {
                return Err(schema_error(
                    format!("objects: {x}"),
                    "object names may not contain '|' in the serialized form",
                ));
            }
        }
        let mut homs = BTreeMap::new();
        for ((x, y), hom) in &b.homs {
            let one_cells = hom
                .one_cells
                .iter()
                .map(|f| CellRecord {
                    id: f.to_string(),
                    src: x.to_string(),
                    tgt: y.to_string(),
                })
                .collect();
            let two_cells = hom
                .two_cells
                .iter()
                .map(|(a, (s, t))| CellRecord {
                    id: a.to_string(),
                    src: s.to_string(),
                    tgt: t.to_string(),
                })
                .collect();
            homs.insert(
                hom_key(x, y),
                HomPayload {
                    one_cells,
                    two_cells,
                    id2: to_string_map(&hom.id2),
                    vcomp: hom
                        .vcomp
                        .iter()
                        .map(|((l, e), r)| (l.to_string(), e.to_string(), r.to_string()))
                        .collect(),
                },
            );
        }
        Ok(BicategoryPayload {
            objects: b.objects.iter().map(|x| x.to_string()).collect(),
            id1: to_string_map(&b.id1),
            homs,
            hcomp1: pairs_to_rows(&b.hcomp1),
            hcomp2: pairs_to_rows(&b.hcomp2),
            assoc: triples_to_rows(&b.assoc),
            assoc_inv: triples_to_rows(&b.assoc_inv),
            lunit: to_string_map(&b.lunit),
            lunit_inv: to_string_map(&b.lunit_inv),
            runit: to_string_map(&b.runit),
            runit_inv: to_string_map(&b.runit_inv),
            slice_tags: None,
        })
    }

    pub fn from_slice(s: &LaxSlice) -> Result<Self, CliError> {
        let mut payload = Self::from_core(&s.bicategory)?;
        payload.slice_tags = Some(SliceTagsPayload {
            base_object: s.base_object.to_string(),
            objects: s
                .tags
                .objects
                .iter()
                .map(|(k, (a, b))| (k.to_string(), (a.to_string(), b.to_string())))
                .collect(),
            one_cells: s
                .tags
                .one_cells
                .iter()
                .map(|(k, (a, b))| (k.to_string(), (a.to_string(), b.to_string())))
                .collect(),
            two_cells: s
                .tags
                .two_cells
                .iter()
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .collect(),
        });
        Ok(payload)
    }

    /// Parse into a core bicategory, checking referential integrity: every
    /// id mentioned by a table must be declared, with consistent boundaries.
    pub fn to_core(&self) -> Result<FiniteBicategory, CliError> {
        let mut b = FiniteBicategory::default();
        for x in &self.objects {
            if x.is_empty() {
                return Err(schema_error("objects", "empty object name"));
            }
            if x.contains('|') {
                return Err(schema_error(
                    format!("objects: {x}"),
                    "object names may not contain '|'",
                ));
            }
            if !b.objects.insert(CellId::new(x)) {
                return Err(schema_error(format!("objects: {x}"), "duplicate object"));
            }
        }
        let mut all_one: BTreeSet<String> = BTreeSet::new();
        let mut all_two: BTreeSet<String> = BTreeSet::new();
        for (key, hom_payload) in &self.homs {
            let parts: Vec<&str> = key.splitn(2, '|').collect();
            if parts.len() != 2 {
                return Err(schema_error(
                    format!("homs: {key}"),
                    "hom keys have the form SRC|TGT",
                ));
            }
            let (x, y) = (CellId::new(parts[0]), CellId::new(parts[1]));
            for (obj, part) in [(&x, parts[0]), (&y, parts[1])] {
                if !b.objects.contains(obj) {
                    return Err(schema_error(
                        format!("homs: {key}"),
                        format!("unknown object {part}"),
                    ));
                }
            }
            let mut hom = HomCategory::default();
            for rec in &hom_payload.one_cells {
                if rec.src != parts[0] || rec.tgt != parts[1] {
                    return Err(schema_error(
                        format!("homs.{key}.one_cells[{}]", rec.id),
                        "declared boundary does not match the hom key",
                    ));
                }
                if !all_one.insert(rec.id.clone()) {
                    return Err(schema_error(
                        format!("homs.{key}.one_cells[{}]", rec.id),
                        "duplicate 1-cell id",
                    ));
                }
                hom.one_cells.insert(CellId::new(&rec.id));
            }
            for rec in &hom_payload.two_cells {
                if !hom.one_cells.contains(&CellId::new(&rec.src))
                    || !hom.one_cells.contains(&CellId::new(&rec.tgt))
                {
                    return Err(schema_error(
                        format!("homs.{key}.two_cells[{}]", rec.id),
                        "boundary references a 1-cell outside this hom",
                    ));
                }
                if !all_two.insert(rec.id.clone()) {
                    return Err(schema_error(
                        format!("homs.{key}.two_cells[{}]", rec.id),
                        "duplicate 2-cell id",
                    ));
                }
                hom.two_cells.insert(
                    CellId::new(&rec.id),
                    (CellId::new(&rec.src), CellId::new(&rec.tgt)),
                );
            }
            for (f, a) in &hom_payload.id2 {
                if !hom.one_cells.contains(&CellId::new(f)) {
                    return Err(schema_error(
                        format!("homs.{key}.id2[{f}]"),
                        "unknown 1-cell",
                    ));
                }
                if !hom.two_cells.contains_key(&CellId::new(a)) {
                    return Err(schema_error(
                        format!("homs.{key}.id2[{f}]"),
                        format!("unknown 2-cell {a}"),
                    ));
                }
                hom.id2.insert(CellId::new(f), CellId::new(a));
            }
            for (later, earlier, res) in &hom_payload.vcomp {
                for a in [later, earlier, res] {
                    if !hom.two_cells.contains_key(&CellId::new(a)) {
                        return Err(schema_error(
                            format!("homs.{key}.vcomp[({later}, {earlier})]"),
                            format!("unknown 2-cell {a}"),
                        ));
                    }
                }
                hom.vcomp.insert(
                    (CellId::new(later), CellId::new(earlier)),
                    CellId::new(res),
                );
            }
            if b.homs.insert((x, y), hom).is_some() {
                return Err(schema_error(format!("homs: {key}"), "duplicate hom key"));
            }
        }
        let known_one = |s: &String| all_one.contains(s);
        let known_two = |s: &String| all_two.contains(s);
        for (x, f) in &self.id1 {
            if !b.objects.contains(&CellId::new(x)) {
                return Err(schema_error(format!("id1[{x}]"), "unknown object"));
            }
            if !known_one(f) {
                return Err(schema_error(format!("id1[{x}]"), format!("unknown 1-cell {f}")));
            }
            b.id1.insert(CellId::new(x), CellId::new(f));
        }
        for (g, f, r) in &self.hcomp1 {
            for c in [g, f, r] {
                if !known_one(c) {
                    return Err(schema_error(
                        format!("hcomp1[({g}, {f})]"),
                        format!("unknown 1-cell {c}"),
                    ));
                }
            }
            b.hcomp1
                .insert((CellId::new(g), CellId::new(f)), CellId::new(r));
        }
        for (beta, alpha, r) in &self.hcomp2 {
            for c in [beta, alpha, r] {
                if !known_two(c) {
                    return Err(schema_error(
                        format!("hcomp2[({beta}, {alpha})]"),
                        format!("unknown 2-cell {c}"),
                    ));
                }
            }
            b.hcomp2
                .insert((CellId::new(beta), CellId::new(alpha)), CellId::new(r));
        }
        for (rows, table, name) in [
            (&self.assoc, &mut b.assoc, "assoc"),
            (&self.assoc_inv, &mut b.assoc_inv, "assoc_inv"),
        ] {
            for (h, g, f, a) in rows {
                for c in [h, g, f] {
                    if !known_one(c) {
                        return Err(schema_error(
                            format!("{name}[({h}, {g}, {f})]"),
                            format!("unknown 1-cell {c}"),
                        ));
                    }
                }
                if !known_two(a) {
                    return Err(schema_error(
                        format!("{name}[({h}, {g}, {f})]"),
                        format!("unknown 2-cell {a}"),
                    ));
                }
                table.insert(
                    (CellId::new(h), CellId::new(g), CellId::new(f)),
                    CellId::new(a),
                );
            }
        }
        for (map, table, name) in [
            (&self.lunit, &mut b.lunit, "lunit"),
            (&self.lunit_inv, &mut b.lunit_inv, "lunit_inv"),
            (&self.runit, &mut b.runit, "runit"),
            (&self.runit_inv, &mut b.runit_inv, "runit_inv"),
        ] {
            for (f, a) in map {
                if !known_one(f) {
                    return Err(schema_error(format!("{name}[{f}]"), "unknown 1-cell"));
                }
                if !known_two(a) {
                    return Err(schema_error(
                        format!("{name}[{f}]"),
                        format!("unknown 2-cell {a}"),
                    ));
                }
                table.insert(CellId::new(f), CellId::new(a));
            }
        }
        Ok(b)
    }

    /// Rebuild a slice value when tag maps are present.
    pub fn to_slice(&self) -> Result<Option<LaxSlice>, CliError> {
        let tags_payload = match &self.slice_tags {
            Some(t) => t,
            None => return Ok(None),
        };
        let bicategory = self.to_core()?;
        let mut tags = SliceCellTag::default();
        for (id, (a, f)) in &tags_payload.objects {
            tags.objects
                .insert(CellId::new(id), (CellId::new(a), CellId::new(f)));
            tags.objects_rev
                .insert((CellId::new(a), CellId::new(f)), CellId::new(id));
        }
        for (id, (p, theta)) in &tags_payload.one_cells {
            let cell = CellId::new(id);
            let (src, tgt) = bicategory
                .one_cell_boundary(&cell)
                .map(|(s, t)| (s.clone(), t.clone()))
                .ok_or_else(|| {
                    schema_error(
                        format!("slice_tags.one_cells[{id}]"),
                        "tagged 1-cell is not in the bicategory",
                    )
                })?;
            tags.one_cells
                .insert(cell.clone(), (CellId::new(p), CellId::new(theta)));
            tags.one_rev
                .insert((src, tgt, CellId::new(p), CellId::new(theta)), cell);
        }
        for (id, alpha) in &tags_payload.two_cells {
            let cell = CellId::new(id);
            let (src, tgt) = bicategory
                .two_cell_boundary(&cell)
                .map(|(s, t)| (s.clone(), t.clone()))
                .ok_or_else(|| {
                    schema_error(
                        format!("slice_tags.two_cells[{id}]"),
                        "tagged 2-cell is not in the bicategory",
                    )
                })?;
            tags.two_cells.insert(cell.clone(), CellId::new(alpha));
            tags.two_rev.insert((src, tgt, CellId::new(alpha)), cell);
        }
        Ok(Some(LaxSlice {
            bicategory,
            tags,
            base_object: CellId::new(&tags_payload.base_object),
        }))
    }
}

fn to_string_map(m: &BTreeMap<CellId, CellId>) -> BTreeMap<String, String> {
    m.iter()
        .map(|(k, v)| (k.to_string(), v.to_string()))
        .collect()
}

fn from_string_map(m: &BTreeMap<String, String>) -> BTreeMap<CellId, CellId> {
    m.iter()
        .map(|(k, v)| (CellId::new(k), CellId::new(v)))
        .collect()
}

fn pairs_to_rows(m: &BTreeMap<(CellId, CellId), CellId>) -> Vec<(String, String, String)> {
    m.iter()
        .map(|((a, b), c)| (a.to_string(), b.to_string(), c.to_string()))
        .collect()
}

fn triples_to_rows(
    m: &BTreeMap<(CellId, CellId, CellId), CellId>,
) -> Vec<(String, String, String, String)> {
    m.iter()
        .map(|((a, b, c), d)| (a.to_string(), b.to_string(), c.to_string(), d.to_string()))
        .collect()
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct FunctorPayload {
    pub src: BicategoryPayload,
    pub tgt: BicategoryPayload,
    pub obj_map: BTreeMap<String, String>,
    pub one_map: BTreeMap<String, String>,
    pub two_map: BTreeMap<String, String>,
    pub f2: Vec<(String, String, String)>,
    pub f0: BTreeMap<String, String>,
}

impl FunctorPayload {
    pub fn from_core(f: &LaxFunctor) -> Result<Self, CliError> {
        Ok(FunctorPayload {
            src: BicategoryPayload::from_core(&f.src)?,
            tgt: BicategoryPayload::from_core(&f.tgt)?,
            obj_map: to_string_map(&f.obj_map),
            one_map: to_string_map(&f.one_map),
            two_map: to_string_map(&f.two_map),
            f2: pairs_to_rows(&f.f2),
            f0: to_string_map(&f.f0),
        })
    }

    pub fn to_core(&self) -> Result<LaxFunctor, CliError> {
        let src = self.src.to_core()?;
        let tgt = self.tgt.to_core()?;
        let mut f2 = BTreeMap::new();
        for (g, f, c) in &self.f2 {
            f2.insert((CellId::new(g), CellId::new(f)), CellId::new(c));
        }
        Ok(LaxFunctor {
            src,
            tgt,
            obj_map: from_string_map(&self.obj_map),
            one_map: from_string_map(&self.one_map),
            two_map: from_string_map(&self.two_map),
            f2,
            f0: from_string_map(&self.f0),
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TransformationPayload {
    pub src: FunctorPayload,
    pub tgt: FunctorPayload,
    pub comp1: BTreeMap<String, String>,
    pub comp2: BTreeMap<String, String>,
}

impl TransformationPayload {
    pub fn from_core(t: &LaxTransformation) -> Result<Self, CliError> {
        Ok(TransformationPayload {
            src: FunctorPayload::from_core(&t.src)?,
            tgt: FunctorPayload::from_core(&t.tgt)?,
            comp1: to_string_map(&t.comp1),
            comp2: to_string_map(&t.comp2),
        })
    }

    pub fn to_core(&self) -> Result<LaxTransformation, CliError> {
        Ok(LaxTransformation {
            src: self.src.to_core()?,
            tgt: self.tgt.to_core()?,
            comp1: from_string_map(&self.comp1),
            comp2: from_string_map(&self.comp2),
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ModificationPayload {
    pub src: TransformationPayload,
    pub tgt: TransformationPayload,
    pub comp: BTreeMap<String, String>,
}

impl ModificationPayload {
    pub fn from_core(m: &Modification) -> Result<Self, CliError> {
        Ok(ModificationPayload {
            src: TransformationPayload::from_core(&m.src)?,
            tgt: TransformationPayload::from_core(&m.tgt)?,
            comp: to_string_map(&m.comp),
        })
    }

    pub fn to_core(&self) -> Result<Modification, CliError> {
        Ok(Modification {
            src: self.src.to_core()?,
            tgt: self.tgt.to_core()?,
            comp: from_string_map(&self.comp),
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TerminalEntry {
    /// The target object this slice sits over, when known.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub object: Option<String>,
    pub terminal: String,
    pub k1: BTreeMap<String, String>,
    pub k2: BTreeMap<String, String>,
    /// All objects that qualified during the search, when recorded.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub qualifying: Option<Vec<String>>,
}

impl TerminalEntry {
    pub fn from_core(
        object: Option<&CellId>,
        data: &IncLaxTerminalData,
        qualifying: Option<&[CellId]>,
    ) -> Self {
        TerminalEntry {
            object: object.map(|o| o.to_string()),
            terminal: data.terminal.to_string(),
            k1: to_string_map(&data.k1),
            k2: to_string_map(&data.k2),
            qualifying: qualifying.map(|q| q.iter().map(|c| c.to_string()).collect()),
        }
    }

    pub fn to_core(&self) -> IncLaxTerminalData {
        IncLaxTerminalData {
            terminal: CellId::new(&self.terminal),
            k1: from_string_map(&self.k1),
            k2: from_string_map(&self.k2),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TerminalDataPayload {
    pub entries: Vec<TerminalEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ViolationPayload {
    pub axiom: String,
    pub witness: Vec<String>,
    pub lhs: Option<String>,
    pub rhs: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ReportPayload {
    pub status: String,
    pub violations: Vec<ViolationPayload>,
}

impl ReportPayload {
    pub fn from_core(r: &ValidationReport) -> Self {
        ReportPayload {
            status: r.status.to_string(),
            violations: r
                .violations
                .iter()
                .map(|v| ViolationPayload {
                    axiom: v.axiom.to_string(),
                    witness: v.witness.iter().map(|c| c.to_string()).collect(),
                    lhs: v.lhs.as_ref().map(|c| c.to_string()),
                    rhs: v.rhs.as_ref().map(|c| c.to_string()),
                })
                .collect(),
        }
    }

    pub fn to_core(&self) -> Result<ValidationReport, CliError> {
        let mut violations = Vec::new();
        for v in &self.violations {
            let axiom = AxiomTag::from_name(&v.axiom)
                .ok_or_else(|| schema_error(format!("violations: {}", v.axiom), "unknown tag"))?;
            violations.push(Violation {
                axiom,
                witness: v.witness.iter().map(CellId::new).collect(),
                lhs: v.lhs.as_ref().map(CellId::new),
                rhs: v.rhs.as_ref().map(CellId::new),
            });
        }
        let report = ValidationReport::from_violations(violations);
        let declared = match self.status.as_str() {
            "pass" => Status::Pass,
            "fail" => Status::Fail,
            other => {
                return Err(schema_error(
                    format!("status: {other}"),
                    "expected pass or fail",
                ))
            }
        };
        if report.status != declared {
            return Err(schema_error(
                "status",
                "declared status does not match the violation list",
            ));
        }
        Ok(report)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ClassificationPayload {
    pub unitary: bool,
    pub strictly_unitary: bool,
    pub pseudo: bool,
    pub strict: bool,
}

impl ClassificationPayload {
    pub fn from_core(c: &FunctorClassification) -> Self {
        ClassificationPayload {
            unitary: c.unitary,
            strictly_unitary: c.strictly_unitary,
            pseudo: c.pseudo,
            strict: c.strict,
        }
    }

    pub fn to_core(&self) -> FunctorClassification {
        FunctorClassification {
            unitary: self.unitary,
            strictly_unitary: self.strictly_unitary,
            pseudo: self.pseudo,
            strict: self.strict,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct EvidencePayload {
    pub reports: BTreeMap<String, ReportPayload>,
    pub g_classification: ClassificationPayload,
    pub eta_strong: bool,
    pub eps_strong: bool,
}

impl EvidencePayload {
    pub fn from_core(e: &CertificateEvidence) -> Self {
        EvidencePayload {
            reports: e
                .reports
                .iter()
                .map(|(k, v)| (k.clone(), ReportPayload::from_core(v)))
                .collect(),
            g_classification: ClassificationPayload::from_core(&e.g_classification),
            eta_strong: e.eta_strong,
            eps_strong: e.eps_strong,
        }
    }

    pub fn to_core(&self) -> Result<CertificateEvidence, CliError> {
        let mut reports = BTreeMap::new();
        for (k, v) in &self.reports {
            reports.insert(k.clone(), v.to_core()?);
        }
        Ok(CertificateEvidence {
            reports,
            g_classification: self.g_classification.to_core(),
            eta_strong: self.eta_strong,
            eps_strong: self.eps_strong,
        })
    }
}

/// A certificate document. The inversion data is optional: the constructive
/// route emits only the reverse functor with its unit and counit.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CertificatePayload {
    pub g: FunctorPayload,
    pub eta: TransformationPayload,
    pub eps: TransformationPayload,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub eta_inv: Option<TransformationPayload>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub eps_inv: Option<TransformationPayload>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub eta_unit: Option<ModificationPayload>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub eta_counit: Option<ModificationPayload>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub eps_unit: Option<ModificationPayload>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub eps_counit: Option<ModificationPayload>,
    pub evidence: EvidencePayload,
}

impl CertificatePayload {
    pub fn from_core(c: &BiequivalenceCertificate) -> Result<Self, CliError> {
        Ok(CertificatePayload {
            g: FunctorPayload::from_core(&c.g)?,
            eta: TransformationPayload::from_core(&c.eta)?,
            eps: TransformationPayload::from_core(&c.eps)?,
            eta_inv: Some(TransformationPayload::from_core(&c.eta_inv)?),
            eps_inv: Some(TransformationPayload::from_core(&c.eps_inv)?),
            eta_unit: Some(ModificationPayload::from_core(&c.eta_unit)?),
            eta_counit: Some(ModificationPayload::from_core(&c.eta_counit)?),
            eps_unit: Some(ModificationPayload::from_core(&c.eps_unit)?),
            eps_counit: Some(ModificationPayload::from_core(&c.eps_counit)?),
            evidence: EvidencePayload::from_core(&c.evidence),
        })
    }

    pub fn is_complete(&self) -> bool {
        self.eta_inv.is_some()
            && self.eps_inv.is_some()
            && self.eta_unit.is_some()
            && self.eta_counit.is_some()
            && self.eps_unit.is_some()
            && self.eps_counit.is_some()
    }

    pub fn to_core(&self) -> Result<BiequivalenceCertificate, CliError> {
        let missing = || schema_error("certificate", "missing inversion data");
        Ok(BiequivalenceCertificate {
            g: self.g.to_core()?,
            eta: self.eta.to_core()?,
            eps: self.eps.to_core()?,
            eta_inv: self.eta_inv.as_ref().ok_or_else(missing)?.to_core()?,
            eps_inv: self.eps_inv.as_ref().ok_or_else(missing)?.to_core()?,
            eta_unit: self.eta_unit.as_ref().ok_or_else(missing)?.to_core()?,
            eta_counit: self.eta_counit.as_ref().ok_or_else(missing)?.to_core()?,
            eps_unit: self.eps_unit.as_ref().ok_or_else(missing)?.to_core()?,
            eps_counit: self.eps_counit.as_ref().ok_or_else(missing)?.to_core()?,
            evidence: self.evidence.to_core()?,
        })
    }
}

/// Generic report document payloads, beyond plain validation reports.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "report_type", rename_all = "kebab-case")]
pub enum ReportDocPayload {
    Validation {
        report: ReportPayload,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        classification: Option<ClassificationPayload>,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        strong: Option<bool>,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        invertible: Option<bool>,
    },
    LocalCharacterisation {
        report: ReportPayload,
        quantified_pairs: Vec<(String, String)>,
    },
    TerminalSearch {
        found: bool,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        object: Option<String>,
        qualifying: Vec<String>,
    },
    Mate {
        direction: String,
        result: String,
    },
}

impl ReportDocPayload {
    pub fn local(e: &EsEfFf) -> Self {
        ReportDocPayload::LocalCharacterisation {
            report: ReportPayload::from_core(&e.to_report()),
            quantified_pairs: e
                .quantified_pairs
                .iter()
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .collect(),
        }
    }
}

/// Monoid presentations accepted by `gen deloop`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MonoidSpec {
    pub elements: Vec<String>,
    pub unit: String,
    pub mult: Vec<(String, String, String)>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub leq: Option<Vec<(String, String)>>,
}

impl MonoidSpec {
    pub fn to_core(&self) -> bicat_core::fixtures::MonoidTable {
        bicat_core::fixtures::MonoidTable::new(
            self.elements.iter().map(String::as_str),
            self.unit.as_str(),
            self.mult
                .iter()
                .map(|(a, b, c)| (a.as_str(), b.as_str(), c.as_str())),
        )
    }
}

/// Two-group presentations accepted by `gen two-group`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TwoGroupSpec {
    pub group: MonoidSpec,
    pub coefficients: MonoidSpec,
    /// Rows `(h, g, f, label)`; omitted triples default to the unit label.
    pub omega: Vec<(String, String, String, String)>,
}

impl TwoGroupSpec {
    pub fn to_core(&self) -> bicat_core::fixtures::TwoGroupData {
        let mut cocycle = BTreeMap::new();
        for (h, g, f, v) in &self.omega {
            cocycle.insert(
                (CellId::new(h), CellId::new(g), CellId::new(f)),
                CellId::new(v),
            );
        }
        bicat_core::fixtures::TwoGroupData {
            group: self.group.to_core(),
            coefficients: self.coefficients.to_core(),
            cocycle,
        }
    }
}
