//! Inc-lax terminal objects, the construction of a reverse lax functor from
//! terminal data in the lax slices, and the biequivalence certifier with its
//! independent checker.

use std::collections::BTreeMap;

use crate::adjunctions::{
    adjoint_transpose, canonical_adjoint_equivalence, find_equivalences,
    flip_adjoint_equivalence, invert_strong_transformation, Adjunction, AdjunctionError,
};
use crate::bicategory::FiniteBicategory;
use crate::calculus::{CalculusError, Evaluator, TwoCellExpr};
use crate::cell::CellId;
use crate::functors::{
    compose_lax_functors, compose_transformations, constant_pseudofunctor, identity_functor,
    identity_transformation, validate_lax_functor, validate_lax_transformation,
    validate_modification, FunctorClassification, FunctorError, FunctorReport, LaxFunctor,
    LaxTransformation, Modification, TransformationReport,
};
use crate::report::{AxiomTag, MalformedInput, ValidationReport, Violation};
use crate::slice::{change_of_slice, lax_slice, LaxSlice, SliceError};
use crate::validate::validate_bicategory;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuillenError {
    #[error("unknown cell {id}")]
    UnknownCell { id: CellId },
    #[error(transparent)]
    Malformed(#[from] MalformedInput),
    #[error(transparent)]
    Calculus(#[from] CalculusError),
    #[error(transparent)]
    Slice(#[from] SliceError),
    #[error(transparent)]
    Functor(#[from] FunctorError),
    #[error(transparent)]
    Adjunction(#[from] AdjunctionError),
    #[error("expected a unique solution at {site}, found {count}")]
    NoUniqueSolution { count: usize, site: String },
    #[error("witness search failed at stage {stage} (cell {cell})")]
    WitnessSearchFailed { stage: String, cell: CellId },
    #[error("hypothesis not satisfied: {detail}")]
    HypothesisNotSatisfied { detail: String },
    #[error("internal invariant failed at {site}: {detail}")]
    Internal { site: String, detail: String },
}

fn internal(site: impl Into<String>, detail: impl Into<String>) -> QuillenError {
    QuillenError::Internal {
        site: site.into(),
        detail: detail.into(),
    }
}

/// Inc-lax terminal data over a bicategory: a terminal object, an initial
/// 1-cell into it from every object (the identity at the terminal itself),
/// and the induced lax naturality constraints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncLaxTerminalData {
    pub terminal: CellId,
    /// Object -> the chosen initial 1-cell into the terminal.
    pub k1: BTreeMap<CellId, CellId>,
    /// 1-cell `u: X -> Y` -> the 2-cell `1_T . k_X => k_Y . u`.
    pub k2: BTreeMap<CellId, CellId>,
}

/// Whether `h` is initial in `D(x, y)`: exactly one 2-cell `h => h'` for
/// every 1-cell `h'` of that hom-category.
pub fn is_initial_one_cell(
    d: &FiniteBicategory,
    x: &CellId,
    y: &CellId,
    h: &CellId,
) -> Result<bool, QuillenError> {
    let hom = match d.hom(x, y) {
        Some(hom) => hom,
        None => return Ok(false),
    };
    if !hom.one_cells.contains(h) {
        return Ok(false);
    }
    Ok(hom
        .one_cells
        .iter()
        .all(|h2| hom.two_cells_between(h, h2).len() == 1))
}

/// The canonical-least initial 1-cell of `D(x, y)`, if any.
pub fn initial_object_in_hom(
    d: &FiniteBicategory,
    x: &CellId,
    y: &CellId,
) -> Result<Option<CellId>, QuillenError> {
    if !d.objects.contains(x) {
        return Err(QuillenError::UnknownCell { id: x.clone() });
    }
    if !d.objects.contains(y) {
        return Err(QuillenError::UnknownCell { id: y.clone() });
    }
    let hom = match d.hom(x, y) {
        Some(hom) => hom,
        None => return Ok(None),
    };
    for h in &hom.one_cells {
        if is_initial_one_cell(d, x, y, h)? {
            return Ok(Some(h.clone()));
        }
    }
    Ok(None)
}

fn unique_two_cell(
    d: &FiniteBicategory,
    from: &CellId,
    to: &CellId,
    site: &str,
) -> Result<CellId, QuillenError> {
    let cells = d.two_cells_between(from, to);
    if cells.len() != 1 {
        return Err(QuillenError::NoUniqueSolution {
            count: cells.len(),
            site: site.to_string(),
        });
    }
    Ok(cells.into_iter().next().expect("length checked"))
}

/// Assemble the lax naturality constraints from the universal 2-cells: for
/// each `u: X -> Y`, `k2[u] = (unique k_X => k_Y u) . lunit(k_X)`.
fn assemble_k2(
    d: &FiniteBicategory,
    k1: &BTreeMap<CellId, CellId>,
) -> Result<BTreeMap<CellId, CellId>, QuillenError> {
    let ev = Evaluator::new(d)?;
    let mut k2 = BTreeMap::new();
    for ((x, y), hom) in &d.homs {
        for u in &hom.one_cells {
            let kx = k1
                .get(x)
                .ok_or_else(|| MalformedInput::new(format!("k1[{x}]"), "missing entry"))?;
            let ky = k1
                .get(y)
                .ok_or_else(|| MalformedInput::new(format!("k1[{y}]"), "missing entry"))?;
            let target = d.horizontal1(ky, u).cloned().ok_or_else(|| {
                MalformedInput::new(format!("hcomp1[({ky}, {u})]"), "missing entry")
            })?;
            let universal =
                unique_two_cell(d, kx, &target, &format!("universal 2-cell at {u}"))?;
            let cell = ev.eval(&TwoCellExpr::vcomp(
                TwoCellExpr::cell(universal),
                TwoCellExpr::lunit(kx.clone()),
            ))?;
            k2.insert(u.clone(), cell);
        }
    }
    Ok(k2)
}

/// Validate inc-lax terminal data: initial components with the identity at
/// the terminal, naturality constraints given by the universal 2-cells, and
/// the assembled lax transformation from the identity functor to the
/// constant pseudofunctor at the terminal.
pub fn validate_inc_lax_terminal(
    d: &FiniteBicategory,
    data: &IncLaxTerminalData,
) -> Result<ValidationReport, QuillenError> {
    if !d.objects.contains(&data.terminal) {
        return Err(QuillenError::UnknownCell {
            id: data.terminal.clone(),
        });
    }
    let mut violations = Vec::new();
    let ev = Evaluator::new(d)?;
    let id_terminal = d
        .id1
        .get(&data.terminal)
        .ok_or_else(|| MalformedInput::new(format!("id1[{}]", data.terminal), "missing"))?;
    for x in &d.objects {
        let kx = data
            .k1
            .get(x)
            .ok_or_else(|| MalformedInput::new(format!("k1[{x}]"), "missing entry"))?;
        if x == &data.terminal && kx != id_terminal {
            violations.push(Violation::structural(
                AxiomTag::IdentityComponent,
                vec![x.clone(), kx.clone()],
            ));
        }
        if !is_initial_one_cell(d, x, &data.terminal, kx)? {
            violations.push(Violation::structural(
                AxiomTag::InitialComponent,
                vec![x.clone(), kx.clone()],
            ));
        }
    }
    for ((x, y), hom) in &d.homs {
        for u in &hom.one_cells {
            let ku = data
                .k2
                .get(u)
                .ok_or_else(|| MalformedInput::new(format!("k2[{u}]"), "missing entry"))?;
            let kx = &data.k1[x];
            let ky = &data.k1[y];
            let target = d.horizontal1(ky, u).cloned().ok_or_else(|| {
                MalformedInput::new(format!("hcomp1[({ky}, {u})]"), "missing entry")
            })?;
            let cells = d.two_cells_between(kx, &target);
            if cells.len() != 1 {
                violations.push(Violation::structural(
                    AxiomTag::InitialComponent,
                    vec![x.clone(), target.clone()],
                ));
                continue;
            }
            let expected = ev.eval(&TwoCellExpr::vcomp(
                TwoCellExpr::cell(cells[0].clone()),
                TwoCellExpr::lunit(kx.clone()),
            ))?;
            if &expected != ku {
                violations.push(Violation::unequal(
                    AxiomTag::UniversalFactorisation,
                    vec![u.clone()],
                    ku.clone(),
                    expected,
                ));
            }
        }
    }
    let transformation = LaxTransformation {
        src: identity_functor(d),
        tgt: constant_pseudofunctor(d, d, &data.terminal)?,
        comp1: data.k1.clone(),
        comp2: data.k2.clone(),
    };
    let rep = validate_lax_transformation(&transformation)?;
    let mut report = ValidationReport::from_violations(violations);
    report.absorb(rep.report);
    Ok(report)
}

fn try_terminal_at(
    d: &FiniteBicategory,
    terminal: &CellId,
) -> Result<Option<IncLaxTerminalData>, QuillenError> {
    let id_terminal = d
        .id1
        .get(terminal)
        .ok_or_else(|| MalformedInput::new(format!("id1[{terminal}]"), "missing"))?;
    if !is_initial_one_cell(d, terminal, terminal, id_terminal)? {
        return Ok(None);
    }
    let mut k1 = BTreeMap::new();
    for x in &d.objects {
        if x == terminal {
            k1.insert(x.clone(), id_terminal.clone());
            continue;
        }
        match initial_object_in_hom(d, x, terminal)? {
            Some(h) => {
                k1.insert(x.clone(), h);
            }
            None => return Ok(None),
        }
    }
    let k2 = assemble_k2(d, &k1)?;
    Ok(Some(IncLaxTerminalData {
        terminal: terminal.clone(),
        k1,
        k2,
    }))
}

/// All objects admitting inc-lax terminal structure, canonical order.
pub fn inc_lax_terminal_candidates(d: &FiniteBicategory) -> Result<Vec<CellId>, QuillenError> {
    let mut out = Vec::new();
    for terminal in &d.objects {
        if let Some(data) = try_terminal_at(d, terminal)? {
            if validate_inc_lax_terminal(d, &data)?.passed() {
                out.push(terminal.clone());
            }
        }
    }
    Ok(out)
}

/// Find the canonical-least inc-lax terminal object, with its data
/// re-validated before returning. Absence is a legitimate result.
pub fn find_inc_lax_terminal(
    d: &FiniteBicategory,
) -> Result<Option<IncLaxTerminalData>, QuillenError> {
    for terminal in &d.objects {
        if let Some(data) = try_terminal_at(d, terminal)? {
            if validate_inc_lax_terminal(d, &data)?.passed() {
                return Ok(Some(data));
            }
        }
    }
    Ok(None)
}

/// Check that a change-of-slice functor preserves initial components: for
/// every source object `Z`, the composite `k'_{Fu(T)} . Fu(k_Z)` is initial
/// in its target hom.
pub fn check_preserves_inc(
    fu: &LaxFunctor,
    kx: &IncLaxTerminalData,
    ky: &IncLaxTerminalData,
) -> Result<ValidationReport, QuillenError> {
    let image_terminal = fu
        .obj_map
        .get(&kx.terminal)
        .ok_or_else(|| MalformedInput::new(format!("obj_map[{}]", kx.terminal), "missing"))?;
    let k_prime = ky
        .k1
        .get(image_terminal)
        .ok_or_else(|| MalformedInput::new(format!("k1[{image_terminal}]"), "missing entry"))?;
    let mut violations = Vec::new();
    for z in &fu.src.objects {
        let kz = kx
            .k1
            .get(z)
            .ok_or_else(|| MalformedInput::new(format!("k1[{z}]"), "missing entry"))?;
        let image = fu.on_one(kz)?;
        let composite = fu.tgt.horizontal1(k_prime, image).cloned().ok_or_else(|| {
            MalformedInput::new(format!("hcomp1[({k_prime}, {image})]"), "missing entry")
        })?;
        let fz = fu.on_obj(z)?;
        if !is_initial_one_cell(&fu.tgt, fz, &ky.terminal, &composite)? {
            violations.push(Violation::structural(
                AxiomTag::PreservesInitialComponents,
                vec![z.clone(), composite],
            ));
        }
    }
    Ok(ValidationReport::from_violations(violations))
}

/// One of the three local surjectivity/faithfulness checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub holds: bool,
    /// First counterexample in canonical order, when the check fails.
    pub witness: Vec<CellId>,
}

impl CheckOutcome {
    fn pass() -> Self {
        CheckOutcome {
            holds: true,
            witness: Vec::new(),
        }
    }

    fn fail(witness: Vec<CellId>) -> Self {
        CheckOutcome {
            holds: false,
            witness,
        }
    }
}

/// Outcome of the essential surjectivity / essential fullness / full
/// faithfulness checks, recording which object pairs the local checks
/// quantified over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EsEfFf {
    pub essentially_surjective: CheckOutcome,
    pub essentially_full: CheckOutcome,
    pub fully_faithful: CheckOutcome,
    pub quantified_pairs: Vec<(CellId, CellId)>,
}

impl EsEfFf {
    pub fn all_hold(&self) -> bool {
        self.essentially_surjective.holds
            && self.essentially_full.holds
            && self.fully_faithful.holds
    }

    /// Render as a validation report for uniform reporting.
    pub fn to_report(&self) -> ValidationReport {
        let mut violations = Vec::new();
        if !self.essentially_surjective.holds {
            violations.push(Violation::structural(
                AxiomTag::EssentialSurjectivity,
                self.essentially_surjective.witness.clone(),
            ));
        }
        if !self.essentially_full.holds {
            violations.push(Violation::structural(
                AxiomTag::EssentialFullness,
                self.essentially_full.witness.clone(),
            ));
        }
        if !self.fully_faithful.holds {
            violations.push(Violation::structural(
                AxiomTag::FullFaithfulness,
                self.fully_faithful.witness.clone(),
            ));
        }
        ValidationReport::from_violations(violations)
    }
}

/// Check essential surjectivity on objects, essential fullness on 1-cells
/// (quantified over all pairs of source objects), and full faithfulness on
/// 2-cells (hom-wise bijections between parallel 2-cell sets).
pub fn check_es_ef_ff(f: &LaxFunctor) -> Result<EsEfFf, QuillenError> {
    let b = &f.src;
    let c = &f.tgt;

    let mut es = CheckOutcome::pass();
    'es: for x in &c.objects {
        for a in &b.objects {
            let fa = f.on_obj(a)?;
            if !find_equivalences(c, fa, x)?.is_empty() {
                continue 'es;
            }
        }
        es = CheckOutcome::fail(vec![x.clone()]);
        break;
    }

    let mut quantified_pairs = Vec::new();
    let mut ef = CheckOutcome::pass();
    let mut ff = CheckOutcome::pass();
    for a0 in &b.objects {
        for a1 in &b.objects {
            quantified_pairs.push((a0.clone(), a1.clone()));
            let fa0 = f.on_obj(a0)?;
            let fa1 = f.on_obj(a1)?;
            let base_one: Vec<CellId> = match b.hom(a0, a1) {
                Some(h) => h.one_cells.iter().cloned().collect(),
                None => Vec::new(),
            };
            let amb_one: Vec<CellId> = match c.hom(fa0, fa1) {
                Some(h) => h.one_cells.iter().cloned().collect(),
                None => Vec::new(),
            };
            if ef.holds {
                'target: for h in &amb_one {
                    for p in &base_one {
                        let fp = f.on_one(p)?;
                        if c.two_cells_between(fp, h)
                            .iter()
                            .any(|cell| c.is_invertible_two_cell(cell))
                        {
                            continue 'target;
                        }
                    }
                    ef = CheckOutcome::fail(vec![a0.clone(), a1.clone(), h.clone()]);
                    break;
                }
            }
            if ff.holds {
                'pairs: for p in &base_one {
                    for q in &base_one {
                        let upstairs = b.two_cells_between(p, q);
                        let downstairs = c.two_cells_between(f.on_one(p)?, f.on_one(q)?);
                        let mut images = Vec::new();
                        for gamma in &upstairs {
                            images.push(f.on_two(gamma)?.clone());
                        }
                        images.sort();
                        images.dedup();
                        let injective = images.len() == upstairs.len();
                        let surjective = downstairs.iter().all(|d| images.contains(d));
                        if !injective || !surjective {
                            ff = CheckOutcome::fail(vec![
                                a0.clone(),
                                a1.clone(),
                                p.clone(),
                                q.clone(),
                            ]);
                            break 'pairs;
                        }
                    }
                }
            }
        }
    }

    Ok(EsEfFf {
        essentially_surjective: es,
        essentially_full: ef,
        fully_faithful: ff,
        quantified_pairs,
    })
}

/// Chosen witnesses exhibiting each lax slice of an essentially surjective,
/// essentially full, fully faithful pseudofunctor as inc-lax terminal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObjectWitness {
    /// The target object this witness is for.
    pub base: CellId,
    /// The chosen source object carrying an equivalence onto `base`.
    pub obj_bar: CellId,
    /// The promoted adjoint equivalence `F(obj_bar) -> base`.
    pub equivalence: Adjunction,
    /// Slice object id -> the chosen section `(p_A, theta_A)`.
    pub sections: BTreeMap<CellId, (CellId, CellId)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WhiteheadWitnesses {
    pub per_object: BTreeMap<CellId, ObjectWitness>,
}

/// A slice with validated inc-lax terminal data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SliceTerminal {
    pub slice: LaxSlice,
    pub data: IncLaxTerminalData,
}

/// Per-target-object terminal data: the hypotheses of the reverse-functor
/// construction as validated data.
pub type TerminalAssignment = BTreeMap<CellId, SliceTerminal>;

/// The slice identity triangle filler `r' = (1_f * F0_A) . r_inv`.
fn slice_identity_filler(
    f: &LaxFunctor,
    a: &CellId,
    fa: &CellId,
) -> Result<CellId, QuillenError> {
    let ev = Evaluator::new(&f.tgt)?;
    Ok(ev.eval(&TwoCellExpr::vcomp(
        TwoCellExpr::whisker_left(fa.clone(), TwoCellExpr::cell(f.f0_at(a)?.clone())),
        TwoCellExpr::runit_inv(fa.clone()),
    ))?)
}

/// Choose inc-lax terminal witnesses for every lax slice of `f`.
///
/// For each target object: the canonical-least source object carrying an
/// equivalence, promoted to an adjoint equivalence; for each slice object,
/// the canonical-least section with an invertible comparison 2-cell,
/// transposed to fill its triangle; the identity choice at the terminal
/// itself. The induced slice data is validated, as is preservation along
/// every change-of-slice, before returning.
pub fn build_witnesses(f: &LaxFunctor) -> Result<WhiteheadWitnesses, QuillenError> {
    let fr = validate_lax_functor(f)?;
    if !fr.report.passed() || !fr.classification.pseudo {
        return Err(QuillenError::HypothesisNotSatisfied {
            detail: "the functor must be a validated pseudofunctor".into(),
        });
    }
    let b = &f.src;
    let c = &f.tgt;
    let mut per_object = BTreeMap::new();
    for x in &c.objects {
        let mut chosen: Option<(CellId, CellId)> = None;
        for a in &b.objects {
            let fa = f.on_obj(a)?;
            if let Some(least) = find_equivalences(c, fa, x)?.first() {
                chosen = Some((a.clone(), least.clone()));
                break;
            }
        }
        let (obj_bar, f_bar) = chosen.ok_or_else(|| QuillenError::WitnessSearchFailed {
            stage: "essential-surjectivity".into(),
            cell: x.clone(),
        })?;
        let equivalence = canonical_adjoint_equivalence(c, &f_bar)?;
        let flipped = flip_adjoint_equivalence(c, &equivalence)?;

        let slice = lax_slice(f, x)?;
        let mut sections = BTreeMap::new();
        for (o, (a, fa)) in &slice.tags.objects {
            if a == &obj_bar && fa == &f_bar {
                let id_a = b
                    .id1
                    .get(a)
                    .cloned()
                    .ok_or_else(|| MalformedInput::new(format!("id1[{a}]"), "missing"))?;
                let filler = slice_identity_filler(f, a, fa)?;
                sections.insert(o.clone(), (id_a, filler));
                continue;
            }
            let composite = c
                .horizontal1(&equivalence.right, fa)
                .cloned()
                .ok_or_else(|| {
                    MalformedInput::new(
                        format!("hcomp1[({}, {fa})]", equivalence.right),
                        "missing",
                    )
                })?;
            let mut section = None;
            if let Some(base_hom) = b.hom(a, &obj_bar) {
                'outer: for p in &base_hom.one_cells {
                    let fp = f.on_one(p)?;
                    for dagger in c.two_cells_between(&composite, fp) {
                        if !c.is_invertible_two_cell(&dagger) {
                            continue;
                        }
                        // Transpose along the flipped equivalence to fill the
                        // triangle f_A => f_bar . Fp.
                        let theta = adjoint_transpose(c, &flipped, fa, &dagger)?;
                        if !c.is_invertible_two_cell(&theta) {
                            continue;
                        }
                        section = Some((p.clone(), theta));
                        break 'outer;
                    }
                }
            }
            let section = section.ok_or_else(|| QuillenError::WitnessSearchFailed {
                stage: "essential-fullness".into(),
                cell: o.clone(),
            })?;
            sections.insert(o.clone(), section);
        }
        per_object.insert(
            x.clone(),
            ObjectWitness {
                base: x.clone(),
                obj_bar,
                equivalence,
                sections,
            },
        );
    }
    let witnesses = WhiteheadWitnesses { per_object };
    // Postconditions: the induced data validates and is preserved by every
    // change-of-slice functor.
    let assignment = terminal_assignment_from_witnesses(f, &witnesses)?;
    let preservation = verify_preservation(f, &assignment)?;
    if !preservation.passed() {
        return Err(QuillenError::WitnessSearchFailed {
            stage: "preservation".into(),
            cell: preservation.violations[0]
                .witness
                .first()
                .cloned()
                .unwrap_or_else(|| CellId::new("?")),
        });
    }
    Ok(witnesses)
}

/// Turn witnesses into validated per-object inc-lax terminal data.
pub fn terminal_assignment_from_witnesses(
    f: &LaxFunctor,
    w: &WhiteheadWitnesses,
) -> Result<TerminalAssignment, QuillenError> {
    let mut out = BTreeMap::new();
    for (x, witness) in &w.per_object {
        let slice = lax_slice(f, x)?;
        let terminal = slice
            .tags
            .objects_rev
            .get(&(witness.obj_bar.clone(), witness.equivalence.left.clone()))
            .cloned()
            .ok_or_else(|| internal("witness terminal", "terminal pair is not a slice object"))?;
        let mut k1 = BTreeMap::new();
        for (o, (p, theta)) in &witness.sections {
            let cell = slice
                .tags
                .one_rev
                .get(&(o.clone(), terminal.clone(), p.clone(), theta.clone()))
                .cloned()
                .ok_or_else(|| QuillenError::WitnessSearchFailed {
                    stage: "section-triangle".into(),
                    cell: o.clone(),
                })?;
            k1.insert(o.clone(), cell);
        }
        let k2 = assemble_k2(&slice.bicategory, &k1)?;
        let data = IncLaxTerminalData { terminal, k1, k2 };
        let report = validate_inc_lax_terminal(&slice.bicategory, &data)?;
        if !report.passed() {
            return Err(QuillenError::WitnessSearchFailed {
                stage: "inc-lax-validation".into(),
                cell: x.clone(),
            });
        }
        out.insert(x.clone(), SliceTerminal { slice, data });
    }
    Ok(out)
}

/// Search every slice for inc-lax terminal data without witnesses, the
/// constructive hypothesis route. `Err(x)` in the inner result names the
/// first target object whose slice has none.
pub fn terminal_assignment_by_search(
    f: &LaxFunctor,
) -> Result<Result<TerminalAssignment, CellId>, QuillenError> {
    let mut out = BTreeMap::new();
    for x in &f.tgt.objects {
        let slice = lax_slice(f, x)?;
        match find_inc_lax_terminal(&slice.bicategory)? {
            Some(data) => {
                out.insert(x.clone(), SliceTerminal { slice, data });
            }
            None => return Ok(Err(x.clone())),
        }
    }
    Ok(Ok(out))
}

/// Verify hypothesis (2): every change-of-slice functor preserves initial
/// components of the assigned terminal data. Violations are prefixed with
/// the inducing 1-cell.
pub fn verify_preservation(
    f: &LaxFunctor,
    t: &TerminalAssignment,
) -> Result<ValidationReport, QuillenError> {
    let mut report = ValidationReport::pass();
    for ((x, y), hom) in &f.tgt.homs {
        for u in &hom.one_cells {
            let kx = t
                .get(x)
                .ok_or_else(|| MalformedInput::new(format!("terminal[{x}]"), "missing"))?;
            let ky = t
                .get(y)
                .ok_or_else(|| MalformedInput::new(format!("terminal[{y}]"), "missing"))?;
            let change = change_of_slice(f, u)?;
            if change.source != kx.slice || change.target != ky.slice {
                return Err(internal(
                    format!("change-of-slice at {u}"),
                    "slices do not match the assignment",
                ));
            }
            let mut rep = check_preserves_inc(&change.functor, &kx.data, &ky.data)?;
            for v in &mut rep.violations {
                v.witness.insert(0, u.clone());
            }
            report.absorb(ValidationReport::from_violations(rep.violations));
        }
    }
    Ok(report)
}

struct GBuilder<'a> {
    f: &'a LaxFunctor,
    t: &'a TerminalAssignment,
}

impl<'a> GBuilder<'a> {
    fn st(&self, x: &CellId) -> Result<&SliceTerminal, QuillenError> {
        self.t
            .get(x)
            .ok_or_else(|| MalformedInput::new(format!("terminal[{x}]"), "missing entry").into())
    }

    /// The pair `(obj_bar, f_bar)` of the terminal slice object over `x`.
    fn bar(&self, x: &CellId) -> Result<(CellId, CellId), QuillenError> {
        let st = self.st(x)?;
        let (a, f) = st
            .slice
            .tags
            .objects
            .get(&st.data.terminal)
            .ok_or_else(|| internal("terminal object", "missing tags"))?;
        Ok((a.clone(), f.clone()))
    }

    /// The chosen initial triangle `(u_bar, theta_u)` for `u: x -> y`: the
    /// component of the slice-over-`y` data at `(x_bar, u . f_xbar)`.
    fn bar_one(
        &self,
        u: &CellId,
        x: &CellId,
        y: &CellId,
    ) -> Result<(CellId, CellId), QuillenError> {
        let o = self.source_object(u, x, y)?;
        let sty = self.st(y)?;
        let k_cell = sty
            .data
            .k1
            .get(&o)
            .ok_or_else(|| MalformedInput::new(format!("k1[{o}]"), "missing entry"))?;
        let (p, theta) = sty
            .slice
            .tags
            .one_cells
            .get(k_cell)
            .ok_or_else(|| internal("initial 1-cell", "missing tags"))?;
        Ok((p.clone(), theta.clone()))
    }

    /// The slice object id of `(x_bar, u . f_xbar)` in the slice over `y`.
    fn source_object(&self, u: &CellId, x: &CellId, y: &CellId) -> Result<CellId, QuillenError> {
        let c = &self.f.tgt;
        let (xbar, fxbar) = self.bar(x)?;
        let sty = self.st(y)?;
        let uf = c
            .horizontal1(u, &fxbar)
            .cloned()
            .ok_or_else(|| MalformedInput::new(format!("hcomp1[({u}, {fxbar})]"), "missing"))?;
        sty.slice
            .tags
            .objects_rev
            .get(&(xbar, uf))
            .cloned()
            .ok_or_else(|| internal(format!("slice object over {y}"), "missing pair"))
    }

    /// The unique slice 2-cell between two slice 1-cells, as its base 2-cell.
    fn unique_slice_two(
        &self,
        slice: &LaxSlice,
        from: &CellId,
        to: &CellId,
        site: &str,
    ) -> Result<CellId, QuillenError> {
        let cells = slice.bicategory.two_cells_between(from, to);
        if cells.len() != 1 {
            return Err(QuillenError::NoUniqueSolution {
                count: cells.len(),
                site: site.to_string(),
            });
        }
        Ok(slice.two_part(&cells[0])?.clone())
    }
}

/// Construct the reverse lax functor from validated terminal data: cells are
/// carried by the chosen initial 1-cells of the slices, and the comparison
/// cells are the unique solutions of the corresponding cone conditions.
pub fn construct_g(f: &LaxFunctor, t: &TerminalAssignment) -> Result<LaxFunctor, QuillenError> {
    let b = &f.src;
    let c = &f.tgt;
    let builder = GBuilder { f, t };
    let ev = Evaluator::new(c)?;

    let mut obj_map = BTreeMap::new();
    for x in &c.objects {
        obj_map.insert(x.clone(), builder.bar(x)?.0);
    }

    let mut one_map = BTreeMap::new();
    for ((x, y), hom) in &c.homs {
        for u in &hom.one_cells {
            one_map.insert(u.clone(), builder.bar_one(u, x, y)?.0);
        }
    }

    // 2-cells: the unique slice 2-cell from the chosen initial 1-cell to the
    // twisted triangle (u1_bar, theta_1 . (gamma * 1_{f_xbar})).
    let mut two_map = BTreeMap::new();
    for ((x, y), hom) in &c.homs {
        let sty = builder.st(y)?;
        let (_, fxbar) = builder.bar(x)?;
        for (gamma, (u0, u1)) in &hom.two_cells {
            let o = builder.source_object(u0, x, y)?;
            let s0 = sty.data.k1[&o].clone();
            let (u1_bar, theta1) = builder.bar_one(u1, x, y)?;
            let twisted = ev.eval(&TwoCellExpr::vcomp(
                TwoCellExpr::cell(theta1),
                TwoCellExpr::whisker_right(TwoCellExpr::cell(gamma.clone()), fxbar.clone()),
            ))?;
            let s1 = sty
                .slice
                .tags
                .one_rev
                .get(&(o.clone(), sty.data.terminal.clone(), u1_bar, twisted))
                .cloned()
                .ok_or_else(|| internal(format!("twisted triangle at {gamma}"), "missing"))?;
            let cell = builder.unique_slice_two(
                &sty.slice,
                &s0,
                &s1,
                &format!("image of 2-cell {gamma}"),
            )?;
            two_map.insert(gamma.clone(), cell);
        }
    }

    // Unit constraints: the unique slice 2-cell from the slice identity to
    // (1_X bar, theta . lunit_inv).
    let mut f0 = BTreeMap::new();
    for x in &c.objects {
        let stx = builder.st(x)?;
        let id_x = c
            .id1
            .get(x)
            .cloned()
            .ok_or_else(|| MalformedInput::new(format!("id1[{x}]"), "missing"))?;
        let (one_bar, theta) = builder.bar_one(&id_x, x, x)?;
        let (_, fxbar) = builder.bar(x)?;
        let twisted = ev.eval(&TwoCellExpr::vcomp(
            TwoCellExpr::cell(theta),
            TwoCellExpr::lunit_inv(fxbar.clone()),
        ))?;
        let terminal = stx.data.terminal.clone();
        let s_tgt = stx
            .slice
            .tags
            .one_rev
            .get(&(terminal.clone(), terminal.clone(), one_bar, twisted))
            .cloned()
            .ok_or_else(|| internal(format!("unit triangle at {x}"), "missing"))?;
        let s_src = stx.data.k1[&terminal].clone();
        let cell = builder.unique_slice_two(
            &stx.slice,
            &s_src,
            &s_tgt,
            &format!("unit constraint at {x}"),
        )?;
        f0.insert(x.clone(), cell);
    }

    // Composition constraints: unique slice 2-cell between the pasted
    // composite triangle and the twisted triangle of the composite.
    let mut f2 = BTreeMap::new();
    for ((y, z), hom_v) in &c.homs {
        for v in &hom_v.one_cells {
            for ((x, y2), hom_u) in &c.homs {
                if y2 != y {
                    continue;
                }
                for u in &hom_u.one_cells {
                    let stz = builder.st(z)?;
                    let (xbar, fxbar) = builder.bar(x)?;
                    let (_, fybar) = builder.bar(y)?;
                    let (_, fzbar) = builder.bar(z)?;
                    let (u_bar, theta_u) = builder.bar_one(u, x, y)?;
                    let (v_bar, theta_v) = builder.bar_one(v, y, z)?;
                    let fu_bar = f.on_one(&u_bar)?.clone();
                    let fv_bar = f.on_one(&v_bar)?.clone();
                    let theta_prime = ev.eval(&TwoCellExpr::chain([
                        TwoCellExpr::whisker_left(v.clone(), TwoCellExpr::cell(theta_u)),
                        TwoCellExpr::assoc_inv(v.clone(), fybar.clone(), fu_bar.clone()),
                        TwoCellExpr::whisker_right(TwoCellExpr::cell(theta_v), fu_bar.clone()),
                        TwoCellExpr::assoc(fzbar.clone(), fv_bar.clone(), fu_bar.clone()),
                        TwoCellExpr::whisker_left(
                            fzbar.clone(),
                            TwoCellExpr::cell(f.f2_at(&v_bar, &u_bar)?.clone()),
                        ),
                    ]))?;
                    let vu_barbar = b.horizontal1(&v_bar, &u_bar).cloned().ok_or_else(|| {
                        MalformedInput::new(format!("hcomp1[({v_bar}, {u_bar})]"), "missing")
                    })?;
                    let uf = c.horizontal1(u, &fxbar).cloned().ok_or_else(|| {
                        MalformedInput::new(format!("hcomp1[({u}, {fxbar})]"), "missing")
                    })?;
                    let vuf = c.horizontal1(v, &uf).cloned().ok_or_else(|| {
                        MalformedInput::new(format!("hcomp1[({v}, {uf})]"), "missing")
                    })?;
                    let o_comp = stz
                        .slice
                        .tags
                        .objects_rev
                        .get(&(xbar.clone(), vuf))
                        .cloned()
                        .ok_or_else(|| internal("composite source object", "missing"))?;
                    let s_src = stz
                        .slice
                        .tags
                        .one_rev
                        .get(&(
                            o_comp.clone(),
                            stz.data.terminal.clone(),
                            vu_barbar,
                            theta_prime,
                        ))
                        .cloned()
                        .ok_or_else(|| internal("pasted composite triangle", "missing"))?;
                    let vu = c.horizontal1(v, u).cloned().ok_or_else(|| {
                        MalformedInput::new(format!("hcomp1[({v}, {u})]"), "missing")
                    })?;
                    let (vu_bar, theta_vu) = builder.bar_one(&vu, x, z)?;
                    let twisted = ev.eval(&TwoCellExpr::vcomp(
                        TwoCellExpr::cell(theta_vu),
                        TwoCellExpr::assoc_inv(v.clone(), u.clone(), fxbar.clone()),
                    ))?;
                    let s_tgt = stz
                        .slice
                        .tags
                        .one_rev
                        .get(&(o_comp, stz.data.terminal.clone(), vu_bar, twisted))
                        .cloned()
                        .ok_or_else(|| internal("twisted composite triangle", "missing"))?;
                    let cell = builder.unique_slice_two(
                        &stz.slice,
                        &s_src,
                        &s_tgt,
                        &format!("composition constraint at ({v}, {u})"),
                    )?;
                    f2.insert((v.clone(), u.clone()), cell);
                }
            }
        }
    }

    Ok(LaxFunctor {
        src: c.clone(),
        tgt: b.clone(),
        obj_map,
        one_map,
        two_map,
        f2,
        f0,
    })
}

/// Construct the unit `eta: Id -> G F` and counit `eps: F G -> Id` from the
/// terminal data. The counit's components are the terminal triangles
/// themselves; the unit's come from the slices over the images.
pub fn construct_unit_counit(
    f: &LaxFunctor,
    g: &LaxFunctor,
    t: &TerminalAssignment,
) -> Result<(LaxTransformation, LaxTransformation), QuillenError> {
    let b = &f.src;
    let c = &f.tgt;
    let builder = GBuilder { f, t };
    let ev = Evaluator::new(c)?;

    let mut eps_comp1 = BTreeMap::new();
    for x in &c.objects {
        eps_comp1.insert(x.clone(), builder.bar(x)?.1);
    }
    let mut eps_comp2 = BTreeMap::new();
    for ((x, y), hom) in &c.homs {
        for u in &hom.one_cells {
            eps_comp2.insert(u.clone(), builder.bar_one(u, x, y)?.1);
        }
    }
    let eps = LaxTransformation {
        src: compose_lax_functors(f, g)?,
        tgt: identity_functor(c),
        comp1: eps_comp1,
        comp2: eps_comp2,
    };

    let mut eta_comp1 = BTreeMap::new();
    for a in &b.objects {
        let fa = f.on_obj(a)?;
        let st = builder.st(fa)?;
        let id_fa = c
            .id1
            .get(fa)
            .cloned()
            .ok_or_else(|| MalformedInput::new(format!("id1[{fa}]"), "missing"))?;
        let o = st
            .slice
            .tags
            .objects_rev
            .get(&(a.clone(), id_fa))
            .ok_or_else(|| internal(format!("slice object ({a}, identity)"), "missing"))?;
        let k_cell = &st.data.k1[o];
        eta_comp1.insert(a.clone(), st.slice.tags.one_cells[k_cell].0.clone());
    }
    let mut eta_comp2 = BTreeMap::new();
    for ((a0, a1), hom) in &b.homs {
        for p in &hom.one_cells {
            let fa0 = f.on_obj(a0)?;
            let fa1 = f.on_obj(a1)?;
            let fp = f.on_one(p)?.clone();
            let st0 = builder.st(fa0)?;
            let st1 = builder.st(fa1)?;
            let change = change_of_slice(f, &fp)?;
            if change.source != st0.slice || change.target != st1.slice {
                return Err(internal(
                    format!("change-of-slice at {fp}"),
                    "slices do not match the assignment",
                ));
            }
            let id_fa0 = c
                .id1
                .get(fa0)
                .cloned()
                .ok_or_else(|| MalformedInput::new(format!("id1[{fa0}]"), "missing"))?;
            let id_fa1 = c
                .id1
                .get(fa1)
                .cloned()
                .ok_or_else(|| MalformedInput::new(format!("id1[{fa1}]"), "missing"))?;
            let o_a0 = st0
                .slice
                .tags
                .objects_rev
                .get(&(a0.clone(), id_fa0))
                .ok_or_else(|| internal("unit source object", "missing"))?;
            let o_b1 = st1
                .slice
                .tags
                .objects_rev
                .get(&(a1.clone(), id_fa1))
                .cloned()
                .ok_or_else(|| internal("unit target object", "missing"))?;
            // First composite: the change-of-slice image of the chosen
            // triangle at (a0, identity), composed with the chosen initial
            // 1-cell at the image of the terminal.
            let eta_cell_a0 = &st0.data.k1[o_a0];
            let mapped = change
                .functor
                .one_map
                .get(eta_cell_a0)
                .cloned()
                .ok_or_else(|| internal("mapped unit 1-cell", "missing"))?;
            let o_im_terminal = change
                .functor
                .obj_map
                .get(&st0.data.terminal)
                .cloned()
                .ok_or_else(|| internal("image of terminal", "missing"))?;
            let k_prime = st1
                .data
                .k1
                .get(&o_im_terminal)
                .cloned()
                .ok_or_else(|| MalformedInput::new("k1 at image of terminal", "missing"))?;
            let comp1_cell = st1
                .slice
                .bicategory
                .horizontal1(&k_prime, &mapped)
                .cloned()
                .ok_or_else(|| internal("unit comp-1 composite", "missing"))?;
            // Second composite: the chosen triangle at (a1, identity)
            // composed with (p, upsilon), upsilon = l_inv . r at Fp.
            let upsilon = ev.eval(&TwoCellExpr::vcomp(
                TwoCellExpr::lunit_inv(fp.clone()),
                TwoCellExpr::runit(fp.clone()),
            ))?;
            let o_src = change
                .functor
                .obj_map
                .get(o_a0)
                .cloned()
                .ok_or_else(|| internal("unit mapped source object", "missing"))?;
            let p_upsilon = st1
                .slice
                .tags
                .one_rev
                .get(&(o_src, o_b1.clone(), p.clone(), upsilon))
                .cloned()
                .ok_or_else(|| internal("unitor triangle (p, upsilon)", "missing"))?;
            let eta_cell_b = st1.data.k1[&o_b1].clone();
            let comp2_cell = st1
                .slice
                .bicategory
                .horizontal1(&eta_cell_b, &p_upsilon)
                .cloned()
                .ok_or_else(|| internal("unit comp-2 composite", "missing"))?;
            let cell = builder.unique_slice_two(
                &st1.slice,
                &comp1_cell,
                &comp2_cell,
                &format!("unit naturality at {p}"),
            )?;
            eta_comp2.insert(p.clone(), cell);
        }
    }
    let eta = LaxTransformation {
        src: identity_functor(b),
        tgt: compose_lax_functors(g, f)?,
        comp1: eta_comp1,
        comp2: eta_comp2,
    };
    Ok((eta, eps))
}

/// Result of the reverse-functor construction, with validation evidence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuillenAResult {
    pub g: LaxFunctor,
    pub eta: LaxTransformation,
    pub eps: LaxTransformation,
    pub g_report: FunctorReport,
    pub eta_report: TransformationReport,
    pub eps_report: TransformationReport,
    pub preservation: ValidationReport,
}

/// Run the reverse-functor construction against validated hypotheses: every
/// slice carries inc-lax terminal data, and every change-of-slice preserves
/// initial components. Outputs are validated and the reports returned.
pub fn quillen_a(f: &LaxFunctor, t: &TerminalAssignment) -> Result<QuillenAResult, QuillenError> {
    for x in &f.tgt.objects {
        let st = t.get(x).ok_or_else(|| QuillenError::HypothesisNotSatisfied {
            detail: format!("no terminal data for object {x}"),
        })?;
        let report = validate_inc_lax_terminal(&st.slice.bicategory, &st.data)?;
        if !report.passed() {
            return Err(QuillenError::HypothesisNotSatisfied {
                detail: format!("terminal data over {x} fails validation"),
            });
        }
    }
    let preservation = verify_preservation(f, t)?;
    if !preservation.passed() {
        return Err(QuillenError::HypothesisNotSatisfied {
            detail: "change-of-slice does not preserve initial components".into(),
        });
    }
    let g = construct_g(f, t)?;
    let (eta, eps) = construct_unit_counit(f, &g, t)?;
    let g_report = validate_lax_functor(&g)?;
    let eta_report = validate_lax_transformation(&eta)?;
    let eps_report = validate_lax_transformation(&eps)?;
    Ok(QuillenAResult {
        g,
        eta,
        eps,
        g_report,
        eta_report,
        eps_report,
        preservation,
    })
}

/// Evidence bundle carried by a certificate: the validator verdicts the
/// construction produced, plus the computed flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateEvidence {
    pub reports: BTreeMap<String, ValidationReport>,
    pub g_classification: FunctorClassification,
    pub eta_strong: bool,
    pub eps_strong: bool,
}

/// A full biequivalence certificate: the reverse pseudofunctor, the unit and
/// counit strong transformations, their inverses, the four invertible
/// modifications, and the evidence trail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiequivalenceCertificate {
    pub g: LaxFunctor,
    pub eta: LaxTransformation,
    pub eps: LaxTransformation,
    pub eta_inv: LaxTransformation,
    pub eps_inv: LaxTransformation,
    /// `1 => eta_inv . eta`.
    pub eta_unit: Modification,
    /// `eta . eta_inv => 1`.
    pub eta_counit: Modification,
    /// `1 => eps_inv . eps`.
    pub eps_unit: Modification,
    /// `eps . eps_inv => 1`.
    pub eps_counit: Modification,
    pub evidence: CertificateEvidence,
}

/// Outcome of the certifier: a certificate, or the counterexample ruling one
/// out.
#[derive(Debug, Clone, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum WhiteheadOutcome {
    Certificate(Box<BiequivalenceCertificate>),
    Counterexample(Box<EsEfFf>),
}

/// Certify a pseudofunctor as a biequivalence, or return the counterexample.
///
/// Checks the local characterisation first; on success builds witnesses,
/// constructs the reverse functor with unit and counit, inverts both
/// transformations, and assembles the certificate with its evidence trail.
pub fn whitehead(f: &LaxFunctor) -> Result<WhiteheadOutcome, QuillenError> {
    let fr = validate_lax_functor(f)?;
    if !fr.report.passed() || !fr.classification.pseudo {
        return Err(QuillenError::HypothesisNotSatisfied {
            detail: "the functor must be a validated pseudofunctor".into(),
        });
    }
    let local = check_es_ef_ff(f)?;
    if !local.all_hold() {
        return Ok(WhiteheadOutcome::Counterexample(Box::new(local)));
    }
    let witnesses = build_witnesses(f)?;
    let assignment = terminal_assignment_from_witnesses(f, &witnesses)?;
    let qa = quillen_a(f, &assignment)?;
    if !qa.g_report.report.passed()
        || !qa.eta_report.report.passed()
        || !qa.eps_report.report.passed()
    {
        return Err(internal(
            "construction outputs",
            "a constructed piece fails validation",
        ));
    }
    if !qa.g_report.classification.pseudo {
        return Err(internal("reverse functor", "not a pseudofunctor"));
    }
    if !qa.eta_report.strong || !qa.eps_report.strong {
        return Err(internal(
            "unit and counit",
            "constructed transformations are not strong",
        ));
    }
    let eta_inverted = invert_strong_transformation(&qa.eta)?;
    let eps_inverted = invert_strong_transformation(&qa.eps)?;

    let mut reports = BTreeMap::new();
    reports.insert("functor-f".to_string(), fr.report);
    reports.insert("functor-g".to_string(), qa.g_report.report.clone());
    reports.insert(
        "transformation-eta".to_string(),
        qa.eta_report.report.clone(),
    );
    reports.insert(
        "transformation-eps".to_string(),
        qa.eps_report.report.clone(),
    );
    reports.insert("preservation".to_string(), qa.preservation.clone());
    reports.insert("es-ef-ff".to_string(), local.to_report());
    reports.insert(
        "transformation-eta-inverse".to_string(),
        validate_lax_transformation(&eta_inverted.inverse)?.report,
    );
    reports.insert(
        "transformation-eps-inverse".to_string(),
        validate_lax_transformation(&eps_inverted.inverse)?.report,
    );
    reports.insert(
        "modification-eta-unit".to_string(),
        validate_modification(&eta_inverted.unit)?.report,
    );
    reports.insert(
        "modification-eta-counit".to_string(),
        validate_modification(&eta_inverted.counit)?.report,
    );
    reports.insert(
        "modification-eps-unit".to_string(),
        validate_modification(&eps_inverted.unit)?.report,
    );
    reports.insert(
        "modification-eps-counit".to_string(),
        validate_modification(&eps_inverted.counit)?.report,
    );

    let evidence = CertificateEvidence {
        reports,
        g_classification: qa.g_report.classification,
        eta_strong: qa.eta_report.strong,
        eps_strong: qa.eps_report.strong,
    };
    Ok(WhiteheadOutcome::Certificate(Box::new(
        BiequivalenceCertificate {
            g: qa.g,
            eta: qa.eta,
            eps: qa.eps,
            eta_inv: eta_inverted.inverse,
            eps_inv: eps_inverted.inverse,
            eta_unit: eta_inverted.unit,
            eta_counit: eta_inverted.counit,
            eps_unit: eps_inverted.unit,
            eps_counit: eps_inverted.counit,
            evidence,
        },
    )))
}

fn boundary_violation(piece: &str) -> Violation {
    Violation::structural(AxiomTag::CertificateBoundary, vec![CellId::new(piece)])
}

/// Independently re-validate a biequivalence certificate against `f`. The
/// checker is pure: every piece is checked from the certificate data alone,
/// nothing is reconstructed from terminal searches.
pub fn check_certificate(
    f: &LaxFunctor,
    cert: &BiequivalenceCertificate,
) -> Result<ValidationReport, QuillenError> {
    let b = &f.src;
    let c = &f.tgt;
    let mut report = ValidationReport::pass();

    report.absorb(validate_bicategory(b)?);
    report.absorb(validate_bicategory(c)?);

    let fr = validate_lax_functor(f)?;
    report.absorb(fr.report);
    if !fr.classification.pseudo {
        report.absorb(ValidationReport::from_violations(vec![
            Violation::structural(AxiomTag::CertificateFunctorPseudo, vec![CellId::new("f")]),
        ]));
    }

    if cert.g.src != *c || cert.g.tgt != *b {
        report.absorb(ValidationReport::from_violations(vec![boundary_violation(
            "g",
        )]));
        return Ok(report);
    }
    let gr = validate_lax_functor(&cert.g)?;
    report.absorb(gr.report);
    if !gr.classification.pseudo {
        report.absorb(ValidationReport::from_violations(vec![
            Violation::structural(AxiomTag::CertificateFunctorPseudo, vec![CellId::new("g")]),
        ]));
    }

    let gf = compose_lax_functors(&cert.g, f)?;
    let fg = compose_lax_functors(f, &cert.g)?;
    let id_b = identity_functor(b);
    let id_c = identity_functor(c);

    let mut violations = Vec::new();
    let expectations: [(&str, &LaxTransformation, &LaxFunctor, &LaxFunctor); 4] = [
        ("eta", &cert.eta, &id_b, &gf),
        ("eps", &cert.eps, &fg, &id_c),
        ("eta_inv", &cert.eta_inv, &gf, &id_b),
        ("eps_inv", &cert.eps_inv, &id_c, &fg),
    ];
    for (name, tr, want_src, want_tgt) in expectations {
        if &tr.src != want_src || &tr.tgt != want_tgt {
            violations.push(boundary_violation(name));
            continue;
        }
        let rep = validate_lax_transformation(tr)?;
        report.absorb(rep.report);
        if !rep.strong {
            violations.push(Violation::structural(
                AxiomTag::CertificateTransformationStrong,
                vec![CellId::new(name)],
            ));
        }
        let amb = &tr.src.tgt;
        for (x, comp) in &tr.comp1 {
            let bd = amb.one_cell_boundary(comp).map(|(s, t)| (s.clone(), t.clone()));
            match bd {
                Some((s, t)) => {
                    if !find_equivalences(amb, &s, &t)?.contains(comp) {
                        violations.push(Violation::structural(
                            AxiomTag::CertificateComponentInvertible,
                            vec![CellId::new(name), x.clone(), comp.clone()],
                        ));
                    }
                }
                None => violations.push(boundary_violation(name)),
            }
        }
    }
    report.absorb(ValidationReport::from_violations(violations));

    // Modifications: boundaries against recomputed composites, validity,
    // and componentwise invertibility.
    let mut violations = Vec::new();
    let id_on_id_b = identity_transformation(&id_b)?;
    let id_on_gf = identity_transformation(&gf)?;
    let id_on_fg = identity_transformation(&fg)?;
    let id_on_id_c = identity_transformation(&id_c)?;
    let eta_then_inv = compose_transformations(&cert.eta_inv, &cert.eta)?;
    let inv_then_eta = compose_transformations(&cert.eta, &cert.eta_inv)?;
    let eps_then_inv = compose_transformations(&cert.eps_inv, &cert.eps)?;
    let inv_then_eps = compose_transformations(&cert.eps, &cert.eps_inv)?;
    let mod_expect: [(&str, &Modification, &LaxTransformation, &LaxTransformation); 4] = [
        ("eta_unit", &cert.eta_unit, &id_on_id_b, &eta_then_inv),
        ("eta_counit", &cert.eta_counit, &inv_then_eta, &id_on_gf),
        ("eps_unit", &cert.eps_unit, &id_on_fg, &eps_then_inv),
        ("eps_counit", &cert.eps_counit, &inv_then_eps, &id_on_id_c),
    ];
    for (name, m, want_src, want_tgt) in mod_expect {
        if &m.src != want_src || &m.tgt != want_tgt {
            violations.push(boundary_violation(name));
            continue;
        }
        let rep = validate_modification(m)?;
        report.absorb(rep.report);
        if !rep.invertible {
            violations.push(Violation::structural(
                AxiomTag::CertificateModificationInvertible,
                vec![CellId::new(name)],
            ));
        }
    }
    report.absorb(ValidationReport::from_violations(violations));

    // Forward direction of the local characterisation: a certified functor
    // is essentially surjective, essentially full, and fully faithful.
    report.absorb(check_es_ef_ff(f)?.to_report());

    Ok(report)
}
