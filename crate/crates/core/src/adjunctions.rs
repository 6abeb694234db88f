//! Internal adjunctions, triangle identities, mate calculus, and inversion of
//! strong transformations.

use std::collections::BTreeMap;

use crate::bicategory::FiniteBicategory;
use crate::calculus::{CalculusError, Evaluator, TwoCellExpr};
use crate::cell::CellId;
use crate::functors::{
    compose_transformations, identity_transformation, validate_lax_transformation,
    validate_modification, LaxTransformation, Modification,
};
use crate::report::{AxiomTag, MalformedInput, ValidationReport, Violation};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AdjunctionError {
    #[error("unknown cell {id}")]
    UnknownCell { id: CellId },
    #[error(transparent)]
    Calculus(#[from] CalculusError),
    #[error(transparent)]
    Malformed(#[from] MalformedInput),
    #[error(transparent)]
    Functor(#[from] crate::functors::FunctorError),
    #[error("no solution: {detail}")]
    NoSolution { detail: String },
    #[error("component at {cell} is not invertible")]
    NotInvertible { cell: CellId },
    #[error("construction postcondition failed at {stage}")]
    Postcondition { stage: String },
}

/// An internal adjunction candidate `(left, right, unit, counit)` with
/// `left: X -> Y`, `right: Y -> X`, `unit: 1_X => right . left`, and
/// `counit: left . right => 1_Y`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Adjunction {
    pub left: CellId,
    pub right: CellId,
    pub unit: CellId,
    pub counit: CellId,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjunctionReport {
    pub report: ValidationReport,
    /// Both triangles hold and the unit and counit are invertible.
    pub adjoint_equivalence: bool,
}

fn triangle_left(adj: &Adjunction) -> TwoCellExpr {
    // f 1_X => f (gf) => (fg) f => 1_Y f => f
    TwoCellExpr::chain([
        TwoCellExpr::whisker_left(adj.left.clone(), TwoCellExpr::cell(adj.unit.clone())),
        TwoCellExpr::assoc_inv(adj.left.clone(), adj.right.clone(), adj.left.clone()),
        TwoCellExpr::whisker_right(TwoCellExpr::cell(adj.counit.clone()), adj.left.clone()),
        TwoCellExpr::lunit(adj.left.clone()),
    ])
}

fn triangle_right(adj: &Adjunction) -> TwoCellExpr {
    // 1_X g => (gf) g => g (fg) => g 1_Y => g
    TwoCellExpr::chain([
        TwoCellExpr::whisker_right(TwoCellExpr::cell(adj.unit.clone()), adj.right.clone()),
        TwoCellExpr::assoc(adj.right.clone(), adj.left.clone(), adj.right.clone()),
        TwoCellExpr::whisker_left(adj.right.clone(), TwoCellExpr::cell(adj.counit.clone())),
        TwoCellExpr::runit(adj.right.clone()),
    ])
}

/// Check the two triangle identities for an adjunction candidate.
pub fn check_adjunction(
    b: &FiniteBicategory,
    adj: &Adjunction,
) -> Result<AdjunctionReport, AdjunctionError> {
    let ev = Evaluator::new(b)?;
    let witness = || {
        vec![
            adj.left.clone(),
            adj.right.clone(),
            adj.unit.clone(),
            adj.counit.clone(),
        ]
    };
    let mut violations = Vec::new();
    let lhs = ev.eval(&triangle_left(adj))?;
    let rhs = ev.eval(&TwoCellExpr::runit(adj.left.clone()))?;
    if lhs != rhs {
        violations.push(Violation::unequal(AxiomTag::TriangleLeft, witness(), lhs, rhs));
    }
    let lhs = ev.eval(&triangle_right(adj))?;
    let rhs = ev.eval(&TwoCellExpr::lunit(adj.right.clone()))?;
    if lhs != rhs {
        violations.push(Violation::unequal(AxiomTag::TriangleRight, witness(), lhs, rhs));
    }
    let report = ValidationReport::from_violations(violations);
    let adjoint_equivalence = report.passed()
        && b.is_invertible_two_cell(&adj.unit)
        && b.is_invertible_two_cell(&adj.counit);
    Ok(AdjunctionReport {
        report,
        adjoint_equivalence,
    })
}

/// The identity adjunction on an object: `(1_X, 1_X, l_inv, l)` at `1_X`.
pub fn identity_adjunction(
    b: &FiniteBicategory,
    x: &CellId,
) -> Result<Adjunction, AdjunctionError> {
    let id = b
        .id1
        .get(x)
        .ok_or_else(|| AdjunctionError::UnknownCell { id: x.clone() })?;
    let unit = b
        .lunit_inv
        .get(id)
        .ok_or_else(|| MalformedInput::new(format!("lunit_inv[{id}]"), "missing entry"))?;
    let counit = b
        .lunit
        .get(id)
        .ok_or_else(|| MalformedInput::new(format!("lunit[{id}]"), "missing entry"))?;
    Ok(Adjunction {
        left: id.clone(),
        right: id.clone(),
        unit: unit.clone(),
        counit: counit.clone(),
    })
}

fn h1(b: &FiniteBicategory, g: &CellId, f: &CellId) -> Result<CellId, AdjunctionError> {
    b.horizontal1(g, f)
        .cloned()
        .ok_or_else(|| MalformedInput::new(format!("hcomp1[({g}, {f})]"), "missing entry").into())
}

/// The mate of `omega: f1 . a => b . f0` along a pair of adjunctions, with
/// boundary `a . g0 => g1 . b`.
///
/// Fixed evaluation chain: insert the unit of the second adjunction, move
/// brackets to `g1 ((f1 a) g0)`, apply `omega` inside, move brackets to
/// `g1 (b (f0 g0))`, cancel with the counit of the first adjunction.
pub fn mate_right(
    b: &FiniteBicategory,
    adj0: &Adjunction,
    adj1: &Adjunction,
    a: &CellId,
    b_cell: &CellId,
    omega: &CellId,
) -> Result<CellId, AdjunctionError> {
    let ev = Evaluator::new(b)?;
    let ag0 = h1(b, a, &adj0.right)?;
    let wl = |e| TwoCellExpr::whisker_left(adj1.right.clone(), e);
    let expr = TwoCellExpr::chain([
        TwoCellExpr::lunit_inv(ag0.clone()),
        TwoCellExpr::whisker_right(TwoCellExpr::cell(adj1.unit.clone()), ag0),
        TwoCellExpr::assoc(adj1.right.clone(), adj1.left.clone(), h1(b, a, &adj0.right)?),
        wl(TwoCellExpr::assoc_inv(
            adj1.left.clone(),
            a.clone(),
            adj0.right.clone(),
        )),
        wl(TwoCellExpr::whisker_right(
            TwoCellExpr::cell(omega.clone()),
            adj0.right.clone(),
        )),
        wl(TwoCellExpr::assoc(
            b_cell.clone(),
            adj0.left.clone(),
            adj0.right.clone(),
        )),
        wl(TwoCellExpr::whisker_left(
            b_cell.clone(),
            TwoCellExpr::cell(adj0.counit.clone()),
        )),
        wl(TwoCellExpr::runit(b_cell.clone())),
    ]);
    Ok(ev.eval(&expr)?)
}

/// The mate of `nu: a . g0 => g1 . b` along a pair of adjunctions, with
/// boundary `f1 . a => b . f0`. Symmetric to [`mate_right`]: insert the unit
/// of the first adjunction on the right, apply `nu` inside, cancel with the
/// counit of the second adjunction on the left.
pub fn mate_left(
    b: &FiniteBicategory,
    adj0: &Adjunction,
    adj1: &Adjunction,
    a: &CellId,
    b_cell: &CellId,
    nu: &CellId,
) -> Result<CellId, AdjunctionError> {
    let ev = Evaluator::new(b)?;
    let f1a = h1(b, &adj1.left, a)?;
    let wr = |e| TwoCellExpr::whisker_right(e, adj0.left.clone());
    let expr = TwoCellExpr::chain([
        TwoCellExpr::runit_inv(f1a.clone()),
        TwoCellExpr::whisker_left(f1a.clone(), TwoCellExpr::cell(adj0.unit.clone())),
        TwoCellExpr::assoc_inv(f1a, adj0.right.clone(), adj0.left.clone()),
        wr(TwoCellExpr::assoc(
            adj1.left.clone(),
            a.clone(),
            adj0.right.clone(),
        )),
        wr(TwoCellExpr::whisker_left(
            adj1.left.clone(),
            TwoCellExpr::cell(nu.clone()),
        )),
        wr(TwoCellExpr::assoc_inv(
            adj1.left.clone(),
            adj1.right.clone(),
            b_cell.clone(),
        )),
        wr(TwoCellExpr::whisker_right(
            TwoCellExpr::cell(adj1.counit.clone()),
            b_cell.clone(),
        )),
        wr(TwoCellExpr::lunit(b_cell.clone())),
    ]);
    Ok(ev.eval(&expr)?)
}

/// Transpose a 2-cell `theta: left . s => t` along an adjunction into
/// `s => right . t`: insert the unit, rebracket, apply `theta` inside. For an
/// adjoint equivalence this preserves and reflects invertibility.
pub fn adjoint_transpose(
    b: &FiniteBicategory,
    adj: &Adjunction,
    s: &CellId,
    theta: &CellId,
) -> Result<CellId, AdjunctionError> {
    let ev = Evaluator::new(b)?;
    let expr = TwoCellExpr::chain([
        TwoCellExpr::lunit_inv(s.clone()),
        TwoCellExpr::whisker_right(TwoCellExpr::cell(adj.unit.clone()), s.clone()),
        TwoCellExpr::assoc(adj.right.clone(), adj.left.clone(), s.clone()),
        TwoCellExpr::whisker_left(adj.right.clone(), TwoCellExpr::cell(theta.clone())),
    ]);
    Ok(ev.eval(&expr)?)
}

/// Flip an adjoint equivalence `(f, g, unit, counit)` into the adjunction
/// `(g, f, counit_inv, unit_inv)` exhibiting `g` as the left adjoint.
pub fn flip_adjoint_equivalence(
    b: &FiniteBicategory,
    adj: &Adjunction,
) -> Result<Adjunction, AdjunctionError> {
    let unit_inv = b
        .inverse_two_cell(&adj.unit)
        .ok_or_else(|| AdjunctionError::NotInvertible {
            cell: adj.unit.clone(),
        })?;
    let counit_inv =
        b.inverse_two_cell(&adj.counit)
            .ok_or_else(|| AdjunctionError::NotInvertible {
                cell: adj.counit.clone(),
            })?;
    Ok(Adjunction {
        left: adj.right.clone(),
        right: adj.left.clone(),
        unit: counit_inv,
        counit: unit_inv,
    })
}

/// All 1-cells `f: x -> y` that are equivalences: some `g` admits
/// isomorphisms `g . f ~ 1_x` and `1_y ~ f . g`. Canonical order.
pub fn find_equivalences(
    b: &FiniteBicategory,
    x: &CellId,
    y: &CellId,
) -> Result<Vec<CellId>, AdjunctionError> {
    if !b.objects.contains(x) {
        return Err(AdjunctionError::UnknownCell { id: x.clone() });
    }
    if !b.objects.contains(y) {
        return Err(AdjunctionError::UnknownCell { id: y.clone() });
    }
    let id_x = b
        .id1
        .get(x)
        .ok_or_else(|| MalformedInput::new(format!("id1[{x}]"), "missing entry"))?;
    let id_y = b
        .id1
        .get(y)
        .ok_or_else(|| MalformedInput::new(format!("id1[{y}]"), "missing entry"))?;
    let forward: Vec<CellId> = match b.hom(x, y) {
        Some(h) => h.one_cells.iter().cloned().collect(),
        None => return Ok(Vec::new()),
    };
    let backward: Vec<CellId> = match b.hom(y, x) {
        Some(h) => h.one_cells.iter().cloned().collect(),
        None => return Ok(Vec::new()),
    };
    let mut out = Vec::new();
    'next: for f in forward {
        for g in &backward {
            let gf = match b.horizontal1(g, &f) {
                Some(c) => c,
                None => continue,
            };
            let fg = match b.horizontal1(&f, g) {
                Some(c) => c,
                None => continue,
            };
            let iso_to_unit = b
                .two_cells_between(gf, id_x)
                .iter()
                .any(|c| b.is_invertible_two_cell(c));
            let iso_from_unit = b
                .two_cells_between(id_y, fg)
                .iter()
                .any(|c| b.is_invertible_two_cell(c));
            if iso_to_unit && iso_from_unit {
                out.push(f);
                continue 'next;
            }
        }
    }
    Ok(out)
}

/// Promote an equivalence to an adjoint equivalence: keep `f` and `g`, take
/// `unit := iso1_inv`, and search for a counit satisfying both triangles.
/// `iso1: g . f => 1_x` and `iso2: 1_y => f . g` must be isomorphisms.
pub fn promote_to_adjoint_equivalence(
    b: &FiniteBicategory,
    f: &CellId,
    g: &CellId,
    iso1: &CellId,
    iso2: &CellId,
) -> Result<Adjunction, AdjunctionError> {
    for c in [iso1, iso2] {
        if !b.is_invertible_two_cell(c) {
            return Err(AdjunctionError::NoSolution {
                detail: format!("argument 2-cell {c} is not an isomorphism"),
            });
        }
    }
    let unit = b
        .inverse_two_cell(iso1)
        .ok_or_else(|| AdjunctionError::NotInvertible { cell: iso1.clone() })?;
    let (_, y) = b
        .one_cell_boundary(f)
        .ok_or_else(|| AdjunctionError::UnknownCell { id: f.clone() })?;
    let id_y = b
        .id1
        .get(y)
        .ok_or_else(|| MalformedInput::new(format!("id1[{y}]"), "missing entry"))?
        .clone();
    let fg = b
        .horizontal1(f, g)
        .ok_or_else(|| MalformedInput::new(format!("hcomp1[({f}, {g})]"), "missing entry"))?
        .clone();
    // Exhaustive search over iso 2-cells fg => 1_y, canonical-least first.
    for counit in b.two_cells_between(&fg, &id_y) {
        if !b.is_invertible_two_cell(&counit) {
            continue;
        }
        let candidate = Adjunction {
            left: f.clone(),
            right: g.clone(),
            unit: unit.clone(),
            counit,
        };
        if check_adjunction(b, &candidate)?.report.passed() {
            return Ok(candidate);
        }
    }
    Err(AdjunctionError::NoSolution {
        detail: format!("no counit makes ({f}, {g}) an adjoint equivalence"),
    })
}

/// Canonical adjoint equivalence on an invertible 1-cell: the least adjoint
/// inverse with the least witnessing isomorphisms, promoted through the
/// triangle search.
pub fn canonical_adjoint_equivalence(
    b: &FiniteBicategory,
    f: &CellId,
) -> Result<Adjunction, AdjunctionError> {
    let (x, y) = b
        .one_cell_boundary(f)
        .map(|(s, t)| (s.clone(), t.clone()))
        .ok_or_else(|| AdjunctionError::UnknownCell { id: f.clone() })?;
    let id_x = b
        .id1
        .get(&x)
        .ok_or_else(|| MalformedInput::new(format!("id1[{x}]"), "missing entry"))?
        .clone();
    let id_y = b
        .id1
        .get(&y)
        .ok_or_else(|| MalformedInput::new(format!("id1[{y}]"), "missing entry"))?
        .clone();
    let backward: Vec<CellId> = match b.hom(&y, &x) {
        Some(h) => h.one_cells.iter().cloned().collect(),
        None => Vec::new(),
    };
    for g in backward {
        let gf = match b.horizontal1(&g, f) {
            Some(c) => c.clone(),
            None => continue,
        };
        let fg = match b.horizontal1(f, &g) {
            Some(c) => c.clone(),
            None => continue,
        };
        let iso1 = b
            .two_cells_between(&gf, &id_x)
            .into_iter()
            .find(|c| b.is_invertible_two_cell(c));
        let iso2 = b
            .two_cells_between(&id_y, &fg)
            .into_iter()
            .find(|c| b.is_invertible_two_cell(c));
        if let (Some(iso1), Some(iso2)) = (iso1, iso2) {
            return promote_to_adjoint_equivalence(b, f, &g, &iso1, &iso2);
        }
    }
    Err(AdjunctionError::NotInvertible { cell: f.clone() })
}

/// The inverse of a strong transformation with invertible components,
/// together with the witnessing unit and counit modifications.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvertedTransformation {
    pub inverse: LaxTransformation,
    /// `1_F => inverse . original`, componentwise the promoted units.
    pub unit: Modification,
    /// `original . inverse => 1_G`, componentwise the promoted counits.
    pub counit: Modification,
    pub component_adjunctions: BTreeMap<CellId, Adjunction>,
}

/// Invert a strong transformation whose 1-cell components are equivalences.
///
/// Components are promoted to canonical adjoint equivalences; the inverse's
/// naturality 2-cells are the componentwise mates of the inverted originals.
/// All three outputs are re-validated before returning.
pub fn invert_strong_transformation(
    t: &LaxTransformation,
) -> Result<InvertedTransformation, AdjunctionError> {
    let amb = &t.src.tgt;
    let rep = validate_lax_transformation(t)?;
    if !rep.report.passed() {
        return Err(AdjunctionError::Postcondition {
            stage: "input transformation fails validation".into(),
        });
    }
    if !rep.strong {
        let bad = t
            .comp2
            .iter()
            .find(|(_, c)| !amb.is_invertible_two_cell(c))
            .map(|(f, _)| f.clone())
            .unwrap_or_else(|| CellId::new("comp2"));
        return Err(AdjunctionError::NotInvertible { cell: bad });
    }

    let mut component_adjunctions = BTreeMap::new();
    for (x, a) in &t.comp1 {
        let adj = canonical_adjoint_equivalence(amb, a).map_err(|e| match e {
            AdjunctionError::NotInvertible { .. } => {
                AdjunctionError::NotInvertible { cell: x.clone() }
            }
            other => other,
        })?;
        component_adjunctions.insert(x.clone(), adj);
    }

    let f = &t.src;
    let g = &t.tgt;
    let mut comp1 = BTreeMap::new();
    for (x, adj) in &component_adjunctions {
        comp1.insert(x.clone(), adj.right.clone());
    }
    let mut comp2 = BTreeMap::new();
    for hom in f.src.homs.values() {
        for p in &hom.one_cells {
            let (x, y) = f
                .src
                .one_cell_boundary(p)
                .map(|(s, tt)| (s.clone(), tt.clone()))
                .ok_or_else(|| AdjunctionError::UnknownCell { id: p.clone() })?;
            let omega = amb
                .inverse_two_cell(t.comp2_at(p)?)
                .ok_or_else(|| AdjunctionError::NotInvertible { cell: p.clone() })?;
            let mate = mate_right(
                amb,
                &component_adjunctions[&x],
                &component_adjunctions[&y],
                f.on_one(p)?,
                g.on_one(p)?,
                &omega,
            )?;
            comp2.insert(p.clone(), mate);
        }
    }
    let inverse = LaxTransformation {
        src: g.clone(),
        tgt: f.clone(),
        comp1,
        comp2,
    };

    let unit = Modification {
        src: identity_transformation(f)?,
        tgt: compose_transformations(&inverse, t)?,
        comp: component_adjunctions
            .iter()
            .map(|(x, adj)| (x.clone(), adj.unit.clone()))
            .collect(),
    };
    let counit = Modification {
        src: compose_transformations(t, &inverse)?,
        tgt: identity_transformation(g)?,
        comp: component_adjunctions
            .iter()
            .map(|(x, adj)| (x.clone(), adj.counit.clone()))
            .collect(),
    };

    let inv_rep = validate_lax_transformation(&inverse)?;
    if !inv_rep.report.passed() || !inv_rep.strong {
        return Err(AdjunctionError::Postcondition {
            stage: "inverse transformation".into(),
        });
    }
    for (name, m) in [("unit modification", &unit), ("counit modification", &counit)] {
        let mr = validate_modification(m)?;
        if !mr.report.passed() || !mr.invertible {
            return Err(AdjunctionError::Postcondition { stage: name.into() });
        }
    }
    Ok(InvertedTransformation {
        inverse,
        unit,
        counit,
        component_adjunctions,
    })
}
