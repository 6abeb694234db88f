//! The lax slice bicategory of a lax functor over an object, and the
//! change-of-slice strict functor induced by postcomposition.

use std::collections::BTreeMap;

use crate::bicategory::{FiniteBicategory, HomCategory};
use crate::calculus::{CalculusError, Evaluator, TwoCellExpr};
use crate::cell::CellId;
use crate::functors::LaxFunctor;
use crate::report::MalformedInput;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SliceError {
    #[error("unknown cell {id}")]
    UnknownCell { id: CellId },
    #[error(transparent)]
    Calculus(#[from] CalculusError),
    #[error(transparent)]
    Malformed(#[from] MalformedInput),
    #[error("slice construction invariant failed at {site}: {detail}")]
    Internal { site: String, detail: String },
}

fn internal(site: impl Into<String>, detail: impl Into<String>) -> SliceError {
    SliceError::Internal {
        site: site.into(),
        detail: detail.into(),
    }
}

/// Bidirectional maps between slice cell ids and their constituent cells.
///
/// A slice object is a pair `(A, f_A)`; a slice 1-cell is a pair
/// `(p, theta)` living over an ordered pair of slice objects; a slice 2-cell
/// is a base 2-cell `alpha` satisfying the cone condition for its source and
/// target slice 1-cells.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SliceCellTag {
    pub objects: BTreeMap<CellId, (CellId, CellId)>,
    pub one_cells: BTreeMap<CellId, (CellId, CellId)>,
    pub two_cells: BTreeMap<CellId, CellId>,
    pub objects_rev: BTreeMap<(CellId, CellId), CellId>,
    /// `(source slice object, target slice object, p, theta) -> slice 1-cell`.
    pub one_rev: BTreeMap<(CellId, CellId, CellId, CellId), CellId>,
    /// `(source slice 1-cell, target slice 1-cell, alpha) -> slice 2-cell`.
    pub two_rev: BTreeMap<(CellId, CellId, CellId), CellId>,
}

/// A lax slice bicategory together with its tag maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaxSlice {
    pub bicategory: FiniteBicategory,
    pub tags: SliceCellTag,
    /// The object of the target bicategory the slice sits over.
    pub base_object: CellId,
}

impl LaxSlice {
    pub fn object_parts(&self, id: &CellId) -> Result<&(CellId, CellId), SliceError> {
        self.tags
            .objects
            .get(id)
            .ok_or_else(|| SliceError::UnknownCell { id: id.clone() })
    }

    pub fn one_parts(&self, id: &CellId) -> Result<&(CellId, CellId), SliceError> {
        self.tags
            .one_cells
            .get(id)
            .ok_or_else(|| SliceError::UnknownCell { id: id.clone() })
    }

    pub fn two_part(&self, id: &CellId) -> Result<&CellId, SliceError> {
        self.tags
            .two_cells
            .get(id)
            .ok_or_else(|| SliceError::UnknownCell { id: id.clone() })
    }
}

// Slice ids are deterministic encodings of their constituent ids. The
// separator is ';' so hom keys of the serialized form, which join object
// names with '|', stay parseable.
fn obj_id(a: &CellId, f: &CellId) -> CellId {
    format!("[{a};{f}]").into()
}

fn one_id(p: &CellId, theta: &CellId, tip: &CellId) -> CellId {
    format!("[{p};{theta};{tip}]").into()
}

fn two_id(alpha: &CellId, src: &CellId, tgt: &CellId) -> CellId {
    format!("[{alpha};{src};{tgt}]").into()
}

/// The ice cream cone condition: `(1_tip * phi) . theta0 = theta1`, where
/// `theta_i: f0 => tip . h_i` and `phi: h0 => h1`.
pub fn cone_check(
    c: &FiniteBicategory,
    tip: &CellId,
    theta0: &CellId,
    theta1: &CellId,
    phi: &CellId,
) -> Result<bool, SliceError> {
    let ev = Evaluator::new(c)?;
    cone_check_with(&ev, tip, theta0, theta1, phi)
}

fn cone_check_with(
    ev: &Evaluator<'_>,
    tip: &CellId,
    theta0: &CellId,
    theta1: &CellId,
    phi: &CellId,
) -> Result<bool, SliceError> {
    let expr = TwoCellExpr::vcomp(
        TwoCellExpr::whisker_left(tip.clone(), TwoCellExpr::cell(phi.clone())),
        TwoCellExpr::cell(theta0.clone()),
    );
    let (_, lhs_tgt) = ev.boundary(&expr)?;
    let (theta1_src, theta1_tgt) = ev.boundary(&TwoCellExpr::cell(theta1.clone()))?;
    let (theta0_src, _) = ev.boundary(&TwoCellExpr::cell(theta0.clone()))?;
    if theta0_src != theta1_src || lhs_tgt != theta1_tgt {
        return Err(SliceError::Calculus(CalculusError::IllTyped {
            expr: expr.to_string(),
            detail: format!("cone boundaries do not match {theta1}"),
        }));
    }
    Ok(ev.eval(&expr)? == *theta1)
}

/// Build the lax slice bicategory of a validated lax functor over an object
/// of its target. Objects, 1-cells, and 2-cells are enumerated exhaustively;
/// all structure tables are filled through the tag maps.
pub fn lax_slice(fun: &LaxFunctor, x: &CellId) -> Result<LaxSlice, SliceError> {
    let b = &fun.src;
    let c = &fun.tgt;
    if !c.objects.contains(x) {
        return Err(SliceError::UnknownCell { id: x.clone() });
    }
    let ev = Evaluator::new(c)?;

    let mut tags = SliceCellTag::default();
    let mut out = FiniteBicategory::default();

    // Objects: (A, f_A: FA -> x).
    for a in &b.objects {
        let fa_obj = fun.on_obj(a)?;
        if let Some(hom) = c.hom(fa_obj, x) {
            for f in &hom.one_cells {
                let id = obj_id(a, f);
                if tags
                    .objects
                    .insert(id.clone(), (a.clone(), f.clone()))
                    .is_some()
                {
                    return Err(internal(format!("object {id}"), "id collision"));
                }
                tags.objects_rev.insert((a.clone(), f.clone()), id.clone());
                out.objects.insert(id);
            }
        }
    }

    // 1-cells: (p, theta: f0 => f1 . Fp), per ordered pair of slice objects.
    for (o0, (a0, f0)) in tags.objects.clone() {
        for (o1, (a1, f1)) in tags.objects.clone() {
            let mut hom = HomCategory::default();
            if let Some(base_hom) = b.hom(&a0, &a1) {
                for p in &base_hom.one_cells {
                    let fp = fun.on_one(p)?;
                    let composite = c.horizontal1(&f1, fp).cloned().ok_or_else(|| {
                        MalformedInput::new(format!("hcomp1[({f1}, {fp})]"), "missing entry")
                    })?;
                    for theta in c.two_cells_between(&f0, &composite) {
                        let id = one_id(p, &theta, &f1);
                        if tags
                            .one_cells
                            .insert(id.clone(), (p.clone(), theta.clone()))
                            .is_some()
                        {
                            return Err(internal(format!("1-cell {id}"), "id collision"));
                        }
                        tags.one_rev.insert(
                            (o0.clone(), o1.clone(), p.clone(), theta.clone()),
                            id.clone(),
                        );
                        hom.one_cells.insert(id);
                    }
                }
            }
            out.homs.insert((o0.clone(), o1.clone()), hom);
        }
    }

    // 2-cells: alpha: p0 => p1 in the base whose image satisfies the cone
    // condition for the two triangles.
    let one_rev = tags.one_rev.clone();
    for ((o0, o1, p0, theta0), s_id) in &one_rev {
        let (_, f1) = &tags.objects[o1];
        for ((q0, q1, p1, theta1), t_id) in &one_rev {
            if q0 != o0 || q1 != o1 {
                continue;
            }
            for alpha in b.two_cells_between(p0, p1) {
                let f_alpha = fun.on_two(&alpha)?;
                if cone_check_with(&ev, f1, theta0, theta1, f_alpha)? {
                    let id = two_id(&alpha, s_id, t_id);
                    if tags.two_cells.insert(id.clone(), alpha.clone()).is_some() {
                        return Err(internal(format!("2-cell {id}"), "id collision"));
                    }
                    tags.two_rev
                        .insert((s_id.clone(), t_id.clone(), alpha.clone()), id.clone());
                    let hom = out
                        .homs
                        .get_mut(&(o0.clone(), o1.clone()))
                        .expect("hom created above");
                    hom.two_cells.insert(id, (s_id.clone(), t_id.clone()));
                }
            }
        }
    }

    // Identity 1-cells: (1_A, r') with r' = (1_{f_A} * F0) . r_inv.
    for (o, (a, f)) in tags.objects.clone() {
        let id_a = b
            .id1
            .get(&a)
            .cloned()
            .ok_or_else(|| MalformedInput::new(format!("id1[{a}]"), "missing entry"))?;
        let r_prime = ev.eval(&TwoCellExpr::vcomp(
            TwoCellExpr::whisker_left(f.clone(), TwoCellExpr::cell(fun.f0_at(&a)?.clone())),
            TwoCellExpr::runit_inv(f.clone()),
        ))?;
        let id_cell = tags
            .one_rev
            .get(&(o.clone(), o.clone(), id_a, r_prime))
            .ok_or_else(|| {
                internal(
                    format!("identity 1-cell of {o}"),
                    "unit triangle was not enumerated",
                )
            })?;
        out.id1.insert(o.clone(), id_cell.clone());
    }

    // Identity 2-cells and vertical composition, per hom.
    let tag_one = tags.one_cells.clone();
    let tag_two = tags.two_cells.clone();
    let two_rev = tags.two_rev.clone();
    for hom in out.homs.values_mut() {
        let mut id2 = BTreeMap::new();
        for s_id in &hom.one_cells {
            let (p, _) = &tag_one[s_id];
            let base_id2 = b
                .id2_of(p)
                .cloned()
                .ok_or_else(|| MalformedInput::new(format!("id2[{p}]"), "missing entry"))?;
            let cell = two_rev
                .get(&(s_id.clone(), s_id.clone(), base_id2))
                .ok_or_else(|| {
                    internal(
                        format!("id2 of slice 1-cell {s_id}"),
                        "identity 2-cell fails the cone condition",
                    )
                })?;
            id2.insert(s_id.clone(), cell.clone());
        }
        hom.id2 = id2;
        let mut vcomp = BTreeMap::new();
        for (t2, (t2s, t2t)) in &hom.two_cells {
            for (t1, (t1s, t1t)) in &hom.two_cells {
                if t1t != t2s {
                    continue;
                }
                let a2 = &tag_two[t2];
                let a1 = &tag_two[t1];
                let composite = b.vertical(a2, a1).cloned().ok_or_else(|| {
                    MalformedInput::new(format!("vcomp[({a2}, {a1})]"), "missing entry")
                })?;
                let cell = two_rev
                    .get(&(t1s.clone(), t2t.clone(), composite))
                    .ok_or_else(|| {
                        internal(
                            format!("vcomp of slice 2-cells ({t2}, {t1})"),
                            "composite fails the cone condition",
                        )
                    })?;
                vcomp.insert((t2.clone(), t1.clone()), cell.clone());
            }
        }
        hom.vcomp = vcomp;
    }

    // Boundaries of slice 1-cells, for enumerating composites.
    let mut one_bound: BTreeMap<CellId, (CellId, CellId)> = BTreeMap::new();
    for ((s, t, _, _), v) in &tags.one_rev {
        one_bound.insert(v.clone(), (s.clone(), t.clone()));
    }

    // Horizontal composition of 1-cells: (p1 p0, theta') with
    // theta' = (1_{f2} * F2_{p1,p0}) . a . (theta1 * 1_{Fp0}) . theta0.
    for (s1, (s1s, s1t)) in &one_bound {
        for (s0, (s0s, s0t)) in &one_bound {
            if s0t != s1s {
                continue;
            }
            let (p1, theta1) = &tags.one_cells[s1];
            let (p0, theta0) = &tags.one_cells[s0];
            let (_, f2_tip) = &tags.objects[s1t];
            let p10 = b.horizontal1(p1, p0).cloned().ok_or_else(|| {
                MalformedInput::new(format!("hcomp1[({p1}, {p0})]"), "missing entry")
            })?;
            let fp0 = fun.on_one(p0)?;
            let fp1 = fun.on_one(p1)?;
            let theta = ev.eval(&TwoCellExpr::chain([
                TwoCellExpr::cell(theta0.clone()),
                TwoCellExpr::whisker_right(TwoCellExpr::cell(theta1.clone()), fp0.clone()),
                TwoCellExpr::assoc(f2_tip.clone(), fp1.clone(), fp0.clone()),
                TwoCellExpr::whisker_left(
                    f2_tip.clone(),
                    TwoCellExpr::cell(fun.f2_at(p1, p0)?.clone()),
                ),
            ]))?;
            let cell = tags
                .one_rev
                .get(&(s0s.clone(), s1t.clone(), p10, theta))
                .ok_or_else(|| {
                    internal(
                        format!("hcomp1 of slice 1-cells ({s1}, {s0})"),
                        "composite triangle was not enumerated",
                    )
                })?;
            out.hcomp1.insert((s1.clone(), s0.clone()), cell.clone());
        }
    }

    // Horizontal composition of 2-cells: inherited from the base.
    let two_entries: Vec<(CellId, CellId, CellId, CellId, CellId)> = out
        .homs
        .iter()
        .flat_map(|((o0, o1), hom)| {
            hom.two_cells.iter().map(move |(id, (s, t))| {
                (id.clone(), s.clone(), t.clone(), o0.clone(), o1.clone())
            })
        })
        .collect();
    for (t2, t2s, t2t, m0, _) in &two_entries {
        for (t1, t1s, t1t, _, o1) in &two_entries {
            if o1 != m0 {
                continue;
            }
            let a2 = &tags.two_cells[t2];
            let a1 = &tags.two_cells[t1];
            let composite = b.horizontal2(a2, a1).cloned().ok_or_else(|| {
                MalformedInput::new(format!("hcomp2[({a2}, {a1})]"), "missing entry")
            })?;
            let src = out
                .hcomp1
                .get(&(t2s.clone(), t1s.clone()))
                .ok_or_else(|| internal("slice hcomp2", "missing source composite"))?;
            let tgt = out
                .hcomp1
                .get(&(t2t.clone(), t1t.clone()))
                .ok_or_else(|| internal("slice hcomp2", "missing target composite"))?;
            let cell = tags
                .two_rev
                .get(&(src.clone(), tgt.clone(), composite))
                .ok_or_else(|| {
                    internal(
                        format!("hcomp2 of slice 2-cells ({t2}, {t1})"),
                        "composite fails the cone condition",
                    )
                })?;
            out.hcomp2.insert((t2.clone(), t1.clone()), cell.clone());
        }
    }

    // Associators: inherited components.
    let mut triples = Vec::new();
    for (s2, (s2s, _)) in &one_bound {
        for (s1, (s1s, s1t)) in &one_bound {
            if s1t != s2s {
                continue;
            }
            for (s0, (_, s0t)) in &one_bound {
                if s0t == s1s {
                    triples.push((s2.clone(), s1.clone(), s0.clone()));
                }
            }
        }
    }
    for (s2, s1, s0) in &triples {
        let p2 = &tags.one_cells[s2].0;
        let p1 = &tags.one_cells[s1].0;
        let p0 = &tags.one_cells[s0].0;
        let left = out.hcomp1[&(out.hcomp1[&(s2.clone(), s1.clone())].clone(), s0.clone())].clone();
        let right =
            out.hcomp1[&(s2.clone(), out.hcomp1[&(s1.clone(), s0.clone())].clone())].clone();
        let base = b
            .assoc
            .get(&(p2.clone(), p1.clone(), p0.clone()))
            .cloned()
            .ok_or_else(|| {
                MalformedInput::new(format!("assoc[({p2}, {p1}, {p0})]"), "missing entry")
            })?;
        let base_inv = b
            .assoc_inv
            .get(&(p2.clone(), p1.clone(), p0.clone()))
            .cloned()
            .ok_or_else(|| {
                MalformedInput::new(format!("assoc_inv[({p2}, {p1}, {p0})]"), "missing entry")
            })?;
        let fwd = tags
            .two_rev
            .get(&(left.clone(), right.clone(), base))
            .ok_or_else(|| {
                internal(
                    format!("slice assoc at ({s2}, {s1}, {s0})"),
                    "associator fails the cone condition",
                )
            })?;
        let bwd = tags
            .two_rev
            .get(&(right, left, base_inv))
            .ok_or_else(|| {
                internal(
                    format!("slice assoc_inv at ({s2}, {s1}, {s0})"),
                    "inverse associator fails the cone condition",
                )
            })?;
        out.assoc
            .insert((s2.clone(), s1.clone(), s0.clone()), fwd.clone());
        out.assoc_inv
            .insert((s2.clone(), s1.clone(), s0.clone()), bwd.clone());
    }

    // Unitors: inherited components.
    for (s, (src_obj, tgt_obj)) in &one_bound {
        let p = &tags.one_cells[s].0;
        let l_src = out.hcomp1[&(out.id1[tgt_obj].clone(), s.clone())].clone();
        let r_src = out.hcomp1[&(s.clone(), out.id1[src_obj].clone())].clone();
        let base_l = b
            .lunit
            .get(p)
            .cloned()
            .ok_or_else(|| MalformedInput::new(format!("lunit[{p}]"), "missing entry"))?;
        let base_l_inv = b
            .lunit_inv
            .get(p)
            .cloned()
            .ok_or_else(|| MalformedInput::new(format!("lunit_inv[{p}]"), "missing entry"))?;
        let base_r = b
            .runit
            .get(p)
            .cloned()
            .ok_or_else(|| MalformedInput::new(format!("runit[{p}]"), "missing entry"))?;
        let base_r_inv = b
            .runit_inv
            .get(p)
            .cloned()
            .ok_or_else(|| MalformedInput::new(format!("runit_inv[{p}]"), "missing entry"))?;
        let lookups = [
            (l_src.clone(), s.clone(), base_l, "lunit"),
            (s.clone(), l_src, base_l_inv, "lunit_inv"),
            (r_src.clone(), s.clone(), base_r, "runit"),
            (s.clone(), r_src, base_r_inv, "runit_inv"),
        ];
        for (from, to, base, which) in lookups {
            let cell = tags
                .two_rev
                .get(&(from, to, base))
                .ok_or_else(|| {
                    internal(
                        format!("slice {which} at {s}"),
                        "unitor fails the cone condition",
                    )
                })?
                .clone();
            match which {
                "lunit" => out.lunit.insert(s.clone(), cell),
                "lunit_inv" => out.lunit_inv.insert(s.clone(), cell),
                "runit" => out.runit.insert(s.clone(), cell),
                _ => out.runit_inv.insert(s.clone(), cell),
            };
        }
    }

    Ok(LaxSlice {
        bicategory: out,
        tags,
        base_object: x.clone(),
    })
}

/// A change-of-slice strict functor together with its source and target
/// slices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChangeOfSlice {
    pub functor: LaxFunctor,
    pub source: LaxSlice,
    pub target: LaxSlice,
}

/// The change-of-slice functor induced by a 1-cell `u: x -> y` of the
/// target: on objects `(A, f) -> (A, u f)`, on 1-cells
/// `(p, theta) -> (p, a_inv . (1_u * theta))`, identity on the underlying
/// 2-cells. The result is strict.
pub fn change_of_slice(fun: &LaxFunctor, u: &CellId) -> Result<ChangeOfSlice, SliceError> {
    let c = &fun.tgt;
    let (x, y) = c
        .one_cell_boundary(u)
        .map(|(s, t)| (s.clone(), t.clone()))
        .ok_or_else(|| SliceError::UnknownCell { id: u.clone() })?;
    let source = lax_slice(fun, &x)?;
    let target = lax_slice(fun, &y)?;
    let ev = Evaluator::new(c)?;

    let mut obj_map = BTreeMap::new();
    for (o, (a, f)) in &source.tags.objects {
        let uf = c
            .horizontal1(u, f)
            .cloned()
            .ok_or_else(|| MalformedInput::new(format!("hcomp1[({u}, {f})]"), "missing entry"))?;
        let image = target
            .tags
            .objects_rev
            .get(&(a.clone(), uf))
            .ok_or_else(|| internal(format!("image of object {o}"), "not in target slice"))?;
        obj_map.insert(o.clone(), image.clone());
    }

    let mut one_map = BTreeMap::new();
    for ((o0, o1, p, theta), s) in &source.tags.one_rev {
        let (_, f1) = &source.tags.objects[o1];
        let fp = fun.on_one(p)?;
        let mapped = ev.eval(&TwoCellExpr::vcomp(
            TwoCellExpr::assoc_inv(u.clone(), f1.clone(), fp.clone()),
            TwoCellExpr::whisker_left(u.clone(), TwoCellExpr::cell(theta.clone())),
        ))?;
        let image = target
            .tags
            .one_rev
            .get(&(obj_map[o0].clone(), obj_map[o1].clone(), p.clone(), mapped))
            .ok_or_else(|| internal(format!("image of 1-cell {s}"), "not in target slice"))?;
        one_map.insert(s.clone(), image.clone());
    }

    let mut two_map = BTreeMap::new();
    for ((s, t, alpha), cell) in &source.tags.two_rev {
        let image = target
            .tags
            .two_rev
            .get(&(one_map[s].clone(), one_map[t].clone(), alpha.clone()))
            .ok_or_else(|| {
                internal(
                    format!("image of 2-cell {cell}"),
                    "cone condition fails in the target slice",
                )
            })?;
        two_map.insert(cell.clone(), image.clone());
    }

    // Strictness: mapped composites agree with composites of images, so the
    // comparison cells are identities.
    let mut f2 = BTreeMap::new();
    for ((s1, s0), composite) in &source.bicategory.hcomp1 {
        let mapped = &one_map[composite];
        let direct = target
            .bicategory
            .horizontal1(&one_map[s1], &one_map[s0])
            .ok_or_else(|| internal("change-of-slice f2", "missing target composite"))?;
        if direct != mapped {
            return Err(internal(
                format!("change-of-slice f2 at ({s1}, {s0})"),
                "composite is not preserved on the nose",
            ));
        }
        let id = target
            .bicategory
            .id2_of(mapped)
            .ok_or_else(|| internal("change-of-slice f2", "missing identity 2-cell"))?;
        f2.insert((s1.clone(), s0.clone()), id.clone());
    }
    let mut f0 = BTreeMap::new();
    for (o, id_cell) in &source.bicategory.id1 {
        let mapped = &one_map[id_cell];
        let direct = &target.bicategory.id1[&obj_map[o]];
        if direct != mapped {
            return Err(internal(
                format!("change-of-slice f0 at {o}"),
                "identity 1-cell is not preserved on the nose",
            ));
        }
        let id = target
            .bicategory
            .id2_of(mapped)
            .ok_or_else(|| internal("change-of-slice f0", "missing identity 2-cell"))?;
        f0.insert(o.clone(), id.clone());
    }

    Ok(ChangeOfSlice {
        functor: LaxFunctor {
            src: source.bicategory.clone(),
            tgt: target.bicategory.clone(),
            obj_map,
            one_map,
            two_map,
            f2,
            f0,
        },
        source,
        target,
    })
}

/// The forgetful projection from a slice to the source bicategory:
/// `(A, f) -> A`, `(p, theta) -> p`, `(alpha) -> alpha`. Strict.
pub fn forgetful_functor(fun: &LaxFunctor, slice: &LaxSlice) -> Result<LaxFunctor, SliceError> {
    let b = &fun.src;
    let mut obj_map = BTreeMap::new();
    for (o, (a, _)) in &slice.tags.objects {
        obj_map.insert(o.clone(), a.clone());
    }
    let mut one_map = BTreeMap::new();
    for (s, (p, _)) in &slice.tags.one_cells {
        one_map.insert(s.clone(), p.clone());
    }
    let mut two_map = BTreeMap::new();
    for (t, alpha) in &slice.tags.two_cells {
        two_map.insert(t.clone(), alpha.clone());
    }
    let mut f2 = BTreeMap::new();
    for (s1, s0) in slice.bicategory.hcomp1.keys() {
        let p1 = &slice.tags.one_cells[s1].0;
        let p0 = &slice.tags.one_cells[s0].0;
        let composite = b
            .horizontal1(p1, p0)
            .ok_or_else(|| MalformedInput::new(format!("hcomp1[({p1}, {p0})]"), "missing"))?;
        let id = b
            .id2_of(composite)
            .ok_or_else(|| MalformedInput::new(format!("id2[{composite}]"), "missing"))?;
        f2.insert((s1.clone(), s0.clone()), id.clone());
    }
    let mut f0 = BTreeMap::new();
    for (o, (a, _)) in &slice.tags.objects {
        let id1 = b
            .id1
            .get(a)
            .ok_or_else(|| MalformedInput::new(format!("id1[{a}]"), "missing"))?;
        let id = b
            .id2_of(id1)
            .ok_or_else(|| MalformedInput::new(format!("id2[{id1}]"), "missing"))?;
        f0.insert(o.clone(), id.clone());
    }
    Ok(LaxFunctor {
        src: slice.bicategory.clone(),
        tgt: b.clone(),
        obj_map,
        one_map,
        two_map,
        f2,
        f0,
    })
}
