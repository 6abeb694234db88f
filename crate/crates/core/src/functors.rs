//! Lax functors, lax transformations, and modifications as table data, with
//! validators for each axiom set.

use std::collections::BTreeMap;
use std::fmt;

use crate::bicategory::{CellIndex, FiniteBicategory};
use crate::calculus::CalculusError;
use crate::cell::CellId;
use crate::report::{AxiomTag, MalformedInput, ValidationReport, Violation};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FunctorError {
    #[error("unknown cell {id}")]
    UnknownCell { id: CellId },
    #[error("functor mismatch: {detail}")]
    Mismatch { detail: String },
    #[error(transparent)]
    Malformed(#[from] MalformedInput),
    #[error(transparent)]
    Calculus(#[from] CalculusError),
}

/// A lax functor candidate between finite bicategories, with its comparison
/// tables `f2[(g, f)]: Fg . Ff => F(gf)` and `f0[X]: 1_FX => F(1_X)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaxFunctor {
    pub src: FiniteBicategory,
    pub tgt: FiniteBicategory,
    pub obj_map: BTreeMap<CellId, CellId>,
    pub one_map: BTreeMap<CellId, CellId>,
    pub two_map: BTreeMap<CellId, CellId>,
    pub f2: BTreeMap<(CellId, CellId), CellId>,
    pub f0: BTreeMap<CellId, CellId>,
}

impl LaxFunctor {
    pub fn on_obj(&self, x: &CellId) -> Result<&CellId, MalformedInput> {
        self.obj_map
            .get(x)
            .ok_or_else(|| MalformedInput::new(format!("obj_map[{x}]"), "missing entry"))
    }

    pub fn on_one(&self, f: &CellId) -> Result<&CellId, MalformedInput> {
        self.one_map
            .get(f)
            .ok_or_else(|| MalformedInput::new(format!("one_map[{f}]"), "missing entry"))
    }

    pub fn on_two(&self, a: &CellId) -> Result<&CellId, MalformedInput> {
        self.two_map
            .get(a)
            .ok_or_else(|| MalformedInput::new(format!("two_map[{a}]"), "missing entry"))
    }

    pub fn f2_at(&self, g: &CellId, f: &CellId) -> Result<&CellId, MalformedInput> {
        self.f2
            .get(&(g.clone(), f.clone()))
            .ok_or_else(|| MalformedInput::new(format!("f2[({g}, {f})]"), "missing entry"))
    }

    pub fn f0_at(&self, x: &CellId) -> Result<&CellId, MalformedInput> {
        self.f0
            .get(x)
            .ok_or_else(|| MalformedInput::new(format!("f0[{x}]"), "missing entry"))
    }
}

/// Computed classification flags. Every validated candidate is at least lax;
/// the flags record how much more structure the comparison cells carry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FunctorClassification {
    /// All `f0` components are isomorphisms.
    pub unitary: bool,
    /// All `f0` components are identities.
    pub strictly_unitary: bool,
    /// All `f2` and `f0` components are isomorphisms.
    pub pseudo: bool,
    /// All `f2` and `f0` components are identities.
    pub strict: bool,
}

impl fmt::Display for FunctorClassification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.strict {
            return f.write_str("strict");
        }
        let mut parts = vec!["lax"];
        if self.pseudo {
            parts = vec!["pseudo"];
        }
        if self.strictly_unitary {
            parts.push("strictly-unitary");
        } else if self.unitary {
            parts.push("unitary");
        }
        f.write_str(&parts.join(", "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctorReport {
    pub report: ValidationReport,
    pub classification: FunctorClassification,
}

struct Tables<'a> {
    b: &'a FiniteBicategory,
    idx: CellIndex,
}

impl<'a> Tables<'a> {
    fn new(b: &'a FiniteBicategory) -> Result<Self, MalformedInput> {
        Ok(Tables {
            b,
            idx: CellIndex::build(b)?,
        })
    }

    fn one_boundary(&self, f: &CellId) -> Result<(CellId, CellId), MalformedInput> {
        let (s, t) = self.idx.one_boundary(f)?;
        Ok((s.clone(), t.clone()))
    }

    fn two_boundary(&self, a: &CellId) -> Result<(CellId, CellId), MalformedInput> {
        let (s, t) = self.idx.two_boundary(a)?;
        Ok((s.clone(), t.clone()))
    }

    fn id1(&self, x: &CellId) -> Result<CellId, MalformedInput> {
        self.b
            .id1
            .get(x)
            .cloned()
            .ok_or_else(|| MalformedInput::new(format!("id1[{x}]"), "missing entry"))
    }

    fn id2(&self, f: &CellId) -> Result<CellId, MalformedInput> {
        self.b
            .id2_of(f)
            .cloned()
            .ok_or_else(|| MalformedInput::new(format!("id2[{f}]"), "missing entry"))
    }

    fn vc(&self, later: &CellId, earlier: &CellId) -> Result<CellId, MalformedInput> {
        self.b.vertical(later, earlier).cloned().ok_or_else(|| {
            MalformedInput::new(format!("vcomp[({later}, {earlier})]"), "missing entry")
        })
    }

    fn vc_chain(&self, steps: &[CellId]) -> Result<CellId, MalformedInput> {
        let mut acc = steps[0].clone();
        for s in &steps[1..] {
            acc = self.vc(s, &acc)?;
        }
        Ok(acc)
    }

    fn h1(&self, g: &CellId, f: &CellId) -> Result<CellId, MalformedInput> {
        self.b.horizontal1(g, f).cloned().ok_or_else(|| {
            MalformedInput::new(format!("hcomp1[({g}, {f})]"), "missing entry")
        })
    }

    fn h2(&self, beta: &CellId, alpha: &CellId) -> Result<CellId, MalformedInput> {
        self.b.horizontal2(beta, alpha).cloned().ok_or_else(|| {
            MalformedInput::new(format!("hcomp2[({beta}, {alpha})]"), "missing entry")
        })
    }

    fn assoc(&self, h: &CellId, g: &CellId, f: &CellId) -> Result<CellId, MalformedInput> {
        self.b
            .assoc
            .get(&(h.clone(), g.clone(), f.clone()))
            .cloned()
            .ok_or_else(|| MalformedInput::new(format!("assoc[({h}, {g}, {f})]"), "missing entry"))
    }

    fn assoc_inv(&self, h: &CellId, g: &CellId, f: &CellId) -> Result<CellId, MalformedInput> {
        self.b
            .assoc_inv
            .get(&(h.clone(), g.clone(), f.clone()))
            .cloned()
            .ok_or_else(|| {
                MalformedInput::new(format!("assoc_inv[({h}, {g}, {f})]"), "missing entry")
            })
    }

    fn lunit(&self, f: &CellId) -> Result<CellId, MalformedInput> {
        self.b
            .lunit
            .get(f)
            .cloned()
            .ok_or_else(|| MalformedInput::new(format!("lunit[{f}]"), "missing entry"))
    }

    fn runit(&self, f: &CellId) -> Result<CellId, MalformedInput> {
        self.b
            .runit
            .get(f)
            .cloned()
            .ok_or_else(|| MalformedInput::new(format!("runit[{f}]"), "missing entry"))
    }

    fn runit_inv(&self, f: &CellId) -> Result<CellId, MalformedInput> {
        self.b
            .runit_inv
            .get(f)
            .cloned()
            .ok_or_else(|| MalformedInput::new(format!("runit_inv[{f}]"), "missing entry"))
    }

    fn lunit_inv(&self, f: &CellId) -> Result<CellId, MalformedInput> {
        self.b
            .lunit_inv
            .get(f)
            .cloned()
            .ok_or_else(|| MalformedInput::new(format!("lunit_inv[{f}]"), "missing entry"))
    }
}

/// Validate a lax functor candidate: hom-functor laws, naturality of the
/// comparison cells, the lax associativity hexagon, and the two lax unity
/// squares. The computed classification accompanies the report.
pub fn validate_lax_functor(fun: &LaxFunctor) -> Result<FunctorReport, MalformedInput> {
    let src = Tables::new(&fun.src)?;
    let tgt = Tables::new(&fun.tgt)?;

    // Well-formedness of the maps.
    for x in &fun.src.objects {
        let fx = fun.on_obj(x)?;
        if !fun.tgt.objects.contains(fx) {
            return Err(MalformedInput::new(
                format!("obj_map[{x}]"),
                format!("dangling object id {fx}"),
            ));
        }
    }
    for x in fun.obj_map.keys() {
        if !fun.src.objects.contains(x) {
            return Err(MalformedInput::new(
                format!("obj_map[{x}]"),
                "key is not a source object",
            ));
        }
    }
    for (f, (x, y)) in &src.idx.one {
        let ff = fun.on_one(f)?;
        let (fs, ft) = tgt.one_boundary(ff).map_err(|_| {
            MalformedInput::new(format!("one_map[{f}]"), format!("dangling 1-cell id {ff}"))
        })?;
        if &fs != fun.on_obj(x)? || &ft != fun.on_obj(y)? {
            return Err(MalformedInput::new(
                format!("one_map[{f}]"),
                format!("boundary mismatch at image {ff}"),
            ));
        }
    }
    for f in fun.one_map.keys() {
        if !src.idx.one.contains_key(f) {
            return Err(MalformedInput::new(
                format!("one_map[{f}]"),
                "key is not a source 1-cell",
            ));
        }
    }
    for (a, (p, q)) in &src.idx.two {
        let fa = fun.on_two(a)?;
        let (fs, ft) = tgt.two_boundary(fa).map_err(|_| {
            MalformedInput::new(format!("two_map[{a}]"), format!("dangling 2-cell id {fa}"))
        })?;
        if &fs != fun.on_one(p)? || &ft != fun.on_one(q)? {
            return Err(MalformedInput::new(
                format!("two_map[{a}]"),
                format!("boundary mismatch at image {fa}"),
            ));
        }
    }
    for a in fun.two_map.keys() {
        if !src.idx.two.contains_key(a) {
            return Err(MalformedInput::new(
                format!("two_map[{a}]"),
                "key is not a source 2-cell",
            ));
        }
    }
    // f2 on exactly the composable pairs, with the right boundaries.
    for (g, (gs, _)) in &src.idx.one {
        for (f, (_, ft)) in &src.idx.one {
            let composable = ft == gs;
            let entry = fun.f2.get(&(g.clone(), f.clone()));
            match (composable, entry) {
                (true, Some(c)) => {
                    let want_src = tgt.h1(fun.on_one(g)?, fun.on_one(f)?)?;
                    let want_tgt = fun.on_one(&src.h1(g, f)?)?.clone();
                    let (cs, ct) = tgt.two_boundary(c)?;
                    if cs != want_src || ct != want_tgt {
                        return Err(MalformedInput::new(
                            format!("f2[({g}, {f})]"),
                            format!("component {c} has the wrong boundary"),
                        ));
                    }
                }
                (true, None) => {
                    return Err(MalformedInput::new(
                        format!("f2[({g}, {f})]"),
                        "missing entry for composable pair",
                    ))
                }
                (false, Some(_)) => {
                    return Err(MalformedInput::new(
                        format!("f2[({g}, {f})]"),
                        "entry for a non-composable pair",
                    ))
                }
                (false, None) => {}
            }
        }
    }
    for x in &fun.src.objects {
        let c = fun.f0_at(x)?;
        let fx = fun.on_obj(x)?;
        let want_src = tgt.id1(fx)?;
        let want_tgt = fun.on_one(&src.id1(x)?)?.clone();
        let (cs, ct) = tgt.two_boundary(c)?;
        if cs != want_src || ct != want_tgt {
            return Err(MalformedInput::new(
                format!("f0[{x}]"),
                format!("component {c} has the wrong boundary"),
            ));
        }
    }
    for x in fun.f0.keys() {
        if !fun.src.objects.contains(x) {
            return Err(MalformedInput::new(
                format!("f0[{x}]"),
                "key is not a source object",
            ));
        }
    }

    let mut violations = Vec::new();

    // Hom-functor laws: identities and vertical composition.
    for f in src.idx.one.keys() {
        let lhs = fun.on_two(&src.id2(f)?)?.clone();
        let rhs = tgt.id2(fun.on_one(f)?)?;
        if lhs != rhs {
            violations.push(Violation::unequal(
                AxiomTag::TwoCellIdentity,
                vec![f.clone()],
                lhs,
                rhs,
            ));
        }
    }
    for hom in fun.src.homs.values() {
        for ((later, earlier), res) in &hom.vcomp {
            let lhs = fun.on_two(res)?.clone();
            let rhs = tgt.vc(fun.on_two(later)?, fun.on_two(earlier)?)?;
            if lhs != rhs {
                violations.push(Violation::unequal(
                    AxiomTag::TwoCellComposition,
                    vec![later.clone(), earlier.clone()],
                    lhs,
                    rhs,
                ));
            }
        }
    }

    // Naturality of f2 in both arguments.
    for (beta, (g, g1)) in &src.idx.two {
        let (gs, _) = src.one_boundary(g)?;
        for (alpha, (f, f1)) in &src.idx.two {
            let (_, ft) = src.one_boundary(f)?;
            if ft != gs {
                continue;
            }
            let lhs = tgt.vc(
                fun.f2_at(g1, f1)?,
                &tgt.h2(fun.on_two(beta)?, fun.on_two(alpha)?)?,
            )?;
            let rhs = tgt.vc(fun.on_two(&src.h2(beta, alpha)?)?, fun.f2_at(g, f)?)?;
            if lhs != rhs {
                violations.push(Violation::unequal(
                    AxiomTag::ConstraintNaturality,
                    vec![beta.clone(), alpha.clone()],
                    lhs,
                    rhs,
                ));
            }
        }
    }

    // Lax associativity hexagon.
    for (h, (hs, _)) in &src.idx.one {
        for (g, (gs, gt)) in &src.idx.one {
            if gt != hs {
                continue;
            }
            for (f, (_, ft)) in &src.idx.one {
                if ft != gs {
                    continue;
                }
                let fh = fun.on_one(h)?;
                let fg = fun.on_one(g)?;
                let ff = fun.on_one(f)?;
                let gf = src.h1(g, f)?;
                let hg = src.h1(h, g)?;
                let lhs = tgt.vc_chain(&[
                    tgt.assoc(fh, fg, ff)?,
                    tgt.h2(&tgt.id2(fh)?, fun.f2_at(g, f)?)?,
                    fun.f2_at(h, &gf)?.clone(),
                ])?;
                let rhs = tgt.vc_chain(&[
                    tgt.h2(fun.f2_at(h, g)?, &tgt.id2(ff)?)?,
                    fun.f2_at(&hg, f)?.clone(),
                    fun.on_two(&src.assoc(h, g, f)?)?.clone(),
                ])?;
                if lhs != rhs {
                    violations.push(Violation::unequal(
                        AxiomTag::LaxAssociativity,
                        vec![h.clone(), g.clone(), f.clone()],
                        lhs,
                        rhs,
                    ));
                }
            }
        }
    }

    // Lax left and right unity.
    for (f, (w, x)) in &src.idx.one {
        let ff = fun.on_one(f)?;
        let id_x = src.id1(x)?;
        let lhs = tgt.vc_chain(&[
            tgt.h2(fun.f0_at(x)?, &tgt.id2(ff)?)?,
            fun.f2_at(&id_x, f)?.clone(),
            fun.on_two(&src.lunit(f)?)?.clone(),
        ])?;
        let rhs = tgt.lunit(ff)?;
        if lhs != rhs {
            violations.push(Violation::unequal(
                AxiomTag::LaxLeftUnity,
                vec![f.clone()],
                lhs,
                rhs,
            ));
        }
        let id_w = src.id1(w)?;
        let lhs = tgt.vc_chain(&[
            tgt.h2(&tgt.id2(ff)?, fun.f0_at(w)?)?,
            fun.f2_at(f, &id_w)?.clone(),
            fun.on_two(&src.runit(f)?)?.clone(),
        ])?;
        let rhs = tgt.runit(ff)?;
        if lhs != rhs {
            violations.push(Violation::unequal(
                AxiomTag::LaxRightUnity,
                vec![f.clone()],
                lhs,
                rhs,
            ));
        }
    }

    let classification = classify(fun, &tgt)?;
    Ok(FunctorReport {
        report: ValidationReport::from_violations(violations),
        classification,
    })
}

fn classify(fun: &LaxFunctor, tgt: &Tables<'_>) -> Result<FunctorClassification, MalformedInput> {
    let mut unitary = true;
    let mut strictly_unitary = true;
    let mut f2_iso = true;
    let mut f2_id = true;
    for c in fun.f0.values() {
        if !fun.tgt.is_invertible_two_cell(c) {
            unitary = false;
        }
        if !fun.tgt.is_identity_two_cell(c) {
            strictly_unitary = false;
        }
    }
    for c in fun.f2.values() {
        if !fun.tgt.is_invertible_two_cell(c) {
            f2_iso = false;
        }
        if !fun.tgt.is_identity_two_cell(c) {
            f2_id = false;
        }
    }
    let _ = tgt;
    Ok(FunctorClassification {
        unitary,
        strictly_unitary,
        pseudo: unitary && f2_iso,
        strict: strictly_unitary && f2_id,
    })
}

/// The identity strict functor on a bicategory.
pub fn identity_functor(b: &FiniteBicategory) -> LaxFunctor {
    let mut one_map = BTreeMap::new();
    let mut two_map = BTreeMap::new();
    let mut f2 = BTreeMap::new();
    let mut f0 = BTreeMap::new();
    for hom in b.homs.values() {
        for f in &hom.one_cells {
            one_map.insert(f.clone(), f.clone());
        }
        for a in hom.two_cells.keys() {
            two_map.insert(a.clone(), a.clone());
        }
    }
    for ((g, f), gf) in &b.hcomp1 {
        if let Some(i) = b.id2_of(gf) {
            f2.insert((g.clone(), f.clone()), i.clone());
        }
    }
    for (x, f) in &b.id1 {
        if let Some(i) = b.id2_of(f) {
            f0.insert(x.clone(), i.clone());
        }
    }
    LaxFunctor {
        src: b.clone(),
        tgt: b.clone(),
        obj_map: b.objects.iter().map(|x| (x.clone(), x.clone())).collect(),
        one_map,
        two_map,
        f2,
        f0,
    }
}

/// The constant pseudofunctor at an object: everything collapses onto `x`,
/// with unit constraint the identity and composition constraint the left
/// unitor at `1_x`.
pub fn constant_pseudofunctor(
    src: &FiniteBicategory,
    tgt: &FiniteBicategory,
    x: &CellId,
) -> Result<LaxFunctor, FunctorError> {
    if !tgt.objects.contains(x) {
        return Err(FunctorError::UnknownCell { id: x.clone() });
    }
    let id_x = tgt
        .id1
        .get(x)
        .ok_or_else(|| MalformedInput::new(format!("id1[{x}]"), "missing entry"))?;
    let unit_2 = tgt
        .id2_of(id_x)
        .ok_or_else(|| MalformedInput::new(format!("id2[{id_x}]"), "missing entry"))?;
    let l_unit = tgt
        .lunit
        .get(id_x)
        .ok_or_else(|| MalformedInput::new(format!("lunit[{id_x}]"), "missing entry"))?;
    let mut one_map = BTreeMap::new();
    let mut two_map = BTreeMap::new();
    let mut f2 = BTreeMap::new();
    for hom in src.homs.values() {
        for f in &hom.one_cells {
            one_map.insert(f.clone(), id_x.clone());
        }
        for a in hom.two_cells.keys() {
            two_map.insert(a.clone(), unit_2.clone());
        }
    }
    for (g, f) in src.hcomp1.keys() {
        f2.insert((g.clone(), f.clone()), l_unit.clone());
    }
    Ok(LaxFunctor {
        src: src.clone(),
        tgt: tgt.clone(),
        obj_map: src.objects.iter().map(|o| (o.clone(), x.clone())).collect(),
        one_map,
        two_map,
        f2,
        f0: src
            .objects
            .iter()
            .map(|o| (o.clone(), unit_2.clone()))
            .collect(),
    })
}

/// Composite `outer . inner` of lax functors, with the standard comparison
/// cells `(GF)^2 = G(F^2) . G^2` and `(GF)^0 = G(F^0) . G^0`.
pub fn compose_lax_functors(
    outer: &LaxFunctor,
    inner: &LaxFunctor,
) -> Result<LaxFunctor, FunctorError> {
    if inner.tgt != outer.src {
        return Err(FunctorError::Mismatch {
            detail: "target of the inner functor is not the source of the outer functor".into(),
        });
    }
    let tgt = Tables::new(&outer.tgt)?;
    let mut obj_map = BTreeMap::new();
    for x in &inner.src.objects {
        obj_map.insert(x.clone(), outer.on_obj(inner.on_obj(x)?)?.clone());
    }
    let mut one_map = BTreeMap::new();
    let mut two_map = BTreeMap::new();
    for hom in inner.src.homs.values() {
        for f in &hom.one_cells {
            one_map.insert(f.clone(), outer.on_one(inner.on_one(f)?)?.clone());
        }
        for a in hom.two_cells.keys() {
            two_map.insert(a.clone(), outer.on_two(inner.on_two(a)?)?.clone());
        }
    }
    let mut f2 = BTreeMap::new();
    for (g, f) in inner.f2.keys() {
        let fg = inner.on_one(g)?;
        let ff = inner.on_one(f)?;
        let c = tgt.vc(
            outer.on_two(inner.f2_at(g, f)?)?,
            outer.f2_at(fg, ff)?,
        )?;
        f2.insert((g.clone(), f.clone()), c);
    }
    let mut f0 = BTreeMap::new();
    for x in &inner.src.objects {
        let fx = inner.on_obj(x)?;
        let c = tgt.vc(outer.on_two(inner.f0_at(x)?)?, outer.f0_at(fx)?)?;
        f0.insert(x.clone(), c);
    }
    Ok(LaxFunctor {
        src: inner.src.clone(),
        tgt: outer.tgt.clone(),
        obj_map,
        one_map,
        two_map,
        f2,
        f0,
    })
}

/// A lax transformation candidate between parallel lax functors, with
/// components `comp1[X]: FX -> GX` and `comp2[f]: (Gf) . a_X => a_Y . (Ff)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaxTransformation {
    pub src: LaxFunctor,
    pub tgt: LaxFunctor,
    pub comp1: BTreeMap<CellId, CellId>,
    pub comp2: BTreeMap<CellId, CellId>,
}

impl LaxTransformation {
    pub fn comp1_at(&self, x: &CellId) -> Result<&CellId, MalformedInput> {
        self.comp1
            .get(x)
            .ok_or_else(|| MalformedInput::new(format!("comp1[{x}]"), "missing entry"))
    }

    pub fn comp2_at(&self, f: &CellId) -> Result<&CellId, MalformedInput> {
        self.comp2
            .get(f)
            .ok_or_else(|| MalformedInput::new(format!("comp2[{f}]"), "missing entry"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformationReport {
    pub report: ValidationReport,
    pub strong: bool,
}

/// Validate a lax transformation: component boundaries, naturality in
/// 2-cells, lax unity, and lax naturality. The strong flag records whether
/// every `comp2` entry is invertible.
pub fn validate_lax_transformation(
    t: &LaxTransformation,
) -> Result<TransformationReport, MalformedInput> {
    if t.src.src != t.tgt.src || t.src.tgt != t.tgt.tgt {
        return Err(MalformedInput::new(
            "transformation",
            "source and target functors are not parallel",
        ));
    }
    let base = Tables::new(&t.src.src)?;
    let amb = Tables::new(&t.src.tgt)?;
    let f = &t.src;
    let g = &t.tgt;

    // Component boundaries.
    for x in &f.src.objects {
        let a = t.comp1_at(x)?;
        let (s, tt) = amb.one_boundary(a).map_err(|_| {
            MalformedInput::new(format!("comp1[{x}]"), format!("dangling 1-cell id {a}"))
        })?;
        if &s != f.on_obj(x)? || &tt != g.on_obj(x)? {
            return Err(MalformedInput::new(
                format!("comp1[{x}]"),
                format!("component {a} has the wrong boundary"),
            ));
        }
    }
    for x in t.comp1.keys() {
        if !f.src.objects.contains(x) {
            return Err(MalformedInput::new(
                format!("comp1[{x}]"),
                "key is not an object",
            ));
        }
    }
    for (p, (x, y)) in &base.idx.one {
        let c = t.comp2_at(p)?;
        let want_src = amb.h1(g.on_one(p)?, t.comp1_at(x)?)?;
        let want_tgt = amb.h1(t.comp1_at(y)?, f.on_one(p)?)?;
        let (cs, ct) = amb.two_boundary(c).map_err(|_| {
            MalformedInput::new(format!("comp2[{p}]"), format!("dangling 2-cell id {c}"))
        })?;
        if cs != want_src || ct != want_tgt {
            return Err(MalformedInput::new(
                format!("comp2[{p}]"),
                format!("component {c} has the wrong boundary"),
            ));
        }
    }
    for p in t.comp2.keys() {
        if !base.idx.one.contains_key(p) {
            return Err(MalformedInput::new(
                format!("comp2[{p}]"),
                "key is not a 1-cell",
            ));
        }
    }

    let mut violations = Vec::new();

    // Naturality of comp2 with respect to 2-cells.
    for (gamma, (p, p1)) in &base.idx.two {
        let (x, y) = base.one_boundary(p)?;
        let lhs = amb.vc(
            t.comp2_at(p1)?,
            &amb.h2(g.on_two(gamma)?, &amb.id2(t.comp1_at(&x)?)?)?,
        )?;
        let rhs = amb.vc(
            &amb.h2(&amb.id2(t.comp1_at(&y)?)?, f.on_two(gamma)?)?,
            t.comp2_at(p)?,
        )?;
        if lhs != rhs {
            violations.push(Violation::unequal(
                AxiomTag::ComponentNaturality,
                vec![gamma.clone()],
                lhs,
                rhs,
            ));
        }
    }

    // Lax unity.
    for x in &f.src.objects {
        let ax = t.comp1_at(x)?;
        let id_x = base.id1(x)?;
        let lhs = amb.vc(
            t.comp2_at(&id_x)?,
            &amb.h2(g.f0_at(x)?, &amb.id2(ax)?)?,
        )?;
        let rhs = amb.vc_chain(&[
            amb.lunit(ax)?,
            amb.runit_inv(ax)?,
            amb.h2(&amb.id2(ax)?, f.f0_at(x)?)?,
        ])?;
        if lhs != rhs {
            violations.push(Violation::unequal(
                AxiomTag::TransformationUnity,
                vec![x.clone()],
                lhs,
                rhs,
            ));
        }
    }

    // Lax naturality, with the normative associator placement reading the
    // source as ((Gg)(Gf)) a_X.
    for (q, (qs, _)) in &base.idx.one {
        for (p, (x, pt)) in &base.idx.one {
            if pt != qs {
                continue;
            }
            let z = base.one_boundary(q)?.1;
            let qp = base.h1(q, p)?;
            let lhs = amb.vc(
                t.comp2_at(&qp)?,
                &amb.h2(g.f2_at(q, p)?, &amb.id2(t.comp1_at(x)?)?)?,
            )?;
            let gq = g.on_one(q)?;
            let gp = g.on_one(p)?;
            let fq = f.on_one(q)?;
            let fp = f.on_one(p)?;
            let ax = t.comp1_at(x)?;
            let ay = t.comp1_at(pt)?;
            let az = t.comp1_at(&z)?;
            let rhs = amb.vc_chain(&[
                amb.assoc(gq, gp, ax)?,
                amb.h2(&amb.id2(gq)?, t.comp2_at(p)?)?,
                amb.assoc_inv(gq, ay, fp)?,
                amb.h2(t.comp2_at(q)?, &amb.id2(fp)?)?,
                amb.assoc(az, fq, fp)?,
                amb.h2(&amb.id2(az)?, f.f2_at(q, p)?)?,
            ])?;
            if lhs != rhs {
                violations.push(Violation::unequal(
                    AxiomTag::TransformationNaturality,
                    vec![q.clone(), p.clone()],
                    lhs,
                    rhs,
                ));
            }
        }
    }

    let strong = t
        .comp2
        .values()
        .all(|c| t.src.tgt.is_invertible_two_cell(c));
    Ok(TransformationReport {
        report: ValidationReport::from_violations(violations),
        strong,
    })
}

/// The identity strong transformation on a lax functor, with naturality
/// components the unitor composite `l_inv . r` adjusted to the boundary.
pub fn identity_transformation(f: &LaxFunctor) -> Result<LaxTransformation, FunctorError> {
    let amb = Tables::new(&f.tgt)?;
    let mut comp1 = BTreeMap::new();
    for x in &f.src.objects {
        comp1.insert(x.clone(), amb.id1(f.on_obj(x)?)?);
    }
    let mut comp2 = BTreeMap::new();
    for hom in f.src.homs.values() {
        for p in &hom.one_cells {
            let fp = f.on_one(p)?;
            let c = amb.vc(&amb.lunit_inv(fp)?, &amb.runit(fp)?)?;
            comp2.insert(p.clone(), c);
        }
    }
    Ok(LaxTransformation {
        src: f.clone(),
        tgt: f.clone(),
        comp1,
        comp2,
    })
}

/// Composite of lax transformations along a common middle functor.
pub fn compose_transformations(
    second: &LaxTransformation,
    first: &LaxTransformation,
) -> Result<LaxTransformation, FunctorError> {
    if first.tgt != second.src {
        return Err(FunctorError::Mismatch {
            detail: "target of the first transformation is not the source of the second".into(),
        });
    }
    let amb = Tables::new(&first.src.tgt)?;
    let f = &first.src;
    let h = &second.tgt;
    let mut comp1 = BTreeMap::new();
    for x in &f.src.objects {
        comp1.insert(
            x.clone(),
            amb.h1(second.comp1_at(x)?, first.comp1_at(x)?)?,
        );
    }
    let mut comp2 = BTreeMap::new();
    for (p, (x, y)) in &CellIndex::build(&f.src)?.one {
        let hp = h.on_one(p)?;
        let fp = f.on_one(p)?;
        let bx = second.comp1_at(x)?;
        let by = second.comp1_at(y)?;
        let ax = first.comp1_at(x)?;
        let ay = first.comp1_at(y)?;
        let gp = first.tgt.on_one(p)?;
        let c = amb.vc_chain(&[
            amb.assoc_inv(hp, bx, ax)?,
            amb.h2(second.comp2_at(p)?, &amb.id2(ax)?)?,
            amb.assoc(by, gp, ax)?,
            amb.h2(&amb.id2(by)?, first.comp2_at(p)?)?,
            amb.assoc_inv(by, ay, fp)?,
        ])?;
        comp2.insert(p.clone(), c);
    }
    Ok(LaxTransformation {
        src: first.src.clone(),
        tgt: second.tgt.clone(),
        comp1,
        comp2,
    })
}

/// A modification candidate between parallel lax transformations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Modification {
    pub src: LaxTransformation,
    pub tgt: LaxTransformation,
    pub comp: BTreeMap<CellId, CellId>,
}

impl Modification {
    pub fn comp_at(&self, x: &CellId) -> Result<&CellId, MalformedInput> {
        self.comp
            .get(x)
            .ok_or_else(|| MalformedInput::new(format!("comp[{x}]"), "missing entry"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModificationReport {
    pub report: ValidationReport,
    pub invertible: bool,
}

/// Validate a modification: component boundaries plus the modification axiom
/// at every 1-cell. The invertible flag records componentwise invertibility.
pub fn validate_modification(m: &Modification) -> Result<ModificationReport, MalformedInput> {
    if m.src.src != m.tgt.src || m.src.tgt != m.tgt.tgt {
        return Err(MalformedInput::new(
            "modification",
            "source and target transformations are not parallel",
        ));
    }
    let f = &m.src.src;
    let g = &m.src.tgt;
    let base = Tables::new(&f.src)?;
    let amb = Tables::new(&f.tgt)?;
    for x in &f.src.objects {
        let c = m.comp_at(x)?;
        let (s, t) = amb.two_boundary(c).map_err(|_| {
            MalformedInput::new(format!("comp[{x}]"), format!("dangling 2-cell id {c}"))
        })?;
        if &s != m.src.comp1_at(x)? || &t != m.tgt.comp1_at(x)? {
            return Err(MalformedInput::new(
                format!("comp[{x}]"),
                format!("component {c} has the wrong boundary"),
            ));
        }
    }
    for x in m.comp.keys() {
        if !f.src.objects.contains(x) {
            return Err(MalformedInput::new(
                format!("comp[{x}]"),
                "key is not an object",
            ));
        }
    }
    let mut violations = Vec::new();
    for (p, (x, y)) in &base.idx.one {
        let lhs = amb.vc(
            &amb.h2(m.comp_at(y)?, &amb.id2(f.on_one(p)?)?)?,
            m.src.comp2_at(p)?,
        )?;
        let rhs = amb.vc(
            m.tgt.comp2_at(p)?,
            &amb.h2(&amb.id2(g.on_one(p)?)?, m.comp_at(x)?)?,
        )?;
        if lhs != rhs {
            violations.push(Violation::unequal(
                AxiomTag::ModificationAxiom,
                vec![p.clone()],
                lhs,
                rhs,
            ));
        }
    }
    let invertible = m.comp.values().all(|c| f.tgt.is_invertible_two_cell(c));
    Ok(ModificationReport {
        report: ValidationReport::from_violations(violations),
        invertible,
    })
}

/// The identity modification on a transformation.
pub fn identity_modification(t: &LaxTransformation) -> Result<Modification, FunctorError> {
    let amb = Tables::new(&t.src.tgt)?;
    let mut comp = BTreeMap::new();
    for x in &t.src.src.objects {
        comp.insert(x.clone(), amb.id2(t.comp1_at(x)?)?);
    }
    Ok(Modification {
        src: t.clone(),
        tgt: t.clone(),
        comp,
    })
}

/// Vertical composite of modifications.
pub fn compose_modifications(
    second: &Modification,
    first: &Modification,
) -> Result<Modification, FunctorError> {
    if first.tgt != second.src {
        return Err(FunctorError::Mismatch {
            detail: "target of the first modification is not the source of the second".into(),
        });
    }
    let amb = Tables::new(&first.src.src.tgt)?;
    let mut comp = BTreeMap::new();
    for x in &first.src.src.src.objects {
        comp.insert(
            x.clone(),
            amb.vc(second.comp_at(x)?, first.comp_at(x)?)?,
        );
    }
    Ok(Modification {
        src: first.src.clone(),
        tgt: second.tgt.clone(),
        comp,
    })
}
