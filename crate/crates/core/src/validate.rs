//! Exhaustive well-formedness and axiom validation for finite bicategories.
//!
//! Structural defects (dangling ids, partial or overfull tables, boundary
//! mismatches) are `MalformedInput` errors. Equational failures are collected
//! as violations, each carrying the minimal witness tuple in canonical order.

use std::collections::BTreeMap;

use crate::bicategory::{CellIndex, FiniteBicategory, HomCategory};
use crate::cell::CellId;
use crate::report::{AxiomTag, MalformedInput, ValidationReport, Violation};

/// Validate a candidate bicategory.
///
/// Passes exactly when every hom-category is a category, horizontal
/// composition is functorial, the constraint cells are natural isomorphisms,
/// and the middle unity and pentagon axioms hold. The empty candidate passes
/// vacuously.
pub fn validate_bicategory(b: &FiniteBicategory) -> Result<ValidationReport, MalformedInput> {
    let idx = CellIndex::build(b)?;
    check_well_formed(b, &idx)?;
    let ctx = Ctx { b, idx: &idx };
    let mut violations = Vec::new();
    ctx.check_hom_categories(&mut violations)?;
    ctx.check_horizontal_functoriality(&mut violations)?;
    ctx.check_constraint_inverses(&mut violations)?;
    ctx.check_naturality(&mut violations)?;
    ctx.check_middle_unity(&mut violations)?;
    ctx.check_pentagon(&mut violations)?;
    Ok(ValidationReport::from_violations(violations))
}

/// Check the derived unitor identities that follow from the axioms: the two
/// unitor-composite triangles for every composable pair, and the agreement of
/// the unitors at every identity 1-cell. These are consequences, not axioms,
/// and are reported separately.
pub fn check_derived_unitor_properties(
    b: &FiniteBicategory,
) -> Result<ValidationReport, MalformedInput> {
    let idx = CellIndex::build(b)?;
    let ctx = Ctx { b, idx: &idx };
    let mut violations = Vec::new();

    // l_{gf} . a_{1_Z,g,f} = l_g * 1_f  and  (1_g * r_f) . a_{g,f,1_X} = r_{gf}.
    for (g, f) in ctx.composable_one_cell_pairs() {
        let (_, z) = ctx.one_boundary(&g)?;
        let (x, _) = ctx.one_boundary(&f)?;
        let id_z = ctx.id1(&z)?;
        let id_x = ctx.id1(&x)?;
        let gf = ctx.h1(&g, &f)?;

        let a_left = ctx.assoc(&id_z, &g, &f)?;
        let lhs = ctx.vc(&ctx.lunit(&gf)?, &a_left)?;
        let rhs = ctx.h2(&ctx.lunit(&g)?, &ctx.id2(&f)?)?;
        if lhs != rhs {
            violations.push(Violation::unequal(
                AxiomTag::LeftUnitorComposite,
                vec![g.clone(), f.clone()],
                lhs,
                rhs,
            ));
        }

        let a_right = ctx.assoc(&g, &f, &id_x)?;
        let lhs = ctx.vc(&ctx.h2(&ctx.id2(&g)?, &ctx.runit(&f)?)?, &a_right)?;
        let rhs = ctx.runit(&gf)?;
        if lhs != rhs {
            violations.push(Violation::unequal(
                AxiomTag::RightUnitorComposite,
                vec![g.clone(), f.clone()],
                lhs,
                rhs,
            ));
        }
    }

    // l_{1_X} = r_{1_X}.
    for x in &b.objects {
        let id_x = ctx.id1(x)?;
        let l = ctx.lunit(&id_x)?;
        let r = ctx.runit(&id_x)?;
        if l != r {
            violations.push(Violation::unequal(
                AxiomTag::UnitorsAgreeAtIdentity,
                vec![x.clone()],
                l,
                r,
            ));
        }
    }

    Ok(ValidationReport::from_violations(violations))
}

struct Ctx<'a> {
    b: &'a FiniteBicategory,
    idx: &'a CellIndex,
}

impl<'a> Ctx<'a> {
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
            .ok_or_else(|| MalformedInput::new(format!("id1[{x}]"), "missing identity 1-cell"))
    }

    fn id2(&self, f: &CellId) -> Result<CellId, MalformedInput> {
        self.b
            .id2_of(f)
            .cloned()
            .ok_or_else(|| MalformedInput::new(format!("id2[{f}]"), "missing identity 2-cell"))
    }

    fn vc(&self, later: &CellId, earlier: &CellId) -> Result<CellId, MalformedInput> {
        self.b.vertical(later, earlier).cloned().ok_or_else(|| {
            MalformedInput::new(format!("vcomp[({later}, {earlier})]"), "missing entry")
        })
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
            .ok_or_else(|| {
                MalformedInput::new(format!("assoc[({h}, {g}, {f})]"), "missing entry")
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

    /// All (g, f) with f: X -> Y, g: Y -> Z, canonical order by (g, f).
    fn composable_one_cell_pairs(&self) -> Vec<(CellId, CellId)> {
        let mut out = Vec::new();
        for (g, (gs, _)) in &self.idx.one {
            for (f, (_, ft)) in &self.idx.one {
                if ft == gs {
                    out.push((g.clone(), f.clone()));
                }
            }
        }
        out
    }

    /// All composable 1-cell triples (h, g, f).
    fn composable_one_cell_triples(&self) -> Vec<(CellId, CellId, CellId)> {
        let mut out = Vec::new();
        for (h, (hs, _)) in &self.idx.one {
            for (g, (gs, gt)) in &self.idx.one {
                if gt != hs {
                    continue;
                }
                for (f, (_, ft)) in &self.idx.one {
                    if ft == gs {
                        out.push((h.clone(), g.clone(), f.clone()));
                    }
                }
            }
        }
        out
    }

    fn check_hom_categories(&self, out: &mut Vec<Violation>) -> Result<(), MalformedInput> {
        for hom in self.b.homs.values() {
            // Unit laws.
            for (a, (s, t)) in &hom.two_cells {
                let id_s = self.id2(s)?;
                let id_t = self.id2(t)?;
                let right = self.vc(a, &id_s)?;
                if right != *a {
                    out.push(Violation::unequal(
                        AxiomTag::VerticalUnit,
                        vec![a.clone(), id_s.clone()],
                        right,
                        a.clone(),
                    ));
                }
                let left = self.vc(&id_t, a)?;
                if left != *a {
                    out.push(Violation::unequal(
                        AxiomTag::VerticalUnit,
                        vec![id_t.clone(), a.clone()],
                        left,
                        a.clone(),
                    ));
                }
            }
            // Associativity over all composable triples.
            for (c, (cs, _)) in &hom.two_cells {
                for (bb, (bs, bt)) in &hom.two_cells {
                    if bt != cs {
                        continue;
                    }
                    for (a, (_, at)) in &hom.two_cells {
                        if at != bs {
                            continue;
                        }
                        let lhs = self.vc(c, &self.vc(bb, a)?)?;
                        let rhs = self.vc(&self.vc(c, bb)?, a)?;
                        if lhs != rhs {
                            out.push(Violation::unequal(
                                AxiomTag::VerticalAssociativity,
                                vec![c.clone(), bb.clone(), a.clone()],
                                lhs,
                                rhs,
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn check_horizontal_functoriality(
        &self,
        out: &mut Vec<Violation>,
    ) -> Result<(), MalformedInput> {
        // Identity preservation: id2(g) * id2(f) = id2(gf).
        for (g, f) in self.composable_one_cell_pairs() {
            let lhs = self.h2(&self.id2(&g)?, &self.id2(&f)?)?;
            let rhs = self.id2(&self.h1(&g, &f)?)?;
            if lhs != rhs {
                out.push(Violation::unequal(
                    AxiomTag::HorizontalIdentity,
                    vec![g.clone(), f.clone()],
                    lhs,
                    rhs,
                ));
            }
        }
        // Interchange: (b2 . b1) * (a2 . a1) = (b2 * a2) . (b1 * a1).
        let hom_pairs: Vec<(&(CellId, CellId), &HomCategory, &HomCategory)> = self
            .b
            .homs
            .iter()
            .flat_map(|(k1, h1)| {
                self.b.homs.iter().filter_map(move |(k2, h2)| {
                    if k1.1 == k2.0 {
                        Some((k1, h1, h2))
                    } else {
                        None
                    }
                })
            })
            .collect();
        for (_, hom_fst, hom_snd) in hom_pairs {
            for ((b2, b1), bv) in &hom_snd.vcomp {
                let _ = bv;
                for (a2, a1) in hom_fst.vcomp.keys() {
                    let lhs = self.h2(&self.vc(b2, b1)?, &self.vc(a2, a1)?)?;
                    let rhs = self.vc(&self.h2(b2, a2)?, &self.h2(b1, a1)?)?;
                    if lhs != rhs {
                        out.push(Violation::unequal(
                            AxiomTag::Interchange,
                            vec![b2.clone(), b1.clone(), a2.clone(), a1.clone()],
                            lhs,
                            rhs,
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    fn check_constraint_inverses(&self, out: &mut Vec<Violation>) -> Result<(), MalformedInput> {
        for ((h, g, f), a) in &self.b.assoc {
            let inv = self
                .b
                .assoc_inv
                .get(&(h.clone(), g.clone(), f.clone()))
                .ok_or_else(|| {
                    MalformedInput::new(format!("assoc_inv[({h}, {g}, {f})]"), "missing entry")
                })?;
            let (src, tgt) = self.two_boundary(a)?;
            let back = self.vc(inv, a)?;
            let forth = self.vc(a, inv)?;
            if back != self.id2(&src)? || forth != self.id2(&tgt)? {
                out.push(Violation::unequal(
                    AxiomTag::AssociatorInverse,
                    vec![h.clone(), g.clone(), f.clone()],
                    back,
                    self.id2(&src)?,
                ));
            }
        }
        for (f, l) in &self.b.lunit {
            let inv = self
                .b
                .lunit_inv
                .get(f)
                .ok_or_else(|| MalformedInput::new(format!("lunit_inv[{f}]"), "missing entry"))?;
            let (src, tgt) = self.two_boundary(l)?;
            if self.vc(inv, l)? != self.id2(&src)? || self.vc(l, inv)? != self.id2(&tgt)? {
                out.push(Violation::unequal(
                    AxiomTag::LeftUnitorInverse,
                    vec![f.clone()],
                    self.vc(inv, l)?,
                    self.id2(&src)?,
                ));
            }
        }
        for (f, r) in &self.b.runit {
            let inv = self
                .b
                .runit_inv
                .get(f)
                .ok_or_else(|| MalformedInput::new(format!("runit_inv[{f}]"), "missing entry"))?;
            let (src, tgt) = self.two_boundary(r)?;
            if self.vc(inv, r)? != self.id2(&src)? || self.vc(r, inv)? != self.id2(&tgt)? {
                out.push(Violation::unequal(
                    AxiomTag::RightUnitorInverse,
                    vec![f.clone()],
                    self.vc(inv, r)?,
                    self.id2(&src)?,
                ));
            }
        }
        Ok(())
    }

    fn check_naturality(&self, out: &mut Vec<Violation>) -> Result<(), MalformedInput> {
        // Associator naturality over all composable 2-cell triples.
        let two: Vec<(CellId, CellId, CellId)> = self
            .idx
            .two
            .iter()
            .map(|(a, (s, t))| (a.clone(), s.clone(), t.clone()))
            .collect();
        for (c2, h, h1) in &two {
            let (hs, _) = self.one_boundary(h)?;
            for (c1, g, g1) in &two {
                let (gs, gt) = self.one_boundary(g)?;
                if gt != hs {
                    continue;
                }
                for (c0, f, f1) in &two {
                    let (_, ft) = self.one_boundary(f)?;
                    if ft != gs {
                        continue;
                    }
                    let lhs = self.vc(
                        &self.assoc(h1, g1, f1)?,
                        &self.h2(&self.h2(c2, c1)?, c0)?,
                    )?;
                    let rhs = self.vc(
                        &self.h2(c2, &self.h2(c1, c0)?)?,
                        &self.assoc(h, g, f)?,
                    )?;
                    if lhs != rhs {
                        out.push(Violation::unequal(
                            AxiomTag::AssociatorNaturality,
                            vec![c2.clone(), c1.clone(), c0.clone()],
                            lhs,
                            rhs,
                        ));
                    }
                }
            }
        }
        // Unitor naturality over all 2-cells.
        for (c, f, f1) in &two {
            let (x, y) = self.one_boundary(f)?;
            let idy = self.id2(&self.id1(&y)?)?;
            let lhs = self.vc(&self.lunit(f1)?, &self.h2(&idy, c)?)?;
            let rhs = self.vc(c, &self.lunit(f)?)?;
            if lhs != rhs {
                out.push(Violation::unequal(
                    AxiomTag::LeftUnitorNaturality,
                    vec![c.clone()],
                    lhs,
                    rhs,
                ));
            }
            let idx2 = self.id2(&self.id1(&x)?)?;
            let lhs = self.vc(&self.runit(f1)?, &self.h2(c, &idx2)?)?;
            let rhs = self.vc(c, &self.runit(f)?)?;
            if lhs != rhs {
                out.push(Violation::unequal(
                    AxiomTag::RightUnitorNaturality,
                    vec![c.clone()],
                    lhs,
                    rhs,
                ));
            }
        }
        Ok(())
    }

    fn check_middle_unity(&self, out: &mut Vec<Violation>) -> Result<(), MalformedInput> {
        for (g, f) in self.composable_one_cell_pairs() {
            let (_, w) = self.one_boundary(&f)?;
            let id_w = self.id1(&w)?;
            let lhs = self.vc(
                &self.h2(&self.id2(&g)?, &self.lunit(&f)?)?,
                &self.assoc(&g, &id_w, &f)?,
            )?;
            let rhs = self.h2(&self.runit(&g)?, &self.id2(&f)?)?;
            if lhs != rhs {
                out.push(Violation::unequal(
                    AxiomTag::MiddleUnity,
                    vec![g.clone(), f.clone()],
                    lhs,
                    rhs,
                ));
            }
        }
        Ok(())
    }

    fn check_pentagon(&self, out: &mut Vec<Violation>) -> Result<(), MalformedInput> {
        for (k, (ks, _)) in &self.idx.one {
            for (h, g, f) in self.composable_one_cell_triples() {
                let (_, ht) = self.one_boundary(&h)?;
                if ht != *ks {
                    continue;
                }
                let kh = self.h1(k, &h)?;
                let gf = self.h1(&g, &f)?;
                let hg = self.h1(&h, &g)?;
                // Two-step leg: ((kh)g)f => (kh)(gf) => k(h(gf)).
                let lhs = self.vc(&self.assoc(k, &h, &gf)?, &self.assoc(&kh, &g, &f)?)?;
                // Three-step leg: ((kh)g)f => (k(hg))f => k((hg)f) => k(h(gf)).
                let rhs = self.vc(
                    &self.h2(&self.id2(k)?, &self.assoc(&h, &g, &f)?)?,
                    &self.vc(
                        &self.assoc(k, &hg, &f)?,
                        &self.h2(&self.assoc(k, &h, &g)?, &self.id2(&f)?)?,
                    )?,
                )?;
                if lhs != rhs {
                    out.push(Violation::unequal(
                        AxiomTag::Pentagon,
                        vec![k.clone(), h.clone(), g.clone(), f.clone()],
                        lhs,
                        rhs,
                    ));
                }
            }
        }
        Ok(())
    }
}

fn check_well_formed(b: &FiniteBicategory, idx: &CellIndex) -> Result<(), MalformedInput> {
    for x in &b.objects {
        if x.is_empty() {
            return Err(MalformedInput::new("objects", "empty object name"));
        }
    }
    for (x, y) in b.homs.keys() {
        if !b.objects.contains(x) || !b.objects.contains(y) {
            return Err(MalformedInput::new(
                format!("hom ({x}, {y})"),
                "hom key references a missing object",
            ));
        }
    }
    // id1 total over objects, valued in endo-homs.
    for x in &b.objects {
        let f = b
            .id1
            .get(x)
            .ok_or_else(|| MalformedInput::new(format!("id1[{x}]"), "missing identity 1-cell"))?;
        match idx.one.get(f) {
            Some((s, t)) if s == x && t == x => {}
            Some(_) => {
                return Err(MalformedInput::new(
                    format!("id1[{x}]"),
                    format!("identity 1-cell {f} is not an endo-1-cell of {x}"),
                ))
            }
            None => {
                return Err(MalformedInput::new(
                    format!("id1[{x}]"),
                    format!("dangling 1-cell id {f}"),
                ))
            }
        }
    }
    for x in b.id1.keys() {
        if !b.objects.contains(x) {
            return Err(MalformedInput::new(
                format!("id1[{x}]"),
                "key is not an object",
            ));
        }
    }

    // Per-hom tables.
    for ((x, y), hom) in &b.homs {
        let site = |rest: &str| format!("hom ({x}, {y}): {rest}");
        for (a, (s, t)) in &hom.two_cells {
            if !hom.one_cells.contains(s) || !hom.one_cells.contains(t) {
                return Err(MalformedInput::new(
                    site(&format!("two_cells[{a}]")),
                    "boundary references a 1-cell outside this hom",
                ));
            }
        }
        for f in &hom.one_cells {
            let i = hom.id2.get(f).ok_or_else(|| {
                MalformedInput::new(site(&format!("id2[{f}]")), "missing identity 2-cell")
            })?;
            match hom.two_cells.get(i) {
                Some((s, t)) if s == f && t == f => {}
                Some(_) => {
                    return Err(MalformedInput::new(
                        site(&format!("id2[{f}]")),
                        format!("identity 2-cell {i} does not have boundary ({f}, {f})"),
                    ))
                }
                None => {
                    return Err(MalformedInput::new(
                        site(&format!("id2[{f}]")),
                        format!("dangling 2-cell id {i}"),
                    ))
                }
            }
        }
        for f in hom.id2.keys() {
            if !hom.one_cells.contains(f) {
                return Err(MalformedInput::new(
                    site(&format!("id2[{f}]")),
                    "key is not a 1-cell of this hom",
                ));
            }
        }
        // vcomp defined exactly on composable pairs.
        for (later, (ls, lt)) in &hom.two_cells {
            for (earlier, (_, et)) in &hom.two_cells {
                let key = (later.clone(), earlier.clone());
                let composable = et == ls;
                match (composable, hom.vcomp.get(&key)) {
                    (true, Some(res)) => match hom.two_cells.get(res) {
                        Some((rs, rt))
                            if rs == &hom.two_cells[earlier].0 && rt == lt => {}
                        Some(_) => {
                            return Err(MalformedInput::new(
                                site(&format!("vcomp[({later}, {earlier})]")),
                                format!("result {res} has the wrong boundary"),
                            ))
                        }
                        None => {
                            return Err(MalformedInput::new(
                                site(&format!("vcomp[({later}, {earlier})]")),
                                format!("dangling 2-cell id {res}"),
                            ))
                        }
                    },
                    (true, None) => {
                        return Err(MalformedInput::new(
                            site(&format!("vcomp[({later}, {earlier})]")),
                            "missing entry for composable pair",
                        ))
                    }
                    (false, Some(_)) => {
                        return Err(MalformedInput::new(
                            site(&format!("vcomp[({later}, {earlier})]")),
                            "entry for a non-composable pair",
                        ))
                    }
                    (false, None) => {}
                }
            }
        }
        for (later, earlier) in hom.vcomp.keys() {
            if !hom.two_cells.contains_key(later) || !hom.two_cells.contains_key(earlier) {
                return Err(MalformedInput::new(
                    site(&format!("vcomp[({later}, {earlier})]")),
                    "key references a 2-cell outside this hom",
                ));
            }
        }
    }

    // hcomp1 defined exactly on composable pairs of 1-cells.
    for (g, (gs, gt)) in &idx.one {
        for (f, (fs, ft)) in &idx.one {
            let key = (g.clone(), f.clone());
            let composable = ft == gs;
            match (composable, b.hcomp1.get(&key)) {
                (true, Some(res)) => match idx.one.get(res) {
                    Some((rs, rt)) if rs == fs && rt == gt => {}
                    Some(_) => {
                        return Err(MalformedInput::new(
                            format!("hcomp1[({g}, {f})]"),
                            format!("result {res} has the wrong boundary"),
                        ))
                    }
                    None => {
                        return Err(MalformedInput::new(
                            format!("hcomp1[({g}, {f})]"),
                            format!("dangling 1-cell id {res}"),
                        ))
                    }
                },
                (true, None) => {
                    return Err(MalformedInput::new(
                        format!("hcomp1[({g}, {f})]"),
                        "missing entry for composable pair",
                    ))
                }
                (false, Some(_)) => {
                    return Err(MalformedInput::new(
                        format!("hcomp1[({g}, {f})]"),
                        "entry for a non-composable pair",
                    ))
                }
                (false, None) => {}
            }
        }
    }
    for (g, f) in b.hcomp1.keys() {
        if !idx.one.contains_key(g) || !idx.one.contains_key(f) {
            return Err(MalformedInput::new(
                format!("hcomp1[({g}, {f})]"),
                "key references a dangling 1-cell",
            ));
        }
    }

    // hcomp2 defined exactly on horizontally composable pairs of 2-cells.
    for (beta, (b_src, b_tgt)) in &idx.two {
        let (bs_obj, _) = idx
            .one
            .get(b_src)
            .ok_or_else(|| MalformedInput::new(format!("2-cell {beta}"), "dangling boundary"))?;
        for (alpha, (a_src, a_tgt)) in &idx.two {
            let (_, at_obj) = idx.one.get(a_src).ok_or_else(|| {
                MalformedInput::new(format!("2-cell {alpha}"), "dangling boundary")
            })?;
            let key = (beta.clone(), alpha.clone());
            let composable = at_obj == bs_obj;
            match (composable, b.hcomp2.get(&key)) {
                (true, Some(res)) => {
                    let expected_src = b.hcomp1.get(&(b_src.clone(), a_src.clone()));
                    let expected_tgt = b.hcomp1.get(&(b_tgt.clone(), a_tgt.clone()));
                    match (idx.two.get(res), expected_src, expected_tgt) {
                        (Some((rs, rt)), Some(es), Some(et)) if rs == es && rt == et => {}
                        (None, _, _) => {
                            return Err(MalformedInput::new(
                                format!("hcomp2[({beta}, {alpha})]"),
                                format!("dangling 2-cell id {res}"),
                            ))
                        }
                        _ => {
                            return Err(MalformedInput::new(
                                format!("hcomp2[({beta}, {alpha})]"),
                                format!("result {res} has the wrong boundary"),
                            ))
                        }
                    }
                }
                (true, None) => {
                    return Err(MalformedInput::new(
                        format!("hcomp2[({beta}, {alpha})]"),
                        "missing entry for composable pair",
                    ))
                }
                (false, Some(_)) => {
                    return Err(MalformedInput::new(
                        format!("hcomp2[({beta}, {alpha})]"),
                        "entry for a non-composable pair",
                    ))
                }
                (false, None) => {}
            }
        }
    }

    // Associator tables on exactly the composable triples.
    let mut expected_triples = BTreeMap::new();
    for (h, (hs, _)) in &idx.one {
        for (g, (gs, gt)) in &idx.one {
            if gt != hs {
                continue;
            }
            for (f, (_, ft)) in &idx.one {
                if ft == gs {
                    expected_triples.insert((h.clone(), g.clone(), f.clone()), ());
                }
            }
        }
    }
    for (table, name, forward) in [
        (&b.assoc, "assoc", true),
        (&b.assoc_inv, "assoc_inv", false),
    ] {
        for key in expected_triples.keys() {
            let (h, g, f) = key;
            let a = table.get(key).ok_or_else(|| {
                MalformedInput::new(
                    format!("{name}[({h}, {g}, {f})]"),
                    "missing entry for composable triple",
                )
            })?;
            let hg = &b.hcomp1[&(h.clone(), g.clone())];
            let gf = &b.hcomp1[&(g.clone(), f.clone())];
            let left = &b.hcomp1[&(hg.clone(), f.clone())];
            let right = &b.hcomp1[&(h.clone(), gf.clone())];
            let (want_s, want_t) = if forward { (left, right) } else { (right, left) };
            match idx.two.get(a) {
                Some((s, t)) if s == want_s && t == want_t => {}
                Some(_) => {
                    return Err(MalformedInput::new(
                        format!("{name}[({h}, {g}, {f})]"),
                        format!("component {a} has the wrong boundary"),
                    ))
                }
                None => {
                    return Err(MalformedInput::new(
                        format!("{name}[({h}, {g}, {f})]"),
                        format!("dangling 2-cell id {a}"),
                    ))
                }
            }
        }
        for key in table.keys() {
            if !expected_triples.contains_key(key) {
                let (h, g, f) = key;
                return Err(MalformedInput::new(
                    format!("{name}[({h}, {g}, {f})]"),
                    "entry for a non-composable triple",
                ));
            }
        }
    }

    // Unitor tables total over all 1-cells.
    for (f, (x, y)) in &idx.one {
        let id_y = &b.id1[y];
        let id_x = &b.id1[x];
        let lsrc = &b.hcomp1[&(id_y.clone(), f.clone())];
        let rsrc = &b.hcomp1[&(f.clone(), id_x.clone())];
        for (table, name, want_s, want_t) in [
            (&b.lunit, "lunit", lsrc, f),
            (&b.lunit_inv, "lunit_inv", f, lsrc),
            (&b.runit, "runit", rsrc, f),
            (&b.runit_inv, "runit_inv", f, rsrc),
        ] {
            let c = table.get(f).ok_or_else(|| {
                MalformedInput::new(format!("{name}[{f}]"), "missing entry")
            })?;
            match idx.two.get(c) {
                Some((s, t)) if s == want_s && t == want_t => {}
                Some(_) => {
                    return Err(MalformedInput::new(
                        format!("{name}[{f}]"),
                        format!("component {c} has the wrong boundary"),
                    ))
                }
                None => {
                    return Err(MalformedInput::new(
                        format!("{name}[{f}]"),
                        format!("dangling 2-cell id {c}"),
                    ))
                }
            }
        }
    }
    for table in [&b.lunit, &b.lunit_inv, &b.runit, &b.runit_inv] {
        for f in table.keys() {
            if !idx.one.contains_key(f) {
                return Err(MalformedInput::new(
                    format!("unitor[{f}]"),
                    "key is not a declared 1-cell",
                ));
            }
        }
    }

    Ok(())
}
