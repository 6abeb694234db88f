//! Table-driven finite bicategories.
//!
//! All composition is given by explicit finite tables, so every axiom is
//! decidable by enumeration. Values are plain data: constructing one makes no
//! promises, [`crate::validate::validate_bicategory`] is the arbiter.

use std::collections::{BTreeMap, BTreeSet};

use crate::cell::CellId;
use crate::report::MalformedInput;

/// The category of 1-cells and 2-cells between one ordered pair of objects.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HomCategory {
    /// 1-cells of this hom.
    pub one_cells: BTreeSet<CellId>,
    /// 2-cells with their (source 1-cell, target 1-cell) boundary.
    pub two_cells: BTreeMap<CellId, (CellId, CellId)>,
    /// Vertical composition: `(later, earlier) -> later . earlier`.
    pub vcomp: BTreeMap<(CellId, CellId), CellId>,
    /// Identity 2-cell of each 1-cell.
    pub id2: BTreeMap<CellId, CellId>,
}

impl HomCategory {
    /// 2-cells from `p` to `q`, in canonical order.
    pub fn two_cells_between(&self, p: &CellId, q: &CellId) -> Vec<CellId> {
        self.two_cells
            .iter()
            .filter(|(_, (s, t))| s == p && t == q)
            .map(|(id, _)| id.clone())
            .collect()
    }
}

/// A finite bicategory candidate: objects, hom-categories, and all structure
/// tables, including the inverse tables for the constraint cells.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FiniteBicategory {
    pub objects: BTreeSet<CellId>,
    /// Hom-categories keyed by (source object, target object). A missing key
    /// is an empty hom-category.
    pub homs: BTreeMap<(CellId, CellId), HomCategory>,
    /// Identity 1-cell of each object.
    pub id1: BTreeMap<CellId, CellId>,
    /// Horizontal composition of 1-cells: `(g, f) -> g . f`.
    pub hcomp1: BTreeMap<(CellId, CellId), CellId>,
    /// Horizontal composition of 2-cells: `(beta, alpha) -> beta * alpha`.
    pub hcomp2: BTreeMap<(CellId, CellId), CellId>,
    /// Associator components `(h, g, f) -> a: (hg)f => h(gf)`.
    pub assoc: BTreeMap<(CellId, CellId, CellId), CellId>,
    pub assoc_inv: BTreeMap<(CellId, CellId, CellId), CellId>,
    /// Left unitor `f -> l_f: 1_Y . f => f`.
    pub lunit: BTreeMap<CellId, CellId>,
    pub lunit_inv: BTreeMap<CellId, CellId>,
    /// Right unitor `f -> r_f: f . 1_X => f`.
    pub runit: BTreeMap<CellId, CellId>,
    pub runit_inv: BTreeMap<CellId, CellId>,
}

impl FiniteBicategory {
    pub fn hom(&self, x: &CellId, y: &CellId) -> Option<&HomCategory> {
        self.homs.get(&(x.clone(), y.clone()))
    }

    /// Source and target objects of a 1-cell.
    pub fn one_cell_boundary(&self, f: &CellId) -> Option<(&CellId, &CellId)> {
        self.homs
            .iter()
            .find(|(_, h)| h.one_cells.contains(f))
            .map(|((x, y), _)| (x, y))
    }

    /// Source and target 1-cells of a 2-cell.
    pub fn two_cell_boundary(&self, a: &CellId) -> Option<(&CellId, &CellId)> {
        self.homs
            .values()
            .find_map(|h| h.two_cells.get(a))
            .map(|(s, t)| (s, t))
    }

    /// The hom-category containing a given 2-cell.
    pub fn hom_of_two_cell(&self, a: &CellId) -> Option<(&(CellId, CellId), &HomCategory)> {
        self.homs.iter().find(|(_, h)| h.two_cells.contains_key(a))
    }

    /// The hom-category containing a given 1-cell.
    pub fn hom_of_one_cell(&self, f: &CellId) -> Option<(&(CellId, CellId), &HomCategory)> {
        self.homs.iter().find(|(_, h)| h.one_cells.contains(f))
    }

    pub fn id2_of(&self, f: &CellId) -> Option<&CellId> {
        self.homs.values().find_map(|h| h.id2.get(f))
    }

    /// Vertical composite `later . earlier` by table lookup.
    pub fn vertical(&self, later: &CellId, earlier: &CellId) -> Option<&CellId> {
        self.homs
            .values()
            .find_map(|h| h.vcomp.get(&(later.clone(), earlier.clone())))
    }

    pub fn horizontal1(&self, g: &CellId, f: &CellId) -> Option<&CellId> {
        self.hcomp1.get(&(g.clone(), f.clone()))
    }

    pub fn horizontal2(&self, beta: &CellId, alpha: &CellId) -> Option<&CellId> {
        self.hcomp2.get(&(beta.clone(), alpha.clone()))
    }

    pub fn all_one_cells(&self) -> impl Iterator<Item = &CellId> {
        self.homs.values().flat_map(|h| h.one_cells.iter())
    }

    pub fn all_two_cells(&self) -> impl Iterator<Item = &CellId> {
        self.homs.values().flat_map(|h| h.two_cells.keys())
    }

    /// 2-cells from `p` to `q` (1-cells in the same hom), canonical order.
    pub fn two_cells_between(&self, p: &CellId, q: &CellId) -> Vec<CellId> {
        match self.hom_of_one_cell(p) {
            Some((_, h)) => h.two_cells_between(p, q),
            None => Vec::new(),
        }
    }

    /// The vertical inverse of a 2-cell, if one exists.
    pub fn inverse_two_cell(&self, a: &CellId) -> Option<CellId> {
        let (_, h) = self.hom_of_two_cell(a)?;
        let (src, tgt) = h.two_cells.get(a)?;
        let id_src = h.id2.get(src)?;
        let id_tgt = h.id2.get(tgt)?;
        h.two_cells_between(tgt, src).into_iter().find(|b| {
            h.vcomp.get(&(b.clone(), a.clone())) == Some(id_src)
                && h.vcomp.get(&(a.clone(), b.clone())) == Some(id_tgt)
        })
    }

    pub fn is_invertible_two_cell(&self, a: &CellId) -> bool {
        self.inverse_two_cell(a).is_some()
    }

    /// Whether a 2-cell is the identity 2-cell of its (necessarily shared)
    /// source and target 1-cell.
    pub fn is_identity_two_cell(&self, a: &CellId) -> bool {
        match self.two_cell_boundary(a) {
            Some((s, t)) if s == t => self.id2_of(s) == Some(a),
            _ => false,
        }
    }
}

/// Boundary lookup tables built once per validation or evaluation pass.
#[derive(Debug, Clone)]
pub struct CellIndex {
    /// 1-cell -> (source object, target object).
    pub one: BTreeMap<CellId, (CellId, CellId)>,
    /// 2-cell -> (source 1-cell, target 1-cell).
    pub two: BTreeMap<CellId, (CellId, CellId)>,
}

impl CellIndex {
    /// Build the index, rejecting ids reused across homs within one kind.
    pub fn build(b: &FiniteBicategory) -> Result<CellIndex, MalformedInput> {
        let mut one = BTreeMap::new();
        let mut two = BTreeMap::new();
        for ((x, y), hom) in &b.homs {
            for f in &hom.one_cells {
                if f.is_empty() {
                    return Err(MalformedInput::new(
                        format!("hom ({x}, {y})"),
                        "empty 1-cell name",
                    ));
                }
                if one.insert(f.clone(), (x.clone(), y.clone())).is_some() {
                    return Err(MalformedInput::new(
                        format!("hom ({x}, {y})"),
                        format!("1-cell id {f} is declared in more than one hom"),
                    ));
                }
            }
            for (a, (s, t)) in &hom.two_cells {
                if a.is_empty() {
                    return Err(MalformedInput::new(
                        format!("hom ({x}, {y})"),
                        "empty 2-cell name",
                    ));
                }
                if two.insert(a.clone(), (s.clone(), t.clone())).is_some() {
                    return Err(MalformedInput::new(
                        format!("hom ({x}, {y})"),
                        format!("2-cell id {a} is declared in more than one hom"),
                    ));
                }
            }
        }
        Ok(CellIndex { one, two })
    }

    pub fn one_boundary(&self, f: &CellId) -> Result<&(CellId, CellId), MalformedInput> {
        self.one
            .get(f)
            .ok_or_else(|| MalformedInput::new(format!("1-cell {f}"), "unknown 1-cell"))
    }

    pub fn two_boundary(&self, a: &CellId) -> Result<&(CellId, CellId), MalformedInput> {
        self.two
            .get(a)
            .ok_or_else(|| MalformedInput::new(format!("2-cell {a}"), "unknown 2-cell"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny() -> FiniteBicategory {
        // One object, one (identity) 1-cell, one identity 2-cell.
        let mut b = FiniteBicategory::default();
        let x: CellId = "x".into();
        let f: CellId = "f".into();
        let i: CellId = "i".into();
        b.objects.insert(x.clone());
        let mut hom = HomCategory::default();
        hom.one_cells.insert(f.clone());
        hom.two_cells.insert(i.clone(), (f.clone(), f.clone()));
        hom.vcomp.insert((i.clone(), i.clone()), i.clone());
        hom.id2.insert(f.clone(), i.clone());
        b.homs.insert((x.clone(), x.clone()), hom);
        b.id1.insert(x.clone(), f.clone());
        b.hcomp1.insert((f.clone(), f.clone()), f.clone());
        b.hcomp2.insert((i.clone(), i.clone()), i.clone());
        b.assoc.insert((f.clone(), f.clone(), f.clone()), i.clone());
        b.assoc_inv.insert((f.clone(), f.clone(), f.clone()), i.clone());
        b.lunit.insert(f.clone(), i.clone());
        b.lunit_inv.insert(f.clone(), i.clone());
        b.runit.insert(f.clone(), i.clone());
        b.runit_inv.insert(f, i);
        b
    }

    #[test]
    fn boundary_lookups() {
        let b = tiny();
        let (s, t) = b.one_cell_boundary(&"f".into()).unwrap();
        assert_eq!((s.as_str(), t.as_str()), ("x", "x"));
        let (s, t) = b.two_cell_boundary(&"i".into()).unwrap();
        assert_eq!((s.as_str(), t.as_str()), ("f", "f"));
        assert!(b.is_identity_two_cell(&"i".into()));
        assert!(b.is_invertible_two_cell(&"i".into()));
    }

    #[test]
    fn index_rejects_duplicate_ids() {
        let mut b = tiny();
        // Second object with a hom reusing the 1-cell id "f".
        let y: CellId = "y".into();
        b.objects.insert(y.clone());
        let mut hom = HomCategory::default();
        hom.one_cells.insert("f".into());
        b.homs.insert((y.clone(), y), hom);
        assert!(CellIndex::build(&b).is_err());
    }
}
