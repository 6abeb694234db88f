//! A 2-cell expression language and evaluator.
//!
//! Every pasting equality becomes a decidable comparison: build the two
//! explicitly parenthesized composites as [`TwoCellExpr`] trees and compare
//! their evaluations. Boundaries are computable without evaluation.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::bicategory::{CellIndex, FiniteBicategory};
use crate::cell::CellId;
use crate::report::MalformedInput;

/// Expression tree over named 2-cells, constraint-cell components, and the
/// vertical/horizontal/whiskering combinators.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TwoCellExpr {
    /// A named 2-cell.
    Cell(CellId),
    /// Identity 2-cell of a 1-cell.
    Id2(CellId),
    /// Associator component `a_{h,g,f}: (hg)f => h(gf)`.
    Assoc(CellId, CellId, CellId),
    AssocInv(CellId, CellId, CellId),
    /// Left unitor `l_f: 1_Y f => f`.
    LUnit(CellId),
    LUnitInv(CellId),
    /// Right unitor `r_f: f 1_X => f`.
    RUnit(CellId),
    RUnitInv(CellId),
    /// Vertical composite; the second argument is applied first.
    VComp(Box<TwoCellExpr>, Box<TwoCellExpr>),
    /// Horizontal composite `e2 * e1`.
    HComp(Box<TwoCellExpr>, Box<TwoCellExpr>),
    /// `1_h * e`.
    WhiskerLeft(CellId, Box<TwoCellExpr>),
    /// `e * 1_h`.
    WhiskerRight(Box<TwoCellExpr>, CellId),
}

impl TwoCellExpr {
    pub fn cell(id: impl Into<CellId>) -> Self {
        TwoCellExpr::Cell(id.into())
    }

    pub fn id2(f: impl Into<CellId>) -> Self {
        TwoCellExpr::Id2(f.into())
    }

    pub fn assoc(h: impl Into<CellId>, g: impl Into<CellId>, f: impl Into<CellId>) -> Self {
        TwoCellExpr::Assoc(h.into(), g.into(), f.into())
    }

    pub fn assoc_inv(h: impl Into<CellId>, g: impl Into<CellId>, f: impl Into<CellId>) -> Self {
        TwoCellExpr::AssocInv(h.into(), g.into(), f.into())
    }

    pub fn lunit(f: impl Into<CellId>) -> Self {
        TwoCellExpr::LUnit(f.into())
    }

    pub fn lunit_inv(f: impl Into<CellId>) -> Self {
        TwoCellExpr::LUnitInv(f.into())
    }

    pub fn runit(f: impl Into<CellId>) -> Self {
        TwoCellExpr::RUnit(f.into())
    }

    pub fn runit_inv(f: impl Into<CellId>) -> Self {
        TwoCellExpr::RUnitInv(f.into())
    }

    pub fn vcomp(later: TwoCellExpr, earlier: TwoCellExpr) -> Self {
        TwoCellExpr::VComp(Box::new(later), Box::new(earlier))
    }

    pub fn hcomp(second: TwoCellExpr, first: TwoCellExpr) -> Self {
        TwoCellExpr::HComp(Box::new(second), Box::new(first))
    }

    pub fn whisker_left(h: impl Into<CellId>, e: TwoCellExpr) -> Self {
        TwoCellExpr::WhiskerLeft(h.into(), Box::new(e))
    }

    pub fn whisker_right(e: TwoCellExpr, h: impl Into<CellId>) -> Self {
        TwoCellExpr::WhiskerRight(Box::new(e), h.into())
    }

    /// Vertical composite of `steps` applied first-to-last.
    ///
    /// Panics on an empty chain; callers always have at least one step.
    pub fn chain(steps: impl IntoIterator<Item = TwoCellExpr>) -> Self {
        let mut iter = steps.into_iter();
        let first = iter.next().expect("chain of at least one step");
        iter.fold(first, |acc, next| TwoCellExpr::vcomp(next, acc))
    }
}

impl fmt::Display for TwoCellExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TwoCellExpr::Cell(c) => write!(f, "{c}"),
            TwoCellExpr::Id2(c) => write!(f, "id2({c})"),
            TwoCellExpr::Assoc(h, g, x) => write!(f, "a({h}, {g}, {x})"),
            TwoCellExpr::AssocInv(h, g, x) => write!(f, "a_inv({h}, {g}, {x})"),
            TwoCellExpr::LUnit(c) => write!(f, "l({c})"),
            TwoCellExpr::LUnitInv(c) => write!(f, "l_inv({c})"),
            TwoCellExpr::RUnit(c) => write!(f, "r({c})"),
            TwoCellExpr::RUnitInv(c) => write!(f, "r_inv({c})"),
            TwoCellExpr::VComp(a, b) => write!(f, "vcomp({a}, {b})"),
            TwoCellExpr::HComp(a, b) => write!(f, "hcomp({a}, {b})"),
            TwoCellExpr::WhiskerLeft(h, e) => write!(f, "wl({h}, {e})"),
            TwoCellExpr::WhiskerRight(e, h) => write!(f, "wr({e}, {h})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CalculusError {
    #[error("unknown cell {id}")]
    UnknownCell { id: CellId },
    #[error("ill-typed subexpression {expr}: {detail}")]
    IllTyped { expr: String, detail: String },
    #[error(transparent)]
    Malformed(#[from] MalformedInput),
}

/// Evaluator over one bicategory, with the boundary index built once.
pub struct Evaluator<'a> {
    b: &'a FiniteBicategory,
    idx: CellIndex,
}

impl<'a> Evaluator<'a> {
    pub fn new(b: &'a FiniteBicategory) -> Result<Self, CalculusError> {
        Ok(Evaluator {
            b,
            idx: CellIndex::build(b)?,
        })
    }

    pub fn bicategory(&self) -> &FiniteBicategory {
        self.b
    }

    fn ill<T>(e: &TwoCellExpr, detail: impl Into<String>) -> Result<T, CalculusError> {
        Err(CalculusError::IllTyped {
            expr: e.to_string(),
            detail: detail.into(),
        })
    }

    fn one_boundary(&self, f: &CellId) -> Result<(CellId, CellId), CalculusError> {
        match self.idx.one.get(f) {
            Some((s, t)) => Ok((s.clone(), t.clone())),
            None => Err(CalculusError::UnknownCell { id: f.clone() }),
        }
    }

    fn h1(&self, e: &TwoCellExpr, g: &CellId, f: &CellId) -> Result<CellId, CalculusError> {
        let (_, ft) = self.one_boundary(f)?;
        let (gs, _) = self.one_boundary(g)?;
        if ft != gs {
            return Self::ill(e, format!("1-cells {g} and {f} are not composable"));
        }
        match self.b.horizontal1(g, f) {
            Some(c) => Ok(c.clone()),
            None => Err(CalculusError::Malformed(MalformedInput::new(
                format!("hcomp1[({g}, {f})]"),
                "missing entry",
            ))),
        }
    }

    fn id1(&self, e: &TwoCellExpr, x: &CellId) -> Result<CellId, CalculusError> {
        match self.b.id1.get(x) {
            Some(f) => Ok(f.clone()),
            None => Self::ill(e, format!("object {x} has no identity 1-cell")),
        }
    }

    /// Source and target 1-cells, computable without evaluation.
    pub fn boundary(&self, e: &TwoCellExpr) -> Result<(CellId, CellId), CalculusError> {
        match e {
            TwoCellExpr::Cell(c) => match self.idx.two.get(c) {
                Some((s, t)) => Ok((s.clone(), t.clone())),
                None => Err(CalculusError::UnknownCell { id: c.clone() }),
            },
            TwoCellExpr::Id2(f) => {
                self.one_boundary(f)?;
                Ok((f.clone(), f.clone()))
            }
            TwoCellExpr::Assoc(h, g, f) | TwoCellExpr::AssocInv(h, g, f) => {
                let hg = self.h1(e, h, g)?;
                let gf = self.h1(e, g, f)?;
                let left = self.h1(e, &hg, f)?;
                let right = self.h1(e, h, &gf)?;
                match e {
                    TwoCellExpr::Assoc(..) => Ok((left, right)),
                    _ => Ok((right, left)),
                }
            }
            TwoCellExpr::LUnit(f) | TwoCellExpr::LUnitInv(f) => {
                let (_, y) = self.one_boundary(f)?;
                let idy = self.id1(e, &y)?;
                let src = self.h1(e, &idy, f)?;
                match e {
                    TwoCellExpr::LUnit(_) => Ok((src, f.clone())),
                    _ => Ok((f.clone(), src)),
                }
            }
            TwoCellExpr::RUnit(f) | TwoCellExpr::RUnitInv(f) => {
                let (x, _) = self.one_boundary(f)?;
                let idx = self.id1(e, &x)?;
                let src = self.h1(e, f, &idx)?;
                match e {
                    TwoCellExpr::RUnit(_) => Ok((src, f.clone())),
                    _ => Ok((f.clone(), src)),
                }
            }
            TwoCellExpr::VComp(later, earlier) => {
                let (s1, t1) = self.boundary(earlier)?;
                let (s2, t2) = self.boundary(later)?;
                if t1 != s2 {
                    return Self::ill(
                        e,
                        format!("vertical composite boundary mismatch: {t1} vs {s2}"),
                    );
                }
                Ok((s1, t2))
            }
            TwoCellExpr::HComp(second, first) => {
                let (s1, t1) = self.boundary(first)?;
                let (s2, t2) = self.boundary(second)?;
                Ok((self.h1(e, &s2, &s1)?, self.h1(e, &t2, &t1)?))
            }
            TwoCellExpr::WhiskerLeft(h, inner) => {
                let (s, t) = self.boundary(inner)?;
                Ok((self.h1(e, h, &s)?, self.h1(e, h, &t)?))
            }
            TwoCellExpr::WhiskerRight(inner, h) => {
                let (s, t) = self.boundary(inner)?;
                Ok((self.h1(e, &s, h)?, self.h1(e, &t, h)?))
            }
        }
    }

    fn id2(&self, e: &TwoCellExpr, f: &CellId) -> Result<CellId, CalculusError> {
        self.one_boundary(f)?;
        match self.b.id2_of(f) {
            Some(c) => Ok(c.clone()),
            None => Self::ill(e, format!("1-cell {f} has no identity 2-cell")),
        }
    }

    fn table2<K: Ord>(
        table: &BTreeMap<K, CellId>,
        key: K,
        site: String,
    ) -> Result<CellId, CalculusError> {
        match table.get(&key) {
            Some(c) => Ok(c.clone()),
            None => Err(CalculusError::Malformed(MalformedInput::new(
                site,
                "missing entry",
            ))),
        }
    }

    /// Evaluate a well-typed expression to a concrete 2-cell by table lookups.
    pub fn eval(&self, e: &TwoCellExpr) -> Result<CellId, CalculusError> {
        // Type-check first so errors are reported against the expression.
        self.boundary(e)?;
        self.eval_unchecked(e)
    }

    fn eval_unchecked(&self, e: &TwoCellExpr) -> Result<CellId, CalculusError> {
        match e {
            TwoCellExpr::Cell(c) => Ok(c.clone()),
            TwoCellExpr::Id2(f) => self.id2(e, f),
            TwoCellExpr::Assoc(h, g, f) => Self::table2(
                &self.b.assoc,
                (h.clone(), g.clone(), f.clone()),
                format!("assoc[({h}, {g}, {f})]"),
            ),
            TwoCellExpr::AssocInv(h, g, f) => Self::table2(
                &self.b.assoc_inv,
                (h.clone(), g.clone(), f.clone()),
                format!("assoc_inv[({h}, {g}, {f})]"),
            ),
            TwoCellExpr::LUnit(f) => {
                Self::table2(&self.b.lunit, f.clone(), format!("lunit[{f}]"))
            }
            TwoCellExpr::LUnitInv(f) => {
                Self::table2(&self.b.lunit_inv, f.clone(), format!("lunit_inv[{f}]"))
            }
            TwoCellExpr::RUnit(f) => {
                Self::table2(&self.b.runit, f.clone(), format!("runit[{f}]"))
            }
            TwoCellExpr::RUnitInv(f) => {
                Self::table2(&self.b.runit_inv, f.clone(), format!("runit_inv[{f}]"))
            }
            TwoCellExpr::VComp(later, earlier) => {
                let l = self.eval_unchecked(later)?;
                let r = self.eval_unchecked(earlier)?;
                match self.b.vertical(&l, &r) {
                    Some(c) => Ok(c.clone()),
                    None => Err(CalculusError::Malformed(MalformedInput::new(
                        format!("vcomp[({l}, {r})]"),
                        "missing entry",
                    ))),
                }
            }
            TwoCellExpr::HComp(second, first) => {
                let s = self.eval_unchecked(second)?;
                let f = self.eval_unchecked(first)?;
                match self.b.horizontal2(&s, &f) {
                    Some(c) => Ok(c.clone()),
                    None => Err(CalculusError::Malformed(MalformedInput::new(
                        format!("hcomp2[({s}, {f})]"),
                        "missing entry",
                    ))),
                }
            }
            TwoCellExpr::WhiskerLeft(h, inner) => {
                let i = self.eval_unchecked(inner)?;
                let idh = self.id2(e, h)?;
                match self.b.horizontal2(&idh, &i) {
                    Some(c) => Ok(c.clone()),
                    None => Err(CalculusError::Malformed(MalformedInput::new(
                        format!("hcomp2[({idh}, {i})]"),
                        "missing entry",
                    ))),
                }
            }
            TwoCellExpr::WhiskerRight(inner, h) => {
                let i = self.eval_unchecked(inner)?;
                let idh = self.id2(e, h)?;
                match self.b.horizontal2(&i, &idh) {
                    Some(c) => Ok(c.clone()),
                    None => Err(CalculusError::Malformed(MalformedInput::new(
                        format!("hcomp2[({i}, {idh})]"),
                        "missing entry",
                    ))),
                }
            }
        }
    }
}

/// Boundary of `e` in `b`; see [`Evaluator::boundary`].
pub fn boundary(
    b: &FiniteBicategory,
    e: &TwoCellExpr,
) -> Result<(CellId, CellId), CalculusError> {
    Evaluator::new(b)?.boundary(e)
}

/// Evaluate `e` in `b`; see [`Evaluator::eval`].
pub fn eval(b: &FiniteBicategory, e: &TwoCellExpr) -> Result<CellId, CalculusError> {
    Evaluator::new(b)?.eval(e)
}

/// A pair of parallel constraint-cell composites that evaluated differently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoherenceDiscrepancy {
    pub from: String,
    pub to: String,
    pub lhs: CellId,
    pub rhs: CellId,
}

/// Formal parenthesized composite of generating 1-cells and unit insertions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
enum Tree {
    Gen(CellId),
    Unit(CellId),
    Pair(Box<Tree>, Box<Tree>),
}

impl Tree {
    fn gen_leaves(&self) -> usize {
        match self {
            Tree::Gen(_) => 1,
            Tree::Unit(_) => 0,
            Tree::Pair(a, b) => a.gen_leaves() + b.gen_leaves(),
        }
    }

    fn leaves(&self) -> usize {
        match self {
            Tree::Gen(_) | Tree::Unit(_) => 1,
            Tree::Pair(a, b) => a.leaves() + b.leaves(),
        }
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tree::Gen(c) => write!(f, "{c}"),
            Tree::Unit(x) => write!(f, "1[{x}]"),
            Tree::Pair(a, b) => write!(f, "({a} . {b})"),
        }
    }
}

struct Smoke<'a> {
    ev: Evaluator<'a>,
}

impl<'a> Smoke<'a> {
    fn eval_tree(&self, t: &Tree) -> Result<(CellId, CellId, CellId), CalculusError> {
        // (1-cell, source object, target object)
        match t {
            Tree::Gen(f) => {
                let (s, tt) = self.ev.one_boundary(f)?;
                Ok((f.clone(), s, tt))
            }
            Tree::Unit(x) => match self.ev.b.id1.get(x) {
                Some(f) => Ok((f.clone(), x.clone(), x.clone())),
                None => Err(CalculusError::UnknownCell { id: x.clone() }),
            },
            Tree::Pair(a, b) => {
                let (fa, sa, ta) = self.eval_tree(a)?;
                let (fb, sb, tb) = self.eval_tree(b)?;
                if tb != sa {
                    return Err(CalculusError::IllTyped {
                        expr: t.to_string(),
                        detail: format!("factors {fa} and {fb} are not composable"),
                    });
                }
                match self.ev.b.horizontal1(&fa, &fb) {
                    Some(c) => Ok((c.clone(), sb, ta)),
                    None => Err(CalculusError::Malformed(MalformedInput::new(
                        format!("hcomp1[({fa}, {fb})]"),
                        "missing entry",
                    ))),
                }
            }
        }
    }

    /// Single constraint moves out of `t`, each with its realizing expression.
    fn moves(&self, t: &Tree, max_leaves: usize) -> Result<Vec<(Tree, TwoCellExpr)>, CalculusError> {
        let mut out = Vec::new();
        // Root moves.
        if let Tree::Pair(l, r) = t {
            if let Tree::Pair(a, b) = &**l {
                // ((a b) r) => (a (b r))
                let (fa, ..) = self.eval_tree(a)?;
                let (fb, ..) = self.eval_tree(b)?;
                let (fr, ..) = self.eval_tree(r)?;
                out.push((
                    Tree::Pair(a.clone(), Box::new(Tree::Pair(b.clone(), Box::new((**r).clone())))),
                    TwoCellExpr::assoc(fa, fb, fr),
                ));
            }
            if let Tree::Pair(b, c) = &**r {
                // (l (b c)) => ((l b) c)
                let (fl, ..) = self.eval_tree(l)?;
                let (fb, ..) = self.eval_tree(b)?;
                let (fc, ..) = self.eval_tree(c)?;
                out.push((
                    Tree::Pair(Box::new(Tree::Pair(l.clone(), b.clone())), c.clone()),
                    TwoCellExpr::assoc_inv(fl, fb, fc),
                ));
            }
            if matches!(&**l, Tree::Unit(_)) {
                let (fr, ..) = self.eval_tree(r)?;
                out.push(((**r).clone(), TwoCellExpr::lunit(fr)));
            }
            if matches!(&**r, Tree::Unit(_)) {
                let (fl, ..) = self.eval_tree(l)?;
                out.push(((**l).clone(), TwoCellExpr::runit(fl)));
            }
            // Congruence: rewrite inside either factor, whiskered by the other.
            let (fl, ..) = self.eval_tree(l)?;
            let (fr, ..) = self.eval_tree(r)?;
            for (l2, e) in self.moves(l, max_leaves.saturating_sub(r.leaves()))? {
                out.push((
                    Tree::Pair(Box::new(l2), r.clone()),
                    TwoCellExpr::whisker_right(e, fr.clone()),
                ));
            }
            for (r2, e) in self.moves(r, max_leaves.saturating_sub(l.leaves()))? {
                out.push((
                    Tree::Pair(l.clone(), Box::new(r2)),
                    TwoCellExpr::whisker_left(fl.clone(), e),
                ));
            }
        }
        // Unit insertions, bounded by the leaf cap.
        if t.leaves() < max_leaves {
            let (ft, s, tt) = self.eval_tree(t)?;
            out.push((
                Tree::Pair(Box::new(Tree::Unit(tt)), Box::new(t.clone())),
                TwoCellExpr::lunit_inv(ft.clone()),
            ));
            out.push((
                Tree::Pair(Box::new(t.clone()), Box::new(Tree::Unit(s))),
                TwoCellExpr::runit_inv(ft),
            ));
        }
        Ok(out)
    }
}

/// Coherence smoke test: enumerate all formal composites of at most
/// `max_generators` generating 1-cells (allowing unit insertions up to
/// `max_leaves` total leaves), connect them by single constraint moves, and
/// check that any two parallel move paths evaluate to the same 2-cell.
///
/// Returns the discrepancies found; an accepted bicategory yields none.
pub fn constraint_coherence_check(
    b: &FiniteBicategory,
    max_generators: usize,
    max_leaves: usize,
) -> Result<Vec<CoherenceDiscrepancy>, CalculusError> {
    let smoke = Smoke {
        ev: Evaluator::new(b)?,
    };
    // Enumerate trees by leaf count.
    let mut by_size: Vec<Vec<Tree>> = vec![Vec::new(); max_leaves + 1];
    if max_leaves >= 1 {
        for f in b.all_one_cells() {
            by_size[1].push(Tree::Gen(f.clone()));
        }
        for x in &b.objects {
            by_size[1].push(Tree::Unit(x.clone()));
        }
    }
    for size in 2..=max_leaves {
        let mut level = Vec::new();
        for left_size in 1..size {
            let right_size = size - left_size;
            for l in &by_size[left_size] {
                for r in &by_size[right_size] {
                    if l.gen_leaves() + r.gen_leaves() > max_generators {
                        continue;
                    }
                    let (_, ls, _) = match smoke.eval_tree(l) {
                        Ok(v) => v,
                        Err(_) => continue,
                    };
                    let (_, _, rt) = match smoke.eval_tree(r) {
                        Ok(v) => v,
                        Err(_) => continue,
                    };
                    // The right factor must feed into the left factor.
                    if rt != ls {
                        continue;
                    }
                    level.push(Tree::Pair(Box::new(l.clone()), Box::new(r.clone())));
                }
            }
        }
        by_size[size] = level;
    }
    let mut nodes: BTreeSet<Tree> = BTreeSet::new();
    for level in &by_size {
        for t in level {
            if smoke.eval_tree(t).is_ok() {
                nodes.insert(t.clone());
            }
        }
    }

    let mut discrepancies = Vec::new();
    let mut visited: BTreeSet<Tree> = BTreeSet::new();
    for root in &nodes {
        if visited.contains(root) {
            continue;
        }
        // BFS, assigning each reached tree the evaluation of the discovered
        // path from the root.
        let (root_cell, ..) = smoke.eval_tree(root)?;
        let root_id = match smoke.ev.b.id2_of(&root_cell) {
            Some(c) => c.clone(),
            None => {
                return Err(CalculusError::Malformed(MalformedInput::new(
                    format!("id2[{root_cell}]"),
                    "missing entry",
                )))
            }
        };
        let mut potential: BTreeMap<Tree, CellId> = BTreeMap::new();
        potential.insert(root.clone(), root_id);
        let mut queue = VecDeque::new();
        queue.push_back(root.clone());
        let mut component: Vec<Tree> = vec![root.clone()];
        while let Some(t) = queue.pop_front() {
            let phi_t = potential[&t].clone();
            for (next, edge) in smoke.moves(&t, max_leaves)? {
                if !nodes.contains(&next) {
                    continue;
                }
                let edge_cell = smoke.ev.eval(&edge)?;
                let via = match smoke.ev.b.vertical(&edge_cell, &phi_t) {
                    Some(c) => c.clone(),
                    None => {
                        return Err(CalculusError::Malformed(MalformedInput::new(
                            format!("vcomp[({edge_cell}, {phi_t})]"),
                            "missing entry",
                        )))
                    }
                };
                match potential.get(&next) {
                    Some(expected) => {
                        if expected != &via {
                            discrepancies.push(CoherenceDiscrepancy {
                                from: root.to_string(),
                                to: next.to_string(),
                                lhs: via,
                                rhs: expected.clone(),
                            });
                        }
                    }
                    None => {
                        potential.insert(next.clone(), via);
                        component.push(next.clone());
                        queue.push_back(next);
                    }
                }
            }
        }
        for t in component {
            visited.insert(t);
        }
    }
    discrepancies.sort_by(|a, b| (&a.from, &a.to).cmp(&(&b.from, &b.to)));
    Ok(discrepancies)
}
