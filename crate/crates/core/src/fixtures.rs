//! Deterministic fixture generators used throughout the test suite.
//!
//! Three families: chaotic bicategories (every hom terminal), deloopings of
//! finite monoids (one object, optionally with a thin hom-order), and
//! 2-groups with a prescribed associator cocycle.

use std::collections::{BTreeMap, BTreeSet};

use crate::bicategory::{FiniteBicategory, HomCategory};
use crate::cell::CellId;
use crate::functors::LaxFunctor;
use crate::report::MalformedInput;

/// A finite monoid presented by an explicit multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidTable {
    pub elements: Vec<CellId>,
    pub unit: CellId,
    pub product: BTreeMap<(CellId, CellId), CellId>,
}

impl MonoidTable {
    pub fn new(
        elements: impl IntoIterator<Item = impl Into<CellId>>,
        unit: impl Into<CellId>,
        product: impl IntoIterator<Item = (impl Into<CellId>, impl Into<CellId>, impl Into<CellId>)>,
    ) -> Self {
        MonoidTable {
            elements: elements.into_iter().map(Into::into).collect(),
            unit: unit.into(),
            product: product
                .into_iter()
                .map(|(a, b, c)| ((a.into(), b.into()), c.into()))
                .collect(),
        }
    }

    /// Cyclic group of order `n` with elements `e, g, g2, ...`.
    pub fn cyclic(n: usize) -> Self {
        let name = |i: usize| -> CellId {
            match i {
                0 => "e".into(),
                1 => "g".into(),
                k => format!("g{k}").into(),
            }
        };
        let elements: Vec<CellId> = (0..n).map(name).collect();
        let mut product = BTreeMap::new();
        for i in 0..n {
            for j in 0..n {
                product.insert((name(i), name(j)), name((i + j) % n));
            }
        }
        MonoidTable {
            elements,
            unit: name(0),
            product,
        }
    }

    pub fn mul(&self, a: &CellId, b: &CellId) -> Result<CellId, MalformedInput> {
        self.product
            .get(&(a.clone(), b.clone()))
            .cloned()
            .ok_or_else(|| MalformedInput::new(format!("product[({a}, {b})]"), "missing entry"))
    }

    /// Check totality, closure, associativity, and the declared unit.
    pub fn validate(&self) -> Result<(), MalformedInput> {
        let set: BTreeSet<&CellId> = self.elements.iter().collect();
        if set.len() != self.elements.len() {
            return Err(MalformedInput::new("elements", "duplicate element"));
        }
        if !set.contains(&self.unit) {
            return Err(MalformedInput::new("unit", "unit is not an element"));
        }
        for a in &self.elements {
            if a.is_empty() {
                return Err(MalformedInput::new("elements", "empty element name"));
            }
            for b in &self.elements {
                let ab = self.mul(a, b)?;
                if !set.contains(&ab) {
                    return Err(MalformedInput::new(
                        format!("product[({a}, {b})]"),
                        format!("result {ab} is not an element"),
                    ));
                }
            }
        }
        for (a, b) in self.product.keys() {
            if !set.contains(a) || !set.contains(b) {
                return Err(MalformedInput::new(
                    format!("product[({a}, {b})]"),
                    "key is not an element",
                ));
            }
        }
        for a in &self.elements {
            if self.mul(&self.unit, a)? != *a || self.mul(a, &self.unit)? != *a {
                return Err(MalformedInput::new(
                    format!("unit law at {a}"),
                    "declared unit is not a two-sided unit",
                ));
            }
            for b in &self.elements {
                for c in &self.elements {
                    let lhs = self.mul(&self.mul(a, b)?, c)?;
                    let rhs = self.mul(a, &self.mul(b, c)?)?;
                    if lhs != rhs {
                        return Err(MalformedInput::new(
                            format!("associativity at ({a}, {b}, {c})"),
                            format!("{lhs} != {rhs}"),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// Check the group laws: monoid laws plus two-sided inverses.
    pub fn validate_group(&self) -> Result<(), MalformedInput> {
        self.validate()?;
        for a in &self.elements {
            self.inverse(a)?;
        }
        Ok(())
    }

    pub fn inverse(&self, a: &CellId) -> Result<CellId, MalformedInput> {
        for b in &self.elements {
            if self.mul(a, b)? == self.unit && self.mul(b, a)? == self.unit {
                return Ok(b.clone());
            }
        }
        Err(MalformedInput::new(
            format!("inverse of {a}"),
            "no two-sided inverse",
        ))
    }

    pub fn is_commutative(&self) -> Result<bool, MalformedInput> {
        for a in &self.elements {
            for b in &self.elements {
                if self.mul(a, b)? != self.mul(b, a)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

fn chaotic_object(i: usize) -> CellId {
    format!("o{i}").into()
}

/// The chaotic bicategory on `n` objects: every hom-category is terminal, so
/// all structure is forced and every diagram of 2-cells commutes.
pub fn chaotic(n: usize) -> Result<FiniteBicategory, MalformedInput> {
    if n == 0 {
        return Err(MalformedInput::new("chaotic", "size must be at least 1"));
    }
    let one = |i: usize, j: usize| -> CellId { format!("f{i}_{j}").into() };
    let two = |i: usize, j: usize| -> CellId { format!("s{i}_{j}").into() };
    let mut b = FiniteBicategory::default();
    for i in 0..n {
        b.objects.insert(chaotic_object(i));
        b.id1.insert(chaotic_object(i), one(i, i));
    }
    for i in 0..n {
        for j in 0..n {
            let mut hom = HomCategory::default();
            hom.one_cells.insert(one(i, j));
            hom.two_cells.insert(two(i, j), (one(i, j), one(i, j)));
            hom.vcomp.insert((two(i, j), two(i, j)), two(i, j));
            hom.id2.insert(one(i, j), two(i, j));
            b.homs.insert((chaotic_object(i), chaotic_object(j)), hom);
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                b.hcomp1.insert((one(j, k), one(i, j)), one(i, k));
                b.hcomp2.insert((two(j, k), two(i, j)), two(i, k));
                for l in 0..n {
                    b.assoc
                        .insert((one(k, l), one(j, k), one(i, j)), two(i, l));
                    b.assoc_inv
                        .insert((one(k, l), one(j, k), one(i, j)), two(i, l));
                }
            }
            b.lunit.insert(one(i, j), two(i, j));
            b.lunit_inv.insert(one(i, j), two(i, j));
            b.runit.insert(one(i, j), two(i, j));
            b.runit_inv.insert(one(i, j), two(i, j));
        }
    }
    Ok(b)
}

/// Delooping of a monoid: one object, 1-cells the monoid elements, identity
/// 2-cells only, strict constraint cells.
pub fn deloop_monoid(m: &MonoidTable) -> Result<FiniteBicategory, MalformedInput> {
    deloop_ordered_monoid(m, &BTreeSet::new())
}

/// Delooping of a monoid whose hom-category is the thin category of a partial
/// order on the elements: a unique 2-cell `f => g` exists exactly when
/// `f <= g`. `leq` lists the strict pairs; reflexivity is implicit. The
/// product must be monotone in both arguments.
pub fn deloop_ordered_monoid(
    m: &MonoidTable,
    leq: &BTreeSet<(CellId, CellId)>,
) -> Result<FiniteBicategory, MalformedInput> {
    m.validate()?;
    let set: BTreeSet<&CellId> = m.elements.iter().collect();
    for (a, b) in leq {
        if !set.contains(a) || !set.contains(b) {
            return Err(MalformedInput::new(
                format!("leq ({a}, {b})"),
                "relation references a missing element",
            ));
        }
        if a == b {
            return Err(MalformedInput::new(
                format!("leq ({a}, {b})"),
                "list only strict pairs; reflexivity is implicit",
            ));
        }
    }
    let le = |a: &CellId, b: &CellId| a == b || leq.contains(&(a.clone(), b.clone()));
    // Partial-order laws on the declared pairs.
    for (a, b) in leq {
        if leq.contains(&(b.clone(), a.clone())) {
            return Err(MalformedInput::new(
                format!("leq ({a}, {b})"),
                "antisymmetry fails",
            ));
        }
        for c in &m.elements {
            if le(b, c) && !le(a, c) {
                return Err(MalformedInput::new(
                    format!("leq ({a}, {b}, {c})"),
                    "transitivity fails",
                ));
            }
        }
    }
    // Monotonicity, needed for horizontal composition of 2-cells.
    for a in &m.elements {
        for a1 in &m.elements {
            if !le(a, a1) {
                continue;
            }
            for b in &m.elements {
                for b1 in &m.elements {
                    if le(b, b1) && !le(&m.mul(a, b)?, &m.mul(a1, b1)?) {
                        return Err(MalformedInput::new(
                            format!("monotonicity at ({a}, {b}) <= ({a1}, {b1})"),
                            "product is not monotone",
                        ));
                    }
                }
            }
        }
    }

    let pt: CellId = "pt".into();
    let two = |a: &CellId, b: &CellId| -> CellId {
        if a == b {
            format!("1_{a}").into()
        } else {
            format!("lt_{a}_{b}").into()
        }
    };
    let mut hom = HomCategory::default();
    for a in &m.elements {
        hom.one_cells.insert(a.clone());
        hom.id2.insert(a.clone(), two(a, a));
    }
    let mut pairs = Vec::new();
    for a in &m.elements {
        for b in &m.elements {
            if le(a, b) {
                hom.two_cells.insert(two(a, b), (a.clone(), b.clone()));
                pairs.push((a.clone(), b.clone()));
            }
        }
    }
    for (a, b) in &pairs {
        for (b1, c) in &pairs {
            if b1 == b {
                hom.vcomp
                    .insert((two(b1, c), two(a, b)), two(a, c));
            }
        }
    }
    let mut b = FiniteBicategory::default();
    b.objects.insert(pt.clone());
    b.id1.insert(pt.clone(), m.unit.clone());
    b.homs.insert((pt.clone(), pt), hom);
    for (x, y) in &pairs {
        for (x1, y1) in &pairs {
            b.hcomp2.insert(
                (two(x, y), two(x1, y1)),
                two(&m.mul(x, x1)?, &m.mul(y, y1)?),
            );
        }
    }
    for x in &m.elements {
        for y in &m.elements {
            b.hcomp1.insert((x.clone(), y.clone()), m.mul(x, y)?);
            for z in &m.elements {
                let p = m.mul(&m.mul(x, y)?, z)?;
                b.assoc.insert((x.clone(), y.clone(), z.clone()), two(&p, &p));
                b.assoc_inv
                    .insert((x.clone(), y.clone(), z.clone()), two(&p, &p));
            }
        }
        b.lunit.insert(x.clone(), two(x, x));
        b.lunit_inv.insert(x.clone(), two(x, x));
        b.runit.insert(x.clone(), two(x, x));
        b.runit_inv.insert(x.clone(), two(x, x));
    }
    Ok(b)
}

/// Data for a 2-group fixture: a group of 1-cells, an abelian group of
/// automorphism labels on each 1-cell, and a normalized associator cocycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoGroupData {
    pub group: MonoidTable,
    pub coefficients: MonoidTable,
    /// `(h, g, f) -> label`; missing triples default to the coefficient unit.
    pub cocycle: BTreeMap<(CellId, CellId, CellId), CellId>,
}

impl TwoGroupData {
    pub fn omega(&self, h: &CellId, g: &CellId, f: &CellId) -> CellId {
        self.cocycle
            .get(&(h.clone(), g.clone(), f.clone()))
            .cloned()
            .unwrap_or_else(|| self.coefficients.unit.clone())
    }
}

/// Name of the 2-cell with label `a` on the 1-cell `f` in a 2-group fixture.
pub fn two_group_cell(label: &CellId, f: &CellId) -> CellId {
    format!("{label}@{f}").into()
}

/// Build a 2-group bicategory candidate: one object, 1-cells the elements of
/// `G`, 2-cells `A`-labelled automorphisms of each 1-cell, and associator
/// components given by the cocycle table. Unitors are identities, which is
/// why the cocycle must be normalized. The candidate is always built; whether
/// it is a bicategory (the pentagon, equivalently the 3-cocycle identity) is
/// the validator's verdict.
pub fn two_group(data: &TwoGroupData) -> Result<FiniteBicategory, MalformedInput> {
    data.group.validate_group()?;
    data.coefficients.validate_group()?;
    if !data.coefficients.is_commutative()? {
        return Err(MalformedInput::new(
            "coefficients",
            "coefficient group must be abelian",
        ));
    }
    let g_set: BTreeSet<&CellId> = data.group.elements.iter().collect();
    let a_set: BTreeSet<&CellId> = data.coefficients.elements.iter().collect();
    for ((h, g, f), v) in &data.cocycle {
        if !g_set.contains(h) || !g_set.contains(g) || !g_set.contains(f) {
            return Err(MalformedInput::new(
                format!("cocycle[({h}, {g}, {f})]"),
                "key is not a group triple",
            ));
        }
        if !a_set.contains(v) {
            return Err(MalformedInput::new(
                format!("cocycle[({h}, {g}, {f})]"),
                format!("value {v} is not a coefficient"),
            ));
        }
        let e = &data.group.unit;
        if (h == e || g == e || f == e) && v != &data.coefficients.unit {
            return Err(MalformedInput::new(
                format!("cocycle[({h}, {g}, {f})]"),
                "cocycle is not normalized; unitor tables would be ill-typed",
            ));
        }
    }

    let pt: CellId = "pt".into();
    let cell = two_group_cell;
    let a_unit = &data.coefficients.unit;
    let mut hom = HomCategory::default();
    for f in &data.group.elements {
        hom.one_cells.insert(f.clone());
        hom.id2.insert(f.clone(), cell(a_unit, f));
        for a in &data.coefficients.elements {
            hom.two_cells.insert(cell(a, f), (f.clone(), f.clone()));
            for b in &data.coefficients.elements {
                hom.vcomp.insert(
                    (cell(b, f), cell(a, f)),
                    cell(&data.coefficients.mul(b, a)?, f),
                );
            }
        }
    }
    let mut out = FiniteBicategory::default();
    out.objects.insert(pt.clone());
    out.id1.insert(pt.clone(), data.group.unit.clone());
    out.homs.insert((pt.clone(), pt), hom);
    for g in &data.group.elements {
        for f in &data.group.elements {
            out.hcomp1
                .insert((g.clone(), f.clone()), data.group.mul(g, f)?);
            let gf = data.group.mul(g, f)?;
            for a in &data.coefficients.elements {
                for b in &data.coefficients.elements {
                    out.hcomp2.insert(
                        (cell(b, g), cell(a, f)),
                        cell(&data.coefficients.mul(b, a)?, &gf),
                    );
                }
            }
        }
    }
    for h in &data.group.elements {
        for g in &data.group.elements {
            for f in &data.group.elements {
                let prod = data.group.mul(&data.group.mul(h, g)?, f)?;
                let w = data.omega(h, g, f);
                out.assoc
                    .insert((h.clone(), g.clone(), f.clone()), cell(&w, &prod));
                out.assoc_inv.insert(
                    (h.clone(), g.clone(), f.clone()),
                    cell(&data.coefficients.inverse(&w)?, &prod),
                );
            }
        }
    }
    for f in &data.group.elements {
        out.lunit.insert(f.clone(), cell(a_unit, f));
        out.lunit_inv.insert(f.clone(), cell(a_unit, f));
        out.runit.insert(f.clone(), cell(a_unit, f));
        out.runit_inv.insert(f.clone(), cell(a_unit, f));
    }
    Ok(out)
}

/// The terminal bicategory: one object, one 1-cell, one 2-cell.
pub fn one() -> FiniteBicategory {
    chaotic(1).expect("chaotic(1) is well-formed")
}

/// Delooping of Z/2.
pub fn bz2() -> FiniteBicategory {
    deloop_monoid(&MonoidTable::cyclic(2)).expect("BZ2 is well-formed")
}

/// Delooping of Z/3.
pub fn bz3() -> FiniteBicategory {
    deloop_monoid(&MonoidTable::cyclic(3)).expect("BZ3 is well-formed")
}

/// Delooping of the order-2 monoid with an absorbing element (`x . x = x`).
pub fn boolean_or_monoid() -> MonoidTable {
    MonoidTable::new(
        ["e", "x"],
        "e",
        [
            ("e", "e", "e"),
            ("e", "x", "x"),
            ("x", "e", "x"),
            ("x", "x", "x"),
        ],
    )
}

/// The join monoid on the chain 0 <= 1.
pub fn join_monoid_on_chain() -> MonoidTable {
    MonoidTable::new(
        ["0", "1"],
        "0",
        [
            ("0", "0", "0"),
            ("0", "1", "1"),
            ("1", "0", "1"),
            ("1", "1", "1"),
        ],
    )
}

/// Delooping of the join monoid on the chain with its hom-poset: the
/// hom-category is the ordinal 2, with one non-identity 2-cell `0 => 1`.
pub fn p2() -> FiniteBicategory {
    let mut leq = BTreeSet::new();
    leq.insert((CellId::from("0"), CellId::from("1")));
    deloop_ordered_monoid(&join_monoid_on_chain(), &leq).expect("P2 is well-formed")
}

/// 2-group data over Z/2 with Z/2 coefficients. The nontrivial cocycle class
/// is represented by the cocycle supported at `(g, g, g)`.
pub fn two_group_z2_data(nontrivial: bool) -> TwoGroupData {
    let group = MonoidTable::cyclic(2);
    let coefficients = MonoidTable::new(
        ["e", "a"],
        "e",
        [
            ("e", "e", "e"),
            ("e", "a", "a"),
            ("a", "e", "a"),
            ("a", "a", "e"),
        ],
    );
    let mut cocycle = BTreeMap::new();
    if nontrivial {
        cocycle.insert(
            (CellId::from("g"), CellId::from("g"), CellId::from("g")),
            CellId::from("a"),
        );
    }
    TwoGroupData {
        group,
        coefficients,
        cocycle,
    }
}

/// 2-group fixture over Z/2; `nontrivial` picks the cocycle class.
pub fn two_group_z2(nontrivial: bool) -> FiniteBicategory {
    two_group(&two_group_z2_data(nontrivial)).expect("Z/2 two-group data is well-formed")
}

/// The genuinely lax functor from the terminal bicategory into `p2()`: the
/// unique 1-cell maps to `1`, the unit constraint is the non-identity 2-cell
/// `0 => 1`, and the composition constraint is the identity on `1`.
pub fn lax_into_p2() -> LaxFunctor {
    let src = one();
    let tgt = p2();
    let mut obj_map = BTreeMap::new();
    obj_map.insert(CellId::from("o0"), CellId::from("pt"));
    let mut one_map = BTreeMap::new();
    one_map.insert(CellId::from("f0_0"), CellId::from("1"));
    let mut two_map = BTreeMap::new();
    two_map.insert(CellId::from("s0_0"), CellId::from("1_1"));
    let mut f2 = BTreeMap::new();
    f2.insert(
        (CellId::from("f0_0"), CellId::from("f0_0")),
        CellId::from("1_1"),
    );
    let mut f0 = BTreeMap::new();
    f0.insert(CellId::from("o0"), CellId::from("lt_0_1"));
    LaxFunctor {
        src,
        tgt,
        obj_map,
        one_map,
        two_map,
        f2,
        f0,
    }
}
