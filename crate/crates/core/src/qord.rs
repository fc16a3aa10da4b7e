//! Preordered fuzzy sets: validation of the preorder axioms, underlying
//! preorders, separatedness, structure-preserving maps, graphs and cographs,
//! coreflections onto membership ranges, and the conversion to and from
//! diagonal-style valued preorders over the conjugate quantale.

use std::sync::Arc;

use thiserror::Error;

use crate::caps::Caps;
use crate::qrel::{QRelation, QSubset, RelError};
use crate::quantale::{Elem, FiniteQuantale};

#[derive(Debug, Error)]
pub enum OrderError {
    /// (QP1) failure: an entry is not simultaneously right-divisible by its
    /// row membership and left-divisible by its column membership.
    #[error("entry {value} at ({x}, {y}) is outside D({px}, {py})")]
    NotInDiagonal {
        x: String,
        y: String,
        value: String,
        px: String,
        py: String,
    },
    /// (QP2) failure: `|x| ≰ α(x,x)`.
    #[error("not reflexive at {x}: membership {membership} is not below alpha({x},{x}) = {found}")]
    NotReflexive {
        x: String,
        membership: String,
        found: String,
    },
    /// (QP3) failure: `(α(y,z)/|y|) & α(x,y) ≰ α(x,z)`.
    #[error("not transitive at ({x}, {y}, {z}): composite {composite} is not below {bound}")]
    NotTransitive {
        x: String,
        y: String,
        z: String,
        composite: String,
        bound: String,
    },
    #[error("not a valued preorder: {0}")]
    NotHoehlePreorder(String),
    #[error("invalid map: {0}")]
    InvalidMap(String),
    #[error("not a distributor: {0}")]
    NotADistributor(String),
    #[error("not an adjoint pair: {0}")]
    NotAdjoint(String),
    #[error("size cap exceeded: {what} needs {need}, cap is {cap}")]
    SizeCap {
        what: String,
        need: usize,
        cap: usize,
    },
    #[error(transparent)]
    Rel(#[from] RelError),
}

/// A fuzzy set together with a validated preorder relation on it.
#[derive(Debug, Clone, PartialEq)]
pub struct QOrderedSet {
    carrier: QSubset,
    order: QRelation,
}

/// Validates the three preorder axioms and reports the first violation in
/// label order: entries inside diagonal sets, reflexivity, transitivity.
pub fn make_ordered(carrier: QSubset, alpha: Vec<Vec<Elem>>) -> Result<QOrderedSet, OrderError> {
    let n = carrier.len();
    if alpha.len() != n || alpha.iter().any(|row| row.len() != n) {
        return Err(RelError::DimensionMismatch(format!("order matrix is not {n}x{n}")).into());
    }
    let q = carrier.quantale().clone();
    let lab = |e: Elem| q.label(e).to_string();
    for x in 0..n {
        for y in 0..n {
            if alpha[x][y] >= q.len() {
                return Err(RelError::BadMembership(alpha[x][y]).into());
            }
            if !q.diag_contains(carrier.membership(x), carrier.membership(y), alpha[x][y]) {
                return Err(OrderError::NotInDiagonal {
                    x: carrier.label(x).into(),
                    y: carrier.label(y).into(),
                    value: lab(alpha[x][y]),
                    px: lab(carrier.membership(x)),
                    py: lab(carrier.membership(y)),
                });
            }
        }
    }
    for x in 0..n {
        if !q.leq(carrier.membership(x), alpha[x][x]) {
            return Err(OrderError::NotReflexive {
                x: carrier.label(x).into(),
                membership: lab(carrier.membership(x)),
                found: lab(alpha[x][x]),
            });
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let w = q.mul(q.res_left(alpha[y][z], carrier.membership(y)), alpha[x][y]);
                if !q.leq(w, alpha[x][z]) {
                    return Err(OrderError::NotTransitive {
                        x: carrier.label(x).into(),
                        y: carrier.label(y).into(),
                        z: carrier.label(z).into(),
                        composite: lab(w),
                        bound: lab(alpha[x][z]),
                    });
                }
            }
        }
    }
    let order = QRelation::new(carrier.clone(), carrier.clone(), alpha)?;
    Ok(QOrderedSet { carrier, order })
}

impl QOrderedSet {
    /// The discrete preorder: the identity relation on the carrier.
    pub fn discrete(carrier: QSubset) -> Self {
        let order = QRelation::identity(&carrier);
        QOrderedSet { carrier, order }
    }

    /// A singleton carrier of degree `q` with the discrete preorder.
    pub fn singleton(quantale: Arc<FiniteQuantale>, degree: Elem) -> Self {
        QOrderedSet::discrete(QSubset::singleton(quantale, degree))
    }

    /// Assembles without re-validating; used where validity is forced by
    /// construction (powerset orders, coreflections). Debug builds re-check.
    pub(crate) fn from_parts_unchecked(carrier: QSubset, order: QRelation) -> Self {
        debug_assert!(
            carrier.len() > 40 || {
                let alpha = order.entries().clone();
                make_ordered(carrier.clone(), alpha).is_ok()
            },
            "constructed order violates the preorder axioms"
        );
        QOrderedSet { carrier, order }
    }

    pub fn carrier(&self) -> &QSubset {
        &self.carrier
    }

    /// The preorder as a relation (the identity distributor on `self`).
    pub fn order(&self) -> &QRelation {
        &self.order
    }

    pub fn quantale(&self) -> &Arc<FiniteQuantale> {
        self.carrier.quantale()
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        self.carrier.label(i)
    }

    pub fn membership(&self, i: usize) -> Elem {
        self.carrier.membership(i)
    }

    pub fn alpha(&self, x: usize, y: usize) -> Elem {
        self.order.entry(x, y)
    }

    /// `x ≤ y ⟺ |x| = |y| and |x| ≤ α(x,y)`.
    pub fn underlying_leq(&self, x: usize, y: usize) -> bool {
        self.membership(x) == self.membership(y)
            && self
                .quantale()
                .leq(self.membership(x), self.alpha(x, y))
    }

    pub fn underlying_preorder(&self) -> Vec<Vec<bool>> {
        let n = self.len();
        (0..n)
            .map(|x| (0..n).map(|y| self.underlying_leq(x, y)).collect())
            .collect()
    }

    /// Isomorphic in the underlying preorder (`x ≤ y` and `y ≤ x`).
    pub fn underlying_iso(&self, x: usize, y: usize) -> bool {
        self.underlying_leq(x, y) && self.underlying_leq(y, x)
    }

    pub fn is_separated(&self) -> bool {
        let n = self.len();
        (0..n).all(|x| (0..n).all(|y| x == y || !self.underlying_iso(x, y)))
    }

    /// Indices of the crisp slice `X_q = {x | |x| = q}`.
    pub fn degree_members(&self, q: Elem) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| self.membership(x) == q)
            .collect()
    }

    /// Restricts to the labels whose membership lies in `keep`, with the
    /// inherited membership and order.
    pub fn coreflect(&self, keep: &[Elem]) -> QOrderedSet {
        let idx: Vec<usize> = (0..self.len())
            .filter(|&x| keep.contains(&self.membership(x)))
            .collect();
        self.restrict(&idx)
    }

    /// The full sub-preordered set on the given indices.
    pub fn restrict(&self, idx: &[usize]) -> QOrderedSet {
        let labels = idx.iter().map(|&i| self.label(i).to_string()).collect();
        let memb = idx.iter().map(|&i| self.membership(i)).collect();
        let carrier = QSubset::new(self.quantale().clone(), labels, memb)
            .expect("restriction keeps labels unique");
        let entries = idx
            .iter()
            .map(|&i| idx.iter().map(|&j| self.alpha(i, j)).collect())
            .collect();
        let order = QRelation::new(carrier.clone(), carrier.clone(), entries)
            .expect("restriction keeps entries in diagonal sets");
        QOrderedSet { carrier, order }
    }
}

/// A label-to-label assignment between two preordered fuzzy sets.
#[derive(Debug, Clone, PartialEq)]
pub struct QOrderMap {
    source: QOrderedSet,
    target: QOrderedSet,
    assign: Vec<usize>,
}

/// The three structure-preservation verdicts for an assignment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MapCheck {
    pub membership_preserving: bool,
    pub order_preserving: bool,
    pub fully_faithful: bool,
}

impl QOrderMap {
    pub fn new(
        source: QOrderedSet,
        target: QOrderedSet,
        assign: Vec<usize>,
    ) -> Result<Self, OrderError> {
        if assign.len() != source.len() || assign.iter().any(|&t| t >= target.len()) {
            return Err(OrderError::InvalidMap(format!(
                "assignment is not a total map into a {}-element target",
                target.len()
            )));
        }
        Ok(QOrderMap {
            source,
            target,
            assign,
        })
    }

    pub fn identity(x: &QOrderedSet) -> Self {
        QOrderMap {
            source: x.clone(),
            target: x.clone(),
            assign: (0..x.len()).collect(),
        }
    }

    pub fn source(&self) -> &QOrderedSet {
        &self.source
    }

    pub fn target(&self) -> &QOrderedSet {
        &self.target
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assign
    }

    pub fn apply(&self, x: usize) -> usize {
        self.assign[x]
    }

    pub fn check(&self) -> MapCheck {
        let membership_preserving = (0..self.source.len())
            .all(|x| self.source.membership(x) == self.target.membership(self.assign[x]));
        let q = self.source.quantale();
        let mut order_preserving = true;
        let mut fully_faithful = true;
        for x in 0..self.source.len() {
            for x2 in 0..self.source.len() {
                let a = self.source.alpha(x, x2);
                let b = self.target.alpha(self.assign[x], self.assign[x2]);
                order_preserving &= q.leq(a, b);
                fully_faithful &= a == b;
            }
        }
        MapCheck {
            membership_preserving,
            order_preserving,
            fully_faithful: fully_faithful && order_preserving,
        }
    }

    pub fn is_morphism(&self) -> bool {
        let c = self.check();
        c.membership_preserving && c.order_preserving
    }

    /// `g ∘ self` (apply `self` first).
    pub fn then(&self, g: &QOrderMap) -> Result<QOrderMap, OrderError> {
        if g.source != self.target {
            return Err(OrderError::InvalidMap(
                "composition endpoints do not match".into(),
            ));
        }
        QOrderMap::new(
            self.source.clone(),
            g.target.clone(),
            self.assign.iter().map(|&x| g.assign[x]).collect(),
        )
    }

    /// The graph `f_♮(x,y) = β(fx,y)`, a distributor `X ⇸ Y`.
    pub fn graph(&self) -> Result<QRelation, OrderError> {
        if !self.is_morphism() {
            return Err(OrderError::InvalidMap(
                "graph needs a membership- and order-preserving map".into(),
            ));
        }
        let entries = (0..self.source.len())
            .map(|x| {
                (0..self.target.len())
                    .map(|y| self.target.alpha(self.assign[x], y))
                    .collect()
            })
            .collect();
        Ok(QRelation::new(
            self.source.carrier().clone(),
            self.target.carrier().clone(),
            entries,
        )?)
    }

    /// The cograph `f^♮(y,x) = β(y,fx)`, a distributor `Y ⇸ X`.
    pub fn cograph(&self) -> Result<QRelation, OrderError> {
        if !self.is_morphism() {
            return Err(OrderError::InvalidMap(
                "cograph needs a membership- and order-preserving map".into(),
            ));
        }
        let entries = (0..self.target.len())
            .map(|y| {
                (0..self.source.len())
                    .map(|x| self.target.alpha(y, self.assign[x]))
                    .collect()
            })
            .collect();
        Ok(QRelation::new(
            self.target.carrier().clone(),
            self.source.carrier().clone(),
            entries,
        )?)
    }
}

/// Pointwise order of parallel maps: `f ≤ g ⟺ ∀x: |x| ≤ β(fx, gx)`.
pub fn map_leq(f: &QOrderMap, g: &QOrderMap) -> Result<bool, OrderError> {
    if f.source != g.source || f.target != g.target {
        return Err(OrderError::InvalidMap("maps are not parallel".into()));
    }
    let q = f.source.quantale();
    Ok((0..f.source.len()).all(|x| {
        q.leq(
            f.source.membership(x),
            f.target.alpha(f.assign[x], g.assign[x]),
        )
    }))
}

/// Fully faithful membership-preserving bijection in either direction.
pub fn are_isomorphic(x: &QOrderedSet, y: &QOrderedSet) -> bool {
    if x.len() != y.len() {
        return false;
    }
    let n = x.len();
    let mut used = vec![false; n];
    let mut assign = vec![usize::MAX; n];
    fn extend(
        x: &QOrderedSet,
        y: &QOrderedSet,
        assign: &mut Vec<usize>,
        used: &mut Vec<bool>,
        i: usize,
    ) -> bool {
        let n = x.len();
        if i == n {
            return true;
        }
        for j in 0..n {
            if used[j] || x.membership(i) != y.membership(j) {
                continue;
            }
            let ok = (0..i).all(|k| {
                x.alpha(i, k) == y.alpha(j, assign[k]) && x.alpha(k, i) == y.alpha(assign[k], j)
            }) && x.alpha(i, i) == y.alpha(j, j);
            if ok {
                assign[i] = j;
                used[j] = true;
                if extend(x, y, assign, used, i + 1) {
                    return true;
                }
                used[j] = false;
                assign[i] = usize::MAX;
            }
        }
        false
    }
    extend(x, y, &mut assign, &mut used, 0)
}

/// Checks the valued-preorder axioms of `alpha` over `q` itself
/// (divisibility by the diagonal entries plus diagonal-weighted
/// transitivity), then realizes it as a preordered fuzzy set over the
/// conjugate quantale with membership `|x| = α(x,x)`.
pub fn from_hoehle(
    q: &Arc<FiniteQuantale>,
    labels: Vec<String>,
    alpha: Vec<Vec<Elem>>,
) -> Result<QOrderedSet, OrderError> {
    let n = labels.len();
    if alpha.len() != n || alpha.iter().any(|row| row.len() != n) {
        return Err(RelError::DimensionMismatch(format!("matrix is not {n}x{n}")).into());
    }
    for x in 0..n {
        for y in 0..n {
            let v = alpha[x][y];
            if v >= q.len() {
                return Err(RelError::BadMembership(v).into());
            }
            let right = q.mul(q.res_left(v, alpha[y][y]), alpha[y][y]);
            let left = q.mul(alpha[x][x], q.res_right(alpha[x][x], v));
            if right != v || left != v {
                return Err(OrderError::NotHoehlePreorder(format!(
                    "alpha({}, {}) = {} is not divisible by the diagonal entries",
                    labels[x],
                    labels[y],
                    q.label(v)
                )));
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let w = q.mul(alpha[x][y], q.res_right(alpha[y][y], alpha[y][z]));
                if !q.leq(w, alpha[x][z]) {
                    return Err(OrderError::NotHoehlePreorder(format!(
                        "transitivity fails at ({}, {}, {})",
                        labels[x], labels[y], labels[z]
                    )));
                }
            }
        }
    }
    let conj = Arc::new(q.conjugate());
    let memb = (0..n).map(|x| alpha[x][x]).collect();
    let carrier = QSubset::new(conj, labels, memb)?;
    make_ordered(carrier, alpha)
}

/// Reads a preordered fuzzy set back as a valued preorder over the conjugate
/// of its quantale: the matrix itself, with `α(x,x)` absorbing the
/// membership. Over an integral quantale `α(x,x) = |x|`, so the round trip
/// through [`from_hoehle`] is the identity.
pub fn to_hoehle(x: &QOrderedSet) -> Vec<Vec<Elem>> {
    let q = x.quantale();
    if q.is_integral() {
        for i in 0..x.len() {
            debug_assert_eq!(x.alpha(i, i), x.membership(i));
        }
    }
    x.order().entries().clone()
}

/// All membership maps for which `alpha` is a valid preorder on the carrier.
pub fn enumerate_memberships(
    q: &Arc<FiniteQuantale>,
    labels: &[String],
    alpha: &[Vec<Elem>],
    caps: &Caps,
) -> Result<Vec<Vec<Elem>>, OrderError> {
    let n = labels.len();
    let total = q.len().checked_pow(n as u32).unwrap_or(usize::MAX);
    if total > caps.membership_scan {
        return Err(OrderError::SizeCap {
            what: format!("membership scan over {n} labels"),
            need: total,
            cap: caps.membership_scan,
        });
    }
    let mut out = Vec::new();
    let mut memb = vec![0usize; n];
    loop {
        let carrier = QSubset::new(q.clone(), labels.to_vec(), memb.clone())?;
        if make_ordered(carrier, alpha.to_vec()).is_ok() {
            out.push(memb.clone());
        }
        let mut k = 0;
        loop {
            if k == n {
                return Ok(out);
            }
            memb[k] += 1;
            if memb[k] < q.len() {
                break;
            }
            memb[k] = 0;
            k += 1;
        }
    }
}

#[cfg(test)]
pub(crate) mod tests_support {
    use super::*;
    use crate::quantale::c3;

    /// The intrinsic preorder α(p,q) = q/p on the carrier `{bot, e, top}`
    /// with one of the four admissible membership maps.
    pub(crate) fn c3_intrinsic(memb: [Elem; 3]) -> QOrderedSet {
        let q = Arc::new(c3());
        let alpha: Vec<Vec<Elem>> = (0..3)
            .map(|p| (0..3).map(|r| q.res_left(r, p)).collect())
            .collect();
        let labels = vec!["bot".into(), "e".into(), "top".into()];
        let carrier = QSubset::new(q, labels, memb.to_vec()).unwrap();
        make_ordered(carrier, alpha).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::tests_support::c3_intrinsic;
    use super::*;
    use crate::quantale::{bool2, c3, c4};

    fn arc(q: FiniteQuantale) -> Arc<FiniteQuantale> {
        Arc::new(q)
    }

    #[test]
    fn divisibility_precedes_reflexivity_in_reporting() {
        // Over c4 with |x| = |y| = b the matrix [[b, a], [bot, b]] meets the
        // diagonal-free conditions but a is outside D(b,b).
        let q = arc(c4());
        let b = q.elem_by_label("b").unwrap();
        let a = q.elem_by_label("a").unwrap();
        let bot = q.bottom();
        let carrier =
            QSubset::new(q.clone(), vec!["x".into(), "y".into()], vec![b, b]).unwrap();
        let alpha = vec![vec![b, a], vec![bot, b]];
        // The pair satisfies the divisible-style conditions: entries below
        // the diagonal meets, and both transitivity routes.
        for x in 0..2 {
            for y in 0..2 {
                assert!(q.leq(alpha[x][y], q.meet(alpha[x][x], alpha[y][y])));
                for z in 0..2 {
                    let r1 = q.mul(q.res_left(alpha[y][z], alpha[y][y]), alpha[x][y]);
                    let r2 = q.mul(alpha[y][z], q.res_right(alpha[y][y], alpha[x][y]));
                    assert!(q.leq(r1, alpha[x][z]));
                    assert!(q.leq(r2, alpha[x][z]));
                }
            }
        }
        match make_ordered(carrier, alpha).unwrap_err() {
            OrderError::NotInDiagonal { x, y, value, .. } => {
                assert_eq!((x.as_str(), y.as_str()), ("x", "y"));
                assert_eq!(value, "a");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn discrete_preorder_is_valid() {
        let q = arc(c4());
        let carrier = QSubset::new(q, vec!["x".into(), "y".into()], vec![1, 3]).unwrap();
        let x = QOrderedSet::discrete(carrier.clone());
        assert!(make_ordered(carrier, x.order().entries().clone()).is_ok());
    }

    #[test]
    fn intrinsic_c3_preorder_and_underlying() {
        // Crisp memberships: the underlying preorder is the chain order.
        let x1 = c3_intrinsic([1, 1, 1]);
        for p in 0..3 {
            for r in 0..3 {
                assert_eq!(x1.underlying_leq(p, r), p <= r);
            }
        }
        // |top| = top: only bot ≤ e survives off the diagonal.
        let x2 = c3_intrinsic([1, 1, 2]);
        let expect = |p: usize, r: usize| p == r || (p, r) == (0, 1);
        for p in 0..3 {
            for r in 0..3 {
                assert_eq!(x2.underlying_leq(p, r), expect(p, r), "at {p},{r}");
            }
        }
        assert!(x2.is_separated());
    }

    #[test]
    fn bottom_degree_elements_are_indiscrete() {
        let q = arc(bool2());
        let carrier = QSubset::new(
            q.clone(),
            vec!["x".into(), "y".into(), "z".into()],
            vec![0, 0, 1],
        )
        .unwrap();
        let x = QOrderedSet::discrete(carrier);
        assert!(x.underlying_leq(0, 1) && x.underlying_leq(1, 0));
        assert!(!x.is_separated());
        // A separated set can hold at most one bottom-degree element.
        let carrier = QSubset::new(q, vec!["x".into(), "z".into()], vec![0, 1]).unwrap();
        assert!(QOrderedSet::discrete(carrier).is_separated());
    }

    #[test]
    fn map_checks_and_composition() {
        let x = c3_intrinsic([1, 1, 2]);
        let id = QOrderMap::identity(&x);
        let c = id.check();
        assert!(c.membership_preserving && c.order_preserving && c.fully_faithful);
        assert!(map_leq(&id, &id).unwrap());

        // Constant map into a label of different membership.
        let constant = QOrderMap::new(x.clone(), x.clone(), vec![0, 0, 0]).unwrap();
        assert!(!constant.check().membership_preserving);

        // f ≤ g ⟺ e ≤ α(bot, e) = e/bot = top on the intrinsic order.
        let se = QOrderedSet::singleton(x.quantale().clone(), 1);
        let f = QOrderMap::new(se.clone(), x.clone(), vec![0]).unwrap();
        let g = QOrderMap::new(se.clone(), x.clone(), vec![1]).unwrap();
        assert!(f.is_morphism() && g.is_morphism());
        assert!(map_leq(&f, &g).unwrap());
        assert!(!map_leq(&g, &f).unwrap());

        let gg = f.then(&QOrderMap::identity(&x)).unwrap();
        assert_eq!(gg, f);
    }

    #[test]
    fn graph_and_cograph_of_identity_are_the_order() {
        let x = c3_intrinsic([1, 1, 1]);
        let id = QOrderMap::identity(&x);
        assert_eq!(id.graph().unwrap(), *x.order());
        assert_eq!(id.cograph().unwrap(), *x.order());
    }

    #[test]
    fn point_maps_restrict_rows_and_columns() {
        let x = c3_intrinsic([1, 1, 2]);
        for i in 0..x.len() {
            let s = QOrderedSet::singleton(x.quantale().clone(), x.membership(i));
            let point = QOrderMap::new(s, x.clone(), vec![i]).unwrap();
            assert!(point.is_morphism());
            assert_eq!(point.graph().unwrap(), x.order().row(i));
            assert_eq!(point.cograph().unwrap(), x.order().column(i));
        }
    }

    #[test]
    fn coreflection_keeps_membership_ranges() {
        let x = c3_intrinsic([1, 1, 2]);
        let q = x.quantale().clone();
        let all = x.coreflect(&q.elements().collect::<Vec<_>>());
        assert_eq!(all, x);
        let crisp = x.coreflect(&[q.unit()]);
        assert_eq!(crisp.len(), 2);
        assert!(crisp.carrier().labels().iter().all(|l| l != "top"));
        let partial = x.coreflect(&[q.unit(), q.bottom()]);
        assert_eq!(partial.len(), 2);
        // idempotent, and the inclusion is fully faithful by construction
        assert_eq!(crisp.coreflect(&[q.unit()]), crisp);
    }

    #[test]
    fn hoehle_round_trips() {
        // bool2 is self-conjugate: any valid preorder round-trips exactly.
        let q = arc(bool2());
        let labels = vec!["x".into(), "y".into()];
        let alpha = vec![vec![1, 1], vec![0, 1]];
        let x = from_hoehle(&q, labels.clone(), alpha.clone()).unwrap();
        assert_eq!(to_hoehle(&x), alpha);
        assert_eq!(x.membership(0), 1);

        // Integral quantale: to_hoehle then from_hoehle is the identity.
        let q4 = arc(c4());
        let b = q4.elem_by_label("b").unwrap();
        let carrier = QSubset::new(q4.clone(), labels.clone(), vec![b, b]).unwrap();
        let alpha4 = vec![vec![b, b], vec![q4.bottom(), b]];
        let x4 = make_ordered(carrier, alpha4.clone()).unwrap();
        let back = from_hoehle(
            &Arc::new(q4.conjugate()),
            labels.clone(),
            to_hoehle(&x4),
        )
        .unwrap();
        assert_eq!(back.order().entries(), x4.order().entries());
        assert_eq!(back.carrier().memberships(), x4.carrier().memberships());
        assert_eq!(back.quantale().as_ref(), q4.as_ref());
    }

    #[test]
    fn hoehle_conversion_is_lossy_on_nonintegral_quantales() {
        // The intrinsic c3 matrix with |bot| = top has alpha(bot,bot) = top,
        // but the same matrix also admits the all-crisp membership: distinct
        // preordered fuzzy sets collapse to one valued preorder.
        let x3 = c3_intrinsic([2, 1, 1]);
        let x1 = c3_intrinsic([1, 1, 1]);
        assert_eq!(to_hoehle(&x3), to_hoehle(&x1));
        assert_ne!(x3.carrier().memberships(), x1.carrier().memberships());
    }

    #[test]
    fn membership_enumeration_matches_known_fixtures() {
        // The intrinsic c3 preorder admits exactly four membership maps.
        let q = arc(c3());
        let alpha: Vec<Vec<Elem>> = (0..3)
            .map(|p| (0..3).map(|r| q.res_left(r, p)).collect())
            .collect();
        let labels: Vec<String> = vec!["bot".into(), "e".into(), "top".into()];
        let found =
            enumerate_memberships(&q, &labels, &alpha, &Caps::default()).unwrap();
        let expect: Vec<Vec<Elem>> =
            vec![vec![1, 1, 1], vec![1, 1, 2], vec![2, 1, 1], vec![2, 1, 2]];
        let mut sorted = found.clone();
        sorted.sort();
        assert_eq!(sorted, expect);

        // One-element bool2 carrier with alpha = [e]: only the crisp map.
        let q2 = arc(bool2());
        let found = enumerate_memberships(
            &q2,
            &["x".to_string()],
            &[vec![1]],
            &Caps::default(),
        )
        .unwrap();
        assert_eq!(found, vec![vec![1]]);
    }

    #[test]
    fn singleton_preorders_count_idempotents_above_unit() {
        for q in [arc(bool2()), arc(c3()), arc(c4())] {
            let e = q.unit();
            let carrier = QSubset::new(q.clone(), vec!["*".into()], vec![e]).unwrap();
            let valid = q
                .elements()
                .filter(|&v| make_ordered(carrier.clone(), vec![vec![v]]).is_ok())
                .count();
            assert_eq!(valid, q.idempotents_above_unit().len());
        }
    }

    #[test]
    fn isomorphism_search() {
        let x = c3_intrinsic([1, 1, 2]);
        let y = x.restrict(&[2, 1, 0]);
        assert!(are_isomorphic(&x, &y));
        assert!(!are_isomorphic(&x, &c3_intrinsic([1, 1, 1])));
    }
}
