//! Potential lower and upper fuzzy subsets of a preordered fuzzy set, their
//! powerset orders, the Yoneda and co-Yoneda embeddings, and the four image
//! maps induced by a structure-preserving map.
//!
//! A potential lower subset `μ: X ⇸ 1_q` is a relation into a singleton that
//! absorbs the preorder (`μ ∘ 1_X^♮ = μ`); dually for upper subsets. The
//! degree `q` is part of the datum: the same value vector at two degrees
//! gives two distinct powerset elements.

use std::collections::BTreeMap;

use crate::caps::Caps;
use crate::qord::{OrderError, QOrderMap, QOrderedSet};
use crate::qrel::{QRelation, QSubset};
use crate::quantale::{Elem, FiniteQuantale};

/// A potential lower fuzzy subset of its base: degree plus one value per
/// base label, with `μ(x) ∈ D(|x|, q)` and `(μ(y)/|y|) & α(x,y) ≤ μ(x)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Presheaf {
    pub degree: Elem,
    pub values: Vec<Elem>,
}

/// A potential upper fuzzy subset: `λ(x) ∈ D(q, |x|)` and
/// `(α(y,x)/|y|) & λ(y) ≤ λ(x)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Copresheaf {
    pub degree: Elem,
    pub values: Vec<Elem>,
}

fn check_lower(base: &QOrderedSet, degree: Elem, values: &[Elem]) -> Result<(), OrderError> {
    let q = base.quantale();
    let n = base.len();
    if values.len() != n {
        return Err(OrderError::InvalidMap(format!(
            "presheaf needs {n} values, got {}",
            values.len()
        )));
    }
    for x in 0..n {
        if !q.diag_contains(base.membership(x), degree, values[x]) {
            return Err(OrderError::NotInDiagonal {
                x: base.label(x).into(),
                y: "*".into(),
                value: q.label(values[x]).into(),
                px: q.label(base.membership(x)).into(),
                py: q.label(degree).into(),
            });
        }
    }
    for x in 0..n {
        for y in 0..n {
            let w = q.mul(q.res_left(values[y], base.membership(y)), base.alpha(x, y));
            if !q.leq(w, values[x]) {
                return Err(OrderError::InvalidMap(format!(
                    "not closed downward at ({}, {})",
                    base.label(x),
                    base.label(y)
                )));
            }
        }
    }
    Ok(())
}

fn check_upper(base: &QOrderedSet, degree: Elem, values: &[Elem]) -> Result<(), OrderError> {
    let q = base.quantale();
    let n = base.len();
    if values.len() != n {
        return Err(OrderError::InvalidMap(format!(
            "copresheaf needs {n} values, got {}",
            values.len()
        )));
    }
    for x in 0..n {
        if !q.diag_contains(degree, base.membership(x), values[x]) {
            return Err(OrderError::NotInDiagonal {
                x: "*".into(),
                y: base.label(x).into(),
                value: q.label(values[x]).into(),
                px: q.label(degree).into(),
                py: q.label(base.membership(x)).into(),
            });
        }
    }
    for x in 0..n {
        for y in 0..n {
            let w = q.mul(q.res_left(base.alpha(y, x), base.membership(y)), values[y]);
            if !q.leq(w, values[x]) {
                return Err(OrderError::InvalidMap(format!(
                    "not closed upward at ({}, {})",
                    base.label(y),
                    base.label(x)
                )));
            }
        }
    }
    Ok(())
}

impl Presheaf {
    pub fn new(base: &QOrderedSet, degree: Elem, values: Vec<Elem>) -> Result<Self, OrderError> {
        check_lower(base, degree, &values)?;
        Ok(Presheaf { degree, values })
    }

    pub fn is_valid(&self, base: &QOrderedSet) -> bool {
        check_lower(base, self.degree, &self.values).is_ok()
    }

    /// The all-bottom presheaf at `degree`.
    pub fn bottom(base: &QOrderedSet, degree: Elem) -> Self {
        Presheaf {
            degree,
            values: vec![base.quantale().bottom(); base.len()],
        }
    }

    /// As a relation `X ⇸ 1_q`.
    pub fn to_relation(&self, base: &QOrderedSet) -> QRelation {
        let tgt = QSubset::singleton(base.quantale().clone(), self.degree);
        let entries = self.values.iter().map(|&v| vec![v]).collect();
        QRelation::new(base.carrier().clone(), tgt, entries)
            .expect("validated presheaf is a relation")
    }

    pub fn from_relation(rel: &QRelation) -> Self {
        assert_eq!(rel.target().len(), 1, "presheaf relations end in a singleton");
        Presheaf {
            degree: rel.target().membership(0),
            values: rel.entries().iter().map(|row| row[0]).collect(),
        }
    }

    /// Canonical serialization used as a carrier label in powerset orders.
    pub fn canonical_label(&self, q: &FiniteQuantale) -> String {
        let vals: Vec<&str> = self.values.iter().map(|&v| q.label(v)).collect();
        format!("{}:{}", q.label(self.degree), vals.join(","))
    }
}

impl Copresheaf {
    pub fn new(base: &QOrderedSet, degree: Elem, values: Vec<Elem>) -> Result<Self, OrderError> {
        check_upper(base, degree, &values)?;
        Ok(Copresheaf { degree, values })
    }

    pub fn is_valid(&self, base: &QOrderedSet) -> bool {
        check_upper(base, self.degree, &self.values).is_ok()
    }

    pub fn bottom(base: &QOrderedSet, degree: Elem) -> Self {
        Copresheaf {
            degree,
            values: vec![base.quantale().bottom(); base.len()],
        }
    }

    /// As a relation `1_q ⇸ X`.
    pub fn to_relation(&self, base: &QOrderedSet) -> QRelation {
        let src = QSubset::singleton(base.quantale().clone(), self.degree);
        QRelation::new(src, base.carrier().clone(), vec![self.values.clone()])
            .expect("validated copresheaf is a relation")
    }

    pub fn from_relation(rel: &QRelation) -> Self {
        assert_eq!(rel.source().len(), 1, "copresheaf relations start in a singleton");
        Copresheaf {
            degree: rel.source().membership(0),
            values: rel.entries()[0].clone(),
        }
    }

    pub fn canonical_label(&self, q: &FiniteQuantale) -> String {
        let vals: Vec<&str> = self.values.iter().map(|&v| q.label(v)).collect();
        format!("{}:{}", q.label(self.degree), vals.join(","))
    }
}

/// `1_PX^♮(a, b) = b ↙ a` for presheaves `a, b` of the same base: the largest
/// `v ∈ D(|a|, |b|)` with `(v/|a|) & a(x) ≤ b(x)` for all `x`.
pub fn presheaf_order_entry(q: &FiniteQuantale, a: &Presheaf, b: &Presheaf) -> Elem {
    q.join_all(q.diagonal(a.degree, b.degree).into_iter().filter(|&v| {
        let w = q.res_left(v, a.degree);
        a.values
            .iter()
            .zip(&b.values)
            .all(|(&av, &bv)| q.leq(q.mul(w, av), bv))
    }))
}

/// `1_P†X^♮(a, b) = b ↘ a`: the largest `v ∈ D(|a|, |b|)` with
/// `(b(x)/|b|) & v ≤ a(x)` for all `x`.
pub fn copresheaf_order_entry(q: &FiniteQuantale, a: &Copresheaf, b: &Copresheaf) -> Elem {
    q.join_all(q.diagonal(a.degree, b.degree).into_iter().filter(|&v| {
        a.values
            .iter()
            .zip(&b.values)
            .all(|(&av, &bv)| q.leq(q.mul(q.res_left(bv, b.degree), v), av))
    }))
}

/// A fully enumerated powerset (or dual powerset) of a base, as a preordered
/// fuzzy set whose labels are canonical serializations and whose membership
/// is the degree.
#[derive(Debug, Clone)]
pub struct PowersetOrder {
    base: QOrderedSet,
    dual: bool,
    lower: Vec<Presheaf>,
    upper: Vec<Copresheaf>,
    ordered: QOrderedSet,
    index: BTreeMap<(Elem, Vec<Elem>), usize>,
}

impl PowersetOrder {
    pub fn base(&self) -> &QOrderedSet {
        &self.base
    }

    pub fn is_dual(&self) -> bool {
        self.dual
    }

    /// The powerset as a preordered fuzzy set.
    pub fn ordered(&self) -> &QOrderedSet {
        &self.ordered
    }

    pub fn len(&self) -> usize {
        self.ordered.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ordered.is_empty()
    }

    pub fn presheaf(&self, i: usize) -> &Presheaf {
        &self.lower[i]
    }

    pub fn copresheaf(&self, i: usize) -> &Copresheaf {
        &self.upper[i]
    }

    pub fn presheaves(&self) -> &[Presheaf] {
        &self.lower
    }

    pub fn copresheaves(&self) -> &[Copresheaf] {
        &self.upper
    }

    pub fn find(&self, degree: Elem, values: &[Elem]) -> Option<usize> {
        self.index.get(&(degree, values.to_vec())).copied()
    }

    pub fn find_presheaf(&self, p: &Presheaf) -> Option<usize> {
        debug_assert!(!self.dual);
        self.find(p.degree, &p.values)
    }

    pub fn find_copresheaf(&self, c: &Copresheaf) -> Option<usize> {
        debug_assert!(self.dual);
        self.find(c.degree, &c.values)
    }
}

/// Estimates `Σ_q Π_x |D(|x|, q)|` (lower side) or the dual product: an
/// upper bound on the powerset size, and the quantity the cap is checked
/// against.
pub fn powerset_size_estimate(base: &QOrderedSet, dual: bool) -> usize {
    let q = base.quantale();
    let mut total = 0usize;
    for deg in q.elements() {
        let mut prod = 1usize;
        for x in 0..base.len() {
            let d = if dual {
                q.diagonal(deg, base.membership(x)).len()
            } else {
                q.diagonal(base.membership(x), deg).len()
            };
            prod = prod.saturating_mul(d);
        }
        total = total.saturating_add(prod);
    }
    total
}

pub(crate) fn enumerate_values(
    base: &QOrderedSet,
    degree: Elem,
    dual: bool,
) -> Vec<Vec<Elem>> {
    let q = base.quantale();
    let n = base.len();
    let candidates: Vec<Vec<Elem>> = (0..n)
        .map(|x| {
            if dual {
                q.diagonal(degree, base.membership(x))
            } else {
                q.diagonal(base.membership(x), degree)
            }
        })
        .collect();
    // Backtracking with pairwise closure checks against already-fixed values
    // prunes most partial assignments early.
    let closed_pair = |vals: &[Elem], i: usize, k: usize| -> bool {
        if dual {
            let wi = q.mul(
                q.res_left(base.alpha(i, k), base.membership(i)),
                vals[i],
            );
            let wk = q.mul(
                q.res_left(base.alpha(k, i), base.membership(k)),
                vals[k],
            );
            q.leq(wi, vals[k]) && q.leq(wk, vals[i])
        } else {
            let wi = q.mul(q.res_left(vals[i], base.membership(i)), base.alpha(k, i));
            let wk = q.mul(q.res_left(vals[k], base.membership(k)), base.alpha(i, k));
            q.leq(wi, vals[k]) && q.leq(wk, vals[i])
        }
    };
    let mut out = Vec::new();
    let mut vals = vec![0usize; n];
    fn rec(
        k: usize,
        n: usize,
        candidates: &[Vec<Elem>],
        vals: &mut Vec<Elem>,
        closed_pair: &dyn Fn(&[Elem], usize, usize) -> bool,
        out: &mut Vec<Vec<Elem>>,
    ) {
        if k == n {
            out.push(vals.clone());
            return;
        }
        for &v in &candidates[k] {
            vals[k] = v;
            if (0..=k).all(|i| closed_pair(vals, i, k)) {
                rec(k + 1, n, candidates, vals, closed_pair, out);
            }
        }
    }
    rec(0, n, &candidates, &mut vals, &closed_pair, &mut out);
    out
}

fn build_powerset(base: &QOrderedSet, dual: bool, caps: &Caps) -> Result<PowersetOrder, OrderError> {
    let estimate = powerset_size_estimate(base, dual);
    if estimate > caps.powerset {
        return Err(OrderError::SizeCap {
            what: format!(
                "{} of a {}-element base",
                if dual { "dual powerset" } else { "powerset" },
                base.len()
            ),
            need: estimate,
            cap: caps.powerset,
        });
    }
    let q = base.quantale().clone();
    let mut lower = Vec::new();
    let mut upper = Vec::new();
    for degree in q.elements() {
        for values in enumerate_values(base, degree, dual) {
            if dual {
                upper.push(Copresheaf { degree, values });
            } else {
                lower.push(Presheaf { degree, values });
            }
        }
    }
    let (labels, membs): (Vec<String>, Vec<Elem>) = if dual {
        upper
            .iter()
            .map(|c| (c.canonical_label(&q), c.degree))
            .unzip()
    } else {
        lower
            .iter()
            .map(|p| (p.canonical_label(&q), p.degree))
            .unzip()
    };
    let carrier = QSubset::new(q.clone(), labels, membs)?;
    let m = carrier.len();
    let entries: Vec<Vec<Elem>> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| {
                    if dual {
                        copresheaf_order_entry(&q, &upper[i], &upper[j])
                    } else {
                        presheaf_order_entry(&q, &lower[i], &lower[j])
                    }
                })
                .collect()
        })
        .collect();
    let order = QRelation::new(carrier.clone(), carrier.clone(), entries)?;
    let ordered = QOrderedSet::from_parts_unchecked(carrier, order);
    let index = if dual {
        upper
            .iter()
            .enumerate()
            .map(|(i, c)| ((c.degree, c.values.clone()), i))
            .collect()
    } else {
        lower
            .iter()
            .enumerate()
            .map(|(i, p)| ((p.degree, p.values.clone()), i))
            .collect()
    };
    Ok(PowersetOrder {
        base: base.clone(),
        dual,
        lower,
        upper,
        ordered,
        index,
    })
}

/// Enumerates all potential lower subsets of `base`, ordered by `μ' ↙ μ`.
pub fn presheaves(base: &QOrderedSet, caps: &Caps) -> Result<PowersetOrder, OrderError> {
    build_powerset(base, false, caps)
}

/// Enumerates all potential upper subsets of `base`, ordered by `λ' ↘ λ`.
pub fn copresheaves(base: &QOrderedSet, caps: &Caps) -> Result<PowersetOrder, OrderError> {
    build_powerset(base, true, caps)
}

/// `y_X x = 1_X^♮(−, x)` at degree `|x|`.
pub fn yoneda(base: &QOrderedSet, x: usize) -> Presheaf {
    Presheaf {
        degree: base.membership(x),
        values: (0..base.len()).map(|i| base.alpha(i, x)).collect(),
    }
}

/// `y†_X x = 1_X^♮(x, −)` at degree `|x|`.
pub fn co_yoneda(base: &QOrderedSet, x: usize) -> Copresheaf {
    Copresheaf {
        degree: base.membership(x),
        values: (0..base.len()).map(|i| base.alpha(x, i)).collect(),
    }
}

/// The Yoneda embedding as a map `X → PX`.
pub fn yoneda_map(base: &QOrderedSet, px: &PowersetOrder) -> QOrderMap {
    let assign = (0..base.len())
        .map(|x| {
            px.find_presheaf(&yoneda(base, x))
                .expect("representable presheaves are enumerated")
        })
        .collect();
    QOrderMap::new(base.clone(), px.ordered().clone(), assign).unwrap()
}

/// The co-Yoneda embedding as a map `X → P†X`.
pub fn co_yoneda_map(base: &QOrderedSet, pdx: &PowersetOrder) -> QOrderMap {
    let assign = (0..base.len())
        .map(|x| {
            pdx.find_copresheaf(&co_yoneda(base, x))
                .expect("representable copresheaves are enumerated")
        })
        .collect();
    QOrderMap::new(base.clone(), pdx.ordered().clone(), assign).unwrap()
}

/// The four image maps of `f: X → Y` between the (dual) powersets:
/// `fwd μ = μ ∘ f^♮`, `back μ' = μ' ∘ f_♮`, `dfwd λ = f_♮ ∘ λ`,
/// `dback λ' = f^♮ ∘ λ'`.
#[derive(Debug, Clone)]
pub struct ImageMaps {
    pub px: PowersetOrder,
    pub py: PowersetOrder,
    pub pdx: PowersetOrder,
    pub pdy: PowersetOrder,
    pub fwd: QOrderMap,
    pub back: QOrderMap,
    pub dfwd: QOrderMap,
    pub dback: QOrderMap,
}

pub fn image_maps(f: &QOrderMap, caps: &Caps) -> Result<ImageMaps, OrderError> {
    let x = f.source();
    let y = f.target();
    let px = presheaves(x, caps)?;
    let py = presheaves(y, caps)?;
    let pdx = copresheaves(x, caps)?;
    let pdy = copresheaves(y, caps)?;
    let graph = f.graph()?;
    let cograph = f.cograph()?;

    let fwd_assign = px
        .presheaves()
        .iter()
        .map(|mu| {
            let rel = mu.to_relation(x).compose(&cograph).unwrap();
            py.find_presheaf(&Presheaf::from_relation(&rel))
                .expect("image of a lower subset is a lower subset")
        })
        .collect();
    let back_assign = py
        .presheaves()
        .iter()
        .map(|mu| {
            let rel = mu.to_relation(y).compose(&graph).unwrap();
            px.find_presheaf(&Presheaf::from_relation(&rel))
                .expect("preimage of a lower subset is a lower subset")
        })
        .collect();
    let dfwd_assign = pdx
        .copresheaves()
        .iter()
        .map(|lam| {
            let rel = graph.compose(&lam.to_relation(x)).unwrap();
            pdy.find_copresheaf(&Copresheaf::from_relation(&rel))
                .expect("image of an upper subset is an upper subset")
        })
        .collect();
    let dback_assign = pdy
        .copresheaves()
        .iter()
        .map(|lam| {
            let rel = cograph.compose(&lam.to_relation(y)).unwrap();
            pdx.find_copresheaf(&Copresheaf::from_relation(&rel))
                .expect("preimage of an upper subset is an upper subset")
        })
        .collect();

    let fwd = QOrderMap::new(px.ordered().clone(), py.ordered().clone(), fwd_assign)?;
    let back = QOrderMap::new(py.ordered().clone(), px.ordered().clone(), back_assign)?;
    let dfwd = QOrderMap::new(pdx.ordered().clone(), pdy.ordered().clone(), dfwd_assign)?;
    let dback = QOrderMap::new(pdy.ordered().clone(), pdx.ordered().clone(), dback_assign)?;
    Ok(ImageMaps {
        px,
        py,
        pdx,
        pdy,
        fwd,
        back,
        dfwd,
        dback,
    })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::qord::{make_ordered, map_leq};
    use crate::qrel::QSubset;
    use crate::quantale::{bool2, c3, c4};

    fn caps() -> Caps {
        Caps::default()
    }

    fn bool2_chain2_partial() -> QOrderedSet {
        // supp = {l, h} with l ≤ h, plus one bottom-degree element z.
        let q = Arc::new(bool2());
        let carrier = QSubset::new(
            q.clone(),
            vec!["l".into(), "h".into(), "z".into()],
            vec![1, 1, 0],
        )
        .unwrap();
        let alpha = vec![vec![1, 1, 0], vec![0, 1, 0], vec![0, 0, 0]];
        make_ordered(carrier, alpha).unwrap()
    }

    #[test]
    fn bool2_powerset_is_lower_sets_plus_empty() {
        let x = bool2_chain2_partial();
        let px = presheaves(&x, &caps()).unwrap();
        // Degree 1: lower subsets of the chain {l ≤ h}: {}, {l}, {l,h}.
        // Degree 0: only the all-bottom presheaf.
        assert_eq!(px.len(), 4);
        let degrees: Vec<Elem> = px.presheaves().iter().map(|p| p.degree).collect();
        assert_eq!(degrees.iter().filter(|&&d| d == 0).count(), 1);
        assert_eq!(degrees.iter().filter(|&&d| d == 1).count(), 3);
        for p in px.presheaves() {
            // z never belongs to a lower subset: D(0, q) = {0}.
            assert_eq!(p.values[2], 0);
        }
        // The dual side: upper subsets {}, {h}, {l,h} at degree 1.
        let pdx = copresheaves(&x, &caps()).unwrap();
        assert_eq!(pdx.len(), 4);
    }

    #[test]
    fn singleton_powerset_is_diagonal_union() {
        // P1_p has one element per (q, u) with u in D(p, q).
        for q in [Arc::new(c3()), Arc::new(c4())] {
            for p in q.elements() {
                let base = QOrderedSet::singleton(q.clone(), p);
                let px = presheaves(&base, &caps()).unwrap();
                let expect: usize = q.elements().map(|d| q.diagonal(p, d).len()).sum();
                assert_eq!(px.len(), expect);
                let pdx = copresheaves(&base, &caps()).unwrap();
                let expect_dual: usize = q.elements().map(|d| q.diagonal(d, p).len()).sum();
                assert_eq!(pdx.len(), expect_dual);
            }
        }
    }

    #[test]
    fn all_bottom_presheaf_exists_at_every_degree() {
        let x = crate::qord::tests_support::c3_intrinsic([1, 1, 2]);
        let px = presheaves(&x, &caps()).unwrap();
        for d in x.quantale().elements() {
            assert!(px.find_presheaf(&Presheaf::bottom(&x, d)).is_some());
        }
    }

    #[test]
    fn powersets_are_valid_and_separated() {
        for x in [
            bool2_chain2_partial(),
            crate::qord::tests_support::c3_intrinsic([1, 1, 2]),
            QOrderedSet::singleton(Arc::new(c4()), 2),
        ] {
            for ps in [presheaves(&x, &caps()).unwrap(), copresheaves(&x, &caps()).unwrap()] {
                let ord = ps.ordered();
                assert!(make_ordered(ord.carrier().clone(), ord.order().entries().clone()).is_ok());
                assert!(ord.is_separated());
            }
        }
    }

    #[test]
    fn yoneda_is_fully_faithful_and_satisfies_the_lemma() {
        for x in [
            bool2_chain2_partial(),
            crate::qord::tests_support::c3_intrinsic([1, 1, 1]),
            crate::qord::tests_support::c3_intrinsic([2, 1, 2]),
        ] {
            let q = x.quantale().clone();
            let px = presheaves(&x, &caps()).unwrap();
            let y = yoneda_map(&x, &px);
            let c = y.check();
            assert!(c.membership_preserving && c.order_preserving && c.fully_faithful);

            let pdx = copresheaves(&x, &caps()).unwrap();
            let yd = co_yoneda_map(&x, &pdx);
            let c = yd.check();
            assert!(c.membership_preserving && c.order_preserving && c.fully_faithful);

            // μ(x) = 1_PX^♮(y x, μ) and λ(x) = 1_P†X^♮(λ, y† x).
            for mu in px.presheaves() {
                for i in 0..x.len() {
                    let got = presheaf_order_entry(&q, &yoneda(&x, i), mu);
                    assert_eq!(got, mu.values[i]);
                }
            }
            for lam in pdx.copresheaves() {
                for i in 0..x.len() {
                    let got = copresheaf_order_entry(&q, lam, &co_yoneda(&x, i));
                    assert_eq!(got, lam.values[i]);
                }
            }
        }
    }

    #[test]
    fn dual_powerset_order_reverses_the_pointwise_order() {
        let x = bool2_chain2_partial();
        let q = x.quantale().clone();
        let pdx = copresheaves(&x, &caps()).unwrap();
        for (i, a) in pdx.copresheaves().iter().enumerate() {
            for (j, b) in pdx.copresheaves().iter().enumerate() {
                if a.degree != b.degree {
                    continue;
                }
                let in_pdx = pdx.ordered().underlying_leq(i, j);
                let pointwise_rev = a
                    .values
                    .iter()
                    .zip(&b.values)
                    .all(|(&av, &bv)| q.leq(bv, av));
                assert_eq!(in_pdx, pointwise_rev);
            }
        }
    }

    #[test]
    fn image_maps_of_identity_are_identities() {
        let x = crate::qord::tests_support::c3_intrinsic([1, 1, 2]);
        let id = QOrderMap::identity(&x);
        let im = image_maps(&id, &caps()).unwrap();
        for (i, m) in [&im.fwd, &im.back, &im.dfwd, &im.dback].iter().enumerate() {
            assert!(
                m.assignment().iter().enumerate().all(|(a, &b)| a == b),
                "map {i} is not the identity"
            );
        }
    }

    #[test]
    fn forward_image_commutes_with_yoneda() {
        // fwd(y_X x) = y_Y(f x) for the inclusion of the crisp part.
        let x = crate::qord::tests_support::c3_intrinsic([1, 1, 2]);
        let crisp = x.coreflect(&[1]);
        let assign: Vec<usize> = crisp
            .carrier()
            .labels()
            .iter()
            .map(|l| x.carrier().index_of(l).unwrap())
            .collect();
        let f = QOrderMap::new(crisp.clone(), x.clone(), assign).unwrap();
        assert!(f.is_morphism());
        let im = image_maps(&f, &caps()).unwrap();
        for i in 0..crisp.len() {
            let lhs = im.fwd.apply(im.px.find_presheaf(&yoneda(&crisp, i)).unwrap());
            let rhs = im.py.find_presheaf(&yoneda(&x, f.apply(i))).unwrap();
            assert_eq!(lhs, rhs);
        }
        // image maps are structure-preserving
        for m in [&im.fwd, &im.back, &im.dfwd, &im.dback] {
            assert!(m.is_morphism());
        }
    }

    #[test]
    fn map_order_matches_yoneda_composites() {
        let x = crate::qord::tests_support::c3_intrinsic([1, 1, 2]);
        let px = presheaves(&x, &caps()).unwrap();
        let y = yoneda_map(&x, &px);
        let se = QOrderedSet::singleton(x.quantale().clone(), 1);
        let f = QOrderMap::new(se.clone(), x.clone(), vec![0]).unwrap();
        let g = QOrderMap::new(se.clone(), x.clone(), vec![1]).unwrap();
        let yf = f.then(&y).unwrap();
        let yg = g.then(&y).unwrap();
        assert_eq!(map_leq(&f, &g).unwrap(), map_leq(&yf, &yg).unwrap());
        assert_eq!(map_leq(&g, &f).unwrap(), map_leq(&yg, &yf).unwrap());
    }
}
