//! Fuzzy sets and fuzzy relations over a finite quantale, with the full
//! relational calculus: composition, hom-lattice joins and meets, and the
//! left/right implications adjoint to composition.
//!
//! A relation entry at `(x,y)` must lie in the diagonal set `D(|x|,|y|)`;
//! every operation below preserves that constraint, so the calculus is
//! closed. Hom-lattice meets are computed inside the diagonal-constrained
//! lattice (join of lower bounds), never as the pointwise lattice meet,
//! which may leave the diagonal set.

use std::sync::Arc;

use thiserror::Error;

use crate::quantale::{Elem, FiniteQuantale};

#[derive(Debug, Error)]
pub enum RelError {
    #[error("entry {value} at ({x}, {y}) is outside D({px}, {py}) = {{{diag}}}")]
    EntryOutOfDiagonal {
        x: String,
        y: String,
        value: String,
        px: String,
        py: String,
        diag: String,
    },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("operands live over different quantales")]
    QuantaleMismatch,
    #[error("label {0:?} is duplicated in the carrier")]
    DuplicateLabel(String),
    #[error("membership index {0} out of range")]
    BadMembership(usize),
}

/// A fuzzy set: a finite carrier with a membership degree per label.
#[derive(Debug, Clone, PartialEq)]
pub struct QSubset {
    quantale: Arc<FiniteQuantale>,
    labels: Vec<String>,
    membership: Vec<Elem>,
}

impl QSubset {
    pub fn new(
        quantale: Arc<FiniteQuantale>,
        labels: Vec<String>,
        membership: Vec<Elem>,
    ) -> Result<Self, RelError> {
        if labels.len() != membership.len() {
            return Err(RelError::DimensionMismatch(format!(
                "{} labels vs {} memberships",
                labels.len(),
                membership.len()
            )));
        }
        let mut seen = labels.clone();
        seen.sort();
        for w in seen.windows(2) {
            if w[0] == w[1] {
                return Err(RelError::DuplicateLabel(w[0].clone()));
            }
        }
        if let Some(&bad) = membership.iter().find(|&&m| m >= quantale.len()) {
            return Err(RelError::BadMembership(bad));
        }
        Ok(QSubset {
            quantale,
            labels,
            membership,
        })
    }

    /// The singleton fuzzy set with one element of degree `q`.
    pub fn singleton(quantale: Arc<FiniteQuantale>, degree: Elem) -> Self {
        QSubset::new(quantale, vec!["*".into()], vec![degree]).unwrap()
    }

    /// A crisp carrier: every label has membership `e`.
    pub fn crisp(quantale: Arc<FiniteQuantale>, labels: Vec<String>) -> Self {
        let e = quantale.unit();
        let n = labels.len();
        QSubset::new(quantale, labels, vec![e; n]).unwrap()
    }

    pub fn quantale(&self) -> &Arc<FiniteQuantale> {
        &self.quantale
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn membership(&self, i: usize) -> Elem {
        self.membership[i]
    }

    pub fn memberships(&self) -> &[Elem] {
        &self.membership
    }

    /// Same carrier with a different membership map.
    pub fn with_membership(&self, membership: Vec<Elem>) -> Result<Self, RelError> {
        QSubset::new(self.quantale.clone(), self.labels.clone(), membership)
    }

    pub fn same_carrier(&self, other: &QSubset) -> bool {
        (Arc::ptr_eq(&self.quantale, &other.quantale) || self.quantale == other.quantale)
            && self.labels == other.labels
    }

    pub fn same_fuzzy_set(&self, other: &QSubset) -> bool {
        self.same_carrier(other) && self.membership == other.membership
    }
}

/// A fuzzy relation `φ: X ⇸ Y`, stored as an `|X| × |Y|` entry matrix with
/// `φ(x,y) ∈ D(|x|,|y|)`.
#[derive(Debug, Clone, PartialEq)]
pub struct QRelation {
    source: QSubset,
    target: QSubset,
    entries: Vec<Vec<Elem>>,
}

impl QRelation {
    /// Checks every entry against its diagonal set.
    pub fn new(
        source: QSubset,
        target: QSubset,
        entries: Vec<Vec<Elem>>,
    ) -> Result<Self, RelError> {
        if !Arc::ptr_eq(source.quantale(), target.quantale())
            && source.quantale() != target.quantale()
        {
            return Err(RelError::QuantaleMismatch);
        }
        if entries.len() != source.len() || entries.iter().any(|row| row.len() != target.len()) {
            return Err(RelError::DimensionMismatch(format!(
                "matrix is not {}x{}",
                source.len(),
                target.len()
            )));
        }
        let q = source.quantale();
        for (x, row) in entries.iter().enumerate() {
            for (y, &v) in row.iter().enumerate() {
                let (px, py) = (source.membership(x), target.membership(y));
                if !q.diag_contains(px, py, v) {
                    return Err(RelError::EntryOutOfDiagonal {
                        x: source.label(x).into(),
                        y: target.label(y).into(),
                        value: q.label(v).into(),
                        px: q.label(px).into(),
                        py: q.label(py).into(),
                        diag: q
                            .diagonal(px, py)
                            .into_iter()
                            .map(|u| q.label(u).to_string())
                            .collect::<Vec<_>>()
                            .join(","),
                    });
                }
            }
        }
        Ok(QRelation {
            source,
            target,
            entries,
        })
    }

    /// Builds without the per-entry diagonal check; callers must guarantee
    /// validity (the operations below keep their outputs inside the diagonal
    /// sets by construction).
    fn new_unchecked(source: QSubset, target: QSubset, entries: Vec<Vec<Elem>>) -> Self {
        let rel = QRelation {
            source,
            target,
            entries,
        };
        debug_assert!(rel.is_valid(), "operation left the diagonal sets");
        rel
    }

    pub fn is_valid(&self) -> bool {
        let q = self.source.quantale();
        self.entries.iter().enumerate().all(|(x, row)| {
            row.iter().enumerate().all(|(y, &v)| {
                q.diag_contains(self.source.membership(x), self.target.membership(y), v)
            })
        })
    }

    /// The identity relation `id_X`: `|x|` on the diagonal, `⊥` elsewhere.
    pub fn identity(x: &QSubset) -> Self {
        let q = x.quantale();
        let bot = q.bottom();
        let n = x.len();
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { x.membership(i) } else { bot })
                    .collect()
            })
            .collect();
        QRelation::new_unchecked(x.clone(), x.clone(), entries)
    }

    pub fn source(&self) -> &QSubset {
        &self.source
    }

    pub fn target(&self) -> &QSubset {
        &self.target
    }

    pub fn entry(&self, x: usize, y: usize) -> Elem {
        self.entries[x][y]
    }

    pub fn entries(&self) -> &Vec<Vec<Elem>> {
        &self.entries
    }

    pub fn quantale(&self) -> &Arc<FiniteQuantale> {
        self.source.quantale()
    }

    /// Pointwise order in the hom-lattice.
    pub fn leq(&self, other: &QRelation) -> bool {
        let q = self.quantale();
        self.entries
            .iter()
            .zip(&other.entries)
            .all(|(a, b)| a.iter().zip(b).all(|(&u, &v)| q.leq(u, v)))
    }

    /// Row `φ(x,−): 1_{|x|} ⇸ Y`.
    pub fn row(&self, x: usize) -> QRelation {
        let src = QSubset::singleton(self.quantale().clone(), self.source.membership(x));
        QRelation::new_unchecked(src, self.target.clone(), vec![self.entries[x].clone()])
    }

    /// Column `φ(−,y): X ⇸ 1_{|y|}`.
    pub fn column(&self, y: usize) -> QRelation {
        let tgt = QSubset::singleton(self.quantale().clone(), self.target.membership(y));
        let entries = self.entries.iter().map(|row| vec![row[y]]).collect();
        QRelation::new_unchecked(self.source.clone(), tgt, entries)
    }

    /// Composition `self ∘ phi` where `phi: X ⇸ Y` and `self: Y ⇸ Z`, via
    /// `(ψ∘φ)(x,z) = ⋁_y (ψ(y,z)/|y|) & φ(x,y)`.
    pub fn compose(&self, phi: &QRelation) -> Result<QRelation, RelError> {
        if !self.source.same_fuzzy_set(phi.target()) {
            return Err(RelError::DimensionMismatch(
                "inner fuzzy sets do not match".into(),
            ));
        }
        let q = self.quantale().clone();
        let mid = self.source.len();
        let entries: Vec<Vec<Elem>> = (0..phi.source.len())
            .map(|x| {
                (0..self.target.len())
                    .map(|z| {
                        q.join_all((0..mid).map(|y| {
                            let w = q.res_left(self.entries[y][z], self.source.membership(y));
                            q.mul(w, phi.entries[x][y])
                        }))
                    })
                    .collect()
            })
            .collect();
        Ok(QRelation::new_unchecked(
            phi.source.clone(),
            self.target.clone(),
            entries,
        ))
    }

    /// The left implication `xi ↙ phi`: the largest `ψ: Y ⇸ Z` with
    /// `ψ ∘ phi ≤ xi`, computed entrywise over the diagonal candidates.
    pub fn imp_left(xi: &QRelation, phi: &QRelation) -> Result<QRelation, RelError> {
        if !xi.source.same_fuzzy_set(phi.source()) {
            return Err(RelError::DimensionMismatch(
                "implication sources do not match".into(),
            ));
        }
        let q = xi.quantale().clone();
        let ys = phi.target();
        let zs = xi.target();
        let nx = xi.source.len();
        let entries: Vec<Vec<Elem>> = (0..ys.len())
            .map(|y| {
                let my = ys.membership(y);
                (0..zs.len())
                    .map(|z| {
                        q.join_all(q.diagonal(my, zs.membership(z)).into_iter().filter(|&v| {
                            let w = q.res_left(v, my);
                            (0..nx).all(|x| q.leq(q.mul(w, phi.entries[x][y]), xi.entries[x][z]))
                        }))
                    })
                    .collect()
            })
            .collect();
        Ok(QRelation::new_unchecked(ys.clone(), zs.clone(), entries))
    }

    /// The right implication `psi ↘ xi`: the largest `φ: X ⇸ Y` with
    /// `psi ∘ φ ≤ xi`.
    pub fn imp_right(psi: &QRelation, xi: &QRelation) -> Result<QRelation, RelError> {
        if !psi.target.same_fuzzy_set(xi.target()) {
            return Err(RelError::DimensionMismatch(
                "implication targets do not match".into(),
            ));
        }
        let q = xi.quantale().clone();
        let xs = xi.source();
        let ys = psi.source();
        let nz = xi.target.len();
        let entries: Vec<Vec<Elem>> = (0..xs.len())
            .map(|x| {
                (0..ys.len())
                    .map(|y| {
                        let my = ys.membership(y);
                        q.join_all(q.diagonal(xs.membership(x), my).into_iter().filter(|&u| {
                            let w = q.res_right(my, u);
                            (0..nz).all(|z| q.leq(q.mul(psi.entries[y][z], w), xi.entries[x][z]))
                        }))
                    })
                    .collect()
            })
            .collect();
        Ok(QRelation::new_unchecked(xs.clone(), ys.clone(), entries))
    }
}

fn common_frame(x: &QSubset, y: &QSubset, rels: &[&QRelation]) -> Result<(), RelError> {
    for r in rels {
        if !r.source().same_fuzzy_set(x) || !r.target().same_fuzzy_set(y) {
            return Err(RelError::DimensionMismatch(
                "relations do not share source and target".into(),
            ));
        }
    }
    Ok(())
}

/// Entrywise join in the hom-lattice; the empty join is the all-bottom
/// relation. Diagonal sets are join-closed, so this stays valid.
pub fn hom_join(x: &QSubset, y: &QSubset, rels: &[&QRelation]) -> Result<QRelation, RelError> {
    common_frame(x, y, rels)?;
    let q = x.quantale();
    let entries = (0..x.len())
        .map(|i| {
            (0..y.len())
                .map(|j| q.join_all(rels.iter().map(|r| r.entry(i, j))))
                .collect()
        })
        .collect();
    Ok(QRelation::new_unchecked(x.clone(), y.clone(), entries))
}

/// Meet in the hom complete lattice: per entry, the join of all diagonal-set
/// members below the pointwise lattice meet. The empty meet is the per-entry
/// diagonal maximum.
pub fn hom_meet(x: &QSubset, y: &QSubset, rels: &[&QRelation]) -> Result<QRelation, RelError> {
    common_frame(x, y, rels)?;
    let q = x.quantale();
    let entries = (0..x.len())
        .map(|i| {
            (0..y.len())
                .map(|j| {
                    let m = q.meet_all(rels.iter().map(|r| r.entry(i, j)));
                    q.join_all(
                        q.diagonal(x.membership(i), y.membership(j))
                            .into_iter()
                            .filter(|&u| q.leq(u, m)),
                    )
                })
                .collect()
        })
        .collect();
    Ok(QRelation::new_unchecked(x.clone(), y.clone(), entries))
}

/// Every relation `X ⇸ Y`, by cartesian product over diagonal sets. Only
/// sensible for tiny frames; used by exhaustive oracles.
pub fn all_relations(x: &QSubset, y: &QSubset) -> Vec<QRelation> {
    let q = x.quantale();
    let cells: Vec<Vec<Elem>> = (0..x.len())
        .flat_map(|i| (0..y.len()).map(move |j| (i, j)))
        .map(|(i, j)| q.diagonal(x.membership(i), y.membership(j)))
        .collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; cells.len()];
    loop {
        let entries: Vec<Vec<Elem>> = (0..x.len())
            .map(|i| {
                (0..y.len())
                    .map(|j| cells[i * y.len() + j][choice[i * y.len() + j]])
                    .collect()
            })
            .collect();
        out.push(QRelation::new(x.clone(), y.clone(), entries).unwrap());
        let mut k = 0;
        loop {
            if k == cells.len() {
                return out;
            }
            choice[k] += 1;
            if choice[k] < cells[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

#[cfg(test)]
pub(crate) mod test_oracles {
    //! Brute-force oracles, kept independent of the entrywise formulas they
    //! check: implications by global search over all candidate relations.

    use super::*;

    /// `ξ↙φ` as the literal join of all `ψ'` with `ψ'∘φ ≤ ξ`.
    pub fn imp_left_global(xi: &QRelation, phi: &QRelation) -> QRelation {
        let candidates = all_relations(phi.target(), xi.target());
        let good: Vec<&QRelation> = candidates
            .iter()
            .filter(|psi| psi.compose(phi).unwrap().leq(xi))
            .collect();
        hom_join(phi.target(), xi.target(), &good).unwrap()
    }

    /// `ψ↘ξ` as the literal join of all `φ'` with `ψ∘φ' ≤ ξ`.
    pub fn imp_right_global(psi: &QRelation, xi: &QRelation) -> QRelation {
        let candidates = all_relations(xi.source(), psi.source());
        let good: Vec<&QRelation> = candidates
            .iter()
            .filter(|phi| psi.compose(phi).unwrap().leq(xi))
            .collect();
        hom_join(xi.source(), psi.source(), &good).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::all_relations;
    use super::test_oracles::*;
    use super::*;
    use crate::quantale::{bool2, c3, c4, lukasiewicz, Side};

    fn arc(q: FiniteQuantale) -> Arc<FiniteQuantale> {
        Arc::new(q)
    }

    #[test]
    fn all_bottom_matrix_is_always_valid() {
        let q = arc(c4());
        let x = QSubset::new(q.clone(), vec!["x".into(), "y".into()], vec![1, 2]).unwrap();
        let y = QSubset::new(q.clone(), vec!["u".into()], vec![3]).unwrap();
        let bot = q.bottom();
        assert!(QRelation::new(x, y, vec![vec![bot], vec![bot]]).is_ok());
    }

    #[test]
    fn entry_outside_diagonal_is_rejected() {
        let q = arc(c4());
        let b = q.elem_by_label("b").unwrap();
        let a = q.elem_by_label("a").unwrap();
        let x = QSubset::new(q.clone(), vec!["x".into()], vec![b]).unwrap();
        let err = QRelation::new(x.clone(), x.clone(), vec![vec![a]]).unwrap_err();
        match err {
            RelError::EntryOutOfDiagonal { value, .. } => assert_eq!(value, "a"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn crisp_carrier_accepts_any_matrix() {
        let q = arc(c3());
        let x = QSubset::crisp(q.clone(), vec!["x".into(), "y".into()]);
        for u in q.elements() {
            for v in q.elements() {
                for w in q.elements() {
                    for z in q.elements() {
                        assert!(QRelation::new(
                            x.clone(),
                            x.clone(),
                            vec![vec![u, v], vec![w, z]]
                        )
                        .is_ok());
                    }
                }
            }
        }
    }

    #[test]
    fn identity_laws() {
        let q = arc(c3());
        let x = QSubset::new(q.clone(), vec!["x".into(), "y".into()], vec![1, 2]).unwrap();
        let y = QSubset::new(q.clone(), vec!["u".into()], vec![2]).unwrap();
        for phi in all_relations(&x, &y) {
            let lhs = QRelation::identity(&y).compose(&phi).unwrap();
            let rhs = phi.compose(&QRelation::identity(&x)).unwrap();
            assert_eq!(lhs, phi);
            assert_eq!(rhs, phi);
        }
    }

    #[test]
    fn singleton_composition_formula() {
        // For u: 1_p ⇸ 1_q and v: 1_q ⇸ 1_r, v∘u = (v/q)&u = v&(q\u).
        for q in [bool2(), c3(), c4(), lukasiewicz(3).unwrap()] {
            let q = arc(q);
            for p in q.elements() {
                for m in q.elements() {
                    for r in q.elements() {
                        let sp = QSubset::singleton(q.clone(), p);
                        let sq = QSubset::singleton(q.clone(), m);
                        let sr = QSubset::singleton(q.clone(), r);
                        for u in q.diagonal(p, m) {
                            for v in q.diagonal(m, r) {
                                let ru =
                                    QRelation::new(sp.clone(), sq.clone(), vec![vec![u]]).unwrap();
                                let rv =
                                    QRelation::new(sq.clone(), sr.clone(), vec![vec![v]]).unwrap();
                                let comp = rv.compose(&ru).unwrap();
                                let via_left = q.mul(q.res_left(v, m), u);
                                let via_right = q.mul(v, q.res_right(m, u));
                                assert_eq!(comp.entry(0, 0), via_left);
                                assert_eq!(comp.entry(0, 0), via_right);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn associativity_exhaustive_small() {
        let q = arc(c3());
        let x = QSubset::new(q.clone(), vec!["x".into()], vec![1]).unwrap();
        let y = QSubset::new(q.clone(), vec!["y".into()], vec![2]).unwrap();
        let z = QSubset::new(q.clone(), vec!["z".into()], vec![1]).unwrap();
        let w = QSubset::new(q.clone(), vec!["w".into()], vec![2]).unwrap();
        for phi in all_relations(&x, &y) {
            for psi in all_relations(&y, &z) {
                for xi in all_relations(&z, &w) {
                    let lhs = xi.compose(&psi.compose(&phi).unwrap()).unwrap();
                    let rhs = xi.compose(&psi).unwrap().compose(&phi).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn implications_match_global_search() {
        // The entrywise formula against the join-of-all-candidates oracle.
        let q = arc(c4());
        let x = QSubset::new(q.clone(), vec!["x".into()], vec![2]).unwrap();
        let y = QSubset::new(q.clone(), vec!["y".into(), "y2".into()], vec![3, 1]).unwrap();
        let z = QSubset::new(q.clone(), vec!["z".into()], vec![3]).unwrap();
        for phi in all_relations(&x, &y) {
            for xi in all_relations(&x, &z) {
                let fast = QRelation::imp_left(&xi, &phi).unwrap();
                let slow = imp_left_global(&xi, &phi);
                assert_eq!(fast, slow);
            }
        }
        for psi in all_relations(&y, &z) {
            for xi in all_relations(&x, &z) {
                let fast = QRelation::imp_right(&psi, &xi).unwrap();
                let slow = imp_right_global(&psi, &xi);
                assert_eq!(fast, slow);
            }
        }
    }

    #[test]
    fn implication_adjunction_exhaustive_small() {
        let q = arc(c3());
        let x = QSubset::new(q.clone(), vec!["x".into()], vec![2]).unwrap();
        let y = QSubset::new(q.clone(), vec!["y".into()], vec![1]).unwrap();
        let z = QSubset::new(q.clone(), vec!["z".into()], vec![2]).unwrap();
        for phi in all_relations(&x, &y) {
            for psi in all_relations(&y, &z) {
                for xi in all_relations(&x, &z) {
                    let comp_le = psi.compose(&phi).unwrap().leq(&xi);
                    let left = psi.leq(&QRelation::imp_left(&xi, &phi).unwrap());
                    let right = phi.leq(&QRelation::imp_right(&psi, &xi).unwrap());
                    assert_eq!(comp_le, left);
                    assert_eq!(comp_le, right);
                }
            }
        }
    }

    #[test]
    fn singleton_implication_formulas() {
        // w↙u = ⋁{v' ∈ D(q,r) | v' ≤ w/(q\u)} and
        // v↘w = ⋁{u' ∈ D(p,q) | u' ≤ (v/q)\w}; in general these differ from
        // the bare residuations w/u and v\w.
        let mut found_left_mismatch = false;
        for q in [bool2(), c3(), c4(), lukasiewicz(4).unwrap()] {
            let q = arc(q);
            for p in q.elements() {
                for m in q.elements() {
                    for r in q.elements() {
                        let sp = QSubset::singleton(q.clone(), p);
                        let sq = QSubset::singleton(q.clone(), m);
                        let sr = QSubset::singleton(q.clone(), r);
                        for u in q.diagonal(p, m) {
                            for w in q.diagonal(p, r) {
                                let ru =
                                    QRelation::new(sp.clone(), sq.clone(), vec![vec![u]]).unwrap();
                                let rw =
                                    QRelation::new(sp.clone(), sr.clone(), vec![vec![w]]).unwrap();
                                let got = QRelation::imp_left(&rw, &ru).unwrap().entry(0, 0);
                                let bound = q.res_left(w, q.res_right(m, u));
                                let expect = q.join_all(
                                    q.diagonal(m, r).into_iter().filter(|&v| q.leq(v, bound)),
                                );
                                assert_eq!(got, expect);
                                if got != q.res_left(w, u) {
                                    found_left_mismatch = true;
                                }
                            }
                        }
                        for v in q.diagonal(m, r) {
                            for w in q.diagonal(p, r) {
                                let rv =
                                    QRelation::new(sq.clone(), sr.clone(), vec![vec![v]]).unwrap();
                                let rw =
                                    QRelation::new(sp.clone(), sr.clone(), vec![vec![w]]).unwrap();
                                let got = QRelation::imp_right(&rv, &rw).unwrap().entry(0, 0);
                                let bound = q.res_right(q.res_left(v, m), w);
                                let expect = q.join_all(
                                    q.diagonal(p, m).into_iter().filter(|&u| q.leq(u, bound)),
                                );
                                assert_eq!(got, expect);
                            }
                        }
                    }
                }
            }
        }
        assert!(found_left_mismatch, "some builtin separates ↙ from /");
    }

    #[test]
    fn c4_relation_implication_differs_from_residuation() {
        // u = b: 1_top ⇸ 1_b and w = top: 1_top ⇸ 1_top: w↙u = b but w/u = top.
        let q = arc(c4());
        let (b, top) = (q.elem_by_label("b").unwrap(), q.top());
        let st = QSubset::singleton(q.clone(), top);
        let sb = QSubset::singleton(q.clone(), b);
        let u = QRelation::new(st.clone(), sb.clone(), vec![vec![b]]).unwrap();
        let w = QRelation::new(st.clone(), st.clone(), vec![vec![top]]).unwrap();
        let imp = QRelation::imp_left(&w, &u).unwrap();
        assert_eq!(imp.entry(0, 0), b);
        assert_eq!(q.residuate(top, b, Side::Left), top);
    }

    #[test]
    fn hom_join_and_meet() {
        let q = arc(c3());
        let x = QSubset::new(q.clone(), vec!["x".into()], vec![1]).unwrap();
        let y = QSubset::new(q.clone(), vec!["y".into()], vec![2]).unwrap();
        // D(e, top) = {bot, top}
        let rels = all_relations(&x, &y);
        assert_eq!(rels.len(), 2);
        let empty_join = hom_join(&x, &y, &[]).unwrap();
        assert_eq!(empty_join.entry(0, 0), q.bottom());
        let empty_meet = hom_meet(&x, &y, &[]).unwrap();
        assert_eq!(empty_meet.entry(0, 0), q.diag_max(1, 2));
        for r in &rels {
            assert_eq!(hom_join(&x, &y, &[r, r]).unwrap(), *r);
            assert_eq!(hom_meet(&x, &y, &[r, r]).unwrap(), *r);
        }
        let bot_rel = &rels[0];
        let top_rel = &rels[1];
        assert_eq!(
            hom_meet(&x, &y, &[top_rel, bot_rel]).unwrap().entry(0, 0),
            q.bottom()
        );
        assert_eq!(
            hom_meet(&x, &y, &[top_rel, top_rel]).unwrap().entry(0, 0),
            q.top()
        );
    }

    #[test]
    fn empty_carriers_are_legal() {
        let q = arc(c3());
        let empty = QSubset::new(q.clone(), vec![], vec![]).unwrap();
        let x = QSubset::new(q.clone(), vec!["x".into()], vec![1]).unwrap();
        // composition X ⇸ ∅ ⇸ X is all-bottom
        let through = QRelation::new(empty.clone(), x.clone(), vec![])
            .unwrap()
            .compose(&QRelation::new(x.clone(), empty.clone(), vec![vec![]]).unwrap())
            .unwrap();
        assert_eq!(through.entry(0, 0), q.bottom());
        // implications over an empty quantifier range give diagonal maxima
        let xi = QRelation::new(empty.clone(), x.clone(), vec![]).unwrap();
        let phi = QRelation::new(empty.clone(), x.clone(), vec![]).unwrap();
        let imp = QRelation::imp_left(&xi, &phi).unwrap();
        assert_eq!(imp.entry(0, 0), q.diag_max(1, 1));
    }

    #[test]
    fn operations_stay_in_the_calculus() {
        let q = arc(c4());
        let x = QSubset::new(q.clone(), vec!["x".into(), "x2".into()], vec![2, 3]).unwrap();
        let y = QSubset::new(q.clone(), vec!["y".into()], vec![2]).unwrap();
        let z = QSubset::new(q.clone(), vec!["z".into()], vec![1]).unwrap();
        for phi in all_relations(&x, &y) {
            for psi in all_relations(&y, &z) {
                assert!(psi.compose(&phi).unwrap().is_valid());
                for xi in all_relations(&x, &z) {
                    assert!(QRelation::imp_left(&xi, &phi).unwrap().is_valid());
                    assert!(QRelation::imp_right(&psi, &xi).unwrap().is_valid());
                }
            }
        }
    }
}
