//! Distributors between preordered fuzzy sets, adjunctions between them and
//! between structure-preserving maps, the three powerset adjunctions induced
//! by a distributor (the polarity and the two axialities), their fixed
//! points (MacNeille completions and fuzzy concept lattices), and Cauchy
//! completeness via right-adjoint presheaves.

use crate::caps::Caps;
use crate::completion::{cotensor_witnesses, is_inf_preserving, is_sup_preserving, tensor_witnesses};
use crate::presheaf::{
    co_yoneda, copresheaves, enumerate_values, presheaves, yoneda, Copresheaf, PowersetOrder,
    Presheaf,
};
use crate::qord::{map_leq, OrderError, QOrderMap, QOrderedSet};
use crate::qrel::QRelation;
use crate::quantale::Elem;

/// Distributor check `1_Y^♮ ∘ φ ∘ 1_X^♮ ≤ φ`, with a witness entry on
/// failure.
pub fn is_distributor(
    phi: &QRelation,
    x: &QOrderedSet,
    y: &QOrderedSet,
) -> Result<(bool, Option<(usize, usize)>), OrderError> {
    if !phi.source().same_fuzzy_set(x.carrier()) || !phi.target().same_fuzzy_set(y.carrier()) {
        return Err(OrderError::InvalidMap(
            "relation endpoints do not match the given orders".into(),
        ));
    }
    let composite = y.order().compose(phi)?.compose(x.order())?;
    for i in 0..x.len() {
        for j in 0..y.len() {
            if !phi
                .quantale()
                .leq(composite.entry(i, j), phi.entry(i, j))
            {
                return Ok((false, Some((i, j))));
            }
        }
    }
    Ok((true, None))
}

/// The five equivalent descriptions of compatibility with the preorders,
/// each computed from its own formula. They must agree on every relation.
pub fn distributor_characterizations(
    phi: &QRelation,
    x: &QOrderedSet,
    y: &QOrderedSet,
) -> Result<[bool; 5], OrderError> {
    let q = phi.quantale().clone();
    let sandwich = is_distributor(phi, x, y)?.0;

    let mut pointwise = true;
    for i in 0..x.len() {
        for i2 in 0..x.len() {
            for j in 0..y.len() {
                for j2 in 0..y.len() {
                    let w = q.mul(
                        q.mul(
                            q.res_left(y.alpha(j, j2), y.membership(j)),
                            phi.entry(i, j),
                        ),
                        q.res_right(x.membership(i), x.alpha(i2, i)),
                    );
                    pointwise &= q.leq(w, phi.entry(i2, j2));
                }
            }
        }
    }

    let right = phi.compose(x.order())?.leq(phi);
    let left = y.order().compose(phi)?.leq(phi);
    let two_sided = right && left;

    let rows_and_columns = (0..x.len()).all(|i| {
        Copresheaf::from_relation(&phi.row(i)).is_valid(y)
    }) && (0..y.len()).all(|j| Presheaf::from_relation(&phi.column(j)).is_valid(x));

    let unit_style = x.order().leq(&QRelation::imp_right(phi, phi)?)
        && y.order().leq(&QRelation::imp_left(phi, phi)?);

    Ok([sandwich, pointwise, two_sided, rows_and_columns, unit_style])
}

/// `φ ⊣ ψ` in the distributor category: `1_X^♮ ≤ ψ∘φ` and `φ∘ψ ≤ 1_Y^♮`.
pub fn is_dist_adjoint(
    phi: &QRelation,
    psi: &QRelation,
    x: &QOrderedSet,
    y: &QOrderedSet,
) -> Result<bool, OrderError> {
    let unit = psi.compose(phi)?;
    let counit = phi.compose(psi)?;
    Ok(x.order().leq(&unit) && counit.leq(y.order()))
}

/// The eight composition/implication identities valid for any adjoint pair
/// of distributors `phi ⊣ psi`, instantiated with caller-supplied test
/// distributors of each required shape. Returns the first failing identity.
#[allow(clippy::too_many_arguments)]
pub fn adjunction_identity_suite(
    phi: &QRelation,
    psi: &QRelation,
    xi_yw: &QRelation,
    xi_wy: &QRelation,
    xi_wx: &QRelation,
    xi_xw: &QRelation,
) -> Result<Option<&'static str>, OrderError> {
    // (1) ξ∘φ = ξ↙ψ for ξ: Y⇸W, and ψ∘ξ = φ↘ξ for ξ: W⇸Y.
    if xi_yw.compose(phi)? != QRelation::imp_left(xi_yw, psi)? {
        return Ok(Some("compose-right-equals-imp-left"));
    }
    if psi.compose(xi_wy)? != QRelation::imp_right(phi, xi_wy)? {
        return Ok(Some("compose-left-equals-imp-right"));
    }
    // (2) (φ∘ξ)↘ξ' = ξ↘(ψ∘ξ') for ξ: W⇸X, ξ': W⇸Y.
    if QRelation::imp_right(&phi.compose(xi_wx)?, xi_wy)?
        != QRelation::imp_right(xi_wx, &psi.compose(xi_wy)?)?
    {
        return Ok(Some("shift-left-adjoint-out-of-imp-right"));
    }
    // and (ξ'∘φ)↙ξ = ξ'↙(ξ∘ψ) for ξ: X⇸W, ξ': Y⇸W.
    if QRelation::imp_left(&xi_yw.compose(phi)?, xi_xw)?
        != QRelation::imp_left(xi_yw, &xi_xw.compose(psi)?)?
    {
        return Ok(Some("shift-left-adjoint-out-of-imp-left"));
    }
    // (3) (ξ↘ξ')∘φ = ξ↘(ξ'∘φ) for ξ, ξ': Y⇸W.
    if QRelation::imp_right(xi_yw, xi_yw)?.compose(phi)?
        != QRelation::imp_right(xi_yw, &xi_yw.compose(phi)?)?
    {
        return Ok(Some("imp-right-respects-composition"));
    }
    // and ψ∘(ξ'↙ξ) = (ψ∘ξ')↙ξ for ξ, ξ': W⇸Y (values in X after ψ).
    if psi.compose(&QRelation::imp_left(xi_wy, xi_wy)?)?
        != QRelation::imp_left(&psi.compose(xi_wy)?, xi_wy)?
    {
        return Ok(Some("imp-left-respects-composition"));
    }
    // (4) ψ∘(ξ↘ξ') = (ξ∘φ)↘ξ' for ξ: Y⇸W, ξ': W⇸W via ξ_yw∘ξ_wy.
    let xi_ww = xi_yw.compose(xi_wy).ok();
    if let Some(xi_ww) = xi_ww {
        if psi.compose(&QRelation::imp_right(xi_yw, &xi_ww)?)?
            != QRelation::imp_right(&xi_yw.compose(phi)?, &xi_ww)?
        {
            return Ok(Some("right-adjoint-into-imp-right"));
        }
        if QRelation::imp_left(&xi_ww, xi_wy)?.compose(phi)?
            != QRelation::imp_left(&xi_ww, &psi.compose(xi_wy)?)?
        {
            return Ok(Some("right-adjoint-into-imp-left"));
        }
    }
    Ok(None)
}

/// Which side of `f` to search for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AdjointSide {
    Left,
    Right,
}

/// Adjunction check for maps: `1_X ≤ g∘f` and `f∘g ≤ 1_Y` under the map
/// order, which for membership-preserving pairs coincides with the single
/// matrix criterion `β(fx, y) = α(x, gy)`.
pub fn is_galois(f: &QOrderMap, g: &QOrderMap) -> Result<bool, OrderError> {
    if f.source() != g.target() || f.target() != g.source() {
        return Err(OrderError::InvalidMap(
            "pair does not connect X and Y in both directions".into(),
        ));
    }
    let x = f.source();
    let y = f.target();
    let memb = (0..x.len()).all(|i| x.membership(i) == y.membership(f.apply(i)))
        && (0..y.len()).all(|j| y.membership(j) == x.membership(g.apply(j)));
    let matrix = memb
        && (0..x.len())
            .all(|i| (0..y.len()).all(|j| y.alpha(f.apply(i), j) == x.alpha(i, g.apply(j))));

    let unit_counit = f.check().order_preserving
        && g.check().order_preserving
        && memb
        && map_leq(&QOrderMap::identity(x), &f.then(g)?)?
        && map_leq(&g.then(f)?, &QOrderMap::identity(y))?;
    debug_assert_eq!(matrix, unit_counit, "the two adjunction criteria disagree");
    Ok(matrix)
}

/// All maps forming a Galois pair with `f` on the requested side. The
/// defining matrix equality fixes each value `g(y)` independently, so the
/// search is a product of per-label candidate sets; the nominal search
/// space `Π_y |X_{|y|}|` is still capped.
pub fn find_adjoint(
    f: &QOrderMap,
    side: AdjointSide,
    caps: &Caps,
) -> Result<Vec<QOrderMap>, OrderError> {
    let x = f.source();
    let y = f.target();
    let candidates: Vec<Vec<usize>> = (0..y.len())
        .map(|j| {
            x.degree_members(y.membership(j))
                .into_iter()
                .filter(|&cand| {
                    (0..x.len()).all(|i| match side {
                        AdjointSide::Right => y.alpha(f.apply(i), j) == x.alpha(i, cand),
                        AdjointSide::Left => x.alpha(cand, i) == y.alpha(j, f.apply(i)),
                    })
                })
                .collect()
        })
        .collect();
    if candidates.iter().any(|c| c.is_empty()) {
        return Ok(Vec::new());
    }
    // Surviving candidates per label are mutually isomorphic, so the witness
    // product is what the cap has to guard.
    let space = candidates
        .iter()
        .fold(1usize, |acc, c| acc.saturating_mul(c.len()));
    if space > caps.adjoint_search {
        return Err(OrderError::SizeCap {
            what: "adjoint witness enumeration".into(),
            need: space,
            cap: caps.adjoint_search,
        });
    }
    let mut assigns: Vec<Vec<usize>> = vec![Vec::new()];
    for c in &candidates {
        let mut next = Vec::new();
        for partial in &assigns {
            for &cand in c {
                let mut ext = partial.clone();
                ext.push(cand);
                next.push(ext);
                if next.len() > caps.adjoint_search {
                    return Err(OrderError::SizeCap {
                        what: "adjoint witness enumeration".into(),
                        need: next.len(),
                        cap: caps.adjoint_search,
                    });
                }
            }
        }
        assigns = next;
    }
    assigns
        .into_iter()
        .map(|assign| QOrderMap::new(y.clone(), x.clone(), assign))
        .collect()
}

/// A right adjoint of `f` between the underlying preorders, ignoring the
/// enriched structure: some `g` with `fx ≤ y ⟺ x ≤ gy`.
pub fn underlying_right_adjoint(f: &QOrderMap) -> Option<Vec<usize>> {
    let x = f.source();
    let y = f.target();
    let ux = x.underlying_preorder();
    let uy = y.underlying_preorder();
    (0..y.len())
        .map(|j| (0..x.len()).find(|&cand| (0..x.len()).all(|i| uy[f.apply(i)][j] == ux[i][cand])))
        .collect()
}

/// Dually, some `g` with `y ≤ fx ⟺ gy ≤ x`.
pub fn underlying_left_adjoint(f: &QOrderMap) -> Option<Vec<usize>> {
    let x = f.source();
    let y = f.target();
    let ux = x.underlying_preorder();
    let uy = y.underlying_preorder();
    (0..y.len())
        .map(|j| (0..x.len()).find(|&cand| (0..x.len()).all(|i| uy[j][f.apply(i)] == ux[cand][i])))
        .collect()
}

/// Whether `f` preserves all tensors: `f(u ⊗ x) = u ⊗ fx` whenever the
/// domain tensor exists.
pub fn preserves_tensors(f: &QOrderMap) -> bool {
    let x = f.source();
    let y = f.target();
    let q = x.quantale();
    for i in 0..x.len() {
        for degree in q.elements() {
            for u in q.diagonal(x.membership(i), degree) {
                let dom = tensor_witnesses(x, u, i, degree).unwrap();
                let Some(&s) = dom.first() else { continue };
                let cod = tensor_witnesses(y, u, f.apply(i), degree).unwrap();
                if !cod.contains(&f.apply(s)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Whether `f` preserves all cotensors.
pub fn preserves_cotensors(f: &QOrderMap) -> bool {
    let x = f.source();
    let y = f.target();
    let q = x.quantale();
    for i in 0..x.len() {
        for degree in q.elements() {
            for v in q.diagonal(degree, x.membership(i)) {
                let dom = cotensor_witnesses(x, v, i, degree).unwrap();
                let Some(&t) = dom.first() else { continue };
                let cod = cotensor_witnesses(y, v, f.apply(i), degree).unwrap();
                if !cod.contains(&f.apply(t)) {
                    return false;
                }
            }
        }
    }
    true
}

/// The three equivalent descriptions of being a left (dually right) adjoint
/// out of a complete domain: having an adjoint, preserving suprema (infima),
/// and being an underlying-preorder adjoint that preserves (co)tensors.
/// Construction asserts each triple agrees.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AdjointCharacterizations {
    pub left_adjoint: bool,
    pub sup_preserving: bool,
    pub underlying_left_with_tensors: bool,
    pub right_adjoint: bool,
    pub inf_preserving: bool,
    pub underlying_right_with_cotensors: bool,
}

pub fn adjoint_characterizations(
    f: &QOrderMap,
    caps: &Caps,
) -> Result<AdjointCharacterizations, OrderError> {
    let report = crate::completion::completeness_report(f.source(), caps)?;
    if !report.complete {
        return Err(OrderError::InvalidMap(
            "adjoint characterizations require a complete domain".into(),
        ));
    }
    let left_adjoint = !find_adjoint(f, AdjointSide::Right, caps)?.is_empty();
    let sup_preserving = is_sup_preserving(f, caps)?.0;
    let underlying_left_with_tensors =
        underlying_right_adjoint(f).is_some() && preserves_tensors(f);
    assert_eq!(left_adjoint, sup_preserving, "left adjoint vs sup-preserving");
    assert_eq!(
        left_adjoint, underlying_left_with_tensors,
        "left adjoint vs underlying adjoint with tensors"
    );
    let right_adjoint = !find_adjoint(f, AdjointSide::Left, caps)?.is_empty();
    let inf_preserving = is_inf_preserving(f, caps)?.0;
    let underlying_right_with_cotensors =
        underlying_left_adjoint(f).is_some() && preserves_cotensors(f);
    assert_eq!(right_adjoint, inf_preserving, "right adjoint vs inf-preserving");
    assert_eq!(
        right_adjoint, underlying_right_with_cotensors,
        "right adjoint vs underlying adjoint with cotensors"
    );
    Ok(AdjointCharacterizations {
        left_adjoint,
        sup_preserving,
        underlying_left_with_tensors,
        right_adjoint,
        inf_preserving,
        underlying_right_with_cotensors,
    })
}

/// Which of the three powerset shapes a Galois pair has.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairKind {
    /// `PX ⇄ P†Y`.
    Polarity,
    /// `PY ⇄ PX`.
    Axiality,
    /// `P†Y ⇄ P†X`.
    DualAxiality,
}

/// A Galois pair between two powerset orders, remembering the enumerated
/// powersets so fixed points and the inducing distributor stay computable.
#[derive(Debug, Clone)]
pub struct PowersetPair {
    pub kind: PairKind,
    pub f: QOrderMap,
    pub g: QOrderMap,
    pub dom: PowersetOrder,
    pub cod: PowersetOrder,
}

fn require_distributor(
    phi: &QRelation,
    x: &QOrderedSet,
    y: &QOrderedSet,
) -> Result<(), OrderError> {
    let (ok, witness) = is_distributor(phi, x, y)?;
    if !ok {
        let (i, j) = witness.unwrap();
        return Err(OrderError::NotADistributor(format!(
            "compatibility fails at ({}, {})",
            x.label(i),
            y.label(j)
        )));
    }
    Ok(())
}

/// The polarity `φ↑ ⊣ φ↓: PX ⇄ P†Y` of a distributor `φ: X ⇸∘ Y`, with
/// `φ↑μ = φ↙μ` and `φ↓λ' = λ'↘φ`.
pub fn isbell(
    phi: &QRelation,
    x: &QOrderedSet,
    y: &QOrderedSet,
    caps: &Caps,
) -> Result<PowersetPair, OrderError> {
    require_distributor(phi, x, y)?;
    let px = presheaves(x, caps)?;
    let pdy = copresheaves(y, caps)?;
    let f_assign = px
        .presheaves()
        .iter()
        .map(|mu| {
            let lam = Copresheaf::from_relation(
                &QRelation::imp_left(phi, &mu.to_relation(x)).unwrap(),
            );
            pdy.find_copresheaf(&lam).expect("upper image is enumerated")
        })
        .collect();
    let g_assign = pdy
        .copresheaves()
        .iter()
        .map(|lam| {
            let mu = Presheaf::from_relation(
                &QRelation::imp_right(&lam.to_relation(y), phi).unwrap(),
            );
            px.find_presheaf(&mu).expect("lower image is enumerated")
        })
        .collect();
    let f = QOrderMap::new(px.ordered().clone(), pdy.ordered().clone(), f_assign)?;
    let g = QOrderMap::new(pdy.ordered().clone(), px.ordered().clone(), g_assign)?;
    Ok(PowersetPair {
        kind: PairKind::Polarity,
        f,
        g,
        dom: px,
        cod: pdy,
    })
}

/// The axiality `φ* ⊣ φ_*: PY ⇄ PX` with `φ*μ' = μ'∘φ` and `φ_*μ = μ↙φ`.
pub fn kan(
    phi: &QRelation,
    x: &QOrderedSet,
    y: &QOrderedSet,
    caps: &Caps,
) -> Result<PowersetPair, OrderError> {
    require_distributor(phi, x, y)?;
    let py = presheaves(y, caps)?;
    let px = presheaves(x, caps)?;
    let f_assign = py
        .presheaves()
        .iter()
        .map(|mu| {
            let image = Presheaf::from_relation(&mu.to_relation(y).compose(phi).unwrap());
            px.find_presheaf(&image).expect("inverse image is enumerated")
        })
        .collect();
    let g_assign = px
        .presheaves()
        .iter()
        .map(|mu| {
            let image = Presheaf::from_relation(
                &QRelation::imp_left(&mu.to_relation(x), phi).unwrap(),
            );
            py.find_presheaf(&image).expect("direct image is enumerated")
        })
        .collect();
    let f = QOrderMap::new(py.ordered().clone(), px.ordered().clone(), f_assign)?;
    let g = QOrderMap::new(px.ordered().clone(), py.ordered().clone(), g_assign)?;
    Ok(PowersetPair {
        kind: PairKind::Axiality,
        f,
        g,
        dom: py,
        cod: px,
    })
}

/// The dual axiality `φ_† ⊣ φ†: P†Y ⇄ P†X` with `φ_†λ' = φ↘λ'` and
/// `φ†λ = φ∘λ`.
pub fn dual_kan(
    phi: &QRelation,
    x: &QOrderedSet,
    y: &QOrderedSet,
    caps: &Caps,
) -> Result<PowersetPair, OrderError> {
    require_distributor(phi, x, y)?;
    let pdy = copresheaves(y, caps)?;
    let pdx = copresheaves(x, caps)?;
    let f_assign = pdy
        .copresheaves()
        .iter()
        .map(|lam| {
            let image = Copresheaf::from_relation(
                &QRelation::imp_right(phi, &lam.to_relation(y)).unwrap(),
            );
            pdx.find_copresheaf(&image).expect("restriction is enumerated")
        })
        .collect();
    let g_assign = pdx
        .copresheaves()
        .iter()
        .map(|lam| {
            let image = Copresheaf::from_relation(&phi.compose(&lam.to_relation(x)).unwrap());
            pdy.find_copresheaf(&image).expect("extension is enumerated")
        })
        .collect();
    let f = QOrderMap::new(pdy.ordered().clone(), pdx.ordered().clone(), f_assign)?;
    let g = QOrderMap::new(pdx.ordered().clone(), pdy.ordered().clone(), g_assign)?;
    Ok(PowersetPair {
        kind: PairKind::DualAxiality,
        f,
        g,
        dom: pdy,
        cod: pdx,
    })
}

/// The three powerset adjunctions of a Galois pair `f ⊣ g`, all induced by
/// the shared distributor `f_♮ = g^♮`.
#[derive(Debug, Clone)]
pub struct LiftedPairs {
    pub polarity: PowersetPair,
    pub axiality: PowersetPair,
    pub dual_axiality: PowersetPair,
}

pub fn lift_galois(
    f: &QOrderMap,
    g: &QOrderMap,
    caps: &Caps,
) -> Result<LiftedPairs, OrderError> {
    if !is_galois(f, g)? {
        return Err(OrderError::NotAdjoint("the maps are not adjoint".into()));
    }
    let x = f.source();
    let y = f.target();
    let phi = f.graph()?;
    debug_assert_eq!(phi, g.cograph()?);
    let polarity = isbell(&phi, x, y, caps)?;
    let axiality = kan(&phi, x, y, caps)?;
    let dual_axiality = dual_kan(&phi, x, y, caps)?;
    // The lifted pair extends f and g along the embeddings:
    // φ↑(y_X x) = y†_Y(f x) and φ↓(y†_Y y) = y_X(g y).
    for i in 0..x.len() {
        let lhs = polarity.f.apply(polarity.dom.find_presheaf(&yoneda(x, i)).unwrap());
        let rhs = polarity
            .cod
            .find_copresheaf(&co_yoneda(y, f.apply(i)))
            .unwrap();
        assert_eq!(lhs, rhs, "polarity does not extend f along the embeddings");
    }
    for j in 0..y.len() {
        let lhs = polarity.g.apply(polarity.cod.find_copresheaf(&co_yoneda(y, j)).unwrap());
        let rhs = polarity.dom.find_presheaf(&yoneda(x, g.apply(j))).unwrap();
        assert_eq!(lhs, rhs, "polarity does not extend g along the embeddings");
    }
    Ok(LiftedPairs {
        polarity,
        axiality,
        dual_axiality,
    })
}

/// Recovers the inducing distributor of a powerset Galois pair by evaluating
/// it on representables. Fails with `NotAdjoint` when the pair is not an
/// adjunction (every genuine adjunction of these shapes is induced by a
/// unique distributor).
pub fn dist_from_pair(pair: &PowersetPair) -> Result<QRelation, OrderError> {
    if !is_galois(&pair.f, &pair.g)? {
        return Err(OrderError::NotAdjoint(
            "powerset pair fails the adjunction criterion".into(),
        ));
    }
    match pair.kind {
        PairKind::Polarity => {
            let x = pair.dom.base().clone();
            let y = pair.cod.base().clone();
            let entries = (0..x.len())
                .map(|i| {
                    let image = pair.f.apply(pair.dom.find_presheaf(&yoneda(&x, i)).unwrap());
                    pair.cod.copresheaf(image).values.clone()
                })
                .collect();
            let phi = QRelation::new(x.carrier().clone(), y.carrier().clone(), entries)?;
            require_distributor(&phi, &x, &y)?;
            Ok(phi)
        }
        PairKind::Axiality => {
            let y = pair.dom.base().clone();
            let x = pair.cod.base().clone();
            let mut entries = vec![vec![0usize; y.len()]; x.len()];
            for j in 0..y.len() {
                let image = pair.f.apply(pair.dom.find_presheaf(&yoneda(&y, j)).unwrap());
                for (i, row) in entries.iter_mut().enumerate() {
                    row[j] = pair.cod.presheaf(image).values[i];
                }
            }
            let phi = QRelation::new(x.carrier().clone(), y.carrier().clone(), entries)?;
            require_distributor(&phi, &x, &y)?;
            Ok(phi)
        }
        PairKind::DualAxiality => {
            let y = pair.dom.base().clone();
            let x = pair.cod.base().clone();
            let entries = (0..x.len())
                .map(|i| {
                    let image = pair
                        .g
                        .apply(pair.cod.find_copresheaf(&co_yoneda(&x, i)).unwrap());
                    pair.dom.copresheaf(image).values.clone()
                })
                .collect();
            let phi = QRelation::new(x.carrier().clone(), y.carrier().clone(), entries)?;
            require_distributor(&phi, &x, &y)?;
            Ok(phi)
        }
    }
}

/// The domain-side fixed points `{μ | g(f μ) = μ}` of a powerset pair, with
/// the inherited order.
#[derive(Debug, Clone)]
pub struct FixedPoints {
    pub indices: Vec<usize>,
    pub ordered: QOrderedSet,
}

pub fn fixed_points(pair: &PowersetPair) -> FixedPoints {
    let indices: Vec<usize> = (0..pair.dom.len())
        .filter(|&i| pair.g.apply(pair.f.apply(i)) == i)
        .collect();
    let ordered = pair.dom.ordered().restrict(&indices);
    FixedPoints { indices, ordered }
}

/// The MacNeille completion: fixed points of the polarity induced by the
/// identity distributor, i.e. of `ub ⊣ lb: PX ⇄ P†X`.
pub struct MacNeille {
    pub pair: PowersetPair,
    pub fixed: FixedPoints,
}

pub fn macneille(x: &QOrderedSet, caps: &Caps) -> Result<MacNeille, OrderError> {
    let pair = isbell(x.order(), x, x, caps)?;
    let fixed = fixed_points(&pair);
    Ok(MacNeille { pair, fixed })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConceptMode {
    /// Fixed points of the polarity: extents with upper-subset intents.
    Fca,
    /// Fixed points of the axiality: rough-set style pairs of lower subsets.
    Rst,
}

/// One fixed point of the chosen adjunction, presented as extent/intent.
#[derive(Debug, Clone)]
pub struct Concept {
    pub degree: Elem,
    /// A lower subset of the object side.
    pub extent: Presheaf,
    /// Upper subset of the attribute side in FCA mode.
    pub intent_upper: Option<Copresheaf>,
    /// Lower subset of the attribute side in RST mode.
    pub intent_lower: Option<Presheaf>,
}

#[derive(Debug, Clone)]
pub struct ConceptLattice {
    pub mode: ConceptMode,
    pub ordered: QOrderedSet,
    pub concepts: Vec<Concept>,
}

/// The concept lattice of a fuzzy context `φ: X ⇸ Y` between discrete
/// preordered carriers: fixed points of the polarity (`Fca`) or of the
/// axiality (`Rst`), keyed and ordered by their extent/intent presheaf in
/// the domain powerset.
pub fn concept_lattice(
    phi: &QRelation,
    x: &QOrderedSet,
    y: &QOrderedSet,
    mode: ConceptMode,
    caps: &Caps,
) -> Result<ConceptLattice, OrderError> {
    match mode {
        ConceptMode::Fca => {
            let pair = isbell(phi, x, y, caps)?;
            let fixed = fixed_points(&pair);
            let concepts = fixed
                .indices
                .iter()
                .map(|&i| {
                    let extent = pair.dom.presheaf(i).clone();
                    let intent = pair.cod.copresheaf(pair.f.apply(i)).clone();
                    Concept {
                        degree: extent.degree,
                        extent,
                        intent_upper: Some(intent),
                        intent_lower: None,
                    }
                })
                .collect();
            Ok(ConceptLattice {
                mode,
                ordered: fixed.ordered,
                concepts,
            })
        }
        ConceptMode::Rst => {
            let pair = kan(phi, x, y, caps)?;
            let fixed = fixed_points(&pair);
            let concepts = fixed
                .indices
                .iter()
                .map(|&i| {
                    let intent = pair.dom.presheaf(i).clone();
                    let extent = pair.cod.presheaf(pair.f.apply(i)).clone();
                    Concept {
                        degree: intent.degree,
                        extent,
                        intent_upper: None,
                        intent_lower: Some(intent),
                    }
                })
                .collect();
            Ok(ConceptLattice {
                mode,
                ordered: fixed.ordered,
                concepts,
            })
        }
    }
}

/// Whether `μ` has a left adjoint among the copresheaf distributors at the
/// same degree: some `λ: 1_q ⇸∘ X` with `q ≤ (μ∘λ)(*,*)` and `λ∘μ ≤ 1_X^♮`.
pub fn is_right_adjoint_presheaf(base: &QOrderedSet, mu: &Presheaf) -> bool {
    let q = base.quantale();
    let mu_rel = mu.to_relation(base);
    enumerate_values(base, mu.degree, true).into_iter().any(|values| {
        let lam = Copresheaf {
            degree: mu.degree,
            values,
        };
        let lam_rel = lam.to_relation(base);
        let unit = mu_rel.compose(&lam_rel).unwrap();
        q.leq(mu.degree, unit.entry(0, 0)) && lam_rel.compose(&mu_rel).unwrap().leq(base.order())
    })
}

/// The right-adjoint part of the powerset, with its inherited order, plus
/// the corestricted embedding `X → (PX)_c`.
pub struct CauchyPart {
    pub px: PowersetOrder,
    pub indices: Vec<usize>,
    pub ordered: QOrderedSet,
    pub embedding: QOrderMap,
}

pub fn cauchy_part(base: &QOrderedSet, caps: &Caps) -> Result<CauchyPart, OrderError> {
    let px = presheaves(base, caps)?;
    let indices: Vec<usize> = (0..px.len())
        .filter(|&i| is_right_adjoint_presheaf(base, px.presheaf(i)))
        .collect();
    let ordered = px.ordered().restrict(&indices);
    let assign = (0..base.len())
        .map(|i| {
            let full = px.find_presheaf(&yoneda(base, i)).unwrap();
            indices
                .iter()
                .position(|&k| k == full)
                .expect("representables are right adjoints")
        })
        .collect();
    let embedding = QOrderMap::new(base.clone(), ordered.clone(), assign)?;
    Ok(CauchyPart {
        px,
        indices,
        ordered,
        embedding,
    })
}

/// Cauchy completeness: the corestricted embedding has a left adjoint.
pub fn is_cauchy_complete(base: &QOrderedSet, caps: &Caps) -> Result<bool, OrderError> {
    let part = cauchy_part(base, caps)?;
    Ok(!find_adjoint(&part.embedding, AdjointSide::Left, caps)?.is_empty())
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::qord::{make_ordered, QOrderedSet};
    use crate::qrel::{QSubset, RelError};
    use crate::quantale::{bool2, c3};

    fn caps() -> Caps {
        Caps::default()
    }

    fn crisp_poset_bool2(labels: &[&str], leq: &[(usize, usize)]) -> QOrderedSet {
        let q = Arc::new(bool2());
        let n = labels.len();
        let carrier =
            QSubset::crisp(q, labels.iter().map(|s| s.to_string()).collect::<Vec<_>>());
        let mut alpha = vec![vec![0usize; n]; n];
        for i in 0..n {
            alpha[i][i] = 1;
        }
        for &(i, j) in leq {
            alpha[i][j] = 1;
        }
        make_ordered(carrier, alpha).unwrap()
    }

    #[test]
    fn order_matrix_is_the_identity_distributor() {
        let x = crate::qord::tests_support::c3_intrinsic([1, 1, 2]);
        let (ok, _) = is_distributor(x.order(), &x, &x).unwrap();
        assert!(ok);
        let ch = distributor_characterizations(x.order(), &x, &x).unwrap();
        assert!(ch.iter().all(|&b| b));
    }

    #[test]
    fn graphs_and_cographs_are_distributors_and_adjoint() {
        let x = crate::qord::tests_support::c3_intrinsic([1, 1, 2]);
        let crisp = x.coreflect(&[1]);
        let assign: Vec<usize> = crisp
            .carrier()
            .labels()
            .iter()
            .map(|l| x.carrier().index_of(l).unwrap())
            .collect();
        let f = QOrderMap::new(crisp.clone(), x.clone(), assign).unwrap();
        let graph = f.graph().unwrap();
        let cograph = f.cograph().unwrap();
        assert!(is_distributor(&graph, &crisp, &x).unwrap().0);
        assert!(is_distributor(&cograph, &x, &crisp).unwrap().0);
        assert!(is_dist_adjoint(&graph, &cograph, &crisp, &x).unwrap());
        assert!(!is_dist_adjoint(&cograph, &graph, &x, &crisp).unwrap_or(true));
    }

    #[test]
    fn non_distributor_detected_with_witness() {
        // Over a nondiscrete order a relation missing downward closure fails.
        let x = crisp_poset_bool2(&["a", "b"], &[(0, 1)]);
        let one = QOrderedSet::singleton(x.quantale().clone(), 1);
        let rel = QRelation::new(
            x.carrier().clone(),
            one.carrier().clone(),
            vec![vec![0], vec![1]],
        )
        .unwrap();
        let (ok, witness) = is_distributor(&rel, &x, &one).unwrap();
        assert!(!ok);
        assert_eq!(witness, Some((0, 0)));
        let ch = distributor_characterizations(&rel, &x, &one).unwrap();
        assert!(ch.iter().all(|&b| !b));
    }

    #[test]
    fn identity_distributor_is_self_adjoint() {
        let x = crate::qord::tests_support::c3_intrinsic([1, 1, 1]);
        assert!(is_dist_adjoint(x.order(), x.order(), &x, &x).unwrap());
    }

    #[test]
    fn galois_criteria_agree_and_find_adjoint_works() {
        // Between complete bool2 fixtures, the doubling map has no adjoint,
        // the identity does.
        let x = crisp_poset_bool2(&["lo", "hi"], &[(0, 1)]);
        let id = QOrderMap::identity(&x);
        assert!(is_galois(&id, &id).unwrap());
        let rights = find_adjoint(&id, AdjointSide::Right, &caps()).unwrap();
        assert_eq!(rights.len(), 1);

        let to_top = QOrderMap::new(x.clone(), x.clone(), vec![1, 1]).unwrap();
        assert!(find_adjoint(&to_top, AdjointSide::Right, &caps())
            .unwrap()
            .is_empty());
        // but it has a left adjoint (it preserves meets on a chain)
        assert_eq!(
            find_adjoint(&to_top, AdjointSide::Left, &caps()).unwrap().len(),
            1
        );
        assert!(underlying_right_adjoint(&to_top).is_none());
        assert!(underlying_left_adjoint(&to_top).is_some());
    }

    #[test]
    fn isbell_of_identity_is_ub_lb_and_kan_is_identity() {
        let x = crate::qord::tests_support::c3_intrinsic([1, 1, 2]);
        let pair = isbell(x.order(), &x, &x, &caps()).unwrap();
        assert!(is_galois(&pair.f, &pair.g).unwrap());
        for (i, mu) in pair.dom.presheaves().iter().enumerate() {
            let expect = crate::completion::ub(&x, mu);
            assert_eq!(pair.cod.copresheaf(pair.f.apply(i)), &expect);
        }
        for (j, lam) in pair.cod.copresheaves().iter().enumerate() {
            let expect = crate::completion::lb(&x, lam);
            assert_eq!(pair.dom.presheaf(pair.g.apply(j)), &expect);
        }
        let k = kan(x.order(), &x, &x, &caps()).unwrap();
        assert!(k.f.assignment().iter().enumerate().all(|(a, &b)| a == b));
        assert!(k.g.assignment().iter().enumerate().all(|(a, &b)| a == b));
        let dk = dual_kan(x.order(), &x, &x, &caps()).unwrap();
        assert!(dk.f.assignment().iter().enumerate().all(|(a, &b)| a == b));
        assert!(dk.g.assignment().iter().enumerate().all(|(a, &b)| a == b));
    }

    #[test]
    fn distributor_round_trips_through_all_three_pairs() {
        let x = crate::qord::tests_support::c3_intrinsic([1, 1, 2]);
        let y = crate::qord::tests_support::c3_intrinsic([1, 1, 1]);
        // Distributor-ify a relation by composing with both orders.
        let raw = QRelation::identity(x.carrier());
        let raw = QRelation::new(
            x.carrier().clone(),
            y.carrier().clone(),
            raw.entries().clone(),
        )
        .unwrap();
        let phi = y
            .order()
            .compose(&raw)
            .unwrap()
            .compose(x.order())
            .unwrap();
        assert!(is_distributor(&phi, &x, &y).unwrap().0);
        for (kind, pair) in [
            ("isbell", isbell(&phi, &x, &y, &caps()).unwrap()),
            ("kan", kan(&phi, &x, &y, &caps()).unwrap()),
            ("dual_kan", dual_kan(&phi, &x, &y, &caps()).unwrap()),
        ] {
            assert!(is_galois(&pair.f, &pair.g).unwrap(), "{kind} not adjoint");
            let back = dist_from_pair(&pair).unwrap();
            assert_eq!(back.entries(), phi.entries(), "{kind} round trip");
        }
    }

    #[test]
    fn macneille_of_a_crisp_antichain_is_the_diamond_plus_degree_bottom() {
        let x = crisp_poset_bool2(&["a", "b"], &[]);
        let mac = macneille(&x, &caps()).unwrap();
        // cuts: {}, {a}, {b}, {a,b} at degree 1, plus the degree-0 element
        assert_eq!(mac.fixed.ordered.len(), 5);
        let report =
            crate::completion::completeness_report(&mac.fixed.ordered, &caps()).unwrap();
        assert!(report.complete);
        assert!(mac.fixed.ordered.is_separated());
        // y_X lands in the fixed points, fully faithfully.
        for i in 0..x.len() {
            let idx = mac.pair.dom.find_presheaf(&yoneda(&x, i)).unwrap();
            assert!(mac.fixed.indices.contains(&idx));
        }
    }

    #[test]
    fn fca_concepts_of_a_crisp_context_match_subset_brute_force() {
        let q = Arc::new(bool2());
        let x = QOrderedSet::discrete(QSubset::crisp(
            q.clone(),
            vec!["g1".into(), "g2".into(), "g3".into()],
        ));
        let y = QOrderedSet::discrete(QSubset::crisp(q.clone(), vec!["m1".into(), "m2".into()]));
        let incidence = [[1, 0], [1, 1], [0, 1]];
        let phi = QRelation::new(
            x.carrier().clone(),
            y.carrier().clone(),
            incidence.iter().map(|r| r.to_vec()).collect(),
        )
        .unwrap();
        let lattice = concept_lattice(&phi, &x, &y, ConceptMode::Fca, &caps()).unwrap();

        // Classical oracle: extents A with A'' = A, by brute force.
        let derive_up = |a: u32| -> u32 {
            let mut out = 0u32;
            for m in 0..2 {
                if (0..3).all(|g| a >> g & 1 == 0 || incidence[g][m] == 1) {
                    out |= 1 << m;
                }
            }
            out
        };
        let derive_down = |b: u32| -> u32 {
            let mut out = 0u32;
            for g in 0..3 {
                if (0..2).all(|m| b >> m & 1 == 0 || incidence[g][m] == 1) {
                    out |= 1 << g;
                }
            }
            out
        };
        let mut classical: Vec<u32> = (0..8u32)
            .filter(|&a| derive_down(derive_up(a)) == a)
            .collect();
        classical.sort_unstable();

        let mut ours: Vec<u32> = lattice
            .concepts
            .iter()
            .filter(|c| c.degree == 1)
            .map(|c| {
                c.extent
                    .values
                    .iter()
                    .enumerate()
                    .fold(0u32, |acc, (i, &v)| acc | ((v as u32) << i))
            })
            .collect();
        ours.sort_unstable();
        assert_eq!(ours, classical);
    }

    #[test]
    fn all_bottom_context_keeps_only_degreewise_extremes() {
        let q = Arc::new(bool2());
        let x = QOrderedSet::discrete(QSubset::crisp(
            q.clone(),
            vec!["g1".into(), "g2".into()],
        ));
        let y = QOrderedSet::discrete(QSubset::crisp(q.clone(), vec!["m".into()]));
        let phi = QRelation::new(
            x.carrier().clone(),
            y.carrier().clone(),
            vec![vec![0], vec![0]],
        )
        .unwrap();
        let lattice = concept_lattice(&phi, &x, &y, ConceptMode::Fca, &caps()).unwrap();
        // The closure of any nonempty extent is the full one, so only the
        // degreewise bottom and top extents survive; the structure of the
        // carrier no longer matters.
        let mut extents: Vec<(Elem, Vec<Elem>)> = lattice
            .concepts
            .iter()
            .map(|c| (c.degree, c.extent.values.clone()))
            .collect();
        extents.sort();
        assert_eq!(
            extents,
            vec![(0, vec![0, 0]), (1, vec![0, 0]), (1, vec![1, 1])]
        );
    }

    #[test]
    fn representables_are_right_adjoints_and_complete_implies_cauchy() {
        let x = crisp_poset_bool2(&["a", "b"], &[]);
        let px = presheaves(&x, &caps()).unwrap();
        for i in 0..x.len() {
            assert!(is_right_adjoint_presheaf(&x, &yoneda(&x, i)));
        }
        // The crisp antichain is not Cauchy complete: the degree-0 element
        // of (PX)_c has nowhere to go.
        assert!(!is_cauchy_complete(&x, &caps()).unwrap());
        let _ = px;

        // A complete fixture is Cauchy complete.
        let q = Arc::new(bool2());
        let carrier = QSubset::new(
            q,
            vec!["lo".into(), "hi".into(), "z".into()],
            vec![1, 1, 0],
        )
        .unwrap();
        let alpha = vec![vec![1, 1, 0], vec![0, 1, 0], vec![0, 0, 0]];
        let complete = make_ordered(carrier, alpha).unwrap();
        assert!(
            crate::completion::completeness_report(&complete, &caps())
                .unwrap()
                .complete
        );
        assert!(is_cauchy_complete(&complete, &caps()).unwrap());
    }

    #[test]
    fn adjoint_characterizations_agree_on_complete_fixtures() {
        let q = Arc::new(bool2());
        let carrier = QSubset::new(
            q,
            vec!["lo".into(), "hi".into(), "z".into()],
            vec![1, 1, 0],
        )
        .unwrap();
        let alpha = vec![vec![1, 1, 0], vec![0, 1, 0], vec![0, 0, 0]];
        let x = make_ordered(carrier, alpha).unwrap();
        let id = QOrderMap::identity(&x);
        let ch = adjoint_characterizations(&id, &caps()).unwrap();
        assert!(ch.left_adjoint && ch.sup_preserving && ch.underlying_left_with_tensors);
        assert!(ch.right_adjoint && ch.inf_preserving && ch.underlying_right_with_cotensors);

        // Sending lo to hi is monotone but neither adjoint.
        let up = QOrderMap::new(x.clone(), x.clone(), vec![1, 1, 2]).unwrap();
        assert!(up.is_morphism());
        let ch = adjoint_characterizations(&up, &caps()).unwrap();
        assert!(!ch.left_adjoint && !ch.sup_preserving && !ch.underlying_left_with_tensors);
    }

    #[test]
    fn rejects_shape_mismatches() {
        let x = crisp_poset_bool2(&["a"], &[]);
        let y = crisp_poset_bool2(&["b", "c"], &[]);
        let bad = QRelation::new(
            x.carrier().clone(),
            x.carrier().clone(),
            vec![vec![1]],
        )
        .unwrap();
        assert!(matches!(
            is_distributor(&bad, &x, &y),
            Err(OrderError::InvalidMap(_))
        ));
        let _ = RelError::QuantaleMismatch;
    }
}
