//! The executable law suite: every structural fact the crate relies on,
//! registered under a stable identifier and exercised per quantale with
//! seeded generators. Reports are deterministic for a fixed configuration
//! and are assembled in law-id order regardless of execution order.

use std::panic::AssertUnwindSafe;
use std::sync::Arc;

use crate::caps::Caps;
use crate::completion::{
    completeness_report, cotensor_witnesses, inf_witnesses, is_complete_structurally,
    is_inf_preserving, is_sup_preserving, lb, sup_witnesses, tensor_witnesses, ub,
};
use crate::galois::{
    adjunction_identity_suite, cauchy_part, concept_lattice, dist_from_pair,
    distributor_characterizations, dual_kan, find_adjoint, fixed_points, is_cauchy_complete,
    is_dist_adjoint, is_distributor, is_galois, is_right_adjoint_presheaf, isbell, kan,
    lift_galois, macneille, preserves_cotensors, preserves_tensors, underlying_left_adjoint,
    underlying_right_adjoint, AdjointSide, ConceptMode, PairKind,
};
use crate::presheaf::{
    co_yoneda, co_yoneda_map, copresheaf_order_entry, copresheaves, powerset_size_estimate,
    presheaf_order_entry, presheaves, yoneda, yoneda_map, Copresheaf, Presheaf,
};
use crate::qord::{from_hoehle, make_ordered, map_leq, to_hoehle, QOrderMap, QOrderedSet};
use crate::qrel::{hom_join, hom_meet, QRelation, QSubset};
use crate::quantale::{Elem, FiniteQuantale};
use crate::sampling::Sampler;

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub quantales: Vec<Arc<FiniteQuantale>>,
    pub seed: u64,
    pub samples: usize,
    pub caps: Caps,
}

#[derive(Debug, Clone)]
pub struct LawEntry {
    pub law: String,
    pub quantale: String,
    pub instances: usize,
    pub summary: String,
    pub pass: bool,
    pub witness: Option<String>,
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub seed: u64,
    pub samples: usize,
    pub entries: Vec<LawEntry>,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "verify seed={} samples={}\n",
            self.seed, self.samples
        ));
        for e in &self.entries {
            let status = if e.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!(
                "{} {} quantale={} [{}]",
                status, e.law, e.quantale, e.summary
            ));
            if let Some(w) = &e.witness {
                out.push_str(&format!(" witness: {w}"));
            }
            out.push('\n');
        }
        let failed = self.entries.iter().filter(|e| !e.pass).count();
        out.push_str(&format!(
            "summary: {} checks, {} passed, {} failed\n",
            self.entries.len(),
            self.entries.len() - failed,
            failed
        ));
        out
    }

    pub fn render_json(&self) -> serde_json::Value {
        let entries: Vec<serde_json::Value> = self
            .entries
            .iter()
            .map(|e| {
                serde_json::json!({
                    "law": e.law,
                    "quantale": e.quantale,
                    "instances": e.instances,
                    "summary": e.summary,
                    "pass": e.pass,
                    "witness": e.witness,
                })
            })
            .collect();
        let failed = self.entries.iter().filter(|e| !e.pass).count();
        serde_json::json!({
            "seed": self.seed,
            "samples": self.samples,
            "entries": entries,
            "summary": {
                "checks": self.entries.len(),
                "passed": self.entries.len() - failed,
                "failed": failed,
            },
        })
    }
}

struct Ctx {
    q: Arc<FiniteQuantale>,
    s: Sampler,
    samples: usize,
    caps: Caps,
}

impl Ctx {
    /// Carrier size bound keeping powerset enumerations small.
    fn small(&self) -> usize {
        if self.q.len() >= 5 {
            2
        } else {
            3
        }
    }
}

struct Outcome {
    instances: usize,
    summary: String,
    witness: Option<String>,
}

impl Outcome {
    fn pass(instances: usize, summary: impl Into<String>) -> Self {
        Outcome {
            instances,
            summary: summary.into(),
            witness: None,
        }
    }

    fn vacuous(reason: &str) -> Self {
        Outcome {
            instances: 0,
            summary: format!("vacuous: {reason}"),
            witness: None,
        }
    }

    fn fail(instances: usize, summary: impl Into<String>, witness: impl Into<String>) -> Self {
        Outcome {
            instances,
            summary: summary.into(),
            witness: Some(witness.into()),
        }
    }
}

/// Completeness by full supremum enumeration when the powersets fit the
/// caps, otherwise by the structural characterization (whose equivalence is
/// itself a registered law on enumerable fixtures).
fn completeness_flag(x: &QOrderedSet, caps: &Caps) -> Option<bool> {
    if powerset_size_estimate(x, false) <= caps.powerset
        && powerset_size_estimate(x, true) <= caps.powerset
    {
        completeness_report(x, caps).ok().map(|r| r.complete)
    } else {
        is_complete_structurally(x, caps).ok()
    }
}

/// A complete fixture (a powerset) whose own powersets stay enumerable.
fn enumerable_complete_fixture(ctx: &mut Ctx) -> Option<QOrderedSet> {
    let q = ctx.q.clone();
    for attempt in 0..4 {
        let base = if attempt < 3 {
            ctx.s.ordered(&q, 1, 1)
        } else {
            QOrderedSet::singleton(q.clone(), q.bottom())
        };
        let Ok(px) = presheaves(&base, &ctx.caps) else {
            continue;
        };
        let x = px.ordered().clone();
        if powerset_size_estimate(&x, false) <= ctx.caps.powerset
            && powerset_size_estimate(&x, true) <= ctx.caps.powerset
        {
            return Some(x);
        }
    }
    None
}

macro_rules! ensure {
    ($ctx:expr, $n:expr, $summary:expr, $cond:expr, $witness:expr) => {
        if !$cond {
            return Outcome::fail($n, $summary, $witness);
        }
    };
}

type Law = (&'static str, fn(&mut Ctx) -> Outcome);

// ---------------------------------------------------------------------------
// quantale laws

fn law_residuation_adjunction(ctx: &mut Ctx) -> Outcome {
    let q = &ctx.q;
    let mut n = 0;
    for p in q.elements() {
        for r in q.elements() {
            for s in q.elements() {
                n += 1;
                let lhs = q.leq(q.mul(p, r), s);
                let via_left = q.leq(p, q.res_left(s, r));
                let via_right = q.leq(r, q.res_right(p, s));
                ensure!(
                    ctx,
                    n,
                    "exhaustive triples",
                    lhs == via_left && lhs == via_right,
                    format!("{} {} {}", q.label(p), q.label(r), q.label(s))
                );
            }
        }
    }
    Outcome::pass(n, "exhaustive triples")
}

fn law_diagonal_structure(ctx: &mut Ctx) -> Outcome {
    let q = &ctx.q;
    let (bot, e, top) = (q.bottom(), q.unit(), q.top());
    let mut n = 0;
    ensure!(
        ctx,
        n,
        "element pairs",
        q.diagonal(e, e).len() == q.len(),
        "unit diagonal is not the whole quantale"
    );
    for p in q.elements() {
        n += 1;
        ensure!(
            ctx,
            n,
            "element pairs",
            q.diagonal(bot, p) == vec![bot] && q.diagonal(p, bot) == vec![bot],
            format!("bottom diagonal at {}", q.label(p))
        );
        ensure!(
            ctx,
            n,
            "element pairs",
            q.diag_contains(p, p, p),
            format!("{} misses its own diagonal", q.label(p))
        );
        for r in q.elements() {
            ensure!(
                ctx,
                n,
                "element pairs",
                q.diag_contains(p, r, bot),
                format!("bottom missing from D({}, {})", q.label(p), q.label(r))
            );
        }
    }
    ensure!(
        ctx,
        n,
        "element pairs",
        q.diag_contains(top, top, e) == q.is_integral(),
        "unit-in-top-diagonal does not track integrality"
    );
    Outcome::pass(n, "element pairs")
}

fn law_diagonal_divisibility(ctx: &mut Ctx) -> Outcome {
    let q = &ctx.q;
    let integral = q.is_integral();
    let mut by_downsets = true;
    let mut n = 0;
    for p in q.elements() {
        for r in q.elements() {
            n += 1;
            let m = q.meet(p, r);
            let down: Vec<Elem> = q.elements().filter(|&u| q.leq(u, m)).collect();
            let diag = q.diagonal(p, r);
            let subset = diag.iter().all(|u| down.contains(u));
            if integral {
                ensure!(
                    ctx,
                    n,
                    "element pairs",
                    subset,
                    format!("D({}, {}) escapes the down-set", q.label(p), q.label(r))
                );
            }
            by_downsets &= diag == down;
        }
    }
    ensure!(
        ctx,
        n,
        "element pairs",
        by_downsets == q.is_divisible(),
        "divisibility flag disagrees with the down-set criterion"
    );
    Outcome::pass(n, "element pairs")
}

fn law_diagonal_join_closed(ctx: &mut Ctx) -> Outcome {
    let q = &ctx.q;
    let mut n = 0;
    for p in q.elements() {
        for r in q.elements() {
            let members = q.diagonal(p, r);
            for &u in &members {
                for &v in &members {
                    n += 1;
                    ensure!(
                        ctx,
                        n,
                        "pairwise joins",
                        q.diag_contains(p, r, q.join(u, v)),
                        format!(
                            "join of {} and {} leaves D({}, {})",
                            q.label(u),
                            q.label(v),
                            q.label(p),
                            q.label(r)
                        )
                    );
                }
            }
        }
    }
    Outcome::pass(n, "pairwise joins")
}

fn law_nonintegral_embeds_c3(ctx: &mut Ctx) -> Outcome {
    let q = &ctx.q;
    if q.is_integral() {
        return Outcome::vacuous("integral quantale");
    }
    let c3 = crate::quantale::c3();
    let sub = [q.bottom(), q.unit(), q.top()];
    let mut n = 0;
    for (i, &p) in sub.iter().enumerate() {
        for (j, &r) in sub.iter().enumerate() {
            n += 1;
            let prod = q.mul(p, r);
            let pos = sub.iter().position(|&s| s == prod);
            ensure!(
                ctx,
                n,
                "subquantale table",
                pos == Some(c3.mul(i, j)),
                format!("{} & {}", q.label(p), q.label(r))
            );
        }
    }
    Outcome::pass(n, "subquantale table")
}

fn law_conjugate_involution(ctx: &mut Ctx) -> Outcome {
    let q = &ctx.q;
    let back = q.conjugate().conjugate();
    let mut n = 0;
    for p in q.elements() {
        for r in q.elements() {
            n += 1;
            ensure!(
                ctx,
                n,
                "element pairs",
                back.mul(p, r) == q.mul(p, r) && q.conjugate().mul(p, r) == q.mul(r, p),
                format!("{} & {}", q.label(p), q.label(r))
            );
        }
    }
    Outcome::pass(n, "element pairs")
}

// ---------------------------------------------------------------------------
// relation laws

/// Three composable random relations plus their frames.
fn composable_triple(ctx: &mut Ctx) -> (QRelation, QRelation, QRelation) {
    let q = ctx.q.clone();
    let x = ctx.s.subset(&q, 1, 4);
    let y = ctx.s.subset(&q, 1, 4);
    let z = ctx.s.subset(&q, 1, 4);
    let w = ctx.s.subset(&q, 1, 4);
    (
        ctx.s.relation(&x, &y),
        ctx.s.relation(&y, &z),
        ctx.s.relation(&z, &w),
    )
}

fn law_identity_unit(ctx: &mut Ctx) -> Outcome {
    let n = ctx.samples;
    for i in 0..n {
        let (phi, _, _) = composable_triple(ctx);
        let lhs = QRelation::identity(phi.target()).compose(&phi).unwrap();
        let rhs = phi.compose(&QRelation::identity(phi.source())).unwrap();
        ensure!(
            ctx,
            i,
            "sampled relations",
            lhs == phi && rhs == phi,
            format!("identity laws fail on sample {i}")
        );
    }
    Outcome::pass(n, "sampled relations")
}

fn law_compose_associative(ctx: &mut Ctx) -> Outcome {
    let n = ctx.samples;
    for i in 0..n {
        let (phi, psi, xi) = composable_triple(ctx);
        let lhs = xi.compose(&psi.compose(&phi).unwrap()).unwrap();
        let rhs = xi.compose(&psi).unwrap().compose(&phi).unwrap();
        ensure!(
            ctx,
            i,
            "sampled triples",
            lhs == rhs,
            format!("associativity fails on sample {i}")
        );
    }
    Outcome::pass(n, "sampled triples")
}

fn law_compose_join_distributive(ctx: &mut Ctx) -> Outcome {
    let n = ctx.samples;
    for i in 0..n {
        let q = ctx.q.clone();
        let x = ctx.s.subset(&q, 1, 3);
        let y = ctx.s.subset(&q, 1, 3);
        let z = ctx.s.subset(&q, 1, 3);
        let phi1 = ctx.s.relation(&x, &y);
        let phi2 = ctx.s.relation(&x, &y);
        let psi = ctx.s.relation(&y, &z);
        let join = hom_join(&x, &y, &[&phi1, &phi2]).unwrap();
        let lhs = psi.compose(&join).unwrap();
        let rhs = hom_join(
            &x,
            &z,
            &[
                &psi.compose(&phi1).unwrap(),
                &psi.compose(&phi2).unwrap(),
            ],
        )
        .unwrap();
        ensure!(
            ctx,
            i,
            "sampled joins",
            lhs == rhs,
            format!("right distribution fails on sample {i}")
        );
        let psi2 = ctx.s.relation(&y, &z);
        let join_psi = hom_join(&y, &z, &[&psi, &psi2]).unwrap();
        let lhs = join_psi.compose(&phi1).unwrap();
        let rhs = hom_join(
            &x,
            &z,
            &[
                &psi.compose(&phi1).unwrap(),
                &psi2.compose(&phi1).unwrap(),
            ],
        )
        .unwrap();
        ensure!(
            ctx,
            i,
            "sampled joins",
            lhs == rhs,
            format!("left distribution fails on sample {i}")
        );
    }
    Outcome::pass(n, "sampled joins")
}

fn law_decomposition(ctx: &mut Ctx) -> Outcome {
    let n = ctx.samples.min(100);
    for i in 0..n {
        let (phi, psi, _) = composable_triple(ctx);
        let x = phi.source().clone();
        let y = phi.target().clone();
        let z = psi.target().clone();
        // ψ∘φ = ⋁_y ψ(y,−)∘φ(−,y)
        let parts: Vec<QRelation> = (0..y.len())
            .map(|j| psi.row(j).compose(&phi.column(j)).unwrap())
            .collect();
        let refs: Vec<&QRelation> = parts.iter().collect();
        let lhs = psi.compose(&phi).unwrap();
        ensure!(
            ctx,
            i,
            "sampled decompositions",
            lhs == hom_join(&x, &z, &refs).unwrap(),
            format!("composition decomposition fails on sample {i}")
        );
        // ξ↙φ = meet over x of ξ(x,−)↙φ(x,−)
        let xi = ctx.s.relation(&x, &z);
        let lhs = QRelation::imp_left(&xi, &phi).unwrap();
        let parts: Vec<QRelation> = (0..x.len())
            .map(|i| QRelation::imp_left(&xi.row(i), &phi.row(i)).unwrap())
            .collect();
        let refs: Vec<&QRelation> = parts.iter().collect();
        ensure!(
            ctx,
            i,
            "sampled decompositions",
            lhs == hom_meet(&y, &z, &refs).unwrap(),
            format!("left implication decomposition fails on sample {i}")
        );
        // ψ↘ξ = meet over z of ψ(−,z)↘ξ(−,z)
        let lhs = QRelation::imp_right(&psi, &xi).unwrap();
        let parts: Vec<QRelation> = (0..z.len())
            .map(|k| QRelation::imp_right(&psi.column(k), &xi.column(k)).unwrap())
            .collect();
        let refs: Vec<&QRelation> = parts.iter().collect();
        ensure!(
            ctx,
            i,
            "sampled decompositions",
            lhs == hom_meet(&x, &y, &refs).unwrap(),
            format!("right implication decomposition fails on sample {i}")
        );
    }
    Outcome::pass(n, "sampled decompositions")
}

fn law_imp_adjunction(ctx: &mut Ctx) -> Outcome {
    let n = ctx.samples;
    for i in 0..n {
        let (phi, psi, _) = composable_triple(ctx);
        let xi = ctx.s.relation(phi.source(), psi.target());
        let comp = psi.compose(&phi).unwrap().leq(&xi);
        let left = psi.leq(&QRelation::imp_left(&xi, &phi).unwrap());
        let right = phi.leq(&QRelation::imp_right(&psi, &xi).unwrap());
        ensure!(
            ctx,
            i,
            "sampled triples",
            comp == left && comp == right,
            format!("adjunction fails on sample {i}")
        );
    }
    Outcome::pass(n, "sampled triples")
}

fn law_imp_meet_distribution(ctx: &mut Ctx) -> Outcome {
    let n = ctx.samples;
    for i in 0..n {
        let q = ctx.q.clone();
        let x = ctx.s.subset(&q, 1, 3);
        let y = ctx.s.subset(&q, 1, 3);
        let z = ctx.s.subset(&q, 1, 3);
        let phi = ctx.s.relation(&x, &y);
        let xi1 = ctx.s.relation(&x, &z);
        let xi2 = ctx.s.relation(&x, &z);
        let meet = hom_meet(&x, &z, &[&xi1, &xi2]).unwrap();
        let lhs = QRelation::imp_left(&meet, &phi).unwrap();
        let rhs = hom_meet(
            &y,
            &z,
            &[
                &QRelation::imp_left(&xi1, &phi).unwrap(),
                &QRelation::imp_left(&xi2, &phi).unwrap(),
            ],
        )
        .unwrap();
        ensure!(
            ctx,
            i,
            "sampled meets",
            lhs == rhs,
            format!("left implication meet law fails on sample {i}")
        );
        let psi = ctx.s.relation(&y, &z);
        let lhs = QRelation::imp_right(&psi, &meet).unwrap();
        let rhs = hom_meet(
            &x,
            &y,
            &[
                &QRelation::imp_right(&psi, &xi1).unwrap(),
                &QRelation::imp_right(&psi, &xi2).unwrap(),
            ],
        )
        .unwrap();
        ensure!(
            ctx,
            i,
            "sampled meets",
            lhs == rhs,
            format!("right implication meet law fails on sample {i}")
        );
    }
    Outcome::pass(n, "sampled meets")
}

fn law_imp_join_antitone(ctx: &mut Ctx) -> Outcome {
    let n = ctx.samples;
    for i in 0..n {
        let q = ctx.q.clone();
        let x = ctx.s.subset(&q, 1, 3);
        let y = ctx.s.subset(&q, 1, 3);
        let z = ctx.s.subset(&q, 1, 3);
        let phi1 = ctx.s.relation(&x, &y);
        let phi2 = ctx.s.relation(&x, &y);
        let xi = ctx.s.relation(&x, &z);
        let join = hom_join(&x, &y, &[&phi1, &phi2]).unwrap();
        let lhs = QRelation::imp_left(&xi, &join).unwrap();
        let rhs = hom_meet(
            &y,
            &z,
            &[
                &QRelation::imp_left(&xi, &phi1).unwrap(),
                &QRelation::imp_left(&xi, &phi2).unwrap(),
            ],
        )
        .unwrap();
        ensure!(
            ctx,
            i,
            "sampled joins",
            lhs == rhs,
            format!("antitone law (left) fails on sample {i}")
        );
        let psi1 = ctx.s.relation(&y, &z);
        let psi2 = ctx.s.relation(&y, &z);
        let join_psi = hom_join(&y, &z, &[&psi1, &psi2]).unwrap();
        let lhs = QRelation::imp_right(&join_psi, &xi).unwrap();
        let rhs = hom_meet(
            &x,
            &y,
            &[
                &QRelation::imp_right(&psi1, &xi).unwrap(),
                &QRelation::imp_right(&psi2, &xi).unwrap(),
            ],
        )
        .unwrap();
        ensure!(
            ctx,
            i,
            "sampled joins",
            lhs == rhs,
            format!("antitone law (right) fails on sample {i}")
        );
    }
    Outcome::pass(n, "sampled joins")
}

fn law_imp_composition_chain(ctx: &mut Ctx) -> Outcome {
    let n = ctx.samples;
    for i in 0..n {
        let q = ctx.q.clone();
        let x = ctx.s.subset(&q, 1, 3);
        let y = ctx.s.subset(&q, 1, 3);
        let w = ctx.s.subset(&q, 1, 3);
        let z = ctx.s.subset(&q, 1, 3);
        let phi = ctx.s.relation(&x, &y);
        let psi = ctx.s.relation(&x, &w);
        let xi = ctx.s.relation(&x, &z);
        let lhs = QRelation::imp_left(&xi, &psi)
            .unwrap()
            .compose(&QRelation::imp_left(&psi, &phi).unwrap())
            .unwrap();
        ensure!(
            ctx,
            i,
            "sampled chains",
            lhs.leq(&QRelation::imp_left(&xi, &phi).unwrap()),
            format!("left chain law fails on sample {i}")
        );
        // (φ↘ψ)∘(ψ↘ξ) ≤ φ↘ξ for relations φ: A⇸Z, ψ: B⇸Z, ξ: C⇸Z.
        let zz = ctx.s.subset(&q, 1, 3);
        let phi3 = ctx.s.relation(&y, &zz);
        let psi3 = ctx.s.relation(&w, &zz);
        let xi3 = ctx.s.relation(&z, &zz);
        let chained = QRelation::imp_right(&phi3, &psi3)
            .unwrap()
            .compose(&QRelation::imp_right(&psi3, &xi3).unwrap())
            .unwrap();
        ensure!(
            ctx,
            i,
            "sampled chains",
            chained.leq(&QRelation::imp_right(&phi3, &xi3).unwrap()),
            format!("right chain law fails on sample {i}")
        );
    }
    Outcome::pass(n, "sampled chains")
}

fn law_imp_currying(ctx: &mut Ctx) -> Outcome {
    let n = ctx.samples;
    for i in 0..n {
        let q = ctx.q.clone();
        let x = ctx.s.subset(&q, 1, 3);
        let y = ctx.s.subset(&q, 1, 3);
        let z1 = ctx.s.subset(&q, 1, 3);
        let z = ctx.s.subset(&q, 1, 3);
        let phi = ctx.s.relation(&x, &y);
        let psi = ctx.s.relation(&y, &z1);
        let xi = ctx.s.relation(&x, &z);
        // (ξ↙φ)↙ψ = ξ↙(ψ∘φ)
        let lhs = QRelation::imp_left(&QRelation::imp_left(&xi, &phi).unwrap(), &psi).unwrap();
        let rhs = QRelation::imp_left(&xi, &psi.compose(&phi).unwrap()).unwrap();
        ensure!(
            ctx,
            i,
            "sampled curries",
            lhs == rhs,
            format!("left currying fails on sample {i}")
        );
        // φ↘(ψ'↘ξ) = (ψ'∘φ)↘ξ with ψ': Y⇸Z
        let psi2 = ctx.s.relation(&y, &z);
        let lhs =
            QRelation::imp_right(&phi, &QRelation::imp_right(&psi2, &xi).unwrap()).unwrap();
        let rhs = QRelation::imp_right(&psi2.compose(&phi).unwrap(), &xi).unwrap();
        ensure!(
            ctx,
            i,
            "sampled curries",
            lhs == rhs,
            format!("right currying fails on sample {i}")
        );
    }
    Outcome::pass(n, "sampled curries")
}

fn law_imp_interchange(ctx: &mut Ctx) -> Outcome {
    let n = ctx.samples;
    for i in 0..n {
        let q = ctx.q.clone();
        let x = ctx.s.subset(&q, 1, 3);
        let y = ctx.s.subset(&q, 1, 3);
        let w = ctx.s.subset(&q, 1, 3);
        let z = ctx.s.subset(&q, 1, 3);
        let phi = ctx.s.relation(&x, &w);
        let psi = ctx.s.relation(&y, &z);
        let xi = ctx.s.relation(&x, &z);
        // (ψ↘ξ)↙φ = ψ↘(ξ↙φ)
        let lhs =
            QRelation::imp_left(&QRelation::imp_right(&psi, &xi).unwrap(), &phi).unwrap();
        let rhs =
            QRelation::imp_right(&psi, &QRelation::imp_left(&xi, &phi).unwrap()).unwrap();
        ensure!(
            ctx,
            i,
            "sampled interchanges",
            lhs == rhs,
            format!("interchange fails on sample {i}")
        );
    }
    Outcome::pass(n, "sampled interchanges")
}

fn law_imp_counit(ctx: &mut Ctx) -> Outcome {
    let n = ctx.samples;
    for i in 0..n {
        let (phi, psi, _) = composable_triple(ctx);
        let xi = ctx.s.relation(phi.source(), psi.target());
        let lhs = QRelation::imp_left(&xi, &phi).unwrap().compose(&phi).unwrap();
        ensure!(
            ctx,
            i,
            "sampled counits",
            lhs.leq(&xi),
            format!("left counit fails on sample {i}")
        );
        let rhs = psi
            .compose(&QRelation::imp_right(&psi, &xi).unwrap())
            .unwrap();
        ensure!(
            ctx,
            i,
            "sampled counits",
            rhs.leq(&xi),
            format!("right counit fails on sample {i}")
        );
    }
    Outcome::pass(n, "sampled counits")
}

fn law_imp_lax_shift(ctx: &mut Ctx) -> Outcome {
    let n = ctx.samples;
    for i in 0..n {
        let q = ctx.q.clone();
        let x = ctx.s.subset(&q, 1, 3);
        let y = ctx.s.subset(&q, 1, 3);
        let z = ctx.s.subset(&q, 1, 3);
        let w = ctx.s.subset(&q, 1, 3);
        let phi = ctx.s.relation(&x, &y);
        let psi = ctx.s.relation(&x, &z);
        let xi = ctx.s.relation(&z, &w);
        // ξ∘(ψ↙φ) ≤ (ξ∘ψ)↙φ
        let lhs = xi
            .compose(&QRelation::imp_left(&psi, &phi).unwrap())
            .unwrap();
        let rhs = QRelation::imp_left(&xi.compose(&psi).unwrap(), &phi).unwrap();
        ensure!(
            ctx,
            i,
            "sampled shifts",
            lhs.leq(&rhs),
            format!("left lax shift fails on sample {i}")
        );
        // (ψ'↘ξ')∘φ' ≤ ψ'↘(ξ'∘φ')
        let phi2 = ctx.s.relation(&w, &x);
        let psi2 = ctx.s.relation(&y, &z);
        let xi2 = ctx.s.relation(&x, &z);
        let lhs = QRelation::imp_right(&psi2, &xi2)
            .unwrap()
            .compose(&phi2)
            .unwrap();
        let rhs = QRelation::imp_right(&psi2, &xi2.compose(&phi2).unwrap()).unwrap();
        ensure!(
            ctx,
            i,
            "sampled shifts",
            lhs.leq(&rhs),
            format!("right lax shift fails on sample {i}")
        );
    }
    Outcome::pass(n, "sampled shifts")
}

fn law_imp_global_oracle(ctx: &mut Ctx) -> Outcome {
    // Tiny frames where the join over all candidate relations is feasible.
    let n = ctx.samples.min(20);
    for i in 0..n {
        let q = ctx.q.clone();
        let x = ctx.s.subset(&q, 1, 1);
        let y = ctx.s.subset(&q, 1, 2);
        let z = ctx.s.subset(&q, 1, 1);
        let phi = ctx.s.relation(&x, &y);
        let xi = ctx.s.relation(&x, &z);
        let fast = QRelation::imp_left(&xi, &phi).unwrap();
        // Oracle: enumerate every relation Y ⇸ Z and join the admissible.
        let mut admissible: Vec<QRelation> = Vec::new();
        let mut stack = vec![Vec::<Elem>::new()];
        let cells: Vec<Vec<Elem>> = (0..y.len())
            .flat_map(|j| {
                let q = q.clone();
                let y = y.clone();
                let z = z.clone();
                (0..z.len()).map(move |k| q.diagonal(y.membership(j), z.membership(k)))
            })
            .collect();
        while let Some(partial) = stack.pop() {
            if partial.len() == cells.len() {
                let entries: Vec<Vec<Elem>> = (0..y.len())
                    .map(|j| (0..z.len()).map(|k| partial[j * z.len() + k]).collect())
                    .collect();
                let cand = QRelation::new(y.clone(), z.clone(), entries).unwrap();
                if cand.compose(&phi).unwrap().leq(&xi) {
                    admissible.push(cand);
                }
                continue;
            }
            for &v in &cells[partial.len()] {
                let mut ext = partial.clone();
                ext.push(v);
                stack.push(ext);
            }
        }
        let refs: Vec<&QRelation> = admissible.iter().collect();
        let slow = hom_join(&y, &z, &refs).unwrap();
        ensure!(
            ctx,
            i,
            "tiny oracle frames",
            fast == slow,
            format!("entrywise implication deviates from the global join on sample {i}")
        );
    }
    Outcome::pass(n, "tiny oracle frames")
}

fn law_singleton_imp_vs_residuation(ctx: &mut Ctx) -> Outcome {
    // Exhaustive over singleton frames: check the closed formulas and
    // surface whether some instance separates the relation implication from
    // the bare residuation.
    let q = ctx.q.clone();
    let mut n = 0;
    let mut gap: Option<String> = None;
    for p in q.elements() {
        for m in q.elements() {
            for r in q.elements() {
                let sp = QSubset::singleton(q.clone(), p);
                let sm = QSubset::singleton(q.clone(), m);
                let sr = QSubset::singleton(q.clone(), r);
                for u in q.diagonal(p, m) {
                    for w in q.diagonal(p, r) {
                        n += 1;
                        let ru = QRelation::new(sp.clone(), sm.clone(), vec![vec![u]]).unwrap();
                        let rw = QRelation::new(sp.clone(), sr.clone(), vec![vec![w]]).unwrap();
                        let got = QRelation::imp_left(&rw, &ru).unwrap().entry(0, 0);
                        let bound = q.res_left(w, q.res_right(m, u));
                        let expect =
                            q.join_all(q.diagonal(m, r).into_iter().filter(|&v| q.leq(v, bound)));
                        ensure!(
                            ctx,
                            n,
                            "singleton frames",
                            got == expect,
                            format!(
                                "closed formula fails at u={} w={}",
                                q.label(u),
                                q.label(w)
                            )
                        );
                        if gap.is_none() && got != q.res_left(w, u) {
                            gap = Some(format!(
                                "u={}: 1_{} => 1_{}, w={}: implication {} vs residuation {}",
                                q.label(u),
                                q.label(p),
                                q.label(m),
                                q.label(w),
                                q.label(got),
                                q.label(q.res_left(w, u))
                            ));
                        }
                    }
                }
            }
        }
    }
    let summary = match gap {
        Some(g) => format!("singleton frames; implication differs from residuation at {g}"),
        None => "singleton frames; implication equals residuation everywhere".to_string(),
    };
    Outcome::pass(n, summary)
}

fn law_ops_closed(ctx: &mut Ctx) -> Outcome {
    let n = ctx.samples.min(200);
    for i in 0..n {
        let (phi, psi, _) = composable_triple(ctx);
        let xi = ctx.s.relation(phi.source(), psi.target());
        let ok = psi.compose(&phi).unwrap().is_valid()
            && QRelation::imp_left(&xi, &phi).unwrap().is_valid()
            && QRelation::imp_right(&psi, &xi).unwrap().is_valid();
        ensure!(
            ctx,
            i,
            "sampled operations",
            ok,
            format!("an operation escaped the diagonal sets on sample {i}")
        );
    }
    Outcome::pass(n, "sampled operations")
}

// ---------------------------------------------------------------------------
// preorder laws

fn law_axioms_equal_matrix_conditions(ctx: &mut Ctx) -> Outcome {
    let n = ctx.samples.min(200);
    for i in 0..n {
        let q = ctx.q.clone();
        let carrier = ctx.s.subset(&q, 1, 3);
        let theta = ctx.s.relation(&carrier, &carrier);
        let by_op = make_ordered(carrier.clone(), theta.entries().clone()).is_ok();
        let id = QRelation::identity(&carrier);
        let by_matrix =
            id.leq(&theta) && theta.compose(&theta).unwrap().leq(&theta) && theta.is_valid();
        ensure!(
            ctx,
            i,
            "sampled matrices",
            by_op == by_matrix,
            format!("axioms disagree with the matrix conditions on sample {i}")
        );
    }
    Outcome::pass(n, "sampled matrices")
}

fn law_integral_diagonal_membership(ctx: &mut Ctx) -> Outcome {
    if !ctx.q.is_integral() {
        return Outcome::vacuous("non-integral quantale");
    }
    let q = ctx.q.clone();
    let n = ctx.samples.min(200);
    for i in 0..n {
        let x = ctx.s.ordered(&q, 1, 4);
        for j in 0..x.len() {
            ensure!(
                ctx,
                i,
                "sampled orders",
                x.alpha(j, j) == x.membership(j),
                format!("diagonal entry differs from membership at {}", x.label(j))
            );
        }
    }
    Outcome::pass(n, "sampled orders")
}

fn law_membership_interpolation(ctx: &mut Ctx) -> Outcome {
    let q = ctx.q.clone();
    let n = ctx.samples.min(100);
    for i in 0..n {
        let x = ctx.s.ordered(&q, 1, 3);
        // any membership with |x| ≤ |x|' ≤ α(x,x) keeps the axioms
        let memb: Vec<Elem> = (0..x.len())
            .map(|j| {
                let between: Vec<Elem> = q
                    .elements()
                    .filter(|&m| q.leq(x.membership(j), m) && q.leq(m, x.alpha(j, j)))
                    .collect();
                ctx.s.pick(&between)
            })
            .collect();
        let carrier = x.carrier().with_membership(memb).unwrap();
        ensure!(
            ctx,
            i,
            "sampled interpolations",
            make_ordered(carrier, x.order().entries().clone()).is_ok(),
            format!("interpolated membership breaks the axioms on sample {i}")
        );
    }
    Outcome::pass(n, "sampled interpolations")
}

fn law_morphism_composition(ctx: &mut Ctx) -> Outcome {
    let q = ctx.q.clone();
    let n = ctx.samples.min(100);
    let mut found = 0;
    for _ in 0..n {
        let x = ctx.s.ordered(&q, 1, 3);
        let y = ctx.s.coarsening(&x);
        let z = ctx.s.coarsening(&y);
        let f = QOrderMap::new(x.clone(), y.clone(), (0..x.len()).collect()).unwrap();
        let g = QOrderMap::new(y.clone(), z.clone(), (0..y.len()).collect()).unwrap();
        let gf = f.then(&g).unwrap();
        found += 1;
        ensure!(
            ctx,
            found,
            "composed morphisms",
            f.is_morphism() && g.is_morphism() && gf.is_morphism(),
            "composition lost a morphism property"
        );
        let idx = QOrderMap::identity(&x);
        let idf = idx.then(&f).unwrap();
        ensure!(
            ctx,
            found,
            "composed morphisms",
            idf.check().fully_faithful == f.check().fully_faithful,
            "identity composition changed full faithfulness"
        );
    }
    Outcome::pass(found, "composed morphisms")
}

fn law_map_order_transitive(ctx: &mut Ctx) -> Outcome {
    let q = ctx.q.clone();
    let n = ctx.samples.min(100);
    let mut checked = 0;
    for _ in 0..n {
        let x = ctx.s.ordered(&q, 1, 2);
        let y = ctx.s.ordered(&q, 1, 3);
        let (Some(f), Some(g), Some(h)) = (
            ctx.s.memb_map(&x, &y),
            ctx.s.memb_map(&x, &y),
            ctx.s.memb_map(&x, &y),
        ) else {
            continue;
        };
        if map_leq(&f, &g).unwrap() && map_leq(&g, &h).unwrap() {
            checked += 1;
            ensure!(
                ctx,
                checked,
                "chained pairs",
                map_leq(&f, &h).unwrap(),
                "map order is not transitive"
            );
        }
    }
    Outcome::pass(checked, "chained pairs")
}

fn law_bottom_indiscrete(ctx: &mut Ctx) -> Outcome {
    let q = ctx.q.clone();
    let n = ctx.samples.min(200);
    for i in 0..n {
        let x = ctx.s.ordered(&q, 2, 4);
        let bot = q.bottom();
        for a in 0..x.len() {
            for b in 0..x.len() {
                if x.membership(a) == bot && x.membership(b) == bot {
                    ensure!(
                        ctx,
                        i,
                        "sampled orders",
                        x.underlying_leq(a, b),
                        format!("bottom elements {} and {} are not indiscrete", a, b)
                    );
                }
            }
        }
        if x.is_separated() {
            let bottoms = x.degree_members(bot).len();
            ensure!(
                ctx,
                i,
                "sampled orders",
                bottoms <= 1,
                "separated order with two bottom-degree elements"
            );
        }
    }
    Outcome::pass(n, "sampled orders")
}

fn law_singleton_preorder_count(ctx: &mut Ctx) -> Outcome {
    let q = ctx.q.clone();
    let e = q.unit();
    let carrier = QSubset::new(q.clone(), vec!["*".into()], vec![e]).unwrap();
    let count = q
        .elements()
        .filter(|&v| make_ordered(carrier.clone(), vec![vec![v]]).is_ok())
        .count();
    let expected = q.idempotents_above_unit().len();
    if count != expected {
        return Outcome::fail(
            q.len(),
            "exhaustive singleton scan",
            format!("{count} preorders vs {expected} idempotents above the unit"),
        );
    }
    Outcome::pass(q.len(), "exhaustive singleton scan")
}

fn law_coreflection_idempotent(ctx: &mut Ctx) -> Outcome {
    let q = ctx.q.clone();
    let n = ctx.samples.min(100);
    for i in 0..n {
        let x = ctx.s.ordered(&q, 1, 4);
        let keep: Vec<Elem> = q.elements().filter(|_| ctx.s.range(2) == 0).collect();
        let once = x.coreflect(&keep);
        let twice = once.coreflect(&keep);
        ensure!(
            ctx,
            i,
            "sampled coreflections",
            once == twice,
            format!("coreflection is not idempotent on sample {i}")
        );
        let assign: Vec<usize> = once
            .carrier()
            .labels()
            .iter()
            .map(|l| x.carrier().index_of(l).unwrap())
            .collect();
        if once.len() > 0 {
            let incl = QOrderMap::new(once.clone(), x.clone(), assign).unwrap();
            ensure!(
                ctx,
                i,
                "sampled coreflections",
                incl.check().fully_faithful && incl.check().membership_preserving,
                format!("inclusion is not fully faithful on sample {i}")
            );
        }
    }
    Outcome::pass(n, "sampled coreflections")
}

fn law_hoehle_correspondence(ctx: &mut Ctx) -> Outcome {
    let q = ctx.q.clone();
    let n = ctx.samples.min(100);
    for i in 0..n {
        let x = ctx.s.ordered(&q, 1, 3);
        let alpha = to_hoehle(&x);
        let conj = Arc::new(q.conjugate());
        let back = from_hoehle(&conj, x.carrier().labels().to_vec(), alpha.clone());
        let back = match back {
            Ok(b) => b,
            Err(e) => {
                return Outcome::fail(
                    i,
                    "sampled conversions",
                    format!("exported valued preorder fails to re-validate: {e}"),
                )
            }
        };
        ensure!(
            ctx,
            i,
            "sampled conversions",
            back.order().entries() == x.order().entries(),
            format!("conversion changed the matrix on sample {i}")
        );
        for j in 0..x.len() {
            ensure!(
                ctx,
                i,
                "sampled conversions",
                back.membership(j) == x.alpha(j, j),
                "converted membership is not the diagonal"
            );
        }
        if q.is_integral() {
            ensure!(
                ctx,
                i,
                "sampled conversions",
                back.carrier().memberships() == x.carrier().memberships(),
                format!("integral round trip is not the identity on sample {i}")
            );
        }
    }
    Outcome::pass(n, "sampled conversions")
}

// ---------------------------------------------------------------------------
// presheaf laws

fn law_closure_elementwise(ctx: &mut Ctx) -> Outcome {
    let q = ctx.q.clone();
    let n = ctx.samples.min(40);
    for i in 0..n {
        let x = ctx.s.ordered(&q, 1, ctx.small());
        let px = match presheaves(&x, &ctx.caps) {
            Ok(px) => px,
            Err(e) => return Outcome::fail(i, "sampled powersets", e.to_string()),
        };
        for mu in px.presheaves() {
            for a in 0..x.len() {
                for b in 0..x.len() {
                    let w = q.mul(q.res_left(mu.values[b], x.membership(b)), x.alpha(a, b));
                    ensure!(
                        ctx,
                        i,
                        "sampled powersets",
                        q.leq(w, mu.values[a]),
                        format!("closure fails at ({a}, {b}) on sample {i}")
                    );
                }
            }
        }
    }
    Outcome::pass(n, "sampled powersets")
}

fn law_powerset_separated(ctx: &mut Ctx) -> Outcome {
    let q = ctx.q.clone();
    let n = ctx.samples.min(20);
    for i in 0..n {
        let x = ctx.s.ordered(&q, 1, ctx.small());
        for (tag, ps) in [
            ("lower", presheaves(&x, &ctx.caps)),
            ("upper", copresheaves(&x, &ctx.caps)),
        ] {
            let ps = match ps {
                Ok(ps) => ps,
                Err(e) => return Outcome::fail(i, "sampled powersets", e.to_string()),
            };
            let ord = ps.ordered();
            let valid =
                make_ordered(ord.carrier().clone(), ord.order().entries().clone()).is_ok();
            ensure!(
                ctx,
                i,
                "sampled powersets",
                valid && ord.is_separated(),
                format!("{tag} powerset fails validation or separation on sample {i}")
            );
        }
    }
    Outcome::pass(n, "sampled powersets")
}

fn law_yoneda_fully_faithful(ctx: &mut Ctx) -> Outcome {
    let q = ctx.q.clone();
    let n = ctx.samples.min(20);
    for i in 0..n {
        let x = ctx.s.ordered(&q, 1, ctx.small());
        let px = presheaves(&x, &ctx.caps).unwrap();
        let pdx = copresheaves(&x, &ctx.caps).unwrap();
        let y = yoneda_map(&x, &px).check();
        let yd = co_yoneda_map(&x, &pdx).check();
        ensure!(
            ctx,
            i,
            "sampled embeddings",
            y.fully_faithful && y.membership_preserving,
            format!("embedding is not fully faithful on sample {i}")
        );
        ensure!(
            ctx,
            i,
            "sampled embeddings",
            yd.fully_faithful && yd.membership_preserving,
            format!("dual embedding is not fully faithful on sample {i}")
        );
    }
    Outcome::pass(n, "sampled embeddings")
}

fn law_yoneda_lemma(ctx: &mut Ctx) -> Outcome {
    let q = ctx.q.clone();
    let n = ctx.samples.min(20);
    for i in 0..n {
        let x = ctx.s.ordered(&q, 1, ctx.small());
        let px = presheaves(&x, &ctx.caps).unwrap();
        let pdx = copresheaves(&x, &ctx.caps).unwrap();
        for mu in px.presheaves() {
            for j in 0..x.len() {
                ensure!(
                    ctx,
                    i,
                    "sampled powersets",
                    presheaf_order_entry(&q, &yoneda(&x, j), mu) == mu.values[j],
                    format!("evaluation at representables fails on sample {i}")
                );
            }
        }
        for lam in pdx.copresheaves() {
            for j in 0..x.len() {
                ensure!(
                    ctx,
                    i,
                    "sampled powersets",
                    copresheaf_order_entry(&q, lam, &co_yoneda(&x, j)) == lam.values[j],
                    format!("dual evaluation at representables fails on sample {i}")
                );
            }
        }
    }
    Outcome::pass(n, "sampled powersets")
}

fn law_dual_order_reversed(ctx: &mut Ctx) -> Outcome {
    let q = ctx.q.clone();
    let n = ctx.samples.min(20);
    for i in 0..n {
        let x = ctx.s.ordered(&q, 1, ctx.small());
        let pdx = copresheaves(&x, &ctx.caps).unwrap();
        for (a, la) in pdx.copresheaves().iter().enumerate() {
            for (b, lb_) in pdx.copresheaves().iter().enumerate() {
                if la.degree != lb_.degree {
                    continue;
                }
                let in_order = pdx.ordered().underlying_leq(a, b);
                let reversed = lb_
                    .values
                    .iter()
                    .zip(&la.values)
                    .all(|(&bv, &av)| q.leq(bv, av));
                ensure!(
                    ctx,
                    i,
                    "sampled dual powersets",
                    in_order == reversed,
                    format!("dual order fails to reverse on sample {i}")
                );
            }
        }
    }
    Outcome::pass(n, "sampled dual powersets")
}

fn law_image_maps(ctx: &mut Ctx) -> Outcome {
    let q = ctx.q.clone();
    let n = ctx.samples.min(10);
    let mut checked = 0;
    for _ in 0..n {
        let x = ctx.s.ordered(&q, 1, 2);
        let y = ctx.s.coarsening(&x);
        let f = QOrderMap::new(x.clone(), y.clone(), (0..x.len()).collect()).unwrap();
        let im = match crate::presheaf::image_maps(&f, &ctx.caps) {
            Ok(im) => im,
            Err(e) => return Outcome::fail(checked, "sampled maps", e.to_string()),
        };
        checked += 1;
        for m in [&im.fwd, &im.back, &im.dfwd, &im.dback] {
            ensure!(
                ctx,
                checked,
                "sampled maps",
                m.is_morphism(),
                "an image map is not a morphism"
            );
        }
        ensure!(
            ctx,
            checked,
            "sampled maps",
            is_galois(&im.fwd, &im.back).unwrap() && is_galois(&im.dback, &im.dfwd).unwrap(),
            "image maps fail to be adjoint"
        );
        for j in 0..x.len() {
            let lhs = im.fwd.apply(im.px.find_presheaf(&yoneda(&x, j)).unwrap());
            let rhs = im.py.find_presheaf(&yoneda(&y, f.apply(j))).unwrap();
            ensure!(
                ctx,
                checked,
                "sampled maps",
                lhs == rhs,
                "forward image disagrees with the embedding"
            );
        }
    }
    Outcome::pass(checked, "sampled maps")
}

// ---------------------------------------------------------------------------
// completion laws

fn law_sup_unique_up_to_iso(ctx: &mut Ctx) -> Outcome {
    let q = ctx.q.clone();
    let n = ctx.samples.min(20);
    for i in 0..n {
        let x = ctx.s.ordered(&q, 1, ctx.small());
        let px = presheaves(&x, &ctx.caps).unwrap();
        for mu in px.presheaves() {
            let sups = sup_witnesses(&x, mu);
            for &a in &sups {
                for &b in &sups {
                    ensure!(
                        ctx,
                        i,
                        "sampled suprema",
                        x.underlying_iso(a, b),
                        format!("two suprema are not isomorphic on sample {i}")
                    );
                }
            }
            if x.is_separated() {
                ensure!(
                    ctx,
                    i,
                    "sampled suprema",
                    sups.len() <= 1,
                    format!("separated order with two suprema on sample {i}")
                );
            }
        }
    }
    Outcome::pass(n, "sampled suprema")
}

fn law_sup_inf_duality(ctx: &mut Ctx) -> Outcome {
    let q = ctx.q.clone();
    let n = ctx.samples.min(20);
    for i in 0..n {
        let x = ctx.s.ordered(&q, 1, ctx.small());
        let px = presheaves(&x, &ctx.caps).unwrap();
        for mu in px.presheaves() {
            let sups = sup_witnesses(&x, mu);
            let infs = inf_witnesses(&x, &ub(&x, mu));
            if !sups.is_empty() || !infs.is_empty() {
                ensure!(
                    ctx,
                    i,
                    "sampled presheaves",
                    sups == infs,
                    format!("supremum disagrees with the infimum of upper bounds on sample {i}")
                );
            }
        }
        let pdx = copresheaves(&x, &ctx.caps).unwrap();
        for lam in pdx.copresheaves() {
            let infs = inf_witnesses(&x, lam);
            let sups = sup_witnesses(&x, &lb(&x, lam));
            if !infs.is_empty() || !sups.is_empty() {
                ensure!(
                    ctx,
                    i,
                    "sampled presheaves",
                    infs == sups,
                    format!("infimum disagrees with the supremum of lower bounds on sample {i}")
                );
            }
        }
    }
    Outcome::pass(n, "sampled presheaves")
}

fn law_tensor_cotensor_order(ctx: &mut Ctx) -> Outcome {
    let q = ctx.q.clone();
    let n = ctx.samples.min(30);
    for i in 0..n {
        let x = ctx.s.ordered(&q, 1, ctx.small());
        let report = match completeness_report(&x, &ctx.caps) {
            Ok(r) => r,
            Err(e) => return Outcome::fail(i, "sampled orders", e.to_string()),
        };
        ensure!(
            ctx,
            i,
            "sampled orders",
            report.complete == (report.tensored && report.cotensored && report.order_complete),
            format!("equivalence fails on sample {i}")
        );
    }
    Outcome::pass(n, "sampled orders")
}

fn law_powerset_complete(ctx: &mut Ctx) -> Outcome {
    let q = ctx.q.clone();
    let n = ctx.samples.min(3);
    let mut ran = 0;
    for i in 0..n {
        // the law enumerates powersets of powersets, so the base must keep
        // both second-order estimates inside the caps
        let mut picked = None;
        for attempt in 0..4 {
            let cand = if attempt < 3 {
                ctx.s.ordered(&q, 1, if q.len() >= 4 { 1 } else { 2 })
            } else {
                QOrderedSet::singleton(q.clone(), q.bottom())
            };
            let Ok(cpx) = presheaves(&cand, &ctx.caps) else {
                continue;
            };
            let Ok(cpdx) = copresheaves(&cand, &ctx.caps) else {
                continue;
            };
            let fits = [cpx.ordered(), cpdx.ordered()].iter().all(|o| {
                powerset_size_estimate(o, false) <= ctx.caps.powerset
                    && powerset_size_estimate(o, true) <= ctx.caps.powerset
            });
            if fits {
                picked = Some(cand);
                break;
            }
        }
        let Some(x) = picked else {
            continue;
        };
        ran += 1;
        let px = presheaves(&x, &ctx.caps).unwrap();
        let pxo = px.ordered().clone();
        let report = match completeness_report(&pxo, &ctx.caps) {
            Ok(r) => r,
            Err(e) => return Outcome::fail(i, "sampled powersets", e.to_string()),
        };
        ensure!(
            ctx,
            i,
            "sampled powersets",
            report.complete && pxo.is_separated(),
            format!("powerset is not complete and separated on sample {i}")
        );
        // sup Θ = Θ ∘ (y_X)_♮ and inf Λ = Λ ↘ (y_X)_♮
        let ygraph = yoneda_map(&x, &px).graph().unwrap();
        let ppx = presheaves(&pxo, &ctx.caps).unwrap();
        for theta in ppx.presheaves() {
            let sups = sup_witnesses(&pxo, theta);
            let expect =
                Presheaf::from_relation(&theta.to_relation(&pxo).compose(&ygraph).unwrap());
            ensure!(
                ctx,
                i,
                "sampled powersets",
                sups.len() == 1 && px.presheaf(sups[0]) == &expect,
                format!("supremum formula fails on sample {i}")
            );
        }
        let ppdx = copresheaves(&pxo, &ctx.caps).unwrap();
        for lam in ppdx.copresheaves() {
            let infs = inf_witnesses(&pxo, lam);
            let expect = Presheaf::from_relation(
                &QRelation::imp_right(&lam.to_relation(&pxo), &ygraph).unwrap(),
            );
            ensure!(
                ctx,
                i,
                "sampled powersets",
                infs.len() == 1 && px.presheaf(infs[0]) == &expect,
                format!("infimum formula fails on sample {i}")
            );
        }
        // Dual side: sup Θ = (y†_X)^♮ ↙ Θ and inf Λ = (y†_X)^♮ ∘ Λ in P†X.
        let pdx = copresheaves(&x, &ctx.caps).unwrap();
        let pdxo = pdx.ordered().clone();
        let ydco = co_yoneda_map(&x, &pdx).cograph().unwrap();
        let ppdx2 = presheaves(&pdxo, &ctx.caps).unwrap();
        for theta in ppdx2.presheaves() {
            let sups = sup_witnesses(&pdxo, theta);
            let expect = Copresheaf::from_relation(
                &QRelation::imp_left(&ydco, &theta.to_relation(&pdxo)).unwrap(),
            );
            ensure!(
                ctx,
                i,
                "sampled powersets",
                sups.len() == 1 && pdx.copresheaf(sups[0]) == &expect,
                format!("dual supremum formula fails on sample {i}")
            );
        }
        let ppdx3 = copresheaves(&pdxo, &ctx.caps).unwrap();
        for lam in ppdx3.copresheaves() {
            let infs = inf_witnesses(&pdxo, lam);
            let expect =
                Copresheaf::from_relation(&ydco.compose(&lam.to_relation(&pdxo)).unwrap());
            ensure!(
                ctx,
                i,
                "sampled powersets",
                infs.len() == 1 && pdx.copresheaf(infs[0]) == &expect,
                format!("dual infimum formula fails on sample {i}")
            );
        }
        // Tensor formulas: u ⊗ μ = u ∘ μ, v ↣ μ = v ↘ μ in PX.
        for (k, mu) in px.presheaves().iter().enumerate() {
            for degree in q.elements() {
                for u in q.diagonal(mu.degree, degree) {
                    let w = tensor_witnesses(&pxo, u, k, degree).unwrap();
                    let srel = QRelation::new(
                        QSubset::singleton(q.clone(), mu.degree),
                        QSubset::singleton(q.clone(), degree),
                        vec![vec![u]],
                    )
                    .unwrap();
                    let expect =
                        Presheaf::from_relation(&srel.compose(&mu.to_relation(&x)).unwrap());
                    ensure!(
                        ctx,
                        i,
                        "sampled powersets",
                        w.len() == 1 && px.presheaf(w[0]) == &expect,
                        format!("tensor formula fails on sample {i}")
                    );
                }
                for v in q.diagonal(degree, mu.degree) {
                    let w = cotensor_witnesses(&pxo, v, k, degree).unwrap();
                    let srel = QRelation::new(
                        QSubset::singleton(q.clone(), degree),
                        QSubset::singleton(q.clone(), mu.degree),
                        vec![vec![v]],
                    )
                    .unwrap();
                    let expect = Presheaf::from_relation(
                        &QRelation::imp_right(&srel, &mu.to_relation(&x)).unwrap(),
                    );
                    ensure!(
                        ctx,
                        i,
                        "sampled powersets",
                        w.len() == 1 && px.presheaf(w[0]) == &expect,
                        format!("cotensor formula fails on sample {i}")
                    );
                }
            }
        }
    }
    if ran == 0 {
        return Outcome::vacuous("no base fits the second-order caps");
    }
    Outcome::pass(ran, "sampled powersets")
}

fn law_degree_bottoms(ctx: &mut Ctx) -> Outcome {
    let q = ctx.q.clone();
    let n = ctx.samples.min(30);
    for i in 0..n {
        let x = ctx.s.ordered(&q, 1, ctx.small());
        let report = match completeness_report(&x, &ctx.caps) {
            Ok(r) => r,
            Err(e) => return Outcome::fail(i, "sampled orders", e.to_string()),
        };
        if report.complete {
            for degree in q.elements() {
                ensure!(
                    ctx,
                    i,
                    "sampled orders",
                    !x.degree_members(degree).is_empty(),
                    format!(
                        "complete order misses degree {} on sample {i}",
                        q.label(degree)
                    )
                );
            }
        }
    }
    Outcome::pass(n, "sampled orders")
}

fn law_injective_extension(ctx: &mut Ctx) -> Outcome {
    let q = ctx.q.clone();
    let n = ctx.samples.min(6);
    let mut checked = 0;
    for _ in 0..n {
        // Z complete separated: a powerset; m: X → Y fully faithful: a
        // restriction inclusion; f: X → Z sampled.
        let base = ctx.s.ordered(&q, 1, 1);
        let pz = presheaves(&base, &ctx.caps).unwrap();
        let z = pz.ordered().clone();
        let y = ctx.s.ordered(&q, 2, 2);
        let keep: Vec<usize> = (0..1).collect();
        let x = y.restrict(&keep);
        let m = QOrderMap::new(x.clone(), y.clone(), keep).unwrap();
        if !m.check().fully_faithful {
            continue;
        }
        let Some(f) = ctx.s.morphism(&x, &z, 30) else {
            continue;
        };
        checked += 1;
        // g = sup_Z ∘ f_image ∘ (column presheaf of m)
        let mgraph = m.graph().unwrap();
        let fco = f.cograph().unwrap();
        let mut ok = true;
        let mut g_assign = vec![0usize; y.len()];
        for j in 0..y.len() {
            let col = Presheaf::from_relation(&mgraph.column(j));
            let image = Presheaf::from_relation(&col.to_relation(&x).compose(&fco).unwrap());
            let sups = sup_witnesses(&z, &image);
            if sups.is_empty() {
                ok = false;
                break;
            }
            g_assign[j] = sups[0];
        }
        ensure!(ctx, checked, "sampled extensions", ok, "no supremum for an extension value");
        let g = QOrderMap::new(y.clone(), z.clone(), g_assign).unwrap();
        ensure!(
            ctx,
            checked,
            "sampled extensions",
            g.is_morphism(),
            "extension is not a morphism"
        );
        for idx in 0..x.len() {
            ensure!(
                ctx,
                checked,
                "sampled extensions",
                g.apply(m.apply(idx)) == f.apply(idx),
                "extension does not restrict to the original map"
            );
        }
    }
    Outcome::pass(checked, "sampled extensions")
}

// ---------------------------------------------------------------------------
// adjunction laws

fn law_distributor_characterizations(ctx: &mut Ctx) -> Outcome {
    let q = ctx.q.clone();
    let n = ctx.samples.min(100);
    for i in 0..n {
        let x = ctx.s.ordered(&q, 1, 3);
        let y = ctx.s.ordered(&q, 1, 3);
        let rel = if i % 2 == 0 {
            ctx.s.distributor(&x, &y)
        } else {
            ctx.s.relation(x.carrier(), y.carrier())
        };
        let ch = distributor_characterizations(&rel, &x, &y).unwrap();
        ensure!(
            ctx,
            i,
            "sampled relations",
            ch.iter().all(|&b| b == ch[0]),
            format!("characterizations disagree on sample {i}: {ch:?}")
        );
    }
    Outcome::pass(n, "sampled relations")
}

fn law_graph_cograph_adjoint(ctx: &mut Ctx) -> Outcome {
    let q = ctx.q.clone();
    let n = ctx.samples.min(50);
    let mut checked = 0;
    for _ in 0..n {
        let x = ctx.s.ordered(&q, 1, 3);
        let y = ctx.s.coarsening(&x);
        let f = QOrderMap::new(x.clone(), y.clone(), (0..x.len()).collect()).unwrap();
        let graph = f.graph().unwrap();
        let cograph = f.cograph().unwrap();
        checked += 1;
        ensure!(
            ctx,
            checked,
            "sampled morphisms",
            is_distributor(&graph, &x, &y).unwrap().0
                && is_distributor(&cograph, &y, &x).unwrap().0,
            "graph or cograph is not a distributor"
        );
        ensure!(
            ctx,
            checked,
            "sampled morphisms",
            is_dist_adjoint(&graph, &cograph, &x, &y).unwrap(),
            "graph is not left adjoint to the cograph"
        );
    }
    Outcome::pass(checked, "sampled morphisms")
}

fn law_bool2_adjoint_pairs(ctx: &mut Ctx) -> Outcome {
    if ctx.q.name() != "bool2" {
        return Outcome::vacuous("specific to the two-element quantale");
    }
    let q = ctx.q.clone();
    let n = ctx.samples.min(6);
    let mut checked = 0;
    for _ in 0..n {
        let x = ctx.s.ordered(&q, 1, 3);
        let y = ctx.s.ordered(&q, 1, 2);
        // enumerate all distributor pairs and compare against support maps
        let all_xy: Vec<QRelation> = crate::qrel::all_relations(x.carrier(), y.carrier())
            .into_iter()
            .filter(|r| is_distributor(r, &x, &y).unwrap().0)
            .collect();
        let all_yx: Vec<QRelation> = crate::qrel::all_relations(y.carrier(), x.carrier())
            .into_iter()
            .filter(|r| is_distributor(r, &y, &x).unwrap().0)
            .collect();
        let supp_x: Vec<usize> = x.degree_members(1);
        let supp_y: Vec<usize> = y.degree_members(1);
        for phi in &all_xy {
            for psi in &all_yx {
                checked += 1;
                let adjoint = is_dist_adjoint(phi, psi, &x, &y).unwrap();
                // search for a monotone support map with matching graph
                let mut found = false;
                let mut assign = vec![0usize; supp_x.len()];
                let total = supp_y.len().checked_pow(supp_x.len() as u32).unwrap_or(0);
                'outer: for code in 0..total {
                    let mut c = code;
                    for slot in assign.iter_mut() {
                        *slot = supp_y[c % supp_y.len()];
                        c /= supp_y.len();
                    }
                    // monotone on supports
                    for (ai, &xa) in supp_x.iter().enumerate() {
                        for (bi, &xb) in supp_x.iter().enumerate() {
                            if x.underlying_leq(xa, xb)
                                && !y.underlying_leq(assign[ai], assign[bi])
                            {
                                continue 'outer;
                            }
                        }
                    }
                    // graph and cograph must match on all entries
                    for i in 0..x.len() {
                        for j in 0..y.len() {
                            let pos = supp_x.iter().position(|&s| s == i);
                            let expect_graph = match pos {
                                Some(k) => y.alpha(assign[k], j),
                                None => 0,
                            };
                            let expect_cograph = match pos {
                                Some(k) => y.alpha(j, assign[k]),
                                None => 0,
                            };
                            if phi.entry(i, j) != expect_graph
                                || psi.entry(j, i) != expect_cograph
                            {
                                continue 'outer;
                            }
                        }
                    }
                    found = true;
                    break;
                }
                if supp_x.is_empty() {
                    // with an empty support the empty map works iff both
                    // relations are all-bottom, which adjointness forces
                    found = all_xy.len() == 1 || phi.entries().iter().flatten().all(|&v| v == 0);
                }
                ensure!(
                    ctx,
                    checked,
                    "distributor pairs",
                    adjoint == found,
                    format!("adjoint pairs vs support maps disagree on pair {checked}")
                );
            }
        }
    }
    Outcome::pass(checked, "distributor pairs")
}

fn law_adjunction_identities(ctx: &mut Ctx) -> Outcome {
    let q = ctx.q.clone();
    let n = ctx.samples.min(40);
    let mut checked = 0;
    for _ in 0..n {
        let x = ctx.s.ordered(&q, 1, 3);
        let y = ctx.s.coarsening(&x);
        let f = QOrderMap::new(x.clone(), y.clone(), (0..x.len()).collect()).unwrap();
        let phi = f.graph().unwrap();
        let psi = f.cograph().unwrap();
        let w = ctx.s.ordered(&q, 1, 3);
        let xi_yw = ctx.s.distributor(&y, &w);
        let xi_wy = ctx.s.distributor(&w, &y);
        let xi_wx = ctx.s.distributor(&w, &x);
        let xi_xw = ctx.s.distributor(&x, &w);
        checked += 1;
        match adjunction_identity_suite(&phi, &psi, &xi_yw, &xi_wy, &xi_wx, &xi_xw) {
            Ok(None) => {}
            Ok(Some(name)) => {
                return Outcome::fail(
                    checked,
                    "sampled adjoint pairs",
                    format!("identity {name} fails"),
                )
            }
            Err(e) => return Outcome::fail(checked, "sampled adjoint pairs", e.to_string()),
        }
    }
    Outcome::pass(checked, "sampled adjoint pairs")
}

fn law_map_adjunction_criteria(ctx: &mut Ctx) -> Outcome {
    let q = ctx.q.clone();
    let n = ctx.samples.min(150);
    let mut checked = 0;
    for _ in 0..n {
        let x = ctx.s.ordered(&q, 1, 3);
        let y = ctx.s.ordered(&q, 1, 3);
        let (Some(f), Some(g)) = (ctx.s.memb_map(&x, &y), ctx.s.memb_map(&y, &x)) else {
            continue;
        };
        checked += 1;
        // the unit/counit criterion (for order-preserving pairs) must agree
        // with the matrix criterion, which needs no order-preservation
        let matrix = (0..x.len())
            .all(|i| (0..y.len()).all(|j| y.alpha(f.apply(i), j) == x.alpha(i, g.apply(j))));
        let galois = is_galois(&f, &g).unwrap();
        ensure!(
            ctx,
            checked,
            "sampled pairs",
            galois == matrix,
            "matrix criterion disagrees with the adjunction"
        );
        if matrix {
            ensure!(
                ctx,
                checked,
                "sampled pairs",
                f.check().order_preserving && g.check().order_preserving,
                "matrix criterion holds but a map fails to preserve order"
            );
        }
    }
    Outcome::pass(checked, "sampled pairs")
}

fn law_adjoint_unique_up_to_iso(ctx: &mut Ctx) -> Outcome {
    let q = ctx.q.clone();
    let n = ctx.samples.min(60);
    let mut checked = 0;
    for _ in 0..n {
        let x = ctx.s.ordered(&q, 1, 3);
        let y = ctx.s.coarsening(&x);
        let f = QOrderMap::new(x.clone(), y.clone(), (0..x.len()).collect()).unwrap();
        let rights = match find_adjoint(&f, AdjointSide::Right, &ctx.caps) {
            Ok(r) => r,
            Err(e) => return Outcome::fail(checked, "adjoint searches", e.to_string()),
        };
        checked += 1;
        for a in &rights {
            for b in &rights {
                for j in 0..y.len() {
                    ensure!(
                        ctx,
                        checked,
                        "adjoint searches",
                        x.underlying_iso(a.apply(j), b.apply(j)),
                        "two right adjoints differ beyond isomorphism"
                    );
                }
            }
            ensure!(
                ctx,
                checked,
                "adjoint searches",
                is_galois(&f, a).unwrap(),
                "reported adjoint fails the criterion"
            );
        }
    }
    Outcome::pass(checked, "adjoint searches")
}

fn law_ub_lb_adjoint(ctx: &mut Ctx) -> Outcome {
    let q = ctx.q.clone();
    let n = ctx.samples.min(8);
    for i in 0..n {
        let x = ctx.s.ordered(&q, 1, ctx.small().min(2));
        let pair = isbell(x.order(), &x, &x, &ctx.caps).unwrap();
        ensure!(
            ctx,
            i,
            "sampled fixtures",
            is_galois(&pair.f, &pair.g).unwrap(),
            format!("bound operators are not adjoint on sample {i}")
        );
        for (k, mu) in pair.dom.presheaves().iter().enumerate() {
            ensure!(
                ctx,
                i,
                "sampled fixtures",
                pair.cod.copresheaf(pair.f.apply(k)) == &ub(&x, mu),
                "left component is not the upper-bound operator"
            );
        }
    }
    Outcome::pass(n, "sampled fixtures")
}

fn law_complete_iff_sup_adjoint(ctx: &mut Ctx) -> Outcome {
    let q = ctx.q.clone();
    let n = ctx.samples.min(10);
    let mut checked = 0;
    for i in 0..n {
        // alternate between arbitrary samples and a guaranteed-complete one
        let x = if i % 2 == 0 {
            match enumerable_complete_fixture(ctx) {
                Some(x) => x,
                None => ctx.s.ordered(&q, 1, 2),
            }
        } else {
            ctx.s.ordered(&q, 1, 2)
        };
        let px = match presheaves(&x, &ctx.caps) {
            Ok(px) => px,
            Err(e) => return Outcome::fail(checked, "sampled fixtures", e.to_string()),
        };
        let complete = completeness_report(&x, &ctx.caps).unwrap().complete;
        let y = yoneda_map(&x, &px);
        let lefts = match find_adjoint(&y, AdjointSide::Left, &ctx.caps) {
            Ok(l) => l,
            Err(e) => return Outcome::fail(checked, "sampled fixtures", e.to_string()),
        };
        checked += 1;
        ensure!(
            ctx,
            checked,
            "sampled fixtures",
            complete == !lefts.is_empty(),
            "completeness disagrees with the embedding having a left adjoint"
        );
        for h in &lefts {
            for (k, mu) in px.presheaves().iter().enumerate() {
                ensure!(
                    ctx,
                    checked,
                    "sampled fixtures",
                    sup_witnesses(&x, mu).contains(&h.apply(k)),
                    "left adjoint of the embedding is not the supremum"
                );
            }
        }
    }
    Outcome::pass(checked, "sampled fixtures")
}

fn law_tensored_iff_pointwise_adjoints(ctx: &mut Ctx) -> Outcome {
    let q = ctx.q.clone();
    let n = ctx.samples.min(10);
    for i in 0..n {
        let x = ctx.s.ordered(&q, 1, 2);
        let r = completeness_report(&x, &ctx.caps).unwrap();
        // X tensored iff each 1^♮(x,−): X → P1_{|x|} has a left adjoint.
        let mut all_have = true;
        for j in 0..x.len() {
            let one = QOrderedSet::singleton(q.clone(), x.membership(j));
            let pone = presheaves(&one, &ctx.caps).unwrap();
            let assign: Vec<usize> = (0..x.len())
                .map(|k| {
                    pone.find(x.membership(k), &[x.alpha(j, k)])
                        .expect("row entries are lower subsets of the singleton")
                })
                .collect();
            let row_map = QOrderMap::new(x.clone(), pone.ordered().clone(), assign).unwrap();
            let lefts = find_adjoint(&row_map, AdjointSide::Left, &ctx.caps).unwrap();
            all_have &= !lefts.is_empty();
        }
        ensure!(
            ctx,
            i,
            "sampled fixtures",
            r.tensored == all_have,
            format!("tensoredness disagrees with pointwise adjoints on sample {i}")
        );
    }
    Outcome::pass(n, "sampled fixtures")
}

fn law_cauchy_right_adjoints(ctx: &mut Ctx) -> Outcome {
    let q = ctx.q.clone();
    let n = ctx.samples.min(6);
    for i in 0..n {
        let x = ctx.s.ordered(&q, 1, 2);
        for j in 0..x.len() {
            ensure!(
                ctx,
                i,
                "sampled fixtures",
                is_right_adjoint_presheaf(&x, &yoneda(&x, j)),
                format!("a representable is not a right adjoint on sample {i}")
            );
        }
        let complete = completeness_report(&x, &ctx.caps).unwrap().complete;
        if complete {
            ensure!(
                ctx,
                i,
                "sampled fixtures",
                is_cauchy_complete(&x, &ctx.caps).unwrap(),
                format!("a complete fixture fails Cauchy completeness on sample {i}")
            );
        }
        // consistency with a direct exhaustive check of the definition
        let part = cauchy_part(&x, &ctx.caps).unwrap();
        for (pos, &k) in part.indices.iter().enumerate() {
            let mu = part.px.presheaf(k);
            ensure!(
                ctx,
                i,
                "sampled fixtures",
                is_right_adjoint_presheaf(&x, mu),
                "restriction kept a non-right-adjoint"
            );
            let _ = pos;
        }
    }
    Outcome::pass(n, "sampled fixtures")
}

fn law_left_adjoint_characterizations(ctx: &mut Ctx) -> Outcome {
    let q = ctx.q.clone();
    let n = ctx.samples.min(6);
    let mut checked = 0;
    for _ in 0..n {
        let Some(x) = enumerable_complete_fixture(ctx) else {
            continue;
        };
        let Some(f) = ctx.s.memb_map(&x, &x) else {
            continue;
        };
        if !f.is_morphism() {
            continue;
        }
        checked += 1;
        let left = !find_adjoint(&f, AdjointSide::Right, &ctx.caps).unwrap().is_empty();
        let sup = is_sup_preserving(&f, &ctx.caps).unwrap().0;
        let under = underlying_right_adjoint(&f).is_some() && preserves_tensors(&f);
        ensure!(
            ctx,
            checked,
            "sampled endomaps",
            left == sup && sup == under,
            format!("left-adjoint characterizations disagree: {left} {sup} {under}")
        );
        let right = !find_adjoint(&f, AdjointSide::Left, &ctx.caps).unwrap().is_empty();
        let inf = is_inf_preserving(&f, &ctx.caps).unwrap().0;
        let under_r = underlying_left_adjoint(&f).is_some() && preserves_cotensors(&f);
        ensure!(
            ctx,
            checked,
            "sampled endomaps",
            right == inf && inf == under_r,
            format!("right-adjoint characterizations disagree: {right} {inf} {under_r}")
        );
    }
    Outcome::pass(checked, "sampled endomaps")
}

fn law_powerset_adjunctions(ctx: &mut Ctx) -> Outcome {
    let q = ctx.q.clone();
    let n = ctx.samples.min(8);
    for i in 0..n {
        let sz = if q.len() >= 4 { 1 } else { 2 };
        let x = ctx.s.ordered(&q, 1, sz);
        let y = ctx.s.ordered(&q, 1, sz);
        let phi = ctx.s.distributor(&x, &y);
        for (tag, pair) in [
            ("polarity", isbell(&phi, &x, &y, &ctx.caps)),
            ("axiality", kan(&phi, &x, &y, &ctx.caps)),
            ("dual axiality", dual_kan(&phi, &x, &y, &ctx.caps)),
        ] {
            let pair = match pair {
                Ok(p) => p,
                Err(e) => return Outcome::fail(i, "sampled distributors", e.to_string()),
            };
            ensure!(
                ctx,
                i,
                "sampled distributors",
                is_galois(&pair.f, &pair.g).unwrap(),
                format!("{tag} is not an adjunction on sample {i}")
            );
        }
    }
    Outcome::pass(n, "sampled distributors")
}

fn law_representable_transforms(ctx: &mut Ctx) -> Outcome {
    let q = ctx.q.clone();
    let n = ctx.samples.min(8);
    for i in 0..n {
        let sz = if q.len() >= 4 { 1 } else { 2 };
        let x = ctx.s.ordered(&q, 1, sz);
        let y = ctx.s.ordered(&q, 1, sz);
        let phi = ctx.s.distributor(&x, &y);
        let polarity = isbell(&phi, &x, &y, &ctx.caps).unwrap();
        let axiality = kan(&phi, &x, &y, &ctx.caps).unwrap();
        let dual = dual_kan(&phi, &x, &y, &ctx.caps).unwrap();
        // row transform: φ(x,−) = φ↑(y_X x) = φ†(y†_X x)
        for j in 0..x.len() {
            let row: Vec<Elem> = (0..y.len()).map(|k| phi.entry(j, k)).collect();
            let via_up = polarity
                .cod
                .copresheaf(polarity.f.apply(polarity.dom.find_presheaf(&yoneda(&x, j)).unwrap()));
            let via_dag = dual
                .dom
                .copresheaf(dual.g.apply(dual.cod.find_copresheaf(&co_yoneda(&x, j)).unwrap()));
            ensure!(
                ctx,
                i,
                "sampled distributors",
                via_up.values == row && via_dag.values == row,
                format!("row transform fails on sample {i}")
            );
        }
        // column transform: φ(−,y) = φ↓(y†_Y y) = φ*(y_Y y)
        for k in 0..y.len() {
            let col: Vec<Elem> = (0..x.len()).map(|j| phi.entry(j, k)).collect();
            let via_down = polarity
                .dom
                .presheaf(polarity.g.apply(polarity.cod.find_copresheaf(&co_yoneda(&y, k)).unwrap()));
            let via_star = axiality
                .cod
                .presheaf(axiality.f.apply(axiality.dom.find_presheaf(&yoneda(&y, k)).unwrap()));
            ensure!(
                ctx,
                i,
                "sampled distributors",
                via_down.values == col && via_star.values == col,
                format!("column transform fails on sample {i}")
            );
        }
    }
    Outcome::pass(n, "sampled distributors")
}

fn law_construction_injectivity(ctx: &mut Ctx) -> Outcome {
    let q = ctx.q.clone();
    let n = ctx.samples.min(6);
    for i in 0..n {
        let sz = if q.len() >= 4 { 1 } else { 2 };
        let x = ctx.s.ordered(&q, 1, sz);
        let y = ctx.s.ordered(&q, 1, sz);
        let phi = ctx.s.distributor(&x, &y);
        let psi = ctx.s.distributor(&x, &y);
        let equal = phi == psi;
        let pf = isbell(&phi, &x, &y, &ctx.caps).unwrap();
        let ps = isbell(&psi, &x, &y, &ctx.caps).unwrap();
        let kf = kan(&phi, &x, &y, &ctx.caps).unwrap();
        let ks = kan(&psi, &x, &y, &ctx.caps).unwrap();
        let df = dual_kan(&phi, &x, &y, &ctx.caps).unwrap();
        let ds = dual_kan(&psi, &x, &y, &ctx.caps).unwrap();
        let all_same = [
            pf.f.assignment() == ps.f.assignment(),
            pf.g.assignment() == ps.g.assignment(),
            kf.f.assignment() == ks.f.assignment(),
            df.g.assignment() == ds.g.assignment(),
        ];
        ensure!(
            ctx,
            i,
            "sampled pairs of distributors",
            all_same.iter().all(|&b| b == equal),
            format!("construction injectivity fails on sample {i}: {all_same:?} vs {equal}")
        );
    }
    Outcome::pass(n, "sampled pairs of distributors")
}

fn law_lift_and_restrict(ctx: &mut Ctx) -> Outcome {
    let q = ctx.q.clone();
    let n = ctx.samples.min(6);
    let mut checked = 0;
    for _ in 0..n {
        let sz = if q.len() >= 4 { 1 } else { 2 };
        let x = ctx.s.ordered(&q, 1, sz);
        let y = ctx.s.ordered(&q, 1, sz);
        let phi = ctx.s.distributor(&x, &y);
        // distributor -> pairs -> distributor is the identity
        for pair in [
            isbell(&phi, &x, &y, &ctx.caps).unwrap(),
            kan(&phi, &x, &y, &ctx.caps).unwrap(),
            dual_kan(&phi, &x, &y, &ctx.caps).unwrap(),
        ] {
            checked += 1;
            let back = match dist_from_pair(&pair) {
                Ok(b) => b,
                Err(e) => return Outcome::fail(checked, "round trips", e.to_string()),
            };
            ensure!(
                ctx,
                checked,
                "round trips",
                back.entries() == phi.entries(),
                "pair does not recover its distributor"
            );
            // pair -> distributor -> pair is the identity
            let rebuilt = match pair.kind {
                PairKind::Polarity => isbell(&back, &x, &y, &ctx.caps).unwrap(),
                PairKind::Axiality => kan(&back, &x, &y, &ctx.caps).unwrap(),
                PairKind::DualAxiality => dual_kan(&back, &x, &y, &ctx.caps).unwrap(),
            };
            ensure!(
                ctx,
                checked,
                "round trips",
                rebuilt.f.assignment() == pair.f.assignment()
                    && rebuilt.g.assignment() == pair.g.assignment(),
                "distributor does not recover its pair"
            );
        }
        // a Galois connection lifts, and the lift extends it
        let yc = ctx.s.coarsening(&x);
        let f = QOrderMap::new(x.clone(), yc.clone(), (0..x.len()).collect()).unwrap();
        let rights = find_adjoint(&f, AdjointSide::Right, &ctx.caps).unwrap();
        if let Some(g) = rights.first() {
            checked += 1;
            if lift_galois(&f, g, &ctx.caps).is_err() {
                return Outcome::fail(checked, "round trips", "adjoint pair fails to lift");
            }
        }
    }
    Outcome::pass(checked, "round trips")
}

fn law_hom_order_isomorphism(ctx: &mut Ctx) -> Outcome {
    let q = ctx.q.clone();
    let n = ctx.samples.min(6);
    for i in 0..n {
        let sz = if q.len() >= 4 { 1 } else { 2 };
        let x = ctx.s.ordered(&q, 1, sz);
        let y = ctx.s.ordered(&q, 1, sz);
        let phi = ctx.s.distributor(&x, &y);
        let psi = ctx.s.distributor(&x, &y);
        let pointwise = phi.leq(&psi);
        let pf = isbell(&phi, &x, &y, &ctx.caps).unwrap();
        let ps = isbell(&psi, &x, &y, &ctx.caps).unwrap();
        // φ ≤ ψ iff φ↑μ ≤ ψ↑μ in the relation order for every μ (which is
        // the reverse of the dual powerset order)
        let up = (0..pf.dom.len()).all(|k| {
            let a = pf.cod.copresheaf(pf.f.apply(k));
            let b = ps.cod.copresheaf(ps.f.apply(k));
            a.values.iter().zip(&b.values).all(|(&av, &bv)| q.leq(av, bv))
        });
        let kf = kan(&phi, &x, &y, &ctx.caps).unwrap();
        let ks = kan(&psi, &x, &y, &ctx.caps).unwrap();
        let star = (0..kf.dom.len()).all(|k| {
            let a = kf.cod.presheaf(kf.f.apply(k));
            let b = ks.cod.presheaf(ks.f.apply(k));
            a.values.iter().zip(&b.values).all(|(&av, &bv)| q.leq(av, bv))
        });
        ensure!(
            ctx,
            i,
            "sampled distributor pairs",
            pointwise == up && pointwise == star,
            format!("hom-order correspondence fails on sample {i}")
        );
    }
    Outcome::pass(n, "sampled distributor pairs")
}

fn law_powerset_left_adjoint_criterion(ctx: &mut Ctx) -> Outcome {
    let q = ctx.q.clone();
    let n = ctx.samples.min(5);
    let mut checked = 0;
    for round in 0..n {
        let sz = if q.len() >= 4 { 1 } else { 2 };
        let x = ctx.s.ordered(&q, 1, sz);
        let y = ctx.s.ordered(&q, 1, sz);
        let px = presheaves(&x, &ctx.caps).unwrap();
        let py = presheaves(&y, &ctx.caps).unwrap();
        // candidates: the left component of an axiality, or a random map
        let f = if round % 2 == 0 {
            let phi = ctx.s.distributor(&y, &x);
            kan(&phi, &y, &x, &ctx.caps).unwrap().f
        } else {
            match ctx.s.memb_map(px.ordered(), py.ordered()) {
                Some(f) if f.is_morphism() => f,
                _ => continue,
            }
        };
        checked += 1;
        let adjoint = !find_adjoint(&f, AdjointSide::Right, &ctx.caps).unwrap().is_empty();
        let scalar_all = {
            let mut ok = underlying_right_adjoint(&f).is_some();
            'all: for (k, mu) in px.presheaves().iter().enumerate() {
                for degree in q.elements() {
                    for u in q.diagonal(mu.degree, degree) {
                        let srel = QRelation::new(
                            QSubset::singleton(q.clone(), mu.degree),
                            QSubset::singleton(q.clone(), degree),
                            vec![vec![u]],
                        )
                        .unwrap();
                        let scaled =
                            Presheaf::from_relation(&srel.compose(&mu.to_relation(&x)).unwrap());
                        let lhs = f.apply(px.find_presheaf(&scaled).unwrap());
                        let fmu = py.presheaf(f.apply(k));
                        let scaled_image = Presheaf::from_relation(
                            &srel.compose(&fmu.to_relation(&y)).unwrap(),
                        );
                        let rhs = py.find_presheaf(&scaled_image).unwrap();
                        if lhs != rhs {
                            ok = false;
                            break 'all;
                        }
                    }
                }
            }
            ok
        };
        let scalar_repr = {
            let mut ok = underlying_right_adjoint(&f).is_some();
            'repr: for j in 0..x.len() {
                let mu = yoneda(&x, j);
                let k = px.find_presheaf(&mu).unwrap();
                for degree in q.elements() {
                    for u in q.diagonal(mu.degree, degree) {
                        let srel = QRelation::new(
                            QSubset::singleton(q.clone(), mu.degree),
                            QSubset::singleton(q.clone(), degree),
                            vec![vec![u]],
                        )
                        .unwrap();
                        let scaled =
                            Presheaf::from_relation(&srel.compose(&mu.to_relation(&x)).unwrap());
                        let lhs = f.apply(px.find_presheaf(&scaled).unwrap());
                        let fmu = py.presheaf(f.apply(k));
                        let scaled_image = Presheaf::from_relation(
                            &srel.compose(&fmu.to_relation(&y)).unwrap(),
                        );
                        let rhs = py.find_presheaf(&scaled_image).unwrap();
                        if lhs != rhs {
                            ok = false;
                            break 'repr;
                        }
                    }
                }
            }
            ok
        };
        ensure!(
            ctx,
            checked,
            "sampled powerset maps",
            adjoint == scalar_all && scalar_all == scalar_repr,
            format!("left-adjoint criteria disagree: {adjoint} {scalar_all} {scalar_repr}")
        );
    }
    Outcome::pass(checked, "sampled powerset maps")
}

fn law_macneille_complete(ctx: &mut Ctx) -> Outcome {
    let q = ctx.q.clone();
    let n = ctx.samples.min(6);
    for i in 0..n {
        let x = ctx.s.ordered(&q, 1, ctx.small().min(2));
        let mac = match macneille(&x, &ctx.caps) {
            Ok(m) => m,
            Err(e) => return Outcome::fail(i, "sampled completions", e.to_string()),
        };
        ensure!(
            ctx,
            i,
            "sampled completions",
            mac.fixed.ordered.is_separated(),
            format!("completion is not separated on sample {i}")
        );
        if let Some(complete) = completeness_flag(&mac.fixed.ordered, &ctx.caps) {
            ensure!(
                ctx,
                i,
                "sampled completions",
                complete,
                format!("completion is not complete on sample {i}")
            );
        }
        for j in 0..x.len() {
            let idx = mac.pair.dom.find_presheaf(&yoneda(&x, j)).unwrap();
            ensure!(
                ctx,
                i,
                "sampled completions",
                mac.fixed.indices.contains(&idx),
                format!("a representable misses the fixed points on sample {i}")
            );
        }
    }
    Outcome::pass(n, "sampled completions")
}

/// Classical cut completion of a finite poset, as the family of cut extents.
fn classical_cut_extents(n: usize, leq: &dyn Fn(usize, usize) -> bool) -> Vec<u32> {
    let upper = |a: u32| -> u32 {
        let mut out = 0u32;
        for u in 0..n {
            if (0..n).all(|i| a >> i & 1 == 0 || leq(i, u)) {
                out |= 1 << u;
            }
        }
        out
    };
    let lower = |b: u32| -> u32 {
        let mut out = 0u32;
        for l in 0..n {
            if (0..n).all(|j| b >> j & 1 == 0 || leq(l, j)) {
                out |= 1 << l;
            }
        }
        out
    };
    let mut cuts: Vec<u32> = (0..(1u32 << n)).filter(|&a| lower(upper(a)) == a).collect();
    cuts.sort_unstable();
    cuts
}

fn law_macneille_classical_oracle(ctx: &mut Ctx) -> Outcome {
    if ctx.q.name() != "bool2" {
        return Outcome::vacuous("specific to the two-element quantale");
    }
    let q = ctx.q.clone();
    let mut checked = 0;
    // all labeled posets on up to 3 elements, exhaustively
    for n in 1..=3usize {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| i != j)
            .collect();
        'next: for mask in 0..(1u32 << pairs.len()) {
            let mut leq = vec![vec![false; n]; n];
            for (i, row) in leq.iter_mut().enumerate() {
                row[i] = true;
            }
            for (b, &(i, j)) in pairs.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    leq[i][j] = true;
                }
            }
            for i in 0..n {
                for j in 0..n {
                    if leq[i][j] && leq[j][i] && i != j {
                        continue 'next;
                    }
                    for k in 0..n {
                        if leq[i][j] && leq[j][k] && !leq[i][k] {
                            continue 'next;
                        }
                    }
                }
            }
            checked += 1;
            let labels: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
            let carrier = QSubset::crisp(q.clone(), labels);
            let alpha = (0..n)
                .map(|i| (0..n).map(|j| usize::from(leq[i][j])).collect())
                .collect();
            let x = make_ordered(carrier, alpha).unwrap();
            let mac = macneille(&x, &ctx.caps).unwrap();
            let mut ours: Vec<u32> = mac
                .fixed
                .indices
                .iter()
                .map(|&k| mac.pair.dom.presheaf(k))
                .filter(|p| p.degree == 1)
                .map(|p| {
                    p.values
                        .iter()
                        .enumerate()
                        .fold(0u32, |acc, (i, &v)| acc | ((v as u32) << i))
                })
                .collect();
            ours.sort_unstable();
            let classical = classical_cut_extents(n, &|i, j| leq[i][j]);
            ensure!(
                ctx,
                checked,
                "posets up to 3 elements",
                ours == classical,
                format!("cut families differ for poset mask {mask} on {n} elements")
            );
            let bottoms = mac
                .fixed
                .indices
                .iter()
                .filter(|&&k| mac.pair.dom.presheaf(k).degree == 0)
                .count();
            ensure!(
                ctx,
                checked,
                "posets up to 3 elements",
                bottoms == 1,
                "expected exactly one bottom-degree cut"
            );
        }
    }
    Outcome::pass(checked, "posets up to 3 elements")
}

fn law_fca_classical_oracle(ctx: &mut Ctx) -> Outcome {
    if ctx.q.name() != "bool2" {
        return Outcome::vacuous("specific to the two-element quantale");
    }
    let q = ctx.q.clone();
    let n = ctx.samples.min(20);
    for i in 0..n {
        let rows = 1 + ctx.s.range(3);
        let cols = 1 + ctx.s.range(3);
        let incidence: Vec<Vec<usize>> = (0..rows)
            .map(|_| (0..cols).map(|_| ctx.s.range(2)).collect())
            .collect();
        let x = QOrderedSet::discrete(QSubset::crisp(
            q.clone(),
            (0..rows).map(|k| format!("g{k}")).collect::<Vec<_>>(),
        ));
        let y = QOrderedSet::discrete(QSubset::crisp(
            q.clone(),
            (0..cols).map(|k| format!("m{k}")).collect::<Vec<_>>(),
        ));
        let phi = QRelation::new(
            x.carrier().clone(),
            y.carrier().clone(),
            incidence.clone(),
        )
        .unwrap();
        let lattice = concept_lattice(&phi, &x, &y, ConceptMode::Fca, &ctx.caps).unwrap();
        let mut ours: Vec<u32> = lattice
            .concepts
            .iter()
            .filter(|c| c.degree == 1)
            .map(|c| {
                c.extent
                    .values
                    .iter()
                    .enumerate()
                    .fold(0u32, |acc, (k, &v)| acc | ((v as u32) << k))
            })
            .collect();
        ours.sort_unstable();
        let up = |a: u32| -> u32 {
            let mut out = 0u32;
            for m in 0..cols {
                if (0..rows).all(|g| a >> g & 1 == 0 || incidence[g][m] == 1) {
                    out |= 1 << m;
                }
            }
            out
        };
        let down = |b: u32| -> u32 {
            let mut out = 0u32;
            for g in 0..rows {
                if (0..cols).all(|m| b >> m & 1 == 0 || incidence[g][m] == 1) {
                    out |= 1 << g;
                }
            }
            out
        };
        let mut classical: Vec<u32> = (0..(1u32 << rows))
            .filter(|&a| down(up(a)) == a)
            .collect();
        classical.sort_unstable();
        ensure!(
            ctx,
            i,
            "sampled contexts",
            ours == classical,
            format!("concept extents differ on sample {i}")
        );
    }
    Outcome::pass(n, "sampled contexts")
}

fn law_concept_lattices_complete(ctx: &mut Ctx) -> Outcome {
    let q = ctx.q.clone();
    let n = ctx.samples.min(4);
    for i in 0..n {
        let sz = if q.len() >= 4 { 1 } else { 2 };
        let x = QOrderedSet::discrete(ctx.s.subset(&q, 1, sz));
        let y = QOrderedSet::discrete(ctx.s.subset(&q, 1, sz));
        let phi = ctx.s.relation(x.carrier(), y.carrier());
        for mode in [ConceptMode::Fca, ConceptMode::Rst] {
            let lattice = match concept_lattice(&phi, &x, &y, mode, &ctx.caps) {
                Ok(l) => l,
                Err(e) => return Outcome::fail(i, "sampled contexts", e.to_string()),
            };
            if let Some(complete) = completeness_flag(&lattice.ordered, &ctx.caps) {
                ensure!(
                    ctx,
                    i,
                    "sampled contexts",
                    complete,
                    format!("concept lattice is not complete on sample {i}")
                );
            }
        }
    }
    Outcome::pass(n, "sampled contexts")
}

fn law_fixed_points_of_bounds_are_complete(ctx: &mut Ctx) -> Outcome {
    let q = ctx.q.clone();
    let n = ctx.samples.min(4);
    for i in 0..n {
        let one = QOrderedSet::singleton(q.clone(), q.unit());
        let pair = isbell(one.order(), &one, &one, &ctx.caps).unwrap();
        let fixed = fixed_points(&pair);
        if let Some(complete) = completeness_flag(&fixed.ordered, &ctx.caps) {
            ensure!(
                ctx,
                i,
                "unit singleton",
                complete,
                "fixed points of the bound operators are not complete"
            );
        }
    }
    Outcome::pass(n, "unit singleton")
}

// ---------------------------------------------------------------------------

fn registry() -> Vec<Law> {
    vec![
        ("completion.degree-bottoms", law_degree_bottoms),
        ("completion.injective-extension", law_injective_extension),
        ("completion.powerset-complete", law_powerset_complete),
        ("completion.sup-inf-duality", law_sup_inf_duality),
        ("completion.sup-unique-up-to-iso", law_sup_unique_up_to_iso),
        ("completion.tensor-cotensor-order", law_tensor_cotensor_order),
        ("galois.adjoint-unique-up-to-iso", law_adjoint_unique_up_to_iso),
        ("galois.adjunction-identities", law_adjunction_identities),
        ("galois.bool2-adjoint-pairs", law_bool2_adjoint_pairs),
        ("galois.cauchy-right-adjoints", law_cauchy_right_adjoints),
        ("galois.complete-iff-sup-adjoint", law_complete_iff_sup_adjoint),
        ("galois.concept-lattices-complete", law_concept_lattices_complete),
        ("galois.construction-injectivity", law_construction_injectivity),
        (
            "galois.distributor-characterizations",
            law_distributor_characterizations,
        ),
        ("galois.fca-classical-oracle", law_fca_classical_oracle),
        (
            "galois.fixed-points-complete",
            law_fixed_points_of_bounds_are_complete,
        ),
        ("galois.graph-cograph-adjoint", law_graph_cograph_adjoint),
        ("galois.hom-order-isomorphism", law_hom_order_isomorphism),
        (
            "galois.left-adjoint-characterizations",
            law_left_adjoint_characterizations,
        ),
        ("galois.lift-and-restrict", law_lift_and_restrict),
        ("galois.macneille-classical-oracle", law_macneille_classical_oracle),
        ("galois.macneille-complete", law_macneille_complete),
        ("galois.map-adjunction-criteria", law_map_adjunction_criteria),
        ("galois.powerset-adjunctions", law_powerset_adjunctions),
        (
            "galois.powerset-left-adjoint-criterion",
            law_powerset_left_adjoint_criterion,
        ),
        ("galois.representable-transforms", law_representable_transforms),
        (
            "galois.tensored-iff-pointwise-adjoints",
            law_tensored_iff_pointwise_adjoints,
        ),
        ("galois.ub-lb-adjoint", law_ub_lb_adjoint),
        ("ord.axioms-equal-matrix-conditions", law_axioms_equal_matrix_conditions),
        ("ord.bottom-indiscrete", law_bottom_indiscrete),
        ("ord.coreflection-idempotent", law_coreflection_idempotent),
        ("ord.hoehle-correspondence", law_hoehle_correspondence),
        (
            "ord.integral-diagonal-membership",
            law_integral_diagonal_membership,
        ),
        ("ord.map-order-transitive", law_map_order_transitive),
        ("ord.membership-interpolation", law_membership_interpolation),
        ("ord.morphism-composition", law_morphism_composition),
        ("ord.singleton-preorder-count", law_singleton_preorder_count),
        ("presheaf.closure-elementwise", law_closure_elementwise),
        ("presheaf.dual-order-reversed", law_dual_order_reversed),
        ("presheaf.image-maps", law_image_maps),
        ("presheaf.powerset-separated", law_powerset_separated),
        ("presheaf.yoneda-fully-faithful", law_yoneda_fully_faithful),
        ("presheaf.yoneda-lemma", law_yoneda_lemma),
        ("quantale.conjugate-involution", law_conjugate_involution),
        ("quantale.diagonal-divisibility", law_diagonal_divisibility),
        ("quantale.diagonal-join-closed", law_diagonal_join_closed),
        ("quantale.diagonal-structure", law_diagonal_structure),
        ("quantale.nonintegral-embeds-c3", law_nonintegral_embeds_c3),
        ("quantale.residuation-adjunction", law_residuation_adjunction),
        ("rel.compose-associative", law_compose_associative),
        ("rel.compose-join-distributive", law_compose_join_distributive),
        ("rel.decomposition", law_decomposition),
        ("rel.identity-unit", law_identity_unit),
        ("rel.imp-adjunction", law_imp_adjunction),
        ("rel.imp-composition-chain", law_imp_composition_chain),
        ("rel.imp-counit", law_imp_counit),
        ("rel.imp-currying", law_imp_currying),
        ("rel.imp-global-oracle", law_imp_global_oracle),
        ("rel.imp-interchange", law_imp_interchange),
        ("rel.imp-join-antitone", law_imp_join_antitone),
        ("rel.imp-lax-shift", law_imp_lax_shift),
        ("rel.imp-meet-distribution", law_imp_meet_distribution),
        ("rel.ops-closed", law_ops_closed),
        ("rel.singleton-imp-vs-residuation", law_singleton_imp_vs_residuation),
    ]
}

/// Identifiers of every registered law, in report order.
pub fn law_ids() -> Vec<&'static str> {
    let mut ids: Vec<&'static str> = registry().iter().map(|(id, _)| *id).collect();
    ids.sort_unstable();
    ids
}

/// Runs every registered law once per configured quantale.
pub fn run(config: &VerifyConfig) -> VerificationReport {
    let mut laws = registry();
    laws.sort_by_key(|(id, _)| *id);
    let mut entries = Vec::new();
    for (id, law) in &laws {
        for q in &config.quantales {
            let mut ctx = Ctx {
                q: q.clone(),
                s: Sampler::derived(config.seed, &format!("{id}/{}", q.name())),
                samples: config.samples,
                caps: config.caps,
            };
            let outcome =
                match std::panic::catch_unwind(AssertUnwindSafe(|| law(&mut ctx))) {
                    Ok(outcome) => outcome,
                    Err(payload) => {
                        let msg = payload
                            .downcast_ref::<&str>()
                            .map(|s| s.to_string())
                            .or_else(|| payload.downcast_ref::<String>().cloned())
                            .unwrap_or_else(|| "panic".into());
                        Outcome::fail(0, "aborted", format!("internal check failed: {msg}"))
                    }
                };
            entries.push(LawEntry {
                law: id.to_string(),
                quantale: q.name().to_string(),
                instances: outcome.instances,
                summary: outcome.summary,
                pass: outcome.witness.is_none(),
                witness: outcome.witness,
            });
        }
    }
    VerificationReport {
        seed: config.seed,
        samples: config.samples,
        entries,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantale::{builtin, DEFAULT_VERIFY_SET};

    #[test]
    fn default_suite_passes_on_c3() {
        let config = VerifyConfig {
            quantales: vec![Arc::new(builtin("c3").unwrap())],
            seed: 7,
            samples: 60,
            caps: Caps::default(),
        };
        let report = run(&config);
        for e in &report.entries {
            assert!(e.pass, "{} failed: {:?}", e.law, e.witness);
        }
        assert_eq!(report.entries.len(), law_ids().len());
    }

    #[test]
    fn reports_are_deterministic() {
        let config = VerifyConfig {
            quantales: DEFAULT_VERIFY_SET
                .iter()
                .take(2)
                .map(|n| Arc::new(builtin(n).unwrap()))
                .collect(),
            seed: 11,
            samples: 15,
            caps: Caps::default(),
        };
        let a = run(&config).render_text();
        let b = run(&config).render_text();
        assert_eq!(a, b);
    }
}
