//! Finite unital quantales: complete-lattice plus monoid tables, with
//! residuations and diagonal sets derived at construction time.
//!
//! Elements are canonical indices `0..n`; every operation afterwards is a
//! dense table lookup. Diagonal sets are stored as bitsets over element
//! indices, so the policy cap is 64 elements.

use thiserror::Error;

/// Index of a quantale element.
pub type Elem = usize;

/// Policy cap on the number of elements (diagonal sets are `u64` bitsets).
pub const MAX_ELEMENTS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxiomKind {
    NotALattice,
    NonAssociative,
    UnitFailure,
    NonDistributive,
    Trivial,
}

impl std::fmt::Display for AxiomKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            AxiomKind::NotALattice => "not-a-lattice",
            AxiomKind::NonAssociative => "non-associative",
            AxiomKind::UnitFailure => "unit-failure",
            AxiomKind::NonDistributive => "non-distributive",
            AxiomKind::Trivial => "trivial",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error)]
pub enum QuantaleError {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("axiom violated ({kind}): {detail}")]
    Axiom { kind: AxiomKind, detail: String },
    #[error("unsupported size: {what} has {got} elements, cap is {max}")]
    UnsupportedSize { what: String, got: usize, max: usize },
}

/// Which residuation to take in [`FiniteQuantale::residuate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Classification flags of a validated quantale.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub integral: bool,
    pub divisible: bool,
    pub commutative: bool,
    pub idempotents_above_unit: Vec<Elem>,
}

/// A validated finite unital quantale `(Q, &, e)`.
///
/// Invariants established by [`FiniteQuantale::new`]: the order is a finite
/// lattice (hence complete), `&` is associative with two-sided unit `e`,
/// `&` distributes over binary joins and the empty join in each argument
/// (which in the finite case gives preservation of arbitrary joins), and
/// `⊥ < e` (non-triviality).
#[derive(Debug, Clone)]
pub struct FiniteQuantale {
    name: String,
    labels: Vec<String>,
    leq: Vec<Vec<bool>>,
    mul: Vec<Vec<Elem>>,
    unit: Elem,
    join2: Vec<Vec<Elem>>,
    meet2: Vec<Vec<Elem>>,
    bottom: Elem,
    top: Elem,
    /// `res_l[r][q] = r/q`, largest `p` with `p & q ≤ r`.
    res_l: Vec<Vec<Elem>>,
    /// `res_r[p][r] = p\r`, largest `q` with `p & q ≤ r`.
    res_r: Vec<Vec<Elem>>,
    /// `diag[p][q]` is the bitset of `D(p,q) = {u | (u/p)&p = u = q&(q\u)}`.
    diag: Vec<Vec<u64>>,
    diag_max: Vec<Vec<Elem>>,
}

impl PartialEq for FiniteQuantale {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels
            && self.leq == other.leq
            && self.mul == other.mul
            && self.unit == other.unit
    }
}
impl Eq for FiniteQuantale {}

impl FiniteQuantale {
    /// Validates the raw tables and derives residuations and diagonal sets.
    ///
    /// Axioms are checked in a fixed order and the first violation is
    /// reported: lattice, associativity, unit, join-distributivity,
    /// non-triviality.
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        leq: Vec<Vec<bool>>,
        mul: Vec<Vec<Elem>>,
        unit: Elem,
    ) -> Result<Self, QuantaleError> {
        let name = name.into();
        let n = labels.len();
        if n == 0 {
            return Err(QuantaleError::Axiom {
                kind: AxiomKind::NotALattice,
                detail: "no elements".into(),
            });
        }
        if n > MAX_ELEMENTS {
            return Err(QuantaleError::UnsupportedSize {
                what: format!("quantale {name}"),
                got: n,
                max: MAX_ELEMENTS,
            });
        }
        {
            let mut sorted = labels.clone();
            sorted.sort();
            sorted.dedup();
            if sorted.len() != n {
                return Err(QuantaleError::Parse {
                    line: 0,
                    msg: "duplicate element labels".into(),
                });
            }
        }
        if leq.len() != n
            || leq.iter().any(|r| r.len() != n)
            || mul.len() != n
            || mul.iter().any(|r| r.len() != n)
            || mul.iter().flatten().any(|&e| e >= n)
            || unit >= n
        {
            return Err(QuantaleError::Parse {
                line: 0,
                msg: "table dimensions or indices out of range".into(),
            });
        }

        let lab = |e: Elem| labels[e].clone();

        // Partial order.
        for p in 0..n {
            if !leq[p][p] {
                return Err(QuantaleError::Axiom {
                    kind: AxiomKind::NotALattice,
                    detail: format!("order not reflexive at {}", lab(p)),
                });
            }
            for q in 0..n {
                if p != q && leq[p][q] && leq[q][p] {
                    return Err(QuantaleError::Axiom {
                        kind: AxiomKind::NotALattice,
                        detail: format!("order not antisymmetric at {}, {}", lab(p), lab(q)),
                    });
                }
                for r in 0..n {
                    if leq[p][q] && leq[q][r] && !leq[p][r] {
                        return Err(QuantaleError::Axiom {
                            kind: AxiomKind::NotALattice,
                            detail: format!(
                                "order not transitive at {}, {}, {}",
                                lab(p),
                                lab(q),
                                lab(r)
                            ),
                        });
                    }
                }
            }
        }

        // Pairwise joins and meets; for a finite poset with all binary
        // joins/meets and bottom/top this already yields a complete lattice.
        let mut join2 = vec![vec![0usize; n]; n];
        let mut meet2 = vec![vec![0usize; n]; n];
        for p in 0..n {
            for q in 0..n {
                let ubs: Vec<Elem> = (0..n).filter(|&r| leq[p][r] && leq[q][r]).collect();
                let lub = ubs.iter().copied().find(|&m| ubs.iter().all(|&u| leq[m][u]));
                let lbs: Vec<Elem> = (0..n).filter(|&r| leq[r][p] && leq[r][q]).collect();
                let glb = lbs.iter().copied().find(|&m| lbs.iter().all(|&l| leq[l][m]));
                match (lub, glb) {
                    (Some(j), Some(m)) => {
                        join2[p][q] = j;
                        meet2[p][q] = m;
                    }
                    _ => {
                        return Err(QuantaleError::Axiom {
                            kind: AxiomKind::NotALattice,
                            detail: format!("pair {}, {} lacks a join or meet", lab(p), lab(q)),
                        })
                    }
                }
            }
        }
        let bottom = (0..n).fold(0, |acc, e| meet2[acc][e]);
        let top = (0..n).fold(0, |acc, e| join2[acc][e]);

        // Monoid.
        for p in 0..n {
            for q in 0..n {
                for r in 0..n {
                    if mul[mul[p][q]][r] != mul[p][mul[q][r]] {
                        return Err(QuantaleError::Axiom {
                            kind: AxiomKind::NonAssociative,
                            detail: format!(
                                "({0}&{1})&{2} = {3} but {0}&({1}&{2}) = {4}",
                                lab(p),
                                lab(q),
                                lab(r),
                                lab(mul[mul[p][q]][r]),
                                lab(mul[p][mul[q][r]])
                            ),
                        });
                    }
                }
            }
        }
        for p in 0..n {
            if mul[unit][p] != p || mul[p][unit] != p {
                return Err(QuantaleError::Axiom {
                    kind: AxiomKind::UnitFailure,
                    detail: format!(
                        "{0}&{1} = {2}, {1}&{0} = {3}",
                        lab(unit),
                        lab(p),
                        lab(mul[unit][p]),
                        lab(mul[p][unit])
                    ),
                });
            }
        }

        // Distributivity over binary joins and the empty join.
        for p in 0..n {
            if mul[p][bottom] != bottom || mul[bottom][p] != bottom {
                return Err(QuantaleError::Axiom {
                    kind: AxiomKind::NonDistributive,
                    detail: format!("{} does not absorb bottom", lab(p)),
                });
            }
            for q in 0..n {
                for r in 0..n {
                    if mul[p][join2[q][r]] != join2[mul[p][q]][mul[p][r]]
                        || mul[join2[q][r]][p] != join2[mul[q][p]][mul[r][p]]
                    {
                        return Err(QuantaleError::Axiom {
                            kind: AxiomKind::NonDistributive,
                            detail: format!(
                                "multiplication does not distribute over {} v {} against {}",
                                lab(q),
                                lab(r),
                                lab(p)
                            ),
                        });
                    }
                }
            }
        }

        if bottom == unit {
            return Err(QuantaleError::Axiom {
                kind: AxiomKind::Trivial,
                detail: "bottom equals the unit".into(),
            });
        }

        // Residuations: the join of the satisfying set lies in the set by
        // distributivity, so a fold computes the largest solution.
        let mut res_l = vec![vec![0usize; n]; n];
        let mut res_r = vec![vec![0usize; n]; n];
        for r in 0..n {
            for q in 0..n {
                res_l[r][q] = (0..n)
                    .filter(|&p| leq[mul[p][q]][r])
                    .fold(bottom, |acc, p| join2[acc][p]);
            }
            for p in 0..n {
                res_r[p][r] = (0..n)
                    .filter(|&q| leq[mul[p][q]][r])
                    .fold(bottom, |acc, q| join2[acc][q]);
            }
        }

        let mut diag = vec![vec![0u64; n]; n];
        let mut diag_max = vec![vec![bottom; n]; n];
        for p in 0..n {
            for q in 0..n {
                let mut mask = 0u64;
                let mut mx = bottom;
                for u in 0..n {
                    if mul[res_l[u][p]][p] == u && mul[q][res_r[q][u]] == u {
                        mask |= 1 << u;
                        mx = join2[mx][u];
                    }
                }
                diag[p][q] = mask;
                diag_max[p][q] = mx;
            }
        }

        Ok(FiniteQuantale {
            name,
            labels,
            leq,
            mul,
            unit,
            join2,
            meet2,
            bottom,
            top,
            res_l,
            res_r,
            diag,
            diag_max,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.len()
    }

    pub fn label(&self, e: Elem) -> &str {
        &self.labels[e]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Resolves a label to an element index. Falls back to the aliases
    /// `e`/`unit`, `bot`/`bottom` and `top` when no literal label matches.
    pub fn elem_by_label(&self, label: &str) -> Option<Elem> {
        if let Some(i) = self.labels.iter().position(|l| l == label) {
            return Some(i);
        }
        match label {
            "e" | "unit" => Some(self.unit),
            "bot" | "bottom" => Some(self.bottom),
            "top" => Some(self.top),
            _ => None,
        }
    }

    pub fn unit(&self) -> Elem {
        self.unit
    }

    pub fn bottom(&self) -> Elem {
        self.bottom
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    pub fn leq(&self, p: Elem, q: Elem) -> bool {
        self.leq[p][q]
    }

    pub fn join(&self, p: Elem, q: Elem) -> Elem {
        self.join2[p][q]
    }

    pub fn meet(&self, p: Elem, q: Elem) -> Elem {
        self.meet2[p][q]
    }

    pub fn join_all(&self, elems: impl IntoIterator<Item = Elem>) -> Elem {
        elems.into_iter().fold(self.bottom, |a, b| self.join2[a][b])
    }

    pub fn meet_all(&self, elems: impl IntoIterator<Item = Elem>) -> Elem {
        elems.into_iter().fold(self.top, |a, b| self.meet2[a][b])
    }

    pub fn mul(&self, p: Elem, q: Elem) -> Elem {
        self.mul[p][q]
    }

    /// `r/q`: the largest `p` with `p & q ≤ r`.
    pub fn res_left(&self, r: Elem, q: Elem) -> Elem {
        self.res_l[r][q]
    }

    /// `p\r`: the largest `q` with `p & q ≤ r`.
    pub fn res_right(&self, p: Elem, r: Elem) -> Elem {
        self.res_r[p][r]
    }

    /// `residuate(a, b, Left) = a/b` and `residuate(a, b, Right) = a\b`,
    /// so that `p&q ≤ r ⟺ p ≤ residuate(r,q,Left) ⟺ q ≤ residuate(p,r,Right)`.
    pub fn residuate(&self, a: Elem, b: Elem, side: Side) -> Elem {
        match side {
            Side::Left => self.res_l[a][b],
            Side::Right => self.res_r[a][b],
        }
    }

    /// Bitset of the diagonal set `D(p,q)`.
    pub fn diag_mask(&self, p: Elem, q: Elem) -> u64 {
        self.diag[p][q]
    }

    pub fn diag_contains(&self, p: Elem, q: Elem, u: Elem) -> bool {
        self.diag[p][q] & (1 << u) != 0
    }

    /// The members of `D(p,q)` in element-index order.
    pub fn diagonal(&self, p: Elem, q: Elem) -> Vec<Elem> {
        let mask = self.diag[p][q];
        (0..self.len()).filter(|&u| mask & (1 << u) != 0).collect()
    }

    /// The largest member of `D(p,q)` (diagonal sets are join-closed).
    pub fn diag_max(&self, p: Elem, q: Elem) -> Elem {
        self.diag_max[p][q]
    }

    pub fn is_integral(&self) -> bool {
        self.unit == self.top
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.len();
        (0..n).all(|p| (0..n).all(|q| self.mul[p][q] == self.mul[q][p]))
    }

    /// Divisibility via the diagonal-set criterion: `D(p,q)` equals the
    /// down-set of `p ∧ q` for every pair.
    pub fn is_divisible(&self) -> bool {
        let n = self.len();
        (0..n).all(|p| {
            (0..n).all(|q| {
                let m = self.meet2[p][q];
                let down: u64 = (0..n).filter(|&u| self.leq[u][m]).map(|u| 1u64 << u).sum();
                self.diag[p][q] == down
            })
        })
    }

    pub fn idempotents_above_unit(&self) -> Vec<Elem> {
        self.elements()
            .filter(|&q| self.mul[q][q] == q && self.leq[self.unit][q])
            .collect()
    }

    pub fn classify(&self) -> Classification {
        Classification {
            integral: self.is_integral(),
            divisible: self.is_divisible(),
            commutative: self.is_commutative(),
            idempotents_above_unit: self.idempotents_above_unit(),
        }
    }

    /// The conjugate quantale: same lattice, multiplication reversed.
    pub fn conjugate(&self) -> FiniteQuantale {
        let n = self.len();
        let mut mul = vec![vec![0usize; n]; n];
        for p in 0..n {
            for q in 0..n {
                mul[p][q] = self.mul[q][p];
            }
        }
        let name = match self.name.strip_suffix("_tau") {
            Some(base) => base.to_string(),
            None => format!("{}_tau", self.name),
        };
        FiniteQuantale::new(name, self.labels.clone(), self.leq.clone(), mul, self.unit)
            .expect("conjugating a valid quantale preserves all axioms")
    }
}

fn chain_leq(n: usize) -> Vec<Vec<bool>> {
    (0..n).map(|p| (0..n).map(|q| p <= q).collect()).collect()
}

/// The two-element Boolean algebra, `e = ⊤`, `& = ∧`.
pub fn bool2() -> FiniteQuantale {
    let labels = vec!["bot".into(), "top".into()];
    let mul = vec![vec![0, 0], vec![0, 1]];
    FiniteQuantale::new("bool2", labels, chain_leq(2), mul, 1).unwrap()
}

/// The three-chain `{⊥, e, ⊤}` with `⊤&⊤ = ⊤` and everything else trivial.
pub fn c3() -> FiniteQuantale {
    let labels = vec!["bot".into(), "e".into(), "top".into()];
    let mul = vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 2]];
    FiniteQuantale::new("c3", labels, chain_leq(3), mul, 1).unwrap()
}

/// The four-chain `{⊥, a, b, ⊤}` with unit `⊤` and
/// `a·a = b·a = ⊥`, `a·b = a`, `b·b = b`.
pub fn c4() -> FiniteQuantale {
    let labels = vec!["bot".into(), "a".into(), "b".into(), "top".into()];
    let mul = vec![
        vec![0, 0, 0, 0],
        vec![0, 0, 1, 1],
        vec![0, 0, 2, 2],
        vec![0, 1, 2, 3],
    ];
    FiniteQuantale::new("c4", labels, chain_leq(4), mul, 3).unwrap()
}

/// The Łukasiewicz subchain `{0, 1/n, …, 1}` with `x & y = max(0, x+y−1)`.
pub fn lukasiewicz(n: usize) -> Result<FiniteQuantale, QuantaleError> {
    if n == 0 {
        return Err(QuantaleError::Parse {
            line: 0,
            msg: "lukasiewicz needs n >= 1".into(),
        });
    }
    let size = n + 1;
    if size > MAX_ELEMENTS {
        return Err(QuantaleError::UnsupportedSize {
            what: format!("lukasiewicz({n})"),
            got: size,
            max: MAX_ELEMENTS,
        });
    }
    let labels: Vec<String> = (0..=n)
        .map(|i| {
            if i == 0 {
                "0".into()
            } else if i == n {
                "1".into()
            } else {
                format!("{i}/{n}")
            }
        })
        .collect();
    let mul = (0..=n)
        .map(|i| (0..=n).map(|j| (i + j).saturating_sub(n)).collect())
        .collect();
    FiniteQuantale::new(format!("lukasiewicz({n})"), labels, chain_leq(size), mul, n)
}

/// All join-preserving endomaps of the `m`-chain under composition, ordered
/// pointwise; the unit is the identity map.
pub fn sup_endo(m: usize) -> Result<FiniteQuantale, QuantaleError> {
    if m < 2 {
        return Err(QuantaleError::Parse {
            line: 0,
            msg: "sup_endo needs a chain with at least 2 elements".into(),
        });
    }
    // Join-preserving on a finite chain = monotone and bottom-preserving.
    let mut maps: Vec<Vec<usize>> = Vec::new();
    let mut stack = vec![vec![0usize]];
    while let Some(partial) = stack.pop() {
        if partial.len() == m {
            maps.push(partial);
            continue;
        }
        let last = *partial.last().unwrap();
        for next in last..m {
            let mut ext = partial.clone();
            ext.push(next);
            stack.push(ext);
        }
    }
    maps.sort();
    let size = maps.len();
    if size > MAX_ELEMENTS {
        return Err(QuantaleError::UnsupportedSize {
            what: format!("sup_endo({m})"),
            got: size,
            max: MAX_ELEMENTS,
        });
    }
    let labels: Vec<String> = maps
        .iter()
        .map(|f| {
            let imgs: Vec<String> = f.iter().map(|v| v.to_string()).collect();
            format!("({})", imgs.join(","))
        })
        .collect();
    let leq = maps
        .iter()
        .map(|f| {
            maps.iter()
                .map(|g| f.iter().zip(g).all(|(a, b)| a <= b))
                .collect()
        })
        .collect();
    let mul = maps
        .iter()
        .map(|f| {
            maps.iter()
                .map(|g| {
                    let fg: Vec<usize> = (0..m).map(|x| f[g[x]]).collect();
                    maps.iter().position(|h| *h == fg).unwrap()
                })
                .collect()
        })
        .collect();
    let unit_map: Vec<usize> = (0..m).collect();
    let unit = maps.iter().position(|h| *h == unit_map).unwrap();
    FiniteQuantale::new(format!("sup_endo({m})"), labels, leq, mul, unit)
}

/// All binary relations on a `k`-element set under relation composition,
/// ordered by inclusion; the unit is the identity relation.
pub fn rel(k: usize) -> Result<FiniteQuantale, QuantaleError> {
    if k == 0 || k > 2 {
        return Err(QuantaleError::UnsupportedSize {
            what: format!("rel({k})"),
            got: if k == 0 { 0 } else { 1 << (k * k) },
            max: 16,
        });
    }
    let bits = k * k;
    let size = 1usize << bits;
    let labels: Vec<String> = (0..size)
        .map(|r| {
            let s: String = (0..bits)
                .map(|b| if r >> b & 1 == 1 { '1' } else { '0' })
                .collect();
            format!("r{s}")
        })
        .collect();
    let leq = (0..size)
        .map(|r| (0..size).map(|s| r & s == r).collect())
        .collect();
    // (r.s) relates x to z iff some y has (x,y) in s and (y,z) in r,
    // matching composition of functions applied right to left.
    let compose = |r: usize, s: usize| {
        let mut out = 0usize;
        for x in 0..k {
            for z in 0..k {
                if (0..k).any(|y| s >> (x * k + y) & 1 == 1 && r >> (y * k + z) & 1 == 1) {
                    out |= 1 << (x * k + z);
                }
            }
        }
        out
    };
    let mul = (0..size)
        .map(|r| (0..size).map(|s| compose(r, s)).collect())
        .collect();
    let id = (0..k).fold(0usize, |acc, x| acc | 1 << (x * k + x));
    FiniteQuantale::new(format!("rel({k})"), labels, leq, mul, id)
}

/// The free quantale on a finite monoid: subsets of `M` under pointwise
/// multiplication, ordered by inclusion, with unit `{e}`.
pub fn free(
    monoid_labels: &[String],
    table: &[Vec<usize>],
    unit: usize,
) -> Result<FiniteQuantale, QuantaleError> {
    let m = monoid_labels.len();
    if m == 0 || m > 4 {
        return Err(QuantaleError::UnsupportedSize {
            what: "free(monoid)".into(),
            got: if m == 0 { 0 } else { 1 << m },
            max: 16,
        });
    }
    for row in table {
        if row.len() != m || row.iter().any(|&e| e >= m) {
            return Err(QuantaleError::Parse {
                line: 0,
                msg: "monoid table malformed".into(),
            });
        }
    }
    if table.len() != m || unit >= m {
        return Err(QuantaleError::Parse {
            line: 0,
            msg: "monoid table malformed".into(),
        });
    }
    let size = 1usize << m;
    let labels: Vec<String> = (0..size)
        .map(|s| {
            let members: Vec<&str> = (0..m)
                .filter(|&i| s >> i & 1 == 1)
                .map(|i| monoid_labels[i].as_str())
                .collect();
            format!("{{{}}}", members.join(","))
        })
        .collect();
    let leq = (0..size)
        .map(|a| (0..size).map(|b| a & b == a).collect())
        .collect();
    let mul = (0..size)
        .map(|a: usize| {
            (0..size)
                .map(|b: usize| {
                    let mut out = 0usize;
                    for i in 0..m {
                        if a >> i & 1 == 0 {
                            continue;
                        }
                        for j in 0..m {
                            if b >> j & 1 == 1 {
                                out |= 1 << table[i][j];
                            }
                        }
                    }
                    out
                })
                .collect()
        })
        .collect();
    FiniteQuantale::new("free", labels, leq, mul, 1 << unit)
}

/// The cyclic group of order `n` as a monoid table, for `free`.
pub fn cyclic_monoid(n: usize) -> (Vec<String>, Vec<Vec<usize>>, usize) {
    let labels = (0..n).map(|i| format!("g{i}")).collect();
    let table = (0..n)
        .map(|i| (0..n).map(|j| (i + j) % n).collect())
        .collect();
    (labels, table, 0)
}

/// Resolves a builtin name such as `c3`, `lukasiewicz(4)`, `sup_endo(3)`,
/// `rel(2)` or `free(z2)`.
pub fn builtin(name: &str) -> Result<FiniteQuantale, QuantaleError> {
    let name = name.trim();
    match name {
        "bool2" => return Ok(bool2()),
        "c3" => return Ok(c3()),
        "c4" => return Ok(c4()),
        _ => {}
    }
    let parse_arg = |prefix: &str| -> Option<&str> {
        name.strip_prefix(prefix)
            .and_then(|rest| rest.strip_prefix('('))
            .and_then(|rest| rest.strip_suffix(')'))
    };
    if let Some(arg) = parse_arg("lukasiewicz") {
        let n: usize = arg.parse().map_err(|_| QuantaleError::Parse {
            line: 0,
            msg: format!("bad lukasiewicz parameter {arg:?}"),
        })?;
        return lukasiewicz(n);
    }
    if let Some(arg) = parse_arg("sup_endo") {
        let m: usize = arg.parse().map_err(|_| QuantaleError::Parse {
            line: 0,
            msg: format!("bad sup_endo parameter {arg:?}"),
        })?;
        return sup_endo(m);
    }
    if let Some(arg) = parse_arg("rel") {
        let k: usize = arg.parse().map_err(|_| QuantaleError::Parse {
            line: 0,
            msg: format!("bad rel parameter {arg:?}"),
        })?;
        return rel(k);
    }
    if let Some(arg) = parse_arg("free") {
        let n = match arg {
            "z2" => 2,
            "z3" => 3,
            "z4" => 4,
            _ => {
                return Err(QuantaleError::Parse {
                    line: 0,
                    msg: format!("unknown monoid {arg:?}; use z2, z3 or z4"),
                })
            }
        };
        let (labels, table, unit) = cyclic_monoid(n);
        return free(&labels, &table, unit);
    }
    Err(QuantaleError::Parse {
        line: 0,
        msg: format!("unknown builtin quantale {name:?}"),
    })
}

/// Builtin names exercised by default in the verification harness.
pub const DEFAULT_VERIFY_SET: &[&str] = &["bool2", "c3", "c4", "lukasiewicz(4)"];

#[cfg(test)]
mod tests {
    use super::*;

    fn by_labels(q: &FiniteQuantale, labels: &[&str]) -> Vec<Elem> {
        labels.iter().map(|l| q.elem_by_label(l).unwrap()).collect()
    }

    #[test]
    fn c3_diagonal_tables() {
        let q = c3();
        let (b, e, t) = (0, 1, 2);
        for (p, r) in [(b, b), (b, e), (b, t), (e, b), (t, b)] {
            assert_eq!(q.diagonal(p, r), vec![b]);
        }
        for (p, r) in [(t, t), (e, t), (t, e)] {
            assert_eq!(q.diagonal(p, r), vec![b, t]);
        }
        assert_eq!(q.diagonal(e, e), vec![b, e, t]);
    }

    #[test]
    fn c3_residuations() {
        let q = c3();
        let (b, e, t) = (0, 1, 2);
        // top -> bot = top -> e = bot, top -> top = top
        assert_eq!(q.res_right(t, b), b);
        assert_eq!(q.res_right(t, e), b);
        assert_eq!(q.res_right(t, t), t);
        assert_eq!(q.residuate(t, b, Side::Right), b);
        // unit laws
        for x in q.elements() {
            assert_eq!(q.res_right(e, x), x);
            assert_eq!(q.res_left(x, e), x);
        }
    }

    #[test]
    fn residuation_galois_property_exhaustive() {
        for q in [
            bool2(),
            c3(),
            c4(),
            lukasiewicz(4).unwrap(),
            sup_endo(3).unwrap(),
            rel(2).unwrap(),
            free(&cyclic_monoid(2).0, &cyclic_monoid(2).1, 0).unwrap(),
        ] {
            for p in q.elements() {
                for r in q.elements() {
                    for s in q.elements() {
                        let lhs = q.leq(q.mul(p, r), s);
                        assert_eq!(lhs, q.leq(p, q.residuate(s, r, Side::Left)));
                        assert_eq!(lhs, q.leq(r, q.residuate(p, s, Side::Right)));
                    }
                }
            }
        }
    }

    #[test]
    fn c4_table_and_classification() {
        let q = c4();
        let es = by_labels(&q, &["bot", "a", "b", "top"]);
        let (a, b) = (es[1], es[2]);
        assert_eq!(q.mul(a, a), es[0]);
        assert_eq!(q.mul(b, a), es[0]);
        assert_eq!(q.mul(a, b), a);
        assert_eq!(q.mul(b, b), b);
        let c = q.classify();
        assert!(c.integral);
        assert!(!c.divisible);
        assert!(!c.commutative);
        // b\a enumerates to a
        assert_eq!(q.res_right(b, a), a);
        // a is not right-divisible by b, so a is outside D(b,b)
        assert!(!q.diag_contains(b, b, a));
    }

    #[test]
    fn classify_builtins() {
        let c = bool2().classify();
        assert!(c.integral && c.divisible && c.commutative);
        let c = c3().classify();
        assert!(!c.integral && c.commutative);
        assert_eq!(c.idempotents_above_unit.len(), 2);
        let c = lukasiewicz(4).unwrap().classify();
        assert!(c.integral && c.divisible && c.commutative);
        let c = sup_endo(3).unwrap().classify();
        assert!(!c.integral && !c.commutative);
        let c = rel(2).unwrap().classify();
        assert!(!c.integral && !c.commutative);
    }

    #[test]
    fn lukasiewicz_one_is_bool2() {
        let l = lukasiewicz(1).unwrap();
        let b = bool2();
        assert_eq!(l.len(), 2);
        for p in 0..2 {
            for q in 0..2 {
                assert_eq!(l.mul(p, q), b.mul(p, q));
                assert_eq!(l.leq(p, q), b.leq(p, q));
            }
        }
        assert_eq!(l.unit(), b.unit());
    }

    #[test]
    fn conjugate_is_an_involution() {
        for q in [c3(), c4(), rel(2).unwrap()] {
            let qt = q.conjugate();
            for p in q.elements() {
                for r in q.elements() {
                    assert_eq!(qt.mul(p, r), q.mul(r, p));
                }
            }
            assert_eq!(qt.conjugate(), q);
            assert_eq!(qt.conjugate().name(), q.name());
        }
        assert_eq!(bool2().conjugate(), bool2());
    }

    #[test]
    fn diagonal_laws_exhaustive() {
        for q in [bool2(), c3(), c4(), lukasiewicz(3).unwrap(), sup_endo(3).unwrap()] {
            let n = q.len();
            let (bot, e, top) = (q.bottom(), q.unit(), q.top());
            assert_eq!(q.diagonal(e, e).len(), n);
            for p in q.elements() {
                assert_eq!(q.diagonal(bot, p), vec![bot]);
                assert_eq!(q.diagonal(p, bot), vec![bot]);
                for r in q.elements() {
                    assert!(q.diag_contains(p, r, bot));
                    // join-closure of diagonal sets, pairwise
                    let members = q.diagonal(p, r);
                    for &u in &members {
                        for &v in &members {
                            assert!(q.diag_contains(p, r, q.join(u, v)));
                        }
                    }
                }
                assert!(q.diag_contains(p, p, p));
            }
            assert_eq!(q.diag_contains(top, top, e), q.is_integral());
        }
    }

    #[test]
    fn nonintegral_builtins_embed_c3() {
        // {bot, e, top} is closed under & and matches the three-chain tables.
        let c3q = c3();
        for q in [c3(), sup_endo(3).unwrap(), rel(2).unwrap()] {
            assert!(!q.is_integral());
            let sub = [q.bottom(), q.unit(), q.top()];
            for (i, &p) in sub.iter().enumerate() {
                for (j, &r) in sub.iter().enumerate() {
                    let prod = q.mul(p, r);
                    let pos = sub.iter().position(|&s| s == prod);
                    assert_eq!(pos, Some(c3q.mul(i, j)), "closure under & in {}", q.name());
                }
            }
        }
    }

    #[test]
    fn validation_reports_first_violation() {
        // Genuine c3 table with the unit declared as top: unit failure.
        let labels = vec!["bot".into(), "e".into(), "top".into()];
        let mul = vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 2]];
        let err = FiniteQuantale::new("broken", labels.clone(), chain_leq(3), mul, 2).unwrap_err();
        match err {
            QuantaleError::Axiom { kind, .. } => assert_eq!(kind, AxiomKind::UnitFailure),
            other => panic!("unexpected error {other:?}"),
        }

        // Non-associative perturbation of c4: mul a b changed from a to b.
        let labels = vec!["bot".into(), "a".into(), "b".into(), "top".into()];
        let mul = vec![
            vec![0, 0, 0, 0],
            vec![0, 0, 2, 1],
            vec![0, 0, 2, 2],
            vec![0, 1, 2, 3],
        ];
        let err = FiniteQuantale::new("broken", labels, chain_leq(4), mul, 3).unwrap_err();
        match err {
            QuantaleError::Axiom { kind, .. } => assert_eq!(kind, AxiomKind::NonAssociative),
            other => panic!("unexpected error {other:?}"),
        }

        // The one-element quantale has bot = e; anything larger with a
        // declared bottom unit already fails the unit or distributivity law.
        let err =
            FiniteQuantale::new("broken", vec!["x".into()], chain_leq(1), vec![vec![0]], 0)
                .unwrap_err();
        match err {
            QuantaleError::Axiom { kind, .. } => assert_eq!(kind, AxiomKind::Trivial),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn builtin_name_parsing() {
        assert_eq!(builtin("c3").unwrap().len(), 3);
        assert_eq!(builtin("lukasiewicz(4)").unwrap().len(), 5);
        assert_eq!(builtin("sup_endo(3)").unwrap().len(), 6);
        assert_eq!(builtin("rel(2)").unwrap().len(), 16);
        assert_eq!(builtin("free(z2)").unwrap().len(), 4);
        assert!(builtin("rel(3)").is_err());
        assert!(builtin("nosuch").is_err());
    }
}
