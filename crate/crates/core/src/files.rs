//! Line-oriented text formats: quantale tables, relation contexts, ordered
//! sets (contexts with equal source and target) and map files, plus the
//! writers that make every export re-parse through the same loaders.
//!
//! All formats are UTF-8 with `#` comments. Tokens are whitespace-separated;
//! labels therefore cannot contain whitespace.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use thiserror::Error;

use crate::qord::{make_ordered, OrderError, QOrderMap, QOrderedSet};
use crate::qrel::{QRelation, QSubset, RelError};
use crate::quantale::{builtin, Elem, FiniteQuantale, QuantaleError};

#[derive(Debug, Error)]
pub enum FileError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unknown quantale {0:?}")]
    UnknownQuantale(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Quantale(#[from] QuantaleError),
    #[error(transparent)]
    Rel(#[from] RelError),
    #[error(transparent)]
    Order(#[from] OrderError),
}

fn perr(line: usize, msg: impl Into<String>) -> FileError {
    FileError::Parse {
        line,
        msg: msg.into(),
    }
}

/// Resolves quantale names to instances: file-loaded quantales first, then
/// the builtin constructors.
#[derive(Default, Clone)]
pub struct QuantaleRegistry {
    named: BTreeMap<String, Arc<FiniteQuantale>>,
}

impl QuantaleRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, q: Arc<FiniteQuantale>) {
        self.named.insert(q.name().to_string(), q);
    }

    pub fn resolve(&self, name: &str) -> Result<Arc<FiniteQuantale>, FileError> {
        if let Some(q) = self.named.get(name) {
            return Ok(q.clone());
        }
        builtin(name)
            .map(Arc::new)
            .map_err(|_| FileError::UnknownQuantale(name.to_string()))
    }
}

/// Non-comment, non-empty lines with their 1-based line numbers.
fn body(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            None
        } else {
            Some((i + 1, line.split_whitespace().collect()))
        }
    })
}

/// Parses a quantale table:
///
/// ```text
/// quantale <name>
/// elements <lbl> <lbl> ...
/// unit <lbl>
/// order <a><<b> ...        # cover pairs, reflexive-transitive closure applied
/// mul <p> <q> <r>          # one line per pair, all n^2 required
/// ```
pub fn parse_quantale(text: &str) -> Result<FiniteQuantale, FileError> {
    let mut name: Option<String> = None;
    let mut labels: Vec<String> = Vec::new();
    let mut unit_label: Option<String> = None;
    let mut covers: Vec<(String, String, usize)> = Vec::new();
    let mut mul_rows: Vec<(String, String, String, usize)> = Vec::new();

    for (line, toks) in body(text) {
        match toks[0] {
            "quantale" => {
                if toks.len() != 2 {
                    return Err(perr(line, "expected: quantale <name>"));
                }
                name = Some(toks[1].to_string());
            }
            "elements" => {
                labels.extend(toks[1..].iter().map(|s| s.to_string()));
            }
            "unit" => {
                if toks.len() != 2 {
                    return Err(perr(line, "expected: unit <label>"));
                }
                unit_label = Some(toks[1].to_string());
            }
            "order" => {
                for tok in &toks[1..] {
                    let (a, b) = tok
                        .split_once('<')
                        .ok_or_else(|| perr(line, format!("bad cover pair {tok:?}")))?;
                    covers.push((a.to_string(), b.to_string(), line));
                }
            }
            "mul" => {
                if toks.len() != 4 {
                    return Err(perr(line, "expected: mul <p> <q> <r>"));
                }
                mul_rows.push((
                    toks[1].to_string(),
                    toks[2].to_string(),
                    toks[3].to_string(),
                    line,
                ));
            }
            other => return Err(perr(line, format!("unknown directive {other:?}"))),
        }
    }

    let name = name.ok_or_else(|| perr(0, "missing quantale line"))?;
    if labels.is_empty() {
        return Err(perr(0, "missing elements line"));
    }
    let n = labels.len();
    let index = |lbl: &str, line: usize| -> Result<Elem, FileError> {
        labels
            .iter()
            .position(|l| l == lbl)
            .ok_or_else(|| perr(line, format!("unknown element {lbl:?}")))
    };

    let mut leq = vec![vec![false; n]; n];
    for (i, row) in leq.iter_mut().enumerate() {
        row[i] = true;
    }
    for (a, b, line) in &covers {
        let (i, j) = (index(a, *line)?, index(b, *line)?);
        leq[i][j] = true;
    }
    // reflexive-transitive closure
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                leq[i][j] |= leq[i][k] && leq[k][j];
            }
        }
    }

    let mut mul = vec![vec![usize::MAX; n]; n];
    for (p, q, r, line) in &mul_rows {
        let (i, j, k) = (index(p, *line)?, index(q, *line)?, index(r, *line)?);
        if mul[i][j] != usize::MAX {
            return Err(perr(*line, format!("duplicate mul entry for {p} {q}")));
        }
        mul[i][j] = k;
    }
    for i in 0..n {
        for j in 0..n {
            if mul[i][j] == usize::MAX {
                return Err(perr(
                    0,
                    format!(
                        "missing mul entry for {} {}; all {}^2 pairs are required",
                        labels[i], labels[j], n
                    ),
                ));
            }
        }
    }

    let unit_label = unit_label.ok_or_else(|| perr(0, "missing unit line"))?;
    let unit = index(&unit_label, 0)?;
    Ok(FiniteQuantale::new(name, labels, leq, mul, unit)?)
}

pub fn render_quantale(q: &FiniteQuantale) -> String {
    let mut out = String::new();
    out.push_str(&format!("quantale {}\n", q.name()));
    out.push_str(&format!("elements {}\n", q.labels().join(" ")));
    out.push_str(&format!("unit {}\n", q.label(q.unit())));
    // covers of the order
    let mut covers = Vec::new();
    for a in q.elements() {
        for b in q.elements() {
            if a == b || !q.leq(a, b) {
                continue;
            }
            let is_cover = q
                .elements()
                .all(|c| c == a || c == b || !(q.leq(a, c) && q.leq(c, b)));
            if is_cover {
                covers.push(format!("{}<{}", q.label(a), q.label(b)));
            }
        }
    }
    if !covers.is_empty() {
        out.push_str(&format!("order {}\n", covers.join(" ")));
    }
    for p in q.elements() {
        for r in q.elements() {
            out.push_str(&format!(
                "mul {} {} {}\n",
                q.label(p),
                q.label(r),
                q.label(q.mul(p, r))
            ));
        }
    }
    out
}

/// A parsed relation context.
pub struct ParsedContext {
    pub name: String,
    pub quantale: Arc<FiniteQuantale>,
    pub rel: QRelation,
}

fn parse_carrier(
    q: &Arc<FiniteQuantale>,
    toks: &[&str],
    line: usize,
) -> Result<(Vec<String>, Vec<Elem>), FileError> {
    let mut labels = Vec::new();
    let mut membs = Vec::new();
    for tok in toks {
        let (lbl, deg) = tok
            .split_once(':')
            .ok_or_else(|| perr(line, format!("expected <label>:<degree>, got {tok:?}")))?;
        let d = q
            .elem_by_label(deg)
            .ok_or_else(|| perr(line, format!("unknown degree {deg:?}")))?;
        labels.push(lbl.to_string());
        membs.push(d);
    }
    Ok((labels, membs))
}

/// Parses a relation context:
///
/// ```text
/// context <name> over <quantale-name>
/// source <lbl>:<deg> ...
/// target <lbl>:<deg> ...
/// rel <x> <y> <deg>        # missing entries default to bottom
/// ```
pub fn parse_context(
    text: &str,
    registry: &QuantaleRegistry,
) -> Result<ParsedContext, FileError> {
    let mut name = None;
    let mut quantale: Option<Arc<FiniteQuantale>> = None;
    let mut source: Option<QSubset> = None;
    let mut target: Option<QSubset> = None;
    let mut rels: Vec<(String, String, String, usize)> = Vec::new();

    for (line, toks) in body(text) {
        match toks[0] {
            "context" => {
                if toks.len() != 4 || toks[2] != "over" {
                    return Err(perr(line, "expected: context <name> over <quantale>"));
                }
                name = Some(toks[1].to_string());
                quantale = Some(registry.resolve(toks[3])?);
            }
            "source" | "target" => {
                let q = quantale
                    .as_ref()
                    .ok_or_else(|| perr(line, "context line must come first"))?;
                let (labels, membs) = parse_carrier(q, &toks[1..], line)?;
                let sub = QSubset::new(q.clone(), labels, membs)?;
                if toks[0] == "source" {
                    source = Some(sub);
                } else {
                    target = Some(sub);
                }
            }
            "rel" => {
                if toks.len() != 4 {
                    return Err(perr(line, "expected: rel <x> <y> <degree>"));
                }
                rels.push((
                    toks[1].to_string(),
                    toks[2].to_string(),
                    toks[3].to_string(),
                    line,
                ));
            }
            other => return Err(perr(line, format!("unknown directive {other:?}"))),
        }
    }

    let name = name.ok_or_else(|| perr(0, "missing context line"))?;
    let quantale = quantale.unwrap();
    let source = source.ok_or_else(|| perr(0, "missing source line"))?;
    let target = target.unwrap_or_else(|| source.clone());
    let mut entries = vec![vec![quantale.bottom(); target.len()]; source.len()];
    for (x, y, deg, line) in rels {
        let i = source
            .index_of(&x)
            .ok_or_else(|| perr(line, format!("unknown source label {x:?}")))?;
        let j = target
            .index_of(&y)
            .ok_or_else(|| perr(line, format!("unknown target label {y:?}")))?;
        let d = quantale
            .elem_by_label(&deg)
            .ok_or_else(|| perr(line, format!("unknown degree {deg:?}")))?;
        entries[i][j] = d;
    }
    let rel = QRelation::new(source, target, entries)?;
    Ok(ParsedContext {
        name,
        quantale,
        rel,
    })
}

fn render_carrier(q: &FiniteQuantale, sub: &QSubset) -> String {
    sub.labels()
        .iter()
        .enumerate()
        .map(|(i, l)| format!("{}:{}", l, q.label(sub.membership(i))))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn render_context(name: &str, rel: &QRelation) -> String {
    let q = rel.quantale();
    let mut out = String::new();
    out.push_str(&format!("context {} over {}\n", name, q.name()));
    out.push_str(&format!("source {}\n", render_carrier(q, rel.source())));
    out.push_str(&format!("target {}\n", render_carrier(q, rel.target())));
    for x in 0..rel.source().len() {
        for y in 0..rel.target().len() {
            let v = rel.entry(x, y);
            if v != q.bottom() {
                out.push_str(&format!(
                    "rel {} {} {}\n",
                    rel.source().label(x),
                    rel.target().label(y),
                    q.label(v)
                ));
            }
        }
    }
    out
}

/// Parses an ordered-set file: a context whose target, if present, must
/// equal the source; the relation is validated as a preorder.
pub fn parse_ordered(
    text: &str,
    registry: &QuantaleRegistry,
) -> Result<(String, QOrderedSet), FileError> {
    let ctx = parse_context(text, registry)?;
    if !ctx.rel.source().same_fuzzy_set(ctx.rel.target()) {
        return Err(perr(0, "ordered-set files need source = target"));
    }
    let ordered = make_ordered(ctx.rel.source().clone(), ctx.rel.entries().clone())?;
    Ok((ctx.name, ordered))
}

pub fn render_ordered(name: &str, x: &QOrderedSet) -> String {
    render_context(name, x.order())
}

pub fn load_quantale(path: &Path) -> Result<FiniteQuantale, FileError> {
    parse_quantale(&std::fs::read_to_string(path)?)
}

pub fn load_context(path: &Path, registry: &QuantaleRegistry) -> Result<ParsedContext, FileError> {
    parse_context(&std::fs::read_to_string(path)?, registry)
}

pub fn load_ordered(
    path: &Path,
    registry: &QuantaleRegistry,
) -> Result<(String, QOrderedSet), FileError> {
    parse_ordered(&std::fs::read_to_string(path)?, registry)
}

/// Loads a map file:
///
/// ```text
/// map <name> from <ord-file> to <ord-file>
/// send <x> <y>
/// ```
///
/// The ordered-set paths are resolved relative to the map file's directory.
pub fn load_map(
    path: &Path,
    registry: &QuantaleRegistry,
) -> Result<(String, QOrderMap), FileError> {
    let text = std::fs::read_to_string(path)?;
    let dir = path.parent().unwrap_or_else(|| Path::new("."));
    let mut header: Option<(String, QOrderedSet, QOrderedSet)> = None;
    let mut sends: Vec<(String, String, usize)> = Vec::new();
    for (line, toks) in body(&text) {
        match toks[0] {
            "map" => {
                if toks.len() != 6 || toks[2] != "from" || toks[4] != "to" {
                    return Err(perr(line, "expected: map <name> from <ord> to <ord>"));
                }
                let (_, src) = load_ordered(&dir.join(toks[3]), registry)?;
                let (_, tgt) = load_ordered(&dir.join(toks[5]), registry)?;
                header = Some((toks[1].to_string(), src, tgt));
            }
            "send" => {
                if toks.len() != 3 {
                    return Err(perr(line, "expected: send <x> <y>"));
                }
                sends.push((toks[1].to_string(), toks[2].to_string(), line));
            }
            other => return Err(perr(line, format!("unknown directive {other:?}"))),
        }
    }
    let (name, src, tgt) = header.ok_or_else(|| perr(0, "missing map line"))?;
    let mut assign = vec![usize::MAX; src.len()];
    for (x, y, line) in sends {
        let i = src
            .carrier()
            .index_of(&x)
            .ok_or_else(|| perr(line, format!("unknown source label {x:?}")))?;
        let j = tgt
            .carrier()
            .index_of(&y)
            .ok_or_else(|| perr(line, format!("unknown target label {y:?}")))?;
        assign[i] = j;
    }
    if let Some(i) = assign.iter().position(|&a| a == usize::MAX) {
        return Err(perr(
            0,
            format!("missing send line for {:?}", src.label(i)),
        ));
    }
    Ok((name, QOrderMap::new(src, tgt, assign)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantale::c3;

    const C3_FILE: &str = "\
# the three-chain
quantale c3file
elements bot e top
unit e
order bot<e e<top
mul bot bot bot
mul bot e bot
mul bot top bot
mul e bot bot
mul e e e
mul e top top
mul top bot bot
mul top e top
mul top top top
";

    #[test]
    fn quantale_file_round_trip() {
        let q = parse_quantale(C3_FILE).unwrap();
        assert_eq!(q.len(), 3);
        let builtin = c3();
        for p in q.elements() {
            for r in q.elements() {
                assert_eq!(q.mul(p, r), builtin.mul(p, r));
                assert_eq!(q.leq(p, r), builtin.leq(p, r));
            }
        }
        let rendered = render_quantale(&q);
        let back = parse_quantale(&rendered).unwrap();
        assert_eq!(back, q);
    }

    #[test]
    fn quantale_file_errors() {
        let missing = "quantale x\nelements a b\nunit b\nmul a a a\n";
        assert!(matches!(
            parse_quantale(missing),
            Err(FileError::Parse { .. })
        ));
        let unit_swapped = C3_FILE.replace("unit e", "unit top");
        assert!(matches!(
            parse_quantale(&unit_swapped),
            Err(FileError::Quantale(QuantaleError::Axiom { .. }))
        ));
    }

    #[test]
    fn context_file_round_trip() {
        let registry = QuantaleRegistry::new();
        let text = "\
context k over c3
source x:e y:top
target u:e
rel x u top
";
        let ctx = parse_context(text, &registry).unwrap();
        assert_eq!(ctx.name, "k");
        assert_eq!(ctx.rel.entry(0, 0), 2);
        assert_eq!(ctx.rel.entry(1, 0), 0, "missing entries default to bottom");
        let rendered = render_context(&ctx.name, &ctx.rel);
        let back = parse_context(&rendered, &registry).unwrap();
        assert_eq!(back.rel, ctx.rel);
    }

    #[test]
    fn ordered_file_validates_the_preorder() {
        let registry = QuantaleRegistry::new();
        let good = "\
context chain over bool2
source a:top b:top
rel a a top
rel b b top
rel a b top
";
        let (_, x) = parse_ordered(good, &registry).unwrap();
        assert!(x.underlying_leq(0, 1));
        let bad = "\
context broken over bool2
source a:top b:top
rel a b top
";
        assert!(matches!(
            parse_ordered(bad, &registry),
            Err(FileError::Order(OrderError::NotReflexive { .. }))
        ));
    }

    #[test]
    fn registry_prefers_loaded_quantales() {
        let mut registry = QuantaleRegistry::new();
        let q = parse_quantale(C3_FILE).unwrap();
        registry.insert(Arc::new(q));
        assert!(registry.resolve("c3file").is_ok());
        assert!(registry.resolve("lukasiewicz(2)").is_ok());
        assert!(matches!(
            registry.resolve("nosuch"),
            Err(FileError::UnknownQuantale(_))
        ));
    }
}
