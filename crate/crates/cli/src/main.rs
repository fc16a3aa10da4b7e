//! `qorder`: load quantale tables and fuzzy contexts, run the relational
//! calculus, enumerate powersets, check completeness and adjunctions, build
//! completions and concept lattices, and run the law-verification harness.
//!
//! Exit codes: 0 on success, 1 when `verify` finds a failing law (the report
//! is still written), 2 on usage, parse or validation errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use qorder_core::caps::Caps;
use qorder_core::completion::{
    completeness_report, cotensor_witnesses, sup_witnesses, tensor_witnesses,
};
use qorder_core::dot::{cover_relation, hasse_dot, iso_classes};
use qorder_core::files::{load_context, load_map, load_ordered, load_quantale, QuantaleRegistry};
use qorder_core::galois::{
    concept_lattice, find_adjoint, is_cauchy_complete, is_galois, macneille, AdjointSide,
    ConceptLattice, ConceptMode,
};
use qorder_core::presheaf::{copresheaves, presheaves, Presheaf};
use qorder_core::qord::enumerate_memberships;
use qorder_core::quantale::{builtin, FiniteQuantale, DEFAULT_VERIFY_SET};
use qorder_core::verify::{run as run_verify, VerifyConfig};
use qorder_core::{QOrderedSet, QRelation};

#[derive(Parser)]
#[command(name = "qorder", version, about = "quantale-valued preorders on fuzzy sets")]
struct Cli {
    /// Quantale files to register for `over <name>` resolution (repeatable).
    #[arg(long = "quantale-file", global = true, value_name = "FILE")]
    quantale_files: Vec<PathBuf>,
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Inspect and validate quantale tables.
    Quantale {
        #[command(subcommand)]
        cmd: QuantaleCmd,
    },
    /// Validate and combine fuzzy relations.
    Rel {
        #[command(subcommand)]
        cmd: RelCmd,
    },
    /// Check preordered fuzzy sets.
    Ord {
        #[command(subcommand)]
        cmd: OrdCmd,
    },
    /// Enumerate the powerset (or dual powerset) of an ordered file.
    Powerset {
        file: PathBuf,
        /// Enumerate potential upper subsets instead of lower ones.
        #[arg(long)]
        dual: bool,
        #[arg(long, group = "output")]
        list: bool,
        #[arg(long, group = "output")]
        count: bool,
        /// Print the Hasse diagram of the powerset order as DOT.
        #[arg(long, group = "output")]
        order_dot: bool,
    },
    /// Suprema, tensors and completeness.
    Complete {
        #[command(subcommand)]
        cmd: CompleteCmd,
    },
    /// Adjunctions between preordered fuzzy sets.
    Galois {
        #[command(subcommand)]
        cmd: GaloisCmd,
    },
    /// The concept lattice of a fuzzy context.
    Concepts {
        file: PathBuf,
        #[arg(long, value_enum)]
        mode: Mode,
        /// Write the concept order as a DOT file.
        #[arg(long, value_name = "OUT")]
        dot: Option<PathBuf>,
        /// Write the concepts and cover relation as a JSON file.
        #[arg(long = "json-out", value_name = "OUT")]
        json_out: Option<PathBuf>,
    },
    /// The completion of an ordered file through the bound operators.
    Macneille { file: PathBuf },
    /// Cauchy completeness via right-adjoint potential lower subsets.
    Cauchy { file: PathBuf },
    /// Run the registered law suite and write a report.
    Verify {
        /// Quantales to exercise: builtin names or files (repeatable).
        #[arg(long = "quantale", value_name = "NAME|FILE")]
        quantales: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 500)]
        samples: usize,
        /// Also write the text report to this path.
        #[arg(long, value_name = "PATH")]
        report: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum QuantaleCmd {
    /// Parse and validate, reporting the first violated axiom.
    Validate { which: String },
    /// Report integrality, divisibility, commutativity and idempotents.
    Classify { which: String },
    /// Print diagonal sets, all pairs or one.
    Dq {
        which: String,
        #[arg(long, num_args = 2, value_names = ["P", "Q"])]
        pair: Option<Vec<String>>,
    },
}

#[derive(Subcommand)]
enum RelCmd {
    Validate { file: PathBuf },
    /// Composition: the first relation after the second (f1 following f2).
    Compose { f1: PathBuf, f2: PathBuf },
    /// Left implication f1 under f2, or right implication of f1 into f2.
    Imp {
        #[arg(long, value_enum)]
        side: CliSide,
        f1: PathBuf,
        f2: PathBuf,
    },
}

#[derive(Subcommand)]
enum OrdCmd {
    Check { file: PathBuf },
    Underlying {
        file: PathBuf,
        #[arg(long)]
        dot: bool,
    },
    Coreflect {
        file: PathBuf,
        /// Comma-separated degrees to keep, e.g. `e,bot`.
        #[arg(long)]
        keep: String,
    },
    EnumerateMemberships { file: PathBuf },
}

#[derive(Subcommand)]
enum CompleteCmd {
    Report { file: PathBuf },
    Sup {
        file: PathBuf,
        /// Context file with a single target label carrying the presheaf.
        #[arg(long)]
        presheaf: PathBuf,
    },
    Tensor {
        file: PathBuf,
        #[arg(long)]
        u: String,
        #[arg(long)]
        x: String,
        #[arg(long)]
        q: String,
    },
}

#[derive(Subcommand)]
enum GaloisCmd {
    Check {
        #[arg(long)]
        f: PathBuf,
        #[arg(long)]
        g: PathBuf,
    },
    Find {
        #[arg(long)]
        map: PathBuf,
        #[arg(long, value_enum)]
        side: CliSide,
    },
}

#[derive(Copy, Clone, ValueEnum)]
enum CliSide {
    Left,
    Right,
}

#[derive(Copy, Clone, ValueEnum)]
enum Mode {
    Fca,
    Rst,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Builtin name or path to a quantale file.
fn quantale_by_name_or_file(which: &str) -> Result<FiniteQuantale, String> {
    if Path::new(which).exists() {
        load_quantale(Path::new(which)).map_err(|e| e.to_string())
    } else {
        builtin(which).map_err(|e| e.to_string())
    }
}

fn registry_from(files: &[PathBuf]) -> Result<QuantaleRegistry, String> {
    let mut registry = QuantaleRegistry::new();
    for f in files {
        let q = load_quantale(f).map_err(|e| format!("{}: {e}", f.display()))?;
        registry.insert(Arc::new(q));
    }
    Ok(registry)
}

fn matrix_json(rel: &QRelation) -> serde_json::Value {
    let q = rel.quantale();
    let mut rows = serde_json::Map::new();
    for x in 0..rel.source().len() {
        let mut row = serde_json::Map::new();
        for y in 0..rel.target().len() {
            row.insert(
                rel.target().label(y).to_string(),
                json!(q.label(rel.entry(x, y))),
            );
        }
        rows.insert(rel.source().label(x).to_string(), row.into());
    }
    rows.into()
}

fn presheaf_json(q: &FiniteQuantale, labels: &[String], p: &Presheaf) -> serde_json::Value {
    let mut map = serde_json::Map::new();
    for (i, l) in labels.iter().enumerate() {
        map.insert(l.clone(), json!(q.label(p.values[i])));
    }
    map.into()
}

fn concepts_json(x: &QOrderedSet, y: &QOrderedSet, lattice: &ConceptLattice) -> serde_json::Value {
    let q = x.quantale();
    let classes = iso_classes(&lattice.ordered);
    let covers: Vec<serde_json::Value> = cover_relation(&lattice.ordered, &classes)
        .into_iter()
        .map(|(a, b)| json!([classes[a][0], classes[b][0]]))
        .collect();
    let concepts: Vec<serde_json::Value> = lattice
        .concepts
        .iter()
        .map(|c| {
            let extent = presheaf_json(q, x.carrier().labels(), &c.extent);
            let intent = match (&c.intent_upper, &c.intent_lower) {
                (Some(up), _) => {
                    let mut m = serde_json::Map::new();
                    for (i, l) in y.carrier().labels().iter().enumerate() {
                        m.insert(l.clone(), json!(q.label(up.values[i])));
                    }
                    serde_json::Value::from(m)
                }
                (_, Some(lo)) => presheaf_json(q, y.carrier().labels(), lo),
                _ => json!(null),
            };
            json!({
                "degree": q.label(c.degree),
                "extent": extent,
                "intent": intent,
            })
        })
        .collect();
    json!({
        "mode": match lattice.mode { ConceptMode::Fca => "fca", ConceptMode::Rst => "rst" },
        "concepts": concepts,
        "covers": covers,
    })
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let registry = registry_from(&cli.quantale_files)?;
    let caps = Caps::from_env();
    let fail = |e: &dyn std::fmt::Display| e.to_string();

    match cli.cmd {
        Cmd::Quantale { cmd } => match cmd {
            QuantaleCmd::Validate { which } => {
                let q = quantale_by_name_or_file(&which)?;
                if cli.json {
                    println!(
                        "{}",
                        json!({"name": q.name(), "elements": q.labels(), "valid": true})
                    );
                } else {
                    println!("ok: quantale {} with {} elements", q.name(), q.len());
                }
            }
            QuantaleCmd::Classify { which } => {
                let q = quantale_by_name_or_file(&which)?;
                let c = q.classify();
                let idem: Vec<&str> = c
                    .idempotents_above_unit
                    .iter()
                    .map(|&e| q.label(e))
                    .collect();
                if cli.json {
                    println!(
                        "{}",
                        json!({
                            "name": q.name(),
                            "integral": c.integral,
                            "divisible": c.divisible,
                            "commutative": c.commutative,
                            "idempotents_above_unit": idem,
                        })
                    );
                } else {
                    println!("quantale {}", q.name());
                    println!("integral: {}", c.integral);
                    println!("divisible: {}", c.divisible);
                    println!("commutative: {}", c.commutative);
                    println!("idempotents above unit: {{{}}}", idem.join(","));
                }
            }
            QuantaleCmd::Dq { which, pair } => {
                let q = quantale_by_name_or_file(&which)?;
                let pairs: Vec<(usize, usize)> = match pair {
                    Some(pq) => {
                        let p = q
                            .elem_by_label(&pq[0])
                            .ok_or_else(|| format!("unknown element {:?}", pq[0]))?;
                        let r = q
                            .elem_by_label(&pq[1])
                            .ok_or_else(|| format!("unknown element {:?}", pq[1]))?;
                        vec![(p, r)]
                    }
                    None => q
                        .elements()
                        .flat_map(|p| q.elements().map(move |r| (p, r)))
                        .collect(),
                };
                if cli.json {
                    let entries: Vec<serde_json::Value> = pairs
                        .iter()
                        .map(|&(p, r)| {
                            let members: Vec<&str> =
                                q.diagonal(p, r).into_iter().map(|u| q.label(u)).collect();
                            json!({"p": q.label(p), "q": q.label(r), "members": members})
                        })
                        .collect();
                    println!("{}", json!({"name": q.name(), "diagonals": entries}));
                } else {
                    for (p, r) in pairs {
                        let members: Vec<&str> =
                            q.diagonal(p, r).into_iter().map(|u| q.label(u)).collect();
                        println!(
                            "D({},{}) = {{{}}}",
                            q.label(p),
                            q.label(r),
                            members.join(",")
                        );
                    }
                }
            }
        },
        Cmd::Rel { cmd } => match cmd {
            RelCmd::Validate { file } => {
                let ctx = load_context(&file, &registry).map_err(|e| fail(&e))?;
                if cli.json {
                    println!(
                        "{}",
                        json!({
                            "name": ctx.name,
                            "quantale": ctx.quantale.name(),
                            "source": ctx.rel.source().labels(),
                            "target": ctx.rel.target().labels(),
                            "valid": true,
                            "matrix": matrix_json(&ctx.rel),
                        })
                    );
                } else {
                    println!(
                        "ok: relation {} ({} -> {} over {})",
                        ctx.name,
                        ctx.rel.source().len(),
                        ctx.rel.target().len(),
                        ctx.quantale.name()
                    );
                }
            }
            RelCmd::Compose { f1, f2 } => {
                let psi = load_context(&f1, &registry).map_err(|e| fail(&e))?;
                let phi = load_context(&f2, &registry).map_err(|e| fail(&e))?;
                let out = psi.rel.compose(&phi.rel).map_err(|e| fail(&e))?;
                let name = format!("{}.{}", psi.name, phi.name);
                if cli.json {
                    println!("{}", json!({"name": name, "matrix": matrix_json(&out)}));
                } else {
                    print!("{}", qorder_core::files::render_context(&name, &out));
                }
            }
            RelCmd::Imp { side, f1, f2 } => {
                let a = load_context(&f1, &registry).map_err(|e| fail(&e))?;
                let b = load_context(&f2, &registry).map_err(|e| fail(&e))?;
                let (name, out) = match side {
                    CliSide::Left => (
                        format!("{}_under_{}", a.name, b.name),
                        QRelation::imp_left(&a.rel, &b.rel).map_err(|e| fail(&e))?,
                    ),
                    CliSide::Right => (
                        format!("{}_into_{}", a.name, b.name),
                        QRelation::imp_right(&a.rel, &b.rel).map_err(|e| fail(&e))?,
                    ),
                };
                if cli.json {
                    println!("{}", json!({"name": name, "matrix": matrix_json(&out)}));
                } else {
                    print!("{}", qorder_core::files::render_context(&name, &out));
                }
            }
        },
        Cmd::Ord { cmd } => match cmd {
            OrdCmd::Check { file } => {
                let (name, x) = load_ordered(&file, &registry).map_err(|e| fail(&e))?;
                if cli.json {
                    println!(
                        "{}",
                        json!({
                            "name": name,
                            "elements": x.carrier().labels(),
                            "valid": true,
                            "separated": x.is_separated(),
                        })
                    );
                } else {
                    println!(
                        "ok: preorder {} on {} elements, separated: {}",
                        name,
                        x.len(),
                        x.is_separated()
                    );
                }
            }
            OrdCmd::Underlying { file, dot } => {
                let (name, x) = load_ordered(&file, &registry).map_err(|e| fail(&e))?;
                if dot {
                    print!("{}", hasse_dot(&x, &name));
                } else if cli.json {
                    let pairs: Vec<serde_json::Value> = (0..x.len())
                        .flat_map(|i| (0..x.len()).map(move |j| (i, j)))
                        .filter(|&(i, j)| x.underlying_leq(i, j))
                        .map(|(i, j)| json!([x.label(i), x.label(j)]))
                        .collect();
                    println!("{}", json!({"name": name, "leq": pairs}));
                } else {
                    for i in 0..x.len() {
                        for j in 0..x.len() {
                            if i != j && x.underlying_leq(i, j) {
                                println!("{} <= {}", x.label(i), x.label(j));
                            }
                        }
                    }
                }
            }
            OrdCmd::Coreflect { file, keep } => {
                let (name, x) = load_ordered(&file, &registry).map_err(|e| fail(&e))?;
                let q = x.quantale().clone();
                let mut degrees = Vec::new();
                for part in keep.split(',') {
                    degrees.push(
                        q.elem_by_label(part.trim())
                            .ok_or_else(|| format!("unknown degree {part:?}"))?,
                    );
                }
                let out = x.coreflect(&degrees);
                let out_name = format!("{name}_coreflect");
                if cli.json {
                    println!(
                        "{}",
                        json!({"name": out_name, "elements": out.carrier().labels()})
                    );
                } else {
                    print!("{}", qorder_core::files::render_ordered(&out_name, &out));
                }
            }
            OrdCmd::EnumerateMemberships { file } => {
                let (name, x) = load_ordered(&file, &registry).map_err(|e| fail(&e))?;
                let q = x.quantale().clone();
                let found = enumerate_memberships(
                    &q,
                    x.carrier().labels(),
                    x.order().entries(),
                    &caps,
                )
                .map_err(|e| fail(&e))?;
                if cli.json {
                    let maps: Vec<serde_json::Value> = found
                        .iter()
                        .map(|m| {
                            let mut obj = serde_json::Map::new();
                            for (i, l) in x.carrier().labels().iter().enumerate() {
                                obj.insert(l.clone(), json!(q.label(m[i])));
                            }
                            obj.into()
                        })
                        .collect();
                    println!("{}", json!({"name": name, "memberships": maps}));
                } else {
                    for m in &found {
                        let line: Vec<String> = x
                            .carrier()
                            .labels()
                            .iter()
                            .enumerate()
                            .map(|(i, l)| format!("{}:{}", l, q.label(m[i])))
                            .collect();
                        println!("{}", line.join(" "));
                    }
                    println!("total: {}", found.len());
                }
            }
        },
        Cmd::Powerset {
            file,
            dual,
            list,
            count,
            order_dot,
        } => {
            let (name, x) = load_ordered(&file, &registry).map_err(|e| fail(&e))?;
            let ps = if dual {
                copresheaves(&x, &caps).map_err(|e| fail(&e))?
            } else {
                presheaves(&x, &caps).map_err(|e| fail(&e))?
            };
            let tag = if dual { "dual powerset" } else { "powerset" };
            if order_dot {
                print!("{}", hasse_dot(ps.ordered(), &format!("{tag} of {name}")));
            } else if count && !list {
                if cli.json {
                    println!("{}", json!({"name": name, "count": ps.len()}));
                } else {
                    println!("{}", ps.len());
                }
            } else if cli.json {
                println!(
                    "{}",
                    json!({
                        "name": name,
                        "count": ps.len(),
                        "elements": ps.ordered().carrier().labels(),
                    })
                );
            } else {
                for l in ps.ordered().carrier().labels() {
                    println!("{l}");
                }
                println!("total: {}", ps.len());
            }
        }
        Cmd::Complete { cmd } => match cmd {
            CompleteCmd::Report { file } => {
                let (name, x) = load_ordered(&file, &registry).map_err(|e| fail(&e))?;
                let r = completeness_report(&x, &caps).map_err(|e| fail(&e))?;
                if cli.json {
                    println!(
                        "{}",
                        json!({
                            "name": name,
                            "tensored": r.tensored,
                            "cotensored": r.cotensored,
                            "order_complete": r.order_complete,
                            "complete": r.complete,
                        })
                    );
                } else {
                    println!("tensored: {}", r.tensored);
                    println!("cotensored: {}", r.cotensored);
                    println!("order-complete: {}", r.order_complete);
                    println!("complete: {}", r.complete);
                    if let Some(mu) = &r.sup_failure {
                        println!(
                            "first presheaf without a supremum: {}",
                            mu.canonical_label(x.quantale())
                        );
                    }
                }
            }
            CompleteCmd::Sup { file, presheaf } => {
                let (_, x) = load_ordered(&file, &registry).map_err(|e| fail(&e))?;
                let ctx = load_context(&presheaf, &registry).map_err(|e| fail(&e))?;
                if ctx.rel.target().len() != 1 {
                    return Err("presheaf context needs a single target label".into());
                }
                if !ctx.rel.source().same_fuzzy_set(x.carrier()) {
                    return Err("presheaf context source must match the ordered carrier".into());
                }
                let mu = Presheaf::new(
                    &x,
                    ctx.rel.target().membership(0),
                    ctx.rel.entries().iter().map(|row| row[0]).collect(),
                )
                .map_err(|e| fail(&e))?;
                let witnesses = sup_witnesses(&x, &mu);
                let labels: Vec<&str> = witnesses.iter().map(|&i| x.label(i)).collect();
                if cli.json {
                    println!("{}", json!({"witnesses": labels}));
                } else if labels.is_empty() {
                    println!("no supremum");
                } else {
                    println!("sup = {{{}}}", labels.join(","));
                }
            }
            CompleteCmd::Tensor { file, u, x: xl, q: qd } => {
                let (_, x) = load_ordered(&file, &registry).map_err(|e| fail(&e))?;
                let quant = x.quantale().clone();
                let ue = quant
                    .elem_by_label(&u)
                    .ok_or_else(|| format!("unknown degree {u:?}"))?;
                let qe = quant
                    .elem_by_label(&qd)
                    .ok_or_else(|| format!("unknown degree {qd:?}"))?;
                let xi = x
                    .carrier()
                    .index_of(&xl)
                    .ok_or_else(|| format!("unknown label {xl:?}"))?;
                let witnesses = tensor_witnesses(&x, ue, xi, qe).map_err(|e| fail(&e))?;
                let labels: Vec<&str> = witnesses.iter().map(|&i| x.label(i)).collect();
                let cot = cotensor_witnesses(&x, ue, xi, qe).ok().map(|ws| {
                    ws.iter().map(|&i| x.label(i).to_string()).collect::<Vec<_>>()
                });
                if cli.json {
                    println!("{}", json!({"tensor": labels, "cotensor": cot}));
                } else if labels.is_empty() {
                    println!("no tensor");
                } else {
                    println!("tensor = {{{}}}", labels.join(","));
                }
            }
        },
        Cmd::Galois { cmd } => match cmd {
            GaloisCmd::Check { f, g } => {
                let (_, fm) = load_map(&f, &registry).map_err(|e| fail(&e))?;
                let (_, gm) = load_map(&g, &registry).map_err(|e| fail(&e))?;
                let adjoint = is_galois(&fm, &gm).map_err(|e| fail(&e))?;
                if cli.json {
                    println!("{}", json!({"adjoint": adjoint}));
                } else {
                    println!("adjoint: {adjoint}");
                }
            }
            GaloisCmd::Find { map, side } => {
                let (_, fm) = load_map(&map, &registry).map_err(|e| fail(&e))?;
                let side = match side {
                    CliSide::Left => AdjointSide::Left,
                    CliSide::Right => AdjointSide::Right,
                };
                let found = find_adjoint(&fm, side, &caps).map_err(|e| fail(&e))?;
                if cli.json {
                    let maps: Vec<serde_json::Value> = found
                        .iter()
                        .map(|m| {
                            let sends: Vec<serde_json::Value> = (0..m.source().len())
                                .map(|i| {
                                    json!([m.source().label(i), m.target().label(m.apply(i))])
                                })
                                .collect();
                            json!(sends)
                        })
                        .collect();
                    println!("{}", json!({"count": found.len(), "witnesses": maps}));
                } else if found.is_empty() {
                    println!("no adjoint");
                } else {
                    for (k, m) in found.iter().enumerate() {
                        println!("witness {k}:");
                        for i in 0..m.source().len() {
                            println!("  send {} {}", m.source().label(i), m.target().label(m.apply(i)));
                        }
                    }
                }
            }
        },
        Cmd::Concepts {
            file,
            mode,
            dot,
            json_out,
        } => {
            let ctx = load_context(&file, &registry).map_err(|e| fail(&e))?;
            let x = QOrderedSet::discrete(ctx.rel.source().clone());
            let y = QOrderedSet::discrete(ctx.rel.target().clone());
            let mode = match mode {
                Mode::Fca => ConceptMode::Fca,
                Mode::Rst => ConceptMode::Rst,
            };
            let lattice = concept_lattice(&ctx.rel, &x, &y, mode, &caps).map_err(|e| fail(&e))?;
            let payload = concepts_json(&x, &y, &lattice);
            if let Some(path) = &dot {
                std::fs::write(path, hasse_dot(&lattice.ordered, &ctx.name))
                    .map_err(|e| fail(&e))?;
            }
            if let Some(path) = &json_out {
                std::fs::write(path, format!("{payload:#}")).map_err(|e| fail(&e))?;
            }
            if cli.json {
                println!("{payload}");
            } else {
                let q = x.quantale();
                println!("{} concepts", lattice.concepts.len());
                for c in &lattice.concepts {
                    let extent: Vec<String> = x
                        .carrier()
                        .labels()
                        .iter()
                        .enumerate()
                        .map(|(i, l)| format!("{}:{}", l, q.label(c.extent.values[i])))
                        .collect();
                    println!("degree {} extent [{}]", q.label(c.degree), extent.join(" "));
                }
            }
        }
        Cmd::Macneille { file } => {
            let (name, x) = load_ordered(&file, &registry).map_err(|e| fail(&e))?;
            let mac = macneille(&x, &caps).map_err(|e| fail(&e))?;
            let out_name = format!("{name}_completion");
            if cli.json {
                println!(
                    "{}",
                    json!({
                        "name": out_name,
                        "size": mac.fixed.ordered.len(),
                        "elements": mac.fixed.ordered.carrier().labels(),
                    })
                );
            } else {
                print!(
                    "{}",
                    qorder_core::files::render_ordered(&out_name, &mac.fixed.ordered)
                );
            }
        }
        Cmd::Cauchy { file } => {
            let (name, x) = load_ordered(&file, &registry).map_err(|e| fail(&e))?;
            let complete = is_cauchy_complete(&x, &caps).map_err(|e| fail(&e))?;
            if cli.json {
                println!("{}", json!({"name": name, "cauchy_complete": complete}));
            } else {
                println!("cauchy-complete: {complete}");
            }
        }
        Cmd::Verify {
            quantales,
            seed,
            samples,
            report,
        } => {
            let names: Vec<String> = if quantales.is_empty() {
                DEFAULT_VERIFY_SET.iter().map(|s| s.to_string()).collect()
            } else {
                quantales
            };
            let mut qs = Vec::new();
            for n in &names {
                qs.push(Arc::new(quantale_by_name_or_file(n)?));
            }
            let config = VerifyConfig {
                quantales: qs,
                seed,
                samples,
                caps,
            };
            let rep = run_verify(&config);
            let text = rep.render_text();
            if let Some(path) = &report {
                std::fs::write(path, &text).map_err(|e| fail(&e))?;
            }
            if cli.json {
                println!("{}", rep.render_json());
            } else {
                print!("{text}");
            }
            if !rep.all_pass() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
