use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use slodowy::branes::BraneDiagram;
use slodowy::closedsets::{build_gamma, gamma_set, invertibility_criterion, is_closed, is_invertible, symmetric_part};
use slodowy::fixedpoints::{fixed_points_bruteforce, fixed_points_theorem_blocks, weyl_decomposition, FixedPointSet};
use slodowy::mirror::{mirror_report_for, BraneDescriptor};
use slodowy::quivers::{self, QuiverDatum};
use slodowy::verify::{verify_group, VerifyOptions};
use slodowy::{CartanType, Config, Error, RootSystem, Simple, WeylGroup};

#[derive(Parser)]
#[command(name = "slodowy", version, about = "Root systems, Weyl groups, fixed points, brane diagrams and quivers")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Brute,
    Theorem,
    Both,
}

#[derive(Subcommand)]
enum Cmd {
    /// List the roots of a root system.
    Roots { ty: String },
    /// List the Weyl group elements with reduced words.
    Weyl { ty: String },
    /// Closedness of Γ(I,J,K) and the splitting witness.
    ClosedCheck {
        ty: String,
        /// `I;J;K`, each a 1-based comma list, `all` or `-`.
        #[arg(long, allow_hyphen_values = true)]
        gamma: String,
    },
    /// Invertibility of Γ(I,K) = Γ(I,Π,K).
    Invertible {
        ty: String,
        #[arg(long = "I", allow_hyphen_values = true)]
        i: String,
        #[arg(long = "K", allow_hyphen_values = true)]
        k: String,
    },
    /// Torus fixed points for the pair (L, Γ(I,J,K)).
    FixedPoints {
        ty: String,
        #[arg(long = "L", allow_hyphen_values = true)]
        l: String,
        #[arg(long = "I", allow_hyphen_values = true)]
        i: String,
        #[arg(long = "J", default_value = "all", allow_hyphen_values = true)]
        j: String,
        #[arg(long = "K", default_value = "all", allow_hyphen_values = true)]
        k: String,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Decomposition of W indexed by L = L1 ⊔ L2.
    DecomposeWeyl {
        ty: String,
        #[arg(long = "L", allow_hyphen_values = true)]
        l: String,
    },
    /// Fixed-point counts of a brane pair and of its mirror pair.
    MirrorReport {
        ty: String,
        /// Two descriptors such as `slice:1` and `parabolic:2`.
        #[arg(long, num_args = 2, value_names = ["D1", "D2"], allow_hyphen_values = true)]
        pair: Vec<String>,
    },
    /// Brane diagram operations.
    Bow {
        #[command(subcommand)]
        op: BowOp,
    },
    /// Quiver gauge theory data.
    Quiver {
        #[command(subcommand)]
        op: QuiverOp,
    },
    /// Run the invariant suite for one type, or `all` types up to `--max-rank`.
    VerifyAll {
        ty: String,
        #[arg(long, default_value_t = 3)]
        max_rank: usize,
        /// Skip the theorem sweep for groups larger than this.
        #[arg(long, default_value_t = VerifyOptions::default().max_theorem_order)]
        max_theorem_order: usize,
    },
}

#[derive(Subcommand)]
enum BowOp {
    /// Hanany-Witten move on branes `pos` and `pos + 1` (0-based).
    Hw {
        diagram: String,
        #[arg(long)]
        pos: usize,
    },
    /// Move every D5 to the right of every NS5.
    Normalize { diagram: String },
    /// Swap D5 and NS5.
    Mirror { diagram: String },
    /// Split a separated diagram; `--at` picks a gap explicitly.
    Split {
        diagram: String,
        #[arg(long)]
        at: Option<usize>,
    },
}

#[derive(Subcommand)]
enum QuiverOp {
    /// Linear quiver from a strictly decreasing vector such as `4,3,2,1`.
    Linear { v: String },
    /// Star-shaped quiver of a composition; `--full` adds the tails.
    Star {
        parts: String,
        #[arg(long)]
        full: bool,
    },
    /// Intersect two linear quivers at framed vertices (0-based).
    Intersect { left: String, at: usize, right: String, at_right: usize },
    /// Higgs and Coulomb dimensions of a linear or star-shaped quiver.
    Dims {
        #[arg(value_parser = ["linear", "star", "full-star"])]
        kind: String,
        shape: String,
    },
    /// Coulomb dimension of the star quiver against n² + n.
    Crosscheck { parts: String },
    /// The 0/1 character of a composition.
    Psi { parts: String },
}

/// A run that produced output but whose internal cross-check failed.
struct Outcome {
    value: Value,
    ok: bool,
}

impl Outcome {
    fn ok(value: impl Serialize) -> Result<Outcome, Error> {
        Ok(Outcome { value: to_value(value), ok: true })
    }
}

fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).expect("serializable output")
}

fn group(label: &str) -> Result<WeylGroup, Error> {
    let sys = RootSystem::build(label, &Config::from_env())?;
    Ok(WeylGroup::new(sys))
}

fn parse_triple(text: &str, rank: usize) -> Result<(Simple, Simple, Simple), Error> {
    let parts: Vec<&str> = text.split(';').collect();
    if parts.len() != 3 {
        return Err(Error::SubsetSyntax(text.to_string()));
    }
    Ok((Simple::parse(parts[0], rank)?, Simple::parse(parts[1], rank)?, Simple::parse(parts[2], rank)?))
}

fn fixed_point_json(w: &WeylGroup, set: &FixedPointSet) -> Value {
    json!({ "cardinality": set.len(), "members": set.words(w) })
}

fn run(cmd: Cmd) -> Result<Outcome, Error> {
    match cmd {
        Cmd::Roots { ty } => {
            let sys = RootSystem::build(&ty, &Config::from_env())?;
            let roots: Vec<Value> = (0..sys.len())
                .map(|r| json!({ "id": r, "root": sys.root(r), "height": sys.height(r), "positive": sys.is_positive(r) }))
                .collect();
            Outcome::ok(json!({ "type": sys.label(), "rank": sys.rank(), "count": sys.len(), "cartan": sys.cartan_matrix(), "roots": roots }))
        }
        Cmd::Weyl { ty } => {
            let w = group(&ty)?;
            let elems: Vec<Value> =
                (0..w.order()).map(|x| json!({ "id": x, "length": w.length(x), "word": w.word_string(x) })).collect();
            Outcome::ok(json!({ "type": w.root_system().label(), "order": w.order(), "elements": elems }))
        }
        Cmd::ClosedCheck { ty, gamma } => {
            let sys = RootSystem::build(&ty, &Config::from_env())?;
            let (i, j, k) = parse_triple(&gamma, sys.rank())?;
            let triple = build_gamma(&sys, i, j, k)?.with_witness(&sys)?;
            let closed = is_closed(&sys, &triple.gamma)?;
            let agree = closed == triple.witness.is_some();
            let mut v = to_value(&triple);
            v["type"] = json!(sys.label());
            v["size"] = json!(triple.gamma.len());
            v["closed"] = json!(closed);
            if closed {
                v["symmetric_part_size"] = json!(symmetric_part(&sys, &triple.gamma).len());
            }
            v["criterion_agrees"] = json!(agree);
            Ok(Outcome { value: v, ok: agree })
        }
        Cmd::Invertible { ty, i, k } => {
            let sys = RootSystem::build(&ty, &Config::from_env())?;
            let (i, k) = (Simple::parse(&i, sys.rank())?, Simple::parse(&k, sys.rank())?);
            let gamma = gamma_set(&sys, i, Simple::all(sys.rank()), k);
            let closed = is_closed(&sys, &gamma)?;
            let criterion = invertibility_criterion(&sys, i, k);
            let invertible = if closed { Some(is_invertible(&sys, &gamma)?) } else { None };
            let ok = invertible.is_none_or(|x| x == criterion);
            Ok(Outcome {
                value: json!({ "type": sys.label(), "I": i, "K": k, "closed": closed, "invertible": invertible, "criterion": criterion }),
                ok,
            })
        }
        Cmd::FixedPoints { ty, l, i, j, k, method } => {
            let w = group(&ty)?;
            let sys = w.root_system();
            let r = sys.rank();
            let (l, i, j, k) = (Simple::parse(&l, r)?, Simple::parse(&i, r)?, Simple::parse(&j, r)?, Simple::parse(&k, r)?);
            build_gamma(sys, i, j, k)?;
            let mut v = json!({ "type": sys.label(), "L": l, "I": i, "J": j, "K": k, "method": method_name(method) });
            let mut ok = true;
            let brute = match method {
                Method::Theorem => None,
                _ => Some(fixed_points_bruteforce(&w, l, &gamma_set(sys, i, j, k))?),
            };
            let theorem = match method {
                Method::Brute => None,
                _ => Some(fixed_points_theorem_blocks(&w, l, i, j, k)?),
            };
            let primary = theorem.as_ref().map(|t| &t.0).or(brute.as_ref()).expect("one method runs");
            v["cardinality"] = json!(primary.len());
            v["members"] = json!(primary.words(&w));
            if let Some((_, blocks)) = &theorem {
                let blocks: Vec<Value> = blocks
                    .iter()
                    .filter(|b| !b.members.is_empty())
                    .map(|b| json!({ "L1": b.l1, "L2": b.l2, "L3": b.l3, "size": b.members.len() }))
                    .collect();
                v["blocks"] = json!(blocks);
            }
            if let (Some(b), Some((t, _))) = (&brute, &theorem) {
                ok = b.reps() == t.reps();
                v["brute"] = fixed_point_json(&w, b);
                v["match"] = json!(ok);
            }
            Ok(Outcome { value: v, ok })
        }
        Cmd::DecomposeWeyl { ty, l } => {
            let w = group(&ty)?;
            let l = Simple::parse(&l, w.rank())?;
            let blocks = weyl_decomposition(&w, l)?;
            let total: usize = blocks.iter().map(|b| b.members.len()).sum();
            let rows: Vec<Value> = blocks
                .iter()
                .map(|b| {
                    let words: Vec<String> = b.members.iter().map(|&x| w.word_string(x)).collect();
                    json!({ "L1": b.l1, "L2": b.l2, "size": b.members.len(), "members": words })
                })
                .collect();
            Ok(Outcome {
                value: json!({ "type": w.root_system().label(), "L": l, "order": w.order(), "total": total, "blocks": rows }),
                ok: total == w.order(),
            })
        }
        Cmd::MirrorReport { ty, pair } => {
            let w = group(&ty)?;
            let d1 = BraneDescriptor::parse(&pair[0], w.rank())?;
            let d2 = BraneDescriptor::parse(&pair[1], w.rank())?;
            let mut v = to_value(mirror_report_for(&w, d1, d2, &Config::from_env())?);
            v["type"] = json!(w.root_system().label());
            Ok(Outcome { value: v, ok: true })
        }
        Cmd::Bow { op } => run_bow(op),
        Cmd::Quiver { op } => run_quiver(op),
        Cmd::VerifyAll { ty, max_rank, max_theorem_order } => verify_all(&ty, max_rank, VerifyOptions { max_theorem_order }),
    }
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Brute => "brute",
        Method::Theorem => "theorem",
        Method::Both => "both",
    }
}

fn diagram_json(d: &BraneDiagram) -> Value {
    let branes: Vec<String> = d.branes().iter().map(|b| format!("{b:?}")).collect();
    json!({ "diagram": d.to_string(), "branes": branes, "gaps": d.gaps() })
}

fn run_bow(op: BowOp) -> Result<Outcome, Error> {
    match op {
        BowOp::Hw { diagram, pos } => {
            let d = BraneDiagram::parse(&diagram)?;
            let out = d.hw_move(pos)?;
            Outcome::ok(json!({ "input": d.to_string(), "pos": pos, "output": diagram_json(&out) }))
        }
        BowOp::Normalize { diagram } => {
            let d = BraneDiagram::parse(&diagram)?;
            let out = d.normalize_separated()?;
            let (dc, nc) = out.counts();
            Outcome::ok(json!({ "input": d.to_string(), "output": diagram_json(&out), "d5": dc, "ns5": nc }))
        }
        BowOp::Mirror { diagram } => {
            let d = BraneDiagram::parse(&diagram)?;
            Outcome::ok(json!({ "input": d.to_string(), "output": diagram_json(&d.mirror_dual()) }))
        }
        BowOp::Split { diagram, at } => {
            let d = BraneDiagram::parse(&diagram)?;
            let (minus, plus) = match at {
                Some(k) => d.split_at(k)?,
                None => d.split_separated()?,
            };
            Outcome::ok(json!({ "input": d.to_string(), "left": minus, "right": plus }))
        }
    }
}

fn quiver_json(q: &QuiverDatum) -> Value {
    json!({ "quiver": q, "higgs": q.higgs_dim(), "coulomb": q.coulomb_dim() })
}

fn run_quiver(op: QuiverOp) -> Result<Outcome, Error> {
    match op {
        QuiverOp::Linear { v } => Outcome::ok(quiver_json(&quivers::linear_quiver(&quivers::parse_composition(&v)?)?)),
        QuiverOp::Star { parts, full } => {
            let p = quivers::parse_composition(&parts)?;
            let q = if full { quivers::full_star_quiver(&p)? } else { quivers::star_quiver(&p)? };
            Outcome::ok(quiver_json(&q))
        }
        QuiverOp::Intersect { left, at, right, at_right } => {
            let a = quivers::linear_quiver(&quivers::parse_composition(&left)?)?;
            let b = quivers::linear_quiver(&quivers::parse_composition(&right)?)?;
            Outcome::ok(quiver_json(&quivers::intersect(&a, at, &b, at_right)?))
        }
        QuiverOp::Dims { kind, shape } => {
            let p = quivers::parse_composition(&shape)?;
            let q = match kind.as_str() {
                "linear" => quivers::linear_quiver(&p)?,
                "star" => quivers::star_quiver(&p)?,
                _ => quivers::full_star_quiver(&p)?,
            };
            Outcome::ok(json!({ "higgs": q.higgs_dim(), "coulomb": q.coulomb_dim() }))
        }
        QuiverOp::Crosscheck { parts } => {
            let c = quivers::coulomb_crosscheck(&quivers::parse_composition(&parts)?)?;
            let ok = c.ok;
            Ok(Outcome { value: to_value(c), ok })
        }
        QuiverOp::Psi { parts } => {
            let p = quivers::parse_composition(&parts)?;
            Outcome::ok(json!({ "parts": p, "psi": quivers::psi_character(&p)? }))
        }
    }
}

fn all_types(max_rank: usize) -> Vec<CartanType> {
    let mut out = Vec::new();
    for r in 1..=max_rank {
        out.push(CartanType::A(r));
        if r >= 2 {
            out.push(CartanType::B(r));
        }
        if r >= 3 {
            out.push(CartanType::C(r));
        }
        if r >= 4 {
            out.push(CartanType::D(r));
        }
        if (6..=8).contains(&r) {
            out.push(CartanType::E(r));
        }
        if r == 2 {
            out.push(CartanType::G2);
        }
        if r == 4 {
            out.push(CartanType::F4);
        }
    }
    out
}

fn verify_all(ty: &str, max_rank: usize, opts: VerifyOptions) -> Result<Outcome, Error> {
    let cfg = Config::from_env();
    let labels: Vec<String> = if ty.eq_ignore_ascii_case("all") {
        all_types(max_rank)
            .into_iter()
            .filter(|t| t.weyl_order() <= cfg.max_weyl_order)
            .map(|t| t.to_string())
            .collect()
    } else {
        vec![ty.to_string()]
    };
    let mut reports = Vec::new();
    let mut ok = true;
    for label in labels {
        let sys = RootSystem::build(&label, &cfg)?;
        eprintln!("[{label}] enumerating W");
        let w = WeylGroup::new(sys);
        let recs = verify_group(&w, opts, |name| eprintln!("[{label}] {name}"))?;
        let passed = recs.iter().all(|r| r.passed());
        ok &= passed;
        reports.push(json!({ "type": label, "order": w.order(), "passed": passed, "checks": recs }));
    }
    Ok(Outcome { value: json!({ "passed": ok, "types": reports }), ok })
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        Value::Array(xs) if xs.iter().all(|x| !x.is_object() && !x.is_array()) => {
            let parts: Vec<String> = xs.iter().map(cell).collect();
            format!("[{}]", parts.join(","))
        }
        other => other.to_string(),
    }
}

fn is_row_list(v: &Value) -> bool {
    matches!(v, Value::Array(xs) if !xs.is_empty() && xs.iter().all(|x| x.is_object()))
}

fn table_rows(rows: &[Value], out: &mut String) {
    let mut cols: Vec<String> = Vec::new();
    for r in rows {
        for k in r.as_object().unwrap().keys() {
            if !cols.contains(k) {
                cols.push(k.clone());
            }
        }
    }
    let grid: Vec<Vec<String>> =
        rows.iter().map(|r| cols.iter().map(|c| r.get(c).map_or(String::new(), cell)).collect()).collect();
    let widths: Vec<usize> =
        (0..cols.len()).map(|c| grid.iter().map(|row| row[c].chars().count()).chain([cols[c].chars().count()]).max().unwrap()).collect();
    let line = |cells: &[String]| -> String {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(s, &w)| format!("{s:<w$}")).collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    out.push_str(&line(&cols));
    for row in &grid {
        out.push_str(&line(row));
    }
}

fn table(v: &Value, out: &mut String) {
    match v {
        Value::Object(map) => {
            let scalars: Vec<(&String, &Value)> = map.iter().filter(|(_, x)| !is_row_list(x) && !x.is_object()).collect();
            let width = scalars.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
            for (k, x) in scalars {
                out.push_str(&format!("{k:<width$}  {}\n", cell(x)));
            }
            for (k, x) in map.iter().filter(|(_, x)| is_row_list(x) || x.is_object()) {
                out.push_str(&format!("\n{k}:\n"));
                table(x, out);
            }
        }
        Value::Array(rows) if is_row_list(v) => {
            // Nested row lists (for example per-type checks) are flattened to
            // a compact cell, except at the top level where each row expands.
            if rows.iter().any(|r| r.as_object().unwrap().values().any(is_row_list)) {
                for r in rows {
                    table(r, out);
                    out.push('\n');
                }
            } else {
                table_rows(rows, out);
            }
        }
        other => {
            out.push_str(&cell(other));
            out.push('\n');
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(outcome) => {
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&outcome.value).expect("json")),
                Format::Table => {
                    let mut s = String::new();
                    table(&outcome.value, &mut s);
                    print!("{s}");
                }
            }
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("error: cross-check failed");
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_verification_failure() { 1 } else { 2 })
        }
    }
}
