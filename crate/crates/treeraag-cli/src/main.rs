//! Command-line surface for the decision pipeline.
//!
//! Exit codes: 0 ok/positive, 1 negative verdict or failed verification,
//! 2 gate failure (including cycle-graph refusal), 3 input error,
//! 4 internal inconsistency.

use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use treeraag::classify::{classify, Classification};
use treeraag::cuts;
use treeraag::fidl::{self, Lambda, LambdaTree};
use treeraag::fixtures;
use treeraag::graph::{Graph, GraphFormat};
use treeraag::jsj;
use treeraag::squares;
use treeraag::structured;
use treeraag::words;
use treeraag::Error;

const EXIT_OK: u8 = 0;
const EXIT_NO: u8 = 1;
const EXIT_GATE: u8 = 2;
const EXIT_INPUT: u8 = 3;
const EXIT_INTERNAL: u8 = 4;

#[derive(Parser)]
#[command(
    name = "treeraag",
    about = "Decide whether a right-angled Coxeter group on a triangle-free graph is \
             quasiisometric to a tree RAAG, and construct the visible Artin subgroup",
    version,
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
    Dot,
}

#[derive(clap::Args)]
struct InputArgs {
    /// Input file; "-" reads standard input. Edge-list text or a
    /// structured JSON object.
    #[arg(long, conflicts_with = "fixture")]
    input: Option<String>,
    /// Bundled fixture name (FIG4, FIG2, C4, C6, C8, K23, K33, P4,
    /// PETERSEN, TWOSUS).
    #[arg(long)]
    fixture: Option<String>,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Run the hypothesis gate and report its flags.
    Check(InputArgs),
    /// Induced squares, the diagonal graph, and the CFS diagnostic.
    Squares(InputArgs),
    /// Cut pairs, cut 2-paths, crossing classes, and maximal thick joins.
    Cuts(InputArgs),
    /// The annotated graph of cylinders.
    Jsj(InputArgs),
    /// Full decision: positive certificate or obstruction witness.
    Classify(InputArgs),
    /// Build the forest pair, commuting graph, and generator map.
    Construct(InputArgs),
    /// Re-verify a construction (or build and verify one from a graph).
    Verify {
        #[command(flatten)]
        input: InputArgs,
        /// Bound on chordless cycle length for the cycle condition.
        #[arg(long)]
        max_cycle_len: Option<usize>,
        /// Cap on enumerated normal forms for injectivity sampling.
        #[arg(long, default_value_t = 1_000_000)]
        max_words: usize,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if e.kind() == clap::error::ErrorKind::DisplayHelp
                || e.kind() == clap::error::ErrorKind::DisplayVersion
            {
                print!("{e}");
                return ExitCode::from(EXIT_OK);
            }
            eprintln!("{e}");
            return ExitCode::from(EXIT_INPUT);
        }
    };
    match run(cli) {
        Ok((code, out)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::GateFailure(_) | Error::CycleGraph => EXIT_GATE,
        Error::Internal(_) => EXIT_INTERNAL,
        _ => EXIT_INPUT,
    }
}

fn run(cli: Cli) -> Result<(u8, String), Error> {
    match cli.command {
        Command::Check(args) => cmd_check(&args),
        Command::Squares(args) => cmd_squares(&args),
        Command::Cuts(args) => cmd_cuts(&args),
        Command::Jsj(args) => cmd_jsj(&args),
        Command::Classify(args) => cmd_classify(&args),
        Command::Construct(args) => cmd_construct(&args),
        Command::Verify {
            input,
            max_cycle_len,
            max_words,
        } => cmd_verify(&input, max_cycle_len, max_words),
    }
}

fn read_input(args: &InputArgs) -> Result<String, Error> {
    match (&args.input, &args.fixture) {
        (None, Some(name)) => {
            let g = fixtures::by_name(name)
                .ok_or_else(|| Error::Invalid(format!("unknown fixture {name:?}")))?;
            Ok(g.to_edge_list())
        }
        (Some(path), None) => {
            let mut text = String::new();
            if path == "-" {
                std::io::stdin()
                    .read_to_string(&mut text)
                    .map_err(|e| Error::Invalid(format!("reading standard input: {e}")))?;
            } else {
                text = std::fs::read_to_string(PathBuf::from(path))
                    .map_err(|e| Error::Invalid(format!("reading {path}: {e}")))?;
            }
            Ok(text)
        }
        (None, None) => Err(Error::Invalid("one of --input or --fixture is required".into())),
        (Some(_), Some(_)) => unreachable!("clap enforces the conflict"),
    }
}

fn parse_graph_text(text: &str) -> Result<Graph, Error> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        Graph::parse(text, GraphFormat::Structured)
    } else {
        Graph::parse(text, GraphFormat::EdgeList)
    }
}

fn load_graph(args: &InputArgs) -> Result<Graph, Error> {
    parse_graph_text(&read_input(args)?)
}

fn cmd_check(args: &InputArgs) -> Result<(u8, String), Error> {
    let g = load_graph(args)?;
    let gate = g.precondition_gate();
    let code = if gate.passes() { EXIT_OK } else { EXIT_GATE };
    let out = match args.format {
        Format::Structured => {
            let v = json!({
                "schema": "treeraag.check/1",
                "graph": structured::graph_json(&g),
                "gate": structured::gate_json(&g, &gate),
            });
            format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
        }
        Format::Dot => g.export_dot(None),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "vertices: {}", g.vertex_count());
            let _ = writeln!(s, "edges: {}", g.edge_count());
            let _ = writeln!(s, "triangle-free: {}", gate.triangle_free);
            let _ = writeln!(s, "incomplete: {}", gate.incomplete);
            let _ = writeln!(s, "connected: {}", gate.connected);
            let cliques: Vec<String> = gate
                .separating_cliques
                .iter()
                .map(|c| g.set_label(c))
                .collect();
            let _ = writeln!(
                s,
                "separating cliques: {}",
                if cliques.is_empty() { "none".into() } else { cliques.join(" ") }
            );
            let _ = writeln!(s, "cycle graph: {}", gate.is_cycle_graph);
            let _ = writeln!(s, "gate: {}", if gate.passes() { "pass" } else { "fail" });
            for reason in gate.failure_reasons(&g) {
                let _ = writeln!(s, "  reason: {reason}");
            }
            s
        }
    };
    Ok((code, out))
}

fn cmd_squares(args: &InputArgs) -> Result<(u8, String), Error> {
    let g = load_graph(args)?;
    let squares_list = squares::induced_squares(&g);
    let dg = squares::diagonal_graph(&g);
    let cfs = squares::is_cfs(&g);
    let out = match args.format {
        Format::Structured => {
            let v = json!({
                "schema": "treeraag.squares/1",
                "graph": structured::graph_json(&g),
                "squares": squares_list.iter().map(|sq| structured::square_json(&g, sq)).collect::<Vec<_>>(),
                "diagonal_graph": structured::diagonal_graph_json(&g, &dg),
                "cfs": structured::cfs_json(&g, &cfs),
            });
            format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
        }
        Format::Dot => dg.to_graph(&g).export_dot(None),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "induced squares: {}", squares_list.len());
            for sq in &squares_list {
                let _ = writeln!(s, "  {}", sq.label(&g));
            }
            let _ = writeln!(
                s,
                "diagonal graph: {} vertices, {} edges{}",
                dg.vertices.len(),
                dg.edges.len(),
                if dg.is_tree() { " (a tree)" } else { "" }
            );
            let _ = writeln!(s, "cfs: {}", cfs.cfs);
            if let Some(witness) = &cfs.witness_component {
                let labels: Vec<String> = witness
                    .iter()
                    .map(|&(a, b)| format!("{{{},{}}}", g.name(a), g.name(b)))
                    .collect();
                let _ = writeln!(s, "  witness component: {}", labels.join(" "));
            }
            s
        }
    };
    Ok((EXIT_OK, out))
}

fn cmd_cuts(args: &InputArgs) -> Result<(u8, String), Error> {
    let g = load_graph(args)?;
    let cuts_list = cuts::all_cuts(&g)?;
    let classes = cuts::crossing_classes(&g)?;
    let joins = cuts::maximal_thick_joins(&g)?;
    let out = match args.format {
        Format::Structured => {
            let v = json!({
                "schema": "treeraag.cuts/1",
                "graph": structured::graph_json(&g),
                "cuts": cuts_list.iter().map(|c| structured::cut_json(&g, c)).collect::<Vec<_>>(),
                "crossing": structured::crossing_json(&g, &classes),
                "joins": joins.iter().map(|j| structured::join_json(&g, j)).collect::<Vec<_>>(),
            });
            format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
        }
        Format::Dot => g.export_dot(None),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "cuts: {}", cuts_list.len());
            for c in &cuts_list {
                let kind = if c.is_pair() { "pair" } else { "2-path" };
                let _ = writeln!(s, "  {kind} {}", c.label(&g));
            }
            let _ = writeln!(s, "uncrossed: {}", classes.uncrossed.len());
            for c in &classes.uncrossed {
                let _ = writeln!(s, "  {}", c.label(&g));
            }
            let _ = writeln!(s, "hanging collections: {}", classes.hanging_collections.len());
            for coll in &classes.hanging_collections {
                let labels: Vec<String> = coll.iter().map(|c| c.label(&g)).collect();
                let _ = writeln!(s, "  {}", labels.join(" "));
            }
            let _ = writeln!(s, "maximal thick joins: {}", joins.len());
            for j in &joins {
                let _ = writeln!(s, "  {}", j.label(&g));
            }
            s
        }
    };
    Ok((EXIT_OK, out))
}

fn cmd_jsj(args: &InputArgs) -> Result<(u8, String), Error> {
    let g = load_graph(args)?;
    let goc = jsj::annotate(&g, jsj::graph_of_cylinders(&g)?)?;
    let out = match args.format {
        Format::Structured => {
            let v = json!({
                "schema": "treeraag.jsj/1",
                "graph": structured::graph_json(&g),
                "graph_of_cylinders": structured::goc_json(&g, &goc),
            });
            format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
        }
        Format::Dot => jsj::export_goc(&g, &goc, jsj::GocFormat::Dot),
        Format::Text => jsj::export_goc(&g, &goc, jsj::GocFormat::Text),
    };
    Ok((EXIT_OK, out))
}

fn classification_exit(c: &Classification) -> u8 {
    match c {
        Classification::Yes(_) => EXIT_OK,
        Classification::No(_) => EXIT_NO,
        Classification::GateFail(_) => EXIT_GATE,
    }
}

fn cmd_classify(args: &InputArgs) -> Result<(u8, String), Error> {
    let g = load_graph(args)?;
    let verdict = classify(&g)?;
    let code = classification_exit(&verdict);
    let out = match args.format {
        Format::Structured => {
            let mut v = structured::classification_json(&g, &verdict);
            v["schema"] = json!("treeraag.classify/1");
            v["graph"] = structured::graph_json(&g);
            format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
        }
        Format::Dot => g.export_dot(None),
        Format::Text => match &verdict {
            Classification::Yes(construction) => {
                let mut s = String::from("verdict: YES\n");
                let _ = writeln!(
                    s,
                    "commuting graph: {} vertices, {} edges, diameter {}",
                    construction.delta.vertex_count(),
                    construction.delta.edge_count(),
                    fidl::delta_diameter(&construction.delta)
                );
                for line in construction.generator_map_lines(&g) {
                    let _ = writeln!(s, "  {line}");
                }
                s
            }
            Classification::No(o) => {
                format!("verdict: NO\nobstruction: {}\n  {}\n", o.tag(), o.describe(&g))
            }
            Classification::GateFail(reasons) => {
                let mut s = String::from("verdict: GATE_FAIL\n");
                for r in reasons {
                    let _ = writeln!(s, "  reason: {r}");
                }
                s
            }
        },
    };
    Ok((code, out))
}

fn cmd_construct(args: &InputArgs) -> Result<(u8, String), Error> {
    let g = load_graph(args)?;
    let verdict = classify(&g)?;
    let code = classification_exit(&verdict);
    let construction = match &verdict {
        Classification::Yes(c) => c,
        Classification::No(o) => {
            return Ok((code, format!("no construction: {}\n", o.describe(&g))))
        }
        Classification::GateFail(reasons) => {
            return Ok((code, format!("gate failure: {}\n", reasons.join("; "))))
        }
    };
    let out = match args.format {
        Format::Structured => {
            let mut v = structured::construction_json(&g, construction);
            v["schema"] = json!("treeraag.construction/1");
            format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
        }
        Format::Dot => {
            // the forest pair drawn inside the complement, plus the
            // commuting graph
            let mut decorations = treeraag::graph::DotDecorations::default();
            for (i, tree) in construction.lambda.trees.iter().enumerate() {
                for &(a, b) in &tree.edges {
                    decorations.edge_attrs.insert(
                        (g.name(a).to_string(), g.name(b).to_string()),
                        format!("color={}, penwidth=2", if i == 0 { "blue" } else { "red" }),
                    );
                }
            }
            let mut s = g.complement().export_dot(Some(&decorations));
            s.push_str(&construction.delta.export_dot(None));
            s
        }
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "poles: {}",
                construction
                    .suspension_tree
                    .poles
                    .iter()
                    .map(|&(a, b)| format!("{{{},{}}}", g.name(a), g.name(b)))
                    .collect::<Vec<_>>()
                    .join(" ")
            );
            for tagged in &construction.lambda_per_pole {
                let edges: Vec<String> = tagged
                    .edges
                    .iter()
                    .map(|&(e, tag)| {
                        format!(
                            "{}-{}{}",
                            g.name(e.0),
                            g.name(e.1),
                            match tag {
                                fidl::EdgeTag::Mandatory => "",
                                fidl::EdgeTag::Discretionary => "*",
                            }
                        )
                    })
                    .collect();
                let _ = writeln!(
                    s,
                    "tree at {{{},{}}}: {} (* = discretionary)",
                    g.name(tagged.pole.0),
                    g.name(tagged.pole.1),
                    edges.join(" ")
                );
            }
            for (i, tree) in construction.lambda.trees.iter().enumerate() {
                let edges: Vec<String> = tree
                    .edges
                    .iter()
                    .map(|&(a, b)| format!("{}-{}", g.name(a), g.name(b)))
                    .collect();
                let _ = writeln!(s, "lambda{i}: {}", edges.join(" "));
            }
            let _ = writeln!(
                s,
                "commuting graph: {} vertices, {} edges, diameter {}",
                construction.delta.vertex_count(),
                construction.delta.edge_count(),
                fidl::delta_diameter(&construction.delta)
            );
            for line in construction.generator_map_lines(&g) {
                let _ = writeln!(s, "  {line}");
            }
            s
        }
    };
    Ok((code, out))
}

/// Lambda parsed back from a construction object.
fn lambda_from_json(g: &Graph, v: &serde_json::Value) -> Result<Lambda, Error> {
    let tree = |key: &str| -> Result<LambdaTree, Error> {
        let t = &v["lambda"][key];
        let vertex_of = |s: &serde_json::Value| {
            s.as_str()
                .and_then(|name| g.vertex(name))
                .ok_or_else(|| Error::Invalid(format!("unknown vertex {s} in construction")))
        };
        let mut vertices = Vec::new();
        for name in t["vertices"]
            .as_array()
            .ok_or_else(|| Error::Invalid("construction lambda missing vertices".into()))?
        {
            vertices.push(vertex_of(name)?);
        }
        vertices.sort_unstable();
        let mut edges = Vec::new();
        for e in t["edges"]
            .as_array()
            .ok_or_else(|| Error::Invalid("construction lambda missing edges".into()))?
        {
            let a = vertex_of(&e[0])?;
            let b = vertex_of(&e[1])?;
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        Ok(LambdaTree { vertices, edges })
    };
    Ok(Lambda {
        trees: [tree("lambda0")?, tree("lambda1")?],
    })
}

fn cmd_verify(
    args: &InputArgs,
    max_cycle_len: Option<usize>,
    max_words: usize,
) -> Result<(u8, String), Error> {
    let text = read_input(args)?;
    let trimmed = text.trim_start();

    // a construction object is verified as given; anything else is treated
    // as a graph to classify, construct, and verify
    let (g, lambda, construction) = if trimmed.starts_with('{')
        && serde_json::from_str::<serde_json::Value>(&text)
            .ok()
            .is_some_and(|v| v["schema"] == "treeraag.construction/1")
    {
        let v: serde_json::Value =
            serde_json::from_str(&text).map_err(|e| Error::Invalid(format!("bad json: {e}")))?;
        let g = Graph::parse(&v["graph"].to_string(), GraphFormat::Structured)?;
        let lambda = lambda_from_json(&g, &v)?;
        (g, lambda, None)
    } else {
        let g = parse_graph_text(&text)?;
        let verdict = classify(&g)?;
        match verdict {
            Classification::Yes(c) => {
                let lambda = c.lambda.clone();
                (g, lambda, Some(c))
            }
            Classification::No(o) => {
                return Ok((EXIT_NO, format!("nothing to verify: {}\n", o.describe(&g))))
            }
            Classification::GateFail(reasons) => {
                return Ok((EXIT_GATE, format!("gate failure: {}\n", reasons.join("; "))))
            }
        }
    };

    let mut lines = Vec::new();
    let mut ok = true;

    match lambda.validate(&g) {
        Ok(()) => lines.push("structure: ok".to_string()),
        Err(e) => {
            ok = false;
            lines.push(format!("structure: FAIL ({e})"));
        }
    }

    match fidl::verify_r3(&g, &lambda)? {
        None => lines.push("square hull-join condition: ok".to_string()),
        Some(sq) => {
            ok = false;
            lines.push(format!("square hull-join condition: FAIL at {}", sq.label(&g)));
        }
    }

    let bound = max_cycle_len.unwrap_or(g.vertex_count());
    match fidl::verify_r4(&g, &lambda, bound)? {
        None => lines.push("cycle square-support condition: ok".to_string()),
        Some((cycle, edge)) => {
            ok = false;
            let cycle_names: Vec<&str> = cycle.iter().map(|&v| g.name(v)).collect();
            lines.push(format!(
                "cycle square-support condition: FAIL at edge {}-{} of cycle {}",
                g.name(edge.0),
                g.name(edge.1),
                cycle_names.join("-")
            ));
        }
    }

    // deeper sampling checks need the full construction; rebuild it when
    // the lambda pair matches what the pipeline produces
    let construction = match construction {
        Some(c) => Some(c),
        None => match classify(&g)? {
            Classification::Yes(c) if c.lambda == lambda => Some(c),
            _ => None,
        },
    };
    if let Some(c) = &construction {
        let mut commute_ok = true;
        for (u, w) in c.delta.edges() {
            let uw = words::apply_generator_map(
                c,
                &words::ArtinWord(vec![
                    words::ArtinLetter::gen(u),
                    words::ArtinLetter::gen(w),
                ]),
            )?;
            let wu = words::apply_generator_map(
                c,
                &words::ArtinWord(vec![
                    words::ArtinLetter::gen(w),
                    words::ArtinLetter::gen(u),
                ]),
            )?;
            if !words::racg_equal(&g, &uw, &wu)? {
                commute_ok = false;
            }
        }
        if commute_ok {
            lines.push("generator images commute along commuting-graph edges: ok".to_string());
        } else {
            ok = false;
            lines.push("generator images commute along commuting-graph edges: FAIL".to_string());
        }

        let report = words::injectivity_sample(&g, c, 3, max_words)?;
        match report.outcome {
            words::InjectivityOutcome::Ok => lines.push(format!(
                "injectivity sample (length <= {}, {} normal forms): ok",
                report.max_len, report.normal_forms
            )),
            words::InjectivityOutcome::Collision(w1, w2) => {
                ok = false;
                lines.push(format!(
                    "injectivity sample: FAIL, {} and {} collide",
                    w1.render(&c.delta),
                    w2.render(&c.delta)
                ));
            }
        }
    }

    let code = if ok { EXIT_OK } else { EXIT_NO };
    let out = match args.format {
        Format::Structured => {
            let v = json!({
                "schema": "treeraag.verify/1",
                "ok": ok,
                "checks": lines,
            });
            format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
        }
        _ => {
            let mut s = lines.join("\n");
            s.push('\n');
            let _ = writeln!(s, "verify: {}", if ok { "ok" } else { "FAIL" });
            s
        }
    };
    Ok((code, out))
}
