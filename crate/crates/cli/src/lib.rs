//! Argument definitions and dispatch for the `modf` binary.
//!
//! [`run`] never prints or exits; it returns the rendered output together
//! with the exit status so the binary and the tests share one code path.
//!
//! Exit statuses: 0 on success, 1 when a checked invariant or equivalence is
//! violated, 2 on malformed input or arguments, 3 when a size cap is hit.

use std::fmt::Write as _;
use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use modf_core::domination::{is_majority_dominating, is_minimal_modf, satisfied_set};
use modf_core::families::{FamilyMember, FamilyParams, FamilySpec};
use modf_core::io::{digraph_to_dot, graph_to_dot, parse_edge_list, write_digraph, write_graph, ParsedGraph};
use modf_core::orientations::{compare_with_gamma_maj_with, dom_range_with, DomOptions, Symmetry};
use modf_core::reduction::{build_gadget, equivalence_check};
use modf_core::solver::{
    gamma_maj_out_bb, gamma_maj_out_oracle_with, gamma_maj_undirected_with, gamma_minus,
    scan_conjecture_bipartite, scan_conjecture_regular, ConjectureReport, Method as SolverMethod,
    OracleOptions, RegularSource, SolveResult, ORACLE_CAP,
};
use modf_core::table::comparison_table;
use modf_core::transforms::{perturb, Edit};
use modf_core::{is_modf, Digraph, Graph, ModfError, SignFunction, VertexSet, MAX_VERTICES};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Parser, Debug, Clone)]
#[command(name = "modf", version, about = "Exact majority out-domination on small digraphs")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Worker threads for the exhaustive solver.
    #[arg(long, default_value_t = 1, global = true)]
    pub threads: usize,

    /// Also print witnesses as `+-` strings, vertex 0 first.
    #[arg(long, global = true)]
    pub signs: bool,

    /// Largest order the exhaustive solver accepts (never above 26).
    #[arg(long = "oracle-cap", env = "MODF_MAX_N", global = true)]
    pub oracle_cap: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Oracle,
    Bb,
}

impl Method {
    fn solver(self) -> SolverMethod {
        match self {
            Method::Oracle => SolverMethod::Oracle,
            Method::Bb => SolverMethod::BranchAndBound,
        }
    }
}

fn method_name(m: SolverMethod) -> &'static str {
    match m {
        SolverMethod::Oracle => "oracle",
        SolverMethod::BranchAndBound => "bb",
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Problem {
    /// Minimum MODF weight of a digraph.
    GammaOut,
    /// Minimum majority dominating weight of a graph.
    GammaMaj,
    /// Minimum in-dominating set size of a digraph.
    GammaMinus,
}

impl Problem {
    fn name(self) -> &'static str {
        match self {
            Problem::GammaOut => "gamma_maj_out",
            Problem::GammaMaj => "gamma_maj",
            Problem::GammaMinus => "gamma_minus",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SymmetryArg {
    None,
    Stars,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConjectureKind {
    /// Regular digraphs have an optimal function that is monotone in in-degree.
    Regular,
    /// Orientation maximum of complete bipartite graphs.
    Bipartite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SourceArg {
    Tournaments,
    Fixtures,
    Random,
}

/// Family parameters; each family reads the ones it needs.
#[derive(Args, Debug, Clone, Default)]
pub struct FamilyFlags {
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub a: Option<usize>,
    #[arg(long)]
    pub b: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub s: Option<usize>,
}

impl FamilyFlags {
    fn params(&self) -> FamilyParams {
        FamilyParams {
            n: self.n,
            k: self.k,
            a: self.a,
            b: self.b,
            r: self.r,
            s: self.s,
        }
    }
}

/// Where the input graph comes from: a file, standard input, or a family.
#[derive(Args, Debug, Clone, Default)]
pub struct Source {
    /// Edge-list file, or `-` for standard input.
    #[arg(conflicts_with = "family")]
    pub input: Option<String>,

    /// Named family instead of an input file.
    #[arg(long)]
    pub family: Option<String>,

    #[command(flatten)]
    pub params: FamilyFlags,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Compute an optimum with a witness.
    Solve {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = Method::Oracle)]
        method: Method,
        /// Defaults to gamma-out for digraphs and gamma-maj for graphs.
        #[arg(long, value_enum)]
        problem: Option<Problem>,
    },
    /// Check a sign function given by its positive vertices or a `+-` string.
    Verify {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_delimiter = ',', required_unless_present = "sign_string")]
        positives: Option<Vec<usize>>,
        #[arg(long = "sign-string", conflicts_with = "positives")]
        sign_string: Option<String>,
    },
    /// Emit a family member as an edge list (or DOT).
    Family {
        kind: String,
        #[command(flatten)]
        params: FamilyFlags,
        #[arg(long)]
        dot: bool,
    },
    /// Minimum and maximum optimum over all orientations of a graph.
    Orient {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = SymmetryArg::None)]
        symmetry: SymmetryArg,
        #[arg(long, value_enum, default_value_t = Method::Oracle)]
        method: Method,
        /// Also compute the undirected optimum and compare.
        #[arg(long)]
        compare: bool,
    },
    /// Apply edits in order and check the known bound for each one.
    Perturb {
        #[command(flatten)]
        source: Source,
        /// `reverse:U:V`, `delete-arc:U:V` or `delete-vertex:V`; repeatable.
        #[arg(long = "edit", required = true, value_parser = parse_edit)]
        edits: Vec<Edit>,
    },
    /// Build the reduction gadget for a source digraph and bound `k`.
    Reduce {
        /// Source digraph edge list, or `-` for standard input.
        input: String,
        #[arg(long)]
        k: i64,
        /// Write the gadget edge list to this path (`-` for standard output).
        #[arg(long)]
        emit: Option<String>,
        /// Solve both sides and check they agree.
        #[arg(long)]
        check: bool,
    },
    /// Closed forms against exact values.
    Table {
        #[arg(long = "max-n", default_value_t = 12)]
        max_n: usize,
    },
    /// Search for counterexamples to an open conjecture.
    Conjecture {
        #[arg(value_enum)]
        which: ConjectureKind,
        #[arg(long = "max-n", default_value_t = 6)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = SourceArg::Tournaments)]
        source: SourceArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long = "max-rs", default_value_t = 6)]
        max_rs: usize,
        #[arg(long = "max-product", default_value_t = 12)]
        max_product: usize,
    },
}

pub fn parse_edit(s: &str) -> Result<Edit, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let num = |t: &str| {
        t.parse::<usize>()
            .map_err(|_| format!("invalid vertex {t:?} in edit {s:?}"))
    };
    match parts[..] {
        ["reverse", u, v] => Ok(Edit::ReverseArc { u: num(u)?, v: num(v)? }),
        ["delete-arc", u, v] => Ok(Edit::DeleteArc { u: num(u)?, v: num(v)? }),
        ["delete-vertex", v] => Ok(Edit::DeleteVertex { v: num(v)? }),
        _ => Err(format!(
            "invalid edit {s:?}; expected reverse:U:V, delete-arc:U:V or delete-vertex:V"
        )),
    }
}

/// Rendered result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
enum Failure {
    Parse(String),
    Cap(String),
}

impl From<ModfError> for Failure {
    fn from(e: ModfError) -> Self {
        match e {
            ModfError::CapExceeded { .. } | ModfError::TooLarge(_) | ModfError::SetTooLarge { .. } => {
                Failure::Cap(e.to_string())
            }
            _ => Failure::Parse(e.to_string()),
        }
    }
}

type Run<T> = std::result::Result<T, Failure>;

/// A finished report: structured data, its text form, and any violation.
struct Report {
    json: Value,
    text: String,
    violation: Option<String>,
}

impl Report {
    fn ok(json: Value, text: String) -> Self {
        Report {
            json,
            text,
            violation: None,
        }
    }
}

pub fn run(cli: &Cli, stdin: &mut dyn Read) -> Output {
    let ctx = Context {
        threads: cli.threads.max(1),
        signs: cli.signs,
        oracle_cap: cli.oracle_cap.unwrap_or(ORACLE_CAP).min(ORACLE_CAP),
    };
    match dispatch(&ctx, &cli.command, stdin) {
        Ok(report) => {
            let mut stdout = match cli.format {
                Format::Json => serde_json::to_string_pretty(&report.json).expect("values serialize"),
                Format::Text => report.text.trim_end().to_string(),
            };
            stdout.push('\n');
            match report.violation {
                Some(v) => Output {
                    code: EXIT_VIOLATION,
                    stdout,
                    stderr: format!("error: {v}\n"),
                },
                None => Output {
                    code: EXIT_OK,
                    stdout,
                    stderr: String::new(),
                },
            }
        }
        Err(Failure::Parse(m)) => Output {
            code: EXIT_PARSE,
            stdout: String::new(),
            stderr: format!("error: {m}\n"),
        },
        Err(Failure::Cap(m)) => Output {
            code: EXIT_CAP,
            stdout: String::new(),
            stderr: format!("error: {m}\n"),
        },
    }
}

struct Context {
    threads: usize,
    signs: bool,
    oracle_cap: usize,
}

impl Context {
    fn check_oracle(&self, what: &'static str, n: usize) -> Run<()> {
        if n > self.oracle_cap {
            return Err(Failure::Cap(format!(
                "{what} {n} exceeds the exhaustive solver cap {} (set by MODF_MAX_N, at most {ORACLE_CAP}); try --method bb",
                self.oracle_cap
            )));
        }
        Ok(())
    }

    fn oracle(&self) -> OracleOptions {
        OracleOptions {
            threads: self.threads,
        }
    }
}

fn dispatch(ctx: &Context, command: &Command, stdin: &mut dyn Read) -> Run<Report> {
    match command {
        Command::Solve {
            source,
            method,
            problem,
        } => solve(ctx, load(source, stdin)?, *method, *problem),
        Command::Verify {
            source,
            positives,
            sign_string,
        } => verify(ctx, load(source, stdin)?, positives.as_deref(), sign_string.as_deref()),
        Command::Family { kind, params, dot } => family(kind, params, *dot),
        Command::Orient {
            source,
            symmetry,
            method,
            compare,
        } => orient(ctx, load(source, stdin)?, *symmetry, *method, *compare),
        Command::Perturb { source, edits } => perturb_cmd(ctx, load(source, stdin)?, edits),
        Command::Reduce {
            input,
            k,
            emit,
            check,
        } => {
            let source = Source {
                input: Some(input.clone()),
                ..Source::default()
            };
            reduce(ctx, load(&source, stdin)?, *k, emit.as_deref(), *check)
        }
        Command::Table { max_n } => table(*max_n),
        Command::Conjecture {
            which,
            max_n,
            source,
            seed,
            samples,
            max_rs,
            max_product,
        } => conjecture(*which, *max_n, *source, *seed, *samples, *max_rs, *max_product),
    }
}

fn load(source: &Source, stdin: &mut dyn Read) -> Run<ParsedGraph> {
    if let Some(kind) = &source.family {
        let spec = FamilySpec::from_kind(kind, source.params.params())?;
        return Ok(match spec.build()? {
            FamilyMember::Digraph(d) => ParsedGraph::Digraph(d),
            FamilyMember::Graph(g) => ParsedGraph::Graph(g),
        });
    }
    let text = match source.input.as_deref() {
        None => return Err(Failure::Parse("no input: give a file, `-`, or --family".into())),
        Some("-") => {
            let mut s = String::new();
            stdin
                .read_to_string(&mut s)
                .map_err(|e| Failure::Parse(format!("reading standard input: {e}")))?;
            s
        }
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Failure::Parse(format!("reading {path}: {e}")))?,
    };
    Ok(parse_edge_list(&text)?)
}

fn need_digraph(g: ParsedGraph, command: &str) -> Run<Digraph> {
    match g {
        ParsedGraph::Digraph(d) => Ok(d),
        ParsedGraph::Graph(_) => Err(Failure::Parse(format!("{command} needs a digraph"))),
    }
}

fn need_graph(g: ParsedGraph, command: &str) -> Run<Graph> {
    match g {
        ParsedGraph::Graph(g) => Ok(g),
        ParsedGraph::Digraph(_) => Err(Failure::Parse(format!("{command} needs an undirected graph"))),
    }
}

fn set_list(s: VertexSet) -> Vec<usize> {
    s.iter().collect()
}

fn fmt_set(s: VertexSet) -> String {
    let items: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", items.join(", "))
}

fn arc_text(arcs: &[(usize, usize)], sep: &str) -> String {
    arcs.iter()
        .map(|(u, v)| format!("{u}{sep}{v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn solve(ctx: &Context, input: ParsedGraph, method: Method, problem: Option<Problem>) -> Run<Report> {
    let problem = match (&input, problem) {
        (_, Some(p)) => p,
        (ParsedGraph::Digraph(_), None) => Problem::GammaOut,
        (ParsedGraph::Graph(_), None) => Problem::GammaMaj,
    };
    let n = match &input {
        ParsedGraph::Digraph(d) => d.order(),
        ParsedGraph::Graph(g) => g.order(),
    };
    let (optimum, witness, nodes, used, signs) = match problem {
        Problem::GammaOut | Problem::GammaMaj => {
            let result: SolveResult = match (problem, input) {
                (Problem::GammaOut, input) => {
                    let d = need_digraph(input, "gamma-out")?;
                    match method {
                        Method::Oracle => {
                            ctx.check_oracle("order", n)?;
                            gamma_maj_out_oracle_with(&d, ctx.oracle())?
                        }
                        Method::Bb => gamma_maj_out_bb(&d)?,
                    }
                }
                (_, input) => {
                    let g = need_graph(input, "gamma-maj")?;
                    match method {
                        Method::Oracle => {
                            ctx.check_oracle("order", n)?;
                            gamma_maj_undirected_with(&g, ctx.oracle())?
                        }
                        Method::Bb => gamma_maj_out_bb(&g.symmetric_digraph())?,
                    }
                }
            };
            (
                result.optimum,
                result.witness.positives(),
                result.nodes_explored,
                method_name(result.method),
                Some(result.witness.sign_string()),
            )
        }
        Problem::GammaMinus => {
            let d = need_digraph(input, "gamma-minus")?;
            ctx.check_oracle("order", n)?;
            let r = gamma_minus(&d)?;
            (r.size as i64, r.witness, r.nodes_explored, "oracle", None)
        }
    };
    let mut json = json!({
        "problem": problem.name(),
        "n": n,
        "optimum": optimum,
        "witness_positives": set_list(witness),
        "method": used,
        "nodes": nodes,
    });
    let mut text = format!(
        "problem: {}\nn: {n}\noptimum: {optimum}\nwitness: {}\nmethod: {used}\nnodes: {nodes}\n",
        problem.name(),
        fmt_set(witness)
    );
    if let (true, Some(s)) = (ctx.signs, signs) {
        json["witness_signs"] = json!(s);
        let _ = writeln!(text, "signs: {s}");
    }
    Ok(Report::ok(json, text))
}

fn verify(
    ctx: &Context,
    input: ParsedGraph,
    positives: Option<&[usize]>,
    sign_string: Option<&str>,
) -> Run<Report> {
    let n = match &input {
        ParsedGraph::Digraph(d) => d.order(),
        ParsedGraph::Graph(g) => g.order(),
    };
    let f = match (positives, sign_string) {
        (_, Some(s)) => {
            let f = SignFunction::from_sign_string(s)?;
            if f.order() != n {
                return Err(Failure::Parse(format!(
                    "sign string has {} entries for a graph of order {n}",
                    f.order()
                )));
            }
            f
        }
        (Some(p), None) => SignFunction::from_positives(n, p.iter().copied())?,
        (None, None) => return Err(Failure::Parse("give --positives or --sign-string".into())),
    };
    let (valid, satisfied, minimal, kind) = match &input {
        ParsedGraph::Digraph(d) => {
            let valid = is_modf(d, &f)?;
            let sat = satisfied_set(d, &f)?;
            let minimal = if valid && f.positives().len() <= 20 {
                Some(is_minimal_modf(d, &f)?)
            } else {
                None
            };
            (valid, sat, minimal, "MODF")
        }
        ParsedGraph::Graph(g) => {
            let valid = is_majority_dominating(g, &f)?;
            let sat = satisfied_set(&g.symmetric_digraph(), &f)?;
            (valid, sat, None, "majority dominating function")
        }
    };
    let weight = f.weight();
    let mut json = json!({
        "n": n,
        "valid": valid,
        "kind": kind,
        "weight": weight,
        "positives": set_list(f.positives()),
        "satisfied": set_list(satisfied),
        "minimal": minimal,
    });
    let mut text = if valid {
        format!("{kind}, weight {weight}\n")
    } else {
        format!("not a {kind}, weight {weight}\n")
    };
    let _ = writeln!(text, "satisfied: {} of {n} {}", satisfied.len(), fmt_set(satisfied));
    if let Some(m) = minimal {
        let _ = writeln!(text, "minimal: {m}");
    }
    if ctx.signs {
        json["signs"] = json!(f.sign_string());
        let _ = writeln!(text, "signs: {}", f.sign_string());
    }
    let violation = (!valid).then(|| format!("the function is not a {kind}"));
    Ok(Report {
        json,
        text,
        violation,
    })
}

fn family(kind: &str, params: &FamilyFlags, dot: bool) -> Run<Report> {
    let spec = FamilySpec::from_kind(kind, params.params())?;
    let member = spec.build()?;
    let (text, graph_json) = match &member {
        FamilyMember::Digraph(d) if dot => (digraph_to_dot(d, None), json!(d)),
        FamilyMember::Digraph(d) => (write_digraph(d), json!(d)),
        FamilyMember::Graph(g) if dot => (graph_to_dot(g, None), json!(g)),
        FamilyMember::Graph(g) => (write_graph(g), json!(g)),
    };
    let json = json!({
        "family": spec,
        "directed": spec.is_directed(),
        "graph": graph_json,
    });
    Ok(Report::ok(json, text))
}

#[derive(Serialize)]
struct OrientJson {
    n: usize,
    edges: usize,
    dom_plus: i64,
    #[serde(rename = "DOM_plus")]
    dom_max: i64,
    dom_witness: Digraph,
    dom_witness_positives: Vec<usize>,
    #[serde(rename = "DOM_witness")]
    dom_max_witness: Digraph,
    orientations_enumerated: u64,
    symmetry_applied: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    gamma_maj: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    gamma_maj_vs_dom_max: Option<&'static str>,
}

fn orient(ctx: &Context, input: ParsedGraph, symmetry: SymmetryArg, method: Method, compare: bool) -> Run<Report> {
    let g = need_graph(input, "orient")?;
    if method == Method::Oracle {
        ctx.check_oracle("order", g.order())?;
    }
    let opts = DomOptions {
        symmetry: match symmetry {
            SymmetryArg::None => Symmetry::None,
            SymmetryArg::Stars => Symmetry::Stars,
        },
        method: method.solver(),
    };
    let r = dom_range_with(&g, opts)?;
    let (gamma_maj, ordering) = if compare {
        let c = compare_with_gamma_maj_with(&g, opts)?;
        let word = match c.gamma_vs_dom_max {
            std::cmp::Ordering::Less => "less",
            std::cmp::Ordering::Equal => "equal",
            std::cmp::Ordering::Greater => "greater",
        };
        (Some(c.gamma_maj), Some(word))
    } else {
        (None, None)
    };
    let out = OrientJson {
        n: g.order(),
        edges: g.edge_count(),
        dom_plus: r.dom_plus,
        dom_max: r.dom_max,
        dom_witness_positives: set_list(r.dom_witness_function.positives()),
        dom_witness: r.dom_witness.clone(),
        dom_max_witness: r.dom_max_witness.clone(),
        orientations_enumerated: r.orientations_enumerated,
        symmetry_applied: r.symmetry_applied,
        gamma_maj,
        gamma_maj_vs_dom_max: ordering,
    };
    let mut text = format!(
        "n: {}\nedges: {}\ndom_plus: {}\nDOM_plus: {}\ndom witness arcs: {}\ndom witness positives: {}\nDOM witness arcs: {}\norientations: {}{}\n",
        out.n,
        out.edges,
        out.dom_plus,
        out.dom_max,
        arc_text(&r.dom_witness.arcs().collect::<Vec<_>>(), "->"),
        fmt_set(r.dom_witness_function.positives()),
        arc_text(&r.dom_max_witness.arcs().collect::<Vec<_>>(), "->"),
        out.orientations_enumerated,
        if out.symmetry_applied { " (leaf symmetry)" } else { "" },
    );
    if let (Some(gm), Some(word)) = (gamma_maj, ordering) {
        let _ = writeln!(text, "gamma_maj: {gm} ({word} than DOM_plus)");
    }
    let json = serde_json::to_value(&out).expect("orientation report serializes");
    Ok(Report::ok(json, text))
}

fn perturb_cmd(ctx: &Context, input: ParsedGraph, edits: &[Edit]) -> Run<Report> {
    let d = need_digraph(input, "perturb")?;
    ctx.check_oracle("order", d.order())?;
    let (result, steps) = perturb(&d, edits)?;
    let mut text = String::new();
    for s in &steps {
        let _ = writeln!(
            text,
            "{}: {} -> {} bound {} {}",
            s.edit,
            s.before,
            s.after,
            serde_json::to_value(s.bound).expect("bound serializes").as_str().unwrap_or_default(),
            if s.bound_holds { "holds" } else { "VIOLATED" }
        );
    }
    let _ = writeln!(text, "final order: {}", result.order());
    let failed: Vec<String> = steps
        .iter()
        .filter(|s| !s.bound_holds)
        .map(|s| format!("{} moved the optimum from {} to {}", s.edit, s.before, s.after))
        .collect();
    let json = json!({
        "n": d.order(),
        "steps": steps,
        "result": result,
    });
    Ok(Report {
        json,
        text,
        violation: (!failed.is_empty()).then(|| failed.join("; ")),
    })
}

fn reduce(ctx: &Context, input: ParsedGraph, k: i64, emit: Option<&str>, check: bool) -> Run<Report> {
    let source = need_digraph(input, "reduce")?;
    let inst = build_gadget(&source, k)?;
    let gadget_order = inst.gadget.order();
    let mut text = format!(
        "source order: {}\nout-degree: {}\nk: {k}\ngadget order: {gadget_order}\ngadget arcs: {}\nweight threshold: {}\n",
        source.order(),
        inst.d,
        inst.gadget.arc_count(),
        inst.weight_threshold
    );
    let mut json = json!({
        "n": source.order(),
        "d": inst.d,
        "k": k,
        "gadget_order": gadget_order,
        "gadget_arcs": inst.gadget.arc_count(),
        "weight_threshold": inst.weight_threshold,
    });
    match emit {
        Some("-") => text.push_str(&write_digraph(&inst.gadget)),
        Some(path) => {
            std::fs::write(path, write_digraph(&inst.gadget))
                .map_err(|e| Failure::Parse(format!("writing {path}: {e}")))?;
            let _ = writeln!(text, "gadget written to {path}");
            json["emitted"] = json!(path);
        }
        None => {}
    }
    let mut violation = None;
    if check {
        ctx.check_oracle("gadget order", gadget_order)?;
        let r = equivalence_check(&source, k)?;
        let structural_ok = r.structural.as_ref().is_none_or(|s| s.all_pass());
        let _ = writeln!(
            text,
            "gamma_minus: {} (source side {})\ngadget optimum: {} (gadget side {})\nagree: {}",
            r.gamma_minus,
            if r.source_yes { "yes" } else { "no" },
            r.gamma_maj_gadget,
            if r.gadget_yes { "yes" } else { "no" },
            r.agree
        );
        if let Some(s) = &r.structural {
            let _ = writeln!(text, "structural checks: {}", if s.all_pass() { "pass" } else { "FAIL" });
        }
        if r.source_yes {
            let _ = writeln!(text, "lifted function valid: {}", r.lifted_ok);
        }
        if !r.agree {
            violation = Some(format!(
                "the two sides disagree: gamma_minus {} vs k {k}, gadget optimum {} vs threshold {}",
                r.gamma_minus, r.gamma_maj_gadget, r.weight_threshold
            ));
        } else if !structural_ok {
            violation = Some("a structural check failed on the gadget witness".into());
        }
        json["check"] = serde_json::to_value(&r).expect("report serializes");
    }
    Ok(Report {
        json,
        text,
        violation,
    })
}

fn table(max_n: usize) -> Run<Report> {
    if max_n > MAX_VERTICES {
        return Err(ModfError::TooLarge(max_n).into());
    }
    let rows = comparison_table(max_n)?;
    let mut text = format!(
        "{:<34} {:>3}  {:<9} {:>8} {:>8}  {}\n",
        "family", "n", "quantity", "predicted", "exact", "status"
    );
    for r in &rows {
        let status = match (r.matches, r.formula.is_conjecture()) {
            (true, _) => "MATCH",
            (false, true) => "MISMATCH (conjecture)",
            (false, false) => "MISMATCH",
        };
        let _ = writeln!(
            text,
            "{:<34} {:>3}  {:<9} {:>8} {:>8}  {status}",
            r.family.to_string(),
            r.n,
            r.quantity.symbol(),
            r.predicted.to_string(),
            r.computed
        );
    }
    let violations: Vec<String> = rows
        .iter()
        .filter(|r| r.is_violation())
        .map(|r| format!("{} {}", r.family, r.quantity.symbol()))
        .collect();
    let _ = writeln!(
        text,
        "{} rows, {} match, {} violations",
        rows.len(),
        rows.iter().filter(|r| r.matches).count(),
        violations.len()
    );
    let json = json!({ "rows": rows, "violations": violations.len() });
    Ok(Report {
        json,
        text,
        violation: (!violations.is_empty())
            .then(|| format!("closed form mismatches: {}", violations.join(", "))),
    })
}

fn conjecture(
    which: ConjectureKind,
    max_n: usize,
    source: SourceArg,
    seed: u64,
    samples: usize,
    max_rs: usize,
    max_product: usize,
) -> Run<Report> {
    let report: ConjectureReport = match which {
        ConjectureKind::Regular => {
            let source = match source {
                SourceArg::Tournaments => RegularSource::AllTournaments,
                SourceArg::Fixtures => RegularSource::Fixtures,
                SourceArg::Random => RegularSource::RandomRegularUnderlying { seed, samples },
            };
            scan_conjecture_regular(max_n, source)?
        }
        ConjectureKind::Bipartite => scan_conjecture_bipartite(max_rs, max_product)?,
    };
    let status = serde_json::to_value(report.status).expect("status serializes");
    let mut text = format!(
        "instances checked: {}\nstatus: {}\ncounterexamples: {}\n",
        report.instances_checked,
        status.as_str().unwrap_or_default(),
        report.counterexamples_found
    );
    for row in &report.rows {
        let _ = writeln!(
            text,
            "K{},{}: DOM_plus {} predicted {}{}",
            row.r,
            row.s,
            row.dom_max,
            row.predicted,
            if row.dom_max == row.predicted { "" } else { "  counterexample" }
        );
    }
    if let Some(c) = &report.counterexample {
        let v = serde_json::to_value(c).expect("counterexample serializes");
        let _ = writeln!(text, "first counterexample: {v}");
    }
    let json = serde_json::to_value(&report).expect("report serializes");
    Ok(Report::ok(json, text))
}
