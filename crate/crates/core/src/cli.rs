//! The `tdc` command-line front end.
//!
//! [`run`] takes argv and explicit streams so it can be driven in-process. Exit codes:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success, no findings |
//! | 1 | a Disagree row, an inconsistent check, or a violated bound |
//! | 2 | usage or input error |
//! | 3 | a search or enumeration budget ran out |

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::classifier::{classify, verify_class_theorem, ClassVerdict, ClassifyConfig, GraphClass};
use crate::coloring::Coloring;
use crate::error::{invalid, Error, Result};
use crate::formulas::{
    audit, table, AuditConfig, Claim, ClaimReport, Status, TableFamily, TableRow,
};
use crate::graph::{
    enumerate_graphs, from_edge_list, from_graph6, mycielskian, to_edge_list, to_graph6,
    FamilySpec, Graph, MAX_ENUM_ORDER,
};
use crate::solver::{chi_d_t, SearchConfig, SolveResult, VertexOrder};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FINDINGS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "tdc",
    version,
    about = "Exact total dominator colorings and Mycielskian checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Emit a named graph, an input graph, or every graph of a given order.
    Gen {
        #[command(flatten)]
        input: InputArgs,
        /// Enumerate all graphs on N vertices instead of reading one.
        #[arg(long, value_name = "N", conflicts_with_all = ["family", "edges", "graph6"])]
        exhaustive: Option<usize>,
        #[arg(long, default_value_t = 1, requires = "exhaustive")]
        min_degree: usize,
        #[arg(long, requires = "exhaustive")]
        dedup_isomorphs: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Compute χ_d^t with an optimal witness.
    Compute {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        search: SearchArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Decide Class 1 or Class 2.
    Classify {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        search: SearchArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check the Mycielskian bounds, the class characterization and class preservation.
    Verify {
        #[command(flatten)]
        input: InputArgs,
        /// Check every graph with no isolated vertex on up to N vertices.
        #[arg(long, value_name = "N", conflicts_with_all = ["family", "edges", "graph6"])]
        exhaustive: Option<usize>,
        #[arg(long, requires = "exhaustive")]
        dedup_isomorphs: bool,
        #[command(flatten)]
        search: SearchArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Compare every closed-form claim with exact computation.
    Audit {
        /// Claim id; repeat to select several. All claims when omitted.
        #[arg(long = "claim", value_name = "ID")]
        claims: Vec<String>,
        #[arg(long, value_name = "N")]
        from: Option<usize>,
        #[arg(long, value_name = "N")]
        to: Option<usize>,
        /// Skip instances with more vertices than this.
        #[arg(long, default_value_t = 15)]
        max_order: usize,
        #[command(flatten)]
        search: SearchArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Predicted and computed χ_d^t(G), χ_d^t(M(G)) and class for a family.
    Table {
        /// path, cycle, wheel, comp-cycle or comp-path.
        #[arg(long)]
        family: String,
        #[arg(long, value_name = "N")]
        from: Option<usize>,
        #[arg(long, value_name = "N")]
        to: Option<usize>,
        #[arg(long, default_value_t = 15)]
        max_order: usize,
        #[command(flatten)]
        search: SearchArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Family spec such as `cycle:7`, `myc:path:3` or `comp:cycle:6`.
    #[arg(long, value_name = "SPEC", group = "source")]
    family: Option<String>,
    /// Edge-list file: vertex count, then one `i j` pair per line.
    #[arg(long, value_name = "FILE", group = "source")]
    edges: Option<PathBuf>,
    /// graph6 file, one graph per line.
    #[arg(long, value_name = "FILE", group = "source")]
    graph6: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SearchArgs {
    #[arg(long, env = "TDC_WORKERS", default_value_t = 1, value_name = "N")]
    workers: usize,
    #[arg(long, value_name = "N")]
    node_budget: Option<u64>,
    #[arg(long, value_name = "SECONDS")]
    time_budget: Option<f64>,
    /// Optimal colorings examined before a Class 2 verdict is abandoned.
    #[arg(long, value_name = "N")]
    max_colorings: Option<u64>,
    #[arg(long, value_enum, default_value_t = OrderArg::Degeneracy)]
    order: OrderArg,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OrderArg {
    Degeneracy,
    MaxDegree,
    Natural,
}

#[derive(Debug, Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Include node counts and timings, which make output vary between runs.
    #[arg(long)]
    stats: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
    Tsv,
}

impl SearchArgs {
    fn config(&self) -> Result<SearchConfig> {
        let mut cfg = SearchConfig::default()
            .with_workers(self.workers)
            .with_order(match self.order {
                OrderArg::Degeneracy => VertexOrder::Degeneracy,
                OrderArg::MaxDegree => VertexOrder::MaxDegreeFirst,
                OrderArg::Natural => VertexOrder::Natural,
            });
        if let Some(nodes) = self.node_budget {
            cfg = cfg.with_node_budget(nodes);
        }
        if let Some(secs) = self.time_budget {
            let budget = Duration::try_from_secs_f64(secs)
                .map_err(|_| invalid(format!("time budget {secs} is not a valid duration")))?;
            cfg = cfg.with_time_budget(budget);
        }
        Ok(cfg)
    }

    fn classify_config(&self) -> Result<ClassifyConfig> {
        Ok(ClassifyConfig {
            search: self.config()?,
            max_colorings: self.max_colorings,
        })
    }
}

/// Parse `args` (program name first), run the command, and return the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    match dispatch(cli.command, stdin, out) {
        Ok(code) => code,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
        Err(Failure::Tdc(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } | Error::Inconclusive { .. } => EXIT_BUDGET,
        Error::BoundsViolated { .. } => EXIT_FINDINGS,
        _ => EXIT_USAGE,
    }
}

enum Failure {
    Io(std::io::Error),
    Tdc(Error),
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Tdc(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.into())
    }
}

type Outcome = std::result::Result<i32, Failure>;

fn dispatch(command: Command, stdin: &mut dyn Read, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Gen {
            input,
            exhaustive,
            min_degree,
            dedup_isomorphs,
            output,
        } => {
            let graphs = match exhaustive {
                Some(n) => enumerate_graphs(n, min_degree, dedup_isomorphs)?.collect(),
                None => read_graphs(&input, stdin)?,
            };
            gen(&graphs, exhaustive.is_some(), &output, out)
        }
        Command::Compute {
            input,
            search,
            output,
        } => {
            let cfg = search.config()?;
            for g in read_graphs(&input, stdin)? {
                let solved = chi_d_t(&g, &cfg)?;
                emit_compute(&g, &solved, &output, out)?;
            }
            Ok(EXIT_OK)
        }
        Command::Classify {
            input,
            search,
            output,
        } => {
            let cfg = search.classify_config()?;
            for g in read_graphs(&input, stdin)? {
                let verdict = classify(&g, &cfg)?;
                emit_classify(&g, &verdict, &output, out)?;
            }
            Ok(EXIT_OK)
        }
        Command::Verify {
            input,
            exhaustive,
            dedup_isomorphs,
            search,
            output,
        } => {
            let graphs = match exhaustive {
                Some(n) => {
                    if !(1..=MAX_ENUM_ORDER).contains(&n) {
                        return Err(invalid(format!(
                            "--exhaustive must be in 1..={MAX_ENUM_ORDER}"
                        ))
                        .into());
                    }
                    let mut all = Vec::new();
                    for k in 1..=n {
                        all.extend(enumerate_graphs(k, 1, dedup_isomorphs)?);
                    }
                    all
                }
                None => read_graphs(&input, stdin)?,
            };
            verify(&graphs, &search.classify_config()?, &output, out)
        }
        Command::Audit {
            claims,
            from,
            to,
            max_order,
            search,
            output,
        } => {
            let claims = if claims.is_empty() {
                Claim::ALL.to_vec()
            } else {
                claims
                    .iter()
                    .map(|c| c.parse())
                    .collect::<Result<Vec<Claim>>>()?
            };
            let cfg = audit_config(&search, max_order)?;
            let reports = audit(&claims, from, to, &cfg)?;
            emit_audit(&reports, &output, out)?;
            Ok(findings_code(reports.iter()))
        }
        Command::Table {
            family,
            from,
            to,
            max_order,
            search,
            output,
        } => {
            let fam: TableFamily = family.parse()?;
            let from = from.unwrap_or(fam.min_param());
            let to = to.unwrap_or(from.max(12));
            let rows = table(fam, from, to, &audit_config(&search, max_order)?)?;
            emit_table(&rows, &output, out)?;
            Ok(findings_code(rows.iter().flat_map(TableRow::reports)))
        }
    }
}

/// Batch commands parallelize over instances; each instance is solved on one thread.
fn audit_config(search: &SearchArgs, max_order: usize) -> Result<AuditConfig> {
    let cfg = search.classify_config()?;
    Ok(AuditConfig {
        search: cfg.search.clone().with_workers(1),
        max_colorings: cfg.max_colorings.or(AuditConfig::default().max_colorings),
        max_order,
        workers: search.workers,
    })
}

fn findings_code<'a>(reports: impl Iterator<Item = &'a ClaimReport>) -> i32 {
    let mut code = EXIT_OK;
    for r in reports {
        match r.status {
            Status::Disagree => return EXIT_FINDINGS,
            Status::Inconclusive => code = EXIT_BUDGET,
            _ => {}
        }
    }
    code
}

fn read_graphs(
    input: &InputArgs,
    stdin: &mut dyn Read,
) -> std::result::Result<Vec<Graph>, Failure> {
    if let Some(spec) = &input.family {
        let spec: FamilySpec = spec.parse()?;
        return Ok(vec![spec.build()?]);
    }
    let (text, graph6) = match (&input.edges, &input.graph6) {
        (Some(path), _) => (read_file(path)?, false),
        (_, Some(path)) => (read_file(path)?, true),
        _ => {
            let mut text = String::new();
            stdin.read_to_string(&mut text)?;
            let graph6 = looks_like_graph6(&text);
            (text, graph6)
        }
    };
    if graph6 {
        parse_graph6_lines(&text).map_err(Failure::from)
    } else {
        Ok(vec![from_edge_list(&text)?])
    }
}

fn read_file(path: &std::path::Path) -> std::io::Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| std::io::Error::new(e.kind(), format!("{}: {e}", path.display())))
}

/// graph6 bytes never include digits, which every edge list starts with.
fn looks_like_graph6(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .is_some_and(|l| l.bytes().all(|b| (63..=126).contains(&b)))
}

fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    let mut graphs = Vec::new();
    let mut offset = 0;
    for (idx, line) in text.split_inclusive('\n').enumerate() {
        if !line.trim().is_empty() {
            let g = from_graph6(line).map_err(|e| match e {
                Error::Parse { byte, message, .. } => Error::Parse {
                    line: idx + 1,
                    byte: offset + byte,
                    message,
                },
                other => other,
            })?;
            graphs.push(g);
        }
        offset += line.len();
    }
    if graphs.is_empty() {
        return Err(invalid("no graphs in input"));
    }
    Ok(graphs)
}

fn g6(g: &Graph) -> String {
    to_graph6(g).unwrap_or_default()
}

fn json_line(out: &mut dyn Write, value: &impl Serialize) -> std::result::Result<(), Failure> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn gen(graphs: &[Graph], listing: bool, output: &OutputArgs, out: &mut dyn Write) -> Outcome {
    for g in graphs {
        match output.format {
            Format::Human if listing => writeln!(out, "{}", g6(g))?,
            Format::Human => write!(out, "{}", to_edge_list(g))?,
            Format::Tsv => writeln!(out, "{}\t{}\t{}", g6(g), g.order(), g.size())?,
            Format::Json => json_line(
                out,
                &json!({
                    "graph": g6(g),
                    "n": g.order(),
                    "m": g.size(),
                    "edges": g.edges().map(|(i, j)| [i, j]).collect::<Vec<_>>(),
                }),
            )?,
        }
    }
    Ok(EXIT_OK)
}

fn stats_fields(record: &mut Value, solved: &SolveResult) {
    record["nodes_explored"] = json!(solved.nodes_explored);
    record["elapsed_ms"] = json!(solved.elapsed.as_secs_f64() * 1e3);
}

fn emit_compute(
    g: &Graph,
    solved: &SolveResult,
    output: &OutputArgs,
    out: &mut dyn Write,
) -> Outcome {
    match output.format {
        Format::Json => {
            let mut record = json!({
                "graph": g6(g),
                "n": g.order(),
                "m": g.size(),
                "chi_d_t": solved.value,
                "witness": solved.witness,
            });
            if output.stats {
                stats_fields(&mut record, solved);
            }
            json_line(out, &record)?;
        }
        Format::Tsv => {
            write!(
                out,
                "{}\t{}\t{}\t{}\t{}",
                g6(g),
                g.order(),
                g.size(),
                solved.value,
                solved.witness
            )?;
            if output.stats {
                write!(
                    out,
                    "\t{}\t{:.3}",
                    solved.nodes_explored,
                    solved.elapsed.as_secs_f64() * 1e3
                )?;
            }
            writeln!(out)?;
        }
        Format::Human => {
            writeln!(
                out,
                "graph    {} (n = {}, m = {})",
                g6(g),
                g.order(),
                g.size()
            )?;
            writeln!(out, "chi_d_t  {}", solved.value)?;
            writeln!(out, "witness  {}", solved.witness)?;
            if output.stats {
                writeln!(out, "nodes    {}", solved.nodes_explored)?;
                writeln!(out, "elapsed  {:.3} ms", solved.elapsed.as_secs_f64() * 1e3)?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn emit_classify(g: &Graph, v: &ClassVerdict, output: &OutputArgs, out: &mut dyn Write) -> Outcome {
    match output.format {
        Format::Json => json_line(
            out,
            &json!({
                "graph": g6(g),
                "n": g.order(),
                "m": g.size(),
                "class": v.class,
                "chi_d_t": v.chi_d_t,
                "witness": v.witness,
                "empty_pn_class": v.empty_pn_class,
                "colorings_examined": v.colorings_examined,
            }),
        )?,
        Format::Tsv => writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}",
            g6(g),
            g.order(),
            g.size(),
            v.class,
            v.chi_d_t,
            v.witness,
            v.empty_pn_class.map_or("-".to_string(), |i| i.to_string()),
        )?,
        Format::Human => {
            writeln!(
                out,
                "graph    {} (n = {}, m = {})",
                g6(g),
                g.order(),
                g.size()
            )?;
            writeln!(out, "class    {}", v.class)?;
            writeln!(out, "chi_d_t  {}", v.chi_d_t)?;
            writeln!(out, "witness  {}", v.witness)?;
            if let Some(i) = v.empty_pn_class {
                writeln!(out, "empty private neighborhood: class {i}")?;
            }
            writeln!(out, "optimal colorings examined: {}", v.colorings_examined)?;
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct VerifyRecord {
    graph: String,
    n: usize,
    m: usize,
    chi_d_t: usize,
    chi_d_t_mycielskian: usize,
    delta: i64,
    class: GraphClass,
    witness: Coloring,
    empty_pn_class: Option<usize>,
    within_bounds: bool,
    consistent: bool,
    /// Class of M(G), checked only when G is in Class 1.
    mycielskian_class: Option<GraphClass>,
    ok: bool,
}

fn verify(
    graphs: &[Graph],
    cfg: &ClassifyConfig,
    output: &OutputArgs,
    out: &mut dyn Write,
) -> Outcome {
    let (mut checked, mut failed) = (0usize, 0usize);
    for g in graphs {
        let check = verify_class_theorem(g, cfg)?;
        let mycielskian_class = match check.verdict.class {
            GraphClass::One => Some(classify(&mycielskian(g), cfg)?.class),
            GraphClass::Two => None,
        };
        let within_bounds = check.within_bounds();
        let ok = within_bounds && check.consistent && mycielskian_class != Some(GraphClass::Two);
        let record = VerifyRecord {
            graph: check.graph,
            n: check.n,
            m: check.m,
            chi_d_t: check.chi_d_t,
            chi_d_t_mycielskian: check.chi_d_t_mycielskian,
            delta: check.delta,
            class: check.verdict.class,
            witness: check.verdict.witness,
            empty_pn_class: check.verdict.empty_pn_class,
            within_bounds,
            consistent: check.consistent,
            mycielskian_class,
            ok,
        };
        checked += 1;
        failed += usize::from(!ok);
        match output.format {
            Format::Json => json_line(out, &record)?,
            Format::Tsv => writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                record.graph,
                record.n,
                record.m,
                record.chi_d_t,
                record.chi_d_t_mycielskian,
                record.delta,
                record.class,
                record
                    .mycielskian_class
                    .map_or("-".to_string(), |c| c.to_string()),
                if ok { "ok" } else { "FAIL" },
            )?,
            Format::Human if graphs.len() == 1 || !ok => writeln!(
                out,
                "{:<12} chi_d_t {} -> {} (delta {}), class {}{}  {}",
                record.graph,
                record.chi_d_t,
                record.chi_d_t_mycielskian,
                record.delta,
                record.class,
                record
                    .mycielskian_class
                    .map_or(String::new(), |c| format!(", M(G) class {c}")),
                if ok { "ok" } else { "FAIL" },
            )?,
            Format::Human => {}
        }
    }
    if output.format == Format::Human {
        writeln!(out, "{checked} graphs checked, {failed} failed")?;
    }
    Ok(if failed > 0 { EXIT_FINDINGS } else { EXIT_OK })
}

fn show(o: Option<impl std::fmt::Display>) -> String {
    o.map_or("-".to_string(), |v| v.to_string())
}

fn emit_audit(
    reports: &[ClaimReport],
    output: &OutputArgs,
    out: &mut dyn Write,
) -> std::result::Result<(), Failure> {
    match output.format {
        Format::Json => {
            for r in reports {
                json_line(out, r)?;
            }
        }
        Format::Tsv => {
            writeln!(out, "claim_id\tn\tpredicted\tcomputed\tstatus\tnotes")?;
            for r in reports {
                writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{:?}\t{}",
                    r.claim_id,
                    r.n,
                    show(r.predicted),
                    show(r.computed),
                    r.status,
                    r.notes
                )?;
            }
        }
        Format::Human => {
            writeln!(
                out,
                "{:<20} {:>3}  {:>9}  {:>8}  {:<12} notes",
                "claim", "n", "predicted", "computed", "status"
            )?;
            for r in reports {
                writeln!(
                    out,
                    "{:<20} {:>3}  {:>9}  {:>8}  {:<12} {}",
                    r.claim_id,
                    r.n,
                    show(r.predicted),
                    show(r.computed),
                    format!("{:?}", r.status),
                    r.notes
                )?;
            }
            let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
            writeln!(
                out,
                "{} agree, {} disagree, {} inapplicable, {} inconclusive",
                count(Status::Agree),
                count(Status::Disagree),
                count(Status::Inapplicable),
                count(Status::Inconclusive)
            )?;
        }
    }
    Ok(())
}

fn emit_table(
    rows: &[TableRow],
    output: &OutputArgs,
    out: &mut dyn Write,
) -> std::result::Result<(), Failure> {
    let mark = |r: &ClaimReport| match r.status {
        Status::Agree => "",
        Status::Disagree => " !",
        Status::Inapplicable | Status::Inconclusive => " ?",
    };
    match output.format {
        Format::Json => {
            for row in rows {
                json_line(out, row)?;
            }
        }
        Format::Tsv | Format::Human => {
            let human = output.format == Format::Human;
            if human {
                writeln!(
                    out,
                    "{:>3}  {:>10}  {:>10}  {:>10}  {:>10}  {:>10}  {:>10}",
                    "n", "chi pred", "chi", "chiM pred", "chiM", "class pred", "class"
                )?;
            } else {
                writeln!(
                    out,
                    "n\tchi_pred\tchi\tchi_myc_pred\tchi_myc\tclass_pred\tclass"
                )?;
            }
            for row in rows {
                let cells: Vec<(String, String)> = row
                    .reports()
                    .iter()
                    .map(|r| {
                        (
                            show(r.predicted),
                            format!("{}{}", show(r.computed), mark(r)),
                        )
                    })
                    .collect();
                if human {
                    writeln!(
                        out,
                        "{:>3}  {:>10}  {:>10}  {:>10}  {:>10}  {:>10}  {:>10}",
                        row.n,
                        cells[0].0,
                        cells[0].1,
                        cells[1].0,
                        cells[1].1,
                        cells[2].0,
                        cells[2].1
                    )?;
                } else {
                    writeln!(
                        out,
                        "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                        row.n,
                        cells[0].0,
                        show(row.chi_d_t.computed),
                        cells[1].0,
                        show(row.chi_d_t_mycielskian.computed),
                        cells[2].0,
                        show(row.class.computed)
                    )?;
                }
            }
            if human {
                writeln!(out, "! disagrees with the prediction, ? not checked")?;
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str], stdin: &str) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("tdc").chain(args.iter().copied());
        let code = run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn compute_cycle_four() {
        let (code, out, _) = run_str(&["compute", "--family", "cycle:4", "--format", "json"], "");
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(v["chi_d_t"], 2);
        assert!(v.get("nodes_explored").is_none());
    }

    #[test]
    fn stdin_detection() {
        let (code, out, _) = run_str(&["compute", "--format", "tsv"], "Bw\n");
        assert_eq!((code, out.split('\t').nth(3)), (0, Some("3")));
        let (code, out, _) = run_str(&["compute", "--format", "tsv"], "2\n0 1\n");
        assert_eq!((code, out.split('\t').nth(3)), (0, Some("2")));
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_str(&["compute", "--family", "cycle:2"], "").0, 2);
        assert_eq!(
            run_str(&["compute", "--family", "path:3", "--edges", "x"], "").0,
            2
        );
        assert_eq!(run_str(&["frobnicate"], "").0, 2);
        assert_eq!(run_str(&["audit", "--claim", "nope"], "").0, 2);
        let (code, _, err) = run_str(&["compute"], "3\n0 1\n");
        assert_eq!(code, 2);
        assert!(err.contains("isolated"));
    }

    #[test]
    fn help_goes_to_stdout() {
        let (code, out, _) = run_str(&["--help"], "");
        assert_eq!(code, 0);
        assert!(out.contains("classify"));
    }

    #[test]
    fn budget_exit_code() {
        let (code, _, err) = run_str(
            &["compute", "--family", "myc:cycle:5", "--node-budget", "3"],
            "",
        );
        assert_eq!(code, 3);
        assert!(err.contains("budget"));
    }

    #[test]
    fn graph6_errors_carry_line_numbers() {
        let (code, _, err) = run_str(&["compute"], "Bw\nB!\n");
        assert_eq!(code, 2);
        assert!(err.contains("line 2"), "{err}");
    }
}
