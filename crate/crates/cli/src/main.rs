//! `coalition`: command-line front end for coalition partitions.
//!
//! Exit codes: 0 success, 2 bad input, 3 a size or search limit was hit,
//! 4 a result disagrees with a published value.

use std::fmt::Write as _;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use coalition_core::catalog::{all_graphs, all_trees, classify_cp, make_named, CpClass};
use coalition_core::census::{
    expected_cell, path_grid, verify_constructions, verify_low_degree_labeled, verify_theorems, ConstructionOutcome,
    TheoremReport,
};
use coalition_core::io::{parse_edge_list, parse_graph6, to_graph6};
use coalition_core::{
    census_path, coalition_graph, coalition_number_with, validate_partition, BlockStatus, Error, Graph, Method,
    SolverConfig, SolverError, SolverResult, VertexPartition,
};

#[derive(Parser)]
#[command(name = "coalition", version, about = "Coalition numbers, coalition graphs and path censuses")]
struct Cli {
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute C(G) with a witness partition.
    Number {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, value_enum, default_value_t = MethodArg::Bnb)]
        method: MethodArg,
        /// Stop branch and bound after this many search nodes.
        #[arg(long)]
        node_limit: Option<u64>,
        /// Stop branch and bound after this many seconds.
        #[arg(long)]
        time_limit: Option<f64>,
        /// Print the witness with 1-based vertices.
        #[arg(long)]
        one_indexed: bool,
    },
    /// Validate a partition such as `0,3|1|2` and classify its coalition graph.
    Check {
        #[command(flatten)]
        graph: GraphArg,
        /// Blocks separated by `|`, vertices by `,`.
        partition: Option<String>,
        /// Read the partition with 1-based vertices.
        #[arg(long)]
        one_indexed: bool,
        /// Write the coalition graph in DOT format to this file.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Exhaustive census of every coalition partition of P_k.
    Census { k: usize },
    /// Census of P_1 .. P_kmax compared against the published grid.
    Grid {
        kmax: usize,
        /// Emit `k,class,Y|N,witness` lines instead of the grid.
        #[arg(long)]
        lines: bool,
    },
    /// Exhaustive checks of the low-degree and tree characterisations.
    Verify {
        /// Isomorphism classes of graphs on up to this many vertices.
        #[arg(long, default_value_t = 0)]
        graphs: usize,
        /// Free trees on up to this many vertices.
        #[arg(long, default_value_t = 0)]
        trees: usize,
        /// Every labeled graph on exactly this many vertices.
        #[arg(long, default_value_t = 0)]
        labeled: usize,
    },
    /// Replay every explicit path construction for k up to kmax.
    Props {
        #[arg(long, default_value_t = 30)]
        kmax: usize,
    },
    /// Print graphs of a given order as graph6 lines.
    Graphs {
        n: usize,
        /// Trees only.
        #[arg(long)]
        trees: bool,
        /// Connected graphs only.
        #[arg(long)]
        connected: bool,
    },
}

#[derive(Args)]
struct GraphArg {
    /// Named graph such as `P5`, `C7`, `K1,3` or `K1uK2`.
    spec: Option<String>,
    /// Edge-list file: a header `n m`, then one `u v` pair per line.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Graph in graph6 format.
    #[arg(long)]
    graph6: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Enumerate,
    Bnb,
}

enum Failure {
    Input(String),
    Limit(String),
    Mismatch,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::TooLarge(_) | Error::TooLargeForEnumeration { .. } => Failure::Limit(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

impl GraphArg {
    fn load(&self) -> Result<Graph, Failure> {
        match (&self.spec, &self.file, &self.graph6) {
            (Some(s), None, None) => Ok(make_named(s)?),
            (None, Some(path), None) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
                Ok(parse_edge_list(&text)?)
            }
            (None, None, Some(g6)) => Ok(parse_graph6(g6)?),
            _ => Err(Failure::Input(
                "give exactly one of a named graph, --file or --graph6".into(),
            )),
        }
    }
}

fn status_text(s: &BlockStatus) -> String {
    match s {
        BlockStatus::SingletonDominating => "dominating singleton".into(),
        BlockStatus::HasPartner(p) => {
            let p: Vec<String> = p.iter().map(usize::to_string).collect();
            format!("partners {}", p.join(","))
        }
        BlockStatus::Orphan => "no partner".into(),
        BlockStatus::OversizeDominating => "dominating with more than one vertex".into(),
    }
}

fn print_result(out: &mut impl Write, r: &SolverResult, one_indexed: bool) -> io::Result<()> {
    writeln!(out, "C={}", r.value)?;
    match &r.witness {
        Some(w) if one_indexed => writeln!(out, "witness={}", w.to_one_indexed_string())?,
        Some(w) => writeln!(out, "witness={w}")?,
        None => writeln!(out, "witness=none")?,
    }
    writeln!(out, "upper_bound={}", r.upper_bound)?;
    writeln!(out, "exact={}", r.exact)?;
    writeln!(out, "partitions_examined={}", r.stats.partitions_examined)?;
    writeln!(out, "nodes_pruned={}", r.stats.nodes_pruned)?;
    eprintln!("elapsed_ms={}", r.stats.elapsed.as_millis());
    Ok(())
}

fn number(
    out: &mut impl Write,
    graph: &GraphArg,
    method: MethodArg,
    node_limit: Option<u64>,
    time_limit: Option<f64>,
    one_indexed: bool,
) -> Outcome {
    let g = graph.load()?;
    let mut cfg = SolverConfig::new(match method {
        MethodArg::Enumerate => Method::Enumerate,
        MethodArg::Bnb => Method::BranchAndBound,
    });
    if let Some(nodes) = node_limit {
        cfg = cfg.with_node_limit(nodes);
    }
    if let Some(secs) = time_limit {
        let limit = Duration::try_from_secs_f64(secs)
            .map_err(|_| Failure::Input(format!("bad time limit {secs}")))?;
        cfg = cfg.with_time_limit(limit);
    }
    match coalition_number_with(&g, &cfg) {
        Ok(r) => Ok(print_result(out, &r, one_indexed)?),
        Err(SolverError::Graph(e)) => Err(e.into()),
        Err(SolverError::LimitExceeded(r)) => {
            print_result(out, &r, one_indexed)?;
            Err(Failure::Limit("search limit exceeded; value is a lower bound".into()))
        }
    }
}

fn check(
    out: &mut impl Write,
    graph: &GraphArg,
    partition: Option<&str>,
    one_indexed: bool,
    dot: Option<&PathBuf>,
) -> Outcome {
    // With --file or --graph6 the only positional is the partition.
    let (g, text) = match (partition, &graph.spec) {
        (Some(text), _) => (graph.load()?, text),
        (None, Some(text)) if graph.file.is_some() || graph.graph6.is_some() => {
            let source = GraphArg {
                spec: None,
                file: graph.file.clone(),
                graph6: graph.graph6.clone(),
            };
            (source.load()?, text.as_str())
        }
        _ => return Err(Failure::Input("missing partition".into())),
    };
    let p = VertexPartition::parse(text, g.order(), one_indexed)?;
    let validity = validate_partition(&g, &p)?;
    writeln!(out, "verdict={:?}", validity.verdict)?;
    for (i, (block, status)) in p.blocks().iter().zip(&validity.blocks).enumerate() {
        writeln!(out, "block {i} {{{block}}}: {}", status_text(status))?;
    }
    if validity.is_valid() {
        let cg = coalition_graph(&g, &p)?;
        let edges: Vec<String> = cg.graph.edges().map(|(u, v)| format!("{u}-{v}")).collect();
        writeln!(out, "cg_edges={}", edges.join(" "))?;
        writeln!(out, "class={}", classify_cp(&cg.graph).name())?;
        if let Some(path) = dot {
            std::fs::write(path, cg.to_dot())?;
        }
    }
    Ok(())
}

fn census(out: &mut impl Write, k: usize) -> Outcome {
    let r = census_path(k)?;
    writeln!(out, "k={k}")?;
    writeln!(out, "NC={}", r.nc())?;
    writeln!(out, "partitions_scanned={}", r.partitions_scanned)?;
    writeln!(out, "valid_partitions={}", r.valid_partitions)?;
    writeln!(out, "max_blocks={}", r.max_blocks)?;
    let mut mismatch = r.outside_count() > 0;
    for class in CpClass::MEMBERS {
        let found = r.realizes(class);
        let published = expected_cell(class, k).expect("member").realizable;
        let mark = if found == published { "" } else { " *" };
        mismatch |= found != published;
        match r.witnesses.get(&class) {
            Some(w) => writeln!(out, "{} Y count={} witness={w}{mark}", class.name(), r.counts[&class])?,
            None => writeln!(out, "{} N{mark}", class.name())?,
        }
    }
    writeln!(out, "outside={}", r.outside_count())?;
    eprintln!("elapsed_ms={}", r.elapsed.as_millis());
    if mismatch {
        Err(Failure::Mismatch)
    } else {
        Ok(())
    }
}

fn table(out: &mut impl Write, kmax: usize, lines: bool) -> Outcome {
    let report = path_grid(kmax)?;
    if lines {
        for l in report.lines() {
            writeln!(out, "{l}")?;
        }
    } else {
        write!(out, "{}", report.render())?;
        for m in &report.mismatches {
            let published = if m.expected.realizable { "Y" } else { "N" };
            writeln!(out, "mismatch {} P{}: published {published}", m.class.name(), m.k)?;
        }
        for (k, got, published) in &report.nc_mismatches {
            writeln!(out, "mismatch NC P{k}: census {got}, published {published}")?;
        }
    }
    if report.agrees() {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn theorem_lines(out: &mut impl Write, scope: &str, report: &TheoremReport) -> io::Result<bool> {
    for c in &report.checks {
        let verdict = if c.passed() { "ok" } else { "FAILED" };
        writeln!(out, "{scope} {} {verdict} examined={}: {}", c.name, c.examined, c.statement)?;
        for f in &c.failures {
            writeln!(out, "  counterexample {f}")?;
        }
    }
    Ok(report.all_passed())
}

fn verify(out: &mut impl Write, graphs: usize, trees: usize, labeled: usize) -> Outcome {
    if graphs == 0 && trees == 0 && labeled == 0 {
        return Err(Failure::Input("nothing to verify; pass --graphs, --trees or --labeled".into()));
    }
    let mut ok = true;
    if graphs > 0 || trees > 0 {
        ok &= theorem_lines(out, "classes", &verify_theorems(graphs, trees)?)?;
    }
    if labeled > 0 {
        ok &= theorem_lines(out, "labeled", &verify_low_degree_labeled(labeled)?)?;
    }
    if ok {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn props(out: &mut impl Write, kmax: usize) -> Outcome {
    let report = verify_constructions(kmax)?;
    let mut line = String::new();
    for c in &report.checks {
        line.clear();
        let _ = write!(line, "{} k={}: ", c.id, c.k);
        match &c.outcome {
            ConstructionOutcome::Confirmed => line.push_str("ok"),
            ConstructionOutcome::Malformed(why) => {
                let _ = write!(line, "not a partition ({why})");
            }
            ConstructionOutcome::NotCoalition => line.push_str("not a coalition partition"),
            ConstructionOutcome::WrongClass(got) => {
                let _ = write!(line, "wrong class {}", got.name());
            }
        }
        writeln!(out, "{line}")?;
    }
    let failed = report.failures().count();
    writeln!(out, "confirmed {}/{}", report.checks.len() - failed, report.checks.len())?;
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn graphs(out: &mut impl Write, n: usize, trees: bool, connected: bool) -> Outcome {
    let list = if trees { all_trees(n)? } else { all_graphs(n)? };
    for g in list.iter().filter(|g| !connected || g.is_connected()) {
        writeln!(out, "{}", to_graph6(g))?;
    }
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| Failure::Input(e.to_string()))?;
    }
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = match &cli.command {
        Command::Number {
            graph,
            method,
            node_limit,
            time_limit,
            one_indexed,
        } => number(&mut out, graph, *method, *node_limit, *time_limit, *one_indexed),
        Command::Check {
            graph,
            partition,
            one_indexed,
            dot,
        } => check(&mut out, graph, partition.as_deref(), *one_indexed, dot.as_ref()),
        Command::Census { k } => census(&mut out, *k),
        Command::Grid { kmax, lines } => table(&mut out, *kmax, *lines),
        Command::Verify { graphs, trees, labeled } => verify(&mut out, *graphs, *trees, *labeled),
        Command::Props { kmax } => props(&mut out, *kmax),
        Command::Graphs { n, trees, connected } => graphs(&mut out, *n, *trees, *connected),
    };
    out.flush()?;
    result
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Limit(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Mismatch) => {
            eprintln!("disagreement with published values");
            ExitCode::from(4)
        }
    }
}
