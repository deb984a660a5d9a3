use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use arindex::check::{is_ar_labeling, load_labeling, save_labeling, Labeling};
use arindex::dss::{colliding_subsets, enumerate_dss_sets, is_dss};
use arindex::error::{Error, Result};
use arindex::es::{es, EsConfig};
use arindex::graph::{load_graph, save_graph, Family, Graph};
use arindex::repro::{reproduce, ReproOptions};
use arindex::solver::{
    ari, disjoint_dss_cover, embed_in_ar_graph, label_wheel, AriStatus, CoverOutcome, Feasibility, SearchConfig,
};

const EXIT_VIOLATION: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(
    name = "arindex",
    version,
    about = "Distinct-subset-sum sets, the ES-sequence and AR-labelings of graphs"
)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Wall-clock budget, e.g. `30s`, `5m`, `2h`.
    #[arg(long, global = true, value_parser = humantime::parse_duration)]
    budget: Option<Duration>,
    /// Worker threads for the searches.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    /// Where to write the main artifact (witness labeling, sets or report).
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    /// JSON on stdout.
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Compute ES(n), the least maximum of an n-element DSS set.
    Es { n: usize },
    /// Distinct-subset-sum set utilities.
    #[command(subcommand)]
    Dss(DssCommand),
    /// Check a labeling file against a graph file.
    Verify { graph: PathBuf, labeling: PathBuf },
    /// Compute the AR-index of a family (e.g. `bistar 3 3`) or a graph file.
    Ari {
        #[command(flatten)]
        graph: GraphArgs,
        /// Put the largest label on edge 0 for edge-transitive families.
        #[arg(long)]
        symmetry_breaking: bool,
    },
    /// Look for m disjoint n-element DSS subsets of 1..mn.
    Cover { m: usize, n: usize },
    /// Label the wheel W_n with maximum label ES(n - 1).
    Wheel { n: usize },
    /// Build an AR-graph containing the given graph as an induced subgraph.
    Embed {
        #[command(flatten)]
        graph: GraphArgs,
        /// Where to write the supergraph.
        #[arg(long)]
        graph_output: Option<PathBuf>,
    },
    /// Recompute the published results and compare.
    Reproduce {
        #[arg(long)]
        include_heavy: bool,
    },
}

#[derive(Subcommand)]
enum DssCommand {
    /// Whether the given positive integers have distinct subset sums.
    Check {
        #[arg(required = true)]
        elements: Vec<u64>,
    },
    /// List all DSS sets of a given size with maximum at most `cap`.
    #[command(alias = "enumerate")]
    Enum {
        #[arg(long)]
        size: usize,
        #[arg(long)]
        cap: u64,
    },
}

#[derive(Args)]
struct GraphArgs {
    /// Family spec: star N, bistar A B, path N, cycle N, complete N,
    /// bipartite M N, multipartite A,B,C, wheel N.
    spec: Vec<String>,
    /// Graph file instead of a family spec.
    #[arg(long, conflicts_with = "spec")]
    graph: Option<PathBuf>,
}

impl GraphArgs {
    fn load(&self) -> Result<Graph> {
        match &self.graph {
            Some(path) => load_graph(path),
            None if self.spec.is_empty() => Err(Error::InvalidInput(
                "give a family spec such as `complete 5` or --graph FILE".into(),
            )),
            None => Family::from_args(&self.spec)?.build(),
        }
    }
}

struct Ctx {
    common: Common,
}

impl Ctx {
    fn search(&self) -> SearchConfig {
        SearchConfig {
            budget: self.common.budget,
            threads: self.common.threads,
            ..SearchConfig::default()
        }
    }

    fn machine(&self) -> bool {
        self.common.format == Format::Machine
    }

    fn emit<T: Serialize>(&self, value: &T, text: impl FnOnce() -> String) {
        if self.machine() {
            println!("{}", serde_json::to_string_pretty(value).expect("serializable output"));
        } else {
            println!("{}", text());
        }
    }

    fn write_output(&self, contents: &str) -> Result<()> {
        if let Some(path) = &self.common.output {
            write_file(path, contents)?;
        }
        Ok(())
    }

    fn write_labeling(&self, l: &Labeling) -> Result<()> {
        match &self.common.output {
            Some(path) => save_labeling(l, path),
            None => Ok(()),
        }
    }
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn show_set(mask: u64, elements: &[u64]) -> String {
    let picked: Vec<String> = (0..elements.len())
        .filter(|&i| mask >> i & 1 == 1)
        .map(|i| elements[i].to_string())
        .collect();
    format!("{{{}}}", picked.join(", "))
}

fn cmd_es(ctx: &Ctx, n: usize) -> Result<u8> {
    let rec = es(
        n,
        &EsConfig {
            budget: ctx.common.budget,
            threads: ctx.common.threads,
        },
    )?;
    ctx.emit(&rec, || rec.to_string());
    ctx.write_output(&serde_json::to_string_pretty(&rec.witness).expect("serializable"))?;
    Ok(if rec.is_exact() { 0 } else { EXIT_BUDGET })
}

fn cmd_dss(ctx: &Ctx, cmd: &DssCommand) -> Result<u8> {
    match cmd {
        DssCommand::Check { elements } => {
            let ok = is_dss(elements)?;
            let pair = if ok { None } else { colliding_subsets(elements) };
            let shown = pair.map(|(a, b)| (show_set(a, elements), show_set(b, elements)));
            let sum = pair.map(|(a, _)| {
                (0..elements.len())
                    .filter(|&i| a >> i & 1 == 1)
                    .map(|i| elements[i])
                    .sum::<u64>()
            });
            ctx.emit(&json!({ "dss": ok, "collision": shown, "sum": sum }), || match &shown {
                None => "DSS".to_string(),
                Some((a, b)) => format!("not DSS: {a} and {b} both sum to {}", sum.unwrap_or(0)),
            });
            Ok(if ok { 0 } else { EXIT_VIOLATION })
        }
        DssCommand::Enum { size, cap } => {
            let sets = enumerate_dss_sets(*size, *cap)?;
            ctx.emit(&sets, || {
                let mut out = format!("{} sets", sets.len());
                for s in &sets {
                    out.push('\n');
                    out.push_str(&s.to_string());
                }
                out
            });
            ctx.write_output(&serde_json::to_string_pretty(&sets).expect("serializable"))?;
            Ok(0)
        }
    }
}

fn cmd_verify(ctx: &Ctx, graph: &Path, labeling: &Path) -> Result<u8> {
    let g = load_graph(graph)?;
    let l = load_labeling(labeling)?;
    let verdict = is_ar_labeling(&g, &l)?;
    ctx.emit(&verdict, || verdict.to_string());
    Ok(if verdict.ok { 0 } else { EXIT_VIOLATION })
}

fn cmd_ari(ctx: &Ctx, graph: &GraphArgs, symmetry_breaking: bool) -> Result<u8> {
    let g = graph.load()?;
    let cfg = SearchConfig {
        symmetry_breaking,
        ..ctx.search()
    };
    let res = ari(&g, &cfg)?;
    ctx.emit(&res, || {
        let mut out = res.to_string();
        out.push_str(&format!("\nedges: {}, vertices: {}", res.edges, res.vertices));
        match (res.is_ar_graph(), res.is_almost_ar()) {
            (Some(true), _) => out.push_str("\nAR-graph: yes"),
            (Some(false), Some(true)) => out.push_str("\nAR-graph: no (almost AR)"),
            (Some(false), _) => out.push_str("\nAR-graph: no"),
            (None, _) => out.push_str("\nAR-graph: unknown"),
        }
        if let Some(w) = &res.witness {
            out.push_str(&format!("\nwitness: {w}"));
        }
        for a in &res.attempts {
            let what = match &a.result {
                Feasibility::Found { .. } => "found",
                Feasibility::RefutedByBound => "refuted by bound",
                Feasibility::Refuted => "refuted by search",
                Feasibility::TimedOut => "budget exhausted",
            };
            out.push_str(&format!(
                "\n  k = {}: {what} ({} nodes, {} collision prunes, {} look-ahead prunes, {} ms)",
                a.k, a.stats.nodes, a.stats.collision_prunes, a.stats.lookahead_prunes, a.millis
            ));
        }
        out
    });
    if let Some(w) = &res.witness {
        ctx.write_labeling(w)?;
    }
    Ok(match res.status {
        AriStatus::Exact => 0,
        AriStatus::BoundsOnlyTimeout => EXIT_BUDGET,
    })
}

fn cmd_cover(ctx: &Ctx, m: usize, n: usize) -> Result<u8> {
    let out = disjoint_dss_cover(m, n, &ctx.search())?;
    ctx.emit(&out, || match &out {
        CoverOutcome::Found { sets } => {
            let shown: Vec<String> = sets.iter().map(|s| s.to_string()).collect();
            format!("cover found\n{}", shown.join("\n"))
        }
        CoverOutcome::None => "no cover".to_string(),
        CoverOutcome::TimedOut => "budget exhausted".to_string(),
    });
    Ok(match out {
        CoverOutcome::TimedOut => EXIT_BUDGET,
        _ => 0,
    })
}

fn cmd_wheel(ctx: &Ctx, n: usize) -> Result<u8> {
    let w = label_wheel(n, &ctx.search())?;
    ctx.emit(&w, || {
        let mut out = format!("W_{n}: maximum label {} = ES({})\nlabels: {}", w.es, n - 1, w.labeling);
        if w.greedy_failed {
            out.push_str("\ngreedy rim fill failed; labeled by search");
        }
        out
    });
    ctx.write_labeling(&w.labeling)?;
    Ok(0)
}

fn cmd_embed(ctx: &Ctx, graph: &GraphArgs, graph_output: Option<&Path>) -> Result<u8> {
    let g = graph.load()?;
    let Some(e) = embed_in_ar_graph(&g, &ctx.search())? else {
        ctx.emit(&json!({ "status": "budget-exhausted" }), || {
            "budget exhausted".to_string()
        });
        return Ok(EXIT_BUDGET);
    };
    ctx.emit(&e, || {
        format!(
            "AR supergraph: {} vertices, {} edges (path of {} vertices)\nlabels: {}",
            e.graph.vertex_count(),
            e.graph.edge_count(),
            e.path_len,
            e.labeling
        )
    });
    ctx.write_labeling(&e.labeling)?;
    if let Some(path) = graph_output {
        save_graph(&e.graph, path)?;
    }
    Ok(0)
}

fn cmd_reproduce(ctx: &Ctx, include_heavy: bool) -> Result<u8> {
    let report = reproduce(&ReproOptions {
        include_heavy,
        budget: ctx.common.budget,
        threads: ctx.common.threads,
    })?;
    ctx.emit(&report, || report.to_string());
    ctx.write_output(&report.to_json())?;
    Ok(if report.has_mismatch() { EXIT_VIOLATION } else { 0 })
}

fn run(cli: Cli) -> Result<u8> {
    let ctx = Ctx { common: cli.common };
    match &cli.command {
        Command::Es { n } => cmd_es(&ctx, *n),
        Command::Dss(cmd) => cmd_dss(&ctx, cmd),
        Command::Verify { graph, labeling } => cmd_verify(&ctx, graph, labeling),
        Command::Ari {
            graph,
            symmetry_breaking,
        } => cmd_ari(&ctx, graph, *symmetry_breaking),
        Command::Cover { m, n } => cmd_cover(&ctx, *m, *n),
        Command::Wheel { n } => cmd_wheel(&ctx, *n),
        Command::Embed { graph, graph_output } => cmd_embed(&ctx, graph, graph_output.as_deref()),
        Command::Reproduce { include_heavy } => cmd_reproduce(&ctx, *include_heavy),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Internal(_) => EXIT_VIOLATION,
                _ => EXIT_INPUT,
            })
        }
    }
}
