use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use powergraph::catalog::catalog;
use powergraph::emit::{labeled_to_dot, to_dot, GraphDocument};
use powergraph::expr::{parse_group, Evaluator};
use powergraph::graph::IsoBudget;
use powergraph::power::{
    directed_power_graph, excluded_quotient_power_graph, subgroup_names, undirected_power_graph,
};
use powergraph::verify::{run_catalog_with, RunOptions};
use powergraph::{Error, ExclusionSet};

/// Excluded power graphs of finite groups.
#[derive(Parser)]
#[command(name = "powergraph", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the (excluded) power graph of a group.
    Build {
        /// Group expression, e.g. "A5", "Z3 x Z4", "sdp(Z7, Z3, mult=2)".
        expr: String,
        #[command(flatten)]
        common: GraphArgs,
        /// Emit the directed graph (default).
        #[arg(long, conflicts_with = "undirected")]
        directed: bool,
        /// Emit the undirected graph.
        #[arg(long)]
        undirected: bool,
    },
    /// Emit the labelled quotient graph on cyclic subgroups.
    Quotient {
        expr: String,
        #[command(flatten)]
        common: GraphArgs,
    },
    /// Run every checker over the catalog. Exits 1 on any counterexample or
    /// exhausted budget.
    Verify {
        #[arg(long, default_value_t = 60)]
        max_order: usize,
        #[arg(long, default_value = "2,3,5")]
        primes: String,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
        /// Directory of extra `*.tbl` Cayley tables to include.
        #[arg(long)]
        fixtures: Option<PathBuf>,
        /// Print passing and not-applicable reports too.
        #[arg(long)]
        all: bool,
        /// Backtracking steps allowed per isomorphism query.
        #[arg(long, default_value_t = IsoBudget::default().0)]
        budget: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the catalog.
    Catalog {
        #[arg(long, default_value_t = 60)]
        max_order: usize,
    },
}

#[derive(Args)]
struct GraphArgs {
    /// Comma-separated integers >= 2; empty means nothing is excluded.
    #[arg(long, default_value = "")]
    exclude: String,
    #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
    format: GraphFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

fn write_out(out: &Option<PathBuf>, text: &str) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|source| Error::Io {
            path: path.display().to_string(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn graph_name(expr: &str, exclusion: &ExclusionSet) -> String {
    if exclusion.is_empty() {
        expr.to_string()
    } else {
        format!("{expr} -{exclusion}")
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Build {
            expr,
            common,
            undirected,
            ..
        } => {
            let e = parse_group(&expr)?;
            let g = Evaluator::new().build(&e)?.group;
            let x = ExclusionSet::parse(&common.exclude)?;
            let directed = !undirected;
            let graph = if directed {
                directed_power_graph(&g, &x)
            } else {
                undirected_power_graph(&g, &x)
            };
            let text = match common.format {
                GraphFormat::Dot => {
                    to_dot(&graph, g.names(), directed, &graph_name(&e.to_string(), &x))?
                }
                GraphFormat::Json => {
                    GraphDocument::from_digraph(&graph, g.names(), directed)?.to_json() + "\n"
                }
            };
            write_out(&common.out, &text)?;
        }
        Command::Quotient { expr, common } => {
            let e = parse_group(&expr)?;
            let g = Evaluator::new().build(&e)?.group;
            let x = ExclusionSet::parse(&common.exclude)?;
            let q = excluded_quotient_power_graph(&g, &x);
            let names = subgroup_names(&g);
            let text = match common.format {
                GraphFormat::Dot => labeled_to_dot(&q, &names, &graph_name(&e.to_string(), &x))?,
                GraphFormat::Json => GraphDocument::from_labeled(&q, &names)?.to_json() + "\n",
            };
            write_out(&common.out, &text)?;
        }
        Command::Verify {
            max_order,
            primes,
            format,
            fixtures,
            all,
            budget,
            out,
        } => {
            let mut opts = RunOptions::new(max_order, ExclusionSet::parse(&primes)?);
            opts.fixture_dir = fixtures;
            opts.budget = IsoBudget(budget);
            let run = run_catalog_with(&opts)?;
            let text = match format {
                ReportFormat::Text => run.to_text(all),
                ReportFormat::Json => run.to_json() + "\n",
            };
            write_out(&out, &text)?;
            if !run.is_clean() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Catalog { max_order } => {
            let c = catalog(max_order)?;
            let mut text = String::new();
            for (e, built) in c.iter() {
                let order = built
                    .map(|b| b.group.order().to_string())
                    .unwrap_or_else(|err| format!("error: {err}"));
                text.push_str(&format!("{order}\t{}\n", e.description));
            }
            write_out(&None, &text)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
