use std::fs::File;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use ramsey_core::bounds::{best_lower_bound, lower_bound_formulas, min_scaffolding_size, TargetShape};
use ramsey_core::harness::table::{format_table, table_rows};
use ramsey_core::harness::{certify_bound, run_game, service, standard_goals, TableOptions};
use ramsey_core::{BuilderSpec, Family, GameGoal, PainterStrategy, SolveConfig, TargetPattern};

#[derive(Parser)]
#[command(name = "ramsey", about = "On-line Ramsey games on paths and cycles")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Play a strategy against a painter and print the transcript.
    Play {
        #[arg(long)]
        strategy: BuilderSpec,
        /// e.g. blocking:P3+acyclic, count-red:2, replay:RRB, optimal:10
        #[arg(long)]
        painter: String,
        #[arg(long, default_value_t = 64)]
        round_cap: u32,
        #[arg(long)]
        transcript: Option<PathBuf>,
    },
    /// Check a strategy against every painter.
    Certify {
        #[arg(long)]
        strategy: BuilderSpec,
        /// Defaults to the strategy's claimed bound.
        #[arg(long)]
        bound: Option<u32>,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Exact game value by search.
    Solve {
        #[arg(long)]
        red: TargetPattern,
        #[arg(long)]
        blue: TargetPattern,
        #[arg(long)]
        round_cap: u32,
        #[arg(long)]
        vertex_cap: Option<u32>,
        /// Parallel search with this many threads.
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long)]
        emit_transcript: Option<PathBuf>,
    },
    /// Smallest family-free red graph forcing a target.
    Scaffold {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        target: TargetPattern,
        #[arg(long, default_value_t = 8)]
        max_edges: usize,
    },
    /// Closed-form lower bounds for red P_{k+1} against a blue target.
    Bounds {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        target: TargetPattern,
    },
    /// Published bounds next to solver values and certified bounds.
    Table {
        #[arg(long, value_enum, default_value_t = TableKind::Bounds)]
        kind: TableKind,
        /// Solve rows whose upper bound is at most this.
        #[arg(long, default_value_t = 8)]
        solve_up_to: u32,
    },
    /// HTTP session service.
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    Values,
    Bounds,
}

fn main() -> ExitCode {
    match run(Cli::parse().cmd) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Cmd) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match cmd {
        Cmd::Play { strategy, painter, round_cap, transcript } => {
            let painter = PainterStrategy::parse(&painter, strategy.goal())?;
            let game = run_game(&strategy, &painter, round_cap)?;
            print!("{}", game.transcript.to_jsonl());
            eprintln!("{} wins after {} rounds", game.winner, game.rounds());
            if let Some(path) = transcript {
                game.transcript.write_jsonl(File::create(path)?)?;
            }
        }
        Cmd::Certify { strategy, bound, threads } => {
            if let Some(t) = threads {
                rayon::ThreadPoolBuilder::new().num_threads(t).build_global()?;
            }
            let start = Instant::now();
            let report = certify_bound(&strategy, bound.unwrap_or(strategy.claimed_bound()));
            println!("{}", serde_json::to_string_pretty(&report)?);
            eprintln!("{:.1?}", start.elapsed());
            if !report.passed() {
                return Ok(ExitCode::FAILURE);
            }
        }
        Cmd::Solve { red, blue, round_cap, vertex_cap, threads, emit_transcript } => {
            let mut cfg = SolveConfig::new(GameGoal::new(red, blue), round_cap);
            if let Some(t) = threads {
                cfg = cfg.threads(t);
            }
            if let Some(v) = vertex_cap {
                cfg = cfg.vertex_cap(v);
            }
            let start = Instant::now();
            let res = ramsey_core::solve(&cfg)?;
            println!("{}: {} ({} nodes, {:.1?})", cfg.goal, res.value, res.nodes_expanded, start.elapsed());
            if let Some(path) = emit_transcript {
                res.principal.write_jsonl(File::create(path)?)?;
            }
        }
        Cmd::Scaffold { family, target, max_edges } => match min_scaffolding_size(&family, target, max_edges) {
            Some((m, cert)) => {
                println!("m = {m}, bound m + e(H) = {}", m + target.edge_count() as usize);
                println!("{}", serde_json::to_string_pretty(&cert)?);
            }
            None => println!("no scaffolding with at most {max_edges} edges"),
        },
        Cmd::Bounds { k, target } => {
            let h = TargetShape::of(target);
            for b in lower_bound_formulas(k, h) {
                println!("{:<32} {:>8} {:>4}", b.name, b.value.to_string(), b.rounds());
            }
            println!("best: {}", best_lower_bound(k, h).name);
        }
        Cmd::Table { kind, solve_up_to } => {
            let opts = match kind {
                TableKind::Values => TableOptions { solve_up_to: Some(solve_up_to), certify: true },
                TableKind::Bounds => TableOptions { solve_up_to: None, certify: true },
            };
            print!("{}", format_table(&table_rows(&standard_goals(), &opts)));
        }
        Cmd::Serve { port } => {
            tokio::runtime::Runtime::new()?.block_on(service::serve(port))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}
