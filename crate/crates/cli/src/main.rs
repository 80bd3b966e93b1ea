use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use pencil_cli::*;
use pencil_core::harness::{run_map, HarnessConfig, MapReport, ResolutionSummary};
use pencil_core::pencil::{scan_pencil, PencilMap, DEFAULT_SAMPLES};
use pencil_core::properness::{
    attach_parametrizations, finite_fibres_check, geometric_degree, nonproper_set, theorem4_ratio_check,
};
use pencil_core::resolution::{dual_graph_dot, resolve_with, ResolveOptions};
use pencil_core::sample::DEFAULT_SEED;
use pencil_core::Error;

#[derive(Parser)]
#[command(name = "pencil", version, about = "Exact analysis of plane polynomial maps F = (P, Q)")]
struct Cli {
    /// Seed for every pseudo-random choice.
    #[arg(long, global = true, env = "PENCIL_SEED", default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct MapArgs {
    /// First coordinate, e.g. "P=x"
    p: String,
    /// Second coordinate, e.g. "Q=y+x^2"
    q: String,
    /// Analyze F - (u0, v0) instead of F, e.g. --shift 1,-1/2
    #[arg(long, allow_hyphen_values = true)]
    shift: Option<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Full dossier with every check.
    Analyze(MapArgs),
    /// Pencil profile.
    Pencil {
        #[command(flatten)]
        map: MapArgs,
        /// Random members to sample, at least 20.
        #[arg(long, default_value_t = DEFAULT_SAMPLES as u64, value_parser = clap::value_parser!(u64).range(20..))]
        samples: u64,
    },
    /// Resolution of the pencil's indeterminacy.
    Resolve {
        #[command(flatten)]
        map: MapArgs,
        /// Write the dual graph of the boundary divisor here.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Non-proper value set.
    Jelonek(MapArgs),
    /// Identity checks and the Theorem 2 predicates.
    Verify(MapArgs),
    /// Run a corpus file.
    Corpus {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

fn map_of(m: &MapArgs) -> Result<PencilMap, UsageError> {
    parse_map(&m.p, &m.q, m.shift.as_deref())
}

fn name_of(m: &MapArgs) -> String {
    let (p, q) = (m.p.trim_start_matches("P="), m.q.trim_start_matches("Q="));
    format!("({p}, {q})")
}

fn stage_error(e: &Error) -> i32 {
    eprintln!("error: {e}");
    if e.is_cap() {
        EXIT_CAP
    } else {
        EXIT_FAIL
    }
}

fn single(report: MapReport, body: serde_json::Value) -> i32 {
    print!("{}", to_json(&body));
    let maps = [report];
    for line in cap_messages(&maps) {
        eprintln!("error: {line}");
    }
    exit_code(&maps, None)
}

fn run(cli: Cli) -> Result<i32, UsageError> {
    let cfg = HarnessConfig {
        seed: cli.seed,
        ..HarnessConfig::default()
    };
    let code = match cli.cmd {
        Cmd::Analyze(m) => {
            let r = run_map(&name_of(&m), &map_of(&m)?, None, &cfg);
            let body = serde_json::to_value(&r).expect("report");
            single(r, body)
        }
        Cmd::Verify(m) => {
            let r = run_map(&name_of(&m), &map_of(&m)?, None, &cfg);
            let body = json!({
                "name": r.name,
                "checks": r.checks,
                "theorem2": r.theorem2,
                "errors": r.errors,
            });
            single(r, body)
        }
        Cmd::Pencil { map, samples } => match scan_pencil(&map_of(&map)?, samples as usize, cfg.seed) {
            Ok(p) => {
                print!("{}", to_json(&p));
                EXIT_PASS
            }
            Err(e) => stage_error(&e),
        },
        Cmd::Resolve { map, dot } => {
            let opts = ResolveOptions {
                budget: cfg.budget,
                cap: cfg.cap,
                ..ResolveOptions::default()
            };
            match resolve_with(&map_of(&map)?, &opts) {
                Ok(t) => {
                    if let Some(path) = dot {
                        std::fs::write(&path, dual_graph_dot(&t))
                            .map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
                    }
                    print!("{}", to_json(&json!({ "summary": ResolutionSummary::new(&t), "tree": t })));
                    EXIT_PASS
                }
                Err(e) => stage_error(&e),
            }
        }
        Cmd::Jelonek(m) => {
            let f = map_of(&m)?;
            let ff = finite_fibres_check(&f).expect("finite fibre check does not fail");
            if !ff.finite {
                print!("{}", to_json(&json!({ "finite_fibres": false, "certificate": ff.certificate })));
                eprintln!("error: {}", Error::NotFiniteFibres);
                return Ok(EXIT_FAIL);
            }
            let res = geometric_degree(&f, cfg.seed).and_then(|d| Ok((d, nonproper_set(&f, cfg.seed)?)));
            match res {
                Ok((deg, mut af)) => {
                    let opts = ResolveOptions {
                        budget: cfg.budget,
                        cap: cfg.cap,
                        ..ResolveOptions::default()
                    };
                    let t4 = resolve_with(&f, &opts).ok().map(|t| {
                        attach_parametrizations(&mut af, &t);
                        theorem4_ratio_check(&f, &af, &t)
                    });
                    print!(
                        "{}",
                        to_json(&json!({
                            "finite_fibres": true,
                            "certificate": ff.certificate,
                            "deg_geo": deg,
                            "a_f": af,
                            "theorem4": t4,
                        }))
                    );
                    EXIT_PASS
                }
                Err(e) => stage_error(&e),
            }
        }
        Cmd::Corpus { file, jobs } => {
            let corpus = Corpus::load(&file)?;
            let report = run_corpus(&corpus, &cfg, jobs);
            print!("{}", to_json(&report));
            eprint!("{}", summary_table(&report));
            for line in cap_messages(&report.maps) {
                eprintln!("error: {line}");
            }
            exit_code(&report.maps, Some(&report.theorem2))
        }
    };
    Ok(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    };
    ExitCode::from(code as u8)
}
