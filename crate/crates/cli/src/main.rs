//! Command-line front end.
//!
//! Subcommands: verify, construct, bound, sample, search, estimate-f.
//! Stdout carries exactly one JSON document; diagnostics go to stderr.
//! Exit codes: 0 success, 1 condition failure or search miss, 2 malformed
//! input or invalid flags.

use clap::{Args, Parser, Subcommand, ValueEnum};
use minkarr::bounds;
use minkarr::constructions;
use minkarr::probabilistic::{self, RandomConfig};
use minkarr::search::{self, SearchConfig, SearchMode};
use minkarr::{Arrangement, ConvexBody};
use serde_json::json;
use std::io::Read;
use std::path::PathBuf;

#[derive(Parser)]
#[command(name = "minkarr", version, about = "Minkowski arrangements: verify, construct, bound, search")]
struct Cli {
    /// Worker threads for the parallel pair checks and samplers
    /// (0 = library default).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Strict,
    Minkowski,
}

#[derive(Subcommand)]
enum Command {
    /// Verify an arrangement (file or '-' for stdin) against the
    /// Minkowski/strict and intersection conditions.
    Verify {
        /// Arrangement JSON path, or '-' to read stdin.
        #[arg(default_value = "-")]
        input: String,
        /// Which Minkowski flavor must hold.
        #[arg(long, value_enum, default_value = "minkowski")]
        mode: ModeArg,
        /// Additionally require pairwise intersection.
        #[arg(long)]
        intersecting: bool,
    },
    /// Emit a witness arrangement as JSON.
    Construct {
        #[command(subcommand)]
        what: ConstructCmd,
    },
    /// Evaluate a closed-form bound and print the report.
    Bound {
        #[command(subcommand)]
        which: BoundCmd,
    },
    /// Sample points uniformly from a body.
    Sample {
        #[arg(long)]
        body: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Simulated-annealing search for a planar arrangement.
    Search(SearchArgs),
    /// Monte Carlo estimate of the distance concentration F(t).
    #[command(name = "estimate-f")]
    EstimateF {
        #[arg(long)]
        body: PathBuf,
        #[arg(long)]
        t: f64,
        #[arg(long, default_value_t = 100_000)]
        pairs: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// The 3^d grid of unit cube translates.
    CubeGrid {
        #[arg(long)]
        d: usize,
    },
    /// Product of floor(d/2) copies of the 10-triangle witness.
    TriangleProduct {
        #[arg(long)]
        d: usize,
    },
    /// A checked-in named witness (circles8, triangles10).
    Witness {
        #[arg(long)]
        name: String,
    },
    /// The 12-point icosahedron configuration (floats rendered from the
    /// exact Q(phi) coordinates), optionally cube-amplified.
    Icosahedron {
        #[arg(long, default_value_t = 0)]
        amplify: usize,
    },
    /// Randomized strict translate arrangement (always exactly verified).
    StrictRandom {
        #[arg(long)]
        body: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        oversample: i64,
        #[arg(long, default_value_t = 8)]
        retries: usize,
    },
    /// A unit direction whose perpendicular hyperplane receives a
    /// projection of the body with centroid at the origin.
    ProjectionDirection {
        #[arg(long)]
        body: PathBuf,
        /// Residual tolerance for the projected centroid magnitude.
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Randomized boundary point set with pairwise gauge distance > 1.
    BoundaryPoints {
        #[arg(long)]
        body: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        oversample: i64,
        #[arg(long, default_value_t = 8)]
        retries: usize,
    },
}

#[derive(Subcommand)]
enum BoundCmd {
    PackingUpper {
        #[arg(long)]
        body: PathBuf,
        /// Rational ratio bound, e.g. "3" or "5/2".
        #[arg(long)]
        lambda: String,
    },
    KappaUpper {
        #[arg(long)]
        body: PathBuf,
    },
    CentroidKappaUpper {
        #[arg(long)]
        d: usize,
    },
    ChainUpper {
        #[arg(long)]
        d: usize,
    },
    HadwigerLower {
        #[arg(long)]
        d: usize,
    },
}

#[derive(Args)]
struct SearchArgs {
    /// Body JSON path; defaults to the unit disc when omitted.
    #[arg(long)]
    body: Option<PathBuf>,
    /// Use the centroid-centered triangle instead of a body file.
    #[arg(long, conflicts_with = "body")]
    triangle: bool,
    #[arg(long)]
    count: usize,
    #[arg(long, value_enum, default_value = "strict")]
    mode: ModeArg,
    #[arg(long)]
    translates_only: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    steps: Option<usize>,
    #[arg(long)]
    restarts: Option<usize>,
    #[arg(long)]
    lambda_lo: Option<f64>,
    #[arg(long)]
    lambda_hi: Option<f64>,
    #[arg(long)]
    temperature: Option<f64>,
    #[arg(long)]
    cooling: Option<f64>,
}

fn main() {
    let cli = Cli::parse();
    if cli.threads > 0 {
        if let Err(e) =
            rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build_global()
        {
            eprintln!("warning: could not set thread count: {e}");
        }
    }
    std::process::exit(run(cli.command));
}

const EXIT_OK: i32 = 0;
const EXIT_FAIL: i32 = 1;
const EXIT_BAD_INPUT: i32 = 2;

fn run(cmd: Command) -> i32 {
    match dispatch(cmd) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_BAD_INPUT
        }
    }
}

fn dispatch(cmd: Command) -> anyhow::Result<i32> {
    match cmd {
        Command::Verify { input, mode, intersecting } => {
            let arrangement = read_arrangement(&input)?;
            let report = arrangement.verify()?;
            println!("{}", serde_json::to_string_pretty(&report)?);
            let mode_ok = match mode {
                ModeArg::Strict => report.strict,
                ModeArg::Minkowski => report.minkowski,
            };
            let ok = mode_ok && (!intersecting || report.pairwise_intersecting);
            Ok(if ok { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Construct { what } => construct(what),
        Command::Bound { which } => {
            let report = match which {
                BoundCmd::PackingUpper { body, lambda } => {
                    let body = read_body(&body)?;
                    let lambda = minkarr::rat::parse_rat(&lambda)?;
                    bounds::packing_upper(&body, &lambda)?
                }
                BoundCmd::KappaUpper { body } => bounds::kappa_upper(&read_body(&body)?)?,
                BoundCmd::CentroidKappaUpper { d } => bounds::centroid_kappa_upper(d),
                BoundCmd::ChainUpper { d } => bounds::chain_upper(d),
                BoundCmd::HadwigerLower { d } => bounds::hadwiger_lower(d),
            };
            println!("{}", serde_json::to_string_pretty(&report)?);
            Ok(EXIT_OK)
        }
        Command::Sample { body, n, seed } => {
            let body = read_body(&body)?;
            let cfg = RandomConfig::with_seed(seed);
            let points = probabilistic::sample_uniform(&body, n, &cfg)?;
            let out: Vec<Vec<String>> =
                points.iter().map(|p| p.0.iter().map(|r| r.to_string()).collect()).collect();
            println!("{}", serde_json::to_string_pretty(&json!({ "points": out }))?);
            Ok(EXIT_OK)
        }
        Command::Search(args) => do_search(args),
        Command::EstimateF { body, t, pairs, seed } => {
            let body = read_body(&body)?;
            let cfg = RandomConfig::with_seed(seed);
            let (estimate, std_err) = probabilistic::estimate_f(&body, t, pairs, &cfg)?;
            let bound = probabilistic::concentration_bound(body.dim(), t);
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "t": t,
                    "pairs": pairs,
                    "estimate": estimate,
                    "std_err": std_err,
                    "bound": bound,
                }))?
            );
            Ok(EXIT_OK)
        }
    }
}

fn construct(what: ConstructCmd) -> anyhow::Result<i32> {
    match what {
        ConstructCmd::CubeGrid { d } => {
            print_arrangement(&constructions::cube_grid_witness(d)?)?;
        }
        ConstructCmd::TriangleProduct { d } => {
            print_arrangement(&constructions::triangle_product_witness(d)?)?;
        }
        ConstructCmd::Witness { name } => {
            print_arrangement(&constructions::load_named_witness(&name)?)?;
        }
        ConstructCmd::Icosahedron { amplify } => {
            let ico = constructions::icosahedron_witness();
            let amp = ico.amplified(amplify);
            let verified = amp.verify_strict_unit_config();
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "dim": amp.dim(),
                    "count": amp.len(),
                    "strict_unit_config_verified": verified,
                    "points": amp.points_f64(),
                }))?
            );
            if !verified {
                return Ok(EXIT_FAIL);
            }
        }
        ConstructCmd::StrictRandom { body, seed, oversample, retries } => {
            let body = read_body(&body)?;
            let cfg = RandomConfig {
                seed,
                max_retries: retries,
                oversample_factor: minkarr::rat::rat_int(oversample),
            };
            print_arrangement(&probabilistic::strict_translate_arrangement(&body, &cfg)?)?;
        }
        ConstructCmd::ProjectionDirection { body, tol } => {
            let body = read_body(&body)?;
            let u = probabilistic::centroid_projection_direction(&body, tol)?;
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({ "u": u, "tol": tol }))?
            );
        }
        ConstructCmd::BoundaryPoints { body, seed, oversample, retries } => {
            let body = read_body(&body)?;
            let cfg = RandomConfig {
                seed,
                max_retries: retries,
                oversample_factor: minkarr::rat::rat_int(oversample),
            };
            let witness = probabilistic::boundary_strict_points(&body, &cfg)?;
            let points: Vec<Vec<String>> = witness
                .points
                .iter()
                .map(|p| p.0.iter().map(|r| r.to_string()).collect())
                .collect();
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "body": witness.body,
                    "points": points,
                }))?
            );
        }
    }
    Ok(EXIT_OK)
}

fn do_search(args: SearchArgs) -> anyhow::Result<i32> {
    let body = match (&args.body, args.triangle) {
        (Some(path), _) => read_body(path)?,
        (None, true) => ConvexBody::triangle(),
        (None, false) => ConvexBody::disc(),
    };
    let mode = match args.mode {
        ModeArg::Strict => SearchMode::Strict,
        ModeArg::Minkowski => SearchMode::NonStrict,
    };
    let mut cfg = if args.translates_only {
        SearchConfig::nonstrict_translates(args.count)
    } else {
        SearchConfig::strict_discs(args.count)
    };
    cfg.mode = mode;
    cfg.translates_only = args.translates_only;
    cfg.seed = args.seed;
    if let Some(v) = args.steps {
        cfg.steps = v;
    }
    if let Some(v) = args.restarts {
        cfg.restarts = v;
    }
    if let Some(v) = args.lambda_lo {
        cfg.lambda_range.0 = v;
    }
    if let Some(v) = args.lambda_hi {
        cfg.lambda_range.1 = v;
    }
    if let Some(v) = args.temperature {
        cfg.initial_temperature = v;
    }
    if let Some(v) = args.cooling {
        cfg.cooling_rate = v;
    }
    match search::search_arrangement(&body, &cfg)? {
        Some(a) => {
            print_arrangement(&a)?;
            Ok(EXIT_OK)
        }
        None => {
            eprintln!("search: no verified arrangement found");
            Ok(EXIT_FAIL)
        }
    }
}

fn print_arrangement(a: &Arrangement) -> anyhow::Result<()> {
    println!("{}", serde_json::to_string_pretty(a)?);
    Ok(())
}

fn read_arrangement(path: &str) -> anyhow::Result<Arrangement> {
    let data = if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        buf
    } else {
        std::fs::read_to_string(path)?
    };
    Ok(serde_json::from_str(&data)?)
}

fn read_body(path: &PathBuf) -> anyhow::Result<ConvexBody> {
    let data = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&data)?)
}
