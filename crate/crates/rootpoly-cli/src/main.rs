use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use rootpoly::ehrhart::DEFAULT_MAX_BOX;
use rootpoly_cli::commands::{self, CliError};
use rootpoly_cli::report::RunReport;

/// Exact computations for Eulerian digraphs: greedoid polynomials, root
/// polytopes of the dual matroid, arborescence triangulations, Ehrhart and
/// h*-polynomials, all by independent routes that must agree exactly.
#[derive(Parser)]
#[command(name = "rootpoly", version, arg_required_else_help = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report Eulerian/co-Eulerian status, ranks and polytope dimensions
    Check {
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Greedoid polynomial of the branching greedoid, by one or more methods
    Lambda {
        input: PathBuf,
        /// Root vertex (1-based)
        #[arg(long, default_value_t = 1)]
        root: usize,
        /// Comma-separated methods: activity, semiactivity, dual_complex,
        /// hstar_ehrhart, hstar_semipassivity, hstar_triangulation, or all
        #[arg(long, value_delimiter = ',', default_value = "all")]
        method: Vec<String>,
        #[arg(long)]
        json: bool,
        /// Cap on lattice-scan candidates for the Ehrhart route
        #[arg(long, default_value_t = DEFAULT_MAX_BOX)]
        max_box: u64,
    },
    /// h*-polynomial of the root polytope, by one or more routes
    Hstar {
        input: PathBuf,
        #[arg(long, default_value_t = 1)]
        root: usize,
        /// Comma-separated routes: ehrhart, triangulation, semipassivity,
        /// visibility, or all (matrix inputs support only ehrhart)
        #[arg(long, value_delimiter = ',', default_value = "all")]
        method: Vec<String>,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_BOX)]
        max_box: u64,
    },
    /// Ehrhart polynomial of the root polytope
    Ehrhart {
        input: PathBuf,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_BOX)]
        max_box: u64,
    },
    /// Verification suite: triangulation certificate, root sweep, reversal
    /// invariance, arborescence counts
    Verify {
        input: PathBuf,
        #[arg(long, default_value_t = 1)]
        root: usize,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_BOX)]
        max_box: u64,
    },
    /// Write a deterministic corpus of Eulerian digraph files
    GenCorpus {
        /// Output directory
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 5)]
        n_max: usize,
        #[arg(long, default_value_t = 9)]
        m_max: usize,
        /// Number of seeded random graphs
        #[arg(long, default_value_t = 50)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn emit(report: RunReport, json: bool) -> ExitCode {
    let passed = report.passed();
    if json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.render());
    }
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run() -> Result<(RunReport, bool), CliError> {
    let cli = Cli::parse();
    match cli.command {
        Command::Check { input, json } => Ok((commands::cmd_check(&input)?, json)),
        Command::Lambda {
            input,
            root,
            method,
            json,
            max_box,
        } => {
            let methods = commands::parse_methods(&method)?;
            Ok((commands::cmd_lambda(&input, root, &methods, max_box)?, json))
        }
        Command::Hstar {
            input,
            root,
            method,
            json,
            max_box,
        } => {
            let routes = commands::parse_hstar_routes(&method)?;
            Ok((commands::cmd_hstar(&input, root, &routes, max_box)?, json))
        }
        Command::Ehrhart { input, json, max_box } => {
            Ok((commands::cmd_ehrhart(&input, max_box)?, json))
        }
        Command::Verify {
            input,
            root,
            json,
            max_box,
        } => Ok((commands::cmd_verify(&input, root, max_box)?, json)),
        Command::GenCorpus {
            out,
            n_max,
            m_max,
            count,
            seed,
        } => Ok((commands::cmd_gen_corpus(&out, n_max, m_max, count, seed)?, false)),
    }
}

fn main() -> ExitCode {
    match run() {
        Ok((report, json)) => emit(report, json),
        Err(err) => {
            eprintln!("{err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
