//! Command-line front end for the exact graph-homology and
//! Riemann-Roch computations: Chern numbers of generalized Kummer
//! varieties, deformed Todd expansions, quotient bases of the
//! AS/IHX graph-homology spaces, and the verification suite for the
//! identities behind them.
//!
//! All output is exact: fractions are rendered as `p/q` and integers
//! without a denominator. Runs are reproducible from the argument
//! vector and the cache state alone.

mod output;
mod verify;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use hrr_core::charclass::{
    chi_y_integrand, sqrt_todd, todd_deformed, todd_symplectic, SymFuncContext,
};
use hrr_core::graphhom::BasisContext;
use hrr_core::kummer::{build_relations, solve_chern_numbers, KummerSolve};
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_OK: u8 = 0;
const EXIT_INTERNAL: u8 = 1;
const EXIT_RANK_DEFICIENT: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(
    name = "hrr",
    version,
    about = "Exact Riemann-Roch and graph-homology calculator for irreducible symplectic manifolds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve the exact linear relations for the Chern numbers of the
    /// 2n-dimensional generalized Kummer variety and print the table.
    #[command(name = "kummer-chern")]
    KummerChern(KummerChernArgs),
    /// Print the deformed Todd class of a 2n-dimensional irreducible
    /// symplectic manifold as an exact polynomial in the
    /// characteristic value lambda.
    #[command(name = "todd-deformed")]
    ToddDeformed(ToddDeformedArgs),
    /// Print a multiplicative genus of a 2n-dimensional irreducible
    /// symplectic manifold in even Chern classes: the Todd class, its
    /// square root, or the chi_y integrand.
    Genus(GenusArgs),
    /// Build (or load from cache) the AS/IHX quotient basis of the
    /// graph-homology space at one bidegree and print it.
    #[command(name = "graph-basis")]
    GraphBasis(GraphBasisArgs),
    /// Run one of the exact identity verifications.
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Args)]
struct KummerChernArgs {
    /// Half-dimension n of the Kummer variety (1..=6)
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value_t = TableFormat::Table)]
    format: TableFormat,
}

#[derive(Args)]
struct ToddDeformedArgs {
    /// Half-dimension n: coefficients live in weights up to n
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value_t = TableFormat::Text)]
    format: TableFormat,
}

#[derive(Args)]
struct GenusArgs {
    /// Which genus to print
    #[arg(long, value_enum)]
    series: GenusSeries,
    /// Half-dimension n: coefficients live in weights up to n
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value_t = TableFormat::Text)]
    format: TableFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenusSeries {
    Todd,
    SqrtTodd,
    ChiY,
}

#[derive(Args)]
struct GraphBasisArgs {
    /// Number of univalent vertices (legs) of the bidegree
    #[arg(long)]
    legs: usize,
    /// Number of trivalent vertices of the bidegree
    #[arg(long)]
    trivalent: usize,
    #[arg(long, value_enum, default_value_t = TableFormat::Text)]
    format: TableFormat,
    /// Basis cache directory
    #[arg(long, default_value = "basis-cache")]
    cache: PathBuf,
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Check that the Bernoulli-weighted wheel exponential is an
    /// eigenvector of the leg-glueing operator, slice by slice in the
    /// exact AS/IHX quotient.
    Omega {
        /// Largest total defect degree to check
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
        #[arg(long, default_value = "basis-cache")]
        cache: PathBuf,
    },
    /// Check the exp-sigma projection identity in the exterior algebra
    /// of a symplectic vector space, exhaustively over basis elements
    /// and on seeded random elements.
    Laexp {
        /// Largest half-dimension to check
        #[arg(long, default_value_t = 3)]
        max_n: usize,
    },
    /// Check the wheel glueing laws: the expansion of glued wheels
    /// into double wheels, and the bilinear cross-glueing law in the
    /// quotient.
    Wheels {
        #[arg(long, default_value = "basis-cache")]
        cache: PathBuf,
    },
    /// Check the Bernoulli identity in the symmetric cube of formal
    /// variables up to a weight cap.
    #[command(name = "bernoulli-lemma")]
    BernoulliLemma {
        #[arg(long, default_value_t = 20)]
        max_weight: usize,
    },
    /// Check the compatibility of the leg pairing with the glueing
    /// exponential, and the strut-pairing adjunction, over quotient
    /// bases.
    #[command(name = "scp-partial")]
    ScpPartial {
        /// Largest total degree of diagram pairs to check
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
        #[arg(long, default_value = "basis-cache")]
        cache: PathBuf,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Table,
    Text,
    Json,
    Csv,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let kind = err.kind();
            let _ = err.print();
            return if matches!(kind, ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                ExitCode::from(EXIT_OK)
            } else {
                ExitCode::from(EXIT_USAGE)
            };
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_INTERNAL)
        }
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Command::KummerChern(args) => kummer_chern(args),
        Command::ToddDeformed(args) => todd_deformed_cmd(args),
        Command::Genus(args) => genus_cmd(args),
        Command::GraphBasis(args) => graph_basis(args),
        Command::Verify(cmd) => verify::run(cmd),
    }
}

fn kummer_chern(args: KummerChernArgs) -> Result<u8, String> {
    let solve = solve_chern_numbers(args.n).map_err(|e| e.to_string())?;
    match solve {
        KummerSolve::Unique(table) => {
            output::print_chern_table(&table, args.format);
            Ok(EXIT_OK)
        }
        KummerSolve::RankDeficient {
            n,
            rank,
            unknowns,
            determined,
        } => {
            let system = build_relations(n).map_err(|e| e.to_string())?;
            output::print_rank_report(
                n,
                rank,
                unknowns,
                system.row_count(),
                &determined,
                args.format,
            );
            Ok(EXIT_RANK_DEFICIENT)
        }
    }
}

fn todd_deformed_cmd(args: ToddDeformedArgs) -> Result<u8, String> {
    if args.n < 1 || args.n > 8 {
        return Err(format!("--n {} outside the supported range 1..=8", args.n));
    }
    let ctx = SymFuncContext::new(args.n);
    let series = todd_deformed(&ctx);
    output::print_lambda_series(args.n, &series, args.format);
    Ok(EXIT_OK)
}

fn genus_cmd(args: GenusArgs) -> Result<u8, String> {
    if args.n < 1 || args.n > 8 {
        return Err(format!("--n {} outside the supported range 1..=8", args.n));
    }
    let ctx = SymFuncContext::new(args.n);
    match args.series {
        GenusSeries::Todd => output::print_chern_polynomial(
            "Todd class",
            args.n,
            &todd_symplectic(&ctx),
            args.format,
        ),
        GenusSeries::SqrtTodd => output::print_chern_polynomial(
            "square root of the Todd class",
            args.n,
            &sqrt_todd(&ctx),
            args.format,
        ),
        GenusSeries::ChiY => {
            output::print_y_polynomial(args.n, &chi_y_integrand(&ctx), args.format)
        }
    }
    Ok(EXIT_OK)
}

fn graph_basis(args: GraphBasisArgs) -> Result<u8, String> {
    let ctx = BasisContext::with_cache_dir(&args.cache);
    let basis = ctx
        .basis(args.legs, args.trivalent)
        .map_err(|e| e.to_string())?;
    output::print_basis(&basis, args.format);
    Ok(EXIT_OK)
}
