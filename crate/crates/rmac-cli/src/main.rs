//! `rmac` — exact integer topology of real moment-angle complexes over
//! polygon boundaries, from the command line.
//!
//! Every subcommand prints either aligned text (default) or JSON
//! (`--json`). Exit codes: `0` success, `1` a mathematical cross-check
//! failed, `2` usage error (bad flags, out-of-range parameters, resource
//! caps, unsupported inputs).

mod commands;
mod render;
mod verify;

use clap::{ArgGroup, Args, Parser, Subcommand};
use rmac_core::Error;

#[derive(Parser)]
#[command(
    name = "rmac",
    version,
    about = "Exact homology, group actions and spectral data of real moment-angle \
             complexes over polygon boundaries",
    propagate_version = true
)]
struct Cli {
    /// Emit machine-readable JSON instead of aligned tables.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

/// Input selector shared by the commands that accept either a polygon
/// size or an arbitrary simplicial complex from a JSON file.
#[derive(Args)]
#[command(group(ArgGroup::new("input").required(true).args(["n", "complex"])))]
struct ComplexInput {
    /// Polygon size: use the boundary of the n-gon.
    #[arg(long)]
    pub(crate) n: Option<usize>,

    /// Path to a simplicial complex as {"vertices": m, "maximal_faces": [[...]]}.
    #[arg(long, value_name = "PATH")]
    pub(crate) complex: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Genus of the surface over the n-gon, with optional quotient genus
    /// and Riemann-Hurwitz audit.
    Genus {
        #[arg(long)]
        n: u64,
        /// Also report the genus of the surface divided by the rotation.
        #[arg(long)]
        quotient: bool,
        /// Run the full Riemann-Hurwitz accounting (includes --quotient data).
        #[arg(long)]
        audit: bool,
    },
    /// Integer homology of the real moment-angle complex over a polygon
    /// or an arbitrary simplicial complex.
    Homology {
        #[command(flatten)]
        input: ComplexInput,
        /// Override the cell-count safety cap.
        #[arg(long, value_name = "CELLS")]
        cell_cap: Option<usize>,
    },
    /// The quotient of the surface over the n-gon by the rotation action:
    /// cells, homology and genus.
    Quotient {
        #[arg(long)]
        n: usize,
        #[arg(long, value_name = "CELLS")]
        cell_cap: Option<usize>,
    },
    /// The Lyndon-word classes indexing the H_1 basis, grouped by orbit
    /// size and gap number.
    Words {
        #[arg(long)]
        n: usize,
    },
    /// Decomposition of H_1 into induced and regular Z[Z_n]-modules.
    Decompose {
        #[arg(long)]
        n: usize,
    },
    /// The E^2 page of the homology spectral sequence of the Borel
    /// construction.
    #[command(name = "e2-page")]
    E2Page {
        #[arg(long)]
        n: usize,
        /// Largest column to tabulate.
        #[arg(long, default_value_t = 4)]
        max_p: usize,
        /// Show the page over a field of characteristic coprime to n
        /// (only column p = 0 survives).
        #[arg(long)]
        field: bool,
    },
    /// Hilbert-Poincaré coefficients of the homotopy orbit space.
    Poincare {
        #[arg(long)]
        n: usize,
    },
    /// Automorphism group of a simplicial complex.
    Aut {
        #[command(flatten)]
        input: ComplexInput,
        /// Override the vertex-count cap on the permutation search.
        #[arg(long, value_name = "VERTICES")]
        perm_cap: Option<usize>,
    },
    /// Run the cross-module verification suite for one n.
    Verify {
        #[arg(long)]
        n: usize,
        /// quick = closed formulas only (n <= 12); full = cellular
        /// oracles too (n <= 8). Default: full when n <= 8, else quick.
        #[arg(long, value_enum)]
        depth: Option<verify::Depth>,
        #[arg(long, value_name = "CELLS")]
        cell_cap: Option<usize>,
    },
    /// Dump a cell complex (cells by label plus boundary matrices) as JSON.
    Dump {
        #[command(flatten)]
        input: ComplexInput,
        /// Dump the quotient by the rotation instead (polygon input only).
        #[arg(long)]
        quotient: bool,
        #[arg(long, value_name = "CELLS")]
        cell_cap: Option<usize>,
    },
}

fn main() {
    let cli = Cli::parse();
    let json = cli.json;
    let outcome = match cli.command {
        Command::Genus { n, quotient, audit } => commands::genus(n, quotient, audit, json),
        Command::Homology { input, cell_cap } => commands::homology(&input, cell_cap, json),
        Command::Quotient { n, cell_cap } => commands::quotient(n, cell_cap, json),
        Command::Words { n } => commands::words(n, json),
        Command::Decompose { n } => commands::decompose(n, json),
        Command::E2Page { n, max_p, field } => commands::e2_page(n, max_p, field, json),
        Command::Poincare { n } => commands::poincare(n, json),
        Command::Aut { input, perm_cap } => commands::aut(&input, perm_cap, json),
        Command::Verify { n, depth, cell_cap } => verify::run(n, depth, cell_cap, json),
        Command::Dump {
            input,
            quotient,
            cell_cap,
        } => commands::dump(&input, quotient, cell_cap),
    };
    if let Err(e) = outcome {
        eprintln!("error: {e}");
        std::process::exit(if e.is_verification_failure() { 1 } else { 2 });
    }
}

impl ComplexInput {
    /// Loads the chosen simplicial complex; `--n` gives the polygon
    /// boundary.
    pub(crate) fn load(&self) -> Result<rmac_core::simplicial::SimplicialComplex, Error> {
        match (self.n, &self.complex) {
            (Some(n), None) => rmac_core::simplicial::polygon_boundary(n),
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::InvalidInput(format!("cannot read {path}: {e}")))?;
                rmac_core::simplicial::SimplicialComplex::from_json(&text)
            }
            _ => unreachable!("clap enforces exactly one of --n/--complex"),
        }
    }

    /// A short human-readable label for reports.
    pub(crate) fn label(&self) -> String {
        match (self.n, &self.complex) {
            (Some(n), None) => format!("boundary of the {n}-gon"),
            (None, Some(path)) => path.clone(),
            _ => unreachable!(),
        }
    }
}
