use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use heart_core::universe::Caps;

#[derive(Parser, Debug)]
#[command(
    name = "heart-simples",
    version,
    about = "Simple objects of cotilting hearts over bound quiver algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub options: Options,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the indecomposables with Hom and Ext¹ tables.
    Indec { file: PathBuf },
    /// Analyse the torsion pair generated by the given modules.
    Heart {
        file: PathBuf,
        /// Generator of the torsion class: a universe index, a name such
        /// as `S(1)`, or a dimension vector such as `1,1`. Repeatable.
        #[arg(long = "gen", value_name = "MODULE")]
        generators: Vec<String>,
    },
    /// Enumerate torsion classes and the brick-labelled Hasse quiver.
    Tors { file: PathBuf },
    /// Run all property suites.
    Verify { file: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Args, Debug, Clone)]
pub struct Options {
    /// Override the characteristic given in the file.
    #[arg(long, global = true, value_name = "P")]
    pub field: Option<u32>,
    /// Per-vertex dimension bound, comma separated; a single value applies
    /// to every vertex.
    #[arg(long = "dim-bound", global = true, value_name = "V1,V2,...")]
    pub dim_bound: Option<String>,
    /// Also run the brute-force oracles.
    #[arg(long, global = true)]
    pub oracle: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Largest Ext¹ dimension scanned class by class.
    #[arg(long = "cap-ext-dim", global = true, value_name = "N", value_parser = clap::value_parser!(u32).range(1..))]
    pub cap_ext_dim: Option<u32>,
    /// Largest total dimension for submodule enumeration.
    #[arg(long = "cap-submodule-dim", global = true, value_name = "N", value_parser = clap::value_parser!(u32).range(1..))]
    pub cap_submodule_dim: Option<u32>,
}

/// Default per-vertex dimension bound.
pub const DEFAULT_BOUND: usize = 2;

impl Options {
    pub fn caps(&self) -> Caps {
        let mut caps = Caps::default();
        if let Some(n) = self.cap_ext_dim {
            caps.ext_dim = n as usize;
        }
        if let Some(n) = self.cap_submodule_dim {
            caps.submodule_dim = n as usize;
        }
        caps
    }

    /// Bound vector for `vertices` vertices.
    pub fn bound(&self, vertices: usize) -> Result<Vec<usize>, String> {
        let Some(text) = &self.dim_bound else {
            return Ok(vec![DEFAULT_BOUND; vertices]);
        };
        let parts: Vec<usize> = text
            .split(',')
            .map(|s| s.trim().parse::<usize>().map_err(|_| format!("bad dimension bound {text:?}")))
            .collect::<Result<_, _>>()?;
        match parts.len() {
            1 => Ok(vec![parts[0]; vertices]),
            n if n == vertices => Ok(parts),
            n => Err(format!("dimension bound has {n} entries for {vertices} vertices")),
        }
    }
}
