//! `axialctl`: build Matsuo algebras and analyse axial algebras stored as JSON.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use axial_core::jordan::PipelineOptions;
use axial_core::lines::{baric_algebra, flat_algebra, toric_algebra, DEFAULT_ORBIT_BOUND};
use axial_core::matsuo::{build_matsuo, catalog_load, load_group_json};
use axial_core::solidity::Methods;
use axial_core::{
    with_algebra, AnyAlgebra, AxialAlgebra, Field, FieldSpec, PrimeField, Rationals, Ring,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use commands::{parse_pairs, parse_scalar, prepare, sample_pairs, Run};
use report::{emit, write_text, Failure, RunManifest};

#[derive(Parser)]
#[command(
    name = "axialctl",
    version,
    about = "Exact analysis of axial algebras of Jordan type 1/2"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Field: `Q` or `Fp:<p>`. Builders use it; analysis commands check it against the file.
    #[arg(long, global = true)]
    field: Option<FieldSpec>,
    /// Fusion parameter, e.g. `1/2`. Builders use it; analysis commands check it against the file.
    #[arg(long, global = true)]
    eta: Option<String>,
    /// Seed for sampling.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    json_out: Option<PathBuf>,
    /// Record wall-clock time in the manifest (makes reports non-reproducible).
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Build the Matsuo algebra of a 3-transposition group.
    Matsuo {
        /// Group JSON file.
        #[arg(long, conflicts_with = "catalog", required_unless_present = "catalog")]
        group: Option<PathBuf>,
        /// Built-in group: S3, S4, S5, W(D4), 3^3:S4.
        #[arg(long)]
        catalog: Option<String>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Build a standalone 3-dimensional line algebra.
    LineAlgebra {
        #[arg(long, value_enum)]
        kind: LineAlgebraKind,
        /// Parameter of a toric line.
        #[arg(long, default_value = "2")]
        mu: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Certify the axes, the Frobenius form and the Miyamoto identities.
    Verify {
        #[arg(long)]
        algebra: PathBuf,
    },
    /// Classify the lines through pairs of generating axes.
    Lines {
        #[command(flatten)]
        sel: Selection,
        /// Bound for root-of-unity detection and explicit orbits.
        #[arg(long, default_value_t = DEFAULT_ORBIT_BOUND)]
        orbit_bound: usize,
    },
    /// Decide solidity of lines.
    Solidity {
        #[command(flatten)]
        sel: Selection,
        #[arg(long, value_enum, default_value_t = Method::Derivation)]
        method: Method,
    },
    /// Decide whether the algebra is Jordan.
    Jordan {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long, default_value_t = 500)]
        trials: usize,
        /// Cap for the Miyamoto orbit search (default 10 * dim).
        #[arg(long, default_value_t = 0)]
        orbit_cap: usize,
    },
    /// Miyamoto orbit sizes of the axes and of the lines.
    Orbit {
        #[command(flatten)]
        sel: Selection,
        #[arg(long, default_value_t = 10_000)]
        cap: usize,
        #[arg(long, default_value_t = DEFAULT_ORBIT_BOUND)]
        orbit_bound: usize,
    },
}

#[derive(Args)]
struct Selection {
    #[arg(long)]
    algebra: PathBuf,
    /// `all`, or pairs such as `0,1;2,5`.
    #[arg(long, default_value = "all")]
    pairs: String,
    /// Analyse a seeded random sample of this many pairs.
    #[arg(long)]
    sample: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Derivation,
    Polynomial,
    Enumerate,
    All,
}

impl Method {
    fn methods(self) -> Methods {
        let none = Methods::derivation_only();
        match self {
            Method::Derivation => none,
            Method::Polynomial => Methods {
                polynomial: true,
                ..none
            },
            Method::Enumerate => Methods {
                enumeration: true,
                ..none
            },
            Method::All => Methods::all(),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum LineAlgebraKind {
    Flat,
    Baric,
    BaricQuotient,
    Toric,
}

#[derive(Serialize)]
struct BuildReport {
    out: String,
    dim: usize,
    axes: usize,
}

/// `group_text` is the contents of `--group`, when given.
fn build<F: Field>(
    global: &Global,
    field: F,
    kind: &Command,
    group_text: Option<&str>,
) -> Result<AxialAlgebra<F>, Failure> {
    match kind {
        Command::Matsuo { catalog, .. } => {
            let eta = parse_scalar(&field, global.eta.as_deref().unwrap_or("1/2"))?;
            let class = match (group_text, catalog) {
                (Some(text), _) => load_group_json(text).map_err(Failure::input)?,
                (None, Some(name)) => catalog_load(name).map_err(Failure::input)?,
                (None, None) => return Err(Failure::input("--group or --catalog is required")),
            };
            build_matsuo(&class, field, eta).map_err(Failure::input)
        }
        Command::LineAlgebra { kind, mu, .. } => {
            let made = match kind {
                LineAlgebraKind::Flat => flat_algebra(field),
                LineAlgebraKind::Baric => baric_algebra(field, false),
                LineAlgebraKind::BaricQuotient => baric_algebra(field, true),
                LineAlgebraKind::Toric => {
                    let mu = parse_scalar(&field, mu)?;
                    toric_algebra(field, &mu)
                }
            };
            made.map_err(Failure::input)
        }
        _ => unreachable!("only builders reach here"),
    }
}

fn run_builder(cli: &Cli, mut manifest: RunManifest) -> Result<u8, Failure> {
    let g = &cli.global;
    let spec = g.field.clone().unwrap_or(FieldSpec::Rationals);
    let text = match &cli.command {
        Command::Matsuo {
            group: Some(path), ..
        } => Some(manifest.read_input(path)?),
        _ => None,
    };
    let text = text.as_deref();
    let alg = match &spec {
        FieldSpec::Rationals => AnyAlgebra::Rational(build(g, Rationals, &cli.command, text)?),
        FieldSpec::Prime { p } => {
            let f = PrimeField::new(*p).map_err(Failure::input)?;
            AnyAlgebra::Prime(build(g, f, &cli.command, text)?)
        }
        other => {
            return Err(Failure::input(format!(
                "builders support Q and Fp:<p>, not {other}"
            )))
        }
    };
    let out = match &cli.command {
        Command::Matsuo { out, .. } | Command::LineAlgebra { out, .. } => out,
        _ => unreachable!(),
    };
    let file = alg.to_file();
    write_text(
        &serde_json::to_string_pretty(&file).map_err(Failure::input)?,
        Some(out),
    )?;
    manifest.field = spec.to_string();
    manifest.eta = with_algebra!(&alg, a => a.field().fmt_elem(&a.eta));
    let report = BuildReport {
        out: out.display().to_string(),
        dim: alg.dim(),
        axes: file.axes.len(),
    };
    emit(&manifest, &report, g.json_out.as_ref())?;
    Ok(0)
}

fn load(
    global: &Global,
    manifest: &mut RunManifest,
    path: &PathBuf,
) -> Result<AnyAlgebra, Failure> {
    let text = manifest.read_input(path)?;
    let alg = AnyAlgebra::from_json_str(&text)
        .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    let spec = alg.field();
    if let Some(want) = &global.field {
        if *want != spec {
            return Err(Failure::input(format!(
                "--field {want} does not match the file's field {spec}"
            )));
        }
    }
    let eta = with_algebra!(&alg, a => {
        if let Some(want) = &global.eta {
            if parse_scalar(a.field(), want)? != a.eta {
                return Err(Failure::input(format!("--eta {want} does not match the file")));
            }
        }
        a.field().fmt_elem(&a.eta)
    });
    manifest.field = spec.to_string();
    manifest.eta = eta;
    Ok(alg)
}

fn run_analysis(cli: &Cli, mut manifest: RunManifest) -> Result<u8, Failure> {
    let g = &cli.global;
    let path = match &cli.command {
        Command::Verify { algebra } | Command::Jordan { algebra, .. } => algebra,
        Command::Lines { sel, .. } | Command::Solidity { sel, .. } | Command::Orbit { sel, .. } => {
            &sel.algebra
        }
        _ => unreachable!(),
    };
    let alg = load(g, &mut manifest, path)?;
    let n_axes = with_algebra!(&alg, a => a.axes.len());
    let pairs = |sel: &Selection| -> Result<Vec<(usize, usize)>, Failure> {
        let pairs = parse_pairs(&sel.pairs, n_axes)?;
        Ok(match sel.sample {
            Some(k) => sample_pairs(pairs, k, g.seed),
            None => pairs,
        })
    };
    if matches!(cli.command, Command::Jordan { .. })
        || matches!(
            cli.command,
            Command::Solidity {
                sel: Selection {
                    sample: Some(_),
                    ..
                },
                ..
            }
        )
    {
        manifest.seed = Some(g.seed);
    }
    with_algebra!(&alg, a => {
        if let Command::Verify { .. } = &cli.command {
            return commands::verify(a, &Run { manifest, out: g.json_out.as_ref() });
        }
        let cert = prepare(a)?;
        match &cli.command {
            Command::Lines { sel, orbit_bound } => {
                let p = pairs(sel)?;
                commands::lines(&cert, &p, *orbit_bound, &Run { manifest, out: g.json_out.as_ref() })
            }
            Command::Solidity { sel, method } => {
                let p = pairs(sel)?;
                commands::solidity(&cert, &p, method.methods(), &Run { manifest, out: g.json_out.as_ref() })
            }
            Command::Jordan { trials, orbit_cap, .. } => {
                let opts = PipelineOptions { trials: *trials, seed: g.seed, orbit_cap: *orbit_cap };
                commands::jordan(&cert, opts, &Run { manifest, out: g.json_out.as_ref() })
            }
            Command::Orbit { sel, cap, orbit_bound } => {
                let p = pairs(sel)?;
                commands::orbit(&cert, &p, *cap, *orbit_bound, &Run { manifest, out: g.json_out.as_ref() })
            }
            _ => unreachable!(),
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.global.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(report::EXIT_INPUT);
        }
    }
    let name = match &cli.command {
        Command::Matsuo { .. } => "matsuo",
        Command::LineAlgebra { .. } => "line-algebra",
        Command::Verify { .. } => "verify",
        Command::Lines { .. } => "lines",
        Command::Solidity { .. } => "solidity",
        Command::Jordan { .. } => "jordan",
        Command::Orbit { .. } => "orbit",
    };
    let manifest = RunManifest::new(name, cli.global.timing);
    let result = match &cli.command {
        Command::Matsuo { .. } | Command::LineAlgebra { .. } => run_builder(&cli, manifest),
        _ => run_analysis(&cli, manifest),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
