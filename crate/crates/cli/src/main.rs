mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use acm_core::validate::{Family, ValidateConfig};
use acm_core::{Error, Field, Result};
use clap::{Args, Parser, Subcommand};

use commands::{Output, Sweep};

/// Homological invariants and almost Cohen-Macaulay tests for monomial
/// ideals and simplicial complexes.
///
/// Ideals are written `(x1*x3, x2^2)`, complexes `n=5; {1,2},{4,5},{3}`,
/// Veronese specs `V(d=2; a=1,2,1; n=3)` and transversal specs
/// `T(n=4; {1,2},{3,4})`. JSON forms are accepted as well.
///
/// Exit codes: 0 success, 1 mathematical error, 2 parse error, 3 validation mismatch.
#[derive(Parser)]
#[command(name = "acm", version)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args)]
struct Common {
    /// Input text; read from --file or stdin when absent
    input: Option<String>,
    /// Read the input from a file
    #[arg(long, conflicts_with = "input")]
    file: Option<PathBuf>,
    /// Number of variables (default: largest index in the input)
    #[arg(long)]
    n: Option<usize>,
    /// Field characteristic: 0 for the rationals or a prime
    #[arg(long = "char", default_value_t = 0)]
    characteristic: u32,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
    /// Worker threads
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Args)]
struct SweepArgs {
    /// veronese, transversal, complex or squarefree
    #[arg(long)]
    family: Family,
    #[arg(long, default_value_t = 4)]
    n_max: usize,
    #[arg(long, default_value_t = 3)]
    d_max: usize,
    /// Keep one instance per orbit of variable permutations
    #[arg(long)]
    up_to_symmetry: bool,
    #[arg(long = "char", default_value_t = 0)]
    characteristic: u32,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Subcommand)]
enum Verb {
    /// Full invariant report of an ideal or of a complex's Stanley-Reisner ideal
    Analyze(Common),
    /// Almost Cohen-Macaulay verdict, with failing links for complexes
    Acm(Common),
    /// Cohen-Macaulay verdict
    Cm(Common),
    /// Alexander dual of a squarefree ideal or complex
    Dual(Common),
    /// Reduced simplicial homology
    Homology(Common),
    /// Graded Betti table of R/I
    Betti(Common),
    /// aCM classification of a transversal spec, CM classification of a polymatroidal ideal
    Classify(Common),
    /// Closed-form invariants of a Veronese type spec
    Veronese(Common),
    /// Closed-form invariants of a transversal spec
    Transversal {
        #[command(flatten)]
        common: Common,
        /// Exponent k for the decomposition of I^k
        #[arg(long, default_value_t = 1)]
        power: u32,
    },
    /// Check fast paths against the general pipeline over a family
    Validate {
        #[command(flatten)]
        sweep: SweepArgs,
        /// Seed for the extra random samples
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random samples added to the exhaustive family
        #[arg(long, default_value_t = 0)]
        samples: usize,
    },
    /// CSV of invariants over a family
    Enumerate {
        #[command(flatten)]
        sweep: SweepArgs,
    },
}

fn field(characteristic: u32) -> Result<Field> {
    Field::new(characteristic).map_err(|_| Error::Parse(format!("--char {characteristic}: expected 0 or a prime")))
}

fn set_jobs(jobs: Option<usize>) {
    if let Some(j) = jobs {
        // Fails only if a pool already exists, which cannot happen here.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global();
    }
}

fn with_input(c: &Common, f: impl FnOnce(&str, Option<usize>, Field, bool) -> Result<Output>) -> Result<Output> {
    set_jobs(c.jobs);
    let field = field(c.characteristic)?;
    let src = input::read_source(c.input.as_deref(), c.file.as_ref())?;
    f(&src, c.n, field, c.json)
}

fn sweep(s: &SweepArgs) -> Result<Sweep> {
    set_jobs(s.jobs);
    Ok(Sweep { family: s.family, n_max: s.n_max, d_max: s.d_max, up_to_symmetry: s.up_to_symmetry, field: field(s.characteristic)? })
}

fn run(verb: Verb) -> Result<Output> {
    match verb {
        Verb::Analyze(c) => with_input(&c, commands::analyze),
        Verb::Acm(c) => with_input(&c, commands::acm),
        Verb::Cm(c) => with_input(&c, commands::cm),
        Verb::Dual(c) => with_input(&c, |s, n, _, j| commands::dual(s, n, j)),
        Verb::Homology(c) => with_input(&c, commands::homology),
        Verb::Betti(c) => with_input(&c, commands::betti),
        Verb::Classify(c) => with_input(&c, |s, n, _, j| commands::classify(s, n, j)),
        Verb::Veronese(c) => with_input(&c, |s, _, f, j| commands::veronese(s, f, j)),
        Verb::Transversal { common, power } => with_input(&common, |s, _, _, j| commands::transversal(s, power, j)),
        Verb::Validate { sweep: args, seed, samples } => {
            let s = sweep(&args)?;
            let config = ValidateConfig {
                family: s.family,
                n_max: s.n_max,
                d_max: s.d_max,
                up_to_symmetry: s.up_to_symmetry,
                field: s.field,
                samples,
                seed,
            };
            commands::run_validate(&config, args.json)
        }
        Verb::Enumerate { sweep: args } => commands::enumerate(&sweep(&args)?),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.verb) {
        Ok(out) => {
            println!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_parse() { 2 } else { 1 })
        }
    }
}
