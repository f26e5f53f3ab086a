//! `shadowbracket`: exact Kauffman brackets from shadows and diagrams.
//!
//! Exit codes: 0 ok, 1 other failure, 2 usage, 3 parse, 4 validation,
//! 5 unbounded coloring space, 6 verification failure, 7 incomplete under
//! `--strict`. Set `RAYON_NUM_THREADS` to limit worker threads.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "shadowbracket", version, about = "Exact Kauffman brackets and orders at q = i from Turaev shadows")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Print elapsed time to stderr.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
pub struct EvalArgs {
    /// Shadow file, or `-` for stdin.
    pub input: PathBuf,
    /// Largest color tried on free regions [default: max boundary color + 16].
    #[arg(long)]
    pub cap: Option<u32>,
    /// Fail with exit code 7 when the enumeration has no completeness certificate.
    #[arg(long)]
    pub strict: bool,
    /// List every state with its value and order.
    #[arg(long)]
    pub states: bool,
    /// Check ord ≥ χ(S_σ) − r/2 on every state.
    #[arg(long)]
    pub verify: bool,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate the bracket of a shadow file.
    Eval(EvalArgs),
    /// Same as `eval --verify`.
    Verify(EvalArgs),
    /// Compile a diagram file to a shadow (written to stdout or --out).
    Compile {
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the compile report (merges, gleam ledger, fused crossings) here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Brute-force Kauffman bracket of a color-1 link diagram.
    Skein {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print a built-in shadow or diagram as JSON.
    #[command(subcommand)]
    Examples(ExampleCmd),
    /// Closed-form values and their orders at q = i.
    #[command(subcommand, name = "closed-form")]
    ClosedForm(ClosedFormCmd),
}

#[derive(Subcommand, Debug)]
pub enum ExampleCmd {
    /// The genus-g knot shadow: a region of χ = 1 − 2g and gleam g with g discs of gleam −1.
    Fig14 {
        #[arg(long)]
        genus: u32,
        #[arg(long, default_value_t = 1)]
        color: u32,
    },
    /// One region of Euler characteristic χ bounded by colored circles.
    Surface {
        #[arg(long, allow_hyphen_values = true)]
        chi: i64,
        /// One color per boundary circle.
        #[arg(long = "color", value_delimiter = ',', required = true)]
        colors: Vec<u32>,
    },
    /// Zero-gleam cone over a circle (1 color), theta (3) or tetrahedron (6).
    Cone {
        #[arg(required = true, num_args = 1..=6)]
        colors: Vec<u32>,
    },
    /// A link diagram from the oracle corpus.
    Diagram { name: String },
    /// List the available names.
    List,
}

#[derive(Subcommand, Debug)]
pub enum ClosedFormCmd {
    Circle {
        a: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    Theta {
        #[arg(num_args = 3, required = true)]
        colors: Vec<u32>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    Tet {
        #[arg(num_args = 6, required = true)]
        colors: Vec<u32>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The quantum integer [n].
    Qint {
        n: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The quantum factorial [n]!.
    Qfactorial {
        n: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// [t1]!…[tk]! / ([b1]!…[bm]!) with Σt = Σb.
    Multinomial {
        #[arg(long, value_delimiter = ',', required = true)]
        tops: Vec<u32>,
        #[arg(long, value_delimiter = ',', required = true)]
        bottoms: Vec<u32>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let result = match cli.command {
        Command::Eval(a) => commands::eval(&a),
        Command::Verify(mut a) => {
            a.verify = true;
            commands::eval(&a)
        }
        Command::Compile { input, out, report } => commands::compile(&input, out.as_deref(), report.as_deref()),
        Command::Skein { input, format } => commands::skein(&input, format),
        Command::Examples(e) => commands::examples(&e),
        Command::ClosedForm(c) => commands::closed_form(&c),
    };
    if cli.timing {
        eprintln!("elapsed: {:.3}s", start.elapsed().as_secs_f64());
    }
    match result {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
