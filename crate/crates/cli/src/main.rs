use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use wallcross::conjectures::Semantics;
use wallcross::crossing::{OrbitMode, Variant};
use wallcross::order::TieBreak;
use wallcross::{Base, Partition, Wall};
use wallcross_cli::config::{parse_semantics, MullVariant};
use wallcross_cli::output::{emit, render};
use wallcross_cli::{execute, CliError, Command, Format, RunConfig};

#[derive(Parser)]
#[command(
    name = "wallcross",
    version,
    about = "Wall-crossing of Young diagrams through Farey walls"
)]
struct Cli {
    #[command(subcommand)]
    command: Sub,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    #[arg(long, value_enum, default_value_t = FormatArg::Text, global = true)]
    format: FormatArg,
    /// Worker threads for sweeps [default: available cores]
    #[arg(long, env = "WALLCROSS_JOBS", global = true)]
    jobs: Option<usize>,
    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Regular,
    Restricted,
    Auto,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Crossing,
    Plain,
}

#[derive(Clone, Copy, ValueEnum)]
enum TieArg {
    Shallow,
    Literal,
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: wallcross::Error| e.to_string())
}

fn parse_wall(s: &str) -> Result<Wall, String> {
    s.parse().map_err(|e: wallcross::Error| e.to_string())
}

fn parse_base(s: &str) -> Result<Base, String> {
    let v: u32 = s.parse().map_err(|_| format!("not a number: {s}"))?;
    Base::new(v).map_err(|e| e.to_string())
}

#[derive(Clone)]
struct SemanticsList(Vec<Semantics>);

fn parse_semantics_list(s: &str) -> Result<SemanticsList, String> {
    parse_semantics(s).map(SemanticsList)
}

#[derive(Subcommand)]
enum Sub {
    /// Mullineux image of an e-regular (or e-restricted) partition
    Mull {
        #[arg(short, long, value_parser = parse_partition)]
        partition: Partition,
        #[arg(short, long, value_parser = parse_base)]
        e: Base,
        /// Use the conjugated map on e-restricted input
        #[arg(long)]
        restricted: bool,
    },
    /// Farey walls of order n below an upper bound
    Farey {
        #[arg(short)]
        n: usize,
        #[arg(long, value_parser = parse_wall, default_value = "1/1")]
        upper: Wall,
    },
    /// Residue signatures and good boxes
    Crystal {
        #[arg(short, long, value_parser = parse_partition)]
        partition: Partition,
        #[arg(short, long, value_parser = parse_base)]
        e: Base,
        /// Only this residue [default: all]
        #[arg(short, long)]
        residue: Option<u32>,
    },
    /// The n smallest cells for the order of a wall
    Chamber {
        #[arg(short)]
        n: usize,
        #[arg(long, value_parser = parse_wall)]
        wall: Wall,
        #[arg(long, value_enum, default_value_t = TieArg::Shallow)]
        tie: TieArg,
    },
    /// Slide every ladder's cells to its deepest positions
    Regularize {
        #[arg(short, long, value_parser = parse_partition)]
        partition: Partition,
        #[arg(long, value_parser = parse_wall)]
        wall: Wall,
    },
    /// Cross every wall below the upper bound, starting from one partition
    Orbit {
        #[arg(short, long, value_parser = parse_partition)]
        partition: Partition,
        #[arg(long, value_parser = parse_wall, default_value = "1/1")]
        upper: Wall,
        #[arg(long, value_enum, default_value_t = ModeArg::Crossing)]
        mode: ModeArg,
        #[arg(long, value_enum, default_value_t = VariantArg::Auto)]
        variant: VariantArg,
    },
    /// Orbits of every partition of n
    OrbitAll {
        #[arg(short)]
        n: usize,
        #[arg(long, value_parser = parse_wall, default_value = "1/1")]
        upper: Wall,
        #[arg(long, value_enum, default_value_t = ModeArg::Crossing)]
        mode: ModeArg,
        #[arg(long, value_enum, default_value_t = VariantArg::Auto)]
        variant: VariantArg,
    },
    /// Composition, chamber formula and regularization cascade agree
    VerifyThm2 {
        #[arg(long, default_value_t = 12)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = TieArg::Shallow)]
        tie: TieArg,
    },
    /// Two-block shape law along the sign orbit
    CheckSign {
        /// Sizes to check (repeat or separate with commas)
        #[arg(short, required = true, value_delimiter = ',')]
        n: Vec<usize>,
        #[arg(long, value_enum, default_value_t = VariantArg::Restricted)]
        variant: VariantArg,
        #[arg(long)]
        allow_composite: bool,
        /// Also check the rim remark
        #[arg(long)]
        rim: bool,
    },
    /// One-box difference between the orbits of λ and λ plus a first-row box
    CheckGoodbox {
        #[arg(short)]
        m: usize,
        #[arg(long, value_enum, default_value_t = VariantArg::Auto)]
        variant: VariantArg,
        /// `all` or a comma list of direct_upcoming, direct_last,
        /// conjugate_upcoming, conjugate_last
        #[arg(long, value_parser = parse_semantics_list, default_value = "all")]
        semantics: SemanticsList,
    },
}

fn variant(v: VariantArg) -> Variant {
    match v {
        VariantArg::Regular => Variant::Regular,
        VariantArg::Restricted => Variant::Restricted,
        VariantArg::Auto => Variant::Auto,
    }
}

fn mode(m: ModeArg) -> OrbitMode {
    match m {
        ModeArg::Crossing => OrbitMode::Crossing,
        ModeArg::Plain => OrbitMode::Plain,
    }
}

fn tie(t: TieArg) -> TieBreak {
    match t {
        TieArg::Shallow => TieBreak::ShallowFirst,
        TieArg::Literal => TieBreak::Literal,
    }
}

fn command(sub: Sub) -> Command {
    match sub {
        Sub::Mull {
            partition,
            e,
            restricted,
        } => Command::Mull {
            partition,
            base: e,
            variant: if restricted {
                MullVariant::Restricted
            } else {
                MullVariant::Regular
            },
        },
        Sub::Farey { n, upper } => Command::Farey { order: n, upper },
        Sub::Crystal {
            partition,
            e,
            residue,
        } => Command::Crystal {
            partition,
            base: e,
            residue,
        },
        Sub::Chamber { n, wall, tie: t } => Command::Chamber {
            n,
            wall,
            tie: tie(t),
        },
        Sub::Regularize { partition, wall } => Command::Regularize { partition, wall },
        Sub::Orbit {
            partition,
            upper,
            mode: m,
            variant: v,
        } => Command::Orbit {
            partition,
            upper,
            mode: mode(m),
            variant: variant(v),
        },
        Sub::OrbitAll {
            n,
            upper,
            mode: m,
            variant: v,
        } => Command::OrbitAll {
            n,
            upper,
            mode: mode(m),
            variant: variant(v),
        },
        Sub::VerifyThm2 { n_max, tie: t } => Command::VerifyThm2 { n_max, tie: tie(t) },
        Sub::CheckSign {
            n,
            variant: v,
            allow_composite,
            rim,
        } => Command::CheckSign {
            n,
            variant: variant(v),
            allow_composite,
            rim,
        },
        Sub::CheckGoodbox {
            m,
            variant: v,
            semantics,
        } => Command::CheckGoodbox {
            m,
            variant: variant(v),
            semantics: semantics.0,
        },
    }
}

fn run(cli: Cli) -> Result<i32, CliError> {
    let mut cfg = RunConfig::new(command(cli.command));
    cfg.format = match cli.common.format {
        FormatArg::Text => Format::Text,
        FormatArg::Json => Format::Json,
        FormatArg::Csv => Format::Csv,
    };
    if let Some(j) = cli.common.jobs {
        cfg.jobs = j;
    }
    cfg.out = cli.common.out;
    log::debug!("running {cfg:?}");
    let output = execute(&cfg)?;
    emit(&cfg, &render(&cfg, &output)?)?;
    Ok(output.outcome.exit_code())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    // clap exits with 2 on usage errors by itself.
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("wallcross: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
