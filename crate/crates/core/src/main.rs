use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use polarize::job::{self, JobSpec, OutputFormat};
use polarize::rational::NetKind;

/// Convert monomial-form curves and surfaces into Bezier control nets.
#[derive(Parser, Debug)]
#[command(name = "polarize", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Curve in the variable t.
    Curve {
        #[command(flatten)]
        common: Common,
        /// Degree of the net (default: degree of the map).
        #[arg(long)]
        degree: Option<usize>,
        /// Frame interval "r,s".
        #[arg(long, allow_hyphen_values = true)]
        frame: Option<String>,
    },
    /// Tensor-product patch in u and v.
    Rect {
        #[command(flatten)]
        common: Common,
        /// Bidegree "p,q" (default: degrees in u and v of the map).
        #[arg(long, value_parser = parse_pair)]
        bidegree: Option<(usize, usize)>,
        #[arg(long, allow_hyphen_values = true)]
        frame_u: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        frame_v: Option<String>,
    },
    /// Triangular patch in u and v.
    Tri {
        #[command(flatten)]
        common: Common,
        /// Total degree (default: total degree of the map).
        #[arg(long)]
        degree: Option<usize>,
        /// Frame "(a,b);(c,d);(e,f)".
        #[arg(long, allow_hyphen_values = true)]
        tri_frame: Option<String>,
    },
}

#[derive(Args, Debug)]
struct Common {
    /// Coordinate numerator; repeat for each coordinate.
    #[arg(long = "coord", required = true, allow_hyphen_values = true)]
    coords: Vec<String>,
    /// Common denominator (default 1).
    #[arg(long, allow_hyphen_values = true)]
    denom: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Samples per axis for OBJ output.
    #[arg(long, default_value_t = 16)]
    samples: usize,
    /// Significant digits in OBJ output.
    #[arg(long, default_value_t = 12)]
    precision: usize,
    /// Drop a coordinate (1-based) before output; repeatable.
    #[arg(long = "drop-coord")]
    drop_coords: Vec<usize>,
    /// Emit numerator polar values and weights without dividing.
    #[arg(long)]
    homogeneous: bool,
    /// Recompute every control point by brute-force enumeration.
    #[arg(long)]
    verify: bool,
    /// Name for the paper-format listing.
    #[arg(long)]
    label: Option<String>,
    /// Skip OBJ samples where the weight vanishes instead of failing.
    #[arg(long)]
    skip_singular: bool,
    /// Write to a file instead of stdout (only on success).
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Paper,
    Obj,
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected \"p,q\", got {s:?}"))?;
    let n = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("{x:?}: {e}"));
    Ok((n(a)?, n(b)?))
}

fn oracle_limit() -> Result<Option<usize>, String> {
    match std::env::var("POLARIZE_MAX_ORACLE") {
        Ok(v) => v.trim().parse().map(Some).map_err(|_| format!("POLARIZE_MAX_ORACLE={v:?} is not a number")),
        Err(_) => Ok(None),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let mut spec = JobSpec::new(NetKind::Curve, Vec::new());
    let common = match cli.command {
        Command::Curve { common, degree, frame } => {
            spec.degree = degree;
            spec.frame = frame;
            common
        }
        Command::Rect { common, bidegree, frame_u, frame_v } => {
            spec.kind = NetKind::Rect;
            spec.bidegree = bidegree;
            spec.frame_u = frame_u;
            spec.frame_v = frame_v;
            common
        }
        Command::Tri { common, degree, tri_frame } => {
            spec.kind = NetKind::Tri;
            spec.degree = degree;
            spec.tri_frame = tri_frame;
            common
        }
    };
    spec.coords = common.coords;
    spec.denom = common.denom;
    spec.format = match common.format {
        Format::Json => OutputFormat::Json,
        Format::Paper => OutputFormat::Paper,
        Format::Obj => OutputFormat::Obj,
    };
    spec.samples = common.samples;
    spec.precision = common.precision;
    spec.drop_coords = common.drop_coords;
    spec.homogeneous = common.homogeneous;
    spec.verify = common.verify;
    spec.label = common.label;
    spec.skip_singular = common.skip_singular;
    if spec.verify {
        match oracle_limit() {
            Ok(limit) => spec.oracle_limit = limit,
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        }
    }

    let mut buffer = Vec::new();
    let mut stderr = std::io::stderr();
    let status = job::run(&spec, &mut buffer, &mut stderr);
    if status != 0 {
        return ExitCode::from(status as u8);
    }
    let written = match &common.output {
        Some(path) => std::fs::write(path, &buffer).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            use std::io::Write;
            let mut out = std::io::stdout().lock();
            out.write_all(&buffer).and_then(|_| out.flush()).map_err(|e| e.to_string())
        }
    };
    match written {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: writing output: {e}");
            ExitCode::from(1)
        }
    }
}
