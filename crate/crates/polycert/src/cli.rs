//! Command-line front end.
//!
//! Each subcommand is a thin wrapper over one library entry point and
//! reports through a [`CommandResult`]: output lines plus a [`Status`]
//! that fixes the process exit code. The library's conventions carry over
//! directly, in particular that exhausting a level cap is *not* a
//! refutation and a missing falsifier witness is *not* a proof.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::cert::{
    build_g, find_min_level, polya_min_level, verify_certificate, CertificateFile,
    LevelSearch, ProblemInstance,
};
use crate::falsify::falsify;
use crate::parse::{parse_polynomial, parse_rational};
use crate::poly::{MultiIndex, Rational, SparsePolynomial};
use crate::support::{check_precondition, cumulative_support, support_of};
use crate::Error;

/// Exit disposition of a command.
///
/// | code | meaning                                          |
/// |------|--------------------------------------------------|
/// | 0    | certified / verified / no witness found          |
/// | 1    | level cap exhausted, positivity undecided        |
/// | 2    | refuted by a witness                             |
/// | 3    | input rejected or certificate failed verification|
/// | 4    | internal error (e.g. output file not writable)   |
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Status {
    Certified,
    Verified,
    NoWitness,
    Exhausted,
    Refuted,
    RejectedInput,
    InternalError,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Certified | Status::Verified | Status::NoWitness => 0,
            Status::Exhausted => 1,
            Status::Refuted => 2,
            Status::RejectedInput => 3,
            Status::InternalError => 4,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CommandResult {
    pub status: Status,
    pub lines: Vec<String>,
}

impl CommandResult {
    fn new(status: Status, lines: Vec<String>) -> Self {
        CommandResult { status, lines }
    }

    fn rejected(message: impl Into<String>) -> Self {
        CommandResult::new(Status::RejectedInput, vec![format!("error: {}", message.into())])
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "polycert",
    version,
    about = "Exact positivity certificates on the nonnegative slice of a level hypersurface"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the level-form precondition (nonnegative coefficients, every
    /// variable linear)
    Check(CheckArgs),
    /// Scan levels upward for a positivity certificate
    Search(SearchArgs),
    /// Verify a certificate file by exact arithmetic
    Verify(VerifyArgs),
    /// Minimal level at which the Polya expansion of a homogeneous form
    /// turns positive
    Polya(PolyaArgs),
    /// Hunt for a slice point where the target is nonpositive
    Falsify(FalsifyArgs),
    /// Print the averaged power sum g and its support
    Gn(GnArgs),
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    /// Number of variables
    #[arg(long)]
    pub n: usize,
    /// Level form, e.g. "x1+x2+x1^2"
    #[arg(long)]
    pub r: String,
    /// Height of the slice, a positive rational
    #[arg(long, default_value = "1")]
    pub height: String,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    /// Number of variables
    #[arg(long)]
    pub n: usize,
    /// Target polynomial
    #[arg(long)]
    pub f: String,
    /// Level form
    #[arg(long)]
    pub r: String,
    /// Height of the slice, a positive rational
    #[arg(long, default_value = "1")]
    pub height: String,
    /// Largest level to try
    #[arg(long = "max-N", default_value_t = 8)]
    pub max_level: u32,
    /// Write the certificate to this file as JSON
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Skip the unit-monomial precondition; completeness is lost
    #[arg(long)]
    pub unsafe_skip_precondition: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Certificate file produced by `search --out`
    pub cert: PathBuf,
    /// Skip the unit-monomial precondition; completeness is lost
    #[arg(long)]
    pub unsafe_skip_precondition: bool,
}

#[derive(Args, Debug)]
pub struct PolyaArgs {
    /// Number of variables
    #[arg(long)]
    pub n: usize,
    /// Homogeneous polynomial
    #[arg(long)]
    pub p: String,
    /// Largest level to try
    #[arg(long = "max-N", default_value_t = 8)]
    pub max_level: u32,
}

#[derive(Args, Debug)]
pub struct FalsifyArgs {
    /// Number of variables
    #[arg(long)]
    pub n: usize,
    /// Target polynomial
    #[arg(long)]
    pub f: String,
    /// Level form
    #[arg(long)]
    pub r: String,
    /// Height of the slice, a positive rational
    #[arg(long, default_value = "1")]
    pub height: String,
    /// Barycentric grid resolution on the direction simplex
    #[arg(long, default_value_t = 64)]
    pub grid: u32,
    /// Witness threshold and bisection tolerance
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    /// Skip the unit-monomial precondition; completeness is lost
    #[arg(long)]
    pub unsafe_skip_precondition: bool,
}

#[derive(Args, Debug)]
pub struct GnArgs {
    /// Number of variables
    #[arg(long)]
    pub n: usize,
    /// Level form
    #[arg(long)]
    pub r: String,
    /// Level of the averaged power sum
    #[arg(long = "N")]
    pub level: u32,
    /// Height of the slice, a positive rational
    #[arg(long, default_value = "1")]
    pub height: String,
}

pub fn run(command: Command) -> CommandResult {
    match command {
        Command::Check(args) => cmd_check(&args),
        Command::Search(args) => cmd_search(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::Polya(args) => cmd_polya(&args),
        Command::Falsify(args) => cmd_falsify(&args),
        Command::Gn(args) => cmd_gn(&args),
    }
}

fn parse_dimension(n: usize) -> Result<usize, CommandResult> {
    if n == 0 {
        Err(CommandResult::rejected(Error::InvalidDimension.to_string()))
    } else {
        Ok(n)
    }
}

fn parse_height(text: &str) -> Result<Rational, CommandResult> {
    let height = parse_rational(text).map_err(|e| CommandResult::rejected(e.to_string()))?;
    if num_traits::Signed::is_positive(&height) {
        Ok(height)
    } else {
        Err(CommandResult::rejected(Error::InvalidHeight(height).to_string()))
    }
}

fn parse_poly_arg(text: &str, n: usize, name: &str) -> Result<SparsePolynomial, CommandResult> {
    parse_polynomial(text, n)
        .map_err(|e| CommandResult::rejected(format!("in {name}: {e}")))
}

fn build_instance(
    f: &str,
    r: &str,
    height: &str,
    n: usize,
    skip_precondition: bool,
) -> Result<ProblemInstance, CommandResult> {
    let n = parse_dimension(n)?;
    let height = parse_height(height)?;
    let target = parse_poly_arg(f, n, "--f")?;
    let level_form = parse_poly_arg(r, n, "--r")?;
    let built = if skip_precondition {
        ProblemInstance::new_without_precondition(target, level_form, height)
    } else {
        ProblemInstance::new(target, level_form, height)
    };
    built.map_err(|e| CommandResult::rejected(e.to_string()))
}

fn cmd_check(args: &CheckArgs) -> CommandResult {
    let n = match parse_dimension(args.n) {
        Ok(n) => n,
        Err(result) => return result,
    };
    if let Err(result) = parse_height(&args.height) {
        return result;
    }
    let level_form = match parse_poly_arg(&args.r, n, "--r") {
        Ok(p) => p,
        Err(result) => return result,
    };
    if level_form.is_zero() {
        return CommandResult::rejected(Error::ZeroLevelForm.to_string());
    }
    let report = check_precondition(&level_form);
    let status = if report.passed() { Status::Verified } else { Status::RejectedInput };
    CommandResult::new(status, vec![report.to_string()])
}

fn cmd_search(args: &SearchArgs) -> CommandResult {
    let instance = match build_instance(
        &args.f,
        &args.r,
        &args.height,
        args.n,
        args.unsafe_skip_precondition,
    ) {
        Ok(instance) => instance,
        Err(result) => return result,
    };
    match find_min_level(&instance, args.max_level) {
        LevelSearch::Found(certificate) => {
            let mut lines = vec![
                format!("certified at level {}", certificate.level),
                format!("q = {}", certificate.positive_part),
                format!("h = {}", certificate.cofactor),
            ];
            if let Some(path) = &args.out {
                let file = CertificateFile::from_parts(&instance, &certificate);
                if let Err(e) = std::fs::write(path, file.to_json()) {
                    return CommandResult::new(
                        Status::InternalError,
                        vec![format!("error: cannot write {}: {}", path.display(), e)],
                    );
                }
                lines.push(format!("wrote {}", path.display()));
            }
            CommandResult::new(Status::Certified, lines)
        }
        LevelSearch::Exhausted { max_level } => CommandResult::new(
            Status::Exhausted,
            vec![format!(
                "no certificate up to level {max_level}; positivity undecided (larger levels may still succeed)"
            )],
        ),
    }
}

fn cmd_verify(args: &VerifyArgs) -> CommandResult {
    let text = match std::fs::read_to_string(&args.cert) {
        Ok(text) => text,
        Err(e) => {
            return CommandResult::rejected(format!("cannot read {}: {}", args.cert.display(), e))
        }
    };
    let file = match CertificateFile::from_json(&text) {
        Ok(file) => file,
        Err(e) => return CommandResult::rejected(format!("{}: {}", args.cert.display(), e)),
    };
    let (instance, certificate) = match file.to_parts(args.unsafe_skip_precondition) {
        Ok(parts) => parts,
        Err(e) => return CommandResult::rejected(format!("{}: {}", args.cert.display(), e)),
    };
    let report = verify_certificate(&instance, &certificate);
    let mut lines: Vec<String> = report.to_string().lines().map(str::to_string).collect();
    if report.passed() {
        lines.push(format!("certificate verified at level {}", certificate.level));
        CommandResult::new(Status::Verified, lines)
    } else {
        lines.push("certificate is INVALID".to_string());
        CommandResult::new(Status::RejectedInput, lines)
    }
}

fn cmd_polya(args: &PolyaArgs) -> CommandResult {
    let n = match parse_dimension(args.n) {
        Ok(n) => n,
        Err(result) => return result,
    };
    let p = match parse_poly_arg(&args.p, n, "--p") {
        Ok(p) => p,
        Err(result) => return result,
    };
    match polya_min_level(&p, args.max_level) {
        Ok(Some(level)) => CommandResult::new(
            Status::Certified,
            vec![format!("positive expansion at level {level}")],
        ),
        Ok(None) => CommandResult::new(
            Status::Exhausted,
            vec![format!(
                "no positive expansion up to level {}; positivity over the simplex undecided",
                args.max_level
            )],
        ),
        Err(e) => CommandResult::rejected(e.to_string()),
    }
}

fn cmd_falsify(args: &FalsifyArgs) -> CommandResult {
    let instance = match build_instance(
        &args.f,
        &args.r,
        &args.height,
        args.n,
        args.unsafe_skip_precondition,
    ) {
        Ok(instance) => instance,
        Err(result) => return result,
    };
    match falsify(&instance, args.grid, args.tol) {
        Ok(Some(witness)) => {
            let coords: Vec<String> =
                witness.point.iter().map(|x| format!("{x:.12}")).collect();
            CommandResult::new(
                Status::Refuted,
                vec![
                    "witness found".to_string(),
                    format!("point = ({})", coords.join(", ")),
                    format!("f = {:.12e}", witness.f_value),
                    format!("slice residual = {:.3e}", witness.r_residual),
                ],
            )
        }
        Ok(None) => CommandResult::new(
            Status::NoWitness,
            vec![format!(
                "no witness on a grid of resolution {} at tolerance {:e}; this is not a proof of positivity",
                args.grid, args.tol
            )],
        ),
        Err(e) => CommandResult::rejected(e.to_string()),
    }
}

fn cmd_gn(args: &GnArgs) -> CommandResult {
    let n = match parse_dimension(args.n) {
        Ok(n) => n,
        Err(result) => return result,
    };
    let height = match parse_height(&args.height) {
        Ok(height) => height,
        Err(result) => return result,
    };
    let level_form = match parse_poly_arg(&args.r, n, "--r") {
        Ok(p) => p,
        Err(result) => return result,
    };
    match build_g(&level_form, args.level, &height) {
        Ok(g) => {
            let support = support_of(&g);
            debug_assert_eq!(
                support,
                cumulative_support(&level_form, args.level).unwrap()
            );
            let indices: Vec<String> = support.iter().map(format_index).collect();
            CommandResult::new(
                Status::Verified,
                vec![
                    format!("g = {g}"),
                    format!("support = {{{}}}", indices.join(", ")),
                ],
            )
        }
        Err(e) => CommandResult::rejected(e.to_string()),
    }
}

fn format_index(index: &MultiIndex) -> String {
    let parts: Vec<String> = index.exponents().iter().map(u32::to_string).collect();
    format!("({})", parts.join(","))
}
