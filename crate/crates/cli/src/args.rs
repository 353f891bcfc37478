use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fcc_trig::InterpKind;

#[derive(Parser, Debug)]
#[command(
    name = "fcc-trig",
    version,
    about = "Trigonometric interpolation and cubature on the fcc lattice",
    after_help = "Exit codes: 0 success, 1 usage error, 2 verification failure, 3 I/O error.\n\
                  FCC_TRIG_THREADS caps the worker threads (0 or unset = all cores)."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List a node set with strata and cubature weights.
    Nodes(NodesArgs),
    /// Interpolate a builtin function or sampled node values and evaluate on a grid.
    Interpolate(InterpolateArgs),
    /// Apply the dodecahedral or tetrahedral cubature rule to a builtin function.
    Cubature(CubatureArgs),
    /// Estimate the Lebesgue constant of an operator.
    Lebesgue(LebesgueArgs),
    /// Evaluate a kernel at a point or on a grid.
    Kernel(KernelArgs),
    /// Check the exact identities at one degree and print a pass/fail table.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Args, Debug)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    /// Write here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SetName {
    /// ℍ_n, the half-open nodes of the dodecahedron.
    Hn,
    /// ℍ_n*, the closed nodes.
    Hstar,
    /// ℍ_n°, the interior nodes.
    Hcirc,
    /// Λ_n, the nodes of the closed tetrahedron.
    Lambda,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    In,
    Instar,
    Ln,
    Lnstar,
}

impl From<KindArg> for InterpKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::In => InterpKind::In,
            KindArg::Instar => InterpKind::InStar,
            KindArg::Ln => InterpKind::Ln,
            KindArg::Lnstar => InterpKind::LnStar,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Builtin {
    /// The constant 1.
    One,
    /// φ_k for the index given by --k.
    Phi,
    /// The generalized cosine TC_k (--k ordered non-increasingly).
    Tc,
    /// The generalized sine TS_k (--k strictly decreasing).
    Ts,
    /// (1/4) Σ_j exp(sin 2πt_j).
    Expsin,
    /// exp(-Σ_j sin²(πt_j)).
    Gauss,
}

#[derive(Args, Debug)]
pub struct NodesArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long, value_enum, default_value = "hstar")]
    pub set: SetName,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct InterpolateArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long, value_enum, default_value = "lnstar")]
    pub kind: KindArg,
    #[arg(long = "f", value_enum, required_unless_present = "samples", conflicts_with = "samples")]
    pub function: Option<Builtin>,
    /// Frequency index for --f phi, tc or ts, as `a,b,c,d`.
    #[arg(long, value_parser = parse_index, allow_hyphen_values = true)]
    pub k: Option<[i64; 4]>,
    /// CSV of node values with header `j1,j2,j3,j4,re,im`.
    #[arg(long)]
    pub samples: Option<PathBuf>,
    /// Evaluation points per axis.
    #[arg(long, default_value_t = 9)]
    pub grid: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct CubatureArgs {
    #[arg(long)]
    pub n: u32,
    /// `hstar` for the dodecahedral rule, `lambda` for the tetrahedral one.
    #[arg(long, value_enum, default_value = "hstar")]
    pub set: SetName,
    #[arg(long = "f", value_enum)]
    pub function: Builtin,
    #[arg(long, value_parser = parse_index, allow_hyphen_values = true)]
    pub k: Option<[i64; 4]>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum LebesgueKind {
    In,
    Instar,
    Ln,
    Lnstar,
    /// The Fourier partial sum S_n.
    Sn,
}

#[derive(Args, Debug)]
pub struct LebesgueArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long, value_enum, default_value = "lnstar")]
    pub kind: LebesgueKind,
    /// Sample points per axis; defaults to 25 (17 for sn).
    #[arg(long)]
    pub grid: Option<usize>,
    /// Quadrature order per axis for sn.
    #[arg(long, default_value_t = 64)]
    pub quad: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KernelName {
    /// D_n = Θ_{n+1} - Θ_n.
    Dirichlet,
    /// The symmetric interpolation kernel Φ_n*.
    Phistar,
    /// The half-open interpolation kernel Φ_n.
    Phi,
    /// A fundamental interpolation function; needs --kind and the node --k.
    Fundamental,
}

#[derive(Args, Debug)]
pub struct KernelArgs {
    #[arg(long)]
    pub n: u32,
    #[arg(long = "f", value_enum, default_value = "dirichlet")]
    pub kernel: KernelName,
    #[arg(long, value_enum, default_value = "lnstar")]
    pub kind: KindArg,
    #[arg(long, value_parser = parse_index, allow_hyphen_values = true)]
    pub k: Option<[i64; 4]>,
    /// A single point `t1,t2,t3,t4`; without it the kernel is tabulated on the dodecahedron.
    #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
    pub t: Option<[f64; 4]>,
    #[arg(long, default_value_t = 9)]
    pub grid: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 2)]
    pub n: u32,
    #[command(flatten)]
    pub output: OutputArgs,
}

fn split4<T: std::str::FromStr>(s: &str) -> Result<[T; 4], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 4 {
        return Err(format!("expected four comma-separated values, got `{s}`"));
    }
    let mut out = Vec::with_capacity(4);
    for p in parts {
        out.push(p.parse::<T>().map_err(|_| format!("cannot parse `{p}`"))?);
    }
    out.try_into().map_err(|_| unreachable!())
}

fn parse_index(s: &str) -> Result<[i64; 4], String> {
    split4(s)
}

fn parse_point(s: &str) -> Result<[f64; 4], String> {
    split4(s)
}
