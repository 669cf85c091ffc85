use clap::{Args, Parser, Subcommand, ValueEnum};

use catalan2_core::Scalar;

#[derive(Debug, Parser)]
#[command(
    name = "catalan2",
    version,
    about = "Evaluate and cross-check Catalan numbers of the second kind, the Catalan functional and Q(n, y, p)",
    after_help = "Exit codes: 0 success, 1 representations disagree beyond --tol (or a numerical failure), 2 invalid input."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The ordinary Catalan number C_n from four closed forms and the recurrence
    Catalan {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        output: Output,
    },
    /// C_n(a, b) = [x^n] 1/(a + sqrt(b - x)) in every representation
    #[command(allow_negative_numbers = true)]
    C2 {
        /// a >= 0 (decimal, a/b or scientific; parsed exactly)
        #[arg(long, value_parser = scalar)]
        a: Scalar,
        /// b > 0
        #[arg(long, value_parser = scalar)]
        b: Scalar,
        #[arg(long)]
        n: u32,
        /// One of double_factorial, hyp_closed, hyp_unbounded, jacobi, legendre,
        /// legendre_sqrt_difference, quadrature, gf_coefficient, table_printed, or all
        #[arg(long, default_value = "all")]
        rep: String,
        /// gf: C_0 = 1/(a + sqrt b); paper: every value times pi, as the closed forms are printed
        #[arg(long, value_enum, default_value_t = NormalizationArg::Gf)]
        normalization: NormalizationArg,
        #[command(flatten)]
        compare: Compare,
    },
    /// The Catalan functional c_n(a, b; p) in every representation
    #[command(allow_negative_numbers = true)]
    Functional {
        /// a >= 0
        #[arg(long, value_parser = scalar)]
        a: Scalar,
        /// b > 0
        #[arg(long, value_parser = scalar)]
        b: Scalar,
        /// 0 < p < 1
        #[arg(long, value_parser = scalar)]
        p: Scalar,
        #[arg(long)]
        n: u32,
        /// One of double_sum, series, series_printed, quadrature, via_q, or all
        #[arg(long, default_value = "all")]
        rep: String,
        #[command(flatten)]
        compare: Compare,
    },
    /// Q(n, y, p) = sum_k (-pk)_n (-y)^k in every representation
    #[command(allow_negative_numbers = true)]
    Q {
        #[arg(long)]
        n: u32,
        /// 0 <= y <= 1
        #[arg(long, value_parser = scalar)]
        y: Scalar,
        /// 0 < p < 1
        #[arg(long, value_parser = scalar, default_value = "1/2")]
        p: Scalar,
        /// One of series, stirling, polylog, recurrence, hyp, hyp_rederived, or all
        #[arg(long, default_value = "all")]
        rep: String,
        #[command(flatten)]
        compare: Compare,
    },
    /// Measure every known misprint against the oracles
    Errata {
        #[command(flatten)]
        output: Output,
    },
    /// Run the built-in verification suites
    Selftest {
        /// Quadrature tolerance of the Beta-class suite
        #[arg(long, default_value_t = 1e-10)]
        quad_tol: f64,
        /// Inject the wrong convention (-1)!! = 0 into the double-factorial suite
        #[arg(long)]
        mutate_double_factorial: bool,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Debug, Args)]
pub struct Compare {
    /// Largest accepted pairwise relative difference under --rep all
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NormalizationArg {
    Gf,
    Paper,
}

fn scalar(s: &str) -> Result<Scalar, String> {
    Scalar::parse(s).ok_or_else(|| format!("`{s}` is not a finite number (use decimals, a/b or scientific notation)"))
}
