use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "orbicurve", version, about = "Orbifold hyperplane arrangements on projective space")]
pub struct Cli {
    /// Tab-separated output instead of JSON.
    #[arg(long, global = true)]
    pub tsv: bool,
    /// Write output to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum EnumerateKind {
    /// Tuples with reciprocal sum below one.
    Subunit,
    /// Tuples with reciprocal sum at least one (Fano or trivial canonical
    /// when the length is n+2).
    Fano,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Fano / trivial canonical / general type.
    Classify {
        #[arg(long)]
        n: u32,
        /// Comma separated multiplicities; `inf` and `p/q` allowed.
        #[arg(long = "type", value_name = "LIST")]
        type_: String,
    },
    /// Nondecreasing integer tuples in [2, cap].
    Enumerate {
        #[arg(long, value_enum, default_value = "subunit")]
        kind: EnumerateKind,
        /// Tuple length.
        #[arg(long)]
        len: usize,
        #[arg(long)]
        cap: u64,
    },
    /// Extends a tuple with reciprocal sum 1 - 1/b greedily.
    Sylvester {
        #[arg(long, value_name = "LIST")]
        start: String,
        #[arg(long)]
        steps: usize,
    },
    /// Largest sum of N unit fractions below one.
    BoundBn {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = orbicurve::enumfrac::DEFAULT_SEARCH_LIMIT)]
        limit: usize,
    },
    /// Orbifold rational / elliptic test for a marked curve.
    CurveCheck {
        #[arg(long)]
        n: u32,
        #[arg(long = "type", value_name = "LIST")]
        type_: String,
        /// JSON file {"genus", "contacts": [{"point", "pairs": [[j, t]]}]}.
        #[arg(long, value_name = "FILE")]
        curve: String,
        /// Use virtual multiplicities m/t.
        #[arg(long = "virtual")]
        virtual_: bool,
    },
    /// Uniruledness verdict for an integral type.
    Uniruled {
        #[arg(long)]
        n: u32,
        #[arg(long = "type", value_name = "LIST")]
        type_: String,
    },
    /// Every exceptional Fano type on P^3.
    Census,
    /// Rational normal curve through a point, meeting n+2 hyperplanes once.
    RncSolve {
        /// JSON file {"n", "hyperplanes": [[...]], "mults": [...]}.
        #[arg(long, value_name = "FILE")]
        arrangement: String,
        /// Homogeneous coordinates `p0:p1:...`.
        #[arg(long)]
        point: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        #[arg(long)]
        max_restarts: Option<usize>,
    },
    /// Orbifold base of a fibration from a JSON list of divisor records.
    OrbifoldBase {
        /// JSON file, or `-` for standard input.
        #[arg(value_name = "FILE")]
        input: String,
    },
    /// Local generators of orbifold symmetric differentials.
    Symdiff {
        /// Comma separated coefficients in [0, 1].
        #[arg(long, value_name = "LIST")]
        coeffs: String,
        #[arg(long)]
        m: u64,
        /// Only the denominator exponents of m(K + Δ).
        #[arg(long)]
        canonical: bool,
    },
    /// Regenerates every worked example as one JSON document.
    PaperTables {
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}
