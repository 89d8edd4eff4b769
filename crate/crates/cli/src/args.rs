use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "fqlin", version, about = "Linearized equations, subfield sumsets and trace systems over finite fields")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a field and print its moduli (and optionally a subfield).
    Field(FieldCmd),
    /// Decide solvability of L_{f_1}(x_1)+…+L_{f_k}(x_k) = b and count solutions.
    Count(CountCmd),
    /// Size of the sumset F_{q^{d_1}} + … + F_{q^{d_k}}.
    Sumset(SumsetCmd),
    /// Solve a system of prescribed traces Tr_{n/d_i}(x) = β_i.
    Trace(TraceCmd),
    /// Compare the solver against brute force over a grid of equations.
    Verify(VerifyCmd),
}

#[derive(Debug, Args)]
pub struct FieldArgs {
    /// Characteristic.
    #[arg(long)]
    pub p: u64,
    /// q = p^s.
    #[arg(long, default_value_t = 1)]
    pub s: u32,
    /// Seed for modulus generation and any random search.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Modulus of the top extension over F_q, e.g. "x^2+x+1".
    #[arg(long)]
    pub modulus: Option<String>,
    /// Modulus of F_q over F_p.
    #[arg(long)]
    pub base_modulus: Option<String>,
}

#[derive(Debug, Args)]
pub struct Caps {
    /// Largest number of elements or tuples any enumeration may visit.
    #[arg(long, env = "FQLIN_ENUM_CAP", default_value_t = fqlin::field::DEFAULT_ENUM_CAP)]
    pub enum_cap: u64,
    /// Largest field accepted, in bits of log2 |F_{q^ℓ}|.
    #[arg(long, env = "FQLIN_MAX_FIELD_BITS", default_value_t = fqlin::field::DEFAULT_MAX_FIELD_BITS)]
    pub max_field_bits: u64,
}

#[derive(Debug, Args)]
pub struct FieldCmd {
    #[command(flatten)]
    pub field: FieldArgs,
    #[arg(long)]
    pub ell: usize,
    /// List the elements of F_{q^d}.
    #[arg(long)]
    pub subfield: Option<usize>,
    #[command(flatten)]
    pub caps: Caps,
    /// Print a JSON object instead of key: value lines
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct CountCmd {
    #[command(flatten)]
    pub field: FieldArgs,
    /// Subfield degrees d_1,…,d_k.
    #[arg(long)]
    pub dims: String,
    /// Polynomials f_1;…;f_k.
    #[arg(long)]
    pub f: String,
    /// Right-hand side as comma-separated coordinates in the ambient field.
    #[arg(long, default_value = "0")]
    pub b: String,
    /// Degree m of a subfield F_{q^m} containing b.
    #[arg(long, default_value_t = 1)]
    pub b_deg: usize,
    /// Ambient degree; must be a common multiple of the d_i and m.
    #[arg(long)]
    pub ell: Option<usize>,
    /// Also print one explicit solution.
    #[arg(long)]
    pub solve: bool,
    /// Also print every solution (bounded by --enum-cap).
    #[arg(long)]
    pub list: bool,
    #[command(flatten)]
    pub caps: Caps,
    /// Print a JSON object instead of key: value lines
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct SumsetCmd {
    #[command(flatten)]
    pub field: FieldArgs,
    #[arg(long)]
    pub dims: String,
    /// Enumerate the sumset and compare.
    #[arg(long)]
    pub verify: bool,
    #[command(flatten)]
    pub caps: Caps,
    /// Print a JSON object instead of key: value lines
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct TraceCmd {
    #[command(flatten)]
    pub field: FieldArgs,
    #[arg(long)]
    pub n: usize,
    /// Targets "d1:β1;d2:β2;…" with β_i as coordinates in F_{q^n}.
    #[arg(long)]
    pub targets: String,
    /// Scan F_{q^n} and compare the fiber size.
    #[arg(long)]
    pub verify: bool,
    #[command(flatten)]
    pub caps: Caps,
    /// Print a JSON object instead of key: value lines
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct VerifyCmd {
    /// Grid preset: small, tiny or empty.
    #[arg(long, default_value = "small")]
    pub grid: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Override the preset's coefficient fields, e.g. "2,3,4".
    #[arg(long)]
    pub q_list: Option<String>,
    #[arg(long)]
    pub k_max: Option<usize>,
    #[arg(long)]
    pub d_max: Option<usize>,
    #[arg(long)]
    pub random_b: Option<usize>,
    #[arg(long, env = "FQLIN_ENUM_CAP", default_value_t = fqlin::field::DEFAULT_ENUM_CAP)]
    pub enum_cap: u64,
    /// Harness self-test: skews every formula exponent by one.
    #[arg(long, hide = true)]
    pub corrupt: bool,
    /// Print a JSON object instead of key: value lines
    #[arg(long)]
    pub json: bool,
}
