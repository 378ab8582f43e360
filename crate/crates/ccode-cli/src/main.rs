//! `ccode` — batch front end for the algebraic channel-coding toolkit.
//!
//! Conventions shared by every command:
//! - Words are written as digit strings (`1001011`) when the field has at
//!   most 10 elements, and as dot-separated symbol values (`10.3.0.7`)
//!   otherwise; coefficient/position 0 comes first. Erasures are `e`.
//! - Generator matrices are comma-separated word rows.
//! - Channel specs are `bsc:0.11`, `bec:0.5`, `qsym:5:0.05`; the grid
//!   commands instead take `--family bsc|bec|qsym:<q>` plus `--deltas`.
//! - CSV output carries a header row and prints probabilities with 12
//!   significant digits. With fixed flags, seed, and a single worker the
//!   bytes are identical across runs.
//! - Exit status: 0 on success (a decoder reporting failure on a
//!   received word is a computed result, not an error), 1 on domain
//!   errors, 2 on usage errors.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::exit;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ccode::bch::{default_prime_poly, BchCode};
use ccode::channel::{
    exact_block_error, pcb, simulate, BlockScheme, Dist, Dmc, MinDistanceScheme,
};
use ccode::cyclic::CyclicCode;
use ccode::gf::Field;
use ccode::linear::{bhattacharyya, hamming_7_4_generator, LinearCode, SyndromeScheme};
use ccode::matf::MatF;
use ccode::poly::Poly;
use ccode::rs::RsCode;

#[derive(Parser)]
#[command(
    name = "ccode",
    version,
    about = "Finite fields, linear/cyclic/RS/BCH codes, optimal decoders, channel simulation"
)]
struct Cli {
    /// RNG seed for Monte Carlo commands
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write the output to a file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for Monte Carlo simulation
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Finite-field tables and element inspection
    Field {
        #[command(subcommand)]
        sub: FieldCmd,
    },
    /// Linear block codes given by a generator matrix
    Code {
        #[command(subcommand)]
        sub: CodeCmd,
    },
    /// Cyclic codes given by a generator polynomial
    Cyclic {
        #[command(subcommand)]
        sub: CyclicCmd,
    },
    /// Reed–Solomon codes over a chosen field
    Rs {
        #[command(subcommand)]
        sub: RsCmd,
    },
    /// Binary BCH codes
    Bch {
        #[command(subcommand)]
        sub: BchCmd,
    },
    /// Monte Carlo block/info error rates over a delta grid (CSV)
    Simulate(SimArgs),
    /// Exact MAP block error of a scheme's codebook over a delta grid (CSV)
    Exact(ExactArgs),
    /// Exhaustive best-codebook search per block length and size (CSV)
    Search(SearchArgs),
    /// Exact error rates with union-bound and per-block cross-checks (CSV)
    Bound(BoundArgs),
}

#[derive(Subcommand)]
enum FieldCmd {
    /// Print the addition and multiplication tables
    Table { spec: String },
    /// Print size, characteristic, and the primitive-element power list
    Info { spec: String },
    /// Minimal polynomial and conjugacy class of an element
    Minpoly { spec: String, elem: u64 },
}

#[derive(Subcommand)]
enum CodeCmd {
    /// Dimensions, distance, weight enumerator, canonical G and H
    Info {
        #[arg(long, default_value = "2")]
        field: String,
        /// Generator matrix rows, comma separated
        #[arg(long)]
        g: String,
    },
    /// Encode an info word
    Encode {
        #[arg(long, default_value = "2")]
        field: String,
        #[arg(long)]
        g: String,
        #[arg(long)]
        u: String,
    },
    /// Syndrome-decode a received word (most-likely coset leader)
    Decode {
        #[arg(long, default_value = "2")]
        field: String,
        #[arg(long)]
        g: String,
        #[arg(long)]
        y: String,
        /// Per-symbol error probability defining the leader ordering
        #[arg(long, default_value_t = 0.11)]
        delta: f64,
    },
    /// Print the dual code
    Dual {
        #[arg(long, default_value = "2")]
        field: String,
        #[arg(long)]
        g: String,
    },
}

#[derive(Subcommand)]
enum CyclicCmd {
    /// Construct the code and print k, h(x), G, and H
    New {
        #[arg(long, default_value = "2")]
        field: String,
        #[arg(long)]
        n: usize,
        /// Generator polynomial coefficients, ascending
        #[arg(long)]
        g: String,
    },
    /// Encode with one of the three encoders
    Encode {
        #[arg(long, default_value = "2")]
        field: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        g: String,
        #[arg(long, value_enum, default_value_t = Style::Mult)]
        style: Style,
        #[arg(long)]
        u: String,
    },
    /// Invert an encoder on a codeword
    Decode {
        #[arg(long, default_value = "2")]
        field: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        g: String,
        #[arg(long, value_enum, default_value_t = Style::Mult)]
        style: Style,
        #[arg(long)]
        y: String,
    },
    /// Syndrome polynomial of a received word
    Syndrome {
        #[arg(long, default_value = "2")]
        field: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        g: String,
        #[arg(long)]
        y: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Style {
    /// c = u·g
    Mult,
    /// data in the high coefficients
    Right,
    /// data in the low coefficients
    Left,
}

#[derive(Subcommand)]
enum RsCmd {
    /// Construct the code and print its parameters
    New(RsSpec),
    /// Evaluation-map encoding
    Encode {
        #[command(flatten)]
        spec: RsSpec,
        #[arg(long)]
        u: String,
    },
    /// Syndromes of a received word (primitive variant)
    Syndrome {
        #[command(flatten)]
        spec: RsSpec,
        #[arg(long)]
        y: String,
    },
    /// Recover the info word from a word with erasures (`e` symbols)
    DecodeErasures {
        #[command(flatten)]
        spec: RsSpec,
        #[arg(long)]
        y: String,
    },
}

#[derive(Args, Clone)]
struct RsSpec {
    /// Field spec, e.g. `5` or `2^3:1101`
    #[arg(long)]
    field: String,
    #[arg(long)]
    k: usize,
    #[arg(long, value_enum, default_value_t = VariantArg::Primitive)]
    variant: VariantArg,
    /// Evaluation points dropped from the full code (punctured variant)
    #[arg(long, default_value_t = 1)]
    removed: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Primitive,
    Full,
    Punctured,
}

#[derive(Subcommand)]
enum BchCmd {
    /// Construct the code and print its parameters
    New(BchSpec),
    /// Pick parameters for a target correction radius
    Design {
        /// Largest usable block length
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        t: usize,
    },
    /// Encode an info word
    Encode {
        #[command(flatten)]
        spec: BchSpec,
        #[arg(long)]
        u: String,
    },
    /// Correct a received word (bounded-distance decoding)
    Decode {
        #[command(flatten)]
        spec: BchSpec,
        #[arg(long)]
        y: String,
        #[arg(long, value_enum, default_value_t = Method::Bm)]
        method: Method,
    },
    /// Recover the info word from a word with erasures (`e` symbols)
    DecodeErasures {
        #[command(flatten)]
        spec: BchSpec,
        #[arg(long)]
        y: String,
    },
}

#[derive(Args, Clone)]
struct BchSpec {
    #[arg(long)]
    m: u32,
    #[arg(long)]
    rs_k: usize,
    /// Prime polynomial coefficients, ascending (default: built-in table)
    #[arg(long)]
    prime_poly: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    /// Berlekamp–Massey
    Bm,
    /// Closed form for t = 2 codes
    Two,
}

#[derive(Args)]
struct SimArgs {
    /// `rep:<n>`, `hamming74`, `bch:<m>:<rs_k>`, or `mindist:<w|w|...>`
    #[arg(long)]
    scheme: String,
    /// `bsc`, `bec`, or `qsym:<q>`
    #[arg(long, default_value = "bsc")]
    family: String,
    #[arg(long, value_delimiter = ',', required = true)]
    deltas: Vec<f64>,
    #[arg(long, default_value_t = 100_000)]
    trials: u64,
}

#[derive(Args)]
struct ExactArgs {
    #[arg(long)]
    scheme: String,
    #[arg(long, default_value = "bsc")]
    family: String,
    #[arg(long, value_delimiter = ',', required = true)]
    deltas: Vec<f64>,
}

#[derive(Args)]
struct SearchArgs {
    /// Channel spec, e.g. `bsc:0.11`
    #[arg(long, default_value = "bsc:0.11")]
    channel: String,
    #[arg(long, default_value_t = 2)]
    n_min: u32,
    /// Default 5 (7 with --full)
    #[arg(long)]
    n_max: Option<u32>,
    /// Codebook sizes; default 2,3 (2,3,4 with --full)
    #[arg(long, value_delimiter = ',')]
    sizes: Option<Vec<usize>>,
    /// Unlock the full frontier (n to 7, sizes to 4; takes minutes)
    #[arg(long)]
    full: bool,
    /// Abort if the estimated operation count exceeds this
    #[arg(long, default_value_t = 10_000_000_000)]
    max_cost: u64,
    /// Reference number of channel uses for the per-block column
    #[arg(long, default_value_t = 420)]
    total: u64,
}

#[derive(Args)]
struct BoundArgs {
    /// Linear schemes: `rep:<n>`, `hamming74`, `bch:<m>:<rs_k>`
    #[arg(long, value_delimiter = ',', default_value = "rep:1,rep:3,rep:5,rep:7,hamming74")]
    codes: Vec<String>,
    #[arg(long, default_value = "bsc")]
    family: String,
    #[arg(long, value_delimiter = ',', required = true)]
    deltas: Vec<f64>,
    /// Reference number of channel uses for the per-block column
    #[arg(long, default_value_t = 420)]
    total: u64,
    /// Trials for the Monte Carlo fallback on non-enumerable codes
    #[arg(long, default_value_t = 100_000)]
    trials: u64,
}

// ------------------------------------------------------------- formatting

/// Probabilities print with 12 significant digits.
fn prob(x: f64) -> String {
    format!("{x:.11e}")
}

fn word_string(field: &Field, w: &[u64]) -> String {
    if field.q() <= 10 {
        w.iter().map(|s| s.to_string()).collect()
    } else {
        w.iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join(".")
    }
}

fn matrix_lines(field: &Field, m: &MatF) -> String {
    if m.rows() == 0 {
        return "(empty)\n".into();
    }
    let mut s = String::new();
    for r in m.rows_iter() {
        let _ = writeln!(s, "{}", word_string(field, r));
    }
    s
}

// --------------------------------------------------------------- parsing

/// Symbol tokens: one character each, unless the string contains dots.
fn tokens(s: &str) -> Vec<String> {
    if s.contains('.') {
        s.split('.').map(str::to_string).collect()
    } else {
        s.chars().map(|c| c.to_string()).collect()
    }
}

fn parse_word(s: &str, field: &Field) -> Result<Vec<u64>, String> {
    tokens(s)
        .iter()
        .map(|t| {
            let v: u64 = t
                .parse()
                .map_err(|_| format!("bad symbol {t:?} in word {s:?}"))?;
            if v >= field.q() {
                return Err(format!("symbol {v} is not in F_{}", field.q()));
            }
            Ok(v)
        })
        .collect()
}

fn parse_erasure_word(s: &str, field: &Field) -> Result<Vec<Option<u64>>, String> {
    tokens(s)
        .iter()
        .map(|t| {
            if t == "e" {
                return Ok(None);
            }
            let v: u64 = t
                .parse()
                .map_err(|_| format!("bad symbol {t:?} in word {s:?}"))?;
            if v >= field.q() {
                return Err(format!("symbol {v} is not in F_{}", field.q()));
            }
            Ok(Some(v))
        })
        .collect()
}

fn parse_matrix(s: &str, field: &Field) -> Result<MatF, String> {
    let rows: Vec<Vec<u64>> = s
        .split(',')
        .map(|r| parse_word(r, field))
        .collect::<Result<_, _>>()?;
    if rows.is_empty() {
        return Err("empty matrix".into());
    }
    let cols = rows[0].len();
    if rows.iter().any(|r| r.len() != cols) {
        return Err("matrix rows have different lengths".into());
    }
    Ok(MatF::from_rows(field.clone(), &rows))
}

fn parse_field(spec: &str) -> Result<Field, String> {
    Field::parse_spec(spec).map_err(|e| format!("field spec {spec:?}: {e}"))
}

fn family_channel(family: &str, delta: f64) -> Result<Dmc, String> {
    let ch = if family == "bsc" {
        Dmc::bsc(delta)
    } else if family == "bec" {
        Dmc::bec(delta)
    } else if let Some(q) = family.strip_prefix("qsym:") {
        let q: u64 = q
            .parse()
            .map_err(|_| format!("bad alphabet size in family {family:?}"))?;
        Dmc::q_sym(q, delta)
    } else {
        return Err(format!(
            "unknown channel family {family:?} (use bsc, bec, or qsym:<q>)"
        ));
    };
    ch.map_err(|e| format!("channel {family}:{delta}: {e}"))
}

// ------------------------------------------------------- scheme handling

enum SchemeSpec {
    Rep(usize),
    Hamming74,
    Bch(u32, usize),
    MinDist(Vec<Vec<u64>>),
}

fn parse_scheme(s: &str) -> Result<SchemeSpec, String> {
    if let Some(n) = s.strip_prefix("rep:") {
        let n: usize = n.parse().map_err(|_| format!("bad length in {s:?}"))?;
        if n == 0 {
            return Err("repetition length must be positive".into());
        }
        return Ok(SchemeSpec::Rep(n));
    }
    if s == "hamming74" {
        return Ok(SchemeSpec::Hamming74);
    }
    if let Some(rest) = s.strip_prefix("bch:") {
        let (m, rs_k) = rest
            .split_once(':')
            .ok_or_else(|| format!("scheme {s:?} needs bch:<m>:<rs_k>"))?;
        let m: u32 = m.parse().map_err(|_| format!("bad m in {s:?}"))?;
        let rs_k: usize = rs_k.parse().map_err(|_| format!("bad rs_k in {s:?}"))?;
        return Ok(SchemeSpec::Bch(m, rs_k));
    }
    if let Some(words) = s.strip_prefix("mindist:") {
        let f2 = Field::prime(2).unwrap();
        let codebook: Vec<Vec<u64>> = words
            .split('|')
            .map(|w| parse_word(w, &f2))
            .collect::<Result<_, _>>()?;
        if codebook.len() < 2 {
            return Err("mindist needs at least two words".into());
        }
        let n = codebook[0].len();
        if codebook.iter().any(|w| w.len() != n) {
            return Err("mindist words have different lengths".into());
        }
        return Ok(SchemeSpec::MinDist(codebook));
    }
    Err(format!(
        "unknown scheme {s:?} (use rep:<n>, hamming74, bch:<m>:<rs_k>, mindist:<w|w>)"
    ))
}

impl SchemeSpec {
    fn codebook(&self) -> Result<Vec<Vec<u64>>, String> {
        match self {
            SchemeSpec::Rep(n) => Ok(vec![vec![0; *n], vec![1; *n]]),
            SchemeSpec::Hamming74 => {
                let code = LinearCode::from_generator(hamming_7_4_generator(
                    Field::prime(2).unwrap(),
                ))
                .unwrap();
                code.codewords().map_err(|e| e.to_string())
            }
            SchemeSpec::Bch(m, rs_k) => Ok(make_bch_cli(*m, *rs_k, &None)?
                .as_linear_code()
                .codewords()
                .map_err(|e| e.to_string())?),
            SchemeSpec::MinDist(words) => Ok(words.clone()),
        }
    }

    /// Build the decoding scheme for one channel realization.
    fn runnable(&self, ch: &Dmc, delta: f64) -> Result<RunScheme, String> {
        match self {
            SchemeSpec::Rep(_) | SchemeSpec::MinDist(_) => {
                let book = self.codebook()?;
                if book.iter().flatten().any(|&s| s as usize >= ch.nx()) {
                    return Err("codebook symbol outside the channel input alphabet".into());
                }
                Ok(RunScheme::Min(MinDistanceScheme::new(book)))
            }
            SchemeSpec::Hamming74 => {
                if ch.ny() != 2 {
                    return Err("hamming74 simulation needs a binary-output channel".into());
                }
                let code = LinearCode::from_generator(hamming_7_4_generator(
                    Field::prime(2).unwrap(),
                ))
                .unwrap();
                let noise = Dist::new(vec![1.0 - delta, delta]).map_err(|e| e.to_string())?;
                let table = code.build_syndrome_table(&noise).map_err(|e| e.to_string())?;
                Ok(RunScheme::Synd(SyndromeScheme::new(code, table)))
            }
            SchemeSpec::Bch(m, rs_k) => {
                if ch.ny() != 2 {
                    return Err("bch simulation needs a binary-output channel".into());
                }
                Ok(RunScheme::Bd(BdScheme {
                    code: make_bch_cli(*m, *rs_k, &None)?,
                }))
            }
        }
    }
}

/// Bounded-distance decoding as a simulation scheme. A decoding failure
/// keeps the received word as the codeword estimate and emits an
/// out-of-alphabet info sentinel, so failures always count as errors.
struct BdScheme {
    code: BchCode,
}

impl BlockScheme for BdScheme {
    fn info_len(&self) -> usize {
        self.code.k_tilde()
    }
    fn block_len(&self) -> usize {
        self.code.n()
    }
    fn alphabet(&self) -> u64 {
        2
    }
    fn encode(&self, u: &[u64]) -> Vec<u64> {
        self.code.encode(u)
    }
    fn decode(&self, y: &[u64]) -> (Vec<u64>, Vec<u64>) {
        match self.code.bm_decode(y) {
            Ok(rep) => {
                let f2 = self.code.as_cyclic().field().clone();
                let u = self
                    .code
                    .as_cyclic()
                    .decode_mult(&Poly::new(f2, rep.codeword.clone()))
                    .coeffs_padded(self.code.k_tilde());
                (rep.codeword, u)
            }
            Err(_) => (y.to_vec(), vec![2; self.code.k_tilde()]),
        }
    }
}

enum RunScheme {
    Min(MinDistanceScheme),
    Synd(SyndromeScheme),
    Bd(BdScheme),
}

impl BlockScheme for RunScheme {
    fn info_len(&self) -> usize {
        match self {
            RunScheme::Min(s) => s.info_len(),
            RunScheme::Synd(s) => s.info_len(),
            RunScheme::Bd(s) => s.info_len(),
        }
    }
    fn block_len(&self) -> usize {
        match self {
            RunScheme::Min(s) => s.block_len(),
            RunScheme::Synd(s) => s.block_len(),
            RunScheme::Bd(s) => s.block_len(),
        }
    }
    fn alphabet(&self) -> u64 {
        match self {
            RunScheme::Min(s) => s.alphabet(),
            RunScheme::Synd(s) => s.alphabet(),
            RunScheme::Bd(s) => s.alphabet(),
        }
    }
    fn encode(&self, u: &[u64]) -> Vec<u64> {
        match self {
            RunScheme::Min(s) => s.encode(u),
            RunScheme::Synd(s) => s.encode(u),
            RunScheme::Bd(s) => s.encode(u),
        }
    }
    fn decode(&self, y: &[u64]) -> (Vec<u64>, Vec<u64>) {
        match self {
            RunScheme::Min(s) => s.decode(y),
            RunScheme::Synd(s) => s.decode(y),
            RunScheme::Bd(s) => s.decode(y),
        }
    }
}

fn make_bch_cli(m: u32, rs_k: usize, prime_poly: &Option<String>) -> Result<BchCode, String> {
    let coeffs: Vec<u64> = match prime_poly {
        Some(s) => parse_word(s, &Field::prime(2).unwrap())?,
        None => default_prime_poly(m)
            .ok_or_else(|| format!("no default prime polynomial for m = {m}; pass --prime-poly"))?
            .to_vec(),
    };
    BchCode::make_bch(m, rs_k, &coeffs).map_err(|e| e.to_string())
}

// ---------------------------------------------------------------- fields

fn cmd_field_table(spec: &str) -> Result<String, String> {
    let f = parse_field(spec)?;
    if f.q() > 64 {
        return Err(format!("table printing is capped at q = 64, got {}", f.q()));
    }
    let width = (f.q() - 1).to_string().len();
    let mut s = header_field(&f);
    let _ = writeln!(s, "\nadd:");
    for a in f.elems() {
        let row: Vec<String> = f
            .elems()
            .map(|b| format!("{:>width$}", f.add(a, b)))
            .collect();
        let _ = writeln!(s, "{}", row.join(" "));
    }
    let _ = writeln!(s, "\nmul:");
    for a in f.elems() {
        let row: Vec<String> = f
            .elems()
            .map(|b| format!("{:>width$}", f.mul(a, b)))
            .collect();
        let _ = writeln!(s, "{}", row.join(" "));
    }
    Ok(s)
}

fn header_field(f: &Field) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "field: F_{} ({})", f.q(), f.spec_string());
    let _ = writeln!(s, "p: {}  m: {}", f.p(), f.m());
    if let Some(pp) = f.prime_poly() {
        let _ = writeln!(
            s,
            "prime_poly: {}",
            Poly::new(f.prime_subfield(), pp.to_vec())
        );
    }
    let _ = writeln!(s, "alpha: {}", f.alpha());
    s
}

fn cmd_field_info(spec: &str) -> Result<String, String> {
    let f = parse_field(spec)?;
    let mut s = header_field(&f);
    if f.q() <= 256 {
        let powers: Vec<String> = (0..f.q() - 1)
            .map(|e| f.alpha_pow(e as i64).to_string())
            .collect();
        let _ = writeln!(s, "alpha powers: {}", powers.join(" "));
    }
    Ok(s)
}

fn cmd_field_minpoly(spec: &str, elem: u64) -> Result<String, String> {
    let f = parse_field(spec)?;
    if elem >= f.q() {
        return Err(format!("element {elem} is not in F_{}", f.q()));
    }
    let phi = f.minimal_polynomial(elem);
    let class: Vec<String> = f
        .conjugacy_class(elem)
        .iter()
        .map(|c| c.to_string())
        .collect();
    let mut s = String::new();
    let _ = writeln!(s, "element: {elem}");
    let _ = writeln!(s, "conjugacy class: {}", class.join(" "));
    let _ = writeln!(s, "minimal polynomial: {phi}");
    Ok(s)
}

// ----------------------------------------------------------- linear codes

fn build_linear(field: &str, g: &str) -> Result<(Field, LinearCode), String> {
    let f = parse_field(field)?;
    let gm = parse_matrix(g, &f)?;
    let code = LinearCode::from_generator(gm).map_err(|e| e.to_string())?;
    Ok((f, code))
}

fn cmd_code_info(field: &str, g: &str) -> Result<String, String> {
    let (f, code) = build_linear(field, g)?;
    let mut s = String::new();
    let _ = writeln!(s, "n: {}", code.n());
    let _ = writeln!(s, "k: {}", code.k());
    let _ = writeln!(s, "rate: {:.6}", code.rate());
    match code.weight_enumerator() {
        Ok(w) => {
            let d = (1..=code.n()).find(|&i| w.counts()[i] > 0);
            match d {
                Some(d) => {
                    let _ = writeln!(s, "d: {d}");
                }
                None => {
                    let _ = writeln!(s, "d: - (single codeword)");
                }
            }
            let counts: Vec<String> = w.counts().iter().map(|c| c.to_string()).collect();
            let _ = writeln!(s, "weight enumerator: {}", counts.join(" "));
        }
        Err(e) => {
            let _ = writeln!(s, "d: - ({e})");
        }
    }
    let _ = writeln!(s, "G (reduced):");
    s.push_str(&matrix_lines(&f, code.rre_generator()));
    let _ = writeln!(s, "H:");
    s.push_str(&matrix_lines(&f, code.check_matrix()));
    Ok(s)
}

fn cmd_code_encode(field: &str, g: &str, u: &str) -> Result<String, String> {
    let (f, code) = build_linear(field, g)?;
    let u = parse_word(u, &f)?;
    if u.len() != code.k() {
        return Err(format!(
            "info word has {} symbols, the code needs k = {}",
            u.len(),
            code.k()
        ));
    }
    Ok(format!("codeword: {}\n", word_string(&f, &code.encode(&u))))
}

fn cmd_code_decode(field: &str, g: &str, y: &str, delta: f64) -> Result<String, String> {
    let (f, code) = build_linear(field, g)?;
    let y = parse_word(y, &f)?;
    if y.len() != code.n() {
        return Err(format!(
            "received word has {} symbols, the code needs n = {}",
            y.len(),
            code.n()
        ));
    }
    if !(0.0..=1.0).contains(&delta) {
        return Err(format!("delta {delta} is not a probability"));
    }
    let q = f.q();
    let mut noise = vec![1.0 - delta];
    noise.extend(std::iter::repeat_n(delta / (q - 1) as f64, (q - 1) as usize));
    let table = code
        .build_syndrome_table(&Dist::new(noise).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    let rep = code.syndrome_decode(&table, &y);
    let mut s = String::new();
    let _ = writeln!(s, "codeword: {}", word_string(&f, &rep.codeword));
    let _ = writeln!(s, "error: {}", word_string(&f, &rep.error));
    let _ = writeln!(s, "info: {}", word_string(&f, &code.decode_info(&rep.codeword)));
    Ok(s)
}

fn cmd_code_dual(field: &str, g: &str) -> Result<String, String> {
    let (f, code) = build_linear(field, g)?;
    let dual = code.dual();
    let mut s = String::new();
    let _ = writeln!(s, "n: {}", dual.n());
    let _ = writeln!(s, "k: {}", dual.k());
    let _ = writeln!(s, "G:");
    s.push_str(&matrix_lines(&f, dual.generator()));
    Ok(s)
}

// ----------------------------------------------------------- cyclic codes

fn build_cyclic(field: &str, n: usize, g: &str) -> Result<(Field, CyclicCode), String> {
    let f = parse_field(field)?;
    if n == 0 {
        return Err("block length must be positive".into());
    }
    let coeffs = parse_word(g, &f)?;
    let gp = Poly::new(f.clone(), coeffs);
    if gp.degree().finite().is_none_or(|d| d > n) {
        return Err("generator polynomial must be nonzero with degree at most n".into());
    }
    let code = CyclicCode::new(f.clone(), n, &gp).map_err(|e| e.to_string())?;
    Ok((f, code))
}

fn cmd_cyclic_new(field: &str, n: usize, g: &str) -> Result<String, String> {
    let (f, code) = build_cyclic(field, n, g)?;
    let mut s = String::new();
    let _ = writeln!(s, "n: {}", code.n());
    let _ = writeln!(s, "k: {}", code.k());
    let _ = writeln!(s, "g: {}", code.generator_poly());
    let _ = writeln!(s, "h: {}", code.check_poly());
    let _ = writeln!(s, "G:");
    s.push_str(&matrix_lines(&f, &code.generator_matrix()));
    let _ = writeln!(s, "H:");
    s.push_str(&matrix_lines(&f, &code.check_matrix()));
    Ok(s)
}

fn cmd_cyclic_encode(
    field: &str,
    n: usize,
    g: &str,
    style: Style,
    u: &str,
) -> Result<String, String> {
    let (f, code) = build_cyclic(field, n, g)?;
    let u = Poly::new(f.clone(), parse_word(u, &f)?);
    let c = match style {
        Style::Mult => code.encode_mult(&u),
        Style::Right => code.encode_sys_right(&u),
        Style::Left => code.encode_sys_left(&u),
    }
    .map_err(|e| e.to_string())?;
    Ok(format!(
        "codeword: {}\n",
        word_string(&f, &c.coeffs_padded(code.n()))
    ))
}

fn cmd_cyclic_decode(
    field: &str,
    n: usize,
    g: &str,
    style: Style,
    y: &str,
) -> Result<String, String> {
    let (f, code) = build_cyclic(field, n, g)?;
    let y = parse_word(y, &f)?;
    if y.len() != code.n() {
        return Err(format!(
            "received word has {} symbols, the code needs n = {}",
            y.len(),
            code.n()
        ));
    }
    let yp = Poly::new(f.clone(), y);
    if !code.is_codeword(&yp) {
        return Err("word is not a codeword; these decoders only invert the encoders".into());
    }
    let u = match style {
        Style::Mult => code.decode_mult(&yp),
        Style::Right => code.decode_sys_right(&yp),
        Style::Left => code.decode_sys_left(&yp),
    };
    Ok(format!(
        "info: {}\n",
        word_string(&f, &u.coeffs_padded(code.k()))
    ))
}

fn cmd_cyclic_syndrome(field: &str, n: usize, g: &str, y: &str) -> Result<String, String> {
    let (f, code) = build_cyclic(field, n, g)?;
    let y = parse_word(y, &f)?;
    if y.len() != code.n() {
        return Err(format!(
            "received word has {} symbols, the code needs n = {}",
            y.len(),
            code.n()
        ));
    }
    let syn = code.syndrome_poly(&Poly::new(f.clone(), y));
    let deg_g = code.n() - code.k();
    let mut s = String::new();
    let _ = writeln!(s, "s: {syn}");
    let _ = writeln!(s, "coeffs: {}", word_string(&f, &syn.coeffs_padded(deg_g)));
    Ok(s)
}

// --------------------------------------------------------------------- RS

fn build_rs(spec: &RsSpec) -> Result<(Field, RsCode), String> {
    let f = parse_field(&spec.field)?;
    let q = f.q() as usize;
    let n = match spec.variant {
        VariantArg::Primitive => q - 1,
        VariantArg::Full => q,
        VariantArg::Punctured => {
            if spec.removed >= q {
                return Err(format!("cannot remove {} of {} points", spec.removed, q));
            }
            q - spec.removed
        }
    };
    if spec.k < 1 || spec.k > n {
        return Err(format!("k = {} is out of range for n = {n}", spec.k));
    }
    let code = match spec.variant {
        VariantArg::Primitive => RsCode::primitive(f.clone(), spec.k),
        VariantArg::Full => RsCode::full(f.clone(), spec.k),
        VariantArg::Punctured => RsCode::punctured(f.clone(), spec.k, spec.removed),
    };
    Ok((f, code))
}

fn cmd_rs_new(spec: &RsSpec) -> Result<String, String> {
    let (f, code) = build_rs(spec)?;
    let mut s = String::new();
    let _ = writeln!(s, "n: {}", code.n());
    let _ = writeln!(s, "k: {}", code.k());
    let _ = writeln!(s, "d: {}", code.d());
    let points: Vec<String> = code.eval_points().iter().map(|p| p.to_string()).collect();
    let _ = writeln!(s, "points: {}", points.join(" "));
    if let Ok(g) = code.generator_poly() {
        let _ = writeln!(s, "g: {g}");
    }
    let _ = writeln!(s, "field: {}", f.spec_string());
    Ok(s)
}

fn cmd_rs_encode(spec: &RsSpec, u: &str) -> Result<String, String> {
    let (f, code) = build_rs(spec)?;
    let u = parse_word(u, &f)?;
    let c = code.encode_eval(&u).map_err(|e| e.to_string())?;
    Ok(format!("codeword: {}\n", word_string(&f, &c)))
}

fn cmd_rs_syndrome(spec: &RsSpec, y: &str) -> Result<String, String> {
    let (f, code) = build_rs(spec)?;
    let y = parse_word(y, &f)?;
    if y.len() != code.n() {
        return Err(format!(
            "received word has {} symbols, the code needs n = {}",
            y.len(),
            code.n()
        ));
    }
    let syn = code.syndrome(&y).map_err(|e| e.to_string())?;
    Ok(format!("syndromes: {}\n", word_string(&f, &syn)))
}

fn cmd_rs_decode_erasures(spec: &RsSpec, y: &str) -> Result<String, String> {
    let (f, code) = build_rs(spec)?;
    let y = parse_erasure_word(y, &f)?;
    if y.len() != code.n() {
        return Err(format!(
            "received word has {} symbols, the code needs n = {}",
            y.len(),
            code.n()
        ));
    }
    match code.erasure_decode_mds(&y) {
        Ok(u) => {
            let c = code.encode_eval(&u).map_err(|e| e.to_string())?;
            Ok(format!(
                "status: ok\ninfo: {}\ncodeword: {}\n",
                word_string(&f, &u),
                word_string(&f, &c)
            ))
        }
        Err(e @ (ccode::rs::RsError::TooManyErasures { .. } | ccode::rs::RsError::Inconsistent)) => {
            Ok(format!("status: failed: {e}\n"))
        }
        Err(e) => Err(e.to_string()),
    }
}

// -------------------------------------------------------------------- BCH

fn bch_summary(code: &BchCode) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "m: {}", code.m());
    let _ = writeln!(s, "n: {}", code.n());
    let _ = writeln!(s, "rs_k: {}", code.rs_k());
    let _ = writeln!(s, "design_d: {}", code.design_d());
    let _ = writeln!(s, "t: {}", code.t());
    let _ = writeln!(s, "k: {}", code.k_tilde());
    let _ = writeln!(s, "g: {}", code.g_tilde());
    let _ = writeln!(s, "field: {}", code.field().spec_string());
    s
}

fn cmd_bch_new(spec: &BchSpec) -> Result<String, String> {
    Ok(bch_summary(&make_bch_cli(spec.m, spec.rs_k, &spec.prime_poly)?))
}

fn cmd_bch_design(max_n: usize, t: usize) -> Result<String, String> {
    if t == 0 {
        return Err("design target needs t >= 1".into());
    }
    let code = BchCode::design_for_t(max_n, t).map_err(|e| e.to_string())?;
    Ok(bch_summary(&code))
}

fn cmd_bch_encode(spec: &BchSpec, u: &str) -> Result<String, String> {
    let code = make_bch_cli(spec.m, spec.rs_k, &spec.prime_poly)?;
    let f2 = Field::prime(2).unwrap();
    let u = parse_word(u, &f2)?;
    if u.len() != code.k_tilde() {
        return Err(format!(
            "info word has {} bits, the code needs k = {}",
            u.len(),
            code.k_tilde()
        ));
    }
    Ok(format!(
        "codeword: {}\n",
        word_string(&f2, &code.encode(&u))
    ))
}

fn cmd_bch_decode(spec: &BchSpec, y: &str, method: Method) -> Result<String, String> {
    let code = make_bch_cli(spec.m, spec.rs_k, &spec.prime_poly)?;
    let f2 = Field::prime(2).unwrap();
    let y = parse_word(y, &f2)?;
    if y.len() != code.n() {
        return Err(format!(
            "received word has {} bits, the code needs n = {}",
            y.len(),
            code.n()
        ));
    }
    let outcome = match method {
        Method::Bm => code.bm_decode(&y),
        Method::Two => {
            if code.t() != 2 {
                return Err(format!(
                    "the closed form needs a t = 2 code, this one has t = {}",
                    code.t()
                ));
            }
            code.two_error_decode(&y)
        }
    };
    match outcome {
        Ok(rep) => {
            let weight = rep.error.iter().filter(|&&b| b == 1).count();
            let u = code
                .as_cyclic()
                .decode_mult(&Poly::new(f2.clone(), rep.codeword.clone()))
                .coeffs_padded(code.k_tilde());
            let mut s = String::new();
            let _ = writeln!(s, "status: ok");
            let _ = writeln!(s, "corrected: {weight}");
            let _ = writeln!(s, "codeword: {}", word_string(&f2, &rep.codeword));
            let _ = writeln!(s, "error: {}", word_string(&f2, &rep.error));
            let _ = writeln!(s, "info: {}", word_string(&f2, &u));
            Ok(s)
        }
        Err(ccode::bch::BchError::Uncorrectable) => Ok("status: uncorrectable\n".into()),
        Err(e) => Err(e.to_string()),
    }
}

fn cmd_bch_decode_erasures(spec: &BchSpec, y: &str) -> Result<String, String> {
    let code = make_bch_cli(spec.m, spec.rs_k, &spec.prime_poly)?;
    let f2 = Field::prime(2).unwrap();
    let y = parse_erasure_word(y, &f2)?;
    if y.len() != code.n() {
        return Err(format!(
            "received word has {} bits, the code needs n = {}",
            y.len(),
            code.n()
        ));
    }
    match code.erasure_decode(&y) {
        Ok(u) => Ok(format!(
            "status: ok\ninfo: {}\ncodeword: {}\n",
            word_string(&f2, &u),
            word_string(&f2, &code.encode(&u))
        )),
        Err(
            e @ (ccode::bch::BchError::TooManyErasures { .. }
            | ccode::bch::BchError::Inconsistent),
        ) => Ok(format!("status: failed: {e}\n")),
        Err(e) => Err(e.to_string()),
    }
}

// ------------------------------------------------------------- CSV cmds

fn cmd_simulate(args: &SimArgs, seed: u64, workers: usize) -> Result<String, String> {
    if workers == 0 {
        return Err("need at least one worker".into());
    }
    if args.trials == 0 {
        return Err("need at least one trial".into());
    }
    let scheme = parse_scheme(&args.scheme)?;
    let mut s = String::from("delta,trials,seed,cw_errors,info_errors,cw_rate,info_rate\n");
    for &delta in &args.deltas {
        let ch = family_channel(&args.family, delta)?;
        let runnable = scheme.runnable(&ch, delta)?;
        let rep = simulate(&runnable, &ch, args.trials, seed, workers);
        let _ = writeln!(
            s,
            "{delta},{},{seed},{},{},{},{}",
            rep.trials,
            rep.codeword_errors,
            rep.infoword_errors,
            prob(rep.codeword_rate()),
            prob(rep.infoword_rate())
        );
    }
    Ok(s)
}

fn cmd_exact(args: &ExactArgs) -> Result<String, String> {
    let scheme = parse_scheme(&args.scheme)?;
    let codebook = scheme.codebook()?;
    let prior = Dist::uniform(codebook.len());
    let mut s = String::from("delta,pe\n");
    for &delta in &args.deltas {
        let ch = family_channel(&args.family, delta)?;
        if codebook.iter().flatten().any(|&v| v as usize >= ch.nx()) {
            return Err("codebook symbol outside the channel input alphabet".into());
        }
        let pe = exact_block_error(&codebook, &prior, &ch).map_err(|e| e.to_string())?;
        let _ = writeln!(s, "{delta},{}", prob(pe));
    }
    Ok(s)
}

fn binom(n: u64, k: u64) -> u128 {
    let mut out: u128 = 1;
    for i in 0..k.min(n - k) {
        out = out * (n - i) as u128 / (i + 1) as u128;
    }
    out
}

fn for_each_subset(n_words: usize, size: usize, mut f: impl FnMut(&[usize])) {
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        f(&idx);
        // Advance the rightmost index that can still move.
        let mut i = size;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n_words - size {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn cmd_search(args: &SearchArgs) -> Result<String, String> {
    let ch = Dmc::parse_spec(&args.channel).map_err(|e| e.to_string())?;
    let (n_max, sizes) = if args.full {
        (
            args.n_max.unwrap_or(7),
            args.sizes.clone().unwrap_or_else(|| vec![2, 3, 4]),
        )
    } else {
        let n_max = args.n_max.unwrap_or(5);
        let sizes = args.sizes.clone().unwrap_or_else(|| vec![2, 3]);
        if n_max > 5 || sizes.iter().any(|&s| s > 3) {
            return Err(
                "the demonstration search is capped at n <= 5 and sizes <= 3; pass --full for the whole frontier"
                    .into(),
            );
        }
        (n_max, sizes)
    };
    if args.n_min < 1 || args.n_min > n_max {
        return Err(format!("empty block-length range {}..{}", args.n_min, n_max));
    }
    if sizes.iter().any(|&s| s < 1) {
        return Err("codebook sizes must be positive".into());
    }

    // Cost gate: candidate codebooks × outputs × codewords, summed.
    let mut cost: u128 = 0;
    for n in args.n_min..=n_max {
        let words = (ch.nx() as u128).pow(n);
        let outputs = (ch.ny() as u128).pow(n);
        for &size in &sizes {
            if words < size as u128 {
                return Err(format!("size {size} exceeds the {words} words of length {n}"));
            }
            cost += binom(words as u64, size as u64) * outputs * size as u128;
        }
    }
    if cost > args.max_cost as u128 {
        return Err(format!(
            "estimated cost {cost} operations exceeds --max-cost {}",
            args.max_cost
        ));
    }

    let mut s = String::from("n,size,rate,best_pe,pcb,best_code\n");
    for n in args.n_min..=n_max {
        if args.total % n as u64 != 0 {
            return Err(format!(
                "--total {} is not a multiple of block length {n}",
                args.total
            ));
        }
        let n_words = (ch.nx() as u64).pow(n) as usize;
        let words: Vec<Vec<u64>> = (0..n_words as u64)
            .map(|w| {
                let mut v = Vec::with_capacity(n as usize);
                let mut t = w;
                for _ in 0..n {
                    v.push(t % ch.nx() as u64);
                    t /= ch.nx() as u64;
                }
                v
            })
            .collect();
        for &size in &sizes {
            let prior = Dist::uniform(size);
            let mut best_pe = f64::INFINITY;
            let mut best: Vec<usize> = Vec::new();
            for_each_subset(n_words, size, |subset| {
                let code: Vec<Vec<u64>> = subset.iter().map(|&i| words[i].clone()).collect();
                let pe = exact_block_error(&code, &prior, &ch)
                    .expect("gated size fits the enumeration cap");
                if pe < best_pe {
                    best_pe = pe;
                    best = subset.to_vec();
                }
            });
            let rate = (size as f64).log2() / n as f64;
            let per_block = pcb(best_pe, n as u64, args.total).map_err(|e| e.to_string())?;
            let sep = if ch.nx() > 10 { "." } else { "" };
            let code_str: Vec<String> = best
                .iter()
                .map(|&i| {
                    words[i]
                        .iter()
                        .map(|s| s.to_string())
                        .collect::<Vec<_>>()
                        .join(sep)
                })
                .collect();
            let _ = writeln!(
                s,
                "{n},{size},{rate:.6},{},{},{}",
                prob(best_pe),
                prob(per_block),
                code_str.join("|")
            );
        }
    }
    Ok(s)
}

fn bound_code(spec: &str) -> Result<LinearCode, String> {
    if let Some(n) = spec.strip_prefix("rep:") {
        let n: usize = n.parse().map_err(|_| format!("bad length in {spec:?}"))?;
        if n == 0 {
            return Err("repetition length must be positive".into());
        }
        let f2 = Field::prime(2).unwrap();
        return LinearCode::from_generator(MatF::from_rows(f2, &[vec![1; n]]))
            .map_err(|e| e.to_string());
    }
    if spec == "hamming74" {
        return LinearCode::from_generator(hamming_7_4_generator(Field::prime(2).unwrap()))
            .map_err(|e| e.to_string());
    }
    if let Some(rest) = spec.strip_prefix("bch:") {
        let (m, rs_k) = rest
            .split_once(':')
            .ok_or_else(|| format!("code {spec:?} needs bch:<m>:<rs_k>"))?;
        let m: u32 = m.parse().map_err(|_| format!("bad m in {spec:?}"))?;
        let rs_k: usize = rs_k.parse().map_err(|_| format!("bad rs_k in {spec:?}"))?;
        return Ok(make_bch_cli(m, rs_k, &None)?.as_linear_code());
    }
    Err(format!(
        "unknown code {spec:?} (use rep:<n>, hamming74, bch:<m>:<rs_k>)"
    ))
}

fn cmd_bound(args: &BoundArgs, seed: u64, workers: usize) -> Result<String, String> {
    let mut s = String::from("delta,code,rate,method,pe,union_bound,pcb\n");
    for &delta in &args.deltas {
        let ch = family_channel(&args.family, delta)?;
        let beta = bhattacharyya(&ch).map_err(|e| e.to_string())?;
        for spec in &args.codes {
            let code = bound_code(spec)?;
            if args.total % code.n() as u64 != 0 {
                return Err(format!(
                    "--total {} is not a multiple of n = {}",
                    args.total,
                    code.n()
                ));
            }
            let union = match code.weight_enumerator() {
                Ok(w) => prob(w.ml_union_bound(beta)),
                Err(_) => "nan".into(),
            };
            let (method, pe) = match code.codewords() {
                Ok(book) => {
                    let prior = Dist::uniform(book.len());
                    (
                        "exact",
                        exact_block_error(&book, &prior, &ch).map_err(|e| e.to_string())?,
                    )
                }
                Err(_) => {
                    // Too large to enumerate exactly: Monte Carlo with the
                    // matching decoder scheme, which never materializes the
                    // codebook.
                    let scheme = parse_scheme(spec)?.runnable(&ch, delta)?;
                    let rep = simulate(&scheme, &ch, args.trials, seed, workers);
                    ("mc", rep.codeword_rate())
                }
            };
            let per_block = pcb(pe, code.n() as u64, args.total).map_err(|e| e.to_string())?;
            let _ = writeln!(
                s,
                "{delta},{spec},{:.6},{method},{},{union},{}",
                code.rate(),
                prob(pe),
                prob(per_block)
            );
        }
    }
    Ok(s)
}

// ------------------------------------------------------------------ main

fn run(cmd: &Cmd, seed: u64, workers: usize) -> Result<String, String> {
    match cmd {
        Cmd::Field { sub } => match sub {
            FieldCmd::Table { spec } => cmd_field_table(spec),
            FieldCmd::Info { spec } => cmd_field_info(spec),
            FieldCmd::Minpoly { spec, elem } => cmd_field_minpoly(spec, *elem),
        },
        Cmd::Code { sub } => match sub {
            CodeCmd::Info { field, g } => cmd_code_info(field, g),
            CodeCmd::Encode { field, g, u } => cmd_code_encode(field, g, u),
            CodeCmd::Decode { field, g, y, delta } => cmd_code_decode(field, g, y, *delta),
            CodeCmd::Dual { field, g } => cmd_code_dual(field, g),
        },
        Cmd::Cyclic { sub } => match sub {
            CyclicCmd::New { field, n, g } => cmd_cyclic_new(field, *n, g),
            CyclicCmd::Encode { field, n, g, style, u } => {
                cmd_cyclic_encode(field, *n, g, *style, u)
            }
            CyclicCmd::Decode { field, n, g, style, y } => {
                cmd_cyclic_decode(field, *n, g, *style, y)
            }
            CyclicCmd::Syndrome { field, n, g, y } => cmd_cyclic_syndrome(field, *n, g, y),
        },
        Cmd::Rs { sub } => match sub {
            RsCmd::New(spec) => cmd_rs_new(spec),
            RsCmd::Encode { spec, u } => cmd_rs_encode(spec, u),
            RsCmd::Syndrome { spec, y } => cmd_rs_syndrome(spec, y),
            RsCmd::DecodeErasures { spec, y } => cmd_rs_decode_erasures(spec, y),
        },
        Cmd::Bch { sub } => match sub {
            BchCmd::New(spec) => cmd_bch_new(spec),
            BchCmd::Design { max_n, t } => cmd_bch_design(*max_n, *t),
            BchCmd::Encode { spec, u } => cmd_bch_encode(spec, u),
            BchCmd::Decode { spec, y, method } => cmd_bch_decode(spec, y, *method),
            BchCmd::DecodeErasures { spec, y } => cmd_bch_decode_erasures(spec, y),
        },
        Cmd::Simulate(args) => cmd_simulate(args, seed, workers),
        Cmd::Exact(args) => cmd_exact(args),
        Cmd::Search(args) => cmd_search(args),
        Cmd::Bound(args) => cmd_bound(args, seed, workers),
    }
}

fn main() {
    let cli = Cli::parse();
    match run(&cli.cmd, cli.seed, cli.workers) {
        Ok(text) => match &cli.out {
            Some(path) => {
                if let Err(e) = std::fs::write(path, &text) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    exit(1);
                }
            }
            None => print!("{text}"),
        },
        Err(msg) => {
            eprintln!("error: {msg}");
            exit(1);
        }
    }
}
