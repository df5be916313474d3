//! `matmonoid` command-line front end.
//!
//! [`run`] takes the argument list, the input and output streams and the
//! enumeration-limit override explicitly, so it can be driven in-process.
//! Exit status: 0 success, 1 domain error, 2 usage error.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::json;

use crate::error::{Error, Result};
use crate::extremal::{mu_depth, witness};
use crate::hash::{bound_n0, BitString, HashParams, HashState};
use crate::matrix::{Mat2, MonoidParams};
use crate::tree::{mu_row_bruteforce, row, DEFAULT_ENUM_DEPTH};
use crate::verify::{run_suite, Suite};

/// Environment variable overriding the brute-force depth cap.
pub const ENUM_LIMIT_VAR: &str = "MATMONOID_ENUM_LIMIT";

#[derive(Debug, Parser)]
#[command(
    name = "matmonoid",
    version,
    about = "Maximal entries in the monoid generated by L_u and R_v, and the BSV hash over SL2(F_p)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, clap::Args)]
pub struct UvArgs {
    /// Lower generator parameter, L_u = [[1,0],[u,1]]
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub u: u64,
    /// Upper generator parameter, R_v = [[1,v],[0,1]]
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub v: u64,
}

impl UvArgs {
    fn params(&self) -> Result<MonoidParams> {
        MonoidParams::new(self.u, self.v)
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hash a bit string: bit 0 multiplies by L_u, bit 1 by R_v, mod p
    Hash {
        #[command(flatten)]
        uv: UvArgs,
        /// Prime modulus (decimal)
        #[arg(long, value_parser = parse_biguint)]
        p: BigUint,
        /// Input file, or - for stdin
        #[arg(long, default_value = "-")]
        input: String,
        #[arg(long, value_enum, default_value_t = BitsFormat::Ascii01)]
        bits: BitsFormat,
        #[arg(long, value_enum, default_value_t = OutputFormat::Hex)]
        format: OutputFormat,
    },
    /// Print n0: strings of length <= n0 never collide
    Bound {
        #[command(flatten)]
        uv: UvArgs,
        #[arg(long, value_parser = parse_biguint)]
        p: BigUint,
    },
    /// Largest entry over all depth-n elements
    Mu {
        #[command(flatten)]
        uv: UvArgs,
        #[arg(long)]
        depth: u64,
        #[arg(long, value_enum, default_value_t = MuMethod::Lucas)]
        method: MuMethod,
    },
    /// A word attaining the depth-n maximum, its matrix and the entry
    Witness {
        #[command(flatten)]
        uv: UvArgs,
        #[arg(long)]
        depth: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Rows of the tree rooted at I2 as JSON, one row per line
    Tree {
        #[command(flatten)]
        uv: UvArgs,
        /// First row to emit
        #[arg(long)]
        depth: u32,
        /// Number of consecutive rows
        #[arg(long, default_value_t = 1)]
        rows: u32,
    },
    /// Run the property suites.
    ///
    /// formulas: u,v in 1..=4 against brute force for n <= max-depth; radical
    /// closed forms for u,v in 1..=3, n <= 10. symmetry: u,v in 1..=3,
    /// n <= min(max-depth, 12). polydom: 10000 seeded random pairs, families
    /// for n <= 12. hash: (u,v) in {(1,1),(2,3),(3,2),(2,2)}, p in {101,257,1009}.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 12)]
        max_depth: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BitsFormat {
    /// Literal '0' and '1' characters, whitespace ignored
    Ascii01,
    /// Raw bytes, most significant bit first
    BytesMsb,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Hex,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MuMethod {
    Lucas,
    Witness,
    Brute,
}

fn parse_biguint(s: &str) -> std::result::Result<BigUint, String> {
    s.parse::<BigUint>()
        .map_err(|_| format!("expected a nonnegative decimal integer, got {s:?}"))
}

/// Depth cap for brute force: the override if set and valid, else the default.
pub fn enum_limit(raw: Option<&str>) -> Result<u32> {
    match raw {
        None => Ok(DEFAULT_ENUM_DEPTH),
        Some(s) => s
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("{ENUM_LIMIT_VAR} must be a depth, got {s:?}"))),
    }
}

pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
    enum_limit_override: Option<&str>,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                2
            } else {
                let _ = write!(stdout, "{text}");
                0
            };
        }
    };
    let result = enum_limit(enum_limit_override)
        .and_then(|limit| execute(cli.command, stdin, stdout, limit));
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            1
        }
    }
}

fn io_err(e: std::io::Error) -> Error {
    Error::Parse(format!("I/O error: {e}"))
}

fn execute(cmd: Command, stdin: &mut dyn Read, out: &mut dyn Write, limit: u32) -> Result<i32> {
    match cmd {
        Command::Hash {
            uv,
            p,
            input,
            bits,
            format,
        } => {
            let params = HashParams::new(uv.u, uv.v, p)?;
            let raw = if input == "-" {
                let mut buf = Vec::new();
                stdin.read_to_end(&mut buf).map_err(io_err)?;
                buf
            } else {
                fs::read(PathBuf::from(&input))
                    .map_err(|e| Error::Parse(format!("{input}: {e}")))?
            };
            let mut st = HashState::init(&params);
            match bits {
                BitsFormat::Ascii01 => {
                    let text = String::from_utf8(raw)
                        .map_err(|_| Error::Parse("input is not UTF-8".into()))?;
                    let bs: BitString = text.parse()?;
                    st.update_bits(bs.bits().iter().copied());
                }
                BitsFormat::BytesMsb => st.update_bytes_msb(&raw),
            }
            let d = st.digest();
            match format {
                OutputFormat::Hex => writeln!(out, "{}", d.to_hex(&params)),
                OutputFormat::Text => writeln!(out, "{d}"),
                OutputFormat::Json => {
                    let v = json!({
                        "u": uv.u,
                        "v": uv.v,
                        "p": params.p().to_string(),
                        "bits": st.bits_consumed(),
                        "digest": d.to_mat2().to_json_value(),
                        "hex": d.to_hex(&params),
                    });
                    writeln!(out, "{v}")
                }
            }
            .map_err(io_err)?;
        }
        Command::Bound { uv, p } => {
            let params = HashParams::new(uv.u, uv.v, p)?;
            writeln!(out, "{}", bound_n0(&params)).map_err(io_err)?;
        }
        Command::Mu { uv, depth, method } => {
            let q = uv.params()?;
            let value = match method {
                MuMethod::Lucas => mu_depth(q, depth),
                MuMethod::Witness if depth == 0 => Mat2::identity().mu(),
                MuMethod::Witness => witness(q, depth)?.matrix.mu(),
                MuMethod::Brute => {
                    let n = u32::try_from(depth).unwrap_or(u32::MAX);
                    mu_row_bruteforce(q, n, limit)?
                }
            };
            writeln!(out, "{value}").map_err(io_err)?;
        }
        Command::Witness { uv, depth, format } => {
            let w = witness(uv.params()?, depth)?;
            match format {
                OutputFormat::Json => {
                    let v = serde_json::to_string(&w).map_err(|e| Error::Parse(e.to_string()))?;
                    writeln!(out, "{v}")
                }
                _ => writeln!(
                    out,
                    "word: {}\nmatrix: {}\nentry: {}\nvalue: {}",
                    w.word, w.matrix, w.entry, w.value
                ),
            }
            .map_err(io_err)?;
        }
        Command::Tree { uv, depth, rows } => {
            let q = uv.params()?;
            for n in depth..depth.saturating_add(rows) {
                let r = row(&Mat2::identity(), q, n, limit)?;
                let v = serde_json::to_string(&r).map_err(|e| Error::Parse(e.to_string()))?;
                writeln!(out, "{v}").map_err(io_err)?;
            }
        }
        Command::Verify { suite, max_depth } => {
            let report = run_suite(suite, max_depth, limit);
            writeln!(out, "{report}").map_err(io_err)?;
            return Ok(if report.passed() { 0 } else { 1 });
        }
    }
    Ok(0)
}
