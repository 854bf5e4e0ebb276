//! Command-line driver.
//!
//! ```text
//! qtelescope [--format json|text] verify (macmahon|andrews) [--n N | --n-max N] [--m M | --m-max M] [--cap D] [--json PATH]
//! qtelescope check-bijection (macmahon-phi|macmahon-psi|andrews-phi|andrews-involution) --n N [--m M] --k K [--cap D]
//! qtelescope trace andrews --n N --k K [--cap D]
//! ```
//!
//! Exit status: 0 when every certificate verified, 1 when any failed, 2 on usage errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::andrews12::{self, AndrewsCheck};
use crate::macmahon;
use crate::render::Diagram;
use crate::telescope::{exit_code, Certificate};
use crate::Error;

pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "qtelescope",
    version,
    about = "Exact certificates for combinatorial telescoping of partition identities"
)]
struct Cli {
    /// Output format for certificates.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Verify identities and recurrences over a parameter grid.
    Verify(VerifyArgs),
    /// Certify a single bijection or involution instance.
    CheckBijection(CheckArgs),
    /// Print the orbit of every domain element under φ.
    Trace(TraceArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Identity {
    Macmahon,
    Andrews,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MapName {
    MacmahonPhi,
    MacmahonPsi,
    AndrewsPhi,
    AndrewsInvolution,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TraceTarget {
    Andrews,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    identity: Identity,
    #[arg(long, conflicts_with = "n_max")]
    n: Option<u32>,
    #[arg(long)]
    n_max: Option<u32>,
    #[arg(long, conflicts_with = "m_max")]
    m: Option<u32>,
    #[arg(long)]
    m_max: Option<u32>,
    /// Weight cap for Andrews checks (default n²+15); ignored for MacMahon.
    #[arg(long)]
    cap: Option<u32>,
    /// Also write all certificates as a JSON array to this file.
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CheckArgs {
    map: MapName,
    #[arg(long)]
    n: i64,
    #[arg(long)]
    m: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    k: i64,
    #[arg(long)]
    cap: Option<u32>,
}

#[derive(Debug, Args)]
struct TraceArgs {
    target: TraceTarget,
    #[arg(long)]
    n: i64,
    #[arg(long)]
    k: i64,
    #[arg(long)]
    cap: Option<u32>,
}

/// Resolved settings for one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub format: Format,
    pub n_values: Vec<u32>,
    pub m_values: Vec<u32>,
    pub cap: Option<u32>,
    pub json_path: Option<PathBuf>,
}

fn range(single: Option<u32>, max: Option<u32>, default_max: u32) -> Vec<u32> {
    match (single, max) {
        (Some(v), _) => vec![v],
        (None, Some(max)) => (0..=max).collect(),
        (None, None) => (0..=default_max).collect(),
    }
}

fn andrews_cap(n: u32, cap: Option<u32>) -> u32 {
    cap.unwrap_or(n * n + 15)
}

struct UsageError(String);

impl From<Error> for UsageError {
    fn from(e: Error) -> Self {
        UsageError(e.to_string())
    }
}

/// Parses `argv` (program name first), runs, writes to `out`, and returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(out, "{}", e.render());
            return if e.use_stderr() { EXIT_USAGE } else { 0 };
        }
    };
    let result = match cli.command {
        Command::Verify(args) => verify(cli.format, args, out),
        Command::CheckBijection(args) => check_bijection(cli.format, args, out),
        Command::Trace(args) => trace(args, out),
    };
    match result {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            let _ = writeln!(out, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn emit(format: Format, certs: &[Certificate], out: &mut dyn Write) -> std::io::Result<()> {
    for cert in certs {
        match format {
            Format::Json => writeln!(out, "{}", cert.to_json())?,
            Format::Text => {
                let params: Vec<String> = cert.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let status = if cert.is_verified() { "verified" } else { "FAILED" };
                write!(out, "{status:<9} {:<22} {}", cert.check, params.join(" "))?;
                if let Some(c) = &cert.counterexample {
                    write!(out, "  reason={:?} element={} image={}", c.reason, c.element, c.image)?;
                }
                writeln!(out, "  ({} ms)", cert.elapsed_ms)?;
            }
        }
    }
    Ok(())
}

fn finish(
    format: Format,
    certs: &[Certificate],
    json: Option<&PathBuf>,
    out: &mut dyn Write,
) -> Result<i32, UsageError> {
    emit(format, certs, out).map_err(|e| UsageError(e.to_string()))?;
    if let Some(path) = json {
        let values: Vec<serde_json::Value> =
            certs.iter().map(|c| serde_json::to_value(c).expect("certificate serializes")).collect();
        let text = serde_json::Value::Array(values).to_string() + "\n";
        std::fs::write(path, text).map_err(|e| UsageError(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(exit_code(certs))
}

fn verify(format: Format, args: VerifyArgs, out: &mut dyn Write) -> Result<i32, UsageError> {
    let config = RunConfig {
        format,
        n_values: range(args.n, args.n_max, 4),
        m_values: range(args.m, args.m_max, 4),
        cap: args.cap,
        json_path: args.json,
    };
    let mut certs = Vec::new();
    match args.identity {
        Identity::Macmahon => {
            for &n in &config.n_values {
                for &m in &config.m_values {
                    certs.push(macmahon::verify_macmahon(n, m));
                }
            }
        }
        Identity::Andrews => {
            if args.m.is_some() || args.m_max.is_some() {
                return Err(UsageError("--m/--m-max do not apply to andrews".into()));
            }
            for &n in &config.n_values {
                let cap = andrews_cap(n, config.cap);
                if cap < n * n {
                    return Err(Error::CapTooSmall { cap, min: n * n }.into());
                }
            }
            for &n in &config.n_values {
                let cap = andrews_cap(n, config.cap);
                for which in AndrewsCheck::ALL.into_iter().filter(|w| n >= w.min_n()) {
                    certs.push(andrews12::verify_andrews(n, cap, which)?);
                }
            }
        }
    }
    finish(config.format, &certs, config.json_path.as_ref(), out)
}

fn check_bijection(format: Format, args: CheckArgs, out: &mut dyn Write) -> Result<i32, UsageError> {
    let (n, k) = (args.n, args.k);
    let cap = || andrews_cap(n.max(0) as u32, args.cap);
    let cert = match args.map {
        MapName::MacmahonPhi => {
            let m = args.m.ok_or_else(|| UsageError("macmahon-phi needs --m".into()))?;
            if n < 0 || m < 0 || k < -m || k > n {
                return Err(UsageError(format!(
                    "macmahon-phi needs n, m >= 0 and -m <= k <= n (got n={n}, m={m}, k={k})"
                )));
            }
            macmahon::certify_phi(n, m, k)
        }
        MapName::MacmahonPsi => {
            if n < 0 || k < 0 || k > n {
                return Err(UsageError(format!("macmahon-psi needs 0 <= k <= n (got n={n}, k={k})")));
            }
            macmahon::certify_psi(n, k)
        }
        MapName::AndrewsPhi => andrews12::certify_phi(n, k, cap())?,
        MapName::AndrewsInvolution => andrews12::certify_involution(n, k, cap())?,
    };
    finish(format, &[cert], None, out)
}

fn trace(args: TraceArgs, out: &mut dyn Write) -> Result<i32, UsageError> {
    let TraceTarget::Andrews = args.target;
    let (n, k) = (args.n, args.k);
    if n < 2 || k < 0 || k > n - 2 {
        return Err(UsageError(format!("trace andrews needs 0 <= k <= n-2 (got n={n}, k={k})")));
    }
    let cap = andrews_cap(n as u32, args.cap);
    let io = |e: std::io::Error| UsageError(e.to_string());
    for x in andrews12::domain_slice(n, k, cap) {
        let steps = andrews12::orbit(n, k, &x)?;
        writeln!(out, "== {}", describe(&x)).map_err(io)?;
        writeln!(out, "{}", indent(&x.diagram())).map_err(io)?;
        for s in &steps {
            writeln!(out, "  φ_{{{},{}}} [{:?}] -> {}", s.n, s.k, s.case, describe(&s.image)).map_err(io)?;
            writeln!(out, "{}", indent(&s.image.diagram())).map_err(io)?;
        }
    }
    Ok(0)
}

fn describe(x: &andrews12::MarkedTriple) -> String {
    if x.is_marked() {
        format!("({}, {})", x.marker, x.payload)
    } else {
        x.payload.to_string()
    }
}

fn indent(block: &str) -> String {
    block.lines().map(|l| format!("    {l}")).collect::<Vec<_>>().join("\n")
}
