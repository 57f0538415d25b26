//! `invariant-lab` command line: argument grammar, dispatch and rendering.
//!
//! Exit codes: 0 success (or composite with certificate), 1 negative finding
//! (prime or prime power), 2 usage error, 3 resource bound exceeded,
//! 4 internal consistency failure.

pub mod payload;

use std::io::{self, Write};

use clap::{ArgGroup, Parser, Subcommand};
use serde::Serialize;

use invariant_lab::carmichael::{hypothesis_check, omega_report, scan_carmichael_chunked};
use invariant_lab::euler::{
    euler_classification, euler_phi, expected_idempotent, generalized_euler_residue, subgroup_table,
    support_of,
};
use invariant_lab::invariants::{
    invariants_from_factorization, primality_by_invariants_with_bound, PrimalityVerdict,
    DEFAULT_ORACLE_BOUND,
};
use invariant_lab::{Error, Modulus};

use payload::*;

/// Overrides the exhaustive-search bound (default 10^6).
pub const ORACLE_BOUND_ENV: &str = "INVARIANT_LAB_ORACLE_BOUND";

#[derive(Debug, Parser)]
#[command(name = "invariant-lab", version, about = "Invariants (idempotents) modulo m")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Emit a JSON envelope instead of text.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Invariants, anti-invariants and tuples of m.
    Invariants {
        m: u64,
        /// Write 0 as m, matching the 1..=m listing convention.
        #[arg(long)]
        paper_style: bool,
    },
    /// a^phi(m) and the invariant each residue class maps to.
    #[command(group(ArgGroup::new("which").required(true).args(["all", "a"])))]
    Euler {
        m: u64,
        /// One row per unitary divisor of m.
        #[arg(long)]
        all: bool,
        /// A single residue.
        #[arg(long)]
        a: Option<u64>,
    },
    /// Look for a non-trivial invariant; exit 0 if found, 1 otherwise.
    Primality { m: u64 },
    /// Multiplication table of the multiples of a modulo m.
    Table { m: u64, a: u64 },
    /// Carmichael number checks.
    Carmichael {
        #[command(subcommand)]
        action: CarmichaelAction,
        /// Comma-separated records with a header row.
        #[arg(long, global = true)]
        csv: bool,
    },
    /// Omega(m) next to the Carmichael function and phi.
    Omega { m: u64 },
}

#[derive(Debug, Subcommand)]
pub enum CarmichaelAction {
    /// Record for one odd composite.
    Check { m: u64 },
    /// Every Carmichael number in [lo, hi].
    Scan { lo: u64, hi: u64 },
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Bound(String),
    Internal(String),
    Io(io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Bound(_) => 3,
            CliError::Internal(_) | CliError::Io(_) => 4,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(s) => write!(f, "usage error: {s}"),
            CliError::Bound(s) => write!(f, "bound exceeded: {s}"),
            CliError::Internal(s) => write!(f, "internal error: {s}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        if e.is_resource_bound() {
            CliError::Bound(e.to_string())
        } else if matches!(e, Error::Inconsistent(_)) {
            CliError::Internal(e.to_string())
        } else {
            CliError::Usage(e.to_string())
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

/// Reads the oracle bound override, if any.
pub fn oracle_bound_from(value: Option<&str>) -> Result<u64, CliError> {
    match value {
        None => Ok(DEFAULT_ORACLE_BOUND),
        Some(s) => s
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{ORACLE_BOUND_ENV}={s:?} is not a number"))),
    }
}

fn modulus(m: u64) -> Result<Modulus, CliError> {
    Ok(Modulus::new(m)?)
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(", ")
}

fn pairs(v: &[[u64; 2]]) -> String {
    v.iter()
        .map(|[a, b]| format!("({a}, {b})"))
        .collect::<Vec<_>>()
        .join(", ")
}

fn emit_json<P: Serialize>(
    out: &mut dyn Write,
    command: &str,
    modulus: Option<u64>,
    range: Option<[u64; 2]>,
    payload: P,
) -> Result<(), CliError> {
    let env = Envelope { command: command.into(), modulus, range, style: Style::Json, payload };
    let text = serde_json::to_string_pretty(&env).map_err(|e| CliError::Internal(e.to_string()))?;
    writeln!(out, "{text}")?;
    Ok(())
}

/// Runs one command. Returns the process exit code on success.
pub fn run(
    cli: &Cli,
    oracle_bound: u64,
    out: &mut dyn Write,
    diag: &mut dyn Write,
) -> Result<u8, CliError> {
    match &cli.command {
        Command::Invariants { m, paper_style } => {
            let report = invariants_from_factorization(modulus(*m)?);
            let p = InvariantsPayload::new(&report, *paper_style);
            if cli.json {
                return emit_json(out, "invariants", Some(*m), None, p).map(|_| 0);
            }
            writeln!(out, "modulus: {m}")?;
            match &p.paper {
                Some(paper) => {
                    writeln!(out, "invariants: {}", join(&paper.invariants))?;
                    writeln!(out, "anti-invariants: {}", join(&paper.anti_invariants))?;
                    writeln!(out, "tuples: {}", pairs(&paper.tuples))?;
                }
                None => {
                    writeln!(out, "invariants: {}", join(&p.invariants))?;
                    writeln!(out, "anti-invariants: {}", join(&p.anti_invariants))?;
                    writeln!(out, "tuples: {}", pairs(&p.tuples))?;
                }
            }
            writeln!(out, "trivial: {}", join(&p.trivial))?;
            if p.nontrivial.is_empty() {
                writeln!(out, "non-trivial: none")?;
            } else {
                writeln!(out, "non-trivial: {}", join(&p.nontrivial))?;
            }
            Ok(0)
        }

        Command::Euler { m, all, a } => {
            let mm = modulus(*m)?;
            if *all {
                let p = EulerTablePayload::new(&euler_classification(mm)?);
                if cli.json {
                    return emit_json(out, "euler", Some(*m), None, p).map(|_| 0);
                }
                writeln!(out, "modulus: {m}  phi: {}", p.phi)?;
                writeln!(out, "{:>10}  {:>10}  shared primes", "support", "a^phi")?;
                for row in &p.classes {
                    let shared = if row.shared_primes.is_empty() {
                        "none (coprime)".to_string()
                    } else {
                        join(&row.shared_primes)
                    };
                    writeln!(out, "{:>10}  {:>10}  {shared}", row.support, row.idempotent)?;
                }
                return Ok(0);
            }
            let a = a.expect("clap requires --all or --a");
            if a >= *m {
                return Err(CliError::Usage(format!("a = {a} must be below m = {m}")));
            }
            let r = mm.residue(a)?;
            let p = EulerResiduePayload {
                a,
                phi: euler_phi(mm),
                residue: generalized_euler_residue(r)?.value(),
                support: support_of(r),
                expected: expected_idempotent(r)?.value(),
            };
            if cli.json {
                return emit_json(out, "euler", Some(*m), None, p).map(|_| 0);
            }
            writeln!(out, "{}^{} mod {m} = {}", p.a, p.phi, p.residue)?;
            Ok(0)
        }

        Command::Primality { m } => {
            let verdict = primality_by_invariants_with_bound(modulus(*m)?, oracle_bound)?;
            let code = match verdict {
                PrimalityVerdict::PrimeOrPrimePower => 1,
                PrimalityVerdict::CompositeWithCertificate(_) => 0,
            };
            let p = PrimalityPayload::new(&verdict);
            if cli.json {
                emit_json(out, "primality", Some(*m), None, p)?;
                return Ok(code);
            }
            match (p.witness, p.factors) {
                (Some(w), Some([fa, fb])) => {
                    writeln!(out, "composite: witness {w}, factors {fa} x {fb}")?
                }
                _ => writeln!(out, "prime-or-prime-power")?,
            }
            Ok(code)
        }

        Command::Table { m, a } => {
            let t = subgroup_table(modulus(*m)?, *a)?;
            let p = TablePayload::new(&t);
            if cli.json {
                return emit_json(out, "table", Some(*m), None, p).map(|_| 0);
            }
            let width = m.to_string().len().max(2);
            write!(out, "{:>width$} |", "x")?;
            for e in &p.elements {
                write!(out, " {e:>width$}")?;
            }
            writeln!(out)?;
            writeln!(out, "{}", "-".repeat((width + 1) * (p.elements.len() + 1) + 1))?;
            for (e, row) in p.elements.iter().zip(&p.table) {
                write!(out, "{e:>width$} |")?;
                for x in row {
                    write!(out, " {x:>width$}")?;
                }
                writeln!(out)?;
            }
            writeln!(out, "I={} A={}", p.identity, p.anti_identity)?;
            let inv: Vec<String> = p.inverses.iter().map(|[x, y]| format!("{x}^-1={y}")).collect();
            writeln!(out, "inverses: {}", inv.join(", "))?;
            Ok(0)
        }

        Command::Carmichael { action, csv } => match action {
            CarmichaelAction::Check { m } => {
                let p = CarmichaelPayload::new(&hypothesis_check(*m)?);
                if cli.json {
                    return emit_json(out, "carmichael", Some(*m), None, p).map(|_| 0);
                }
                if *csv {
                    writeln!(out, "{}", CarmichaelPayload::CSV_HEADER)?;
                    writeln!(out, "{}", p.csv_row())?;
                    return Ok(0);
                }
                writeln!(out, "m: {}", p.m)?;
                writeln!(out, "factorization: {}", p.factorization)?;
                writeln!(out, "omega: {}", p.omega)?;
                match p.ratio {
                    Some(r) => writeln!(out, "ratio: {r}")?,
                    None => writeln!(out, "ratio: not integral")?,
                }
                writeln!(out, "korselt: {}", p.korselt)?;
                writeln!(out, "fermat_verified: {}", p.fermat_verified)?;
                let verdict = if p.korselt { "Carmichael" } else { "not Carmichael" };
                writeln!(out, "{verdict}")?;
                Ok(0)
            }
            CarmichaelAction::Scan { lo, hi } => {
                let mut collected = Vec::new();
                if *csv && !cli.json {
                    writeln!(out, "{}", CarmichaelPayload::CSV_HEADER)?;
                }
                let mut found = 0usize;
                let mut io_err = None;
                scan_carmichael_chunked(*lo, *hi, |upto, records| {
                    found += records.len();
                    for r in records {
                        let p = CarmichaelPayload::new(&r);
                        let res = if cli.json {
                            collected.push(p);
                            Ok(())
                        } else if *csv {
                            writeln!(out, "{}", p.csv_row())
                        } else {
                            let ratio = p.ratio.map(|r| r.to_string()).unwrap_or("-".into());
                            writeln!(
                                out,
                                "{}  {}  omega={}  ratio={ratio}",
                                p.m, p.factorization, p.omega
                            )
                        };
                        if let Err(e) = res {
                            io_err.get_or_insert(e);
                        }
                    }
                    let _ = writeln!(diag, "scanned through {upto}: {found} found");
                })?;
                if let Some(e) = io_err {
                    return Err(e.into());
                }
                if cli.json {
                    emit_json(out, "carmichael", None, Some([*lo, *hi]), collected)?;
                }
                Ok(0)
            }
        },

        Command::Omega { m } => {
            let report = omega_report(*m)?;
            let f = modulus(*m)?.factorize().to_string();
            let p = OmegaPayload::new(&report, f);
            if cli.json {
                return emit_json(out, "omega", Some(*m), None, p).map(|_| 0);
            }
            writeln!(out, "m: {m} = {}", p.factorization)?;
            writeln!(out, "omega: {}", p.omega_paper)?;
            writeln!(out, "lambda: {}", p.lambda_standard)?;
            writeln!(out, "phi: {}", p.phi)?;
            writeln!(out, "omega divides phi: {}", p.divides_phi)?;
            Ok(0)
        }
    }
}
