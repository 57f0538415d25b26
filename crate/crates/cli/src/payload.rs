//! JSON payloads. Fields are only ever added, never renamed or removed.

use serde::{Deserialize, Serialize};

use invariant_lab::carmichael::{CarmichaelRecord, OmegaReport};
use invariant_lab::euler::{EulerClassification, SubgroupTable};
use invariant_lab::invariants::{InvariantReport, PrimalityVerdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Style {
    Human,
    Paper,
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Envelope<P> {
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub range: Option<[u64; 2]>,
    pub style: Style,
    pub payload: P,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsPayload {
    pub invariants: Vec<u64>,
    pub anti_invariants: Vec<u64>,
    /// `[anti, invariant]` pairs ordered by the invariant.
    pub tuples: Vec<[u64; 2]>,
    pub trivial: Vec<u64>,
    pub nontrivial: Vec<u64>,
    pub distinct_primes: usize,
    /// Present with `--paper-style`: values in the `1..=m` convention.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub paper: Option<PaperLists>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PaperLists {
    pub invariants: Vec<u64>,
    pub anti_invariants: Vec<u64>,
    pub tuples: Vec<[u64; 2]>,
}

impl InvariantsPayload {
    pub fn new(report: &InvariantReport, paper_style: bool) -> Self {
        let values = |v: &[invariant_lab::Residue]| v.iter().map(|r| r.value()).collect();
        InvariantsPayload {
            invariants: values(&report.invariants),
            anti_invariants: values(&report.anti_invariants),
            tuples: report.tuples.iter().map(|(a, i)| [a.value(), i.value()]).collect(),
            trivial: values(&report.trivial),
            nontrivial: values(&report.nontrivial),
            distinct_primes: report.modulus.factorize().omega(),
            paper: paper_style.then(|| PaperLists {
                invariants: report.paper_invariants(),
                anti_invariants: report.paper_anti_invariants(),
                tuples: report.paper_tuples().into_iter().map(|(a, i)| [a, i]).collect(),
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerRow {
    pub support: u64,
    pub shared_primes: Vec<u64>,
    pub idempotent: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerTablePayload {
    pub phi: u64,
    pub classes: Vec<EulerRow>,
}

impl EulerTablePayload {
    pub fn new(c: &EulerClassification) -> Self {
        let primes = c.modulus.factorize();
        EulerTablePayload {
            phi: c.phi,
            classes: c
                .classes
                .iter()
                .map(|k| EulerRow {
                    support: k.support,
                    shared_primes: primes.primes().filter(|p| k.support % p == 0).collect(),
                    idempotent: k.idempotent.value(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerResiduePayload {
    pub a: u64,
    pub phi: u64,
    /// `a^phi mod m`.
    pub residue: u64,
    pub support: u64,
    /// CRT prediction; always equal to `residue`.
    pub expected: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimalityPayload {
    /// `"composite"` or `"prime-or-prime-power"`.
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factors: Option<[u64; 2]>,
}

impl PrimalityPayload {
    pub fn new(v: &PrimalityVerdict) -> Self {
        match v {
            PrimalityVerdict::PrimeOrPrimePower => PrimalityPayload {
                verdict: "prime-or-prime-power".into(),
                witness: None,
                factors: None,
            },
            PrimalityVerdict::CompositeWithCertificate(c) => PrimalityPayload {
                verdict: "composite".into(),
                witness: Some(c.witness.value()),
                factors: Some([c.factor_a, c.factor_b]),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TablePayload {
    pub divisor: u64,
    pub elements: Vec<u64>,
    pub table: Vec<Vec<u64>>,
    pub identity: u64,
    pub anti_identity: u64,
    /// `[x, x^-1]` ordered by `x`.
    pub inverses: Vec<[u64; 2]>,
}

impl TablePayload {
    pub fn new(t: &SubgroupTable) -> Self {
        TablePayload {
            divisor: t.generator_divisor,
            elements: t.elements.iter().map(|x| x.value()).collect(),
            table: t
                .table
                .iter()
                .map(|row| row.iter().map(|x| x.value()).collect())
                .collect(),
            identity: t.identity.value(),
            anti_identity: t.anti_identity.value(),
            inverses: t.inverses.iter().map(|(&x, &y)| [x, y]).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CarmichaelPayload {
    pub m: u64,
    /// Rendered as `p^k*q*r`.
    pub factorization: String,
    pub omega: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ratio: Option<u64>,
    pub korselt: bool,
    pub fermat_verified: bool,
    pub fermat_exhaustive: bool,
}

impl CarmichaelPayload {
    pub fn new(r: &CarmichaelRecord) -> Self {
        CarmichaelPayload {
            m: r.m,
            factorization: r.factorization.to_string(),
            omega: r.omega,
            ratio: r.ratio,
            korselt: r.korselt,
            fermat_verified: r.fermat_verified,
            fermat_exhaustive: r.fermat_exhaustive,
        }
    }

    pub const CSV_HEADER: &'static str = "m,factorization,omega,ratio,korselt,fermat_verified";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.m,
            self.factorization,
            self.omega,
            self.ratio.map(|r| r.to_string()).unwrap_or_default(),
            self.korselt,
            self.fermat_verified
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmegaPayload {
    pub factorization: String,
    pub omega_paper: u64,
    pub lambda_standard: u64,
    pub phi: u64,
    pub divides_phi: bool,
}

impl OmegaPayload {
    pub fn new(r: &OmegaReport, factorization: String) -> Self {
        OmegaPayload {
            factorization,
            omega_paper: r.omega_paper,
            lambda_standard: r.lambda_standard,
            phi: r.phi,
            divides_phi: r.divides_phi,
        }
    }
}
