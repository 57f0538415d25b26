//! Python bindings for `invariant_lab`.
//!
//! Residues cross the boundary as plain integers together with their modulus.

use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use invariant_lab::arith;
use invariant_lab::carmichael;
use invariant_lab::euler;
use invariant_lab::invariants::{self, PrimalityVerdict};
use invariant_lab::{Error, Modulus, Residue};

create_exception!(invariant_lab_py, BoundExceeded, PyException);

fn to_py(e: Error) -> PyErr {
    if e.is_resource_bound() {
        BoundExceeded::new_err(e.to_string())
    } else if matches!(e, Error::Inconsistent(_)) {
        PyRuntimeError::new_err(e.to_string())
    } else {
        PyValueError::new_err(e.to_string())
    }
}

fn modulus(m: u64) -> PyResult<Modulus> {
    Modulus::new(m).map_err(to_py)
}

fn residue(x: u64, m: u64) -> PyResult<Residue> {
    modulus(m)?.residue(x).map_err(to_py)
}

fn values(v: &[Residue]) -> Vec<u64> {
    v.iter().map(|r| r.value()).collect()
}

#[pyclass(frozen, get_all, skip_from_py_object, module = "invariant_lab_py")]
#[derive(Clone)]
pub struct InvariantReport {
    modulus: u64,
    invariants: Vec<u64>,
    anti_invariants: Vec<u64>,
    tuples: Vec<(u64, u64)>,
    trivial: Vec<u64>,
    nontrivial: Vec<u64>,
    paper_invariants: Vec<u64>,
    paper_anti_invariants: Vec<u64>,
    paper_tuples: Vec<(u64, u64)>,
}

impl From<invariants::InvariantReport> for InvariantReport {
    fn from(r: invariants::InvariantReport) -> Self {
        InvariantReport {
            modulus: r.modulus.get(),
            invariants: values(&r.invariants),
            anti_invariants: values(&r.anti_invariants),
            tuples: r.tuples.iter().map(|(a, i)| (a.value(), i.value())).collect(),
            trivial: values(&r.trivial),
            nontrivial: values(&r.nontrivial),
            paper_invariants: r.paper_invariants(),
            paper_anti_invariants: r.paper_anti_invariants(),
            paper_tuples: r.paper_tuples(),
        }
    }
}

#[pymethods]
impl InvariantReport {
    fn __len__(&self) -> usize {
        self.invariants.len()
    }

    fn __repr__(&self) -> String {
        format!("InvariantReport(modulus={}, invariants={:?})", self.modulus, self.invariants)
    }
}

#[pyclass(frozen, get_all, skip_from_py_object, module = "invariant_lab_py")]
#[derive(Clone)]
pub struct CompositeCertificate {
    modulus: u64,
    witness: u64,
    factor_a: u64,
    factor_b: u64,
}

impl From<invariants::CompositeCertificate> for CompositeCertificate {
    fn from(c: invariants::CompositeCertificate) -> Self {
        CompositeCertificate {
            modulus: c.modulus.get(),
            witness: c.witness.value(),
            factor_a: c.factor_a,
            factor_b: c.factor_b,
        }
    }
}

#[pymethods]
impl CompositeCertificate {
    fn __repr__(&self) -> String {
        format!(
            "CompositeCertificate(modulus={}, witness={}, factors=({}, {}))",
            self.modulus, self.witness, self.factor_a, self.factor_b
        )
    }
}

#[pyclass(frozen, get_all, skip_from_py_object, module = "invariant_lab_py")]
#[derive(Clone)]
pub struct SubgroupTable {
    modulus: u64,
    generator_divisor: u64,
    elements: Vec<u64>,
    table: Vec<Vec<u64>>,
    identity: u64,
    anti_identity: u64,
    inverses: Vec<(u64, u64)>,
    generator_powers: Vec<u64>,
}

impl From<euler::SubgroupTable> for SubgroupTable {
    fn from(t: euler::SubgroupTable) -> Self {
        SubgroupTable {
            modulus: t.modulus.get(),
            generator_divisor: t.generator_divisor,
            elements: values(&t.elements),
            table: t.table.iter().map(|row| values(row)).collect(),
            identity: t.identity.value(),
            anti_identity: t.anti_identity.value(),
            inverses: t.inverses.iter().map(|(&x, &y)| (x, y)).collect(),
            generator_powers: values(&t.generator_powers()),
        }
    }
}

#[pyclass(frozen, get_all, skip_from_py_object, module = "invariant_lab_py")]
#[derive(Clone)]
pub struct CarmichaelRecord {
    m: u64,
    factorization: Vec<(u64, u32)>,
    omega: u64,
    ratio: Option<u64>,
    korselt: bool,
    fermat_verified: bool,
    fermat_exhaustive: bool,
}

impl From<carmichael::CarmichaelRecord> for CarmichaelRecord {
    fn from(r: carmichael::CarmichaelRecord) -> Self {
        CarmichaelRecord {
            m: r.m,
            factorization: r.factorization.factors().to_vec(),
            omega: r.omega,
            ratio: r.ratio,
            korselt: r.korselt,
            fermat_verified: r.fermat_verified,
            fermat_exhaustive: r.fermat_exhaustive,
        }
    }
}

#[pymethods]
impl CarmichaelRecord {
    fn __repr__(&self) -> String {
        format!(
            "CarmichaelRecord(m={}, omega={}, ratio={:?}, korselt={})",
            self.m, self.omega, self.ratio, self.korselt
        )
    }
}

#[pyclass(frozen, get_all, skip_from_py_object, module = "invariant_lab_py")]
#[derive(Clone)]
pub struct OmegaReport {
    m: u64,
    omega_paper: u64,
    lambda_standard: u64,
    phi: u64,
    divides_phi: bool,
}

#[pyfunction]
fn gcd(x: u64, y: u64) -> u64 {
    arith::gcd(x, y)
}

#[pyfunction]
fn extended_gcd(x: u64, y: u64) -> PyResult<(u64, i128, i128)> {
    arith::extended_gcd(x, y).map_err(to_py)
}

#[pyfunction]
fn mod_pow(base: u64, exp: u64, m: u64) -> PyResult<u64> {
    Ok(modulus(m)?.reduce(base).pow(exp).value())
}

/// Returns `(x, M)` with `x ≡ r_i (mod n_i)` and `M` the product of the moduli.
#[pyfunction]
fn crt_combine(congruences: Vec<(u64, u64)>) -> PyResult<(u64, u64)> {
    let r = arith::crt_combine(&congruences).map_err(to_py)?;
    Ok((r.value(), r.modulus().get()))
}

#[pyfunction]
fn factorize(n: u64) -> PyResult<Vec<(u64, u32)>> {
    Ok(arith::factorize(n).map_err(to_py)?.factors().to_vec())
}

#[pyfunction]
fn is_prime(n: u64) -> bool {
    arith::is_prime(n)
}

#[pyfunction]
fn is_invariant(x: u64, m: u64) -> PyResult<bool> {
    Ok(invariants::is_invariant(residue(x, m)?))
}

#[pyfunction]
fn is_anti_invariant(x: u64, m: u64) -> PyResult<bool> {
    Ok(invariants::is_anti_invariant(residue(x, m)?))
}

#[pyfunction]
fn anti_of(i: u64, m: u64) -> PyResult<u64> {
    Ok(invariants::anti_of(residue(i, m)?).map_err(to_py)?.value())
}

/// Invariant census computed from the factorization of `m`.
#[pyfunction]
fn invariants_of(m: u64) -> PyResult<InvariantReport> {
    Ok(invariants::invariants_from_factorization(modulus(m)?).into())
}

#[pyfunction]
#[pyo3(signature = (m, bound = invariants::DEFAULT_ORACLE_BOUND))]
fn enumerate_invariants_bruteforce(m: u64, bound: u64) -> PyResult<InvariantReport> {
    invariants::enumerate_invariants_bruteforce_with_bound(modulus(m)?, bound)
        .map(Into::into)
        .map_err(to_py)
}

#[pyfunction]
fn tuples_of(m: u64) -> PyResult<Vec<(u64, u64)>> {
    Ok(invariants::tuples_of(modulus(m)?)
        .into_iter()
        .map(|(a, i)| (a.value(), i.value()))
        .collect())
}

#[pyfunction]
fn power_stability_check(i: u64, m: u64, s_max: u64) -> PyResult<bool> {
    invariants::power_stability_check(residue(i, m)?, s_max).map_err(to_py)
}

#[pyfunction]
fn certify_composite(witness: u64, m: u64) -> PyResult<CompositeCertificate> {
    invariants::certify_composite_from_invariant(residue(witness, m)?)
        .map(Into::into)
        .map_err(to_py)
}

/// `None` for a prime or prime power, otherwise a certificate.
#[pyfunction]
#[pyo3(signature = (m, bound = invariants::DEFAULT_ORACLE_BOUND))]
fn primality_by_invariants(m: u64, bound: u64) -> PyResult<Option<CompositeCertificate>> {
    match invariants::primality_by_invariants_with_bound(modulus(m)?, bound).map_err(to_py)? {
        PrimalityVerdict::PrimeOrPrimePower => Ok(None),
        PrimalityVerdict::CompositeWithCertificate(c) => Ok(Some(c.into())),
    }
}

#[pyfunction]
fn euler_phi(m: u64) -> PyResult<u64> {
    Ok(euler::euler_phi(modulus(m)?))
}

#[pyfunction]
fn generalized_euler_residue(a: u64, m: u64) -> PyResult<u64> {
    Ok(euler::generalized_euler_residue(residue(a, m)?).map_err(to_py)?.value())
}

#[pyfunction]
fn expected_idempotent(a: u64, m: u64) -> PyResult<u64> {
    Ok(euler::expected_idempotent(residue(a, m)?).map_err(to_py)?.value())
}

/// `(support, idempotent)` for every unitary divisor of `m`.
#[pyfunction]
fn euler_classification(m: u64) -> PyResult<Vec<(u64, u64)>> {
    let c = euler::euler_classification(modulus(m)?).map_err(to_py)?;
    Ok(c.classes.iter().map(|k| (k.support, k.idempotent.value())).collect())
}

#[pyfunction]
#[pyo3(signature = (m, bound = invariants::DEFAULT_ORACLE_BOUND))]
fn verify_generalization(m: u64, bound: u64) -> PyResult<bool> {
    euler::verify_generalization_with_bound(modulus(m)?, bound).map_err(to_py)
}

#[pyfunction]
fn multiplier_exponent_check(a: u64, m: u64, s: u64) -> PyResult<bool> {
    euler::multiplier_exponent_check(residue(a, m)?, s).map_err(to_py)
}

#[pyfunction]
fn subgroup_table(m: u64, a: u64) -> PyResult<SubgroupTable> {
    euler::subgroup_table(modulus(m)?, a).map(Into::into).map_err(to_py)
}

#[pyfunction]
fn omega_paper(m: u64) -> PyResult<u64> {
    carmichael::omega_paper(m).map_err(to_py)
}

#[pyfunction]
fn carmichael_lambda(m: u64) -> PyResult<u64> {
    carmichael::carmichael_lambda(m).map_err(to_py)
}

#[pyfunction]
fn omega_report(m: u64) -> PyResult<OmegaReport> {
    let r = carmichael::omega_report(m).map_err(to_py)?;
    Ok(OmegaReport {
        m: r.m,
        omega_paper: r.omega_paper,
        lambda_standard: r.lambda_standard,
        phi: r.phi,
        divides_phi: r.divides_phi,
    })
}

#[pyfunction]
fn korselt_check(m: u64) -> PyResult<bool> {
    carmichael::korselt_check(m).map_err(to_py)
}

#[pyfunction]
fn hypothesis_check(m: u64) -> PyResult<CarmichaelRecord> {
    carmichael::hypothesis_check(m).map(Into::into).map_err(to_py)
}

#[pyfunction]
fn scan_carmichael(py: Python<'_>, lo: u64, hi: u64) -> PyResult<Vec<CarmichaelRecord>> {
    let records = py.detach(|| carmichael::scan_carmichael(lo, hi)).map_err(to_py)?;
    Ok(records.into_iter().map(Into::into).collect())
}

#[pymodule]
fn invariant_lab_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("BoundExceeded", m.py().get_type::<BoundExceeded>())?;
    m.add_class::<InvariantReport>()?;
    m.add_class::<CompositeCertificate>()?;
    m.add_class::<SubgroupTable>()?;
    m.add_class::<CarmichaelRecord>()?;
    m.add_class::<OmegaReport>()?;

    m.add_function(wrap_pyfunction!(gcd, m)?)?;
    m.add_function(wrap_pyfunction!(extended_gcd, m)?)?;
    m.add_function(wrap_pyfunction!(mod_pow, m)?)?;
    m.add_function(wrap_pyfunction!(crt_combine, m)?)?;
    m.add_function(wrap_pyfunction!(factorize, m)?)?;
    m.add_function(wrap_pyfunction!(is_prime, m)?)?;

    m.add_function(wrap_pyfunction!(is_invariant, m)?)?;
    m.add_function(wrap_pyfunction!(is_anti_invariant, m)?)?;
    m.add_function(wrap_pyfunction!(anti_of, m)?)?;
    m.add_function(wrap_pyfunction!(invariants_of, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_invariants_bruteforce, m)?)?;
    m.add_function(wrap_pyfunction!(tuples_of, m)?)?;
    m.add_function(wrap_pyfunction!(power_stability_check, m)?)?;
    m.add_function(wrap_pyfunction!(certify_composite, m)?)?;
    m.add_function(wrap_pyfunction!(primality_by_invariants, m)?)?;

    m.add_function(wrap_pyfunction!(euler_phi, m)?)?;
    m.add_function(wrap_pyfunction!(generalized_euler_residue, m)?)?;
    m.add_function(wrap_pyfunction!(expected_idempotent, m)?)?;
    m.add_function(wrap_pyfunction!(euler_classification, m)?)?;
    m.add_function(wrap_pyfunction!(verify_generalization, m)?)?;
    m.add_function(wrap_pyfunction!(multiplier_exponent_check, m)?)?;
    m.add_function(wrap_pyfunction!(subgroup_table, m)?)?;

    m.add_function(wrap_pyfunction!(omega_paper, m)?)?;
    m.add_function(wrap_pyfunction!(carmichael_lambda, m)?)?;
    m.add_function(wrap_pyfunction!(omega_report, m)?)?;
    m.add_function(wrap_pyfunction!(korselt_check, m)?)?;
    m.add_function(wrap_pyfunction!(hypothesis_check, m)?)?;
    m.add_function(wrap_pyfunction!(scan_carmichael, m)?)?;
    Ok(())
}
