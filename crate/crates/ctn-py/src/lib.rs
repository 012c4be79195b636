//! Python bindings for the census-taker number library.
//!
//! Triples cross the boundary as plain `(a, b, c)` tuples in descending
//! order; everything else is wrapped in small frozen classes.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn domain_err(e: ctn_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

type Tup = (u64, u64, u64);

fn tup(t: &ctn_core::Triple) -> Tup {
    let [a, b, c] = t.entries();
    (a, b, c)
}

/// A positive integer with its prime factorization.
#[pyclass(frozen)]
struct Factorization {
    inner: ctn_core::FactoredInteger,
}

#[pymethods]
impl Factorization {
    #[getter]
    fn value(&self) -> u64 {
        self.inner.value()
    }

    /// (prime, exponent) pairs in ascending prime order.
    #[getter]
    fn factors(&self) -> Vec<(u64, u32)> {
        self.inner.factors().to_vec()
    }

    /// Number of prime factors counted with multiplicity.
    #[getter]
    fn omega(&self) -> u32 {
        self.inner.omega()
    }

    fn is_prime(&self) -> bool {
        self.inner.is_prime()
    }

    fn is_prime_power(&self) -> bool {
        self.inner.is_prime_power()
    }

    fn divisors(&self) -> Vec<u64> {
        self.inner.divisors()
    }

    fn __repr__(&self) -> String {
        format!("Factorization({} = {:?})", self.inner.value(), self.inner.factors())
    }
}

/// All unordered triples with a fixed product, grouped by sum.
#[pyclass(frozen)]
struct TripleTable {
    inner: ctn_core::TripleTable,
}

#[pymethods]
impl TripleTable {
    #[getter]
    fn n(&self) -> u64 {
        self.inner.n()
    }

    /// Triples in display order (descending by largest, then middle entry).
    #[getter]
    fn triples(&self) -> Vec<Tup> {
        self.inner.triples().iter().map(tup).collect()
    }

    #[getter]
    fn sums(&self) -> Vec<u64> {
        self.inner.triples().iter().map(|t| t.sum()).collect()
    }

    /// Mapping sum -> triples attaining it.
    fn by_sum(&self) -> std::collections::BTreeMap<u64, Vec<Tup>> {
        self.inner
            .by_sum()
            .iter()
            .map(|(&s, ts)| (s, ts.iter().map(tup).collect()))
            .collect()
    }

    /// Sums attained by two or more triples, ascending, with their classes.
    fn equal_sum_classes(&self) -> Vec<(u64, Vec<Tup>)> {
        self.inner
            .equal_sum_classes()
            .into_iter()
            .map(|class| (class.sum, class.triples.iter().map(tup).collect()))
            .collect()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!("TripleTable(n={}, {} triples)", self.inner.n(), self.inner.len())
    }
}

/// A census-taker decision with its evidence.
#[pyclass(frozen)]
struct Classification {
    inner: ctn_core::Classification,
}

#[pymethods]
impl Classification {
    #[getter]
    fn n(&self) -> u64 {
        self.inner.n
    }

    #[getter]
    fn is_ctn(&self) -> bool {
        self.inner.is_ctn()
    }

    #[getter]
    fn magic_sum(&self) -> Option<u64> {
        self.inner.magic_sum()
    }

    /// The mysterious triples, ordered by largest entry descending.
    #[getter]
    fn pair(&self) -> Option<(Tup, Tup)> {
        self.inner.pair().map(|[x, y]| (tup(&x), tup(&y)))
    }

    /// NO_EQUAL_SUM_PAIR, MULTIPLE_EQUAL_SUM_CLASSES, or
    /// COLLISION_CLASS_TOO_LARGE; None for census-taker numbers.
    #[getter]
    fn reason(&self) -> Option<&'static str> {
        self.inner.reason().map(|r| r.tag())
    }

    /// Every sum attained by two or more triples, ascending.
    #[getter]
    fn collisions(&self) -> Vec<(u64, Vec<Tup>)> {
        self.inner
            .collisions
            .iter()
            .map(|class| (class.sum, class.triples.iter().map(tup).collect()))
            .collect()
    }

    #[getter]
    fn triple_count(&self) -> usize {
        self.inner.triple_count
    }

    fn __repr__(&self) -> String {
        match self.inner.pair() {
            Some([x, y]) => format!(
                "Classification({}: CTN, magic_sum={}, {x} / {y})",
                self.inner.n,
                self.inner.magic_sum().unwrap(),
            ),
            None => format!(
                "Classification({}: not a CTN, {})",
                self.inner.n,
                self.inner.reason().unwrap().tag(),
            ),
        }
    }
}

/// Whether the oldest/youngest questions settle the pair of a CTN.
#[pyclass(frozen, get_all)]
struct Disambiguation {
    n: u64,
    oldest_works: bool,
    youngest_works: bool,
    oldest_selects: Option<Tup>,
    youngest_selects: Option<Tup>,
}

/// The sieve's verdict on one integer.
#[pyclass(frozen, get_all)]
struct SieveVerdict {
    n: u64,
    survives: bool,
    eliminated_by: &'static str,
    omega: u32,
    strike: Option<&'static str>,
}

/// A member of the p²(2p−1)² family.
#[pyclass(frozen)]
struct FamilyMember {
    inner: ctn_core::FamilyMember,
}

#[pymethods]
impl FamilyMember {
    #[getter]
    fn p(&self) -> u64 {
        self.inner.p
    }

    #[getter]
    fn q(&self) -> u64 {
        self.inner.q
    }

    #[getter]
    fn n(&self) -> u64 {
        self.inner.n
    }

    #[getter]
    fn magic_sum(&self) -> u64 {
        self.inner.magic_sum
    }

    /// The eight (triple, sum) rows in display order.
    #[getter]
    fn rows(&self) -> Vec<(Tup, u64)> {
        self.inner.rows.iter().map(|r| (tup(&r.triple), r.sum)).collect()
    }

    /// The symbolic (triple, sum) forms the rows instantiate.
    #[getter]
    fn row_forms(&self) -> Vec<(&'static str, &'static str)> {
        self.inner.rows.iter().map(|r| (r.triple_form, r.sum_form)).collect()
    }

    fn __repr__(&self) -> String {
        format!(
            "FamilyMember(p={}, n={}, magic_sum={})",
            self.inner.p, self.inner.n, self.inner.magic_sum,
        )
    }
}

/// Outcome of replaying classification against the sieve.
#[pyclass(frozen, get_all)]
struct SoundnessReport {
    hi: u64,
    ctns: Vec<u64>,
    survivor_count: usize,
    violations: Vec<u64>,
    ok: bool,
}

/// Outcome of verifying the family up to some p.
#[pyclass(frozen)]
struct FamilyReport {
    inner: ctn_core::FamilyReport,
}

#[pymethods]
impl FamilyReport {
    #[getter]
    fn ok(&self) -> bool {
        self.inner.ok()
    }

    #[getter]
    fn members(&self) -> Vec<FamilyMember> {
        self.inner
            .members
            .iter()
            .map(|m| FamilyMember { inner: m.clone() })
            .collect()
    }

    #[getter]
    fn violations(&self) -> Vec<(u64, String)> {
        self.inner.violations.iter().map(|v| (v.p, v.detail.clone())).collect()
    }
}

/// Outcome of checking the six sum-ordering inequalities.
#[pyclass(frozen, get_all)]
struct LemmaReport {
    x_lo: i64,
    x_hi: i64,
    points_checked: u64,
    violations: Vec<(String, i64, String)>,
    ok: bool,
}

#[pyfunction]
fn factorize(n: u64) -> PyResult<Factorization> {
    Ok(Factorization { inner: ctn_core::factorize(n).map_err(domain_err)? })
}

#[pyfunction]
fn divisors(n: u64) -> PyResult<Vec<u64>> {
    Ok(ctn_core::factorize(n).map_err(domain_err)?.divisors())
}

#[pyfunction]
fn is_prime(n: u64) -> bool {
    ctn_core::is_prime(n)
}

#[pyfunction]
fn is_prime_power(n: u64) -> PyResult<bool> {
    Ok(ctn_core::factorize(n).map_err(domain_err)?.is_prime_power())
}

#[pyfunction]
fn enumerate_triples(n: u64) -> PyResult<TripleTable> {
    Ok(TripleTable { inner: ctn_core::enumerate_triples(n).map_err(domain_err)? })
}

#[pyfunction]
fn classify(n: u64) -> PyResult<Classification> {
    Ok(Classification { inner: ctn_core::classify(n).map_err(domain_err)? })
}

#[pyfunction]
fn disambiguators(n: u64) -> PyResult<Disambiguation> {
    let d = ctn_core::disambiguators(n).map_err(domain_err)?;
    Ok(Disambiguation {
        n: d.n,
        oldest_works: d.oldest_works,
        youngest_works: d.youngest_works,
        oldest_selects: d.oldest_selects.map(|t| tup(&t)),
        youngest_selects: d.youngest_selects.map(|t| tup(&t)),
    })
}

#[pyfunction]
#[pyo3(signature = (lo, hi, workers = 1))]
fn scan_range(lo: u64, hi: u64, workers: usize) -> PyResult<Vec<Classification>> {
    let found = ctn_core::scan_range_with_workers(lo, hi, workers).map_err(domain_err)?;
    Ok(found.into_iter().map(|inner| Classification { inner }).collect())
}

#[pyfunction]
#[pyo3(signature = (lo, hi, workers = 1))]
fn sieved_scan_range(lo: u64, hi: u64, workers: usize) -> PyResult<Vec<Classification>> {
    let found = ctn_core::sieved_scan_range_with_workers(lo, hi, workers).map_err(domain_err)?;
    Ok(found.into_iter().map(|inner| Classification { inner }).collect())
}

#[pyfunction]
fn sieve(n: u64) -> PyResult<SieveVerdict> {
    let v = ctn_core::sieve(n).map_err(domain_err)?;
    Ok(SieveVerdict {
        n: v.n,
        survives: v.survives(),
        eliminated_by: v.eliminated_by.tag(),
        omega: v.omega,
        strike: v.strike().map(|s| s.symbol()),
    })
}

#[pyfunction]
fn sieve_survivors(lo: u64, hi: u64) -> PyResult<Vec<u64>> {
    ctn_core::sieve_survivors(lo, hi).map_err(domain_err)
}

#[pyfunction]
fn verify_sieve_soundness(hi: u64) -> SoundnessReport {
    let r = ctn_core::verify_sieve_soundness(hi);
    let ok = r.ok();
    SoundnessReport {
        hi: r.hi,
        ctns: r.ctns,
        survivor_count: r.survivor_count,
        violations: r.violations,
        ok,
    }
}

#[pyfunction]
fn family_candidates(max_p: u64) -> Vec<FamilyMember> {
    ctn_core::family_candidates(max_p)
        .into_iter()
        .map(|inner| FamilyMember { inner })
        .collect()
}

#[pyfunction]
fn family_rows(p: u64) -> PyResult<Vec<(Tup, u64)>> {
    let rows = ctn_core::family_rows(p).map_err(domain_err)?;
    Ok(rows.iter().map(|r| (tup(&r.triple), r.sum)).collect())
}

#[pyfunction]
fn verify_family(max_p: u64) -> FamilyReport {
    FamilyReport { inner: ctn_core::verify_family(max_p) }
}

#[pyfunction]
fn check_lemmas(x_lo: i64, x_hi: i64) -> LemmaReport {
    let r = ctn_core::check_lemmas(x_lo, x_hi);
    let ok = r.ok();
    LemmaReport {
        x_lo: r.x_lo,
        x_hi: r.x_hi,
        points_checked: r.points_checked,
        violations: r
            .violations
            .into_iter()
            .map(|v| (v.label.to_string(), v.x, v.detail))
            .collect(),
        ok,
    }
}

#[pymodule]
fn ctn_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Factorization>()?;
    m.add_class::<TripleTable>()?;
    m.add_class::<Classification>()?;
    m.add_class::<Disambiguation>()?;
    m.add_class::<SieveVerdict>()?;
    m.add_class::<FamilyMember>()?;
    m.add_class::<SoundnessReport>()?;
    m.add_class::<FamilyReport>()?;
    m.add_class::<LemmaReport>()?;
    m.add_function(wrap_pyfunction!(factorize, m)?)?;
    m.add_function(wrap_pyfunction!(divisors, m)?)?;
    m.add_function(wrap_pyfunction!(is_prime, m)?)?;
    m.add_function(wrap_pyfunction!(is_prime_power, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_triples, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(disambiguators, m)?)?;
    m.add_function(wrap_pyfunction!(scan_range, m)?)?;
    m.add_function(wrap_pyfunction!(sieved_scan_range, m)?)?;
    m.add_function(wrap_pyfunction!(sieve, m)?)?;
    m.add_function(wrap_pyfunction!(sieve_survivors, m)?)?;
    m.add_function(wrap_pyfunction!(verify_sieve_soundness, m)?)?;
    m.add_function(wrap_pyfunction!(family_candidates, m)?)?;
    m.add_function(wrap_pyfunction!(family_rows, m)?)?;
    m.add_function(wrap_pyfunction!(verify_family, m)?)?;
    m.add_function(wrap_pyfunction!(check_lemmas, m)?)?;
    Ok(())
}
