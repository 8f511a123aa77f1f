//! Pair scans, theorem checks against the oracle, and CSV export.

use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::arith;
use crate::covering::{self, CoveringInstance, NuOutcome};
use crate::error::{Error, Result};
use crate::oracle::{self, AperyTable, DEFAULT_MAX_MODULUS};
use crate::pairmodel::{
    classify, frak_f, landmarks, leading_quotient_test, nu_bounds, nu_formula, predict_frobenius,
    Landmarks, PairClass, Prediction, PrimePair, Quadruple, Weights,
};
use crate::witness;

/// Largest `q_max` (and grid limit) accepted by a scan.
pub const MAX_SCAN_BOUND: i64 = 1_000_000;

/// Largest number of pairs a single scan will produce.
pub const MAX_SCAN_PAIRS: usize = 2_000_000;

pub const CSV_HEADER: [&str; 21] = [
    "p",
    "q",
    "kappa",
    "lambda",
    "kappa_p",
    "lambda_p",
    "tau",
    "class",
    "d0",
    "d1",
    "d2",
    "d3",
    "g_a",
    "g_b",
    "g_c",
    "g_oracle",
    "pred_kind",
    "pred_lo",
    "pred_hi",
    "nu_formula",
    "nu_brute",
];

// Per-record check names.
pub const CHECK_INVARIANTS: &str = "pair_invariants";
pub const CHECK_LEADING_QUOTIENT: &str = "leading_quotient";
pub const CHECK_LARGE_Q: &str = "large_q_class";
pub const CHECK_BRACKET: &str = "bracket";
pub const CHECK_PREDICTION: &str = "prediction";
pub const CHECK_GA_SHARP: &str = "ga_sharpness";
pub const CHECK_GC_GAP: &str = "gc_gap";
pub const CHECK_GB_TYPE: &str = "gb_type";
pub const CHECK_GB_LAMBDA_GAP: &str = "gb_lambda_gap";
pub const CHECK_GA_WITNESS: &str = "ga_witness";
pub const CHECK_GB_WITNESS: &str = "gb_witness";
pub const CHECK_NU_FORMULA: &str = "nu_formula";
pub const CHECK_NU_BOUNDS: &str = "nu_bounds";

const RECORD_CHECKS: [&str; 13] = [
    CHECK_INVARIANTS,
    CHECK_LEADING_QUOTIENT,
    CHECK_LARGE_Q,
    CHECK_BRACKET,
    CHECK_PREDICTION,
    CHECK_GA_SHARP,
    CHECK_GC_GAP,
    CHECK_GB_TYPE,
    CHECK_GB_LAMBDA_GAP,
    CHECK_GA_WITNESS,
    CHECK_GB_WITNESS,
    CHECK_NU_FORMULA,
    CHECK_NU_BOUNDS,
];

// Suite-level check names.
pub const CHECK_WHITE_REGION: &str = "white_region";
pub const CHECK_TWIN_GC: &str = "twin_gc";
pub const CHECK_CONSTRUCTIONS: &str = "constructions";
pub const CHECK_NU_THEOREMS: &str = "nu_theorems";
pub const CHECK_NU_PAIR_BOUNDS: &str = "nu_pair_bounds";
pub const CHECK_COVERING_BOUNDS: &str = "covering_bounds";
pub const CHECK_SEMIREGULAR_PRIMES: &str = "semiregular_primes";
pub const CHECK_SYLVESTER: &str = "sylvester";

/// Oracle answers for one pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleData {
    pub g: i64,
    pub ga_representable: bool,
    pub gb_representable: bool,
    pub gb_plus_lambda_p_representable: bool,
    pub gc_representable: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckFlag {
    pub name: &'static str,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairRecord {
    pub pair: PrimePair,
    pub class: PairClass,
    pub weights: Weights,
    pub landmarks: Landmarks,
    pub prediction: Prediction,
    pub nu_formula: Option<i64>,
    pub oracle: Option<OracleData>,
    pub oracle_error: Option<String>,
    pub nu_brute: Option<i64>,
    pub nu_error: Option<String>,
    pub checks: Vec<CheckFlag>,
}

impl PairRecord {
    pub fn g_oracle(&self) -> Option<i64> {
        self.oracle.map(|o| o.g)
    }

    pub fn flag(&self, name: &str) -> Option<bool> {
        self.checks
            .iter()
            .find(|c| c.name == name)
            .map(|c| c.passed)
    }

    pub fn all_checks_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// One-line digest, e.g. `κ=1 λ=2 class=TypeTwoSmall g=55 (exact) ν-formula=37`.
    pub fn summary_line(&self) -> String {
        let g = match (self.g_oracle(), self.prediction) {
            (Some(g), _) => g.to_string(),
            (None, Prediction::Exact { value, .. }) => value.to_string(),
            (None, _) => "?".to_string(),
        };
        let mut line = format!(
            "κ={} λ={} class={} g={g} ({})",
            self.pair.kappa,
            self.pair.lambda,
            self.class.name(),
            self.prediction.kind()
        );
        if let Some(nu) = self.nu_formula {
            line.push_str(&format!(" ν-formula={nu}"));
        }
        line
    }

    fn csv_row(&self, class_label: &str) -> Vec<String> {
        let opt = |v: Option<i64>| v.map_or_else(String::new, |v| v.to_string());
        let pr = &self.pair;
        let w = &self.weights;
        let lm = &self.landmarks;
        let (lo, hi) = self.prediction.bounds();
        vec![
            pr.p.to_string(),
            pr.q.to_string(),
            pr.kappa.to_string(),
            pr.lambda.to_string(),
            pr.kappa_p.to_string(),
            pr.lambda_p.to_string(),
            opt(self.class.tau()),
            class_label.to_string(),
            w.d0.to_string(),
            w.d1.to_string(),
            w.d2.to_string(),
            w.d3.to_string(),
            lm.g_a.to_string(),
            lm.g_b.to_string(),
            lm.g_c.to_string(),
            opt(self.g_oracle()),
            self.prediction.kind().to_string(),
            lo.to_string(),
            hi.to_string(),
            opt(self.nu_formula),
            opt(self.nu_brute),
        ]
    }
}

impl fmt::Display for PairRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pr = &self.pair;
        let w = &self.weights;
        let lm = &self.landmarks;
        writeln!(f, "pair        {pr}")?;
        writeln!(f, "p' q'       {} {}", pr.p_half, pr.q_half)?;
        writeln!(f, "κ λ         {} {}", pr.kappa, pr.lambda)?;
        writeln!(f, "κ' λ'       {} {}", pr.kappa_p, pr.lambda_p)?;
        match self.class.tau() {
            Some(tau) => writeln!(f, "class       {} (τ={tau})", self.class.name())?,
            None => writeln!(f, "class       {}", self.class.name())?,
        }
        writeln!(f, "weights     {} {} {} {}", w.d0, w.d1, w.d2, w.d3)?;
        writeln!(f, "ga gb gc    {} {} {}", lm.g_a, lm.g_b, lm.g_c)?;
        writeln!(f, "prediction  {}", self.prediction)?;
        match (&self.oracle, &self.oracle_error) {
            (Some(o), _) => writeln!(f, "oracle g    {}", o.g)?,
            (None, Some(e)) => writeln!(f, "oracle g    unavailable: {e}")?,
            (None, None) => {}
        }
        if let Some(nu) = self.nu_formula {
            writeln!(f, "ν formula   {nu}")?;
        }
        match (self.nu_brute, &self.nu_error) {
            (Some(nu), _) => writeln!(f, "ν search    {nu}")?,
            (None, Some(e)) => writeln!(f, "ν search    unavailable: {e}")?,
            (None, None) => {}
        }
        for c in &self.checks {
            writeln!(
                f,
                "check       {:<18} {}",
                c.name,
                if c.passed { "ok" } else { "FAIL" }
            )?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanOptions {
    pub p_max: i64,
    pub q_max: i64,
    pub oracle: bool,
    /// Run the ν search for pairs with `pq` at most this value.
    pub nu_cap: Option<i64>,
    pub jobs: usize,
    pub max_modulus: i64,
}

impl ScanOptions {
    pub fn new(p_max: i64, q_max: i64) -> Self {
        ScanOptions {
            p_max,
            q_max,
            oracle: false,
            nu_cap: None,
            jobs: 1,
            max_modulus: DEFAULT_MAX_MODULUS,
        }
    }

    pub fn with_oracle(mut self, on: bool) -> Self {
        self.oracle = on;
        self
    }

    pub fn with_nu_cap(mut self, cap: Option<i64>) -> Self {
        self.nu_cap = cap;
        self
    }

    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs;
        self
    }
}

fn odd_primes_up_to(limit: i64) -> Vec<i64> {
    (3..=limit)
        .step_by(2)
        .filter(|&n| arith::is_prime(n as u64))
        .collect()
}

/// Every pair of odd primes `p < q` with `p <= p_max` and `q <= q_max`,
/// ordered by `p` then `q`.
pub fn prime_pairs(p_max: i64, q_max: i64) -> Vec<(i64, i64)> {
    let primes = odd_primes_up_to(q_max);
    let mut out = Vec::new();
    for (i, &p) in primes.iter().enumerate() {
        if p > p_max {
            break;
        }
        out.extend(primes[i + 1..].iter().map(|&q| (p, q)));
    }
    out
}

fn validate_bounds(p_max: i64, q_max: i64, jobs: usize) -> Result<()> {
    if p_max < 3 || q_max < p_max {
        return Err(Error::input(format!(
            "need 3 <= p_max <= q_max, got p_max={p_max} q_max={q_max}"
        )));
    }
    if q_max > MAX_SCAN_BOUND {
        return Err(Error::Resource(format!(
            "q_max={q_max} exceeds the scan limit {MAX_SCAN_BOUND}"
        )));
    }
    if jobs == 0 {
        return Err(Error::input("jobs must be at least 1"));
    }
    Ok(())
}

/// Order-preserving map, on a dedicated pool when `jobs > 1`.
fn par_map<T, R, F>(items: &[T], jobs: usize, f: F) -> Result<Vec<R>>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    if jobs <= 1 {
        return Ok(items.iter().map(f).collect());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Resource(format!("thread pool: {e}")))?;
    Ok(pool.install(|| items.par_iter().map(f).collect()))
}

fn query_oracle(
    pair: &PrimePair,
    w: &Weights,
    lm: &Landmarks,
    max_modulus: i64,
) -> Result<OracleData> {
    let table = AperyTable::build_with_cap(&w.as_array(), max_modulus)?;
    Ok(OracleData {
        g: table.frobenius_number(),
        ga_representable: table.is_representable(lm.g_a),
        gb_representable: table.is_representable(lm.g_b),
        gb_plus_lambda_p_representable: table.is_representable(lm.g_b + pair.lambda_p),
        gc_representable: table.is_representable(lm.g_c),
    })
}

/// Builds the record for one pair. Oracle and ν-search failures are stored
/// in the record rather than returned.
pub fn pair_record(
    pair: PrimePair,
    with_oracle: bool,
    nu_cap: Option<i64>,
    max_modulus: i64,
) -> Result<PairRecord> {
    let weights = Weights::of(&pair)?;
    let lm = landmarks(&pair)?;
    let mut rec = PairRecord {
        pair,
        class: classify(&pair),
        weights,
        landmarks: lm,
        prediction: predict_frobenius(&pair)?,
        nu_formula: nu_formula(&pair)?,
        oracle: None,
        oracle_error: None,
        nu_brute: None,
        nu_error: None,
        checks: Vec::new(),
    };
    if with_oracle {
        match query_oracle(&pair, &weights, &lm, max_modulus) {
            Ok(o) => rec.oracle = Some(o),
            Err(e) => rec.oracle_error = Some(e.to_string()),
        }
    }
    if nu_cap.is_some_and(|cap| pair.n() <= cap) {
        match CoveringInstance::new(pair.n()).and_then(|inst| covering::nu_cyclic_bruteforce(&inst))
        {
            Ok(outcome) => rec.nu_brute = outcome.value(),
            Err(e) => rec.nu_error = Some(e.to_string()),
        }
    }
    rec.checks = evaluate_checks(&rec);
    Ok(rec)
}

fn evaluate_checks(rec: &PairRecord) -> Vec<CheckFlag> {
    let mut out = Vec::new();
    let mut push = |name, passed| out.push(CheckFlag { name, passed });
    let pair = &rec.pair;
    let lm = &rec.landmarks;
    let large = pair.kappa_lambda_large();

    push(CHECK_INVARIANTS, pair.invariant_violations().is_empty());
    push(
        CHECK_LEADING_QUOTIENT,
        leading_quotient_test(pair).is_ok_and(|t| t == large),
    );
    if pair.q >= (pair.p - 3) * pair.p + 3 {
        push(CHECK_LARGE_Q, large);
    }
    let ga_witness = witness::witness_ga(pair);
    push(
        CHECK_GA_WITNESS,
        match (&ga_witness, rec.oracle) {
            (Ok(w), Some(o)) => w.is_some() == !large && o.ga_representable == !large,
            (Ok(w), None) => w.is_some() == !large,
            (Err(_), _) => false,
        },
    );
    if !large {
        let gb = witness::gb_witness(pair);
        push(
            CHECK_GB_WITNESS,
            match (&gb, rec.oracle) {
                (Ok(w), Some(o)) => {
                    w.is_some() == rec.class.is_type_one() && o.gb_representable == w.is_some()
                }
                (Ok(w), None) => w.is_some() == rec.class.is_type_one(),
                (Err(_), _) => false,
            },
        );
    }
    if let Some(o) = rec.oracle {
        push(CHECK_BRACKET, lm.g_c <= o.g && o.g <= lm.g_a);
        push(CHECK_PREDICTION, rec.prediction.contains(o.g));
        push(CHECK_GA_SHARP, (o.g == lm.g_a) == large);
        push(CHECK_GC_GAP, !o.gc_representable);
        if !large {
            push(CHECK_GB_TYPE, o.gb_representable == rec.class.is_type_one());
        }
        if matches!(rec.class, PairClass::TypeTwoLarge { .. }) {
            push(CHECK_GB_LAMBDA_GAP, !o.gb_plus_lambda_p_representable);
        }
        if let Some(nu) = rec.nu_brute {
            push(
                CHECK_NU_BOUNDS,
                nu_bounds(pair, o.g).is_ok_and(|(lo, hi)| lo <= nu && nu <= hi),
            );
        }
    }
    if let (Some(f), Some(b)) = (rec.nu_formula, rec.nu_brute) {
        push(CHECK_NU_FORMULA, f == b);
    }
    out
}

/// One record per prime pair in range, ordered by `(p, q)` regardless of
/// `jobs`.
pub fn scan_pairs(opts: &ScanOptions) -> Result<Vec<PairRecord>> {
    validate_bounds(opts.p_max, opts.q_max, opts.jobs)?;
    let pairs = prime_pairs(opts.p_max, opts.q_max);
    if pairs.len() > MAX_SCAN_PAIRS {
        return Err(Error::Resource(format!(
            "{} pairs exceed the scan limit {MAX_SCAN_PAIRS}",
            pairs.len()
        )));
    }
    par_map(&pairs, opts.jobs, |&(p, q)| {
        pair_record(
            PrimePair::new(p, q)?,
            opts.oracle,
            opts.nu_cap,
            opts.max_modulus,
        )
    })?
    .into_iter()
    .collect()
}

fn write_csv<'a>(
    records: impl IntoIterator<Item = &'a PairRecord>,
    label: impl Fn(&PairRecord) -> &'static str,
) -> Result<String> {
    let mut wtr = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    let io = |e: csv::Error| Error::Resource(format!("csv: {e}"));
    wtr.write_record(CSV_HEADER).map_err(io)?;
    for rec in records {
        wtr.write_record(rec.csv_row(label(rec))).map_err(io)?;
    }
    let bytes = wtr
        .into_inner()
        .map_err(|e| Error::Resource(format!("csv: {e}")))?;
    String::from_utf8(bytes).map_err(|e| Error::Logic(format!("csv output not UTF-8: {e}")))
}

/// Scan records as CSV with class names in the `class` column.
pub fn records_to_csv(records: &[PairRecord]) -> Result<String> {
    write_csv(records, |r| r.class.name())
}

/// The classification grid for `2 < p < q < limit`, without oracle data.
/// The `class` column uses `white` for the unresolved Type I region.
pub fn classification_grid_csv(limit: i64) -> Result<String> {
    if limit > MAX_SCAN_BOUND {
        return Err(Error::Resource(format!(
            "limit {limit} exceeds the scan limit {MAX_SCAN_BOUND}"
        )));
    }
    let records = if limit <= 4 {
        Vec::new()
    } else {
        let top = limit - 1;
        scan_pairs(&ScanOptions::new(top, top))?
    };
    write_csv(&records, |r| r.class.grid_label())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub detail: String,
    pub record: Option<Box<PairRecord>>,
}

impl Failure {
    fn plain(detail: impl Into<String>) -> Self {
        Failure {
            detail: detail.into(),
            record: None,
        }
    }

    fn with_record(detail: impl Into<String>, rec: &PairRecord) -> Self {
        Failure {
            detail: detail.into(),
            record: Some(Box::new(rec.clone())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub tested: usize,
    pub failures: Vec<Failure>,
    pub skipped: Vec<String>,
    pub elapsed: Duration,
}

impl CheckReport {
    fn new(name: &str) -> Self {
        CheckReport {
            name: name.to_string(),
            tested: 0,
            failures: Vec::new(),
            skipped: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, ok: bool, failure: impl FnOnce() -> Failure) {
        self.tested += 1;
        if !ok {
            self.failures.push(failure());
        }
    }
}

fn timed(name: &str, body: impl FnOnce(&mut CheckReport) -> Result<()>) -> Result<CheckReport> {
    let start = Instant::now();
    let mut report = CheckReport::new(name);
    body(&mut report)?;
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Aggregates the per-record flags into one report per check name.
pub fn record_checks(records: &[PairRecord]) -> Vec<CheckReport> {
    RECORD_CHECKS
        .iter()
        .map(|&name| {
            let start = Instant::now();
            let mut report = CheckReport::new(name);
            for rec in records {
                if let Some(ok) = rec.flag(name) {
                    report.record(ok, || {
                        Failure::with_record(format!("{} failed", rec.pair), rec)
                    });
                }
            }
            if name == CHECK_BRACKET {
                report.skipped.extend(
                    records.iter().filter_map(|r| {
                        r.oracle_error.as_ref().map(|e| format!("{}: {e}", r.pair))
                    }),
                );
            }
            if name == CHECK_NU_FORMULA {
                report.skipped.extend(
                    records
                        .iter()
                        .filter_map(|r| r.nu_error.as_ref().map(|e| format!("{}: {e}", r.pair))),
                );
            }
            report.elapsed = start.elapsed();
            report
        })
        .collect()
}

/// The two pairs where the Type I region behaves differently: `g < gb` for
/// (11, 17) and `g > gb` for (29, 103).
pub fn check_white_region() -> Result<CheckReport> {
    timed(CHECK_WHITE_REGION, |report| {
        for (p, q, below) in [(11, 17, true), (29, 103, false)] {
            let rec = pair_record(PrimePair::new(p, q)?, true, None, DEFAULT_MAX_MODULUS)?;
            let gb = rec.landmarks.g_b;
            let ok = match rec.g_oracle() {
                Some(g) => {
                    matches!(rec.class, PairClass::TypeOneLarge { .. })
                        && (g < gb) == below
                        && g != gb
                }
                None => false,
            };
            report.record(ok, || {
                Failure::with_record(
                    format!(
                        "({p},{q}): expected g {} gb = {gb}",
                        if below { "<" } else { ">" }
                    ),
                    &rec,
                )
            });
        }
        Ok(())
    })
}

/// Twin pairs `(p, p + 2)` with `p <= p_max`: the oracle agrees with `gc`.
pub fn check_twin_gc(p_max: i64, jobs: usize) -> Result<CheckReport> {
    timed(CHECK_TWIN_GC, |report| {
        let twins: Vec<(i64, i64)> = odd_primes_up_to(p_max)
            .into_iter()
            .filter(|&p| arith::is_prime(p as u64 + 2))
            .map(|p| (p, p + 2))
            .collect();
        let records = par_map(&twins, jobs, |&(p, q)| {
            pair_record(PrimePair::new(p, q)?, true, None, DEFAULT_MAX_MODULUS)
        })?;
        for rec in records {
            let rec = rec?;
            let ok = rec.g_oracle() == Some(rec.landmarks.g_c)
                && rec.prediction.contains(rec.landmarks.g_c);
            report.record(ok, || {
                Failure::with_record(format!("{}: g != gc", rec.pair), &rec)
            });
        }
        Ok(())
    })
}

/// Exhaustive check of the explicit representations for every offset
/// `t in [0, d1)`, over all pairs with `d1 <= d1_max` where each applies.
/// The value and sign of each output are re-checked here.
pub fn check_constructions(d1_max: i64, jobs: usize) -> Result<CheckReport> {
    timed(CHECK_CONSTRUCTIONS, |report| {
        let mut pairs = Vec::new();
        for p in odd_primes_up_to(2 * d1_max) {
            let ph = (p - 1) / 2;
            if ph * (p + 2) > d1_max {
                break;
            }
            for q in odd_primes_up_to(d1_max / ph).into_iter().filter(|&q| q > p) {
                pairs.push((p, q));
            }
        }
        let per_pair = par_map(&pairs, jobs, |&(p, q)| -> Result<(usize, Vec<String>)> {
            let pair = PrimePair::new(p, q)?;
            let w = Weights::of(&pair)?;
            let lm = landmarks(&pair)?;
            let mut tested = 0;
            let mut bad = Vec::new();
            let mut check = |what: &str, base: i64, t: i64, got: Result<Quadruple>| {
                tested += 1;
                let ok = match got {
                    Ok(quad) => {
                        quad.is_nonnegative() && frak_f(&w, quad).ok() == Some(base + 1 + t)
                    }
                    Err(_) => false,
                };
                if !ok && bad.len() < 5 {
                    bad.push(format!("{pair} {what} t={t}"));
                }
            };
            let gb_applies = pair.kappa + 2 * pair.lambda <= pair.p;
            for t in 0..w.d1 {
                check("above-ga", lm.g_a, t, witness::represent_above_ga(&pair, t));
                if gb_applies {
                    check("above-gb", lm.g_b, t, witness::represent_above_gb(&pair, t));
                }
                if pair.is_twin() {
                    check(
                        "above-gc",
                        lm.g_c,
                        t,
                        witness::represent_above_gc_twin(&pair, t),
                    );
                }
            }
            Ok((tested, bad))
        })?;
        for item in per_pair {
            let (tested, bad) = item?;
            report.tested += tested;
            report.failures.extend(bad.into_iter().map(Failure::plain));
        }
        Ok(())
    })
}

/// Result of the ν family check over all pairs with `pq <= cap`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NuFamilyReport {
    pub formula: CheckReport,
    pub bounds: CheckReport,
    /// Pairs where the search found `ν = g`.
    pub attains_upper: Vec<(i64, i64)>,
}

/// For all pairs with `pq <= cap`: the searched ν matches the closed form
/// wherever one applies, and always sits in `[g - pq + 1, g]`.
pub fn check_nu_family(cap: i64, jobs: usize) -> Result<NuFamilyReport> {
    let start = Instant::now();
    let pairs: Vec<(i64, i64)> = prime_pairs(cap / 5, cap / 3)
        .into_iter()
        .filter(|&(p, q)| p * q <= cap)
        .collect();
    let records = par_map(&pairs, jobs, |&(p, q)| {
        pair_record(PrimePair::new(p, q)?, true, Some(cap), DEFAULT_MAX_MODULUS)
    })?;
    let mut formula = CheckReport::new(CHECK_NU_THEOREMS);
    let mut bounds = CheckReport::new(CHECK_NU_PAIR_BOUNDS);
    let mut attains_upper = Vec::new();
    for rec in records {
        let rec = rec?;
        let (Some(nu), Some(g)) = (rec.nu_brute, rec.g_oracle()) else {
            let why = rec
                .nu_error
                .clone()
                .or(rec.oracle_error.clone())
                .unwrap_or_default();
            formula.skipped.push(format!("{}: {why}", rec.pair));
            continue;
        };
        if let Some(f) = rec.nu_formula {
            formula.record(f == nu, || {
                Failure::with_record(format!("{}: formula {f} != search {nu}", rec.pair), &rec)
            });
        }
        let (lo, hi) = nu_bounds(&rec.pair, g)?;
        bounds.record(lo <= nu && nu <= hi, || {
            Failure::with_record(format!("{}: ν={nu} outside [{lo}, {hi}]", rec.pair), &rec)
        });
        if nu == g {
            attains_upper.push((rec.pair.p, rec.pair.q));
        }
    }
    formula.elapsed = start.elapsed();
    bounds.elapsed = formula.elapsed;
    Ok(NuFamilyReport {
        formula,
        bounds,
        attains_upper,
    })
}

/// `g_n - n + 1 <= ν_n <= g_n` for each listed degree.
pub fn check_covering_bounds(ns: &[i64]) -> Result<CheckReport> {
    timed(CHECK_COVERING_BOUNDS, |report| {
        for &n in ns {
            let inst = CoveringInstance::new(n)?;
            let g = inst.frobenius_number()?;
            match covering::nu_cyclic_bruteforce(&inst) {
                Ok(NuOutcome::NonGenus(nu)) => report.record(g - n < nu && nu <= g, || {
                    Failure::plain(format!("n={n}: ν={nu} outside [{}, {g}]", g - n + 1))
                }),
                Ok(NuOutcome::AllGeneraAttained) => report.record(g < n, || {
                    Failure::plain(format!("n={n}: every genus attained but g_n={g}"))
                }),
                Err(e) => report.skipped.push(format!("n={n}: {e}")),
            }
        }
        Ok(())
    })
}

/// For odd primes `p <= p_max`: the semi-regular non-genus is
/// `p'(p - 3) - p`, and ν equals the Frobenius number of `{p, p'}`.
pub fn check_semiregular_primes(p_max: i64) -> Result<CheckReport> {
    timed(CHECK_SEMIREGULAR_PRIMES, |report| {
        for p in odd_primes_up_to(p_max) {
            let ph = (p - 1) / 2;
            let semi = covering::largest_nongenus_semiregular(p)?;
            report.record(semi == ph * (p - 3) - p, || {
                Failure::plain(format!("p={p}: semi-regular non-genus {semi}"))
            });
            // {3, 1} represents everything, so its Frobenius number is -1.
            let g = if ph == 1 {
                -1
            } else {
                oracle::frobenius_number(&[p, ph])?
            };
            let nu = covering::nu_cyclic_bruteforce(&CoveringInstance::new(p)?)?;
            let expected = if g < 0 {
                NuOutcome::AllGeneraAttained
            } else {
                NuOutcome::NonGenus(g)
            };
            report.record(nu == expected, || {
                Failure::plain(format!("p={p}: ν={nu:?}, g({{p,p'}})={g}"))
            });
        }
        Ok(())
    })
}

/// The oracle against `ab - a - b` on seeded random coprime pairs.
pub fn check_sylvester(samples: usize, max: i64, seed: u64) -> Result<CheckReport> {
    timed(CHECK_SYLVESTER, |report| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        while report.tested < samples {
            let a = rng.random_range(2..=max);
            let b = rng.random_range(2..=max);
            if a == b || arith::gcd(a as u64, b as u64) != 1 {
                continue;
            }
            let g = oracle::frobenius_number(&[a, b])?;
            report.record(g == a * b - a - b, || {
                Failure::plain(format!("({a},{b}): oracle {g}, formula {}", a * b - a - b))
            });
        }
        Ok(())
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    pub p_max: i64,
    pub q_max: i64,
    pub nu_cap: i64,
    pub witness_d1_max: i64,
    pub semiregular_p_max: i64,
    pub covering_ns: Vec<i64>,
    pub sylvester_samples: usize,
    pub sylvester_max: i64,
    pub seed: u64,
    pub jobs: usize,
}

impl SuiteConfig {
    pub fn new(p_max: i64, q_max: i64) -> Self {
        SuiteConfig {
            p_max,
            q_max,
            nu_cap: 1500,
            witness_d1_max: 2000,
            semiregular_p_max: 31,
            covering_ns: vec![15, 21, 33, 35, 105, 143],
            sylvester_samples: 100,
            sylvester_max: 500,
            seed: 0x5eed,
            jobs: 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub checks: Vec<CheckReport>,
    pub pairs_scanned: usize,
    pub scan_elapsed: Duration,
    pub class_counts: [usize; 5],
    pub notes: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckReport::passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckReport> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "scanned {} pairs in {:.2?}",
            self.pairs_scanned, self.scan_elapsed
        )?;
        writeln!(
            f,
            "{:<20} {:>9} {:>9} {:>8} {:>10}",
            "check", "tested", "failures", "skipped", "elapsed"
        )?;
        for c in &self.checks {
            writeln!(
                f,
                "{:<20} {:>9} {:>9} {:>8} {:>10.2?}",
                c.name,
                c.tested,
                c.failures.len(),
                c.skipped.len(),
                c.elapsed
            )?;
        }
        for c in &self.checks {
            for fail in c.failures.iter().take(10) {
                writeln!(f, "FAIL {}: {}", c.name, fail.detail)?;
                if let Some(rec) = &fail.record {
                    write!(f, "{rec}")?;
                }
            }
            for skip in c.skipped.iter().take(10) {
                writeln!(f, "skip {}: {skip}", c.name)?;
            }
        }
        for note in &self.notes {
            writeln!(f, "note: {note}")?;
        }
        write!(
            f,
            "{}",
            if self.passed() {
                "all checks passed"
            } else {
                "CHECKS FAILED"
            }
        )
    }
}

pub fn run_suite(p_max: i64, q_max: i64) -> Result<SuiteReport> {
    run_suite_with(&SuiteConfig::new(p_max, q_max))
}

pub fn run_suite_with(cfg: &SuiteConfig) -> Result<SuiteReport> {
    validate_bounds(cfg.p_max, cfg.q_max, cfg.jobs)?;
    let start = Instant::now();
    let records = scan_pairs(
        &ScanOptions::new(cfg.p_max, cfg.q_max)
            .with_oracle(true)
            .with_jobs(cfg.jobs),
    )?;
    let scan_elapsed = start.elapsed();

    let mut class_counts = [0usize; 5];
    for rec in &records {
        class_counts[rec.class.index()] += 1;
    }
    let mut checks = record_checks(&records);
    checks.push(check_white_region()?);
    checks.push(check_twin_gc(cfg.p_max, cfg.jobs)?);
    checks.push(check_constructions(cfg.witness_d1_max, cfg.jobs)?);
    let nu = check_nu_family(cfg.nu_cap, cfg.jobs)?;
    checks.push(nu.formula);
    checks.push(nu.bounds);
    checks.push(check_covering_bounds(&cfg.covering_ns)?);
    checks.push(check_semiregular_primes(cfg.semiregular_p_max)?);
    checks.push(check_sylvester(
        cfg.sylvester_samples,
        cfg.sylvester_max,
        cfg.seed,
    )?);

    let mut notes = vec![format!(
        "class counts: {}",
        PairClass::NAMES
            .iter()
            .zip(class_counts)
            .map(|(n, c)| format!("{n}={c}"))
            .collect::<Vec<_>>()
            .join(" ")
    )];
    if nu.attains_upper.is_empty() {
        notes.push(format!("ν < g for every pair with pq <= {}", cfg.nu_cap));
    } else {
        notes.push(format!("ν = g for pairs {:?}", nu.attains_upper));
    }
    let gc_non_twin: Vec<String> = records
        .iter()
        .filter(|r| r.pair.p > 3 && !r.pair.is_twin() && r.g_oracle() == Some(r.landmarks.g_c))
        .map(|r| r.pair.to_string())
        .collect();
    notes.push(if gc_non_twin.is_empty() {
        "g = gc only for twin pairs (and p = 3) in this range".to_string()
    } else {
        format!("g = gc for non-twin pairs {}", gc_non_twin.join(" "))
    });
    let white: Vec<String> = records
        .iter()
        .filter(|r| matches!(r.class, PairClass::TypeOneLarge { .. }))
        .filter_map(|r| {
            r.g_oracle()
                .map(|g| format!("{}:{}", r.pair, g.cmp(&r.landmarks.g_b) as i8))
        })
        .collect();
    notes.push(format!(
        "white-region pairs (sign of g - gb): {}",
        if white.is_empty() {
            "none".to_string()
        } else {
            white.join(" ")
        }
    ));
    Ok(SuiteReport {
        checks,
        pairs_scanned: records.len(),
        scan_elapsed,
        class_counts,
        notes,
    })
}
