//! The eleven acceptance criteria, one PASS/FAIL line each.
//!
//! Criterion 7 is expected to fail: the closed form for ν disagrees with
//! exhaustive search on the pairs in `NU_FORMULA_COUNTEREXAMPLES`. The run
//! only succeeds if it fails on exactly that set and every other criterion
//! passes.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use pqfrob::harness::{
    self, ScanOptions, CHECK_BRACKET, CHECK_GA_SHARP, CHECK_GB_LAMBDA_GAP, CHECK_GB_TYPE,
    CHECK_GC_GAP, CHECK_PREDICTION,
};
use pqfrob::PrimePair;

const SCAN_LIMIT: Duration = Duration::from_secs(60);
const CONSTRUCTION_LIMIT: Duration = Duration::from_secs(30);
const NU_LIMIT: Duration = Duration::from_secs(300);

const SCAN_BOUND: i64 = 150;
const TWIN_P_MAX: i64 = 150;
const WITNESS_D1_MAX: i64 = 2000;
const NU_CAP: i64 = 1500;
const COVERING_NS: [i64; 6] = [15, 21, 33, 35, 105, 143];
const SEMIREGULAR_P_MAX: i64 = 31;
const SYLVESTER_SAMPLES: usize = 100;
const SYLVESTER_MAX: i64 = 500;
const SEED: u64 = 0x5eed;

const NU_FORMULA_COUNTEREXAMPLES: [(i64, i64); 25] = [
    (5, 23),
    (5, 43),
    (5, 53),
    (5, 73),
    (5, 83),
    (5, 103),
    (5, 113),
    (5, 163),
    (5, 173),
    (5, 193),
    (5, 223),
    (5, 233),
    (5, 263),
    (5, 283),
    (5, 293),
    (7, 47),
    (7, 61),
    (7, 89),
    (7, 103),
    (7, 131),
    (7, 173),
    (11, 53),
    (11, 97),
    (13, 89),
    (17, 83),
];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn flag_failures(records: &[harness::PairRecord], names: &[&str]) -> (usize, Vec<String>) {
    let mut tested = 0;
    let mut bad = Vec::new();
    for rec in records {
        for &name in names {
            if let Some(ok) = rec.flag(name) {
                tested += 1;
                if !ok {
                    bad.push(format!("{} {name}", rec.pair));
                }
            }
        }
    }
    (tested, bad)
}

fn main() -> ExitCode {
    let mut results: Vec<(u32, Outcome)> = Vec::new();

    let start = Instant::now();
    let records = harness::scan_pairs(&ScanOptions::new(SCAN_BOUND, SCAN_BOUND).with_oracle(true))
        .expect("scan");
    let scan_time = start.elapsed();
    let oracle_missing = records.iter().filter(|r| r.oracle.is_none()).count();

    let (tested, bad) = flag_failures(&records, &[CHECK_BRACKET, CHECK_PREDICTION]);
    results.push((
        1,
        outcome(
            bad.is_empty() && oracle_missing == 0 && scan_time < SCAN_LIMIT,
            format!(
                "{} pairs, {tested} checks, {} failures, {oracle_missing} without oracle, {scan_time:.2?} (limit {SCAN_LIMIT:?})",
                records.len(),
                bad.len()
            ),
        ),
    ));

    let (tested, bad) = flag_failures(&records, &[CHECK_GA_SHARP]);
    results.push((
        2,
        outcome(
            bad.is_empty() && tested == records.len(),
            format!("{tested} pairs, {} failures", bad.len()),
        ),
    ));

    let white = harness::check_white_region().expect("white region");
    let g_of = |p, q| {
        harness::pair_record(PrimePair::new(p, q).unwrap(), true, None, i64::MAX)
            .unwrap()
            .g_oracle()
            .unwrap()
    };
    let (g1, g2) = (g_of(11, 17), g_of(29, 103));
    results.push((
        3,
        outcome(
            white.passed() && white.tested == 2 && g1 < 1035 && g2 > 58263,
            format!("g(11,17) = {g1} < 1035, g(29,103) = {g2} > 58263"),
        ),
    ));

    let twins = harness::check_twin_gc(TWIN_P_MAX, 1).expect("twins");
    results.push((
        4,
        outcome(
            twins.passed() && twins.tested == 12,
            format!(
                "{} twin pairs, {} failures",
                twins.tested,
                twins.failures.len()
            ),
        ),
    ));

    let (tested, bad) = flag_failures(
        &records,
        &[CHECK_GB_TYPE, CHECK_GB_LAMBDA_GAP, CHECK_GC_GAP],
    );
    results.push((
        5,
        outcome(
            bad.is_empty(),
            format!("{tested} checks, {} failures", bad.len()),
        ),
    ));

    let cons = harness::check_constructions(WITNESS_D1_MAX, 1).expect("constructions");
    results.push((
        6,
        outcome(
            cons.passed() && cons.elapsed < CONSTRUCTION_LIMIT,
            format!(
                "{} targets, {} failures, {:.2?} (limit {CONSTRUCTION_LIMIT:?})",
                cons.tested,
                cons.failures.len(),
                cons.elapsed
            ),
        ),
    ));

    let nu = harness::check_nu_family(NU_CAP, 1).expect("nu family");
    let nu_bad: Vec<(i64, i64)> = nu
        .formula
        .failures
        .iter()
        .filter_map(|f| f.record.as_ref())
        .map(|r| (r.pair.p, r.pair.q))
        .collect();
    let anchors_ok = [(5, 17, 215), (5, 7, 37), (11, 13, 574)]
        .iter()
        .all(|&(p, q, v)| {
            let inst = pqfrob::CoveringInstance::new(p * q).unwrap();
            !nu_bad.contains(&(p, q))
                && pqfrob::covering::nu_cyclic_bruteforce(&inst)
                    .unwrap()
                    .value()
                    == Some(v)
        });
    results.push((
        7,
        outcome(
            nu.formula.passed() && anchors_ok && nu.formula.elapsed < NU_LIMIT,
            format!(
                "{} formula pairs, {} disagree {:?}, anchors (5,17)=215 (5,7)=37 (11,13)=574 {}, {:.2?} (limit {NU_LIMIT:?})",
                nu.formula.tested,
                nu_bad.len(),
                nu_bad,
                if anchors_ok { "ok" } else { "wrong" },
                nu.formula.elapsed
            ),
        ),
    ));

    let cov = harness::check_covering_bounds(&COVERING_NS).expect("covering");
    results.push((
        8,
        outcome(
            cov.passed() && cov.tested == COVERING_NS.len(),
            format!("{} degrees, {} failures", cov.tested, cov.failures.len()),
        ),
    ));

    let semi = harness::check_semiregular_primes(SEMIREGULAR_P_MAX).expect("semiregular");
    results.push((
        9,
        outcome(
            semi.passed() && semi.tested == 20,
            format!(
                "{} checks over 10 primes, {} failures",
                semi.tested,
                semi.failures.len()
            ),
        ),
    ));

    let syl = harness::check_sylvester(SYLVESTER_SAMPLES, SYLVESTER_MAX, SEED).expect("sylvester");
    results.push((
        10,
        outcome(
            syl.passed() && syl.tested == SYLVESTER_SAMPLES,
            format!("{} pairs, {} failures", syl.tested, syl.failures.len()),
        ),
    ));

    let csv_for = |jobs| {
        let opts = ScanOptions::new(SCAN_BOUND, SCAN_BOUND)
            .with_oracle(true)
            .with_nu_cap(Some(NU_CAP))
            .with_jobs(jobs);
        harness::records_to_csv(&harness::scan_pairs(&opts).unwrap()).unwrap()
    };
    let (a, b, c) = (csv_for(1), csv_for(4), csv_for(4));
    results.push((
        11,
        outcome(
            a == b && b == c,
            format!("{} bytes, jobs=1 vs jobs=4 vs jobs=4", a.len()),
        ),
    ));

    let mut unexpected = false;
    for (n, o) in &results {
        let known_red = *n == 7;
        let verdict = if o.pass { "PASS" } else { "FAIL" };
        println!("criterion {n:>2}: {verdict}  {}", o.detail);
        if known_red {
            if o.pass || nu_bad != NU_FORMULA_COUNTEREXAMPLES {
                println!("criterion  7: counterexample set changed");
                unexpected = true;
            }
        } else if !o.pass {
            unexpected = true;
        }
    }
    if unexpected {
        ExitCode::FAILURE
    } else {
        println!("criterion 7 fails on the pinned counterexample set; all others pass");
        ExitCode::SUCCESS
    }
}
