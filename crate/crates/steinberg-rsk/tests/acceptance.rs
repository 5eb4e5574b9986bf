//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line. Every bound, seed, and tolerance is pinned here; all comparisons
//! are exact. Run with `cargo test --test acceptance -- --nocapture` to see
//! the lines.

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use steinberg_rsk::verify::{self, VerifyConfig};

fn report(criterion: &str, started: Instant, outcome: steinberg_rsk::Result<String>) {
    match outcome {
        Ok(detail) => {
            println!(
                "{criterion}: PASS ({:.2}s) - {detail}",
                started.elapsed().as_secs_f64()
            );
        }
        Err(e) => {
            println!(
                "{criterion}: FAIL ({:.2}s) - {e}",
                started.elapsed().as_secs_f64()
            );
            panic!("{criterion} failed: {e}");
        }
    }
}

fn cfg(pmax: usize, qmax: usize, seed: u64) -> VerifyConfig {
    VerifyConfig {
        pmax,
        qmax,
        seed,
        trials: 5,
    }
}

#[test]
fn criterion_1_census_identity() {
    let t = Instant::now();
    report(
        "criterion 1 (census identity, p,q <= 4)",
        t,
        verify::census_identity(&cfg(4, 4, 101)),
    );
}

#[test]
fn criterion_2_round_trip() {
    let t = Instant::now();
    // the round-trip check calibrates its engine first, so the run uses
    // whatever fast path calibration certifies (none survives; the oracle
    // plus memoization stays within budget)
    report(
        "criterion 2 (round trips, exhaustive p,q <= 3 plus 200 random 4x4)",
        t,
        verify::round_trip(&cfg(4, 4, 102)),
    );
}

#[test]
fn criterion_3_oracle_agreement() {
    let t = Instant::now();
    report(
        "criterion 3 (oracle agreement, p,q <= 3, 5 trials)",
        t,
        verify::oracle_agreement(&cfg(3, 3, 103)),
    );
}

#[test]
fn criterion_4_admissibility_equivalences() {
    let t = Instant::now();
    report(
        "criterion 4 (admissibility equivalences, p,q <= 4)",
        t,
        verify::admissibility_equivalences(&cfg(4, 4, 104)),
    );
}

#[test]
fn criterion_5_module_lemmas() {
    let t = Instant::now();
    report(
        "criterion 5 (module Jordan types k <= 9, 500 random direct sums)",
        t,
        verify::module_lemmas(&cfg(3, 3, 105)),
    );
}

#[test]
fn criterion_6_duality() {
    let t = Instant::now();
    report(
        "criterion 6 (duality involution and orbit dual, p,q <= 3)",
        t,
        verify::duality(&cfg(3, 3, 106)),
    );
}

#[test]
fn criterion_7_bordered_consistency() {
    let t = Instant::now();
    report(
        "criterion 7 (bordered relative position, p,q <= 3)",
        t,
        verify::bordered_schubert_consistency(&cfg(3, 3, 107)),
    );
}

#[test]
fn criterion_8_tableau_engine() {
    let t = Instant::now();
    report(
        "criterion 8 (evacuation involution <= 6 boxes, certified slides, p,q <= 3)",
        t,
        verify::tableau_engine(&cfg(3, 3, 108)),
    );
}

#[test]
fn criterion_9_poset_lemmas() {
    let t = Instant::now();
    report(
        "criterion 9 (poset lemmas, p,q <= 4)",
        t,
        verify::poset_lemmas(&cfg(4, 4, 109)),
    );
}

/// The calibration contract itself: the report is exhaustive over its
/// domain, every survivor reproduces the oracle, and the fast path is
/// enabled only for a singleton. On this family no candidate survives past
/// the degenerate domain, so the fast path stays off.
#[test]
fn calibration_contract() {
    let t = Instant::now();
    let run = || -> steinberg_rsk::Result<String> {
        let mut rng = ChaCha8Rng::seed_from_u64(110);
        let mut rsk = steinberg_rsk::rsk::VariantRsk::new()?;
        let report = rsk.calibrate(3, &mut rng)?;
        if report.fast_path.is_some() && report.survivors.len() != 1 {
            return Err(steinberg_rsk::Error::Inconsistent(
                "fast path enabled without a singleton".into(),
            ));
        }
        Ok(format!(
            "{} instances, {} survivors, fast path {:?}",
            report.instances_tested,
            report.survivors.len(),
            report.fast_path
        ))
    };
    report("calibration contract (domain <= 3)", t, run());
}
