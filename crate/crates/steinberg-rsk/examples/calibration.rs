//! Calibrate the candidate combinatorial rules (classical RSK composed with
//! a matrix symmetry, optional conjugation, optional swap) against the
//! geometric oracle, and report what survives.
//!
//! On this correspondence no candidate reproduces the oracle beyond the
//! degenerate size-1 domain, so the fast path stays disabled and the
//! variant RSK runs oracle-only (memoized).
//!
//! Run with: cargo run --example calibration

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use steinberg_rsk::rsk::VariantRsk;

fn main() -> steinberg_rsk::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for max_size in 0..=3 {
        let mut rsk = VariantRsk::new()?;
        let report = rsk.calibrate(max_size, &mut rng)?;
        println!(
            "domain size <= {max_size}: {} instances tested",
            report.instances_tested
        );
        if report.survivors.is_empty() {
            println!("    no surviving candidates; oracle-only evaluation");
        } else {
            for name in &report.survivors {
                println!("    survivor: {name}");
            }
        }
        match &report.fast_path {
            Some(name) => println!("    fast path enabled: {name}"),
            None => println!("    fast path disabled"),
        }
    }
    Ok(())
}
