//! The census identity: partial permutations of size p x q are counted by
//! pairs of standard tableaux over admissible signed diagrams of signature
//! (q, p).
//!
//! Run with: cargo run --example census

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use steinberg_rsk::correspondence::census;
use steinberg_rsk::rsk::VariantRsk;

fn main() -> steinberg_rsk::Result<()> {
    let mut rsk = VariantRsk::new()?;
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for p in 1..=3 {
        for q in 1..=3 {
            let report = census(p, q, &mut rsk, &mut rng)?;
            println!(
                "p={p} q={q}: {} partial permutations over {} admissible diagrams (identity: {})",
                report.pp_count,
                report.per_diagram.len(),
                report.identity_holds
            );
            for line in &report.per_diagram {
                println!(
                    "    {:<24} {} triples",
                    line.diagram.to_string(),
                    line.observed
                );
            }
        }
    }
    Ok(())
}
