//! One pass through the linear-algebra oracle: sample a generic point over
//! an orbit, inspect its conormal space, and read off the certificate that
//! the combinatorial map must reproduce.
//!
//! Run with: cargo run --example oracle_walkthrough

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use steinberg_rsk::correspondence::{forward, PartialPermutation};
use steinberg_rsk::oracle::{
    conormal_basis, generic_conormal_sample, orbit_of_matrix, sample_orbit_point,
};
use steinberg_rsk::rsk::VariantRsk;

fn main() -> steinberg_rsk::Result<()> {
    let mut rsk = VariantRsk::new()?;
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let prime = rsk.prime();
    let t = PartialPermutation::new(2, 2, vec![(1, 2)])?;
    println!("orbit: {t} over the field with {prime} elements");

    let x = sample_orbit_point(&t, prime, &mut rng)?;
    println!("sampled x =\n{x:?}");
    println!("orbit recovered from rank conditions: {}", orbit_of_matrix(&x)?);
    println!("conormal space dimension: {}", conormal_basis(&x).len());

    let sample = generic_conormal_sample(&t, prime, 5, &mut rng)?;
    println!("generic covector y =\n{:?}", sample.point.y());
    println!("certificate (agreed across 5 trials):");
    println!("  diagram:        {}", sample.diagram);
    println!("  first tableau:  {}", sample.q_tab);
    println!("  second tableau: {}", sample.p_tab);

    let triple = forward(&t, &mut rsk, &mut rng)?;
    assert_eq!(triple.diagram, sample.diagram);
    assert_eq!(triple.q_tab, sample.q_tab);
    assert_eq!(triple.p_tab, sample.p_tab);
    println!("combinatorial forward map agrees with the oracle");
    Ok(())
}
