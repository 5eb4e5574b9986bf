//! Projective duality on partial permutations: the triple (diagram, Q, P)
//! maps to (flipped diagram, P, Q), and the same answer falls out of the
//! orbit of the generic covector.
//!
//! Run with: cargo run --example duality

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use steinberg_rsk::correspondence::{dual, enumerate_pp};
use steinberg_rsk::oracle::dual_orbit_check;
use steinberg_rsk::rsk::VariantRsk;

fn main() -> steinberg_rsk::Result<()> {
    let mut rsk = VariantRsk::new()?;
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for t in enumerate_pp(2, 2) {
        let combinatorial = dual(&t, &mut rsk, &mut rng)?;
        let geometric = dual_orbit_check(&t, rsk.prime(), rsk.trials(), &mut rng)?;
        assert_eq!(combinatorial, geometric);
        let marker = if combinatorial == t { " (self-dual)" } else { "" };
        println!("{t}  <->  {combinatorial}{marker}");
        let back = dual(&combinatorial, &mut rsk, &mut rng)?;
        assert_eq!(back, t, "duality must be an involution");
    }
    Ok(())
}
