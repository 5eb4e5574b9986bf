//! The correspondence in both directions: map a few partial permutations to
//! their (diagram, tableau, tableau) triples and pull them back.
//!
//! Run with: cargo run --example forward_inverse

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use steinberg_rsk::correspondence::{forward, inverse, PartialPermutation};
use steinberg_rsk::rsk::VariantRsk;

fn main() -> steinberg_rsk::Result<()> {
    let mut rsk = VariantRsk::new()?;
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let samples = [
        PartialPermutation::new(2, 2, vec![])?,
        PartialPermutation::new(2, 2, vec![(1, 1), (2, 2)])?,
        PartialPermutation::new(2, 2, vec![(1, 2)])?,
        PartialPermutation::new(3, 3, vec![(1, 2), (3, 1)])?,
        PartialPermutation::new(3, 2, vec![(2, 1)])?,
    ];
    for t in samples {
        let triple = forward(&t, &mut rsk, &mut rng)?;
        println!("{t}");
        println!("  diagram: {}", triple.diagram);
        println!("  first tableau (shape {}): {}", triple.q_tab.shape(), triple.q_tab);
        println!("  second tableau (shape {}): {}", triple.p_tab.shape(), triple.p_tab);
        let back = inverse(&triple, &mut rsk, &mut rng)?;
        assert_eq!(back, t);
        println!("  inverse recovers it: {back}");
        println!();
    }
    Ok(())
}
