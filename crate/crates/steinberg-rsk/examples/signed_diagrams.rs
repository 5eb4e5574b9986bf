//! Signed Young diagrams of a signature: shapes, plus/minus shapes, the
//! shift-operator Jordan type, admissibility, and duality.
//!
//! Run with: cargo run --example signed_diagrams

use steinberg_rsk::signed::{enumerate_asyd, enumerate_syd, Signature};

fn main() {
    let sig = Signature { q: 2, p: 2 };
    println!(
        "signature (q={}, p={}): {} diagrams, {} admissible",
        sig.q,
        sig.p,
        enumerate_syd(sig).len(),
        enumerate_asyd(sig).len()
    );
    for d in enumerate_syd(sig) {
        println!(
            "  {:<26} shape {:<10} plus {:<8} minus {:<8} shift {:<12} admissible {:<5} dual {}",
            d.to_string(),
            d.shape().to_string(),
            d.plus_shape().to_string(),
            d.minus_shape().to_string(),
            d.jordan_shape().to_string(),
            d.is_admissible(),
            d.dual()
        );
    }
}
