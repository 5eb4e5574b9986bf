//! The closure order on signed Young diagrams of one signature, printed as
//! the cover relations of its Hasse diagram, with the admissible diagrams
//! marked (they are the maximal elements of their plus/minus fibres).
//!
//! Run with: cargo run --example closure_poset

use steinberg_rsk::signed::{enumerate_syd, Signature};

fn main() -> steinberg_rsk::Result<()> {
    let sig = Signature { q: 2, p: 2 };
    let mut nodes = enumerate_syd(sig);
    nodes.sort_by_key(|d| d.render());
    println!("signature (q={}, p={}): {} diagrams", sig.q, sig.p, nodes.len());
    for (i, d) in nodes.iter().enumerate() {
        let tag = if d.is_admissible() { "admissible" } else { "" };
        println!("  [{i:>2}] {d:<28} dim {}  {tag}", d.orbit_dim());
    }
    println!("cover relations (lower -> upper):");
    let n = nodes.len();
    let mut leq = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            leq[i][j] = nodes[i].closure_leq(&nodes[j])?;
        }
    }
    for i in 0..n {
        for j in 0..n {
            if i != j && leq[i][j] {
                let covered = (0..n).any(|k| k != i && k != j && leq[i][k] && leq[k][j]);
                if !covered {
                    println!("  {} -> {}", nodes[i], nodes[j]);
                }
            }
        }
    }
    Ok(())
}
