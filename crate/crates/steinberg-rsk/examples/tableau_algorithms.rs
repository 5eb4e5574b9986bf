//! Jeu-de-taquin rectification and evacuation on row-standard tableaux
//! (strictly increasing rows, weakly increasing columns), shown through
//! their filling views.
//!
//! Run with: cargo run --example tableau_algorithms

use steinberg_rsk::tableau::{enumerate_syt, RowStandardTableau};
use steinberg_rsk::Partition;

fn show(label: &str, t: &RowStandardTableau) {
    println!("{label}: chain {t}, content {}", t.content());
    for row in t.to_filling() {
        let cells: Vec<String> = row.iter().map(|l| l.to_string()).collect();
        println!("    {}", cells.join(" "));
    }
}

fn main() -> steinberg_rsk::Result<()> {
    let t = RowStandardTableau::from_parts(&[&[1, 1], &[2, 1], &[2, 2]])?;
    show("skew source", &t);
    show("rectified past step 1", &t.rectify(1)?);

    let u = RowStandardTableau::from_parts(&[&[1], &[1, 1], &[2, 2]])?;
    show("before evacuation", &u);
    let e = u.evacuate()?;
    show("after evacuation", &e);
    assert_eq!(e.evacuate()?, u, "evacuation is an involution");

    // evacuation permutes the standard tableaux of each shape
    let shape = Partition::new(vec![3, 2])?;
    println!("evacuation on the {} standard tableaux of shape {shape}:", shape.count_syt()?);
    for t in enumerate_syt(&shape) {
        let e = t.evacuate()?;
        let fixed = if e == t { "  (fixed)" } else { "" };
        println!("    {t} -> {e}{fixed}");
    }
    Ok(())
}
