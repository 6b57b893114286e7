// Prefix tests for real roots, with witnesses and the modules they generate.

use coxeter_clusters::{
    prefix_set, prefix_test, prefix_to_generators, AdaptedFrame, CartanData, Factorization,
    RepData, Root,
};

pub fn run_example() -> anyhow::Result<()> {
    let kr = CartanData::from_quiver(2, &[(2, 1, 2)])?;
    for v in [[1, 0], [2, 1], [3, 2], [4, 5]] {
        let verdict = prefix_test(&kr, &Root::new(v), None)?;
        let witness = verdict
            .witness_roots
            .map(|w| Factorization::new(&kr, w).map(|f| f.to_string()))
            .transpose()?;
        println!(
            "{}: {:?} {}",
            Root::new(v),
            verdict.status,
            witness.unwrap_or_default()
        );
    }
    if let Err(e) = prefix_test(&kr, &Root::new([1, 1]), None) {
        println!("(1,1): {e}");
    }

    let cd = CartanData::from_label("A3")?;
    println!("A3 has {} prefixes of C", prefix_set(&cd)?.len());
    let frame = AdaptedFrame::build(&cd)?;
    let rep = RepData::new(&frame)?;
    let beta = Root::new([1, 1, 0]);
    let witness = prefix_test(&cd, &beta, None)?
        .witness_roots
        .expect("finite type always has one");
    let witness = Factorization::new(&cd, witness)?;
    let mods = prefix_to_generators(&rep, &witness, 2)?;
    let dims: Vec<String> = mods.iter().map(|&t| frame.alpha(t).to_string()).collect();
    println!("generators for the first two entries: {}", dims.join(" "));
    Ok(())
}

fn main() -> anyhow::Result<()> {
    run_example()
}
