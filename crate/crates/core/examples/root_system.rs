// Positive roots, the longest element and the projective roots of a Dynkin type.
//
// `cargo run --example root_system -- E6`

use anyhow::Context;
use coxeter_clusters::CartanData;

pub fn run_example(label: &str) -> anyhow::Result<()> {
    let cd = CartanData::from_label(label).with_context(|| format!("type {label}"))?;
    let roots = cd.positive_roots()?;
    println!(
        "{label}: rank {}, {} positive roots",
        cd.rank(),
        roots.len()
    );
    let highest = roots.iter().max_by_key(|r| r.height()).expect("nonempty");
    println!("highest root {highest}");

    let w0 = cd.longest_element()?;
    println!("w0 = {} (length {})", cd.reduced_word(&w0), cd.length(&w0));

    let c = cd.coxeter_element();
    println!("C = {}", cd.reduced_word(&c));
    for (i, p) in cd.projective_roots().iter().enumerate() {
        println!(
            "  p{} = {p}, C^-1 p{} = {}",
            i + 1,
            i + 1,
            cd.coxeter_inverse().apply(p)
        );
    }
    Ok(())
}

fn main() -> anyhow::Result<()> {
    let label = std::env::args().nth(1).unwrap_or_else(|| "D4".into());
    run_example(&label)
}
