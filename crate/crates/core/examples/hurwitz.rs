// Braid moves on reflection factorizations and the Hurwitz orbit.

use coxeter_clusters::braid::{enumerate_factorizations, hurwitz_orbit};
use coxeter_clusters::{BraidMove, CartanData, Factorization, OrbitOptions};

pub fn run_example() -> anyhow::Result<()> {
    let cd = CartanData::from_label("A3")?;
    let base = Factorization::simple_reversed(&cd);
    let moved = base.apply_word(&[BraidMove::Sigma(1), BraidMove::SigmaInv(2)])?;
    println!("{base} -> {moved}");

    for label in ["A3", "B3", "D4"] {
        let cd = CartanData::from_label(label)?;
        let base = Factorization::simple_reversed(&cd);
        let report = hurwitz_orbit(&base, OrbitOptions::default())?;
        let all = enumerate_factorizations(&cd, base.product(), cd.rank())?;
        println!(
            "{label}: orbit {} of {} factorizations, transitive {:?}",
            report.orbit_size,
            all.len(),
            report.transitive
        );
    }

    // infinite type needs a bound
    let kr = CartanData::from_quiver(2, &[(2, 1, 2)])?;
    let opts = OrbitOptions {
        depth_limit: Some(4),
        ..OrbitOptions::default()
    };
    let report = hurwitz_orbit(&Factorization::simple_reversed(&kr), opts)?;
    println!("Kronecker, depth 4: {} factorizations", report.orbit_size);
    Ok(())
}

fn main() -> anyhow::Result<()> {
    run_example()
}
