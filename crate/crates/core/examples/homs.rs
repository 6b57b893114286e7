// Knitting the AR quiver and reading Hom/Ext dimensions from it.

use coxeter_clusters::{AdaptedFrame, CartanData, RepData};

pub fn run_example() -> anyhow::Result<()> {
    let frame = AdaptedFrame::build(&CartanData::from_label("D4")?)?;
    let rep = RepData::new(&frame)?;
    let q = rep.quiver();
    for m in q.modules() {
        let tau = q.tau(m.position).map(|u| q.module(u).dim.to_string());
        println!(
            "M{:<2} dim {} tau {}",
            m.position,
            m.dim,
            tau.as_deref().unwrap_or("-")
        );
    }

    // the Euler form is hom - ext
    let (x, y) = (q.projective(1), q.projective(4));
    let (dx, dy) = (&q.module(x).dim, &q.module(y).dim);
    println!(
        "hom {} ext {} euler {}",
        rep.homs().hom(x, y),
        rep.homs().ext(x, y),
        rep.euler_form(dx, dy)
    );

    let sel = frame.initial_selection();
    println!(
        "{sel}: exceptional {} cluster-tilting {}",
        rep.is_exceptional(&sel),
        rep.is_cluster_tilting(&sel)
    );
    Ok(())
}

fn main() -> anyhow::Result<()> {
    run_example()
}
