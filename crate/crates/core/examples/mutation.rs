// Cluster mutation and the exchange graph.

use coxeter_clusters::{algebraic_mutate, exchange_graph, AdaptedFrame, CartanData};

pub fn run_example() -> anyhow::Result<()> {
    let frame = AdaptedFrame::build(&CartanData::from_label("A4")?)?;
    let start = frame.initial_selection();
    for k in 1..=frame.rank() {
        let step = algebraic_mutate(&frame, &start, k)?;
        println!(
            "{} at slot {k}: drop {} take {} ({:?} scan) -> {}",
            step.from, step.removed, step.inserted, step.side, step.to
        );
    }

    for label in ["A3", "D4", "B3", "G2"] {
        let frame = AdaptedFrame::build(&CartanData::from_label(label)?)?;
        let g = exchange_graph(&frame)?;
        println!(
            "{label}: {} clusters, {} edges, regular {}",
            g.vertices.len(),
            g.edges.len(),
            g.is_regular(frame.rank())
        );
    }
    Ok(())
}

fn main() -> anyhow::Result<()> {
    run_example()
}
