// Wiring diagrams as SVG, written to the temp directory.

use coxeter_clusters::render::{wiring_diagram, WiringMode};
use coxeter_clusters::{AdaptedFrame, CartanData};
use std::path::PathBuf;

pub fn run_example() -> anyhow::Result<Vec<PathBuf>> {
    let frame = AdaptedFrame::build(&CartanData::from_label("A4")?)?;
    let sel = frame.selection(&[1, 4, 7, 9])?;
    let dir = std::env::temp_dir();
    let mut written = Vec::new();
    for (mode, name) in [(WiringMode::Deleted, "deleted"), (WiringMode::Full, "full")] {
        let d = wiring_diagram(&frame, &sel, mode)?;
        print!("{}", d.geometry_listing());
        let path = dir.join(format!("a4_{name}.svg"));
        std::fs::write(&path, d.to_svg())?;
        println!("wrote {}", path.display());
        written.push(path);
    }
    Ok(written)
}

fn main() -> anyhow::Result<()> {
    run_example().map(|_| ())
}
