// The adapted word for `w1 = C w0`, its roots, and a deleted word.

use coxeter_clusters::{AdaptedFrame, CartanData};

pub fn run_example() -> anyhow::Result<()> {
    let cd = CartanData::from_label("A4")?;
    let frame = AdaptedFrame::build(&cd)?;
    println!("j   = {}", frame.j_sequence());
    println!("w0  = {}", frame.w0_word());
    println!("rho = {:?}", frame.rho());
    for t in 1..=frame.len() {
        println!(
            "  t={t:2} letter {} root {}",
            frame.letter(t),
            frame.alpha(t)
        );
    }

    let sel = frame.selection(&[1, 4, 7, 9])?;
    println!("deleting {sel}: {}", frame.deleted_word(&sel));
    println!("reduced word for w0: {}", frame.is_reduced_w0(&sel));
    let lw = frame.long_word(&sel, 2);
    let shown: Vec<String> = (1..=lw.len())
        .map(|p| {
            if lw.is_deleted(p) {
                format!("[{}]", lw.letter(p))
            } else {
                lw.letter(p).to_string()
            }
        })
        .collect();
    println!(
        "two periods, deleted letters bracketed: {}",
        shown.join(" ")
    );
    Ok(())
}

fn main() -> anyhow::Result<()> {
    run_example()
}
