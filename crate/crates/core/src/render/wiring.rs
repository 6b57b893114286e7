//! Wiring diagrams for type `A_n`: `n + 1` strands, one column per letter.

use crate::error::{Error, Result};
use crate::frame::{AdaptedFrame, Selection};
use crate::group::Word;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt::Write;

/// How deleted letters are drawn.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum WiringMode {
    /// Deleted letters become tangencies; the strands cross only at kept letters.
    Deleted,
    /// Every letter is a crossing; deleted ones are only marked.
    Full,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WiringColumn {
    pub position: usize,
    pub letter: usize,
    /// Strands at slots `level` and `level + 1` meet here (slots count from the bottom).
    pub level: usize,
    pub crossing: bool,
    pub deleted: bool,
    pub circled: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WiringDiagram {
    pub strands: usize,
    pub mode: WiringMode,
    pub columns: Vec<WiringColumn>,
    /// Strand labels from bottom to top at the left margin.
    pub left_labels: Vec<usize>,
    /// Strand labels from bottom to top at the right margin; always `1, …, n + 1`.
    pub right_labels: Vec<usize>,
}

/// Builds the diagram of the word for `w₁` with the deletions of `sel`.
///
/// When `sel` is a cluster its projective positions are circled, reduced
/// modulo `ν + n` when they fall in the next block.
pub fn wiring_diagram(
    frame: &AdaptedFrame,
    sel: &Selection,
    mode: WiringMode,
) -> Result<WiringDiagram> {
    let order = frame.cartan().path_order().ok_or(Error::NotTypeA)?;
    let n = frame.rank();
    let mut level = vec![0; n + 1];
    for (k, &v) in order.iter().enumerate() {
        level[v] = k + 1;
    }
    let len = frame.len();
    let circled: Vec<usize> = if frame.is_reduced_w0(sel) {
        frame
            .projective_positions(sel)
            .into_iter()
            .map(|(_, p)| (p - 1) % len + 1)
            .collect()
    } else {
        Vec::new()
    };
    let columns: Vec<WiringColumn> = (1..=len)
        .map(|t| {
            let deleted = sel.contains(t);
            WiringColumn {
                position: t,
                letter: frame.letter(t),
                level: level[frame.letter(t)],
                crossing: mode == WiringMode::Full || !deleted,
                deleted,
                circled: circled.contains(&t),
            }
        })
        .collect();
    // trace the right-hand labels back through the crossings
    let mut left: Vec<usize> = (1..=n + 1).collect();
    for c in columns.iter().rev().filter(|c| c.crossing) {
        left.swap(c.level - 1, c.level);
    }
    Ok(WiringDiagram {
        strands: n + 1,
        mode,
        columns,
        left_labels: left,
        right_labels: (1..=n + 1).collect(),
    })
}

impl WiringDiagram {
    /// Letters of the crossing columns, left to right.
    pub fn crossing_word(&self) -> Word {
        Word(
            self.columns
                .iter()
                .filter(|c| c.crossing)
                .map(|c| c.letter)
                .collect(),
        )
    }

    pub fn crossing_count(&self) -> usize {
        self.columns.iter().filter(|c| c.crossing).count()
    }

    /// How often each pair of strands (by right-hand label) crosses.
    pub fn pair_crossings(&self) -> BTreeMap<(usize, usize), usize> {
        let mut slots = self.left_labels.clone();
        let mut out = BTreeMap::new();
        for c in self.columns.iter().filter(|c| c.crossing) {
            let (a, b) = (slots[c.level - 1], slots[c.level]);
            *out.entry((a.min(b), a.max(b))).or_insert(0) += 1;
            slots.swap(c.level - 1, c.level);
        }
        out
    }

    /// Whether every pair of strands crosses exactly once.
    pub fn is_reduced(&self) -> bool {
        let m = self.strands;
        let pairs = self.pair_crossings();
        pairs.len() == m * (m - 1) / 2 && pairs.values().all(|&c| c == 1)
    }

    /// Positions whose crossing status differs between two diagrams.
    pub fn differing_positions(&self, other: &WiringDiagram) -> Vec<usize> {
        self.columns
            .iter()
            .zip(&other.columns)
            .filter(|(a, b)| a.crossing != b.crossing)
            .map(|(a, _)| a.position)
            .collect()
    }

    /// A stable text form of the geometry, one line per column.
    pub fn geometry_listing(&self) -> String {
        let mut s = String::new();
        let labels = |v: &[usize]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        let _ = writeln!(s, "strands {}", self.strands);
        let _ = writeln!(s, "left {}", labels(&self.left_labels));
        for c in &self.columns {
            let _ = write!(
                s,
                "{} {} {}",
                c.position,
                c.level,
                if c.crossing { "cross" } else { "tangent" }
            );
            if c.deleted {
                s.push_str(" deleted");
            }
            if c.circled {
                s.push_str(" circle");
            }
            s.push('\n');
        }
        let _ = writeln!(s, "right {}", labels(&self.right_labels));
        s
    }

    /// SVG 1.1 rendering; strands are cubic Bézier paths on a unit grid.
    pub fn to_svg(&self) -> String {
        const UNIT: f64 = 40.0;
        const MARGIN: f64 = 40.0;
        let cols = self.columns.len();
        let width = MARGIN * 2.0 + UNIT * cols as f64;
        let height = MARGIN * 2.0 + UNIT * (self.strands - 1) as f64;
        let x = |col: f64| MARGIN + UNIT * col;
        // slot 1 is drawn at the bottom
        let y = |slot: f64| height - MARGIN - UNIT * (slot - 1.0);

        // paths[label] is built column by column
        let mut slots = self.left_labels.clone();
        let mut paths: BTreeMap<usize, String> = BTreeMap::new();
        for (k, &label) in slots.iter().enumerate() {
            paths.insert(label, format!("M {:.1} {:.1}", x(0.0), y(k as f64 + 1.0)));
        }
        for (ci, c) in self.columns.iter().enumerate() {
            let (x0, x1) = (x(ci as f64), x(ci as f64 + 1.0));
            let xm = (x0 + x1) / 2.0;
            for k in 0..self.strands {
                let slot = k + 1;
                let label = slots[k];
                let path = paths.get_mut(&label).unwrap();
                let here = slot == c.level || slot == c.level + 1;
                if !here {
                    let _ = write!(path, " L {:.1} {:.1}", x1, y(slot as f64));
                } else if c.crossing {
                    let to = if slot == c.level { slot + 1 } else { slot - 1 };
                    let (ya, yb) = (y(slot as f64), y(to as f64));
                    let _ = write!(path, " C {xm:.1} {ya:.1} {xm:.1} {yb:.1} {x1:.1} {yb:.1}");
                } else {
                    // touch at the midpoint and turn back
                    let ya = y(slot as f64);
                    let ymid = y(c.level as f64 + 0.5);
                    let xq = (x0 + xm) / 2.0;
                    let xr = (xm + x1) / 2.0;
                    let _ = write!(
                        path,
                        " C {xq:.1} {ya:.1} {xq:.1} {ymid:.1} {xm:.1} {ymid:.1} C {xr:.1} {ymid:.1} {xr:.1} {ya:.1} {x1:.1} {ya:.1}"
                    );
                }
            }
            if c.crossing {
                slots.swap(c.level - 1, c.level);
            }
        }

        let mut s = String::new();
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}">"#
        );
        let _ = writeln!(s, r#"<g fill="none" stroke="black" stroke-width="1.5">"#);
        for (label, d) in &paths {
            let _ = writeln!(s, r#"<path class="strand-{label}" d="{d}"/>"#);
        }
        let _ = writeln!(s, "</g>");
        for (ci, c) in self.columns.iter().enumerate() {
            let cx = x(ci as f64 + 0.5);
            let cy = y(c.level as f64 + 0.5);
            if c.circled {
                let _ = writeln!(
                    s,
                    r#"<circle cx="{cx:.1}" cy="{cy:.1}" r="{:.1}" fill="none" stroke="red"/>"#,
                    UNIT * 0.3
                );
            }
            if c.deleted && c.crossing {
                let _ = writeln!(
                    s,
                    r#"<rect x="{:.1}" y="{:.1}" width="{:.1}" height="{:.1}" fill="none" stroke="gray" stroke-dasharray="3,3"/>"#,
                    cx - UNIT * 0.35,
                    cy - UNIT * 0.35,
                    UNIT * 0.7,
                    UNIT * 0.7
                );
            }
            let _ = writeln!(
                s,
                r#"<text x="{cx:.1}" y="{:.1}" font-size="10" text-anchor="middle">{}</text>"#,
                height - MARGIN / 4.0,
                c.position
            );
        }
        for (k, (l, r)) in self.left_labels.iter().zip(&self.right_labels).enumerate() {
            let yy = y(k as f64 + 1.0) + 4.0;
            let _ = writeln!(
                s,
                r#"<text x="{:.1}" y="{yy:.1}" font-size="12" text-anchor="end">{l}</text>"#,
                MARGIN - 8.0
            );
            let _ = writeln!(
                s,
                r#"<text x="{:.1}" y="{yy:.1}" font-size="12">{r}</text>"#,
                width - MARGIN + 8.0
            );
        }
        s.push_str("</svg>\n");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::CartanData;

    fn a4() -> AdaptedFrame {
        AdaptedFrame::build(&CartanData::from_label("A4").unwrap()).unwrap()
    }

    #[test]
    fn longest_permutation() {
        let f = a4();
        let d = wiring_diagram(&f, &f.initial_selection(), WiringMode::Deleted).unwrap();
        assert_eq!(d.crossing_count(), 10);
        assert!(d.is_reduced());
        assert_eq!(d.left_labels, vec![5, 4, 3, 2, 1]);
        assert_eq!(d.crossing_word(), f.deleted_word(&f.initial_selection()));
    }

    #[test]
    fn full_mode_margins_and_circles() {
        let f = a4();
        let s = f.selection(&[1, 4, 7, 9]).unwrap();
        let d = wiring_diagram(&f, &s, WiringMode::Full).unwrap();
        assert_eq!(d.left_labels, vec![1, 5, 4, 3, 2]);
        let circled: Vec<usize> = d
            .columns
            .iter()
            .filter(|c| c.circled)
            .map(|c| c.position)
            .collect();
        assert_eq!(circled, vec![5, 10, 11, 13]);
        assert!(d.to_svg().starts_with("<svg"));
    }

    #[test]
    fn other_types_rejected() {
        let f = AdaptedFrame::build(&CartanData::from_label("D4").unwrap()).unwrap();
        assert!(matches!(
            wiring_diagram(&f, &f.initial_selection(), WiringMode::Deleted),
            Err(Error::NotTypeA)
        ));
    }
}
