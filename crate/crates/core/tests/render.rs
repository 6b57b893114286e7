mod common;

use common::frame;
use coxeter_clusters::render::{
    ar_quiver_dot, exchange_graph_dot, wiring_diagram, word_quiver_dot, WiringMode,
};
use coxeter_clusters::{algebraic_mutate, exchange_graph, ARQuiver};

#[test]
fn golden_geometry() {
    let f = frame("A4");
    let sel = f.selection(&[1, 4, 7, 9]).unwrap();
    for (mode, golden) in [
        (
            WiringMode::Deleted,
            include_str!("golden/a4_deleted_1_4_7_9.txt"),
        ),
        (WiringMode::Full, include_str!("golden/a4_full_1_4_7_9.txt")),
    ] {
        let d = wiring_diagram(&f, &sel, mode).unwrap();
        assert_eq!(d.geometry_listing(), golden, "{mode:?}");
    }
}

#[test]
fn every_cluster_draws_a_reduced_diagram() {
    for label in ["A2", "A3", "A4"] {
        let f = frame(label);
        for sel in f.all_selections() {
            let d = wiring_diagram(&f, &sel, WiringMode::Deleted).unwrap();
            assert_eq!(d.crossing_word(), f.deleted_word(&sel));
            assert_eq!(d.is_reduced(), f.is_reduced_w0(&sel), "{label} {sel}");
            if d.is_reduced() {
                let rev: Vec<usize> = (1..=d.strands).rev().collect();
                assert_eq!(d.left_labels, rev);
            }
        }
    }
}

#[test]
fn mutation_moves_one_crossing() {
    let f = frame("A4");
    let g = exchange_graph(&f).unwrap();
    for v in &g.vertices {
        let before = wiring_diagram(&f, v, WiringMode::Deleted).unwrap();
        for k in 1..=4 {
            let step = algebraic_mutate(&f, v, k).unwrap();
            let after = wiring_diagram(&f, &step.to, WiringMode::Deleted).unwrap();
            let mut expected = vec![step.removed, step.inserted];
            expected.sort_unstable();
            assert_eq!(before.differing_positions(&after), expected);
        }
    }
}

#[test]
fn full_mode_crosses_everything() {
    let f = frame("A3");
    let sel = f.initial_selection();
    let d = wiring_diagram(&f, &sel, WiringMode::Full).unwrap();
    assert_eq!(d.crossing_count(), f.len());
    assert_eq!(d.crossing_word(), f.j_sequence().clone());
    assert_eq!(d.columns.iter().filter(|c| c.deleted).count(), 3);
}

#[test]
fn svg_is_well_formed() {
    let f = frame("A4");
    let sel = f.selection(&[1, 4, 7, 9]).unwrap();
    let svg = wiring_diagram(&f, &sel, WiringMode::Full).unwrap().to_svg();
    assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
    assert_eq!(svg.matches("<path").count(), 5);
    assert_eq!(svg.matches("<circle").count(), 4);
}

#[test]
fn dot_outputs() {
    let f = frame("A4");
    let sel = f.selection(&[1, 4, 7, 9]).unwrap();
    let q = f.ar_quiver_from_word(&sel);
    let dot = word_quiver_dot(&q);
    assert!(dot.starts_with("digraph"));
    assert!(dot.contains("n13 -> n2;"));
    let ar = ARQuiver::knit(&f).unwrap();
    assert!(ar_quiver_dot(&ar).starts_with("digraph"));
    let g = exchange_graph(&f).unwrap();
    let ex = exchange_graph_dot(&g);
    assert!(ex.starts_with("graph") || ex.starts_with("digraph"));
}
