use crate::frame::LeveledQuiver;
use crate::mutation::ExchangeGraph;
use crate::rep::ARQuiver;
use std::collections::BTreeMap;
use std::fmt::Write;

/// The quiver read off a deleted word; nodes on one level share a rank.
pub fn word_quiver_dot(q: &LeveledQuiver) -> String {
    let mut s = String::from("digraph word_quiver {\n  rankdir=LR;\n");
    let mut levels: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(t, l) in &q.vertices {
        levels.entry(l).or_default().push(t);
        let _ = writeln!(s, "  n{t} [label=\"{t}\"];");
    }
    for (l, ts) in &levels {
        let names: Vec<String> = ts.iter().map(|t| format!("n{t}")).collect();
        let _ = writeln!(
            s,
            "  {{ rank=same; /* level {l} */ {}; }}",
            names.join("; ")
        );
    }
    for &(a, b) in &q.arrows {
        let _ = writeln!(s, "  n{a} -> n{b};");
    }
    s.push_str("}\n");
    s
}

/// The knitted AR quiver with dimension vectors as labels and `τ` dashed.
pub fn ar_quiver_dot(q: &ARQuiver) -> String {
    let mut s = String::from("digraph ar_quiver {\n  rankdir=LR;\n");
    for m in q.modules() {
        let shape = if m.projective.is_some() {
            "box"
        } else {
            "ellipse"
        };
        let _ = writeln!(s, "  m{} [label=\"{}\", shape={shape}];", m.position, m.dim);
    }
    for &(a, b) in q.arrows() {
        let _ = writeln!(s, "  m{a} -> m{b};");
    }
    for m in q.modules() {
        if let Some(t) = q.tau(m.position) {
            let _ = writeln!(
                s,
                "  m{} -> m{t} [style=dashed, constraint=false];",
                m.position
            );
        }
    }
    s.push_str("}\n");
    s
}

pub fn exchange_graph_dot(g: &ExchangeGraph) -> String {
    let mut s = String::from("graph exchange {\n");
    for (i, v) in g.vertices.iter().enumerate() {
        let _ = writeln!(s, "  v{i} [label=\"{v}\"];");
    }
    for e in &g.edges {
        let _ = writeln!(s, "  v{} -- v{} [label=\"{}\"];", e.from, e.to, e.k);
    }
    s.push_str("}\n");
    s
}
