//! Text renderings: SVG wiring diagrams and Graphviz DOT graphs.

pub mod dot;
pub mod wiring;

pub use dot::{ar_quiver_dot, exchange_graph_dot, word_quiver_dot};
pub use wiring::{wiring_diagram, WiringColumn, WiringDiagram, WiringMode};
