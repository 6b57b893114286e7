//! Mutation of clusters read off the barred word, and the exchange graph.

use crate::error::{Error, Result};
use crate::frame::{AdaptedFrame, Selection};
use crate::root::Root;
use serde::Serialize;
use std::collections::{HashMap, VecDeque};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ScanSide {
    Left,
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MutationStep {
    pub from: Selection,
    /// Slot in the sorted selection, 1-based.
    pub k: usize,
    pub removed: usize,
    pub inserted: usize,
    pub to: Selection,
    pub side: ScanSide,
}

/// Applies `s̄_{j_ℓ}` to `v`; deleted positions act trivially.
fn barred_step(frame: &AdaptedFrame, sel: &Selection, l: usize, v: &Root) -> Root {
    if sel.contains(l) {
        v.clone()
    } else {
        frame.cartan().reflect_simple(frame.letter(l), v)
    }
}

/// The first position, walking away from `t` on one side, at which the
/// barred product applied to `α_{j_t}` becomes negative.
fn scan(frame: &AdaptedFrame, sel: &Selection, t: usize, side: ScanSide) -> Option<usize> {
    let mut v = Root::simple(frame.rank(), frame.letter(t));
    let steps: Box<dyn Iterator<Item = usize>> = match side {
        ScanSide::Left => Box::new((1..t).rev()),
        ScanSide::Right => Box::new(t + 1..=frame.len()),
    };
    for l in steps {
        v = barred_step(frame, sel, l, &v);
        if v.is_negative() {
            return Some(l);
        }
    }
    None
}

/// Mutation of the cluster `sel` in direction `k`.
pub fn algebraic_mutate(frame: &AdaptedFrame, sel: &Selection, k: usize) -> Result<MutationStep> {
    let n = frame.rank();
    if k == 0 || k > n {
        return Err(Error::IndexOutOfRange { index: k, max: n });
    }
    if !frame.is_reduced_w0(sel) {
        return Err(Error::NotACluster(sel.positions().to_vec()));
    }
    let t = sel.positions()[k - 1];
    let left = scan(frame, sel, t, ScanSide::Left);
    let right = scan(frame, sel, t, ScanSide::Right);
    let (inserted, side) = match (left, right) {
        (Some(l), None) => (l, ScanSide::Left),
        (None, Some(r)) => (r, ScanSide::Right),
        (l, r) => {
            return Err(Error::MutationScan(
                l.is_some() as usize + r.is_some() as usize,
            ))
        }
    };
    Ok(MutationStep {
        from: sel.clone(),
        k,
        removed: t,
        inserted,
        to: sel.replace(k, inserted),
        side,
    })
}

/// Every position that can replace slot `k` and keep the deleted word a
/// reduced word for `w₀`, by trying them all.
pub fn complements(frame: &AdaptedFrame, sel: &Selection, k: usize) -> Vec<usize> {
    (1..=frame.len())
        .filter(|&u| !sel.contains(u))
        .filter(|&u| frame.is_reduced_w0(&sel.replace(k, u)))
        .collect()
}

/// Exactly one complement exists and it is the one the scan finds.
pub fn verify_unique_complement(frame: &AdaptedFrame, sel: &Selection, k: usize) -> Result<bool> {
    let step = algebraic_mutate(frame, sel, k)?;
    Ok(complements(frame, sel, k) == [step.inserted])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExchangeEdge {
    /// Vertex indices, 0-based.
    pub from: usize,
    pub to: usize,
    pub k: usize,
    pub removed: usize,
    pub inserted: usize,
}

/// All clusters reachable from `(1, …, n)`, in BFS order; each edge once.
#[derive(Clone, Debug, Serialize)]
pub struct ExchangeGraph {
    pub vertices: Vec<Selection>,
    pub edges: Vec<ExchangeEdge>,
}

impl ExchangeGraph {
    pub fn index_of(&self, sel: &Selection) -> Option<usize> {
        self.vertices.iter().position(|v| v == sel)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|e| e.from == v || e.to == v)
            .count()
    }

    pub fn is_regular(&self, d: usize) -> bool {
        let mut deg = vec![0; self.vertices.len()];
        for e in &self.edges {
            deg[e.from] += 1;
            deg[e.to] += 1;
        }
        deg.iter().all(|&x| x == d)
    }

    pub fn is_connected(&self) -> bool {
        let m = self.vertices.len();
        if m == 0 {
            return true;
        }
        let mut adj = vec![Vec::new(); m];
        for e in &self.edges {
            adj[e.from].push(e.to);
            adj[e.to].push(e.from);
        }
        let mut seen = vec![false; m];
        seen[0] = true;
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

pub fn exchange_graph(frame: &AdaptedFrame) -> Result<ExchangeGraph> {
    let n = frame.rank();
    let base = frame.initial_selection();
    let mut index: HashMap<Selection, usize> = HashMap::from([(base.clone(), 0)]);
    let mut vertices = vec![base.clone()];
    let mut edges = Vec::new();
    let mut queue = VecDeque::from([base]);
    while let Some(sel) = queue.pop_front() {
        let from = index[&sel];
        for k in 1..=n {
            let step = algebraic_mutate(frame, &sel, k)?;
            let to = match index.get(&step.to) {
                Some(&to) if to < from => continue,
                Some(&to) => to,
                None => {
                    let to = vertices.len();
                    index.insert(step.to.clone(), to);
                    vertices.push(step.to.clone());
                    queue.push_back(step.to);
                    to
                }
            };
            edges.push(ExchangeEdge {
                from,
                to,
                k,
                removed: step.removed,
                inserted: step.inserted,
            });
        }
    }
    Ok(ExchangeGraph { vertices, edges })
}
