//! Indecomposable modules of a Dynkin quiver, found by knitting the
//! Auslander-Reiten quiver from the projectives, and Hom/Ext dimensions
//! computed from its mesh relations.
//!
//! Nothing here uses reflections or the Coxeter element: dimension vectors
//! come from path counts and additivity on meshes, which makes this module an
//! independent check on the root-combinatorial side.

use crate::cartan::CartanData;
use crate::error::{Error, Result};
use crate::frame::{AdaptedFrame, Selection};
use crate::root::Root;
use serde::Serialize;
use std::collections::{BTreeSet, HashMap};

/// An indecomposable module, indexed by its position `t` in the frame.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Indec {
    pub position: usize,
    pub dim: Root,
    /// `Some(i)` for `P(i)`.
    pub projective: Option<usize>,
    /// `Some(k)` for `I(k)`.
    pub injective: Option<usize>,
    /// The `i` with this module in the τ-orbit of `P(i)`.
    pub orbit_vertex: usize,
    /// Number of `τ` steps down to `P(orbit_vertex)`.
    pub slice: usize,
}

/// The AR quiver with vertices in frame order `M_1, …, M_ν`.
#[derive(Clone, Debug, Serialize)]
pub struct ARQuiver {
    modules: Vec<Indec>,
    /// Irreducible maps between frame positions.
    arrows: Vec<(usize, usize)>,
    /// `tau[t - 1]` is the position of `τ M_t`.
    tau: Vec<Option<usize>>,
}

struct Node {
    dim: Root,
    preds: Vec<usize>,
    tau: Option<usize>,
    tau_inv: Option<usize>,
    done: bool,
}

/// Path counts `paths[i][j]` from vertex `i` to vertex `j` (0-based).
fn path_counts(cd: &CartanData) -> Vec<Vec<i64>> {
    let n = cd.rank();
    // arrows point from larger to smaller labels, so increasing order is a
    // reverse topological order
    let mut paths = vec![vec![0i64; n]; n];
    for i in 0..n {
        paths[i][i] = 1;
        for a in cd.arrows().iter().filter(|a| a.tail == i + 1) {
            for j in 0..n {
                paths[i][j] += a.mult as i64 * paths[a.head - 1][j];
            }
        }
    }
    paths
}

impl ARQuiver {
    /// Knits the AR quiver and matches its vertices with `α^1, …, α^ν`.
    pub fn knit(frame: &AdaptedFrame) -> Result<Self> {
        let cd = frame.cartan();
        if !cd.is_simply_laced() {
            return Err(Error::NotSimplyLaced);
        }
        let n = cd.rank();
        let paths = path_counts(cd);
        let proj: Vec<Root> = (0..n).map(|i| Root(paths[i].clone())).collect();
        let inj: Vec<Root> = (0..n)
            .map(|k| Root((0..n).map(|i| paths[i][k]).collect()))
            .collect();

        let mut nodes: Vec<Node> = proj
            .iter()
            .enumerate()
            .map(|(i, p)| Node {
                dim: p.clone(),
                // rad P(i) is the sum of P(j) over arrows i → j
                preds: cd
                    .arrows()
                    .iter()
                    .filter(|a| a.tail == i + 1)
                    .map(|a| a.head - 1)
                    .collect(),
                tau: None,
                tau_inv: None,
                done: false,
            })
            .collect();
        let mut arrows = BTreeSet::new();
        let limit = 4 * frame.nu() + n;
        while let Some(m) = (0..nodes.len())
            .find(|&m| !nodes[m].done && nodes[m].preds.iter().all(|&e| nodes[e].done))
        {
            // successors: projectives whose radical contains M, and τ⁻¹E for
            // every predecessor E that is not injective
            let mut succ: Vec<usize> = (0..n).filter(|&i| nodes[i].preds.contains(&m)).collect();
            succ.extend(nodes[m].preds.iter().filter_map(|&e| nodes[e].tau_inv));
            for &s in &succ {
                arrows.insert((m, s));
            }
            nodes[m].done = true;
            if inj.contains(&nodes[m].dim) {
                continue;
            }
            let mut dim = -nodes[m].dim.clone();
            for &s in &succ {
                dim = &dim + &nodes[s].dim;
            }
            if !dim.is_positive() || nodes.len() >= limit {
                return Err(Error::FrameInvariant(format!(
                    "knitting produced {dim} after {}",
                    nodes[m].dim
                )));
            }
            nodes.push(Node {
                dim,
                preds: succ,
                tau: Some(m),
                tau_inv: None,
                done: false,
            });
            let new = nodes.len() - 1;
            nodes[m].tau_inv = Some(new);
        }
        if nodes.iter().any(|x| !x.done) {
            return Err(Error::FrameInvariant("knitting stalled".into()));
        }

        // match with the frame
        let nu = frame.nu();
        let position: HashMap<&Root, usize> = (1..=nu).map(|t| (frame.alpha(t), t)).collect();
        let dims: BTreeSet<&Root> = nodes.iter().map(|x| &x.dim).collect();
        if nodes.len() != nu || dims.len() != nu || dims.iter().any(|d| !position.contains_key(d)) {
            return Err(Error::FrameInvariant(
                "knitted modules differ from the frame's positive roots".into(),
            ));
        }
        let pos = |m: usize| position[&nodes[m].dim];
        let mut modules: Vec<Option<Indec>> = vec![None; nu];
        let mut tau = vec![None; nu];
        for (m, node) in nodes.iter().enumerate() {
            let (mut base, mut slice) = (m, 0);
            while let Some(b) = nodes[base].tau {
                base = b;
                slice += 1;
            }
            let t = pos(m);
            tau[t - 1] = node.tau.map(pos);
            modules[t - 1] = Some(Indec {
                position: t,
                dim: node.dim.clone(),
                projective: (m < n).then_some(m + 1),
                injective: inj.iter().position(|x| *x == node.dim).map(|k| k + 1),
                orbit_vertex: base + 1,
                slice,
            });
        }
        Ok(ARQuiver {
            modules: modules.into_iter().map(Option::unwrap).collect(),
            arrows: arrows.into_iter().map(|(a, b)| (pos(a), pos(b))).collect(),
            tau,
        })
    }

    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }

    pub fn modules(&self) -> &[Indec] {
        &self.modules
    }

    /// `M_t`.
    pub fn module(&self, t: usize) -> &Indec {
        &self.modules[t - 1]
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    /// Position of `τ M_t`; `None` for projectives.
    pub fn tau(&self, t: usize) -> Option<usize> {
        self.tau[t - 1]
    }

    /// Position of `τ⁻¹ M_t`; `None` for injectives.
    pub fn tau_inverse(&self, t: usize) -> Option<usize> {
        self.tau.iter().position(|&x| x == Some(t)).map(|u| u + 1)
    }

    pub fn position_of(&self, dim: &Root) -> Option<usize> {
        self.modules
            .iter()
            .find(|m| m.dim == *dim)
            .map(|m| m.position)
    }

    /// Position of `P(i)`.
    pub fn projective(&self, i: usize) -> usize {
        self.modules
            .iter()
            .find(|m| m.projective == Some(i))
            .expect("every projective is knitted")
            .position
    }

    pub fn predecessors(&self, t: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows.iter().filter(move |a| a.1 == t).map(|a| a.0)
    }

    /// A topological order of the vertices; ties go to the smaller position.
    fn topological_order(&self) -> Vec<usize> {
        let nu = self.len();
        let mut indeg = vec![0usize; nu + 1];
        for &(_, b) in &self.arrows {
            indeg[b] += 1;
        }
        let mut ready: BTreeSet<usize> = (1..=nu).filter(|&t| indeg[t] == 0).collect();
        let mut order = Vec::with_capacity(nu);
        while let Some(t) = ready.pop_first() {
            order.push(t);
            for &(a, b) in &self.arrows {
                if a == t {
                    indeg[b] -= 1;
                    if indeg[b] == 0 {
                        ready.insert(b);
                    }
                }
            }
        }
        order
    }
}

/// `dim Hom(M_x, M_y)` for all pairs of positions.
#[derive(Clone, Debug, Serialize)]
pub struct HomTable {
    hom: Vec<Vec<u32>>,
    tau: Vec<Option<usize>>,
}

impl HomTable {
    /// One hammock per source module: `h(M) = Σ_{E→M} h(E) − h(τM) + δ_{M,X}`.
    pub fn new(quiver: &ARQuiver) -> Self {
        let nu = quiver.len();
        let order = quiver.topological_order();
        let preds: Vec<Vec<usize>> = (1..=nu).map(|t| quiver.predecessors(t).collect()).collect();
        let mut hom = vec![vec![0u32; nu]; nu];
        for x in 1..=nu {
            let mut h = vec![0i64; nu + 1];
            for &m in &order {
                let mut v: i64 = preds[m - 1].iter().map(|&e| h[e]).sum();
                if let Some(tm) = quiver.tau(m) {
                    v -= h[tm];
                }
                if m == x {
                    v += 1;
                }
                debug_assert!(v >= 0);
                h[m] = v;
            }
            for y in 1..=nu {
                hom[x - 1][y - 1] = h[y] as u32;
            }
        }
        HomTable {
            hom,
            tau: quiver.tau.clone(),
        }
    }

    pub fn len(&self) -> usize {
        self.hom.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hom.is_empty()
    }

    pub fn hom(&self, x: usize, y: usize) -> u32 {
        self.hom[x - 1][y - 1]
    }

    /// `dim Ext¹(M_x, M_y) = dim Hom(M_y, τ M_x)`.
    pub fn ext(&self, x: usize, y: usize) -> u32 {
        match self.tau[x - 1] {
            Some(tx) => self.hom(y, tx),
            None => 0,
        }
    }

    pub fn matrix(&self) -> &[Vec<u32>] {
        &self.hom
    }

    /// `Hom(E_j, E_i) = 0` for `j > i` and `Ext(E_j, E_i) = 0` for `j ≥ i`.
    pub fn is_exceptional_sequence(&self, seq: &[usize]) -> bool {
        (0..seq.len()).all(|i| {
            (i..seq.len())
                .all(|j| (j == i || self.hom(seq[j], seq[i]) == 0) && self.ext(seq[j], seq[i]) == 0)
        })
    }
}

/// An indecomposable object of the cluster category.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ClusterObject {
    /// The module `M_t`.
    Module(usize),
    /// `P(k)[1]`.
    ShiftedProjective(usize),
}

/// Module-theoretic data attached to a frame.
#[derive(Clone, Debug)]
pub struct RepData<'a> {
    frame: &'a AdaptedFrame,
    quiver: ARQuiver,
    homs: HomTable,
}

impl<'a> RepData<'a> {
    pub fn new(frame: &'a AdaptedFrame) -> Result<Self> {
        let quiver = ARQuiver::knit(frame)?;
        let homs = HomTable::new(&quiver);
        Ok(RepData {
            frame,
            quiver,
            homs,
        })
    }

    pub fn frame(&self) -> &AdaptedFrame {
        self.frame
    }

    pub fn quiver(&self) -> &ARQuiver {
        &self.quiver
    }

    pub fn homs(&self) -> &HomTable {
        &self.homs
    }

    /// The object `M_t` of the cluster category.
    pub fn object(&self, t: usize) -> Result<ClusterObject> {
        let nu = self.frame.nu();
        match t {
            0 => Err(Error::IndexOutOfRange {
                index: t,
                max: self.frame.len(),
            }),
            t if t <= nu => Ok(ClusterObject::Module(t)),
            t if t <= self.frame.len() => Ok(ClusterObject::ShiftedProjective(t - nu)),
            _ => Err(Error::IndexOutOfRange {
                index: t,
                max: self.frame.len(),
            }),
        }
    }

    /// Position of the module `N_t`: `M_t` itself, or `P(k)` for `t = ν + k`.
    pub fn n_of(&self, t: usize) -> Result<usize> {
        Ok(match self.object(t)? {
            ClusterObject::Module(t) => t,
            ClusterObject::ShiftedProjective(k) => self.quiver.projective(k),
        })
    }

    pub fn n_sequence(&self, sel: &Selection) -> Vec<usize> {
        sel.positions()
            .iter()
            .map(|&t| self.n_of(t).expect("selection in range"))
            .collect()
    }

    /// Condition (2): `(N_{t_1}, …, N_{t_n})` is exceptional.
    pub fn is_exceptional(&self, sel: &Selection) -> bool {
        self.homs.is_exceptional_sequence(&self.n_sequence(sel))
    }

    /// `dim Ext` in the cluster category between two of its indecomposables.
    pub fn cluster_ext(&self, a: ClusterObject, b: ClusterObject) -> u32 {
        use ClusterObject::*;
        match (a, b) {
            (Module(x), Module(y)) => self.homs.ext(x, y) + self.homs.ext(y, x),
            (Module(x), ShiftedProjective(k)) | (ShiftedProjective(k), Module(x)) => {
                // Hom(P(k), M) is the k-th coordinate of dim M
                self.quiver.module(x).dim.0[k - 1] as u32
            }
            (ShiftedProjective(_), ShiftedProjective(_)) => 0,
        }
    }

    /// Condition (1): the selected objects have no extensions among them.
    pub fn is_cluster_tilting(&self, sel: &Selection) -> bool {
        let objs: Vec<ClusterObject> = sel
            .positions()
            .iter()
            .map(|&t| self.object(t).expect("selection in range"))
            .collect();
        (0..objs.len()).all(|i| (i..objs.len()).all(|j| self.cluster_ext(objs[i], objs[j]) == 0))
    }

    /// `⟨x, y⟩ = Σ x_i y_i − Σ_{i→j} x_i y_j`.
    pub fn euler_form(&self, x: &Root, y: &Root) -> i64 {
        let diag: i64 = x.0.iter().zip(&y.0).map(|(a, b)| a * b).sum();
        let off: i64 = self
            .frame
            .cartan()
            .arrows()
            .iter()
            .map(|a| a.mult as i64 * x.0[a.tail - 1] * y.0[a.head - 1])
            .sum();
        diag - off
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frame(label: &str) -> AdaptedFrame {
        AdaptedFrame::build(&CartanData::from_label(label).unwrap()).unwrap()
    }

    #[test]
    fn a2_knitting() {
        let f = frame("A2");
        let q = ARQuiver::knit(&f).unwrap();
        // M_1 = P1, M_2 = P2, M_3 = S2 = I2
        assert_eq!(q.module(1).projective, Some(1));
        assert_eq!(q.module(2).projective, Some(2));
        assert_eq!(q.module(3).injective, Some(2));
        assert_eq!(q.tau(3), Some(1));
        assert_eq!(q.arrows(), &[(1, 2), (2, 3)]);
        let h = HomTable::new(&q);
        assert_eq!(h.hom(2, 1), 0);
        assert_eq!(h.hom(1, 2), 1);
        assert_eq!(h.hom(2, 3), 1);
        assert_eq!(h.ext(3, 1), 1);
        assert!(h.is_exceptional_sequence(&[1, 2]));
        assert!(!h.is_exceptional_sequence(&[2, 1]));
        assert!(h.is_exceptional_sequence(&[3, 1]));
    }

    #[test]
    fn n_indexing() {
        let f = frame("A4");
        let r = RepData::new(&f).unwrap();
        assert_eq!(r.n_of(11).unwrap(), r.quiver().projective(1));
        assert_eq!(r.n_of(3).unwrap(), 3);
        assert!(r.n_of(15).is_err());
    }

    #[test]
    fn non_simply_laced_rejected() {
        let f = frame("B3");
        assert!(matches!(RepData::new(&f), Err(Error::NotSimplyLaced)));
    }

    #[test]
    fn all_simply_laced_types_knit() {
        for t in ["A1", "A5", "D4", "D6", "E6", "E7", "E8"] {
            let f = frame(t);
            let r = RepData::new(&f).unwrap();
            for x in 1..=f.nu() {
                assert_eq!(r.homs().hom(x, x), 1);
                assert_eq!(r.homs().ext(x, x), 0);
            }
        }
    }
}
