//! Generalized Cartan matrices with a quiver orientation.
//!
//! Conventions, fixed here once for the whole crate:
//!
//! * `a_ij = 2(α_i, α_j) / (α_i, α_i)` and `s_i(α_j) = α_j - a_ij α_i`.
//! * The symmetrizer `d` satisfies `d_i a_ij = d_j a_ji`; the symmetric matrix
//!   `S = diag(d) A` gives `2(x, y) = xᵀ S y` up to a global positive scale,
//!   and `(α_i, α_i) = d_i`.
//! * Vertices are renumbered so that `1, 2, …, n` is a sink sequence: `1` is a
//!   sink of the quiver, `2` is a sink once `1` is removed, and so on. Every
//!   arrow therefore points from a larger to a smaller index and the Coxeter
//!   element `C = s_1 s_2 ⋯ s_n` is adapted to the quiver.

use crate::error::{Error, Result};
use num_integer::Integer;
use serde::Serialize;
use std::collections::BTreeSet;
use std::fmt;
use std::path::Path;

/// `mult` arrows from `tail` to `head` (1-based, adapted numbering).
///
/// For valued (non-simply-laced) edges the multiplicity is 1 and the valuation
/// lives in the Cartan matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Arrow {
    pub tail: usize,
    pub head: usize,
    pub mult: u32,
}

/// Finite crystallographic Dynkin types, Bourbaki numbering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DynkinType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
    F4,
    G2,
    /// `I_2(2) = A_1 × A_1`.
    A1xA1,
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynkinType::A(n) => write!(f, "A{n}"),
            DynkinType::B(n) => write!(f, "B{n}"),
            DynkinType::C(n) => write!(f, "C{n}"),
            DynkinType::D(n) => write!(f, "D{n}"),
            DynkinType::E(n) => write!(f, "E{n}"),
            DynkinType::F4 => write!(f, "F4"),
            DynkinType::G2 => write!(f, "G2"),
            DynkinType::A1xA1 => write!(f, "A1xA1"),
        }
    }
}

impl std::str::FromStr for DynkinType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let label: String = s
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '_')
            .collect::<String>()
            .to_ascii_uppercase();
        let unknown = || Error::UnknownType(s.to_string());
        if let Some(rest) = label.strip_prefix("I2(").and_then(|r| r.strip_suffix(')')) {
            let m: u32 = rest.parse().map_err(|_| unknown())?;
            return match m {
                2 => Ok(DynkinType::A1xA1),
                3 => Ok(DynkinType::A(2)),
                4 => Ok(DynkinType::B(2)),
                6 => Ok(DynkinType::G2),
                _ => Err(Error::NonCrystallographic(s.to_string())),
            };
        }
        if label.starts_with('H') || label.starts_with("I2") {
            return Err(Error::NonCrystallographic(s.to_string()));
        }
        let (head, tail) = label.split_at(1);
        let n: usize = tail.parse().map_err(|_| unknown())?;
        let t = match (head, n) {
            ("A", n) if n >= 1 => DynkinType::A(n),
            ("B", n) if n >= 2 => DynkinType::B(n),
            ("C", n) if n >= 2 => DynkinType::C(n),
            ("D", n) if n >= 4 => DynkinType::D(n),
            ("E", 6..=8) => DynkinType::E(n),
            ("F", 4) => DynkinType::F4,
            ("G", 2) => DynkinType::G2,
            _ => return Err(unknown()),
        };
        Ok(t)
    }
}

impl DynkinType {
    pub fn rank(&self) -> usize {
        match *self {
            DynkinType::A(n)
            | DynkinType::B(n)
            | DynkinType::C(n)
            | DynkinType::D(n)
            | DynkinType::E(n) => n,
            DynkinType::F4 => 4,
            DynkinType::G2 | DynkinType::A1xA1 => 2,
        }
    }

    /// Cartan matrix in Bourbaki numbering.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
            a[i - 1][j - 1] = aij;
            a[j - 1][i - 1] = aji;
        };
        match *self {
            DynkinType::A(n) => (1..n).for_each(|i| link(i, i + 1, -1, -1)),
            DynkinType::B(n) => {
                (1..n - 1).for_each(|i| link(i, i + 1, -1, -1));
                // α_n short
                link(n - 1, n, -1, -2);
            }
            DynkinType::C(n) => {
                (1..n - 1).for_each(|i| link(i, i + 1, -1, -1));
                // α_n long
                link(n - 1, n, -2, -1);
            }
            DynkinType::D(n) => {
                (1..n - 1).for_each(|i| link(i, i + 1, -1, -1));
                link(n - 2, n, -1, -1);
            }
            DynkinType::E(n) => {
                link(1, 3, -1, -1);
                link(2, 4, -1, -1);
                (3..n).for_each(|i| link(i, i + 1, -1, -1));
            }
            DynkinType::F4 => {
                link(1, 2, -1, -1);
                link(2, 3, -1, -2);
                link(3, 4, -1, -1);
            }
            DynkinType::G2 => link(1, 2, -3, -1),
            DynkinType::A1xA1 => {}
        }
        a
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(
            self,
            DynkinType::A(_) | DynkinType::D(_) | DynkinType::E(_) | DynkinType::A1xA1
        )
    }
}

/// Input accepted by [`CartanData::build`].
#[derive(Clone, Debug)]
pub enum CartanSpec {
    /// A Dynkin label with its standard orientation (every arrow points to the
    /// smaller Bourbaki label), optionally re-oriented by explicit arrows.
    Dynkin {
        kind: DynkinType,
        arrows: Option<Vec<(usize, usize)>>,
    },
    /// A quiver: `n` vertices and `(tail, head, multiplicity)` triples.
    Quiver {
        rank: usize,
        arrows: Vec<(usize, usize, u32)>,
    },
}

/// Root datum of an acyclic (valued) quiver: the ambient context for all root
/// and reflection arithmetic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CartanData {
    rank: usize,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    arrows: Vec<Arrow>,
    finite_type: bool,
    /// `labels[k]` is the caller's label of adapted vertex `k + 1`.
    labels: Vec<usize>,
    dynkin: Option<String>,
}

impl CartanData {
    pub fn build(spec: CartanSpec) -> Result<Self> {
        match spec {
            CartanSpec::Dynkin { kind, arrows } => {
                let a = kind.cartan_matrix();
                let n = kind.rank();
                let orientation: Vec<(usize, usize, u32)> = match arrows {
                    Some(arrows) => arrows.into_iter().map(|(t, h)| (t, h, 1)).collect(),
                    None => {
                        let mut v = Vec::new();
                        for i in 1..=n {
                            for j in i + 1..=n {
                                if a[i - 1][j - 1] != 0 {
                                    v.push((j, i, 1));
                                }
                            }
                        }
                        v
                    }
                };
                // Out-of-range vertices are reported by from_cartan.
                let in_range = |v: usize| (1..=n).contains(&v);
                let orientation = orientation
                    .into_iter()
                    .map(|(t, h, _)| {
                        let mult = match kind.is_simply_laced() && in_range(t) && in_range(h) {
                            true => a[t - 1][h - 1].unsigned_abs() as u32,
                            false => 1,
                        };
                        (t, h, mult)
                    })
                    .collect();
                let mut cd = Self::from_cartan(a, orientation)?;
                cd.dynkin = Some(kind.to_string());
                Ok(cd)
            }
            CartanSpec::Quiver { rank, arrows } => Self::from_quiver(rank, &arrows),
        }
    }

    pub fn dynkin(kind: DynkinType) -> Result<Self> {
        Self::build(CartanSpec::Dynkin { kind, arrows: None })
    }

    /// Parses a Dynkin label such as `A4`, `D_4`, `G2` or `I2(6)`.
    pub fn from_label(label: &str) -> Result<Self> {
        Self::dynkin(label.parse()?)
    }

    /// Symmetric Cartan matrix of a quiver: `a_ij = -(number of arrows between i and j)`.
    pub fn from_quiver(rank: usize, arrows: &[(usize, usize, u32)]) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidCartan("rank must be positive".into()));
        }
        let mut a = vec![vec![0i64; rank]; rank];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        for &(t, h, m) in arrows {
            for v in [t, h] {
                if v == 0 || v > rank {
                    return Err(Error::IndexOutOfRange {
                        index: v,
                        max: rank,
                    });
                }
            }
            if t == h {
                return Err(Error::CyclicQuiver(t));
            }
            a[t - 1][h - 1] -= i64::from(m);
            a[h - 1][t - 1] -= i64::from(m);
        }
        Self::from_cartan(a, arrows.to_vec())
    }

    /// General constructor: a Cartan matrix plus an orientation of its graph.
    ///
    /// Every pair `i, j` with `a_ij ≠ 0` must be oriented (in one direction
    /// only). Vertices are renumbered into adapted order.
    pub fn from_cartan(a: Vec<Vec<i64>>, arrows: Vec<(usize, usize, u32)>) -> Result<Self> {
        let n = a.len();
        if n == 0 || a.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidCartan(
                "matrix must be square and non-empty".into(),
            ));
        }
        for i in 0..n {
            if a[i][i] != 2 {
                return Err(Error::InvalidCartan(format!(
                    "a_{0}{0} = {1}",
                    i + 1,
                    a[i][i]
                )));
            }
            for j in 0..n {
                if i != j && a[i][j] > 0 {
                    return Err(Error::InvalidCartan(format!("a_{}{} > 0", i + 1, j + 1)));
                }
                if (a[i][j] == 0) != (a[j][i] == 0) {
                    return Err(Error::InvalidCartan(format!(
                        "a_{0}{1} and a_{1}{0} must vanish together",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }

        let mut oriented = BTreeSet::new();
        let mut merged: Vec<(usize, usize, u32)> = Vec::new();
        for &(t, h, m) in &arrows {
            for v in [t, h] {
                if v == 0 || v > n {
                    return Err(Error::IndexOutOfRange { index: v, max: n });
                }
            }
            if t == h {
                return Err(Error::CyclicQuiver(t));
            }
            if a[t - 1][h - 1] == 0 {
                return Err(Error::InvalidCartan(format!(
                    "arrow {t}->{h} joins unlinked vertices"
                )));
            }
            if oriented.contains(&(h, t)) {
                return Err(Error::CyclicQuiver(t));
            }
            if oriented.insert((t, h)) {
                merged.push((t, h, m));
            } else if let Some(e) = merged.iter_mut().find(|e| e.0 == t && e.1 == h) {
                e.2 += m;
            }
        }
        for i in 1..=n {
            for j in i + 1..=n {
                if a[i - 1][j - 1] != 0
                    && !oriented.contains(&(i, j))
                    && !oriented.contains(&(j, i))
                {
                    return Err(Error::InvalidCartan(format!(
                        "edge {i}-{j} has no orientation"
                    )));
                }
            }
        }

        let symmetrizer = symmetrize(&a)?;

        // Adapted numbering: peel sinks, smallest label first.
        let mut remaining: BTreeSet<usize> = (1..=n).collect();
        let mut order = Vec::with_capacity(n);
        while !remaining.is_empty() {
            let sink = remaining
                .iter()
                .copied()
                .find(|&v| {
                    !merged
                        .iter()
                        .any(|&(t, h, _)| t == v && remaining.contains(&h))
                })
                .ok_or_else(|| Error::CyclicQuiver(*remaining.iter().next().unwrap()))?;
            remaining.remove(&sink);
            order.push(sink);
        }
        let mut new_index = vec![0; n + 1];
        for (k, &v) in order.iter().enumerate() {
            new_index[v] = k + 1;
        }
        let cartan: Vec<Vec<i64>> = order
            .iter()
            .map(|&u| order.iter().map(|&v| a[u - 1][v - 1]).collect())
            .collect();
        let symmetrizer: Vec<i64> = order.iter().map(|&v| symmetrizer[v - 1]).collect();
        let mut arrows: Vec<Arrow> = merged
            .iter()
            .map(|&(t, h, mult)| Arrow {
                tail: new_index[t],
                head: new_index[h],
                mult,
            })
            .collect();
        arrows.sort();

        let finite_type = is_positive_definite(&cartan, &symmetrizer);
        Ok(CartanData {
            rank: n,
            cartan,
            symmetrizer,
            arrows,
            finite_type,
            labels: order,
            dynkin: None,
        })
    }

    /// Reads the text quiver format:
    ///
    /// ```text
    /// n 4
    /// arrow 2 1 1
    /// arrow 3 2 1
    /// # or simply
    /// type D4
    /// ```
    pub fn parse_quiver(text: &str) -> Result<Self> {
        let mut rank = None;
        let mut kind = None;
        let mut arrows = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: &str| Error::Parse {
                line: k + 1,
                msg: msg.to_string(),
            };
            let mut parts = line.split_whitespace();
            let num = |s: Option<&str>| -> Result<usize> {
                s.ok_or_else(|| err("missing number"))?
                    .parse::<usize>()
                    .map_err(|_| err("expected a non-negative integer"))
            };
            match parts.next() {
                Some("n") => rank = Some(num(parts.next())?),
                Some("arrow") => {
                    let t = num(parts.next())?;
                    let h = num(parts.next())?;
                    let m = match parts.next() {
                        Some(s) => s.parse::<u32>().map_err(|_| err("bad multiplicity"))?,
                        None => 1,
                    };
                    arrows.push((t, h, m));
                }
                Some("type") => {
                    kind = Some(
                        parts
                            .next()
                            .ok_or_else(|| err("missing type label"))?
                            .parse()?,
                    )
                }
                Some(other) => return Err(err(&format!("unknown directive `{other}`"))),
                None => {}
            }
            if parts.next().is_some() {
                return Err(err("trailing tokens"));
            }
        }
        match (kind, rank) {
            (Some(kind), _) => Self::build(CartanSpec::Dynkin {
                kind,
                arrows: (!arrows.is_empty())
                    .then(|| arrows.iter().map(|&(t, h, _)| (t, h)).collect()),
            }),
            (None, Some(rank)) => Self::from_quiver(rank, &arrows),
            (None, None) => Err(Error::Parse {
                line: 0,
                msg: "missing `n <rank>` or `type <label>`".into(),
            }),
        }
    }

    pub fn read_quiver_file(path: impl AsRef<Path>) -> Result<Self> {
        Self::parse_quiver(&std::fs::read_to_string(path)?)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Entry `a_ij`, 1-based.
    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.cartan[i - 1][j - 1]
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn is_finite_type(&self) -> bool {
        self.finite_type
    }

    pub fn is_simply_laced(&self) -> bool {
        (0..self.rank).all(|i| (0..self.rank).all(|j| self.cartan[i][j] == self.cartan[j][i]))
            && self
                .cartan
                .iter()
                .flatten()
                .all(|&x| x == 2 || x == 0 || x == -1)
    }

    /// Original label of adapted vertex `i`.
    pub fn original_label(&self, i: usize) -> usize {
        self.labels[i - 1]
    }

    pub fn relabeling(&self) -> &[usize] {
        &self.labels
    }

    pub fn dynkin_label(&self) -> Option<&str> {
        self.dynkin.as_deref()
    }

    /// Coxeter matrix entry `m_ij`; `None` stands for `∞`.
    pub fn coxeter_exponent(&self, i: usize, j: usize) -> Option<u32> {
        if i == j {
            return Some(1);
        }
        match self.a(i, j) * self.a(j, i) {
            0 => Some(2),
            1 => Some(3),
            2 => Some(4),
            3 => Some(6),
            _ => None,
        }
    }

    /// Neighbours of vertex `i` in the underlying graph.
    pub fn neighbours(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (1..=self.rank).filter(move |&j| j != i && self.a(i, j) != 0)
    }

    /// The vertices in path order if the underlying graph is a simply-laced path.
    pub fn path_order(&self) -> Option<Vec<usize>> {
        if !self.is_simply_laced() {
            return None;
        }
        let n = self.rank;
        let degree = |v: usize| self.neighbours(v).count();
        if (1..=n).any(|v| degree(v) > 2) {
            return None;
        }
        let start = if n == 1 {
            1
        } else {
            (1..=n).find(|&v| degree(v) == 1)?
        };
        let mut order = vec![start];
        let mut prev = 0;
        let mut cur = start;
        while let Some(next) = self.neighbours(cur).find(|&v| v != prev) {
            order.push(next);
            prev = cur;
            cur = next;
        }
        (order.len() == n).then_some(order)
    }
}

fn symmetrize(a: &[Vec<i64>]) -> Result<Vec<i64>> {
    let n = a.len();
    // d_i as reduced fractions (num, den)
    let mut d: Vec<Option<(i64, i64)>> = vec![None; n];
    for root in 0..n {
        if d[root].is_some() {
            continue;
        }
        d[root] = Some((1, 1));
        let mut component = vec![root];
        let mut stack = vec![root];
        while let Some(i) = stack.pop() {
            let (p, q) = d[i].unwrap();
            for j in 0..n {
                if i == j || a[i][j] == 0 {
                    continue;
                }
                // d_j = d_i a_ij / a_ji
                let (mut num, mut den) = (p * a[i][j], q * a[j][i]);
                if den < 0 {
                    num = -num;
                    den = -den;
                }
                let g = num.gcd(&den);
                let dj = (num / g, den / g);
                match d[j] {
                    None => {
                        d[j] = Some(dj);
                        component.push(j);
                        stack.push(j);
                    }
                    Some(existing) if existing != dj => {
                        return Err(Error::NotSymmetrizable(format!(
                            "inconsistent ratio around vertex {}",
                            j + 1
                        )))
                    }
                    Some(_) => {}
                }
            }
        }
        let l = component.iter().fold(1i64, |l, &k| l.lcm(&d[k].unwrap().1));
        let ints: Vec<i64> = component
            .iter()
            .map(|&k| {
                let (p, q) = d[k].unwrap();
                p * (l / q)
            })
            .collect();
        let g = ints.iter().fold(0i64, |g, &x| g.gcd(&x));
        for (&k, &v) in component.iter().zip(&ints) {
            d[k] = Some((v / g, 1));
        }
    }
    Ok(d.into_iter().map(|x| x.unwrap().0).collect())
}

/// Sylvester's criterion on `diag(d) A`.
fn is_positive_definite(a: &[Vec<i64>], d: &[i64]) -> bool {
    let n = a.len();
    let s: Vec<Vec<i128>> = (0..n)
        .map(|i| (0..n).map(|j| i128::from(d[i] * a[i][j])).collect())
        .collect();
    (1..=n).all(|k| {
        let minor: Vec<Vec<i128>> = s[..k].iter().map(|r| r[..k].to_vec()).collect();
        bareiss_det(minor) > 0
    })
}

fn bareiss_det(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}
