//! Oracles that share no code with the library's algorithms.
#![allow(dead_code)]

use coxeter_clusters::{AdaptedFrame, CartanData, GroupElement, Root, Word};
use itertools::Itertools;

pub fn cd(label: &str) -> CartanData {
    CartanData::from_label(label).unwrap()
}

pub fn frame(label: &str) -> AdaptedFrame {
    AdaptedFrame::build(&cd(label)).unwrap()
}

pub fn root(v: &[i64]) -> Root {
    Root::new(v.to_vec())
}

/// Rank over the rationals by plain Gaussian elimination on fractions.
pub fn rational_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<f64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as f64).collect())
        .collect();
    if m.is_empty() {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c].abs() > 1e-9) else {
            continue;
        };
        m.swap(rank, p);
        for r in 0..m.len() {
            if r != rank {
                let f = m[r][c] / m[rank][c];
                let pivot = m[rank].clone();
                for (x, p) in m[r].iter_mut().zip(&pivot) {
                    *x -= f * p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `dim Hom(X, Y)` for thin representations of a type-A quiver, by solving
/// the commutation equations directly.
///
/// Every arrow acts by 1 between nonzero spaces. Unknowns are the scalars
/// `f_i` on the common support; each arrow `i → j` with `X_i ≠ 0` and
/// `Y_j ≠ 0` imposes `Y(a) f_i = f_j X(a)`.
pub fn interval_hom(cd: &CartanData, x: &Root, y: &Root) -> usize {
    let n = cd.rank();
    let vars: Vec<usize> = (0..n).filter(|&i| x.0[i] != 0 && y.0[i] != 0).collect();
    let var = |i: usize| vars.iter().position(|&v| v == i);
    let mut rows = Vec::new();
    for a in cd.arrows() {
        let (i, j) = (a.tail - 1, a.head - 1);
        if x.0[i] == 0 || y.0[j] == 0 {
            continue;
        }
        let mut row = vec![0i64; vars.len()];
        if y.0[i] != 0 {
            row[var(i).unwrap()] += 1;
        }
        if x.0[j] != 0 {
            row[var(j).unwrap()] -= 1;
        }
        rows.push(row);
    }
    vars.len() - rational_rank(&rows)
}

/// `⟨x, y⟩ = Σ x_i y_i − Σ_{i→j} x_i y_j`.
pub fn euler(cd: &CartanData, x: &Root, y: &Root) -> i64 {
    let d: i64 = x.0.iter().zip(&y.0).map(|(a, b)| a * b).sum();
    d - cd
        .arrows()
        .iter()
        .map(|a| a.mult as i64 * x.0[a.tail - 1] * y.0[a.head - 1])
        .sum::<i64>()
}

/// Number of positive roots sent negative: the Coxeter length, computed
/// without any descent algorithm.
pub fn inversions(cd: &CartanData, w: &GroupElement) -> usize {
    cd.positive_roots()
        .unwrap()
        .iter()
        .filter(|r| w.apply(r).is_negative())
        .count()
}

/// Clusters by scanning every `n`-subset: the deleted word must have
/// exactly `ν` inversions and act like `w₀` on the simple roots.
pub fn brute_force_clusters(frame: &AdaptedFrame) -> Vec<Vec<usize>> {
    let cd = frame.cartan();
    let n = cd.rank();
    let len = frame.len();
    let nu = frame.nu();
    let w0_images: Vec<Root> = (1..=n).map(|i| frame.w0().column(i)).collect();
    (1..=len)
        .combinations(n)
        .filter(|sel| {
            let word: Vec<usize> = (1..=len)
                .filter(|t| !sel.contains(t))
                .map(|t| frame.letter(t))
                .collect();
            let g = cd.word_to_element(&Word(word)).unwrap();
            inversions(cd, &g) == nu && (1..=n).all(|i| g.column(i) == w0_images[i - 1])
        })
        .collect()
}

/// All `m`-tuples of positive roots whose reflections multiply to `target`,
/// by unpruned search over `Φ₊^m`.
pub fn brute_force_factorizations(
    cd: &CartanData,
    target: &GroupElement,
    m: usize,
) -> Vec<Vec<Root>> {
    let roots = cd.positive_roots().unwrap();
    let refl: Vec<GroupElement> = roots.iter().map(|r| cd.reflection(r).unwrap()).collect();
    (0..m)
        .map(|_| 0..roots.len())
        .multi_cartesian_product()
        .filter(|idx| {
            let g = idx
                .iter()
                .fold(GroupElement::identity(cd.rank()), |g, &k| &g * &refl[k]);
            g == *target
        })
        .map(|idx| idx.iter().map(|&k| roots[k].clone()).collect())
        .collect()
}

/// Inverse of a Weyl group element, checked against `w w⁻¹ = 1`.
pub fn inverse(cd: &CartanData, w: &GroupElement) -> GroupElement {
    let inv = cd.inverse(w);
    assert!((w * &inv).is_identity());
    inv
}
