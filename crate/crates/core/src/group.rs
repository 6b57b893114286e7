//! Group elements as integer matrices, and words in the simple reflections.

use crate::root::Root;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::Mul;

/// An element of the Weyl group, stored as its matrix on the root lattice.
///
/// Column `j` holds the image of the simple root `α_{j+1}`. The action is
/// faithful, so two elements are equal exactly when their matrices are.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement {
    rank: usize,
    /// Row-major entries.
    entries: Vec<i64>,
}

impl GroupElement {
    pub fn identity(rank: usize) -> Self {
        let mut entries = vec![0; rank * rank];
        for i in 0..rank {
            entries[i * rank + i] = 1;
        }
        GroupElement { rank, entries }
    }

    /// Builds the element from the images of the simple roots.
    pub fn from_columns(columns: &[Root]) -> Self {
        let rank = columns.len();
        let mut entries = vec![0; rank * rank];
        for (j, col) in columns.iter().enumerate() {
            for i in 0..rank {
                entries[i * rank + j] = col.0[i];
            }
        }
        GroupElement { rank, entries }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let rank = rows.len();
        GroupElement {
            rank,
            entries: rows.iter().flatten().copied().collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.rank + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.rank).map(|r| r.to_vec()).collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == GroupElement::identity(self.rank)
    }

    pub fn apply(&self, x: &Root) -> Root {
        let n = self.rank;
        Root(
            (0..n)
                .map(|i| (0..n).map(|j| self.entries[i * n + j] * x.0[j]).sum())
                .collect(),
        )
    }

    /// Image of the simple root `α_i` (1-based).
    pub fn column(&self, i: usize) -> Root {
        let n = self.rank;
        Root((0..n).map(|r| self.entries[r * n + i - 1]).collect())
    }

    pub fn transpose(&self) -> GroupElement {
        let n = self.rank;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = self.entries[i * n + j];
            }
        }
        GroupElement { rank: n, entries }
    }

    /// Rank of `self - I` over the rationals.
    ///
    /// For a finite Weyl group this is the reflection length of the element.
    pub fn fixed_codimension(&self) -> usize {
        let n = self.rank;
        let mut rows: Vec<Vec<i128>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| self.entries[i * n + j] as i128 - i128::from(i == j))
                    .collect()
            })
            .collect();
        integer_rank(&mut rows)
    }
}

impl Mul for &GroupElement {
    type Output = GroupElement;
    fn mul(self, rhs: &GroupElement) -> GroupElement {
        let n = self.rank;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    entries[i * n + j] += a * rhs.entries[k * n + j];
                }
            }
        }
        GroupElement { rank: n, entries }
    }
}

impl Mul for GroupElement {
    type Output = GroupElement;
    fn mul(self, rhs: GroupElement) -> GroupElement {
        &self * &rhs
    }
}

/// Fraction-free row reduction; returns the rank.
pub(crate) fn integer_rank(rows: &mut [Vec<i128>]) -> usize {
    let m = rows.len();
    if m == 0 {
        return 0;
    }
    let cols = rows[0].len();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, p);
        for r in 0..m {
            if r == rank || rows[r][c] == 0 {
                continue;
            }
            let (a, b) = (rows[rank][c], rows[r][c]);
            for k in 0..cols {
                rows[r][k] = rows[r][k] * a - rows[rank][k] * b;
            }
            let g = rows[r].iter().fold(0i128, |g, &x| num_integer::gcd(g, x));
            if g > 1 {
                rows[r].iter_mut().for_each(|x| *x /= g);
            }
        }
        rank += 1;
    }
    rank
}

/// A word in the simple reflections, letters are 1-based vertex indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn new(letters: impl Into<Vec<usize>>) -> Self {
        Word(letters.into())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        for l in &self.0 {
            write!(f, "s{l}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_small_matrices() {
        let mut m = vec![vec![1, 2], vec![2, 4]];
        assert_eq!(integer_rank(&mut m), 1);
        let mut m = vec![vec![0, 1, 0], vec![1, 0, 0], vec![1, 1, 0]];
        assert_eq!(integer_rank(&mut m), 2);
        let mut m: Vec<Vec<i128>> = vec![vec![0; 3]; 3];
        assert_eq!(integer_rank(&mut m), 0);
    }

    #[test]
    fn multiplication_composes_left_after_right() {
        // columns are images; (a*b)(x) = a(b(x))
        let a = GroupElement::from_rows(&[vec![0, 1], vec![1, 0]]);
        let b = GroupElement::from_rows(&[vec![1, 1], vec![0, 1]]);
        let x = Root::new([2, 3]);
        assert_eq!((&a * &b).apply(&x), a.apply(&b.apply(&x)));
    }

    #[test]
    fn word_display() {
        assert_eq!(Word::new([1, 2, 1]).to_string(), "s1s2s1");
        assert_eq!(Word::default().to_string(), "e");
    }
}
