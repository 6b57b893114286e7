//! Integer vectors in the simple-root basis.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// A vector of the root lattice, written in the basis of simple roots.
///
/// Nothing here forces the vector to actually be a root; the classification
/// helpers only look at signs. Use [`CartanData::is_real_root`] for that.
///
/// [`CartanData::is_real_root`]: crate::CartanData::is_real_root
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn new(coords: impl Into<Vec<i64>>) -> Self {
        Root(coords.into())
    }

    pub fn zero(rank: usize) -> Self {
        Root(vec![0; rank])
    }

    /// The simple root `α_i` for a 1-based vertex `i`.
    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i - 1] = 1;
        Root(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c <= 0)
    }

    /// `|β|`: the positive one of `±β`.
    pub fn abs(&self) -> Root {
        if self.is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    /// The vertex `i` if this is `±α_i`.
    pub fn simple_index(&self) -> Option<usize> {
        let mut found = None;
        for (k, &c) in self.0.iter().enumerate() {
            match c {
                0 => {}
                1 | -1 if found.is_none() => found = Some(k + 1),
                _ => return None,
            }
        }
        found
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Neg for Root {
    type Output = Root;
    fn neg(self) -> Root {
        Root(self.0.into_iter().map(|c| -c).collect())
    }
}

impl Add for &Root {
    type Output = Root;
    fn add(self, rhs: &Root) -> Root {
        Root(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Root {
    type Output = Root;
    fn sub(self, rhs: &Root) -> Root {
        Root(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl From<Vec<i64>> for Root {
    fn from(v: Vec<i64>) -> Self {
        Root(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_classes() {
        assert!(Root::new([1, 0, 2]).is_positive());
        assert!(Root::new([0, -1, -1]).is_negative());
        assert!(!Root::new([1, -1]).is_positive());
        assert!(!Root::new([1, -1]).is_negative());
        assert!(!Root::zero(3).is_positive());
        assert_eq!(Root::new([-1, -2]).abs(), Root::new([1, 2]));
    }

    #[test]
    fn simple_index() {
        assert_eq!(Root::simple(4, 3).simple_index(), Some(3));
        assert_eq!((-Root::simple(4, 2)).simple_index(), Some(2));
        assert_eq!(Root::new([1, 1]).simple_index(), None);
        assert_eq!(Root::new([2, 0]).simple_index(), None);
    }
}
