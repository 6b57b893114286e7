//! Adapted reduced words for `w₀`, the word for `w₁ = C w₀`, its root
//! sequence, and deletions of `n` letters from it.
//!
//! Positions are 1-based throughout. The word `j = (j_1, …, j_{n+ν})` starts
//! with `1, 2, …, n` followed by an adapted reduced word for `w₀`, and
//! `α^t = s_{j_1} ⋯ s_{j_{t-1}}(α_{j_t})`.

use crate::cartan::CartanData;
use crate::error::{Error, Result};
use crate::group::{GroupElement, Word};
use crate::root::Root;
use serde::Serialize;
use std::collections::BTreeSet;

/// The word `j` and root sequence `α` of a finite-type root system.
#[derive(Clone, Debug)]
pub struct AdaptedFrame {
    cd: CartanData,
    nu: usize,
    j: Word,
    alpha: Vec<Root>,
    w0: GroupElement,
    w1: GroupElement,
    coxeter: GroupElement,
    rho: Vec<usize>,
    /// Reflections in `|α^t|`, index `t - 1`.
    reflections: Vec<GroupElement>,
    simple: Vec<GroupElement>,
}

/// Sorted positions `t_1 < ⋯ < t_n` in `1..=ν+n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Selection(Vec<usize>);

impl Selection {
    pub fn positions(&self) -> &[usize] {
        &self.0
    }

    pub fn contains(&self, t: usize) -> bool {
        self.0.binary_search(&t).is_ok()
    }

    /// Slot of position `t`, 1-based.
    pub fn slot_of(&self, t: usize) -> Option<usize> {
        self.0.binary_search(&t).ok().map(|k| k + 1)
    }

    /// Replaces slot `k` (1-based) by `t` and re-sorts.
    pub(crate) fn replace(&self, k: usize, t: usize) -> Selection {
        let mut v = self.0.clone();
        v[k - 1] = t;
        v.sort_unstable();
        Selection(v)
    }
}

impl std::fmt::Display for Selection {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|t| t.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A word with some letters struck out; positions are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BarredWord {
    pub letters: Vec<usize>,
    pub deleted: Vec<bool>,
}

impl BarredWord {
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letter(&self, p: usize) -> usize {
        self.letters[p - 1]
    }

    pub fn is_deleted(&self, p: usize) -> bool {
        self.deleted[p - 1]
    }

    /// The letters that survive, in order.
    pub fn kept(&self) -> Word {
        Word(
            self.letters
                .iter()
                .zip(&self.deleted)
                .filter(|(_, d)| !**d)
                .map(|(l, _)| *l)
                .collect(),
        )
    }
}

/// Vertices carry a position and a level (the letter at that position).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeveledQuiver {
    pub vertices: Vec<(usize, usize)>,
    pub arrows: Vec<(usize, usize)>,
}

impl LeveledQuiver {
    pub fn level_of(&self, position: usize) -> Option<usize> {
        self.vertices.iter().find(|v| v.0 == position).map(|v| v.1)
    }

    pub fn level(&self, level: usize) -> Vec<usize> {
        self.vertices
            .iter()
            .filter(|v| v.1 == level)
            .map(|v| v.0)
            .collect()
    }
}

impl AdaptedFrame {
    /// Builds the frame and checks every structural invariant.
    pub fn build(cd: &CartanData) -> Result<Self> {
        if !cd.is_finite_type() {
            return Err(Error::InfiniteType);
        }
        let n = cd.rank();
        let c = cd.coxeter_element();
        let injectives = cd.injective_roots();

        // Each projective's τ⁻¹-orbit ends at an injective. Listing modules
        // by distance to that injective (farthest first) and then by the
        // injective's index gives an order compatible with AR arrows in
        // which the injective slice comes last, in vertex order.
        let mut entries: Vec<(usize, usize, usize)> = Vec::new(); // (steps left, injective, vertex)
        for (i, p) in cd.projective_roots().into_iter().enumerate() {
            let mut orbit = vec![p];
            loop {
                let next = c.apply(orbit.last().unwrap());
                if !next.is_positive() {
                    break;
                }
                orbit.push(next);
            }
            let last = orbit.last().unwrap();
            let k = injectives.iter().position(|x| x == last).ok_or_else(|| {
                Error::FrameInvariant(format!(
                    "orbit of P({}) does not end at an injective",
                    i + 1
                ))
            })?;
            let len = orbit.len();
            entries.extend((0..len).map(|m| (len - 1 - m, k + 1, i + 1)));
        }
        entries.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let w0_word: Vec<usize> = entries.iter().map(|e| e.2).collect();
        let nu = w0_word.len();

        let simple: Vec<GroupElement> = (1..=n).map(|i| cd.simple_reflection(i).unwrap()).collect();
        let j: Vec<usize> = (1..=n).chain(w0_word.iter().copied()).collect();
        let mut g = GroupElement::identity(n);
        let mut alpha = Vec::with_capacity(n + nu);
        for &l in &j {
            alpha.push(g.column(l));
            g = &g * &simple[l - 1];
        }
        let w1 = g;
        let w0 = cd.word_to_element(&Word(w0_word.clone()))?;
        let reflections = alpha
            .iter()
            .map(|a| cd.reflection_unchecked(&a.abs()))
            .collect();

        let mut rho = Vec::with_capacity(n);
        for i in 1..=n {
            let conj = &(&w0 * &simple[i - 1]) * &w0;
            let r = simple
                .iter()
                .position(|s| *s == conj)
                .ok_or_else(|| Error::FrameInvariant(format!("w0 s{i} w0 is not simple")))?;
            rho.push(r + 1);
        }

        let frame = AdaptedFrame {
            cd: cd.clone(),
            nu,
            j: Word(j),
            alpha,
            w0,
            w1,
            coxeter: c,
            rho,
            reflections,
            simple,
        };
        frame.check_invariants()?;
        Ok(frame)
    }

    fn check_invariants(&self) -> Result<()> {
        let cd = &self.cd;
        let (n, nu) = (self.rank(), self.nu);
        let fail = |m: &str| Err(Error::FrameInvariant(m.to_string()));
        let positive = cd.positive_roots()?;
        if positive.len() != nu {
            return fail("w0 word length differs from the number of positive roots");
        }
        if self.w0 != cd.longest_element()? || cd.length(&self.w0) != nu {
            return fail("w0 word is not a reduced word for the longest element");
        }
        if self.w1 != &self.coxeter * &self.w0 {
            return fail("w1 differs from C w0");
        }
        let first: BTreeSet<&Root> = self.alpha[..nu].iter().collect();
        if first.len() != nu || first.iter().any(|r| !r.is_positive()) {
            return fail("alpha^1..alpha^nu is not a permutation of the positive roots");
        }
        let projectives = cd.projective_roots();
        let injectives = cd.injective_roots();
        for k in 0..n {
            if self.alpha[k] != projectives[k] {
                return fail("alpha^k differs from dim P(k)");
            }
            if self.alpha[nu + k] != -projectives[k].clone() {
                return fail("alpha^(nu+k) differs from -dim P(k)");
            }
            // roots of the w0 word alone: beta_u = C⁻¹ alpha^(n+u)
            let beta = cd.coxeter_inverse().apply(&self.alpha[nu + k]);
            if beta != injectives[k] {
                return fail("w0 word does not end with the injectives in vertex order");
            }
            if self.j.0[nu + k] != self.rho[k] {
                return fail("last n letters of w0 word are not rho(1..n)");
            }
        }
        Ok(())
    }

    pub fn cartan(&self) -> &CartanData {
        &self.cd
    }

    pub fn rank(&self) -> usize {
        self.cd.rank()
    }

    pub fn nu(&self) -> usize {
        self.nu
    }

    /// `ν + n`, the length of the word for `w₁`.
    pub fn len(&self) -> usize {
        self.j.len()
    }

    pub fn is_empty(&self) -> bool {
        self.j.is_empty()
    }

    pub fn j_sequence(&self) -> &Word {
        &self.j
    }

    /// Letter `j_t`.
    pub fn letter(&self, t: usize) -> usize {
        self.j.0[t - 1]
    }

    /// The adapted reduced word for `w₀`.
    pub fn w0_word(&self) -> Word {
        Word(self.j.0[self.rank()..].to_vec())
    }

    pub fn alpha_sequence(&self) -> &[Root] {
        &self.alpha
    }

    /// `α^t`.
    pub fn alpha(&self, t: usize) -> &Root {
        &self.alpha[t - 1]
    }

    pub fn w0(&self) -> &GroupElement {
        &self.w0
    }

    pub fn w1(&self) -> &GroupElement {
        &self.w1
    }

    pub fn coxeter(&self) -> &GroupElement {
        &self.coxeter
    }

    /// `ρ(i)` with `w₀ s_i w₀ = s_{ρ(i)}`, index `i - 1`.
    pub fn rho(&self) -> &[usize] {
        &self.rho
    }

    pub(crate) fn simple(&self, i: usize) -> &GroupElement {
        &self.simple[i - 1]
    }

    /// Reflection in `|α^t|`.
    pub fn reflection_at(&self, t: usize) -> &GroupElement {
        &self.reflections[t - 1]
    }

    pub fn selection(&self, positions: &[usize]) -> Result<Selection> {
        let n = self.rank();
        if positions.len() != n {
            return Err(Error::InvalidSelection(format!(
                "expected {n} positions, got {}",
                positions.len()
            )));
        }
        let mut v = positions.to_vec();
        v.sort_unstable();
        if v.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidSelection("repeated position".into()));
        }
        if let Some(&t) = v.iter().find(|&&t| t == 0 || t > self.len()) {
            return Err(Error::InvalidSelection(format!(
                "position {t} outside 1..={}",
                self.len()
            )));
        }
        Ok(Selection(v))
    }

    /// Every `n`-subset of positions, in lexicographic order.
    pub fn all_selections(&self) -> impl Iterator<Item = Selection> + '_ {
        use itertools::Itertools;
        (1..=self.len()).combinations(self.rank()).map(Selection)
    }

    /// The projective positions `(1, …, n)`.
    pub fn initial_selection(&self) -> Selection {
        Selection((1..=self.rank()).collect())
    }

    pub fn barred(&self, sel: &Selection) -> BarredWord {
        BarredWord {
            letters: self.j.0.clone(),
            deleted: (1..=self.len()).map(|t| sel.contains(t)).collect(),
        }
    }

    /// `w^δ(t_1, …, t_n)`.
    pub fn deleted_word(&self, sel: &Selection) -> Word {
        self.barred(sel).kept()
    }

    pub fn deleted_element(&self, sel: &Selection) -> GroupElement {
        let mut g = GroupElement::identity(self.rank());
        for t in 1..=self.len() {
            if !sel.contains(t) {
                g = &g * self.simple(self.letter(t));
            }
        }
        g
    }

    /// Condition (4): the deleted word is a reduced word for `w₀`.
    ///
    /// It always has `ν` letters, so this is just a product comparison.
    pub fn is_reduced_w0(&self, sel: &Selection) -> bool {
        self.deleted_element(sel) == self.w0
    }

    /// Condition (3): `s_{α^{t_n}} ⋯ s_{α^{t_1}} = C`.
    pub fn condition3(&self, sel: &Selection) -> bool {
        let g = sel
            .positions()
            .iter()
            .rev()
            .fold(GroupElement::identity(self.rank()), |g, &t| {
                &g * self.reflection_at(t)
            });
        g == self.coxeter
    }

    /// `(s_{α^{t_1}} ⋯ s_{α^{t_n}}) w₁ = w^δ(t_1, …, t_n)`, which holds for
    /// every selection.
    pub fn deleted_word_identity(&self, sel: &Selection) -> bool {
        let g = sel
            .positions()
            .iter()
            .fold(GroupElement::identity(self.rank()), |g, &t| {
                &g * self.reflection_at(t)
            });
        &g * &self.w1 == self.deleted_element(sel)
    }

    /// `copies` blocks; block `c` (from 0) carries the letters `ρ^c(j_t)` and
    /// the same deletions as the first block.
    pub fn long_word(&self, sel: &Selection, copies: usize) -> BarredWord {
        let len = self.len();
        let mut letters = Vec::with_capacity(copies * len);
        let mut deleted = Vec::with_capacity(copies * len);
        let mut block = self.j.0.clone();
        for _ in 0..copies {
            letters.extend_from_slice(&block);
            deleted.extend((1..=len).map(|t| sel.contains(t)));
            block = block.iter().map(|&l| self.rho[l - 1]).collect();
        }
        BarredWord { letters, deleted }
    }

    /// For each `t_i`, the next undeleted position of the long word carrying
    /// the letter `j_{t_i}`.
    pub fn projective_positions(&self, sel: &Selection) -> Vec<(usize, usize)> {
        let mut copies = 2;
        loop {
            let lw = self.long_word(sel, copies);
            let found: Option<Vec<(usize, usize)>> = sel
                .positions()
                .iter()
                .map(|&t| {
                    let l = self.letter(t);
                    (t + 1..=lw.len())
                        .find(|&p| !lw.is_deleted(p) && lw.letter(p) == l)
                        .map(|p| (t, p))
                })
                .collect();
            if let Some(v) = found {
                return v;
            }
            copies += 1;
        }
    }

    /// The quiver read off the word: one vertex per undeleted position at
    /// the level of its letter, arrows between consecutive occurrences of
    /// adjacent letters, and the arrows that wrap around through the next
    /// `ρ`-twisted block.
    pub fn ar_quiver_from_word(&self, sel: &Selection) -> LeveledQuiver {
        let len = self.len();
        let lw = self.long_word(sel, 2);
        let vertices: Vec<(usize, usize)> = (1..=len)
            .filter(|&t| !sel.contains(t))
            .map(|t| (t, self.letter(t)))
            .collect();
        let mut arrows = Vec::new();
        for &(a, i) in &vertices {
            for j in self.cd.neighbours(i) {
                let Some(b) = (a + 1..=lw.len()).find(|&p| lw.letter(p) == j) else {
                    continue;
                };
                if (a + 1..b).any(|p| lw.letter(p) == i) {
                    continue;
                }
                let target = (b - 1) % len + 1;
                if !sel.contains(target) && target != a {
                    arrows.push((a, target));
                }
            }
        }
        arrows.sort_unstable();
        arrows.dedup();
        LeveledQuiver { vertices, arrows }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frame(label: &str) -> AdaptedFrame {
        AdaptedFrame::build(&CartanData::from_label(label).unwrap()).unwrap()
    }

    #[test]
    fn a2_frame() {
        let f = frame("A2");
        assert_eq!(f.j_sequence().letters(), &[1, 2, 1, 2, 1]);
        let alpha: Vec<Vec<i64>> = f.alpha_sequence().iter().map(|r| r.0.clone()).collect();
        assert_eq!(
            alpha,
            vec![
                vec![1, 0],
                vec![1, 1],
                vec![0, 1],
                vec![-1, 0],
                vec![-1, -1]
            ]
        );
    }

    #[test]
    fn a4_w0_word() {
        let f = frame("A4");
        assert_eq!(f.w0_word().letters(), &[1, 2, 1, 3, 2, 1, 4, 3, 2, 1]);
        assert_eq!(f.rho(), &[4, 3, 2, 1]);
    }

    #[test]
    fn all_types_build() {
        for t in [
            "A1", "A5", "B3", "C4", "D4", "D5", "E6", "E7", "E8", "F4", "G2",
        ] {
            frame(t);
        }
    }

    #[test]
    fn a2_clusters() {
        let f = frame("A2");
        let got: Vec<Vec<usize>> = f
            .all_selections()
            .filter(|s| f.is_reduced_w0(s))
            .map(|s| s.positions().to_vec())
            .collect();
        assert_eq!(
            got,
            vec![vec![1, 2], vec![1, 5], vec![2, 3], vec![3, 4], vec![4, 5]]
        );
        let s = f.selection(&[1, 5]).unwrap();
        assert_eq!(f.deleted_word(&s).letters(), &[2, 1, 2]);
        let s = f.selection(&[1, 3]).unwrap();
        assert!(!f.condition3(&s));
    }

    #[test]
    fn selection_validation() {
        let f = frame("A2");
        assert!(f.selection(&[1]).is_err());
        assert!(f.selection(&[2, 2]).is_err());
        assert!(f.selection(&[0, 1]).is_err());
        assert!(f.selection(&[1, 6]).is_err());
        assert_eq!(f.selection(&[3, 1]).unwrap().positions(), &[1, 3]);
    }

    #[test]
    fn a4_projective_positions() {
        let f = frame("A4");
        let s = f.selection(&[1, 4, 7, 9]).unwrap();
        assert_eq!(
            f.projective_positions(&s),
            vec![(1, 5), (4, 11), (7, 10), (9, 13)]
        );
        let lw = f.long_word(&s, 2);
        assert_eq!(lw.kept().letters()[10..], [3, 2, 4, 3, 2, 4, 1, 2, 3, 4]);
    }

    #[test]
    fn a4_word_quiver() {
        let f = frame("A4");
        let s = f.selection(&[1, 4, 7, 9]).unwrap();
        let q = f.ar_quiver_from_word(&s);
        assert_eq!(q.vertices.len(), 10);
        assert_eq!(q.level(2), vec![2, 6, 13]);
        assert!(q.arrows.contains(&(13, 2)));
        assert!(q.arrows.contains(&(14, 3)));
    }

    #[test]
    fn a2_word_quiver() {
        let f = frame("A2");
        let q = f.ar_quiver_from_word(&f.selection(&[1, 2]).unwrap());
        assert_eq!(q.vertices, vec![(3, 1), (4, 2), (5, 1)]);
        assert_eq!(q.arrows, vec![(3, 4), (4, 5)]);
    }
}
