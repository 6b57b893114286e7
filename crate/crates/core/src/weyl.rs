//! Reflection arithmetic on the root lattice of a [`CartanData`].

use crate::cartan::CartanData;
use crate::error::{Error, Result};
use crate::group::{GroupElement, Word};
use crate::root::Root;
use std::collections::{BTreeSet, VecDeque};

impl CartanData {
    fn check_vertex(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank() {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: self.rank(),
            });
        }
        Ok(())
    }

    fn check_vector(&self, x: &Root) -> Result<()> {
        if x.rank() != self.rank() {
            return Err(Error::DimensionMismatch {
                got: x.rank(),
                expected: self.rank(),
            });
        }
        Ok(())
    }

    /// `2(x, y) = xᵀ diag(d) A y`: twice the invariant form, as an integer.
    pub fn form2(&self, x: &Root, y: &Root) -> i64 {
        let n = self.rank();
        let d = self.symmetrizer();
        let mut total = 0;
        for i in 0..n {
            if x.0[i] == 0 {
                continue;
            }
            let row: i64 = (0..n).map(|j| self.cartan()[i][j] * y.0[j]).sum();
            total += x.0[i] * d[i] * row;
        }
        total
    }

    /// `(β, β)` in the normalization where `(α_i, α_i) = d_i`.
    pub fn norm(&self, x: &Root) -> i64 {
        self.form2(x, x) / 2
    }

    /// `s_i(x) = x - (Σ_j a_ij x_j) α_i`.
    pub fn reflect_simple(&self, i: usize, x: &Root) -> Root {
        let row = &self.cartan()[i - 1];
        let c: i64 = row.iter().zip(&x.0).map(|(a, b)| a * b).sum();
        let mut out = x.clone();
        out.0[i - 1] -= c;
        out
    }

    pub fn simple_reflection(&self, i: usize) -> Result<GroupElement> {
        self.check_vertex(i)?;
        let n = self.rank();
        let columns: Vec<Root> = (1..=n)
            .map(|j| self.reflect_simple(i, &Root::simple(n, j)))
            .collect();
        Ok(GroupElement::from_columns(&columns))
    }

    /// `s_β(x)` for a root `β` already known to be real.
    pub(crate) fn reflect_unchecked(&self, beta: &Root, x: &Root) -> Root {
        let num = 2 * self.form2(beta, x);
        let den = self.form2(beta, beta);
        debug_assert!(den != 0 && num % den == 0, "{beta} is not a real root");
        let c = num / den;
        Root(
            x.0.iter()
                .zip(&beta.0)
                .map(|(xi, bi)| xi - c * bi)
                .collect(),
        )
    }

    /// `s_β(x) = x - (2(β, x) / (β, β)) β`.
    pub fn reflect_in_root(&self, beta: &Root, x: &Root) -> Result<Root> {
        self.check_vector(beta)?;
        self.check_vector(x)?;
        if !self.is_real_root(beta)? {
            return Err(Error::NotRealRoot(beta.0.clone()));
        }
        let (num, den) = (2 * self.form2(beta, x), self.form2(beta, beta));
        if num % den != 0 {
            return Err(Error::NotRealRoot(beta.0.clone()));
        }
        Ok(self.reflect_unchecked(beta, x))
    }

    /// Matrix of the reflection `s_β`.
    pub fn reflection(&self, beta: &Root) -> Result<GroupElement> {
        self.check_vector(beta)?;
        if !self.is_real_root(beta)? {
            return Err(Error::NotRealRoot(beta.0.clone()));
        }
        Ok(self.reflection_unchecked(beta))
    }

    pub(crate) fn reflection_unchecked(&self, beta: &Root) -> GroupElement {
        let n = self.rank();
        let columns: Vec<Root> = (1..=n)
            .map(|j| self.reflect_unchecked(beta, &Root::simple(n, j)))
            .collect();
        GroupElement::from_columns(&columns)
    }

    /// `|w(β)|`; its reflection is `w s_β w⁻¹`.
    pub fn conjugate_reflection(&self, w: &GroupElement, beta: &Root) -> Result<Root> {
        self.check_vector(beta)?;
        if !beta.is_positive() {
            return Err(Error::NotPositiveRoot(beta.0.clone()));
        }
        if !self.is_real_root(beta)? {
            return Err(Error::NotRealRoot(beta.0.clone()));
        }
        Ok(w.apply(beta).abs())
    }

    /// Product of simple reflections in letter order.
    pub fn word_to_element(&self, word: &Word) -> Result<GroupElement> {
        let mut g = GroupElement::identity(self.rank());
        for &l in word.letters() {
            g = &g * &self.simple_reflection(l)?;
        }
        Ok(g)
    }

    /// `C = s_1 s_2 ⋯ s_n`.
    pub fn coxeter_element(&self) -> GroupElement {
        self.word_to_element(&Word((1..=self.rank()).collect()))
            .expect("letters in range")
    }

    /// `C⁻¹ = s_n ⋯ s_1`.
    pub fn coxeter_inverse(&self) -> GroupElement {
        self.word_to_element(&Word((1..=self.rank()).rev().collect()))
            .expect("letters in range")
    }

    /// Reduced word found by right descents.
    ///
    /// Repeatedly picks the smallest `i` with `w(α_i) < 0` and replaces `w` by
    /// `w s_i`; this terminates for every group element, in any type.
    pub fn reduced_word(&self, w: &GroupElement) -> Word {
        let n = self.rank();
        let mut cur = w.clone();
        let mut letters = Vec::new();
        while let Some(i) = (1..=n).find(|&i| cur.column(i).is_negative()) {
            cur = &cur * &self.simple_reflection(i).expect("in range");
            letters.push(i);
        }
        debug_assert!(cur.is_identity());
        letters.reverse();
        Word(letters)
    }

    /// Coxeter length.
    pub fn length(&self, w: &GroupElement) -> usize {
        self.reduced_word(w).len()
    }

    pub fn inverse(&self, w: &GroupElement) -> GroupElement {
        self.word_to_element(&self.reduced_word(w).reversed())
            .expect("letters in range")
    }

    pub fn is_reduced(&self, word: &Word) -> Result<bool> {
        Ok(self.length(&self.word_to_element(word)?) == word.len())
    }

    /// `p_i = s_1 ⋯ s_{i-1}(α_i)`, the roots sent negative by `C⁻¹`.
    pub fn projective_roots(&self) -> Vec<Root> {
        let n = self.rank();
        (1..=n)
            .map(|i| {
                let mut x = Root::simple(n, i);
                for k in (1..i).rev() {
                    x = self.reflect_simple(k, &x);
                }
                x
            })
            .collect()
    }

    /// `-C⁻¹ p_k`, the dimension vectors of the indecomposable injectives.
    pub fn injective_roots(&self) -> Vec<Root> {
        let cinv = self.coxeter_inverse();
        self.projective_roots()
            .iter()
            .map(|p| -cinv.apply(p))
            .collect()
    }

    /// All positive roots, ordered by height and then coordinates.
    pub fn positive_roots(&self) -> Result<Vec<Root>> {
        if !self.is_finite_type() {
            return Err(Error::InfiniteType);
        }
        let n = self.rank();
        let mut seen: BTreeSet<Root> = (1..=n).map(|i| Root::simple(n, i)).collect();
        let mut queue: VecDeque<Root> = seen.iter().cloned().collect();
        while let Some(beta) = queue.pop_front() {
            for i in 1..=n {
                let gamma = self.reflect_simple(i, &beta);
                if gamma.is_positive() && seen.insert(gamma.clone()) {
                    queue.push_back(gamma);
                }
            }
        }
        let mut roots: Vec<Root> = seen.into_iter().collect();
        roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));
        Ok(roots)
    }

    /// The longest element, built by right multiplication while the length grows.
    pub fn longest_element(&self) -> Result<GroupElement> {
        if !self.is_finite_type() {
            return Err(Error::InfiniteType);
        }
        let n = self.rank();
        let mut w = GroupElement::identity(n);
        while let Some(i) = (1..=n).find(|&i| w.column(i).is_positive()) {
            w = &w * &self.simple_reflection(i)?;
        }
        Ok(w)
    }

    /// Reflection length; in finite type this is `rank(w - 1)`.
    pub fn reflection_length(&self, w: &GroupElement) -> Result<usize> {
        if !self.is_finite_type() {
            return Err(Error::InfiniteType);
        }
        Ok(w.fixed_codimension())
    }

    /// Writes a real root as `w(α_i)`, returning the descent word and `i`.
    ///
    /// Returns `None` when `β` is not a real root. The word `u` satisfies
    /// `β = ±u(α_i)` with `u` read in letter order.
    pub fn real_root_descent(&self, beta: &Root) -> Result<Option<(Word, usize)>> {
        self.check_vector(beta)?;
        if beta.is_zero() {
            return Err(Error::ZeroVector);
        }
        let mut cur = beta.abs();
        if !cur.is_positive() {
            return Ok(None);
        }
        let mut letters = Vec::new();
        loop {
            if let Some(i) = cur.simple_index() {
                return Ok(Some((Word(letters), i)));
            }
            let n = self.rank();
            let lowering = (1..=n).find(|&i| {
                let row = &self.cartan()[i - 1];
                row.iter().zip(&cur.0).map(|(a, b)| a * b).sum::<i64>() > 0
            });
            let Some(i) = lowering else {
                return Ok(None);
            };
            cur = self.reflect_simple(i, &cur);
            if !cur.is_positive() {
                return Ok(None);
            }
            letters.push(i);
        }
    }

    /// Real-root test.
    ///
    /// The primary check is the form: `(β, β)` must equal some `(α_i, α_i)`.
    /// It is confirmed by descending `β` to a simple root through height-lowering
    /// simple reflections.
    pub fn is_real_root(&self, beta: &Root) -> Result<bool> {
        self.check_vector(beta)?;
        if beta.is_zero() {
            return Err(Error::ZeroVector);
        }
        let norm = self.norm(beta);
        if !self.symmetrizer().contains(&norm) {
            return Ok(false);
        }
        Ok(self.real_root_descent(beta)?.is_some())
    }
}
