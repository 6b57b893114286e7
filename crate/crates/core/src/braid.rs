//! Braid-group action on sequences of positive real roots.
//!
//! A [`Factorization`] `(β_1, …, β_m)` stands for the product
//! `s_{β_1} s_{β_2} ⋯ s_{β_m}`, read left to right. With this convention the
//! simple roots in reverse order, `(α_n, …, α_1)`, multiply to `C⁻¹`, and a
//! sequence of reflections `t_m ⋯ t_1 = C` in the opposite convention is just
//! the reversed factorization (see [`Factorization::reversed`]).
//!
//! The generator `σ_i` replaces `(β_i, β_{i+1})` by `(|s_{β_i}(β_{i+1})|, β_i)`;
//! its inverse replaces it by `(β_{i+1}, |s_{β_{i+1}}(β_i)|)`. Both keep the
//! product unchanged.

use crate::cartan::CartanData;
use crate::error::{Error, Result};
use crate::group::GroupElement;
use crate::root::Root;
use serde::{Serialize, Serializer};
use std::cell::OnceCell;
use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

/// One braid generator, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BraidMove {
    Sigma(usize),
    SigmaInv(usize),
}

impl BraidMove {
    pub fn inverse(self) -> BraidMove {
        match self {
            BraidMove::Sigma(i) => BraidMove::SigmaInv(i),
            BraidMove::SigmaInv(i) => BraidMove::Sigma(i),
        }
    }
}

impl fmt::Display for BraidMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BraidMove::Sigma(i) => write!(f, "s{i}"),
            BraidMove::SigmaInv(i) => write!(f, "s{i}^-1"),
        }
    }
}

impl Serialize for BraidMove {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        // +i for σ_i, -i for σ_i⁻¹
        match *self {
            BraidMove::Sigma(i) => s.serialize_i64(i as i64),
            BraidMove::SigmaInv(i) => s.serialize_i64(-(i as i64)),
        }
    }
}

/// Braid moves in the order they are applied.
pub type BraidWord = Vec<BraidMove>;

/// An ordered sequence of positive real roots.
#[derive(Clone)]
pub struct Factorization<'a> {
    cd: &'a CartanData,
    roots: Vec<Root>,
    product: OnceCell<GroupElement>,
}

impl PartialEq for Factorization<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.roots == other.roots
    }
}

impl Eq for Factorization<'_> {}

impl fmt::Debug for Factorization<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.roots).finish()
    }
}

impl fmt::Display for Factorization<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, r) in self.roots.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "]")
    }
}

impl Serialize for Factorization<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.roots.serialize(s)
    }
}

impl<'a> Factorization<'a> {
    /// Checks that every entry is a positive real root.
    pub fn new(cd: &'a CartanData, roots: Vec<Root>) -> Result<Self> {
        for r in &roots {
            if r.rank() != cd.rank() {
                return Err(Error::DimensionMismatch {
                    got: r.rank(),
                    expected: cd.rank(),
                });
            }
            if !r.is_positive() {
                return Err(Error::NotPositiveRoot(r.0.clone()));
            }
            if !cd.is_real_root(r)? {
                return Err(Error::NotRealRoot(r.0.clone()));
            }
        }
        Ok(Self::trusted(cd, roots))
    }

    pub(crate) fn trusted(cd: &'a CartanData, roots: Vec<Root>) -> Self {
        Factorization {
            cd,
            roots,
            product: OnceCell::new(),
        }
    }

    /// `(α_n, …, α_1)`, whose product is `C⁻¹`.
    pub fn simple_reversed(cd: &'a CartanData) -> Self {
        let n = cd.rank();
        Self::trusted(cd, (1..=n).rev().map(|i| Root::simple(n, i)).collect())
    }

    /// `(p_1, …, p_n)`, whose product is also `C⁻¹`.
    pub fn projective(cd: &'a CartanData) -> Self {
        Self::trusted(cd, cd.projective_roots())
    }

    pub fn cartan(&self) -> &'a CartanData {
        self.cd
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn into_roots(self) -> Vec<Root> {
        self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// `s_{β_1} ⋯ s_{β_m}`, computed on first use.
    pub fn product(&self) -> &GroupElement {
        self.product.get_or_init(|| {
            self.roots
                .iter()
                .fold(GroupElement::identity(self.cd.rank()), |g, r| {
                    &g * &self.cd.reflection_unchecked(r)
                })
        })
    }

    /// The same reflections read right to left; the product is inverted.
    pub fn reversed(&self) -> Self {
        Self::trusted(self.cd, self.roots.iter().rev().cloned().collect())
    }

    fn check_pair(&self, i: usize) -> Result<()> {
        if i == 0 || i + 1 > self.roots.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: self.roots.len().saturating_sub(1),
            });
        }
        Ok(())
    }

    /// `σ_i`.
    pub fn sigma(&self, i: usize) -> Result<Self> {
        self.check_pair(i)?;
        let mut roots = self.roots.clone();
        let (b, c) = (&self.roots[i - 1], &self.roots[i]);
        roots[i - 1] = self.cd.reflect_unchecked(b, c).abs();
        roots[i] = b.clone();
        Ok(self.with_same_product(roots))
    }

    /// `σ_i⁻¹`.
    pub fn sigma_inverse(&self, i: usize) -> Result<Self> {
        self.check_pair(i)?;
        let mut roots = self.roots.clone();
        let (b, c) = (&self.roots[i - 1], &self.roots[i]);
        roots[i - 1] = c.clone();
        roots[i] = self.cd.reflect_unchecked(c, b).abs();
        Ok(self.with_same_product(roots))
    }

    pub fn apply(&self, m: BraidMove) -> Result<Self> {
        match m {
            BraidMove::Sigma(i) => self.sigma(i),
            BraidMove::SigmaInv(i) => self.sigma_inverse(i),
        }
    }

    /// Applies the moves left to right.
    pub fn apply_word(&self, word: &[BraidMove]) -> Result<Self> {
        word.iter().try_fold(self.clone(), |f, &m| f.apply(m))
    }

    fn with_same_product(&self, roots: Vec<Root>) -> Self {
        let product = OnceCell::new();
        if let Some(p) = self.product.get() {
            let _ = product.set(p.clone());
        }
        Factorization {
            cd: self.cd,
            roots,
            product,
        }
    }

    /// Brings `β_i` to the front with `σ_1⁻¹ ⋯ σ_{i-1}⁻¹` (rightmost first).
    pub fn move_to_front(&self, i: usize) -> Result<(Self, BraidWord)> {
        if i == 0 || i > self.roots.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: self.roots.len(),
            });
        }
        let word: BraidWord = (1..i).rev().map(BraidMove::SigmaInv).collect();
        Ok((self.apply_word(&word)?, word))
    }

    /// Brings `β_i` to the back with `σ_i σ_{i+1} ⋯ σ_{m-1}`.
    pub fn move_to_back(&self, i: usize) -> Result<(Self, BraidWord)> {
        if i == 0 || i > self.roots.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: self.roots.len(),
            });
        }
        let word: BraidWord = (i..self.roots.len()).map(BraidMove::Sigma).collect();
        Ok((self.apply_word(&word)?, word))
    }
}

/// Every sequence of `m` positive roots whose reflections multiply to `target`.
///
/// Exhaustive depth-first search over `Φ₊^m`, pruned by reflection length: after
/// choosing `β_1` the remaining target `s_{β_1} g` must have reflection length
/// at most the number of free slots, with matching parity. The result is in
/// lexicographic order of positive-root indices.
pub fn enumerate_factorizations<'a>(
    cd: &'a CartanData,
    target: &GroupElement,
    m: usize,
) -> Result<Vec<Factorization<'a>>> {
    let roots = cd.positive_roots()?;
    let reflections: Vec<GroupElement> = roots.iter().map(|r| cd.reflection_unchecked(r)).collect();
    let mut out = Vec::new();
    let mut stack = Vec::with_capacity(m);
    search(&reflections, target, m, &mut stack, &mut out);
    Ok(out
        .into_iter()
        .map(|idx: Vec<usize>| {
            let f = Factorization::trusted(cd, idx.iter().map(|&k| roots[k].clone()).collect());
            let _ = f.product.set(target.clone());
            f
        })
        .collect())
}

fn search(
    reflections: &[GroupElement],
    target: &GroupElement,
    slots: usize,
    stack: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if slots == 0 {
        if target.is_identity() {
            out.push(stack.clone());
        }
        return;
    }
    for (k, s) in reflections.iter().enumerate() {
        let rest = s * target;
        let len = rest.fixed_codimension();
        if len < slots && len % 2 == (slots - 1) % 2 {
            stack.push(k);
            search(reflections, &rest, slots - 1, stack, out);
            stack.pop();
        }
    }
}

/// Limits for [`hurwitz_orbit`].
#[derive(Clone, Copy, Debug)]
pub struct OrbitOptions {
    /// Maximum number of braid moves from the base; required in infinite type.
    pub depth_limit: Option<usize>,
    /// Abort with [`Error::ResourceLimit`] past this many factorizations.
    pub max_size: usize,
    /// In finite type, also count all factorizations of the same product.
    pub count_factorizations: bool,
}

impl Default for OrbitOptions {
    fn default() -> Self {
        OrbitOptions {
            depth_limit: None,
            max_size: 2_000_000,
            count_factorizations: true,
        }
    }
}

/// Result of a Hurwitz-orbit search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitReport {
    pub base: Vec<Root>,
    pub orbit_size: usize,
    /// Number of factorizations with the same product and length; finite type only.
    pub factorization_count: Option<usize>,
    /// `orbit_size == factorization_count`, when both are known and the search was complete.
    pub transitive: Option<bool>,
    pub truncated: bool,
    pub depth_reached: usize,
    /// For every orbit element, a braid word taking the base to it.
    #[serde(serialize_with = "witness_list")]
    pub generator_witnesses: BTreeMap<Vec<Root>, BraidWord>,
}

fn witness_list<S: Serializer>(
    map: &BTreeMap<Vec<Root>, BraidWord>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Entry<'a> {
        roots: &'a [Root],
        braid_word: &'a [BraidMove],
    }
    s.collect_seq(
        map.iter()
            .map(|(roots, braid_word)| Entry { roots, braid_word }),
    )
}

impl OrbitReport {
    pub fn contains(&self, roots: &[Root]) -> bool {
        self.generator_witnesses.contains_key(roots)
    }
}

/// Breadth-first closure of `base` under `σ_i^{±1}`.
///
/// Generators are tried in the order `σ_1, σ_1⁻¹, σ_2, …`, so the report,
/// including the witness words, is deterministic.
pub fn hurwitz_orbit(base: &Factorization<'_>, options: OrbitOptions) -> Result<OrbitReport> {
    let cd = base.cartan();
    if !cd.is_finite_type() && options.depth_limit.is_none() {
        return Err(Error::DepthLimitRequired);
    }
    let m = base.len();
    let start = base.roots().to_vec();
    let mut parent: HashMap<Vec<Root>, Option<(Vec<Root>, BraidMove)>> = HashMap::new();
    parent.insert(start.clone(), None);
    let mut order = vec![start.clone()];
    let mut queue = VecDeque::from([(start, 0usize)]);
    let mut truncated = false;
    let mut depth_reached = 0;
    let mut overflow = false;

    'bfs: while let Some((cur, depth)) = queue.pop_front() {
        depth_reached = depth_reached.max(depth);
        if options.depth_limit.is_some_and(|d| depth >= d) {
            // Frontier element: only note whether the ball is closed here.
            if !truncated {
                let f = Factorization::trusted(cd, cur.clone());
                truncated = moves(m).any(|mv| {
                    let next = f.apply(mv).expect("index in range");
                    !parent.contains_key(next.roots())
                });
            }
            continue;
        }
        let f = Factorization::trusted(cd, cur.clone());
        for mv in moves(m) {
            let next = f.apply(mv)?.into_roots();
            if parent.contains_key(&next) {
                continue;
            }
            if parent.len() >= options.max_size {
                overflow = true;
                break 'bfs;
            }
            parent.insert(next.clone(), Some((cur.clone(), mv)));
            order.push(next.clone());
            queue.push_back((next, depth + 1));
        }
    }

    let mut witnesses = BTreeMap::new();
    for key in &order {
        let mut word = Vec::new();
        let mut k = key;
        while let Some(Some((prev, mv))) = parent.get(k) {
            word.push(*mv);
            k = prev;
        }
        word.reverse();
        witnesses.insert(key.clone(), word);
    }

    let complete = !truncated && !overflow;
    let factorization_count = if cd.is_finite_type() && options.count_factorizations && complete {
        Some(enumerate_factorizations(cd, base.product(), m)?.len())
    } else {
        None
    };
    let report = OrbitReport {
        base: base.roots().to_vec(),
        orbit_size: witnesses.len(),
        factorization_count,
        transitive: factorization_count.map(|c| c == witnesses.len()),
        truncated: truncated || overflow,
        depth_reached,
        generator_witnesses: witnesses,
    };
    if overflow {
        return Err(Error::ResourceLimit {
            limit: options.max_size,
            partial: Box::new(report),
        });
    }
    Ok(report)
}

fn moves(m: usize) -> impl Iterator<Item = BraidMove> {
    (1..m).flat_map(|i| [BraidMove::Sigma(i), BraidMove::SigmaInv(i)])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(v: &[i64]) -> Root {
        Root::new(v.to_vec())
    }

    fn a2() -> CartanData {
        CartanData::from_label("A2").unwrap()
    }

    #[test]
    fn sigma_a2() {
        let cd = a2();
        let f = Factorization::new(&cd, vec![r(&[1, 0]), r(&[0, 1])]).unwrap();
        let g = f.sigma(1).unwrap();
        assert_eq!(g.roots(), &[r(&[1, 1]), r(&[1, 0])]);
        assert_eq!(g.product(), f.product());
        let back = g.sigma_inverse(1).unwrap();
        assert_eq!(back, f);
        assert!(matches!(f.sigma(2), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(f.sigma(0), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn repeated_root_is_fixed() {
        let cd = a2();
        let f = Factorization::new(&cd, vec![r(&[1, 1]), r(&[1, 1])]).unwrap();
        assert_eq!(f.sigma(1).unwrap(), f);
    }

    #[test]
    fn rejects_bad_entries() {
        let cd = a2();
        assert!(matches!(
            Factorization::new(&cd, vec![r(&[-1, 0])]),
            Err(Error::NotPositiveRoot(_))
        ));
        assert!(matches!(
            Factorization::new(&cd, vec![r(&[2, 1])]),
            Err(Error::NotRealRoot(_))
        ));
    }

    #[test]
    fn move_to_front_examples() {
        let cd = a2();
        let f = Factorization::new(&cd, vec![r(&[1, 0]), r(&[0, 1])]).unwrap();
        let (g, w) = f.move_to_front(1).unwrap();
        assert_eq!(g, f);
        assert!(w.is_empty());
        let (g, w) = f.move_to_front(2).unwrap();
        assert_eq!(g.roots()[0], r(&[0, 1]));
        assert_eq!(w, vec![BraidMove::SigmaInv(1)]);
        assert_eq!(g.product(), f.product());
    }

    #[test]
    fn a2_factorizations_of_c() {
        let cd = a2();
        let c = cd.coxeter_element();
        let all = enumerate_factorizations(&cd, &c, 2).unwrap();
        let got: Vec<Vec<Root>> = all.iter().map(|f| f.roots().to_vec()).collect();
        // s1 s2, s2 s_{α1+α2}, s_{α1+α2} s1
        let mut want = vec![
            vec![r(&[1, 0]), r(&[0, 1])],
            vec![r(&[0, 1]), r(&[1, 1])],
            vec![r(&[1, 1]), r(&[1, 0])],
        ];
        want.sort();
        let mut got = got;
        got.sort();
        assert_eq!(got, want);
        assert!(enumerate_factorizations(&cd, &c, 1).unwrap().is_empty());
        let id = GroupElement::identity(2);
        let empty = enumerate_factorizations(&cd, &id, 0).unwrap();
        assert_eq!(empty.len(), 1);
        assert!(empty[0].is_empty());
    }

    #[test]
    fn a3_has_sixteen() {
        let cd = CartanData::from_label("A3").unwrap();
        let c = cd.coxeter_element();
        assert_eq!(enumerate_factorizations(&cd, &c, 3).unwrap().len(), 16);
    }

    #[test]
    fn a2_orbit() {
        let cd = a2();
        let base = Factorization::simple_reversed(&cd);
        assert_eq!(base.product(), &cd.coxeter_inverse());
        let rep = hurwitz_orbit(&base, OrbitOptions::default()).unwrap();
        assert_eq!(rep.orbit_size, 3);
        assert_eq!(rep.factorization_count, Some(3));
        assert_eq!(rep.transitive, Some(true));
        assert!(!rep.truncated);
        for (roots, word) in &rep.generator_witnesses {
            assert_eq!(base.apply_word(word).unwrap().roots(), roots.as_slice());
        }
    }

    #[test]
    fn singleton_orbit() {
        let cd = a2();
        let f = Factorization::new(&cd, vec![r(&[1, 1])]).unwrap();
        let rep = hurwitz_orbit(&f, OrbitOptions::default()).unwrap();
        assert_eq!(rep.orbit_size, 1);
    }

    #[test]
    fn infinite_type_needs_depth() {
        let kr = CartanData::from_quiver(2, &[(2, 1, 2)]).unwrap();
        let base = Factorization::simple_reversed(&kr);
        assert!(matches!(
            hurwitz_orbit(&base, OrbitOptions::default()),
            Err(Error::DepthLimitRequired)
        ));
        let opts = OrbitOptions {
            depth_limit: Some(3),
            ..Default::default()
        };
        let rep = hurwitz_orbit(&base, opts).unwrap();
        assert!(rep.truncated);
        assert_eq!(rep.orbit_size, 7);
        assert_eq!(rep.factorization_count, None);
    }

    #[test]
    fn resource_limit_carries_partial() {
        let cd = CartanData::from_label("A4").unwrap();
        let base = Factorization::simple_reversed(&cd);
        let opts = OrbitOptions {
            max_size: 10,
            ..Default::default()
        };
        match hurwitz_orbit(&base, opts) {
            Err(Error::ResourceLimit { limit, partial }) => {
                assert_eq!(limit, 10);
                assert_eq!(partial.orbit_size, 10);
                assert!(partial.truncated);
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
