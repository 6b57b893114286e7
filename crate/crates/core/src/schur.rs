//! Prefixes of the Coxeter element in absolute order, and real Schur roots.
//!
//! A reflection `s_β` is a prefix of `C` when some factorization
//! `C = t_1 t_2 ⋯ t_n` into reflections has `t_1 = s_β`. Witnesses are
//! returned in that form: a [`Factorization`] with product `C` and first
//! entry `β`.

use crate::braid::{enumerate_factorizations, BraidMove, Factorization};
use crate::cartan::CartanData;
use crate::error::{Error, Result};
use crate::group::GroupElement;
use crate::rep::RepData;
use crate::root::Root;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PrefixStatus {
    Yes,
    No,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrefixVerdict {
    pub status: PrefixStatus,
    /// Roots of a factorization of `C` starting with `β`.
    pub witness_roots: Option<Vec<Root>>,
    /// Braid moves used by the search; 0 for exhaustive enumeration.
    pub depth_used: usize,
}

/// Cap on the number of factorizations visited by the bounded search.
const SEARCH_CAP: usize = 1_000_000;

/// Default search depth in infinite type.
pub fn default_depth(cd: &CartanData) -> usize {
    10 * cd.rank()
}

/// Decides whether `s_β` is a prefix of `C`.
///
/// In finite type every length-`n` factorization is enumerated and the answer
/// is exact. Otherwise the braid orbit of `(α_n, …, α_1)` is explored breadth
/// first up to `depth` moves, and the answer is `Yes` or `Unknown`.
pub fn prefix_test(cd: &CartanData, beta: &Root, depth: Option<usize>) -> Result<PrefixVerdict> {
    if !cd.is_real_root(beta)? {
        return Err(Error::NotRealRoot(beta.0.clone()));
    }
    if !beta.is_positive() {
        return Err(Error::NotPositiveRoot(beta.0.clone()));
    }
    let c = cd.coxeter_element();
    if cd.is_finite_type() {
        let found = enumerate_factorizations(cd, &c, cd.rank())?
            .into_iter()
            .find(|f| f.roots()[0] == *beta);
        return Ok(match found {
            Some(f) => PrefixVerdict {
                status: PrefixStatus::Yes,
                witness_roots: Some(f.into_roots()),
                depth_used: 0,
            },
            None => PrefixVerdict {
                status: PrefixStatus::No,
                witness_roots: None,
                depth_used: 0,
            },
        });
    }

    let limit = depth.unwrap_or_else(|| default_depth(cd));
    let base = Factorization::simple_reversed(cd);
    let m = base.len();
    let mut seen: HashSet<Vec<Root>> = HashSet::from([base.roots().to_vec()]);
    let mut queue = VecDeque::from([(base.into_roots(), 0usize)]);
    let mut reached = 0;
    while let Some((roots, d)) = queue.pop_front() {
        reached = d;
        if let Some(i) = roots.iter().position(|r| r == beta) {
            // move β to the end of the C⁻¹ factorization, then read backwards
            let (moved, _) = Factorization::trusted(cd, roots).move_to_back(i + 1)?;
            let witness = moved.reversed();
            if witness.product() != &c || witness.roots()[0] != *beta {
                return Err(Error::BadWitness);
            }
            return Ok(PrefixVerdict {
                status: PrefixStatus::Yes,
                witness_roots: Some(witness.into_roots()),
                depth_used: d,
            });
        }
        if d >= limit || seen.len() >= SEARCH_CAP {
            continue;
        }
        let f = Factorization::trusted(cd, roots);
        for i in 1..m {
            for mv in [BraidMove::Sigma(i), BraidMove::SigmaInv(i)] {
                let next = f.apply(mv)?.into_roots();
                if seen.insert(next.clone()) {
                    queue.push_back((next, d + 1));
                }
            }
        }
    }
    Ok(PrefixVerdict {
        status: PrefixStatus::Unknown,
        witness_roots: None,
        depth_used: reached,
    })
}

/// Generators of the subcategory attached to the prefix `t_1 ⋯ t_r` of the
/// witness `t_1 ⋯ t_n = C`.
///
/// The modules are returned as frame positions in exceptional order, that is
/// with dimension vectors `t_r, …, t_1`, and are checked to form an
/// exceptional sequence.
pub fn prefix_to_generators(
    rep: &RepData<'_>,
    witness: &Factorization<'_>,
    r: usize,
) -> Result<Vec<usize>> {
    let cd = rep.frame().cartan();
    let n = cd.rank();
    if witness.len() != n || witness.product() != &cd.coxeter_element() {
        return Err(Error::BadWitness);
    }
    if r > n {
        return Err(Error::IndexOutOfRange { index: r, max: n });
    }
    let mut out = Vec::with_capacity(r);
    for beta in witness.roots()[..r].iter().rev() {
        let t = rep
            .quiver()
            .position_of(beta)
            .ok_or_else(|| Error::NotPositiveRoot(beta.0.clone()))?;
        out.push(t);
    }
    if !rep.homs().is_exceptional_sequence(&out) {
        return Err(Error::FrameInvariant(
            "prefix generators are not an exceptional sequence".into(),
        ));
    }
    Ok(out)
}

/// Every prefix `t_1 ⋯ t_k` of every factorization of `C`, `0 ≤ k ≤ n`.
pub fn prefix_set(cd: &CartanData) -> Result<BTreeSet<GroupElement>> {
    Ok(prefix_witnesses(cd)?.into_keys().collect())
}

/// A factorization of `C` together with the length of the prefix it witnesses.
pub type Witness = (usize, Vec<Root>);

/// For each prefix, the factorizations of `C` it starts.
pub fn prefix_witnesses(cd: &CartanData) -> Result<BTreeMap<GroupElement, Vec<Witness>>> {
    let c = cd.coxeter_element();
    let mut out: BTreeMap<GroupElement, Vec<Witness>> = BTreeMap::new();
    for f in enumerate_factorizations(cd, &c, cd.rank())? {
        let mut g = GroupElement::identity(cd.rank());
        out.entry(g.clone())
            .or_default()
            .push((0, f.roots().to_vec()));
        for (k, beta) in f.roots().iter().enumerate() {
            g = &g * &cd.reflection_unchecked(beta);
            out.entry(g.clone())
                .or_default()
                .push((k + 1, f.roots().to_vec()));
        }
    }
    Ok(out)
}

/// The finite subgroup generated by reflections in the given roots.
pub fn reflection_subgroup(cd: &CartanData, roots: &[Root]) -> Result<BTreeSet<GroupElement>> {
    if !cd.is_finite_type() {
        return Err(Error::InfiniteType);
    }
    let gens: Vec<GroupElement> = roots
        .iter()
        .map(|r| cd.reflection(r))
        .collect::<Result<_>>()?;
    let id = GroupElement::identity(cd.rank());
    let mut seen = BTreeSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(g) = queue.pop_front() {
        for s in &gens {
            let h = &g * s;
            if seen.insert(h.clone()) {
                queue.push_back(h);
            }
        }
    }
    Ok(seen)
}

/// Whether all witnesses of each prefix generate the same reflection subgroup
/// with their first `k` entries.
pub fn prefix_subgroups_agree(cd: &CartanData) -> Result<bool> {
    for witnesses in prefix_witnesses(cd)?.values() {
        let mut groups = witnesses
            .iter()
            .map(|(k, roots)| reflection_subgroup(cd, &roots[..*k]));
        let first = groups.next().expect("nonempty")?;
        for g in groups {
            if g? != first {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kronecker() -> CartanData {
        CartanData::from_quiver(2, &[(2, 1, 2)]).unwrap()
    }

    #[test]
    fn kronecker_prefixes() {
        let kr = kronecker();
        for (v, d) in [([2, 1], 1), ([1, 2], 1), ([3, 2], 2)] {
            let beta = Root::new(v);
            let verdict = prefix_test(&kr, &beta, None).unwrap();
            assert_eq!(verdict.status, PrefixStatus::Yes, "{beta}");
            assert_eq!(verdict.depth_used, d, "{beta}");
            let w = Factorization::new(&kr, verdict.witness_roots.unwrap()).unwrap();
            assert_eq!(w.roots()[0], beta);
            assert_eq!(w.product(), &kr.coxeter_element());
        }
        assert!(matches!(
            prefix_test(&kr, &Root::new([1, 1]), None),
            Err(Error::NotRealRoot(_))
        ));
    }

    #[test]
    fn simple_roots_need_no_moves() {
        let kr = kronecker();
        let v = prefix_test(&kr, &Root::new([0, 1]), None).unwrap();
        assert_eq!(v.depth_used, 0);
        assert_eq!(
            v.witness_roots.unwrap(),
            vec![Root::new([0, 1]), Root::new([1, 2])]
        );
    }

    #[test]
    fn prefix_sets() {
        let a2 = CartanData::from_label("A2").unwrap();
        let p = prefix_set(&a2).unwrap();
        assert_eq!(p.len(), 5);
        assert!(p.contains(&GroupElement::identity(2)));
        assert!(p.contains(&a2.coxeter_element()));
        let a3 = CartanData::from_label("A3").unwrap();
        assert_eq!(prefix_set(&a3).unwrap().len(), 14);
    }

    #[test]
    fn a2_every_root_is_schur() {
        let a2 = CartanData::from_label("A2").unwrap();
        for beta in a2.positive_roots().unwrap() {
            assert_eq!(
                prefix_test(&a2, &beta, None).unwrap().status,
                PrefixStatus::Yes
            );
        }
    }
}
