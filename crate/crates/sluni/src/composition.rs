//! Odd-root combinatorics for the even-part filtration of a highest-weight
//! supermodule: sums of distinct odd positive roots and their
//! multiplicities, Kostant partition counts with distinct odd parts,
//! typicality, and the atypicality exclusion rule.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use crate::algebra::{PositiveSystem, PositiveSystemKind, Root};
use crate::error::Error;
use crate::weights::{i0_of, j0_of, k0_of, Weight};

/// A set of pairwise distinct odd positive roots, one decomposition of its
/// coordinate sum Γ_S.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddSubset {
    members: Vec<Root>,
}

impl OddSubset {
    pub fn new(mut members: Vec<Root>) -> OddSubset {
        members.sort_by(|a, b| a.coords().cmp(b.coords()));
        members.dedup();
        OddSubset { members }
    }

    pub fn members(&self) -> &[Root] {
        &self.members
    }

    pub fn sum(&self, dim: usize) -> Vec<i64> {
        let mut total = vec![0i64; dim];
        for r in &self.members {
            for (slot, &c) in r.coords().iter().enumerate() {
                total[slot] += c;
            }
        }
        total
    }

    pub fn contains(&self, root: &Root) -> bool {
        self.members.iter().any(|r| r == root)
    }

    pub fn avoids_all(&self, excluded: &[Root]) -> bool {
        !self.members.iter().any(|r| excluded.contains(r))
    }
}

/// A per-slot grading that is strictly positive on every positive root of
/// the system, built by longest-path layering of the slot order implied by
/// the roots. Bounds every partition search.
fn positivity_grading(ps: &PositiveSystem) -> Vec<i64> {
    let dim = ps.signature().dim();
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); dim];
    for r in ps.positive_roots() {
        children[r.plus_slot()].push(r.minus_slot());
    }
    let mut level = vec![-1i64; dim];
    fn depth(v: usize, children: &[Vec<usize>], level: &mut [i64]) -> i64 {
        if level[v] >= 0 {
            return level[v];
        }
        // mark to detect cycles (a positive system never has one)
        level[v] = 0;
        let d = children[v]
            .iter()
            .map(|&c| depth(c, children, level) + 1)
            .max()
            .unwrap_or(0);
        level[v] = d;
        d
    }
    for v in 0..dim {
        depth(v, &children, &mut level);
    }
    level
}

fn grade(phi: &[i64], eta: &[i64]) -> i64 {
    phi.iter().zip(eta).map(|(p, e)| p * e).sum()
}

pub(crate) fn positivity_grading_of(ps: &PositiveSystem) -> Vec<i64> {
    positivity_grading(ps)
}

/// Number of subsets S ⊆ Δ₁⁺ with Γ_S = γ.
pub fn gamma_multiplicity(gamma: &[i64], ps: &PositiveSystem) -> u64 {
    fn count(odd: &[Root], remaining: &mut Vec<i64>, idx: usize) -> u64 {
        if idx == odd.len() {
            return u64::from(remaining.iter().all(|&c| c == 0));
        }
        let mut total = count(odd, remaining, idx + 1);
        for (slot, &c) in odd[idx].coords().iter().enumerate() {
            remaining[slot] -= c;
        }
        total += count(odd, remaining, idx + 1);
        for (slot, &c) in odd[idx].coords().iter().enumerate() {
            remaining[slot] += c;
        }
        total
    }
    let mut remaining = gamma.to_vec();
    count(ps.odd_positive(), &mut remaining, 0)
}

/// Memoized Kostant partition counts for one positive system: the number
/// of decompositions of a weight into positive roots where odd roots occur
/// at most once.
pub struct KostantTable<'a> {
    ps: &'a PositiveSystem,
    phi: Vec<i64>,
    memo: HashMap<(usize, Vec<i64>), u64>,
}

impl<'a> KostantTable<'a> {
    pub fn new(ps: &'a PositiveSystem) -> Self {
        KostantTable {
            ps,
            phi: positivity_grading(ps),
            memo: HashMap::new(),
        }
    }

    pub fn system(&self) -> &PositiveSystem {
        self.ps
    }

    /// P(η): partitions of η into positive roots, odd parts distinct.
    pub fn count(&mut self, eta: &[i64]) -> u64 {
        let roots: Vec<Root> = self.ps.positive_roots().cloned().collect();
        let KostantTable { phi, memo, .. } = self;
        count_over(phi, &roots, eta, 0, memo)
    }

    /// P_γ(η): as `count`, with the root γ barred from every partition.
    /// Uses its own scratch memo; the persistent table is untouched.
    pub fn count_excluding(&mut self, gamma: &Root, eta: &[i64]) -> u64 {
        let roots: Vec<Root> = self
            .ps
            .positive_roots()
            .filter(|r| *r != gamma)
            .cloned()
            .collect();
        let mut scratch = HashMap::new();
        count_over(&self.phi, &roots, eta, 0, &mut scratch)
    }
}

fn count_over(
    phi: &[i64],
    roots: &[Root],
    eta: &[i64],
    idx: usize,
    memo: &mut HashMap<(usize, Vec<i64>), u64>,
) -> u64 {
    let g = grade(phi, eta);
    if g < 0 {
        return 0;
    }
    if eta.iter().all(|&c| c == 0) {
        return 1;
    }
    if idx == roots.len() {
        return 0;
    }
    let key = (idx, eta.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let root = &roots[idx];
    let step = grade(phi, root.coords());
    debug_assert!(step > 0);
    let kmax = if root.is_odd() { 1 } else { g / step };
    let mut total = 0u64;
    let mut remaining = eta.to_vec();
    for k in 0..=kmax {
        if k > 0 {
            for (slot, &c) in root.coords().iter().enumerate() {
                remaining[slot] -= c;
            }
        }
        total += count_over(phi, roots, &remaining, idx + 1, memo);
    }
    memo.insert(key, total);
    total
}

/// P(η) for a single query.
pub fn kostant_p(eta: &[i64], ps: &PositiveSystem) -> u64 {
    KostantTable::new(ps).count(eta)
}

/// P_γ(η) for a single query.
pub fn kostant_p_excluding(gamma: &Root, eta: &[i64], ps: &PositiveSystem) -> u64 {
    KostantTable::new(ps).count_excluding(gamma, eta)
}

/// One candidate even-part constituent Λ - Γ_S, with every subset realizing
/// its weight.
#[derive(Debug, Clone)]
pub struct ConstituentCandidate {
    pub mu: Weight,
    pub gamma: Vec<i64>,
    pub multiplicity: u64,
    pub witnesses: Vec<OddSubset>,
}

/// All weights Λ - Γ_S over the 2^(mn) subsets of Δ₁⁺, grouped by weight.
pub fn constituent_candidates(lambda: &Weight, ps: &PositiveSystem) -> Vec<ConstituentCandidate> {
    let odd = ps.odd_positive();
    let dim = ps.signature().dim();
    let mut groups: BTreeMap<Vec<i64>, Vec<OddSubset>> = BTreeMap::new();
    for mask in 0u64..(1u64 << odd.len()) {
        let members: Vec<Root> = odd
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, r)| r.clone())
            .collect();
        let subset = OddSubset::new(members);
        groups.entry(subset.sum(dim)).or_default().push(subset);
    }
    groups
        .into_iter()
        .map(|(gamma, witnesses)| {
            let mut mu = lambda.clone();
            for (slot, &c) in gamma.iter().enumerate() {
                let new = mu.coords()[slot].clone() - crate::rat::rat(c);
                mu = replace_coord(mu, slot, new);
            }
            ConstituentCandidate {
                mu,
                gamma,
                multiplicity: witnesses.len() as u64,
                witnesses,
            }
        })
        .collect()
}

fn replace_coord(w: Weight, slot: usize, value: crate::rat::Rat) -> Weight {
    let mut coords = w.coords().to_vec();
    coords[slot] = value;
    Weight::new(w.m(), coords).expect("length preserved")
}

/// Typicality: (Λ+ρ, α) ≠ 0 for every odd positive root α.
pub fn is_typical(lambda: &Weight, ps: &PositiveSystem) -> bool {
    let shifted = lambda.add(ps.rho());
    ps.odd_positive()
        .iter()
        .all(|alpha| !shifted.pair_root(alpha).is_zero())
}

/// Roots barred from decompositions of surviving constituents, derived
/// from the atypicality pattern of Λ. Only roots of the system itself are
/// reported.
pub fn exclusion_roots(lambda: &Weight, ps: &PositiveSystem) -> Result<Vec<Root>, Error> {
    let sig = ps.signature();
    let shifted = lambda.add(ps.rho());
    let mut excluded: Vec<Root> = Vec::new();
    let push = |r: Root, ps: &PositiveSystem, excluded: &mut Vec<Root>| {
        if ps.contains_odd(&r) && !excluded.contains(&r) {
            excluded.push(r);
        }
    };
    match ps.kind() {
        Some(PositiveSystemKind::Standard) => {
            let k0 = k0_of(lambda);
            for i in 1..=sig.m {
                for k in k0..=sig.n {
                    if shifted.pair_root(&Root::eps_delta(sig, i, k)).is_zero() {
                        for l in k..=sig.n {
                            push(Root::eps_delta(sig, i, l), ps, &mut excluded);
                        }
                    }
                }
            }
        }
        Some(PositiveSystemKind::NonStandard) => {
            let i0 = i0_of(lambda, sig);
            let j0 = j0_of(lambda, sig);
            for i in 1..=i0 {
                for k in 1..=sig.n {
                    if shifted.pair_root(&Root::eps_delta(sig, i, k)).is_zero() {
                        for i_prime in 1..=i {
                            push(Root::eps_delta(sig, i_prime, k), ps, &mut excluded);
                        }
                    }
                }
            }
            for j in 0..=j0.min(sig.q - 1) {
                for k in 1..=sig.n {
                    if shifted
                        .pair_root(&Root::delta_eps(sig, k, sig.m - j))
                        .is_zero()
                    {
                        for j_prime in 0..=j {
                            push(Root::delta_eps(sig, k, sig.m - j_prime), ps, &mut excluded);
                        }
                    }
                }
            }
        }
        _ => {
            return Err(Error::WrongSystem(
                "exclusion rule is stated for the standard and non-standard systems".into(),
            ))
        }
    }
    Ok(excluded)
}

/// True when some witness subset avoids every excluded root.
pub fn has_admissible_decomposition(witnesses: &[OddSubset], excluded: &[Root]) -> bool {
    witnesses.iter().any(|s| s.avoids_all(excluded))
}
