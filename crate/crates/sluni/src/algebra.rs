//! Root data for gl(m|n)/sl(m|n): the supertrace form on the weight lattice,
//! positive systems with their Weyl vectors, and even/odd reflections.
//!
//! Roots and weights are stored as coordinate tuples in the gl(m|n) basis
//! (ε_1..ε_m | δ_1..δ_n). The induced form on coordinates is
//! `(ε_i,ε_j) = δ_ij`, `(δ_k,δ_l) = -δ_kl`, `(ε_i,δ_k) = 0`, so all odd
//! roots ε_i-δ_k are isotropic.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::Error;
use crate::rat::{rat, ratio, Rat};
use crate::weights::Weight;

/// Algebra descriptor: sl(m|n) with the real form su(p,q|n), p+q = m.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signature {
    pub m: usize,
    pub n: usize,
    pub p: usize,
    pub q: usize,
}

impl Signature {
    pub fn new(p: usize, q: usize, n: usize) -> Result<Self, Error> {
        let m = p + q;
        if m == 0 || n == 0 {
            return Err(Error::InvalidSignature(
                "both blocks must be nonempty (m >= 1, n >= 1)".into(),
            ));
        }
        if m + n <= 2 {
            return Err(Error::InvalidSignature(
                "m + n must exceed 2 (sl(1|1) is excluded)".into(),
            ));
        }
        Ok(Signature { m, n, p, q })
    }

    /// True in the compact case p = 0 or q = 0.
    pub fn is_compact(&self) -> bool {
        self.p == 0 || self.q == 0
    }

    pub fn dim(&self) -> usize {
        self.m + self.n
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RootParity {
    Even,
    Odd,
}

/// A root of gl(m|n), stored as its coordinate tuple. Exactly one entry is
/// +1 and one is -1; the parity records whether the two nonzero slots lie
/// in the same block.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Root {
    m: usize,
    coords: Vec<i64>,
    parity: RootParity,
}

impl Root {
    fn from_slots(m: usize, n: usize, plus: usize, minus: usize) -> Root {
        debug_assert!(plus != minus && plus < m + n && minus < m + n);
        let mut coords = vec![0i64; m + n];
        coords[plus] = 1;
        coords[minus] = -1;
        let parity = if (plus < m) == (minus < m) {
            RootParity::Even
        } else {
            RootParity::Odd
        };
        Root { m, coords, parity }
    }

    /// ε_i - ε_j (1-based indices).
    pub fn eps_eps(sig: &Signature, i: usize, j: usize) -> Root {
        Root::from_slots(sig.m, sig.n, i - 1, j - 1)
    }

    /// δ_k - δ_l (1-based indices).
    pub fn delta_delta(sig: &Signature, k: usize, l: usize) -> Root {
        Root::from_slots(sig.m, sig.n, sig.m + k - 1, sig.m + l - 1)
    }

    /// ε_i - δ_k.
    pub fn eps_delta(sig: &Signature, i: usize, k: usize) -> Root {
        Root::from_slots(sig.m, sig.n, i - 1, sig.m + k - 1)
    }

    /// -ε_j + δ_k.
    pub fn delta_eps(sig: &Signature, k: usize, j: usize) -> Root {
        Root::from_slots(sig.m, sig.n, sig.m + k - 1, j - 1)
    }

    pub fn negated(&self) -> Root {
        Root {
            m: self.m,
            coords: self.coords.iter().map(|c| -c).collect(),
            parity: self.parity,
        }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn parity(&self) -> RootParity {
        self.parity
    }

    pub fn is_odd(&self) -> bool {
        self.parity == RootParity::Odd
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Slot index (0-based) of the +1 entry.
    pub fn plus_slot(&self) -> usize {
        self.coords.iter().position(|&c| c == 1).unwrap()
    }

    /// Slot index (0-based) of the -1 entry.
    pub fn minus_slot(&self) -> usize {
        self.coords.iter().position(|&c| c == -1).unwrap()
    }

    pub fn as_rat_coords(&self) -> Vec<Rat> {
        self.coords.iter().map(|&c| rat(c)).collect()
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = |slot: usize| {
            if slot < self.m {
                format!("e{}", slot + 1)
            } else {
                format!("d{}", slot + 1 - self.m)
            }
        };
        let (a, b) = (self.plus_slot(), self.minus_slot());
        if a < b {
            write!(f, "{}-{}", name(a), name(b))
        } else {
            write!(f, "-{}+{}", name(b), name(a))
        }
    }
}

/// Supertrace form on rational coordinate tuples.
pub fn form(m: usize, u: &[Rat], v: &[Rat]) -> Result<Rat, Error> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch {
            expected: u.len(),
            got: v.len(),
        });
    }
    if m > u.len() {
        return Err(Error::LengthMismatch {
            expected: m,
            got: u.len(),
        });
    }
    let mut acc = rat(0);
    for (idx, (a, b)) in u.iter().zip(v.iter()).enumerate() {
        let term = a * b;
        if idx < m {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

/// Supertrace form of two integer tuples (roots and root sums).
pub fn form_int(m: usize, u: &[i64], v: &[i64]) -> i64 {
    debug_assert_eq!(u.len(), v.len());
    let mut acc = 0i64;
    for (idx, (a, b)) in u.iter().zip(v.iter()).enumerate() {
        if idx < m {
            acc += a * b;
        } else {
            acc -= a * b;
        }
    }
    acc
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PositiveSystemKind {
    Standard,
    AntiStandard,
    NonStandard,
}

impl fmt::Display for PositiveSystemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PositiveSystemKind::Standard => "standard",
            PositiveSystemKind::AntiStandard => "antistandard",
            PositiveSystemKind::NonStandard => "nonstandard",
        };
        f.write_str(s)
    }
}

/// A positive system Δ⁺ = Δ₀⁺ ⊔ Δ₁⁺ with its Weyl vectors.
///
/// The even part is always the standard one; the odd part is one of the
/// named systems or, after odd reflections, an arbitrary admissible set
/// (`kind() == None`).
#[derive(Debug, Clone)]
pub struct PositiveSystem {
    signature: Signature,
    kind: Option<PositiveSystemKind>,
    even_positive: Vec<Root>,
    odd_positive: Vec<Root>,
    rho0: Weight,
    rho1: Weight,
    rho: Weight,
}

/// Standard even positive roots {ε_i-ε_j (i<j), δ_k-δ_l (k<l)}.
fn standard_even_positive(sig: &Signature) -> Vec<Root> {
    let mut roots = Vec::new();
    for i in 1..=sig.m {
        for j in (i + 1)..=sig.m {
            roots.push(Root::eps_eps(sig, i, j));
        }
    }
    for k in 1..=sig.n {
        for l in (k + 1)..=sig.n {
            roots.push(Root::delta_delta(sig, k, l));
        }
    }
    roots
}

fn odd_positive_for(sig: &Signature, kind: PositiveSystemKind) -> Vec<Root> {
    let mut roots = Vec::new();
    match kind {
        PositiveSystemKind::Standard => {
            for i in 1..=sig.m {
                for k in 1..=sig.n {
                    roots.push(Root::eps_delta(sig, i, k));
                }
            }
        }
        PositiveSystemKind::AntiStandard => {
            for i in 1..=sig.m {
                for k in 1..=sig.n {
                    roots.push(Root::delta_eps(sig, k, i));
                }
            }
        }
        PositiveSystemKind::NonStandard => {
            for i in 1..=sig.p {
                for k in 1..=sig.n {
                    roots.push(Root::eps_delta(sig, i, k));
                }
            }
            for j in (sig.p + 1)..=sig.m {
                for k in 1..=sig.n {
                    roots.push(Root::delta_eps(sig, k, j));
                }
            }
        }
    }
    roots
}

fn half_sum(sig: &Signature, roots: &[Root]) -> Weight {
    let mut coords = vec![rat(0); sig.dim()];
    for r in roots {
        for (slot, &c) in r.coords().iter().enumerate() {
            coords[slot] += rat(c);
        }
    }
    let half = ratio(1, 2);
    for c in coords.iter_mut() {
        *c *= half.clone();
    }
    Weight::new(sig.m, coords).expect("half-sum has the right length")
}

/// Build the positive system of the given kind, with ρ = ρ₀ - ρ₁ computed
/// from the half-sum definitions.
pub fn build_positive_system(
    sig: &Signature,
    kind: PositiveSystemKind,
) -> Result<PositiveSystem, Error> {
    if kind == PositiveSystemKind::NonStandard && (sig.p == 0 || sig.q == 0) {
        return Err(Error::InvalidKind);
    }
    let even_positive = standard_even_positive(sig);
    let odd_positive = odd_positive_for(sig, kind);
    Ok(PositiveSystem::assemble(
        *sig,
        Some(kind),
        even_positive,
        odd_positive,
    ))
}

impl PositiveSystem {
    fn assemble(
        signature: Signature,
        kind: Option<PositiveSystemKind>,
        even_positive: Vec<Root>,
        odd_positive: Vec<Root>,
    ) -> PositiveSystem {
        let rho0 = half_sum(&signature, &even_positive);
        let rho1 = half_sum(&signature, &odd_positive);
        let rho = rho0.sub(&rho1);
        PositiveSystem {
            signature,
            kind,
            even_positive,
            odd_positive,
            rho0,
            rho1,
            rho,
        }
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    /// The named kind, if the odd part matches one of the three canonical
    /// systems; `None` for systems produced by odd reflections.
    pub fn kind(&self) -> Option<PositiveSystemKind> {
        self.kind
    }

    pub fn even_positive(&self) -> &[Root] {
        &self.even_positive
    }

    pub fn odd_positive(&self) -> &[Root] {
        &self.odd_positive
    }

    pub fn rho0(&self) -> &Weight {
        &self.rho0
    }

    pub fn rho1(&self) -> &Weight {
        &self.rho1
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    /// All positive roots, even then odd.
    pub fn positive_roots(&self) -> impl Iterator<Item = &Root> {
        self.even_positive.iter().chain(self.odd_positive.iter())
    }

    pub fn contains(&self, root: &Root) -> bool {
        self.positive_roots().any(|r| r == root)
    }

    pub fn contains_odd(&self, root: &Root) -> bool {
        self.odd_positive.iter().any(|r| r == root)
    }

    /// (Λ+ρ, α) for an odd positive root α; the sign whose vanishing marks
    /// atypicality and whose sign drives the Dirac inequality.
    pub fn margin(&self, lambda: &Weight, alpha: &Root) -> Result<Rat, Error> {
        if !self.contains_odd(alpha) {
            return Err(Error::NotOddPositive);
        }
        Ok(lambda.add(&self.rho).pair_root(alpha))
    }

    /// Simple roots: positive roots not expressible as a sum of two
    /// positive roots.
    pub fn simple_roots(&self) -> Vec<Root> {
        let set: BTreeSet<Vec<i64>> = self.positive_roots().map(|r| r.coords().to_vec()).collect();
        self.positive_roots()
            .filter(|alpha| {
                !self.positive_roots().any(|beta| {
                    let diff: Vec<i64> = alpha
                        .coords()
                        .iter()
                        .zip(beta.coords())
                        .map(|(a, b)| a - b)
                        .collect();
                    beta != *alpha && set.contains(&diff)
                })
            })
            .cloned()
            .collect()
    }

    fn classify_kind(&self) -> Option<PositiveSystemKind> {
        let have: BTreeSet<Vec<i64>> = self
            .odd_positive
            .iter()
            .map(|r| r.coords().to_vec())
            .collect();
        let mut candidates = vec![
            PositiveSystemKind::Standard,
            PositiveSystemKind::AntiStandard,
        ];
        if self.signature.p > 0 && self.signature.q > 0 {
            candidates.push(PositiveSystemKind::NonStandard);
        }
        candidates.into_iter().find(|&kind| {
            let want: BTreeSet<Vec<i64>> = odd_positive_for(&self.signature, kind)
                .iter()
                .map(|r| r.coords().to_vec())
                .collect();
            want == have
        })
    }
}

/// Reflection r_α(β) = β - 2(α,β)/(α,α) α for an even (non-isotropic) root.
pub fn even_reflection(alpha: &Root, beta: &[Rat]) -> Result<Vec<Rat>, Error> {
    if alpha.is_odd() {
        return Err(Error::NotEven);
    }
    let m = alpha.m();
    let alpha_rat = alpha.as_rat_coords();
    let norm = form(m, &alpha_rat, &alpha_rat)?;
    debug_assert!(norm != rat(0));
    let scale = rat(2) * form(m, &alpha_rat, beta)? / norm;
    Ok(beta
        .iter()
        .zip(alpha_rat.iter())
        .map(|(b, a)| b - a * scale.clone())
        .collect())
}

/// The positive system Δ⁺_θ = {-θ} ∪ (Δ⁺ \ {θ}) obtained by reflecting at
/// a simple odd isotropic root θ; ρ is recomputed from the half-sums.
pub fn odd_reflection_system(ps: &PositiveSystem, theta: &Root) -> Result<PositiveSystem, Error> {
    if !theta.is_odd() {
        return Err(Error::NotOddIsotropic);
    }
    if !ps.simple_roots().contains(theta) {
        return Err(Error::NotSimple);
    }
    let odd_positive: Vec<Root> = ps
        .odd_positive()
        .iter()
        .map(|r| {
            if r == theta {
                theta.negated()
            } else {
                r.clone()
            }
        })
        .collect();
    let mut reflected =
        PositiveSystem::assemble(ps.signature, None, ps.even_positive.clone(), odd_positive);
    reflected.kind = reflected.classify_kind();
    Ok(reflected)
}

/// Highest-weight transport along an odd reflection: Λ - θ when (Λ,θ) ≠ 0,
/// otherwise Λ.
pub fn odd_reflect_weight(lambda: &Weight, theta: &Root) -> Result<Weight, Error> {
    if !theta.is_odd() {
        return Err(Error::NotOddIsotropic);
    }
    if lambda.pair_root(theta) != rat(0) {
        let coords = lambda
            .coords()
            .iter()
            .zip(theta.coords())
            .map(|(c, &t)| c - rat(t))
            .collect();
        Weight::new(lambda.m(), coords)
    } else {
        Ok(lambda.clone())
    }
}

/// The sequence of simple odd reflections taking `start` to the system
/// whose odd positive part equals `target`'s. Both systems must share the
/// standard even part.
pub fn odd_reflection_chain(
    start: &PositiveSystem,
    target: &PositiveSystem,
) -> Result<Vec<Root>, Error> {
    let want: BTreeSet<Vec<i64>> = target
        .odd_positive()
        .iter()
        .map(|r| r.coords().to_vec())
        .collect();
    let mut chain = Vec::new();
    let mut current = start.clone();
    let bound = 2 * start.signature.m * start.signature.n + 1;
    for _ in 0..bound {
        let done = current
            .odd_positive()
            .iter()
            .all(|r| want.contains(r.coords()));
        if done {
            return Ok(chain);
        }
        let theta = current
            .simple_roots()
            .into_iter()
            .find(|r| r.is_odd() && !want.contains(r.coords()))
            .ok_or(Error::NotSimple)?;
        current = odd_reflection_system(&current, &theta)?;
        chain.push(theta);
    }
    Err(Error::NotSimple)
}
