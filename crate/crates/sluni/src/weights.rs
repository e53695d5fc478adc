//! Weights in standard coordinates, the one-parameter highest-weight
//! families, compact dominance, and the unitarity conditions.
//!
//! A weight is a rational tuple (λ¹..λᵐ | μ¹..μⁿ) on the diagonal Cartan
//! of gl(m|n). On sl(m|n) two tuples differing by a rational multiple of
//! (1,..,1 | -1,..,-1) are the same weight; `PartialEq` implements exactly
//! that identification.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::algebra::{PositiveSystem, PositiveSystemKind, Root, Signature};
use crate::error::Error;
use crate::rat::{format_rat, is_integer, parse_rat, rat, ratio, Rat};

#[derive(Debug, Clone)]
pub struct Weight {
    m: usize,
    coords: Vec<Rat>,
}

impl Weight {
    pub fn new(m: usize, coords: Vec<Rat>) -> Result<Self, Error> {
        if m == 0 || coords.len() <= m {
            return Err(Error::LengthMismatch {
                expected: m + 1,
                got: coords.len(),
            });
        }
        Ok(Weight { m, coords })
    }

    pub fn zero(sig: &Signature) -> Weight {
        Weight {
            m: sig.m,
            coords: vec![rat(0); sig.dim()],
        }
    }

    /// Parse the `l1,..,lm|u1,..,un` text form; the bar fixes the block split.
    pub fn parse(s: &str) -> Result<Weight, Error> {
        let (left, right) = s
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("weight `{s}` is missing the `|` separator")))?;
        let mut coords = Vec::new();
        let mut m = 0usize;
        for part in left.split(',') {
            coords.push(parse_rat(part)?);
            m += 1;
        }
        for part in right.split(',') {
            coords.push(parse_rat(part)?);
        }
        Weight::new(m, coords)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.coords.len() - self.m
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    /// λ^i, 1-based.
    pub fn eps(&self, i: usize) -> &Rat {
        &self.coords[i - 1]
    }

    /// μ^k, 1-based.
    pub fn delta(&self, k: usize) -> &Rat {
        &self.coords[self.m + k - 1]
    }

    pub fn add(&self, other: &Weight) -> Weight {
        debug_assert_eq!(self.coords.len(), other.coords.len());
        Weight {
            m: self.m,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight {
            m: self.m,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, t: &Rat) -> Weight {
        Weight {
            m: self.m,
            coords: self.coords.iter().map(|c| c * t).collect(),
        }
    }

    pub fn sub_root(&self, root: &Root) -> Weight {
        Weight {
            m: self.m,
            coords: self
                .coords
                .iter()
                .zip(root.coords())
                .map(|(c, &r)| c - rat(r))
                .collect(),
        }
    }

    /// Λ - η for an integer coordinate tuple η (a sum of roots).
    pub fn sub_root_sum(&self, eta: &[i64]) -> Weight {
        Weight {
            m: self.m,
            coords: self
                .coords
                .iter()
                .zip(eta)
                .map(|(c, &r)| c - rat(r))
                .collect(),
        }
    }

    /// The coordinates as machine integers, when they all are integers.
    pub fn integer_coords(&self) -> Option<Vec<i64>> {
        self.coords
            .iter()
            .map(|c| {
                if is_integer(c) {
                    i64::try_from(c.numer()).ok()
                } else {
                    None
                }
            })
            .collect()
    }

    /// Λ + t·(1,..,1 | -1,..,-1); the sl(m|n) gauge direction.
    pub fn shifted(&self, t: &Rat) -> Weight {
        let mut coords = self.coords.clone();
        for (idx, c) in coords.iter_mut().enumerate() {
            if idx < self.m {
                *c += t;
            } else {
                *c -= t;
            }
        }
        Weight { m: self.m, coords }
    }

    /// Supertrace form against a root's coordinate tuple.
    pub fn pair_root(&self, root: &Root) -> Rat {
        let mut acc = rat(0);
        for (idx, (c, &r)) in self.coords.iter().zip(root.coords()).enumerate() {
            if r == 0 {
                continue;
            }
            let term = c * rat(r);
            if idx < self.m {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    /// Supertrace form against another weight.
    pub fn pair(&self, other: &Weight) -> Rat {
        let mut acc = rat(0);
        for (idx, (a, b)) in self.coords.iter().zip(&other.coords).enumerate() {
            if idx < self.m {
                acc += a * b;
            } else {
                acc -= a * b;
            }
        }
        acc
    }

    /// Σλ - Σμ of the stored representative.
    pub fn supertrace(&self) -> Rat {
        let mut acc = rat(0);
        for (idx, c) in self.coords.iter().enumerate() {
            if idx < self.m {
                acc += c;
            } else {
                acc -= c;
            }
        }
        acc
    }

    /// Exact equality of the stored tuples (no shift identification).
    pub fn coords_eq(&self, other: &Weight) -> bool {
        self.m == other.m && self.coords == other.coords
    }
}

/// Equality modulo rational multiples of (1,..,1 | -1,..,-1).
impl PartialEq for Weight {
    fn eq(&self, other: &Self) -> bool {
        if self.m != other.m || self.coords.len() != other.coords.len() {
            return false;
        }
        let t = &self.coords[0] - &other.coords[0];
        self.coords
            .iter()
            .zip(&other.coords)
            .enumerate()
            .all(
                |(idx, (a, b))| {
                    if idx < self.m {
                        a - b == t
                    } else {
                        b - a == t
                    }
                },
            )
    }
}

impl Eq for Weight {}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let left: Vec<String> = self.coords[..self.m].iter().map(format_rat).collect();
        let right: Vec<String> = self.coords[self.m..].iter().map(format_rat).collect();
        write!(f, "{}|{}", left.join(","), right.join(","))
    }
}

/// Plateau indices of a parametrized family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Indices {
    pub i0: usize,
    pub j0: Option<usize>,
    pub k0: usize,
}

/// One-parameter family of finite-dimensional-case highest weights:
/// Λ(x) = (0,-a₂,..,-a_m | b₁,..,b_{n-1},0) + x/2·(1,..,1 | 1,..,1).
#[derive(Debug, Clone)]
pub struct FdFamily {
    sig: Signature,
    /// a₁..a_m with a₁ = 0 and 0 ≤ a₂ ≤ .. ≤ a_m.
    a: Vec<i64>,
    /// b₁..b_n with b_n = 0 and b₁ ≥ .. ≥ b_{n-1} ≥ 0.
    b: Vec<i64>,
    x: Rat,
}

impl FdFamily {
    pub fn new(sig: &Signature, a: Vec<i64>, b: Vec<i64>, x: Rat) -> Result<Self, Error> {
        if a.len() != sig.m || b.len() != sig.n {
            return Err(Error::InvalidFamily(format!(
                "need {} a-entries and {} b-entries",
                sig.m, sig.n
            )));
        }
        if a[0] != 0 {
            return Err(Error::InvalidFamily("a1 must be 0".into()));
        }
        if a.windows(2).any(|w| w[0] > w[1]) || a.iter().any(|&v| v < 0) {
            return Err(Error::InvalidFamily("need 0 = a1 <= a2 <= .. <= am".into()));
        }
        if b[sig.n - 1] != 0 {
            return Err(Error::InvalidFamily("bn must be 0".into()));
        }
        if b.windows(2).any(|w| w[0] < w[1]) || b.iter().any(|&v| v < 0) {
            return Err(Error::InvalidFamily(
                "need b1 >= .. >= b(n-1) >= bn = 0".into(),
            ));
        }
        Ok(FdFamily { sig: *sig, a, b, x })
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    pub fn x(&self) -> &Rat {
        &self.x
    }

    pub fn with_x(&self, x: Rat) -> FdFamily {
        FdFamily { x, ..self.clone() }
    }

    pub fn a(&self) -> &[i64] {
        &self.a
    }

    pub fn b(&self) -> &[i64] {
        &self.b
    }

    pub fn indices(&self) -> Indices {
        let i0 = (1..=self.sig.m)
            .rev()
            .find(|&i| self.a[i - 1] == 0)
            .unwrap_or(1);
        Indices {
            i0,
            j0: None,
            k0: smallest_zero_index(&self.b),
        }
    }

    pub fn weight(&self) -> Weight {
        let half_x = &self.x * ratio(1, 2);
        let mut coords = Vec::with_capacity(self.sig.dim());
        for i in 1..=self.sig.m {
            coords.push(rat(-self.a[i - 1]) + half_x.clone());
        }
        for k in 1..=self.sig.n {
            coords.push(rat(self.b[k - 1]) + half_x.clone());
        }
        Weight {
            m: self.sig.m,
            coords,
        }
    }
}

/// One-parameter family of infinite-dimensional-case highest weights:
/// Λ = (0,a₂,..,a_{m-1},0 | b₁,..,b_{n-1},0)
///     + λ/2·(1,..,1,-1,..,-1 | 0,..,0) + x/2·(1,..,1 | 1,..,1).
#[derive(Debug, Clone)]
pub struct IfdFamily {
    sig: Signature,
    /// a₁..a_m with a₁ = a_m = 0, a_{p+1} ≥ .. ≥ a_{m-1} ≥ 0 ≥ a₂ ≥ .. ≥ a_p.
    a: Vec<i64>,
    /// b₁..b_n with b_n = 0, non-increasing.
    b: Vec<i64>,
    lambda: Rat,
    x: Rat,
}

impl IfdFamily {
    pub fn new(
        sig: &Signature,
        a: Vec<i64>,
        b: Vec<i64>,
        lambda: Rat,
        x: Rat,
    ) -> Result<Self, Error> {
        if sig.p == 0 || sig.q == 0 {
            return Err(Error::InvalidFamily(
                "infinite-dimensional families need p >= 1 and q >= 1".into(),
            ));
        }
        if a.len() != sig.m || b.len() != sig.n {
            return Err(Error::InvalidFamily(format!(
                "need {} a-entries and {} b-entries",
                sig.m, sig.n
            )));
        }
        if a[0] != 0 || a[sig.m - 1] != 0 {
            return Err(Error::InvalidFamily("a1 and am must be 0".into()));
        }
        let first = &a[..sig.p];
        if first.windows(2).any(|w| w[0] < w[1]) || first.iter().any(|&v| v > 0) {
            return Err(Error::InvalidFamily("need 0 = a1 >= a2 >= .. >= ap".into()));
        }
        let second = &a[sig.p..];
        if second.windows(2).any(|w| w[0] < w[1]) || second.iter().any(|&v| v < 0) {
            return Err(Error::InvalidFamily(
                "need a(p+1) >= .. >= a(m-1) >= am = 0".into(),
            ));
        }
        if b[sig.n - 1] != 0 || b.windows(2).any(|w| w[0] < w[1]) || b.iter().any(|&v| v < 0) {
            return Err(Error::InvalidFamily(
                "need b1 >= .. >= b(n-1) >= bn = 0".into(),
            ));
        }
        Ok(IfdFamily {
            sig: *sig,
            a,
            b,
            lambda,
            x,
        })
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    pub fn lambda(&self) -> &Rat {
        &self.lambda
    }

    pub fn x(&self) -> &Rat {
        &self.x
    }

    pub fn with_x(&self, x: Rat) -> IfdFamily {
        IfdFamily { x, ..self.clone() }
    }

    pub fn b(&self) -> &[i64] {
        &self.b
    }

    pub fn indices(&self) -> Indices {
        let (p, q, m) = (self.sig.p, self.sig.q, self.sig.m);
        let i0 = (1..=p).rev().find(|&i| self.a[i - 1] == 0).unwrap_or(1);
        // j0 = q when the whole second block sits at zero (a_{p+1} = 0 or
        // the block has no free entries), otherwise the largest j with
        // a_{m-j} = 0.
        let j0 = if q == 1 || self.a[p] == 0 {
            q
        } else {
            (1..q).rev().find(|&j| self.a[m - j - 1] == 0).unwrap_or(0)
        };
        Indices {
            i0,
            j0: Some(j0),
            k0: smallest_zero_index(&self.b),
        }
    }

    pub fn weight(&self) -> Weight {
        let half_x = &self.x * ratio(1, 2);
        let half_l = &self.lambda * ratio(1, 2);
        let mut coords = Vec::with_capacity(self.sig.dim());
        for i in 1..=self.sig.m {
            let l = if i <= self.sig.p {
                half_l.clone()
            } else {
                -half_l.clone()
            };
            coords.push(rat(self.a[i - 1]) + l + half_x.clone());
        }
        for k in 1..=self.sig.n {
            coords.push(rat(self.b[k - 1]) + half_x.clone());
        }
        Weight {
            m: self.sig.m,
            coords,
        }
    }
}

/// Parse an integer coordinate tuple (a root sum η) in the weight text
/// format; returns the block split and the coordinates.
pub fn parse_integer_tuple(s: &str) -> Result<(usize, Vec<i64>), Error> {
    let w = Weight::parse(s)?;
    let coords = w
        .integer_coords()
        .ok_or_else(|| Error::Parse(format!("tuple `{s}` must have integer entries")))?;
    Ok((w.m(), coords))
}

/// Smallest 1-based index k with v[k] = 0, for a non-increasing list ending
/// in 0: the start of the terminal zero run.
fn smallest_zero_index(v: &[i64]) -> usize {
    let mut k = v.len();
    while k > 1 && v[k - 2] == 0 {
        k -= 1;
    }
    k
}

/// The admissible set for the continuous su(p,q) parameter λ, for fixed
/// plateau data (i₀, j₀) in an sl(m|n) family:
/// (-∞, -m+max(i₀,j₀)+1) ∪ {-m+max(i₀,j₀)+1, .., -m+i₀+j₀}.
pub fn lambda_admissible(lambda: &Rat, m: usize, i0: usize, j0: usize) -> bool {
    let first = rat(-(m as i64) + i0.max(j0) as i64 + 1);
    let last = rat(-(m as i64) + (i0 + j0) as i64);
    lambda < &first || (is_integer(lambda) && *lambda >= first && *lambda <= last)
}

/// Whether the family weight is the highest weight of a unitarizable
/// highest-weight module of the even part.
pub fn even_unitarizable(fam: &IfdFamily) -> bool {
    let idx = fam.indices();
    lambda_admissible(&fam.lambda, fam.sig.m, idx.i0, idx.j0.unwrap())
}

/// Plateau start of the μ-block: smallest k with μ^j = μ^n for all j ≥ k.
pub fn k0_of(lambda: &Weight) -> usize {
    let n = lambda.n();
    let mut k = n;
    while k > 1 && lambda.delta(k - 1) == lambda.delta(n) {
        k -= 1;
    }
    k
}

/// Initial plateau length of (λ¹..λᵖ): largest i ≤ p with λ^i = λ¹.
pub fn i0_of(lambda: &Weight, sig: &Signature) -> usize {
    let mut i = 1;
    while i < sig.p && lambda.eps(i + 1) == lambda.eps(1) {
        i += 1;
    }
    i
}

/// Terminal plateau of (λ^{p+1}..λᵐ) as used by the margin conditions:
/// the largest j ≤ q-1 with λ^{m-j} = λᵐ, so the roots -ε_{m-j}+δ_n under
/// test stay inside the second block.
pub fn j0_of(lambda: &Weight, sig: &Signature) -> usize {
    let mut run = 1;
    while run < sig.q && lambda.eps(sig.m - run) == lambda.eps(sig.m) {
        run += 1;
    }
    run - 1
}

/// The j₀ entering the admissible-set test for the continuous parameter:
/// bumped to q when the whole second block is constant. This larger value
/// is what makes λ = 0 (the trivial module) admissible.
pub fn j0_admissible_of(lambda: &Weight, sig: &Signature) -> usize {
    let mut run = 1;
    while run < sig.q && lambda.eps(sig.m - run) == lambda.eps(sig.m) {
        run += 1;
    }
    if run == sig.q {
        sig.q
    } else {
        run - 1
    }
}

/// Compact dominance with integral steps: λ decreasing by non-negative
/// integers within each ε-block ({1..p} and {p+1..m}), μ decreasing by
/// non-negative integers.
pub fn is_dominant_integral_even(lambda: &Weight, sig: &Signature) -> bool {
    let dec_int = |vals: Vec<Rat>| {
        vals.windows(2).all(|w| {
            let d = &w[0] - &w[1];
            is_integer(&d) && !d.is_negative()
        })
    };
    let eps_block =
        |lo: usize, hi: usize| (lo..=hi).map(|i| lambda.eps(i).clone()).collect::<Vec<_>>();
    let delta_block: Vec<Rat> = (1..=sig.n).map(|k| lambda.delta(k).clone()).collect();
    let blocks_ok = if sig.is_compact() {
        dec_int(eps_block(1, sig.m))
    } else {
        dec_int(eps_block(1, sig.p)) && dec_int(eps_block(sig.p + 1, sig.m))
    };
    blocks_ok && dec_int(delta_block)
}

/// Whether Λ is the highest weight of a unitarizable highest-weight module
/// of the even part, read off the raw coordinates.
pub fn even_unitarizable_weight(lambda: &Weight, sig: &Signature) -> bool {
    if !is_dominant_integral_even(lambda, sig) {
        return false;
    }
    if sig.is_compact() {
        return true;
    }
    let i0 = i0_of(lambda, sig);
    let j0 = j0_admissible_of(lambda, sig);
    let lam = lambda.eps(1) - lambda.eps(sig.m);
    lambda_admissible(&lam, sig.m, i0, j0)
}

/// A named condition with its witnessing root and margin, shared by the
/// unitarity report and classification verdicts.
#[derive(Debug, Clone, PartialEq)]
pub struct Reason {
    pub condition: String,
    pub root: Option<Root>,
    pub margin: Option<Rat>,
}

impl Reason {
    pub fn bare(condition: &str) -> Reason {
        Reason {
            condition: condition.into(),
            root: None,
            margin: None,
        }
    }

    pub fn with_root(condition: &str, root: Root, margin: Rat) -> Reason {
        Reason {
            condition: condition.into(),
            root: Some(root),
            margin: Some(margin),
        }
    }
}

#[derive(Debug, Clone)]
pub struct UnitarityReport {
    pub holds: bool,
    pub violations: Vec<Reason>,
}

/// Evaluate the unitarity conditions for Λ: the compact list a)(i)-(iii)
/// with the standard system, or the non-compact list b)(i)-(v) with the
/// non-standard system. Every failed condition is reported.
pub fn unitarity_conditions(
    lambda: &Weight,
    sig: &Signature,
    ps: &PositiveSystem,
) -> Result<UnitarityReport, Error> {
    let expected = if sig.is_compact() {
        PositiveSystemKind::Standard
    } else {
        PositiveSystemKind::NonStandard
    };
    if ps.kind() != Some(expected) {
        return Err(Error::WrongSystem(format!(
            "unitarity conditions for this signature need the {expected} system"
        )));
    }
    if lambda.m() != sig.m || lambda.n() != sig.n {
        return Err(Error::LengthMismatch {
            expected: sig.dim(),
            got: lambda.coords().len(),
        });
    }
    let shifted = lambda.add(ps.rho());
    let mut violations = Vec::new();
    let zero = rat(0);

    if sig.is_compact() {
        if !even_unitarizable_weight(lambda, sig) {
            violations.push(Reason::bare(
                "a.0: even highest weight not dominant integral",
            ));
        }
        // a)(i)
        let mut chain: Vec<Rat> = (1..=sig.m).map(|i| lambda.eps(i).clone()).collect();
        chain.extend((1..=sig.n).rev().map(|k| -lambda.delta(k)));
        if chain.windows(2).any(|w| w[0] < w[1]) {
            violations.push(Reason::bare("a.i: coordinate chain not decreasing"));
        }
        // margins (Λ+ρ, ε_m - δ_k)
        let margins: Vec<(usize, Rat)> = (1..=sig.n)
            .map(|k| (k, shifted.pair_root(&Root::eps_delta(sig, sig.m, k))))
            .collect();
        // a)(ii)
        for (k, v) in &margins {
            if v.is_zero() {
                let head_positive = margins[..k - 1].iter().all(|(_, w)| w > &zero);
                let tail_flat = lambda.delta(*k) == lambda.delta(sig.n);
                if !(head_positive && tail_flat) {
                    violations.push(Reason::with_root(
                        "a.ii: vanishing margin without flat tail",
                        Root::eps_delta(sig, sig.m, *k),
                        v.clone(),
                    ));
                }
            }
        }
        // a)(iii)
        if margins.iter().all(|(_, v)| !v.is_zero()) {
            if let Some((k, v)) = margins.iter().find(|(_, v)| v < &zero) {
                violations.push(Reason::with_root(
                    "a.iii: nonvanishing margins must all be positive",
                    Root::eps_delta(sig, sig.m, *k),
                    v.clone(),
                ));
            }
        }
    } else {
        if !even_unitarizable_weight(lambda, sig) {
            violations.push(Reason::bare(
                "b.0: even highest weight not unitarizable (dominance or admissible-set failure)",
            ));
        }
        // b)(i)
        let mut chain: Vec<Rat> = (sig.p + 1..=sig.m).map(|i| lambda.eps(i).clone()).collect();
        chain.extend((1..=sig.n).rev().map(|k| -lambda.delta(k)));
        chain.extend((1..=sig.p).map(|i| lambda.eps(i).clone()));
        if chain.windows(2).any(|w| w[0] < w[1]) {
            violations.push(Reason::bare("b.i: coordinate chain not decreasing"));
        }
        // b)(ii)
        for i in sig.p + 1..=sig.m {
            let root = Root::delta_eps(sig, sig.n, i);
            if shifted.pair_root(&root).is_zero() && lambda.eps(i) != lambda.eps(sig.m) {
                violations.push(Reason::with_root(
                    "b.ii: vanishing margin off the λ'-plateau",
                    root,
                    zero.clone(),
                ));
            }
        }
        // b)(iii)
        for i in 1..=sig.p {
            let root = Root::eps_delta(sig, i, 1);
            if shifted.pair_root(&root).is_zero() && lambda.eps(i) != lambda.eps(1) {
                violations.push(Reason::with_root(
                    "b.iii: vanishing margin off the λ-plateau",
                    root,
                    zero.clone(),
                ));
            }
        }
        let i0 = i0_of(lambda, sig);
        let j0 = j0_of(lambda, sig);
        // b)(iv)
        let a_margins: Vec<(Root, Rat)> = (1..=i0)
            .map(|i| {
                let r = Root::eps_delta(sig, i, 1);
                let v = shifted.pair_root(&r);
                (r, v)
            })
            .collect();
        if a_margins.iter().all(|(_, v)| !v.is_zero()) {
            if let Some((r, v)) = a_margins.iter().find(|(_, v)| v > &zero) {
                violations.push(Reason::with_root(
                    "b.iv: nonvanishing margins on the λ-plateau must be negative",
                    r.clone(),
                    v.clone(),
                ));
            }
        }
        // b)(v)
        let b_margins: Vec<(Root, Rat)> = (0..=j0)
            .map(|j| {
                let r = Root::delta_eps(sig, sig.n, sig.m - j);
                let v = shifted.pair_root(&r);
                (r, v)
            })
            .collect();
        if b_margins.iter().all(|(_, v)| !v.is_zero()) {
            if let Some((r, v)) = b_margins.iter().find(|(_, v)| v > &zero) {
                violations.push(Reason::with_root(
                    "b.v: nonvanishing margins on the λ'-plateau must be negative",
                    r.clone(),
                    v.clone(),
                ));
            }
        }
    }

    Ok(UnitarityReport {
        holds: violations.is_empty(),
        violations,
    })
}
