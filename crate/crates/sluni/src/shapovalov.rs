//! Brute-force contravariant form on Verma weight spaces.
//!
//! The module works inside U(gl(m|n)) with matrix-unit generators. A weight
//! space M(Λ)^{Λ-η} is spanned by PBW monomials in the negative root
//! vectors; the form is evaluated by the contravariant recursion
//! ⟨Xv, Yv⟩ = ⟨v, ω(X)Yv⟩, straightening words into normal order and
//! reading off the coefficient of the highest-weight vector. Positive
//! semidefiniteness is certified by exact symmetric elimination, and the
//! determinant is cross-checked against the closed product formula.

use std::collections::{BTreeSet, HashMap};

use num_traits::{One, Signed, Zero};

use crate::algebra::{form_int, PositiveSystem, Root, RootParity, Signature};
use crate::composition::KostantTable;
use crate::error::Error;
use crate::rat::{rat, Rat};
use crate::weights::Weight;

/// Matrix unit E_{row,col} of gl(m|n), 1-based indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisElement {
    pub row: usize,
    pub col: usize,
}

impl BasisElement {
    pub fn new(row: usize, col: usize) -> BasisElement {
        BasisElement { row, col }
    }

    pub fn parity(&self, m: usize) -> RootParity {
        if (self.row <= m) == (self.col <= m) {
            RootParity::Even
        } else {
            RootParity::Odd
        }
    }

    pub fn is_odd(&self, m: usize) -> bool {
        self.parity(m) == RootParity::Odd
    }

    pub fn transpose(&self) -> BasisElement {
        BasisElement {
            row: self.col,
            col: self.row,
        }
    }
}

/// Superbracket of matrix units:
/// [E_ab, E_cd] = δ_bc E_ad - (-1)^{p(E_ab)p(E_cd)} δ_da E_cb.
pub fn bracket(x: BasisElement, y: BasisElement, m: usize) -> Vec<(i64, BasisElement)> {
    let mut terms = Vec::with_capacity(2);
    if x.col == y.row {
        terms.push((1i64, BasisElement::new(x.row, y.col)));
    }
    if y.col == x.row {
        let sign = if x.is_odd(m) && y.is_odd(m) { 1 } else { -1 };
        terms.push((sign, BasisElement::new(y.row, x.col)));
    }
    // merge E_aa terms arising when both deltas fire with x.row == y.col
    if terms.len() == 2 && terms[0].1 == terms[1].1 {
        let c = terms[0].0 + terms[1].0;
        terms.clear();
        if c != 0 {
            terms.push((c, BasisElement::new(x.row, y.col)));
        }
    }
    terms
}

/// The four conjugate-linear anti-involutions compatible with the standard
/// ordering, realized as X ↦ J⁻¹X†J for a signature matrix J.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OmegaVariant {
    /// su(m,0|n,0): J = I.
    Plus,
    /// su(m,0|0,n): J = diag(I_m, -I_n).
    Minus,
    /// su(p,q|0,n): J = diag(I_p, -I_q, -I_n).
    MinusPlus,
    /// su(p,q|n,0): J = diag(I_p, -I_q, I_n).
    PlusMinus,
}

impl OmegaVariant {
    /// The variant used by the classification: ω₊ in the compact case,
    /// ω₍₋,₊₎ otherwise.
    pub fn default_for(sig: &Signature) -> OmegaVariant {
        if sig.is_compact() {
            OmegaVariant::Plus
        } else {
            OmegaVariant::MinusPlus
        }
    }

    pub fn compatible(&self, sig: &Signature) -> bool {
        match self {
            OmegaVariant::Plus | OmegaVariant::Minus => sig.is_compact(),
            OmegaVariant::MinusPlus | OmegaVariant::PlusMinus => !sig.is_compact(),
        }
    }

    fn j_signs(&self, sig: &Signature) -> Vec<i64> {
        let mut j = Vec::with_capacity(sig.dim());
        match self {
            OmegaVariant::Plus => {
                j.resize(sig.dim(), 1);
            }
            OmegaVariant::Minus => {
                j.resize(sig.m, 1);
                j.resize(sig.dim(), -1);
            }
            OmegaVariant::MinusPlus => {
                j.resize(sig.p, 1);
                j.resize(sig.m, -1);
                j.resize(sig.dim(), -1);
            }
            OmegaVariant::PlusMinus => {
                j.resize(sig.p, 1);
                j.resize(sig.m, -1);
                j.resize(sig.dim(), 1);
            }
        }
        j
    }

    pub fn parse(s: &str) -> Result<OmegaVariant, Error> {
        match s {
            "plus" => Ok(OmegaVariant::Plus),
            "minus" => Ok(OmegaVariant::Minus),
            "minus-plus" | "minus_plus" => Ok(OmegaVariant::MinusPlus),
            "plus-minus" | "plus_minus" => Ok(OmegaVariant::PlusMinus),
            other => Err(Error::Parse(format!("unknown omega variant `{other}`"))),
        }
    }
}

/// ω(E_ab) as a signed matrix unit.
pub fn omega(
    x: BasisElement,
    sig: &Signature,
    variant: OmegaVariant,
) -> Result<(i64, BasisElement), Error> {
    if !variant.compatible(sig) {
        return Err(Error::VariantMismatch);
    }
    let j = variant.j_signs(sig);
    Ok((j[x.row - 1] * j[x.col - 1], x.transpose()))
}

#[derive(Debug, Clone, Copy)]
enum Kind {
    Lower(u16),
    Raise,
    Cartan(usize),
}

type Word = Vec<u16>;
type ModVec = HashMap<Word, Rat>;

/// Straightening engine for one (system, weight, variant) triple.
struct Engine {
    sig: Signature,
    lambda: Vec<Rat>,
    j: Vec<i64>,
    neg_gens: Vec<BasisElement>,
    gen_root: Vec<Root>,
    kind_of: HashMap<BasisElement, Kind>,
    phi: Vec<i64>,
}

fn lowering_unit(root: &Root) -> BasisElement {
    // the unit of weight -root
    BasisElement::new(root.minus_slot() + 1, root.plus_slot() + 1)
}

impl Engine {
    fn new(lambda: &Weight, ps: &PositiveSystem, variant: OmegaVariant) -> Result<Engine, Error> {
        let sig = *ps.signature();
        if !variant.compatible(&sig) {
            return Err(Error::VariantMismatch);
        }
        if lambda.m() != sig.m || lambda.n() != sig.n {
            return Err(Error::LengthMismatch {
                expected: sig.dim(),
                got: lambda.coords().len(),
            });
        }
        // PBW order: even ε-block, even δ-block, odd; each by (row, col).
        let mut even_eps: Vec<&Root> = Vec::new();
        let mut even_delta: Vec<&Root> = Vec::new();
        let mut odd: Vec<&Root> = Vec::new();
        for r in ps.even_positive() {
            if r.plus_slot() < sig.m {
                even_eps.push(r);
            } else {
                even_delta.push(r);
            }
        }
        odd.extend(ps.odd_positive());
        let by_unit = |r: &&Root| {
            let u = lowering_unit(r);
            (u.row, u.col)
        };
        even_eps.sort_by_key(by_unit);
        even_delta.sort_by_key(by_unit);
        odd.sort_by_key(by_unit);

        let mut neg_gens = Vec::new();
        let mut gen_root = Vec::new();
        let mut kind_of = HashMap::new();
        for r in even_eps.into_iter().chain(even_delta).chain(odd) {
            let unit = lowering_unit(r);
            kind_of.insert(unit, Kind::Lower(neg_gens.len() as u16));
            neg_gens.push(unit);
            gen_root.push(r.clone());
        }
        for r in ps.positive_roots() {
            let unit = lowering_unit(r).transpose();
            kind_of.insert(unit, Kind::Raise);
        }
        for a in 0..sig.dim() {
            kind_of.insert(BasisElement::new(a + 1, a + 1), Kind::Cartan(a));
        }
        Ok(Engine {
            sig,
            lambda: lambda.coords().to_vec(),
            j: variant.j_signs(&sig),
            neg_gens,
            gen_root,
            kind_of,
            phi: crate::composition::positivity_grading_of(ps),
        })
    }

    fn gen_is_odd(&self, g: u16) -> bool {
        self.neg_gens[g as usize].is_odd(self.sig.m)
    }

    /// Normal-order g·word for a lowering generator g.
    fn insert_lower(&self, g: u16, word: &[u16]) -> Vec<(Rat, Word)> {
        if word.is_empty() || g <= word[0] {
            if !word.is_empty() && g == word[0] && self.gen_is_odd(g) {
                return Vec::new(); // odd square vanishes
            }
            let mut w = Vec::with_capacity(word.len() + 1);
            w.push(g);
            w.extend_from_slice(word);
            return vec![(Rat::one(), w)];
        }
        let h = word[0];
        let rest = &word[1..];
        let sign = if self.gen_is_odd(g) && self.gen_is_odd(h) {
            rat(-1)
        } else {
            rat(1)
        };
        let mut out = Vec::new();
        for (c, w) in self.insert_lower(g, rest) {
            for (c2, w2) in self.insert_lower(h, &w) {
                out.push((&sign * &c * c2, w2));
            }
        }
        let gu = self.neg_gens[g as usize];
        let hu = self.neg_gens[h as usize];
        for (cb, u) in bracket(gu, hu, self.sig.m) {
            let idx = match self.kind_of.get(&u) {
                Some(Kind::Lower(i)) => *i,
                _ => unreachable!("bracket of lowering operators must lower"),
            };
            for (c, w) in self.insert_lower(idx, rest) {
                out.push((rat(cb) * c, w));
            }
        }
        out
    }

    /// Apply a single basis element to word·v_Λ, accumulating normal terms.
    fn act(&self, e: BasisElement, coeff: &Rat, word: &[u16], out: &mut ModVec) {
        match self.kind_of[&e] {
            Kind::Lower(idx) => {
                for (c, w) in self.insert_lower(idx, word) {
                    add_term(out, w, coeff * c);
                }
            }
            Kind::Cartan(slot) => {
                let mut eigen = self.lambda[slot].clone();
                for &g in word {
                    let u = self.neg_gens[g as usize];
                    if u.row - 1 == slot {
                        eigen += rat(1);
                    }
                    if u.col - 1 == slot {
                        eigen -= rat(1);
                    }
                }
                add_term(out, word.to_vec(), coeff * eigen);
            }
            Kind::Raise => {
                if word.is_empty() {
                    return; // n⁺ kills the highest-weight vector
                }
                let h = word[0];
                let rest = &word[1..];
                let hu = self.neg_gens[h as usize];
                let sign = if e.is_odd(self.sig.m) && hu.is_odd(self.sig.m) {
                    rat(-1)
                } else {
                    rat(1)
                };
                let mut tmp = ModVec::new();
                self.act(e, &(coeff * sign), rest, &mut tmp);
                for (w, c) in tmp {
                    for (c2, w2) in self.insert_lower(h, &w) {
                        add_term(out, w2, &c * c2);
                    }
                }
                for (cb, u) in bracket(e, hu, self.sig.m) {
                    self.act(u, &(coeff * rat(cb)), rest, out);
                }
            }
        }
    }

    fn apply_unit(&self, e: BasisElement, state: &ModVec) -> ModVec {
        let mut out = ModVec::new();
        for (word, c) in state {
            self.act(e, c, word, &mut out);
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// ⟨Xv, Yv⟩ by the contravariant recursion.
    fn pair_words(&self, x: &[u16], y: &[u16]) -> Rat {
        let mut state = ModVec::new();
        state.insert(y.to_vec(), Rat::one());
        for &g in x {
            let u = self.neg_gens[g as usize];
            let sign = self.j[u.row - 1] * self.j[u.col - 1];
            let omega_u = u.transpose();
            let mut next = self.apply_unit(omega_u, &state);
            if sign < 0 {
                for c in next.values_mut() {
                    *c = -c.clone();
                }
            }
            state = next;
            if state.is_empty() {
                return Rat::zero();
            }
        }
        state.get(&Vec::new()).cloned().unwrap_or_else(Rat::zero)
    }

    /// All normal monomials of weight -η, in deterministic DFS order.
    fn weight_space_basis(&self, eta: &[i64]) -> Vec<Word> {
        let mut out = Vec::new();
        let mut word = Vec::new();
        self.basis_dfs(eta.to_vec(), 0, &mut word, &mut out);
        out
    }

    fn basis_dfs(&self, remaining: Vec<i64>, idx: usize, word: &mut Word, out: &mut Vec<Word>) {
        let g = grade(&self.phi, &remaining);
        if g < 0 {
            return;
        }
        if remaining.iter().all(|&c| c == 0) {
            out.push(word.clone());
            return;
        }
        if idx == self.neg_gens.len() {
            return;
        }
        let root = &self.gen_root[idx];
        let step = grade(&self.phi, root.coords());
        let kmax = if root.is_odd() { 1 } else { g / step };
        let mut rem = remaining;
        for k in 0..=kmax {
            if k > 0 {
                for (slot, &c) in root.coords().iter().enumerate() {
                    rem[slot] -= c;
                }
                word.push(idx as u16);
            }
            self.basis_dfs(rem.clone(), idx + 1, word, out);
        }
        for _ in 0..kmax {
            word.pop();
        }
    }
}

fn add_term(out: &mut ModVec, word: Word, coeff: Rat) {
    let entry = out.entry(word).or_insert_with(Rat::zero);
    *entry += coeff;
}

fn grade(phi: &[i64], eta: &[i64]) -> i64 {
    phi.iter().zip(eta).map(|(p, e)| p * e).sum()
}

/// Exact Gram matrix of the contravariant form on M(Λ)^{Λ-η}.
#[derive(Debug, Clone)]
pub struct GramMatrix {
    pub eta: Vec<i64>,
    pub basis: Vec<Vec<BasisElement>>,
    pub entries: Vec<Vec<Rat>>,
}

impl GramMatrix {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_symmetric(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| (0..i).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    pub fn det(&self) -> Rat {
        matrix_det(&self.entries)
    }

    pub fn rank(&self) -> usize {
        matrix_rank(&self.entries)
    }

    /// A basis of the radical (null space) of the form on this weight space.
    pub fn radical(&self) -> Vec<Vec<Rat>> {
        matrix_kernel(&self.entries)
    }
}

/// Compute the Gram matrix of the Shapovalov form on the PBW basis of
/// M(Λ)^{Λ-η} with respect to the given anti-involution.
pub fn gram(
    lambda: &Weight,
    eta: &[i64],
    ps: &PositiveSystem,
    variant: OmegaVariant,
) -> Result<GramMatrix, Error> {
    if eta.len() != ps.signature().dim() {
        return Err(Error::LengthMismatch {
            expected: ps.signature().dim(),
            got: eta.len(),
        });
    }
    let engine = Engine::new(lambda, ps, variant)?;
    let words = engine.weight_space_basis(eta);
    let dim = words.len();
    let mut entries = vec![vec![Rat::zero(); dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            // the form is symmetric over the rationals; fill both halves
            if j < i {
                continue;
            }
            let v = engine.pair_words(&words[i], &words[j]);
            entries[i][j] = v.clone();
            entries[j][i] = v;
        }
    }
    let basis = words
        .iter()
        .map(|w| w.iter().map(|&g| engine.neg_gens[g as usize]).collect())
        .collect();
    Ok(GramMatrix {
        eta: eta.to_vec(),
        basis,
        entries,
    })
}

/// Pair two arbitrary monomial weight spaces; used to spot-check the
/// orthogonality of distinct weight spaces.
pub fn cross_pairing(
    lambda: &Weight,
    eta_x: &[i64],
    eta_y: &[i64],
    ps: &PositiveSystem,
    variant: OmegaVariant,
) -> Result<Vec<Rat>, Error> {
    let engine = Engine::new(lambda, ps, variant)?;
    let xs = engine.weight_space_basis(eta_x);
    let ys = engine.weight_space_basis(eta_y);
    let mut out = Vec::new();
    for x in &xs {
        for y in &ys {
            out.push(engine.pair_words(x, y));
        }
    }
    Ok(out)
}

/// Exact positive-semidefiniteness of a symmetric rational matrix by
/// symmetric elimination. A zero diagonal entry forces its whole row to be
/// zero (else a negative 2x2 minor exists); zero rows are dropped.
pub fn is_psd(g: &GramMatrix) -> Result<bool, Error> {
    if !g.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    Ok(psd_by_elimination(g.entries.clone()))
}

fn psd_by_elimination(mut a: Vec<Vec<Rat>>) -> bool {
    loop {
        let n = a.len();
        if n == 0 {
            return true;
        }
        if let Some(i) = (0..n).find(|&i| a[i][i].is_zero()) {
            if a[i].iter().any(|v| !v.is_zero()) {
                return false;
            }
            a.remove(i);
            for row in a.iter_mut() {
                row.remove(i);
            }
            continue;
        }
        if (0..n).any(|i| a[i][i].is_negative()) {
            return false;
        }
        // Schur complement of the leading pivot
        let d = a[0][0].clone();
        let mut next = vec![vec![Rat::zero(); n - 1]; n - 1];
        for i in 1..n {
            for j in 1..n {
                next[i - 1][j - 1] = &a[i][j] - &a[i][0] * &a[0][j] / &d;
            }
        }
        a = next;
    }
}

/// Rank of a rational matrix by Gaussian elimination.
#[allow(clippy::needless_range_loop)]
pub fn matrix_rank(a: &[Vec<Rat>]) -> usize {
    let mut m: Vec<Vec<Rat>> = a.to_vec();
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        if let Some(p) = (row..rows).find(|&r| !m[r][col].is_zero()) {
            m.swap(row, p);
            let pivot = m[row][col].clone();
            for r in (row + 1)..rows {
                if m[r][col].is_zero() {
                    continue;
                }
                let factor = &m[r][col] / &pivot;
                for c in col..cols {
                    m[r][c] = &m[r][c] - &factor * &m[row][c];
                }
            }
            rank += 1;
            row += 1;
            if row == rows {
                break;
            }
        }
    }
    rank
}

/// Determinant of a square rational matrix.
#[allow(clippy::needless_range_loop)]
pub fn matrix_det(a: &[Vec<Rat>]) -> Rat {
    let n = a.len();
    let mut m: Vec<Vec<Rat>> = a.to_vec();
    let mut det = Rat::one();
    for col in 0..n {
        let p = match (col..n).find(|&r| !m[r][col].is_zero()) {
            Some(p) => p,
            None => return Rat::zero(),
        };
        if p != col {
            m.swap(col, p);
            det = -det;
        }
        let pivot = m[col][col].clone();
        det *= pivot.clone();
        for r in (col + 1)..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &pivot;
            for c in col..n {
                m[r][c] = &m[r][c] - &factor * &m[col][c];
            }
        }
    }
    det
}

/// Null space basis of a symmetric rational matrix.
#[allow(clippy::needless_range_loop)]
pub fn matrix_kernel(a: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let rows = a.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = a[0].len();
    let mut m: Vec<Vec<Rat>> = a.to_vec();
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if let Some(p) = (row..rows).find(|&r| !m[r][col].is_zero()) {
            m.swap(row, p);
            let pivot = m[row][col].clone();
            for r in 0..rows {
                if r == row || m[r][col].is_zero() {
                    continue;
                }
                let factor = &m[r][col] / &pivot;
                for c in 0..cols {
                    m[r][c] = &m[r][c] - &factor * &m[row][c];
                }
            }
            pivot_cols.push(col);
            row += 1;
            if row == rows {
                break;
            }
        }
    }
    let mut kernel = Vec::new();
    for free in (0..cols).filter(|c| !pivot_cols.contains(c)) {
        let mut v = vec![Rat::zero(); cols];
        v[free] = Rat::one();
        for (r, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -&m[r][free] / &m[r][pc];
        }
        kernel.push(v);
    }
    kernel
}

#[derive(Debug, Clone)]
pub struct KsFactor {
    pub base: Rat,
    pub exponent: u64,
}

/// The determinant formula evaluated at Λ as a factored product.
#[derive(Debug, Clone)]
pub struct KsDeterminant {
    pub factors: Vec<KsFactor>,
    pub value: Rat,
}

/// Closed-form determinant of the form on M(Λ)^{Λ-η}, up to a nonzero
/// constant independent of Λ:
///   D₁ = Π_{γ even > 0} Π_{r ≥ 1} (2(Λ+ρ,γ)/(γ,γ) - r)^{P(η-rγ)},
///   D₂ = Π_{γ odd > 0} (Λ+ρ,γ)^{P_γ(η-γ)}.
/// The even factor is the coroot-normalized linear form; on the δ-block,
/// where (γ,γ) = -2, this differs from (Λ+ρ,γ) - r and is the variant the
/// Gram-proportionality check confirms.
pub fn ks_determinant(lambda: &Weight, eta: &[i64], ps: &PositiveSystem) -> KsDeterminant {
    let sig = ps.signature();
    let shifted = lambda.add(ps.rho());
    let phi = crate::composition::positivity_grading_of(ps);
    let mut table = KostantTable::new(ps);
    let mut factors = Vec::new();

    for gamma in ps.even_positive() {
        let step = grade(&phi, gamma.coords());
        let budget = grade(&phi, eta);
        let mut r = 1i64;
        while r * step <= budget {
            let reduced: Vec<i64> = eta
                .iter()
                .zip(gamma.coords())
                .map(|(e, g)| e - r * g)
                .collect();
            let exponent = table.count(&reduced);
            if exponent > 0 {
                let norm = form_int(sig.m, gamma.coords(), gamma.coords());
                let base = rat(2) * shifted.pair_root(gamma) / rat(norm) - rat(r);
                factors.push(KsFactor { base, exponent });
            }
            r += 1;
        }
    }
    for gamma in ps.odd_positive() {
        let reduced: Vec<i64> = eta.iter().zip(gamma.coords()).map(|(e, g)| e - g).collect();
        let exponent = table.count_excluding(gamma, &reduced);
        if exponent > 0 {
            factors.push(KsFactor {
                base: shifted.pair_root(gamma),
                exponent,
            });
        }
    }

    let mut value = Rat::one();
    for f in &factors {
        for _ in 0..f.exponent {
            value *= f.base.clone();
        }
    }
    KsDeterminant { factors, value }
}

/// All distinct nonzero weights expressible as sums of at most `depth`
/// positive roots (odd roots at most once per sum).
pub fn eta_candidates(ps: &PositiveSystem, depth: usize) -> Vec<Vec<i64>> {
    let dim = ps.signature().dim();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let roots: Vec<(&Root, Option<usize>)> = ps
        .even_positive()
        .iter()
        .map(|r| (r, None))
        .chain(
            ps.odd_positive()
                .iter()
                .enumerate()
                .map(|(i, r)| (r, Some(i))),
        )
        .collect();
    // frontier entries carry the odd-use mask so odd roots enter each sum
    // at most once
    let mut frontier: Vec<(Vec<i64>, u64)> = vec![(vec![0i64; dim], 0)];
    for _ in 0..depth {
        let mut next = Vec::new();
        for (sum, mask) in &frontier {
            for (root, odd_idx) in &roots {
                if let Some(i) = odd_idx {
                    if mask & (1 << i) != 0 {
                        continue;
                    }
                }
                let mut s = sum.clone();
                for (slot, &c) in root.coords().iter().enumerate() {
                    s[slot] += c;
                }
                let new_mask = match odd_idx {
                    Some(i) => mask | (1 << i),
                    None => *mask,
                };
                seen.insert(s.clone());
                next.push((s, new_mask));
            }
        }
        frontier = next;
    }
    seen.into_iter().collect()
}

/// Sweep all weight spaces of height at most `depth`; return the first η
/// whose Gram matrix is not positive semidefinite.
pub fn first_non_psd(
    lambda: &Weight,
    ps: &PositiveSystem,
    variant: OmegaVariant,
    depth: usize,
) -> Result<Option<Vec<i64>>, Error> {
    for eta in eta_candidates(ps, depth) {
        let g = gram(lambda, &eta, ps, variant)?;
        if g.dim() == 0 {
            continue;
        }
        if !is_psd(&g)? {
            return Ok(Some(eta));
        }
    }
    Ok(None)
}
