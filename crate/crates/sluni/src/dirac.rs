//! Casimir eigenvalues, Dirac margins, and the top-level classification of
//! unitarizable highest-weight supermodules.
//!
//! The compact case (p = 0 or q = 0) is decided against the standard
//! positive system, the non-compact case against the non-standard one. A
//! verdict records which condition settled it, with the witnessing root
//! and margin.

use num_traits::{Signed, Zero};

use crate::algebra::{build_positive_system, PositiveSystem, PositiveSystemKind, Root, Signature};
use crate::error::Error;
use crate::rat::{rat, ratio, Rat};
use crate::weights::{i0_of, j0_of, k0_of, unitarity_conditions, FdFamily, IfdFamily, Weight};

pub use crate::weights::Reason;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Case {
    Compact,
    Noncompact,
}

impl std::fmt::Display for Case {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Case::Compact => "compact",
            Case::Noncompact => "noncompact",
        })
    }
}

/// Outcome of the classification with its reason trace. Reasons list the
/// violated unitarity conditions for a negative verdict, or the
/// classification clause that fired for a positive one.
#[derive(Debug, Clone)]
pub struct Verdict {
    pub unitarizable: bool,
    pub case: Case,
    pub reasons: Vec<Reason>,
}

/// (Λ+2ρ, Λ), the quadratic Casimir eigenvalue on a highest-weight module.
pub fn casimir_eigenvalue(lambda: &Weight, ps: &PositiveSystem) -> Rat {
    let two_rho = ps.rho().scale(&rat(2));
    lambda.add(&two_rho).pair(lambda)
}

/// (Λ+ρ, α) for an odd positive root α of the system.
pub fn dirac_margin(lambda: &Weight, alpha: &Root, ps: &PositiveSystem) -> Result<Rat, Error> {
    ps.margin(lambda, alpha)
}

/// Whether the constituent at Λ-α satisfies the Dirac inequality in the
/// non-compact orientation: (Λ-α+2ρ, Λ-α) ≥ (Λ+2ρ, Λ). Equals
/// `dirac_margin(Λ, α) ≤ 0` identically; exposed for property checks.
pub fn dirac_inequality_equiv(
    lambda: &Weight,
    alpha: &Root,
    ps: &PositiveSystem,
) -> Result<bool, Error> {
    if !ps.contains_odd(alpha) {
        return Err(Error::NotOddPositive);
    }
    let mu = lambda.sub_root(alpha);
    Ok(casimir_eigenvalue(&mu, ps) >= casimir_eigenvalue(lambda, ps))
}

/// Finite-dimensional case: p = 0 or q = 0, standard system. Unitarizable
/// iff the unitarity conditions hold and either some margin
/// (Λ+ρ, ε_m - δ_k) vanishes for k in [k₀, n], or (Λ+ρ, ε_m - δ_n) > 0.
pub fn classify_fd(lambda: &Weight, sig: &Signature) -> Result<Verdict, Error> {
    if !sig.is_compact() {
        return Err(Error::WrongCase("classify_fd needs p = 0 or q = 0".into()));
    }
    let ps = build_positive_system(sig, PositiveSystemKind::Standard)?;
    let report = unitarity_conditions(lambda, sig, &ps)?;
    if !report.holds {
        return Ok(Verdict {
            unitarizable: false,
            case: Case::Compact,
            reasons: report.violations,
        });
    }
    let shifted = lambda.add(ps.rho());
    let k0 = k0_of(lambda);
    for k in k0..=sig.n {
        let root = Root::eps_delta(sig, sig.m, k);
        let margin = shifted.pair_root(&root);
        if margin.is_zero() {
            return Ok(Verdict {
                unitarizable: true,
                case: Case::Compact,
                reasons: vec![Reason::with_root(
                    "fd.b.i: margin vanishes on the plateau",
                    root,
                    margin,
                )],
            });
        }
    }
    let corner = Root::eps_delta(sig, sig.m, sig.n);
    let corner_margin = shifted.pair_root(&corner);
    if corner_margin.is_positive() {
        return Ok(Verdict {
            unitarizable: true,
            case: Case::Compact,
            reasons: vec![Reason::with_root(
                "fd.b.ii: minimal margin positive",
                corner,
                corner_margin,
            )],
        });
    }
    let k0_root = Root::eps_delta(sig, sig.m, k0);
    let k0_margin = shifted.pair_root(&k0_root);
    Ok(Verdict {
        unitarizable: false,
        case: Case::Compact,
        reasons: vec![
            Reason::with_root(
                "fd.b.i: no vanishing margin on the plateau",
                k0_root,
                k0_margin,
            ),
            Reason::with_root(
                "fd.b.ii: minimal margin not positive",
                corner,
                corner_margin,
            ),
        ],
    })
}

/// Infinite-dimensional case: p, q ≥ 1, non-standard system. Unitarizable
/// iff the unitarity conditions hold and one of the four clauses fires;
/// clause quantifiers over i ≤ i₀ and j ≤ j₀ are existential.
pub fn classify_ifd(lambda: &Weight, sig: &Signature) -> Result<Verdict, Error> {
    if sig.is_compact() {
        return Err(Error::WrongCase(
            "classify_ifd needs p >= 1 and q >= 1".into(),
        ));
    }
    let ps = build_positive_system(sig, PositiveSystemKind::NonStandard)?;
    let report = unitarity_conditions(lambda, sig, &ps)?;
    if !report.holds {
        return Ok(Verdict {
            unitarizable: false,
            case: Case::Noncompact,
            reasons: report.violations,
        });
    }
    let shifted = lambda.add(ps.rho());
    let i0 = i0_of(lambda, sig);
    let j0 = j0_of(lambda, sig);

    let a_zero = (1..=i0)
        .map(|i| Root::eps_delta(sig, i, 1))
        .find(|r| shifted.pair_root(r).is_zero());
    let b_zero = (0..=j0)
        .map(|j| Root::delta_eps(sig, sig.n, sig.m - j))
        .find(|r| shifted.pair_root(r).is_zero());
    let b_top = Root::delta_eps(sig, sig.n, sig.m);
    let b_top_margin = shifted.pair_root(&b_top);
    let a_top = Root::eps_delta(sig, 1, 1);
    let a_top_margin = shifted.pair_root(&a_top);

    let fired: Option<Reason> = match (&a_zero, &b_zero) {
        (Some(root), _) if b_top_margin.is_negative() => Some(Reason::with_root(
            "ifd.b.i: B-margins negative, A-margin vanishes",
            root.clone(),
            rat(0),
        )),
        (Some(root), Some(_)) => Some(Reason::with_root(
            "ifd.b.ii: margins vanish on both sides",
            root.clone(),
            rat(0),
        )),
        (_, Some(root)) if a_top_margin.is_negative() => Some(Reason::with_root(
            "ifd.b.iii: B-margin vanishes, A-margins negative",
            root.clone(),
            rat(0),
        )),
        _ if b_top_margin.is_negative() && a_top_margin.is_negative() => Some(Reason::with_root(
            "ifd.b.iv: all margins negative",
            b_top.clone(),
            b_top_margin.clone(),
        )),
        _ => None,
    };

    match fired {
        Some(reason) => Ok(Verdict {
            unitarizable: true,
            case: Case::Noncompact,
            reasons: vec![reason],
        }),
        None => Ok(Verdict {
            unitarizable: false,
            case: Case::Noncompact,
            reasons: vec![
                Reason::with_root(
                    "ifd.b.iv: maximal B-margin not negative",
                    b_top,
                    b_top_margin,
                ),
                Reason::with_root(
                    "ifd.b.iv: maximal A-margin not negative",
                    a_top,
                    a_top_margin,
                ),
            ],
        }),
    }
}

/// Dispatch on the signature; in psl mode (m = n) the representative must
/// additionally satisfy Σλ - Σμ = 0.
pub fn classify(lambda: &Weight, sig: &Signature, psl: bool) -> Result<Verdict, Error> {
    if psl {
        if sig.m != sig.n {
            return Err(Error::WrongCase("psl mode needs m = n".into()));
        }
        if !lambda.supertrace().is_zero() {
            return Err(Error::PslConstraintViolated);
        }
    }
    if sig.is_compact() {
        classify_fd(lambda, sig)
    } else {
        classify_ifd(lambda, sig)
    }
}

/// Closed-form family thresholds: the ends of the continuous unitary
/// window and of the residual intervals.
#[derive(Debug, Clone, PartialEq)]
pub enum Thresholds {
    Fd {
        x_min: Rat,
        x_max: Rat,
    },
    Ifd {
        xl_min: Rat,
        xl_max: Rat,
        xr_min: Rat,
        xr_max: Rat,
    },
}

impl Thresholds {
    /// FD: x_min = a_m + k₀ - 1, x_max = a_m + n - 1.
    pub fn for_fd(fam: &FdFamily) -> Thresholds {
        let sig = fam.signature();
        let idx = fam.indices();
        let am = rat(fam.a()[sig.m - 1]);
        Thresholds::Fd {
            x_min: &am + rat(idx.k0 as i64 - 1),
            x_max: &am + rat(sig.n as i64 - 1),
        }
    }

    /// IFD: xL = λ/2 + q - j₀ - 1 .. λ/2 + q - 1 and
    ///      xR = -λ/2 - b₁ - p + 1 .. -λ/2 - b₁ - p + i₀,
    /// with the margin-side j₀ (the residual-interval endpoints are where
    /// B-block margins vanish).
    pub fn for_ifd(fam: &IfdFamily) -> Thresholds {
        let sig = fam.signature();
        let idx = fam.indices();
        let j0 = j0_of(&fam.weight(), sig);
        let half = fam.lambda() * ratio(1, 2);
        let (p, q) = (sig.p as i64, sig.q as i64);
        let b1 = rat(fam.b()[0]);
        Thresholds::Ifd {
            xl_min: &half + rat(q - j0 as i64 - 1),
            xl_max: &half + rat(q - 1),
            xr_min: -&half - &b1 + rat(1 - p),
            xr_max: -&half - &b1 + rat(idx.i0 as i64 - p),
        }
    }
}
