//! Machine-readable reports. Rationals are serialized as `p/q` strings
//! (bare integers when the denominator is 1), weights in the
//! `l1,..,lm|u1,..,un` text form, roots as `e1-d1`-style names.

use serde_json::{json, Value};

use crate::algebra::{PositiveSystem, Signature};
use crate::dirac::Verdict;
use crate::rat::format_rat;
use crate::shapovalov::{GramMatrix, KsDeterminant};
use crate::weights::{Reason, UnitarityReport, Weight};

pub fn signature_json(sig: &Signature) -> Value {
    json!({
        "m": sig.m,
        "n": sig.n,
        "p": sig.p,
        "q": sig.q,
    })
}

pub fn reason_json(reason: &Reason) -> Value {
    json!({
        "condition": reason.condition,
        "root": reason.root.as_ref().map(|r| r.to_string()),
        "margin": reason.margin.as_ref().map(format_rat),
    })
}

pub fn verdict_json(lambda: &Weight, sig: &Signature, verdict: &Verdict) -> Value {
    json!({
        "sig": signature_json(sig),
        "weight": lambda.to_string(),
        "unitarizable": verdict.unitarizable,
        "case": verdict.case.to_string(),
        "reasons": verdict.reasons.iter().map(reason_json).collect::<Vec<_>>(),
    })
}

pub fn unitarity_json(report: &UnitarityReport) -> Value {
    json!({
        "holds": report.holds,
        "violations": report.violations.iter().map(reason_json).collect::<Vec<_>>(),
    })
}

pub fn rho_json(ps: &PositiveSystem) -> Value {
    json!({
        "sig": signature_json(ps.signature()),
        "system": ps.kind().map(|k| k.to_string()),
        "rho": ps.rho().to_string(),
        "rho0": ps.rho0().to_string(),
        "rho1": ps.rho1().to_string(),
    })
}

pub fn margins_json(lambda: &Weight, ps: &PositiveSystem) -> Value {
    let shifted = lambda.add(ps.rho());
    let margins: Vec<Value> = ps
        .odd_positive()
        .iter()
        .map(|root| {
            json!({
                "root": root.to_string(),
                "margin": format_rat(&shifted.pair_root(root)),
            })
        })
        .collect();
    json!({
        "sig": signature_json(ps.signature()),
        "system": ps.kind().map(|k| k.to_string()),
        "weight": lambda.to_string(),
        "margins": margins,
    })
}

fn eta_string(eta: &[i64], m: usize) -> String {
    let left: Vec<String> = eta[..m].iter().map(|c| c.to_string()).collect();
    let right: Vec<String> = eta[m..].iter().map(|c| c.to_string()).collect();
    format!("{}|{}", left.join(","), right.join(","))
}

fn monomial_string(mono: &[crate::shapovalov::BasisElement]) -> String {
    if mono.is_empty() {
        return "1".to_string();
    }
    mono.iter()
        .map(|e| format!("E({},{})", e.row, e.col))
        .collect::<Vec<_>>()
        .join("*")
}

pub fn gram_json(g: &GramMatrix, m: usize, psd: bool) -> Value {
    json!({
        "eta": eta_string(&g.eta, m),
        "dim": g.dim(),
        "basis": g.basis.iter().map(|b| monomial_string(b)).collect::<Vec<_>>(),
        "entries": g
            .entries
            .iter()
            .map(|row| row.iter().map(format_rat).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
        "rank": g.rank(),
        "psd": psd,
    })
}

pub fn ksdet_json(ks: &KsDeterminant, eta: &[i64], m: usize) -> Value {
    json!({
        "eta": eta_string(eta, m),
        "factors": ks
            .factors
            .iter()
            .map(|f| json!({"base": format_rat(&f.base), "exponent": f.exponent}))
            .collect::<Vec<_>>(),
        "value": format_rat(&ks.value),
    })
}
