//! Command-line front end: classification verdicts, Dirac margins, family
//! sweeps, Gram matrices, determinant factorizations, and the
//! classifier-vs-form oracle. Output is JSON by default (`--table` for a
//! human-readable rendering); every number is exact.

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use sluni::algebra::{build_positive_system, PositiveSystem, PositiveSystemKind};
use sluni::rat::{format_rat, parse_rat, Rat};
use sluni::report;
use sluni::shapovalov::{self, OmegaVariant};
use sluni::weights::{unitarity_conditions, FdFamily, IfdFamily};
use sluni::{classify, Error, Signature, Verdict, Weight};

const MAX_ORACLE_DEPTH: usize = 4;

#[derive(Parser)]
#[command(
    name = "sluni",
    about = "Unitarizability of highest-weight sl(m|n) supermodules, in exact arithmetic",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OutputOpts {
    /// Emit JSON (the default)
    #[arg(long)]
    json: bool,
    /// Emit a human-readable table instead of JSON
    #[arg(long, conflicts_with = "json")]
    table: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Weyl vector of a positive system
    Rho {
        /// Signature as p,q,n (m = p+q)
        #[arg(long)]
        sig: String,
        /// standard | antistandard | nonstandard (default: by signature)
        #[arg(long)]
        system: Option<String>,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Decide unitarizability of one highest weight
    Classify {
        #[arg(long)]
        sig: String,
        /// Weight as "l1,..,lm|u1,..,un" with rational entries
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        /// Require the psl(n|n) supertrace constraint (m = n only)
        #[arg(long)]
        psl: bool,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Print (Λ+ρ, α) for every odd positive root α
    Margins {
        #[arg(long)]
        sig: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long)]
        system: Option<String>,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Classify a one-parameter family at one x or over a sweep
    Family {
        #[arg(long)]
        sig: String,
        /// Comma list a1,..,am (a1 = 0; for p,q ≥ 1 also am = 0)
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        /// Comma list b1,..,bn (bn = 0)
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        /// Continuous su(p,q) parameter (non-compact signatures only)
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        /// Single family parameter value
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
        /// Sweep as from:to:step with rational entries, step > 0
        #[arg(long, conflicts_with = "x", allow_hyphen_values = true)]
        sweep: Option<String>,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Gram matrix of the contravariant form on a Verma weight space
    Gram {
        #[arg(long)]
        sig: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        /// Depth weight η as "c1,..,cm|d1,..,dn" with integer entries
        #[arg(long, allow_hyphen_values = true)]
        eta: String,
        #[arg(long)]
        system: Option<String>,
        /// plus | minus | minus-plus | plus-minus (default: by signature)
        #[arg(long)]
        variant: Option<String>,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Factored determinant of the form on a Verma weight space
    Ksdet {
        #[arg(long)]
        sig: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long, allow_hyphen_values = true)]
        eta: String,
        #[arg(long)]
        system: Option<String>,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Cross-check the classifier against Gram-matrix positivity
    Oracle {
        #[arg(long)]
        sig: String,
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        sweep: Option<String>,
        /// Maximum number of positive roots summed into each η (≤ 4)
        #[arg(long, default_value_t = 3)]
        depth: usize,
        #[command(flatten)]
        out: OutputOpts,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 64,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn parse_sig(s: &str) -> Result<Signature, Error> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(Error::Parse(format!("signature `{s}` must be p,q,n")));
    }
    let nums: Result<Vec<usize>, _> = parts.iter().map(|p| p.trim().parse::<usize>()).collect();
    let nums = nums.map_err(|_| Error::Parse(format!("signature `{s}` must be p,q,n")))?;
    Signature::new(nums[0], nums[1], nums[2])
}

fn parse_system(sig: &Signature, flag: Option<&str>) -> Result<PositiveSystemKind, Error> {
    match flag {
        None => Ok(if sig.is_compact() {
            PositiveSystemKind::Standard
        } else {
            PositiveSystemKind::NonStandard
        }),
        Some("standard") => Ok(PositiveSystemKind::Standard),
        Some("antistandard") => Ok(PositiveSystemKind::AntiStandard),
        Some("nonstandard") => Ok(PositiveSystemKind::NonStandard),
        Some(other) => Err(Error::Parse(format!("unknown system `{other}`"))),
    }
}

fn parse_weight(s: &str, sig: &Signature) -> Result<Weight, Error> {
    let w = Weight::parse(s)?;
    if w.m() != sig.m || w.n() != sig.n {
        return Err(Error::LengthMismatch {
            expected: sig.dim(),
            got: w.coords().len(),
        });
    }
    Ok(w)
}

fn parse_eta(s: &str, sig: &Signature) -> Result<Vec<i64>, Error> {
    let (left, right) = s
        .split_once('|')
        .ok_or_else(|| Error::Parse(format!("eta `{s}` is missing the `|` separator")))?;
    let mut coords = Vec::new();
    for part in left.split(',').chain(right.split(',')) {
        coords.push(
            part.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("eta entry `{part}` is not an integer")))?,
        );
    }
    if coords.len() != sig.dim() || left.split(',').count() != sig.m {
        return Err(Error::LengthMismatch {
            expected: sig.dim(),
            got: coords.len(),
        });
    }
    Ok(coords)
}

fn parse_int_list(s: &str, expected: usize, what: &str) -> Result<Vec<i64>, Error> {
    let vals: Result<Vec<i64>, _> = s.split(',').map(|p| p.trim().parse::<i64>()).collect();
    let vals = vals.map_err(|_| Error::Parse(format!("{what} list `{s}` must be integers")))?;
    if vals.len() != expected {
        return Err(Error::Parse(format!(
            "{what} list must have {expected} entries"
        )));
    }
    Ok(vals)
}

fn parse_sweep(s: &str) -> Result<Vec<Rat>, Error> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err(Error::Parse(format!("sweep `{s}` must be from:to:step")));
    }
    let from = parse_rat(parts[0])?;
    let to = parse_rat(parts[1])?;
    let step = parse_rat(parts[2])?;
    if step <= sluni::rat::zero() {
        return Err(Error::Parse("sweep step must be positive".into()));
    }
    let mut grid = Vec::new();
    let mut x = from;
    while x <= to {
        grid.push(x.clone());
        x += step.clone();
    }
    Ok(grid)
}

fn emit(out: &OutputOpts, value: Value, table: impl FnOnce(&Value) -> String) {
    if out.table {
        println!("{}", table(&value));
    } else {
        println!(
            "{}",
            serde_json::to_string_pretty(&value).expect("valid json")
        );
    }
}

enum FamilyKind {
    Fd(FdFamily),
    Ifd(IfdFamily),
}

impl FamilyKind {
    fn build(sig: &Signature, a: &str, b: &str, lambda: Option<&str>) -> Result<FamilyKind, Error> {
        let a = parse_int_list(a, sig.m, "a")?;
        let b = parse_int_list(b, sig.n, "b")?;
        if sig.is_compact() {
            if lambda.is_some() {
                return Err(Error::Parse(
                    "--lambda applies only to non-compact signatures".into(),
                ));
            }
            Ok(FamilyKind::Fd(FdFamily::new(
                sig,
                a,
                b,
                sluni::rat::zero(),
            )?))
        } else {
            let lambda = parse_rat(
                lambda.ok_or_else(|| Error::Parse("non-compact families need --lambda".into()))?,
            )?;
            Ok(FamilyKind::Ifd(IfdFamily::new(
                sig,
                a,
                b,
                lambda,
                sluni::rat::zero(),
            )?))
        }
    }

    fn weight_at(&self, x: &Rat) -> Weight {
        match self {
            FamilyKind::Fd(f) => f.with_x(x.clone()).weight(),
            FamilyKind::Ifd(f) => f.with_x(x.clone()).weight(),
        }
    }
}

fn grid_from(x: Option<&str>, sweep: Option<&str>) -> Result<Vec<Rat>, Error> {
    match (x, sweep) {
        (Some(x), None) => Ok(vec![parse_rat(x)?]),
        (None, Some(s)) => parse_sweep(s),
        _ => Err(Error::Parse("give exactly one of --x or --sweep".into())),
    }
}

fn verdict_line(x: Option<&Rat>, lambda: &Weight, verdict: &Verdict) -> String {
    let mark = if verdict.unitarizable { "yes" } else { "no " };
    let reason = verdict
        .reasons
        .first()
        .map(|r| r.condition.clone())
        .unwrap_or_default();
    match x {
        Some(x) => format!(
            "x = {:>8}  {}  {}  [{}]",
            format_rat(x),
            lambda,
            mark,
            reason
        ),
        None => format!("{}  {}  [{}]", lambda, mark, reason),
    }
}

/// One oracle check: the classifier's verdict against exact PSD
/// certification of the Gram matrices up to the depth bound.
fn oracle_point(
    lambda: &Weight,
    sig: &Signature,
    ps: &PositiveSystem,
    depth: usize,
) -> Result<Value, Error> {
    let verdict = classify(lambda, sig, false)?;
    let variant = OmegaVariant::default_for(sig);
    let (agrees, status, witness) = if verdict.unitarizable {
        match shapovalov::first_non_psd(lambda, ps, variant, depth)? {
            None => (true, "psd-confirmed", None),
            Some(eta) => (false, "non-psd-despite-verdict", Some(eta)),
        }
    } else {
        let witness = shapovalov::first_non_psd(lambda, ps, variant, depth.min(2))?;
        match witness {
            Some(eta) => (true, "non-psd-witness", Some(eta)),
            None => {
                let conditions_hold = unitarity_conditions(lambda, sig, ps)?.holds;
                if conditions_hold {
                    (false, "no-witness-despite-conditions", None)
                } else {
                    (true, "conditions-violated", None)
                }
            }
        }
    };
    Ok(json!({
        "weight": lambda.to_string(),
        "unitarizable": verdict.unitarizable,
        "agrees": agrees,
        "status": status,
        "witness_eta": witness.map(|e| report_eta(&e, sig.m)),
    }))
}

fn report_eta(eta: &[i64], m: usize) -> String {
    let left: Vec<String> = eta[..m].iter().map(|c| c.to_string()).collect();
    let right: Vec<String> = eta[m..].iter().map(|c| c.to_string()).collect();
    format!("{}|{}", left.join(","), right.join(","))
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Rho { sig, system, out } => {
            let sig = parse_sig(&sig)?;
            let kind = parse_system(&sig, system.as_deref())?;
            let ps = build_positive_system(&sig, kind)?;
            emit(&out, report::rho_json(&ps), |v| {
                format!("rho = {}", v["rho"].as_str().unwrap_or_default())
            });
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify {
            sig,
            weight,
            psl,
            out,
        } => {
            let sig = parse_sig(&sig)?;
            let lambda = parse_weight(&weight, &sig)?;
            let verdict = classify(&lambda, &sig, psl)?;
            emit(&out, report::verdict_json(&lambda, &sig, &verdict), |v| {
                let mut s = verdict_line(None, &lambda, &verdict);
                if let Some(reasons) = v["reasons"].as_array() {
                    for r in reasons {
                        s.push_str(&format!(
                            "\n  {} root={} margin={}",
                            r["condition"].as_str().unwrap_or(""),
                            r["root"].as_str().unwrap_or("-"),
                            r["margin"].as_str().unwrap_or("-"),
                        ));
                    }
                }
                s
            });
            Ok(ExitCode::SUCCESS)
        }
        Command::Margins {
            sig,
            weight,
            system,
            out,
        } => {
            let sig = parse_sig(&sig)?;
            let lambda = parse_weight(&weight, &sig)?;
            let kind = parse_system(&sig, system.as_deref())?;
            let ps = build_positive_system(&sig, kind)?;
            emit(&out, report::margins_json(&lambda, &ps), |v| {
                v["margins"]
                    .as_array()
                    .map(|rows| {
                        rows.iter()
                            .map(|r| {
                                format!(
                                    "{:>10}  {}",
                                    r["root"].as_str().unwrap_or(""),
                                    r["margin"].as_str().unwrap_or("")
                                )
                            })
                            .collect::<Vec<_>>()
                            .join("\n")
                    })
                    .unwrap_or_default()
            });
            Ok(ExitCode::SUCCESS)
        }
        Command::Family {
            sig,
            a,
            b,
            lambda,
            x,
            sweep,
            out,
        } => {
            let sig = parse_sig(&sig)?;
            let family = FamilyKind::build(&sig, &a, &b, lambda.as_deref())?;
            let grid = grid_from(x.as_deref(), sweep.as_deref())?;
            let mut points = Vec::new();
            let mut lines = Vec::new();
            for x in &grid {
                let w = family.weight_at(x);
                let verdict = classify(&w, &sig, false)?;
                lines.push(verdict_line(Some(x), &w, &verdict));
                points.push(json!({
                    "x": format_rat(x),
                    "weight": w.to_string(),
                    "unitarizable": verdict.unitarizable,
                    "reasons": verdict.reasons.iter().map(report::reason_json).collect::<Vec<_>>(),
                }));
            }
            emit(
                &out,
                json!({"sig": report::signature_json(&sig), "points": points}),
                |_| lines.join("\n"),
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Gram {
            sig,
            weight,
            eta,
            system,
            variant,
            out,
        } => {
            let sig = parse_sig(&sig)?;
            let lambda = parse_weight(&weight, &sig)?;
            let eta = parse_eta(&eta, &sig)?;
            let kind = parse_system(&sig, system.as_deref())?;
            let ps = build_positive_system(&sig, kind)?;
            let variant = match variant {
                Some(v) => OmegaVariant::parse(&v)?,
                None => OmegaVariant::default_for(&sig),
            };
            let g = shapovalov::gram(&lambda, &eta, &ps, variant)?;
            let psd = shapovalov::is_psd(&g)?;
            emit(&out, report::gram_json(&g, sig.m, psd), |v| {
                let mut s = format!(
                    "eta {}  dim {}  rank {}  psd {}",
                    v["eta"].as_str().unwrap_or(""),
                    g.dim(),
                    g.rank(),
                    psd
                );
                for row in &g.entries {
                    s.push('\n');
                    s.push_str(
                        &row.iter()
                            .map(|e| format!("{:>10}", format_rat(e)))
                            .collect::<Vec<_>>()
                            .join(" "),
                    );
                }
                s
            });
            Ok(ExitCode::SUCCESS)
        }
        Command::Ksdet {
            sig,
            weight,
            eta,
            system,
            out,
        } => {
            let sig = parse_sig(&sig)?;
            let lambda = parse_weight(&weight, &sig)?;
            let eta = parse_eta(&eta, &sig)?;
            let kind = parse_system(&sig, system.as_deref())?;
            let ps = build_positive_system(&sig, kind)?;
            let ks = shapovalov::ks_determinant(&lambda, &eta, &ps);
            emit(&out, report::ksdet_json(&ks, &eta, sig.m), |v| {
                let factors = v["factors"]
                    .as_array()
                    .map(|fs| {
                        fs.iter()
                            .map(|f| {
                                format!("({})^{}", f["base"].as_str().unwrap_or(""), f["exponent"])
                            })
                            .collect::<Vec<_>>()
                            .join(" * ")
                    })
                    .unwrap_or_default();
                format!(
                    "det = {}  =  {}",
                    v["value"].as_str().unwrap_or(""),
                    factors
                )
            });
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle {
            sig,
            weight,
            a,
            b,
            lambda,
            x,
            sweep,
            depth,
            out,
        } => {
            if depth == 0 || depth > MAX_ORACLE_DEPTH {
                return Err(Error::Parse(format!(
                    "depth must be between 1 and {MAX_ORACLE_DEPTH}"
                )));
            }
            let sig = parse_sig(&sig)?;
            let kind = parse_system(&sig, None)?;
            let ps = build_positive_system(&sig, kind)?;
            let weights: Vec<Weight> = match weight {
                Some(w) => vec![parse_weight(&w, &sig)?],
                None => {
                    let missing = || Error::Parse("oracle needs --weight or --a/--b".into());
                    let family = FamilyKind::build(
                        &sig,
                        a.as_deref().ok_or_else(missing)?,
                        b.as_deref().ok_or_else(missing)?,
                        lambda.as_deref(),
                    )?;
                    grid_from(x.as_deref(), sweep.as_deref())?
                        .iter()
                        .map(|x| family.weight_at(x))
                        .collect()
                }
            };
            let mut points = Vec::new();
            let mut all_agree = true;
            for w in &weights {
                let point = oracle_point(w, &sig, &ps, depth)?;
                all_agree &= point["agrees"].as_bool().unwrap_or(false);
                points.push(point);
            }
            let value = json!({
                "sig": report::signature_json(&sig),
                "depth": depth,
                "agree": all_agree,
                "points": points,
            });
            emit(&out, value, |v| {
                let mut lines = vec![format!("agree = {all_agree}")];
                if let Some(pts) = v["points"].as_array() {
                    for p in pts {
                        lines.push(format!(
                            "{}  unitarizable={} status={}",
                            p["weight"].as_str().unwrap_or(""),
                            p["unitarizable"],
                            p["status"].as_str().unwrap_or("")
                        ));
                    }
                }
                lines.join("\n")
            });
            Ok(if all_agree {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}
