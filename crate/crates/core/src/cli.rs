//! Command-line front end. Every subcommand prints one JSON document.
//!
//! Exit codes: 0 when the question is decided, 2 when a budget ran out or a
//! verdict failed, 1 on usage or validation errors.

use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::base::AlternateBase;
use crate::certify::{certify, conjugate_series_mismatch, expanding_conjugate, inputs_from_expansions};
use crate::error::{Error, Result};
use crate::expand::{evaluate_expansion, greedy_expand, is_parry, ExpansionStatus, ParryVerdict};
use crate::field::{conjugate_embeddings, FieldElement};
use crate::json::{
    base_from_str, cert_inputs_from_str, element_from_json, element_to_json, interval_to_json, parse_rational,
    parse_value, poly_from_json, poly_to_json, rational_to_json,
};
use crate::polyq::classify_base_product;
use crate::spectrum::{remainder_spectrum_probe, spectrum, spectrum_bruteforce, SpectrumRequest, SpectrumResult};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_UNDECIDED: i32 = 2;

/// Default budget in groups of `p` digits.
pub const DEFAULT_BUDGET: usize = 10_000;

#[derive(Parser, Debug)]
#[command(name = "altbase", version, about = "Exact alternate-base expansions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Pisot / Salem classification of a minimal polynomial or of a base product.
    Classify {
        /// Ascending coefficients, e.g. "[-1,-1,1]".
        #[arg(long, conflicts_with = "base", required_unless_present = "base")]
        minpoly: Option<String>,
        #[arg(long)]
        base: Option<PathBuf>,
    },
    /// The grouped digit set Dig(beta).
    Digits {
        #[arg(long)]
        base: PathBuf,
    },
    /// Greedy expansion of x with a periodicity certificate.
    Expand {
        #[arg(long)]
        base: PathBuf,
        /// Exact rational or JSON coordinate array.
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        max_groups: usize,
        /// Number of digits shown.
        #[arg(long, default_value_t = 64)]
        prefix: usize,
    },
    /// Whether every shift expands beta_i - floor(beta_i) periodically.
    Parry {
        #[arg(long)]
        base: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        max_groups: usize,
    },
    /// Certify beta from periodic representations of 1/q_i.
    Certify {
        #[arg(long)]
        base: PathBuf,
        /// Certification input file.
        #[arg(long, conflicts_with = "q", required_unless_present = "q")]
        input: Option<PathBuf>,
        /// Build the inputs from greedy expansions of 1/q in every shift.
        #[arg(long)]
        q: Option<i64>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        max_groups: usize,
    },
    /// First partial sum of the expansion of x that differs at a conjugate.
    Mismatch {
        #[arg(long)]
        base: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, default_value_t = 64)]
        n: usize,
    },
    /// Spectrum of the field root over a digit set, inside a window.
    Spectrum {
        #[arg(long)]
        base: PathBuf,
        /// JSON array of rationals or coordinate arrays.
        #[arg(long, allow_hyphen_values = true)]
        digits: String,
        #[arg(long)]
        depth: usize,
        #[arg(long, allow_hyphen_values = true)]
        lo: String,
        #[arg(long, allow_hyphen_values = true)]
        hi: String,
        /// Include the points.
        #[arg(long)]
        points: bool,
        /// Enumerate all words instead of the pruned level iteration.
        #[arg(long)]
        bruteforce: bool,
    },
    /// Spectrum over -Dig u Dig u {x} in [0, 1], with the minimum gap per depth.
    Probe {
        #[arg(long)]
        base: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long)]
        depth: usize,
        #[arg(long)]
        points: bool,
    },
}

/// Exit code plus the text for stdout and stderr.
#[derive(Debug)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn read_base(path: &PathBuf) -> Result<AlternateBase> {
    base_from_str(&read(path)?)
}

fn read(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))
}

fn parse_element(b: &AlternateBase, text: &str) -> Result<FieldElement> {
    match parse_value(text) {
        Ok(v @ Value::Array(_)) => element_from_json(b.field(), &v),
        _ => Ok(FieldElement::from_rational(b.field(), parse_rational(text)?)),
    }
}

/// A gap is printed as a rational string when it is rational, else as coordinates.
fn gap_to_json(g: &Option<FieldElement>) -> Value {
    match g {
        None => Value::Null,
        Some(g) => match g.as_rational() {
            Some(r) => rational_to_json(r),
            None => element_to_json(g),
        },
    }
}

fn spectrum_to_json(r: &SpectrumResult, with_points: bool) -> Value {
    let mut v = json!({
        "depth": r.depth,
        "count": r.count(),
        "min_gap": gap_to_json(&r.min_gap),
        "min_gap_enclosure": r.min_gap.as_ref().map(|g| interval_to_json(&g.enclosure(64))),
        "truncated_at_depth": r.truncated_at_depth,
    });
    if with_points {
        v["points"] = Value::Array(r.points.iter().map(element_to_json).collect());
    }
    v
}

fn status_name(s: &ExpansionStatus) -> &'static str {
    match s {
        ExpansionStatus::Periodic(_) => "periodic",
        ExpansionStatus::BudgetExhausted(_) => "budget_exhausted",
    }
}

fn execute(cmd: Command) -> Result<(i32, Value)> {
    match cmd {
        Command::Classify { minpoly, base } => {
            let poly = match (minpoly, base) {
                (Some(text), _) => poly_from_json(&parse_value(&text)?)?,
                (None, Some(path)) => read_base(&path)?.field().minpoly().clone(),
                (None, None) => unreachable!("clap requires one of the two"),
            };
            let class = classify_base_product(&poly)?;
            Ok((EXIT_OK, json!({ "class": class, "minpoly": poly_to_json(&poly) })))
        }
        Command::Digits { base } => {
            let b = read_base(&base)?;
            let digits = b.digit_set()?;
            Ok((
                EXIT_OK,
                json!({
                    "p": b.p(),
                    "count": digits.len(),
                    "digits": digits.iter().map(element_to_json).collect::<Vec<_>>(),
                    "max_digit": element_to_json(&b.max_digit()),
                }),
            ))
        }
        Command::Expand { base, x, max_groups, prefix } => {
            let b = read_base(&base)?;
            let x = parse_element(&b, &x)?;
            let e = greedy_expand(&b, &x, max_groups)?;
            let p = b.p();
            let shown = e.digit_prefix(prefix).unwrap_or_else(|| e.digits.iter().take(prefix).copied().collect());
            let (cert, value_check) = match e.split_digits() {
                Some((pre, per)) => {
                    let v = evaluate_expansion(&b, pre, per)?;
                    (e.certificate(), if v == x { "exact-equal" } else { "mismatch" })
                }
                None => (None, "n/a"),
            };
            let code = if cert.is_some() && value_check == "exact-equal" { EXIT_OK } else { EXIT_UNDECIDED };
            Ok((
                code,
                json!({
                    "p": p,
                    "x": element_to_json(&x),
                    "digits_prefix": shown,
                    "preperiod_groups": cert.map(|c| c.s),
                    "period_groups": cert.map(|c| c.t),
                    "preperiod_digits": cert.map(|c| c.s * p),
                    "period_digits": cert.map(|c| c.t * p),
                    "groups_computed": e.grouped.len(),
                    "status": status_name(&e.status),
                    "value_check": value_check,
                }),
            ))
        }
        Command::Parry { base, max_groups } => {
            let b = read_base(&base)?;
            let report = is_parry(&b, max_groups)?;
            let shifts: Vec<Value> = report
                .shifts
                .iter()
                .enumerate()
                .map(|(i, (verdict, e))| match verdict {
                    ParryVerdict::Periodic(c) => json!({
                        "i": i,
                        "status": "periodic",
                        "preperiod_groups": c.s,
                        "period_groups": c.t,
                        "digits": e.digits,
                    }),
                    ParryVerdict::Unknown { budget } => json!({
                        "i": i,
                        "status": "budget_exhausted",
                        "budget": budget,
                    }),
                })
                .collect();
            let parry = report.is_parry();
            Ok((
                if parry { EXIT_OK } else { EXIT_UNDECIDED },
                json!({ "parry": if parry { "yes" } else { "unknown" }, "shifts": shifts }),
            ))
        }
        Command::Certify { base, input, q, max_groups } => {
            let b = read_base(&base)?;
            let inputs = match (input, q) {
                (Some(path), _) => cert_inputs_from_str(&read(&path)?)?,
                (None, Some(q)) => match inputs_from_expansions(&b, q, max_groups)? {
                    Some(v) => v,
                    None => {
                        return Ok((EXIT_UNDECIDED, json!({ "status": "budget_exhausted", "certified": false })));
                    }
                },
                (None, None) => unreachable!("clap requires one of the two"),
            };
            let r = certify(&b, &inputs)?;
            let certified = r.certified();
            Ok((
                if certified { EXIT_OK } else { EXIT_UNDECIDED },
                json!({
                    "m": r.m,
                    "k": r.k,
                    "value_checks": r.value_checks.iter().map(|(i, q, ok)| json!({"i": i, "q": q, "holds": ok})).collect::<Vec<_>>(),
                    "annihilator": r.annihilator.as_ref().map(poly_to_json),
                    "vanishes_at_beta": r.vanishes_at_beta,
                    "shift_identities": r.shift_identities,
                    "gcd_with_minpoly": r.relation.as_ref().map(|x| poly_to_json(&x.gcd)),
                    "minpoly_divides": r.relation.as_ref().map(|x| x.minpoly_divides),
                    "irreducibility_witness": r.irreducibility_witness,
                    "certified": certified,
                }),
            ))
        }
        Command::Mismatch { base, x, n } => {
            let b = read_base(&base)?;
            let x = parse_element(&b, &x)?;
            let e = expanding_conjugate(&b)?;
            let r = conjugate_series_mismatch(&b, &x, &e, n)?;
            let expanding = conjugate_embeddings(b.field(), true).len();
            Ok((
                if r.first_index.is_some() { EXIT_OK } else { EXIT_UNDECIDED },
                json!({
                    "conjugate": {
                        "index": e.index(),
                        "real": e.is_real(),
                        "modulus": interval_to_json(&e.modulus_enclosure(64)),
                    },
                    "expanding_conjugates": expanding,
                    "n": r.checked,
                    "first_index": r.first_index,
                    "difference": r.difference.as_ref().map(|d| json!({"re": interval_to_json(&d.re), "im": interval_to_json(&d.im)})),
                    "difference_sign": r.difference_sign,
                    "c": element_to_json(&r.c),
                    "d_upper": rational_to_json(&r.d_upper),
                    "bound_upper": rational_to_json(&r.bound_upper),
                }),
            ))
        }
        Command::Spectrum { base, digits, depth, lo, hi, points, bruteforce } => {
            let b = read_base(&base)?;
            let list = parse_value(&digits)?;
            let list = list
                .as_array()
                .ok_or_else(|| Error::Parse("--digits must be a JSON array".into()))?
                .iter()
                .map(|v| element_from_json(b.field(), v))
                .collect::<Result<Vec<_>>>()?;
            let req = SpectrumRequest {
                field: b.field().clone(),
                beta: b.product(),
                digits: list,
                depth,
                lo: parse_rational(&lo)?,
                hi: parse_rational(&hi)?,
            };
            let r = if bruteforce { spectrum_bruteforce(&req)? } else { spectrum(&req)? };
            Ok((EXIT_OK, spectrum_to_json(&r, points)))
        }
        Command::Probe { base, x, depth, points } => {
            let b = read_base(&base)?;
            let x = parse_element(&b, &x)?;
            let r = remainder_spectrum_probe(&b, &x, depth)?;
            let mut v = json!({
                "depth": depth,
                "digit_count": r.digits.len(),
                "per_depth": r.per_depth.iter().map(|l| spectrum_to_json(l, false)).collect::<Vec<_>>(),
                "count": r.last().count(),
                "min_gap": gap_to_json(&r.last().min_gap),
            });
            if points {
                v["points"] = Value::Array(r.last().points.iter().map(element_to_json).collect());
            }
            Ok((EXIT_OK, v))
        }
    }
}

fn error_json(e: &Error) -> String {
    json!({ "error": e.code(), "message": e.to_string() }).to_string()
}

/// Parse `args` (including the program name) and run the subcommand.
pub fn run<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                CliOutput { code, stdout: text, stderr: String::new() }
            } else {
                CliOutput { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(cli.command) {
        Ok((code, v)) => CliOutput { code, stdout: v.to_string(), stderr: String::new() },
        Err(e) => CliOutput { code: EXIT_ERROR, stdout: error_json(&e), stderr: String::new() },
    }
}
