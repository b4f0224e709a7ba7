//! Machine-readable p-value reports and exact decimal rendering.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Pow};
use serde::Serialize;

use crate::combinatorics::ExactRational;
use crate::engine::{ProblemInstance, RemainderPoolMode};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ComputationMode {
    Fast,
    Naive,
    Exhaustive,
    Montecarlo,
}

impl ComputationMode {
    pub fn as_str(self) -> &'static str {
        match self {
            ComputationMode::Fast => "fast",
            ComputationMode::Naive => "naive",
            ComputationMode::Exhaustive => "exhaustive",
            ComputationMode::Montecarlo => "montecarlo",
        }
    }
}

impl fmt::Display for ComputationMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ComputationMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "fast" => Ok(ComputationMode::Fast),
            "naive" => Ok(ComputationMode::Naive),
            "exhaustive" => Ok(ComputationMode::Exhaustive),
            "montecarlo" => Ok(ComputationMode::Montecarlo),
            other => Err(format!("unknown mode `{other}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub tool: String,
    pub version: String,
    pub parameters: BTreeMap<String, String>,
}

impl Provenance {
    pub fn new(tool: impl Into<String>, version: impl Into<String>) -> Self {
        Self {
            tool: tool.into(),
            version: version.into(),
            parameters: BTreeMap::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }
}

/// One computed tail probability. Every numeric field is a string so that
/// arbitrary-precision values survive JSON intact.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PValueReport {
    pub instance: ProblemInstance,
    pub mode: ComputationMode,
    pub remainder_mode: RemainderPoolMode,
    pub p_rational: String,
    pub p_decimal: String,
    pub log10_p: String,
    pub favorable_count: String,
    pub total_count: String,
    pub provenance: Provenance,
}

impl PValueReport {
    /// Builds the report from unreduced counts. The decimal and logarithmic
    /// fields are renderings of `favorable / total`.
    pub fn new(
        instance: ProblemInstance,
        mode: ComputationMode,
        remainder_mode: RemainderPoolMode,
        favorable: &BigUint,
        total: &BigUint,
        precision: usize,
        provenance: Provenance,
    ) -> Self {
        let p = ExactRational::from_counts(favorable, total).expect("report total is positive");
        Self {
            instance,
            mode,
            remainder_mode,
            p_rational: p.to_string(),
            p_decimal: render_decimal(&p, precision),
            log10_p: render_log10(&p),
            favorable_count: favorable.to_string(),
            total_count: total.to_string(),
            provenance,
        }
    }
}

/// Largest `e` with `10^e <= |value|`. `value` must be nonzero.
fn decimal_exponent(numer: &BigUint, denom: &BigUint) -> i64 {
    let digits = |v: &BigUint| v.to_str_radix(10).len() as i64;
    // |value| lies in [10^(e-1), 10^(e+1)) for this first guess.
    let mut e = digits(numer) - digits(denom);
    while !at_least_pow10(numer, denom, e) {
        e -= 1;
    }
    while at_least_pow10(numer, denom, e + 1) {
        e += 1;
    }
    e
}

fn pow10(e: u64) -> BigUint {
    BigUint::from(10u32).pow(e)
}

fn at_least_pow10(numer: &BigUint, denom: &BigUint, e: i64) -> bool {
    if e >= 0 {
        numer >= &(denom * pow10(e as u64))
    } else {
        numer * pow10(e.unsigned_abs()) >= *denom
    }
}

/// Renders `value` rounded half-up to `significant` digits.
///
/// Positional notation for exponents in `-6..significant`, scientific
/// (`1.25e-9`) otherwise; trailing fractional zeros are dropped. Output is
/// locale-independent.
pub fn render_decimal(value: &ExactRational, significant: usize) -> String {
    let significant = significant.max(1);
    if value.is_zero() {
        return "0".to_string();
    }
    let sign = if value.numer().sign() == Sign::Minus {
        "-"
    } else {
        ""
    };
    let numer = value.numer().magnitude();
    let denom = value.denom().magnitude();

    let mut exp = decimal_exponent(numer, denom);
    // mantissa = round(|value| * 10^(significant - 1 - exp))
    let shift = significant as i64 - 1 - exp;
    let (scaled_num, scaled_den) = if shift >= 0 {
        (numer * pow10(shift as u64), denom.clone())
    } else {
        (numer.clone(), denom * pow10(shift.unsigned_abs()))
    };
    let two = BigUint::from(2u32);
    let (mut mantissa, _) = (&two * scaled_num + &scaled_den).div_rem(&(&two * scaled_den));
    if mantissa == pow10(significant as u64) {
        mantissa = pow10(significant as u64 - 1);
        exp += 1;
    }
    let digits = mantissa.to_str_radix(10);

    let body = if (-6..significant as i64).contains(&exp) {
        if exp >= 0 {
            let (int, frac) = digits.split_at(exp as usize + 1);
            join_fraction(int, frac)
        } else {
            let zeros = "0".repeat(exp.unsigned_abs() as usize - 1);
            join_fraction("0", &format!("{zeros}{digits}"))
        }
    } else {
        let (lead, frac) = digits.split_at(1);
        format!("{}e{exp}", join_fraction(lead, frac))
    };
    format!("{sign}{body}")
}

fn join_fraction(int: &str, frac: &str) -> String {
    let frac = frac.trim_end_matches('0');
    if frac.is_empty() {
        int.to_string()
    } else {
        format!("{int}.{frac}")
    }
}

/// `log10` of a positive integer from its digit count and leading digits.
fn log10_biguint(value: &BigUint) -> f64 {
    const LEAD: usize = 17;
    let digits = value.to_str_radix(10);
    if digits.len() <= LEAD {
        return digits.parse::<f64>().expect("decimal digits").log10();
    }
    let lead: f64 = digits[..LEAD].parse().expect("decimal digits");
    lead.log10() + (digits.len() - LEAD) as f64
}

/// `log10(value)` to six decimals, `-inf` for zero. Never converts the full
/// numerator or denominator to a float.
pub fn render_log10(value: &ExactRational) -> String {
    if value.is_zero() {
        return "-inf".to_string();
    }
    if value.numer().sign() == Sign::Minus {
        return "nan".to_string();
    }
    let l = log10_biguint(value.numer().magnitude()) - log10_biguint(value.denom().magnitude());
    // Avoid "-0.000000" for values just below one.
    let l = if l.abs() < 5e-7 { 0.0 } else { l };
    format!("{l:.6}")
}

/// Parses a decimal rendered by [`render_decimal`] back into an exact value.
pub fn parse_decimal(text: &str) -> Option<ExactRational> {
    let (negative, text) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let (body, exp) = match text.split_once('e') {
        Some((b, e)) => (b, e.parse::<i64>().ok()?),
        None => (text, 0),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() || !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let mut numer: BigInt = format!("{int}{frac}").parse().ok()?;
    if negative {
        numer = -numer;
    }
    let scale = exp - frac.len() as i64;
    let mut denom = BigInt::one();
    if scale >= 0 {
        numer *= BigInt::from(pow10(scale as u64));
    } else {
        denom = BigInt::from(pow10(scale.unsigned_abs()));
    }
    ExactRational::new(numer, denom).ok()
}
