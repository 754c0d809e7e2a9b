//! Isogeny-class census for given `(q, P, m)`: enumeration of admissible
//! characteristic polynomials, closed-form counts, exhaustive realisation over
//! `L` and Euler-Poincare characteristic counts.
//!
//! Enumeration is the ground truth; closed forms are evaluated in exact
//! rationals and every disagreement is itemised in the report.

use std::collections::{BTreeMap, BTreeSet};
use std::io;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::classify::{weil_admissible, Verdict};
use crate::drinfeld::DrinfeldModule;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::ff::{Extension, FieldElement};
use crate::frobenius::{self, CharPoly};
use crate::poly::Poly;

/// Default cap on `q^(md)` for exhaustive realisation sweeps.
pub const DEFAULT_REALIZE_BOUND: u64 = 625;

/// Environment variable overriding [`DEFAULT_REALIZE_BOUND`].
pub const REALIZE_BOUND_ENV: &str = "DRINFELD_REALIZE_BOUND";

pub fn realize_bound_from_env() -> u64 {
    std::env::var(REALIZE_BOUND_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_REALIZE_BOUND)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    pub c: Poly,
    pub mu: FieldElement,
    pub verdict: Verdict,
}

impl Candidate {
    pub fn char_poly(&self, p: &Poly, m: usize) -> CharPoly {
        CharPoly {
            c: self.c.clone(),
            mu: self.mu.clone(),
            p: p.clone(),
            m,
        }
    }
}

/// Every `(c, mu)` with `deg c <= floor(md/2)` and `mu != 0`, with verdicts,
/// ordered by `(c, mu)` index.
#[derive(Debug, Clone)]
pub struct Enumeration {
    pub p: Poly,
    pub m: usize,
    pub candidates: Vec<Candidate>,
}

impl Enumeration {
    pub fn d(&self) -> usize {
        self.p.degree().expect("P is nonzero")
    }

    pub fn q(&self) -> u64 {
        self.p.field().order()
    }

    pub fn count(&self, verdict: Verdict) -> usize {
        self.candidates.iter().filter(|c| c.verdict == verdict).count()
    }

    pub fn admissible(&self) -> impl Iterator<Item = &Candidate> {
        self.candidates.iter().filter(|c| c.verdict.is_admissible())
    }

    pub fn total(&self) -> usize {
        self.admissible().count()
    }

    pub fn verdict_of(&self, c: &Poly, mu: &FieldElement) -> Option<Verdict> {
        self.candidates
            .iter()
            .find(|x| &x.c == c && &x.mu == mu)
            .map(|x| x.verdict)
    }
}

fn check_characteristic(p: &Poly, m: usize) -> Result<usize> {
    if m == 0 {
        return Err(Error::Domain("m must be positive".into()));
    }
    match p.degree() {
        Some(d) if d >= 1 && p.is_monic() && p.is_irreducible()? => Ok(d),
        _ => Err(Error::Domain(format!("P = {p} is not monic irreducible"))),
    }
}

pub fn enumerate(p: &Poly, m: usize, exec: Execution) -> Result<Enumeration> {
    let d = check_characteristic(p, m)?;
    let field = p.field();
    let q = field.order();
    let len = m * d / 2 + 1;
    let size = q
        .checked_pow(len as u32)
        .and_then(|n| n.checked_mul(q - 1))
        .ok_or_else(|| Error::Domain("enumeration too large".into()))?;
    let candidates = exec
        .map_range(size, |idx| {
            let c = Poly::from_index(field, len, idx / (q - 1));
            let mu = field.element(idx % (q - 1) + 1);
            let verdict = weil_admissible(&c, &mu, p, m)?;
            Ok(Candidate { c, mu, verdict })
        })
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    Ok(Enumeration {
        p: p.clone(),
        m,
        candidates,
    })
}

/// Which closed form covers `(d, m)`: 1 for `m, d` odd, 2 for `m` even and
/// `d` odd, 3 for both even; `None` for `m` odd and `d` even.
pub fn formula_case(d: usize, m: usize) -> Option<u8> {
    match (m % 2, d % 2) {
        (1, 1) => Some(1),
        (0, 1) => Some(2),
        (0, 0) => Some(3),
        _ => None,
    }
}

/// `q^e` for a possibly negative exponent.
fn qpow(q: i128, e: i64) -> Ratio<i128> {
    let magnitude = q.pow(e.unsigned_abs() as u32);
    if e >= 0 {
        Ratio::from_integer(magnitude)
    } else {
        Ratio::new(1, magnitude)
    }
}

/// Exponents `(floor(md/2), floor((m-2)d/2))`, floors taken towards `-inf`.
fn exponents(d: usize, m: usize) -> (i64, i64) {
    let (d, m) = (d as i64, m as i64);
    ((m * d).div_euclid(2), ((m - 2) * d).div_euclid(2))
}

/// Closed-form number of isogeny classes.
pub fn formula(q: u64, d: usize, m: usize) -> Option<Ratio<i128>> {
    let case = formula_case(d, m)?;
    let qi = q as i128;
    let r = |v: i128| Ratio::from_integer(v);
    let (top, low) = exponents(d, m);
    let value = match case {
        1 => r(qi - 1) * (qpow(qi, top + 1) - qpow(qi, low + 1) + r(1)),
        2 => r(qi - 1) * (Ratio::new(qi - 1, 2) * qpow(qi, top) - qpow(qi, low + 1) + r(qi)),
        _ => r(qi - 1) * (Ratio::new(qi - 1, 2) * qpow(qi, top) - qpow(qi, low) + r(1)),
    };
    Some(value)
}

/// Closed-form number of distinct Euler-Poincare characteristics.
pub fn chi_formula(q: u64, d: usize, m: usize) -> Option<Ratio<i128>> {
    let case = formula_case(d, m)?;
    let qi = q as i128;
    let r = |v: i128| Ratio::from_integer(v);
    let (top, low) = exponents(d, m);
    let ratio = Ratio::new(qi, qi - 1);
    let value = match case {
        1 => ratio * qpow(qi, top + 1) - ratio * qpow(qi, low + 1) + r(1),
        _ => {
            let lead = Ratio::new(qi * qi + 1, 2 * qi - 2) * qpow(qi, top);
            let tail = if case == 2 { r(qi) } else { r(1) };
            lead - ratio * qpow(qi, low + 1) + tail
        }
    };
    Some(value)
}

/// Admissible pairs grouped by the index vector of their Euler-Poincare characteristic.
pub type ChiClasses = BTreeMap<Vec<u64>, Vec<(Poly, FieldElement)>>;

/// Distinct monic generators of `(1 - c + mu P^m)` over admissible pairs.
pub fn chi_classes(enumeration: &Enumeration) -> Result<ChiClasses> {
    let mut groups = ChiClasses::new();
    for cand in enumeration.admissible() {
        let chi = cand.char_poly(&enumeration.p, enumeration.m).ep_char()?;
        groups
            .entry(poly_key(&chi))
            .or_default()
            .push((cand.c.clone(), cand.mu.clone()));
    }
    Ok(groups)
}

fn poly_key(f: &Poly) -> Vec<u64> {
    f.coeffs().iter().map(FieldElement::index).collect()
}

fn char_poly_key(cp: &CharPoly) -> (Vec<u64>, u64) {
    (poly_key(&cp.c), cp.mu.index())
}

/// Result of sweeping every module `(gamma(T), g, delta)` over `L` with
/// `gamma(T)` a fixed root of `P`.
#[derive(Debug, Clone)]
pub struct Realization {
    pub gamma_t: FieldElement,
    pub modules: u64,
    /// Distinct characteristic polynomials, ordered by `(c, mu)` index.
    pub realized: Vec<CharPoly>,
    /// Realised but not admissible.
    pub offenders: Vec<CharPoly>,
    pub realized_ordinary: usize,
    pub admissible_ordinary: usize,
    /// Admissible ordinary `(c, mu)` never realised.
    pub missing_ordinary: Vec<(Poly, FieldElement)>,
}

impl Realization {
    /// Realised over admissible ordinary classes; `None` when there are none.
    pub fn ordinary_coverage(&self) -> Option<Ratio<i128>> {
        (self.admissible_ordinary > 0)
            .then(|| Ratio::new(self.realized_ordinary as i128, self.admissible_ordinary as i128))
    }

    pub fn is_consistent(&self) -> bool {
        self.offenders.is_empty() && self.missing_ordinary.is_empty()
    }
}

/// Root of `P` in `L` with the smallest index.
pub fn first_root(p: &Poly, ext: &Extension) -> Result<FieldElement> {
    for x in ext.field().elements() {
        if p.eval_in(ext, &x)?.is_zero() {
            return Ok(x);
        }
    }
    Err(Error::Domain(format!("{p} has no root in L")))
}

/// Sweeps `g in L`, `delta in L^*` for `gamma(T)` the first root of `P` in
/// `L = F_(q^(md))`, refusing when `q^(md)` exceeds `bound`.
pub fn realize(enumeration: &Enumeration, bound: u64, exec: Execution) -> Result<Realization> {
    let p = &enumeration.p;
    let m = enumeration.m;
    let n = m * enumeration.d();
    let q = enumeration.q();
    let field_size = q
        .checked_pow(n as u32)
        .filter(|&s| s <= bound)
        .ok_or_else(|| {
            let size = (q as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
            Error::BoundExceeded {
                field_size: q,
                size: size.saturating_mul(size.saturating_sub(1)),
                bound,
            }
        })?;
    let ext = Extension::new(p.field(), n, None)?;
    let gamma_t = first_root(p, &ext)?;
    let l = ext.field();
    let modules = field_size * (field_size - 1);

    const CHUNK: u64 = 1 << 12;
    let mut distinct: BTreeMap<(Vec<u64>, u64), CharPoly> = BTreeMap::new();
    let mut start = 0;
    while start < modules {
        let len = CHUNK.min(modules - start);
        let batch = exec.map_range(len, |i| {
            let idx = start + i;
            let g = l.element(idx / (field_size - 1));
            let delta = l.element(idx % (field_size - 1) + 1);
            let phi = DrinfeldModule::new(&ext, gamma_t.clone(), g, delta)?;
            frobenius::char_poly(&phi)
        });
        for cp in batch {
            let cp = cp?;
            distinct.entry(char_poly_key(&cp)).or_insert(cp);
        }
        start += len;
    }

    let realized: Vec<CharPoly> = distinct.into_values().collect();
    let mut offenders = Vec::new();
    let mut realized_ordinary = BTreeSet::new();
    for cp in &realized {
        match enumeration.verdict_of(&cp.c, &cp.mu) {
            Some(v) if v.is_admissible() => {
                if v == Verdict::Ordinary {
                    realized_ordinary.insert(char_poly_key(cp));
                }
            }
            _ => offenders.push(cp.clone()),
        }
    }
    let ordinary: Vec<&Candidate> = enumeration
        .admissible()
        .filter(|c| c.verdict == Verdict::Ordinary)
        .collect();
    let missing_ordinary = ordinary
        .iter()
        .filter(|c| !realized_ordinary.contains(&(poly_key(&c.c), c.mu.index())))
        .map(|c| (c.c.clone(), c.mu.clone()))
        .collect();
    Ok(Realization {
        gamma_t,
        modules,
        realized_ordinary: realized_ordinary.len(),
        admissible_ordinary: ordinary.len(),
        realized,
        offenders,
        missing_ordinary,
    })
}

fn ratio_text(r: &Ratio<i128>) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn as_integer(r: &Ratio<i128>) -> Option<i64> {
    r.is_integer().then(|| i64::try_from(*r.numer()).ok()).flatten()
}

#[derive(Debug, Clone, Copy)]
pub struct CensusOptions {
    /// Realise exhaustively when `q^(md)` is at most this bound.
    pub realize_bound: Option<u64>,
    pub exec: Execution,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            realize_bound: Some(DEFAULT_REALIZE_BOUND),
            exec: Execution::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub q: u64,
    pub d: usize,
    pub m: usize,
    #[serde(rename = "P")]
    pub p: String,
    pub ordinary_count: usize,
    pub ss2_count: usize,
    pub ss3_count: usize,
    pub ss4_count: usize,
    pub total: usize,
    pub formula_case: Option<u8>,
    pub formula_total: Option<i64>,
    pub formula_exact: Option<String>,
    pub realized_distinct: Option<usize>,
    pub realized_ordinary: Option<usize>,
    pub ordinary_coverage: Option<String>,
    pub chi_distinct_enumerative: usize,
    pub chi_formula: Option<i64>,
    pub chi_formula_exact: Option<String>,
    pub discrepancies: Vec<String>,
}

impl CensusReport {
    pub fn has_discrepancies(&self) -> bool {
        !self.discrepancies.is_empty()
    }
}

fn pair_text(c: &Poly, mu: &FieldElement) -> String {
    format!("(c = {c}, mu = {mu})")
}

/// Full census for `(q, P, m)`.
pub fn census(p: &Poly, m: usize, options: CensusOptions) -> Result<CensusReport> {
    let enumeration = enumerate(p, m, options.exec)?;
    let q = enumeration.q();
    let d = enumeration.d();
    let total = enumeration.total();
    let mut discrepancies = Vec::new();

    let case = formula_case(d, m);
    let formula_value = formula(q, d, m);
    if let Some(f) = &formula_value {
        if !f.is_integer() {
            discrepancies.push(format!(
                "count formula case {} is not an integer: {}",
                case.expect("case exists"),
                ratio_text(f)
            ));
        } else if *f != Ratio::from_integer(total as i128) {
            discrepancies.push(format!(
                "count formula case {} gives {}, enumeration gives {total}",
                case.expect("case exists"),
                ratio_text(f)
            ));
        }
    }

    let chi_groups = chi_classes(&enumeration)?;
    let chi_value = chi_formula(q, d, m);
    if let Some(f) = &chi_value {
        if !f.is_integer() {
            discrepancies.push(format!(
                "chi formula case {} is not an integer: {}",
                case.expect("case exists"),
                ratio_text(f)
            ));
        } else if *f != Ratio::from_integer(chi_groups.len() as i128) {
            discrepancies.push(format!(
                "chi formula case {} gives {}, enumeration gives {}",
                case.expect("case exists"),
                ratio_text(f),
                chi_groups.len()
            ));
        }
    }

    let n = m * d;
    let feasible = options
        .realize_bound
        .filter(|&b| q.checked_pow(n as u32).is_some_and(|s| s <= b));
    let realization = feasible
        .map(|b| realize(&enumeration, b, options.exec))
        .transpose()?;
    if let Some(r) = &realization {
        for cp in &r.offenders {
            discrepancies.push(format!("realized but not admissible: {}", pair_text(&cp.c, &cp.mu)));
        }
        for (c, mu) in &r.missing_ordinary {
            discrepancies.push(format!("admissible ordinary class not realized: {}", pair_text(c, mu)));
        }
    }

    Ok(CensusReport {
        q,
        d,
        m,
        p: p.to_machine_string(),
        ordinary_count: enumeration.count(Verdict::Ordinary),
        ss2_count: enumeration.count(Verdict::Supersingular2),
        ss3_count: enumeration.count(Verdict::Supersingular3),
        ss4_count: enumeration.count(Verdict::Supersingular4),
        total,
        formula_case: case,
        formula_total: formula_value.as_ref().and_then(as_integer),
        formula_exact: formula_value.as_ref().map(ratio_text),
        realized_distinct: realization.as_ref().map(|r| r.realized.len()),
        realized_ordinary: realization.as_ref().map(|r| r.realized_ordinary),
        ordinary_coverage: realization
            .as_ref()
            .and_then(Realization::ordinary_coverage)
            .map(|r| ratio_text(&r)),
        chi_distinct_enumerative: chi_groups.len(),
        chi_formula: chi_value.as_ref().and_then(as_integer),
        chi_formula_exact: chi_value.as_ref().map(ratio_text),
        discrepancies,
    })
}

#[derive(Serialize)]
struct CsvRow<'a> {
    q: u64,
    d: usize,
    m: usize,
    #[serde(rename = "P")]
    p: &'a str,
    case: Option<u8>,
    ordinary: usize,
    ss2: usize,
    ss3: usize,
    ss4: usize,
    total: usize,
    formula_total: Option<&'a str>,
    chi_enumerative: usize,
    chi_formula: Option<&'a str>,
    realized_distinct: Option<usize>,
    ordinary_coverage: Option<&'a str>,
    discrepancies: usize,
}

/// One CSV row per report, with a header.
pub fn write_csv<W: io::Write>(reports: &[CensusReport], out: W) -> Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    for r in reports {
        writer
            .serialize(CsvRow {
                q: r.q,
                d: r.d,
                m: r.m,
                p: &r.p,
                case: r.formula_case,
                ordinary: r.ordinary_count,
                ss2: r.ss2_count,
                ss3: r.ss3_count,
                ss4: r.ss4_count,
                total: r.total,
                formula_total: r.formula_exact.as_deref(),
                chi_enumerative: r.chi_distinct_enumerative,
                chi_formula: r.chi_formula_exact.as_deref(),
                realized_distinct: r.realized_distinct,
                ordinary_coverage: r.ordinary_coverage.as_deref(),
                discrepancies: r.discrepancies.len(),
            })
            .map_err(|e| Error::Output(e.to_string()))?;
    }
    writer.flush().map_err(|e| Error::Output(e.to_string()))
}
