//! Supersingularity, Weil admissibility of candidate characteristic
//! polynomials, and the endomorphism-order ledger.

use serde::{Deserialize, Serialize};

use crate::drinfeld::DrinfeldModule;
use crate::error::{Error, Result};
use crate::ff::FieldElement;
use crate::frobenius::{self, CharPoly, CharPolyRecord};
use crate::poly::{is_square_in_units, Poly};

/// Verdict on a candidate `X^2 - c X + mu P^m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "ORDINARY")]
    Ordinary,
    /// `c = 0`, `m` odd.
    #[serde(rename = "SUPERSINGULAR_2")]
    Supersingular2,
    /// `c = c0 P^(m/2)` with `X^2 - c0 X + mu` irreducible, `m` even, `d` odd.
    #[serde(rename = "SUPERSINGULAR_3")]
    Supersingular3,
    /// A perfect square `(X - c/2)^2`, `m` even.
    #[serde(rename = "SUPERSINGULAR_4")]
    Supersingular4,
    #[serde(rename = "NOT_ADMISSIBLE")]
    NotAdmissible,
}

impl Verdict {
    pub fn is_admissible(self) -> bool {
        self != Verdict::NotAdmissible
    }

    pub fn is_supersingular(self) -> bool {
        matches!(
            self,
            Verdict::Supersingular2 | Verdict::Supersingular3 | Verdict::Supersingular4
        )
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Ordinary => "ORDINARY",
            Verdict::Supersingular2 => "SUPERSINGULAR_2",
            Verdict::Supersingular3 => "SUPERSINGULAR_3",
            Verdict::Supersingular4 => "SUPERSINGULAR_4",
            Verdict::NotAdmissible => "NOT_ADMISSIBLE",
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The three supersingularity criteria, already checked to agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Supersingularity {
    pub is_supersingular: bool,
    pub height: usize,
    pub p_divides_c: bool,
    pub kernel_exponent_p: usize,
}

/// Decides supersingularity three ways: height 2, `P | c`, and `Phi_P` having
/// no nonzero roots.
pub fn supersingularity(phi: &DrinfeldModule, cp: &CharPoly) -> Result<Supersingularity> {
    let height = phi.height();
    let p_divides_c = phi.characteristic().divides(&cp.c);
    let kernel_exponent_p = phi.phi(phi.characteristic()).kernel_exponent()?;
    let verdicts = [height == 2, p_divides_c, kernel_exponent_p == 0];
    if verdicts.iter().any(|&v| v != verdicts[0]) {
        return Err(Error::Inconsistent(format!(
            "supersingularity criteria disagree for {phi:?}: height {height}, P | c {p_divides_c}, \
             kernel exponent of Phi_P {kernel_exponent_p}"
        )));
    }
    Ok(Supersingularity {
        is_supersingular: verdicts[0],
        height,
        p_divides_c,
        kernel_exponent_p,
    })
}

fn check_candidate(c: &Poly, mu: &FieldElement, p: &Poly, m: usize) -> Result<usize> {
    let field = p.field();
    if c.field() != field || mu.field() != field {
        return Err(Error::IncompatibleFields);
    }
    if !p.is_monic() || !p.is_irreducible()? {
        return Err(Error::Domain(format!("P = {p} is not monic irreducible")));
    }
    if m == 0 {
        return Err(Error::Domain("m must be positive".into()));
    }
    if mu.is_zero() {
        return Err(Error::Domain("mu must be nonzero".into()));
    }
    let md = m * p.degree().expect("P is nonzero");
    if c.degree().is_some_and(|k| k > md / 2) {
        return Err(Error::Domain(format!("deg c exceeds floor(md/2) = {}", md / 2)));
    }
    Ok(md)
}

/// `true` iff the infinite place does not split in `K[X]/(X^2 - c X + mu P^m)`,
/// decided by the leading-term case split.
pub fn is_imaginary(c: &Poly, mu: &FieldElement, p: &Poly, m: usize) -> Result<bool> {
    let md = check_candidate(c, mu, p, m)?;
    if md % 2 == 1 {
        return Ok(true);
    }
    let field = p.field();
    let four = field.from_int(4);
    let top = c.degree().filter(|&k| 2 * k == md);
    match top {
        None => Ok(!is_square_in_units(&-mu)?),
        Some(k) => {
            let c0 = c.coeff(k);
            let lead = &(&c0 * &c0) - &(&four * mu);
            if !lead.is_zero() {
                return Ok(!is_square_in_units(&lead)?);
            }
            let disc = &(c * c) - &p.pow(m as u32).scale(&(&four * mu));
            match disc.degree() {
                None => Ok(false),
                Some(k) if k % 2 == 1 => Ok(true),
                Some(_) => Ok(!is_square_in_units(disc.leading_coeff().expect("nonzero"))?),
            }
        }
    }
}

/// Classifies a candidate characteristic polynomial `X^2 - c X + mu P^m`.
pub fn weil_admissible(c: &Poly, mu: &FieldElement, p: &Poly, m: usize) -> Result<Verdict> {
    let md = check_candidate(c, mu, p, m)?;
    let d = md / m;
    if !p.divides(c) {
        return Ok(if is_imaginary(c, mu, p, m)? {
            Verdict::Ordinary
        } else {
            Verdict::NotAdmissible
        });
    }
    if m % 2 == 1 {
        return Ok(if c.is_zero() && is_imaginary(c, mu, p, m)? {
            Verdict::Supersingular2
        } else {
            Verdict::NotAdmissible
        });
    }
    let half = p.pow((m / 2) as u32);
    let Some(c0) = c.exact_div(&half).filter(|q| q.is_constant()).map(|q| q.coeff(0)) else {
        return Ok(Verdict::NotAdmissible);
    };
    let field = p.field();
    let lead = &(&c0 * &c0) - &(&field.from_int(4) * mu);
    if lead.is_zero() {
        Ok(Verdict::Supersingular4)
    } else if d % 2 == 1 && !is_square_in_units(&lead)? {
        Ok(Verdict::Supersingular3)
    } else {
        Ok(Verdict::NotAdmissible)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum EndRingKind {
    #[serde(rename = "MAXIMAL_ORDER")]
    MaximalOrder,
    #[serde(rename = "NON_MAXIMAL_ORDER")]
    NonMaximalOrder,
    #[serde(rename = "QUATERNIONIC_CASE")]
    QuaternionicCase,
}

impl EndRingKind {
    pub fn as_str(self) -> &'static str {
        match self {
            EndRingKind::MaximalOrder => "MAXIMAL_ORDER",
            EndRingKind::NonMaximalOrder => "NON_MAXIMAL_ORDER",
            EndRingKind::QuaternionicCase => "QUATERNIONIC_CASE",
        }
    }
}

/// Endomorphism-order data read off `disc = g^2 omega`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndRing {
    pub kind: EndRingKind,
    pub disc: Poly,
    pub conductor: Poly,
    pub omega: Poly,
    /// Monic divisors `f` of the conductor; each order `A + f O` contains `F`.
    pub admissible_conductors: Vec<Poly>,
    pub conductor_coprime_to_p: bool,
}

pub fn endring(cp: &CharPoly) -> Result<EndRing> {
    let field = cp.field();
    let disc = cp.discriminant();
    if disc.is_zero() {
        return Ok(EndRing {
            kind: EndRingKind::QuaternionicCase,
            disc,
            conductor: Poly::one(field),
            omega: Poly::zero(field),
            admissible_conductors: vec![Poly::one(field)],
            conductor_coprime_to_p: true,
        });
    }
    let (conductor, omega) = disc.squarefree_split()?;
    let kind = if conductor.is_one() {
        EndRingKind::MaximalOrder
    } else {
        EndRingKind::NonMaximalOrder
    };
    Ok(EndRing {
        kind,
        admissible_conductors: conductor.monic_divisors(),
        conductor_coprime_to_p: conductor.gcd(&cp.p).is_one(),
        disc,
        conductor,
        omega,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub charpoly: CharPoly,
    pub verdict: Verdict,
    pub supersingularity: Supersingularity,
    pub end_ring: EndRing,
    pub chi: Poly,
}

pub fn classify(phi: &DrinfeldModule) -> Result<ClassificationReport> {
    let charpoly = frobenius::char_poly(phi)?;
    let supersingularity = supersingularity(phi, &charpoly)?;
    let verdict = weil_admissible(&charpoly.c, &charpoly.mu, &charpoly.p, charpoly.m)?;
    let end_ring = endring(&charpoly)?;
    let chi = charpoly.ep_char()?;
    Ok(ClassificationReport {
        charpoly,
        verdict,
        supersingularity,
        end_ring,
        chi,
    })
}

impl ClassificationReport {
    pub fn to_record(&self) -> ClassificationRecord {
        let e = &self.end_ring;
        ClassificationRecord {
            charpoly: self.charpoly.to_record(),
            verdict: self.verdict,
            is_supersingular: self.supersingularity.is_supersingular,
            height: self.supersingularity.height,
            disc: e.disc.to_machine_string(),
            conductor_g: e.conductor.to_machine_string(),
            omega: e.omega.to_machine_string(),
            end_ring_kind: e.kind,
            admissible_conductors: e.admissible_conductors.iter().map(Poly::to_machine_string).collect(),
            conductor_coprime_to_p: e.conductor_coprime_to_p,
            chi: self.chi.to_machine_string(),
        }
    }
}

/// JSON form of a [`ClassificationReport`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRecord {
    pub charpoly: CharPolyRecord,
    pub verdict: Verdict,
    pub is_supersingular: bool,
    pub height: usize,
    pub disc: String,
    pub conductor_g: String,
    pub omega: String,
    pub end_ring_kind: EndRingKind,
    pub admissible_conductors: Vec<String>,
    pub conductor_coprime_to_p: bool,
    pub chi: String,
}

/// JSON form of an [`EndRing`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EndRingRecord {
    pub kind: EndRingKind,
    pub disc: String,
    pub conductor_g: String,
    pub omega: String,
    pub admissible_conductors: Vec<String>,
    pub conductor_coprime_to_p: bool,
}

impl EndRing {
    pub fn to_record(&self) -> EndRingRecord {
        EndRingRecord {
            kind: self.kind,
            disc: self.disc.to_machine_string(),
            conductor_g: self.conductor.to_machine_string(),
            omega: self.omega.to_machine_string(),
            admissible_conductors: self.admissible_conductors.iter().map(Poly::to_machine_string).collect(),
            conductor_coprime_to_p: self.conductor_coprime_to_p,
        }
    }
}
