//! Rank-2 Drinfeld `F_q[T]`-modules over a finite field `L = F_(q^n)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ff::{Extension, Field, FieldElement};
use crate::ore::OrePoly;
use crate::poly::Poly;

/// The module `Phi` determined by `Phi_T = gamma(T) + g t + delta t^2`.
#[derive(Clone, PartialEq, Eq)]
pub struct DrinfeldModule {
    ext: Extension,
    gamma_t: FieldElement,
    g: FieldElement,
    delta: FieldElement,
    characteristic: Poly,
    d: usize,
    m: usize,
    phi_t: OrePoly,
}

impl DrinfeldModule {
    pub fn new(
        ext: &Extension,
        gamma_t: FieldElement,
        g: FieldElement,
        delta: FieldElement,
    ) -> Result<DrinfeldModule> {
        for x in [&gamma_t, &g, &delta] {
            if x.field() != ext.field() {
                return Err(Error::IncompatibleFields);
            }
        }
        if delta.is_zero() {
            return Err(Error::Rank);
        }
        let characteristic = ext.minimal_polynomial(&gamma_t);
        let d = characteristic.degree().expect("minimal polynomial is nonzero");
        assert_eq!(ext.degree() % d, 0, "degree of P must divide n");
        let phi_t = OrePoly::new(ext, vec![gamma_t.clone(), g.clone(), delta.clone()]);
        Ok(DrinfeldModule {
            ext: ext.clone(),
            gamma_t,
            g,
            delta,
            characteristic,
            d,
            m: ext.degree() / d,
            phi_t,
        })
    }

    pub fn ext(&self) -> &Extension {
        &self.ext
    }

    pub fn gamma_t(&self) -> &FieldElement {
        &self.gamma_t
    }

    pub fn g(&self) -> &FieldElement {
        &self.g
    }

    pub fn delta(&self) -> &FieldElement {
        &self.delta
    }

    /// The `A`-characteristic `P`, the minimal polynomial of `gamma(T)`.
    pub fn characteristic(&self) -> &Poly {
        &self.characteristic
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.ext.degree()
    }

    pub fn q(&self) -> u64 {
        self.ext.q()
    }

    pub fn phi_t(&self) -> &OrePoly {
        &self.phi_t
    }

    /// `Phi_a`, by Horner's scheme in `Phi_T`.
    pub fn phi(&self, a: &Poly) -> OrePoly {
        assert!(a.field() == self.ext.base(), "polynomial is not over F_q");
        a.coeffs()
            .iter()
            .rev()
            .fold(OrePoly::zero(&self.ext), |acc, c| {
                let c = self.ext.embed(c).expect("coefficient lies in F_q");
                &(&acc * &self.phi_t) + &OrePoly::constant(&self.ext, c)
            })
    }

    /// `Phi_I` for `I = (i1, i2)`: the monic right gcd of the generators.
    pub fn phi_ideal(&self, i1: &Poly, i2: &Poly) -> Result<OrePoly> {
        if i1.is_zero() && i2.is_zero() {
            return Err(Error::Domain("both ideal generators are zero".into()));
        }
        self.phi(i1).rgcd(&self.phi(i2))
    }

    /// `ht(Phi_P) / d`, which is 1 (ordinary) or 2 (supersingular).
    pub fn height(&self) -> usize {
        let h = self
            .phi(&self.characteristic)
            .height()
            .expect("Phi_P is nonzero");
        debug_assert_eq!(h % self.d, 0);
        h / self.d
    }

    /// The module `Psi` with `u Phi_T = Psi_T u`, for `u` a nonzero constant
    /// or `u = t^k`.
    pub fn twist(&self, u: &OrePoly) -> Result<DrinfeldModule> {
        if u.ext() != &self.ext {
            return Err(Error::IncompatibleFields);
        }
        let coeffs = [&self.gamma_t, &self.g, &self.delta];
        let image: Vec<FieldElement> = match u.degree() {
            Some(0) => {
                let c = &u.coeffs()[0];
                let c_inv = c.inv()?;
                coeffs
                    .iter()
                    .enumerate()
                    .map(|(i, a)| &(c * *a) * &self.ext.frobenius_q_pow(&c_inv, i))
                    .collect()
            }
            Some(k) if u.is_monic() && u.height()? == k => coeffs
                .iter()
                .map(|a| self.ext.frobenius_q_pow(a, k))
                .collect(),
            _ => return Err(Error::UnsupportedTwist(u.to_string())),
        };
        let [gamma_t, g, delta]: [FieldElement; 3] = image.try_into().expect("three coefficients");
        DrinfeldModule::new(&self.ext, gamma_t, g, delta)
    }

    pub fn to_record(&self) -> ModuleRecord {
        ModuleRecord {
            q: self.q(),
            n: self.n(),
            gamma_t: self.gamma_t.to_string(),
            g: self.g.to_string(),
            delta: self.delta.to_string(),
        }
    }
}

impl std::fmt::Debug for DrinfeldModule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "DrinfeldModule(q = {}, n = {}, Phi_T = {})",
            self.q(),
            self.n(),
            self.phi_t
        )
    }
}

/// JSON form of a module; fields and extensions use automatic moduli.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleRecord {
    pub q: u64,
    pub n: usize,
    #[serde(rename = "gamma_T")]
    pub gamma_t: String,
    pub g: String,
    pub delta: String,
}

impl ModuleRecord {
    pub fn to_module(&self) -> Result<DrinfeldModule> {
        let (p, s) = prime_power(self.q)
            .ok_or_else(|| Error::FieldConstruction(format!("q = {} is not a prime power", self.q)))?;
        let base = Field::new(p, s, None)?;
        let ext = Extension::new(&base, self.n, None)?;
        let l = ext.field();
        DrinfeldModule::new(
            &ext,
            l.parse_element(&self.gamma_t)?,
            l.parse_element(&self.g)?,
            l.parse_element(&self.delta)?,
        )
    }
}

/// `(p, s)` with `q = p^s`, if `q` is a prime power.
pub fn prime_power(q: u64) -> Option<(u32, usize)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut s = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        s += 1;
    }
    if rest != 1 {
        return None;
    }
    Some((u32::try_from(p).ok()?, s))
}

/// Every rank-2 module over `L`, ordered by `(gamma(T), g, delta)` indices.
pub fn all_modules(ext: &Extension) -> impl Iterator<Item = DrinfeldModule> + '_ {
    let l = ext.field();
    let size = l.order();
    (0..size).flat_map(move |gi| {
        (0..size).flat_map(move |g| {
            (1..size).map(move |di| {
                DrinfeldModule::new(ext, l.element(gi), l.element(g), l.element(di))
                    .expect("delta is nonzero")
            })
        })
    })
}
