//! Characteristic polynomial `X^2 - c X + mu P^m` of the Frobenius `F = t^n`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::drinfeld::DrinfeldModule;
use crate::error::{Error, Result};
use crate::ff::{Extension, Field, FieldElement};
use crate::linalg;
use crate::ore::OrePoly;
use crate::poly::Poly;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CharPoly {
    pub c: Poly,
    pub mu: FieldElement,
    pub p: Poly,
    pub m: usize,
}

impl CharPoly {
    pub fn field(&self) -> &Field {
        self.p.field()
    }

    /// `P_Phi(0) = mu P^m`.
    pub fn constant_term(&self) -> Poly {
        self.p.pow(self.m as u32).scale(&self.mu)
    }

    /// `P_Phi(1) = 1 - c + mu P^m`.
    pub fn value_at_one(&self) -> Poly {
        &(&Poly::one(self.field()) - &self.c) + &self.constant_term()
    }

    /// `c^2 - 4 mu P^m`.
    pub fn discriminant(&self) -> Poly {
        let four = self.field().from_int(4);
        &(&self.c * &self.c) - &self.constant_term().scale(&four)
    }

    pub fn is_perfect_square(&self) -> bool {
        self.discriminant().is_zero()
    }

    /// Coefficients in `X`, low degree first, of the minimal polynomial of
    /// the Frobenius: `X - c/2` when `P_Phi` is a square, else `P_Phi`.
    pub fn minimal_polynomial(&self) -> Vec<Poly> {
        let field = self.field();
        if self.is_perfect_square() {
            let half = field.from_int(2).inv().expect("odd characteristic");
            vec![-&self.c.scale(&half), Poly::one(field)]
        } else {
            vec![self.constant_term(), -&self.c, Poly::one(field)]
        }
    }

    /// Monic generator of the Euler-Poincare ideal `(1 - c + mu P^m)`.
    pub fn ep_char(&self) -> Result<Poly> {
        let v = self.value_at_one();
        if v.is_zero() {
            return Err(Error::Inconsistent("P_Phi(1) vanishes".into()));
        }
        Ok(v.monic())
    }

    pub fn to_record(&self) -> CharPolyRecord {
        CharPolyRecord {
            c: self.c.to_machine_string(),
            mu: self.mu.to_string(),
            p: self.p.to_machine_string(),
            m: self.m,
        }
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X^2 - ({})X + ({})*({})^{}", self.c, self.mu, self.p, self.m)
    }
}

impl fmt::Debug for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CharPoly({self})")
    }
}

/// JSON form, polynomials in machine syntax.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharPolyRecord {
    pub c: String,
    pub mu: String,
    #[serde(rename = "P")]
    pub p: String,
    pub m: usize,
}

impl CharPolyRecord {
    pub fn to_char_poly(&self, field: &Field) -> Result<CharPoly> {
        Ok(CharPoly {
            c: Poly::parse(field, &self.c)?,
            mu: field.parse_element(&self.mu)?,
            p: Poly::parse(field, &self.p)?,
            m: self.m,
        })
    }
}

/// Flattens the `F_q`-coordinates of every coefficient of `u` up to `len`.
fn coordinates(ext: &Extension, u: &OrePoly, len: usize) -> Vec<FieldElement> {
    (0..len).flat_map(|i| ext.coordinates(&u.coeff(i))).collect()
}

/// Solves `Phi_theta = t^n` for `theta` of degree `n/2`.
fn frobenius_preimage(phi: &DrinfeldModule) -> Option<Poly> {
    let n = phi.n();
    if n % 2 == 1 {
        return None;
    }
    let ext = phi.ext();
    let base = ext.base();
    let len = n + 1;
    let columns: Vec<Vec<FieldElement>> = (0..=n / 2)
        .map(|i| coordinates(ext, &phi.phi(&Poly::monomial(base.one(), i)), len))
        .collect();
    let rhs = coordinates(ext, &OrePoly::tau_pow(ext, n), len);
    let sol = linalg::solve(base, &columns, &rhs)?;
    Some(Poly::from_coeffs(base, sol.particular))
}

/// The characteristic polynomial of Frobenius: the unique `(c, mu)` with
/// `deg c <= floor(md/2)`, `mu != 0` and `t^(2n) - Phi_c t^n + Phi_(mu P^m) = 0`,
/// found by one linear solve over `F_q`.
///
/// When the system is underdetermined the Frobenius lies in `Phi(A)`; then
/// `F = Phi_theta` and the characteristic polynomial is `(X - theta)^2`.
pub fn char_poly(phi: &DrinfeldModule) -> Result<CharPoly> {
    let ext = phi.ext();
    let base = ext.base();
    let n = phi.n();
    let k = phi.m() * phi.d() / 2;
    let p = phi.characteristic().clone();
    let pm = p.pow(phi.m() as u32);
    let len = 2 * n + 1;
    let frob = OrePoly::tau_pow(ext, n);

    let mut columns: Vec<Vec<FieldElement>> = (0..=k)
        .map(|i| {
            let col = &phi.phi(&Poly::monomial(base.one(), i)) * &frob;
            coordinates(ext, &col, len)
        })
        .collect();
    columns.push(coordinates(ext, &-&phi.phi(&pm), len));
    let rhs = coordinates(ext, &OrePoly::tau_pow(ext, 2 * n), len);

    let sol = linalg::solve(base, &columns, &rhs)
        .ok_or_else(|| Error::Inconsistent(format!("no characteristic polynomial for {phi:?}")))?;

    let cp = if sol.kernel.is_empty() {
        let mu = sol.particular[k + 1].clone();
        if mu.is_zero() {
            return Err(Error::Inconsistent(format!("mu vanishes for {phi:?}")));
        }
        CharPoly {
            c: Poly::from_coeffs(base, sol.particular[..=k].to_vec()),
            mu,
            p,
            m: phi.m(),
        }
    } else {
        let theta = frobenius_preimage(phi).ok_or_else(|| {
            Error::Inconsistent(format!("non-unique characteristic polynomial for {phi:?}"))
        })?;
        let mu = (&theta * &theta)
            .exact_div(&pm)
            .filter(|q| q.degree() == Some(0))
            .ok_or_else(|| Error::Inconsistent(format!("theta^2 is not mu P^m for {phi:?}")))?
            .coeff(0);
        CharPoly {
            c: theta.scale(&base.from_int(2)),
            mu,
            p,
            m: phi.m(),
        }
    };

    if !verify(phi, &cp) {
        return Err(Error::Inconsistent(format!("{cp} does not annihilate the Frobenius of {phi:?}")));
    }
    Ok(cp)
}

/// `true` iff `t^(2n) - Phi_c t^n + Phi_(mu P^m)` vanishes in `L{t}`.
pub fn verify(phi: &DrinfeldModule, cp: &CharPoly) -> bool {
    if cp.field() != phi.ext().base() || cp.c.field() != cp.field() {
        return false;
    }
    if &cp.p != phi.characteristic() || cp.m != phi.m() || cp.mu.is_zero() {
        return false;
    }
    let ext = phi.ext();
    let n = phi.n();
    let frob = OrePoly::tau_pow(ext, n);
    let lhs = &(&OrePoly::tau_pow(ext, 2 * n) - &(&phi.phi(&cp.c) * &frob)) + &phi.phi(&cp.constant_term());
    lhs.is_zero()
}
