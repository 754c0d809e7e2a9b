//! The twisted polynomial ring `L{t}` with `t * x = x^q * t`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::ff::{Extension, FieldElement};

/// An element `sum c_i t^i` of `L{t}`, coefficients low degree first with no
/// trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct OrePoly {
    ext: Extension,
    coeffs: Vec<FieldElement>,
}

impl OrePoly {
    pub fn new(ext: &Extension, mut coeffs: Vec<FieldElement>) -> OrePoly {
        assert!(
            coeffs.iter().all(|c| c.field() == ext.field()),
            "coefficient does not belong to L"
        );
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        OrePoly {
            ext: ext.clone(),
            coeffs,
        }
    }

    pub fn zero(ext: &Extension) -> OrePoly {
        OrePoly {
            ext: ext.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(ext: &Extension) -> OrePoly {
        OrePoly::constant(ext, ext.field().one())
    }

    pub fn constant(ext: &Extension, c: FieldElement) -> OrePoly {
        OrePoly::new(ext, vec![c])
    }

    /// `c * t^k`.
    pub fn monomial(ext: &Extension, c: FieldElement, k: usize) -> OrePoly {
        let mut coeffs = vec![ext.field().zero(); k];
        coeffs.push(c);
        OrePoly::new(ext, coeffs)
    }

    /// `t^k`; `t^n` is the Frobenius of `L = F_(q^n)`.
    pub fn tau_pow(ext: &Extension, k: usize) -> OrePoly {
        OrePoly::monomial(ext, ext.field().one(), k)
    }

    pub fn ext(&self) -> &Extension {
        &self.ext
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.ext.field().zero())
    }

    /// `t`-degree; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(|c| c.is_one())
    }

    /// The largest `h` with `u = t^h u'`, i.e. the lowest nonzero index.
    pub fn height(&self) -> Result<usize> {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .ok_or_else(|| Error::Domain("height of the zero Ore polynomial".into()))
    }

    pub fn is_separable(&self) -> Result<bool> {
        Ok(self.height()? == 0)
    }

    /// `true` iff `u = c t^k`.
    pub fn is_purely_inseparable(&self) -> Result<bool> {
        Ok(Some(self.height()?) == self.degree())
    }

    /// The exponent `e` such that the associated `q`-linearised polynomial has
    /// `q^e` roots in an algebraic closure: `deg u - ht u`.
    pub fn kernel_exponent(&self) -> Result<usize> {
        let h = self.height()?;
        Ok(self.degree().expect("nonzero") - h)
    }

    /// `x * self` for `x` in `L`.
    pub fn scale_left(&self, x: &FieldElement) -> OrePoly {
        OrePoly::new(&self.ext, self.coeffs.iter().map(|c| x * c).collect())
    }

    /// Left-multiplies by the inverse of the leading coefficient.
    pub fn monic(&self) -> OrePoly {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => self.scale_left(&lc.inv().expect("leading coefficient is nonzero")),
        }
    }

    /// Evaluates the associated linearised polynomial `sum c_i x^(q^i)`.
    pub fn apply(&self, x: &FieldElement) -> FieldElement {
        self.coeffs
            .iter()
            .enumerate()
            .fold(self.ext.field().zero(), |acc, (i, c)| {
                &acc + &(c * &self.ext.frobenius_q_pow(x, i))
            })
    }

    /// Right Euclidean division: `self = quot * divisor + rem` with
    /// `deg rem < deg divisor`.
    pub fn rdivmod(&self, divisor: &OrePoly) -> Result<(OrePoly, OrePoly)> {
        if self.ext != divisor.ext {
            return Err(Error::IncompatibleFields);
        }
        let Some(b) = divisor.degree() else {
            return Err(Error::DivisionByZero);
        };
        let beta = &divisor.coeffs[b];
        let mut rem = self.coeffs.clone();
        let Some(top) = self.degree().filter(|&a| a >= b) else {
            return Ok((OrePoly::zero(&self.ext), self.clone()));
        };
        let mut quot = vec![self.ext.field().zero(); top - b + 1];
        for a in (b..=top).rev() {
            if rem[a].is_zero() {
                continue;
            }
            let shift = a - b;
            let lambda = rem[a].checked_div(&self.ext.frobenius_q_pow(beta, shift))?;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                let term = &lambda * &self.ext.frobenius_q_pow(d, shift);
                rem[shift + j] = &rem[shift + j] - &term;
            }
            quot[shift] = lambda;
        }
        rem.truncate(b);
        Ok((OrePoly::new(&self.ext, quot), OrePoly::new(&self.ext, rem)))
    }

    /// Monic generator of the left ideal `L{t} a + L{t} b`.
    pub fn rgcd(&self, other: &OrePoly) -> Result<OrePoly> {
        if self.ext != other.ext {
            return Err(Error::IncompatibleFields);
        }
        if self.is_zero() && other.is_zero() {
            return Err(Error::Domain("right gcd of two zero Ore polynomials".into()));
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rdivmod(&b)?.1;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }
}

impl fmt::Display for OrePoly {
    /// `c0 + c1*t + c2*t^2`, zero terms omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let wrap = self.ext.field().degree() > 1;
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if wrap {
                write!(f, "({c})")?;
            } else {
                write!(f, "{c}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("*t")?,
                _ => write!(f, "*t^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for OrePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OrePoly({self})")
    }
}

impl Add for &OrePoly {
    type Output = OrePoly;
    fn add(self, rhs: &OrePoly) -> OrePoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        OrePoly::new(&self.ext, (0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl Sub for &OrePoly {
    type Output = OrePoly;
    fn sub(self, rhs: &OrePoly) -> OrePoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        OrePoly::new(&self.ext, (0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect())
    }
}

impl Neg for &OrePoly {
    type Output = OrePoly;
    fn neg(self) -> OrePoly {
        OrePoly::new(&self.ext, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &OrePoly {
    type Output = OrePoly;
    /// `(x t^i)(y t^j) = x y^(q^i) t^(i+j)`.
    fn mul(self, rhs: &OrePoly) -> OrePoly {
        assert!(self.ext == rhs.ext, "operands belong to incompatible fields");
        if self.is_zero() || rhs.is_zero() {
            return OrePoly::zero(&self.ext);
        }
        let field = self.ext.field();
        let mut coeffs = vec![field.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let term = a * &self.ext.frobenius_q_pow(b, i);
                coeffs[i + j] = &coeffs[i + j] + &term;
            }
        }
        OrePoly::new(&self.ext, coeffs)
    }
}

macro_rules! owned_binop {
    ($Trait:ident, $method:ident) => {
        impl $Trait for OrePoly {
            type Output = OrePoly;
            fn $method(self, rhs: OrePoly) -> OrePoly {
                (&self).$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
