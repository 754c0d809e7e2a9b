//! Finite fields of odd characteristic.
//!
//! A [`Field`] is either a prime field `F_p` or a simple extension of another
//! [`Field`] by a monic irreducible modulus, so towers such as
//! `F_p ⊂ F_q ⊂ F_{q^n}` are represented directly. Every element is a vector
//! of base-`p` digits: an element of an extension of relative degree `k` over a
//! base of absolute degree `b` is `k` consecutive blocks of `b` digits, block
//! `i` holding the coefficient of `y^i`. In particular the coordinates of an
//! element of `L = F_{q^n}` over `F_q` are simply its blocks.
//!
//! [`Extension`] wraps the working field `L` together with precomputed tables
//! for the `q`-power Frobenius, which is linear over `F_p`.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use smallvec::{smallvec, SmallVec};

use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::{self, Poly};

pub(crate) type Digits = SmallVec<[u32; 4]>;

/// Largest supported field order.
const MAX_ORDER: u64 = 1 << 62;
/// Largest supported characteristic (keeps digit products inside `u64`).
const MAX_CHARACTERISTIC: u32 = 1 << 31;

/// A finite field, cheap to clone and safe to share between threads.
#[derive(Clone)]
pub struct Field(Arc<FieldInner>);

#[derive(PartialEq)]
struct FieldInner {
    p: u32,
    degree: usize,
    order: u64,
    tower: Tower,
}

#[derive(PartialEq)]
enum Tower {
    Prime,
    Extension {
        base: Field,
        /// Monic, low degree first, `relative_degree + 1` entries.
        modulus: Vec<FieldElement>,
    },
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = p as u64;
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// The prime field `F_p` for an odd prime `p`.
    pub fn prime(p: u32) -> Result<Field> {
        if p == 2 {
            return Err(Error::CharacteristicTwo);
        }
        if !is_prime(p) {
            return Err(Error::FieldConstruction(format!("p = {p} is not prime")));
        }
        if p >= MAX_CHARACTERISTIC {
            return Err(Error::FieldConstruction(format!("p = {p} is too large")));
        }
        Ok(Field(Arc::new(FieldInner {
            p,
            degree: 1,
            order: p as u64,
            tower: Tower::Prime,
        })))
    }

    /// The field `F_q`, `q = p^s`, presented as `F_p[x]/(modulus)`.
    ///
    /// `modulus` lists the coefficients over `F_p`, low degree first. With
    /// `None` the lexicographically least monic irreducible of degree `s` is
    /// used (coefficients compared from the constant term upwards).
    pub fn new(p: u32, s: usize, modulus: Option<&[u32]>) -> Result<Field> {
        let prime = Field::prime(p)?;
        let modulus = modulus.map(|m| Poly::from_ints(&prime, m));
        prime.extend(s, modulus.as_ref())
    }

    /// Simple extension of `self` of relative degree `k`.
    pub fn extend(&self, k: usize, modulus: Option<&Poly>) -> Result<Field> {
        if k == 0 {
            return Err(Error::FieldConstruction("extension degree must be positive".into()));
        }
        let order = self
            .order()
            .checked_pow(k as u32)
            .filter(|&o| o <= MAX_ORDER)
            .ok_or_else(|| Error::FieldConstruction("field order too large".into()))?;
        let modulus = match modulus {
            Some(m) => {
                if m.field() != self {
                    return Err(Error::IncompatibleFields);
                }
                if m.degree() != Some(k) {
                    return Err(Error::FieldConstruction(format!(
                        "modulus has degree {:?}, expected {k}",
                        m.degree()
                    )));
                }
                if !m.is_monic() {
                    return Err(Error::FieldConstruction("modulus is not monic".into()));
                }
                if !m.is_irreducible()? {
                    return Err(Error::FieldConstruction(format!("modulus {m} is reducible")));
                }
                m.clone()
            }
            None => poly::monic_irreducibles(self, k)
                .next()
                .ok_or_else(|| Error::Inconsistent("no irreducible polynomial found".into()))?,
        };
        Ok(Field(Arc::new(FieldInner {
            p: self.0.p,
            degree: self.0.degree * k,
            order,
            tower: Tower::Extension {
                base: self.clone(),
                modulus: modulus.coeffs().to_vec(),
            },
        })))
    }

    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    /// Absolute degree over the prime field.
    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn order(&self) -> u64 {
        self.0.order
    }

    /// The field this one extends, if any.
    pub fn base(&self) -> Option<&Field> {
        match &self.0.tower {
            Tower::Prime => None,
            Tower::Extension { base, .. } => Some(base),
        }
    }

    pub fn relative_degree(&self) -> usize {
        match &self.0.tower {
            Tower::Prime => 1,
            Tower::Extension { modulus, .. } => modulus.len() - 1,
        }
    }

    /// Defining polynomial over [`Field::base`].
    pub fn modulus(&self) -> Option<Poly> {
        match &self.0.tower {
            Tower::Prime => None,
            Tower::Extension { base, modulus } => Some(Poly::from_coeffs(base, modulus.clone())),
        }
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            field: self.clone(),
            digits: smallvec![0; self.degree()],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_int(1)
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, k: i64) -> FieldElement {
        let mut e = self.zero();
        e.digits[0] = k.rem_euclid(self.0.p as i64) as u32;
        e
    }

    /// Element with the given digit vector; shorter vectors are zero-padded.
    pub fn from_digits(&self, digits: &[u32]) -> Result<FieldElement> {
        if digits.len() > self.degree() {
            return Err(Error::Parse(format!(
                "{} digits given for a field of degree {}",
                digits.len(),
                self.degree()
            )));
        }
        if let Some(d) = digits.iter().find(|&&d| d >= self.0.p) {
            return Err(Error::Parse(format!("digit {d} out of range for p = {}", self.0.p)));
        }
        let mut e = self.zero();
        e.digits[..digits.len()].copy_from_slice(digits);
        Ok(e)
    }

    /// The element whose digit vector is the base-`p` expansion of `index`.
    pub fn element(&self, index: u64) -> FieldElement {
        debug_assert!(index < self.order());
        let p = self.0.p as u64;
        let mut rest = index;
        let digits = (0..self.degree())
            .map(|_| {
                let d = (rest % p) as u32;
                rest /= p;
                d
            })
            .collect();
        FieldElement {
            field: self.clone(),
            digits,
        }
    }

    /// All elements, in increasing [`FieldElement::index`] order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.order()).map(move |i| self.element(i))
    }

    /// Parses the comma-separated digit form, e.g. `"2,1"`; parentheses are
    /// tolerated around the list.
    pub fn parse_element(&self, s: &str) -> Result<FieldElement> {
        let s = s.trim();
        let s = s
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(s);
        let digits = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("invalid digit {t:?} in field element {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        self.from_digits(&digits)
    }

    fn add_digits(&self, a: &[u32], b: &[u32]) -> Digits {
        let p = self.0.p;
        a.iter()
            .zip(b)
            .map(|(&x, &y)| {
                let s = x + y;
                if s >= p {
                    s - p
                } else {
                    s
                }
            })
            .collect()
    }

    fn sub_digits(&self, a: &[u32], b: &[u32]) -> Digits {
        let p = self.0.p;
        a.iter()
            .zip(b)
            .map(|(&x, &y)| if x >= y { x - y } else { x + p - y })
            .collect()
    }

    fn mul_digits(&self, a: &[u32], b: &[u32]) -> Digits {
        let p = self.0.p as u64;
        match &self.0.tower {
            Tower::Prime => smallvec![((a[0] as u64 * b[0] as u64) % p) as u32],
            Tower::Extension { base, modulus } => {
                let k = modulus.len() - 1;
                if base.degree() == 1 {
                    let mut acc: SmallVec<[u64; 8]> = smallvec![0; 2 * k - 1];
                    for (i, &x) in a.iter().enumerate() {
                        if x == 0 {
                            continue;
                        }
                        for (j, &y) in b.iter().enumerate() {
                            acc[i + j] = (acc[i + j] + x as u64 * y as u64) % p;
                        }
                    }
                    for t in (k..2 * k - 1).rev() {
                        let c = acc[t];
                        if c == 0 {
                            continue;
                        }
                        acc[t] = 0;
                        for (l, m) in modulus[..k].iter().enumerate() {
                            acc[t - k + l] = (acc[t - k + l] + (p - c) * m.digits[0] as u64) % p;
                        }
                    }
                    acc[..k].iter().map(|&v| v as u32).collect()
                } else {
                    let bd = base.degree();
                    let zero: Digits = smallvec![0; bd];
                    let mut acc: Vec<Digits> = vec![zero; 2 * k - 1];
                    for (i, x) in a.chunks(bd).enumerate() {
                        if x.iter().all(|&d| d == 0) {
                            continue;
                        }
                        for (j, y) in b.chunks(bd).enumerate() {
                            let prod = base.mul_digits(x, y);
                            acc[i + j] = base.add_digits(&acc[i + j], &prod);
                        }
                    }
                    for t in (k..2 * k - 1).rev() {
                        let c = std::mem::replace(&mut acc[t], smallvec![0; bd]);
                        if c.iter().all(|&d| d == 0) {
                            continue;
                        }
                        for (l, m) in modulus[..k].iter().enumerate() {
                            let prod = base.mul_digits(&c, &m.digits);
                            acc[t - k + l] = base.sub_digits(&acc[t - k + l], &prod);
                        }
                    }
                    acc.truncate(k);
                    acc.into_iter().flatten().collect()
                }
            }
        }
    }

    fn wrap(&self, digits: Digits) -> FieldElement {
        FieldElement {
            field: self.clone(),
            digits,
        }
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || *self.0 == *other.0
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.tower {
            Tower::Prime => write!(f, "F_{}", self.0.p),
            Tower::Extension { base, .. } => {
                write!(f, "F_{} = {:?}[y]/({})", self.0.order, base, self.modulus().unwrap())
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.0.order)
    }
}

/// An element of a [`Field`], always in canonical reduced form.
#[derive(Clone)]
pub struct FieldElement {
    field: Field,
    digits: Digits,
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Base-`p` digits, low degree first.
    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    /// The integer whose base-`p` expansion is the digit vector.
    pub fn index(&self) -> u64 {
        let p = self.field.characteristic() as u64;
        self.digits.iter().rev().fold(0, |acc, &d| acc * p + d as u64)
    }

    pub fn is_zero(&self) -> bool {
        self.digits.iter().all(|&d| d == 0)
    }

    pub fn is_one(&self) -> bool {
        self.digits[0] == 1 && self.digits[1..].iter().all(|&d| d == 0)
    }

    fn check(&self, other: &FieldElement) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::IncompatibleFields)
        }
    }

    pub fn checked_add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(self.field.wrap(self.field.add_digits(&self.digits, &other.digits)))
    }

    pub fn checked_sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(self.field.wrap(self.field.sub_digits(&self.digits, &other.digits)))
    }

    pub fn checked_mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        Ok(self.field.wrap(self.field.mul_digits(&self.digits, &other.digits)))
    }

    pub fn checked_div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check(other)?;
        self.checked_mul(&other.inv()?)
    }

    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(self.field.order() - 2))
    }

    pub fn pow(&self, mut e: u64) -> FieldElement {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `true` iff the element is a nonzero square.
    pub fn is_nonzero_square(&self) -> bool {
        !self.is_zero() && self.pow((self.field.order() - 1) / 2).is_one()
    }

    /// The unique `p`-th root (the field is perfect).
    pub fn pth_root(&self) -> FieldElement {
        self.pow(self.field.order() / self.field.characteristic() as u64)
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.digits == other.digits && self.field == other.field
    }
}

impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.digits.hash(state);
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.index().cmp(&other.index())
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.digits.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

macro_rules! binop {
    ($Trait:ident, $method:ident, $checked:ident) => {
        impl $Trait<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$checked(rhs).expect("operands belong to incompatible fields")
            }
        }
        impl $Trait<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
        impl $Trait<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        let p = self.field.characteristic();
        let digits = self.digits.iter().map(|&d| if d == 0 { 0 } else { p - d }).collect();
        self.field.wrap(digits)
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

/// The working field `L = F_{q^n}` over its ground field `F_q`.
#[derive(Clone)]
pub struct Extension(Arc<ExtensionInner>);

struct ExtensionInner {
    base: Field,
    field: Field,
    n: usize,
    /// `frobenius[i][j]` is the image of the `j`-th unit digit vector under
    /// `x -> x^(q^i)`.
    frobenius: Vec<Vec<Digits>>,
}

impl Extension {
    /// `L = F_q[y]/(modulus)` of degree `n` over `base`. With `None` the
    /// least monic irreducible of degree `n` is chosen.
    pub fn new(base: &Field, n: usize, modulus: Option<&Poly>) -> Result<Extension> {
        let field = base.extend(n, modulus)?;
        let q = base.order();
        let units: Vec<FieldElement> = (0..field.degree())
            .map(|j| {
                let mut e = field.zero();
                e.digits[j] = 1;
                e
            })
            .collect();
        let mut frobenius = Vec::with_capacity(n);
        let mut current = units;
        for _ in 0..n {
            frobenius.push(current.iter().map(|e| e.digits.clone()).collect());
            current = current.iter().map(|e| e.pow(q)).collect();
        }
        Ok(Extension(Arc::new(ExtensionInner {
            base: base.clone(),
            field,
            n,
            frobenius,
        })))
    }

    /// Ground field `F_q`.
    pub fn base(&self) -> &Field {
        &self.0.base
    }

    /// The field `L` itself.
    pub fn field(&self) -> &Field {
        &self.0.field
    }

    /// `n = [L : F_q]`.
    pub fn degree(&self) -> usize {
        self.0.n
    }

    /// `q = |F_q|`.
    pub fn q(&self) -> u64 {
        self.0.base.order()
    }

    pub fn modulus(&self) -> Poly {
        self.0.field.modulus().expect("extension has a modulus")
    }

    /// Embeds an element of `F_q` into `L`.
    pub fn embed(&self, a: &FieldElement) -> Result<FieldElement> {
        if a.field() != self.base() {
            return Err(Error::IncompatibleFields);
        }
        let mut e = self.field().zero();
        e.digits[..a.digits.len()].copy_from_slice(&a.digits);
        Ok(e)
    }

    /// Inverse of [`Extension::embed`] on its image.
    pub fn restrict(&self, x: &FieldElement) -> Option<FieldElement> {
        let s = self.base().degree();
        if x.digits[s..].iter().any(|&d| d != 0) {
            return None;
        }
        Some(self.base().wrap(SmallVec::from_slice(&x.digits[..s])))
    }

    /// Coordinates of `x` in the basis `1, y, .., y^(n-1)` over `F_q`.
    pub fn coordinates(&self, x: &FieldElement) -> Vec<FieldElement> {
        let s = self.base().degree();
        x.digits
            .chunks(s)
            .map(|c| self.base().wrap(SmallVec::from_slice(c)))
            .collect()
    }

    pub fn from_coordinates(&self, coords: &[FieldElement]) -> Result<FieldElement> {
        if coords.len() != self.degree() {
            return Err(Error::Domain(format!(
                "expected {} coordinates, got {}",
                self.degree(),
                coords.len()
            )));
        }
        let mut e = self.field().zero();
        let s = self.base().degree();
        for (i, c) in coords.iter().enumerate() {
            if c.field() != self.base() {
                return Err(Error::IncompatibleFields);
            }
            e.digits[i * s..(i + 1) * s].copy_from_slice(&c.digits);
        }
        Ok(e)
    }

    /// `x -> x^q`.
    pub fn frobenius_q(&self, x: &FieldElement) -> FieldElement {
        self.frobenius_q_pow(x, 1)
    }

    /// `x -> x^(q^i)`.
    pub fn frobenius_q_pow(&self, x: &FieldElement, i: usize) -> FieldElement {
        assert!(x.field() == self.field(), "element does not belong to L");
        let i = i % self.0.n;
        if i == 0 {
            return x.clone();
        }
        let p = x.field.characteristic() as u64;
        let table = &self.0.frobenius[i];
        let mut acc: SmallVec<[u64; 8]> = smallvec![0; x.digits.len()];
        for (&d, image) in x.digits.iter().zip(table) {
            if d == 0 {
                continue;
            }
            for (a, &v) in acc.iter_mut().zip(image) {
                *a = (*a + d as u64 * v as u64) % p;
            }
        }
        self.field().wrap(acc.into_iter().map(|v| v as u32).collect())
    }

    /// Monic minimal polynomial of `x` over `F_q`, found as the first linear
    /// dependence among `1, x, x^2, ..`.
    pub fn minimal_polynomial(&self, x: &FieldElement) -> Poly {
        let base = self.base();
        let mut powers = vec![self.coordinates(&self.field().one())];
        let mut current = self.field().one();
        loop {
            current = &current * x;
            let target = self.coordinates(&current);
            if let Some(sol) = linalg::solve(base, &powers, &target) {
                let mut coeffs: Vec<FieldElement> = sol.particular.iter().map(|c| -c).collect();
                coeffs.push(base.one());
                return Poly::from_coeffs(base, coeffs);
            }
            powers.push(target);
        }
    }
}

impl PartialEq for Extension {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.field == other.0.field
    }
}

impl Eq for Extension {}

impl fmt::Debug for Extension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Extension(n = {}, {:?})", self.0.n, self.0.field)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f9() -> Field {
        Field::new(3, 2, None).unwrap()
    }

    #[test]
    fn prime_field_auto_modulus_is_x() {
        let f3 = Field::new(3, 1, None).unwrap();
        assert_eq!(f3.order(), 3);
        assert_eq!(f3.modulus().unwrap().to_machine_string(), "0,1");
    }

    #[test]
    fn f9_auto_modulus_is_least_irreducible_quadratic() {
        // Monic quadratics x^2 + b x + a ordered by (a, b): (0, _) vanish at 0,
        // (1, 0) = x^2 + 1 has no root in F_3 (squares are 0, 1).
        let f = f9();
        assert_eq!(f.modulus().unwrap().to_machine_string(), "1,0,1");
        assert_eq!(f.order(), 9);
    }

    #[test]
    fn rejects_even_and_composite_characteristic() {
        assert_eq!(Field::new(2, 1, None).unwrap_err(), Error::CharacteristicTwo);
        assert!(matches!(Field::new(9, 1, None), Err(Error::FieldConstruction(_))));
        assert!(matches!(Field::new(3, 2, Some(&[2, 0, 1])), Err(Error::FieldConstruction(_))));
    }

    #[test]
    fn explicit_modulus_accepted() {
        let f = Field::new(3, 2, Some(&[2, 2, 1])).unwrap();
        assert_eq!(f.modulus().unwrap().to_machine_string(), "2,2,1");
    }

    #[test]
    fn small_prime_arithmetic() {
        let f3 = Field::new(3, 1, None).unwrap();
        let two = f3.from_int(2);
        assert_eq!(&two + &two, f3.one());
        assert_eq!(&two * &two, f3.one());
        assert_eq!(-&two, f3.one());
        assert_eq!(two.inv().unwrap(), two);
        assert_eq!(f3.zero().inv().unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn incompatible_fields_rejected() {
        let f3 = Field::new(3, 1, None).unwrap();
        let f5 = Field::new(5, 1, None).unwrap();
        assert_eq!(
            f3.one().checked_add(&f5.one()).unwrap_err(),
            Error::IncompatibleFields
        );
    }

    #[test]
    fn inverse_and_identity_over_f9() {
        let f = f9();
        for x in f.elements() {
            assert_eq!(&f.one() * &x, x);
            if !x.is_zero() {
                assert!((&x * &x.inv().unwrap()).is_one());
            }
        }
    }

    #[test]
    fn frobenius_matches_direct_power() {
        let f3 = Field::new(3, 1, None).unwrap();
        let l = Extension::new(&f3, 2, None).unwrap();
        let y = l.field().from_digits(&[0, 1]).unwrap();
        // y^2 = -1 so y^3 = -y.
        assert_eq!(l.frobenius_q(&y).to_string(), "0,2");
        for x in l.field().elements() {
            assert_eq!(l.frobenius_q(&x), x.pow(3));
            assert_eq!(l.frobenius_q_pow(&x, 2), x);
        }
        assert!(l.frobenius_q(&l.field().zero()).is_zero());
        for a in f3.elements() {
            let e = l.embed(&a).unwrap();
            assert_eq!(l.frobenius_q(&e), e);
            assert_eq!(l.restrict(&e), Some(a));
        }
    }

    #[test]
    fn tower_over_non_prime_base() {
        let f9 = f9();
        let l = Extension::new(&f9, 2, None).unwrap();
        assert_eq!(l.field().order(), 81);
        let mut fixed = 0;
        for x in l.field().elements() {
            let fx = l.frobenius_q(&x);
            assert_eq!(fx, x.pow(9));
            if fx == x {
                fixed += 1;
            }
        }
        assert_eq!(fixed, 9);
    }

    #[test]
    fn parse_and_display_round_trip() {
        let f = f9();
        let x = f.parse_element("2,1").unwrap();
        assert_eq!(x.to_string(), "2,1");
        assert_eq!(f.parse_element("(1)").unwrap(), f.one());
        assert!(f.parse_element("3").is_err());
        assert!(f.parse_element("1,1,1").is_err());
    }

    #[test]
    fn minimal_polynomial_of_generator() {
        let f3 = Field::new(3, 1, None).unwrap();
        let l = Extension::new(&f3, 2, None).unwrap();
        let y = l.field().from_digits(&[0, 1]).unwrap();
        assert_eq!(l.minimal_polynomial(&y).to_machine_string(), "1,0,1");
        assert_eq!(l.minimal_polynomial(&l.field().zero()).to_machine_string(), "0,1");
    }
}
