//! Dense univariate polynomials over a [`Field`]; with coefficients in `F_q`
//! this is the ring `A = F_q[T]`.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::ff::{Extension, Field, FieldElement};

/// A polynomial with coefficients low degree first and no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<FieldElement>,
}

impl Poly {
    pub fn from_coeffs(field: &Field, mut coeffs: Vec<FieldElement>) -> Poly {
        assert!(coeffs.iter().all(|c| c.field() == field), "coefficient from a different field");
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    /// Coefficients taken from the prime subfield, low degree first.
    pub fn from_ints(field: &Field, coeffs: &[u32]) -> Poly {
        let coeffs = coeffs.iter().map(|&c| field.from_int(c as i64)).collect();
        Poly::from_coeffs(field, coeffs)
    }

    pub fn zero(field: &Field) -> Poly {
        Poly {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: &Field) -> Poly {
        Poly::constant(field.one())
    }

    /// The indeterminate `T`.
    pub fn x(field: &Field) -> Poly {
        Poly::monomial(field.one(), 1)
    }

    pub fn constant(c: FieldElement) -> Poly {
        let field = c.field().clone();
        Poly::from_coeffs(&field, vec![c])
    }

    pub fn monomial(c: FieldElement, k: usize) -> Poly {
        let field = c.field().clone();
        let mut coeffs = vec![field.zero(); k];
        coeffs.push(c);
        Poly::from_coeffs(&field, coeffs)
    }

    /// The polynomial of degree `< len` whose `i`-th coefficient is the
    /// field element with index equal to the `i`-th base-`Q` digit of `index`.
    pub fn from_index(field: &Field, len: usize, index: u64) -> Poly {
        let q = field.order();
        let mut rest = index;
        let coeffs = (0..len)
            .map(|_| {
                let c = field.element(rest % q);
                rest /= q;
                c
            })
            .collect();
        Poly::from_coeffs(field, coeffs)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// `None` for the zero polynomial (degree `-inf`).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn leading_coeff(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(|c| c.is_one())
    }

    pub fn scale(&self, c: &FieldElement) -> Poly {
        Poly::from_coeffs(&self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Scales to leading coefficient one; zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.inv().expect("leading coefficient is nonzero")),
        }
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(&self.field);
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

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        if self.field != divisor.field {
            return Err(Error::IncompatibleFields);
        }
        let Some(dd) = divisor.degree() else {
            return Err(Error::DivisionByZero);
        };
        let inv_lc = divisor.coeffs[dd].inv()?;
        let mut rem = self.coeffs.clone();
        let Some(top) = self.degree().filter(|&d| d >= dd) else {
            return Ok((Poly::zero(&self.field), self.clone()));
        };
        let mut quot = vec![self.field.zero(); top - dd + 1];
        for k in (dd..=top).rev() {
            let c = &rem[k] * &inv_lc;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k - dd + j] = &rem[k - dd + j] - &(&c * d);
            }
            quot[k - dd] = c;
        }
        rem.truncate(dd);
        Ok((
            Poly::from_coeffs(&self.field, quot),
            Poly::from_coeffs(&self.field, rem),
        ))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// `Some(self / divisor)` when the division is exact.
    pub fn exact_div(&self, divisor: &Poly) -> Option<Poly> {
        match self.div_rem(divisor) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    pub fn divides(&self, other: &Poly) -> bool {
        !self.is_zero() && other.exact_div(self).is_some()
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("divisor is nonzero");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * &self.field.from_int(i as i64))
            .collect();
        Poly::from_coeffs(&self.field, coeffs)
    }

    /// Evaluation at a point of the coefficient field.
    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        self.coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, c| &(&acc * x) + c)
    }

    /// Evaluation at a point of an extension `L` of the coefficient field.
    pub fn eval_in(&self, ext: &Extension, x: &FieldElement) -> Result<FieldElement> {
        if x.field() != ext.field() {
            return Err(Error::IncompatibleFields);
        }
        let mut acc = ext.field().zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + &ext.embed(c)?;
        }
        Ok(acc)
    }

    fn pow_mod(&self, mut e: u64, modulus: &Poly) -> Poly {
        let mut base = self.rem(modulus).expect("modulus is nonzero");
        let mut acc = Poly::one(&self.field).rem(modulus).expect("modulus is nonzero");
        while e > 0 {
            if e & 1 == 1 {
                acc = (&acc * &base).rem(modulus).expect("modulus is nonzero");
            }
            e >>= 1;
            if e > 0 {
                base = (&base * &base).rem(modulus).expect("modulus is nonzero");
            }
        }
        acc
    }

    /// Rabin's test: `f` of degree `k` is irreducible over `F_Q` iff
    /// `T^(Q^k) = T mod f` and `gcd(T^(Q^(k/r)) - T, f) = 1` for each prime
    /// `r | k`.
    pub fn is_irreducible(&self) -> Result<bool> {
        let k = match self.degree() {
            None | Some(0) => {
                return Err(Error::Domain("irreducibility of a constant polynomial".into()))
            }
            Some(1) => return Ok(true),
            Some(k) => k,
        };
        let f = self.monic();
        let q = self.field.order();
        let t = Poly::x(&self.field);
        let mut frob = vec![t.clone()];
        for i in 1..=k {
            let next = frob[i - 1].pow_mod(q, &f);
            frob.push(next);
        }
        if frob[k] != t {
            return Ok(false);
        }
        for r in prime_divisors(k) {
            let g = (&frob[k / r] - &t).gcd(&f);
            if !g.is_one() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Exact `p`-th root of a polynomial with vanishing derivative.
    fn pth_root(&self) -> Poly {
        let p = self.field.characteristic() as usize;
        let coeffs = self.coeffs.iter().step_by(p).map(|c| c.pth_root()).collect();
        Poly::from_coeffs(&self.field, coeffs)
    }

    /// Squarefree factorisation of a nonzero polynomial: pairwise coprime,
    /// monic, squarefree factors `f_i` with multiplicities `e_i` such that
    /// `self = lc * prod f_i^e_i`.
    pub fn squarefree_factorization(&self) -> Result<Vec<(Poly, usize)>> {
        if self.is_zero() {
            return Err(Error::Domain("squarefree factorisation of zero".into()));
        }
        let mut out = Vec::new();
        sff_monic(&self.monic(), 1, &mut out);
        out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp_lex(&b.0)));
        Ok(out)
    }

    /// Writes `self = g^2 * omega` with `g` monic and `omega` squarefree
    /// carrying the leading coefficient; `g` is maximal.
    pub fn squarefree_split(&self) -> Result<(Poly, Poly)> {
        let lc = self
            .leading_coeff()
            .cloned()
            .ok_or_else(|| Error::Domain("squarefree split of zero".into()))?;
        let mut g = Poly::one(&self.field);
        let mut omega = Poly::constant(lc);
        for (f, e) in self.squarefree_factorization()? {
            g = &g * &f.pow((e / 2) as u32);
            if e % 2 == 1 {
                omega = &omega * &f;
            }
        }
        Ok((g, omega))
    }

    pub fn is_squarefree(&self) -> bool {
        match self.squarefree_factorization() {
            Ok(factors) => factors.iter().all(|(_, e)| *e == 1),
            Err(_) => false,
        }
    }

    /// Factorisation into monic irreducibles by trial division.
    pub(crate) fn factor_trial(&self) -> Vec<(Poly, usize)> {
        let mut rest = self.monic();
        let mut out = Vec::new();
        let mut d = 1;
        while let Some(deg) = rest.degree().filter(|&k| k >= 1) {
            if 2 * d > deg {
                out.push((rest.clone(), 1));
                break;
            }
            for h in monic_irreducibles(&self.field, d) {
                let mut e = 0;
                while let Some(q) = rest.exact_div(&h) {
                    rest = q;
                    e += 1;
                }
                if e > 0 {
                    out.push((h, e));
                }
            }
            d += 1;
        }
        out
    }

    /// All monic divisors, sorted by degree then lexicographically.
    pub fn monic_divisors(&self) -> Vec<Poly> {
        let mut divisors = vec![Poly::one(&self.field)];
        for (h, e) in self.factor_trial() {
            let mut next = Vec::new();
            for d in &divisors {
                let mut acc = d.clone();
                next.push(acc.clone());
                for _ in 0..e {
                    acc = &acc * &h;
                    next.push(acc.clone());
                }
            }
            divisors = next;
        }
        divisors.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp_lex(b)));
        divisors
    }

    /// Lexicographic comparison of coefficient indices, constant term first.
    pub fn cmp_lex(&self, other: &Poly) -> std::cmp::Ordering {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n)
            .map(|i| self.coeff(i).index().cmp(&other.coeff(i).index()))
            .find(|o| o.is_ne())
            .unwrap_or(std::cmp::Ordering::Equal)
    }

    /// Comma-separated coefficient list, low degree first. Coefficients from
    /// non-prime fields are parenthesised.
    pub fn to_machine_string(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let wrap = self.field.degree() > 1;
        self.coeffs
            .iter()
            .map(|c| if wrap { format!("({c})") } else { c.to_string() })
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Accepts both the human form (`"T^2+2*T+1"`) and the machine form
    /// (`"1,2,1"`).
    pub fn parse(field: &Field, s: &str) -> Result<Poly> {
        if s.contains('T') {
            HumanParser::new(field, s).parse()
        } else {
            parse_machine(field, s)
        }
    }
}

fn sff_monic(f: &Poly, multiplier: usize, out: &mut Vec<(Poly, usize)>) {
    if f.degree().unwrap_or(0) == 0 {
        return;
    }
    let p = f.field.characteristic() as usize;
    let mut c = f.gcd(&f.derivative());
    let mut w = f.exact_div(&c).expect("gcd divides f");
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let fac = w.exact_div(&y).expect("gcd divides w");
        if !fac.is_one() {
            out.push((fac, i * multiplier));
        }
        w = y;
        c = c.exact_div(&w).expect("w divides c");
        i += 1;
    }
    if !c.is_one() {
        sff_monic(&c.pth_root(), multiplier * p, out);
    }
}

fn prime_divisors(mut k: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= k {
        if k.is_multiple_of(d) {
            out.push(d);
            while k.is_multiple_of(d) {
                k /= d;
            }
        }
        d += 1;
    }
    if k > 1 {
        out.push(k);
    }
    out
}

/// All monic polynomials of degree `d`, lexicographic with the constant term
/// most significant.
pub fn monic_polys(field: &Field, d: usize) -> impl Iterator<Item = Poly> + '_ {
    let q = field.order();
    let count = q.checked_pow(d as u32).expect("enumeration too large");
    (0..count).map(move |idx| {
        let mut coeffs = vec![field.zero(); d + 1];
        let mut rest = idx;
        for i in (0..d).rev() {
            coeffs[i] = field.element(rest % q);
            rest /= q;
        }
        coeffs[d] = field.one();
        Poly::from_coeffs(field, coeffs)
    })
}

/// The monic irreducible polynomials of degree `d`, in the order of
/// [`monic_polys`].
pub fn monic_irreducibles(field: &Field, d: usize) -> impl Iterator<Item = Poly> + '_ {
    monic_polys(field, d).filter(|f| f.is_irreducible().unwrap_or(false))
}

/// `true` iff `u = v^2` for some `v` in `F_q^*`.
pub fn is_square_in_units(u: &FieldElement) -> Result<bool> {
    if u.is_zero() {
        return Err(Error::Domain("square test of zero".into()));
    }
    Ok(u.is_nonzero_square())
}

fn parse_machine(field: &Field, s: &str) -> Result<Poly> {
    let mut tokens = Vec::new();
    let mut depth = 0i32;
    let mut current = String::new();
    for ch in s.chars() {
        match ch {
            '(' => {
                depth += 1;
                current.push(ch);
            }
            ')' => {
                depth -= 1;
                current.push(ch);
            }
            ',' if depth == 0 => tokens.push(std::mem::take(&mut current)),
            _ => current.push(ch),
        }
    }
    tokens.push(current);
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced parentheses in {s:?}")));
    }
    let coeffs = tokens
        .iter()
        .map(|t| field.parse_element(t))
        .collect::<Result<Vec<_>>>()?;
    Ok(Poly::from_coeffs(field, coeffs))
}

/// Recursive-descent parser for `[+|-] term ((+|-) term)*`, where
/// `term := coeff ['*' mono] | mono`, `coeff := int | '(' digits ')'` and
/// `mono := 'T' ['^' int]`.
struct HumanParser<'a> {
    field: &'a Field,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> HumanParser<'a> {
    fn new(field: &'a Field, s: &str) -> Self {
        HumanParser {
            field,
            chars: s.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn error(&self, what: &str) -> Error {
        let s: String = self.chars.iter().collect();
        Error::Parse(format!("{what} at position {} in {s:?}", self.pos))
    }

    fn parse(mut self) -> Result<Poly> {
        let mut acc = Poly::zero(self.field);
        let mut sign = match self.peek() {
            Some('-') => {
                self.pos += 1;
                -1
            }
            Some('+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let term = self.term()?;
            acc = if sign < 0 { &acc - &term } else { &acc + &term };
            match self.peek() {
                None => return Ok(acc),
                Some('+') => sign = 1,
                Some('-') => sign = -1,
                Some(_) => return Err(self.error("expected '+' or '-'")),
            }
            self.pos += 1;
        }
    }

    fn integer(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| self.error("expected an integer"))
    }

    fn term(&mut self) -> Result<Poly> {
        let coeff = match self.peek() {
            Some('(') => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c != ')') {
                    self.pos += 1;
                }
                if self.peek() != Some(')') {
                    return Err(self.error("unclosed parenthesis"));
                }
                self.pos += 1;
                let s: String = self.chars[start..self.pos].iter().collect();
                Some(self.field.parse_element(&s)?)
            }
            Some(c) if c.is_ascii_digit() => {
                let k = self.integer()?;
                let p = self.field.characteristic() as u64;
                Some(self.field.from_int((k % p) as i64))
            }
            _ => None,
        };
        let has_mono = match (coeff.is_some(), self.peek()) {
            (true, Some('*')) => {
                self.pos += 1;
                true
            }
            (_, Some('T')) => true,
            (true, _) => false,
            (false, _) => return Err(self.error("expected a term")),
        };
        let exponent = if has_mono {
            if self.peek() != Some('T') {
                return Err(self.error("expected 'T'"));
            }
            self.pos += 1;
            if self.peek() == Some('^') {
                self.pos += 1;
                self.integer()? as usize
            } else {
                1
            }
        } else {
            0
        };
        Ok(Poly::monomial(coeff.unwrap_or_else(|| self.field.one()), exponent))
    }
}

impl Hash for Poly {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl fmt::Display for Poly {
    /// Human form, highest degree first: `T^2+2*T+1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let wrap = self.field.degree() > 1;
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            let coeff = if wrap { format!("({c})") } else { c.to_string() };
            match k {
                0 => f.write_str(&coeff)?,
                _ => {
                    if !c.is_one() {
                        write!(f, "{coeff}*")?;
                    }
                    if k == 1 {
                        f.write_str("T")?;
                    } else {
                        write!(f, "T^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect();
        Poly::from_coeffs(&self.field, coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect();
        Poly::from_coeffs(&self.field, coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::from_coeffs(&self.field, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert!(self.field == rhs.field, "operands belong to incompatible fields");
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(&self.field);
        }
        let mut coeffs = vec![self.field.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Poly::from_coeffs(&self.field, coeffs)
    }
}

macro_rules! owned_binop {
    ($Trait:ident, $method:ident) => {
        impl $Trait for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> Field {
        Field::new(3, 1, None).unwrap()
    }

    fn p(field: &Field, c: &[u32]) -> Poly {
        Poly::from_ints(field, c)
    }

    #[test]
    fn gcd_and_product_examples() {
        let f = f3();
        let t = Poly::x(&f);
        assert_eq!((&t * &t).gcd(&t), t);
        // (T+1)(T+2) = T^2 + 3T + 2 = T^2 + 2 over F_3
        assert_eq!(&p(&f, &[1, 1]) * &p(&f, &[2, 1]), p(&f, &[2, 0, 1]));
        assert_eq!(Poly::zero(&f).gcd(&Poly::zero(&f)), Poly::zero(&f));
        assert!(p(&f, &[0, 2]).gcd(&Poly::zero(&f)).is_monic());
    }

    #[test]
    fn division_contract_and_zero_divisor() {
        let f = f3();
        let a = p(&f, &[1, 2, 0, 1, 2]);
        let b = p(&f, &[2, 0, 1]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree() < b.degree());
        assert_eq!(a.div_rem(&Poly::zero(&f)).unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn degree_of_zero_is_minus_infinity() {
        let f = f3();
        assert_eq!(Poly::zero(&f).degree(), None);
        assert_eq!(Poly::one(&f).degree(), Some(0));
    }

    #[test]
    fn irreducibility_examples() {
        let f = f3();
        assert!(Poly::x(&f).is_irreducible().unwrap());
        assert!(p(&f, &[1, 0, 1]).is_irreducible().unwrap());
        assert!(!p(&f, &[2, 0, 1]).is_irreducible().unwrap());
        assert!(Poly::one(&f).is_irreducible().is_err());
    }

    #[test]
    fn squarefree_split_examples() {
        let f = f3();
        let sq = p(&f, &[1, 0, 1]);
        assert_eq!(sq.squarefree_split().unwrap(), (Poly::one(&f), sq.clone()));

        // T^2 (T+1)
        let a = p(&f, &[0, 0, 1, 1]);
        assert_eq!(a.squarefree_split().unwrap(), (Poly::x(&f), p(&f, &[1, 1])));

        // (T+1)^4 (T^2+1)
        let b = &p(&f, &[1, 1]).pow(4) * &sq;
        let (g, omega) = b.squarefree_split().unwrap();
        assert_eq!(g, p(&f, &[1, 1]).pow(2));
        assert_eq!(omega, sq);
        assert_eq!(&(&g * &g) * &omega, b);

        assert!(Poly::zero(&f).squarefree_split().is_err());
    }

    #[test]
    fn squarefree_split_handles_pth_powers() {
        let f = f3();
        // (T+1)^3 * (T+2)^6 * T^5 * 2: derivative of the first two factors vanishes.
        let a = (&p(&f, &[1, 1]).pow(3) * &p(&f, &[2, 1]).pow(6)).scale(&f.from_int(2));
        let a = &a * &Poly::x(&f).pow(5);
        let (g, omega) = a.squarefree_split().unwrap();
        assert_eq!(&(&g * &g) * &omega, a);
        assert!(omega.is_squarefree());
        assert_eq!(g, &(&p(&f, &[1, 1]) * &p(&f, &[2, 1]).pow(3)) * &Poly::x(&f).pow(2));
        assert_eq!(omega.leading_coeff().unwrap(), &f.from_int(2));
    }

    #[test]
    fn monic_irreducible_counts() {
        let f = f3();
        let lin: Vec<String> = monic_irreducibles(&f, 1).map(|x| x.to_string()).collect();
        assert_eq!(lin, vec!["T", "T+1", "T+2"]);
        let quad: Vec<String> = monic_irreducibles(&f, 2).map(|x| x.to_string()).collect();
        assert_eq!(quad, vec!["T^2+1", "T^2+T+2", "T^2+2*T+2"]);
        assert_eq!(monic_irreducibles(&f, 3).count(), 8);
    }

    #[test]
    fn unit_squares() {
        let f = f3();
        assert!(is_square_in_units(&f.one()).unwrap());
        assert!(!is_square_in_units(&f.from_int(2)).unwrap());
        assert!(is_square_in_units(&f.zero()).is_err());
        let f5 = Field::new(5, 1, None).unwrap();
        for u in f5.elements().skip(1) {
            assert!(is_square_in_units(&(&u * &u)).unwrap());
        }
    }

    #[test]
    fn text_forms() {
        let f = f3();
        let a = p(&f, &[1, 2, 1]);
        assert_eq!(a.to_string(), "T^2+2*T+1");
        assert_eq!(a.to_machine_string(), "1,2,1");
        assert_eq!(Poly::parse(&f, "T^2+2*T+1").unwrap(), a);
        assert_eq!(Poly::parse(&f, "1,2,1").unwrap(), a);
        assert_eq!(Poly::parse(&f, "T^2 - T + 1").unwrap(), a);
        assert_eq!(Poly::parse(&f, "T^2 + 2T + 1").unwrap(), a);
        assert_eq!(Poly::parse(&f, "-T").unwrap(), p(&f, &[0, 2]));
        assert_eq!(Poly::parse(&f, "T").unwrap(), Poly::x(&f));
        assert_eq!(Poly::parse(&f, "0").unwrap(), Poly::zero(&f));
        assert!(Poly::parse(&f, "T^").is_err());
        assert!(Poly::parse(&f, "2*").is_err());

        let f9 = Field::new(3, 2, None).unwrap();
        let b = Poly::from_coeffs(&f9, vec![f9.parse_element("1,2").unwrap(), f9.one()]);
        assert_eq!(b.to_machine_string(), "(1,2),(1,0)");
        assert_eq!(b.to_string(), "T+(1,2)");
        assert_eq!(Poly::parse(&f9, &b.to_machine_string()).unwrap(), b);
        assert_eq!(Poly::parse(&f9, &b.to_string()).unwrap(), b);
        assert_eq!(Poly::parse(&f9, "(1,2)T^2").unwrap().coeff(2), f9.parse_element("1,2").unwrap());
    }

    #[test]
    fn monic_divisors_of_square() {
        let f = f3();
        let g = &Poly::x(&f).pow(2) * &p(&f, &[1, 1]);
        let divs: Vec<String> = g.monic_divisors().iter().map(|d| d.to_string()).collect();
        assert_eq!(divs, vec!["1", "T", "T+1", "T^2", "T^2+T", "T^3+T^2"]);
    }
}
