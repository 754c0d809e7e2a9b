//! Independent brute-force oracles shared by the integration suites.
#![allow(dead_code)]

use drinfeld::poly::monic_polys;
use drinfeld::{CharPoly, DrinfeldModule, Extension, Field, FieldElement, OrePoly, Poly};

pub fn ext(p: u32, s: usize, n: usize) -> Extension {
    let base = Field::new(p, s, None).unwrap();
    Extension::new(&base, n, None).unwrap()
}

pub fn module(l: &Extension, gamma: u64, g: u64, delta: u64) -> DrinfeldModule {
    let f = l.field();
    DrinfeldModule::new(l, f.element(gamma), f.element(g), f.element(delta)).unwrap()
}

/// `Phi_a` as `sum a_i (Phi_T)^i`, powers by repeated multiplication.
pub fn phi_by_powers(phi: &DrinfeldModule, a: &Poly) -> OrePoly {
    let l = phi.ext();
    let mut acc = OrePoly::zero(l);
    let mut power = OrePoly::one(l);
    for c in a.coeffs() {
        let c = OrePoly::constant(l, l.embed(c).unwrap());
        acc = &acc + &(&c * &power);
        power = &power * phi.phi_t();
    }
    acc
}

/// `t^(2n) - Phi_c t^n + Phi_(mu P^m)`, built from [`phi_by_powers`].
pub fn frobenius_identity(phi: &DrinfeldModule, c: &Poly, mu: &FieldElement) -> OrePoly {
    let l = phi.ext();
    let n = phi.n();
    let frob = OrePoly::tau_pow(l, n);
    let constant = phi.characteristic().pow(phi.m() as u32).scale(mu);
    let lhs = &OrePoly::tau_pow(l, 2 * n) - &(&phi_by_powers(phi, c) * &frob);
    &lhs + &phi_by_powers(phi, &constant)
}

/// Every `(c, mu)` with `deg c <= floor(md/2)`, `mu != 0` that annihilates
/// the Frobenius.
pub fn brute_force_char_polys(phi: &DrinfeldModule) -> Vec<(Poly, FieldElement)> {
    let base = phi.ext().base();
    let q = base.order();
    let len = phi.m() * phi.d() / 2 + 1;
    let mut out = Vec::new();
    for idx in 0..q.pow(len as u32) {
        let c = Poly::from_index(base, len, idx);
        for mu in base.elements().skip(1) {
            if frobenius_identity(phi, &c, &mu).is_zero() {
                out.push((c.clone(), mu));
            }
        }
    }
    out
}

/// The characteristic polynomial by exhaustive search; when several pairs
/// work the square one is the characteristic polynomial.
pub fn brute_force_char_poly(phi: &DrinfeldModule) -> CharPoly {
    let all = brute_force_char_polys(phi);
    let to_cp = |(c, mu): &(Poly, FieldElement)| CharPoly {
        c: c.clone(),
        mu: mu.clone(),
        p: phi.characteristic().clone(),
        m: phi.m(),
    };
    match all.len() {
        0 => panic!("no characteristic polynomial found for {phi:?}"),
        1 => to_cp(&all[0]),
        _ => all
            .iter()
            .map(to_cp)
            .find(CharPoly::is_perfect_square)
            .expect("a square candidate"),
    }
}

/// Irreducibility by trial division by every monic polynomial of degree at
/// most half.
pub fn irreducible_by_trial_division(f: &Poly) -> bool {
    let deg = f.degree().unwrap();
    assert!(deg >= 1);
    for k in 1..=deg / 2 {
        if monic_polys(f.field(), k).any(|h| f.rem(&h).unwrap().is_zero()) {
            return false;
        }
    }
    true
}

pub fn has_root(f: &Poly) -> bool {
    f.field().elements().any(|x| f.eval(&x).is_zero())
}

fn mobius(mut k: usize) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= k {
        if k.is_multiple_of(p) {
            k /= p;
            if k.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if k > 1 {
        result = -result;
    }
    result
}

/// `(1/d) sum_(e | d) mu(e) q^(d/e)`.
pub fn necklace(q: u64, d: usize) -> u64 {
    let total: i64 = (1..=d)
        .filter(|e| d.is_multiple_of(*e))
        .map(|e| mobius(e) * (q as i64).pow((d / e) as u32))
        .sum();
    (total / d as i64) as u64
}

/// `x^e` by repeated multiplication.
pub fn naive_pow(x: &FieldElement, e: u64) -> FieldElement {
    (0..e).fold(x.field().one(), |acc, _| &acc * x)
}

pub fn squares(field: &Field) -> Vec<FieldElement> {
    field.elements().skip(1).map(|x| &x * &x).collect()
}
