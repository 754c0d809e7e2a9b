mod common;

use common::*;
use drinfeld::classify::{self, is_imaginary, weil_admissible, EndRingKind, Verdict};
use drinfeld::drinfeld::all_modules;
use drinfeld::frobenius::{char_poly, verify};
use drinfeld::poly::{is_square_in_units, monic_irreducibles, monic_polys};
use drinfeld::{Field, Poly};

#[test]
fn char_poly_matches_brute_force_for_small_md() {
    for (p, s, n) in [(3, 1, 1), (5, 1, 1), (3, 1, 2), (3, 2, 1)] {
        let l = ext(p, s, n);
        for phi in all_modules(&l) {
            if phi.m() * phi.d() > 2 {
                continue;
            }
            let cp = char_poly(&phi).unwrap();
            assert_eq!(cp, brute_force_char_poly(&phi), "{phi:?}");
        }
    }
}

#[test]
fn non_unique_solutions_are_exactly_the_degenerate_modules() {
    let l = ext(3, 1, 2);
    for phi in all_modules(&l) {
        let all = brute_force_char_polys(&phi);
        let cp = char_poly(&phi).unwrap();
        assert_eq!(all.len() > 1, cp.is_perfect_square(), "{phi:?}");
    }
}

#[test]
fn documented_char_poly_examples() {
    let l = ext(3, 1, 1);
    let cp = char_poly(&module(&l, 0, 1, 1)).unwrap();
    assert_eq!((cp.c.to_string(), cp.mu.to_string()), ("2".into(), "2".into()));
    let cp = char_poly(&module(&l, 0, 0, 1)).unwrap();
    assert_eq!((cp.c.to_string(), cp.mu.to_string()), ("0".into(), "2".into()));
}

#[test]
fn rabin_test_agrees_with_trial_division() {
    for p in [3, 5] {
        let f = Field::new(p, 1, None).unwrap();
        for d in 1..=4 {
            for poly in monic_polys(&f, d) {
                assert_eq!(
                    poly.is_irreducible().unwrap(),
                    irreducible_by_trial_division(&poly),
                    "{poly}"
                );
                if d <= 3 {
                    assert_eq!(poly.is_irreducible().unwrap(), !has_root(&poly) || d == 1);
                }
            }
        }
    }
}

#[test]
fn irreducible_counts_match_necklace_formula() {
    for (p, s) in [(3, 1), (5, 1), (3, 2)] {
        let f = Field::new(p, s, None).unwrap();
        for d in 1..=3 {
            assert_eq!(monic_irreducibles(&f, d).count() as u64, necklace(f.order(), d));
        }
    }
}

#[test]
fn frobenius_matches_naive_power() {
    let l = ext(3, 2, 2);
    for x in l.field().elements().step_by(7) {
        assert_eq!(l.frobenius_q(&x), naive_pow(&x, 9));
    }
}

#[test]
fn unit_square_test_matches_enumeration() {
    for (p, s) in [(3, 1), (5, 1), (3, 2), (7, 1)] {
        let f = Field::new(p, s, None).unwrap();
        let sq = squares(&f);
        for u in f.elements().skip(1) {
            assert_eq!(is_square_in_units(&u).unwrap(), sq.contains(&u));
        }
    }
}

/// Unified rule: the infinite place stays inert or ramifies iff the
/// discriminant has odd degree or a non-square leading coefficient.
fn imaginary_by_discriminant(c: &Poly, mu: &drinfeld::FieldElement, p: &Poly, m: usize) -> bool {
    let four = p.field().from_int(4);
    let disc = &(c * c) - &p.pow(m as u32).scale(&(&four * mu));
    match disc.degree() {
        None => false,
        Some(k) => k % 2 == 1 || !is_square_in_units(disc.leading_coeff().unwrap()).unwrap(),
    }
}

#[test]
fn case_split_agrees_with_discriminant_rule() {
    for p in [3, 5] {
        let f = Field::new(p, 1, None).unwrap();
        for d in 1..=2 {
            for pp in monic_irreducibles(&f, d) {
                for m in 1..=3 {
                    let len = m * d / 2 + 1;
                    for idx in 0..f.order().pow(len as u32) {
                        let c = Poly::from_index(&f, len, idx);
                        for mu in f.elements().skip(1) {
                            assert_eq!(
                                is_imaginary(&c, &mu, &pp, m).unwrap(),
                                imaginary_by_discriminant(&c, &mu, &pp, m),
                                "c = {c}, mu = {mu}, P = {pp}, m = {m}"
                            );
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn realized_char_polys_are_admissible() {
    for (p, s, n) in [(3, 1, 1), (3, 1, 2), (5, 1, 1), (3, 2, 1)] {
        let l = ext(p, s, n);
        for phi in all_modules(&l) {
            let cp = char_poly(&phi).unwrap();
            let v = weil_admissible(&cp.c, &cp.mu, &cp.p, cp.m).unwrap();
            assert!(v.is_admissible(), "{phi:?} gives {cp}");
            assert_eq!(v.is_supersingular(), phi.height() == 2);
        }
    }
}

#[test]
fn square_char_polys_are_quaternionic() {
    let l = ext(3, 1, 2);
    let phi = module(&l, 0, 0, 1);
    let report = classify::classify(&phi).unwrap();
    assert_eq!(report.verdict, Verdict::Supersingular4);
    assert_eq!(report.end_ring.kind, EndRingKind::QuaternionicCase);
    assert!(verify(&phi, &report.charpoly));
}
