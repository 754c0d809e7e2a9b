mod common;

use drinfeld::frobenius::char_poly;
use drinfeld::{DrinfeldModule, Extension, Field, FieldElement, OrePoly, Poly};
use proptest::prelude::*;

fn shapes() -> Vec<Extension> {
    [(3, 1, 2), (3, 2, 2), (5, 1, 2), (3, 1, 3), (7, 1, 1)]
        .iter()
        .map(|&(p, s, n)| common::ext(p, s, n))
        .collect()
}

fn element(l: &Extension, i: u64) -> FieldElement {
    l.field().element(i % l.field().order())
}

fn base_poly(l: &Extension, idx: &[u64]) -> Poly {
    let base = l.base();
    Poly::from_coeffs(base, idx.iter().map(|i| base.element(i % base.order())).collect())
}

fn ore(l: &Extension, idx: &[u64]) -> OrePoly {
    OrePoly::new(l, idx.iter().map(|&i| element(l, i)).collect())
}

fn module(l: &Extension, g: u64, h: u64, delta: u64) -> DrinfeldModule {
    let size = l.field().order();
    DrinfeldModule::new(l, element(l, g), element(l, h), l.field().element(delta % (size - 1) + 1)).unwrap()
}

fn coeffs(max: usize) -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(any::<u64>(), 0..max)
}

proptest! {
    #[test]
    fn field_axioms(i in 0usize..5, x in any::<u64>(), y in any::<u64>(), z in any::<u64>()) {
        let l = &shapes()[i];
        let (x, y, z) = (element(l, x), element(l, y), element(l, z));
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&(&x - &y) + &y, x.clone());
        if !x.is_zero() {
            prop_assert!((&x * &x.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn frobenius_is_an_automorphism(i in 0usize..5, x in any::<u64>(), y in any::<u64>()) {
        let l = &shapes()[i];
        let (x, y) = (element(l, x), element(l, y));
        prop_assert_eq!(l.frobenius_q(&(&x + &y)), &l.frobenius_q(&x) + &l.frobenius_q(&y));
        prop_assert_eq!(l.frobenius_q(&(&x * &y)), &l.frobenius_q(&x) * &l.frobenius_q(&y));
        prop_assert_eq!(l.frobenius_q_pow(&x, l.degree()), x);
    }

    #[test]
    fn polynomial_division_and_gcd(i in 0usize..5, a in coeffs(7), b in coeffs(5)) {
        let l = &shapes()[i];
        let (a, b) = (base_poly(l, &a), base_poly(l, &b));
        if let (Some(da), Some(db)) = (a.degree(), b.degree()) {
            prop_assert_eq!((&a * &b).degree(), Some(da + db));
        }
        if !b.is_zero() {
            let (q, r) = a.div_rem(&b).unwrap();
            prop_assert_eq!(&(&q * &b) + &r, a.clone());
            prop_assert!(r.degree() < b.degree());
        }
        let g = a.gcd(&b);
        if !g.is_zero() {
            prop_assert!(g.is_monic());
            prop_assert!(g.divides(&a) || a.is_zero());
            prop_assert!(g.divides(&b) || b.is_zero());
        }
    }

    #[test]
    fn squarefree_split_reconstructs(i in 0usize..5, a in coeffs(4), b in coeffs(3), e in 1u32..5) {
        let l = &shapes()[i];
        let f = &base_poly(l, &a) * &base_poly(l, &b).pow(e);
        prop_assume!(!f.is_zero());
        let (g, omega) = f.squarefree_split().unwrap();
        prop_assert_eq!(&(&g * &g) * &omega, f.clone());
        prop_assert!(g.is_monic());
        prop_assert!(omega.is_squarefree());
    }

    #[test]
    fn human_and_machine_forms_round_trip(i in 0usize..5, a in coeffs(6)) {
        let l = &shapes()[i];
        let a = base_poly(l, &a);
        prop_assert_eq!(Poly::parse(l.base(), &a.to_string()).unwrap(), a.clone());
        prop_assert_eq!(Poly::parse(l.base(), &a.to_machine_string()).unwrap(), a);
    }

    #[test]
    fn ore_degree_and_height_are_additive(i in 0usize..5, a in coeffs(5), b in coeffs(5)) {
        let l = &shapes()[i];
        let (a, b) = (ore(l, &a), ore(l, &b));
        prop_assume!(!a.is_zero() && !b.is_zero());
        let ab = &a * &b;
        prop_assert_eq!(ab.degree().unwrap(), a.degree().unwrap() + b.degree().unwrap());
        prop_assert_eq!(ab.height().unwrap(), a.height().unwrap() + b.height().unwrap());
    }

    #[test]
    fn right_gcd_divides_both(i in 0usize..5, a in coeffs(5), b in coeffs(5)) {
        let l = &shapes()[i];
        let (a, b) = (ore(l, &a), ore(l, &b));
        prop_assume!(!a.is_zero() || !b.is_zero());
        let g = a.rgcd(&b).unwrap();
        prop_assert!(g.is_monic());
        prop_assert!(a.rdivmod(&g).unwrap().1.is_zero());
        prop_assert!(b.rdivmod(&g).unwrap().1.is_zero());
    }

    #[test]
    fn principal_ideal_generator(i in 0usize..5, m in any::<(u64, u64, u64)>(), a in coeffs(3), b in coeffs(3)) {
        let l = &shapes()[i];
        let phi = module(l, m.0, m.1, m.2);
        let (a, b) = (base_poly(l, &a), base_poly(l, &b));
        prop_assume!(!a.is_zero() || !b.is_zero());
        let g = a.gcd(&b);
        prop_assert_eq!(phi.phi_ideal(&a, &b).unwrap(), phi.phi(&g).monic());
    }

    #[test]
    fn height_of_p_powers(i in 0usize..5, m in any::<(u64, u64, u64)>(), k in 1u32..3) {
        let l = &shapes()[i];
        let phi = module(l, m.0, m.1, m.2);
        let h = phi.height();
        prop_assert!(h == 1 || h == 2);
        let pk = phi.characteristic().pow(k);
        prop_assert_eq!(phi.phi(&pk).height().unwrap(), k as usize * phi.d() * h);
    }

    #[test]
    fn phi_matches_power_oracle(i in 0usize..5, m in any::<(u64, u64, u64)>(), a in coeffs(4)) {
        let l = &shapes()[i];
        let phi = module(l, m.0, m.1, m.2);
        let a = base_poly(l, &a);
        prop_assert_eq!(phi.phi(&a), common::phi_by_powers(&phi, &a));
    }

    #[test]
    fn supersingular_iff_p_divides_trace(i in 0usize..5, m in any::<(u64, u64, u64)>()) {
        let l = &shapes()[i];
        let phi = module(l, m.0, m.1, m.2);
        let cp = char_poly(&phi).unwrap();
        prop_assert_eq!(phi.characteristic().divides(&cp.c), phi.height() == 2);
    }

    #[test]
    fn euler_poincare_invariant_under_twist(i in 0usize..5, m in any::<(u64, u64, u64)>()) {
        let l = &shapes()[i];
        let phi = module(l, m.0, m.1, m.2);
        let psi = phi.twist(&OrePoly::tau_pow(l, 1)).unwrap();
        let chi = char_poly(&phi).unwrap().ep_char().unwrap();
        prop_assert_eq!(char_poly(&psi).unwrap().ep_char().unwrap(), chi);
    }

    #[test]
    fn module_records_round_trip(i in 0usize..5, m in any::<(u64, u64, u64)>()) {
        let l = &shapes()[i];
        let phi = module(l, m.0, m.1, m.2);
        let json = serde_json::to_string(&phi.to_record()).unwrap();
        let back: drinfeld::drinfeld::ModuleRecord = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back.to_module().unwrap(), phi);
    }
}

#[test]
fn fixed_points_of_iterated_frobenius() {
    let f3 = Field::new(3, 1, None).unwrap();
    let l = Extension::new(&f3, 4, None).unwrap();
    for d in [1, 2, 4] {
        let fixed = l
            .field()
            .elements()
            .filter(|x| &l.frobenius_q_pow(x, d) == x)
            .count();
        assert_eq!(fixed as u64, 3u64.pow(d as u32));
    }
}
