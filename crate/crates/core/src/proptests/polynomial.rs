use super::strategies::{homogeneous, poly, unit};
use proptest::prelude::*;
use crate::polycore::{Homogeneity, SeriesCap};
use crate::Poly;

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::with_cases(128) })]

    #[test]
    fn ring_axioms(f in poly(3, 5, 2), g in poly(3, 5, 2), h in poly(3, 5, 2)) {
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&(&f + &g) - &g, f.clone());
        prop_assert_eq!(&f * &Poly::one(3), f.clone());
        prop_assert!((&f - &f).is_zero());
    }

    #[test]
    fn antisymmetric_parts_divide(g in poly(4, 6, 3), i in 1usize..4) {
        let f = &g - &g.swap_vars(i).unwrap();
        let q = f.div_by_difference(i).unwrap();
        let diff = &Poly::var(4, i) - &Poly::var(4, i + 1);
        prop_assert_eq!(&q * &diff, f);
    }

    #[test]
    fn units_invert(f in unit(2), cap in 0u32..7) {
        let inv = f.invert_unit(SeriesCap(cap)).unwrap();
        prop_assert_eq!(f.mul_truncated(&inv, Some(SeriesCap(cap))), Poly::one(2));
    }

    #[test]
    fn text_round_trip(f in poly(3, 6, 3)) {
        let text = f.to_string();
        prop_assert_eq!(Poly::parse(&text, Some(3)).unwrap(), f.clone());
        prop_assert_eq!(f.clone().to_string(), text);
    }

    #[test]
    fn json_round_trip(f in poly(3, 6, 3)) {
        let json = serde_json::to_string(&f).unwrap();
        let back: Poly = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(&back, &f);
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), json);
        prop_assert_eq!(Poly::from_json(&f.to_json()).unwrap(), f);
    }

    #[test]
    fn homogeneity_is_additive(f in homogeneous(3, 0, 4), g in homogeneous(3, 1, 4)) {
        let prod = &f * &g;
        if !prod.is_zero() {
            prop_assert_eq!(prod.graded_degree(), Homogeneity::Homogeneous(1));
        }
        for i in 1..3 {
            prop_assert_eq!(f.swap_vars(i).unwrap().graded_degree(), f.graded_degree());
        }
    }

    #[test]
    fn homogeneity_of_products(f in homogeneous(3, 2, 4), g in homogeneous(3, -1, 4)) {
        let prod = &f * &g;
        prop_assert!(prod.is_zero() || prod.graded_degree() == Homogeneity::Homogeneous(1));
        prop_assert_eq!(g.swap_vars(2).unwrap().graded_degree(), g.graded_degree());
    }

    #[test]
    fn swap_is_an_involution(f in poly(4, 6, 3), i in 1usize..4) {
        prop_assert_eq!(f.swap_vars(i).unwrap().swap_vars(i).unwrap(), f);
    }
}

#[test]
fn render_example() {
    let f = Poly::parse("x1 + x2 - m1*x1*x2", Some(2)).unwrap();
    assert_eq!(f.to_string(), "1*x[1,0] + 1*x[0,1] + -1*m1^1*x[1,1]");
    assert_eq!(Poly::zero(2).to_string().parse::<Poly>().unwrap().is_zero(), true);
}
