use proptest::prelude::*;

use permcross::poly::rational_expand;
use permcross::{Permutation, QPoly, Symmetry, YQPoly, ZSeries};

fn perm(max_n: usize) -> impl Strategy<Value = Permutation> {
    (0..=max_n)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|w| Permutation::new(w).unwrap())
}

fn qpoly() -> impl Strategy<Value = QPoly> {
    prop::collection::vec(-30i64..30, 0..6).prop_map(QPoly::new)
}

fn small_qpoly() -> impl Strategy<Value = QPoly> {
    prop::collection::vec(-4i64..5, 0..3).prop_map(QPoly::new)
}

fn yqpoly() -> impl Strategy<Value = YQPoly> {
    prop::collection::vec((0u32..4, 0u32..4, -30i64..30), 0..6)
        .prop_map(|t| YQPoly::from_terms(t).unwrap())
}

proptest! {
    #[test]
    fn qpoly_ring_axioms(a in qpoly(), b in qpoly(), c in qpoly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&a * &QPoly::one(), a);
    }

    #[test]
    fn yqpoly_ring_axioms(a in yqpoly(), b in yqpoly(), c in yqpoly()) {
        let mul = |x: &YQPoly, y: &YQPoly| x.checked_mul(y).unwrap();
        let add = |x: &YQPoly, y: &YQPoly| x.checked_add(y).unwrap();
        prop_assert_eq!(mul(&a, &b), mul(&b, &a));
        prop_assert_eq!(mul(&a, &add(&b, &c)), add(&mul(&a, &b), &mul(&a, &c)));
        prop_assert_eq!(add(&a.checked_sub(&b).unwrap(), &b), a);
    }

    #[test]
    fn specialization_is_a_ring_map(a in yqpoly(), b in yqpoly(), v in -3i64..4) {
        let prod = a.checked_mul(&b).unwrap().at_y(&v).unwrap();
        prop_assert_eq!(prod, &a.at_y(&v).unwrap() * &b.at_y(&v).unwrap());
        let sum = a.checked_add(&b).unwrap().at_q(&v).unwrap();
        prop_assert_eq!(sum, &a.at_q(&v).unwrap() + &b.at_q(&v).unwrap());
    }

    #[test]
    fn poly_text_and_json_round_trip(a in qpoly(), b in yqpoly()) {
        prop_assert_eq!(a.to_string().parse::<QPoly>().unwrap(), a.clone());
        prop_assert_eq!(b.to_string().parse::<YQPoly>().unwrap(), b.clone());
        let j = serde_json::to_string(&b).unwrap();
        prop_assert_eq!(serde_json::from_str::<YQPoly>(&j).unwrap(), b);
    }

    #[test]
    fn rational_expansion_times_denominator(num in qpoly(), tail in small_qpoly(), tail2 in small_qpoly()) {
        let order = 7;
        let num_c: Vec<QPoly> = num.coeffs().iter().map(|&c| QPoly::constant(c)).collect();
        let den = vec![QPoly::one(), tail, tail2];
        let f = rational_expand(&num_c, &den, order).unwrap();
        let back = f.try_mul(&ZSeries::new(den, order)).unwrap();
        prop_assert_eq!(back, ZSeries::new(num_c, order));
    }

    #[test]
    fn insert_then_erase(p in perm(9), a in 1usize..11, b in 1usize..11) {
        let n = p.len();
        let (a, b) = (a.min(n + 1), b.min(n + 1));
        let t = p.insert(a, b).unwrap();
        prop_assert_eq!(t.at(a), b);
        prop_assert_eq!(t.erase_value(b).unwrap(), p.clone());
        prop_assert_eq!(p.insert_of_inverse(a, b).unwrap(), p.inverse().insert(a, b).unwrap());
    }

    #[test]
    fn symmetries_act_as_a_group(p in perm(12)) {
        for f in Symmetry::ALL {
            prop_assert_eq!(f.inverse().apply(&f.apply(&p)), p.clone());
            for g in Symmetry::ALL {
                prop_assert_eq!(f.compose(g).apply(&p), f.apply(&g.apply(&p)));
            }
        }
        prop_assert_eq!(Symmetry::Rci.apply(&p).crs(), p.crs());
    }

    #[test]
    fn word_round_trip(p in perm(14)) {
        let text = p.to_string();
        if p.len() > 9 {
            prop_assert!(text.contains(','));
        }
        prop_assert_eq!(text.parse::<Permutation>().unwrap(), p);
    }

    #[test]
    fn transients_swap_under_inverse(p in perm(12)) {
        let (ut, lt) = p.transients();
        prop_assert_eq!(p.inverse().transients(), (lt, ut));
        prop_assert_eq!(p.apply(Symmetry::Rc).transients(), (lt, ut));
    }
}
