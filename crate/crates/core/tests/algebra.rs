use proptest::prelude::*;
use seshadri::exactalg::modular::{kernel_basis_rational, kernel_dim, rank_lower_bound};
use seshadri::exactalg::{kernel_basis, rank, rat, Field, Matrix, Rational, RationalField};
use seshadri::numfield::NumberField;

fn matrix() -> impl Strategy<Value = Matrix<Rational>> {
    (1usize..6, 1usize..7).prop_flat_map(|(r, c)| {
        // Small entries with many zeros give rank drops often enough.
        prop::collection::vec(prop_oneof![3 => Just(0i64), 2 => -4i64..5], r * c)
            .prop_map(move |v| Matrix::new(r, c, v.into_iter().map(|x| rat(x, 1)).collect()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rank_nullity(m in matrix()) {
        let ker = kernel_basis(&RationalField, &m);
        prop_assert_eq!(rank(&RationalField, &m) + ker.len(), m.cols());
        for v in &ker {
            prop_assert!(m.mul_vec(&RationalField, v).iter().all(|x| *x == rat(0, 1)));
        }
    }

    #[test]
    fn modular_matches_exact(m in matrix()) {
        let r = rank(&RationalField, &m);
        prop_assert!(rank_lower_bound(&m) <= r);
        prop_assert_eq!(kernel_dim(&m), m.cols() - r);
        prop_assert_eq!(kernel_basis_rational(&m), kernel_basis(&RationalField, &m));
    }

    #[test]
    fn kernel_is_deterministic(m in matrix()) {
        prop_assert_eq!(kernel_basis(&RationalField, &m), kernel_basis(&RationalField, &m.clone()));
    }
}

fn fields() -> Vec<NumberField> {
    [&[-2, 0, 1][..], &[1, 0, 1], &[-1, -1, 0, 1], &[-2, 0, 0, 1], &[-1, -1, 0, 0, 0, 1], &[-2, 0, 0, 0, 1]]
        .iter()
        .map(|c| NumberField::new(c.iter().map(|&x| rat(x, 1)).collect()).unwrap())
        .collect()
}

fn element() -> impl Strategy<Value = (usize, Vec<i64>)> {
    (0usize..6, prop::collection::vec(-5i64..6, 5))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn inverse_round_trip((i, c) in element()) {
        let k = &fields()[i];
        let a = k.from_ints(&c[..k.degree()]);
        prop_assume!(!k.is_zero(&a));
        let b = k.inv(&a).unwrap();
        prop_assert_eq!(k.mul(&a, &b), k.one());
    }

    #[test]
    fn subalgebra_degree_divides((i, c) in element(), e in prop::collection::vec(-5i64..6, 5)) {
        let k = &fields()[i];
        let gens = [k.from_ints(&c[..k.degree()]), k.from_ints(&e[..k.degree()])];
        let d = k.subalgebra_degree(&gens);
        prop_assert!(d >= 1 && k.degree() % d == 0);
    }
}
