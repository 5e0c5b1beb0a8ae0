//! Property-based invariants over randomly generated inputs.

use hall_invariants::*;
use proptest::prelude::*;

fn finite_component() -> impl Strategy<Value = f64> {
    prop_oneof![-1e6f64..1e6, (-20i64..=20).prop_map(|v| v as f64),]
}

proptest! {
    /// The associated-tensor maps are mutually inverse bit-for-bit: both are
    /// sign permutations of the stored components.
    #[test]
    fn round_trip_is_exact_in_floating_point(c in prop::array::uniform9(finite_component())) {
        let k = HallTensor::new(c).unwrap();
        let back = HallTensor::from_associated(&k.associated_tensor());
        prop_assert_eq!(back, k);
    }

    #[test]
    fn round_trip_is_exact_in_rational(c in prop::array::uniform9(-100i64..=100)) {
        let k = HallTensor::<Rational>::from_ints(c);
        let back = HallTensor::from_associated(&k.associated_tensor());
        prop_assert_eq!(back, k);
    }

    /// Splitting gives a symmetric and a skew part that add back to the
    /// original: exactly over the rationals, to round-off in floating point.
    #[test]
    fn split_reassembles(entries in prop::array::uniform9(-1e6f64..1e6)) {
        let a = Mat3::from_rows([
            [entries[0], entries[1], entries[2]],
            [entries[3], entries[4], entries[5]],
            [entries[6], entries[7], entries[8]],
        ]);
        let (t, w) = a.sym_skew_split();
        prop_assert_eq!(t.transpose(), t.clone());
        prop_assert_eq!(w.transpose(), w.scale(&-1.0));
        let scale = entries.iter().fold(1.0f64, |m, v| m.max(v.abs()));
        prop_assert!(t.add(&w).max_abs_diff(&a) <= 1e-12 * scale);
    }

    #[test]
    fn split_reassembles_exactly_in_rational(ints in prop::array::uniform9(-1000i64..=1000)) {
        let a = HallTensor::<Rational>::from_ints(ints).associated_tensor();
        let (t, w) = a.sym_skew_split();
        prop_assert_eq!(t.transpose(), t.clone());
        prop_assert_eq!(t.add(&w), a);
    }

    /// Every basis monomial is an even function of the components.
    #[test]
    fn monomials_are_even_functions(
        c in prop::array::uniform9(-5i64..=5),
        degree_choice in 0usize..3,
    ) {
        let degree = [2u32, 4, 6][degree_choice];
        let point = SamplePoint(c);
        for m in monomial_basis(degree).unwrap() {
            prop_assert_eq!(
                evaluate_monomial(&m, point),
                evaluate_monomial(&m, point.negated())
            );
        }
    }

    /// Exact rank is invariant under transposition and unchanged by
    /// appending a linear combination of existing rows.
    #[test]
    fn exact_rank_structure(
        rows in 1usize..5,
        cols in 1usize..5,
        seed in any::<u64>(),
        c1 in -3i64..=3,
        c2 in -3i64..=3,
    ) {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let data: Vec<Vec<i64>> = (0..rows)
            .map(|_| (0..cols).map(|_| rng.gen_range(-9..=9)).collect())
            .collect();
        let m = RationalMatrix::from_ints(&data).unwrap();
        let rank = exact_rank(&m);
        prop_assert!(rank <= rows.min(cols));
        prop_assert_eq!(exact_rank(&m.transpose()), rank);

        let i1 = rng.gen_range(0..rows);
        let i2 = rng.gen_range(0..rows);
        let combo: Vec<Rational> = (0..cols)
            .map(|c| {
                hall_invariants::exact::rational_int(c1) * m.at(i1, c)
                    + hall_invariants::exact::rational_int(c2) * m.at(i2, c)
            })
            .collect();
        let extended = m.with_row(combo).unwrap();
        prop_assert_eq!(exact_rank(&extended), rank);
    }

    /// The constitutive law is bilinear: doubling the current doubles the
    /// field exactly, and swapping scale between the two inputs is neutral.
    #[test]
    fn hall_field_bilinearity(
        c in prop::array::uniform9(-10i64..=10),
        j in prop::array::uniform3(-4.0f64..4.0),
        h in prop::array::uniform3(-4.0f64..4.0),
    ) {
        let k = HallTensor::<f64>::from_ints(c);
        let e = hall_field(&k, j, h);
        let doubled_j = hall_field(&k, [2.0 * j[0], 2.0 * j[1], 2.0 * j[2]], h);
        let doubled_h = hall_field(&k, j, [2.0 * h[0], 2.0 * h[1], 2.0 * h[2]]);
        for i in 0..3 {
            prop_assert_eq!(doubled_j[i], 2.0 * e[i]);
            prop_assert_eq!(doubled_h[i], 2.0 * e[i]);
        }
    }
}
