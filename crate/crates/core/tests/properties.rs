use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};

use indset::bijection::{independent_selections, to_sequence, valid_sequences};
use indset::genfunc::{gf_from_transfer, lucas, paper_gf, p_gf};
use indset::graphs::{
    acceptance, build_graph, compatible, degree_profile, level_vectors, EdgeInterpretation, ExplicitGraph,
    Family, FamilySpec, LevelVector,
};
use indset::oracle::{count_by_branching, count_by_enumeration};
use indset::transfer::{count, count_series};
use indset::{IntPolynomial, RationalGF};

fn spec(f: Family, ell: usize, n: usize) -> FamilySpec {
    FamilySpec::new(f, ell, n).unwrap()
}

/// Counts chains of level vectors directly, without the transfer matrix.
fn chains(family: Family, ell: usize, n: usize) -> u64 {
    let vs = level_vectors(family, ell).unwrap();
    let acc = acceptance(family, ell).unwrap().entries;
    fn go(vs: &[LevelVector], acc: &[bool], prev: Option<usize>, left: usize) -> u64 {
        if left == 0 {
            return prev.map_or(1, |p| u64::from(acc[p]));
        }
        (0..vs.len())
            .filter(|&i| prev.is_none_or(|p| compatible(&vs[p], &vs[i]).unwrap()))
            .map(|i| go(vs, acc, Some(i), left - 1))
            .sum()
    }
    go(&vs, &acc, None, n)
}

#[test]
fn transfer_counts_match_chain_enumeration() {
    for family in Family::ALL {
        for ell in 3..=7 {
            if level_vectors(family, ell).unwrap().len() > 8 {
                continue;
            }
            for n in 0..=5 {
                assert_eq!(
                    count(&spec(family, ell, n)).unwrap(),
                    BigUint::from(chains(family, ell, n)),
                    "{family} ell={ell} n={n}"
                );
            }
        }
    }
}

#[test]
fn collections_have_expected_sizes() {
    for ell in 3..=16 {
        assert_eq!(
            BigUint::from(level_vectors(Family::R, ell).unwrap().len()),
            lucas(ell),
            "ell = {ell}"
        );
        assert_eq!(level_vectors(Family::G, ell).unwrap().len(), 1 << ell);
        assert_eq!(level_vectors(Family::K, ell).unwrap().len(), 1 << ell);
        assert_eq!(level_vectors(Family::P, ell).unwrap().len(), ell + 1);
        for f in Family::ALL {
            assert!(level_vectors(f, ell).unwrap()[0].is_zero());
        }
    }
}

#[test]
fn single_level_counts() {
    for ell in 3..=10 {
        let one = |f| count(&spec(f, ell, 1)).unwrap();
        assert_eq!(one(Family::G), lucas(ell));
        assert_eq!(one(Family::R), lucas(ell));
        assert_eq!(one(Family::K), BigUint::from(ell + 1));
        assert_eq!(one(Family::P), BigUint::from(ell + 1));
    }
}

#[test]
fn counts_increase_with_depth() {
    for family in Family::ALL {
        for ell in 3..=6 {
            let s = count_series(family, ell, 12).unwrap();
            assert!(s.windows(2).all(|w| w[1] > w[0]), "{family} ell={ell}");
        }
    }
}

#[test]
fn series_prefix_property() {
    for family in Family::ALL {
        let long = count_series(family, 4, 15).unwrap();
        for m in 0..15 {
            assert_eq!(count_series(family, 4, m).unwrap(), long[..=m]);
        }
    }
}

#[test]
fn small_cycle_identities() {
    assert_eq!(count_series(Family::K, 3, 20).unwrap(), count_series(Family::G, 3, 20).unwrap());
    assert_eq!(count_series(Family::P, 3, 20).unwrap(), count_series(Family::R, 3, 20).unwrap());
    for n in 0..=6 {
        assert_eq!(
            build_graph(&spec(Family::K, 3, n), EdgeInterpretation::AlgorithmConsistent).unwrap(),
            build_graph(&spec(Family::G, 3, n), EdgeInterpretation::Literal).unwrap()
        );
    }
}

#[test]
fn graph_shapes() {
    for ell in 3..=8 {
        for n in 1..=5 {
            let g = build_graph(&spec(Family::G, ell, n), EdgeInterpretation::Literal).unwrap();
            assert_eq!(g.vertex_count(), ell * n);
            assert_eq!(g.edge_count(), ell + 2 * ell * (n - 1));
            let expected = if n == 1 {
                BTreeMap::from([(2, ell)])
            } else {
                BTreeMap::from([(2, ell), (4, ell * (n - 1))])
            };
            assert_eq!(degree_profile(&g), expected);

            if n >= 2 {
                let r = build_graph(&spec(Family::R, ell, n), EdgeInterpretation::Literal).unwrap();
                assert_eq!(degree_profile(&r), BTreeMap::from([(4, ell * n)]));
                let p = build_graph(&spec(Family::P, ell, n), EdgeInterpretation::Literal).unwrap();
                assert_eq!(degree_profile(&p), BTreeMap::from([(ell + 1, ell * n)]));
            }
        }
    }
}

fn random_graph(rng: &mut impl Rng, v: usize) -> ExplicitGraph {
    let mut g = ExplicitGraph::with_vertices(v);
    let density: f64 = rng.gen_range(0.05..0.6);
    for a in 0..v {
        for b in a + 1..v {
            if rng.gen_bool(density) {
                g.add_edge(a, b);
            }
        }
    }
    g
}

#[test]
fn counting_paths_agree_on_random_graphs() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(0x1d5e7);
    for _ in 0..200 {
        let v = rng.gen_range(0..=20);
        let g = random_graph(&mut rng, v);
        assert_eq!(count_by_enumeration(&g).unwrap(), count_by_branching(&g).unwrap());
    }
}

#[test]
fn every_gf_has_unit_constant_and_integer_series() {
    for family in Family::ALL {
        for ell in 3..=6 {
            for gf in [gf_from_transfer(family, ell).unwrap(), paper_gf(family, ell).unwrap()] {
                assert_eq!(gf.den().coeff(0), BigInt::from(1));
                let series = gf.series(39);
                let expected: Vec<BigInt> = count_series(family, ell, 39)
                    .unwrap()
                    .into_iter()
                    .map(BigInt::from)
                    .collect();
                assert_eq!(series, expected, "{family} ell={ell}");
            }
        }
    }
}

#[test]
fn p_gf_matches_counts() {
    for ell in 3..=12 {
        let expected: Vec<BigInt> = count_series(Family::P, ell, 20)
            .unwrap()
            .into_iter()
            .map(BigInt::from)
            .collect();
        assert_eq!(p_gf(ell).unwrap().series(20), expected);
    }
}

#[test]
fn bijection_image_is_exactly_the_valid_sequences() {
    for n in 1..=5 {
        let mut images: Vec<_> = independent_selections(n)
            .unwrap()
            .iter()
            .map(|s| to_sequence(s).unwrap())
            .collect();
        let total = images.len();
        images.sort();
        images.dedup();
        assert_eq!(images.len(), total, "to_sequence not injective at n = {n}");
        assert_eq!(images, valid_sequences(n).unwrap());
    }
}

fn small_poly() -> impl Strategy<Value = IntPolynomial> {
    prop::collection::vec(-50i64..50, 0..7).prop_map(|c| IntPolynomial::from_i64s(&c))
}

proptest! {
    #[test]
    fn zero_vector_is_compatible_with_everything(ell in 3usize..12, mask in any::<u32>()) {
        let v = LevelVector::from_mask(mask & ((1 << ell) - 1), ell);
        let zero = LevelVector::zero(ell);
        prop_assert!(compatible(&zero, &v).unwrap());
        prop_assert!(compatible(&v, &zero).unwrap());
    }

    #[test]
    fn polynomial_text_round_trip(p in small_poly()) {
        prop_assert_eq!(p.to_string().parse::<IntPolynomial>().unwrap(), p);
    }

    #[test]
    fn canonical_form_is_invariant_under_common_factors(
        num in small_poly(),
        factor in small_poly(),
        tail in prop::collection::vec(-9i64..9, 0..4),
    ) {
        prop_assume!(!factor.is_zero() && factor.coeff(0) != BigInt::from(0));
        let mut den = vec![1i64];
        den.extend(tail);
        let den = IntPolynomial::from_i64s(&den);
        let plain = RationalGF::new(num.clone(), den.clone()).unwrap();
        let scaled = RationalGF::new(&num * &factor, &den * &factor);
        // a common factor may leave a non-integral normalization; when it
        // does not, the canonical form must not change
        if let Ok(scaled) = scaled {
            prop_assert_eq!(&scaled, &plain);
        }
        prop_assert_eq!(plain.den().coeff(0), BigInt::from(1));
    }

    #[test]
    fn gf_sum_expands_to_series_sum(a in small_poly(), b in small_poly()) {
        let den_a = IntPolynomial::from_i64s(&[1, -1, -1]);
        let den_b = IntPolynomial::from_i64s(&[1, 2]);
        let fa = RationalGF::new(a, den_a).unwrap();
        let fb = RationalGF::new(b, den_b).unwrap();
        let sum = &fa + &fb;
        let expected: Vec<BigInt> = fa.series(15).iter().zip(fb.series(15)).map(|(x, y)| x + y).collect();
        prop_assert_eq!(sum.series(15), expected);
    }
}
