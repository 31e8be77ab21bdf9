use std::sync::OnceLock;

use g5census::cli::census::{run_census, CensusConfig, CensusOutcome};
use g5census::cli::{CurveRecord, Stratum};
use g5census::gf2algebra::{factorize, is_irreducible, moebius_action, MoebiusMap, UniPolyF2};
use g5census::grpact::{act, FormSpace, LinearRep, MatGF2};
use g5census::multivar::{groebner, MonomialOrder, MultiPoly};
use g5census::zeta::lpoly_from_counts;
use proptest::prelude::*;

fn invertible(n: usize) -> impl Strategy<Value = MatGF2> {
    prop::collection::vec(0..1u8 << n, n).prop_filter_map("singular", |rows| MatGF2::from_rows(&rows).ok())
}

fn records() -> &'static [CurveRecord] {
    static R: OnceLock<Vec<CurveRecord>> = OnceLock::new();
    R.get_or_init(|| {
        let mut out = Vec::new();
        for s in [Stratum::Hyp, Stratum::Trig] {
            let CensusOutcome::Complete(r) = run_census(&CensusConfig::new(s)).unwrap() else { unreachable!() };
            out.extend(r);
        }
        out
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn quadric_action_composes(a in invertible(5), b in invertible(5), f in 0u32..1 << 15) {
        let space = FormSpace::quadrics();
        let lhs = act(&LinearRep::of(space, &a.mul(&b)), f);
        let rhs = act(&LinearRep::of(space, &b), act(&LinearRep::of(space, &a), f));
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(LinearRep::of(space, &a).then(&LinearRep::of(space, &b)), LinearRep::of(space, &a.mul(&b)));
    }

    #[test]
    fn quintic_action_composes(a in invertible(3), b in invertible(3), f in 0u32..1 << 21) {
        let space = FormSpace::quintics();
        let lhs = act(&LinearRep::of(space, &a.mul(&b)), f);
        let rhs = act(&LinearRep::of(space, &b), act(&LinearRep::of(space, &a), f));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn binary_form_action_composes(i in 0usize..6, j in 0usize..6, n in 1usize..20, bits in any::<u64>()) {
        let all = MoebiusMap::all(n);
        let f = UniPolyF2::from_u64(bits & ((1u64 << (n + 1)) - 1));
        let (a, b) = (all[i], all[j]);
        prop_assert_eq!(
            moebius_action(&a.compose(&b), &f).unwrap(),
            moebius_action(&b, &moebius_action(&a, &f).unwrap()).unwrap()
        );
    }

    #[test]
    fn factorization_multiplies_back(bits in 1u64..) {
        let f = UniPolyF2::from_u64(bits);
        let factors = factorize(&f).unwrap();
        let mut prod = UniPolyF2::one();
        for (g, e) in &factors {
            prop_assert!(is_irreducible(g), "{} is reducible", g.pretty());
            prod = &prod * &g.pow(*e as u64);
        }
        prop_assert_eq!(prod, f);
    }

    #[test]
    fn groebner_ignores_generator_order(
        words in prop::collection::vec(1u32..1 << 10, 1..5),
        rot in 0usize..5,
    ) {
        // quadrics in four variables
        let space = FormSpace::new(4, 2);
        let gens: Vec<MultiPoly> = words.iter().map(|&w| space.to_poly(w)).collect();
        let mut shuffled = gens.clone();
        shuffled.reverse();
        let k = rot % shuffled.len();
        shuffled.rotate_left(k);
        for order in [MonomialOrder::DegRevLex, MonomialOrder::Lex] {
            let mut a = groebner(&gens, order).polys();
            let mut b = groebner(&shuffled, order).polys();
            a.sort_by_key(|p| format!("{p:?}"));
            b.sort_by_key(|p| format!("{p:?}"));
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn records_survive_serialization(i in any::<prop::sample::Index>(), keyed in any::<bool>()) {
        let mut r = i.get(records()).clone();
        if keyed {
            r.key = Some(r.counts.isogeny_key());
        }
        let back: CurveRecord = r.to_string().parse().unwrap();
        prop_assert_eq!(back, r);
    }

    #[test]
    fn lpoly_and_counts_determine_each_other(i in any::<prop::sample::Index>()) {
        let r = i.get(records());
        prop_assert_eq!(r.lpoly.point_counts(), r.counts.clone());
        prop_assert_eq!(lpoly_from_counts(&r.counts).unwrap(), r.lpoly.clone());
        prop_assert!(r.np.is_symmetric());
    }
}
