use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use transmission::bntheory::{
    gamma_splitting, inv_bound_from_pi, is_bigrassmannian, recompose, rho_pi_decompose,
    splitting_type_of,
};
use transmission::corpus::{random_perm, splitting_types};
use transmission::curves::{
    chain_tau, wtau_points_bruteforce, wtau_points_via_words, ChainSpec, Class,
};
use transmission::demazure::{
    bruhat_lower_set, compose_all, demazure, is_length_additive, is_reduced_pair, is_reduced_tuple,
    perm_from_slipface, SlipfaceTable,
};
use transmission::oracle::pointwise_bruhat_leq;
use transmission::words::{
    evaluate_word, hecke_word_count, reduced_word_count, reduced_words, EvalMode,
};
use transmission::Perm;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        failure_persistence: None,
        ..ProptestConfig::with_cases(cases)
    }
}

fn perms(count: usize, extent: i64) -> impl Strategy<Value = Vec<Perm>> {
    (prop::sample::select(vec![0i64, 2, 3]), any::<u64>()).prop_map(move |(k, seed)| {
        let mut rng = StdRng::seed_from_u64(seed);
        (0..count)
            .map(|_| random_perm(&mut rng, k, extent))
            .collect()
    })
}

fn perm() -> impl Strategy<Value = Perm> {
    perms(1, 6).prop_map(|mut v| v.remove(0))
}

/// A permutation together with a random element of its Bruhat lower set.
fn comparable_pair() -> impl Strategy<Value = (Perm, Perm)> {
    (perms(1, 2), any::<prop::sample::Index>()).prop_map(|(v, idx)| {
        let upper = v[0].clone();
        let lower: Vec<Perm> = bruhat_lower_set(&upper, 1_000_000)
            .unwrap()
            .into_iter()
            .collect();
        (idx.get(&lower).clone(), upper)
    })
}

proptest! {
    #![proptest_config(config(200))]

    #[test]
    fn apply_inverts(p in perm()) {
        for n in -20..20 {
            prop_assert_eq!(p.apply_inverse(p.apply(n)), n);
            prop_assert_eq!(p.inverse().apply(n), p.apply_inverse(n));
        }
    }

    #[test]
    fn shift_counts_agree(p in perm()) {
        prop_assert_eq!(p.counted_shift(), p.shift());
    }

    #[test]
    fn slipface_asymptotics(p in perm()) {
        let m = p.displacement().max(1);
        let chi = p.shift();
        let (lo, hi) = p.span();
        for b in lo - 3 * m..=hi + 3 * m {
            for a in b - 4 * m..=b + 4 * m {
                if a - b <= -2 * m {
                    prop_assert_eq!(p.slipface(a, b), 0);
                }
                if a - b >= 2 * m {
                    prop_assert_eq!(p.slipface(a, b) as i64, chi + a - b);
                }
            }
        }
    }

    #[test]
    fn slipface_submodular(p in perm()) {
        for a in -8..8 {
            for b in -8..8 {
                let d = p.slipface(a + 1, b) as i64 - p.slipface(a, b) as i64
                    - p.slipface(a + 1, b + 1) as i64 + p.slipface(a, b + 1) as i64;
                prop_assert!(d >= 0, "({}, {})", a, b);
            }
        }
    }

    #[test]
    fn duality(p in perm()) {
        let q = p.inverse();
        for a in -8..=8 {
            for b in -8..=8 {
                prop_assert_eq!(p.slipface(a, b) as i64 - q.slipface(b, a) as i64, p.shift() + a - b);
            }
        }
    }

    #[test]
    fn bruhat_commutes_with_inverse(pair in comparable_pair(), other in perms(1, 2)) {
        let (a, b) = pair;
        prop_assert!(a.bruhat_leq(&b).unwrap());
        prop_assert!(a.inverse().bruhat_leq(&b.inverse()).unwrap());
        let c = &other[0];
        if c.period() == b.period() && c.shift() == b.shift() {
            prop_assert_eq!(c.bruhat_leq(&b).unwrap(), c.inverse().bruhat_leq(&b.inverse()).unwrap());
        }
    }

    #[test]
    fn essential_set_decides_bruhat(v in perms(2, 2), pair in comparable_pair()) {
        let candidates = [(v[0].clone(), v[1].clone()), pair.clone(), (pair.1.clone(), pair.0.clone())];
        for (a, b) in candidates {
            if a.shift() != b.shift() {
                continue;
            }
            let (lo1, hi1) = a.span();
            let (lo2, hi2) = b.span();
            let pad = 2 * (a.margin() + b.margin()) + 2;
            let range = (lo1.min(lo2) - pad, hi1.max(hi2) + pad);
            prop_assert_eq!(a.bruhat_leq(&b).unwrap(), pointwise_bruhat_leq(&a, &b, range, range).unwrap());
        }
    }

    #[test]
    fn length_classification(p in perm()) {
        let inv = p.inv_count();
        prop_assert_eq!(inv == 0, p.is_iota());
        let rest = Perm::iota(-p.shift(), p.period()).unwrap().compose(&p).unwrap();
        prop_assert_eq!(inv == 1, rest.sigma_index().is_some());
    }

    #[test]
    fn recovery_round_trip(p in perm()) {
        let t = SlipfaceTable::around(&p);
        prop_assert_eq!(perm_from_slipface(&t, p.period()).unwrap(), p);
    }

    #[test]
    fn text_and_json_round_trip(p in perm()) {
        let text = p.to_string();
        prop_assert_eq!(text.parse::<Perm>().unwrap(), p.clone());
        let json = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<Perm>(&json).unwrap(), p);
    }

    #[test]
    fn rho_pi_round_trip(v in perms(1, 6)) {
        let p = &v[0];
        if p.period() >= 2 {
            prop_assert_eq!(&recompose(&rho_pi_decompose(p).unwrap()).unwrap(), p);
            let bound = inv_bound_from_pi(p).unwrap();
            prop_assert!(p.inv_count() >= bound);
            prop_assert_eq!(p.inv_count() == bound, is_bigrassmannian(p).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(config(100))]

    #[test]
    fn demazure_shift_homomorphism(v in perms(2, 6)) {
        let want = v[0].shift() + v[1].shift();
        prop_assert_eq!(v[0].compose(&v[1]).unwrap().shift(), want);
        prop_assert_eq!(demazure(&v[0], &v[1]).unwrap().shift(), want);
    }

    #[test]
    fn demazure_associative(v in perms(3, 4)) {
        let left = demazure(&demazure(&v[0], &v[1]).unwrap(), &v[2]).unwrap();
        let right = demazure(&v[0], &demazure(&v[1], &v[2]).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn demazure_monotone(a in comparable_pair(), b in comparable_pair()) {
        let (a1, a) = a;
        let (b1, b) = b;
        if a.period() == b.period() {
            let low = demazure(&a1, &b1).unwrap();
            let high = demazure(&a, &b).unwrap();
            prop_assert!(low.bruhat_leq(&high).unwrap());
        }
    }

    #[test]
    fn demazure_dominates_products(a in comparable_pair(), b in comparable_pair()) {
        let (a1, a) = a;
        let (b1, b) = b;
        if a.period() == b.period() {
            let product = a1.compose(&b1).unwrap();
            prop_assert!(product.bruhat_leq(&demazure(&a, &b).unwrap()).unwrap());
        }
    }

    #[test]
    fn reduced_pair_theorem(v in perms(2, 3)) {
        let (a, b) = (&v[0], &v[1]);
        let same = demazure(a, b).unwrap() == a.compose(b).unwrap();
        prop_assert_eq!(is_reduced_pair(a, b).unwrap(), same);
    }

    #[test]
    fn reducedness_is_length_additivity(v in perms(3, 2)) {
        prop_assert_eq!(is_reduced_tuple(&v).unwrap(), is_length_additive(&v).unwrap());
        let product = compose_all(&v).unwrap();
        if is_reduced_tuple(&v).unwrap() {
            let lengths: usize = v.iter().map(Perm::inv_count).sum();
            prop_assert_eq!(lengths, product.inv_count());
        }
    }

    #[test]
    fn reduced_words_evaluate(v in perms(1, 2)) {
        let p = Perm::iota(-v[0].shift(), v[0].period()).unwrap().compose(&v[0]).unwrap();
        let mut n = 0usize;
        for w in reduced_words(&p).unwrap().take(2000) {
            prop_assert_eq!(w.len(), p.inv_count());
            prop_assert_eq!(&evaluate_word(&w, EvalMode::Ordinary).unwrap(), &p);
            prop_assert_eq!(&evaluate_word(&w, EvalMode::Demazure).unwrap(), &p);
            n += 1;
        }
        let count = reduced_word_count(&p).unwrap();
        if n < 2000 {
            prop_assert_eq!(count.clone(), n.into());
        }
        prop_assert_eq!(hecke_word_count(&p, p.inv_count()).unwrap(), count);
    }
}

#[test]
fn splitting_round_trips() {
    for k in 2..=4 {
        for e in splitting_types(k, -3, 1) {
            let g = gamma_splitting(&e).unwrap();
            assert_eq!(splitting_type_of(&g).unwrap(), e);
            assert_eq!(inv_bound_from_pi(&g).unwrap(), g.inv_count());
            let total: i64 = e.entries().iter().map(|x| x + 1).sum();
            assert_eq!(g.counted_shift(), total - 1);
        }
    }
}

proptest! {
    #![proptest_config(config(60))]

    #[test]
    fn chain_laws(
        k in prop::sample::select(vec![0i64, 2, 3]),
        parts in prop::collection::vec((-2i64..=3, prop::option::of(-3i64..=3)), 1..=3),
    ) {
        let degrees: Vec<i64> = parts.iter().map(|p| p.0).collect();
        let cls: Vec<Class> = parts.iter().map(|p| p.1.map_or(Class::Generic, Class::Torsion)).collect();
        let chain = ChainSpec::from_parts(k, &degrees, &cls).unwrap();
        let tau = chain_tau(&chain).unwrap();
        let expected: i64 = degrees.iter().map(|d| d - 1).sum();
        prop_assert_eq!(tau.shift(), expected);
        prop_assert!(tau.inv_count() <= chain.len() - chain.dimension());
        let generic = ChainSpec::from_parts(k, &degrees, &vec![Class::Generic; degrees.len()]).unwrap();
        prop_assert_eq!(chain_tau(&generic).unwrap(), Perm::iota(expected, k).unwrap());
    }

    #[test]
    fn long_targets_have_no_points(k in 2i64..=3, len in 1usize..=2, seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let p = random_perm(&mut rng, k, 3);
        let tau = Perm::iota(-p.shift(), k).unwrap().compose(&p).unwrap();
        let degrees = vec![1; len];
        if tau.inv_count() > len {
            prop_assert!(wtau_points_bruteforce(k, &degrees, &tau).unwrap().is_empty());
            prop_assert!(wtau_points_via_words(k, &degrees, &tau).unwrap().is_empty());
        }
    }
}
