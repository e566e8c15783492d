use poset_bool::measure::{prob, prob_signed};
use poset_bool::ops::{meet_all, neg_set, set_meet};
use poset_bool::oracle::{differential_check, law_check};
use poset_bool::signed::{signed_height, signed_join, signed_meet, signed_meet_of};
use poset_bool::{
    powerset_lattice, random_poset, ElemSet, MeasureKind, Poset, Rational, SignedSet, Variant,
};
use proptest::prelude::*;

fn poset() -> impl Strategy<Value = Poset> {
    (2usize..9, 0i64..=4, any::<u64>())
        .prop_map(|(n, d, seed)| random_poset(n, Rational::new(d, 4), seed).unwrap())
}

fn subset(p: &Poset, mask: u64) -> ElemSet {
    p.elems()
        .filter(|e| mask >> (e.index() % 64) & 1 == 1)
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn law_suite_holds(p in poset()) {
        let r = law_check(&p);
        prop_assert!(r.passed(), "{:?}", r.violations.first());
    }

    #[test]
    fn naive_oracle_agrees(p in poset(), seed in any::<u64>()) {
        let r = differential_check(&p, seed, 60);
        prop_assert!(r.passed(), "{:?}", r.mismatches.first());
    }

    #[test]
    fn heights_increase_along_the_order(p in poset()) {
        prop_assert_eq!(p.height(p.bottom()).unwrap(), 0);
        for x in p.elems() {
            for y in p.elems() {
                if p.lt(x, y) {
                    prop_assert!(p.height(x).unwrap() < p.height(y).unwrap());
                }
            }
        }
    }

    #[test]
    fn primed_results_are_antichains_inside_raw(p in poset(), mask in any::<u64>()) {
        let xs = subset(&p, mask);
        prop_assume!(!xs.is_empty());
        let raw = neg_set(&p, &xs, Variant::Raw).unwrap();
        let prime = neg_set(&p, &xs, Variant::Prime).unwrap();
        prop_assert!(prime.is_subset(&raw));
        for a in &prime {
            for b in &prime {
                prop_assert!(!p.lt(a, b));
            }
        }
        let ht = neg_set(&p, &xs, Variant::HtPrime).unwrap();
        prop_assert!(ht.is_subset(&prime));
    }

    #[test]
    fn probabilities_stay_in_unit_interval(p in poset(), mask in any::<u64>()) {
        let xs = subset(&p, mask);
        prop_assume!(!xs.is_empty());
        for kind in [MeasureKind::MaxHeight, MeasureKind::SumHeight] {
            let v = prob(&p, &xs, kind).unwrap();
            prop_assert!(v >= Rational::from_integer(0) && v <= Rational::from_integer(1));
        }
    }

    #[test]
    fn singleton_signed_sets_act_like_elements(p in poset(), i in any::<usize>(), j in any::<usize>()) {
        let elems: Vec<_> = p.elems().collect();
        let (x, y) = (elems[i % elems.len()], elems[j % elems.len()]);
        let sx = ElemSet::singleton(x);
        let sy = ElemSet::singleton(y);
        for s in [SignedSet::sup(sx.clone()).unwrap(), SignedSet::inf(sx.clone()).unwrap()] {
            prop_assert_eq!(
                signed_meet(&p, y, &s).unwrap(),
                set_meet(&p, &sy, &sx, Variant::Raw).unwrap()
            );
            prop_assert!(signed_join(&p, y, &s).unwrap().contains(p.top()));
        }
    }

    #[test]
    fn signed_meet_sits_one_above_its_carrier(p in poset(), i in any::<usize>(), j in any::<usize>()) {
        let elems: Vec<_> = p.elems().collect();
        let (x, y) = (elems[i % elems.len()], elems[j % elems.len()]);
        let s = signed_meet_of(&p, x, y).unwrap();
        let carrier = meet_all(&p, &[x, y], Variant::Prime).unwrap();
        prop_assert_eq!(s.carrier(), &carrier);
        let tallest = carrier.iter().map(|c| p.height(c).unwrap()).max().unwrap() as i64;
        prop_assert_eq!(signed_height(&p, &s).unwrap(), tallest + 1);
        let top = p.height(p.top()).unwrap() as i64;
        let value = prob_signed(&p, &s).unwrap().value;
        prop_assert_eq!(value, Rational::new(tallest + 1, top));
    }

    #[test]
    fn powerset_height_counts_atoms(k in 1usize..=5) {
        let atoms: Vec<String> = (0..k).map(|i| format!("a{i}")).collect();
        let p = powerset_lattice(&atoms).unwrap();
        prop_assert_eq!(p.len(), 1 << k);
        prop_assert_eq!(p.height(p.top()).unwrap(), k);
        for x in p.elems() {
            prop_assert_eq!(p.height(x).unwrap(), if x == p.bottom() { 0 } else { p.label(x).len() / 2 });
        }
    }
}
