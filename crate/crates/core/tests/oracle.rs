use poset_bool::oracle::{
    differential_check, differential_check_with, lattice_oracle_check, main_eval, naive_eval,
    prime_to_raw_fault, Answer, Query,
};
use poset_bool::{paper_fixture, ElemSet, FixtureName, Rational, Sign, SignedSet, Variant};

#[test]
fn signed_queries_agree_on_the_two_sided_example() {
    let p = paper_fixture(FixtureName::Supinf).unwrap();
    let xs = p.set_of(&["x", "x'"]).unwrap();
    let mut queries = Vec::new();
    for y in p.elems() {
        for sign in [Sign::Sup, Sign::Inf] {
            let s = SignedSet::new(sign, xs.clone()).unwrap();
            queries.push(Query::SignedMeet(y, s.clone()));
            queries.push(Query::SignedJoin(y, s.clone()));
            queries.push(Query::SignedNeg(s.clone()));
            queries.push(Query::SignedHeight(s));
        }
        for z in p.elems() {
            queries.push(Query::SignedMeetOf(y, z));
            queries.push(Query::SignedJoinOf(y, z));
        }
    }
    for q in &queries {
        assert_eq!(main_eval(&p, q), naive_eval(&p, q), "{}", q.show(&p));
    }
}

#[test]
fn sum_measure_agrees_on_two_chains() {
    let p = paper_fixture(FixtureName::Pprime).unwrap();
    let q = Query::ProbSum(p.set_of(&["a'"]).unwrap());
    assert_eq!(naive_eval(&p, &q), Ok(Answer::Ratio(Rational::new(2, 9))));
    assert_eq!(main_eval(&p, &q), naive_eval(&p, &q));
}

#[test]
fn three_atom_powerset_covers_every_pair() {
    let r = lattice_oracle_check(&["a", "b", "c"]).unwrap();
    assert_eq!(r.cases, 64);
    assert!(r.passed());
    assert_eq!(
        lattice_oracle_check(&["a", "b", "c", "d", "e"])
            .unwrap_err()
            .kind(),
        "TooManyAtoms"
    );
}

#[test]
fn every_fixture_passes_the_differential_check() {
    for f in FixtureName::ALL {
        let p = paper_fixture(f).unwrap();
        let r = differential_check(&p, 11, 200);
        assert!(r.passed(), "{f}: {:?}", r.mismatches.first());
    }
}

#[test]
fn injected_fault_is_caught() {
    let p = paper_fixture(FixtureName::Htv).unwrap();
    let r = differential_check_with(&p, 3, 300, prime_to_raw_fault);
    assert!(!r.passed());
    let q = Query::NegSet(ElemSet::singleton(p.elem("c").unwrap()), Variant::Prime);
    assert_ne!(prime_to_raw_fault(&p, &q), naive_eval(&p, &q));
}
