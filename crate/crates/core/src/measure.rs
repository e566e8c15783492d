//! Height-based probabilities.
//!
//! Two notions of the size of a set: the maximal height of its members
//! ([`MeasureKind::MaxHeight`], normalized by `ht(⊤)`), and the summed
//! height of its members ([`MeasureKind::SumHeight`], normalized by the sum
//! over the whole ground set). All values are exact rationals.

use crate::error::{Error, Result};
use crate::ops::{neg_set, set_meet, Variant};
use crate::poset::{ElemSet, Poset};
use crate::signed::{signed_height, SignedSet};

/// Exact fraction in lowest terms with a positive denominator.
pub type Rational = num_rational::Ratio<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MeasureKind {
    /// `P(X) = max ht(X) / ht(⊤)`.
    MaxHeight,
    /// `P(X) = Σ ht(X) / Σ ht(𝔛)`.
    SumHeight,
}

/// Probability of a signed set, with a flag when it leaves `[0, 1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignedProbability {
    pub value: Rational,
    pub out_of_range: bool,
}

/// Maximal height of a member.
pub fn ht_of_set(p: &Poset, xs: &ElemSet) -> Result<usize> {
    p.check_set(xs)?;
    xs.iter()
        .map(|x| p.ht(x))
        .max()
        .ok_or(Error::EmptyInput("ht_of_set"))
}

/// Sum of member heights; `mu(∅) = 0`.
pub fn mu(p: &Poset, xs: &ElemSet) -> Result<u64> {
    p.check_set(xs)?;
    Ok(xs.iter().map(|x| p.ht(x) as u64).sum())
}

pub fn mu_total(p: &Poset) -> u64 {
    p.elems().map(|x| p.ht(x) as u64).sum()
}

/// Numerator and denominator before reduction, e.g. `(3, 9)`.
pub fn prob_parts(p: &Poset, xs: &ElemSet, kind: MeasureKind) -> Result<(i64, i64)> {
    Ok(match kind {
        MeasureKind::MaxHeight => (ht_of_set(p, xs)? as i64, p.ht(p.top()) as i64),
        MeasureKind::SumHeight => (mu(p, xs)? as i64, mu_total(p) as i64),
    })
}

pub fn prob(p: &Poset, xs: &ElemSet, kind: MeasureKind) -> Result<Rational> {
    let (num, den) = prob_parts(p, xs, kind)?;
    Ok(Rational::new(num, den))
}

pub fn prob_max(p: &Poset, xs: &ElemSet) -> Result<Rational> {
    prob(p, xs, MeasureKind::MaxHeight)
}

pub fn prob_sum(p: &Poset, xs: &ElemSet) -> Result<Rational> {
    prob(p, xs, MeasureKind::SumHeight)
}

/// Signed height over `ht(⊤)`. May be negative or exceed one.
pub fn prob_signed(p: &Poset, s: &SignedSet) -> Result<SignedProbability> {
    let h = signed_height(p, s)?;
    let value = Rational::new(h, p.ht(p.top()) as i64);
    let out_of_range = value < Rational::from_integer(0) || value > Rational::from_integer(1);
    Ok(SignedProbability {
        value,
        out_of_range,
    })
}

fn nonempty(xs: &ElemSet, ys: &ElemSet, what: &'static str) -> Result<()> {
    if xs.is_empty() || ys.is_empty() {
        Err(Error::EmptyInput(what))
    } else {
        Ok(())
    }
}

/// `P(A ∧ B) = P(A)·P(B)`, with the raw set meet.
pub fn indep_product(p: &Poset, a: &ElemSet, b: &ElemSet, kind: MeasureKind) -> Result<bool> {
    nonempty(a, b, "indep_product")?;
    let both = set_meet(p, a, b, Variant::Raw)?;
    Ok(prob(p, &both, kind)? == prob(p, a, kind)? * prob(p, b, kind)?)
}

/// Threshold independence: conditioning on `A` moves the probability of `B`
/// away from `alpha` only if conditioning on `¬A` moves it the other way (or
/// not at all). `alpha` defaults to `P(B)`.
pub fn indep_threshold(
    p: &Poset,
    a: &ElemSet,
    b: &ElemSet,
    alpha: Option<Rational>,
    kind: MeasureKind,
) -> Result<bool> {
    nonempty(a, b, "indep_threshold")?;
    let alpha = match alpha {
        Some(alpha) => alpha,
        None => prob(p, b, kind)?,
    };
    let not_a = neg_set(p, a, Variant::Raw)?;
    let p_a = prob(p, a, kind)?;
    let p_not_a = prob(p, &not_a, kind)?;
    if p_a == Rational::from_integer(0) {
        return Err(Error::DegenerateConditional("P(A)"));
    }
    if p_not_a == Rational::from_integer(0) {
        return Err(Error::DegenerateConditional("P(¬A)"));
    }
    let given_a = prob(p, &set_meet(p, a, b, Variant::Raw)?, kind)? / p_a;
    let given_not_a = prob(p, &set_meet(p, &not_a, b, Variant::Raw)?, kind)? / p_not_a;
    Ok(given_a == alpha
        || (given_a < alpha && given_not_a >= alpha)
        || (given_a > alpha && given_not_a <= alpha))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::build_poset;
    use crate::signed::Sign;

    fn eq1a() -> Poset {
        build_poset::<_, &str>("eq1a", &["a", "b"], &[], None, None).unwrap()
    }

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn basics() {
        let p = eq1a();
        let top = ElemSet::singleton(p.top());
        let bot = ElemSet::singleton(p.bottom());
        assert_eq!(prob_max(&p, &top).unwrap(), r(1, 1));
        assert_eq!(ht_of_set(&p, &bot).unwrap(), 0);
        assert_eq!(mu(&p, &bot).unwrap(), 0);
        assert_eq!(mu(&p, &ElemSet::new()).unwrap(), 0);
        assert_eq!(prob_sum(&p, &p.all()).unwrap(), r(1, 1));
        assert_eq!(
            prob_max(&p, &ElemSet::new()).unwrap_err().kind(),
            "EmptyInput"
        );
        assert_eq!(
            prob_parts(&p, &top, MeasureKind::SumHeight).unwrap(),
            (2, 4)
        );
    }

    #[test]
    fn signed_probabilities_are_flagged_out_of_range() {
        let p = eq1a();
        let s = SignedSet::new(Sign::Sup, ElemSet::singleton(p.top())).unwrap();
        let sp = prob_signed(&p, &s).unwrap();
        assert_eq!(sp.value, r(3, 2));
        assert!(sp.out_of_range);
        let s = SignedSet::new(Sign::Inf, ElemSet::singleton(p.bottom())).unwrap();
        let sp = prob_signed(&p, &s).unwrap();
        assert_eq!(sp.value, r(-1, 2));
        assert!(sp.out_of_range);
        let s = SignedSet::new(Sign::Sup, p.set_of(&["a"]).unwrap()).unwrap();
        assert!(!prob_signed(&p, &s).unwrap().out_of_range);
    }

    #[test]
    fn independence_on_the_diamond() {
        let p = eq1a();
        let a = p.set_of(&["a"]).unwrap();
        let b = p.set_of(&["b"]).unwrap();
        let bot = ElemSet::singleton(p.bottom());
        let top = ElemSet::singleton(p.top());
        assert!(!indep_product(&p, &a, &b, MeasureKind::MaxHeight).unwrap());
        assert!(indep_product(&p, &a, &bot, MeasureKind::MaxHeight).unwrap());
        assert!(indep_threshold(&p, &a, &b, None, MeasureKind::MaxHeight).unwrap());
        assert!(indep_threshold(&p, &a, &a, None, MeasureKind::MaxHeight).unwrap());
        // ¬⊤ = {⊥}: conditioning on it is degenerate.
        assert_eq!(
            indep_threshold(&p, &top, &a, None, MeasureKind::MaxHeight).unwrap_err(),
            Error::DegenerateConditional("P(¬A)")
        );
        assert_eq!(
            indep_threshold(&p, &bot, &a, None, MeasureKind::MaxHeight).unwrap_err(),
            Error::DegenerateConditional("P(A)")
        );
        // First disjunct: ratio equals an explicit alpha.
        assert!(indep_threshold(&p, &a, &b, Some(r(0, 1)), MeasureKind::MaxHeight).unwrap());
    }
}
