//! Generalized meet, join, negation and difference.
//!
//! On an incomplete order `x ∧ y` need not exist, so every operator here
//! returns a set: the raw set of all common lower bounds (upper bounds,
//! orthogonal elements, ...), optionally refined by a [`Variant`] filter.
//! Raw meets and negations always contain bottom; raw joins always contain
//! top.

use crate::error::{Error, Result};
use crate::poset::{Elem, ElemSet, Extreme, HeightExtreme, Poset};

/// How a raw operator result is refined.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    /// The full set of bounds.
    Raw,
    /// Maximal elements for meet, negation and difference; minimal ones for
    /// join.
    Prime,
    /// Elements of maximal height for meet, negation and difference; of
    /// minimal height for join. Lossy: ties in height between incomparable
    /// elements keep only the tallest, so it should be used with caution.
    HtPrime,
}

/// The two rejected set-operator alternatives.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AltKind {
    /// Intersection of the pairwise element results.
    Pairwise,
    /// Bound of all elements of both operands at once.
    UnionBased,
}

#[derive(Clone, Copy)]
enum Side {
    Below,
    Above,
}

fn refine(p: &Poset, raw: ElemSet, v: Variant, side: Side) -> ElemSet {
    match (v, side) {
        (Variant::Raw, _) => raw,
        (Variant::Prime, Side::Below) => p.extremes_of(&raw, Extreme::Max),
        (Variant::Prime, Side::Above) => p.extremes_of(&raw, Extreme::Min),
        (Variant::HtPrime, Side::Below) => p.extremes_by_height_of(&raw, HeightExtreme::MaxHt),
        (Variant::HtPrime, Side::Above) => p.extremes_by_height_of(&raw, HeightExtreme::MinHt),
    }
}

fn nonempty(set: &ElemSet, what: &'static str) -> Result<()> {
    if set.is_empty() {
        Err(Error::EmptyInput(what))
    } else {
        Ok(())
    }
}

fn bounds(p: &Poset, mut xs: impl Iterator<Item = Elem>, side: Side) -> ElemSet {
    let row = |x| match side {
        Side::Below => p.down_set(x),
        Side::Above => p.up_set(x),
    };
    let Some(first) = xs.next() else {
        return p.all();
    };
    let mut acc = row(first);
    for x in xs {
        acc.intersect_with(&row(x));
    }
    acc
}

fn lower_bounds(p: &Poset, xs: impl Iterator<Item = Elem>) -> ElemSet {
    bounds(p, xs, Side::Below)
}

fn upper_bounds(p: &Poset, xs: impl Iterator<Item = Elem>) -> ElemSet {
    bounds(p, xs, Side::Above)
}

fn negation(p: &Poset, xs: &ElemSet) -> ElemSet {
    let mut acc = p.all();
    for x in xs {
        acc.intersect_with(p.orth_row(x));
    }
    acc
}

/// Common lower bounds of all of `xs`.
pub fn meet_all(p: &Poset, xs: &[Elem], v: Variant) -> Result<ElemSet> {
    if xs.is_empty() {
        return Err(Error::EmptyInput("meet_all"));
    }
    xs.iter().try_for_each(|&x| p.check(x))?;
    Ok(refine(
        p,
        lower_bounds(p, xs.iter().copied()),
        v,
        Side::Below,
    ))
}

/// Common upper bounds of all of `xs`.
pub fn join_all(p: &Poset, xs: &[Elem], v: Variant) -> Result<ElemSet> {
    if xs.is_empty() {
        return Err(Error::EmptyInput("join_all"));
    }
    xs.iter().try_for_each(|&x| p.check(x))?;
    Ok(refine(
        p,
        upper_bounds(p, xs.iter().copied()),
        v,
        Side::Above,
    ))
}

/// Elements orthogonal to every member of `xs`. A singleton gives `¬x`.
pub fn neg_set(p: &Poset, xs: &ElemSet, v: Variant) -> Result<ElemSet> {
    p.check_set(xs)?;
    nonempty(xs, "neg_set")?;
    Ok(refine(p, negation(p, xs), v, Side::Below))
}

/// Direct difference: elements below `x` and orthogonal to `y`.
pub fn minus(p: &Poset, x: Elem, y: Elem, v: Variant) -> Result<ElemSet> {
    p.check(x)?;
    p.check(y)?;
    let raw = p.elems().filter(|&a| p.le(a, x) && p.orth(a, y)).collect();
    Ok(refine(p, raw, v, Side::Below))
}

/// Union of the element meets over all pairs, then refined.
pub fn set_meet(p: &Poset, xs: &ElemSet, ys: &ElemSet, v: Variant) -> Result<ElemSet> {
    p.check_set(xs)?;
    p.check_set(ys)?;
    nonempty(xs, "set_meet")?;
    nonempty(ys, "set_meet")?;
    let mut raw = ElemSet::new();
    for x in xs {
        for y in ys {
            raw.union_with(&lower_bounds(p, [x, y].into_iter()));
        }
    }
    Ok(refine(p, raw, v, Side::Below))
}

/// Union of the element joins over all pairs, then refined.
pub fn set_join(p: &Poset, xs: &ElemSet, ys: &ElemSet, v: Variant) -> Result<ElemSet> {
    p.check_set(xs)?;
    p.check_set(ys)?;
    nonempty(xs, "set_join")?;
    nonempty(ys, "set_join")?;
    let mut raw = ElemSet::new();
    for x in xs {
        for y in ys {
            raw.union_with(&upper_bounds(p, [x, y].into_iter()));
        }
    }
    Ok(refine(p, raw, v, Side::Above))
}

/// `X ∖ Y`, read as `X ∧ ¬Y` with the raw negation.
pub fn set_minus(p: &Poset, xs: &ElemSet, ys: &ElemSet, v: Variant) -> Result<ElemSet> {
    p.check_set(ys)?;
    nonempty(ys, "set_minus")?;
    let neg = negation(p, ys);
    set_meet(p, xs, &neg, v)
}

pub fn alt_meet(p: &Poset, xs: &ElemSet, ys: &ElemSet, kind: AltKind) -> Result<ElemSet> {
    p.check_set(xs)?;
    p.check_set(ys)?;
    nonempty(xs, "alt_meet")?;
    nonempty(ys, "alt_meet")?;
    Ok(match kind {
        AltKind::Pairwise => {
            let mut acc = p.all();
            for x in xs {
                for y in ys {
                    acc = acc.intersection(&lower_bounds(p, [x, y].into_iter()));
                }
            }
            acc
        }
        AltKind::UnionBased => lower_bounds(p, xs.union(ys).iter()),
    })
}

pub fn alt_join(p: &Poset, xs: &ElemSet, ys: &ElemSet, kind: AltKind) -> Result<ElemSet> {
    p.check_set(xs)?;
    p.check_set(ys)?;
    nonempty(xs, "alt_join")?;
    nonempty(ys, "alt_join")?;
    Ok(match kind {
        AltKind::Pairwise => {
            let mut acc = p.all();
            for x in xs {
                for y in ys {
                    acc = acc.intersection(&upper_bounds(p, [x, y].into_iter()));
                }
            }
            acc
        }
        AltKind::UnionBased => upper_bounds(p, xs.union(ys).iter()),
    })
}

/// Existential negation: elements orthogonal to at least one member.
/// Neither involutive nor antitone.
pub fn alt_neg1(p: &Poset, xs: &ElemSet) -> Result<ElemSet> {
    p.check_set(xs)?;
    nonempty(xs, "alt_neg1")?;
    Ok(p.elems()
        .filter(|&a| xs.iter().any(|x| p.orth(a, x)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::build_poset;

    fn v1() -> Poset {
        build_poset::<_, &str>("v1", &["a", "b"], &[], None, None).unwrap()
    }

    #[test]
    fn empty_inputs_are_errors() {
        let p = v1();
        let e = ElemSet::new();
        let a = p.set_of(&["a"]).unwrap();
        assert_eq!(
            meet_all(&p, &[], Variant::Raw).unwrap_err().kind(),
            "EmptyInput"
        );
        assert_eq!(
            join_all(&p, &[], Variant::Raw).unwrap_err().kind(),
            "EmptyInput"
        );
        assert_eq!(
            neg_set(&p, &e, Variant::Raw).unwrap_err().kind(),
            "EmptyInput"
        );
        assert_eq!(
            set_meet(&p, &a, &e, Variant::Raw).unwrap_err().kind(),
            "EmptyInput"
        );
        assert_eq!(
            set_join(&p, &e, &a, Variant::Raw).unwrap_err().kind(),
            "EmptyInput"
        );
        assert_eq!(
            set_minus(&p, &a, &e, Variant::Raw).unwrap_err().kind(),
            "EmptyInput"
        );
        assert_eq!(
            alt_meet(&p, &a, &e, AltKind::Pairwise).unwrap_err().kind(),
            "EmptyInput"
        );
        assert_eq!(
            alt_join(&p, &e, &a, AltKind::UnionBased)
                .unwrap_err()
                .kind(),
            "EmptyInput"
        );
        assert_eq!(alt_neg1(&p, &e).unwrap_err().kind(), "EmptyInput");
    }

    #[test]
    fn single_element_meet_is_down_set() {
        let p = v1();
        let a = p.elem("a").unwrap();
        assert_eq!(p.show(&meet_all(&p, &[a], Variant::Raw).unwrap()), "{⊥,a}");
        assert_eq!(p.show(&join_all(&p, &[a], Variant::Raw).unwrap()), "{a,⊤}");
    }

    #[test]
    fn v1_element_results() {
        let p = v1();
        let (a, b, t) = (p.elem("a").unwrap(), p.elem("b").unwrap(), p.top());
        assert_eq!(
            p.show(&meet_all(&p, &[t, a], Variant::Raw).unwrap()),
            "{⊥,a}"
        );
        assert_eq!(
            p.show(&meet_all(&p, &[t, a], Variant::Prime).unwrap()),
            "{a}"
        );
        assert_eq!(p.show(&meet_all(&p, &[a, b], Variant::Raw).unwrap()), "{⊥}");
        assert_eq!(
            p.show(&join_all(&p, &[p.bottom(), a], Variant::Prime).unwrap()),
            "{a}"
        );
        assert_eq!(p.show(&minus(&p, t, a, Variant::Raw).unwrap()), "{⊥,b}");
        assert_eq!(p.show(&minus(&p, t, a, Variant::Prime).unwrap()), "{b}");
        for x in p.elems() {
            assert_eq!(p.show(&minus(&p, x, x, Variant::Raw).unwrap()), "{⊥}");
        }
    }

    #[test]
    fn unknown_handles_rejected() {
        let p = v1();
        let bogus = Elem::from_index(17);
        assert_eq!(
            minus(&p, bogus, p.top(), Variant::Raw).unwrap_err().kind(),
            "UnknownLabel"
        );
        assert_eq!(
            meet_all(&p, &[bogus], Variant::Raw).unwrap_err().kind(),
            "UnknownLabel"
        );
    }
}
