//! Result sets labeled with the bound they stand in for.
//!
//! `a ∧ b` on an incomplete order may give a set such as `{x, x'}` whose
//! supremum is what was really meant but does not exist. A [`SignedSet`]
//! keeps that intent: `Sup{x,x'}` behaves, in a following meet, join or
//! negation, like an element above both `x` and `x'`; `Inf{x,x'}` like one
//! below both. Signs are one level deep: the operators below return plain
//! [`ElemSet`]s.

use std::fmt;

use crate::error::{Error, Result};
use crate::ops::{join_all, meet_all, neg_set, Variant};
use crate::poset::{Elem, ElemSet, Poset};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Sup,
    Inf,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Sup => "sup",
            Sign::Inf => "inf",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedSet {
    sign: Sign,
    carrier: ElemSet,
}

impl SignedSet {
    pub fn new(sign: Sign, carrier: ElemSet) -> Result<Self> {
        if carrier.is_empty() {
            return Err(Error::EmptyInput("signed set carrier"));
        }
        Ok(SignedSet { sign, carrier })
    }

    pub fn sup(carrier: ElemSet) -> Result<Self> {
        Self::new(Sign::Sup, carrier)
    }

    pub fn inf(carrier: ElemSet) -> Result<Self> {
        Self::new(Sign::Inf, carrier)
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn carrier(&self) -> &ElemSet {
        &self.carrier
    }

    /// Printed form, e.g. `sup{x,x'}`.
    pub fn show(&self, p: &Poset) -> String {
        format!("{}{}", self.sign, p.show(&self.carrier))
    }
}

/// `x ∧ y`, labeled as the supremum of the maximal common lower bounds.
pub fn signed_meet_of(p: &Poset, x: Elem, y: Elem) -> Result<SignedSet> {
    SignedSet::sup(meet_all(p, &[x, y], Variant::Prime)?)
}

/// `x ∨ y`, labeled as the infimum of the minimal common upper bounds.
pub fn signed_join_of(p: &Poset, x: Elem, y: Elem) -> Result<SignedSet> {
    SignedSet::inf(join_all(p, &[x, y], Variant::Prime)?)
}

/// `¬x`, labeled as the supremum of the maximal orthogonal elements.
pub fn signed_neg_of(p: &Poset, x: Elem) -> Result<SignedSet> {
    p.check(x)?;
    SignedSet::sup(neg_set(p, &ElemSet::singleton(x), Variant::Prime)?)
}

// `Sup` acts as an element above every carrier member, so lying below it
// means lying below some member; `Inf` lies below all of them.
fn below_signed(p: &Poset, z: Elem, s: &SignedSet) -> bool {
    match s.sign {
        Sign::Sup => s.carrier.iter().any(|c| p.le(z, c)),
        Sign::Inf => s.carrier.iter().all(|c| p.le(z, c)),
    }
}

fn above_signed(p: &Poset, z: Elem, s: &SignedSet) -> bool {
    match s.sign {
        Sign::Sup => s.carrier.iter().all(|c| p.le(c, z)),
        Sign::Inf => s.carrier.iter().any(|c| p.le(c, z)),
    }
}

fn check_signed(p: &Poset, s: &SignedSet) -> Result<()> {
    p.check_set(&s.carrier)
}

/// `y ∧ S`: elements below `y` and below the signed value.
pub fn signed_meet(p: &Poset, y: Elem, s: &SignedSet) -> Result<ElemSet> {
    p.check(y)?;
    check_signed(p, s)?;
    Ok(p.elems()
        .filter(|&z| p.le(z, y) && below_signed(p, z, s))
        .collect())
}

/// `y ∨ S`: elements above `y` and above the signed value.
pub fn signed_join(p: &Poset, y: Elem, s: &SignedSet) -> Result<ElemSet> {
    p.check(y)?;
    check_signed(p, s)?;
    Ok(p.elems()
        .filter(|&z| p.le(y, z) && above_signed(p, z, s))
        .collect())
}

/// `¬S`: orthogonal to every carrier member for `Sup`, to some for `Inf`.
pub fn signed_neg(p: &Poset, s: &SignedSet) -> Result<ElemSet> {
    check_signed(p, s)?;
    Ok(p.elems()
        .filter(|&a| match s.sign {
            Sign::Sup => s.carrier.iter().all(|c| p.orth(a, c)),
            Sign::Inf => s.carrier.iter().any(|c| p.orth(a, c)),
        })
        .collect())
}

/// One above the tallest carrier member for `Sup`, one below the shortest
/// for `Inf`. Not clamped: `Inf{⊥}` gives -1 and `Sup{⊤}` gives `ht(⊤)+1`.
pub fn signed_height(p: &Poset, s: &SignedSet) -> Result<i64> {
    check_signed(p, s)?;
    let heights = s.carrier.iter().map(|c| p.ht(c) as i64);
    Ok(match s.sign {
        Sign::Sup => heights.max().map_or(0, |h| h + 1),
        Sign::Inf => heights.min().map_or(0, |h| h - 1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::build_poset;

    #[test]
    fn empty_carrier_rejected() {
        assert_eq!(
            SignedSet::sup(ElemSet::new()).unwrap_err(),
            Error::EmptyInput("signed set carrier")
        );
    }

    #[test]
    fn v1_signed_results() {
        let p = build_poset::<_, &str>("v1", &["a", "b"], &[], None, None).unwrap();
        let (a, b) = (p.elem("a").unwrap(), p.elem("b").unwrap());
        assert_eq!(signed_meet_of(&p, a, b).unwrap().show(&p), "sup{⊥}");
        assert_eq!(signed_join_of(&p, a, b).unwrap().show(&p), "inf{⊤}");
        assert_eq!(signed_neg_of(&p, a).unwrap().show(&p), "sup{b}");
        assert_eq!(signed_neg_of(&p, p.top()).unwrap().show(&p), "sup{⊥}");
    }

    #[test]
    fn unclamped_heights() {
        let p = build_poset::<_, &str>("v1", &["a", "b"], &[], None, None).unwrap();
        let inf_bot = SignedSet::inf(ElemSet::singleton(p.bottom())).unwrap();
        assert_eq!(signed_height(&p, &inf_bot).unwrap(), -1);
        let sup_top = SignedSet::sup(ElemSet::singleton(p.top())).unwrap();
        assert_eq!(signed_height(&p, &sup_top).unwrap(), 3);
        let sup_a = SignedSet::sup(p.set_of(&["a"]).unwrap()).unwrap();
        assert_eq!(signed_height(&p, &sup_a).unwrap(), 2);
    }

    #[test]
    fn chain_join_is_larger_element() {
        let p = build_poset("c", &["a", "b"], &[("a", "b")], None, None).unwrap();
        let (a, b) = (p.elem("a").unwrap(), p.elem("b").unwrap());
        assert_eq!(signed_join_of(&p, a, b).unwrap().show(&p), "inf{b}");
        assert_eq!(signed_meet_of(&p, a, b).unwrap().show(&p), "sup{a}");
    }
}
