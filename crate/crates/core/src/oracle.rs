//! Independent brute-force evaluation and self-checks.
//!
//! [`naive_eval`] answers every [`Query`] by scanning the literal
//! set-comprehension definitions over all elements. It never touches the
//! cached closure or heights of a [`Poset`]: reachability is recomputed by
//! depth-first search over the generator edges for each query, and heights
//! by exhaustive chain search. [`differential_check`] compares it with the
//! main evaluation path on seeded random queries.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::builders::{powerset_lattice, subset_label};
use crate::error::{Error, Result};
use crate::measure::{self, MeasureKind, Rational};
use crate::ops::{self, AltKind, Variant};
use crate::poset::{Elem, ElemSet, Extreme, HeightExtreme, OrderRel, Poset, SetOrder};
use crate::signed::{self, Sign, SignedSet};

/// One call of a public operation, with its arguments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Query {
    OrderRel(Elem, Elem),
    Orthogonal(Elem, Elem),
    Extremes(ElemSet, Extreme),
    BelowFilter(ElemSet, Elem),
    SetCompare(ElemSet, ElemSet, SetOrder),
    Height(Elem),
    ExtremesByHeight(ElemSet, HeightExtreme),
    MeetAll(Vec<Elem>, Variant),
    JoinAll(Vec<Elem>, Variant),
    NegSet(ElemSet, Variant),
    Minus(Elem, Elem, Variant),
    SetMeet(ElemSet, ElemSet, Variant),
    SetJoin(ElemSet, ElemSet, Variant),
    SetMinus(ElemSet, ElemSet, Variant),
    AltMeet(ElemSet, ElemSet, AltKind),
    AltJoin(ElemSet, ElemSet, AltKind),
    AltNeg1(ElemSet),
    SignedMeetOf(Elem, Elem),
    SignedJoinOf(Elem, Elem),
    SignedNegOf(Elem),
    SignedMeet(Elem, SignedSet),
    SignedJoin(Elem, SignedSet),
    SignedNeg(SignedSet),
    SignedHeight(SignedSet),
    HtOfSet(ElemSet),
    ProbMax(ElemSet),
    Mu(ElemSet),
    ProbSum(ElemSet),
    ProbSigned(SignedSet),
    IndepProduct(ElemSet, ElemSet, MeasureKind),
    IndepThreshold(ElemSet, ElemSet, Option<Rational>, MeasureKind),
}

/// Number of distinct query tags the generator draws from.
pub const QUERY_TAGS: usize = 31;

/// Value of an answered query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Answer {
    Rel(OrderRel),
    Bool(bool),
    Set(ElemSet),
    Signed(Sign, ElemSet),
    Int(i64),
    Ratio(Rational),
    FlaggedRatio(Rational, bool),
}

/// Either an answer or the kind of error raised.
pub type Outcome = std::result::Result<Answer, &'static str>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub query: Query,
    pub main: Outcome,
    pub oracle: Outcome,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub cases: usize,
    pub mismatches: Vec<Mismatch>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn show_elems(p: &Poset, xs: &[Elem]) -> String {
    let parts: Vec<&str> = xs.iter().map(|&x| p.display_label(x)).collect();
    format!("[{}]", parts.join(","))
}

impl Query {
    /// Human-readable form, e.g. `SetMeet({a},{b,c},Prime)`.
    pub fn show(&self, p: &Poset) -> String {
        let e = |x: &Elem| p.display_label(*x).to_string();
        let s = |xs: &ElemSet| p.show(xs);
        let g = |ss: &SignedSet| ss.show(p);
        match self {
            Query::OrderRel(x, y) => format!("OrderRel({},{})", e(x), e(y)),
            Query::Orthogonal(x, y) => format!("Orthogonal({},{})", e(x), e(y)),
            Query::Extremes(xs, w) => format!("Extremes({},{w:?})", s(xs)),
            Query::BelowFilter(xs, y) => format!("BelowFilter({},{})", s(xs), e(y)),
            Query::SetCompare(xs, ys, m) => format!("SetCompare({},{},{m:?})", s(xs), s(ys)),
            Query::Height(x) => format!("Height({})", e(x)),
            Query::ExtremesByHeight(xs, w) => format!("ExtremesByHeight({},{w:?})", s(xs)),
            Query::MeetAll(xs, v) => format!("MeetAll({},{v:?})", show_elems(p, xs)),
            Query::JoinAll(xs, v) => format!("JoinAll({},{v:?})", show_elems(p, xs)),
            Query::NegSet(xs, v) => format!("NegSet({},{v:?})", s(xs)),
            Query::Minus(x, y, v) => format!("Minus({},{},{v:?})", e(x), e(y)),
            Query::SetMeet(xs, ys, v) => format!("SetMeet({},{},{v:?})", s(xs), s(ys)),
            Query::SetJoin(xs, ys, v) => format!("SetJoin({},{},{v:?})", s(xs), s(ys)),
            Query::SetMinus(xs, ys, v) => format!("SetMinus({},{},{v:?})", s(xs), s(ys)),
            Query::AltMeet(xs, ys, k) => format!("AltMeet({},{},{k:?})", s(xs), s(ys)),
            Query::AltJoin(xs, ys, k) => format!("AltJoin({},{},{k:?})", s(xs), s(ys)),
            Query::AltNeg1(xs) => format!("AltNeg1({})", s(xs)),
            Query::SignedMeetOf(x, y) => format!("SignedMeetOf({},{})", e(x), e(y)),
            Query::SignedJoinOf(x, y) => format!("SignedJoinOf({},{})", e(x), e(y)),
            Query::SignedNegOf(x) => format!("SignedNegOf({})", e(x)),
            Query::SignedMeet(y, ss) => format!("SignedMeet({},{})", e(y), g(ss)),
            Query::SignedJoin(y, ss) => format!("SignedJoin({},{})", e(y), g(ss)),
            Query::SignedNeg(ss) => format!("SignedNeg({})", g(ss)),
            Query::SignedHeight(ss) => format!("SignedHeight({})", g(ss)),
            Query::HtOfSet(xs) => format!("HtOfSet({})", s(xs)),
            Query::ProbMax(xs) => format!("ProbMax({})", s(xs)),
            Query::Mu(xs) => format!("Mu({})", s(xs)),
            Query::ProbSum(xs) => format!("ProbSum({})", s(xs)),
            Query::ProbSigned(ss) => format!("ProbSigned({})", g(ss)),
            Query::IndepProduct(xs, ys, m) => format!("IndepProduct({},{},{m:?})", s(xs), s(ys)),
            Query::IndepThreshold(xs, ys, a, m) => {
                let a = a.map_or("P(B)".to_string(), |a| a.to_string());
                format!("IndepThreshold({},{},{a},{m:?})", s(xs), s(ys))
            }
        }
    }
}

/// Renders an outcome for reports.
pub fn show_outcome(p: &Poset, o: &Outcome) -> String {
    match o {
        Err(kind) => format!("error {kind}"),
        Ok(Answer::Rel(r)) => format!("{r:?}"),
        Ok(Answer::Bool(b)) => b.to_string(),
        Ok(Answer::Set(s)) => p.show(s),
        Ok(Answer::Signed(sign, s)) => format!("{sign}{}", p.show(s)),
        Ok(Answer::Int(i)) => i.to_string(),
        Ok(Answer::Ratio(r)) => r.to_string(),
        Ok(Answer::FlaggedRatio(r, flag)) => format!("{r} (out of range: {flag})"),
    }
}

fn outcome(r: Result<Answer>) -> Outcome {
    r.map_err(|e| e.kind())
}

/// Evaluates a query on the main path.
pub fn main_eval(p: &Poset, q: &Query) -> Outcome {
    use Answer::*;
    let set = |r: Result<ElemSet>| r.map(Set);
    let signed = |r: Result<SignedSet>| r.map(|s| Signed(s.sign(), s.carrier().clone()));
    outcome(match q {
        Query::OrderRel(x, y) => p.order_rel(*x, *y).map(Rel),
        Query::Orthogonal(x, y) => p.orthogonal(*x, *y).map(Bool),
        Query::Extremes(xs, w) => set(p.extremes(xs, *w)),
        Query::BelowFilter(xs, y) => set(p.below_filter(xs, *y)),
        Query::SetCompare(xs, ys, m) => p.set_compare(xs, ys, *m).map(Bool),
        Query::Height(x) => p.height(*x).map(|h| Int(h as i64)),
        Query::ExtremesByHeight(xs, w) => set(p.extremes_by_height(xs, *w)),
        Query::MeetAll(xs, v) => set(ops::meet_all(p, xs, *v)),
        Query::JoinAll(xs, v) => set(ops::join_all(p, xs, *v)),
        Query::NegSet(xs, v) => set(ops::neg_set(p, xs, *v)),
        Query::Minus(x, y, v) => set(ops::minus(p, *x, *y, *v)),
        Query::SetMeet(xs, ys, v) => set(ops::set_meet(p, xs, ys, *v)),
        Query::SetJoin(xs, ys, v) => set(ops::set_join(p, xs, ys, *v)),
        Query::SetMinus(xs, ys, v) => set(ops::set_minus(p, xs, ys, *v)),
        Query::AltMeet(xs, ys, k) => set(ops::alt_meet(p, xs, ys, *k)),
        Query::AltJoin(xs, ys, k) => set(ops::alt_join(p, xs, ys, *k)),
        Query::AltNeg1(xs) => set(ops::alt_neg1(p, xs)),
        Query::SignedMeetOf(x, y) => signed(signed::signed_meet_of(p, *x, *y)),
        Query::SignedJoinOf(x, y) => signed(signed::signed_join_of(p, *x, *y)),
        Query::SignedNegOf(x) => signed(signed::signed_neg_of(p, *x)),
        Query::SignedMeet(y, s) => set(signed::signed_meet(p, *y, s)),
        Query::SignedJoin(y, s) => set(signed::signed_join(p, *y, s)),
        Query::SignedNeg(s) => set(signed::signed_neg(p, s)),
        Query::SignedHeight(s) => signed::signed_height(p, s).map(Int),
        Query::HtOfSet(xs) => measure::ht_of_set(p, xs).map(|h| Int(h as i64)),
        Query::ProbMax(xs) => measure::prob_max(p, xs).map(Ratio),
        Query::Mu(xs) => measure::mu(p, xs).map(|m| Int(m as i64)),
        Query::ProbSum(xs) => measure::prob_sum(p, xs).map(Ratio),
        Query::ProbSigned(s) => {
            measure::prob_signed(p, s).map(|sp| FlaggedRatio(sp.value, sp.out_of_range))
        }
        Query::IndepProduct(a, b, m) => measure::indep_product(p, a, b, *m).map(Bool),
        Query::IndepThreshold(a, b, alpha, m) => {
            measure::indep_threshold(p, a, b, *alpha, *m).map(Bool)
        }
    })
}

/// Brute-force view of a poset rebuilt from its generator edges.
struct Naive {
    n: usize,
    succ: Vec<Vec<usize>>,
    pred: Vec<Vec<usize>>,
    bottom: usize,
    top: usize,
}

impl Naive {
    fn new(p: &Poset) -> Self {
        let n = p.len();
        let mut succ = vec![Vec::new(); n];
        let mut pred = vec![Vec::new(); n];
        for (x, y) in p.generator_edges() {
            succ[x.index()].push(y.index());
            pred[y.index()].push(x.index());
        }
        Naive {
            n,
            succ,
            pred,
            bottom: p.bottom().index(),
            top: p.top().index(),
        }
    }

    fn all(&self) -> impl Iterator<Item = usize> + Clone {
        0..self.n
    }

    /// Nonempty directed path from `x` to `y`.
    fn lt(&self, x: usize, y: usize) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack: Vec<usize> = self.succ[x].clone();
        while let Some(v) = stack.pop() {
            if v == y {
                return true;
            }
            if !seen[v] {
                seen[v] = true;
                stack.extend(&self.succ[v]);
            }
        }
        false
    }

    fn le(&self, x: usize, y: usize) -> bool {
        x == y || self.lt(x, y)
    }

    fn orth(&self, x: usize, y: usize) -> bool {
        self.all()
            .all(|a| !(self.le(a, x) && self.le(a, y)) || a == self.bottom)
    }

    /// Longest chain ending in `x`, by exhaustive backward search.
    fn height(&self, x: usize) -> usize {
        self.pred[x]
            .iter()
            .map(|&w| self.height(w) + 1)
            .max()
            .unwrap_or(0)
    }

    fn min(&self, xs: &[usize]) -> Vec<usize> {
        xs.iter()
            .copied()
            .filter(|&x| !xs.iter().any(|&o| self.lt(o, x)))
            .collect()
    }

    fn max(&self, xs: &[usize]) -> Vec<usize> {
        xs.iter()
            .copied()
            .filter(|&x| !xs.iter().any(|&o| self.lt(x, o)))
            .collect()
    }

    fn maxht(&self, xs: &[usize]) -> Vec<usize> {
        xs.iter()
            .copied()
            .filter(|&x| xs.iter().all(|&o| self.height(x) >= self.height(o)))
            .collect()
    }

    fn minht(&self, xs: &[usize]) -> Vec<usize> {
        xs.iter()
            .copied()
            .filter(|&x| xs.iter().all(|&o| self.height(x) <= self.height(o)))
            .collect()
    }

    fn below(&self, raw: Vec<usize>, v: Variant) -> Vec<usize> {
        match v {
            Variant::Raw => raw,
            Variant::Prime => self.max(&raw),
            Variant::HtPrime => self.maxht(&raw),
        }
    }

    fn above(&self, raw: Vec<usize>, v: Variant) -> Vec<usize> {
        match v {
            Variant::Raw => raw,
            Variant::Prime => self.min(&raw),
            Variant::HtPrime => self.minht(&raw),
        }
    }

    fn meet2(&self, x: usize, y: usize) -> Vec<usize> {
        self.all()
            .filter(|&a| self.le(a, x) && self.le(a, y))
            .collect()
    }

    fn join2(&self, x: usize, y: usize) -> Vec<usize> {
        self.all()
            .filter(|&a| self.le(x, a) && self.le(y, a))
            .collect()
    }

    fn neg(&self, xs: &[usize]) -> Vec<usize> {
        self.all()
            .filter(|&a| xs.iter().all(|&x| self.orth(a, x)))
            .collect()
    }

    fn pairwise_union(
        &self,
        xs: &[usize],
        ys: &[usize],
        f: impl Fn(usize, usize) -> Vec<usize>,
    ) -> Vec<usize> {
        let mut out = Vec::new();
        for &x in xs {
            for &y in ys {
                for a in f(x, y) {
                    if !out.contains(&a) {
                        out.push(a);
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    fn size(&self, xs: &[usize], m: MeasureKind) -> Result<(i64, i64)> {
        match m {
            MeasureKind::MaxHeight => {
                let h = xs
                    .iter()
                    .map(|&x| self.height(x))
                    .max()
                    .ok_or(Error::EmptyInput("ht_of_set"))?;
                Ok((h as i64, self.height(self.top) as i64))
            }
            MeasureKind::SumHeight => {
                let num: usize = xs.iter().map(|&x| self.height(x)).sum();
                let den: usize = self.all().map(|x| self.height(x)).sum();
                Ok((num as i64, den as i64))
            }
        }
    }

    fn prob(&self, xs: &[usize], m: MeasureKind) -> Result<Rational> {
        let (num, den) = self.size(xs, m)?;
        Ok(Rational::new(num, den))
    }

    fn signed_height(&self, s: &SignedSet) -> i64 {
        let hs: Vec<i64> = s
            .carrier()
            .iter()
            .map(|c| self.height(c.index()) as i64)
            .collect();
        match s.sign() {
            Sign::Sup => hs.iter().max().unwrap() + 1,
            Sign::Inf => hs.iter().min().unwrap() - 1,
        }
    }
}

fn idx(xs: &ElemSet) -> Vec<usize> {
    xs.iter().map(Elem::index).collect()
}

fn to_set(xs: Vec<usize>) -> ElemSet {
    xs.into_iter().map(Elem::from_index).collect()
}

fn require(xs: &ElemSet, what: &'static str) -> Result<()> {
    if xs.is_empty() {
        Err(Error::EmptyInput(what))
    } else {
        Ok(())
    }
}

fn in_range(p: &Poset, xs: &[Elem]) -> Result<()> {
    match xs.iter().find(|x| x.index() >= p.len()) {
        Some(x) => Err(Error::UnknownLabel(format!("#{}", x.index()))),
        None => Ok(()),
    }
}

/// Evaluates a query by direct quantifier scans, independently of the
/// main path.
pub fn naive_eval(p: &Poset, q: &Query) -> Outcome {
    outcome(naive(p, q))
}

fn naive(p: &Poset, q: &Query) -> Result<Answer> {
    use Answer::*;
    let nv = Naive::new(p);
    let elems_of = |xs: &ElemSet| xs.iter().collect::<Vec<_>>();
    let set = |v: Vec<usize>| Set(to_set(v));
    let ssigned = |s: &SignedSet| -> Result<()> { in_range(p, &elems_of(s.carrier())) };

    Ok(match q {
        Query::OrderRel(x, y) => {
            in_range(p, &[*x, *y])?;
            let (x, y) = (x.index(), y.index());
            Rel(if x == y {
                OrderRel::Eq
            } else if nv.lt(x, y) {
                OrderRel::Lt
            } else if nv.lt(y, x) {
                OrderRel::Gt
            } else {
                OrderRel::Incomparable
            })
        }
        Query::Orthogonal(x, y) => {
            in_range(p, &[*x, *y])?;
            Bool(nv.orth(x.index(), y.index()))
        }
        Query::Extremes(xs, w) => {
            in_range(p, &elems_of(xs))?;
            require(xs, "extremes")?;
            set(match w {
                Extreme::Min => nv.min(&idx(xs)),
                Extreme::Max => nv.max(&idx(xs)),
            })
        }
        Query::BelowFilter(xs, y) => {
            in_range(p, &elems_of(xs))?;
            in_range(p, &[*y])?;
            set(idx(xs)
                .into_iter()
                .filter(|&x| nv.le(x, y.index()))
                .collect())
        }
        Query::SetCompare(xs, ys, m) => {
            in_range(p, &elems_of(xs))?;
            in_range(p, &elems_of(ys))?;
            if xs.is_empty() || ys.is_empty() {
                return Err(Error::EmptyInput("set_compare"));
            }
            let (xs, ys) = (idx(xs), idx(ys));
            let leq = xs.iter().all(|&x| ys.iter().any(|&y| nv.le(x, y)));
            Bool(match m {
                SetOrder::Leq => leq,
                SetOrder::Leq1 => ys.iter().all(|&y| xs.iter().any(|&x| nv.le(x, y))),
                SetOrder::Lt => {
                    leq && ys
                        .iter()
                        .any(|&y| xs.iter().all(|&x| !nv.le(x, y) || nv.lt(x, y)))
                }
            })
        }
        Query::Height(x) => {
            in_range(p, &[*x])?;
            Int(nv.height(x.index()) as i64)
        }
        Query::ExtremesByHeight(xs, w) => {
            in_range(p, &elems_of(xs))?;
            require(xs, "extremes_by_height")?;
            set(match w {
                HeightExtreme::MaxHt => nv.maxht(&idx(xs)),
                HeightExtreme::MinHt => nv.minht(&idx(xs)),
            })
        }
        Query::MeetAll(xs, v) => {
            if xs.is_empty() {
                return Err(Error::EmptyInput("meet_all"));
            }
            in_range(p, xs)?;
            let raw = nv
                .all()
                .filter(|&a| xs.iter().all(|x| nv.le(a, x.index())))
                .collect();
            set(nv.below(raw, *v))
        }
        Query::JoinAll(xs, v) => {
            if xs.is_empty() {
                return Err(Error::EmptyInput("join_all"));
            }
            in_range(p, xs)?;
            let raw = nv
                .all()
                .filter(|&a| xs.iter().all(|x| nv.le(x.index(), a)))
                .collect();
            set(nv.above(raw, *v))
        }
        Query::NegSet(xs, v) => {
            in_range(p, &elems_of(xs))?;
            require(xs, "neg_set")?;
            set(nv.below(nv.neg(&idx(xs)), *v))
        }
        Query::Minus(x, y, v) => {
            in_range(p, &[*x, *y])?;
            let raw = nv
                .all()
                .filter(|&a| nv.le(a, x.index()) && nv.orth(a, y.index()))
                .collect();
            set(nv.below(raw, *v))
        }
        Query::SetMeet(xs, ys, v) | Query::SetMinus(xs, ys, v) => {
            in_range(p, &elems_of(xs))?;
            in_range(p, &elems_of(ys))?;
            let what = if matches!(q, Query::SetMeet(..)) {
                "set_meet"
            } else {
                "set_minus"
            };
            require(ys, what)?;
            let right = match q {
                Query::SetMinus(..) => nv.neg(&idx(ys)),
                _ => idx(ys),
            };
            require(xs, "set_meet")?;
            let raw = nv.pairwise_union(&idx(xs), &right, |x, y| nv.meet2(x, y));
            set(nv.below(raw, *v))
        }
        Query::SetJoin(xs, ys, v) => {
            in_range(p, &elems_of(xs))?;
            in_range(p, &elems_of(ys))?;
            require(xs, "set_join")?;
            require(ys, "set_join")?;
            let raw = nv.pairwise_union(&idx(xs), &idx(ys), |x, y| nv.join2(x, y));
            set(nv.above(raw, *v))
        }
        Query::AltMeet(xs, ys, k) | Query::AltJoin(xs, ys, k) => {
            in_range(p, &elems_of(xs))?;
            in_range(p, &elems_of(ys))?;
            let meet = matches!(q, Query::AltMeet(..));
            let what = if meet { "alt_meet" } else { "alt_join" };
            require(xs, what)?;
            require(ys, what)?;
            let bound = |a: usize, x: usize| if meet { nv.le(a, x) } else { nv.le(x, a) };
            let (xs, ys) = (idx(xs), idx(ys));
            set(nv
                .all()
                .filter(|&a| match k {
                    AltKind::Pairwise => xs
                        .iter()
                        .all(|&x| ys.iter().all(|&y| bound(a, x) && bound(a, y))),
                    AltKind::UnionBased => xs.iter().chain(&ys).all(|&x| bound(a, x)),
                })
                .collect())
        }
        Query::AltNeg1(xs) => {
            in_range(p, &elems_of(xs))?;
            require(xs, "alt_neg1")?;
            let xs = idx(xs);
            set(nv
                .all()
                .filter(|&a| xs.iter().any(|&x| nv.orth(a, x)))
                .collect())
        }
        Query::SignedMeetOf(x, y) => {
            in_range(p, &[*x, *y])?;
            Signed(Sign::Sup, to_set(nv.max(&nv.meet2(x.index(), y.index()))))
        }
        Query::SignedJoinOf(x, y) => {
            in_range(p, &[*x, *y])?;
            Signed(Sign::Inf, to_set(nv.min(&nv.join2(x.index(), y.index()))))
        }
        Query::SignedNegOf(x) => {
            in_range(p, &[*x])?;
            Signed(Sign::Sup, to_set(nv.max(&nv.neg(&[x.index()]))))
        }
        Query::SignedMeet(y, s) | Query::SignedJoin(y, s) => {
            in_range(p, &[*y])?;
            ssigned(s)?;
            let y = y.index();
            let c = idx(s.carrier());
            let meet = matches!(q, Query::SignedMeet(..));
            set(nv
                .all()
                .filter(|&z| {
                    if meet {
                        let to = |c: usize| nv.le(z, c);
                        nv.le(z, y)
                            && match s.sign() {
                                Sign::Sup => c.iter().any(|&c| to(c)),
                                Sign::Inf => c.iter().all(|&c| to(c)),
                            }
                    } else {
                        let from = |c: usize| nv.le(c, z);
                        nv.le(y, z)
                            && match s.sign() {
                                Sign::Sup => c.iter().all(|&c| from(c)),
                                Sign::Inf => c.iter().any(|&c| from(c)),
                            }
                    }
                })
                .collect())
        }
        Query::SignedNeg(s) => {
            ssigned(s)?;
            let c = idx(s.carrier());
            set(nv
                .all()
                .filter(|&a| match s.sign() {
                    Sign::Sup => c.iter().all(|&c| nv.orth(a, c)),
                    Sign::Inf => c.iter().any(|&c| nv.orth(a, c)),
                })
                .collect())
        }
        Query::SignedHeight(s) => {
            ssigned(s)?;
            Int(nv.signed_height(s))
        }
        Query::HtOfSet(xs) => {
            in_range(p, &elems_of(xs))?;
            Int(nv.size(&idx(xs), MeasureKind::MaxHeight)?.0)
        }
        Query::ProbMax(xs) => {
            in_range(p, &elems_of(xs))?;
            Ratio(nv.prob(&idx(xs), MeasureKind::MaxHeight)?)
        }
        Query::Mu(xs) => {
            in_range(p, &elems_of(xs))?;
            Int(nv.size(&idx(xs), MeasureKind::SumHeight)?.0)
        }
        Query::ProbSum(xs) => {
            in_range(p, &elems_of(xs))?;
            Ratio(nv.prob(&idx(xs), MeasureKind::SumHeight)?)
        }
        Query::ProbSigned(s) => {
            ssigned(s)?;
            let r = Rational::new(nv.signed_height(s), nv.height(nv.top) as i64);
            let out = r < Rational::from_integer(0) || r > Rational::from_integer(1);
            FlaggedRatio(r, out)
        }
        Query::IndepProduct(a, b, m) => {
            in_range(p, &elems_of(a))?;
            in_range(p, &elems_of(b))?;
            if a.is_empty() || b.is_empty() {
                return Err(Error::EmptyInput("indep_product"));
            }
            let (a, b) = (idx(a), idx(b));
            let ab = nv.pairwise_union(&a, &b, |x, y| nv.meet2(x, y));
            Bool(nv.prob(&ab, *m)? == nv.prob(&a, *m)? * nv.prob(&b, *m)?)
        }
        Query::IndepThreshold(a, b, alpha, m) => {
            in_range(p, &elems_of(a))?;
            in_range(p, &elems_of(b))?;
            if a.is_empty() || b.is_empty() {
                return Err(Error::EmptyInput("indep_threshold"));
            }
            let (a, b) = (idx(a), idx(b));
            let alpha = match alpha {
                Some(alpha) => *alpha,
                None => nv.prob(&b, *m)?,
            };
            let not_a = nv.neg(&a);
            let zero = Rational::from_integer(0);
            let pa = nv.prob(&a, *m)?;
            let pna = nv.prob(&not_a, *m)?;
            if pa == zero {
                return Err(Error::DegenerateConditional("P(A)"));
            }
            if pna == zero {
                return Err(Error::DegenerateConditional("P(¬A)"));
            }
            let r1 = nv.prob(&nv.pairwise_union(&a, &b, |x, y| nv.meet2(x, y)), *m)? / pa;
            let r2 = nv.prob(&nv.pairwise_union(&not_a, &b, |x, y| nv.meet2(x, y)), *m)? / pna;
            Bool(r1 == alpha || (r1 < alpha && r2 >= alpha) || (r1 > alpha && r2 <= alpha))
        }
    })
}

fn random_elem(p: &Poset, rng: &mut ChaCha8Rng) -> Elem {
    Elem::from_index(rng.gen_range(0..p.len()))
}

// Mostly small nonempty subsets; one draw in twelve is empty so error paths
// get compared too.
fn random_set(p: &Poset, rng: &mut ChaCha8Rng, allow_empty: bool) -> ElemSet {
    if allow_empty && rng.gen_range(0..12) == 0 {
        return ElemSet::new();
    }
    let k = rng.gen_range(1..=p.len().min(4));
    let all: Vec<Elem> = p.elems().collect();
    all.choose_multiple(rng, k).copied().collect()
}

fn random_variant(rng: &mut ChaCha8Rng) -> Variant {
    [Variant::Raw, Variant::Prime, Variant::HtPrime][rng.gen_range(0..3)]
}

fn random_signed(p: &Poset, rng: &mut ChaCha8Rng) -> SignedSet {
    let sign = if rng.gen_bool(0.5) {
        Sign::Sup
    } else {
        Sign::Inf
    };
    SignedSet::new(sign, random_set(p, rng, false)).expect("nonempty carrier")
}

fn random_measure(rng: &mut ChaCha8Rng) -> MeasureKind {
    if rng.gen_bool(0.5) {
        MeasureKind::MaxHeight
    } else {
        MeasureKind::SumHeight
    }
}

/// Draws one random query over all tags.
pub fn random_query(p: &Poset, rng: &mut ChaCha8Rng) -> Query {
    let e = |rng: &mut ChaCha8Rng| random_elem(p, rng);
    let s = |rng: &mut ChaCha8Rng| random_set(p, rng, true);
    match rng.gen_range(0..QUERY_TAGS) {
        0 => Query::OrderRel(e(rng), e(rng)),
        1 => Query::Orthogonal(e(rng), e(rng)),
        2 => {
            let w = if rng.gen_bool(0.5) {
                Extreme::Min
            } else {
                Extreme::Max
            };
            Query::Extremes(s(rng), w)
        }
        3 => Query::BelowFilter(s(rng), e(rng)),
        4 => {
            let m = [SetOrder::Leq, SetOrder::Lt, SetOrder::Leq1][rng.gen_range(0..3)];
            Query::SetCompare(s(rng), s(rng), m)
        }
        5 => Query::Height(e(rng)),
        6 => {
            let w = if rng.gen_bool(0.5) {
                HeightExtreme::MaxHt
            } else {
                HeightExtreme::MinHt
            };
            Query::ExtremesByHeight(s(rng), w)
        }
        7 | 8 => {
            let k = rng.gen_range(0..=3);
            let xs = (0..k).map(|_| e(rng)).collect();
            let v = random_variant(rng);
            if rng.gen_bool(0.5) {
                Query::MeetAll(xs, v)
            } else {
                Query::JoinAll(xs, v)
            }
        }
        9 => Query::NegSet(s(rng), random_variant(rng)),
        10 => Query::Minus(e(rng), e(rng), random_variant(rng)),
        11 => Query::SetMeet(s(rng), s(rng), random_variant(rng)),
        12 => Query::SetJoin(s(rng), s(rng), random_variant(rng)),
        13 => Query::SetMinus(s(rng), s(rng), random_variant(rng)),
        14 | 15 => {
            let k = if rng.gen_bool(0.5) {
                AltKind::Pairwise
            } else {
                AltKind::UnionBased
            };
            let (a, b) = (s(rng), s(rng));
            if rng.gen_bool(0.5) {
                Query::AltMeet(a, b, k)
            } else {
                Query::AltJoin(a, b, k)
            }
        }
        16 => Query::AltNeg1(s(rng)),
        17 => Query::SignedMeetOf(e(rng), e(rng)),
        18 => Query::SignedJoinOf(e(rng), e(rng)),
        19 => Query::SignedNegOf(e(rng)),
        20 => Query::SignedMeet(e(rng), random_signed(p, rng)),
        21 => Query::SignedJoin(e(rng), random_signed(p, rng)),
        22 => Query::SignedNeg(random_signed(p, rng)),
        23 => Query::SignedHeight(random_signed(p, rng)),
        24 => Query::HtOfSet(s(rng)),
        25 => Query::ProbMax(s(rng)),
        26 => Query::Mu(s(rng)),
        27 => Query::ProbSum(s(rng)),
        28 => Query::ProbSigned(random_signed(p, rng)),
        29 => Query::IndepProduct(s(rng), s(rng), random_measure(rng)),
        _ => {
            let alpha = if rng.gen_bool(0.3) {
                Some(Rational::new(rng.gen_range(0..=4), 4))
            } else {
                None
            };
            Query::IndepThreshold(s(rng), s(rng), alpha, random_measure(rng))
        }
    }
}

/// Main path against the naive path on `cases` seeded random queries.
pub fn differential_check(p: &Poset, seed: u64, cases: usize) -> Report {
    differential_check_with(p, seed, cases, main_eval)
}

/// [`differential_check`] with a replaceable main path, so the harness
/// itself can be tested against an injected fault.
pub fn differential_check_with<F>(p: &Poset, seed: u64, cases: usize, main: F) -> Report
where
    F: Fn(&Poset, &Query) -> Outcome,
{
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = Report {
        cases,
        mismatches: Vec::new(),
    };
    for _ in 0..cases {
        let query = random_query(p, &mut rng);
        let main = main(p, &query);
        let oracle = naive_eval(p, &query);
        if main != oracle {
            report.mismatches.push(Mismatch {
                query,
                main,
                oracle,
            });
        }
    }
    report
}

/// A deliberately broken main path: every `Prime` refinement is dropped.
pub fn prime_to_raw_fault(p: &Poset, q: &Query) -> Outcome {
    let raw = |v: &Variant| match v {
        Variant::Prime => Variant::Raw,
        other => *other,
    };
    let q = match q.clone() {
        Query::MeetAll(xs, v) => Query::MeetAll(xs, raw(&v)),
        Query::JoinAll(xs, v) => Query::JoinAll(xs, raw(&v)),
        Query::NegSet(xs, v) => Query::NegSet(xs, raw(&v)),
        Query::Minus(x, y, v) => Query::Minus(x, y, raw(&v)),
        Query::SetMeet(xs, ys, v) => Query::SetMeet(xs, ys, raw(&v)),
        Query::SetJoin(xs, ys, v) => Query::SetJoin(xs, ys, raw(&v)),
        Query::SetMinus(xs, ys, v) => Query::SetMinus(xs, ys, raw(&v)),
        other => other,
    };
    main_eval(p, &q)
}

/// Largest atom count for [`lattice_oracle_check`].
pub const MAX_LATTICE_CHECK_ATOMS: usize = 4;

/// On a full powerset lattice the primed operators must collapse to
/// intersection, union and complement. Checks every ordered pair.
pub fn lattice_oracle_check<S: AsRef<str>>(atoms: &[S]) -> Result<Report> {
    if atoms.len() > MAX_LATTICE_CHECK_ATOMS {
        return Err(Error::TooManyAtoms {
            got: atoms.len(),
            max: MAX_LATTICE_CHECK_ATOMS,
        });
    }
    let p = powerset_lattice(atoms)?;
    let mut sorted: Vec<&str> = atoms.iter().map(AsRef::as_ref).collect();
    sorted.sort_unstable();
    let k = sorted.len();
    let full = (1u32 << k) - 1;
    let elem_of = |mask: u32| -> Result<Elem> {
        let members: Vec<&str> = (0..k)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| sorted[i])
            .collect();
        p.elem(&subset_label(&members))
    };

    let mut report = Report::default();
    let compare = |query: Query, expected: u32, report: &mut Report| -> Result<()> {
        let oracle: Outcome = Ok(Answer::Set(ElemSet::singleton(elem_of(expected)?)));
        let main = main_eval(&p, &query);
        if main != oracle {
            report.mismatches.push(Mismatch {
                query,
                main,
                oracle,
            });
        }
        Ok(())
    };
    for u in 0..=full {
        let eu = ElemSet::singleton(elem_of(u)?);
        compare(
            Query::NegSet(eu.clone(), Variant::Prime),
            full & !u,
            &mut report,
        )?;
        for v in 0..=full {
            let ev = ElemSet::singleton(elem_of(v)?);
            report.cases += 1;
            compare(
                Query::SetMeet(eu.clone(), ev.clone(), Variant::Prime),
                u & v,
                &mut report,
            )?;
            compare(
                Query::SetJoin(eu.clone(), ev, Variant::Prime),
                u | v,
                &mut report,
            )?;
        }
    }
    Ok(report)
}

/// Result of [`law_check`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LawReport {
    pub checks: usize,
    pub violations: Vec<String>,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.violations.push(what());
        }
    }
}

/// Sets the law suite quantifies over: all singletons, the ground set,
/// `{⊥}`, and a seeded sample of small subsets.
pub fn law_sets(p: &Poset) -> Vec<ElemSet> {
    let mut sets: Vec<ElemSet> = p.elems().map(ElemSet::singleton).collect();
    sets.push(p.all());
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..24 {
        sets.push(random_set(p, &mut rng, false));
    }
    sets.sort();
    sets.dedup();
    sets
}

/// Algebraic laws that hold on every finite poset, checked exhaustively over
/// element pairs and triples and over [`law_sets`] for set-level laws.
pub fn law_check(p: &Poset) -> LawReport {
    use Variant::*;
    let mut r = LawReport::default();
    let bot = ElemSet::singleton(p.bottom());
    let one = ElemSet::singleton;
    let l = |x: Elem| p.display_label(x).to_string();
    let elems: Vec<Elem> = p.elems().collect();

    // Heights.
    r.check(p.ht(p.bottom()) == 0, || "ht(⊥) = 0".into());
    r.check(p.ht(p.top()) > 0, || "ht(⊤) > 0".into());
    for &x in &elems {
        r.check(p.ht(x) <= p.ht(p.top()), || format!("ht({}) ≤ ht(⊤)", l(x)));
        for &y in &elems {
            if p.lt(x, y) {
                r.check(p.ht(x) < p.ht(y), || {
                    format!("{} < {} ⇒ ht increases", l(x), l(y))
                });
            }
        }
    }

    // Element laws.
    for &x in &elems {
        let not_x = ops::neg_set(p, &one(x), Raw).unwrap();
        r.check(
            ops::set_meet(p, &one(x), &not_x, Raw).unwrap() == bot,
            || format!("{0} ∧ ¬{0} = {{⊥}}", l(x)),
        );
        r.check(ops::minus(p, x, x, Raw).unwrap() == bot, || {
            format!("{0} ∖ {0} = {{⊥}}", l(x))
        });
        for &y in &elems {
            let not_y = ops::neg_set(p, &one(y), Raw).unwrap();
            r.check(
                ops::minus(p, x, y, Raw).unwrap()
                    == ops::set_meet(p, &one(x), &not_y, Raw).unwrap(),
                || format!("{0} ∧ ¬{1} = {0} ∖ {1}", l(x), l(y)),
            );
            for v in [Raw, Prime, HtPrime] {
                r.check(
                    ops::set_minus(p, &one(x), &one(y), v).unwrap()
                        == ops::minus(p, x, y, v).unwrap(),
                    || format!("set_minus agrees with minus at ({},{}) {v:?}", l(x), l(y)),
                );
            }
            if p.orth(x, y) {
                for &w in &elems {
                    if p.le(w, x) {
                        r.check(p.orth(w, y), || {
                            format!(
                                "orthogonality downward closed at {} ≤ {} ⊥ {}",
                                l(w),
                                l(x),
                                l(y)
                            )
                        });
                    }
                }
            }
            for &z in &elems {
                for v in [Raw, Prime] {
                    let lhs = ops::meet_all(p, &[x, y, z], v).unwrap();
                    let inner = ops::meet_all(p, &[y, z], v).unwrap();
                    let rhs = ops::set_meet(p, &one(x), &inner, v).unwrap();
                    r.check(lhs == rhs, || {
                        format!("meet associativity {v:?} at ({},{},{})", l(x), l(y), l(z))
                    });
                    let lhs = ops::join_all(p, &[x, y, z], v).unwrap();
                    let inner = ops::join_all(p, &[y, z], v).unwrap();
                    let rhs = ops::set_join(p, &one(x), &inner, v).unwrap();
                    r.check(lhs == rhs, || {
                        format!("join associativity {v:?} at ({},{},{})", l(x), l(y), l(z))
                    });
                }
            }
        }
    }

    // Set laws.
    let sets = law_sets(p);
    let mut rng = ChaCha8Rng::seed_from_u64(0xa11);
    let ht = |xs: &ElemSet| measure::ht_of_set(p, xs).unwrap();
    let unit = Rational::from_integer(1);
    let zero = Rational::from_integer(0);
    for xs in &sets {
        let shown = p.show(xs);
        let neg = ops::neg_set(p, xs, Raw).unwrap();
        r.check(ops::set_meet(p, xs, &neg, Raw).unwrap() == bot, || {
            format!("X ∧ ¬X = {{⊥}} at {shown}")
        });
        r.check(xs.is_subset(&ops::neg_set(p, &neg, Raw).unwrap()), || {
            format!("X ⊆ ¬¬X at {shown}")
        });
        let bigger = xs.union(&random_set(p, &mut rng, false));
        r.check(
            ops::neg_set(p, &bigger, Raw).unwrap().is_subset(&neg),
            || format!("¬ antitone at {shown} ⊆ {}", p.show(&bigger)),
        );
        r.check(ht(xs) <= ht(&bigger), || format!("ht monotone at {shown}"));
        r.check(
            measure::mu(p, xs).unwrap() <= measure::mu(p, &bigger).unwrap(),
            || format!("mu monotone at {shown}"),
        );
        for kind in [MeasureKind::MaxHeight, MeasureKind::SumHeight] {
            let pr = measure::prob(p, xs, kind).unwrap();
            r.check(zero <= pr && pr <= unit, || {
                format!("0 ≤ P ≤ 1 ({kind:?}) at {shown}")
            });
        }

        let max = p.extremes_of(xs, Extreme::Max);
        let min = p.extremes_of(xs, Extreme::Min);
        let maxht = p.extremes_by_height_of(xs, HeightExtreme::MaxHt);
        let minht = p.extremes_by_height_of(xs, HeightExtreme::MinHt);
        r.check(
            maxht == p.extremes_by_height_of(&max, HeightExtreme::MaxHt),
            || format!("maxht(X) = maxht(max(X)) at {shown}"),
        );
        r.check(
            minht == p.extremes_by_height_of(&min, HeightExtreme::MinHt),
            || format!("minht(X) = minht(min(X)) at {shown}"),
        );
        r.check(maxht.is_subset(&max), || {
            format!("maxht(X) ⊆ max(X) at {shown}")
        });
        r.check(minht.is_subset(&min), || {
            format!("minht(X) ⊆ min(X) at {shown}")
        });

        for ys in &sets {
            for v in [Raw, Prime, HtPrime] {
                r.check(
                    ops::set_meet(p, xs, ys, v).unwrap() == ops::set_meet(p, ys, xs, v).unwrap(),
                    || format!("meet commutativity {v:?} at {shown}, {}", p.show(ys)),
                );
                r.check(
                    ops::set_join(p, xs, ys, v).unwrap() == ops::set_join(p, ys, xs, v).unwrap(),
                    || format!("join commutativity {v:?} at {shown}, {}", p.show(ys)),
                );
            }
            let meet = ops::set_meet(p, xs, ys, Raw).unwrap();
            let join = ops::set_join(p, xs, ys, Raw).unwrap();
            r.check(ht(&meet) <= ht(xs).min(ht(ys)), || {
                format!("ht(X ∧ Y) ≤ min at {shown}, {}", p.show(ys))
            });
            r.check(ht(&join) >= ht(xs).max(ht(ys)), || {
                format!("ht(X ∨ Y) ≥ max at {shown}, {}", p.show(ys))
            });
        }
    }
    r
}
