//! Finite posets with distinguished bottom and top.
//!
//! A [`Poset`] is built once from arbitrary order generators and is immutable
//! afterwards. Construction closes the relation transitively, adjoins the
//! bounds, computes the transitive reduction (the Hasse diagram) and caches
//! the height of every element.
//!
//! Elements are addressed by [`Elem`] handles. Handle order is canonical:
//! bottom first, top last, everything else sorted by label. [`ElemSet`]
//! iterates in handle order, so printed sets are deterministic.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};

/// Label given to a synthesized bottom.
pub const BOTTOM_LABEL: &str = "_bot";
/// Label given to a synthesized top.
pub const TOP_LABEL: &str = "_top";

/// Handle of one element of a [`Poset`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(u32);

impl Elem {
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub(crate) fn from_index(i: usize) -> Self {
        Elem(i as u32)
    }
}

/// A subset of the ground set of one poset, stored as a bitset over handle
/// indices. Trailing zero words are trimmed, so equal sets compare equal.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElemSet(Vec<u64>);

const WORD: usize = 64;

impl ElemSet {
    pub fn new() -> Self {
        ElemSet(Vec::new())
    }

    pub fn singleton(e: Elem) -> Self {
        let mut s = ElemSet::new();
        s.insert(e);
        s
    }

    /// Adds `e`; returns whether it was absent.
    pub fn insert(&mut self, e: Elem) -> bool {
        let (w, b) = (e.index() / WORD, e.index() % WORD);
        if self.0.len() <= w {
            self.0.resize(w + 1, 0);
        }
        let fresh = self.0[w] & (1 << b) == 0;
        self.0[w] |= 1 << b;
        fresh
    }

    pub fn contains(&self, e: Elem) -> bool {
        let (w, b) = (e.index() / WORD, e.index() % WORD);
        self.0.get(w).is_some_and(|word| word & (1 << b) != 0)
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Members in handle order.
    pub fn iter(&self) -> Iter<'_> {
        match self.0.split_first() {
            Some((&cur, rest)) => Iter { rest, base: 0, cur },
            None => Iter {
                rest: &[],
                base: 0,
                cur: 0,
            },
        }
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(i, w)| w & !other.0.get(i).copied().unwrap_or(0) == 0)
    }

    /// True iff the two sets share a member.
    pub fn meets(&self, other: &ElemSet) -> bool {
        self.0.iter().zip(&other.0).any(|(a, b)| a & b != 0)
    }

    pub fn union(&self, other: &ElemSet) -> ElemSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn intersection(&self, other: &ElemSet) -> ElemSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn union_with(&mut self, other: &ElemSet) {
        if self.0.len() < other.0.len() {
            self.0.resize(other.0.len(), 0);
        }
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &ElemSet) {
        self.0.truncate(other.0.len());
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a &= b;
        }
        self.trim();
    }

    fn trim(&mut self) {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
    }

    /// The only member, if there is exactly one.
    pub fn as_singleton(&self) -> Option<Elem> {
        let mut it = self.iter();
        match (it.next(), it.next()) {
            (Some(e), None) => Some(e),
            _ => None,
        }
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(Elem::index)).finish()
    }
}

/// Iterator over the members of an [`ElemSet`].
#[derive(Clone)]
pub struct Iter<'a> {
    rest: &'a [u64],
    base: usize,
    cur: u64,
}

impl Iterator for Iter<'_> {
    type Item = Elem;

    fn next(&mut self) -> Option<Elem> {
        while self.cur == 0 {
            let (&next, rest) = self.rest.split_first()?;
            self.rest = rest;
            self.base += WORD;
            self.cur = next;
        }
        let bit = self.cur.trailing_zeros() as usize;
        self.cur &= self.cur - 1;
        Some(Elem::from_index(self.base + bit))
    }
}

impl FromIterator<Elem> for ElemSet {
    fn from_iter<I: IntoIterator<Item = Elem>>(iter: I) -> Self {
        let mut s = ElemSet::new();
        s.extend(iter);
        s
    }
}

impl Extend<Elem> for ElemSet {
    fn extend<I: IntoIterator<Item = Elem>>(&mut self, iter: I) {
        for e in iter {
            self.insert(e);
        }
    }
}

impl<'a> IntoIterator for &'a ElemSet {
    type Item = Elem;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

/// Outcome of comparing two elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderRel {
    Lt,
    Gt,
    Eq,
    Incomparable,
}

/// Selects minimal or maximal elements of a set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Extreme {
    Min,
    Max,
}

/// Selects the elements of extremal height of a set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HeightExtreme {
    MaxHt,
    MinHt,
}

/// Orders between sets of elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SetOrder {
    /// Every member of the left set lies below some member of the right set.
    Leq,
    /// `Leq`, plus some right member strictly dominates everything of the
    /// left set below it.
    Lt,
    /// Every member of the right set lies above some member of the left set.
    /// Kept only because it admits a well-known counterexample.
    Leq1,
}

#[derive(Clone, Debug)]
pub struct Poset {
    name: String,
    labels: Vec<String>,
    index: HashMap<String, Elem>,
    // lt[x][y] is the transitively closed strict order.
    lt: Vec<Vec<bool>>,
    heights: Vec<usize>,
    generators: Vec<(Elem, Elem)>,
    reduction: Vec<(Elem, Elem)>,
    // Row views of the closure: strictly below, strictly above, orthogonal.
    below: Vec<ElemSet>,
    above: Vec<ElemSet>,
    orth_to: Vec<ElemSet>,
}

fn validate_label(label: &str) -> Result<()> {
    let reserved = label == BOTTOM_LABEL || label == TOP_LABEL;
    if label.is_empty()
        || label.chars().any(char::is_whitespace)
        || (label.starts_with('_') && !reserved)
    {
        return Err(Error::InvalidLabel(label.to_string()));
    }
    Ok(())
}

/// Builds and validates a poset.
///
/// `generators` are pairs `(x, y)` meaning `x < y`; they need not be covers
/// nor transitively closed. Missing bounds are synthesized as `_bot` and
/// `_top`. Declared bounds are placed below (above) every other element
/// automatically; a generator that puts something under the declared bottom
/// or over the declared top is a [`Error::BoundsViolation`].
pub fn build_poset<S, T>(
    name: &str,
    elems: &[S],
    generators: &[(T, T)],
    bottom: Option<&str>,
    top: Option<&str>,
) -> Result<Poset>
where
    S: AsRef<str>,
    T: AsRef<str>,
{
    let mut declared: Vec<String> = Vec::with_capacity(elems.len() + 2);
    let mut seen = HashMap::new();
    for label in elems {
        let label = label.as_ref();
        validate_label(label)?;
        if seen.insert(label.to_string(), ()).is_some() {
            return Err(Error::DuplicateLabel(label.to_string()));
        }
        declared.push(label.to_string());
    }

    let mut bound_label = |given: Option<&str>, fresh: &str| -> Result<String> {
        match given {
            Some(label) if seen.contains_key(label) => Ok(label.to_string()),
            Some(label) => Err(Error::UnknownLabel(label.to_string())),
            None if seen.contains_key(fresh) => Err(Error::DuplicateLabel(fresh.to_string())),
            None => {
                seen.insert(fresh.to_string(), ());
                declared.push(fresh.to_string());
                Ok(fresh.to_string())
            }
        }
    };
    let bottom = bound_label(bottom, BOTTOM_LABEL)?;
    let top = bound_label(top, TOP_LABEL)?;
    if bottom == top {
        return Err(Error::BoundsViolation(format!(
            "bottom and top are both `{bottom}`"
        )));
    }
    if declared.len() < 2 {
        return Err(Error::TooSmall);
    }

    // Canonical order: bottom, sorted inner labels, top.
    let mut inner: Vec<String> = declared
        .into_iter()
        .filter(|l| *l != bottom && *l != top)
        .collect();
    inner.sort();
    let mut labels = Vec::with_capacity(inner.len() + 2);
    labels.push(bottom.clone());
    labels.extend(inner);
    labels.push(top.clone());
    let n = labels.len();
    let index: HashMap<String, Elem> = labels
        .iter()
        .enumerate()
        .map(|(i, l)| (l.clone(), Elem::from_index(i)))
        .collect();

    let mut gens: BTreeSet<(Elem, Elem)> = BTreeSet::new();
    for (x, y) in generators {
        let (x, y) = (x.as_ref(), y.as_ref());
        let ex = *index
            .get(x)
            .ok_or_else(|| Error::UnknownLabel(x.to_string()))?;
        let ey = *index
            .get(y)
            .ok_or_else(|| Error::UnknownLabel(y.to_string()))?;
        gens.insert((ex, ey));
    }

    // Cycle check on the generators alone, before the bounds get involved.
    let mut lt = vec![vec![false; n]; n];
    for &(x, y) in &gens {
        lt[x.index()][y.index()] = true;
    }
    close(&mut lt);
    for &(x, y) in &gens {
        if lt[y.index()][x.index()] {
            return Err(Error::CycleDetected(
                labels[x.index()].clone(),
                labels[y.index()].clone(),
            ));
        }
    }

    let (bot_e, top_e) = (Elem::from_index(0), Elem::from_index(n - 1));
    for &(x, y) in &gens {
        if y == bot_e {
            return Err(Error::BoundsViolation(format!(
                "`{}` is placed below the bottom `{}`",
                labels[x.index()],
                bottom
            )));
        }
        if x == top_e {
            return Err(Error::BoundsViolation(format!(
                "`{}` is placed above the top `{}`",
                labels[y.index()],
                top
            )));
        }
    }

    for cell in lt[0].iter_mut().skip(1) {
        *cell = true;
    }
    for row in lt.iter_mut().take(n - 1) {
        row[n - 1] = true;
    }
    close(&mut lt);

    let reduction = reduce(&lt);
    let heights = longest_paths(&lt, &reduction);
    let row = |f: &dyn Fn(usize) -> bool| -> ElemSet {
        (0..n).filter(|&i| f(i)).map(Elem::from_index).collect()
    };
    let below: Vec<ElemSet> = (0..n).map(|y| row(&|x| lt[x][y])).collect();
    let above: Vec<ElemSet> = (0..n).map(|x| row(&|y| lt[x][y])).collect();
    // Off bottom, orthogonal means incomparable with no common lower bound
    // other than bottom.
    let orth_to: Vec<ElemSet> = (0..n)
        .map(|x| {
            row(&|y| {
                if x == 0 || y == 0 {
                    return true;
                }
                if x == y || lt[x][y] || lt[y][x] {
                    return false;
                }
                !(1..n).any(|z| lt[z][x] && lt[z][y])
            })
        })
        .collect();

    Ok(Poset {
        name: name.to_string(),
        labels,
        index,
        lt,
        heights,
        generators: gens.into_iter().collect(),
        reduction,
        below,
        above,
        orth_to,
    })
}

// Warshall's algorithm on a dense boolean matrix.
fn close(rel: &mut [Vec<bool>]) {
    for k in 0..rel.len() {
        let via = rel[k].clone();
        for row in rel.iter_mut() {
            if !row[k] {
                continue;
            }
            for (cell, &step) in row.iter_mut().zip(&via) {
                *cell |= step;
            }
        }
    }
}

fn reduce(lt: &[Vec<bool>]) -> Vec<(Elem, Elem)> {
    let n = lt.len();
    let mut edges = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if lt[x][y] && !(0..n).any(|z| lt[x][z] && lt[z][y]) {
                edges.push((Elem::from_index(x), Elem::from_index(y)));
            }
        }
    }
    edges
}

// Longest path from bottom along reduction edges, in a topological order.
// Sorting by down-set size yields a linear extension: x < y implies the
// down-set of x is a proper subset of that of y.
fn longest_paths(lt: &[Vec<bool>], reduction: &[(Elem, Elem)]) -> Vec<usize> {
    let n = lt.len();
    let below: Vec<usize> = (0..n)
        .map(|y| (0..n).filter(|&x| lt[x][y]).count())
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| below[i]);

    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(x, y) in reduction {
        preds[y.index()].push(x.index());
    }
    let mut height = vec![0usize; n];
    for y in order {
        height[y] = preds[y].iter().map(|&x| height[x] + 1).max().unwrap_or(0);
    }
    height
}

impl Poset {
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Same poset under another name.
    pub fn with_name(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    /// Number of elements, bounds included.
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    /// Always false: a built poset has at least two elements.
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn bottom(&self) -> Elem {
        Elem::from_index(0)
    }

    pub fn top(&self) -> Elem {
        Elem::from_index(self.labels.len() - 1)
    }

    /// All elements in canonical order.
    pub fn elems(&self) -> impl DoubleEndedIterator<Item = Elem> + ExactSizeIterator {
        (0..self.labels.len()).map(Elem::from_index)
    }

    /// The whole ground set.
    pub fn all(&self) -> ElemSet {
        self.elems().collect()
    }

    pub fn label(&self, e: Elem) -> &str {
        &self.labels[e.index()]
    }

    /// Label as shown to users: reserved bound labels print as `⊥` / `⊤`.
    pub fn display_label(&self, e: Elem) -> &str {
        match self.label(e) {
            BOTTOM_LABEL => "⊥",
            TOP_LABEL => "⊤",
            other => other,
        }
    }

    pub fn elem(&self, label: &str) -> Result<Elem> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn set_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<ElemSet> {
        labels.iter().map(|l| self.elem(l.as_ref())).collect()
    }

    pub fn check(&self, e: Elem) -> Result<()> {
        if e.index() < self.labels.len() {
            Ok(())
        } else {
            Err(Error::UnknownLabel(format!("#{}", e.index())))
        }
    }

    pub fn check_set(&self, set: &ElemSet) -> Result<()> {
        set.iter().try_for_each(|e| self.check(e))
    }

    /// Canonical printed form, e.g. `{⊥,a,b}`.
    pub fn show(&self, set: &ElemSet) -> String {
        let parts: Vec<&str> = set.iter().map(|e| self.display_label(e)).collect();
        format!("{{{}}}", parts.join(","))
    }

    /// Strict order. Handles must belong to this poset.
    pub fn lt(&self, x: Elem, y: Elem) -> bool {
        self.lt[x.index()][y.index()]
    }

    /// Reflexive order. Handles must belong to this poset.
    pub fn le(&self, x: Elem, y: Elem) -> bool {
        x == y || self.lt(x, y)
    }

    /// Declared generators (bounds excluded), deduplicated.
    pub fn generators(&self) -> &[(Elem, Elem)] {
        &self.generators
    }

    /// Declared generators plus the implicit bound edges; the closure of
    /// this edge list is the order.
    pub fn generator_edges(&self) -> Vec<(Elem, Elem)> {
        let (b, t) = (self.bottom(), self.top());
        let mut edges: BTreeSet<(Elem, Elem)> = self.generators.iter().copied().collect();
        for e in self.elems() {
            if e != b {
                edges.insert((b, e));
            }
            if e != t {
                edges.insert((e, t));
            }
        }
        edges.into_iter().collect()
    }

    /// Cover relation (Hasse diagram edges), in canonical order.
    pub fn reduction(&self) -> &[(Elem, Elem)] {
        &self.reduction
    }

    pub fn order_rel(&self, x: Elem, y: Elem) -> Result<OrderRel> {
        self.check(x)?;
        self.check(y)?;
        Ok(if x == y {
            OrderRel::Eq
        } else if self.lt(x, y) {
            OrderRel::Lt
        } else if self.lt(y, x) {
            OrderRel::Gt
        } else {
            OrderRel::Incomparable
        })
    }

    /// True iff bottom is the only common lower bound of `x` and `y`.
    pub fn orthogonal(&self, x: Elem, y: Elem) -> Result<bool> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.orth(x, y))
    }

    pub(crate) fn orth(&self, x: Elem, y: Elem) -> bool {
        self.orth_to[x.index()].contains(y)
    }

    /// Elements orthogonal to `x`.
    pub(crate) fn orth_row(&self, x: Elem) -> &ElemSet {
        &self.orth_to[x.index()]
    }

    /// `{a : a ≤ x}`.
    pub(crate) fn down_set(&self, x: Elem) -> ElemSet {
        let mut s = self.below[x.index()].clone();
        s.insert(x);
        s
    }

    /// `{a : x ≤ a}`.
    pub(crate) fn up_set(&self, x: Elem) -> ElemSet {
        let mut s = self.above[x.index()].clone();
        s.insert(x);
        s
    }

    pub fn extremes(&self, set: &ElemSet, which: Extreme) -> Result<ElemSet> {
        self.check_set(set)?;
        if set.is_empty() {
            return Err(Error::EmptyInput("extremes"));
        }
        Ok(self.extremes_of(set, which))
    }

    pub(crate) fn extremes_of(&self, set: &ElemSet, which: Extreme) -> ElemSet {
        set.iter()
            .filter(|&x| {
                let beyond = match which {
                    Extreme::Min => &self.below[x.index()],
                    Extreme::Max => &self.above[x.index()],
                };
                !beyond.meets(set)
            })
            .collect()
    }

    /// `{x ∈ set : x ≤ y}`.
    pub fn below_filter(&self, set: &ElemSet, y: Elem) -> Result<ElemSet> {
        self.check_set(set)?;
        self.check(y)?;
        Ok(set.iter().filter(|&x| self.le(x, y)).collect())
    }

    /// Compares two nonempty sets.
    ///
    /// `Lt` reads its second clause with an existential over `Y`: some
    /// `y ∈ Y` is strictly above every member of `X` that lies below it.
    pub fn set_compare(&self, xs: &ElemSet, ys: &ElemSet, mode: SetOrder) -> Result<bool> {
        self.check_set(xs)?;
        self.check_set(ys)?;
        if xs.is_empty() || ys.is_empty() {
            return Err(Error::EmptyInput("set_compare"));
        }
        let leq = || xs.iter().all(|x| ys.iter().any(|y| self.le(x, y)));
        Ok(match mode {
            SetOrder::Leq => leq(),
            SetOrder::Leq1 => ys.iter().all(|y| xs.iter().any(|x| self.le(x, y))),
            SetOrder::Lt => {
                leq()
                    && ys
                        .iter()
                        .any(|y| xs.iter().filter(|&x| self.le(x, y)).all(|x| self.lt(x, y)))
            }
        })
    }

    /// Length of the longest chain from bottom to `x`, counted in `<` steps.
    pub fn height(&self, x: Elem) -> Result<usize> {
        self.check(x)?;
        Ok(self.heights[x.index()])
    }

    pub(crate) fn ht(&self, x: Elem) -> usize {
        self.heights[x.index()]
    }

    pub fn extremes_by_height(&self, set: &ElemSet, which: HeightExtreme) -> Result<ElemSet> {
        self.check_set(set)?;
        if set.is_empty() {
            return Err(Error::EmptyInput("extremes_by_height"));
        }
        Ok(self.extremes_by_height_of(set, which))
    }

    pub(crate) fn extremes_by_height_of(&self, set: &ElemSet, which: HeightExtreme) -> ElemSet {
        let heights = set.iter().map(|x| self.ht(x));
        let target = match which {
            HeightExtreme::MaxHt => heights.max(),
            HeightExtreme::MinHt => heights.min(),
        };
        match target {
            Some(h) => set.iter().filter(|&x| self.ht(x) == h).collect(),
            None => ElemSet::new(),
        }
    }
}

impl fmt::Display for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({} elements)", self.name, self.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v1() -> Poset {
        build_poset::<_, &str>("v1", &["a", "b"], &[], None, None).unwrap()
    }

    #[test]
    fn free_bounds_are_adjoined() {
        let p = v1();
        assert_eq!(p.len(), 4);
        assert_eq!(p.label(p.bottom()), "_bot");
        assert_eq!(p.label(p.top()), "_top");
        let (a, b) = (p.elem("a").unwrap(), p.elem("b").unwrap());
        assert_eq!(p.order_rel(a, b).unwrap(), OrderRel::Incomparable);
        assert_eq!(p.order_rel(p.bottom(), p.top()).unwrap(), OrderRel::Lt);
        assert_eq!(p.order_rel(p.top(), a).unwrap(), OrderRel::Gt);
        assert_eq!(p.order_rel(a, a).unwrap(), OrderRel::Eq);
    }

    #[test]
    fn two_cycle_is_rejected() {
        let err = build_poset("c", &["a", "b"], &[("a", "b"), ("b", "a")], None, None).unwrap_err();
        assert_eq!(err.kind(), "CycleDetected");
        let err = build_poset("c", &["a"], &[("a", "a")], None, None).unwrap_err();
        assert_eq!(err.kind(), "CycleDetected");
    }

    #[test]
    fn build_errors() {
        let e = build_poset::<_, &str>("d", &["a", "a"], &[], None, None).unwrap_err();
        assert_eq!(e, Error::DuplicateLabel("a".into()));
        let e = build_poset("u", &["a"], &[("a", "z")], None, None).unwrap_err();
        assert_eq!(e, Error::UnknownLabel("z".into()));
        let e = build_poset::<_, &str>("u", &["a"], &[], Some("q"), None).unwrap_err();
        assert_eq!(e, Error::UnknownLabel("q".into()));
        let e = build_poset::<_, &str>("i", &["_x"], &[], None, None).unwrap_err();
        assert_eq!(e.kind(), "InvalidLabel");
        let e = build_poset::<_, &str>("i", &["a b"], &[], None, None).unwrap_err();
        assert_eq!(e.kind(), "InvalidLabel");
        let e = build_poset::<_, &str>("s", &["_bot"], &[], None, None).unwrap_err();
        assert_eq!(e, Error::DuplicateLabel("_bot".into()));
    }

    #[test]
    fn declared_bounds_are_checked() {
        let e = build_poset(
            "b",
            &["lo", "a", "hi"],
            &[("a", "lo")],
            Some("lo"),
            Some("hi"),
        )
        .unwrap_err();
        assert_eq!(e.kind(), "BoundsViolation");
        let e = build_poset(
            "b",
            &["lo", "a", "hi"],
            &[("hi", "a")],
            Some("lo"),
            Some("hi"),
        )
        .unwrap_err();
        assert_eq!(e.kind(), "BoundsViolation");
        let e = build_poset::<_, &str>("b", &["lo"], &[], Some("lo"), Some("lo")).unwrap_err();
        assert_eq!(e.kind(), "BoundsViolation");

        let p =
            build_poset::<_, &str>("b", &["lo", "a", "hi"], &[], Some("lo"), Some("hi")).unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p.label(p.bottom()), "lo");
        assert_eq!(p.display_label(p.bottom()), "lo");
        assert_eq!(p.height(p.top()).unwrap(), 2);
    }

    #[test]
    fn bounds_only_poset() {
        let p = build_poset::<&str, &str>("two", &[], &[], None, None).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.height(p.top()).unwrap(), 1);
    }

    #[test]
    fn extremes_and_filters() {
        let p = v1();
        let s = p.set_of(&["_bot", "a"]).unwrap();
        assert_eq!(
            p.extremes(&s, Extreme::Max).unwrap(),
            p.set_of(&["a"]).unwrap()
        );
        let ab = p.set_of(&["a", "b"]).unwrap();
        assert_eq!(p.extremes(&ab, Extreme::Min).unwrap(), ab);
        assert_eq!(p.extremes(&ab, Extreme::Max).unwrap(), ab);
        assert_eq!(
            p.below_filter(&ab, p.elem("a").unwrap()).unwrap(),
            p.set_of(&["a"]).unwrap()
        );
        assert_eq!(p.below_filter(&ab, p.top()).unwrap(), ab);
        assert_eq!(
            p.extremes(&ElemSet::new(), Extreme::Min).unwrap_err(),
            Error::EmptyInput("extremes")
        );
        assert_eq!(p.show(&p.all()), "{⊥,a,b,⊤}");
    }

    #[test]
    fn orthogonality() {
        let p = v1();
        let (a, b) = (p.elem("a").unwrap(), p.elem("b").unwrap());
        assert!(p.orthogonal(a, b).unwrap());
        assert!(!p.orthogonal(a, a).unwrap());
        assert!(!p.orthogonal(a, p.top()).unwrap());
        for x in p.elems() {
            assert!(p.orthogonal(x, p.bottom()).unwrap());
        }
        assert!(p.orthogonal(a, Elem::from_index(99)).is_err());
    }

    #[test]
    fn set_order_counterexample() {
        let p = build_poset("ss", &["a", "b"], &[("a", "b")], None, None).unwrap();
        let x = p.set_of(&["a", "_top"]).unwrap();
        let y = p.set_of(&["b"]).unwrap();
        assert!(p.set_compare(&x, &y, SetOrder::Leq1).unwrap());
        assert!(!p.set_compare(&x, &y, SetOrder::Leq).unwrap());
        let top = ElemSet::singleton(p.top());
        assert!(p.set_compare(&x, &top, SetOrder::Leq).unwrap());
        let a = p.set_of(&["a"]).unwrap();
        assert!(p.set_compare(&a, &y, SetOrder::Lt).unwrap());
        assert!(!p.set_compare(&y, &y, SetOrder::Lt).unwrap());
        assert!(p.set_compare(&a, &ElemSet::new(), SetOrder::Leq).is_err());
    }

    #[test]
    fn heights_follow_longest_chain() {
        // ⊥ < a < a' and b alone: incomparable a', b with different heights.
        let p = build_poset("h", &["a", "a'", "b"], &[("a", "a'")], None, None).unwrap();
        let h = |l| p.height(p.elem(l).unwrap()).unwrap();
        assert_eq!(h("_bot"), 0);
        assert_eq!(h("a'"), 2);
        assert_eq!(h("b"), 1);
        assert_eq!(h("_top"), 3);
        let s = p.set_of(&["_bot", "a", "a'", "b"]).unwrap();
        assert_eq!(
            p.extremes_by_height(&s, HeightExtreme::MaxHt).unwrap(),
            p.set_of(&["a'"]).unwrap()
        );
        assert_eq!(
            p.extremes_by_height(&s, HeightExtreme::MinHt).unwrap(),
            ElemSet::singleton(p.bottom())
        );
    }

    #[test]
    fn reduction_drops_transitive_edges() {
        let p = build_poset(
            "c",
            &["a", "b", "c"],
            &[("a", "b"), ("b", "c"), ("a", "c")],
            None,
            None,
        )
        .unwrap();
        // chain ⊥ < a < b < c < ⊤
        assert_eq!(p.reduction().len(), 4);
        assert_eq!(p.generators().len(), 3);
    }
}
