//! Constructors for worked-example posets and poset families.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::measure::Rational;
use crate::poset::{build_poset, Poset, BOTTOM_LABEL};

/// Largest atom count accepted by [`powerset_lattice`].
pub const MAX_POWERSET_ATOMS: usize = 5;

/// Label of a subset: its sorted atoms concatenated, `_bot` for the empty set.
pub fn subset_label<S: AsRef<str>>(atoms: &[S]) -> String {
    let mut atoms: Vec<&str> = atoms.iter().map(AsRef::as_ref).collect();
    atoms.sort_unstable();
    atoms.dedup();
    if atoms.is_empty() {
        BOTTOM_LABEL.to_string()
    } else {
        atoms.concat()
    }
}

fn check_atom(atom: &str) -> Result<()> {
    if atom.is_empty() || atom.starts_with('_') || atom.chars().any(char::is_whitespace) {
        return Err(Error::InvalidLabel(atom.to_string()));
    }
    Ok(())
}

/// All subsets of `atoms`, ordered by proper inclusion.
pub fn powerset_lattice<S: AsRef<str>>(atoms: &[S]) -> Result<Poset> {
    if atoms.is_empty() {
        return Err(Error::EmptyInput("powerset_lattice"));
    }
    if atoms.len() > MAX_POWERSET_ATOMS {
        return Err(Error::TooManyAtoms {
            got: atoms.len(),
            max: MAX_POWERSET_ATOMS,
        });
    }
    let mut sorted: Vec<&str> = atoms.iter().map(AsRef::as_ref).collect();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::DuplicateLabel(w[0].to_string()));
    }
    let family: Vec<Vec<&str>> = (0u32..1 << sorted.len())
        .map(|mask| {
            sorted
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, a)| *a)
                .collect()
        })
        .collect();
    Ok(subset_family_poset(&family)?.with_name(&format!("powerset({})", sorted.join(","))))
}

/// A family of atom sets ordered by proper inclusion. The least and
/// greatest members serve as bottom and top; missing bounds are synthesized.
pub fn subset_family_poset<S: AsRef<str>>(family: &[Vec<S>]) -> Result<Poset> {
    if family.is_empty() {
        return Err(Error::EmptyInput("subset_family_poset"));
    }
    let mut members: Vec<Vec<String>> = Vec::with_capacity(family.len());
    for member in family {
        let mut atoms = Vec::with_capacity(member.len());
        for atom in member {
            check_atom(atom.as_ref())?;
            atoms.push(atom.as_ref().to_string());
        }
        atoms.sort_unstable();
        atoms.dedup();
        members.push(atoms);
    }
    let labels: Vec<String> = members.iter().map(|m| subset_label(m)).collect();
    let subset = |a: &[String], b: &[String]| a.iter().all(|x| b.contains(x));

    let mut generators = Vec::new();
    for (i, a) in members.iter().enumerate() {
        for (j, b) in members.iter().enumerate() {
            if a.len() < b.len() && subset(a, b) {
                generators.push((labels[i].as_str(), labels[j].as_str()));
            }
        }
    }
    let least = members
        .iter()
        .position(|m| members.iter().all(|o| subset(m, o)));
    let greatest = members
        .iter()
        .position(|m| members.iter().all(|o| subset(o, m)));
    let greatest = greatest.filter(|&g| Some(g) != least);

    build_poset(
        "family",
        &labels,
        &generators,
        least.map(|i| labels[i].as_str()),
        greatest.map(|i| labels[i].as_str()),
    )
}

/// A chain of named values, one factor of a [`valued_product`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValuedFactor {
    labels: Vec<String>,
    values: Vec<i64>,
}

impl ValuedFactor {
    pub fn new<S: AsRef<str>>(labels: &[S], values: &[i64]) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::EmptyInput("valued factor"));
        }
        if labels.len() != values.len() {
            return Err(Error::InvalidArgument(format!(
                "{} labels but {} values",
                labels.len(),
                values.len()
            )));
        }
        if values.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidArgument(
                "factor values must be strictly increasing".into(),
            ));
        }
        for l in labels {
            check_atom(l.as_ref())?;
        }
        Ok(ValuedFactor {
            labels: labels.iter().map(|l| l.as_ref().to_string()).collect(),
            values: values.to_vec(),
        })
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }
}

/// Label of the pair `(x, y)` in a [`valued_product`].
pub fn pair_label(x: &str, y: &str) -> String {
    format!("{x}_{y}")
}

/// Pairs ordered by the sum of their values: `σ < τ` iff `Σσ < Στ`.
pub fn valued_product(f1: &ValuedFactor, f2: &ValuedFactor) -> Result<Poset> {
    let mut pairs: Vec<(String, i64)> = Vec::new();
    for (l1, v1) in f1.labels.iter().zip(&f1.values) {
        for (l2, v2) in f2.labels.iter().zip(&f2.values) {
            pairs.push((pair_label(l1, l2), v1 + v2));
        }
    }
    let lo = pairs.iter().map(|(_, s)| *s).min().unwrap_or_default();
    let hi = pairs.iter().map(|(_, s)| *s).max().unwrap_or_default();
    let unique = |target: i64, which: &'static str| -> Result<&str> {
        let mut hits = pairs.iter().filter(|(_, s)| *s == target);
        let first = hits.next().map(|(l, _)| l.as_str());
        match (first, hits.next()) {
            (Some(l), None) => Ok(l),
            _ => Err(Error::AmbiguousBounds(which)),
        }
    };
    let bottom = unique(lo, "minimal")?;
    let top = unique(hi, "maximal")?;

    let generators: Vec<(&str, &str)> = pairs
        .iter()
        .flat_map(|(a, sa)| {
            pairs
                .iter()
                .filter(move |(_, sb)| sa < sb)
                .map(move |(b, _)| (a.as_str(), b.as_str()))
        })
        .collect();
    let labels: Vec<&str> = pairs.iter().map(|(l, _)| l.as_str()).collect();
    build_poset("product", &labels, &generators, Some(bottom), Some(top))
}

/// Catalogue of the worked-example posets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FixtureName {
    V1,
    Alt,
    Dist,
    Nn,
    Orth,
    Htv,
    Supinf,
    Schnitt1,
    Schnitt2,
    Eq1a,
    Eq1b,
    Eq1c,
    Pprime,
    SeqUnit,
    SeqWeighted,
    RemarkSs,
}

impl FixtureName {
    pub const ALL: [FixtureName; 16] = [
        FixtureName::V1,
        FixtureName::Alt,
        FixtureName::Dist,
        FixtureName::Nn,
        FixtureName::Orth,
        FixtureName::Htv,
        FixtureName::Supinf,
        FixtureName::Schnitt1,
        FixtureName::Schnitt2,
        FixtureName::Eq1a,
        FixtureName::Eq1b,
        FixtureName::Eq1c,
        FixtureName::Pprime,
        FixtureName::SeqUnit,
        FixtureName::SeqWeighted,
        FixtureName::RemarkSs,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FixtureName::V1 => "v1",
            FixtureName::Alt => "alt",
            FixtureName::Dist => "dist",
            FixtureName::Nn => "nn",
            FixtureName::Orth => "orth",
            FixtureName::Htv => "htv",
            FixtureName::Supinf => "supinf",
            FixtureName::Schnitt1 => "schnitt1",
            FixtureName::Schnitt2 => "schnitt2",
            FixtureName::Eq1a => "eq1a",
            FixtureName::Eq1b => "eq1b",
            FixtureName::Eq1c => "eq1c",
            FixtureName::Pprime => "pprime",
            FixtureName::SeqUnit => "seq_unit",
            FixtureName::SeqWeighted => "seq_weighted",
            FixtureName::RemarkSs => "remark_ss",
        }
    }
}

impl fmt::Display for FixtureName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FixtureName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FixtureName::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| Error::UnknownFixture(s.to_string()))
    }
}

fn plain(name: &str, elems: &[&str], lts: &[(&str, &str)]) -> Result<Poset> {
    build_poset(name, elems, lts, None, None)
}

fn family(name: &str, members: &[&[&str]]) -> Result<Poset> {
    let members: Vec<Vec<&str>> = members.iter().map(|m| m.to_vec()).collect();
    Ok(subset_family_poset(&members)?.with_name(name))
}

/// Chains listed for the two-sided sup/inf example, as consecutive pairs.
const SUPINF_CHAINS: &[&[&str]] = &[
    &["e", "c", "x", "a", "f"],
    &["e", "d", "x'", "b", "f"],
    &["c", "x'", "a"],
    &["d", "x", "b"],
    &["e", "y", "f"],
    &["e'", "x'", "f'"],
    &["e'", "y", "f'"],
];

/// Builds one worked-example poset.
pub fn paper_fixture(name: FixtureName) -> Result<Poset> {
    let name_str = name.as_str();
    match name {
        FixtureName::V1 | FixtureName::Eq1a => plain(name_str, &["a", "b"], &[]),
        FixtureName::Alt => plain(name_str, &["a", "b", "c", "d"], &[("d", "b"), ("d", "c")]),
        FixtureName::Dist => plain(name_str, &["x", "y", "z"], &[]),
        FixtureName::Nn => plain(name_str, &["x", "x'", "y"], &[("x", "x'")]),
        FixtureName::Orth => plain(
            name_str,
            &["a", "b", "c", "ab"],
            &[("a", "ab"), ("b", "ab")],
        ),
        FixtureName::Htv => plain(name_str, &["a", "b", "b'", "c"], &[("b", "b'")]),
        FixtureName::Supinf => {
            let lts: Vec<(&str, &str)> = SUPINF_CHAINS
                .iter()
                .flat_map(|chain| chain.windows(2).map(|w| (w[0], w[1])))
                .collect();
            plain(
                name_str,
                &["a", "b", "c", "d", "x", "x'", "y", "e", "e'", "f", "f'"],
                &lts,
            )
        }
        FixtureName::Schnitt1 => family(
            name_str,
            &[
                &[],
                &["a"],
                &["a", "a'"],
                &["c"],
                &["c", "c'"],
                &["a", "a'", "b"],
                &["b", "c", "c'"],
                &["b"],
                &["a", "a'", "b", "c", "c'"],
            ],
        ),
        FixtureName::Schnitt2 => family(
            name_str,
            &[
                &[],
                &["a", "b"],
                &["a", "a'", "b"],
                &["a", "a'"],
                &["b", "b'"],
                &["a", "a'", "b", "b'"],
            ],
        ),
        FixtureName::Eq1b => family(
            name_str,
            &[
                &[],
                &["a"],
                &["b", "d"],
                &["a", "b", "c"],
                &["a", "b", "c", "d"],
            ],
        ),
        FixtureName::Eq1c => family(
            name_str,
            &[
                &[],
                &["a"],
                &["a", "a'"],
                &["b"],
                &["b", "b'"],
                &["a", "a'", "b", "b'"],
            ],
        ),
        FixtureName::Pprime => plain(
            name_str,
            &["a", "a'", "b", "b'"],
            &[("a", "a'"), ("b", "b'")],
        ),
        FixtureName::SeqUnit => {
            let f1 = ValuedFactor::new(&["0", "1"], &[0, 1])?;
            let f2 = ValuedFactor::new(&["0'", "1'"], &[0, 1])?;
            Ok(valued_product(&f1, &f2)?.with_name(name_str))
        }
        FixtureName::SeqWeighted => {
            let f1 = ValuedFactor::new(&["0", "2"], &[0, 2])?;
            let f2 = ValuedFactor::new(&["0'", "1'"], &[0, 1])?;
            Ok(valued_product(&f1, &f2)?.with_name(name_str))
        }
        FixtureName::RemarkSs => plain(name_str, &["a", "b"], &[("a", "b")]),
    }
}

/// Every fixture, in catalogue order.
pub fn all_fixtures() -> Vec<Poset> {
    FixtureName::ALL
        .into_iter()
        .map(|f| paper_fixture(f).expect("fixtures are well-formed"))
        .collect()
}

/// Deterministic random poset on `n` inner elements `v0, v1, ...`.
///
/// Each forward pair `(vi, vj)`, `i < j`, becomes a generator with
/// probability `density`; bounds are synthesized.
pub fn random_poset(n: usize, density: Rational, seed: u64) -> Result<Poset> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "random poset needs at least 2 elements, got {n}"
        )));
    }
    if *density.numer() < 0 || density > Rational::from_integer(1) {
        return Err(Error::InvalidArgument(format!(
            "density {density} outside [0, 1]"
        )));
    }
    let width = (n - 1).to_string().len();
    let labels: Vec<String> = (0..n).map(|i| format!("v{i:0width$}")).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (num, den) = (*density.numer(), *density.denom());
    let mut generators = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_range(0..den) < num {
                generators.push((labels[i].as_str(), labels[j].as_str()));
            }
        }
    }
    build_poset(
        &format!("random({n},{density},{seed})"),
        &labels,
        &generators,
        None,
        None,
    )
}
