//! Evaluation of parsed expressions.

use crate::cli::expr::{BinOp, Expr, Func};
use crate::error::{Error, Result};
use crate::measure::{self, MeasureKind, Rational};
use crate::ops::{self, AltKind, Variant};
use crate::poset::{Elem, ElemSet, Extreme, HeightExtreme, Poset};
use crate::signed::{self, SignedSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Set(ElemSet),
    Signed(SignedSet),
    /// A probability with its unreduced fraction.
    Prob {
        value: Rational,
        num: i64,
        den: i64,
        out_of_range: bool,
    },
    Ratio(Rational),
    Int(i64),
    Bool(bool),
}

impl Value {
    /// Canonical printed form, e.g. `{⊥,a}`, `1/3 (=3/9)`, `true`.
    pub fn render(&self, p: &Poset) -> String {
        match self {
            Value::Set(s) => p.show(s),
            Value::Signed(s) => s.show(p),
            Value::Prob {
                value,
                num,
                den,
                out_of_range,
            } => {
                let mut out = value.to_string();
                if (*num, *den) != (*value.numer(), *value.denom()) {
                    out.push_str(&format!(" (={num}/{den})"));
                }
                if *out_of_range {
                    out.push_str(" [warning: outside [0,1]]");
                }
                out
            }
            Value::Ratio(r) => r.to_string(),
            Value::Int(i) => i.to_string(),
            Value::Bool(b) => b.to_string(),
        }
    }
}

fn resolve(p: &Poset, label: &str) -> Result<Elem> {
    match label {
        "⊥" => Ok(p.bottom()),
        "⊤" => Ok(p.top()),
        _ => p.elem(label),
    }
}

fn resolve_all(p: &Poset, labels: &[String]) -> Result<ElemSet> {
    labels.iter().map(|l| resolve(p, l)).collect()
}

fn describe(v: &Value) -> &'static str {
    match v {
        Value::Set(_) => "set",
        Value::Signed(_) => "signed set",
        Value::Prob { .. } => "probability",
        Value::Ratio(_) => "rational",
        Value::Int(_) => "integer",
        Value::Bool(_) => "boolean",
    }
}

fn prob_value(p: &Poset, xs: &ElemSet, kind: MeasureKind) -> Result<Value> {
    let (num, den) = measure::prob_parts(p, xs, kind)?;
    Ok(Value::Prob {
        value: Rational::new(num, den),
        num,
        den,
        out_of_range: false,
    })
}

struct Eval<'a> {
    p: &'a Poset,
    measure: MeasureKind,
}

impl Eval<'_> {
    fn eval(&self, e: &Expr) -> Result<Value> {
        let p = self.p;
        match e {
            Expr::Ident(l) => Ok(Value::Set(ElemSet::singleton(resolve(p, l)?))),
            Expr::Set(ls) => Ok(Value::Set(resolve_all(p, ls)?)),
            Expr::Signed(sign, ls) => {
                Ok(Value::Signed(SignedSet::new(*sign, resolve_all(p, ls)?)?))
            }
            Expr::Ratio(n, d) => Ok(Value::Ratio(Rational::new(*n, *d))),
            Expr::Neg(v, inner) => match self.eval(inner)? {
                Value::Signed(s) => {
                    self.unprimed(*v, "!")?;
                    Ok(Value::Set(signed::signed_neg(p, &s)?))
                }
                other => Ok(Value::Set(ops::neg_set(p, &self.set(other)?, *v)?)),
            },
            Expr::Binary(op, v, l, r) => {
                let (l, r) = (self.eval(l)?, self.eval(r)?);
                match (l, r) {
                    (Value::Signed(_), Value::Signed(_)) => {
                        Err(Error::SignedMisuse("both operands are signed".into()))
                    }
                    (Value::Signed(s), other) | (other, Value::Signed(s)) => {
                        self.signed_binary(*op, *v, &self.set(other)?, &s)
                    }
                    (l, r) => {
                        let (l, r) = (self.set(l)?, self.set(r)?);
                        Ok(Value::Set(match op {
                            BinOp::Meet => ops::set_meet(p, &l, &r, *v)?,
                            BinOp::Join => ops::set_join(p, &l, &r, *v)?,
                            BinOp::Minus => ops::set_minus(p, &l, &r, *v)?,
                        }))
                    }
                }
            }
            Expr::Call(func, args) => self.call(*func, args),
        }
    }

    fn unprimed(&self, v: Variant, op: &str) -> Result<()> {
        match v {
            Variant::Raw => Ok(()),
            _ => Err(Error::SignedMisuse(format!(
                "signed operands take only the unprimed `{op}`"
            ))),
        }
    }

    fn signed_binary(
        &self,
        op: BinOp,
        v: Variant,
        other: &ElemSet,
        s: &SignedSet,
    ) -> Result<Value> {
        let sym = match op {
            BinOp::Meet => "&",
            BinOp::Join => "|",
            BinOp::Minus => {
                return Err(Error::SignedMisuse(
                    "`\\` does not take signed operands".into(),
                ))
            }
        };
        self.unprimed(v, sym)?;
        let y = other.as_singleton().ok_or_else(|| {
            Error::SignedMisuse("the other operand of a signed set must be a single element".into())
        })?;
        Ok(Value::Set(match op {
            BinOp::Meet => signed::signed_meet(self.p, y, s)?,
            _ => signed::signed_join(self.p, y, s)?,
        }))
    }

    fn set(&self, v: Value) -> Result<ElemSet> {
        match v {
            Value::Set(s) => Ok(s),
            Value::Signed(_) => Err(Error::SignedMisuse(
                "a signed set may only be a direct operand of &, |, !, P or ht".into(),
            )),
            other => Err(Error::InvalidArgument(format!(
                "expected a set, found a {}",
                describe(&other)
            ))),
        }
    }

    fn set_arg(&self, e: &Expr) -> Result<ElemSet> {
        self.set(self.eval(e)?)
    }

    fn call(&self, func: Func, args: &[Expr]) -> Result<Value> {
        let p = self.p;
        let set = |i: usize| self.set_arg(&args[i]);
        let value = match func {
            Func::MeetAll(v) | Func::JoinAll(v) => {
                let mut elems = ElemSet::new();
                for a in args {
                    elems.extend(&self.set_arg(a)?);
                }
                let elems: Vec<Elem> = elems.iter().collect();
                Value::Set(match func {
                    Func::MeetAll(_) => ops::meet_all(p, &elems, v)?,
                    _ => ops::join_all(p, &elems, v)?,
                })
            }
            Func::Max => Value::Set(p.extremes(&set(0)?, Extreme::Max)?),
            Func::Min => Value::Set(p.extremes(&set(0)?, Extreme::Min)?),
            Func::MaxHt => Value::Set(p.extremes_by_height(&set(0)?, HeightExtreme::MaxHt)?),
            Func::MinHt => Value::Set(p.extremes_by_height(&set(0)?, HeightExtreme::MinHt)?),
            Func::Meet1 => Value::Set(ops::alt_meet(p, &set(0)?, &set(1)?, AltKind::Pairwise)?),
            Func::Meet2 => Value::Set(ops::alt_meet(p, &set(0)?, &set(1)?, AltKind::UnionBased)?),
            Func::Join1 => Value::Set(ops::alt_join(p, &set(0)?, &set(1)?, AltKind::Pairwise)?),
            Func::Join2 => Value::Set(ops::alt_join(p, &set(0)?, &set(1)?, AltKind::UnionBased)?),
            Func::Neg1 => Value::Set(ops::alt_neg1(p, &set(0)?)?),
            Func::Ht => match self.eval(&args[0])? {
                Value::Signed(s) => Value::Int(signed::signed_height(p, &s)?),
                other => Value::Int(measure::ht_of_set(p, &self.set(other)?)? as i64),
            },
            Func::P => match self.eval(&args[0])? {
                Value::Signed(s) => {
                    let sp = measure::prob_signed(p, &s)?;
                    Value::Prob {
                        value: sp.value,
                        num: signed::signed_height(p, &s)?,
                        den: p.height(p.top())? as i64,
                        out_of_range: sp.out_of_range,
                    }
                }
                other => prob_value(p, &self.set(other)?, self.measure)?,
            },
            Func::Pmu => prob_value(p, &set(0)?, MeasureKind::SumHeight)?,
            Func::Mu => Value::Int(measure::mu(p, &set(0)?)? as i64),
            Func::Indep1 => {
                Value::Bool(measure::indep_product(p, &set(0)?, &set(1)?, self.measure)?)
            }
            Func::Indep2 => {
                let alpha = match args.get(2) {
                    None => None,
                    Some(Expr::Ratio(n, d)) => Some(Rational::new(*n, *d)),
                    Some(other) => {
                        return Err(Error::InvalidArgument(format!(
                            "third argument of indep2 must be a fraction p/q, found `{other}`"
                        )))
                    }
                };
                Value::Bool(measure::indep_threshold(
                    p,
                    &set(0)?,
                    &set(1)?,
                    alpha,
                    self.measure,
                )?)
            }
        };
        Ok(value)
    }
}

/// Evaluates `e` on `p`; `P(...)` uses `measure`.
pub fn eval_expr(p: &Poset, e: &Expr, measure: MeasureKind) -> Result<Value> {
    Eval { p, measure }.eval(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{paper_fixture, FixtureName};
    use crate::cli::expr::parse_expr;

    fn run(name: FixtureName, text: &str) -> Result<String> {
        let p = paper_fixture(name).unwrap();
        let e = parse_expr(text)?;
        eval_expr(&p, &e, MeasureKind::MaxHeight).map(|v| v.render(&p))
    }

    #[test]
    fn distributivity_fails() {
        assert_eq!(run(FixtureName::Dist, "x &' (y |' z)").unwrap(), "{x}");
        assert_eq!(
            run(FixtureName::Dist, "(x &' y) |' (x &' z)").unwrap(),
            "{⊥}"
        );
    }

    #[test]
    fn signed_operands() {
        assert_eq!(run(FixtureName::Supinf, "y & inf{x,x'}").unwrap(), "{⊥,e}");
        assert_eq!(run(FixtureName::Supinf, "y | sup{x,x'}").unwrap(), "{f,⊤}");
        assert_eq!(run(FixtureName::Supinf, "sup{x,x'} | y").unwrap(), "{f,⊤}");
        assert_eq!(run(FixtureName::Supinf, "!inf{x,x'}").unwrap(), "{⊥,e'}");
        assert_eq!(run(FixtureName::Supinf, "sup{x,x'}").unwrap(), "sup{x,x'}");
        for bad in [
            "sup{a} | inf{b}",
            "y &' sup{x}",
            "y \\ sup{x}",
            "{y,e} & sup{x}",
            "!'sup{x}",
            "max(sup{x})",
        ] {
            assert_eq!(
                run(FixtureName::Supinf, bad).unwrap_err().kind(),
                "SignedMisuse",
                "{bad}"
            );
        }
    }

    #[test]
    fn probabilities() {
        assert_eq!(
            run(FixtureName::Pprime, "Pmu(a' |' !'a')").unwrap(),
            "1/3 (=3/9)"
        );
        assert_eq!(run(FixtureName::Pprime, "Pmu(a')").unwrap(), "2/9");
        assert_eq!(run(FixtureName::Pprime, "mu(a')").unwrap(), "2");
        assert_eq!(
            run(FixtureName::Supinf, "P(sup{x,x'})").unwrap(),
            "2/3 (=4/6)"
        );
        assert_eq!(
            run(FixtureName::V1, "P(sup{⊤})").unwrap(),
            "3/2 [warning: outside [0,1]]"
        );
        assert_eq!(run(FixtureName::V1, "ht(inf{⊥})").unwrap(), "-1");
        assert_eq!(run(FixtureName::Eq1a, "indep1(a, ⊥)").unwrap(), "true");
        assert_eq!(run(FixtureName::Eq1a, "indep2(a, b, 0/1)").unwrap(), "true");
        assert_eq!(
            run(FixtureName::Eq1a, "indep2(⊥, a)").unwrap_err().kind(),
            "DegenerateConditional"
        );
        assert_eq!(
            run(FixtureName::Eq1a, "indep2(a, b, b)")
                .unwrap_err()
                .kind(),
            "InvalidArgument"
        );
    }

    #[test]
    fn element_ops_coincide_with_singleton_sets() {
        let p = paper_fixture(FixtureName::Alt).unwrap();
        for x in p.elems() {
            for y in p.elems() {
                let (lx, ly) = (p.label(x), p.label(y));
                for op in ["&", "|", "\\", "&'", "|'", "\\'"] {
                    let a = parse_expr(&format!("{lx} {op} {ly}")).unwrap();
                    let b = parse_expr(&format!("{{{lx}}} {op} {{{ly}}}")).unwrap();
                    assert_eq!(
                        eval_expr(&p, &a, MeasureKind::MaxHeight),
                        eval_expr(&p, &b, MeasureKind::MaxHeight)
                    );
                }
                let direct = ops::minus(&p, x, y, Variant::Raw).unwrap();
                let e = parse_expr(&format!("{lx} \\ {ly}")).unwrap();
                assert_eq!(
                    eval_expr(&p, &e, MeasureKind::MaxHeight).unwrap(),
                    Value::Set(direct)
                );
            }
        }
    }

    #[test]
    fn errors() {
        assert_eq!(
            run(FixtureName::V1, "a & q").unwrap_err().kind(),
            "UnknownLabel"
        );
        assert_eq!(
            run(FixtureName::V1, "!{}").unwrap_err().kind(),
            "EmptyInput"
        );
        assert_eq!(
            run(FixtureName::V1, "a & 1/2").unwrap_err().kind(),
            "InvalidArgument"
        );
    }

    #[test]
    fn functions() {
        assert_eq!(run(FixtureName::V1, "meet1(⊤, {a,b})").unwrap(), "{⊥}");
        assert_eq!(run(FixtureName::V1, "join2(⊥, {a,b})").unwrap(), "{⊤}");
        assert_eq!(run(FixtureName::Alt, "neg1(b)").unwrap(), "{⊥,a}");
        assert_eq!(run(FixtureName::V1, "meetall'(a, ⊤)").unwrap(), "{a}");
        assert_eq!(run(FixtureName::V1, "max({⊥,a,b})").unwrap(), "{a,b}");
        assert_eq!(run(FixtureName::V1, "minht({a,⊤})").unwrap(), "{a}");
    }
}
