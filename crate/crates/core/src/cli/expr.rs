//! Expression language over a poset.
//!
//! ```text
//! expr    := term ( '|' suffix term )*
//! term    := unary ( ('&' | '\') suffix unary )*
//! unary   := '!' suffix unary | primary
//! primary := ident | '{' labels '}' | ('sup' | 'inf') '{' labels '}'
//!          | ident '(' args ')' | int '/' int | '(' expr ')'
//! suffix  := '' | "'" | "''"
//! ```
//!
//! The suffix selects the [`Variant`]: none for raw, `'` for maximal or
//! minimal elements, `''` for height-extremal ones.

use std::fmt;

use crate::error::{Error, Result};
use crate::ops::Variant;
use crate::signed::Sign;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Meet,
    Join,
    Minus,
}

impl BinOp {
    fn symbol(self) -> &'static str {
        match self {
            BinOp::Meet => "&",
            BinOp::Join => "|",
            BinOp::Minus => "\\",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Func {
    MeetAll(Variant),
    JoinAll(Variant),
    Max,
    Min,
    MaxHt,
    MinHt,
    Meet1,
    Meet2,
    Join1,
    Join2,
    Neg1,
    Ht,
    P,
    Pmu,
    Mu,
    Indep1,
    Indep2,
}

impl Func {
    fn from_name(name: &str) -> Option<Func> {
        Some(match name {
            "meetall" => Func::MeetAll(Variant::Raw),
            "meetall'" => Func::MeetAll(Variant::Prime),
            "meetall''" => Func::MeetAll(Variant::HtPrime),
            "joinall" => Func::JoinAll(Variant::Raw),
            "joinall'" => Func::JoinAll(Variant::Prime),
            "joinall''" => Func::JoinAll(Variant::HtPrime),
            "max" => Func::Max,
            "min" => Func::Min,
            "maxht" => Func::MaxHt,
            "minht" => Func::MinHt,
            "meet1" => Func::Meet1,
            "meet2" => Func::Meet2,
            "join1" => Func::Join1,
            "join2" => Func::Join2,
            "neg1" => Func::Neg1,
            "ht" => Func::Ht,
            "P" => Func::P,
            "Pmu" => Func::Pmu,
            "mu" => Func::Mu,
            "indep1" => Func::Indep1,
            "indep2" => Func::Indep2,
            _ => return None,
        })
    }

    pub fn name(self) -> String {
        let primed = |base: &str, v: Variant| format!("{base}{}", suffix(v));
        match self {
            Func::MeetAll(v) => primed("meetall", v),
            Func::JoinAll(v) => primed("joinall", v),
            Func::Max => "max".into(),
            Func::Min => "min".into(),
            Func::MaxHt => "maxht".into(),
            Func::MinHt => "minht".into(),
            Func::Meet1 => "meet1".into(),
            Func::Meet2 => "meet2".into(),
            Func::Join1 => "join1".into(),
            Func::Join2 => "join2".into(),
            Func::Neg1 => "neg1".into(),
            Func::Ht => "ht".into(),
            Func::P => "P".into(),
            Func::Pmu => "Pmu".into(),
            Func::Mu => "mu".into(),
            Func::Indep1 => "indep1".into(),
            Func::Indep2 => "indep2".into(),
        }
    }

    fn arity(self) -> (&'static str, fn(usize) -> bool) {
        match self {
            Func::MeetAll(_) | Func::JoinAll(_) => ("at least 1", |n| n >= 1),
            Func::Meet1 | Func::Meet2 | Func::Join1 | Func::Join2 | Func::Indep1 => {
                ("2", |n| n == 2)
            }
            Func::Indep2 => ("2 or 3", |n| n == 2 || n == 3),
            _ => ("1", |n| n == 1),
        }
    }
}

fn suffix(v: Variant) -> &'static str {
    match v {
        Variant::Raw => "",
        Variant::Prime => "'",
        Variant::HtPrime => "''",
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    /// A label, read as a singleton set.
    Ident(String),
    Set(Vec<String>),
    Signed(Sign, Vec<String>),
    Ratio(i64, i64),
    Neg(Variant, Box<Expr>),
    Binary(BinOp, Variant, Box<Expr>, Box<Expr>),
    Call(Func, Vec<Expr>),
}

/// Fully parenthesized; parses back to the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Ident(s) => f.write_str(s),
            Expr::Set(labels) => write!(f, "{{{}}}", labels.join(",")),
            Expr::Signed(sign, labels) => write!(f, "{sign}{{{}}}", labels.join(",")),
            Expr::Ratio(n, d) => write!(f, "{n}/{d}"),
            Expr::Neg(v, e) => write!(f, "!{}{e}", suffix(*v)),
            Expr::Binary(op, v, l, r) => write!(f, "({l} {}{} {r})", op.symbol(), suffix(*v)),
            Expr::Call(func, args) => {
                write!(f, "{}(", func.name())?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Word(String),
    Op(char, Variant),
    LParen,
    RParen,
    LBrace,
    RBrace,
    Comma,
    Slash,
}

fn is_word_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\'' || c == '⊥' || c == '⊤'
}

fn err(col: usize, msg: impl Into<String>) -> Error {
    Error::Syntax {
        line: 1,
        col,
        msg: msg.into(),
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '{' => Tok::LBrace,
            '}' => Tok::RBrace,
            ',' => Tok::Comma,
            '/' => Tok::Slash,
            '&' | '|' | '\\' | '!' => {
                let mut primes = 0;
                while chars.get(i + 1 + primes) == Some(&'\'') {
                    primes += 1;
                }
                let v = match primes {
                    0 => Variant::Raw,
                    1 => Variant::Prime,
                    2 => Variant::HtPrime,
                    _ => return Err(err(col, format!("too many primes after `{c}`"))),
                };
                i += primes;
                Tok::Op(c, v)
            }
            c if is_word_char(c) && c != '\'' => {
                let start = i;
                while i + 1 < chars.len() && is_word_char(chars[i + 1]) {
                    i += 1;
                }
                Tok::Word(chars[start..=i].iter().collect())
            }
            c => return Err(err(col, format!("unexpected character `{c}`"))),
        };
        out.push((col, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(c, _)| *c)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<()> {
        if self.peek() == Some(&want) {
            self.pos += 1;
            Ok(())
        } else {
            Err(err(self.col(), format!("expected {what}")))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        while let Some(&Tok::Op('|', v)) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            lhs = Expr::Binary(BinOp::Join, v, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            let (op, v) = match self.peek() {
                Some(&Tok::Op('&', v)) => (BinOp::Meet, v),
                Some(&Tok::Op('\\', v)) => (BinOp::Minus, v),
                _ => return Ok(lhs),
            };
            self.pos += 1;
            let rhs = self.unary()?;
            lhs = Expr::Binary(op, v, Box::new(lhs), Box::new(rhs));
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if let Some(&Tok::Op('!', v)) = self.peek() {
            self.pos += 1;
            return Ok(Expr::Neg(v, Box::new(self.unary()?)));
        }
        self.primary()
    }

    fn labels(&mut self) -> Result<Vec<String>> {
        self.expect(Tok::LBrace, "`{`")?;
        let mut labels = Vec::new();
        if self.peek() == Some(&Tok::RBrace) {
            self.pos += 1;
            return Ok(labels);
        }
        loop {
            match self.bump() {
                Some(Tok::Word(w)) => labels.push(w),
                _ => {
                    return Err(err(
                        self.toks.get(self.pos - 1).map_or(self.end, |t| t.0),
                        "expected a label",
                    ))
                }
            }
            match self.bump() {
                Some(Tok::Comma) => continue,
                Some(Tok::RBrace) => return Ok(labels),
                _ => {
                    return Err(err(
                        self.toks.get(self.pos - 1).map_or(self.end, |t| t.0),
                        "expected `,` or `}`",
                    ))
                }
            }
        }
    }

    fn primary(&mut self) -> Result<Expr> {
        let col = self.col();
        match self.peek().cloned() {
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(e)
            }
            Some(Tok::LBrace) => Ok(Expr::Set(self.labels()?)),
            Some(Tok::Word(w)) => {
                self.pos += 1;
                match (w.as_str(), self.peek()) {
                    ("sup", Some(Tok::LBrace)) => Ok(Expr::Signed(Sign::Sup, self.labels()?)),
                    ("inf", Some(Tok::LBrace)) => Ok(Expr::Signed(Sign::Inf, self.labels()?)),
                    (_, Some(Tok::LParen)) => self.call(&w, col),
                    (_, Some(Tok::Slash)) if w.chars().all(|c| c.is_ascii_digit()) => {
                        self.pos += 1;
                        let dcol = self.col();
                        let den = match self.bump() {
                            Some(Tok::Word(d)) if d.chars().all(|c| c.is_ascii_digit()) => d,
                            _ => return Err(err(dcol, "expected a denominator")),
                        };
                        let parse =
                            |s: &str, c| s.parse::<i64>().map_err(|_| err(c, "number too large"));
                        let (n, d) = (parse(&w, col)?, parse(&den, dcol)?);
                        if d == 0 {
                            return Err(err(dcol, "zero denominator"));
                        }
                        Ok(Expr::Ratio(n, d))
                    }
                    _ => Ok(Expr::Ident(w)),
                }
            }
            Some(_) => Err(err(col, "expected an operand")),
            None => Err(err(col, "unexpected end of expression")),
        }
    }

    fn call(&mut self, name: &str, col: usize) -> Result<Expr> {
        let func =
            Func::from_name(name).ok_or_else(|| err(col, format!("unknown function `{name}`")))?;
        self.expect(Tok::LParen, "`(`")?;
        let mut args = Vec::new();
        if self.peek() != Some(&Tok::RParen) {
            loop {
                args.push(self.expr()?);
                if self.peek() == Some(&Tok::Comma) {
                    self.pos += 1;
                } else {
                    break;
                }
            }
        }
        self.expect(Tok::RParen, "`)` or `,`")?;
        let (expected, ok) = func.arity();
        if !ok(args.len()) {
            return Err(Error::Arity {
                func: func.name(),
                expected,
                got: args.len(),
            });
        }
        Ok(Expr::Call(func, args))
    }
}

pub fn parse_expr(text: &str) -> Result<Expr> {
    let toks = lex(text)?;
    let end = text.chars().count() + 1;
    let mut parser = Parser { toks, pos: 0, end };
    let e = parser.expr()?;
    if parser.pos < parser.toks.len() {
        return Err(err(parser.col(), "unexpected trailing input"));
    }
    Ok(e)
}
