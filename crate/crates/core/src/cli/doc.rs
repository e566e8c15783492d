//! Line-oriented poset files.
//!
//! ```text
//! # comment
//! poset v1
//! elem a b
//! lt a b
//! ```
//!
//! `bottom L` and `top L` name declared bounds; without them `_bot` and
//! `_top` are adjoined. Labels given as bounds need not be repeated in an
//! `elem` line.

use std::fmt;

use crate::error::{Error, Result};
use crate::poset::{build_poset, Poset, BOTTOM_LABEL, TOP_LABEL};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PosetDoc {
    pub name: String,
    pub bottom: Option<String>,
    pub top: Option<String>,
    pub elems: Vec<String>,
    pub lts: Vec<(String, String)>,
}

fn syntax(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        col,
        msg: msg.into(),
    }
}

/// Whitespace-separated words with their 1-based character columns.
fn words(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (col, (i, c)) in line.char_indices().enumerate() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some((col + 1, i)),
            (true, Some((scol, si))) => {
                out.push((scol, &line[si..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some((scol, si)) = start {
        out.push((scol, &line[si..]));
    }
    out
}

pub fn parse_poset_text(text: &str) -> Result<PosetDoc> {
    let mut doc = PosetDoc::default();
    let mut seen_name = false;
    for (n, raw) in text.lines().enumerate() {
        let line_no = n + 1;
        let line = raw.split('#').next().unwrap_or("");
        let ws = words(line);
        let Some(&(kcol, keyword)) = ws.first() else {
            continue;
        };
        let args = &ws[1..];
        let end_col = line.chars().count() + 1;
        let exactly = |k: usize| -> Result<()> {
            match args.len().cmp(&k) {
                std::cmp::Ordering::Equal => Ok(()),
                std::cmp::Ordering::Less => Err(syntax(
                    line_no,
                    end_col,
                    format!("`{keyword}` expects {k} argument(s)"),
                )),
                std::cmp::Ordering::Greater => Err(syntax(
                    line_no,
                    args[k].0,
                    format!("unexpected `{}` after `{keyword}`", args[k].1),
                )),
            }
        };
        match keyword {
            "poset" => {
                if seen_name {
                    return Err(syntax(line_no, kcol, "second `poset` line"));
                }
                let Some(&(col, _)) = args.first() else {
                    return Err(syntax(line_no, end_col, "`poset` expects a name"));
                };
                let start = line.char_indices().nth(col - 1).map_or(0, |(i, _)| i);
                doc.name = line[start..].trim_end().to_string();
                seen_name = true;
            }
            "bottom" | "top" => {
                exactly(1)?;
                let slot = if keyword == "bottom" {
                    &mut doc.bottom
                } else {
                    &mut doc.top
                };
                if slot.is_some() {
                    return Err(syntax(line_no, kcol, format!("second `{keyword}` line")));
                }
                *slot = Some(args[0].1.to_string());
            }
            "elem" => {
                if args.is_empty() {
                    return Err(syntax(
                        line_no,
                        end_col,
                        "`elem` expects at least one label",
                    ));
                }
                doc.elems.extend(args.iter().map(|(_, w)| w.to_string()));
            }
            "lt" => {
                exactly(2)?;
                doc.lts.push((args[0].1.to_string(), args[1].1.to_string()));
            }
            other => {
                return Err(syntax(line_no, kcol, format!("unknown keyword `{other}`")));
            }
        }
    }
    if !seen_name {
        return Err(syntax(1, 1, "missing `poset NAME` line"));
    }
    Ok(doc)
}

impl PosetDoc {
    pub fn build(&self) -> Result<Poset> {
        let mut elems = self.elems.clone();
        for bound in [&self.bottom, &self.top].into_iter().flatten() {
            if !elems.contains(bound) {
                elems.push(bound.clone());
            }
        }
        build_poset(
            &self.name,
            &elems,
            &self.lts,
            self.bottom.as_deref(),
            self.top.as_deref(),
        )
    }

    /// Canonical description: declared bounds, inner elements, and the cover
    /// edges between inner elements.
    pub fn from_poset(p: &Poset) -> Self {
        let declared =
            |label: &str, synthetic: &str| (label != synthetic).then(|| label.to_string());
        let (b, t) = (p.bottom(), p.top());
        PosetDoc {
            name: p.name().to_string(),
            bottom: declared(p.label(b), BOTTOM_LABEL),
            top: declared(p.label(t), TOP_LABEL),
            elems: p
                .elems()
                .filter(|&e| e != b && e != t)
                .map(|e| p.label(e).to_string())
                .collect(),
            lts: p
                .reduction()
                .iter()
                .filter(|&&(x, y)| x != b && y != t)
                .map(|&(x, y)| (p.label(x).to_string(), p.label(y).to_string()))
                .collect(),
        }
    }
}

impl fmt::Display for PosetDoc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "poset {}", self.name)?;
        if let Some(b) = &self.bottom {
            writeln!(f, "bottom {b}")?;
        }
        if let Some(t) = &self.top {
            writeln!(f, "top {t}")?;
        }
        if !self.elems.is_empty() {
            writeln!(f, "elem {}", self.elems.join(" "))?;
        }
        for (x, y) in &self.lts {
            writeln!(f, "lt {x} {y}")?;
        }
        Ok(())
    }
}
