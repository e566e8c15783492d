//! Graphviz export of the Hasse diagram.

use std::fmt::Write;

use crate::poset::Poset;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Cover edges only, drawn bottom to top, nodes in canonical order.
pub fn render_dot(p: &Poset) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph {} {{", quote(p.name()));
    let _ = writeln!(out, "  rankdir=BT;");
    let _ = writeln!(out, "  {{ rank=source; {}; }}", quote(p.label(p.bottom())));
    let _ = writeln!(out, "  {{ rank=sink; {}; }}", quote(p.label(p.top())));
    for e in p.elems() {
        let (id, shown) = (p.label(e), p.display_label(e));
        if id == shown {
            let _ = writeln!(out, "  {};", quote(id));
        } else {
            let _ = writeln!(out, "  {} [label={}];", quote(id), quote(shown));
        }
    }
    for &(x, y) in p.reduction() {
        let _ = writeln!(out, "  {} -> {};", quote(p.label(x)), quote(p.label(y)));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{paper_fixture, FixtureName};
    use crate::poset::build_poset;

    #[test]
    fn v1_has_four_nodes_and_edges() {
        let dot = render_dot(&paper_fixture(FixtureName::V1).unwrap());
        assert_eq!(dot.matches(" -> ").count(), 4);
        assert_eq!(
            dot.lines()
                .filter(|l| l.trim_start().starts_with('"') && !l.contains("->"))
                .count(),
            4
        );
        assert!(dot.contains("\"_bot\" [label=\"⊥\"];"));
    }

    #[test]
    fn chain_has_n_minus_one_edges() {
        let p = build_poset(
            "chain",
            &["a", "b", "c"],
            &[("a", "b"), ("b", "c")],
            None,
            None,
        )
        .unwrap();
        assert_eq!(render_dot(&p).matches(" -> ").count(), p.len() - 1);
    }

    #[test]
    fn supinf_cover_edges() {
        let dot = render_dot(&paper_fixture(FixtureName::Supinf).unwrap());
        assert!(dot.contains("\"e\" -> \"c\";"));
        assert!(!dot.contains("\"e\" -> \"x\";"));
    }
}
