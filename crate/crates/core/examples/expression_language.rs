//! Parsing and evaluating operator expressions.

use poset_bool::cli::{eval_expr, parse_expr};
use poset_bool::{paper_fixture, FixtureName, MeasureKind};

fn main() -> poset_bool::Result<()> {
    let p = paper_fixture(FixtureName::Pprime)?;
    for text in [
        "a' |' !'a'",
        "meetall'(a', b')",
        "!(a' \\ a)",
        "Pmu(a' |' !'a')",
        "ht(sup{a', b})",
        "indep2({a'}, {b'}, 1/2)",
    ] {
        let e = parse_expr(text)?;
        let v = eval_expr(&p, &e, MeasureKind::MaxHeight)?;
        println!("{e} = {}", v.render(&p));
    }
    Ok(())
}
