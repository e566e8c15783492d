//! Height-based probabilities and the two independence tests.

use poset_bool::measure::{indep_product, indep_threshold, prob, prob_parts};
use poset_bool::{paper_fixture, FixtureName, MeasureKind};

fn main() -> poset_bool::Result<()> {
    let p = paper_fixture(FixtureName::Pprime)?;
    for labels in [&["a"][..], &["a'"], &["a'", "b"], &["b'"]] {
        let xs = p.set_of(labels)?;
        for kind in [MeasureKind::MaxHeight, MeasureKind::SumHeight] {
            let (n, d) = prob_parts(&p, &xs, kind)?;
            println!(
                "P{:?}({}) = {} ({n}/{d})",
                kind,
                p.show(&xs),
                prob(&p, &xs, kind)?
            );
        }
    }
    let a = p.set_of(&["a'"])?;
    let b = p.set_of(&["b'"])?;
    let kind = MeasureKind::MaxHeight;
    println!(
        "product independence:   {}",
        indep_product(&p, &a, &b, kind)?
    );
    println!(
        "threshold independence: {}",
        indep_threshold(&p, &a, &b, None, kind)?
    );
    Ok(())
}
