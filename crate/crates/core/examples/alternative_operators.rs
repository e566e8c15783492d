//! The two rejected set operators next to the adopted ones.

use poset_bool::ops::{alt_join, alt_meet, alt_neg1, neg_set, set_join, set_meet};
use poset_bool::{paper_fixture, AltKind, FixtureName, Variant};

fn main() -> poset_bool::Result<()> {
    let p = paper_fixture(FixtureName::Alt)?;
    let xs = p.set_of(&["b", "c"])?;
    let ys = p.set_of(&["c", "a"])?;
    println!("X = {}, Y = {}", p.show(&xs), p.show(&ys));
    println!(
        "adopted    X ∧ Y = {}",
        p.show(&set_meet(&p, &xs, &ys, Variant::Prime)?)
    );
    println!(
        "adopted    X ∨ Y = {}",
        p.show(&set_join(&p, &xs, &ys, Variant::Prime)?)
    );
    for kind in [AltKind::Pairwise, AltKind::UnionBased] {
        let name = format!("{kind:?}");
        println!(
            "{name:<10} X ∧ Y = {}",
            p.show(&alt_meet(&p, &xs, &ys, kind)?)
        );
        println!(
            "{name:<10} X ∨ Y = {}",
            p.show(&alt_join(&p, &xs, &ys, kind)?)
        );
    }
    let b = p.set_of(&["b"])?;
    println!(
        "¬{{b}}             = {}",
        p.show(&neg_set(&p, &b, Variant::Raw)?)
    );
    println!(
        "¬₁¬₁{{b}}          = {}",
        p.show(&alt_neg1(&p, &alt_neg1(&p, &b)?)?)
    );
    Ok(())
}
