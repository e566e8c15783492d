//! Meet, join and negation on the four-element diamond, in each variant.

use poset_bool::ops::{join_all, meet_all, minus, neg_set};
use poset_bool::{paper_fixture, ElemSet, FixtureName, Variant};

fn main() -> poset_bool::Result<()> {
    let p = paper_fixture(FixtureName::V1)?;
    let (a, b) = (p.elem("a")?, p.elem("b")?);
    for v in [Variant::Raw, Variant::Prime, Variant::HtPrime] {
        println!("{v:?}");
        println!("  a ∧ b = {}", p.show(&meet_all(&p, &[a, b], v)?));
        println!("  a ∨ b = {}", p.show(&join_all(&p, &[a, b], v)?));
        println!(
            "  ¬a    = {}",
            p.show(&neg_set(&p, &ElemSet::singleton(a), v)?)
        );
        println!("  a ∖ b = {}", p.show(&minus(&p, a, b, v)?));
    }
    Ok(())
}
