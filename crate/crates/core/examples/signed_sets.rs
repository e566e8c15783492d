//! Sup and inf labels on result sets, and how they combine with elements.

use poset_bool::signed::{signed_height, signed_join, signed_meet, signed_meet_of, signed_neg};
use poset_bool::{paper_fixture, FixtureName, SignedSet};

fn main() -> poset_bool::Result<()> {
    let p = paper_fixture(FixtureName::Supinf)?;
    let (a, b, y) = (p.elem("a")?, p.elem("b")?, p.elem("y")?);
    let m = signed_meet_of(&p, a, b)?;
    println!("a ∧ b = {} (height {})", m.show(&p), signed_height(&p, &m)?);
    let xs = p.set_of(&["x", "x'"])?;
    for s in [SignedSet::sup(xs.clone())?, SignedSet::inf(xs)?] {
        println!("{}:", s.show(&p));
        println!("  y ∧ S = {}", p.show(&signed_meet(&p, y, &s)?));
        println!("  y ∨ S = {}", p.show(&signed_join(&p, y, &s)?));
        println!("  ¬S    = {}", p.show(&signed_neg(&p, &s)?));
        println!("  ht    = {}", signed_height(&p, &s)?);
    }
    Ok(())
}
