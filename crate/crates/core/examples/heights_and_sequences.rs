//! Heights on valued products of chains.

use poset_bool::builders::{valued_product, ValuedFactor};
use poset_bool::{paper_fixture, FixtureName};

fn main() -> poset_bool::Result<()> {
    for name in [FixtureName::SeqUnit, FixtureName::SeqWeighted] {
        let p = paper_fixture(name)?;
        println!("{name}:");
        for x in p.elems() {
            println!("  {} {}", p.display_label(x), p.height(x)?);
        }
    }
    let f1 = ValuedFactor::new(&["lo", "mid", "hi"], &[0, 1, 3])?;
    let f2 = ValuedFactor::new(&["off", "on"], &[0, 2])?;
    let p = valued_product(&f1, &f2)?;
    println!("custom product, ht(⊤) = {}", p.height(p.top())?);
    Ok(())
}
