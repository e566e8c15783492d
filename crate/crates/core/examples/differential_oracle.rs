//! Random queries answered by the library and by a naive reference.

use poset_bool::oracle::{differential_check, differential_check_with, prime_to_raw_fault};
use poset_bool::{random_poset, Rational};

fn main() -> poset_bool::Result<()> {
    let p = random_poset(8, Rational::new(1, 3), 42)?;
    let r = differential_check(&p, 42, 500);
    println!(
        "{}: {} cases, {} mismatches",
        p.name(),
        r.cases,
        r.mismatches.len()
    );
    let r = differential_check_with(&p, 42, 500, prime_to_raw_fault);
    println!("with an injected fault: {} mismatches", r.mismatches.len());
    if let Some(m) = r.mismatches.first() {
        println!("  first: {}", m.query.show(&p));
    }
    Ok(())
}
