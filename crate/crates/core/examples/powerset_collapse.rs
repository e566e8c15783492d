//! On a powerset lattice every operator variant agrees with set algebra.

use poset_bool::oracle::lattice_oracle_check;

fn main() -> poset_bool::Result<()> {
    let atoms = ["a", "b", "c", "d"];
    for k in 1..=atoms.len() {
        let r = lattice_oracle_check(&atoms[..k])?;
        println!(
            "{k} atoms: {} pairs, {} mismatches",
            r.cases,
            r.mismatches.len()
        );
    }
    Ok(())
}
