//! Text round trip and Graphviz output of a poset.

use poset_bool::cli::{parse_poset_text, render_dot, PosetDoc};

const TEXT: &str = "\
poset chain_and_fork
elem a b c d
lt a b
lt b c
lt a d
";

fn main() -> poset_bool::Result<()> {
    let p = parse_poset_text(TEXT)?.build()?;
    print!("{}", PosetDoc::from_poset(&p));
    print!("{}", render_dot(&p));
    Ok(())
}
