//! Generalized Boolean operations on finite partial orders.
//!
//! A [`Poset`] is built from labels and `<` generators and always carries a
//! bottom `⊥` and a top `⊤`. On such an order the meet, join and complement
//! of elements may fail to exist, so the operators in [`ops`] return sets of
//! candidates, refined by a [`Variant`]. [`signed`] keeps track of whether a
//! candidate set stands for a supremum or an infimum. [`measure`] turns
//! element heights into exact probabilities.
//!
//! ```
//! use poset_bool::{build_poset, ops, Variant};
//!
//! let p = build_poset::<_, &str>("v", &["a", "b"], &[], None, None).unwrap();
//! let a = p.set_of(&["a"]).unwrap();
//! let not_a = ops::neg_set(&p, &a, Variant::Prime).unwrap();
//! assert_eq!(p.show(&not_a), "{b}");
//! ```

pub mod builders;
pub mod cli;
pub mod error;
pub mod measure;
pub mod ops;
pub mod oracle;
pub mod poset;
pub mod signed;

pub use builders::{paper_fixture, powerset_lattice, random_poset, FixtureName};
pub use error::{Error, Result};
pub use measure::{MeasureKind, Rational};
pub use ops::{AltKind, Variant};
pub use poset::{build_poset, Elem, ElemSet, Extreme, HeightExtreme, OrderRel, Poset, SetOrder};
pub use signed::{Sign, SignedSet};
