//! Text front end: the poset file format, the expression language, DOT
//! export and the `posetbool` subcommands.

pub mod command;
pub mod doc;
pub mod dot;
pub mod eval;
pub mod expr;

pub use command::{run_command, Outcome};
pub use doc::{parse_poset_text, PosetDoc};
pub use dot::render_dot;
pub use eval::{eval_expr, Value};
pub use expr::{parse_expr, Expr};
