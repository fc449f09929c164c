//! A small expression language for classes and characteristic numbers.
//!
//! `(1+c)^3*(1+c+c^2+d)` denotes a class; `x [P(2,7)]`, `x [RP(n)]` and
//! `x [RPnu]` evaluate `x` on a fundamental class. Integers are read mod 2,
//! `binom(n,r)` is the mod-2 binomial coefficient and `p/q` means `p*1/q`,
//! with the inverse truncated at the ambient dimension.

mod ast;
mod eval;
mod parser;

pub use ast::{Expr, Space, Symbol};
pub use eval::{eval_class, eval_expr, evaluate, Env, Scenario, Value};
pub use parser::parse;
