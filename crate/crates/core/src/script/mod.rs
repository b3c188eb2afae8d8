//! The `.icl` ideal-calculus language.
//!
//! ```text
//! ring S = poly(p=2; T,X,Y,Z)
//! let P = ideal(T*Y - X*Z, T^2*X - Z^2, T*X^2 - Y*Z, X^3 - Y^2)
//! let Q = ideal(T, X, Y)
//! check equal(meet(P, Q), ideal(T*Y - X*Z, T*X^2 - Y*Z, X^3 - Y^2, T^3*X - T*Z^2))
//! ring R = S / meet(P, Q) with primes [P, Q]
//! report structural(ideal(Z, X - T), unmixed)
//! ```
//!
//! A `ring` statement either starts a polynomial ring or takes a quotient of an
//! earlier ring; the latest one is the active context. Ideals are stored by
//! ambient representatives. `equal` and `member` compare modulo the defining
//! ideal, and `meet`, `colon`, `bracket` and `dc` compute preimages of the
//! corresponding operations in the quotient.

mod ast;
mod lexer;
mod parser;
mod runner;
mod scenarios;

use thiserror::Error;

use crate::error::Error;

pub use ast::{Arg, CheckKind, Expr, Pos, ReportKind, RingBase, Script, Statement, Stmt};
pub use lexer::{lex, Tok, Token};
pub use parser::parse_script;
pub use runner::{run_script, CheckRecord, Entry, ReportDocument, RunOptions};
pub use scenarios::{repro, scenario_source, SCENARIOS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScriptError {
    #[error("{line}:{col}: syntax error: {message}")]
    Syntax {
        line: usize,
        col: usize,
        message: String,
    },
    #[error("{line}:{col}: `{name}` is already bound")]
    DuplicateBinding { line: usize, col: usize, name: String },
    #[error("{line}:{col}: unknown identifier `{name}`")]
    UnknownIdentifier { line: usize, col: usize, name: String },
    #[error("{line}:{col}: {source}")]
    Eval {
        line: usize,
        col: usize,
        source: Error,
    },
    #[error("unknown scenario `{0}`; available: badintersect, badcolon, contain-demo, cmdvr-demo")]
    UnknownScenario(String),
}

impl ScriptError {
    /// Process exit code: 2 for usage and parse errors, 3 for evaluation errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            ScriptError::Eval { .. } => 3,
            _ => 2,
        }
    }
}
