//! Verification front end for the `skewalg` engines: element parsing,
//! subcommand runners and JSON reports.

pub mod commands;
pub mod expr;
pub mod quat;
pub mod report;

pub use expr::{parse_expr, ExprAst, ParseError};
pub use quat::{parse_quat, parse_rational};
pub use report::{Check, Report, Status};
