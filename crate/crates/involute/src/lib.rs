//! Minimal Janet involutive bases of polynomial ideals over Q.
//!
//! The library computes minimal involutive bases for the Janet division
//! (which are in particular Gröbner bases) with three interchangeable
//! algorithms, collects per-run reduction statistics, and ships an
//! independent conventional Buchberger oracle for verifying every output.
//!
//! ```
//! use involute::engine::{vargerdt, CriteriaConfig};
//! use involute::sysfile::parse_system;
//!
//! let sys = parse_system("vars: x y\norder: degrevlex\nx^2\ny^2\n").unwrap();
//! let run = vargerdt(&sys.polynomials, &CriteriaConfig::c1_c2(), None).unwrap();
//! assert_eq!(run.basis.len(), 3);
//! ```

pub mod engine;
pub mod janet;
pub mod oracle;
pub mod order;
pub mod poly;
pub mod report;
pub mod systems;
pub mod sysfile;
pub mod verify;

pub use engine::{BasisRun, CriteriaConfig, EngineTimeout, RunStats};
pub use janet::{check_division_axioms, AxiomReport, JanetPartition, VarSet};
pub use order::MonomialOrder;
pub use poly::{Coefficient, Monomial, Polynomial, Term, VariableContext};
pub use verify::VerificationReport;
