//! Graph colouring and monomial-ideal machinery for studying critical graphs
//! and the associated primes of powers of cover ideals.
//!
//! * [`graph`]: simple graphs, vertex expansion, `s`-th expansion, Mycielski
//!   graphs, independent sets and isomorphism.
//! * [`coloring`]: exact `χ`, criticality, `χ_b` and `χ_f`.
//! * [`ideal`]: monomial ideals, cover ideals, powers, membership and
//!   irredundant irreducible decompositions.
//! * [`correspondence`]: checks linking decompositions of `J(G)^s` to
//!   critical subgraphs of `G^s`, persistence of associated primes, and the
//!   search for expansions that raise the chromatic number.
//! * [`cli`]: graph input formats and report serialisation for the binary.

pub mod cli;
pub mod coloring;
pub mod correspondence;
pub mod error;
pub mod graph;
pub mod ideal;

pub use error::{Error, Result};
