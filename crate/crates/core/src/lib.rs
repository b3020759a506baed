//! Irreducibility certificates for integer polynomials.
//!
//! A polynomial is certified irreducible over the rationals by a prime-power
//! condition on its coefficients together with a proof that every complex zero
//! lies outside a disk of integer radius. Certificates are exact and can be
//! replayed; a Kronecker factorizer serves as an independent ground truth for
//! small degrees.

pub mod cli;
pub mod criteria;
pub mod families;
pub mod numtheory;
pub mod oracle;
pub mod poly;
pub mod root_bounds;

pub use criteria::{
    auto_search, check_theorem_1, check_theorem_2, check_theorem_a, check_theorem_b, replay,
    Certificate, CriterionOutcome, Hypothesis, SearchOptions, Theorem,
};
pub use oracle::{kronecker_factor, FactorizationWitness, KroneckerOutcome};
pub use poly::Polynomial;
pub use root_bounds::{certify_outside, RootBoundProof, RootBoundVerdict};
