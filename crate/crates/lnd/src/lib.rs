//! Exact computer algebra for locally nilpotent derivations of polynomial
//! rings over the rationals.
//!
//! The crate provides sparse exact polynomial arithmetic, a Buchberger
//! Groebner engine with subalgebra membership, derivations with nilpotency
//! certificates, exponential automorphisms and coordinate-system checks,
//! kernel exploration tools, and certificate harnesses over a bundled
//! example corpus. Every check is an exact identity; there is no floating
//! point anywhere.
//!
//! See the `examples/` directory for one runnable walkthrough per major
//! capability, and the `lnd` binary for the command-line front end.

pub mod error;
pub mod ring;
pub mod order;
pub mod poly;
pub mod parse;
pub mod groebner;
pub mod derivation;
pub mod automorphism;
pub mod linalg;
pub mod kernel;
pub mod specfile;
pub mod rigidity;
pub mod cli;

pub use error::{Error, Result};
pub use order::MonomialOrder;
pub use parse::parse;
pub use poly::{Monomial, Polynomial, Rational};
pub use ring::RingSpec;
pub use groebner::{GbLimits, GroebnerBasis, MembershipCertificate, SubalgebraTester};
pub use derivation::{Derivation, LndCertified, LndCheck, NilpotencyOutcome, NilpotencyWitness};
pub use rigidity::{
    load_corpus, rigidity_harness, run_corpus, triangulability_harness, Basis, CorpusBudgets,
    CorpusItem, CorpusReport, Expectation, RigidityHarnessReport, TriangulabilityHarnessReport,
};
pub use specfile::SpecFile;
pub use kernel::{
    dixmier_image, find_local_slice, kernel_basis_up_to_degree, kernel_generator_rounds,
    DixmierImage, KernelBasis, LocalSlice, RoundsOptions, RoundsOutcome,
};
pub use automorphism::{
    check_coordinate_system, check_rigidity_pair, exp, in_gamma_d, rank_upper_bound, CoordCheck,
    CoordinateCertificate, Endomorphism, GammaCheck, NonRigidityCertificate, RigidityVerdict,
};