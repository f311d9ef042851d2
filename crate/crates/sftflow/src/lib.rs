//! Invariants of two-sided topological Markov shifts presented by 0-1
//! matrices: Parry-Sullivan determinants, Bowen-Franks groups, spectral
//! fingerprints, discrete suspensions, bilateral dimension groups, and
//! shift-equivalence certificates, all in exact integer arithmetic.

pub mod certificates;
pub mod dimension;
pub mod files;
pub mod intlin;
pub mod invariants;
pub mod markov;
pub mod report;
pub mod suspension;

pub use certificates::{ElementaryEquivalence, FlowMove, SeCertificate};
pub use dimension::{DimElement, QuadElement};
pub use intlin::{IntMatrix, IntPolynomial, SmithDecomposition};
pub use invariants::{AbelianGroup, SpectrumFingerprint};
pub use markov::{BinMatrix, WordPresentation};
pub use suspension::CeilingFunction;
