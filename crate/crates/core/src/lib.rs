//! Frobenius numbers of the weight semigroups attached to pairs of odd
//! primes, and genera of surfaces carrying cyclic group actions of
//! square-free odd order.

pub mod arith;
pub mod covering;
pub mod error;
pub mod harness;
pub mod oracle;
pub mod pairmodel;
pub mod witness;

pub use covering::{BranchingTuple, CoveringInstance, NuOutcome};
pub use error::{Error, Result};
pub use oracle::{AperyTable, SemigroupInstance};
pub use pairmodel::{Landmarks, PairClass, Prediction, PrimePair, Quadruple, Reason, Weights};
pub use witness::{GaBranch, GbBranch, KernelBasis, ParamTriple};
