//! Interpolation super Jack polynomials, Borel highest weights, and the affine
//! maps that turn Capelli eigenvalues into polynomial evaluations.

pub mod borel;
pub mod equivalence;
pub mod error;
pub mod isjp;
pub mod linalg;
pub mod partitions;
pub mod rational;
pub mod superalg;
pub mod sympoly;
pub mod tau;
pub mod verify;
pub mod weights;

pub use borel::{BorelClass, BorelDescriptor, DeltaEpsSeq, Symbol, WeightVector};
pub use equivalence::{orbit, OrbitResult, Point};
pub use error::{CapelliError, Result};
pub use isjp::{build_isjp, InterpolationPolynomial};
pub use linalg::RationalMatrix;
pub use partitions::{enumerate_hooks, frobenius_coords, HookPartition};
pub use rational::Rational;
pub use sympoly::SparsePolynomial;
pub use tau::{AffineMap, MapChoice};
pub use verify::{Pair, SweepConfig, SweepReport};
