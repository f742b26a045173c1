//! Exact homomorphism counting, polymatroid polytopes, rational linear
//! programming and homomorphism domination exponents, with a verification
//! harness for the Erdős–Simonovits walk inequalities.

pub mod error;
pub mod graph;
pub mod hde;
pub mod hom;
pub mod lab;
pub mod lp;
pub mod polymatroid;
pub mod rational;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use hde::{compute_hde, HdeResult};
pub use hom::{count_homs, enumerate_homs, walk_count, Homomorphism};
pub use lp::{LinearProgram, LpOutcome, LpStatus};
pub use polymatroid::SetFunction;
pub use rational::{BigCount, Rational};
