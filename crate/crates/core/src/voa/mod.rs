//! Vertex operator algebra inputs: root-system invariants, small Lie
//! algebras, and C2-algebra builders.

pub mod builders;
pub mod lie;
pub mod roots;

pub use builders::{affine_c2, cpq, direct_sum_c2, tensor_c2, virasoro_c2, C2Presentation, DirectSum, Provenance, VirasoroMode};
pub use lie::LieAlgebraBasis;
pub use roots::{weyl_nk, RootSystem, RootType, WeylNk};
