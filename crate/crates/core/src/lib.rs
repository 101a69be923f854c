//! Exact arithmetic on alternating sign matrices and the singular groups they form.
//!
//! `IntMatrix` accessors are 0-based. Everything else that names a position
//! (permutation one-line notation, deleted or inserted diagonal positions,
//! frame and T-block coordinates, violation reports) is 1-based.

pub mod asm;
pub mod constructions;
pub mod enumeration;
pub mod error;
pub mod format;
pub mod group;
pub mod linalg;
pub mod matrix;
pub mod order;
pub mod permutation;

#[cfg(test)]
mod fixtures;

pub use asm::{check_asm, is_asm, Asm, AsmViolation, ReducedForm};
pub use error::{Error, Result};
pub use constructions::{
    build_e_k, build_frame, build_symmetric_group_generators, build_symmetric_group_low_rank,
    expand_center, kronecker_group, recognize_frame, shares_identity, t_block_decomposition, theta_embed,
    FrameMeta, FrameVariant, FramedAsm, TBlock,
};
pub use enumeration::{classify, enumerate_asms, group_atlas, ClassificationReport};
pub use group::{closure, idempotent_orbit, lift_to_linear_group, GroupFingerprint, Side, SingularGroup};
pub use matrix::{permutation_matrix, IntMatrix};
pub use order::{detect_order, FiniteOrderInfo, NoOrderReason, OrderBounds, OrderVerdict};
pub use permutation::Permutation;
