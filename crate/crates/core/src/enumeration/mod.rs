//! Exhaustive enumeration of ASMs and the censuses built on it.

pub mod atlas;
pub mod census;
pub mod classify;
pub mod search;

pub use atlas::{group_atlas, group_atlas_from, product_partners, AtlasGroup, PartnerScope, GroupAtlas, IdentityClass};
pub use census::{
    idempotent_census, idempotent_census_from, square_root_census, square_root_census_from,
    IdempotentCensus, IdempotentRecord, ReducedKind, SquareRootCensus, SquareRootEntry,
};
pub use classify::{classify, ClassificationReport, FiniteOrderAsm};
pub use search::{enumerate_asms, shards, AsmEnumerator};
