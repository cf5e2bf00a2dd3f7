//! Ordering machinery: bag-to-group sizing, permutation ranking, the
//! bijection between orderings and bag assignments, and the
//! ordering-augmented tree decomposition with its per-node edge shares.

mod augment;
mod group;
mod perm;
mod sizing;

pub use augment::{
    assign_edges, augment, build, AugNode, AugNodeId, OrdRef, OrderingAugmentedTd, Origin,
    Pred, DEFAULT_NODE_CAP,
};
pub use group::{Endpoint, GroupId, Ordering, OrderingGroup, VertexId};
pub use perm::{factorial, rank_perm, unrank_perm};
pub use sizing::{group_size, group_size_iota};

use thiserror::Error;

/// How orderings are formed: one total order per group, or independent total
/// orders on consecutive blocks of at most `iota` vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    R,
    RPrime { iota: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrdError {
    #[error("rank {rank} out of range for {count} permutations")]
    RankOutOfRange { rank: u64, count: u64 },
    #[error("not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("block size must be at least 2, got {0}")]
    IotaTooSmall(usize),
    #[error("ordering does not match the vertices of group {0}")]
    ForeignOrdering(GroupId),
    #[error("assignment lacks bag variable {0}")]
    MissingVariable(u32),
    #[error("estimated {estimated} augmented nodes exceed the cap of {cap}")]
    TooLarge { estimated: u128, cap: u128 },
}
