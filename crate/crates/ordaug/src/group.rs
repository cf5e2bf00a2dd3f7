use std::fmt;

use cnf::Assignment;
use serde::Serialize;

use crate::{factorial, rank_perm, unrank_perm, Mode, OrdError};

pub type GroupId = usize;
pub type VertexId = u32;

/// One end of an ordering edge. Sources and destinations are per block;
/// in plain mode every group has exactly one block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Endpoint {
    Vertex(VertexId),
    Source { group: GroupId, block: usize },
    Dest { group: GroupId, block: usize },
}

impl Endpoint {
    /// Text name; block suffixes appear only when orderings are blocked.
    pub fn label(self, mode: Mode) -> String {
        let blocked = matches!(mode, Mode::RPrime { .. });
        match self {
            Endpoint::Vertex(v) => format!("v{v}"),
            Endpoint::Source { group, block } if blocked => format!("s{}_{}", group + 1, block + 1),
            Endpoint::Dest { group, block } if blocked => format!("d{}_{}", group + 1, block + 1),
            Endpoint::Source { group, .. } => format!("s{}", group + 1),
            Endpoint::Dest { group, .. } => format!("d{}", group + 1),
        }
    }
}

/// A total order on each block of a group, in block order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ordering {
    blocks: Vec<Vec<VertexId>>,
}

impl Ordering {
    pub fn new(blocks: Vec<Vec<VertexId>>) -> Self {
        Ordering { blocks }
    }

    pub fn blocks(&self) -> &[Vec<VertexId>] {
        &self.blocks
    }

    /// All vertices, block by block.
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.blocks.iter().flatten().copied()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.blocks.iter().any(|b| b.contains(&v))
    }

    /// Immediate predecessor of `v` inside its block.
    pub fn predecessor(&self, v: VertexId) -> Option<VertexId> {
        self.blocks.iter().find_map(|b| {
            let i = b.iter().position(|&x| x == v)?;
            i.checked_sub(1).map(|j| b[j])
        })
    }

    pub fn firsts(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.blocks.iter().filter_map(|b| b.first().copied())
    }

    pub fn lasts(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.blocks.iter().filter_map(|b| b.last().copied())
    }

    /// The directed path of each block from its source through its vertices
    /// to its destination.
    pub fn successor_edges(&self, group: GroupId) -> Vec<(Endpoint, Endpoint)> {
        let mut out = Vec::new();
        for (j, block) in self.blocks.iter().enumerate() {
            let mut prev = Endpoint::Source { group, block: j };
            for &v in block {
                out.push((prev, Endpoint::Vertex(v)));
                prev = Endpoint::Vertex(v);
            }
            out.push((prev, Endpoint::Dest { group, block: j }));
        }
        out
    }
}

impl fmt::Display for Ordering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|v| format!("v{v}")).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "<{}>", parts.join("|"))
    }
}

/// The ordering vertices of one equal-bag region and the bijection between
/// their orderings and the assignments of the bag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderingGroup {
    id: GroupId,
    bag: Vec<u32>,
    blocks: Vec<Vec<VertexId>>,
    mode: Mode,
}

impl OrderingGroup {
    /// Sizes the group for `bag` and numbers its vertices from `first_vertex`.
    pub fn new(id: GroupId, bag: Vec<u32>, first_vertex: VertexId, mode: Mode) -> Result<Self, OrdError> {
        let (k, iota) = match mode {
            Mode::R => {
                let k = crate::group_size(bag.len());
                (k, k.max(1))
            }
            Mode::RPrime { iota } => (crate::group_size_iota(bag.len(), iota)?.0, iota),
        };
        let vertices: Vec<VertexId> = (0..k as u32).map(|i| first_vertex + i).collect();
        let blocks = vertices.chunks(iota).map(<[VertexId]>::to_vec).collect();
        Ok(OrderingGroup { id, bag, blocks, mode })
    }

    pub fn id(&self) -> GroupId {
        self.id
    }

    pub fn bag(&self) -> &[u32] {
        &self.bag
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn blocks(&self) -> &[Vec<VertexId>] {
        &self.blocks
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.blocks.iter().flatten().copied()
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.blocks.iter().any(|b| b.contains(&v))
    }

    pub fn block_of(&self, v: VertexId) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(&v))
    }

    pub fn source(&self, block: usize) -> Endpoint {
        Endpoint::Source { group: self.id, block }
    }

    pub fn dest(&self, block: usize) -> Endpoint {
        Endpoint::Dest { group: self.id, block }
    }

    /// Number of orderings: the product of the block factorials.
    pub fn num_orderings(&self) -> u64 {
        self.blocks
            .iter()
            .map(|b| factorial(b.len()))
            .try_fold(1u64, u64::checked_mul)
            .unwrap_or(u64::MAX)
    }

    /// Number of orderings that encode an assignment.
    pub fn num_defined(&self) -> u64 {
        1u64.checked_shl(self.bag.len() as u32).unwrap_or(u64::MAX).min(self.num_orderings())
    }

    /// Mixed-radix unranking; block 0 is the most significant digit.
    pub fn ordering(&self, rank: u64) -> Result<Ordering, OrdError> {
        let count = self.num_orderings();
        if rank >= count {
            return Err(OrdError::RankOutOfRange { rank, count });
        }
        let mut rest = rank;
        let mut blocks = vec![Vec::new(); self.blocks.len()];
        for (j, block) in self.blocks.iter().enumerate().rev() {
            let radix = factorial(block.len());
            let perm = unrank_perm(rest % radix, block.len())?;
            rest /= radix;
            blocks[j] = perm.into_iter().map(|i| block[i]).collect();
        }
        Ok(Ordering { blocks })
    }

    pub fn rank(&self, ordering: &Ordering) -> Result<u64, OrdError> {
        if ordering.blocks.len() != self.blocks.len() {
            return Err(OrdError::ForeignOrdering(self.id));
        }
        let mut rank = 0u64;
        for (block, ord) in self.blocks.iter().zip(&ordering.blocks) {
            let positions: Option<Vec<usize>> =
                ord.iter().map(|v| block.iter().position(|b| b == v)).collect();
            let positions = positions.ok_or(OrdError::ForeignOrdering(self.id))?;
            if positions.len() != block.len() {
                return Err(OrdError::ForeignOrdering(self.id));
            }
            let r = rank_perm(&positions).map_err(|_| OrdError::ForeignOrdering(self.id))?;
            rank = rank * factorial(block.len()) + r;
        }
        Ok(rank)
    }

    pub fn orderings(&self) -> impl Iterator<Item = Ordering> + '_ {
        (0..self.num_orderings()).map(|r| self.ordering(r).expect("rank in range"))
    }

    /// The assignment encoded by `rank`, or `None` past the defined range.
    pub fn assignment_of_rank(&self, rank: u64) -> Option<Assignment> {
        if rank >= self.num_defined() || (self.bag.len() < 64 && rank >> self.bag.len() != 0) {
            return None;
        }
        Some(Assignment::from_pairs(
            self.bag.iter().enumerate().map(|(j, &x)| (x, (rank >> j) & 1 == 1)),
        ))
    }

    pub fn assignment_of(&self, ordering: &Ordering) -> Result<Option<Assignment>, OrdError> {
        Ok(self.assignment_of_rank(self.rank(ordering)?))
    }

    /// Inverse of [`Self::assignment_of`]; only the bag variables are read.
    pub fn rank_of_assignment(&self, assignment: &Assignment) -> Result<u64, OrdError> {
        let mut rank = 0u64;
        for (j, &x) in self.bag.iter().enumerate() {
            if assignment.get(x).map_err(|_| OrdError::MissingVariable(x))? {
                rank |= 1 << j;
            }
        }
        Ok(rank)
    }

    pub fn ordering_of(&self, assignment: &Assignment) -> Result<Ordering, OrdError> {
        self.ordering(self.rank_of_assignment(assignment)?)
    }
}
