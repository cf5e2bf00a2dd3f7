use crate::{factorial, OrdError};

/// Smallest `k` with `k! >= 2^bag_size`.
pub fn group_size(bag_size: usize) -> usize {
    if bag_size == 0 {
        return 0;
    }
    let target = 2f64.powi(bag_size as i32).log2();
    let mut k = 0usize;
    let mut log_fact = 0f64;
    // Work in log space so large bags do not overflow.
    while log_fact + 1e-9 < target {
        k += 1;
        log_fact += (k as f64).log2();
    }
    k
}

/// Smallest `k` such that splitting `k` vertices into consecutive blocks of
/// `iota` (the last one possibly shorter) gives at least `2^bag_size`
/// combined orderings. Returns `(k, number_of_blocks)`.
pub fn group_size_iota(bag_size: usize, iota: usize) -> Result<(usize, usize), OrdError> {
    if iota < 2 {
        return Err(OrdError::IotaTooSmall(iota));
    }
    let target = bag_size as f64;
    let mut k = 0usize;
    while log2_block_orderings(k, iota) + 1e-9 < target {
        k += 1;
    }
    Ok((k, k.div_ceil(iota)))
}

fn log2_block_orderings(k: usize, iota: usize) -> f64 {
    let full = (k / iota) as f64 * log2_factorial(iota);
    full + log2_factorial(k % iota)
}

fn log2_factorial(n: usize) -> f64 {
    if n <= 20 {
        (factorial(n) as f64).log2()
    } else {
        (2..=n).map(|i| (i as f64).log2()).sum()
    }
}
