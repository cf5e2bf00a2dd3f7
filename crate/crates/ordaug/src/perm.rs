use crate::OrdError;

/// `n!`, saturating at `u64::MAX`.
pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).try_fold(1u64, |acc, i| acc.checked_mul(i)).unwrap_or(u64::MAX)
}

/// Lexicographic rank of a permutation of `0..perm.len()` via its Lehmer code.
pub fn rank_perm(perm: &[usize]) -> Result<u64, OrdError> {
    let n = perm.len();
    let mut used = vec![false; n];
    let mut rank = 0u64;
    for (i, &p) in perm.iter().enumerate() {
        if p >= n || used[p] {
            return Err(OrdError::NotAPermutation(n));
        }
        let smaller_unused = used[..p].iter().filter(|u| !**u).count() as u64;
        rank += smaller_unused * factorial(n - 1 - i);
        used[p] = true;
    }
    Ok(rank)
}

/// Inverse of [`rank_perm`].
pub fn unrank_perm(rank: u64, n: usize) -> Result<Vec<usize>, OrdError> {
    let count = factorial(n);
    if rank >= count {
        return Err(OrdError::RankOutOfRange { rank, count });
    }
    let mut pool: Vec<usize> = (0..n).collect();
    let mut rest = rank;
    let mut out = Vec::with_capacity(n);
    for i in (0..n).rev() {
        let f = factorial(i);
        let digit = (rest / f) as usize;
        rest %= f;
        out.push(pool.remove(digit));
    }
    Ok(out)
}
