use asp_core::{is_answer_set, lfp, reduct, Interpretation, Program};

use crate::OracleError;

/// Largest number of guessed atoms the enumeration accepts.
pub const NAIVE_ATOM_LIMIT: usize = 22;

/// Every answer set, by brute force over the atoms that occur under negation.
/// The reduct only depends on those, so each guess fixes one candidate, the
/// least model of its reduct, which is kept when it reproduces the guess and
/// passes the full stability check. Guesses are visited in lexicographic
/// order with the smallest atom id as the leading bit.
pub fn enumerate_naive(p: &Program) -> Result<Vec<Interpretation>, OracleError> {
    let mut negated: Vec<usize> = p.rules().iter().flat_map(|r| r.neg.iter().copied()).collect();
    negated.sort_unstable();
    negated.dedup();
    if negated.len() > NAIVE_ATOM_LIMIT {
        return Err(OracleError::TooManyAtoms { atoms: negated.len(), limit: NAIVE_ATOM_LIMIT });
    }
    let k = negated.len();
    let mut out = Vec::new();
    for bits in 0u32..(1u32 << k) {
        let chosen = |i: usize| bits >> (k - 1 - i) & 1 == 1;
        let guess = Interpretation::from_atoms(
            p.num_atoms(),
            negated.iter().enumerate().filter(|&(i, _)| chosen(i)).map(|(_, &a)| a),
        );
        let m = lfp(&reduct(p, &guess));
        let reproduces = negated.iter().enumerate().all(|(i, &a)| m.contains(a) == chosen(i));
        if reproduces && is_answer_set(p, &m) {
            out.push(m);
        }
    }
    Ok(out)
}
