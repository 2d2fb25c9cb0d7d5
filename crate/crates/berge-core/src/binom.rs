//! Exact integer combinatorics. All threshold comparisons elsewhere in the
//! crate are done with cross-multiplied integers, so these helpers must never
//! round and never wrap silently.

use crate::error::{Error, Result};

/// Binomial coefficient C(n, k), exact, with `C(n, k) = 0` for `k > n`.
///
/// Overflow of the `u64` result (or of the `u128` intermediates) is reported
/// as [`Error::Overflow`] rather than wrapping.
pub fn binom(n: u64, k: u64) -> Result<u64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc
            .checked_mul((n - i) as u128)
            .ok_or(Error::Overflow("binomial coefficient"))?;
        // Exact: C(n,i) * (n-i) = C(n,i+1) * (i+1).
        acc /= (i + 1) as u128;
    }
    u64::try_from(acc).map_err(|_| Error::Overflow("binomial coefficient"))
}

/// All k-subsets of {0, .., n-1} in lexicographic order.
pub fn subsets_lex(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // advance to the next k-subset
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// All k-subsets of the given ground set, in lexicographic order of positions.
pub fn subsets_of<T: Copy>(items: &[T], k: usize) -> Vec<Vec<T>> {
    subsets_lex(items.len(), k)
        .into_iter()
        .map(|ix| ix.into_iter().map(|i| items[i]).collect())
        .collect()
}
