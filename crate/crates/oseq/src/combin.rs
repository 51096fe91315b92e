//! Binomial coefficients and colexicographic ranking of k-subsets.
//!
//! Subsets are ranked in colex order: {c₁ < … < c_t} comes before
//! {c′₁ < … < c′_t} iff the largest differing element is smaller. Rank 0 is
//! the subset of the t smallest elements. Colex is used because the rank has
//! a closed form (Σ C(cᵢ, i)), which makes splitting a search space into
//! disjoint rank ranges trivial. The choice of order is an internal contract;
//! only determinism is promised to callers.

use num_bigint::BigUint;

use crate::{Error, Result};

/// C(n, k) as an exact `u128`, or `None` on overflow.
pub fn binomial(n: usize, k: usize) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut c: u128 = 1;
    for i in 1..=k {
        // (c * (n - k + i)) is divisible by i at every step.
        c = c.checked_mul((n - k + i) as u128)? / i as u128;
    }
    Some(c)
}

/// C(n, k) saturating to `u128::MAX` on overflow. Handy in unranking loops
/// where an overflowing value only ever needs to compare greater.
fn binomial_sat(n: usize, k: usize) -> u128 {
    binomial(n, k).unwrap_or(u128::MAX)
}

/// C(n, k) as an exact big integer.
pub fn binomial_big(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    num_integer::binomial(BigUint::from(n), BigUint::from(k))
}

/// C(n, k) where the pool size itself may be astronomically large.
pub fn binomial_over_big(n: &BigUint, k: usize) -> BigUint {
    let kb = BigUint::from(k);
    if kb > *n {
        return BigUint::from(0u32);
    }
    let mut c = BigUint::from(1u32);
    for i in 1..=k {
        // (c * (n - k + i)) is divisible by i at every step.
        c = c * (n - &kb + BigUint::from(i)) / BigUint::from(i);
    }
    c
}

/// Colex rank of a strictly increasing 0-based combination.
pub(crate) fn rank_colex0(combo: &[usize]) -> u128 {
    combo
        .iter()
        .enumerate()
        .map(|(i, &c)| binomial_sat(c, i + 1))
        .sum()
}

/// Inverse of [`rank_colex0`]: the 0-based t-subset of [0, n) at `rank`.
pub(crate) fn unrank_colex0(mut rank: u128, n: usize, t: usize) -> Vec<usize> {
    let mut combo = vec![0; t];
    let mut c = n;
    for i in (1..=t).rev() {
        loop {
            c -= 1;
            if binomial_sat(c, i) <= rank {
                break;
            }
        }
        combo[i - 1] = c;
        rank -= binomial_sat(c, i);
    }
    combo
}

/// Advances `combo` to its colex successor within [0, n). Returns false when
/// `combo` was the last combination.
pub(crate) fn next_colex0(combo: &mut [usize], n: usize) -> bool {
    let t = combo.len();
    for i in 0..t {
        let ceiling = if i + 1 < t { combo[i + 1] } else { n };
        if combo[i] + 1 < ceiling {
            combo[i] += 1;
            for (j, slot) in combo[..i].iter_mut().enumerate() {
                *slot = j;
            }
            return true;
        }
    }
    false
}

/// The t-subset of {1, …, n} at the given colex rank.
pub fn unrank_combination(rank: u128, n: usize, t: usize) -> Result<Vec<usize>> {
    let total = binomial(n, t).ok_or(Error::SpaceTooLarge { n, t })?;
    if rank >= total {
        return Err(Error::RankOutOfRange { rank, n, t });
    }
    Ok(unrank_colex0(rank, n, t).into_iter().map(|c| c + 1).collect())
}

/// Colex rank of a subset of {1, …, n}; inverse of [`unrank_combination`].
pub fn rank_combination(combo: &[usize], n: usize) -> Result<u128> {
    let mut sorted = combo.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != combo.len() {
        return Err(Error::ParameterRange("combination has repeats".into()));
    }
    for &c in &sorted {
        if c == 0 || c > n {
            return Err(Error::VertexOutOfRange { label: c, max: n });
        }
    }
    let zero_based: Vec<usize> = sorted.iter().map(|&c| c - 1).collect();
    Ok(rank_colex0(&zero_based))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2), Some(6));
        assert_eq!(binomial(84, 6), Some(406_481_544));
        assert_eq!(binomial(9, 3), Some(84));
        assert_eq!(binomial(3, 5), Some(0));
        assert_eq!(binomial(0, 0), Some(1));
        assert_eq!(binomial(200, 100), None);
    }

    #[test]
    fn binomial_big_matches_small() {
        for n in 0..20 {
            for k in 0..=n {
                assert_eq!(binomial_big(n, k), BigUint::from(binomial(n, k).unwrap()));
                assert_eq!(binomial_over_big(&BigUint::from(n), k), binomial_big(n, k));
            }
        }
        assert_eq!(
            binomial_over_big(&BigUint::from(84u32), 6),
            BigUint::from(406_481_544u64)
        );
        assert_eq!(binomial_over_big(&BigUint::from(3u32), 5), BigUint::from(0u32));
    }

    #[test]
    fn unrank_endpoints() {
        assert_eq!(unrank_combination(0, 4, 2).unwrap(), vec![1, 2]);
        assert_eq!(unrank_combination(5, 4, 2).unwrap(), vec![3, 4]);
        assert!(unrank_combination(6, 4, 2).is_err());
    }

    #[test]
    fn rank_unrank_roundtrip_exhaustive() {
        let total = binomial(6, 3).unwrap();
        let mut seen = Vec::new();
        for rank in 0..total {
            let combo = unrank_combination(rank, 6, 3).unwrap();
            assert_eq!(rank_combination(&combo, 6).unwrap(), rank);
            seen.push(combo);
        }
        seen.dedup();
        assert_eq!(seen.len() as u128, total);
    }

    #[test]
    fn successor_agrees_with_unrank() {
        let (n, t) = (7, 3);
        let mut combo: Vec<usize> = (0..t).collect();
        let mut rank = 0u128;
        loop {
            assert_eq!(combo, unrank_colex0(rank, n, t));
            assert_eq!(rank_colex0(&combo), rank);
            if !next_colex0(&mut combo, n) {
                break;
            }
            rank += 1;
        }
        assert_eq!(rank + 1, binomial(n, t).unwrap());
    }

    #[test]
    fn rank_rejects_bad_input() {
        assert!(rank_combination(&[1, 1], 4).is_err());
        assert!(rank_combination(&[0, 2], 4).is_err());
        assert!(rank_combination(&[2, 5], 4).is_err());
    }
}
