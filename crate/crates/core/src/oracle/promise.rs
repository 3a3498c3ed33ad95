use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Domains up to this size get the full pair scan.
const PAIR_SCAN_LIMIT: usize = 512;

/// Domains up to this size check every point against its label's representative.
const LINEAR_SCAN_LIMIT: usize = 4096;

/// Random pairs drawn when the pair scan is too expensive.
pub const PROMISE_RANDOM_PAIRS: usize = 10_000;

/// Check `label(x) == label(y) ⇔ same(x, y)`.
///
/// Small domains are scanned pair by pair. Larger ones check points (all of
/// them up to a few thousand, a random sample beyond) against the first
/// point seen with the same label, then draw random pairs of points and of
/// class representatives.
pub fn check_partition_promise(
    domain: usize,
    label: impl Fn(usize) -> u64,
    same: impl Fn(usize, usize) -> bool,
    seed: u64,
) -> Result<()> {
    let violation = |x: usize, y: usize| {
        Err(Error::PromiseViolation(format!(
            "points {x} and {y} disagree between oracle labels and the hidden object"
        )))
    };
    if domain <= PAIR_SCAN_LIMIT {
        let labels: Vec<u64> = (0..domain).map(&label).collect();
        for x in 0..domain {
            for y in x..domain {
                if (labels[x] == labels[y]) != same(x, y) {
                    return violation(x, y);
                }
            }
        }
        return Ok(());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut first: HashMap<u64, usize> = HashMap::new();
    let mut reps = Vec::new();
    let mut check_rep = |x: usize, l: u64| {
        let r = *first.entry(l).or_insert_with(|| {
            reps.push(x);
            x
        });
        same(x, r).then_some(()).ok_or((x, r))
    };
    if domain <= LINEAR_SCAN_LIMIT {
        for x in 0..domain {
            if let Err((a, b)) = check_rep(x, label(x)) {
                return violation(a, b);
            }
        }
    } else {
        for _ in 0..PROMISE_RANDOM_PAIRS {
            let x = rng.gen_range(0..domain);
            if let Err((a, b)) = check_rep(x, label(x)) {
                return violation(a, b);
            }
        }
    }
    for _ in 0..PROMISE_RANDOM_PAIRS {
        let (x, y) = (rng.gen_range(0..domain), rng.gen_range(0..domain));
        if (label(x) == label(y)) != same(x, y) {
            return violation(x, y);
        }
        if reps.len() > 1 {
            let (a, b) = (reps[rng.gen_range(0..reps.len())], reps[rng.gen_range(0..reps.len())]);
            if a != b && same(a, b) {
                return violation(a, b);
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_matching_partitions() {
        check_partition_promise(100, |x| (x % 4) as u64, |x, y| x % 4 == y % 4, 1).unwrap();
        check_partition_promise(5000, |x| (x % 4) as u64, |x, y| x % 4 == y % 4, 1).unwrap();
    }

    #[test]
    fn rejects_coarser_and_finer_labels() {
        assert!(check_partition_promise(100, |x| (x % 2) as u64, |x, y| x % 4 == y % 4, 1).is_err());
        assert!(check_partition_promise(100, |x| (x % 8) as u64, |x, y| x % 4 == y % 4, 1).is_err());
        assert!(check_partition_promise(5000, |x| (x % 2) as u64, |x, y| x % 4 == y % 4, 1).is_err());
        assert!(check_partition_promise(5000, |x| (x % 8) as u64, |x, y| x % 4 == y % 4, 1).is_err());
    }
}
