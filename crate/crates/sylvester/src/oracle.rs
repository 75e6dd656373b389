//! Dynamic-programming ground truth.
//!
//! Everything the closed forms produce is validated against these tables:
//! plain coin-counting built from the recursion
//! W(s, d^k) = W(s−d_k, d^k) + W(s, d^(k−1)), and exact power-series
//! expansion of rational generating functions N(t)/Π(1 − t^{d_l}).

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::partset::PartSet;

/// DP table of partition counts W(0 … s_max) for one part set.
#[derive(Clone, Debug)]
pub struct CountTable {
    parts: PartSet,
    counts: Vec<BigUint>,
}

impl CountTable {
    pub fn parts(&self) -> &PartSet {
        &self.parts
    }

    pub fn get(&self, s: usize) -> &BigUint {
        &self.counts[s]
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }
}

/// Count partitions of every 0 ≤ s ≤ s_max into parts from `ps`.
/// Parts outer, s inner: O(m·s_max) time, O(s_max) space.
pub fn count_partitions(ps: &PartSet, s_max: usize) -> CountTable {
    let mut counts = vec![BigUint::zero(); s_max + 1];
    counts[0] = BigUint::one();
    for &d in ps.parts() {
        let d = d as usize;
        for s in d..=s_max {
            let add = counts[s - d].clone();
            counts[s] += add;
        }
    }
    CountTable {
        parts: ps.clone(),
        counts,
    }
}

/// First s_max+1 Taylor coefficients of N(t) / Π(1 − t^{d_l}), where the
/// numerator is a sparse integer polynomial given as (degree, coefficient)
/// pairs. Computed by convolving the numerator with the partition counts
/// of the denominator degrees.
pub fn rational_series(
    numerator: &[(usize, i64)],
    degrees: &PartSet,
    s_max: usize,
) -> Vec<BigInt> {
    let table = count_partitions(degrees, s_max);
    let mut out = vec![BigInt::zero(); s_max + 1];
    for &(k, q) in numerator {
        if q == 0 || k > s_max {
            continue;
        }
        let q = BigInt::from(q);
        for (slot, count) in out[k..].iter_mut().zip(table.counts()) {
            *slot += &q * BigInt::from(count.clone());
        }
    }
    out
}
