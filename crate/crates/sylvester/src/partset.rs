//! Validated part multisets and their derived quantities.

use num_bigint::BigInt;
use num_traits::One;

use crate::cyclo::{divisors, lcm};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// A multiset of positive integer parts d_1 … d_m, in input order, with the
/// derived quantities every wave needs: m, s_m = Σd_i, π_m = Πd_i, the
/// period L = lcm(d_i), the wave index set J (all divisors of all parts),
/// and for each j ∈ J the weight ω_j (number of parts divisible by j).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartSet {
    parts: Vec<u32>,
    sum: u64,
    product: BigInt,
    period: u64,
    wave_indices: Vec<u32>,
}

impl PartSet {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidInput("part list must be non-empty".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidInput("parts must be positive".into()));
        }
        let sum = parts.iter().map(|&d| d as u64).sum();
        let mut product = BigInt::one();
        for &d in &parts {
            product *= BigInt::from(d);
        }
        let period = parts.iter().fold(1u64, |acc, &d| lcm(acc, d as u64));
        let mut wave_indices: Vec<u32> = Vec::new();
        for &d in &parts {
            for j in divisors(d as u64) {
                let j = j as u32;
                if !wave_indices.contains(&j) {
                    wave_indices.push(j);
                }
            }
        }
        wave_indices.sort_unstable();
        Ok(PartSet {
            parts,
            sum,
            product,
            period,
            wave_indices,
        })
    }

    /// The set {1, 2, …, m} of consecutive naturals.
    pub fn natural(m: u32) -> Self {
        assert!(m >= 1, "natural set needs m >= 1");
        PartSet::new((1..=m).collect()).expect("naturals are valid")
    }

    /// Parts in original input order.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false // validated non-empty at construction
    }

    /// s_m = Σ d_i.
    pub fn sum(&self) -> u64 {
        self.sum
    }

    /// π_m = Π d_i.
    pub fn product(&self) -> &BigInt {
        &self.product
    }

    /// Quasi-polynomial period L = lcm of the parts.
    pub fn period(&self) -> u64 {
        self.period
    }

    /// The wave index set J: every j ≥ 1 dividing at least one part.
    pub fn wave_indices(&self) -> &[u32] {
        &self.wave_indices
    }

    pub fn has_wave(&self, j: u32) -> bool {
        self.wave_indices.binary_search(&j).is_ok()
    }

    /// Weight ω_j: the number of parts divisible by j (with multiplicity).
    pub fn weight(&self, j: u32) -> usize {
        self.parts.iter().filter(|&&d| d % j == 0).count()
    }

    /// The j-sorted split: parts divisible by j first, then the rest, each
    /// block in stable input order.
    pub fn split_for(&self, j: u32) -> (Vec<u32>, Vec<u32>) {
        let (div, tail): (Vec<u32>, Vec<u32>) =
            self.parts.iter().partition(|&&d| d % j == 0);
        (div, tail)
    }

    /// The set with the last part removed, or an error when m = 1.
    pub fn drop_last(&self) -> Result<PartSet> {
        if self.parts.len() == 1 {
            return Err(Error::Domain(
                "cannot reduce a single-part set".into(),
            ));
        }
        PartSet::new(self.parts[..self.parts.len() - 1].to_vec())
    }

    /// Every part multiplied by k (for the homogeneity identities).
    pub fn scaled(&self, k: u32) -> Result<PartSet> {
        if k == 0 {
            return Err(Error::InvalidInput("scale factor must be positive".into()));
        }
        PartSet::new(self.parts.iter().map(|&d| d * k).collect())
    }

    /// π_{ω_j}: product of the parts divisible by j, as a `Rational`.
    pub fn divisible_product(&self, j: u32) -> Rational {
        let mut acc = BigInt::one();
        for &d in self.parts.iter().filter(|&&d| d % j == 0) {
            acc *= BigInt::from(d);
        }
        Rational::from_integer(acc)
    }

    /// s_{ω_j}: sum of the parts divisible by j.
    pub fn divisible_sum(&self, j: u32) -> u64 {
        self.parts
            .iter()
            .filter(|&&d| d % j == 0)
            .map(|&d| d as u64)
            .sum()
    }
}

/// Spec-level constructor name for a validated part multiset.
pub fn make_partset(parts: Vec<u32>) -> Result<PartSet> {
    PartSet::new(parts)
}

/// Spec-level constructor for {1, …, m}.
pub fn natural_set(m: u32) -> PartSet {
    PartSet::natural(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_quantities() {
        let ps = PartSet::new(vec![1, 2, 3]).unwrap();
        assert_eq!(ps.wave_indices(), &[1, 2, 3]);
        assert_eq!(ps.weight(2), 1);
        assert_eq!(ps.period(), 6);
        assert_eq!(ps.sum(), 6);
        assert_eq!(ps.product(), &BigInt::from(6));

        let ps = PartSet::new(vec![2, 4]).unwrap();
        assert_eq!(ps.wave_indices(), &[1, 2, 4]);
        assert_eq!(ps.weight(2), 2);
        assert_eq!(ps.weight(4), 1);

        let ps = PartSet::new(vec![5]).unwrap();
        assert_eq!(ps.wave_indices(), &[1, 5]);
        assert_eq!(ps.period(), 5);
        assert_eq!(ps.weight(1), 1);
    }

    #[test]
    fn validation_errors() {
        assert!(matches!(
            PartSet::new(vec![]),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            PartSet::new(vec![2, 0, 3]),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn repeats_count_in_weights() {
        let ps = PartSet::new(vec![2, 2]).unwrap();
        assert_eq!(ps.weight(2), 2);
        assert_eq!(ps.wave_indices(), &[1, 2]);
        assert_eq!(ps.period(), 2);
    }

    #[test]
    fn split_is_stable() {
        let ps = PartSet::new(vec![3, 2, 6, 5, 4]).unwrap();
        let (div, tail) = ps.split_for(2);
        assert_eq!(div, vec![2, 6, 4]);
        assert_eq!(tail, vec![3, 5]);
        // weight 1 sweeps everything, empty tail
        let (all, none) = ps.split_for(1);
        assert_eq!(all, ps.parts());
        assert!(none.is_empty());
    }

    #[test]
    fn natural_sets() {
        let ps = PartSet::natural(4);
        assert_eq!(ps.parts(), &[1, 2, 3, 4]);
        assert_eq!(ps.weight(2), 2);
        assert_eq!(ps.weight(3), 1);
        assert_eq!(ps.weight(4), 1);
        assert_eq!(PartSet::natural(1).parts(), &[1]);
        // floor rule for weights
        for m in 1..=12u32 {
            let ps = PartSet::natural(m);
            for j in 1..=m {
                assert_eq!(ps.weight(j), (m / j) as usize, "m={m} j={j}");
            }
        }
    }

    #[test]
    fn drop_and_scale() {
        let ps = PartSet::new(vec![2, 4, 7]).unwrap();
        assert_eq!(ps.drop_last().unwrap().parts(), &[2, 4]);
        assert_eq!(ps.scaled(3).unwrap().parts(), &[6, 12, 21]);
        assert!(PartSet::new(vec![5]).unwrap().drop_last().is_err());
    }
}
