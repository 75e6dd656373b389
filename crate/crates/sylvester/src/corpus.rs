//! The built-in verification corpus.
//!
//! A fixed, deterministic collection of part multisets (m ≤ 5, parts ≤ 12)
//! spanning repeats, common factors, primes and mixed sets. The `check`
//! command and the cross-validation suites sweep every one of these
//! against the DP oracle.

use crate::partset::PartSet;

/// All corpus part lists, in a fixed order.
pub fn corpus_parts() -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = Vec::new();

    // every singleton
    for d in 1..=12u32 {
        out.push(vec![d]);
    }

    // every pair from {1..8}, repeats included
    for a in 1..=8u32 {
        for b in a..=8 {
            out.push(vec![a, b]);
        }
    }

    // larger pairs: primes, common factors, the top of the range
    for pair in [
        [3, 11],
        [5, 12],
        [2, 12],
        [9, 12],
        [10, 12],
        [11, 12],
        [4, 10],
        [6, 9],
        [6, 10],
        [12, 12],
    ] {
        out.push(pair.to_vec());
    }

    // every triple from {1..5}, repeats included
    for a in 1..=5u32 {
        for b in a..=5 {
            for c in b..=5 {
                out.push(vec![a, b, c]);
            }
        }
    }

    // mixed triples: common factors, repeats, primes, larger parts
    for triple in [
        [2, 4, 6],
        [3, 6, 9],
        [4, 6, 8],
        [4, 8, 12],
        [6, 10, 12],
        [2, 6, 10],
        [2, 3, 7],
        [5, 7, 11],
        [6, 6, 6],
        [7, 7, 7],
        [2, 2, 12],
        [5, 10, 12],
        [6, 7, 8],
        [9, 10, 11],
    ] {
        out.push(triple.to_vec());
    }

    // quadruples
    for quad in [
        [1, 2, 3, 4],
        [2, 3, 4, 5],
        [1, 1, 2, 2],
        [2, 2, 4, 4],
        [2, 4, 6, 8],
        [3, 6, 9, 12],
        [1, 3, 5, 7],
        [2, 3, 5, 7],
        [4, 4, 4, 4],
        [1, 2, 4, 8],
        [5, 6, 10, 12],
        [2, 5, 8, 11],
        [3, 4, 6, 12],
        [6, 8, 10, 12],
        [1, 2, 11, 12],
    ] {
        out.push(quad.to_vec());
    }

    // quintuples
    for quint in [
        [1, 2, 3, 4, 5],
        [2, 3, 4, 5, 6],
        [1, 1, 1, 1, 1],
        [1, 1, 2, 2, 3],
        [2, 2, 2, 2, 2],
        [2, 4, 6, 8, 10],
        [3, 3, 6, 6, 9],
        [5, 5, 5, 5, 5],
        [1, 2, 4, 6, 12],
        [2, 3, 5, 7, 11],
        [4, 6, 8, 10, 12],
        [1, 3, 5, 9, 11],
        [2, 2, 3, 3, 4],
        [12, 12, 12, 12, 12],
    ] {
        out.push(quint.to_vec());
    }

    out
}

/// The corpus as validated part sets.
pub fn builtin_corpus() -> Vec<PartSet> {
    corpus_parts()
        .into_iter()
        .map(|parts| PartSet::new(parts).expect("corpus entries are valid"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_large_and_in_bounds() {
        let corpus = builtin_corpus();
        assert!(corpus.len() >= 100, "need at least 100 sets, have {}", corpus.len());
        for ps in &corpus {
            assert!(ps.len() <= 5);
            assert!(ps.parts().iter().all(|&d| (1..=12).contains(&d)));
        }
        // repeats and common factors are represented
        assert!(corpus.iter().any(|ps| {
            let p = ps.parts();
            p.windows(2).any(|w| w[0] == w[1])
        }));
        assert!(corpus
            .iter()
            .any(|ps| ps.len() > 1 && ps.parts().iter().all(|&d| d % 3 == 0)));
    }

    #[test]
    fn corpus_is_deterministic_and_distinct() {
        assert_eq!(corpus_parts(), corpus_parts());
        let mut sorted = corpus_parts();
        sorted.sort();
        let before = sorted.len();
        sorted.dedup();
        assert_eq!(sorted.len(), before, "duplicate corpus entries");
    }
}
