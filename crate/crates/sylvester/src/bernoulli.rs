//! Bernoulli numbers and Bernoulli polynomials of higher order.
//!
//! The higher-order polynomial B_n^(m)(x | d_1..d_m) is built by the
//! append-one-part recursion
//!
//!   B_n^(m)(x | d^m) = Σ_k C(n,k) d_m^k B_k · B_(n−k)^(m−1)(x | d^(m−1)),
//!
//! starting from B_n^(0)(x) = x^n, which costs O(m·n²) exact coefficient
//! operations and avoids any multinomial expansion.

use std::sync::RwLock;

use crate::rational::{binomial, Rational};
use crate::poly::RatPoly;

/// Exact Bernoulli numbers B_0 … B_N (second convention, B_1 = −1/2).
#[derive(Clone, Debug)]
pub struct BernoulliTable {
    values: Vec<Rational>,
}

impl BernoulliTable {
    pub fn get(&self, n: usize) -> &Rational {
        &self.values[n]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

fn bernoulli_cache() -> &'static RwLock<Vec<Rational>> {
    static CACHE: std::sync::OnceLock<RwLock<Vec<Rational>>> = std::sync::OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(vec![Rational::one()]))
}

/// B_0 … B_N from the symbolic recursion (B+1)^n = B^n, i.e.
/// Σ_{k<n} C(n,k) B_k = 0 for n ≥ 2. Memoized across calls.
pub fn bernoulli_numbers(n_max: usize) -> BernoulliTable {
    {
        let cache = bernoulli_cache().read().unwrap();
        if cache.len() > n_max {
            return BernoulliTable {
                values: cache[..=n_max].to_vec(),
            };
        }
    }
    let mut cache = bernoulli_cache().write().unwrap();
    while cache.len() <= n_max {
        let n = cache.len() + 1; // solve sum_{k=0}^{n-1} C(n,k) B_k = 0 for B_{n-1}
        let mut acc = Rational::zero();
        for (k, b) in cache.iter().enumerate() {
            acc += &(binomial(n, k) * b);
        }
        let coeff = binomial(n, n - 1); // = n
        let value = -(acc / coeff);
        cache.push(value);
    }
    BernoulliTable {
        values: cache[..=n_max].to_vec(),
    }
}

/// The ordinary Bernoulli polynomial B_n(x) = Σ C(n,k) B_k x^(n−k).
pub fn bernoulli_poly(n: usize) -> RatPoly {
    let table = bernoulli_numbers(n);
    let mut coeffs = vec![Rational::zero(); n + 1];
    for k in 0..=n {
        coeffs[n - k] = binomial(n, k) * table.get(k);
    }
    RatPoly::from_coeffs(coeffs)
}

/// Higher-order Bernoulli polynomial B_n^(m)(x | parts) with signed scale
/// parameters. Negative parts are legal here: the recursion only uses d^k,
/// and the sign-flip identity B_n^(m)(x | −d^m) = B_n^(m)(x + Σd_i | d^m)
/// is exercised in tests.
pub fn bernoulli_higher_poly_signed(n: usize, parts: &[i64]) -> RatPoly {
    let bernoulli = bernoulli_numbers(n);
    // level m = 0: B_i^(0)(x) = x^i for i = 0..=n
    let mut level: Vec<RatPoly> = (0..=n)
        .map(|i| RatPoly::monomial(Rational::one(), i))
        .collect();
    for &d in parts {
        let d_pows: Vec<Rational> = {
            let mut v = Vec::with_capacity(n + 1);
            let mut p = Rational::one();
            for _ in 0..=n {
                v.push(p.clone());
                p *= &Rational::from(d);
            }
            v
        };
        let mut next: Vec<RatPoly> = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let mut acc = RatPoly::zero();
            for k in 0..=i {
                let c = binomial(i, k) * &d_pows[k] * bernoulli.get(k);
                if !c.is_zero() {
                    acc = &acc + &level[i - k].scale(&c);
                }
            }
            next.push(acc);
        }
        level = next;
    }
    level.swap_remove(n)
}

/// B_n^(m)(x | parts) for positive parts (the form used by every wave).
/// Degree exactly n, monic.
pub fn bernoulli_higher_poly(n: usize, parts: &[u32]) -> RatPoly {
    let signed: Vec<i64> = parts.iter().map(|&d| d as i64).collect();
    bernoulli_higher_poly_signed(n, &signed)
}

/// Higher-order Bernoulli number B_n^(m)[parts] = B_n^(m)(0 | parts).
pub fn bernoulli_higher_number(n: usize, parts: &[u32]) -> Rational {
    bernoulli_higher_poly(n, parts).coeff(0)
}
