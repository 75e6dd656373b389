//! Exact cyclotomic field arithmetic.
//!
//! Elements of Q(ζ_j) are represented on the power basis
//! ζ_j^0, …, ζ_j^(φ(j)−1) modulo the j-th cyclotomic polynomial Φ_j.
//! Working modulo Φ_j (rather than x^j − 1) makes two things structural:
//! an element is rational exactly when its higher coordinates vanish, and
//! every nonzero element is invertible (extended Euclid against Φ_j).
//!
//! Sums over complete sets of primitive roots are Galois invariant, so
//! they project to `Rational` through [`CycloElement::as_rational`]; a
//! failed projection is reported as an error rather than silently rounded.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::RatPoly;
use crate::rational::Rational;

/// Möbius function: 0 when n has a squared prime factor, else (−1)^(number of prime factors).
pub fn mobius(n: u64) -> i8 {
    assert!(n >= 1, "mobius is defined for n >= 1");
    let mut n = n;
    let mut factors = 0u32;
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            factors += 1;
        }
        p += 1;
    }
    if n > 1 {
        factors += 1;
    }
    if factors.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Euler totient.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1);
    let mut n = n;
    let mut phi = n;
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            phi -= phi / p;
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    phi
}

/// All divisors of n, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// Exponents n of the primitive j-th roots ζ_j^n, i.e. n coprime to j.
/// For j = 1 this is the single exponent 0 (the root 1 itself).
pub fn primitive_root_exponents(j: u32) -> Vec<u32> {
    if j == 1 {
        return vec![0];
    }
    (1..j).filter(|&n| gcd(n as u64, j as u64) == 1).collect()
}

fn cyclotomic_cache() -> &'static RwLock<HashMap<u32, Arc<RatPoly>>> {
    static CACHE: std::sync::OnceLock<RwLock<HashMap<u32, Arc<RatPoly>>>> =
        std::sync::OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The j-th cyclotomic polynomial Φ_j, monic of degree φ(j) with integer
/// coefficients, computed from Φ_j(x) = ∏_{d|j} (x^{j/d} − 1)^{μ(d)}.
///
/// Results are memoized per conductor; the fill is idempotent so concurrent
/// first computations are harmless.
pub fn cyclotomic_polynomial(j: u32) -> Arc<RatPoly> {
    assert!(j >= 1, "conductor must be positive");
    if let Some(p) = cyclotomic_cache().read().unwrap().get(&j) {
        return Arc::clone(p);
    }
    let mut num = RatPoly::one();
    let mut den = RatPoly::one();
    for d in divisors(j as u64) {
        match mobius(d) {
            1 => num = &num * &RatPoly::xn_minus_one((j as u64 / d) as usize),
            -1 => den = &den * &RatPoly::xn_minus_one((j as u64 / d) as usize),
            _ => {}
        }
    }
    let phi = num
        .div_exact(&den)
        .expect("cyclotomic division is always exact");
    debug_assert_eq!(phi.degree(), Some(euler_phi(j as u64) as usize));
    let arc = Arc::new(phi);
    cyclotomic_cache()
        .write()
        .unwrap()
        .entry(j)
        .or_insert_with(|| Arc::clone(&arc));
    arc
}

/// An element of the j-th cyclotomic field on the power basis mod Φ_j.
///
/// `coords` always has length φ(j). Arithmetic requires equal conductors;
/// mixed-conductor work must lift explicitly via [`CycloElement::lift`].
#[derive(Clone, PartialEq, Eq)]
pub struct CycloElement {
    conductor: u32,
    coords: Vec<Rational>,
}

impl CycloElement {
    pub fn zero(j: u32) -> Self {
        CycloElement {
            conductor: j,
            coords: vec![Rational::zero(); euler_phi(j as u64) as usize],
        }
    }

    pub fn one(j: u32) -> Self {
        CycloElement::from_rational(j, Rational::one())
    }

    pub fn from_rational(j: u32, q: Rational) -> Self {
        let mut e = CycloElement::zero(j);
        e.coords[0] = q;
        e
    }

    /// Reduce an arbitrary polynomial in ζ_j modulo Φ_j.
    pub fn from_poly(j: u32, poly: &RatPoly) -> Self {
        let phi = cyclotomic_polynomial(j);
        let (_, rem) = poly.div_rem(&phi);
        let dim = euler_phi(j as u64) as usize;
        let mut coords = rem.coeffs().to_vec();
        coords.resize(dim, Rational::zero());
        CycloElement {
            conductor: j,
            coords,
        }
    }

    /// ζ_j^n for any integer n (negative exponents wrap around the unit circle).
    pub fn root_power(j: u32, n: i64) -> Self {
        let e = n.rem_euclid(j as i64) as usize;
        CycloElement::from_poly(j, &RatPoly::monomial(Rational::one(), e))
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rational::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(Rational::is_zero)
    }

    fn as_ratpoly(&self) -> RatPoly {
        RatPoly::from_coeffs(self.coords.clone())
    }

    fn assert_same_field(&self, other: &CycloElement) {
        assert_eq!(
            self.conductor, other.conductor,
            "conductor mismatch: lift explicitly before combining"
        );
    }

    pub fn add(&self, other: &CycloElement) -> CycloElement {
        self.assert_same_field(other);
        CycloElement {
            conductor: self.conductor,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &CycloElement) -> CycloElement {
        self.assert_same_field(other);
        CycloElement {
            conductor: self.conductor,
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> CycloElement {
        CycloElement {
            conductor: self.conductor,
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }

    pub fn mul(&self, other: &CycloElement) -> CycloElement {
        self.assert_same_field(other);
        let prod = &self.as_ratpoly() * &other.as_ratpoly();
        CycloElement::from_poly(self.conductor, &prod)
    }

    pub fn scale(&self, c: &Rational) -> CycloElement {
        CycloElement {
            conductor: self.conductor,
            coords: self.coords.iter().map(|a| a * c).collect(),
        }
    }

    /// Non-negative integer power by square-and-multiply.
    pub fn pow(&self, mut e: u64) -> CycloElement {
        let mut base = self.clone();
        let mut acc = CycloElement::one(self.conductor);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via extended Euclid against Φ_j.
    pub fn inverse(&self) -> Result<CycloElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let phi = cyclotomic_polynomial(self.conductor);
        let (g, u, _) = self.as_ratpoly().extended_gcd(&phi);
        // Φ_j is irreducible, so the gcd with any nonzero residue is 1.
        debug_assert_eq!(g, RatPoly::one());
        Ok(CycloElement::from_poly(self.conductor, &u))
    }

    /// Project to `Rational`; errors when any higher coordinate is nonzero.
    pub fn as_rational(&self) -> Result<Rational> {
        if self.coords[1..].iter().all(Rational::is_zero) {
            Ok(self.coords[0].clone())
        } else {
            Err(Error::NotRational(format!("{self:?}")))
        }
    }

    /// Re-express in Q(ζ_to) via ζ_j ↦ ζ_to^(to/j); requires j | to.
    pub fn lift(&self, to: u32) -> Result<CycloElement> {
        if !to.is_multiple_of(self.conductor) {
            return Err(Error::Domain(format!(
                "cannot lift conductor {} into {}",
                self.conductor, to
            )));
        }
        if to == self.conductor {
            return Ok(self.clone());
        }
        let step = (to / self.conductor) as usize;
        let mut coeffs = vec![Rational::zero(); (self.coords.len() - 1) * step + 1];
        for (k, c) in self.coords.iter().enumerate() {
            coeffs[k * step] = c.clone();
        }
        Ok(CycloElement::from_poly(to, &RatPoly::from_coeffs(coeffs)))
    }

    /// Numerical embedding with the branch ζ_j ↦ e^(2πi/j); returns (re, im).
    pub fn embed(&self) -> (f64, f64) {
        let j = self.conductor as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.coords.iter().enumerate() {
            let theta = 2.0 * std::f64::consts::PI * (k as f64) / j;
            let v = c.to_f64();
            re += v * theta.cos();
            im += v * theta.sin();
        }
        (re, im)
    }
}

impl fmt::Debug for CycloElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclo(j={}; ", self.conductor)?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// 1 − ζ_j^n, a recurring prefactor building block.
pub fn one_minus_root(j: u32, n: i64) -> CycloElement {
    CycloElement::one(j).sub(&CycloElement::root_power(j, n))
}

/// Ramanujan sum c_j(s) = Σ over primitive j-th roots ρ of ρ^s, as an exact integer.
pub fn ramanujan_sum(j: u32, s: i64) -> Result<BigInt> {
    let mut acc = CycloElement::zero(j);
    for n in primitive_root_exponents(j) {
        acc = acc.add(&CycloElement::root_power(j, n as i64 * s));
    }
    let q = acc.as_rational()?;
    q.to_integer()
        .ok_or_else(|| Error::Inconsistency(format!("Ramanujan sum c_{j}({s}) not an integer")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mobius_values() {
        assert_eq!(mobius(1), 1);
        assert_eq!(mobius(6), 1); // two distinct primes
        assert_eq!(mobius(12), 0); // divisible by 4
        assert_eq!(mobius(30), -1);
        assert_eq!(mobius(7), -1);
    }

    #[test]
    fn phi_and_divisors() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(21), 12);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(primitive_root_exponents(1), vec![0]);
        assert_eq!(primitive_root_exponents(6), vec![1, 5]);
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(*cyclotomic_polynomial(1), RatPoly::from_i64_coeffs(&[-1, 1]));
        assert_eq!(*cyclotomic_polynomial(2), RatPoly::from_i64_coeffs(&[1, 1]));
        assert_eq!(
            *cyclotomic_polynomial(6),
            RatPoly::from_i64_coeffs(&[1, -1, 1])
        );
    }

    #[test]
    fn cyclotomic_product_identity() {
        // prod over d | j of Phi_d(x) = x^j - 1, for all j <= 30
        for j in 1..=30u32 {
            let mut prod = RatPoly::one();
            for d in divisors(j as u64) {
                prod = &prod * &cyclotomic_polynomial(d as u32);
            }
            assert_eq!(prod, RatPoly::xn_minus_one(j as usize), "j = {j}");
        }
    }

    #[test]
    fn root_powers_reduce() {
        // zeta_2 = -1
        let z2 = CycloElement::root_power(2, 1);
        assert_eq!(z2.as_rational().unwrap(), Rational::from(-1i64));
        // zeta_3^2 = -1 - zeta_3
        let z3sq = CycloElement::root_power(3, 2);
        assert_eq!(
            z3sq.coords(),
            &[Rational::from(-1i64), Rational::from(-1i64)]
        );
        // zeta_4^2 = -1
        let z4sq = CycloElement::root_power(4, 2);
        assert_eq!(z4sq.as_rational().unwrap(), Rational::from(-1i64));
        // negative exponents wrap
        assert_eq!(
            CycloElement::root_power(5, -2),
            CycloElement::root_power(5, 3)
        );
    }

    #[test]
    fn inverses() {
        // (1 - zeta_2) = 2, inverse 1/2
        let a = one_minus_root(2, 1);
        assert_eq!(
            a.inverse().unwrap().as_rational().unwrap(),
            Rational::from_ratio(1, 2)
        );
        // identity
        let one = CycloElement::one(7);
        assert!(one.inverse().unwrap().is_one());
        // 1 - zeta_3 inverts to (2 + zeta_3)/3
        let b = one_minus_root(3, 1);
        let inv = b.inverse().unwrap();
        assert_eq!(
            inv.coords(),
            &[Rational::from_ratio(2, 3), Rational::from_ratio(1, 3)]
        );
        assert!(b.mul(&inv).is_one());
        // zero has no inverse
        assert_eq!(
            CycloElement::zero(5).inverse().unwrap_err(),
            Error::DivisionByZero
        );
    }

    #[test]
    fn rationality_projection() {
        // zeta_3 + zeta_3^2 = -1
        let s = CycloElement::root_power(3, 1).add(&CycloElement::root_power(3, 2));
        assert_eq!(s.as_rational().unwrap(), Rational::from(-1i64));
        // constants project to themselves
        let c = CycloElement::from_rational(4, Rational::from_ratio(5, 2));
        assert_eq!(c.as_rational().unwrap(), Rational::from_ratio(5, 2));
        // zeta_4 is genuinely irrational
        assert!(matches!(
            CycloElement::root_power(4, 1).as_rational(),
            Err(Error::NotRational(_))
        ));
    }

    #[test]
    fn lifting_conductors() {
        // zeta_2 lifted into Q(zeta_6) is zeta_6^3 = -1
        let lifted = CycloElement::root_power(2, 1).lift(6).unwrap();
        assert_eq!(lifted, CycloElement::root_power(6, 3));
        // lift preserves value under multiplication
        let a = CycloElement::root_power(3, 1).lift(12).unwrap();
        let b = CycloElement::root_power(4, 1).lift(12).unwrap();
        let prod = a.mul(&b); // zeta_3 * zeta_4 = zeta_12^(4+3)
        assert_eq!(prod, CycloElement::root_power(12, 7));
        // lift into a non-multiple fails
        assert!(CycloElement::root_power(4, 1).lift(6).is_err());
    }

    #[test]
    fn root_of_unity_sum_identity() {
        // sum over r=1..m-1 of 1/(1 - zeta_m^r) = (m-1)/2, exercised more
        // widely in the acceptance suite; spot-check two conductors here.
        for m in [5u32, 12] {
            let mut acc = CycloElement::zero(m);
            for r in 1..m {
                acc = acc.add(&one_minus_root(m, r as i64).inverse().unwrap());
            }
            assert_eq!(
                acc.as_rational().unwrap(),
                Rational::from_ratio(m as i64 - 1, 2)
            );
        }
    }

    #[test]
    fn product_over_all_roots_at_two() {
        // prod over r=0..m-1 of (2 - zeta_m^r) = 2^m - 1
        for m in [2u32, 3, 6, 10] {
            let mut acc = CycloElement::one(m);
            for r in 0..m {
                let two = CycloElement::from_rational(m, Rational::from(2i64));
                acc = acc.mul(&two.sub(&CycloElement::root_power(m, r as i64)));
            }
            assert_eq!(
                acc.as_rational().unwrap(),
                Rational::from((1i64 << m) - 1)
            );
        }
    }

    #[test]
    fn ramanujan_sums() {
        // c_j(0) = phi(j)
        assert_eq!(ramanujan_sum(12, 0).unwrap(), BigInt::from(4));
        // c_p(s) = -1 when p prime and p does not divide s
        assert_eq!(ramanujan_sum(7, 3).unwrap(), BigInt::from(-1));
        assert_eq!(ramanujan_sum(7, 14).unwrap(), BigInt::from(6));
    }

    #[test]
    fn concurrent_cache_fills_are_idempotent() {
        let handles: Vec<_> = (0..8)
            .map(|_| {
                std::thread::spawn(|| {
                    (1..=40u32)
                        .map(|j| cyclotomic_polynomial(j).degree().unwrap())
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        let mut results = handles.into_iter().map(|h| h.join().unwrap());
        let first = results.next().unwrap();
        assert!(results.all(|r| r == first));
        assert_eq!(first[39], euler_phi(40) as usize);
    }

    #[test]
    fn embedding_matches_roots() {
        let (re, im) = CycloElement::root_power(4, 1).embed();
        assert!(re.abs() < 1e-12 && (im - 1.0).abs() < 1e-12);
        let (re, im) = CycloElement::root_power(3, 1).embed();
        assert!((re + 0.5).abs() < 1e-12 && (im - (3.0f64).sqrt() / 2.0).abs() < 1e-12);
    }
}
