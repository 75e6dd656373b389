//! Frobenius polynomials H_n(ρ) and Carlitz generalized Euler numbers of
//! higher order H_n^(m)[ρ | d^m], the periodic-coefficient building blocks
//! of every wave with period j > 1.
//!
//! H_n(ρ) is defined by the symbolic recursion ρ·H_n = (H+1)^n (H_0 = 1),
//! which solved for H_n reads (ρ−1)·H_n = Σ_{k<n} C(n,k) H_k and needs
//! ρ ≠ 1. The higher-order numbers are built by appending one part at a
//! time: appending d convolves the sequence with {d^k · H_k(ρ^d)}, which
//! needs ρ^d ≠ 1. The classical Euler polynomials are the fixed-parameter
//! slice E_n(s) = H_n(s, −1).

use crate::cyclo::CycloElement;
use crate::error::{Error, Result};
use crate::rational::{binomial, Rational};

/// H_0(ρ) … H_N(ρ) for one fixed root ρ ≠ 1.
#[derive(Clone, Debug)]
pub struct FrobeniusTable {
    rho: CycloElement,
    values: Vec<CycloElement>,
}

impl FrobeniusTable {
    pub fn rho(&self) -> &CycloElement {
        &self.rho
    }

    pub fn get(&self, n: usize) -> &CycloElement {
        &self.values[n]
    }

    pub fn values(&self) -> &[CycloElement] {
        &self.values
    }
}

/// Frobenius numbers H_n(ρ) = H_n(0, ρ) for n ≤ n_max.
pub fn frobenius_numbers(n_max: usize, rho: &CycloElement) -> Result<FrobeniusTable> {
    if rho.is_one() {
        return Err(Error::Domain(
            "Frobenius numbers require rho != 1".into(),
        ));
    }
    let j = rho.conductor();
    let inv = rho.sub(&CycloElement::one(j)).inverse()?;
    let mut values = vec![CycloElement::one(j)];
    for n in 1..=n_max {
        let mut acc = CycloElement::zero(j);
        for (k, h) in values.iter().enumerate() {
            acc = acc.add(&h.scale(&binomial(n, k)));
        }
        values.push(acc.mul(&inv));
    }
    Ok(FrobeniusTable {
        rho: rho.clone(),
        values,
    })
}

/// Generalized Euler numbers of higher order for one fixed ρ and part list.
///
/// `values[n]` is H_n^(m)[ρ | parts]; the empty part list gives the
/// conventions H_0^(0) = 1 and H_n^(0) = 0 for n > 0.
#[derive(Clone, Debug)]
pub struct HigherEulerNumbers {
    rho: CycloElement,
    parts: Vec<u32>,
    values: Vec<CycloElement>,
}

impl HigherEulerNumbers {
    pub fn rho(&self) -> &CycloElement {
        &self.rho
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn get(&self, n: usize) -> &CycloElement {
        &self.values[n]
    }

    /// The shifted polynomial value H_n^(m)(shift, ρ | parts)
    /// = Σ_k C(n,k) shift^(n−k) H_k^(m)[ρ | parts].
    pub fn poly_at(&self, n: usize, shift: &Rational) -> CycloElement {
        let j = self.rho.conductor();
        let mut acc = CycloElement::zero(j);
        let mut shift_pow = Rational::one(); // shift^(n-k), built from k = n downwards
        for k in (0..=n).rev() {
            let c = binomial(n, k) * &shift_pow;
            acc = acc.add(&self.values[k].scale(&c));
            shift_pow *= shift;
        }
        acc
    }
}

/// H_n^(m)[ρ | parts] for n ≤ n_max, by iterated binomial convolution.
pub fn gen_euler_numbers(
    n_max: usize,
    rho: &CycloElement,
    parts: &[u32],
) -> Result<HigherEulerNumbers> {
    let j = rho.conductor();
    let mut values = vec![CycloElement::zero(j); n_max + 1];
    values[0] = CycloElement::one(j);
    for &d in parts {
        let rho_d = rho.pow(d as u64);
        if rho_d.is_one() {
            return Err(Error::Domain(format!(
                "generalized Euler numbers need rho^d != 1 (violated by part {d})"
            )));
        }
        let frob = frobenius_numbers(n_max, &rho_d)?;
        let mut d_pow = Rational::one();
        let scaled: Vec<CycloElement> = frob
            .values()
            .iter()
            .map(|h| {
                let v = h.scale(&d_pow);
                d_pow *= &Rational::from(d);
                v
            })
            .collect();
        let mut next = vec![CycloElement::zero(j); n_max + 1];
        for (i, slot) in next.iter_mut().enumerate() {
            let mut acc = CycloElement::zero(j);
            for (k, s) in scaled.iter().take(i + 1).enumerate() {
                if values[i - k].is_zero() {
                    continue;
                }
                acc = acc.add(&s.mul(&values[i - k]).scale(&binomial(i, k)));
            }
            *slot = acc;
        }
        values = next;
    }
    Ok(HigherEulerNumbers {
        rho: rho.clone(),
        parts: parts.to_vec(),
        values,
    })
}

/// H_n^(m)(shift, ρ | parts) in one call.
pub fn gen_euler_poly_at(
    n: usize,
    shift: &Rational,
    rho: &CycloElement,
    parts: &[u32],
) -> Result<CycloElement> {
    Ok(gen_euler_numbers(n, rho, parts)?.poly_at(n, shift))
}
