//! Sylvester wave decomposition of the restricted partition function.
//!
//! The partition function splits as W(s, d^m) = Σ_j W_j(s, d^m), summed
//! over every j that divides at least one part. Each wave is an exact
//! quasi-polynomial: for a residue class r mod j it is the polynomial
//!
//!   W_j(s) = 1/((ω_j−1)!·π_{ω_j}) · Σ_n C(ω_j−1, n) κ_n(r)
//!            · B_n^(ω_j)(s + s_m | d^(ω_j)),
//!
//! where the periodic coefficient κ_n(r) sums ρ^(−r)·Π(1−ρ^{d_i})^(−1)
//! · H_(ω_j−1−n)^(m−ω_j)[ρ | tail] over all primitive j-th roots ρ. The
//! sum runs over a complete Galois orbit, so κ_n(r) is rational; the
//! projection is checked, not assumed.
//!
//! Two alternative constructions of the same wave — Bernoulli polynomials
//! taken at s + s_{ω_j} with shifted Euler polynomials, and the dual form
//! with Bernoulli numbers and Euler polynomials carrying the s-dependence —
//! are kept as independent cross-check paths (`wave_shifted_form`,
//! `wave_euler_form`) and must agree coefficient-by-coefficient.

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::bernoulli::{bernoulli_higher_number, bernoulli_higher_poly};
use crate::cyclo::{one_minus_root, primitive_root_exponents, CycloElement};
use crate::error::{Error, Result};
use crate::frobenius::gen_euler_numbers;
use crate::oracle::count_partitions;
use crate::partset::PartSet;
use crate::poly::RatPoly;
use crate::rational::{binomial, factorial, Rational};

/// One Sylvester wave W_j as a quasi-polynomial of period j.
#[derive(Clone, Debug)]
pub struct WaveComponent {
    j: u32,
    omega: usize,
    /// One polynomial in s per residue class s ≡ r (mod j).
    residue_polys: Vec<RatPoly>,
    /// Data for the trigonometric extension to real arguments; present on
    /// waves built by [`wave`], absent on the cross-check forms.
    fourier: Option<RealEvalData>,
}

/// Real-evaluation payload: the Bernoulli-side polynomials (exact) and the
/// complex amplitude of every primitive root, per Bernoulli index.
#[derive(Clone, Debug)]
pub struct RealEvalData {
    /// bern_polys[n] = C(ω−1, n)/((ω−1)!·π_ω) · B_n^(ω)(x + s_m | d^(ω)).
    pub bern_polys: Vec<RatPoly>,
    /// (root exponent t, amplitudes[n] = embed(Π(1−ρ^{d_i})^(−1)·H_(ω−1−n)[ρ|tail]))
    /// with ρ = ζ_j^t under the embedding ζ_j ↦ e^(2πi/j).
    pub roots: Vec<(u32, Vec<(f64, f64)>)>,
}

impl WaveComponent {
    pub fn j(&self) -> u32 {
        self.j
    }

    /// Weight ω_j: number of parts divisible by j.
    pub fn omega(&self) -> usize {
        self.omega
    }

    pub fn residue_polys(&self) -> &[RatPoly] {
        &self.residue_polys
    }

    pub fn fourier(&self) -> Option<&RealEvalData> {
        self.fourier.as_ref()
    }

    /// Exact value of the wave at integer s.
    pub fn eval_at(&self, s: i64) -> Rational {
        let r = s.rem_euclid(self.j as i64) as usize;
        self.residue_polys[r].eval(&Rational::from(s))
    }

    /// Trigonometric extension to real x (branch ζ_j ↦ e^(2πi/j)).
    pub fn eval_real(&self, x: f64) -> f64 {
        let data = self
            .fourier
            .as_ref()
            .expect("wave carries no real-evaluation data");
        let j = self.j as f64;
        // Split x so the angle t·x mod j reduces exactly for the integer
        // part; otherwise cos(θ) at θ ~ 10³ rad loses enough precision to
        // spoil the cancellation between waves at integer arguments.
        let xi = x.trunc();
        let xf = x - xi;
        let xi_mod = (xi as i128).rem_euclid(self.j as i128);
        let mut total = 0.0;
        for (n, poly) in data.bern_polys.iter().enumerate() {
            let pval = poly.eval_f64(x);
            if pval == 0.0 {
                continue;
            }
            let mut periodic = 0.0;
            for (t, amps) in &data.roots {
                let k = (*t as i128 * xi_mod).rem_euclid(self.j as i128) as f64;
                let phase = (k + *t as f64 * xf).rem_euclid(j);
                let theta = 2.0 * std::f64::consts::PI * phase / j;
                let (re, im) = amps[n];
                // Re[(re + i·im) · e^(−iθ)]
                periodic += re * theta.cos() + im * theta.sin();
            }
            total += pval * periodic;
        }
        total
    }

    /// Exact residual of the per-wave recursion
    /// W_j(s, d^m) − W_j(s−d_m, d^m) − W_j(s, d^(m−1)),
    /// with `reduced` the same-index wave of the set without its last part
    /// (`None` when j no longer divides anything there). Always zero.
    pub fn recursion_residual(&self, reduced: Option<&WaveComponent>, d_m: u32, s: i64) -> Rational {
        let head = self.eval_at(s) - self.eval_at(s - d_m as i64);
        match reduced {
            Some(w) => head - w.eval_at(s),
            None => head,
        }
    }
}

/// Π over tail parts of (1 − ρ^{d_i})^(−1) for ρ = ζ_j^t.
fn root_prefactor(j: u32, t: u32, tail: &[u32]) -> Result<CycloElement> {
    let mut acc = CycloElement::one(j);
    for &d in tail {
        let factor = one_minus_root(j, t as i64 * d as i64);
        acc = acc.mul(&factor.inverse()?);
    }
    Ok(acc)
}

/// 1/((ω−1)!·π_ω) for the j-sorted split of `ps`.
fn wave_prefactor(ps: &PartSet, j: u32, omega: usize) -> Rational {
    let denom = Rational::from_integer(factorial(omega - 1)) * ps.divisible_product(j);
    denom.recip().expect("nonzero factorial and product")
}

fn require_wave_index(ps: &PartSet, j: u32) -> Result<()> {
    if !ps.has_wave(j) {
        return Err(Error::Domain(format!(
            "j = {j} divides no part of {:?}",
            ps.parts()
        )));
    }
    Ok(())
}

/// Sum ρ^(−r)·factors[n] over the given roots ρ = ζ_j^t into periodic
/// coefficients κ_n(r), project them to rationals, and combine them with
/// the Bernoulli-side polynomials into one polynomial per residue class.
fn combine_residues(
    j: u32,
    bern_polys: &[RatPoly],
    per_root_factors: &[(u32, Vec<CycloElement>)],
) -> Result<Vec<RatPoly>> {
    let omega = bern_polys.len();
    let mut kappa = vec![vec![CycloElement::zero(j); omega]; j as usize];
    for (t, factors) in per_root_factors {
        // rho^(-r) for r = 0..j, built incrementally
        let step = CycloElement::root_power(j, -(*t as i64));
        let mut angular = CycloElement::one(j);
        for row in kappa.iter_mut() {
            for (slot, factor) in row.iter_mut().zip(factors) {
                *slot = slot.add(&angular.mul(factor));
            }
            angular = angular.mul(&step);
        }
    }
    kappa
        .iter()
        .map(|row| {
            let mut acc = RatPoly::zero();
            for (bp, coeff) in bern_polys.iter().zip(row) {
                let coeff = coeff.as_rational()?;
                if !coeff.is_zero() {
                    acc = &acc + &bp.scale(&coeff);
                }
            }
            Ok(acc)
        })
        .collect()
}

/// The Sylvester wave W_j, primary construction: Bernoulli polynomials at
/// s + s_m with generalized Euler numbers at zero as periodic coefficients.
/// Carries the real-evaluation payload.
pub fn wave(ps: &PartSet, j: u32) -> Result<WaveComponent> {
    require_wave_index(ps, j)?;
    let (div, tail) = ps.split_for(j);
    let omega = div.len();
    let prefactor = wave_prefactor(ps, j, omega);
    let s_m = Rational::from(ps.sum());

    // Bernoulli side: scaled B_n^(ω)(s + s_m | div) for n = 0 .. ω−1.
    let bern_polys: Vec<RatPoly> = (0..omega)
        .map(|n| {
            bernoulli_higher_poly(n, &div)
                .shift(&s_m)
                .scale(&(binomial(omega - 1, n) * &prefactor))
        })
        .collect();

    // Periodic side: the per-root factor of each Bernoulli index.
    let mut per_root = Vec::new();
    let mut roots_data = Vec::new();
    for t in primitive_root_exponents(j) {
        let rho = CycloElement::root_power(j, t as i64);
        let pref = root_prefactor(j, t, &tail)?;
        let htable = gen_euler_numbers(omega - 1, &rho, &tail)?;
        let factors: Vec<CycloElement> = (0..omega)
            .map(|n| pref.mul(htable.get(omega - 1 - n)))
            .collect();
        roots_data.push((t, factors.iter().map(CycloElement::embed).collect()));
        per_root.push((t, factors));
    }
    let residue_polys = combine_residues(j, &bern_polys, &per_root)?;

    Ok(WaveComponent {
        j,
        omega,
        residue_polys,
        fourier: Some(RealEvalData {
            bern_polys,
            roots: roots_data,
        }),
    })
}

/// The polynomial part W_1: a single polynomial of degree m−1 with leading
/// coefficient 1/((m−1)!·π_m).
pub fn polynomial_wave(ps: &PartSet) -> WaveComponent {
    wave(ps, 1).expect("every set has the j = 1 wave")
}

/// Cross-check construction: Bernoulli polynomials at s + s_{ω_j} paired
/// with generalized Euler polynomials shifted by s_m − s_{ω_j}.
pub fn wave_shifted_form(ps: &PartSet, j: u32) -> Result<WaveComponent> {
    require_wave_index(ps, j)?;
    let (div, tail) = ps.split_for(j);
    let omega = div.len();
    let prefactor = wave_prefactor(ps, j, omega);
    let s_omega = Rational::from(ps.divisible_sum(j));
    let h_shift = Rational::from(ps.sum()) - &s_omega;

    let bern_polys: Vec<RatPoly> = (0..omega)
        .map(|n| {
            bernoulli_higher_poly(n, &div)
                .shift(&s_omega)
                .scale(&(binomial(omega - 1, n) * &prefactor))
        })
        .collect();

    let mut per_root = Vec::new();
    for t in primitive_root_exponents(j) {
        let rho = CycloElement::root_power(j, t as i64);
        let pref = root_prefactor(j, t, &tail)?;
        let htable = gen_euler_numbers(omega - 1, &rho, &tail)?;
        let factors: Vec<CycloElement> = (0..omega)
            .map(|n| pref.mul(&htable.poly_at(omega - 1 - n, &h_shift)))
            .collect();
        per_root.push((t, factors));
    }
    let residue_polys = combine_residues(j, &bern_polys, &per_root)?;

    Ok(WaveComponent {
        j,
        omega,
        residue_polys,
        fourier: None,
    })
}

/// Cross-check construction: higher-order Bernoulli numbers with the
/// s-dependence carried by the generalized Euler polynomials at s + s_m.
pub fn wave_euler_form(ps: &PartSet, j: u32) -> Result<WaveComponent> {
    require_wave_index(ps, j)?;
    let (div, tail) = ps.split_for(j);
    let omega = div.len();
    let prefactor = wave_prefactor(ps, j, omega);
    let s_m = Rational::from(ps.sum());

    // scale_n = C(ω−1, n) · B_n^(ω)[div]
    let scales: Vec<Rational> = (0..omega)
        .map(|n| binomial(omega - 1, n) * &bernoulli_higher_number(n, &div))
        .collect();

    // Per residue class, accumulate a polynomial in s with cyclotomic
    // coefficients, projecting to rationals only after the root sum.
    let mut acc = vec![vec![CycloElement::zero(j); omega]; j as usize];
    for t in primitive_root_exponents(j) {
        let rho = CycloElement::root_power(j, t as i64);
        let pref = root_prefactor(j, t, &tail)?;
        let htable = gen_euler_numbers(omega - 1, &rho, &tail)?;
        // total_poly[q] = Σ_n scale_n · [s^q] H_(ω−1−n)(s + s_m, ρ | tail)
        let mut total_poly = vec![CycloElement::zero(j); omega];
        for (n, scale) in scales.iter().enumerate() {
            if scale.is_zero() {
                continue;
            }
            let np = omega - 1 - n;
            for k in 0..=np {
                let hk = htable.get(k);
                if hk.is_zero() {
                    continue;
                }
                let c_nk = binomial(np, k);
                // (s + s_m)^(np−k) contributes C(np−k, q)·s_m^(np−k−q) to s^q
                let mut sm_pow = Rational::one();
                for q in (0..=np - k).rev() {
                    let coeff = &c_nk * &binomial(np - k, q) * &sm_pow * scale;
                    total_poly[q] = total_poly[q].add(&hk.scale(&coeff));
                    sm_pow *= &s_m;
                }
            }
        }
        let step = CycloElement::root_power(j, -(t as i64));
        let mut angular = CycloElement::one(j);
        for row in acc.iter_mut() {
            let rotated = angular.mul(&pref);
            for (slot, c) in row.iter_mut().zip(&total_poly) {
                if !c.is_zero() {
                    *slot = slot.add(&rotated.mul(c));
                }
            }
            angular = angular.mul(&step);
        }
    }

    let residue_polys = acc
        .iter()
        .map(|row| {
            let coeffs = row
                .iter()
                .map(|c| Ok(c.as_rational()? * &prefactor))
                .collect::<Result<Vec<_>>>()?;
            Ok(RatPoly::from_coeffs(coeffs))
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(WaveComponent {
        j,
        omega,
        residue_polys,
        fourier: None,
    })
}

/// The full wave decomposition of one part set: every W_j for j ∈ J,
/// built once and evaluated many times.
#[derive(Clone, Debug)]
pub struct WaveDecomposition {
    parts: PartSet,
    waves: Vec<WaveComponent>,
}

impl WaveDecomposition {
    pub fn new(ps: &PartSet) -> Result<Self> {
        let waves = ps
            .wave_indices()
            .iter()
            .map(|&j| wave(ps, j))
            .collect::<Result<Vec<_>>>()?;
        Ok(WaveDecomposition {
            parts: ps.clone(),
            waves,
        })
    }

    pub fn part_set(&self) -> &PartSet {
        &self.parts
    }

    pub fn waves(&self) -> &[WaveComponent] {
        &self.waves
    }

    pub fn wave(&self, j: u32) -> Option<&WaveComponent> {
        self.waves.iter().find(|w| w.j == j)
    }

    /// The raw quasi-polynomial value Σ_j W_j(s) at any integer.
    pub fn eval_rational(&self, s: i64) -> Rational {
        let mut acc = Rational::zero();
        for w in &self.waves {
            acc += &w.eval_at(s);
        }
        acc
    }

    /// The exact partition count. Errors when the rational value fails to
    /// be an integer, or is negative at s ≥ 0; negative s is allowed and
    /// returns the (possibly zero or negative) quasi-polynomial value.
    pub fn eval_exact(&self, s: i64) -> Result<BigInt> {
        let value = self.eval_rational(s);
        let int = value.to_integer().ok_or_else(|| {
            Error::Inconsistency(format!(
                "W({s}, {:?}) = {value} is not an integer",
                self.parts.parts()
            ))
        })?;
        if s >= 0 && int.is_negative() {
            return Err(Error::Inconsistency(format!(
                "W({s}, {:?}) = {int} is negative",
                self.parts.parts()
            )));
        }
        Ok(int)
    }

    /// Trigonometric extension Σ_j W_j(x) to real arguments.
    pub fn eval_real(&self, x: f64) -> f64 {
        self.waves.iter().map(|w| w.eval_real(x)).sum()
    }

    /// Collapse to a single quasi-polynomial of period L = lcm(parts).
    pub fn quasipoly(&self) -> QuasiPoly {
        let period = self.parts.period();
        let residue_polys = (0..period)
            .map(|r| {
                let mut acc = RatPoly::zero();
                for w in &self.waves {
                    acc = &acc + &w.residue_polys[(r % w.j as u64) as usize];
                }
                acc
            })
            .collect();
        QuasiPoly {
            period,
            residue_polys,
        }
    }
}

/// A quasi-polynomial: one rational-coefficient polynomial per residue
/// class modulo the period.
#[derive(Clone, Debug)]
pub struct QuasiPoly {
    period: u64,
    residue_polys: Vec<RatPoly>,
}

impl QuasiPoly {
    pub fn period(&self) -> u64 {
        self.period
    }

    pub fn residue_polys(&self) -> &[RatPoly] {
        &self.residue_polys
    }

    pub fn eval_rational(&self, s: i64) -> Rational {
        let r = s.rem_euclid(self.period as i64) as usize;
        self.residue_polys[r].eval(&Rational::from(s))
    }

    /// Integer value with the same contract as [`WaveDecomposition::eval_exact`].
    pub fn eval_exact(&self, s: i64) -> Result<BigInt> {
        let value = self.eval_rational(s);
        let int = value
            .to_integer()
            .ok_or_else(|| Error::Inconsistency(format!("quasipoly({s}) = {value} not integer")))?;
        if s >= 0 && int.is_negative() {
            return Err(Error::Inconsistency(format!(
                "quasipoly({s}) = {int} is negative"
            )));
        }
        Ok(int)
    }
}

/// Assemble the full quasi-polynomial for a part set.
pub fn partition_quasipoly(ps: &PartSet) -> Result<QuasiPoly> {
    Ok(WaveDecomposition::new(ps)?.quasipoly())
}

/// W(s, d^m) in closed form. Builds the decomposition; for sweeps prefer
/// constructing a [`WaveDecomposition`] once.
pub fn eval_exact(ps: &PartSet, s: i64) -> Result<BigInt> {
    WaveDecomposition::new(ps)?.eval_exact(s)
}

/// The trigonometric extension of W at a real argument.
pub fn eval_real(ps: &PartSet, x: f64) -> Result<f64> {
    Ok(WaveDecomposition::new(ps)?.eval_real(x))
}

/// Exact residual W_j(s, d^m) − W_j(s−d_m, d^m) − W_j(s, d^(m−1)); the
/// last term is zero when j divides nothing in the reduced set. A nonzero
/// return signals an implementation bug, never a property of the inputs.
pub fn wave_recursion_residual(ps: &PartSet, j: u32, s: i64) -> Result<Rational> {
    let reduced_set = ps.drop_last()?;
    require_wave_index(ps, j)?;
    let full = wave(ps, j)?;
    let reduced = if reduced_set.has_wave(j) {
        Some(wave(&reduced_set, j)?)
    } else {
        None
    };
    let d_m = *ps.parts().last().unwrap();
    Ok(full.recursion_residual(reduced.as_ref(), d_m, s))
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// W(s, {p₁, p₂}) for distinct primes from the explicit two-prime form:
/// the linear term (s + (p₁+p₂)/2)/(p₁p₂) plus one root-of-unity sum per
/// prime, evaluated in exact cyclotomic arithmetic.
pub fn two_prime_closed_form(p1: u32, p2: u32, s: u64) -> Result<BigInt> {
    if !is_prime(p1) || !is_prime(p2) || p1 == p2 {
        return Err(Error::InvalidInput(format!(
            "need two distinct primes, got {p1} and {p2}"
        )));
    }
    let mut total = (Rational::from(s) + Rational::from_ratio((p1 + p2) as i64, 2))
        / Rational::from(p1 as u64 * p2 as u64);
    for (p, q) in [(p1, p2), (p2, p1)] {
        let s_mod = (s % p as u64) as i64;
        let mut acc = CycloElement::zero(p);
        for t in 1..p as i64 {
            let numer = CycloElement::root_power(p, -t * s_mod);
            let denom = one_minus_root(p, t * q as i64).inverse()?;
            acc = acc.add(&numer.mul(&denom));
        }
        total += &(acc.as_rational()? / Rational::from(p as u64));
    }
    let int = total.to_integer().ok_or_else(|| {
        Error::Inconsistency(format!(
            "two-prime form W({s}, {{{p1},{p2}}}) = {total} is not an integer"
        ))
    })?;
    if int.is_negative() {
        return Err(Error::Inconsistency(format!(
            "two-prime form W({s}, {{{p1},{p2}}}) = {int} is negative"
        )));
    }
    Ok(int)
}

/// Compare the closed form against the DP oracle on 0 ..= s_max.
pub fn verify_against_oracle(ps: &PartSet, s_max: usize) -> Result<()> {
    let decomposition = WaveDecomposition::new(ps)?;
    let table = count_partitions(ps, s_max);
    for s in 0..=s_max {
        let closed = decomposition.eval_exact(s as i64)?;
        let expected = BigInt::from(table.get(s).clone());
        if closed != expected {
            return Err(Error::Inconsistency(format!(
                "W({s}, {:?}): closed form {closed} != oracle {expected}",
                ps.parts()
            )));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Serialization schema shared by the CLI and golden-file tests.
// ---------------------------------------------------------------------------

/// JSON document for a wave decomposition. Field order is the schema.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct WavesDocument {
    pub parts: Vec<u32>,
    pub period: u64,
    pub waves: Vec<WaveJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct WaveJson {
    pub j: u32,
    pub omega: usize,
    pub residues: Vec<ResidueJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ResidueJson {
    pub r: u32,
    /// Coefficients lowest degree first, canonical rational strings.
    pub coeffs: Vec<String>,
}

impl WavesDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("document serializes")
    }
}

impl WaveDecomposition {
    pub fn to_document(&self) -> WavesDocument {
        WavesDocument {
            parts: self.parts.parts().to_vec(),
            period: self.parts.period(),
            waves: self
                .waves
                .iter()
                .map(|w| WaveJson {
                    j: w.j,
                    omega: w.omega,
                    residues: w
                        .residue_polys
                        .iter()
                        .enumerate()
                        .map(|(r, poly)| ResidueJson {
                            r: r as u32,
                            coeffs: poly.coeffs().iter().map(Rational::to_string).collect(),
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}
