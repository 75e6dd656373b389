//! Acceptance suite: one test per criterion, each printing a PASS line.
//!
//! Everything here is exact-equality except the floating-point checks of
//! criteria 9 and 10, whose tolerances are pinned in the constants below.

use num_bigint::BigInt;
use num_traits::Zero;

use sylvester::bernoulli::bernoulli_higher_poly;
use sylvester::corpus::builtin_corpus;
use sylvester::cyclo::{one_minus_root, ramanujan_sum, CycloElement};
use sylvester::molien::{catalog, invariant_counts};
use sylvester::oracle::{count_partitions, rational_series};
use sylvester::rational::{binomial, factorial, Rational};
use sylvester::waves::{
    two_prime_closed_form, wave, wave_euler_form, wave_shifted_form, WaveDecomposition,
};
use sylvester::PartSet;

/// Relative tolerance for the polynomial-part approximation of criterion 9.
const W1_APPROX_REL_TOL: f64 = 1e-3;
/// Relative tolerance for real evaluation at integer points (criterion 10).
const REAL_EVAL_REL_TOL: f64 = 1e-9;

fn corpus_s_max(ps: &PartSet) -> usize {
    (3 * ps.period() + 50) as usize
}

#[test]
fn criterion_01_oracle_equivalence() {
    let corpus = builtin_corpus();
    assert!(corpus.len() >= 100);
    for ps in &corpus {
        let s_max = corpus_s_max(ps);
        let decomposition = WaveDecomposition::new(ps).unwrap();
        let table = count_partitions(ps, s_max);
        for s in 0..=s_max {
            let closed = decomposition.eval_exact(s as i64).unwrap();
            assert_eq!(
                closed,
                BigInt::from(table.get(s).clone()),
                "W({s}, {:?})",
                ps.parts()
            );
        }
    }
    println!(
        "ACCEPTANCE 1 PASS: closed form == DP oracle on {} sets, s <= 3L+50",
        corpus.len()
    );
}

#[test]
fn criterion_02_per_wave_recursion() {
    let mut checked = 0usize;
    for ps in builtin_corpus() {
        if ps.len() < 2 {
            continue; // the recursion needs a part to strip (m >= 2)
        }
        let reduced_set = ps.drop_last().unwrap();
        let reduced = WaveDecomposition::new(&reduced_set).unwrap();
        let d_m = *ps.parts().last().unwrap();
        let s_hi = 2 * ps.period() as i64;
        for &j in ps.wave_indices() {
            let full = wave(&ps, j).unwrap();
            let red = reduced.wave(j);
            for s in 0..=s_hi {
                let residual = full.recursion_residual(red, d_m, s);
                assert!(
                    residual.is_zero(),
                    "nonzero residual: parts={:?} j={j} s={s} -> {residual}",
                    ps.parts()
                );
            }
            checked += 1;
        }
    }
    println!("ACCEPTANCE 2 PASS: per-wave recursion residual == 0 ({checked} waves, s <= 2L)");
}

#[test]
fn criterion_03_form_agreement() {
    let mut checked = 0usize;
    for ps in builtin_corpus() {
        for &j in ps.wave_indices() {
            let base = wave(&ps, j).unwrap();
            let shifted = wave_shifted_form(&ps, j).unwrap();
            let euler = wave_euler_form(&ps, j).unwrap();
            assert_eq!(
                base.residue_polys(),
                shifted.residue_polys(),
                "shifted-Euler form disagrees: parts={:?} j={j}",
                ps.parts()
            );
            assert_eq!(
                base.residue_polys(),
                euler.residue_polys(),
                "Euler-polynomial form disagrees: parts={:?} j={j}",
                ps.parts()
            );
            checked += 1;
        }
    }
    println!("ACCEPTANCE 3 PASS: three wave constructions coincide on {checked} waves");
}

#[test]
fn criterion_04_homogeneity_and_common_factor() {
    for ps in builtin_corpus() {
        let base = WaveDecomposition::new(&ps).unwrap();
        let s_hi = (ps.period() + 20).min(300) as i64;
        for k in 2..=4u32 {
            let scaled = WaveDecomposition::new(&ps.scaled(k).unwrap()).unwrap();
            for s in 0..=s_hi {
                let expect = base.eval_exact(s).unwrap();
                // homogeneity: W(k·s, k·d) = W(s, d)
                assert_eq!(
                    scaled.eval_exact(k as i64 * s).unwrap(),
                    expect,
                    "homogeneity parts={:?} k={k} s={s}",
                    ps.parts()
                );
            }
            // common-factor reduction: W(s, k·d) = 0 unless k | s, else W(s/k, d)
            for s in 0..=(k as i64 * s_hi.min(120)) {
                let got = scaled.eval_exact(s).unwrap();
                let expect = if s % k as i64 == 0 {
                    base.eval_exact(s / k as i64).unwrap()
                } else {
                    BigInt::zero()
                };
                assert_eq!(got, expect, "reduction parts={:?} k={k} s={s}", ps.parts());
            }
        }
    }
    println!("ACCEPTANCE 4 PASS: homogeneity and common-factor reduction for k in 2..=4");
}

#[test]
fn criterion_05_catalan_identical_parts() {
    for p in 1..=3u32 {
        for m in 1..=6usize {
            let ps = PartSet::new(vec![p; m]).unwrap();
            let decomposition = WaveDecomposition::new(&ps).unwrap();
            for s in 0..=120i64 {
                let got = decomposition.eval_exact(s).unwrap();
                let expect = if s % p as i64 == 0 {
                    let q = s / p as i64;
                    // product form prod_{k=1}^{m-1} (1 + s/(k p))
                    let mut prod = Rational::one();
                    for k in 1..m as i64 {
                        prod = prod * (Rational::one() + Rational::from_ratio(q, k));
                    }
                    let prod = prod.to_integer().expect("Catalan product is integral");
                    // binomial form C(s/p + m - 1, s/p)
                    let binom = binomial(q as usize + m - 1, q as usize)
                        .to_integer()
                        .unwrap();
                    assert_eq!(prod, binom, "product vs binomial p={p} m={m} s={s}");
                    prod
                } else {
                    BigInt::zero()
                };
                assert_eq!(got, expect, "Catalan p={p} m={m} s={s}");
            }
        }
    }
    println!("ACCEPTANCE 5 PASS: Catalan identical-part formula, p <= 3, m <= 6, s <= 120");
}

#[test]
fn criterion_06_two_prime_suite() {
    let pairs = [(2u32, 3u32), (3, 5), (5, 7), (3, 11)];
    for (p1, p2) in pairs {
        let period = (p1 * p2) as u64;
        let ps = PartSet::new(vec![p1, p2]).unwrap();
        let decomposition = WaveDecomposition::new(&ps).unwrap();

        // W(a·p1·p2) = a + 1, a <= 10
        for a in 0..=10u64 {
            assert_eq!(
                decomposition.eval_exact((a * period) as i64).unwrap(),
                BigInt::from(a + 1),
                "p1={p1} p2={p2} a={a}"
            );
        }

        // wave values at s ≡ 0 (mod p1·p2):
        //   W_1 = a + (1/p1 + 1/p2)/2, W_p = (p−1)/(2p)
        let w1 = decomposition.wave(1).unwrap();
        for a in 0..=4i64 {
            let expect = Rational::from(a)
                + (Rational::from_ratio(1, p1 as i64) + Rational::from_ratio(1, p2 as i64))
                    * Rational::from_ratio(1, 2);
            assert_eq!(w1.eval_at(a * period as i64), expect, "W_1 a={a}");
        }
        for p in [p1, p2] {
            let wp = decomposition.wave(p).unwrap();
            for a in 0..=4i64 {
                assert_eq!(
                    wp.eval_at(a * period as i64),
                    Rational::from_ratio(p as i64 - 1, 2 * p as i64),
                    "W_{p} at multiples"
                );
            }
        }

        // explicit closed form equals the wave evaluation for s <= 2·p1·p2
        for s in 0..=2 * period {
            assert_eq!(
                two_prime_closed_form(p1, p2, s).unwrap(),
                decomposition.eval_exact(s as i64).unwrap(),
                "closed form p1={p1} p2={p2} s={s}"
            );
        }

        // reduction W(a·p1p2 + b) = a + W(b) for all 0 <= b < p1p2, a <= 5
        for b in 0..period {
            let base = decomposition.eval_exact(b as i64).unwrap();
            for a in 1..=5u64 {
                assert_eq!(
                    decomposition.eval_exact((a * period + b) as i64).unwrap(),
                    &base + BigInt::from(a),
                    "reduction p1={p1} p2={p2} a={a} b={b}"
                );
            }
        }
    }
    println!("ACCEPTANCE 6 PASS: two-prime identities for (2,3), (3,5), (5,7), (3,11)");
}

#[test]
fn criterion_07_root_of_unity_sum() {
    for m in 2..=30u32 {
        let mut acc = CycloElement::zero(m);
        for r in 1..m {
            acc = acc.add(&one_minus_root(m, r as i64).inverse().unwrap());
        }
        assert_eq!(
            acc.as_rational().unwrap(),
            Rational::from_ratio(m as i64 - 1, 2),
            "m = {m}"
        );
    }
    println!("ACCEPTANCE 7 PASS: sum 1/(1−ζ_m^r) = (m−1)/2 for 2 <= m <= 30");
}

#[test]
fn criterion_08_natural_sets() {
    for m in 1..=12u32 {
        let ps = PartSet::natural(m);
        let decomposition = WaveDecomposition::new(&ps).unwrap();

        // closed form equals the oracle up to s = 500
        let table = count_partitions(&ps, 500);
        for s in 0..=500usize {
            assert_eq!(
                decomposition.eval_exact(s as i64).unwrap(),
                BigInt::from(table.get(s).clone()),
                "m={m} s={s}"
            );
        }

        // the maximal wave is (1/m²)·(Ramanujan sum of −r), all residues constant
        let top = decomposition.wave(m).unwrap();
        for r in 0..m as i64 {
            let poly = &top.residue_polys()[r as usize];
            assert!(poly.degree().is_none_or(|d| d == 0));
            let expect = Rational::new(
                ramanujan_sum(m, -r).unwrap(),
                BigInt::from(m as u64 * m as u64),
            )
            .unwrap();
            assert_eq!(poly.coeff(0), expect, "m={m} r={r}");
        }

        // weights: ω_j = floor(m/j), π_ω = ω!·j^ω, s_ω = j·ω(ω+1)/2
        for j in 1..=m {
            let omega = ps.weight(j) as u64;
            assert_eq!(omega, (m / j) as u64, "weight m={m} j={j}");
            let expect_pi = Rational::from_integer(
                factorial(omega as usize) * BigInt::from(j as u64).pow(omega as u32),
            );
            assert_eq!(ps.divisible_product(j), expect_pi, "pi m={m} j={j}");
            assert_eq!(
                ps.divisible_sum(j),
                j as u64 * omega * (omega + 1) / 2,
                "s_omega m={m} j={j}"
            );
        }
    }
    println!("ACCEPTANCE 8 PASS: natural sets m <= 12 (oracle, maximal wave, weights)");
}

#[test]
fn criterion_09_polynomial_part_approximates_w() {
    let m = 21u32;
    let ps = PartSet::natural(m);
    // W_1 in closed form: B_20^(21)(s + 231 | {1..21}) / (20!·21!)
    let w1_poly = bernoulli_higher_poly(m as usize - 1, ps.parts())
        .shift(&Rational::from(ps.sum()))
        .scale(
            &(Rational::from_integer(factorial(m as usize - 1))
                * Rational::from_integer(ps.product().clone()))
            .recip()
            .unwrap(),
        );
    let table = count_partitions(&ps, 4000);
    let normalized_diff = |s: usize| -> f64 {
        let w = Rational::from_integer(BigInt::from(table.get(s).clone()));
        let w1 = w1_poly.eval(&Rational::from(s as u64));
        (w / w1 - Rational::one()).to_f64().abs()
    };
    let mut worst = 0.0f64;
    for s in 2000..=4000usize {
        worst = worst.max(normalized_diff(s));
    }
    assert!(
        worst < W1_APPROX_REL_TOL,
        "max |W/W_1 - 1| = {worst:e} exceeds {W1_APPROX_REL_TOL:e}"
    );
    let at_lo = normalized_diff(2000);
    let at_hi = normalized_diff(4000);
    assert!(
        at_hi < at_lo,
        "normalized difference must shrink: {at_hi:e} at 4000 vs {at_lo:e} at 2000"
    );
    println!(
        "ACCEPTANCE 9 PASS: |W/W_1 - 1| < 1e-3 on [2000, 4000] for m = 21 \
         (max {worst:.3e}, endpoints {at_lo:.3e} -> {at_hi:.3e})"
    );
}

#[test]
fn criterion_10_real_evaluation_consistency() {
    let mut checked = 0usize;
    for ps in builtin_corpus() {
        if ps.period() > 60 {
            continue;
        }
        let decomposition = WaveDecomposition::new(&ps).unwrap();
        for s in 0..=200i64 {
            let exact = decomposition.eval_exact(s).unwrap();
            let exact_f = Rational::from_integer(exact).to_f64();
            let real = decomposition.eval_real(s as f64);
            let tol = REAL_EVAL_REL_TOL * exact_f.abs().max(1.0);
            assert!(
                (real - exact_f).abs() <= tol,
                "parts={:?} s={s}: real {real} vs exact {exact_f}",
                ps.parts()
            );
        }
        checked += 1;
    }
    assert!(checked > 50, "expected a substantial L <= 60 sub-corpus");
    println!(
        "ACCEPTANCE 10 PASS: eval_real matches eval_exact within 1e-9 on {checked} sets, s <= 200"
    );
}

#[test]
fn criterion_11_molien_suite() {
    // P(0, G) = 1 everywhere; counts equal the series oracle for n <= 6, s <= 100
    for (name, lo) in [
        ("alternating", 2u32),
        ("cyclic_rotation", 1),
        ("dihedral", 1),
        ("sign_flip", 1),
        ("quaternion", 1),
    ] {
        for n in lo..=6 {
            let spec = catalog(name, n).unwrap();
            let counts = invariant_counts(&spec, 100).unwrap();
            assert_eq!(counts[0], BigInt::from(1), "P(0) for {name}({n})");
            let series = rational_series(&spec.numerator_pairs(), &spec.part_set(), 100);
            assert_eq!(counts, series, "series oracle for {name}({n})");
        }
    }

    // sign_flip(2) and cyclic_rotation(2) share one Molien function
    let a = invariant_counts(&catalog("sign_flip", 2).unwrap(), 100).unwrap();
    let b = invariant_counts(&catalog("cyclic_rotation", 2).unwrap(), 100).unwrap();
    assert_eq!(a, b, "coinciding Molien functions");

    // quaternion groups have no odd-degree invariants
    for n in 1..=5u32 {
        let counts = invariant_counts(&catalog("quaternion", n).unwrap(), 100).unwrap();
        for (s, count) in counts.iter().enumerate() {
            if s % 2 == 1 {
                assert!(count.is_zero(), "P({s}, quaternion({n})) must vanish");
            }
        }
    }

    // sign-flip identity: sum_k C(n, 2k)·W(s−2k, {2}^n) = W(s, {1}^n) for even
    // s, zero for odd s
    for n in 1..=5usize {
        let spec = catalog("sign_flip", n as u32).unwrap();
        let counts = invariant_counts(&spec, 60).unwrap();
        let ones = WaveDecomposition::new(&PartSet::new(vec![1; n]).unwrap()).unwrap();
        for (s, count) in counts.iter().enumerate() {
            let expect = if s % 2 == 0 {
                ones.eval_exact(s as i64).unwrap()
            } else {
                BigInt::zero()
            };
            assert_eq!(count, &expect, "sign-flip identity n={n} s={s}");
        }
    }

    // alternating reduction: P(s, A_n) = W(s, {1..n}) + W(s − n(n−1)/2, {1..n})
    for n in 2..=6u32 {
        let spec = catalog("alternating", n).unwrap();
        let counts = invariant_counts(&spec, 60).unwrap();
        let naturals = WaveDecomposition::new(&PartSet::natural(n)).unwrap();
        let offset = (n * (n - 1) / 2) as i64;
        for (s, count) in counts.iter().enumerate() {
            let mut expect = naturals.eval_exact(s as i64).unwrap();
            if s as i64 >= offset {
                expect += naturals.eval_exact(s as i64 - offset).unwrap();
            }
            assert_eq!(count, &expect, "alternating reduction n={n} s={s}");
        }
    }

    // Documented inconsistency: the simplified Q_8 formula W(s,{1}²)/2 at
    // s = 4 would give 5/2 and predicts P(6) = 0; the series (and the
    // general quaternion formula) give P(4) = 2 and P(6) = 1. The general
    // formula is authoritative.
    let q8 = invariant_counts(&catalog("quaternion", 2).unwrap(), 6).unwrap();
    assert_eq!(q8[4], BigInt::from(2));
    assert_eq!(q8[6], BigInt::from(1));
    let ones2 = WaveDecomposition::new(&PartSet::new(vec![1, 1]).unwrap()).unwrap();
    let simplified_at_4 = Rational::from_integer(ones2.eval_exact(4).unwrap())
        * Rational::from_ratio(1, 2);
    assert_eq!(simplified_at_4, Rational::from_ratio(5, 2));
    assert_ne!(
        Rational::from_integer(q8[4].clone()),
        simplified_at_4,
        "the simplified Q_8 closed form disagrees with the series at s = 4"
    );

    println!("ACCEPTANCE 11 PASS: Molien suite (catalog oracle, parity, identities, Q_8 discrepancy)");
}
