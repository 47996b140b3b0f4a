//! Randomized algebraic properties. Inputs are drawn from a seeded ChaCha
//! stream so every failure reproduces from the printed seed.

mod common;

use std::sync::OnceLock;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;
use conformal_gsb::Signature;

const CASES: u32 = 1000;

fn sig(n: u32) -> Signature {
    Signature::finite(n, &["a", "b"]).unwrap()
}

fn bases() -> &'static [Completed] {
    static B: OnceLock<Vec<Completed>> = OnceLock::new();
    B.get_or_init(completed_bases)
}

fn check(r: Check) -> Result<(), TestCaseError> {
    r.map_err(TestCaseError::fail)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(CASES))]

    #[test]
    fn leibniz_rule(seed: u64, n in 1u32..=3, idx in 0u32..=4) {
        let s = sig(n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (x, y) = (raw(&mut rng, &s, 2, 3), raw(&mut rng, &s, 2, 3));
        check(leibniz(&s, &x, idx, &y))?;
    }

    #[test]
    fn shift_rule(seed: u64, n in 1u32..=3, idx in 0u32..=4) {
        let s = sig(n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (x, y) = (raw(&mut rng, &s, 2, 3), raw(&mut rng, &s, 2, 3));
        check(shift(&s, &x, idx, &y))?;
    }

    #[test]
    fn generators_are_local(n in 1u32..=3, extra in 0u32..=6, b in 0usize..2, c in 0usize..2) {
        let s = sig(n);
        let g = s.generators_in(None);
        check(generator_locality(&s, g[b], n + extra, g[c]))?;
    }

    #[test]
    fn associative_identity(seed: u64, n in 1u32..=3, i in 0u32..=3, j in 0u32..=3) {
        let s = sig(n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (x, y, z) = (raw(&mut rng, &s, 1, 2), raw(&mut rng, &s, 2, 2), raw(&mut rng, &s, 1, 2));
        check(associative(&s, &x, i, &y, j, &z))?;
        check(associative_inverse(&s, &x, i, &y, j, &z))?;
    }

    #[test]
    fn normalization_is_linear(seed: u64, n in 1u32..=3) {
        let s = sig(n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (e1, e2) = (raw(&mut rng, &s, 3, 3), raw(&mut rng, &s, 3, 3));
        let (a, b) = (coeff(&mut rng), coeff(&mut rng));
        check(linear_and_length_preserving(&s, &e1, &e2, &a, &b))?;
    }

    #[test]
    fn locality_bound_holds(seed: u64, n in 1u32..=3, extra in 0u32..=4) {
        let s = sig(n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (u, v) = (word(&mut rng, &s, 3, 2), word(&mut rng, &s, 3, 2));
        check(locality_bound_vanishes(&s, &u, &v, extra))?;
    }

    #[test]
    fn product_leading_word(seed: u64, n in 1u32..=3, idx in 0u32..=5) {
        let s = sig(n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (u, v) = (word(&mut rng, &s, 3, 2), word(&mut rng, &s, 3, 2));
        check(product_leading_bound(&s, &u, idx, &v))?;
    }

    #[test]
    fn product_monotonicity(seed: u64, n in 1u32..=3, idx in 0u32..=3) {
        let s = sig(n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (u, v, w) = (word(&mut rng, &s, 2, 1), word(&mut rng, &s, 2, 1), word(&mut rng, &s, 2, 2));
        let f = poly(&mut rng, &s, 3, 2, 2);
        check(product_monotone(&s, &u, &v, idx, &w, &f))?;
    }

    #[test]
    fn derivation_leading_word(seed: u64, n in 1u32..=3, i in 0u32..=3) {
        let s = sig(n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = poly(&mut rng, &s, 4, 3, 2);
        let (u, v) = (word(&mut rng, &s, 3, 2), word(&mut rng, &s, 3, 2));
        check(derivation_leading(&s, &p, &u, &v, i))?;
    }

    #[test]
    fn normal_s_word_leading_law(seed: u64, k in 0usize..PRESENTATIONS.len()) {
        let b = &bases()[k];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = pattern(&mut rng, &b.sig, &b.basis);
        check(pattern_leading_law(&b.sig, &b.basis, &p))?;
    }

    #[test]
    fn reduction_trace_is_sound(seed: u64, k in 0usize..PRESENTATIONS.len(), completed: bool) {
        let b = &bases()[k];
        let set = if completed { &b.basis } else { &b.input };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = poly(&mut rng, &b.sig, 4, 4, 2);
        check(trace_sound(&b.sig, set, &p))?;
    }

    #[test]
    fn word_order_is_total(seed: u64, n in 1u32..=3) {
        let s = sig(n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (u, v, w) = (word(&mut rng, &s, 3, 2), word(&mut rng, &s, 3, 2), word(&mut rng, &s, 3, 2));
        check(total_order(&u, &v, &w))?;
    }

    #[test]
    fn print_parse_round_trip(seed: u64, n in 1u32..=3) {
        let s = sig(n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = poly(&mut rng, &s, 5, 4, 3);
        check(round_trip(&s, &p))?;
    }
}

/// For every shape (|v|, dpow v, dpow u) in range some pair attains the
/// bound: `u(M-1)v` is nonzero.
#[test]
fn locality_bound_is_sharp() {
    for n in 1..=3 {
        let s = sig(n);
        let b = conformal_gsb::gsb::IrrBounds { max_length: 3, max_dpow: 2, generators: s.generators_in(None) };
        let words = conformal_gsb::gsb::normal_words(&b, n);
        for vlen in 1..=3 {
            for dv in 0..=2 {
                for du in 0..=2 {
                    let hit = words.iter().filter(|u| u.dpow() == du && u.len() <= 2).any(|u| {
                        words.iter().filter(|v| v.len() == vlen && v.dpow() == dv).any(|v| {
                            let m = conformal_gsb::locality_bound(u, v, n) as u32;
                            !conformal_gsb::mult(u, m - 1, v, n).is_zero()
                        })
                    });
                    assert!(hit, "N={n} |v|={vlen} dpow(v)={dv} dpow(u)={du}");
                }
            }
        }
    }
}
