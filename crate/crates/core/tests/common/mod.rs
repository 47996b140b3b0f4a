//! Shared fixtures, random generators and property checks for the
//! integration tests. Each check returns `Err(description)` on violation so
//! that proptest and the seeded acceptance sweeps can share them.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::binomial;
use rand::Rng;

use conformal_gsb::gsb::{complete, reduce, reduce_with, remainder, CompleteOptions, Pattern, PatternKind, RelationSet, Strategy};
use conformal_gsb::normal::mult_poly_word;
use conformal_gsb::{apply_d, mult, normalize, Coeff, Generator, NormalWord, Polynomial, RawExpr, Signature};

pub type Check = Result<(), String>;

pub fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Small presentations that complete quickly, used as bases for the
/// confluence and membership sweeps.
pub const PRESENTATIONS: &[(&str, u32, &[&str], &[&str])] = &[
    ("one-generator", 2, &["a"], &["a (1) a - a (0) D a"]),
    ("commutator", 2, &["a", "b"], &["b (0) a - a (0) b"]),
    ("square", 2, &["a", "b"], &["b (0) b - a (1) a"]),
    ("third-locality", 3, &["a"], &["a (2) a - a (0) D a"]),
    ("derived-square", 1, &["a", "b"], &["b (0) b - a (0) D a"]),
    ("shifted", 2, &["a"], &["a (1) D a - a (0) a"]),
];

pub struct Completed {
    pub name: &'static str,
    pub sig: Signature,
    pub input: RelationSet,
    pub basis: RelationSet,
}

pub fn completed_bases() -> Vec<Completed> {
    PRESENTATIONS
        .iter()
        .map(|&(name, n, gens, rels)| {
            let sig = Signature::finite(n, gens).unwrap();
            let input = RelationSet::monic(n, rels.iter().map(|r| sig.parse_poly(r).unwrap()));
            let done = complete(&input, &sig, &CompleteOptions::default());
            assert!(done.is_complete(), "{name} did not complete");
            Completed { name, sig, input, basis: done.basis }
        })
        .collect()
}

pub fn coeff<R: Rng>(rng: &mut R) -> Coeff {
    let num = rng.random_range(-5i64..=5);
    let den = rng.random_range(1i64..=3);
    Coeff::new(BigInt::from(if num == 0 { 1 } else { num }), BigInt::from(den))
}

pub fn word<R: Rng>(rng: &mut R, sig: &Signature, max_len: usize, max_dpow: u32) -> NormalWord {
    let gens = sig.generators_in(None);
    let len = rng.random_range(1..=max_len);
    let body: Vec<(Generator, u32)> =
        (1..len).map(|_| (gens[rng.random_range(0..gens.len())], rng.random_range(0..sig.locality()))).collect();
    NormalWord::from_parts(body, gens[rng.random_range(0..gens.len())], rng.random_range(0..=max_dpow))
}

pub fn d_free_word<R: Rng>(rng: &mut R, sig: &Signature, max_len: usize) -> NormalWord {
    word(rng, sig, max_len, 0)
}

pub fn poly<R: Rng>(rng: &mut R, sig: &Signature, terms: usize, max_len: usize, max_dpow: u32) -> Polynomial {
    Polynomial::from_terms((0..terms).map(|_| (word(rng, sig, max_len, max_dpow), coeff(rng))))
}

/// Random expression tree with at most `leaves` generator occurrences and
/// product indices up to `max_index`.
pub fn raw<R: Rng>(rng: &mut R, sig: &Signature, leaves: usize, max_index: u32) -> RawExpr {
    let gens = sig.generators_in(None);
    let e = if leaves <= 1 || rng.random_bool(0.25) {
        RawExpr::gen(gens[rng.random_range(0..gens.len())])
    } else {
        let left = rng.random_range(1..leaves);
        RawExpr::prod(rng.random_range(0..=max_index), raw(rng, sig, left, max_index), raw(rng, sig, leaves - left, max_index))
    };
    if rng.random_bool(0.3) {
        RawExpr::d(rng.random_range(1..=2), e)
    } else {
        e
    }
}

fn norm(e: &RawExpr, sig: &Signature) -> Result<Polynomial, String> {
    normalize(e, sig).map_err(|e| e.to_string())
}

fn show(sig: &Signature, p: &Polynomial) -> String {
    sig.fmt_poly(p)
}

fn binom(n: u32, k: u32) -> Coeff {
    Coeff::from_integer(binomial(BigInt::from(n), BigInt::from(k)))
}

fn signed(t: u32) -> Coeff {
    Coeff::from_integer(BigInt::from(if t.is_multiple_of(2) { 1 } else { -1 }))
}

/// `D(x(n)y) = Dx(n)y + x(n)Dy`.
pub fn leibniz(sig: &Signature, x: &RawExpr, n: u32, y: &RawExpr) -> Check {
    let lhs = norm(&RawExpr::d(1, RawExpr::prod(n, x.clone(), y.clone())), sig)?;
    let rhs = norm(&RawExpr::prod(n, RawExpr::d(1, x.clone()), y.clone()), sig)?
        .add(&norm(&RawExpr::prod(n, x.clone(), RawExpr::d(1, y.clone())), sig)?);
    ensure(lhs == rhs, || format!("Leibniz: {} vs {}", show(sig, &lhs), show(sig, &rhs)))
}

/// `Dx(n)y = -n x(n-1)y`.
pub fn shift(sig: &Signature, x: &RawExpr, n: u32, y: &RawExpr) -> Check {
    let lhs = norm(&RawExpr::prod(n, RawExpr::d(1, x.clone()), y.clone()), sig)?;
    let rhs = if n == 0 {
        Polynomial::zero()
    } else {
        norm(&RawExpr::prod(n - 1, x.clone(), y.clone()), sig)?.scale(&Coeff::from_integer(BigInt::from(-(n as i64))))
    };
    ensure(lhs == rhs, || format!("shift rule: {} vs {}", show(sig, &lhs), show(sig, &rhs)))
}

/// `b(n)b' = 0` for generators and `n >= N`.
pub fn generator_locality(sig: &Signature, b: Generator, n: u32, c: Generator) -> Check {
    let p = norm(&RawExpr::prod(n, RawExpr::gen(b), RawExpr::gen(c)), sig)?;
    ensure(n < sig.locality() || p.is_zero(), || format!("b({n})b' = {}", show(sig, &p)))
}

/// `(x(n)y)(m)z = Σ_t (-1)^t C(n,t) x(n-t)(y(m+t)z)`.
pub fn associative(sig: &Signature, x: &RawExpr, n: u32, y: &RawExpr, m: u32, z: &RawExpr) -> Check {
    let lhs = norm(&RawExpr::prod(m, RawExpr::prod(n, x.clone(), y.clone()), z.clone()), sig)?;
    let mut rhs = Polynomial::zero();
    for t in 0..=n {
        let inner = RawExpr::prod(n - t, x.clone(), RawExpr::prod(m + t, y.clone(), z.clone()));
        rhs.add_scaled(&norm(&inner, sig)?, &(signed(t) * binom(n, t)));
    }
    ensure(lhs == rhs, || format!("associative identity: {} vs {}", show(sig, &lhs), show(sig, &rhs)))
}

/// `x(n)(y(m)z) = Σ_t C(n,t) (x(n-t)y)(m+t)z`.
pub fn associative_inverse(sig: &Signature, x: &RawExpr, n: u32, y: &RawExpr, m: u32, z: &RawExpr) -> Check {
    let lhs = norm(&RawExpr::prod(n, x.clone(), RawExpr::prod(m, y.clone(), z.clone())), sig)?;
    let mut rhs = Polynomial::zero();
    for t in 0..=n {
        let inner = RawExpr::prod(m + t, RawExpr::prod(n - t, x.clone(), y.clone()), z.clone());
        rhs.add_scaled(&norm(&inner, sig)?, &binom(n, t));
    }
    ensure(lhs == rhs, || format!("inverted identity: {} vs {}", show(sig, &lhs), show(sig, &rhs)))
}

/// Normalization is linear, and every word of a product tree has as many
/// letters as the tree has leaves.
pub fn linear_and_length_preserving(sig: &Signature, e1: &RawExpr, e2: &RawExpr, a: &Coeff, b: &Coeff) -> Check {
    let p1 = norm(e1, sig)?;
    let p2 = norm(e2, sig)?;
    let both = norm(&RawExpr::Sum(vec![(a.clone(), e1.clone()), (b.clone(), e2.clone())]), sig)?;
    let mut want = p1.scale(a);
    want.add_scaled(&p2, b);
    ensure(both == want, || "normalize is not linear".into())?;
    for (p, e) in [(&p1, e1), (&p2, e2)] {
        ensure(p.words().all(|w| w.len() == e.leaf_count()), || format!("length changed in {}", show(sig, p)))?;
    }
    Ok(())
}

/// `mult(u, n, v)` vanishes for every `n >= locality_bound(u, v)`.
pub fn locality_bound_vanishes(sig: &Signature, u: &NormalWord, v: &NormalWord, extra: u32) -> Check {
    let bound = conformal_gsb::locality_bound(u, v, sig.locality()) as u32;
    let p = mult(u, bound + extra, v, sig.locality());
    ensure(p.is_zero(), || {
        format!("{}({}){} = {}", sig.fmt_word(u), bound + extra, sig.fmt_word(v), show(sig, &p))
    })
}

/// The leading word of `[u](n)[v]` is at most `u^\D ♮ v`, and if `u` is
/// D-free with `n < N` it is exactly `u(n)v`.
pub fn product_leading_bound(sig: &Signature, u: &NormalWord, n: u32, v: &NormalWord) -> Check {
    let p = mult(u, n, v, sig.locality());
    let cap = u.strip_tail_d().splice(v, sig.locality());
    if let Some(lead) = p.leading_word() {
        ensure(*lead <= cap, || format!("leading {} exceeds {}", sig.fmt_word(lead), sig.fmt_word(&cap)))?;
    }
    ensure(p.words().all(|w| w.len() == u.len() + v.len()), || "length not preserved".into())?;
    if u.is_d_free() && n < sig.locality() {
        let exact = u.join(n, v);
        ensure(p.leading() == Some((&exact, &Coeff::from_integer(1.into()))), || {
            format!("leading of {}({n}){} is not the juxtaposition", sig.fmt_word(u), sig.fmt_word(v))
        })?;
    }
    Ok(())
}

/// `u > v`, `u` D-free and `n < N` give `lead(u(n)w) > lead(v(n)w)`, and the
/// same bound holds for an arbitrary polynomial on the left.
pub fn product_monotone(sig: &Signature, u: &NormalWord, v: &NormalWord, n: u32, w: &NormalWord, f: &Polynomial) -> Check {
    let loc = sig.locality();
    if u.is_d_free() && u > v && n < loc {
        let pu = mult(u, n, w, loc);
        if let Some(lv) = mult(v, n, w, loc).leading_word() {
            ensure(pu.leading_word().is_some_and(|lu| lu > lv), || "product not monotone".into())?;
        }
    }
    if let (Some(fl), Some(l)) = (f.leading_word(), mult_poly_word(f, n, w, loc).leading_word()) {
        let cap = fl.strip_tail_d().splice(w, loc);
        ensure(*l <= cap, || "polynomial product exceeds its bound".into())?;
    }
    Ok(())
}

/// `lead(D^i p) = lead(p) D^i` with the same coefficient, and `D^i` keeps
/// the order between words.
pub fn derivation_leading(sig: &Signature, p: &Polynomial, u: &NormalWord, v: &NormalWord, i: u32) -> Check {
    let d = apply_d(p, i);
    match p.leading() {
        None => ensure(d.is_zero(), || "D of zero".into())?,
        Some((w, c)) => {
            let want = w.append_d(i);
            ensure(d.leading() == Some((&want, c)), || format!("lead of D^{i} of {}", show(sig, p)))?;
        }
    }
    if u > v {
        let lu = apply_d(&Polynomial::word(u.clone()), i);
        let lv = apply_d(&Polynomial::word(v.clone()), i);
        ensure(lu.leading_word() > lv.leading_word(), || "D^i is not monotone".into())?;
    }
    Ok(())
}

/// A random valid normal S-word over a random member of `set`.
pub fn pattern<R: Rng>(rng: &mut R, sig: &Signature, set: &RelationSet) -> Pattern {
    let loc = sig.locality();
    let d_free: Vec<usize> = (0..set.len()).filter(|&i| set.leading_word(i).is_d_free()).collect();
    let prefix = if rng.random_bool(0.5) { Some((d_free_word(rng, sig, 2), rng.random_range(0..loc))) } else { None };
    if !d_free.is_empty() && rng.random_bool(0.5) {
        let rel = d_free[rng.random_range(0..d_free.len())];
        Pattern { prefix, rel, kind: PatternKind::Inner { m: rng.random_range(0..loc), c: word(rng, sig, 2, 2) } }
    } else {
        Pattern { prefix, rel: rng.random_range(0..set.len()), kind: PatternKind::Suffix { i: rng.random_range(0..=2) } }
    }
}

/// The value of a normal S-word is monic with the declared leading word.
pub fn pattern_leading_law(sig: &Signature, set: &RelationSet, p: &Pattern) -> Check {
    let v = p.eval(set).map_err(|e| e.to_string())?;
    let want = p.leading_word(set);
    ensure(v.leading() == Some((&want, &Coeff::from_integer(1.into()))), || {
        format!("pattern value {} does not lead with {}", show(sig, &v), sig.fmt_word(&want))
    })
}

/// The trace re-sums to the input, the remainder is irreducible, and
/// reducing it again changes nothing.
pub fn trace_sound(sig: &Signature, set: &RelationSet, p: &Polynomial) -> Check {
    let t = reduce(p, set);
    ensure(t.reconstruct(set) == *p, || format!("trace of {} does not re-sum", show(sig, p)))?;
    ensure(t.remainder.words().all(|w| !set.is_reducible(w)), || "remainder has a reducible word".into())?;
    ensure(remainder(&t.remainder, set) == t.remainder, || "reduction is not idempotent".into())
}

/// Leftmost and rightmost division agree.
pub fn confluent(sig: &Signature, set: &RelationSet, p: &Polynomial) -> Check {
    let l = reduce_with(p, set, Strategy::Leftmost, false).remainder;
    let r = reduce_with(p, set, Strategy::Rightmost, false).remainder;
    ensure(l == r, || format!("{}: leftmost {} vs rightmost {}", show(sig, p), show(sig, &l), show(sig, &r)))
}

/// Word comparison is a total order consistent with equality.
pub fn total_order(u: &NormalWord, v: &NormalWord, w: &NormalWord) -> Check {
    use std::cmp::Ordering::*;
    ensure(u.cmp(v) == v.cmp(u).reverse(), || "antisymmetry".into())?;
    ensure((u.cmp(v) == Equal) == (u == v), || "equality".into())?;
    if u <= v && v <= w {
        ensure(u <= w, || "transitivity".into())?;
    }
    ensure(u.cmp(u) == Equal, || "reflexivity".into())
}

/// Printing then parsing gives the same polynomial.
pub fn round_trip(sig: &Signature, p: &Polynomial) -> Check {
    let text = sig.fmt_poly(p);
    let back = sig.parse_poly(&text).map_err(|e| format!("{text}: {e}"))?;
    ensure(back == *p, || format!("round trip changed {text}"))
}

/// A random element of `Id(S)`: a combination of normal S-words.
pub fn ideal_member<R: Rng>(rng: &mut R, sig: &Signature, set: &RelationSet, terms: usize) -> Polynomial {
    let mut out = Polynomial::zero();
    for _ in 0..terms {
        let p = pattern(rng, sig, set);
        out.add_scaled(&p.eval(set).expect("valid pattern"), &coeff(rng));
    }
    out
}

/// A random nonzero combination of irreducible words.
pub fn irr_combination<R: Rng>(rng: &mut R, irr: &[NormalWord], terms: usize) -> Polynomial {
    loop {
        let p = Polynomial::from_terms((0..terms).map(|_| (irr[rng.random_range(0..irr.len())].clone(), coeff(rng))));
        if !p.is_zero() {
            return p;
        }
    }
}
