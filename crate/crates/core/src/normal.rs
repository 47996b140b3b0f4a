//! Rewriting arbitrary expressions of `C(B, N)` into the normal-word basis.
//!
//! Everything reduces to two primitives: the `n`-product of two normal words
//! ([`mult`]) and the derivation of a normal word ([`apply_d`]). Both follow a
//! fixed recursion so outputs are deterministic:
//!
//! * `D^i b (n) X = (-1)^i n!/(n-i)! b(n-i) X`, zero when `n < i`;
//! * `b(n) X` with `n < N` is already normal;
//! * `b(n) D^j b'` with `n >= N` expands through `b(n) D Y = D(b(n) Y) + n b(n-1) Y`;
//! * `b(n) (b'(m) X)` with `n >= N` is `-Σ_{k>=1} (-1)^k C(n,k) b(n-k)(b'(m+k) X)`,
//!   the inner product being normalized first;
//! * `(b(m) U)(n) V = Σ_k (-1)^k C(m,k) b(m-k)(U(n+k) V)`;
//! * `D(b(n) X) = -n b(n-1) X + b(n) D X`;
//! * `b(n) b' = 0` for `n >= N`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{Coeff, Polynomial};
use crate::signature::{Generator, Signature};
use crate::word::NormalWord;

/// Unnormalized expression tree over `D^ω(B)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RawExpr {
    Gen(Generator),
    /// `D^k e`
    D(u32, Box<RawExpr>),
    /// `(left)(n)(right)`
    Prod(u32, Box<RawExpr>, Box<RawExpr>),
    Sum(Vec<(Coeff, RawExpr)>),
}

impl RawExpr {
    pub fn gen(g: Generator) -> Self {
        RawExpr::Gen(g)
    }

    pub fn d(k: u32, e: RawExpr) -> Self {
        RawExpr::D(k, Box::new(e))
    }

    pub fn prod(n: u32, l: RawExpr, r: RawExpr) -> Self {
        RawExpr::Prod(n, Box::new(l), Box::new(r))
    }

    /// The right-normed bracketing of a normal word.
    pub fn from_word(w: &NormalWord) -> Self {
        let mut acc = RawExpr::d(w.dpow(), RawExpr::Gen(w.tail()));
        for l in w.body().iter().rev() {
            acc = RawExpr::prod(l.index, RawExpr::Gen(l.gen), acc);
        }
        acc
    }

    pub fn from_poly(p: &Polynomial) -> Self {
        RawExpr::Sum(p.terms().map(|(w, c)| (c.clone(), RawExpr::from_word(w))).collect())
    }

    /// Number of generator occurrences; for a product tree this is the
    /// length every normal word of the result has.
    pub fn leaf_count(&self) -> usize {
        match self {
            RawExpr::Gen(_) => 1,
            RawExpr::D(_, e) => e.leaf_count(),
            RawExpr::Prod(_, l, r) => l.leaf_count() + r.leaf_count(),
            RawExpr::Sum(ts) => ts.iter().map(|(_, e)| e.leaf_count()).max().unwrap_or(0),
        }
    }
}

fn falling(n: u32, k: u32) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, t| acc * BigInt::from(n - t))
}

fn binom(n: u32, k: u32) -> BigInt {
    binomial(BigInt::from(n), BigInt::from(k))
}

fn sign(k: u32) -> BigInt {
    if k.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// `D^j [u]` in the normal-word basis.
pub fn derive_word(u: &NormalWord, j: u32) -> Polynomial {
    let mut out = Polynomial::zero();
    derive_into(&mut out, &Coeff::one(), u, j);
    out
}

fn derive_into(acc: &mut Polynomial, c: &Coeff, u: &NormalWord, j: u32) {
    if j == 0 {
        acc.add_term(u.clone(), c.clone());
        return;
    }
    let Some((first, rest)) = u.split_first() else {
        acc.add_term(u.append_d(j), c.clone());
        return;
    };
    // D^j(b(n)X) = Σ_t C(j,t) (-1)^t n!/(n-t)! b(n-t) D^{j-t} X
    for t in 0..=j.min(first.index) {
        let k = Coeff::from_integer(binom(j, t) * sign(t) * falling(first.index, t)) * c;
        let mut inner = Polynomial::zero();
        derive_into(&mut inner, &k, &rest, j - t);
        for (w, d) in inner {
            acc.add_term(NormalWord::prepend(first.gen, first.index - t, &w), d);
        }
    }
}

/// `D^j p`.
pub fn apply_d(p: &Polynomial, j: u32) -> Polynomial {
    let mut out = Polynomial::zero();
    for (w, c) in p.terms() {
        derive_into(&mut out, c, w, j);
    }
    out
}

/// `[u](n)[v]` in the normal-word basis.
pub fn mult(u: &NormalWord, n: u32, v: &NormalWord, locality: u32) -> Polynomial {
    let mut out = Polynomial::zero();
    ProductCache::new(locality).mult_into(&mut out, &Coeff::one(), u, n, v);
    out
}

/// `p(n)q` extended bilinearly.
pub fn mult_poly(p: &Polynomial, n: u32, q: &Polynomial, locality: u32) -> Polynomial {
    let mut out = Polynomial::zero();
    let mut ctx = ProductCache::new(locality);
    for (u, a) in p.terms() {
        for (v, b) in q.terms() {
            ctx.mult_into(&mut out, &(a * b), u, n, v);
        }
    }
    out
}

/// `p(n)[v]`.
pub fn mult_poly_word(p: &Polynomial, n: u32, v: &NormalWord, locality: u32) -> Polynomial {
    let mut out = Polynomial::zero();
    let mut ctx = ProductCache::new(locality);
    for (u, a) in p.terms() {
        ctx.mult_into(&mut out, a, u, n, v);
    }
    out
}

/// `[u](n)q`.
pub fn mult_word_poly(u: &NormalWord, n: u32, q: &Polynomial, locality: u32) -> Polynomial {
    let mut out = Polynomial::zero();
    let mut ctx = ProductCache::new(locality);
    for (v, b) in q.terms() {
        ctx.mult_into(&mut out, b, u, n, v);
    }
    out
}

/// Product evaluation with a memo of `b(n)v` for `n >= N`. The solved
/// locality identity revisits the same subproducts many times, so without
/// the memo the cost grows exponentially in `n`.
///
/// One cache can serve many calls; that pays off when the right factors
/// repeat, as in a sweep over `u` and `n` with `v` fixed.
pub struct ProductCache {
    locality: u32,
    memo: HashMap<(Generator, u32, NormalWord), Polynomial>,
}

impl ProductCache {
    pub fn new(locality: u32) -> Self {
        ProductCache { locality, memo: HashMap::new() }
    }

    /// Same as [`mult`].
    pub fn mult(&mut self, u: &NormalWord, n: u32, v: &NormalWord) -> Polynomial {
        let mut out = Polynomial::zero();
        self.mult_into(&mut out, &Coeff::one(), u, n, v);
        out
    }

    fn mult_into(&mut self, acc: &mut Polynomial, c: &Coeff, u: &NormalWord, n: u32, v: &NormalWord) {
        match u.split_first() {
            None => {
                let i = u.dpow();
                if i == 0 {
                    self.gen_mult_into(acc, c, u.tail(), n, v);
                } else if n >= i {
                    let k = Coeff::from_integer(sign(i) * falling(n, i)) * c;
                    self.gen_mult_into(acc, &k, u.tail(), n - i, v);
                }
            }
            Some((first, rest)) => {
                // (b(m)U)(n)V = Σ_k (-1)^k C(m,k) b(m-k)(U(n+k)V); m < N so every
                // outer product is already normal.
                let m = first.index;
                for k in 0..=m {
                    let coef = Coeff::from_integer(sign(k) * binom(m, k)) * c;
                    let mut inner = Polynomial::zero();
                    self.mult_into(&mut inner, &coef, &rest, n + k, v);
                    for (w, d) in inner {
                        acc.add_term(NormalWord::prepend(first.gen, m - k, &w), d);
                    }
                }
            }
        }
    }

    fn gen_mult_into(&mut self, acc: &mut Polynomial, c: &Coeff, b: Generator, n: u32, v: &NormalWord) {
        if n < self.locality {
            acc.add_term(NormalWord::prepend(b, n, v), c.clone());
            return;
        }
        let key = (b, n, v.clone());
        if let Some(p) = self.memo.get(&key) {
            acc.add_scaled(p, c);
            return;
        }
        let p = self.gen_mult_high(b, n, v);
        acc.add_scaled(&p, c);
        self.memo.insert(key, p);
    }

    /// `b(n)v` for `n >= N`.
    fn gen_mult_high(&mut self, b: Generator, n: u32, v: &NormalWord) -> Polynomial {
        let mut out = Polynomial::zero();
        match v.split_first() {
            None => {
                // b(n) D^j b' = Σ_k C(j,k) n!/(n-k)! D^{j-k}(b(n-k) b'), and only
                // the terms with n-k < N survive locality.
                let j = v.dpow();
                let lo = n - self.locality + 1;
                for k in lo..=j.min(n) {
                    let coef = Coeff::from_integer(binom(j, k) * falling(n, k));
                    let base = NormalWord::prepend(b, n - k, &NormalWord::letter(v.tail(), 0));
                    derive_into(&mut out, &coef, &base, j - k);
                }
            }
            Some((first, rest)) => {
                // (b(n)b')(m)X = 0 for n >= N, solved for the t = 0 term.
                for t in 1..=n {
                    let coef = Coeff::from_integer(-(sign(t) * binom(n, t)));
                    let mut inner = Polynomial::zero();
                    self.gen_mult_into(&mut inner, &Coeff::one(), first.gen, first.index + t, &rest);
                    for (w, d) in inner {
                        self.gen_mult_into(&mut out, &(&coef * d), b, n - t, &w);
                    }
                }
            }
        }
        out
    }
}

/// Normalize an expression tree over `sig`.
pub fn normalize(e: &RawExpr, sig: &Signature) -> Result<Polynomial> {
    let n = sig.locality();
    match e {
        RawExpr::Gen(g) => {
            if !sig.owns(*g) {
                return Err(Error::SignatureMismatch);
            }
            Ok(Polynomial::word(NormalWord::letter(*g, 0)))
        }
        RawExpr::D(k, inner) => Ok(apply_d(&normalize(inner, sig)?, *k)),
        RawExpr::Prod(idx, l, r) => Ok(mult_poly(&normalize(l, sig)?, *idx, &normalize(r, sig)?, n)),
        RawExpr::Sum(terms) => {
            let mut out = Polynomial::zero();
            for (c, t) in terms {
                if c.is_zero() {
                    continue;
                }
                out.add_scaled(&normalize(t, sig)?, c);
            }
            Ok(out)
        }
    }
}

/// An `M` with `[u](n)[v] = 0` for every `n >= M`:
/// `M = |v|(N-1) + 1 + ind(v) + ind(u)`.
///
/// For a bare generator `b`, `b(n)(b'(m)V)` only produces terms
/// `b(n-t)(b'(m+t)V)` with `n + m` preserved, so the bound for `|v|` letters
/// is the bound for `|v|-1` letters plus `N-1`; a leading `D^i` shifts the
/// index by `i`, and extra letters on the left never raise it.
pub fn locality_bound(u: &NormalWord, v: &NormalWord, locality: u32) -> u64 {
    let n1 = u64::from(locality - 1);
    v.len() as u64 * n1 + 1 + u64::from(v.dpow()) + u64::from(u.dpow())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int;

    struct Fx {
        sig: Signature,
        a: Generator,
        b: Generator,
        c: Generator,
    }

    fn fx(n: u32) -> Fx {
        let sig = Signature::finite(n, &["a", "b", "c"]).unwrap();
        Fx { a: sig.gen("a").unwrap(), b: sig.gen("b").unwrap(), c: sig.gen("c").unwrap(), sig }
    }

    fn w(body: &[(Generator, u32)], tail: Generator, d: u32) -> NormalWord {
        NormalWord::from_parts(body.iter().copied(), tail, d)
    }

    #[test]
    fn shift_rule() {
        // Da(1)b = -a(0)b
        let f = fx(2);
        let e = RawExpr::prod(1, RawExpr::d(1, RawExpr::gen(f.a)), RawExpr::gen(f.b));
        let p = normalize(&e, &f.sig).unwrap();
        assert_eq!(p, Polynomial::monomial(w(&[(f.a, 0)], f.b, 0), int(-1)));
    }

    #[test]
    fn associative_identity_example() {
        // (a(1)b)(0)c = a(1)b(0)c - a(0)b(1)c when N = 2
        let f = fx(2);
        let e = RawExpr::prod(0, RawExpr::prod(1, RawExpr::gen(f.a), RawExpr::gen(f.b)), RawExpr::gen(f.c));
        let p = normalize(&e, &f.sig).unwrap();
        let expected = Polynomial::from_terms([
            (w(&[(f.a, 1), (f.b, 0)], f.c, 0), int(1)),
            (w(&[(f.a, 0), (f.b, 1)], f.c, 0), int(-1)),
        ]);
        assert_eq!(p, expected);
    }

    #[test]
    fn non_monotone_products_in_n1() {
        let sig = Signature::finite(1, &["a"]).unwrap();
        let a = sig.gen("a").unwrap();
        // (a(0)Da)(0)a = 0
        let lhs = RawExpr::prod(0, RawExpr::prod(0, RawExpr::gen(a), RawExpr::d(1, RawExpr::gen(a))), RawExpr::gen(a));
        assert!(normalize(&lhs, &sig).unwrap().is_zero());
        // a(0)(a(0)a) is the normal word a(0)a(0)a
        let rhs = RawExpr::prod(0, RawExpr::gen(a), RawExpr::prod(0, RawExpr::gen(a), RawExpr::gen(a)));
        assert_eq!(normalize(&rhs, &sig).unwrap(), Polynomial::word(w(&[(a, 0), (a, 0)], a, 0)));
    }

    #[test]
    fn mult_examples() {
        let f = fx(2);
        assert_eq!(
            mult(&w(&[], f.a, 0), 0, &w(&[], f.b, 0), 2),
            Polynomial::word(w(&[(f.a, 0)], f.b, 0))
        );
        // falling factorial 1!/(1-2)! vanishes
        assert!(mult(&w(&[], f.a, 2), 1, &w(&[], f.b, 0), 2).is_zero());
        // b(2)Db' = D(b(2)b') + 2 b(1)b' = 2 b(1)b'  (hand expansion)
        assert_eq!(
            mult(&w(&[], f.b, 0), 2, &w(&[], f.c, 1), 2),
            Polynomial::monomial(w(&[(f.b, 1)], f.c, 0), int(2))
        );
    }

    #[test]
    fn derivation_examples() {
        let f = fx(2);
        assert_eq!(derive_word(&w(&[], f.b, 3), 1), Polynomial::word(w(&[], f.b, 4)));
        // D(a(0)b) = a(0)Db
        assert_eq!(derive_word(&w(&[(f.a, 0)], f.b, 0), 1), Polynomial::word(w(&[(f.a, 0)], f.b, 1)));
        // D(a(1)b) = -a(0)b + a(1)Db
        assert_eq!(
            derive_word(&w(&[(f.a, 1)], f.b, 0), 1),
            Polynomial::from_terms([(w(&[(f.a, 0)], f.b, 0), int(-1)), (w(&[(f.a, 1)], f.b, 1), int(1))])
        );
    }

    #[test]
    fn bound_values() {
        let f = fx(2);
        for j in 0..4 {
            assert_eq!(locality_bound(&w(&[], f.b, 0), &w(&[], f.c, j), 2), u64::from(2 + j));
        }
        assert_eq!(locality_bound(&w(&[], f.b, 0), &w(&[(f.b, 0)], f.c, 0), 2), 3);
    }

    #[test]
    fn unknown_generator_is_rejected() {
        let f = fx(2);
        let other = Signature::finite(2, &["x", "y", "z", "q"]).unwrap();
        let e = RawExpr::gen(other.gen("q").unwrap());
        assert_eq!(normalize(&e, &f.sig), Err(Error::SignatureMismatch));
    }
}
