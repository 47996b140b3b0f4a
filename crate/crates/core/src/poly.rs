//! Finite rational combinations of normal words.

use std::collections::btree_map::{self, BTreeMap, Entry};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::word::NormalWord;

pub type Coeff = BigRational;

pub fn int(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Coeff {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Element of `C(B, N)` in the normal-word basis. Zero coefficients are never
/// stored; iteration order is ascending, so the leading word is the last key.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Polynomial {
    terms: BTreeMap<NormalWord, Coeff>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn monomial(word: NormalWord, coeff: Coeff) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(word, coeff);
        p
    }

    pub fn word(word: NormalWord) -> Self {
        Polynomial::monomial(word, Coeff::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (NormalWord, Coeff)>) -> Self {
        let mut p = Polynomial::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `f̄` together with its coefficient; `None` stands for `0̄ = 0`.
    pub fn leading(&self) -> Option<(&NormalWord, &Coeff)> {
        self.terms.iter().next_back()
    }

    pub fn leading_word(&self) -> Option<&NormalWord> {
        self.terms.keys().next_back()
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.values().next_back()
    }

    pub fn coeff(&self, w: &NormalWord) -> Option<&Coeff> {
        self.terms.get(w)
    }

    /// Terms in descending word order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&NormalWord, &Coeff)> + ExactSizeIterator {
        self.terms.iter().rev()
    }

    pub fn words(&self) -> impl DoubleEndedIterator<Item = &NormalWord> {
        self.terms.keys().rev()
    }

    pub fn add_term(&mut self, w: NormalWord, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Polynomial, c: &Coeff) {
        if c.is_zero() {
            return;
        }
        for (w, d) in &other.terms {
            self.add_term(w.clone(), d * c);
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.add_scaled(other, &Coeff::one());
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.add_scaled(other, &-Coeff::one());
        out
    }

    pub fn negate(&self) -> Polynomial {
        self.scale(&-Coeff::one())
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(w, d)| (w.clone(), d * c)).collect() }
    }

    pub fn make_monic(&self) -> Result<Polynomial> {
        let lc = self.leading_coeff().ok_or(Error::ZeroPolynomial)?;
        Ok(self.scale(&lc.recip()))
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(|c| c.is_one())
    }

    /// Every word has `ind = 0`.
    pub fn is_d_free(&self) -> bool {
        self.terms.keys().all(NormalWord::is_d_free)
    }

    pub fn max_dpow(&self) -> u32 {
        self.terms.keys().map(NormalWord::dpow).max().unwrap_or(0)
    }

    /// Drops and returns the leading term.
    pub fn pop_leading(&mut self) -> Option<(NormalWord, Coeff)> {
        self.terms.pop_last()
    }

    /// `p - p̄` (leading term removed).
    pub fn tail_part(&self) -> Polynomial {
        let mut out = self.clone();
        out.pop_leading();
        out
    }

    /// Map every word through `f`, summing collisions.
    pub fn map_words(&self, mut f: impl FnMut(&NormalWord) -> NormalWord) -> Polynomial {
        let mut out = Polynomial::zero();
        for (w, c) in &self.terms {
            out.add_term(f(w), c.clone());
        }
        out
    }

    /// Largest `|index|` across all words.
    pub fn max_abs_index(&self) -> Option<u64> {
        self.terms.keys().filter_map(NormalWord::max_abs_index).max()
    }

    /// Normalizes the sign so the leading coefficient is positive; used when
    /// comparing presentations up to scaling.
    pub fn has_negative_leading(&self) -> bool {
        self.leading_coeff().is_some_and(|c| c.is_negative())
    }
}

impl IntoIterator for Polynomial {
    type Item = (NormalWord, Coeff);
    type IntoIter = std::iter::Rev<btree_map::IntoIter<NormalWord, Coeff>>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter().rev()
    }
}

impl std::ops::Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.negate()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signature::Signature;

    fn words() -> (NormalWord, NormalWord) {
        let s = Signature::finite(2, &["a"]).unwrap();
        let a = s.gen("a").unwrap();
        (s.word(&[(a, 1)], a, 0).unwrap(), s.word(&[(a, 0)], a, 1).unwrap())
    }

    #[test]
    fn leading_term() {
        let (a1a, a0da) = words();
        // a(1)a - a(0)Da: junction index 1 beats 0 before the D-power is reached
        let p = Polynomial::from_terms([(a1a.clone(), int(1)), (a0da.clone(), int(-1))]);
        assert_eq!(p.leading_word(), Some(&a1a));
        assert_eq!(Polynomial::zero().leading_word(), None);
        let m = Polynomial::monomial(a0da.clone(), int(3));
        assert_eq!(m.leading(), Some((&a0da, &int(3))));
    }

    #[test]
    fn arithmetic() {
        let (a1a, a0da) = words();
        let p = Polynomial::from_terms([(a1a.clone(), int(2)), (a0da.clone(), int(-2))]);
        assert!(p.add(&p.negate()).is_zero());
        assert!(p.scale(&int(0)).is_zero());
        let monic = p.make_monic().unwrap();
        assert_eq!(monic, Polynomial::from_terms([(a1a, int(1)), (a0da, int(-1))]));
        assert!(monic.is_monic());
        assert_eq!(Polynomial::zero().make_monic(), Err(Error::ZeroPolynomial));
        assert!(!p.is_d_free());
        assert_eq!(p.max_dpow(), 1);
    }

    #[test]
    fn zero_terms_are_dropped() {
        let (a1a, _) = words();
        let mut p = Polynomial::monomial(a1a.clone(), ratio(1, 2));
        p.add_term(a1a, ratio(-1, 2));
        assert!(p.is_zero());
        assert_eq!(p.len(), 0);
    }
}
