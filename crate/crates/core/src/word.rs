//! Associative normal words `b1(n1) b2(n2) ... bk(nk) D^i b(k+1)`.

use std::cmp::Ordering;

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::signature::{Generator, Signature};

/// A non-final letter of a normal word together with the product index that
/// joins it to the rest of the word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: Generator,
    pub index: u32,
}

pub(crate) type Body = SmallVec<[Letter; 4]>;

/// Right-normed word `[u]`, stored flat. The derivation can only sit on the
/// last letter (`dpow` is `ind(u)`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NormalWord {
    pub(crate) body: Body,
    pub(crate) tail: Generator,
    pub(crate) dpow: u32,
}

impl NormalWord {
    /// `D^dpow tail`.
    pub fn letter(tail: Generator, dpow: u32) -> Self {
        NormalWord { body: Body::new(), tail, dpow }
    }

    /// Builds a word without checking junction indices against a locality
    /// bound; see [`Signature::word`] for the checked version.
    pub fn from_parts(body: impl IntoIterator<Item = (Generator, u32)>, tail: Generator, dpow: u32) -> Self {
        NormalWord {
            body: body.into_iter().map(|(gen, index)| Letter { gen, index }).collect(),
            tail,
            dpow,
        }
    }

    pub fn len(&self) -> usize {
        self.body.len() + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn body(&self) -> &[Letter] {
        &self.body
    }

    pub fn tail(&self) -> Generator {
        self.tail
    }

    pub fn dpow(&self) -> u32 {
        self.dpow
    }

    pub fn is_d_free(&self) -> bool {
        self.dpow == 0
    }

    /// Generator at position `i` (0-based, the tail is `len() - 1`).
    pub fn gen_at(&self, i: usize) -> Generator {
        if i < self.body.len() {
            self.body[i].gen
        } else {
            self.tail
        }
    }

    pub fn generators(&self) -> impl Iterator<Item = Generator> + '_ {
        self.body.iter().map(|l| l.gen).chain(std::iter::once(self.tail))
    }

    /// `u^{\D}`: the same word with the derivation removed.
    pub fn strip_tail_d(&self) -> NormalWord {
        NormalWord { body: self.body.clone(), tail: self.tail, dpow: 0 }
    }

    /// `u D^l`.
    pub fn append_d(&self, l: u32) -> NormalWord {
        NormalWord { body: self.body.clone(), tail: self.tail, dpow: self.dpow + l }
    }

    /// `u^{\D} ♮ v`: concatenation with every junction set to `N - 1`.
    pub fn splice(&self, v: &NormalWord, locality: u32) -> NormalWord {
        let top = locality - 1;
        let mut body = self.body.clone();
        body.push(Letter { gen: self.tail, index: top });
        body.extend(v.body.iter().map(|l| Letter { gen: l.gen, index: top }));
        NormalWord { body, tail: v.tail, dpow: v.dpow }
    }

    /// `self(n) rest` for a D-free `self`; the result is again a normal word
    /// whenever `n < N`.
    pub fn join(&self, n: u32, rest: &NormalWord) -> NormalWord {
        debug_assert!(self.is_d_free(), "join needs a D-free prefix");
        let mut body = Body::with_capacity(self.body.len() + rest.body.len() + 1);
        body.extend_from_slice(&self.body);
        body.push(Letter { gen: self.tail, index: n });
        body.extend_from_slice(&rest.body);
        NormalWord { body, tail: rest.tail, dpow: rest.dpow }
    }

    /// `b(n) rest` for a single generator `b`.
    pub fn prepend(b: Generator, n: u32, rest: &NormalWord) -> NormalWord {
        let mut body = Body::with_capacity(rest.body.len() + 1);
        body.push(Letter { gen: b, index: n });
        body.extend_from_slice(&rest.body);
        NormalWord { body, tail: rest.tail, dpow: rest.dpow }
    }

    /// Letters `[from, to]` (inclusive) as a word; the derivation is kept only
    /// when the slice reaches the end.
    pub fn slice(&self, from: usize, to: usize) -> NormalWord {
        debug_assert!(from <= to && to < self.len());
        let last = self.len() - 1;
        let body: Body = self.body[from..to].iter().copied().collect();
        let dpow = if to == last { self.dpow } else { 0 };
        NormalWord { body, tail: self.gen_at(to), dpow }
    }

    /// The word with its first letter removed, plus that letter.
    pub fn split_first(&self) -> Option<(Letter, NormalWord)> {
        let (&first, rest) = self.body.split_first()?;
        Some((first, NormalWord { body: rest.iter().copied().collect(), tail: self.tail, dpow: self.dpow }))
    }

    /// Largest `|index|` over indexed generators, if any.
    pub fn max_abs_index(&self) -> Option<u64> {
        self.generators().filter_map(|g| g.index()).map(i64::unsigned_abs).max()
    }

    /// `wt(u)` with the interior letters paired with their junction indices.
    pub fn weight(&self) -> (usize, Vec<(Generator, u32)>, Generator, u32) {
        (self.len(), self.body.iter().map(|l| (l.gen, l.index)).collect(), self.tail, self.dpow)
    }
}

impl Ord for NormalWord {
    /// Lexicographic order on `(|u|, b1, n1, ..., bk, nk, b(k+1), ind)`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| {
                for (a, b) in self.body.iter().zip(other.body.iter()) {
                    let c = a.gen.cmp(&b.gen).then(a.index.cmp(&b.index));
                    if c != Ordering::Equal {
                        return c;
                    }
                }
                Ordering::Equal
            })
            .then(self.tail.cmp(&other.tail))
            .then(self.dpow.cmp(&other.dpow))
    }
}

impl PartialOrd for NormalWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Signature {
    /// Checked constructor: all generators must belong to the signature and
    /// all junction indices must be below `N`.
    pub fn word(&self, body: &[(Generator, u32)], tail: Generator, dpow: u32) -> Result<NormalWord> {
        let w = NormalWord::from_parts(body.iter().copied(), tail, dpow);
        self.check_word(&w)?;
        Ok(w)
    }

    pub fn check_word(&self, w: &NormalWord) -> Result<()> {
        for l in &w.body {
            if !self.owns(l.gen) {
                return Err(Error::SignatureMismatch);
            }
            if l.index >= self.locality() {
                return Err(Error::IndexNotNormal { index: l.index, locality: self.locality() });
            }
        }
        if !self.owns(w.tail) {
            return Err(Error::SignatureMismatch);
        }
        Ok(())
    }

    /// Word comparison that first checks both words belong to this signature.
    pub fn compare_words(&self, u: &NormalWord, v: &NormalWord) -> Result<Ordering> {
        self.check_word(u)?;
        self.check_word(v)?;
        Ok(u.cmp(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig() -> Signature {
        Signature::finite(2, &["a", "b", "c"]).unwrap()
    }

    #[test]
    fn d_on_last_letter_beats_plain() {
        // a(0)Da > a(0)a
        let s = Signature::finite(1, &["a"]).unwrap();
        let a = s.gen("a").unwrap();
        let lhs = s.word(&[(a, 0)], a, 1).unwrap();
        let rhs = s.word(&[(a, 0)], a, 0).unwrap();
        assert_eq!(s.compare_words(&lhs, &rhs).unwrap(), Ordering::Greater);
        assert_eq!(s.compare_words(&lhs, &lhs).unwrap(), Ordering::Equal);
    }

    #[test]
    fn length_dominates() {
        let s = sig();
        let (a, c) = (s.gen("a").unwrap(), s.gen("c").unwrap());
        let long = s.word(&[(a, 0), (a, 0)], a, 0).unwrap();
        let short = s.word(&[(c, 1)], c, 9).unwrap();
        assert!(long > short);
    }

    #[test]
    fn strip_append_splice() {
        let s = sig();
        let (a, b, c) = (s.gen("a").unwrap(), s.gen("b").unwrap(), s.gen("c").unwrap());
        let u = s.word(&[(a, 1)], b, 3).unwrap();
        assert_eq!(u.strip_tail_d(), s.word(&[(a, 1)], b, 0).unwrap());
        assert_eq!(NormalWord::letter(b, 2).strip_tail_d(), NormalWord::letter(b, 0));
        assert_eq!(u.append_d(0), u);
        assert_eq!(NormalWord::letter(b, 1).append_d(1), NormalWord::letter(b, 2));
        assert_eq!(s.word(&[(a, 0)], b, 0).unwrap().append_d(2), s.word(&[(a, 0)], b, 2).unwrap());

        let ab = s.word(&[(a, 0)], b, 0).unwrap();
        assert_eq!(ab.splice(&NormalWord::letter(c, 0), 2), s.word(&[(a, 0), (b, 1)], c, 0).unwrap());
        let v = NormalWord::letter(b, 4);
        assert_eq!(NormalWord::letter(a, 0).splice(&v, 2), s.word(&[(a, 1)], b, 4).unwrap());
    }

    #[test]
    fn mismatch_is_reported() {
        let s = sig();
        let other = Signature::finite(2, &["x", "y", "z", "w"]).unwrap();
        let w = other.word(&[], other.gen("w").unwrap(), 0).unwrap();
        let a = NormalWord::letter(s.gen("a").unwrap(), 0);
        assert_eq!(s.compare_words(&a, &w), Err(Error::SignatureMismatch));
        assert!(matches!(
            s.word(&[(s.gen("a").unwrap(), 2)], s.gen("a").unwrap(), 0),
            Err(Error::IndexNotNormal { .. })
        ));
    }

    #[test]
    fn slices() {
        let s = sig();
        let (a, b, c) = (s.gen("a").unwrap(), s.gen("b").unwrap(), s.gen("c").unwrap());
        let u = s.word(&[(a, 1), (b, 0)], c, 2).unwrap();
        assert_eq!(u.slice(0, 1), s.word(&[(a, 1)], b, 0).unwrap());
        assert_eq!(u.slice(1, 2), s.word(&[(b, 0)], c, 2).unwrap());
        assert_eq!(u.slice(2, 2), NormalWord::letter(c, 2));
        let (first, rest) = u.split_first().unwrap();
        assert_eq!(first, Letter { gen: a, index: 1 });
        assert_eq!(rest, u.slice(1, 2));
    }
}
