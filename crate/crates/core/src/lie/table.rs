//! `k[D]`-combinations of generators and Lie conformal multiplication tables.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{Coeff, Polynomial};
use crate::signature::{Generator, Signature};
use crate::word::NormalWord;

/// `Σ α_t D^{d_t} b_t`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct KdElement {
    terms: BTreeMap<(Generator, u32), Coeff>,
}

impl KdElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(g: Generator, dpow: u32, c: Coeff) -> Self {
        let mut e = Self::zero();
        e.add_term(g, dpow, c);
        e
    }

    pub fn add_term(&mut self, g: Generator, dpow: u32, c: Coeff) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((g, dpow)).or_insert_with(Coeff::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(g, dpow));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Generator, u32, &Coeff)> {
        self.terms.iter().map(|(&(g, d), c)| (g, d, c))
    }

    pub fn add_scaled(&mut self, other: &KdElement, c: &Coeff) {
        for (g, d, a) in other.terms() {
            self.add_term(g, d, a * c);
        }
    }

    /// `D^k` of the element.
    pub fn derive(&self, k: u32) -> KdElement {
        KdElement { terms: self.terms.iter().map(|(&(g, d), c)| ((g, d + k), c.clone())).collect() }
    }

    pub fn to_poly(&self) -> Polynomial {
        Polynomial::from_terms(self.terms().map(|(g, d, c)| (NormalWord::letter(g, d), c.clone())))
    }

    /// Accepts polynomials whose words all have length one.
    pub fn from_poly(p: &Polynomial) -> Result<Self> {
        let mut e = Self::zero();
        for (w, c) in p.terms() {
            if w.len() != 1 {
                return Err(Error::Precondition("a k[D]-element only contains single letters".into()));
            }
            e.add_term(w.tail(), w.dpow(), c.clone());
        }
        Ok(e)
    }
}

type Rule = dyn Fn(Generator, u32, Generator) -> Option<KdElement> + Send + Sync;

/// The products `x[n]y` for `n < N`. The table is a rule so that it can
/// describe infinite families; a rule answering `None` leaves the entry
/// unspecified, and [`LieTable::with_skew`] fills such entries from the
/// reversed ones.
#[derive(Clone)]
pub struct LieTable {
    locality: u32,
    rule: Arc<Rule>,
}

impl std::fmt::Debug for LieTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("LieTable").field("locality", &self.locality).finish_non_exhaustive()
    }
}

impl LieTable {
    pub fn new(locality: u32, rule: impl Fn(Generator, u32, Generator) -> Option<KdElement> + Send + Sync + 'static) -> Self {
        LieTable { locality, rule: Arc::new(rule) }
    }

    /// Finite table; missing entries are unspecified.
    pub fn from_entries(locality: u32, entries: BTreeMap<(Generator, u32, Generator), KdElement>) -> Self {
        Self::new(locality, move |x, n, y| entries.get(&(x, n, y)).cloned())
    }

    pub fn locality(&self) -> u32 {
        self.locality
    }

    /// Fill every unspecified entry through skew-symmetry
    /// `x[n]y = -Σ_k (-1)^{n+k} / k! D^k (y[n+k]x)`. Entries unspecified in
    /// both orientations are zero.
    pub fn with_skew(self) -> Self {
        let inner = self.rule.clone();
        let locality = self.locality;
        Self::new(locality, move |x, n, y| {
            if let Some(e) = inner(x, n, y) {
                return Some(e);
            }
            let mut out = KdElement::zero();
            let mut fact = Coeff::one();
            for k in 0..locality.saturating_sub(n) {
                if k > 0 {
                    fact *= Coeff::from_integer(k.into());
                }
                if let Some(e) = inner(y, n + k, x) {
                    let sign = if (n + k) % 2 == 0 { -Coeff::one() } else { Coeff::one() };
                    out.add_scaled(&e.derive(k), &(sign / &fact));
                }
            }
            Some(out)
        })
    }

    /// `x[n]y`; zero for `n >= N` and for unspecified entries.
    pub fn bracket(&self, x: Generator, n: u32, y: Generator) -> KdElement {
        if n >= self.locality {
            return KdElement::zero();
        }
        (self.rule)(x, n, y).unwrap_or_default()
    }

    /// Checks that every generator mentioned by the entries among `gens`
    /// belongs to `sig`.
    pub fn validate(&self, sig: &Signature, gens: &[Generator]) -> Result<()> {
        for &x in gens {
            for &y in gens {
                for n in 0..self.locality {
                    for (g, _, _) in self.bracket(x, n, y).terms() {
                        if !sig.owns(g) {
                            return Err(Error::SignatureMismatch);
                        }
                    }
                }
            }
        }
        Ok(())
    }
}
