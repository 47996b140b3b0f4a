//! Enumeration of `Irr(S)` inside finite bounds.

use crate::error::{Error, Result};
use crate::signature::Generator;
use crate::word::NormalWord;

use super::relations::RelationSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrrBounds {
    pub max_length: usize,
    pub max_dpow: u32,
    pub generators: Vec<Generator>,
}

/// Every normal word within `bounds`, ascending.
pub fn normal_words(bounds: &IrrBounds, locality: u32) -> Vec<NormalWord> {
    words_where(bounds, locality, |_| true)
}

/// D-free words are grown letter by letter, and a word that is already
/// reducible is not extended: an occurrence inside a D-free word is still
/// an occurrence after more letters are appended.
fn words_where(bounds: &IrrBounds, locality: u32, keep: impl Fn(&NormalWord) -> bool) -> Vec<NormalWord> {
    let mut out = Vec::new();
    let mut layer: Vec<NormalWord> = bounds.generators.iter().map(|&g| NormalWord::letter(g, 0)).filter(|w| keep(w)).collect();
    for len in 1..=bounds.max_length {
        for w in &layer {
            out.push(w.clone());
            for t in 1..=bounds.max_dpow {
                let d = w.append_d(t);
                if keep(&d) {
                    out.push(d);
                }
            }
        }
        if len == bounds.max_length {
            break;
        }
        let mut next = Vec::new();
        for w in &layer {
            for n in 0..locality {
                for &g in &bounds.generators {
                    let x = w.join(n, &NormalWord::letter(g, 0));
                    if keep(&x) {
                        next.push(x);
                    }
                }
            }
        }
        layer = next;
    }
    out.sort();
    out
}

pub fn irr_enumerate(set: &RelationSet, bounds: &IrrBounds) -> Vec<NormalWord> {
    words_where(bounds, set.locality(), |w| !set.is_reducible(w))
}

/// The D-free part of `Irr(S)`, a `k[D]`-basis of the quotient when every
/// leading word of `S` is D-free.
pub fn kd_basis(set: &RelationSet, bounds: &IrrBounds) -> Result<Vec<NormalWord>> {
    if let Some(i) = (0..set.len()).find(|&i| !set.leading_word(i).is_d_free()) {
        return Err(Error::Precondition(format!("relation #{i} has a leading word that is not D-free")));
    }
    let flat = IrrBounds { max_dpow: 0, ..bounds.clone() };
    Ok(irr_enumerate(set, &flat))
}
