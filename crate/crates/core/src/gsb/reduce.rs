//! The division algorithm.

use crate::poly::{Coeff, Polynomial};
use crate::word::NormalWord;

use super::relations::{Pattern, RelationSet};

/// Which normal S-word to use when several share the current leading word.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    /// Smallest prefix first, then kind 1 before kind 2, then the earliest
    /// relation.
    #[default]
    Leftmost,
    /// Mirror image of [`Strategy::Leftmost`]: longest prefix, kind 2 first,
    /// latest relation. Used to test confluence.
    Rightmost,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub word: NormalWord,
    pub pattern: Pattern,
    pub coeff: Coeff,
}

/// `input = Σ coeff · eval(pattern) + remainder`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReductionTrace {
    pub steps: Vec<Step>,
    pub remainder: Polynomial,
}

impl ReductionTrace {
    /// Re-sums the trace. Used by tests to check soundness.
    pub fn reconstruct(&self, set: &RelationSet) -> Polynomial {
        let mut out = self.remainder.clone();
        for s in &self.steps {
            out.add_scaled(&s.pattern.eval(set).expect("trace patterns are valid"), &s.coeff);
        }
        out
    }
}

pub(crate) fn choose(set: &RelationSet, u: &NormalWord, strategy: Strategy, skip: Option<usize>) -> Option<Pattern> {
    match strategy {
        Strategy::Leftmost => {
            let mut hit = None;
            for start in 0..u.len() {
                set.matches_at(u, start, &mut |p| {
                    if Some(p.rel) == skip {
                        return false;
                    }
                    hit = Some(p);
                    true
                });
                if hit.is_some() {
                    break;
                }
            }
            hit
        }
        Strategy::Rightmost => {
            for start in (0..u.len()).rev() {
                let mut last = None;
                set.matches_at(u, start, &mut |p| {
                    if Some(p.rel) != skip {
                        last = Some(p);
                    }
                    false
                });
                if last.is_some() {
                    return last;
                }
            }
            None
        }
    }
}

/// Reduce `p` modulo `set`, optionally recording every step.
pub fn reduce_with(p: &Polynomial, set: &RelationSet, strategy: Strategy, record: bool) -> ReductionTrace {
    reduce_skipping(p, set, strategy, record, None)
}

/// Like [`reduce_with`] but never uses relation `skip`.
pub(crate) fn reduce_skipping(
    p: &Polynomial,
    set: &RelationSet,
    strategy: Strategy,
    record: bool,
    skip: Option<usize>,
) -> ReductionTrace {
    let mut cur = p.clone();
    let mut trace = ReductionTrace::default();
    while let Some((w, c)) = cur.leading() {
        match choose(set, w, strategy, skip) {
            Some(pat) => {
                let c = c.clone();
                let e = pat.eval_unchecked(set.get(pat.rel), set.locality());
                debug_assert_eq!(e.leading_word(), Some(w));
                cur.add_scaled(&e, &-c.clone());
                if record {
                    trace.steps.push(Step { word: e.leading_word().cloned().expect("nonzero"), pattern: pat, coeff: c });
                }
            }
            None => {
                let (w, c) = cur.pop_leading().expect("nonzero");
                trace.remainder.add_term(w, c);
            }
        }
    }
    trace
}

/// Full trace with the default strategy.
pub fn reduce(p: &Polynomial, set: &RelationSet) -> ReductionTrace {
    reduce_with(p, set, Strategy::Leftmost, true)
}

/// Only the remainder; skips building the trace.
pub fn remainder(p: &Polynomial, set: &RelationSet) -> Polynomial {
    reduce_with(p, set, Strategy::Leftmost, false).remainder
}
