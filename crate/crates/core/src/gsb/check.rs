//! Composition triviality and the Gröbner–Shirshov predicate.
//!
//! For infinite signatures the check runs on a finite window. Relations are
//! instantiated on a wide index range while compositions are only formed
//! between relations (and multiplier generators) whose indices lie in
//! `[-radius, radius]`. A zero remainder is a proof of triviality whatever
//! the window. A nonzero remainder is only reported as a failure when every
//! word in it lies inside the trusted radius, where the instantiated
//! relations are complete; otherwise the verdict is inconclusive.

use std::collections::BTreeMap;

use crate::poly::Polynomial;
use crate::signature::{Generator, Signature};
use crate::word::NormalWord;

use super::composition::{all_compositions, Composition, CompositionKind, MultBounds};
use super::par;
use super::reduce::{reduce_with, ReductionTrace, Strategy};
use super::relations::RelationSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Window {
    /// Compositions use indices in `[-radius, radius]`.
    pub radius: u64,
    /// Words with every index in `[-trusted, trusted]` are reliably
    /// classified as irreducible.
    pub trusted: u64,
}

impl Window {
    pub fn contains_word(&self, w: &NormalWord) -> bool {
        w.max_abs_index().is_none_or(|m| m <= self.radius)
    }

    pub fn trusts(&self, p: &Polynomial) -> bool {
        p.max_abs_index().is_none_or(|m| m <= self.trusted)
    }

    pub fn generators(&self, sig: &Signature) -> Vec<Generator> {
        let r = self.radius as i64;
        sig.generators_in(Some((-r, r)))
    }
}

/// Generators used as multipliers: all of them for a finite signature,
/// the window's members otherwise.
pub fn multiplier_generators(sig: &Signature, window: Option<&Window>) -> Vec<Generator> {
    match window {
        Some(w) => w.generators(sig),
        None => sig.generators_in(None),
    }
}

#[derive(Clone, Debug, Default)]
pub struct CheckOptions {
    pub window: Option<Window>,
    pub mult: MultBounds,
    pub parallel: bool,
    /// Keep full reduction traces in the report.
    pub traces: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Trivial,
    Nontrivial(Polynomial),
    Inconclusive(Polynomial),
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Trivial => "trivial",
            Verdict::Nontrivial(_) => "nontrivial",
            Verdict::Inconclusive(_) => "inconclusive",
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckedComposition {
    pub composition: Composition,
    pub verdict: Verdict,
    pub trace: Option<ReductionTrace>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct KindCount {
    pub total: usize,
    pub trivial: usize,
    pub nontrivial: usize,
    pub inconclusive: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Overall {
    Gsb,
    NotGsb,
    Inconclusive,
}

#[derive(Clone, Debug)]
pub struct GsbReport {
    pub items: Vec<CheckedComposition>,
    pub window: Option<Window>,
    pub relations: usize,
    /// Relations whose leading word lies in the window.
    pub members: usize,
}

impl GsbReport {
    pub fn overall(&self) -> Overall {
        if self.items.iter().any(|c| matches!(c.verdict, Verdict::Nontrivial(_))) {
            Overall::NotGsb
        } else if self.items.iter().any(|c| matches!(c.verdict, Verdict::Inconclusive(_))) {
            Overall::Inconclusive
        } else {
            Overall::Gsb
        }
    }

    pub fn is_gsb(&self) -> bool {
        self.overall() == Overall::Gsb
    }

    pub fn counts(&self) -> BTreeMap<CompositionKind, KindCount> {
        let mut out = BTreeMap::new();
        for c in &self.items {
            let e: &mut KindCount = out.entry(c.composition.kind).or_default();
            e.total += 1;
            match c.verdict {
                Verdict::Trivial => e.trivial += 1,
                Verdict::Nontrivial(_) => e.nontrivial += 1,
                Verdict::Inconclusive(_) => e.inconclusive += 1,
            }
        }
        out
    }

    pub fn inconclusive(&self) -> usize {
        self.items.iter().filter(|c| matches!(c.verdict, Verdict::Inconclusive(_))).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckedComposition> {
        self.items.iter().filter(|c| !matches!(c.verdict, Verdict::Trivial))
    }
}

pub(crate) fn classify(rem: Polynomial, window: Option<&Window>) -> Verdict {
    if rem.is_zero() {
        Verdict::Trivial
    } else if window.is_some_and(|w| !w.trusts(&rem)) {
        Verdict::Inconclusive(rem)
    } else {
        Verdict::Nontrivial(rem)
    }
}

/// Zero remainder under the division algorithm.
pub fn is_trivial(c: &Composition, set: &RelationSet) -> bool {
    reduce_with(&c.poly, set, Strategy::Leftmost, false).remainder.is_zero()
}

/// Relations that take part in compositions under `window`.
pub fn window_members(set: &RelationSet, window: Option<&Window>) -> Vec<usize> {
    (0..set.len()).filter(|&i| window.is_none_or(|w| w.contains_word(set.leading_word(i)))).collect()
}

pub fn check_gsb(set: &RelationSet, sig: &Signature, opts: &CheckOptions) -> GsbReport {
    let window = opts.window.as_ref();
    let members = window_members(set, window);
    let gens = multiplier_generators(sig, window);
    let per_f: Vec<Vec<Composition>> = par::map(&members, opts.parallel, |&f| {
        let mut v = Vec::new();
        for &g in &members {
            v.extend(super::composition::pair_compositions(set, f, g));
        }
        v.extend(super::composition::mult_compositions(set, f, &gens, opts.mult));
        v
    });
    let mut comps: Vec<Composition> = per_f.into_iter().flatten().collect();
    comps.sort_by(Composition::cmp_key);
    let items = par::map(&comps, opts.parallel, |c| {
        let trace = reduce_with(&c.poly, set, Strategy::Leftmost, opts.traces);
        let verdict = classify(trace.remainder.clone(), window);
        CheckedComposition { composition: c.clone(), verdict, trace: opts.traces.then_some(trace) }
    });
    GsbReport { items, window: opts.window, relations: set.len(), members: members.len() }
}

/// Compositions in queue order without reducing them.
pub fn compositions(set: &RelationSet, sig: &Signature, opts: &CheckOptions) -> Vec<Composition> {
    let window = opts.window.as_ref();
    all_compositions(set, &window_members(set, window), &multiplier_generators(sig, window), opts.mult)
}
