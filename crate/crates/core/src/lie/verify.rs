//! Windowed verification of a built-in example: ideal equality of the two
//! presentations, the Gröbner–Shirshov check, the closed form of `Irr`, and
//! the embedding witness.

use std::collections::BTreeSet;

use crate::error::Result;
use crate::gsb::{
    self, check_gsb, complete, irr_enumerate, normal_words, CheckOptions, CompleteOptions, Completion, GsbReport,
    IrrBounds, Limits, RelationSet, Verdict, Window,
};
use crate::poly::Polynomial;
use crate::signature::Signature;
use crate::word::NormalWord;

use super::builtins::Example;
use super::schema::IndexWindow;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EmbeddingVerdict {
    Embedded,
    NotEmbedded,
    Inconclusive,
}

#[derive(Clone, Debug)]
pub struct EmbeddingReport {
    pub checked: usize,
    pub reducible: Vec<NormalWord>,
    pub verdict: EmbeddingVerdict,
}

/// Every `D^t b` with `b` in the window and `t <= max_dpow` must be
/// irreducible. Reducible words are definite failures; when the window is
/// wider than the trusted radius an all-clear is only inconclusive.
pub fn embedding_check(set: &RelationSet, sig: &Signature, window: &Window, max_dpow: u32) -> EmbeddingReport {
    let mut checked = 0;
    let mut reducible = Vec::new();
    for b in window.generators(sig) {
        for t in 0..=max_dpow {
            let w = NormalWord::letter(b, t);
            checked += 1;
            if set.is_reducible(&w) {
                reducible.push(w);
            }
        }
    }
    let verdict = if !reducible.is_empty() {
        EmbeddingVerdict::NotEmbedded
    } else if window.radius > window.trusted {
        EmbeddingVerdict::Inconclusive
    } else {
        EmbeddingVerdict::Embedded
    };
    EmbeddingReport { checked, reducible, verdict }
}

/// Membership of each polynomial in the ideal of `set`, by division.
#[derive(Clone, Debug, Default)]
pub struct MembershipReport {
    pub checked: usize,
    /// Nonzero remainders inside the trusted radius.
    pub failed: Vec<(Polynomial, Polynomial)>,
    /// Nonzero remainders reaching outside it.
    pub inconclusive: Vec<(Polynomial, Polynomial)>,
}

impl MembershipReport {
    pub fn holds(&self) -> bool {
        self.failed.is_empty() && self.inconclusive.is_empty()
    }
}

pub fn membership(polys: &[Polynomial], set: &RelationSet, window: &Window, parallel: bool) -> MembershipReport {
    let rems = gsb::par::map(polys, parallel, |p| gsb::remainder(p, set));
    let mut rep = MembershipReport { checked: polys.len(), ..Default::default() };
    for (p, r) in polys.iter().zip(rems) {
        match gsb::check::classify(r, Some(window)) {
            Verdict::Trivial => {}
            Verdict::Nontrivial(r) => rep.failed.push((p.clone(), r)),
            Verdict::Inconclusive(r) => rep.inconclusive.push((p.clone(), r)),
        }
    }
    rep
}

#[derive(Clone, Debug)]
pub struct IrrComparison {
    pub enumerated: usize,
    pub expected: usize,
    /// In the closed-form family but reducible.
    pub missing: Vec<NormalWord>,
    /// Irreducible but outside the closed-form family.
    pub unexpected: Vec<NormalWord>,
}

impl IrrComparison {
    pub fn matches(&self) -> bool {
        self.missing.is_empty() && self.unexpected.is_empty()
    }
}

pub fn compare_irr(example: &Example, set: &RelationSet, bounds: &IrrBounds) -> (Vec<NormalWord>, IrrComparison) {
    let got = irr_enumerate(set, bounds);
    let expected: BTreeSet<NormalWord> =
        normal_words(bounds, set.locality()).into_iter().filter(|w| example.in_irr_family(w)).collect();
    let got_set: BTreeSet<NormalWord> = got.iter().cloned().collect();
    let cmp = IrrComparison {
        enumerated: got.len(),
        expected: expected.len(),
        missing: expected.difference(&got_set).cloned().collect(),
        unexpected: got_set.difference(&expected).cloned().collect(),
    };
    (got, cmp)
}

#[derive(Clone, Debug)]
pub struct ExampleOptions {
    pub window: IndexWindow,
    pub max_length: usize,
    pub max_dpow: u32,
    pub parallel: bool,
    pub completion: Limits,
}

impl ExampleOptions {
    pub fn new(w: u64, m: u64) -> Self {
        ExampleOptions {
            window: IndexWindow { w, m },
            max_length: 3,
            max_dpow: 2,
            parallel: true,
            completion: Limits { max_basis: 20_000, max_length: 4, max_iters: 6 },
        }
    }
}

#[derive(Clone, Debug)]
pub struct ExampleReport {
    pub window: Window,
    pub s_minus: usize,
    pub s1: usize,
    /// `S^(-)` members with leading word in the window reduce to zero
    /// modulo the expected basis.
    pub forward: MembershipReport,
    /// Expected-basis members with leading word in the window reduce to
    /// zero modulo the windowed completion of `S^(-)`.
    pub backward: MembershipReport,
    pub backward_completion: Completion,
    pub gsb: GsbReport,
    pub irr: IrrComparison,
    pub embedding: EmbeddingReport,
}

fn in_window(set: &RelationSet, window: &Window) -> Vec<Polynomial> {
    set.iter().filter(|p| window.contains_word(p.leading_word().expect("nonzero"))).cloned().collect()
}

pub fn run_example(example: &Example, opts: &ExampleOptions) -> Result<ExampleReport> {
    let window = opts.window.check_window(example.max_params());
    let s1 = example.s1_set(opts.window)?;
    let sm = example.s_minus(opts.window);

    let forward = membership(&in_window(&sm, &window), &s1, &window, opts.parallel);
    let copts = CompleteOptions {
        limits: opts.completion,
        window: Some(window),
        mult: Default::default(),
        parallel: opts.parallel,
    };
    let backward_completion = complete(&sm, &example.sig, &copts);
    let backward = membership(&in_window(&s1, &window), &backward_completion.basis, &window, opts.parallel);

    let gsb = check_gsb(&s1, &example.sig, &CheckOptions { window: Some(window), parallel: opts.parallel, ..Default::default() });
    let bounds = IrrBounds {
        max_length: opts.max_length,
        max_dpow: opts.max_dpow,
        generators: window.generators(&example.sig),
    };
    let (_, irr) = compare_irr(example, &s1, &bounds);
    let embedding = embedding_check(&s1, &example.sig, &window, opts.max_dpow);
    Ok(ExampleReport {
        window,
        s_minus: sm.len(),
        s1: s1.len(),
        forward,
        backward,
        backward_completion,
        gsb,
        irr,
        embedding,
    })
}
