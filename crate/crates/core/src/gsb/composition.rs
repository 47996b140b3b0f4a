//! The six kinds of composition between monic relations.

use std::cmp::Ordering;
use std::fmt;

use crate::normal::{apply_d, locality_bound, mult_poly_word, mult_word_poly};
use crate::poly::Polynomial;
use crate::signature::Generator;
use crate::word::NormalWord;

use super::relations::{PatternKind, RelationSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CompositionKind {
    Inclusion,
    RightInclusion,
    Intersection,
    RightIntersection,
    LeftMult,
    RightMult,
}

impl CompositionKind {
    pub const ALL: [CompositionKind; 6] = [
        CompositionKind::Inclusion,
        CompositionKind::RightInclusion,
        CompositionKind::Intersection,
        CompositionKind::RightIntersection,
        CompositionKind::LeftMult,
        CompositionKind::RightMult,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CompositionKind::Inclusion => "inclusion",
            CompositionKind::RightInclusion => "right-inclusion",
            CompositionKind::Intersection => "intersection",
            CompositionKind::RightIntersection => "right-intersection",
            CompositionKind::LeftMult => "left-mult",
            CompositionKind::RightMult => "right-mult",
        }
    }
}

impl fmt::Display for CompositionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Where the composition comes from: an ambiguity word, or a generator
/// multiplied on one side with a given index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Ambiguity {
    Word(NormalWord),
    Multiplier { b: Generator, n: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Composition {
    pub kind: CompositionKind,
    pub f: usize,
    /// Equal to `f` for the multiplication kinds.
    pub g: usize,
    pub ambiguity: Ambiguity,
    pub poly: Polynomial,
}

impl Composition {
    /// Queue key `(|w|, w)`; multiplication compositions use the leading
    /// word of their polynomial.
    pub fn key(&self) -> Option<&NormalWord> {
        match &self.ambiguity {
            Ambiguity::Word(w) => Some(w),
            Ambiguity::Multiplier { .. } => self.poly.leading_word(),
        }
    }

    pub fn cmp_key(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

/// Caller overrides for the multiplication ranges. The derived bounds come
/// from [`locality_bound`]; an override can only widen them.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MultBounds {
    pub left: Option<u32>,
    pub right: Option<u32>,
}

fn with_prefix(p: &Polynomial, prefix: &Option<(NormalWord, u32)>) -> Polynomial {
    match prefix {
        Some((a, n)) => p.map_words(|w| a.join(*n, w)),
        None => p.clone(),
    }
}

/// Inclusion, right inclusion, intersection and right intersection of the
/// ordered pair `(f, g)`.
pub fn pair_compositions(set: &RelationSet, f: usize, g: usize) -> Vec<Composition> {
    let mut out = Vec::new();
    let loc = set.locality();
    let (fp, gp) = (set.get(f), set.get(g));
    let (fw, gw) = (set.leading_word(f), set.leading_word(g));

    // g occurring inside f̄
    if gw.len() <= fw.len() {
        for start in 0..=(fw.len() - gw.len()) {
            set.matches_at(fw, start, &mut |pat| {
                if pat.rel != g {
                    return false;
                }
                let kind = match pat.kind {
                    PatternKind::Inner { .. } => CompositionKind::Inclusion,
                    PatternKind::Suffix { i } => {
                        if f == g && i == 0 && pat.prefix.is_none() {
                            return false;
                        }
                        CompositionKind::RightInclusion
                    }
                };
                let poly = fp.sub(&pat.eval_unchecked(gp, loc));
                out.push(Composition { kind, f, g, ambiguity: Ambiguity::Word(fw.clone()), poly });
                false
            });
        }
    }

    let last_f = fw.len() - 1;
    for p in 1..fw.len() {
        let prefix = Some((fw.slice(0, p - 1), fw.body()[p - 1].index));
        let overlap = fw.len() - p;
        // f̄ = a(n)x, ḡ = x(m)c
        if fw.is_d_free() && gw.len() > overlap && fw.slice(p, last_f) == gw.slice(0, overlap - 1) {
            let m = gw.body()[overlap - 1].index;
            let c = gw.slice(overlap, gw.len() - 1);
            let (a, n) = prefix.clone().expect("p > 0");
            let w = a.join(n, gw);
            let poly = mult_poly_word(fp, m, &c, loc).sub(&with_prefix(gp, &prefix));
            out.push(Composition { kind: CompositionKind::Intersection, f, g, ambiguity: Ambiguity::Word(w), poly });
        }
        // f̄ D^i = a(n) ḡ with i > 0
        if gw.len() == overlap && gw.dpow() > fw.dpow() && fw.slice(p, last_f).strip_tail_d() == gw.strip_tail_d() {
            let i = gw.dpow() - fw.dpow();
            let poly = apply_d(fp, i).sub(&with_prefix(gp, &prefix));
            out.push(Composition {
                kind: CompositionKind::RightIntersection,
                f,
                g,
                ambiguity: Ambiguity::Word(fw.append_d(i)),
                poly,
            });
        }
    }
    out
}

/// Largest exclusive `n` for which `b(n) f` can be nonzero.
pub fn left_mult_limit(b: Generator, f: &Polynomial, locality: u32) -> u32 {
    let bw = NormalWord::letter(b, 0);
    f.words().map(|v| locality_bound(&bw, v, locality)).max().unwrap_or(0) as u32
}

/// `b(n) f` for `N <= n` below the vanishing bound, and `f(n) b` for the
/// ranges where it counts as a composition.
pub fn mult_compositions(set: &RelationSet, f: usize, gens: &[Generator], bounds: MultBounds) -> Vec<Composition> {
    let loc = set.locality();
    let fp = set.get(f);
    let fw = set.leading_word(f);
    let mut out = Vec::new();

    for &b in gens {
        let bw = NormalWord::letter(b, 0);
        let left_hi = left_mult_limit(b, fp, loc).max(bounds.left.unwrap_or(0));
        for n in loc..left_hi {
            let poly = mult_word_poly(&bw, n, fp, loc);
            out.push(Composition { kind: CompositionKind::LeftMult, f, g: f, ambiguity: Ambiguity::Multiplier { b, n }, poly });
        }
    }

    let low = if fw.is_d_free() { loc } else { 0 };
    let right_hi = if fp.is_d_free() { loc } else { (loc + fp.max_dpow()).max(bounds.right.unwrap_or(0)) };
    for &b in gens {
        let bw = NormalWord::letter(b, 0);
        for n in low..right_hi {
            let poly = mult_poly_word(fp, n, &bw, loc);
            out.push(Composition { kind: CompositionKind::RightMult, f, g: f, ambiguity: Ambiguity::Multiplier { b, n }, poly });
        }
    }
    out
}

/// Every composition among the relations whose indices are listed in
/// `members`, in queue order.
pub fn all_compositions(set: &RelationSet, members: &[usize], gens: &[Generator], bounds: MultBounds) -> Vec<Composition> {
    let mut out = Vec::new();
    for &f in members {
        for &g in members {
            out.extend(pair_compositions(set, f, g));
        }
        out.extend(mult_compositions(set, f, gens, bounds));
    }
    out.sort_by(Composition::cmp_key);
    out
}
