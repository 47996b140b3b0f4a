//! Shirshov completion.
//!
//! Each round forms the compositions that have not been examined yet,
//! reduces them against the current basis (in parallel when asked), then
//! adds the nonzero remainders one at a time and interreduces. Pairs are
//! remembered by element id, and an element that changes during
//! interreduction gets a fresh id, so its compositions are formed again.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use crate::poly::Polynomial;
use crate::signature::Signature;
use crate::word::NormalWord;

use super::basis::interreduce;
use super::check::{multiplier_generators, Window};
use super::composition::{mult_compositions, pair_compositions, MultBounds};
use super::par;
use super::reduce::remainder;
use super::relations::RelationSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_basis: usize,
    /// Longest allowed leading word of a new element.
    pub max_length: usize,
    pub max_iters: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_basis: 2000, max_length: 8, max_iters: 50 }
    }
}

#[derive(Clone, Debug, Default)]
pub struct CompleteOptions {
    pub limits: Limits,
    pub window: Option<Window>,
    pub mult: MultBounds,
    pub parallel: bool,
}

#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LimitHit {
    BasisSize(usize),
    Length(NormalWord),
    Iterations(usize),
}

#[derive(Clone, Debug)]
pub struct Completion {
    pub basis: RelationSet,
    /// `None` when every composition reduced to zero.
    pub limit: Option<LimitHit>,
    pub rounds: usize,
    pub compositions: usize,
    /// Nonzero remainders still waiting when a limit stopped the run.
    pub pending: Vec<Polynomial>,
}

impl Completion {
    pub fn is_complete(&self) -> bool {
        self.limit.is_none()
    }
}

struct State {
    locality: u32,
    next_id: u64,
    elems: Vec<(u64, Arc<Polynomial>)>,
}

impl State {
    fn set(&self) -> RelationSet {
        RelationSet::from_monic(self.locality, self.elems.iter().map(|(_, p)| p.clone()).collect())
    }

    /// Replace the basis by `new`, keeping ids of unchanged members.
    fn adopt(&mut self, new: RelationSet) {
        let old: HashMap<Polynomial, u64> = self.elems.iter().map(|(id, p)| ((**p).clone(), *id)).collect();
        self.elems = new
            .shared()
            .iter()
            .map(|p| {
                let id = old.get(p).copied().unwrap_or_else(|| {
                    self.next_id += 1;
                    self.next_id
                });
                (id, p.clone())
            })
            .collect();
    }
}

pub fn complete(input: &RelationSet, sig: &Signature, opts: &CompleteOptions) -> Completion {
    let window = opts.window.as_ref();
    let gens = multiplier_generators(sig, window);
    let mut st = State { locality: input.locality(), next_id: 0, elems: Vec::new() };
    st.adopt(interreduce(input));
    let mut seen_pairs: HashSet<(u64, u64)> = HashSet::new();
    let mut seen_mult: HashSet<u64> = HashSet::new();
    let mut rounds = 0;
    let mut total = 0;

    loop {
        if rounds >= opts.limits.max_iters {
            return Completion { basis: st.set(), limit: Some(LimitHit::Iterations(rounds)), rounds, compositions: total, pending: vec![] };
        }
        rounds += 1;
        let set = st.set();
        let members: Vec<usize> =
            (0..set.len()).filter(|&i| window.is_none_or(|w| w.contains_word(set.leading_word(i)))).collect();
        let mut tasks: Vec<(usize, Option<usize>)> = Vec::new();
        for &f in &members {
            let idf = st.elems[f].0;
            for &g in &members {
                if seen_pairs.insert((idf, st.elems[g].0)) {
                    tasks.push((f, Some(g)));
                }
            }
            if seen_mult.insert(idf) {
                tasks.push((f, None));
            }
        }
        let mut comps = par::flat_map(&tasks, opts.parallel, |&(f, g)| match g {
            Some(g) => pair_compositions(&set, f, g),
            None => mult_compositions(&set, f, &gens, opts.mult),
        });
        comps.sort_by(|a, b| a.cmp_key(b));
        total += comps.len();
        let mut rems: Vec<Polynomial> = par::map(&comps, opts.parallel, |c| remainder(&c.poly, &set))
            .into_iter()
            .filter_map(|r| r.make_monic().ok())
            .collect();
        rems.sort_by(|a, b| a.leading_word().cmp(&b.leading_word()).then_with(|| a.cmp(b)));
        rems.dedup();
        if rems.is_empty() {
            return Completion { basis: st.set(), limit: None, rounds, compositions: total, pending: vec![] };
        }

        let mut cur: Vec<Polynomial> = set.to_vec();
        let mut cur_set = set;
        for (k, r) in rems.iter().enumerate() {
            let r = remainder(r, &cur_set);
            let Ok(r) = r.make_monic() else { continue };
            let lw = r.leading_word().expect("nonzero").clone();
            if lw.len() > opts.limits.max_length {
                st.adopt(interreduce(&RelationSet::monic(st.locality, cur)));
                return Completion {
                    basis: st.set(),
                    limit: Some(LimitHit::Length(lw)),
                    rounds,
                    compositions: total,
                    pending: rems[k..].to_vec(),
                };
            }
            cur.push(r);
            if cur.len() > opts.limits.max_basis {
                st.adopt(interreduce(&RelationSet::monic(st.locality, cur)));
                return Completion {
                    basis: st.set(),
                    limit: Some(LimitHit::BasisSize(st.elems.len())),
                    rounds,
                    compositions: total,
                    pending: rems[k + 1..].to_vec(),
                };
            }
            cur_set = RelationSet::monic(st.locality, cur.iter().cloned());
        }
        st.adopt(interreduce(&cur_set));
    }
}
