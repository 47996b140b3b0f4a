//! Minimal and reduced bases.

use std::sync::Arc;

use crate::poly::Polynomial;

use super::reduce::{reduce_skipping, remainder, Strategy};
use super::relations::RelationSet;

fn sorted_monic(set: &RelationSet) -> Vec<Polynomial> {
    let mut v: Vec<Polynomial> = set.iter().filter_map(|p| p.make_monic().ok()).collect();
    v.sort_by(|a, b| a.leading_word().cmp(&b.leading_word()).then_with(|| a.cmp(b)));
    v.dedup();
    v
}

/// Drops every relation whose leading word is the leading word of a normal
/// S-word over another kept relation. Works in ascending order of leading
/// words, so among relations with the same leading word the smallest
/// polynomial survives.
pub fn minimalize(set: &RelationSet) -> RelationSet {
    let mut kept = RelationSet::from_monic(set.locality(), Vec::new());
    let mut out: Vec<Arc<Polynomial>> = Vec::new();
    for p in sorted_monic(set) {
        if !kept.is_reducible(p.leading_word().expect("nonzero")) {
            out.push(Arc::new(p));
            kept = RelationSet::from_monic(set.locality(), out.clone());
        }
    }
    kept
}

/// Minimalize, then replace every `s` by `s̄ + r` where `r` is the remainder
/// of `s - s̄`. For a Gröbner–Shirshov basis this is the unique reduced
/// basis of the ideal; the output is sorted by leading word.
pub fn reduce_basis(set: &RelationSet) -> RelationSet {
    let min = minimalize(set);
    let rels = min
        .iter()
        .map(|s| {
            let (w, c) = s.leading().expect("nonzero");
            let mut out = remainder(&s.tail_part(), &min);
            out.add_term(w.clone(), c.clone());
            out
        })
        .collect::<Vec<_>>();
    RelationSet::from_monic(set.locality(), rels.into_iter().map(Arc::new).collect())
}

/// Reduce every member fully against the others until nothing changes.
/// Unlike [`reduce_basis`] this keeps the ideal for any input, not only
/// for Gröbner–Shirshov bases, because a member whose leading word becomes
/// reducible is replaced by its remainder rather than dropped.
pub fn interreduce(set: &RelationSet) -> RelationSet {
    let loc = set.locality();
    let mut cur: Vec<Arc<Polynomial>> = sorted_monic(set).into_iter().map(Arc::new).collect();
    let mut rs = RelationSet::from_monic(loc, cur.clone());
    let mut i = 0;
    while i < cur.len() {
        let r = reduce_skipping(&cur[i], &rs, Strategy::Leftmost, false, Some(i)).remainder;
        if r == *cur[i] {
            i += 1;
            continue;
        }
        cur.remove(i);
        if let Ok(m) = r.make_monic() {
            if !cur.iter().any(|p| **p == m) {
                cur.push(Arc::new(m));
            }
        }
        cur.sort_by(|a, b| a.leading_word().cmp(&b.leading_word()).then_with(|| a.cmp(b)));
        rs = RelationSet::from_monic(loc, cur.clone());
        i = 0;
    }
    RelationSet::from_monic(loc, cur)
}
