//! Monic relation sets and normal S-word patterns.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::normal::{apply_d, mult_poly_word};
use crate::poly::Polynomial;
use crate::word::NormalWord;

/// An ordered list of monic, nonzero relations with an index on their
/// leading words.
#[derive(Clone, Debug)]
pub struct RelationSet {
    locality: u32,
    rels: Vec<Arc<Polynomial>>,
    /// D-stripped leading word -> (relation, dpow of its leading word)
    index: HashMap<NormalWord, Vec<(usize, u32)>>,
}

/// Same locality and the same relations in the same order.
impl PartialEq for RelationSet {
    fn eq(&self, other: &Self) -> bool {
        self.locality == other.locality && self.rels == other.rels
    }
}

impl Eq for RelationSet {}

impl RelationSet {
    /// Every relation must already be monic.
    pub fn new(locality: u32, rels: impl IntoIterator<Item = Polynomial>) -> Result<Self> {
        let rels: Vec<_> = rels.into_iter().collect();
        for (i, r) in rels.iter().enumerate() {
            if !r.is_monic() {
                return Err(Error::NonMonic(i));
            }
        }
        Ok(Self::from_monic(locality, rels.into_iter().map(Arc::new).collect()))
    }

    /// Scales each relation to be monic, drops zeros and duplicates, keeps
    /// first occurrences in order.
    pub fn monic(locality: u32, rels: impl IntoIterator<Item = Polynomial>) -> Self {
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::new();
        for r in rels {
            if let Ok(m) = r.make_monic() {
                if seen.insert(m.clone()) {
                    out.push(Arc::new(m));
                }
            }
        }
        Self::from_monic(locality, out)
    }

    pub(crate) fn from_monic(locality: u32, rels: Vec<Arc<Polynomial>>) -> Self {
        let mut index: HashMap<NormalWord, Vec<(usize, u32)>> = HashMap::new();
        for (i, r) in rels.iter().enumerate() {
            let lw = r.leading_word().expect("monic relations are nonzero");
            index.entry(lw.strip_tail_d()).or_default().push((i, lw.dpow()));
        }
        RelationSet { locality, rels, index }
    }

    pub fn locality(&self) -> u32 {
        self.locality
    }

    pub fn len(&self) -> usize {
        self.rels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rels.is_empty()
    }

    pub fn get(&self, i: usize) -> &Polynomial {
        &self.rels[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Polynomial> {
        self.rels.iter().map(|r| r.as_ref())
    }

    pub fn to_vec(&self) -> Vec<Polynomial> {
        self.iter().cloned().collect()
    }

    pub(crate) fn shared(&self) -> &[Arc<Polynomial>] {
        &self.rels
    }

    pub fn leading_word(&self, i: usize) -> &NormalWord {
        self.rels[i].leading_word().expect("nonzero")
    }

    /// Relations whose leading word strips to `stem`, with their D-power.
    pub(crate) fn by_stem(&self, stem: &NormalWord) -> &[(usize, u32)] {
        self.index.get(stem).map_or(&[], Vec::as_slice)
    }

    /// Every normal S-word whose leading word is `u`. Occurrences are listed
    /// left to right; at each start position the kind-1 matches come first,
    /// then the kind-2 one, each in relation order.
    pub fn find_reductions(&self, u: &NormalWord) -> Vec<Pattern> {
        let mut out = Vec::new();
        for start in 0..u.len() {
            self.matches_at(u, start, &mut |p| {
                out.push(p);
                false
            });
        }
        out
    }

    pub fn is_reducible(&self, u: &NormalWord) -> bool {
        (0..u.len()).any(|start| {
            let mut found = false;
            self.matches_at(u, start, &mut |_| {
                found = true;
                true
            });
            found
        })
    }

    /// Calls `sink` for each pattern whose occurrence begins at letter
    /// `start`; stops early once `sink` returns true.
    pub(crate) fn matches_at(&self, u: &NormalWord, start: usize, sink: &mut dyn FnMut(Pattern) -> bool) {
        let last = u.len() - 1;
        let prefix = (start > 0).then(|| (u.slice(0, start - 1), u.body()[start - 1].index));
        // kind 1: D-free factor [start, end] followed by a nonempty c
        for end in start..last {
            let factor = u.slice(start, end);
            for &(rel, dpow) in self.by_stem(&factor) {
                if dpow != 0 {
                    continue;
                }
                let pat = Pattern {
                    prefix: prefix.clone(),
                    rel,
                    kind: PatternKind::Inner { m: u.body()[end].index, c: u.slice(end + 1, last) },
                };
                if sink(pat) {
                    return;
                }
            }
        }
        // kind 2: suffix with a D-power at least that of the leading word
        let suffix = u.slice(start, last);
        for &(rel, dpow) in self.by_stem(&suffix.strip_tail_d()) {
            if dpow <= u.dpow() {
                let pat = Pattern { prefix: prefix.clone(), rel, kind: PatternKind::Suffix { i: u.dpow() - dpow } };
                if sink(pat) {
                    return;
                }
            }
        }
    }
}

#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PatternKind {
    /// `a(n) s (m) c` with `s̄` D-free and `c` nonempty.
    Inner { m: u32, c: NormalWord },
    /// `a(n) D^i s`.
    Suffix { i: u32 },
}

/// A normal S-word `[a(n) s (m) c]` or `[a(n) D^i s]`; `prefix` holds the
/// D-free word `a` with its joining index `n`, absent when `a` is empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Pattern {
    pub prefix: Option<(NormalWord, u32)>,
    pub rel: usize,
    pub kind: PatternKind,
}

impl Pattern {
    fn check(&self, s: &Polynomial, locality: u32) -> Result<()> {
        if let Some((a, n)) = &self.prefix {
            if !a.is_d_free() {
                return Err(Error::MalformedPattern("prefix is not D-free".into()));
            }
            if *n >= locality {
                return Err(Error::MalformedPattern(format!("prefix index {n} is not below {locality}")));
            }
        }
        if let PatternKind::Inner { m, .. } = &self.kind {
            if !s.leading_word().is_some_and(NormalWord::is_d_free) {
                return Err(Error::MalformedPattern("kind-1 pattern needs a D-free leading word".into()));
            }
            if *m >= locality {
                return Err(Error::MalformedPattern(format!("index {m} is not below {locality}")));
            }
        }
        Ok(())
    }

    /// The declared leading word `a(n) s̄ (m) c` or `a(n) s̄ D^i`.
    pub fn leading_word(&self, set: &RelationSet) -> NormalWord {
        let s = set.leading_word(self.rel);
        let core = match &self.kind {
            PatternKind::Inner { m, c } => s.join(*m, c),
            PatternKind::Suffix { i } => s.append_d(*i),
        };
        match &self.prefix {
            Some((a, n)) => a.join(*n, &core),
            None => core,
        }
    }

    /// Normalized value of the pattern.
    pub fn eval(&self, set: &RelationSet) -> Result<Polynomial> {
        let s = set.get(self.rel);
        self.check(s, set.locality())?;
        Ok(self.eval_unchecked(s, set.locality()))
    }

    pub(crate) fn eval_unchecked(&self, s: &Polynomial, locality: u32) -> Polynomial {
        let core = match &self.kind {
            PatternKind::Inner { m, c } => mult_poly_word(s, *m, c, locality),
            PatternKind::Suffix { i } => apply_d(s, *i),
        };
        // Every prefix junction is below N, so prepending is exact.
        match &self.prefix {
            Some((a, n)) => core.map_words(|w| a.join(*n, w)),
            None => core,
        }
    }
}
