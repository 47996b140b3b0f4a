//! Generators, their well-order, and the algebra signature `C(B, N)`.
//!
//! Generators are grouped into *families*. A plain generator such as `a` is a
//! family with a single member; an indexed family such as `L_i` has one member
//! per integer. Families are stored in ascending rank, so the family id is the
//! primary sort key of a generator and the index key is the secondary one.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Position of a family in ascending rank order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FamilyId(pub u16);

/// Total order used inside an indexed family.
#[derive(Clone)]
pub enum IndexOrder {
    /// `x_i > x_j` iff `|i| > |j|`, or `|i| = |j|` and `i > j`.
    AbsThenSigned,
    /// Plain integer order.
    Signed,
    /// Caller-supplied rank; must be injective on every index that is used.
    Custom(Arc<dyn Fn(i64) -> i64 + Send + Sync>),
}

impl IndexOrder {
    pub fn key(&self, index: i64) -> Result<i64> {
        match self {
            IndexOrder::AbsThenSigned => {
                let abs = index.checked_abs().ok_or(Error::IndexOverflow)?;
                abs.checked_mul(2)
                    .and_then(|k| k.checked_add(i64::from(index > 0)))
                    .ok_or(Error::IndexOverflow)
            }
            IndexOrder::Signed => Ok(index),
            IndexOrder::Custom(f) => Ok(f(index)),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            IndexOrder::AbsThenSigned => "abs-then-signed",
            IndexOrder::Signed => "signed",
            IndexOrder::Custom(_) => "custom",
        }
    }
}

impl fmt::Debug for IndexOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug)]
pub enum FamilyKind {
    Single,
    Indexed(IndexOrder),
}

#[derive(Clone, Debug)]
pub struct Family {
    pub name: String,
    pub kind: FamilyKind,
}

impl Family {
    pub fn single(name: impl Into<String>) -> Self {
        Family { name: name.into(), kind: FamilyKind::Single }
    }

    pub fn indexed(name: impl Into<String>, order: IndexOrder) -> Self {
        Family { name: name.into(), kind: FamilyKind::Indexed(order) }
    }

    pub fn is_indexed(&self) -> bool {
        matches!(self.kind, FamilyKind::Indexed(_))
    }
}

/// A member of `B`. Comparison uses the rank of the family first and then
/// the order key of the index, so generators sort by the signature's
/// well-order without needing the signature at hand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    family: FamilyId,
    key: i64,
    index: Option<i64>,
}

impl Generator {
    pub fn family(&self) -> FamilyId {
        self.family
    }

    pub fn index(&self) -> Option<i64> {
        self.index
    }
}

impl Ord for Generator {
    fn cmp(&self, other: &Self) -> Ordering {
        self.family
            .cmp(&other.family)
            .then(self.key.cmp(&other.key))
            .then(self.index.cmp(&other.index))
    }
}

impl PartialOrd for Generator {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `C(B, N)`: a generator specification plus the uniform locality bound.
#[derive(Clone, Debug)]
pub struct Signature {
    locality: u32,
    families: Vec<Family>,
}

impl Signature {
    /// `families` must be listed in ascending rank (first = smallest).
    pub fn new(locality: u32, families: Vec<Family>) -> Result<Self> {
        if locality == 0 {
            return Err(Error::InvalidLocality);
        }
        if families.len() > u16::MAX as usize {
            return Err(Error::Precondition("too many generator families".into()));
        }
        for (i, f) in families.iter().enumerate() {
            if f.name.is_empty() {
                return Err(Error::Precondition("empty generator name".into()));
            }
            if f.name == "D" {
                return Err(Error::Precondition("`D` is reserved for the derivation".into()));
            }
            if families[..i].iter().any(|g| g.name == f.name) {
                return Err(Error::Precondition(format!("duplicate generator `{}`", f.name)));
            }
        }
        Ok(Signature { locality, families })
    }

    /// Finite generator list in ascending order.
    pub fn finite(locality: u32, names: &[&str]) -> Result<Self> {
        Self::new(locality, names.iter().map(|n| Family::single(*n)).collect())
    }

    pub fn locality(&self) -> u32 {
        self.locality
    }

    pub fn families(&self) -> &[Family] {
        &self.families
    }

    pub fn family_id(&self, name: &str) -> Option<FamilyId> {
        self.families.iter().position(|f| f.name == name).map(|i| FamilyId(i as u16))
    }

    pub fn family(&self, id: FamilyId) -> Option<&Family> {
        self.families.get(id.0 as usize)
    }

    pub fn is_finite(&self) -> bool {
        self.families.iter().all(|f| !f.is_indexed())
    }

    pub fn generator(&self, name: &str, index: Option<i64>) -> Result<Generator> {
        let id = self.family_id(name).ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
        let family = &self.families[id.0 as usize];
        match (&family.kind, index) {
            (FamilyKind::Single, None) => Ok(Generator { family: id, key: 0, index: None }),
            (FamilyKind::Indexed(order), Some(i)) => {
                Ok(Generator { family: id, key: order.key(i)?, index: Some(i) })
            }
            (FamilyKind::Single, Some(_)) => Err(Error::BadIndex {
                name: name.to_string(),
                reason: "plain generator takes no index".into(),
            }),
            (FamilyKind::Indexed(_), None) => Err(Error::BadIndex {
                name: name.to_string(),
                reason: "indexed family needs an integer index".into(),
            }),
        }
    }

    /// Shorthand for a plain generator.
    pub fn gen(&self, name: &str) -> Result<Generator> {
        self.generator(name, None)
    }

    /// Shorthand for a member of an indexed family.
    pub fn indexed(&self, name: &str, index: i64) -> Result<Generator> {
        self.generator(name, Some(index))
    }

    /// Same family, index shifted by `delta`.
    pub fn shifted(&self, g: Generator, delta: i64) -> Result<Generator> {
        let idx = g.index.ok_or_else(|| Error::BadIndex {
            name: self.name(g).to_string(),
            reason: "cannot shift a plain generator".into(),
        })?;
        let i = idx.checked_add(delta).ok_or(Error::IndexOverflow)?;
        self.generator(self.name(g), Some(i))
    }

    /// Checks that `g` was produced by this signature.
    pub fn owns(&self, g: Generator) -> bool {
        let Some(family) = self.family(g.family) else { return false };
        match (&family.kind, g.index) {
            (FamilyKind::Single, None) => g.key == 0,
            (FamilyKind::Indexed(order), Some(i)) => order.key(i) == Ok(g.key),
            _ => false,
        }
    }

    pub fn name(&self, g: Generator) -> &str {
        self.family(g.family).map_or("?", |f| f.name.as_str())
    }

    /// Every generator of the signature; indexed families contribute the
    /// indices in `window` (inclusive). Ascending order.
    pub fn generators_in(&self, window: Option<(i64, i64)>) -> Vec<Generator> {
        let mut out = Vec::new();
        for (fi, family) in self.families.iter().enumerate() {
            match &family.kind {
                FamilyKind::Single => {
                    out.push(Generator { family: FamilyId(fi as u16), key: 0, index: None })
                }
                FamilyKind::Indexed(order) => {
                    if let Some((lo, hi)) = window {
                        for i in lo..=hi {
                            if let Ok(key) = order.key(i) {
                                out.push(Generator {
                                    family: FamilyId(fi as u16),
                                    key,
                                    index: Some(i),
                                });
                            }
                        }
                    }
                }
            }
        }
        out.sort();
        out
    }

    pub fn display_generator(&self, g: Generator) -> String {
        match g.index {
            None => self.name(g).to_string(),
            Some(i) => format!("{}_{}", self.name(g), i),
        }
    }
}
