//! JSON rendering. Reports are `serde_json::Value` trees with sorted keys
//! and no wall-clock data unless timings are requested, so the same input
//! and flags give the same bytes.

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use conformal_gsb::gsb::{
    Ambiguity, CheckedComposition, Composition, GsbReport, KindCount, Pattern, PatternKind, ReductionTrace, RelationSet,
    Verdict,
};
use conformal_gsb::{NormalWord, Polynomial, Signature};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Fail,
    Inconclusive,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Fail => "fail",
            Status::Inconclusive => "inconclusive",
        }
    }

    pub fn exit_code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::Fail => 1,
            Status::Inconclusive => 2,
        }
    }

    /// The worse of two outcomes: a definite failure beats an undecided one.
    pub fn and(self, other: Status) -> Status {
        match (self, other) {
            (Status::Fail, _) | (_, Status::Fail) => Status::Fail,
            (Status::Inconclusive, _) | (_, Status::Inconclusive) => Status::Inconclusive,
            _ => Status::Ok,
        }
    }
}

pub fn digest(parts: &[&[u8]]) -> String {
    let mut h = Sha256::new();
    for p in parts {
        h.update((p.len() as u64).to_le_bytes());
        h.update(p);
    }
    format!("{:x}", h.finalize())
}

pub fn words(sig: &Signature, ws: &[NormalWord]) -> Value {
    ws.iter().map(|w| Value::String(sig.fmt_word(w))).collect()
}

pub fn polys<'a>(sig: &Signature, ps: impl IntoIterator<Item = &'a Polynomial>) -> Value {
    ps.into_iter().map(|p| Value::String(sig.fmt_poly(p))).collect()
}

pub fn pattern(sig: &Signature, set: &RelationSet, p: &Pattern) -> Value {
    let prefix = p.prefix.as_ref().map(|(a, n)| json!({ "word": sig.fmt_word(a), "index": n }));
    let kind = match &p.kind {
        PatternKind::Inner { m, c } => json!({ "type": "inner", "index": m, "right": sig.fmt_word(c) }),
        PatternKind::Suffix { i } => json!({ "type": "suffix", "dpow": i }),
    };
    json!({
        "relation": p.rel,
        "prefix": prefix,
        "kind": kind,
        "leading_word": sig.fmt_word(&p.leading_word(set)),
    })
}

pub fn trace(sig: &Signature, set: &RelationSet, t: &ReductionTrace) -> Value {
    let steps: Vec<Value> = t
        .steps
        .iter()
        .map(|s| json!({ "word": sig.fmt_word(&s.word), "coeff": s.coeff.to_string(), "pattern": pattern(sig, set, &s.pattern) }))
        .collect();
    json!({ "steps": steps, "remainder": sig.fmt_poly(&t.remainder) })
}

pub fn ambiguity(sig: &Signature, a: &Ambiguity) -> Value {
    match a {
        Ambiguity::Word(w) => json!({ "word": sig.fmt_word(w) }),
        Ambiguity::Multiplier { b, n } => json!({ "multiplier": sig.fmt_generator(*b), "index": n }),
    }
}

pub fn composition(sig: &Signature, c: &Composition) -> Value {
    json!({
        "kind": c.kind.name(),
        "f": c.f,
        "g": c.g,
        "ambiguity": ambiguity(sig, &c.ambiguity),
        "polynomial": sig.fmt_poly(&c.poly),
    })
}

pub fn verdict(sig: &Signature, v: &Verdict) -> Value {
    match v {
        Verdict::Trivial => json!({ "verdict": "trivial" }),
        Verdict::Nontrivial(r) | Verdict::Inconclusive(r) => json!({ "verdict": v.name(), "remainder": sig.fmt_poly(r) }),
    }
}

fn checked(sig: &Signature, set: &RelationSet, c: &CheckedComposition) -> Value {
    let mut v = composition(sig, &c.composition);
    let obj = v.as_object_mut().expect("object");
    if let Value::Object(extra) = verdict(sig, &c.verdict) {
        obj.extend(extra);
    }
    if let Some(t) = &c.trace {
        obj.insert("trace".into(), trace(sig, set, t));
    }
    v
}

fn count(k: &KindCount) -> Value {
    json!({ "total": k.total, "trivial": k.trivial, "nontrivial": k.nontrivial, "inconclusive": k.inconclusive })
}

/// Every composition is listed when `all` is set; otherwise only the ones
/// that are not trivial.
pub fn gsb(sig: &Signature, set: &RelationSet, rep: &GsbReport, all: bool) -> Value {
    let counts: serde_json::Map<String, Value> = rep.counts().iter().map(|(k, c)| (k.name().to_string(), count(c))).collect();
    let items: Vec<Value> = rep
        .items
        .iter()
        .filter(|c| all || !matches!(c.verdict, Verdict::Trivial))
        .map(|c| checked(sig, set, c))
        .collect();
    json!({
        "relations": rep.relations,
        "window_members": rep.members,
        "window": rep.window.map(|w| json!({ "radius": w.radius, "trusted": w.trusted })),
        "compositions": rep.items.len(),
        "counts": counts,
        "items": items,
    })
}
