//! Presentation files.
//!
//! ```text
//! # comment
//! [algebra]
//! N = 2
//! generators = H_*, L_*      # `_*` marks an indexed family
//! rank = L > H               # optional, default is listing order ascending
//! order = abs-then-signed    # index order inside families
//!
//! [relations]
//! a (1) a - a (0) D a                            # unnamed relation
//! s0(i,j) = L_i (0) L_j - L_0 (0) L_{i+j} where i != 0
//!
//! [options]
//! window = 2
//! ```
//!
//! A line that starts with whitespace continues the previous one.

use std::fmt::Write as _;

use conformal_gsb::lie::RelationSchema;
use conformal_gsb::{Family, IndexOrder, Polynomial, Signature};

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("line {line}: {msg}")]
    At { line: usize, msg: String },
    #[error("{0}")]
    Msg(String),
    #[error(transparent)]
    Core(#[from] conformal_gsb::Error),
}

fn at(line: usize, msg: impl ToString) -> InputError {
    InputError::At { line, msg: msg.to_string() }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenSpec {
    pub name: String,
    pub indexed: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderRule {
    AbsThenSigned,
    Signed,
}

impl OrderRule {
    fn parse(s: &str) -> Option<Self> {
        match s {
            "abs-then-signed" => Some(OrderRule::AbsThenSigned),
            "signed" => Some(OrderRule::Signed),
            _ => None,
        }
    }

    fn name(self) -> &'static str {
        match self {
            OrderRule::AbsThenSigned => "abs-then-signed",
            OrderRule::Signed => "signed",
        }
    }

    fn index_order(self) -> IndexOrder {
        match self {
            OrderRule::AbsThenSigned => IndexOrder::AbsThenSigned,
            OrderRule::Signed => IndexOrder::Signed,
        }
    }
}

/// A relation line: either a plain polynomial, already normalized, or a
/// schema kept as written (whitespace collapsed).
#[derive(Clone, Debug)]
pub enum Relation {
    Plain { name: String, poly: Polynomial },
    Schema { text: String, schema: RelationSchema },
}

impl Relation {
    pub fn arity(&self) -> usize {
        match self {
            Relation::Plain { .. } => 0,
            Relation::Schema { schema, .. } => schema.arity(),
        }
    }

    /// The relation as a schema, so that plain and parameterized relations
    /// instantiate the same way.
    pub fn schema(&self, sig: &Signature) -> Result<RelationSchema, InputError> {
        match self {
            Relation::Plain { name, poly } => Ok(RelationSchema::parse(&format!("{name} = {}", sig.fmt_poly(poly)))?),
            Relation::Schema { schema, .. } => Ok(schema.clone()),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FileOptions {
    pub window: Option<u64>,
    pub relation_multiplier: Option<u64>,
    pub max_length: Option<usize>,
    pub max_dpow: Option<u32>,
    pub mult_bound: Option<u32>,
    pub max_iters: Option<usize>,
    pub max_basis: Option<usize>,
    pub parallel: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct Presentation {
    pub locality: u32,
    /// Ascending rank.
    pub generators: Vec<GenSpec>,
    pub order: OrderRule,
    pub relations: Vec<Relation>,
    pub options: FileOptions,
    pub sig: Signature,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    Algebra,
    Relations,
    Options,
}

/// Comment-free logical lines with the number of their first physical line.
fn logical_lines(text: &str) -> Vec<(usize, String)> {
    let mut out: Vec<(usize, String)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let continued = line.starts_with(char::is_whitespace);
        match out.last_mut() {
            Some((_, prev)) if continued && !prev.starts_with('[') => {
                prev.push(' ');
                prev.push_str(line.trim());
            }
            _ => out.push((i + 1, line.trim().to_string())),
        }
    }
    out
}

fn collapse(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ")
}

fn key_value(line: usize, s: &str) -> Result<(String, String), InputError> {
    let (k, v) = s.split_once('=').ok_or_else(|| at(line, "expected `key = value`"))?;
    Ok((k.trim().to_string(), v.trim().to_string()))
}

fn number<T: std::str::FromStr>(line: usize, key: &str, v: &str) -> Result<T, InputError> {
    v.parse().map_err(|_| at(line, format!("`{key}` expects a nonnegative integer, got `{v}`")))
}

fn gen_spec(s: &str) -> GenSpec {
    match s.strip_suffix("_*") {
        Some(name) => GenSpec { name: name.to_string(), indexed: true },
        None => GenSpec { name: s.to_string(), indexed: false },
    }
}

fn apply_rank(line: usize, gens: &mut Vec<GenSpec>, spec: &str) -> Result<(), InputError> {
    let (sep, descending) = match (spec.contains('>'), spec.contains('<')) {
        (true, false) => ('>', true),
        (false, true) => ('<', false),
        (false, false) if !spec.contains(',') => ('>', true),
        _ => return Err(at(line, "`rank` uses either `>` or `<`, not both")),
    };
    let mut names: Vec<&str> = spec.split(sep).map(str::trim).map(|n| n.strip_suffix("_*").unwrap_or(n)).collect();
    if descending {
        names.reverse();
    }
    let mut ranked = Vec::with_capacity(gens.len());
    for n in &names {
        let pos = gens.iter().position(|g| g.name == *n).ok_or_else(|| at(line, format!("`rank` names unknown generator `{n}`")))?;
        ranked.push(gens.remove(pos));
    }
    if let Some(g) = gens.first() {
        return Err(at(line, format!("`rank` does not mention `{}`", g.name)));
    }
    *gens = ranked;
    Ok(())
}

impl Presentation {
    pub fn parse(text: &str) -> Result<Self, InputError> {
        let mut section = None;
        let mut locality = None;
        let mut generators: Option<Vec<GenSpec>> = None;
        let mut rank = None;
        let mut order = OrderRule::AbsThenSigned;
        let mut relation_lines = Vec::new();
        let mut options = FileOptions::default();

        for (line, s) in logical_lines(text) {
            if let Some(name) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
                section = Some(match name.trim() {
                    "algebra" => Section::Algebra,
                    "relations" => Section::Relations,
                    "options" => Section::Options,
                    other => return Err(at(line, format!("unknown section `[{other}]`"))),
                });
                continue;
            }
            match section {
                None => return Err(at(line, "text before the first section")),
                Some(Section::Algebra) => {
                    let (k, v) = key_value(line, &s)?;
                    match k.as_str() {
                        "N" | "locality" => locality = Some(number::<u32>(line, &k, &v)?),
                        "generators" => {
                            let gens: Vec<GenSpec> = v.split(',').map(str::trim).filter(|g| !g.is_empty()).map(gen_spec).collect();
                            if gens.is_empty() {
                                return Err(at(line, "empty generator list"));
                            }
                            generators = Some(gens);
                        }
                        "rank" => rank = Some((line, v)),
                        "order" => {
                            order = OrderRule::parse(&v)
                                .ok_or_else(|| at(line, format!("unknown order `{v}`; use abs-then-signed or signed")))?
                        }
                        _ => return Err(at(line, format!("unknown algebra key `{k}`"))),
                    }
                }
                Some(Section::Relations) => relation_lines.push((line, s)),
                Some(Section::Options) => {
                    let (k, v) = key_value(line, &s)?;
                    let o = &mut options;
                    match k.as_str() {
                        "window" => o.window = Some(number(line, &k, &v)?),
                        "relation-multiplier" => o.relation_multiplier = Some(number(line, &k, &v)?),
                        "max-length" => o.max_length = Some(number(line, &k, &v)?),
                        "max-dpow" => o.max_dpow = Some(number(line, &k, &v)?),
                        "mult-bound" => o.mult_bound = Some(number(line, &k, &v)?),
                        "max-iters" => o.max_iters = Some(number(line, &k, &v)?),
                        "max-basis" => o.max_basis = Some(number(line, &k, &v)?),
                        "parallel" => {
                            o.parallel = Some(v.parse().map_err(|_| at(line, "`parallel` expects true or false"))?)
                        }
                        _ => return Err(at(line, format!("unknown option `{k}`"))),
                    }
                }
            }
        }

        let locality = locality.ok_or_else(|| InputError::Msg("[algebra] must set `N`".into()))?;
        let mut generators = generators.ok_or_else(|| InputError::Msg("[algebra] must list `generators`".into()))?;
        if let Some((line, spec)) = rank {
            apply_rank(line, &mut generators, &spec)?;
        }
        let families = generators
            .iter()
            .map(|g| if g.indexed { Family::indexed(&g.name, order.index_order()) } else { Family::single(&g.name) })
            .collect();
        let sig = Signature::new(locality, families)?;

        let mut relations = Vec::new();
        for (line, s) in relation_lines {
            let rel = if s.contains('=') || s.contains(':') {
                let schema = RelationSchema::parse(&s).map_err(|e| at(line, e))?;
                if schema.arity() == 0 && schema.constraint.is_none() {
                    let poly = schema.instance(&sig, &[]).map_err(|e| at(line, e))?.unwrap_or_default();
                    Relation::Plain { name: schema.name, poly }
                } else {
                    // resolve one instance so unknown generators surface now
                    schema.instance(&sig, &vec![0; schema.arity()]).map_err(|e| at(line, e))?;
                    Relation::Schema { text: collapse(&s), schema }
                }
            } else {
                let poly = sig.parse_poly(&s).map_err(|e| at(line, e))?;
                Relation::Plain { name: format!("r{}", relations.len() + 1), poly }
            };
            relations.push(rel);
        }
        let mut names: Vec<&str> = relations
            .iter()
            .map(|r| match r {
                Relation::Plain { name, .. } => name.as_str(),
                Relation::Schema { schema, .. } => schema.name.as_str(),
            })
            .collect();
        names.sort_unstable();
        if let Some(w) = names.windows(2).find(|w| w[0] == w[1]) {
            return Err(InputError::Msg(format!("relation name `{}` is used twice", w[0])));
        }
        Ok(Presentation { locality, generators, order, relations, options, sig })
    }

    pub fn max_params(&self) -> usize {
        self.relations.iter().map(Relation::arity).max().unwrap_or(0)
    }

    pub fn has_indexed(&self) -> bool {
        self.generators.iter().any(|g| g.indexed)
    }

    /// Canonical text. Parsing it gives back the same presentation, and
    /// printing is idempotent.
    pub fn to_canonical(&self) -> String {
        let mut s = String::from("[algebra]\n");
        let _ = writeln!(s, "N = {}", self.locality);
        let gens: Vec<String> =
            self.generators.iter().map(|g| if g.indexed { format!("{}_*", g.name) } else { g.name.clone() }).collect();
        let _ = writeln!(s, "generators = {}", gens.join(", "));
        if self.has_indexed() {
            let _ = writeln!(s, "order = {}", self.order.name());
        }
        s.push_str("\n[relations]\n");
        for r in &self.relations {
            match r {
                Relation::Plain { name, poly } => {
                    let _ = writeln!(s, "{name} = {}", self.sig.fmt_poly(poly));
                }
                Relation::Schema { text, .. } => {
                    let _ = writeln!(s, "{text}");
                }
            }
        }
        let o = &self.options;
        let entries: Vec<(&str, Option<String>)> = vec![
            ("window", o.window.map(|v| v.to_string())),
            ("relation-multiplier", o.relation_multiplier.map(|v| v.to_string())),
            ("max-length", o.max_length.map(|v| v.to_string())),
            ("max-dpow", o.max_dpow.map(|v| v.to_string())),
            ("mult-bound", o.mult_bound.map(|v| v.to_string())),
            ("max-iters", o.max_iters.map(|v| v.to_string())),
            ("max-basis", o.max_basis.map(|v| v.to_string())),
            ("parallel", o.parallel.map(|v| v.to_string())),
        ];
        if entries.iter().any(|(_, v)| v.is_some()) {
            s.push_str("\n[options]\n");
            for (k, v) in entries {
                if let Some(v) = v {
                    let _ = writeln!(s, "{k} = {v}");
                }
            }
        }
        s
    }
}
