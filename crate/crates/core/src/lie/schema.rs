//! Relation families with integer parameters, such as
//! `s0(i,j) = L_i (0) L_j - L_0 (0) L_{i+j} where i != 0`.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::normal::normalize;
use crate::poly::Polynomial;
use crate::signature::Signature;
use crate::text::{Ast, IndexExpr, Parser};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RelOp {
    Lt,
    Le,
    Gt,
    Ge,
    Eq,
    Ne,
}

impl RelOp {
    fn holds(self, a: i64, b: i64) -> bool {
        match self {
            RelOp::Lt => a < b,
            RelOp::Le => a <= b,
            RelOp::Gt => a > b,
            RelOp::Ge => a >= b,
            RelOp::Eq => a == b,
            RelOp::Ne => a != b,
        }
    }

    fn from_sym(s: &str) -> Option<RelOp> {
        Some(match s {
            "<" => RelOp::Lt,
            "<=" => RelOp::Le,
            ">" => RelOp::Gt,
            ">=" => RelOp::Ge,
            "==" | "=" => RelOp::Eq,
            "!=" => RelOp::Ne,
            _ => return None,
        })
    }
}

/// Side condition on the parameters. `,` is a conjunction that binds
/// tighter than `or`, so `|i| >= |j|, i > 0 > j or i > j > 0` reads as
/// `(|i| >= |j| and i > 0 > j) or i > j > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Constraint {
    /// A chain `e0 op0 e1 op1 e2 ...`.
    Chain(Vec<IndexExpr>, Vec<RelOp>),
    And(Box<Constraint>, Box<Constraint>),
    Or(Box<Constraint>, Box<Constraint>),
    Not(Box<Constraint>),
}

impl Constraint {
    pub fn parse(src: &str) -> Result<Self> {
        let mut p = Parser::new(src)?;
        let c = constraint_or(&mut p)?;
        if !p.at_end() {
            return p.err("unexpected trailing input in constraint");
        }
        Ok(c)
    }

    pub fn eval(&self, env: &dyn Fn(&str) -> Option<i64>) -> Result<bool> {
        Ok(match self {
            Constraint::Chain(es, ops) => {
                let vals = es.iter().map(|e| e.eval(env)).collect::<Result<Vec<_>>>()?;
                ops.iter().enumerate().all(|(k, op)| op.holds(vals[k], vals[k + 1]))
            }
            Constraint::And(a, b) => a.eval(env)? && b.eval(env)?,
            Constraint::Or(a, b) => a.eval(env)? || b.eval(env)?,
            Constraint::Not(a) => !a.eval(env)?,
        })
    }
}

fn constraint_or(p: &mut Parser) -> Result<Constraint> {
    let mut acc = constraint_and(p)?;
    while p.is_ident("or") {
        p.bump();
        acc = Constraint::Or(Box::new(acc), Box::new(constraint_and(p)?));
    }
    Ok(acc)
}

fn constraint_and(p: &mut Parser) -> Result<Constraint> {
    let mut acc = constraint_not(p)?;
    while p.is_ident("and") || p.is_sym(",") {
        p.bump();
        acc = Constraint::And(Box::new(acc), Box::new(constraint_not(p)?));
    }
    Ok(acc)
}

fn constraint_not(p: &mut Parser) -> Result<Constraint> {
    if p.is_ident("not") {
        p.bump();
        return Ok(Constraint::Not(Box::new(constraint_not(p)?)));
    }
    let mark = p.mark();
    match chain(p) {
        Ok(c) => Ok(c),
        Err(e) => {
            // a parenthesised condition rather than a parenthesised index
            p.reset(mark);
            if p.is_sym("(") {
                p.bump();
                let inner = constraint_or(p)?;
                p.expect_sym(")")?;
                Ok(inner)
            } else {
                Err(e)
            }
        }
    }
}

fn chain(p: &mut Parser) -> Result<Constraint> {
    let mut es = vec![p.iexpr()?];
    let mut ops = Vec::new();
    while let Some(op) = p.peek_sym().and_then(RelOp::from_sym) {
        p.bump();
        ops.push(op);
        es.push(p.iexpr()?);
    }
    if ops.is_empty() {
        return p.err("expected a comparison");
    }
    Ok(Constraint::Chain(es, ops))
}

/// A parameterized relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationSchema {
    pub name: String,
    pub params: Vec<String>,
    pub template: Ast,
    pub constraint: Option<Constraint>,
}

impl RelationSchema {
    /// `name(p1, ..., pk) = template [where constraint]`; `:` may be used
    /// instead of `=`. A schema without parameters is a plain relation.
    pub fn parse(src: &str) -> Result<Self> {
        let mut p = Parser::new(src)?;
        let name = p.expect_ident()?;
        let mut params = Vec::new();
        if p.is_sym("(") {
            p.bump();
            loop {
                let v = p.expect_ident()?;
                if params.contains(&v) {
                    return Err(Error::Schema(format!("parameter `{v}` listed twice")));
                }
                params.push(v);
                if p.is_sym(",") {
                    p.bump();
                } else {
                    break;
                }
            }
            p.expect_sym(")")?;
        }
        if p.is_sym(":") || p.is_sym("=") {
            p.bump();
        } else {
            return p.err("expected `=` or `:` after the schema head");
        }
        let template = p.sum()?;
        let constraint = if p.is_ident("where") {
            p.bump();
            Some(constraint_or(&mut p)?)
        } else {
            None
        };
        if !p.at_end() {
            return p.err("unexpected trailing input");
        }
        for v in template.index_vars() {
            if !params.contains(&v) {
                return Err(Error::Schema(format!("`{name}`: index variable `{v}` is not a parameter")));
            }
        }
        Ok(RelationSchema { name, params, template, constraint })
    }

    pub fn arity(&self) -> usize {
        self.params.len()
    }

    /// Instance for concrete parameter values, or `None` when the
    /// constraint rejects them.
    pub fn instance(&self, sig: &Signature, values: &[i64]) -> Result<Option<Polynomial>> {
        let env = |v: &str| self.params.iter().position(|p| p == v).map(|k| values[k]);
        if let Some(c) = &self.constraint {
            if !c.eval(&env)? {
                return Ok(None);
            }
        }
        Ok(Some(normalize(&self.template.resolve(sig, &env)?, sig)?))
    }

    /// Every instance with all parameters in `[-radius, radius]`.
    pub fn instances(&self, sig: &Signature, radius: i64) -> Result<Vec<(Vec<i64>, Polynomial)>> {
        let mut out = Vec::new();
        let k = self.params.len();
        let mut vals = vec![-radius; k];
        loop {
            if let Some(p) = self.instance(sig, &vals)? {
                out.push((vals.clone(), p));
            }
            let mut pos = 0;
            loop {
                if pos == k {
                    return Ok(out);
                }
                if vals[pos] < radius {
                    vals[pos] += 1;
                    break;
                }
                vals[pos] = -radius;
                pos += 1;
            }
        }
    }
}

impl fmt::Display for RelationSchema {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.name, self.params.join(","))
    }
}

/// Window for instantiating families: compositions use indices in
/// `[-w, w]`, relations are instantiated for parameters in
/// `[-m*w, m*w]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IndexWindow {
    pub w: u64,
    pub m: u64,
}

impl IndexWindow {
    pub fn relation_radius(&self) -> i64 {
        (self.w * self.m) as i64
    }

    /// Radius inside which the instantiated families are treated as
    /// complete: `⌊m w / F⌋` for `F` the largest number of parameters.
    pub fn trusted_radius(&self, max_params: usize) -> u64 {
        self.w * self.m / max_params.max(1) as u64
    }

    pub fn check_window(&self, max_params: usize) -> crate::gsb::Window {
        crate::gsb::Window { radius: self.w, trusted: self.trusted_radius(max_params) }
    }
}

/// Monic, deduplicated instances of every schema.
pub fn instantiate_schemas(schemas: &[RelationSchema], sig: &Signature, window: IndexWindow) -> Result<Vec<Polynomial>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for s in schemas {
        for (_, p) in s.instances(sig, window.relation_radius())? {
            if let Ok(m) = p.make_monic() {
                if seen.insert(m.clone()) {
                    out.push(m);
                }
            }
        }
    }
    Ok(out)
}
