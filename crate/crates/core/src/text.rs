//! Canonical text form of words and polynomials, and a parser for the
//! expression syntax
//!
//! ```text
//! sum     := ["+"|"-"] term (("+"|"-") term)*
//! term    := [RATIONAL "*"] product
//! product := factor ["(" INT ")" product]        -- right-associative
//! factor  := "D" ["^" INT] factor | IDENT ["_" index] | "(" sum ")"
//! index   := SIGNED_INT | IDENT | "{" iexpr "}"
//! ```
//!
//! `#` starts a comment that runs to the end of the line.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::normal::{normalize, RawExpr};
use crate::poly::{Coeff, Polynomial};
use crate::signature::{Generator, Signature};
use crate::word::NormalWord;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Tok {
    Ident(String),
    Int(BigInt),
    Sym(&'static str),
}

#[derive(Clone, Debug)]
pub(crate) struct Token {
    pub tok: Tok,
    pub pos: usize,
}

const SYMBOLS: [&str; 22] = [
    "<=", ">=", "==", "!=", "(", ")", "{", "}", "[", "]", "+", "-", "*", "/", "^", "_", "|", "<", ">", ",", "=", ":",
];

pub(crate) fn tokenize(src: &str) -> Result<Vec<Token>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c == '#' {
            while i < bytes.len() && bytes[i] != b'\n' {
                i += 1;
            }
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = src[start..i].parse().expect("digits");
            out.push(Token { tok: Tok::Int(n), pos: start });
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && (bytes[i] as char).is_ascii_alphanumeric() {
                i += 1;
            }
            out.push(Token { tok: Tok::Ident(src[start..i].to_string()), pos: start });
            continue;
        }
        let sym = SYMBOLS
            .iter()
            .find(|s| src[i..].starts_with(**s))
            .ok_or_else(|| Error::Parse { pos: i, msg: format!("unexpected character `{c}`") })?;
        out.push(Token { tok: Tok::Sym(sym), pos: i });
        i += sym.len();
    }
    Ok(out)
}

/// Integer index expression appearing in a generator subscript.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IndexExpr {
    Lit(i64),
    Var(String),
    Neg(Box<IndexExpr>),
    Add(Box<IndexExpr>, Box<IndexExpr>),
    Sub(Box<IndexExpr>, Box<IndexExpr>),
    Mul(Box<IndexExpr>, Box<IndexExpr>),
    Abs(Box<IndexExpr>),
}

impl IndexExpr {
    pub fn eval(&self, env: &dyn Fn(&str) -> Option<i64>) -> Result<i64> {
        Ok(match self {
            IndexExpr::Lit(n) => *n,
            IndexExpr::Var(v) => env(v).ok_or_else(|| Error::Schema(format!("unbound index variable `{v}`")))?,
            IndexExpr::Neg(e) => e.eval(env)?.checked_neg().ok_or(Error::IndexOverflow)?,
            IndexExpr::Add(a, b) => a.eval(env)?.checked_add(b.eval(env)?).ok_or(Error::IndexOverflow)?,
            IndexExpr::Sub(a, b) => a.eval(env)?.checked_sub(b.eval(env)?).ok_or(Error::IndexOverflow)?,
            IndexExpr::Mul(a, b) => a.eval(env)?.checked_mul(b.eval(env)?).ok_or(Error::IndexOverflow)?,
            IndexExpr::Abs(e) => e.eval(env)?.checked_abs().ok_or(Error::IndexOverflow)?,
        })
    }

    pub fn vars(&self, out: &mut Vec<String>) {
        match self {
            IndexExpr::Lit(_) => {}
            IndexExpr::Var(v) => {
                if !out.contains(v) {
                    out.push(v.clone())
                }
            }
            IndexExpr::Neg(e) | IndexExpr::Abs(e) => e.vars(out),
            IndexExpr::Add(a, b) | IndexExpr::Sub(a, b) | IndexExpr::Mul(a, b) => {
                a.vars(out);
                b.vars(out);
            }
        }
    }
}

/// Parsed expression before generators are resolved against a signature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ast {
    Gen { name: String, index: Option<IndexExpr>, pos: usize },
    D(u32, Box<Ast>),
    Prod(u32, Box<Ast>, Box<Ast>),
    Sum(Vec<(Coeff, Ast)>),
}

impl Ast {
    /// Resolve generator names; `env` supplies index-variable values.
    pub fn resolve(&self, sig: &Signature, env: &dyn Fn(&str) -> Option<i64>) -> Result<RawExpr> {
        Ok(match self {
            Ast::Gen { name, index, pos } => {
                let idx = index.as_ref().map(|e| e.eval(env)).transpose()?;
                let g = sig.generator(name, idx).map_err(|e| Error::Parse { pos: *pos, msg: e.to_string() })?;
                RawExpr::Gen(g)
            }
            Ast::D(k, e) => RawExpr::d(*k, e.resolve(sig, env)?),
            Ast::Prod(n, l, r) => RawExpr::prod(*n, l.resolve(sig, env)?, r.resolve(sig, env)?),
            Ast::Sum(ts) => RawExpr::Sum(
                ts.iter().map(|(c, t)| Ok((c.clone(), t.resolve(sig, env)?))).collect::<Result<_>>()?,
            ),
        })
    }

    pub fn index_vars(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            Ast::Gen { index: Some(e), .. } => e.vars(out),
            Ast::Gen { .. } => {}
            Ast::D(_, e) => e.collect_vars(out),
            Ast::Prod(_, l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
            Ast::Sum(ts) => ts.iter().for_each(|(_, t)| t.collect_vars(out)),
        }
    }
}

pub(crate) struct Parser {
    toks: Vec<Token>,
    at: usize,
    end: usize,
}

impl Parser {
    pub(crate) fn new(src: &str) -> Result<Self> {
        Ok(Parser { toks: tokenize(src)?, at: 0, end: src.len() })
    }

    pub(crate) fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.pos)
    }

    pub(crate) fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.tok)
    }

    pub(crate) fn mark(&self) -> usize {
        self.at
    }

    pub(crate) fn reset(&mut self, mark: usize) {
        self.at = mark;
    }

    pub(crate) fn is_sym(&self, s: &str) -> bool {
        matches!(self.peek(), Some(Tok::Sym(x)) if *x == s)
    }

    pub(crate) fn peek_sym(&self) -> Option<&'static str> {
        match self.peek() {
            Some(Tok::Sym(s)) => Some(s),
            _ => None,
        }
    }

    pub(crate) fn is_ident(&self, s: &str) -> bool {
        matches!(self.peek(), Some(Tok::Ident(x)) if x == s)
    }

    pub(crate) fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|t| t.tok.clone());
        self.at += 1;
        t
    }

    pub(crate) fn at_end(&self) -> bool {
        self.at >= self.toks.len()
    }

    pub(crate) fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos(), msg: msg.into() })
    }

    pub(crate) fn expect_sym(&mut self, s: &str) -> Result<()> {
        if self.is_sym(s) {
            self.at += 1;
            Ok(())
        } else {
            self.err(format!("expected `{s}`"))
        }
    }

    pub(crate) fn expect_ident(&mut self) -> Result<String> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.at += 1;
                Ok(s)
            }
            _ => self.err("expected an identifier"),
        }
    }

    pub(crate) fn expect_small_int(&mut self) -> Result<u32> {
        match self.peek() {
            Some(Tok::Int(n)) => {
                let v = u32::try_from(n).map_err(|_| Error::Parse { pos: self.pos(), msg: "integer too large".into() })?;
                self.at += 1;
                Ok(v)
            }
            _ => self.err("expected a nonnegative integer"),
        }
    }

    fn expect_i64(&mut self) -> Result<i64> {
        match self.peek() {
            Some(Tok::Int(n)) => {
                let v = i64::try_from(n).map_err(|_| Error::Parse { pos: self.pos(), msg: "integer too large".into() })?;
                self.at += 1;
                Ok(v)
            }
            _ => self.err("expected an integer"),
        }
    }

    pub(crate) fn sum(&mut self) -> Result<Ast> {
        // a lone `0` is the zero polynomial, which is how it prints
        if let Some(Tok::Int(n)) = self.peek() {
            let next = self.toks.get(self.at + 1).map(|t| &t.tok);
            if n.is_zero() && !matches!(next, Some(Tok::Sym(s)) if *s == "/" || *s == "*") {
                self.at += 1;
                return Ok(Ast::Sum(Vec::new()));
            }
        }
        let mut terms = Vec::new();
        let mut negative = if self.is_sym("-") {
            self.at += 1;
            true
        } else {
            if self.is_sym("+") {
                self.at += 1;
            }
            false
        };
        loop {
            let (c, t) = self.term()?;
            terms.push((if negative { -c } else { c }, t));
            if self.is_sym("+") {
                negative = false;
            } else if self.is_sym("-") {
                negative = true;
            } else {
                break;
            }
            self.at += 1;
        }
        if terms.len() == 1 && terms[0].0.is_one() {
            return Ok(terms.pop().expect("one term").1);
        }
        Ok(Ast::Sum(terms))
    }

    fn term(&mut self) -> Result<(Coeff, Ast)> {
        let coeff = if let Some(Tok::Int(_)) = self.peek() {
            let Some(Tok::Int(num)) = self.bump() else { unreachable!() };
            let den = if self.is_sym("/") {
                self.at += 1;
                match self.bump() {
                    Some(Tok::Int(d)) if !d.is_zero() => d,
                    _ => return self.err("expected a nonzero denominator"),
                }
            } else {
                BigInt::one()
            };
            self.expect_sym("*")?;
            Coeff::new(num, den)
        } else {
            Coeff::one()
        };
        Ok((coeff, self.product()?))
    }

    fn product(&mut self) -> Result<Ast> {
        let left = self.factor()?;
        if self.is_sym("(") {
            self.at += 1;
            let n = self.expect_small_int()?;
            self.expect_sym(")")?;
            let right = self.product()?;
            return Ok(Ast::Prod(n, Box::new(left), Box::new(right)));
        }
        Ok(left)
    }

    fn factor(&mut self) -> Result<Ast> {
        if self.is_ident("D") {
            self.at += 1;
            let k = if self.is_sym("^") {
                self.at += 1;
                self.expect_small_int()?
            } else {
                1
            };
            let inner = self.factor()?;
            return Ok(Ast::D(k, Box::new(inner)));
        }
        if self.is_sym("(") {
            self.at += 1;
            let inner = self.sum()?;
            self.expect_sym(")")?;
            return Ok(inner);
        }
        let pos = self.pos();
        let name = match self.peek() {
            Some(Tok::Ident(_)) => self.expect_ident()?,
            _ => return self.err("expected a generator, `D`, or `(`"),
        };
        let index = if self.is_sym("_") {
            self.at += 1;
            Some(self.index()?)
        } else {
            None
        };
        Ok(Ast::Gen { name, index, pos })
    }

    fn index(&mut self) -> Result<IndexExpr> {
        if self.is_sym("{") {
            self.at += 1;
            let e = self.iexpr()?;
            self.expect_sym("}")?;
            return Ok(e);
        }
        if self.is_sym("-") {
            self.at += 1;
            return Ok(IndexExpr::Lit(-self.expect_i64()?));
        }
        match self.peek() {
            Some(Tok::Int(_)) => Ok(IndexExpr::Lit(self.expect_i64()?)),
            Some(Tok::Ident(_)) => Ok(IndexExpr::Var(self.expect_ident()?)),
            _ => self.err("expected an index"),
        }
    }

    pub(crate) fn iexpr(&mut self) -> Result<IndexExpr> {
        let mut acc = self.iterm()?;
        loop {
            if self.is_sym("+") {
                self.at += 1;
                acc = IndexExpr::Add(Box::new(acc), Box::new(self.iterm()?));
            } else if self.is_sym("-") {
                self.at += 1;
                acc = IndexExpr::Sub(Box::new(acc), Box::new(self.iterm()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn iterm(&mut self) -> Result<IndexExpr> {
        let mut acc = self.iatom()?;
        while self.is_sym("*") {
            self.at += 1;
            acc = IndexExpr::Mul(Box::new(acc), Box::new(self.iatom()?));
        }
        Ok(acc)
    }

    fn iatom(&mut self) -> Result<IndexExpr> {
        if self.is_sym("-") {
            self.at += 1;
            return Ok(IndexExpr::Neg(Box::new(self.iatom()?)));
        }
        if self.is_sym("(") {
            self.at += 1;
            let e = self.iexpr()?;
            self.expect_sym(")")?;
            return Ok(e);
        }
        if self.is_sym("|") {
            self.at += 1;
            let e = self.iexpr()?;
            self.expect_sym("|")?;
            return Ok(IndexExpr::Abs(Box::new(e)));
        }
        match self.peek() {
            Some(Tok::Int(_)) => Ok(IndexExpr::Lit(self.expect_i64()?)),
            Some(Tok::Ident(_)) => Ok(IndexExpr::Var(self.expect_ident()?)),
            _ => self.err("expected an index term"),
        }
    }
}

/// Parse an expression into an unresolved tree.
pub fn parse_ast(src: &str) -> Result<Ast> {
    let mut p = Parser::new(src)?;
    let ast = p.sum()?;
    if !p.at_end() {
        return p.err("unexpected trailing input");
    }
    Ok(ast)
}

fn as_word(ast: &Ast, sig: &Signature) -> Result<NormalWord> {
    let no_vars = |_: &str| None;
    let mut body = Vec::new();
    let mut cur = ast;
    loop {
        match cur {
            Ast::Prod(n, l, r) => {
                let Ast::Gen { .. } = l.as_ref() else {
                    return Err(Error::Precondition("not a right-normed word".into()));
                };
                let RawExpr::Gen(g) = l.resolve(sig, &no_vars)? else { unreachable!() };
                if *n >= sig.locality() {
                    return Err(Error::IndexNotNormal { index: *n, locality: sig.locality() });
                }
                body.push((g, *n));
                cur = r;
            }
            Ast::D(k, inner) => {
                let RawExpr::Gen(g) = inner.resolve(sig, &no_vars)? else {
                    return Err(Error::Precondition("D may only sit on the last letter".into()));
                };
                return Ok(NormalWord::from_parts(body, g, *k));
            }
            Ast::Gen { .. } => {
                let RawExpr::Gen(g) = cur.resolve(sig, &no_vars)? else { unreachable!() };
                return Ok(NormalWord::from_parts(body, g, 0));
            }
            Ast::Sum(_) => return Err(Error::Precondition("expected a single word".into())),
        }
    }
}

impl Signature {
    pub fn parse_expr(&self, src: &str) -> Result<RawExpr> {
        parse_ast(src)?.resolve(self, &|_| None)
    }

    /// Parse and normalize. Nonstandard bracketings and indices `>= N` are
    /// accepted and rewritten into the normal-word basis.
    pub fn parse_poly(&self, src: &str) -> Result<Polynomial> {
        normalize(&self.parse_expr(src)?, self)
    }

    /// Parse a single normal word; the text must already be in normal form.
    pub fn parse_word(&self, src: &str) -> Result<NormalWord> {
        as_word(&parse_ast(src)?, self)
    }

    pub fn fmt_word(&self, w: &NormalWord) -> String {
        let mut s = String::new();
        for l in w.body() {
            let _ = write!(s, "{} ({}) ", self.display_generator(l.gen), l.index);
        }
        match w.dpow() {
            0 => {}
            1 => s.push_str("D "),
            k => {
                let _ = write!(s, "D^{k} ");
            }
        }
        s.push_str(&self.display_generator(w.tail()));
        s
    }

    /// Terms in descending order, coefficients as reduced fractions.
    pub fn fmt_poly(&self, p: &Polynomial) -> String {
        if p.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (w, c)) in p.terms().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            let abs = c.abs();
            if !abs.is_one() {
                let _ = write!(s, "{abs} * ");
            }
            s.push_str(&self.fmt_word(w));
        }
        s
    }

    pub fn fmt_generator(&self, g: Generator) -> String {
        self.display_generator(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, ratio};
    use crate::signature::{Family, IndexOrder};

    fn ex31() -> Signature {
        Signature::finite(2, &["a", "b"]).unwrap()
    }

    fn loops() -> Signature {
        Signature::new(2, vec![Family::indexed("L", IndexOrder::AbsThenSigned)]).unwrap()
    }

    #[test]
    fn relation_of_the_one_generator_example() {
        let s = ex31();
        let a = s.gen("a").unwrap();
        let p = s.parse_poly("a (1) a - a (0) D a").unwrap();
        let expected = Polynomial::from_terms([
            (NormalWord::from_parts([(a, 1)], a, 0), int(1)),
            (NormalWord::from_parts([(a, 0)], a, 1), int(-1)),
        ]);
        assert_eq!(p, expected);
        assert_eq!(s.fmt_poly(&p), "a (1) a - a (0) D a");
    }

    #[test]
    fn literals() {
        let s = ex31();
        let b = s.gen("b").unwrap();
        let p = s.parse_poly("3/2 * D^2 b").unwrap();
        assert_eq!(p, Polynomial::monomial(NormalWord::letter(b, 2), ratio(3, 2)));
        assert_eq!(s.fmt_poly(&Polynomial::zero()), "0");
        assert!(s.parse_poly("0").unwrap().is_zero());
        assert!(s.parse_poly("0 * a").unwrap().is_zero());
        let l = loops();
        let w = l.parse_word("L_1 (0) L_-1").unwrap();
        assert_eq!(w, NormalWord::from_parts([(l.indexed("L", 1).unwrap(), 0)], l.indexed("L", -1).unwrap(), 0));
        let half = Polynomial::monomial(l.parse_word("L_0 (0) L_1").unwrap(), ratio(1, 2));
        assert_eq!(l.fmt_poly(&half), "1/2 * L_0 (0) L_1");
    }

    #[test]
    fn leading_minus_and_groups() {
        let s = ex31();
        let p = s.parse_poly("-2 * a (0) b + (a (1) b) (0) b").unwrap();
        assert_eq!(s.fmt_poly(&p), "a (1) b (0) b - a (0) b (1) b - 2 * a (0) b");
        let q = s.parse_poly(&s.fmt_poly(&p)).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn index_at_or_above_locality_is_normalized() {
        let s = ex31();
        // b(2)Da = 2 b(1)a
        assert_eq!(s.fmt_poly(&s.parse_poly("b (2) D a").unwrap()), "2 * b (1) a");
        assert!(s.parse_word("b (2) a").is_err());
    }

    #[test]
    fn errors_are_positioned() {
        let s = ex31();
        match s.parse_poly("a (0) ") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 6),
            other => panic!("{other:?}"),
        }
        assert!(matches!(s.parse_poly("a $ b"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(s.parse_poly("z"), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(s.parse_poly("1/0 * a"), Err(Error::Parse { .. })));
    }

    #[test]
    fn schema_indices() {
        let ast = parse_ast("L_i (0) L_j - L_0 (0) L_{i+j}").unwrap();
        assert_eq!(ast.index_vars(), vec!["i".to_string(), "j".to_string()]);
        let l = loops();
        let env = |v: &str| match v {
            "i" => Some(2),
            "j" => Some(-3),
            _ => None,
        };
        let p = normalize(&ast.resolve(&l, &env).unwrap(), &l).unwrap();
        assert_eq!(l.fmt_poly(&p), "L_2 (0) L_-3 - L_0 (0) L_-1");
        assert!(matches!(ast.resolve(&l, &|_| None), Err(Error::Schema(_))));
    }

    #[test]
    fn comments_are_skipped() {
        let s = ex31();
        assert_eq!(s.parse_poly("a # trailing\n").unwrap(), Polynomial::word(NormalWord::letter(s.gen("a").unwrap(), 0)));
    }
}
