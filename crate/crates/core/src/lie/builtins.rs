//! The loop Virasoro and loop Heisenberg–Virasoro Lie conformal algebras.

use crate::error::{Error, Result};
use crate::gsb::RelationSet;
use crate::poly::int;
use crate::signature::{Family, Generator, IndexOrder, Signature};
use crate::word::NormalWord;

use super::envelope::enveloping_presentation;
use super::schema::{instantiate_schemas, IndexWindow, RelationSchema};
use super::table::{KdElement, LieTable};

/// A built-in Lie conformal algebra with its expected Gröbner–Shirshov
/// basis and the closed form of `Irr`.
#[derive(Clone, Debug)]
pub struct Example {
    pub name: &'static str,
    pub sig: Signature,
    pub table: LieTable,
    pub s1: Vec<RelationSchema>,
    irr_family: fn(&Signature, &NormalWord) -> bool,
}

pub const NAMES: [&str; 2] = ["virasoro", "heisenberg-virasoro"];

pub fn by_name(name: &str) -> Option<Example> {
    match name {
        "virasoro" => Some(virasoro()),
        "heisenberg-virasoro" => Some(heisenberg_virasoro()),
        _ => None,
    }
}

fn schemas(lines: &[&str]) -> Vec<RelationSchema> {
    lines.iter().map(|l| RelationSchema::parse(l).expect("built-in schema parses")).collect()
}

fn shifted(sig: &Signature, family: &str, i: i64, j: i64) -> Generator {
    sig.indexed(family, i + j).expect("index in range")
}

/// `L_i[0]L_j = -D L_{i+j}`, `L_i[1]L_j = -2 L_{i+j}`.
pub fn virasoro() -> Example {
    let sig = Signature::new(2, vec![Family::indexed("L", IndexOrder::AbsThenSigned)]).expect("valid");
    let tsig = sig.clone();
    let table = LieTable::new(2, move |x, n, y| {
        let g = shifted(&tsig, "L", x.index()?, y.index()?);
        Some(match n {
            0 => KdElement::term(g, 1, int(-1)),
            _ => KdElement::term(g, 0, int(-2)),
        })
    });
    Example {
        name: "virasoro",
        sig,
        table,
        s1: schemas(&["s0(i,j) = L_i (0) L_j - L_0 (0) L_{i+j} where i != 0", "s1(i,j) = L_i (1) L_j + L_{i+j}"]),
        irr_family: |sig, w| {
            let l0 = sig.indexed("L", 0).expect("valid");
            w.body().iter().all(|l| l.gen == l0 && l.index == 0)
        },
    }
}

/// `L_i[0]L_j = D L_{i+j}`, `L_i[1]L_j = 2 L_{i+j}`, `L_i[0]H_j = D H_{i+j}`,
/// `L_i[1]H_j = H_{i+j}`, `H_i[n]H_j = 0`; `H[n]L` follows by skew-symmetry.
pub fn heisenberg_virasoro() -> Example {
    let sig = Signature::new(
        2,
        vec![Family::indexed("H", IndexOrder::AbsThenSigned), Family::indexed("L", IndexOrder::AbsThenSigned)],
    )
    .expect("valid");
    let h = sig.family_id("H").expect("H");
    let tsig = sig.clone();
    let table = LieTable::new(2, move |x, n, y| {
        let s = x.index()? + y.index()?;
        match (x.family() == h, y.family() == h) {
            (false, false) => {
                let g = tsig.indexed("L", s).ok()?;
                Some(if n == 0 { KdElement::term(g, 1, int(1)) } else { KdElement::term(g, 0, int(2)) })
            }
            (false, true) => {
                let g = tsig.indexed("H", s).ok()?;
                Some(if n == 0 { KdElement::term(g, 1, int(1)) } else { KdElement::term(g, 0, int(1)) })
            }
            (true, true) => Some(KdElement::zero()),
            (true, false) => None,
        }
    })
    .with_skew();
    Example {
        name: "heisenberg-virasoro",
        sig,
        table,
        s1: schemas(&[
            "s0(i,j) = L_i (0) L_j - L_0 (0) L_{i+j} where i != 0",
            "s1(i,j) = L_i (1) L_j - L_{i+j}",
            "g0(i,j) = L_i (0) H_j + H_j (1) D L_i - 2 * H_j (0) L_i - D H_{i+j}",
            "g1(i,j) = L_i (1) H_j + H_j (1) L_i - H_{i+j}",
            "q0(i,j,k) = H_i (0) L_{j+k} - H_{i+j} (0) L_k + H_j (0) L_{i+k} - H_0 (0) L_{i+j+k} \
             where |i| >= |j|, i > 0 > j or i > j > 0 or i < j < 0",
            "q1(i,j) = H_i (1) L_j - H_0 (1) L_{i+j} where i != 0",
            "r0(i,j) = H_i (0) H_j - H_0 (0) H_{i+j} where i != 0",
            "r1(i,j) = H_i (1) H_j",
        ]),
        irr_family: hv_irr_family,
    }
}

/// `H_0(0)..H_0(n) L_0(0)..L_0(0) D^t L_i` (k H's, l L's, n in {0,1}),
/// `H_0(0) D^t H_i`, `H_-1(0) D^t L_i` and `D^t H_i`.
fn hv_irr_family(sig: &Signature, w: &NormalWord) -> bool {
    let h = sig.family_id("H").expect("H");
    let is = |g: Generator, fam: &str, i: i64| sig.name(g) == fam && g.index() == Some(i);
    let body = w.body();
    if w.tail().family() == h {
        return match body {
            [] => true,
            [first] => is(first.gen, "H", 0) && first.index == 0,
            _ => false,
        };
    }
    if let [first] = body {
        if is(first.gen, "H", -1) && first.index == 0 {
            return true;
        }
    }
    let k = body.iter().take_while(|l| is(l.gen, "H", 0)).count();
    let h_ok = body[..k].iter().enumerate().all(|(p, l)| l.index == 0 || (p + 1 == k && l.index == 1));
    let l_ok = body[k..].iter().all(|l| is(l.gen, "L", 0) && l.index == 0);
    h_ok && l_ok
}

impl Example {
    /// Largest number of parameters of any schema in the expected basis.
    pub fn max_params(&self) -> usize {
        self.s1.iter().map(RelationSchema::arity).max().unwrap_or(0)
    }

    /// Generators with index in `[-r, r]`.
    pub fn generators(&self, r: i64) -> Vec<Generator> {
        self.sig.generators_in(Some((-r, r)))
    }

    /// The commutator presentation instantiated on the relation window.
    pub fn s_minus(&self, window: IndexWindow) -> RelationSet {
        let gens = self.generators(window.relation_radius());
        RelationSet::monic(self.sig.locality(), enveloping_presentation(&self.table, &gens))
    }

    /// The expected basis instantiated on the relation window.
    pub fn s1_set(&self, window: IndexWindow) -> Result<RelationSet> {
        let rels = instantiate_schemas(&self.s1, &self.sig, window)?;
        Ok(RelationSet::monic(self.sig.locality(), rels))
    }

    pub fn schema(&self, name: &str) -> Result<&RelationSchema> {
        self.s1.iter().find(|s| s.name == name).ok_or_else(|| Error::Schema(format!("no schema `{name}`")))
    }

    /// Whether `w` belongs to the closed-form `Irr` family.
    pub fn in_irr_family(&self, w: &NormalWord) -> bool {
        (self.irr_family)(&self.sig, w)
    }
}
