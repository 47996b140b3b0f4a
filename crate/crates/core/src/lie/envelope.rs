//! Universal enveloping associative conformal algebras of Lie conformal
//! algebras.

use num_traits::One;

use crate::normal::apply_d;
use crate::poly::{Coeff, Polynomial};
use crate::signature::Generator;
use crate::word::NormalWord;

use super::table::LieTable;

/// `{y(n)x} = Σ_{k>=0} (-1)^{n+k} / k! D^k (y(n+k)x)`, truncated where
/// `y(n+k)x` vanishes by locality.
pub fn conjugate(y: Generator, n: u32, x: Generator, locality: u32) -> Polynomial {
    let mut out = Polynomial::zero();
    let mut fact = Coeff::one();
    for k in 0..locality.saturating_sub(n) {
        if k > 0 {
            fact *= Coeff::from_integer(k.into());
        }
        let word = Polynomial::word(NormalWord::prepend(y, n + k, &NormalWord::letter(x, 0)));
        let sign = if (n + k).is_multiple_of(2) { Coeff::one() } else { -Coeff::one() };
        out.add_scaled(&apply_d(&word, k), &(sign / &fact));
    }
    out
}

/// `x(n)y - {y(n)x} - x[n]y`, unnormalized in scale.
pub fn commutator_relation(table: &LieTable, x: Generator, n: u32, y: Generator) -> Polynomial {
    let loc = table.locality();
    let mut p = Polynomial::word(NormalWord::prepend(x, n, &NormalWord::letter(y, 0)));
    p = p.sub(&conjugate(y, n, x, loc));
    p.sub(&table.bracket(x, n, y).to_poly())
}

/// The monic relations of `U_N(L)` for every ordered pair drawn from
/// `gens`, deduplicated, in the order they are generated.
pub fn enveloping_presentation(table: &LieTable, gens: &[Generator]) -> Vec<Polynomial> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for &x in gens {
        for &y in gens {
            for n in 0..table.locality() {
                if let Ok(m) = commutator_relation(table, x, n, y).make_monic() {
                    if seen.insert(m.clone()) {
                        out.push(m);
                    }
                }
            }
        }
    }
    out
}
