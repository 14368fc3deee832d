use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::monomial::Monomial;
use crate::error::{Error, Result};

/// Order used inside one block of variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BlockOrder {
    Grevlex,
    Lex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TermOrder {
    /// Graded reverse lexicographic: total degree, then the last non-zero
    /// entry of `u - v` decides, negative meaning `u` is larger.
    Grevlex,
    /// First non-zero entry of `u - v` decides, positive meaning `u` is larger.
    Lex,
    /// Grevlex on the first `split` variables; ties are broken by `rest`
    /// on the remaining ones. Any monomial involving the first block beats
    /// every monomial free of it.
    Elimination { split: usize, rest: BlockOrder },
}

impl TermOrder {
    pub fn cmp(&self, u: &Monomial, v: &Monomial) -> Ordering {
        debug_assert_eq!(u.nvars(), v.nvars());
        let (a, b) = (u.exponents(), v.exponents());
        match *self {
            TermOrder::Grevlex => u.degree().cmp(&v.degree()).then_with(|| revlex_tail(a, b)),
            TermOrder::Lex => lex(a, b),
            TermOrder::Elimination { split, rest } => {
                grevlex_slice(&a[..split], &b[..split]).then_with(|| match rest {
                    BlockOrder::Grevlex => grevlex_slice(&a[split..], &b[split..]),
                    BlockOrder::Lex => lex(&a[split..], &b[split..]),
                })
            }
        }
    }

    pub fn is_elimination(&self) -> bool {
        matches!(self, TermOrder::Elimination { .. })
    }
}

/// Compares two monomials, refusing mismatched universes.
pub fn compare(order: &TermOrder, u: &Monomial, v: &Monomial) -> Result<Ordering> {
    if u.nvars() != v.nvars() {
        return Err(Error::UniverseMismatch(u.nvars(), v.nvars()));
    }
    if let TermOrder::Elimination { split, .. } = order {
        if *split > u.nvars() {
            return Err(Error::UniverseMismatch(*split, u.nvars()));
        }
    }
    Ok(order.cmp(u, v))
}

fn deg(a: &[u16]) -> u32 {
    a.iter().map(|&e| u32::from(e)).sum()
}

fn grevlex_slice(a: &[u16], b: &[u16]) -> Ordering {
    deg(a).cmp(&deg(b)).then_with(|| revlex_tail(a, b))
}

fn revlex_tail(a: &[u16], b: &[u16]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            // smaller exponent in the last differing variable wins
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

fn lex(a: &[u16], b: &[u16]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        if x != y {
            return x.cmp(y);
        }
    }
    Ordering::Equal
}
