use std::cmp::Ordering;
use std::fmt;

use super::monomial::{parse_monomial, Monomial, VariableUniverse};
use super::order::TermOrder;
use crate::error::{Error, Result};

/// A pure difference `lead - tail` with `lead > tail` in the active order.
/// Zero is not a binomial; operations that can produce it return `None`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Binomial {
    lead: Monomial,
    tail: Monomial,
}

impl Binomial {
    /// `u - v` oriented so the larger term leads; `None` when `u == v`.
    pub fn new(u: Monomial, v: Monomial, order: &TermOrder) -> Option<Binomial> {
        match order.cmp(&u, &v) {
            Ordering::Greater => Some(Binomial { lead: u, tail: v }),
            Ordering::Less => Some(Binomial { lead: v, tail: u }),
            Ordering::Equal => None,
        }
    }

    pub fn lead(&self) -> &Monomial {
        &self.lead
    }

    pub fn tail(&self) -> &Monomial {
        &self.tail
    }

    pub fn nvars(&self) -> usize {
        self.lead.nvars()
    }

    /// Standard degree: the larger of the two term degrees.
    pub fn degree(&self) -> u32 {
        self.lead.degree().max(self.tail.degree())
    }

    pub fn is_weight_homogeneous(&self, weights: &[u32]) -> bool {
        self.lead.weighted_degree(weights) == self.tail.weighted_degree(weights)
    }

    /// Re-orients under another order (used when a basis changes hands).
    pub fn reoriented(&self, order: &TermOrder) -> Binomial {
        Binomial::new(self.lead.clone(), self.tail.clone(), order).expect("terms differ")
    }

    pub fn display<'a>(&'a self, universe: &'a VariableUniverse) -> BinomialDisplay<'a> {
        BinomialDisplay {
            binomial: self,
            universe,
        }
    }
}

pub struct BinomialDisplay<'a> {
    binomial: &'a Binomial,
    universe: &'a VariableUniverse,
}

impl fmt::Display for BinomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} - {}",
            self.binomial.lead.display(self.universe),
            self.binomial.tail.display(self.universe)
        )
    }
}

/// Parses `"x1*x2 - y1*y2"`; the result is oriented under `order`.
pub fn parse_binomial(s: &str, universe: &VariableUniverse, order: &TermOrder) -> Result<Binomial> {
    let (u, v) = s
        .split_once('-')
        .ok_or_else(|| Error::InvalidInput(format!("binomial {s:?} needs a '-'")))?;
    let u = parse_monomial(u, universe)?;
    let v = parse_monomial(v, universe)?;
    Binomial::new(u, v, order).ok_or_else(|| Error::InvalidInput(format!("binomial {s:?} is zero")))
}

/// S-binomial `(l / lead g) tail g - (l / lead f) tail f` with
/// `l = lcm(lead f, lead g)`. Two pure differences always give a pure
/// difference or zero.
pub fn s_binomial(f: &Binomial, g: &Binomial, order: &TermOrder) -> Result<Option<Binomial>> {
    let l = f.lead.lcm(&g.lead);
    let u = l.replace_factor(&g.lead, &g.tail)?;
    let v = l.replace_factor(&f.lead, &f.tail)?;
    Ok(Binomial::new(u, v, order))
}

/// Index of the first element of `basis` whose lead divides `m`.
pub(crate) fn find_reducer<'a, I>(m: &Monomial, basis: I) -> Option<&'a Binomial>
where
    I: IntoIterator<Item = &'a Binomial>,
{
    basis.into_iter().find(|g| g.lead.divides(m))
}

/// Rewrites `m` until no lead of `basis` divides it.
pub fn reduce_monomial(m: &Monomial, basis: &[Binomial]) -> Result<Monomial> {
    let mut cur = m.clone();
    while let Some(g) = find_reducer(&cur, basis) {
        cur = cur.replace_factor(&g.lead, &g.tail)?;
    }
    Ok(cur)
}

/// Normal form of `u - v` modulo `basis`.
///
/// The currently greater term is reduced first, and among several reducers
/// the one with the smallest index is used, so the result is deterministic.
pub fn normal_form(
    u: &Monomial,
    v: &Monomial,
    basis: &[Binomial],
    order: &TermOrder,
) -> Result<Option<Binomial>> {
    normal_form_with(u.clone(), v.clone(), order, |m| find_reducer(m, basis))
}

pub(crate) fn normal_form_with<'a, F>(
    mut u: Monomial,
    mut v: Monomial,
    order: &TermOrder,
    mut reducer: F,
) -> Result<Option<Binomial>>
where
    F: FnMut(&Monomial) -> Option<&'a Binomial>,
{
    loop {
        match order.cmp(&u, &v) {
            Ordering::Equal => return Ok(None),
            Ordering::Less => std::mem::swap(&mut u, &mut v),
            Ordering::Greater => {}
        }
        if let Some(g) = reducer(&u) {
            u = u.replace_factor(&g.lead, &g.tail)?;
            continue;
        }
        if let Some(g) = reducer(&v) {
            v = v.replace_factor(&g.lead, &g.tail)?;
            continue;
        }
        return Ok(Some(Binomial { lead: u, tail: v }));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup() -> (VariableUniverse, TermOrder) {
        (VariableUniverse::toric(2, 2), TermOrder::Grevlex)
    }

    fn b(s: &str) -> Binomial {
        let (u, o) = setup();
        parse_binomial(s, &u, &o).unwrap()
    }

    #[test]
    fn s_binomial_by_hand() {
        let (u, o) = setup();
        let f = b("x1*x2 - y1*y2");
        let g = b("x1^3 - x2*y1^2");
        // lcm = x1^3 x2: x1^2*(y1 y2) versus x2*(x2 y1^2)
        let s = s_binomial(&f, &g, &o).unwrap().unwrap();
        assert_eq!(s.display(&u).to_string(), "x2^2*y1^2 - x1^2*y1*y2");
        assert!(s_binomial(&f, &f, &o).unwrap().is_none());
    }

    #[test]
    fn coprime_leads_still_compute() {
        let (_, o) = setup();
        let f = b("x1^3 - x2*y1^2");
        let g = b("y1^2 - y2^2");
        assert!(s_binomial(&f, &g, &o).unwrap().is_some());
    }

    #[test]
    fn normal_form_examples() {
        let (_, o) = setup();
        let basis = vec![
            b("x1*x2 - y1*y2"),
            b("x1^3 - x2*y1^2"),
            b("x2^3 - x1*y2^2"),
            b("x2^2*y1 - x1^2*y2"),
        ];
        let s = b("x2^2*y1^2 - x1^2*y1*y2");
        assert!(normal_form(s.lead(), s.tail(), &basis, &o).unwrap().is_none());

        let irreducible = b("x1^2 - y1*y2");
        let nf = normal_form(irreducible.lead(), irreducible.tail(), &basis, &o).unwrap();
        assert_eq!(nf, Some(irreducible));

        let f = b("x1*x2*y1 - y1^2*y2");
        assert!(normal_form(f.lead(), f.tail(), &basis[..1], &o).unwrap().is_none());
    }

    #[test]
    fn parse_rejects_zero() {
        let (u, o) = setup();
        assert!(parse_binomial("x1 - x1", &u, &o).is_err());
    }
}
