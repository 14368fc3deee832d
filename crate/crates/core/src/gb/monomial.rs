use std::fmt;

use crate::error::{Error, Result};

/// Ordered variable names. Position 0 is the most significant variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariableUniverse {
    names: Vec<String>,
}

impl VariableUniverse {
    pub fn new(names: Vec<String>) -> Self {
        VariableUniverse { names }
    }

    /// `x_1..x_c, y_1..y_d` for presentation ring of the toric ideal.
    pub fn toric(c: usize, d: usize) -> Self {
        let names = (1..=c)
            .map(|i| format!("x{i}"))
            .chain((1..=d).map(|j| format!("y{j}")))
            .collect();
        VariableUniverse { names }
    }

    /// `t_1..t_d, x_1..x_c, y_1..y_d` for ring of the elimination system.
    pub fn elimination(c: usize, d: usize) -> Self {
        let names = (1..=d)
            .map(|j| format!("t{j}"))
            .chain(VariableUniverse::toric(c, d).names)
            .collect();
        VariableUniverse { names }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// Dense exponent vector with a cached total degree and a support mask.
///
/// Bit `i mod 64` of the mask is set when variable `i` occurs, which gives a
/// cheap necessary condition for divisibility.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Box<[u16]>,
    degree: u32,
    mask: u64,
}

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial {
            exps: vec![0; n].into_boxed_slice(),
            degree: 0,
            mask: 0,
        }
    }

    pub fn from_exponents(exps: Vec<u16>) -> Self {
        let degree = exps.iter().map(|&e| u32::from(e)).sum();
        let mask = support_mask(&exps);
        Monomial {
            exps: exps.into_boxed_slice(),
            degree,
            mask,
        }
    }

    /// Exponents from wider integers, with overflow checking.
    pub fn try_from_exponents<I, T>(exps: I) -> Result<Self>
    where
        I: IntoIterator<Item = T>,
        T: TryInto<u16>,
    {
        let exps = exps
            .into_iter()
            .map(|e| e.try_into().map_err(|_| Error::Overflow("monomial exponent")))
            .collect::<Result<Vec<u16>>>()?;
        Ok(Self::from_exponents(exps))
    }

    pub fn var(n: usize, i: usize, e: u16) -> Self {
        let mut exps = vec![0; n];
        exps[i] = e;
        Self::from_exponents(exps)
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u64 {
        debug_assert_eq!(weights.len(), self.exps.len());
        self.exps
            .iter()
            .zip(weights)
            .map(|(&e, &w)| u64::from(e) * u64::from(w))
            .sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.mask & !other.mask == 0
            && self.degree <= other.degree
            && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        if self.mask & other.mask == 0 {
            return true;
        }
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        let exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| a.checked_add(*b))
            .collect::<Option<Vec<u16>>>()
            .ok_or(Error::Overflow("monomial product"))?;
        Ok(Monomial::from_exponents(exps))
    }

    /// `self / other`; the caller guarantees divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        Monomial::from_exponents(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    /// `self / other * by`, computed in one pass.
    pub fn replace_factor(&self, other: &Monomial, by: &Monomial) -> Result<Monomial> {
        debug_assert!(other.divides(self));
        let exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .zip(by.exps.iter())
            .map(|((a, b), c)| (a - b).checked_add(*c))
            .collect::<Option<Vec<u16>>>()
            .ok_or(Error::Overflow("monomial product"))?;
        Ok(Monomial::from_exponents(exps))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::from_exponents(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::from_exponents(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    /// Whether any of the first `k` variables occurs.
    pub fn touches_prefix(&self, k: usize) -> bool {
        self.exps[..k].iter().any(|&e| e > 0)
    }

    /// Drops the first `k` variables.
    pub fn without_prefix(&self, k: usize) -> Monomial {
        Monomial::from_exponents(self.exps[k..].to_vec())
    }

    pub fn display<'a>(&'a self, universe: &'a VariableUniverse) -> MonomialDisplay<'a> {
        MonomialDisplay {
            monomial: self,
            universe,
        }
    }
}

fn support_mask(exps: &[u16]) -> u64 {
    exps.iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .fold(0u64, |m, (i, _)| m | (1u64 << (i % 64)))
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &self.exps[..])
    }
}

pub struct MonomialDisplay<'a> {
    monomial: &'a Monomial,
    universe: &'a VariableUniverse,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomial.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.monomial.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", self.universe.names[i])?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Parses `x1^2*y3` style products over `universe`. `1` is the unit.
pub fn parse_monomial(s: &str, universe: &VariableUniverse) -> Result<Monomial> {
    let s = s.trim();
    let mut exps = vec![0u16; universe.len()];
    if s == "1" {
        return Ok(Monomial::from_exponents(exps));
    }
    for factor in s.split('*') {
        let factor = factor.trim();
        let (name, e) = match factor.split_once('^') {
            Some((n, e)) => (
                n.trim(),
                e.trim()
                    .parse::<u16>()
                    .map_err(|_| Error::InvalidInput(format!("bad exponent in {factor:?}")))?,
            ),
            None => (factor, 1),
        };
        let i = universe
            .index_of(name)
            .ok_or_else(|| Error::InvalidInput(format!("unknown variable {name:?}")))?;
        exps[i] = exps[i]
            .checked_add(e)
            .ok_or(Error::Overflow("monomial exponent"))?;
    }
    Ok(Monomial::from_exponents(exps))
}
