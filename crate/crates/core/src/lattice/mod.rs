//! Lattice points of the dilated simplex, validated configurations and the
//! invariants that only depend on the group generated by a configuration.

mod snf;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

pub use snf::{smith_normal_form, SmithForm};

use crate::error::{Error, Result};

/// A point of `N^d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticeVector(Vec<u64>);

impl LatticeVector {
    pub fn new(coords: Vec<u64>) -> Self {
        LatticeVector(coords)
    }

    pub fn zero(d: usize) -> Self {
        LatticeVector(vec![0; d])
    }

    /// `scale` times the `j`-th unit vector.
    pub fn corner(d: usize, j: usize, scale: u64) -> Self {
        let mut v = vec![0; d];
        v[j] = scale;
        LatticeVector(v)
    }

    pub fn coords(&self) -> &[u64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().sum()
    }

    /// S-degree `(b_1 + ... + b_d) / alpha`, if the coordinate sum is divisible.
    pub fn degree(&self, alpha: u64) -> Option<u64> {
        let s = self.sum();
        s.is_multiple_of(alpha).then_some(s / alpha)
    }

    pub fn checked_add(&self, other: &LatticeVector) -> Option<LatticeVector> {
        debug_assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b))
            .collect::<Option<Vec<_>>>()
            .map(LatticeVector)
    }

    /// `self - other`, or `None` if the difference leaves `N^d`.
    pub fn checked_sub(&self, other: &LatticeVector) -> Option<LatticeVector> {
        debug_assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(LatticeVector)
    }

    pub fn scaled(&self, k: u64) -> Option<LatticeVector> {
        self.0
            .iter()
            .map(|a| a.checked_mul(k))
            .collect::<Option<Vec<_>>>()
            .map(LatticeVector)
    }

    pub fn permuted(&self, perm: &[usize]) -> LatticeVector {
        LatticeVector(perm.iter().map(|&p| self.0[p]).collect())
    }

    pub fn to_i64(&self) -> Result<Vec<i64>> {
        self.0
            .iter()
            .map(|&x| i64::try_from(x).map_err(|_| Error::Overflow("lattice coordinate")))
            .collect()
    }
}

impl From<Vec<u64>> for LatticeVector {
    fn from(v: Vec<u64>) -> Self {
        LatticeVector(v)
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// All points of `N^d` with coordinate sum `alpha`, in descending
/// lexicographic order.
pub fn enumerate_simplex_points(alpha: u64, d: usize) -> Vec<LatticeVector> {
    fn rec(remaining: u64, slot: usize, cur: &mut Vec<u64>, out: &mut Vec<LatticeVector>) {
        if slot + 1 == cur.len() {
            cur[slot] = remaining;
            out.push(LatticeVector(cur.clone()));
            return;
        }
        for v in (0..=remaining).rev() {
            cur[slot] = v;
            rec(remaining - v, slot + 1, cur, out);
        }
    }
    if d == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    rec(alpha, 0, &mut vec![0; d], &mut out);
    out
}

/// `C(n, k)` with overflow checking.
pub fn binomial_coefficient(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
        if acc > u128::from(u64::MAX) {
            return None;
        }
    }
    u64::try_from(acc).ok()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "value")]
pub enum ConfigWarning {
    /// Only one non-corner generator.
    SingleGenerator,
    /// The non-corner coordinates share a common factor.
    CommonDivisor(u64),
}

/// A validated generating set `{e_1..e_d, a_1..a_c}` of a homogeneous
/// simplicial semigroup.
///
/// The order of `a_points` is significant: `a_i` is the image of the variable
/// `x_i`, and variable order drives every term order downstream.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Configuration {
    alpha: u64,
    d: usize,
    a_points: Vec<LatticeVector>,
    warnings: Vec<ConfigWarning>,
}

impl Configuration {
    /// Validates raw points. Corner points `alpha * u_j` are dropped wherever
    /// they appear (they are always adjoined implicitly); duplicates keep
    /// their first position.
    pub fn new(alpha: u64, d: usize, points: &[Vec<i64>]) -> Result<Self> {
        if alpha < 2 {
            return Err(Error::InvalidConfiguration(format!("alpha must be at least 2, got {alpha}")));
        }
        if d == 0 {
            return Err(Error::InvalidConfiguration("dimension must be at least 1".into()));
        }
        let mut a_points: Vec<LatticeVector> = Vec::new();
        for p in points {
            if p.len() != d {
                return Err(Error::InvalidConfiguration(format!(
                    "point {p:?} has length {}, expected {d}",
                    p.len()
                )));
            }
            if let Some(x) = p.iter().find(|&&x| x < 0) {
                return Err(Error::InvalidConfiguration(format!(
                    "point {p:?} has negative entry {x}"
                )));
            }
            let v = LatticeVector(p.iter().map(|&x| x as u64).collect());
            if v.sum() != alpha {
                return Err(Error::InvalidConfiguration(format!(
                    "point {v} has coordinate sum {}, expected {alpha}",
                    v.sum()
                )));
            }
            if v.coords().contains(&alpha) || a_points.contains(&v) {
                continue;
            }
            a_points.push(v);
        }
        Self::from_points(alpha, d, a_points)
    }

    /// Builds from already-typed non-corner points, running the same checks.
    pub fn from_points(alpha: u64, d: usize, a_points: Vec<LatticeVector>) -> Result<Self> {
        if alpha < 2 {
            return Err(Error::InvalidConfiguration(format!("alpha must be at least 2, got {alpha}")));
        }
        if d == 0 {
            return Err(Error::InvalidConfiguration("dimension must be at least 1".into()));
        }
        if a_points.is_empty() {
            return Err(Error::InvalidConfiguration(
                "configuration needs at least one non-corner generator".into(),
            ));
        }
        for (i, v) in a_points.iter().enumerate() {
            if v.dim() != d || v.sum() != alpha {
                return Err(Error::InvalidConfiguration(format!("{v} is not a point of M_({alpha},{d})")));
            }
            if v.coords().contains(&alpha) {
                return Err(Error::InvalidConfiguration(format!("{v} is a corner point")));
            }
            if a_points[..i].contains(v) {
                return Err(Error::InvalidConfiguration(format!("{v} listed twice")));
            }
        }
        let mut warnings = Vec::new();
        if a_points.len() == 1 {
            warnings.push(ConfigWarning::SingleGenerator);
        }
        let g = a_points
            .iter()
            .flat_map(|v| v.coords().iter().copied())
            .fold(0u64, |g, x| g.gcd(&x));
        if g > 1 {
            warnings.push(ConfigWarning::CommonDivisor(g));
        }
        Ok(Configuration {
            alpha,
            d,
            a_points,
            warnings,
        })
    }

    /// `A = M_{alpha,d}`: every non-corner point, in descending lex order.
    pub fn full(alpha: u64, d: usize) -> Result<Self> {
        Self::with_deleted(alpha, d, &[])
    }

    /// `M_{alpha,d}` minus the given non-corner points.
    pub fn with_deleted(alpha: u64, d: usize, deleted: &[LatticeVector]) -> Result<Self> {
        let pts = enumerate_simplex_points(alpha, d)
            .into_iter()
            .filter(|p| !p.coords().contains(&alpha) && !deleted.contains(p))
            .collect();
        Self::from_points(alpha, d, pts)
    }

    pub fn alpha(&self) -> u64 {
        self.alpha
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn a_points(&self) -> &[LatticeVector] {
        &self.a_points
    }

    pub fn warnings(&self) -> &[ConfigWarning] {
        &self.warnings
    }

    pub fn codimension(&self) -> usize {
        self.a_points.len()
    }

    pub fn e_points(&self) -> Vec<LatticeVector> {
        (0..self.d)
            .map(|j| LatticeVector::corner(self.d, j, self.alpha))
            .collect()
    }

    /// `e_1..e_d` followed by `a_1..a_c`.
    pub fn generators(&self) -> Vec<LatticeVector> {
        let mut g = self.e_points();
        g.extend(self.a_points.iter().cloned());
        g
    }

    /// Same configuration with `a_points` in descending lex order.
    pub fn sorted(&self) -> Configuration {
        let mut c = self.clone();
        c.a_points.sort_by(|a, b| b.cmp(a));
        c
    }

    /// Non-corner points of `M_{alpha,d}` missing from the configuration.
    pub fn deleted_points(&self) -> Vec<LatticeVector> {
        enumerate_simplex_points(self.alpha, self.d)
            .into_iter()
            .filter(|p| !p.coords().contains(&self.alpha) && !self.a_points.contains(p))
            .collect()
    }

    /// Smith form of the `(c+d) x d` generator matrix.
    pub fn smith_form(&self) -> Result<SmithForm> {
        let rows = self
            .generators()
            .iter()
            .map(LatticeVector::to_i64)
            .collect::<Result<Vec<_>>>()?;
        Ok(smith_normal_form(&rows, self.d))
    }

    /// `[Z^d : ZS]`.
    pub fn lattice_index(&self) -> Result<u64> {
        let snf = self.smith_form()?;
        if snf.rank() != self.d {
            return Err(Error::InvariantViolation(format!(
                "generator matrix has rank {} < {}",
                snf.rank(),
                self.d
            )));
        }
        big_to_u64(snf.determinant(), "lattice index")
    }

    /// Multiplicity `deg K[S] = alpha^d / [Z^d : ZS]`.
    pub fn degree(&self) -> Result<u64> {
        let d = u32::try_from(self.d).map_err(|_| Error::Overflow("dimension"))?;
        let vol = self.alpha.checked_pow(d).ok_or(Error::Overflow("alpha^d"))?;
        let idx = self.lattice_index()?;
        if vol % idx != 0 {
            return Err(Error::InvariantViolation(format!(
                "lattice index {idx} does not divide alpha^d = {vol}"
            )));
        }
        Ok(vol / idx)
    }

    /// `deg - codim + 1`.
    pub fn eisenbud_goto_bound(&self) -> Result<i64> {
        let deg = i64::try_from(self.degree()?).map_err(|_| Error::Overflow("degree"))?;
        Ok(deg - self.codimension() as i64 + 1)
    }

    /// Non-corner points as plain rows, for serialization.
    pub fn generator_rows(&self) -> Vec<Vec<u64>> {
        self.a_points.iter().map(|p| p.coords().to_vec()).collect()
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "alpha={} d={} a=[", self.alpha, self.d)?;
        for (i, p) in self.a_points.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

fn big_to_u64(x: BigInt, what: &'static str) -> Result<u64> {
    x.to_u64().ok_or(Error::Overflow(what))
}
