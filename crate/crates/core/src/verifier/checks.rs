use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::toric::BoundReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Field {
    R,
    Deg,
    Codim,
    Alpha,
    D,
    MaxdegRevlex,
    MaxdegLex,
    MaxdegJa,
}

impl Field {
    const NAMES: [(&'static str, Field); 10] = [
        ("r", Field::R),
        ("deg", Field::Deg),
        ("codim", Field::Codim),
        ("c", Field::Codim),
        ("alpha", Field::Alpha),
        ("d", Field::D),
        ("maxdeg", Field::MaxdegRevlex),
        ("maxdeg_revlex", Field::MaxdegRevlex),
        ("maxdeg_lex", Field::MaxdegLex),
        ("maxdeg_JA", Field::MaxdegJa),
    ];

    fn name(self) -> &'static str {
        Self::NAMES.iter().rev().find(|(_, f)| *f == self).map(|(n, _)| *n).unwrap()
    }

    fn value(self, rep: &BoundReport) -> Option<i64> {
        Some(match self {
            Field::R => rep.r as i64,
            Field::Deg => rep.deg as i64,
            Field::Codim => rep.c as i64,
            Field::Alpha => rep.alpha as i64,
            Field::D => rep.d as i64,
            Field::MaxdegRevlex => i64::from(rep.maxdeg_revlex),
            Field::MaxdegLex => i64::from(rep.maxdeg_lex?),
            Field::MaxdegJa => i64::from(rep.maxdeg_ja?),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    Le,
    Lt,
    Eq,
    Ne,
    Ge,
    Gt,
}

impl Op {
    // two-character operators first so "<=" is not read as "<"
    const TOKENS: [(&'static str, Op); 6] = [
        ("<=", Op::Le),
        (">=", Op::Ge),
        ("==", Op::Eq),
        ("!=", Op::Ne),
        ("<", Op::Lt),
        (">", Op::Gt),
    ];

    fn apply(self, a: i64, b: i64) -> bool {
        match self {
            Op::Le => a <= b,
            Op::Lt => a < b,
            Op::Eq => a == b,
            Op::Ne => a != b,
            Op::Ge => a >= b,
            Op::Gt => a > b,
        }
    }

    fn token(self) -> &'static str {
        Self::TOKENS.iter().find(|(_, o)| *o == self).unwrap().0
    }
}

/// Named assertions over a [`BoundReport`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Named {
    /// `maxdeg_revlex <= deg - c + 1`.
    Conjecture,
    /// `maxdeg_revlex <= max{r+1, 2r-1}`.
    ReductionDegree,
    /// `max{r+1, 2r-1} <= max{2, 2(deg-c)-1}`.
    ReductionVsDegree,
    /// `maxdeg_revlex <= max{c, alpha, c(alpha-1)-1}`.
    CodimDegree,
    /// `maxdeg_JA <= d(alpha-1) + min{2r, c(alpha-1)}`.
    EliminationDegree,
    /// `r` is at most the full-face bound, when a full face exists.
    FullFace,
    /// Every computed maxdeg is at most `c * deg`.
    Sturmfels,
    /// Normal implies `maxdeg_revlex <= d`.
    Normal,
    /// `r <= deg - c`.
    Reduction,
}

impl Named {
    const NAMES: [(&'static str, Named); 9] = [
        ("conjecture", Named::Conjecture),
        ("thmA1", Named::ReductionDegree),
        ("thmA1-deg", Named::ReductionVsDegree),
        ("thmA4", Named::CodimDegree),
        ("propA6", Named::EliminationDegree),
        ("lemmaA2", Named::FullFace),
        ("sturmfels", Named::Sturmfels),
        ("normal", Named::Normal),
        ("reduction", Named::Reduction),
    ];

    fn holds(self, rep: &BoundReport) -> Option<bool> {
        let m = u64::from(rep.maxdeg_revlex);
        Some(match self {
            Named::Conjecture => rep.conjecture_holds,
            Named::ReductionDegree => m <= rep.bound_reduction,
            Named::ReductionVsDegree => rep.bound_reduction as i64 <= rep.bound_reduction_deg,
            Named::CodimDegree => m <= rep.bound_codim,
            Named::EliminationDegree => u64::from(rep.maxdeg_ja?) <= rep.bound_elimination,
            Named::FullFace => rep.full_face_bound.is_none_or(|b| rep.r <= b),
            Named::Sturmfels => {
                m <= rep.bound_sturmfels
                    && rep.maxdeg_lex.is_none_or(|l| u64::from(l) <= rep.bound_sturmfels)
            }
            Named::Normal => !rep.is_normal? || m <= rep.d as u64,
            Named::Reduction => (rep.r as i64) <= rep.deg as i64 - rep.c as i64,
        })
    }
}

/// One sweep assertion, parsed from text such as `"r <= 8"` or `"thmA4"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    Compare { field: Field, op: Op, value: i64 },
    Named(Named),
}

impl Check {
    /// `None` when the report lacks a field the check needs.
    pub fn evaluate(&self, rep: &BoundReport) -> Option<bool> {
        match *self {
            Check::Compare { field, op, value } => Some(op.apply(field.value(rep)?, value)),
            Check::Named(n) => n.holds(rep),
        }
    }

    pub fn needs_ja(&self) -> bool {
        matches!(
            self,
            Check::Named(Named::EliminationDegree)
                | Check::Compare {
                    field: Field::MaxdegJa,
                    ..
                }
        )
    }

    pub fn needs_lex(&self) -> bool {
        matches!(
            self,
            Check::Compare {
                field: Field::MaxdegLex,
                ..
            }
        )
    }

    pub fn needs_normality(&self) -> bool {
        matches!(self, Check::Named(Named::Normal))
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some((_, n)) = Named::NAMES.iter().find(|(name, _)| *name == s) {
            return Ok(Check::Named(*n));
        }
        for (tok, op) in Op::TOKENS {
            if let Some((lhs, rhs)) = s.split_once(tok) {
                let lhs = lhs.trim();
                let field = Field::NAMES
                    .iter()
                    .find(|(n, _)| *n == lhs)
                    .map(|(_, f)| *f)
                    .ok_or_else(|| Error::InvalidInput(format!("unknown field {lhs:?} in check {s:?}")))?;
                let value = rhs
                    .trim()
                    .parse::<i64>()
                    .map_err(|_| Error::InvalidInput(format!("check {s:?} needs an integer right-hand side")))?;
                return Ok(Check::Compare { field, op, value });
            }
        }
        let known: Vec<&str> = Named::NAMES.iter().map(|(n, _)| *n).collect();
        Err(Error::InvalidInput(format!(
            "cannot parse check {s:?}; expected FIELD OP INT or one of {}",
            known.join(", ")
        )))
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Check::Compare { field, op, value } => write!(f, "{} {} {value}", field.name(), op.token()),
            Check::Named(n) => {
                let name = Named::NAMES.iter().find(|(_, m)| m == n).unwrap().0;
                f.write_str(name)
            }
        }
    }
}

impl Serialize for Check {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub check: Check,
    /// `None` when the check could not be evaluated.
    pub passed: Option<bool>,
}

impl CheckOutcome {
    pub fn is_pass(&self) -> bool {
        self.passed == Some(true)
    }
}

pub fn evaluate_all(checks: &[Check], rep: &BoundReport) -> Vec<CheckOutcome> {
    checks
        .iter()
        .map(|c| CheckOutcome {
            check: *c,
            passed: c.evaluate(rep),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        for s in ["r <= 8", "r == 2", "maxdeg_JA < 10", "deg >= 3", "conjecture", "thmA4", "propA6"] {
            let c: Check = s.parse().unwrap();
            assert_eq!(c.to_string(), s);
        }
        assert_eq!("r<=3".parse::<Check>().unwrap().to_string(), "r <= 3");
        assert_eq!("maxdeg <= 3".parse::<Check>().unwrap().to_string(), "maxdeg_revlex <= 3");
    }

    #[test]
    fn rejects_garbage() {
        assert!("r <=".parse::<Check>().is_err());
        assert!("q == 2".parse::<Check>().is_err());
        assert!("thmZ".parse::<Check>().is_err());
    }

    #[test]
    fn ja_requirement() {
        assert!("propA6".parse::<Check>().unwrap().needs_ja());
        assert!(!"thmA1".parse::<Check>().unwrap().needs_ja());
    }
}
