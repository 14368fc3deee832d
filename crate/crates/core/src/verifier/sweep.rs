use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;
use std::str::FromStr;
use std::time::{Duration, Instant, SystemTime, UNIX_EPOCH};

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use super::canonical::{canonical_points, facet_incidence, permutations};
use super::checks::{evaluate_all, Check, CheckOutcome};
use crate::error::{Error, Result};
use crate::lattice::{binomial_coefficient, enumerate_simplex_points, Configuration, LatticeVector};
use crate::semigroup::Semigroup;
use crate::toric::{bound_report, BoundReport, ReportOptions};

pub const DEFAULT_CAP: u128 = 1_000_000;

/// Filters on the set of deleted points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Predicate {
    None,
    /// Every edge of the simplex loses exactly one interior point.
    EdgeOneEach,
    /// Every facet `x_i = 0` contains at least `m` deleted points.
    FacetMin(usize),
    MustDelete(LatticeVector),
    MustKeep(LatticeVector),
    /// The edge between vertices `i` and `j` (zero-based) keeps all its points.
    EdgeFull(usize, usize),
}

fn support(p: &LatticeVector) -> Vec<usize> {
    (0..p.dim()).filter(|&i| p.coords()[i] > 0).collect()
}

impl Predicate {
    pub fn accepts(&self, d: usize, deleted: &[LatticeVector]) -> bool {
        match self {
            Predicate::None => true,
            Predicate::EdgeOneEach => (0..d).tuple_combinations().all(|(i, j)| {
                deleted.iter().filter(|p| support(p) == [i, j]).count() == 1
            }),
            Predicate::FacetMin(m) => {
                (0..d).all(|i| deleted.iter().filter(|p| p.coords()[i] == 0).count() >= *m)
            }
            Predicate::MustDelete(v) => deleted.contains(v),
            Predicate::MustKeep(v) => !deleted.contains(v),
            Predicate::EdgeFull(i, j) => !deleted.iter().any(|p| support(p) == [*i.min(j), *i.max(j)]),
        }
    }

    /// Whether the predicate is invariant under coordinate permutations.
    pub fn is_symmetric(&self) -> bool {
        matches!(self, Predicate::None | Predicate::EdgeOneEach | Predicate::FacetMin(_))
    }

    fn validate(&self, alpha: u64, d: usize) -> Result<()> {
        let point_ok = |v: &LatticeVector| {
            v.dim() == d && v.sum() == alpha && !v.coords().contains(&alpha)
        };
        match self {
            Predicate::MustDelete(v) | Predicate::MustKeep(v) if !point_ok(v) => Err(Error::InvalidInput(
                format!("{v} is not a non-corner point of M_({alpha},{d})"),
            )),
            Predicate::EdgeFull(i, j) if *i >= d || *j >= d || i == j => Err(Error::InvalidInput(format!(
                "edge-full needs two distinct vertices in 1..={d}"
            ))),
            _ => Ok(()),
        }
    }
}

fn parse_ints(args: &str) -> Result<Vec<u64>> {
    args.split(',')
        .map(|x| {
            x.trim()
                .parse::<u64>()
                .map_err(|_| Error::InvalidInput(format!("expected non-negative integers, got {args:?}")))
        })
        .collect()
}

impl FromStr for Predicate {
    type Err = Error;

    /// Accepts `NAME`, `NAME(ARGS)` and `NAME=ARGS`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, args) = if let Some((n, rest)) = s.split_once('(') {
            let args = rest
                .strip_suffix(')')
                .ok_or_else(|| Error::InvalidInput(format!("unbalanced parentheses in {s:?}")))?;
            (n, Some(args))
        } else if let Some((n, a)) = s.split_once('=') {
            (n, Some(a))
        } else {
            (s, None)
        };
        let need = || args.ok_or_else(|| Error::InvalidInput(format!("predicate {name} needs arguments")));
        match name {
            "none" => Ok(Predicate::None),
            "edge-one-each" => Ok(Predicate::EdgeOneEach),
            "facet-min" => {
                let v = parse_ints(need()?)?;
                match v[..] {
                    [m] => Ok(Predicate::FacetMin(m as usize)),
                    _ => Err(Error::InvalidInput("facet-min takes one integer".into())),
                }
            }
            "must-delete" => Ok(Predicate::MustDelete(LatticeVector::new(parse_ints(need()?)?))),
            "must-keep" => Ok(Predicate::MustKeep(LatticeVector::new(parse_ints(need()?)?))),
            "edge-full" => {
                let v = parse_ints(need()?)?;
                match v[..] {
                    [i, j] if i >= 1 && j >= 1 => Ok(Predicate::EdgeFull(i as usize - 1, j as usize - 1)),
                    _ => Err(Error::InvalidInput("edge-full takes two vertex numbers, e.g. edge-full(1,2)".into())),
                }
            }
            other => Err(Error::InvalidInput(format!(
                "unknown predicate {other:?}; expected none, edge-one-each, facet-min(m), must-delete(v), must-keep(v) or edge-full(i,j)"
            ))),
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &LatticeVector| v.coords().iter().join(",");
        match self {
            Predicate::None => write!(f, "none"),
            Predicate::EdgeOneEach => write!(f, "edge-one-each"),
            Predicate::FacetMin(m) => write!(f, "facet-min({m})"),
            Predicate::MustDelete(v) => write!(f, "must-delete({})", join(v)),
            Predicate::MustKeep(v) => write!(f, "must-keep({})", join(v)),
            Predicate::EdgeFull(i, j) => write!(f, "edge-full({},{})", i + 1, j + 1),
        }
    }
}

impl Serialize for Predicate {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `M_{alpha,d}` minus `delete` non-corner points, filtered by every
/// predicate and checked against every check.
#[derive(Clone, Debug, Serialize)]
pub struct SweepSpec {
    pub alpha: u64,
    pub d: usize,
    pub delete: usize,
    pub predicates: Vec<Predicate>,
    pub checks: Vec<Check>,
    pub symmetry: bool,
    #[serde(skip)]
    pub report: ReportOptions,
}

impl SweepSpec {
    pub fn new(alpha: u64, d: usize, delete: usize) -> Self {
        SweepSpec {
            alpha,
            d,
            delete,
            predicates: Vec::new(),
            checks: Vec::new(),
            symmetry: true,
            report: ReportOptions::default(),
        }
    }

    pub fn predicate(mut self, p: Predicate) -> Self {
        self.predicates.push(p);
        self
    }

    pub fn check(mut self, c: Check) -> Self {
        self.checks.push(c);
        self
    }

    pub fn without_symmetry(mut self) -> Self {
        self.symmetry = false;
        self
    }

    /// Report options widened to cover what the checks read.
    fn effective_report_options(&self) -> ReportOptions {
        let mut o = self.report.clone();
        o.compute_ja_maxdeg |= self.checks.iter().any(Check::needs_ja);
        o.compute_lex |= self.checks.iter().any(Check::needs_lex);
        o.compute_normality |= self.checks.iter().any(Check::needs_normality);
        o
    }
}

/// One symmetry class (or one configuration, without symmetry reduction).
#[derive(Clone, Debug)]
pub struct SweepClass {
    pub representative: Configuration,
    pub deleted: Vec<LatticeVector>,
    /// Predicate-satisfying deletion sets in this class.
    pub members: Vec<Vec<LatticeVector>>,
}

#[derive(Clone, Debug)]
pub struct Enumeration {
    pub raw_count: u64,
    pub matched: u64,
    pub classes: Vec<SweepClass>,
}

/// Lists the classes a sweep will evaluate, without computing anything.
pub fn enumerate(spec: &SweepSpec, cap: u128) -> Result<Enumeration> {
    let (alpha, d) = (spec.alpha, spec.d);
    if alpha < 2 || d < 2 {
        return Err(Error::InvalidInput(format!("sweep needs alpha >= 2 and d >= 2, got alpha={alpha} d={d}")));
    }
    for p in &spec.predicates {
        p.validate(alpha, d)?;
    }
    let pool: Vec<LatticeVector> = enumerate_simplex_points(alpha, d)
        .into_iter()
        .filter(|p| !p.coords().contains(&alpha))
        .collect();
    if spec.delete >= pool.len() {
        return Err(Error::InvalidInput(format!(
            "cannot delete {} of the {} non-corner points of M_({alpha},{d}); at least one must remain",
            spec.delete,
            pool.len()
        )));
    }
    let raw = binomial_coefficient(pool.len() as u64, spec.delete as u64).map_or(u128::MAX, u128::from);
    if raw > cap {
        return Err(Error::CapExceeded { count: raw, cap });
    }

    let perms = permutations(d);
    let mut classes: BTreeMap<Vec<LatticeVector>, Vec<Vec<LatticeVector>>> = BTreeMap::new();
    let mut matched = 0u64;
    for idx in (0..pool.len()).combinations(spec.delete) {
        let deleted: Vec<LatticeVector> = idx.iter().map(|&i| pool[i].clone()).collect();
        if !spec.predicates.iter().all(|p| p.accepts(d, &deleted)) {
            continue;
        }
        matched += 1;
        let kept: Vec<LatticeVector> = pool.iter().filter(|p| !deleted.contains(p)).cloned().collect();
        let key = if spec.symmetry {
            canonical_points(&kept, &perms)
        } else {
            kept
        };
        classes.entry(key).or_default().push(deleted);
    }

    let classes = classes
        .into_iter()
        .map(|(kept, members)| {
            let representative = Configuration::from_points(alpha, d, kept)?;
            let deleted = representative.deleted_points();
            Ok(SweepClass {
                representative,
                deleted,
                members,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Enumeration {
        raw_count: raw as u64,
        matched,
        classes,
    })
}

/// One line of the JSONL result stream.
#[derive(Clone, Debug, Serialize)]
pub struct ResultRecord {
    pub canonical: Vec<LatticeVector>,
    pub deleted: Vec<LatticeVector>,
    pub class_size: usize,
    pub incidence: Vec<Vec<usize>>,
    #[serde(flatten)]
    pub report: BoundReport,
    pub checks: Vec<CheckOutcome>,
    /// Kept out of the stream so that repeated sweeps are byte-identical.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl ResultRecord {
    pub fn all_checks_pass(&self) -> bool {
        self.checks.iter().all(CheckOutcome::is_pass)
    }
}

#[derive(Clone, Debug)]
pub struct SweepOutcome {
    pub raw_count: u64,
    pub matched: u64,
    pub records: Vec<ResultRecord>,
    pub elapsed: Duration,
}

impl SweepOutcome {
    pub fn all_checks_pass(&self) -> bool {
        self.records.iter().all(ResultRecord::all_checks_pass)
    }

    /// Distinct facet-incidence patterns among the deleted sets.
    pub fn incidence_situations(&self) -> Vec<Vec<Vec<usize>>> {
        let mut v: Vec<_> = self.records.iter().map(|r| r.incidence.clone()).collect();
        v.sort();
        v.dedup();
        v
    }
}

/// Invariants that must agree across a symmetry class.
fn spot_check_class(class: &SweepClass, rep: &BoundReport, alpha: u64, d: usize) -> Result<()> {
    for deleted in class.members.iter().skip(1).step_by((class.members.len() / 3).max(1)).take(3) {
        let cfg = Configuration::with_deleted(alpha, d, deleted)?;
        let r = Semigroup::new(&cfg).reduction_number()? as u64;
        let deg = cfg.degree()?;
        if r != rep.r || deg != rep.deg || cfg.codimension() != rep.c {
            return Err(Error::InvariantViolation(format!(
                "class member {cfg} has (r, deg, c) = ({r}, {deg}, {}) but representative has ({}, {}, {})",
                cfg.codimension(),
                rep.r,
                rep.deg,
                rep.c
            )));
        }
    }
    Ok(())
}

fn evaluate_class(spec: &SweepSpec, opts: &ReportOptions, perms: &[Vec<usize>], class: &SweepClass) -> Result<ResultRecord> {
    let t = Instant::now();
    let report = bound_report(&class.representative, opts)?;
    if cfg!(debug_assertions) && spec.symmetry {
        spot_check_class(class, &report, spec.alpha, spec.d)?;
    }
    let checks = evaluate_all(&spec.checks, &report);
    Ok(ResultRecord {
        canonical: class.representative.a_points().to_vec(),
        deleted: class.deleted.clone(),
        class_size: class.members.len(),
        incidence: facet_incidence(&class.deleted, perms),
        report,
        checks,
        elapsed: t.elapsed(),
    })
}

/// Runs the sweep on `threads` workers (all cores when `None`). Records come
/// back in canonical order regardless of completion order.
pub fn run_sweep(spec: &SweepSpec, cap: u128, threads: Option<usize>) -> Result<SweepOutcome> {
    let started = Instant::now();
    let en = enumerate(spec, cap)?;
    let opts = spec.effective_report_options();
    let perms = permutations(spec.d);
    let work = || -> Result<Vec<ResultRecord>> {
        en.classes
            .par_iter()
            .map(|c| evaluate_class(spec, &opts, &perms, c))
            .collect()
    };
    let records = match threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::InvalidInput(format!("thread pool: {e}")))?
            .install(work)?,
        None => work()?,
    };
    Ok(SweepOutcome {
        raw_count: en.raw_count,
        matched: en.matched,
        records,
        elapsed: started.elapsed(),
    })
}

#[derive(Serialize)]
struct Manifest<'a> {
    spec: &'a SweepSpec,
    engine: &'static str,
    engine_version: &'static str,
    started_unix: u64,
    raw_count: u64,
    matched: u64,
    records: usize,
}

/// Writes the manifest header line, then one record per line.
pub fn write_jsonl<W: Write>(out: &mut W, spec: &SweepSpec, outcome: &SweepOutcome) -> Result<()> {
    let started = SystemTime::now()
        .checked_sub(outcome.elapsed)
        .unwrap_or(UNIX_EPOCH)
        .duration_since(UNIX_EPOCH)
        .map_or(0, |d| d.as_secs());
    let manifest = Manifest {
        spec,
        engine: env!("CARGO_PKG_NAME"),
        engine_version: env!("CARGO_PKG_VERSION"),
        started_unix: started,
        raw_count: outcome.raw_count,
        matched: outcome.matched,
        records: outcome.records.len(),
    };
    serde_json::to_writer(&mut *out, &serde_json::json!({ "manifest": manifest }))?;
    writeln!(out)?;
    for r in &outcome.records {
        serde_json::to_writer(&mut *out, r)?;
        writeln!(out)?;
    }
    Ok(())
}

/// `TORICGB_CAP`, defaulting to [`DEFAULT_CAP`].
pub fn cap_from_env() -> Result<u128> {
    match std::env::var("TORICGB_CAP") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::InvalidInput(format!("TORICGB_CAP must be a positive integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_CAP),
    }
}

/// `TORICGB_THREADS`, or `None` for the rayon default.
pub fn threads_from_env() -> Result<Option<usize>> {
    match std::env::var("TORICGB_THREADS") {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(Error::InvalidInput(format!("TORICGB_THREADS must be a positive integer, got {v:?}"))),
        },
        Err(_) => Ok(None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lv(v: &[u64]) -> LatticeVector {
        LatticeVector::new(v.to_vec())
    }

    #[test]
    fn predicate_round_trip() {
        for s in ["none", "edge-one-each", "facet-min(2)", "must-delete(2,1,0)", "must-keep(1,1,1)", "edge-full(1,2)"] {
            assert_eq!(s.parse::<Predicate>().unwrap().to_string(), s);
        }
        assert_eq!("facet-min=2".parse::<Predicate>().unwrap(), Predicate::FacetMin(2));
        assert!("facet-min".parse::<Predicate>().is_err());
        assert!("edge-full(0,1)".parse::<Predicate>().is_err());
        assert!("sideways".parse::<Predicate>().is_err());
    }

    #[test]
    fn one_deletion_from_m33() {
        let en = enumerate(&SweepSpec::new(3, 3, 1), DEFAULT_CAP).unwrap();
        assert_eq!(en.raw_count, 7);
        assert_eq!(en.classes.len(), 2);
        let sizes: Vec<usize> = en.classes.iter().map(|c| c.members.len()).sorted().collect();
        assert_eq!(sizes, [1, 6]);
    }

    #[test]
    fn no_symmetry_keeps_everything() {
        let en = enumerate(&SweepSpec::new(3, 3, 1).without_symmetry(), DEFAULT_CAP).unwrap();
        assert_eq!(en.classes.len(), 7);
    }

    #[test]
    fn edge_one_each_with_fixed_point() {
        let spec = SweepSpec::new(3, 3, 3)
            .predicate(Predicate::EdgeOneEach)
            .predicate(Predicate::MustKeep(lv(&[2, 1, 0])))
            .without_symmetry();
        let en = enumerate(&spec, DEFAULT_CAP).unwrap();
        assert_eq!(en.classes.len(), 4);
        for c in &en.classes {
            assert!(c.representative.a_points().contains(&lv(&[1, 1, 1])));
        }
    }

    #[test]
    fn cap_is_enforced() {
        let e = enumerate(&SweepSpec::new(4, 4, 6), 100).unwrap_err();
        assert!(matches!(e, Error::CapExceeded { .. }));
        assert_eq!(e.exit_code(), 2);
    }

    #[test]
    fn cannot_delete_everything() {
        assert!(enumerate(&SweepSpec::new(2, 2, 1), DEFAULT_CAP).is_err());
    }
}
