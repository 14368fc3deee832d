use serde::{Deserialize, Serialize};

use super::{elimination_degree_bound, run_pipeline, truncation_cap, vanishes, PipelineOptions};
use crate::error::{Error, Result};
use crate::gb::{hilbert_data, initial_ideal, BlockOrder, GroebnerBasis, PairStrategy};
use crate::lattice::{ConfigWarning, Configuration};
use crate::semigroup::{full_face_bound, Semigroup};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ReportOptions {
    pub compute_lex: bool,
    /// Keep and measure the reduced basis of `J_A`.
    pub compute_ja_maxdeg: bool,
    pub compute_normality: bool,
    /// Rerun the elimination with the weighted truncation cap and require
    /// an identical result.
    pub check_truncation: bool,
    pub strategy: PairStrategy,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            compute_lex: false,
            compute_ja_maxdeg: false,
            compute_normality: true,
            check_truncation: false,
            strategy: PairStrategy::Normal,
        }
    }
}

/// Every invariant and bound computed for one configuration.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub configuration: String,
    pub alpha: u64,
    pub d: usize,
    #[serde(rename = "codim")]
    pub c: usize,
    pub deg: u64,
    pub r: u64,
    pub maxdeg_revlex: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub maxdeg_lex: Option<u32>,
    #[serde(rename = "maxdeg_JA", skip_serializing_if = "Option::is_none", default)]
    pub maxdeg_ja: Option<u32>,
    pub revlex_basis_size: usize,
    #[serde(rename = "bound_thmA1")]
    pub bound_reduction: u64,
    #[serde(rename = "bound_thmA1_deg")]
    pub bound_reduction_deg: i64,
    #[serde(rename = "bound_thmA4")]
    pub bound_codim: u64,
    pub bound_sturmfels: u64,
    #[serde(rename = "bound_propA6")]
    pub bound_elimination: u64,
    #[serde(rename = "bound_EG")]
    pub bound_eg: i64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub full_face_bound: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub is_normal: Option<bool>,
    pub hilbert_dimension: usize,
    pub hilbert_multiplicity: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub truncation_agrees: Option<bool>,
    pub conjecture_holds: bool,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub warnings: Vec<ConfigWarning>,
}

impl BoundReport {
    /// A structured record for human review when the revlex degree exceeds
    /// `deg - codim + 1`.
    pub fn counterexample_candidate(&self) -> Option<String> {
        (!self.conjecture_holds).then(|| {
            format!(
                "counterexample candidate: {} has revlex degree {} > deg - codim + 1 = {}",
                self.configuration, self.maxdeg_revlex, self.bound_eg
            )
        })
    }
}

fn require(bound: &'static str, computed: u64, limit: u64, cfg: &Configuration) -> Result<()> {
    if computed > limit {
        return Err(Error::BoundViolation {
            bound,
            computed,
            limit,
            config: cfg.to_string(),
        });
    }
    Ok(())
}

fn check_vanishing(cfg: &Configuration, g: &GroebnerBasis) -> Result<()> {
    for b in g.elements() {
        if !vanishes(cfg, b)? {
            return Err(Error::InvariantViolation(format!(
                "basis element {:?} - {:?} is not in the toric ideal of {cfg}",
                b.lead(),
                b.tail()
            )));
        }
    }
    Ok(())
}

/// Computes the full report. Violations of proved bounds come back as
/// [`Error::BoundViolation`]; a revlex degree above the Eisenbud–Goto value
/// is a finding and only clears `conjecture_holds`.
pub fn bound_report(cfg: &Configuration, opts: &ReportOptions) -> Result<BoundReport> {
    let alpha = cfg.alpha();
    let d = cfg.dim();
    let c = cfg.codimension();
    let deg = cfg.degree()?;
    let bound_eg = cfg.eisenbud_goto_bound()?;

    let mut sg = Semigroup::new(cfg);
    let r = sg.reduction_number()? as u64;
    let is_normal = if opts.compute_normality {
        Some(sg.is_normal()?)
    } else {
        None
    };
    let face_bound = full_face_bound(cfg)?;
    drop(sg);

    let c64 = c as u64;
    let bound_reduction = (r + 1).max((2 * r).saturating_sub(1));
    let deg_minus_c = deg as i64 - c as i64;
    let bound_reduction_deg = 2.max(2 * deg_minus_c - 1);
    let bound_codim = c64.max(alpha).max((c64 * (alpha - 1)).saturating_sub(1));
    let bound_sturmfels = c64.checked_mul(deg).ok_or(Error::Overflow("c * deg"))?;
    let bound_elimination = elimination_degree_bound(cfg, r);

    if bound_reduction as i64 > bound_reduction_deg {
        return Err(Error::BoundViolation {
            bound: "max{r+1, 2r-1} <= max{2, 2(deg-c)-1}",
            computed: bound_reduction,
            limit: bound_reduction_deg.max(0) as u64,
            config: cfg.to_string(),
        });
    }
    if let Some(fb) = face_bound {
        require("full-face bound on r", r, fb, cfg)?;
    }

    let keep_ja = opts.compute_ja_maxdeg || opts.check_truncation;
    let revlex = run_pipeline(
        cfg,
        &PipelineOptions {
            xy_order: BlockOrder::Grevlex,
            strategy: opts.strategy,
            truncation: None,
            keep_elimination_basis: keep_ja,
        },
    )?;
    check_vanishing(cfg, &revlex.basis)?;
    let maxdeg_revlex = revlex.basis.max_degree();
    let m = u64::from(maxdeg_revlex);
    require("max{r+1, 2r-1}", m, bound_reduction, cfg)?;
    require("max{c, alpha, c(alpha-1)-1}", m, bound_codim, cfg)?;
    require("c * deg", m, bound_sturmfels, cfg)?;
    if is_normal == Some(true) {
        require("normal => degree <= d", m, d as u64, cfg)?;
    }

    let hilbert = hilbert_data(&initial_ideal(&revlex.basis), c + d)?;
    if hilbert.dimension != d || hilbert.multiplicity != deg {
        return Err(Error::InvariantViolation(format!(
            "Hilbert series of in(I_A) gives (dim {}, mult {}) but lattice index gives (dim {d}, deg {deg}) for {cfg}",
            hilbert.dimension, hilbert.multiplicity
        )));
    }

    let maxdeg_ja = match &revlex.elimination_basis {
        Some(g) if opts.compute_ja_maxdeg => {
            let m = g.max_degree();
            require("d(alpha-1) + min{2r, c(alpha-1)}", u64::from(m), bound_elimination, cfg)?;
            Some(m)
        }
        _ => None,
    };

    let truncation_agrees = if opts.check_truncation {
        let cut = run_pipeline(
            cfg,
            &PipelineOptions {
                xy_order: BlockOrder::Grevlex,
                strategy: opts.strategy,
                truncation: Some(truncation_cap(cfg, r)),
                keep_elimination_basis: true,
            },
        )?;
        let agrees = cut.basis == revlex.basis && cut.elimination_basis == revlex.elimination_basis;
        if !agrees {
            return Err(Error::InvariantViolation(format!(
                "truncated elimination at weight {} lost basis elements for {cfg}",
                truncation_cap(cfg, r)
            )));
        }
        Some(agrees)
    } else {
        None
    };

    let maxdeg_lex = if opts.compute_lex {
        let lex = run_pipeline(
            cfg,
            &PipelineOptions {
                xy_order: BlockOrder::Lex,
                strategy: opts.strategy,
                ..Default::default()
            },
        )?;
        check_vanishing(cfg, &lex.basis)?;
        let m = lex.basis.max_degree();
        require("c * deg (lex)", u64::from(m), bound_sturmfels, cfg)?;
        Some(m)
    } else {
        None
    };

    Ok(BoundReport {
        configuration: cfg.to_string(),
        alpha,
        d,
        c,
        deg,
        r,
        maxdeg_revlex,
        maxdeg_lex,
        maxdeg_ja,
        revlex_basis_size: revlex.basis.len(),
        bound_reduction,
        bound_reduction_deg,
        bound_codim,
        bound_sturmfels,
        bound_elimination,
        bound_eg,
        full_face_bound: face_bound,
        is_normal,
        hilbert_dimension: hilbert.dimension,
        hilbert_multiplicity: hilbert.multiplicity,
        truncation_agrees,
        conjecture_holds: i64::from(maxdeg_revlex) <= bound_eg,
        warnings: cfg.warnings().to_vec(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_point_report() {
        let cfg = Configuration::new(4, 2, &[vec![3, 1], vec![1, 3]]).unwrap();
        let opts = ReportOptions {
            compute_lex: true,
            compute_ja_maxdeg: true,
            check_truncation: true,
            ..Default::default()
        };
        let rep = bound_report(&cfg, &opts).unwrap();
        assert_eq!(rep.r, 2);
        assert_eq!(rep.deg, 4);
        assert_eq!(rep.c, 2);
        assert_eq!(rep.maxdeg_revlex, 3);
        assert_eq!(rep.maxdeg_lex, Some(4));
        assert_eq!(rep.bound_reduction, 3);
        assert_eq!(rep.bound_codim, 5);
        assert_eq!(rep.bound_eg, 3);
        assert_eq!(rep.is_normal, Some(false));
        assert_eq!(rep.truncation_agrees, Some(true));
        assert!(rep.conjecture_holds);
        assert!(rep.counterexample_candidate().is_none());
    }

    #[test]
    fn full_m23_report() {
        let cfg = Configuration::full(2, 3).unwrap();
        let rep = bound_report(&cfg, &ReportOptions::default()).unwrap();
        assert_eq!(rep.bound_codim, 3);
        assert_eq!(rep.is_normal, Some(true));
        assert!(rep.maxdeg_revlex <= 3);
    }
}
