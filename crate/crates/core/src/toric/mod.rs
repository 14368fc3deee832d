//! The elimination route from a configuration to the reduced Gröbner basis
//! of its toric ideal:
//!
//! 1. form `J_A = (x_i - t^{a_i}, y_j - t_j^alpha)` in `K[t, x, y]`;
//! 2. run Buchberger under a block order in which the `t` block dominates;
//! 3. keep the elements free of `t` and re-reduce.
//!
//! With weights `wt(t_j) = 1` and `wt(x_i) = wt(y_j) = alpha` every
//! generator of `J_A` is homogeneous, which is what makes truncation sound.

mod report;

pub use report::{bound_report, BoundReport, ReportOptions};

use crate::error::{Error, Result};
use crate::gb::{
    buchberger_with_stats, reduce_basis, Binomial, BlockOrder, BuchbergerOptions, BuchbergerStats,
    GroebnerBasis, Monomial, PairStrategy, TermOrder, VariableUniverse,
};
use crate::lattice::{Configuration, LatticeVector};

/// The generators of `J_A` together with the ring they live in.
#[derive(Clone, Debug)]
pub struct EliminationSystem {
    pub universe: VariableUniverse,
    pub order: TermOrder,
    pub weights: Vec<u32>,
    pub generators: Vec<Binomial>,
}

/// The term order on `K[x, y]` induced by a block order.
pub fn restricted_order(block: BlockOrder) -> TermOrder {
    match block {
        BlockOrder::Grevlex => TermOrder::Grevlex,
        BlockOrder::Lex => TermOrder::Lex,
    }
}

pub fn build_elimination_system(cfg: &Configuration, xy_order: BlockOrder) -> Result<EliminationSystem> {
    let d = cfg.dim();
    let c = cfg.codimension();
    let n = d + c + d;
    let order = TermOrder::Elimination {
        split: d,
        rest: xy_order,
    };
    let alpha = u16::try_from(cfg.alpha()).map_err(|_| Error::Overflow("alpha as exponent"))?;
    let alpha_w = u32::from(alpha);
    let weights: Vec<u32> = (0..n).map(|i| if i < d { 1 } else { alpha_w }).collect();

    let mut generators = Vec::with_capacity(c + d);
    for (i, a) in cfg.a_points().iter().enumerate() {
        let mut t = vec![0u16; n];
        for (j, &aj) in a.coords().iter().enumerate() {
            t[j] = u16::try_from(aj).map_err(|_| Error::Overflow("exponent"))?;
        }
        let x = Monomial::var(n, d + i, 1);
        generators.push(Binomial::new(x, Monomial::from_exponents(t), &order).expect("distinct terms"));
    }
    for j in 0..d {
        let y = Monomial::var(n, d + c + j, 1);
        let t = Monomial::var(n, j, alpha);
        generators.push(Binomial::new(y, t, &order).expect("distinct terms"));
    }
    Ok(EliminationSystem {
        universe: VariableUniverse::elimination(c, d),
        order,
        weights,
        generators,
    })
}

#[derive(Clone, Debug)]
pub struct PipelineOptions {
    pub xy_order: BlockOrder,
    pub strategy: PairStrategy,
    /// Weighted-degree cap for the run on `J_A`.
    pub truncation: Option<u64>,
    /// Also return the reduced basis of `J_A`.
    pub keep_elimination_basis: bool,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions {
            xy_order: BlockOrder::Grevlex,
            strategy: PairStrategy::Normal,
            truncation: None,
            keep_elimination_basis: false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ToricComputation {
    /// Reduced basis of `I_A` over `x_1..x_c, y_1..y_d`.
    pub basis: GroebnerBasis,
    /// Reduced basis of `J_A`, when requested.
    pub elimination_basis: Option<GroebnerBasis>,
    pub stats: BuchbergerStats,
}

/// Reduced Gröbner basis of `I_A` under `xy_order`.
pub fn toric_groebner(cfg: &Configuration, xy_order: BlockOrder) -> Result<GroebnerBasis> {
    let opts = PipelineOptions {
        xy_order,
        ..Default::default()
    };
    Ok(run_pipeline(cfg, &opts)?.basis)
}

pub fn run_pipeline(cfg: &Configuration, opts: &PipelineOptions) -> Result<ToricComputation> {
    let sys = build_elimination_system(cfg, opts.xy_order)?;
    let bopts = BuchbergerOptions {
        strategy: opts.strategy,
        weights: Some(sys.weights.clone()),
        truncation: opts.truncation,
    };
    let (g_prime, stats) = buchberger_with_stats(&sys.generators, &sys.order, &bopts)?;

    let d = cfg.dim();
    let xy = restricted_order(opts.xy_order);
    let mut eliminated = Vec::new();
    for b in g_prime.elements() {
        if b.lead().touches_prefix(d) {
            continue;
        }
        if b.tail().touches_prefix(d) {
            return Err(Error::InvariantViolation(
                "t-free lead with a t-dependent tail under an elimination order".into(),
            ));
        }
        let lead = b.lead().without_prefix(d);
        let tail = b.tail().without_prefix(d);
        let e = Binomial::new(lead, tail, &xy)
            .ok_or_else(|| Error::InvariantViolation("eliminated element collapsed to zero".into()))?;
        eliminated.push(e);
    }
    let basis = reduce_basis(&GroebnerBasis::new(xy, eliminated))?;
    let elimination_basis = if opts.keep_elimination_basis {
        Some(reduce_basis(&g_prime)?)
    } else {
        None
    };
    Ok(ToricComputation {
        basis,
        elimination_basis,
        stats,
    })
}

/// Maximum standard degree of a basis.
pub fn max_degree(g: &GroebnerBasis) -> u32 {
    g.max_degree()
}

/// Image of an `x, y` monomial under `x_i -> t^{a_i}, y_j -> t_j^alpha`.
pub fn substitute(cfg: &Configuration, m: &Monomial) -> Result<LatticeVector> {
    let d = cfg.dim();
    let c = cfg.codimension();
    if m.nvars() != c + d {
        return Err(Error::UniverseMismatch(c + d, m.nvars()));
    }
    let mut out = vec![0u64; d];
    let e = m.exponents();
    for (i, a) in cfg.a_points().iter().enumerate() {
        let k = u64::from(e[i]);
        for (o, &aj) in out.iter_mut().zip(a.coords()) {
            *o = aj
                .checked_mul(k)
                .and_then(|x| o.checked_add(x))
                .ok_or(Error::Overflow("substitution"))?;
        }
    }
    for (j, o) in out.iter_mut().enumerate() {
        let k = u64::from(e[c + j]);
        *o = cfg
            .alpha()
            .checked_mul(k)
            .and_then(|x| o.checked_add(x))
            .ok_or(Error::Overflow("substitution"))?;
    }
    Ok(LatticeVector::new(out))
}

/// Whether `u - v` lies in `I_A`, decided by the substitution.
pub fn vanishes(cfg: &Configuration, b: &Binomial) -> Result<bool> {
    Ok(substitute(cfg, b.lead())? == substitute(cfg, b.tail())?)
}

/// `d(alpha-1) + min{2r, c(alpha-1)}`.
pub fn elimination_degree_bound(cfg: &Configuration, r: u64) -> u64 {
    let a1 = cfg.alpha() - 1;
    cfg.dim() as u64 * a1 + (2 * r).min(cfg.codimension() as u64 * a1)
}

/// Weighted-degree cap under which every element of the reduced basis of
/// `J_A` survives truncation: `alpha` times the standard-degree bound.
pub fn truncation_cap(cfg: &Configuration, r: u64) -> u64 {
    cfg.alpha() * elimination_degree_bound(cfg, r)
}
