//! Buchberger's algorithm specialised to pure-difference binomials.
//!
//! Pairs are installed with the Gebauer–Möller update, which applies the
//! coprime-lead criterion and the chain criterion. Selection follows the
//! normal strategy (smallest lcm degree first, weighted when a weight vector
//! is supplied) or plain FIFO.

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};

use super::binomial::{normal_form_with, reduce_monomial, s_binomial, Binomial};
use super::monomial::Monomial;
use super::order::TermOrder;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PairStrategy {
    #[default]
    Normal,
    Fifo,
}

#[derive(Clone, Debug, Default)]
pub struct BuchbergerOptions {
    pub strategy: PairStrategy,
    /// Grading used for pair selection and truncation. Standard degree when
    /// absent.
    pub weights: Option<Vec<u32>>,
    /// Discard pairs whose lcm has weighted degree above this cap.
    pub truncation: Option<u64>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BuchbergerStats {
    pub pairs_installed: usize,
    pub pairs_reduced: usize,
    pub zero_reductions: usize,
    pub pairs_truncated: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: TermOrder,
    elements: Vec<Binomial>,
    reduced: bool,
}

impl GroebnerBasis {
    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Binomial] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<Binomial> {
        self.elements
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Maximum standard degree over all elements.
    pub fn max_degree(&self) -> u32 {
        self.elements.iter().map(Binomial::degree).max().unwrap_or(0)
    }

    /// Wraps a list known to be a Gröbner basis, not necessarily reduced.
    pub fn new(order: TermOrder, mut elements: Vec<Binomial>) -> Self {
        sort_canonically(&mut elements, &order);
        GroebnerBasis {
            order,
            elements,
            reduced: false,
        }
    }

    /// Wraps a list the caller already knows to be a reduced basis,
    /// re-sorting it canonically.
    pub fn from_reduced(order: TermOrder, mut elements: Vec<Binomial>) -> Self {
        sort_canonically(&mut elements, &order);
        GroebnerBasis {
            order,
            elements,
            reduced: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct PairKey {
    degree: u64,
    seq: u64,
}

impl Ord for PairKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then(self.seq.cmp(&other.seq))
    }
}

impl PartialOrd for PairKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Pair {
    key: PairKey,
    i: usize,
    j: usize,
    lcm: Monomial,
}

impl Ord for Pair {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key.cmp(&other.key)
    }
}

impl PartialOrd for Pair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

struct Engine<'o> {
    order: &'o TermOrder,
    strategy: PairStrategy,
    weights: Option<Vec<u32>>,
    truncation: Option<u64>,
    basis: Vec<Binomial>,
    active: Vec<usize>,
    pairs: BinaryHeap<Reverse<Pair>>,
    seq: u64,
    stats: BuchbergerStats,
}

impl<'o> Engine<'o> {
    fn weight_of(&self, m: &Monomial) -> u64 {
        match &self.weights {
            Some(w) => m.weighted_degree(w),
            None => u64::from(m.degree()),
        }
    }

    fn normal_form(&self, u: Monomial, v: Monomial) -> Result<Option<Binomial>> {
        let basis = &self.basis;
        let active = &self.active;
        normal_form_with(u, v, self.order, |m| {
            active.iter().map(|&k| &basis[k]).find(|g| g.lead().divides(m))
        })
    }

    /// Gebauer–Möller installation of a new element.
    fn update(&mut self, h: Binomial) {
        let k = self.basis.len();
        let hl = h.lead().clone();

        let candidates: Vec<(usize, Monomial, bool)> = self
            .active
            .iter()
            .map(|&i| {
                let gl = self.basis[i].lead();
                (i, gl.lcm(&hl), gl.is_coprime(&hl))
            })
            .collect();

        // Chain criterion on the new pairs.
        let mut kept: Vec<usize> = Vec::new();
        for (pos, (_, lcm, coprime)) in candidates.iter().enumerate() {
            let redundant = !coprime
                && (candidates[pos + 1..].iter().any(|(_, l2, _)| l2.divides(lcm))
                    || kept.iter().any(|&q| candidates[q].1.divides(lcm)));
            if !redundant {
                kept.push(pos);
            }
        }

        // Old pairs made redundant by h.
        self.pairs.retain(|Reverse(p)| {
            if !hl.divides(&p.lcm) {
                return true;
            }
            let li = self.basis[p.i].lead().lcm(&hl);
            let lj = self.basis[p.j].lead().lcm(&hl);
            li == p.lcm || lj == p.lcm
        });

        for pos in kept {
            let (i, ref lcm, coprime) = candidates[pos];
            if coprime {
                continue;
            }
            let degree = match self.strategy {
                PairStrategy::Normal => self.weight_of(lcm),
                PairStrategy::Fifo => 0,
            };
            if let Some(cap) = self.truncation {
                if self.weight_of(lcm) > cap {
                    self.stats.pairs_truncated += 1;
                    continue;
                }
            }
            self.seq += 1;
            self.stats.pairs_installed += 1;
            self.pairs.push(Reverse(Pair {
                key: PairKey {
                    degree,
                    seq: self.seq,
                },
                i,
                j: k,
                lcm: lcm.clone(),
            }));
        }

        let basis = &self.basis;
        self.active.retain(|&i| !hl.divides(basis[i].lead()));
        self.active.push(k);
        self.basis.push(h);
    }

    fn run(&mut self) -> Result<()> {
        while let Some(Reverse(pair)) = self.pairs.pop() {
            self.stats.pairs_reduced += 1;
            let (f, g) = (&self.basis[pair.i], &self.basis[pair.j]);
            let Some(s) = s_binomial(f, g, self.order)? else {
                self.stats.zero_reductions += 1;
                continue;
            };
            let (u, v) = (s.lead().clone(), s.tail().clone());
            match self.normal_form(u, v)? {
                Some(h) => self.update(h),
                None => self.stats.zero_reductions += 1,
            }
        }
        Ok(())
    }
}

/// Computes a Gröbner basis of the ideal generated by `gens`.
///
/// With a truncation cap every input must be homogeneous for the grading,
/// and the result is a truncated basis: complete up to the cap.
pub fn buchberger(
    gens: &[Binomial],
    order: &TermOrder,
    options: &BuchbergerOptions,
) -> Result<GroebnerBasis> {
    buchberger_with_stats(gens, order, options).map(|(g, _)| g)
}

pub fn buchberger_with_stats(
    gens: &[Binomial],
    order: &TermOrder,
    options: &BuchbergerOptions,
) -> Result<(GroebnerBasis, BuchbergerStats)> {
    if let Some(first) = gens.first() {
        let n = first.nvars();
        if let Some(g) = gens.iter().find(|g| g.nvars() != n) {
            return Err(Error::UniverseMismatch(n, g.nvars()));
        }
        if let Some(w) = &options.weights {
            if w.len() != n {
                return Err(Error::UniverseMismatch(n, w.len()));
            }
        }
    }
    if options.truncation.is_some() {
        let ones;
        let w = match &options.weights {
            Some(w) => w,
            None => {
                ones = vec![1; gens.first().map_or(0, Binomial::nvars)];
                &ones
            }
        };
        if let Some(pos) = gens.iter().position(|g| !g.is_weight_homogeneous(w)) {
            return Err(Error::NotHomogeneous(format!("generator {pos} is not homogeneous")));
        }
    }

    let mut engine = Engine {
        order,
        strategy: options.strategy,
        weights: options.weights.clone(),
        truncation: options.truncation,
        basis: Vec::new(),
        active: Vec::new(),
        pairs: BinaryHeap::new(),
        seq: 0,
        stats: BuchbergerStats::default(),
    };
    for g in gens {
        let g = g.reoriented(order);
        if let Some(h) = engine.normal_form(g.lead().clone(), g.tail().clone())? {
            engine.update(h);
        }
    }
    engine.run()?;

    let Engine {
        basis,
        active,
        stats,
        ..
    } = engine;
    let mut elements: Vec<Binomial> = active.into_iter().map(|i| basis[i].clone()).collect();
    sort_canonically(&mut elements, order);
    Ok((
        GroebnerBasis {
            order: *order,
            elements,
            reduced: false,
        },
        stats,
    ))
}

fn sort_canonically(elements: &mut [Binomial], order: &TermOrder) {
    elements.sort_by(|a, b| {
        order
            .cmp(a.lead(), b.lead())
            .then_with(|| order.cmp(a.tail(), b.tail()))
    });
}

/// Turns a Gröbner basis into the reduced one: redundant leads dropped,
/// tails fully reduced, elements sorted by lead.
pub fn reduce_basis(g: &GroebnerBasis) -> Result<GroebnerBasis> {
    let order = g.order;
    let mut elems = g.elements.clone();
    sort_canonically(&mut elems, &order);

    let mut minimal: Vec<Binomial> = Vec::with_capacity(elems.len());
    for (i, e) in elems.iter().enumerate() {
        // leads are sorted ascending, and a proper divisor is always smaller
        let redundant = elems[..i].iter().any(|o| o.lead().divides(e.lead()));
        if !redundant {
            minimal.push(e.clone());
        }
    }

    let mut reduced = Vec::with_capacity(minimal.len());
    for e in &minimal {
        let tail = reduce_monomial(e.tail(), &minimal)?;
        match Binomial::new(e.lead().clone(), tail, &order) {
            Some(b) if b.lead() == e.lead() => reduced.push(b),
            _ => {
                return Err(Error::InvariantViolation(
                    "tail reduction reached the lead term".into(),
                ))
            }
        }
    }
    sort_canonically(&mut reduced, &order);
    Ok(GroebnerBasis {
        order,
        elements: reduced,
        reduced: true,
    })
}

/// Minimal generators of the initial ideal: the leads of a reduced basis.
pub fn initial_ideal(g: &GroebnerBasis) -> Vec<Monomial> {
    debug_assert!(g.reduced, "initial ideal is read off a reduced basis");
    g.elements.iter().map(|e| e.lead().clone()).collect()
}

/// Full Buchberger post-check: every S-binomial reduces to zero.
pub fn is_groebner(g: &GroebnerBasis) -> Result<bool> {
    let els = &g.elements;
    for i in 0..els.len() {
        for j in (i + 1)..els.len() {
            if let Some(s) = s_binomial(&els[i], &els[j], &g.order)? {
                let nf = normal_form_with(s.lead().clone(), s.tail().clone(), &g.order, |m| {
                    els.iter().find(|e| e.lead().divides(m))
                })?;
                if nf.is_some() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Whether a reduced basis satisfies the reduced-basis conditions.
pub fn is_autoreduced(g: &GroebnerBasis) -> bool {
    let els = &g.elements;
    els.iter().enumerate().all(|(i, e)| {
        els.iter().enumerate().all(|(j, o)| {
            i == j || (!o.lead().divides(e.lead()) && !o.lead().divides(e.tail()))
        })
    })
}
