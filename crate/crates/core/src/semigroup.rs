//! Degree-graded arithmetic in the semigroup `S = <A>`.
//!
//! `nA` is the set of sums of `n` generators; every element has coordinate
//! sum `n * alpha`. Pieces are built incrementally (`nA = (n-1)A + A`) and
//! memoized, since the reduction number and the normality scan both walk
//! consecutive pieces.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{binomial_coefficient, Configuration, LatticeVector};

#[derive(Clone, Debug)]
pub struct GradedPiece {
    n: usize,
    elements: Vec<LatticeVector>,
    members: HashSet<LatticeVector>,
}

impl GradedPiece {
    fn from_set(n: usize, members: HashSet<LatticeVector>) -> Self {
        let mut elements: Vec<_> = members.iter().cloned().collect();
        elements.sort();
        GradedPiece {
            n,
            elements,
            members,
        }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    /// Elements in ascending lex order.
    pub fn elements(&self) -> &[LatticeVector] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, b: &LatticeVector) -> bool {
        self.members.contains(b)
    }
}

/// A face `P_I` of the simplex, described by the coordinates that vanish on it.
#[derive(Clone, Debug, Serialize)]
pub struct FaceRecord {
    /// Zero-based indices `I`.
    pub zero_set: Vec<usize>,
    pub dimension: usize,
    pub is_full: bool,
    /// `A_I`, corners included.
    pub members: Vec<LatticeVector>,
}

/// Semigroup engine for one configuration. Holds the piece cache, so it is
/// meant to be owned by a single worker.
pub struct Semigroup<'a> {
    cfg: &'a Configuration,
    generators: Vec<LatticeVector>,
    corners: Vec<LatticeVector>,
    pieces: Vec<GradedPiece>,
}

impl<'a> Semigroup<'a> {
    pub fn new(cfg: &'a Configuration) -> Self {
        let d = cfg.dim();
        let mut zero = HashSet::new();
        zero.insert(LatticeVector::zero(d));
        Semigroup {
            cfg,
            generators: cfg.generators(),
            corners: cfg.e_points(),
            pieces: vec![GradedPiece::from_set(0, zero)],
        }
    }

    pub fn configuration(&self) -> &Configuration {
        self.cfg
    }

    pub fn graded_piece(&mut self, n: usize) -> Result<&GradedPiece> {
        while self.pieces.len() <= n {
            let prev = self.pieces.last().expect("piece 0 always present");
            let mut next = HashSet::with_capacity(prev.len() * 2);
            for b in prev.elements() {
                for g in &self.generators {
                    let s = b.checked_add(g).ok_or(Error::Overflow("graded piece"))?;
                    next.insert(s);
                }
            }
            let k = self.pieces.len();
            self.pieces.push(GradedPiece::from_set(k, next));
        }
        Ok(&self.pieces[n])
    }

    pub fn contains(&mut self, b: &LatticeVector) -> Result<bool> {
        if b.dim() != self.cfg.dim() {
            return Ok(false);
        }
        match b.degree(self.cfg.alpha()) {
            Some(n) => {
                let n = usize::try_from(n).map_err(|_| Error::Overflow("degree"))?;
                Ok(self.graded_piece(n)?.contains(b))
            }
            None => Ok(false),
        }
    }

    /// Whether `b - e_j ∈ rA` for some corner `e_j`, i.e. `b ∈ {e} + rA`.
    pub fn in_corner_shift(&mut self, b: &LatticeVector, r: usize) -> Result<bool> {
        self.graded_piece(r)?;
        Ok(shift_contains(&self.corners, &self.pieces[r], b))
    }

    /// Whether `(r+1)A = {e_1..e_d} + rA`. Only the inclusion `⊆` is tested;
    /// the other one holds because every `e_j` lies in `A`.
    pub fn reduction_holds_at(&mut self, r: usize) -> Result<bool> {
        self.graded_piece(r + 1)?;
        let (lower, upper) = (&self.pieces[r], &self.pieces[r + 1]);
        let holds = upper
            .elements()
            .iter()
            .all(|b| shift_contains(&self.corners, lower, b));
        #[cfg(debug_assertions)]
        for b in lower.elements() {
            for e in &self.corners {
                let s = b.checked_add(e).ok_or(Error::Overflow("graded piece"))?;
                debug_assert!(upper.contains(&s), "{{e}} + rA must lie in (r+1)A");
            }
        }
        Ok(holds)
    }

    /// The least `r >= 1` with `(r+1)A = {e} + rA`.
    ///
    /// The search stops at `deg - codim`; running past it means the engine
    /// is broken, since the reduction number never exceeds that value.
    pub fn reduction_number(&mut self) -> Result<usize> {
        let deg = self.cfg.degree()?;
        let c = self.cfg.codimension() as u64;
        let cap = deg.saturating_sub(c).max(1);
        let cap = usize::try_from(cap).map_err(|_| Error::Overflow("reduction cap"))?;
        for r in 1..=cap {
            if self.reduction_holds_at(r)? {
                return Ok(r);
            }
        }
        Err(Error::InvariantViolation(format!(
            "reduction number exceeds deg - codim = {cap} for {}",
            self.cfg
        )))
    }

    pub fn faces(&self) -> Vec<FaceRecord> {
        faces(self.cfg)
    }

    /// Normality: `S = ZS ∩ N^d`.
    ///
    /// Every element of `ZS ∩ N^d` reaches the box `[0, alpha-1]^d` by
    /// subtracting corners, and the box only holds elements of degree at most
    /// `d - 1`, so scanning the box decides the question.
    pub fn is_normal(&mut self) -> Result<bool> {
        let alpha = self.cfg.alpha();
        let d = self.cfg.dim();
        let snf = self.cfg.smith_form()?;
        let mut point = vec![0u64; d];
        loop {
            let lv = LatticeVector::new(point.clone());
            if lv.sum().is_multiple_of(alpha) && snf.contains(&lv.to_i64()?) && !self.contains(&lv)? {
                return Ok(false);
            }
            // odometer over [0, alpha-1]^d
            let mut i = 0;
            loop {
                if i == d {
                    return Ok(true);
                }
                point[i] += 1;
                if point[i] < alpha {
                    break;
                }
                point[i] = 0;
                i += 1;
            }
        }
    }
}

fn shift_contains(corners: &[LatticeVector], piece: &GradedPiece, b: &LatticeVector) -> bool {
    corners
        .iter()
        .filter_map(|e| b.checked_sub(e))
        .any(|rest| piece.contains(&rest))
}

/// Every face of the simplex: zero sets `I ⊊ {0..d-1}`, including `I = ∅`.
pub fn faces(cfg: &Configuration) -> Vec<FaceRecord> {
    let d = cfg.dim();
    let generators = cfg.generators();
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << d) {
        let zero_set: Vec<usize> = (0..d).filter(|i| mask & (1 << i) != 0).collect();
        if zero_set.len() == d {
            continue;
        }
        let members: Vec<LatticeVector> = generators
            .iter()
            .filter(|g| zero_set.iter().all(|&i| g.coords()[i] == 0))
            .cloned()
            .collect();
        let free = (d - zero_set.len()) as u64;
        let lattice_points = binomial_coefficient(cfg.alpha() + free - 1, free - 1);
        let is_full = lattice_points == Some(members.len() as u64);
        out.push(FaceRecord {
            dimension: d - 1 - zero_set.len(),
            zero_set,
            is_full,
            members,
        });
    }
    out
}

/// `min over full faces of dimension i of alpha^(d-1-i) + i - 1`.
pub fn full_face_bound(cfg: &Configuration) -> Result<Option<u64>> {
    let d = cfg.dim();
    let mut best: Option<u64> = None;
    for f in faces(cfg).iter().filter(|f| f.is_full) {
        let i = f.dimension;
        let exp = u32::try_from(d - 1 - i).map_err(|_| Error::Overflow("face bound"))?;
        let b = cfg
            .alpha()
            .checked_pow(exp)
            .and_then(|p| p.checked_add(i as u64))
            .ok_or(Error::Overflow("face bound"))?
            - 1;
        best = Some(best.map_or(b, |x| x.min(b)));
    }
    Ok(best)
}
