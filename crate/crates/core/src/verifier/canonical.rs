use itertools::Itertools;

use crate::error::Result;
use crate::lattice::{Configuration, LatticeVector};

/// All `d!` coordinate permutations, in lexicographic order.
pub fn permutations(d: usize) -> Vec<Vec<usize>> {
    (0..d).permutations(d).collect()
}

fn sorted_image(points: &[LatticeVector], perm: &[usize]) -> Vec<LatticeVector> {
    let mut v: Vec<LatticeVector> = points.iter().map(|p| p.permuted(perm)).collect();
    v.sort();
    v
}

/// Lexicographic minimum over all coordinate permutations of the sorted
/// point list.
pub fn canonical_points(points: &[LatticeVector], perms: &[Vec<usize>]) -> Vec<LatticeVector> {
    perms
        .iter()
        .map(|p| sorted_image(points, p))
        .min()
        .unwrap_or_default()
}

/// The class representative: `a_points` in canonical order.
pub fn canonical_configuration(cfg: &Configuration) -> Result<Configuration> {
    let pts = canonical_points(cfg.a_points(), &permutations(cfg.dim()));
    Configuration::from_points(cfg.alpha(), cfg.dim(), pts)
}

/// Incidence pattern of a point set with the facets `x_i = 0`: for each
/// point the sorted list of facets containing it, canonicalized over
/// coordinate permutations.
pub fn facet_incidence(points: &[LatticeVector], perms: &[Vec<usize>]) -> Vec<Vec<usize>> {
    perms
        .iter()
        .map(|perm| {
            let mut v: Vec<Vec<usize>> = points
                .iter()
                .map(|p| {
                    let q = p.permuted(perm);
                    (0..q.dim()).filter(|&i| q.coords()[i] == 0).collect()
                })
                .collect();
            v.sort();
            v
        })
        .min()
        .unwrap_or_default()
}
