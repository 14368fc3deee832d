#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use toricgb::gb::Monomial;
use toricgb::lattice::{enumerate_simplex_points, Configuration, LatticeVector};
use toricgb::semigroup::Semigroup;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn non_corner_points(alpha: u64, d: usize) -> Vec<LatticeVector> {
    enumerate_simplex_points(alpha, d)
        .into_iter()
        .filter(|p| !p.coords().contains(&alpha))
        .collect()
}

/// A uniformly random subset of `M_{alpha,d}` with `1..=c_max` non-corner
/// points, in random order.
pub fn random_configuration(r: &mut ChaCha8Rng, alpha_max: u64, d_max: usize, c_max: usize) -> Configuration {
    let alpha = r.gen_range(2..=alpha_max);
    let d = r.gen_range(2..=d_max);
    let pool = non_corner_points(alpha, d);
    let c = r.gen_range(1..=pool.len().min(c_max));
    let pts: Vec<LatticeVector> = pool.choose_multiple(r, c).cloned().collect();
    Configuration::from_points(alpha, d, pts).expect("sampled points are valid")
}

/// Random configurations with `alpha <= 4`, `d <= 4`, `c <= 12`.
pub fn corpus(n: usize, seed: u64) -> Vec<Configuration> {
    let mut r = rng(seed);
    (0..n).map(|_| random_configuration(&mut r, 4, 4, 12)).collect()
}

/// Generators in variable order: `a_1..a_c`, then `e_1..e_d`.
pub fn generators_in_variable_order(cfg: &Configuration) -> Vec<LatticeVector> {
    let mut g = cfg.a_points().to_vec();
    g.extend(cfg.e_points());
    g
}

fn point_of(gens: &[LatticeVector], exps: &[u16]) -> LatticeVector {
    let d = gens[0].dim();
    let mut v = vec![0u64; d];
    for (g, &e) in gens.iter().zip(exps) {
        for (x, &y) in v.iter_mut().zip(g.coords()) {
            *x += y * u64::from(e);
        }
    }
    LatticeVector::new(v)
}

/// A random pair of factorizations of one semigroup element: the first
/// drawn directly, the second by repeatedly peeling off a random generator
/// whose removal stays inside `S`.
pub fn random_relation(cfg: &Configuration, sg: &mut Semigroup<'_>, r: &mut ChaCha8Rng, max_deg: usize) -> (Monomial, Monomial) {
    let gens = generators_in_variable_order(cfg);
    let n = gens.len();
    let k = r.gen_range(1..=max_deg);
    let mut first = vec![0u16; n];
    for _ in 0..k {
        first[r.gen_range(0..n)] += 1;
    }
    let b = point_of(&gens, &first);
    let mut second = vec![0u16; n];
    let mut cur = b.clone();
    while cur.sum() > 0 {
        let options: Vec<usize> = (0..n)
            .filter(|&i| {
                cur.checked_sub(&gens[i])
                    .is_some_and(|rest| sg.contains(&rest).expect("membership"))
            })
            .collect();
        let i = *options.choose(r).expect("a nonzero element of S has a generator to peel");
        second[i] += 1;
        cur = cur.checked_sub(&gens[i]).unwrap();
    }
    assert_eq!(point_of(&gens, &second), b);
    (Monomial::from_exponents(first), Monomial::from_exponents(second))
}

/// `[Z^d : ZS]` by closing the images of the generators in `(Z/alpha)^d`.
/// `ZS` contains `alpha Z^d`, so the index is `alpha^d / |ZS mod alpha|`.
pub fn lattice_index_by_closure(cfg: &Configuration) -> u64 {
    let a = cfg.alpha();
    let d = cfg.dim();
    let gens: Vec<Vec<u64>> = cfg.a_points().iter().map(|p| p.coords().iter().map(|x| x % a).collect()).collect();
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut stack = vec![vec![0u64; d]];
    seen.insert(vec![0u64; d]);
    while let Some(v) = stack.pop() {
        for g in &gens {
            let w: Vec<u64> = v.iter().zip(g).map(|(x, y)| (x + y) % a).collect();
            if seen.insert(w.clone()) {
                stack.push(w);
            }
        }
    }
    a.pow(d as u32) / seen.len() as u64
}

/// `nA` by brute force over multisets of generators.
pub fn sums_of(cfg: &Configuration, n: usize) -> BTreeSet<LatticeVector> {
    let gens = cfg.generators();
    let mut cur: BTreeSet<LatticeVector> = [LatticeVector::zero(cfg.dim())].into();
    for _ in 0..n {
        cur = cur
            .iter()
            .flat_map(|x| gens.iter().map(move |g| x.checked_add(g).unwrap()))
            .collect();
    }
    cur
}

/// `r(S)` straight from the definition `(r+1)A ⊆ {e_j} + rA`.
pub fn reduction_number_by_definition(cfg: &Configuration) -> usize {
    let es = cfg.e_points();
    let mut r = 1;
    loop {
        let lower = sums_of(cfg, r);
        let upper = sums_of(cfg, r + 1);
        if upper
            .iter()
            .all(|b| es.iter().any(|e| b.checked_sub(e).is_some_and(|x| lower.contains(&x))))
        {
            return r;
        }
        r += 1;
    }
}

/// Monomials of degree `n` in `nvars` variables.
pub fn monomials_of_degree(nvars: usize, n: u16) -> Vec<Vec<u16>> {
    fn rec(slot: usize, left: u16, cur: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if slot + 1 == cur.len() {
            cur[slot] = left;
            out.push(cur.clone());
            return;
        }
        for v in 0..=left {
            cur[slot] = v;
            rec(slot + 1, left - v, cur, out);
        }
    }
    let mut out = Vec::new();
    rec(0, n, &mut vec![0; nvars], &mut out);
    out
}

/// Monomials of degree `n` outside the monomial ideal.
pub fn standard_monomial_count(gens: &[Monomial], nvars: usize, n: u16) -> usize {
    monomials_of_degree(nvars, n)
        .into_iter()
        .filter(|e| {
            let m = Monomial::from_exponents(e.clone());
            !gens.iter().any(|g| g.divides(&m))
        })
        .count()
}

/// Coefficients of `N(t) / (1-t)^n` up to `t^k`.
pub fn series_from_numerator(num: &[i64], nvars: usize, k: usize) -> Vec<i64> {
    let mut s: Vec<i64> = (0..=k).map(|i| num.get(i).copied().unwrap_or(0)).collect();
    for _ in 0..nvars {
        for i in 1..=k {
            s[i] += s[i - 1];
        }
    }
    s
}
