//! Hilbert series of `K[x_1..x_n] / I` for a monomial ideal `I`.
//!
//! The numerator `N(t)` of `H(t) = N(t) / (1-t)^n` is computed by pivot
//! splitting on a variable `x`:
//! `N(I) = N(I + (x)) + t * N(I : x)`. Ideals generated by pure powers are
//! the base case, with numerator `prod (1 - t^a_i)`.

use serde::Serialize;

use super::monomial::Monomial;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertData {
    pub dimension: usize,
    pub multiplicity: u64,
}

type Gens = Vec<Vec<u16>>;

/// Keeps only minimal generators.
fn minimize(mut gens: Gens) -> Gens {
    gens.sort_by_key(|g| g.iter().map(|&e| u32::from(e)).sum::<u32>());
    gens.dedup();
    let mut out: Gens = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|o| divides(o, &g)) {
            out.push(g);
        }
    }
    out
}

fn divides(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn support(g: &[u16]) -> usize {
    g.iter().filter(|&&e| e > 0).count()
}

fn poly_add(a: &mut Vec<i64>, b: &[i64], shift: usize) -> Result<()> {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (i, &x) in b.iter().enumerate() {
        a[i + shift] = a[i + shift]
            .checked_add(x)
            .ok_or(Error::Overflow("Hilbert numerator"))?;
    }
    Ok(())
}

/// Multiplies `p` by `1 - t^a`.
fn times_one_minus(p: &[i64], a: usize) -> Result<Vec<i64>> {
    let mut out = p.to_vec();
    out.resize(p.len() + a, 0);
    for (i, &x) in p.iter().enumerate() {
        out[i + a] = out[i + a]
            .checked_sub(x)
            .ok_or(Error::Overflow("Hilbert numerator"))?;
    }
    Ok(out)
}

fn numerator_rec(gens: Gens, nvars: usize) -> Result<Vec<i64>> {
    let gens = minimize(gens);
    if gens.is_empty() {
        return Ok(vec![1]);
    }
    if gens.iter().all(|g| support(g) <= 1) {
        let mut p = vec![1i64];
        for g in &gens {
            let a: u32 = g.iter().map(|&e| u32::from(e)).sum();
            if a == 0 {
                // the unit ideal
                return Ok(vec![0]);
            }
            p = times_one_minus(&p, a as usize)?;
        }
        return Ok(p);
    }
    // pivot: the variable occurring in the most mixed generators
    let mut counts = vec![0usize; nvars];
    for g in gens.iter().filter(|g| support(g) > 1) {
        for (i, &e) in g.iter().enumerate() {
            if e > 0 {
                counts[i] += 1;
            }
        }
    }
    let pivot = (0..nvars).max_by_key(|&i| (counts[i], std::cmp::Reverse(i))).expect("nvars > 0");

    // I + (x): generators containing x disappear
    let mut plus: Gens = gens.iter().filter(|g| g[pivot] == 0).cloned().collect();
    let mut x = vec![0u16; nvars];
    x[pivot] = 1;
    plus.push(x);

    // I : x
    let colon: Gens = gens
        .iter()
        .map(|g| {
            let mut h = g.clone();
            h[pivot] = h[pivot].saturating_sub(1);
            h
        })
        .collect();

    let mut n = numerator_rec(plus, nvars)?;
    let m = numerator_rec(colon, nvars)?;
    poly_add(&mut n, &m, 1)?;
    Ok(n)
}

/// Coefficients of `N(t)`, lowest degree first.
pub fn hilbert_numerator(mingens: &[Monomial], nvars: usize) -> Result<Vec<i64>> {
    if let Some(g) = mingens.iter().find(|g| g.nvars() != nvars) {
        return Err(Error::UniverseMismatch(nvars, g.nvars()));
    }
    let gens = mingens.iter().map(|m| m.exponents().to_vec()).collect();
    let mut p = numerator_rec(gens, nvars)?;
    while p.len() > 1 && p.last() == Some(&0) {
        p.pop();
    }
    Ok(p)
}

/// Krull dimension and multiplicity of the quotient.
pub fn hilbert_data(mingens: &[Monomial], nvars: usize) -> Result<HilbertData> {
    let mut p = hilbert_numerator(mingens, nvars)?;
    if p.iter().all(|&c| c == 0) {
        return Ok(HilbertData {
            dimension: 0,
            multiplicity: 0,
        });
    }
    // divide out (1 - t) while t = 1 is a root
    let mut k = 0;
    while p.iter().sum::<i64>() == 0 {
        let mut q = Vec::with_capacity(p.len() - 1);
        let mut acc = 0i64;
        for &c in &p[..p.len() - 1] {
            acc = acc.checked_add(c).ok_or(Error::Overflow("Hilbert numerator"))?;
            q.push(acc);
        }
        p = q;
        k += 1;
    }
    let e: i64 = p.iter().sum();
    if k > nvars || e <= 0 {
        return Err(Error::InvariantViolation(format!(
            "Hilbert numerator has inconsistent shape (k = {k}, e = {e})"
        )));
    }
    Ok(HilbertData {
        dimension: nvars - k,
        multiplicity: e as u64,
    })
}
