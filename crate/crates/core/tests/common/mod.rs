//! Seeded random generators for complexes, modules and tables.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rootchi::frcomplex::{FracComplex, Generator, GradedModule};
use rootchi::gradings::{DimTable, HOMFLY_LABELS};
use rootchi::laurent::{rat, Rational};
use rootchi::linalg::{self, Mat};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn small(r: &mut ChaCha8Rng) -> Rational {
    let num = r.gen_range(-3..=3);
    let den = *[1, 1, 1, 2, 3].choose(r).unwrap();
    Rational::new(num.into(), i64::into(den))
}

/// Random invertible matrix, block diagonal over `groups` (lists of indices),
/// unipotent for the order given inside each group.
fn unipotent(r: &mut ChaCha8Rng, dim: usize, groups: &[Vec<usize>], density: f64) -> Mat {
    let mut p = linalg::identity(dim);
    for g in groups {
        for a in 0..g.len() {
            for b in 0..a {
                if r.gen_bool(density) {
                    p[g[a]][g[b]] = small(r);
                }
            }
        }
    }
    p
}

/// Standard pairing differential conjugated by a degree-preserving change of
/// basis. Generator levels (when given) are respected by both steps.
fn conjugated(r: &mut ChaCha8Rng, n: u32, gens: Vec<Generator>) -> FracComplex {
    let dim = gens.len();
    let step = n as i64;
    let level = |i: usize| gens[i].filt.unwrap_or(0);
    let mut d0 = linalg::zeros(dim, dim);
    let mut is_target = vec![false; dim];
    let mut order: Vec<usize> = (0..dim).collect();
    order.sort_by_key(|&i| (gens[i].deg, level(i), i));
    for &s in &order {
        if is_target[s] || !r.gen_bool(0.6) {
            continue;
        }
        // targets sit one degree up and are visited later, so they never become sources
        let free: Vec<usize> = (0..dim)
            .filter(|&t| gens[t].deg == gens[s].deg + step && !is_target[t] && level(t) >= level(s))
            .collect();
        if let Some(&t) = free.choose(r) {
            d0[t][s] = rat(*[1, -1, 2].choose(r).unwrap());
            is_target[t] = true;
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for &i in &order {
        match groups.last_mut() {
            Some(g) if gens[g[0]].deg == gens[i].deg => g.push(i),
            _ => groups.push(vec![i]),
        }
    }
    let p = unipotent(r, dim, &groups, 0.5);
    let pinv = linalg::inverse(&p).expect("unipotent");
    let d = linalg::mat_mul(&linalg::mat_mul(&p, &d0, dim), &pinv, dim);
    FracComplex::build(n, gens, d).expect("random complex is valid")
}

fn random_gens(r: &mut ChaCha8Rng, n: u32, max_dim: usize, levels: Option<i64>) -> Vec<Generator> {
    let step = n as i64;
    let mut gens = Vec::new();
    let strands = r.gen_range(1..=3);
    for s in 0..strands {
        let base = r.gen_range(-2 * step..=2 * step);
        let len = r.gen_range(1..=4);
        for k in 0..len {
            let count = r.gen_range(0..=6);
            for c in 0..count {
                if gens.len() >= max_dim {
                    return gens;
                }
                let name = format!("g{s}_{k}_{c}");
                let deg = base + k as i64 * step;
                gens.push(match levels {
                    Some(l) => Generator::filtered(name, deg, r.gen_range(0..=l)),
                    None => Generator::new(name, deg),
                });
            }
        }
    }
    gens
}

pub fn random_complex(r: &mut ChaCha8Rng, n: u32, max_dim: usize) -> FracComplex {
    let gens = random_gens(r, n, max_dim, None);
    conjugated(r, n, gens)
}

pub fn random_filtered(r: &mut ChaCha8Rng, n: u32, max_dim: usize, levels: i64) -> FracComplex {
    let gens = random_gens(r, n, max_dim, Some(levels));
    conjugated(r, n, gens)
}

/// A random degree-preserving chain map `X -> Y`, where `Y = X ⊕ Z` and the
/// map is the inclusion plus a null-homotopic part `d h + h d`.
pub fn random_chain_map(r: &mut ChaCha8Rng, x: &FracComplex, z: &FracComplex) -> (FracComplex, Mat) {
    let y = x.direct_sum(z).unwrap();
    let (a, b) = (x.dim(), y.dim());
    let step = x.n() as i64;
    let mut h = linalg::zeros(b, a);
    for i in 0..b {
        for j in 0..a {
            if y.generators()[i].deg == x.generators()[j].deg - step && r.gen_bool(0.5) {
                h[i][j] = small(r);
            }
        }
    }
    let mut f = linalg::mat_mul(y.differential(), &h, b);
    let hd = linalg::mat_mul(&h, x.differential(), a);
    for i in 0..b {
        for j in 0..a {
            f[i][j] += hd[i][j].clone();
            if i == j {
                f[i][j] += rat(1);
            }
        }
    }
    (y, f)
}

/// Finite module built from truncated monomial pieces Q[U_1..U_k]/(U_i^{e_i}),
/// conjugated per degree; some U act by zero.
pub fn random_module(r: &mut ChaCha8Rng, n: u32, k: usize, max_dim: usize) -> GradedModule {
    let mut gens = Vec::new();
    let mut blocks: Vec<(usize, Vec<Vec<usize>>)> = Vec::new();
    let mut zero_u: Vec<bool> = (0..k).map(|_| r.gen_bool(0.15)).collect();
    if k > 0 && zero_u.iter().all(|&z| z) {
        zero_u[0] = false;
    }
    loop {
        let bounds: Vec<usize> = (0..k).map(|i| if zero_u[i] { 1 } else { r.gen_range(1..=2) }).collect();
        let size: usize = bounds.iter().product();
        if gens.len() + size > max_dim {
            break;
        }
        let base = r.gen_range(-(n as i64) * 2..=(n as i64) * 2);
        let start = gens.len();
        let mut exps: Vec<Vec<usize>> = vec![vec![]];
        for &b in &bounds {
            exps = exps.into_iter().flat_map(|e| (0..b).map(move |x| [e.clone(), vec![x]].concat())).collect();
        }
        for e in &exps {
            let total: usize = e.iter().sum();
            gens.push(Generator::new(format!("m{}", gens.len()), base + 2 * total as i64));
        }
        blocks.push((start, exps));
        if r.gen_bool(0.4) {
            break;
        }
    }
    let dim = gens.len();
    let mut us = vec![linalg::zeros(dim, dim); k];
    for (start, exps) in &blocks {
        for (a, e) in exps.iter().enumerate() {
            for (i, u) in us.iter_mut().enumerate() {
                let mut f = e.clone();
                f[i] += 1;
                if let Some(b) = exps.iter().position(|g| *g == f) {
                    u[start + b][start + a] = rat(1);
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..dim).collect();
    order.sort_by_key(|&i| (gens[i].deg, i));
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for &i in &order {
        match groups.last_mut() {
            Some(g) if gens[g[0]].deg == gens[i].deg => g.push(i),
            _ => groups.push(vec![i]),
        }
    }
    let p = unipotent(r, dim, &groups, 0.5);
    let pinv = linalg::inverse(&p).unwrap();
    let us = us.iter().map(|u| linalg::mat_mul(&linalg::mat_mul(&p, u, dim), &pinv, dim)).collect();
    GradedModule::new(n, gens, us).expect("random module is valid")
}

/// Random (i, j, k) table with k - j even.
pub fn random_trigraded(r: &mut ChaCha8Rng) -> DimTable {
    let mut t = DimTable::new(&HOMFLY_LABELS, &[false; 3]).unwrap();
    for _ in 0..r.gen_range(0..=8) {
        let i = r.gen_range(-6..=6);
        let j = r.gen_range(-6..=6);
        let k = j + 2 * r.gen_range(-3..=3);
        t.add(&[i, j, k], r.gen_range(1..=3)).unwrap();
    }
    t
}
