#![allow(dead_code)]

use indexmap::IndexMap;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use prelorentz::graph::{ColouredGraph, Graph};
use prelorentz::{Coeff, ExponentVector, MultiPoly, VarList};

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

pub fn int(v: i64) -> Coeff {
    Coeff::from_integer(v.into())
}

pub fn vars(names: &[&str]) -> VarList {
    VarList::new(names.iter().copied()).unwrap()
}

/// Erdős–Rényi graph on `n` vertices named `{prefix}{i}`.
pub fn random_graph(r: &mut ChaCha8Rng, n: usize, p: f64, prefix: &str) -> Graph {
    let mut g = Graph::new();
    for i in 0..n {
        g.add_vertex(format!("{prefix}{i}")).unwrap();
    }
    for i in 0..n {
        for j in i + 1..n {
            if r.gen_bool(p) {
                g.add_edge_idx(i, j).unwrap();
            }
        }
    }
    g
}

/// Random colouring drawn from `{prefix}0..{prefix}{palette-1}`.
pub fn random_coloured(r: &mut ChaCha8Rng, n: usize, palette: usize, prefix: &str) -> ColouredGraph {
    let p = r.gen_range(0.0..0.7);
    let g = random_graph(r, n, p, &format!("{prefix}v"));
    let mut map = IndexMap::new();
    for v in g.vertices() {
        map.insert(v.to_string(), format!("{prefix}c{}", r.gen_range(0..palette)));
    }
    ColouredGraph::from_map(g, &map).unwrap()
}

/// Dense random polynomial with small integer coefficients.
pub fn random_poly(r: &mut ChaCha8Rng, vl: &VarList, max_deg: u32, terms: usize) -> MultiPoly {
    let m = vl.len();
    let t: Vec<(ExponentVector, Coeff)> = (0..terms)
        .map(|_| {
            let mut e = vec![0u32; m];
            let d = r.gen_range(0..=max_deg);
            for _ in 0..d {
                e[r.gen_range(0..m)] += 1;
            }
            (ExponentVector(e), int(r.gen_range(-5..=5)))
        })
        .collect();
    MultiPoly::from_terms(vl.clone(), t).unwrap()
}

/// Product of `deg` linear forms with non-negative integer coefficients,
/// each form non-zero. Such products are Lorentzian.
pub fn random_linear_product(r: &mut ChaCha8Rng, vl: &VarList, deg: u32) -> MultiPoly {
    let m = vl.len();
    let mut p = MultiPoly::one(vl.clone());
    for _ in 0..deg {
        let mut coeffs: Vec<i64> = (0..m).map(|_| if r.gen_bool(0.3) { 0 } else { r.gen_range(1..=3) }).collect();
        if coeffs.iter().all(|&c| c == 0) {
            *coeffs.choose_mut(r).unwrap() = 1;
        }
        let form = MultiPoly::from_terms(
            vl.clone(),
            coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| (ExponentVector::unit(m, i), int(c))),
        )
        .unwrap();
        p = p.mul(&form).unwrap();
    }
    p
}

/// Equality up to variable order.
pub fn same_poly(p: &MultiPoly, q: &MultiPoly) -> bool {
    let (a, b) = p.align(q).unwrap();
    a.sub(&b).unwrap().is_zero()
}
