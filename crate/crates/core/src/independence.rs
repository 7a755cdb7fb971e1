//! Independence polynomials: univariate `I(G; x)`, multivariate `M(G)` and
//! coloured `C(G)`.
//!
//! The main path is the vertex-elimination recursion
//! `M(G) = M(G - v) + x_v * M(G - N[v])`, split over connected components
//! and memoized on the remaining vertex set. It is generic over the value
//! being accumulated, so the same code yields exact counts for graphs far
//! too large to enumerate and coloured polynomials for small ones.
//!
//! [`brute_force_indep_sets`] and [`brute_force_coloured_poly`] are
//! independent enumerators kept as testing oracles.

use std::collections::HashMap;

use indexmap::IndexMap;
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{ColouredGraph, Graph};
use crate::poly::{Coeff, ExponentVector, MultiPoly, VarList};

/// Largest graph the brute-force oracles accept.
pub const BRUTE_FORCE_MAX_VERTICES: usize = 30;

const MEMO_CAPACITY: usize = 1 << 16;

/// `(i_0, ..., i_d)`: number of independent sets of each size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndepSequence(Vec<BigUint>);

impl IndepSequence {
    fn from_raw(mut counts: Vec<BigUint>) -> Self {
        while counts.len() > 1 && counts.last().is_some_and(Zero::is_zero) {
            counts.pop();
        }
        IndepSequence(counts)
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn independence_number(&self) -> usize {
        self.0.len() - 1
    }

    /// Total number of independent sets, the empty one included.
    pub fn total(&self) -> BigUint {
        self.0.iter().sum()
    }

    /// The sequence as exact rationals, for the sequence checks.
    pub fn as_rationals(&self) -> Vec<Coeff> {
        self.0
            .iter()
            .map(|c| Coeff::from_integer(c.clone().into()))
            .collect()
    }

    /// `sum_k i_k var^k` as a one-variable polynomial.
    pub fn to_poly(&self, var: &str) -> MultiPoly {
        let vars = VarList::new([var]).expect("single variable");
        let terms = self
            .0
            .iter()
            .enumerate()
            .map(|(k, c)| (ExponentVector(vec![k as u32]), Coeff::from_integer(c.clone().into())));
        MultiPoly::from_terms(vars, terms).expect("length 1 exponents")
    }
}

impl Serialize for IndepSequence {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        // counts that do not fit in u64 are written as decimal strings
        let vals: Vec<serde_json::Value> = self
            .0
            .iter()
            .map(|c| match c.to_u64() {
                Some(v) => serde_json::Value::from(v),
                None => serde_json::Value::from(c.to_string()),
            })
            .collect();
        vals.serialize(s)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct VertexSet(Box<[u64]>);

impl VertexSet {
    fn full(n: usize) -> Self {
        let mut words = vec![0u64; n.div_ceil(64)];
        for v in 0..n {
            words[v / 64] |= 1 << (v % 64);
        }
        VertexSet(words.into_boxed_slice())
    }

    fn empty_like(&self) -> Self {
        VertexSet(vec![0; self.0.len()].into_boxed_slice())
    }

    fn contains(&self, v: usize) -> bool {
        self.0[v / 64] >> (v % 64) & 1 == 1
    }

    fn insert(&mut self, v: usize) {
        self.0[v / 64] |= 1 << (v % 64);
    }

    fn remove(&mut self, v: usize) {
        self.0[v / 64] &= !(1 << (v % 64));
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * 64 + b)
            })
        })
    }
}

/// What the elimination accumulates.
trait Weights {
    type Value: Clone;
    fn one(&self) -> Self::Value;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    /// `x_v * a`
    fn times_var(&self, v: usize, a: &Self::Value) -> Self::Value;
}

/// Univariate counts, `i_k` at index `k`.
struct Counts;

impl Weights for Counts {
    type Value = Vec<BigUint>;

    fn one(&self) -> Self::Value {
        vec![BigUint::one()]
    }

    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value {
        let mut out = vec![BigUint::zero(); a.len().max(b.len())];
        for (k, c) in a.iter().enumerate() {
            out[k] += c;
        }
        for (k, c) in b.iter().enumerate() {
            out[k] += c;
        }
        out
    }

    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value {
        let mut out = vec![BigUint::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }

    fn times_var(&self, _v: usize, a: &Self::Value) -> Self::Value {
        let mut out = Vec::with_capacity(a.len() + 1);
        out.push(BigUint::zero());
        out.extend(a.iter().cloned());
        out
    }
}

/// Polynomials where vertex `v` contributes the variable in slot `slot[v]`.
struct Coloured {
    vars: VarList,
    slot: Vec<usize>,
}

impl Weights for Coloured {
    type Value = MultiPoly;

    fn one(&self) -> MultiPoly {
        MultiPoly::one(self.vars.clone())
    }

    fn add(&self, a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
        a.add(b).expect("shared variable list")
    }

    fn mul(&self, a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
        a.mul(b).expect("shared variable list")
    }

    fn times_var(&self, v: usize, a: &MultiPoly) -> MultiPoly {
        let s = self.slot[v];
        let terms = a.terms().map(|(e, c)| {
            let mut e = e.clone();
            e.0[s] += 1;
            (e, c.clone())
        });
        MultiPoly::from_terms(self.vars.clone(), terms).expect("same length")
    }
}

struct Eliminator<'a, W: Weights> {
    adj: Vec<Vec<usize>>,
    weights: &'a W,
    memo: HashMap<VertexSet, W::Value>,
}

impl<'a, W: Weights> Eliminator<'a, W> {
    fn new(g: &Graph, weights: &'a W) -> Self {
        Eliminator {
            adj: g.adjacency(),
            weights,
            memo: HashMap::new(),
        }
    }

    fn components(&self, set: &VertexSet) -> Vec<VertexSet> {
        let mut seen = set.empty_like();
        let mut out = Vec::new();
        for start in set.iter() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = set.empty_like();
            let mut stack = vec![start];
            seen.insert(start);
            while let Some(v) = stack.pop() {
                comp.insert(v);
                for &w in &self.adj[v] {
                    if set.contains(w) && !seen.contains(w) {
                        seen.insert(w);
                        stack.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    fn solve(&mut self, set: &VertexSet) -> W::Value {
        if set.is_empty() {
            return self.weights.one();
        }
        if let Some(v) = self.memo.get(set) {
            return v.clone();
        }
        let comps = self.components(set);
        let value = if comps.len() > 1 {
            let mut acc = self.weights.one();
            for c in &comps {
                let part = self.solve(c);
                acc = self.weights.mul(&acc, &part);
            }
            acc
        } else {
            // pivot: maximum degree inside `set`, lowest index on ties
            let (pivot, _) = set
                .iter()
                .map(|v| (v, self.adj[v].iter().filter(|&&w| set.contains(w)).count()))
                .fold((usize::MAX, 0), |best, cand| {
                    if best.0 == usize::MAX || cand.1 > best.1 {
                        cand
                    } else {
                        best
                    }
                });
            let mut without = set.clone();
            without.remove(pivot);
            let mut closed = without.clone();
            for &w in &self.adj[pivot] {
                closed.remove(w);
            }
            let a = self.solve(&without);
            let b = self.solve(&closed);
            let b = self.weights.times_var(pivot, &b);
            self.weights.add(&a, &b)
        };
        if self.memo.len() >= MEMO_CAPACITY {
            self.memo.clear();
        }
        self.memo.insert(set.clone(), value.clone());
        value
    }

    fn run(g: &Graph, weights: &'a W) -> W::Value {
        let mut e = Eliminator::new(g, weights);
        e.solve(&VertexSet::full(g.num_vertices()))
    }
}

/// `M(G)`: one variable per vertex, named after the vertex.
pub fn multivariate_indep_poly(g: &Graph) -> MultiPoly {
    let vars = VarList::new(g.vertices()).expect("vertex names are distinct");
    let w = Coloured {
        vars,
        slot: (0..g.num_vertices()).collect(),
    };
    Eliminator::run(g, &w)
}

/// `C(G)`: one variable per colour, ordered by first appearance.
pub fn coloured_indep_poly(g: &ColouredGraph) -> MultiPoly {
    let colours = g.colour_set();
    let slot = g
        .colours()
        .iter()
        .map(|c| colours.get_index_of(c).expect("colour in set"))
        .collect();
    let vars = VarList::new(colours).expect("colour set has no repeats");
    Eliminator::run(g.graph(), &Coloured { vars, slot })
}

/// Coefficients of `I(G; x)`.
pub fn indep_poly(g: &Graph) -> IndepSequence {
    IndepSequence::from_raw(Eliminator::run(g, &Counts))
}

fn guard(g: &Graph) -> Result<()> {
    if g.num_vertices() > BRUTE_FORCE_MAX_VERTICES {
        return Err(Error::GuardExceeded {
            what: "brute-force vertex",
            got: g.num_vertices() as u128,
            limit: BRUTE_FORCE_MAX_VERTICES as u128,
        });
    }
    Ok(())
}

/// Calls `visit` once for every independent set, given as a list of vertices.
fn enumerate_independent(g: &Graph, visit: &mut dyn FnMut(&[usize])) {
    let adj = g.adjacency();
    let n = g.num_vertices();
    let mut blocked = vec![0u32; n];
    let mut chosen = Vec::new();

    fn go(
        i: usize,
        adj: &[Vec<usize>],
        blocked: &mut [u32],
        chosen: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if i == adj.len() {
            visit(chosen);
            return;
        }
        go(i + 1, adj, blocked, chosen, visit);
        if blocked[i] == 0 {
            chosen.push(i);
            for &w in &adj[i] {
                blocked[w] += 1;
            }
            go(i + 1, adj, blocked, chosen, visit);
            for &w in &adj[i] {
                blocked[w] -= 1;
            }
            chosen.pop();
        }
    }
    go(0, &adj, &mut blocked, &mut chosen, visit);
}

/// Independence sequence by explicit backtracking over all independent sets.
pub fn brute_force_indep_sets(g: &Graph) -> Result<IndepSequence> {
    guard(g)?;
    let mut counts = vec![0u64; g.num_vertices() + 1];
    enumerate_independent(g, &mut |s| counts[s.len()] += 1);
    Ok(IndepSequence::from_raw(
        counts.into_iter().map(BigUint::from).collect(),
    ))
}

/// `C(G)` by enumerating independent sets one by one.
pub fn brute_force_coloured_poly(g: &ColouredGraph) -> Result<MultiPoly> {
    guard(g.graph())?;
    let colours = g.colour_set();
    let slot: Vec<usize> = g
        .colours()
        .iter()
        .map(|c| colours.get_index_of(c).expect("colour in set"))
        .collect();
    let mut acc: IndexMap<Vec<u32>, u64> = IndexMap::new();
    enumerate_independent(g.graph(), &mut |s| {
        let mut e = vec![0u32; colours.len()];
        for &v in s {
            e[slot[v]] += 1;
        }
        *acc.entry(e).or_default() += 1;
    });
    let vars = VarList::new(colours)?;
    MultiPoly::from_terms(
        vars,
        acc.into_iter()
            .map(|(e, c)| (ExponentVector(e), Coeff::from_integer(c.into()))),
    )
}
