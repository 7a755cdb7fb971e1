//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! A [`MultiPoly`] owns its ordered [`VarList`]; every exponent vector stored
//! in it has exactly one slot per variable. Terms live in a `BTreeMap` keyed
//! by [`ExponentVector`], whose ordering is graded lexicographic, and zero
//! coefficients are never stored.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use indexmap::IndexSet;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact coefficient type used throughout the crate.
pub type Coeff = BigRational;

pub(crate) fn int(v: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(v))
}

/// Ordered list of distinct variable names.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct VarList(IndexSet<String>);

impl VarList {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut set = IndexSet::new();
        for name in names {
            let name = name.into();
            if !set.insert(name.clone()) {
                return Err(Error::DuplicateVariable(name));
            }
        }
        Ok(VarList(set))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.get_index_of(name)
    }

    pub(crate) fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn contains(&self, name: &str) -> bool {
        self.0.contains(name)
    }

    pub fn name(&self, idx: usize) -> &str {
        &self.0[idx]
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(String::as_str)
    }

    /// `self`'s variables followed by the variables of `other` not already present.
    pub fn union(&self, other: &VarList) -> VarList {
        let mut set = self.0.clone();
        for n in other.0.iter() {
            set.insert(n.clone());
        }
        VarList(set)
    }

    /// A copy of `self` with `name` appended.
    pub fn with(&self, name: &str) -> Result<VarList> {
        if self.contains(name) {
            return Err(Error::DuplicateVariable(name.to_string()));
        }
        let mut set = self.0.clone();
        set.insert(name.to_string());
        Ok(VarList(set))
    }

    /// First name of the form `base`, `base'`, `base''`, ... not in the list.
    pub fn fresh_name(&self, base: &str) -> String {
        let mut name = base.to_string();
        while self.contains(&name) {
            name.push('\'');
        }
        name
    }
}

/// Exponent vector, one entry per variable of the owning [`VarList`].
///
/// Ordered graded lexicographically: first by total degree, then
/// lexicographically with the first variable most significant.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(pub Vec<u32>);

impl ExponentVector {
    pub fn zeros(len: usize) -> Self {
        ExponentVector(vec![0; len])
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = vec![0; len];
        v[i] = 1;
        ExponentVector(v)
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Product of the factorials of the entries.
    pub fn factorial(&self) -> BigInt {
        let mut acc = BigInt::one();
        for &e in &self.0 {
            for m in 2..=e {
                acc *= m;
            }
        }
        acc
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    vars: VarList,
    terms: BTreeMap<ExponentVector, Coeff>,
}

impl MultiPoly {
    pub fn zero(vars: VarList) -> Self {
        MultiPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: VarList, c: Coeff) -> Self {
        let mut p = MultiPoly::zero(vars);
        let z = ExponentVector::zeros(p.vars.len());
        p.add_term(z, c);
        p
    }

    pub fn one(vars: VarList) -> Self {
        MultiPoly::constant(vars, Coeff::one())
    }

    /// The polynomial consisting of the single variable `name`.
    pub fn var(vars: VarList, name: &str) -> Result<Self> {
        let i = vars.require(name)?;
        let mut p = MultiPoly::zero(vars);
        let e = ExponentVector::unit(p.vars.len(), i);
        p.add_term(e, Coeff::one());
        Ok(p)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I>(vars: VarList, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExponentVector, Coeff)>,
    {
        let mut p = MultiPoly::zero(vars);
        for (e, c) in terms {
            if e.len() != p.vars.len() {
                return Err(Error::ExponentLength {
                    expected: p.vars.len(),
                    got: e.len(),
                });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub(crate) fn add_term(&mut self, e: ExponentVector, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> &VarList {
        &self.vars
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded lexicographic order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &Coeff)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &ExponentVector) -> Coeff {
        self.terms.get(e).cloned().unwrap_or_else(Coeff::zero)
    }

    pub(crate) fn coefficient_ref(&self, e: &ExponentVector) -> Option<&Coeff> {
        self.terms.get(e)
    }

    /// Maximum total degree, or -1 for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.terms
            .keys()
            .next_back()
            .map_or(-1, |e| e.total_degree() as i64)
    }

    /// Degree in a single variable.
    pub fn degree_in(&self, name: &str) -> Result<u32> {
        let i = self.vars.require(name)?;
        Ok(self.terms.keys().map(|e| e.0[i]).max().unwrap_or(0))
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(ExponentVector::total_degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn is_multi_affine(&self) -> bool {
        self.terms.keys().all(|e| e.0.iter().all(|&x| x <= 1))
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn support(&self) -> BTreeSet<ExponentVector> {
        self.terms.keys().cloned().collect()
    }

    fn check_same_vars(&self, other: &MultiPoly) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::MismatchedVars {
                left: self.vars.names().map(str::to_string).collect(),
                right: other.vars.names().map(str::to_string).collect(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_same_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MultiPoly {
        self.scale(&-Coeff::one())
    }

    pub fn scale(&self, c: &Coeff) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.vars.clone());
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e.clone(), v * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_same_vars(other)?;
        let mut acc: HashMap<ExponentVector, Coeff> = HashMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                *acc.entry(e1.add(e2)).or_insert_with(Coeff::zero) += c1 * c2;
            }
        }
        Ok(MultiPoly {
            vars: self.vars.clone(),
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    pub fn pow(&self, exp: u32) -> MultiPoly {
        let mut acc = MultiPoly::one(self.vars.clone());
        for _ in 0..exp {
            acc = acc.mul(self).expect("same variable list");
        }
        acc
    }

    /// Re-expresses `self` over `vars`, which must contain every variable of `self`.
    pub fn extend_vars(&self, vars: &VarList) -> Result<MultiPoly> {
        let slots = self
            .vars
            .names()
            .map(|n| vars.require(n))
            .collect::<Result<Vec<_>>>()?;
        let mut out = MultiPoly::zero(vars.clone());
        for (e, c) in &self.terms {
            let mut ne = vec![0; vars.len()];
            for (k, &slot) in slots.iter().enumerate() {
                ne[slot] = e.0[k];
            }
            out.terms.insert(ExponentVector(ne), c.clone());
        }
        Ok(out)
    }

    /// Puts both polynomials over the union of their variables (`self`'s first).
    pub fn align(&self, other: &MultiPoly) -> Result<(MultiPoly, MultiPoly)> {
        let vars = self.vars.union(&other.vars);
        Ok((self.extend_vars(&vars)?, other.extend_vars(&vars)?))
    }

    /// Substitutes every variable `v` by `mapping[v]` (or by itself when
    /// unmapped) and collects terms over the `target` variable list.
    pub fn identify_variables(
        &self,
        mapping: &HashMap<String, String>,
        target: &VarList,
    ) -> Result<MultiPoly> {
        for src in mapping.keys() {
            self.vars.require(src)?;
        }
        let slots = self
            .vars
            .names()
            .map(|n| target.require(mapping.get(n).map_or(n, String::as_str)))
            .collect::<Result<Vec<_>>>()?;
        let mut out = MultiPoly::zero(target.clone());
        for (e, c) in &self.terms {
            let mut ne = vec![0; target.len()];
            for (k, &slot) in slots.iter().enumerate() {
                ne[slot] += e.0[k];
            }
            out.add_term(ExponentVector(ne), c.clone());
        }
        Ok(out)
    }

    /// Keeps exactly the terms `γ` with `alpha <= γ <= beta` componentwise.
    pub fn power_truncation(
        &self,
        alpha: &ExponentVector,
        beta: &ExponentVector,
    ) -> Result<MultiPoly> {
        for v in [alpha, beta] {
            if v.len() != self.vars.len() {
                return Err(Error::ExponentLength {
                    expected: self.vars.len(),
                    got: v.len(),
                });
            }
        }
        if !alpha.le(beta) {
            return Err(Error::InvalidBounds {
                alpha: alpha.0.clone(),
                beta: beta.0.clone(),
            });
        }
        Ok(MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(g, _)| alpha.le(g) && (*g).le(beta))
                .map(|(g, c)| (g.clone(), c.clone()))
                .collect(),
        })
    }

    /// Drops every term whose exponent in `name` exceeds 1.
    pub fn multi_affine_part(&self, name: &str) -> Result<MultiPoly> {
        let i = self.vars.require(name)?;
        Ok(MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(g, _)| g.0[i] <= 1)
                .map(|(g, c)| (g.clone(), c.clone()))
                .collect(),
        })
    }

    /// Minimal-degree homogeneous lift; `y` is appended as the last variable.
    pub fn homogenize(&self, y: &str) -> Result<MultiPoly> {
        let vars = self.vars.with(y)?;
        let d = self.degree().max(0) as u64;
        let terms = self
            .terms
            .iter()
            .map(|(g, c)| {
                let mut e = g.0.clone();
                e.push((d - g.total_degree()) as u32);
                (ExponentVector(e), c.clone())
            })
            .collect();
        Ok(MultiPoly { vars, terms })
    }

    /// `order`-fold formal derivative with respect to `name`.
    pub fn partial_derivative(&self, name: &str, order: u32) -> Result<MultiPoly> {
        let i = self.vars.require(name)?;
        let mut out = MultiPoly::zero(self.vars.clone());
        for (g, c) in &self.terms {
            let e = g.0[i];
            if e < order {
                continue;
            }
            let mut falling = BigInt::one();
            for m in (e - order + 1)..=e {
                falling *= m;
            }
            let mut ne = g.clone();
            ne.0[i] -= order;
            out.terms.insert(ne, c * Coeff::from_integer(falling));
        }
        Ok(out)
    }

    /// Applies `∂^alpha` (one derivative order per variable).
    pub fn derivative(&self, alpha: &ExponentVector) -> Result<MultiPoly> {
        if alpha.len() != self.vars.len() {
            return Err(Error::ExponentLength {
                expected: self.vars.len(),
                got: alpha.len(),
            });
        }
        let mut out = MultiPoly::zero(self.vars.clone());
        for (g, c) in &self.terms {
            if !alpha.le(g) {
                continue;
            }
            let mut factor = BigInt::one();
            for (&e, &a) in g.0.iter().zip(&alpha.0) {
                for m in (e - a + 1)..=e {
                    factor *= m;
                }
            }
            let ne = ExponentVector(g.0.iter().zip(&alpha.0).map(|(e, a)| e - a).collect());
            out.terms.insert(ne, c * Coeff::from_integer(factor));
        }
        Ok(out)
    }

    /// Sets `name = value` and removes the variable from the list.
    pub fn specialize(&self, name: &str, value: &Coeff) -> Result<MultiPoly> {
        let i = self.vars.require(name)?;
        let vars = VarList::new(self.vars.names().filter(|n| *n != name))?;
        let mut out = MultiPoly::zero(vars);
        for (g, c) in &self.terms {
            let mut e = g.0.clone();
            let k = e.remove(i);
            out.add_term(ExponentVector(e), c * num_traits::pow(value.clone(), k as usize));
        }
        Ok(out)
    }

    pub fn evaluate(&self, point: &[Coeff]) -> Result<Coeff> {
        if point.len() != self.vars.len() {
            return Err(Error::ExponentLength {
                expected: self.vars.len(),
                got: point.len(),
            });
        }
        let mut acc = Coeff::zero();
        for (g, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&g.0) {
                t *= num_traits::pow(x.clone(), e as usize);
            }
            acc += t;
        }
        Ok(acc)
    }

    pub fn to_doc(&self) -> PolyDoc {
        PolyDoc {
            vars: self.vars.names().map(str::to_string).collect(),
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(e, c)| TermDoc {
                    exp: e.0.clone(),
                    coef: c.to_string(),
                })
                .collect(),
        }
    }

    pub fn from_doc(doc: &PolyDoc) -> Result<MultiPoly> {
        let vars = VarList::new(doc.vars.iter().cloned())?;
        let terms = doc
            .terms
            .iter()
            .map(|t| {
                let c = parse_coeff(&t.coef)?;
                Ok((ExponentVector(t.exp.clone()), c))
            })
            .collect::<Result<Vec<_>>>()?;
        MultiPoly::from_terms(vars, terms)
    }
}

pub fn parse_coeff(s: &str) -> Result<Coeff> {
    let r = BigRational::from_str(s.trim())
        .map_err(|_| Error::Parse(format!("bad coefficient `{s}`")))?;
    Ok(r)
}

/// JSON form of a polynomial; terms in descending graded lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyDoc {
    pub vars: Vec<String>,
    pub terms: Vec<TermDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub exp: Vec<u32>,
    pub coef: String,
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mono: Vec<String> = e
                .0
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, &x)| {
                    if x == 1 {
                        self.vars.name(i).to_string()
                    } else {
                        format!("{}^{}", self.vars.name(i), x)
                    }
                })
                .collect();
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{abs}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}
