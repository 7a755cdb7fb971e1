//! Lorentzian certification of homogeneous polynomials and the
//! pre-Lorentzian search on partitioned graphs.
//!
//! A homogeneous polynomial of degree `d` with non-negative coefficients is
//! certified when its support is M-convex and, for every multiset of `d - 2`
//! variables (lexicographic order), the Hessian of the corresponding
//! derivative has at most one positive eigenvalue. Inertia is computed
//! exactly from the characteristic polynomial.

use itertools::Itertools;
use num_bigint::BigUint;
use num_integer::binomial;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::matrix::{positive_eigenvalue_count, Matrix, SymmetricMatrix};
use super::mconvex::exchange_failure;
use crate::error::{Error, Result};
use crate::graph::PartitionedGraph;
use crate::independence::coloured_indep_poly;
use crate::poly::{Coeff, ExponentVector, MultiPoly, VarList};
use crate::sequences::ultra_log_concave_violation;

/// Default cap on the number of Hessians a single check may enumerate.
pub const DEFAULT_MAX_HESSIANS: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Certified,
    Refuted,
    /// The k-search ran out of budget; not a proof of failure.
    Inconclusive,
}

/// Why a polynomial failed. Each variant carries enough to re-check the
/// failure on its own, see [`Witness::confirms`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    NegativeCoefficient {
        exp: Vec<u32>,
        coef: String,
    },
    /// `i` indexes the variable list (0-based); `variable` names it.
    SupportNotMConvex {
        alpha: Vec<u32>,
        beta: Vec<u32>,
        i: usize,
        variable: String,
    },
    HessianInertia {
        /// derivative multi-index, one order per variable
        derivative: Vec<u32>,
        hessian: Vec<Vec<String>>,
        positive_eigenvalues: usize,
    },
    /// Bivariate coefficient sequence breaks ultra log-concavity at `k`.
    NotUltraLogConcave {
        k: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_max: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub hessians_checked: u64,
    /// Every failing Hessian, filled only in exhaustive mode.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<Witness>,
}

impl Certificate {
    fn certified(hessians_checked: u64) -> Self {
        Certificate {
            verdict: Verdict::Certified,
            k: None,
            k_max: None,
            witness: None,
            hessians_checked,
            failures: Vec::new(),
        }
    }

    fn refuted(witness: Witness, hessians_checked: u64) -> Self {
        Certificate {
            verdict: Verdict::Refuted,
            k: None,
            k_max: None,
            witness: Some(witness),
            hessians_checked,
            failures: Vec::new(),
        }
    }

    pub fn is_certified(&self) -> bool {
        self.verdict == Verdict::Certified
    }
}

#[derive(Clone, Debug)]
pub struct CertifyOptions {
    /// Keep going after the first failing Hessian and report all of them.
    pub exhaustive: bool,
    pub max_hessians: u64,
    pub parallel: bool,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            exhaustive: false,
            max_hessians: DEFAULT_MAX_HESSIANS,
            parallel: true,
        }
    }
}

/// Hessian of a quadratic form (or of zero).
pub fn hessian(q2: &MultiPoly) -> Result<SymmetricMatrix> {
    if !q2.is_zero() && (q2.degree() != 2 || !q2.is_homogeneous()) {
        return Err(Error::NotQuadratic(q2.degree()));
    }
    let m = q2.vars().len();
    let mut h = Matrix::zeros(m);
    for (e, c) in q2.terms() {
        let idx: Vec<usize> = e
            .as_slice()
            .iter()
            .enumerate()
            .flat_map(|(i, &k)| std::iter::repeat_n(i, k as usize))
            .collect();
        let (i, j) = (idx[0], idx[1]);
        if i == j {
            h.set(i, i, c * Coeff::from_integer(2.into()));
        } else {
            h.set(i, j, c.clone());
            h.set(j, i, c.clone());
        }
    }
    SymmetricMatrix::new(h)
}

/// Hessian of `∂^alpha p` read straight off the coefficients:
/// entry `(i, j)` is `gamma! * c_gamma` with `gamma = alpha + e_i + e_j`.
pub fn derivative_hessian(p: &MultiPoly, alpha: &ExponentVector) -> SymmetricMatrix {
    let m = p.vars().len();
    let mut h = Matrix::zeros(m);
    let mut gamma = alpha.clone();
    for i in 0..m {
        for j in i..m {
            gamma.0[i] += 1;
            gamma.0[j] += 1;
            if let Some(c) = p.coefficient_ref(&gamma) {
                let v = c * Coeff::from_integer(gamma.factorial());
                h.set(i, j, v.clone());
                h.set(j, i, v);
            }
            gamma.0[i] -= 1;
            gamma.0[j] -= 1;
        }
    }
    SymmetricMatrix::new(h).expect("filled symmetrically")
}

/// Number of multisets of size `d - 2` drawn from `m` variables.
pub fn hessian_count(m: usize, d: i64) -> BigUint {
    if d < 2 || m == 0 {
        return BigUint::zero();
    }
    let r = (d - 2) as usize;
    binomial(BigUint::from(r + m - 1), BigUint::from(m - 1))
}

fn derivative_multisets(m: usize, r: usize) -> Vec<ExponentVector> {
    (0..m)
        .combinations_with_replacement(r)
        .map(|idx| {
            let mut e = vec![0u32; m];
            for i in idx {
                e[i] += 1;
            }
            ExponentVector(e)
        })
        .collect()
}

fn hessian_witness(p: &MultiPoly, alpha: &ExponentVector) -> Option<Witness> {
    let h = derivative_hessian(p, alpha);
    if h.matrix().is_zero() {
        return None;
    }
    let pos = positive_eigenvalue_count(&h);
    (pos > 1).then(|| Witness::HessianInertia {
        derivative: alpha.0.clone(),
        hessian: h.matrix().to_strings(),
        positive_eigenvalues: pos,
    })
}

struct Scan {
    checked: u64,
    failures: Vec<Witness>,
}

/// Runs the eigenvalue condition over every `(d-2)`-th derivative.
fn scan_hessians(p: &MultiPoly, opts: &CertifyOptions) -> Result<Scan> {
    let d = p.degree();
    let m = p.vars().len();
    if d < 2 {
        return Ok(Scan {
            checked: 0,
            failures: Vec::new(),
        });
    }
    let count = hessian_count(m, d);
    if count > BigUint::from(opts.max_hessians) {
        return Err(Error::GuardExceeded {
            what: "Hessian count",
            got: count.to_u128().unwrap_or(u128::MAX),
            limit: opts.max_hessians as u128,
        });
    }
    let alphas = derivative_multisets(m, (d - 2) as usize);
    let total = alphas.len() as u64;
    if opts.exhaustive {
        let failures: Vec<Witness> = if opts.parallel {
            alphas
                .par_iter()
                .filter_map(|a| hessian_witness(p, a))
                .collect()
        } else {
            alphas.iter().filter_map(|a| hessian_witness(p, a)).collect()
        };
        return Ok(Scan {
            checked: total,
            failures,
        });
    }
    let fails = |a: &ExponentVector| {
        let h = derivative_hessian(p, a);
        !h.matrix().is_zero() && positive_eigenvalue_count(&h) > 1
    };
    let first = if opts.parallel {
        alphas.par_iter().position_first(fails)
    } else {
        alphas.iter().position(fails)
    };
    Ok(match first {
        None => Scan {
            checked: total,
            failures: Vec::new(),
        },
        Some(idx) => Scan {
            checked: idx as u64 + 1,
            failures: vec![hessian_witness(p, &alphas[idx]).expect("failing index")],
        },
    })
}

fn negative_witness(p: &MultiPoly) -> Option<Witness> {
    p.terms()
        .rev()
        .find(|(_, c)| c < &&Coeff::zero())
        .map(|(e, c)| Witness::NegativeCoefficient {
            exp: e.0.clone(),
            coef: c.to_string(),
        })
}

fn support_witness(p: &MultiPoly) -> Result<Option<Witness>> {
    // largest exponents first, matching the serialised term order
    let supp = p.support();
    Ok(exchange_failure(supp.iter().rev())?.map(|f| Witness::SupportNotMConvex {
        variable: p.vars().name(f.i).to_string(),
        alpha: f.alpha.0,
        beta: f.beta.0,
        i: f.i,
    }))
}

/// M-convexity of a set of lattice points, as a certificate.
pub fn is_m_convex(set: &[ExponentVector]) -> Result<Certificate> {
    Ok(match exchange_failure(set)? {
        None => Certificate::certified(0),
        Some(f) => Certificate::refuted(
            Witness::SupportNotMConvex {
                variable: format!("#{}", f.i),
                alpha: f.alpha.0,
                beta: f.beta.0,
                i: f.i,
            },
            0,
        ),
    })
}

fn certify_from_scan(scan: Scan) -> Certificate {
    let mut failures = scan.failures;
    match failures.first().cloned() {
        None => Certificate::certified(scan.checked),
        Some(w) => {
            let mut c = Certificate::refuted(w, scan.checked);
            if failures.len() > 1 {
                c.failures = std::mem::take(&mut failures);
            }
            c
        }
    }
}

pub fn is_lorentzian(p: &MultiPoly) -> Result<Certificate> {
    is_lorentzian_with(p, &CertifyOptions::default())
}

pub fn is_lorentzian_with(p: &MultiPoly, opts: &CertifyOptions) -> Result<Certificate> {
    if !p.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    if p.is_zero() {
        return Ok(Certificate::certified(0));
    }
    if let Some(w) = negative_witness(p) {
        return Ok(Certificate::refuted(w, 0));
    }
    if let Some(w) = support_witness(p)? {
        return Ok(Certificate::refuted(w, 0));
    }
    Ok(certify_from_scan(scan_hessians(p, opts)?))
}

/// Bivariate route: non-negative, ultra log-concave coefficient sequence
/// with no internal zeros.
pub fn is_lorentzian_bivariate(p: &MultiPoly) -> Result<Certificate> {
    if p.vars().len() != 2 {
        return Err(Error::NotBivariate(p.vars().len()));
    }
    if !p.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    if p.is_zero() {
        return Ok(Certificate::certified(0));
    }
    if let Some(w) = negative_witness(p) {
        return Ok(Certificate::refuted(w, 0));
    }
    let d = p.degree() as usize;
    let seq: Vec<Coeff> = (0..=d)
        .map(|k| p.coefficient(&ExponentVector(vec![k as u32, (d - k) as u32])))
        .collect();
    if crate::sequences::has_internal_zeros(&seq) {
        let w = support_witness(p)?.expect("internal zero breaks exchange");
        return Ok(Certificate::refuted(w, 0));
    }
    Ok(match ultra_log_concave_violation(&seq, d)? {
        None => Certificate::certified(0),
        Some(k) => Certificate::refuted(Witness::NotUltraLogConcave { k }, 0),
    })
}

/// `(x y)^k * homog(C(g))` where `x` is the bound variable and `y` the
/// homogenising one. Returns the polynomial with `y`'s name.
pub fn pre_lorentzian_target(g: &PartitionedGraph, k: u32) -> Result<(MultiPoly, String)> {
    let c = coloured_indep_poly(g.coloured());
    let y = c.vars().fresh_name("y");
    let homog = c.homogenize(&y)?;
    Ok((shift_xy(&homog, g.bound_colour(), &y, k)?, y))
}

fn shift_xy(p: &MultiPoly, x: &str, y: &str, k: u32) -> Result<MultiPoly> {
    let xi = p.vars().require(x)?;
    let yi = p.vars().require(y)?;
    let terms = p.terms().map(|(e, c)| {
        let mut e = e.clone();
        e.0[xi] += k;
        e.0[yi] += k;
        (e, c.clone())
    });
    MultiPoly::from_terms(p.vars().clone(), terms)
}

/// Searches `k = 0..=k_max` for `(xy)^k homog(C(g))` passing the Hessian
/// condition. The support is checked once, since the `(xy)^k` shift does not
/// change M-convexity. No monotonicity in `k` is assumed.
pub fn is_pre_lorentzian(
    g: &PartitionedGraph,
    k_max: u32,
    opts: &CertifyOptions,
) -> Result<Certificate> {
    if g.graph().is_empty() {
        let mut c = Certificate::certified(0);
        c.k = Some(0);
        return Ok(c);
    }
    let c = coloured_indep_poly(g.coloured());
    let y = c.vars().fresh_name("y");
    let homog = c.homogenize(&y)?;
    if let Some(w) = negative_witness(&homog) {
        return Ok(Certificate::refuted(w, 0));
    }
    if let Some(w) = support_witness(&homog)? {
        return Ok(Certificate::refuted(w, 0));
    }
    let mut checked = 0;
    let mut last = None;
    for k in 0..=k_max {
        let target = shift_xy(&homog, g.bound_colour(), &y, k)?;
        let scan = scan_hessians(&target, opts)?;
        checked += scan.checked;
        if scan.failures.is_empty() {
            let mut cert = Certificate::certified(checked);
            cert.k = Some(k);
            return Ok(cert);
        }
        last = Some(scan.failures);
    }
    let mut failures = last.unwrap_or_default();
    Ok(Certificate {
        verdict: Verdict::Inconclusive,
        k: None,
        k_max: Some(k_max),
        witness: failures.first().cloned(),
        hessians_checked: checked,
        failures: if failures.len() > 1 {
            std::mem::take(&mut failures)
        } else {
            Vec::new()
        },
    })
}

impl Witness {
    /// Re-checks the failure against `p` by a route independent of the one
    /// that produced it: symbolic differentiation for Hessians, a fresh
    /// membership check for exchange failures.
    pub fn confirms(&self, p: &MultiPoly) -> Result<bool> {
        Ok(match self {
            Witness::NegativeCoefficient { exp, .. } => {
                p.coefficient(&ExponentVector(exp.clone())) < Coeff::zero()
            }
            Witness::SupportNotMConvex { alpha, beta, i, .. } => {
                let f = super::mconvex::ExchangeFailure {
                    alpha: ExponentVector(alpha.clone()),
                    beta: ExponentVector(beta.clone()),
                    i: *i,
                };
                f.verify(&p.support())
            }
            Witness::HessianInertia { derivative, .. } => {
                let q2 = p.derivative(&ExponentVector(derivative.clone()))?;
                positive_eigenvalue_count(&hessian(&q2)?) > 1
            }
            Witness::NotUltraLogConcave { k } => {
                let d = p.degree().max(0) as usize;
                let seq: Vec<Coeff> = (0..=d)
                    .map(|m| p.coefficient(&ExponentVector(vec![m as u32, (d - m) as u32])))
                    .collect();
                ultra_log_concave_violation(&seq, d)? == Some(*k)
            }
        })
    }
}

/// Convenience: single-variable-list polynomial from `(exponents, integer)` pairs.
pub fn poly_from_ints(vars: &[&str], terms: &[(&[u32], i64)]) -> Result<MultiPoly> {
    let vl = VarList::new(vars.iter().copied())?;
    MultiPoly::from_terms(
        vl,
        terms
            .iter()
            .map(|(e, c)| (ExponentVector(e.to_vec()), Coeff::from_integer((*c).into()))),
    )
}
