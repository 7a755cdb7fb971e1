//! Log-concavity, ultra log-concavity, unimodality and internal zeros of
//! non-negative sequences. All comparisons are exact (cross-multiplied
//! rationals), never floating point.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::Coeff;

/// Smallest interior `k` with `s_k^2 < s_{k-1} s_{k+1}`, if any.
pub fn log_concave_violation(s: &[Coeff]) -> Option<usize> {
    (1..s.len().saturating_sub(1)).find(|&k| &s[k] * &s[k] < &s[k - 1] * &s[k + 1])
}

pub fn is_log_concave(s: &[Coeff]) -> bool {
    log_concave_violation(s).is_none()
}

fn binom(n: usize, k: usize) -> Coeff {
    Coeff::from_integer(binomial(BigInt::from(n), BigInt::from(k)))
}

/// Smallest `k` violating ultra log-concavity with respect to ambient degree `n`.
///
/// The sequence is read as `(s_0, ..., s_n)` padded with zeros.
pub fn ultra_log_concave_violation(s: &[Coeff], n: usize) -> Result<Option<usize>> {
    if s.len() > n + 1 {
        return Err(Error::InvalidArgument(format!(
            "sequence of length {} does not fit ambient degree {n}",
            s.len()
        )));
    }
    let at = |k: usize| s.get(k).cloned().unwrap_or_else(Coeff::zero);
    for k in 1..n {
        let lhs = (at(k) / binom(n, k)).pow(2);
        let rhs = at(k - 1) / binom(n, k - 1) * (at(k + 1) / binom(n, k + 1));
        if lhs < rhs {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

pub fn is_ultra_log_concave(s: &[Coeff], n: usize) -> Result<bool> {
    Ok(ultra_log_concave_violation(s, n)?.is_none())
}

/// Weakly increasing up to some index, weakly decreasing after it.
pub fn is_unimodal(s: &[Coeff]) -> bool {
    let mut k = 0;
    while k + 1 < s.len() && s[k] <= s[k + 1] {
        k += 1;
    }
    while k + 1 < s.len() && s[k] >= s[k + 1] {
        k += 1;
    }
    k + 1 >= s.len()
}

/// A zero strictly between two non-zero entries.
pub fn has_internal_zeros(s: &[Coeff]) -> bool {
    let first = s.iter().position(|x| !x.is_zero());
    let last = s.iter().rposition(|x| !x.is_zero());
    match (first, last) {
        (Some(a), Some(b)) => s[a..=b].iter().any(Zero::is_zero),
        _ => false,
    }
}

pub fn first_negative(s: &[Coeff]) -> Option<usize> {
    s.iter().position(Signed::is_negative)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int;

    fn q(v: &[i64]) -> Vec<Coeff> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn log_concavity() {
        assert!(is_log_concave(&q(&[1, 4, 3])));
        assert_eq!(log_concave_violation(&q(&[1, 1, 2])), Some(1));
        assert!(is_log_concave(&q(&[])));
        assert!(is_log_concave(&q(&[5])));
        assert!(!is_log_concave(&q(&[1, 0, 1])));
    }

    #[test]
    fn ultra_log_concavity() {
        assert!(is_ultra_log_concave(&q(&[1, 2, 1]), 2).unwrap());
        assert!(!is_ultra_log_concave(&q(&[1, 1, 1]), 2).unwrap());
        assert!(is_ultra_log_concave(&q(&[1, 1, 1]), 5).is_ok());
        assert!(is_ultra_log_concave(&q(&[1, 2, 1]), 1).is_err());
        // padding with leading zeros keeps it ultra log-concave
        assert!(is_ultra_log_concave(&q(&[0, 0, 1, 2, 1, 0, 0]), 6).unwrap());
    }

    #[test]
    fn unimodal_and_zeros() {
        assert!(is_unimodal(&q(&[1, 3, 2])));
        assert!(is_unimodal(&q(&[1, 1, 1])));
        assert!(!is_unimodal(&q(&[2, 1, 2])));
        assert!(has_internal_zeros(&q(&[1, 0, 1])));
        assert!(!has_internal_zeros(&q(&[0, 1, 1, 0])));
        assert!(!has_internal_zeros(&q(&[0, 0])));
    }
}
