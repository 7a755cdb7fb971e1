use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::poly::ExponentVector;

/// Failing instance of the exchange axiom: `alpha_i > beta_i`, yet no `j`
/// with `beta_j > alpha_j` has `alpha - e_i + e_j` in the set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExchangeFailure {
    pub alpha: ExponentVector,
    pub beta: ExponentVector,
    pub i: usize,
}

fn check_lengths<'a, I>(set: I) -> Result<()>
where
    I: IntoIterator<Item = &'a ExponentVector>,
{
    let mut len = None;
    for v in set {
        match len {
            None => len = Some(v.len()),
            Some(l) if l != v.len() => {
                return Err(Error::ExponentLength {
                    expected: l,
                    got: v.len(),
                })
            }
            _ => {}
        }
    }
    Ok(())
}

fn exchange_holds(
    members: &HashSet<&ExponentVector>,
    alpha: &ExponentVector,
    beta: &ExponentVector,
    i: usize,
) -> bool {
    let mut cand = alpha.clone();
    cand.0[i] -= 1;
    (0..alpha.len()).any(|j| {
        if beta.0[j] <= alpha.0[j] {
            return false;
        }
        cand.0[j] += 1;
        let hit = members.contains(&cand);
        cand.0[j] -= 1;
        hit
    })
}

/// First exchange-axiom failure in iteration order of `set` (pairs `(alpha,
/// beta)` in that order, then `i` ascending), or `None` if the set is M-convex.
pub fn exchange_failure<'a, I>(set: I) -> Result<Option<ExchangeFailure>>
where
    I: IntoIterator<Item = &'a ExponentVector>,
    I::IntoIter: Clone,
{
    let it = set.into_iter();
    check_lengths(it.clone())?;
    let items: Vec<&ExponentVector> = it.collect();
    let members: HashSet<&ExponentVector> = items.iter().copied().collect();
    for alpha in &items {
        for beta in &items {
            for i in 0..alpha.len() {
                if alpha.0[i] > beta.0[i] && !exchange_holds(&members, alpha, beta, i) {
                    return Ok(Some(ExchangeFailure {
                        alpha: (*alpha).clone(),
                        beta: (*beta).clone(),
                        i,
                    }));
                }
            }
        }
    }
    Ok(None)
}

impl ExchangeFailure {
    /// Re-checks that this witness really breaks the exchange axiom for `set`.
    pub fn verify<'a, I>(&self, set: I) -> bool
    where
        I: IntoIterator<Item = &'a ExponentVector>,
    {
        let members: HashSet<&ExponentVector> = set.into_iter().collect();
        members.contains(&self.alpha)
            && members.contains(&self.beta)
            && self.i < self.alpha.len()
            && self.alpha.0[self.i] > self.beta.0[self.i]
            && !exchange_holds(&members, &self.alpha, &self.beta, self.i)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector(v.to_vec())
    }

    #[test]
    fn simplex_is_m_convex() {
        let s = [ev(&[1, 0, 0]), ev(&[0, 1, 0]), ev(&[0, 0, 1])];
        assert!(exchange_failure(&s).unwrap().is_none());
    }

    #[test]
    fn two_corners_fail() {
        let s = [ev(&[2, 0]), ev(&[0, 2])];
        let w = exchange_failure(&s).unwrap().unwrap();
        assert_eq!(w, ExchangeFailure { alpha: ev(&[2, 0]), beta: ev(&[0, 2]), i: 0 });
        assert!(w.verify(&s));
        let full = [ev(&[2, 0]), ev(&[1, 1]), ev(&[0, 2])];
        assert!(!w.verify(&full));
    }

    #[test]
    fn mixed_lengths_rejected() {
        let s = [ev(&[1, 0]), ev(&[1])];
        assert!(exchange_failure(&s).is_err());
    }

    #[test]
    fn empty_and_singleton() {
        let none: [ExponentVector; 0] = [];
        assert!(exchange_failure(&none).unwrap().is_none());
        assert!(exchange_failure(&[ev(&[3, 1])]).unwrap().is_none());
    }
}
