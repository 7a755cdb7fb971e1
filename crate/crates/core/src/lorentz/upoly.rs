//! Dense univariate polynomials over the rationals, lowest degree first.
//! Only what characteristic-polynomial work needs: arithmetic, division,
//! gcd and sign-change counting.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::poly::Coeff;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly(Vec<Coeff>);

impl UniPoly {
    pub fn new(mut coeffs: Vec<Coeff>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly(coeffs)
    }

    pub fn zero() -> Self {
        UniPoly(Vec::new())
    }

    pub fn one() -> Self {
        UniPoly(vec![Coeff::one()])
    }

    /// `t + a`
    pub fn linear(a: Coeff) -> Self {
        UniPoly::new(vec![a, Coeff::one()])
    }

    pub fn coeffs(&self) -> &[Coeff] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Coeff> {
        self.0.last()
    }

    pub fn eval(&self, t: &Coeff) -> Coeff {
        self.0
            .iter()
            .rev()
            .fold(Coeff::zero(), |acc, c| acc * t + c)
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Coeff::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    pub fn pow(&self, e: u32) -> UniPoly {
        (0..e).fold(UniPoly::one(), |acc, _| acc.mul(self))
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.0.clone();
        if rem.len() <= dd {
            return (UniPoly::zero(), self.clone());
        }
        let mut quot = vec![Coeff::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lead;
            if !c.is_zero() {
                for (j, d) in divisor.0.iter().enumerate() {
                    rem[k + j] -= &c * d;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            None => UniPoly::zero(),
            Some(l) => UniPoly(self.0.iter().map(|c| c / l).collect()),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `p(-t)`
    pub fn reflect(&self) -> UniPoly {
        UniPoly(
            self.0
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        )
    }

    /// Multiplicity of the root `0`.
    pub fn zero_root_multiplicity(&self) -> usize {
        self.0.iter().take_while(|c| c.is_zero()).count()
    }

    /// Sign changes in the coefficient sequence, zeros skipped.
    pub fn sign_changes(&self) -> usize {
        let signs: Vec<bool> = self
            .0
            .iter()
            .filter(|c| !c.is_zero())
            .map(Signed::is_positive)
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("{c}"),
                1 => format!("{c}*t"),
                _ => format!("{c}*t^{k}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int;

    fn up(v: &[i64]) -> UniPoly {
        UniPoly::new(v.iter().map(|&x| int(x)).collect())
    }

    #[test]
    fn division_and_gcd() {
        // (t+1)(t+2) and (t+1)(t+3)
        let p = up(&[1, 1]).mul(&up(&[2, 1]));
        let q = up(&[1, 1]).mul(&up(&[3, 1]));
        assert_eq!(p.gcd(&q), up(&[1, 1]));
        let (quot, rem) = p.div_rem(&up(&[1, 1]));
        assert_eq!(quot, up(&[2, 1]));
        assert!(rem.is_zero());
        let (_, rem) = up(&[1, 0, 1]).div_rem(&up(&[1, 1]));
        assert_eq!(rem, up(&[2]));
    }

    #[test]
    fn signs_and_roots() {
        // t(t-1)(t+2) = t^3 + t^2 - 2t
        let p = up(&[0, -2, 1, 1]);
        assert_eq!(p.zero_root_multiplicity(), 1);
        assert_eq!(p.sign_changes(), 1);
        assert_eq!(p.reflect().sign_changes(), 1);
        assert_eq!(p.eval(&int(1)), int(0));
    }
}
