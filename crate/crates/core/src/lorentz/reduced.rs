//! Reduced 3x3 forms of block-symmetric Hessians, the sign-pattern test for
//! a single positive eigenvalue, and the closed-form case matrices for the
//! leafy-star family.

use num_integer::binomial;
use num_traits::{One, Signed, Zero};

use super::certify::hessian;
use super::matrix::{Matrix, SymmetricMatrix};
use crate::error::{Error, Result};
use crate::poly::{int, Coeff, ExponentVector, MultiPoly, VarList};

/// Parameters of an `(n+2) x (n+2)` symmetric matrix whose leading `n x n`
/// block has zero diagonal and constant `a` off it, followed by two rows
/// that are constant (`b`, `c`) across that block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedHessianParams {
    n: usize,
    a: Coeff,
    b: Coeff,
    c: Coeff,
    d: Coeff,
    e: Coeff,
    f: Coeff,
}

impl ReducedHessianParams {
    pub fn new(n: usize, a: Coeff, b: Coeff, c: Coeff, d: Coeff, e: Coeff, f: Coeff) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidArgument(format!("block size must be at least 2, got {n}")));
        }
        for (name, v) in [("a", &a), ("b", &b), ("c", &c), ("d", &d), ("e", &e), ("f", &f)] {
            if v.is_negative() {
                return Err(Error::InvalidArgument(format!("parameter {name} is negative: {v}")));
            }
        }
        Ok(ReducedHessianParams { n, a, b, c, d, e, f })
    }

    pub fn from_ints(n: usize, v: [i64; 6]) -> Result<Self> {
        let [a, b, c, d, e, f] = v.map(int);
        ReducedHessianParams::new(n, a, b, c, d, e, f)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Reads the parameters back off a full matrix, if it has the block shape.
    pub fn extract(m: &Matrix) -> Option<Self> {
        let size = m.dim();
        if size < 4 {
            return None;
        }
        let n = size - 2;
        let (x, y) = (n, n + 1);
        let a = m.get(0, 1).clone();
        let b = m.get(0, x).clone();
        let c = m.get(0, y).clone();
        for i in 0..n {
            if !m.get(i, i).is_zero() || m.get(i, x) != &b || m.get(i, y) != &c {
                return None;
            }
            for j in 0..n {
                if i != j && m.get(i, j) != &a {
                    return None;
                }
            }
        }
        if m.asymmetry().is_some() {
            return None;
        }
        ReducedHessianParams::new(
            n,
            a,
            b,
            c,
            m.get(x, x).clone(),
            m.get(y, y).clone(),
            m.get(x, y).clone(),
        )
        .ok()
    }
}

/// The full `(n+2) x (n+2)` matrix described by `p`.
pub fn block_matrix(p: &ReducedHessianParams) -> SymmetricMatrix {
    let n = p.n;
    let mut m = Matrix::zeros(n + 2);
    for i in 0..n {
        for j in 0..n {
            if i != j {
                m.set(i, j, p.a.clone());
            }
        }
        m.set(i, n, p.b.clone());
        m.set(n, i, p.b.clone());
        m.set(i, n + 1, p.c.clone());
        m.set(n + 1, i, p.c.clone());
    }
    m.set(n, n, p.d.clone());
    m.set(n + 1, n + 1, p.e.clone());
    m.set(n, n + 1, p.f.clone());
    m.set(n + 1, n, p.f.clone());
    SymmetricMatrix::new(m).expect("filled symmetrically")
}

/// `[[(n-1)a, b, c], [n b, d, f], [n c, f, e]]`; not symmetric in general.
pub fn reduced_hessian(p: &ReducedHessianParams) -> Matrix {
    let n = int(p.n as i64);
    let rows = vec![
        vec![&p.a * (&n - Coeff::one()), p.b.clone(), p.c.clone()],
        vec![&n * &p.b, p.d.clone(), p.f.clone()],
        vec![&n * &p.c, p.f.clone(), p.e.clone()],
    ];
    Matrix::from_rows(rows).expect("3x3")
}

/// Trace positive, sum of 2x2 principal minors non-positive, determinant
/// non-negative. With real eigenvalues this forces exactly one positive one.
pub fn descartes_positive_sign_test(a: &Matrix) -> Result<bool> {
    if a.dim() != 3 {
        return Err(Error::InvalidArgument(format!("expected a 3x3 matrix, got {0}x{0}", a.dim())));
    }
    Ok(a.trace().is_positive() && !a.principal_minor_sum().is_positive() && !a.det().is_negative())
}

fn check_case(case: u32) -> Result<()> {
    if (2..=4).contains(&case) {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("case must be 2, 3 or 4, got {case}")))
    }
}

fn c(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        0
    } else {
        binomial(n, k)
    }
}

/// Closed-form reduced Hessian for derivative order `l = k - 1, k, k + 1`
/// (cases 2, 3, 4), factorial factor already removed.
pub fn case_reduced_hessian(case: u32, n: u64, k: u64) -> Result<Matrix> {
    check_case(case)?;
    if n < 3 {
        return Err(Error::InvalidArgument(format!("n must be at least 3, got {n}")));
    }
    let (n, k) = (n as i64, k as i64);
    let rows: [[i64; 3]; 3] = match case {
        2 => [
            [0, k, 0],
            [n * k, k * (n + 1) * (k + 1), k * (n + k)],
            [0, k * (n + k), 0],
        ],
        3 => [
            [n - 1, (k + 1) * (n - 1), n + k - 1],
            [
                n * (k + 1) * (n - 1),
                (k + 2) * (k + 1) * c(n, 2),
                (k + 1) * (n + k - 1) * (n + 1),
            ],
            [
                n * (n + k - 1),
                (k + 1) * (n + k - 1) * (n + 1),
                (n + k) * (n + k - 1),
            ],
        ],
        _ => [
            [(n - 1) * (n - 2), (k + 2) * c(n - 1, 2), (n + k - 2) * (n - 1)],
            [
                n * (k + 2) * c(n - 1, 2),
                (k + 3) * (k + 2) * c(n, 3),
                (k + 2) * (n + k - 2) * c(n, 2),
            ],
            [
                n * (n + k - 2) * (n - 1),
                (k + 2) * (n + k - 2) * c(n, 2),
                (n + 1) * (n + k - 1) * (n + k - 2),
            ],
        ],
    };
    Matrix::from_ints(&[&rows[0], &rows[1], &rows[2]])
}

/// Leading-in-`k` part of the case 3 or 4 matrix; its determinant is the
/// `k^4` coefficient of the full determinant.
pub fn case_simplified_matrix(case: u32, n: u64) -> Result<Matrix> {
    if case != 3 && case != 4 {
        return Err(Error::InvalidArgument(format!("simplified matrix exists for cases 3 and 4, got {case}")));
    }
    if n < 3 {
        return Err(Error::InvalidArgument(format!("n must be at least 3, got {n}")));
    }
    let n = n as i64;
    if case == 3 {
        Matrix::from_ints(&[
            &[n - 1, n - 1, 1],
            &[n * (n - 1), c(n, 2), n + 1],
            &[n, n + 1, 1],
        ])
    } else {
        Matrix::from_ints(&[
            &[(n - 1) * (n - 2), c(n - 1, 2), n - 1],
            &[n * c(n - 1, 2), c(n, 3), c(n, 2)],
            &[n * (n - 1), c(n, 2), n + 1],
        ])
    }
}

/// `x^{k+1} y^{n+k-1} + x^k y^k prod_i (x + x_i + y)` in variables
/// `x1..xn, x, y`.
pub fn leafy_q(n: usize, k: u32) -> Result<MultiPoly> {
    let mut names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    names.push("x".into());
    names.push("y".into());
    let vars = VarList::new(names)?;
    let x = MultiPoly::var(vars.clone(), "x")?;
    let y = MultiPoly::var(vars.clone(), "y")?;
    let mut prod = MultiPoly::one(vars.clone());
    for i in 1..=n {
        let xi = MultiPoly::var(vars.clone(), &format!("x{i}"))?;
        prod = prod.mul(&x.add(&xi)?.add(&y)?)?;
    }
    let head = x.pow(k + 1).mul(&y.pow(n as u32 + k - 1))?;
    let tail = x.mul(&y)?.pow(k).mul(&prod)?;
    head.add(&tail)
}

fn factorial(m: u64) -> Coeff {
    (1..=m as i64).fold(Coeff::one(), |acc, i| acc * int(i))
}

/// Rebuilds the case matrix from `leafy_q` by symbolic differentiation and
/// compares it with [`case_reduced_hessian`].
pub fn verify_case_matrix_against_direct_hessian(case: u32, n: u64, k: u64) -> Result<bool> {
    check_case(case)?;
    if !(3..=5).contains(&n) || k > 4 || (case == 2 && k == 0) {
        return Err(Error::InvalidArgument(format!(
            "direct expansion supports n in 3..=5 and k <= 4 (k >= 1 for case 2), got n={n}, k={k}"
        )));
    }
    let q = leafy_q(n as usize, k as u32)?;
    let l = k + case as u64 - 3;
    let ly = n + 2 * k - 2 - l;
    let mut alpha = vec![0u32; n as usize + 2];
    alpha[n as usize] = l as u32;
    alpha[n as usize + 1] = ly as u32;
    let q2 = q.derivative(&ExponentVector(alpha))?;
    let h = hessian(&q2)?;
    let Some(params) = ReducedHessianParams::extract(h.matrix()) else {
        return Ok(false);
    };
    let scale = (factorial(l) * factorial(ly)).recip();
    let reduced = reduced_hessian(&params).scale(&scale);
    Ok(reduced == case_reduced_hessian(case, n, k)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lorentz::upoly::UniPoly;

    #[test]
    fn reduced_formula() {
        let p = ReducedHessianParams::from_ints(2, [1, 2, 3, 4, 5, 6]).unwrap();
        assert_eq!(
            reduced_hessian(&p),
            Matrix::from_ints(&[&[1, 2, 3], &[4, 4, 6], &[6, 6, 5]]).unwrap()
        );
        assert!(ReducedHessianParams::from_ints(1, [1; 6]).is_err());
        assert!(ReducedHessianParams::from_ints(3, [1, -1, 0, 0, 0, 0]).is_err());
    }

    #[test]
    fn charpoly_factors() {
        let p = ReducedHessianParams::from_ints(4, [2, 1, 3, 5, 7, 1]).unwrap();
        let full = block_matrix(&p).matrix().charpoly();
        let red = reduced_hessian(&p).charpoly();
        let expected = UniPoly::linear(int(2)).pow(3).mul(&red);
        assert_eq!(full, expected);
        assert_eq!(ReducedHessianParams::extract(block_matrix(&p).matrix()), Some(p));
    }

    #[test]
    fn sign_test_examples() {
        let d = Matrix::from_ints(&[&[1, 0, 0], &[0, -1, 0], &[0, 0, -1]]).unwrap();
        assert!(!descartes_positive_sign_test(&d).unwrap());
        let case2 = case_reduced_hessian(2, 3, 2).unwrap();
        assert_eq!(case2.det(), int(0));
        assert!(descartes_positive_sign_test(&case2).unwrap());
        assert!(!descartes_positive_sign_test(&case_reduced_hessian(3, 3, 2).unwrap()).unwrap());
        assert!(descartes_positive_sign_test(&case_reduced_hessian(3, 3, 50).unwrap()).unwrap());
        assert!(descartes_positive_sign_test(&Matrix::identity(2)).is_err());
    }

    #[test]
    fn case2_minor_sum_closed_form() {
        for n in 3..=6i64 {
            for k in 1..=5i64 {
                let m = case_reduced_hessian(2, n as u64, k as u64).unwrap();
                assert_eq!(m.principal_minor_sum(), int(-n * k * k - k * k * (n + k) * (n + k)));
            }
        }
    }

    #[test]
    fn direct_examples() {
        assert!(verify_case_matrix_against_direct_hessian(2, 3, 2).unwrap());
        assert!(verify_case_matrix_against_direct_hessian(3, 3, 2).unwrap());
        assert!(verify_case_matrix_against_direct_hessian(4, 4, 3).unwrap());
        assert!(verify_case_matrix_against_direct_hessian(5, 3, 2).is_err());
        assert!(verify_case_matrix_against_direct_hessian(2, 6, 2).is_err());
    }

    #[test]
    fn simplified_determinants_small() {
        assert_eq!(case_simplified_matrix(3, 3).unwrap().det(), int(1));
        assert_eq!(case_simplified_matrix(4, 3).unwrap().det(), int(2));
        assert!(case_simplified_matrix(2, 3).is_err());
    }
}
