//! Exact rational matrices, characteristic polynomials and inertia.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use super::upoly::UniPoly;
use crate::error::{Error, Result};
use crate::poly::{int, Coeff};

/// Dense square matrix of exact rationals, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    n: usize,
    data: Vec<Coeff>,
}

impl Matrix {
    pub fn zeros(n: usize) -> Self {
        Matrix {
            n,
            data: vec![Coeff::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = Coeff::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Coeff>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::NotSquare);
        }
        Ok(Matrix {
            n,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| int(x)).collect())
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Coeff {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Coeff) {
        self.data[i * self.n + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<Coeff>> {
        self.data.chunks(self.n.max(1)).take(self.n).map(<[Coeff]>::to_vec).collect()
    }

    /// Entries as decimal or `p/q` strings, for JSON output.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.rows()
            .into_iter()
            .map(|r| r.into_iter().map(|c| c.to_string()).collect())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// First `(i, j)` with `M[i][j] != M[j][i]`.
    pub fn asymmetry(&self) -> Option<(usize, usize)> {
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.get(i, j) != self.get(j, i) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn trace(&self) -> Coeff {
        (0..self.n).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn scale(&self, c: &Coeff) -> Matrix {
        Matrix {
            n: self.n,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let n = self.n;
        let mut out = Matrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    /// Determinant by Gaussian elimination over the rationals.
    pub fn det(&self) -> Coeff {
        let n = self.n;
        let mut a = self.data.clone();
        let mut det = Coeff::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[r * n + col].is_zero()) else {
                return Coeff::zero();
            };
            if p != col {
                for j in 0..n {
                    a.swap(p * n + j, col * n + j);
                }
                det = -det;
            }
            let pivot = a[col * n + col].clone();
            det *= &pivot;
            for r in col + 1..n {
                let factor = &a[r * n + col] / &pivot;
                if factor.is_zero() {
                    continue;
                }
                for j in col..n {
                    let v = &factor * &a[col * n + j];
                    a[r * n + j] -= v;
                }
            }
        }
        det
    }

    /// Sum of the principal minors of size `n - 1` (for 3x3: `A_11 + A_22 + A_33`).
    pub fn principal_minor_sum(&self) -> Coeff {
        let n = self.n;
        (0..n)
            .map(|skip| {
                let rows = (0..n)
                    .filter(|&i| i != skip)
                    .map(|i| {
                        (0..n)
                            .filter(|&j| j != skip)
                            .map(|j| self.get(i, j).clone())
                            .collect()
                    })
                    .collect();
                Matrix::from_rows(rows).expect("square").det()
            })
            .sum()
    }

    /// `det(t I - M)` by the Faddeev–LeVerrier recursion.
    pub fn charpoly(&self) -> UniPoly {
        let n = self.n;
        let mut c = vec![Coeff::zero(); n + 1];
        c[n] = Coeff::one();
        let mut mk = Matrix::zeros(n);
        for k in 1..=n {
            // M_k = A M_{k-1} + c_{n-k+1} I
            let mut next = self.mul(&mk);
            for i in 0..n {
                next.data[i * n + i] += &c[n - k + 1];
            }
            let am = self.mul(&next);
            c[n - k] = -am.trace() / int(k as i64);
            mk = next;
        }
        UniPoly::new(c)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, r) in self.to_strings().iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "[{}]", r.join(", "))?;
        }
        Ok(())
    }
}

/// A matrix known to equal its transpose.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricMatrix(Matrix);

impl SymmetricMatrix {
    pub fn new(m: Matrix) -> Result<Self> {
        if let Some((i, j)) = m.asymmetry() {
            return Err(Error::NotSymmetric(i, j));
        }
        Ok(SymmetricMatrix(m))
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn inertia(&self) -> Inertia {
        Inertia::of_real_rooted(&self.0.charpoly())
    }
}

/// Counts of positive, negative and zero eigenvalues, with multiplicity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Inertia {
    /// Reads the inertia off a real-rooted polynomial by Descartes' rule of
    /// signs, which is exact when every root is real.
    pub fn of_real_rooted(p: &UniPoly) -> Inertia {
        let zero = p.zero_root_multiplicity();
        let stripped = UniPoly::new(p.coeffs()[zero..].to_vec());
        Inertia {
            positive: stripped.sign_changes(),
            negative: stripped.reflect().sign_changes(),
            zero,
        }
    }
}

/// Exact number of strictly positive eigenvalues.
pub fn positive_eigenvalue_count(m: &SymmetricMatrix) -> usize {
    m.inertia().positive
}

/// Positive-eigenvalue count of a raw matrix, rejecting asymmetric input.
pub fn positive_eigenvalue_count_checked(m: &Matrix) -> Result<usize> {
    Ok(positive_eigenvalue_count(&SymmetricMatrix::new(m.clone())?))
}
