//! Lorentzian certification and the supporting exact linear algebra.

pub mod certify;
pub mod matrix;
pub mod mconvex;
pub mod reduced;
pub mod upoly;

pub use certify::{
    derivative_hessian, hessian, is_lorentzian, is_lorentzian_bivariate, is_lorentzian_with,
    is_m_convex, is_pre_lorentzian, pre_lorentzian_target, Certificate, CertifyOptions, Verdict,
    Witness,
};
pub use matrix::{positive_eigenvalue_count, positive_eigenvalue_count_checked, Inertia, Matrix, SymmetricMatrix};
pub use mconvex::{exchange_failure, ExchangeFailure};
pub use reduced::{
    case_reduced_hessian, case_simplified_matrix, descartes_positive_sign_test, leafy_q,
    block_matrix, reduced_hessian, verify_case_matrix_against_direct_hessian,
    ReducedHessianParams,
};
pub use upoly::UniPoly;
