//! Exact arithmetic for zero-square matrices over Bezout domains.
//!
//! A square matrix `T` with `T^2 = 0` of size 2 or 3 over a Bezout domain is
//! similar to `r E_1n` with `r = gcd(T)`. This crate decides zero-squareness,
//! builds the explicit change of basis `U` with `T U = U (r E_1n)`, checks such
//! certificates, and produces rank obstructions showing that the statement
//! fails from size 4 on.
//!
//! - [`ring`]: integers, prime fields and `Z_2[X,Y]/(X^2,Y^2)`.
//! - [`matrix`]: dense exact matrices, minors, determinant.
//! - [`vec3`]: dot/cross products and unimodular completion in dimension 3.
//! - [`normal`]: factorization, normalization, certificates, obstructions.
//! - [`oracle`]: seeded generators and brute-force ground truth.
//! - [`cli`]: the `zerosquare` command-line tool.

pub mod cli;
pub mod error;
pub mod matrix;
pub mod normal;
pub mod oracle;
pub mod ring;
pub mod vec3;

pub use error::{Error, Result};
pub use matrix::{Matrix, MatrixJson, MinorIndex};
pub use normal::{
    check_domain_necessary, counterexample, factor_rank_one_3x3, is_zero_square, normalize, normalize_2x2,
    normalize_3x3, obstruction_witness, theorem_2min_check, verify_certificate, CertificateJson, FailReason,
    ObstructionWitness, RankOneFactorization, SimilarityCertificate, Verification,
};
pub use ring::{Elem, Ring};
pub use vec3::{complete_orthogonal, Completion, Vec3};
