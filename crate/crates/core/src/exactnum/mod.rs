//! Exact rational scalars and dense rational matrices.
//!
//! Every other module computes on these types; nothing in the core path
//! touches floating point.

mod matrix;
mod rational;

pub use matrix::{bilinear_form, matrix_rank, BimatrixGame, GameMatrix};
pub use rational::{op_count, rational_from_text, Rational};

/// Integer vector to rationals.
pub fn rvec(xs: &[i64]) -> Vec<Rational> {
    xs.iter().map(|&x| Rational::from(x)).collect()
}

/// Standard basis vector `e_i` of length `len`, 1-based.
pub fn unit_vector(len: usize, i: usize) -> Vec<Rational> {
    (1..=len)
        .map(|k| if k == i { Rational::one() } else { Rational::zero() })
        .collect()
}

/// `Σ x_i y_i`.
pub fn dot(x: &[Rational], y: &[Rational]) -> Rational {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}
