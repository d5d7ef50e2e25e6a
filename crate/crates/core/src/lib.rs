//! Detection of bimatrix games that are strategically equivalent to a
//! zero-sum game through a positive affine transformation, construction
//! of that zero-sum game in time linear in the game size, and exact
//! equilibrium computation.
//!
//! The pipeline, in order:
//!
//! 1. [`subspace::is_in_subspace_m`] tests each payoff matrix for the
//!    row-plus-column form `1_m u^T + v 1_n^T`; if either has it the game
//!    has a pure equilibrium.
//! 2. [`ser0::compute_gamma`] recovers the scale ratio from the shared
//!    residual witness.
//! 3. [`ser0::build_d`] forms `D = B~ + γ A~` and the rank case decides how
//!    the zero-sum game `(Â, -Â)` is assembled.
//! 4. [`nash::solve_zero_sum_lp`] solves it with an exact simplex.
//!
//! [`ser0::classify`] runs steps 1 to 3, [`nash::solve_strat_ne`] all of them.

pub mod error;
pub mod exactnum;
pub mod gamegen;
pub mod nash;
pub mod ser0;
pub mod subspace;

pub use error::{Error, Result};
pub use exactnum::{BimatrixGame, GameMatrix, Rational};
