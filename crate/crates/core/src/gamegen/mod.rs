//! Random game families with retained ground truth, and the timing
//! harness built on them.
//!
//! All generated payoffs are integers, so exact and floating-point
//! representations of the same instance agree entry for entry.

mod bench;
pub mod float;

pub use bench::{bench_run, ArithmeticMode, BenchConfig, BenchRecord, Family};

use std::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactnum::{BimatrixGame, GameMatrix, Rational};
use crate::ser0::Refusal;

/// Payoff kernels and transformation scalars are drawn from this range.
pub const DEFAULT_RANGE: RangeInclusive<i64> = -50..=50;

/// The transformation that produced a strategically zero-sum game:
/// `A~ = α₁ A + β₁ 1_m u^T`, `B~ = -α₂ A + β₂ v 1_n^T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundTruth {
    pub base_a: GameMatrix,
    pub alpha1: Rational,
    pub alpha2: Rational,
    pub beta1: Rational,
    pub beta2: Rational,
    pub u: Vec<Rational>,
    pub v: Vec<Rational>,
    /// `α₂ / α₁`.
    pub expected_gamma: Rational,
}

impl GroundTruth {
    pub fn new(
        base_a: GameMatrix,
        alpha1: Rational,
        alpha2: Rational,
        beta1: Rational,
        beta2: Rational,
        u: Vec<Rational>,
        v: Vec<Rational>,
    ) -> Result<Self> {
        if !alpha1.is_positive() || !alpha2.is_positive() {
            return Err(Error::Precondition("transformation scales must be positive".into()));
        }
        if u.len() != base_a.cols() || v.len() != base_a.rows() {
            return Err(Error::DimensionMismatch(format!(
                "u has {} entries and v has {}, kernel is {}x{}",
                u.len(),
                v.len(),
                base_a.rows(),
                base_a.cols()
            )));
        }
        let expected_gamma = &alpha2 / &alpha1;
        Ok(GroundTruth {
            base_a,
            alpha1,
            alpha2,
            beta1,
            beta2,
            u,
            v,
            expected_gamma,
        })
    }

    /// Applies the transformation to the kernel.
    pub fn build_game(&self) -> BimatrixGame {
        let (m, n) = self.base_a.dims();
        let shifted_u: Vec<Rational> = self.u.iter().map(|x| &self.beta1 * x).collect();
        let shifted_v: Vec<Rational> = self.v.iter().map(|x| &self.beta2 * x).collect();
        let a = GameMatrix::from_fn(m, n, |i, j| {
            &(&self.alpha1 * self.base_a.get(i, j)) + &shifted_u[j - 1]
        })
        .expect("kernel is non-empty");
        let b = GameMatrix::from_fn(m, n, |i, j| {
            &shifted_v[i - 1] - &(&self.alpha2 * self.base_a.get(i, j))
        })
        .expect("kernel is non-empty");
        BimatrixGame::new(a, b).expect("same shape")
    }
}

/// Row-major integer matrix used while generating.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct IntGrid {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<i64>,
}

impl IntGrid {
    fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        IntGrid { rows, cols, data }
    }

    fn random(rows: usize, cols: usize, rng: &mut impl Rng, range: &RangeInclusive<i64>) -> Self {
        Self::from_fn(rows, cols, |_, _| rng.gen_range(range.clone()))
    }

    fn row_plus_column(u: &[i64], v: &[i64]) -> Self {
        Self::from_fn(v.len(), u.len(), |i, j| u[j] + v[i])
    }

    fn at(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    /// First nonzero cell of the `(1, 1)`-referenced residual, 0-based.
    fn first_residual(&self) -> Option<(usize, usize, i64)> {
        for l in 1..self.rows {
            for k in 1..self.cols {
                let r = self.at(l, k) - self.at(0, k) - self.at(l, 0) + self.at(0, 0);
                if r != 0 {
                    return Some((l, k, r));
                }
            }
        }
        None
    }

    pub(crate) fn to_matrix(&self) -> GameMatrix {
        GameMatrix::from_vec(
            self.rows,
            self.cols,
            self.data.iter().map(|&x| Rational::from(x)).collect(),
        )
        .expect("generated grids are non-empty")
    }

    pub(crate) fn to_f64(&self) -> Vec<f64> {
        self.data.iter().map(|&x| x as f64).collect()
    }
}

pub(crate) fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn check_dims(m: usize, n: usize, min: usize, what: &str) -> Result<()> {
    if m < min || n < min {
        return Err(Error::Precondition(format!(
            "{what} needs m, n >= {min} (got {m}x{n})"
        )));
    }
    Ok(())
}

/// Integer transformation parameters.
pub(crate) struct IntPat {
    pub base: IntGrid,
    pub alpha1: i64,
    pub alpha2: i64,
    pub beta1: i64,
    pub beta2: i64,
    pub u: Vec<i64>,
    pub v: Vec<i64>,
    pub a_tilde: IntGrid,
    pub b_tilde: IntGrid,
}

pub(crate) fn pat_integer(m: usize, n: usize, rng: &mut impl Rng, range: &RangeInclusive<i64>) -> IntPat {
    let base = loop {
        let g = IntGrid::random(m, n, rng, range);
        if g.first_residual().is_some() {
            break g;
        }
    };
    let alpha_hi = (*range.end()).max(1);
    let alpha1 = rng.gen_range(1..=alpha_hi);
    let alpha2 = rng.gen_range(1..=alpha_hi);
    let beta1 = rng.gen_range(range.clone());
    let beta2 = rng.gen_range(range.clone());
    let u: Vec<i64> = (0..n).map(|_| rng.gen_range(range.clone())).collect();
    let v: Vec<i64> = (0..m).map(|_| rng.gen_range(range.clone())).collect();
    let a_tilde = IntGrid::from_fn(m, n, |i, j| alpha1 * base.at(i, j) + beta1 * u[j]);
    let b_tilde = IntGrid::from_fn(m, n, |i, j| -alpha2 * base.at(i, j) + beta2 * v[i]);
    IntPat {
        base,
        alpha1,
        alpha2,
        beta1,
        beta2,
        u,
        v,
        a_tilde,
        b_tilde,
    }
}

fn ints(xs: &[i64]) -> Vec<Rational> {
    xs.iter().map(|&x| Rational::from(x)).collect()
}

/// A game strategically equivalent to a zero-sum kernel `(A, -A)`.
///
/// The kernel is redrawn until it lies outside the row-plus-column
/// subspace, so the game never falls into the pure-strategy branch.
pub fn gen_pat_zero_sum(
    m: usize,
    n: usize,
    seed: u64,
    value_range: RangeInclusive<i64>,
) -> Result<(BimatrixGame, GroundTruth)> {
    check_dims(m, n, 2, "gen_pat_zero_sum")?;
    if value_range.is_empty() || value_range.start() == value_range.end() {
        return Err(Error::Precondition("value range must contain two values".into()));
    }
    let mut rng = rng_for(seed);
    let pat = pat_integer(m, n, &mut rng, &value_range);
    let truth = GroundTruth::new(
        pat.base.to_matrix(),
        Rational::from(pat.alpha1),
        Rational::from(pat.alpha2),
        Rational::from(pat.beta1),
        Rational::from(pat.beta2),
        ints(&pat.u),
        ints(&pat.v),
    )?;
    let game = BimatrixGame::new(pat.a_tilde.to_matrix(), pat.b_tilde.to_matrix())?;
    Ok((game, truth))
}

pub(crate) fn pure_integer(m: usize, n: usize, rng: &mut impl Rng) -> (IntGrid, IntGrid) {
    let range = DEFAULT_RANGE;
    let mut structured = || {
        let u: Vec<i64> = (0..n).map(|_| rng.gen_range(range.clone())).collect();
        let v: Vec<i64> = (0..m).map(|_| rng.gen_range(range.clone())).collect();
        IntGrid::row_plus_column(&u, &v)
    };
    let first = structured();
    let second = structured();
    match rng.gen_range(0..3) {
        0 => (first, IntGrid::random(m, n, rng, &range)),
        1 => (IntGrid::random(m, n, rng, &range), first),
        _ => (first, second),
    }
}

/// A game where at least one payoff matrix is a row shift plus a column
/// shift, so a pure equilibrium is guaranteed.
pub fn gen_pure_ne(m: usize, n: usize, seed: u64) -> Result<BimatrixGame> {
    check_dims(m, n, 1, "gen_pure_ne")?;
    let (a, b) = pure_integer(m, n, &mut rng_for(seed));
    BimatrixGame::new(a.to_matrix(), b.to_matrix())
}

/// How a non-equivalent instance was broken.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NonEquivalentKind {
    /// `B~ = c A~ + N` with `c > 0` and `N` in the subspace, forcing `γ = -c`.
    GammaNegative,
    /// A transformed zero-sum game with one entry of `B~` moved off the
    /// subspace, leaving `γ` intact but pushing `D` out.
    DBroken,
}

impl NonEquivalentKind {
    pub fn expected_reason(self) -> Refusal {
        match self {
            NonEquivalentKind::GammaNegative => Refusal::GammaNonPositive,
            NonEquivalentKind::DBroken => Refusal::DNotInM,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonEquivalentInstance {
    pub game: BimatrixGame,
    pub kind: NonEquivalentKind,
    pub expected_reason: Refusal,
}

pub(crate) fn non_equivalent_integer(
    m: usize,
    n: usize,
    kind: NonEquivalentKind,
    rng: &mut impl Rng,
) -> (IntGrid, IntGrid) {
    let range = DEFAULT_RANGE;
    match kind {
        NonEquivalentKind::GammaNegative => {
            let a = loop {
                let g = IntGrid::random(m, n, rng, &range);
                if g.first_residual().is_some() {
                    break g;
                }
            };
            let c = rng.gen_range(1..=10);
            let u: Vec<i64> = (0..n).map(|_| rng.gen_range(range.clone())).collect();
            let v: Vec<i64> = (0..m).map(|_| rng.gen_range(range.clone())).collect();
            let noise = IntGrid::row_plus_column(&u, &v);
            let b = IntGrid::from_fn(m, n, |i, j| c * a.at(i, j) + noise.at(i, j));
            (a, b)
        }
        NonEquivalentKind::DBroken => loop {
            let pat = pat_integer(m, n, rng, &range);
            let (l, k, alpha) = pat.b_tilde.first_residual().expect("kernel is outside the subspace");
            // cells strictly after (l, k) in row-major order, off row and column 1
            let later: Vec<(usize, usize)> = (l..m)
                .flat_map(|s| (1..n).map(move |t| (s, t)))
                .filter(|&(s, t)| s > l || t > k)
                .collect();
            if later.is_empty() {
                continue;
            }
            let (s, t) = later[rng.gen_range(0..later.len())];
            let delta = loop {
                let d = rng.gen_range(range.clone());
                if d != 0 {
                    break d;
                }
            };
            let mut b = pat.b_tilde.clone();
            b.data[s * n + t] += delta;
            if b.first_residual() == Some((l, k, alpha)) {
                break (pat.a_tilde, b);
            }
        },
    }
}

/// A game that is not equivalent to any zero-sum game through a positive
/// affine transformation. Even seeds give [`NonEquivalentKind::GammaNegative`],
/// odd seeds [`NonEquivalentKind::DBroken`].
pub fn gen_non_equivalent(m: usize, n: usize, seed: u64) -> Result<NonEquivalentInstance> {
    check_dims(m, n, 3, "gen_non_equivalent")?;
    let kind = if seed.is_multiple_of(2) {
        NonEquivalentKind::GammaNegative
    } else {
        NonEquivalentKind::DBroken
    };
    gen_non_equivalent_kind(m, n, seed, kind)
}

/// As [`gen_non_equivalent`] with an explicit sub-family. `GammaNegative`
/// accepts 2x2 games; a perturbed `D` needs at least 3x3 because in two
/// dimensions the witness cell is the only free residual entry.
pub fn gen_non_equivalent_kind(
    m: usize,
    n: usize,
    seed: u64,
    kind: NonEquivalentKind,
) -> Result<NonEquivalentInstance> {
    let min = match kind {
        NonEquivalentKind::GammaNegative => 2,
        NonEquivalentKind::DBroken => 3,
    };
    check_dims(m, n, min, "gen_non_equivalent")?;
    let (a, b) = non_equivalent_integer(m, n, kind, &mut rng_for(seed));
    Ok(NonEquivalentInstance {
        game: BimatrixGame::new(a.to_matrix(), b.to_matrix())?,
        kind,
        expected_reason: kind.expected_reason(),
    })
}
