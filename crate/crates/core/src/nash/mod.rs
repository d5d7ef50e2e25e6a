//! Equilibrium computation and certification.

mod lp;
mod support;

pub use lp::solve_zero_sum_lp;
pub use support::{support_enumeration, MAX_COMBINED_ACTIONS};

use std::fmt;

use crate::error::{Error, Result};
use crate::exactnum::{unit_vector, BimatrixGame, GameMatrix, Rational};
use crate::ser0::{classify, Classification, EquivalenceReport};
use crate::subspace::MembershipResult;

/// A pair of mixed strategies with the row player's expected payoff.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedProfile {
    pub p: Vec<Rational>,
    pub q: Vec<Rational>,
    pub value: Rational,
}

impl MixedProfile {
    pub fn pure(m: usize, n: usize, row: usize, col: usize, value: Rational) -> Self {
        MixedProfile {
            p: unit_vector(m, row),
            q: unit_vector(n, col),
            value,
        }
    }
}

/// `p^T F q`.
pub fn expected_payoff(f: &GameMatrix, p: &[Rational], q: &[Rational]) -> Rational {
    let fq = f.mul_vec(q).expect("q matches the column count");
    p.iter().zip(&fq).map(|(a, b)| a * b).sum()
}

fn is_distribution(x: &[Rational]) -> bool {
    !x.iter().any(Rational::is_negative) && x.iter().sum::<Rational>() == 1
}

/// Checks the equilibrium inequalities against every pure deviation.
///
/// Errors when the vectors do not match the matrices or are not
/// probability distributions.
pub fn verify_ne(a: &GameMatrix, b: &GameMatrix, p: &[Rational], q: &[Rational]) -> Result<bool> {
    if a.dims() != b.dims() || p.len() != a.rows() || q.len() != a.cols() {
        return Err(Error::DimensionMismatch(format!(
            "profile of lengths ({}, {}) against a {}x{} game",
            p.len(),
            q.len(),
            a.rows(),
            a.cols()
        )));
    }
    if !is_distribution(p) || !is_distribution(q) {
        return Err(Error::Precondition("p and q must be probability vectors".into()));
    }
    let aq = a.mul_vec(q)?;
    let row_payoff: Rational = p.iter().zip(&aq).map(|(x, y)| x * y).sum();
    if aq.iter().any(|dev| dev > &row_payoff) {
        return Ok(false);
    }
    let pb = b.vec_mul(p)?;
    let col_payoff: Rational = pb.iter().zip(q).map(|(x, y)| x * y).sum();
    Ok(pb.iter().all(|dev| dev <= &col_payoff))
}

/// A pure equilibrium `(row, col)`, 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PureNe {
    pub row: usize,
    pub col: usize,
    /// `(a_ij, b_ij)`.
    pub payoffs: (Rational, Rational),
    pub profile: MixedProfile,
}

fn argmax<'a>(xs: impl IntoIterator<Item = &'a Rational>) -> usize {
    let mut best: Option<(usize, &Rational)> = None;
    for (idx, x) in xs.into_iter().enumerate() {
        if best.is_none_or(|(_, b)| x > b) {
            best = Some((idx, x));
        }
    }
    best.map(|(i, _)| i + 1).expect("non-empty")
}

/// Pure equilibrium of a game where at least one payoff matrix is a row
/// shift plus a column shift. Ties go to the lowest index.
///
/// If `A~ = 1 u₁^T + v₁ 1^T` the row player's best reply never depends on
/// the column, so the row is `argmax v₁` and the column is the column
/// player's best reply to it. The case `B~` in the subspace is symmetric.
pub fn pure_ne(game: &BimatrixGame, mem_a: &MembershipResult, mem_b: &MembershipResult) -> Result<PureNe> {
    let (a, b) = (game.a(), game.b());
    let (row, col) = if mem_a.in_m {
        let row = argmax(&mem_a.column_generator());
        let col = if mem_b.in_m {
            argmax(mem_b.row_generator())
        } else {
            argmax(b.row(row))
        };
        (row, col)
    } else if mem_b.in_m {
        let col = argmax(mem_b.row_generator());
        (argmax(&a.col(col)), col)
    } else {
        return Err(Error::Precondition(
            "pure_ne needs a payoff matrix inside the subspace".into(),
        ));
    };
    let payoffs = (a.get(row, col).clone(), b.get(row, col).clone());
    Ok(PureNe {
        row,
        col,
        profile: MixedProfile::pure(game.m(), game.n(), row, col, payoffs.0.clone()),
        payoffs,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SolveStatus {
    PureNe,
    ZeroSumNe,
    NoEquivalenceFound,
}

impl SolveStatus {
    pub fn token(self) -> &'static str {
        match self {
            SolveStatus::PureNe => "pure_ne",
            SolveStatus::ZeroSumNe => "zero_sum_ne",
            SolveStatus::NoEquivalenceFound => "no_equivalence_found",
        }
    }
}

impl fmt::Display for SolveStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOutcome {
    pub status: SolveStatus,
    /// Equilibrium of the original game; absent when no equivalence was found.
    /// `value` is the row player's payoff in the original game.
    pub profile: Option<MixedProfile>,
    /// Value of the equivalent zero-sum game, when one was solved.
    pub zero_sum_value: Option<Rational>,
    pub report: EquivalenceReport,
}

/// Classifies the game and, where possible, returns an equilibrium of it:
/// a pure one when a payoff matrix is in the subspace, otherwise the
/// minimax solution of the equivalent zero-sum game.
pub fn solve_strat_ne(game: &BimatrixGame) -> SolveOutcome {
    let report = classify(game);
    match &report.classification {
        Classification::PureStrategyNe => {
            let pure = pure_ne(game, &report.membership_a, &report.membership_b)
                .expect("pure branch has a matrix in the subspace");
            SolveOutcome {
                status: SolveStatus::PureNe,
                profile: Some(pure.profile),
                zero_sum_value: None,
                report,
            }
        }
        Classification::StrategicallyZeroSum { a_hat, .. } => {
            let sol = solve_zero_sum_lp(a_hat);
            let zero_sum_value = sol.value.clone();
            let value = expected_payoff(game.a(), &sol.p, &sol.q);
            SolveOutcome {
                status: SolveStatus::ZeroSumNe,
                profile: Some(MixedProfile { value, ..sol }),
                zero_sum_value: Some(zero_sum_value),
                report,
            }
        }
        Classification::NotEquivalentViaPat { .. } => SolveOutcome {
            status: SolveStatus::NoEquivalenceFound,
            profile: None,
            zero_sum_value: None,
            report,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rvec;
    use crate::subspace::is_in_subspace_m;

    fn mat<R: AsRef<[i64]>>(rows: &[R]) -> GameMatrix {
        GameMatrix::from_i64_rows(rows).unwrap()
    }

    fn rps() -> GameMatrix {
        mat(&[[0, -1, 1], [1, 0, -1], [-1, 1, 0]])
    }

    fn transformed_rps() -> BimatrixGame {
        BimatrixGame::from_i64(
            &[[-1, 6, 2], [1, 8, -2], [-3, 10, 0]],
            &[[9, 13, 5], [-1, 3, 7], [14, 6, 10]],
        )
        .unwrap()
    }

    fn uniform3() -> Vec<Rational> {
        vec![Rational::new(1, 3).unwrap(); 3]
    }

    #[test]
    fn verify_ne_examples() {
        let a = rps();
        assert!(verify_ne(&a, &a.neg(), &uniform3(), &uniform3()).unwrap());
        assert!(!verify_ne(&a, &a.neg(), &rvec(&[1, 0, 0]), &uniform3()).unwrap());
        let g = transformed_rps();
        assert!(verify_ne(g.a(), g.b(), &uniform3(), &uniform3()).unwrap());
        assert!(verify_ne(g.a(), g.b(), &rvec(&[1, 0]), &uniform3()).is_err());
        assert!(verify_ne(g.a(), g.b(), &rvec(&[1, 1, 0]), &uniform3()).is_err());
    }

    #[test]
    fn pure_ne_examples() {
        let g = BimatrixGame::from_i64(&[[3, 3], [1, 1]], &[[0, 5], [9, 9]]).unwrap();
        let ne = pure_ne(&g, &is_in_subspace_m(g.a()), &is_in_subspace_m(g.b())).unwrap();
        assert_eq!((ne.row, ne.col), (1, 2));
        assert_eq!(ne.payoffs, (Rational::from(3), Rational::from(5)));
        assert!(verify_ne(g.a(), g.b(), &ne.profile.p, &ne.profile.q).unwrap());

        let z = GameMatrix::zeros(2, 3).unwrap();
        let g = BimatrixGame::new(z.clone(), z).unwrap();
        let ne = pure_ne(&g, &is_in_subspace_m(g.a()), &is_in_subspace_m(g.b())).unwrap();
        assert_eq!((ne.row, ne.col), (1, 1));

        // A~ = v1 1^T + 1 s^T with v1 = (0, 7); B~ = 1 u2^T + t 1^T with u2 = (4, 1)
        let a = GameMatrix::row_plus_column(&rvec(&[2, -3]), &rvec(&[0, 7])).unwrap();
        let b = GameMatrix::row_plus_column(&rvec(&[4, 1]), &rvec(&[5, -5])).unwrap();
        let g = BimatrixGame::new(a, b).unwrap();
        let ne = pure_ne(&g, &is_in_subspace_m(g.a()), &is_in_subspace_m(g.b())).unwrap();
        assert_eq!((ne.row, ne.col), (2, 1));

        // only B~ in the subspace
        let g = BimatrixGame::from_i64(&[[0, 4], [5, 1]], &[[1, 3], [2, 4]]).unwrap();
        let ne = pure_ne(&g, &is_in_subspace_m(g.a()), &is_in_subspace_m(g.b())).unwrap();
        assert_eq!((ne.row, ne.col), (1, 2));
        assert!(verify_ne(g.a(), g.b(), &ne.profile.p, &ne.profile.q).unwrap());

        let g = transformed_rps();
        assert!(pure_ne(&g, &is_in_subspace_m(g.a()), &is_in_subspace_m(g.b())).is_err());
    }

    #[test]
    fn solve_strat_ne_examples() {
        let out = solve_strat_ne(&transformed_rps());
        assert_eq!(out.status, SolveStatus::ZeroSumNe);
        let prof = out.profile.unwrap();
        assert_eq!(prof.p, uniform3());
        assert_eq!(prof.q, uniform3());
        assert_eq!(out.zero_sum_value, Some(Rational::from(-9)));

        let g = BimatrixGame::from_i64(&[[3, 3], [1, 1]], &[[0, 5], [9, 9]]).unwrap();
        let out = solve_strat_ne(&g);
        assert_eq!(out.status, SolveStatus::PureNe);
        let prof = out.profile.unwrap();
        assert_eq!((prof.p, prof.q), (rvec(&[1, 0]), rvec(&[0, 1])));

        let g = BimatrixGame::from_i64(
            &[[-1, 6, 2], [1, 8, -2], [-3, 10, 0]],
            &[[9, 13, 5], [-1, 3, 7], [14, 6, 11]],
        )
        .unwrap();
        let out = solve_strat_ne(&g);
        assert_eq!(out.status, SolveStatus::NoEquivalenceFound);
        assert!(out.profile.is_none());
    }
}
