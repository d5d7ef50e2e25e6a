//! Classification of a bimatrix game as strategically zero-sum, and
//! construction of the equivalent zero-sum game.
//!
//! A game `(A~, B~)` is equivalent to some `(A, -A)` through a positive
//! affine transformation exactly when `γ > 0` and `D = B~ + γ A~` lies in
//! the row-plus-column subspace. Every step is a fixed number of passes
//! over the two matrices.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactnum::{BimatrixGame, GameMatrix, Rational};
use crate::subspace::{is_in_subspace_m, MembershipResult};

/// Shape of `D` that selected the construction of `(Â, B̂)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RankCase {
    /// `D = 0`.
    Rank0,
    /// `D = 1_m û^T` (constant columns).
    Rank1ColOnes,
    /// `D = v̂ 1_n^T` (constant rows).
    Rank1RowOnes,
    /// General member of the subspace.
    Rank2,
}

impl RankCase {
    pub fn token(self) -> &'static str {
        match self {
            RankCase::Rank0 => "rank0",
            RankCase::Rank1ColOnes => "rank1_col_ones",
            RankCase::Rank1RowOnes => "rank1_row_ones",
            RankCase::Rank2 => "rank2",
        }
    }
}

impl fmt::Display for RankCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// Why a game was found not to be equivalent to a zero-sum game.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Refusal {
    /// The residuals of `A~` and `B~` first become nonzero at different
    /// cells, so no single `γ` can relate them.
    WitnessIndexMismatch,
    GammaNonPositive,
    DNotInM,
}

impl Refusal {
    pub fn token(self) -> &'static str {
        match self {
            Refusal::WitnessIndexMismatch => "witness_index_mismatch",
            Refusal::GammaNonPositive => "gamma_non_positive",
            Refusal::DNotInM => "d_not_in_m",
        }
    }
}

impl fmt::Display for Refusal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    PureStrategyNe,
    StrategicallyZeroSum,
    NotEquivalentViaPat,
}

impl Verdict {
    pub fn token(self) -> &'static str {
        match self {
            Verdict::PureStrategyNe => "pure_strategy_ne",
            Verdict::StrategicallyZeroSum => "strategically_zero_sum",
            Verdict::NotEquivalentViaPat => "not_equivalent_via_pat",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// Scale ratio recovered from the shared balanced witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaResult {
    /// `-alpha2 / alpha1`.
    pub gamma: Rational,
    pub w: Vec<Rational>,
    pub z: Vec<Rational>,
    /// `w^T A~ z`.
    pub alpha1: Rational,
    /// `w^T B~ z`.
    pub alpha2: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum GammaOutcome {
    Found(GammaResult),
    IndexMismatch {
        a_cell: (usize, usize),
        b_cell: (usize, usize),
    },
}

/// Computes `γ = -α₂/α₁` from the two membership results.
///
/// Both matrices must lie outside the subspace. Because each test returns
/// the first nonzero residual cell, equal cells mean the witness of `A~`
/// also gives a nonzero `w^T B~ z`.
pub fn compute_gamma(mem_a: &MembershipResult, mem_b: &MembershipResult) -> Result<GammaOutcome> {
    if mem_a.in_m || mem_b.in_m {
        return Err(Error::Precondition(
            "compute_gamma needs both payoff matrices outside the subspace".into(),
        ));
    }
    if (mem_a.l, mem_a.k) != (mem_b.l, mem_b.k) {
        return Ok(GammaOutcome::IndexMismatch {
            a_cell: (mem_a.l, mem_a.k),
            b_cell: (mem_b.l, mem_b.k),
        });
    }
    let witness = mem_a.witness().expect("matrix is outside the subspace");
    let gamma = -(&mem_b.alpha / &mem_a.alpha);
    Ok(GammaOutcome::Found(GammaResult {
        gamma,
        w: witness.w,
        z: witness.z,
        alpha1: mem_a.alpha.clone(),
        alpha2: mem_b.alpha.clone(),
    }))
}

/// `D = B~ + γ A~`.
pub fn build_d(a_tilde: &GameMatrix, b_tilde: &GameMatrix, gamma: &Rational) -> Result<GameMatrix> {
    b_tilde.try_add(&a_tilde.scale(gamma))
}

/// `(Â, B̂) = (γ A~ - R_D, B~ - C_D)` from the decomposition of `D`.
pub fn equivalent_game_rank2(
    a_tilde: &GameMatrix,
    b_tilde: &GameMatrix,
    gamma: &Rational,
    mem_d: &MembershipResult,
) -> Result<(GameMatrix, GameMatrix)> {
    if !mem_d.in_m {
        return Err(Error::Precondition(
            "D must lie in the subspace to build the equivalent game".into(),
        ));
    }
    let a_hat = a_tilde.scale(gamma).try_sub(&mem_d.row_part)?;
    let b_hat = b_tilde.try_sub(&mem_d.col_part)?;
    Ok((a_hat, b_hat))
}

/// Handles `D = 0`, constant columns and constant rows, checked in that
/// order. A constant `D` is treated as constant columns.
pub fn equivalent_game_lowrank(
    a_tilde: &GameMatrix,
    b_tilde: &GameMatrix,
    gamma: &Rational,
    d: &GameMatrix,
) -> Result<(GameMatrix, GameMatrix, RankCase)> {
    let case = low_rank_case(d).ok_or_else(|| {
        Error::Precondition("D is neither zero nor has constant rows or columns".into())
    })?;
    let scaled = a_tilde.scale(gamma);
    Ok(match case {
        RankCase::Rank0 => (scaled, b_tilde.clone(), case),
        RankCase::Rank1ColOnes => (scaled.try_sub(d)?, b_tilde.clone(), case),
        RankCase::Rank1RowOnes => (scaled, b_tilde.try_sub(d)?, case),
        RankCase::Rank2 => unreachable!(),
    })
}

fn low_rank_case(d: &GameMatrix) -> Option<RankCase> {
    if d.is_zero() {
        Some(RankCase::Rank0)
    } else if d.has_constant_columns() {
        Some(RankCase::Rank1ColOnes)
    } else if d.has_constant_rows() {
        Some(RankCase::Rank1RowOnes)
    } else {
        None
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    /// One of the payoff matrices lies in the subspace; a pure equilibrium
    /// exists and no zero-sum reduction is attempted.
    PureStrategyNe,
    StrategicallyZeroSum {
        gamma: Rational,
        rank_case: RankCase,
        a_hat: GameMatrix,
        b_hat: GameMatrix,
    },
    NotEquivalentViaPat {
        reason: Refusal,
        gamma: Option<Rational>,
    },
}

/// Full result of [`classify`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub classification: Classification,
    /// `D = B~ + γ A~`, present whenever it was formed.
    pub d_matrix: Option<GameMatrix>,
    pub strictly_competitive: bool,
    pub membership_a: MembershipResult,
    pub membership_b: MembershipResult,
}

impl EquivalenceReport {
    pub fn verdict(&self) -> Verdict {
        match self.classification {
            Classification::PureStrategyNe => Verdict::PureStrategyNe,
            Classification::StrategicallyZeroSum { .. } => Verdict::StrategicallyZeroSum,
            Classification::NotEquivalentViaPat { .. } => Verdict::NotEquivalentViaPat,
        }
    }

    pub fn gamma(&self) -> Option<&Rational> {
        match &self.classification {
            Classification::StrategicallyZeroSum { gamma, .. } => Some(gamma),
            Classification::NotEquivalentViaPat { gamma, .. } => gamma.as_ref(),
            Classification::PureStrategyNe => None,
        }
    }

    pub fn rank_case(&self) -> Option<RankCase> {
        match &self.classification {
            Classification::StrategicallyZeroSum { rank_case, .. } => Some(*rank_case),
            _ => None,
        }
    }

    pub fn reason(&self) -> Option<Refusal> {
        match &self.classification {
            Classification::NotEquivalentViaPat { reason, .. } => Some(*reason),
            _ => None,
        }
    }

    pub fn equivalent_game(&self) -> Option<(&GameMatrix, &GameMatrix)> {
        match &self.classification {
            Classification::StrategicallyZeroSum { a_hat, b_hat, .. } => Some((a_hat, b_hat)),
            _ => None,
        }
    }
}

/// Runs the whole classification in `O(mn)` rational operations.
pub fn classify(game: &BimatrixGame) -> EquivalenceReport {
    let (a, b) = (game.a(), game.b());
    let strictly_competitive = is_strictly_competitive(game);
    let membership_a = is_in_subspace_m(a);
    let membership_b = is_in_subspace_m(b);

    let mut report = EquivalenceReport {
        classification: Classification::PureStrategyNe,
        d_matrix: None,
        strictly_competitive,
        membership_a,
        membership_b,
    };
    if report.membership_a.in_m || report.membership_b.in_m {
        return report;
    }

    let outcome = compute_gamma(&report.membership_a, &report.membership_b)
        .expect("both matrices are outside the subspace");
    let gamma = match outcome {
        GammaOutcome::IndexMismatch { .. } => {
            report.classification = Classification::NotEquivalentViaPat {
                reason: Refusal::WitnessIndexMismatch,
                gamma: None,
            };
            return report;
        }
        GammaOutcome::Found(g) => g.gamma,
    };
    if !gamma.is_positive() {
        report.classification = Classification::NotEquivalentViaPat {
            reason: Refusal::GammaNonPositive,
            gamma: Some(gamma),
        };
        return report;
    }

    let d = build_d(a, b, &gamma).expect("game matrices share dimensions");
    let built = if low_rank_case(&d).is_some() {
        Some(equivalent_game_lowrank(a, b, &gamma, &d).expect("low-rank case was detected"))
    } else {
        let mem_d = is_in_subspace_m(&d);
        mem_d.in_m.then(|| {
            let (a_hat, b_hat) =
                equivalent_game_rank2(a, b, &gamma, &mem_d).expect("D is in the subspace");
            (a_hat, b_hat, RankCase::Rank2)
        })
    };
    report.classification = match built {
        Some((a_hat, b_hat, rank_case)) => Classification::StrategicallyZeroSum {
            gamma,
            rank_case,
            a_hat,
            b_hat,
        },
        None => Classification::NotEquivalentViaPat {
            reason: Refusal::DNotInM,
            gamma: Some(gamma),
        },
    };
    report.d_matrix = Some(d);
    report
}

/// True iff `B~ = -α A~ + β 1 1^T` for some `α > 0` and `β`.
pub fn is_strictly_competitive(game: &BimatrixGame) -> bool {
    let a = game.a().as_slice();
    let b = game.b().as_slice();
    let Some(p) = a.iter().position(|x| x != &a[0]) else {
        return game.b().is_constant();
    };
    let alpha = -(&(&b[p] - &b[0]) / &(&a[p] - &a[0]));
    if !alpha.is_positive() {
        return false;
    }
    let beta = &b[0] + &(&alpha * &a[0]);
    a.iter().zip(b).all(|(x, y)| y + &(&alpha * x) == beta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::op_count;

    fn mat<R: AsRef<[i64]>>(rows: &[R]) -> GameMatrix {
        GameMatrix::from_i64_rows(rows).unwrap()
    }

    fn transformed_rps() -> BimatrixGame {
        BimatrixGame::from_i64(
            &[[-1, 6, 2], [1, 8, -2], [-3, 10, 0]],
            &[[9, 13, 5], [-1, 3, 7], [14, 6, 10]],
        )
        .unwrap()
    }

    fn transformed_rps_perturbed() -> BimatrixGame {
        BimatrixGame::from_i64(
            &[[-1, 6, 2], [1, 8, -2], [-3, 10, 0]],
            &[[9, 13, 5], [-1, 3, 7], [14, 6, 11]],
        )
        .unwrap()
    }

    fn found(outcome: GammaOutcome) -> GammaResult {
        match outcome {
            GammaOutcome::Found(g) => g,
            other => panic!("expected gamma, got {other:?}"),
        }
    }

    #[test]
    fn gamma_of_the_rps_transform_is_two() {
        let g = transformed_rps();
        let res = found(compute_gamma(&is_in_subspace_m(g.a()), &is_in_subspace_m(g.b())).unwrap());
        assert_eq!(res.gamma, Rational::from(2));
        assert_eq!(res.alpha1, Rational::from(-6));
        assert_eq!(res.alpha2, Rational::from(12));
    }

    #[test]
    fn gamma_negative_for_identical_identity_payoffs() {
        let id = mat(&[[1, 0], [0, 1]]);
        let mem = is_in_subspace_m(&id);
        let res = found(compute_gamma(&mem, &mem).unwrap());
        assert_eq!(res.gamma, Rational::from(-1));
    }

    #[test]
    fn gamma_refuses_mismatched_cells() {
        let a = mat(&[[0, 0, 0], [0, 1, 0], [0, 0, 0]]);
        let b = mat(&[[0, 0, 0], [0, 0, 0], [0, 0, 1]]);
        let out = compute_gamma(&is_in_subspace_m(&a), &is_in_subspace_m(&b)).unwrap();
        assert_eq!(
            out,
            GammaOutcome::IndexMismatch {
                a_cell: (2, 2),
                b_cell: (3, 3)
            }
        );
        let in_m = is_in_subspace_m(&mat(&[[1, 2], [1, 2]]));
        assert!(compute_gamma(&in_m, &is_in_subspace_m(&a)).is_err());
    }

    #[test]
    fn build_d_examples() {
        let g = transformed_rps();
        let two = Rational::from(2);
        assert_eq!(
            build_d(g.a(), g.b(), &two).unwrap(),
            mat(&[[7, 25, 9], [1, 19, 3], [8, 26, 10]])
        );
        let p = transformed_rps_perturbed();
        assert_eq!(
            build_d(p.a(), p.b(), &two).unwrap(),
            mat(&[[7, 25, 9], [1, 19, 3], [8, 26, 11]])
        );
        let gamma = Rational::new(3, 2).unwrap();
        let b = mat(&[[3, -6], [9, 12]]);
        let a = b.scale(&-(gamma.recip().unwrap()));
        assert!(build_d(&a, &b, &gamma).unwrap().is_zero());
    }

    #[test]
    fn rank2_construction_on_transformed_rps() {
        let g = transformed_rps();
        let two = Rational::from(2);
        let d = build_d(g.a(), g.b(), &two).unwrap();
        let (a_hat, b_hat) =
            equivalent_game_rank2(g.a(), g.b(), &two, &is_in_subspace_m(&d)).unwrap();
        let expected = mat(&[[-9, -13, -5], [-5, -9, -13], [-13, -5, -9]]);
        assert_eq!(a_hat, expected);
        assert_eq!(b_hat, expected.neg());

        let not_in = is_in_subspace_m(g.a());
        assert!(equivalent_game_rank2(g.a(), g.b(), &two, &not_in).is_err());
    }

    #[test]
    fn lowrank_cases() {
        let a = mat(&[[1, 0], [0, 1]]);
        let b = mat(&[[-2, 1], [0, -1]]);
        let two = Rational::from(2);
        let d = build_d(&a, &b, &two).unwrap();
        assert_eq!(d, mat(&[[0, 1], [0, 1]]));
        let (a_hat, b_hat, case) = equivalent_game_lowrank(&a, &b, &two, &d).unwrap();
        assert_eq!(case, RankCase::Rank1ColOnes);
        assert_eq!(a_hat, mat(&[[2, -1], [0, 1]]));
        assert_eq!(b_hat, a_hat.neg());

        let zero = GameMatrix::zeros(2, 2).unwrap();
        let (a_hat, b_hat, case) = equivalent_game_lowrank(&a, &a.neg(), &Rational::one(), &zero).unwrap();
        assert_eq!(case, RankCase::Rank0);
        assert_eq!(a_hat, a);
        assert_eq!(b_hat, a.neg());

        // constant-sum: D constant, routed to the constant-columns case
        let b = a.neg().shift(&Rational::from(5));
        let d = build_d(&a, &b, &Rational::one()).unwrap();
        let (a_hat, b_hat, case) = equivalent_game_lowrank(&a, &b, &Rational::one(), &d).unwrap();
        assert_eq!(case, RankCase::Rank1ColOnes);
        assert!(a_hat.try_add(&b_hat).unwrap().is_zero());

        let rows = mat(&[[3, 3], [-1, -1]]);
        let b = a.neg().try_add(&rows).unwrap();
        let d = build_d(&a, &b, &Rational::one()).unwrap();
        let (a_hat, b_hat, case) = equivalent_game_lowrank(&a, &b, &Rational::one(), &d).unwrap();
        assert_eq!(case, RankCase::Rank1RowOnes);
        assert!(a_hat.try_add(&b_hat).unwrap().is_zero());

        let general = mat(&[[7, 25, 9], [1, 19, 3], [8, 26, 10]]);
        assert!(equivalent_game_lowrank(&general, &general, &Rational::one(), &general).is_err());
    }

    #[test]
    fn classify_examples() {
        let report = classify(&transformed_rps());
        assert_eq!(report.verdict(), Verdict::StrategicallyZeroSum);
        assert_eq!(report.gamma(), Some(&Rational::from(2)));
        assert_eq!(report.rank_case(), Some(RankCase::Rank2));
        let (a_hat, b_hat) = report.equivalent_game().unwrap();
        assert_eq!(a_hat, &mat(&[[-9, -13, -5], [-5, -9, -13], [-13, -5, -9]]));
        assert!(a_hat.try_add(b_hat).unwrap().is_zero());
        assert!(!report.strictly_competitive);

        let pure = BimatrixGame::from_i64(&[[3, 3], [1, 1]], &[[0, 5], [9, 9]]).unwrap();
        assert_eq!(classify(&pure).verdict(), Verdict::PureStrategyNe);
        assert!(classify(&pure).d_matrix.is_none());

        let report = classify(&transformed_rps_perturbed());
        assert_eq!(report.reason(), Some(Refusal::DNotInM));
        assert!(report.d_matrix.is_some());

        let id = BimatrixGame::from_i64(&[[1, 0], [0, 1]], &[[1, 0], [0, 1]]).unwrap();
        let report = classify(&id);
        assert_eq!(report.reason(), Some(Refusal::GammaNonPositive));
        assert_eq!(report.gamma(), Some(&Rational::from(-1)));

        let mismatch = BimatrixGame::from_i64(
            &[[0, 0, 0], [0, 1, 0], [0, 0, 0]],
            &[[0, 0, 0], [0, 0, 0], [0, 0, 1]],
        )
        .unwrap();
        assert_eq!(classify(&mismatch).reason(), Some(Refusal::WitnessIndexMismatch));
    }

    #[test]
    fn strictly_competitive_examples() {
        let a = mat(&[[4, -2, 7], [0, 3, -5]]);
        let b = a.scale(&Rational::from(-3)).shift(&Rational::from(5));
        assert!(is_strictly_competitive(&BimatrixGame::new(a.clone(), b).unwrap()));
        // positive multiple is not strictly competitive
        let b = a.scale(&Rational::from(3));
        assert!(!is_strictly_competitive(&BimatrixGame::new(a, b).unwrap()));
        assert!(!is_strictly_competitive(&transformed_rps()));
        let k = BimatrixGame::from_i64(&[[2, 2], [2, 2]], &[[-7, -7], [-7, -7]]).unwrap();
        assert!(is_strictly_competitive(&k));
        let k = BimatrixGame::from_i64(&[[2, 2], [2, 2]], &[[-7, -7], [-7, 0]]).unwrap();
        assert!(!is_strictly_competitive(&k));
    }

    #[test]
    fn multiplication_count_is_linear() {
        let mut per_cell = Vec::new();
        for n in [4usize, 8, 16] {
            let a = GameMatrix::from_fn(n, n, |i, j| Rational::from(((i * 7 + j * j * 3) % 11) as i64 - 5)).unwrap();
            let b = a.scale(&Rational::from(-3)).try_add(
                &GameMatrix::from_fn(n, n, |i, j| Rational::from((i + 2 * j) as i64)).unwrap(),
            ).unwrap();
            let game = BimatrixGame::new(a, b).unwrap();
            op_count::reset();
            let report = classify(&game);
            assert_eq!(report.verdict(), Verdict::StrategicallyZeroSum);
            per_cell.push(op_count::multiplications() as f64 / (n * n) as f64);
        }
        assert!(per_cell.iter().all(|&c| c <= 4.0), "{per_cell:?}");
    }
}
