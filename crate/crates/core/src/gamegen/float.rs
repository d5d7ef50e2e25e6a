//! Floating-point mirror of the classification pipeline, used only for
//! timing large instances. Entries closer to zero than `eps` count as zero.

use crate::ser0::{RankCase, Refusal, Verdict};

/// Tolerance used by the benchmark harness.
pub const DEFAULT_EPS: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct FloatReport {
    pub verdict: Verdict,
    pub gamma: Option<f64>,
    pub rank_case: Option<RankCase>,
    pub reason: Option<Refusal>,
    pub a_hat: Option<Vec<f64>>,
    pub b_hat: Option<Vec<f64>>,
}

impl FloatReport {
    fn refused(reason: Refusal, gamma: Option<f64>) -> Self {
        FloatReport {
            verdict: Verdict::NotEquivalentViaPat,
            gamma,
            rank_case: None,
            reason: Some(reason),
            a_hat: None,
            b_hat: None,
        }
    }
}

struct Membership {
    in_m: bool,
    alpha: f64,
    cell: (usize, usize),
}

/// Residual around `(0, 0)` scanned row-major; `entry(i, j)` reads the
/// matrix so callers can test derived matrices without storing them.
fn membership(entry: impl Fn(usize, usize) -> f64, m: usize, n: usize, eps: f64) -> Membership {
    let f00 = entry(0, 0);
    for l in 0..m {
        let centred = entry(l, 0) - f00;
        for k in 0..n {
            let r = entry(l, k) - entry(0, k) - centred;
            if r.abs() > eps {
                return Membership {
                    in_m: false,
                    alpha: r,
                    cell: (l, k),
                };
            }
        }
    }
    Membership {
        in_m: true,
        alpha: 0.0,
        cell: (m - 1, n - 1),
    }
}

fn near(x: f64, y: f64, eps: f64) -> bool {
    (x - y).abs() <= eps
}

/// Row-major `m x n` payoffs `a`, `b`.
pub fn classify_float(a: &[f64], b: &[f64], m: usize, n: usize, eps: f64) -> FloatReport {
    assert_eq!(a.len(), m * n);
    assert_eq!(b.len(), m * n);
    let mem_a = membership(|i, j| a[i * n + j], m, n, eps);
    let mem_b = membership(|i, j| b[i * n + j], m, n, eps);
    if mem_a.in_m || mem_b.in_m {
        return FloatReport {
            verdict: Verdict::PureStrategyNe,
            gamma: None,
            rank_case: None,
            reason: None,
            a_hat: None,
            b_hat: None,
        };
    }
    if mem_a.cell != mem_b.cell {
        return FloatReport::refused(Refusal::WitnessIndexMismatch, None);
    }
    let gamma = -mem_b.alpha / mem_a.alpha;
    if gamma <= 0.0 {
        return FloatReport::refused(Refusal::GammaNonPositive, Some(gamma));
    }

    // D = B~ + γ A~ is read entry by entry rather than stored
    let d = |i: usize, j: usize| b[i * n + j] + gamma * a[i * n + j];
    let all = |pred: &dyn Fn(usize, usize) -> bool| (0..m).all(|i| (0..n).all(|j| pred(i, j)));
    let build = |row_off: &dyn Fn(usize, usize) -> f64, col_off: &dyn Fn(usize, usize) -> f64| {
        let mut a_hat = Vec::with_capacity(m * n);
        let mut b_hat = Vec::with_capacity(m * n);
        for i in 0..m {
            for j in 0..n {
                a_hat.push(gamma * a[i * n + j] - row_off(i, j));
                b_hat.push(b[i * n + j] - col_off(i, j));
            }
        }
        (a_hat, b_hat)
    };
    let zero = |_: usize, _: usize| 0.0;
    let (case, (a_hat, b_hat)) = if all(&|i, j| d(i, j).abs() <= eps) {
        (RankCase::Rank0, build(&zero, &zero))
    } else if all(&|i, j| near(d(i, j), d(0, j), eps)) {
        (RankCase::Rank1ColOnes, build(&d, &zero))
    } else if all(&|i, j| near(d(i, j), d(i, 0), eps)) {
        (RankCase::Rank1RowOnes, build(&zero, &d))
    } else if membership(d, m, n, eps).in_m {
        let d00 = d(0, 0);
        (
            RankCase::Rank2,
            build(&|_, j| d(0, j), &|i, _| d(i, 0) - d00),
        )
    } else {
        return FloatReport::refused(Refusal::DNotInM, Some(gamma));
    };
    FloatReport {
        verdict: Verdict::StrategicallyZeroSum,
        gamma: Some(gamma),
        rank_case: Some(case),
        reason: None,
        a_hat: Some(a_hat),
        b_hat: Some(b_hat),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rps_transform_in_floats() {
        let a = [-1.0, 6.0, 2.0, 1.0, 8.0, -2.0, -3.0, 10.0, 0.0];
        let b = [9.0, 13.0, 5.0, -1.0, 3.0, 7.0, 14.0, 6.0, 10.0];
        let rep = classify_float(&a, &b, 3, 3, DEFAULT_EPS);
        assert_eq!(rep.verdict, Verdict::StrategicallyZeroSum);
        assert_eq!(rep.gamma, Some(2.0));
        assert_eq!(rep.rank_case, Some(RankCase::Rank2));
        assert_eq!(
            rep.a_hat.unwrap(),
            vec![-9.0, -13.0, -5.0, -5.0, -9.0, -13.0, -13.0, -5.0, -9.0]
        );

        let mut broken = b;
        broken[8] = 11.0;
        let rep = classify_float(&a, &broken, 3, 3, DEFAULT_EPS);
        assert_eq!(rep.reason, Some(Refusal::DNotInM));
    }
}
