use super::MixedProfile;
use crate::exactnum::{GameMatrix, Rational};

/// Optimal strategies and value of the zero-sum game where the row player
/// receives `a_hat` and the column player `-a_hat`.
///
/// The payoffs are shifted to be strictly positive and the column player's
/// program `max Σy  s.t.  A' y ≤ 1, y ≥ 0` is solved with an exact simplex
/// under Bland's rule. The row player's strategy is read off the final
/// reduced costs of the slack columns, so a single run yields both sides.
pub fn solve_zero_sum_lp(a_hat: &GameMatrix) -> MixedProfile {
    let (m, n) = a_hat.dims();
    let shift = Rational::one() - a_hat.min_entry();
    let width = n + m + 1;
    let rhs = width - 1;

    let mut tableau: Vec<Vec<Rational>> = a_hat
        .row_iter()
        .enumerate()
        .map(|(i, row)| {
            let mut t = Vec::with_capacity(width);
            t.extend(row.iter().map(|x| x + &shift));
            t.extend((0..m).map(|k| if k == i { Rational::one() } else { Rational::zero() }));
            t.push(Rational::one());
            t
        })
        .collect();
    // reduced costs c_j - z_j; last entry holds -Z
    let mut objective: Vec<Rational> = (0..width)
        .map(|j| if j < n { Rational::one() } else { Rational::zero() })
        .collect();
    let mut basis: Vec<usize> = (n..n + m).collect();

    while let Some(enter) = (0..rhs).find(|&j| objective[j].is_positive()) {
        let mut leave: Option<(usize, Rational)> = None;
        for r in 0..m {
            let coef = &tableau[r][enter];
            if !coef.is_positive() {
                continue;
            }
            let ratio = &tableau[r][rhs] / coef;
            let better = match &leave {
                None => true,
                Some((best_r, best)) => {
                    ratio < *best || (ratio == *best && basis[r] < basis[*best_r])
                }
            };
            if better {
                leave = Some((r, ratio));
            }
        }
        // A' > 0 keeps every column bounded
        let (pivot_row, _) = leave.expect("positive payoff matrix keeps the program bounded");
        pivot(&mut tableau, &mut objective, pivot_row, enter);
        basis[pivot_row] = enter;
    }

    let total = -&objective[rhs];
    let inv_total = total.recip().expect("optimum is positive");
    let mut q = vec![Rational::zero(); n];
    for (r, &var) in basis.iter().enumerate() {
        if var < n {
            q[var] = &tableau[r][rhs] * &inv_total;
        }
    }
    let p: Vec<Rational> = (0..m).map(|i| &(-&objective[n + i]) * &inv_total).collect();
    let value = &inv_total - &shift;
    MixedProfile { p, q, value }
}

fn pivot(tableau: &mut [Vec<Rational>], objective: &mut [Rational], row: usize, col: usize) {
    let inv = tableau[row][col].recip().expect("pivot is positive");
    for x in tableau[row].iter_mut() {
        if !x.is_zero() {
            *x = &*x * &inv;
        }
    }
    let pivot_row = tableau[row].clone();
    let eliminate = |target: &mut [Rational]| {
        let factor = target[col].clone();
        if factor.is_zero() {
            return;
        }
        for (t, p) in target.iter_mut().zip(&pivot_row) {
            if !p.is_zero() {
                *t -= &(&factor * p);
            }
        }
    };
    for (r, t) in tableau.iter_mut().enumerate() {
        if r != row {
            eliminate(t);
        }
    }
    eliminate(objective);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rvec;

    fn mat<R: AsRef<[i64]>>(rows: &[R]) -> GameMatrix {
        GameMatrix::from_i64_rows(rows).unwrap()
    }

    fn third() -> Rational {
        Rational::new(1, 3).unwrap()
    }

    #[test]
    fn rps_transform_equivalent_game() {
        let a_hat = mat(&[[-9, -13, -5], [-5, -9, -13], [-13, -5, -9]]);
        let sol = solve_zero_sum_lp(&a_hat);
        assert_eq!(sol.p, vec![third(); 3]);
        assert_eq!(sol.q, vec![third(); 3]);
        assert_eq!(sol.value, Rational::from(-9));
    }

    #[test]
    fn trivial_and_diagonal() {
        let sol = solve_zero_sum_lp(&mat(&[[1]]));
        assert_eq!((sol.p, sol.q, sol.value), (rvec(&[1]), rvec(&[1]), Rational::one()));

        let sol = solve_zero_sum_lp(&mat(&[[2, 0], [0, 2]]));
        let half = Rational::new(1, 2).unwrap();
        assert_eq!(sol.p, vec![half.clone(); 2]);
        assert_eq!(sol.q, vec![half; 2]);
        assert_eq!(sol.value, Rational::one());
    }

    #[test]
    fn saddle_point_and_rectangular() {
        // saddle at (1, 2): row min is 2, column max is 2
        let sol = solve_zero_sum_lp(&mat(&[[3, 2, 4], [1, 0, 5]]));
        assert_eq!(sol.value, Rational::from(2));
        assert_eq!(sol.p, rvec(&[1, 0]));
        assert_eq!(sol.q, rvec(&[0, 1, 0]));
    }

    #[test]
    fn certificate_sandwich_on_mixed_game() {
        let a = mat(&[[0, 2, -1], [-1, 0, 1], [1, -1, 0]]);
        let sol = solve_zero_sum_lp(&a);
        assert_eq!(sol.value, Rational::new(1, 12).unwrap());
        for j in 1..=3 {
            let col: Rational = (1..=3).map(|i| &sol.p[i - 1] * a.get(i, j)).sum();
            assert!(col >= sol.value);
        }
        for i in 1..=3 {
            let row: Rational = (1..=3).map(|j| a.get(i, j) * &sol.q[j - 1]).sum();
            assert!(row <= sol.value);
        }
    }
}
