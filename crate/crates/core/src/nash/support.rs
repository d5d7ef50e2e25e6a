use super::{verify_ne, MixedProfile};
use crate::error::{Error, Result};
use crate::exactnum::{GameMatrix, Rational};

/// Largest `m + n` accepted; the search visits up to `2^(m+n)` support pairs.
pub const MAX_COMBINED_ACTIONS: usize = 20;

/// All equilibria reachable from support pairs of size at most
/// `max_support` on each side.
///
/// For each pair of supports the indifference systems are solved exactly;
/// an underdetermined system contributes its basic solution (free
/// variables set to zero). Candidates are kept when they are valid mixed
/// strategies and pass [`verify_ne`]. Duplicates are removed; `value` is
/// the row player's payoff.
pub fn support_enumeration(a: &GameMatrix, b: &GameMatrix, max_support: usize) -> Result<Vec<MixedProfile>> {
    if a.dims() != b.dims() {
        return Err(Error::DimensionMismatch("payoff matrices differ in shape".into()));
    }
    let (m, n) = a.dims();
    if m + n > MAX_COMBINED_ACTIONS {
        return Err(Error::SizeGuard(format!(
            "support enumeration on a {m}x{n} game exceeds {MAX_COMBINED_ACTIONS} combined actions"
        )));
    }
    let max_support = max_support.min(m).min(n).max(1);
    let row_sets = subsets(m, max_support);
    let col_sets = subsets(n, max_support);

    let mut found: Vec<MixedProfile> = Vec::new();
    for rows in &row_sets {
        for cols in &col_sets {
            // q makes the rows in `rows` indifferent under A
            let Some(q_sup) = indifference(cols.len(), rows.iter().map(|&i| {
                cols.iter().map(|&j| a.get(i, j).clone()).collect::<Vec<_>>()
            })) else {
                continue;
            };
            // p makes the columns in `cols` indifferent under B
            let Some(p_sup) = indifference(rows.len(), cols.iter().map(|&j| {
                rows.iter().map(|&i| b.get(i, j).clone()).collect::<Vec<_>>()
            })) else {
                continue;
            };
            if q_sup.iter().chain(&p_sup).any(Rational::is_negative) {
                continue;
            }
            let p = scatter(m, rows, p_sup);
            let q = scatter(n, cols, q_sup);
            if !verify_ne(a, b, &p, &q)? {
                continue;
            }
            if found.iter().any(|f| f.p == p && f.q == q) {
                continue;
            }
            let value = super::expected_payoff(a, &p, &q);
            found.push(MixedProfile { p, q, value });
        }
    }
    Ok(found)
}

/// 1-based index sets of `{1..=len}` with between 1 and `max` members.
fn subsets(len: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (1u32..(1 << len))
        .filter(|mask| mask.count_ones() as usize <= max)
        .map(|mask| (0..len).filter(|b| mask & (1 << b) != 0).map(|b| b + 1).collect())
        .collect();
    out.sort_by_key(Vec::len);
    out
}

fn scatter(len: usize, support: &[usize], values: Vec<Rational>) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); len];
    for (&idx, v) in support.iter().zip(values) {
        out[idx - 1] = v;
    }
    out
}

/// Solves `coeffs_k · x = t` for every row `k` (common unknown `t`) and
/// `Σ x = 1`. Returns `x` or `None` when inconsistent.
fn indifference(unknowns: usize, coeff_rows: impl Iterator<Item = Vec<Rational>>) -> Option<Vec<Rational>> {
    // columns: x_1..x_k, t, rhs
    let mut system: Vec<Vec<Rational>> = coeff_rows
        .map(|mut row| {
            row.push(-Rational::one());
            row.push(Rational::zero());
            row
        })
        .collect();
    let mut sum_row = vec![Rational::one(); unknowns];
    sum_row.push(Rational::zero());
    sum_row.push(Rational::one());
    system.push(sum_row);

    let solution = solve_basic(system, unknowns + 1)?;
    Some(solution[..unknowns].to_vec())
}

/// Gauss-Jordan on an augmented system with `vars` unknowns. Returns the
/// basic solution (free variables zero) or `None` if inconsistent.
fn solve_basic(mut rows: Vec<Vec<Rational>>, vars: usize) -> Option<Vec<Rational>> {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..vars {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].recip()?;
        for x in rows[rank].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x -= &(&factor * p);
            }
        }
        pivots.push(col);
        rank += 1;
    }
    if rows[rank..].iter().any(|r| !r[vars].is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); vars];
    for (r, &col) in pivots.iter().enumerate() {
        x[col] = rows[r][vars].clone();
    }
    Some(x)
}
