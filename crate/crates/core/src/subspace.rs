//! The subspace `M_{m×n} = { 1_m u^T + v 1_n^T }` of matrices that are a
//! row shift plus a column shift.
//!
//! Membership is decided from a single residual: with a reference cell
//! `(i, j)`, subtract the replicated row `F_(i)` and the replicated,
//! re-centred column `F^(j) - f_ij`. The residual vanishes exactly when
//! `F` is in `M`; otherwise any nonzero residual cell `(l, k)` yields the
//! balanced witness `w = e_l - e_i`, `z = e_k - e_j` with `w^T F z ≠ 0`.

use crate::error::{Error, Result};
use crate::exactnum::{bilinear_form, unit_vector, GameMatrix, Rational};

/// Row part, column part and residual of `F` around reference cell
/// `(ref_i, ref_j)`: `F = row_part + col_part + f_hat`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Residual {
    pub f_hat: GameMatrix,
    /// `1_m F_(i)`.
    pub row_part: GameMatrix,
    /// `(F^(j) - 1_m f_ij) 1_n^T`.
    pub col_part: GameMatrix,
    pub ref_i: usize,
    pub ref_j: usize,
}

/// Splits `F` around the 1-based reference cell `(i, j)`. Row `i` and
/// column `j` of the residual are zero by construction.
pub fn residual(f: &GameMatrix, i: usize, j: usize) -> Result<Residual> {
    f.check_index(i, j)?;
    let (m, n) = f.dims();
    let pivot = f.get(i, j);
    let ref_row = f.row(i);
    let centred_col: Vec<Rational> = f.col(j).iter().map(|x| x - pivot).collect();

    let mut row_part = Vec::with_capacity(m * n);
    let mut col_part = Vec::with_capacity(m * n);
    let mut f_hat = Vec::with_capacity(m * n);
    for (l, row) in f.row_iter().enumerate() {
        let c = &centred_col[l];
        for (k, x) in row.iter().enumerate() {
            let r = &ref_row[k];
            f_hat.push(x - r - c);
            row_part.push(r.clone());
            col_part.push(c.clone());
        }
    }
    Ok(Residual {
        f_hat: GameMatrix::from_vec(m, n, f_hat)?,
        row_part: GameMatrix::from_vec(m, n, row_part)?,
        col_part: GameMatrix::from_vec(m, n, col_part)?,
        ref_i: i,
        ref_j: j,
    })
}

/// Outcome of the membership test for `M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipResult {
    pub in_m: bool,
    /// First nonzero residual entry in row-major order; zero when `in_m`.
    pub alpha: Rational,
    /// Row of `alpha` (1-based); `m` when `in_m`.
    pub l: usize,
    /// Column of `alpha` (1-based); `n` when `in_m`.
    pub k: usize,
    pub row_part: GameMatrix,
    pub col_part: GameMatrix,
    pub ref_i: usize,
    pub ref_j: usize,
}

impl MembershipResult {
    pub fn dims(&self) -> (usize, usize) {
        self.row_part.dims()
    }

    /// Balanced witness built from the first nonzero residual cell.
    pub fn witness(&self) -> Option<WzWitness> {
        if self.in_m {
            return None;
        }
        let (m, n) = self.dims();
        let mut w = unit_vector(m, self.l);
        w[self.ref_i - 1] -= &Rational::one();
        let mut z = unit_vector(n, self.k);
        z[self.ref_j - 1] -= &Rational::one();
        Some(WzWitness {
            w,
            z,
            value: self.alpha.clone(),
        })
    }

    /// `v` of the decomposition `F = 1_m u^T + v 1_n^T` (the generating
    /// column of the column part).
    pub fn column_generator(&self) -> Vec<Rational> {
        self.col_part.col(1)
    }

    /// `u` of the decomposition (the replicated reference row).
    pub fn row_generator(&self) -> &[Rational] {
        self.row_part.row(1)
    }
}

/// Membership test with the reference cell fixed at `(1, 1)` and a
/// row-major scan of the residual.
pub fn is_in_subspace_m(f: &GameMatrix) -> MembershipResult {
    let parts = residual(f, 1, 1).expect("(1, 1) is always a valid cell");
    let (m, n) = f.dims();
    let hit = parts
        .f_hat
        .as_slice()
        .iter()
        .position(|x| !x.is_zero());
    let (in_m, alpha, l, k) = match hit {
        Some(pos) => (
            false,
            parts.f_hat.as_slice()[pos].clone(),
            pos / n + 1,
            pos % n + 1,
        ),
        None => (true, Rational::zero(), m, n),
    };
    MembershipResult {
        in_m,
        alpha,
        l,
        k,
        row_part: parts.row_part,
        col_part: parts.col_part,
        ref_i: parts.ref_i,
        ref_j: parts.ref_j,
    }
}

/// Balanced pair `(w, z)` with `1^T w = 0`, `1^T z = 0` and
/// `w^T F z = value ≠ 0`. Its existence certifies `F ∉ M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WzWitness {
    pub w: Vec<Rational>,
    pub z: Vec<Rational>,
    pub value: Rational,
}

pub fn witness_wz(f: &GameMatrix) -> Option<WzWitness> {
    is_in_subspace_m(f).witness()
}

/// One rank-reduction step `C - (y^T C x)^{-1} C x y^T C`.
///
/// Rejects `x`, `y` with `y^T C x = 0`, for which the rank would not drop.
pub fn wedderburn_step(c: &GameMatrix, x: &[Rational], y: &[Rational]) -> Result<GameMatrix> {
    let pivot = bilinear_form(y, c, x)?;
    let Some(inv) = pivot.recip() else {
        return Err(Error::Precondition(
            "rank reduction needs y^T C x ≠ 0".into(),
        ));
    };
    let term = rank_one_term(c, x, y, &inv)?;
    c.try_sub(&term)
}

fn rank_one_term(c: &GameMatrix, x: &[Rational], y: &[Rational], inv: &Rational) -> Result<GameMatrix> {
    let cx = c.mul_vec(x)?;
    let ytc = c.vec_mul(y)?;
    let scaled: Vec<Rational> = cx.iter().map(|v| v * inv).collect();
    GameMatrix::outer(&scaled, &ytc)
}

/// Rank-one decomposition `C = Σ W_k` by repeated rank reduction, with
/// `x_k`, `y_k` the unit vectors at the first nonzero entry of the
/// current remainder. Returns exactly `rank(C)` terms.
pub fn wedderburn_decompose(c: &GameMatrix) -> Vec<GameMatrix> {
    let (m, n) = c.dims();
    let mut terms = Vec::new();
    let mut current = c.clone();
    while let Some(pos) = current.as_slice().iter().position(|x| !x.is_zero()) {
        let (r, s) = (pos / n + 1, pos % n + 1);
        let x = unit_vector(n, s);
        let y = unit_vector(m, r);
        let inv = current.get(r, s).recip().expect("nonzero pivot");
        let term = rank_one_term(&current, &x, &y, &inv).expect("dimensions agree");
        current = current.try_sub(&term).expect("dimensions agree");
        terms.push(term);
    }
    terms
}
