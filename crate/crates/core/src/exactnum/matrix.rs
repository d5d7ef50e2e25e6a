use std::fmt;

use super::Rational;
use crate::error::{Error, Result};

/// Dense `m x n` matrix of exact rationals, row-major.
///
/// Public accessors are 1-based: `get(1, 1)` is the top-left entry.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GameMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl GameMatrix {
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if m == 0 || n == 0 {
            return Err(Error::EmptyMatrix { rows: m, cols: n });
        }
        let mut data = Vec::with_capacity(m * n);
        for (idx, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::RaggedRow {
                    row: idx + 1,
                    found: row.len(),
                    expected: n,
                });
            }
            data.extend(row);
        }
        Ok(GameMatrix {
            rows: m,
            cols: n,
            data,
        })
    }

    /// Row-major entries; `data.len()` must equal `rows * cols`.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyMatrix { rows, cols });
        }
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries supplied for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(GameMatrix { rows, cols, data })
    }

    /// Convenience constructor from integer rows.
    pub fn from_i64_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.as_ref().iter().map(|&x| Rational::from(x)).collect())
                .collect(),
        )
    }

    /// Builds a matrix from a generator called with 1-based `(i, j)`.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyMatrix { rows, cols });
        }
        let mut data = Vec::with_capacity(rows * cols);
        for i in 1..=rows {
            for j in 1..=cols {
                data.push(f(i, j));
            }
        }
        Ok(GameMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        Self::from_fn(rows, cols, |_, _| Rational::zero())
    }

    /// `1_m u^T + v 1_n^T`, the generic element of the row-plus-column subspace.
    pub fn row_plus_column(u: &[Rational], v: &[Rational]) -> Result<Self> {
        Self::from_fn(v.len(), u.len(), |i, j| &u[j - 1] + &v[i - 1])
    }

    /// Outer product `x y^T`.
    pub fn outer(x: &[Rational], y: &[Rational]) -> Result<Self> {
        Self::from_fn(x.len(), y.len(), |i, j| &x[i - 1] * &y[j - 1])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.data
    }

    pub fn into_vec(self) -> Vec<Rational> {
        self.data
    }

    /// Entry `(i, j)`, 1-based. Panics when out of range.
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        assert!(
            (1..=self.rows).contains(&i) && (1..=self.cols).contains(&j),
            "index ({i}, {j}) out of range for {}x{} matrix",
            self.rows,
            self.cols
        );
        &self.data[(i - 1) * self.cols + (j - 1)]
    }

    pub fn try_get(&self, i: usize, j: usize) -> Result<&Rational> {
        self.check_index(i, j)?;
        Ok(self.get(i, j))
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        let cols = self.cols;
        assert!((1..=self.rows).contains(&i) && (1..=cols).contains(&j));
        self.data[(i - 1) * cols + (j - 1)] = value;
    }

    pub(crate) fn check_index(&self, i: usize, j: usize) -> Result<()> {
        if (1..=self.rows).contains(&i) && (1..=self.cols).contains(&j) {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                i,
                j,
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// Row `i` (1-based) as a slice.
    pub fn row(&self, i: usize) -> &[Rational] {
        assert!((1..=self.rows).contains(&i), "row {i} out of range");
        let start = (i - 1) * self.cols;
        &self.data[start..start + self.cols]
    }

    /// Column `j` (1-based), copied.
    pub fn col(&self, j: usize) -> Vec<Rational> {
        assert!((1..=self.cols).contains(&j), "column {j} out of range");
        self.data
            .iter()
            .skip(j - 1)
            .step_by(self.cols)
            .cloned()
            .collect()
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Rational]> {
        self.data.chunks(self.cols)
    }

    pub fn transpose(&self) -> GameMatrix {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.data[i * self.cols + j].clone());
            }
        }
        GameMatrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    /// Every column is constant, i.e. the matrix is `1_m u^T`.
    pub fn has_constant_columns(&self) -> bool {
        let first = self.row(1);
        self.row_iter().skip(1).all(|r| r == first)
    }

    /// Every row is constant, i.e. the matrix is `v 1_n^T`.
    pub fn has_constant_rows(&self) -> bool {
        self.row_iter().all(|r| r.iter().all(|x| x == &r[0]))
    }

    pub fn is_constant(&self) -> bool {
        self.data.iter().all(|x| x == &self.data[0])
    }

    fn zip_with(&self, other: &GameMatrix, op: &str, f: impl Fn(&Rational, &Rational) -> Rational) -> Result<GameMatrix> {
        if self.dims() != other.dims() {
            return Err(Error::DimensionMismatch(format!(
                "cannot {op} {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(GameMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn try_add(&self, other: &GameMatrix) -> Result<GameMatrix> {
        self.zip_with(other, "add", |a, b| a + b)
    }

    pub fn try_sub(&self, other: &GameMatrix) -> Result<GameMatrix> {
        self.zip_with(other, "subtract", |a, b| a - b)
    }

    pub fn scale(&self, c: &Rational) -> GameMatrix {
        GameMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| c * x).collect(),
        }
    }

    pub fn neg(&self) -> GameMatrix {
        GameMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }

    /// Adds `c` to every entry.
    pub fn shift(&self, c: &Rational) -> GameMatrix {
        GameMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x + c).collect(),
        }
    }

    pub fn mul_vec(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                x.len(),
                self.cols
            )));
        }
        Ok(self
            .row_iter()
            .map(|r| r.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// `y^T F`.
    pub fn vec_mul(&self, y: &[Rational]) -> Result<Vec<Rational>> {
        if y.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} rows",
                y.len(),
                self.rows
            )));
        }
        let mut out = vec![Rational::zero(); self.cols];
        for (yi, r) in y.iter().zip(self.row_iter()) {
            if yi.is_zero() {
                continue;
            }
            for (o, a) in out.iter_mut().zip(r) {
                *o += &(yi * a);
            }
        }
        Ok(out)
    }

    pub fn min_entry(&self) -> &Rational {
        self.data.iter().min().expect("matrix is non-empty")
    }

    /// Exact rank by rational Gaussian elimination.
    pub fn rank(&self) -> usize {
        matrix_rank(self)
    }
}

/// Exact rank by rational Gaussian elimination with first-nonzero pivoting.
pub fn matrix_rank(f: &GameMatrix) -> usize {
    let (m, n) = f.dims();
    let mut work: Vec<Vec<Rational>> = f.row_iter().map(<[Rational]>::to_vec).collect();
    let mut rank = 0;
    for col in 0..n {
        if rank == m {
            break;
        }
        let Some(pivot) = (rank..m).find(|&r| !work[r][col].is_zero()) else {
            continue;
        };
        work.swap(rank, pivot);
        let inv = work[rank][col].recip().expect("pivot is nonzero");
        let (top, below) = work.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in below.iter_mut().filter(|row| !row[col].is_zero()) {
            let factor = &row[col] * &inv;
            for (x, p) in row[col..n].iter_mut().zip(&pivot_row[col..n]) {
                *x -= &(&factor * p);
            }
        }
        rank += 1;
    }
    rank
}

/// Exact `w^T F z`.
pub fn bilinear_form(w: &[Rational], f: &GameMatrix, z: &[Rational]) -> Result<Rational> {
    if w.len() != f.rows() || z.len() != f.cols() {
        return Err(Error::DimensionMismatch(format!(
            "w has {} entries and z has {}, matrix is {}x{}",
            w.len(),
            z.len(),
            f.rows(),
            f.cols()
        )));
    }
    let mut total = Rational::zero();
    for (wi, row) in w.iter().zip(f.row_iter()) {
        if wi.is_zero() {
            continue;
        }
        let inner: Rational = row
            .iter()
            .zip(z)
            .filter(|(_, zj)| !zj.is_zero())
            .map(|(a, zj)| a * zj)
            .sum();
        total += &(wi * &inner);
    }
    Ok(total)
}

impl fmt::Debug for GameMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "GameMatrix {}x{} [", self.rows, self.cols)?;
        for r in self.row_iter() {
            let cells: Vec<String> = r.iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for GameMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self
            .row_iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for (idx, r) in cells.iter().enumerate() {
            if idx > 0 {
                writeln!(f)?;
            }
            let line: Vec<String> = r.iter().map(|c| format!("{c:>width$}")).collect();
            write!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// A two-player game `(m, n, A~, B~)`: row player payoffs `a_tilde`,
/// column player payoffs `b_tilde`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BimatrixGame {
    a_tilde: GameMatrix,
    b_tilde: GameMatrix,
}

impl BimatrixGame {
    pub fn new(a_tilde: GameMatrix, b_tilde: GameMatrix) -> Result<Self> {
        if a_tilde.dims() != b_tilde.dims() {
            return Err(Error::DimensionMismatch(format!(
                "payoff matrices are {}x{} and {}x{}",
                a_tilde.rows(),
                a_tilde.cols(),
                b_tilde.rows(),
                b_tilde.cols()
            )));
        }
        Ok(BimatrixGame { a_tilde, b_tilde })
    }

    pub fn from_i64<R: AsRef<[i64]>>(a: &[R], b: &[R]) -> Result<Self> {
        Self::new(GameMatrix::from_i64_rows(a)?, GameMatrix::from_i64_rows(b)?)
    }

    pub fn m(&self) -> usize {
        self.a_tilde.rows()
    }

    pub fn n(&self) -> usize {
        self.a_tilde.cols()
    }

    pub fn a(&self) -> &GameMatrix {
        &self.a_tilde
    }

    pub fn b(&self) -> &GameMatrix {
        &self.b_tilde
    }

    pub fn into_parts(self) -> (GameMatrix, GameMatrix) {
        (self.a_tilde, self.b_tilde)
    }
}
