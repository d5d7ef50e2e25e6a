//! Reference implementations that share no code with the library.

#![allow(dead_code)]

use rand::Rng;
use stratzero::{GameMatrix, Rational};

/// `F` is a row shift plus a column shift exactly when every 2x2
/// "rectangle" `f_st - f_sq - f_pt + f_pq` vanishes.
pub fn four_index_in_m(f: &GameMatrix) -> bool {
    let (m, n) = f.dims();
    for s in 1..=m {
        for p in 1..=m {
            for t in 1..=n {
                for q in 1..=n {
                    let v = f.get(s, t) - f.get(s, q) - f.get(p, t) + f.get(p, q);
                    if !v.is_zero() {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Determinant by cofactor expansion along the first row.
pub fn det(rows: &[Vec<Rational>]) -> Rational {
    let k = rows.len();
    if k == 1 {
        return rows[0][0].clone();
    }
    let mut total = Rational::zero();
    for (c, lead) in rows[0].iter().enumerate() {
        if lead.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Rational>> = rows[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = lead * &det(&minor);
        if c % 2 == 0 {
            total += &term;
        } else {
            total -= &term;
        }
    }
    total
}

fn choose(len: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..(1 << len))
        .filter(|mask| mask.count_ones() as usize == k)
        .map(|mask| (0..len).filter(|b| mask & (1 << b) != 0).collect())
        .collect()
}

/// Largest order of a nonzero minor.
pub fn rank_by_minors(f: &GameMatrix) -> usize {
    let (m, n) = f.dims();
    for k in (1..=m.min(n)).rev() {
        for rows in choose(m, k) {
            for cols in choose(n, k) {
                let sub: Vec<Vec<Rational>> = rows
                    .iter()
                    .map(|&i| cols.iter().map(|&j| f.get(i + 1, j + 1).clone()).collect())
                    .collect();
                if !det(&sub).is_zero() {
                    return k;
                }
            }
        }
    }
    0
}

pub fn int_matrix(rng: &mut impl Rng, m: usize, n: usize, lo: i64, hi: i64) -> GameMatrix {
    GameMatrix::from_fn(m, n, |_, _| Rational::from(rng.gen_range(lo..=hi))).unwrap()
}

pub fn int_vec(rng: &mut impl Rng, len: usize, lo: i64, hi: i64) -> Vec<Rational> {
    (0..len).map(|_| Rational::from(rng.gen_range(lo..=hi))).collect()
}

/// A random rational distribution with small denominators.
pub fn random_distribution(rng: &mut impl Rng, len: usize) -> Vec<Rational> {
    let weights: Vec<i64> = (0..len).map(|_| rng.gen_range(0..=5)).collect();
    let total: i64 = weights.iter().sum();
    if total == 0 {
        let mut e = vec![Rational::zero(); len];
        e[rng.gen_range(0..len)] = Rational::one();
        return e;
    }
    weights.iter().map(|&w| Rational::new(w, total).unwrap()).collect()
}

/// `p^T F q` by explicit double sum.
pub fn payoff(f: &GameMatrix, p: &[Rational], q: &[Rational]) -> Rational {
    let mut total = Rational::zero();
    for (i, pi) in p.iter().enumerate() {
        for (j, qj) in q.iter().enumerate() {
            total += &(&(pi * qj) * f.get(i + 1, j + 1));
        }
    }
    total
}

/// Sum of rank-one integer outer products: rank at most `r`.
pub fn low_rank(rng: &mut impl Rng, m: usize, n: usize, r: usize) -> GameMatrix {
    let mut acc = GameMatrix::zeros(m, n).unwrap();
    for _ in 0..r {
        let x = int_vec(rng, m, -4, 4);
        let y = int_vec(rng, n, -4, 4);
        acc = acc.try_add(&GameMatrix::outer(&x, &y).unwrap()).unwrap();
    }
    acc
}

/// Applies an arbitrary rational scaling to an integer matrix so that
/// tests cover non-integer entries.
pub fn with_denominators(rng: &mut impl Rng, f: &GameMatrix) -> GameMatrix {
    let d = Rational::new(1, rng.gen_range(1..=7)).unwrap();
    f.scale(&d)
}
