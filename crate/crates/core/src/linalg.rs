//! Exact dense and sparse linear algebra over ℚ.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::poly::{format_rational, Rational};

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(nrows: usize, columns: &[Vec<Rational>]) -> Self {
        let mut m = Self::zeros(nrows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), nrows);
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn pow(&self, k: usize) -> Matrix {
        assert!(self.is_square());
        let mut result = Matrix::identity(self.rows);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Rank modulo the prime `p`; see [`SparseMatrix::rank_mod_p`].
    pub fn rank_mod_p(&self, p: u64) -> Option<usize> {
        let mut s = SparseMatrix::new(self.rows);
        for j in 0..self.cols {
            s.push_column((0..self.rows).filter(|&i| !self[(i, j)].is_zero()).map(|i| (i, self[(i, j)].clone())).collect());
        }
        s.rank_mod_p(p)
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let f = m[(i, c)].clone();
                    for j in c..m.cols {
                        let v = &m[(r, j)] * &f;
                        if !v.is_zero() {
                            m[(i, j)] -= v;
                        }
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space `{v : self * v = 0}`.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r[(row, f)].clone();
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert!(self.is_square());
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Rational::one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    pub fn determinant(&self) -> Rational {
        assert!(self.is_square());
        let mut m = self.clone();
        let n = m.rows;
        let mut det = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Rational::zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m[(c, c)].clone();
            det *= &pivot;
            let inv = pivot.recip();
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = &m[(i, c)] * &inv;
                for j in c..n {
                    let v = &m[(c, j)] * &f;
                    m[(i, j)] -= v;
                }
            }
        }
        det
    }

    /// Solves `self * x = b` for square invertible `self`.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        self.inverse().map(|inv| inv.mul_vec(b))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Row-major entries as canonical rational strings.
    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(format_rational).collect())
            .collect()
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for row in self.to_string_rows() {
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Sparse matrix stored by columns, used for large Koszul differentials.
#[derive(Clone, Debug, Default)]
pub struct SparseMatrix {
    rows: usize,
    columns: Vec<BTreeMap<usize, Rational>>,
}

impl SparseMatrix {
    pub fn new(rows: usize) -> Self {
        SparseMatrix {
            rows,
            columns: Vec::new(),
        }
    }

    pub fn push_column(&mut self, col: BTreeMap<usize, Rational>) {
        debug_assert!(col.keys().all(|&r| r < self.rows));
        self.columns.push(col);
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, j: usize) -> &BTreeMap<usize, Rational> {
        &self.columns[j]
    }

    /// `self * other`, both sparse.
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols(), other.rows);
        let mut out = SparseMatrix::new(self.rows);
        for col in &other.columns {
            let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
            for (k, b) in col {
                for (i, a) in &self.columns[*k] {
                    *acc.entry(*i).or_insert_with(Rational::zero) += a * b;
                }
            }
            acc.retain(|_, v| !v.is_zero());
            out.columns.push(acc);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(BTreeMap::is_empty)
    }

    /// Exact rank by sparse Gaussian elimination on the columns.
    ///
    /// Each incoming column is reduced against the pivots found so far
    /// (keyed by their lowest row index); a nonzero remainder becomes a new
    /// pivot. Columns are processed sparsest first to limit fill-in.
    pub fn rank(&self) -> usize {
        let mut order: Vec<usize> = (0..self.columns.len()).collect();
        order.sort_by_key(|&j| (self.columns[j].len(), j));
        let mut pivots: BTreeMap<usize, BTreeMap<usize, Rational>> = BTreeMap::new();
        for j in order {
            let mut v = self.columns[j].clone();
            loop {
                let Some((&lead, _)) = v.iter().next() else {
                    break;
                };
                match pivots.get(&lead) {
                    Some(p) => {
                        let f = v[&lead].clone();
                        for (r, a) in p {
                            let e = v.entry(*r).or_insert_with(Rational::zero);
                            *e -= a * &f;
                            if e.is_zero() {
                                v.remove(r);
                            }
                        }
                    }
                    None => {
                        let inv = v[&lead].recip();
                        for a in v.values_mut() {
                            *a *= &inv;
                        }
                        pivots.insert(lead, v);
                        break;
                    }
                }
            }
        }
        pivots.len()
    }

    /// Rank of the reduction modulo the prime `p`, a lower bound for the
    /// rational rank. `None` if some denominator is divisible by `p`.
    pub fn rank_mod_p(&self, p: u64) -> Option<usize> {
        let modulus = BigInt::from(p);
        let reduce = |r: &Rational| -> Option<u64> {
            let num = r.numer().mod_floor(&modulus).to_u64()?;
            let den = r.denom().mod_floor(&modulus).to_u64()?;
            (den != 0).then(|| mul_mod(num, pow_mod(den, p - 2, p), p))
        };
        let mut order: Vec<usize> = (0..self.columns.len()).collect();
        order.sort_by_key(|&j| (self.columns[j].len(), j));
        let mut pivots: BTreeMap<usize, BTreeMap<usize, u64>> = BTreeMap::new();
        for j in order {
            let mut v = BTreeMap::new();
            for (&r, a) in &self.columns[j] {
                let x = reduce(a)?;
                if x != 0 {
                    v.insert(r, x);
                }
            }
            while let Some((&lead, &f)) = v.iter().next() {
                match pivots.get(&lead) {
                    Some(piv) => {
                        for (&r, &a) in piv {
                            let e = v.entry(r).or_insert(0);
                            *e = (*e + p - mul_mod(a, f, p)) % p;
                            if *e == 0 {
                                v.remove(&r);
                            }
                        }
                    }
                    None => {
                        let inv = pow_mod(f, p - 2, p);
                        for a in v.values_mut() {
                            *a = mul_mod(*a, inv, p);
                        }
                        pivots.insert(lead, v);
                        break;
                    }
                }
            }
        }
        Some(pivots.len())
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
    }

    #[test]
    fn rank_kernel_inverse() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let ker = a.kernel();
        assert_eq!(ker.len(), 1);
        assert!(a.mul_vec(&ker[0]).iter().all(Zero::is_zero));
        assert!(a.inverse().is_none());
        assert_eq!(a.determinant(), rat(0));

        let b = m(&[&[2, 1], &[1, 1]]);
        let inv = b.inverse().unwrap();
        assert_eq!(b.mul(&inv), Matrix::identity(2));
        assert_eq!(b.determinant(), rat(1));
        assert_eq!(b.solve(&[rat(3), rat(2)]).unwrap(), vec![rat(1), rat(1)]);
    }

    #[test]
    fn sparse_rank_agrees_with_dense() {
        let a = m(&[&[1, 2, 3, 0], &[2, 4, 6, 0], &[1, 0, 1, 5], &[0, 2, 2, -5]]);
        let mut s = SparseMatrix::new(4);
        for j in 0..4 {
            s.push_column(
                a.column(j)
                    .into_iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .collect(),
            );
        }
        assert_eq!(s.rank(), a.rank());
        assert_eq!(a.rank(), 2);
        assert_eq!(s.rank_mod_p(1_000_000_007), Some(2));
    }

    #[test]
    fn modular_rank_is_a_lower_bound() {
        let mut s = SparseMatrix::new(2);
        s.push_column(BTreeMap::from([(0, rat(1)), (1, rat(1))]));
        s.push_column(BTreeMap::from([(0, rat(1)), (1, rat(3))]));
        assert_eq!(s.rank(), 2);
        assert_eq!(s.rank_mod_p(2), Some(1));
        assert_eq!(s.rank_mod_p(7), Some(2));
        s.push_column(BTreeMap::from([(0, crate::poly::ratio(1, 7))]));
        assert_eq!(s.rank_mod_p(7), None);
    }

    #[test]
    fn matrix_power() {
        let n = m(&[&[0, 1], &[0, 0]]);
        assert!(n.pow(2).is_zero());
        assert_eq!(n.pow(0), Matrix::identity(2));
    }
}
