//! Dense exact linear algebra over `Rat`.

use crate::error::{dim_err, Result};
use crate::rat::{common_denominator, Rat};
use num::bigint::BigInt;
use num::traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A vector of rationals; its dimension is its length.
pub type RatVec = Vec<Rat>;

/// A dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RatMat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMat {
    pub fn zeros(rows: usize, cols: usize) -> RatMat {
        RatMat {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> RatMat {
        let mut m = RatMat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    /// Builds a matrix from rows; `cols` fixes the width when `rows` is empty.
    pub fn from_rows(rows: &[RatVec], cols: usize) -> Result<RatMat> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return dim_err(format!("row {i} has length {}, expected {cols}", r.len()));
            }
            data.extend(r.iter().cloned());
        }
        Ok(RatMat {
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Builds a matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_cols(cols: &[RatVec], rows: usize) -> Result<RatMat> {
        let mut m = RatMat::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            if c.len() != rows {
                return dim_err(format!(
                    "column {j} has length {}, expected {rows}",
                    c.len()
                ));
            }
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        Ok(m)
    }

    pub fn from_i64(rows: &[&[i64]]) -> RatMat {
        let cols = rows.first().map_or(0, |r| r.len());
        let rs: Vec<RatVec> = rows.iter().map(|r| int_vec(r)).collect();
        RatMat::from_rows(&rs, cols).expect("ragged integer matrix")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> RatVec {
        self.row(i).to_vec()
    }

    pub fn col(&self, j: usize) -> RatVec {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<RatVec> {
        (0..self.rows).map(|i| self.row_vec(i)).collect()
    }

    pub fn transpose(&self) -> RatMat {
        let mut t = RatMat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, x: &[Rat]) -> Result<RatVec> {
        if x.len() != self.cols {
            return dim_err(format!(
                "matrix has {} columns, vector has {}",
                self.cols,
                x.len()
            ));
        }
        Ok((0..self.rows).map(|i| dot(self.row(i), x)).collect())
    }

    /// `yᵀ M`.
    pub fn left_mul_vec(&self, y: &[Rat]) -> Result<RatVec> {
        if y.len() != self.rows {
            return dim_err(format!(
                "matrix has {} rows, vector has {}",
                self.rows,
                y.len()
            ));
        }
        let mut out = vec![Rat::zero(); self.cols];
        for (i, yi) in y.iter().enumerate() {
            if yi.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                let a = &self[(i, j)];
                if !a.is_zero() {
                    *o += yi * a;
                }
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &RatMat) -> Result<RatMat> {
        if self.cols != other.rows {
            return dim_err(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            ));
        }
        let mut out = RatMat::zeros(self.rows, other.cols);
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
        Ok(out)
    }
}

impl std::ops::Index<(usize, usize)> for RatMat {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for RatMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.to_rows()).finish()
    }
}

pub fn int_vec(xs: &[i64]) -> RatVec {
    xs.iter().map(|&x| Rat::int(x)).collect()
}

pub fn zero_vec(n: usize) -> RatVec {
    vec![Rat::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> RatVec {
    let mut v = zero_vec(n);
    v[i] = Rat::one();
    v
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    let mut s = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            s += x * y;
        }
    }
    s
}

pub fn add(a: &[Rat], b: &[Rat]) -> RatVec {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Rat], b: &[Rat]) -> RatVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(c: &Rat, a: &[Rat]) -> RatVec {
    a.iter().map(|x| c * x).collect()
}

pub fn neg(a: &[Rat]) -> RatVec {
    a.iter().map(|x| -x).collect()
}

/// `acc += c * a`.
pub fn axpy(acc: &mut [Rat], c: &Rat, a: &[Rat]) {
    if c.is_zero() {
        return;
    }
    for (x, y) in acc.iter_mut().zip(a) {
        if !y.is_zero() {
            *x += c * y;
        }
    }
}

pub fn is_zero_vec(a: &[Rat]) -> bool {
    a.iter().all(Rat::is_zero)
}

/// `Σ cᵢ vᵢ` over vectors of dimension `dim`.
pub fn lin_comb(coeffs: &[Rat], vecs: &[RatVec], dim: usize) -> RatVec {
    let mut out = zero_vec(dim);
    for (c, v) in coeffs.iter().zip(vecs) {
        axpy(&mut out, c, v);
    }
    out
}

/// Scales `v` to the primitive integer vector on the same ray
/// (positive multiple). The zero vector is returned unchanged.
pub fn primitive(v: &[Rat]) -> RatVec {
    if is_zero_vec(v) {
        return v.to_vec();
    }
    let d = common_denominator(v);
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&d / x.denom())).collect();
    let g = ints
        .iter()
        .fold(BigInt::zero(), |acc, x| num::Integer::gcd(&acc, x))
        .abs();
    ints.into_iter().map(|x| Rat::from_bigint(x / &g)).collect()
}

/// Primitive integer vector spanning the same line, with first nonzero entry positive.
pub fn primitive_line(v: &[Rat]) -> RatVec {
    let p = primitive(v);
    match p.iter().find(|x| !x.is_zero()) {
        Some(x) if x.is_negative() => neg(&p),
        _ => p,
    }
}

/// Clears denominators: returns `(d, n)` with `v = n / d`, `d > 0` minimal and `n` integral.
pub fn clear_denominators(v: &[Rat]) -> (BigInt, Vec<BigInt>) {
    let d = common_denominator(v);
    let n = v.iter().map(|x| x.numer() * (&d / x.denom())).collect();
    (d, n)
}

fn integral_rows(m: &RatMat) -> Vec<RatVec> {
    m.to_rows()
        .into_iter()
        .map(|r| {
            let d = Rat::from_bigint(common_denominator(&r));
            r.iter().map(|x| x * &d).collect()
        })
        .collect()
}

/// Exact rank, computed by fraction-free (Bareiss) elimination on the
/// integer-scaled rows.
pub fn matrix_rank(m: &RatMat) -> usize {
    let mut a = integral_rows(m);
    let (rows, cols) = (m.rows(), m.cols());
    let mut prev = Rat::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = &(&a[r][c] * &a[i][j]) - &(&a[i][c] * &a[r][j]);
                a[i][j] = &v / &prev;
            }
            a[i][c] = Rat::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

/// Reduced row echelon form. Returns the reduced matrix and the pivot columns.
pub fn rref(m: &RatMat) -> (RatMat, Vec<usize>) {
    let mut a = m.clone();
    let (rows, cols) = (m.rows(), m.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                let t = a[(r, j)].clone();
                a[(r, j)] = a[(p, j)].clone();
                a[(p, j)] = t;
            }
        }
        let inv = a[(r, c)].recip();
        for j in c..cols {
            let v = &a[(r, j)] * &inv;
            a[(r, j)] = v;
        }
        for i in 0..rows {
            if i == r || a[(i, c)].is_zero() {
                continue;
            }
            let f = a[(i, c)].clone();
            for j in c..cols {
                if a[(r, j)].is_zero() {
                    continue;
                }
                let v = &a[(i, j)] - &(&f * &a[(r, j)]);
                a[(i, j)] = v;
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

/// A basis of the right null space `{x : Mx = 0}`. Each basis vector is a
/// primitive integer vector whose first nonzero entry is positive.
pub fn kernel_basis(m: &RatMat) -> Vec<RatVec> {
    let (r, pivots) = rref(m);
    let cols = m.cols();
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for f in (0..cols).filter(|&j| !is_pivot[j]) {
        let mut v = zero_vec(cols);
        v[f] = Rat::one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -&r[(i, f)];
        }
        basis.push(primitive_line(&v));
    }
    basis
}

/// Rank of a list of vectors of dimension `dim`.
pub fn rank_of(vecs: &[RatVec], dim: usize) -> usize {
    if vecs.is_empty() {
        return 0;
    }
    matrix_rank(&RatMat::from_rows(vecs, dim).expect("ragged vectors"))
}

/// A maximal linearly independent subset (indices, greedy in input order).
pub fn independent_subset(vecs: &[RatVec], dim: usize) -> Vec<usize> {
    let mut basis = EchelonBasis::new(dim);
    let mut out = Vec::new();
    for (i, v) in vecs.iter().enumerate() {
        if basis.insert(v) {
            out.push(i);
        }
    }
    out
}

/// Solves `Mx = b`, returning some solution if one exists.
pub fn solve(m: &RatMat, b: &[Rat]) -> Result<Option<RatVec>> {
    if b.len() != m.rows() {
        return dim_err(format!("matrix has {} rows, rhs has {}", m.rows(), b.len()));
    }
    let mut aug = RatMat::zeros(m.rows(), m.cols() + 1);
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            aug[(i, j)] = m[(i, j)].clone();
        }
        aug[(i, m.cols())] = b[i].clone();
    }
    let (r, pivots) = rref(&aug);
    if pivots.last() == Some(&m.cols()) {
        return Ok(None);
    }
    let mut x = zero_vec(m.cols());
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = r[(i, m.cols())].clone();
    }
    Ok(Some(x))
}

/// Incrementally maintained row-echelon basis of a subspace, supporting
/// membership tests and coordinates in the inserted vectors.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    dim: usize,
    /// Reduced rows, each with a leading 1 at `pivots[i]`.
    rows: Vec<RatVec>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(dim: usize) -> EchelonBasis {
        EchelonBasis {
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn reduce(&self, v: &[Rat]) -> RatVec {
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !w[p].is_zero() {
                let f = w[p].clone();
                for (x, y) in w.iter_mut().zip(row) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    /// Inserts `v`; returns whether the rank grew.
    pub fn insert(&mut self, v: &[Rat]) -> bool {
        let w = self.reduce(v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].recip();
        let w: RatVec = w.iter().map(|x| x * &inv).collect();
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for (x, y) in row.iter_mut().zip(&w) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        self.rows.push(w);
        self.pivots.push(p);
        true
    }

    pub fn basis(&self) -> &[RatVec] {
        &self.rows
    }

    /// Basis of the orthogonal complement (with respect to the standard
    /// dot product), as primitive integer vectors.
    pub fn complement(&self) -> Vec<RatVec> {
        if self.rows.is_empty() {
            return (0..self.dim).map(|i| unit_vec(self.dim, i)).collect();
        }
        kernel_basis(&RatMat::from_rows(&self.rows, self.dim).expect("basis rows"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> RatMat {
        RatMat::from_i64(rows)
    }

    #[test]
    fn rank_examples() {
        assert_eq!(matrix_rank(&m(&[&[1, 0], &[0, 1]])), 2);
        assert_eq!(matrix_rank(&RatMat::zeros(2, 2)), 0);
        assert_eq!(matrix_rank(&m(&[&[1, 2], &[2, 4]])), 1);
        let q = RatMat::from_rows(
            &[
                vec![Rat::new(1, 2), Rat::new(1, 3)],
                vec![Rat::new(3, 2), Rat::one()],
            ],
            2,
        )
        .unwrap();
        assert_eq!(matrix_rank(&q), 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&RatMat::identity(2)).is_empty());
        assert_eq!(kernel_basis(&m(&[&[1, 1]])), vec![int_vec(&[1, -1])]);
        assert_eq!(kernel_basis(&RatMat::zeros(1, 3)).len(), 3);
    }

    #[test]
    fn solve_and_echelon() {
        let a = m(&[&[1, 1, 0], &[0, 1, 1]]);
        let x = solve(&a, &int_vec(&[2, 3])).unwrap().unwrap();
        assert_eq!(a.mul_vec(&x).unwrap(), int_vec(&[2, 3]));
        let inconsistent = m(&[&[1, 1], &[1, 1]]);
        assert_eq!(solve(&inconsistent, &int_vec(&[1, 2])).unwrap(), None);
        let mut e = EchelonBasis::new(3);
        assert!(e.insert(&int_vec(&[1, 1, 0])));
        assert!(!e.insert(&int_vec(&[2, 2, 0])));
        assert!(e.insert(&int_vec(&[0, 1, 1])));
        assert!(e.contains(&int_vec(&[1, 2, 1])));
        assert!(!e.contains(&int_vec(&[0, 0, 1])));
        assert_eq!(e.complement(), vec![int_vec(&[1, -1, 1])]);
    }

    #[test]
    fn primitive_vectors() {
        let v = vec![Rat::new(1, 2), Rat::new(-3, 4)];
        assert_eq!(primitive(&v), int_vec(&[2, -3]));
        assert_eq!(primitive_line(&neg(&v)), int_vec(&[2, -3]));
    }
}
