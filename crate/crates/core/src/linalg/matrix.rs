use std::fmt;

use super::ring::Euclidean;

/// Dense row-major matrix over an exact scalar type.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> ExactMatrix<E> {
    pub fn filled(rows: usize, cols: usize, value: E) -> Self {
        ExactMatrix { rows, cols, data: vec![value; rows * cols] }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        ExactMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<E>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        ExactMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [E] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        ExactMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<F: Clone>(&self, f: impl Fn(&E) -> F) -> ExactMatrix<F> {
        ExactMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// Rows `rs` and columns `cs` as a new matrix.
    pub fn submatrix(&self, rs: &[usize], cs: &[usize]) -> Self {
        ExactMatrix::from_fn(rs.len(), cs.len(), |i, j| self.get(rs[i], cs[j]).clone())
    }
}

impl<E: fmt::Debug> fmt::Debug for ExactMatrix<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> =
                (0..self.cols).map(|j| format!("{:?}", self.data[i * self.cols + j])).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        Ok(())
    }
}

impl ExactMatrix<i64> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix::filled(rows, cols, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Nonzero entries of column `j`.
    pub fn column_entries(&self, j: usize) -> Vec<(usize, i64)> {
        (0..self.rows).filter_map(|i| {
            let v = *self.get(i, j);
            (v != 0).then_some((i, v))
        })
        .collect()
    }

    /// Product with checked integer arithmetic; skips zero entries.
    pub fn mul_int(&self, other: &ExactMatrix<i64>) -> ExactMatrix<i64> {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = ExactMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.data[k * other.cols + j];
                    if b != 0 {
                        let slot = &mut out.data[i * other.cols + j];
                        *slot = a
                            .checked_mul(b)
                            .and_then(|p| slot.checked_add(p))
                            .expect("integer overflow in matrix product");
                    }
                }
            }
        }
        out
    }

    pub fn to_ring<R: Euclidean>(&self, ring: &R) -> ExactMatrix<R::E> {
        self.map(|&x| ring.from_i64(x))
    }
}

/// Ring-aware matrix helpers.
pub fn identity<R: Euclidean>(ring: &R, n: usize) -> ExactMatrix<R::E> {
    ExactMatrix::from_fn(n, n, |i, j| if i == j { ring.one() } else { ring.zero() })
}

pub fn zeros<R: Euclidean>(ring: &R, rows: usize, cols: usize) -> ExactMatrix<R::E> {
    ExactMatrix::filled(rows, cols, ring.zero())
}

pub fn matmul<R: Euclidean>(ring: &R, a: &ExactMatrix<R::E>, b: &ExactMatrix<R::E>) -> ExactMatrix<R::E> {
    assert_eq!(a.cols(), b.rows(), "dimension mismatch");
    let mut out = zeros(ring, a.rows(), b.cols());
    for i in 0..a.rows() {
        for k in 0..a.cols() {
            let x = a.get(i, k);
            if ring.is_zero(x) {
                continue;
            }
            for j in 0..b.cols() {
                let y = b.get(k, j);
                if !ring.is_zero(y) {
                    let v = ring.add(out.get(i, j), &ring.mul(x, y));
                    out.set(i, j, v);
                }
            }
        }
    }
    out
}

pub fn matvec<R: Euclidean>(ring: &R, a: &ExactMatrix<R::E>, v: &[R::E]) -> Vec<R::E> {
    assert_eq!(a.cols(), v.len(), "dimension mismatch");
    (0..a.rows())
        .map(|i| {
            let mut acc = ring.zero();
            for (j, x) in a.row(i).iter().enumerate() {
                if !ring.is_zero(x) && !ring.is_zero(&v[j]) {
                    acc = ring.add(&acc, &ring.mul(x, &v[j]));
                }
            }
            acc
        })
        .collect()
}

pub fn is_zero_matrix<R: Euclidean>(ring: &R, a: &ExactMatrix<R::E>) -> bool {
    (0..a.rows()).all(|i| a.row(i).iter().all(|x| ring.is_zero(x)))
}

/// Determinant by fraction-free elimination over a field or by SNF over Z.
pub fn determinant<R: Euclidean>(ring: &R, a: &ExactMatrix<R::E>) -> R::E {
    assert_eq!(a.rows(), a.cols(), "determinant of non-square matrix");
    let n = a.rows();
    let mut m = a.clone();
    let mut det = ring.one();
    for t in 0..n {
        // Euclidean reduction of column t below the diagonal.
        loop {
            let mut best: Option<usize> = None;
            for i in t..n {
                if !ring.is_zero(m.get(i, t))
                    && best.is_none_or(|b| ring.cmp_size(m.get(i, t), m.get(b, t)).is_lt())
                {
                    best = Some(i);
                }
            }
            let Some(p) = best else { return ring.zero() };
            if p != t {
                m.swap_rows(p, t);
                det = ring.neg(&det);
            }
            let mut clean = true;
            for i in t + 1..n {
                if ring.is_zero(m.get(i, t)) {
                    continue;
                }
                let (q, r) = ring.div_rem(m.get(i, t), m.get(t, t));
                for j in t..n {
                    let v = ring.sub(m.get(i, j), &ring.mul(&q, m.get(t, j)));
                    m.set(i, j, v);
                }
                if !ring.is_zero(&r) {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        det = ring.mul(&det, m.get(t, t));
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ring::{Integers, Rationals};
    use num_bigint::BigInt;

    #[test]
    fn integer_product() {
        let a = ExactMatrix::from_rows(vec![vec![1, 2], vec![3, 4]]);
        let b = ExactMatrix::from_rows(vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(a.mul_int(&b), ExactMatrix::from_rows(vec![vec![2, 1], vec![4, 3]]));
    }

    #[test]
    fn determinants() {
        let z = Integers;
        let a = ExactMatrix::from_rows(vec![vec![2, 3], vec![4, 7]]).to_ring(&z);
        assert_eq!(determinant(&z, &a), BigInt::from(2));
        let q = Rationals;
        let b = ExactMatrix::from_rows(vec![vec![0, 1, 2], vec![1, 0, 3], vec![4, -3, 8]]).to_ring(&q);
        assert_eq!(q.to_bigint(&determinant(&q, &b)), BigInt::from(-2));
    }
}
