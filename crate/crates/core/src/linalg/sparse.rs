use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;

use super::matrix::ExactMatrix;
use super::ring::{CoefficientRing, Euclidean};
use super::snf::invariant_factors;
use crate::with_ring;

/// Column-compressed integer matrix. Columns hold `(row, value)` pairs
/// sorted by row with no zero values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    columns: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, columns: vec![Vec::new(); cols] }
    }

    /// Builds from unsorted column entries; repeated rows are summed.
    pub fn from_columns(rows: usize, columns: Vec<Vec<(usize, i64)>>) -> Self {
        let cols = columns.len();
        let columns = columns
            .into_iter()
            .map(|c| {
                let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
                for (r, v) in c {
                    assert!(r < rows, "row index {r} out of range {rows}");
                    let e = acc.entry(r).or_insert(0);
                    *e = e.checked_add(v).expect("integer overflow");
                }
                acc.into_iter().filter(|&(_, v)| v != 0).collect()
            })
            .collect();
        SparseMatrix { rows, cols, columns }
    }

    pub fn from_dense(m: &ExactMatrix<i64>) -> Self {
        let columns = (0..m.cols()).map(|j| m.column_entries(j)).collect();
        SparseMatrix { rows: m.rows(), cols: m.cols(), columns }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> &[(usize, i64)] {
        &self.columns[j]
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.columns[j].binary_search_by_key(&i, |&(r, _)| r).map_or(0, |k| self.columns[j][k].1)
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn to_dense(&self) -> ExactMatrix<i64> {
        let mut m = ExactMatrix::zeros(self.rows, self.cols);
        for (j, c) in self.columns.iter().enumerate() {
            for &(i, v) in c {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn transpose(&self) -> Self {
        let mut cols = vec![Vec::new(); self.rows];
        for (j, c) in self.columns.iter().enumerate() {
            for &(i, v) in c {
                cols[i].push((j, v));
            }
        }
        SparseMatrix { rows: self.cols, cols: self.rows, columns: cols }
    }

    pub fn scaled(&self, c: i64) -> Self {
        if c == 0 {
            return SparseMatrix::zero(self.rows, self.cols);
        }
        let columns = self
            .columns
            .iter()
            .map(|col| col.iter().map(|&(i, v)| (i, v.checked_mul(c).expect("integer overflow"))).collect())
            .collect();
        SparseMatrix { rows: self.rows, cols: self.cols, columns }
    }

    /// `self · other`
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let columns = other
            .columns
            .iter()
            .map(|col| {
                let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
                for &(k, b) in col {
                    for &(i, a) in &self.columns[k] {
                        let e = acc.entry(i).or_insert(0);
                        *e = a.checked_mul(b).and_then(|p| e.checked_add(p)).expect("integer overflow");
                    }
                }
                acc.into_iter().filter(|&(_, v)| v != 0).collect()
            })
            .collect();
        SparseMatrix { rows: self.rows, cols: other.cols, columns }
    }

    pub fn add(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "dimension mismatch");
        let columns =
            self.columns.iter().zip(&other.columns).map(|(a, b)| a.iter().chain(b).copied().collect()).collect();
        SparseMatrix::from_columns(self.rows, columns)
    }

    pub fn sub(&self, other: &SparseMatrix) -> SparseMatrix {
        self.add(&other.scaled(-1))
    }

    /// True when every entry vanishes modulo `m` (exactly, for `m = 0`).
    pub fn is_zero_mod(&self, m: u64) -> bool {
        self.first_nonzero_mod(m).is_none()
    }

    /// Position of the first entry that is nonzero modulo `m`.
    pub fn first_nonzero_mod(&self, m: u64) -> Option<(usize, usize)> {
        for (j, c) in self.columns.iter().enumerate() {
            for &(i, v) in c {
                if m == 0 || v.rem_euclid(m as i64) != 0 {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Matrix in `ring`.
    pub fn to_ring<R: Euclidean>(&self, ring: &R) -> ExactMatrix<R::E> {
        self.to_dense().to_ring(ring)
    }

    /// `self · v`
    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        let mut out = vec![0i64; self.rows];
        for (j, &x) in v.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for &(i, a) in &self.columns[j] {
                out[i] = a.checked_mul(x).and_then(|p| out[i].checked_add(p)).expect("integer overflow");
            }
        }
        out
    }
}

/// Working state for sparse elimination by unimodular column operations.
struct Eliminator {
    cols: Vec<BTreeMap<usize, i64>>,
    rows: Vec<BTreeSet<usize>>,
    alive_cols: BTreeSet<usize>,
    modulus: u64,
}

impl Eliminator {
    fn new(m: &SparseMatrix, modulus: u64) -> Self {
        let mut cols = vec![BTreeMap::new(); m.cols];
        let mut rows = vec![BTreeSet::new(); m.rows];
        for (j, c) in m.columns.iter().enumerate() {
            for &(i, v) in c {
                let v = reduce(v, modulus);
                if v != 0 {
                    cols[j].insert(i, v);
                    rows[i].insert(j);
                }
            }
        }
        let alive_cols = (0..m.cols).filter(|&j| !cols[j].is_empty()).collect();
        Eliminator { cols, rows, alive_cols, modulus }
    }

    fn is_pivot(&self, v: i64) -> bool {
        if self.modulus == 0 {
            v == 1 || v == -1
        } else {
            v != 0
        }
    }

    /// Pivot with the smallest fill-in estimate.
    fn choose_pivot(&self) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, usize)> = None;
        for &j in &self.alive_cols {
            let cl = self.cols[j].len();
            for (&i, &v) in &self.cols[j] {
                if !self.is_pivot(v) {
                    continue;
                }
                let cost = (self.rows[i].len() - 1) * (cl - 1);
                if best.is_none_or(|b| cost < b.2) {
                    best = Some((i, j, cost));
                    if cost == 0 {
                        return Some((i, j));
                    }
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }

    /// Clears row `r` outside column `c`, then drops both. Returns false on overflow.
    fn eliminate(&mut self, r: usize, c: usize) -> bool {
        let pv = self.cols[c][&r];
        let inv = if self.modulus == 0 { pv } else { inv_mod(pv, self.modulus) };
        let pivot_col: Vec<(usize, i64)> = self.cols[c].iter().map(|(&i, &v)| (i, v)).collect();
        let others: Vec<usize> = self.rows[r].iter().copied().filter(|&j| j != c).collect();
        for j in others {
            let a = self.cols[j][&r];
            // col_j -= (a / pv) col_c, staged so an overflow leaves the state intact.
            let Some(factor) = mul_reduce(a, inv, self.modulus) else { return false };
            let mut staged = Vec::with_capacity(pivot_col.len());
            for &(i, v) in &pivot_col {
                let cur = self.cols[j].get(&i).copied().unwrap_or(0);
                let Some(new) = mul_reduce(factor, v, self.modulus).and_then(|d| cur.checked_sub(d)) else {
                    return false;
                };
                staged.push((i, cur, reduce(new, self.modulus)));
            }
            for (i, cur, new) in staged {
                if new == 0 {
                    self.cols[j].remove(&i);
                    self.rows[i].remove(&j);
                } else {
                    if cur == 0 {
                        self.rows[i].insert(j);
                    }
                    self.cols[j].insert(i, new);
                }
            }
            if self.cols[j].is_empty() {
                self.alive_cols.remove(&j);
            }
        }
        for &(i, _) in &pivot_col {
            self.rows[i].remove(&c);
        }
        self.cols[c].clear();
        self.alive_cols.remove(&c);
        true
    }

    /// The remaining nonzero block as a dense integer matrix.
    fn core(&self) -> ExactMatrix<BigInt> {
        let cols: Vec<usize> = self.alive_cols.iter().copied().collect();
        let rows: Vec<usize> = (0..self.rows.len()).filter(|&i| !self.rows[i].is_empty()).collect();
        let rindex: BTreeMap<usize, usize> = rows.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        let mut m = ExactMatrix::filled(rows.len(), cols.len(), BigInt::from(0));
        for (k, &j) in cols.iter().enumerate() {
            for (&i, &v) in &self.cols[j] {
                m.set(rindex[&i], k, BigInt::from(v));
            }
        }
        m
    }
}

fn reduce(v: i64, m: u64) -> i64 {
    if m == 0 {
        v
    } else {
        v.rem_euclid(m as i64)
    }
}

fn mul_reduce(a: i64, b: i64, m: u64) -> Option<i64> {
    if m == 0 {
        a.checked_mul(b)
    } else {
        Some(((a as i128 * b as i128).rem_euclid(m as i128)) as i64)
    }
}

fn inv_mod(a: i64, m: u64) -> i64 {
    let (mut t, mut new_t, mut r, mut new_r) = (0i128, 1i128, m as i128, a.rem_euclid(m as i64) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    t.rem_euclid(m as i128) as i64
}

/// Rank and non-unit invariant factors of an integer matrix read in `ring`.
/// Unit pivots are removed sparsely; the leftover block goes to dense SNF.
pub fn sparse_invariant_factors(m: &SparseMatrix, ring: CoefficientRing) -> (usize, Vec<BigInt>) {
    let modulus = match ring {
        CoefficientRing::PrimeField(p) => p.get(),
        _ => 0,
    };
    let mut e = Eliminator::new(m, modulus);
    let mut rank = 0;
    while let Some((r, c)) = e.choose_pivot() {
        if !e.eliminate(r, c) {
            break;
        }
        rank += 1;
    }
    if e.alive_cols.is_empty() {
        return (rank, Vec::new());
    }
    let core = e.core();
    with_ring!(ring, r => {
        let core = core.map(|x| r.from_bigint(x));
        let (k, factors) = invariant_factors(r, &core);
        let torsion = factors.iter().filter(|f| !r.is_unit(f)).map(|f| r.to_bigint(f)).collect();
        (rank + k, torsion)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ring::Integers;
    use proptest::prelude::*;

    #[test]
    fn product_and_transpose() {
        let a = SparseMatrix::from_dense(&ExactMatrix::from_rows(vec![vec![1, 2], vec![0, 3]]));
        let b = SparseMatrix::from_dense(&ExactMatrix::from_rows(vec![vec![4, 0], vec![1, 1]]));
        assert_eq!(a.mul(&b).to_dense(), ExactMatrix::from_rows(vec![vec![6, 2], vec![3, 3]]));
        assert_eq!(a.transpose().get(1, 0), 2);
        assert!(a.sub(&a).is_zero_mod(0));
    }

    #[test]
    fn torsion_survives() {
        let m = SparseMatrix::from_dense(&ExactMatrix::from_rows(vec![vec![2, 0], vec![0, 3]]));
        assert_eq!(sparse_invariant_factors(&m, CoefficientRing::Integers), (2, vec![BigInt::from(6)]));
        assert_eq!(sparse_invariant_factors(&m, CoefficientRing::f2()), (1, vec![]));
    }

    proptest! {
        #[test]
        fn agrees_with_dense(rows in 1usize..7, cols in 1usize..7, seed in proptest::collection::vec(-3i64..4, 49)) {
            let dense = ExactMatrix::from_fn(rows, cols, |i, j| seed[i * 7 + j]);
            let sp = SparseMatrix::from_dense(&dense);
            let z = Integers;
            let (r, f) = invariant_factors(&z, &dense.to_ring(&z));
            let tors: Vec<BigInt> = f.into_iter().filter(|x| !z.is_unit(x)).collect();
            prop_assert_eq!(sparse_invariant_factors(&sp, CoefficientRing::Integers), (r, tors));
            let f3 = CoefficientRing::fp(3).unwrap();
            let r3 = with_ring!(f3, q => invariant_factors(q, &dense.to_ring(q)).0);
            prop_assert_eq!(sparse_invariant_factors(&sp, f3).0, r3);
        }
    }
}
