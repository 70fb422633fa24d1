use num_bigint::BigInt;

use super::matrix::{identity, ExactMatrix};
use super::ring::{Euclidean, Integers};

/// `u · m · v = d` with `d` diagonal; inverses of the transforms are kept for
/// change-of-basis work.
#[derive(Clone, Debug)]
pub struct Smith<E> {
    pub u: ExactMatrix<E>,
    pub u_inv: ExactMatrix<E>,
    pub v: ExactMatrix<E>,
    pub v_inv: ExactMatrix<E>,
    pub d: ExactMatrix<E>,
    /// Nonzero diagonal entries in order, each dividing the next.
    pub factors: Vec<E>,
}

impl<E> Smith<E> {
    pub fn rank(&self) -> usize {
        self.factors.len()
    }
}

struct Work<'a, R: Euclidean> {
    ring: &'a R,
    a: ExactMatrix<R::E>,
    track: bool,
    u: ExactMatrix<R::E>,
    u_inv: ExactMatrix<R::E>,
    v: ExactMatrix<R::E>,
    v_inv: ExactMatrix<R::E>,
}

impl<R: Euclidean> Work<'_, R> {
    /// row_i += c row_t
    fn row_add(&mut self, i: usize, t: usize, c: &R::E) {
        let ring = self.ring;
        for j in 0..self.a.cols() {
            let x = self.a.get(t, j);
            if !ring.is_zero(x) {
                let v = ring.add(self.a.get(i, j), &ring.mul(c, x));
                self.a.set(i, j, v);
            }
        }
        if self.track {
            for j in 0..self.u.cols() {
                let x = self.u.get(t, j);
                if !ring.is_zero(x) {
                    let v = ring.add(self.u.get(i, j), &ring.mul(c, x));
                    self.u.set(i, j, v);
                }
            }
            for r in 0..self.u_inv.rows() {
                let x = self.u_inv.get(r, i);
                if !ring.is_zero(x) {
                    let v = ring.sub(self.u_inv.get(r, t), &ring.mul(c, x));
                    self.u_inv.set(r, t, v);
                }
            }
        }
    }

    /// col_j += c col_t
    fn col_add(&mut self, j: usize, t: usize, c: &R::E) {
        let ring = self.ring;
        for i in 0..self.a.rows() {
            let x = self.a.get(i, t);
            if !ring.is_zero(x) {
                let v = ring.add(self.a.get(i, j), &ring.mul(c, x));
                self.a.set(i, j, v);
            }
        }
        if self.track {
            for i in 0..self.v.rows() {
                let x = self.v.get(i, t);
                if !ring.is_zero(x) {
                    let v = ring.add(self.v.get(i, j), &ring.mul(c, x));
                    self.v.set(i, j, v);
                }
            }
            for k in 0..self.v_inv.cols() {
                let x = self.v_inv.get(j, k);
                if !ring.is_zero(x) {
                    let v = ring.sub(self.v_inv.get(t, k), &ring.mul(c, x));
                    self.v_inv.set(t, k, v);
                }
            }
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        self.a.swap_rows(a, b);
        if self.track {
            self.u.swap_rows(a, b);
            self.u_inv.swap_cols(a, b);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.a.swap_cols(a, b);
        if self.track {
            self.v.swap_cols(a, b);
            self.v_inv.swap_rows(a, b);
        }
    }

    fn scale_row(&mut self, i: usize, unit: &R::E) {
        let ring = self.ring;
        let inv = ring.inv(unit);
        for j in 0..self.a.cols() {
            let v = ring.mul(unit, self.a.get(i, j));
            self.a.set(i, j, v);
        }
        if self.track {
            for j in 0..self.u.cols() {
                let v = ring.mul(unit, self.u.get(i, j));
                self.u.set(i, j, v);
            }
            for r in 0..self.u_inv.rows() {
                let v = ring.mul(self.u_inv.get(r, i), &inv);
                self.u_inv.set(r, i, v);
            }
        }
    }

    /// Minimal-size nonzero entry of the trailing block, row-major first.
    fn find_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let ring = self.ring;
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let x = self.a.get(i, j);
                if ring.is_zero(x) {
                    continue;
                }
                if ring.is_unit(x) {
                    return Some((i, j));
                }
                if best.is_none_or(|(bi, bj)| ring.cmp_size(x, self.a.get(bi, bj)).is_lt()) {
                    best = Some((i, j));
                }
            }
        }
        best
    }

    fn clear_column(&mut self, t: usize) -> bool {
        let ring = self.ring;
        let mut residue = false;
        for i in t + 1..self.a.rows() {
            if ring.is_zero(self.a.get(i, t)) {
                continue;
            }
            let (q, r) = ring.div_rem(self.a.get(i, t), self.a.get(t, t));
            self.row_add(i, t, &ring.neg(&q));
            if !ring.is_zero(&r) {
                residue = true;
            }
        }
        if residue {
            let mut best = t;
            for i in t + 1..self.a.rows() {
                let x = self.a.get(i, t);
                if !ring.is_zero(x) && ring.cmp_size(x, self.a.get(best, t)).is_lt() {
                    best = i;
                }
            }
            self.swap_rows(t, best);
        }
        residue
    }

    fn clear_row(&mut self, t: usize) -> bool {
        let ring = self.ring;
        let mut residue = false;
        for j in t + 1..self.a.cols() {
            if ring.is_zero(self.a.get(t, j)) {
                continue;
            }
            let (q, r) = ring.div_rem(self.a.get(t, j), self.a.get(t, t));
            self.col_add(j, t, &ring.neg(&q));
            if !ring.is_zero(&r) {
                residue = true;
            }
        }
        if residue {
            let mut best = t;
            for j in t + 1..self.a.cols() {
                let x = self.a.get(t, j);
                if !ring.is_zero(x) && ring.cmp_size(x, self.a.get(t, best)).is_lt() {
                    best = j;
                }
            }
            self.swap_cols(t, best);
        }
        residue
    }

    /// A row below `t` with an entry not divisible by the pivot.
    fn indivisible_row(&self, t: usize) -> Option<usize> {
        let ring = self.ring;
        let p = self.a.get(t, t);
        if ring.is_unit(p) {
            return None;
        }
        (t + 1..self.a.rows()).find(|&i| {
            (t + 1..self.a.cols()).any(|j| {
                let x = self.a.get(i, j);
                !ring.is_zero(x) && !ring.is_zero(&ring.div_rem(x, p).1)
            })
        })
    }
}

/// Smith normal form over any supported Euclidean ring; with `track` the
/// unimodular transforms and their inverses are recorded.
pub fn smith<R: Euclidean>(ring: &R, m: &ExactMatrix<R::E>, track: bool) -> Smith<R::E> {
    let (rows, cols) = (m.rows(), m.cols());
    let (tr, tc) = if track { (rows, cols) } else { (0, 0) };
    let mut w = Work {
        ring,
        a: m.clone(),
        track,
        u: identity(ring, tr),
        u_inv: identity(ring, tr),
        v: identity(ring, tc),
        v_inv: identity(ring, tc),
    };
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = w.find_pivot(t) else { break };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        loop {
            if w.clear_column(t) {
                continue;
            }
            if w.clear_row(t) {
                continue;
            }
            match w.indivisible_row(t) {
                Some(i) => w.row_add(t, i, &ring.one()),
                None => break,
            }
        }
        let unit = ring.normal_unit(w.a.get(t, t));
        if unit != ring.one() {
            w.scale_row(t, &unit);
        }
        t += 1;
    }
    let factors = (0..t).map(|i| w.a.get(i, i).clone()).collect();
    Smith { u: w.u, u_inv: w.u_inv, v: w.v, v_inv: w.v_inv, d: w.a, factors }
}

/// The integer Smith normal form `(U, D, V)` with `U·M·V = D`.
pub fn smith_normal_form(
    m: &ExactMatrix<BigInt>,
) -> (ExactMatrix<BigInt>, ExactMatrix<BigInt>, ExactMatrix<BigInt>) {
    let s = smith(&Integers, m, true);
    (s.u, s.d, s.v)
}

/// Rank and nonzero invariant factors, computed by unit-pivot elimination with
/// a dense Smith form on the leftover core. No transforms are kept.
pub fn invariant_factors<R: Euclidean>(ring: &R, m: &ExactMatrix<R::E>) -> (usize, Vec<R::E>) {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut row_alive = vec![true; rows];
    let mut col_alive = vec![true; cols];
    let mut rank = 0;
    let mut progress = true;
    while progress {
        progress = false;
        for r in 0..rows {
            if !row_alive[r] {
                continue;
            }
            let Some(c) = (0..cols).find(|&j| col_alive[j] && ring.is_unit(a.get(r, j))) else {
                continue;
            };
            let inv = ring.inv(a.get(r, c));
            let pivot_row: Vec<(usize, R::E)> = (0..cols)
                .filter(|&j| col_alive[j] && j != c && !ring.is_zero(a.get(r, j)))
                .map(|j| (j, ring.mul(&inv, a.get(r, j))))
                .collect();
            for i in 0..rows {
                if i == r || !row_alive[i] || ring.is_zero(a.get(i, c)) {
                    continue;
                }
                let factor = a.get(i, c).clone();
                for (j, x) in &pivot_row {
                    let v = ring.sub(a.get(i, *j), &ring.mul(&factor, x));
                    a.set(i, *j, v);
                }
                a.set(i, c, ring.zero());
            }
            row_alive[r] = false;
            col_alive[c] = false;
            rank += 1;
            progress = true;
        }
    }
    let rs: Vec<usize> = (0..rows).filter(|&i| row_alive[i]).collect();
    let cs: Vec<usize> = (0..cols).filter(|&j| col_alive[j]).collect();
    let mut factors: Vec<R::E> = vec![ring.one(); rank];
    if !rs.is_empty() && !cs.is_empty() {
        let core = a.submatrix(&rs, &cs);
        let s = smith(ring, &core, false);
        factors.extend(s.factors);
    }
    (factors.len(), factors)
}

/// Rank over the ring's field of fractions.
pub fn rank<R: Euclidean>(ring: &R, m: &ExactMatrix<R::E>) -> usize {
    invariant_factors(ring, m).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::matrix::{is_zero_matrix, matmul};
    use crate::linalg::ring::{Prime, PrimeField};
    use num_traits::Signed;
    use proptest::prelude::*;

    fn int(m: Vec<Vec<i64>>) -> ExactMatrix<BigInt> {
        ExactMatrix::from_rows(m).to_ring(&Integers)
    }

    #[test]
    fn diag_2_3() {
        let (u, d, v) = smith_normal_form(&int(vec![vec![2, 0], vec![0, 3]]));
        assert_eq!(d, int(vec![vec![1, 0], vec![0, 6]]));
        let z = Integers;
        assert_eq!(matmul(&z, &matmul(&z, &u, &int(vec![vec![2, 0], vec![0, 3]])), &v), d);
    }

    #[test]
    fn zero_matrix() {
        let (_, d, _) = smith_normal_form(&int(vec![vec![0, 0], vec![0, 0]]));
        assert!(is_zero_matrix(&Integers, &d));
    }

    #[test]
    fn fast_factors_match_dense() {
        let m = int(vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        let (r, f) = invariant_factors(&Integers, &m);
        assert_eq!(r, 3);
        assert_eq!(f, vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);
    }

    #[test]
    fn rank_mod_two() {
        let f2 = PrimeField::new(Prime::new(2).unwrap());
        let m = ExactMatrix::from_rows(vec![vec![1, 1], vec![1, 1]]).to_ring(&f2);
        assert_eq!(rank(&f2, &m), 1);
    }

    proptest! {
        #[test]
        fn smith_contract(rows in 1usize..5, cols in 1usize..5, seed in proptest::collection::vec(-6i64..7, 25)) {
            let m = ExactMatrix::from_fn(rows, cols, |i, j| seed[i * 5 + j]).to_ring(&Integers);
            let z = Integers;
            let s = smith(&z, &m, true);
            prop_assert_eq!(matmul(&z, &matmul(&z, &s.u, &m), &s.v), s.d.clone());
            prop_assert_eq!(matmul(&z, &s.u, &s.u_inv), identity(&z, rows));
            prop_assert_eq!(matmul(&z, &s.v, &s.v_inv), identity(&z, cols));
            for w in s.factors.windows(2) {
                prop_assert!((&w[1] % &w[0]) == BigInt::from(0));
            }
            for f in &s.factors {
                prop_assert!(f.is_positive());
            }
            for i in 0..rows {
                for j in 0..cols {
                    if i != j || i >= s.factors.len() {
                        prop_assert_eq!(s.d.get(i, j).clone(), BigInt::from(0));
                    }
                }
            }
            let (r, mut f) = invariant_factors(&z, &m);
            prop_assert_eq!(r, s.rank());
            let mut g = s.factors.clone();
            f.sort();
            g.sort();
            prop_assert_eq!(normalize_factors(f), normalize_factors(g));
        }
    }

    fn normalize_factors(mut f: Vec<BigInt>) -> Vec<BigInt> {
        use num_integer::Integer;
        // Rewrite a multiset of diagonal entries as a divisibility chain.
        let n = f.len();
        for i in 0..n {
            for j in i + 1..n {
                let g = f[i].gcd(&f[j]);
                let l = f[i].lcm(&f[j]);
                f[i] = g;
                f[j] = l;
            }
        }
        f
    }
}
