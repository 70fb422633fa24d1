use num_bigint::BigInt;
use num_rational::BigRational;

use super::matrix::{matmul, matvec, ExactMatrix};
use super::ring::{CoefficientRing, Euclidean};
use super::snf::{invariant_factors, smith};
use super::LinalgError;
use crate::with_ring;

/// Free rank, torsion invariant factors and cycle representatives of one
/// homology group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologySummary {
    pub degree: i64,
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
    /// One cycle per generator, torsion generators first.
    pub representative_cycles: Vec<Vec<BigRational>>,
}

impl HomologySummary {
    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Compact rendering such as `Z^2 + Z/2 + Z/6`.
    pub fn describe(&self, ring: CoefficientRing) -> String {
        let mut parts = Vec::new();
        if self.free_rank > 0 {
            let base = ring.name();
            parts.push(if self.free_rank == 1 { base } else { format!("{base}^{}", self.free_rank) });
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// A basis of `ker d_out / im d_in` with coordinate extraction.
#[derive(Clone, Debug)]
pub struct HomologyBasis<E> {
    pub dim: usize,
    /// Cycles representing the generators, torsion generators first.
    pub generators: Vec<Vec<E>>,
    /// `Some(order)` for torsion generators.
    pub orders: Vec<Option<E>>,
    coord: ExactMatrix<E>,
}

impl<E: Clone> HomologyBasis<E> {
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn free_rank(&self) -> usize {
        self.orders.iter().filter(|o| o.is_none()).count()
    }

    /// Coordinates of the class of a cycle, torsion entries reduced.
    pub fn coordinates<R: Euclidean<E = E>>(&self, ring: &R, cycle: &[E]) -> Vec<E> {
        let raw = matvec(ring, &self.coord, cycle);
        raw.iter()
            .zip(&self.orders)
            .map(|(c, o)| match o {
                Some(m) => ring.reduce_mod(c, m),
                None => c.clone(),
            })
            .collect()
    }

    /// The cycle `Σ cᵢ gᵢ`.
    pub fn lift<R: Euclidean<E = E>>(&self, ring: &R, coords: &[E]) -> Vec<E> {
        let mut out = vec![ring.zero(); self.dim];
        for (c, g) in coords.iter().zip(&self.generators) {
            if ring.is_zero(c) {
                continue;
            }
            for (slot, x) in out.iter_mut().zip(g) {
                if !ring.is_zero(x) {
                    *slot = ring.add(slot, &ring.mul(c, x));
                }
            }
        }
        out
    }

    pub fn summary<R: Euclidean<E = E>>(&self, ring: &R, degree: i64) -> HomologySummary {
        HomologySummary {
            degree,
            free_rank: self.free_rank(),
            torsion: self.orders.iter().flatten().map(|o| ring.to_bigint(o)).collect(),
            representative_cycles: self
                .generators
                .iter()
                .map(|g| g.iter().map(|x| ring.to_rational(x)).collect())
                .collect(),
        }
    }
}

fn check_composition<R: Euclidean>(
    ring: &R,
    d_in: &ExactMatrix<R::E>,
    d_out: &ExactMatrix<R::E>,
) -> Result<(), LinalgError> {
    if d_in.rows() != d_out.cols() {
        return Err(LinalgError::DimensionMismatch { left: d_out.cols(), right: d_in.rows() });
    }
    for j in 0..d_in.cols() {
        let col: Vec<(usize, &R::E)> =
            (0..d_in.rows()).map(|k| (k, d_in.get(k, j))).filter(|(_, x)| !ring.is_zero(x)).collect();
        if col.is_empty() {
            continue;
        }
        for i in 0..d_out.rows() {
            let mut acc = ring.zero();
            for (k, x) in &col {
                let y = d_out.get(i, *k);
                if !ring.is_zero(y) {
                    acc = ring.add(&acc, &ring.mul(x, y));
                }
            }
            if !ring.is_zero(&acc) {
                return Err(LinalgError::CompositionNotZero { row: i, col: j });
            }
        }
    }
    Ok(())
}

/// Homology at the middle of `· --d_in--> C --d_out--> ·` with generators.
pub fn homology_basis<R: Euclidean>(
    ring: &R,
    d_in: &ExactMatrix<R::E>,
    d_out: &ExactMatrix<R::E>,
) -> Result<HomologyBasis<R::E>, LinalgError> {
    check_composition(ring, d_in, d_out)?;
    let dim = d_out.cols();
    let s1 = smith(ring, d_out, true);
    let r1 = s1.rank();
    let kdim = dim - r1;
    let kernel_cols: Vec<usize> = (r1..dim).collect();
    let all_rows: Vec<usize> = (0..dim).collect();
    let k = s1.v.submatrix(&all_rows, &kernel_cols);
    let l = s1.v_inv.submatrix(&kernel_cols, &all_rows);
    let m = matmul(ring, &l, d_in);
    let s2 = smith(ring, &m, true);
    let r2 = s2.rank();
    let gens = matmul(ring, &k, &s2.u_inv);
    let coord_all = matmul(ring, &s2.u, &l);
    let mut generators = Vec::new();
    let mut orders = Vec::new();
    let mut rows = Vec::new();
    for i in 0..kdim {
        let order = if i < r2 {
            let f = &s2.factors[i];
            if ring.is_unit(f) {
                continue;
            }
            Some(f.clone())
        } else {
            None
        };
        generators.push(gens.column(i));
        orders.push(order);
        rows.push(i);
    }
    let coord = coord_all.submatrix(&rows, &(0..dim).collect::<Vec<_>>());
    Ok(HomologyBasis { dim, generators, orders, coord })
}

/// Ranks and torsion only, by elimination; suited to large complexes.
pub fn homology_ranks<R: Euclidean>(
    ring: &R,
    d_in: &ExactMatrix<R::E>,
    d_out: &ExactMatrix<R::E>,
    degree: i64,
) -> Result<HomologySummary, LinalgError> {
    check_composition(ring, d_in, d_out)?;
    let dim = d_out.cols();
    let (r_out, _) = invariant_factors(ring, d_out);
    let (r_in, factors) = invariant_factors(ring, d_in);
    let mut torsion: Vec<BigInt> =
        factors.iter().filter(|f| !ring.is_unit(f)).map(|f| ring.to_bigint(f)).collect();
    normalize_chain(&mut torsion);
    Ok(HomologySummary {
        degree,
        free_rank: dim - r_out - r_in,
        torsion,
        representative_cycles: Vec::new(),
    })
}

/// Rewrites positive integers as the invariant-factor chain of the same group.
pub fn normalize_chain(f: &mut Vec<BigInt>) {
    use num_integer::Integer;
    use num_traits::One;
    f.sort();
    let n = f.len();
    for i in 0..n {
        for j in i + 1..n {
            let g = f[i].gcd(&f[j]);
            let l = f[i].lcm(&f[j]);
            f[i] = g;
            f[j] = l;
        }
    }
    f.retain(|x| !x.is_one());
}

/// Homology of a two-map slice given by integer lifts, interpreted in `ring`.
pub fn homology_slice(
    d_in: &ExactMatrix<i64>,
    d_out: &ExactMatrix<i64>,
    ring: CoefficientRing,
) -> Result<HomologySummary, LinalgError> {
    with_ring!(ring, r => {
        let b = homology_basis(r, &d_in.to_ring(r), &d_out.to_ring(r))?;
        Ok(b.summary(r, 0))
    })
}
