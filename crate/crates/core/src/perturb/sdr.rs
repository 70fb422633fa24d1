use std::collections::BTreeMap;
use std::hash::Hash;

use super::PerturbError;
use crate::graded::{GradedMap, KeyedBasis, TruncatedComplex};
use crate::linalg::SparseMatrix;
use crate::lincomb::LinComb;

/// A strong deformation retract `f: big → small`, `∇: small → big`,
/// `Φ: big → big` of degree +1.
#[derive(Clone, Debug)]
pub struct SdrData {
    pub big: TruncatedComplex,
    pub small: TruncatedComplex,
    pub f: GradedMap,
    pub nabla: GradedMap,
    pub phi: GradedMap,
}

/// A perturbation `t` of the big differential and a bound on the number of
/// factors `Φt` that can be nonzero in any degree.
#[derive(Clone, Debug)]
pub struct FilteredPerturbation {
    pub t: GradedMap,
    pub bound: usize,
}

/// The five identities, in the order they are reported.
pub const SDR_IDENTITIES: [&str; 5] = ["f∇ = id", "∇f − id = dΦ + Φd", "fΦ = 0", "Φ∇ = 0", "ΦΦ = 0"];

fn square(dim: usize) -> SparseMatrix {
    SparseMatrix::from_columns(dim, (0..dim).map(|i| vec![(i, 1)]).collect())
}

/// First degree where two maps differ modulo `m`, looking only at degrees
/// `0..=limit` present in both.
fn first_difference(a: &GradedMap, b: &GradedMap, limit: i64, m: u64) -> Option<i64> {
    for n in 0..=limit {
        if let (Some(x), Some(y)) = (a.block(n), b.block(n)) {
            if x.sub(y).first_nonzero_mod(m).is_some() {
                return Some(n);
            }
        }
    }
    None
}

fn first_nonzero(a: &GradedMap, limit: i64, m: u64) -> Option<i64> {
    (0..=limit).find(|&n| a.block(n).is_some_and(|x| x.first_nonzero_mod(m).is_some()))
}

impl SdrData {
    /// Degrees through which every identity is defined.
    pub fn checked_through(&self) -> i64 {
        self.big.valid_through() - 1
    }

    /// Each identity paired with the first degree where it fails.
    pub fn identity_report(&self) -> Result<Vec<(&'static str, Option<i64>)>, PerturbError> {
        let m = self.big.ring().characteristic();
        let top = self.checked_through();
        let d_big = GradedMap::differential_of(&self.big);
        let id_small = GradedMap::identity(&self.small);
        let id_big = GradedMap::identity(&self.big);
        let f_nabla = self.f.compose(&self.nabla)?;
        let nabla_f = self.nabla.compose(&self.f)?.add(&id_big.scaled(-1))?;
        let homotopy = union_sum(&d_big.compose(&self.phi)?, &self.phi.compose(&d_big)?);
        Ok(vec![
            (SDR_IDENTITIES[0], first_difference(&f_nabla, &id_small, top, m)),
            (SDR_IDENTITIES[1], first_difference(&nabla_f, &homotopy, top, m)),
            (SDR_IDENTITIES[2], first_nonzero(&self.f.compose(&self.phi)?, top, m)),
            (SDR_IDENTITIES[3], first_nonzero(&self.phi.compose(&self.nabla)?, top, m)),
            (SDR_IDENTITIES[4], first_nonzero(&self.phi.compose(&self.phi)?, top, m)),
        ])
    }

    /// Fails on the first identity that does not hold.
    pub fn verify(&self) -> Result<(), PerturbError> {
        for (name, bad) in self.identity_report()? {
            if let Some(degree) = bad {
                return Err(PerturbError::IdentityFails { identity: name, degree });
            }
        }
        Ok(())
    }
}

/// Sum of two maps of the same degree, keeping blocks present in only one.
fn union_sum(a: &GradedMap, b: &GradedMap) -> GradedMap {
    let mut blocks = a.blocks().clone();
    for (n, y) in b.blocks() {
        let v = match blocks.get(n) {
            Some(x) => x.add(y),
            None => y.clone(),
        };
        blocks.insert(*n, v);
    }
    GradedMap::new(a.grading(), a.degree(), blocks)
}

fn block_or_zero(m: &GradedMap, n: i64, rows: usize, cols: usize) -> SparseMatrix {
    m.block(n).cloned().unwrap_or_else(|| SparseMatrix::zero(rows, cols))
}

/// `Σ_{k≥0} P^k · start`, failing if `P^bound · start ≠ 0`.
fn geometric(p: &SparseMatrix, start: &SparseMatrix, bound: usize, degree: i64) -> Result<SparseMatrix, PerturbError> {
    let mut acc = start.clone();
    let mut term = start.clone();
    for _ in 0..bound {
        term = p.mul(&term);
        if term.nnz() == 0 {
            return Ok(acc);
        }
        acc = acc.add(&term);
    }
    if term.nnz() == 0 {
        Ok(acc)
    } else {
        Err(PerturbError::SeriesDiverges { degree })
    }
}

/// The perturbation lemma: transfers the retract to the big differential
/// `d + t` through the series `∂∞`, `∇∞`, `f∞`, `Φ∞`.
pub fn perturb(sdr: &SdrData, t: &FilteredPerturbation) -> Result<SdrData, PerturbError> {
    let big = &sdr.big;
    let small = &sdr.small;
    let top = big.valid_through();
    let g = big.grading();
    let dir = g.direction();
    let dim_b = |n: i64| big.dim(n);
    let dim_s = |n: i64| small.dim(n);
    let tb = |n: i64| block_or_zero(&t.t, n, if n + dir >= 0 { dim_b(n + dir) } else { 0 }, dim_b(n));
    let phib = |n: i64| block_or_zero(&sdr.phi, n, dim_b(n - dir), dim_b(n));
    let mut new_big = BTreeMap::new();
    let mut new_small = BTreeMap::new();
    let mut nabla = BTreeMap::new();
    let mut f = BTreeMap::new();
    let mut phi = BTreeMap::new();
    for n in 0..=top {
        let lower = n + dir;
        let upper = n - dir;
        let nab = block_or_zero(&sdr.nabla, n, dim_b(n), dim_s(n));
        if lower >= 0 {
            // P_n = Φ_{n−1} t_n on big_n
            let p = phib(lower).mul(&tb(n));
            nabla.insert(n, geometric(&p, &nab, t.bound, n)?);
            // ∂∞ = ∂ + f Σ (tΦ)^j t ∇
            let start = tb(n).mul(&nab);
            let q_lower = tb(n).mul(&phib(lower));
            let series = geometric(&q_lower, &start, t.bound, n)?;
            let f_low = block_or_zero(&sdr.f, lower, dim_s(lower), dim_b(lower));
            let ds = small.differential(n);
            new_small.insert(n, ds.add(&f_low.mul(&series)));
            new_big.insert(n, big.differential(n).add(&tb(n)));
        } else {
            nabla.insert(n, nab);
        }
        if upper <= top {
            // Q_n = t_{n+1} Φ_n on big_n
            let q = tb(upper).mul(&phib(n));
            let fb = block_or_zero(&sdr.f, n, dim_s(n), dim_b(n));
            let id = square(dim_b(n));
            let tail = geometric(&q, &id, t.bound, n)?;
            f.insert(n, fb.mul(&tail));
            // Φ∞ = Σ (Φt)^k Φ with P_{n+1} = Φ_n t_{n+1}
            let p_up = phib(n).mul(&tb(upper));
            phi.insert(n, geometric(&p_up, &phib(n), t.bound, n)?);
        }
    }
    let big_new = TruncatedComplex::new(big.ring(), big.module().clone(), new_big)?;
    let small_new = TruncatedComplex::new(small.ring(), small.module().clone(), new_small)?;
    Ok(SdrData {
        big: big_new,
        small: small_new,
        f: GradedMap::new(g, 0, f),
        nabla: GradedMap::new(g, 0, nabla),
        phi: GradedMap::new(g, 1, phi),
    })
}

/// Matrix blocks of a keyed linear map of lower degree `k`.
pub fn keyed_map<K, L>(
    source: &KeyedBasis<K>,
    target: &KeyedBasis<L>,
    k: i64,
    f: impl Fn(&K) -> LinComb<L>,
) -> Result<GradedMap, PerturbError>
where
    K: Clone + Eq + Hash + Ord,
    L: Clone + Eq + Hash + Ord,
{
    let g = source.grading();
    let mut blocks = BTreeMap::new();
    for n in 0..=source.max_degree() {
        let m = g.shift(n, k);
        if m < 0 || m > target.max_degree() {
            continue;
        }
        blocks.insert(n, source.matrix_to(n, target, m, &f)?);
    }
    Ok(GradedMap::new(g, k, blocks))
}
