use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::aw::cyclic_diagonal;
use super::complexes::{cyclic_bar, suspended_degree, CycKey};
use super::BarError;
use crate::dg::{shuffle_product, AugmentedDga, HopfData, TabulatedDga};
use crate::graded::{dual_complex, parity_sign, Grading, KeyedBasis, KeyedComplex, TruncatedComplex};
use crate::linalg::{rank, CoefficientRing, Euclidean, ExactMatrix, HomologyBasis, HomologySummary, SparseMatrix};
use crate::lincomb::LinComb;
use crate::with_ring;

/// Homology groups of a complex with a product, recorded as structure
/// constants on chosen generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HochschildClassTable {
    pub ring: CoefficientRing,
    pub grading: Grading,
    pub max_degree: i64,
    pub groups: Vec<HomologySummary>,
    pub names: Vec<Vec<String>>,
    /// `Some(order)` for torsion generators.
    pub orders: Vec<Vec<Option<BigInt>>>,
    /// `(p, i, q, j)` ↦ coordinates of `gᵢ·gⱼ` in degree `p + q`; zero
    /// products are omitted.
    pub products: BTreeMap<(i64, usize, i64, usize), Vec<BigRational>>,
}

impl HochschildClassTable {
    pub fn rank(&self, n: i64) -> usize {
        self.groups.get(n as usize).map_or(0, |g| g.free_rank + g.torsion.len())
    }

    pub fn free_rank(&self, n: i64) -> usize {
        self.groups.get(n as usize).map_or(0, |g| g.free_rank)
    }

    pub fn torsion(&self, n: i64) -> Vec<BigInt> {
        self.groups.get(n as usize).map_or(Vec::new(), |g| g.torsion.clone())
    }

    pub fn product(&self, p: i64, i: usize, q: i64, j: usize) -> Vec<BigRational> {
        self.products.get(&(p, i, q, j)).cloned().unwrap_or_else(|| vec![BigRational::zero(); self.rank(p + q)])
    }

    /// Index of the generator called `name`.
    pub fn find(&self, name: &str) -> Option<(i64, usize)> {
        self.names
            .iter()
            .enumerate()
            .find_map(|(n, ns)| ns.iter().position(|x| x == name).map(|i| (n as i64, i)))
    }

    /// Product of arbitrary classes given by coordinates.
    pub fn multiply(&self, p: i64, x: &[BigRational], q: i64, y: &[BigRational]) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.rank(p + q)];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                if let Some(v) = self.products.get(&(p, i, q, j)) {
                    for (o, c) in out.iter_mut().zip(v) {
                        *o += a * b * c;
                    }
                }
            }
        }
        self.reduce(p + q, out)
    }

    /// Reduces coordinates modulo torsion orders and the characteristic.
    pub fn reduce(&self, n: i64, mut v: Vec<BigRational>) -> Vec<BigRational> {
        let char = self.ring.characteristic();
        for (k, c) in v.iter_mut().enumerate() {
            let m = match &self.orders[n as usize][k] {
                Some(o) => Some(o.clone()),
                None if char > 0 => Some(BigInt::from(char)),
                None => None,
            };
            if let Some(m) = m {
                let r = ((c.numer() % &m) + &m) % &m;
                *c = BigRational::from_integer(r);
            }
        }
        v
    }

    /// For `p, q ≥ 1`, the rank of the image of `H^p ⊗ H^q → H^{p+q}`,
    /// counted over the field of the table or, over ℤ, over ℚ on the free
    /// part. Independent of the chosen generators.
    pub fn product_ranks(&self) -> BTreeMap<(i64, i64), usize> {
        let mut out = BTreeMap::new();
        for p in 1..=self.max_degree {
            for q in 1..=self.max_degree - p {
                let keep: Vec<usize> =
                    (0..self.rank(p + q)).filter(|&k| self.orders[(p + q) as usize][k].is_none()).collect();
                let rows: Vec<Vec<BigRational>> = self
                    .products
                    .iter()
                    .filter(|((a, _, b, _), _)| *a == p && *b == q)
                    .map(|(_, v)| keep.iter().map(|&k| v[k].clone()).collect())
                    .collect();
                let rank = if rows.is_empty() || keep.is_empty() {
                    0
                } else {
                    match self.ring {
                        CoefficientRing::PrimeField(pr) => {
                            let r = crate::linalg::PrimeField::new(pr);
                            let m = ExactMatrix::from_rows(
                                rows.iter().map(|row| row.iter().map(|c| r.from_bigint(&c.to_integer())).collect()).collect(),
                            );
                            rank(&r, &m)
                        }
                        _ => rank(&crate::linalg::Rationals, &ExactMatrix::from_rows(rows)),
                    }
                };
                if rank > 0 {
                    out.insert((p, q), rank);
                }
            }
        }
        out
    }

    /// Checks `xy = (−1)^{pq} yx` on all pairs of generators.
    pub fn is_graded_commutative(&self) -> bool {
        for p in 0..=self.max_degree {
            for q in 0..=self.max_degree - p {
                for i in 0..self.rank(p) {
                    for j in 0..self.rank(q) {
                        let xy = self.product(p, i, q, j);
                        let yx: Vec<BigRational> = self
                            .product(q, j, p, i)
                            .into_iter()
                            .map(|c| c * BigRational::from_integer(parity_sign(p * q).into()))
                            .collect();
                        if self.reduce(p + q, xy) != self.reduce(p + q, yx) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Checks `(xy)z = x(yz)` on all triples of generators.
    pub fn is_associative(&self) -> bool {
        let unit = |n: i64, i: usize| -> Vec<BigRational> {
            (0..self.rank(n)).map(|k| if k == i { BigRational::one() } else { BigRational::zero() }).collect()
        };
        for p in 0..=self.max_degree {
            for q in 0..=self.max_degree - p {
                for r in 0..=self.max_degree - p - q {
                    for i in 0..self.rank(p) {
                        for j in 0..self.rank(q) {
                            let xy = self.product(p, i, q, j);
                            for k in 0..self.rank(r) {
                                let left = self.multiply(p + q, &xy, r, &unit(r, k));
                                let yz = self.product(q, j, r, k);
                                let right = self.multiply(p, &unit(p, i), q + r, &yz);
                                if left != right {
                                    return false;
                                }
                            }
                        }
                    }
                }
            }
        }
        true
    }

    pub fn describe_vector(&self, n: i64, v: &[BigRational]) -> String {
        let mut parts = Vec::new();
        for (k, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let name = &self.names[n as usize][k];
            if c.is_one() {
                parts.push(name.clone());
            } else if *c == -BigRational::one() {
                parts.push(format!("-{name}"));
            } else {
                parts.push(format!("{c} {name}"));
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    /// Plain-text rendering: one line per degree, then the nonzero products.
    pub fn render(&self) -> String {
        let mut s = String::new();
        let idx = if self.grading == Grading::Upper { "^" } else { "_" };
        let _ = writeln!(s, "# ring {}, degrees 0..={}", self.ring, self.max_degree);
        for (n, g) in self.groups.iter().enumerate() {
            let _ = writeln!(s, "H{idx}{n} = {}  [{}]", g.describe(self.ring), self.names[n].join(", "));
        }
        for (&(p, i, q, j), v) in &self.products {
            if p == 0 || q == 0 {
                continue;
            }
            let _ = writeln!(
                s,
                "{} · {} = {}",
                self.names[p as usize][i],
                self.names[q as usize][j],
                self.describe_vector(p + q, v)
            );
        }
        s
    }
}

/// Generators and coordinate maps of the homology of a complex through a
/// given degree.
pub struct ClassBases<R: Euclidean> {
    pub r: R,
    pub complex: TruncatedComplex,
    pub bases: Vec<HomologyBasis<R::E>>,
}

pub(crate) fn apply_sparse<R: Euclidean>(r: &R, m: &SparseMatrix, v: &[R::E]) -> Vec<R::E> {
    let mut out = vec![r.zero(); m.rows()];
    for (j, x) in v.iter().enumerate() {
        if r.is_zero(x) {
            continue;
        }
        for &(i, c) in m.column(j) {
            out[i] = r.add(&out[i], &r.mul(&r.from_i64(c), x));
        }
    }
    out
}

impl<R: Euclidean> ClassBases<R> {
    /// Homology bases in degrees `0..=top`. With a seed, every generator is
    /// moved by a random boundary.
    pub fn new(r: &R, complex: &TruncatedComplex, top: i64, shift: Option<u64>) -> Result<Self, BarError> {
        let mut bases = Vec::new();
        let mut rng = shift.map(ChaCha8Rng::seed_from_u64);
        let dir = complex.direction();
        for n in 0..=top {
            let mut b = complex.homology_basis(r, n)?;
            if let Some(rng) = rng.as_mut() {
                let src = n - dir;
                if src >= 0 && complex.dim(src) > 0 {
                    let d_in = complex.differential(src);
                    for g in b.generators.iter_mut() {
                        let w: Vec<R::E> = (0..complex.dim(src)).map(|_| r.from_i64(rng.gen_range(-2..=2))).collect();
                        let bd = apply_sparse(r, &d_in, &w);
                        for (x, y) in g.iter_mut().zip(&bd) {
                            *x = r.add(x, y);
                        }
                    }
                }
            }
            bases.push(b);
        }
        Ok(ClassBases { r: r.clone(), complex: complex.clone(), bases })
    }

    pub fn top(&self) -> i64 {
        self.bases.len() as i64 - 1
    }

    pub fn is_cycle(&self, n: i64, v: &[R::E]) -> bool {
        apply_sparse(&self.r, &self.complex.differential(n), v).iter().all(|x| self.r.is_zero(x))
    }

    pub fn coordinates(&self, n: i64, cycle: &[R::E]) -> Vec<R::E> {
        self.bases[n as usize].coordinates(&self.r, cycle)
    }

    /// Generator names: the basis element when the representative is a
    /// single basis element, `h{n}.{i}` otherwise.
    fn names(&mut self) -> Vec<Vec<String>> {
        let r = self.r.clone();
        let mut out = Vec::new();
        for (n, b) in self.bases.iter_mut().enumerate() {
            let basis_names = self.complex.module().names(n as i64);
            let mut names = Vec::new();
            for (i, g) in b.generators.iter_mut().enumerate() {
                let support: Vec<usize> = (0..g.len()).filter(|&k| !r.is_zero(&g[k])).collect();
                let mut name = format!("h{n}.{i}");
                if support.len() == 1 {
                    let k = support[0];
                    if r.is_unit(&g[k]) && (r.is_zero(&r.sub(&g[k], &r.one())) || r.is_zero(&r.add(&g[k], &r.one()))) {
                        if !r.is_zero(&r.sub(&g[k], &r.one())) {
                            g[k] = r.one();
                        }
                        name = basis_names[k].clone();
                    }
                }
                names.push(name);
            }
            out.push(names);
        }
        out
    }

    /// Structure constants of a chain-level product.
    pub fn table(
        mut self,
        ring: CoefficientRing,
        product: impl Fn(i64, &[R::E], i64, &[R::E]) -> Vec<R::E>,
    ) -> Result<HochschildClassTable, BarError> {
        let names = self.names();
        let top = self.top();
        let mut products = BTreeMap::new();
        for p in 0..=top {
            for q in 0..=top - p {
                for (i, x) in self.bases[p as usize].generators.iter().enumerate() {
                    for (j, y) in self.bases[q as usize].generators.iter().enumerate() {
                        let z = product(p, x, q, y);
                        if !self.is_cycle(p + q, &z) {
                            return Err(BarError::ProductNotCycle { p, q });
                        }
                        let c = self.coordinates(p + q, &z);
                        if c.iter().any(|e| !self.r.is_zero(e)) {
                            products.insert((p, i, q, j), c.iter().map(|e| self.r.to_rational(e)).collect());
                        }
                    }
                }
            }
        }
        let r = &self.r;
        Ok(HochschildClassTable {
            ring,
            grading: self.complex.grading(),
            max_degree: top,
            groups: self.bases.iter().enumerate().map(|(n, b)| b.summary(r, n as i64)).collect(),
            names,
            orders: self
                .bases
                .iter()
                .map(|b| b.orders.iter().map(|o| o.as_ref().map(|x| r.to_bigint(x))).collect())
                .collect(),
            products,
        })
    }
}

/// A chain-level diagonal `C → C ⊗ C` tabulated per basis element:
/// `terms[n][x]` lists `(p, i, j, c)` for `c·x'ᵢ⊗x''ⱼ` with `|x'| = p`.
#[derive(Clone, Debug, Default)]
pub struct DiagonalTerms {
    pub terms: Vec<Vec<Vec<(i64, usize, usize, i64)>>>,
}

impl DiagonalTerms {
    pub fn from_keys<K: Clone + Eq + std::hash::Hash + Ord>(
        basis: &KeyedBasis<K>,
        top: i64,
        diagonal: impl Fn(&K) -> LinComb<(K, K)>,
    ) -> Result<Self, BarError> {
        let mut terms = Vec::new();
        for n in 0..=top {
            let mut per = Vec::new();
            for k in basis.keys(n) {
                let mut t = Vec::new();
                for ((x, y), c) in diagonal(k).iter() {
                    let (p, i) = basis.locate(x).ok_or_else(|| BarError::Malformed("diagonal leaves the basis".into()))?;
                    let (q, j) = basis.locate(y).ok_or_else(|| BarError::Malformed("diagonal leaves the basis".into()))?;
                    if p + q != n {
                        return Err(BarError::Malformed("diagonal does not preserve degree".into()));
                    }
                    t.push((p, i, j, c));
                }
                per.push(t);
            }
            terms.push(per);
        }
        Ok(DiagonalTerms { terms })
    }

    /// `(α∪β)(x) = (−1)^{pq} Σ c·α(x')β(x'')` for cochains `α`, `β` of
    /// degrees `p`, `q`.
    pub fn cup<R: Euclidean>(&self, r: &R, p: i64, alpha: &[R::E], q: i64, beta: &[R::E]) -> Vec<R::E> {
        let sign = parity_sign(p * q);
        self.terms[(p + q) as usize]
            .iter()
            .map(|ts| {
                let mut acc = r.zero();
                for &(pp, i, j, c) in ts {
                    if pp != p || r.is_zero(&alpha[i]) || r.is_zero(&beta[j]) {
                        continue;
                    }
                    acc = r.add(&acc, &r.mul(&r.from_i64(sign * c), &r.mul(&alpha[i], &beta[j])));
                }
                acc
            })
            .collect()
    }
}

/// Ring table of the homology of the dual of `complex`, with the product
/// dual to `diagonal`.
pub fn cup_product_table(
    complex: &TruncatedComplex,
    diagonal: &DiagonalTerms,
    n: i64,
    shift: Option<u64>,
) -> Result<HochschildClassTable, BarError> {
    let ring = complex.ring();
    let dual = dual_complex(complex);
    with_ring!(ring, r => {
        let classes = ClassBases::new(r, &dual, n, shift)?;
        classes.table(ring, |p, x, q, y| diagonal.cup(r, p, x, q, y))
    })
}

/// `HH^*(K) = H(C(K)^∨)` through degree `n` with the cup product dual to
/// the cyclic diagonal.
pub fn hochschild_cohomology_ring(h: &HopfData, ring: CoefficientRing, n: i64) -> Result<HochschildClassTable, BarError> {
    hochschild_cohomology_ring_shifted(h, ring, n, None)
}

/// As [`hochschild_cohomology_ring`], with every representative moved by a
/// seeded random coboundary.
pub fn hochschild_cohomology_ring_shifted(
    h: &HopfData,
    ring: CoefficientRing,
    n: i64,
    shift: Option<u64>,
) -> Result<HochschildClassTable, BarError> {
    let c = cyclic_bar(h.algebra(), ring, n)?;
    let diag = DiagonalTerms::from_keys(&c.basis, n, |k| cyclic_diagonal(h, k))?;
    cup_product_table(&c.complex, &diag, n, shift)
}

/// The product of `C(A)` for a commutative `A`:
/// `(a[s])·(b[t]) = (−1)^{|s||b|} ab[s ш t]`, shuffles over suspended degrees.
pub fn cdga_chain_product<A: AugmentedDga>(
    alg: &A,
    x: &CycKey<A::Elem>,
    y: &CycKey<A::Elem>,
) -> LinComb<CycKey<A::Elem>> {
    let s_deg: i64 = x.spine.iter().map(|e| suspended_degree(alg, e)).sum();
    let sign = parity_sign(s_deg * alg.degree(&y.a));
    let ab = alg.mul(&x.a, &y.a);
    let sh = shuffle_product(&x.spine, &y.spine, |e| suspended_degree(alg, e));
    let mut out = LinComb::new();
    for (a, c) in ab.iter() {
        for (s, e) in sh.iter() {
            out.add_term(CycKey { a: a.clone(), spine: s.clone() }, sign * c * e);
        }
    }
    out
}

/// `HH_*(A)` of a strictly commutative algebra with its shuffle product.
pub fn hh_cdga_ring(alg: &TabulatedDga, ring: CoefficientRing, n: i64) -> Result<HochschildClassTable, BarError> {
    hh_cdga_ring_shifted(alg, ring, n, None)
}

pub fn hh_cdga_ring_shifted(
    alg: &TabulatedDga,
    ring: CoefficientRing,
    n: i64,
    shift: Option<u64>,
) -> Result<HochschildClassTable, BarError> {
    if !alg.is_commutative() {
        return Err(BarError::NotCommutative(alg.name(1).to_string()));
    }
    let c = cyclic_bar(alg, ring, n)?;
    keyed_ring_table(&c, n, shift, |x, y| cdga_chain_product(alg, x, y))
}

/// Ring table of the homology of a keyed complex with a chain-level product
/// given on basis elements.
pub fn keyed_ring_table<K: Clone + Eq + std::hash::Hash + Ord>(
    c: &KeyedComplex<K>,
    n: i64,
    shift: Option<u64>,
    product: impl Fn(&K, &K) -> LinComb<K>,
) -> Result<HochschildClassTable, BarError> {
    let ring = c.complex.ring();
    let basis = &c.basis;
    with_ring!(ring, r => {
        let classes = ClassBases::new(r, &c.complex, n, shift)?;
        classes.table(ring, |p, x, q, y| {
            let mut out = vec![r.zero(); basis.dim(p + q)];
            for (i, a) in x.iter().enumerate() {
                if r.is_zero(a) {
                    continue;
                }
                for (j, b) in y.iter().enumerate() {
                    if r.is_zero(b) {
                        continue;
                    }
                    let ab = r.mul(a, b);
                    for (k, c) in product(&basis.keys(p)[i], &basis.keys(q)[j]).iter() {
                        let (m, idx) = basis.locate(k).expect("product stays in the basis");
                        debug_assert_eq!(m, p + q);
                        out[idx] = r.add(&out[idx], &r.mul(&r.from_i64(c), &ab));
                    }
                }
            }
            out
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dg::{shuffle_diagonal, tensorization_of_coalgebra, truncated_polynomial, FreeDga, TabulatedCoalgebra};
    use num_traits::Signed;

    fn abs_coeff(t: &HochschildClassTable, p: i64, i: usize, q: i64, j: usize, k: usize) -> BigRational {
        t.product(p, i, q, j)[k].abs()
    }

    #[test]
    fn ground_ring() {
        let a = FreeDga::from_named(&[], &[]).unwrap();
        let h = shuffle_diagonal(&a).unwrap();
        let t = hochschild_cohomology_ring(&h, CoefficientRing::Integers, 3).unwrap();
        assert_eq!(t.rank(0), 1);
        assert!((1..=3).all(|n| t.rank(n) == 0));
        assert!(t.product(0, 0, 0, 0)[0].is_one());
    }

    #[test]
    fn free_loops_on_three_sphere() {
        let a = FreeDga::from_named(&[("v", 2)], &[]).unwrap();
        let h = shuffle_diagonal(&a).unwrap();
        let t = hochschild_cohomology_ring(&h, CoefficientRing::Integers, 8).unwrap();
        assert_eq!(t.rank(1), 0);
        for n in [0, 2, 3, 4, 5, 6, 7, 8] {
            assert_eq!(t.free_rank(n), 1, "degree {n}");
            assert!(t.torsion(n).is_empty());
        }
        // γ₁γ₁ = ±2γ₂, γ₁γ₂ = ±3γ₃, u·u = 0 for u in degree 3
        assert_eq!(abs_coeff(&t, 2, 0, 2, 0, 0), BigRational::from_integer(2.into()));
        assert_eq!(abs_coeff(&t, 2, 0, 4, 0, 0), BigRational::from_integer(3.into()));
        assert!(t.product(3, 0, 3, 0)[0].is_zero());
        // u·γ₁ generates degree 5
        assert!(abs_coeff(&t, 3, 0, 2, 0, 0).is_one());
        assert!(t.is_graded_commutative());
        assert!(t.is_associative());
    }

    #[test]
    fn representatives_do_not_matter() {
        let a = FreeDga::from_named(&[("v", 1)], &[]).unwrap();
        let h = shuffle_diagonal(&a).unwrap();
        let base = hochschild_cohomology_ring(&h, CoefficientRing::Integers, 6).unwrap();
        for seed in [1, 2, 3] {
            let moved = hochschild_cohomology_ring_shifted(&h, CoefficientRing::Integers, 6, Some(seed)).unwrap();
            assert_eq!(base.products, moved.products);
            assert_eq!(base.groups.iter().map(|g| g.torsion.clone()).collect::<Vec<_>>(),
                       moved.groups.iter().map(|g| g.torsion.clone()).collect::<Vec<_>>());
        }
    }

    #[test]
    fn free_loops_on_two_sphere_modules() {
        let a = FreeDga::from_named(&[("v", 1)], &[]).unwrap();
        let h = shuffle_diagonal(&a).unwrap();
        let t = hochschild_cohomology_ring(&h, CoefficientRing::Integers, 7).unwrap();
        let two = vec![BigInt::from(2)];
        for n in 0..=7 {
            assert_eq!(t.free_rank(n), 1, "degree {n}");
            let expected = if n >= 3 && n % 2 == 1 { two.clone() } else { vec![] };
            assert_eq!(t.torsion(n), expected, "degree {n}");
        }
    }

    #[test]
    fn cp2_squares_over_f2() {
        let c = TabulatedCoalgebra::projective_space(2, 2).unwrap();
        let h = tensorization_of_coalgebra(&c).unwrap();
        let t = hochschild_cohomology_ring(&h, CoefficientRing::f2(), 6).unwrap();
        let wedge = shuffle_diagonal(h.algebra()).unwrap();
        let w = hochschild_cohomology_ring(&wedge, CoefficientRing::f2(), 6).unwrap();
        assert_eq!((0..=6).map(|n| t.rank(n)).collect::<Vec<_>>(), (0..=6).map(|n| w.rank(n)).collect::<Vec<_>>());
        assert_eq!(t.rank(2), 1);
        let sq = |tab: &HochschildClassTable| tab.product(2, 0, 2, 0).iter().any(|c| !c.is_zero());
        assert!(sq(&t));
        assert!(!sq(&w));
    }

    #[test]
    fn cdga_ring_of_two_sphere_cohomology() {
        let a = truncated_polynomial("x", 2, 1, Grading::Upper).unwrap();
        let t = hh_cdga_ring(&a, CoefficientRing::Integers, 7).unwrap();
        let two = vec![BigInt::from(2)];
        for n in 0..=7 {
            assert_eq!(t.free_rank(n), 1, "degree {n}");
            let expected = if n >= 3 && n % 2 == 1 { two.clone() } else { vec![] };
            assert_eq!(t.torsion(n), expected, "degree {n}");
        }
        assert!(t.is_graded_commutative());
        assert!(t.is_associative());
    }

    #[test]
    fn cdga_product_is_a_chain_map() {
        let a = truncated_polynomial("x", 2, 2, Grading::Upper).unwrap();
        let c = cyclic_bar(&a, CoefficientRing::Integers, 6).unwrap();
        let d = |k: &CycKey<usize>| crate::bar::cyclic_differential(&a, k);
        for p in 0..=3 {
            for q in 0..=3 {
                for x in c.basis.keys(p) {
                    for y in c.basis.keys(q) {
                        let lhs = cdga_chain_product(&a, x, y).apply(d);
                        let mut rhs = d(x).apply(|u| cdga_chain_product(&a, u, y));
                        rhs.add_scaled(&d(y).apply(|v| cdga_chain_product(&a, x, v)), parity_sign(p));
                        assert_eq!(lhs, rhs, "{x:?} {y:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn non_commutative_input_rejected() {
        let mut b = crate::dg::TabulatedDgaBuilder::new(Grading::Upper, 4);
        let x = b.element("a", 2);
        let y = b.element("b", 2);
        let z = b.element("c", 4);
        b.product(x, y, LinComb::single(z, 1));
        let a = b.build(false).unwrap();
        assert!(matches!(hh_cdga_ring(&a, CoefficientRing::Integers, 3), Err(BarError::NotCommutative(_))));
    }
}
