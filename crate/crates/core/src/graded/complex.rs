use std::collections::BTreeMap;

use super::module::{GradedBasisModule, Grading};
use super::sign::parity_sign;
use super::GradedError;
use crate::linalg::{
    homology_basis, normalize_chain, sparse_invariant_factors, CoefficientRing, Euclidean, HomologyBasis,
    HomologySummary, SparseMatrix,
};
use crate::with_ring;

/// A graded module with a differential stored as integer matrices, read in
/// `ring`. `d[n]` maps degree `n` to degree `n + direction`. Every degree up
/// to the module's `max_degree` is complete.
#[derive(Clone, Debug)]
pub struct TruncatedComplex {
    ring: CoefficientRing,
    module: GradedBasisModule,
    d: BTreeMap<i64, SparseMatrix>,
}

impl TruncatedComplex {
    /// Validates shapes and `d ∘ d = 0` in `ring`.
    pub fn new(
        ring: CoefficientRing,
        module: GradedBasisModule,
        d: BTreeMap<i64, SparseMatrix>,
    ) -> Result<Self, GradedError> {
        let c = TruncatedComplex { ring, module, d };
        c.check_shapes()?;
        c.check_square_zero()?;
        Ok(c)
    }

    fn check_shapes(&self) -> Result<(), GradedError> {
        for (&n, m) in &self.d {
            let t = n + self.direction();
            if m.cols() != self.dim(n) || m.rows() != self.dim(t) {
                return Err(GradedError::ShapeMismatch {
                    degree: n,
                    expected: (self.dim(t), self.dim(n)),
                    found: (m.rows(), m.cols()),
                });
            }
        }
        Ok(())
    }

    fn check_square_zero(&self) -> Result<(), GradedError> {
        let modulus = self.ring.characteristic();
        for (&n, first) in &self.d {
            if let Some(second) = self.d.get(&(n + self.direction())) {
                if let Some((row, col)) = second.mul(first).first_nonzero_mod(modulus) {
                    return Err(GradedError::NotNilpotent { degree: n, row, col });
                }
            }
        }
        Ok(())
    }

    pub fn ring(&self) -> CoefficientRing {
        self.ring
    }

    pub fn module(&self) -> &GradedBasisModule {
        &self.module
    }

    pub fn grading(&self) -> Grading {
        self.module.grading()
    }

    pub fn direction(&self) -> i64 {
        self.module.grading().direction()
    }

    pub fn valid_through(&self) -> i64 {
        self.module.max_degree()
    }

    pub fn dim(&self, n: i64) -> usize {
        self.module.dim(n)
    }

    /// `d[n]`, or the zero matrix of the right shape.
    pub fn differential(&self, n: i64) -> SparseMatrix {
        self.d
            .get(&n)
            .cloned()
            .unwrap_or_else(|| SparseMatrix::zero(self.dim(n + self.direction()), self.dim(n)))
    }

    pub fn differentials(&self) -> &BTreeMap<i64, SparseMatrix> {
        &self.d
    }

    /// The same integer complex read in another ring, revalidated.
    pub fn over(&self, ring: CoefficientRing) -> Result<Self, GradedError> {
        TruncatedComplex::new(ring, self.module.clone(), self.d.clone())
    }

    fn homology_degree_ok(&self, n: i64) -> Result<(), GradedError> {
        if n < 0 || n >= self.valid_through() {
            return Err(GradedError::BeyondTruncation { degree: n, valid_through: self.valid_through() });
        }
        Ok(())
    }

    /// Free rank and torsion of the homology at `n`, without representatives.
    pub fn homology(&self, n: i64) -> Result<HomologySummary, GradedError> {
        self.homology_degree_ok(n)?;
        let d_out = self.differential(n);
        let d_in = self.differential(n - self.direction());
        let (r_out, _) = sparse_invariant_factors(&d_out, self.ring);
        let (r_in, mut torsion) = sparse_invariant_factors(&d_in, self.ring);
        normalize_chain(&mut torsion);
        Ok(HomologySummary {
            degree: n,
            free_rank: self.dim(n) - r_out - r_in,
            torsion,
            representative_cycles: Vec::new(),
        })
    }

    /// Homology at `n` with cycle representatives for every generator.
    pub fn homology_with_representatives(&self, n: i64) -> Result<HomologySummary, GradedError> {
        with_ring!(self.ring, r => Ok(self.homology_basis(r, n)?.summary(r, n)))
    }

    /// Generators and coordinate extraction for the homology at `n` in `r`.
    pub fn homology_basis<R: Euclidean>(&self, r: &R, n: i64) -> Result<HomologyBasis<R::E>, GradedError> {
        self.homology_degree_ok(n)?;
        let d_out = self.differential(n).to_ring(r);
        let d_in = self.differential(n - self.direction()).to_ring(r);
        Ok(homology_basis(r, &d_in, &d_out)?)
    }
}

/// A family of matrices `φ_n : S_n → T_{n'}` where `n'` is reached by lower
/// degree `degree` in the shared index convention.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMap {
    grading: Grading,
    degree: i64,
    blocks: BTreeMap<i64, SparseMatrix>,
}

impl GradedMap {
    pub fn new(grading: Grading, degree: i64, blocks: BTreeMap<i64, SparseMatrix>) -> Self {
        GradedMap { grading, degree, blocks }
    }

    pub fn identity(c: &TruncatedComplex) -> Self {
        let blocks = (0..=c.valid_through())
            .map(|n| {
                let k = c.dim(n);
                (n, SparseMatrix::from_columns(k, (0..k).map(|i| vec![(i, 1)]).collect()))
            })
            .collect();
        GradedMap { grading: c.grading(), degree: 0, blocks }
    }

    pub fn zero(source: &TruncatedComplex, target: &TruncatedComplex, degree: i64) -> Self {
        let g = source.grading();
        let blocks = (0..=source.valid_through())
            .filter_map(|n| {
                let t = g.shift(n, degree);
                (t >= 0 && t <= target.valid_through())
                    .then(|| (n, SparseMatrix::zero(target.dim(t), source.dim(n))))
            })
            .collect();
        GradedMap { grading: g, degree, blocks }
    }

    pub fn grading(&self) -> Grading {
        self.grading
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn blocks(&self) -> &BTreeMap<i64, SparseMatrix> {
        &self.blocks
    }

    pub fn block(&self, n: i64) -> Option<&SparseMatrix> {
        self.blocks.get(&n)
    }

    pub fn target_index(&self, n: i64) -> i64 {
        self.grading.shift(n, self.degree)
    }

    /// `self ∘ first`, on the degrees where both are defined.
    pub fn compose(&self, first: &GradedMap) -> Result<GradedMap, GradedError> {
        if self.grading != first.grading {
            return Err(GradedError::GradingMismatch);
        }
        let mut blocks = BTreeMap::new();
        for (&n, a) in &first.blocks {
            if let Some(b) = self.blocks.get(&first.target_index(n)) {
                if b.cols() != a.rows() {
                    return Err(GradedError::ShapeMismatch {
                        degree: n,
                        expected: (a.rows(), a.cols()),
                        found: (b.rows(), b.cols()),
                    });
                }
                blocks.insert(n, b.mul(a));
            }
        }
        Ok(GradedMap { grading: self.grading, degree: self.degree + first.degree, blocks })
    }

    /// Sum on common degrees.
    pub fn add(&self, other: &GradedMap) -> Result<GradedMap, GradedError> {
        if self.grading != other.grading || self.degree != other.degree {
            return Err(GradedError::GradingMismatch);
        }
        let blocks = self
            .blocks
            .iter()
            .filter_map(|(n, a)| other.blocks.get(n).map(|b| (*n, a.add(b))))
            .collect();
        Ok(GradedMap { grading: self.grading, degree: self.degree, blocks })
    }

    pub fn scaled(&self, c: i64) -> GradedMap {
        GradedMap {
            grading: self.grading,
            degree: self.degree,
            blocks: self.blocks.iter().map(|(n, a)| (*n, a.scaled(c))).collect(),
        }
    }

    /// The differential of a complex as a map of degree −1.
    pub fn differential_of(c: &TruncatedComplex) -> GradedMap {
        let blocks = (0..=c.valid_through())
            .filter(|n| {
                let t = n + c.direction();
                t >= 0 && t <= c.valid_through()
            })
            .map(|n| (n, c.differential(n)))
            .collect();
        GradedMap { grading: c.grading(), degree: -1, blocks }
    }

    /// True when every block vanishes in `ring`.
    pub fn is_zero_in(&self, ring: CoefficientRing) -> bool {
        self.blocks.values().all(|m| m.is_zero_mod(ring.characteristic()))
    }

    /// Checks `d_T φ = (−1)^{|φ|} φ d_S` on the degrees where both sides are defined.
    pub fn check_chain_map(&self, source: &TruncatedComplex, target: &TruncatedComplex) -> Result<(), GradedError> {
        let ds = GradedMap::differential_of(source);
        let dt = GradedMap::differential_of(target);
        let left = dt.compose(self)?;
        let right = self.compose(&ds)?.scaled(parity_sign(self.degree));
        let modulus = source.ring().characteristic();
        for (n, l) in &left.blocks {
            if let Some(r) = right.blocks.get(n) {
                if let Some((row, col)) = l.sub(r).first_nonzero_mod(modulus) {
                    return Err(GradedError::NotChainMap { degree: *n, row, col });
                }
            }
        }
        Ok(())
    }
}

/// `C ⊗ D` with `d(x⊗y) = dx⊗y + (−1)^{|x|} x⊗dy`. Basis in degree `n`
/// lists pairs by increasing `p = |x|`, then row-major in `(x, y)`.
pub fn tensor_complex(c: &TruncatedComplex, d: &TruncatedComplex) -> Result<TruncatedComplex, GradedError> {
    if c.ring() != d.ring() {
        return Err(GradedError::RingMismatch);
    }
    if c.grading() != d.grading() {
        return Err(GradedError::GradingMismatch);
    }
    let grading = c.grading();
    let top = c.valid_through().min(d.valid_through());
    let mut module = GradedBasisModule::new(grading, top);
    let mut offsets: BTreeMap<(i64, i64), usize> = BTreeMap::new();
    for n in 0..=top {
        let mut off = 0;
        for p in 0..=n {
            offsets.insert((n, p), off);
            for x in c.module().names(p) {
                for y in d.module().names(n - p) {
                    module.push(n, format!("{x}⊗{y}"))?;
                }
            }
            off += c.dim(p) * d.dim(n - p);
        }
    }
    let dir = grading.direction();
    let mut diffs = BTreeMap::new();
    for n in 0..=top {
        let t = n + dir;
        if t < 0 || t > top {
            continue;
        }
        let mut cols = Vec::with_capacity(module.dim(n));
        for p in 0..=n {
            let q = n - p;
            let dc = c.differential(p);
            let dd = d.differential(q);
            let sign = parity_sign(p);
            for i in 0..c.dim(p) {
                for j in 0..d.dim(q) {
                    let mut col = Vec::new();
                    if p + dir >= 0 {
                        let base = offsets[&(t, p + dir)];
                        for &(k, v) in dc.column(i) {
                            col.push((base + k * d.dim(q) + j, v));
                        }
                    }
                    if q + dir >= 0 {
                        let base = offsets[&(t, p)];
                        for &(k, v) in dd.column(j) {
                            col.push((base + i * d.dim(q + dir) + k, sign * v));
                        }
                    }
                    cols.push(col);
                }
            }
        }
        diffs.insert(n, SparseMatrix::from_columns(module.dim(t), cols));
    }
    TruncatedComplex::new(c.ring(), module, diffs)
}

/// The dual complex, with `d^∨(f) = (−1)^{|f|} f ∘ d`. Grading flips; the
/// block from `(C_t)^∨` to `(C_n)^∨` is `(−1)^t d[n]ᵀ`.
pub fn dual_complex(c: &TruncatedComplex) -> TruncatedComplex {
    let module = c.module().dual(|n| format!("{n}^∨"));
    let mut diffs = BTreeMap::new();
    for (&n, m) in c.differentials() {
        let t = n + c.direction();
        diffs.insert(t, m.transpose().scaled(parity_sign(t)));
    }
    TruncatedComplex::new(c.ring(), module, diffs).expect("dual of a complex is a complex")
}

/// `φ^∨(f) = (−1)^{|f||φ|} f ∘ φ`; the block keyed by the dual source index `s`
/// carries the sign `(−1)^{s·|φ|}`.
pub fn dual_map(phi: &GradedMap) -> GradedMap {
    let g = phi.grading();
    let blocks = phi
        .blocks()
        .iter()
        .map(|(&n, m)| {
            let s = phi.target_index(n);
            (s, m.transpose().scaled(parity_sign(s * phi.degree())))
        })
        .collect();
    GradedMap::new(g.flip(), phi.degree(), blocks)
}

/// Invariant factors of homology in every degree below the truncation.
pub fn homology_table(c: &TruncatedComplex) -> Result<Vec<HomologySummary>, GradedError> {
    (0..c.valid_through()).map(|n| c.homology(n)).collect()
}

/// Torsion rendered as plain integers, convenient in assertions.
pub fn torsion_i64(h: &HomologySummary) -> Vec<i64> {
    h.torsion.iter().map(|t| i64::try_from(t.clone()).unwrap_or(i64::MAX)).collect()
}
