use crate::bar::{apply_sparse, cyclic_bar, cyclic_differential, keyed_ring_table, ClassBases, CycKey, HochschildClassTable};
use crate::dg::{step_path_product, tensorization_of_coalgebra, TabulatedCoalgebra, TabulatedDga, TabulatedDgaBuilder};
use crate::graded::{parity_sign, suspend_name, Grading, KeyedComplex};
use crate::linalg::{CoefficientRing, Euclidean};
use crate::lincomb::LinComb;
use crate::perturb::{cobar_duality_iso, small_cyclic_complex, transported_diagonal};
use crate::with_ring;

use super::LoopError;

/// `𝕜 ⊕ s⁻¹Ā` with trivial product: the cohomology of the suspension.
pub fn suspension_algebra(a: &TabulatedDga) -> Result<TabulatedDga, LoopError> {
    let top = (1..a.len()).map(|i| a.degree(i) + 1).max().unwrap_or(0);
    let mut b = TabulatedDgaBuilder::new(Grading::Upper, top);
    for i in 1..a.len() {
        b.element(suspend_name(a.name(i), -1), a.degree(i) + 1);
    }
    Ok(b.build(true)?)
}

/// `[a₁|…|aₙ]` for the base, `s⁻¹a[a₁|…|aₙ]` for the bimodule.
fn extension_name(a: &TabulatedDga, k: &CycKey<usize>) -> String {
    let spine: Vec<&str> = k.spine.iter().map(|&l| a.name(l)).collect();
    match (k.a, spine.is_empty()) {
        (0, true) => "1".into(),
        (0, false) => format!("[{}]", spine.join("|")),
        (b, _) => format!("s⁻¹{}[{}]", a.name(b), spine.join("|")),
    }
}

/// `C(𝕜 ⊕ s⁻¹Ā) = TĀ ⊕ (s⁻¹Ā ⊗ TĀ)` as the trivial extension of the
/// step-path algebra `TC Ā` by the bimodule `s⁻¹Ā ⊗ TĀ`.
#[derive(Clone, Debug)]
pub struct TrivialExtensionRing {
    pub algebra: TabulatedDga,
    pub suspension: TabulatedDga,
    pub complex: KeyedComplex<CycKey<usize>>,
}

impl TrivialExtensionRing {
    pub fn new(a: &TabulatedDga, ring: CoefficientRing, n: i64) -> Result<Self, LoopError> {
        if a.grading() != Grading::Upper {
            return Err(LoopError::NotFreeHomology("expected a cochain algebra".into()));
        }
        if (1..a.len()).any(|i| !a.d_basis(i).is_zero()) {
            return Err(LoopError::NotFreeHomology("the algebra has a nonzero differential".into()));
        }
        let suspension = suspension_algebra(a)?;
        let bar = cyclic_bar(&suspension, ring, n)?;
        let complex = KeyedComplex::build(
            ring,
            bar.basis,
            |k| cyclic_differential(&suspension, k),
            |k| extension_name(a, k),
        )?;
        Ok(TrivialExtensionRing { algebra: a.clone(), suspension, complex })
    }

    fn deg(&self, l: usize) -> i64 {
        self.algebra.degree(l)
    }

    fn word_deg(&self, w: &[usize]) -> i64 {
        w.iter().map(|&l| self.deg(l)).sum()
    }

    fn step_path(&self, x: &[usize], y: &[usize]) -> LinComb<Vec<usize>> {
        step_path_product(x, y, |&l| self.deg(l), |&p, &q| self.algebra.mul(p, q))
    }

    /// The product of two basis elements, with Koszul signs:
    /// `(s⁻¹a⊗m)·α = s⁻¹a⊗mα ± s⁻¹(a·aₙ)⊗m(a₁…aₙ₋₁)` and
    /// `α·(s⁻¹a⊗m) = ± s⁻¹a⊗αm ± s⁻¹(a₁·a)⊗(a₂…aₙ)m`, products of words
    /// being step-path products.
    pub fn product(&self, x: &CycKey<usize>, y: &CycKey<usize>) -> LinComb<CycKey<usize>> {
        let mut out = LinComb::new();
        match (x.a, y.a) {
            (0, 0) => {
                for (w, c) in self.step_path(&x.spine, &y.spine).iter() {
                    out.add_term(CycKey { a: 0, spine: w.clone() }, c);
                }
            }
            (_, 0) if y.spine.is_empty() => out.add_term(x.clone(), 1),
            (0, _) if x.spine.is_empty() => out.add_term(y.clone(), 1),
            (a, 0) => {
                // (s⁻¹a ⊗ m)·α
                let (m, alpha) = (&x.spine, &y.spine);
                let dm = self.word_deg(m);
                for (w, c) in self.step_path(m, alpha).iter() {
                    out.add_term(CycKey { a, spine: w.clone() }, c);
                }
                let an = alpha[alpha.len() - 1];
                let head = &alpha[..alpha.len() - 1];
                let s2 = parity_sign(self.deg(an) * (dm + self.word_deg(head)));
                for (p, e) in self.algebra.mul(a, an).iter() {
                    for (w, c) in self.step_path(m, head).iter() {
                        out.add_term(CycKey { a: *p, spine: w.clone() }, s2 * e * c);
                    }
                }
            }
            (0, a) => {
                // α·(s⁻¹a ⊗ m)
                let (alpha, m) = (&x.spine, &y.spine);
                let (da, dal) = (self.deg(a), self.word_deg(alpha));
                let s3 = parity_sign((da + 1) * dal);
                for (w, c) in self.step_path(alpha, m).iter() {
                    out.add_term(CycKey { a, spine: w.clone() }, s3 * c);
                }
                let a1 = alpha[0];
                let tail = &alpha[1..];
                let s4 = parity_sign(self.deg(a1) + (da + 1) * self.word_deg(tail));
                for (p, e) in self.algebra.mul(a1, a).iter() {
                    for (w, c) in self.step_path(tail, m).iter() {
                        out.add_term(CycKey { a: *p, spine: w.clone() }, s4 * e * c);
                    }
                }
            }
            _ => {}
        }
        out
    }

    fn degree(&self, k: &CycKey<usize>) -> i64 {
        let head = if k.a == 0 { 0 } else { self.suspension.degree(k.a) };
        head + self.word_deg(&k.spine)
    }

    /// First pair of basis elements through `top` where
    /// `d(xy) = (dx)y + (−1)^{|x|} x(dy)` fails.
    pub fn leibniz_failure(&self, top: i64) -> Option<(CycKey<usize>, CycKey<usize>)> {
        let b = &self.complex.basis;
        let d = |k: &CycKey<usize>| cyclic_differential(&self.suspension, k);
        for p in 0..top {
            for q in 0..top - p {
                for x in b.keys(p) {
                    for y in b.keys(q) {
                        let lhs = self.product(x, y).apply(d);
                        let mut rhs = d(x).apply(|u| self.product(u, y));
                        rhs.add_scaled(&d(y).apply(|v| self.product(x, v)), parity_sign(self.degree(x)));
                        if lhs != rhs {
                            return Some((x.clone(), y.clone()));
                        }
                    }
                }
            }
        }
        None
    }

    /// First triple through `top` where the product is not associative.
    pub fn associativity_failure(&self, top: i64) -> Option<[CycKey<usize>; 3]> {
        let b = &self.complex.basis;
        for p in 0..=top {
            for q in 0..=top - p {
                for r in 0..=top - p - q {
                    for x in b.keys(p) {
                        for y in b.keys(q) {
                            let xy = self.product(x, y);
                            for z in b.keys(r) {
                                let left = xy.apply(|u| self.product(u, z));
                                let right = self.product(y, z).apply(|v| self.product(x, v));
                                if left != right {
                                    return Some([x.clone(), y.clone(), z.clone()]);
                                }
                            }
                        }
                    }
                }
            }
        }
        None
    }
}

/// `HH^*` of the cochains of `ΣX`, computed from `H^*(X)` as the
/// cohomology of the trivial extension `TĀ ⋉ (s⁻¹Ā ⊗ TĀ)`.
pub fn suspension_loop_ring(a: &TabulatedDga, ring: CoefficientRing, n: i64) -> Result<HochschildClassTable, LoopError> {
    let t = TrivialExtensionRing::new(a, ring, n)?;
    Ok(keyed_ring_table(&t.complex, n, None, |x, y| t.product(x, y))?)
}

impl TrivialExtensionRing {
    pub(crate) fn chain_product<R: Euclidean>(&self, r: &R, p: i64, x: &[R::E], q: i64, y: &[R::E]) -> Vec<R::E> {
        let basis = &self.complex.basis;
        let mut out = vec![r.zero(); basis.dim(p + q)];
        for (i, u) in x.iter().enumerate().filter(|(_, u)| !r.is_zero(u)) {
            for (j, v) in y.iter().enumerate().filter(|(_, v)| !r.is_zero(v)) {
                let uv = r.mul(u, v);
                for (k, c) in self.product(&basis.keys(p)[i], &basis.keys(q)[j]).iter() {
                    let (_, idx) = basis.locate(k).expect("product stays in the basis");
                    out[idx] = r.add(&out[idx], &r.mul(&r.from_i64(c), &uv));
                }
            }
        }
        out
    }

    /// Pairs of generators `(p, i, q, j)` whose product differs from the one
    /// transported from `C(T(H̃_*X))^∨` along the cobar duality, where the
    /// diagonal on `T(H̃_*X)` extends the coalgebra `H_*(X)`.
    pub fn transported_mismatches(&self, n: i64) -> Result<Vec<(i64, usize, i64, usize)>, LoopError> {
        let ring = self.complex.complex.ring();
        let a = &self.algebra;
        let shifted = TabulatedCoalgebra::primitive(
            (1..a.len()).map(|i| (format!("c{}", a.name(i)), a.degree(i) + 1)).collect(),
        )?;
        let iso = cobar_duality_iso(&shifted, ring, n)?;
        let h = tensorization_of_coalgebra(&a.dual_coalgebra()?)?;
        let retract = small_cyclic_complex(h.algebra(), ring, n)?;
        let diag = transported_diagonal(&h, &retract, n)?;
        for m in 0..=n {
            if iso.source.dim(m) != self.complex.basis.dim(m) || iso.target.dim(m) != retract.small.dim(m) {
                return Err(LoopError::Invalid(format!("duality bases disagree in degree {m}")));
            }
        }
        let mut bad = Vec::new();
        with_ring!(ring, r => {
            let ours = ClassBases::new(r, &self.complex.complex, n, None)?;
            let theirs = ClassBases::new(r, &iso.target, n, None)?;
            let push = |m: i64, v: &[_]| apply_sparse(r, iso.map.block(m).expect("duality block"), v);
            for p in 0..=n {
                for q in 0..=n - p {
                    for (i, x) in ours.bases[p as usize].generators.iter().enumerate() {
                        for (j, y) in ours.bases[q as usize].generators.iter().enumerate() {
                            let left = theirs.coordinates(p + q, &push(p + q, &self.chain_product(r, p, x, q, y)));
                            let right = theirs.coordinates(p + q, &diag.cup(r, p, &push(p, x), q, &push(q, y)));
                            if left != right {
                                bad.push((p, i, q, j));
                            }
                        }
                    }
                }
            }
        });
        Ok(bad)
    }
}
