use std::collections::BTreeMap;

use super::BarError;
use crate::dg::AugmentedDga;
use crate::graded::{parity_sign, KeyedBasis, KeyedComplex};
use crate::linalg::CoefficientRing;
use crate::lincomb::LinComb;

/// `a[sa₁|…|saₖ]`, a basis element of the cyclic bar construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycKey<E> {
    pub a: E,
    pub spine: Vec<E>,
}

/// `a[sa₁|…|saₖ]b`, a basis element of the bar resolution.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BimodKey<E> {
    pub left: E,
    pub spine: Vec<E>,
    pub right: E,
}

/// Degree of `sx` for `x` in the augmentation ideal, in the algebra's own
/// grading: `|x| + 1` for chain algebras, `|x| − 1` for cochain algebras.
pub fn suspended_degree<A: AugmentedDga>(alg: &A, x: &A::Elem) -> i64 {
    alg.degree(x) - alg.grading().direction()
}

fn spine_degree<A: AugmentedDga>(alg: &A, spine: &[A::Elem]) -> i64 {
    spine.iter().map(|x| suspended_degree(alg, x)).sum()
}

/// Enumerates algebra elements and bar spines degree by degree.
pub struct BarBasis<A: AugmentedDga> {
    /// `elements[n]`: a basis of `A_n` (the unit in degree 0).
    pub elements: Vec<Vec<A::Elem>>,
    /// `spines[w]`: all spines of total suspended degree `w`.
    pub spines: Vec<Vec<Vec<A::Elem>>>,
}

impl<A: AugmentedDga> BarBasis<A> {
    pub fn new(alg: &A, top: i64) -> Result<Self, BarError> {
        let dir = alg.grading().direction();
        let reach = top + 1;
        let mut elements = vec![vec![alg.unit()]];
        for n in 1..=reach {
            elements.push(alg.augmentation_basis(n));
        }
        if dir > 0 && !elements[1].is_empty() {
            return Err(BarError::ConnectivityViolation(
                "a cochain algebra needs a trivial degree-one part for its bar constructions".into(),
            ));
        }
        let mut spines: Vec<Vec<Vec<A::Elem>>> = vec![vec![Vec::new()]];
        for w in 1..=top.max(0) {
            let mut out = Vec::new();
            for (n, xs) in elements.iter().enumerate().skip(1) {
                let sd = n as i64 - dir;
                if sd < 1 || sd > w {
                    continue;
                }
                for x in xs {
                    for tail in &spines[(w - sd) as usize] {
                        let mut s = Vec::with_capacity(tail.len() + 1);
                        s.push(x.clone());
                        s.extend_from_slice(tail);
                        out.push(s);
                    }
                }
            }
            spines.push(out);
        }
        Ok(BarBasis { elements, spines })
    }

    fn element(&self, n: i64) -> &[A::Elem] {
        self.elements.get(n as usize).map_or(&[], Vec::as_slice)
    }

    pub fn cyclic(&self, grading_top: i64, alg: &A) -> KeyedBasis<CycKey<A::Elem>> {
        let mut basis = KeyedBasis::new(alg.grading(), grading_top);
        for n in 0..=grading_top {
            let mut keys = Vec::new();
            for p in 0..=n {
                for a in self.element(p) {
                    for s in &self.spines[(n - p) as usize] {
                        keys.push(CycKey { a: a.clone(), spine: s.clone() });
                    }
                }
            }
            basis.set_degree(n, keys);
        }
        basis
    }

    pub fn bimodule(&self, grading_top: i64, alg: &A) -> KeyedBasis<BimodKey<A::Elem>> {
        let mut basis = KeyedBasis::new(alg.grading(), grading_top);
        for n in 0..=grading_top {
            let mut keys = Vec::new();
            for p in 0..=n {
                for q in 0..=n - p {
                    for a in self.element(p) {
                        for b in self.element(q) {
                            for s in &self.spines[(n - p - q) as usize] {
                                keys.push(BimodKey { left: a.clone(), spine: s.clone(), right: b.clone() });
                            }
                        }
                    }
                }
            }
            basis.set_degree(n, keys);
        }
        basis
    }

    pub fn reduced(&self, grading_top: i64, alg: &A) -> KeyedBasis<Vec<A::Elem>> {
        let mut basis = KeyedBasis::new(alg.grading(), grading_top);
        for n in 0..=grading_top {
            basis.set_degree(n, self.spines[n as usize].clone());
        }
        basis
    }
}

pub fn spine_name<A: AugmentedDga>(alg: &A, spine: &[A::Elem]) -> String {
    let parts: Vec<String> = spine
        .iter()
        .map(|x| {
            let n = alg.name(x);
            if n.chars().count() == 1 || !n.contains(['·', '⊗', '^']) {
                format!("s{n}")
            } else {
                format!("s({n})")
            }
        })
        .collect();
    format!("[{}]", parts.join("|"))
}

pub fn cyc_name<A: AugmentedDga>(alg: &A, k: &CycKey<A::Elem>) -> String {
    format!("{}{}", alg.name(&k.a), spine_name(alg, &k.spine))
}

/// Internal-face part shared by all bar differentials: `d₁` on the spine
/// and the products of adjacent spine entries. `eps0` is the degree in
/// front of the spine.
fn spine_terms<A: AugmentedDga>(alg: &A, eps0: i64, spine: &[A::Elem]) -> LinComb<Vec<A::Elem>> {
    let mut out = LinComb::new();
    let mut eps = eps0;
    for i in 0..spine.len() {
        // d(saᵢ) = −s(daᵢ), passing a and the first i entries
        let sign = -parity_sign(eps);
        for (y, c) in alg.d(&spine[i]).iter() {
            if alg.is_unit(y) {
                continue;
            }
            let mut s = spine.to_vec();
            s[i] = y.clone();
            out.add_term(s, sign * c);
        }
        eps += suspended_degree(alg, &spine[i]);
        if i + 1 < spine.len() {
            // (−1)^{εᵢ} a[…|s(aᵢaᵢ₊₁)|…]
            for (y, c) in alg.mul(&spine[i], &spine[i + 1]).iter() {
                if alg.is_unit(y) {
                    continue;
                }
                let mut s = spine[..i].to_vec();
                s.push(y.clone());
                s.extend_from_slice(&spine[i + 2..]);
                out.add_term(s, parity_sign(eps) * c);
            }
        }
    }
    out
}

/// Differential of `C(A)`:
/// `d₁` by tensorization with `d(sx) = −s(dx)`, and
/// `d₂ a[sa₁|…|saₖ] = (−1)^{|a|} aa₁[…] + Σ (−1)^{εᵢ} a[…|s(aᵢaᵢ₊₁)|…]
///   − (−1)^{|saₖ|ε_{k−1}} aₖa[sa₁|…|sa_{k−1}]`.
pub fn cyclic_differential<A: AugmentedDga>(alg: &A, key: &CycKey<A::Elem>) -> LinComb<CycKey<A::Elem>> {
    let a = &key.a;
    let spine = &key.spine;
    let k = spine.len();
    let deg_a = alg.degree(a);
    let mut out: LinComb<CycKey<A::Elem>> =
        alg.d(a).map_keys(|x| CycKey { a: x.clone(), spine: spine.clone() });
    for (s, c) in spine_terms(alg, deg_a, spine).iter() {
        out.add_term(CycKey { a: a.clone(), spine: s.clone() }, c);
    }
    if k > 0 {
        for (x, c) in alg.mul(a, &spine[0]).iter() {
            out.add_term(CycKey { a: x.clone(), spine: spine[1..].to_vec() }, parity_sign(deg_a) * c);
        }
        let eps = deg_a + spine_degree(alg, &spine[..k - 1]);
        let sign = -parity_sign(suspended_degree(alg, &spine[k - 1]) * eps);
        for (x, c) in alg.mul(&spine[k - 1], a).iter() {
            out.add_term(CycKey { a: x.clone(), spine: spine[..k - 1].to_vec() }, sign * c);
        }
    }
    out
}

/// Differential of `B(A;A;A)`; the last face is
/// `−(−1)^{ε_{k−1}} a[sa₁|…|sa_{k−1}]aₖb`.
pub fn bimodule_differential<A: AugmentedDga>(alg: &A, key: &BimodKey<A::Elem>) -> LinComb<BimodKey<A::Elem>> {
    let (a, spine, b) = (&key.left, &key.spine, &key.right);
    let k = spine.len();
    let deg_a = alg.degree(a);
    let mk = |l: &A::Elem, s: Vec<A::Elem>, r: &A::Elem| BimodKey { left: l.clone(), spine: s, right: r.clone() };
    let mut out: LinComb<BimodKey<A::Elem>> = alg.d(a).map_keys(|x| mk(x, spine.clone(), b));
    for (s, c) in spine_terms(alg, deg_a, spine).iter() {
        out.add_term(mk(a, s.clone(), b), c);
    }
    let eps_k = deg_a + spine_degree(alg, spine);
    for (y, c) in alg.d(b).iter() {
        out.add_term(mk(a, spine.clone(), y), parity_sign(eps_k) * c);
    }
    if k > 0 {
        for (x, c) in alg.mul(a, &spine[0]).iter() {
            out.add_term(mk(x, spine[1..].to_vec(), b), parity_sign(deg_a) * c);
        }
        let eps = deg_a + spine_degree(alg, &spine[..k - 1]);
        for (y, c) in alg.mul(&spine[k - 1], b).iter() {
            out.add_term(mk(a, spine[..k - 1].to_vec(), y), -parity_sign(eps) * c);
        }
    }
    out
}

/// Differential of the reduced bar construction `B(A) = 𝕜 ⊗_A B(A;A;A) ⊗_A 𝕜`.
pub fn reduced_differential<A: AugmentedDga>(alg: &A, spine: &[A::Elem]) -> LinComb<Vec<A::Elem>> {
    spine_terms(alg, 0, spine)
}

/// The reduced diagonal of `B(A)`: deconcatenation.
pub fn deconcatenate<E: Clone + Ord>(spine: &[E]) -> LinComb<(Vec<E>, Vec<E>)> {
    (1..spine.len()).map(|i| ((spine[..i].to_vec(), spine[i..].to_vec()), 1)).collect()
}

/// The cyclic bar construction (Hochschild complex) `C(A)`, built through
/// degree `n + 1` so that its homology is exact through degree `n`.
pub fn cyclic_bar<A: AugmentedDga>(
    alg: &A,
    ring: CoefficientRing,
    n: i64,
) -> Result<KeyedComplex<CycKey<A::Elem>>, BarError> {
    let top = n + 1;
    let bases = BarBasis::new(alg, top)?;
    let basis = bases.cyclic(top, alg);
    Ok(KeyedComplex::build(ring, basis, |k| cyclic_differential(alg, k), |k| cyc_name(alg, k))?)
}

/// The two-sided bar resolution `B(A;A;A)` through degree `n + 1`.
pub fn bar_resolution<A: AugmentedDga>(
    alg: &A,
    ring: CoefficientRing,
    n: i64,
) -> Result<KeyedComplex<BimodKey<A::Elem>>, BarError> {
    let top = n + 1;
    let bases = BarBasis::new(alg, top)?;
    let basis = bases.bimodule(top, alg);
    Ok(KeyedComplex::build(
        ring,
        basis,
        |k| bimodule_differential(alg, k),
        |k| format!("{}{}{}", alg.name(&k.left), spine_name(alg, &k.spine), alg.name(&k.right)),
    )?)
}

/// The reduced bar construction through degree `n + 1`.
pub fn reduced_bar<A: AugmentedDga>(
    alg: &A,
    ring: CoefficientRing,
    n: i64,
) -> Result<KeyedComplex<Vec<A::Elem>>, BarError> {
    let top = n + 1;
    let bases = BarBasis::new(alg, top)?;
    let basis = bases.reduced(top, alg);
    Ok(KeyedComplex::build(ring, basis, |k| reduced_differential(alg, k), |k| spine_name(alg, k))?)
}

/// Dimensions of `C(A)` by degree, without building the differential.
pub fn cyclic_dimensions<A: AugmentedDga>(alg: &A, top: i64) -> Result<BTreeMap<i64, usize>, BarError> {
    let bases = BarBasis::new(alg, top)?;
    Ok((0..=top)
        .map(|n| {
            let d: usize = (0..=n).map(|p| bases.element(p).len() * bases.spines[(n - p) as usize].len()).sum();
            (n, d)
        })
        .collect())
}
