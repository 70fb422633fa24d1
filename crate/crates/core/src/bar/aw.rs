use std::collections::BTreeMap;
use std::hash::Hash;

use super::complexes::{cyclic_bar, CycKey};
use super::BarError;
use crate::dg::{AugmentedDga, HopfData, TensorAlgebra, Word};
use crate::graded::{permutation_sign, tensor_complex, GradedMap, KeyedBasis, KeyedComplex, TruncatedComplex};
use crate::linalg::{CoefficientRing, SparseMatrix};
use crate::lincomb::LinComb;

/// The Alexander–Whitney map `C(A⊗B) → C(A)⊗C(B)` on one basis element
/// `(p⊗q)[s(a₁⊗b₁)|…|s(aₖ⊗bₖ)]`: the sum over cut points `i` of
/// `±(a_{i+1}⋯aₖ·p)[sa₁|…|saᵢ] ⊗ (q·b₁⋯bᵢ)[sb_{i+1}|…|sbₖ]`, the sign being
/// the Koszul sign of the rearrangement of symbols.
pub fn alexander_whitney<A: AugmentedDga, B: AugmentedDga>(
    a: &A,
    b: &B,
    key: &CycKey<(A::Elem, B::Elem)>,
) -> LinComb<(CycKey<A::Elem>, CycKey<B::Elem>)> {
    let (p, q) = &key.a;
    let k = key.spine.len();
    // Source symbol order: p, q, then (s_j, a_j, b_j) for each j.
    let mut degrees = vec![a.degree(p), b.degree(q)];
    for (x, y) in &key.spine {
        degrees.extend([1, a.degree(x), b.degree(y)]);
    }
    let s_at = |j: usize| 2 + 3 * j;
    let a_at = |j: usize| 3 + 3 * j;
    let b_at = |j: usize| 4 + 3 * j;
    let mut out = LinComb::new();
    for i in 0..=k {
        if key.spine[..i].iter().any(|(x, _)| a.is_unit(x)) || key.spine[i..].iter().any(|(_, y)| b.is_unit(y)) {
            continue;
        }
        let mut order: Vec<usize> = (i..k).map(a_at).collect();
        order.push(0);
        for j in 0..i {
            order.extend([s_at(j), a_at(j)]);
        }
        order.push(1);
        order.extend((0..i).map(b_at));
        for j in i..k {
            order.extend([s_at(j), b_at(j)]);
        }
        let sign = permutation_sign(&degrees, &order);
        let mut left = LinComb::single(a.unit(), 1);
        for (x, _) in &key.spine[i..] {
            left = a.mul_comb(&left, &LinComb::single(x.clone(), 1));
        }
        left = a.mul_comb(&left, &LinComb::single(p.clone(), 1));
        let mut right = LinComb::single(q.clone(), 1);
        for (_, y) in &key.spine[..i] {
            right = b.mul_comb(&right, &LinComb::single(y.clone(), 1));
        }
        let lspine: Vec<A::Elem> = key.spine[..i].iter().map(|(x, _)| x.clone()).collect();
        let rspine: Vec<B::Elem> = key.spine[i..].iter().map(|(_, y)| y.clone()).collect();
        for (u, c) in left.iter() {
            for (v, e) in right.iter() {
                out.add_term(
                    (CycKey { a: u.clone(), spine: lspine.clone() }, CycKey { a: v.clone(), spine: rspine.clone() }),
                    sign * c * e,
                );
            }
        }
    }
    out
}

/// `C(Δ)`: applies the diagonal to every tensor factor, no signs.
pub fn apply_diagonal(h: &HopfData, key: &CycKey<Word>) -> LinComb<CycKey<(Word, Word)>> {
    let mut acc: LinComb<CycKey<(Word, Word)>> =
        h.diagonal_word(&key.a).map_keys(|x| CycKey { a: x.clone(), spine: Vec::new() });
    for w in &key.spine {
        let d = h.diagonal_word(w);
        acc = acc.apply(|partial| {
            let mut next = LinComb::new();
            for (x, c) in d.iter() {
                if x.0.is_unit() && x.1.is_unit() {
                    continue;
                }
                let mut s = partial.spine.clone();
                s.push(x.clone());
                next.add_term(CycKey { a: partial.a.clone(), spine: s }, c);
            }
            next
        });
    }
    acc
}

/// The diagonal `C(K) → C(K⊗K) → C(K)⊗C(K)` of a strict DG Hopf algebra.
pub fn cyclic_diagonal(h: &HopfData, key: &CycKey<Word>) -> LinComb<(CycKey<Word>, CycKey<Word>)> {
    let alg = h.algebra();
    apply_diagonal(h, key).apply(|x| alexander_whitney(alg, alg, x))
}

/// Index of `x⊗y` in [`tensor_complex`] of two keyed complexes: degree `p`
/// of the left factor first, then row-major.
pub struct TensorIndex<'a, K, L> {
    left: &'a KeyedBasis<K>,
    right: &'a KeyedBasis<L>,
    top: i64,
}

impl<'a, K: Clone + Eq + Hash + Ord, L: Clone + Eq + Hash + Ord> TensorIndex<'a, K, L> {
    pub fn new(left: &'a KeyedBasis<K>, right: &'a KeyedBasis<L>) -> Self {
        TensorIndex { left, right, top: left.max_degree().min(right.max_degree()) }
    }

    pub fn offset(&self, n: i64, p: i64) -> usize {
        (0..p).map(|p2| self.left.dim(p2) * self.right.dim(n - p2)).sum()
    }

    /// Total degree and position of `x⊗y`.
    pub fn locate(&self, x: &K, y: &L) -> Option<(i64, usize)> {
        let (p, i) = self.left.locate(x)?;
        let (q, j) = self.right.locate(y)?;
        let n = p + q;
        if n > self.top {
            return None;
        }
        Some((n, self.offset(n, p) + i * self.right.dim(q) + j))
    }

    /// Decomposes a position in degree `n` into `(p, i, j)`.
    pub fn split(&self, n: i64, mut idx: usize) -> (i64, usize, usize) {
        for p in 0..=n {
            let block = self.left.dim(p) * self.right.dim(n - p);
            if idx < block {
                let w = self.right.dim(n - p);
                return (p, idx / w, idx % w);
            }
            idx -= block;
        }
        panic!("index outside the tensor product")
    }
}

fn map_blocks<K: Clone + Eq + Hash + Ord, L: Clone + Eq + Hash + Ord, M: Clone + Eq + Hash + Ord>(
    source: &KeyedBasis<K>,
    index: &TensorIndex<'_, L, M>,
    target_dims: impl Fn(i64) -> usize,
    top: i64,
    f: impl Fn(&K) -> LinComb<(L, M)>,
) -> Result<BTreeMap<i64, SparseMatrix>, BarError> {
    let mut blocks = BTreeMap::new();
    for n in 0..=top {
        let mut cols = Vec::with_capacity(source.dim(n));
        for k in source.keys(n) {
            let mut col = Vec::new();
            for ((x, y), c) in f(k).iter() {
                match index.locate(x, y) {
                    Some((m, i)) if m == n => col.push((i, c)),
                    _ => return Err(BarError::Malformed(format!("term outside degree {n} of the tensor square"))),
                }
            }
            cols.push(col);
        }
        blocks.insert(n, SparseMatrix::from_columns(target_dims(n), cols));
    }
    Ok(blocks)
}

/// AW as a chain map between `C(A⊗B)` and `C(A)⊗C(B)`, all three complexes
/// built through degree `n + 1`.
pub struct AlexanderWhitneyMap<EA, EB> {
    pub source: KeyedComplex<CycKey<(EA, EB)>>,
    pub left: KeyedComplex<CycKey<EA>>,
    pub right: KeyedComplex<CycKey<EB>>,
    pub target: TruncatedComplex,
    pub map: GradedMap,
}

pub fn alexander_whitney_map<A: AugmentedDga, B: AugmentedDga>(
    a: &A,
    b: &B,
    ring: CoefficientRing,
    n: i64,
) -> Result<AlexanderWhitneyMap<A::Elem, B::Elem>, BarError> {
    let ab = TensorAlgebra::new(a, b);
    let source = cyclic_bar(&ab, ring, n)?;
    let left = cyclic_bar(a, ring, n)?;
    let right = cyclic_bar(b, ring, n)?;
    let target = tensor_complex(&left.complex, &right.complex)?;
    let index = TensorIndex::new(&left.basis, &right.basis);
    let blocks =
        map_blocks(&source.basis, &index, |m| target.dim(m), n + 1, |k| alexander_whitney(a, b, k))?;
    let map = GradedMap::new(a.grading(), 0, blocks);
    Ok(AlexanderWhitneyMap { source, left, right, target, map })
}

/// The cyclic diagonal of `K` as a chain map `C(K) → C(K)⊗C(K)`.
pub struct CyclicDiagonal {
    pub complex: KeyedComplex<CycKey<Word>>,
    pub square: TruncatedComplex,
    pub map: GradedMap,
}

pub fn cyclic_diagonal_map(h: &HopfData, ring: CoefficientRing, n: i64) -> Result<CyclicDiagonal, BarError> {
    let complex = cyclic_bar(h.algebra(), ring, n)?;
    let square = tensor_complex(&complex.complex, &complex.complex)?;
    let index = TensorIndex::new(&complex.basis, &complex.basis);
    let blocks = map_blocks(&complex.basis, &index, |m| square.dim(m), n + 1, |k| cyclic_diagonal(h, k))?;
    let map = GradedMap::new(h.algebra().grading(), 0, blocks);
    Ok(CyclicDiagonal { complex, square, map })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dg::{shuffle_diagonal, tensorization_of_coalgebra, FreeDga, TabulatedCoalgebra};

    #[test]
    fn empty_spine() {
        let a = FreeDga::from_named(&[("x", 1)], &[]).unwrap();
        let x = Word::letter(0);
        let key = CycKey { a: (x.clone(), x.clone()), spine: vec![] };
        let aw = alexander_whitney(&a, &a, &key);
        assert_eq!(aw.len(), 1);
        assert_eq!(
            aw.coeff(&(CycKey { a: x.clone(), spine: vec![] }, CycKey { a: x, spine: vec![] })),
            1
        );
    }

    #[test]
    fn smallest_spine_of_a_primitive() {
        let a = FreeDga::from_named(&[("v", 1)], &[]).unwrap();
        let h = shuffle_diagonal(&a).unwrap();
        let v = Word::letter(0);
        let one = Word::unit();
        let d = cyclic_diagonal(&h, &CycKey { a: one.clone(), spine: vec![v.clone()] });
        let unit = CycKey { a: one.clone(), spine: vec![] };
        let sv = CycKey { a: one.clone(), spine: vec![v.clone()] };
        assert_eq!(d.coeff(&(sv.clone(), unit.clone())), 1);
        assert_eq!(d.coeff(&(unit, sv)), 1);
        assert_eq!(d.len(), 2);
    }

    #[test]
    fn aw_is_a_chain_map() {
        let a = FreeDga::from_named(&[("x", 1), ("y", 3)], &[("y", vec![(1, vec!["x", "x"])])]).unwrap();
        let b = FreeDga::from_named(&[("u", 2)], &[]).unwrap();
        let m = alexander_whitney_map(&a, &b, CoefficientRing::Integers, 6).unwrap();
        m.map.check_chain_map(&m.source.complex, &m.target).unwrap();
    }

    #[test]
    fn cyclic_diagonal_is_a_chain_map() {
        let c = TabulatedCoalgebra::projective_space(2, 2).unwrap();
        let h = tensorization_of_coalgebra(&c).unwrap();
        let d = cyclic_diagonal_map(&h, CoefficientRing::Integers, 7).unwrap();
        d.map.check_chain_map(&d.complex.complex, &d.square).unwrap();
    }

    #[test]
    fn tensor_index_round_trip() {
        let a = FreeDga::from_named(&[("x", 1), ("y", 2)], &[]).unwrap();
        let c = cyclic_bar(&a, CoefficientRing::Integers, 4).unwrap();
        let idx = TensorIndex::new(&c.basis, &c.basis);
        for n in 0..=5 {
            for p in 0..=n {
                for (i, x) in c.basis.keys(p).iter().enumerate() {
                    for (j, y) in c.basis.keys(n - p).iter().enumerate() {
                        let (m, pos) = idx.locate(x, y).unwrap();
                        assert_eq!(m, n);
                        assert_eq!(idx.split(n, pos), (p, i, j));
                    }
                }
            }
        }
    }
}
