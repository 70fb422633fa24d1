use super::bimodule::{homotopy, mid_degree, projection, SmallBimodKey};
use super::sdr::{keyed_map, perturb, SdrData};
use super::{difference_perturbation, KeyedSdr, PerturbError};
use crate::bar::{
    cup_product_table, cyclic_bar, cyclic_diagonal, hochschild_cohomology_ring_shifted, BimodKey, ClassBases,
    CycKey, DiagonalTerms, HochschildClassTable,
};
use crate::dg::{AugmentedDga, FreeDga, HopfData, Word};
use crate::graded::{dual_complex, parity_sign, GradedMap, KeyedBasis, KeyedComplex, TruncatedComplex};
use crate::linalg::{CoefficientRing, Euclidean};
use crate::lincomb::LinComb;
use crate::with_ring;

/// A basis element of `(𝕜 ⊕ sV) ⊗ TV`: `1 ⊗ a` or `sv ⊗ a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SmallKey {
    Unit(Word),
    Susp(u16, Word),
}

impl SmallKey {
    fn parts(&self) -> (Option<u16>, &Word) {
        match self {
            SmallKey::Unit(a) => (None, a),
            SmallKey::Susp(l, a) => (Some(*l), a),
        }
    }

    fn new(mid: Option<u16>, a: Word) -> Self {
        match mid {
            None => SmallKey::Unit(a),
            Some(l) => SmallKey::Susp(l, a),
        }
    }
}

pub fn small_name(alg: &FreeDga, k: &SmallKey) -> String {
    match k {
        SmallKey::Unit(a) => alg.word_name(a),
        SmallKey::Susp(l, a) => {
            let v = format!("s{}", alg.generators()[*l as usize].name);
            if a.is_unit() {
                v
            } else {
                format!("{v}⊗{}", alg.word_name(a))
            }
        }
    }
}

pub(crate) fn small_basis(alg: &FreeDga, top: i64) -> KeyedBasis<SmallKey> {
    let words = alg.words_through(top);
    let mut basis = KeyedBasis::new(alg.grading(), top);
    for n in 0..=top {
        let mut keys: Vec<SmallKey> = words[&n].iter().cloned().map(SmallKey::Unit).collect();
        for (l, g) in alg.generators().iter().enumerate() {
            let r = n - g.degree - 1;
            if r >= 0 {
                keys.extend(words[&r].iter().map(|a| SmallKey::Susp(l as u16, a.clone())));
            }
        }
        basis.set_degree(n, keys);
    }
    basis
}

/// `S̄(v₁⋯vₙ ⊗ a) = Σ (−1)^{|v₁⋯vᵢ₋₁||vᵢ⋯vₙa|} svᵢ ⊗ vᵢ₊₁⋯vₙ a v₁⋯vᵢ₋₁`.
pub fn cyclic_splitting(alg: &FreeDga, w: &Word, a: &Word) -> LinComb<SmallKey> {
    let total = alg.word_degree(w) + alg.word_degree(a);
    let mut out = LinComb::new();
    let mut before = 0;
    for i in 0..w.len() {
        let l = w.0[i];
        let rest = w.slice(i + 1, w.len()).concat(a).concat(&w.slice(0, i));
        out.add_term(SmallKey::Susp(l, rest), parity_sign(before * (total - before)));
        before += alg.letter_degree(l as usize);
    }
    out
}

/// `δ(1⊗a) = da`, `δ(sv⊗a) = (−1)^{|a||v|} av − va + (−1)^{|sv|} sv⊗da − S̄(dv⊗a)`.
pub fn small_cyclic_differential(alg: &FreeDga, k: &SmallKey) -> LinComb<SmallKey> {
    match k {
        SmallKey::Unit(a) => alg.d_word(a).map_keys(|x| SmallKey::Unit(x.clone())),
        SmallKey::Susp(l, a) => {
            let v = Word::letter(*l as usize);
            let dv = alg.letter_degree(*l as usize);
            let mut out = LinComb::new();
            out.add_term(SmallKey::Unit(a.concat(&v)), parity_sign(alg.word_degree(a) * dv));
            out.add_term(SmallKey::Unit(v.concat(a)), -1);
            for (x, c) in alg.d_word(a).iter() {
                out.add_term(SmallKey::Susp(*l, x.clone()), parity_sign(dv + 1) * c);
            }
            for (w, c) in alg.generator_differential(*l as usize).iter() {
                out.add_scaled(&cyclic_splitting(alg, w, a), -c);
            }
            out
        }
    }
}

fn spine_degree(alg: &FreeDga, spine: &[Word]) -> i64 {
    spine.iter().map(|w| alg.word_degree(w) + 1).sum()
}

/// `(x[w]y) ⊗ a ↦ (−1)^{|x|(|y|+|a|) + (|y|+|a|)|w|} (yax)[w]`, identifying
/// `B(A;A;A) ⊗_{A^e} A` with `C(A)`.
fn big_descent(alg: &FreeDga, k: &BimodKey<Word>, a: &Word) -> (CycKey<Word>, i64) {
    let (x, y) = (&k.left, &k.right);
    let ya = alg.word_degree(y) + alg.word_degree(a);
    let sign = parity_sign(alg.word_degree(x) * ya + ya * spine_degree(alg, &k.spine));
    (CycKey { a: y.concat(a).concat(x), spine: k.spine.clone() }, sign)
}

/// `(x ⊗ v̄ ⊗ y) ⊗ b ↦ (−1)^{|x|(|v̄|+|y|+|b|)} v̄ ⊗ ybx`.
fn small_descent(alg: &FreeDga, k: &SmallBimodKey, b: &Word) -> (SmallKey, i64) {
    let rest = mid_degree(alg, k.mid) + alg.word_degree(&k.right) + alg.word_degree(b);
    let sign = parity_sign(alg.word_degree(&k.left) * rest);
    (SmallKey::new(k.mid, k.right.concat(b).concat(&k.left)), sign)
}

fn bare(spine: &[Word]) -> BimodKey<Word> {
    BimodKey { left: Word::unit(), spine: spine.to_vec(), right: Word::unit() }
}

/// Projection `C(TV) → (𝕜 ⊕ sV) ⊗ TV` induced by the bimodule projection.
pub fn cyclic_projection(alg: &FreeDga, k: &CycKey<Word>) -> LinComb<SmallKey> {
    let pre = parity_sign(alg.word_degree(&k.a) * spine_degree(alg, &k.spine));
    let mut out = LinComb::new();
    for (m, c) in projection(alg, &bare(&k.spine)).iter() {
        let (key, s) = small_descent(alg, m, &k.a);
        out.add_term(key, pre * s * c);
    }
    out
}

/// Inclusion `sv⊗b ↦ (−1)^{|b||sv|} b[sv]`, `1⊗b ↦ b[]`.
pub fn cyclic_inclusion(alg: &FreeDga, k: &SmallKey) -> LinComb<CycKey<Word>> {
    let (mid, b) = k.parts();
    let sign = parity_sign(alg.word_degree(b) * mid_degree(alg, mid));
    let spine = mid.map(|l| vec![Word::letter(l as usize)]).unwrap_or_default();
    LinComb::single(CycKey { a: b.clone(), spine }, sign)
}

/// Homotopy on `C(TV)` induced by the bimodule homotopy.
pub fn cyclic_homotopy(alg: &FreeDga, k: &CycKey<Word>) -> LinComb<CycKey<Word>> {
    let pre = parity_sign(alg.word_degree(&k.a) * spine_degree(alg, &k.spine));
    let mut out = LinComb::new();
    for (m, c) in homotopy(alg, &bare(&k.spine)).iter() {
        let (key, s) = big_descent(alg, m, &k.a);
        out.add_term(key, pre * s * c);
    }
    out
}

fn cyclic_retract(alg: &FreeDga, ring: CoefficientRing, n: i64) -> Result<KeyedSdr<CycKey<Word>, SmallKey>, PerturbError> {
    let big = cyclic_bar(alg, ring, n)?;
    let small = KeyedComplex::build(
        ring,
        small_basis(alg, n + 1),
        |k| small_cyclic_differential(alg, k),
        |k| small_name(alg, k),
    )?;
    let f = keyed_map(&big.basis, &small.basis, 0, |k| cyclic_projection(alg, k))?;
    let nabla = keyed_map(&small.basis, &big.basis, 0, |k| cyclic_inclusion(alg, k))?;
    let phi = keyed_map(&big.basis, &big.basis, 1, |k| cyclic_homotopy(alg, k))?;
    Ok(KeyedSdr { sdr: SdrData { big: big.complex, small: small.complex, f, nabla, phi }, big: big.basis, small: small.basis })
}

/// The retract of `C(TV, d)` onto `((𝕜 ⊕ sV) ⊗ TV, δ)`, through degree
/// `n + 1`: the linear-part retract perturbed by the rest of the
/// differential, with `δ` checked against the closed formula.
pub fn small_cyclic_complex(
    alg: &FreeDga,
    ring: CoefficientRing,
    n: i64,
) -> Result<KeyedSdr<CycKey<Word>, SmallKey>, PerturbError> {
    let lin = cyclic_retract(&alg.linear_part(), ring, n)?;
    lin.sdr.verify()?;
    let full = cyclic_retract(alg, ring, n)?;
    let t = difference_perturbation(
        &GradedMap::differential_of(&full.sdr.big),
        &GradedMap::differential_of(&lin.sdr.big),
        n + 1,
    );
    let out = perturb(&lin.sdr, &t)?;
    for (k, m) in out.small.differentials() {
        if m.sub(&full.sdr.small.differential(*k)).first_nonzero_mod(0).is_some() {
            return Err(PerturbError::Mismatch(format!("perturbed cyclic differential in degree {k}")));
        }
    }
    Ok(KeyedSdr { sdr: out, big: full.big, small: full.small })
}

/// The diagonal `(f∞⊗f∞) ∘ Δ ∘ ∇∞` of the small complex.
pub fn transported_diagonal(
    h: &HopfData,
    retract: &KeyedSdr<CycKey<Word>, SmallKey>,
    n: i64,
) -> Result<DiagonalTerms, PerturbError> {
    let nabla = &retract.sdr.nabla;
    let lookup = |k: &SmallKey| -> LinComb<CycKey<Word>> {
        let (deg, idx) = retract.small.locate(k).expect("small key");
        let block = nabla.block(deg).expect("inclusion block");
        block.column(idx).iter().map(|&(i, c)| (retract.big.keys(deg)[i].clone(), c)).collect()
    };
    let project = |y: &CycKey<Word>| -> Vec<(SmallKey, i64)> {
        let (deg, idx) = retract.big.locate(y).expect("big key");
        match retract.sdr.f.block(deg) {
            Some(b) => b.column(idx).iter().map(|&(i, c)| (retract.small.keys(deg)[i].clone(), c)).collect(),
            None => Vec::new(),
        }
    };
    let diag = |k: &SmallKey| -> LinComb<(SmallKey, SmallKey)> {
        let mut out = LinComb::new();
        for (x, c) in lookup(k).iter() {
            for ((y, z), e) in cyclic_diagonal(h, x).iter() {
                let fy = project(y);
                if fy.is_empty() {
                    continue;
                }
                let fz = project(z);
                for (p, u) in &fy {
                    for (q, w) in &fz {
                        out.add_term((p.clone(), q.clone()), c * e * u * w);
                    }
                }
            }
        }
        out
    };
    Ok(DiagonalTerms::from_keys(&retract.small, n, diag)?)
}

/// The ring `HH^*(A)` computed on the small complex.
pub fn small_cohomology_ring(h: &HopfData, ring: CoefficientRing, n: i64) -> Result<HochschildClassTable, PerturbError> {
    let retract = small_cyclic_complex(h.algebra(), ring, n)?;
    let diag = transported_diagonal(h, &retract, n)?;
    Ok(cup_product_table(&retract.sdr.small, &diag, n, None)?)
}

/// Outcome of comparing the small-model ring with the full-complex ring.
#[derive(Clone, Debug)]
pub struct RingComparison {
    pub full: HochschildClassTable,
    pub small: HochschildClassTable,
    /// Pairs of small generators `(p, i, q, j)` whose products disagree after
    /// transport along `f^∨`.
    pub mismatches: Vec<(i64, usize, i64, usize)>,
    pub groups_agree: bool,
}

impl RingComparison {
    pub fn agrees(&self) -> bool {
        self.groups_agree && self.mismatches.is_empty()
    }
}

fn pull_back<R: Euclidean>(r: &R, f: &GradedMap, n: i64, v: &[R::E]) -> Vec<R::E> {
    let block = f.block(n).expect("projection block");
    (0..block.cols())
        .map(|j| {
            let mut acc = r.zero();
            for &(i, c) in block.column(j) {
                acc = r.add(&acc, &r.mul(&r.from_i64(c), &v[i]));
            }
            acc
        })
        .collect()
}

/// Compares the cup product of the small model with that of `C(K)^∨`:
/// `f^∨(α ∪ β)` and `f^∨α ∪ f^∨β` must be cohomologous for all generators.
pub fn compare_rings(h: &HopfData, ring: CoefficientRing, n: i64) -> Result<RingComparison, PerturbError> {
    let retract = small_cyclic_complex(h.algebra(), ring, n)?;
    let small_diag = transported_diagonal(h, &retract, n)?;
    let full_diag = DiagonalTerms::from_keys(&retract.big, n, |k| cyclic_diagonal(h, k))?;
    let small_table = cup_product_table(&retract.sdr.small, &small_diag, n, None)?;
    let full_table = hochschild_cohomology_ring_shifted(h, ring, n, None)?;
    let groups_agree = (0..=n).all(|m| {
        full_table.free_rank(m) == small_table.free_rank(m) && full_table.torsion(m) == small_table.torsion(m)
    });
    let f = &retract.sdr.f;
    let mismatches = with_ring!(ring, r => {
        compare_with(r, &retract.sdr.small, &retract.sdr.big, f, &small_diag, &full_diag, n)?
    });
    Ok(RingComparison { full: full_table, small: small_table, mismatches, groups_agree })
}

fn compare_with<R: Euclidean>(
    r: &R,
    small: &TruncatedComplex,
    big: &TruncatedComplex,
    f: &GradedMap,
    small_diag: &DiagonalTerms,
    full_diag: &DiagonalTerms,
    n: i64,
) -> Result<Vec<(i64, usize, i64, usize)>, PerturbError> {
    let small_classes = ClassBases::new(r, &dual_complex(small), n, None)?;
    let big_classes = ClassBases::new(r, &dual_complex(big), n, None)?;
    let mut bad = Vec::new();
    for p in 0..=n {
        for q in 0..=n - p {
            for (i, x) in small_classes.bases[p as usize].generators.iter().enumerate() {
                for (j, y) in small_classes.bases[q as usize].generators.iter().enumerate() {
                    let prod = small_diag.cup(r, p, x, q, y);
                    let left = big_classes.coordinates(p + q, &pull_back(r, f, p + q, &prod));
                    let fx = pull_back(r, f, p, x);
                    let fy = pull_back(r, f, q, y);
                    let right = big_classes.coordinates(p + q, &full_diag.cup(r, p, &fx, q, &fy));
                    if left != right {
                        bad.push((p, i, q, j));
                    }
                }
            }
        }
    }
    Ok(bad)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dg::{shuffle_diagonal, tensorization_of_coalgebra, TabulatedCoalgebra};
    use crate::graded::homology_table;

    fn cp2_cobar() -> FreeDga {
        FreeDga::from_named(&[("z1", 1), ("z3", 3)], &[("z3", vec![(1, vec!["z1", "z1"])])]).unwrap()
    }

    #[test]
    fn odd_generator_gives_two_torsion() {
        let a = FreeDga::from_named(&[("v", 1)], &[]).unwrap();
        for k in 0..5 {
            let a_k = Word(vec![0; k]);
            let d = small_cyclic_differential(&a, &SmallKey::Susp(0, a_k));
            let expected = if k % 2 == 0 { 0 } else { -2 };
            assert_eq!(d.coeff(&SmallKey::Unit(Word(vec![0; k + 1]))), expected, "k = {k}");
        }
    }

    #[test]
    fn even_generator_has_zero_differential() {
        let a = FreeDga::from_named(&[("v", 2)], &[]).unwrap();
        for k in 0..5 {
            assert!(small_cyclic_differential(&a, &SmallKey::Susp(0, Word(vec![0; k]))).is_zero());
        }
    }

    #[test]
    fn linear_cyclic_retract() {
        let a = FreeDga::from_named(&[("x", 1), ("y", 2)], &[("y", vec![(1, vec!["x"])])]).unwrap();
        cyclic_retract(&a, CoefficientRing::Integers, 6).unwrap().sdr.verify().unwrap();
    }

    #[test]
    fn small_model_of_projective_plane() {
        let a = cp2_cobar();
        let s = small_cyclic_complex(&a, CoefficientRing::Integers, 8).unwrap();
        s.sdr.verify().unwrap();
        let small = homology_table(&s.sdr.small).unwrap();
        let big = homology_table(&s.sdr.big).unwrap();
        for (x, y) in small.iter().zip(&big).take(9) {
            assert_eq!((x.free_rank, &x.torsion), (y.free_rank, &y.torsion), "degree {}", x.degree);
        }
    }

    #[test]
    fn transported_ring_of_three_sphere() {
        let a = FreeDga::from_named(&[("v", 2)], &[]).unwrap();
        let h = shuffle_diagonal(&a).unwrap();
        let c = compare_rings(&h, CoefficientRing::Integers, 8).unwrap();
        assert!(c.agrees(), "{:?}", c.mismatches);
    }

    #[test]
    fn transported_ring_of_projective_plane() {
        let coalg = TabulatedCoalgebra::projective_space(2, 2).unwrap();
        let h = tensorization_of_coalgebra(&coalg).unwrap();
        for ring in [CoefficientRing::Integers, CoefficientRing::f2()] {
            let c = compare_rings(&h, ring, 7).unwrap();
            assert!(c.agrees(), "{ring}: {:?}", c.mismatches);
        }
    }

    #[test]
    fn transported_ring_with_nonlinear_differential() {
        let h = shuffle_diagonal(&cp2_cobar()).unwrap();
        for ring in [CoefficientRing::Integers, CoefficientRing::f2()] {
            let c = compare_rings(&h, ring, 7).unwrap();
            assert!(c.agrees(), "{ring}: {:?}", c.mismatches);
            assert!(!c.small.products.is_empty());
        }
    }
}
