use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::bar::{CycKey, ClassBases, HochschildClassTable};
use crate::dg::{shuffle_diagonal, tensorization_of_coalgebra, HopfData, TabulatedCoalgebra, TabulatedDga, Word};
use crate::linalg::{rank, CoefficientRing, ExactMatrix, Rationals};
use crate::perturb::{cobar_duality_iso, small_cyclic_complex};

use super::{suspension_loop_ring, LoopError, TrivialExtensionRing};

type QComb<K> = BTreeMap<K, BigRational>;

fn q(c: i64) -> BigRational {
    BigRational::from_integer(c.into())
}

fn add_to<K: Ord>(acc: &mut QComb<K>, k: K, c: BigRational) {
    if c.is_zero() {
        return;
    }
    let e = acc.entry(k).or_insert_with(BigRational::zero);
    *e += c;
}

/// Concatenation product of two rational combinations of words.
fn word_product(x: &QComb<Word>, y: &QComb<Word>) -> QComb<Word> {
    let mut out = QComb::new();
    for (u, a) in x {
        for (v, b) in y {
            add_to(&mut out, u.concat(v), a * b);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// A solution of `Σ βⱼ colⱼ = rhs` by Gaussian elimination, if one exists.
fn solve<K: Ord + Clone>(cols: &[QComb<K>], rhs: &QComb<K>) -> Option<Vec<BigRational>> {
    let rows: Vec<K> = cols.iter().flat_map(|c| c.keys().cloned()).chain(rhs.keys().cloned()).collect::<std::collections::BTreeSet<_>>().into_iter().collect();
    let idx: BTreeMap<&K, usize> = rows.iter().enumerate().map(|(i, k)| (k, i)).collect();
    let n = cols.len();
    // augmented matrix, one row per key
    let mut m: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); n + 1]; rows.len()];
    for (j, c) in cols.iter().enumerate() {
        for (k, v) in c {
            m[idx[k]][j] = v.clone();
        }
    }
    for (k, v) in rhs {
        m[idx[k]][n] = v.clone();
    }
    let mut pivots = Vec::new();
    let mut r = 0;
    for j in 0..n {
        let Some(p) = (r..m.len()).find(|&i| !m[i][j].is_zero()) else { continue };
        m.swap(r, p);
        let inv = BigRational::one() / m[r][j].clone();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][j].is_zero() {
                let f = m[i][j].clone();
                for c in 0..=n {
                    let t = &m[r][c] * &f;
                    m[i][c] -= t;
                }
            }
        }
        pivots.push(j);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[n].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); n];
    for (i, &j) in pivots.iter().enumerate() {
        x[j] = m[i][n].clone();
    }
    Some(x)
}

/// A Hopf algebra map `ψ` from `h` to the tensor algebra on the same
/// generators with the shuffle diagonal, `ψ(v) ≡ v` modulo decomposables,
/// solved generator by generator over ℚ. Requires zero differential.
pub fn primitive_coordinates(h: &HopfData) -> Result<Vec<QComb<Word>>, LoopError> {
    let alg = h.algebra();
    let gens = alg.generators().len();
    if (0..gens).any(|l| !alg.generator_differential(l).is_zero()) {
        return Err(LoopError::NotFreeHomology("the tensor algebra has a differential".into()));
    }
    let flat = shuffle_diagonal(alg)?;
    let mut order: Vec<usize> = (0..gens).collect();
    order.sort_by_key(|&l| alg.letter_degree(l));
    let mut psi: Vec<Option<QComb<Word>>> = vec![None; gens];
    let image = |psi: &[Option<QComb<Word>>], w: &Word| -> QComb<Word> {
        w.letters().fold(QComb::from([(Word::unit(), BigRational::one())]), |acc, l| {
            word_product(&acc, psi[l].as_ref().expect("lower generator solved"))
        })
    };
    for l in order {
        let mut rhs: QComb<(Word, Word)> = QComb::new();
        for ((x, y), k) in h.generator_diagonal(l).iter() {
            if x.is_unit() || y.is_unit() {
                continue;
            }
            for (u, a) in image(&psi, x) {
                for (v, b) in image(&psi, y) {
                    add_to(&mut rhs, (u.clone(), v), &a * &b * q(k));
                }
            }
        }
        rhs.retain(|_, c| !c.is_zero());
        let words: Vec<Word> = alg.words(alg.letter_degree(l)).into_iter().filter(|w| w.len() >= 2).collect();
        let cols: Vec<QComb<(Word, Word)>> = words
            .iter()
            .map(|w| {
                flat.diagonal_word(w)
                    .iter()
                    .filter(|((x, y), _)| !x.is_unit() && !y.is_unit())
                    .map(|(k, c)| (k.clone(), q(c)))
                    .collect()
            })
            .collect();
        let beta = solve(&cols, &rhs)
            .ok_or_else(|| LoopError::Invalid(format!("no primitive lift for generator {l}")))?;
        let mut p = QComb::from([(Word::letter(l), BigRational::one())]);
        for (w, b) in words.into_iter().zip(beta) {
            add_to(&mut p, w, b);
        }
        psi[l] = Some(p);
    }
    Ok(psi.into_iter().map(|p| p.expect("every generator solved")).collect())
}

/// `a[w₁|…|wₖ] ↦ ψ(a)[ψ(w₁)|…|ψ(wₖ)]`.
fn cyclic_image(psi: &[QComb<Word>], k: &CycKey<Word>) -> QComb<CycKey<Word>> {
    let image = |w: &Word| -> QComb<Word> {
        w.letters().fold(QComb::from([(Word::unit(), BigRational::one())]), |acc, l| word_product(&acc, &psi[l]))
    };
    let mut out: QComb<CycKey<Word>> =
        image(&k.a).into_iter().map(|(w, c)| (CycKey { a: w, spine: Vec::new() }, c)).collect();
    for s in &k.spine {
        let img = image(s);
        let mut next = QComb::new();
        for (key, c) in &out {
            for (w, e) in &img {
                let mut spine = key.spine.clone();
                spine.push(w.clone());
                add_to(&mut next, CycKey { a: key.a.clone(), spine }, c * e);
            }
        }
        out = next;
    }
    out
}

/// A degreewise isomorphism between the loop rings of the suspensions of
/// `A` with its product and with the trivial product.
#[derive(Clone, Debug)]
pub struct SuspensionIsomorphism {
    /// The ring for `A` with trivial product.
    pub source: HochschildClassTable,
    /// The ring for `A`.
    pub target: HochschildClassTable,
    /// Per degree, column `i` holds the target coordinates of the image of
    /// source generator `i`.
    pub matrices: Vec<Vec<Vec<BigRational>>>,
    /// Degrees where the matrix is not invertible.
    pub singular: Vec<i64>,
    /// Generator pairs `(p, i, q, j)` where the map fails to be multiplicative.
    pub failures: Vec<(i64, usize, i64, usize)>,
}

impl SuspensionIsomorphism {
    pub fn is_isomorphism(&self) -> bool {
        self.singular.is_empty() && self.failures.is_empty()
    }
}

/// Over ℚ, the isomorphism `H^*(L(ΣX)) ≅ H^*(L(Σ(∨ spheres)))` induced by
/// a Hopf algebra isomorphism `T(H̃_*X) ≅ T(H̃_*X)` from the diagonal of
/// `H_*(X)` to the shuffle diagonal, carried to the trivial extensions
/// through the small cyclic complex and the cobar duality; checked to be
/// bijective and multiplicative on classes through degree `n`.
pub fn suspension_isomorphism(a: &TabulatedDga, n: i64) -> Result<SuspensionIsomorphism, LoopError> {
    let ring = CoefficientRing::Rationals;
    let flat_alg = a.with_trivial_product();
    let wedge = TrivialExtensionRing::new(&flat_alg, ring, n)?;
    let target = TrivialExtensionRing::new(a, ring, n)?;
    let h = tensorization_of_coalgebra(&a.dual_coalgebra()?)?;
    let psi = primitive_coordinates(&h)?;
    let retract = small_cyclic_complex(h.algebra(), ring, n)?;
    let shifted = TabulatedCoalgebra::primitive((1..a.len()).map(|i| (format!("c{}", a.name(i)), a.degree(i) + 1)).collect())?;
    let iso = cobar_duality_iso(&shifted, ring, n)?;

    // g = f ∘ C(ψ) ∘ ∇ on the small complex, as g[n][i][j] = ⟨eᵢ, g(eⱼ)⟩
    let mut g: Vec<Vec<Vec<BigRational>>> = Vec::new();
    for m in 0..=n {
        let dim = retract.small.dim(m);
        let mut block = vec![vec![BigRational::zero(); dim]; dim];
        let nabla = retract.sdr.nabla.block(m);
        let f = retract.sdr.f.block(m);
        for j in 0..dim {
            let Some(nabla) = nabla else { continue };
            let mut big: QComb<CycKey<Word>> = QComb::new();
            for &(i, c) in nabla.column(j) {
                for (k, e) in cyclic_image(&psi, &retract.big.keys(m)[i]) {
                    add_to(&mut big, k, e * q(c));
                }
            }
            let Some(f) = f else { continue };
            for (k, c) in big {
                let (_, col) = retract.big.locate(&k).expect("image stays in the basis");
                for &(i, e) in f.column(col) {
                    block[i][j] += &c * q(e);
                }
            }
        }
        g.push(block);
    }

    // Φ = M⁻¹ g^∨ M on C(𝕜 ⊕ s⁻¹Ā); M is a signed permutation
    let phi = |m: i64, x: &[BigRational]| -> Vec<BigRational> {
        let mb = iso.map.block(m).expect("duality block");
        let mut mx = vec![BigRational::zero(); mb.rows()];
        for (j, v) in x.iter().enumerate() {
            for &(i, c) in mb.column(j) {
                mx[i] += v * q(c);
            }
        }
        let gm = &g[m as usize];
        let pulled: Vec<BigRational> = (0..mx.len())
            .map(|j| (0..mx.len()).fold(BigRational::zero(), |acc, i| acc + &mx[i] * &gm[i][j]))
            .collect();
        (0..x.len())
            .map(|j| mb.column(j).iter().fold(BigRational::zero(), |acc, &(i, c)| acc + &pulled[i] * q(c)))
            .collect()
    };

    let r = &Rationals;
    let classes = ClassBases::new(r, &wedge.complex.complex, n, None)?;
    let mut matrices = Vec::new();
    let mut singular = Vec::new();
    for m in 0..=n {
        let gens = &classes.bases[m as usize].generators;
        let cols: Vec<Vec<BigRational>> = gens.iter().map(|x| classes.coordinates(m, &phi(m, x))).collect();
        let square = ExactMatrix::from_fn(gens.len(), gens.len(), |i, j| cols[j][i].clone());
        if gens.iter().any(|x| !classes.is_cycle(m, &phi(m, x))) || rank(r, &square) != gens.len() {
            singular.push(m);
        }
        matrices.push(cols);
    }
    let mut failures = Vec::new();
    for p in 0..=n {
        for qd in 0..=n - p {
            for (i, x) in classes.bases[p as usize].generators.iter().enumerate() {
                for (j, y) in classes.bases[qd as usize].generators.iter().enumerate() {
                    let left = phi(p + qd, &wedge.chain_product(r, p, x, qd, y));
                    let right = target.chain_product(r, p, &phi(p, x), qd, &phi(qd, y));
                    if classes.coordinates(p + qd, &left) != classes.coordinates(p + qd, &right) {
                        failures.push((p, i, qd, j));
                    }
                }
            }
        }
    }
    Ok(SuspensionIsomorphism {
        source: suspension_loop_ring(&flat_alg, ring, n)?,
        target: suspension_loop_ring(a, ring, n)?,
        matrices,
        singular,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dg::TabulatedDgaBuilder;
    use crate::graded::Grading;
    use crate::lincomb::LinComb;

    fn projective_plane() -> TabulatedDga {
        let mut b = TabulatedDgaBuilder::new(Grading::Upper, 4);
        let x = b.element("x2", 2);
        let y = b.element("x4", 4);
        b.product(x, x, LinComb::single(y, 1));
        b.build(true).unwrap()
    }

    #[test]
    fn lift_of_projective_plane() {
        let a = projective_plane();
        let h = tensorization_of_coalgebra(&a.dual_coalgebra().unwrap()).unwrap();
        let psi = primitive_coordinates(&h).unwrap();
        assert_eq!(psi[0], QComb::from([(Word::letter(0), BigRational::one())]));
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(psi[1], QComb::from([(Word::letter(1), BigRational::one()), (Word(vec![0, 0]), half)]));
    }

    #[test]
    fn projective_plane_and_wedge_agree_rationally() {
        let iso = suspension_isomorphism(&projective_plane(), 8).unwrap();
        assert!(iso.is_isomorphism(), "{:?} {:?}", iso.singular, iso.failures);
        assert_eq!(iso.source.product_ranks(), iso.target.product_ranks());
        assert_ne!(iso.source.products, iso.target.products);
    }

    #[test]
    fn identity_when_product_is_trivial() {
        let a = projective_plane().with_trivial_product();
        let iso = suspension_isomorphism(&a, 6).unwrap();
        assert!(iso.is_isomorphism());
        for (m, cols) in iso.matrices.iter().enumerate() {
            for (i, c) in cols.iter().enumerate() {
                for (k, e) in c.iter().enumerate() {
                    assert_eq!(*e, if k == i { BigRational::one() } else { BigRational::zero() }, "degree {m}");
                }
            }
        }
    }
}
