use super::free::{FreeDga, Generator};
use super::tabulated::TabulatedCoalgebra;
use super::word::Word;
use super::DgError;
use crate::graded::{parity_sign, suspend_name};
use crate::lincomb::LinComb;

/// A strict DG Hopf algebra structure on a free DGA: the diagonal is stored
/// on generators and extended multiplicatively.
#[derive(Clone, Debug)]
pub struct HopfData {
    algebra: FreeDga,
    images: Vec<LinComb<(Word, Word)>>,
}

impl HopfData {
    /// Checks the counit laws exactly and that the diagonal commutes with
    /// the differentials on generators.
    pub fn new(algebra: FreeDga, images: Vec<LinComb<(Word, Word)>>) -> Result<Self, DgError> {
        if images.len() != algebra.generators().len() {
            return Err(DgError::Malformed("one diagonal image per generator is required".into()));
        }
        let h = HopfData { algebra, images };
        for (l, g) in h.algebra.generators().iter().enumerate() {
            let v = Word::letter(l);
            let mut left = LinComb::new();
            let mut right = LinComb::new();
            for ((x, y), c) in h.images[l].iter() {
                if h.algebra.word_degree(x) + h.algebra.word_degree(y) != g.degree {
                    return Err(DgError::DegreeMismatch {
                        what: format!("Δ({})", g.name),
                        expected: g.degree,
                        found: h.algebra.word_degree(x) + h.algebra.word_degree(y),
                    });
                }
                if y.is_unit() {
                    left.add_term(x.clone(), c);
                }
                if x.is_unit() {
                    right.add_term(y.clone(), c);
                }
            }
            if left != LinComb::single(v.clone(), 1) || right != LinComb::single(v, 1) {
                return Err(DgError::NotCounitary(g.name.clone()));
            }
            let lhs = h.diagonal(&h.algebra.generator_differential(l).clone());
            let rhs = h.tensor_d(&h.images[l]);
            if lhs != rhs {
                return Err(DgError::NotChainMap(format!("Δ at {}", g.name)));
            }
        }
        Ok(h)
    }

    pub fn algebra(&self) -> &FreeDga {
        &self.algebra
    }

    pub fn generator_diagonal(&self, l: usize) -> &LinComb<(Word, Word)> {
        &self.images[l]
    }

    /// `(a⊗b)(c⊗d) = (−1)^{|b||c|} ac⊗bd`
    pub fn tensor_mul(&self, x: &LinComb<(Word, Word)>, y: &LinComb<(Word, Word)>) -> LinComb<(Word, Word)> {
        let mut out = LinComb::new();
        for ((a, b), c1) in x.iter() {
            for ((c, d), c2) in y.iter() {
                let s = parity_sign(self.algebra.word_degree(b) * self.algebra.word_degree(c));
                out.add_term((a.concat(c), b.concat(d)), s * c1 * c2);
            }
        }
        out
    }

    /// `d(a⊗b) = da⊗b + (−1)^{|a|} a⊗db`
    pub fn tensor_d(&self, x: &LinComb<(Word, Word)>) -> LinComb<(Word, Word)> {
        let mut out = LinComb::new();
        for ((a, b), c) in x.iter() {
            for (da, e) in self.algebra.d_word(a).iter() {
                out.add_term((da.clone(), b.clone()), c * e);
            }
            let s = parity_sign(self.algebra.word_degree(a));
            for (db, e) in self.algebra.d_word(b).iter() {
                out.add_term((a.clone(), db.clone()), s * c * e);
            }
        }
        out
    }

    pub fn diagonal_word(&self, w: &Word) -> LinComb<(Word, Word)> {
        let mut out = LinComb::single((Word::unit(), Word::unit()), 1);
        for l in w.letters() {
            out = self.tensor_mul(&out, &self.images[l]);
        }
        out
    }

    pub fn diagonal(&self, x: &LinComb<Word>) -> LinComb<(Word, Word)> {
        x.apply(|w| self.diagonal_word(w))
    }

    /// Checks `(Δ⊗1)Δ = (1⊗Δ)Δ` on all words through degree `n`.
    pub fn is_coassociative_through(&self, n: i64) -> bool {
        (0..=n).flat_map(|m| self.algebra.words(m)).all(|w| {
            let d = self.diagonal_word(&w);
            let mut left: LinComb<(Word, Word, Word)> = LinComb::new();
            let mut right: LinComb<(Word, Word, Word)> = LinComb::new();
            for ((a, b), c) in d.iter() {
                for ((p, q), e) in self.diagonal_word(a).iter() {
                    left.add_term((p.clone(), q.clone(), b.clone()), c * e);
                }
                for ((p, q), e) in self.diagonal_word(b).iter() {
                    right.add_term((a.clone(), p.clone(), q.clone()), c * e);
                }
            }
            left == right
        })
    }

    /// Checks `τΔ = Δ` with the Koszul sign on all words through degree `n`.
    pub fn is_cocommutative_through(&self, n: i64) -> bool {
        (0..=n).flat_map(|m| self.algebra.words(m)).all(|w| {
            let d = self.diagonal_word(&w);
            let swapped: LinComb<(Word, Word)> = d
                .iter()
                .map(|((a, b), c)| {
                    let s = parity_sign(self.algebra.word_degree(a) * self.algebra.word_degree(b));
                    ((b.clone(), a.clone()), s * c)
                })
                .collect();
            swapped == d
        })
    }

    /// Counit laws `(ε⊗1)Δ = id = (1⊗ε)Δ` on all words through degree `n`.
    pub fn is_counitary_through(&self, n: i64) -> bool {
        (0..=n).flat_map(|m| self.algebra.words(m)).all(|w| {
            let d = self.diagonal_word(&w);
            let left: LinComb<Word> = d.iter().filter(|((_, b), _)| b.is_unit()).map(|((a, _), c)| (a.clone(), c)).collect();
            let right: LinComb<Word> = d.iter().filter(|((a, _), _)| a.is_unit()).map(|((_, b), c)| (b.clone(), c)).collect();
            let id = LinComb::single(w.clone(), 1);
            left == id && right == id
        })
    }
}

fn primitive_image(l: usize) -> LinComb<(Word, Word)> {
    let v = Word::letter(l);
    let mut out = LinComb::single((v.clone(), Word::unit()), 1);
    out.add_term((Word::unit(), v), 1);
    out
}

/// Generators primitive: `Δv = v⊗1 + 1⊗v`.
pub fn shuffle_diagonal(algebra: &FreeDga) -> Result<HopfData, DgError> {
    let images = (0..algebra.generators().len()).map(primitive_image).collect();
    HopfData::new(algebra.clone(), images)
}

/// `T A(C̄)` with the differential of `C` on generators and the diagonal
/// extending `Δ_C`.
pub fn tensorization_of_coalgebra(c: &TabulatedCoalgebra) -> Result<HopfData, DgError> {
    let generators: Vec<Generator> =
        (1..c.len()).map(|i| Generator { name: c.name(i).to_string(), degree: c.degree(i) }).collect();
    let differential = (1..c.len()).map(|i| c.d_basis(i).map_keys(|&x| Word::letter(x - 1))).collect();
    let algebra = FreeDga::new(generators, differential)?;
    let images = (1..c.len())
        .map(|i| {
            let mut img = primitive_image(i - 1);
            for (&(x, y), k) in c.reduced_diagonal(i).iter() {
                img.add_term((Word::letter(x - 1), Word::letter(y - 1)), k);
            }
            img
        })
        .collect();
    HopfData::new(algebra, images)
}

/// The cobar construction `ΩC = T A(s⁻¹C̄)` with
/// `d(s⁻¹c) = −s⁻¹dc + Σ (−1)^{|xᵢ|} s⁻¹xᵢ s⁻¹yᵢ` for `Δ̄c = Σ xᵢ⊗yᵢ`.
/// Generator `l` is `s⁻¹` of coalgebra element `l + 1`.
pub fn cobar(c: &TabulatedCoalgebra) -> Result<FreeDga, DgError> {
    for i in 1..c.len() {
        if c.degree(i) < 2 {
            return Err(DgError::ConnectivityViolation(format!("{} has degree {}", c.name(i), c.degree(i))));
        }
    }
    let generators: Vec<Generator> =
        (1..c.len()).map(|i| Generator { name: suspend_name(c.name(i), -1), degree: c.degree(i) - 1 }).collect();
    let differential = (1..c.len())
        .map(|i| {
            let mut d: LinComb<Word> = c.d_basis(i).map_keys(|&x| Word::letter(x - 1)).scaled(-1);
            for (&(x, y), k) in c.reduced_diagonal(i).iter() {
                d.add_term(Word(vec![(x - 1) as u16, (y - 1) as u16]), k * parity_sign(c.degree(x)));
            }
            d
        })
        .collect();
    FreeDga::new(generators, differential)
}

/// The coalgebra morphism `C → T(V)` lifting `φ : C̄ → V`:
/// `Ψ(c) = Σᵢ φ^{⊗i} Δ̄^{i−1}(c)`, evaluated on basis element `c`.
pub fn cofree_lift<V: Clone + Ord>(
    coalgebra: &TabulatedCoalgebra,
    phi: impl Fn(usize) -> LinComb<V>,
    c: usize,
) -> LinComb<Vec<V>> {
    if c == 0 {
        return LinComb::single(Vec::new(), 1);
    }
    let mut out = LinComb::new();
    let mut layer: LinComb<Vec<usize>> = LinComb::single(vec![c], 1);
    while !layer.is_zero() {
        for (xs, k) in layer.iter() {
            let mut words: LinComb<Vec<V>> = LinComb::single(Vec::new(), k);
            for &x in xs {
                let img = phi(x);
                words = words.apply(|w| {
                    img.map_keys(|v| {
                        let mut w = w.clone();
                        w.push(v.clone());
                        w
                    })
                });
            }
            out.add_scaled(&words, 1);
        }
        // Coassociativity lets the iterated diagonal split the last factor.
        layer = layer.apply(|xs| {
            let (last, init) = xs.split_last().expect("nonempty");
            coalgebra.reduced_diagonal(*last).map_keys(|&(p, q)| {
                let mut ys = init.to_vec();
                ys.push(p);
                ys.push(q);
                ys
            })
        });
    }
    out
}

/// The adjunction map `σ_C : C → BΩC`, `c ↦ Σ [ss⁻¹c₁|…|ss⁻¹cᵢ]` over the
/// iterated reduced diagonal; bar entries are words of `ΩC`.
pub fn adjunction_map(coalgebra: &TabulatedCoalgebra, c: usize) -> LinComb<Vec<Word>> {
    cofree_lift(coalgebra, |x| LinComb::single(Word::letter(x - 1), 1), c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dg::shuffle_product;

    fn cp2() -> TabulatedCoalgebra {
        TabulatedCoalgebra::projective_space(2, 2).unwrap()
    }

    #[test]
    fn unit_diagonal() {
        let a = FreeDga::from_named(&[("v", 2)], &[]).unwrap();
        let h = shuffle_diagonal(&a).unwrap();
        assert_eq!(h.diagonal_word(&Word::unit()), LinComb::single((Word::unit(), Word::unit()), 1));
    }

    #[test]
    fn diagonal_of_two_primitives() {
        let a = FreeDga::from_named(&[("v", 1), ("w", 1)], &[]).unwrap();
        let h = shuffle_diagonal(&a).unwrap();
        let d = h.diagonal_word(&Word(vec![0, 1]));
        let (v, w, one) = (Word::letter(0), Word::letter(1), Word::unit());
        assert_eq!(d.len(), 4);
        assert_eq!(d.coeff(&(Word(vec![0, 1]), one.clone())), 1);
        assert_eq!(d.coeff(&(v.clone(), w.clone())), 1);
        assert_eq!(d.coeff(&(w, v)), -1);
        assert_eq!(d.coeff(&(one, Word(vec![0, 1]))), 1);
        assert!(h.is_cocommutative_through(4));
        assert!(h.is_coassociative_through(4));
    }

    #[test]
    fn shuffle_diagonal_dualizes_to_shuffle_product() {
        let a = FreeDga::from_named(&[("a", 1), ("b", 2), ("c", 1)], &[]).unwrap();
        let h = shuffle_diagonal(&a).unwrap();
        let deg = |l: &u16| a.letter_degree(*l as usize);
        let words = a.words_through(5);
        for w in words.values().flatten() {
            let d = h.diagonal_word(w);
            let n = a.word_degree(w);
            for k in 0..=n {
                for u in &words[&k] {
                    for v in &words[&(n - k)] {
                        let p = shuffle_product(&u.0, &v.0, deg);
                        assert_eq!(d.coeff(&(u.clone(), v.clone())), p.coeff(&w.0));
                    }
                }
            }
        }
    }

    #[test]
    fn tensorization_of_cp2() {
        let h = tensorization_of_coalgebra(&cp2()).unwrap();
        let c4 = Word::letter(1);
        let c2 = Word::letter(0);
        let d = h.diagonal_word(&c4);
        assert_eq!(d.len(), 3);
        assert_eq!(d.coeff(&(c2.clone(), c2)), 1);
        assert!(h.is_counitary_through(8));
        assert!(h.is_coassociative_through(8));
    }

    #[test]
    fn primitive_coalgebra_gives_shuffle() {
        let c = TabulatedCoalgebra::primitive(vec![("a".into(), 2), ("b".into(), 3)]).unwrap();
        let h = tensorization_of_coalgebra(&c).unwrap();
        let s = shuffle_diagonal(h.algebra()).unwrap();
        for w in h.algebra().words_through(7).into_values().flatten() {
            assert_eq!(h.diagonal_word(&w), s.diagonal_word(&w));
        }
    }

    #[test]
    fn cobar_of_cp2() {
        let o = cobar(&cp2()).unwrap();
        assert_eq!(o.generators()[0].degree, 1);
        assert_eq!(o.generators()[1].degree, 3);
        assert_eq!(o.generator_differential(1), &LinComb::single(Word(vec![0, 0]), 1));
        assert!(o.d(o.generator_differential(1)).is_zero());
    }

    #[test]
    fn cobar_rejects_degree_one() {
        let c = TabulatedCoalgebra::primitive(vec![("a".into(), 1)]).unwrap();
        assert!(matches!(cobar(&c), Err(DgError::ConnectivityViolation(_))));
    }

    #[test]
    fn strict_counit_required() {
        let a = FreeDga::from_named(&[("v", 2)], &[]).unwrap();
        let img = LinComb::single((Word::letter(0), Word::unit()), 1);
        assert!(matches!(HopfData::new(a, vec![img]), Err(DgError::NotCounitary(_))));
    }

    #[test]
    fn lift_of_zero_and_primitive() {
        let s2 = TabulatedCoalgebra::primitive(vec![("c2".into(), 2)]).unwrap();
        assert!(cofree_lift(&s2, |_| LinComb::<u8>::new(), 1).is_zero());
        assert_eq!(cofree_lift(&s2, |_| LinComb::<u8>::new(), 0), LinComb::single(Vec::new(), 1));
        assert_eq!(adjunction_map(&s2, 1), LinComb::single(vec![Word::letter(0)], 1));
    }

    fn deconcatenate<V: Clone + Ord>(x: &LinComb<Vec<V>>) -> LinComb<(Vec<V>, Vec<V>)> {
        let mut out = LinComb::new();
        for (w, c) in x.iter() {
            for k in 1..w.len() {
                out.add_term((w[..k].to_vec(), w[k..].to_vec()), c);
            }
        }
        out
    }

    #[test]
    fn lift_is_coalgebra_morphism() {
        let c = TabulatedCoalgebra::projective_space(4, 2).unwrap();
        for x in 1..c.len() {
            let psi = adjunction_map(&c, x);
            let lhs = deconcatenate(&psi);
            let mut rhs = LinComb::new();
            for (&(p, q), k) in c.reduced_diagonal(x).iter() {
                for (a, e) in adjunction_map(&c, p).iter() {
                    for (b, f) in adjunction_map(&c, q).iter() {
                        rhs.add_term((a.clone(), b.clone()), k * e * f);
                    }
                }
            }
            assert_eq!(lhs, rhs);
        }
        // c8 splits into compositions of 4.
        assert_eq!(adjunction_map(&c, 4).len(), 8);
    }
}
