use std::collections::{BTreeMap, HashMap};

use super::word::Word;
use super::DgError;
use crate::graded::{parity_sign, GradedMap, Grading, KeyedBasis};
use crate::lincomb::LinComb;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub name: String,
    pub degree: i64,
}

/// A tensor algebra `T(V)` on generators of degree ≥ 1 with a derivation
/// differential of degree −1 given on generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeDga {
    generators: Vec<Generator>,
    differential: Vec<LinComb<Word>>,
}

impl FreeDga {
    /// Validates degrees and `d² = 0` on generators, which suffices for a
    /// derivation.
    pub fn new(generators: Vec<Generator>, differential: Vec<LinComb<Word>>) -> Result<Self, DgError> {
        if generators.len() != differential.len() {
            return Err(DgError::Malformed(format!(
                "{} generators but {} differentials",
                generators.len(),
                differential.len()
            )));
        }
        if generators.len() > u16::MAX as usize {
            return Err(DgError::Malformed("too many generators".into()));
        }
        let mut seen = HashMap::new();
        for g in &generators {
            if g.degree < 1 {
                return Err(DgError::ConnectivityViolation(format!("generator {} has degree {}", g.name, g.degree)));
            }
            if seen.insert(g.name.clone(), ()).is_some() {
                return Err(DgError::DuplicateGenerator(g.name.clone()));
            }
        }
        let alg = FreeDga { generators, differential };
        for (i, g) in alg.generators.iter().enumerate() {
            for (w, _) in alg.differential[i].iter() {
                if w.letters().any(|l| l >= alg.generators.len()) {
                    return Err(DgError::Malformed(format!("d({}) uses an unknown letter", g.name)));
                }
                if w.is_unit() || alg.word_degree(w) != g.degree - 1 {
                    return Err(DgError::DegreeMismatch {
                        what: format!("d({})", g.name),
                        expected: g.degree - 1,
                        found: alg.word_degree(w),
                    });
                }
            }
        }
        for (i, g) in alg.generators.iter().enumerate() {
            if !alg.d(&alg.differential[i]).is_zero() {
                return Err(DgError::NotSquareZero(g.name.clone()));
            }
        }
        Ok(alg)
    }

    /// Builds from generator names and differentials written as
    /// `(coefficient, [letter names])` terms.
    pub fn from_named(gens: &[(&str, i64)], diff: &[(&str, Vec<(i64, Vec<&str>)>)]) -> Result<Self, DgError> {
        let generators: Vec<Generator> =
            gens.iter().map(|(n, d)| Generator { name: n.to_string(), degree: *d }).collect();
        let index: HashMap<&str, usize> = gens.iter().enumerate().map(|(i, (n, _))| (*n, i)).collect();
        let mut differential = vec![LinComb::new(); generators.len()];
        for (g, terms) in diff {
            let gi = *index.get(g).ok_or_else(|| DgError::UnknownGenerator(g.to_string()))?;
            for (c, letters) in terms {
                let w = letters
                    .iter()
                    .map(|l| index.get(l).map(|&i| i as u16).ok_or_else(|| DgError::UnknownGenerator(l.to_string())))
                    .collect::<Result<Vec<_>, _>>()?;
                differential[gi].add_term(Word(w), *c);
            }
        }
        FreeDga::new(generators, differential)
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    pub fn letter_degree(&self, l: usize) -> i64 {
        self.generators[l].degree
    }

    pub fn word_degree(&self, w: &Word) -> i64 {
        w.letters().map(|l| self.generators[l].degree).sum()
    }

    pub fn word_name(&self, w: &Word) -> String {
        if w.is_unit() {
            return "1".into();
        }
        w.letters().map(|l| self.generators[l].name.as_str()).collect::<Vec<_>>().join("·")
    }

    pub fn generator_differential(&self, l: usize) -> &LinComb<Word> {
        &self.differential[l]
    }

    /// Leibniz extension: `d(w₁⋯wₙ) = Σ (−1)^{|w₁⋯w_{i−1}|} w₁⋯d(wᵢ)⋯wₙ`.
    pub fn d_word(&self, w: &Word) -> LinComb<Word> {
        self.derivation_on_word(w, 1, |l| self.differential[l].clone())
    }

    pub fn d(&self, x: &LinComb<Word>) -> LinComb<Word> {
        x.apply(|w| self.d_word(w))
    }

    /// Derivation of lower degree `k` determined by `images` on generators:
    /// `D(xy) = D(x)y + (−1)^{k|x|} x D(y)`. Pass `k = 1` for odd derivations
    /// and `k = 0` for even ones; only the parity matters.
    pub fn derivation_on_word(&self, w: &Word, k: i64, images: impl Fn(usize) -> LinComb<Word>) -> LinComb<Word> {
        let mut out = LinComb::new();
        let mut prefix_deg = 0;
        for (i, l) in w.letters().enumerate() {
            let img = images(l);
            if !img.is_zero() {
                let sign = parity_sign(k * prefix_deg);
                let before = w.slice(0, i);
                let after = w.slice(i + 1, w.len());
                for (m, c) in img.iter() {
                    out.add_term(before.concat(m).concat(&after), sign * c);
                }
            }
            prefix_deg += self.letter_degree(l);
        }
        out
    }

    /// All words of degree `n` (the empty word in degree 0).
    pub fn words(&self, n: i64) -> Vec<Word> {
        let mut table = self.words_through(n);
        table.remove(&n).unwrap_or_default()
    }

    /// Words of each degree `0..=n`.
    pub fn words_through(&self, n: i64) -> BTreeMap<i64, Vec<Word>> {
        let mut table: BTreeMap<i64, Vec<Word>> = BTreeMap::new();
        table.insert(0, vec![Word::unit()]);
        for m in 1..=n {
            let mut ws = Vec::new();
            for (l, g) in self.generators.iter().enumerate() {
                if g.degree <= m {
                    for tail in &table[&(m - g.degree)] {
                        let mut v = Vec::with_capacity(tail.len() + 1);
                        v.push(l as u16);
                        v.extend_from_slice(&tail.0);
                        ws.push(Word(v));
                    }
                }
            }
            ws.sort();
            table.insert(m, ws);
        }
        table
    }

    /// The algebra with only the word-length-one part of the differential.
    pub fn linear_part(&self) -> FreeDga {
        let differential = self
            .differential
            .iter()
            .map(|c| c.iter().filter(|(w, _)| w.len() == 1).map(|(w, x)| (w.clone(), x)).collect())
            .collect();
        FreeDga { generators: self.generators.clone(), differential }
    }

    pub fn is_linear(&self) -> bool {
        self.differential.iter().all(|c| c.keys().all(|w| w.len() == 1))
    }

    /// Largest word length occurring in a generator's differential.
    pub fn max_differential_length(&self) -> usize {
        self.differential.iter().flat_map(|c| c.keys().map(Word::len)).max().unwrap_or(0)
    }

    /// Words of each degree up to `n` as a keyed basis.
    pub fn word_basis(&self, n: i64) -> KeyedBasis<Word> {
        let mut b = KeyedBasis::new(Grading::Lower, n);
        for (d, ws) in self.words_through(n) {
            b.set_degree(d, ws);
        }
        b
    }
}

/// The derivation of lower degree `k` with the given generator images, as a
/// graded map on words through degree `n`.
pub fn extend_derivation(
    algebra: &FreeDga,
    images: &[LinComb<Word>],
    k: i64,
    n: i64,
) -> Result<GradedMap, DgError> {
    if images.len() != algebra.generators().len() {
        return Err(DgError::Malformed("one image per generator is required".into()));
    }
    for (l, img) in images.iter().enumerate() {
        for (w, _) in img.iter() {
            let expected = algebra.letter_degree(l) + k;
            if algebra.word_degree(w) != expected {
                return Err(DgError::DegreeMismatch {
                    what: format!("image of {}", algebra.generators()[l].name),
                    expected,
                    found: algebra.word_degree(w),
                });
            }
        }
    }
    let basis = algebra.word_basis(n);
    let mut blocks = BTreeMap::new();
    for m in 0..=n {
        let t = m + k;
        if t < 0 || t > n {
            continue;
        }
        let block = basis.matrix_to(m, &basis, t, |w| algebra.derivation_on_word(w, k, |l| images[l].clone()))?;
        blocks.insert(m, block);
    }
    Ok(GradedMap::new(Grading::Lower, k, blocks))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_images_give_zero_derivation() {
        let a = FreeDga::from_named(&[("v", 1)], &[]).unwrap();
        let m = extend_derivation(&a, &[LinComb::new()], -1, 6).unwrap();
        assert!(m.blocks().values().all(|b| b.is_zero_mod(0)));
    }

    #[test]
    fn square_of_odd_generator_is_closed() {
        // d(vv) = (dv)v − v(dv) when the image is v·v in T(v), |v| = 1:
        // v²·v − v·v² = 0.
        let a = FreeDga::from_named(&[("v", 1)], &[]).unwrap();
        let vv = Word(vec![0, 0]);
        let d = a.derivation_on_word(&vv, 1, |_| LinComb::single(Word(vec![0, 0]), 1));
        assert!(d.is_zero());
    }

    #[test]
    fn cobar_of_cp2_squares_to_zero() {
        // d z₃ = z₁z₁ with |z₁| = 1: d(z₁z₁) = 0 since d z₁ = 0.
        let a = FreeDga::from_named(&[("z1", 1), ("z3", 3)], &[("z3", vec![(1, vec!["z1", "z1"])])]).unwrap();
        let z3 = Word::letter(1);
        assert!(a.d(&a.d_word(&z3)).is_zero());
    }

    #[test]
    fn rejects_nonzero_square() {
        // d b = a, d c = b: d² c = a ≠ 0.
        let r = FreeDga::from_named(
            &[("a", 1), ("b", 2), ("c", 3)],
            &[("b", vec![(1, vec!["a"])]), ("c", vec![(1, vec!["b"])])],
        );
        assert!(matches!(r, Err(DgError::NotSquareZero(_))));
    }

    #[test]
    fn rejects_wrong_degree() {
        let r = FreeDga::from_named(&[("a", 1), ("b", 3)], &[("b", vec![(1, vec!["a"])])]);
        assert!(matches!(r, Err(DgError::DegreeMismatch { .. })));
    }

    #[test]
    fn word_counts() {
        let a = FreeDga::from_named(&[("x", 1), ("y", 2)], &[]).unwrap();
        // Compositions of 4 into parts 1 and 2.
        assert_eq!(a.words(4).len(), 5);
        assert_eq!(a.words(0), vec![Word::unit()]);
    }

    #[test]
    fn linear_part_drops_quadratic_terms() {
        let a = FreeDga::from_named(
            &[("x", 1), ("y", 2), ("z", 3)],
            &[("z", vec![(1, vec!["x", "x"])]), ("y", vec![])],
        )
        .unwrap();
        assert!(!a.is_linear());
        assert!(a.linear_part().is_linear());
        assert!(a.linear_part().generator_differential(2).is_zero());
    }

    #[test]
    fn derivation_is_a_chain_level_derivation() {
        let a = FreeDga::from_named(
            &[("x", 1), ("y", 2), ("z", 4)],
            &[("z", vec![(1, vec!["x", "y"]), (-1, vec!["y", "x"])])],
        )
        .unwrap();
        let d = extend_derivation(&a, &(0..3).map(|l| a.generator_differential(l).clone()).collect::<Vec<_>>(), -1, 7)
            .unwrap();
        let dd = d.compose(&d).unwrap();
        assert!(dd.blocks().values().all(|b| b.is_zero_mod(0)));
    }
}
