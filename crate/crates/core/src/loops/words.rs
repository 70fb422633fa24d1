use std::collections::BTreeMap;

use num_integer::Integer;

use crate::dg::Word;
use crate::graded::parity_sign;
use crate::linalg::{homology_slice, CoefficientRing, ExactMatrix, HomologySummary};
use crate::lincomb::LinComb;

fn word_degree(degrees: &[i64], w: &Word) -> i64 {
    w.letters().map(|l| degrees[l]).sum()
}

/// `τ·[v₁|…|vₙ] = (−1)^{|vₙ||v₁⋯vₙ₋₁|} [vₙ|v₁|…|vₙ₋₁]`.
pub fn cyclic_action(degrees: &[i64], w: &Word) -> (Word, i64) {
    let n = w.len();
    if n <= 1 {
        return (w.clone(), 1);
    }
    let last = degrees[w.0[n - 1] as usize];
    let rest = word_degree(degrees, &w.slice(0, n - 1));
    (w.slice(n - 1, n).concat(&w.slice(0, n - 1)), parity_sign(last * rest))
}

/// One orbit of `⟨τ⟩` on words of a fixed length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    /// Lexicographically least rotation.
    pub representative: Word,
    /// Smallest `k > 0` with `τᵏ * w = w`.
    pub period: usize,
    /// Sign of `τᵏ` on the representative.
    pub sign: i64,
    pub degree: i64,
}

impl Orbit {
    /// Contribution to the invariants: free of rank one unless the sign is
    /// negative, where only the 2-torsion of the ground ring survives.
    pub fn invariant_rank(&self, ring: CoefficientRing) -> usize {
        usize::from(self.sign > 0 || ring.characteristic() == 2)
    }

    /// Contribution to the coinvariants: `𝕜` or `𝕜/2𝕜`.
    pub fn coinvariant(&self, ring: CoefficientRing) -> (usize, Option<u64>) {
        match (self.sign > 0, ring) {
            (true, _) => (1, None),
            (false, CoefficientRing::Integers) => (0, Some(2)),
            (false, r) if r.characteristic() == 2 => (1, None),
            _ => (0, None),
        }
    }
}

/// `sym(w) = Σ_{i<k} τⁱ·w`.
pub fn sym(degrees: &[i64], w: &Word) -> LinComb<Word> {
    let mut out = LinComb::new();
    let mut cur = (w.clone(), 1);
    loop {
        out.add_term(cur.0.clone(), cur.1);
        let (next, s) = cyclic_action(degrees, &cur.0);
        cur = (next, cur.1 * s);
        if cur.0 == *w {
            return out;
        }
    }
}

/// Words of length `n` on a graded alphabet, split into `τ`-orbits.
#[derive(Clone, Debug)]
pub struct CyclicWordSpace {
    pub degrees: Vec<i64>,
    pub length: usize,
    pub orbits: Vec<Orbit>,
}

impl CyclicWordSpace {
    /// Invariants `TⁿV^τ` by total degree: free ranks only, since
    /// `₂ℤ = 0`.
    pub fn invariants(&self, ring: CoefficientRing) -> BTreeMap<i64, usize> {
        let mut out = BTreeMap::new();
        for o in &self.orbits {
            *out.entry(o.degree).or_insert(0) += o.invariant_rank(ring);
        }
        out
    }

    /// Coinvariants `TⁿV_τ` by total degree: free rank and torsion.
    pub fn coinvariants(&self, ring: CoefficientRing) -> BTreeMap<i64, (usize, Vec<u64>)> {
        let mut out: BTreeMap<i64, (usize, Vec<u64>)> = BTreeMap::new();
        for o in &self.orbits {
            let e = out.entry(o.degree).or_default();
            let (f, t) = o.coinvariant(ring);
            e.0 += f;
            e.1.extend(t);
        }
        out
    }
}

fn all_words(m: usize, n: usize) -> Vec<Word> {
    let mut out = vec![Word::unit()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| (0..m).map(move |l| w.concat(&Word::letter(l))))
            .collect();
    }
    out
}

fn least_rotation(w: &Word) -> Word {
    (0..w.len().max(1)).map(|i| w.slice(i, w.len()).concat(&w.slice(0, i))).min().unwrap_or_default()
}

/// Orbit decomposition of the words of length `n` on letters of the given
/// degrees.
pub fn invariants_and_coinvariants(degrees: &[i64], n: usize) -> CyclicWordSpace {
    let mut seen = std::collections::BTreeSet::new();
    let mut orbits = Vec::new();
    for w in all_words(degrees.len(), n) {
        let rep = least_rotation(&w);
        if !seen.insert(rep.clone()) {
            continue;
        }
        let mut cur = (rep.clone(), 1);
        let mut period = 0;
        loop {
            let (next, s) = cyclic_action(degrees, &cur.0);
            cur = (next, cur.1 * s);
            period += 1;
            if cur.0 == rep {
                break;
            }
        }
        orbits.push(Orbit { degree: word_degree(degrees, &rep), representative: rep, period, sign: cur.1 });
    }
    CyclicWordSpace { degrees: degrees.to_vec(), length: n, orbits }
}

/// `H^n(C(𝕜 ⊕ s⁻¹V))` for `V` concentrated in positive degrees, as
/// `(free rank, torsion)` for `n ≤ top`: the invariants of `TV` in degree
/// `n` plus the coinvariants of `T^{≥1}V` in degree `n − 1`.
pub fn hh_trivial_algebra(degrees: &[i64], ring: CoefficientRing, top: i64) -> Vec<(usize, Vec<u64>)> {
    let mut out = vec![(0, Vec::new()); top as usize + 1];
    out[0].0 = 1;
    let min = degrees.iter().copied().min().unwrap_or(top + 1).max(1);
    for k in 1..=(top / min) as usize {
        let space = invariants_and_coinvariants(degrees, k);
        for (d, r) in space.invariants(ring) {
            if d <= top {
                out[d as usize].0 += r;
            }
        }
        for (d, (r, t)) in space.coinvariants(ring) {
            if d < top {
                let e = &mut out[d as usize + 1];
                e.0 += r;
                e.1.extend(t);
            }
        }
    }
    out
}

/// `(1/n) Σ_{i=1}^{n} m^{gcd(i,n)}`, the number of necklaces of length `n`
/// on `m` letters.
pub fn necklace_count(m: u64, n: u64) -> u64 {
    if n == 0 {
        return 1;
    }
    let total: u128 = (1..=n).map(|i| (m as u128).pow(i.gcd(&n) as u32)).sum();
    (total / n as u128) as u64
}

/// Kernel and cokernel of `id − τ` on the words of length `n` and total
/// degree `degree`, by Smith normal form.
pub fn invariants_by_matrix(
    degrees: &[i64],
    n: usize,
    degree: i64,
    ring: CoefficientRing,
) -> (HomologySummary, HomologySummary) {
    let words: Vec<Word> =
        all_words(degrees.len(), n).into_iter().filter(|w| word_degree(degrees, w) == degree).collect();
    let index: BTreeMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let dim = words.len();
    let mut m = ExactMatrix::zeros(dim, dim);
    for (j, w) in words.iter().enumerate() {
        let (t, s) = cyclic_action(degrees, w);
        m.set(j, j, *m.get(j, j) + 1);
        let i = index[&t];
        m.set(i, j, *m.get(i, j) - s);
    }
    let zero_in = ExactMatrix::zeros(dim, 0);
    let zero_out = ExactMatrix::zeros(0, dim);
    let kernel = homology_slice(&zero_in, &m, ring).expect("square slice");
    let cokernel = homology_slice(&m, &zero_out, ring).expect("square slice");
    (kernel, cokernel)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bar::cyclic_bar;
    use crate::dg::TabulatedDgaBuilder;
    use crate::graded::{homology_table, torsion_i64, Grading};
    use num_bigint::BigInt;
    use proptest::prelude::*;

    #[test]
    fn rotations() {
        assert_eq!(cyclic_action(&[3], &Word(vec![0])), (Word(vec![0]), 1));
        assert_eq!(cyclic_action(&[1, 1], &Word(vec![0, 1])), (Word(vec![1, 0]), -1));
        let d = [1, 1, 1];
        let mut cur = (Word(vec![0, 1, 2]), 1);
        for _ in 0..3 {
            let (w, s) = cyclic_action(&d, &cur.0);
            cur = (w, cur.1 * s);
        }
        assert_eq!(cur, (Word(vec![0, 1, 2]), 1));
    }

    #[test]
    fn odd_square_orbit() {
        let s = invariants_and_coinvariants(&[1], 2);
        assert_eq!(s.orbits.len(), 1);
        assert_eq!(s.orbits[0].sign, -1);
        assert_eq!(s.invariants(CoefficientRing::Integers)[&2], 0);
        assert_eq!(s.coinvariants(CoefficientRing::Integers)[&2], (0, vec![2]));
        assert_eq!(s.coinvariants(CoefficientRing::f2())[&2], (1, vec![]));
    }

    #[test]
    fn small_necklaces() {
        assert_eq!(necklace_count(2, 3), 4);
        assert_eq!(necklace_count(3, 4), 24);
        for n in 1..10 {
            assert_eq!(necklace_count(1, n), 1);
        }
    }

    #[test]
    fn even_alphabet_is_free() {
        let s = invariants_and_coinvariants(&[2, 4], 4);
        assert!(s.orbits.iter().all(|o| o.sign == 1));
        assert_eq!(s.orbits.len() as u64, necklace_count(2, 4));
    }

    #[test]
    fn sym_is_invariant() {
        let d = [1, 2, 3];
        for w in all_words(3, 4) {
            let s = sym(&d, &w);
            let t = s.apply(|x| {
                let (y, e) = cyclic_action(&d, x);
                LinComb::single(y, e)
            });
            let rep = invariants_and_coinvariants(&d, 4)
                .orbits
                .into_iter()
                .find(|o| o.representative == least_rotation(&w))
                .unwrap();
            // τ·sym(w) = sym(w) − w + τᵏ·w
            let mut expected = s.clone();
            if rep.sign < 0 {
                expected.add_term(w.clone(), -2);
            }
            assert_eq!(t, expected, "{w:?}");
        }
    }

    proptest! {
        #[test]
        fn necklace_formula_counts_orbits(m in 1u64..=3, n in 1u64..=8) {
            let s = invariants_and_coinvariants(&vec![2; m as usize], n as usize);
            prop_assert_eq!(s.orbits.len() as u64, necklace_count(m, n));
            let total: u128 = (1..=n).map(|i| (m as u128).pow(i.gcd(&n) as u32)).sum();
            prop_assert_eq!(total % n as u128, 0);
        }

        #[test]
        fn orbit_classes_match_matrix(degrees in proptest::collection::vec(1i64..=4, 1..=3), n in 1usize..=5) {
            let s = invariants_and_coinvariants(&degrees, n);
            for ring in [CoefficientRing::Integers, CoefficientRing::f2()] {
                let inv = s.invariants(ring);
                let coinv = s.coinvariants(ring);
                for (&deg, &rank) in &inv {
                    let (k, c) = invariants_by_matrix(&degrees, n, deg, ring);
                    prop_assert_eq!(k.free_rank, rank);
                    prop_assert!(k.torsion.is_empty());
                    let (f, t) = &coinv[&deg];
                    prop_assert_eq!(c.free_rank, *f);
                    prop_assert_eq!(c.torsion.clone(), t.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>());
                }
            }
        }
    }

    #[test]
    fn trivial_algebra_matches_cyclic_bar() {
        let cases: [&[i64]; 5] = [&[1], &[2], &[1, 2], &[2, 3], &[1, 1]];
        let top = 8;
        for degrees in cases {
            let mut b = TabulatedDgaBuilder::new(Grading::Upper, top + 1);
            for (i, d) in degrees.iter().enumerate() {
                b.element(format!("b{i}"), d + 1);
            }
            let b = b.build(true).unwrap();
            for ring in [CoefficientRing::Integers, CoefficientRing::f2()] {
                let h = homology_table(&cyclic_bar(&b, ring, top).unwrap().complex).unwrap();
                let ours = hh_trivial_algebra(degrees, ring, top);
                for n in 0..=top as usize {
                    let mut t = torsion_i64(&h[n]);
                    t.sort();
                    let mut u: Vec<i64> = ours[n].1.iter().map(|&x| x as i64).collect();
                    u.sort();
                    assert_eq!((h[n].free_rank, t), (ours[n].0, u), "{degrees:?} {ring:?} degree {n}");
                }
            }
        }
    }
}
