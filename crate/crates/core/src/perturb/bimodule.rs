use std::collections::BTreeMap;

use super::sdr::{keyed_map, perturb, FilteredPerturbation, SdrData};
use super::PerturbError;
use crate::bar::{bar_resolution, BimodKey};
use crate::dg::{AugmentedDga, FreeDga, Word};
use crate::graded::{parity_sign, GradedMap, KeyedBasis, KeyedComplex};
use crate::linalg::CoefficientRing;
use crate::lincomb::LinComb;

/// `a ⊗ v̄ ⊗ b` in `TV ⊗ (𝕜 ⊕ sV) ⊗ TV`; `mid` is `None` for `1` or the
/// letter `v` of `sv`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SmallBimodKey {
    pub left: Word,
    pub mid: Option<u16>,
    pub right: Word,
}

/// A retract together with the keys of both sides.
#[derive(Clone, Debug)]
pub struct KeyedSdr<K, L> {
    pub sdr: SdrData,
    pub big: KeyedBasis<K>,
    pub small: KeyedBasis<L>,
}

pub(crate) fn mid_degree(alg: &FreeDga, mid: Option<u16>) -> i64 {
    mid.map_or(0, |l| alg.letter_degree(l as usize) + 1)
}

pub fn small_bimod_name(alg: &FreeDga, k: &SmallBimodKey) -> String {
    let mid = match k.mid {
        None => "1".to_string(),
        Some(l) => format!("s{}", alg.generators()[l as usize].name),
    };
    format!("{}⊗{}⊗{}", alg.word_name(&k.left), mid, alg.word_name(&k.right))
}

fn small_bimod_basis(alg: &FreeDga, top: i64) -> KeyedBasis<SmallBimodKey> {
    let words = alg.words_through(top);
    let mut mids: Vec<(i64, Option<u16>)> = vec![(0, None)];
    for (l, g) in alg.generators().iter().enumerate() {
        mids.push((g.degree + 1, Some(l as u16)));
    }
    let mut basis = KeyedBasis::new(alg.grading(), top);
    for n in 0..=top {
        let mut keys = Vec::new();
        for &(md, mid) in &mids {
            for p in 0..=n - md {
                for a in &words[&p] {
                    for b in &words[&(n - md - p)] {
                        keys.push(SmallBimodKey { left: a.clone(), mid, right: b.clone() });
                    }
                }
            }
        }
        basis.set_degree(n, keys);
    }
    basis
}

/// `S(a ⊗ v₁⋯vₙ) = Σ (−1)^{|av₁⋯vᵢ₋₁|} av₁⋯vᵢ₋₁ ⊗ svᵢ ⊗ vᵢ₊₁⋯vₙ`.
pub fn splitting(alg: &FreeDga, a: &Word, w: &Word) -> LinComb<SmallBimodKey> {
    let mut out = LinComb::new();
    let mut deg = alg.word_degree(a);
    for i in 0..w.len() {
        let l = w.0[i];
        out.add_term(
            SmallBimodKey { left: a.concat(&w.slice(0, i)), mid: Some(l), right: w.slice(i + 1, w.len()) },
            parity_sign(deg),
        );
        deg += alg.letter_degree(l as usize);
    }
    out
}

fn right_mul(k: &SmallBimodKey, b: &Word) -> SmallBimodKey {
    SmallBimodKey { left: k.left.clone(), mid: k.mid, right: k.right.concat(b) }
}

/// The differential `D` of the small resolution: `d` on `TV ⊗ TV` and
/// `d̃₁ + d₂` on `TV ⊗ sV ⊗ TV`.
pub fn small_bimod_differential(alg: &FreeDga, k: &SmallBimodKey) -> LinComb<SmallBimodKey> {
    let (a, b) = (&k.left, &k.right);
    let da = alg.d_word(a);
    let db = alg.d_word(b);
    let deg_a = alg.word_degree(a);
    let mut out = LinComb::new();
    match k.mid {
        None => {
            for (x, c) in da.iter() {
                out.add_term(SmallBimodKey { left: x.clone(), mid: None, right: b.clone() }, c);
            }
            for (y, c) in db.iter() {
                out.add_term(SmallBimodKey { left: a.clone(), mid: None, right: y.clone() }, parity_sign(deg_a) * c);
            }
        }
        Some(l) => {
            let v = Word::letter(l as usize);
            for (x, c) in da.iter() {
                out.add_term(SmallBimodKey { left: x.clone(), mid: Some(l), right: b.clone() }, c);
            }
            for (w, c) in alg.generator_differential(l as usize).iter() {
                for (s, e) in splitting(alg, a, w).iter() {
                    out.add_term(right_mul(s, b), -c * e);
                }
            }
            let sign = -parity_sign(deg_a + alg.letter_degree(l as usize));
            for (y, c) in db.iter() {
                out.add_term(SmallBimodKey { left: a.clone(), mid: Some(l), right: y.clone() }, sign * c);
            }
            let s = parity_sign(deg_a);
            out.add_term(SmallBimodKey { left: a.concat(&v), mid: None, right: b.clone() }, s);
            out.add_term(SmallBimodKey { left: a.clone(), mid: None, right: v.concat(b) }, -s);
        }
    }
    out
}

/// The projection: identity on spine length 0,
/// `f₁(a[sv₁⋯vₙ]b) = Σ (−1)^{|v₁⋯vᵢ₋₁|} av₁⋯vᵢ₋₁ ⊗ svᵢ ⊗ vᵢ₊₁⋯vₙb`, zero on
/// longer spines.
pub fn projection(alg: &FreeDga, k: &BimodKey<Word>) -> LinComb<SmallBimodKey> {
    match k.spine.len() {
        0 => LinComb::single(SmallBimodKey { left: k.left.clone(), mid: None, right: k.right.clone() }, 1),
        1 => {
            let w = &k.spine[0];
            let mut out = LinComb::new();
            let mut deg = 0;
            for i in 0..w.len() {
                let l = w.0[i];
                out.add_term(
                    SmallBimodKey {
                        left: k.left.concat(&w.slice(0, i)),
                        mid: Some(l),
                        right: w.slice(i + 1, w.len()).concat(&k.right),
                    },
                    parity_sign(deg),
                );
                deg += alg.letter_degree(l as usize);
            }
            out
        }
        _ => LinComb::new(),
    }
}

pub fn inclusion(k: &SmallBimodKey) -> BimodKey<Word> {
    BimodKey {
        left: k.left.clone(),
        spine: k.mid.map(|l| vec![Word::letter(l as usize)]).unwrap_or_default(),
        right: k.right.clone(),
    }
}

/// The contracting homotopy: `Φ₀ = 0`, `Φ(a[…|sv]b) = 0` and
/// `Φ(a[…|s(aₙv)]b) = −(−1)^{εₙ} a[…|saₙ|sv]b + Φ(a[…|saₙ]vb)`.
pub fn homotopy(alg: &FreeDga, k: &BimodKey<Word>) -> LinComb<BimodKey<Word>> {
    let mut out = LinComb::new();
    let mut spine = k.spine.clone();
    let mut right = k.right.clone();
    let Some(last) = spine.last() else { return out };
    let n = spine.len();
    let prefix: i64 =
        alg.word_degree(&k.left) + spine[..n - 1].iter().map(|w| alg.word_degree(w) + 1).sum::<i64>();
    let mut last = last.clone();
    while last.len() > 1 {
        let v = last.slice(last.len() - 1, last.len());
        let head = last.slice(0, last.len() - 1);
        let eps = prefix + alg.word_degree(&head) + 1;
        let mut s = spine[..n - 1].to_vec();
        s.push(head.clone());
        s.push(v.clone());
        out.add_term(BimodKey { left: k.left.clone(), spine: s, right: right.clone() }, -parity_sign(eps));
        right = v.concat(&right);
        last = head;
        spine[n - 1] = last.clone();
    }
    out
}

/// The retract of `B(TV;TV;TV)` onto `TV ⊗ (𝕜 ⊕ sV) ⊗ TV` for a linear
/// differential, through degree `n + 1`.
pub fn linear_sdr(alg: &FreeDga, ring: CoefficientRing, n: i64) -> Result<KeyedSdr<BimodKey<Word>, SmallBimodKey>, PerturbError> {
    if !alg.is_linear() {
        return Err(PerturbError::NotLinear);
    }
    retract_with(alg, ring, n)
}

fn retract_with(alg: &FreeDga, ring: CoefficientRing, n: i64) -> Result<KeyedSdr<BimodKey<Word>, SmallBimodKey>, PerturbError> {
    let big = bar_resolution(alg, ring, n)?;
    let small_basis = small_bimod_basis(alg, n + 1);
    let small = KeyedComplex::build(ring, small_basis, |k| small_bimod_differential(alg, k), |k| small_bimod_name(alg, k))?;
    let f = keyed_map(&big.basis, &small.basis, 0, |k| projection(alg, k))?;
    let nabla = keyed_map(&small.basis, &big.basis, 0, |k| LinComb::single(inclusion(k), 1))?;
    let phi = keyed_map(&big.basis, &big.basis, 1, |k| homotopy(alg, k))?;
    Ok(KeyedSdr {
        sdr: SdrData { big: big.complex, small: small.complex, f, nabla, phi },
        big: big.basis,
        small: small.basis,
    })
}

/// `t = d_big(A) − d_big(A_lin)` as a perturbation, with the series bound
/// coming from the degree.
pub fn difference_perturbation(full: &GradedMap, linear: &GradedMap, top: i64) -> FilteredPerturbation {
    let blocks: BTreeMap<_, _> = full
        .blocks()
        .iter()
        .filter_map(|(n, a)| linear.block(*n).map(|b| (*n, a.sub(b))))
        .collect();
    FilteredPerturbation { t: GradedMap::new(full.grading(), -1, blocks), bound: (top + 3) as usize }
}

/// The small resolution `(TV ⊗ (𝕜 ⊕ sV) ⊗ TV, D)` of a free DGA: the
/// linear retract perturbed by the nonlinear part of the differential.
/// `D` computed by the series is checked against the closed formula.
pub fn small_bimodule_resolution(
    alg: &FreeDga,
    ring: CoefficientRing,
    n: i64,
) -> Result<KeyedSdr<BimodKey<Word>, SmallBimodKey>, PerturbError> {
    let lin = linear_sdr(&alg.linear_part(), ring, n)?;
    let full = retract_with(alg, ring, n)?;
    let t = difference_perturbation(
        &GradedMap::differential_of(&full.sdr.big),
        &GradedMap::differential_of(&lin.sdr.big),
        n + 1,
    );
    let out = perturb(&lin.sdr, &t)?;
    for (k, m) in out.small.differentials() {
        if m.sub(&full.sdr.small.differential(*k)).first_nonzero_mod(0).is_some() {
            return Err(PerturbError::Mismatch(format!("perturbed small differential in degree {k}")));
        }
    }
    Ok(KeyedSdr { sdr: out, big: full.big, small: full.small })
}
