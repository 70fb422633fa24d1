use super::cyclic::{small_basis, small_cyclic_differential, small_name, SmallKey};
use super::sdr::keyed_map;
use super::PerturbError;
use crate::bar::{cyclic_bar, CycKey};
use crate::dg::{cobar, FreeDga, TabulatedCoalgebra, Word};
use crate::graded::{dual_complex, parity_sign, GradedMap, KeyedComplex, TruncatedComplex};
use crate::linalg::CoefficientRing;
use crate::lincomb::LinComb;

/// The complex `((𝕜 ⊕ sV) ⊗ TV, δ)` through degree `n + 1`, without the retract.
pub fn small_complex(alg: &FreeDga, ring: CoefficientRing, n: i64) -> Result<KeyedComplex<SmallKey>, PerturbError> {
    Ok(KeyedComplex::build(
        ring,
        small_basis(alg, n + 1),
        |k| small_cyclic_differential(alg, k),
        |k| small_name(alg, k),
    )?)
}

/// `C(C^∨) ≅ (C ⊗ ΩC, δ)^∨` together with both complexes.
#[derive(Clone, Debug)]
pub struct DualityIso {
    pub map: GradedMap,
    pub source: TruncatedComplex,
    pub target: TruncatedComplex,
}

/// `c^∨[sc₁^∨|…|scₖ^∨] ↦ ± (c ⊗ s⁻¹c₁⋯s⁻¹cₖ)^∨` with the sign
/// `(−1)^{|c| + Σⱼ (|cⱼ|+1)(|c| + Σ_{l<j} (|c_l|+1))}`.
fn duality_sign(c: &TabulatedCoalgebra, k: &CycKey<usize>) -> i64 {
    let p = c.degree(k.a);
    let mut e = p;
    let mut before = p;
    for &x in &k.spine {
        let ex = c.degree(x) + 1;
        e += ex * before;
        before += ex;
    }
    parity_sign(e)
}

/// The isomorphism from the Hochschild complex of the dual algebra to the
/// dual of the small complex of the cobar construction, checked to be a
/// chain map and a signed permutation in every degree through `n`.
pub fn cobar_duality_iso(c: &TabulatedCoalgebra, ring: CoefficientRing, n: i64) -> Result<DualityIso, PerturbError> {
    let om = cobar(c)?;
    let alg = c.dual()?;
    let big = cyclic_bar(&alg, ring, n)?;
    let small = small_complex(&om, ring, n)?;
    let target = dual_complex(&small.complex);
    let map = keyed_map(&big.basis, &small.basis, 0, |k: &CycKey<usize>| {
        let w = Word(k.spine.iter().map(|&x| (x - 1) as u16).collect());
        let key = if k.a == 0 { SmallKey::Unit(w) } else { SmallKey::Susp((k.a - 1) as u16, w) };
        LinComb::single(key, duality_sign(c, k))
    })?;
    map.check_chain_map(&big.complex, &target)?;
    for (deg, m) in map.blocks() {
        let mut hit = vec![false; m.rows()];
        let square = m.rows() == m.cols();
        let permutation = square
            && (0..m.cols()).all(|j| match m.column(j) {
                [(i, x)] if x.abs() == 1 && !hit[*i] => {
                    hit[*i] = true;
                    true
                }
                _ => false,
            });
        if !permutation {
            return Err(PerturbError::Mismatch(format!("duality map is not a signed permutation in degree {deg}")));
        }
    }
    Ok(DualityIso { map, source: big.complex, target })
}
