use crate::bar::{keyed_ring_table, HochschildClassTable};
use crate::dg::{divided_powers_algebra, tensor_product, truncated_polynomial, TabulatedDga};
use crate::graded::{Grading, KeyedBasis, KeyedComplex};
use crate::linalg::CoefficientRing;
use crate::lincomb::LinComb;

use super::LoopError;

/// Free rank and torsion orders of one degree.
pub type GroupShape = (usize, Vec<u64>);

/// A cochain algebra as a keyed complex on its own basis.
pub fn algebra_complex(alg: &TabulatedDga, ring: CoefficientRing) -> Result<KeyedComplex<usize>, LoopError> {
    let mut basis = KeyedBasis::new(alg.grading(), alg.max_degree());
    for n in 0..=alg.max_degree() {
        basis.set_degree(n, (0..alg.len()).filter(|&a| alg.degree(a) == n).collect());
    }
    Ok(KeyedComplex::build(ring, basis, |&a| alg.d_basis(a).clone(), |&a| alg.name(a).to_string())?)
}

/// Ring table of the cohomology of a cochain CDGA through degree `n`.
pub fn cdga_cohomology_ring(alg: &TabulatedDga, ring: CoefficientRing, n: i64) -> Result<HochschildClassTable, LoopError> {
    let c = algebra_complex(alg, ring)?;
    Ok(keyed_ring_table(&c, n, None, |&a, &b| alg.mul(a, b))?)
}

fn product_of(alg: &TabulatedDga, factors: &[usize]) -> LinComb<usize> {
    let mut acc = LinComb::single(0usize, 1);
    for &f in factors {
        acc = acc.apply(|&a| alg.mul(a, f));
    }
    acc
}

fn gamma(alg: &TabulatedDga, name: &str, k: i64) -> Option<usize> {
    if k == 0 {
        Some(0)
    } else {
        alg.index_of(&format!("γ{k}({name})"))
    }
}

/// `Γ(w)` with `dγₖ(w) = c · p · γₖ₋₁(w)`, tensored onto `base`.
fn with_gamma_tower(base: &TabulatedDga, w: i64, c: i64, p: &[&str], top: i64) -> Result<TabulatedDga, LoopError> {
    let tower = divided_powers_algebra("w", w, Grading::Upper, top)?;
    let alg = tensor_product(base, &tower, top)?;
    let p: Vec<usize> = p.iter().map(|s| alg.index_of(s).expect("factor present")).collect();
    let mut d = vec![LinComb::new(); alg.len()];
    for k in 1..=top / w {
        let (Some(g), Some(prev)) = (gamma(&alg, "w", k), gamma(&alg, "w", k - 1)) else { continue };
        let mut factors = p.clone();
        factors.push(prev);
        d[g] = product_of(&alg, &factors).scaled(c);
    }
    Ok(alg.with_differential(d)?)
}

/// Model of the cochains on `LS^{d+1}` through degree `top`:
/// `E(u) ⊗ Γ(w)` with `|u| = d+1`, `|w| = d` for `d` even; for `d` odd
/// `𝕜[u]/u² ⊗ E(v) ⊗ Γ(w)` with `|u| = d+1`, `|v| = d`, `|w| = 2d` and
/// `dγₖ(w) = 2uv·γₖ₋₁(w)`.
pub fn sphere_model(d: i64, top: i64) -> Result<TabulatedDga, LoopError> {
    if d < 1 {
        return Err(LoopError::Invalid(format!("sphere loop degree {d} is below 1")));
    }
    if d % 2 == 0 {
        let u = divided_powers_algebra("u", d + 1, Grading::Upper, top)?;
        let w = divided_powers_algebra("w", d, Grading::Upper, top)?;
        return Ok(tensor_product(&u, &w, top)?);
    }
    let u = truncated_polynomial("u", d + 1, 1, Grading::Upper)?;
    let v = divided_powers_algebra("v", d, Grading::Upper, top)?;
    with_gamma_tower(&tensor_product(&u, &v, top)?, 2 * d, 2, &["u", "v"], top)
}

/// `H^*(LS^{d+1})` through degree `n`.
pub fn sphere_loop_ring(d: i64, ring: CoefficientRing, n: i64) -> Result<HochschildClassTable, LoopError> {
    cdga_cohomology_ring(&sphere_model(d, n + 1)?, ring, n)
}

/// `𝕜[x]/x^{n+1} ⊗ E(sx) ⊗ Γ(sy)` with `|x| = step`, `|sy| = (n+1)·step − 2`
/// and `D̄γᵢ(sy) = (n+1)xⁿ·sx·γᵢ₋₁(sy)`; `step = 2` for `ℂPⁿ`, 4 for `ℍPⁿ`.
pub fn projective_model(n: i64, step: i64, top: i64) -> Result<TabulatedDga, LoopError> {
    if n < 1 || (step != 2 && step != 4) {
        return Err(LoopError::Invalid(format!("projective space of dimension {n} with step {step}")));
    }
    let x = truncated_polynomial("x", step, n, Grading::Upper)?;
    let sx = divided_powers_algebra("sx", step - 1, Grading::Upper, top)?;
    let base = tensor_product(&x, &sx, top)?;
    let xn = if n == 1 { "x".to_string() } else { format!("x^{n}") };
    with_gamma_tower(&base, (n + 1) * step - 2, n + 1, &[&xn, "sx"], top)
}

/// `H^*(LℂPⁿ)` (or `LℍPⁿ` with `step = 4`) through degree `top`.
pub fn cpn_loop_ring(n: i64, step: i64, ring: CoefficientRing, top: i64) -> Result<HochschildClassTable, LoopError> {
    cdga_cohomology_ring(&projective_model(n, step, top + 1)?, ring, top)
}

/// `(ker c, coker c)` of multiplication by `c` on the ground ring.
fn multiplication(ring: CoefficientRing, c: u64) -> (usize, Option<u64>) {
    match ring.characteristic() {
        0 if ring == CoefficientRing::Integers && c > 1 => (0, Some(c)),
        0 => (0, None),
        p if c.is_multiple_of(p) => (1, Some(1)),
        _ => (0, None),
    }
}

fn shape_add(out: &mut [GroupShape], deg: i64, free: usize, torsion: Option<u64>) {
    if let Some(e) = out.get_mut(deg as usize) {
        e.0 += free;
        match torsion {
            Some(1) => e.0 += 1,
            Some(t) => e.1.push(t),
            None => {}
        }
    }
}

/// Module `H^*(LS^{d+1})` from the closed formula: free
/// `E(u)⊗Γ(w)` for `d` even; for `d` odd
/// `𝕜 ⊕ 𝕜v ⊕ u·Γ(w) ⊕ v·Γ⁺(w) ⊕ ₂𝕜·Γ⁺(w) ⊕ 𝕜/2·uv·Γ(w)`.
pub fn sphere_loop_module(d: i64, ring: CoefficientRing, top: i64) -> Vec<GroupShape> {
    let mut out = vec![(0, Vec::new()); top as usize + 1];
    shape_add(&mut out, 0, 1, None);
    if d % 2 == 0 {
        for k in 0..=top / d {
            shape_add(&mut out, k * d, usize::from(k > 0), None);
            shape_add(&mut out, k * d + d + 1, 1, None);
        }
        return out;
    }
    let (ker, coker) = multiplication(ring, 2);
    shape_add(&mut out, d, 1, None);
    for k in 0..=top / (2 * d) {
        let g = 2 * d * k;
        shape_add(&mut out, g + d + 1, 1, None);
        if k > 0 {
            shape_add(&mut out, g + d, 1, None);
            shape_add(&mut out, g, ker, None);
        }
        shape_add(&mut out, g + 2 * d + 1, 0, coker);
    }
    out
}

/// Module `H^*(LℂPⁿ)` from the closed formula:
/// `𝕜[x]/x^{n+1} ⊕ x𝕜[x]/x^{n+1}·Γ⁺(sy) ⊕ ₙ₊₁𝕜·Γ⁺(sy) ⊕ 𝕜[x]/xⁿ·sx·Γ(sy)
/// ⊕ 𝕜/(n+1)·xⁿsx·Γ(sy)`.
pub fn cpn_loop_module(n: i64, step: i64, ring: CoefficientRing, top: i64) -> Vec<GroupShape> {
    let mut out = vec![(0, Vec::new()); top as usize + 1];
    let sy = (n + 1) * step - 2;
    let (ker, coker) = multiplication(ring, (n + 1) as u64);
    for i in 0..=top / sy {
        let g = i * sy;
        for j in 1..=n {
            shape_add(&mut out, g + j * step, 1, None);
        }
        shape_add(&mut out, g, if i == 0 { 1 } else { ker }, None);
        for j in 0..n {
            shape_add(&mut out, g + j * step + step - 1, 1, None);
        }
        shape_add(&mut out, g + n * step + step - 1, 0, coker);
    }
    out
}

/// Free rank and torsion of every degree of a ring table.
pub fn table_shape(t: &HochschildClassTable) -> Vec<GroupShape> {
    (0..=t.max_degree)
        .map(|n| {
            let mut tors: Vec<u64> = t.torsion(n).iter().map(|x| u64::try_from(x).expect("small torsion")).collect();
            tors.sort();
            (t.free_rank(n), tors)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bar::hochschild_cohomology_ring;
    use crate::dg::{cobar, shuffle_diagonal, FreeDga, TabulatedCoalgebra};

    fn sorted(mut v: Vec<GroupShape>) -> Vec<GroupShape> {
        for e in &mut v {
            e.1.sort();
        }
        v
    }

    fn rings() -> [CoefficientRing; 4] {
        [CoefficientRing::Integers, CoefficientRing::Rationals, CoefficientRing::f2(), CoefficientRing::fp(3).unwrap()]
    }

    #[test]
    fn two_sphere_over_integers() {
        let t = sphere_loop_ring(1, CoefficientRing::Integers, 9).unwrap();
        let shape = table_shape(&t);
        assert_eq!(&shape[..3], &[(1, vec![]), (1, vec![]), (1, vec![])]);
        for k in 1..4 {
            assert_eq!(shape[2 * k + 1], (1, vec![2]));
            assert_eq!(shape[2 * k + 2], (1, vec![]));
        }
    }

    #[test]
    fn three_sphere_divided_powers() {
        let t = sphere_loop_ring(2, CoefficientRing::Integers, 8).unwrap();
        let shape = table_shape(&t);
        assert_eq!(shape[1], (0, vec![]));
        assert!((2..=8).all(|n| shape[n] == (1, vec![])));
        let g1 = t.find("γ1(w)").unwrap();
        assert_eq!(g1.0, 2);
        let sq = t.product(2, g1.1, 2, g1.1);
        let g2 = t.find("γ2(w)").unwrap();
        assert_eq!(sq[g2.1], num_rational::BigRational::from_integer(2.into()));
    }

    #[test]
    fn closed_forms_match_models() {
        for ring in rings() {
            for d in 1..=4 {
                let t = sphere_loop_ring(d, ring, 10).unwrap();
                assert_eq!(table_shape(&t), sorted(sphere_loop_module(d, ring, 10)), "S^{} {ring:?}", d + 1);
            }
            for (n, step) in [(1, 2), (2, 2), (3, 2), (1, 4), (2, 4)] {
                let t = cpn_loop_ring(n, step, ring, 12).unwrap();
                assert_eq!(table_shape(&t), sorted(cpn_loop_module(n, step, ring, 12)), "n {n} step {step} {ring:?}");
            }
        }
    }

    #[test]
    fn projective_plane_has_three_torsion() {
        let t = cpn_loop_ring(2, 2, CoefficientRing::Integers, 13).unwrap();
        let shape = table_shape(&t);
        assert_eq!(shape[5], (1, vec![3]));
        for k in [9, 13] {
            assert!(shape[k].1.contains(&3));
        }
    }

    #[test]
    fn projective_line_is_two_sphere() {
        for ring in rings() {
            let a = cpn_loop_ring(1, 2, ring, 9).unwrap();
            let b = sphere_loop_ring(1, ring, 9).unwrap();
            assert_eq!(table_shape(&a), table_shape(&b));
            assert_eq!(a.product_ranks(), b.product_ranks());
        }
    }

    #[test]
    fn spheres_match_hochschild_of_tensor_algebra() {
        for d in 1..=4 {
            let h = shuffle_diagonal(&FreeDga::from_named(&[("v", d)], &[]).unwrap()).unwrap();
            for ring in [CoefficientRing::Integers, CoefficientRing::f2(), CoefficientRing::fp(3).unwrap()] {
                let a = sphere_loop_ring(d, ring, 10).unwrap();
                let b = hochschild_cohomology_ring(&h, ring, 10).unwrap();
                assert_eq!(table_shape(&a), table_shape(&b), "d {d} {ring:?}");
                assert_eq!(a.product_ranks(), b.product_ranks(), "d {d} {ring:?}");
            }
        }
    }

    #[test]
    fn projective_spaces_match_hochschild_of_cobar() {
        for n in 1..=2 {
            let om = cobar(&TabulatedCoalgebra::projective_space(n, 2).unwrap()).unwrap();
            let h = shuffle_diagonal(&om).unwrap();
            for ring in [CoefficientRing::Integers, CoefficientRing::f2(), CoefficientRing::fp(3).unwrap()] {
                let a = cpn_loop_ring(n, 2, ring, 8).unwrap();
                let b = hochschild_cohomology_ring(&h, ring, 8).unwrap();
                assert_eq!(table_shape(&a), table_shape(&b), "n {n} {ring:?}");
                assert_eq!(a.product_ranks(), b.product_ranks(), "n {n} {ring:?}");
            }
        }
    }

    #[test]
    fn two_sphere_products_vanish_when_two_is_invertible() {
        assert!(sphere_loop_ring(1, CoefficientRing::Rationals, 9).unwrap().product_ranks().is_empty());
        assert!(sphere_loop_ring(1, CoefficientRing::fp(3).unwrap(), 9).unwrap().product_ranks().is_empty());
        assert!(!sphere_loop_ring(1, CoefficientRing::f2(), 9).unwrap().product_ranks().is_empty());
    }

    #[test]
    fn projective_plane_splits_in_characteristic_three() {
        let f3 = CoefficientRing::fp(3).unwrap();
        let model = projective_model(2, 2, 13).unwrap();
        let t = cpn_loop_ring(2, 2, f3, 12).unwrap();
        for n in 0..=12 {
            assert_eq!(t.rank(n), model.nonunit_basis(n).len() + usize::from(n == 0));
        }
        assert!(t.is_associative() && t.is_graded_commutative());
    }
}
