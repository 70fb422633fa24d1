//! Exhaustive law checks shared by the integration tests and the
//! acceptance report.
#![allow(dead_code)]

use hochschild::bar::{alexander_whitney, alexander_whitney_map, cyclic_bar, cyclic_diagonal, CycKey};
use hochschild::dg::{shuffle_product, step_path_product, AugmentedDga, HopfData, TabulatedDga, TensorAlgebra};
use hochschild::linalg::CoefficientRing;
use hochschild::lincomb::LinComb;

/// All words of total degree at most `n` on letters `0..degrees.len()`.
pub fn words_through(degrees: &[i64], n: i64) -> Vec<Vec<usize>> {
    let mut table: Vec<Vec<Vec<usize>>> = vec![vec![vec![]]];
    for m in 1..=n {
        let mut ws = Vec::new();
        for (x, &d) in degrees.iter().enumerate() {
            if d <= m {
                for tail in &table[(m - d) as usize] {
                    let mut w = vec![x];
                    w.extend_from_slice(tail);
                    ws.push(w);
                }
            }
        }
        table.push(ws);
    }
    table.into_iter().flatten().collect()
}

fn weight(degrees: &[i64], w: &[usize]) -> i64 {
    w.iter().map(|&l| degrees[l]).sum()
}

/// Products of words: unit, associativity and (optionally) graded
/// commutativity, on all words through degree `n`.
fn check_word_product(
    degrees: &[i64],
    n: i64,
    commutative: bool,
    product: impl Fn(&[usize], &[usize]) -> LinComb<Vec<usize>>,
) -> Result<usize, String> {
    let words = words_through(degrees, n);
    let mut checked = 0;
    for x in &words {
        if product(&[], x) != LinComb::single(x.clone(), 1) || product(x, &[]) != LinComb::single(x.clone(), 1) {
            return Err(format!("unit fails on {x:?}"));
        }
    }
    for x in &words {
        for y in &words {
            let wxy = weight(degrees, x) + weight(degrees, y);
            if wxy > n {
                continue;
            }
            let xy = product(x, y);
            if commutative {
                let sign = if weight(degrees, x) * weight(degrees, y) % 2 == 0 { 1 } else { -1 };
                if xy != product(y, x).scaled(sign) {
                    return Err(format!("commutativity fails on {x:?}, {y:?}"));
                }
            }
            for z in &words {
                if wxy + weight(degrees, z) > n {
                    continue;
                }
                let left = xy.apply(|w| product(w, z));
                let right = product(y, z).apply(|w| product(x, w));
                if left != right {
                    return Err(format!("associativity fails on {x:?}, {y:?}, {z:?}"));
                }
                checked += 1;
            }
        }
    }
    Ok(checked)
}

/// Shuffle product on an alphabet of the given degrees.
pub fn check_shuffle_laws(degrees: &[i64], n: i64) -> Result<usize, String> {
    check_word_product(degrees, n, true, |x, y| shuffle_product(x, y, |&l| degrees[l]))
}

/// Step-path product over a tabulated algebra; commutativity is checked
/// when the algebra is commutative.
pub fn check_step_path_laws(a: &TabulatedDga, n: i64) -> Result<usize, String> {
    let degrees: Vec<i64> = (0..a.len()).map(|i| if i == 0 { 0 } else { a.degree(i) }).collect();
    let letters: Vec<i64> = degrees[1..].to_vec();
    check_word_product(&letters, n, a.is_commutative(), |x, y| {
        let x: Vec<usize> = x.iter().map(|l| l + 1).collect();
        let y: Vec<usize> = y.iter().map(|l| l + 1).collect();
        step_path_product(&x, &y, |&l| degrees[l], |&p, &q| a.mul(p, q))
            .map_keys(|w| w.iter().map(|l| l - 1).collect())
    })
}

type Triple<A, B, C> = (CycKey<A>, CycKey<B>, CycKey<C>);

/// `(AW ⊗ 1) ∘ AW = (1 ⊗ AW) ∘ AW` on `C(A⊗B⊗C)` through degree `n`.
pub fn check_aw_associativity<A: AugmentedDga, B: AugmentedDga, C: AugmentedDga>(
    a: &A,
    b: &B,
    c: &C,
    n: i64,
) -> Result<usize, String> {
    let ab = TensorAlgebra::new(a, b);
    let bc = TensorAlgebra::new(b, c);
    let abc = TensorAlgebra::new(&ab, c);
    let complex = cyclic_bar(&abc, CoefficientRing::Integers, n).map_err(|e| e.to_string())?;
    let mut checked = 0;
    for m in 0..=n {
        for key in complex.basis.keys(m) {
            let mut left: LinComb<Triple<A::Elem, B::Elem, C::Elem>> = LinComb::new();
            for ((x, z), e) in alexander_whitney(&ab, c, key).iter() {
                for ((u, v), f) in alexander_whitney(a, b, x).iter() {
                    left.add_term((u.clone(), v.clone(), z.clone()), e * f);
                }
            }
            let flipped = CycKey {
                a: (key.a.0 .0.clone(), (key.a.0 .1.clone(), key.a.1.clone())),
                spine: key.spine.iter().map(|((p, q), r)| (p.clone(), (q.clone(), r.clone()))).collect(),
            };
            let mut right = LinComb::new();
            for ((u, y), e) in alexander_whitney(a, &bc, &flipped).iter() {
                for ((v, z), f) in alexander_whitney(b, c, y).iter() {
                    right.add_term((u.clone(), v.clone(), z.clone()), e * f);
                }
            }
            if left != right {
                return Err(format!("AW is not associative in degree {m}"));
            }
            checked += 1;
        }
    }
    Ok(checked)
}

/// `d ∘ AW = AW ∘ d` through degree `n`.
pub fn check_aw_chain_map<A: AugmentedDga, B: AugmentedDga>(a: &A, b: &B, n: i64) -> Result<(), String> {
    let m = alexander_whitney_map(a, b, CoefficientRing::Integers, n).map_err(|e| e.to_string())?;
    m.map.check_chain_map(&m.source.complex, &m.target).map_err(|e| e.to_string())
}

/// Coassociativity of the cyclic diagonal of a Hopf algebra.
pub fn check_diagonal_coassociative(h: &HopfData, n: i64) -> Result<usize, String> {
    let complex = cyclic_bar(h.algebra(), CoefficientRing::Integers, n).map_err(|e| e.to_string())?;
    let mut checked = 0;
    for m in 0..=n {
        for key in complex.basis.keys(m) {
            let mut left = LinComb::new();
            let mut right = LinComb::new();
            for ((x, y), e) in cyclic_diagonal(h, key).iter() {
                for ((u, v), f) in cyclic_diagonal(h, x).iter() {
                    left.add_term((u.clone(), v.clone(), y.clone()), e * f);
                }
                for ((u, v), f) in cyclic_diagonal(h, y).iter() {
                    right.add_term((x.clone(), u.clone(), v.clone()), e * f);
                }
            }
            if left != right {
                return Err(format!("cyclic diagonal is not coassociative in degree {m}"));
            }
            checked += 1;
        }
    }
    Ok(checked)
}
