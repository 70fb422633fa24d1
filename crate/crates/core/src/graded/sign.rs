/// Sign of a sequence of transpositions of homogeneous symbols: the product
/// of `(-1)^{|a||b|}` over each recorded pair.
pub fn koszul_sign(moved_degrees: &[(i64, i64)]) -> i64 {
    let odd = moved_degrees.iter().filter(|(a, b)| (a * b).rem_euclid(2) == 1).count();
    if odd % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `(-1)^n`
pub fn parity_sign(n: i64) -> i64 {
    if n.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Koszul sign of rearranging symbols of the given degrees so that position
/// `k` of the result holds symbol `order[k]`.
pub fn permutation_sign(degrees: &[i64], order: &[usize]) -> i64 {
    debug_assert_eq!(degrees.len(), order.len());
    let mut odd = 0usize;
    for k in 0..order.len() {
        if degrees[order[k]].rem_euclid(2) == 0 {
            continue;
        }
        for l in k + 1..order.len() {
            if order[k] > order[l] && degrees[order[l]].rem_euclid(2) == 1 {
                odd += 1;
            }
        }
    }
    if odd.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn elementary_moves() {
        assert_eq!(koszul_sign(&[(1, 1)]), -1);
        assert_eq!(koszul_sign(&[(2, 3)]), 1);
        assert_eq!(koszul_sign(&[]), 1);
    }

    #[test]
    fn one_one_shuffle() {
        // [b|a] from a·b with |a| = |b| = 1
        assert_eq!(permutation_sign(&[1, 1], &[1, 0]), -1);
        assert_eq!(permutation_sign(&[1, 2], &[1, 0]), 1);
    }

    proptest! {
        #[test]
        fn multiplicative_under_concatenation(
            a in proptest::collection::vec((0i64..5, 0i64..5), 0..6),
            b in proptest::collection::vec((0i64..5, 0i64..5), 0..6),
        ) {
            let mut ab = a.clone();
            ab.extend(b.iter().copied());
            prop_assert_eq!(koszul_sign(&ab), koszul_sign(&a) * koszul_sign(&b));
        }

        #[test]
        fn permutation_sign_composes(degs in proptest::collection::vec(0i64..4, 1..6), seed in any::<u64>()) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let n = degs.len();
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut p: Vec<usize> = (0..n).collect();
            p.shuffle(&mut rng);
            let mut q: Vec<usize> = (0..n).collect();
            q.shuffle(&mut rng);
            let permuted: Vec<i64> = p.iter().map(|&i| degs[i]).collect();
            let composite: Vec<usize> = q.iter().map(|&k| p[k]).collect();
            prop_assert_eq!(
                permutation_sign(&degs, &composite),
                permutation_sign(&degs, &p) * permutation_sign(&permuted, &q)
            );
        }
    }
}
