use crate::graded::parity_sign;
use crate::lincomb::LinComb;

/// A word in the generators of a tensor algebra, stored as generator indices.
/// The empty word is the unit.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<u16>);

impl Word {
    pub fn unit() -> Self {
        Word(Vec::new())
    }

    pub fn letter(g: usize) -> Self {
        Word(vec![g as u16])
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&l| l as usize)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn slice(&self, from: usize, to: usize) -> Word {
        Word(self.0[from..to].to_vec())
    }
}

fn suffix_degrees<L>(a: &[L], deg: &impl Fn(&L) -> i64) -> Vec<i64> {
    let mut s = vec![0i64; a.len() + 1];
    for i in (0..a.len()).rev() {
        s[i] = s[i + 1] + deg(&a[i]);
    }
    s
}

/// Shuffle product `[a₁|…|a_p]·[b₁|…|b_q]`: the signed sum over
/// `(p,q)`-shuffles with Koszul signs computed from `deg`.
pub fn shuffle_product<L: Clone + Ord>(a: &[L], b: &[L], deg: impl Fn(&L) -> i64) -> LinComb<Vec<L>> {
    step_paths(a, b, &deg, None::<&fn(&L, &L) -> LinComb<L>>)
}

/// Product on the tensor coalgebra of an algebra: a sum over lattice paths
/// from `(0,0)` to `(p,q)` with right, up and diagonal steps, where a
/// diagonal step inserts `μ(a_x ⊗ b_y)`. Signs follow the Koszul rule for
/// interleaving the `a`s and `b`s.
pub fn step_path_product<L: Clone + Ord>(
    a: &[L],
    b: &[L],
    deg: impl Fn(&L) -> i64,
    mul: impl Fn(&L, &L) -> LinComb<L>,
) -> LinComb<Vec<L>> {
    step_paths(a, b, &deg, Some(&mul))
}

fn step_paths<L: Clone + Ord, M: Fn(&L, &L) -> LinComb<L>>(
    a: &[L],
    b: &[L],
    deg: &impl Fn(&L) -> i64,
    mul: Option<&M>,
) -> LinComb<Vec<L>> {
    let tail = suffix_degrees(a, deg);
    let mut out = LinComb::new();
    // (x, y, signed partial words)
    let mut stack: Vec<(usize, usize, LinComb<Vec<L>>)> = vec![(0, 0, LinComb::single(Vec::new(), 1))];
    while let Some((x, y, partial)) = stack.pop() {
        if partial.is_zero() {
            continue;
        }
        if x == a.len() && y == b.len() {
            out.add_scaled(&partial, 1);
            continue;
        }
        if x < a.len() {
            let next = partial.map_keys(|w| {
                let mut w = w.clone();
                w.push(a[x].clone());
                w
            });
            stack.push((x + 1, y, next));
        }
        if y < b.len() {
            let s = parity_sign(deg(&b[y]) * tail[x]);
            let next = partial
                .map_keys(|w| {
                    let mut w = w.clone();
                    w.push(b[y].clone());
                    w
                })
                .scaled(s);
            stack.push((x, y + 1, next));
        }
        if let Some(mul) = mul {
            if x < a.len() && y < b.len() {
                let s = parity_sign(deg(&b[y]) * tail[x + 1]);
                let prod = mul(&a[x], &b[y]);
                let next = partial.apply(|w| {
                    prod.map_keys(|c| {
                        let mut w = w.clone();
                        w.push(c.clone());
                        w
                    })
                });
                stack.push((x + 1, y + 1, next.scaled(s)));
            }
        }
    }
    out
}

/// Number of lattice paths with right, up and diagonal steps to `(p,q)`.
pub fn delannoy(p: usize, q: usize) -> u64 {
    let mut t = vec![vec![0u64; q + 1]; p + 1];
    for i in 0..=p {
        for j in 0..=q {
            t[i][j] = if i == 0 || j == 0 { 1 } else { t[i - 1][j] + t[i][j - 1] + t[i - 1][j - 1] };
        }
    }
    t[p][q]
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn deg(l: &(char, i64)) -> i64 {
        l.1
    }

    #[test]
    fn unit_is_neutral() {
        let w = vec![('a', 1), ('b', 2)];
        assert_eq!(shuffle_product(&[], &w, deg), LinComb::single(w.clone(), 1));
        assert_eq!(shuffle_product(&w, &[], deg), LinComb::single(w, 1));
    }

    #[test]
    fn two_letters() {
        let a = ('a', 1);
        let b = ('b', 3);
        let p = shuffle_product(&[a], &[b], deg);
        assert_eq!(p.coeff(&vec![a, b]), 1);
        assert_eq!(p.coeff(&vec![b, a]), -1);
    }

    #[test]
    fn two_one_even() {
        let (a, b, c) = (('a', 2), ('b', 2), ('c', 4));
        let p = shuffle_product(&[a, b], &[c], deg);
        assert_eq!(p.len(), 3);
        for w in [vec![a, b, c], vec![a, c, b], vec![c, a, b]] {
            assert_eq!(p.coeff(&w), 1);
        }
    }

    #[test]
    fn step_paths_with_product() {
        let (a, b) = (('a', 2), ('b', 2));
        let mul = |x: &(char, i64), y: &(char, i64)| LinComb::single(('m', x.1 + y.1), 1);
        let p = step_path_product(&[a], &[b], deg, mul);
        assert_eq!(p.len(), 3);
        assert_eq!(p.coeff(&vec![('m', 4)]), 1);
        assert_eq!(delannoy(1, 1), 3);
        assert_eq!(delannoy(2, 1), 5);
    }

    #[test]
    fn trivial_product_gives_shuffle() {
        let w1 = vec![('a', 1), ('b', 2)];
        let w2 = vec![('c', 3), ('d', 1)];
        let p = step_path_product(&w1, &w2, deg, |_, _| LinComb::new());
        assert_eq!(p, shuffle_product(&w1, &w2, deg));
    }

    fn letters() -> impl Strategy<Value = Vec<(char, i64)>> {
        proptest::collection::vec((prop::sample::select(vec!['a', 'b', 'c']), 1i64..4), 0..4)
    }

    proptest! {
        #[test]
        fn shuffle_graded_commutative(a in letters(), b in letters()) {
            let da: i64 = a.iter().map(|l| l.1).sum();
            let db: i64 = b.iter().map(|l| l.1).sum();
            prop_assert_eq!(
                shuffle_product(&a, &b, deg),
                shuffle_product(&b, &a, deg).scaled(parity_sign(da * db))
            );
        }

        #[test]
        fn shuffle_associative(a in letters(), b in letters(), c in letters()) {
            let left = shuffle_product(&a, &b, deg).apply(|w| shuffle_product(w, &c, deg));
            let right = shuffle_product(&b, &c, deg).apply(|w| shuffle_product(&a, w, deg));
            prop_assert_eq!(left, right);
        }
    }
}
