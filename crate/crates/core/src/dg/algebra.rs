use std::fmt::Debug;
use std::hash::Hash;

use super::free::FreeDga;
use super::tabulated::TabulatedDga;
use super::word::Word;
use crate::graded::{parity_sign, Grading};
use crate::lincomb::LinComb;

/// An augmented DGA with a distinguished homogeneous basis, as consumed by
/// the bar constructions. The unit spans degree 0; every other basis element
/// lies in the augmentation ideal.
pub trait AugmentedDga {
    type Elem: Clone + Eq + Ord + Hash + Debug;

    fn grading(&self) -> Grading;
    fn degree(&self, a: &Self::Elem) -> i64;
    fn unit(&self) -> Self::Elem;
    fn is_unit(&self, a: &Self::Elem) -> bool;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> LinComb<Self::Elem>;
    fn d(&self, a: &Self::Elem) -> LinComb<Self::Elem>;
    /// Basis of the augmentation ideal in degree `n`.
    fn augmentation_basis(&self, n: i64) -> Vec<Self::Elem>;
    fn name(&self, a: &Self::Elem) -> String;

    fn mul_comb(&self, x: &LinComb<Self::Elem>, y: &LinComb<Self::Elem>) -> LinComb<Self::Elem> {
        let mut out = LinComb::new();
        for (a, c) in x.iter() {
            for (b, e) in y.iter() {
                out.add_scaled(&self.mul(a, b), c * e);
            }
        }
        out
    }
}

impl AugmentedDga for FreeDga {
    type Elem = Word;

    fn grading(&self) -> Grading {
        Grading::Lower
    }

    fn degree(&self, a: &Word) -> i64 {
        self.word_degree(a)
    }

    fn unit(&self) -> Word {
        Word::unit()
    }

    fn is_unit(&self, a: &Word) -> bool {
        a.is_unit()
    }

    fn mul(&self, a: &Word, b: &Word) -> LinComb<Word> {
        LinComb::single(a.concat(b), 1)
    }

    fn d(&self, a: &Word) -> LinComb<Word> {
        self.d_word(a)
    }

    fn augmentation_basis(&self, n: i64) -> Vec<Word> {
        if n < 1 {
            return Vec::new();
        }
        self.words(n)
    }

    fn name(&self, a: &Word) -> String {
        self.word_name(a)
    }
}

impl AugmentedDga for TabulatedDga {
    type Elem = usize;

    fn grading(&self) -> Grading {
        TabulatedDga::grading(self)
    }

    fn degree(&self, a: &usize) -> i64 {
        TabulatedDga::degree(self, *a)
    }

    fn unit(&self) -> usize {
        0
    }

    fn is_unit(&self, a: &usize) -> bool {
        *a == 0
    }

    fn mul(&self, a: &usize, b: &usize) -> LinComb<usize> {
        TabulatedDga::mul(self, *a, *b)
    }

    fn d(&self, a: &usize) -> LinComb<usize> {
        self.d_basis(*a).clone()
    }

    fn augmentation_basis(&self, n: i64) -> Vec<usize> {
        self.nonunit_basis(n)
    }

    fn name(&self, a: &usize) -> String {
        TabulatedDga::name(self, *a).to_string()
    }
}

/// `A ⊗ B` with `(a⊗b)(a'⊗b') = (−1)^{|b||a'|} aa'⊗bb'` and
/// `d(a⊗b) = da⊗b + (−1)^{|a|} a⊗db`.
#[derive(Clone, Debug)]
pub struct TensorAlgebra<'a, A, B> {
    pub left: &'a A,
    pub right: &'a B,
}

impl<'a, A: AugmentedDga, B: AugmentedDga> TensorAlgebra<'a, A, B> {
    pub fn new(left: &'a A, right: &'a B) -> Self {
        assert_eq!(left.grading(), right.grading(), "tensor factors use different gradings");
        TensorAlgebra { left, right }
    }
}

impl<A: AugmentedDga, B: AugmentedDga> AugmentedDga for TensorAlgebra<'_, A, B> {
    type Elem = (A::Elem, B::Elem);

    fn grading(&self) -> Grading {
        self.left.grading()
    }

    fn degree(&self, x: &Self::Elem) -> i64 {
        self.left.degree(&x.0) + self.right.degree(&x.1)
    }

    fn unit(&self) -> Self::Elem {
        (self.left.unit(), self.right.unit())
    }

    fn is_unit(&self, x: &Self::Elem) -> bool {
        self.left.is_unit(&x.0) && self.right.is_unit(&x.1)
    }

    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> LinComb<Self::Elem> {
        let sign = parity_sign(self.right.degree(&x.1) * self.left.degree(&y.0));
        let l = self.left.mul(&x.0, &y.0);
        let r = self.right.mul(&x.1, &y.1);
        let mut out = LinComb::new();
        for (a, c) in l.iter() {
            for (b, e) in r.iter() {
                out.add_term((a.clone(), b.clone()), sign * c * e);
            }
        }
        out
    }

    fn d(&self, x: &Self::Elem) -> LinComb<Self::Elem> {
        let mut out: LinComb<Self::Elem> = self.left.d(&x.0).map_keys(|a| (a.clone(), x.1.clone()));
        let sign = parity_sign(self.left.degree(&x.0));
        out.add_scaled(&self.right.d(&x.1).map_keys(|b| (x.0.clone(), b.clone())), sign);
        out
    }

    fn augmentation_basis(&self, n: i64) -> Vec<Self::Elem> {
        let mut out = Vec::new();
        for p in 0..=n {
            let lefts = if p == 0 { vec![self.left.unit()] } else { self.left.augmentation_basis(p) };
            let rights = if p == n { vec![self.right.unit()] } else { self.right.augmentation_basis(n - p) };
            for a in &lefts {
                for b in &rights {
                    if !(self.left.is_unit(a) && self.right.is_unit(b)) {
                        out.push((a.clone(), b.clone()));
                    }
                }
            }
        }
        out
    }

    fn name(&self, x: &Self::Elem) -> String {
        format!("{}⊗{}", self.left.name(&x.0), self.right.name(&x.1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tensor_square_of_odd_generator() {
        let a = FreeDga::from_named(&[("v", 1)], &[]).unwrap();
        let t = TensorAlgebra::new(&a, &a);
        let v = Word::letter(0);
        let one = Word::unit();
        // (1⊗v)(v⊗1) = −v⊗v, (v⊗1)(1⊗v) = v⊗v
        assert_eq!(t.mul(&(one.clone(), v.clone()), &(v.clone(), one.clone())).coeff(&(v.clone(), v.clone())), -1);
        assert_eq!(t.mul(&(v.clone(), one.clone()), &(one.clone(), v.clone())).coeff(&(v.clone(), v.clone())), 1);
        assert_eq!(t.augmentation_basis(1).len(), 2);
        assert_eq!(t.augmentation_basis(2).len(), 3);
    }

    #[test]
    fn tensor_leibniz() {
        let a = FreeDga::from_named(&[("x", 1), ("y", 3)], &[("y", vec![(1, vec!["x", "x"])])]).unwrap();
        let t = TensorAlgebra::new(&a, &a);
        for n in 1..=4 {
            for p in t.augmentation_basis(n) {
                for m in 1..=4 - n {
                    for q in t.augmentation_basis(m) {
                        let lhs = t.mul(&p, &q).apply(|z| t.d(z));
                        let mut rhs = t.d(&p).apply(|z| t.mul(z, &q));
                        rhs.add_scaled(&t.d(&q).apply(|z| t.mul(&p, z)), parity_sign(t.degree(&p)));
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }
}
