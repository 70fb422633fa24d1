use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::binomial;

use super::DgError;
use crate::graded::{parity_sign, Grading};
use crate::linalg::{bigint_to_i64, CoefficientRing};
use crate::lincomb::LinComb;

/// A finite-dimensional (or truncated) augmented DGA given by a basis, its
/// structure constants and its differential. Index 0 is the unit. Products
/// landing above `max_degree` are dropped, which is the quotient by an ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TabulatedDga {
    grading: Grading,
    max_degree: i64,
    names: Vec<String>,
    degrees: Vec<i64>,
    products: HashMap<(usize, usize), LinComb<usize>>,
    differential: Vec<LinComb<usize>>,
    commutative: bool,
}

/// Incremental construction of a [`TabulatedDga`].
#[derive(Clone, Debug)]
pub struct TabulatedDgaBuilder {
    inner: TabulatedDga,
}

impl TabulatedDgaBuilder {
    pub fn new(grading: Grading, max_degree: i64) -> Self {
        TabulatedDgaBuilder {
            inner: TabulatedDga {
                grading,
                max_degree,
                names: vec!["1".into()],
                degrees: vec![0],
                products: HashMap::new(),
                differential: vec![LinComb::new()],
                commutative: false,
            },
        }
    }

    /// Adds a basis element of the augmentation ideal.
    pub fn element(&mut self, name: impl Into<String>, degree: i64) -> usize {
        self.inner.names.push(name.into());
        self.inner.degrees.push(degree);
        self.inner.differential.push(LinComb::new());
        self.inner.names.len() - 1
    }

    pub fn product(&mut self, a: usize, b: usize, value: LinComb<usize>) -> &mut Self {
        if value.is_zero() {
            self.inner.products.remove(&(a, b));
        } else {
            self.inner.products.insert((a, b), value);
        }
        self
    }

    pub fn differential(&mut self, a: usize, value: LinComb<usize>) -> &mut Self {
        self.inner.differential[a] = value;
        self
    }

    pub fn degree(&self, a: usize) -> i64 {
        self.inner.degrees[a]
    }

    pub fn len(&self) -> usize {
        self.inner.names.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn build(&self, commutative: bool) -> Result<TabulatedDga, DgError> {
        let mut a = self.inner.clone();
        a.commutative = commutative;
        a.validate()?;
        Ok(a)
    }
}

impl TabulatedDga {
    fn validate(&self) -> Result<(), DgError> {
        let n = self.names.len();
        let mut seen = HashMap::new();
        for (i, name) in self.names.iter().enumerate() {
            if seen.insert(name.clone(), i).is_some() {
                return Err(DgError::DuplicateGenerator(name.clone()));
            }
            if i > 0 && self.degrees[i] < 1 {
                return Err(DgError::ConnectivityViolation(format!("{name} has degree {}", self.degrees[i])));
            }
            if self.degrees[i] > self.max_degree {
                return Err(DgError::Malformed(format!("{name} lies above the truncation")));
            }
        }
        for (&(a, b), v) in &self.products {
            if a == 0 || b == 0 || a >= n || b >= n {
                return Err(DgError::Malformed("products are tabulated on the augmentation ideal only".into()));
            }
            for (&c, _) in v.iter() {
                let want = self.degrees[a] + self.degrees[b];
                if c == 0 || c >= n || self.degrees[c] != want {
                    return Err(DgError::DegreeMismatch {
                        what: format!("{}·{}", self.names[a], self.names[b]),
                        expected: want,
                        found: self.degrees.get(c).copied().unwrap_or(-1),
                    });
                }
            }
        }
        let dir = self.grading.direction();
        for a in 0..n {
            for (&c, _) in self.differential[a].iter() {
                if c == 0 || c >= n || self.degrees[c] != self.degrees[a] + dir {
                    return Err(DgError::DegreeMismatch {
                        what: format!("d({})", self.names[a]),
                        expected: self.degrees[a] + dir,
                        found: self.degrees.get(c).copied().unwrap_or(-1),
                    });
                }
            }
            if a == 0 && !self.differential[0].is_zero() {
                return Err(DgError::Malformed("the unit must be a cycle".into()));
            }
        }
        for a in 1..n {
            if !self.d(&self.differential[a]).is_zero() {
                return Err(DgError::NotSquareZero(self.names[a].clone()));
            }
        }
        let top = self.max_degree;
        for a in 1..n {
            for b in 1..n {
                if self.degrees[a] + self.degrees[b] > top {
                    continue;
                }
                let ab = self.mul(a, b);
                // Leibniz: d(ab) = (da)b + (−1)^{|a|} a(db)
                if self.degrees[a] + self.degrees[b] + dir <= top {
                    let lhs = self.d(&ab);
                    let mut rhs = self.differential[a].apply(|x| self.mul(*x, b));
                    rhs.add_scaled(
                        &self.differential[b].apply(|y| self.mul(a, *y)),
                        parity_sign(self.degrees[a]),
                    );
                    if lhs != rhs {
                        return Err(DgError::LeibnizFails(format!("{}, {}", self.names[a], self.names[b])));
                    }
                }
                if self.commutative {
                    let ba = self.mul(b, a).scaled(parity_sign(self.degrees[a] * self.degrees[b]));
                    if ab != ba || (a == b && self.degrees[a] % 2 != 0 && !ab.is_zero()) {
                        return Err(DgError::NotCommutative(format!("{}, {}", self.names[a], self.names[b])));
                    }
                }
                for c in 1..n {
                    if self.degrees[a] + self.degrees[b] + self.degrees[c] > top {
                        continue;
                    }
                    let left = ab.apply(|x| self.mul(*x, c));
                    let right = self.mul(b, c).apply(|y| self.mul(a, *y));
                    if left != right {
                        return Err(DgError::NotAssociative(format!(
                            "{}, {}, {}",
                            self.names[a], self.names[b], self.names[c]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn grading(&self) -> Grading {
        self.grading
    }

    pub fn max_degree(&self) -> i64 {
        self.max_degree
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn degree(&self, a: usize) -> i64 {
        self.degrees[a]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Basis elements of the augmentation ideal in degree `n`.
    pub fn nonunit_basis(&self, n: i64) -> Vec<usize> {
        (1..self.names.len()).filter(|&i| self.degrees[i] == n).collect()
    }

    pub fn mul(&self, a: usize, b: usize) -> LinComb<usize> {
        if a == 0 {
            return LinComb::single(b, 1);
        }
        if b == 0 {
            return LinComb::single(a, 1);
        }
        self.products.get(&(a, b)).cloned().unwrap_or_default()
    }

    /// Product with coefficients reduced into `ring`'s prime field, if any.
    pub fn mul_in(&self, ring: CoefficientRing, a: usize, b: usize) -> LinComb<usize> {
        self.mul(a, b).reduced(ring.characteristic() as i64)
    }

    pub fn d_basis(&self, a: usize) -> &LinComb<usize> {
        &self.differential[a]
    }

    pub fn d(&self, x: &LinComb<usize>) -> LinComb<usize> {
        x.apply(|a| self.differential[*a].clone())
    }

    /// Whether the product of any two augmentation-ideal elements vanishes.
    pub fn has_trivial_product(&self) -> bool {
        self.products.is_empty()
    }

    /// The same algebra with a new differential, revalidated.
    pub fn with_differential(&self, differential: Vec<LinComb<usize>>) -> Result<TabulatedDga, DgError> {
        let mut a = self.clone();
        a.differential = differential;
        a.validate()?;
        Ok(a)
    }

    /// The predual coalgebra of a cochain algebra: `Δ̄(c^∨)` contains
    /// `(−1)^{|a||b|} k · a^∨⊗b^∨` when `ab = k·c`, so that
    /// [`TabulatedCoalgebra::dual`] returns this algebra.
    pub fn dual_coalgebra(&self) -> Result<TabulatedCoalgebra, DgError> {
        if self.grading != Grading::Upper {
            return Err(DgError::Malformed("only cochain algebras have a predual coalgebra here".into()));
        }
        let n = self.len();
        let elements = (1..n).map(|a| (predual_name(&self.names[a]), self.degrees[a])).collect();
        let mut reduced = vec![LinComb::new(); n - 1];
        let mut differential = vec![LinComb::new(); n - 1];
        for (&(a, b), v) in &self.products {
            for (&c, k) in v.iter() {
                reduced[c - 1].add_term((a, b), k * parity_sign(self.degrees[a] * self.degrees[b]));
            }
        }
        for a in 1..n {
            for (&b, k) in self.differential[a].iter() {
                differential[b - 1].add_term(a, k * parity_sign(self.degrees[a]));
            }
        }
        TabulatedCoalgebra::new(elements, reduced, differential)
    }

    /// The same module with the product of the augmentation ideal set to zero.
    pub fn with_trivial_product(&self) -> TabulatedDga {
        let mut a = self.clone();
        a.products.clear();
        a
    }
}

/// `Γ(v)` truncated at degree `n` for even `|v|`, the exterior algebra `E(v)`
/// for odd `|v|`. Basis `γᵢ(v)` with `γᵢγⱼ = (i+j choose i) γ_{i+j}`.
pub fn divided_powers_algebra(name: &str, degree: i64, grading: Grading, n: i64) -> Result<TabulatedDga, DgError> {
    if degree < 1 {
        return Err(DgError::ConnectivityViolation(format!("{name} has degree {degree}")));
    }
    let mut b = TabulatedDgaBuilder::new(grading, n);
    if degree % 2 != 0 {
        if degree <= n {
            b.element(name, degree);
        }
        return b.build(true);
    }
    let top = n / degree;
    let idx: Vec<usize> = (1..=top).map(|i| b.element(format!("γ{i}({name})"), i * degree)).collect();
    for i in 1..=top {
        for j in 1..=top - i {
            let c = bigint_to_i64(&binomial(BigInt::from(i + j), BigInt::from(i)));
            b.product(idx[(i - 1) as usize], idx[(j - 1) as usize], LinComb::single(idx[(i + j - 1) as usize], c));
        }
    }
    b.build(true)
}

/// `𝕜[x]/x^{n+1}` with `|x| = degree`, graded commutative when `degree` is even.
pub fn truncated_polynomial(name: &str, degree: i64, n: i64, grading: Grading) -> Result<TabulatedDga, DgError> {
    let mut b = TabulatedDgaBuilder::new(grading, degree * n);
    let idx: Vec<usize> =
        (1..=n).map(|i| b.element(if i == 1 { name.to_string() } else { format!("{name}^{i}") }, i * degree)).collect();
    for i in 1..=n {
        for j in 1..=n - i {
            b.product(idx[(i - 1) as usize], idx[(j - 1) as usize], LinComb::single(idx[(i + j - 1) as usize], 1));
        }
    }
    b.build(degree % 2 == 0)
}

/// Graded tensor product with `(a⊗b)(a'⊗b') = (−1)^{|b||a'|} aa'⊗bb'` and
/// the tensorized differential, truncated at `max_degree`.
pub fn tensor_product(a: &TabulatedDga, b: &TabulatedDga, max_degree: i64) -> Result<TabulatedDga, DgError> {
    if a.grading() != b.grading() {
        return Err(DgError::Malformed("tensor factors use different gradings".into()));
    }
    let mut builder = TabulatedDgaBuilder::new(a.grading(), max_degree);
    let mut index: HashMap<(usize, usize), usize> = HashMap::new();
    index.insert((0, 0), 0);
    for i in 0..a.len() {
        for j in 0..b.len() {
            if (i, j) == (0, 0) || a.degree(i) + b.degree(j) > max_degree {
                continue;
            }
            let name = match (i, j) {
                (_, 0) => a.name(i).to_string(),
                (0, _) => b.name(j).to_string(),
                _ => format!("{}{}", a.name(i), b.name(j)),
            };
            index.insert((i, j), builder.element(name, a.degree(i) + b.degree(j)));
        }
    }
    let pairs: Vec<((usize, usize), usize)> = index.iter().map(|(&k, &v)| (k, v)).collect();
    let embed = |x: &LinComb<(usize, usize)>| -> LinComb<usize> {
        x.iter().filter_map(|(k, c)| index.get(k).map(|&t| (t, c))).collect()
    };
    for &((i, j), s) in &pairs {
        let mut d = LinComb::new();
        for (x, c) in a.d_basis(i).iter() {
            d.add_term((*x, j), c);
        }
        for (y, c) in b.d_basis(j).iter() {
            d.add_term((i, *y), c * parity_sign(a.degree(i)));
        }
        builder.differential(s, embed(&d));
        for &((k, l), t) in &pairs {
            if s == 0 || t == 0 {
                continue;
            }
            let sign = parity_sign(b.degree(j) * a.degree(k));
            let mut p = LinComb::new();
            for (x, c1) in a.mul(i, k).iter() {
                for (y, c2) in b.mul(j, l).iter() {
                    p.add_term((*x, *y), sign * c1 * c2);
                }
            }
            builder.product(s, t, embed(&p));
        }
    }
    builder.build(a.is_commutative() && b.is_commutative())
}

/// A coaugmented DG coalgebra given by a basis, the reduced diagonal and the
/// differential. Index 0 is the coaugmentation `1`; lower grading.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TabulatedCoalgebra {
    names: Vec<String>,
    degrees: Vec<i64>,
    reduced: Vec<LinComb<(usize, usize)>>,
    differential: Vec<LinComb<usize>>,
}

impl TabulatedCoalgebra {
    /// `elements` lists the reduced part; `reduced` gives `Δ̄` by element
    /// index (1-based, matching the returned basis).
    pub fn new(
        elements: Vec<(String, i64)>,
        reduced: Vec<LinComb<(usize, usize)>>,
        differential: Vec<LinComb<usize>>,
    ) -> Result<Self, DgError> {
        let n = elements.len() + 1;
        let mut names = vec!["1".to_string()];
        let mut degrees = vec![0];
        for (name, d) in elements {
            if d < 1 {
                return Err(DgError::ConnectivityViolation(format!("{name} has degree {d}")));
            }
            names.push(name);
            degrees.push(d);
        }
        let mut red = vec![LinComb::new()];
        red.extend(reduced);
        let mut diff = vec![LinComb::new()];
        diff.extend(differential);
        if red.len() != n || diff.len() != n {
            return Err(DgError::Malformed("one diagonal and one differential per element".into()));
        }
        let c = TabulatedCoalgebra { names, degrees, reduced: red, differential: diff };
        c.validate()?;
        Ok(c)
    }

    fn validate(&self) -> Result<(), DgError> {
        let n = self.names.len();
        for c in 1..n {
            for (&(x, y), _) in self.reduced[c].iter() {
                if x == 0 || y == 0 || x >= n || y >= n || self.degrees[x] + self.degrees[y] != self.degrees[c] {
                    return Err(DgError::DegreeMismatch {
                        what: format!("Δ̄({})", self.names[c]),
                        expected: self.degrees[c],
                        found: -1,
                    });
                }
            }
            for (&x, _) in self.differential[c].iter() {
                if x == 0 || x >= n || self.degrees[x] != self.degrees[c] - 1 {
                    return Err(DgError::DegreeMismatch {
                        what: format!("d({})", self.names[c]),
                        expected: self.degrees[c] - 1,
                        found: -1,
                    });
                }
            }
            let dd = self.differential[c].apply(|x| self.differential[*x].clone());
            if !dd.is_zero() {
                return Err(DgError::NotSquareZero(self.names[c].clone()));
            }
            // (Δ̄⊗1)Δ̄ = (1⊗Δ̄)Δ̄
            let mut left: LinComb<(usize, usize, usize)> = LinComb::new();
            let mut right: LinComb<(usize, usize, usize)> = LinComb::new();
            for (&(x, y), k) in self.reduced[c].iter() {
                for (&(p, q), m) in self.reduced[x].iter() {
                    left.add_term((p, q, y), k * m);
                }
                for (&(p, q), m) in self.reduced[y].iter() {
                    right.add_term((x, p, q), k * m);
                }
            }
            if left != right {
                return Err(DgError::NotCoassociative(self.names[c].clone()));
            }
            // Δ̄d = (d⊗1 + 1⊗d)Δ̄
            let lhs: LinComb<(usize, usize)> = self.differential[c].apply(|x| self.reduced[*x].clone());
            let mut rhs = LinComb::new();
            for (&(x, y), k) in self.reduced[c].iter() {
                for (&dx, m) in self.differential[x].iter() {
                    rhs.add_term((dx, y), k * m);
                }
                for (&dy, m) in self.differential[y].iter() {
                    rhs.add_term((x, dy), k * m * parity_sign(self.degrees[x]));
                }
            }
            // The counit parts of Δ(dc) and of dΔ(c) agree automatically.
            if lhs != rhs {
                return Err(DgError::NotChainMap(format!("Δ̄ at {}", self.names[c])));
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn name(&self, c: usize) -> &str {
        &self.names[c]
    }

    pub fn degree(&self, c: usize) -> i64 {
        self.degrees[c]
    }

    pub fn reduced_diagonal(&self, c: usize) -> &LinComb<(usize, usize)> {
        &self.reduced[c]
    }

    pub fn d_basis(&self, c: usize) -> &LinComb<usize> {
        &self.differential[c]
    }

    pub fn is_cocommutative(&self) -> bool {
        (1..self.len()).all(|c| {
            let swapped: LinComb<(usize, usize)> = self.reduced[c]
                .iter()
                .map(|(&(x, y), k)| ((y, x), k * parity_sign(self.degrees[x] * self.degrees[y])))
                .collect();
            swapped == self.reduced[c]
        })
    }

    /// The dual cochain algebra: `(a^∨ b^∨)(c) = (−1)^{|a||b|} ⟨Δ̄c, a⊗b⟩` and
    /// `d(a^∨) = (−1)^{|a|} Σ ⟨dc, a⟩ c^∨`.
    pub fn dual(&self) -> Result<TabulatedDga, DgError> {
        let top = self.degrees.iter().copied().max().unwrap_or(0);
        let mut b = TabulatedDgaBuilder::new(Grading::Upper, top);
        for c in 1..self.len() {
            b.element(dual_name(&self.names[c]), self.degrees[c]);
        }
        let mut products: HashMap<(usize, usize), LinComb<usize>> = HashMap::new();
        let mut diffs: Vec<LinComb<usize>> = vec![LinComb::new(); self.len()];
        for c in 1..self.len() {
            for (&(x, y), k) in self.reduced[c].iter() {
                products.entry((x, y)).or_default().add_term(c, k * parity_sign(self.degrees[x] * self.degrees[y]));
            }
            for (&a, k) in self.differential[c].iter() {
                diffs[a].add_term(c, k * parity_sign(self.degrees[a]));
            }
        }
        for ((x, y), v) in products {
            b.product(x, y, v);
        }
        for (a, v) in diffs.into_iter().enumerate().skip(1) {
            b.differential(a, v);
        }
        let commutative = self.is_cocommutative();
        b.build(commutative)
    }

    /// `H_*(ℂPⁿ)` (or `H_*(ℍPⁿ)` with `step = 4`): classes `c_{step·i}` with
    /// `Δ̄ c_{step·m} = Σ_{0<i<m} c_{step·i} ⊗ c_{step·(m−i)}`.
    pub fn projective_space(n: i64, step: i64) -> Result<Self, DgError> {
        let elements: Vec<(String, i64)> = (1..=n).map(|i| (format!("c{}", step * i), step * i)).collect();
        let reduced = (1..=n)
            .map(|m| (1..m).map(|i| ((i as usize, (m - i) as usize), 1)).collect())
            .collect();
        TabulatedCoalgebra::new(elements, reduced, vec![LinComb::new(); n as usize])
    }

    /// A coalgebra with zero reduced diagonal and zero differential.
    pub fn primitive(elements: Vec<(String, i64)>) -> Result<Self, DgError> {
        let n = elements.len();
        TabulatedCoalgebra::new(elements, vec![LinComb::new(); n], vec![LinComb::new(); n])
    }
}

fn predual_name(name: &str) -> String {
    match name.strip_prefix('x') {
        Some(rest) if !rest.is_empty() && rest.chars().all(|ch| ch.is_ascii_digit()) => format!("c{rest}"),
        _ => format!("{name}_∨"),
    }
}

fn dual_name(name: &str) -> String {
    match name.strip_prefix('c') {
        Some(rest) if rest.chars().all(|ch| ch.is_ascii_digit()) => format!("x{rest}"),
        _ => format!("{name}^∨"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divided_power_square() {
        let g = divided_powers_algebra("v", 2, Grading::Lower, 8).unwrap();
        let g1 = g.index_of("γ1(v)").unwrap();
        let g2 = g.index_of("γ2(v)").unwrap();
        assert_eq!(g.mul(g1, g1), LinComb::single(g2, 2));
        assert!(g.mul_in(CoefficientRing::f2(), g1, g1).is_zero());
        let g3 = g.index_of("γ3(v)").unwrap();
        assert_eq!(g.mul(g1, g2), LinComb::single(g3, 3));
    }

    #[test]
    fn odd_divided_powers_are_exterior() {
        let e = divided_powers_algebra("v", 3, Grading::Lower, 10).unwrap();
        assert_eq!(e.len(), 2);
        assert!(e.mul(1, 1).is_zero());
    }

    #[test]
    fn divided_power_law() {
        let g = divided_powers_algebra("v", 2, Grading::Upper, 16).unwrap();
        for i in 1..=8i64 {
            for j in 1..=8 - i {
                let a = g.index_of(&format!("γ{i}(v)")).unwrap();
                let b = g.index_of(&format!("γ{j}(v)")).unwrap();
                let c = g.index_of(&format!("γ{}(v)", i + j)).unwrap();
                let want = bigint_to_i64(&binomial(BigInt::from(i + j), BigInt::from(i)));
                assert_eq!(g.mul(a, b), LinComb::single(c, want));
            }
        }
    }

    #[test]
    fn cp2_cohomology_from_coalgebra() {
        let c = TabulatedCoalgebra::projective_space(2, 2).unwrap();
        let a = c.dual().unwrap();
        let x2 = a.index_of("x2").unwrap();
        let x4 = a.index_of("x4").unwrap();
        assert_eq!(a.mul(x2, x2), LinComb::single(x4, 1));
        assert!(a.is_commutative());
        assert_eq!(a.grading(), Grading::Upper);
    }

    #[test]
    fn associativity_checked() {
        let mut b = TabulatedDgaBuilder::new(Grading::Upper, 6);
        let x = b.element("x", 2);
        let y = b.element("y", 4);
        let z = b.element("z", 6);
        b.product(x, x, LinComb::single(y, 1));
        b.product(x, y, LinComb::single(z, 1));
        b.product(y, x, LinComb::single(z, 2));
        assert!(matches!(b.build(false), Err(DgError::NotAssociative(_))));
    }

    #[test]
    fn commutativity_checked() {
        let mut b = TabulatedDgaBuilder::new(Grading::Upper, 6);
        let x = b.element("x", 3);
        let y = b.element("y", 6);
        b.product(x, x, LinComb::single(y, 1));
        assert!(b.build(false).is_ok());
        assert!(matches!(b.build(true), Err(DgError::NotCommutative(_))));
    }

    #[test]
    fn tensor_of_polynomial_and_exterior() {
        let p = truncated_polynomial("x", 2, 2, Grading::Upper).unwrap();
        let e = divided_powers_algebra("e", 1, Grading::Upper, 5).unwrap();
        let t = tensor_product(&p, &e, 5).unwrap();
        assert_eq!(t.len(), 6);
        assert!(t.is_commutative());
        let x = t.index_of("x").unwrap();
        let ev = t.index_of("γ1(e)").unwrap_or_else(|| t.index_of("e").unwrap());
        let xe = t.mul(x, ev);
        let ex = t.mul(ev, x);
        assert_eq!(xe, ex);
    }

    #[test]
    fn coalgebra_checks() {
        let bad = TabulatedCoalgebra::new(
            vec![("a".into(), 2), ("b".into(), 4)],
            vec![LinComb::new(), LinComb::single((1, 1), 1)],
            vec![LinComb::new(), LinComb::single(1, 1)],
        );
        assert!(bad.is_err());
        let hp = TabulatedCoalgebra::projective_space(3, 4).unwrap();
        assert_eq!(hp.reduced_diagonal(3).len(), 2);
        assert!(hp.is_cocommutative());
    }
}
