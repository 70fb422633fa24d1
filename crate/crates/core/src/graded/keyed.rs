use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;

use super::complex::TruncatedComplex;
use super::module::{GradedBasisModule, Grading};
use super::GradedError;
use crate::linalg::{CoefficientRing, SparseMatrix};
use crate::lincomb::LinComb;

/// A graded basis whose elements are structured keys (words, bar elements)
/// rather than names, with index lookup in both directions.
#[derive(Clone, Debug)]
pub struct KeyedBasis<K> {
    grading: Grading,
    max_degree: i64,
    keys: BTreeMap<i64, Vec<K>>,
    index: HashMap<K, (i64, usize)>,
}

impl<K: Clone + Eq + Hash + Ord> KeyedBasis<K> {
    pub fn new(grading: Grading, max_degree: i64) -> Self {
        KeyedBasis { grading, max_degree, keys: BTreeMap::new(), index: HashMap::new() }
    }

    /// Adds the keys of one degree, sorted so matrices are reproducible.
    pub fn set_degree(&mut self, degree: i64, mut keys: Vec<K>) {
        keys.sort();
        keys.dedup();
        for (i, k) in keys.iter().enumerate() {
            self.index.insert(k.clone(), (degree, i));
        }
        self.keys.insert(degree, keys);
    }

    pub fn grading(&self) -> Grading {
        self.grading
    }

    pub fn max_degree(&self) -> i64 {
        self.max_degree
    }

    pub fn keys(&self, degree: i64) -> &[K] {
        self.keys.get(&degree).map_or(&[], Vec::as_slice)
    }

    pub fn dim(&self, degree: i64) -> usize {
        self.keys(degree).len()
    }

    pub fn locate(&self, key: &K) -> Option<(i64, usize)> {
        self.index.get(key).copied()
    }

    pub fn contains(&self, key: &K) -> bool {
        self.index.contains_key(key)
    }

    /// Coordinates of a combination in degree `degree`.
    pub fn vector(&self, degree: i64, c: &LinComb<K>) -> Result<Vec<i64>, GradedError> {
        let mut v = vec![0i64; self.dim(degree)];
        for (k, x) in c.iter() {
            match self.locate(k) {
                Some((d, i)) if d == degree => v[i] += x,
                _ => return Err(GradedError::UnknownKey { degree }),
            }
        }
        Ok(v)
    }

    pub fn comb(&self, degree: i64, v: &[i64]) -> LinComb<K> {
        self.keys(degree).iter().zip(v).filter(|(_, &x)| x != 0).map(|(k, &x)| (k.clone(), x)).collect()
    }

    pub fn module(&self, name: impl Fn(&K) -> String) -> GradedBasisModule {
        let mut m = GradedBasisModule::new(self.grading, self.max_degree);
        for (&d, ks) in &self.keys {
            for k in ks {
                m.push(d, name(k)).expect("keys are distinct");
            }
        }
        m
    }

    /// Matrix of a linear map from degree `n` of `self` into degree `m` of
    /// `target`. Terms outside that degree are an error.
    pub fn matrix_to<L: Clone + Eq + Hash + Ord>(
        &self,
        n: i64,
        target: &KeyedBasis<L>,
        m: i64,
        f: impl Fn(&K) -> LinComb<L>,
    ) -> Result<SparseMatrix, GradedError> {
        let mut cols = Vec::with_capacity(self.dim(n));
        for k in self.keys(n) {
            let mut col = Vec::new();
            for (l, x) in f(k).iter() {
                match target.locate(l) {
                    Some((d, i)) if d == m => col.push((i, x)),
                    _ => return Err(GradedError::UnknownKey { degree: m }),
                }
            }
            cols.push(col);
        }
        Ok(SparseMatrix::from_columns(target.dim(m), cols))
    }
}

/// A complex on a keyed basis, keeping the keys for later lookups.
#[derive(Clone, Debug)]
pub struct KeyedComplex<K> {
    pub basis: KeyedBasis<K>,
    pub complex: TruncatedComplex,
}

impl<K: Clone + Eq + Hash + Ord> KeyedComplex<K> {
    /// Assembles `d` degree by degree and validates `d ∘ d = 0`.
    pub fn build(
        ring: CoefficientRing,
        basis: KeyedBasis<K>,
        d: impl Fn(&K) -> LinComb<K>,
        name: impl Fn(&K) -> String,
    ) -> Result<Self, GradedError> {
        let dir = basis.grading().direction();
        let mut diffs = BTreeMap::new();
        for n in 0..=basis.max_degree() {
            let t = n + dir;
            if t < 0 || t > basis.max_degree() {
                continue;
            }
            diffs.insert(n, basis.matrix_to(n, &basis, t, &d)?);
        }
        let complex = TruncatedComplex::new(ring, basis.module(name), diffs)?;
        Ok(KeyedComplex { basis, complex })
    }
}
