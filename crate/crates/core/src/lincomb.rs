use std::collections::btree_map;
use std::collections::BTreeMap;
use std::fmt;

/// A finite integer linear combination of basis keys.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, i64>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

fn checked(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("coefficient overflow")
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(k: K, c: i64) -> Self {
        let mut out = Self::new();
        out.add_term(k, c);
        out
    }

    pub fn add_term(&mut self, k: K, c: i64) {
        if c == 0 {
            return;
        }
        match self.terms.entry(k) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                let v = checked(*e.get(), c);
                if v == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    /// `self += c · other`
    pub fn add_scaled(&mut self, other: &LinComb<K>, c: i64) {
        if c == 0 {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v.checked_mul(c).expect("coefficient overflow"));
        }
    }

    pub fn scaled(&self, c: i64) -> Self {
        let mut out = Self::new();
        out.add_scaled(self, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: &K) -> i64 {
        self.terms.get(k).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, i64)> {
        self.terms.iter().map(|(k, &v)| (k, v))
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    /// Applies a linear map given on basis keys.
    pub fn apply<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> LinComb<L>) -> LinComb<L> {
        let mut out = LinComb::new();
        for (k, c) in self.iter() {
            out.add_scaled(&f(k), c);
        }
        out
    }

    pub fn map_keys<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> L) -> LinComb<L> {
        let mut out = LinComb::new();
        for (k, c) in self.iter() {
            out.add_term(f(k), c);
        }
        out
    }

    pub fn retain(&mut self, mut keep: impl FnMut(&K) -> bool) {
        self.terms.retain(|k, _| keep(k));
    }

    /// Coefficients reduced modulo `m` (no-op when `m` is zero).
    pub fn reduced(&self, m: i64) -> Self {
        if m == 0 {
            return self.clone();
        }
        let mut out = Self::new();
        for (k, c) in self.iter() {
            out.add_term(k.clone(), c.rem_euclid(m));
        }
        out
    }
}

impl<K: Ord + Clone> std::ops::Add for LinComb<K> {
    type Output = LinComb<K>;
    fn add(mut self, rhs: Self) -> Self {
        self.add_scaled(&rhs, 1);
        self
    }
}

impl<K: Ord + Clone> std::ops::Sub for LinComb<K> {
    type Output = LinComb<K>;
    fn sub(mut self, rhs: Self) -> Self {
        self.add_scaled(&rhs, -1);
        self
    }
}

impl<K: Ord + Clone> FromIterator<(K, i64)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, i64)>>(iter: I) -> Self {
        let mut out = LinComb::new();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<K: Ord + fmt::Debug> fmt::Debug for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(k, c)| format!("{c}*{k:?}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation() {
        let mut a = LinComb::single("x", 2);
        a.add_term("x", -2);
        assert!(a.is_zero());
        let b: LinComb<&str> = [("y", 1), ("z", 3)].into_iter().collect();
        let c = b.clone() - b;
        assert!(c.is_zero());
    }

    #[test]
    fn apply_linear() {
        let a: LinComb<u32> = [(1, 2), (2, 1)].into_iter().collect();
        let b = a.apply(|k| LinComb::single(k * 10, 1));
        assert_eq!(b.coeff(&10), 2);
        assert_eq!(b.coeff(&20), 1);
    }
}
