use std::collections::BTreeMap;

use super::GradedError;

/// Index convention of a graded object. Chain objects use lower degrees and
/// differentials of degree −1; cochain objects store upper degrees and their
/// differentials raise the stored index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Grading {
    Lower,
    Upper,
}

impl Grading {
    /// Change of the stored index under the differential.
    pub fn direction(self) -> i64 {
        match self {
            Grading::Lower => -1,
            Grading::Upper => 1,
        }
    }

    pub fn flip(self) -> Grading {
        match self {
            Grading::Lower => Grading::Upper,
            Grading::Upper => Grading::Lower,
        }
    }

    /// Stored index reached from `n` by a map of lower degree `k`.
    pub fn shift(self, n: i64, k: i64) -> i64 {
        match self {
            Grading::Lower => n + k,
            Grading::Upper => n - k,
        }
    }
}

/// A graded module, free of finite rank in each degree, with named basis
/// elements. Degrees run from 0 through `max_degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedBasisModule {
    grading: Grading,
    max_degree: i64,
    basis: BTreeMap<i64, Vec<String>>,
}

impl GradedBasisModule {
    pub fn new(grading: Grading, max_degree: i64) -> Self {
        GradedBasisModule { grading, max_degree, basis: BTreeMap::new() }
    }

    pub fn from_names<I, S>(grading: Grading, max_degree: i64, names: I) -> Result<Self, GradedError>
    where
        I: IntoIterator<Item = (i64, S)>,
        S: Into<String>,
    {
        let mut m = GradedBasisModule::new(grading, max_degree);
        for (deg, name) in names {
            m.push(deg, name)?;
        }
        Ok(m)
    }

    /// Appends a basis element and returns its index within its degree.
    /// Elements above the truncation are silently dropped and return `None`.
    pub fn push(&mut self, degree: i64, name: impl Into<String>) -> Result<Option<usize>, GradedError> {
        let name = name.into();
        if degree < 0 {
            return Err(GradedError::NegativeDegree { name, degree });
        }
        if degree > self.max_degree {
            return Ok(None);
        }
        let slot = self.basis.entry(degree).or_default();
        if slot.contains(&name) {
            return Err(GradedError::DuplicateName { name, degree });
        }
        slot.push(name);
        Ok(Some(slot.len() - 1))
    }

    pub fn grading(&self) -> Grading {
        self.grading
    }

    pub fn max_degree(&self) -> i64 {
        self.max_degree
    }

    pub fn dim(&self, degree: i64) -> usize {
        self.basis.get(&degree).map_or(0, Vec::len)
    }

    pub fn names(&self, degree: i64) -> &[String] {
        self.basis.get(&degree).map_or(&[], Vec::as_slice)
    }

    pub fn index_of(&self, degree: i64, name: &str) -> Option<usize> {
        self.names(degree).iter().position(|n| n == name)
    }

    /// Degrees with at least one basis element.
    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.basis.iter().filter(|(_, v)| !v.is_empty()).map(|(&d, _)| d)
    }

    pub fn total_dim(&self) -> usize {
        self.basis.values().map(Vec::len).sum()
    }

    /// Same module viewed under the opposite index convention, as for a dual.
    pub fn dual(&self, rename: impl Fn(&str) -> String) -> GradedBasisModule {
        GradedBasisModule {
            grading: self.grading.flip(),
            max_degree: self.max_degree,
            basis: self.basis.iter().map(|(&d, v)| (d, v.iter().map(|n| rename(n)).collect())).collect(),
        }
    }

    /// `sV` for `shift = 1`, `s⁻¹V` for `shift = −1`. The suspension raises
    /// lower degrees, so upper degrees move the other way.
    pub fn suspend(&self, shift: i64) -> Result<GradedBasisModule, GradedError> {
        assert!(shift == 1 || shift == -1, "suspension shift must be ±1");
        let mut out = GradedBasisModule::new(self.grading, self.grading.shift(self.max_degree, shift));
        for (&deg, names) in &self.basis {
            let nd = self.grading.shift(deg, shift);
            for n in names {
                let renamed = suspend_name(n, shift);
                if nd < 0 {
                    return Err(GradedError::NegativeDegree { name: renamed, degree: nd });
                }
                out.push(nd, renamed)?;
            }
        }
        Ok(out)
    }
}

/// `s(x)` / `s⁻¹(x)`, cancelling an opposite outer suspension.
pub fn suspend_name(name: &str, shift: i64) -> String {
    let (this, other) = if shift > 0 { ("s(", "s⁻¹(") } else { ("s⁻¹(", "s(") };
    if let Some(inner) = name.strip_prefix(other).and_then(|r| r.strip_suffix(')')) {
        if balanced(inner) {
            return inner.to_string();
        }
    }
    format!("{this}{name})")
}

fn balanced(s: &str) -> bool {
    let mut depth = 0i64;
    for ch in s.chars() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return false;
                }
            }
            _ => {}
        }
    }
    depth == 0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suspension_raises_lower_degree() {
        let v = GradedBasisModule::from_names(Grading::Lower, 4, [(2, "v")]).unwrap();
        let sv = v.suspend(1).unwrap();
        assert_eq!(sv.names(3), ["s(v)".to_string()]);
        assert_eq!(sv.dim(2), 0);
    }

    #[test]
    fn desuspension_round_trip() {
        let v = GradedBasisModule::from_names(Grading::Lower, 5, [(1, "a"), (3, "b"), (3, "c")]).unwrap();
        let back = v.suspend(-1).unwrap().suspend(1).unwrap();
        assert_eq!(back, v);
    }

    #[test]
    fn upper_desuspension_raises_upper_degree() {
        let v = GradedBasisModule::from_names(Grading::Upper, 6, [(3, "v")]).unwrap();
        let w = v.suspend(-1).unwrap();
        assert_eq!(w.names(4), ["s⁻¹(v)".to_string()]);
    }

    #[test]
    fn degree_zero_cannot_desuspend() {
        let v = GradedBasisModule::from_names(Grading::Lower, 2, [(0, "u")]).unwrap();
        assert!(matches!(v.suspend(-1), Err(GradedError::NegativeDegree { .. })));
    }

    #[test]
    fn duplicate_names_rejected() {
        let r = GradedBasisModule::from_names(Grading::Lower, 2, [(1, "x"), (1, "x")]);
        assert!(matches!(r, Err(GradedError::DuplicateName { .. })));
        assert!(GradedBasisModule::from_names(Grading::Lower, 2, [(1, "x"), (2, "x")]).is_ok());
    }

    #[test]
    fn nested_names() {
        assert_eq!(suspend_name("s⁻¹(a)", 1), "a");
        assert_eq!(suspend_name("s(a)⊗s(b)", -1), "s⁻¹(s(a)⊗s(b))");
    }
}
