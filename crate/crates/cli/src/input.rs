//! The JSON presentation format.
//!
//! A free presentation lists generators and a differential on them:
//!
//! ```json
//! {"ring": "Z", "generators": [{"name": "z1", "degree": 1}, {"name": "z3", "degree": 3}],
//!  "differential": {"z3": [[1, ["z1", "z1"]]]}, "diagonal": "shuffle", "max_degree": 8}
//! ```
//!
//! A tabulated presentation lists a basis of the augmentation ideal of a
//! cochain algebra together with its products, keyed `"a*b"`:
//!
//! ```json
//! {"ring": "F2", "generators": [{"name": "x2", "degree": 2}, {"name": "x4", "degree": 4}],
//!  "product": {"x2*x2": [[1, "x4"]]}}
//! ```
//!
//! `"diagonal"` is `"shuffle"` (generators primitive, the default),
//! `"tensorization"` (the predual coalgebra of the product table), or an
//! explicit table `{name: [[coeff, [left letters], [right letters]], …]}`
//! giving the reduced diagonal on each generator.

use std::collections::BTreeMap;
use std::path::Path;

use hochschild::dg::{shuffle_diagonal, tensorization_of_coalgebra, FreeDga, Generator, HopfData, TabulatedDga, TabulatedDgaBuilder, Word};
use hochschild::graded::Grading;
use hochschild::linalg::CoefficientRing;
use hochschild::lincomb::LinComb;
use serde::Deserialize;

use crate::Failure;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Presentation {
    pub ring: Option<RingSpec>,
    #[serde(default)]
    pub generators: Vec<GeneratorSpec>,
    #[serde(default)]
    pub differential: BTreeMap<String, Vec<(i64, Vec<String>)>>,
    pub diagonal: Option<DiagonalSpec>,
    pub product: Option<BTreeMap<String, Vec<(i64, String)>>>,
    pub max_degree: Option<i64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorSpec {
    pub name: String,
    pub degree: i64,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum RingSpec {
    Name(String),
    Prime {
        #[serde(rename = "Fp")]
        p: u64,
    },
}

/// Reduced diagonal terms `[coeff, left letters, right letters]` per generator.
pub type DiagonalTable = BTreeMap<String, Vec<(i64, Vec<String>, Vec<String>)>>;

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum DiagonalSpec {
    Named(String),
    Table(DiagonalTable),
}

pub fn parse_ring(s: &str) -> Result<CoefficientRing, Failure> {
    CoefficientRing::parse(s).map_err(|e| Failure::Validation(e.to_string()))
}

impl RingSpec {
    pub fn resolve(&self) -> Result<CoefficientRing, Failure> {
        match self {
            RingSpec::Name(s) => parse_ring(s),
            RingSpec::Prime { p } => CoefficientRing::fp(*p).map_err(|e| Failure::Validation(e.to_string())),
        }
    }
}

pub fn read(path: &Path) -> Result<Presentation, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Validation(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Validation(format!("{}: {e}", path.display())))
}

fn invalid(e: impl std::fmt::Display) -> Failure {
    Failure::Validation(e.to_string())
}

impl Presentation {
    /// The ring from the command line, else from the document, else ℤ.
    pub fn ring(&self, flag: Option<&str>) -> Result<CoefficientRing, Failure> {
        match (flag, &self.ring) {
            (Some(s), _) => parse_ring(s),
            (None, Some(given)) => given.resolve(),
            (None, None) => Ok(CoefficientRing::Integers),
        }
    }

    fn letter(&self, name: &str) -> Result<usize, Failure> {
        self.generators
            .iter()
            .position(|g| g.name == name)
            .ok_or_else(|| invalid(format!("unknown generator {name:?}")))
    }

    fn word(&self, letters: &[String]) -> Result<Word, Failure> {
        let mut w = Vec::with_capacity(letters.len());
        for l in letters {
            w.push(self.letter(l)? as u16);
        }
        Ok(Word(w))
    }

    fn check_keys<V>(&self, table: &BTreeMap<String, V>, what: &str) -> Result<(), Failure> {
        for k in table.keys() {
            self.letter(k).map_err(|_| invalid(format!("{what} given on unknown generator {k:?}")))?;
        }
        Ok(())
    }

    pub fn free_dga(&self) -> Result<FreeDga, Failure> {
        self.check_keys(&self.differential, "differential")?;
        let generators = self.generators.iter().map(|g| Generator { name: g.name.clone(), degree: g.degree }).collect();
        let mut differential = Vec::with_capacity(self.generators.len());
        for g in &self.generators {
            let mut d = LinComb::new();
            for (c, letters) in self.differential.get(&g.name).map_or(&[][..], |v| v.as_slice()) {
                d.add_term(self.word(letters)?, *c);
            }
            differential.push(d);
        }
        FreeDga::new(generators, differential).map_err(invalid)
    }

    /// The Hopf algebra the `hh` command works on.
    pub fn hopf(&self) -> Result<HopfData, Failure> {
        match &self.diagonal {
            Some(DiagonalSpec::Named(s)) if s == "tensorization" => {
                let a = self.tabulated()?;
                let c = a.dual_coalgebra().map_err(invalid)?;
                tensorization_of_coalgebra(&c).map_err(invalid)
            }
            _ if self.product.is_some() => {
                Err(invalid("a product table is only read with the \"tensorization\" diagonal"))
            }
            None => shuffle_diagonal(&self.free_dga()?).map_err(invalid),
            Some(DiagonalSpec::Named(s)) if s == "shuffle" => shuffle_diagonal(&self.free_dga()?).map_err(invalid),
            Some(DiagonalSpec::Named(s)) => Err(invalid(format!("unknown diagonal {s:?}"))),
            Some(DiagonalSpec::Table(table)) => {
                self.check_keys(table, "diagonal")?;
                let alg = self.free_dga()?;
                let mut images = Vec::with_capacity(self.generators.len());
                for (l, g) in self.generators.iter().enumerate() {
                    let mut img = LinComb::new();
                    img.add_term((Word::letter(l), Word::unit()), 1);
                    img.add_term((Word::unit(), Word::letter(l)), 1);
                    for (c, x, y) in table.get(&g.name).map_or(&[][..], |v| v.as_slice()) {
                        img.add_term((self.word(x)?, self.word(y)?), *c);
                    }
                    images.push(img);
                }
                HopfData::new(alg, images).map_err(invalid)
            }
        }
    }

    /// The cochain algebra spanned by `1` and the generators. The
    /// differential, if any, must send generators to combinations of single
    /// generators.
    pub fn tabulated(&self) -> Result<TabulatedDga, Failure> {
        let highest = self.generators.iter().map(|g| g.degree).max().unwrap_or(0);
        let mut b = TabulatedDgaBuilder::new(Grading::Upper, highest.max(1));
        let idx: Vec<usize> = self.generators.iter().map(|g| b.element(g.name.clone(), g.degree)).collect();
        self.check_keys(&self.differential, "differential")?;
        for (name, terms) in &self.differential {
            let mut d = LinComb::new();
            for (c, letters) in terms {
                match letters.as_slice() {
                    [l] => d.add_term(idx[self.letter(l)?], *c),
                    _ => return Err(invalid(format!("d({name}) must be linear in a tabulated presentation"))),
                }
            }
            b.differential(idx[self.letter(name)?], d);
        }
        for (key, terms) in self.product.iter().flatten() {
            let (x, y) = key
                .split_once('*')
                .ok_or_else(|| invalid(format!("product key {key:?} is not of the form \"a*b\"")))?;
            let (x, y) = (self.letter(x.trim())?, self.letter(y.trim())?);
            let mut v = LinComb::new();
            for (c, z) in terms {
                v.add_term(idx[self.letter(z)?], *c);
            }
            b.product(idx[x], idx[y], v);
        }
        b.build(true).map_err(invalid)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Presentation {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn ring_descriptors() {
        assert_eq!(parse(r#"{"ring": {"Fp": 3}}"#).ring(None).unwrap(), CoefficientRing::fp(3).unwrap());
        assert_eq!(parse(r#"{"ring": "Q"}"#).ring(None).unwrap(), CoefficientRing::Rationals);
        assert_eq!(parse(r#"{"ring": "Q"}"#).ring(Some("F2")).unwrap(), CoefficientRing::f2());
        assert_eq!(parse("{}").ring(None).unwrap(), CoefficientRing::Integers);
        assert!(matches!(parse(r#"{"ring": {"Fp": 6}}"#).ring(None), Err(Failure::Validation(_))));
    }

    #[test]
    fn explicit_diagonal_is_checked() {
        let ok = parse(
            r#"{"generators": [{"name": "z1", "degree": 1}, {"name": "z2", "degree": 2}],
                "diagonal": {"z2": [[1, ["z1"], ["z1"]]]}}"#,
        );
        assert!(ok.hopf().is_ok());
        // a⊗b has degree 3, not 2
        let bad = parse(
            r#"{"generators": [{"name": "a", "degree": 1}, {"name": "b", "degree": 2}],
                "diagonal": {"b": [[1, ["a"], ["b"]]]}}"#,
        );
        assert!(matches!(bad.hopf(), Err(Failure::Validation(_))));
    }

    #[test]
    fn tabulated_products() {
        let p = parse(
            r#"{"generators": [{"name": "x2", "degree": 2}, {"name": "x4", "degree": 4}],
                "product": {"x2*x2": [[1, "x4"]]}}"#,
        );
        let a = p.tabulated().unwrap();
        assert_eq!(a.mul(1, 1), LinComb::single(2, 1));
        let bad = parse(r#"{"generators": [{"name": "x2", "degree": 2}], "product": {"x2x2": [[1, "x2"]]}}"#);
        assert!(matches!(bad.tabulated(), Err(Failure::Validation(_))));
        assert!(matches!(p.hopf(), Err(Failure::Validation(_))));
    }
}
