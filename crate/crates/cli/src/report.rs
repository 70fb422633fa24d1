use std::fmt::Write as _;

use hochschild::bar::HochschildClassTable;
use hochschild::linalg::{CoefficientRing, HomologySummary};
use hochschild::loops::GroupShape;
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::Value;

/// Invariant factors as JSON numbers, falling back to strings past `u64`.
fn factors<'a>(t: impl IntoIterator<Item = &'a BigInt>) -> Vec<Value> {
    t.into_iter()
        .map(|x| u64::try_from(x).map_or_else(|_| Value::String(x.to_string()), Value::from))
        .collect()
}

#[derive(Serialize)]
pub struct Group {
    pub degree: i64,
    pub free_rank: usize,
    pub torsion: Vec<Value>,
    pub generators: Vec<String>,
}

#[derive(Serialize)]
pub struct Product {
    pub left: String,
    pub right: String,
    pub degree: i64,
    pub value: String,
    pub coordinates: Vec<String>,
}

/// Nonzero groups and the products of positive-degree generators.
#[derive(Serialize)]
pub struct RingTable {
    pub groups: Vec<Group>,
    pub products: Vec<Product>,
    #[serde(skip)]
    text: String,
}

impl RingTable {
    pub fn new(t: &HochschildClassTable) -> Self {
        let mut text = String::new();
        let mut groups = Vec::new();
        for (n, g) in t.groups.iter().enumerate() {
            if g.is_zero() {
                continue;
            }
            let _ = writeln!(text, "H^{n} = {}  [{}]", g.describe(t.ring), t.names[n].join(", "));
            groups.push(Group {
                degree: n as i64,
                free_rank: g.free_rank,
                torsion: factors(&g.torsion),
                generators: t.names[n].clone(),
            });
        }
        let mut products = Vec::new();
        for (&(p, i, q, j), v) in &t.products {
            if p == 0 || q == 0 {
                continue;
            }
            let value = t.describe_vector(p + q, v);
            let (left, right) = (t.names[p as usize][i].clone(), t.names[q as usize][j].clone());
            let _ = writeln!(text, "{left} · {right} = {value}");
            products.push(Product {
                left,
                right,
                degree: p + q,
                value,
                coordinates: v.iter().map(|c| c.to_string()).collect(),
            });
        }
        RingTable { groups, products, text }
    }

    pub fn text(&self) -> &str {
        &self.text
    }
}

#[derive(Serialize, Clone, PartialEq, Eq)]
pub struct Shape {
    pub degree: i64,
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

impl Shape {
    fn describe(&self, ring: CoefficientRing) -> String {
        HomologySummary {
            degree: self.degree,
            free_rank: self.free_rank,
            torsion: self.torsion.iter().map(|&t| BigInt::from(t)).collect(),
            representative_cycles: Vec::new(),
        }
        .describe(ring)
    }
}

pub fn shapes(groups: &[GroupShape]) -> Vec<Shape> {
    groups
        .iter()
        .enumerate()
        .map(|(n, (free_rank, torsion))| Shape { degree: n as i64, free_rank: *free_rank, torsion: torsion.clone() })
        .collect()
}

fn nonzero(s: &[Shape]) -> impl Iterator<Item = &Shape> {
    s.iter().filter(|g| g.free_rank > 0 || !g.torsion.is_empty())
}

pub fn render_shapes(s: &[Shape], ring: CoefficientRing) -> String {
    let mut text = String::new();
    for g in nonzero(s) {
        let _ = writeln!(text, "H^{} = {}", g.degree, g.describe(ring));
    }
    text
}

#[derive(Serialize)]
pub struct DiffRow {
    pub degree: i64,
    pub computed: Shape,
    pub closed_form: Shape,
}

/// Degrees where the computed groups differ from the closed form.
pub fn diff(computed: &[Shape], closed: &[Shape]) -> Vec<DiffRow> {
    let zero = |n: i64| Shape { degree: n, free_rank: 0, torsion: Vec::new() };
    let top = computed.len().max(closed.len());
    (0..top)
        .filter_map(|n| {
            let a = computed.get(n).cloned().unwrap_or_else(|| zero(n as i64));
            let b = closed.get(n).cloned().unwrap_or_else(|| zero(n as i64));
            (a != b).then_some(DiffRow { degree: n as i64, computed: a, closed_form: b })
        })
        .collect()
}

pub fn render_diff(rows: &[DiffRow], ring: CoefficientRing) -> String {
    if rows.is_empty() {
        return "none\n".into();
    }
    let mut text = String::new();
    for r in rows {
        let _ = writeln!(
            text,
            "H^{}: computed {}, closed form {}",
            r.degree,
            r.computed.describe(ring),
            r.closed_form.describe(ring)
        );
    }
    text
}

/// Outcome of an optional cross-check.
#[derive(Serialize)]
pub struct Verification {
    pub method: String,
    pub status: String,
    pub agree: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub details: Vec<String>,
}

impl Verification {
    pub fn new(method: impl Into<String>, details: Vec<String>) -> Self {
        let agree = details.is_empty();
        Verification {
            method: method.into(),
            status: if agree { "oracles agree" } else { "oracles disagree" }.into(),
            agree,
            details,
        }
    }

    pub fn render(&self) -> String {
        let mut text = format!("verification ({}): {}\n", self.method, self.status);
        for d in &self.details {
            let _ = writeln!(text, "  {d}");
        }
        text
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diff_pads_with_zero_groups() {
        let a = shapes(&[(1, vec![]), (0, vec![2])]);
        let b = shapes(&[(1, vec![]), (0, vec![2]), (1, vec![])]);
        let rows = diff(&a, &b);
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].degree, 2);
        assert_eq!(render_diff(&rows, CoefficientRing::Integers), "H^2: computed 0, closed form Z\n");
        assert!(diff(&b, &b).is_empty());
    }

    #[test]
    fn large_factors_become_strings() {
        let big = BigInt::from(u64::MAX) * 3;
        let v = factors([&BigInt::from(4), &big]);
        assert_eq!(v[0], Value::from(4u64));
        assert_eq!(v[1], Value::String(big.to_string()));
    }
}
