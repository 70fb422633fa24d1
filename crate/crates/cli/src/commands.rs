use std::fmt::Write as _;
use std::path::Path;

use hochschild::bar::{hochschild_cohomology_ring, HochschildClassTable};
use hochschild::dg::{cobar, random_free_dga, shuffle_diagonal, FreeDga, HopfData, TabulatedCoalgebra, Word};
use hochschild::linalg::CoefficientRing;
use hochschild::lincomb::LinComb;
use hochschild::loops::{
    cpn_loop_module, cpn_loop_ring, hh_trivial_algebra, invariants_and_coinvariants, necklace_count,
    sphere_loop_module, sphere_loop_ring, suspension_loop_ring, table_shape, LoopError, TrivialExtensionRing,
};
use hochschild::perturb::{
    compare_rings, linear_sdr, small_bimodule_resolution, small_cohomology_ring, small_cyclic_complex, SdrData,
};
use serde::Serialize;

use crate::input::{self, parse_ring};
use crate::report::{diff, render_diff, render_shapes, shapes, DiffRow, RingTable, Shape, Verification};
use crate::Failure;

/// A finished job: the JSON document, its plain-text table, and the exit
/// status (nonzero when a check inside the job failed).
pub struct Outcome {
    pub json: String,
    pub text: String,
    pub status: i32,
}

fn finish<T: Serialize>(doc: &T, text: String, ok: bool) -> Result<Outcome, Failure> {
    let json = serde_json::to_string_pretty(doc).map_err(internal)?;
    Ok(Outcome { json, text, status: if ok { 0 } else { Failure::INTERNAL } })
}

fn internal(e: impl std::fmt::Display) -> Failure {
    Failure::Internal(e.to_string())
}

fn loop_failure(e: LoopError) -> Failure {
    match e {
        LoopError::NotFreeHomology(_) => Failure::Validation(e.to_string()),
        _ => internal(e),
    }
}

fn truncation(n: i64) -> Result<i64, Failure> {
    if n < 1 {
        return Err(Failure::Validation(format!("--max-degree must be at least 1, got {n}")));
    }
    Ok(n)
}

fn ring_or_z(flag: Option<&str>) -> Result<CoefficientRing, Failure> {
    flag.map_or(Ok(CoefficientRing::Integers), parse_ring)
}

fn combination(alg: &FreeDga, x: &LinComb<Word>) -> String {
    let terms: Vec<String> = x
        .iter()
        .map(|(w, c)| match c {
            1 => alg.word_name(w),
            -1 => format!("-{}", alg.word_name(w)),
            _ => format!("{c} {}", alg.word_name(w)),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

#[derive(Serialize)]
struct GeneratorOut {
    name: String,
    degree: i64,
    differential: String,
}

fn generators_of(alg: &FreeDga) -> Vec<GeneratorOut> {
    alg.generators()
        .iter()
        .enumerate()
        .map(|(l, g)| GeneratorOut {
            name: g.name.clone(),
            degree: g.degree,
            differential: combination(alg, alg.generator_differential(l)),
        })
        .collect()
}

/// Which complex computes `HH^*` in the `hh` command.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Pipeline {
    /// The perturbed small complex `(𝕜⊕sV)⊗TV` with the transported diagonal.
    Small,
    /// The full cyclic bar complex.
    Full,
}

impl Pipeline {
    fn label(self) -> &'static str {
        match self {
            Pipeline::Small => "small model",
            Pipeline::Full => "full complex",
        }
    }
}

#[derive(Serialize)]
struct HhDoc<'a> {
    command: &'static str,
    ring: String,
    max_degree: i64,
    pipeline: &'static str,
    generators: Vec<GeneratorOut>,
    #[serde(flatten)]
    table: &'a RingTable,
    #[serde(skip_serializing_if = "Option::is_none")]
    verification: Option<Verification>,
}

pub fn hh(
    path: &Path,
    ring: Option<&str>,
    max_degree: Option<i64>,
    pipeline: Pipeline,
    verify: bool,
) -> Result<Outcome, Failure> {
    let p = input::read(path)?;
    let ring = p.ring(ring)?;
    let n = truncation(max_degree.or(p.max_degree).unwrap_or(8))?;
    let h = p.hopf()?;
    let (table, verification) = if verify {
        let c = compare_rings(&h, ring, n).map_err(internal)?;
        let mut details = Vec::new();
        if !c.groups_agree {
            details.push("the two pipelines give different groups".to_string());
        }
        for &(p, i, q, j) in &c.mismatches {
            let names = &c.small.names;
            details.push(format!("{} · {} differs", names[p as usize][i], names[q as usize][j]));
        }
        let table = if pipeline == Pipeline::Small { c.small } else { c.full };
        (table, Some(Verification::new("full complex against small model", details)))
    } else {
        let table = match pipeline {
            Pipeline::Small => small_cohomology_ring(&h, ring, n).map_err(internal)?,
            Pipeline::Full => hochschild_cohomology_ring(&h, ring, n).map_err(internal)?,
        };
        (table, None)
    };
    let rt = RingTable::new(&table);
    let mut text = format!("# HH^* over {ring}, degrees 0..={n}, {}\n", pipeline.label());
    text.push_str(rt.text());
    let ok = verification.as_ref().is_none_or(|v| v.agree);
    if let Some(v) = &verification {
        text.push_str(&v.render());
    }
    let doc = HhDoc {
        command: "hh",
        ring: ring.to_string(),
        max_degree: n,
        pipeline: pipeline.label(),
        generators: generators_of(h.algebra()),
        table: &rt,
        verification,
    };
    finish(&doc, text, ok)
}

#[derive(Serialize)]
struct LoopDoc {
    command: &'static str,
    space: String,
    ring: String,
    max_degree: i64,
    computed: RingTable,
    closed_form: Vec<Shape>,
    diff: Vec<DiffRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verification: Option<Verification>,
}

fn loop_document(
    space: String,
    ring: CoefficientRing,
    n: i64,
    table: &HochschildClassTable,
    closed: Vec<Shape>,
    verification: Option<Verification>,
) -> Result<Outcome, Failure> {
    let computed = RingTable::new(table);
    let rows = diff(&shapes(&table_shape(table)), &closed);
    let mut text = format!("# free loop cohomology of {space} over {ring}, degrees 0..={n}\n## computed\n");
    text.push_str(computed.text());
    text.push_str("## closed form\n");
    text.push_str(&render_shapes(&closed, ring));
    text.push_str("## diff\n");
    text.push_str(&render_diff(&rows, ring));
    if let Some(v) = &verification {
        text.push_str(&v.render());
    }
    let ok = rows.is_empty() && verification.as_ref().is_none_or(|v| v.agree);
    let doc = LoopDoc {
        command: "loop",
        space,
        ring: ring.to_string(),
        max_degree: n,
        computed,
        closed_form: closed.into_iter().filter(|g| g.free_rank > 0 || !g.torsion.is_empty()).collect(),
        diff: rows,
        verification,
    };
    finish(&doc, text, ok)
}

/// Compares groups and the ranks of the product maps, which do not depend
/// on the chosen bases.
fn same_ring(model: &HochschildClassTable, hh: &HochschildClassTable) -> Vec<String> {
    let mut details = Vec::new();
    let (a, b) = (table_shape(model), table_shape(hh));
    for n in 0..a.len().max(b.len()) {
        if a.get(n) != b.get(n) {
            details.push(format!("groups differ in degree {n}"));
        }
    }
    let (ra, rb) = (model.product_ranks(), hh.product_ranks());
    for key in ra.keys().chain(rb.keys()) {
        let (x, y) = (ra.get(key).copied().unwrap_or(0), rb.get(key).copied().unwrap_or(0));
        if x != y {
            details.push(format!("products of degrees {} and {} have rank {x} and {y}", key.0, key.1));
        }
    }
    details.sort();
    details.dedup();
    details
}

fn hh_of(h: &HopfData, ring: CoefficientRing, n: i64) -> Result<HochschildClassTable, Failure> {
    small_cohomology_ring(h, ring, n).map_err(internal)
}

pub fn loop_sphere(d: i64, ring: Option<&str>, max_degree: Option<i64>, verify: bool) -> Result<Outcome, Failure> {
    if d < 1 {
        return Err(Failure::Validation(format!("--d must be at least 1, got {d}")));
    }
    let ring = ring_or_z(ring)?;
    let n = truncation(max_degree.unwrap_or(12))?;
    let table = sphere_loop_ring(d, ring, n).map_err(loop_failure)?;
    let verification = if verify {
        let alg = FreeDga::from_named(&[("v", d)], &[]).map_err(internal)?;
        let h = shuffle_diagonal(&alg).map_err(internal)?;
        Some(Verification::new(format!("HH^* of T(v{d}) with the shuffle diagonal"), same_ring(&table, &hh_of(&h, ring, n)?)))
    } else {
        None
    };
    loop_document(format!("S^{}", d + 1), ring, n, &table, shapes(&sphere_loop_module(d, ring, n)), verification)
}

pub fn loop_projective(
    dim: i64,
    step: i64,
    ring: Option<&str>,
    max_degree: Option<i64>,
    verify: bool,
) -> Result<Outcome, Failure> {
    let field = match step {
        2 => "CP",
        4 => "HP",
        _ => return Err(Failure::Validation(format!("--step must be 2 or 4, got {step}"))),
    };
    if dim < 1 {
        return Err(Failure::Validation(format!("--n must be at least 1, got {dim}")));
    }
    let ring = ring_or_z(ring)?;
    let n = truncation(max_degree.unwrap_or(13))?;
    let table = cpn_loop_ring(dim, step, ring, n).map_err(loop_failure)?;
    let verification = if verify {
        let coalg = TabulatedCoalgebra::projective_space(dim, step).map_err(internal)?;
        let h = shuffle_diagonal(&cobar(&coalg).map_err(internal)?).map_err(internal)?;
        Some(Verification::new("HH^* of the cobar construction with the shuffle diagonal", same_ring(&table, &hh_of(&h, ring, n)?)))
    } else {
        None
    };
    let closed = shapes(&cpn_loop_module(dim, step, ring, n));
    loop_document(format!("{field}^{dim}"), ring, n, &table, closed, verification)
}

pub fn loop_suspension(
    path: &Path,
    ring: Option<&str>,
    max_degree: Option<i64>,
    verify: bool,
) -> Result<Outcome, Failure> {
    let p = input::read(path)?;
    if p.diagonal.is_some() {
        return Err(Failure::Validation("a suspension is given by H^*(X) and its product, not a diagonal".into()));
    }
    let ring = p.ring(ring)?;
    let n = truncation(max_degree.or(p.max_degree).unwrap_or(8))?;
    let a = p.tabulated()?;
    let table = suspension_loop_ring(&a, ring, n).map_err(loop_failure)?;
    let verification = if verify {
        let t = TrivialExtensionRing::new(&a, ring, n).map_err(loop_failure)?;
        let details = t
            .transported_mismatches(n)
            .map_err(loop_failure)?
            .into_iter()
            .map(|(p, i, q, j)| format!("{} · {} differs", table.names[p as usize][i], table.names[q as usize][j]))
            .collect();
        Some(Verification::new("product transported from the tensorized coalgebra", details))
    } else {
        None
    };
    let degrees: Vec<i64> = p.generators.iter().map(|g| g.degree).collect();
    let closed = shapes(&hh_trivial_algebra(&degrees, ring, n));
    let name = path.file_stem().map_or("X".into(), |s| s.to_string_lossy().into_owned());
    loop_document(format!("the suspension of {name}"), ring, n, &table, closed, verification)
}

#[derive(Serialize)]
struct NecklaceDoc {
    command: &'static str,
    alphabet: u64,
    length: u64,
    count: u64,
    enumerated: Option<u64>,
}

/// Orbits are enumerated directly when there are at most this many words.
const ENUMERATION_LIMIT: u64 = 1 << 20;

pub fn necklace(alphabet: u64, length: u64) -> Result<Outcome, Failure> {
    if alphabet < 1 || length < 1 {
        return Err(Failure::Validation("--alphabet and --length must be at least 1".into()));
    }
    let words = u32::try_from(length).ok().and_then(|l| alphabet.checked_pow(l));
    let count = necklace_count(alphabet, length);
    let enumerated = words
        .filter(|&w| w <= ENUMERATION_LIMIT)
        .map(|_| invariants_and_coinvariants(&vec![2; alphabet as usize], length as usize).orbits.len() as u64);
    let mut text = format!("necklaces of length {length} over an alphabet of size {alphabet}: {count}\n");
    if let Some(e) = enumerated {
        let _ = writeln!(text, "orbits enumerated: {e}");
    }
    let ok = enumerated.is_none_or(|e| e == count);
    finish(&NecklaceDoc { command: "necklace", alphabet, length, count, enumerated }, text, ok)
}

#[derive(Serialize)]
struct Check {
    stage: &'static str,
    identity: &'static str,
    holds: bool,
    first_failure: Option<i64>,
}

#[derive(Serialize)]
struct SdrDoc {
    command: &'static str,
    ring: String,
    max_degree: i64,
    seed: u64,
    generators: Vec<GeneratorOut>,
    checks: Vec<Check>,
    f_infinity_equals_f: bool,
    status: &'static str,
}

fn report(stage: &'static str, sdr: &SdrData, out: &mut Vec<Check>) -> Result<(), Failure> {
    for (identity, bad) in sdr.identity_report().map_err(internal)? {
        out.push(Check { stage, identity, holds: bad.is_none(), first_failure: bad });
    }
    Ok(())
}

pub fn verify_sdr(seed: u64, generators: usize, ring: Option<&str>, max_degree: Option<i64>) -> Result<Outcome, Failure> {
    if !(1..=4).contains(&generators) {
        return Err(Failure::Validation(format!("--generators must lie in 1..=4, got {generators}")));
    }
    let ring = ring_or_z(ring)?;
    let n = truncation(max_degree.unwrap_or(9))?;
    let alg = random_free_dga(seed, generators, 3).map_err(internal)?;
    let mut checks = Vec::new();
    let lin = linear_sdr(&alg.linear_part(), ring, n).map_err(internal)?;
    report("linear", &lin.sdr, &mut checks)?;
    let full = small_bimodule_resolution(&alg, ring, n).map_err(internal)?;
    report("perturbed", &full.sdr, &mut checks)?;
    let cyclic = small_cyclic_complex(&alg, ring, n).map_err(internal)?;
    report("cyclic", &cyclic.sdr, &mut checks)?;
    let f_same = full.sdr.f.blocks().iter().all(|(k, m)| lin.sdr.f.block(*k) == Some(m));
    let ok = f_same && checks.iter().all(|c| c.holds);
    let mut text = format!("# SDR identities over {ring}, degrees ≤ {n}, seed {seed}\n");
    for (l, g) in alg.generators().iter().enumerate() {
        let _ = writeln!(text, "d{} = {}  (degree {})", g.name, combination(&alg, alg.generator_differential(l)), g.degree);
    }
    for c in &checks {
        let verdict = c.first_failure.map_or("holds".to_string(), |k| format!("fails in degree {k}"));
        let _ = writeln!(text, "{:<10} {:<20} {verdict}", c.stage, c.identity);
    }
    let _ = writeln!(text, "f∞ = f: {}", if f_same { "yes" } else { "no" });
    let doc = SdrDoc {
        command: "verify-sdr",
        ring: ring.to_string(),
        max_degree: n,
        seed,
        generators: generators_of(&alg),
        checks,
        f_infinity_equals_f: f_same,
        status: if ok { "all identities hold" } else { "identity violated" },
    };
    finish(&doc, text, ok)
}
