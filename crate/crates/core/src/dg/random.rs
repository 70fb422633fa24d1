use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::free::{FreeDga, Generator};
use super::word::Word;
use super::DgError;
use crate::lincomb::LinComb;

/// A seeded free DGA with `generators` generators of degrees `1..=max_degree`
/// and a differential of word length at least two. At most one generator
/// sits in degree 1, which keeps the bar constructions small. Degrees are
/// redrawn until some generator admits a decomposable differential, so with
/// two or more generators the differential is nonzero whenever `d² = 0`
/// can be met within the attempts.
pub fn random_free_dga(seed: u64, generators: usize, max_degree: i64) -> Result<FreeDga, DgError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut fallback = None;
    for _ in 0..64 {
        let mut degrees: Vec<i64> = Vec::with_capacity(generators);
        for _ in 0..generators {
            let low = if degrees.contains(&1) { 2 } else { 1 };
            degrees.push(if low > max_degree { max_degree } else { rng.gen_range(low..=max_degree) });
        }
        degrees.sort();
        let gens: Vec<Generator> =
            degrees.iter().enumerate().map(|(i, &d)| Generator { name: format!("x{i}"), degree: d }).collect();
        let shell = FreeDga::new(gens.clone(), vec![LinComb::new(); gens.len()])?;
        let candidates: Vec<Vec<Word>> =
            gens.iter().map(|g| shell.words(g.degree - 1).into_iter().filter(|w| w.len() >= 2).collect()).collect();
        if candidates.iter().all(|c| c.is_empty()) {
            fallback.get_or_insert(shell);
            continue;
        }
        for _ in 0..64 {
            let mut diff = Vec::with_capacity(gens.len());
            for c in &candidates {
                let mut c = c.clone();
                c.shuffle(&mut rng);
                let mut d = LinComb::new();
                for w in c.into_iter().take(2) {
                    let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
                    d.add_term(w, sign * rng.gen_range(1..=3));
                }
                diff.push(d);
            }
            if let Ok(a) = FreeDga::new(gens.clone(), diff) {
                return Ok(a);
            }
        }
        fallback.get_or_insert(shell);
    }
    match fallback {
        Some(a) => Ok(a),
        None => Err(DgError::Malformed("no generators".into())),
    }
}
