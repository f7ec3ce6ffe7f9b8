use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::atlas::enumerate_words;
use crate::classify::{singularity_class_at, ClassifyOptions, Target};
use crate::ekr::{build_ekr, EkrSpec, Shift, Word};
use crate::exactalg::Rational;

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub length: usize,
    /// Random constant draws per word.
    pub trials: usize,
    pub seed: u64,
    /// Also run the all-zero draw, numbered 0.
    pub zero_constants: bool,
    pub options: ClassifyOptions,
}

/// Classification of `build_ekr(word)` at the origin for one constant draw.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationOutcome {
    pub word: Word,
    pub draw: usize,
    pub constants: EkrSpec,
    pub point: Vec<Rational>,
    pub expected: Word,
    pub computed: Option<Word>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub pass: bool,
    #[serde(skip)]
    pub wall_time: Duration,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifySummary {
    pub length: usize,
    pub seed: u64,
    pub words: usize,
    pub total: usize,
    pub passed: usize,
    pub outcomes: Vec<VerificationOutcome>,
}

impl VerifySummary {
    pub fn failures(&self) -> impl Iterator<Item = &VerificationOutcome> {
        self.outcomes.iter().filter(|o| !o.pass)
    }

    pub fn all_passed(&self) -> bool {
        self.passed == self.total
    }
}

/// Nonzero `p/q` with `1 ≤ |p|, q ≤ 10`.
pub fn draw_rational<R: Rng>(rng: &mut R) -> Rational {
    let p: i64 = rng.gen_range(1..=10);
    let q: i64 = rng.gen_range(1..=10);
    let sign = if rng.gen_bool(0.5) { -1 } else { 1 };
    Rational::new(sign * p, q)
}

/// Constants for draw `draw` of the word at `word_index` in the length's
/// enumeration. Draw 0 is all zeros; every other draw fills each admitted
/// slot from a ChaCha stream determined by `(seed, length, word_index, draw)`.
pub fn constant_draw(word: &Word, word_index: usize, draw: usize, seed: u64) -> EkrSpec {
    let mut spec = EkrSpec::new(word.clone());
    if draw == 0 {
        return spec;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((word.len() as u64) << 48) | ((word_index as u64) << 16) | draw as u64);
    for step in 1..=word.len() {
        for shift in [Shift::B, Shift::C] {
            if spec.admits(shift, step) {
                spec.set(shift, step, draw_rational(&mut rng))
                    .expect("admitted");
            }
        }
    }
    spec
}

fn verify_one(
    word: &Word,
    draw: usize,
    spec: EkrSpec,
    options: ClassifyOptions,
) -> VerificationOutcome {
    let start = Instant::now();
    let build = build_ekr(&spec);
    let point = build.chart().origin();
    let result = singularity_class_at(Target::Ekr(&build), &point, options);
    let (computed, error) = match result {
        Ok(rep) => (Some(rep.word), None),
        Err(e) => (None, Some(e.to_string())),
    };
    VerificationOutcome {
        pass: computed.as_ref() == Some(word),
        word: word.clone(),
        draw,
        constants: spec,
        point,
        expected: word.clone(),
        computed,
        error,
        wall_time: start.elapsed(),
    }
}

/// Classifies every word of the given length under each draw. Work is spread
/// over the rayon pool; outcomes come back in (word, draw) order.
pub fn run_verify(config: &VerifyConfig) -> VerifySummary {
    let words = enumerate_words(config.length);
    let first = if config.zero_constants { 0 } else { 1 };
    let tasks: Vec<(usize, usize)> = (0..words.len())
        .flat_map(|w| (first..=config.trials).map(move |d| (w, d)))
        .collect();
    let outcomes: Vec<VerificationOutcome> = tasks
        .par_iter()
        .map(|&(wi, d)| {
            let spec = constant_draw(&words[wi], wi, d, config.seed);
            verify_one(&words[wi], d, spec, config.options)
        })
        .collect();
    VerifySummary {
        length: config.length,
        seed: config.seed,
        words: words.len(),
        total: outcomes.len(),
        passed: outcomes.iter().filter(|o| o.pass).count(),
        outcomes,
    }
}
