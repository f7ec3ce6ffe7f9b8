#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use spflag::atlas::enumerate_words;
use spflag::cli::constant_draw;
use spflag::ekr::{build_ekr, EkrBuild, EkrSpec, Word};
use spflag::exactalg::Rational;
use spflag::geometry::Subspace;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(s: &str) -> Rational {
    s.parse().unwrap()
}

pub fn w(s: &str) -> Word {
    s.parse().unwrap()
}

/// Rational `p/q` with `|p| ≤ 5`, `1 ≤ q ≤ 4`.
pub fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.gen_range(-5..=5), rng.gen_range(1..=4))
}

/// Like [`small_rational`] but never zero.
pub fn nonzero_rational(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let v = small_rational(rng);
        if !v.is_zero() {
            return v;
        }
    }
}

pub fn random_point(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    (0..n).map(|_| small_rational(rng)).collect()
}

/// The origin followed by `count` random points.
pub fn sample_points(rng: &mut ChaCha8Rng, n: usize, count: usize) -> Vec<Vec<Rational>> {
    let mut out = vec![vec![Rational::zero(); n]];
    out.extend((0..count).map(|_| random_point(rng, n)));
    out
}

/// Every word of each length with the zero draw and `draws` seeded draws.
pub fn ekr_sweep(
    lengths: std::ops::RangeInclusive<usize>,
    draws: usize,
    seed: u64,
) -> Vec<EkrBuild> {
    let mut out = Vec::new();
    for r in lengths {
        for (wi, word) in enumerate_words(r).iter().enumerate() {
            for d in 0..=draws {
                out.push(build_ekr(&constant_draw(word, wi, d, seed)));
            }
        }
    }
    out
}

pub fn zero_spec(word: &str) -> EkrSpec {
    EkrSpec::new(w(word))
}

pub fn versors(n: usize, idx: &[usize]) -> Subspace {
    Subspace::coordinate(n, idx)
}

pub fn vector(n: usize, entries: &[(usize, Rational)]) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    for (i, x) in entries {
        v[*i] = x.clone();
    }
    v
}
