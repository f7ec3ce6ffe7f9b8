//! Combinatorics of singularity classes: enumeration, counts, codimension,
//! guaranteed adjacencies and the stratification records built from them.

mod emit;

use serde::Serialize;

use crate::classify::{singularity_locus_equations, LocusEquation, SandwichWord};
use crate::ekr::Word;

pub use emit::{to_csv, to_dot, to_jsonl};

/// All valid words of length `r` in lexicographic order.
pub fn enumerate_words(r: usize) -> Vec<Word> {
    if r == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut current = vec![1u8];
    extend_words(&mut current, 1, r, &mut out);
    out
}

fn extend_words(current: &mut Vec<u8>, max: u8, r: usize, out: &mut Vec<Word>) {
    if current.len() == r {
        out.push(Word::new(current.clone()).expect("built by the rule"));
        return;
    }
    for next in 1..=(max + 1).min(3) {
        current.push(next);
        extend_words(current, max.max(next), r, out);
        current.pop();
    }
}

/// Number of singularity classes of special `m`-flags of length `r`.
///
/// For `m ≥ 2` this counts words over `{1, …, m+1}` that start with 1 and
/// obey the least upward jumps rule, by dynamic programming over the running
/// maximum. For `m = 1` it is the number of Kumpera–Ruiz classes, `2^(r-2)`.
pub fn count_classes(m: usize, r: usize) -> u128 {
    if r == 0 {
        return 0;
    }
    if m == 1 {
        return if r >= 2 { 1u128 << (r - 2) } else { 1 };
    }
    let top = m + 1;
    // ways[k]: prefixes with running maximum k
    let mut ways = vec![0u128; top + 1];
    ways[1] = 1;
    for _ in 1..r {
        let mut next = vec![0u128; top + 1];
        for k in 1..=top {
            if ways[k] == 0 {
                continue;
            }
            next[k] += ways[k] * k as u128;
            if k < top {
                next[k + 1] += ways[k];
            }
        }
        ways = next;
    }
    ways.iter().sum()
}

/// Number of 2's plus twice the number of 3's.
pub fn codimension(w: &Word) -> usize {
    w.count(2) + 2 * w.count(3)
}

/// Words reached by lowering a single letter `j_l` by one, where `j_l = 3`,
/// or `j_l = 2` with no 3 after it. Only valid results are kept.
pub fn adjacencies(w: &Word) -> Vec<Word> {
    let letters = w.letters();
    let mut out = Vec::new();
    for (i, &l) in letters.iter().enumerate() {
        let lowerable = match l {
            3 => true,
            2 => !letters[i + 1..].contains(&3),
            _ => false,
        };
        if lowerable {
            if let Some(t) = w.with_letter(i + 1, l - 1) {
                out.push(t);
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AtlasRecord {
    pub word: Word,
    pub length: usize,
    pub codimension: usize,
    pub sandwich: SandwichWord,
    pub locus: Vec<LocusEquation>,
    pub adjacencies: Vec<Word>,
}

impl AtlasRecord {
    pub fn new(word: Word) -> Self {
        AtlasRecord {
            length: word.len(),
            codimension: codimension(&word),
            sandwich: SandwichWord::from_word(&word),
            locus: singularity_locus_equations(&word),
            adjacencies: adjacencies(&word),
            word,
        }
    }
}

/// One record per class of length `r`, in lexicographic order.
pub fn build_atlas(r: usize) -> Vec<AtlasRecord> {
    enumerate_words(r)
        .into_iter()
        .map(AtlasRecord::new)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn words(xs: &[Word]) -> Vec<String> {
        xs.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(words(&enumerate_words(1)), ["1"]);
        assert_eq!(words(&enumerate_words(2)), ["1.1", "1.2"]);
        assert_eq!(enumerate_words(3).len(), 5);
        assert!(enumerate_words(0).is_empty());
    }

    #[test]
    fn dp_matches_enumeration() {
        for r in 1..=8 {
            assert_eq!(count_classes(2, r), enumerate_words(r).len() as u128);
        }
    }

    #[test]
    fn kr_counts() {
        assert_eq!(count_classes(1, 1), 1);
        assert_eq!(count_classes(1, 2), 1);
        assert_eq!(count_classes(1, 7), 32);
    }

    #[test]
    fn codimensions() {
        assert_eq!(codimension(&w("1.2.1.3")), 3);
        assert_eq!(codimension(&w("1.1.1.1")), 0);
        assert_eq!(codimension(&w("1.2.2.3")), 4);
    }

    #[test]
    fn adjacency_examples() {
        assert_eq!(words(&adjacencies(&w("1.2.3"))), ["1.2.2"]);
        assert_eq!(words(&adjacencies(&w("1.2.3.2"))), ["1.2.2.2", "1.2.3.1"]);
        assert!(adjacencies(&w("1.1.1")).is_empty());
        // lowering the only 2 below a later 2 keeps the word valid
        assert_eq!(words(&adjacencies(&w("1.2.2"))), ["1.1.2", "1.2.1"]);
    }

    #[test]
    fn records_are_consistent() {
        for rec in build_atlas(4) {
            assert_eq!(rec.locus.len(), rec.codimension);
            for t in &rec.adjacencies {
                assert_eq!(codimension(t) + 1, rec.codimension);
            }
        }
    }
}
