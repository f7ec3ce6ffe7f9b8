use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Nonempty word over `{1, 2, 3}` obeying the least upward jumps rule: it
/// starts with 1 and never exceeds its running maximum by more than one.
///
/// Names both EKR labels (sequences of operations) and singularity classes.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(letters: Vec<u8>) -> Result<Word> {
        if letters.is_empty() {
            return Err(Error::BadSyntax("empty word".into()));
        }
        if let Some((i, &l)) = letters
            .iter()
            .enumerate()
            .find(|(_, &l)| !(1..=3).contains(&l))
        {
            return Err(Error::BadSyntax(format!(
                "letter {l} at position {} is not one of 1, 2, 3",
                i + 1
            )));
        }
        if letters[0] != 1 {
            return Err(Error::RuleViolation(format!(
                "word must start with 1, found {} at position 1",
                letters[0]
            )));
        }
        let mut max = 1;
        for (i, &l) in letters.iter().enumerate() {
            if l > max + 1 {
                return Err(Error::RuleViolation(format!(
                    "letter {l} at position {} jumps past {} (running maximum {max})",
                    i + 1,
                    max + 1
                )));
            }
            max = max.max(l);
        }
        Ok(Word(letters))
    }

    /// The word `1.1…1` of the given length.
    pub fn generic(length: usize) -> Word {
        assert!(length >= 1);
        Word(vec![1; length])
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Letter at a 1-based position.
    pub fn letter(&self, position: usize) -> u8 {
        self.0[position - 1]
    }

    pub fn count(&self, letter: u8) -> usize {
        self.0.iter().filter(|&&l| l == letter).count()
    }

    /// Same word with the letter at a 1-based position replaced, if the
    /// result is still valid.
    pub fn with_letter(&self, position: usize, letter: u8) -> Option<Word> {
        let mut letters = self.0.clone();
        letters[position - 1] = letter;
        Word::new(letters).ok()
    }
}

/// Parses a dot-separated word such as `1.2.1.3`.
pub fn validate_word(text: &str) -> Result<Word> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::BadSyntax("empty word".into()));
    }
    let letters = text
        .split('.')
        .enumerate()
        .map(|(i, part)| match part {
            "1" => Ok(1),
            "2" => Ok(2),
            "3" => Ok(3),
            _ => Err(Error::BadSyntax(format!(
                "letter {part:?} at position {} is not one of 1, 2, 3",
                i + 1
            ))),
        })
        .collect::<Result<Vec<u8>>>()?;
    Word::new(letters)
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        validate_word(s)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        validate_word(&s).map_err(serde::de::Error::custom)
    }
}
