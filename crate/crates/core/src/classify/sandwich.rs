use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::ekr::Word;
use crate::error::{Error, Result};

/// Word over `{1, 2̲}`; the underlined letter is written `2_`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SandwichWord(Vec<bool>);

impl SandwichWord {
    /// `true` marks `2̲`. The first letter must be 1.
    pub fn new(underlined: Vec<bool>) -> Result<Self> {
        match underlined.first() {
            None => Err(Error::BadSyntax("empty sandwich word".into())),
            Some(true) => Err(Error::RuleViolation(
                "sandwich word must start with 1".into(),
            )),
            Some(false) => Ok(SandwichWord(underlined)),
        }
    }

    /// Collapses every letter above 1 to `2̲`.
    pub fn from_word(w: &Word) -> Self {
        SandwichWord(w.letters().iter().map(|&l| l > 1).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Whether the letter at a 1-based position is `2̲`.
    pub fn is_underlined(&self, position: usize) -> bool {
        self.0[position - 1]
    }

    /// 1-based positions of the `2̲` letters.
    pub fn underlined_positions(&self) -> Vec<usize> {
        (1..=self.len())
            .filter(|&p| self.is_underlined(p))
            .collect()
    }
}

impl fmt::Display for SandwichWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &u) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            f.write_str(if u { "2_" } else { "1" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for SandwichWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SandwichWord({self})")
    }
}

impl FromStr for SandwichWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .trim()
            .split('.')
            .enumerate()
            .map(|(i, part)| match part {
                "1" => Ok(false),
                "2_" => Ok(true),
                _ => Err(Error::BadSyntax(format!(
                    "sandwich letter {part:?} at position {} is neither 1 nor 2_",
                    i + 1
                ))),
            })
            .collect::<Result<Vec<bool>>>()?;
        SandwichWord::new(letters)
    }
}

impl Serialize for SandwichWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SandwichWord {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}
