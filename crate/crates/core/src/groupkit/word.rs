use std::fmt;

use serde::{Deserialize, Serialize};

use super::group::{Elem, FinGroup};
use crate::error::{Error, Result};

/// A signed, one-based generator index: `k` is generator `k - 1` and `-k`
/// its formal inverse.
pub type Letter = i32;

pub fn letter(generator: usize) -> Letter {
    Letter::try_from(generator + 1).expect("generator index fits in a letter")
}

pub fn letter_inv(generator: usize) -> Letter {
    -letter(generator)
}

#[inline]
pub fn generator_of(l: Letter) -> usize {
    l.unsigned_abs() as usize - 1
}

/// A freely reduced word in the free group on the generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<Letter>", into = "Vec<Letter>")]
pub struct Word(Vec<Letter>);

impl TryFrom<Vec<Letter>> for Word {
    type Error = Error;
    fn try_from(v: Vec<Letter>) -> Result<Self> {
        if v.contains(&0) {
            return Err(Error::Schema("0 is not a valid letter".into()));
        }
        Ok(free_reduce(&v))
    }
}

impl From<Word> for Vec<Letter> {
    fn from(w: Word) -> Self {
        w.0
    }
}

/// Cancels adjacent `x x⁻¹` pairs until none remain.
pub fn free_reduce(letters: &[Letter]) -> Word {
    let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
    for &l in letters {
        assert!(l != 0, "0 is not a valid letter");
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    Word(out)
}

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: &[Letter]) -> Self {
        free_reduce(letters)
    }

    pub fn generator(g: usize) -> Self {
        Word(vec![letter(g)])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|&l| -l).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        free_reduce(&v)
    }

    pub fn product(words: &[&Word]) -> Word {
        let v: Vec<Letter> = words.iter().flat_map(|w| w.0.iter().copied()).collect();
        free_reduce(&v)
    }

    pub fn power(&self, k: usize) -> Word {
        let v: Vec<Letter> = std::iter::repeat_n(self.0.iter().copied(), k).flatten().collect();
        free_reduce(&v)
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.0.iter().map(|&l| generator_of(l)).max()
    }

    /// Rewrites every generator through `f`, e.g. to embed a word into a
    /// presentation with more generators.
    pub fn map_generators(&self, mut f: impl FnMut(usize) -> usize) -> Word {
        let v: Vec<Letter> = self
            .0
            .iter()
            .map(|&l| {
                let g = letter(f(generator_of(l)));
                if l > 0 { g } else { -g }
            })
            .collect();
        free_reduce(&v)
    }

    /// Substitutes a word for each generator.
    pub fn substitute(&self, images: &[Word]) -> Result<Word> {
        let mut v = Vec::new();
        for &l in &self.0 {
            let img = images.get(generator_of(l)).ok_or(Error::UnboundGenerator(generator_of(l)))?;
            if l > 0 {
                v.extend_from_slice(&img.0);
            } else {
                v.extend(img.0.iter().rev().map(|&x| -x));
            }
        }
        Ok(free_reduce(&v))
    }

    /// Renders with generator names, compressing runs into powers.
    pub fn render(&self, names: &[String]) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let l = self.0[i];
            let mut run = 1;
            while i + run < self.0.len() && self.0[i + run] == l {
                run += 1;
            }
            let name = names
                .get(generator_of(l))
                .cloned()
                .unwrap_or_else(|| format!("x{}", generator_of(l)));
            let exp = if l > 0 { run as i64 } else { -(run as i64) };
            parts.push(if exp == 1 { name } else { format!("{name}^{exp}") });
            i += run;
        }
        parts.join(" ")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Left-to-right evaluation of `w` in `k`; `assignment[g]` is the image of
/// generator `g`.
pub fn eval_word(w: &Word, assignment: &[Elem], k: &FinGroup) -> Result<Elem> {
    let mut acc = k.identity();
    for &l in w.letters() {
        let g = generator_of(l);
        let x = *assignment.get(g).ok_or(Error::UnboundGenerator(g))?;
        acc = k.mul(acc, if l > 0 { x } else { k.inv(x) });
    }
    Ok(acc)
}
