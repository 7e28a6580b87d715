use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest rank for which all reduced words are enumerated.
pub const MAX_WORD_ENUMERATION_RANK: usize = 5;

/// A permutation of `1..=n` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    oneline: Vec<usize>,
}

impl Permutation {
    pub fn new(oneline: Vec<usize>) -> Result<Self> {
        let n = oneline.len();
        let mut seen = vec![false; n + 1];
        for &v in &oneline {
            if v == 0 || v > n || seen[v] {
                return Err(Error::NotAPermutation(oneline));
            }
            seen[v] = true;
        }
        Ok(Self { oneline })
    }

    pub fn identity(n: usize) -> Self {
        Self { oneline: (1..=n).collect() }
    }

    /// The longest element, `w0(i) = n + 1 − i`.
    pub fn longest(n: usize) -> Self {
        Self { oneline: (1..=n).rev().collect() }
    }

    /// The simple transposition `s_i`.
    pub fn simple(n: usize, i: usize) -> Result<Self> {
        Self::identity(n).mul_simple(i)
    }

    /// `s_{i1} s_{i2} ⋯ s_{ir}`.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self> {
        word.iter().try_fold(Self::identity(n), |w, &i| w.mul_simple(i))
    }

    pub fn n(&self) -> usize {
        self.oneline.len()
    }

    pub fn oneline(&self) -> &[usize] {
        &self.oneline
    }

    /// `w(i)`, 1-based.
    pub fn apply(&self, i: usize) -> usize {
        self.oneline[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.oneline.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    fn check_letter(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.n() {
            return Err(Error::IndexOutOfRange { index: i, max: self.n().saturating_sub(1) });
        }
        Ok(())
    }

    /// `w · s_i`: swaps positions `i` and `i+1`.
    pub fn mul_simple(&self, i: usize) -> Result<Self> {
        self.check_letter(i)?;
        let mut oneline = self.oneline.clone();
        oneline.swap(i - 1, i);
        Ok(Self { oneline })
    }

    /// `s_i · w`: swaps the values `i` and `i+1`.
    pub fn simple_mul(&self, i: usize) -> Result<Self> {
        self.check_letter(i)?;
        let oneline = self
            .oneline
            .iter()
            .map(|&v| if v == i { i + 1 } else if v == i + 1 { i } else { v })
            .collect();
        Ok(Self { oneline })
    }

    /// Whether `ℓ(w s_i) < ℓ(w)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.oneline[i - 1] > self.oneline[i]
    }

    /// Whether `ℓ(s_i w) < ℓ(w)`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let pos = |v: usize| self.oneline.iter().position(|&x| x == v).unwrap();
        pos(i) > pos(i + 1)
    }

    /// `(u ∘ v)(i) = u(v(i))`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch { left: self.n(), right: other.n() });
        }
        Ok(Self { oneline: other.oneline.iter().map(|&v| self.oneline[v - 1]).collect() })
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.oneline.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Self { oneline: inv }
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.oneline;
        (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count()).sum()
    }

    /// Lexicographically smallest reduced word.
    pub fn canonical_word(&self) -> ReducedWord {
        let mut w = self.clone();
        let mut letters = Vec::with_capacity(self.length());
        while let Some(i) = (1..w.n()).find(|&i| w.has_left_descent(i)) {
            letters.push(i);
            w = w.simple_mul(i).expect("descent index is in range");
        }
        ReducedWord(letters)
    }

    /// All reduced words, sorted lexicographically.
    pub fn reduced_words(&self) -> Result<Vec<ReducedWord>> {
        if self.n() > MAX_WORD_ENUMERATION_RANK {
            return Err(Error::Capacity(format!(
                "reduced word enumeration is limited to n <= {MAX_WORD_ENUMERATION_RANK}"
            )));
        }
        let mut memo = HashMap::new();
        let mut words: Vec<ReducedWord> = words_of(self, &mut memo).into_iter().map(ReducedWord).collect();
        words.sort();
        Ok(words)
    }

    /// Letters of any reduced word: `i` belongs iff `w` does not preserve `{1, …, i}`.
    pub fn support(&self) -> BTreeSet<usize> {
        let mut max = 0;
        let mut out = BTreeSet::new();
        for i in 1..self.n() {
            max = max.max(self.oneline[i - 1]);
            if max > i {
                out.insert(i);
            }
        }
        out
    }

    /// Every permutation of `1..=n` in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut current = (1..=n).collect::<Vec<_>>();
        loop {
            out.push(Self { oneline: current.clone() });
            // next lexicographic permutation
            let Some(i) = (1..current.len()).rev().find(|&i| current[i - 1] < current[i]) else {
                return out;
            };
            let j = (i..current.len()).rev().find(|&j| current[j] > current[i - 1]).unwrap();
            current.swap(i - 1, j);
            current[i..].reverse();
        }
    }
}

fn words_of(w: &Permutation, memo: &mut HashMap<Permutation, Vec<Vec<usize>>>) -> Vec<Vec<usize>> {
    if w.is_identity() {
        return vec![Vec::new()];
    }
    if let Some(found) = memo.get(w) {
        return found.clone();
    }
    let mut out = Vec::new();
    for i in 1..w.n() {
        if w.has_right_descent(i) {
            let shorter = w.mul_simple(i).unwrap();
            for mut word in words_of(&shorter, memo) {
                word.push(i);
                out.push(word);
            }
        }
    }
    memo.insert(w.clone(), out.clone());
    out
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.oneline
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.oneline.iter().map(usize::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// A word in the simple reflections `s_1 … s_{n−1}`.
///
/// Words name both a permutation (`s_{i1} ⋯ s_{ir}`) and an operator chain: applying word
/// `(i1, …, ir)` means `C_{ir}(⋯ C_{i1}(f))`, so the last letter acts outermost.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ReducedWord(pub Vec<usize>);

impl ReducedWord {
    pub fn new(letters: Vec<usize>) -> Self {
        Self(letters)
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn permutation(&self, n: usize) -> Result<Permutation> {
        Permutation::from_word(n, &self.0)
    }

    pub fn is_reduced(&self, n: usize) -> Result<bool> {
        Ok(self.permutation(n)?.length() == self.0.len())
    }
}

impl Deref for ReducedWord {
    type Target = [usize];
    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for ReducedWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::default());
        }
        s.split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad letter `{t}`"))))
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }
}
