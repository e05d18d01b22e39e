//! Reduced words, Hecke words, and reduced factorizations with prescribed
//! shifts.
//!
//! A word `[m1, m2, ..., mL]` stands for the product
//! `sigma(m1) sigma(m2) ... sigma(mL)` (rightmost factor applied first).
//! Counting recurses on right descents, `w(p) = w(p sigma_m) . m`;
//! the lazy enumerator recurses on left descents so that words come out in
//! lexicographic order.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::demazure::{compose_all, demazure, is_reduced_tuple};
use crate::error::{Error, Result};
use crate::format::{Parser, Token};
use crate::perm::{check_period, Perm};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    Reduced,
    Hecke,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvalMode {
    Ordinary,
    Demazure,
}

/// A sequence of generator letters in period `k`. `None` is the identity
/// letter, allowed only in Hecke words.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Word {
    pub k: i64,
    pub letters: Vec<Option<i64>>,
    pub flavor: Flavor,
}

impl Word {
    pub fn reduced(k: i64, letters: &[i64]) -> Word {
        Word {
            k,
            letters: letters.iter().copied().map(Some).collect(),
            flavor: Flavor::Reduced,
        }
    }

    pub fn hecke(k: i64, letters: Vec<Option<i64>>) -> Word {
        Word {
            k,
            letters,
            flavor: Flavor::Hecke,
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "word k={} [", self.k)?;
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            match l {
                Some(m) => write!(f, "{m}")?,
                None => write!(f, "_")?,
            }
        }
        write!(f, "]")
    }
}

impl FromStr for Word {
    type Err = Error;

    /// `word k=<K> [m1,m2,...]`; a word containing `_` is a Hecke word.
    fn from_str(s: &str) -> Result<Word> {
        let mut p = Parser::new(s)?;
        p.keyword("word")?;
        let k = p.field("k")?;
        let letters = p.list(|p| {
            if p.peek() == Some(&Token::Sym('_')) {
                p.sym('_')?;
                Ok(None)
            } else {
                p.int().map(Some)
            }
        })?;
        p.finish()?;
        check_period(k)?;
        let flavor = if letters.iter().any(Option::is_none) {
            Flavor::Hecke
        } else {
            Flavor::Reduced
        };
        Ok(Word { k, letters, flavor })
    }
}

/// Multiplies out the letters of `w` left to right, skipping identity
/// letters.
pub fn evaluate_word(w: &Word, mode: EvalMode) -> Result<Perm> {
    let mut acc = Perm::identity(w.k)?;
    for m in w.letters.iter().flatten() {
        let s = Perm::sigma(*m, w.k)?;
        acc = match mode {
            EvalMode::Ordinary => acc.compose(&s)?,
            EvalMode::Demazure => demazure(&acc, &s)?,
        };
    }
    Ok(acc)
}

fn require_shift_zero(p: &Perm) -> Result<()> {
    match p.shift() {
        0 => Ok(()),
        s => Err(Error::ShiftNonzero(s)),
    }
}

/// Lazy enumeration of the reduced words of a shift-0 permutation, in
/// lexicographic order.
pub struct ReducedWords {
    k: i64,
    support: Option<(i64, i64)>,
    stack: Vec<(Perm, std::vec::IntoIter<i64>)>,
    prefix: Vec<i64>,
}

impl Iterator for ReducedWords {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        loop {
            let (perm, letters) = self.stack.last_mut()?;
            if perm.is_identity() {
                let word = Word::reduced(self.k, &self.prefix);
                self.stack.pop();
                self.prefix.pop();
                return Some(word);
            }
            match letters.next() {
                Some(m) => {
                    if let Some((lo, hi)) = self.support {
                        // any other letter would add an inversion outside the window
                        assert!(
                            lo <= m && m + 1 < hi,
                            "letter {m} outside window [{lo}, {hi})"
                        );
                    }
                    let child = Perm::sigma(m, self.k)
                        .and_then(|s| s.compose(perm))
                        .expect("same period");
                    let next: Vec<i64> = child.descents_left().into_iter().collect();
                    self.prefix.push(m);
                    self.stack.push((child, next.into_iter()));
                }
                None => {
                    self.stack.pop();
                    self.prefix.pop();
                }
            }
        }
    }
}

pub fn reduced_words(p: &Perm) -> Result<ReducedWords> {
    require_shift_zero(p)?;
    let first: Vec<i64> = p.descents_left().into_iter().collect();
    Ok(ReducedWords {
        k: p.period(),
        support: p.support(),
        stack: vec![(p.clone(), first.into_iter())],
        prefix: Vec::new(),
    })
}

/// Number of reduced words of a shift-0 permutation.
pub fn reduced_word_count(p: &Perm) -> Result<BigUint> {
    require_shift_zero(p)?;
    let mut memo = HashMap::new();
    Ok(count_reduced(p, &mut memo))
}

fn count_reduced(p: &Perm, memo: &mut HashMap<Perm, BigUint>) -> BigUint {
    if p.is_identity() {
        return BigUint::from(1u32);
    }
    if let Some(c) = memo.get(p) {
        return c.clone();
    }
    let k = p.period();
    let mut total = BigUint::from(0u32);
    for m in p.descents_right() {
        let shorter = p
            .compose(&Perm::sigma(m, k).expect("valid period"))
            .expect("same period");
        total += count_reduced(&shorter, memo);
    }
    memo.insert(p.clone(), total.clone());
    total
}

/// Number of length-`g` sequences of letters (identity or a generator)
/// whose Demazure product is `p`.
pub fn hecke_word_count(p: &Perm, g: usize) -> Result<BigUint> {
    require_shift_zero(p)?;
    let mut memo = HashMap::new();
    Ok(count_hecke(p, g, &mut memo))
}

fn count_hecke(p: &Perm, g: usize, memo: &mut HashMap<(Perm, usize), BigUint>) -> BigUint {
    if g == 0 {
        return BigUint::from(u32::from(p.is_identity()));
    }
    if p.inv_count() > g {
        return BigUint::from(0u32);
    }
    let key = (p.clone(), g);
    if let Some(c) = memo.get(&key) {
        return c.clone();
    }
    let k = p.period();
    let descents = p.descents_right();
    // last letter: identity, or a descent m of p applied to either p or p sigma_m
    let mut total = count_hecke(p, g - 1, memo) * BigUint::from(1 + descents.len());
    for m in descents {
        let shorter = p
            .compose(&Perm::sigma(m, k).expect("valid period"))
            .expect("same period");
        total += count_hecke(&shorter, g - 1, memo);
    }
    memo.insert(key, total.clone());
    total
}

/// A factorization `target = factors[0] * factors[1] * ...` with prescribed
/// factor shifts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ShiftedTuple {
    pub factors: Vec<Perm>,
    pub shifts: Vec<i64>,
}

/// All reduced tuples with the given factor shifts whose ordinary product is
/// `target`, optionally capping the inversion count of every factor.
///
/// Each reduced word of the shift-0 normalization of `target` is cut into
/// consecutive blocks; block `i` is re-indexed by conjugation with a shift
/// and multiplied by `iota(shifts[i])` on the right.
pub fn reduced_tuples(
    target: &Perm,
    shifts: &[i64],
    cap: Option<usize>,
) -> Result<Vec<ShiftedTuple>> {
    if shifts.is_empty() {
        return Err(Error::EmptySequence);
    }
    let chi = target.shift();
    let total: i64 = shifts.iter().sum();
    if total != chi {
        return Err(Error::ShiftSumMismatch {
            expected: chi,
            got: total,
        });
    }
    let k = target.period();
    let normalized = Perm::iota(-chi, k)?.compose(target)?;
    let length = normalized.inv_count();
    let cap = cap.unwrap_or(length);
    let iotas = shifts
        .iter()
        .map(|&c| Perm::iota(c, k))
        .collect::<Result<Vec<_>>>()?;
    let mut out = BTreeSet::new();
    let splits = compositions(length, shifts.len(), cap);
    for word in reduced_words(&normalized)? {
        let letters: Vec<i64> = word.letters.iter().flatten().copied().collect();
        for split in &splits {
            let mut factors = Vec::with_capacity(shifts.len());
            let (mut start, mut prefix_shift) = (0, 0);
            for (i, &len) in split.iter().enumerate() {
                // iota_e sigma_m iota_e^-1 = sigma_{m - e}
                let e = chi - prefix_shift;
                let block: Vec<i64> = letters[start..start + len].iter().map(|m| m - e).collect();
                let base = evaluate_word(&Word::reduced(k, &block), EvalMode::Ordinary)?;
                factors.push(base.compose(&iotas[i])?);
                start += len;
                prefix_shift += shifts[i];
            }
            debug_assert_eq!(&compose_all(&factors)?, target);
            debug_assert!(is_reduced_tuple(&factors)?);
            out.insert(factors);
        }
    }
    Ok(out
        .into_iter()
        .map(|factors| ShiftedTuple {
            factors,
            shifts: shifts.to_vec(),
        })
        .collect())
}

/// Ordered ways to write `total` as `parts` nonnegative summands, each at
/// most `cap`.
fn compositions(total: usize, parts: usize, cap: usize) -> Vec<Vec<usize>> {
    fn go(
        remaining: usize,
        parts: usize,
        cap: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if parts == 1 {
            if remaining <= cap {
                cur.push(remaining);
                out.push(cur.clone());
                cur.pop();
            }
            return;
        }
        for first in 0..=remaining.min(cap) {
            cur.push(first);
            go(remaining - first, parts - 1, cap, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(total, parts, cap, &mut Vec::new(), &mut out);
    out
}
