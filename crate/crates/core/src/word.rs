//! Finite words over the ordered binary alphabet `a < b`.
//!
//! Everything else in the crate is expressed in terms of [`Word`]: directive
//! words, central and Christoffel words, binary expansions of integers and
//! tree paths. The letter `a` is identified with the digit `0` and `b` with
//! the digit `1`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Default upper bound on the number of occurrence tuples that
/// [`subword_occurrences`] will materialize.
pub const DEFAULT_OCCURRENCE_CAP: usize = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("empty word")]
    Empty,
    #[error("undefined for constant word")]
    Constant,
    #[error("invalid letter {0:?}")]
    InvalidLetter(char),
    #[error("malformed integral representation: {0}")]
    MalformedRep(&'static str),
    #[error("too many occurrences: {count} exceeds the cap of {cap}")]
    TooManyOccurrences { count: BigUint, cap: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Letter {
    A,
    B,
}

impl Letter {
    pub const ALL: [Letter; 2] = [Letter::A, Letter::B];

    pub fn complement(self) -> Letter {
        match self {
            Letter::A => Letter::B,
            Letter::B => Letter::A,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
        }
    }

    pub fn digit(self) -> u8 {
        match self {
            Letter::A => 0,
            Letter::B => 1,
        }
    }

    pub fn from_digit(bit: bool) -> Letter {
        if bit {
            Letter::B
        } else {
            Letter::A
        }
    }

    /// Accepts `a`/`b` as well as the digit aliases `0`/`1`.
    pub fn from_char(c: char) -> Result<Letter, WordError> {
        match c {
            'a' | '0' => Ok(Letter::A),
            'b' | '1' => Ok(Letter::B),
            other => Err(WordError::InvalidLetter(other)),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// A finite word over `{a, b}`.
///
/// The derived ordering is the lexicographic order induced by `a < b`, in
/// which a proper prefix is smaller than any of its extensions.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    pub fn repeat(letter: Letter, n: usize) -> Word {
        Word(vec![letter; n])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// `x·self·y`, the usual way of wrapping directive words (`bwb`, `aψ(v)b`).
    pub fn wrap(&self, left: Letter, right: Letter) -> Word {
        let mut letters = Vec::with_capacity(self.len() + 2);
        letters.push(left);
        letters.extend_from_slice(&self.0);
        letters.push(right);
        Word(letters)
    }

    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    pub fn prefix(&self, len: usize) -> Word {
        self.slice(0, len)
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.0.starts_with(&self.0)
    }

    pub fn is_suffix_of(&self, other: &Word) -> bool {
        other.0.ends_with(&self.0)
    }

    pub fn count(&self, letter: Letter) -> usize {
        self.0.iter().filter(|&&l| l == letter).count()
    }

    pub fn is_palindrome(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    /// True for `ε` and for powers of a single letter.
    pub fn is_constant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }

    /// True when every letter is immediately followed by its complement.
    pub fn is_alternating(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != w[1])
    }

    pub fn complement(&self) -> Word {
        Word(self.0.iter().map(|l| l.complement()).collect())
    }

    pub fn reverse(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// `v⁻`: the word without its last letter.
    pub fn drop_last(&self) -> Result<Word, WordError> {
        match self.0.split_last() {
            Some((_, rest)) => Ok(Word(rest.to_vec())),
            None => Err(WordError::Empty),
        }
    }

    /// `⁻v`: the word without its first letter.
    pub fn drop_first(&self) -> Result<Word, WordError> {
        match self.0.split_first() {
            Some((_, rest)) => Ok(Word(rest.to_vec())),
            None => Err(WordError::Empty),
        }
    }

    /// `v₊`: the longest prefix of `v` immediately followed by the complement
    /// of the last letter of `v`.
    pub fn plus_prefix(&self) -> Result<Word, WordError> {
        let last = self.last().ok_or(WordError::Constant)?;
        let target = last.complement();
        let pos = self
            .0
            .iter()
            .rposition(|&l| l == target)
            .ok_or(WordError::Constant)?;
        Ok(self.prefix(pos))
    }

    /// `₊v`: the longest suffix of `v` immediately preceded by the complement
    /// of the first letter of `v`.
    pub fn plus_suffix(&self) -> Result<Word, WordError> {
        let first = self.first().ok_or(WordError::Constant)?;
        let target = first.complement();
        let pos = self
            .0
            .iter()
            .position(|&l| l == target)
            .ok_or(WordError::Constant)?;
        Ok(self.slice(pos + 1, self.len()))
    }

    /// `⟨w⟩`, the value of `w` read as a base-2 numeral.
    pub fn encode(&self) -> BigUint {
        let mut n = BigUint::zero();
        for &l in &self.0 {
            n <<= 1u32;
            if l == Letter::B {
                n += 1u32;
            }
        }
        n
    }

    /// `[n]₂`, the binary expansion of `n`; `decode(0)` is the single letter `a`.
    pub fn decode(n: &BigUint) -> Word {
        if n.is_zero() {
            return Word(vec![Letter::A]);
        }
        let bits = n.bits();
        Word(
            (0..bits)
                .rev()
                .map(|i| Letter::from_digit(n.bit(i)))
                .collect(),
        )
    }

    pub fn decode_u64(n: u64) -> Word {
        Word::decode(&BigUint::from(n))
    }

    /// All `2^len` words of length `len`, in lexicographic order.
    pub fn all_of_length(len: usize) -> impl Iterator<Item = Word> {
        assert!(len < 64, "too many words of length {len}");
        (0..1u64 << len).map(move |bits| {
            (0..len)
                .rev()
                .map(|i| Letter::from_digit(bits >> i & 1 == 1))
                .collect()
        })
    }

    /// All words of length at most `max_len`, shortest first.
    pub fn all_up_to(max_len: usize) -> impl Iterator<Item = Word> {
        (0..=max_len).flat_map(Word::all_of_length)
    }

    /// `|w|_u`: the number of positions at which the factor `u` starts.
    pub fn factor_count(&self, u: &Word) -> Result<usize, WordError> {
        if u.is_empty() {
            return Err(WordError::Empty);
        }
        Ok(self
            .0
            .windows(u.len())
            .filter(|w| *w == u.letters())
            .count())
    }

    /// Smallest `p ≥ 1` such that `w` has period `p`; `π(ε) = 1`.
    pub fn min_period(&self) -> usize {
        let n = self.len();
        if n == 0 {
            return 1;
        }
        // n minus the longest proper border
        let fail = failure_function(&self.0);
        n - fail[n - 1]
    }

    pub fn has_period(&self, p: usize) -> bool {
        p >= 1 && (p..self.len()).all(|i| self.0[i] == self.0[i - p])
    }

    /// Non-empty and strictly smaller than each of its proper suffixes.
    pub fn is_lyndon(&self) -> bool {
        !self.is_empty() && (1..self.len()).all(|i| self.0[..] < self.0[i..])
    }

    pub fn integral_rep(&self) -> IntegralRep {
        IntegralRep::of_word(self)
    }
}

/// Lexicographic comparison under `a < b`.
pub fn lex_compare(u: &Word, v: &Word) -> Ordering {
    u.cmp(v)
}

/// KMP failure function: `fail[i]` is the length of the longest proper border
/// of `s[..=i]`.
pub(crate) fn failure_function<T: PartialEq>(s: &[T]) -> Vec<usize> {
    let mut fail = vec![0; s.len()];
    let mut k = 0;
    for i in 1..s.len() {
        while k > 0 && s[i] != s[k] {
            k = fail[k - 1];
        }
        if s[i] == s[k] {
            k += 1;
        }
        fail[i] = k;
    }
    fail
}

impl Index<usize> for Word {
    type Output = Letter;

    fn index(&self, i: usize) -> &Letter {
        &self.0[i]
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Word {
        Word(letters)
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Word {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l.to_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            write!(f, "ε")
        } else {
            write!(f, "{self}")
        }
    }
}

/// Parses `a`/`b` strings, the digit aliases `0`/`1`, and `eps` or the empty
/// string for `ε`.
impl FromStr for Word {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Word, WordError> {
        let s = s.trim();
        if s == "eps" || s == "ε" {
            return Ok(Word::empty());
        }
        s.chars().map(Letter::from_char).collect()
    }
}

/// Run-length form `(a₀, a₁, …, a_n)` of `b^{a₀} a^{a₁} b^{a₂} ⋯ a^{a_{n−1}} b^{a_n}`.
///
/// `n` is even, the interior entries are positive, the two ends may be zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntegralRep(Vec<usize>);

impl IntegralRep {
    pub fn new(runs: Vec<usize>) -> Result<IntegralRep, WordError> {
        if runs.len().is_multiple_of(2) {
            return Err(WordError::MalformedRep("odd number of runs expected"));
        }
        let n = runs.len() - 1;
        if n > 0 && runs[1..n].contains(&0) {
            return Err(WordError::MalformedRep("interior run of length zero"));
        }
        Ok(IntegralRep(runs))
    }

    pub fn of_word(w: &Word) -> IntegralRep {
        let mut runs = Vec::new();
        let mut current = Letter::B;
        let mut len = 0;
        for &l in w.letters() {
            if l == current {
                len += 1;
            } else {
                runs.push(len);
                current = l;
                len = 1;
            }
        }
        runs.push(len);
        // must end on a b-run
        if current == Letter::A {
            runs.push(0);
        }
        IntegralRep(runs)
    }

    pub fn runs(&self) -> &[usize] {
        &self.0
    }

    /// The index `n` of the last entry (always even).
    pub fn n(&self) -> usize {
        self.0.len() - 1
    }

    /// Drops a trailing zero `a_n` when `n > 0`.
    pub fn reduced(&self) -> &[usize] {
        let n = self.n();
        if n > 0 && self.0[n] == 0 {
            &self.0[..n]
        } else {
            &self.0
        }
    }

    pub fn to_word(&self) -> Word {
        let mut letters = Vec::with_capacity(self.0.iter().sum());
        for (i, &run) in self.0.iter().enumerate() {
            let letter = if i % 2 == 0 { Letter::B } else { Letter::A };
            letters.extend(std::iter::repeat_n(letter, run));
        }
        Word(letters)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Word, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

/// Serde adapter writing big integers as decimal strings.
pub mod decimal {
    use num_bigint::BigUint;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(n: &BigUint, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(n)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<BigUint, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

/// Strictly increasing 1-based positions `j₁ < ⋯ < j_m` witnessing a subword
/// embedding.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Occurrence {
    pub positions: Vec<usize>,
}

impl Occurrence {
    pub fn is_initial(&self) -> bool {
        self.positions.first() == Some(&1)
    }

    pub fn is_final(&self, host_len: usize) -> bool {
        self.positions.last() == Some(&host_len)
    }

    pub fn reversed(&self) -> Vec<usize> {
        self.positions.iter().rev().copied().collect()
    }
}

impl fmt::Display for Occurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.positions.iter().map(|p| p.to_string()).collect();
        // single-digit hosts print compactly, like 12357
        if self.positions.iter().all(|&p| p < 10) {
            write!(f, "{}", parts.concat())
        } else {
            write!(f, "{}", parts.join("."))
        }
    }
}

/// Binomial coefficient of words: the number of occurrences of `u` as a
/// (scattered) subword of `w`.
pub fn subword_binomial(w: &Word, u: &Word) -> BigUint {
    // counts[j] = occurrences of u[..j] in the prefix of w read so far
    let m = u.len();
    let mut counts = vec![BigUint::zero(); m + 1];
    counts[0] = BigUint::one();
    for &letter in w.letters() {
        for j in (1..=m).rev() {
            if u[j - 1] == letter && !counts[j - 1].is_zero() {
                let add = counts[j - 1].clone();
                counts[j] += add;
            }
        }
    }
    counts.swap_remove(m)
}

/// Lazy enumeration of all occurrences of `u` in `w`, in increasing
/// lexicographic order of position tuples.
pub struct Occurrences<'a> {
    host: &'a [Letter],
    pattern: &'a [Letter],
    // 0-based positions of the current partial match
    stack: Vec<usize>,
    started: bool,
    done: bool,
}

impl<'a> Occurrences<'a> {
    pub fn new(w: &'a Word, u: &'a Word) -> Occurrences<'a> {
        Occurrences {
            host: w.letters(),
            pattern: u.letters(),
            stack: Vec::with_capacity(u.len()),
            started: false,
            done: u.len() > w.len(),
        }
    }

    fn find_from(&self, level: usize, from: usize) -> Option<usize> {
        // leave room for the remaining pattern letters
        let remaining = self.pattern.len() - level - 1;
        let limit = self.host.len().checked_sub(remaining)?;
        (from..limit).find(|&i| self.host[i] == self.pattern[level])
    }

    /// Extends the stack to a full match, starting the search for the next
    /// level at `from`; backtracks as needed.
    fn advance(&mut self, mut from: usize) -> bool {
        loop {
            let level = self.stack.len();
            if level == self.pattern.len() {
                return true;
            }
            match self.find_from(level, from) {
                Some(i) => {
                    self.stack.push(i);
                    from = i + 1;
                }
                None => match self.stack.pop() {
                    Some(prev) => from = prev + 1,
                    None => return false,
                },
            }
        }
    }
}

impl Iterator for Occurrences<'_> {
    type Item = Occurrence;

    fn next(&mut self) -> Option<Occurrence> {
        if self.done {
            return None;
        }
        let found = if !self.started {
            self.started = true;
            if self.pattern.is_empty() {
                self.done = true;
                return Some(Occurrence {
                    positions: Vec::new(),
                });
            }
            self.advance(0)
        } else {
            let last = self.stack.pop().expect("a match was emitted");
            self.advance(last + 1)
        };
        if found {
            Some(Occurrence {
                positions: self.stack.iter().map(|&i| i + 1).collect(),
            })
        } else {
            self.done = true;
            None
        }
    }
}

/// All occurrences of `u` in `w`, refusing to materialize more than `cap`.
pub fn subword_occurrences(w: &Word, u: &Word, cap: usize) -> Result<Vec<Occurrence>, WordError> {
    let count = subword_binomial(w, u);
    if count > BigUint::from(cap) {
        return Err(WordError::TooManyOccurrences { count, cap });
    }
    Ok(Occurrences::new(w, u).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn complement_and_reverse() {
        assert_eq!(w("").complement(), w(""));
        assert_eq!(w("ab").complement(), w("ba"));
        assert_eq!(w("abbaa").complement(), w("baabb"));
        assert_eq!(w("aab").reverse(), w("baa"));
        assert_eq!(w("abba").reverse(), w("abba"));
    }

    #[test]
    fn drop_and_plus() {
        let v = w("abbabab");
        assert_eq!(v.drop_last().unwrap(), w("abbaba"));
        assert_eq!(v.drop_first().unwrap(), w("bbabab"));
        assert_eq!(v.plus_prefix().unwrap(), w("abbab"));
        assert_eq!(v.plus_suffix().unwrap(), w("babab"));
        assert_eq!(w("a").drop_last().unwrap(), w(""));
        assert_eq!(w("").drop_last(), Err(WordError::Empty));
        assert_eq!(w("").drop_first(), Err(WordError::Empty));
        assert_eq!(w("aaa").plus_prefix(), Err(WordError::Constant));
        assert_eq!(w("").plus_suffix(), Err(WordError::Constant));
    }

    #[test]
    fn plus_prefix_of_ab_is_empty() {
        // brute force: longest prefix p with v[|p|] == complement(last)
        let v = w("ab");
        let target = v.last().unwrap().complement();
        let brute = (0..v.len())
            .filter(|&i| v[i] == target)
            .map(|i| v.prefix(i))
            .max_by_key(|p| p.len())
            .unwrap();
        assert_eq!(brute, w(""));
        assert_eq!(v.plus_prefix().unwrap(), brute);
    }

    #[test]
    fn integral_representation() {
        assert_eq!(w("bbabaa").integral_rep().runs(), &[2, 1, 1, 2, 0]);
        assert_eq!(w("aaabab").integral_rep().runs(), &[0, 3, 1, 1, 1]);
        assert_eq!(w("aaaba").integral_rep().runs(), &[0, 3, 1, 1, 0]);
        assert_eq!(w("aaababb").integral_rep().runs(), &[0, 3, 1, 1, 2]);
        assert_eq!(w("").integral_rep().runs(), &[0]);
        assert_eq!(
            IntegralRep::new(vec![0, 3, 1, 1, 2]).unwrap().to_word(),
            w("aaababb")
        );
        assert!(IntegralRep::new(vec![1, 0, 1]).is_err());
        assert!(IntegralRep::new(vec![1, 1]).is_err());
        assert!(IntegralRep::new(vec![]).is_err());
    }

    #[test]
    fn binary_encoding() {
        assert_eq!(w("baaba").encode(), BigUint::from(18u32));
        assert_eq!(Word::decode_u64(21), w("babab"));
        assert_eq!(w("a").encode(), BigUint::zero());
        assert_eq!(w("b").encode(), BigUint::one());
        assert_eq!(Word::decode_u64(0), w("a"));
        assert_eq!(Word::decode_u64(1), w("b"));
    }

    #[test]
    fn factor_counts() {
        assert_eq!(w("bababab").factor_count(&w("bab")).unwrap(), 3);
        assert_eq!(w("bababab").factor_count(&w("b")).unwrap(), 4);
        assert_eq!(w("aaa").factor_count(&w("aa")).unwrap(), 2);
        assert_eq!(w("aaa").factor_count(&w("")), Err(WordError::Empty));
    }

    #[test]
    fn subword_counts_small() {
        assert_eq!(subword_binomial(&w("abba"), &w("")), BigUint::one());
        assert_eq!(subword_binomial(&w(""), &w("")), BigUint::one());
        assert_eq!(subword_binomial(&w("bab"), &w("b")), BigUint::from(2u32));
        assert_eq!(subword_binomial(&w("ab"), &w("abb")), BigUint::zero());
    }

    #[test]
    fn occurrences_listing() {
        let occ = subword_occurrences(&w("ab"), &w("ab"), 10).unwrap();
        assert_eq!(
            occ,
            vec![Occurrence {
                positions: vec![1, 2]
            }]
        );
        let occ = subword_occurrences(&w("babbaab"), &w("b"), 10).unwrap();
        let pos: Vec<Vec<usize>> = occ.into_iter().map(|o| o.positions).collect();
        assert_eq!(pos, vec![vec![1], vec![3], vec![4], vec![7]]);
        let occ = subword_occurrences(&w("ab"), &w(""), 10).unwrap();
        assert_eq!(occ.len(), 1);
        assert!(subword_occurrences(&w("ab"), &w("aab"), 10)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn occurrence_cap_is_enforced() {
        let host = Word::repeat(Letter::A, 40);
        let pattern = Word::repeat(Letter::A, 20);
        match subword_occurrences(&host, &pattern, 1000) {
            Err(WordError::TooManyOccurrences { count, cap }) => {
                assert_eq!(cap, 1000);
                assert_eq!(count, BigUint::from(137_846_528_820u64));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn initial_occurrences_of_bab_in_babbaab() {
        let occ = subword_occurrences(&w("babbaab"), &w("bab"), 100).unwrap();
        let initial: Vec<String> = occ
            .iter()
            .filter(|o| o.is_initial())
            .map(|o| o.to_string())
            .collect();
        assert_eq!(initial, vec!["123", "124", "127", "157", "167"]);
        assert!(occ.iter().any(|o| o.is_final(7)));
    }

    #[test]
    fn periods() {
        assert_eq!(w("abaabaaba").min_period(), 3);
        assert_eq!(w("").min_period(), 1);
        assert_eq!(w("aa").min_period(), 1);
        assert_eq!(w("ab").min_period(), 2);
        assert!(w("abaabaaba").has_period(8));
    }

    #[test]
    fn lyndon_words() {
        assert!(w("aab").is_lyndon());
        assert!(!w("aa").is_lyndon());
        assert!(w("b").is_lyndon());
        assert!(!w("").is_lyndon());
        assert!(w("aabaabab").is_lyndon());
        assert!(!w("aba").is_lyndon());
        assert_eq!(lex_compare(&w("ab"), &w("abb")), Ordering::Less);
        assert_eq!(lex_compare(&w("b"), &w("abb")), Ordering::Greater);
    }

    #[test]
    fn parsing() {
        assert_eq!(w("eps"), Word::empty());
        assert_eq!(w(""), Word::empty());
        assert_eq!("0110".parse::<Word>().unwrap(), w("abba"));
        assert_eq!("abc".parse::<Word>(), Err(WordError::InvalidLetter('c')));
    }
}
