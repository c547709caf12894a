//! Central, standard and Christoffel words.
//!
//! Proper Christoffel words are exactly the words `aψ(v)b`; together with
//! the single letters `a` (slope `0/1`) and `b` (slope `1/0`) they form the
//! whole class. Two independent constructions are provided: the modular
//! one from a slope, and the one through the palindromization map.

use std::cmp::Ordering;

use num_bigint::BigUint;
use num_integer::Integer;
use thiserror::Error;

use crate::frac::Frac;
use crate::palindrome::{
    christoffel_len, period_pair, psi, psi_inverse, PsiError, DEFAULT_PSI_BUDGET,
};
use crate::tree;
use crate::word::{Letter, Word, WordError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChristoffelError {
    #[error("slope {0}/{1} not irreducible")]
    NotIrreducible(u64, u64),
    #[error("slope {0}/{1} is too large to materialize")]
    TooLong(u64, u64),
    #[error("{0} is not a Christoffel word")]
    NotChristoffel(Word),
    #[error("the one-letter Christoffel word {0} has no directive word")]
    Improper(Word),
    #[error("invalid coefficient c_{index} = {value}")]
    InvalidCoefficient { index: usize, value: i64 },
    #[error("{needed} coefficients needed, {given} given")]
    MissingCoefficients { needed: usize, given: usize },
    #[error(transparent)]
    Psi(#[from] PsiError),
    #[error(transparent)]
    Word(#[from] WordError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChristoffelWord {
    pub word: Word,
    /// `|w|_b / |w|_a`.
    pub slope: Frac,
    /// `v` with `word = aψ(v)b`; absent for the one-letter words.
    pub directive: Option<Word>,
}

impl ChristoffelWord {
    pub fn letter(x: Letter) -> ChristoffelWord {
        let slope = match x {
            Letter::A => Frac::from_u64(0, 1),
            Letter::B => Frac::from_u64(1, 0),
        }
        .expect("0/1 and 1/0 are irreducible");
        ChristoffelWord {
            word: Word::repeat(x, 1),
            slope,
            directive: None,
        }
    }

    pub fn is_proper(&self) -> bool {
        self.directive.is_some()
    }

    /// `|v|` for `aψ(v)b`.
    pub fn order(&self) -> Option<usize> {
        self.directive.as_ref().map(Word::len)
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }
}

/// The Christoffel word of slope `p/q` (`p = |w|_b`, `q = |w|_a`), letter by
/// letter: with `n = p + q`, the `i`-th letter is `a` when
/// `ip mod n > (i−1)p mod n` and `b` otherwise.
pub fn christoffel_by_slope(p: u64, q: u64) -> Result<ChristoffelWord, ChristoffelError> {
    if p.gcd(&q) != 1 {
        return Err(ChristoffelError::NotIrreducible(p, q));
    }
    if p == 0 {
        return Ok(ChristoffelWord::letter(Letter::A));
    }
    if q == 0 {
        return Ok(ChristoffelWord::letter(Letter::B));
    }
    let n = p
        .checked_add(q)
        .filter(|&n| n <= DEFAULT_PSI_BUDGET as u64)
        .ok_or(ChristoffelError::TooLong(p, q))?;
    let len = n as usize;
    let mut letters = Vec::with_capacity(len);
    let mut prev = 0u64;
    for _ in 0..n {
        // (prev + p) mod n without overflow
        let next = if prev >= n - p {
            prev - (n - p)
        } else {
            prev + p
        };
        letters.push(if next > prev { Letter::A } else { Letter::B });
        prev = next;
    }
    let word = Word::from_letters(letters);
    let directive = Some(psi_inverse(&word.slice(1, len - 1))?);
    Ok(ChristoffelWord {
        word,
        slope: Frac::from_u64(p, q).expect("checked coprime"),
        directive,
    })
}

/// `aψ(v)b`, with slope read off the Stern-Brocot tree.
pub fn christoffel_by_directive(v: &Word) -> Result<ChristoffelWord, ChristoffelError> {
    let word = psi(v)?.wrap(Letter::A, Letter::B);
    Ok(ChristoffelWord {
        word,
        slope: tree::stern_brocot(v),
        directive: Some(v.clone()),
    })
}

/// The directive `v` of a proper Christoffel word `aψ(v)b`.
pub fn directive_of(w: &Word) -> Result<Word, ChristoffelError> {
    if w.len() == 1 {
        return Err(ChristoffelError::Improper(w.clone()));
    }
    let not_christoffel = || ChristoffelError::NotChristoffel(w.clone());
    if w.len() < 2 || w.first() != Some(Letter::A) || w.last() != Some(Letter::B) {
        return Err(not_christoffel());
    }
    psi_inverse(&w.slice(1, w.len() - 1)).map_err(|_| not_christoffel())
}

/// Recognizes any Christoffel word, proper or not.
pub fn recognize(w: &Word) -> Option<ChristoffelWord> {
    if w.len() == 1 {
        return Some(ChristoffelWord::letter(w[0]));
    }
    let v = directive_of(w).ok()?;
    let slope = Frac::reduced(w.count(Letter::B).into(), w.count(Letter::A).into());
    Some(ChristoffelWord {
        word: w.clone(),
        slope,
        directive: Some(v),
    })
}

/// Central words are the images `ψ(v)`.
pub fn is_central(w: &Word) -> bool {
    psi_inverse(w).is_ok()
}

/// Standard words: single letters and `ψ(v)ab`, `ψ(v)ba`.
pub fn is_standard(w: &Word) -> bool {
    let n = w.len();
    match n {
        0 => false,
        1 => true,
        _ => w[n - 2] != w[n - 1] && is_central(&w.prefix(n - 2)),
    }
}

pub fn is_christoffel(w: &Word) -> bool {
    recognize(w).is_some()
}

/// The standard factorization of a proper Christoffel word into two
/// Christoffel (Lyndon) words `w₁ ≺ w₂`.
///
/// For non-constant `v` the factors are `(aψ(v₊)b, aψ(v⁻)b)` when `v` ends
/// with `a` and `(aψ(v⁻)b, aψ(v₊)b)` when it ends with `b`. For constant
/// directives the factorization is `(a, a^h b)` or `(ab^h, b)`.
pub fn lyndon_factorization(
    w: &ChristoffelWord,
) -> Result<(ChristoffelWord, ChristoffelWord), ChristoffelError> {
    let v = w
        .directive
        .as_ref()
        .ok_or_else(|| ChristoffelError::Improper(w.word.clone()))?;
    if v.is_constant() {
        let h = v.len();
        return match v.first() {
            Some(Letter::B) => Ok((
                christoffel_by_directive(&Word::repeat(Letter::B, h - 1))?,
                ChristoffelWord::letter(Letter::B),
            )),
            _ if h == 0 => Ok((
                ChristoffelWord::letter(Letter::A),
                ChristoffelWord::letter(Letter::B),
            )),
            _ => Ok((
                ChristoffelWord::letter(Letter::A),
                christoffel_by_directive(&Word::repeat(Letter::A, h - 1))?,
            )),
        };
    }
    let shorter = christoffel_by_directive(&v.plus_prefix()?)?;
    let longer = christoffel_by_directive(&v.drop_last()?)?;
    match v.last() {
        Some(Letter::A) => Ok((shorter, longer)),
        _ => Ok((longer, shorter)),
    }
}

/// The sequence `s₋₁ = b`, `s₀ = a`, `sₙ = sₙ₋₁^{cₙ} sₙ₋₂`, truncated to
/// `count` words. Requires `c₁ ≥ 0` and `cᵢ > 0` for `i > 1`.
pub fn standard_by_coefficients(c: &[i64], count: usize) -> Result<Vec<Word>, ChristoffelError> {
    let needed = count.saturating_sub(2);
    if c.len() < needed {
        return Err(ChristoffelError::MissingCoefficients {
            needed,
            given: c.len(),
        });
    }
    for (i, &ci) in c.iter().enumerate().take(needed) {
        let index = i + 1;
        if ci < 0 || (index > 1 && ci == 0) {
            return Err(ChristoffelError::InvalidCoefficient { index, value: ci });
        }
    }
    let mut out = vec![Word::repeat(Letter::B, 1), Word::repeat(Letter::A, 1)];
    out.truncate(count);
    for &ci in &c[..needed] {
        let n = out.len();
        let mut next = Vec::new();
        for _ in 0..ci {
            next.extend_from_slice(out[n - 1].letters());
        }
        next.extend_from_slice(out[n - 2].letters());
        out.push(Word::from_letters(next));
    }
    Ok(out)
}

/// Compares `|aψ(va)b|` with `|aψ(vb)b|`: less exactly when `v` ends with
/// `a`, greater exactly when it ends with `b`.
pub fn length_compare_extension(v: &Word) -> Result<Ordering, ChristoffelError> {
    if v.is_empty() {
        return Err(WordError::Empty.into());
    }
    let mut va = v.clone();
    va.push(Letter::A);
    let mut vb = v.clone();
    vb.push(Letter::B);
    Ok(christoffel_len(&va).cmp(&christoffel_len(&vb)))
}

/// `(|w₁|, |w₂|)` of the standard factorization as given by the period pair:
/// `|w₁| = p_a(v)` and `|w₂| = p_b(v)`.
pub fn factor_lengths(v: &Word) -> (BigUint, BigUint) {
    let pp = period_pair(v);
    (pp.p_a, pp.p_b)
}
