//! Stern's diatomic sequence and its subword-counting evaluators.
//!
//! `s(0) = 0`, `s(1) = 1`, `s(2n) = s(n)`, `s(2n+1) = s(n) + s(n+1)`.

use std::collections::BTreeMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::continuant::{continuant, continuant_nat};
use crate::palindrome::period_pair;
use crate::word::{Letter, Occurrence, Word, WordError};

/// Values of `s` below this index are memoized in a shared table.
pub const STERN_TABLE_SIZE: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SternError {
    #[error("{name} is defined for n >= {min}, got {n}")]
    OutOfDomain {
        name: &'static str,
        min: u64,
        n: u64,
    },
    #[error("{predicted} occurrences exceed the cap {cap}")]
    TooManyOccurrences { predicted: BigUint, cap: usize },
    #[error(transparent)]
    Word(#[from] WordError),
}

fn cache() -> &'static RwLock<Vec<u32>> {
    static CACHE: OnceLock<RwLock<Vec<u32>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(vec![0, 1]))
}

/// Looks `n < STERN_TABLE_SIZE` up in the shared table, growing it by
/// doubling when needed.
fn cached(n: usize) -> u32 {
    {
        let table = cache().read().unwrap_or_else(|e| e.into_inner());
        if let Some(&v) = table.get(n) {
            return v;
        }
    }
    let mut table = cache().write().unwrap_or_else(|e| e.into_inner());
    let target = (n + 1).max(2 * table.len()).min(STERN_TABLE_SIZE);
    for m in table.len()..target {
        let v = if m % 2 == 0 {
            table[m / 2]
        } else {
            table[m / 2] + table[m / 2 + 1]
        };
        table.push(v);
    }
    table[n]
}

/// `(s(m), s(m+1))` by reading the bits of `m` from the top.
fn descent<I: Iterator<Item = bool>>(bits: I) -> (BigUint, BigUint) {
    let mut lo = BigUint::zero();
    let mut hi = BigUint::one();
    for bit in bits {
        if bit {
            lo += &hi;
        } else {
            hi += &lo;
        }
    }
    (lo, hi)
}

pub fn stern(n: &BigUint) -> BigUint {
    if let Some(m) = n.to_usize().filter(|&m| m < STERN_TABLE_SIZE) {
        return BigUint::from(cached(m));
    }
    let bits = n.bits();
    descent((0..bits).rev().map(|i| n.bit(i))).0
}

pub fn stern_u64(n: u64) -> u64 {
    if (n as usize) < STERN_TABLE_SIZE {
        return cached(n as usize) as u64;
    }
    let (mut lo, mut hi) = (0u64, 1u64);
    for i in (0..64 - n.leading_zeros()).rev() {
        if n >> i & 1 == 1 {
            lo += hi;
        } else {
            hi += lo;
        }
    }
    lo
}

/// `s(0), …, s(len − 1)`.
pub fn stern_prefix(len: usize) -> Vec<u64> {
    (0..len as u64).map(stern_u64).collect()
}

/// Evaluates `s(n)` as a Christoffel length: for odd `n = ⟨bwb⟩` the value
/// is `|aψ(w)b| = p_a(w) + p_b(w)`, and even arguments are halved first.
pub fn stern_via_christoffel(n: &BigUint) -> BigUint {
    if n.is_zero() {
        return BigUint::zero();
    }
    let m = n >> n.trailing_zeros().unwrap_or(0);
    if m.is_one() {
        return BigUint::one();
    }
    let bits = m.bits();
    let w: Word = (1..bits - 1)
        .rev()
        .map(|i| Letter::from_digit(m.bit(i)))
        .collect();
    period_pair(&w).christoffel_len()
}

/// Counts occurrences of words of `b(ab)*` as subwords of the letter
/// sequence. With `initial_only`, only occurrences that start at the first
/// position are counted.
fn alternating_subword_count<I>(letters: I, initial_only: bool) -> BigUint
where
    I: IntoIterator<Item = Letter>,
{
    // end_b: partial occurrences whose last matched letter is b (complete)
    // end_a: partial occurrences whose last matched letter is a
    let mut end_b = BigUint::zero();
    let mut end_a = BigUint::zero();
    for (i, x) in letters.into_iter().enumerate() {
        match x {
            Letter::B => {
                let mut fresh = end_a.clone();
                if !initial_only || i == 0 {
                    fresh += 1u32;
                }
                end_b += fresh;
            }
            Letter::A => end_a += &end_b,
        }
    }
    end_b
}

/// `Σ_{u ∈ b(ab)*} binom(w, u)`.
pub fn alternating_subwords(w: &Word) -> BigUint {
    alternating_subword_count(w.letters().iter().copied(), false)
}

/// `s(n)` as the number of occurrences of words of `b(ab)*` in `[n]₂`.
pub fn stern_via_subwords(n: &BigUint) -> BigUint {
    let bits = n.bits();
    alternating_subword_count((0..bits).rev().map(|i| Letter::from_digit(n.bit(i))), false)
}

/// 2-adic valuation `e(n)`.
pub fn ruler(n: u64) -> Result<u32, SternError> {
    if n == 0 {
        return Err(SternError::OutOfDomain {
            name: "ruler",
            min: 1,
            n,
        });
    }
    Ok(n.trailing_zeros())
}

/// `ζ(n) = (−1)^{n+1} (2e(n) + 1)`.
pub fn zeta(n: u64) -> Result<i64, SternError> {
    let e = ruler(n).map_err(|_| SternError::OutOfDomain {
        name: "zeta",
        min: 1,
        n,
    })?;
    let magnitude = 2 * e as i64 + 1;
    Ok(if n % 2 == 1 { magnitude } else { -magnitude })
}

/// `s(n) = (−1)^{⌊(n−1)/2⌋} K[ζ₁, …, ζ_{n−1}]` for `n ≥ 2`.
pub fn stern_via_zeta(n: u64) -> Result<BigInt, SternError> {
    if n < 2 {
        return Err(SternError::OutOfDomain {
            name: "stern_via_zeta",
            min: 2,
            n,
        });
    }
    let zs: Vec<i64> = (1..n).map(|i| zeta(i).expect("i >= 1")).collect();
    let k = continuant(&zs);
    Ok(if ((n - 1) / 2).is_multiple_of(2) {
        k
    } else {
        -k
    })
}

/// `s(ν(w)) = K[a₀+1, a₁, …, a_{n−1}]` on the integral representation of `w`;
/// words `b^m` (with `n = 0`) give `s(2^{m+1}) = 1`.
pub fn stern_via_integral_continuant(w: &Word) -> BigUint {
    let rep = w.integral_rep();
    let runs = rep.runs();
    let n = rep.n();
    if n == 0 {
        return BigUint::one();
    }
    let mut xs = runs[..n].to_vec();
    xs[0] += 1;
    continuant_nat(&xs)
}

/// Bit reversal `R(n)`, the value of the reversed binary expansion.
pub fn reverse_bits(n: &BigUint) -> BigUint {
    let bits = n.bits();
    let mut r = BigUint::zero();
    for i in 0..bits {
        r <<= 1u32;
        if n.bit(i) {
            r += 1u32;
        }
    }
    r
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeltaExpansion {
    pub n: u64,
    /// `L(n) = ⌈log₂ n⌉ − 1`.
    pub l: u32,
    pub deltas: Vec<u64>,
    /// `s(2^{k−1} + δ_k(n))` for `k = 1, …, L(n)`.
    pub terms: Vec<u64>,
}

impl DeltaExpansion {
    /// `2 + Σ terms`, which should equal `s(2n − 1)`.
    pub fn total(&self) -> u64 {
        2 + self.terms.iter().sum::<u64>()
    }
}

pub fn delta_expansion(n: u64) -> Result<DeltaExpansion, SternError> {
    if n < 2 {
        return Err(SternError::OutOfDomain {
            name: "delta_expansion",
            min: 2,
            n,
        });
    }
    let l = 64 - (n - 1).leading_zeros() - 1;
    let x = n - (1u64 << l) - 1;
    let deltas: Vec<u64> = (1..=l)
        .map(|k| (x >> (l - k)) - (x >> (l - k + 1)))
        .collect();
    let terms = deltas
        .iter()
        .enumerate()
        .map(|(i, &d)| stern_u64((1u64 << i) + d))
        .collect();
    Ok(DeltaExpansion {
        n,
        l,
        deltas,
        terms,
    })
}

/// Right-hand side of the Coons-Shallit formula:
/// `α_b(n) + Σ_{w ∈ bA*} s(⟨w̄⟩) α_{wb}(n)`.
pub fn coons_shallit_sum(n: u64) -> u64 {
    let bits: Vec<bool> = (0..64 - n.leading_zeros())
        .rev()
        .map(|i| n >> i & 1 == 1)
        .collect();
    let mut total = 0u64;
    for i in 0..bits.len() {
        if !bits[i] {
            continue;
        }
        total += 1;
        // ⟨w̄⟩ for w = bits[i..j]
        let mut complement = 0u64;
        for &bit in &bits[i + 1..] {
            if bit {
                total += stern_u64(complement);
            }
            complement = complement << 1 | u64::from(!bit);
        }
    }
    total
}

pub fn coons_shallit_check(n: u64) -> bool {
    coons_shallit_sum(n) == stern_u64(n)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Gamma2Term {
    pub factor: Word,
    pub inner: Word,
    #[serde(with = "crate::word::decimal")]
    pub weight: BigUint,
    pub count: usize,
}

/// Factor statistics of `bwb` whose weighted total is `|aψ(w)b|`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CSDecomposition {
    pub base: usize,
    pub gamma1_terms: Vec<(Word, usize)>,
    pub gamma2_terms: Vec<Gamma2Term>,
}

impl CSDecomposition {
    pub fn total(&self) -> BigUint {
        let mut t = BigUint::from(self.base);
        for (_, c) in &self.gamma1_terms {
            t += *c;
        }
        for term in &self.gamma2_terms {
            t += &term.weight * term.count;
        }
        t
    }
}

pub fn cs_decompose(w: &Word) -> CSDecomposition {
    let host = w.wrap(Letter::B, Letter::B);
    let letters = host.letters();
    let mut counts: BTreeMap<Word, usize> = BTreeMap::new();
    for i in 0..letters.len() {
        if letters[i] != Letter::B {
            continue;
        }
        let mut a_seen = 0usize;
        for (j, &letter) in letters.iter().enumerate().skip(i + 1) {
            match letter {
                Letter::A => a_seen += 1,
                Letter::B if a_seen > 0 => {
                    *counts.entry(host.slice(i, j + 1)).or_default() += 1;
                }
                Letter::B => {}
            }
        }
    }
    let mut gamma1_terms = Vec::new();
    let mut gamma2_terms = Vec::new();
    for (factor, count) in counts {
        let fl = factor.letters();
        let first_a = fl.iter().position(|&x| x == Letter::A).expect("has an a");
        let last_a = fl.iter().rposition(|&x| x == Letter::A).expect("has an a");
        if first_a == last_a {
            gamma1_terms.push((factor, count));
        } else {
            let inner = factor.slice(first_a + 1, last_a);
            let weight = period_pair(&inner).christoffel_len();
            gamma2_terms.push(Gamma2Term {
                factor,
                inner,
                weight,
                count,
            });
        }
    }
    CSDecomposition {
        base: host.count(Letter::B),
        gamma1_terms,
        gamma2_terms,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MarkedOccurrence {
    pub occurrence: Occurrence,
    pub reversed_key: Vec<usize>,
    pub marker: Letter,
}

/// Occurrences of all words of `b(ab)*` in `bwb`, sorted by decreasing
/// reversed position tuple (a proper prefix sorts below its extensions),
/// each marked `a` when it starts at position 1 and `b` otherwise.
///
/// The marker word equals `ψ(w)ba`.
pub fn noncommutative_cw(
    w: &Word,
    cap: usize,
) -> Result<(Word, Vec<MarkedOccurrence>), SternError> {
    let predicted = cw_length(w);
    if predicted > BigUint::from(cap) {
        return Err(SternError::TooManyOccurrences { predicted, cap });
    }
    let host = w.wrap(Letter::B, Letter::B);
    let letters = host.letters();
    let mut keys: Vec<Vec<usize>> = Vec::with_capacity(predicted.to_usize().unwrap_or(0));
    let mut stack: Vec<usize> = Vec::new();
    collect_alternating(letters, 0, Letter::B, &mut stack, &mut keys);
    keys.sort_unstable_by(|x, y| y.cmp(x));
    let mut markers = Vec::with_capacity(keys.len());
    let trace = keys
        .into_iter()
        .map(|reversed_key| {
            let marker = if reversed_key.last() == Some(&1) {
                Letter::A
            } else {
                Letter::B
            };
            markers.push(marker);
            let positions = reversed_key.iter().rev().copied().collect();
            MarkedOccurrence {
                occurrence: Occurrence { positions },
                reversed_key,
                marker,
            }
        })
        .collect();
    Ok((Word::from_letters(markers), trace))
}

/// Extends the partial occurrence in `stack` (1-based positions) by a
/// position `≥ from` holding `want`, recording reversed tuples of complete
/// occurrences.
fn collect_alternating(
    host: &[Letter],
    from: usize,
    want: Letter,
    stack: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    for i in from..host.len() {
        if host[i] != want {
            continue;
        }
        stack.push(i + 1);
        if want == Letter::B {
            out.push(stack.iter().rev().copied().collect());
        }
        collect_alternating(host, i + 1, want.complement(), stack, out);
        stack.pop();
    }
}

/// Number of occurrences of words of `b(ab)*` in `bvb` starting at the first
/// position; equals `|aψ(v)b|_a`.
pub fn initial_subword_count(v: &Word) -> BigUint {
    alternating_subword_count(v.wrap(Letter::B, Letter::B).into_letters(), true)
}

/// `Σ_{u ∈ b(ab)*} binom(bvb, u) = |aψ(v)b|`.
pub fn cw_length(v: &Word) -> BigUint {
    alternating_subwords(&v.wrap(Letter::B, Letter::B))
}

/// `Σ_{u ∈ b(ab)*} binom(bv₊b, u) = π(ψ(v))` for non-constant `v`.
pub fn cw_period(v: &Word) -> Result<BigUint, SternError> {
    let plus = v.plus_prefix()?;
    Ok(cw_length(&plus))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::palindrome::{min_period_central, psi};
    use crate::word::subword_occurrences;

    const PREFIX: [u64; 33] = [
        0, 1, 1, 2, 1, 3, 2, 3, 1, 4, 3, 5, 2, 5, 3, 4, 1, 5, 4, 7, 3, 8, 5, 7, 2, 7, 5, 8, 3, 7,
        4, 5, 1,
    ];

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    fn all_words(max_len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        let mut start = 0;
        for _ in 0..max_len {
            let end = out.len();
            for i in start..end {
                for x in Letter::ALL {
                    let mut v = out[i].clone();
                    v.push(x);
                    out.push(v);
                }
            }
            start = end;
        }
        out
    }

    /// Recursion straight from the definition, no table.
    fn stern_naive(n: u64) -> u64 {
        match n {
            0 => 0,
            1 => 1,
            _ if n.is_multiple_of(2) => stern_naive(n / 2),
            _ => stern_naive(n / 2) + stern_naive(n / 2 + 1),
        }
    }

    /// Brute-force count of increasing index tuples spelling a word of
    /// `b(ab)*`.
    fn alternating_brute(bits: &[bool]) -> u64 {
        fn go(bits: &[bool], from: usize, want: bool) -> u64 {
            let mut c = 0;
            for i in from..bits.len() {
                if bits[i] == want {
                    if want {
                        c += 1;
                    }
                    c += go(bits, i + 1, !want);
                }
            }
            c
        }
        go(bits, 0, true)
    }

    #[test]
    fn prefix_and_powers() {
        assert_eq!(stern_prefix(33), PREFIX);
        for k in 0..=30 {
            assert_eq!(stern_u64(1 << k), 1);
            assert_eq!(stern(&(big(1) << k)), big(1));
        }
        assert_eq!(stern_u64(23), 7);
        for n in 0..5000 {
            assert_eq!(stern_u64(n), stern_naive(n));
        }
    }

    #[test]
    fn descent_beyond_table() {
        for n in [STERN_TABLE_SIZE as u64, 3 << 20, (1 << 21) + 12345] {
            let via_big = stern(&big(n)).to_u64().unwrap();
            assert_eq!(stern_u64(n), via_big);
            assert_eq!(via_big, stern_naive(n), "{n}");
        }
        // 1010…101 is b(ab)^31, whose value is a Fibonacci number
        let n = u64::MAX / 3;
        assert_eq!(stern_u64(n), crate::continuant::fib_u64(62));
        assert_eq!(stern(&big(n)), big(crate::continuant::fib_u64(62)));
        let huge = (big(1) << 200u32) + 1u32;
        assert_eq!(stern(&huge), big(201));
    }

    #[test]
    fn concurrent_cache_access() {
        let handles: Vec<_> = (0..8u64)
            .map(|t| {
                std::thread::spawn(move || {
                    (0..20_000u64)
                        .map(|i| (i * 7919 + t * 104_729) % 50_000)
                        .all(|n| stern_u64(n) == stern_naive(n))
                })
            })
            .collect();
        for h in handles {
            assert!(h.join().unwrap());
        }
    }

    #[test]
    fn christoffel_evaluator() {
        assert_eq!(stern_via_christoffel(&big(89)), big(17));
        assert_eq!(stern_via_christoffel(&big(3)), big(2));
        assert_eq!(stern_via_christoffel(&big(0)), big(0));
        assert_eq!(stern_via_christoffel(&big(1)), big(1));
        for n in 0..4096u64 {
            assert_eq!(stern_via_christoffel(&big(n)), big(stern_u64(n)), "{n}");
        }
        // ŝ(wb) = s(⟨bwb⟩ + 1) = π(ψ(wb))
        for v in all_words(9) {
            let m = v.wrap(Letter::B, Letter::B).encode() + 1u32;
            let mut vb = v.clone();
            vb.push(Letter::B);
            assert_eq!(stern(&m), min_period_central(&vb), "{v}");
        }
    }

    #[test]
    fn subword_evaluator() {
        assert_eq!(stern_via_subwords(&big(11)), big(5));
        assert_eq!(stern_via_subwords(&big(1)), big(1));
        assert_eq!(stern_via_subwords(&big(0)), big(0));
        for n in 0..2048u64 {
            let bits: Vec<bool> = (0..64 - n.leading_zeros())
                .rev()
                .map(|i| n >> i & 1 == 1)
                .collect();
            assert_eq!(alternating_brute(&bits), stern_u64(n));
            assert_eq!(stern_via_subwords(&big(n)), big(stern_u64(n)));
        }
    }

    #[test]
    fn zeta_evaluator() {
        let e: String = (1..=15).map(|n| ruler(n).unwrap().to_string()).collect();
        assert_eq!(e, "010201030102010");
        let z: Vec<i64> = (1..=8).map(|n| zeta(n).unwrap()).collect();
        assert_eq!(z, [1, -3, 1, -5, 1, -3, 1, -7]);
        assert!(ruler(0).is_err());
        assert!(zeta(0).is_err());
        assert_eq!(stern_via_zeta(4).unwrap(), BigInt::from(1));
        assert_eq!(stern_via_zeta(5).unwrap(), BigInt::from(3));
        assert!(stern_via_zeta(1).is_err());
        for n in 2..600 {
            assert_eq!(
                stern_via_zeta(n).unwrap(),
                BigInt::from(stern_u64(n)),
                "{n}"
            );
        }
    }

    #[test]
    fn integral_continuant_evaluator() {
        assert_eq!(stern_via_integral_continuant(&w("abba")), big(7));
        assert_eq!(stern_via_integral_continuant(&w("")), big(1));
        for v in all_words(10) {
            let nu = crate::tree::nu(&v);
            assert_eq!(stern_via_integral_continuant(&v), stern(&nu), "{v}");
        }
    }

    #[test]
    fn bit_reversal() {
        assert_eq!(reverse_bits(&big(0)), big(0));
        assert_eq!(reverse_bits(&big(6)), big(3));
        assert_eq!(reverse_bits(&big(11)), big(13));
        for n in 1..4096u64 {
            let r = reverse_bits(&big(n));
            assert!(r.bit(0));
            assert_eq!(stern(&r), big(stern_u64(n)));
        }
    }

    #[test]
    fn deltas() {
        let d = delta_expansion(12).unwrap();
        assert_eq!(d.l, 3);
        assert_eq!(d.deltas, [0, 1, 2]);
        assert_eq!(d.terms, [1, 2, 2]);
        assert_eq!(d.total(), 7);
        let d = delta_expansion(2).unwrap();
        assert_eq!((d.l, d.total()), (0, 2));
        assert!(delta_expansion(1).is_err());
        for n in 2..=4096 {
            assert_eq!(
                delta_expansion(n).unwrap().total(),
                stern_u64(2 * n - 1),
                "{n}"
            );
        }
    }

    #[test]
    fn coons_shallit() {
        for n in 0..4096 {
            assert!(coons_shallit_check(n), "{n}");
        }
        let d = cs_decompose(&w("ababa"));
        assert_eq!(d.base, 4);
        assert_eq!(d.gamma1_terms, [(w("bab"), 3)]);
        let g2: Vec<(String, String, u64, usize)> = d
            .gamma2_terms
            .iter()
            .map(|t| {
                (
                    t.factor.to_string(),
                    t.inner.to_string(),
                    t.weight.to_u64().unwrap(),
                    t.count,
                )
            })
            .collect();
        assert_eq!(
            g2,
            [
                ("babab".into(), "b".into(), 3, 2),
                ("bababab".into(), "bab".into(), 8, 1)
            ]
        );
        assert_eq!(d.total(), big(21));
        let d = cs_decompose(&w(""));
        assert_eq!(
            (d.base, d.gamma1_terms.len(), d.gamma2_terms.len()),
            (2, 0, 0)
        );
        assert_eq!(d.total(), big(2));
        for v in all_words(9) {
            assert_eq!(
                cs_decompose(&v).total(),
                period_pair(&v).christoffel_len(),
                "{v}"
            );
        }
    }

    #[test]
    fn noncommutative_calkin_wilf() {
        let (markers, trace) = noncommutative_cw(&w("abbaa"), 1000).unwrap();
        assert_eq!(markers, w("ababaababaabababa"));
        let keys: Vec<String> = trace
            .iter()
            .map(|m| m.reversed_key.iter().map(|p| p.to_string()).collect())
            .collect();
        assert_eq!(
            keys,
            [
                "76421", "764", "76321", "763", "761", "75421", "754", "75321", "753", "751",
                "721", "7", "421", "4", "321", "3", "1"
            ]
        );
        assert_eq!(trace.iter().filter(|m| m.marker == Letter::A).count(), 10);

        let (markers, trace) = noncommutative_cw(&w(""), 10).unwrap();
        assert_eq!(markers, w("ba"));
        assert_eq!(trace[0].reversed_key, [2]);

        for n in 0..6 {
            let v = Word::repeat(Letter::A, n);
            let (markers, trace) = noncommutative_cw(&v, 100).unwrap();
            let mut expected = v.clone();
            expected.push(Letter::B);
            expected.push(Letter::A);
            assert_eq!(markers, expected);
            let top = n + 2;
            let mut keys: Vec<Vec<usize>> = (2..=n + 1).rev().map(|j| vec![top, j, 1]).collect();
            keys.push(vec![top]);
            keys.push(vec![1]);
            let got: Vec<Vec<usize>> = trace.into_iter().map(|m| m.reversed_key).collect();
            assert_eq!(got, keys);
        }

        for v in all_words(7) {
            let (markers, _) = noncommutative_cw(&v, 1 << 20).unwrap();
            let mut expected = psi(&v).unwrap();
            expected.push(Letter::B);
            expected.push(Letter::A);
            assert_eq!(markers, expected, "{v}");
        }

        assert!(matches!(
            noncommutative_cw(&w("abbaa"), 16),
            Err(SternError::TooManyOccurrences { .. })
        ));
    }

    #[test]
    fn enumeration_matches_generic_occurrences() {
        let host = w("bababab");
        let mut total = 0usize;
        for k in 0..4 {
            let mut u = Word::from_letters(vec![Letter::B]);
            for _ in 0..k {
                u.push(Letter::A);
                u.push(Letter::B);
            }
            total += subword_occurrences(&host, &u, 1000).unwrap().len();
        }
        assert_eq!(BigUint::from(total), alternating_subwords(&host));
    }

    #[test]
    fn calkin_wilf_counts() {
        assert_eq!(initial_subword_count(&w("abaa")), big(7));
        assert_eq!(initial_subword_count(&w("")), big(1));
        assert_eq!(cw_length(&w("abaa")), big(11));
        assert_eq!(cw_period(&w("abaa")).unwrap(), big(3));
        assert_eq!(cw_length(&w("abbaa")), big(17));
        assert!(cw_period(&w("aaa")).is_err());
        for p in 0..8 {
            assert_eq!(cw_length(&Word::repeat(Letter::B, p)), big(p as u64 + 2));
        }
        for v in all_words(10) {
            let pair = period_pair(&v);
            assert_eq!(cw_length(&v), pair.christoffel_len());
            let christoffel = psi(&v).unwrap().wrap(Letter::A, Letter::B);
            assert_eq!(
                initial_subword_count(&v),
                big(christoffel.count(Letter::A) as u64)
            );
            if !v.is_constant() && !v.is_empty() {
                assert_eq!(cw_period(&v).unwrap(), min_period_central(&v));
            }
        }
    }
}
