//! Length statistics of the Christoffel words `aψ(v)b` with `|v| = k`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Pow};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::continuant::fib_u64;
use crate::palindrome::period_pair_u64;
use crate::word::{Letter, Word};

/// Largest order enumerated unless the caller raises the limit.
pub const DEFAULT_MAX_ORDER: u32 = 26;

/// Depth of the prefixes handed to worker threads.
const SPLIT_DEPTH: u32 = 10;

/// 40-digit truncation of the golden ratio, a lower bound for `g`.
pub const GOLDEN_LOWER: &str = "1.6180339887498948482045868343656381177203";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DistributionError {
    #[error("order {k} needs 2^{k} directives, above the limit 2^{max}")]
    Budget { k: u32, max: u32 },
    #[error("{name} needs k >= {min}, got {k}")]
    OrderTooSmall {
        name: &'static str,
        min: u32,
        k: u32,
    },
    #[error("totient is defined for n >= 1")]
    TotientZero,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HistogramOptions {
    pub max_order: u32,
    /// Enumerate only directives starting with `a` and count each twice;
    /// complementing a directive swaps `p_a` and `p_b`, keeping the length.
    pub complement_symmetry: bool,
}

impl Default for HistogramOptions {
    fn default() -> Self {
        HistogramOptions {
            max_order: DEFAULT_MAX_ORDER,
            complement_symmetry: false,
        }
    }
}

/// `C_k(n)` for every length `n` with a nonzero count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LengthHistogram {
    pub order: u32,
    pub counts: BTreeMap<u64, u64>,
}

impl LengthHistogram {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn weighted_total(&self) -> u128 {
        self.counts
            .iter()
            .map(|(&n, &c)| n as u128 * c as u128)
            .sum()
    }

    /// Mean length over all `2^k` directives.
    pub fn average(&self) -> BigRational {
        BigRational::new(
            BigInt::from(self.weighted_total()),
            BigInt::from(self.total()),
        )
    }

    pub fn count(&self, n: u64) -> u64 {
        self.counts.get(&n).copied().unwrap_or(0)
    }

    /// Rows `k,n,C_k(n)`, with a header line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("k,n,C_k(n)\n");
        for (n, c) in &self.counts {
            writeln!(out, "{},{},{}", self.order, n, c).expect("writing to a String");
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderSummary {
    pub k: u32,
    #[serde(rename = "M_k")]
    pub m_k: u64,
    pub argmax: Vec<u64>,
    pub missing: Vec<u64>,
    pub missing_count: usize,
}

fn dfs(p_a: u64, p_b: u64, remaining: u32, out: &mut BTreeMap<u64, u64>, weight: u64) {
    if remaining == 0 {
        *out.entry(p_a + p_b).or_default() += weight;
        return;
    }
    dfs(p_a, p_a + p_b, remaining - 1, out, weight);
    dfs(p_a + p_b, p_b, remaining - 1, out, weight);
}

fn merge(mut x: BTreeMap<u64, u64>, y: BTreeMap<u64, u64>) -> BTreeMap<u64, u64> {
    for (n, c) in y {
        *x.entry(n).or_default() += c;
    }
    x
}

pub fn histogram(k: u32) -> Result<LengthHistogram, DistributionError> {
    histogram_with(k, HistogramOptions::default())
}

pub fn histogram_with(
    k: u32,
    options: HistogramOptions,
) -> Result<LengthHistogram, DistributionError> {
    if k > options.max_order {
        return Err(DistributionError::Budget {
            k,
            max: options.max_order,
        });
    }
    let (fixed, weight) = if options.complement_symmetry && k > 0 {
        (vec![Letter::A], 2)
    } else {
        (Vec::new(), 1)
    };
    let split = k.min(SPLIT_DEPTH).max(fixed.len() as u32);
    let free = split - fixed.len() as u32;
    let prefixes: Vec<(u64, u64)> = (0..1u64 << free)
        .map(|bits| {
            let letters = fixed.iter().copied().chain(
                (0..free)
                    .rev()
                    .map(|i| Letter::from_digit(bits >> i & 1 == 1)),
            );
            period_pair_u64(&letters.collect()).expect("order below 64")
        })
        .collect();
    let counts = prefixes
        .into_par_iter()
        .map(|(p_a, p_b)| {
            let mut local = BTreeMap::new();
            dfs(p_a, p_b, k - split, &mut local, weight);
            local
        })
        .reduce(BTreeMap::new, merge);
    Ok(LengthHistogram { order: k, counts })
}

pub fn summarize(k: u32) -> Result<OrderSummary, DistributionError> {
    Ok(summarize_histogram(&histogram(k)?))
}

pub fn summarize_histogram(h: &LengthHistogram) -> OrderSummary {
    let k = h.order;
    let m_k = h.counts.values().copied().max().unwrap_or(0);
    let argmax = h
        .counts
        .iter()
        .filter(|&(_, &c)| c == m_k)
        .map(|(&n, _)| n)
        .collect();
    let missing: Vec<u64> = (k as u64 + 2..=fib_u64(k as i64 + 1))
        .filter(|n| !h.counts.contains_key(n))
        .collect();
    OrderSummary {
        k,
        m_k,
        argmax,
        missing_count: missing.len(),
        missing,
    }
}

/// `xyxy⋯` of length `k` starting with `first`.
pub fn alternating(k: usize, first: Letter) -> Word {
    (0..k)
        .map(|i| {
            if i % 2 == 0 {
                first
            } else {
                first.complement()
            }
        })
        .collect()
}

/// `v₃ = ab²`, `v_{k+1} = v_k a` for odd `k` and `v_k b` for even `k`.
pub fn almost_alternating(k: usize) -> Result<Word, DistributionError> {
    if k < 3 {
        return Err(DistributionError::OrderTooSmall {
            name: "almost_alternating",
            min: 3,
            k: k as u32,
        });
    }
    let mut v: Word = "abb".parse().expect("literal");
    for j in 3..k {
        v.push(if j % 2 == 1 { Letter::A } else { Letter::B });
    }
    Ok(v)
}

/// `{v, v~, v̄, v̄~}`, without duplicates.
pub fn class_of(v: &Word) -> BTreeSet<Word> {
    let c = v.complement();
    [v.reverse(), c.reverse(), c, v.clone()]
        .into_iter()
        .collect()
}

/// Euler's totient by trial division.
pub fn totient(n: u64) -> Result<u64, DistributionError> {
    if n == 0 {
        return Err(DistributionError::TotientZero);
    }
    let mut m = n;
    let mut phi = n;
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if m > 1 {
        phi -= phi / m;
    }
    Ok(phi)
}

/// `C_k(n)` for every order `k`, found by walking the directive tree from
/// the root and pruning once the length passes `n`.
pub fn counts_at_length(n: u64) -> BTreeMap<u32, u64> {
    fn go(p_a: u64, p_b: u64, depth: u32, n: u64, out: &mut BTreeMap<u32, u64>) {
        let len = p_a + p_b;
        if len > n {
            return;
        }
        if len == n {
            *out.entry(depth).or_default() += 1;
            return;
        }
        go(p_a, len, depth + 1, n, out);
        go(len, p_b, depth + 1, n, out);
    }
    let mut out = BTreeMap::new();
    go(1, 1, 0, n, &mut out);
    out
}

/// `Σ_k C_k(n) = φ(n)` for every `2 ≤ n ≤ n_max`.
pub fn totient_identity_check(n_max: u64) -> bool {
    (2..=n_max)
        .into_par_iter()
        .all(|n| counts_at_length(n).values().sum::<u64>() == totient(n).expect("n >= 2"))
}

/// Results of the extremal-length checks at one order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub k: u32,
    /// Constant directives give length `k + 2`.
    pub constant_length: bool,
    /// Non-constant directives give length at least `2k + 1`.
    pub lower_bound: bool,
    /// Length `2k + 1` is reached exactly on the class of `ab^{k−1}`.
    pub lower_equality: bool,
    /// Non-alternating directives give length at most `F_{k+1} − F_{k−4}`.
    pub upper_bound: bool,
    /// That bound is reached exactly on the class of `v_k`.
    pub upper_equality: bool,
    /// Alternating directives give length `F_{k+1}`.
    pub alternating_length: bool,
    /// `3k−2, 3k−1, 5k−8, 5k−7` are all lengths of order `k`.
    pub consecutive_lengths: bool,
}

impl BoundReport {
    pub fn all_ok(&self) -> bool {
        self.constant_length
            && self.lower_bound
            && self.lower_equality
            && self.upper_bound
            && self.upper_equality
            && self.alternating_length
            && self.consecutive_lengths
    }
}

pub fn bound_report(k: u32) -> Result<BoundReport, DistributionError> {
    if k < 3 {
        return Err(DistributionError::OrderTooSmall {
            name: "bound_report",
            min: 3,
            k,
        });
    }
    if k > DEFAULT_MAX_ORDER {
        return Err(DistributionError::Budget {
            k,
            max: DEFAULT_MAX_ORDER,
        });
    }
    let ku = k as usize;
    let lower = 2 * k as u64 + 1;
    let f = |i: i64| fib_u64(i);
    let upper = f(k as i64 + 1) - f(k as i64 - 4);
    let mut ab = Word::from_letters(vec![Letter::A]);
    for _ in 1..ku {
        ab.push(Letter::B);
    }
    let lower_class = class_of(&ab);
    let upper_class = class_of(&almost_alternating(ku)?);
    let alternating_class: BTreeSet<Word> =
        Letter::ALL.iter().map(|&x| alternating(ku, x)).collect();

    let mut report = BoundReport {
        k,
        constant_length: true,
        lower_bound: true,
        lower_equality: true,
        upper_bound: true,
        upper_equality: true,
        alternating_length: true,
        consecutive_lengths: true,
    };
    let mut lengths = BTreeSet::new();
    for bits in 0..1u64 << k {
        let v: Word = (0..k)
            .rev()
            .map(|i| Letter::from_digit(bits >> i & 1 == 1))
            .collect();
        let (p_a, p_b) = period_pair_u64(&v).expect("order below 64");
        let len = p_a + p_b;
        lengths.insert(len);
        if v.is_constant() {
            report.constant_length &= len == k as u64 + 2;
        } else {
            report.lower_bound &= len >= lower;
            report.lower_equality &= (len == lower) == lower_class.contains(&v);
        }
        if alternating_class.contains(&v) {
            report.alternating_length &= len == f(k as i64 + 1);
        } else {
            report.upper_bound &= len <= upper;
            report.upper_equality &= (len == upper) == upper_class.contains(&v);
        }
    }
    let k64 = k as u64;
    report.consecutive_lengths = [3 * k64 - 2, 3 * k64 - 1, 5 * k64 - 8, 5 * k64 - 7]
        .iter()
        .all(|n| lengths.contains(n));
    Ok(report)
}

/// Lower bound `2^k / g^{k+3}` on `M_k`, evaluated with the rational
/// [`GOLDEN_LOWER`] in place of `g`.
///
/// The value is a valid bound only while `F_{k+1} < GOLDEN_LOWER^{k+3}`,
/// which the second component reports.
pub fn mk_lower_bound(k: u32) -> (BigRational, bool) {
    let g = golden_lower();
    let g_pow: BigRational = Pow::pow(&g, k + 3);
    let two_k = BigRational::from_integer(BigInt::one() << k);
    let fib = BigRational::from_integer(BigInt::from(
        crate::continuant::fib(k as i64 + 1).expect("k >= 0"),
    ));
    let valid = fib < g_pow;
    (two_k / g_pow, valid)
}

fn golden_lower() -> BigRational {
    let digits: String = GOLDEN_LOWER.chars().filter(|c| *c != '.').collect();
    let num: BigUint = digits.parse().expect("literal");
    let den = BigUint::from(10u32).pow(40u32);
    BigRational::new(num.into(), den.into())
}
