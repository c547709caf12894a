//! The palindromization map `ψ`, right palindromic closure, the morphisms
//! `μ_v` and the period pair `(p_a(v), p_b(v))`.

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;
use thiserror::Error;

use crate::word::{failure_function, Letter, Word};

/// Default limit on the number of letters `ψ` may produce.
pub const DEFAULT_PSI_BUDGET: usize = 1 << 30;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PsiError {
    #[error("output of {predicted} letters exceeds the budget of {budget}")]
    BudgetExceeded { predicted: BigUint, budget: usize },
    #[error("period word of the directive is empty")]
    EmptyPeriod,
    #[error("{0} is not a central word")]
    NotCentral(Word),
}

/// `(p_a(v), p_b(v)) = (|μ_v(a)|, |μ_v(b)|)`.
///
/// The two values are coprime and sum to `|ψ(v)| + 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PeriodPair {
    #[serde(with = "crate::word::decimal")]
    pub p_a: BigUint,
    #[serde(with = "crate::word::decimal")]
    pub p_b: BigUint,
}

impl PeriodPair {
    pub fn get(&self, letter: Letter) -> &BigUint {
        match letter {
            Letter::A => &self.p_a,
            Letter::B => &self.p_b,
        }
    }

    /// `p_a + p_b = |aψ(v)b|`.
    pub fn christoffel_len(&self) -> BigUint {
        &self.p_a + &self.p_b
    }

    /// `p_a + p_b − 2 = |ψ(v)|`.
    pub fn central_len(&self) -> BigUint {
        &self.p_a + &self.p_b - 2u32
    }

    pub fn min(&self) -> &BigUint {
        std::cmp::min(&self.p_a, &self.p_b)
    }
}

/// Computes the period pair with the recurrence `p_x(wx) = p_x(w)`,
/// `p_y(wx) = p_x(w) + p_y(w)`, starting from `(1, 1)` at `ε`.
pub fn period_pair(v: &Word) -> PeriodPair {
    let mut p_a = BigUint::one();
    let mut p_b = BigUint::one();
    for &x in v.letters() {
        match x {
            Letter::A => p_b += &p_a,
            Letter::B => p_a += &p_b,
        }
    }
    PeriodPair { p_a, p_b }
}

/// `|aψ(v)b|`, without building `ψ(v)`.
pub fn christoffel_len(v: &Word) -> BigUint {
    period_pair(v).christoffel_len()
}

/// `π(ψ(v)) = p_{v^L}(v)`, and `1` for the empty directive.
pub fn min_period_central(v: &Word) -> BigUint {
    match v.last() {
        Some(last) => period_pair(v).get(last).clone(),
        None => BigUint::one(),
    }
}

/// Length of the longest palindromic suffix of `w`.
fn longest_palindromic_suffix(w: &[Letter]) -> usize {
    // longest prefix of w~ that is also a suffix of w
    let mut s: Vec<Option<Letter>> = w.iter().rev().map(|&l| Some(l)).collect();
    s.push(None);
    s.extend(w.iter().map(|&l| Some(l)));
    failure_function(&s).last().copied().unwrap_or(0)
}

/// `w⁽⁺⁾`: the shortest palindrome having `w` as a prefix.
pub fn pal_closure(w: &Word) -> Word {
    let q = longest_palindromic_suffix(w.letters());
    let u = &w.letters()[..w.len() - q];
    let mut out = w.letters().to_vec();
    out.extend(u.iter().rev());
    Word::from_letters(out)
}

/// Builds `ψ(v)` one directive letter at a time.
///
/// If the new letter `x` already occurs in the directive `u`, write
/// `u = u₁xu₂` with `x ∉ u₂`; then `ψ(ux) = ψ(u)·ψ(u₁)⁻¹ψ(u)`. Otherwise
/// `ψ(ux) = ψ(u)xψ(u)`. Each step costs the number of letters it appends.
#[derive(Debug, Clone)]
pub struct Palindromizer {
    word: Vec<Letter>,
    // prefix_lens[i] = |ψ(v[..i])|
    prefix_lens: Vec<usize>,
    last_seen: [Option<usize>; 2],
}

impl Palindromizer {
    pub fn new() -> Palindromizer {
        Palindromizer {
            word: Vec::new(),
            prefix_lens: vec![0],
            last_seen: [None, None],
        }
    }

    pub fn push(&mut self, x: Letter) {
        let i = self.prefix_lens.len() - 1;
        let current = self.word.len();
        match self.last_seen[x.digit() as usize] {
            Some(j) => {
                let start = self.prefix_lens[j];
                self.word.extend_from_within(start..current);
            }
            None => {
                self.word.push(x);
                self.word.extend_from_within(..current);
            }
        }
        self.last_seen[x.digit() as usize] = Some(i);
        self.prefix_lens.push(self.word.len());
    }

    pub fn as_letters(&self) -> &[Letter] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn into_word(self) -> Word {
        Word::from_letters(self.word)
    }
}

impl Default for Palindromizer {
    fn default() -> Palindromizer {
        Palindromizer::new()
    }
}

/// `ψ(v)` under the default output budget.
pub fn psi(v: &Word) -> Result<Word, PsiError> {
    psi_with_budget(v, DEFAULT_PSI_BUDGET)
}

/// `ψ(v)`, refusing directives whose image would exceed `budget` letters.
/// The length is predicted from the period pair before anything is built.
pub fn psi_with_budget(v: &Word, budget: usize) -> Result<Word, PsiError> {
    let predicted = period_pair(v).central_len();
    if predicted > BigUint::from(budget) {
        return Err(PsiError::BudgetExceeded { predicted, budget });
    }
    let mut builder = Palindromizer::new();
    for &x in v.letters() {
        builder.push(x);
    }
    Ok(builder.into_word())
}

/// An ultimately periodic infinite directive word `preperiod · period^ω`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicDirective {
    pub preperiod: Word,
    pub period: Word,
}

impl PeriodicDirective {
    pub fn new(preperiod: Word, period: Word) -> Result<PeriodicDirective, PsiError> {
        if period.is_empty() {
            return Err(PsiError::EmptyPeriod);
        }
        Ok(PeriodicDirective { preperiod, period })
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        self.preperiod
            .letters()
            .iter()
            .chain(self.period.letters().iter().cycle())
            .copied()
    }
}

/// The length-`n` prefix of the infinite word `ψ(directive)`.
pub fn psi_prefix(directive: &PeriodicDirective, n: usize) -> Result<Word, PsiError> {
    psi_prefix_with_budget(directive, n, DEFAULT_PSI_BUDGET)
}

pub fn psi_prefix_with_budget(
    directive: &PeriodicDirective,
    n: usize,
    budget: usize,
) -> Result<Word, PsiError> {
    if n > budget {
        return Err(PsiError::BudgetExceeded {
            predicted: n.into(),
            budget,
        });
    }
    let mut builder = Palindromizer::new();
    let mut letters = directive.letters();
    while builder.len() < n {
        let x = letters.next().expect("directive is infinite");
        builder.push(x);
    }
    let mut word = builder.into_word().into_letters();
    word.truncate(n);
    Ok(Word::from_letters(word))
}

/// Lengths of the palindromic prefixes of a palindrome, shortest first,
/// ending with the palindrome itself. For a palindrome these are exactly its
/// borders.
fn palindromic_prefix_lens(w: &[Letter]) -> Vec<usize> {
    let mut lens = vec![w.len()];
    if !w.is_empty() {
        let fail = failure_function(w);
        let mut k = fail[w.len() - 1];
        while k > 0 {
            lens.push(k);
            k = fail[k - 1];
        }
    }
    lens.push(0);
    lens.reverse();
    lens.dedup();
    lens
}

/// The directive word of a central word: the unique `v` with `ψ(v) = w`.
///
/// The palindromic prefixes of `ψ(v)` are the `ψ(v₁⋯vᵢ)`, so `vᵢ₊₁` is the
/// letter following the `i`-th palindromic prefix.
pub fn psi_inverse(w: &Word) -> Result<Word, PsiError> {
    if !w.is_palindrome() {
        return Err(PsiError::NotCentral(w.clone()));
    }
    let lens = palindromic_prefix_lens(w.letters());
    let directive: Word = lens[..lens.len() - 1].iter().map(|&l| w[l]).collect();
    match psi_with_budget(&directive, w.len()) {
        Ok(image) if image == *w => Ok(directive),
        _ => Err(PsiError::NotCentral(w.clone())),
    }
}

fn mu_letter(x: Letter, w: &[Letter]) -> Vec<Letter> {
    let mut out = Vec::with_capacity(2 * w.len());
    for &y in w {
        if y != x {
            out.push(x);
        }
        out.push(y);
    }
    out
}

/// `μ_v(w)` with `μ_v = μ_{x₁} ∘ ⋯ ∘ μ_{x_n}`, `μ_x(x) = x`, `μ_x(y) = xy`.
pub fn mu(v: &Word, w: &Word) -> Word {
    let mut current = w.letters().to_vec();
    for &x in v.letters().iter().rev() {
        current = mu_letter(x, &current);
    }
    Word::from_letters(current)
}

/// Small-integer period pair for enumeration hot loops; `None` on overflow.
pub fn period_pair_u64(v: &Word) -> Option<(u64, u64)> {
    let mut p = (1u64, 1u64);
    for &x in v.letters() {
        match x {
            Letter::A => p.1 = p.1.checked_add(p.0)?,
            Letter::B => p.0 = p.0.checked_add(p.1)?,
        }
    }
    Some(p)
}
