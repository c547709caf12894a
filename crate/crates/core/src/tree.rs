//! Raney (Calkin-Wilf) and Stern-Brocot labelings of the complete binary
//! tree whose nodes are words over `{a, b}`.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::frac::Frac;
use crate::palindrome::period_pair;
use crate::stern::stern;
use crate::word::{Letter, Word};

/// Maximum path length `path_of_fraction` will build by default.
pub const DEFAULT_DEPTH_BUDGET: usize = 1 << 26;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("node numbers start at 2, got {0}")]
    NumberTooSmall(BigUint),
    #[error("{0} has a zero part and is not a node label")]
    NotPositive(Frac),
    #[error("path to {fraction} has depth {depth}, above the budget {budget}")]
    TooDeep {
        fraction: Frac,
        depth: BigUint,
        budget: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    #[default]
    Raney,
    SternBrocot,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeNode {
    pub path: Word,
    pub number: BigUint,
    pub raney: Frac,
    pub sternbrocot: Frac,
}

impl TreeNode {
    pub fn new(path: Word) -> TreeNode {
        TreeNode {
            number: nu(&path),
            raney: raney(&path),
            sternbrocot: stern_brocot(&path),
            path,
        }
    }

    pub fn children(&self) -> [TreeNode; 2] {
        Letter::ALL.map(|x| {
            let mut path = self.path.clone();
            path.push(x);
            TreeNode::new(path)
        })
    }
}

/// `ν(w) = ⟨bw⟩ + 1`.
pub fn nu(w: &Word) -> BigUint {
    let mut n = BigUint::one();
    for &x in w.letters() {
        n <<= 1u32;
        n += x.digit();
    }
    n + 1u32
}

pub fn nu_inverse(n: &BigUint) -> Result<Word, TreeError> {
    if n < &BigUint::from(2u32) {
        return Err(TreeError::NumberTooSmall(n.clone()));
    }
    let m = n - 1u32;
    let bits = m.bits();
    Ok((0..bits - 1)
        .rev()
        .map(|i| Letter::from_digit(m.bit(i)))
        .collect())
}

/// `Ra(w) = p_a(w) / p_b(w)`.
pub fn raney(w: &Word) -> Frac {
    let p = period_pair(w);
    Frac::reduced(p.p_a, p.p_b)
}

/// `Sb(w) = Ra(w~)`, also the slope of the Christoffel word `aψ(w)b`.
pub fn stern_brocot(w: &Word) -> Frac {
    raney(&w.reverse())
}

/// `ra(n) = s(n−1) / s(n)`, the Raney label of the node numbered `n`.
pub fn ra_of(n: &BigUint) -> Result<Frac, TreeError> {
    if n < &BigUint::from(2u32) {
        return Err(TreeError::NumberTooSmall(n.clone()));
    }
    Ok(Frac::reduced(stern(&(n - 1u32)), stern(n)))
}

pub fn path_of_fraction(f: &Frac, flavor: Flavor) -> Result<Word, TreeError> {
    path_of_fraction_with_budget(f, flavor, DEFAULT_DEPTH_BUDGET)
}

/// Runs the Raney child rules backwards. Each run of equal letters is
/// collapsed into a single division.
pub fn path_of_fraction_with_budget(
    f: &Frac,
    flavor: Flavor,
    budget: usize,
) -> Result<Word, TreeError> {
    if !f.is_positive() {
        return Err(TreeError::NotPositive(f.clone()));
    }
    let mut p = f.num().clone();
    let mut q = f.den().clone();
    // (letter, run length), from the leaf up
    let mut runs: Vec<(Letter, usize)> = Vec::new();
    let mut depth = BigUint::zero();
    while !(p.is_one() && q.is_one()) {
        let (letter, k) = if p < q {
            let k = (&q - 1u32) / &p;
            q -= &k * &p;
            (Letter::A, k)
        } else {
            let k = (&p - 1u32) / &q;
            p -= &k * &q;
            (Letter::B, k)
        };
        depth += &k;
        if depth > BigUint::from(budget) {
            // finish the division chain to report the true depth
            while !(p.is_one() && q.is_one()) {
                let (big, small) = if p < q { (&mut q, &p) } else { (&mut p, &q) };
                let k = (&*big - 1u32) / small;
                *big -= &k * small;
                depth += k;
            }
            return Err(TreeError::TooDeep {
                fraction: f.clone(),
                depth,
                budget,
            });
        }
        runs.push((letter, k.to_usize().expect("bounded by budget")));
    }
    let mut letters = Vec::with_capacity(depth.to_usize().unwrap_or(0));
    match flavor {
        Flavor::Raney => {
            for &(x, k) in runs.iter().rev() {
                letters.extend(std::iter::repeat_n(x, k));
            }
        }
        Flavor::SternBrocot => {
            for &(x, k) in &runs {
                letters.extend(std::iter::repeat_n(x, k));
            }
        }
    }
    Ok(Word::from_letters(letters))
}
