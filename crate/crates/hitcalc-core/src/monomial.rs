//! Monomials as exponent tuples, weight vectors, the monomial order,
//! spikes and support classification.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::arith::mu;
use crate::error::{Error, Result};

/// A monomial in `t` variables, stored as the exponent tuple
/// `(u_1, ..., u_t)` of `x_1^{u_1} ... x_t^{u_t}`.
///
/// Equality is structural on the exponent tuple. The canonical text form is
/// the space-separated exponent list, e.g. `"12 6 9"`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<u64>,
}

impl Monomial {
    pub fn new(exponents: Vec<u64>) -> Self {
        assert!(!exponents.is_empty(), "monomial needs at least one variable");
        Monomial { exponents }
    }

    /// The constant monomial (all exponents zero) in `t` variables.
    pub fn one(t: usize) -> Self {
        Monomial::new(vec![0; t])
    }

    /// The variable `x_index` (1-based) in `t` variables.
    pub fn variable(index: usize, t: usize) -> Self {
        let mut exponents = vec![0; t];
        exponents[index - 1] = 1;
        Monomial::new(exponents)
    }

    pub fn vars(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn exponent(&self, var: usize) -> u64 {
        self.exponents[var]
    }

    pub fn degree(&self) -> u64 {
        self.exponents.iter().sum()
    }

    /// Exponent-wise product with another monomial of the same arity.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.vars(), other.vars());
        Monomial::new(
            self.exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// The weight vector: entry `j` counts the variables whose exponent has
    /// binary bit `j-1` set. Trailing zeros are trimmed.
    pub fn weight(&self) -> WeightVector {
        let top = self
            .exponents
            .iter()
            .map(|&e| 64 - e.leading_zeros())
            .max()
            .unwrap_or(0);
        let mut entries = Vec::with_capacity(top as usize);
        for bit in 0..top {
            let count = self
                .exponents
                .iter()
                .filter(|&&e| e >> bit & 1 == 1)
                .count() as u32;
            entries.push(count);
        }
        WeightVector::new(entries)
    }

    /// The weight-then-exponent order: weight vectors first, then exponent
    /// tuples, both left-lexicographically. Total on monomials of a fixed
    /// degree and variable count.
    pub fn order_cmp(&self, other: &Monomial) -> Ordering {
        debug_assert_eq!(self.vars(), other.vars());
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.exponents.cmp(&other.exponents))
    }

    /// True when every exponent is of the form `2^λ - 1` (zero allowed).
    pub fn is_spike(&self) -> bool {
        self.exponents.iter().all(|&e| e & (e + 1) == 0)
    }

    /// True when every exponent is positive.
    pub fn has_full_support(&self) -> bool {
        self.exponents.iter().all(|&e| e > 0)
    }

    /// The set of variable positions (0-based) with positive exponent,
    /// packed as a bitmask.
    pub fn support_mask(&self) -> u32 {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0, |m, (j, _)| m | 1 << j)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for e in &self.exponents {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Monomial {
    type Err = std::num::ParseIntError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let exponents = s
            .split_whitespace()
            .map(str::parse)
            .collect::<std::result::Result<Vec<u64>, _>>()?;
        if exponents.is_empty() {
            // Force a ParseIntError for an empty line.
            "".parse::<u64>()?;
        }
        Ok(Monomial::new(exponents))
    }
}

/// A weight vector: a finite sequence of non-negative entries with trailing
/// zeros removed. Ordered left-lexicographically, padding the shorter
/// operand with zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVector {
    entries: Vec<u32>,
}

impl WeightVector {
    pub fn new(mut entries: Vec<u32>) -> Self {
        while entries.last() == Some(&0) {
            entries.pop();
        }
        WeightVector { entries }
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn entry(&self, j: usize) -> u32 {
        self.entries.get(j).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `Σ 2^{j-1} ω_j`.
    pub fn degree(&self) -> u64 {
        self.entries
            .iter()
            .enumerate()
            .map(|(j, &w)| (1u64 << j) * u64::from(w))
            .sum()
    }
}

impl Ord for WeightVector {
    fn cmp(&self, other: &Self) -> Ordering {
        let len = self.entries.len().max(other.entries.len());
        for j in 0..len {
            match self.entry(j).cmp(&other.entry(j)) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for WeightVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (j, w) in self.entries.iter().enumerate() {
            if j > 0 {
                write!(f, ",")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for WeightVector {
    type Err = std::num::ParseIntError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let entries = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .split(',')
            .map(|p| p.trim().parse())
            .collect::<std::result::Result<Vec<u32>, _>>()?;
        Ok(WeightVector::new(entries))
    }
}

/// True when `rem` can be written as a sum of exponents `2^λ - 1` over at
/// most `slots` further positions, strictly decreasing below `prev` except
/// that a single final exponent may equal `prev`.
fn can_complete(rem: u64, prev: u32, slots: usize) -> bool {
    if rem == 0 {
        return true;
    }
    if slots == 0 {
        return false;
    }
    if prev >= 1 && rem == (1u64 << prev) - 1 {
        return true;
    }
    for lambda in (1..prev).rev() {
        let v = (1u64 << lambda) - 1;
        if v <= rem && can_complete(rem - v, lambda, slots - 1) {
            return true;
        }
    }
    false
}

/// The minimal spike of degree `n` in `t` variables: exponents
/// `2^{λ_1}-1, 2^{λ_2}-1, ...` with `λ_1 > λ_2 > ... > λ_{s-1} ≥ λ_s ≥ 1`
/// placed on the leading variables, zeros after. Built greedily from the
/// largest feasible exponent; fails when `mu(n) > t`.
pub fn minimal_spike(t: usize, n: u64) -> Result<Monomial> {
    let m = mu(n);
    if m > t as u64 {
        return Err(Error::NoSpike {
            vars: t,
            degree: n,
            mu: m,
        });
    }
    let mut exponents = vec![0u64; t];
    let mut rem = n;
    let mut prev = 64u32;
    for slot in 0..t {
        if rem == 0 {
            break;
        }
        let mut chosen = None;
        for lambda in (1..=prev.min(63)).rev() {
            let v = (1u64 << lambda) - 1;
            if v > rem {
                continue;
            }
            // Equal to the previous exponent is allowed only as the final
            // positive entry.
            if lambda == prev && v != rem {
                continue;
            }
            if can_complete(rem - v, lambda, t - slot - 1) {
                chosen = Some(lambda);
                break;
            }
        }
        let lambda = chosen.expect("mu bound guarantees completion");
        let v = (1u64 << lambda) - 1;
        exponents[slot] = v;
        rem -= v;
        prev = lambda;
    }
    debug_assert_eq!(rem, 0);
    Ok(Monomial::new(exponents))
}
