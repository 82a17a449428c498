//! Polynomials over `F_2` as finite monomial sets, ring operations and
//! variable-substitution homomorphisms.

use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// A polynomial over `F_2`: a finite set of monomials, each with implicit
/// coefficient 1. The empty set is zero.
///
/// Terms are kept sorted ascending under the monomial order, so equality and
/// hashing are structural and all derived output is deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    vars: usize,
    terms: Vec<Monomial>,
}

impl Polynomial {
    pub fn zero(vars: usize) -> Self {
        Polynomial { vars, terms: Vec::new() }
    }

    pub fn one(vars: usize) -> Self {
        Polynomial::from_monomial(Monomial::one(vars))
    }

    pub fn from_monomial(m: Monomial) -> Self {
        Polynomial {
            vars: m.vars(),
            terms: vec![m],
        }
    }

    /// Builds a polynomial from an arbitrary term list, cancelling duplicate
    /// monomials mod 2.
    pub fn from_terms(vars: usize, mut terms: Vec<Monomial>) -> Self {
        debug_assert!(terms.iter().all(|m| m.vars() == vars));
        terms.sort_by(|a, b| a.order_cmp(b));
        let mut out: Vec<Monomial> = Vec::with_capacity(terms.len());
        for m in terms {
            if out.last() == Some(&m) {
                out.pop();
            } else {
                out.push(m);
            }
        }
        Polynomial { vars, terms: out }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn terms(&self) -> &[Monomial] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common degree of all terms, `None` for zero or mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<u64> {
        let first = self.terms.first()?.degree();
        self.terms
            .iter()
            .all(|m| m.degree() == first)
            .then_some(first)
    }

    /// Sum mod 2: the symmetric difference of the term sets.
    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.vars != other.vars {
            return Err(Error::VariableMismatch {
                left: self.vars,
                right: other.vars,
            });
        }
        // Merge two sorted term lists, dropping pairs.
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match self.terms[i].order_cmp(&other.terms[j]) {
                std::cmp::Ordering::Less => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Ok(Polynomial {
            vars: self.vars,
            terms: out,
        })
    }

    /// Product, with duplicate monomials cancelling mod 2.
    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.vars != other.vars {
            return Err(Error::VariableMismatch {
                left: self.vars,
                right: other.vars,
            });
        }
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                terms.push(a.mul(b));
            }
        }
        Ok(Polynomial::from_terms(self.vars, terms))
    }

    /// `self^k` by binary powering; squaring is the cheap Frobenius step
    /// over `F_2`.
    pub fn pow(&self, k: u64) -> Polynomial {
        let mut acc = Polynomial::one(self.vars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base).expect("same arity");
            }
            base = base.square();
            k >>= 1;
        }
        acc
    }

    /// Frobenius: squaring doubles every exponent term-wise.
    pub fn square(&self) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|m| Monomial::new(m.exponents().iter().map(|&e| 2 * e).collect()))
            .collect();
        // Squaring is injective on monomials, order is preserved.
        Polynomial {
            vars: self.vars,
            terms,
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, m) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

/// A ring homomorphism `F_2[x_1..x_s] -> F_2[x_1..x_t]` given by the images
/// of the source variables.
#[derive(Debug, Clone)]
pub struct SubstitutionMap {
    images: Vec<Polynomial>,
    source_vars: usize,
    target_vars: usize,
}

impl SubstitutionMap {
    pub fn new(images: Vec<Polynomial>, target_vars: usize) -> Self {
        debug_assert!(images.iter().all(|p| p.vars() == target_vars));
        SubstitutionMap {
            source_vars: images.len(),
            images,
            target_vars,
        }
    }

    /// The identity on `t` variables.
    pub fn identity(t: usize) -> Self {
        let images = (1..=t)
            .map(|j| Polynomial::from_monomial(Monomial::variable(j, t)))
            .collect();
        SubstitutionMap::new(images, t)
    }

    pub fn source_vars(&self) -> usize {
        self.source_vars
    }

    pub fn target_vars(&self) -> usize {
        self.target_vars
    }

    pub fn image(&self, j: usize) -> &Polynomial {
        &self.images[j]
    }

    /// Applies the homomorphism to a single monomial: the product of image
    /// powers, each computed by binary powering.
    pub fn apply_monomial(&self, m: &Monomial) -> Result<Polynomial> {
        if m.vars() != self.source_vars {
            return Err(Error::VariableMismatch {
                left: m.vars(),
                right: self.source_vars,
            });
        }
        let mut acc = Polynomial::one(self.target_vars);
        for (j, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            acc = acc.mul(&self.images[j].pow(e))?;
            if acc.is_zero() {
                break;
            }
        }
        Ok(acc)
    }

    /// Applies the homomorphism to a polynomial, summing term images mod 2.
    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial> {
        if p.vars() != self.source_vars {
            return Err(Error::VariableMismatch {
                left: p.vars(),
                right: self.source_vars,
            });
        }
        let mut acc = Polynomial::zero(self.target_vars);
        for m in p.terms() {
            acc = acc.add(&self.apply_monomial(m)?)?;
        }
        Ok(acc)
    }
}
