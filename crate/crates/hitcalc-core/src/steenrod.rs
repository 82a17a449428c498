//! The action of the Steenrod squares `Sq^k` on monomials and polynomials
//! via the Cartan formula.
//!
//! On a monomial with exponents `a_j`, the degree-k component of the total
//! square is `Σ Π_j C(a_j, k_j) x_j^{a_j + k_j}` over compositions
//! `k = Σ k_j`, with the binomials read mod 2. Lucas' theorem makes a
//! composition contribute exactly when each `k_j` is a bit-subset of `a_j`,
//! which is how the enumeration below is pruned.

use crate::arith::binom_mod2;
use crate::monomial::Monomial;
use crate::poly::Polynomial;

/// `Sq^k` applied to a single monomial.
///
/// `Sq^0` is the identity and `Sq^k` vanishes for `k > deg`; both fall out
/// of the composition enumeration.
pub fn sq_monomial(k: u64, m: &Monomial) -> Polynomial {
    let mut terms = Vec::new();
    sq_monomial_terms(k, m, &mut terms);
    Polynomial::from_terms(m.vars(), terms)
}

/// Pushes the terms of `Sq^k(m)` onto `out` without sorting. Distinct
/// compositions produce distinct exponent tuples, so no mod-2 cancellation
/// happens within a single monomial image.
pub fn sq_monomial_terms(k: u64, m: &Monomial, out: &mut Vec<Monomial>) {
    let exps = m.exponents();
    let t = exps.len();
    // suffix[j] = a_j + ... + a_{t-1}: the most that can still be absorbed.
    let mut suffix = vec![0u64; t + 1];
    for j in (0..t).rev() {
        suffix[j] = suffix[j + 1] + exps[j];
    }
    if k > suffix[0] {
        return;
    }
    let mut image = exps.to_vec();
    rec(exps, &suffix, k, 0, &mut image, out);

    fn rec(
        exps: &[u64],
        suffix: &[u64],
        rem: u64,
        j: usize,
        image: &mut Vec<u64>,
        out: &mut Vec<Monomial>,
    ) {
        if j == exps.len() {
            if rem == 0 {
                out.push(Monomial::new(image.clone()));
            }
            return;
        }
        if rem > suffix[j] {
            return;
        }
        // k_j runs over the bit-subsets of a_j not exceeding rem, smallest
        // first; the zero subset is always valid.
        let a = exps[j];
        let mut kj = 0u64;
        loop {
            if kj <= rem && rem - kj <= suffix[j + 1] {
                debug_assert!(binom_mod2(a, kj));
                image[j] = a + kj;
                rec(exps, suffix, rem - kj, j + 1, image, out);
            }
            // Next bit-subset of `a` after `kj`.
            kj = kj.wrapping_sub(a) & a;
            if kj == 0 {
                break;
            }
        }
        image[j] = a;
    }
}

/// `Sq^k` extended `F_2`-linearly over a polynomial's terms.
pub fn sq(k: u64, p: &Polynomial) -> Polynomial {
    let mut terms = Vec::new();
    for m in p.terms() {
        sq_monomial_terms(k, m, &mut terms);
    }
    Polynomial::from_terms(p.vars(), terms)
}
