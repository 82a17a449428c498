//! Structural homomorphisms between variable counts: the variable
//! insertion `q_{(l,t)}`, the division form `ψ_{(l,L)}`, the projection
//! `p_{(l,L)}`, prefix lifts, the `Φ` image constructions and a checker
//! for the conjecture that they preserve admissibility.

use crate::error::{Error, Result};
use crate::monomial::{Monomial, WeightVector};
use crate::poly::{Polynomial, SubstitutionMap};
use crate::quotient::HitCalc;

/// A pair `(l, L)` with `1 ≤ l < l_1 < ... < l_r ≤ t`; `L` may be empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiSpec {
    l: usize,
    ls: Vec<usize>,
    t: usize,
}

impl PsiSpec {
    pub fn new(l: usize, ls: Vec<usize>, t: usize) -> Result<Self> {
        if l < 1 || l > t {
            return Err(Error::IndexOutOfRange { index: l, vars: t });
        }
        let mut prev = l;
        for &v in &ls {
            if v <= prev || v > t {
                return Err(Error::IndexOutOfRange { index: v, vars: t });
            }
            prev = v;
        }
        Ok(PsiSpec { l, ls, t })
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn ls(&self) -> &[usize] {
        &self.ls
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn len(&self) -> usize {
        self.ls.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ls.is_empty()
    }
}

/// Whether `ψ` applies the defining exponent condition strictly or only
/// requires the division to stay non-negative.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PsiMode {
    Strict,
    Lenient,
}

/// Re-indexes a `(t-1)`-variable monomial into `t` variables, inserting a
/// zero exponent at position `l`. Preserves degree and weight vector.
pub fn q_insert(l: usize, t: usize, m: &Monomial) -> Result<Monomial> {
    if m.vars() + 1 != t {
        return Err(Error::VariableMismatch {
            left: m.vars(),
            right: t - 1,
        });
    }
    if l < 1 || l > t {
        return Err(Error::IndexOutOfRange { index: l, vars: t });
    }
    let mut exps = Vec::with_capacity(t);
    exps.extend_from_slice(&m.exponents()[..l - 1]);
    exps.push(0);
    exps.extend_from_slice(&m.exponents()[l - 1..]);
    Ok(Monomial::new(exps))
}

/// The index `u` of the `ψ` exponent condition, if one exists: the first
/// `u-1` indexed exponents satisfy `a+1 = 2^r`, the `u`-th exceeds, and the
/// required dyadic digits are set. At most one `u` can satisfy the
/// condition (`a_{l_u-1}+1 > 2^r` for `u` contradicts the equality clause
/// of any later candidate).
pub fn psi_condition(spec: &PsiSpec, m: &Monomial) -> Result<Option<usize>> {
    if m.vars() + 1 != spec.t {
        return Err(Error::VariableMismatch {
            left: m.vars(),
            right: spec.t - 1,
        });
    }
    let r = spec.len();
    if r == 0 {
        return Ok(None);
    }
    let a = |d: usize| m.exponent(spec.ls[d - 1] - 2); // a_{l_d - 1}, 1-based d
    let pow = 1u64 << r;
    'candidates: for u in 1..=r {
        for d in 1..u {
            if a(d) + 1 != pow {
                continue 'candidates;
            }
        }
        if a(u) + 1 <= pow {
            continue;
        }
        for d in 1..=u {
            if a(u) >> (r - d) & 1 != 1 {
                continue 'candidates;
            }
        }
        for d in u + 1..=r {
            if a(d) >> (r - d) & 1 != 1 {
                continue 'candidates;
            }
        }
        return Ok(Some(u));
    }
    Ok(None)
}

/// `ψ_{(l,L)}`: with `L` empty this is `q_insert`; otherwise, when the
/// exponent condition holds with index `u`, the monomial
/// `x_l^{2^r-1} · q(m)` divided by the twisting monomial at the indexed
/// positions; zero (`None`) otherwise.
///
/// [`PsiMode::Lenient`] skips the condition and picks the first `u` whose
/// division stays non-negative, the behaviour of applying the display
/// formula alone.
pub fn psi(spec: &PsiSpec, m: &Monomial, mode: PsiMode) -> Result<Option<Monomial>> {
    if spec.is_empty() {
        return Ok(Some(q_insert(spec.l, spec.t, m)?));
    }
    let r = spec.len();
    match mode {
        PsiMode::Strict => match psi_condition(spec, m)? {
            Some(u) => Ok(Some(
                psi_divide(spec, m, u).expect("condition guarantees the division"),
            )),
            None => Ok(None),
        },
        PsiMode::Lenient => {
            for u in 1..=r {
                if let Some(img) = psi_divide(spec, m, u) {
                    return Ok(Some(img));
                }
            }
            Ok(None)
        }
    }
}

fn psi_divide(spec: &PsiSpec, m: &Monomial, u: usize) -> Option<Monomial> {
    let r = spec.len();
    let q = q_insert(spec.l, spec.t, m).ok()?;
    let mut exps = q.exponents().to_vec();
    exps[spec.l - 1] += (1u64 << r) - 1;
    let head = (1u64 << r) - (1u64 << (r - u));
    exps[spec.ls[u - 1] - 1] = exps[spec.ls[u - 1] - 1].checked_sub(head)?;
    for d in u + 1..=r {
        let idx = spec.ls[d - 1] - 1;
        exps[idx] = exps[idx].checked_sub(1u64 << (r - d))?;
    }
    Some(Monomial::new(exps))
}

/// The projection `p_{(l,L)}`: the substitution sending `x_l` to the sum
/// of the variables indexed by `L` (shifted down one), dropping variable
/// `l` and renumbering the rest.
pub fn p_project(l: usize, ls: &[usize], p: &Polynomial) -> Result<Polynomial> {
    let t = p.vars();
    let spec = PsiSpec::new(l, ls.to_vec(), t)?;
    let target = t - 1;
    let mut images = Vec::with_capacity(t);
    for j in 1..=t {
        if j < l {
            images.push(Polynomial::from_monomial(Monomial::variable(j, target)));
        } else if j == l {
            let mut sum = Polynomial::zero(target);
            for &q in spec.ls() {
                sum = sum.add(&Polynomial::from_monomial(Monomial::variable(
                    q - 1,
                    target,
                )))?;
            }
            images.push(sum);
        } else {
            images.push(Polynomial::from_monomial(Monomial::variable(j - 1, target)));
        }
    }
    SubstitutionMap::new(images, target).apply(p)
}

/// The admissibility-preserving lift: `x_l^{2^d - 1} · q_insert(l, m)` in
/// one more variable.
pub fn mothebe_uys_lift(l: usize, d: u32, m: &Monomial) -> Result<Monomial> {
    let t = m.vars() + 1;
    let q = q_insert(l, t, m)?;
    let mut exps = q.exponents().to_vec();
    exps[l - 1] += (1u64 << d) - 1;
    Ok(Monomial::new(exps))
}

/// All pairs `(l, L)` over `t` variables with `r = |L|` in `r_range`.
fn psi_specs(t: usize, min_r: usize) -> Vec<PsiSpec> {
    let mut out = Vec::new();
    for l in 1..=t {
        let pool: Vec<usize> = (l + 1..=t).collect();
        let subsets = 1u32 << pool.len();
        for mask in 0..subsets {
            let ls: Vec<usize> = pool
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect();
            if ls.len() >= min_r {
                out.push(PsiSpec::new(l, ls, t).unwrap());
            }
        }
    }
    out
}

/// The image constructions over a set of `(t-1)`-variable monomials:
/// `phi0` collects all plain insertions, `phi_pos` the nonzero strict `ψ`
/// images with nonempty `L`, filtered to full support. Both deduplicated
/// and sorted.
pub fn phi_sets(v: &[Monomial], t: usize) -> Result<(Vec<Monomial>, Vec<Monomial>)> {
    let mut phi0 = Vec::new();
    for m in v {
        for l in 1..=t {
            phi0.push(q_insert(l, t, m)?);
        }
    }
    let mut phi_pos = Vec::new();
    for spec in psi_specs(t, 1) {
        for m in v {
            if let Some(img) = psi(&spec, m, PsiMode::Strict)? {
                if img.has_full_support() {
                    phi_pos.push(img);
                }
            }
        }
    }
    phi0.sort_by(|a, b| a.order_cmp(b));
    phi0.dedup();
    phi_pos.sort_by(|a, b| a.order_cmp(b));
    phi_pos.dedup();
    Ok((phi0, phi_pos))
}

/// Outcome of checking the admissibility-preservation conjecture at one
/// `(t, n, ω)`.
#[derive(Debug)]
pub struct ConjectureReport {
    /// Monomials of the source weight component that were mapped.
    pub source_count: usize,
    /// Images checked for admissibility.
    pub images_checked: usize,
    /// Images that failed to be admissible; empty means the conjecture
    /// holds here.
    pub failures: Vec<Monomial>,
    /// True when the source component was empty.
    pub vacuous: bool,
}

impl ConjectureReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Applies the `Φ` constructions to the weight-`w` admissible monomials in
/// `t-1` variables and reports every image that is not admissible in `t`
/// variables.
pub fn verify_sum_conjecture(
    engine: &HitCalc,
    t: usize,
    n: u64,
    w: &WeightVector,
) -> Result<ConjectureReport> {
    if w.degree() != n {
        return Err(Error::WeightDegreeMismatch {
            expected: n,
            actual: w.degree(),
        });
    }
    let low = engine.quotient_basis(t - 1, n)?;
    let sources: Vec<Monomial> = low
        .admissible()
        .iter()
        .filter(|m| &m.weight() == w)
        .cloned()
        .collect();
    let (phi0, phi_pos) = phi_sets(&sources, t)?;
    let high = engine.quotient_basis(t, n)?;
    let mut failures = Vec::new();
    let mut checked = 0;
    for img in phi0.iter().chain(&phi_pos) {
        checked += 1;
        if !high.is_admissible(img) {
            failures.push(img.clone());
        }
    }
    Ok(ConjectureReport {
        source_count: sources.len(),
        images_checked: checked,
        failures,
        vacuous: sources.is_empty(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::steenrod::sq;

    fn m(exps: &[u64]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    #[test]
    fn q_insert_examples() {
        assert_eq!(q_insert(1, 4, &m(&[12, 6, 9])).unwrap(), m(&[0, 12, 6, 9]));
        assert_eq!(q_insert(4, 4, &m(&[1, 2, 3])).unwrap(), m(&[1, 2, 3, 0]));
        let x = m(&[5, 3, 8]);
        for l in 1..=4 {
            let q = q_insert(l, 4, &x).unwrap();
            assert_eq!(q.degree(), x.degree());
            assert_eq!(q.weight(), x.weight());
        }
    }

    #[test]
    fn psi_worked_example() {
        let spec = PsiSpec::new(1, vec![2, 3, 4], 4).unwrap();
        let src = m(&[12, 6, 9]);
        assert_eq!(psi_condition(&spec, &src).unwrap(), Some(1));
        let img = psi(&spec, &src, PsiMode::Strict).unwrap().unwrap();
        assert_eq!(img, m(&[7, 8, 4, 8]));
        assert_eq!(img.weight(), src.weight());
    }

    #[test]
    fn psi_strict_rejects_the_squared_image() {
        // Sq^2 of the example source fails the digit clause at d = 2, so
        // the strict map is zero; the lenient division still produces the
        // displayed monomial.
        let spec = PsiSpec::new(1, vec![2, 3, 4], 4).unwrap();
        let src = m(&[12, 8, 9]);
        assert_eq!(psi_condition(&spec, &src).unwrap(), None);
        assert_eq!(psi(&spec, &src, PsiMode::Strict).unwrap(), None);
        assert_eq!(
            psi(&spec, &src, PsiMode::Lenient).unwrap(),
            Some(m(&[7, 8, 6, 8]))
        );
    }

    #[test]
    fn psi_with_empty_list_is_insertion() {
        let spec = PsiSpec::new(2, vec![], 4).unwrap();
        let src = m(&[3, 1, 4]);
        assert_eq!(
            psi(&spec, &src, PsiMode::Strict).unwrap().unwrap(),
            q_insert(2, 4, &src).unwrap()
        );
    }

    #[test]
    fn psi_preserves_weight_when_nonzero() {
        for spec in psi_specs(4, 1) {
            for a in 0..6u64 {
                for b in 0..6u64 {
                    for c in 0..6u64 {
                        let src = m(&[a, b, c]);
                        if let Some(img) = psi(&spec, &src, PsiMode::Strict).unwrap() {
                            assert_eq!(img.weight(), src.weight(), "{src} via {spec:?}");
                            assert_eq!(img.degree(), src.degree());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn projection_examples() {
        let p = Polynomial::from_monomial(m(&[1, 2, 4, 8, 16]));
        let img = p_project(4, &[5], &p).unwrap();
        assert_eq!(img, Polynomial::from_monomial(m(&[1, 2, 4, 24])));
        // p_{(l, ∅)}(x_l) = 0.
        for l in 1..=5 {
            let xl = Polynomial::from_monomial(Monomial::variable(l, 5));
            assert!(p_project(l, &[], &xl).unwrap().is_zero());
        }
    }

    #[test]
    fn projection_respects_weight_filtration() {
        // Every term of p(X) has weight ≤ ω(X).
        let ls_choices: [&[usize]; 3] = [&[5], &[4, 5], &[]];
        for ls in ls_choices {
            for a in 0..4u64 {
                for b in 0..4u64 {
                    let x = m(&[a, 3, b, 2, 5]);
                    let w = x.weight();
                    let img = p_project(3, ls, &Polynomial::from_monomial(x.clone())).unwrap();
                    for term in img.terms() {
                        assert!(term.weight() <= w, "{x} -> {term}");
                    }
                }
            }
        }
    }

    #[test]
    fn q_insert_commutes_with_squares() {
        // q is induced by a variable renaming, so it commutes with Sq^k.
        for l in 1..=4usize {
            for k in 0..=6u64 {
                let src = m(&[3, 5, 2]);
                let lhs = {
                    let img = q_insert(l, 4, &src).unwrap();
                    sq(k, &Polynomial::from_monomial(img))
                };
                let rhs = {
                    let sq_src = sq(k, &Polynomial::from_monomial(src));
                    let terms: Vec<Monomial> = sq_src
                        .terms()
                        .iter()
                        .map(|t| q_insert(l, 4, t).unwrap())
                        .collect();
                    Polynomial::from_terms(4, terms)
                };
                assert_eq!(lhs, rhs, "l={l} k={k}");
            }
        }
    }

    #[test]
    fn psi_does_not_commute_with_squares() {
        // The regression witness: Sq^2 of the ψ image is a single monomial
        // that differs from the ψ image of Sq^2 (which is zero under the
        // strict condition).
        let spec = PsiSpec::new(1, vec![2, 3, 4], 4).unwrap();
        let src = m(&[12, 6, 9]);
        let psi_src = psi(&spec, &src, PsiMode::Strict).unwrap().unwrap();
        let lhs = sq(2, &Polynomial::from_monomial(psi_src));
        assert_eq!(lhs, Polynomial::from_monomial(m(&[9, 8, 4, 8])));
        let sq_src = sq(2, &Polynomial::from_monomial(src));
        assert_eq!(sq_src.terms().len(), 1);
        let rhs = psi(&spec, &sq_src.terms()[0], PsiMode::Strict).unwrap();
        assert_eq!(rhs, None);
    }

    #[test]
    fn lift_shape() {
        let src = m(&[12, 6, 9]);
        let lifted = mothebe_uys_lift(1, 3, &src).unwrap();
        assert_eq!(lifted, m(&[7, 12, 6, 9]));
        let lifted = mothebe_uys_lift(2, 1, &src).unwrap();
        assert_eq!(lifted, m(&[12, 1, 6, 9]));
    }

    #[test]
    fn phi_set_shapes() {
        let (phi0, phi_pos) = phi_sets(&[], 4).unwrap();
        assert!(phi0.is_empty() && phi_pos.is_empty());
        let v = vec![m(&[12, 6, 9])];
        let (phi0, phi_pos) = phi_sets(&v, 4).unwrap();
        assert_eq!(phi0.len(), 4);
        assert!(phi_pos.contains(&m(&[7, 8, 4, 8])));
        assert!(phi_pos.iter().all(|x| x.has_full_support()));
    }
}
