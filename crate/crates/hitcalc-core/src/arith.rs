//! Number-theoretic helpers: binary digit counts, the `μ` function,
//! binomial coefficients mod 2 and generic-degree arithmetic.

/// Number of ones in the binary expansion of `n`.
pub fn alpha(n: u64) -> u32 {
    n.count_ones()
}

/// Least number of summands of the form `2^d - 1` (d ≥ 1) adding up to `n`.
///
/// Computed as the least `r ≥ 0` with `alpha(n + r) ≤ r`; `mu(0) = 0` by the
/// empty-sum convention. The characterisation is validated against a direct
/// partition search in the tests.
pub fn mu(n: u64) -> u64 {
    (0..).find(|&r| u64::from(alpha(n + r)) <= r).unwrap()
}

/// `C(a, b) mod 2` via Lucas: odd exactly when the binary digits of `b`
/// form a subset of those of `a`.
pub fn binom_mod2(a: u64, b: u64) -> bool {
    a & b == b
}

/// A degree of the shape `r(2^d - 1) + m·2^d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenericDegree {
    pub r: u64,
    pub m: u64,
    pub d: u32,
}

impl GenericDegree {
    pub fn new(r: u64, m: u64, d: u32) -> Self {
        GenericDegree { r, m, d }
    }

    /// The plain integer value `r(2^d - 1) + m·2^d`.
    pub fn degree(&self) -> u64 {
        let p = 1u64 << self.d;
        self.r * (p - 1) + self.m * p
    }
}

/// True when the degree-`n` quotient in `t` variables vanishes outright,
/// i.e. `mu(n) > t` (Wood's criterion).
pub fn wood_trivial(t: usize, n: u64) -> bool {
    mu(n) > t as u64
}

/// True when the Kameko squaring map from degree `t + 2n` down to degree `n`
/// is an isomorphism, i.e. `mu(t + 2n) = t`.
pub fn kameko_iso(t: usize, n: u64) -> bool {
    mu(t as u64 + 2 * n) == t as u64
}

/// Closed-form dimension transfer: the `t`-variable quotient in the shifted
/// generic degree is `(2^t - 1)` times the `(t-1)`-variable dimension.
///
/// The caller is responsible for checking the hypothesis via
/// [`transfer_hypothesis`].
pub fn transfer_dimension(t: usize, base_dim: u64) -> u64 {
    ((1u64 << t) - 1) * base_dim
}

/// The arithmetic hypothesis of the dimension transfer:
/// `1 ≤ t-3 ≤ mu(n_zeta) = alpha(n_zeta + mu(n_zeta)) ≤ t-2`.
pub fn transfer_hypothesis(t: usize, n_zeta: u64) -> bool {
    if t < 4 {
        return false;
    }
    let t = t as u64;
    let m = mu(n_zeta);
    t - 3 <= m && m == u64::from(alpha(n_zeta + m)) && m <= t - 2
}
