//! Bit-packed linear algebra over `GF(2)` indexed by monomial rank:
//! degree contexts (ordered monomial enumerations), bit rows and streaming
//! row-echelon spans with rank, membership and coordinate-subspace
//! intersection.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::Polynomial;

const NO_ROW: u32 = u32::MAX;

/// `C(n+t-1, t-1)` without overflow; `None` when it exceeds `u64`.
pub fn composition_count(t: usize, n: u64) -> Option<u64> {
    // C(n + t - 1, t - 1) with t small.
    let k = (t - 1) as u128;
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul(n as u128 + k - i)?;
        acc /= i + 1;
    }
    u64::try_from(acc).ok()
}

/// The enumeration of all monomials of a fixed degree in `t` variables,
/// sorted ascending under the weight-then-exponent order, with rank lookup.
///
/// With `positive_only`, the enumeration is restricted to monomials with
/// full support (every exponent at least 1).
#[derive(Debug)]
pub struct DegreeContext {
    vars: usize,
    degree: u64,
    positive_only: bool,
    monomials: Vec<Monomial>,
    rank_of: HashMap<Monomial, u32>,
}

impl DegreeContext {
    /// All monomials of degree `n` in `t` variables. Errors when the count
    /// exceeds `cap`.
    pub fn new(t: usize, n: u64, cap: u64) -> Result<Self> {
        Self::build(t, n, cap, false)
    }

    /// Only the full-support monomials of degree `n` in `t` variables.
    pub fn positive(t: usize, n: u64, cap: u64) -> Result<Self> {
        Self::build(t, n, cap, true)
    }

    fn build(t: usize, n: u64, cap: u64, positive_only: bool) -> Result<Self> {
        assert!(t >= 1);
        let bound = composition_count(t, n).unwrap_or(u64::MAX);
        if bound > cap {
            return Err(Error::ResourceLimit {
                vars: t,
                degree: n,
                columns: bound,
                cap,
            });
        }
        let mut monomials = Vec::new();
        let floor = u64::from(positive_only);
        if !(positive_only && n < t as u64 * floor.max(1)) {
            let mut exps = vec![0u64; t];
            enumerate(&mut exps, 0, n, floor, &mut monomials);
        }
        fn enumerate(
            exps: &mut Vec<u64>,
            j: usize,
            rem: u64,
            floor: u64,
            out: &mut Vec<Monomial>,
        ) {
            if j + 1 == exps.len() {
                if rem >= floor {
                    exps[j] = rem;
                    out.push(Monomial::new(exps.clone()));
                }
                return;
            }
            let slots_after = (exps.len() - j - 1) as u64;
            let max_here = rem.saturating_sub(floor * slots_after);
            for e in floor..=max_here {
                exps[j] = e;
                enumerate(exps, j + 1, rem - e, floor, out);
            }
        }
        let mut keyed: Vec<(crate::monomial::WeightVector, Monomial)> = monomials
            .into_iter()
            .map(|m| (m.weight(), m))
            .collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.exponents().cmp(b.1.exponents())));
        let monomials: Vec<Monomial> = keyed.into_iter().map(|(_, m)| m).collect();
        let rank_of = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i as u32))
            .collect();
        Ok(DegreeContext {
            vars: t,
            degree: n,
            positive_only,
            monomials,
            rank_of,
        })
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn positive_only(&self) -> bool {
        self.positive_only
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn monomial(&self, rank: usize) -> &Monomial {
        &self.monomials[rank]
    }

    pub fn rank(&self, m: &Monomial) -> Option<usize> {
        self.rank_of.get(m).map(|&r| r as usize)
    }

    /// Packs a homogeneous polynomial of this context's degree into a bit
    /// row. Terms outside the context (wrong degree or support class) are an
    /// error.
    pub fn pack(&self, p: &Polynomial) -> Result<BitRow> {
        let mut row = BitRow::zeros(self.len());
        for m in p.terms() {
            let rank = self.rank(m).ok_or(Error::NonHomogeneous)?;
            row.flip(rank);
        }
        Ok(row)
    }

    /// Unpacks a bit row into the polynomial with the flagged monomials.
    pub fn unpack(&self, row: &BitRow) -> Polynomial {
        let terms: Vec<Monomial> = row
            .iter_bits()
            .map(|rank| self.monomials[rank].clone())
            .collect();
        Polynomial::from_terms(self.vars, terms)
    }
}

/// A packed bit vector over the columns of a degree context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitRow {
    nbits: usize,
    words: Vec<u64>,
}

impl BitRow {
    pub fn zeros(nbits: usize) -> Self {
        BitRow {
            nbits,
            words: vec![0; nbits.div_ceil(64)],
        }
    }

    pub fn len(&self) -> usize {
        self.nbits
    }

    pub fn is_empty(&self) -> bool {
        self.nbits == 0
    }

    pub fn test(&self, bit: usize) -> bool {
        self.words[bit / 64] >> (bit % 64) & 1 == 1
    }

    pub fn set(&mut self, bit: usize) {
        self.words[bit / 64] |= 1 << (bit % 64);
    }

    pub fn flip(&mut self, bit: usize) {
        self.words[bit / 64] ^= 1 << (bit % 64);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// The highest set bit, if any.
    pub fn leading_bit(&self) -> Option<usize> {
        for w in (0..self.words.len()).rev() {
            if self.words[w] != 0 {
                return Some(w * 64 + 63 - self.words[w].leading_zeros() as usize);
            }
        }
        None
    }

    /// XORs `other` into `self` over the first `nwords` words only. The
    /// caller guarantees `other` is zero beyond that prefix.
    fn xor_prefix(&mut self, other: &BitRow, nwords: usize) {
        let (dst, src) = (&mut self.words[..nwords], &other.words[..nwords]);
        for i in 0..nwords {
            dst[i] ^= src[i];
        }
    }

    pub fn xor_in(&mut self, other: &BitRow) {
        debug_assert_eq!(self.nbits, other.nbits);
        let n = self.words.len();
        self.xor_prefix(other, n);
    }

    /// Ascending iterator over set bit positions.
    pub fn iter_bits(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }
}

/// A streaming row-echelon basis of a subspace of a degree context's column
/// space.
///
/// The pivot of a row is its highest set bit, i.e. the largest monomial
/// under the order. In the fully reduced state no pivot bit occurs in any
/// other row, so residuals of [`EchelonSpan::reduce`] read off directly as
/// coordinates over the non-pivot columns. Bulk construction may insert
/// rows forward-only and restore full reduction once at the end with
/// [`EchelonSpan::normalize`]; residuals are canonical either way.
#[derive(Debug)]
pub struct EchelonSpan {
    ncols: usize,
    rows: Vec<BitRow>,
    pivot_of_row: Vec<usize>,
    row_of_pivot: Vec<u32>,
    fully_reduced: bool,
}

impl EchelonSpan {
    pub fn new(ncols: usize) -> Self {
        EchelonSpan {
            ncols,
            rows: Vec::new(),
            pivot_of_row: Vec::new(),
            row_of_pivot: vec![NO_ROW; ncols],
            fully_reduced: true,
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_fully_reduced(&self) -> bool {
        self.fully_reduced
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.row_of_pivot[col] != NO_ROW
    }

    /// Ascending pivot columns.
    pub fn pivots(&self) -> Vec<usize> {
        let mut p = self.pivot_of_row.clone();
        p.sort_unstable();
        p
    }

    /// Estimated retained bytes if the span reached `rank` rows.
    pub fn estimated_bytes(ncols: usize, rank: usize) -> u64 {
        (ncols.div_ceil(64) * 8) as u64 * rank as u64
    }

    /// Reduces `row` in place against every pivot, scanning bits from the
    /// highest down; the residual has no set bit at any pivot column and is
    /// the canonical representative of the coset of `row`.
    pub fn reduce_in_place(&self, row: &mut BitRow) {
        debug_assert_eq!(row.len(), self.ncols);
        let mut w = row.words.len();
        let mut keep: u64 = !0;
        while w > 0 {
            let word = row.words[w - 1] & keep;
            if word == 0 {
                w -= 1;
                keep = !0;
                continue;
            }
            let top = 63 - word.leading_zeros() as usize;
            let col = (w - 1) * 64 + top;
            let r = self.row_of_pivot[col];
            if r == NO_ROW {
                if top == 0 {
                    w -= 1;
                    keep = !0;
                } else {
                    keep = (1u64 << top) - 1;
                }
            } else {
                row.xor_prefix(&self.rows[r as usize], w);
            }
        }
    }

    /// The canonical residual of `row` modulo the span; zero exactly when
    /// `row` is a member.
    pub fn reduce(&self, row: &BitRow) -> BitRow {
        let mut r = row.clone();
        self.reduce_in_place(&mut r);
        r
    }

    /// Membership test.
    pub fn contains(&self, row: &BitRow) -> bool {
        self.reduce(row).is_zero()
    }

    /// Reduces only the leading bit chain: stops as soon as the highest
    /// remaining bit is not a pivot. Sufficient for installation.
    fn reduce_leading(&self, row: &mut BitRow) -> Option<usize> {
        let mut w = row.words.len();
        loop {
            while w > 0 && row.words[w - 1] == 0 {
                w -= 1;
            }
            if w == 0 {
                return None;
            }
            let top = 63 - row.words[w - 1].leading_zeros() as usize;
            let col = (w - 1) * 64 + top;
            let r = self.row_of_pivot[col];
            if r == NO_ROW {
                return Some(col);
            }
            row.xor_prefix(&self.rows[r as usize], w);
        }
    }

    fn install(&mut self, row: BitRow, pivot: usize) {
        self.row_of_pivot[pivot] = self.rows.len() as u32;
        self.pivot_of_row.push(pivot);
        self.rows.push(row);
    }

    /// Inserts `row`, keeping the span fully reduced: the residual is
    /// installed and then cleared from every older row by back
    /// substitution. Returns whether the rank grew.
    pub fn insert(&mut self, row: &BitRow) -> bool {
        debug_assert_eq!(row.len(), self.ncols);
        let mut r = row.clone();
        self.reduce_in_place(&mut r);
        let pivot = match r.leading_bit() {
            None => return false,
            Some(p) => p,
        };
        let nwords = pivot / 64 + 1;
        for old in &mut self.rows {
            if old.test(pivot) {
                old.xor_prefix(&r, nwords);
            }
        }
        self.install(r, pivot);
        true
    }

    /// Forward-only insert for bulk construction: the row is reduced along
    /// its leading-bit chain and installed, leaving older rows untouched.
    /// The span is no longer fully reduced until [`normalize`] runs;
    /// ranks, pivots and residuals are unaffected.
    ///
    /// [`normalize`]: EchelonSpan::normalize
    pub fn insert_forward(&mut self, mut row: BitRow) -> bool {
        debug_assert_eq!(row.len(), self.ncols);
        match self.reduce_leading(&mut row) {
            None => false,
            Some(pivot) => {
                self.install(row, pivot);
                self.fully_reduced = false;
                true
            }
        }
    }

    /// Bulk insert that fully reduces the incoming row first, so installed
    /// rows carry no pivot bits at installation time. Skips the back
    /// substitution into older rows, like [`insert_forward`], but keeps
    /// later reductions nearly cascade-free, which is the faster regime on
    /// the hit-span workloads.
    ///
    /// [`insert_forward`]: EchelonSpan::insert_forward
    pub fn insert_reducing(&mut self, mut row: BitRow) -> bool {
        debug_assert_eq!(row.len(), self.ncols);
        self.reduce_in_place(&mut row);
        match row.leading_bit() {
            None => false,
            Some(pivot) => {
                self.install(row, pivot);
                self.fully_reduced = false;
                true
            }
        }
    }

    /// Restores full reduction in one pass over the rows in ascending pivot
    /// order.
    pub fn normalize(&mut self) {
        if self.fully_reduced {
            return;
        }
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_unstable_by_key(|&i| self.pivot_of_row[i]);
        for idx in order {
            let pivot = self.pivot_of_row[idx];
            let mut row = std::mem::replace(&mut self.rows[idx], BitRow::zeros(0));
            row.flip(pivot);
            // Only lower pivots can occur in the remaining bits, and their
            // rows are already normalized, so one pass settles the row.
            self.reduce_in_place(&mut row);
            row.set(pivot);
            self.rows[idx] = row;
        }
        self.fully_reduced = true;
    }

    /// Dimension of the intersection of the span with the coordinate
    /// subspace supported on `member_cols`.
    ///
    /// The span is re-eliminated in a column order that prefers pivots
    /// outside the member set; rows whose pivot lands inside the set are
    /// then supported entirely inside it and form a basis of the
    /// intersection.
    pub fn intersect_dim(&self, member_cols: &[usize]) -> usize {
        let mut is_member = vec![false; self.ncols];
        for &c in member_cols {
            is_member[c] = true;
        }
        // Members occupy the low positions so that highest-bit pivoting
        // prefers non-members.
        let mut new_pos = vec![0usize; self.ncols];
        let mut next = 0;
        for c in 0..self.ncols {
            if is_member[c] {
                new_pos[c] = next;
                next += 1;
            }
        }
        let members = next;
        for c in 0..self.ncols {
            if !is_member[c] {
                new_pos[c] = next;
                next += 1;
            }
        }
        let mut permuted = EchelonSpan::new(self.ncols);
        for row in &self.rows {
            let mut p = BitRow::zeros(self.ncols);
            for bit in row.iter_bits() {
                p.set(new_pos[bit]);
            }
            permuted.insert_forward(p);
        }
        permuted
            .pivot_of_row
            .iter()
            .filter(|&&p| p < members)
            .count()
    }

    pub fn rows(&self) -> &[BitRow] {
        &self.rows
    }
}

/// A basis of the right kernel `{v : Av = 0}` of the matrix whose rows are
/// `rows`, each of width `ncols`.
pub fn kernel_basis(rows: &[BitRow], ncols: usize) -> Vec<BitRow> {
    let mut span = EchelonSpan::new(ncols);
    for r in rows {
        span.insert_forward(r.clone());
    }
    span.normalize();
    let mut kernel = Vec::with_capacity(ncols - span.rank());
    for free in 0..ncols {
        if span.is_pivot(free) {
            continue;
        }
        let mut v = BitRow::zeros(ncols);
        v.set(free);
        for (i, &pivot) in span.pivot_of_row.iter().enumerate() {
            if span.rows[i].test(free) {
                v.set(pivot);
            }
        }
        kernel.push(v);
    }
    kernel
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn composition_counts() {
        assert_eq!(composition_count(5, 31), Some(52_360));
        assert_eq!(composition_count(5, 30), Some(46_376));
        assert_eq!(composition_count(1, 7), Some(1));
        assert_eq!(composition_count(5, 32), Some(58_905));
    }

    #[test]
    fn context_sizes() {
        assert_eq!(DegreeContext::new(5, 31, 2_000_000).unwrap().len(), 52_360);
        assert_eq!(DegreeContext::new(5, 30, 2_000_000).unwrap().len(), 46_376);
        assert_eq!(DegreeContext::new(1, 9, 100).unwrap().len(), 1);
        assert_eq!(DegreeContext::new(3, 0, 100).unwrap().len(), 1);
        assert!(matches!(
            DegreeContext::new(5, 31, 10_000),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn positive_context() {
        // Full-support monomials of degree n in t variables: C(n-1, t-1).
        let ctx = DegreeContext::positive(3, 6, 1000).unwrap();
        assert_eq!(ctx.len(), 10);
        assert!(ctx.monomials().iter().all(|m| m.has_full_support()));
        assert!(DegreeContext::positive(3, 2, 1000).unwrap().is_empty());
    }

    #[test]
    fn context_is_sorted_with_consistent_ranks() {
        let ctx = DegreeContext::new(4, 9, 10_000).unwrap();
        for w in ctx.monomials().windows(2) {
            assert_eq!(w[0].order_cmp(&w[1]), std::cmp::Ordering::Less);
        }
        for (i, m) in ctx.monomials().iter().enumerate() {
            assert_eq!(ctx.rank(m), Some(i));
        }
    }

    #[test]
    fn pack_round_trip() {
        let ctx = DegreeContext::new(3, 5, 1000).unwrap();
        let p = Polynomial::from_terms(
            3,
            vec![
                Monomial::new(vec![5, 0, 0]),
                Monomial::new(vec![1, 2, 2]),
                Monomial::new(vec![0, 0, 5]),
            ],
        );
        let row = ctx.pack(&p).unwrap();
        assert_eq!(row.count_ones(), 3);
        assert_eq!(ctx.unpack(&row), p);
        // Wrong degree is rejected.
        let bad = Polynomial::from_monomial(Monomial::new(vec![1, 1, 1]));
        assert!(ctx.pack(&bad).is_err());
    }

    fn random_row(rng: &mut StdRng, ncols: usize, density: f64) -> BitRow {
        let mut r = BitRow::zeros(ncols);
        for c in 0..ncols {
            if rng.gen_bool(density) {
                r.set(c);
            }
        }
        r
    }

    #[test]
    fn insert_basics() {
        let mut span = EchelonSpan::new(100);
        let mut row = BitRow::zeros(100);
        row.set(3);
        row.set(77);
        assert!(span.insert(&row));
        assert_eq!(span.rank(), 1);
        assert!(!span.insert(&row));
        assert_eq!(span.rank(), 1);
        assert!(span.contains(&row));
        assert!(!span.contains(&{
            let mut r = BitRow::zeros(100);
            r.set(3);
            r
        }));
        // Reduce against the empty span is the identity.
        let empty = EchelonSpan::new(100);
        assert_eq!(empty.reduce(&row), row);
    }

    /// Dense RREF oracle: textbook Gaussian elimination on a boolean
    /// matrix, fully independent of the streaming engine.
    fn dense_rref(rows: &[Vec<bool>]) -> (usize, Vec<Vec<bool>>, Vec<usize>) {
        let mut m: Vec<Vec<bool>> = rows.to_vec();
        let ncols = m.first().map_or(0, Vec::len);
        let mut pivots = Vec::new();
        let mut rank = 0;
        // Pivot on the highest column first to match the engine's
        // largest-monomial convention.
        for col in (0..ncols).rev() {
            let Some(sel) = (rank..m.len()).find(|&i| m[i][col]) else {
                continue;
            };
            m.swap(rank, sel);
            let pivot_row = m[rank].clone();
            for (i, row) in m.iter_mut().enumerate() {
                if i != rank && row[col] {
                    for c in 0..ncols {
                        row[c] ^= pivot_row[c];
                    }
                }
            }
            pivots.push(col);
            rank += 1;
        }
        m.truncate(rank);
        (rank, m, pivots)
    }

    fn to_dense(row: &BitRow) -> Vec<bool> {
        (0..row.len()).map(|c| row.test(c)).collect()
    }

    #[test]
    fn matches_dense_rref_oracle() {
        let mut rng = StdRng::seed_from_u64(42);
        for &(nrows, ncols, density) in
            &[(20, 37, 0.3), (60, 64, 0.5), (80, 65, 0.1), (200, 128, 0.04)]
        {
            let rows: Vec<BitRow> = (0..nrows)
                .map(|_| random_row(&mut rng, ncols, density))
                .collect();
            let dense: Vec<Vec<bool>> = rows.iter().map(to_dense).collect();
            let (rank, rref, mut pivots) = dense_rref(&dense);

            let mut span = EchelonSpan::new(ncols);
            for r in &rows {
                span.insert(r);
            }
            assert_eq!(span.rank(), rank);
            pivots.sort_unstable();
            assert_eq!(span.pivots(), pivots);

            // Residuals agree with reduction against the dense RREF.
            for _ in 0..20 {
                let probe = random_row(&mut rng, ncols, 0.3);
                let mut expect = to_dense(&probe);
                for row in &rref {
                    let pc = (0..ncols).rev().find(|&c| row[c]).unwrap();
                    if expect[pc] {
                        for c in 0..ncols {
                            expect[c] ^= row[c];
                        }
                    }
                }
                assert_eq!(to_dense(&span.reduce(&probe)), expect);
            }
        }
    }

    #[test]
    fn forward_insert_and_normalize_match_full_insert() {
        let mut rng = StdRng::seed_from_u64(7);
        let rows: Vec<BitRow> = (0..120).map(|_| random_row(&mut rng, 200, 0.2)).collect();
        let mut a = EchelonSpan::new(200);
        let mut b = EchelonSpan::new(200);
        for r in &rows {
            a.insert(r);
            b.insert_forward(r.clone());
        }
        assert_eq!(a.rank(), b.rank());
        assert_eq!(a.pivots(), b.pivots());
        assert!(a.is_fully_reduced());
        assert!(!b.is_fully_reduced());
        for _ in 0..30 {
            let probe = random_row(&mut rng, 200, 0.3);
            assert_eq!(a.reduce(&probe), b.reduce(&probe));
        }
        b.normalize();
        assert!(b.is_fully_reduced());
        for (i, &p) in b.pivot_of_row.iter().enumerate() {
            for (j, row) in b.rows.iter().enumerate() {
                assert_eq!(row.test(p), i == j, "pivot {p} in row {j}");
            }
        }
    }

    #[test]
    fn fully_reduced_invariant_after_public_inserts() {
        let mut rng = StdRng::seed_from_u64(3);
        let mut span = EchelonSpan::new(90);
        for _ in 0..70 {
            span.insert(&random_row(&mut rng, 90, 0.25));
        }
        assert!(span.is_fully_reduced());
        for (i, &p) in span.pivot_of_row.iter().enumerate() {
            for (j, row) in span.rows.iter().enumerate() {
                assert_eq!(row.test(p), i == j);
            }
        }
    }

    #[test]
    fn rank_is_insertion_order_independent() {
        let mut rng = StdRng::seed_from_u64(11);
        let rows: Vec<BitRow> = (0..80).map(|_| random_row(&mut rng, 150, 0.15)).collect();
        let mut base = EchelonSpan::new(150);
        for r in &rows {
            base.insert_forward(r.clone());
        }
        for seed in 0..5u64 {
            let mut shuffled = rows.clone();
            let mut rng = StdRng::seed_from_u64(seed);
            for i in (1..shuffled.len()).rev() {
                shuffled.swap(i, rng.gen_range(0..=i));
            }
            let mut span = EchelonSpan::new(150);
            for r in shuffled {
                span.insert_forward(r);
            }
            assert_eq!(span.rank(), base.rank());
            assert_eq!(span.pivots(), base.pivots());
        }
    }

    #[test]
    fn intersect_dim_oracle() {
        let mut rng = StdRng::seed_from_u64(23);
        for trial in 0..12 {
            let ncols = 24;
            let nrows = 6 + trial % 6;
            let rows: Vec<BitRow> = (0..nrows)
                .map(|_| random_row(&mut rng, ncols, 0.3))
                .collect();
            let mut span = EchelonSpan::new(ncols);
            for r in &rows {
                span.insert(r);
            }
            let members: Vec<usize> = (0..ncols).filter(|_| rng.gen_bool(0.4)).collect();
            let got = span.intersect_dim(&members);

            // Oracle: enumerate all 2^rank span elements and eliminate those
            // supported inside the member set.
            let mut inside = EchelonSpan::new(ncols);
            let basis = span.rows();
            for mask in 0u32..1 << span.rank() {
                let mut v = BitRow::zeros(ncols);
                for (i, row) in basis.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        v.xor_in(row);
                    }
                }
                let ok = v
                    .iter_bits()
                    .all(|b| members.contains(&b));
                if ok {
                    inside.insert(&v);
                }
            }
            assert_eq!(got, inside.rank(), "trial {trial}");
        }
    }

    #[test]
    fn intersect_dim_degenerate_cases() {
        // Span = whole space: intersection with any k columns has dim k.
        let mut span = EchelonSpan::new(12);
        for c in 0..12 {
            let mut r = BitRow::zeros(12);
            r.set(c);
            span.insert(&r);
        }
        assert_eq!(span.intersect_dim(&[1, 5, 9]), 3);
        // Span orthogonal to the member columns.
        let mut span = EchelonSpan::new(12);
        let mut r = BitRow::zeros(12);
        r.set(0);
        r.set(2);
        span.insert(&r);
        assert_eq!(span.intersect_dim(&[5, 7]), 0);
    }

    #[test]
    fn modular_law_on_random_spans() {
        // dim(A + B) + dim(A ∩ B) = dim A + dim B with B a coordinate
        // subspace.
        let mut rng = StdRng::seed_from_u64(31);
        for _ in 0..10 {
            let ncols = 20;
            let rows: Vec<BitRow> = (0..8).map(|_| random_row(&mut rng, ncols, 0.3)).collect();
            let mut a = EchelonSpan::new(ncols);
            for r in &rows {
                a.insert(r);
            }
            let members: Vec<usize> = (0..ncols).filter(|_| rng.gen_bool(0.35)).collect();
            let dim_b = members.len();
            let mut sum = EchelonSpan::new(ncols);
            for r in &rows {
                sum.insert(r);
            }
            for &c in &members {
                let mut unit = BitRow::zeros(ncols);
                unit.set(c);
                sum.insert(&unit);
            }
            assert_eq!(
                sum.rank() + a.intersect_dim(&members),
                a.rank() + dim_b
            );
        }
    }

    #[test]
    fn kernel_vectors_annihilate_rows() {
        let mut rng = StdRng::seed_from_u64(57);
        let ncols = 30;
        let rows: Vec<BitRow> = (0..18).map(|_| random_row(&mut rng, ncols, 0.3)).collect();
        let kernel = kernel_basis(&rows, ncols);
        let mut span = EchelonSpan::new(ncols);
        for r in &rows {
            span.insert(r);
        }
        assert_eq!(kernel.len(), ncols - span.rank());
        for v in &kernel {
            for r in &rows {
                let dot = r
                    .iter_bits()
                    .filter(|&b| v.test(b))
                    .count();
                assert_eq!(dot % 2, 0);
            }
        }
        // Independence: eliminating the kernel vectors keeps them all.
        let mut kspan = EchelonSpan::new(ncols);
        for v in &kernel {
            assert!(kspan.insert(v));
        }
    }
}
