//! Hit subspaces and their quotients: dimensions, admissible monomial
//! bases, weight-filtered and support-split components, the Kameko map and
//! hit-detection criteria.
//!
//! The hit subspace in degree `n` is spanned by the rows `Sq^{2^i}(M)` over
//! all monomials `M` of degree `n - 2^i`. Because a Steenrod square never
//! moves a zero exponent off zero, those rows split block-diagonally by the
//! support set of the source monomial, and each block with `s` active
//! variables is a relabelled copy of the full-support problem in `s`
//! variables. The default strategy eliminates one positive block per active
//! variable count and assembles ranks with binomial multiplicities; the
//! direct strategy eliminates the whole context at once and serves as a
//! cross-check.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::arith::wood_trivial;
use crate::error::{Error, Result};
use crate::exec::{self, ExecMode};
use crate::linalg::{composition_count, BitRow, DegreeContext, EchelonSpan};
use crate::monomial::{minimal_spike, Monomial, WeightVector};
use crate::poly::Polynomial;
use crate::steenrod::sq_monomial_terms;

/// Default ceiling on the number of columns of a degree context.
pub const DEFAULT_COLUMN_CAP: u64 = 2_000_000;

/// Which support class of monomials an operation should see.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SupportPart {
    /// No restriction.
    All,
    /// Monomials with at least one zero exponent.
    Zero,
    /// Monomials with full support.
    Positive,
}

impl SupportPart {
    fn admits(self, m: &Monomial) -> bool {
        match self {
            SupportPart::All => true,
            SupportPart::Zero => !m.has_full_support(),
            SupportPart::Positive => m.has_full_support(),
        }
    }
}

/// Elimination strategy for building quotient bases.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Per-support-block elimination with binomial assembly (default).
    Blocked,
    /// One elimination over the whole degree context; the cross-check mode.
    Direct,
}

/// Per-family elimination record: the square exponent, how many source
/// monomials were expanded, the rank of the family alone (when traced) and
/// the rank accumulated so far.
#[derive(Debug, Clone)]
pub struct FamilyTrace {
    pub square: u64,
    pub source_count: u64,
    pub standalone_rank: Option<u64>,
    pub cumulative_rank: u64,
}

/// The elimination trace of a hit-span computation.
#[derive(Debug, Clone)]
pub struct HitTrace {
    pub vars: usize,
    pub degree: u64,
    pub families: Vec<FamilyTrace>,
    pub columns: u64,
    pub hit_rank: u64,
    pub dim: u64,
}

impl HitTrace {
    /// Text form mirroring the print order of the reference computer-algebra
    /// run: source counts, then per family the label and standalone rank,
    /// with running totals from the second family on, then the ambient
    /// dimension, the final rank and the quotient dimension. `None` when the
    /// trace was built without standalone ranks.
    pub fn echo(&self) -> Option<String> {
        use fmt::Write;
        let mut out = String::new();
        let counts: Vec<String> = self
            .families
            .iter()
            .map(|f| f.source_count.to_string())
            .collect();
        writeln!(out, "[ {} ]", counts.join(", ")).unwrap();
        for (i, fam) in self.families.iter().enumerate() {
            writeln!(out, "S{}", fam.square).unwrap();
            writeln!(out, "{}", fam.standalone_rank?).unwrap();
            if i > 0 {
                writeln!(out, "{}", fam.cumulative_rank).unwrap();
            }
        }
        writeln!(out).unwrap();
        writeln!(out, "{}", self.columns).unwrap();
        writeln!(out, "{}", self.hit_rank).unwrap();
        writeln!(out, "{}", self.dim).unwrap();
        Some(out)
    }
}

impl fmt::Display for HitTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "t={} n={}: {} columns, hit rank {}, dim {}",
            self.vars, self.degree, self.columns, self.hit_rank, self.dim
        )
    }
}

/// The square exponents `2^i ≤ n`, matching the generator families the
/// reference computation runs; families with `2^{i+1} > n` contribute only
/// zero rows and rank 0.
fn family_squares(n: u64) -> Vec<u64> {
    let mut v = Vec::new();
    let mut k = 1u64;
    while k <= n {
        v.push(k);
        k <<= 1;
    }
    v
}

fn binom_u64(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc
}

/// One eliminated full-support block: the positive sub-problem in `s`
/// variables at degree `n`.
#[derive(Debug)]
pub struct PositiveBlock {
    context: DegreeContext,
    span: EchelonSpan,
    families: Vec<FamilyTrace>,
}

impl PositiveBlock {
    pub fn context(&self) -> &DegreeContext {
        &self.context
    }

    pub fn span(&self) -> &EchelonSpan {
        &self.span
    }

    pub fn rank(&self) -> u64 {
        self.span.rank() as u64
    }

    /// Admissible monomials of the block: non-pivot columns, already in
    /// ascending order.
    fn admissible(&self) -> Vec<Monomial> {
        (0..self.context.len())
            .filter(|&r| !self.span.is_pivot(r))
            .map(|r| self.context.monomial(r).clone())
            .collect()
    }
}

fn build_positive_block(
    s: usize,
    n: u64,
    cap: u64,
    mode: ExecMode,
    traced: bool,
) -> Result<PositiveBlock> {
    let context = DegreeContext::positive(s, n, cap)?;
    let mut span = EchelonSpan::new(context.len());
    let mut families = Vec::new();
    for k in family_squares(n) {
        let src_degree = n - k;
        let mut standalone = traced.then(|| EchelonSpan::new(context.len()));
        let mut source_count = 0u64;
        if src_degree >= s as u64 && k <= src_degree && !context.is_empty() {
            let sources = DegreeContext::positive(s, src_degree, cap)?;
            source_count = sources.len() as u64;
            // Pre-reduction would corrupt the standalone span, which needs
            // the raw generator rows; traced builds stay on the raw path.
            let pre_reduce = mode == ExecMode::Parallel && !traced;
            let batch = 512;
            let mut start = 0;
            while start < sources.len() {
                let end = (start + batch).min(sources.len());
                let rows = exec::map_indices(mode, end - start, |i| {
                    let m = sources.monomial(start + i);
                    let mut terms = Vec::new();
                    sq_monomial_terms(k, m, &mut terms);
                    if terms.is_empty() {
                        return None;
                    }
                    let mut row = BitRow::zeros(context.len());
                    for term in &terms {
                        debug_assert_eq!(term.support_mask(), m.support_mask());
                        row.flip(context.rank(term).expect("term stays in block"));
                    }
                    if !pre_reduce {
                        return Some(row);
                    }
                    // Speculative pre-reduction against the span as of the
                    // start of the batch; installation below re-reduces
                    // against anything newer. The standalone span gets the
                    // raw row instead, so trace building skips this path.
                    let row = span.reduce(&row);
                    (!row.is_zero()).then_some(row)
                });
                for row in rows.into_iter().flatten() {
                    if let Some(st) = standalone.as_mut() {
                        st.insert_reducing(row.clone());
                    }
                    span.insert_reducing(row);
                }
                start = end;
            }
        } else if src_degree >= s as u64 {
            // Sources exist but every image vanishes by instability.
            source_count = composition_count(s, src_degree - s as u64).unwrap_or(0);
        }
        families.push(FamilyTrace {
            square: k,
            source_count,
            standalone_rank: standalone.map(|st| st.rank() as u64),
            cumulative_rank: span.rank() as u64,
        });
    }
    span.normalize();
    Ok(PositiveBlock {
        context,
        span,
        families,
    })
}

/// Keeps the exponents at the positions set in `mask`.
fn compress_to_support(m: &Monomial, mask: u32) -> Monomial {
    let exps = m
        .exponents()
        .iter()
        .enumerate()
        .filter(|(j, _)| mask >> j & 1 == 1)
        .map(|(_, &e)| e)
        .collect();
    Monomial::new(exps)
}

/// Places the exponents of an `s`-variable monomial at the positions set in
/// `mask`, zero elsewhere.
fn embed_in_support(m: &Monomial, mask: u32, t: usize) -> Monomial {
    let mut exps = vec![0u64; t];
    let mut src = m.exponents().iter();
    for (j, e) in exps.iter_mut().enumerate() {
        if mask >> j & 1 == 1 {
            *e = *src.next().unwrap();
        }
    }
    debug_assert!(src.next().is_none());
    Monomial::new(exps)
}

#[derive(Debug)]
enum SpanStore {
    Direct(DegreeContext, EchelonSpan),
    /// One shared block per active variable count `1..=t` (`None` when the
    /// degree cannot support that many positive exponents).
    Blocked(Vec<Option<Arc<PositiveBlock>>>),
    /// Degree zero: the one-dimensional space of constants.
    Constants,
}

/// An admissible monomial basis of the degree-`n` quotient in `t`
/// variables, together with the reduction data expressing any class in
/// admissible coordinates.
#[derive(Debug)]
pub struct QuotientBasis {
    vars: usize,
    degree: u64,
    columns: u64,
    admissible: Vec<Monomial>,
    store: SpanStore,
    trace: HitTrace,
}

impl QuotientBasis {
    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    /// Number of monomials in the ambient degree context.
    pub fn columns(&self) -> u64 {
        self.columns
    }

    pub fn dim(&self) -> usize {
        self.admissible.len()
    }

    /// The admissible monomials, ascending under the monomial order.
    pub fn admissible(&self) -> &[Monomial] {
        &self.admissible
    }

    pub fn trace(&self) -> &HitTrace {
        &self.trace
    }

    /// Index of `m` in the admissible list, `None` when `m` is not
    /// admissible (or not of this degree).
    pub fn admissible_index(&self, m: &Monomial) -> Option<usize> {
        self.admissible
            .binary_search_by(|probe| probe.order_cmp(m))
            .ok()
    }

    pub fn is_admissible(&self, m: &Monomial) -> bool {
        self.admissible_index(m).is_some()
    }

    fn check_degree(&self, p: &Polynomial) -> Result<()> {
        if p.vars() != self.vars {
            return Err(Error::VariableMismatch {
                left: p.vars(),
                right: self.vars,
            });
        }
        if p.is_zero() {
            return Ok(());
        }
        match p.homogeneous_degree() {
            Some(d) if d == self.degree => Ok(()),
            _ => Err(Error::NonHomogeneous),
        }
    }

    /// The canonical representative of `[p]`: the sum of admissible
    /// monomials congruent to `p` modulo the hit subspace. Hit elements
    /// reduce to zero.
    pub fn reduce_to_admissible(&self, p: &Polynomial) -> Result<Polynomial> {
        let terms = self.residual_terms(p)?;
        Ok(Polynomial::from_terms(self.vars, terms))
    }

    /// Coordinates of `[p]` over the admissible list as a bit row.
    pub fn reduce_coords(&self, p: &Polynomial) -> Result<BitRow> {
        let mut coords = BitRow::zeros(self.admissible.len());
        for m in self.residual_terms(p)? {
            let idx = self
                .admissible_index(&m)
                .expect("residual terms are admissible");
            coords.flip(idx);
        }
        Ok(coords)
    }

    /// True when `p` lies in the hit subspace.
    pub fn is_hit(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.residual_terms(p)?.is_empty())
    }

    fn residual_terms(&self, p: &Polynomial) -> Result<Vec<Monomial>> {
        self.check_degree(p)?;
        match &self.store {
            SpanStore::Constants => {
                // Degree zero: no hit elements, the class is p itself.
                Ok(p.terms().to_vec())
            }
            SpanStore::Direct(context, span) => {
                let row = context.pack(p)?;
                let residual = span.reduce(&row);
                Ok(residual
                    .iter_bits()
                    .map(|r| context.monomial(r).clone())
                    .collect())
            }
            SpanStore::Blocked(blocks) => {
                let mut by_mask: HashMap<u32, Vec<&Monomial>> = HashMap::new();
                for m in p.terms() {
                    by_mask.entry(m.support_mask()).or_default().push(m);
                }
                let mut out = Vec::new();
                for (mask, terms) in by_mask {
                    let s = mask.count_ones() as usize;
                    let block = blocks[s - 1]
                        .as_ref()
                        .expect("degree admits this support size");
                    let mut row = BitRow::zeros(block.context.len());
                    for m in terms {
                        let compressed = compress_to_support(m, mask);
                        row.flip(
                            block
                                .context
                                .rank(&compressed)
                                .expect("compressed term is in block"),
                        );
                    }
                    let residual = block.span.reduce(&row);
                    out.extend(residual.iter_bits().map(|r| {
                        embed_in_support(block.context.monomial(r), mask, self.vars)
                    }));
                }
                Ok(out)
            }
        }
    }

    /// Number of admissible monomials with weight vector exactly `w`,
    /// restricted to a support part. This counts a basis of the
    /// weight-`w` component of the quotient.
    pub fn dim_omega(&self, w: &WeightVector, part: SupportPart) -> Result<u64> {
        if w.degree() != self.degree {
            return Err(Error::WeightDegreeMismatch {
                expected: self.degree,
                actual: w.degree(),
            });
        }
        Ok(self
            .admissible
            .iter()
            .filter(|m| part.admits(m) && &m.weight() == w)
            .count() as u64)
    }

    /// Dimension of the support-restricted quotient: admissible monomials
    /// in the given part.
    pub fn dim_part(&self, part: SupportPart) -> u64 {
        self.admissible.iter().filter(|m| part.admits(m)).count() as u64
    }
}

/// Configuration for a [`HitCalc`] engine.
#[derive(Debug, Clone, Copy)]
pub struct HitCalcConfig {
    pub column_cap: u64,
    pub mode: ExecMode,
    pub strategy: Strategy,
}

impl Default for HitCalcConfig {
    fn default() -> Self {
        HitCalcConfig {
            column_cap: DEFAULT_COLUMN_CAP,
            mode: ExecMode::default(),
            strategy: Strategy::Blocked,
        }
    }
}

type BlockCell = Arc<OnceLock<std::result::Result<Arc<PositiveBlock>, Error>>>;
type BasisCell = Arc<OnceLock<std::result::Result<Arc<QuotientBasis>, Error>>>;

/// The computation engine: builds and memoizes quotient bases per
/// `(t, n)`, sharing positive blocks across variable counts.
#[derive(Debug, Default)]
pub struct HitCalc {
    config: HitCalcConfig,
    blocks: Mutex<HashMap<(usize, u64, bool), BlockCell>>,
    bases: Mutex<HashMap<(usize, u64, bool), BasisCell>>,
}

impl HitCalc {
    pub fn new() -> Self {
        HitCalc::with_config(HitCalcConfig::default())
    }

    pub fn with_config(config: HitCalcConfig) -> Self {
        HitCalc {
            config,
            blocks: Mutex::new(HashMap::new()),
            bases: Mutex::new(HashMap::new()),
        }
    }

    pub fn config(&self) -> &HitCalcConfig {
        &self.config
    }

    fn block(&self, s: usize, n: u64, traced: bool) -> Result<Arc<PositiveBlock>> {
        // A traced block serves untraced requests.
        if !traced {
            if let Some(cell) = self.blocks.lock().unwrap().get(&(s, n, true)) {
                if let Some(Ok(block)) = cell.get() {
                    return Ok(block.clone());
                }
            }
        }
        let cell: BlockCell = {
            let mut map = self.blocks.lock().unwrap();
            map.entry((s, n, traced)).or_default().clone()
        };
        cell.get_or_init(|| {
            build_positive_block(s, n, self.config.column_cap, self.config.mode, traced)
                .map(Arc::new)
        })
        .clone()
    }

    /// The quotient basis at `(t, n)`, memoized. Standalone family ranks
    /// are not computed; use [`HitCalc::quotient_basis_traced`] for the
    /// full elimination trace.
    pub fn quotient_basis(&self, t: usize, n: u64) -> Result<Arc<QuotientBasis>> {
        self.basis(t, n, false)
    }

    /// The quotient basis with per-family standalone ranks, at roughly
    /// twice the elimination cost.
    pub fn quotient_basis_traced(&self, t: usize, n: u64) -> Result<Arc<QuotientBasis>> {
        self.basis(t, n, true)
    }

    fn basis(&self, t: usize, n: u64, traced: bool) -> Result<Arc<QuotientBasis>> {
        if !traced {
            if let Some(cell) = self.bases.lock().unwrap().get(&(t, n, true)) {
                if let Some(Ok(basis)) = cell.get() {
                    return Ok(basis.clone());
                }
            }
        }
        let cell: BasisCell = {
            let mut map = self.bases.lock().unwrap();
            map.entry((t, n, traced)).or_default().clone()
        };
        cell.get_or_init(|| self.build_basis(t, n, traced).map(Arc::new))
            .clone()
    }

    fn build_basis(&self, t: usize, n: u64, traced: bool) -> Result<QuotientBasis> {
        if n == 0 {
            let trace = HitTrace {
                vars: t,
                degree: 0,
                families: Vec::new(),
                columns: 1,
                hit_rank: 0,
                dim: 1,
            };
            return Ok(QuotientBasis {
                vars: t,
                degree: 0,
                columns: 1,
                admissible: vec![Monomial::one(t)],
                store: SpanStore::Constants,
                trace,
            });
        }
        match self.config.strategy {
            Strategy::Blocked => self.build_blocked(t, n, traced),
            Strategy::Direct => self.build_direct(t, n, traced),
        }
    }

    fn build_blocked(&self, t: usize, n: u64, traced: bool) -> Result<QuotientBasis> {
        let columns =
            composition_count(t, n).filter(|&c| c <= self.config.column_cap).ok_or(
                Error::ResourceLimit {
                    vars: t,
                    degree: n,
                    columns: composition_count(t, n).unwrap_or(u64::MAX),
                    cap: self.config.column_cap,
                },
            )?;
        let mut blocks: Vec<Option<Arc<PositiveBlock>>> = Vec::with_capacity(t);
        for s in 1..=t {
            if (s as u64) <= n {
                blocks.push(Some(self.block(s, n, traced)?));
            } else {
                blocks.push(None);
            }
        }

        // Assemble the trace with binomial multiplicities: every support
        // set of size s contributes an isomorphic copy of block s.
        let squares = family_squares(n);
        let mut families = Vec::with_capacity(squares.len());
        for (fi, &k) in squares.iter().enumerate() {
            let source_count = composition_count(t, n - k).unwrap_or(0);
            let mut standalone = traced.then_some(0u64);
            let mut cumulative = 0u64;
            for (s, block) in blocks.iter().enumerate() {
                let Some(block) = block else { continue };
                let mult = binom_u64(t, s + 1);
                let fam = &block.families[fi];
                cumulative += mult * fam.cumulative_rank;
                if let (Some(acc), Some(st)) = (standalone.as_mut(), fam.standalone_rank) {
                    *acc += mult * st;
                }
            }
            families.push(FamilyTrace {
                square: k,
                source_count,
                standalone_rank: standalone,
                cumulative_rank: cumulative,
            });
        }
        let hit_rank: u64 = blocks
            .iter()
            .enumerate()
            .filter_map(|(s, b)| b.as_ref().map(|b| binom_u64(t, s + 1) * b.rank()))
            .sum();

        // The admissible basis: every block's non-pivot monomials, embedded
        // into each support set of the right size.
        let mut admissible = Vec::new();
        for (s, block) in blocks.iter().enumerate() {
            let Some(block) = block else { continue };
            let block_admissible = block.admissible();
            if block_admissible.is_empty() {
                continue;
            }
            for mask in 1u32..1 << t {
                if mask.count_ones() as usize != s + 1 {
                    continue;
                }
                admissible.extend(
                    block_admissible
                        .iter()
                        .map(|m| embed_in_support(m, mask, t)),
                );
            }
        }
        admissible.sort_by(|a, b| a.order_cmp(b));
        let dim = admissible.len() as u64;
        debug_assert_eq!(dim, columns - hit_rank);

        let trace = HitTrace {
            vars: t,
            degree: n,
            families,
            columns,
            hit_rank,
            dim,
        };
        Ok(QuotientBasis {
            vars: t,
            degree: n,
            columns,
            admissible,
            store: SpanStore::Blocked(blocks),
            trace,
        })
    }

    fn build_direct(&self, t: usize, n: u64, traced: bool) -> Result<QuotientBasis> {
        let (context, span, trace) =
            hit_span(t, n, self.config.column_cap, self.config.mode, traced)?;
        let admissible: Vec<Monomial> = (0..context.len())
            .filter(|&r| !span.is_pivot(r))
            .map(|r| context.monomial(r).clone())
            .collect();
        Ok(QuotientBasis {
            vars: t,
            degree: n,
            columns: context.len() as u64,
            admissible,
            store: SpanStore::Direct(context, span),
            trace,
        })
    }

    /// `dim Q^{⊗t}_n`: 1 in degree zero, 0 outright when `mu(n) > t`
    /// (Wood's criterion), otherwise columns minus hit rank.
    pub fn dim_q(&self, t: usize, n: u64) -> Result<u64> {
        if n == 0 {
            return Ok(1);
        }
        if wood_trivial(t, n) {
            return Ok(0);
        }
        Ok(self.quotient_basis(t, n)?.dim() as u64)
    }

    /// Dimension of the weight-`w` component, restricted to a support part.
    pub fn dim_q_omega(
        &self,
        t: usize,
        n: u64,
        w: &WeightVector,
        part: SupportPart,
    ) -> Result<u64> {
        self.quotient_basis(t, n)?.dim_omega(w, part)
    }

    /// True when `p` is hit (a sum of Steenrod-square images).
    pub fn is_hit(&self, p: &Polynomial) -> Result<bool> {
        let n = p.homogeneous_degree().ok_or(Error::NonHomogeneous)?;
        self.quotient_basis(p.vars(), n)?.is_hit(p)
    }

    /// The canonical admissible representative of `[p]`.
    pub fn reduce_to_admissible(&self, p: &Polynomial) -> Result<Polynomial> {
        let n = p.homogeneous_degree().ok_or(Error::NonHomogeneous)?;
        self.quotient_basis(p.vars(), n)?.reduce_to_admissible(p)
    }

    /// Kernel dimension of the Kameko map from degree `t + 2n` onto degree
    /// `n`: the dimension difference, by rank-nullity for a surjection.
    /// Zero without any elimination when the map is an isomorphism.
    pub fn kameko_kernel_dim(&self, t: usize, n_low: u64) -> Result<u64> {
        if crate::arith::kameko_iso(t, n_low) {
            return Ok(0);
        }
        let high = self.dim_q(t, t as u64 + 2 * n_low)?;
        let low = self.dim_q(t, n_low)?;
        Ok(high - low)
    }

    /// The matrix of the induced Kameko map on admissible bases: one column
    /// per admissible monomial of the source degree `t + 2n_low`, in
    /// coordinates over the admissible basis of degree `n_low`.
    pub fn kameko_matrix(&self, t: usize, n_low: u64) -> Result<Vec<BitRow>> {
        let high = self.quotient_basis(t, t as u64 + 2 * n_low)?;
        let low = self.quotient_basis(t, n_low)?;
        high.admissible()
            .iter()
            .map(|m| match kameko_down(m) {
                Some(image) => low.reduce_coords(&Polynomial::from_monomial(image)),
                None => Ok(BitRow::zeros(low.dim())),
            })
            .collect()
    }

    /// Whether the induced Kameko map hits every class of the target
    /// degree: the columns of [`HitCalc::kameko_matrix`] span the target.
    pub fn kameko_surjective(&self, t: usize, n_low: u64) -> Result<bool> {
        let low_dim = self.quotient_basis(t, n_low)?.dim();
        let columns = self.kameko_matrix(t, n_low)?;
        let mut span = EchelonSpan::new(low_dim);
        for col in columns {
            span.insert_forward(col);
        }
        Ok(span.rank() == low_dim)
    }

    /// Kameko's criterion: with `y` inadmissible and every exponent of `x`
    /// below `2^s` (all weight entries beyond position `s` vanish), the
    /// product `x · y^{2^s}` is inadmissible without computing its degree
    /// context.
    pub fn ks_criterion(&self, x: &Monomial, y: &Monomial, s: u32) -> Result<bool> {
        if x.vars() != y.vars() {
            return Err(Error::VariableMismatch {
                left: x.vars(),
                right: y.vars(),
            });
        }
        let w = x.weight();
        let applicable = w.entries().iter().skip(s as usize).all(|&e| e == 0);
        if !applicable {
            return Ok(false);
        }
        let qb = self.quotient_basis(y.vars(), y.degree())?;
        Ok(!qb.is_admissible(y))
    }
}

/// Builds the full hit span over the whole degree context, inserting the
/// generator families `Sq^{2^i}` in ascending order. The direct form of
/// the computation; the blocked strategy reproduces its ranks block by
/// block.
pub fn hit_span(
    t: usize,
    n: u64,
    cap: u64,
    mode: ExecMode,
    traced: bool,
) -> Result<(DegreeContext, EchelonSpan, HitTrace)> {
    let context = DegreeContext::new(t, n, cap)?;
    let mut span = EchelonSpan::new(context.len());
    let mut families = Vec::new();
    for k in family_squares(n) {
        let sources = DegreeContext::new(t, n - k, cap)?;
        let mut standalone = traced.then(|| EchelonSpan::new(context.len()));
        let pre_reduce = mode == ExecMode::Parallel && !traced;
        let batch = 512;
        let mut start = 0;
        while start < sources.len() {
            let end = (start + batch).min(sources.len());
            let rows = exec::map_indices(mode, end - start, |i| {
                let m = sources.monomial(start + i);
                let mut terms = Vec::new();
                sq_monomial_terms(k, m, &mut terms);
                if terms.is_empty() {
                    return None;
                }
                let mut row = BitRow::zeros(context.len());
                for term in &terms {
                    debug_assert_eq!(term.support_mask(), m.support_mask());
                    row.flip(context.rank(term).expect("image stays in degree"));
                }
                if !pre_reduce {
                    return Some(row);
                }
                let row = span.reduce(&row);
                (!row.is_zero()).then_some(row)
            });
            for row in rows.into_iter().flatten() {
                if let Some(st) = standalone.as_mut() {
                    st.insert_reducing(row.clone());
                }
                span.insert_reducing(row);
            }
            start = end;
        }
        families.push(FamilyTrace {
            square: k,
            source_count: sources.len() as u64,
            standalone_rank: standalone.map(|st| st.rank() as u64),
            cumulative_rank: span.rank() as u64,
        });
    }
    span.normalize();
    let trace = HitTrace {
        vars: t,
        degree: n,
        columns: context.len() as u64,
        hit_rank: span.rank() as u64,
        dim: context.len() as u64 - span.rank() as u64,
        families,
    };
    Ok((context, span, trace))
}

/// The Kameko map on monomials: halves all-odd exponent tuples, kills the
/// rest.
pub fn kameko_down(m: &Monomial) -> Option<Monomial> {
    if m.exponents().iter().all(|&e| e % 2 == 1) {
        Some(Monomial::new(
            m.exponents().iter().map(|&e| (e - 1) / 2).collect(),
        ))
    } else {
        None
    }
}

/// Singer's criterion: a monomial whose weight vector is strictly below
/// that of the minimal spike of its degree is hit. Errors when no spike
/// exists (`mu(deg) > t`).
pub fn singer_zero(m: &Monomial) -> Result<bool> {
    let spike = minimal_spike(m.vars(), m.degree())?;
    Ok(m.weight() < spike.weight())
}

/// All weight vectors of degree `n` with entries bounded by `t`.
pub fn weight_vectors(t: usize, n: u64) -> Vec<WeightVector> {
    let mut out = Vec::new();
    let mut acc = Vec::new();
    fn rec(t: u32, rem: u64, pos: u32, acc: &mut Vec<u32>, out: &mut Vec<WeightVector>) {
        if rem == 0 {
            out.push(WeightVector::new(acc.clone()));
            return;
        }
        let unit = 1u64 << pos;
        if unit > rem {
            return;
        }
        for w in 0..=t.min((rem / unit) as u32) {
            acc.push(w);
            rec(t, rem - u64::from(w) * unit, pos + 1, acc, out);
            acc.pop();
        }
    }
    rec(t as u32, n, 0, &mut acc, &mut out);
    out
}

/// `dim (Q_n^{⊗t})^0` from the positive-part dimensions of the smaller
/// variable counts: `Σ_s C(t,s) · positive_dims[s-1]`.
pub fn dim_zero_via_formula(t: usize, positive_dims: &[u64]) -> u64 {
    assert_eq!(positive_dims.len(), t - 1);
    positive_dims
        .iter()
        .enumerate()
        .map(|(i, &d)| binom_u64(t, i + 1) * d)
        .sum()
}

/// Cross-check route for a weight component dimension: the subspace
/// computation `dim P^{≤ω} − dim((hit + P^{<ω}) ∩ P^{≤ω})` via the modular
/// law, eliminated directly over the whole context.
pub fn dim_q_omega_subspace(
    t: usize,
    n: u64,
    w: &WeightVector,
    part: SupportPart,
    cap: u64,
) -> Result<u64> {
    if w.degree() != n {
        return Err(Error::WeightDegreeMismatch {
            expected: n,
            actual: w.degree(),
        });
    }
    let context = DegreeContext::new(t, n, cap)?;
    let mut span = EchelonSpan::new(context.len());
    for k in family_squares(n) {
        let sources = DegreeContext::new(t, n - k, cap)?;
        for m in sources.monomials() {
            if !part.admits(m) {
                continue;
            }
            let mut terms = Vec::new();
            sq_monomial_terms(k, m, &mut terms);
            if terms.is_empty() {
                continue;
            }
            let mut row = BitRow::zeros(context.len());
            for term in &terms {
                row.flip(context.rank(term).expect("image stays in degree"));
            }
            span.insert_reducing(row);
        }
    }
    let mut le_cols = Vec::new();
    for (rank, m) in context.monomials().iter().enumerate() {
        if !part.admits(m) {
            continue;
        }
        let mw = m.weight();
        if &mw < w {
            let mut unit = BitRow::zeros(context.len());
            unit.set(rank);
            span.insert_forward(unit);
            le_cols.push(rank);
        } else if &mw == w {
            le_cols.push(rank);
        }
    }
    Ok(le_cols.len() as u64 - span.intersect_dim(&le_cols) as u64)
}
