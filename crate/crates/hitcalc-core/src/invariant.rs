//! Group actions on the quotient: the symmetric group through adjacent
//! transpositions, the full general linear group by adding the
//! transvection, and the dimensions of their invariant subspaces.

use crate::error::{Error, Result};
use crate::exec;
use crate::linalg::{kernel_basis, BitRow};
use crate::monomial::{Monomial, WeightVector};
use crate::poly::{Polynomial, SubstitutionMap};
use crate::quotient::{HitCalc, QuotientBasis};

/// Which group acts: adjacent transpositions only, or with the transvection
/// adjoined (which generates the full general linear group over `F_2`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupKind {
    Symmetric,
    GeneralLinear,
}

impl GroupKind {
    /// Generator indices: `1..t` for the symmetric group, `1..=t` with the
    /// transvection last for the general linear group.
    pub fn generator_count(self, t: usize) -> usize {
        match self {
            GroupKind::Symmetric => t - 1,
            GroupKind::GeneralLinear => t,
        }
    }
}

/// The `d`-th generator substitution on `t` variables: for `d < t` the
/// transposition of `x_d` and `x_{d+1}`, for `d = t` the transvection
/// `x_1 -> x_1 + x_2`.
pub fn sigma(d: usize, t: usize) -> Result<SubstitutionMap> {
    if d < 1 || d > t {
        return Err(Error::IndexOutOfRange { index: d, vars: t });
    }
    let mut images: Vec<Polynomial> = (1..=t)
        .map(|j| Polynomial::from_monomial(Monomial::variable(j, t)))
        .collect();
    if d < t {
        images.swap(d - 1, d);
    } else {
        images[0] = images[0].add(&Polynomial::from_monomial(Monomial::variable(2, t)))?;
    }
    Ok(SubstitutionMap::new(images, t))
}

/// The matrix of the substitution action on the quotient, as columns over
/// the admissible basis: column `j` is the reduction of the image of the
/// `j`-th admissible monomial.
pub fn induced_action(qb: &QuotientBasis, map: &SubstitutionMap) -> Result<Vec<BitRow>> {
    induced_action_mode(qb, map, exec::ExecMode::default())
}

pub fn induced_action_mode(
    qb: &QuotientBasis,
    map: &SubstitutionMap,
    mode: exec::ExecMode,
) -> Result<Vec<BitRow>> {
    let columns = exec::map_indices(mode, qb.dim(), |j| {
        let image = map.apply_monomial(&qb.admissible()[j])?;
        qb.reduce_coords(&image)
    });
    columns.into_iter().collect()
}

/// Rows of `M + I` for a column-major matrix `M` over the admissible
/// coordinates.
fn action_minus_identity_rows(columns: &[BitRow], dim: usize) -> Vec<BitRow> {
    let mut rows = vec![BitRow::zeros(dim); dim];
    for (j, col) in columns.iter().enumerate() {
        for i in col.iter_bits() {
            rows[i].flip(j);
        }
    }
    for (i, row) in rows.iter_mut().enumerate() {
        row.flip(i);
    }
    rows
}

/// Dimension and a basis (in admissible coordinates) of the subspace of the
/// quotient fixed by every group generator, computed as the kernel of the
/// stacked `(M_d + I)` blocks in one elimination.
pub fn invariant_dim(
    engine: &HitCalc,
    t: usize,
    n: u64,
    group: GroupKind,
) -> Result<(u64, Vec<BitRow>)> {
    let qb = engine.quotient_basis(t, n)?;
    let dim = qb.dim();
    let mut stacked = Vec::with_capacity(group.generator_count(t) * dim);
    for d in 1..=group.generator_count(t) {
        let map = sigma(d, t)?;
        let columns = induced_action_mode(&qb, &map, engine.config().mode)?;
        stacked.extend(action_minus_identity_rows(&columns, dim));
    }
    let kernel = kernel_basis(&stacked, dim);
    Ok((kernel.len() as u64, kernel))
}

/// Invariant dimension of one weight component of the quotient.
///
/// The component's basis is the set of admissible monomials of weight
/// exactly `w`. A generator image is reduced in the full quotient and then
/// truncated to the component: lower-weight terms die in the filtration
/// quotient, and any term of strictly larger weight is a hard error since
/// it would contradict the component being a module for the group.
pub fn invariant_dim_omega(
    engine: &HitCalc,
    t: usize,
    n: u64,
    w: &WeightVector,
    group: GroupKind,
) -> Result<u64> {
    if w.degree() != n {
        return Err(Error::WeightDegreeMismatch {
            expected: n,
            actual: w.degree(),
        });
    }
    let qb = engine.quotient_basis(t, n)?;
    let component: Vec<usize> = qb
        .admissible()
        .iter()
        .enumerate()
        .filter(|(_, m)| &m.weight() == w)
        .map(|(i, _)| i)
        .collect();
    let dim = component.len();
    let mut local_of_global = vec![usize::MAX; qb.dim()];
    for (local, &global) in component.iter().enumerate() {
        local_of_global[global] = local;
    }
    let mut stacked = Vec::with_capacity(group.generator_count(t) * dim);
    for d in 1..=group.generator_count(t) {
        let map = sigma(d, t)?;
        let mut columns = Vec::with_capacity(dim);
        for &global in &component {
            let source = &qb.admissible()[global];
            let image = map.apply_monomial(source)?;
            for term in image.terms() {
                if term.weight() > *w {
                    return Err(Error::FiltrationViolation);
                }
            }
            let coords = qb.reduce_coords(&image)?;
            let mut local = BitRow::zeros(dim);
            for g in coords.iter_bits() {
                let l = local_of_global[g];
                if l != usize::MAX {
                    local.flip(l);
                }
            }
            columns.push(local);
        }
        stacked.extend(action_minus_identity_rows(&columns, dim));
    }
    Ok(kernel_basis(&stacked, dim).len() as u64)
}
