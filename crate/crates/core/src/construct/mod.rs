//! From prescribed Forney indices to codes, and generators for
//! automorphisms with several cycles.

pub mod degrees;
pub mod rook;

use crate::codes::{encoder_from_generator, ConvCode};
use crate::error::{Error, Result};
use crate::matring::{xi_inv, MMatrix};
use crate::poly::Poly;
use crate::polymat::PolyMatrix;
use crate::skew::{RingContext, SkewPoly};

pub use degrees::{prescribed_degree_matrix, DegreeSpec};
pub use rook::{rook_solve, shift_to_first_rows, RookInstance, RookSolution, RookStrategy};

/// Intermediate data of [`construct_code_with`], kept for inspection.
#[derive(Debug, Clone)]
pub struct Construction {
    pub placement: RookSolution,
    pub spec: DegreeSpec,
    /// Rows of the `(n−1) × n` prescribed-degree matrix that carry a
    /// requested index (1-based).
    pub used_rows: Vec<usize>,
    pub generator_matrix: MMatrix,
    pub code: ConvCode,
}

/// A `k`-dimensional code with Forney indices `nus`, using the automatic
/// rook strategy.
pub fn construct_code(ctx: &RingContext, nus: &[usize]) -> Result<ConvCode> {
    construct_code_with(ctx, nus, RookStrategy::Auto).map(|c| c.code)
}

pub fn construct_code_with(ctx: &RingContext, nus: &[usize], strategy: RookStrategy) -> Result<Construction> {
    let n = ctx.n();
    let k = nus.len();
    if !ctx.is_default_cycle() {
        return Err(Error::NotCyclicSigma);
    }
    if n < 2 || k == 0 || k > n - 1 {
        return Err(Error::InvalidParameters(format!("need 1 <= k <= n - 1, got k = {k}, n = {n}")));
    }
    ctx.omega()?;
    let dhat: Vec<usize> = nus.iter().map(|v| v / n).collect();
    let residues: Vec<usize> = nus.iter().map(|v| v % n).collect();
    let solved = rook_solve(&RookInstance::new(n, residues)?, strategy)?;
    let placement = shift_to_first_rows(n, &solved);

    // Row p of the degree spec: pivot column and d̂, or padding.
    let mut slots: Vec<Option<(usize, usize)>> = vec![None; n - 1];
    for (&(i, j), &d) in placement.pairs.iter().zip(&dhat) {
        slots[i - 1] = Some((j, d));
    }
    let used_rows: Vec<usize> = (1..n).filter(|&p| slots[p - 1].is_some()).collect();
    let mut free_cols: Vec<usize> = (1..=n).filter(|c| placement.pairs.iter().all(|&(_, j)| j != *c)).collect();
    let mut js = Vec::with_capacity(n - 1);
    let mut ds = Vec::with_capacity(n - 1);
    for p in 1..n {
        let (j, d) = slots[p - 1].unwrap_or_else(|| (free_cols.remove(0), 0));
        js.push(j);
        ds.push(if j < p { d + 1 } else { d });
    }
    let spec = DegreeSpec::new(n, js, ds)?;
    let base = prescribed_degree_matrix(ctx.field(), &spec)?;
    let f = ctx.field();
    let rows: Vec<Vec<Poly>> =
        (1..=n).map(|p| if used_rows.contains(&p) { base.row(p - 1).to_vec() } else { vec![Poly::zero(f); n] }).collect();
    let generator_matrix = MMatrix::new(ctx, PolyMatrix::from_rows(f, rows)?)?;
    let code = encoder_from_generator(&xi_inv(&generator_matrix)?)?;
    Ok(Construction { placement, spec, used_rows, generator_matrix, code })
}

/// Assembles a generator of `A[z;σ]` from one generator per cycle of `σ`.
///
/// Cycles are listed as by [`RingContext::cycles`]; the `i`-th idempotent
/// of the factor ring for cycle `(c_1 … c_m)` is the global `e_{c_i}`.
pub fn construct_general(ctx: &RingContext, factors: &[MMatrix]) -> Result<SkewPoly> {
    let cycles = ctx.cycles();
    if cycles.len() != factors.len() {
        return Err(Error::CycleLengthMismatch(format!("{} cycles but {} factors", cycles.len(), factors.len())));
    }
    let n = ctx.n();
    let mut coeffs: Vec<Vec<u32>> = Vec::new();
    for (cycle, factor) in cycles.iter().zip(factors) {
        if factor.n() != cycle.len() {
            return Err(Error::CycleLengthMismatch(format!(
                "cycle {cycle:?} has length {} but its factor is {}x{}",
                cycle.len(),
                factor.n(),
                factor.n()
            )));
        }
        if factor.field() != ctx.field() {
            return Err(Error::FieldMismatch);
        }
        let local = xi_inv(factor)?;
        for (nu, c) in local.coeffs().iter().enumerate() {
            if coeffs.len() <= nu {
                coeffs.resize(nu + 1, vec![0; n]);
            }
            for (i, &v) in c.iter().enumerate() {
                coeffs[nu][cycle[i] - 1] = v;
            }
        }
    }
    SkewPoly::new(ctx, coeffs)
}
