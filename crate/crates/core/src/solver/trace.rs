use std::collections::HashSet;

use super::{lambda_ie, PowerCount};
use crate::arith::gcd;
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem};
use crate::linearized::{find_normal, lin_eval, NormalBasis};
use crate::poly::{self, FqPoly};

/// The constraint `Tr_{n/d}(x) = beta`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceTarget {
    pub d: usize,
    pub beta: FieldElem,
}

impl TraceTarget {
    pub fn new(d: usize, beta: FieldElem) -> Self {
        Self { d, beta }
    }
}

fn validate(ctx: &FieldCtx, targets: &[TraceTarget], n: usize) -> Result<()> {
    FieldCtx::check_divides(n, ctx.ell())?;
    let mut seen = HashSet::new();
    for t in targets {
        FieldCtx::check_divides(t.d, n)?;
        if !seen.insert(t.d) {
            return Err(Error::DuplicateDivisor(t.d));
        }
        if !ctx.in_subfield(&t.beta, t.d)? {
            return Err(Error::ElementOutsideSubfield(t.d));
        }
    }
    Ok(())
}

/// The necessary (and sufficient) pairwise condition
/// `Tr_{d_i/g}(β_i) = Tr_{d_j/g}(β_j)` with `g = gcd(d_i, d_j)`.
pub fn trace_consistent(ctx: &FieldCtx, targets: &[TraceTarget], n: usize) -> Result<bool> {
    validate(ctx, targets, n)?;
    for (i, a) in targets.iter().enumerate() {
        for b in &targets[i + 1..] {
            let g = gcd(a.d as u64, b.d as u64) as usize;
            if ctx.trace(&a.beta, a.d, g)? != ctx.trace(&b.beta, b.d, g)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Solutions of a consistent system: `q^{n - λ(d_1, …, d_k)}`.
pub fn trace_count(q: u32, n: usize, d_list: &[usize]) -> Result<PowerCount> {
    d_list.iter().try_for_each(|&d| FieldCtx::check_divides(d, n))?;
    Ok(PowerCount::new(q, n as u64 - lambda_ie(d_list)))
}

/// One `α ∈ F_{q^n}` with `Tr_{n/d_i}(α) = β_i` for all targets.
///
/// With a normal `β` of F_{q^n}, write `β_i = L_{h_i·(x^n-1)/(x^{d_i}-1)}(β)`;
/// then `α = L_F(β)` for any `F ≡ h_i (mod x^{d_i} - 1)`. Returns
/// [`Error::Inconsistent`] when those congruences have no common solution.
pub fn trace_solve(ctx: &FieldCtx, targets: &[TraceTarget], n: usize) -> Result<FieldElem> {
    validate(ctx, targets, n)?;
    let k = ctx.base();
    let beta = find_normal(ctx, n, 0)?;
    let basis = NormalBasis::new(ctx, &beta, n)?;
    let congruences = targets
        .iter()
        .map(|t| Ok((basis.subfield_coords(ctx, &t.beta, t.d)?, poly::xn_minus_1(k, t.d))))
        .collect::<Result<Vec<(FqPoly, FqPoly)>>>()?;
    let (f0, _) = poly::crt_fold(k, &congruences)?;
    lin_eval(ctx, &f0, &beta)
}

/// Whether `alpha` meets every target, by direct trace evaluation.
pub fn traces_match(ctx: &FieldCtx, alpha: &FieldElem, targets: &[TraceTarget], n: usize) -> Result<bool> {
    for t in targets {
        if ctx.trace(alpha, n, t.d)? != t.beta {
            return Ok(false);
        }
    }
    Ok(true)
}
