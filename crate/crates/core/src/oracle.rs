//! Brute-force ground truth.
//!
//! Everything here is plain enumeration over subfields using only field
//! arithmetic. q-th powers are taken with square-and-multiply rather than
//! the Frobenius table, and nothing from the solver is used.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::base::Fq;
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem};
use crate::poly::FqPoly;
use crate::solver::{EquationSpec, TraceTarget};

/// Witness lists are truncated to this length; counts never are.
pub const WITNESS_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleReport<W> {
    pub count: u64,
    #[serde(skip)]
    pub witnesses: Vec<W>,
    pub spec_echo: String,
}

/// `a^{q^j}` by repeated powering.
fn qth_power(ctx: &FieldCtx, a: &FieldElem, j: usize) -> FieldElem {
    let q = u64::from(ctx.q());
    (0..j).fold(a.clone(), |acc, _| ctx.pow(&acc, q))
}

/// `Σ f_i·z^{q^i}` evaluated term by term.
pub fn q_associate_direct(ctx: &FieldCtx, f: &FqPoly, z: &FieldElem) -> FieldElem {
    let q = u64::from(ctx.q());
    let mut acc = ctx.zero();
    let mut power = z.clone();
    for (i, &c) in f.coeffs().iter().enumerate() {
        if i > 0 {
            power = ctx.pow(&power, q);
        }
        if c != 0 {
            let term = ctx.scale(c, &power);
            ctx.add_assign(&mut acc, &term);
        }
    }
    acc
}

fn product_size(ctx: &FieldCtx, dims: &[usize], cap: u64) -> Result<u64> {
    let total: u64 = dims.iter().map(|&d| d as u64).sum();
    let q = ctx.q();
    dims.iter()
        .try_fold(1u64, |acc, &d| acc.checked_mul(ctx.subfield_size(d)?))
        .filter(|&n| n <= cap)
        .ok_or_else(|| Error::EnumerationCapExceeded { needed: format!("{q}^{total}"), cap })
}

fn add_into(ctx: &FieldCtx, out: &mut [Fq], a: &[Fq], b: &[Fq]) {
    let k = ctx.base();
    for ((o, &x), &y) in out.iter_mut().zip(a).zip(b) {
        *o = k.add(x, y);
    }
}

/// Depth-first walk over the cartesian product of `images`, calling `visit`
/// with the chosen indices and the running sum at every leaf.
fn walk<F: FnMut(&[usize], &[Fq]) + ?Sized>(
    ctx: &FieldCtx,
    images: &[Vec<Vec<Fq>>],
    level: usize,
    idx: &mut Vec<usize>,
    sums: &mut Vec<Vec<Fq>>,
    visit: &mut F,
) {
    if level == images.len() {
        visit(idx, &sums[level]);
        return;
    }
    for (i, img) in images[level].iter().enumerate() {
        let (lo, hi) = sums.split_at_mut(level + 1);
        add_into(ctx, &mut hi[0], &lo[level], img);
        idx.push(i);
        walk(ctx, images, level + 1, idx, sums, visit);
        idx.pop();
    }
}

/// Runs `walk` in parallel over the choice for the first unknown; the
/// per-branch results come back in branch order.
fn par_walk<T, F>(ctx: &FieldCtx, images: &[Vec<Vec<Fq>>], make: F) -> Vec<T>
where
    T: Send,
    F: Fn(&mut dyn FnMut(&mut dyn FnMut(&[usize], &[Fq]))) -> T + Sync,
{
    let ell = ctx.ell();
    (0..images[0].len())
        .into_par_iter()
        .map(|first| {
            make(&mut |visit| {
                let mut sums = vec![vec![0; ell]; images.len() + 1];
                sums[1] = images[0][first].clone();
                let mut idx = vec![first];
                walk(ctx, images, 1, &mut idx, &mut sums, visit);
            })
        })
        .collect()
}

/// Counts tuples `(z_i) ∈ ∏ F_{q^{d_i}}` with `Σ L_{f_i}(z_i) = b`.
pub fn brute_count(ctx: &FieldCtx, spec: &EquationSpec, cap: u64) -> Result<OracleReport<Vec<FieldElem>>> {
    ctx.check(&spec.b)?;
    spec.d_list.iter().try_for_each(|&d| FieldCtx::check_divides(d, ctx.ell()))?;
    product_size(ctx, &spec.d_list, cap)?;
    let domains = spec
        .d_list
        .iter()
        .map(|&d| ctx.subfield_enumerate_capped(d, cap))
        .collect::<Result<Vec<_>>>()?;
    let images: Vec<Vec<Vec<Fq>>> = spec
        .f_list
        .iter()
        .zip(&domains)
        .map(|(f, dom)| dom.iter().map(|z| q_associate_direct(ctx, f, z).coords().to_vec()).collect())
        .collect();
    let target = spec.b.coords();
    let branches = par_walk(ctx, &images, |run| {
        let mut count = 0u64;
        let mut witnesses: Vec<Vec<usize>> = Vec::new();
        run(&mut |idx, sum| {
            if sum == target {
                count += 1;
                if witnesses.len() < WITNESS_CAP {
                    witnesses.push(idx.to_vec());
                }
            }
        });
        (count, witnesses)
    });
    let count = branches.iter().map(|(c, _)| c).sum();
    let witnesses = branches
        .into_iter()
        .flat_map(|(_, w)| w)
        .take(WITNESS_CAP)
        .map(|idx| idx.iter().zip(&domains).map(|(&i, dom)| dom[i].clone()).collect())
        .collect();
    Ok(OracleReport { count, witnesses, spec_echo: echo_equation(ctx, spec) })
}

fn echo_equation(ctx: &FieldCtx, spec: &EquationSpec) -> String {
    let terms: Vec<String> = spec
        .f_list
        .iter()
        .zip(&spec.d_list)
        .map(|(f, d)| format!("L[{}](x in F_q^{d})", crate::poly::format(f)))
        .collect();
    format!("{} = {} (deg {})", terms.join(" + "), ctx.format_elem(&spec.b), spec.b_degree)
}

/// `|F_{q^{d_1}} + … + F_{q^{d_k}}|` by collecting every sum.
pub fn brute_sumset(ctx: &FieldCtx, d_list: &[usize], cap: u64) -> Result<u64> {
    if d_list.is_empty() {
        return Ok(1);
    }
    d_list.iter().try_for_each(|&d| FieldCtx::check_divides(d, ctx.ell()))?;
    product_size(ctx, d_list, cap)?;
    let images = d_list
        .iter()
        .map(|&d| Ok(ctx.subfield_enumerate_capped(d, cap)?.iter().map(|z| z.coords().to_vec()).collect()))
        .collect::<Result<Vec<Vec<Vec<Fq>>>>>()?;
    let partial = par_walk(ctx, &images, |run| {
        let mut seen = HashSet::new();
        run(&mut |_, sum| {
            seen.insert(sum.to_vec());
        });
        seen
    });
    let merged: HashSet<Vec<Fq>> = partial.into_iter().flatten().collect();
    Ok(merged.len() as u64)
}

/// Counts `α ∈ F_{q^n}` with `Tr_{n/d_i}(α) = β_i` for every target.
pub fn brute_trace_fiber(
    ctx: &FieldCtx,
    targets: &[TraceTarget],
    n: usize,
    cap: u64,
) -> Result<OracleReport<FieldElem>> {
    FieldCtx::check_divides(n, ctx.ell())?;
    for t in targets {
        FieldCtx::check_divides(t.d, n)?;
        ctx.check(&t.beta)?;
    }
    let field = ctx.subfield_enumerate_capped(n, cap)?;
    let trace = |a: &FieldElem, d: usize| {
        let mut acc = ctx.zero();
        let mut cur = a.clone();
        for _ in 0..n / d {
            ctx.add_assign(&mut acc, &cur);
            cur = qth_power(ctx, &cur, d);
        }
        acc
    };
    let hits: Vec<FieldElem> = field
        .par_iter()
        .filter(|a| targets.iter().all(|t| trace(a, t.d) == t.beta))
        .cloned()
        .collect();
    let echo = targets
        .iter()
        .map(|t| format!("Tr_{n}/{}(x) = {}", t.d, ctx.format_elem(&t.beta)))
        .collect::<Vec<_>>()
        .join("; ");
    Ok(OracleReport {
        count: hits.len() as u64,
        witnesses: hits.into_iter().take(WITNESS_CAP).collect(),
        spec_echo: echo,
    })
}
