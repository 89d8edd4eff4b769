use serde::Serialize;

use super::PowerCount;
use crate::arith::{checked_pow, lcm_all};
use crate::base::BaseField;
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem};
use crate::linalg;
use crate::linearized::{find_normal, lin_eval};
use crate::poly::{self, FqPoly};

/// `L_{f_1}(x_1) + … + L_{f_k}(x_k) = b` with `x_i ∈ F_{q^{d_i}}` and
/// `b ∈ F_{q^m}`, `m = b_degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquationSpec {
    pub f_list: Vec<FqPoly>,
    pub d_list: Vec<usize>,
    pub b: FieldElem,
    pub b_degree: usize,
}

impl EquationSpec {
    pub fn new(f_list: Vec<FqPoly>, d_list: Vec<usize>, b: FieldElem, b_degree: usize) -> Result<Self> {
        if f_list.is_empty() {
            return Err(Error::KTooSmall { min: 1, got: 0 });
        }
        if f_list.len() != d_list.len() {
            return Err(Error::InvalidArgument(format!(
                "{} polynomials but {} degrees",
                f_list.len(),
                d_list.len()
            )));
        }
        if f_list.iter().any(FqPoly::is_zero) {
            return Err(Error::ZeroPolynomial);
        }
        if d_list.contains(&0) || b_degree == 0 {
            return Err(Error::InvalidArgument("degrees must be positive".into()));
        }
        Ok(Self { f_list, d_list, b, b_degree })
    }

    pub fn k(&self) -> usize {
        self.f_list.len()
    }

    pub fn dim_sum(&self) -> u64 {
        self.d_list.iter().map(|&d| d as u64).sum()
    }

    /// `lcm(d_1, …, d_k, m)`: the smallest field holding every unknown and `b`.
    pub fn min_ambient_degree(&self) -> usize {
        lcm_all(self.d_list.iter().chain([&self.b_degree]).map(|&d| d as u64)) as usize
    }

    /// Checks the spec against the field its unknowns and `b` live in.
    pub fn validate(&self, ctx: &FieldCtx) -> Result<()> {
        ctx.check(&self.b)?;
        for &d in self.d_list.iter().chain([&self.b_degree]) {
            FieldCtx::check_divides(d, ctx.ell())?;
        }
        if self.f_list.iter().flat_map(|f| f.coeffs()).any(|&c| !ctx.base().contains(c)) {
            return Err(Error::ContextMismatch);
        }
        if !ctx.in_subfield(&self.b, self.b_degree)? {
            return Err(Error::ElementOutsideSubfield(self.b_degree));
        }
        Ok(())
    }
}

fn check_degrees(f_list: &[FqPoly], d_list: &[usize], ell: usize) -> Result<()> {
    if f_list.len() != d_list.len() {
        return Err(Error::InvalidArgument("f_list and d_list differ in length".into()));
    }
    if f_list.iter().any(FqPoly::is_zero) {
        return Err(Error::ZeroPolynomial);
    }
    d_list.iter().try_for_each(|&d| FieldCtx::check_divides(d, ell))
}

/// `G_ℓ = gcd(x^ℓ - 1, f_1·(x^ℓ-1)/(x^{d_1}-1), …, f_k·(x^ℓ-1)/(x^{d_k}-1))`, monic.
pub fn big_g(k: &BaseField, f_list: &[FqPoly], d_list: &[usize], ell: usize) -> Result<FqPoly> {
    check_degrees(f_list, d_list, ell)?;
    let modulus = poly::xn_minus_1(k, ell);
    f_list.iter().zip(d_list).try_fold(modulus, |g, (f, &d)| {
        let term = poly::mul(k, f, &poly::cyclic_cofactor(ell, d));
        poly::gcd(k, &g, &term)
    })
}

/// `H_ℓ = (x^ℓ - 1)/G_ℓ`.
pub fn big_h(k: &BaseField, f_list: &[FqPoly], d_list: &[usize], ell: usize) -> Result<FqPoly> {
    let g = big_g(k, f_list, d_list, ell)?;
    poly::exact_div(k, &poly::xn_minus_1(k, ell), &g)
}

/// Solvability and solution count of an [`EquationSpec`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountResult {
    pub solvable: bool,
    pub base: u32,
    /// The count is `base^exponent`; absent when unsolvable (count 0).
    pub exponent: Option<u64>,
    #[serde(rename = "ell")]
    pub ell_used: usize,
    #[serde(rename = "H_degree")]
    pub h_degree: usize,
}

impl CountResult {
    pub fn count(&self) -> Option<PowerCount> {
        self.exponent.map(|e| PowerCount::new(self.base, e))
    }
}

/// Decides solvability (`L_{H_ℓ}(b) = 0`) and counts solutions
/// (`q^{Σd_i - deg H_ℓ}`) with the minimal `ℓ = lcm(d_1, …, d_k, m)`.
pub fn count_solutions(ctx: &FieldCtx, spec: &EquationSpec) -> Result<CountResult> {
    count_solutions_at(ctx, spec, spec.min_ambient_degree())
}

/// As [`count_solutions`] with an explicit `ℓ`, which must be a common
/// multiple of the `d_i` and `m`.
pub fn count_solutions_at(ctx: &FieldCtx, spec: &EquationSpec, ell: usize) -> Result<CountResult> {
    spec.validate(ctx)?;
    FieldCtx::check_divides(spec.b_degree, ell)?;
    let k = ctx.base();
    let h = big_h(k, &spec.f_list, &spec.d_list, ell)?;
    let h_degree = h.degree().expect("H divides x^ℓ - 1 and is nonzero");
    let solvable = lin_eval(ctx, &h, &spec.b)?.is_zero();
    let exponent = solvable.then(|| spec.dim_sum() - h_degree as u64);
    Ok(CountResult { solvable, base: k.q(), exponent, ell_used: ell, h_degree })
}

/// All solutions as `particular + span(kernel)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionSpace {
    pub particular: Option<Vec<FieldElem>>,
    pub kernel: Vec<Vec<FieldElem>>,
}

/// Builds the F_q-linear map `(z_1, …, z_k) ↦ Σ L_{f_i}(z_i)` in coordinates
/// `z_i = L_{h_i·(x^ℓ-1)/(x^{d_i}-1)}(β)`, `deg h_i < d_i`, for a normal `β`
/// of the ambient field, and solves it against `b` in one elimination.
pub fn solution_space(ctx: &FieldCtx, spec: &EquationSpec) -> Result<SolutionSpace> {
    spec.validate(ctx)?;
    let k = ctx.base();
    let ell = ctx.ell();
    let beta = find_normal(ctx, ell, 0)?;

    // unit[i][j] = L_{x^j·(x^ℓ-1)/(x^{d_i}-1)}(β); these form a basis of F_{q^{d_i}}.
    let mut unit: Vec<Vec<FieldElem>> = Vec::with_capacity(spec.k());
    let mut columns: Vec<FieldElem> = Vec::new();
    for (f, &d) in spec.f_list.iter().zip(&spec.d_list) {
        let cof = poly::cyclic_cofactor(ell, d);
        let u0 = lin_eval(ctx, &cof, &beta)?;
        let img0 = lin_eval(ctx, &poly::mul(k, f, &cof), &beta)?;
        unit.push(ctx.frobenius_orbit(&u0, d));
        columns.extend(ctx.frobenius_orbit(&img0, d));
    }
    let ncols = columns.len();
    let rows: Vec<Vec<_>> = (0..ell).map(|r| columns.iter().map(|c| c.coords()[r]).collect()).collect();
    let sol = linalg::solve_affine(k, &rows, spec.b.coords(), ncols);

    let to_tuple = |v: &[u32]| -> Vec<FieldElem> {
        let mut offset = 0;
        unit.iter()
            .map(|basis| {
                let z = ctx.combine(basis, &v[offset..offset + basis.len()]);
                offset += basis.len();
                z
            })
            .collect()
    };
    Ok(SolutionSpace {
        particular: sol.particular.as_deref().map(to_tuple),
        kernel: sol.kernel.iter().map(|v| to_tuple(v)).collect(),
    })
}

/// One explicit solution, or [`Error::NoSolution`].
pub fn solve_one(ctx: &FieldCtx, spec: &EquationSpec) -> Result<Vec<FieldElem>> {
    solution_space(ctx, spec)?.particular.ok_or(Error::NoSolution)
}

/// Every solution, provided there are at most `cap` of them.
pub fn enumerate_solutions(ctx: &FieldCtx, spec: &EquationSpec, cap: u64) -> Result<Vec<Vec<FieldElem>>> {
    let space = solution_space(ctx, spec)?;
    let particular = space.particular.ok_or(Error::NoSolution)?;
    let q = ctx.q();
    let dim = space.kernel.len();
    let total = checked_pow(u64::from(q), dim as u64)
        .filter(|&n| n <= cap)
        .ok_or_else(|| Error::CapExceeded { needed: format!("{q}^{dim}"), cap })?;
    let mut out = Vec::with_capacity(total as usize);
    for idx in 0..total {
        let mut rest = idx;
        let mut tuple = particular.clone();
        for vector in &space.kernel {
            let c = (rest % u64::from(q)) as u32;
            rest /= u64::from(q);
            if c == 0 {
                continue;
            }
            for (z, v) in tuple.iter_mut().zip(vector) {
                let term = ctx.scale(c, v);
                ctx.add_assign(z, &term);
            }
        }
        out.push(tuple);
    }
    Ok(out)
}
