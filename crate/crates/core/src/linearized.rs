//! q-associates `L_f(x) = Σ a_i x^{q^i}` of polynomials `f = Σ a_i x^i`,
//! the F_q-order `m_{α,q}` of an element, and normal elements.
//!
//! `f ↦ L_f` turns products into compositions, so every question about
//! linearized maps here is answered with polynomial arithmetic in F_q[x]
//! plus linear algebra on Frobenius orbits.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::base::Fq;
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem};
use crate::linalg;
use crate::poly::{self, FqPoly};

/// Random draws attempted by [`find_normal`] before it scans exhaustively.
pub const NORMAL_TRIAL_BUDGET: usize = 1000;

/// The q-associate of `f`, bound to a field it acts on.
#[derive(Debug, Clone)]
pub struct LinearizedMap<'a> {
    f: FqPoly,
    ctx: &'a FieldCtx,
}

impl<'a> LinearizedMap<'a> {
    pub fn new(ctx: &'a FieldCtx, f: FqPoly) -> Self {
        Self { f, ctx }
    }

    pub fn poly(&self) -> &FqPoly {
        &self.f
    }

    pub fn apply(&self, a: &FieldElem) -> Result<FieldElem> {
        lin_eval(self.ctx, &self.f, a)
    }
}

/// `L_f(a) = Σ f_i·a^{q^i}`.
pub fn lin_eval(ctx: &FieldCtx, f: &FqPoly, a: &FieldElem) -> Result<FieldElem> {
    ctx.check(a)?;
    if f.coeffs().iter().any(|&c| !ctx.base().contains(c)) {
        return Err(Error::ContextMismatch);
    }
    // a^{q^ℓ} = a, so exponents fold modulo ℓ.
    let k = ctx.base();
    let ell = ctx.ell();
    let mut folded = vec![0; ell.min(f.coeffs().len())];
    for (i, &c) in f.coeffs().iter().enumerate() {
        folded[i % ell] = k.add(folded[i % ell], c);
    }
    let mut acc = ctx.zero();
    let mut cur = a.clone();
    for (i, &c) in folded.iter().enumerate() {
        if c != 0 {
            let term = ctx.scale(c, &cur);
            ctx.add_assign(&mut acc, &term);
        }
        if i + 1 < folded.len() {
            cur = ctx.frobenius(&cur, 1);
        }
    }
    Ok(acc)
}

/// An element with its F_q-order: the monic generator of
/// `{h ∈ F_q[x] : L_h(alpha) = 0}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QOrder {
    pub alpha: FieldElem,
    pub m_poly: FqPoly,
}

/// Finds `m_{α,q}` as the first linear dependence in the Frobenius orbit of
/// `a`. The zero element has order `1`.
pub fn q_order(ctx: &FieldCtx, a: &FieldElem) -> Result<QOrder> {
    ctx.check(a)?;
    let k = ctx.base();
    let ell = ctx.ell();
    // Echelon rows over the orbit, each tracking which orbit combination
    // produced it; pivot entries are normalized to 1.
    let mut rows: Vec<(Vec<Fq>, Vec<Fq>, usize)> = Vec::new();
    let mut cur = a.clone();
    for j in 0..=ell {
        let mut v = cur.coords().to_vec();
        let mut combo = vec![0; ell + 1];
        combo[j] = 1;
        for (row, row_combo, pivot) in &rows {
            let c = v[*pivot];
            if c == 0 {
                continue;
            }
            for (x, &y) in v.iter_mut().zip(row) {
                *x = k.sub(*x, k.mul(c, y));
            }
            for (x, &y) in combo.iter_mut().zip(row_combo) {
                *x = k.sub(*x, k.mul(c, y));
            }
        }
        match v.iter().position(|&c| c != 0) {
            None => {
                combo.truncate(j + 1);
                return Ok(QOrder { alpha: a.clone(), m_poly: FqPoly::from_coeffs(combo) });
            }
            Some(pivot) => {
                let inv = k.inv(v[pivot])?;
                v.iter_mut().for_each(|x| *x = k.mul(*x, inv));
                combo.iter_mut().for_each(|x| *x = k.mul(*x, inv));
                rows.push((v, combo, pivot));
            }
        }
        cur = ctx.frobenius(&cur, 1);
    }
    unreachable!("an orbit of ℓ+1 vectors in an ℓ-dimensional space is dependent")
}

/// Whether `b, b^q, …, b^{q^{n-1}}` is an F_q-basis of F_{q^n}.
pub fn is_normal(ctx: &FieldCtx, b: &FieldElem, n: usize) -> Result<bool> {
    if !ctx.in_subfield(b, n)? {
        return Err(Error::ElementOutsideSubfield(n));
    }
    // m_{b,q} divides x^n - 1, so degree n forces equality.
    Ok(q_order(ctx, b)?.m_poly.degree() == Some(n))
}

/// Outcome of a normal-element search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalSearch {
    pub element: FieldElem,
    /// Random draws used; `None` when the exhaustive scan was needed.
    pub trials: Option<usize>,
}

/// Seeded random search for a normal element of F_{q^n}, falling back to a
/// scan of the subfield when the trial budget runs out.
pub fn search_normal(ctx: &FieldCtx, n: usize, seed: u64) -> Result<NormalSearch> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let basis = ctx.subfield_basis(n)?;
    for trial in 1..=NORMAL_TRIAL_BUDGET {
        let coeffs: Vec<Fq> = (0..n).map(|_| rand::Rng::gen_range(&mut rng, 0..ctx.q())).collect();
        let b = ctx.combine(&basis, &coeffs);
        if is_normal(ctx, &b, n)? {
            return Ok(NormalSearch { element: b, trials: Some(trial) });
        }
    }
    let all = ctx.subfield_enumerate(n).map_err(|_| Error::SearchExhausted)?;
    for b in all {
        if is_normal(ctx, &b, n)? {
            return Ok(NormalSearch { element: b, trials: None });
        }
    }
    Err(Error::SearchExhausted)
}

pub fn find_normal(ctx: &FieldCtx, n: usize, seed: u64) -> Result<FieldElem> {
    search_normal(ctx, n, seed).map(|s| s.element)
}

/// The basis `b, b^q, …, b^{q^{n-1}}` of F_{q^n} for a normal `b`, ready
/// for coordinate solves.
#[derive(Debug, Clone)]
pub struct NormalBasis {
    n: usize,
    orbit: Vec<FieldElem>,
    /// ℓ×n matrix whose columns are the orbit.
    columns: Vec<Vec<Fq>>,
}

impl NormalBasis {
    pub fn new(ctx: &FieldCtx, b: &FieldElem, n: usize) -> Result<Self> {
        if !is_normal(ctx, b, n)? {
            return Err(Error::NotNormal);
        }
        let orbit = ctx.frobenius_orbit(b, n);
        let columns = (0..ctx.ell())
            .map(|i| orbit.iter().map(|v| v.coords()[i]).collect())
            .collect();
        Ok(Self { n, orbit, columns })
    }

    pub fn element(&self) -> &FieldElem {
        &self.orbit[0]
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn orbit(&self) -> &[FieldElem] {
        &self.orbit
    }

    /// The unique `f` with `deg f < n` and `L_f(b) = a`.
    pub fn coords(&self, ctx: &FieldCtx, a: &FieldElem) -> Result<FqPoly> {
        if !ctx.in_subfield(a, self.n)? {
            return Err(Error::ElementOutsideSubfield(self.n));
        }
        let sol = linalg::solve_affine(ctx.base(), &self.columns, a.coords(), self.n);
        debug_assert!(sol.kernel.is_empty());
        let v = sol.particular.expect("a normal basis spans F_{q^n}");
        Ok(FqPoly::from_coeffs(v))
    }

    /// The unique `h` with `deg h < m` and `L_{h·(x^n-1)/(x^m-1)}(b) = a`,
    /// for `a ∈ F_{q^m}`.
    pub fn subfield_coords(&self, ctx: &FieldCtx, a: &FieldElem, m: usize) -> Result<FqPoly> {
        FieldCtx::check_divides(m, self.n)?;
        if !ctx.in_subfield(a, m)? {
            return Err(Error::ElementOutsideSubfield(m));
        }
        let full = self.coords(ctx, a)?;
        poly::exact_div(ctx.base(), &full, &poly::cyclic_cofactor(self.n, m))
    }
}

pub fn normal_coords(ctx: &FieldCtx, b: &FieldElem, a: &FieldElem, n: usize) -> Result<FqPoly> {
    NormalBasis::new(ctx, b, n)?.coords(ctx, a)
}

pub fn subfield_coords(ctx: &FieldCtx, b: &FieldElem, a: &FieldElem, m: usize, n: usize) -> Result<FqPoly> {
    FieldCtx::check_divides(m, n)?;
    NormalBasis::new(ctx, b, n)?.subfield_coords(ctx, a, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{make_field, FieldParams};

    fn f4() -> FieldCtx {
        make_field(&FieldParams::new(2, 1, 2).ext_modulus(FqPoly::from_coeffs(vec![1, 1, 1]))).unwrap()
    }

    #[test]
    fn identity_and_frobenius_maps() {
        let ctx = f4();
        let t = ctx.generator();
        assert_eq!(lin_eval(&ctx, &FqPoly::one(), &t).unwrap(), t);
        assert_eq!(lin_eval(&ctx, &FqPoly::x(), &t).unwrap(), ctx.add(&t, &ctx.one()));
        let map = LinearizedMap::new(&ctx, poly::xn_minus_1(ctx.base(), 2));
        assert!(map.apply(&t).unwrap().is_zero());
    }

    #[test]
    fn kills_exactly_the_subfield() {
        let ctx = make_field(&FieldParams::new(2, 1, 6).seed(1)).unwrap();
        let k = ctx.base();
        for a in ctx.subfield_enumerate(6).unwrap() {
            for n in [1, 2, 3, 6] {
                let killed = lin_eval(&ctx, &poly::xn_minus_1(k, n), &a).unwrap().is_zero();
                assert_eq!(killed, ctx.in_subfield(&a, n).unwrap());
            }
        }
    }

    #[test]
    fn q_order_examples() {
        let ctx = f4();
        assert_eq!(q_order(&ctx, &ctx.zero()).unwrap().m_poly, FqPoly::one());
        assert_eq!(q_order(&ctx, &ctx.one()).unwrap().m_poly, FqPoly::from_coeffs(vec![1, 1]));
        assert_eq!(q_order(&ctx, &ctx.generator()).unwrap().m_poly, poly::xn_minus_1(ctx.base(), 2));
    }

    #[test]
    fn normality_examples() {
        let ctx = f4();
        let t = ctx.generator();
        assert!(!is_normal(&ctx, &ctx.zero(), 2).unwrap());
        assert!(!is_normal(&ctx, &ctx.zero(), 1).unwrap());
        assert!(is_normal(&ctx, &ctx.one(), 1).unwrap());
        assert!(is_normal(&ctx, &t, 2).unwrap());
        assert_eq!(is_normal(&ctx, &t, 1), Err(Error::ElementOutsideSubfield(1)));
        let b = find_normal(&ctx, 2, 0).unwrap();
        assert!(b == t || b == ctx.add(&t, &ctx.one()));
        assert!(is_normal(&ctx, &find_normal(&ctx, 1, 3).unwrap(), 1).unwrap());
    }

    #[test]
    fn coordinates() {
        let ctx = make_field(&FieldParams::new(3, 1, 4).seed(2)).unwrap();
        let b = find_normal(&ctx, 4, 9).unwrap();
        assert_eq!(normal_coords(&ctx, &b, &b, 4).unwrap(), FqPoly::one());
        assert_eq!(normal_coords(&ctx, &b, &ctx.zero(), 4).unwrap(), FqPoly::zero());
        assert_eq!(normal_coords(&ctx, &b, &ctx.frobenius(&b, 1), 4).unwrap(), FqPoly::x());
        assert_eq!(subfield_coords(&ctx, &b, &ctx.zero(), 2, 4).unwrap(), FqPoly::zero());
        let a = ctx.frobenius(&b, 2);
        assert_eq!(subfield_coords(&ctx, &b, &a, 4, 4).unwrap(), normal_coords(&ctx, &b, &a, 4).unwrap());
        assert_eq!(normal_coords(&ctx, &ctx.one(), &b, 4), Err(Error::NotNormal));
    }

    #[test]
    fn subfield_coords_of_one_over_f4() {
        // h = 1 iff Tr_{2/1}(b) = 1.
        let ctx = f4();
        for b in [ctx.generator(), ctx.add(&ctx.generator(), &ctx.one())] {
            let h = subfield_coords(&ctx, &b, &ctx.one(), 1, 2).unwrap();
            let tr_is_one = ctx.trace(&b, 2, 1).unwrap() == ctx.one();
            assert_eq!(h == FqPoly::one(), tr_is_one);
            let back = lin_eval(&ctx, &poly::mul(ctx.base(), &poly::cyclic_cofactor(2, 1), &h), &b).unwrap();
            assert_eq!(back, ctx.one());
        }
    }
}
