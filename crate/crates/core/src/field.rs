//! The tower F_p ⊆ F_q ⊆ F_{q^ℓ}.
//!
//! F_{q^ℓ} = F_q[t]/(M(t)) with M monic irreducible of degree ℓ over F_q.
//! Elements are coordinate vectors over F_q in the basis 1, t, …, t^{ℓ-1}.
//! Subfields are the fixed fields of powers of Frobenius.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::checked_pow;
use crate::base::{BaseField, Fq, PrimePower};
use crate::error::{Error, Result};
use crate::irreducible;
use crate::linalg;
use crate::poly::{self, FqPoly};

/// Default bound on how many elements or tuples any enumeration may visit.
pub const DEFAULT_ENUM_CAP: u64 = 1 << 20;
/// Default bound on `log2 |F_{q^ℓ}|`.
pub const DEFAULT_MAX_FIELD_BITS: u64 = 1024;

/// Inputs to [`make_field`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldParams {
    pub p: u64,
    pub s: u32,
    pub ell: usize,
    pub seed: u64,
    /// Modulus of F_q over F_p; generated from `seed` when absent.
    pub base_modulus: Option<FqPoly>,
    /// Modulus of F_{q^ℓ} over F_q; generated from `seed` when absent.
    pub ext_modulus: Option<FqPoly>,
    pub enum_cap: u64,
    pub max_field_bits: u64,
}

impl FieldParams {
    pub fn new(p: u64, s: u32, ell: usize) -> Self {
        Self {
            p,
            s,
            ell,
            seed: 0,
            base_modulus: None,
            ext_modulus: None,
            enum_cap: DEFAULT_ENUM_CAP,
            max_field_bits: DEFAULT_MAX_FIELD_BITS,
        }
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn base_modulus(mut self, modulus: FqPoly) -> Self {
        self.base_modulus = Some(modulus);
        self
    }

    pub fn ext_modulus(mut self, modulus: FqPoly) -> Self {
        self.ext_modulus = Some(modulus);
        self
    }

    pub fn enum_cap(mut self, cap: u64) -> Self {
        self.enum_cap = cap;
        self
    }

    pub fn max_field_bits(mut self, bits: u64) -> Self {
        self.max_field_bits = bits;
        self
    }
}

/// Builds F_{(p^s)^ℓ}. Deterministic in `params`; supplied moduli are
/// checked for degree, monicity and irreducibility.
pub fn make_field(params: &FieldParams) -> Result<FieldCtx> {
    let order = PrimePower::new(params.p, params.s)?;
    if params.ell == 0 {
        return Err(Error::InvalidArgument("extension degree must be positive".into()));
    }
    let bits = (params.ell as f64 * f64::from(order.q).log2()).ceil() as u64;
    if bits > params.max_field_bits {
        return Err(Error::FieldTooLarge { bits, limit: params.max_field_bits });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let base = match &params.base_modulus {
        Some(m) => {
            if m.degree() != Some(params.s as usize) {
                return Err(Error::DegreeMismatch {
                    expected: params.s as usize,
                    found: m.degree().unwrap_or(0),
                });
            }
            BaseField::with_modulus(params.p, m.clone())?
        }
        None => BaseField::random(params.p, params.s, &mut rng)?,
    };
    let ext_modulus = match &params.ext_modulus {
        Some(m) => {
            if m.degree() != Some(params.ell) {
                return Err(Error::DegreeMismatch {
                    expected: params.ell,
                    found: m.degree().unwrap_or(0),
                });
            }
            if m.coeffs().iter().any(|&c| !base.contains(c)) {
                return Err(Error::Parse(format!(
                    "modulus coefficients must be below q = {}",
                    base.q()
                )));
            }
            if !m.is_monic() {
                return Err(Error::NotMonic(poly::format(m)));
            }
            if !irreducible::is_irreducible(&base, m) {
                return Err(Error::ReducibleModulus(poly::format(m)));
            }
            m.clone()
        }
        None => irreducible::random_irreducible(&base, params.ell, &mut rng),
    };
    Ok(FieldCtx::assemble(base, ext_modulus, params.enum_cap))
}

/// A finite field F_{q^ℓ} presented as a degree-ℓ extension of F_q.
/// Immutable after construction.
#[derive(Debug, Clone)]
pub struct FieldCtx {
    id: u64,
    base: BaseField,
    ell: usize,
    ext_modulus: FqPoly,
    /// Row i holds the coordinates of t^{iq}; Frobenius is F_q-linear in
    /// coordinates, so these rows determine it.
    frobenius: Vec<Vec<Fq>>,
    enum_cap: u64,
}

/// An element of some [`FieldCtx`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElem {
    ctx: u64,
    coords: Vec<Fq>,
}

impl FieldElem {
    pub fn coords(&self) -> &[Fq] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn ctx_id(&self) -> u64 {
        self.ctx
    }
}

/// Operations accepted by [`FieldCtx::arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Inv,
}

impl FieldCtx {
    fn assemble(base: BaseField, ext_modulus: FqPoly, enum_cap: u64) -> Self {
        let ell = ext_modulus.degree().expect("modulus has positive degree");
        let mut hasher = DefaultHasher::new();
        (base.p(), base.s(), base.modulus(), &ext_modulus).hash(&mut hasher);
        let id = hasher.finish();

        let t_q = poly::powmod(&base, &FqPoly::x(), u64::from(base.q()), &ext_modulus)
            .expect("modulus is nonzero");
        let mut frobenius = Vec::with_capacity(ell);
        let mut cur = FqPoly::one();
        for _ in 0..ell {
            let mut row = cur.coeffs().to_vec();
            row.resize(ell, 0);
            frobenius.push(row);
            cur = poly::mulmod(&base, &cur, &t_q, &ext_modulus).expect("modulus is nonzero");
        }
        Self { id, base, ell, ext_modulus, frobenius, enum_cap }
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn base(&self) -> &BaseField {
        &self.base
    }

    pub fn order(&self) -> PrimePower {
        self.base.order()
    }

    pub fn q(&self) -> u32 {
        self.base.q()
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn base_modulus(&self) -> &FqPoly {
        self.base.modulus()
    }

    pub fn ext_modulus(&self) -> &FqPoly {
        &self.ext_modulus
    }

    pub fn frobenius_table(&self) -> &[Vec<Fq>] {
        &self.frobenius
    }

    pub fn enum_cap(&self) -> u64 {
        self.enum_cap
    }

    fn wrap(&self, coords: Vec<Fq>) -> FieldElem {
        debug_assert_eq!(coords.len(), self.ell);
        FieldElem { ctx: self.id, coords }
    }

    pub fn owns(&self, a: &FieldElem) -> bool {
        a.ctx == self.id && a.coords.len() == self.ell
    }

    pub fn check(&self, a: &FieldElem) -> Result<()> {
        if self.owns(a) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn zero(&self) -> FieldElem {
        self.wrap(vec![0; self.ell])
    }

    pub fn one(&self) -> FieldElem {
        self.from_base(1)
    }

    /// The embedding F_q -> F_{q^ℓ}.
    pub fn from_base(&self, c: Fq) -> FieldElem {
        let mut coords = vec![0; self.ell];
        coords[0] = c;
        self.wrap(coords)
    }

    /// The class of `t`.
    pub fn generator(&self) -> FieldElem {
        let r = poly::rem(&self.base, &FqPoly::x(), &self.ext_modulus).expect("modulus is nonzero");
        self.elem_of_poly(&r)
    }

    fn elem_of_poly(&self, f: &FqPoly) -> FieldElem {
        let mut coords = f.coeffs().to_vec();
        coords.resize(self.ell, 0);
        self.wrap(coords)
    }

    fn to_poly(a: &FieldElem) -> FqPoly {
        FqPoly::from_coeffs(a.coords.clone())
    }

    /// Validates coordinates and wraps them.
    pub fn element(&self, coords: Vec<Fq>) -> Result<FieldElem> {
        if coords.len() != self.ell {
            return Err(Error::DegreeMismatch { expected: self.ell, found: coords.len() });
        }
        if let Some(&bad) = coords.iter().find(|&&c| !self.base.contains(c)) {
            return Err(Error::Parse(format!("coordinate {bad} is not below q = {}", self.q())));
        }
        Ok(self.wrap(coords))
    }

    pub fn add(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        debug_assert!(self.owns(a) && self.owns(b));
        self.wrap(a.coords.iter().zip(&b.coords).map(|(&x, &y)| self.base.add(x, y)).collect())
    }

    pub fn add_assign(&self, acc: &mut FieldElem, b: &FieldElem) {
        debug_assert!(self.owns(acc) && self.owns(b));
        for (x, &y) in acc.coords.iter_mut().zip(&b.coords) {
            *x = self.base.add(*x, y);
        }
    }

    pub fn sub(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        debug_assert!(self.owns(a) && self.owns(b));
        self.wrap(a.coords.iter().zip(&b.coords).map(|(&x, &y)| self.base.sub(x, y)).collect())
    }

    pub fn neg(&self, a: &FieldElem) -> FieldElem {
        self.wrap(a.coords.iter().map(|&x| self.base.neg(x)).collect())
    }

    /// `c·a` for `c ∈ F_q`.
    pub fn scale(&self, c: Fq, a: &FieldElem) -> FieldElem {
        self.wrap(a.coords.iter().map(|&x| self.base.mul(c, x)).collect())
    }

    pub fn mul(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        debug_assert!(self.owns(a) && self.owns(b));
        let k = &self.base;
        let n = self.ell;
        let mut prod = vec![0; 2 * n - 1];
        for (i, &x) in a.coords.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coords.iter().enumerate() {
                prod[i + j] = k.add(prod[i + j], k.mul(x, y));
            }
        }
        let m = self.ext_modulus.coeffs();
        for top in (n..prod.len()).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            for (i, &mi) in m[..n].iter().enumerate() {
                let idx = top - n + i;
                prod[idx] = k.sub(prod[idx], k.mul(c, mi));
            }
        }
        prod.truncate(n);
        self.wrap(prod)
    }

    pub fn inv(&self, a: &FieldElem) -> Result<FieldElem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (g, s, _) = poly::ext_gcd(&self.base, &Self::to_poly(a), &self.ext_modulus)?;
        debug_assert_eq!(g, FqPoly::one());
        Ok(self.elem_of_poly(&poly::rem(&self.base, &s, &self.ext_modulus)?))
    }

    pub fn div(&self, a: &FieldElem, b: &FieldElem) -> Result<FieldElem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &FieldElem, mut e: u64) -> FieldElem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Checked arithmetic; unary operations ignore `b`.
    pub fn arith(&self, a: &FieldElem, b: &FieldElem, op: FieldOp) -> Result<FieldElem> {
        self.check(a)?;
        match op {
            FieldOp::Neg => return Ok(self.neg(a)),
            FieldOp::Inv => return self.inv(a),
            _ => self.check(b)?,
        }
        match op {
            FieldOp::Add => Ok(self.add(a, b)),
            FieldOp::Sub => Ok(self.sub(a, b)),
            FieldOp::Mul => Ok(self.mul(a, b)),
            FieldOp::Div => self.div(a, b),
            FieldOp::Neg | FieldOp::Inv => unreachable!(),
        }
    }

    fn frobenius_once(&self, a: &FieldElem) -> FieldElem {
        let k = &self.base;
        let mut out = vec![0; self.ell];
        for (&c, row) in a.coords.iter().zip(&self.frobenius) {
            if c == 0 {
                continue;
            }
            for (o, &r) in out.iter_mut().zip(row) {
                *o = k.add(*o, k.mul(c, r));
            }
        }
        self.wrap(out)
    }

    /// `a^{q^j}`.
    pub fn frobenius(&self, a: &FieldElem, j: usize) -> FieldElem {
        let mut out = a.clone();
        for _ in 0..j % self.ell {
            out = self.frobenius_once(&out);
        }
        out
    }

    /// Frobenius orbit `a, a^q, …, a^{q^{count-1}}`.
    pub fn frobenius_orbit(&self, a: &FieldElem, count: usize) -> Vec<FieldElem> {
        let mut out = Vec::with_capacity(count);
        let mut cur = a.clone();
        for _ in 0..count {
            let next = self.frobenius_once(&cur);
            out.push(std::mem::replace(&mut cur, next));
        }
        out
    }

    /// Errors unless `d` is a positive divisor of `n`.
    pub fn check_divides(d: usize, n: usize) -> Result<()> {
        if d == 0 || !n.is_multiple_of(d) {
            return Err(Error::NonDivisorDegree { d, n });
        }
        Ok(())
    }

    pub fn in_subfield(&self, a: &FieldElem, d: usize) -> Result<bool> {
        Self::check_divides(d, self.ell)?;
        self.check(a)?;
        Ok(self.frobenius(a, d) == *a)
    }

    /// `q^d`, if it fits in a `u64`.
    pub fn subfield_size(&self, d: usize) -> Option<u64> {
        checked_pow(u64::from(self.q()), d as u64)
    }

    /// An F_q-basis of F_{q^d}: the kernel of `Frob^d - id`.
    pub fn subfield_basis(&self, d: usize) -> Result<Vec<FieldElem>> {
        Self::check_divides(d, self.ell)?;
        let n = self.ell;
        let k = &self.base;
        let mut rows = vec![vec![0; n]; n];
        for j in 0..n {
            let mut e = vec![0; n];
            e[j] = 1;
            let img = self.frobenius(&self.wrap(e), d);
            for (i, row) in rows.iter_mut().enumerate() {
                row[j] = k.sub(img.coords[i], Fq::from(i == j));
            }
        }
        let basis: Vec<_> = linalg::kernel(k, &rows, n).into_iter().map(|v| self.wrap(v)).collect();
        debug_assert_eq!(basis.len(), d);
        Ok(basis)
    }

    /// All `q^d` elements of F_{q^d}: element `i` is `Σ c_j·basis_j` where
    /// `c_j` are the base-q digits of `i`, least significant first.
    pub fn subfield_enumerate(&self, d: usize) -> Result<Vec<FieldElem>> {
        self.subfield_enumerate_capped(d, self.enum_cap)
    }

    /// [`subfield_enumerate`](Self::subfield_enumerate) with an explicit cap.
    pub fn subfield_enumerate_capped(&self, d: usize, cap: u64) -> Result<Vec<FieldElem>> {
        Self::check_divides(d, self.ell)?;
        let size = self
            .subfield_size(d)
            .filter(|&n| n <= cap)
            .ok_or_else(|| Error::EnumerationCapExceeded { needed: format!("{}^{d}", self.q()), cap })?;
        let basis = self.subfield_basis(d)?;
        Ok(span(self, &basis, size))
    }

    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> FieldElem {
        self.wrap((0..self.ell).map(|_| rng.gen_range(0..self.q())).collect())
    }

    pub fn random_subfield_element<R: Rng + ?Sized>(&self, d: usize, rng: &mut R) -> Result<FieldElem> {
        let basis = self.subfield_basis(d)?;
        Ok(self.combine(&basis, &(0..d).map(|_| rng.gen_range(0..self.q())).collect::<Vec<_>>()))
    }

    /// `Σ c_i·v_i`.
    pub fn combine(&self, vectors: &[FieldElem], coeffs: &[Fq]) -> FieldElem {
        let mut acc = self.zero();
        for (v, &c) in vectors.iter().zip(coeffs) {
            if c != 0 {
                let term = self.scale(c, v);
                self.add_assign(&mut acc, &term);
            }
        }
        acc
    }

    /// `Tr_{n/m}(a) = Σ_{j < n/m} a^{q^{mj}}`.
    pub fn trace(&self, a: &FieldElem, n: usize, m: usize) -> Result<FieldElem> {
        Self::check_divides(m, n)?;
        Self::check_divides(n, self.ell)?;
        if !self.in_subfield(a, n)? {
            return Err(Error::ElementOutsideSubfield(n));
        }
        let mut acc = self.zero();
        let mut cur = a.clone();
        for _ in 0..n / m {
            self.add_assign(&mut acc, &cur);
            cur = self.frobenius(&cur, m);
        }
        Ok(acc)
    }

    /// Comma-separated coordinates, lowest degree first.
    pub fn format_elem(&self, a: &FieldElem) -> String {
        a.coords.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
    }

    /// Inverse of [`format_elem`](Self::format_elem). Missing trailing
    /// coordinates are zero, so `0` and `1` parse in every context.
    pub fn parse_elem(&self, text: &str) -> Result<FieldElem> {
        let mut coords = text
            .split(',')
            .map(|c| {
                c.trim()
                    .parse::<Fq>()
                    .map_err(|_| Error::Parse(format!("bad coordinate '{}' in '{text}'", c.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        if coords.len() > self.ell {
            return Err(Error::Parse(format!(
                "'{text}' has {} coordinates, field has degree {}",
                coords.len(),
                self.ell
            )));
        }
        coords.resize(self.ell, 0);
        self.element(coords)
    }
}

/// All F_q-combinations of `basis`, `size = q^{basis.len()}` of them.
fn span(ctx: &FieldCtx, basis: &[FieldElem], size: u64) -> Vec<FieldElem> {
    let q = ctx.q();
    // steps[j][c] = (c+1)·b_j - c·b_j, taking c = q-1 back to 0.
    let steps: Vec<Vec<FieldElem>> = basis
        .iter()
        .map(|b| {
            (0..q)
                .map(|c| {
                    let next = if c + 1 == q { 0 } else { c + 1 };
                    ctx.sub(&ctx.scale(next, b), &ctx.scale(c, b))
                })
                .collect()
        })
        .collect();
    let mut digits = vec![0; basis.len()];
    let mut out = Vec::with_capacity(size as usize);
    let mut cur = ctx.zero();
    for _ in 0..size {
        out.push(cur.clone());
        for (j, digit) in digits.iter_mut().enumerate() {
            ctx.add_assign(&mut cur, &steps[j][*digit as usize]);
            if *digit + 1 < q {
                *digit += 1;
                break;
            }
            *digit = 0;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f4() -> FieldCtx {
        make_field(&FieldParams::new(2, 1, 2).ext_modulus(FqPoly::from_coeffs(vec![1, 1, 1]))).unwrap()
    }

    #[test]
    fn prime_field_context() {
        let ctx = make_field(&FieldParams::new(2, 1, 1)).unwrap();
        assert_eq!(ctx.ell(), 1);
        assert_eq!(ctx.ext_modulus().degree(), Some(1));
        assert_eq!(ctx.subfield_enumerate(1).unwrap().len(), 2);
    }

    #[test]
    fn f4_modulus_checks() {
        assert_eq!(f4().ell(), 2);
        let err = make_field(&FieldParams::new(2, 1, 2).ext_modulus(FqPoly::from_coeffs(vec![1, 0, 1])));
        assert!(matches!(err, Err(Error::ReducibleModulus(_))));
        let err = make_field(&FieldParams::new(2, 1, 3).ext_modulus(FqPoly::from_coeffs(vec![1, 1, 1])));
        assert_eq!(err.unwrap_err(), Error::DegreeMismatch { expected: 3, found: 2 });
        assert_eq!(make_field(&FieldParams::new(4, 1, 2)).unwrap_err(), Error::NonPrime(4));
    }

    #[test]
    fn f4_arithmetic() {
        let ctx = f4();
        let t = ctx.generator();
        let t1 = ctx.add(&t, &ctx.one());
        assert_eq!(ctx.mul(&t, &t), t1);
        assert_eq!(ctx.inv(&ctx.one()).unwrap(), ctx.one());
        assert_eq!(ctx.add(&t, &ctx.neg(&t)), ctx.zero());
        assert_eq!(ctx.arith(&t, &ctx.zero(), FieldOp::Div), Err(Error::DivisionByZero));
        assert_eq!(ctx.frobenius(&t, 1), t1);
        assert_eq!(ctx.frobenius(&t, 0), t);
        assert!(!ctx.in_subfield(&t, 1).unwrap());
        assert!(ctx.in_subfield(&ctx.one(), 1).unwrap());
        assert!(ctx.in_subfield(&ctx.zero(), 2).unwrap());
        assert_eq!(ctx.in_subfield(&t, 3), Err(Error::NonDivisorDegree { d: 3, n: 2 }));
    }

    #[test]
    fn context_mismatch() {
        let a = f4();
        let b = make_field(&FieldParams::new(3, 1, 2)).unwrap();
        let err = a.arith(&a.one(), &b.one(), FieldOp::Add);
        assert_eq!(err, Err(Error::ContextMismatch));
    }

    #[test]
    fn f4_traces() {
        let ctx = f4();
        let t = ctx.generator();
        assert_eq!(ctx.trace(&ctx.one(), 2, 1).unwrap(), ctx.zero());
        assert_eq!(ctx.trace(&t, 2, 1).unwrap(), ctx.one());
        assert_eq!(ctx.trace(&t, 2, 2).unwrap(), t);
    }

    #[test]
    fn subfield_enumeration() {
        let ctx = f4();
        assert_eq!(ctx.subfield_enumerate(1).unwrap(), vec![ctx.zero(), ctx.one()]);
        assert_eq!(ctx.subfield_enumerate(2).unwrap().len(), 4);

        let f64 = make_field(&FieldParams::new(2, 1, 6).seed(4)).unwrap();
        let f8 = f64.subfield_enumerate(3).unwrap();
        assert_eq!(f8.len(), 8);
        assert!(f8.iter().all(|a| f64.frobenius(a, 3) == *a));
        let small = make_field(&FieldParams::new(2, 1, 6).enum_cap(4)).unwrap();
        assert!(matches!(small.subfield_enumerate(3), Err(Error::EnumerationCapExceeded { .. })));
    }

    #[test]
    fn inverse_in_extension_tower() {
        let ctx = make_field(&FieldParams::new(2, 2, 3).seed(2)).unwrap();
        for a in ctx.subfield_enumerate(3).unwrap().into_iter().skip(1) {
            assert_eq!(ctx.mul(&a, &ctx.inv(&a).unwrap()), ctx.one());
        }
    }

    #[test]
    fn frobenius_table_matches_powering() {
        let ctx = make_field(&FieldParams::new(3, 2, 3).seed(8)).unwrap();
        let t = ctx.generator();
        let q = u64::from(ctx.q());
        for (i, row) in ctx.frobenius_table().iter().enumerate() {
            assert_eq!(ctx.pow(&t, i as u64 * q).coords(), row.as_slice());
        }
    }

    #[test]
    fn element_text_round_trip() {
        let ctx = make_field(&FieldParams::new(3, 2, 3)).unwrap();
        let a = ctx.element(vec![8, 0, 5]).unwrap();
        assert_eq!(ctx.format_elem(&a), "8,0,5");
        assert_eq!(ctx.parse_elem("8,0,5").unwrap(), a);
        assert_eq!(ctx.parse_elem("1").unwrap(), ctx.one());
        assert!(ctx.parse_elem("9").is_err());
        assert!(ctx.parse_elem("1,2,3,4").is_err());
        assert!(ctx.parse_elem("a").is_err());
    }

    #[test]
    fn construction_is_deterministic() {
        let a = make_field(&FieldParams::new(5, 2, 4).seed(17)).unwrap();
        let b = make_field(&FieldParams::new(5, 2, 4).seed(17)).unwrap();
        assert_eq!(a.ext_modulus(), b.ext_modulus());
        assert_eq!(a.base_modulus(), b.base_modulus());
        assert_eq!(a.id(), b.id());
    }

    #[test]
    fn field_too_large() {
        let err = make_field(&FieldParams::new(2, 1, 2000)).unwrap_err();
        assert!(matches!(err, Error::FieldTooLarge { .. }));
    }
}
