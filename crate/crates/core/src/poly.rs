//! Dense univariate polynomials over F_q.
//!
//! Polynomials are plain coefficient vectors (lowest degree first, no
//! trailing zeros). Arithmetic takes the coefficient field explicitly.

use std::cmp::Ordering;

use rand::Rng;

use crate::base::{BaseField, Fq};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FqPoly {
    coeffs: Vec<Fq>,
}

impl FqPoly {
    pub fn from_coeffs(mut coeffs: Vec<Fq>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Fq) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn x() -> Self {
        Self::monomial(1, 1)
    }

    /// `c·x^e`.
    pub fn monomial(c: Fq, e: usize) -> Self {
        let mut coeffs = vec![0; e + 1];
        coeffs[e] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[Fq] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Fq> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Fq {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<Fq> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(1)
    }
}

pub fn add(k: &BaseField, a: &FqPoly, b: &FqPoly) -> FqPoly {
    let n = a.coeffs.len().max(b.coeffs.len());
    FqPoly::from_coeffs((0..n).map(|i| k.add(a.coeff(i), b.coeff(i))).collect())
}

pub fn neg(k: &BaseField, a: &FqPoly) -> FqPoly {
    FqPoly::from_coeffs(a.coeffs.iter().map(|&c| k.neg(c)).collect())
}

pub fn sub(k: &BaseField, a: &FqPoly, b: &FqPoly) -> FqPoly {
    let n = a.coeffs.len().max(b.coeffs.len());
    FqPoly::from_coeffs((0..n).map(|i| k.sub(a.coeff(i), b.coeff(i))).collect())
}

pub fn scale(k: &BaseField, a: &FqPoly, c: Fq) -> FqPoly {
    FqPoly::from_coeffs(a.coeffs.iter().map(|&x| k.mul(x, c)).collect())
}

pub fn mul(k: &BaseField, a: &FqPoly, b: &FqPoly) -> FqPoly {
    if a.is_zero() || b.is_zero() {
        return FqPoly::zero();
    }
    let mut out = vec![0; a.coeffs.len() + b.coeffs.len() - 1];
    for (i, &x) in a.coeffs.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.coeffs.iter().enumerate() {
            out[i + j] = k.add(out[i + j], k.mul(x, y));
        }
    }
    FqPoly::from_coeffs(out)
}

/// Quotient and remainder with `deg r < deg b`.
pub fn divmod(k: &BaseField, a: &FqPoly, b: &FqPoly) -> Result<(FqPoly, FqPoly)> {
    let db = b.degree().ok_or(Error::DivisionByZero)?;
    let lead_inv = k.inv(b.coeffs[db])?;
    let da = match a.degree() {
        Some(d) if d >= db => d,
        _ => return Ok((FqPoly::zero(), a.clone())),
    };
    let mut rem = a.coeffs.clone();
    let mut quot = vec![0; da - db + 1];
    for top in (db..=da).rev() {
        let c = rem[top];
        if c == 0 {
            continue;
        }
        let factor = k.mul(c, lead_inv);
        quot[top - db] = factor;
        for (i, &bi) in b.coeffs.iter().enumerate() {
            let idx = top - db + i;
            rem[idx] = k.sub(rem[idx], k.mul(factor, bi));
        }
    }
    rem.truncate(db);
    Ok((FqPoly::from_coeffs(quot), FqPoly::from_coeffs(rem)))
}

pub fn rem(k: &BaseField, a: &FqPoly, b: &FqPoly) -> Result<FqPoly> {
    divmod(k, a, b).map(|(_, r)| r)
}

/// `a / b`, failing unless `b` divides `a` exactly.
pub fn exact_div(k: &BaseField, a: &FqPoly, b: &FqPoly) -> Result<FqPoly> {
    let (quot, r) = divmod(k, a, b)?;
    if !r.is_zero() {
        return Err(Error::InvalidArgument(format!(
            "{} does not divide {}",
            format(b),
            format(a)
        )));
    }
    Ok(quot)
}

pub fn divides(k: &BaseField, d: &FqPoly, a: &FqPoly) -> bool {
    match rem(k, a, d) {
        Ok(r) => r.is_zero(),
        Err(_) => a.is_zero(),
    }
}

/// Scale to leading coefficient 1; zero stays zero.
pub fn monic(k: &BaseField, a: &FqPoly) -> FqPoly {
    match a.leading() {
        None | Some(1) => a.clone(),
        Some(c) => scale(k, a, k.inv(c).expect("leading coefficient is nonzero")),
    }
}

pub fn gcd(k: &BaseField, a: &FqPoly, b: &FqPoly) -> Result<FqPoly> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::BothZero);
    }
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_zero() {
        let r = rem(k, &x, &y)?;
        x = y;
        y = r;
    }
    Ok(monic(k, &x))
}

/// Monic gcd `g` with Bézout cofactors: `s·a + t·b = g`.
pub fn ext_gcd(k: &BaseField, a: &FqPoly, b: &FqPoly) -> Result<(FqPoly, FqPoly, FqPoly)> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::BothZero);
    }
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (FqPoly::one(), FqPoly::zero());
    let (mut t0, mut t1) = (FqPoly::zero(), FqPoly::one());
    while !r1.is_zero() {
        let (quot, r) = divmod(k, &r0, &r1)?;
        let s = sub(k, &s0, &mul(k, &quot, &s1));
        let t = sub(k, &t0, &mul(k, &quot, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    let lead_inv = k.inv(r0.leading().expect("nonzero gcd"))?;
    Ok((scale(k, &r0, lead_inv), scale(k, &s0, lead_inv), scale(k, &t0, lead_inv)))
}

/// Monic lcm computed as `a·b / gcd(a, b)`.
pub fn lcm(k: &BaseField, a: &FqPoly, b: &FqPoly) -> Result<FqPoly> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroInput);
    }
    let g = gcd(k, a, b)?;
    let (quot, _) = divmod(k, a, &g)?;
    Ok(monic(k, &mul(k, &quot, b)))
}

/// `x^n - 1`.
pub fn xn_minus_1(k: &BaseField, n: usize) -> FqPoly {
    let mut coeffs = vec![0; n + 1];
    coeffs[0] = k.neg(1);
    coeffs[n] = k.add(coeffs[n], 1);
    FqPoly::from_coeffs(coeffs)
}

/// `(x^n - 1)/(x^m - 1) = Σ_{j < n/m} x^{mj}` for `m | n`.
pub fn cyclic_cofactor(n: usize, m: usize) -> FqPoly {
    assert!(m > 0 && n.is_multiple_of(m), "{m} must divide {n}");
    let mut coeffs = vec![0; n - m + 1];
    for j in 0..n / m {
        coeffs[m * j] = 1;
    }
    FqPoly::from_coeffs(coeffs)
}

/// `a·b mod m`.
pub fn mulmod(k: &BaseField, a: &FqPoly, b: &FqPoly, m: &FqPoly) -> Result<FqPoly> {
    rem(k, &mul(k, a, b), m)
}

/// `a^e mod m` by square-and-multiply.
pub fn powmod(k: &BaseField, a: &FqPoly, mut e: u64, m: &FqPoly) -> Result<FqPoly> {
    let mut base = rem(k, a, m)?;
    let mut acc = rem(k, &FqPoly::one(), m)?;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(k, &acc, &base, m)?;
        }
        base = mulmod(k, &base, &base, m)?;
        e >>= 1;
    }
    Ok(acc)
}

/// Merges `r ≡ r1 (mod m1)` and `r ≡ r2 (mod m2)` for arbitrary nonzero
/// moduli. Returns `(r, lcm(m1, m2))` with `deg r < deg lcm`, or
/// [`Error::Inconsistent`] when `r1 ≢ r2 (mod gcd(m1, m2))`.
pub fn crt_merge(
    k: &BaseField,
    r1: &FqPoly,
    m1: &FqPoly,
    r2: &FqPoly,
    m2: &FqPoly,
) -> Result<(FqPoly, FqPoly)> {
    if m1.is_zero() || m2.is_zero() {
        return Err(Error::ZeroInput);
    }
    let m1 = monic(k, m1);
    let m2 = monic(k, m2);
    let r1 = rem(k, r1, &m1)?;
    let r2 = rem(k, r2, &m2)?;
    let g = gcd(k, &m1, &m2)?;
    let diff = sub(k, &r2, &r1);
    let (diff_g, diff_rem) = divmod(k, &diff, &g)?;
    if !diff_rem.is_zero() {
        return Err(Error::Inconsistent);
    }
    let m1_red = exact_div(k, &m1, &g)?;
    let m2_red = exact_div(k, &m2, &g)?;
    // Solve m1·u ≡ r2 - r1 (mod m2), i.e. (m1/g)·u ≡ diff/g (mod m2/g).
    let (_, inv, _) = ext_gcd(k, &m1_red, &m2_red)?;
    let u = mulmod(k, &diff_g, &inv, &m2_red)?;
    let modulus = mul(k, &m1, &m2_red);
    let r = rem(k, &add(k, &r1, &mul(k, &m1, &u)), &modulus)?;
    Ok((r, modulus))
}

/// Folds [`crt_merge`] over a list of `(residue, modulus)` pairs.
pub fn crt_fold(k: &BaseField, congruences: &[(FqPoly, FqPoly)]) -> Result<(FqPoly, FqPoly)> {
    congruences
        .iter()
        .try_fold((FqPoly::zero(), FqPoly::one()), |(r, m), (ri, mi)| {
            crt_merge(k, &r, &m, ri, mi)
        })
}

/// Uniform polynomial of degree `< bound` (possibly zero).
pub fn random_below<R: Rng + ?Sized>(k: &BaseField, bound: usize, rng: &mut R) -> FqPoly {
    FqPoly::from_coeffs((0..bound).map(|_| rng.gen_range(0..k.q())).collect())
}

/// Parses terms like `x^4+2*x^2+1` in any order; `0` is the zero polynomial.
pub fn parse(k: &BaseField, text: &str) -> Result<FqPoly> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut coeffs: Vec<Fq> = Vec::new();
    for term in text.split('+') {
        let term = term.trim();
        let (c, e) = parse_term(term)?;
        if u64::from(c) >= u64::from(k.q()) {
            return Err(Error::Parse(format!(
                "coefficient {c} in term '{term}' is not below q = {}",
                k.q()
            )));
        }
        if coeffs.len() <= e {
            coeffs.resize(e + 1, 0);
        }
        coeffs[e] = k.add(coeffs[e], c);
    }
    Ok(FqPoly::from_coeffs(coeffs))
}

fn parse_term(term: &str) -> Result<(Fq, usize)> {
    let bad = || Error::Parse(format!("malformed term '{term}'"));
    let number = |s: &str| s.trim().parse::<u64>().map_err(|_| bad());
    let (coeff, mono) = match term.split_once('*') {
        Some((c, m)) => (number(c)?, Some(m.trim())),
        None if term.starts_with('x') => (1, Some(term)),
        None => (number(term)?, None),
    };
    let coeff = Fq::try_from(coeff).map_err(|_| bad())?;
    let exp = match mono {
        None => 0,
        Some("x") => 1,
        Some(m) => match m.strip_prefix("x^") {
            Some(e) => usize::try_from(number(e)?).map_err(|_| bad())?,
            None => return Err(bad()),
        },
    };
    if exp > 1 << 20 {
        return Err(Error::Parse(format!("exponent in '{term}' is too large")));
    }
    Ok((coeff, exp))
}

/// Prints in descending degree, omitting unit coefficients on non-constant terms.
pub fn format(a: &FqPoly) -> String {
    if a.is_zero() {
        return "0".into();
    }
    let terms: Vec<String> = a
        .coeffs
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &c)| c != 0)
        .map(|(e, &c)| match (c, e) {
            (c, 0) => c.to_string(),
            (1, 1) => "x".into(),
            (1, e) => format!("x^{e}"),
            (c, 1) => format!("{c}*x"),
            (c, e) => format!("{c}*x^{e}"),
        })
        .collect();
    terms.join("+")
}

/// Orders by degree, then coefficients from the top; used for canonical listings.
pub fn cmp_degree_lex(a: &FqPoly, b: &FqPoly) -> Ordering {
    a.coeffs
        .len()
        .cmp(&b.coeffs.len())
        .then_with(|| a.coeffs.iter().rev().cmp(b.coeffs.iter().rev()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> BaseField {
        BaseField::prime(2).unwrap()
    }

    fn p(k: &BaseField, s: &str) -> FqPoly {
        parse(k, s).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let k = BaseField::prime(5).unwrap();
        let (quot, r) = divmod(&k, &xn_minus_1(&k, 2), &p(&k, "x+4")).unwrap();
        assert_eq!(quot, p(&k, "x+1"));
        assert!(r.is_zero());
    }

    #[test]
    fn char_two_square() {
        let k = f2();
        assert_eq!(mul(&k, &p(&k, "x+1"), &p(&k, "x+1")), p(&k, "x^2+1"));
    }

    #[test]
    fn add_zero_and_short_division() {
        let k = BaseField::prime(3).unwrap();
        let f = p(&k, "2*x^3+x+1");
        assert_eq!(add(&k, &f, &FqPoly::zero()), f);
        let (quot, r) = divmod(&k, &p(&k, "x+1"), &f).unwrap();
        assert!(quot.is_zero());
        assert_eq!(r, p(&k, "x+1"));
        assert_eq!(divmod(&k, &f, &FqPoly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn gcd_examples() {
        let k = f2();
        assert_eq!(gcd(&k, &p(&k, "x^2+1"), &p(&k, "x^3+1")).unwrap(), p(&k, "x+1"));
        let k3 = BaseField::prime(3).unwrap();
        assert_eq!(gcd(&k3, &p(&k3, "2*x^2+1"), &FqPoly::zero()).unwrap(), p(&k3, "x^2+2"));
        for q in [2, 3, 5] {
            let k = BaseField::prime(q).unwrap();
            let g = gcd(&k, &xn_minus_1(&k, 4), &xn_minus_1(&k, 6)).unwrap();
            assert_eq!(g, xn_minus_1(&k, 2));
        }
        assert_eq!(gcd(&k, &FqPoly::zero(), &FqPoly::zero()), Err(Error::BothZero));
    }

    #[test]
    fn lcm_examples() {
        let k = BaseField::prime(3).unwrap();
        let a = xn_minus_1(&k, 2);
        let b = xn_minus_1(&k, 3);
        let l = lcm(&k, &a, &b).unwrap();
        let expected = exact_div(&k, &mul(&k, &a, &b), &xn_minus_1(&k, 1)).unwrap();
        assert_eq!(l, expected);
        assert_eq!(l.degree(), Some(4));
        let f = p(&k, "2*x^2+x");
        assert_eq!(lcm(&k, &f, &f).unwrap(), monic(&k, &f));
        assert_eq!(lcm(&k, &xn_minus_1(&k, 1), &b).unwrap(), b);
        assert_eq!(lcm(&k, &f, &FqPoly::zero()), Err(Error::ZeroInput));
    }

    #[test]
    fn xn_minus_1_encodings() {
        let k2 = f2();
        let k3 = BaseField::prime(3).unwrap();
        assert_eq!(format(&xn_minus_1(&k2, 1)), "x+1");
        assert_eq!(format(&xn_minus_1(&k2, 2)), "x^2+1");
        assert_eq!(format(&xn_minus_1(&k3, 6)), "x^6+2");
    }

    #[test]
    fn cofactor_is_exact_quotient() {
        for q in [2, 3, 5] {
            let k = BaseField::prime(q).unwrap();
            for (n, m) in [(6, 2), (6, 3), (4, 4), (12, 4), (5, 1)] {
                let expected = exact_div(&k, &xn_minus_1(&k, n), &xn_minus_1(&k, m)).unwrap();
                assert_eq!(cyclic_cofactor(n, m), expected);
            }
        }
    }

    #[test]
    fn crt_examples() {
        let k = f2();
        let (r, m) = crt_merge(&k, &FqPoly::zero(), &p(&k, "x"), &FqPoly::one(), &p(&k, "x+1")).unwrap();
        assert_eq!(r, p(&k, "x"));
        assert_eq!(m, p(&k, "x^2+x"));

        let k3 = BaseField::prime(3).unwrap();
        let r1 = p(&k3, "2*x+1");
        let m1 = p(&k3, "x^2+1");
        let (r, m) = crt_merge(&k3, &r1, &m1, &r1, &FqPoly::one()).unwrap();
        assert_eq!((r, m), (r1, m1));

        let err = crt_merge(&k, &FqPoly::zero(), &p(&k, "x+1"), &FqPoly::one(), &p(&k, "x^2+1"));
        assert_eq!(err, Err(Error::Inconsistent));
    }

    #[test]
    fn crt_non_coprime_consistent() {
        // Residues agree modulo gcd(x^2-1, x^3-1) = x - 1.
        let k = BaseField::prime(3).unwrap();
        let m1 = xn_minus_1(&k, 2);
        let m2 = xn_minus_1(&k, 3);
        let r1 = p(&k, "x");
        let r2 = p(&k, "x^2");
        let (r, m) = crt_merge(&k, &r1, &m1, &r2, &m2).unwrap();
        assert_eq!(m.degree(), Some(4));
        assert_eq!(rem(&k, &r, &m1).unwrap(), r1);
        assert_eq!(rem(&k, &r, &m2).unwrap(), r2);
    }

    #[test]
    fn text_format() {
        let k = BaseField::prime(3).unwrap();
        let f = p(&k, "1 + 2*x^2 + x^4");
        assert_eq!(format(&f), "x^4+2*x^2+1");
        assert_eq!(p(&k, "x^1+1*x").coeffs(), &[0, 2]);
        assert_eq!(p(&k, "1*x^0"), FqPoly::one());
        assert_eq!(p(&k, "x+x+x"), FqPoly::zero());
        assert_eq!(format(&FqPoly::zero()), "0");
        assert_eq!(format(&p(&k, "2*x")), "2*x");
        for bad in ["", "3*x", "x^", "y", "2*", "x^-1", "1++x"] {
            assert!(parse(&k, bad).is_err(), "{bad:?} should not parse");
        }
    }
}
