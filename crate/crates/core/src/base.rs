//! The coefficient field F_q = F_p[t]/(m(t)).
//!
//! Elements of F_q are stored as integers `Σ c_i p^i`, the little-endian
//! digits being the F_p-coordinates in the basis 1, t, …, t^{s-1}.

use std::fmt;
use std::sync::Arc;

use rand::Rng;
use serde::Serialize;

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::irreducible;
use crate::poly::{self, FqPoly};

/// An element of the coefficient field in its integer encoding.
pub type Fq = u32;

/// Tables are built for extension coefficient fields up to this size.
const TABLE_LIMIT: u64 = 1 << 10;

/// `q = p^s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct PrimePower {
    pub p: u32,
    pub s: u32,
    pub q: u32,
}

impl PrimePower {
    pub fn new(p: u64, s: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NonPrime(p));
        }
        if s == 0 {
            return Err(Error::InvalidArgument("s must be positive".into()));
        }
        let q = p
            .checked_pow(s)
            .filter(|&q| q <= u64::from(u32::MAX))
            .ok_or_else(|| Error::InvalidArgument(format!("{p}^{s} does not fit in 32 bits")))?;
        Ok(Self { p: p as u32, s, q: q as u32 })
    }
}

impl fmt::Display for PrimePower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.s == 1 {
            write!(f, "{}", self.p)
        } else {
            write!(f, "{}^{}", self.p, self.s)
        }
    }
}

#[derive(Debug)]
struct Tables {
    add: Vec<Fq>,
    mul: Vec<Fq>,
    neg: Vec<Fq>,
    inv: Vec<Fq>,
}

/// The field F_q with exact arithmetic on encoded elements.
#[derive(Debug, Clone)]
pub struct BaseField {
    order: PrimePower,
    /// Monic irreducible of degree `s` over F_p.
    modulus: FqPoly,
    tables: Option<Arc<Tables>>,
}

impl PartialEq for BaseField {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.modulus == other.modulus
    }
}

impl Eq for BaseField {}

impl BaseField {
    /// The prime field F_p, with modulus `t` so that encodings are residues.
    pub fn prime(p: u64) -> Result<Self> {
        let order = PrimePower::new(p, 1)?;
        Ok(Self { order, modulus: FqPoly::x(), tables: None })
    }

    /// F_{p^s} with a seeded random irreducible modulus.
    pub fn random<R: Rng + ?Sized>(p: u64, s: u32, rng: &mut R) -> Result<Self> {
        let prime = Self::prime(p)?;
        if s == 1 {
            return Ok(prime);
        }
        PrimePower::new(p, s)?;
        let modulus = irreducible::random_irreducible(&prime, s as usize, rng);
        Self::with_modulus(p, modulus)
    }

    /// F_{p^s} defined by an explicit monic modulus over F_p.
    pub fn with_modulus(p: u64, modulus: FqPoly) -> Result<Self> {
        let prime = Self::prime(p)?;
        let s = modulus
            .degree()
            .filter(|&d| d >= 1)
            .ok_or(Error::DegreeMismatch { expected: 1, found: 0 })?;
        if modulus.coeffs().iter().any(|&c| c >= prime.q()) {
            return Err(Error::Parse(format!("modulus coefficients must be below {p}")));
        }
        if modulus.leading() != Some(1) {
            return Err(Error::NotMonic(poly::format(&modulus)));
        }
        if !irreducible::is_irreducible(&prime, &modulus) {
            return Err(Error::ReducibleModulus(poly::format(&modulus)));
        }
        let order = PrimePower::new(p, s as u32)?;
        let mut field = Self { order, modulus, tables: None };
        if s > 1 && u64::from(order.q) <= TABLE_LIMIT {
            field.tables = Some(Arc::new(field.build_tables()));
        }
        Ok(field)
    }

    fn build_tables(&self) -> Tables {
        let q = self.q() as usize;
        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        for a in 0..q {
            for b in 0..q {
                add[a * q + b] = self.add_slow(a as Fq, b as Fq);
                mul[a * q + b] = self.mul_slow(a as Fq, b as Fq);
            }
        }
        let neg = (0..q).map(|a| self.neg_slow(a as Fq)).collect();
        let inv = (0..q)
            .map(|a| if a == 0 { 0 } else { self.pow_slow(a as Fq, (q - 2) as u64) })
            .collect();
        Tables { add, mul, neg, inv }
    }

    pub fn order(&self) -> PrimePower {
        self.order
    }

    pub fn p(&self) -> u32 {
        self.order.p
    }

    pub fn s(&self) -> u32 {
        self.order.s
    }

    pub fn q(&self) -> u32 {
        self.order.q
    }

    pub fn modulus(&self) -> &FqPoly {
        &self.modulus
    }

    pub fn is_prime_field(&self) -> bool {
        self.order.s == 1
    }

    pub fn contains(&self, a: Fq) -> bool {
        a < self.q()
    }

    /// The image of an integer under Z -> F_p ⊆ F_q.
    pub fn from_int(&self, n: i64) -> Fq {
        n.rem_euclid(i64::from(self.p())) as Fq
    }

    #[inline]
    pub fn add(&self, a: Fq, b: Fq) -> Fq {
        if self.is_prime_field() {
            let s = u64::from(a) + u64::from(b);
            let p = u64::from(self.p());
            return if s >= p { (s - p) as Fq } else { s as Fq };
        }
        match &self.tables {
            Some(t) => t.add[a as usize * self.q() as usize + b as usize],
            None => self.add_slow(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: Fq) -> Fq {
        if self.is_prime_field() {
            return if a == 0 { 0 } else { self.p() - a };
        }
        match &self.tables {
            Some(t) => t.neg[a as usize],
            None => self.neg_slow(a),
        }
    }

    #[inline]
    pub fn sub(&self, a: Fq, b: Fq) -> Fq {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fq, b: Fq) -> Fq {
        if self.is_prime_field() {
            return ((u64::from(a) * u64::from(b)) % u64::from(self.p())) as Fq;
        }
        match &self.tables {
            Some(t) => t.mul[a as usize * self.q() as usize + b as usize],
            None => self.mul_slow(a, b),
        }
    }

    pub fn inv(&self, a: Fq) -> Result<Fq> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(match &self.tables {
            Some(t) => t.inv[a as usize],
            None => self.pow(a, u64::from(self.q()) - 2),
        })
    }

    pub fn div(&self, a: Fq, b: Fq) -> Result<Fq> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Fq, mut e: u64) -> Fq {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    fn digits(&self, mut a: Fq) -> Vec<u64> {
        let p = self.p();
        (0..self.s())
            .map(|_| {
                let d = a % p;
                a /= p;
                u64::from(d)
            })
            .collect()
    }

    fn undigits(&self, digits: &[u64]) -> Fq {
        let p = u64::from(self.p());
        digits.iter().rev().fold(0u64, |acc, &d| acc * p + d) as Fq
    }

    fn add_slow(&self, a: Fq, b: Fq) -> Fq {
        let p = u64::from(self.p());
        let sum: Vec<u64> = self
            .digits(a)
            .into_iter()
            .zip(self.digits(b))
            .map(|(x, y)| (x + y) % p)
            .collect();
        self.undigits(&sum)
    }

    fn neg_slow(&self, a: Fq) -> Fq {
        let p = u64::from(self.p());
        let digits: Vec<u64> = self.digits(a).into_iter().map(|x| (p - x) % p).collect();
        self.undigits(&digits)
    }

    fn mul_slow(&self, a: Fq, b: Fq) -> Fq {
        let p = u64::from(self.p());
        let s = self.s() as usize;
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u64; 2 * s - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        // Reduce by the monic modulus from the top down.
        let m = self.modulus.coeffs();
        for top in (s..prod.len()).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            for (i, &mi) in m[..s].iter().enumerate() {
                let idx = top - s + i;
                prod[idx] = (prod[idx] + (p - c) * u64::from(mi)) % p;
            }
            prod[top] = 0;
        }
        self.undigits(&prod[..s])
    }

    fn pow_slow(&self, a: Fq, mut e: u64) -> Fq {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_slow(acc, base);
            }
            base = self.mul_slow(base, base);
            e >>= 1;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn f4() -> BaseField {
        BaseField::with_modulus(2, FqPoly::from_coeffs(vec![1, 1, 1])).unwrap()
    }

    #[test]
    fn prime_power_validation() {
        assert_eq!(PrimePower::new(4, 1), Err(Error::NonPrime(4)));
        assert_eq!(PrimePower::new(1, 1), Err(Error::NonPrime(1)));
        assert_eq!(PrimePower::new(3, 2).unwrap().q, 9);
        assert!(PrimePower::new(2, 0).is_err());
    }

    #[test]
    fn f4_multiplication() {
        let k = f4();
        // t = 2, t + 1 = 3; t^2 = t + 1.
        assert_eq!(k.mul(2, 2), 3);
        assert_eq!(k.mul(2, 3), 1);
        assert_eq!(k.inv(3).unwrap(), 2);
        assert_eq!(k.add(2, 3), 1);
    }

    #[test]
    fn reducible_base_modulus_rejected() {
        let err = BaseField::with_modulus(2, FqPoly::from_coeffs(vec![1, 0, 1])).unwrap_err();
        assert!(matches!(err, Error::ReducibleModulus(_)));
        let err = BaseField::with_modulus(3, FqPoly::from_coeffs(vec![1, 0, 2])).unwrap_err();
        assert!(matches!(err, Error::NotMonic(_)));
    }

    #[test]
    fn field_axioms_small_fields() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let fields = [
            BaseField::prime(5).unwrap(),
            f4(),
            BaseField::random(3, 2, &mut rng).unwrap(),
            BaseField::random(2, 3, &mut rng).unwrap(),
        ];
        for k in &fields {
            for a in 0..k.q() {
                assert_eq!(k.add(a, k.neg(a)), 0);
                if a != 0 {
                    assert_eq!(k.mul(a, k.inv(a).unwrap()), 1);
                }
                for b in 0..k.q() {
                    assert_eq!(k.add(a, b), k.add(b, a));
                    assert_eq!(k.mul(a, b), k.mul(b, a));
                    for c in 0..k.q() {
                        assert_eq!(k.mul(a, k.add(b, c)), k.add(k.mul(a, b), k.mul(a, c)));
                        assert_eq!(k.mul(k.mul(a, b), c), k.mul(a, k.mul(b, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn table_and_slow_paths_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let k = BaseField::random(3, 3, &mut rng).unwrap();
        for a in 0..k.q() {
            for b in 0..k.q() {
                assert_eq!(k.mul(a, b), k.mul_slow(a, b));
            }
        }
    }
}
