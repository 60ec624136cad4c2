//! Exact arithmetic in `F_p` and `F_{p^s}` for field orders up to `2^16`.
//!
//! An extension field is represented by residues modulo a monic irreducible
//! polynomial over `F_p`. Elements are stored by their canonical integer code
//! `c_0 + c_1 p + ... + c_{s-1} p^{s-1}`, so equal elements are equal words and
//! can be hashed directly. Multiplication goes through exponent/logarithm
//! tables built once per field from a primitive element.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

use crate::poly;

/// Largest field order accepted by [`FiniteField::new`].
pub const MAX_ORDER: u32 = 1 << 16;

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("modulus {0:?} is reducible")]
    Reducible(Vec<u32>),
    #[error("modulus has degree {got}, expected {expected}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("modulus is not monic")]
    NotMonic,
    #[error("coefficient {0} is out of range")]
    CoefficientOutOfRange(u32),
    #[error("field order {p}^{s} exceeds 2^16")]
    TooLarge { p: u32, s: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("field characteristic is {0}, not 2")]
    CharNotTwo(u32),
    #[error("cannot parse `{0}`")]
    Parse(String),
}

/// An element of some [`FiniteField`], stored by its canonical code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElement(u32);

impl FieldElement {
    /// The canonical integer code `sum c_i p^i`.
    pub fn code(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

#[derive(Debug)]
struct Inner {
    p: u32,
    s: u32,
    q: u32,
    modulus: Vec<u32>,
    generator: u32,
    // exp has length 2(q-1) so that log a + log b never needs a reduction
    exp: Vec<u32>,
    log: Vec<u32>,
    sqrt: Vec<u32>,
    // char 2 only: a root z of z^2 + z = c, indexed by c
    artin_schreier: Vec<u32>,
}

/// A validated finite field `F_{p^s}`. Cheap to clone.
#[derive(Clone)]
pub struct FiniteField {
    inner: Arc<Inner>,
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p
                && self.inner.s == other.inner.s
                && self.inner.modulus == other.inner.modulus)
    }
}

impl Eq for FiniteField {}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteField({self})")
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` as `p^s`, if it is a prime power.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u64;
    while p * p <= q && q % p != 0 {
        p += 1;
    }
    if q % p != 0 {
        p = q;
    }
    let mut rest = q;
    let mut s = 0;
    while rest % p == 0 {
        rest /= p;
        s += 1;
    }
    (rest == 1).then_some((p as u32, s))
}

impl FiniteField {
    /// Builds `F_{p^s}`. With `modulus == None` and `s > 1` the smallest monic
    /// irreducible polynomial of degree `s` is used, where polynomials are
    /// ordered by their integer code (leading coefficients most significant).
    pub fn new(p: u32, s: u32, modulus: Option<&[u32]>) -> Result<Self, FieldError> {
        if !is_prime(p as u64) {
            return Err(FieldError::NotPrime(p));
        }
        if s == 0 {
            return Err(FieldError::DegreeMismatch {
                expected: 1,
                got: 0,
            });
        }
        let q = (p as u64).checked_pow(s).filter(|&q| q <= MAX_ORDER as u64);
        let Some(q) = q else {
            return Err(FieldError::TooLarge { p, s });
        };
        let q = q as u32;
        let modulus = if s == 1 {
            Vec::new()
        } else {
            match modulus {
                Some(m) => {
                    if m.len() != s as usize + 1 {
                        return Err(FieldError::DegreeMismatch {
                            expected: s as usize,
                            got: m.len().saturating_sub(1),
                        });
                    }
                    if let Some(&c) = m.iter().find(|&&c| c >= p) {
                        return Err(FieldError::CoefficientOutOfRange(c));
                    }
                    if m[s as usize] != 1 {
                        return Err(FieldError::NotMonic);
                    }
                    if !poly::is_irreducible_mod_p(m, p) {
                        return Err(FieldError::Reducible(m.to_vec()));
                    }
                    m.to_vec()
                }
                None => poly::smallest_irreducible(p, s as usize),
            }
        };
        Ok(Self::build(p, s, q, modulus))
    }

    pub fn prime(p: u32) -> Result<Self, FieldError> {
        Self::new(p, 1, None)
    }

    /// The field of order `q` with the default modulus.
    pub fn with_order(q: u64) -> Result<Self, FieldError> {
        let (p, s) = prime_power(q).ok_or(FieldError::NotPrimePower(q))?;
        Self::new(p, s, None)
    }

    fn build(p: u32, s: u32, q: u32, modulus: Vec<u32>) -> Self {
        let slow_mul = |a: u32, b: u32| -> u32 {
            if s == 1 {
                return ((a as u64 * b as u64) % p as u64) as u32;
            }
            let prod = poly::mul_mod(&decode(a, p, s), &decode(b, p, s), &modulus, p);
            encode(&prod, p)
        };

        // find a primitive element and record its powers
        let order = q - 1;
        let mut exp = Vec::with_capacity(2 * order as usize);
        let mut generator = 1;
        for g in 1..q {
            exp.clear();
            let mut x = 1u32;
            loop {
                exp.push(x);
                x = slow_mul(x, g);
                if x == 1 || exp.len() > order as usize {
                    break;
                }
            }
            if exp.len() == order as usize {
                generator = g;
                break;
            }
        }
        assert_eq!(exp.len(), order as usize, "no primitive element found");
        let mut log = vec![NONE; q as usize];
        for (i, &x) in exp.iter().enumerate() {
            log[x as usize] = i as u32;
        }
        exp.extend_from_within(..);

        let mut field = Self {
            inner: Arc::new(Inner {
                p,
                s,
                q,
                modulus,
                generator,
                exp,
                log,
                sqrt: Vec::new(),
                artin_schreier: Vec::new(),
            }),
        };

        let mut sqrt = vec![NONE; q as usize];
        let mut artin_schreier = Vec::new();
        for y in field.elements() {
            let sq = field.mul(y, y);
            if sqrt[sq.0 as usize] == NONE {
                sqrt[sq.0 as usize] = y.0;
            }
        }
        if p == 2 {
            artin_schreier = vec![NONE; q as usize];
            for z in field.elements() {
                let c = field.add(field.mul(z, z), z);
                if artin_schreier[c.0 as usize] == NONE {
                    artin_schreier[c.0 as usize] = z.0;
                }
            }
        }
        let inner = Arc::get_mut(&mut field.inner).expect("fresh field is uniquely owned");
        inner.sqrt = sqrt;
        inner.artin_schreier = artin_schreier;
        field
    }

    pub fn characteristic(&self) -> u32 {
        self.inner.p
    }

    pub fn degree(&self) -> u32 {
        self.inner.s
    }

    pub fn order(&self) -> u32 {
        self.inner.q
    }

    /// Modulus coefficients, little-endian; empty for a prime field.
    pub fn modulus(&self) -> &[u32] {
        &self.inner.modulus
    }

    /// The primitive element used to build the log tables.
    pub fn generator(&self) -> FieldElement {
        FieldElement(self.inner.generator)
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    /// Image of an integer under `Z -> F_p -> F_q`.
    pub fn from_int(&self, n: i64) -> FieldElement {
        FieldElement(n.rem_euclid(self.inner.p as i64) as u32)
    }

    /// The element with the given canonical code, if in range.
    pub fn element(&self, code: u32) -> Option<FieldElement> {
        (code < self.inner.q).then_some(FieldElement(code))
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement, FieldError> {
        if coeffs.len() != self.inner.s as usize {
            return Err(FieldError::DegreeMismatch {
                expected: self.inner.s as usize,
                got: coeffs.len(),
            });
        }
        if let Some(&c) = coeffs.iter().find(|&&c| c >= self.inner.p) {
            return Err(FieldError::CoefficientOutOfRange(c));
        }
        Ok(FieldElement(encode(coeffs, self.inner.p)))
    }

    /// Little-endian coefficients, always `s` of them.
    pub fn coeffs(&self, a: FieldElement) -> Vec<u32> {
        decode(a.0, self.inner.p, self.inner.s)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.inner.q).map(FieldElement)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let Inner { p, s, .. } = *self.inner;
        if p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        if s == 1 {
            let r = a.0 + b.0;
            return FieldElement(if r >= p { r - p } else { r });
        }
        let (mut x, mut y, mut place, mut r) = (a.0, b.0, 1, 0);
        for _ in 0..s {
            r += ((x % p + y % p) % p) * place;
            x /= p;
            y /= p;
            place *= p;
        }
        FieldElement(r)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let Inner { p, s, .. } = *self.inner;
        if p == 2 || a.0 == 0 {
            return a;
        }
        if s == 1 {
            return FieldElement(p - a.0);
        }
        let (mut x, mut place, mut r) = (a.0, 1, 0);
        for _ in 0..s {
            r += ((p - x % p) % p) * place;
            x /= p;
            place *= p;
        }
        FieldElement(r)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement(0);
        }
        let inner = &*self.inner;
        let l = inner.log[a.0 as usize] + inner.log[b.0 as usize];
        FieldElement(inner.exp[l as usize])
    }

    pub fn square(&self, a: FieldElement) -> FieldElement {
        self.mul(a, a)
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement, FieldError> {
        if a.0 == 0 {
            return Err(FieldError::DivisionByZero);
        }
        let inner = &*self.inner;
        let order = inner.q - 1;
        let l = (order - inner.log[a.0 as usize]) % order;
        Ok(FieldElement(inner.exp[l as usize]))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e` by square-and-multiply.
    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Some `b` with `b^2 = a`, if one exists.
    pub fn sqrt(&self, a: FieldElement) -> Option<FieldElement> {
        let r = self.inner.sqrt[a.0 as usize];
        (r != NONE).then_some(FieldElement(r))
    }

    /// In characteristic 2, some `z` with `z^2 + z = c`, if one exists.
    /// The other root is `z + 1`.
    pub fn artin_schreier_root(&self, c: FieldElement) -> Result<Option<FieldElement>, FieldError> {
        if self.inner.p != 2 {
            return Err(FieldError::CharNotTwo(self.inner.p));
        }
        let r = self.inner.artin_schreier[c.0 as usize];
        Ok((r != NONE).then_some(FieldElement(r)))
    }

    /// The unique square root in characteristic 2, `a^(2^(s-1))`.
    pub fn frobenius_sqrt(&self, a: FieldElement) -> Result<FieldElement, FieldError> {
        if self.inner.p != 2 {
            return Err(FieldError::CharNotTwo(self.inner.p));
        }
        let mut b = a;
        for _ in 1..self.inner.s {
            b = self.mul(b, b);
        }
        Ok(b)
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: FieldElement) -> Result<u32, FieldError> {
        if a.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let order = self.inner.q - 1;
        let l = self.inner.log[a.0 as usize];
        Ok(order / gcd(order, l))
    }

    /// Prime field: decimal residue. Extension: `[c0,c1,...]`.
    pub fn format_element(&self, a: FieldElement) -> String {
        if self.inner.s == 1 {
            return a.0.to_string();
        }
        let parts: Vec<String> = self.coeffs(a).iter().map(u32::to_string).collect();
        format!("[{}]", parts.join(","))
    }

    pub fn parse_element(&self, text: &str) -> Result<FieldElement, FieldError> {
        let text = text.trim();
        let bad = || FieldError::Parse(text.to_string());
        if self.inner.s == 1 {
            let v: u32 = text.parse().map_err(|_| bad())?;
            return self.element(v).ok_or_else(bad);
        }
        let body = text
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(bad)?;
        let coeffs = body
            .split(',')
            .map(|c| c.trim().parse::<u32>().map_err(|_| bad()))
            .collect::<Result<Vec<_>, _>>()?;
        self.from_coeffs(&coeffs)
    }
}

/// `p^s:modulus`, e.g. `19^1:` or `2^4:[1,1,0,0,1]`.
impl fmt::Display for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}:", self.inner.p, self.inner.s)?;
        if self.inner.s > 1 {
            let parts: Vec<String> = self.inner.modulus.iter().map(u32::to_string).collect();
            write!(f, "[{}]", parts.join(","))?;
        }
        Ok(())
    }
}

impl FromStr for FiniteField {
    type Err = FieldError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let bad = || FieldError::Parse(text.to_string());
        let (head, modulus) = text.trim().split_once(':').ok_or_else(bad)?;
        let (p, s) = head.split_once('^').ok_or_else(bad)?;
        let p: u32 = p.trim().parse().map_err(|_| bad())?;
        let s: u32 = s.trim().parse().map_err(|_| bad())?;
        let modulus = modulus.trim();
        if modulus.is_empty() {
            return if s == 1 {
                FiniteField::new(p, 1, None)
            } else {
                Err(bad())
            };
        }
        let body = modulus
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(bad)?;
        let coeffs = body
            .split(',')
            .map(|c| c.trim().parse::<u32>().map_err(|_| bad()))
            .collect::<Result<Vec<_>, _>>()?;
        FiniteField::new(p, s, Some(&coeffs))
    }
}

fn encode(coeffs: &[u32], p: u32) -> u32 {
    coeffs.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn decode(mut code: u32, p: u32, s: u32) -> Vec<u32> {
    (0..s)
        .map(|_| {
            let c = code % p;
            code /= p;
            c
        })
        .collect()
}

pub(crate) fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn f4() -> FiniteField {
        FiniteField::new(2, 2, Some(&[1, 1, 1])).unwrap()
    }

    #[test]
    fn prime_field_needs_no_modulus() {
        let f = FiniteField::new(19, 1, None).unwrap();
        assert_eq!(f.order(), 19);
        assert!(f.modulus().is_empty());
        assert_eq!(f.to_string(), "19^1:");
    }

    #[test]
    fn construction_errors() {
        assert_eq!(FiniteField::new(15, 1, None), Err(FieldError::NotPrime(15)));
        assert_eq!(
            FiniteField::new(2, 2, Some(&[1, 0, 1])),
            Err(FieldError::Reducible(vec![1, 0, 1]))
        );
        assert!(matches!(
            FiniteField::new(2, 3, Some(&[1, 1, 1])),
            Err(FieldError::DegreeMismatch { .. })
        ));
        assert_eq!(
            FiniteField::new(2, 2, Some(&[1, 1, 0])),
            Err(FieldError::NotMonic)
        );
        assert!(matches!(
            FiniteField::new(2, 17, None),
            Err(FieldError::TooLarge { .. })
        ));
        assert_eq!(
            FiniteField::with_order(12),
            Err(FieldError::NotPrimePower(12))
        );
    }

    #[test]
    fn f4_multiplication_reduces() {
        let f = f4();
        let x = f.from_coeffs(&[0, 1]).unwrap();
        assert_eq!(f.coeffs(f.mul(x, x)), vec![1, 1]);
    }

    #[test]
    fn f19_basics() {
        let f = FiniteField::prime(19).unwrap();
        let two = f.from_int(2);
        assert_eq!(f.inv(two).unwrap(), f.from_int(10));
        assert_eq!(f.pow(two, 18), f.one());
        assert_eq!(f.inv(f.zero()), Err(FieldError::DivisionByZero));
        assert_eq!(f.from_int(-1), f.from_int(18));
    }

    // brute-force irreducibility oracle: no factor of degree 1..=3 by exhaustive product
    fn sextic_is_irreducible_by_products(target: &[u32]) -> bool {
        let polys_of_degree = |d: usize| -> Vec<Vec<u32>> {
            (0..1u32 << d)
                .map(|c| {
                    let mut v: Vec<u32> = (0..d).map(|i| (c >> i) & 1).collect();
                    v.push(1);
                    v
                })
                .collect()
        };
        for d in 1..=3 {
            for a in polys_of_degree(d) {
                for b in polys_of_degree(6 - d) {
                    let mut prod = vec![0u32; 7];
                    for (i, &x) in a.iter().enumerate() {
                        for (j, &y) in b.iter().enumerate() {
                            prod[i + j] ^= x & y;
                        }
                    }
                    if prod == target {
                        return false;
                    }
                }
            }
        }
        true
    }

    #[test]
    fn default_f64_modulus_is_smallest_irreducible_sextic() {
        let f = FiniteField::new(2, 6, None).unwrap();
        let m = f.modulus().to_vec();
        assert_eq!(m, vec![1, 1, 0, 0, 0, 0, 1]);
        assert!(sextic_is_irreducible_by_products(&m));
        // every monic sextic with a smaller code factors
        let code = |v: &[u32]| v.iter().rev().fold(0, |a, &c| a * 2 + c);
        for c in 0..code(&m) {
            if c < 64 {
                continue;
            }
            let v: Vec<u32> = (0..7).map(|i| (c >> i) & 1).collect();
            assert!(!sextic_is_irreducible_by_products(&v), "{v:?}");
        }
    }

    #[test]
    fn table_multiplication_matches_polynomial_product() {
        for (p, s) in [(2, 4), (3, 2), (5, 2), (2, 3)] {
            let f = FiniteField::new(p, s, None).unwrap();
            for a in f.elements() {
                for b in f.elements() {
                    let direct = poly::mul_mod(&f.coeffs(a), &f.coeffs(b), f.modulus(), p);
                    assert_eq!(f.coeffs(f.mul(a, b)), direct);
                }
            }
        }
    }

    #[test]
    fn frobenius_sqrt_examples() {
        let f = f4();
        let x = f.from_coeffs(&[0, 1]).unwrap();
        let x1 = f.from_coeffs(&[1, 1]).unwrap();
        assert_eq!(f.frobenius_sqrt(x).unwrap(), x1);
        assert_eq!(f.frobenius_sqrt(f.one()).unwrap(), f.one());

        let f16 = FiniteField::new(2, 4, None).unwrap();
        let g = f16.generator();
        let root = f16.frobenius_sqrt(f16.pow(g, 5)).unwrap();
        assert_eq!(root, f16.pow(g, 10));
        assert_eq!(f16.square(root), f16.pow(g, 5));

        let f19 = FiniteField::prime(19).unwrap();
        assert_eq!(
            f19.frobenius_sqrt(f19.one()),
            Err(FieldError::CharNotTwo(19))
        );
    }

    #[test]
    fn frobenius_sqrt_squares_back_exhaustively() {
        for s in 1..=10 {
            let f = FiniteField::new(2, s, None).unwrap();
            for a in f.elements() {
                let b = f.frobenius_sqrt(a).unwrap();
                assert_eq!(f.square(b), a);
            }
        }
    }

    #[test]
    fn inverses_and_fixed_points() {
        for q in [2u64, 4, 9, 19, 25, 64, 125, 256, 1024, 4096, 1 << 16] {
            let f = FiniteField::with_order(q).unwrap();
            for a in f.elements() {
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
                }
                assert_eq!(f.pow(a, q), a);
            }
        }
    }

    #[test]
    fn ring_axioms_on_random_triples() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for q in [16u64, 25, 27, 49, 256, 19] {
            let f = FiniteField::with_order(q).unwrap();
            for _ in 0..10_000 {
                let mut pick = || f.element(rng.gen_range(0..f.order())).unwrap();
                let (a, b, c) = (pick(), pick(), pick());
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                assert_eq!(f.add(a, f.neg(a)), f.zero());
                assert_eq!(f.sub(f.add(a, b), b), a);
            }
        }
    }

    #[test]
    fn sqrt_table_and_artin_schreier() {
        let f = FiniteField::prime(11).unwrap();
        let squares = f.elements().filter(|&a| f.sqrt(a).is_some()).count();
        assert_eq!(squares, 6);
        for a in f.elements() {
            if let Some(r) = f.sqrt(a) {
                assert_eq!(f.square(r), a);
            }
        }
        let f8 = FiniteField::with_order(8).unwrap();
        let solvable = f8
            .elements()
            .filter(|&c| f8.artin_schreier_root(c).unwrap().is_some())
            .count();
        assert_eq!(solvable, 4);
        assert!(f.artin_schreier_root(f.one()).is_err());
    }

    #[test]
    fn text_forms() {
        let f = FiniteField::new(2, 6, None).unwrap();
        assert_eq!(f.to_string(), "2^6:[1,1,0,0,0,0,1]");
        let back: FiniteField = f.to_string().parse().unwrap();
        assert_eq!(back, f);
        let a = f.from_coeffs(&[1, 0, 1, 0, 0, 1]).unwrap();
        assert_eq!(f.format_element(a), "[1,0,1,0,0,1]");
        assert_eq!(f.parse_element("[1,0,1,0,0,1]").unwrap(), a);
        assert!(f.parse_element("[1,0]").is_err());
        let f5: FiniteField = "5^1:".parse().unwrap();
        assert_eq!(f5.parse_element("4").unwrap(), f5.from_int(4));
        assert!(f5.parse_element("5").is_err());
        assert!("2^4:[1,0,0,0,0]".parse::<FiniteField>().is_err());
    }
}
