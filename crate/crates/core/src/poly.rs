//! Small dense polynomial helpers.
//!
//! Two flavours: raw coefficient vectors over `F_p` (used while a field is
//! still being built) and vectors of [`FieldElement`] over a finished field.
//! All coefficient lists are little-endian.

use crate::field::{FieldElement, FiniteField};

fn trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn inv_mod_p(a: u32, p: u32) -> u32 {
    // p is prime and small, Fermat is fine
    let (mut base, mut e, mut acc) = (a as u64 % p as u64, p as u64 - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    acc as u32
}

/// Remainder of `a` modulo `b` over `F_p`; `b` must be nonzero.
pub(crate) fn rem_mod_p(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    trim(&mut r);
    let mut b = b.to_vec();
    trim(&mut b);
    let db = b.len() - 1;
    let lead_inv = inv_mod_p(b[db], p);
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let factor = (*r.last().unwrap() as u64 * lead_inv as u64 % p as u64) as u32;
        for (i, &c) in b.iter().enumerate() {
            let sub = (factor as u64 * c as u64 % p as u64) as u32;
            r[shift + i] = (r[shift + i] + p - sub) % p;
        }
        trim(&mut r);
    }
    r
}

/// `a * b mod modulus` over `F_p`, padded to `deg(modulus)` coefficients.
pub(crate) fn mul_mod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let mut prod = vec![0u32; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64) % p as u64) as u32;
        }
    }
    let s = modulus.len() - 1;
    let mut r = rem_mod_p(&prod, modulus, p);
    r.resize(s, 0);
    r
}

fn monic_of_degree(code: u64, degree: usize, p: u32) -> Vec<u32> {
    let mut c = code;
    let mut v: Vec<u32> = (0..degree)
        .map(|_| {
            let d = (c % p as u64) as u32;
            c /= p as u64;
            d
        })
        .collect();
    v.push(1);
    v
}

/// Irreducibility over `F_p`: no roots, and no monic factor of degree
/// `2..=deg/2` by trial division.
pub(crate) fn is_irreducible_mod_p(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    if deg <= 1 {
        return deg == 1;
    }
    let has_root = (0..p).any(|x| {
        f.iter()
            .rev()
            .fold(0u64, |acc, &c| (acc * x as u64 + c as u64) % p as u64)
            == 0
    });
    if has_root {
        return false;
    }
    for d in 2..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for code in 0..count {
            let g = monic_of_degree(code, d, p);
            if rem_mod_p(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// The monic irreducible polynomial of degree `s` with the smallest code
/// `sum c_i p^i`.
pub(crate) fn smallest_irreducible(p: u32, s: usize) -> Vec<u32> {
    let count = (p as u64).pow(s as u32);
    (0..count)
        .map(|code| monic_of_degree(code, s, p))
        .find(|f| is_irreducible_mod_p(f, p))
        .expect("irreducible polynomials exist in every degree")
}

/// Polynomial arithmetic over a finished [`FiniteField`].
pub mod field_poly {
    use super::*;

    pub fn trim(f: &FiniteField, v: &mut Vec<FieldElement>) {
        let _ = f;
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
    }

    pub fn eval(f: &FiniteField, coeffs: &[FieldElement], x: FieldElement) -> FieldElement {
        coeffs
            .iter()
            .rev()
            .fold(f.zero(), |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn derivative(f: &FiniteField, coeffs: &[FieldElement]) -> Vec<FieldElement> {
        let mut d: Vec<FieldElement> = coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.mul(f.from_int(i as i64), c))
            .collect();
        trim(f, &mut d);
        d
    }

    pub fn add(f: &FiniteField, a: &[FieldElement], b: &[FieldElement]) -> Vec<FieldElement> {
        let n = a.len().max(b.len());
        let mut r: Vec<FieldElement> = (0..n)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or_default();
                let y = b.get(i).copied().unwrap_or_default();
                f.add(x, y)
            })
            .collect();
        trim(f, &mut r);
        r
    }

    pub fn scale(f: &FiniteField, a: &[FieldElement], c: FieldElement) -> Vec<FieldElement> {
        let mut r: Vec<FieldElement> = a.iter().map(|&x| f.mul(x, c)).collect();
        trim(f, &mut r);
        r
    }

    pub fn mul(f: &FiniteField, a: &[FieldElement], b: &[FieldElement]) -> Vec<FieldElement> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut r = vec![f.zero(); a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                r[i + j] = f.add(r[i + j], f.mul(x, y));
            }
        }
        trim(f, &mut r);
        r
    }

    pub fn rem(f: &FiniteField, a: &[FieldElement], b: &[FieldElement]) -> Vec<FieldElement> {
        let mut r = a.to_vec();
        trim(f, &mut r);
        let mut b = b.to_vec();
        trim(f, &mut b);
        assert!(!b.is_empty(), "polynomial division by zero");
        let db = b.len() - 1;
        let lead_inv = f.inv(b[db]).expect("nonzero leading coefficient");
        while r.len() > db {
            let shift = r.len() - 1 - db;
            let factor = f.mul(*r.last().unwrap(), lead_inv);
            for (i, &c) in b.iter().enumerate() {
                r[shift + i] = f.sub(r[shift + i], f.mul(factor, c));
            }
            trim(f, &mut r);
        }
        r
    }

    /// Greatest common divisor, normalized to be monic (empty for `gcd(0,0)`).
    pub fn gcd(f: &FiniteField, a: &[FieldElement], b: &[FieldElement]) -> Vec<FieldElement> {
        let mut x = a.to_vec();
        trim(f, &mut x);
        let mut y = b.to_vec();
        trim(f, &mut y);
        while !y.is_empty() {
            let r = rem(f, &x, &y);
            x = y;
            y = r;
        }
        if let Some(&lead) = x.last() {
            let li = f.inv(lead).expect("nonzero");
            x = scale(f, &x, li);
        }
        x
    }

    pub fn degree(coeffs: &[FieldElement]) -> Option<usize> {
        coeffs.iter().rposition(|c| !c.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_irreducibles() {
        assert_eq!(smallest_irreducible(2, 2), vec![1, 1, 1]);
        assert_eq!(smallest_irreducible(2, 4), vec![1, 1, 0, 0, 1]);
        assert_eq!(smallest_irreducible(3, 2), vec![1, 0, 1]);
        assert!(!is_irreducible_mod_p(&[1, 0, 1], 2));
        assert!(!is_irreducible_mod_p(&[1, 0, 1, 0, 1], 2)); // (x^2+x+1)^2
        assert!(is_irreducible_mod_p(&[1, 1, 0, 1, 1, 0, 1], 2));
    }

    #[test]
    fn counts_of_irreducibles_match_necklace_formula() {
        // number of monic irreducibles of degree n over F_2: 1,1,2,3,6,9
        let expected = [2, 1, 2, 3, 6, 9];
        for (i, &want) in expected.iter().enumerate() {
            let n = i + 1;
            let count = (0..1u64 << n)
                .filter(|&c| is_irreducible_mod_p(&monic_of_degree(c, n, 2), 2))
                .count();
            assert_eq!(count, want, "degree {n}");
        }
    }

    #[test]
    fn field_gcd() {
        let f = FiniteField::prime(11).unwrap();
        let e = |v: &[i64]| v.iter().map(|&c| f.from_int(c)).collect::<Vec<_>>();
        // (x-1)(x-2) and (x-1)(x+3)
        let a = e(&[2, -3, 1]);
        let b = e(&[-3, 2, 1]);
        assert_eq!(field_poly::gcd(&f, &a, &b), e(&[-1, 1]));
        let fx = e(&[1, 0, 0, 0, 0, 1]);
        let d = field_poly::derivative(&f, &fx);
        assert_eq!(field_poly::gcd(&f, &fx, &d), e(&[1]));
    }
}
