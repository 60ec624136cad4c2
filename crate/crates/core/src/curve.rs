//! Plane models of curves over a [`FiniteField`]: general Weierstrass cubics
//! (genus 1) and `y^2 + h(x) y = f(x)` with `deg f = 5` (genus 2), both with a
//! single point at infinity.

use std::fmt;

use thiserror::Error;

use crate::field::{FieldElement, FieldError, FiniteField};
use crate::poly::field_poly;

/// Genus-2 enumeration is capped at this field order.
pub const MAX_GENUS2_ORDER: u32 = 1 << 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("curve is singular")]
    Singular,
    #[error("bad curve model: {0}")]
    BadModel(String),
    #[error("point {0} is not on the curve")]
    PointNotOnCurve(String),
    #[error("field of order {0} is too large for point enumeration")]
    TooLarge(u32),
    #[error("the group law is only available on genus-1 curves")]
    NotElliptic,
    #[error("cannot parse `{0}`")]
    Parse(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// A rational point. `Infinity` sorts first; affine points sort by the codes
/// of `(x, y)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CurvePoint {
    Infinity,
    Affine { x: FieldElement, y: FieldElement },
}

impl CurvePoint {
    pub fn is_infinity(&self) -> bool {
        matches!(self, CurvePoint::Infinity)
    }

    pub fn coords(&self) -> Option<(FieldElement, FieldElement)> {
        match *self {
            CurvePoint::Infinity => None,
            CurvePoint::Affine { x, y } => Some((x, y)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CurveModel {
    /// `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6`
    Weierstrass {
        a1: FieldElement,
        a3: FieldElement,
        a2: FieldElement,
        a4: FieldElement,
        a6: FieldElement,
    },
    /// `y^2 + h(x) y = f(x)`, coefficients little-endian, `f` has 6 and `h` 3.
    Hyperelliptic {
        f: Vec<FieldElement>,
        h: Vec<FieldElement>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Curve {
    field: FiniteField,
    model: CurveModel,
}

impl Curve {
    /// Genus-1 curve from `[a1, a3, a2, a4, a6]`.
    pub fn weierstrass(field: &FiniteField, a: [FieldElement; 5]) -> Result<Self, CurveError> {
        let [a1, a3, a2, a4, a6] = a;
        let curve = Self {
            field: field.clone(),
            model: CurveModel::Weierstrass { a1, a3, a2, a4, a6 },
        };
        if curve.discriminant().is_zero() {
            return Err(CurveError::Singular);
        }
        Ok(curve)
    }

    /// `y^2 = x^3 + a4 x + a6`, integer coefficients reduced into the field.
    pub fn short(field: &FiniteField, a4: i64, a6: i64) -> Result<Self, CurveError> {
        let z = field.zero();
        Self::weierstrass(field, [z, z, z, field.from_int(a4), field.from_int(a6)])
    }

    /// Genus-2 curve `y^2 + h(x) y = f(x)`; `f` must have degree exactly 5 and
    /// `h` degree at most 2.
    pub fn hyperelliptic(
        field: &FiniteField,
        f: &[FieldElement],
        h: &[FieldElement],
    ) -> Result<Self, CurveError> {
        if field_poly::degree(f) != Some(5) {
            return Err(CurveError::BadModel("f must have degree 5".into()));
        }
        if field_poly::degree(h).is_some_and(|d| d > 2) {
            return Err(CurveError::BadModel("h must have degree at most 2".into()));
        }
        let mut fv = f.to_vec();
        fv.resize(6, field.zero());
        let mut hv = h.to_vec();
        hv.truncate(3);
        hv.resize(3, field.zero());

        let singular = if field.characteristic() == 2 {
            if field_poly::degree(&hv).is_none() {
                true
            } else {
                let df = field_poly::derivative(field, &fv);
                let dh = field_poly::derivative(field, &hv);
                let lhs = field_poly::mul(field, &df, &df);
                let rhs = field_poly::mul(field, &field_poly::mul(field, &dh, &dh), &fv);
                let cond = field_poly::add(field, &lhs, &rhs);
                field_poly::degree(&field_poly::gcd(field, &hv, &cond)).is_some_and(|d| d > 0)
            }
        } else {
            // complete the square: (y + h/2)^2 = f + h^2/4
            let quarter = field.inv(field.from_int(4))?;
            let h2 = field_poly::mul(field, &hv, &hv);
            let big_f = field_poly::add(field, &fv, &field_poly::scale(field, &h2, quarter));
            let d = field_poly::derivative(field, &big_f);
            field_poly::degree(&field_poly::gcd(field, &big_f, &d)).is_some_and(|d| d > 0)
        };
        if singular {
            return Err(CurveError::Singular);
        }
        Ok(Self {
            field: field.clone(),
            model: CurveModel::Hyperelliptic { f: fv, h: hv },
        })
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn model(&self) -> &CurveModel {
        &self.model
    }

    pub fn genus(&self) -> u32 {
        match self.model {
            CurveModel::Weierstrass { .. } => 1,
            CurveModel::Hyperelliptic { .. } => 2,
        }
    }

    /// The Weierstrass discriminant; zero for genus-2 models.
    pub fn discriminant(&self) -> FieldElement {
        let f = &self.field;
        let CurveModel::Weierstrass { a1, a3, a2, a4, a6 } = self.model else {
            return f.zero();
        };
        let c = |n: i64| f.from_int(n);
        let m = |a, b| f.mul(a, b);
        let b2 = f.add(m(a1, a1), m(c(4), a2));
        let b4 = f.add(m(c(2), a4), m(a1, a3));
        let b6 = f.add(m(a3, a3), m(c(4), a6));
        let b8 = {
            let t1 = m(m(a1, a1), a6);
            let t2 = m(c(4), m(a2, a6));
            let t3 = m(a1, m(a3, a4));
            let t4 = m(a2, m(a3, a3));
            let t5 = m(a4, a4);
            f.sub(f.add(f.sub(f.add(t1, t2), t3), t4), t5)
        };
        let t1 = f.neg(m(m(b2, b2), b8));
        let t2 = m(c(8), m(b4, m(b4, b4)));
        let t3 = m(c(27), m(b6, b6));
        let t4 = m(c(9), m(b2, m(b4, b6)));
        f.add(f.sub(f.sub(t1, t2), t3), t4)
    }

    /// `(B(x), C(x))` such that points over `x` solve `y^2 + B y = C`.
    fn fibre_coefficients(&self, x: FieldElement) -> (FieldElement, FieldElement) {
        let f = &self.field;
        match &self.model {
            CurveModel::Weierstrass { a1, a3, a2, a4, a6 } => {
                let b = f.add(f.mul(*a1, x), *a3);
                let x2 = f.mul(x, x);
                let c = f.add(
                    f.add(f.mul(x2, x), f.mul(*a2, x2)),
                    f.add(f.mul(*a4, x), *a6),
                );
                (b, c)
            }
            CurveModel::Hyperelliptic { f: fc, h } => {
                (field_poly::eval(f, h, x), field_poly::eval(f, fc, x))
            }
        }
    }

    /// Roots of `y^2 + b y = c`, at most two, in increasing code order.
    fn solve_fibre(&self, b: FieldElement, c: FieldElement) -> ([FieldElement; 2], usize) {
        let f = &self.field;
        let z = f.zero();
        let mut roots = if f.characteristic() == 2 {
            if b.is_zero() {
                let r = f
                    .sqrt(c)
                    .expect("every element is a square in characteristic 2");
                ([r, z], 1)
            } else {
                let b2 = f.mul(b, b);
                let t = f.div(c, b2).expect("b is nonzero");
                match f.artin_schreier_root(t).expect("characteristic 2") {
                    Some(r) => ([f.mul(b, r), f.mul(b, f.add(r, f.one()))], 2),
                    None => ([z, z], 0),
                }
            }
        } else {
            let disc = f.add(f.mul(b, b), f.mul(f.from_int(4), c));
            let half = f.inv(f.from_int(2)).expect("odd characteristic");
            let minus_b = f.neg(b);
            if disc.is_zero() {
                ([f.mul(minus_b, half), z], 1)
            } else {
                match f.sqrt(disc) {
                    Some(r) => (
                        [
                            f.mul(f.add(minus_b, r), half),
                            f.mul(f.sub(minus_b, r), half),
                        ],
                        2,
                    ),
                    None => ([z, z], 0),
                }
            }
        };
        if roots.1 == 2 && roots.0[1] < roots.0[0] {
            roots.0.swap(0, 1);
        }
        roots
    }

    fn check_size(&self) -> Result<(), CurveError> {
        if self.genus() == 2 && self.field.order() > MAX_GENUS2_ORDER {
            return Err(CurveError::TooLarge(self.field.order()));
        }
        Ok(())
    }

    /// All rational points, the point at infinity first, then affine points
    /// sorted by `(x, y)` codes.
    pub fn enumerate_points(&self) -> Result<Vec<CurvePoint>, CurveError> {
        self.check_size()?;
        let mut pts = vec![CurvePoint::Infinity];
        for x in self.field.elements() {
            let (b, c) = self.fibre_coefficients(x);
            let (roots, count) = self.solve_fibre(b, c);
            for &y in &roots[..count] {
                pts.push(CurvePoint::Affine { x, y });
            }
        }
        Ok(pts)
    }

    /// `|C(F_q)|`, the point at infinity included.
    pub fn count_points(&self) -> Result<u64, CurveError> {
        self.check_size()?;
        let mut n = 1u64;
        for x in self.field.elements() {
            let (b, c) = self.fibre_coefficients(x);
            n += self.solve_fibre(b, c).1 as u64;
        }
        Ok(n)
    }

    pub fn contains(&self, p: &CurvePoint) -> bool {
        match *p {
            CurvePoint::Infinity => true,
            CurvePoint::Affine { x, y } => {
                let f = &self.field;
                let (b, c) = self.fibre_coefficients(x);
                f.add(f.mul(y, y), f.mul(b, y)) == c
            }
        }
    }

    fn ensure_on_curve(&self, p: &CurvePoint) -> Result<(), CurveError> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(CurveError::PointNotOnCurve(self.format_point(p)))
        }
    }

    fn coefficients(&self) -> Result<[FieldElement; 5], CurveError> {
        match self.model {
            CurveModel::Weierstrass { a1, a3, a2, a4, a6 } => Ok([a1, a3, a2, a4, a6]),
            CurveModel::Hyperelliptic { .. } => Err(CurveError::NotElliptic),
        }
    }

    /// `-(x, y) = (x, -y - a1 x - a3)`.
    pub fn neg(&self, p: &CurvePoint) -> Result<CurvePoint, CurveError> {
        self.coefficients()?;
        self.ensure_on_curve(p)?;
        Ok(self.neg_raw(p))
    }

    /// Chord-and-tangent addition on the general Weierstrass model.
    pub fn add(&self, p: &CurvePoint, q: &CurvePoint) -> Result<CurvePoint, CurveError> {
        self.coefficients()?;
        self.ensure_on_curve(p)?;
        self.ensure_on_curve(q)?;
        Ok(self.add_raw(p, q))
    }

    /// `n P` by double-and-add; negative `n` uses `-P`.
    pub fn scalar_mul(&self, p: &CurvePoint, n: i64) -> Result<CurvePoint, CurveError> {
        self.coefficients()?;
        self.ensure_on_curve(p)?;
        Ok(self.mul_raw(p, n))
    }

    /// Least `t >= 1` with `t P = O`, by repeated addition.
    pub fn order(&self, p: &CurvePoint) -> Result<u64, CurveError> {
        self.coefficients()?;
        self.ensure_on_curve(p)?;
        let mut acc = *p;
        let mut t = 1u64;
        while !acc.is_infinity() {
            acc = self.add_raw(&acc, p);
            t += 1;
        }
        Ok(t)
    }

    pub(crate) fn neg_raw(&self, p: &CurvePoint) -> CurvePoint {
        let f = &self.field;
        let [a1, a3, ..] = self.coefficients().expect("genus 1");
        match *p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { x, y } => CurvePoint::Affine {
                x,
                y: f.neg(f.add(f.add(y, f.mul(a1, x)), a3)),
            },
        }
    }

    pub(crate) fn add_raw(&self, p: &CurvePoint, q: &CurvePoint) -> CurvePoint {
        let f = &self.field;
        let [a1, a3, a2, a4, a6] = self.coefficients().expect("genus 1");
        let (x1, y1) = match p.coords() {
            None => return *q,
            Some(c) => c,
        };
        let (x2, y2) = match q.coords() {
            None => return *p,
            Some(c) => c,
        };
        let (lambda, nu) = if x1 != x2 {
            let dx = f.inv(f.sub(x2, x1)).expect("distinct x");
            let lambda = f.mul(f.sub(y2, y1), dx);
            let nu = f.mul(f.sub(f.mul(y1, x2), f.mul(y2, x1)), dx);
            (lambda, nu)
        } else {
            // same x: either Q = -P or Q = P
            let denom = f.add(f.add(f.mul(f.from_int(2), y1), f.mul(a1, x1)), a3);
            if y1 != y2 || denom.is_zero() {
                return CurvePoint::Infinity;
            }
            let inv = f.inv(denom).expect("nonzero");
            let x1sq = f.mul(x1, x1);
            let num_l = f.sub(
                f.add(
                    f.add(
                        f.mul(f.from_int(3), x1sq),
                        f.mul(f.from_int(2), f.mul(a2, x1)),
                    ),
                    a4,
                ),
                f.mul(a1, y1),
            );
            let num_n = f.sub(
                f.add(
                    f.add(f.neg(f.mul(x1sq, x1)), f.mul(a4, x1)),
                    f.mul(f.from_int(2), a6),
                ),
                f.mul(a3, y1),
            );
            (f.mul(num_l, inv), f.mul(num_n, inv))
        };
        let x3 = f.sub(
            f.sub(
                f.sub(f.add(f.mul(lambda, lambda), f.mul(a1, lambda)), a2),
                x1,
            ),
            x2,
        );
        let y3 = f.sub(f.neg(f.add(f.mul(f.add(lambda, a1), x3), nu)), a3);
        CurvePoint::Affine { x: x3, y: y3 }
    }

    pub(crate) fn mul_raw(&self, p: &CurvePoint, n: i64) -> CurvePoint {
        let base = if n < 0 { self.neg_raw(p) } else { *p };
        let mut k = n.unsigned_abs();
        let mut acc = CurvePoint::Infinity;
        let mut dbl = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add_raw(&acc, &dbl);
            }
            k >>= 1;
            if k > 0 {
                dbl = self.add_raw(&dbl, &dbl);
            }
        }
        acc
    }

    /// Order of `p` given a known multiple `n` of it (e.g. the group order).
    pub(crate) fn order_dividing(&self, p: &CurvePoint, n: u64, factors: &[(u64, u32)]) -> u64 {
        let mut ord = n;
        for &(l, _) in factors {
            while ord % l == 0 && self.mul_raw(p, (ord / l) as i64).is_infinity() {
                ord /= l;
            }
        }
        ord
    }

    /// `inf` or `(x,y)`.
    pub fn format_point(&self, p: &CurvePoint) -> String {
        match *p {
            CurvePoint::Infinity => "inf".to_string(),
            CurvePoint::Affine { x, y } => format!(
                "({},{})",
                self.field.format_element(x),
                self.field.format_element(y)
            ),
        }
    }

    /// Parses a point and checks that it lies on the curve.
    pub fn parse_point(&self, text: &str) -> Result<CurvePoint, CurveError> {
        let t = text.trim();
        if t == "inf" {
            return Ok(CurvePoint::Infinity);
        }
        let body = t
            .strip_prefix('(')
            .and_then(|b| b.strip_suffix(')'))
            .ok_or_else(|| CurveError::Parse(t.to_string()))?;
        let parts = split_top_level(body, ',');
        if parts.len() != 2 {
            return Err(CurveError::Parse(t.to_string()));
        }
        let x = self.field.parse_element(parts[0])?;
        let y = self.field.parse_element(parts[1])?;
        let p = CurvePoint::Affine { x, y };
        self.ensure_on_curve(&p)?;
        Ok(p)
    }

    /// `g1:a1,a3,a2,a4,a6` or `g2:f0,...,f5;h0,h1,h2` (little-endian).
    pub fn parse(field: &FiniteField, text: &str) -> Result<Self, CurveError> {
        let t = text.trim();
        let bad = || CurveError::Parse(t.to_string());
        let elems = |s: &str| -> Result<Vec<FieldElement>, CurveError> {
            if s.trim().is_empty() {
                return Ok(Vec::new());
            }
            split_top_level(s, ',')
                .into_iter()
                .map(|e| field.parse_element(e).map_err(CurveError::from))
                .collect()
        };
        if let Some(rest) = t.strip_prefix("g1:") {
            let a = elems(rest)?;
            let a: [FieldElement; 5] = a.try_into().map_err(|_| bad())?;
            Curve::weierstrass(field, a)
        } else if let Some(rest) = t.strip_prefix("g2:") {
            let (fs, hs) = rest.split_once(';').unwrap_or((rest, ""));
            Curve::hyperelliptic(field, &elems(fs)?, &elems(hs)?)
        } else {
            Err(bad())
        }
    }
}

impl fmt::Display for Curve {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        let f = &self.field;
        let join = |v: &[FieldElement]| {
            v.iter()
                .map(|&e| f.format_element(e))
                .collect::<Vec<_>>()
                .join(",")
        };
        match &self.model {
            CurveModel::Weierstrass { a1, a3, a2, a4, a6 } => {
                write!(fm, "g1:{}", join(&[*a1, *a3, *a2, *a4, *a6]))
            }
            CurveModel::Hyperelliptic { f: fc, h } => write!(fm, "g2:{};{}", join(fc), join(h)),
        }
    }
}

/// Splits on `sep` outside square brackets.
pub(crate) fn split_top_level(text: &str, sep: char) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in text.char_indices() {
        match ch {
            '[' | '(' => depth += 1,
            ']' | ')' => depth -= 1,
            c if c == sep && depth == 0 => {
                parts.push(text[start..i].trim());
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    parts.push(text[start..].trim());
    parts
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u32) -> FiniteField {
        FiniteField::prime(p).unwrap()
    }

    fn pt(f: &FiniteField, x: i64, y: i64) -> CurvePoint {
        CurvePoint::Affine {
            x: f.from_int(x),
            y: f.from_int(y),
        }
    }

    #[test]
    fn x3_plus_1_over_f5() {
        let f = fp(5);
        let e = Curve::short(&f, 0, 1).unwrap();
        let pts = e.enumerate_points().unwrap();
        let expected = vec![
            CurvePoint::Infinity,
            pt(&f, 0, 1),
            pt(&f, 0, 4),
            pt(&f, 2, 2),
            pt(&f, 2, 3),
            pt(&f, 4, 0),
        ];
        assert_eq!(pts, expected);
        assert_eq!(e.count_points().unwrap(), 6);

        assert_eq!(
            e.add(&pt(&f, 0, 1), &pt(&f, 0, 4)).unwrap(),
            CurvePoint::Infinity
        );
        assert_eq!(
            e.add(&pt(&f, 2, 2), &CurvePoint::Infinity).unwrap(),
            pt(&f, 2, 2)
        );
        assert_eq!(e.order(&pt(&f, 4, 0)).unwrap(), 2);
        assert_eq!(e.order(&pt(&f, 2, 2)).unwrap(), 6);
        assert!(e.add(&pt(&f, 1, 1), &pt(&f, 0, 1)).is_err());
    }

    #[test]
    fn cusp_is_singular() {
        let f = fp(5);
        assert_eq!(Curve::short(&f, 0, 0), Err(CurveError::Singular));
    }

    #[test]
    fn x3_minus_x_over_f3() {
        let f = fp(3);
        let e = Curve::short(&f, -1, 0).unwrap();
        let pts = e.enumerate_points().unwrap();
        assert_eq!(
            pts,
            vec![
                CurvePoint::Infinity,
                pt(&f, 0, 0),
                pt(&f, 1, 0),
                pt(&f, 2, 0)
            ]
        );
        for p in &pts[1..] {
            assert_eq!(e.order(p).unwrap(), 2);
        }
    }

    // brute-force count over all (x, y) pairs
    fn brute_count(e: &Curve) -> u64 {
        let f = e.field();
        let mut n = 1;
        for x in f.elements() {
            for y in f.elements() {
                if e.contains(&CurvePoint::Affine { x, y }) {
                    n += 1;
                }
            }
        }
        n
    }

    #[test]
    fn enumeration_matches_brute_force_in_every_characteristic() {
        for q in [2u64, 3, 4, 8, 9, 16, 25, 27] {
            let f = FiniteField::with_order(q).unwrap();
            let g = f.generator();
            let coeff_sets = [
                [f.one(), f.zero(), f.zero(), f.zero(), f.one()],
                [f.zero(), f.one(), f.zero(), f.zero(), f.zero()],
                [f.one(), g, g, f.zero(), g],
                [f.zero(), f.zero(), f.zero(), f.one(), g],
            ];
            for a in coeff_sets {
                if let Ok(e) = Curve::weierstrass(&f, a) {
                    let pts = e.enumerate_points().unwrap();
                    assert_eq!(pts.len() as u64, brute_count(&e), "{e} over F_{q}");
                    assert_eq!(e.count_points().unwrap(), pts.len() as u64);
                    assert!(pts.iter().all(|p| e.contains(p)));
                }
            }
        }
    }

    #[test]
    fn group_axioms_exhaustively_on_small_curves() {
        for q in [7u64, 8, 16, 25, 64] {
            let f = FiniteField::with_order(q).unwrap();
            let g = f.generator();
            let e = Curve::weierstrass(&f, [f.one(), f.zero(), g, f.zero(), g])
                .or_else(|_| Curve::weierstrass(&f, [f.zero(), f.one(), f.zero(), g, f.one()]))
                .unwrap();
            let pts = e.enumerate_points().unwrap();
            let n = pts.len() as i64;
            let set: std::collections::HashSet<_> = pts.iter().copied().collect();
            for p in &pts {
                let np = e.neg(p).unwrap();
                assert_eq!(e.add(p, &np).unwrap(), CurvePoint::Infinity);
                assert_eq!(e.scalar_mul(p, n).unwrap(), CurvePoint::Infinity);
                for r in &pts {
                    let s = e.add(p, r).unwrap();
                    assert!(set.contains(&s));
                    assert_eq!(s, e.add(r, p).unwrap());
                }
            }
            // associativity on a sample
            for a in pts.iter().step_by(3) {
                for b in pts.iter().step_by(5) {
                    for c in pts.iter().step_by(7) {
                        let l = e.add(&e.add(a, b).unwrap(), c).unwrap();
                        let r = e.add(a, &e.add(b, c).unwrap()).unwrap();
                        assert_eq!(l, r);
                    }
                }
            }
        }
    }

    #[test]
    fn hasse_bound_holds() {
        for q in [11u64, 16, 27, 49, 128, 1024] {
            let f = FiniteField::with_order(q).unwrap();
            for c in 1..20u32 {
                let a6 = f.element(c % f.order()).unwrap();
                let a4 = f.element((c * 7 + 3) % f.order()).unwrap();
                let z = f.zero();
                if let Ok(e) = Curve::weierstrass(&f, [f.one(), z, z, a4, a6]) {
                    let n = e.count_points().unwrap() as i64;
                    let t = (q as i64 + 1 - n).pow(2);
                    assert!(t <= 4 * q as i64, "{e}: N={n}");
                }
            }
        }
    }

    #[test]
    fn genus_two_model() {
        let f = fp(11);
        let c = |v: &[i64]| v.iter().map(|&x| f.from_int(x)).collect::<Vec<_>>();
        let x = Curve::hyperelliptic(&f, &c(&[1, 0, 0, 0, 0, 1]), &[]).unwrap();
        assert_eq!(x.genus(), 2);
        let pts = x.enumerate_points().unwrap();
        assert_eq!(pts.len() as u64, brute_count(&x));
        let n = pts.len() as f64;
        assert!((n - 12.0).abs() <= 4.0 * 11f64.sqrt());
        assert!(matches!(
            Curve::hyperelliptic(&f, &c(&[1, 0, 0, 1]), &[]),
            Err(CurveError::BadModel(_))
        ));
        // (x-1)^2 (x^3+1) has a repeated root
        let sq = field_poly::mul(&f, &c(&[1, -2, 1]), &c(&[1, 0, 0, 1]));
        assert_eq!(
            Curve::hyperelliptic(&f, &sq, &[]),
            Err(CurveError::Singular)
        );
        assert_eq!(x.add(&pts[0], &pts[0]), Err(CurveError::NotElliptic));
    }

    #[test]
    fn genus_two_in_characteristic_two() {
        let f = FiniteField::with_order(8).unwrap();
        let one = f.one();
        let z = f.zero();
        let fx = [one, z, z, z, z, one];
        assert_eq!(
            Curve::hyperelliptic(&f, &fx, &[]),
            Err(CurveError::Singular)
        );
        let x = Curve::hyperelliptic(&f, &fx, &[one]).unwrap();
        let pts = x.enumerate_points().unwrap();
        assert_eq!(pts.len() as u64, brute_count(&x));
        let big = FiniteField::with_order(1 << 13).unwrap();
        let bx =
            Curve::hyperelliptic(&big, &[big.one(), z, z, z, z, big.one()], &[big.one()]).unwrap();
        assert_eq!(bx.enumerate_points(), Err(CurveError::TooLarge(1 << 13)));
    }

    #[test]
    fn text_forms_round_trip() {
        let f = FiniteField::with_order(16).unwrap();
        let g = f.generator();
        let e = Curve::weierstrass(&f, [f.one(), f.zero(), g, f.zero(), g]).unwrap();
        let text = e.to_string();
        assert_eq!(Curve::parse(&f, &text).unwrap(), e);
        for p in e.enumerate_points().unwrap() {
            assert_eq!(e.parse_point(&e.format_point(&p)).unwrap(), p);
        }
        let f11 = fp(11);
        let x = Curve::parse(&f11, "g2:1,0,0,0,0,1;").unwrap();
        assert_eq!(x.to_string(), "g2:1,0,0,0,0,1;0,0,0");
        assert!(Curve::parse(&f11, "g3:1").is_err());
        assert!(x.parse_point("(0,0)").is_err());
    }
}
