//! The group of rational points of an elliptic curve: structure, an explicit
//! basis, subgroups and cosets, the admissible order/structure tables, and a
//! search for curves with a prescribed order.

use std::collections::{BTreeSet, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{factorize, gcd, isqrt, lcm, valuation};
use crate::curve::{Curve, CurveError, CurvePoint};
use crate::field::{prime_power, FieldElement, FiniteField};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("order {n} is outside the Hasse window [{lo}, {hi}]")]
    OutsideHasse { n: u64, lo: u64, hi: u64 },
    #[error("order {n} with shape {shape:?} is not admissible over F_{q}")]
    NotAdmissible {
        q: u64,
        n: u64,
        shape: Option<GroupStructure>,
    },
    #[error("no curve found after {tried} candidates")]
    BudgetExhausted { tried: u64 },
}

/// `E(F_q) = Z/d1 x Z/d2` with `d1 | d2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GroupStructure {
    pub d1: u64,
    pub d2: u64,
}

impl GroupStructure {
    pub fn order(&self) -> u64 {
        self.d1 * self.d2
    }
}

/// Orders of all points from `N` and its factorisation.
fn point_orders(curve: &Curve, points: &[CurvePoint], n: u64) -> Vec<u64> {
    let factors = factorize(n);
    points
        .iter()
        .map(|p| curve.order_dividing(p, n, &factors))
        .collect()
}

/// `(d1, d2)` with `d2` the exponent of the group.
pub fn group_structure(curve: &Curve) -> Result<GroupStructure, GroupError> {
    if curve.genus() != 1 {
        return Err(CurveError::NotElliptic.into());
    }
    let points = curve.enumerate_points()?;
    let n = points.len() as u64;
    let d2 = point_orders(curve, &points, n).into_iter().fold(1, lcm);
    let d1 = n / d2;
    let q = curve.field().order() as u64;
    assert!(
        d2 % d1 == 0 && (q - 1) % d1 == 0,
        "impossible structure ({d1}, {d2})"
    );
    Ok(GroupStructure { d1, d2 })
}

/// The point group with a basis `g1, g2` (orders `d1, d2`, independent) and
/// the coordinate map `i g1 + j g2 -> (i, j)`.
#[derive(Debug, Clone)]
pub struct CurveGroup {
    curve: Curve,
    points: Vec<CurvePoint>,
    structure: GroupStructure,
    g1: CurvePoint,
    g2: CurvePoint,
    coords: HashMap<CurvePoint, (u64, u64)>,
}

impl CurveGroup {
    pub fn new(curve: &Curve) -> Result<Self, GroupError> {
        if curve.genus() != 1 {
            return Err(CurveError::NotElliptic.into());
        }
        let points = curve.enumerate_points()?;
        let n = points.len() as u64;
        let orders = point_orders(curve, &points, n);
        let d2 = orders.iter().copied().fold(1, lcm);
        let d1 = n / d2;
        let g2 = points[orders
            .iter()
            .position(|&o| o == d2)
            .expect("exponent is attained")];

        let mut cyclic = HashMap::new();
        let mut acc = CurvePoint::Infinity;
        for j in 0..d2 {
            cyclic.insert(acc, j);
            acc = curve.add_raw(&acc, &g2);
        }
        // a point of order d1 whose multiples avoid <g2> except at O
        let g1 = points
            .iter()
            .zip(&orders)
            .filter(|&(_, &o)| o == d1)
            .map(|(p, _)| *p)
            .find(|p| {
                let mut acc = *p;
                (1..d1).all(|_| {
                    let fresh = !cyclic.contains_key(&acc);
                    acc = curve.add_raw(&acc, p);
                    fresh
                })
            })
            .expect("the cyclic subgroup of exponent order has a complement");

        let mut coords = HashMap::with_capacity(points.len());
        let mut row = CurvePoint::Infinity;
        for i in 0..d1 {
            let mut acc = row;
            for j in 0..d2 {
                coords.insert(acc, (i, j));
                acc = curve.add_raw(&acc, &g2);
            }
            row = curve.add_raw(&row, &g1);
        }
        debug_assert_eq!(coords.len(), points.len());
        Ok(Self {
            curve: curve.clone(),
            points,
            structure: GroupStructure { d1, d2 },
            g1,
            g2,
            coords,
        })
    }

    pub fn curve(&self) -> &Curve {
        &self.curve
    }

    /// All points, infinity first.
    pub fn points(&self) -> &[CurvePoint] {
        &self.points
    }

    pub fn order(&self) -> u64 {
        self.points.len() as u64
    }

    pub fn structure(&self) -> GroupStructure {
        self.structure
    }

    pub fn basis(&self) -> (CurvePoint, CurvePoint) {
        (self.g1, self.g2)
    }

    pub fn coordinates(&self, p: &CurvePoint) -> Option<(u64, u64)> {
        self.coords.get(p).copied()
    }

    /// `i g1 + j g2`.
    pub fn point_at(&self, i: u64, j: u64) -> CurvePoint {
        let a = self.curve.mul_raw(&self.g1, (i % self.structure.d1) as i64);
        let b = self.curve.mul_raw(&self.g2, (j % self.structure.d2) as i64);
        self.curve.add_raw(&a, &b)
    }

    pub fn add(&self, p: &CurvePoint, q: &CurvePoint) -> CurvePoint {
        self.curve.add_raw(p, q)
    }

    pub fn neg(&self, p: &CurvePoint) -> CurvePoint {
        self.curve.neg_raw(p)
    }

    pub fn mul(&self, p: &CurvePoint, n: i64) -> CurvePoint {
        self.curve.mul_raw(p, n)
    }

    pub fn sum<'a>(&self, pts: impl IntoIterator<Item = &'a CurvePoint>) -> CurvePoint {
        pts.into_iter()
            .fold(CurvePoint::Infinity, |acc, p| self.curve.add_raw(&acc, p))
    }

    /// Order read off the coordinates; `None` for points not on the curve.
    pub fn point_order(&self, p: &CurvePoint) -> Option<u64> {
        let (i, j) = self.coordinates(p)?;
        let GroupStructure { d1, d2 } = self.structure;
        Some(lcm(d1 / gcd(i, d1), d2 / gcd(j, d2)))
    }

    /// Points of `{(i, j) : u | i, w | j}`, the subgroup of order
    /// `(d1/u)(d2/w)`; `u | d1`, `w | d2`.
    pub fn diagonal_subgroup(&self, u: u64, w: u64) -> Vec<CurvePoint> {
        let GroupStructure { d1, d2 } = self.structure;
        assert!(d1 % u == 0 && d2 % w == 0);
        let mut out: Vec<CurvePoint> = self
            .coords
            .iter()
            .filter(|(_, &(i, j))| i % u == 0 && j % w == 0)
            .map(|(p, _)| *p)
            .collect();
        out.sort();
        out
    }
}

/// Closure of `generators` under addition, optionally translated by
/// `coset_rep`; sorted.
pub fn subgroup_and_cosets(
    curve: &Curve,
    generators: &[CurvePoint],
    coset_rep: Option<&CurvePoint>,
) -> Result<Vec<CurvePoint>, GroupError> {
    if curve.genus() != 1 {
        return Err(CurveError::NotElliptic.into());
    }
    for p in generators.iter().chain(coset_rep) {
        if !curve.contains(p) {
            return Err(CurveError::PointNotOnCurve(curve.format_point(p)).into());
        }
    }
    let mut seen: BTreeSet<CurvePoint> = BTreeSet::from([CurvePoint::Infinity]);
    let mut frontier = vec![CurvePoint::Infinity];
    while let Some(p) = frontier.pop() {
        for g in generators {
            let s = curve.add_raw(&p, g);
            if seen.insert(s) {
                frontier.push(s);
            }
        }
    }
    let mut out: Vec<CurvePoint> = match coset_rep {
        None => seen.into_iter().collect(),
        Some(b) => seen.iter().map(|p| curve.add_raw(b, p)).collect(),
    };
    out.sort();
    Ok(out)
}

/// `[q + 1 - floor(2 sqrt q), q + 1 + floor(2 sqrt q)]`.
pub fn hasse_window(q: u64) -> (u64, u64) {
    let r = isqrt(4 * q);
    (q + 1 - r, q + 1 + r)
}

/// Which clause of the order classification admits a trace `beta`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TraceCase {
    /// `gcd(beta, p) = 1`
    Ordinary,
    /// `beta = +-2 sqrt q`, `q` a square
    TwiceRoot,
    /// `beta = +-sqrt q`, `q` a square, `p != 1 mod 3`
    Root,
    /// `beta = +-p^((n+1)/2)`, `n` odd, `p` in {2, 3}
    SmallCharacteristic,
    /// `beta = 0`, `n` odd or `p != 1 mod 4`
    Zero,
}

fn classify_trace(p: u64, n: u32, beta: i64) -> Option<TraceCase> {
    let q = p.pow(n);
    let b2 = (beta as i128 * beta as i128) as u128;
    if b2 > 4 * q as u128 {
        return None;
    }
    if gcd(beta.unsigned_abs(), p) == 1 {
        return Some(TraceCase::Ordinary);
    }
    let even = n % 2 == 0;
    if even && b2 == 4 * q as u128 {
        return Some(TraceCase::TwiceRoot);
    }
    if even && p % 3 != 1 && b2 == q as u128 {
        return Some(TraceCase::Root);
    }
    if !even && (p == 2 || p == 3) && b2 == (p as u128).pow(n + 1) {
        return Some(TraceCase::SmallCharacteristic);
    }
    if beta == 0 && (!even || p % 4 != 1) {
        return Some(TraceCase::Zero);
    }
    None
}

fn split_q(q: u64) -> Result<(u64, u32), GroupError> {
    prime_power(q)
        .map(|(p, s)| (p as u64, s))
        .ok_or(GroupError::NotPrimePower(q))
}

/// Every admissible `(N, beta, case)` with `N = q + 1 - beta`, ascending in `N`.
pub fn admissible_traces(q: u64) -> Result<Vec<(u64, i64, TraceCase)>, GroupError> {
    let (p, n) = split_q(q)?;
    let r = isqrt(4 * q) as i64;
    let mut out: Vec<_> = (-r..=r)
        .rev()
        .filter_map(|beta| {
            classify_trace(p, n, beta).map(|c| ((q as i64 + 1 - beta) as u64, beta, c))
        })
        .collect();
    out.sort();
    Ok(out)
}

/// All orders `|E(F_q)|` of elliptic curves over `F_q`.
pub fn admissible_orders(q: u64) -> Result<Vec<u64>, GroupError> {
    Ok(admissible_traces(q)?.into_iter().map(|t| t.0).collect())
}

/// All group structures of order `order` over `F_q`, sorted by `d1`; empty if
/// the order itself is not admissible.
pub fn admissible_structures(q: u64, order: u64) -> Result<Vec<GroupStructure>, GroupError> {
    let (p, _) = split_q(q)?;
    let Some(&(_, _, case)) = admissible_traces(q)?.iter().find(|t| t.0 == order) else {
        return Ok(Vec::new());
    };
    // per prime l != p, the admissible exponents a_l of the smaller factor
    let mut choices: Vec<(u64, Vec<u32>)> = Vec::new();
    for (l, h) in factorize(order) {
        if l == p {
            continue;
        }
        let range: Vec<u32> = if case == TraceCase::TwiceRoot {
            vec![h / 2]
        } else {
            (0..=valuation(l, q - 1).min(h / 2)).collect()
        };
        choices.push((l, range));
    }
    let mut d1s = vec![1u64];
    for (l, range) in &choices {
        d1s = d1s
            .iter()
            .flat_map(|&d| range.iter().map(move |&a| d * l.pow(a)))
            .collect();
    }
    d1s.sort();
    Ok(d1s
        .into_iter()
        .map(|d1| GroupStructure { d1, d2: order / d1 })
        .collect())
}

pub fn is_admissible_structure(q: u64, s: GroupStructure) -> bool {
    admissible_structures(q, s.order()).is_ok_and(|v| v.contains(&s))
}

/// Limits for [`find_curve_with_order`].
#[derive(Debug, Clone, Copy)]
pub struct SearchBudget {
    pub max_curves: u64,
    pub seed: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self {
            max_curves: 1_000_000,
            seed: 0,
        }
    }
}

enum Step {
    Found(Curve),
    Continue,
    Exhausted,
}

/// Largest prime field order searched exhaustively over short models.
const EXHAUSTIVE_PRIME_LIMIT: u32 = 3000;

/// Finds a curve with exactly `order` points (and group `shape` if given).
///
/// Prime fields `3 < p <= 3000` scan `y^2 = x^3 + a4 x + a6` in order; `F_2`
/// and `F_3` scan all five coefficients; other fields draw coefficient
/// tuples from a seeded generator.
pub fn find_curve_with_order(
    field: &FiniteField,
    order: u64,
    shape: Option<GroupStructure>,
    budget: SearchBudget,
) -> Result<Curve, GroupError> {
    let q = field.order() as u64;
    let (lo, hi) = hasse_window(q);
    if order < lo || order > hi {
        return Err(GroupError::OutsideHasse { n: order, lo, hi });
    }
    let admissible = match shape {
        None => admissible_orders(q)?.contains(&order),
        Some(s) => s.order() == order && is_admissible_structure(q, s),
    };
    if !admissible {
        return Err(GroupError::NotAdmissible { q, n: order, shape });
    }

    let accept = |c: &Curve| -> bool {
        c.count_points().ok() == Some(order)
            && shape.is_none_or(|s| group_structure(c).ok() == Some(s))
    };
    let mut tried = 0u64;
    let mut step = |a: [FieldElement; 5]| -> Step {
        if tried >= budget.max_curves {
            return Step::Exhausted;
        }
        let Ok(c) = Curve::weierstrass(field, a) else {
            return Step::Continue;
        };
        tried += 1;
        if accept(&c) {
            Step::Found(c)
        } else {
            Step::Continue
        }
    };

    let p = field.characteristic();
    let z = field.zero();
    let outcome = if field.degree() == 1 && p > 3 && p <= EXHAUSTIVE_PRIME_LIMIT {
        field
            .elements()
            .flat_map(|a4| field.elements().map(move |a6| [z, z, z, a4, a6]))
            .map(&mut step)
            .find(|s| !matches!(s, Step::Continue))
    } else if field.degree() == 1 {
        (0..(q as u32).pow(5))
            .map(|code| {
                let mut c = code;
                std::array::from_fn(|_| {
                    let e = field.element(c % q as u32).expect("in range");
                    c /= q as u32;
                    e
                })
            })
            .map(&mut step)
            .find(|s| !matches!(s, Step::Continue))
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
        std::iter::repeat_with(|| {
            std::array::from_fn(|_| {
                field
                    .element(rng.gen_range(0..field.order()))
                    .expect("in range")
            })
        })
        .map(&mut step)
        .find(|s| !matches!(s, Step::Continue))
    };
    if let Some(Step::Found(c)) = outcome {
        return Ok(c);
    }
    Err(GroupError::BudgetExhausted { tried })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u32) -> FiniteField {
        FiniteField::prime(p).unwrap()
    }

    #[test]
    fn structures_of_small_curves() {
        let f5 = fp(5);
        let e = Curve::short(&f5, 0, 1).unwrap();
        assert_eq!(
            group_structure(&e).unwrap(),
            GroupStructure { d1: 1, d2: 6 }
        );
        let f3 = fp(3);
        let e = Curve::short(&f3, -1, 0).unwrap();
        assert_eq!(
            group_structure(&e).unwrap(),
            GroupStructure { d1: 2, d2: 2 }
        );
    }

    #[test]
    fn basis_coordinates_are_a_group_isomorphism() {
        for q in [19u64, 16, 25] {
            let f = FiniteField::with_order(q).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(q);
            for _ in 0..10 {
                let a = std::array::from_fn(|_| f.element(rng.gen_range(0..f.order())).unwrap());
                let Ok(e) = Curve::weierstrass(&f, a) else {
                    continue;
                };
                let g = CurveGroup::new(&e).unwrap();
                let GroupStructure { d1, d2 } = g.structure();
                for p in g.points() {
                    for r in g.points() {
                        let (a, b) = g.coordinates(p).unwrap();
                        let (c, d) = g.coordinates(r).unwrap();
                        let s = g.coordinates(&g.add(p, r)).unwrap();
                        assert_eq!(s, ((a + c) % d1, (b + d) % d2));
                    }
                    assert_eq!(g.point_order(p).unwrap(), e.order(p).unwrap());
                }
            }
        }
    }

    #[test]
    fn subgroups_and_cosets() {
        let f5 = fp(5);
        let e = Curve::short(&f5, 0, 1).unwrap();
        assert_eq!(
            subgroup_and_cosets(&e, &[CurvePoint::Infinity], None).unwrap(),
            vec![CurvePoint::Infinity]
        );
        let pts = e.enumerate_points().unwrap();
        let p3 = *pts.iter().find(|p| e.order(p).unwrap() == 3).unwrap();
        let h = subgroup_and_cosets(&e, &[p3], None).unwrap();
        assert_eq!(h.len(), 3);
        let b = *pts.iter().find(|p| !h.contains(p)).unwrap();
        let coset = subgroup_and_cosets(&e, &[p3], Some(&b)).unwrap();
        assert_eq!(coset.len(), 3);
        assert!(coset.iter().all(|p| !h.contains(p)));
        let off = CurvePoint::Affine {
            x: f5.from_int(1),
            y: f5.from_int(1),
        };
        assert!(subgroup_and_cosets(&e, &[off], None).is_err());
    }

    #[test]
    fn order_tables() {
        assert_eq!(
            admissible_orders(19).unwrap(),
            (12..=28).collect::<Vec<_>>()
        );
        assert_eq!(admissible_orders(4).unwrap(), (1..=9).collect::<Vec<_>>());
        assert_eq!(
            admissible_structures(64, 72).unwrap(),
            vec![
                GroupStructure { d1: 1, d2: 72 },
                GroupStructure { d1: 3, d2: 24 }
            ]
        );
        assert_eq!(
            admissible_structures(16, 24).unwrap(),
            vec![GroupStructure { d1: 1, d2: 24 }]
        );
        // q = 9, N = 16 is the case beta = -2 sqrt q: forced (4, 4)
        assert_eq!(
            admissible_structures(9, 16).unwrap(),
            vec![GroupStructure { d1: 4, d2: 4 }]
        );
        assert!(admissible_structures(19, 40).unwrap().is_empty());
        assert_eq!(admissible_orders(12), Err(GroupError::NotPrimePower(12)));
    }

    #[test]
    fn curve_search() {
        let f19 = fp(19);
        let e = find_curve_with_order(&f19, 12, None, SearchBudget::default()).unwrap();
        assert_eq!(e.count_points().unwrap(), 12);
        assert!(matches!(
            find_curve_with_order(&f19, 40, None, SearchBudget::default()),
            Err(GroupError::OutsideHasse { .. })
        ));
        let shape = GroupStructure { d1: 2, d2: 12 };
        let e = find_curve_with_order(&f19, 24, Some(shape), SearchBudget::default()).unwrap();
        assert_eq!(group_structure(&e).unwrap(), shape);

        let f64_ = FiniteField::with_order(64).unwrap();
        let shape = GroupStructure { d1: 1, d2: 72 };
        let e = find_curve_with_order(&f64_, 72, Some(shape), SearchBudget::default()).unwrap();
        assert_eq!(group_structure(&e).unwrap(), shape);
        let tiny = SearchBudget {
            max_curves: 3,
            seed: 1,
        };
        assert!(matches!(
            find_curve_with_order(&f64_, 72, Some(GroupStructure { d1: 3, d2: 24 }), tiny),
            Err(GroupError::BudgetExhausted { .. })
        ));
        assert!(matches!(
            find_curve_with_order(&f64_, 72, Some(GroupStructure { d1: 2, d2: 36 }), tiny),
            Err(GroupError::NotAdmissible { .. })
        ));
    }
}
