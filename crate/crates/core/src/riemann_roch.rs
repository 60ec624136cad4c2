//! Monomial bases of `L(m P0)` for the point at infinity `P0` of the
//! supported one-point models.

use thiserror::Error;

use crate::curve::{Curve, CurvePoint};
use crate::field::FieldElement;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RrError {
    #[error("functions in L(m P0) cannot be evaluated at the point at infinity")]
    InfinityEvaluation,
}

/// `x^i y^j` with `j <= 1`, ordered by pole order at infinity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RrBasis {
    pub genus: u32,
    pub m: u32,
    pub monomials: Vec<(u32, u32)>,
    pub pole_orders: Vec<u32>,
}

impl RrBasis {
    pub fn dimension(&self) -> usize {
        self.monomials.len()
    }
}

/// Pole order of `y` at infinity: 3 on a Weierstrass cubic, 5 on the
/// degree-5 hyperelliptic model. `x` always has pole order 2.
fn y_pole_order(genus: u32) -> u32 {
    if genus == 1 {
        3
    } else {
        5
    }
}

pub fn rr_basis_for_genus(genus: u32, m: u32) -> RrBasis {
    let py = y_pole_order(genus);
    let mut terms: Vec<(u32, (u32, u32))> = Vec::new();
    for j in 0..=1 {
        let mut i = 0;
        while 2 * i + py * j <= m {
            terms.push((2 * i + py * j, (i, j)));
            i += 1;
        }
    }
    terms.sort();
    RrBasis {
        genus,
        m,
        monomials: terms.iter().map(|t| t.1).collect(),
        pole_orders: terms.iter().map(|t| t.0).collect(),
    }
}

pub fn rr_basis(curve: &Curve, m: u32) -> RrBasis {
    rr_basis_for_genus(curve.genus(), m)
}

/// `x(P)^i y(P)^j`.
pub fn evaluate_function(
    curve: &Curve,
    (i, j): (u32, u32),
    p: &CurvePoint,
) -> Result<FieldElement, RrError> {
    let f = curve.field();
    let (x, y) = p.coords().ok_or(RrError::InfinityEvaluation)?;
    Ok(f.mul(f.pow(x, i as u64), f.pow(y, j as u64)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FiniteField;

    #[test]
    fn small_bases() {
        assert_eq!(rr_basis_for_genus(1, 1).monomials, vec![(0, 0)]);
        assert_eq!(
            rr_basis_for_genus(1, 5).monomials,
            vec![(0, 0), (1, 0), (0, 1), (2, 0), (1, 1)]
        );
        let b = rr_basis_for_genus(2, 5);
        assert_eq!(b.monomials, vec![(0, 0), (1, 0), (2, 0), (0, 1)]);
        assert_eq!(b.pole_orders, vec![0, 2, 4, 5]);
    }

    #[test]
    fn dimensions_and_gaps() {
        for (g, gaps) in [(1u32, vec![1u32]), (2, vec![1, 3])] {
            let mut found_gaps = Vec::new();
            for m in 0..=20u32 {
                let d = rr_basis_for_genus(g, m).dimension();
                if m >= 1 {
                    let prev = rr_basis_for_genus(g, m - 1).dimension();
                    assert!(d == prev || d == prev + 1);
                    if d == prev {
                        found_gaps.push(m);
                    }
                }
                if m >= 2 * g - 1 {
                    assert_eq!(d as u32, m + 1 - g, "genus {g}, m {m}");
                }
                let b = rr_basis_for_genus(g, m);
                assert!(b.pole_orders.windows(2).all(|w| w[0] < w[1]));
                assert!(b.pole_orders.iter().all(|o| *o <= m && !gaps.contains(o)));
            }
            assert_eq!(found_gaps, gaps);
        }
        assert_eq!(rr_basis_for_genus(1, 0).dimension(), 1);
        assert_eq!(rr_basis_for_genus(2, 1).dimension(), 1);
    }

    #[test]
    fn evaluation() {
        let f = FiniteField::prime(5).unwrap();
        let e = Curve::short(&f, 0, 1).unwrap();
        let p = CurvePoint::Affine {
            x: f.from_int(2),
            y: f.from_int(3),
        };
        assert_eq!(evaluate_function(&e, (0, 0), &p), Ok(f.one()));
        assert_eq!(evaluate_function(&e, (1, 0), &p), Ok(f.from_int(2)));
        assert_eq!(evaluate_function(&e, (1, 1), &p), Ok(f.from_int(1)));
        assert_eq!(
            evaluate_function(&e, (0, 0), &CurvePoint::Infinity),
            Err(RrError::InfinityEvaluation)
        );
    }
}
