//! Linear codes given by a generator matrix, one-point AG evaluation codes,
//! and the invariants computed on them.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{binomial, Combinations};
use crate::curve::{Curve, CurvePoint};
use crate::field::{FieldElement, FiniteField};
use crate::group::{CurveGroup, GroupError};
use crate::linalg::{diagonal_bilinear_solve, Matrix};
use crate::riemann_roch::{evaluate_function, rr_basis, RrError};

/// Work limit for exhaustive checks (subsets, minors or messages).
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Random combinations tried by [`selfdualize`] after the basis vectors.
pub const SELFDUAL_RANDOM_TRIES: u64 = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("divisor degree {m} outside ({lo}, {n}) for a genus-{genus} curve")]
    DegreeOutOfRange {
        m: u32,
        lo: i64,
        n: usize,
        genus: u32,
    },
    #[error("evaluation points are not distinct")]
    DuplicatePoints,
    #[error("point {0} is not on the curve")]
    PointNotOnCurve(String),
    #[error(transparent)]
    Evaluation(#[from] RrError),
    #[error("generator has rank {rank}, expected {k}")]
    RankDeficient { rank: usize, k: usize },
    #[error("work estimate {needed} exceeds budget {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("code is not half-rate (n = {n}, k = {k})")]
    NotHalfRate { n: usize, k: usize },
    #[error("self-dualization needs characteristic 2")]
    CharNotTwo,
    #[error("no all-nonzero solution among {tried} candidates")]
    NoFullWeightSolution { tried: u64 },
    #[error("parameters out of range: {0}")]
    RangeViolation(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Where an evaluation code came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub curve: Curve,
    pub m: u32,
    pub points: Vec<CurvePoint>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    generator: Matrix,
    provenance: Option<Provenance>,
}

impl LinearCode {
    /// Wraps a full-rank generator matrix.
    pub fn new(generator: Matrix) -> Result<Self, CodeError> {
        let rank = generator.rank();
        if rank != generator.rows() {
            return Err(CodeError::RankDeficient {
                rank,
                k: generator.rows(),
            });
        }
        Ok(Self {
            generator,
            provenance: None,
        })
    }

    /// The code spanned by `rows`, reduced to a basis.
    pub fn spanned_by(rows: &Matrix) -> Self {
        Self {
            generator: rows.row_space_basis(),
            provenance: None,
        }
    }

    pub fn field(&self) -> &FiniteField {
        self.generator.field()
    }

    pub fn n(&self) -> usize {
        self.generator.cols()
    }

    pub fn k(&self) -> usize {
        self.generator.rows()
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    pub fn provenance(&self) -> Option<&Provenance> {
        self.provenance.as_ref()
    }

    pub fn with_provenance(mut self, provenance: Provenance) -> Self {
        self.provenance = Some(provenance);
        self
    }

    pub fn encode(&self, message: &[FieldElement]) -> Vec<FieldElement> {
        let f = self.field();
        assert_eq!(message.len(), self.k());
        (0..self.n())
            .map(|c| {
                message.iter().enumerate().fold(f.zero(), |acc, (r, &m)| {
                    f.add(acc, f.mul(m, self.generator[(r, c)]))
                })
            })
            .collect()
    }

    pub fn same_code(&self, other: &LinearCode) -> bool {
        self.generator.same_row_space(&other.generator)
    }
}

/// The one-point code `C(points, m P0)`: row `r` evaluates the `r`-th basis
/// monomial of `L(m P0)` at every point.
pub fn build_code(curve: &Curve, points: &[CurvePoint], m: u32) -> Result<LinearCode, CodeError> {
    let n = points.len();
    let genus = curve.genus();
    let lo = 2 * genus as i64 - 2;
    if (m as i64) <= lo || m as usize >= n {
        return Err(CodeError::DegreeOutOfRange { m, lo, n, genus });
    }
    let mut seen = HashSet::with_capacity(n);
    for p in points {
        if !curve.contains(p) {
            return Err(CodeError::PointNotOnCurve(curve.format_point(p)));
        }
        if !seen.insert(*p) {
            return Err(CodeError::DuplicatePoints);
        }
    }
    let basis = rr_basis(curve, m);
    let mut data = Vec::with_capacity(basis.dimension() * n);
    for &mono in &basis.monomials {
        for p in points {
            data.push(evaluate_function(curve, mono, p)?);
        }
    }
    let g = Matrix::new(curve.field(), basis.dimension(), n, data);
    Ok(LinearCode::new(g)?.with_provenance(Provenance {
        curve: curve.clone(),
        m,
        points: points.to_vec(),
    }))
}

/// The dual code, generated by a basis of the right kernel of `G`.
pub fn dual_code(code: &LinearCode) -> LinearCode {
    LinearCode {
        generator: code.generator.kernel_basis(),
        provenance: None,
    }
}

/// Column-major copy of a generator plus a square scratch buffer for
/// repeated small eliminations.
struct ColumnRanker<'a> {
    field: &'a FiniteField,
    k: usize,
    columns: Vec<FieldElement>,
    scratch: Vec<FieldElement>,
}

impl<'a> ColumnRanker<'a> {
    fn new(g: &'a Matrix) -> Self {
        let (k, n) = (g.rows(), g.cols());
        let mut columns = Vec::with_capacity(k * n);
        for c in 0..n {
            for r in 0..k {
                columns.push(g[(r, c)]);
            }
        }
        Self {
            field: g.field(),
            k,
            columns,
            scratch: Vec::with_capacity(k * n),
        }
    }

    /// Whether the selected columns span `F_q^k`.
    fn full_rank(&mut self, cols: &[usize]) -> bool {
        let (f, k) = (self.field, self.k);
        if cols.len() < k {
            return false;
        }
        // scratch holds the selected columns as rows (k-vectors)
        let w = cols.len();
        self.scratch.clear();
        for &c in cols {
            self.scratch
                .extend_from_slice(&self.columns[c * k..(c + 1) * k]);
        }
        let s = &mut self.scratch;
        let mut rank = 0;
        for coord in 0..k {
            let Some(piv) = (rank..w).find(|&i| !s[i * k + coord].is_zero()) else {
                return false;
            };
            if piv != rank {
                for j in 0..k {
                    s.swap(piv * k + j, rank * k + j);
                }
            }
            let inv = f.inv(s[rank * k + coord]).expect("nonzero pivot");
            for i in rank + 1..w {
                let factor = s[i * k + coord];
                if factor.is_zero() {
                    continue;
                }
                let t = f.mul(factor, inv);
                for j in coord + 1..k {
                    let sub = f.mul(t, s[rank * k + j]);
                    s[i * k + j] = f.sub(s[i * k + j], sub);
                }
                s[i * k + coord] = f.zero();
            }
            rank += 1;
        }
        true
    }
}

/// First `k`-subset of columns that is singular, or `None` if every
/// `k x k` minor is nonzero.
pub fn singular_minor(code: &LinearCode, budget: u64) -> Result<Option<Vec<usize>>, CodeError> {
    let (n, k) = (code.n(), code.k());
    let needed = binomial(n as u64, k as u64);
    if needed > budget as u128 {
        return Err(CodeError::BudgetExceeded { needed, budget });
    }
    let mut ranker = ColumnRanker::new(&code.generator);
    let mut subsets = Combinations::new(n, k);
    while let Some(s) = subsets.next_subset() {
        if !ranker.full_rank(s) {
            return Ok(Some(s.to_vec()));
        }
    }
    Ok(None)
}

/// MDS iff every `k` columns of `G` are independent.
pub fn mds_check_matrix(code: &LinearCode, budget: u64) -> Result<bool, CodeError> {
    Ok(singular_minor(code, budget)?.is_none())
}

/// An `m`-subset of `points` (as indices) whose group sum is `O`.
pub fn zero_sum_subset(
    group: &CurveGroup,
    points: &[CurvePoint],
    m: usize,
    budget: u64,
) -> Result<Option<Vec<usize>>, CodeError> {
    let needed = binomial(points.len() as u64, m as u64);
    if needed > budget as u128 {
        return Err(CodeError::BudgetExceeded { needed, budget });
    }
    let s = group.structure();
    let coords: Vec<(u64, u64)> = points
        .iter()
        .map(|p| {
            group
                .coordinates(p)
                .ok_or_else(|| CodeError::PointNotOnCurve(group.curve().format_point(p)))
        })
        .collect::<Result<_, _>>()?;
    let mut chosen = Vec::with_capacity(m);
    Ok(zero_sum_dfs(&coords, (s.d1, s.d2), m, 0, (0, 0), &mut chosen).then_some(chosen))
}

fn zero_sum_dfs(
    coords: &[(u64, u64)],
    (d1, d2): (u64, u64),
    remaining: usize,
    start: usize,
    acc: (u64, u64),
    chosen: &mut Vec<usize>,
) -> bool {
    if remaining == 0 {
        return acc == (0, 0);
    }
    for i in start..=coords.len().saturating_sub(remaining) {
        if coords.len() < remaining {
            break;
        }
        let next = ((acc.0 + coords[i].0) % d1, (acc.1 + coords[i].1) % d2);
        chosen.push(i);
        if zero_sum_dfs(coords, (d1, d2), remaining - 1, i + 1, next, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// For an elliptic one-point code `C(points, m P0)`: MDS iff no `m` of the
/// points add up to the identity `P0`.
pub fn mds_check_group(
    curve: &Curve,
    points: &[CurvePoint],
    m: usize,
    budget: u64,
) -> Result<bool, CodeError> {
    let group = CurveGroup::new(curve)?;
    mds_check_group_in(&group, points, m, budget)
}

pub fn mds_check_group_in(
    group: &CurveGroup,
    points: &[CurvePoint],
    m: usize,
    budget: u64,
) -> Result<bool, CodeError> {
    Ok(zero_sum_subset(group, points, m, budget)?.is_none())
}

fn weight(v: &[FieldElement]) -> usize {
    v.iter().filter(|c| !c.is_zero()).count()
}

/// Minimum weight over messages whose first nonzero coordinate is 1.
fn distance_by_messages(code: &LinearCode) -> usize {
    let f = code.field();
    let (n, k) = (code.n(), code.k());
    let q = f.order();
    let rows = code.generator.row_vecs();
    let elements: Vec<FieldElement> = f.elements().collect();
    let mut best = n;
    for lead in 0..k {
        let mut word = rows[lead].clone();
        let mut digits = vec![0u32; k];
        best = best.min(weight(&word));
        // odometer over the coordinates after `lead`
        'outer: loop {
            let mut pos = lead + 1;
            loop {
                if pos == k {
                    break 'outer;
                }
                let old = elements[digits[pos] as usize];
                digits[pos] = (digits[pos] + 1) % q;
                let new = elements[digits[pos] as usize];
                let delta = f.sub(new, old);
                for (w, &g) in word.iter_mut().zip(&rows[pos]) {
                    *w = f.add(*w, f.mul(delta, g));
                }
                if digits[pos] != 0 {
                    break;
                }
                pos += 1;
            }
            best = best.min(weight(&word));
        }
    }
    best
}

/// Smallest `w` such that some `n - w` columns fail to span `F_q^k`.
fn distance_by_supports(code: &LinearCode, budget: u64) -> Result<usize, CodeError> {
    let (n, k) = (code.n(), code.k());
    let mut ranker = ColumnRanker::new(&code.generator);
    let mut spent: u128 = 0;
    let mut kept = Vec::with_capacity(n);
    for w in 1..=n - k + 1 {
        spent += binomial(n as u64, w as u64);
        if spent > budget as u128 {
            return Err(CodeError::BudgetExceeded {
                needed: spent,
                budget,
            });
        }
        let mut supports = Combinations::new(n, w);
        while let Some(support) = supports.next_subset() {
            kept.clear();
            let mut s = support.iter().peekable();
            for c in 0..n {
                if s.peek() == Some(&&c) {
                    s.next();
                } else {
                    kept.push(c);
                }
            }
            if !ranker.full_rank(&kept) {
                return Ok(w);
            }
        }
    }
    unreachable!("n - k + 1 coordinates always carry a codeword")
}

/// Exact minimum distance. Message enumeration is used when `q^k` fits the
/// budget and is cheaper than the support search; the zero code reports
/// `n + 1`.
pub fn min_distance(code: &LinearCode, budget: u64) -> Result<usize, CodeError> {
    let (n, k) = (code.n(), code.k());
    if k == 0 {
        return Ok(n + 1);
    }
    let q = code.field().order() as u128;
    let cost_messages = q.checked_pow(k as u32).unwrap_or(u128::MAX);
    let cost_supports: u128 = (1..=n - k + 1).map(|w| binomial(n as u64, w as u64)).sum();
    if cost_messages <= budget as u128 && cost_messages <= cost_supports {
        Ok(distance_by_messages(code))
    } else {
        distance_by_supports(code, budget)
    }
}

/// Span of all coordinatewise products of pairs of generator rows.
pub fn schur_square(code: &LinearCode) -> LinearCode {
    let f = code.field();
    let rows = code.generator.row_vecs();
    let mut products = Vec::with_capacity(rows.len() * (rows.len() + 1) / 2);
    for a in 0..rows.len() {
        for b in a..rows.len() {
            products.push(
                rows[a]
                    .iter()
                    .zip(&rows[b])
                    .map(|(&x, &y)| f.mul(x, y))
                    .collect(),
            );
        }
    }
    LinearCode::spanned_by(&Matrix::from_rows(f, code.n(), &products))
}

/// `dim(C ∩ C^⊥) = n - rank [G; H]`.
pub fn hull_dim(code: &LinearCode) -> usize {
    let h = dual_code(code);
    code.n() - code.generator.vstack(&h.generator).rank()
}

/// `n = 2k` and `G G^T = 0`.
pub fn is_self_dual(code: &LinearCode) -> bool {
    code.n() == 2 * code.k() && code.generator.mul(&code.generator.transpose()).is_zero()
}

/// Rescales coordinates by square roots of an all-nonzero `v` with
/// `G diag(v) G^T = 0`, giving a self-dual code monomially equivalent to the
/// input.
pub fn selfdualize(code: &LinearCode, seed: u64) -> Result<LinearCode, CodeError> {
    let f = code.field();
    if f.characteristic() != 2 {
        return Err(CodeError::CharNotTwo);
    }
    if code.n() != 2 * code.k() {
        return Err(CodeError::NotHalfRate {
            n: code.n(),
            k: code.k(),
        });
    }
    let basis = diagonal_bilinear_solve(&code.generator).row_vecs();
    let full = |v: &Vec<FieldElement>| v.iter().all(|c| !c.is_zero());
    let mut tried = basis.len() as u64;
    let mut found = basis.iter().find(|v| full(v)).cloned();
    if found.is_none() && !basis.is_empty() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..SELFDUAL_RANDOM_TRIES {
            tried += 1;
            let mut v = vec![f.zero(); code.n()];
            for b in &basis {
                let c = f.element(rng.gen_range(0..f.order())).expect("in range");
                for (x, &y) in v.iter_mut().zip(b) {
                    *x = f.add(*x, f.mul(c, y));
                }
            }
            if full(&v) {
                found = Some(v);
                break;
            }
        }
    }
    let v = found.ok_or(CodeError::NoFullWeightSolution { tried })?;
    let roots: Vec<FieldElement> = v
        .iter()
        .map(|&x| f.frobenius_sqrt(x).expect("characteristic 2"))
        .collect();
    let out = LinearCode {
        generator: code.generator.scale_columns(&roots),
        provenance: code.provenance.clone(),
    };
    assert!(is_self_dual(&out), "scaled code must be self-dual");
    Ok(out)
}

/// Parameters `[[n, k - h, n - k + 1, n - k - h]]` of the entanglement-assisted
/// quantum code from an MDS `[n, k]` code with hull dimension `h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EaqecParams {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub c: usize,
}

pub fn eaqec_params(n: usize, k: usize, h: usize) -> Result<EaqecParams, CodeError> {
    if 2 * k < n || k + 1 > n {
        return Err(CodeError::RangeViolation(format!(
            "need n/2 <= k <= n-1, got n={n}, k={k}"
        )));
    }
    if 2 * h > n {
        return Err(CodeError::RangeViolation(format!(
            "need 0 <= h <= n/2, got h={h}"
        )));
    }
    if h > n - k {
        return Err(CodeError::RangeViolation(format!(
            "entanglement n-k-h = {} is negative",
            n as i64 - k as i64 - h as i64
        )));
    }
    Ok(EaqecParams {
        n,
        k: k - h,
        d: n - k + 1,
        c: n - k - h,
    })
}

/// Equivalence-invariant summary of a code (hull excepted).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeReport {
    pub n: usize,
    pub k: usize,
    pub d: Option<usize>,
    /// `None` when neither the minor scan nor the distance fit the budget.
    pub is_mds: Option<bool>,
    pub schur_dim: usize,
    pub schur_d: Option<usize>,
    pub hull_dim: usize,
    pub self_dual: bool,
    pub non_rs_certified: bool,
}

pub fn invariant_report(code: &LinearCode, budget: u64) -> CodeReport {
    let (n, k) = (code.n(), code.k());
    let mut is_mds = mds_check_matrix(code, budget).ok();
    let d = if is_mds == Some(true) {
        Some(n - k + 1)
    } else {
        min_distance(code, budget).ok()
    };
    if is_mds.is_none() {
        is_mds = d.map(|d| d == n - k + 1);
    }
    let square = schur_square(code);
    let schur_dim = square.k();
    let schur_d = min_distance(&square, budget).ok();
    let hull_dim = hull_dim(code);
    CodeReport {
        n,
        k,
        d,
        is_mds,
        schur_dim,
        schur_d,
        hull_dim,
        self_dual: n == 2 * k && hull_dim == k,
        non_rs_certified: schur_dim >= 2 * k,
    }
}

/// Column `j` of the result is `scales[j]` times column `perm[j]` of `G`.
pub fn monomial_transform(
    code: &LinearCode,
    perm: &[usize],
    scales: &[FieldElement],
) -> LinearCode {
    let permuted = code.generator.select_columns(perm);
    LinearCode {
        generator: permuted.scale_columns(scales),
        provenance: None,
    }
}

/// A uniformly random permutation with random nonzero scalings.
pub fn random_monomial<R: Rng>(code: &LinearCode, rng: &mut R) -> LinearCode {
    use rand::seq::SliceRandom;
    let f = code.field();
    let mut perm: Vec<usize> = (0..code.n()).collect();
    perm.shuffle(rng);
    let scales: Vec<FieldElement> = (0..code.n())
        .map(|_| f.element(rng.gen_range(1..f.order())).expect("in range"))
        .collect();
    monomial_transform(code, &perm, &scales)
}
