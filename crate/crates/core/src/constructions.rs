//! End-to-end recipes that locate a curve, choose evaluation points and
//! return a code together with its certified report.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::arith::{binomial, gcd, isqrt, valuation, Combinations};
use crate::code::{
    build_code, invariant_report, mds_check_matrix, selfdualize, zero_sum_subset, CodeError,
    CodeReport, LinearCode, DEFAULT_BUDGET,
};
use crate::curve::{Curve, CurveError, CurvePoint};
use crate::field::{is_prime, FieldElement, FieldError, FiniteField};
use crate::group::{
    admissible_orders, admissible_structures, admissible_traces, find_curve_with_order,
    subgroup_and_cosets, CurveGroup, GroupError, GroupStructure, SearchBudget,
};
use crate::linalg::Matrix;
use crate::riemann_roch::{evaluate_function, rr_basis};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("not MDS: the points {witness:?} sum to the identity")]
    NotMds { witness: Vec<String> },
    #[error("no admissible curve: {0}")]
    NoAdmissibleCurve(String),
    #[error("no admissible trace over F_{q}")]
    NoAdmissibleBeta { q: u64 },
    #[error("no curve found: {0}")]
    NoCurveFound(String),
    #[error("subgroup not found: {0}")]
    SubgroupNotFound(String),
    #[error("evaluation points are not distinct")]
    DuplicateEvaluationPoints,
    #[error("nothing found after {attempts} attempts")]
    NotFound { attempts: u64 },
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

type Result<T> = std::result::Result<T, ConstructionError>;

fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(ConstructionError::PreconditionFailed(msg.into()))
}

/// Knobs shared by the recipes.
#[derive(Debug, Clone, Copy)]
pub struct RecipeOptions {
    pub seed: u64,
    /// Work limit for each exhaustive scan.
    pub budget: u64,
    /// Candidate curves examined by a curve search.
    pub curve_budget: u64,
    /// Fail with `NotMds` instead of returning a near-MDS code.
    pub require_mds: bool,
}

impl Default for RecipeOptions {
    fn default() -> Self {
        Self {
            seed: 0,
            budget: DEFAULT_BUDGET,
            curve_budget: SearchBudget::default().max_curves,
            require_mds: true,
        }
    }
}

impl RecipeOptions {
    fn search_budget(&self) -> SearchBudget {
        SearchBudget {
            max_curves: self.curve_budget,
            seed: self.seed,
        }
    }
}

/// Recipe name, parameters and seed, enough to rerun the recipe.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstructionRecord {
    pub recipe: String,
    pub params: BTreeMap<String, Value>,
    pub seed: u64,
    pub notes: Vec<String>,
}

impl ConstructionRecord {
    fn new(recipe: &str, params: Value, seed: u64) -> Self {
        let params = match params {
            Value::Object(map) => map.into_iter().collect(),
            _ => BTreeMap::new(),
        };
        Self {
            recipe: recipe.to_string(),
            params,
            seed,
            notes: Vec::new(),
        }
    }
}

/// A code with its report and the evidence behind it.
#[derive(Debug, Clone)]
pub struct Certified {
    pub code: LinearCode,
    pub report: CodeReport,
    pub record: ConstructionRecord,
    pub curve_order: Option<u64>,
    pub group: Option<GroupStructure>,
    /// Outcome of the zero-sum subset scan, for elliptic codes.
    pub group_mds: Option<bool>,
}

fn format_points(curve: &Curve, pts: &[CurvePoint]) -> Vec<String> {
    pts.iter().map(|p| curve.format_point(p)).collect()
}

/// Elements of `<b>` other than `O` that lie in `subgroup`.
fn meets_subgroup(group: &CurveGroup, b: &CurvePoint, subgroup: &HashSet<CurvePoint>) -> bool {
    let mut acc = *b;
    while !acc.is_infinity() {
        if subgroup.contains(&acc) {
            return true;
        }
        acc = group.add(&acc, b);
    }
    false
}

/// Whether no multiset sum `sum m_i b_i` with `sum m_i = m` lies in `e1`.
fn multi_coset_condition(
    group: &CurveGroup,
    e1: &HashSet<CurvePoint>,
    reps: &[CurvePoint],
    m: u32,
) -> bool {
    let mut reach: BTreeSet<CurvePoint> = BTreeSet::from([CurvePoint::Infinity]);
    for _ in 0..m {
        reach = reach
            .iter()
            .flat_map(|s| reps.iter().map(move |b| (s, b)))
            .map(|(s, b)| group.add(s, b))
            .collect();
    }
    reach.iter().all(|s| !e1.contains(s))
}

/// The code `C(P, m P0)` on the union `P` of the cosets `b_i + E1`, where
/// `E1` is generated by `generators`. Single cosets must satisfy
/// `<b> ∩ E1 = {O}` and `m <= ord(b) - 1` unless `b = O`, in which case the
/// affine part of `E1` is used. The zero-sum subset scan decides MDS.
pub fn coset_mds(
    group: &CurveGroup,
    generators: &[CurvePoint],
    reps: &[CurvePoint],
    m: u32,
    opts: &RecipeOptions,
) -> Result<Certified> {
    let curve = group.curve();
    let e1 = subgroup_and_cosets(curve, generators, None)?;
    let e1_set: HashSet<CurvePoint> = e1.iter().copied().collect();
    let mut notes = Vec::new();
    match reps {
        [] => return precondition("at least one coset representative is needed"),
        [b] if b.is_infinity() => {
            notes.push("b = O: evaluation set is E1 without P0, no MDS guarantee".to_string());
        }
        [b] => {
            if !curve.contains(b) {
                return Err(CurveError::PointNotOnCurve(curve.format_point(b)).into());
            }
            if meets_subgroup(group, b, &e1_set) {
                return precondition("<b> meets E1 outside the identity");
            }
            let ord = group.point_order(b).expect("on curve");
            if m as u64 > ord - 1 {
                return precondition(format!("m = {m} exceeds ord(b) - 1 = {}", ord - 1));
            }
        }
        _ => {
            for (i, a) in reps.iter().enumerate() {
                for b in &reps[i + 1..] {
                    if e1_set.contains(&group.add(a, &group.neg(b))) {
                        return precondition("two representatives lie in the same coset");
                    }
                }
            }
            let holds = multi_coset_condition(group, &e1_set, reps, m);
            notes.push(format!("multi-coset sufficient condition holds: {holds}"));
        }
    }

    let mut points = Vec::with_capacity(e1.len() * reps.len());
    for b in reps {
        let mut coset: Vec<CurvePoint> = e1
            .iter()
            .map(|p| group.add(b, p))
            .filter(|p| !p.is_infinity())
            .collect();
        coset.sort();
        points.extend(coset);
    }
    if m as usize >= points.len() {
        return precondition(format!("m = {m} must be below the length {}", points.len()));
    }
    let code = build_code(curve, &points, m)?;
    let witness = zero_sum_subset(group, &points, m as usize, opts.budget)?;
    if let (Some(w), true) = (&witness, opts.require_mds) {
        let pts: Vec<CurvePoint> = w.iter().map(|&i| points[i]).collect();
        return Err(ConstructionError::NotMds {
            witness: format_points(curve, &pts),
        });
    }
    let report = invariant_report(&code, opts.budget);
    let mut record = ConstructionRecord::new(
        "coset",
        json!({
            "m": m,
            "subgroup_order": e1.len(),
            "generators": format_points(curve, generators),
            "representatives": format_points(curve, reps),
        }),
        opts.seed,
    );
    record.notes = notes;
    Ok(Certified {
        code,
        report,
        record,
        curve_order: Some(group.order()),
        group: Some(group.structure()),
        group_mds: Some(witness.is_none()),
    })
}

/// Subgroups of order `n` as `(generators, points)`: the coordinate
/// subgroups `{(i, j): u | i, w | j}` first, then cyclic ones.
fn subgroups_of_order(group: &CurveGroup, n: u64) -> Vec<(Vec<CurvePoint>, Vec<CurvePoint>)> {
    let GroupStructure { d1, d2 } = group.structure();
    let (g1, g2) = group.basis();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for u in (1..=d1).filter(|u| d1 % u == 0) {
        for w in (1..=d2).filter(|w| d2 % w == 0) {
            if (d1 / u) * (d2 / w) != n {
                continue;
            }
            let pts = group.diagonal_subgroup(u, w);
            if seen.insert(pts.clone()) {
                let gens = vec![group.mul(&g1, u as i64), group.mul(&g2, w as i64)];
                out.push((gens, pts));
            }
        }
    }
    for p in group.points() {
        if group.point_order(p) == Some(n) {
            let pts = subgroup_and_cosets(group.curve(), &[*p], None).expect("on curve");
            if seen.insert(pts.clone()) {
                out.push((vec![*p], pts));
            }
        }
    }
    out
}

/// First `(E1, b)` with `|E1| = n`, `<b> ∩ E1 = {O}`, `ord(b) > m` whose coset
/// code passes the zero-sum scan.
fn first_coset_code(group: &CurveGroup, n: u64, m: u32, opts: &RecipeOptions) -> Result<Certified> {
    let strict = RecipeOptions {
        require_mds: true,
        ..*opts
    };
    let mut last_err = None;
    for (gens, pts) in subgroups_of_order(group, n) {
        let set: HashSet<CurvePoint> = pts.iter().copied().collect();
        let mut cosets_seen = HashSet::new();
        for b in group.points() {
            if set.contains(b) || group.point_order(b).unwrap_or(0) <= m as u64 {
                continue;
            }
            let key = pts.iter().map(|p| group.add(b, p)).min().expect("nonempty");
            if cosets_seen.contains(&key) || meets_subgroup(group, b, &set) {
                continue;
            }
            cosets_seen.insert(key);
            match coset_mds(group, &gens, &[*b], m, &strict) {
                Ok(c) => return Ok(c),
                Err(e @ ConstructionError::NotMds { .. }) => last_err = Some(e),
                Err(e) => return Err(e),
            }
        }
    }
    Err(last_err.unwrap_or_else(|| {
        ConstructionError::SubgroupNotFound(format!(
            "no subgroup of order {n} with a suitable coset on a group of shape {:?}",
            group.structure()
        ))
    }))
}

/// Curves with `order` points, one per admissible group shape (cyclic first).
fn curves_by_shape(field: &FiniteField, order: u64, opts: &RecipeOptions) -> Result<Vec<Curve>> {
    let q = field.order() as u64;
    let shapes = admissible_structures(q, order)?;
    if shapes.is_empty() {
        return Err(ConstructionError::NoAdmissibleCurve(format!(
            "no elliptic curve over F_{q} has {order} points"
        )));
    }
    let mut curves = Vec::new();
    for shape in shapes {
        match find_curve_with_order(field, order, Some(shape), opts.search_budget()) {
            Ok(c) => curves.push(c),
            Err(GroupError::BudgetExhausted { .. }) => {}
            Err(e) => return Err(e.into()),
        }
    }
    Ok(curves)
}

/// A curve with `order` points and a coset code of length `n`, dimension `m`.
pub fn coset_recipe(
    field: &FiniteField,
    order: u64,
    n: u64,
    m: u32,
    opts: &RecipeOptions,
) -> Result<Certified> {
    if order % n != 0 {
        return precondition(format!("n = {n} must divide N = {order}"));
    }
    let curves = curves_by_shape(field, order, opts)?;
    if curves.is_empty() {
        return Err(ConstructionError::NoCurveFound(format!("order {order}")));
    }
    let mut last = None;
    for curve in curves {
        let group = CurveGroup::new(&curve)?;
        match first_coset_code(&group, n, m, opts) {
            Ok(mut c) => {
                c.record.recipe = "coset".into();
                c.record.params.insert("q".into(), json!(field.order()));
                c.record.params.insert("N".into(), json!(order));
                c.record.params.insert("n".into(), json!(n));
                return Ok(c);
            }
            Err(e) => last = Some(e),
        }
    }
    Err(last.expect("at least one curve"))
}

/// Splits a group of order `l1 * l2` (coprime) into `E1` = the `l1`-torsion
/// and a representative of maximal order in the `l2`-torsion.
fn coprime_split(
    group: &CurveGroup,
    l1: u64,
    l2: u64,
    m: u32,
    opts: &RecipeOptions,
) -> Result<Certified> {
    let e1: Vec<CurvePoint> = group
        .points()
        .iter()
        .filter(|p| l1 % group.point_order(p).unwrap() == 0)
        .copied()
        .collect();
    let b = group
        .points()
        .iter()
        .filter(|p| l2 % group.point_order(p).unwrap() == 0)
        .max_by_key(|p| (group.point_order(p).unwrap(), std::cmp::Reverse(**p)))
        .copied()
        .expect("identity qualifies");
    if group.point_order(&b).unwrap() <= m as u64 {
        return Err(ConstructionError::SubgroupNotFound(format!(
            "no point of order > {m} in the {l2}-part"
        )));
    }
    coset_mds(group, &e1, &[b], m, opts)
}

fn split_on_order(
    field: &FiniteField,
    order: u64,
    l1: u64,
    m: u32,
    opts: &RecipeOptions,
) -> Result<Certified> {
    let curves = curves_by_shape(field, order, opts)?;
    let mut last = ConstructionError::NoCurveFound(format!("order {order}"));
    for curve in curves {
        let group = CurveGroup::new(&curve)?;
        match coprime_split(&group, l1, order / l1, m, opts) {
            Ok(c) => return Ok(c),
            Err(e) => last = e,
        }
    }
    Err(last)
}

/// `|E| = l1 l2` with coprime `l1 < l2` prime to `q`: a coset of the order-`l1`
/// subgroup, `2 <= m <= l1 - 1`.
pub fn coprime_coset(
    field: &FiniteField,
    l1: u64,
    l2: u64,
    m: u32,
    opts: &RecipeOptions,
) -> Result<Certified> {
    let q = field.order() as u64;
    if !(l1 < l2 && gcd(l1, l2) == 1 && gcd(l1, q) == 1 && gcd(l2, q) == 1) {
        return precondition("need l1 < l2, gcd(l1, l2) = 1 and both prime to q");
    }
    if !(2..l1).contains(&(m as u64)) {
        return precondition(format!("need 2 <= m <= l1 - 1, got m = {m}"));
    }
    let mut c = split_on_order(field, l1 * l2, l1, m, opts)?;
    c.record.recipe = "coprime-coset".into();
    c.record.params = params(json!({"q": q, "l1": l1, "l2": l2, "m": m}));
    Ok(c)
}

/// Length `n` with `6 <= n <= q^(1/4)`, `gcd(n, q) = 1`, `2 <= m <= n/2`, from
/// a seeded search for a curve with `n | N` and `gcd(n, N/n) = 1`.
pub fn coprime_length(
    field: &FiniteField,
    n: u64,
    m: u32,
    opts: &RecipeOptions,
) -> Result<Certified> {
    let q = field.order() as u64;
    if n < 6 || n.pow(4) > q || gcd(n, q) != 1 {
        return precondition(format!(
            "need 6 <= n <= q^(1/4) and gcd(n, q) = 1, got n = {n}"
        ));
    }
    if m < 2 || m as u64 > n / 2 {
        return precondition(format!("need 2 <= m <= n/2, got m = {m}"));
    }
    let orders = admissible_orders(q)?;
    let wanted: BTreeSet<u64> = orders
        .into_iter()
        .filter(|&nn| nn % n == 0 && gcd(n, nn / n) == 1)
        .collect();
    if wanted.is_empty() {
        return Err(ConstructionError::NoAdmissibleCurve(format!(
            "no admissible order N with n | N and gcd(n, N/n) = 1 over F_{q}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let elements: Vec<FieldElement> = field.elements().collect();
    let mut attempts = 0;
    while attempts < opts.curve_budget {
        attempts += 1;
        let a: [FieldElement; 5] = std::array::from_fn(|_| *elements.choose(&mut rng).unwrap());
        let Ok(curve) = Curve::weierstrass(field, a) else {
            continue;
        };
        let order = curve.count_points()?;
        if !wanted.contains(&order) {
            continue;
        }
        let group = CurveGroup::new(&curve)?;
        if let Ok(mut c) = coprime_split(&group, n, order / n, m, opts) {
            c.record.recipe = "coprime-length".into();
            c.record.params = params(json!({"q": q, "n": n, "m": m}));
            c.record
                .notes
                .push(format!("curve found after {attempts} draws"));
            return Ok(c);
        }
    }
    Err(ConstructionError::NotFound { attempts })
}

/// `p` an odd prime, `n = floor(sqrt p)`, a curve with `n(n+1)` points.
/// Length `n` (or `n + 1` when `longer`) and dimension `k`, `2 <= k <= n/2`.
pub fn sqrt_p_length(p: u32, k: u32, longer: bool, opts: &RecipeOptions) -> Result<Certified> {
    if p == 2 || !is_prime(p as u64) {
        return precondition(format!("{p} is not an odd prime"));
    }
    let n = isqrt(p as u64);
    if k < 2 || k as u64 > n / 2 {
        return precondition(format!(
            "need 2 <= k <= floor(sqrt p)/2 = {}, got k = {k}",
            n / 2
        ));
    }
    let field = FiniteField::prime(p)?;
    let order = n * (n + 1);
    let (l1, _) = if longer { (n + 1, n) } else { (n, n + 1) };
    let mut c = split_on_order(&field, order, l1, k, opts)?;
    c.record.recipe = "sqrt-p-length".into();
    c.record.params = params(json!({"p": p, "k": k, "longer": longer}));
    Ok(c)
}

/// Curves `y^2 = x^3 + 1` (`p = 2 mod 3`) or `y^2 = x^3 + x` (`p = 3 mod 4`)
/// over `F_{p^e}`, an order-`big_n` cyclic subgroup and a coset of it.
pub fn supersingular_recipe(
    p: u32,
    e: u32,
    big_n: u64,
    k: u32,
    opts: &RecipeOptions,
) -> Result<Certified> {
    if p == 2 || !is_prime(p as u64) || !(p % 3 == 2 || p % 4 == 3) {
        return precondition(format!("p = {p} must be an odd prime, 2 mod 3 or 3 mod 4"));
    }
    let field = FiniteField::new(p, e, None)?;
    let pe = (p as u64).pow(e);
    let (order, bound_ok) = if e % 2 == 1 {
        (pe + 1, big_n * big_n < pe + 1)
    } else {
        let half = (p as i64).pow(e / 2);
        let r = (half - if (e / 2) % 2 == 0 { 1 } else { -1 }) as u64;
        (r * r, big_n < r)
    };
    if big_n == 0 || order % big_n != 0 {
        return precondition(format!("N = {big_n} does not divide {order}"));
    }
    if !bound_ok {
        return precondition(format!(
            "N = {big_n} is too large for a group of order {order}"
        ));
    }
    if k == 0 || k as u64 >= big_n {
        return precondition(format!("need 1 <= k <= N - 1, got k = {k}"));
    }
    let curve = if p % 3 == 2 {
        Curve::short(&field, 0, 1)?
    } else {
        Curve::short(&field, 1, 0)?
    };
    let count = curve.count_points()?;
    if count != order {
        return Err(ConstructionError::NoCurveFound(format!(
            "{curve} has {count} points, expected {order}"
        )));
    }
    let group = CurveGroup::new(&curve)?;
    let gen = group
        .points()
        .iter()
        .find(|pt| group.point_order(pt) == Some(big_n))
        .copied()
        .ok_or_else(|| {
            ConstructionError::SubgroupNotFound(format!("no cyclic subgroup of order {big_n}"))
        })?;
    let e1 = subgroup_and_cosets(&curve, &[gen], None)?;
    let e1_set: HashSet<CurvePoint> = e1.iter().copied().collect();
    let strict = RecipeOptions {
        require_mds: true,
        ..*opts
    };
    for b in group.points() {
        if e1_set.contains(b)
            || group.point_order(b).unwrap() <= k as u64
            || meets_subgroup(&group, b, &e1_set)
        {
            continue;
        }
        match coset_mds(&group, &[gen], &[*b], k, &strict) {
            Ok(mut c) => {
                c.record.recipe = "supersingular".into();
                c.record.params = params(json!({"p": p, "e": e, "N": big_n, "k": k}));
                return Ok(c);
            }
            Err(ConstructionError::NotMds { .. }) => continue,
            Err(err) => return Err(err),
        }
    }
    Err(ConstructionError::SubgroupNotFound(format!(
        "no coset of the order-{big_n} subgroup meets the coset conditions for k = {k}"
    )))
}

fn params(v: Value) -> BTreeMap<String, Value> {
    match v {
        Value::Object(map) => map.into_iter().collect(),
        _ => BTreeMap::new(),
    }
}

/// Attempts made by the zero-sum evaluation-set search of the self-dual
/// pipeline.
pub const SELFDUAL_SET_ATTEMPTS: u64 = 100_000;

/// Random `n`-subsets of affine points summing to `O` until one has no
/// zero-sum `m`-subset.
fn zero_sum_evaluation_set(
    group: &CurveGroup,
    n: usize,
    m: usize,
    seed: u64,
    budget: u64,
) -> Result<Option<Vec<CurvePoint>>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut affine: Vec<CurvePoint> = group.points()[1..].to_vec();
    if affine.len() < n {
        return Ok(None);
    }
    for _ in 0..SELFDUAL_SET_ATTEMPTS {
        affine.shuffle(&mut rng);
        let mut chosen = affine[..n - 1].to_vec();
        let last = group.neg(&group.sum(&chosen));
        if last.is_infinity() || chosen.contains(&last) {
            continue;
        }
        chosen.push(last);
        if zero_sum_subset(group, &chosen, m, budget)?.is_none() {
            chosen.sort();
            return Ok(Some(chosen));
        }
    }
    Ok(None)
}

/// Traces admitted by the self-dual construction over `F_{2^(s1 s2)}`, in
/// order of increasing `|beta|`.
pub fn selfdual_betas(s1: u32, s2: u32) -> Result<Vec<i64>> {
    let q = 1u64 << (s1 * s2);
    let modulus = (1i64 << s1) - 1;
    let mut betas: Vec<i64> = admissible_traces(q)?
        .into_iter()
        .map(|t| t.1)
        .filter(|&b| b.rem_euclid(8) == 1 && (2 - b).rem_euclid(modulus) == 0)
        .collect();
    betas.sort_by_key(|b| (b.abs(), *b));
    Ok(betas)
}

/// Self-dual code from a coset `b + E1` on a curve with cyclic group of
/// order `2^h2 L` over `F_{2^(s1 s2)}`; `n = 2^t L'`, `m = n / 2`.
///
/// When the coset fails the zero-sum scan and `fallback` is set, the
/// evaluation set is instead a seeded random zero-sum `n`-set with no
/// zero-sum `m`-subset.
pub fn selfdual_pipeline(
    s1: u32,
    s2: u32,
    t: u32,
    l_prime: u64,
    fallback: bool,
    opts: &RecipeOptions,
) -> Result<Certified> {
    if s1 == 0 || s2 == 0 || s1 * s2 > 16 {
        return precondition("need s1, s2 >= 1 and s1 * s2 <= 16");
    }
    if t == 0 {
        return precondition("need t >= 1");
    }
    if l_prime % 2 == 0 {
        return precondition(format!("L' = {l_prime} must be odd"));
    }
    let q = 1u64 << (s1 * s2);
    let field = FiniteField::new(2, s1 * s2, None)?;
    let beta = *selfdual_betas(s1, s2)?
        .first()
        .ok_or(ConstructionError::NoAdmissibleBeta { q })?;
    let order = (q as i64 + 1 - beta) as u64;
    let h2 = valuation(2, order);
    let l = order >> h2;
    if l % l_prime != 0 {
        return precondition(format!("L' = {l_prime} does not divide L = {l}"));
    }
    if t > h2 - 1 {
        return precondition(format!("t = {t} exceeds h2 - 1 = {}", h2 - 1));
    }
    let shape = GroupStructure { d1: 1, d2: order };
    let curve = find_curve_with_order(&field, order, Some(shape), opts.search_budget())
        .map_err(|e| ConstructionError::NoCurveFound(e.to_string()))?;
    let group = CurveGroup::new(&curve)?;
    let (_, g) = group.basis();
    let theta = group.mul(&g, l as i64);
    let gens = [
        group.mul(&theta, 1 << (h2 - t)),
        group.mul(&g, (order / l_prime) as i64),
    ];
    let b = group.mul(&theta, 1 << (h2 - 1 - t));
    let n = (1usize << t) * l_prime as usize;
    let m = n / 2;

    let e1 = subgroup_and_cosets(&curve, &gens, None)?;
    let mut points: Vec<CurvePoint> = e1.iter().map(|p| group.add(&b, p)).collect();
    points.sort();
    let mut notes = vec![format!(
        "beta = {beta}, N = {order} = 2^{h2} * {l}, b = 2^{} theta",
        h2 - 1 - t
    )];
    let coset_code = build_code(&curve, &points, m as u32)?;
    let coset_scan = zero_sum_subset(&group, &points, m, opts.budget)?;
    let coset_matrix = mds_check_matrix(&coset_code, opts.budget)?;
    assert_eq!(coset_scan.is_none(), coset_matrix, "MDS checkers disagree");
    notes.push(format!("coset b + E1 is MDS: {coset_matrix}"));

    let mut evaluation = "coset";
    let mut witness = coset_scan;
    if witness.is_some() && fallback {
        if let Some(found) = zero_sum_evaluation_set(&group, n, m, opts.seed, opts.budget)? {
            points = found;
            witness = None;
            evaluation = "zero-sum search";
            notes.push("evaluation set from the seeded zero-sum search".to_string());
        } else {
            notes.push(format!(
                "zero-sum search failed after {SELFDUAL_SET_ATTEMPTS} attempts"
            ));
        }
    }
    if let (Some(w), true) = (&witness, opts.require_mds) {
        let pts: Vec<CurvePoint> = w.iter().map(|&i| points[i]).collect();
        return Err(ConstructionError::NotMds {
            witness: format_points(&curve, &pts),
        });
    }
    let code = build_code(&curve, &points, m as u32)?;
    let selfdual = selfdualize(&code, opts.seed)?;
    let report = invariant_report(&selfdual, opts.budget);
    let mut record = ConstructionRecord::new(
        "selfdual",
        json!({
            "s1": s1, "s2": s2, "t": t, "Lp": l_prime, "fallback": fallback,
            "beta": beta, "evaluation": evaluation,
        }),
        opts.seed,
    );
    record.notes = notes;
    Ok(Certified {
        code: selfdual,
        report,
        record,
        curve_order: Some(order),
        group: Some(group.structure()),
        group_mds: Some(witness.is_none()),
    })
}

/// Twisted Reed-Solomon code on `{1 + eta x^k, x, ..., x^(k-1)}`.
#[derive(Debug, Clone)]
pub struct TwistedRs {
    pub certified: Certified,
    /// No `k`-subset `I` of `alpha` has `(-1)^k eta prod(alpha_I) = 1`;
    /// equivalent to MDS.
    pub mds_condition: bool,
    /// No `k`-subset has `eta = prod(alpha_I)`.
    pub literal_product_condition: bool,
}

fn distinct(elems: &[FieldElement]) -> bool {
    let set: HashSet<_> = elems.iter().collect();
    set.len() == elems.len()
}

/// Scans all `k`-subsets of `alpha`, returning `(mds_condition,
/// literal_product_condition)`.
pub fn twisted_rs_conditions(
    field: &FiniteField,
    alpha: &[FieldElement],
    eta: FieldElement,
    k: usize,
) -> (bool, bool) {
    let sign = if k % 2 == 0 {
        field.one()
    } else {
        field.neg(field.one())
    };
    let target = field.inv(field.mul(sign, eta)).expect("eta is nonzero");
    let (mut corrected, mut literal) = (true, true);
    let mut subsets = Combinations::new(alpha.len(), k);
    while let Some(s) = subsets.next_subset() {
        let prod = s
            .iter()
            .fold(field.one(), |acc, &i| field.mul(acc, alpha[i]));
        corrected &= prod != target;
        literal &= prod != eta;
    }
    (corrected, literal)
}

pub fn twisted_rs_generator(
    field: &FiniteField,
    alpha: &[FieldElement],
    eta: FieldElement,
    k: usize,
) -> Matrix {
    let n = alpha.len();
    let mut rows = Vec::with_capacity(k);
    rows.push(
        alpha
            .iter()
            .map(|&a| field.add(field.one(), field.mul(eta, field.pow(a, k as u64))))
            .collect(),
    );
    for i in 1..k {
        rows.push(alpha.iter().map(|&a| field.pow(a, i as u64)).collect());
    }
    Matrix::from_rows(field, n, &rows)
}

pub fn twisted_rs(
    field: &FiniteField,
    alpha: &[FieldElement],
    eta: FieldElement,
    k: usize,
    opts: &RecipeOptions,
) -> Result<TwistedRs> {
    let n = alpha.len();
    if !distinct(alpha) {
        return Err(ConstructionError::DuplicateEvaluationPoints);
    }
    if alpha.iter().any(|a| a.is_zero()) || eta.is_zero() {
        return precondition("alpha and eta must be nonzero");
    }
    if k == 0 || k >= n || n as u64 > field.order() as u64 - 1 {
        return precondition(format!(
            "need 1 <= k <= n - 1 and n <= q - 1 (n = {n}, k = {k})"
        ));
    }
    let code = LinearCode::new(twisted_rs_generator(field, alpha, eta, k))?;
    let (mds_condition, literal_product_condition) = twisted_rs_conditions(field, alpha, eta, k);
    let report = invariant_report(&code, opts.budget);
    if mds_condition {
        assert_eq!(
            report.is_mds,
            Some(true),
            "twisted RS condition implies MDS"
        );
    }
    let record = ConstructionRecord::new(
        "twisted-rs",
        json!({
            "alpha": alpha.iter().map(|&a| field.format_element(a)).collect::<Vec<_>>(),
            "eta": field.format_element(eta),
            "k": k,
        }),
        opts.seed,
    );
    Ok(TwistedRs {
        certified: Certified {
            code,
            report,
            record,
            curve_order: None,
            group: None,
            group_mds: None,
        },
        mds_condition,
        literal_product_condition,
    })
}

/// Reed-Solomon code: evaluations of `1, x, ..., x^(k-1)`.
pub fn rs_baseline(field: &FiniteField, points: &[FieldElement], k: usize) -> Result<LinearCode> {
    let n = points.len();
    if !distinct(points) {
        return Err(ConstructionError::DuplicateEvaluationPoints);
    }
    if k == 0 || k > n || n as u64 > field.order() as u64 {
        return precondition(format!("need 1 <= k <= n <= q (n = {n}, k = {k})"));
    }
    let rows: Vec<Vec<FieldElement>> = (0..k)
        .map(|i| points.iter().map(|&a| field.pow(a, i as u64)).collect())
        .collect();
    Ok(LinearCode::new(Matrix::from_rows(field, n, &rows))?)
}

/// Greedy randomized search for `n` affine points of a genus-2 curve whose
/// one-point code `C(P, m P0)` is MDS: points are added in a seeded random
/// order while every `k`-subset stays independent, restarting when stuck.
pub fn genus2_search(
    curve: &Curve,
    n: usize,
    m: u32,
    max_restarts: u64,
    opts: &RecipeOptions,
) -> Result<Certified> {
    if curve.genus() != 2 {
        return precondition("genus-2 curve required");
    }
    let points = curve.enumerate_points()?;
    let affine: Vec<CurvePoint> = points[1..].to_vec();
    if m < 3 || m as usize >= n || n > affine.len() {
        return precondition(format!(
            "need 2 < m < n <= {} affine points (m = {m}, n = {n})",
            affine.len()
        ));
    }
    let basis = rr_basis(curve, m);
    let k = basis.dimension();
    let columns: Vec<Vec<FieldElement>> = affine
        .iter()
        .map(|p| {
            basis
                .monomials
                .iter()
                .map(|&mono| evaluate_function(curve, mono, p).expect("affine"))
                .collect()
        })
        .collect();
    let field = curve.field();
    let independent = |cols: &[usize]| -> bool {
        let rows: Vec<Vec<FieldElement>> = cols.iter().map(|&c| columns[c].clone()).collect();
        Matrix::from_rows(field, k, &rows).rank() == cols.len()
    };
    let advisory = (m as u128) * binomial(n as u64, m as u64 - 2) < points.len() as u128;

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut order: Vec<usize> = (0..affine.len()).collect();
    for attempt in 1..=max_restarts {
        order.shuffle(&mut rng);
        let mut chosen: Vec<usize> = Vec::with_capacity(n);
        for &cand in &order {
            if chosen.len() == n {
                break;
            }
            let ok = if chosen.len() < k {
                let mut with = chosen.clone();
                with.push(cand);
                independent(&with)
            } else {
                let mut sub = Combinations::new(chosen.len(), k - 1);
                let mut all = true;
                let mut cols = Vec::with_capacity(k);
                while let Some(s) = sub.next_subset() {
                    cols.clear();
                    cols.extend(s.iter().map(|&i| chosen[i]));
                    cols.push(cand);
                    if !independent(&cols) {
                        all = false;
                        break;
                    }
                }
                all
            };
            if ok {
                chosen.push(cand);
            }
        }
        if chosen.len() < n {
            continue;
        }
        chosen.sort();
        let pts: Vec<CurvePoint> = chosen.iter().map(|&i| affine[i]).collect();
        let code = build_code(curve, &pts, m)?;
        if !mds_check_matrix(&code, opts.budget)? {
            continue;
        }
        let report = invariant_report(&code, opts.budget);
        let mut record = ConstructionRecord::new(
            "genus2",
            json!({"n": n, "m": m, "max_restarts": max_restarts}),
            opts.seed,
        );
        record.notes.push(format!(
            "counting bound m * C(n, m - 2) < N holds: {advisory}"
        ));
        record.notes.push(format!("found on attempt {attempt}"));
        return Ok(Certified {
            code,
            report,
            record,
            curve_order: Some(points.len() as u64),
            group: None,
            group_mds: None,
        });
    }
    Err(ConstructionError::NotFound {
        attempts: max_restarts,
    })
}
