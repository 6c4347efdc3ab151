//! Aguiar-stable triples and bounds of stabilization.
//!
//! A triple `(alpha, beta; gamma)` is Aguiar-stable when every shifted
//! sequence `d -> a_{lambda+d alpha, mu+d beta}^{nu+d gamma}` is eventually
//! constant. A bound of stabilization is an explicit `d0` after which it is.
//!
//! The bound formulas here index partitions from 1 (`nu_1` is the first
//! part). Entries past the length read as 0, and a sum whose upper index is
//! below its lower index is empty. Most of them depend on the dimensions
//! `(n1, n2)` of two auxiliary vector spaces through those index ranges; see
//! [`BoundContext`].
//!
//! A finite scan is evidence only. [`check_stable_hypothesis`] confirms
//! `a_{d alpha, d beta}^{d gamma} = 1` for `d <= dmax`, which is the
//! hypothesis of the stabilization theorem, not a proof of it.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::characters::max_degree;
use crate::error::{Error, Result};
use crate::heisenberg::{aguiar_formula, AguiarQuery};
use crate::partitions::{add_scaled, Partition};

/// The direction `(alpha, beta; gamma)` of a shifted sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Triple {
    pub alpha: Partition,
    pub beta: Partition,
    pub gamma: Partition,
}

impl Triple {
    pub fn new(alpha: Partition, beta: Partition, gamma: Partition) -> Self {
        Triple { alpha, beta, gamma }
    }

    fn rows(a: usize, b: usize, c: &[usize]) -> Self {
        Triple::new(
            Partition::row(a),
            Partition::row(b),
            Partition::new(c.to_vec()).expect("literal partition"),
        )
    }

    /// `((1),(1);(1))`.
    pub fn murnaghan() -> Self {
        Self::rows(1, 1, &[1])
    }

    /// `((2),(1);(2))`.
    pub fn two_one_two() -> Self {
        Self::rows(2, 1, &[2])
    }

    /// `((2),(1);(3))`.
    pub fn two_one_three() -> Self {
        Self::rows(2, 1, &[3])
    }

    /// The five explicitly known Aguiar-stable triples.
    pub fn known_stable() -> Vec<Triple> {
        vec![
            Self::murnaghan(),
            Self::two_one_two(),
            Self::rows(2, 1, &[1, 1]),
            Self::two_one_three(),
            Self::rows(2, 1, &[2, 1]),
        ]
    }

    /// `a_{lambda + d alpha, mu + d beta}^{nu + d gamma}` as a query.
    pub fn shifted(&self, base: &AguiarQuery, d: usize) -> AguiarQuery {
        AguiarQuery::new(
            add_scaled(&base.lambda, &self.alpha, d),
            add_scaled(&base.mu, &self.beta, d),
            add_scaled(&base.nu, &self.gamma, d),
        )
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{};{})", self.alpha, self.beta, self.gamma)
    }
}

/// Dimensions `(n1, n2)` of the two auxiliary spaces, both at least 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BoundContext {
    n1: usize,
    n2: usize,
}

impl BoundContext {
    pub fn new(n1: usize, n2: usize) -> Result<Self> {
        if n1 < 2 || n2 < 2 {
            return Err(Error::Inadmissible {
                n1,
                n2,
                reason: "both dimensions must be at least 2".into(),
            });
        }
        Ok(BoundContext { n1, n2 })
    }

    pub fn n1(&self) -> usize {
        self.n1
    }

    pub fn n2(&self) -> usize {
        self.n2
    }

    /// `n1 n2 + n1 + n2`, the dimension of `V1 + V1 (x) V2 + V2`.
    pub fn total_dimension(&self) -> usize {
        self.n1 * self.n2 + self.n1 + self.n2
    }

    pub fn check(&self, base: &AguiarQuery, triple: &Triple) -> Result<()> {
        let fail = |reason: String| {
            Err(Error::Inadmissible {
                n1: self.n1,
                n2: self.n2,
                reason,
            })
        };
        let need1 = base.lambda.len().max(triple.alpha.len());
        let need2 = base.mu.len().max(triple.beta.len());
        let need = base.nu.len().max(triple.gamma.len());
        if self.n1 < need1 {
            return fail(format!("n1 must be at least {need1}"));
        }
        if self.n2 < need2 {
            return fail(format!("n2 must be at least {need2}"));
        }
        if self.total_dimension() < need {
            return fail(format!("n1*n2 + n1 + n2 must be at least {need}"));
        }
        Ok(())
    }

    /// The admissible context with the smallest `n1 + n2`, ties going to the
    /// smaller `n1`.
    pub fn minimal(base: &AguiarQuery, triple: &Triple) -> Self {
        let low1 = base.lambda.len().max(triple.alpha.len()).max(2);
        let low2 = base.mu.len().max(triple.beta.len()).max(2);
        let need = base.nu.len().max(triple.gamma.len());
        (low1 + low2..)
            .flat_map(|sum| (low1..=sum - low2).map(move |n1| (n1, sum - n1)))
            .map(|(n1, n2)| BoundContext { n1, n2 })
            .find(|ctx| ctx.total_dimension() >= need)
            .expect("total dimension grows without bound")
    }
}

impl fmt::Display for BoundContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.n1, self.n2)
    }
}

/// `p_j` with 1-based `j`; zero outside `1..=len`.
fn at(p: &Partition, j: i64) -> i64 {
    if j < 1 {
        0
    } else {
        p.get(j as usize - 1) as i64
    }
}

/// `sum_{j=from}^{to} p_j`, empty when `to < from`.
fn span(p: &Partition, from: i64, to: i64) -> i64 {
    (from.max(1)..=to).map(|j| at(p, j)).sum()
}

fn clamp(value: i64) -> u64 {
    value.max(0) as u64
}

/// Smallest integer `d` with `2d >= value`.
fn half_up(value: i64) -> i64 {
    (value + 1).div_euclid(2)
}

/// Ying's bound for `a_{lambda+(d), mu+(d)}^{nu+(d)}`: the ceiling of
/// `(3|nu| - |lambda| - |mu| - lambda_1 - mu_1 - nu_1 + lambda_2 + mu_2 + nu_2 - 1) / 2`.
pub fn ying_coefficient_bound(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    let w = |p: &Partition| p.weight() as i64;
    let value = 3 * w(nu) - w(lambda) - w(mu) - at(lambda, 1) - at(mu, 1) - at(nu, 1)
        + at(lambda, 2)
        + at(mu, 2)
        + at(nu, 2)
        - 1;
    clamp(half_up(value))
}

/// Ying's onset for the whole module `(M_{lambda+(d)} # M_{mu+(d)})_{i+d}`:
/// `3i - |lambda| - |mu| - lambda_1 - mu_1 + lambda_2 + mu_2`.
pub fn ying_module_bound(lambda: &Partition, mu: &Partition, i: usize) -> u64 {
    let value =
        3 * i as i64 - lambda.weight() as i64 - mu.weight() as i64 - at(lambda, 1) - at(mu, 1)
            + at(lambda, 2)
            + at(mu, 2);
    clamp(value)
}

fn murnaghan_raw(lambda: &Partition, mu: &Partition, nu: &Partition, ctx: &BoundContext) -> i64 {
    let (n1, n2) = (ctx.n1 as i64, ctx.n2 as i64);
    -at(lambda, 1) - at(mu, 1) + at(nu, 1) + 2 * at(nu, 2) + span(nu, 3, n1 + n2 + 1)
}

/// Bound for the triple `((1),(1);(1))` from the destabilizing subgroup
/// `(1,0,..,0 | 0,1,0,..,0)`.
pub fn murnaghan_bound(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    ctx: &BoundContext,
) -> Result<u64> {
    let base = AguiarQuery::new(lambda.clone(), mu.clone(), nu.clone());
    ctx.check(&base, &Triple::murnaghan())?;
    Ok(clamp(murnaghan_raw(lambda, mu, nu, ctx)))
}

/// Bound for `((1),(1);(1))` from the subgroup `(2,0,1,..,1 | 0,2,1,..,1)`,
/// whose weight on the invariant section is 2: half the maximal `-mu`
/// value, rounded up.
pub fn murnaghan_bound_improved(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    ctx: &BoundContext,
) -> Result<u64> {
    let base = AguiarQuery::new(lambda.clone(), mu.clone(), nu.clone());
    ctx.check(&base, &Triple::murnaghan())?;
    let (n1, n2) = (ctx.n1 as i64, ctx.n2 as i64);
    let value = -2 * at(lambda, 1) - span(lambda, 3, n1) - 2 * at(mu, 1) - span(mu, 3, n2)
        + 2 * at(nu, 1)
        + 4 * at(nu, 2)
        + 3 * span(nu, 3, n1 + n2 - 2)
        + 2 * span(nu, n1 + n2 - 1, n1 * n2 - n1 - n2 + 5)
        + span(nu, n1 * n2 - n1 - n2 + 6, n1 * n2 + n1 + n2 - 3);
    Ok(clamp(half_up(value)))
}

/// `mu_1 + sum_{k=1}^{n2} nu_{k+1} - sum_{k=1}^{n1} nu_{N+1-k}` with
/// `N = n1 n2 + n1 + n2`; the contribution of the orbit where the
/// `V1^*` component vanishes.
fn second_orbit_term(mu: &Partition, nu: &Partition, ctx: &BoundContext) -> i64 {
    let (n1, n2) = (ctx.n1 as i64, ctx.n2 as i64);
    let total = ctx.total_dimension() as i64;
    at(mu, 1) + span(nu, 2, n2 + 1) - span(nu, total + 1 - n1, total)
}

/// Bound for the triple `((2),(1);(2))`.
pub fn t22_bound(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    ctx: &BoundContext,
) -> Result<u64> {
    let base = AguiarQuery::new(lambda.clone(), mu.clone(), nu.clone());
    ctx.check(&base, &Triple::two_one_two())?;
    let (n1, n2) = (ctx.n1 as i64, ctx.n2 as i64);
    let first = -at(mu, 1) + at(nu, 1) + 2 * at(nu, 2) + span(nu, 3, n1 + n2 + 1);
    let second = second_orbit_term(mu, nu, ctx);
    Ok(clamp(-at(lambda, 1) + first.max(second)))
}

/// Bound for the triple `((2),(1);(3))`.
pub fn t23_bound(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    ctx: &BoundContext,
) -> Result<u64> {
    let base = AguiarQuery::new(lambda.clone(), mu.clone(), nu.clone());
    ctx.check(&base, &Triple::two_one_three())?;
    let (n1, n2) = (ctx.n1 as i64, ctx.n2 as i64);
    let first = -at(lambda, 1) + second_orbit_term(mu, nu, ctx);
    let third_orbit = 3 * at(lambda, 1) + 2 * span(lambda, 2, n1) - at(mu, 1) + 2 * at(mu, 2)
        - 2 * at(nu, 1)
        + at(nu, 2)
        - span(nu, n2 + 1, n2 + n1 - 1)
        - 2 * span(nu, n1 + n2, n1 * n2 + 1)
        - 3 * span(nu, n1 * n2 + 2, n1 * n2 + n2)
        - 4 * span(nu, n1 * n2 + n2 + 1, n1 * n2 + n2 + n1 - 1)
        - 5 * at(nu, n1 * n2);
    Ok(clamp(first.max(third_orbit)))
}

/// The bound formulas that take a `(lambda, mu, nu)` triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundKind {
    Ying,
    /// [`ying_module_bound`] with `i = |nu|`.
    YingModule,
    Murnaghan,
    MurnaghanImproved,
    T22,
    T23,
}

impl BoundKind {
    pub const ALL: [BoundKind; 6] = [
        BoundKind::Ying,
        BoundKind::YingModule,
        BoundKind::Murnaghan,
        BoundKind::MurnaghanImproved,
        BoundKind::T22,
        BoundKind::T23,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundKind::Ying => "ying",
            BoundKind::YingModule => "ying-module",
            BoundKind::Murnaghan => "murnaghan",
            BoundKind::MurnaghanImproved => "murnaghan-improved",
            BoundKind::T22 => "t22",
            BoundKind::T23 => "t23",
        }
    }

    /// The direction whose sequences this bound controls.
    pub fn triple(self) -> Triple {
        match self {
            BoundKind::Ying
            | BoundKind::YingModule
            | BoundKind::Murnaghan
            | BoundKind::MurnaghanImproved => Triple::murnaghan(),
            BoundKind::T22 => Triple::two_one_two(),
            BoundKind::T23 => Triple::two_one_three(),
        }
    }

    pub fn uses_context(self) -> bool {
        !matches!(self, BoundKind::Ying | BoundKind::YingModule)
    }

    /// Evaluates the bound; `ctx = None` picks [`BoundContext::minimal`].
    pub fn evaluate(self, base: &AguiarQuery, ctx: Option<BoundContext>) -> Result<u64> {
        let (l, m, n) = (&base.lambda, &base.mu, &base.nu);
        let ctx = ctx.unwrap_or_else(|| BoundContext::minimal(base, &self.triple()));
        match self {
            BoundKind::Ying => Ok(ying_coefficient_bound(l, m, n)),
            BoundKind::YingModule => Ok(ying_module_bound(l, m, n.weight())),
            BoundKind::Murnaghan => murnaghan_bound(l, m, n, &ctx),
            BoundKind::MurnaghanImproved => murnaghan_bound_improved(l, m, n, &ctx),
            BoundKind::T22 => t22_bound(l, m, n, &ctx),
            BoundKind::T23 => t23_bound(l, m, n, &ctx),
        }
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BoundKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = BoundKind::ALL.iter().map(|k| k.name()).collect();
                Error::InvalidArgument(format!(
                    "unknown bound {s:?}; expected one of {}",
                    names.join(", ")
                ))
            })
    }
}

/// Outcome of [`check_stable_hypothesis`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypothesisCheck {
    pub holds: bool,
    /// `a_{d alpha, d beta}^{d gamma}` for `d = 1..=dmax`.
    pub values: Vec<u64>,
    /// First `(d, value)` with value different from 1.
    pub witness: Option<(usize, u64)>,
}

/// Checks `a_{d alpha, d beta}^{d gamma} = 1` for `d = 1..=dmax`.
pub fn check_stable_hypothesis(triple: &Triple, dmax: usize) -> Result<HypothesisCheck> {
    if dmax == 0 {
        return Err(Error::InvalidArgument("dmax must be at least 1".into()));
    }
    let origin = AguiarQuery::new(Partition::empty(), Partition::empty(), Partition::empty());
    let values = (1..=dmax)
        .into_par_iter()
        .map(|d| aguiar_formula(&triple.shifted(&origin, d)))
        .collect::<Result<Vec<u64>>>()?;
    let witness = values
        .iter()
        .enumerate()
        .find(|(_, &v)| v != 1)
        .map(|(idx, &v)| (idx + 1, v));
    Ok(HypothesisCheck {
        holds: witness.is_none(),
        values,
        witness,
    })
}

/// A scanned sequence `d -> a_{lambda+d alpha, mu+d beta}^{nu+d gamma}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityReport {
    pub triple: Triple,
    pub base: AguiarQuery,
    /// Values for `d = 0..=dmax`.
    pub values: Vec<u64>,
    /// Smallest `d` from which every observed value is equal.
    pub onset: usize,
    /// Set when fewer than two constant steps follow the onset.
    pub inconclusive: bool,
    /// Applicable bounds at the minimal admissible context.
    pub predictions: BTreeMap<BoundKind, u64>,
    pub context: BoundContext,
}

impl StabilityReport {
    pub fn dmax(&self) -> usize {
        self.values.len() - 1
    }

    /// True when the observed sequence is constant from `d0` on.
    pub fn constant_from(&self, d0: u64) -> bool {
        self.onset as u64 <= d0
    }
}

/// Index from which `values` is constant.
pub fn empirical_onset(values: &[u64]) -> usize {
    values
        .windows(2)
        .rposition(|w| w[0] != w[1])
        .map_or(0, |last| last + 1)
}

/// Evaluates the shifted sequence for `d = 0..=dmax` and attaches every
/// bound known for `triple`.
pub fn scan_sequence(base: &AguiarQuery, triple: &Triple, dmax: usize) -> Result<StabilityReport> {
    let top = triple.shifted(base, dmax);
    let weight = top.k().max(top.l()).max(top.i());
    let limit = max_degree();
    if weight > limit {
        return Err(Error::CostGuard { weight, limit });
    }
    let values = (0..=dmax)
        .into_par_iter()
        .map(|d| aguiar_formula(&triple.shifted(base, d)))
        .collect::<Result<Vec<u64>>>()?;
    let onset = empirical_onset(&values);
    let context = BoundContext::minimal(base, triple);
    let mut predictions = BTreeMap::new();
    for kind in BoundKind::ALL.into_iter().filter(|k| k.triple() == *triple) {
        predictions.insert(kind, kind.evaluate(base, None)?);
    }
    Ok(StabilityReport {
        triple: triple.clone(),
        base: base.clone(),
        inconclusive: dmax - onset < 2,
        values,
        onset,
        predictions,
        context,
    })
}
