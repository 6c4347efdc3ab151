//! Heisenberg products of symmetric-group modules and Aguiar coefficients.
//!
//! For `lambda ⊢ k`, `mu ⊢ l` the product `M_lambda # M_mu` lives in degrees
//! `max(k,l)..=k+l`. Its degree-`i` piece is induced to `S_i` from the Young
//! subgroup `S_{i-l} x S_{k+l-i} x S_{i-k}`, acting on `M_lambda (x) M_mu`
//! with the middle factor embedded diagonally.
//!
//! Two independent evaluations of `a_{lambda,mu}^nu` are provided:
//!
//! * [`aguiar_formula`] sums `c_{a,b}^lambda c_{e,r}^mu g_{b,e,d} c_{a,d}^t
//!   c_{t,r}^nu`. A summand vanishes unless `|a| = i-l`, `|b| = |e| = |d| =
//!   k+l-i`, `|r| = i-k` and `|t| = k`, so only those weights are visited.
//! * [`aguiar_induction`] builds the induced class function one conjugacy
//!   class at a time and pairs it with `chi^nu`.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::characters::{character_value, weighted_class_sum};
use crate::error::{Error, Result};
use crate::kronecker::kronecker_expand_shared;
use crate::lr::{lr_coefficient, lr_expand_shared};
use crate::partitions::{centralizer_order, partitions_of, split3_sized, CycleType, Partition};

/// A triple `(lambda, mu; nu)` indexing one Aguiar coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AguiarQuery {
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
}

impl AguiarQuery {
    pub fn new(lambda: Partition, mu: Partition, nu: Partition) -> Self {
        AguiarQuery { lambda, mu, nu }
    }

    pub fn k(&self) -> usize {
        self.lambda.weight()
    }

    pub fn l(&self) -> usize {
        self.mu.weight()
    }

    pub fn i(&self) -> usize {
        self.nu.weight()
    }

    /// `max(k,l) <= i <= k+l`; other queries evaluate to zero.
    pub fn is_compatible(&self) -> bool {
        let (k, l, i) = (self.k(), self.l(), self.i());
        k.max(l) <= i && i <= k + l
    }

    /// Degrees `(i-l, k+l-i, i-k)` of the three Young factors.
    pub fn block_sizes(&self) -> Option<[usize; 3]> {
        let (k, l, i) = (self.k(), self.l(), self.i());
        self.is_compatible().then(|| [i - l, k + l - i, i - k])
    }
}

fn mul5(factors: [u64; 5]) -> Result<u128> {
    factors
        .iter()
        .try_fold(1u128, |acc, &f| acc.checked_mul(u128::from(f)))
        .ok_or(Error::Overflow("Aguiar summand"))
}

/// Pairs `(x, y)` with `|x| = a`, `|y| = b` and `c_{x,y}^target > 0`.
fn lr_factorizations(target: &Partition, a: usize, b: usize) -> Vec<(Partition, Partition, u64)> {
    let mut out = Vec::new();
    for x in partitions_of(a).iter().filter(|x| target.contains(x)) {
        for y in partitions_of(b).iter().filter(|y| target.contains(y)) {
            let c = lr_coefficient(x, y, target);
            if c > 0 {
                out.push((x.clone(), y.clone(), c));
            }
        }
    }
    out
}

/// `a_{lambda,mu}^nu` from the Littlewood–Richardson/Kronecker convolution.
pub fn aguiar_formula(q: &AguiarQuery) -> Result<u64> {
    let Some([outer, middle, right]) = q.block_sizes() else {
        return Ok(0);
    };
    let left_pairs = lr_factorizations(&q.lambda, outer, middle);
    let right_pairs = lr_factorizations(&q.mu, middle, right);
    if left_pairs.is_empty() || right_pairs.is_empty() {
        return Ok(0);
    }
    let total = left_pairs
        .par_iter()
        .map(|(alpha, beta, c_lambda)| -> Result<u128> {
            let mut acc: u128 = 0;
            for (eta, rho, c_mu) in &right_pairs {
                for (delta, &g) in kronecker_expand_shared(beta, eta)?.iter() {
                    for (tau, &c_tau) in lr_expand_shared(alpha, delta).iter() {
                        if !q.nu.contains(tau) {
                            continue;
                        }
                        let c_nu = lr_coefficient(tau, rho, &q.nu);
                        if c_nu == 0 {
                            continue;
                        }
                        let term = mul5([*c_lambda, *c_mu, g, c_tau, c_nu])?;
                        acc = acc.checked_add(term).ok_or(Error::Overflow("Aguiar sum"))?;
                    }
                }
            }
            Ok(acc)
        })
        .try_reduce(
            || 0,
            |a, b| a.checked_add(b).ok_or(Error::Overflow("Aguiar sum")),
        )?;
    u64::try_from(total).map_err(|_| Error::Overflow("Aguiar coefficient"))
}

/// Value at `rho` of the character of `(M_lambda # M_mu)_i`.
fn induced_value(q: &AguiarQuery, sizes: [usize; 3], rho: &CycleType) -> Result<i128> {
    let z_rho = centralizer_order(rho)?;
    let mut total: i128 = 0;
    for (ra, rb, rc) in split3_sized(rho, sizes) {
        let z_sub = [&ra, &rb, &rc].iter().try_fold(1u128, |acc, t| {
            acc.checked_mul(centralizer_order(t)?)
                .ok_or(Error::Overflow("Young subgroup centralizer"))
        })?;
        if z_rho % z_sub != 0 {
            return Err(Error::NotDivisible {
                what: "induction weight",
                value: z_rho as i128,
                divisor: z_sub as i128,
            });
        }
        let weight =
            i128::try_from(z_rho / z_sub).map_err(|_| Error::Overflow("induction weight"))?;
        let left = character_value(&q.lambda, &ra.union(&rb))?;
        let right = character_value(&q.mu, &rb.union(&rc))?;
        let term = weight
            .checked_mul(i128::from(left) * i128::from(right))
            .ok_or(Error::Overflow("induced character"))?;
        total = total
            .checked_add(term)
            .ok_or(Error::Overflow("induced character"))?;
    }
    Ok(total)
}

/// `a_{lambda,mu}^nu` straight from the induction/restriction definition.
pub fn aguiar_induction(q: &AguiarQuery) -> Result<u64> {
    let Some(sizes) = q.block_sizes() else {
        return Ok(0);
    };
    let i = q.i();
    let terms = CycleType::all(i)
        .iter()
        .map(|rho| {
            let induced = induced_value(q, sizes, rho)?;
            let chi_nu = i128::from(character_value(&q.nu, rho)?);
            Ok(induced.checked_mul(chi_nu))
        })
        .collect::<Result<Vec<_>>>()?;
    let a = weighted_class_sum(i, terms)?;
    u64::try_from(a)
        .map_err(|_| Error::Inconsistent(format!("negative multiplicity {a} for {q:?}")))
}

/// A genuine module over the symmetric groups of several degrees: for each
/// degree, the multiplicity of each irreducible. Zero entries are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VirtualModule {
    levels: BTreeMap<usize, BTreeMap<Partition, u64>>,
}

impl VirtualModule {
    pub fn new() -> Self {
        Self::default()
    }

    /// The trivial module of `S_0`, the unit of the Heisenberg product.
    pub fn unit() -> Self {
        Self::irreducible(Partition::empty())
    }

    pub fn irreducible(lambda: Partition) -> Self {
        let mut module = Self::new();
        module
            .levels
            .entry(lambda.weight())
            .or_default()
            .insert(lambda, 1);
        module
    }

    pub fn add(&mut self, lambda: Partition, multiplicity: u64) -> Result<()> {
        if multiplicity == 0 {
            return Ok(());
        }
        let slot = self
            .levels
            .entry(lambda.weight())
            .or_default()
            .entry(lambda)
            .or_insert(0);
        *slot = slot
            .checked_add(multiplicity)
            .ok_or(Error::Overflow("module multiplicity"))?;
        Ok(())
    }

    pub fn multiplicity(&self, lambda: &Partition) -> u64 {
        self.levels
            .get(&lambda.weight())
            .and_then(|level| level.get(lambda))
            .copied()
            .unwrap_or(0)
    }

    pub fn level(&self, n: usize) -> Option<&BTreeMap<Partition, u64>> {
        self.levels.get(&n)
    }

    pub fn levels(&self) -> impl Iterator<Item = (usize, &BTreeMap<Partition, u64>)> {
        self.levels.iter().map(|(&n, level)| (n, level))
    }

    /// All `(partition, multiplicity)` terms, by degree and then in
    /// reverse lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, u64)> {
        self.levels
            .values()
            .flat_map(|level| level.iter().rev().map(|(p, &m)| (p, m)))
    }

    pub fn is_zero(&self) -> bool {
        self.levels.is_empty()
    }
}

impl fmt::Display for VirtualModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, level) in &self.levels {
            write!(f, "{n}:")?;
            for (p, m) in level.iter().rev() {
                write!(f, " {p}:{m}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// `M_lambda # M_mu`, all levels.
pub fn heisenberg_irreducible(lambda: &Partition, mu: &Partition) -> Result<VirtualModule> {
    let (k, l) = (lambda.weight(), mu.weight());
    let mut module = VirtualModule::new();
    for i in k.max(l)..=k + l {
        for nu in partitions_of(i).iter() {
            let q = AguiarQuery::new(lambda.clone(), mu.clone(), nu.clone());
            module.add(nu.clone(), aguiar_formula(&q)?)?;
        }
    }
    Ok(module)
}

/// One level of `M_lambda # M_mu`.
pub fn heisenberg_level(
    lambda: &Partition,
    mu: &Partition,
    i: usize,
) -> Result<BTreeMap<Partition, u64>> {
    let mut level = BTreeMap::new();
    for nu in partitions_of(i).iter() {
        let q = AguiarQuery::new(lambda.clone(), mu.clone(), nu.clone());
        let a = aguiar_formula(&q)?;
        if a > 0 {
            level.insert(nu.clone(), a);
        }
    }
    Ok(level)
}

/// Bilinear extension of the product to arbitrary modules.
pub fn heisenberg_product(v: &VirtualModule, w: &VirtualModule) -> Result<VirtualModule> {
    let mut out = VirtualModule::new();
    for (lambda, m) in v.terms() {
        for (mu, n) in w.terms() {
            let scale = m
                .checked_mul(n)
                .ok_or(Error::Overflow("module multiplicity"))?;
            for (nu, a) in heisenberg_irreducible(lambda, mu)?.terms() {
                let mult = a
                    .checked_mul(scale)
                    .ok_or(Error::Overflow("module multiplicity"))?;
                out.add(nu.clone(), mult)?;
            }
        }
    }
    Ok(out)
}
