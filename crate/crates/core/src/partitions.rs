//! Integer partitions and cycle types.
//!
//! Partitions are stored densely as weakly decreasing part lists. The text
//! form `[a,b,c]` (brackets, no spaces) is shared by the CLI and the table
//! cache. Enumeration is reverse lexicographic: `[4]`, `[3,1]`, `[2,2]`,
//! `[2,1,1]`, `[1,1,1,1]`.

use std::fmt;
use std::ops::Index;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use dashmap::DashMap;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
    weight: usize,
}

impl Partition {
    /// Builds a partition, rejecting zero parts and increasing sequences.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse {
                text: render(&parts),
                reason: "parts must be positive".into(),
            });
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse {
                text: render(&parts),
                reason: "parts are not weakly decreasing".into(),
            });
        }
        Ok(Self::from_sorted(parts))
    }

    pub(crate) fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        let weight = parts.iter().sum();
        Partition { parts, weight }
    }

    /// Sorts arbitrary positive parts into a partition (zeros are dropped).
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_sorted(parts)
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// A one-row partition `(n)`; empty when `n == 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self::from_sorted(vec![n])
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Zero-based part access, reading missing parts as 0.
    pub fn get(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// True if the Young diagram of `self` contains that of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(o, s)| o <= s)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.get(0);
        let parts = (1..=first)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition::from_sorted(parts)
    }

    /// Number of standard Young tableaux of this shape (hook-length formula).
    pub fn hook_dimension(&self) -> Result<u128> {
        let conj = self.conjugate();
        let mut hooks: u128 = 1;
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                let hook = (row - j - 1) + (conj.get(j) - i - 1) + 1;
                hooks = hooks
                    .checked_mul(hook as u128)
                    .ok_or(Error::Overflow("hook product"))?;
            }
        }
        Ok(factorial(self.weight)? / hooks)
    }
}

impl Index<usize> for Partition {
    type Output = usize;

    fn index(&self, i: usize) -> &usize {
        self.parts.get(i).unwrap_or(&0)
    }
}

fn render(parts: &[usize]) -> String {
    let body: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
    format!("[{}]", body.join(","))
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(&self.parts))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{}", self)
    }
}

/// Parses `"[7,3]"`, `"7,3"`, `"[]"` or `""`.
pub fn parse_partition(text: &str) -> Result<Partition> {
    let err = |reason: &str| Error::Parse {
        text: text.to_string(),
        reason: reason.to_string(),
    };
    let trimmed = text.trim();
    let inner = match (trimmed.strip_prefix('['), trimmed.strip_suffix(']')) {
        (Some(_), Some(_)) if trimmed.len() >= 2 => &trimmed[1..trimmed.len() - 1],
        (None, None) => trimmed,
        _ => return Err(err("unbalanced brackets")),
    };
    if inner.trim().is_empty() {
        return Ok(Partition::empty());
    }
    let mut parts = Vec::new();
    for token in inner.split(',') {
        let token = token.trim();
        if token.starts_with('-') {
            return Err(err("parts must be positive"));
        }
        let value: usize = token
            .parse()
            .map_err(|_| err(&format!("malformed token {token:?}")))?;
        parts.push(value);
    }
    Partition::new(parts).map_err(|e| match e {
        Error::Parse { reason, .. } => err(&reason),
        other => other,
    })
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_partition(s)
    }
}

/// All partitions of `n` in reverse lexicographic order.
pub fn all_partitions(n: usize) -> Vec<Partition> {
    partitions_of(n).to_vec()
}

/// Shared, cached enumeration of the partitions of `n`.
pub fn partitions_of(n: usize) -> Arc<[Partition]> {
    static CACHE: OnceLock<DashMap<usize, Arc<[Partition]>>> = OnceLock::new();
    let cache = CACHE.get_or_init(DashMap::new);
    if let Some(hit) = cache.get(&n) {
        return Arc::clone(&hit);
    }
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    enumerate(n, n, &mut prefix, &mut out);
    let fresh: Arc<[Partition]> = out.into();
    Arc::clone(&cache.entry(n).or_insert(fresh))
}

fn enumerate(rest: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition::from_sorted(prefix.clone()));
        return;
    }
    for part in (1..=rest.min(max_part)).rev() {
        prefix.push(part);
        enumerate(rest - part, part, prefix, out);
        prefix.pop();
    }
}

/// Componentwise `base + d * direction`, padding the shorter one with zeros.
pub fn add_scaled(base: &Partition, direction: &Partition, d: usize) -> Partition {
    let len = base.len().max(direction.len());
    let parts = (0..len)
        .map(|i| {
            direction
                .get(i)
                .checked_mul(d)
                .and_then(|s| s.checked_add(base.get(i)))
                .expect("partition part overflows usize")
        })
        .take_while(|&p| p > 0)
        .collect();
    Partition::from_sorted(parts)
}

pub fn factorial(n: usize) -> Result<u128> {
    (1..=n as u128).try_fold(1u128, |acc, k| {
        acc.checked_mul(k).ok_or(Error::Overflow("factorial"))
    })
}

/// A partition of `n` read as a conjugacy class of the symmetric group on
/// `n` letters.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CycleType {
    shape: Partition,
    /// `(part, multiplicity)` with parts strictly decreasing.
    multiplicities: Vec<(usize, usize)>,
}

impl CycleType {
    pub fn new(shape: Partition) -> Self {
        let mut multiplicities: Vec<(usize, usize)> = Vec::new();
        for &p in shape.parts() {
            match multiplicities.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => multiplicities.push((p, 1)),
            }
        }
        CycleType {
            shape,
            multiplicities,
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn degree(&self) -> usize {
        self.shape.weight()
    }

    pub fn multiplicities(&self) -> &[(usize, usize)] {
        &self.multiplicities
    }

    /// Sign of any permutation of this cycle type.
    pub fn sign(&self) -> i64 {
        if (self.degree() - self.shape.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Disjoint union of the cycles of two permutations.
    pub fn union(&self, other: &CycleType) -> CycleType {
        let mut parts = Vec::with_capacity(self.shape.len() + other.shape.len());
        let (a, b) = (self.shape.parts(), other.shape.parts());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i] >= b[j]) {
                parts.push(a[i]);
                i += 1;
            } else {
                parts.push(b[j]);
                j += 1;
            }
        }
        CycleType::new(Partition::from_sorted(parts))
    }

    /// All cycle types of degree `n`, in the partition enumeration order.
    pub fn all(n: usize) -> Vec<CycleType> {
        partitions_of(n)
            .iter()
            .cloned()
            .map(CycleType::new)
            .collect()
    }
}

impl From<Partition> for CycleType {
    fn from(shape: Partition) -> Self {
        CycleType::new(shape)
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.shape.fmt(f)
    }
}

impl fmt::Debug for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycleType{}", self.shape)
    }
}

/// `z_rho = prod_j j^{m_j} m_j!`, the order of the centralizer of any
/// permutation of cycle type `rho`.
pub fn centralizer_order(rho: &CycleType) -> Result<u128> {
    let mut z: u128 = 1;
    for &(part, mult) in rho.multiplicities() {
        let power = (part as u128)
            .checked_pow(mult as u32)
            .ok_or(Error::Overflow("centralizer order"))?;
        z = z
            .checked_mul(power)
            .and_then(|z| z.checked_mul(factorial(mult).ok()?))
            .ok_or(Error::Overflow("centralizer order"))?;
    }
    Ok(z)
}

pub type Split3 = (CycleType, CycleType, CycleType);

/// Every ordered way of distributing the cycles of `rho` over three slots.
pub fn split3(rho: &CycleType) -> Vec<Split3> {
    split3_inner(rho, None)
}

/// The triples of [`split3`] whose slot degrees equal `weights`.
pub fn split3_sized(rho: &CycleType, weights: [usize; 3]) -> Vec<Split3> {
    if weights.iter().sum::<usize>() != rho.degree() {
        return Vec::new();
    }
    split3_inner(rho, Some(weights))
}

fn split3_inner(rho: &CycleType, target: Option<[usize; 3]>) -> Vec<Split3> {
    let mut out = Vec::new();
    let mut slots: [Vec<usize>; 3] = Default::default();
    split3_rec(
        rho.multiplicities(),
        0,
        [0; 3],
        target,
        &mut slots,
        &mut out,
    );
    out
}

fn split3_rec(
    groups: &[(usize, usize)],
    g: usize,
    used: [usize; 3],
    target: Option<[usize; 3]>,
    slots: &mut [Vec<usize>; 3],
    out: &mut Vec<Split3>,
) {
    if g == groups.len() {
        if target.is_none_or(|t| t == used) {
            let make = |v: &Vec<usize>| CycleType::new(Partition::from_sorted(v.clone()));
            out.push((make(&slots[0]), make(&slots[1]), make(&slots[2])));
        }
        return;
    }
    let (part, mult) = groups[g];
    for a in 0..=mult {
        for b in 0..=mult - a {
            let c = mult - a - b;
            let counts = [a, b, c];
            let next = [used[0] + a * part, used[1] + b * part, used[2] + c * part];
            if target.is_some_and(|t| (0..3).any(|s| next[s] > t[s])) {
                continue;
            }
            for s in 0..3 {
                slots[s].extend(std::iter::repeat_n(part, counts[s]));
            }
            split3_rec(groups, g + 1, next, target, slots, out);
            for s in 0..3 {
                let keep = slots[s].len() - counts[s];
                slots[s].truncate(keep);
            }
        }
    }
}
