//! Irreducible characters of the symmetric groups.
//!
//! Values come from the Murnaghan–Nakayama rule, always stripping the
//! largest remaining cycle first. Border strips are removed on the beta-set
//! (abacus) of the shape: a strip of length `r` is a bead moved from `b` to
//! `b - r` onto an empty position, with sign `(-1)^(beads jumped)`.
//!
//! Values of degree at most [`max_degree`] are memoized in a process-wide
//! map; full tables are cached per degree.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, OnceLock};

use dashmap::DashMap;

use crate::error::{Error, Result};
use crate::partitions::{centralizer_order, factorial, partitions_of, CycleType, Partition};

pub const DEFAULT_MAX_DEGREE: usize = 14;

static MAX_DEGREE: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_DEGREE);

/// Largest degree for which full character tables may be built and values
/// are memoized.
pub fn max_degree() -> usize {
    MAX_DEGREE.load(Ordering::Relaxed)
}

pub fn set_max_degree(n: usize) {
    MAX_DEGREE.store(n, Ordering::Relaxed);
}

type ValueKey = (Partition, Partition);

fn value_cache() -> &'static DashMap<ValueKey, i64> {
    static CACHE: OnceLock<DashMap<ValueKey, i64>> = OnceLock::new();
    CACHE.get_or_init(DashMap::new)
}

fn table_cache() -> &'static DashMap<usize, Arc<CharacterTable>> {
    static CACHE: OnceLock<DashMap<usize, Arc<CharacterTable>>> = OnceLock::new();
    CACHE.get_or_init(DashMap::new)
}

/// `chi^lambda(rho)`.
pub fn character_value(lambda: &Partition, rho: &CycleType) -> Result<i64> {
    if lambda.weight() != rho.degree() {
        return Err(Error::WeightMismatch {
            left: lambda.weight(),
            right: rho.degree(),
        });
    }
    murnaghan_nakayama(lambda, rho.shape().parts())
}

fn murnaghan_nakayama(lambda: &Partition, rho: &[usize]) -> Result<i64> {
    let Some((&strip, rest)) = rho.split_first() else {
        return Ok(1);
    };
    if lambda.len() == 1 {
        return Ok(1);
    }
    let memoize = lambda.weight() <= max_degree();
    let key = memoize.then(|| (lambda.clone(), Partition::from_sorted(rho.to_vec())));
    if let Some(hit) = key.as_ref().and_then(|k| value_cache().get(k)) {
        return Ok(*hit);
    }

    let len = lambda.len();
    let beta: Vec<usize> = (0..len).map(|i| lambda[i] + len - 1 - i).collect();
    let mut total: i64 = 0;
    for (idx, &bead) in beta.iter().enumerate() {
        if bead < strip || beta.contains(&(bead - strip)) {
            continue;
        }
        let target = bead - strip;
        let jumped = beta.iter().filter(|&&b| target < b && b < bead).count();
        let mut moved = beta.clone();
        moved[idx] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<usize> = moved
            .iter()
            .enumerate()
            .map(|(i, &b)| b - (len - 1 - i))
            .take_while(|&p| p > 0)
            .collect();
        let inner = murnaghan_nakayama(&Partition::from_sorted(parts), rest)?;
        let signed = if jumped % 2 == 0 { inner } else { -inner };
        total = total
            .checked_add(signed)
            .ok_or(Error::Overflow("character value"))?;
    }
    if let Some(key) = key {
        return Ok(*value_cache().entry(key).or_insert(total));
    }
    Ok(total)
}

/// `n! / z_rho` for every class of degree `n`, in [`CycleType::all`] order.
pub fn class_sizes(n: usize) -> Result<Arc<[u128]>> {
    static CACHE: OnceLock<DashMap<usize, Arc<[u128]>>> = OnceLock::new();
    let cache = CACHE.get_or_init(DashMap::new);
    if let Some(hit) = cache.get(&n) {
        return Ok(Arc::clone(&hit));
    }
    let nf = factorial(n)?;
    let sizes = CycleType::all(n)
        .iter()
        .map(|rho| Ok(nf / centralizer_order(rho)?))
        .collect::<Result<Vec<u128>>>()?;
    let sizes: Arc<[u128]> = sizes.into();
    Ok(Arc::clone(&cache.entry(n).or_insert(sizes)))
}

/// An integer-valued class function on the symmetric group of degree `n`,
/// stored in [`CycleType::all`] order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    n: usize,
    values: Vec<i128>,
}

impl ClassFunction {
    pub fn from_fn(n: usize, mut f: impl FnMut(&CycleType) -> Result<i128>) -> Result<Self> {
        let values = CycleType::all(n)
            .iter()
            .map(&mut f)
            .collect::<Result<_>>()?;
        Ok(ClassFunction { n, values })
    }

    /// `values[j]` is the value on the `j`-th class of [`CycleType::all`].
    pub fn from_values(n: usize, values: Vec<i128>) -> Result<Self> {
        let classes = partitions_of(n).len();
        if values.len() != classes {
            return Err(Error::Inconsistent(format!(
                "class function of degree {n} needs {classes} values, got {}",
                values.len()
            )));
        }
        Ok(ClassFunction { n, values })
    }

    /// The irreducible character `chi^lambda`.
    pub fn irreducible(lambda: &Partition) -> Result<Self> {
        Self::from_fn(lambda.weight(), |rho| {
            Ok(character_value(lambda, rho)? as i128)
        })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[i128] {
        &self.values
    }

    pub fn value(&self, rho: &CycleType) -> Option<i128> {
        if rho.degree() != self.n {
            return None;
        }
        partitions_of(self.n)
            .binary_search_by(|p| rho.shape().cmp(p))
            .ok()
            .map(|j| self.values[j])
    }

    pub fn checked_add(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.zip_with(other, i128::checked_add)
    }

    pub fn checked_mul(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.zip_with(other, i128::checked_mul)
    }

    fn zip_with(
        &self,
        other: &ClassFunction,
        op: impl Fn(i128, i128) -> Option<i128>,
    ) -> Result<ClassFunction> {
        if self.n != other.n {
            return Err(Error::WeightMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| op(a, b).ok_or(Error::Overflow("class function arithmetic")))
            .collect::<Result<_>>()?;
        Ok(ClassFunction { n: self.n, values })
    }
}

/// `<f, g> = (1/n!) sum_rho f(rho) g(rho) n!/z_rho`; non-divisibility means
/// one of the inputs is not a virtual character.
pub fn inner_product(f: &ClassFunction, g: &ClassFunction) -> Result<i128> {
    if f.n != g.n {
        return Err(Error::WeightMismatch {
            left: f.n,
            right: g.n,
        });
    }
    weighted_class_sum(
        f.n,
        f.values
            .iter()
            .zip(&g.values)
            .map(|(&a, &b)| a.checked_mul(b)),
    )
}

/// `(1/n!) sum_j terms[j] * |class j|` with exact divisibility.
pub(crate) fn weighted_class_sum(
    n: usize,
    terms: impl IntoIterator<Item = Option<i128>>,
) -> Result<i128> {
    let sizes = class_sizes(n)?;
    let mut total: i128 = 0;
    for (term, &size) in terms.into_iter().zip(sizes.iter()) {
        let term = term.ok_or(Error::Overflow("class sum"))?;
        let weighted = i128::try_from(size)
            .ok()
            .and_then(|s| term.checked_mul(s))
            .ok_or(Error::Overflow("class sum"))?;
        total = total
            .checked_add(weighted)
            .ok_or(Error::Overflow("class sum"))?;
    }
    let order = i128::try_from(factorial(n)?).map_err(|_| Error::Overflow("group order"))?;
    if total % order != 0 {
        return Err(Error::NotDivisible {
            what: "class-function inner product",
            value: total,
            divisor: order,
        });
    }
    Ok(total / order)
}

/// Full character table of degree `n`; rows and columns both follow the
/// reverse lexicographic partition order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    n: usize,
    shapes: Vec<Partition>,
    classes: Vec<CycleType>,
    rows: Vec<ClassFunction>,
}

impl CharacterTable {
    pub(crate) fn from_rows(n: usize, rows: Vec<ClassFunction>) -> Result<Self> {
        let shapes = partitions_of(n).to_vec();
        if rows.len() != shapes.len() || rows.iter().any(|r| r.n != n) {
            return Err(Error::Inconsistent(format!(
                "malformed table of degree {n}"
            )));
        }
        Ok(CharacterTable {
            n,
            shapes,
            classes: CycleType::all(n),
            rows,
        })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn shapes(&self) -> &[Partition] {
        &self.shapes
    }

    pub fn classes(&self) -> &[CycleType] {
        &self.classes
    }

    pub fn rows(&self) -> impl Iterator<Item = (&Partition, &ClassFunction)> {
        self.shapes.iter().zip(&self.rows)
    }

    pub fn row(&self, lambda: &Partition) -> Option<&ClassFunction> {
        self.shapes
            .binary_search_by(|p| lambda.cmp(p))
            .ok()
            .map(|j| &self.rows[j])
    }

    /// The column of the identity class.
    pub fn dimensions(&self) -> Vec<i128> {
        let identity = self.classes.len() - 1;
        self.rows.iter().map(|r| r.values[identity]).collect()
    }

    /// Checks both orthogonality relations exactly.
    pub fn verify_orthogonality(&self) -> Result<()> {
        for (a, ra) in self.rows.iter().enumerate() {
            for (b, rb) in self.rows.iter().enumerate().skip(a) {
                let expected = i128::from(a == b);
                let got = inner_product(ra, rb)?;
                if got != expected {
                    return Err(Error::Inconsistent(format!(
                        "row orthogonality fails for {} and {}: {got}",
                        self.shapes[a], self.shapes[b]
                    )));
                }
            }
        }
        let sizes = class_sizes(self.n)?;
        let order = factorial(self.n)?;
        for c in 0..self.classes.len() {
            let z = order / sizes[c];
            for d in c..self.classes.len() {
                let sum = self
                    .rows
                    .iter()
                    .try_fold(0i128, |acc, r| {
                        acc.checked_add(r.values[c].checked_mul(r.values[d])?)
                    })
                    .ok_or(Error::Overflow("column orthogonality"))?;
                let expected = if c == d { z as i128 } else { 0 };
                if sum != expected {
                    return Err(Error::Inconsistent(format!(
                        "column orthogonality fails for {} and {}: {sum}",
                        self.classes[c], self.classes[d]
                    )));
                }
            }
        }
        Ok(())
    }
}

/// The cached character table of degree `n`; fails above [`max_degree`].
pub fn character_table(n: usize) -> Result<Arc<CharacterTable>> {
    let limit = max_degree();
    if n > limit {
        return Err(Error::DegreeLimit { n, limit });
    }
    if let Some(hit) = table_cache().get(&n) {
        return Ok(Arc::clone(&hit));
    }
    let rows = partitions_of(n)
        .iter()
        .map(ClassFunction::irreducible)
        .collect::<Result<Vec<_>>>()?;
    let table = Arc::new(CharacterTable::from_rows(n, rows)?);
    Ok(Arc::clone(&table_cache().entry(n).or_insert(table)))
}

/// Every table built or installed so far, ordered by degree.
pub fn cached_tables() -> Vec<Arc<CharacterTable>> {
    let mut tables: Vec<_> = table_cache()
        .iter()
        .map(|e| Arc::clone(e.value()))
        .collect();
    tables.sort_by_key(|t| t.n);
    tables
}

/// Registers an externally loaded table and seeds the value memo from it.
pub fn install_table(table: CharacterTable) -> Arc<CharacterTable> {
    if table.n <= max_degree() {
        for (lambda, row) in table.rows() {
            for (rho, &value) in table.classes.iter().zip(&row.values) {
                if let Ok(v) = i64::try_from(value) {
                    value_cache()
                        .entry((lambda.clone(), rho.shape().clone()))
                        .or_insert(v);
                }
            }
        }
    }
    let table = Arc::new(table);
    Arc::clone(&table_cache().entry(table.n).or_insert(table))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::parse_partition;

    fn p(s: &str) -> Partition {
        parse_partition(s).unwrap()
    }

    fn c(s: &str) -> CycleType {
        CycleType::new(p(s))
    }

    #[test]
    fn value_examples() {
        for n in 0..=7 {
            for rho in CycleType::all(n) {
                assert_eq!(character_value(&Partition::row(n), &rho).unwrap(), 1);
            }
        }
        assert_eq!(character_value(&p("[1,1,1]"), &c("[2,1]")).unwrap(), -1);
        assert_eq!(character_value(&p("[2,1]"), &c("[3]")).unwrap(), -1);
    }

    #[test]
    fn weight_mismatch_is_an_error() {
        assert!(matches!(
            character_value(&p("[2,1]"), &c("[2]")),
            Err(Error::WeightMismatch { left: 3, right: 2 })
        ));
    }

    #[test]
    fn sign_character() {
        for n in 1..=8 {
            let sign = Partition::new(vec![1; n]).unwrap();
            for rho in CycleType::all(n) {
                assert_eq!(character_value(&sign, &rho).unwrap(), rho.sign());
            }
        }
    }

    #[test]
    fn small_tables() {
        let t0 = character_table(0).unwrap();
        assert_eq!(t0.shapes().len(), 1);
        assert_eq!(t0.dimensions(), vec![1]);

        let t3 = character_table(3).unwrap();
        assert_eq!(t3.dimensions(), vec![1, 2, 1]);
        // Rows [3],[2,1],[1,1,1]; columns [3],[2,1],[1,1,1].
        let rows: Vec<Vec<i128>> = t3.rows().map(|(_, r)| r.values().to_vec()).collect();
        assert_eq!(rows, vec![vec![1, 1, 1], vec![-1, 0, 2], vec![1, -1, 1]]);

        let t5 = character_table(5).unwrap();
        assert_eq!(t5.shapes().len(), 7);
        let sum: i128 = t5.dimensions().iter().map(|d| d * d).sum();
        assert_eq!(sum, 120);
    }

    #[test]
    fn degree_limit_is_enforced() {
        let limit = max_degree();
        assert!(matches!(
            character_table(limit + 1),
            Err(Error::DegreeLimit { .. })
        ));
    }

    #[test]
    fn orthogonality_and_hook_lengths() {
        for n in 0..=9 {
            let t = character_table(n).unwrap();
            t.verify_orthogonality().unwrap();
            for ((lambda, _), dim) in t.rows().zip(t.dimensions()) {
                assert_eq!(dim as u128, lambda.hook_dimension().unwrap());
                assert!(dim > 0);
            }
        }
    }

    #[test]
    fn inner_product_examples() {
        let chi = |s: &str| ClassFunction::irreducible(&p(s)).unwrap();
        assert_eq!(inner_product(&chi("[2,1]"), &chi("[2,1]")).unwrap(), 1);
        assert_eq!(inner_product(&chi("[3]"), &chi("[1,1,1]")).unwrap(), 0);
        let regular_2 = chi("[2]").checked_add(&chi("[1,1]")).unwrap();
        assert_eq!(inner_product(&regular_2, &chi("[2]")).unwrap(), 1);
    }

    #[test]
    fn inner_product_rejects_non_characters() {
        let f = ClassFunction::from_values(2, vec![1, 0]).unwrap();
        assert!(matches!(
            inner_product(&f, &f),
            Err(Error::NotDivisible { .. })
        ));
        let g = ClassFunction::irreducible(&p("[2,1]")).unwrap();
        assert!(matches!(
            inner_product(&f, &g),
            Err(Error::WeightMismatch { .. })
        ));
    }

    #[test]
    fn class_function_lookup() {
        let chi = ClassFunction::irreducible(&p("[2,1]")).unwrap();
        assert_eq!(chi.value(&c("[3]")), Some(-1));
        assert_eq!(chi.value(&c("[1,1,1]")), Some(2));
        assert_eq!(chi.value(&c("[2]")), None);
    }

    #[test]
    fn uncached_values_above_limit_agree() {
        // Degree above the memo limit goes through the same recursion uncached.
        let lambda = p("[9,4,2]");
        let rho = c("[5,4,3,2,1]");
        let first = character_value(&lambda, &rho).unwrap();
        assert_eq!(character_value(&lambda, &rho).unwrap(), first);
    }
}
