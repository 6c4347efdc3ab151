//! Kronecker coefficients from exact character sums.

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use dashmap::DashMap;

use crate::characters::{character_table, inner_product, max_degree, ClassFunction};
use crate::error::{Error, Result};
use crate::partitions::{partitions_of, Partition};

type PairKey = (Partition, Partition);

fn expansion_cache() -> &'static DashMap<PairKey, Arc<BTreeMap<Partition, u64>>> {
    static CACHE: OnceLock<DashMap<PairKey, Arc<BTreeMap<Partition, u64>>>> = OnceLock::new();
    CACHE.get_or_init(DashMap::new)
}

/// `chi^lambda`, read from the prebuilt table when the degree allows it.
fn character(lambda: &Partition) -> Result<ClassFunction> {
    if lambda.weight() <= max_degree() {
        let table = character_table(lambda.weight())?;
        if let Some(row) = table.row(lambda) {
            return Ok(row.clone());
        }
    }
    ClassFunction::irreducible(lambda)
}

fn to_multiplicity(value: i128, what: &str) -> Result<u64> {
    u64::try_from(value)
        .map_err(|_| Error::Inconsistent(format!("{what} has negative multiplicity {value}")))
}

/// `g_{lambda,mu,nu}`; zero unless all three weights agree.
pub fn kronecker_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    let n = lambda.weight();
    if mu.weight() != n || nu.weight() != n {
        return Ok(0);
    }
    let product = character(lambda)?.checked_mul(&character(mu)?)?;
    let g = inner_product(&product, &character(nu)?)?;
    to_multiplicity(g, "Kronecker coefficient")
}

/// Decomposition of `M_lambda (x) M_mu` into irreducibles.
pub fn kronecker_expand_pair(
    lambda: &Partition,
    mu: &Partition,
) -> Result<BTreeMap<Partition, u64>> {
    Ok(kronecker_expand_shared(lambda, mu)?.as_ref().clone())
}

/// Memoized form of [`kronecker_expand_pair`]; the pair is unordered.
pub fn kronecker_expand_shared(
    lambda: &Partition,
    mu: &Partition,
) -> Result<Arc<BTreeMap<Partition, u64>>> {
    let n = lambda.weight();
    if mu.weight() != n {
        return Err(Error::WeightMismatch {
            left: n,
            right: mu.weight(),
        });
    }
    let key = if lambda <= mu {
        (lambda.clone(), mu.clone())
    } else {
        (mu.clone(), lambda.clone())
    };
    if let Some(hit) = expansion_cache().get(&key) {
        return Ok(Arc::clone(&hit));
    }

    let chi_lambda = character(lambda)?;
    let chi_mu = character(mu)?;
    let product = chi_lambda.checked_mul(&chi_mu)?;
    let mut expansion = BTreeMap::new();
    let mut dimension_sum: i128 = 0;
    for nu in partitions_of(n).iter() {
        let chi_nu = character(nu)?;
        let g = to_multiplicity(inner_product(&product, &chi_nu)?, "Kronecker product")?;
        if g > 0 {
            let dim_nu = *chi_nu
                .values()
                .last()
                .expect("every degree has an identity class");
            dimension_sum = i128::from(g)
                .checked_mul(dim_nu)
                .and_then(|t| t.checked_add(dimension_sum))
                .ok_or(Error::Overflow("Kronecker dimension check"))?;
            expansion.insert(nu.clone(), g);
        }
    }
    let dim = |f: &ClassFunction| *f.values().last().expect("identity class");
    let expected = dim(&chi_lambda)
        .checked_mul(dim(&chi_mu))
        .ok_or(Error::Overflow("Kronecker dimension check"))?;
    if dimension_sum != expected {
        return Err(Error::Inconsistent(format!(
            "M{lambda} (x) M{mu}: dimensions sum to {dimension_sum}, expected {expected}"
        )));
    }
    let expansion = Arc::new(expansion);
    Ok(Arc::clone(
        &expansion_cache().entry(key).or_insert(expansion),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{all_partitions, parse_partition};

    fn p(s: &str) -> Partition {
        parse_partition(s).unwrap()
    }

    #[test]
    fn coefficient_examples() {
        for n in 1..=5 {
            for mu in all_partitions(n) {
                for nu in all_partitions(n) {
                    let g = kronecker_coefficient(&Partition::row(n), &mu, &nu).unwrap();
                    assert_eq!(g, u64::from(mu == nu));
                }
            }
        }
        assert_eq!(
            kronecker_coefficient(&p("[1,1]"), &p("[1,1]"), &p("[2]")).unwrap(),
            1
        );
        assert_eq!(
            kronecker_coefficient(&p("[2,1]"), &p("[2,1]"), &p("[2,1]")).unwrap(),
            1
        );
        assert_eq!(
            kronecker_coefficient(&p("[2,1]"), &p("[2]"), &p("[2,1]")).unwrap(),
            0
        );
    }

    #[test]
    fn expansion_examples() {
        let expand = |a: &str, b: &str| -> Vec<(String, u64)> {
            kronecker_expand_pair(&p(a), &p(b))
                .unwrap()
                .into_iter()
                .rev()
                .map(|(k, v)| (k.to_string(), v))
                .collect()
        };
        assert_eq!(expand("[2]", "[2]"), [("[2]".into(), 1)]);
        assert_eq!(expand("[1,1]", "[2]"), [("[1,1]".into(), 1)]);
        assert_eq!(
            expand("[2,1]", "[2,1]"),
            [
                ("[3]".into(), 1),
                ("[2,1]".into(), 1),
                ("[1,1,1]".into(), 1)
            ]
        );
        assert_eq!(expand("[]", "[]"), [("[]".into(), 1)]);
    }

    #[test]
    fn expansion_requires_equal_weights() {
        assert!(matches!(
            kronecker_expand_pair(&p("[2]"), &p("[1]")),
            Err(Error::WeightMismatch { .. })
        ));
    }

    #[test]
    fn one_row_triple_is_one() {
        for n in 0..=8 {
            let row = Partition::row(n);
            assert_eq!(kronecker_coefficient(&row, &row, &row).unwrap(), 1);
        }
    }
}
