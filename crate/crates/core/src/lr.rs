//! Littlewood–Richardson coefficients by counting LR tableaux.
//!
//! The skew shape `nu/lambda` is filled row by row, top to bottom and right
//! to left within a row. That is the reverse reading order, so the lattice
//! condition is checked as each cell is placed.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::{Arc, OnceLock};

use dashmap::DashMap;

use crate::partitions::Partition;

type TripleKey = (Partition, Partition, Partition);
type PairKey = (Partition, Partition);

fn coefficient_cache() -> &'static DashMap<TripleKey, u64> {
    static CACHE: OnceLock<DashMap<TripleKey, u64>> = OnceLock::new();
    CACHE.get_or_init(DashMap::new)
}

fn expansion_cache() -> &'static DashMap<PairKey, Arc<BTreeMap<Partition, u64>>> {
    static CACHE: OnceLock<DashMap<PairKey, Arc<BTreeMap<Partition, u64>>>> = OnceLock::new();
    CACHE.get_or_init(DashMap::new)
}

/// `c_{lambda,mu}^nu`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if nu.weight() != lambda.weight() + mu.weight() || !nu.contains(lambda) || !nu.contains(mu) {
        return 0;
    }
    if lambda.is_empty() {
        return u64::from(mu == nu);
    }
    if mu.is_empty() {
        return u64::from(lambda == nu);
    }
    let key = (lambda.clone(), mu.clone(), nu.clone());
    if let Some(hit) = coefficient_cache().get(&key) {
        return *hit;
    }
    let count = count_tableaux(lambda, mu, nu);
    *coefficient_cache().entry(key).or_insert(count)
}

struct Filling<'a> {
    lambda: &'a Partition,
    mu: &'a Partition,
    /// Cells of `nu/lambda` in reverse reading order.
    cells: Vec<(usize, usize)>,
    grid: Vec<Vec<usize>>,
    content: Vec<usize>,
}

fn count_tableaux(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    let mut cells = Vec::with_capacity(mu.weight());
    for r in 0..nu.len() {
        for c in (lambda.get(r)..nu.get(r)).rev() {
            cells.push((r, c));
        }
    }
    let mut filling = Filling {
        lambda,
        mu,
        cells,
        grid: (0..nu.len()).map(|r| vec![0; nu.get(r)]).collect(),
        content: vec![0; mu.len() + 1],
    };
    filling.fill(0)
}

impl Filling<'_> {
    fn fill(&mut self, idx: usize) -> u64 {
        let Some(&(r, c)) = self.cells.get(idx) else {
            return 1;
        };
        // Rows weakly increase left to right; the cell to the right is filled.
        let mut upper = self.mu.len().min(r + 1);
        if c + 1 < self.grid[r].len() {
            upper = upper.min(self.grid[r][c + 1]);
        }
        // Columns strictly increase downwards.
        let lower = if r > 0 && c >= self.lambda.get(r - 1) {
            self.grid[r - 1][c] + 1
        } else {
            1
        };
        let mut total = 0;
        for letter in lower..=upper {
            if self.content[letter] >= self.mu.get(letter - 1) {
                continue;
            }
            if letter > 1 && self.content[letter] >= self.content[letter - 1] {
                continue;
            }
            self.content[letter] += 1;
            self.grid[r][c] = letter;
            total += self.fill(idx + 1);
            self.content[letter] -= 1;
        }
        self.grid[r][c] = 0;
        total
    }
}

/// Every `nu` with `c_{lambda,mu}^nu > 0`, with its coefficient.
pub fn lr_expand_pair(lambda: &Partition, mu: &Partition) -> BTreeMap<Partition, u64> {
    lr_expand_shared(lambda, mu).as_ref().clone()
}

/// Memoized form of [`lr_expand_pair`].
pub fn lr_expand_shared(lambda: &Partition, mu: &Partition) -> Arc<BTreeMap<Partition, u64>> {
    let key = (lambda.clone(), mu.clone());
    if let Some(hit) = expansion_cache().get(&key) {
        return Arc::clone(&hit);
    }
    // Candidates: shapes reachable from lambda by successive horizontal strips
    // of sizes mu_1, mu_2, ... (the support of h_mu s_lambda).
    let mut frontier = BTreeSet::from([lambda.clone()]);
    for &strip in mu.parts() {
        let mut next = BTreeSet::new();
        for shape in &frontier {
            add_horizontal_strips(shape, strip, &mut next);
        }
        frontier = next;
    }
    let expansion: BTreeMap<Partition, u64> = frontier
        .into_iter()
        .filter_map(|nu| {
            let c = lr_coefficient(lambda, mu, &nu);
            (c > 0).then_some((nu, c))
        })
        .collect();
    Arc::clone(&expansion_cache().entry(key).or_insert(Arc::new(expansion)))
}

fn add_horizontal_strips(shape: &Partition, size: usize, out: &mut BTreeSet<Partition>) {
    fn go(
        shape: &Partition,
        row: usize,
        left: usize,
        parts: &mut Vec<usize>,
        out: &mut BTreeSet<Partition>,
    ) {
        if left == 0 {
            let mut full = parts.clone();
            full.extend((row..shape.len()).map(|r| shape.get(r)));
            out.insert(Partition::from_sorted(full));
            return;
        }
        if row > shape.len() {
            return;
        }
        let current = shape.get(row);
        let cap = if row == 0 {
            left
        } else {
            (shape.get(row - 1) - current).min(left)
        };
        for add in (0..=cap).rev() {
            parts.push(current + add);
            go(shape, row + 1, left - add, parts, out);
            parts.pop();
        }
    }
    let mut parts = Vec::with_capacity(shape.len() + 1);
    go(shape, 0, size, &mut parts, out);
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
        assert_eq!(lr_coefficient(&p("[1]"), &p("[1]"), &p("[2]")), 1);
        assert_eq!(lr_coefficient(&p("[1]"), &p("[1]"), &p("[3]")), 0);
        assert_eq!(lr_coefficient(&p("[2,1]"), &p("[2,1]"), &p("[3,2,1]")), 2);
        assert_eq!(lr_coefficient(&p("[]"), &p("[]"), &p("[]")), 1);
        assert_eq!(lr_coefficient(&p("[2]"), &p("[1]"), &p("[1,1,1]")), 0);
    }

    #[test]
    fn expansion_examples() {
        let expand = |a: &str, b: &str| -> Vec<(String, u64)> {
            lr_expand_pair(&p(a), &p(b))
                .into_iter()
                .rev()
                .map(|(k, v)| (k.to_string(), v))
                .collect()
        };
        assert_eq!(
            expand("[1]", "[1]"),
            [("[2]".into(), 1), ("[1,1]".into(), 1)]
        );
        assert_eq!(expand("[]", "[2,1]"), [("[2,1]".into(), 1)]);
        assert_eq!(
            expand("[2]", "[2]"),
            [("[4]".into(), 1), ("[3,1]".into(), 1), ("[2,2]".into(), 1)]
        );
    }

    #[test]
    fn expansion_matches_pointwise_coefficients() {
        for a in 0..=4 {
            for b in 0..=4 {
                for lambda in all_partitions(a) {
                    for mu in all_partitions(b) {
                        let expansion = lr_expand_pair(&lambda, &mu);
                        for nu in all_partitions(a + b) {
                            let c = lr_coefficient(&lambda, &mu, &nu);
                            assert_eq!(expansion.get(&nu).copied().unwrap_or(0), c);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn pieri_rule_for_one_row() {
        // c_{lambda,(r)}^nu = 1 iff nu/lambda is a horizontal r-strip.
        for a in 0..=5 {
            for r in 0..=3 {
                for lambda in all_partitions(a) {
                    for nu in all_partitions(a + r) {
                        let strip = nu.contains(&lambda)
                            && (1..nu.len()).all(|i| nu.get(i) <= lambda.get(i - 1));
                        assert_eq!(
                            lr_coefficient(&lambda, &Partition::row(r), &nu),
                            u64::from(strip),
                            "{lambda} {r} {nu}"
                        );
                    }
                }
            }
        }
    }
}
