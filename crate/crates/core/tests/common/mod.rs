//! Reference implementations that share no code with the library kernels.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use aguiar_core::Partition;

/// Every permutation of `0..n` with its sign, in Heap's order.
pub fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut sign = 1i64;
    let mut out = vec![(perm.clone(), sign)];
    let mut c = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            let j = if i % 2 == 0 { 0 } else { c[i] };
            perm.swap(j, i);
            sign = -sign;
            out.push((perm.clone(), sign));
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// Cycle lengths of `perm` restricted to the invariant set `points`,
/// sorted decreasingly.
pub fn cycle_type_on(perm: &[usize], points: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; perm.len()];
    let mut lengths = Vec::new();
    for &start in points {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = perm[x];
            len += 1;
        }
        lengths.push(len);
    }
    lengths.sort_unstable_by(|a, b| b.cmp(a));
    lengths
}

pub fn cycle_type(perm: &[usize]) -> Vec<usize> {
    let points: Vec<usize> = (0..perm.len()).collect();
    cycle_type_on(perm, &points)
}

/// Number of ways to put each cycle of `rho` on one variable so that
/// variable `j` receives total length `target[j]`: the coefficient of
/// `x^target` in the power sum `p_rho`.
fn power_sum_coefficient(rho: &[usize], target: &mut [i64]) -> i64 {
    let Some((&first, rest)) = rho.split_first() else {
        return i64::from(target.iter().all(|&t| t == 0));
    };
    let mut total = 0;
    for j in 0..target.len() {
        if target[j] >= first as i64 {
            target[j] -= first as i64;
            total += power_sum_coefficient(rest, target);
            target[j] += first as i64;
        }
    }
    total
}

/// Frobenius' formula: `chi^lambda(rho)` is the coefficient of
/// `x^{lambda + delta}` in `a_delta p_rho`, in `len(lambda)` variables.
pub fn frobenius_character(lambda: &[usize], rho: &[usize]) -> i64 {
    let n = lambda.len();
    if n == 0 {
        return i64::from(rho.is_empty());
    }
    let mut total = 0;
    for (sigma, sign) in permutations(n) {
        let mut target: Vec<i64> = (0..n)
            .map(|j| lambda[j] as i64 + (n - 1 - j) as i64 - (n - 1 - sigma[j]) as i64)
            .collect();
        if target.iter().any(|&t| t < 0) {
            continue;
        }
        total += sign * power_sum_coefficient(rho, &mut target);
    }
    total
}

pub type Poly = HashMap<Vec<u8>, i64>;

/// The Schur polynomial `s_lambda(x_1, .., x_vars)` from semistandard tableaux.
pub fn schur_polynomial(lambda: &[usize], vars: usize) -> Poly {
    fn fill(
        vars: usize,
        cells: &[(usize, usize)],
        idx: usize,
        grid: &mut Vec<Vec<u8>>,
        out: &mut Poly,
    ) {
        let Some(&(r, c)) = cells.get(idx) else {
            let mut exponent = vec![0u8; vars];
            for row in grid.iter() {
                for &v in row {
                    exponent[v as usize] += 1;
                }
            }
            *out.entry(exponent).or_insert(0) += 1;
            return;
        };
        let low_row = if c > 0 { grid[r][c - 1] } else { 0 };
        let low_col = if r > 0 { grid[r - 1][c] + 1 } else { 0 };
        for v in low_row.max(low_col)..vars as u8 {
            grid[r][c] = v;
            fill(vars, cells, idx + 1, grid, out);
        }
    }
    let cells: Vec<(usize, usize)> = lambda
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<u8>> = lambda.iter().map(|&len| vec![0; len]).collect();
    let mut out = Poly::new();
    fill(vars, &cells, 0, &mut grid, &mut out);
    out
}

pub fn multiply(f: &Poly, g: &Poly) -> Poly {
    let mut out = Poly::new();
    for (a, x) in f {
        for (b, y) in g {
            let e: Vec<u8> = a.iter().zip(b).map(|(p, q)| p + q).collect();
            *out.entry(e).or_insert(0) += x * y;
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

/// Coefficient of `s_nu` in the symmetric polynomial `f` of `vars`
/// variables: the coefficient of `x^{nu+delta}` in `a_delta f`.
pub fn schur_coefficient(f: &Poly, nu: &[usize], vars: usize, perms: &[(Vec<usize>, i64)]) -> i64 {
    if nu.len() > vars {
        return 0;
    }
    let part = |j: usize| nu.get(j).copied().unwrap_or(0) as i64;
    let mut total = 0;
    let mut key = vec![0u8; vars];
    'perm: for (sigma, sign) in perms {
        for j in 0..vars {
            let e = part(j) + (vars - 1 - j) as i64 - (vars - 1 - sigma[j]) as i64;
            if e < 0 {
                continue 'perm;
            }
            key[j] = e as u8;
        }
        total += sign * f.get(&key).copied().unwrap_or(0);
    }
    total
}

/// `s_lambda s_mu` expanded in Schur functions, in enough variables to
/// see every constituent.
pub fn schur_product(lambda: &Partition, mu: &Partition) -> BTreeMap<Partition, i64> {
    let vars = (lambda.len() + mu.len()).max(1);
    let product = multiply(
        &schur_polynomial(lambda.parts(), vars),
        &schur_polynomial(mu.parts(), vars),
    );
    let perms = permutations(vars);
    aguiar_core::partitions::all_partitions(lambda.weight() + mu.weight())
        .into_iter()
        .filter_map(|nu| {
            let c = schur_coefficient(&product, nu.parts(), vars, &perms);
            (c != 0).then_some((nu, c))
        })
        .collect()
}

/// `a_{lambda,mu}^nu` by Frobenius reciprocity over the Young subgroup
/// `S_p x S_q x S_r` of `S_i`, summing over its elements one by one.
/// Characters come from [`frobenius_character`].
pub fn brute_force_aguiar(lambda: &Partition, mu: &Partition, nu: &Partition) -> i64 {
    let (k, l, i) = (lambda.weight(), mu.weight(), nu.weight());
    if i < k.max(l) || i > k + l {
        return 0;
    }
    let (p, q, r) = (i - l, k + l - i, i - k);
    let mut memo: HashMap<(Vec<usize>, Vec<usize>), i64> = HashMap::new();
    let mut chi = |shape: &Partition, rho: Vec<usize>| -> i64 {
        *memo
            .entry((shape.parts().to_vec(), rho.clone()))
            .or_insert_with(|| frobenius_character(shape.parts(), &rho))
    };
    let first: Vec<usize> = (0..k).collect();
    let last: Vec<usize> = (p..i).collect();
    let mut total = 0i64;
    let mut order = 0i64;
    for (a, _) in permutations(p) {
        for (b, _) in permutations(q) {
            for (c, _) in permutations(r) {
                let mut h: Vec<usize> = a.clone();
                h.extend(b.iter().map(|x| x + p));
                h.extend(c.iter().map(|x| x + p + q));
                let f = chi(lambda, cycle_type_on(&h, &first)) * chi(mu, cycle_type_on(&h, &last));
                total += f * chi(nu, cycle_type(&h));
                order += 1;
            }
        }
    }
    assert_eq!(total % order, 0, "non-integral multiplicity");
    total / order
}
