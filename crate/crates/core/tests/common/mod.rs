//! Independent oracles shared by the integration suites. Nothing here calls
//! the library's linear algebra or search code.
#![allow(dead_code)]

use kces::{Partition, ProductSet, ProductVector, Rational};
use num_traits::ToPrimitive;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Rank by fraction-free elimination over `i128`, rows reduced by their gcd.
pub fn int_rank(rows: &[Vec<i128>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(rank, p);
        for i in 0..m.len() {
            if i != rank && m[i][c] != 0 {
                let (a, b) = (m[rank][c], m[i][c]);
                let pivot = m[rank].clone();
                for (x, p) in m[i].iter_mut().zip(&pivot) {
                    *x = a * *x - b * p;
                }
                let g = m[i].iter().fold(0, |g, &x| gcd(g, x));
                if g > 1 {
                    m[i].iter_mut().for_each(|x| *x /= g);
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn to_int(x: &Rational) -> i128 {
    assert!(x.is_integer());
    x.numer().to_i128().expect("small integer")
}

/// Local vector of `v` on the parties of `block`, ascending party order.
pub fn local(v: &ProductVector<Rational>, block: &[usize]) -> Vec<i128> {
    block.iter().fold(vec![1], |acc, &party| {
        let f: Vec<i128> = v.factor(party).iter().map(to_int).collect();
        acc.iter().flat_map(|a| f.iter().map(move |b| a * b)).collect()
    })
}

/// Whether some assignment of members to blocks leaves every block unspanned,
/// by enumerating all `r^m` assignments against a table of spanning subsets.
pub fn naive_extendible(s: &ProductSet<Rational>, p: &Partition) -> bool {
    let m = s.len();
    let spans: Vec<Vec<bool>> = p
        .blocks()
        .iter()
        .map(|block| {
            let dim: usize = block.iter().map(|&i| s.dims()[i]).product();
            let locals: Vec<Vec<i128>> = s.vectors().iter().map(|v| local(v, block)).collect();
            (0..1usize << m)
                .map(|mask| {
                    let rows: Vec<Vec<i128>> = (0..m)
                        .filter(|i| mask >> i & 1 == 1)
                        .map(|i| locals[i].clone())
                        .collect();
                    int_rank(&rows) == dim
                })
                .collect()
        })
        .collect();
    let r = spans.len();
    let mut digits = vec![0usize; m];
    loop {
        let mut masks = vec![0usize; r];
        for (i, &b) in digits.iter().enumerate() {
            masks[b] |= 1 << i;
        }
        if (0..r).all(|b| !spans[b][masks[b]]) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == m {
                return false;
            }
            digits[i] += 1;
            if digits[i] < r {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

/// Random qubit factor with entries in `-2..=2`, never zero.
pub fn random_qubit(rng: &mut ChaCha8Rng) -> Vec<Rational> {
    loop {
        let f: Vec<i64> = (0..2).map(|_| rng.gen_range(-2..=2)).collect();
        if f.iter().any(|&x| x != 0) {
            return f.into_iter().map(|x| Rational::from_integer(x.into())).collect();
        }
    }
}

pub fn random_qubit_set(rng: &mut ChaCha8Rng, n: usize, m: usize) -> ProductSet<Rational> {
    let vectors = (0..m)
        .map(|_| ProductVector::new((0..n).map(|_| random_qubit(rng)).collect()).unwrap())
        .collect();
    ProductSet::new(vec![2; n], vectors).unwrap()
}

/// Random partition of `n` parties into at most `r` nonempty blocks.
pub fn random_partition(rng: &mut ChaCha8Rng, n: usize, r: usize) -> Partition {
    let labels: Vec<usize> = (0..n).map(|_| rng.gen_range(0..r)).collect();
    let blocks: Vec<Vec<usize>> = (0..r)
        .map(|b| (0..n).filter(|&i| labels[i] == b).collect::<Vec<_>>())
        .filter(|b| !b.is_empty())
        .collect();
    Partition::new(blocks).unwrap()
}
