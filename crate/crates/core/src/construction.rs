//! Vandermonde construction of subspaces whose states all have depth `>= k`.
//!
//! The global Vandermonde vector `(1, x, x^2, ..., x^{d^n - 1})` is a product
//! vector: party `m` (1-based) carries `(x^{s d^{n-m}})_{s < d}`. Coarse-graining
//! any group of parties gives local vectors whose stacked matrices are again
//! (generalized) Vandermonde with increasing exponents, hence totally positive
//! for increasing positive nodes. Every `D`-tuple of local vectors then spans
//! its block, so enough such vectors cannot be extended by any product across
//! blocks of at most `k - 1` parties, and the orthocomplement of their span
//! only contains states of depth at least `k`.

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::bounds::{spanning_threshold, Scenario};
use crate::error::{Error, Result};
use crate::linalg::{all_minors_positive, kron, nullspace_basis, Matrix};
use crate::product::{Partition, ProductSet, ProductVector, SubspaceBasis, MAX_PARTITION_PARTIES};
use crate::scalar::Field;
use crate::unextendibility::verify_level;

/// Largest `d^n` the construction will materialize.
pub const MAX_TOTAL_DIM: usize = 1 << 14;

/// The Vandermonde vector at node `x` as a product over `n` parties of
/// dimension `d`.
pub fn vandermonde_product_vector<T: Field>(d: u32, n: u32, x: &T) -> Result<ProductVector<T>> {
    if !x.is_positive() {
        return Err(Error::Precondition(format!("Vandermonde node {x:?} must be positive")));
    }
    let d64 = u64::from(d);
    let factors = (1..=n)
        .map(|m| {
            let stride = d64.pow(n - m);
            (0..d64).map(|s| x.pow_u64(s * stride)).collect()
        })
        .collect();
    ProductVector::new(factors)
}

/// Smallest number of Vandermonde vectors whose orthocomplement reaches the
/// maximal dimension: `t d^{k-1} + d^{n-t(k-1)} - t`.
pub fn min_spanning_count(s: Scenario) -> BigUint {
    spanning_threshold(s)
}

/// A constructed subspace together with the vectors it is orthogonal to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KcesResult<T> {
    pub scenario: Scenario,
    pub nodes: Vec<T>,
    /// The Vandermonde product vectors, one per node.
    pub spanning: ProductSet<T>,
    /// Kernel basis of the expanded spanning vectors.
    pub complement: SubspaceBasis<T>,
    /// Level at which the spanning set was verified unextendible (`k - 1`).
    pub certified_level: usize,
}

/// `1, 2, ..., count` as field elements.
pub fn default_nodes<T: Field>(count: usize) -> Vec<T> {
    (1..=count as i64).map(T::from_int).collect()
}

fn check_nodes<T: Field>(nodes: &[T]) -> Result<()> {
    if let Some(x) = nodes.first() {
        if !x.is_positive() {
            return Err(Error::Precondition(format!(
                "nodes must satisfy 0 < x_0 < x_1 < ..., but x_0 = {x:?}"
            )));
        }
    }
    if let Some(i) = nodes.windows(2).position(|w| w[0] >= w[1]) {
        return Err(Error::Precondition(format!(
            "nodes must satisfy 0 < x_0 < x_1 < ..., but x_{i} = {:?} >= x_{} = {:?}",
            nodes[i],
            i + 1,
            nodes[i + 1]
        )));
    }
    Ok(())
}

fn total_dim(s: Scenario) -> Result<usize> {
    s.total_dim()
        .to_usize()
        .filter(|&t| t <= MAX_TOTAL_DIM)
        .ok_or(Error::TooLarge {
            what: "total dimension d^n",
            value: usize::MAX,
            limit: MAX_TOTAL_DIM,
        })
}

/// Builds `count` Vandermonde product vectors and the kernel of their span,
/// then verifies that no `(k-1)`-producible vector lies in that kernel.
///
/// `nodes` defaults to `1, 2, ..., count`.
pub fn build_kces<T: Field>(s: Scenario, count: usize, nodes: Option<Vec<T>>) -> Result<KcesResult<T>> {
    let total = total_dim(s)?;
    if s.n as usize > MAX_PARTITION_PARTIES {
        return Err(Error::TooLarge {
            what: "party count",
            value: s.n as usize,
            limit: MAX_PARTITION_PARTIES,
        });
    }
    let min = min_spanning_count(s);
    if BigUint::from(count) < min {
        return Err(Error::Precondition(format!(
            "count {count} is below t*d^(k-1) + d^(n-t(k-1)) - t = {min}"
        )));
    }
    if count >= total {
        return Err(Error::Precondition(format!(
            "count {count} must be below d^n = {total} to leave a nonzero complement"
        )));
    }
    let nodes = nodes.unwrap_or_else(|| default_nodes(count));
    if nodes.len() != count {
        return Err(Error::Precondition(format!(
            "{} nodes given for count {count}",
            nodes.len()
        )));
    }
    check_nodes(&nodes)?;

    let vectors = nodes
        .iter()
        .map(|x| vandermonde_product_vector(s.d, s.n, x))
        .collect::<Result<Vec<_>>>()?;
    let spanning = ProductSet::new(vec![s.d as usize; s.n as usize], vectors)?;
    let complement = SubspaceBasis::new(spanning.dims().to_vec(), nullspace_basis(&spanning.expanded()))?;

    let level = (s.k - 1) as usize;
    let verdict = verify_level(&spanning, level)?;
    if let Some(w) = verdict.witness() {
        return Err(Error::Precondition(format!(
            "construction failed to certify level {level}: extendible across {}",
            w.partition
        )));
    }
    Ok(KcesResult {
        scenario: s,
        nodes,
        spanning,
        complement,
        certified_level: level,
    })
}

/// Size guards for [`total_positivity_certificate`].
pub const MAX_CERTIFICATE_BLOCK_DIM: usize = 8;
pub const MAX_CERTIFICATE_COUNT: usize = 10;

/// Checks that, for every block of `p`, the matrix whose rows are the
/// coarse-grained local Vandermonde vectors has only strictly positive minors.
pub fn total_positivity_certificate<T: Field>(s: Scenario, count: usize, nodes: &[T], p: &Partition) -> Result<bool> {
    if nodes.len() != count {
        return Err(Error::Precondition(format!(
            "{} nodes given for count {count}",
            nodes.len()
        )));
    }
    if count > MAX_CERTIFICATE_COUNT {
        return Err(Error::TooLarge {
            what: "vector count",
            value: count,
            limit: MAX_CERTIFICATE_COUNT,
        });
    }
    if p.parties() != s.n as usize {
        return Err(Error::DimensionMismatch(format!(
            "partition of {} parties for n = {}",
            p.parties(),
            s.n
        )));
    }
    let dims = vec![s.d as usize; s.n as usize];
    let block_dims = p.block_dims(&dims);
    if let Some(&big) = block_dims.iter().find(|&&b| b > MAX_CERTIFICATE_BLOCK_DIM) {
        return Err(Error::TooLarge {
            what: "block dimension",
            value: big,
            limit: MAX_CERTIFICATE_BLOCK_DIM,
        });
    }
    let coarse = nodes
        .iter()
        .map(|x| vandermonde_product_vector(s.d, s.n, x)?.coarse_grain(p))
        .collect::<Result<Vec<_>>>()?;
    Ok(block_dims.iter().enumerate().all(|(b, &dim)| {
        let rows = coarse.iter().map(|v| v.factor(b).to_vec()).collect();
        all_minors_positive(&Matrix::from_rows(dim, rows).expect("local vectors share a length"))
    }))
}

/// Tensors every basis row (on the left) with the expanded `pad` vector.
///
/// With a genuinely entangled `ges` on `k` parties and a fully product pad on
/// the remaining parties, every state in the result has depth exactly `k`.
/// A pad with no factors leaves the basis unchanged.
pub fn pad_construction<T: Field>(ges: &SubspaceBasis<T>, pad: &ProductVector<T>) -> Result<SubspaceBasis<T>> {
    let tail = pad.expand();
    let mut dims = ges.dims().to_vec();
    dims.extend(pad.dims());
    let cols = ges.basis().cols() * tail.len();
    let rows = ges.basis().row_iter().map(|r| kron(r, &tail)).collect();
    SubspaceBasis::new(dims, Matrix::from_rows(cols, rows)?)
}
