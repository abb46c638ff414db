//! Deciding whether a set of product vectors can be extended by a vector of
//! bounded entanglement depth, with explicit witnesses.
//!
//! A vector that is a product across a partition `S_1|...|S_r` is orthogonal
//! to every member of a set iff the members can be distributed among the `r`
//! blocks so that, on every block, the local vectors of the members assigned
//! to it fail to span the block's space. The search below looks for such an
//! assignment. The sets need not be orthogonal.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{combinations, dot, nullspace_basis, rank, IncrementalRank, Matrix};
use crate::product::{enumerate_maximal_partitions, Partition, ProductSet, ProductVector};
use crate::scalar::Field;

/// A product vector across `partition` orthogonal to every member of a set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness<T> {
    pub partition: Partition,
    /// One factor per block of `partition`.
    pub vector: ProductVector<T>,
    /// Block index each member was assigned to.
    pub assignment: Vec<usize>,
}

impl<T: Field> Witness<T> {
    /// The witness as a global vector in the usual party order.
    pub fn expand(&self, dims: &[usize]) -> Vec<T> {
        self.partition
            .expand_product(self.vector.factors(), dims)
            .expect("witness factors match the partition")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome<T> {
    Unextendible,
    Witness(Witness<T>),
}

/// Result of a level-`j` check: either no `j`-producible vector is orthogonal
/// to the set, or a witness of one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict<T> {
    pub level: usize,
    pub outcome: Outcome<T>,
}

impl<T> Verdict<T> {
    pub fn is_unextendible(&self) -> bool {
        matches!(self.outcome, Outcome::Unextendible)
    }

    pub fn witness(&self) -> Option<&Witness<T>> {
        match &self.outcome {
            Outcome::Unextendible => None,
            Outcome::Witness(w) => Some(w),
        }
    }
}

fn check_partition<T: Field>(s: &ProductSet<T>, p: &Partition) -> Result<()> {
    if p.parties() != s.parties() {
        return Err(Error::DimensionMismatch(format!(
            "partition of {} parties for a {}-party set",
            p.parties(),
            s.parties()
        )));
    }
    Ok(())
}

/// Looks for a product vector across `p` orthogonal to every member of `s`.
///
/// Depth-first over assignments of members (in order) to blocks (block 0
/// first); a branch is cut as soon as a block's assigned local vectors span
/// its space. Empty blocks are allowed. On success the factor for each block
/// is the first kernel vector of its assigned local vectors, and the expanded
/// witness is checked against every member before it is returned.
pub fn extension_witness<T: Field>(s: &ProductSet<T>, p: &Partition) -> Result<Option<Witness<T>>> {
    check_partition(s, p)?;
    Ok(search(s, p))
}

fn search<T: Field>(s: &ProductSet<T>, p: &Partition) -> Option<Witness<T>> {
    let cg = s.coarse_grain(p).expect("partition matches the set");
    let block_dims = p.block_dims(s.dims());
    let mut state = Search {
        set: &cg,
        trackers: block_dims.iter().map(|&d| IncrementalRank::new(d)).collect(),
        assignment: vec![0; cg.len()],
    };
    if !state.descend(0) {
        return None;
    }
    let assignment = state.assignment;
    let factors: Vec<Vec<T>> = block_dims
        .iter()
        .enumerate()
        .map(|(b, &dim)| {
            let rows: Vec<Vec<T>> = cg
                .vectors()
                .iter()
                .zip(&assignment)
                .filter(|(_, &a)| a == b)
                .map(|(v, _)| v.factor(b).to_vec())
                .collect();
            let kernel = nullspace_basis(&Matrix::from_rows(dim, rows).expect("local vectors share a length"));
            kernel.row(0).to_vec()
        })
        .collect();
    let witness = Witness {
        partition: p.clone(),
        vector: ProductVector::new(factors).expect("kernel vectors are nonzero"),
        assignment,
    };
    let global = witness.expand(s.dims());
    assert!(
        s.vectors().iter().all(|v| dot(&global, &v.expand()).is_zero()),
        "extension witness across {p} is not orthogonal to the set"
    );
    Some(witness)
}

struct Search<'a, T> {
    set: &'a ProductSet<T>,
    trackers: Vec<IncrementalRank<T>>,
    assignment: Vec<usize>,
}

impl<T: Field> Search<'_, T> {
    fn descend(&mut self, i: usize) -> bool {
        if i == self.set.len() {
            return true;
        }
        let v = &self.set.vectors()[i];
        for b in 0..self.trackers.len() {
            let grew = self.trackers[b].insert(v.factor(b));
            if !self.trackers[b].is_full() {
                self.assignment[i] = b;
                if self.descend(i + 1) {
                    return true;
                }
            }
            if grew {
                self.trackers[b].pop();
            }
        }
        false
    }
}

/// Whether every `D_i`-tuple of local vectors spans block `i`'s space, for
/// every block of `p`. When it holds (and the set is large enough) no product
/// vector across `p` is orthogonal to the set.
///
/// Requires `|s| >= sum_i (D_i - 1) + 1`.
pub fn full_local_spanning<T: Field>(s: &ProductSet<T>, p: &Partition) -> Result<bool> {
    check_partition(s, p)?;
    let block_dims = p.block_dims(s.dims());
    let needed: usize = block_dims.iter().map(|d| d - 1).sum::<usize>() + 1;
    if s.len() < needed {
        return Err(Error::Precondition(format!(
            "{} vectors is below sum(D_i - 1) + 1 = {needed} for blocks of dimensions {block_dims:?}",
            s.len()
        )));
    }
    let cg = s.coarse_grain(p)?;
    Ok(block_dims.iter().enumerate().all(|(b, &dim)| {
        combinations(cg.len(), dim).all(|tuple| {
            let rows = tuple.iter().map(|&i| cg.vectors()[i].factor(b).to_vec()).collect();
            rank(&Matrix::from_rows(dim, rows).expect("local vectors share a length")) == dim
        })
    }))
}

/// Checks unextendibility by `level`-producible vectors.
///
/// Scans the maximal partitions with blocks of at most `level` parties in
/// canonical order and reports the witness of the first extendible one.
/// Partitions are searched in parallel; the reported witness does not depend
/// on scheduling.
pub fn verify_level<T: Field>(s: &ProductSet<T>, level: usize) -> Result<Verdict<T>> {
    let n = s.parties();
    if level == 0 || level > n {
        return Err(Error::Precondition(format!("level {level} must lie in 1..={n}")));
    }
    let partitions = enumerate_maximal_partitions(n, level)?;
    let found = partitions.par_iter().find_map_first(|p| search(s, p));
    Ok(Verdict {
        level,
        outcome: found.map_or(Outcome::Unextendible, Outcome::Witness),
    })
}

/// Mutually orthogonal, not spanning, and unextendible by fully product
/// vectors.
pub fn is_upb<T: Field>(s: &ProductSet<T>) -> Result<bool> {
    if !s.is_mutually_orthogonal() || s.rank() == s.total_dim() {
        return Ok(false);
    }
    Ok(verify_level(s, 1)?.is_unextendible())
}

/// Largest `k` such that the set is unextendible by `(k-1)`-producible
/// vectors, i.e. its orthocomplement contains only states of depth `>= k`.
/// Returns 1 when a fully product vector extends the set.
pub fn depth_floor<T: Field>(s: &ProductSet<T>) -> Result<usize> {
    if s.rank() == s.total_dim() {
        return Err(Error::ComplementEmpty);
    }
    let n = s.parties();
    for level in 1..n {
        if !verify_level(s, level)?.is_unextendible() {
            return Ok(level);
        }
    }
    Ok(n)
}
