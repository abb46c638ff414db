//! Product vectors, party partitions and pure-state entanglement depth.
//!
//! Vectors are never normalized: `|+>` is `(1, 1)` and `|->` is `(1, -1)`.
//! All checks in this crate (orthogonality, rank, spanning) are invariant
//! under rescaling, so this keeps every entry in the base field.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{self, digits_of, dot, gram_projector, is_zero_vector, kron, partial_transpose, psd_check, Matrix};
use crate::scalar::Field;

/// A fully product vector `|phi_1> (x) ... (x) |phi_n>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductVector<T> {
    factors: Vec<Vec<T>>,
}

impl<T: Field> ProductVector<T> {
    /// Every factor must be nonempty and nonzero. A vector with no factors is
    /// the scalar `1` on zero parties.
    pub fn new(factors: Vec<Vec<T>>) -> Result<Self> {
        for (i, f) in factors.iter().enumerate() {
            if f.is_empty() {
                return Err(Error::DimensionMismatch(format!("factor {i} is empty")));
            }
            if is_zero_vector(f) {
                return Err(Error::ZeroVector(format!("factor {i} of a product vector")));
            }
        }
        Ok(Self { factors })
    }

    pub fn factors(&self) -> &[Vec<T>] {
        &self.factors
    }

    pub fn factor(&self, party: usize) -> &[T] {
        &self.factors[party]
    }

    pub fn parties(&self) -> usize {
        self.factors.len()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.factors.iter().map(Vec::len).collect()
    }

    /// Full tensor product, folded left to right.
    pub fn expand(&self) -> Vec<T> {
        self.factors.iter().fold(vec![T::one()], |acc, f| kron(&acc, f))
    }

    /// Regroups the factors along `p`: block `i` becomes the Kronecker product
    /// of its parties' factors in ascending party order.
    pub fn coarse_grain(&self, p: &Partition) -> Result<ProductVector<T>> {
        if p.parties() != self.parties() {
            return Err(Error::DimensionMismatch(format!(
                "partition of {} parties applied to a {}-party vector",
                p.parties(),
                self.parties()
            )));
        }
        let factors = p
            .blocks()
            .iter()
            .map(|block| {
                block
                    .iter()
                    .fold(vec![T::one()], |acc, &party| kron(&acc, &self.factors[party]))
            })
            .collect();
        Ok(ProductVector { factors })
    }

    /// `<self|other>` computed factorwise.
    pub fn inner(&self, other: &Self) -> T {
        self.factors
            .iter()
            .zip(&other.factors)
            .fold(T::one(), |acc, (a, b)| acc * dot(a, b))
    }
}

/// A nonempty list of product vectors sharing local dimensions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductSet<T> {
    dims: Vec<usize>,
    vectors: Vec<ProductVector<T>>,
}

impl<T: Field> ProductSet<T> {
    pub fn new(dims: Vec<usize>, vectors: Vec<ProductVector<T>>) -> Result<Self> {
        if vectors.is_empty() {
            return Err(Error::Precondition("a product set needs at least one vector".into()));
        }
        if dims.is_empty() || dims.contains(&0) {
            return Err(Error::DimensionMismatch("local dimensions must be positive".into()));
        }
        if let Some(i) = vectors.iter().position(|v| v.dims() != dims) {
            return Err(Error::DimensionMismatch(format!(
                "vector {i} has local dimensions {:?}, expected {dims:?}",
                vectors[i].dims()
            )));
        }
        Ok(Self { dims, vectors })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn parties(&self) -> usize {
        self.dims.len()
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().product()
    }

    pub fn vectors(&self) -> &[ProductVector<T>] {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// Members expanded to global vectors, one per row.
    pub fn expanded(&self) -> Matrix<T> {
        Matrix::from_rows(
            self.total_dim(),
            self.vectors.iter().map(ProductVector::expand).collect(),
        )
        .expect("all members share dims")
    }

    /// Rank of the expanded members.
    pub fn rank(&self) -> usize {
        linalg::rank(&self.expanded())
    }

    pub fn coarse_grain(&self, p: &Partition) -> Result<ProductSet<T>> {
        let vectors = self
            .vectors
            .iter()
            .map(|v| v.coarse_grain(p))
            .collect::<Result<Vec<_>>>()?;
        ProductSet::new(p.block_dims(&self.dims), vectors)
    }

    /// First pair `(i, j)`, `i < j`, whose members are not orthogonal.
    pub fn first_non_orthogonal_pair(&self) -> Option<(usize, usize)> {
        let m = self.vectors.len();
        (0..m)
            .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
            .find(|&(i, j)| !self.vectors[i].inner(&self.vectors[j]).is_zero())
    }

    pub fn is_mutually_orthogonal(&self) -> bool {
        self.first_non_orthogonal_pair().is_none()
    }

    /// A copy without member `index`.
    pub fn without(&self, index: usize) -> Result<ProductSet<T>> {
        let vectors = self
            .vectors
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != index)
            .map(|(_, v)| v.clone())
            .collect();
        ProductSet::new(self.dims.clone(), vectors)
    }

    /// A copy with `v` appended.
    pub fn with(&self, v: ProductVector<T>) -> Result<ProductSet<T>> {
        let mut vectors = self.vectors.clone();
        vectors.push(v);
        ProductSet::new(self.dims.clone(), vectors)
    }
}

/// Linearly independent global vectors spanning a subspace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceBasis<T> {
    dims: Vec<usize>,
    basis: Matrix<T>,
}

impl<T: Field> SubspaceBasis<T> {
    pub fn new(dims: Vec<usize>, basis: Matrix<T>) -> Result<Self> {
        let total: usize = dims.iter().product();
        if dims.is_empty() || basis.cols() != total {
            return Err(Error::DimensionMismatch(format!(
                "basis rows of length {} for local dimensions {dims:?}",
                basis.cols()
            )));
        }
        if linalg::rank(&basis) != basis.rows() {
            return Err(Error::NotIndependent);
        }
        Ok(Self { dims, basis })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn basis(&self) -> &Matrix<T> {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    /// `sum_i coeffs[i] * row_i`.
    pub fn combine(&self, coeffs: &[T]) -> Result<Vec<T>> {
        if coeffs.len() != self.basis.rows() {
            return Err(Error::DimensionMismatch(format!(
                "{} coefficients for {} basis rows",
                coeffs.len(),
                self.basis.rows()
            )));
        }
        let mut out = vec![T::zero(); self.basis.cols()];
        for (c, row) in coeffs.iter().zip(self.basis.row_iter()) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(row) {
                *o += c.clone() * x;
            }
        }
        Ok(out)
    }
}

/// A division of the parties `0..n` into disjoint nonempty blocks.
///
/// Blocks are sorted internally and ordered by their smallest party. Parties
/// are 0-based in the API and printed 1-based.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
    parties: usize,
}

impl Partition {
    pub fn new(mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let parties: usize = blocks.iter().map(Vec::len).sum();
        let mut seen = vec![false; parties];
        for block in &mut blocks {
            if block.is_empty() {
                return Err(Error::Precondition("partition blocks must be nonempty".into()));
            }
            block.sort_unstable();
            for &p in block.iter() {
                if p >= parties || seen[p] {
                    return Err(Error::Precondition(format!(
                        "blocks must be a disjoint cover of parties 1..={parties}"
                    )));
                }
                seen[p] = true;
            }
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(Self { blocks, parties })
    }

    /// `{0}|{1}|...|{n-1}`.
    pub fn singletons(n: usize) -> Self {
        Self {
            blocks: (0..n).map(|p| vec![p]).collect(),
            parties: n,
        }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn parties(&self) -> usize {
        self.parties
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn max_block(&self) -> usize {
        self.blocks.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn block_dims(&self, dims: &[usize]) -> Vec<usize> {
        self.blocks
            .iter()
            .map(|b| b.iter().map(|&p| dims[p]).product())
            .collect()
    }

    /// Party lists shifted to 1-based labels.
    pub fn one_based(&self) -> Vec<Vec<usize>> {
        self.blocks.iter().map(|b| b.iter().map(|p| p + 1).collect()).collect()
    }

    /// Inverse of [`Partition::one_based`].
    pub fn from_one_based(blocks: &[Vec<usize>]) -> Result<Self> {
        let shifted = blocks
            .iter()
            .map(|b| {
                b.iter()
                    .map(|&p| {
                        p.checked_sub(1)
                            .ok_or_else(|| Error::Precondition("party labels start at 1".into()))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(shifted)
    }

    /// All two-block partitions of `n` parties in canonical order.
    pub fn bipartitions(n: usize) -> Vec<Partition> {
        let mut out: Vec<Partition> = (1..(1usize << n) - 1)
            .filter(|mask| mask & 1 == 1)
            .map(|mask| {
                let (a, b): (Vec<usize>, Vec<usize>) = (0..n).partition(|&p| mask >> p & 1 == 1);
                Partition {
                    blocks: vec![a, b],
                    parties: n,
                }
            })
            .collect();
        out.sort();
        out
    }

    /// Global-order expansion of a vector that is a product across this
    /// partition, given one factor per block (block-internal index with the
    /// block's parties in ascending order).
    pub fn expand_product<T: Field>(&self, factors: &[Vec<T>], dims: &[usize]) -> Result<Vec<T>> {
        let bdims = self.block_dims(dims);
        if factors.len() != self.blocks.len() || factors.iter().zip(&bdims).any(|(f, &d)| f.len() != d) {
            return Err(Error::DimensionMismatch(
                "factors do not match the partition blocks".into(),
            ));
        }
        let total: usize = dims.iter().product();
        let mut out = Vec::with_capacity(total);
        for g in 0..total {
            let digits = digits_of(g, dims);
            let value = self.blocks.iter().zip(factors).fold(T::one(), |acc, (block, f)| {
                let local = block.iter().fold(0, |i, &p| i * dims[p] + digits[p]);
                acc * &f[local]
            });
            out.push(value);
        }
        Ok(out)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            f.write_str("{")?;
            for (j, p) in block.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", p + 1)?;
            }
            f.write_str("}")?;
        }
        Ok(())
    }
}

/// Upper limit on the party count for partition enumeration.
pub const MAX_PARTITION_PARTIES: usize = 10;

/// All partitions of `n` parties into blocks of at most `max_block` parties
/// that are maximal: no two blocks can be merged without exceeding
/// `max_block`. Sorted lexicographically by block lists.
///
/// A vector that is a product across some partition is also a product across
/// every coarsening of it, so these partitions suffice for level checks.
pub fn enumerate_maximal_partitions(n: usize, max_block: usize) -> Result<Vec<Partition>> {
    if n > MAX_PARTITION_PARTIES {
        return Err(Error::TooLarge {
            what: "party count",
            value: n,
            limit: MAX_PARTITION_PARTIES,
        });
    }
    if n == 0 || max_block == 0 || max_block > n {
        return Err(Error::Precondition(format!(
            "block size limit {max_block} must lie in 1..={n}"
        )));
    }
    let mut out = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    grow_partitions(0, n, max_block, &mut blocks, &mut out);
    out.sort();
    Ok(out)
}

fn grow_partitions(party: usize, n: usize, max_block: usize, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<Partition>) {
    if party == n {
        let mut sizes: Vec<usize> = blocks.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        // maximal iff the two smallest blocks cannot merge
        if sizes.len() < 2 || sizes[0] + sizes[1] > max_block {
            out.push(Partition {
                blocks: blocks.clone(),
                parties: n,
            });
        }
        return;
    }
    for i in 0..blocks.len() {
        if blocks[i].len() < max_block {
            blocks[i].push(party);
            grow_partitions(party + 1, n, max_block, blocks, out);
            blocks[i].pop();
        }
    }
    blocks.push(vec![party]);
    grow_partitions(party + 1, n, max_block, blocks, out);
    blocks.pop();
}

/// Upper limit on the party count for [`vector_depth`].
pub const MAX_DEPTH_PARTIES: usize = 12;

/// Entanglement depth of a pure state and its finest product decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Depth {
    pub depth: usize,
    pub finest: Partition,
}

/// Computes the entanglement depth of `v` on parties with local dimensions
/// `dims`.
///
/// A bipartition `S|S'` splits `v` iff reshaping `v` into a matrix with rows
/// indexed by `S` and columns by `S'` gives rank one. Two parties share a
/// block of the finest decomposition iff no splitting bipartition separates
/// them; the depth is the largest block size.
pub fn vector_depth<T: Field>(v: &[T], dims: &[usize]) -> Result<Depth> {
    let n = dims.len();
    if n == 0 {
        return Err(Error::DimensionMismatch("no parties".into()));
    }
    if n > MAX_DEPTH_PARTIES {
        return Err(Error::TooLarge {
            what: "party count",
            value: n,
            limit: MAX_DEPTH_PARTIES,
        });
    }
    let total: usize = dims.iter().product();
    if v.len() != total {
        return Err(Error::DimensionMismatch(format!(
            "vector of length {} for local dimensions {dims:?}",
            v.len()
        )));
    }
    if is_zero_vector(v) {
        return Err(Error::ZeroVector("depth of the zero vector".into()));
    }
    let digits: Vec<Vec<usize>> = (0..total).map(|g| digits_of(g, dims)).collect();
    // masks containing party 0, excluding the full set
    let splitting: Vec<usize> = (1..(1usize << n) - 1)
        .into_par_iter()
        .filter(|mask| mask & 1 == 1)
        .filter(|&mask| splits(v, dims, &digits, mask))
        .collect();

    let mut class = vec![usize::MAX; n];
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        if class[i] != usize::MAX {
            continue;
        }
        class[i] = blocks.len();
        let mut block = vec![i];
        for (j, c) in class.iter_mut().enumerate().skip(i + 1) {
            if *c == usize::MAX && splitting.iter().all(|m| (m >> i & 1) == (m >> j & 1)) {
                *c = blocks.len();
                block.push(j);
            }
        }
        blocks.push(block);
    }
    let finest = Partition::new(blocks)?;
    Ok(Depth {
        depth: finest.max_block(),
        finest,
    })
}

// Rank-one test of the reshape of `v` along the bipartition `mask | rest`.
fn splits<T: Field>(v: &[T], dims: &[usize], digits: &[Vec<usize>], mask: usize) -> bool {
    let index_in = |g: usize, inside: bool| -> usize {
        digits[g]
            .iter()
            .zip(dims)
            .enumerate()
            .filter(|(p, _)| (mask >> p & 1 == 1) == inside)
            .fold(0, |acc, (_, (&s, &d))| acc * d + s)
    };
    let cols: usize = dims
        .iter()
        .enumerate()
        .filter(|(p, _)| mask >> p & 1 == 0)
        .map(|(_, &d)| d)
        .product();
    let rows = v.len() / cols;
    let mut m: Vec<Option<&T>> = vec![None; rows * cols];
    for (g, x) in v.iter().enumerate() {
        m[index_in(g, true) * cols + index_in(g, false)] = Some(x);
    }
    let at = |r: usize, c: usize| m[r * cols + c].expect("reshape is a bijection");
    let pivot = (0..rows * cols)
        .find(|&i| !at(i / cols, i % cols).is_zero())
        .expect("v is nonzero");
    let (r0, c0) = (pivot / cols, pivot % cols);
    let p = at(r0, c0);
    (0..rows).all(|r| {
        let a = at(r, c0);
        (0..cols).all(|c| {
            let (x, y) = (at(r, c), at(r0, c));
            match (x.is_zero(), a.is_zero() || y.is_zero()) {
                (true, true) => true,
                (true, false) | (false, true) => false,
                (false, false) => x.clone() * p == a.clone() * y,
            }
        })
    })
}

/// Mixed state built from a product set: the normalized projector onto the
/// orthocomplement of its span.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PptState<T> {
    pub rho: Matrix<T>,
    pub rho_psd: bool,
    /// Positivity of the partial transpose over the second block of every
    /// bipartition, in canonical order.
    pub ppt_verdicts: Vec<(Partition, bool)>,
}

impl<T> PptState<T> {
    pub fn is_ppt(&self) -> bool {
        self.ppt_verdicts.iter().all(|(_, ok)| *ok)
    }
}

/// `rho = (I - P) / (D - m)` for the projector `P` onto the span of the
/// set, plus exact PSD verdicts for every partial transpose.
pub fn ppt_state_from_set<T: Field>(s: &ProductSet<T>) -> Result<PptState<T>> {
    let b = s.expanded();
    let d = s.total_dim();
    let m = s.len();
    let r = linalg::rank(&b);
    if r == d {
        return Err(Error::ComplementEmpty);
    }
    if r < m {
        return Err(Error::NotIndependent);
    }
    let p = gram_projector(&b)?;
    let scale = T::one() / T::from_int((d - m) as i64);
    let rho = Matrix::identity(d).sub(&p)?.scale(&scale);
    let rho_psd = psd_check(&rho)?;
    let ppt_verdicts = Partition::bipartitions(s.parties())
        .into_par_iter()
        .map(|bp| {
            let pt = partial_transpose(&rho, s.dims(), &bp.blocks()[1])?;
            Ok((bp, psd_check(&pt)?))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PptState {
        rho,
        rho_psd,
        ppt_verdicts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rational, Rational};

    fn pv(factors: &[&[i64]]) -> ProductVector<Rational> {
        ProductVector::new(factors.iter().map(|f| f.iter().map(|&x| int(x)).collect()).collect()).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    fn vandermonde_factors(d: u64, n: u32, x: &Rational) -> ProductVector<Rational> {
        let factors = (1..=n)
            .map(|m| (0..d).map(|s| x.pow_u64(s * d.pow(n - m))).collect())
            .collect();
        ProductVector::new(factors).unwrap()
    }

    #[test]
    fn expand_examples() {
        let mut e0 = vec![int(0); 8];
        e0[0] = int(1);
        assert_eq!(pv(&[&[1, 0], &[1, 0], &[1, 0]]).expand(), e0);
        assert_eq!(
            pv(&[&[0, 1], &[1, 1], &[1, -1]]).expand(),
            ints(&[0, 0, 0, 0, 1, -1, 1, -1])
        );
        let v = vandermonde_factors(2, 3, &int(2));
        assert_eq!(v.expand(), ints(&[1, 2, 4, 8, 16, 32, 64, 128]));
    }

    #[test]
    fn product_vector_rejects_zero_factor() {
        assert!(matches!(
            ProductVector::new(vec![ints(&[1, 0]), ints(&[0, 0])]),
            Err(Error::ZeroVector(_))
        ));
    }

    #[test]
    fn coarse_grain_examples() {
        let v = pv(&[&[1, 2], &[3, 4], &[5, 6]]);
        assert_eq!(v.coarse_grain(&Partition::singletons(3)).unwrap(), v);

        let zero = pv(&[&[1, 0], &[1, 0], &[1, 0]]);
        let p = Partition::new(vec![vec![0, 1], vec![2]]).unwrap();
        assert_eq!(zero.coarse_grain(&p).unwrap(), pv(&[&[1, 0, 0, 0], &[1, 0]]));

        let x = int(3);
        let v = vandermonde_factors(2, 4, &x);
        let p = Partition::new(vec![vec![0, 1], vec![2, 3]]).unwrap();
        let cg = v.coarse_grain(&p).unwrap();
        let pw = |e: u64| x.pow_u64(e);
        assert_eq!(cg.factor(0), &[pw(0), pw(4), pw(8), pw(12)]);
        assert_eq!(cg.factor(1), &[pw(0), pw(1), pw(2), pw(3)]);
    }

    #[test]
    fn orthogonality() {
        let s = ProductSet::new(vec![2, 2], vec![pv(&[&[1, 0], &[1, 0]]), pv(&[&[1, 0], &[1, 1]])]).unwrap();
        assert_eq!(s.first_non_orthogonal_pair(), Some((0, 1)));
        assert!(!s.is_mutually_orthogonal());
    }

    #[test]
    fn product_set_validation() {
        assert!(ProductSet::<Rational>::new(vec![2, 2], vec![]).is_err());
        assert!(ProductSet::new(vec![2, 2], vec![pv(&[&[1, 0], &[1, 0, 0]])]).is_err());
    }

    #[test]
    fn partition_validation_and_display() {
        let p = Partition::new(vec![vec![3, 0], vec![2, 1]]).unwrap();
        assert_eq!(p.blocks(), &[vec![0, 3], vec![1, 2]]);
        assert_eq!(p.to_string(), "{1,4}|{2,3}");
        assert_eq!(Partition::from_one_based(&[vec![1, 4], vec![2, 3]]).unwrap(), p);
        assert!(Partition::new(vec![vec![0, 1], vec![1]]).is_err());
        assert!(Partition::new(vec![vec![0, 2]]).is_err());
        assert!(Partition::new(vec![vec![0], vec![]]).is_err());
        assert!(Partition::from_one_based(&[vec![0, 1]]).is_err());
    }

    #[test]
    fn maximal_partition_examples() {
        let two_two: Vec<String> = enumerate_maximal_partitions(4, 2)
            .unwrap()
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(two_two, ["{1,2}|{3,4}", "{1,3}|{2,4}", "{1,4}|{2,3}"]);

        let five = enumerate_maximal_partitions(5, 3).unwrap();
        assert_eq!(five.len(), 10);
        assert!(five.iter().all(|p| {
            let mut sizes: Vec<usize> = p.blocks().iter().map(Vec::len).collect();
            sizes.sort_unstable();
            sizes == [2, 3]
        }));

        let three = enumerate_maximal_partitions(3, 2).unwrap();
        assert_eq!(three.len(), 3);
        assert!(three.iter().all(|p| p.len() == 2));

        assert_eq!(
            enumerate_maximal_partitions(3, 1).unwrap(),
            vec![Partition::singletons(3)]
        );
        assert_eq!(enumerate_maximal_partitions(3, 3).unwrap().len(), 1);
        assert!(enumerate_maximal_partitions(11, 3).is_err());
        assert!(enumerate_maximal_partitions(4, 5).is_err());
    }

    #[test]
    fn bipartitions_are_canonical() {
        let b = Partition::bipartitions(3);
        let names: Vec<String> = b.iter().map(ToString::to_string).collect();
        assert_eq!(names, ["{1}|{2,3}", "{1,2}|{3}", "{1,3}|{2}"]);
        assert_eq!(Partition::bipartitions(5).len(), 15);
    }

    #[test]
    fn depth_examples() {
        let mut e0 = vec![int(0); 8];
        e0[0] = int(1);
        let d = vector_depth(&e0, &[2, 2, 2]).unwrap();
        assert_eq!(d.depth, 1);
        assert_eq!(d.finest, Partition::singletons(3));

        let ghz = ints(&[1, 0, 0, 0, 0, 0, 0, 1]);
        let d = vector_depth(&ghz, &[2, 2, 2]).unwrap();
        assert_eq!(d.depth, 3);
        assert_eq!(d.finest.len(), 1);

        // Bell pair on parties 1,3 times |+> on party 2
        let bell13 = Partition::new(vec![vec![0, 2], vec![1]])
            .unwrap()
            .expand_product(&[ints(&[1, 0, 0, 1]), ints(&[1, 1])], &[2, 2, 2])
            .unwrap();
        let d = vector_depth(&bell13, &[2, 2, 2]).unwrap();
        assert_eq!(d.depth, 2);
        assert_eq!(d.finest.to_string(), "{1,3}|{2}");

        assert!(matches!(
            vector_depth(&vec![int(0); 4], &[2, 2]),
            Err(Error::ZeroVector(_))
        ));
        assert!(vector_depth(&ints(&[1, 0, 0]), &[2, 2]).is_err());
    }

    #[test]
    fn expand_product_matches_expand_for_singletons() {
        let v = pv(&[&[1, 2], &[3, -1, 5], &[2, 7]]);
        let p = Partition::singletons(3);
        assert_eq!(p.expand_product(v.factors(), &v.dims()).unwrap(), v.expand());
    }

    #[test]
    fn ppt_state_of_single_vector() {
        let s = ProductSet::new(vec![2, 2], vec![pv(&[&[1, 0], &[1, 0]])]).unwrap();
        let st = ppt_state_from_set(&s).unwrap();
        let third = rational(1, 3);
        let mut expected = Matrix::zeros(4, 4);
        for i in 1..4 {
            expected.set(i, i, third.clone());
        }
        assert_eq!(st.rho, expected);
        assert!(st.rho_psd);
        assert!(st.is_ppt());
        assert_eq!(st.ppt_verdicts.len(), 1);
    }

    #[test]
    fn ppt_state_errors() {
        let basis = ProductSet::new(vec![2], vec![pv(&[&[1, 0]]), pv(&[&[0, 1]])]).unwrap();
        assert_eq!(ppt_state_from_set(&basis), Err(Error::ComplementEmpty));
        let dependent = ProductSet::new(vec![2, 2], vec![pv(&[&[1, 0], &[1, 0]]), pv(&[&[2, 0], &[1, 0]])]).unwrap();
        assert_eq!(ppt_state_from_set(&dependent), Err(Error::NotIndependent));
    }
}
