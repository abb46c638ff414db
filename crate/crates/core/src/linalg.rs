//! Dense exact linear algebra over a [`Field`].
//!
//! Matrices are row-major. Multi-party indices follow the convention used
//! throughout the crate: for local dimensions `dims`, the global index of the
//! digit tuple `(s_1, ..., s_n)` is the mixed-radix number with party 1 as the
//! most significant digit, so `kron(a, b)[i * b.len() + j] = a[i] * b[j]`.

use crate::error::{Error, Result};
use crate::scalar::Field;

/// Dense row-major matrix.
///
/// A matrix may have zero rows (an empty basis) but always has a definite
/// column count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Field> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    /// Builds a matrix from row vectors, which must share one length.
    pub fn from_rows(cols: usize, rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has length {}, expected {cols}",
                    row.len()
                )));
            }
            data.extend(row);
        }
        Ok(Self { rows: n, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = T::one();
        }
        m
    }

    /// An empty (zero-row) matrix with `cols` columns.
    pub fn empty(cols: usize) -> Self {
        Self::zeros(0, cols)
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[T]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        self.row_iter().map(<[T]>::to_vec).collect()
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc + self.get(i, i))
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a.clone() * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// `self * v` for a column vector `v`.
    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok(self.row_iter().map(|r| dot(r, v)).collect())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.clone() * c).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch("matrix shapes differ".into()));
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.clone() - b).collect(),
        })
    }

    /// Submatrix picking the given rows and columns, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                data.push(self.get(i, j).clone());
            }
        }
        Self {
            rows: rows.len(),
            cols: cols.len(),
            data,
        }
    }
}

pub fn dot<T: Field>(a: &[T], b: &[T]) -> T {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(T::zero(), |acc, (x, y)| acc + x.clone() * y)
}

pub fn is_zero_vector<T: Field>(v: &[T]) -> bool {
    v.iter().all(T::is_zero)
}

/// Kronecker product of two vectors; the left factor is most significant.
pub fn kron<T: Field>(a: &[T], b: &[T]) -> Vec<T> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(x.clone() * y);
        }
    }
    out
}

/// Reduced row echelon form and its ascending pivot columns.
///
/// Columns are scanned left to right; the pivot is the first nonzero entry at
/// or below the current pivot row, swapped into place and scaled to 1.
pub fn rref<T: Field>(m: &Matrix<T>) -> (Matrix<T>, Vec<usize>) {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                a.data.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = T::one() / a.get(r, c);
        for j in c..cols {
            let v = a.get(r, j).clone() * &inv;
            a.set(r, j, v);
        }
        for i in 0..rows {
            if i == r || a.get(i, c).is_zero() {
                continue;
            }
            let f = a.get(i, c).clone();
            for j in c..cols {
                if a.get(r, j).is_zero() {
                    continue;
                }
                let v = a.get(i, j).clone() - f.clone() * a.get(r, j);
                a.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank<T: Field>(m: &Matrix<T>) -> usize {
    let mut basis = IncrementalRank::new(m.cols);
    for row in m.row_iter() {
        basis.insert(row);
        if basis.rank() == m.cols {
            break;
        }
    }
    basis.rank()
}

/// Basis of the right kernel `{v : m v = 0}`, one vector per row.
///
/// For each non-pivot column `j` of `rref(m)`, in ascending order, the basis
/// vector has a 1 at `j`, zeros at the other free columns, and the solved
/// values at the pivot columns.
pub fn nullspace_basis<T: Field>(m: &Matrix<T>) -> Matrix<T> {
    let (r, pivots) = rref(m);
    let cols = m.cols;
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut out = Vec::new();
    for free in (0..cols).filter(|&j| !is_pivot[j]) {
        let mut v = vec![T::zero(); cols];
        v[free] = T::one();
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = -r.get(row, free).clone();
        }
        out.push(v);
    }
    Matrix::from_rows(cols, out).expect("rows have the column count")
}

/// Inverse of a square matrix by Gauss-Jordan elimination.
pub fn inverse<T: Field>(m: &Matrix<T>) -> Result<Matrix<T>> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
    }
    let n = m.rows;
    let mut aug = Matrix::zeros(n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            aug.set(i, j, m.get(i, j).clone());
        }
        aug.set(i, n + i, T::one());
    }
    let (red, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return Err(Error::NotIndependent);
    }
    let cols: Vec<usize> = (n..2 * n).collect();
    let rows: Vec<usize> = (0..n).collect();
    Ok(red.select(&rows, &cols))
}

/// Determinant by fraction-exact Gaussian elimination.
pub fn determinant<T: Field>(m: &Matrix<T>) -> T {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let n = m.rows;
    let mut a = m.clone();
    let mut det = T::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a.get(i, c).is_zero()) else {
            return T::zero();
        };
        if p != c {
            for j in 0..n {
                a.data.swap(p * n + j, c * n + j);
            }
            det = -det;
        }
        let piv = a.get(c, c).clone();
        det *= &piv;
        for i in c + 1..n {
            if a.get(i, c).is_zero() {
                continue;
            }
            let f = a.get(i, c).clone() / &piv;
            for j in c + 1..n {
                let v = a.get(i, j).clone() - f.clone() * a.get(c, j);
                a.set(i, j, v);
            }
        }
    }
    det
}

/// Orthogonal projector `Bᵀ (B Bᵀ)⁻¹ B` onto the row space of `basis`.
pub fn gram_projector<T: Field>(basis: &Matrix<T>) -> Result<Matrix<T>> {
    if basis.rows == 0 {
        return Ok(Matrix::zeros(basis.cols, basis.cols));
    }
    let bt = basis.transpose();
    let gram = basis.matmul(&bt)?;
    let inv = inverse(&gram)?;
    bt.matmul(&inv)?.matmul(basis)
}

/// Exact positive-semidefiniteness test for a symmetric matrix.
///
/// Runs symmetric elimination: a positive leading diagonal entry is
/// eliminated from the trailing block, a zero one requires its whole row to
/// vanish, and a negative one rejects.
pub fn psd_check<T: Field>(s: &Matrix<T>) -> Result<bool> {
    if !s.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = s.rows;
    let mut a = s.clone();
    for p in 0..n {
        let piv = a.get(p, p).clone();
        if piv.is_negative() {
            return Ok(false);
        }
        if piv.is_zero() {
            if (p + 1..n).any(|j| !a.get(p, j).is_zero()) {
                return Ok(false);
            }
            continue;
        }
        for i in p + 1..n {
            if a.get(i, p).is_zero() {
                continue;
            }
            let f = a.get(i, p).clone() / &piv;
            for j in p + 1..n {
                if a.get(p, j).is_zero() {
                    continue;
                }
                let v = a.get(i, j).clone() - f.clone() * a.get(p, j);
                a.set(i, j, v);
            }
        }
    }
    Ok(true)
}

/// Splits a global index into per-party digits (party 0 most significant).
pub fn digits_of(mut index: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for (slot, &d) in out.iter_mut().zip(dims).rev() {
        *slot = index % d;
        index /= d;
    }
    out
}

/// Inverse of [`digits_of`].
pub fn index_of(digits: &[usize], dims: &[usize]) -> usize {
    digits.iter().zip(dims).fold(0, |acc, (&s, &d)| acc * d + s)
}

/// Partial transpose of a `D x D` operator over the parties in `block`.
pub fn partial_transpose<T: Field>(m: &Matrix<T>, dims: &[usize], block: &[usize]) -> Result<Matrix<T>> {
    let total: usize = dims.iter().product();
    if m.rows != total || m.cols != total {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} operator on a space of dimension {total}",
            m.rows, m.cols
        )));
    }
    if let Some(&p) = block.iter().find(|&&p| p >= dims.len()) {
        return Err(Error::DimensionMismatch(format!(
            "party {p} out of range for {} parties",
            dims.len()
        )));
    }
    let mut out = Matrix::zeros(total, total);
    for i in 0..total {
        let di = digits_of(i, dims);
        for j in 0..total {
            let v = m.get(i, j);
            if v.is_zero() {
                continue;
            }
            let mut ri = di.clone();
            let mut rj = digits_of(j, dims);
            for &p in block {
                std::mem::swap(&mut ri[p], &mut rj[p]);
            }
            out.set(index_of(&ri, dims), index_of(&rj, dims), v.clone());
        }
    }
    Ok(out)
}

/// Lexicographic `k`-subsets of `0..n`.
pub(crate) fn combinations(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut state: Option<Vec<usize>> = if k <= n { Some((0..k).collect()) } else { None };
    std::iter::from_fn(move || {
        let current = state.take()?;
        let mut next = current.clone();
        let mut i = k;
        while i > 0 {
            i -= 1;
            if next[i] < n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                state = Some(next);
                break;
            }
        }
        Some(current)
    })
}

/// True iff every square minor of every order is strictly positive.
///
/// Exhaustive; only meant for small matrices.
pub fn all_minors_positive<T: Field>(m: &Matrix<T>) -> bool {
    for size in 1..=m.rows.min(m.cols) {
        for rows in combinations(m.rows, size) {
            for cols in combinations(m.cols, size) {
                if !determinant(&m.select(&rows, &cols)).is_positive() {
                    return false;
                }
            }
        }
    }
    true
}

/// Row-echelon basis that grows one vector at a time and can be rolled back.
///
/// Used for rank tracking inside backtracking searches.
#[derive(Debug, Clone)]
pub struct IncrementalRank<T> {
    dim: usize,
    // (pivot column, row with a 1 at the pivot and zeros at earlier pivots)
    rows: Vec<(usize, Vec<T>)>,
}

impl<T: Field> IncrementalRank<T> {
    pub fn new(dim: usize) -> Self {
        Self { dim, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.dim
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &[T]) -> bool {
        debug_assert_eq!(v.len(), self.dim);
        let mut w = v.to_vec();
        for (p, row) in &self.rows {
            if w[*p].is_zero() {
                continue;
            }
            let f = w[*p].clone();
            for (x, y) in w.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= f.clone() * y;
                }
            }
        }
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = T::one() / &w[p];
        for x in w.iter_mut() {
            *x *= &inv;
        }
        self.rows.push((p, w));
        true
    }

    /// Drops the most recently added basis vector.
    pub fn pop(&mut self) {
        self.rows.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rational, Rational};

    fn m(rows: &[&[i64]]) -> Matrix<Rational> {
        let cols = rows[0].len();
        Matrix::from_rows(cols, rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()).unwrap()
    }

    fn vandermonde(nodes: &[i64], len: usize) -> Matrix<Rational> {
        let rows = nodes
            .iter()
            .map(|&x| (0..len).map(|e| int(x).pow_u64(e as u64)).collect())
            .collect();
        Matrix::from_rows(len, rows).unwrap()
    }

    // Independent determinant by cofactor expansion along the first row.
    fn cofactor_det(a: &[Vec<Rational>]) -> Rational {
        let n = a.len();
        if n == 1 {
            return a[0][0].clone();
        }
        let mut acc = int(0);
        for j in 0..n {
            let minor: Vec<Vec<Rational>> = a[1..]
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|(c, _)| *c != j)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect();
            let term = a[0][j].clone() * cofactor_det(&minor);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn rank_examples() {
        let v = vandermonde(&[1, 2, 3, 4], 4);
        // product of (x_j - x_i) over i < j for nodes 1..4 is 1*2*3*1*2*1 = 12
        assert_eq!(cofactor_det(&v.to_rows()), int(12));
        assert_eq!(determinant(&v), int(12));
        assert_eq!(rank(&v), 4);
        assert_eq!(rank(&Matrix::<Rational>::zeros(3, 5)), 0);
        assert_eq!(rank(&Matrix::<Rational>::identity(2)), 2);
    }

    #[test]
    fn rref_examples() {
        let (r, p) = rref(&m(&[&[2, 4], &[1, 2]]));
        assert_eq!(r, m(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);

        let id = Matrix::<Rational>::identity(3);
        assert_eq!(rref(&id), (id.clone(), vec![0, 1, 2]));

        let (r, p) = rref(&m(&[&[0, 3], &[0, 0]]));
        assert_eq!(r, m(&[&[0, 1], &[0, 0]]));
        assert_eq!(p, vec![1]);
    }

    #[test]
    fn nullspace_examples() {
        let ns = nullspace_basis(&Matrix::<Rational>::identity(4));
        assert_eq!(ns.rows(), 0);
        assert_eq!(ns.cols(), 4);

        let ns = nullspace_basis(&m(&[&[1, 1, 1]]));
        assert_eq!(ns, m(&[&[-1, 1, 0], &[-1, 0, 1]]));
    }

    #[test]
    fn kron_examples() {
        let a = [int(1), int(1)];
        let b = [int(1), int(-1)];
        assert_eq!(kron(&a, &b), vec![int(1), int(-1), int(1), int(-1)]);

        // (1, x) (x) (1, x^2) at x = 3 is (1, x^2, x, x^3)
        let x = int(3);
        let got = kron(&[int(1), x.clone()], &[int(1), x.pow_u64(2)]);
        assert_eq!(got, vec![int(1), int(9), int(3), int(27)]);

        let e0 = [int(1), int(0)];
        assert_eq!(kron(&e0, &e0), vec![int(1), int(0), int(0), int(0)]);
    }

    #[test]
    fn gram_projector_examples() {
        assert_eq!(gram_projector(&m(&[&[1, 0]])).unwrap(), m(&[&[1, 0], &[0, 0]]));
        let id = Matrix::<Rational>::identity(3);
        assert_eq!(gram_projector(&id).unwrap(), id);
        let half = rational(1, 2);
        let p = gram_projector(&m(&[&[1, 1]])).unwrap();
        assert!(p.data().iter().all(|x| *x == half));
        assert_eq!(gram_projector(&m(&[&[1, 1], &[2, 2]])), Err(Error::NotIndependent));
    }

    #[test]
    fn psd_examples() {
        assert!(psd_check(&Matrix::<Rational>::identity(3)).unwrap());
        assert!(!psd_check(&m(&[&[1, 2], &[2, 1]])).unwrap());
        assert!(psd_check(&Matrix::<Rational>::zeros(2, 2)).unwrap());
        assert!(!psd_check(&m(&[&[0, 1], &[1, 5]])).unwrap());
        assert!(!psd_check(&m(&[&[-1]])).unwrap());
        assert!(psd_check(&m(&[&[1, 1], &[1, 1]])).unwrap());
        assert_eq!(psd_check(&m(&[&[1, 2], &[0, 1]])), Err(Error::NotSymmetric));
    }

    #[test]
    fn partial_transpose_examples() {
        let a = m(&[&[1, 2, 3, 4], &[5, 6, 7, 8], &[9, 10, 11, 12], &[13, 14, 15, 16]]);
        assert_eq!(partial_transpose(&a, &[2, 2], &[0, 1]).unwrap(), a.transpose());
        assert_eq!(partial_transpose(&a, &[2, 2], &[]).unwrap(), a);
        assert!(partial_transpose(&a, &[2, 3], &[0]).is_err());

        // projector onto |00> + |11> (unnormalized weight 1/2)
        let h = rational(1, 2);
        let z = int(0);
        let bell = Matrix::new(
            4,
            4,
            vec![
                h.clone(),
                z.clone(),
                z.clone(),
                h.clone(),
                z.clone(),
                z.clone(),
                z.clone(),
                z.clone(),
                z.clone(),
                z.clone(),
                z.clone(),
                z.clone(),
                h.clone(),
                z.clone(),
                z.clone(),
                h.clone(),
            ],
        )
        .unwrap();
        assert!(psd_check(&bell).unwrap());
        let pt = partial_transpose(&bell, &[2, 2], &[1]).unwrap();
        // half the swap operator: entries (0,0), (3,3), (1,2), (2,1)
        assert_eq!(*pt.get(1, 2), h);
        assert_eq!(*pt.get(2, 1), h);
        assert_eq!(*pt.get(0, 3), z);
        // |01> - |10> is an eigenvector with eigenvalue -1/2
        let v = [int(0), int(1), int(-1), int(0)];
        let pv = pt.mul_vec(&v).unwrap();
        assert_eq!(pv, v.iter().map(|x| x.clone() * rational(-1, 2)).collect::<Vec<_>>());
        assert!(!psd_check(&pt).unwrap());
    }

    #[test]
    fn minors_examples() {
        assert!(all_minors_positive(&vandermonde(&[1, 2, 3], 3)));
        assert!(!all_minors_positive(&Matrix::<Rational>::identity(2)));
        assert!(!all_minors_positive(&m(&[&[1, 2], &[3, 4]])));
    }

    #[test]
    fn combinations_enumerate_in_order() {
        let all: Vec<_> = combinations(4, 2).collect();
        assert_eq!(
            all,
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        assert_eq!(combinations(3, 0).count(), 1);
        assert_eq!(combinations(2, 3).count(), 0);
    }

    #[test]
    fn incremental_rank_rolls_back() {
        let mut r = IncrementalRank::new(2);
        assert!(r.insert(&[int(1), int(1)]));
        assert!(!r.insert(&[int(2), int(2)]));
        assert!(r.insert(&[int(1), int(-1)]));
        assert!(r.is_full());
        r.pop();
        assert_eq!(r.rank(), 1);
    }

    #[test]
    fn inverse_round_trips() {
        let a = m(&[&[2, 1], &[7, 4]]);
        let inv = inverse(&a).unwrap();
        assert_eq!(a.matmul(&inv).unwrap(), Matrix::identity(2));
        assert_eq!(inverse(&m(&[&[1, 2], &[2, 4]])), Err(Error::NotIndependent));
    }
}
