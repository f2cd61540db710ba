//! Dense exact linear algebra: reduced row echelon forms, ranks, kernels
//! and subspace sums.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{Degree, GradingSpec, PolyVector};

/// Ambient dimensions above this are refused rather than attempted.
pub const COLUMN_CAP: usize = 20_000;

#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix<F: Field> {
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> DenseMatrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        DenseMatrix { rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_rows(cols: usize, rows: Vec<Vec<F::Elem>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DegreeMismatch(format!("row of length {} in a {cols}-column matrix", r.len())));
            }
            data.extend(r);
        }
        Ok(DenseMatrix { rows: n, cols, data })
    }

    pub fn from_flat(rows: usize, cols: usize, data: Vec<F::Elem>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::InvalidArgument(format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        Ok(DenseMatrix { rows, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [F::Elem] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: F::Elem) {
        self.data[i * self.cols + j] = x;
    }

    pub fn push_row(&mut self, row: &[F::Elem]) {
        assert_eq!(row.len(), self.cols);
        self.data.extend_from_slice(row);
        self.rows += 1;
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        DenseMatrix { rows: self.cols, cols: self.rows, data }
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::DegreeMismatch(format!("stacking {} and {} columns", self.cols, other.cols)));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(DenseMatrix { rows: self.rows + other.rows, cols: self.cols, data })
    }

    /// In-place reduction to reduced row echelon form; zero rows are dropped.
    /// Returns the pivot columns.
    pub fn rref_in_place(&mut self, field: &F) -> Vec<usize> {
        let pivots = field.echelon(&mut self.data, self.rows, self.cols, true);
        self.rows = pivots.len();
        self.data.truncate(self.rows * self.cols);
        pivots
    }
}

/// Gaussian elimination on a row-major `rows x cols` matrix, pivoting on the
/// first nonzero entry. Nonzero rows end up on top; with `reduced` the
/// result is the reduced row echelon form.
pub fn echelon_generic<F: Field>(field: &F, data: &mut [F::Elem], rows: usize, cols: usize, reduced: bool) -> Vec<usize> {
    let row_range = |i: usize| i * cols..(i + 1) * cols;
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !field.is_zero(&data[i * cols + c])) else {
            continue;
        };
        if p != r {
            let (head, tail) = data.split_at_mut(p * cols);
            head[row_range(r)].swap_with_slice(&mut tail[..cols]);
        }
        let inv = field.inv(&data[r * cols + c]).expect("pivot is nonzero");
        field.scale(&mut data[r * cols + c..(r + 1) * cols], &inv);
        let (head, tail) = data.split_at_mut((r + 1) * cols);
        let pivot_row = &head[r * cols..];
        for row in tail.chunks_mut(cols) {
            if !field.is_zero(&row[c]) {
                let factor = field.neg(&row[c]);
                field.axpy(&mut row[c..], &factor, &pivot_row[c..]);
            }
        }
        pivots.push(c);
        r += 1;
    }
    if reduced {
        for (k, &c) in pivots.iter().enumerate().rev() {
            let (head, tail) = data.split_at_mut(k * cols);
            let pivot_row = &tail[..cols];
            for row in head.chunks_mut(cols) {
                if !field.is_zero(&row[c]) {
                    let factor = field.neg(&row[c]);
                    field.axpy(&mut row[c..], &factor, &pivot_row[c..]);
                }
            }
        }
    }
    pivots
}

pub fn rank<F: Field>(field: &F, m: &DenseMatrix<F>) -> usize {
    let mut data = m.data.clone();
    field.echelon(&mut data, m.rows, m.cols, false).len()
}

/// A basis of `{x : M x = 0}`, one row per free column of the row echelon
/// form of `M`.
pub fn null_space<F: Field>(field: &F, m: &DenseMatrix<F>) -> DenseMatrix<F> {
    let n = m.cols();
    let mut e = m.clone();
    let pivots = e.rref_in_place(field);
    let mut is_pivot = vec![false; n];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let mut out = DenseMatrix::zeros(field, 0, n);
    for free in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v = vec![field.zero(); n];
        v[free] = field.one();
        for (k, &c) in pivots.iter().enumerate() {
            v[c] = field.neg(e.get(k, free));
        }
        out.push_row(&v);
    }
    out
}

pub fn kernel_dim<F: Field>(field: &F, m: &DenseMatrix<F>) -> usize {
    m.cols() - rank(field, m)
}

/// A subspace of one graded piece, held as the reduced row echelon form of a
/// spanning set (pivot entries are 1, pivot columns are otherwise zero).
#[derive(Debug, Clone, PartialEq)]
pub struct SubspaceBasis<F: Field> {
    grading: GradingSpec,
    degree: Degree,
    rref: DenseMatrix<F>,
    pivots: Vec<usize>,
}

impl<F: Field> SubspaceBasis<F> {
    pub fn span(field: &F, grading: GradingSpec, degree: Degree, mut spanning: DenseMatrix<F>) -> Result<Self> {
        check_cap(spanning.cols())?;
        if spanning.cols() != grading.dim(degree) {
            return Err(Error::DegreeMismatch(format!(
                "{} columns for a piece of dimension {}",
                spanning.cols(),
                grading.dim(degree)
            )));
        }
        let pivots = spanning.rref_in_place(field);
        Ok(SubspaceBasis { grading, degree, rref: spanning, pivots })
    }

    pub fn zero(field: &F, grading: GradingSpec, degree: Degree) -> Self {
        let cols = grading.dim(degree);
        SubspaceBasis { grading, degree, rref: DenseMatrix::zeros(field, 0, cols), pivots: Vec::new() }
    }

    pub fn full(field: &F, grading: GradingSpec, degree: Degree) -> Self {
        let n = grading.dim(degree);
        SubspaceBasis { grading, degree, rref: DenseMatrix::identity(field, n), pivots: (0..n).collect() }
    }

    /// The null space `{x : M x = 0}` of a matrix whose columns are indexed by
    /// the basis of the given piece.
    pub fn kernel(field: &F, grading: GradingSpec, degree: Degree, m: &DenseMatrix<F>) -> Result<Self> {
        check_cap(m.cols())?;
        let n = m.cols();
        if n != grading.dim(degree) {
            return Err(Error::DegreeMismatch(format!("{n} columns for a piece of dimension {}", grading.dim(degree))));
        }
        Self::span(field, grading, degree, null_space(field, m))
    }

    pub fn grading(&self) -> GradingSpec {
        self.grading
    }

    pub fn degree(&self) -> Degree {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.rref.cols()
    }

    pub fn codim(&self) -> usize {
        self.ambient_dim() - self.dim()
    }

    pub fn rref(&self) -> &DenseMatrix<F> {
        &self.rref
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns that are not pivots. The matching monomials form a basis of
    /// the quotient of the ambient piece by this subspace.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient_dim()];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        (0..self.ambient_dim()).filter(|&c| !is_pivot[c]).collect()
    }

    /// Reduces `v` modulo the subspace: afterwards `v` is zero in every pivot
    /// column, and it lies in the subspace iff it is zero.
    pub fn reduce(&self, field: &F, v: &mut [F::Elem]) {
        debug_assert_eq!(v.len(), self.ambient_dim());
        for (k, &c) in self.pivots.iter().enumerate() {
            if !field.is_zero(&v[c]) {
                let factor = field.neg(&v[c]);
                field.axpy(v, &factor, self.rref.row(k));
            }
        }
    }

    pub fn contains(&self, field: &F, v: &[F::Elem]) -> bool {
        let mut w = v.to_vec();
        self.reduce(field, &mut w);
        w.iter().all(|x| field.is_zero(x))
    }

    fn same_ambient(&self, other: &Self) -> Result<()> {
        if self.grading != other.grading || self.degree != other.degree {
            return Err(Error::DegreeMismatch(format!(
                "{:?} in degree {} vs {:?} in degree {}",
                self.grading, self.degree, other.grading, other.degree
            )));
        }
        Ok(())
    }

    pub fn sum(&self, field: &F, other: &Self) -> Result<Self> {
        self.same_ambient(other)?;
        Self::span(field, self.grading, self.degree, self.rref.stack(&other.rref)?)
    }
}

fn check_cap(cols: usize) -> Result<()> {
    if cols > COLUMN_CAP {
        return Err(Error::DimensionCap { cols, cap: COLUMN_CAP });
    }
    Ok(())
}

/// Dimension of the span of homogeneous polynomials of one degree.
pub fn span_dim<F: Field>(field: &F, polys: &[PolyVector<F>]) -> Result<usize> {
    let Some(first) = polys.first() else { return Ok(0) };
    if polys.iter().any(|p| p.degree != first.degree || p.grading != first.grading) {
        return Err(Error::DegreeMismatch("span of polynomials of different degrees".into()));
    }
    let m = DenseMatrix::<F>::from_rows(first.coeffs.len(), polys.iter().map(|p| p.coeffs.clone()).collect())?;
    check_cap(m.cols())?;
    Ok(rank(field, &m))
}

pub fn union_dim<F: Field>(field: &F, a: &SubspaceBasis<F>, b: &SubspaceBasis<F>) -> Result<usize> {
    Ok(a.sum(field, b)?.dim())
}
