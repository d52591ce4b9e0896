//! Dense matrices over an exact [`Field`].
//!
//! Matrices are stored row-major. Zero-row and zero-column matrices are
//! ordinary values: they stand for maps into or out of the zero space.
//! All elimination uses the first nonzero entry of a column as pivot, so
//! every basis produced here is a deterministic function of the input.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use super::field::{Field, Scalar};
use crate::error::Error;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub reduced: Mat,
    pub pivots: Vec<usize>,
}

impl Mat {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Mat {
        Mat {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Mat {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Mat {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Mat { field, rows, cols, data }
    }

    /// Builds a matrix from row-major data, checking entry count and field membership.
    pub fn from_vec(field: Field, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Mat, Error> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: (rows, cols),
                found: (data.len(), 1),
            });
        }
        if let Some(bad) = data.iter().find(|s| !field.contains(s)) {
            return Err(Error::BadScalar(alloc::format!("{bad} not in {field}")));
        }
        Ok(Mat { field, rows, cols, data })
    }

    /// Row-major integer data, reduced into the field.
    pub fn from_i64(field: Field, rows: usize, cols: usize, data: &[i64]) -> Mat {
        assert_eq!(data.len(), rows * cols, "entry count must be rows*cols");
        Mat {
            field,
            rows,
            cols,
            data: data.iter().map(|&v| field.from_i64(v)).collect(),
        }
    }

    pub fn from_rows(field: Field, rows: &[Vec<Scalar>]) -> Result<Mat, Error> {
        let cols = rows.first().map_or(0, |r| r.len());
        if let Some(r) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch {
                expected: (rows.len(), cols),
                found: (rows.len(), r.len()),
            });
        }
        Mat::from_vec(field, rows.len(), cols, rows.iter().flatten().cloned().collect())
    }

    /// A single column vector.
    pub fn column(field: Field, entries: Vec<Scalar>) -> Mat {
        let n = entries.len();
        Mat { field, rows: n, cols: 1, data: entries }
    }

    /// The `i`-th standard basis column of length `n`.
    pub fn unit(field: Field, n: usize, i: usize) -> Mat {
        let mut m = Mat::zeros(field, n, 1);
        m.data[i] = field.one();
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        debug_assert!(self.field.contains(&v));
        self.data[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|s| self.field.is_zero(s))
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.field, self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn scale(&self, s: &Scalar) -> Mat {
        Mat {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| self.field.mul(x, s)).collect(),
        }
    }

    fn zip_with(&self, other: &Mat, op: impl Fn(&Scalar, &Scalar) -> Scalar) -> Mat {
        assert_eq!(self.shape(), other.shape(), "shape mismatch in elementwise op");
        assert_eq!(self.field, other.field, "field mismatch");
        Mat {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| op(a, b)).collect(),
        }
    }

    pub fn mul_mat(&self, other: &Mat) -> Mat {
        assert_eq!(
            self.cols, other.rows,
            "cannot multiply {}x{} by {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        assert_eq!(self.field, other.field, "field mismatch");
        let f = self.field;
        let mut out = Mat::zeros(f, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if f.is_zero(a) {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if f.is_zero(b) {
                        continue;
                    }
                    let idx = r * out.cols + c;
                    out.data[idx] = f.add(&out.data[idx], &f.mul(a, b));
                }
            }
        }
        out
    }

    pub fn try_mul(&self, other: &Mat) -> Result<Mat, Error> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: (self.cols, other.cols),
                found: other.shape(),
            });
        }
        Ok(self.mul_mat(other))
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows, "hstack needs equal row counts");
        Mat::from_fn(self.field, self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                other.get(r, c - self.cols).clone()
            }
        })
    }

    /// `[self ; other]`.
    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols, "vstack needs equal column counts");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Mat {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn hstack_all(field: Field, rows: usize, blocks: &[Mat]) -> Mat {
        blocks
            .iter()
            .fold(Mat::zeros(field, rows, 0), |acc, b| acc.hstack(b))
    }

    pub fn vstack_all(field: Field, cols: usize, blocks: &[Mat]) -> Mat {
        blocks
            .iter()
            .fold(Mat::zeros(field, 0, cols), |acc, b| acc.vstack(b))
    }

    pub fn block_diag(&self, other: &Mat) -> Mat {
        Mat::from_fn(self.field, self.rows + other.rows, self.cols + other.cols, |r, c| {
            match (r < self.rows, c < self.cols) {
                (true, true) => self.get(r, c).clone(),
                (false, false) => other.get(r - self.rows, c - self.cols).clone(),
                _ => self.field.zero(),
            }
        })
    }

    pub fn submatrix(&self, rows: core::ops::Range<usize>, cols: core::ops::Range<usize>) -> Mat {
        let (r0, c0) = (rows.start, cols.start);
        Mat::from_fn(self.field, rows.len(), cols.len(), |r, c| self.get(r0 + r, c0 + c).clone())
    }

    pub fn select_cols(&self, cols: &[usize]) -> Mat {
        Mat::from_fn(self.field, self.rows, cols.len(), |r, c| self.get(r, cols[c]).clone())
    }

    pub fn select_rows(&self, rows: &[usize]) -> Mat {
        Mat::from_fn(self.field, rows.len(), self.cols, |r, c| self.get(rows[r], c).clone())
    }

    pub fn echelon(&self) -> Echelon {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut prow = 0;
        for c in 0..m.cols {
            if prow == m.rows {
                break;
            }
            let Some(r) = (prow..m.rows).find(|&r| !f.is_zero(m.get(r, c))) else {
                continue;
            };
            if r != prow {
                for k in 0..m.cols {
                    m.data.swap(r * m.cols + k, prow * m.cols + k);
                }
            }
            let inv = f.inv(m.get(prow, c)).expect("pivot is nonzero");
            for k in c..m.cols {
                let idx = prow * m.cols + k;
                m.data[idx] = f.mul(&m.data[idx], &inv);
            }
            for r2 in 0..m.rows {
                if r2 == prow {
                    continue;
                }
                let factor = m.get(r2, c).clone();
                if f.is_zero(&factor) {
                    continue;
                }
                for k in c..m.cols {
                    let p = m.data[prow * m.cols + k].clone();
                    if f.is_zero(&p) {
                        continue;
                    }
                    let idx = r2 * m.cols + k;
                    m.data[idx] = f.sub(&m.data[idx], &f.mul(&factor, &p));
                }
            }
            pivots.push(c);
            prow += 1;
        }
        Echelon { reduced: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Columns form a basis of the null space.
    pub fn kernel(&self) -> Mat {
        let f = self.field;
        let ech = self.echelon();
        let free: Vec<usize> = (0..self.cols).filter(|c| !ech.pivots.contains(c)).collect();
        let mut out = Mat::zeros(f, self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            out.set(fc, k, f.one());
            for (row, &pc) in ech.pivots.iter().enumerate() {
                out.set(pc, k, f.neg(ech.reduced.get(row, fc)));
            }
        }
        out
    }

    /// A full-row-rank `q` with `q * self = 0` whose kernel is the column space of `self`.
    pub fn cokernel(&self) -> Mat {
        self.transpose().kernel().transpose()
    }

    /// Some `x` with `self * x = b`, or `None` when `b` is outside the column space.
    pub fn solve(&self, b: &Mat) -> Result<Option<Mat>, Error> {
        if self.rows != b.rows {
            return Err(Error::DimensionMismatch {
                expected: (self.rows, b.cols),
                found: b.shape(),
            });
        }
        let f = self.field;
        let ech = self.hstack(b).echelon();
        if ech.pivots.iter().any(|&p| p >= self.cols) {
            return Ok(None);
        }
        let mut x = Mat::zeros(f, self.cols, b.cols);
        for (row, &pc) in ech.pivots.iter().enumerate() {
            for c in 0..b.cols {
                x.set(pc, c, ech.reduced.get(row, self.cols + c).clone());
            }
        }
        Ok(Some(x))
    }

    /// Like [`Mat::solve`], but when no solution exists returns a row vector `y`
    /// with `y * self = 0` and `y * b != 0`.
    pub fn solve_or_certificate(&self, b: &Mat) -> Result<Result<Mat, Mat>, Error> {
        match self.solve(b)? {
            Some(x) => Ok(Ok(x)),
            None => {
                let q = self.cokernel();
                let qb = q.mul_mat(b);
                let row = (0..qb.rows)
                    .find(|&r| qb.row(r).iter().any(|s| !self.field.is_zero(s)))
                    .expect("an unsolvable system has a separating functional");
                Ok(Err(q.select_rows(&[row])))
            }
        }
    }

    /// Solves `x * self = b` for `x`.
    pub fn solve_left(&self, b: &Mat) -> Result<Option<Mat>, Error> {
        Ok(self.transpose().solve(&b.transpose())?.map(|x| x.transpose()))
    }

    /// A right inverse when `self` has full row rank.
    pub fn right_inverse(&self) -> Option<Mat> {
        self.solve(&Mat::identity(self.field, self.rows)).ok().flatten()
    }

    /// A left inverse when `self` has full column rank.
    pub fn left_inverse(&self) -> Option<Mat> {
        self.solve_left(&Mat::identity(self.field, self.cols)).ok().flatten()
    }

    pub fn inverse(&self) -> Option<Mat> {
        if !self.is_square() {
            return None;
        }
        self.right_inverse()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.cols
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.rows
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.is_injective()
    }

    /// True when every column of `other` lies in the column space of `self`.
    pub fn spans(&self, other: &Mat) -> bool {
        matches!(self.solve(other), Ok(Some(_)))
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl Mul for &Mat {
    type Output = Mat;
    fn mul(self, rhs: &Mat) -> Mat {
        self.mul_mat(rhs)
    }
}

impl Add for &Mat {
    type Output = Mat;
    fn add(self, rhs: &Mat) -> Mat {
        let f = self.field;
        self.zip_with(rhs, |a, b| f.add(a, b))
    }
}

impl Sub for &Mat {
    type Output = Mat;
    fn sub(self, rhs: &Mat) -> Mat {
        let f = self.field;
        self.zip_with(rhs, |a, b| f.sub(a, b))
    }
}

impl Neg for &Mat {
    type Output = Mat;
    fn neg(self) -> Mat {
        Mat {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| self.field.neg(x)).collect(),
        }
    }
}
