//! Exact 2×2 and 3×3 integer matrices over `i128`.
//!
//! Every arithmetic step is checked; an overflow surfaces as
//! [`Error::Overflow`] instead of wrapping.

use std::fmt;

use crate::error::{Error, Result};

#[inline]
fn add(x: i128, y: i128) -> Result<i128> {
    x.checked_add(y).ok_or(Error::Overflow)
}

#[inline]
fn sub(x: i128, y: i128) -> Result<i128> {
    x.checked_sub(y).ok_or(Error::Overflow)
}

#[inline]
fn mul(x: i128, y: i128) -> Result<i128> {
    x.checked_mul(y).ok_or(Error::Overflow)
}

/// Checked dot product of two equal-length slices.
fn dot(xs: &[i128], ys: &[i128]) -> Result<i128> {
    xs.iter()
        .zip(ys)
        .try_fold(0i128, |acc, (&x, &y)| add(acc, mul(x, y)?))
}

/// Column vector of two integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vec2(pub [i128; 2]);

/// Column vector of three integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vec3(pub [i128; 3]);

/// Row-major 2×2 integer matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mat2(pub [[i128; 2]; 2]);

/// Row-major 3×3 integer matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mat3(pub [[i128; 3]; 3]);

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2([[1, 0], [0, 1]]);

    pub const fn new(rows: [[i128; 2]; 2]) -> Self {
        Mat2(rows)
    }

    fn column(&self, j: usize) -> [i128; 2] {
        [self.0[0][j], self.0[1][j]]
    }

    pub fn checked_mul(&self, rhs: &Mat2) -> Result<Mat2> {
        let mut out = [[0i128; 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = dot(&self.0[i], &rhs.column(j))?;
            }
        }
        Ok(Mat2(out))
    }

    pub fn apply(&self, v: Vec2) -> Result<Vec2> {
        Ok(Vec2([dot(&self.0[0], &v.0)?, dot(&self.0[1], &v.0)?]))
    }

    pub fn det(&self) -> Result<i128> {
        let [[a, b], [c, d]] = self.0;
        sub(mul(a, d)?, mul(b, c)?)
    }

    /// Integer inverse of a matrix with determinant ±1.
    pub fn inverse_unimodular(&self) -> Result<Mat2> {
        let det = self.det()?;
        if det != 1 && det != -1 {
            return Err(Error::NotUnimodular { det });
        }
        let [[a, b], [c, d]] = self.0;
        // inverse = adj / det, and 1/det = det for det = ±1
        Ok(Mat2([
            [mul(d, det)?, mul(-b, det)?],
            [mul(-c, det)?, mul(a, det)?],
        ]))
    }
}

impl Mat3 {
    pub const IDENTITY: Mat3 = Mat3([[1, 0, 0], [0, 1, 0], [0, 0, 1]]);

    pub const fn new(rows: [[i128; 3]; 3]) -> Self {
        Mat3(rows)
    }

    fn column(&self, j: usize) -> [i128; 3] {
        [self.0[0][j], self.0[1][j], self.0[2][j]]
    }

    pub fn checked_mul(&self, rhs: &Mat3) -> Result<Mat3> {
        let mut out = [[0i128; 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = dot(&self.0[i], &rhs.column(j))?;
            }
        }
        Ok(Mat3(out))
    }

    pub fn apply(&self, v: Vec3) -> Result<Vec3> {
        Ok(Vec3([
            dot(&self.0[0], &v.0)?,
            dot(&self.0[1], &v.0)?,
            dot(&self.0[2], &v.0)?,
        ]))
    }

    /// Signed 2×2 minor obtained by deleting row `i` and column `j`.
    fn cofactor(&self, i: usize, j: usize) -> Result<i128> {
        let rows: Vec<usize> = (0..3).filter(|&r| r != i).collect();
        let cols: Vec<usize> = (0..3).filter(|&c| c != j).collect();
        let m = &self.0;
        let minor = sub(
            mul(m[rows[0]][cols[0]], m[rows[1]][cols[1]])?,
            mul(m[rows[0]][cols[1]], m[rows[1]][cols[0]])?,
        )?;
        Ok(if (i + j).is_multiple_of(2) {
            minor
        } else {
            -minor
        })
    }

    /// Determinant by cofactor expansion along the first row.
    pub fn det(&self) -> Result<i128> {
        (0..3).try_fold(0i128, |acc, j| {
            add(acc, mul(self.0[0][j], self.cofactor(0, j)?)?)
        })
    }

    pub fn inverse_unimodular(&self) -> Result<Mat3> {
        let det = self.det()?;
        if det != 1 && det != -1 {
            return Err(Error::NotUnimodular { det });
        }
        let mut out = [[0i128; 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                // adjugate is the transposed cofactor matrix
                *cell = mul(self.cofactor(j, i)?, det)?;
            }
        }
        Ok(Mat3(out))
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = self.0;
        write!(f, "[[{a},{b}],[{c},{d}]]")
    }
}

impl fmt::Display for Mat3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = &self.0;
        write!(
            f,
            "[[{},{},{}],[{},{},{}],[{},{},{}]]",
            r[0][0], r[0][1], r[0][2], r[1][0], r[1][1], r[1][2], r[2][0], r[2][1], r[2][2]
        )
    }
}
