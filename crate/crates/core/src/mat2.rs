//! Minimal 2x2 real matrix type.
//!
//! The tangent maps, conjugations and derivative products in this crate are
//! all 2x2; explicit formulas beat a general linear-algebra dependency here.

use std::ops::Mul;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2 {
    /// Row-major entries: `e[r][c]`.
    pub e: [[f64; 2]; 2],
}

impl Mat2 {
    pub const fn new(a: f64, b: f64, c: f64, d: f64) -> Self {
        Mat2 { e: [[a, b], [c, d]] }
    }

    pub const fn identity() -> Self {
        Mat2::new(1.0, 0.0, 0.0, 1.0)
    }

    pub fn det(&self) -> f64 {
        self.e[0][0] * self.e[1][1] - self.e[0][1] * self.e[1][0]
    }

    /// Inverse; caller must ensure the determinant is nonzero.
    pub fn inverse(&self) -> Mat2 {
        let d = self.det();
        Mat2::new(
            self.e[1][1] / d,
            -self.e[0][1] / d,
            -self.e[1][0] / d,
            self.e[0][0] / d,
        )
    }

    pub fn mul_vec(&self, v: [f64; 2]) -> [f64; 2] {
        [
            self.e[0][0] * v[0] + self.e[0][1] * v[1],
            self.e[1][0] * v[0] + self.e[1][1] * v[1],
        ]
    }

    pub fn scale(&self, s: f64) -> Mat2 {
        Mat2::new(
            self.e[0][0] * s,
            self.e[0][1] * s,
            self.e[1][0] * s,
            self.e[1][1] * s,
        )
    }

    pub fn max_abs(&self) -> f64 {
        self.e
            .iter()
            .flatten()
            .fold(0.0_f64, |m, x| m.max(x.abs()))
    }

    /// Max absolute entry-wise difference.
    pub fn distance(&self, other: &Mat2) -> f64 {
        let mut m = 0.0_f64;
        for r in 0..2 {
            for c in 0..2 {
                m = m.max((self.e[r][c] - other.e[r][c]).abs());
            }
        }
        m
    }
}

impl Mul for Mat2 {
    type Output = Mat2;

    fn mul(self, rhs: Mat2) -> Mat2 {
        let mut out = [[0.0; 2]; 2];
        for r in 0..2 {
            for c in 0..2 {
                out[r][c] = self.e[r][0] * rhs.e[0][c] + self.e[r][1] * rhs.e[1][c];
            }
        }
        Mat2 { e: out }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_roundtrip() {
        let m = Mat2::new(2.0, 1.0, 1.0, 3.0);
        let id = m * m.inverse();
        assert!(id.distance(&Mat2::identity()) < 1e-15);
    }

    #[test]
    fn mul_vec_matches_rows() {
        let m = Mat2::new(1.0, 2.0, 3.0, 4.0);
        assert_eq!(m.mul_vec([1.0, 1.0]), [3.0, 7.0]);
    }
}
