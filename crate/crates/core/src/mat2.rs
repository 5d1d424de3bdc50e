//! Dense 2x2 complex matrices, the pointwise fiber type for all fields.
//!
//! Everything downstream (connections, Higgs fields, hermitian metrics,
//! residual 2-forms) is valued in 2x2 complex matrices, so this module
//! hand-rolls the few operations needed instead of pulling in a matrix
//! library: products, commutators, adjoints, determinant-normalized
//! inverses and the hermitian 2x2 eigenvalue formulas.

use num_complex::Complex64;
use std::ops::{Add, Mul, Neg, Sub};

pub type C64 = Complex64;

pub const fn c64(re: f64, im: f64) -> C64 {
    Complex64::new(re, im)
}

/// Row-major 2x2 complex matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat2 {
    pub a: C64,
    pub b: C64,
    pub c: C64,
    pub d: C64,
}

impl Mat2 {
    pub const fn new(a: C64, b: C64, c: C64, d: C64) -> Self {
        Mat2 { a, b, c, d }
    }

    pub const fn zero() -> Self {
        Mat2::new(c64(0.0, 0.0), c64(0.0, 0.0), c64(0.0, 0.0), c64(0.0, 0.0))
    }

    pub const fn identity() -> Self {
        Mat2::new(c64(1.0, 0.0), c64(0.0, 0.0), c64(0.0, 0.0), c64(1.0, 0.0))
    }

    pub fn diag(a: C64, d: C64) -> Self {
        Mat2::new(a, c64(0.0, 0.0), c64(0.0, 0.0), d)
    }

    pub fn diag_re(a: f64, d: f64) -> Self {
        Mat2::diag(c64(a, 0.0), c64(d, 0.0))
    }

    /// sigma_3 = diag(1, -1).
    pub fn sigma3() -> Self {
        Mat2::diag_re(1.0, -1.0)
    }

    /// sigma_+ = [[0,1],[0,0]].
    pub fn sigma_plus() -> Self {
        Mat2::new(c64(0.0, 0.0), c64(1.0, 0.0), c64(0.0, 0.0), c64(0.0, 0.0))
    }

    /// sigma_- = [[0,0],[1,0]].
    pub fn sigma_minus() -> Self {
        Mat2::new(c64(0.0, 0.0), c64(0.0, 0.0), c64(1.0, 0.0), c64(0.0, 0.0))
    }

    pub fn trace(&self) -> C64 {
        self.a + self.d
    }

    pub fn det(&self) -> C64 {
        self.a * self.d - self.b * self.c
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Mat2::new(self.a.conj(), self.c.conj(), self.b.conj(), self.d.conj())
    }

    /// Entrywise complex conjugate (no transpose).
    pub fn conj_entries(&self) -> Self {
        Mat2::new(self.a.conj(), self.b.conj(), self.c.conj(), self.d.conj())
    }

    /// Entrywise real part.
    pub fn real_part(&self) -> Self {
        Mat2::new(
            c64(self.a.re, 0.0),
            c64(self.b.re, 0.0),
            c64(self.c.re, 0.0),
            c64(self.d.re, 0.0),
        )
    }

    /// Entrywise imaginary part (a real matrix).
    pub fn imag_part(&self) -> Self {
        Mat2::new(
            c64(self.a.im, 0.0),
            c64(self.b.im, 0.0),
            c64(self.c.im, 0.0),
            c64(self.d.im, 0.0),
        )
    }

    pub fn inverse(&self) -> Option<Self> {
        let det = self.det();
        if det.norm() == 0.0 {
            return None;
        }
        let inv = Mat2::new(self.d, -self.b, -self.c, self.a);
        Some(inv.scale(c64(1.0, 0.0) / det))
    }

    pub fn scale(&self, s: C64) -> Self {
        Mat2::new(self.a * s, self.b * s, self.c * s, self.d * s)
    }

    pub fn scale_re(&self, s: f64) -> Self {
        self.scale(c64(s, 0.0))
    }

    pub fn commutator(&self, other: &Mat2) -> Self {
        *self * *other - *other * *self
    }

    pub fn frobenius_norm(&self) -> f64 {
        (self.a.norm_sqr() + self.b.norm_sqr() + self.c.norm_sqr() + self.d.norm_sqr()).sqrt()
    }

    /// Real Frobenius pairing Re Tr(A B^†).
    pub fn frobenius_inner(&self, other: &Mat2) -> f64 {
        (self.a * other.a.conj()
            + self.b * other.b.conj()
            + self.c * other.c.conj()
            + self.d * other.d.conj())
        .re
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        (*self - self.adjoint()).frobenius_norm() <= tol * (1.0 + self.frobenius_norm())
    }

    /// Eigenvalues of a hermitian matrix, ascending. Caller must pass a
    /// hermitian matrix; only the real parts of the diagonal are used.
    pub fn hermitian_eigenvalues(&self) -> (f64, f64) {
        let tr = self.a.re + self.d.re;
        let half = 0.5 * (self.a.re - self.d.re);
        let disc = (half * half + self.b.norm_sqr()).sqrt();
        (0.5 * tr - disc, 0.5 * tr + disc)
    }

    pub fn is_positive_definite(&self, tol: f64) -> bool {
        self.is_hermitian(tol) && self.hermitian_eigenvalues().0 > 0.0
    }

    /// Smallest singular value, sqrt of the smaller eigenvalue of A^† A.
    pub fn smallest_singular_value(&self) -> f64 {
        let gram = self.adjoint() * *self;
        let (lo, _) = gram.hermitian_eigenvalues();
        lo.max(0.0).sqrt()
    }
}

impl Add for Mat2 {
    type Output = Mat2;
    fn add(self, rhs: Mat2) -> Mat2 {
        Mat2::new(self.a + rhs.a, self.b + rhs.b, self.c + rhs.c, self.d + rhs.d)
    }
}

impl Sub for Mat2 {
    type Output = Mat2;
    fn sub(self, rhs: Mat2) -> Mat2 {
        Mat2::new(self.a - rhs.a, self.b - rhs.b, self.c - rhs.c, self.d - rhs.d)
    }
}

impl Neg for Mat2 {
    type Output = Mat2;
    fn neg(self) -> Mat2 {
        self.scale_re(-1.0)
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: Mat2) -> Mat2 {
        Mat2::new(
            self.a * rhs.a + self.b * rhs.c,
            self.a * rhs.b + self.b * rhs.d,
            self.c * rhs.a + self.d * rhs.c,
            self.c * rhs.b + self.d * rhs.d,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn inverse_roundtrip() {
        let m = Mat2::new(c64(1.0, 2.0), c64(0.5, -1.0), c64(3.0, 0.0), c64(-2.0, 1.0));
        let inv = m.inverse().unwrap();
        let id = m * inv;
        assert!((id - Mat2::identity()).frobenius_norm() < 1e-14);
    }

    #[test]
    fn commutator_traceless() {
        let m = Mat2::new(c64(1.0, 2.0), c64(0.5, -1.0), c64(3.0, 0.0), c64(-2.0, 1.0));
        let n = Mat2::new(c64(0.0, 1.0), c64(2.5, 0.0), c64(-1.0, 4.0), c64(0.5, 0.5));
        assert!(m.commutator(&n).trace().norm() < 1e-14);
    }

    #[test]
    fn hermitian_eigenvalues_match_characteristic_polynomial() {
        let m = Mat2::new(c64(2.0, 0.0), c64(1.0, -3.0), c64(1.0, 3.0), c64(-1.0, 0.0));
        let (lo, hi) = m.hermitian_eigenvalues();
        assert_abs_diff_eq!(lo + hi, m.trace().re, epsilon = 1e-12);
        assert_abs_diff_eq!(lo * hi, m.det().re, epsilon = 1e-12);
        assert!(lo <= hi);
    }

    #[test]
    fn singular_value_of_diagonal() {
        let m = Mat2::diag_re(3.0, 0.25);
        assert_abs_diff_eq!(m.smallest_singular_value(), 0.25, epsilon = 1e-13);
    }

    #[test]
    fn pauli_brackets() {
        // [sigma3, sigma+] = 2 sigma+, [sigma3, sigma-] = -2 sigma-, [sigma+, sigma-] = sigma3
        let s3 = Mat2::sigma3();
        let sp = Mat2::sigma_plus();
        let sm = Mat2::sigma_minus();
        assert!((s3.commutator(&sp) - sp.scale_re(2.0)).frobenius_norm() < 1e-15);
        assert!((s3.commutator(&sm) + sm.scale_re(2.0)).frobenius_norm() < 1e-15);
        assert!((sp.commutator(&sm) - s3).frobenius_norm() < 1e-15);
    }
}
