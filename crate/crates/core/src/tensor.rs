//! Plain 3x3 tensor and 3-vector values.
//!
//! `Tensor3` is an unconstrained real matrix; the newtypes [`SymTensor3`],
//! [`SpdTensor3`] and [`Rotation3`] add construction-time invariants on top
//! of it. All values are immutable and `Copy`.

use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

use crate::consts::{ROT_TOL, SYM_TOL};
use crate::error::{Error, Result};

/// A real 3-vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vec3(pub [f64; 3]);

impl Vec3 {
    pub const ZERO: Vec3 = Vec3([0.0; 3]);

    pub fn new(x: f64, y: f64, z: f64) -> Self {
        Vec3([x, y, z])
    }

    pub fn dot(&self, other: &Vec3) -> f64 {
        self.0[0] * other.0[0] + self.0[1] * other.0[1] + self.0[2] * other.0[2]
    }

    pub fn cross(&self, other: &Vec3) -> Vec3 {
        let a = &self.0;
        let b = &other.0;
        Vec3([
            a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0],
        ])
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn scale(&self, s: f64) -> Vec3 {
        Vec3([self.0[0] * s, self.0[1] * s, self.0[2] * s])
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|x| x.is_finite())
    }

    /// Outer product `self (x) other`.
    pub fn outer(&self, other: &Vec3) -> Tensor3 {
        let mut m = [[0.0; 3]; 3];
        for (i, row) in m.iter_mut().enumerate() {
            for (k, entry) in row.iter_mut().enumerate() {
                *entry = self.0[i] * other.0[k];
            }
        }
        Tensor3(m)
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, rhs: Vec3) -> Vec3 {
        Vec3([
            self.0[0] + rhs.0[0],
            self.0[1] + rhs.0[1],
            self.0[2] + rhs.0[2],
        ])
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, rhs: Vec3) -> Vec3 {
        Vec3([
            self.0[0] - rhs.0[0],
            self.0[1] - rhs.0[1],
            self.0[2] - rhs.0[2],
        ])
    }
}

impl Index<usize> for Vec3 {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

/// A 3x3 real matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tensor3(pub(crate) [[f64; 3]; 3]);

impl Tensor3 {
    pub const ZERO: Tensor3 = Tensor3([[0.0; 3]; 3]);

    pub fn from_rows(rows: [[f64; 3]; 3]) -> Self {
        Tensor3(rows)
    }

    pub fn identity() -> Self {
        Tensor3::diag(1.0, 1.0, 1.0)
    }

    pub fn diag(a: f64, b: f64, c: f64) -> Self {
        Tensor3([[a, 0.0, 0.0], [0.0, b, 0.0], [0.0, 0.0, c]])
    }

    pub fn scaled_identity(s: f64) -> Self {
        Tensor3::diag(s, s, s)
    }

    pub fn rows(&self) -> &[[f64; 3]; 3] {
        &self.0
    }

    pub fn get(&self, i: usize, k: usize) -> f64 {
        self.0[i][k]
    }

    pub fn row(&self, i: usize) -> Vec3 {
        Vec3(self.0[i])
    }

    pub fn column(&self, k: usize) -> Vec3 {
        Vec3([self.0[0][k], self.0[1][k], self.0[2][k]])
    }

    pub fn transpose(&self) -> Tensor3 {
        let m = &self.0;
        Tensor3([
            [m[0][0], m[1][0], m[2][0]],
            [m[0][1], m[1][1], m[2][1]],
            [m[0][2], m[1][2], m[2][2]],
        ])
    }

    pub fn trace(&self) -> f64 {
        self.0[0][0] + self.0[1][1] + self.0[2][2]
    }

    pub fn det(&self) -> f64 {
        let m = &self.0;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    /// Inverse by cofactor expansion. Errors on a singular matrix.
    pub fn inverse(&self) -> Result<Tensor3> {
        let m = &self.0;
        let det = self.det();
        if det == 0.0 || !det.is_finite() {
            return Err(Error::Singular { det });
        }
        let inv_det = 1.0 / det;
        let mut out = [[0.0; 3]; 3];
        out[0][0] = (m[1][1] * m[2][2] - m[1][2] * m[2][1]) * inv_det;
        out[0][1] = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) * inv_det;
        out[0][2] = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) * inv_det;
        out[1][0] = (m[1][2] * m[2][0] - m[1][0] * m[2][2]) * inv_det;
        out[1][1] = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) * inv_det;
        out[1][2] = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) * inv_det;
        out[2][0] = (m[1][0] * m[2][1] - m[1][1] * m[2][0]) * inv_det;
        out[2][1] = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) * inv_det;
        out[2][2] = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) * inv_det;
        Ok(Tensor3(out))
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.0
            .iter()
            .flatten()
            .map(|x| x * x)
            .sum::<f64>()
            .sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().flatten().all(|x| x.is_finite())
    }

    pub fn scale(&self, s: f64) -> Tensor3 {
        let mut out = self.0;
        for row in out.iter_mut() {
            for entry in row.iter_mut() {
                *entry *= s;
            }
        }
        Tensor3(out)
    }

    /// Symmetric part `(A + A^T) / 2`.
    pub fn sym_part(&self) -> Tensor3 {
        let m = &self.0;
        let mut out = [[0.0; 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (k, entry) in row.iter_mut().enumerate() {
                *entry = 0.5 * (m[i][k] + m[k][i]);
            }
        }
        Tensor3(out)
    }

    fn asymmetry(&self) -> f64 {
        let m = &self.0;
        let mut sum = 0.0;
        for i in 0..3 {
            for k in 0..3 {
                let d = m[i][k] - m[k][i];
                sum += d * d;
            }
        }
        sum.sqrt()
    }
}

impl Add for Tensor3 {
    type Output = Tensor3;
    fn add(self, rhs: Tensor3) -> Tensor3 {
        let mut out = self.0;
        for (row, rhs_row) in out.iter_mut().zip(rhs.0.iter()) {
            for (entry, r) in row.iter_mut().zip(rhs_row.iter()) {
                *entry += r;
            }
        }
        Tensor3(out)
    }
}

impl Sub for Tensor3 {
    type Output = Tensor3;
    fn sub(self, rhs: Tensor3) -> Tensor3 {
        let mut out = self.0;
        for (row, rhs_row) in out.iter_mut().zip(rhs.0.iter()) {
            for (entry, r) in row.iter_mut().zip(rhs_row.iter()) {
                *entry -= r;
            }
        }
        Tensor3(out)
    }
}

impl Neg for Tensor3 {
    type Output = Tensor3;
    fn neg(self) -> Tensor3 {
        self.scale(-1.0)
    }
}

impl Mul for Tensor3 {
    type Output = Tensor3;
    fn mul(self, rhs: Tensor3) -> Tensor3 {
        let a = &self.0;
        let b = &rhs.0;
        let mut out = [[0.0; 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (k, entry) in row.iter_mut().enumerate() {
                *entry = a[i][0] * b[0][k] + a[i][1] * b[1][k] + a[i][2] * b[2][k];
            }
        }
        Tensor3(out)
    }
}

impl Mul<Vec3> for Tensor3 {
    type Output = Vec3;
    fn mul(self, v: Vec3) -> Vec3 {
        Vec3([
            self.row(0).dot(&v),
            self.row(1).dot(&v),
            self.row(2).dot(&v),
        ])
    }
}

impl fmt::Display for Tensor3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}, {}], [{}, {}, {}], [{}, {}, {}]]",
            self.0[0][0],
            self.0[0][1],
            self.0[0][2],
            self.0[1][0],
            self.0[1][1],
            self.0[1][2],
            self.0[2][0],
            self.0[2][1],
            self.0[2][2],
        )
    }
}

/// A symmetric 3x3 tensor. Construction validates finiteness and symmetry
/// and stores the exactly symmetric average of the input.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymTensor3(Tensor3);

impl SymTensor3 {
    pub const ZERO: SymTensor3 = SymTensor3(Tensor3::ZERO);

    /// Validates `‖A − A^T‖_F ≤ SYM_TOL · max(1, ‖A‖_F)` and finiteness.
    pub fn new(t: Tensor3) -> Result<Self> {
        if !t.is_finite() {
            return Err(Error::NonFinite {
                context: "symmetric tensor",
            });
        }
        let asym = t.asymmetry();
        let tol = SYM_TOL * t.frobenius_norm().max(1.0);
        if asym > tol {
            return Err(Error::NotSymmetric {
                asymmetry: asym,
                tolerance: tol,
            });
        }
        Ok(SymTensor3(t.sym_part()))
    }

    /// Wraps the symmetric part of `t` without a symmetry check. For use on
    /// products that are symmetric up to rounding by construction.
    pub fn symmetrize(t: &Tensor3) -> Self {
        SymTensor3(t.sym_part())
    }

    /// Wraps a value that is bit-exactly symmetric by construction.
    pub(crate) fn new_unchecked(t: Tensor3) -> Self {
        debug_assert!(!t.is_finite() || t.asymmetry() == 0.0);
        SymTensor3(t)
    }

    pub fn identity() -> Self {
        SymTensor3(Tensor3::identity())
    }

    pub fn diag(a: f64, b: f64, c: f64) -> Self {
        SymTensor3(Tensor3::diag(a, b, c))
    }

    pub fn as_tensor(&self) -> &Tensor3 {
        &self.0
    }

    pub fn get(&self, i: usize, k: usize) -> f64 {
        self.0.get(i, k)
    }

    pub fn trace(&self) -> f64 {
        self.0.trace()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.0.frobenius_norm()
    }

    /// Traceless part `A − (tr A / 3) I`; stays bit-exactly symmetric.
    pub fn deviator(&self) -> SymTensor3 {
        SymTensor3::new_unchecked(deviator(&self.0))
    }

    pub fn add(&self, other: &SymTensor3) -> SymTensor3 {
        SymTensor3::new_unchecked(self.0 + other.0)
    }

    pub fn sub(&self, other: &SymTensor3) -> SymTensor3 {
        SymTensor3::new_unchecked(self.0 - other.0)
    }

    pub fn scale(&self, s: f64) -> SymTensor3 {
        SymTensor3::new_unchecked(self.0.scale(s))
    }

    /// The six independent components in the order
    /// `(11, 22, 33, 12, 13, 23)`.
    pub fn components(&self) -> [f64; 6] {
        let m = self.0.rows();
        [m[0][0], m[1][1], m[2][2], m[0][1], m[0][2], m[1][2]]
    }
}

impl From<SymTensor3> for Tensor3 {
    fn from(s: SymTensor3) -> Tensor3 {
        s.0
    }
}

/// A symmetric positive definite 3x3 tensor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpdTensor3(SymTensor3);

impl SpdTensor3 {
    /// Validates that every eigenvalue is strictly positive.
    pub fn new(s: SymTensor3) -> Result<Self> {
        let spectrum = crate::spectral::sym_eigen(&s);
        let min = spectrum.eigenvalues[2];
        if min <= 0.0 {
            return Err(Error::NotPositiveDefinite { eigenvalue: min });
        }
        Ok(SpdTensor3(s))
    }

    pub(crate) fn new_unchecked(s: SymTensor3) -> Self {
        SpdTensor3(s)
    }

    pub fn identity() -> Self {
        SpdTensor3(SymTensor3::identity())
    }

    /// Diagonal SPD tensor; all entries must be positive.
    pub fn diag(a: f64, b: f64, c: f64) -> Result<Self> {
        SpdTensor3::new(SymTensor3::diag(a, b, c))
    }

    pub fn as_sym(&self) -> &SymTensor3 {
        &self.0
    }

    pub fn as_tensor(&self) -> &Tensor3 {
        self.0.as_tensor()
    }

    pub fn det(&self) -> f64 {
        self.as_tensor().det()
    }

    pub fn trace(&self) -> f64 {
        self.0.trace()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.0.frobenius_norm()
    }
}

impl From<SpdTensor3> for Tensor3 {
    fn from(s: SpdTensor3) -> Tensor3 {
        s.0 .0
    }
}

impl From<SpdTensor3> for SymTensor3 {
    fn from(s: SpdTensor3) -> SymTensor3 {
        s.0
    }
}

/// A proper rotation: orthogonal with positive determinant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rotation3(Tensor3);

impl Rotation3 {
    /// Validates `‖R^T R − I‖_F ≤ ROT_TOL` and `det R > 0`.
    pub fn new(t: Tensor3) -> Result<Self> {
        if !t.is_finite() {
            return Err(Error::NonFinite { context: "rotation" });
        }
        let defect = (t.transpose() * t - Tensor3::identity()).frobenius_norm();
        if defect > ROT_TOL {
            return Err(Error::NotOrthogonal { defect });
        }
        let det = t.det();
        if det <= 0.0 {
            return Err(Error::ImproperRotation { det });
        }
        Ok(Rotation3(t))
    }

    pub fn identity() -> Self {
        Rotation3(Tensor3::identity())
    }

    pub fn as_tensor(&self) -> &Tensor3 {
        &self.0
    }

    /// Inverse rotation (the transpose).
    pub fn inverse(&self) -> Rotation3 {
        Rotation3(self.0.transpose())
    }
}

impl From<Rotation3> for Tensor3 {
    fn from(r: Rotation3) -> Tensor3 {
        r.0
    }
}

/// Common deviator `A − (tr A / 3) I`.
pub fn deviator(a: &Tensor3) -> Tensor3 {
    let t = a.trace() / 3.0;
    let mut out = a.0;
    out[0][0] -= t;
    out[1][1] -= t;
    out[2][2] -= t;
    Tensor3(out)
}

/// The affine invariants `(j, k, l) = (tr A, tr A², tr A³)`.
pub fn principal_invariants(a: &Tensor3) -> (f64, f64, f64) {
    let a2 = *a * *a;
    let a3 = a2 * *a;
    (a.trace(), a2.trace(), a3.trace())
}
