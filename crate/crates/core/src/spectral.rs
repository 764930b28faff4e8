//! Spectral operations on symmetric 3x3 tensors: eigendecomposition,
//! primary matrix functions, and the polar decomposition.
//!
//! The eigensolver is a cyclic Jacobi iteration. It is unconditionally
//! stable for symmetric input and keeps full accuracy near degenerate
//! eigenvalues, where closed-form root formulas lose digits. Output
//! ordering and eigenvector signs follow a fixed convention so results
//! are bit-reproducible across runs.

use std::sync::Arc;

use crate::consts::{JACOBI_MAX_SWEEPS, JACOBI_OFF_TOL};
use crate::error::{Error, Result};
use crate::tensor::{Rotation3, SpdTensor3, SymTensor3, Tensor3, Vec3};

/// Spectral decomposition of a symmetric tensor: eigenvalues in descending
/// order with index-paired orthonormal eigenvectors.
#[derive(Debug, Clone, Copy)]
pub struct Spectrum3 {
    pub eigenvalues: [f64; 3],
    pub eigenvectors: [Vec3; 3],
}

impl Spectrum3 {
    /// Reassembles `Σ λ_i e_i ⊗ e_i`.
    pub fn reconstruct(&self) -> SymTensor3 {
        self.map(|x| x)
    }

    /// Assembles `Σ g(λ_i) e_i ⊗ e_i`. Each rank-one term is bit-exactly
    /// symmetric, so the sum is as well.
    pub fn map(&self, g: impl Fn(f64) -> f64) -> SymTensor3 {
        let mut out = Tensor3::ZERO;
        for (lambda, e) in self.eigenvalues.iter().zip(self.eigenvectors.iter()) {
            out = out + e.outer(e).scale(g(*lambda));
        }
        SymTensor3::new_unchecked(out)
    }

    /// Eigenvectors as matrix columns.
    pub fn eigenvector_matrix(&self) -> Tensor3 {
        let mut m = [[0.0; 3]; 3];
        for (k, e) in self.eigenvectors.iter().enumerate() {
            for (row, value) in m.iter_mut().zip(e.0) {
                row[k] = value;
            }
        }
        Tensor3::from_rows(m)
    }
}

fn off_diagonal_norm(m: &[[f64; 3]; 3]) -> f64 {
    (m[0][1] * m[0][1]
        + m[0][2] * m[0][2]
        + m[1][2] * m[1][2]
        + m[1][0] * m[1][0]
        + m[2][0] * m[2][0]
        + m[2][1] * m[2][1])
        .sqrt()
}

/// One Jacobi rotation zeroing the (p, q) entry; accumulates into `v`.
fn jacobi_rotate(d: &mut [[f64; 3]; 3], v: &mut [[f64; 3]; 3], p: usize, q: usize) {
    let apq = d[p][q];
    if apq == 0.0 {
        return;
    }
    let theta = (d[q][q] - d[p][p]) / (2.0 * apq);
    // hypot avoids overflow for extreme theta
    let t = theta.signum() / (theta.abs() + theta.hypot(1.0));
    let c = 1.0 / t.hypot(1.0);
    let s = t * c;

    let dpp = d[p][p];
    let dqq = d[q][q];
    d[p][p] = dpp - t * apq;
    d[q][q] = dqq + t * apq;
    d[p][q] = 0.0;
    d[q][p] = 0.0;
    let r = 3 - p - q;
    let drp = d[r][p];
    let drq = d[r][q];
    d[r][p] = c * drp - s * drq;
    d[p][r] = d[r][p];
    d[r][q] = s * drp + c * drq;
    d[q][r] = d[r][q];

    for row in v.iter_mut() {
        let vp = row[p];
        let vq = row[q];
        row[p] = c * vp - s * vq;
        row[q] = s * vp + c * vq;
    }
}

/// Cyclic Jacobi eigendecomposition of a symmetric tensor.
///
/// Eigenvalues come out in descending order. Each eigenvector is normalized
/// so that its largest-magnitude component is positive, ties broken by the
/// lowest index. Converges when the off-diagonal Frobenius norm drops below
/// `JACOBI_OFF_TOL · ‖A‖_F`, with a hard cap of `JACOBI_MAX_SWEEPS` sweeps.
pub fn sym_eigen(a: &SymTensor3) -> Spectrum3 {
    let mut d = *a.as_tensor().rows();
    let mut v = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];
    let tol = JACOBI_OFF_TOL * a.frobenius_norm();

    for _ in 0..JACOBI_MAX_SWEEPS {
        if off_diagonal_norm(&d) <= tol {
            break;
        }
        jacobi_rotate(&mut d, &mut v, 0, 1);
        jacobi_rotate(&mut d, &mut v, 0, 2);
        jacobi_rotate(&mut d, &mut v, 1, 2);
    }

    let mut pairs = [
        (d[0][0], [v[0][0], v[1][0], v[2][0]]),
        (d[1][1], [v[0][1], v[1][1], v[2][1]]),
        (d[2][2], [v[0][2], v[1][2], v[2][2]]),
    ];
    // descending by eigenvalue; stable for degenerate pairs
    pairs.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap());

    let mut eigenvalues = [0.0; 3];
    let mut eigenvectors = [Vec3::ZERO; 3];
    for (slot, (lambda, vec)) in pairs.iter().enumerate() {
        let mut e = *vec;
        let mut arg = 0;
        for i in 1..3 {
            if e[i].abs() > e[arg].abs() {
                arg = i;
            }
        }
        if e[arg] < 0.0 {
            for x in e.iter_mut() {
                *x = -*x;
            }
        }
        eigenvalues[slot] = *lambda;
        eigenvectors[slot] = Vec3(e);
    }

    Spectrum3 {
        eigenvalues,
        eigenvectors,
    }
}

/// A scalar function with an optional domain restriction, used to apply
/// primary matrix functions spectrally.
#[derive(Clone)]
pub struct ScalarFn {
    name: String,
    f: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
    domain: Option<Arc<dyn Fn(f64) -> bool + Send + Sync>>,
}

impl ScalarFn {
    /// A function defined on all of R.
    pub fn total(name: impl Into<String>, f: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        ScalarFn {
            name: name.into(),
            f: Arc::new(f),
            domain: None,
        }
    }

    /// A function defined where `domain` returns true.
    pub fn with_domain(
        name: impl Into<String>,
        f: impl Fn(f64) -> f64 + Send + Sync + 'static,
        domain: impl Fn(f64) -> bool + Send + Sync + 'static,
    ) -> Self {
        ScalarFn {
            name: name.into(),
            f: Arc::new(f),
            domain: Some(Arc::new(domain)),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn eval(&self, x: f64) -> f64 {
        (self.f)(x)
    }

    pub fn contains(&self, x: f64) -> bool {
        self.domain.as_ref().is_none_or(|d| d(x))
    }
}

impl std::fmt::Debug for ScalarFn {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ScalarFn").field("name", &self.name).finish()
    }
}

/// Applies the scalar function `g` to a symmetric tensor spectrally:
/// `Σ g(λ_i) e_i ⊗ e_i`.
///
/// Degenerate eigenvalues need no special casing: the sum over all three
/// spectral terms is correct for any orthonormal basis of a repeated
/// eigenspace. Errors name the first eigenvalue outside the domain of `g`.
pub fn apply_scale(a: &SymTensor3, g: &ScalarFn) -> Result<SymTensor3> {
    let spectrum = sym_eigen(a);
    for lambda in spectrum.eigenvalues {
        if !g.contains(lambda) {
            return Err(Error::Domain {
                function: g.name().to_string(),
                eigenvalue: lambda,
            });
        }
    }
    let out = spectrum.map(|x| g.eval(x));
    if !out.as_tensor().is_finite() {
        return Err(Error::NonFinite {
            context: "primary matrix function result",
        });
    }
    Ok(out)
}

/// Principal matrix logarithm of a positive definite tensor.
/// Satisfies `tr(log A) = log(det A)`.
pub fn spd_log(a: &SpdTensor3) -> SymTensor3 {
    let spectrum = sym_eigen(a.as_sym());
    spectrum.map(f64::ln)
}

/// Matrix exponential of a symmetric tensor; the result is positive
/// definite. Errors if an eigenvalue is large enough to overflow `exp`.
pub fn spd_exp(a: &SymTensor3) -> Result<SpdTensor3> {
    let spectrum = sym_eigen(a);
    let out = spectrum.map(f64::exp);
    if !out.as_tensor().is_finite() {
        return Err(Error::NonFinite {
            context: "matrix exponential",
        });
    }
    Ok(SpdTensor3::new_unchecked(out))
}

/// Principal square root of a positive definite tensor.
pub fn spd_sqrt(a: &SpdTensor3) -> SpdTensor3 {
    let spectrum = sym_eigen(a.as_sym());
    SpdTensor3::new_unchecked(spectrum.map(f64::sqrt))
}

/// Spectral inverse of a positive definite tensor.
pub fn spd_inverse(a: &SpdTensor3) -> SpdTensor3 {
    let spectrum = sym_eigen(a.as_sym());
    SpdTensor3::new_unchecked(spectrum.map(f64::recip))
}

/// The factors of `F = V·R = R·U` with SPD stretches and a proper rotation.
#[derive(Debug, Clone, Copy)]
pub struct PolarFactors {
    /// Left stretch `V = sqrt(F F^T)`.
    pub v: SpdTensor3,
    /// Rotation `R = V⁻¹ F`.
    pub r: Rotation3,
    /// Right stretch `U = R^T V R`.
    pub u: SpdTensor3,
}

/// Polar decomposition of an orientation-preserving deformation gradient.
///
/// `det F = 0` and `det F < 0` are reported as distinct errors; there is no
/// fallback for either.
pub fn polar_decompose(f: &Tensor3) -> Result<PolarFactors> {
    if !f.is_finite() {
        return Err(Error::NonFinite {
            context: "deformation gradient",
        });
    }
    let det = f.det();
    if det == 0.0 {
        return Err(Error::Singular { det });
    }
    if det < 0.0 {
        return Err(Error::Orientation { det });
    }

    // F F^T is bit-exactly symmetric: entry (i,k) and (k,i) sum the same
    // products in the same order.
    let b = SymTensor3::new_unchecked(*f * f.transpose());
    let spectrum = sym_eigen(&b);
    let min = spectrum.eigenvalues[2];
    if min <= 0.0 {
        return Err(Error::Singular { det });
    }
    let v = SpdTensor3::new_unchecked(spectrum.map(f64::sqrt));
    let v_inv: Tensor3 = spectrum.map(|x| x.sqrt().recip()).into();

    let mut r = v_inv * *f;
    // two Newton steps tighten R^T R to the identity near machine precision
    for _ in 0..2 {
        r = (r + r.inverse()?.transpose()).scale(0.5);
    }
    let r = Rotation3::new(r)?;

    let rt = r.as_tensor().transpose();
    let u_raw = rt * Tensor3::from(v) * *r.as_tensor();
    let u = SpdTensor3::new(SymTensor3::symmetrize(&u_raw))?;

    Ok(PolarFactors { v, r, u })
}
