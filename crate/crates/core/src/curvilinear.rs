//! Coordinate charts, metric tensors, and the curvilinear strain variants.
//!
//! A chart carries the Jacobians of the coordinate map at the deformed and
//! reference points together with the induced metrics `G = (J J^T)⁻¹` and
//! `Ĝ = (Ĵ Ĵ^T)⁻¹`. The mixed-variant logarithmic strain is similar to the
//! Cartesian one and keeps its invariants; the non-mixed variant `J L J^T`
//! does not, which is exactly why the mixed form is preferred.
//!
//! Logarithms of the non-symmetric metric products are never taken by a
//! general matrix-log routine: every such product is similar to `V²`, so
//! the Cartesian spectral machinery plus a similarity transform covers it.

use crate::error::{Error, Result};
use crate::spectral::{polar_decompose, spd_log};
use crate::strain::Frame;
use crate::tensor::{SpdTensor3, SymTensor3, Tensor3};

/// The two admissible curvilinear stress conventions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarianceCase {
    /// Twice-covariant stress, contravariant surface element.
    Alpha,
    /// Covariant-contravariant stress, covariant surface element.
    Beta,
}

/// Variance convention for the mixed logarithmic strain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MixedConvention {
    /// `L* = (J⁻¹)^T L J^T`, the spatial form `½ log(G F Ĝ⁻¹ F^T)`.
    CovContra,
    /// `L* = J L J⁻¹`, the spatial form `½ log(F Ĝ⁻¹ F^T G)`.
    ContraCov,
}

/// A coordinate chart at one material point: Jacobians at the deformed and
/// reference positions with their induced metrics and cached inverses.
#[derive(Debug, Clone)]
pub struct CoordinateChart {
    j: Tensor3,
    j_hat: Tensor3,
    j_inv: Tensor3,
    j_hat_inv: Tensor3,
    g: SpdTensor3,
    g_hat: SpdTensor3,
    g_inv: SpdTensor3,
    g_hat_inv: SpdTensor3,
}

impl CoordinateChart {
    /// Builds a chart from the two Jacobians. Both must be nonsingular.
    pub fn from_jacobians(j: Tensor3, j_hat: Tensor3) -> Result<Self> {
        if !j.is_finite() || !j_hat.is_finite() {
            return Err(Error::NonFinite { context: "chart jacobian" });
        }
        let j_inv = j.inverse()?;
        let j_hat_inv = j_hat.inverse()?;

        // K^T K products are bit-exactly symmetric; positivity follows from
        // the nonsingular Jacobian.
        let metric = |inv: &Tensor3| SpdTensor3::new(SymTensor3::new_unchecked(inv.transpose() * *inv));
        let inverse_metric =
            |jac: &Tensor3| SpdTensor3::new(SymTensor3::new_unchecked(*jac * jac.transpose()));

        Ok(CoordinateChart {
            g: metric(&j_inv)?,
            g_hat: metric(&j_hat_inv)?,
            g_inv: inverse_metric(&j)?,
            g_hat_inv: inverse_metric(&j_hat)?,
            j,
            j_hat,
            j_inv,
            j_hat_inv,
        })
    }

    /// The trivial chart `J = Ĵ = I`.
    pub fn cartesian() -> Self {
        Self::from_jacobians(Tensor3::identity(), Tensor3::identity())
            .expect("identity jacobians are nonsingular")
    }

    pub fn j(&self) -> &Tensor3 {
        &self.j
    }

    pub fn j_hat(&self) -> &Tensor3 {
        &self.j_hat
    }

    pub fn j_inv(&self) -> &Tensor3 {
        &self.j_inv
    }

    pub fn j_hat_inv(&self) -> &Tensor3 {
        &self.j_hat_inv
    }

    /// Metric at the deformed point, `G = (J J^T)⁻¹`.
    pub fn g(&self) -> &SpdTensor3 {
        &self.g
    }

    /// Metric at the reference point, `Ĝ = (Ĵ Ĵ^T)⁻¹`.
    pub fn g_hat(&self) -> &SpdTensor3 {
        &self.g_hat
    }

    /// Inverse metric `G⁻¹ = J J^T`.
    pub fn g_inv(&self) -> &SpdTensor3 {
        &self.g_inv
    }

    /// Inverse reference metric `Ĝ⁻¹ = Ĵ Ĵ^T`.
    pub fn g_hat_inv(&self) -> &SpdTensor3 {
        &self.g_hat_inv
    }

    /// Recovers the Cartesian gradient `F₀ = J⁻¹ F Ĵ` from a curvilinear one.
    pub fn cartesian_gradient(&self, f: &Tensor3) -> Tensor3 {
        self.j_inv * *f * self.j_hat
    }
}

/// Pushes a Cartesian deformation gradient into chart coordinates:
/// `F = J F₀ Ĵ⁻¹`.
pub fn curvilinear_gradient(f0: &Tensor3, chart: &CoordinateChart) -> Result<Tensor3> {
    if !f0.is_finite() {
        return Err(Error::NonFinite {
            context: "deformation gradient",
        });
    }
    let det = f0.det();
    if det == 0.0 {
        return Err(Error::Singular { det });
    }
    if det < 0.0 {
        return Err(Error::Orientation { det });
    }
    Ok(*chart.j() * *f0 * *chart.j_hat_inv())
}

/// The mixed-variant logarithmic strain of a curvilinear gradient.
///
/// Evaluated through the Cartesian similarity route: the underlying
/// gradient `F₀ = J⁻¹ F Ĵ` is polar-decomposed, `L = log V` (or `log U`),
/// and the result is the similarity transform fixed by the convention.
/// This equals `½ log` of the corresponding metric product, e.g.
/// `½ log(G F Ĝ⁻¹ F^T)` for the Eulerian covariant-contravariant case.
pub fn log_strain_mixed(
    f: &Tensor3,
    chart: &CoordinateChart,
    convention: MixedConvention,
    frame: Frame,
) -> Result<Tensor3> {
    let f0 = chart.cartesian_gradient(f);
    let polar = polar_decompose(&f0)?;
    let l: Tensor3 = match frame {
        Frame::Eulerian => spd_log(&polar.v).into(),
        Frame::Lagrangian => spd_log(&polar.u).into(),
    };
    let out = match (convention, frame) {
        (MixedConvention::CovContra, Frame::Eulerian) => {
            chart.j_inv.transpose() * l * chart.j.transpose()
        }
        (MixedConvention::CovContra, Frame::Lagrangian) => {
            chart.j_hat_inv.transpose() * l * chart.j_hat.transpose()
        }
        (MixedConvention::ContraCov, Frame::Eulerian) => chart.j * l * chart.j_inv,
        (MixedConvention::ContraCov, Frame::Lagrangian) => chart.j_hat * l * chart.j_hat_inv,
    };
    Ok(out)
}

/// The only postulate-compatible non-mixed strain: `E = J L J^T`.
///
/// Symmetric, but its invariants generally differ from those of `L`; the
/// trace changes under any non-orthogonal chart.
pub fn strain_nonmixed(l: &SymTensor3, chart: &CoordinateChart) -> SymTensor3 {
    SymTensor3::symmetrize(&(chart.j * *l.as_tensor() * chart.j.transpose()))
}

/// The classical twice-covariant strain pair:
/// `2T = G - (F Ĝ⁻¹ F^T)⁻¹` and `2T̂ = F^T G F - Ĝ`.
///
/// In Cartesian charts these are the Almansi strain `½(I - B⁻¹)` and the
/// Green strain `½(C - I)`. Defined for any nonsingular `F`.
pub fn classical_strain(
    f: &Tensor3,
    chart: &CoordinateChart,
) -> Result<(SymTensor3, SymTensor3)> {
    if !f.is_finite() {
        return Err(Error::NonFinite {
            context: "deformation gradient",
        });
    }
    let det = f.det();
    if det == 0.0 {
        return Err(Error::Singular { det });
    }

    let spatial = *f * Tensor3::from(*chart.g_hat_inv()) * f.transpose();
    let spatial_inv = SymTensor3::symmetrize(&spatial).as_tensor().inverse()?;
    let t = SymTensor3::symmetrize(&(Tensor3::from(*chart.g()) - spatial_inv).scale(0.5));

    let pulled = f.transpose() * Tensor3::from(*chart.g()) * *f;
    let t_hat =
        SymTensor3::symmetrize(&(pulled - Tensor3::from(*chart.g_hat())).scale(0.5));

    Ok((t, t_hat))
}
