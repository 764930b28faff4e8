//! Isotropic hyperelastic stress from an energy potential in the
//! logarithmic strain invariants, plus the curvilinear stress machinery:
//! transformation, surface elements, mean stress, and work increments.
//!
//! The constitutive law is
//!
//! ```text
//! τ = det F · σ = ∂W/∂j · I + 2 ∂W/∂k · L + 3 ∂W/∂l · L²
//! ```
//!
//! with `j = tr L`, `k = tr L²`, `l = tr L³` and `L = log V`. The right
//! hand side is the gradient of `Ŵ(L) = W(j, k, l)` with respect to `L`,
//! which [`gradient_check`] verifies by central finite differences.

use std::sync::Arc;

use crate::consts::{FD_GRADIENT_STEP, FD_PARTIAL_STEP};
use crate::curvilinear::{CoordinateChart, VarianceCase};
use crate::error::{Error, Result};
use crate::spectral::{polar_decompose, spd_log};
use crate::tensor::{principal_invariants, SymTensor3, Tensor3, Vec3};

type Potential = Arc<dyn Fn(f64, f64, f64) -> f64 + Send + Sync>;

/// An isotropic energy potential `W(j, k, l)` per unit reference volume.
///
/// Partial derivatives are analytic when supplied and central finite
/// differences (relative step `FD_PARTIAL_STEP`) otherwise. User-supplied
/// functions must be reentrant; they may be evaluated from several threads.
#[derive(Clone)]
pub struct EnergyPotential {
    w: Potential,
    partials: Option<[Potential; 3]>,
}

impl EnergyPotential {
    /// A potential with finite-difference partials.
    pub fn new(w: impl Fn(f64, f64, f64) -> f64 + Send + Sync + 'static) -> Self {
        EnergyPotential {
            w: Arc::new(w),
            partials: None,
        }
    }

    /// A potential with analytic partials. The partials are cross-checked
    /// against finite differences on a fixed sample grid at construction.
    pub fn with_partials(
        w: impl Fn(f64, f64, f64) -> f64 + Send + Sync + 'static,
        dw_dj: impl Fn(f64, f64, f64) -> f64 + Send + Sync + 'static,
        dw_dk: impl Fn(f64, f64, f64) -> f64 + Send + Sync + 'static,
        dw_dl: impl Fn(f64, f64, f64) -> f64 + Send + Sync + 'static,
    ) -> Result<Self> {
        let potential = EnergyPotential {
            w: Arc::new(w),
            partials: Some([Arc::new(dw_dj), Arc::new(dw_dk), Arc::new(dw_dl)]),
        };
        potential.verify_partials()?;
        Ok(potential)
    }

    /// The quadratic logarithmic potential `W = (Λ/2) j² + μ k`.
    pub fn quadratic_hencky(lambda: f64, mu: f64) -> Self {
        EnergyPotential::with_partials(
            move |j, k, _| 0.5 * lambda * j * j + mu * k,
            move |j, _, _| lambda * j,
            move |_, _, _| mu,
            |_, _, _| 0.0,
        )
        .expect("polynomial partials verify")
    }

    pub fn eval(&self, j: f64, k: f64, l: f64) -> f64 {
        (self.w)(j, k, l)
    }

    /// `(∂W/∂j, ∂W/∂k, ∂W/∂l)` at the given invariants.
    pub fn gradient(&self, j: f64, k: f64, l: f64) -> Result<(f64, f64, f64)> {
        let out = match &self.partials {
            Some([dj, dk, dl]) => (dj(j, k, l), dk(j, k, l), dl(j, k, l)),
            None => (
                self.fd_partial(0, j, k, l),
                self.fd_partial(1, j, k, l),
                self.fd_partial(2, j, k, l),
            ),
        };
        if !(out.0.is_finite() && out.1.is_finite() && out.2.is_finite()) {
            return Err(Error::Potential {
                detail: format!("non-finite partials at (j, k, l) = ({j}, {k}, {l})"),
            });
        }
        Ok(out)
    }

    fn fd_partial(&self, which: usize, j: f64, k: f64, l: f64) -> f64 {
        let mut args = [j, k, l];
        let h = FD_PARTIAL_STEP * args[which].abs().max(1.0);
        args[which] += h;
        let plus = (self.w)(args[0], args[1], args[2]);
        args[which] -= 2.0 * h;
        let minus = (self.w)(args[0], args[1], args[2]);
        (plus - minus) / (2.0 * h)
    }

    fn verify_partials(&self) -> Result<()> {
        const SAMPLES: [(f64, f64, f64); 4] = [
            (0.0, 0.0, 0.0),
            (0.3, 0.5, -0.2),
            (-0.4, 1.1, 0.7),
            (1.0, 2.0, 3.0),
        ];
        let analytic = self.partials.as_ref().expect("called with partials");
        for (j, k, l) in SAMPLES {
            for (which, df) in analytic.iter().enumerate() {
                let exact = df(j, k, l);
                let fd = self.fd_partial(which, j, k, l);
                if !exact.is_finite() || (fd - exact).abs() > 1e-6 * exact.abs().max(1.0) {
                    return Err(Error::Potential {
                        detail: format!(
                            "analytic partial {which} = {exact} disagrees with finite \
                             difference {fd} at (j, k, l) = ({j}, {k}, {l})"
                        ),
                    });
                }
            }
        }
        Ok(())
    }
}

impl std::fmt::Debug for EnergyPotential {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("EnergyPotential")
            .field("analytic_partials", &self.partials.is_some())
            .finish()
    }
}

/// Cauchy and Kirchhoff stress at one material point.
#[derive(Debug, Clone, Copy)]
pub struct StressState {
    /// Cauchy stress.
    pub sigma: Tensor3,
    /// Kirchhoff stress `τ = det F · σ`.
    pub tau: Tensor3,
    /// Mean stress `tr(σ^T)/3`.
    pub mean: f64,
}

/// Kirchhoff stress from the logarithmic strain:
/// `τ = ∂W/∂j · I + 2 ∂W/∂k · L + 3 ∂W/∂l · L²`.
pub fn kirchhoff_stress(l: &SymTensor3, w: &EnergyPotential) -> Result<SymTensor3> {
    let (j, k, l3) = principal_invariants(l.as_tensor());
    let (wj, wk, wl) = w.gradient(j, k, l3)?;
    let lt = *l.as_tensor();
    // the square of a bit-symmetric matrix is bit-symmetric
    let tau = Tensor3::scaled_identity(wj) + lt.scale(2.0 * wk) + (lt * lt).scale(3.0 * wl);
    if !tau.is_finite() {
        return Err(Error::Potential {
            detail: "non-finite stress".into(),
        });
    }
    Ok(SymTensor3::new_unchecked(tau))
}

/// Cauchy stress of a deformation gradient: `σ = e^{-j} τ` with
/// `j = tr(log V)`.
pub fn cauchy_stress(f: &Tensor3, w: &EnergyPotential) -> Result<StressState> {
    let polar = polar_decompose(f)?;
    let log_strain = spd_log(&polar.v);
    let tau: Tensor3 = kirchhoff_stress(&log_strain, w)?.into();
    let sigma = tau.scale((-log_strain.trace()).exp());
    Ok(StressState {
        sigma,
        tau,
        mean: sigma.transpose().trace() / 3.0,
    })
}

/// Compares [`kirchhoff_stress`] against the central finite-difference
/// gradient of `Ŵ(M) = W(tr M, tr M², tr M³)` over the six independent
/// symmetric components. Returns the largest componentwise error relative
/// to `max(1, ‖τ‖_F)`; smooth potentials stay below `1e-5`.
pub fn gradient_check(l: &SymTensor3, w: &EnergyPotential) -> Result<f64> {
    let tau = kirchhoff_stress(l, w)?;
    let h = FD_GRADIENT_STEP * l.frobenius_norm().max(1.0);
    let energy = |m: &Tensor3| {
        let (j, k, l3) = principal_invariants(m);
        w.eval(j, k, l3)
    };

    let base = *l.as_tensor();
    let scale = tau.frobenius_norm().max(1.0);
    let mut worst: f64 = 0.0;
    for i in 0..3 {
        for k in i..3 {
            let mut plus = *base.rows();
            let mut minus = *base.rows();
            plus[i][k] += h;
            minus[i][k] -= h;
            if i != k {
                plus[k][i] += h;
                minus[k][i] -= h;
            }
            let diff =
                (energy(&Tensor3::from_rows(plus)) - energy(&Tensor3::from_rows(minus))) / (2.0 * h);
            // off-diagonal symmetric perturbations pick up both conjugate
            // components of the gradient
            let fd = if i != k { diff / 2.0 } else { diff };
            let err = (fd - tau.get(i, k)).abs() / scale;
            worst = worst.max(err);
        }
    }
    Ok(worst)
}

/// Transforms a Cartesian stress into chart coordinates.
///
/// Case Alpha gives the twice-covariant `σ̃ = (J⁻¹)^T σ J⁻¹`; case Beta the
/// covariant-contravariant `σ̃ = (J⁻¹)^T σ J^T`.
pub fn transform_stress(sigma: &Tensor3, chart: &CoordinateChart, case: VarianceCase) -> Tensor3 {
    let j_inv_t = chart.j_inv().transpose();
    match case {
        VarianceCase::Alpha => j_inv_t * *sigma * *chart.j_inv(),
        VarianceCase::Beta => j_inv_t * *sigma * chart.j().transpose(),
    }
}

/// The surface element spanned by two curvilinear edge vectors:
/// `√(det G)·(dx₁ × dx₂)` in case Beta, with an extra `G⁻¹` in case Alpha.
pub fn surface_element(
    dx1: &Vec3,
    dx2: &Vec3,
    chart: &CoordinateChart,
    case: VarianceCase,
) -> Vec3 {
    let normal = dx1.cross(dx2);
    let weight = chart.g().det().sqrt();
    match case {
        VarianceCase::Alpha => (*chart.g_inv().as_tensor() * normal).scale(weight),
        VarianceCase::Beta => normal.scale(weight),
    }
}

/// Mean stress of a chart-coordinate stress tensor:
/// `tr(σ̃ G⁻¹)/3` in case Alpha, `tr(σ̃)/3` in case Beta. Chart-independent.
pub fn mean_stress(sigma_tilde: &Tensor3, chart: &CoordinateChart, case: VarianceCase) -> f64 {
    match case {
        VarianceCase::Alpha => (*sigma_tilde * *chart.g_inv().as_tensor()).trace() / 3.0,
        VarianceCase::Beta => sigma_tilde.trace() / 3.0,
    }
}

/// Work per unit volume for an infinitesimal increment of the curvilinear
/// deformation: `tr(G⁻¹ σ̃^T dF)` in case Alpha, `tr(σ̃^T dF)` in case Beta.
/// Reduces to `tr(σ^T dF)` in Cartesian charts.
pub fn work_increment(
    sigma_tilde: &Tensor3,
    df: &Tensor3,
    chart: &CoordinateChart,
    case: VarianceCase,
) -> f64 {
    match case {
        VarianceCase::Alpha => {
            (*chart.g_inv().as_tensor() * sigma_tilde.transpose() * *df).trace()
        }
        VarianceCase::Beta => (sigma_tilde.transpose() * *df).trace(),
    }
}
