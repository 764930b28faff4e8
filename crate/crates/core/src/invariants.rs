//! Dilatation, the strain deviator, the shape invariants `(y, z)`, the
//! character number `zeta = z²/y³`, and deformation classification.
//!
//! All invariants are computed from the logarithmic strain `L` directly:
//! every invariant of a family strain `E` is also an invariant of `L`, so
//! `L` is the canonical carrier regardless of the family in use.

use crate::consts::{CLASS_TOL, Y_EPS, ZETA_SLACK};
use crate::error::{Error, Result};
use crate::spectral::{apply_scale, polar_decompose, sym_eigen, spd_log};
use crate::strain::StrainFamily;
use crate::tensor::{SymTensor3, Tensor3};

/// The invariant record of a deformation: dilatation `v`, log-dilatation
/// `j = tr L = log v`, shape invariants `y = tr((dev L)²)` and
/// `z = tr((dev L)³)`, the character number `zeta = z²/y³` (absent for pure
/// dilatations), and the shape-change amount `sqrt(y)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StrainInvariants {
    pub v: f64,
    pub j: f64,
    pub y: f64,
    pub z: f64,
    /// `z²/y³ ∈ [0, 1/6]`; `None` when `y` vanishes.
    pub zeta: Option<f64>,
    /// `sqrt(y)`, the amount of change of shape.
    pub amount: f64,
}

/// Classification of a deformation by its character number.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeformationClass {
    PureDilatation,
    SimpleShearLike,
    UniaxialLike,
    Intermediate,
}

impl DeformationClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            DeformationClass::PureDilatation => "PureDilatation",
            DeformationClass::SimpleShearLike => "SimpleShearLike",
            DeformationClass::UniaxialLike => "UniaxialLike",
            DeformationClass::Intermediate => "Intermediate",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeformationCharacter {
    pub class: DeformationClass,
    pub zeta: Option<f64>,
}

/// Volume dilatation `v = det F`. Satisfies `log v = tr(log V)` and
/// `log v = tr(f(E))` for every family.
pub fn dilatation(f: &Tensor3) -> Result<f64> {
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
    Ok(det)
}

/// The strain deviator of a family: `D = f⁻¹(dev log V)`, realized as
/// `f_tilde` applied spectrally to the traceless part of the logarithmic
/// strain. Scaling-invariant (`D(λF) = D(F)`) and equal to the strain
/// itself for volume-preserving deformations.
pub fn strain_deviator(f: &Tensor3, family: &StrainFamily) -> Result<SymTensor3> {
    let polar = polar_decompose(f)?;
    let log_strain = spd_log(&polar.v);
    apply_scale(&log_strain.deviator(), family.f_tilde())
}

/// The Almansi-family deviator computed from the mixed strain `E = T·G⁻¹`
/// alone (Cartesian form: `G = I`):
///
/// `D = det(I - 2E)^{-1/3} · ( E - ½ [1 - det(I - 2E)^{1/3}] · I )`.
///
/// Agrees with [`strain_deviator`] for the Almansi family.
pub fn deviator_from_almansi(e: &SymTensor3) -> Result<SymTensor3> {
    let a = SymTensor3::new_unchecked(Tensor3::identity() - e.as_tensor().scale(2.0));
    let spectrum = sym_eigen(&a);
    let min = spectrum.eigenvalues[2];
    if min <= 0.0 {
        return Err(Error::Domain {
            function: "almansi deviator dilatation factor".into(),
            eigenvalue: min,
        });
    }
    let cbrt = a.as_tensor().det().cbrt();
    let shifted = *e.as_tensor() - Tensor3::scaled_identity(0.5 * (1.0 - cbrt));
    Ok(SymTensor3::new_unchecked(shifted.scale(1.0 / cbrt)))
}

/// Computes the full invariant record of a deformation gradient.
pub fn strain_invariants(f: &Tensor3) -> Result<StrainInvariants> {
    let v = dilatation(f)?;
    let polar = polar_decompose(f)?;
    let log_strain = spd_log(&polar.v);
    let dev = log_strain.deviator();

    // tr(D²) of a symmetric D is its squared Frobenius norm, which keeps
    // y exactly nonnegative.
    let y = dev.frobenius_norm().powi(2);
    let dev_t = *dev.as_tensor();
    let z = (dev_t * dev_t * dev_t).trace();
    let zeta = if y > Y_EPS { Some(z * z / (y * y * y)) } else { None };

    Ok(StrainInvariants {
        v,
        j: log_strain.trace(),
        y,
        z,
        zeta,
        amount: y.sqrt(),
    })
}

/// The three principal deviatoric strains: real roots of
/// `x³ - (y/2)x - (z/3) = 0`, descending. Realizable pairs satisfy
/// `0 ≤ z²/y³ ≤ 1/6`, which guarantees three real roots; the solver is the
/// trigonometric form, so no complex arithmetic is involved.
pub fn principal_deviatoric_strains(y: f64, z: f64) -> Result<[f64; 3]> {
    if y < 0.0 {
        // y = tr((dev L)²) is a sum of squares for any deformation
        return Err(Error::NotRealizable {
            zeta: z * z / (y * y * y),
        });
    }
    if y < Y_EPS {
        if z.abs() > Y_EPS {
            return Err(Error::NotRealizable {
                zeta: if y > 0.0 { z * z / (y * y * y) } else { f64::INFINITY },
            });
        }
        return Ok([0.0; 3]);
    }
    let zeta = z * z / (y * y * y);
    if zeta > 1.0 / 6.0 + ZETA_SLACK {
        return Err(Error::NotRealizable { zeta });
    }

    let amplitude = 2.0 * (y / 6.0).sqrt();
    let argument = (6.0_f64.sqrt() * z / y.powf(1.5)).clamp(-1.0, 1.0);
    let phi = argument.acos() / 3.0;
    let mut roots = [
        amplitude * phi.cos(),
        amplitude * (phi - 2.0 * std::f64::consts::PI / 3.0).cos(),
        amplitude * (phi - 4.0 * std::f64::consts::PI / 3.0).cos(),
    ];
    roots.sort_by(|a, b| b.partial_cmp(a).unwrap());
    Ok(roots)
}

/// Classifies a deformation by its character number.
pub fn classify(inv: &StrainInvariants) -> DeformationCharacter {
    let class = match inv.zeta {
        None => DeformationClass::PureDilatation,
        Some(zeta) => {
            if zeta <= CLASS_TOL {
                DeformationClass::SimpleShearLike
            } else if zeta >= 1.0 / 6.0 - CLASS_TOL {
                DeformationClass::UniaxialLike
            } else {
                DeformationClass::Intermediate
            }
        }
    };
    DeformationCharacter {
        class,
        zeta: inv.zeta,
    }
}
