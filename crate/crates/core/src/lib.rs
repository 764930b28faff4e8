//! Finite-strain tensor toolkit built around the logarithmic strain.
//!
//! The crate covers the full family of finite strain tensors of the form
//! `E = f_tilde(log V)` for a strictly monotone, normalized scale function
//! `f_tilde`, together with the pieces that make the family usable in
//! practice:
//!
//! - exact-arithmetic-quality 3x3 tensor algebra: symmetric
//!   eigendecomposition, primary matrix functions, polar decomposition
//!   ([`tensor`], [`spectral`]);
//! - the built-in family catalogue (Hencky, Seth-Hill, Almansi, Green,
//!   Biot, Bazant), strain evaluation in both frames, family conversion,
//!   and the coaxial superposition identity ([`strain`]);
//! - the strain deviator, the shape invariants `(y, z)`, the character
//!   number `ζ = z²/y³`, and deformation classification ([`invariants`]);
//! - coordinate charts, metric tensors, mixed- and non-mixed-variant
//!   strains, and the classical strain pair ([`curvilinear`]);
//! - isotropic hyperelastic stress from an energy potential in the
//!   logarithmic strain invariants, with the curvilinear stress
//!   transformation, surface elements, mean stress, and work increments
//!   ([`stress`]).
//!
//! Everything is a pure function over immutable values; all types are
//! `Send + Sync` and safe to use from parallel drivers.

pub mod consts;
pub mod curvilinear;
pub mod error;
pub mod invariants;
pub mod sample;
pub mod spectral;
pub mod strain;
pub mod stress;
pub mod tensor;

pub use curvilinear::{
    classical_strain, curvilinear_gradient, log_strain_mixed, strain_nonmixed, CoordinateChart,
    MixedConvention, VarianceCase,
};
pub use error::{Error, Result};
pub use invariants::{
    classify, deviator_from_almansi, dilatation, principal_deviatoric_strains, strain_deviator,
    strain_invariants, DeformationCharacter, DeformationClass, StrainInvariants,
};
pub use spectral::{
    apply_scale, polar_decompose, spd_exp, spd_inverse, spd_log, spd_sqrt, sym_eigen,
    PolarFactors, ScalarFn, Spectrum3,
};
pub use strain::{
    check_superposition, convert_strain, eulerian_strain, is_tension_compression_symmetric,
    lagrangian_strain, stretch_strain, Frame, StrainFamily, StrainState,
};
pub use stress::{
    cauchy_stress, gradient_check, kirchhoff_stress, mean_stress, surface_element,
    transform_stress, work_increment, EnergyPotential, StressState,
};
pub use tensor::{
    deviator, principal_invariants, Rotation3, SpdTensor3, SymTensor3, Tensor3, Vec3,
};
