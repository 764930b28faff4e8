//! Strain tensor families and their evaluation.
//!
//! A family is a pair of mutually inverse scale functions: `f_tilde` maps
//! logarithmic principal stretches to strain eigenvalues, its inverse `f`
//! is the superposition function satisfying `f(E_1) + f(E_2) = f(E)` for
//! coaxial stretches. Both are normalized so that `f_tilde(0) = 0` and
//! `f_tilde'(0) = 1`, which makes every family agree with the infinitesimal
//! strain to first order.

use std::sync::Arc;

use crate::consts::{COMMUTE_TOL, FAMILY_GRID_HALF_WIDTH, FAMILY_GRID_POINTS};
use crate::error::{Error, Result};
use crate::spectral::{apply_scale, polar_decompose, spd_inverse, spd_log, ScalarFn};
use crate::tensor::{SpdTensor3, SymTensor3, Tensor3};

/// Which stretch of the polar decomposition a strain is built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Frame {
    /// Left stretch `V`; the strain lives on the deformed configuration.
    Eulerian,
    /// Right stretch `U`; the strain lives on the reference configuration.
    Lagrangian,
}

/// A named pair of mutually inverse scale functions defining a strain
/// tensor family.
#[derive(Debug, Clone)]
pub struct StrainFamily {
    name: String,
    m: Option<f64>,
    odd: bool,
    f_tilde: ScalarFn,
    f: ScalarFn,
    f_tilde_prime: ScalarFn,
}

type Scalar = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

impl StrainFamily {
    /// Logarithmic (Hencky) family: `f_tilde(x) = x`.
    pub fn hencky() -> Self {
        StrainFamily::verified(
            "hencky",
            None,
            true,
            ScalarFn::total("hencky", |x| x),
            ScalarFn::total("hencky inverse", |y| y),
            ScalarFn::total("hencky derivative", |_| 1.0),
        )
        .expect("builtin family verifies")
    }

    /// Family `(V^{2m} - I) / (2m)` for a nonzero exponent `m`.
    pub fn seth_hill(m: f64) -> Result<Self> {
        if m == 0.0 {
            return Err(Error::SethHillZeroExponent);
        }
        if !m.is_finite() {
            return Err(Error::FamilyParameter {
                name: "seth-hill".into(),
                detail: format!("exponent must be finite, got {m}"),
            });
        }
        Self::seth_hill_named("seth-hill", m)
    }

    fn seth_hill_named(name: &str, m: f64) -> Result<Self> {
        let f_tilde = ScalarFn::total(format!("{name}(m={m})"), move |x| {
            (2.0 * m * x).exp_m1() / (2.0 * m)
        });
        let f = ScalarFn::with_domain(
            format!("{name}(m={m}) inverse"),
            move |y| (2.0 * m * y).ln_1p() / (2.0 * m),
            move |y| 1.0 + 2.0 * m * y > 0.0,
        );
        let f_tilde_prime =
            ScalarFn::total(format!("{name}(m={m}) derivative"), move |x| (2.0 * m * x).exp());
        StrainFamily::verified(name, Some(m), false, f_tilde, f, f_tilde_prime)
    }

    /// Almansi family `½(I - B⁻¹)`; the Seth-Hill instance with `m = -1`.
    pub fn almansi() -> Self {
        Self::seth_hill_named("almansi", -1.0).expect("builtin family verifies")
    }

    /// Green family `½(C - I)`; the Seth-Hill instance with `m = +1`.
    pub fn green() -> Self {
        Self::seth_hill_named("green", 1.0).expect("builtin family verifies")
    }

    /// Biot family `V - I`.
    pub fn biot() -> Self {
        StrainFamily::verified(
            "biot",
            None,
            false,
            ScalarFn::total("biot", f64::exp_m1),
            ScalarFn::with_domain("biot inverse", f64::ln_1p, |y| 1.0 + y > 0.0),
            ScalarFn::total("biot derivative", f64::exp),
        )
        .expect("builtin family verifies")
    }

    /// Tension-compression symmetric family `½(V - V⁻¹)`.
    pub fn bazant() -> Self {
        StrainFamily::verified(
            "bazant",
            None,
            true,
            ScalarFn::total("bazant", f64::sinh),
            ScalarFn::total("bazant inverse", f64::asinh),
            ScalarFn::total("bazant derivative", f64::cosh),
        )
        .expect("builtin family verifies")
    }

    /// Looks up a family by name. `m` is required for (and only for)
    /// `seth-hill`; `m = 0` is rejected in favor of `hencky` rather than
    /// silently substituted.
    pub fn builtin(name: &str, m: Option<f64>) -> Result<Self> {
        if name != "seth-hill" {
            if let Some(m) = m {
                return Err(Error::FamilyParameter {
                    name: name.into(),
                    detail: format!("exponent m = {m} only applies to seth-hill"),
                });
            }
        }
        match name {
            "hencky" => Ok(Self::hencky()),
            "almansi" => Ok(Self::almansi()),
            "green" => Ok(Self::green()),
            "biot" => Ok(Self::biot()),
            "bazant" => Ok(Self::bazant()),
            "seth-hill" => match m {
                Some(m) => Self::seth_hill(m),
                None => Err(Error::FamilyParameter {
                    name: "seth-hill".into(),
                    detail: "exponent m is required (use name:m)".into(),
                }),
            },
            other => Err(Error::UnknownFamily { name: other.into() }),
        }
    }

    /// Registers a user-defined scale/inverse pair. The pair is verified on
    /// a 41-point grid over `[-2, 2]`: normalization, invertibility, strict
    /// monotonicity, and consistency of the `odd` flag.
    pub fn custom(
        name: impl Into<String>,
        f_tilde: Scalar,
        f: Scalar,
        f_domain: Arc<dyn Fn(f64) -> bool + Send + Sync>,
        f_tilde_prime: Scalar,
        odd: bool,
    ) -> Result<Self> {
        let name = name.into();
        let ft = {
            let f_tilde = f_tilde.clone();
            ScalarFn::total(name.clone(), move |x| f_tilde(x))
        };
        let fi = {
            let f = f.clone();
            let dom = f_domain.clone();
            ScalarFn::with_domain(format!("{name} inverse"), move |y| f(y), move |y| dom(y))
        };
        let fp = {
            let f_tilde_prime = f_tilde_prime.clone();
            ScalarFn::total(format!("{name} derivative"), move |x| f_tilde_prime(x))
        };
        StrainFamily::verified(name, None, odd, ft, fi, fp)
    }

    fn verified(
        name: impl Into<String>,
        m: Option<f64>,
        odd: bool,
        f_tilde: ScalarFn,
        f: ScalarFn,
        f_tilde_prime: ScalarFn,
    ) -> Result<Self> {
        let family = StrainFamily {
            name: name.into(),
            m,
            odd,
            f_tilde,
            f,
            f_tilde_prime,
        };
        family.verify()?;
        Ok(family)
    }

    fn verify(&self) -> Result<()> {
        let fail = |detail: String| {
            Err(Error::FamilyVerification {
                name: self.name.clone(),
                detail,
            })
        };

        let at_zero = self.f_tilde.eval(0.0);
        if at_zero.abs() > 1e-12 {
            return fail(format!("f_tilde(0) = {at_zero}, expected 0"));
        }
        let slope = self.f_tilde_prime.eval(0.0);
        if (slope - 1.0).abs() > 1e-10 {
            return fail(format!("f_tilde'(0) = {slope}, expected 1"));
        }

        let n = FAMILY_GRID_POINTS;
        let half = FAMILY_GRID_HALF_WIDTH;
        let step = 2.0 * half / (n - 1) as f64;
        let mut previous = f64::NEG_INFINITY;
        for i in 0..n {
            let x = -half + i as f64 * step;
            let y = self.f_tilde.eval(x);
            if !y.is_finite() {
                return fail(format!("f_tilde({x}) is not finite"));
            }
            if y <= previous {
                return fail(format!("f_tilde is not strictly increasing at x = {x}"));
            }
            previous = y;
            if !self.f.contains(y) {
                return fail(format!("f_tilde({x}) = {y} escapes the domain of f"));
            }
            let back = self.f.eval(y);
            if (back - x).abs() > 1e-10 * x.abs().max(1.0) {
                return fail(format!("f(f_tilde({x})) = {back}, expected {x}"));
            }
            if self.odd {
                let minus = self.f_tilde.eval(-x);
                if (minus + y).abs() > 1e-12 * y.abs().max(1.0) {
                    return fail(format!("family flagged odd but f_tilde(-{x}) = {minus}"));
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Seth-Hill exponent, when the family is a Seth-Hill instance.
    pub fn exponent(&self) -> Option<f64> {
        self.m
    }

    /// Whether the family is tension-compression symmetric.
    pub fn is_odd(&self) -> bool {
        self.odd
    }

    /// The strain scale function.
    pub fn f_tilde(&self) -> &ScalarFn {
        &self.f_tilde
    }

    /// The superposition function, inverse of `f_tilde`.
    pub fn f(&self) -> &ScalarFn {
        &self.f
    }

    pub fn f_tilde_prime(&self) -> &ScalarFn {
        &self.f_tilde_prime
    }
}

/// A strain value together with the logarithmic strain it came from.
#[derive(Debug, Clone)]
pub struct StrainState {
    /// The family strain `E = f_tilde(L)`.
    pub strain: SymTensor3,
    /// The logarithmic strain `L = log V` (Eulerian) or `log U` (Lagrangian).
    pub log_strain: SymTensor3,
    pub family: StrainFamily,
    pub frame: Frame,
}

/// Strain of a pure stretch: `f_tilde(log V)`.
pub fn stretch_strain(v: &SpdTensor3, family: &StrainFamily) -> Result<SymTensor3> {
    apply_scale(&spd_log(v), family.f_tilde())
}

/// Eulerian strain of a deformation gradient: `f_tilde(log V)` with `V`
/// the left stretch. Vanishes exactly when `F` is a rotation.
pub fn eulerian_strain(f: &Tensor3, family: &StrainFamily) -> Result<StrainState> {
    let polar = polar_decompose(f)?;
    let log_strain = spd_log(&polar.v);
    let strain = apply_scale(&log_strain, family.f_tilde())?;
    Ok(StrainState {
        strain,
        log_strain,
        family: family.clone(),
        frame: Frame::Eulerian,
    })
}

/// Lagrangian strain of a deformation gradient: `f_tilde(log U)` with `U`
/// the right stretch.
pub fn lagrangian_strain(f: &Tensor3, family: &StrainFamily) -> Result<StrainState> {
    let polar = polar_decompose(f)?;
    let log_strain = spd_log(&polar.u);
    let strain = apply_scale(&log_strain, family.f_tilde())?;
    Ok(StrainState {
        strain,
        log_strain,
        family: family.clone(),
        frame: Frame::Lagrangian,
    })
}

/// Converts a strain value between families by `to.f_tilde ∘ from.f`,
/// applied spectrally. Errors when an eigenvalue of `e` leaves the domain
/// of `from.f` (e.g. an Almansi eigenvalue at or above 1/2).
pub fn convert_strain(
    e: &SymTensor3,
    from: &StrainFamily,
    to: &StrainFamily,
) -> Result<SymTensor3> {
    let from_f = from.f().clone();
    let to_ft = to.f_tilde().clone();
    let composed = ScalarFn::with_domain(
        format!("{} -> {}", from.name(), to.name()),
        move |x| to_ft.eval(from_f.eval(x)),
        {
            let from_f = from.f().clone();
            move |x| from_f.contains(x)
        },
    );
    apply_scale(e, &composed)
}

/// Residual of the superposition identity for two coaxial stretches:
/// `‖f(E(V1)) + f(E(V2)) - f(E(V1·V2))‖_F`.
///
/// Rejects pairs whose commutator exceeds the coaxiality tolerance.
pub fn check_superposition(
    v1: &SpdTensor3,
    v2: &SpdTensor3,
    family: &StrainFamily,
) -> Result<f64> {
    let a = *v1.as_tensor();
    let b = *v2.as_tensor();
    let commutator = (a * b - b * a).frobenius_norm();
    let tolerance = COMMUTE_TOL * v1.frobenius_norm() * v2.frobenius_norm();
    if commutator > tolerance {
        return Err(Error::NonCoaxial {
            commutator,
            tolerance,
        });
    }

    let f_of_strain = |v: &SpdTensor3| -> Result<SymTensor3> {
        let e = stretch_strain(v, family)?;
        apply_scale(&e, family.f())
    };

    let lhs = f_of_strain(v1)?.add(&f_of_strain(v2)?);
    let product = SpdTensor3::new(SymTensor3::symmetrize(&(a * b)))?;
    let rhs = f_of_strain(&product)?;
    Ok(lhs.sub(&rhs).frobenius_norm())
}

/// Tests `E(V⁻¹) = -E(V)` for the given stretch; returns the verdict and
/// the witness residual. Agrees with the family's `odd` flag for every SPD
/// input when the flag is set.
pub fn is_tension_compression_symmetric(
    family: &StrainFamily,
    v: &SpdTensor3,
) -> Result<(bool, f64)> {
    let e = stretch_strain(v, family)?;
    let e_inv = stretch_strain(&spd_inverse(v), family)?;
    let residual = e_inv.add(&e).frobenius_norm();
    let ok = residual <= 1e-10 * (1.0 + e.frobenius_norm());
    Ok((ok, residual))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::Rotation3;

    const LN2: f64 = std::f64::consts::LN_2;

    #[test]
    fn hencky_scale_is_identity() {
        let family = StrainFamily::hencky();
        assert_eq!(family.f_tilde().eval(0.3), 0.3);
        assert_eq!(family.f().eval(0.3), 0.3);
        assert!(family.is_odd());
    }

    #[test]
    fn almansi_scale_values() {
        let family = StrainFamily::almansi();
        // f_tilde(ln 2) = (1 - 1/4)/2 = 3/8
        assert!((family.f_tilde().eval(LN2) - 0.375).abs() < 1e-15);
        assert!(!family.is_odd());
    }

    #[test]
    fn bazant_scale_and_inverse() {
        let family = StrainFamily::bazant();
        // f_tilde(ln 2) = (2 - 1/2)/2 = 3/4
        assert!((family.f_tilde().eval(LN2) - 0.75).abs() < 1e-15);
        assert!((family.f().eval(0.75) - LN2).abs() < 1e-15);
        assert!(family.is_odd());
    }

    #[test]
    fn seth_hill_zero_exponent_redirects() {
        assert!(matches!(
            StrainFamily::seth_hill(0.0),
            Err(Error::SethHillZeroExponent)
        ));
        assert!(matches!(
            StrainFamily::builtin("seth-hill", Some(0.0)),
            Err(Error::SethHillZeroExponent)
        ));
    }

    #[test]
    fn builtin_unknown_name() {
        assert!(matches!(
            StrainFamily::builtin("swainger", None),
            Err(Error::UnknownFamily { .. })
        ));
    }

    #[test]
    fn builtin_rejects_stray_exponent() {
        assert!(matches!(
            StrainFamily::builtin("hencky", Some(1.0)),
            Err(Error::FamilyParameter { .. })
        ));
    }

    #[test]
    fn custom_family_requires_normalization() {
        // doubled slope violates f_tilde'(0) = 1
        let bad = StrainFamily::custom(
            "doubled",
            Arc::new(|x| 2.0 * x),
            Arc::new(|y| y / 2.0),
            Arc::new(|_| true),
            Arc::new(|_| 2.0),
            true,
        );
        assert!(matches!(bad, Err(Error::FamilyVerification { .. })));
    }

    #[test]
    fn custom_family_odd_flag_checked() {
        let bad = StrainFamily::custom(
            "claims-odd",
            Arc::new(|x: f64| x.exp_m1()),
            Arc::new(|y: f64| y.ln_1p()),
            Arc::new(|y| 1.0 + y > 0.0),
            Arc::new(|x: f64| x.exp()),
            true,
        );
        assert!(matches!(bad, Err(Error::FamilyVerification { .. })));
    }

    #[test]
    fn rotation_has_zero_strain_in_every_family() {
        let angle = 1.1_f64;
        let (s, c) = angle.sin_cos();
        let r = Tensor3::from_rows([[c, 0.0, s], [0.0, 1.0, 0.0], [-s, 0.0, c]]);
        Rotation3::new(r).unwrap();
        for family in [
            StrainFamily::hencky(),
            StrainFamily::almansi(),
            StrainFamily::green(),
            StrainFamily::biot(),
            StrainFamily::bazant(),
        ] {
            let state = eulerian_strain(&r, &family).unwrap();
            assert!(
                state.strain.frobenius_norm() <= 1e-10,
                "family {}",
                family.name()
            );
            let state = lagrangian_strain(&r, &family).unwrap();
            assert!(
                state.strain.frobenius_norm() <= 1e-10,
                "family {} (lagrangian)",
                family.name()
            );
        }
    }

    #[test]
    fn eulerian_hencky_of_diagonal() {
        let state = eulerian_strain(&Tensor3::diag(2.0, 1.0, 1.0), &StrainFamily::hencky()).unwrap();
        let want = Tensor3::diag(LN2, 0.0, 0.0);
        assert!((Tensor3::from(state.strain) - want).frobenius_norm() < 1e-14);
    }

    #[test]
    fn eulerian_almansi_matches_direct_formula() {
        // oracle: ½(I - (F F^T)⁻¹)
        let f = Tensor3::diag(2.0, 1.0, 1.0);
        let state = eulerian_strain(&f, &StrainFamily::almansi()).unwrap();
        let b_inv = (f * f.transpose()).inverse().unwrap();
        let oracle = (Tensor3::identity() - b_inv).scale(0.5);
        assert!((Tensor3::from(state.strain) - oracle).frobenius_norm() < 1e-12);
    }

    #[test]
    fn lagrangian_green_matches_direct_formula() {
        let f = Tensor3::diag(2.0, 1.0, 1.0);
        let state = lagrangian_strain(&f, &StrainFamily::green()).unwrap();
        let oracle = (f.transpose() * f - Tensor3::identity()).scale(0.5);
        assert!((Tensor3::from(state.strain) - oracle).frobenius_norm() < 1e-12);
    }

    #[test]
    fn convert_zero_is_zero() {
        let out = convert_strain(
            &SymTensor3::ZERO,
            &StrainFamily::bazant(),
            &StrainFamily::green(),
        )
        .unwrap();
        assert!(out.frobenius_norm() == 0.0);
    }

    #[test]
    fn convert_hencky_to_almansi() {
        let e = SymTensor3::diag(LN2, 0.0, 0.0);
        let out = convert_strain(&e, &StrainFamily::hencky(), &StrainFamily::almansi()).unwrap();
        let want = Tensor3::diag(0.375, 0.0, 0.0);
        assert!((*out.as_tensor() - want).frobenius_norm() < 1e-14);
    }

    #[test]
    fn convert_rejects_almansi_eigenvalue_past_half() {
        let e = SymTensor3::diag(0.6, 0.0, 0.0);
        let err = convert_strain(&e, &StrainFamily::almansi(), &StrainFamily::hencky()).unwrap_err();
        assert!(matches!(err, Error::Domain { eigenvalue, .. } if eigenvalue == 0.6));
    }

    #[test]
    fn superposition_hencky_diagonal() {
        let v1 = SpdTensor3::diag(2.0, 1.0, 1.0).unwrap();
        let v2 = SpdTensor3::diag(4.0, 1.0, 1.0).unwrap();
        let residual = check_superposition(&v1, &v2, &StrainFamily::hencky()).unwrap();
        assert!(residual <= 1e-14);
    }

    #[test]
    fn superposition_almansi_worked_example() {
        // f(E_1) + f(E_2) = ln 2 + ln 3 = ln 6 = f(E(diag(6,1,1)))
        let v1 = SpdTensor3::diag(2.0, 1.0, 1.0).unwrap();
        let v2 = SpdTensor3::diag(3.0, 1.0, 1.0).unwrap();
        let residual = check_superposition(&v1, &v2, &StrainFamily::almansi()).unwrap();
        assert!(residual <= 1e-12);
    }

    #[test]
    fn superposition_inverse_pair() {
        let v1 = SpdTensor3::diag(2.0, 0.5, 1.25).unwrap();
        let v2 = SpdTensor3::diag(0.5, 2.0, 0.8).unwrap();
        for family in [StrainFamily::hencky(), StrainFamily::bazant()] {
            let residual = check_superposition(&v1, &v2, &family).unwrap();
            assert!(residual <= 1e-12, "family {}", family.name());
        }
    }

    #[test]
    fn superposition_rejects_non_coaxial() {
        let v1 = SpdTensor3::diag(2.0, 1.0, 1.0).unwrap();
        let skew = Tensor3::from_rows([[2.0, 0.4, 0.0], [0.4, 1.0, 0.0], [0.0, 0.0, 1.0]]);
        let v2 = SpdTensor3::new(SymTensor3::new(skew).unwrap()).unwrap();
        assert!(matches!(
            check_superposition(&v1, &v2, &StrainFamily::hencky()),
            Err(Error::NonCoaxial { .. })
        ));
    }

    #[test]
    fn tension_compression_verdicts() {
        let v = SpdTensor3::diag(2.0, 1.0, 1.0).unwrap();
        let (hencky_ok, _) =
            is_tension_compression_symmetric(&StrainFamily::hencky(), &v).unwrap();
        assert!(hencky_ok);
        let (bazant_ok, _) =
            is_tension_compression_symmetric(&StrainFamily::bazant(), &v).unwrap();
        assert!(bazant_ok);
        // almansi: E(V⁻¹)_11 = ½(1-4) = -3/2 while -E(V)_11 = -3/8
        let (almansi_ok, residual) =
            is_tension_compression_symmetric(&StrainFamily::almansi(), &v).unwrap();
        assert!(!almansi_ok);
        assert!((residual - (1.5 - 0.375)).abs() < 1e-12);
    }
}
