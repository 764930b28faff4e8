//! The `check` subcommand: a seeded property suite over every library
//! layer. The report is deterministic for a given seed and trial count;
//! a failing property prints the instance that broke it, ready to paste
//! into a regression test.

use logstrain::{
    apply_scale, cauchy_stress, check_superposition, classical_strain, curvilinear_gradient,
    deviator, deviator_from_almansi, eulerian_strain, gradient_check,
    is_tension_compression_symmetric, kirchhoff_stress, lagrangian_strain, log_strain_mixed,
    mean_stress, polar_decompose, principal_deviatoric_strains, principal_invariants, sample,
    spd_exp, spd_log, strain_deviator, strain_invariants, strain_nonmixed, surface_element,
    sym_eigen, transform_stress, work_increment, CoordinateChart, EnergyPotential, Frame,
    MixedConvention, StrainFamily, SymTensor3, Tensor3, VarianceCase,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct CheckReport {
    pub text: String,
    pub passed: bool,
}

type PropResult = Result<(), String>;
type Property = (&'static str, fn(&mut ChaCha8Rng, usize) -> PropResult);

fn families() -> Vec<StrainFamily> {
    vec![
        StrainFamily::hencky(),
        StrainFamily::almansi(),
        StrainFamily::green(),
        StrainFamily::biot(),
        StrainFamily::bazant(),
        StrainFamily::seth_hill(0.5).unwrap(),
        StrainFamily::seth_hill(-0.5).unwrap(),
    ]
}

fn check(ok: bool, detail: impl FnOnce() -> String) -> PropResult {
    if ok {
        Ok(())
    } else {
        Err(detail())
    }
}

fn close(a: &Tensor3, b: &Tensor3, tol: f64) -> bool {
    (*a - *b).frobenius_norm() <= tol
}

fn trace_cyclicity(rng: &mut ChaCha8Rng, trials: usize) -> PropResult {
    for _ in 0..trials {
        let a = sample::tensor(rng, 2.0);
        let b = sample::tensor(rng, 2.0);
        let c = sample::tensor(rng, 2.0);
        let abc = (a * b * c).trace();
        let bca = (b * c * a).trace();
        let cab = (c * a * b).trace();
        let tol = 1e-10 * abc.abs().max(1.0);
        check((abc - bca).abs() <= tol && (abc - cab).abs() <= tol, || {
            format!("A={a} B={b} C={c}: traces {abc}, {bca}, {cab}")
        })?;
    }
    Ok(())
}

fn eigen_reconstruction(rng: &mut ChaCha8Rng, trials: usize) -> PropResult {
    for _ in 0..trials {
        let a = sample::symmetric(rng, 2.0);
        let spectrum = sym_eigen(&a);
        let back = spectrum.reconstruct();
        let ortho = spectrum.eigenvector_matrix().transpose() * spectrum.eigenvector_matrix();
        check(
            close(back.as_tensor(), a.as_tensor(), 1e-12 * a.frobenius_norm().max(1.0))
                && close(&ortho, &Tensor3::identity(), 1e-12),
            || format!("A={}", a.as_tensor()),
        )?;
    }
    Ok(())
}

fn spectral_similarity(rng: &mut ChaCha8Rng, trials: usize) -> PropResult {
    let g = logstrain::ScalarFn::total("exp", f64::exp);
    for _ in 0..trials {
        let a = sample::symmetric(rng, 1.0);
        let q = sample::rotation(rng);
        let qt = q.as_tensor().transpose();
        let conjugated = SymTensor3::symmetrize(&(*q.as_tensor() * *a.as_tensor() * qt));
        let lhs: Tensor3 = apply_scale(&conjugated, &g).unwrap().into();
        let rhs = *q.as_tensor() * Tensor3::from(apply_scale(&a, &g).unwrap()) * qt;
        check(close(&lhs, &rhs, 1e-9 * rhs.frobenius_norm().max(1.0)), || {
            format!("A={} Q={}", a.as_tensor(), q.as_tensor())
        })?;
    }
    Ok(())
}

fn trace_log_det(rng: &mut ChaCha8Rng, trials: usize) -> PropResult {
    for _ in 0..trials {
        let a = sample::spd(rng, -1.5, 1.5);
        let lhs = spd_log(&a).trace();
        let rhs = a.det().ln();
        check((lhs - rhs).abs() <= 1e-10 * rhs.abs().max(1.0), || {
            format!("A={}: tr log = {lhs}, log det = {rhs}", a.as_tensor())
        })?;
    }
    Ok(())
}

fn log_exp_round_trip(rng: &mut ChaCha8Rng, trials: usize) -> PropResult {
    for _ in 0..trials {
        let a = sample::spd(rng, -1.5, 1.5);
        let back = spd_exp(&spd_log(&a)).unwrap();
        check(
            close(back.as_tensor(), a.as_tensor(), 1e-10 * a.frobenius_norm()),
            || format!("A={}", a.as_tensor()),
        )?;
    }
    Ok(())
}

fn polar_reconstruction(rng: &mut ChaCha8Rng, trials: usize) -> PropResult {
    for _ in 0..trials {
        let v = sample::spd(rng, -1.0, 1.0);
        let r = sample::rotation(rng);
        let f = *v.as_tensor() * *r.as_tensor();
        let pf = polar_decompose(&f).unwrap();
        let scale = f.frobenius_norm();
        check(
            close(&(*pf.v.as_tensor() * *pf.r.as_tensor()), &f, 1e-10 * scale)
                && close(pf.v.as_tensor(), v.as_tensor(), 1e-9 * scale)
                && close(pf.r.as_tensor(), r.as_tensor(), 1e-9),
            || format!("F={f}"),
        )?;
    }
    Ok(())
}

fn adjoint_identity(rng: &mut ChaCha8Rng, trials: usize) -> PropResult {
    for _ in 0..trials {
        let a = sample::tensor(rng, 2.0);
        let x = sample::vector(rng, 2.0);
        let y = sample::vector(rng, 2.0);
        let lhs = x.dot(&(a * y));
        let rhs = y.dot(&(a.transpose() * x));
        check((lhs - rhs).abs() <= 1e-12 * lhs.abs().max(1.0), || {
            format!("A={a}: {lhs} vs {rhs}")
        })?;
    }
    Ok(())
}

fn cross_product_transform(rng: &mut ChaCha8Rng, trials: usize) -> PropResult {
    for _ in 0..trials {
        let j = sample::invertible(rng);
        let x = sample::vector(rng, 2.0);
        let y = sample::vector(rng, 2.0);
        let lhs = (j * x).cross(&(j * y));
        let rhs = (j.inverse().unwrap().transpose() * x.cross(&y)).scale(j.det());
        check((lhs - rhs).norm() <= 1e-9 * rhs.norm().max(1.0), || {
            format!("J={j}")
        })?;
    }
    Ok(())
}

fn log_additivity(rng: &mut ChaCha8Rng, trials: usize) -> PropResult {
    for _ in 0..trials {
        let (v1, v2) = sample::coaxial_pair(rng, -1.0, 1.0);
        let product = logstrain::SpdTensor3::new(SymTensor3::symmetrize(
            &(*v1.as_tensor() * *v2.as_tensor()),
        ))
        .unwrap();
        let lhs: Tensor3 = spd_log(&product).into();
        let rhs = Tensor3::from(spd_log(&v1)) + Tensor3::from(spd_log(&v2));
        check(close(&lhs, &rhs, 1e-9 * rhs.frobenius_norm().max(1.0)), || {
            format!("V1={} V2={}", v1.as_tensor(), v2.as_tensor())
        })?;
    }
    Ok(())
}

fn isochoric_volumetric_split(rng: &mut ChaCha8Rng, trials: usize) -> PropResult {
    for _ in 0..trials {
        let v = sample::spd(rng, -1.0, 1.0);
        let log: Tensor3 = spd_log(&v).into();
        let rebuilt = deviator(&log) + Tensor3::scaled_identity(v.det().ln() / 3.0);
        check(
            close(&rebuilt, &log, 1e-9 * log.frobenius_norm().max(1.0)),
            || format!("V={}", v.as_tensor()),
        )?;
    }
    Ok(())
}

pub(crate) fn deviator_trace_with(
    rng: &mut ChaCha8Rng,
    trials: usize,
    dev: impl Fn(&Tensor3) -> Tensor3,
) -> PropResult {
    for _ in 0..trials {
        let a = sample::tensor(rng, 3.0);
        let d = dev(&a);
        check(d.trace().abs() <= 1e-14 * a.frobenius_norm().max(1.0), || {
            format!("A={a}: tr dev = {}", d.trace())
        })?;
    }
    Ok(())
}

fn deviator_trace(rng: &mut ChaCha8Rng, trials: usize) -> PropResult {
    deviator_trace_with(rng, trials, deviator)
}

fn rotation_elimination(rng: &mut ChaCha8Rng, trials: usize) -> PropResult {
    let families = families();
    for _ in 0..trials {
        let f = sample::gradient(rng);
        let r = sample::rotation(rng);
        let family = &families[rng.gen_range(0..families.len())];
        let eul = eulerian_strain(&f, family).unwrap().strain;
        let eul_rot = eulerian_strain(&(f * *r.as_tensor()), family).unwrap().strain;
        let lag = lagrangian_strain(&f, family).unwrap().strain;
        let lag_rot = lagrangian_strain(&(*r.as_tensor() * f), family).unwrap().strain;
        let tol = 1e-9 * eul.frobenius_norm().max(1.0);
        check(
            close(eul_rot.as_tensor(), eul.as_tensor(), tol)
                && close(lag_rot.as_tensor(), lag.as_tensor(), tol),
            || format!("family {} F={f} R={}", family.name(), r.as_tensor()),
        )?;
    }
    Ok(())
}

fn frame_covariance(rng: &mut ChaCha8Rng, trials: usize) -> PropResult {
    let families = families();
    for _ in 0..trials {
        let f = sample::gradient(rng);
        let r = sample::rotation(rng);
        let family = &families[rng.gen_range(0..families.len())];
        let e = eulerian_strain(&f, family).unwrap().strain;
        let rotated = eulerian_strain(&(*r.as_tensor() * f), family).unwrap().strain;
        let conjugated = *r.as_tensor() * *e.as_tensor() * r.as_tensor().transpose();
        check(
            close(rotated.as_tensor(), &conjugated, 1e-9 * e.frobenius_norm().max(1.0)),
            || format!("family {} F={f}", family.name()),
        )?;
    }
    Ok(())
}

fn infinitesimal_limit(rng: &mut ChaCha8Rng, trials: usize) -> PropResult {
    let eps = 1e-6;
    for _ in 0..trials {
        let h = sample::tensor(rng, 1.0);
        let f = Tensor3::identity() + h.scale(eps);
        let linear = h.sym_part().scale(eps);
        let bound = 20.0 * eps * eps * h.frobenius_norm().powi(2).max(1.0);
        for family in families() {
            let e = eulerian_strain(&f, &family).unwrap().strain;
            check(
                (Tensor3::from(e) - linear).frobenius_norm() <= bound,
                || format!("family {} H={h}", family.name()),
            )?;
        }
    }
    Ok(())
}

fn seth_hill_direct(rng: &mut ChaCha8Rng, trials: usize) -> PropResult {
    for _ in 0..trials {
        let f = sample::gradient(rng);
        let m = rng.gen_range(0.1..1.5) * if rng.gen::<bool>() { 1.0 } else { -1.0 };
        let family = StrainFamily::seth_hill(m).unwrap();
        let e = eulerian_strain(&f, &family).unwrap().strain;
        let b = SymTensor3::symmetrize(&(f * f.transpose()));
        let power = logstrain::ScalarFn::with_domain("power", move |x| x.powf(m), |x| x > 0.0);
        let direct =
            (Tensor3::from(apply_scale(&b, &power).unwrap()) - Tensor3::identity()).scale(0.5 / m);
        check(
            close(e.as_tensor(), &direct, 1e-10 * direct.frobenius_norm().max(1.0)),
            || format!("m={m} F={f}"),
        )?;
    }
    Ok(())
}

fn bazant_direct(rng: &mut ChaCha8Rng, trials: usize) -> PropResult {
    let family = StrainFamily::bazant();
    for _ in 0..trials {
        let v = sample::spd(rng, -1.0, 1.0);
        let f = *v.as_tensor() * *sample::rotation(rng).as_tensor();
        let e = eulerian_strain(&f, &family).unwrap().strain;
        let direct =
            (*v.as_tensor() - Tensor3::from(logstrain::spd_inverse(&v))).scale(0.5);
        check(
            close(e.as_tensor(), &direct, 1e-10 * direct.frobenius_norm().max(1.0)),
            || format!("V={}", v.as_tensor()),
        )?;
    }
    Ok(())
}

fn superposition(rng: &mut ChaCha8Rng, trials: usize) -> PropResult {
    let families = families();
    for _ in 0..trials {
        let (v1, v2) = sample::coaxial_pair(rng, -1.0, 1.0);
        let budget =
            1e-9 * (spd_log(&v1).frobenius_norm() + spd_log(&v2).frobenius_norm() + 1.0);
        for family in &families {
            let residual = check_superposition(&v1, &v2, family).unwrap();
            check(residual <= budget, || {
                format!(
                    "family {} V1={} V2={}: residual {residual:e}",
                    family.name(),
                    v1.as_tensor(),
                    v2.as_tensor()
                )
            })?;
        }
    }
    Ok(())
}

fn tension_compression_flags(rng: &mut ChaCha8Rng, trials: usize) -> PropResult {
    for _ in 0..trials {
        let v = sample::spd(rng, -1.0, 1.0);
        for family in families() {
            let (symmetric, residual) = is_tension_compression_symmetric(&family, &v).unwrap();
            check(!family.is_odd() || symmetric, || {
                format!(
                    "odd family {} asymmetric at V={} (residual {residual:e})",
                    family.name(),
                    v.as_tensor()
                )
            })?;
        }
    }
    Ok(())
}

fn deviator_postulates(rng: &mut ChaCha8Rng, trials: usize) -> PropResult {
    let families = families();
    for _ in 0..trials {
        let family = &families[rng.gen_range(0..families.len())];

        // D(lambda F) = D(F)
        let f = sample::gradient(rng);
        let lambda = rng.gen_range(0.3..3.0);
        let d = strain_deviator(&f, family).unwrap();
        let d_scaled = strain_deviator(&f.scale(lambda), family).unwrap();
        check(
            d_scaled.sub(&d).frobenius_norm() <= 1e-10 * d.frobenius_norm().max(1.0),
            || format!("family {} lambda={lambda} F={f}", family.name()),
        )?;

        // D = E for volume-preserving F
        let iso = f.scale(f.det().cbrt().recip());
        let d_iso = strain_deviator(&iso, family).unwrap();
        let e_iso = eulerian_strain(&iso, family).unwrap().strain;
        check(
            d_iso.sub(&e_iso).frobenius_norm() <= 1e-10 * e_iso.frobenius_norm().max(1.0),
            || format!("family {} F={iso}", family.name()),
        )?;
    }
    Ok(())
}

fn almansi_deviator_equivalence(rng: &mut ChaCha8Rng, trials: usize) -> PropResult {
    let cartesian = CoordinateChart::cartesian();
    let family = StrainFamily::almansi();
    for _ in 0..trials {
        let f = sample::gradient(rng);
        let (t, _) = classical_strain(&f, &cartesian).unwrap();
        let via_t = deviator_from_almansi(&t).unwrap();
        let direct = strain_deviator(&f, &family).unwrap();
        check(
            via_t.sub(&direct).frobenius_norm() <= 1e-9 * direct.frobenius_norm().max(1e-12),
            || format!("F={f}"),
        )?;
    }
    Ok(())
}

fn invariant_power_law(rng: &mut ChaCha8Rng, trials: usize) -> PropResult {
    for _ in 0..trials {
        let v = sample::spd(rng, -0.4, 0.4);
        let n = rng.gen_range(2..5);
        let mut power = Tensor3::identity();
        for _ in 0..n {
            power = power * *v.as_tensor();
        }
        let base = strain_invariants(v.as_tensor()).unwrap();
        let repeated = strain_invariants(&power).unwrap();
        let nf = n as f64;
        check(
            (repeated.y - nf * nf * base.y).abs() <= 1e-9 * (nf * nf * base.y).max(1.0)
                && (repeated.z - nf.powi(3) * base.z).abs()
                    <= 1e-9 * (nf.powi(3) * base.z.abs()).max(1.0)
                && (repeated.amount - nf * base.amount).abs()
                    <= 1e-9 * (nf * base.amount).max(1.0),
            || format!("V={} n={n}", v.as_tensor()),
        )?;
    }
    Ok(())
}

fn cubic_roots_match_spectrum(rng: &mut ChaCha8Rng, trials: usize) -> PropResult {
    for _ in 0..trials {
        let f = sample::gradient(rng);
        let inv = strain_invariants(&f).unwrap();
        let roots = principal_deviatoric_strains(inv.y, inv.z).unwrap();
        let dev = spd_log(&polar_decompose(&f).unwrap().v).deviator();
        let eigen = sym_eigen(&dev).eigenvalues;
        for (root, lambda) in roots.iter().zip(eigen) {
            check((root - lambda).abs() <= 1e-8 * lambda.abs().max(1.0), || {
                format!("F={f}: root {root} vs eigenvalue {lambda}")
            })?;
        }
    }
    Ok(())
}

fn mixed_invariant_preservation(rng: &mut ChaCha8Rng, trials: usize) -> PropResult {
    for _ in 0..trials {
        let chart = sample::chart(rng);
        let f0 = sample::gradient(rng);
        let f = curvilinear_gradient(&f0, &chart).unwrap();
        let l = spd_log(&polar_decompose(&f0).unwrap().v);
        let (j0, k0, l0) = principal_invariants(l.as_tensor());
        for convention in [MixedConvention::CovContra, MixedConvention::ContraCov] {
            let l_star = log_strain_mixed(&f, &chart, convention, Frame::Eulerian).unwrap();
            let (j1, k1, l1) = principal_invariants(&l_star);
            check(
                (j0 - j1).abs() <= 1e-9 * j0.abs().max(1.0)
                    && (k0 - k1).abs() <= 1e-9 * k0.abs().max(1.0)
                    && (l0 - l1).abs() <= 1e-9 * l0.abs().max(1.0)
                    && (l_star.trace() - f0.det().ln()).abs()
                        <= 1e-10 * f0.det().ln().abs().max(1.0),
                || format!("F0={f0} J={}", chart.j()),
            )?;
        }
    }
    Ok(())
}

fn nonmixed_additive_transfer(rng: &mut ChaCha8Rng, trials: usize) -> PropResult {
    for _ in 0..trials {
        let chart = sample::chart(rng);
        let (v1, v2) = sample::coaxial_pair(rng, -1.0, 1.0);
        let l1 = spd_log(&v1);
        let l2 = spd_log(&v2);
        let sum = strain_nonmixed(&l1.add(&l2), &chart);
        let parts = strain_nonmixed(&l1, &chart).add(&strain_nonmixed(&l2, &chart));
        check(
            sum.sub(&parts).frobenius_norm() <= 1e-12 * parts.frobenius_norm().max(1.0),
            || format!("V1={} V2={}", v1.as_tensor(), v2.as_tensor()),
        )?;
    }
    Ok(())
}

fn classical_dilatation_relation(rng: &mut ChaCha8Rng, trials: usize) -> PropResult {
    for _ in 0..trials {
        let chart = sample::chart(rng);
        let f0 = sample::gradient(rng);
        let f = curvilinear_gradient(&f0, &chart).unwrap();
        let (t, t_hat) = classical_strain(&f, &chart).unwrap();
        let v2 = f0.det().powi(2);
        let via_t = (Tensor3::identity() - *t.as_tensor() * chart.g_inv().as_tensor().scale(2.0))
            .det()
            .recip();
        let via_t_hat = (Tensor3::identity()
            + *chart.g_hat_inv().as_tensor() * t_hat.as_tensor().scale(2.0))
        .det();
        check(
            (via_t - v2).abs() <= 1e-9 * v2.max(1.0) && (via_t_hat - v2).abs() <= 1e-9 * v2.max(1.0),
            || format!("F0={f0}"),
        )?;
    }
    Ok(())
}

fn stress_gradient(rng: &mut ChaCha8Rng, trials: usize) -> PropResult {
    let potentials = [
        EnergyPotential::quadratic_hencky(1.0, 1.0),
        EnergyPotential::new(|j, k, l| j + k + l),
        EnergyPotential::new(|j, k, _| j * k),
    ];
    for _ in 0..trials {
        let mut l = sample::symmetric(rng, 0.8);
        let norm = l.frobenius_norm();
        if norm > 1.0 {
            l = l.scale(1.0 / norm);
        }
        for w in &potentials {
            let err = gradient_check(&l, w).unwrap();
            check(err <= 1e-5, || {
                format!("L={}: gradient error {err:e}", l.as_tensor())
            })?;
        }
    }
    Ok(())
}

fn stress_coaxiality(rng: &mut ChaCha8Rng, trials: usize) -> PropResult {
    let w = EnergyPotential::quadratic_hencky(1.3, 0.8);
    for _ in 0..trials {
        let f = sample::gradient(rng);
        let l = spd_log(&polar_decompose(&f).unwrap().v);
        let tau: Tensor3 = kirchhoff_stress(&l, &w).unwrap().into();
        let lt: Tensor3 = l.into();
        let commutator = (tau * lt - lt * tau).frobenius_norm();
        check(
            commutator
                <= 1e-10 * tau.frobenius_norm().max(1.0) * lt.frobenius_norm().max(1.0),
            || format!("F={f}"),
        )?;
    }
    Ok(())
}

fn stress_objectivity(rng: &mut ChaCha8Rng, trials: usize) -> PropResult {
    let w = EnergyPotential::quadratic_hencky(1.0, 1.0);
    for _ in 0..trials {
        let f = sample::gradient(rng);
        let r = sample::rotation(rng);
        let plain = cauchy_stress(&f, &w).unwrap();
        let reference = cauchy_stress(&(f * *r.as_tensor()), &w).unwrap();
        check(
            close(
                &reference.sigma,
                &plain.sigma,
                1e-10 * plain.sigma.frobenius_norm().max(1.0),
            ),
            || format!("F={f} R={}", r.as_tensor()),
        )?;
    }
    Ok(())
}

fn work_invariance(rng: &mut ChaCha8Rng, trials: usize) -> PropResult {
    for _ in 0..trials {
        let chart = sample::chart(rng);
        let sigma = sample::tensor(rng, 2.0);
        let dx1 = sample::vector(rng, 1.0);
        let dx2 = sample::vector(rng, 1.0);
        let dz = sample::vector(rng, 1.0);
        let dx1_0 = *chart.j_inv() * dx1;
        let dx2_0 = *chart.j_inv() * dx2;
        let dz_0 = *chart.j_inv() * dz;
        let cartesian = dz_0.dot(&(sigma * dx1_0.cross(&dx2_0)));
        for case in [VarianceCase::Alpha, VarianceCase::Beta] {
            let sigma_tilde = transform_stress(&sigma, &chart, case);
            let da = surface_element(&dx1, &dx2, &chart, case);
            let work = dz.dot(&(sigma_tilde * da));
            check((work - cartesian).abs() <= 1e-9 * cartesian.abs().max(1.0), || {
                format!("case {case:?} sigma={sigma} J={}", chart.j())
            })?;
        }
    }
    Ok(())
}

fn work_increment_invariance(rng: &mut ChaCha8Rng, trials: usize) -> PropResult {
    for _ in 0..trials {
        let chart = sample::chart(rng);
        let sigma = sample::tensor(rng, 2.0);
        let df0 = sample::tensor(rng, 1e-3);
        let cartesian = (sigma.transpose() * df0).trace();
        let df = *chart.j() * df0 * *chart.j_inv();
        for case in [VarianceCase::Alpha, VarianceCase::Beta] {
            let sigma_tilde = transform_stress(&sigma, &chart, case);
            let dw = work_increment(&sigma_tilde, &df, &chart, case);
            check((dw - cartesian).abs() <= 1e-9 * cartesian.abs().max(1e-3), || {
                format!("case {case:?} sigma={sigma}")
            })?;
        }
    }
    Ok(())
}

fn mean_stress_invariance(rng: &mut ChaCha8Rng, trials: usize) -> PropResult {
    for _ in 0..trials {
        let chart = sample::chart(rng);
        let sigma = sample::tensor(rng, 2.0);
        let cartesian = sigma.transpose().trace() / 3.0;
        for case in [VarianceCase::Alpha, VarianceCase::Beta] {
            let sigma_tilde = transform_stress(&sigma, &chart, case);
            let mean = mean_stress(&sigma_tilde, &chart, case);
            check((mean - cartesian).abs() <= 1e-10 * cartesian.abs().max(1.0), || {
                format!("case {case:?} sigma={sigma}")
            })?;
        }
    }
    Ok(())
}

const PROPERTIES: &[Property] = &[
    ("trace-cyclicity", trace_cyclicity),
    ("eigen-reconstruction", eigen_reconstruction),
    ("spectral-similarity", spectral_similarity),
    ("trace-log-det", trace_log_det),
    ("log-exp-round-trip", log_exp_round_trip),
    ("polar-reconstruction", polar_reconstruction),
    ("adjoint-identity", adjoint_identity),
    ("cross-product-transform", cross_product_transform),
    ("log-additivity", log_additivity),
    ("isochoric-volumetric-split", isochoric_volumetric_split),
    ("deviator-trace", deviator_trace),
    ("rotation-elimination", rotation_elimination),
    ("frame-covariance", frame_covariance),
    ("infinitesimal-limit", infinitesimal_limit),
    ("seth-hill-direct", seth_hill_direct),
    ("bazant-direct", bazant_direct),
    ("superposition", superposition),
    ("tension-compression-flags", tension_compression_flags),
    ("deviator-postulates", deviator_postulates),
    ("almansi-deviator-equivalence", almansi_deviator_equivalence),
    ("invariant-power-law", invariant_power_law),
    ("cubic-roots-match-spectrum", cubic_roots_match_spectrum),
    ("mixed-invariant-preservation", mixed_invariant_preservation),
    ("nonmixed-additive-transfer", nonmixed_additive_transfer),
    ("classical-dilatation-relation", classical_dilatation_relation),
    ("stress-gradient", stress_gradient),
    ("stress-coaxiality", stress_coaxiality),
    ("stress-objectivity", stress_objectivity),
    ("work-invariance", work_invariance),
    ("work-increment-invariance", work_increment_invariance),
    ("mean-stress-invariance", mean_stress_invariance),
];

/// Runs the whole property suite. Deterministic for a given seed: every
/// property gets its own stream derived from the seed and its position.
pub fn run_check(seed: u64, trials: usize) -> CheckReport {
    let mut text = format!("self-check seed={seed} trials={trials}\n");
    let mut failures = 0;
    for (index, (name, property)) in PROPERTIES.iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(
            seed.wrapping_add((index as u64).wrapping_mul(0x9E3779B97F4A7C15)),
        );
        match property(&mut rng, trials) {
            Ok(()) => {
                text.push_str(&format!("PASS {name}\n"));
            }
            Err(instance) => {
                failures += 1;
                text.push_str(&format!("FAIL {name}: {instance}\n"));
            }
        }
    }
    let total = PROPERTIES.len();
    let passed = failures == 0;
    if passed {
        text.push_str(&format!("result: PASS ({total}/{total} properties)\n"));
    } else {
        text.push_str(&format!(
            "result: FAIL ({}/{total} properties passed)\n",
            total - failures
        ));
    }
    CheckReport { text, passed }
}
