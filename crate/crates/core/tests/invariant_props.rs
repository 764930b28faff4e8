//! Property suite for the deviator and the shape invariants: scaling
//! invariance, the coaxial power law, rotation invariance, and agreement
//! between the two deviator routes.

mod common;

use common::{assert_close, rng};
use logstrain::{
    classical_strain, classify, deviator_from_almansi, eulerian_strain,
    principal_deviatoric_strains, sample, strain_deviator, strain_invariants, sym_eigen,
    CoordinateChart, DeformationClass, SpdTensor3, StrainFamily, Tensor3,
};
use rand::Rng;

const TRIALS: usize = 200;

#[test]
fn shape_invariants_ignore_scaling() {
    let mut rng = rng(0x4101);
    for _ in 0..TRIALS {
        let f = sample::gradient(&mut rng);
        let lambda: f64 = rng.gen_range(0.2..4.0);
        let base = strain_invariants(&f).unwrap();
        let scaled = strain_invariants(&f.scale(lambda)).unwrap();
        assert!((base.y - scaled.y).abs() <= 1e-10 * base.y.max(1.0));
        assert!((base.z - scaled.z).abs() <= 1e-10 * base.z.abs().max(1.0));
        match (base.zeta, scaled.zeta) {
            (Some(a), Some(b)) => assert!((a - b).abs() <= 1e-10),
            (a, b) => panic!("zeta presence diverged: {a:?} vs {b:?}"),
        }
    }
}

#[test]
fn coaxial_powers_scale_y_and_z_polynomially() {
    let mut rng = rng(0x4102);
    for _ in 0..TRIALS {
        let v = sample::spd(&mut rng, -0.4, 0.4);
        let n = rng.gen_range(2..5);

        let mut power = Tensor3::identity();
        for _ in 0..n {
            power = power * *v.as_tensor();
        }
        let base = strain_invariants(v.as_tensor()).unwrap();
        let repeated = strain_invariants(&power).unwrap();

        let nf = n as f64;
        assert!((repeated.y - nf * nf * base.y).abs() <= 1e-9 * (nf * nf * base.y).max(1.0));
        assert!(
            (repeated.z - nf * nf * nf * base.z).abs()
                <= 1e-9 * (nf * nf * nf * base.z.abs()).max(1.0)
        );
        assert!((repeated.amount - nf * base.amount).abs() <= 1e-9 * (nf * base.amount).max(1.0));
        if let (Some(a), Some(b)) = (base.zeta, repeated.zeta) {
            assert!((a - b).abs() <= 1e-9);
        }
    }
}

#[test]
fn invariants_are_rotation_invariant() {
    let mut rng = rng(0x4103);
    for _ in 0..TRIALS {
        let f = sample::gradient(&mut rng);
        let r1 = sample::rotation(&mut rng);
        let r2 = sample::rotation(&mut rng);
        let rotated = *r1.as_tensor() * f * *r2.as_tensor();

        let a = strain_invariants(&f).unwrap();
        let b = strain_invariants(&rotated).unwrap();
        assert!((a.v - b.v).abs() <= 1e-10 * a.v.max(1.0));
        assert!((a.j - b.j).abs() <= 1e-10 * a.j.abs().max(1.0));
        assert!((a.y - b.y).abs() <= 1e-10 * a.y.max(1.0));
        assert!((a.z - b.z).abs() <= 1e-10 * a.z.abs().max(1.0));
        if let (Some(za), Some(zb)) = (a.zeta, b.zeta) {
            assert!((za - zb).abs() <= 1e-10);
        }
    }
}

#[test]
fn zeta_stays_in_the_realizable_interval() {
    let mut rng = rng(0x4104);
    for _ in 0..TRIALS {
        let f = sample::gradient(&mut rng);
        let inv = strain_invariants(&f).unwrap();
        if let Some(zeta) = inv.zeta {
            assert!((-1e-12..=1.0 / 6.0 + 1e-12).contains(&zeta), "zeta = {zeta}");
        }
        assert!((inv.amount * inv.amount - inv.y).abs() <= 1e-12 * inv.y.max(1.0));
        assert!((inv.j - inv.v.ln()).abs() <= 1e-10 * inv.j.abs().max(1.0));
    }
}

#[test]
fn deviator_matches_strain_of_normalized_gradient() {
    let mut rng = rng(0x4105);
    let families = [
        StrainFamily::hencky(),
        StrainFamily::almansi(),
        StrainFamily::green(),
        StrainFamily::bazant(),
    ];
    for _ in 0..TRIALS {
        let f = sample::gradient(&mut rng);
        let family = &families[rng.gen_range(0..families.len())];
        let d = strain_deviator(&f, family).unwrap();
        let normalized = f.scale(f.det().cbrt().recip());
        let e1 = eulerian_strain(&normalized, family).unwrap().strain;
        assert_close(
            "D = E(v^{-1/3} F)",
            d.as_tensor(),
            e1.as_tensor(),
            1e-9 * e1.frobenius_norm().max(1.0),
        );
    }
}

#[test]
fn almansi_deviator_route_agrees_with_general_formula() {
    let mut rng = rng(0x4106);
    let cartesian = CoordinateChart::cartesian();
    let family = StrainFamily::almansi();
    for _ in 0..TRIALS {
        let f = sample::gradient(&mut rng);
        let (t, _) = classical_strain(&f, &cartesian).unwrap();
        let via_t = deviator_from_almansi(&t).unwrap();
        let direct = strain_deviator(&f, &family).unwrap();
        let diff = via_t.sub(&direct).frobenius_norm();
        assert!(
            diff <= 1e-9 * direct.frobenius_norm().max(1e-12),
            "difference {diff:.3e}"
        );
    }
}

#[test]
fn cubic_roots_match_deviatoric_eigenvalues() {
    let mut rng = rng(0x4107);
    for _ in 0..TRIALS {
        let f = sample::gradient(&mut rng);
        let inv = strain_invariants(&f).unwrap();
        let roots = principal_deviatoric_strains(inv.y, inv.z).unwrap();
        assert!(roots.iter().sum::<f64>().abs() <= 1e-10);

        let polar = logstrain::polar_decompose(&f).unwrap();
        let dev = logstrain::spd_log(&polar.v).deviator();
        let eigen = sym_eigen(&dev).eigenvalues;
        for (root, lambda) in roots.iter().zip(eigen) {
            assert!(
                (root - lambda).abs() <= 1e-8 * lambda.abs().max(1.0),
                "{root} vs {lambda}"
            );
        }
    }
}

#[test]
fn classification_tracks_constructed_characters() {
    let mut rng = rng(0x4108);
    for _ in 0..50 {
        // pure dilatation
        let s: f64 = rng.gen_range(0.3..3.0);
        let dil = strain_invariants(&Tensor3::scaled_identity(s)).unwrap();
        assert_eq!(classify(&dil).class, DeformationClass::PureDilatation);
        assert!(dil.zeta.is_none());

        // shear-like: rotate a simple shear
        let gamma: f64 = rng.gen_range(0.1..2.0);
        let shear = Tensor3::from_rows([[1.0, gamma, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]);
        let q = sample::rotation(&mut rng);
        let sheared = *q.as_tensor() * shear;
        let inv = strain_invariants(&sheared).unwrap();
        assert_eq!(classify(&inv).class, DeformationClass::SimpleShearLike);

        // uniaxial-like: scaled volume-preserving uniaxial stretch
        let lambda: f64 = rng.gen_range(1.1..3.0);
        let scale: f64 = rng.gen_range(0.5..2.0);
        let uni = Tensor3::diag(lambda, lambda.powf(-0.5), lambda.powf(-0.5)).scale(scale);
        let inv = strain_invariants(&uni).unwrap();
        assert_eq!(classify(&inv).class, DeformationClass::UniaxialLike);
    }
}

#[test]
fn deviator_construction_survives_strong_compression() {
    // almansi strains approach the -inf side of the domain under compression;
    // the deviator path must stay inside it
    let f = Tensor3::diag(0.1, 0.2, 0.15);
    let d = strain_deviator(&f, &StrainFamily::almansi()).unwrap();
    assert!(d.as_tensor().is_finite());

    let v = SpdTensor3::diag(0.05, 20.0, 1.0).unwrap();
    let d = strain_deviator(v.as_tensor(), &StrainFamily::green()).unwrap();
    assert!(d.as_tensor().is_finite());
}
