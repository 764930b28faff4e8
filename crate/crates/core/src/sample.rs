//! Seeded random instances for property suites: rotations uniform on
//! SO(3), stretches with controlled log-eigenvalue ranges, coaxial pairs,
//! well-conditioned gradients, and charts. Everything is a pure function
//! of the supplied generator, so a fixed seed reproduces the exact
//! instance stream.

use rand::Rng;

use crate::curvilinear::CoordinateChart;
use crate::spectral::Spectrum3;
use crate::tensor::{Rotation3, SpdTensor3, SymTensor3, Tensor3, Vec3};

/// Matrix with entries uniform in `[-scale, scale]`.
pub fn tensor(rng: &mut impl Rng, scale: f64) -> Tensor3 {
    let mut m = [[0.0; 3]; 3];
    for row in m.iter_mut() {
        for entry in row.iter_mut() {
            *entry = rng.gen_range(-scale..scale);
        }
    }
    Tensor3::from_rows(m)
}

/// Symmetric matrix with entries uniform in `[-scale, scale]`.
pub fn symmetric(rng: &mut impl Rng, scale: f64) -> SymTensor3 {
    SymTensor3::symmetrize(&tensor(rng, scale))
}

/// Vector with entries uniform in `[-scale, scale]`.
pub fn vector(rng: &mut impl Rng, scale: f64) -> Vec3 {
    Vec3::new(
        rng.gen_range(-scale..scale),
        rng.gen_range(-scale..scale),
        rng.gen_range(-scale..scale),
    )
}

/// Rotation uniform on SO(3), built from a uniform unit quaternion.
pub fn rotation(rng: &mut impl Rng) -> Rotation3 {
    let u1: f64 = rng.gen();
    let u2: f64 = rng.gen();
    let u3: f64 = rng.gen();
    let tau = 2.0 * std::f64::consts::PI;
    let (a, b) = ((1.0 - u1).sqrt(), u1.sqrt());
    let (x, y) = ((tau * u2).sin() * a, (tau * u2).cos() * a);
    let (z, w) = ((tau * u3).sin() * b, (tau * u3).cos() * b);

    let m = Tensor3::from_rows([
        [
            1.0 - 2.0 * (y * y + z * z),
            2.0 * (x * y - z * w),
            2.0 * (x * z + y * w),
        ],
        [
            2.0 * (x * y + z * w),
            1.0 - 2.0 * (x * x + z * z),
            2.0 * (y * z - x * w),
        ],
        [
            2.0 * (x * z - y * w),
            2.0 * (y * z + x * w),
            1.0 - 2.0 * (x * x + y * y),
        ],
    ]);
    Rotation3::new(m).expect("unit quaternion yields a rotation")
}

fn from_eigen(rotation: &Rotation3, eigenvalues: [f64; 3]) -> SpdTensor3 {
    let spectrum = Spectrum3 {
        eigenvalues,
        eigenvectors: [
            rotation.as_tensor().column(0),
            rotation.as_tensor().column(1),
            rotation.as_tensor().column(2),
        ],
    };
    SpdTensor3::new(spectrum.reconstruct()).expect("positive eigenvalues")
}

/// SPD tensor whose log-eigenvalues are uniform in `[lo, hi]`.
pub fn spd(rng: &mut impl Rng, lo: f64, hi: f64) -> SpdTensor3 {
    let q = rotation(rng);
    let eig = [
        rng.gen_range(lo..hi).exp(),
        rng.gen_range(lo..hi).exp(),
        rng.gen_range(lo..hi).exp(),
    ];
    from_eigen(&q, eig)
}

/// Two SPD tensors sharing an eigenbasis, hence commuting.
pub fn coaxial_pair(rng: &mut impl Rng, lo: f64, hi: f64) -> (SpdTensor3, SpdTensor3) {
    let q = rotation(rng);
    let mut draw = || {
        [
            rng.gen_range(lo..hi).exp(),
            rng.gen_range(lo..hi).exp(),
            rng.gen_range(lo..hi).exp(),
        ]
    };
    let first = draw();
    let second = draw();
    (from_eigen(&q, first), from_eigen(&q, second))
}

/// Orientation-preserving, well-conditioned deformation gradient `V·R`
/// with log-stretches uniform in `[-1, 1]`.
pub fn gradient(rng: &mut impl Rng) -> Tensor3 {
    let v = spd(rng, -1.0, 1.0);
    let r = rotation(rng);
    *v.as_tensor() * *r.as_tensor()
}

/// Invertible matrix with positive determinant and bounded conditioning.
pub fn invertible(rng: &mut impl Rng) -> Tensor3 {
    let v = spd(rng, -0.7, 0.7);
    let r = rotation(rng);
    *v.as_tensor() * *r.as_tensor()
}

/// Random chart: both Jacobians orientation-preserving and well away from
/// singular.
pub fn chart(rng: &mut impl Rng) -> CoordinateChart {
    CoordinateChart::from_jacobians(invertible(rng), invertible(rng))
        .expect("generated jacobians are nonsingular")
}
