//! Small rotation and vector helpers shared across the crate.

use nalgebra::{Matrix3, UnitQuaternion, Vector3};

/// Skew-symmetric cross-product matrix: `skew(a) * b == a.cross(&b)`.
pub fn skew(v: &Vector3<f64>) -> Matrix3<f64> {
    Matrix3::new(0.0, -v.z, v.y, v.z, 0.0, -v.x, -v.y, v.x, 0.0)
}

/// Rotation vector (axis * angle) of a unit quaternion.
pub fn rotvec(q: &UnitQuaternion<f64>) -> Vector3<f64> {
    q.scaled_axis()
}

/// Unit quaternion from a rotation vector.
pub fn quat_from_rotvec(v: &Vector3<f64>) -> UnitQuaternion<f64> {
    UnitQuaternion::from_scaled_axis(*v)
}

/// Orientation error `log(target * current^-1)` expressed in the world frame.
///
/// This is the angular velocity direction that rotates `current` onto
/// `target` in unit time.
pub fn orientation_error(
    target: &UnitQuaternion<f64>,
    current: &UnitQuaternion<f64>,
) -> Vector3<f64> {
    rotvec(&(target * current.inverse()))
}

/// Advance a world-frame orientation by `omega * dt` on the quaternion
/// manifold and renormalize.
pub fn integrate_quat(
    q: &UnitQuaternion<f64>,
    omega: &Vector3<f64>,
    dt: f64,
) -> UnitQuaternion<f64> {
    quat_from_rotvec(&(omega * dt)) * q
}

/// Nearest-rank percentile of a sample set (p in [0, 100]).
///
/// Deterministic and exact for the report tables; returns 0 for empty input.
pub fn percentile(samples: &[f64], p: f64) -> f64 {
    if samples.is_empty() {
        return 0.0;
    }
    let mut sorted = samples.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("non-finite sample"));
    let rank = ((p / 100.0) * sorted.len() as f64).ceil() as usize;
    sorted[rank.clamp(1, sorted.len()) - 1]
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn skew_matches_cross_product() {
        let a = Vector3::new(1.0, -2.0, 3.0);
        let b = Vector3::new(0.5, 4.0, -1.5);
        assert_relative_eq!(skew(&a) * b, a.cross(&b), epsilon = 1e-15);
    }

    #[test]
    fn rotvec_roundtrip() {
        let v = Vector3::new(0.3, -0.2, 0.9);
        assert_relative_eq!(rotvec(&quat_from_rotvec(&v)), v, epsilon = 1e-12);
    }

    #[test]
    fn percentile_constant_series() {
        let s = vec![2.0; 7];
        assert_eq!(percentile(&s, 0.0), 2.0);
        assert_eq!(percentile(&s, 50.0), 2.0);
        assert_eq!(percentile(&s, 100.0), 2.0);
    }
}
