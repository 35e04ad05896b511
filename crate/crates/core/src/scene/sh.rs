//! Real spherical-harmonics color evaluation.
//!
//! Colors are stored as SH coefficients per band; evaluation adds the
//! conventional 0.5 offset to the band-0 term and clamps at zero.

use crate::error::{GsdError, Result};
use nalgebra::Vector3;

pub const SH_C0: f64 = 0.282_094_791_773_878_14;
pub const SH_C1: f64 = 0.488_602_511_902_919_9;

pub fn sh_coeff_count(degree: usize) -> usize {
    degree * degree
}

/// Basis values for bands 0..degree-1 at a unit direction, in coefficient
/// order (band 0, then band 1 as -y, +z, -x).
pub fn sh_basis(dir: &Vector3<f64>, degree: usize) -> [f64; 4] {
    let mut b = [0.0; 4];
    b[0] = SH_C0;
    if degree >= 2 {
        b[1] = -SH_C1 * dir.y;
        b[2] = SH_C1 * dir.z;
        b[3] = -SH_C1 * dir.x;
    }
    b
}

/// View-dependent RGB from SH coefficients: `0.5 + sum_i c_i Y_i(dir)`,
/// clamped below at zero.
pub fn eval_sh(coeffs: &[Vector3<f64>], dir: &Vector3<f64>, degree: usize) -> Result<Vector3<f64>> {
    if !(degree == 1 || degree == 2) {
        return Err(GsdError::validation(format!(
            "sh degree must be 1 or 2, got {degree}"
        )));
    }
    if coeffs.len() != sh_coeff_count(degree) {
        return Err(GsdError::validation(format!(
            "expected {} SH coefficients, got {}",
            sh_coeff_count(degree),
            coeffs.len()
        )));
    }
    if (dir.norm() - 1.0).abs() > 1e-6 {
        return Err(GsdError::validation("view direction must be unit length"));
    }
    let basis = sh_basis(dir, degree);
    let mut rgb = Vector3::repeat(0.5);
    for (c, b) in coeffs.iter().zip(basis.iter().take(coeffs.len())) {
        rgb += c * *b;
    }
    Ok(rgb.map(|v| v.max(0.0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn band0_only_uses_constant_basis() {
        // Oracle: the band-0 real SH basis value is 1/(2 sqrt(pi)).
        let y00 = 0.5 / std::f64::consts::PI.sqrt();
        assert_abs_diff_eq!(SH_C0, y00, epsilon = 1e-15);
        let c = [Vector3::new(1.0, 1.0, 1.0)];
        let dir = Vector3::new(0.0, 0.0, 1.0);
        let rgb = eval_sh(&c, &dir, 1).unwrap();
        for ch in 0..3 {
            assert_abs_diff_eq!(rgb[ch], y00 + 0.5, epsilon = 1e-15);
        }
    }

    #[test]
    fn zero_coeffs_give_offset_gray() {
        let c = vec![Vector3::zeros(); 4];
        let dir = Vector3::new(0.6, 0.0, 0.8);
        assert_eq!(eval_sh(&c, &dir, 2).unwrap(), Vector3::repeat(0.5));
    }

    #[test]
    fn band1_is_odd_under_direction_flip() {
        let mut c = vec![Vector3::zeros(); 4];
        c[1] = Vector3::new(0.1, 0.2, 0.3);
        c[2] = Vector3::new(-0.2, 0.1, 0.0);
        c[3] = Vector3::new(0.05, -0.1, 0.2);
        let up = Vector3::new(0.0, 0.0, 1.0);
        let down = -up;
        let a = eval_sh(&c, &up, 2).unwrap();
        let b = eval_sh(&c, &down, 2).unwrap();
        for ch in 0..3 {
            // The band-1 contribution negates, so (a - 0.5) = -(b - 0.5).
            assert_abs_diff_eq!(a[ch] - 0.5, -(b[ch] - 0.5), epsilon = 1e-15);
        }
    }

    #[test]
    fn linear_in_coeffs_before_clamp() {
        let c = vec![
            Vector3::new(0.3, 0.1, 0.2),
            Vector3::new(0.1, 0.0, -0.1),
            Vector3::new(0.0, 0.1, 0.0),
            Vector3::new(-0.1, 0.0, 0.1),
        ];
        let scaled: Vec<_> = c.iter().map(|v| v * 0.5).collect();
        let dir = Vector3::new(1.0, 2.0, -1.0).normalize();
        let a = eval_sh(&c, &dir, 2).unwrap();
        let b = eval_sh(&scaled, &dir, 2).unwrap();
        for ch in 0..3 {
            assert_abs_diff_eq!(b[ch] - 0.5, 0.5 * (a[ch] - 0.5), epsilon = 1e-15);
        }
    }

    #[test]
    fn length_mismatch_rejected() {
        let c = vec![Vector3::zeros(); 3];
        let dir = Vector3::new(0.0, 0.0, 1.0);
        assert!(eval_sh(&c, &dir, 2).is_err());
    }
}
