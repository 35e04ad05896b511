//! Explicit Gaussian scene representation.
//!
//! A scene is a soup of anisotropic 3D Gaussians: position, rotation
//! (unit quaternion), per-axis scale (kept in log space so optimizer
//! updates cannot produce non-positive scales), an opacity logit, and
//! per-Gaussian spherical-harmonic color coefficients.

mod camera;
mod sh;
pub mod text_format;
mod trajectory;

pub use camera::Camera;
pub use sh::{eval_sh, sh_basis, sh_coeff_count, SH_C0, SH_C1};
pub use trajectory::{interpolate_trajectory, slerp, Trajectory};

use crate::error::{GsdError, Result};
use nalgebra::{Matrix3, Vector3};

pub const QUAT_UNIT_TOL: f64 = 1e-6;

/// The learnable scene: one entry per Gaussian across all fields.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussianCloud {
    pub positions: Vec<Vector3<f64>>,
    /// Unit quaternions stored as (w, x, y, z).
    pub rotations: Vec<[f64; 4]>,
    /// Natural log of the per-axis scale; exponentiated on read.
    pub log_scales: Vec<Vector3<f64>>,
    pub opacity_logits: Vec<f64>,
    /// Flat SH coefficients, `sh_coeff_count(degree)` consecutive entries
    /// per Gaussian.
    pub sh: Vec<Vector3<f64>>,
    /// SH degree D in {1, 2}; D^2 coefficients per Gaussian (bands 0..D-1).
    pub sh_degree: usize,
}

impl GaussianCloud {
    pub fn empty(sh_degree: usize) -> Result<GaussianCloud> {
        if !(sh_degree == 1 || sh_degree == 2) {
            return Err(GsdError::validation(format!(
                "sh degree must be 1 or 2, got {sh_degree}"
            )));
        }
        Ok(GaussianCloud {
            positions: Vec::new(),
            rotations: Vec::new(),
            log_scales: Vec::new(),
            opacity_logits: Vec::new(),
            sh: Vec::new(),
            sh_degree,
        })
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn n_sh(&self) -> usize {
        sh_coeff_count(self.sh_degree)
    }

    pub fn sh_of(&self, i: usize) -> &[Vector3<f64>] {
        let n = self.n_sh();
        &self.sh[i * n..(i + 1) * n]
    }

    pub fn sh_of_mut(&mut self, i: usize) -> &mut [Vector3<f64>] {
        let n = self.n_sh();
        &mut self.sh[i * n..(i + 1) * n]
    }

    /// Linear (exponentiated) scales of Gaussian `i`.
    pub fn scale_of(&self, i: usize) -> Vector3<f64> {
        self.log_scales[i].map(f64::exp)
    }

    pub fn push(
        &mut self,
        position: Vector3<f64>,
        rotation: [f64; 4],
        log_scale: Vector3<f64>,
        opacity_logit: f64,
        sh: &[Vector3<f64>],
    ) -> Result<()> {
        if sh.len() != self.n_sh() {
            return Err(GsdError::validation(format!(
                "expected {} SH coefficients, got {}",
                self.n_sh(),
                sh.len()
            )));
        }
        self.positions.push(position);
        self.rotations.push(rotation);
        self.log_scales.push(log_scale);
        self.opacity_logits.push(opacity_logit);
        self.sh.extend_from_slice(sh);
        Ok(())
    }

    /// Remove Gaussian `i` by swap-remove on every field (order changes).
    pub fn swap_remove(&mut self, i: usize) {
        let n = self.n_sh();
        let last = self.len() - 1;
        self.positions.swap_remove(i);
        self.rotations.swap_remove(i);
        self.log_scales.swap_remove(i);
        self.opacity_logits.swap_remove(i);
        if i != last {
            for k in 0..n {
                self.sh[i * n + k] = self.sh[last * n + k];
            }
        }
        self.sh.truncate(last * n);
    }

    /// Check every structural invariant; returns the first violation.
    pub fn validate(&self) -> Result<()> {
        let n = self.len();
        if self.rotations.len() != n
            || self.log_scales.len() != n
            || self.opacity_logits.len() != n
            || self.sh.len() != n * self.n_sh()
        {
            return Err(GsdError::validation("cloud field lengths disagree"));
        }
        for (i, q) in self.rotations.iter().enumerate() {
            let norm = quat_norm(q);
            if (norm - 1.0).abs() > QUAT_UNIT_TOL {
                return Err(GsdError::validation(format!(
                    "rotation {i} has norm {norm}, beyond unit tolerance"
                )));
            }
        }
        for (i, s) in self.log_scales.iter().enumerate() {
            if !s.iter().all(|v| v.is_finite()) {
                return Err(GsdError::validation(format!("non-finite log scale at {i}")));
            }
        }
        Ok(())
    }

    pub fn normalize_rotations(&mut self) {
        for q in &mut self.rotations {
            let n = quat_norm(q);
            if n > 0.0 {
                for v in q.iter_mut() {
                    *v /= n;
                }
            }
        }
    }
}

#[inline]
pub fn quat_norm(q: &[f64; 4]) -> f64 {
    (q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]).sqrt()
}

/// Rotation matrix of a quaternion (w, x, y, z); the input is normalized
/// first, so slightly off-unit quaternions map to proper rotations.
pub fn rotation_from_quat(q: &[f64; 4]) -> Matrix3<f64> {
    let n = quat_norm(q);
    let (w, x, y, z) = (q[0] / n, q[1] / n, q[2] / n, q[3] / n);
    Matrix3::new(
        1.0 - 2.0 * (y * y + z * z),
        2.0 * (x * y - w * z),
        2.0 * (x * z + w * y),
        2.0 * (x * y + w * z),
        1.0 - 2.0 * (x * x + z * z),
        2.0 * (y * z - w * x),
        2.0 * (x * z - w * y),
        2.0 * (y * z + w * x),
        1.0 - 2.0 * (x * x + y * y),
    )
}

/// Covariance of one Gaussian from its rotation and per-axis scale:
/// the rotated squared-scale diagonal, symmetric positive definite by
/// construction.
pub fn covariance_from_rs(rotation: &[f64; 4], scale: &Vector3<f64>) -> Result<Matrix3<f64>> {
    let norm = quat_norm(rotation);
    if (norm - 1.0).abs() > QUAT_UNIT_TOL {
        return Err(GsdError::validation(format!(
            "quaternion norm {norm} beyond unit tolerance {QUAT_UNIT_TOL}"
        )));
    }
    if !scale.iter().all(|s| *s > 0.0) {
        return Err(GsdError::validation(format!(
            "scale must be strictly positive, got {:?}",
            scale.as_slice()
        )));
    }
    let r = rotation_from_quat(rotation);
    let d = Matrix3::from_diagonal(&scale.component_mul(scale));
    Ok(r * d * r.transpose())
}

/// Unnormalized-to-normalized 3D Gaussian density at point `p`.
pub fn gaussian_density(
    p: &Vector3<f64>,
    mu: &Vector3<f64>,
    sigma: &Matrix3<f64>,
) -> Result<f64> {
    let eig = sigma.symmetric_eigenvalues();
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for v in eig.iter() {
        lo = lo.min(*v);
        hi = hi.max(*v);
    }
    let cond = if lo > 0.0 { hi / lo } else { f64::INFINITY };
    if !(lo > 0.0) || cond >= 1e12 {
        return Err(GsdError::SingularCovariance {
            mu: [mu.x, mu.y, mu.z],
            cond,
        });
    }
    let chol = sigma.cholesky().ok_or(GsdError::SingularCovariance {
        mu: [mu.x, mu.y, mu.z],
        cond,
    })?;
    let det = chol.determinant();
    let d = p - mu;
    let quad = d.dot(&chol.solve(&d));
    let norm = (2.0 * std::f64::consts::PI).powf(-1.5) / det.sqrt();
    Ok(norm * (-0.5 * quad).exp())
}
