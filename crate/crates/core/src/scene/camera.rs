//! Pinhole camera: intrinsics plus a world-to-camera rigid transform.

use crate::error::{GsdError, Result};
use nalgebra::{Matrix3, Vector3};

#[derive(Debug, Clone, PartialEq)]
pub struct Camera {
    /// Upper-triangular intrinsic matrix (pixels).
    pub intrinsics: Matrix3<f64>,
    /// World-to-camera rotation.
    pub rotation: Matrix3<f64>,
    /// Translation in the camera frame: `p_cam = R p_world + T`.
    pub translation: Vector3<f64>,
    pub width: usize,
    pub height: usize,
}

impl Camera {
    pub fn new(
        intrinsics: Matrix3<f64>,
        rotation: Matrix3<f64>,
        translation: Vector3<f64>,
        width: usize,
        height: usize,
    ) -> Result<Camera> {
        if width == 0 || height == 0 {
            return Err(GsdError::validation("camera resolution must be positive"));
        }
        let ortho = rotation.transpose() * rotation - Matrix3::identity();
        if ortho.iter().any(|v| v.abs() > 1e-9) {
            return Err(GsdError::validation("rotation is not orthonormal"));
        }
        if (rotation.determinant() - 1.0).abs() > 1e-9 {
            return Err(GsdError::validation("rotation determinant is not +1"));
        }
        let k = &intrinsics;
        if k[(1, 0)] != 0.0 || k[(2, 0)] != 0.0 || k[(2, 1)] != 0.0 {
            return Err(GsdError::validation("intrinsics must be upper triangular"));
        }
        if k[(0, 0)] <= 0.0 || k[(1, 1)] <= 0.0 {
            return Err(GsdError::validation("focal lengths must be positive"));
        }
        Ok(Camera {
            intrinsics,
            rotation,
            translation,
            width,
            height,
        })
    }

    /// Simple pinhole intrinsics with zero skew.
    pub fn intrinsics_from(fx: f64, fy: f64, cx: f64, cy: f64) -> Matrix3<f64> {
        Matrix3::new(fx, 0.0, cx, 0.0, fy, cy, 0.0, 0.0, 1.0)
    }

    pub fn fx(&self) -> f64 {
        self.intrinsics[(0, 0)]
    }

    pub fn fy(&self) -> f64 {
        self.intrinsics[(1, 1)]
    }

    pub fn cx(&self) -> f64 {
        self.intrinsics[(0, 2)]
    }

    pub fn cy(&self) -> f64 {
        self.intrinsics[(1, 2)]
    }

    /// Camera center in world coordinates.
    pub fn center(&self) -> Vector3<f64> {
        -(self.rotation.transpose() * self.translation)
    }

    pub fn to_camera(&self, p_world: &Vector3<f64>) -> Vector3<f64> {
        self.rotation * p_world + self.translation
    }

    /// Camera at `eye` looking toward `target` with an approximate `up`.
    pub fn look_at(
        intrinsics: Matrix3<f64>,
        eye: Vector3<f64>,
        target: Vector3<f64>,
        up: Vector3<f64>,
        width: usize,
        height: usize,
    ) -> Result<Camera> {
        let fwd = (target - eye).normalize();
        let right = fwd.cross(&up).normalize();
        let down = fwd.cross(&right);
        // Rows of R are the camera axes expressed in world coordinates:
        // x right, y down, z forward.
        let rotation = Matrix3::from_rows(&[
            right.transpose(),
            down.transpose(),
            fwd.transpose(),
        ]);
        let translation = -(rotation * eye);
        Camera::new(intrinsics, rotation, translation, width, height)
    }
}
