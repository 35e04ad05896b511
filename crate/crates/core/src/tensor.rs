//! Dense row-major containers for images and frame-batch tensors.
//!
//! `Image` is an H x W x C grid (C = 3 for RGB, C = 1 for depth or alpha).
//! `Tensor` is a flat buffer with an explicit shape, used for diffusion
//! states where only elementwise arithmetic and per-frame slicing matter.

use crate::error::{GsdError, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct Image {
    pub h: usize,
    pub w: usize,
    pub c: usize,
    pub data: Vec<f64>,
}

impl Image {
    pub fn zeros(h: usize, w: usize, c: usize) -> Image {
        Image {
            h,
            w,
            c,
            data: vec![0.0; h * w * c],
        }
    }

    pub fn from_data(h: usize, w: usize, c: usize, data: Vec<f64>) -> Result<Image> {
        if data.len() != h * w * c {
            return Err(GsdError::validation(format!(
                "image data length {} does not match {}x{}x{}",
                data.len(),
                h,
                w,
                c
            )));
        }
        Ok(Image { h, w, c, data })
    }

    #[inline]
    pub fn idx(&self, y: usize, x: usize, ch: usize) -> usize {
        (y * self.w + x) * self.c + ch
    }

    #[inline]
    pub fn get(&self, y: usize, x: usize, ch: usize) -> f64 {
        self.data[self.idx(y, x, ch)]
    }

    #[inline]
    pub fn set(&mut self, y: usize, x: usize, ch: usize, v: f64) {
        let i = self.idx(y, x, ch);
        self.data[i] = v;
    }

    pub fn same_shape(&self, other: &Image) -> bool {
        self.h == other.h && self.w == other.w && self.c == other.c
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }

    /// Mean absolute difference over all entries.
    pub fn mean_abs_diff(&self, other: &Image) -> Result<f64> {
        if !self.same_shape(other) {
            return Err(GsdError::validation("image shape mismatch".to_string()));
        }
        let n = self.data.len() as f64;
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).abs())
            .sum::<f64>()
            / n)
    }

    /// Rec.601 luma of an RGB image.
    pub fn luma(&self) -> Result<Image> {
        if self.c != 3 {
            return Err(GsdError::validation("luma expects a 3-channel image"));
        }
        let mut out = Image::zeros(self.h, self.w, 1);
        for p in 0..self.h * self.w {
            let r = self.data[p * 3];
            let g = self.data[p * 3 + 1];
            let b = self.data[p * 3 + 2];
            out.data[p] = 0.299 * r + 0.587 * g + 0.114 * b;
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Tensor {
    pub shape: Vec<usize>,
    pub data: Vec<f64>,
}

impl Tensor {
    pub fn zeros(shape: &[usize]) -> Tensor {
        Tensor {
            shape: shape.to_vec(),
            data: vec![0.0; shape.iter().product()],
        }
    }

    pub fn from_image(img: &Image) -> Tensor {
        Tensor {
            shape: vec![1, img.h, img.w, img.c],
            data: img.data.clone(),
        }
    }

    /// Stack per-frame RGB images into an [n, h, w, 3] tensor.
    pub fn from_frames(frames: &[&Image]) -> Result<Tensor> {
        let first = frames
            .first()
            .ok_or_else(|| GsdError::validation("empty frame list"))?;
        let mut data = Vec::with_capacity(frames.len() * first.data.len());
        for f in frames {
            if !f.same_shape(first) {
                return Err(GsdError::validation("frame shape mismatch"));
            }
            data.extend_from_slice(&f.data);
        }
        Ok(Tensor {
            shape: vec![frames.len(), first.h, first.w, first.c],
            data,
        })
    }

    pub fn n_frames(&self) -> usize {
        self.shape[0]
    }

    pub fn frame_len(&self) -> usize {
        self.shape[1..].iter().product()
    }

    pub fn frame(&self, i: usize) -> &[f64] {
        let len = self.frame_len();
        &self.data[i * len..(i + 1) * len]
    }

    pub fn frame_mut(&mut self, i: usize) -> &mut [f64] {
        let len = self.frame_len();
        &mut self.data[i * len..(i + 1) * len]
    }

    pub fn frame_image(&self, i: usize) -> Image {
        Image {
            h: self.shape[1],
            w: self.shape[2],
            c: self.shape[3],
            data: self.frame(i).to_vec(),
        }
    }

    pub fn same_shape(&self, other: &Tensor) -> bool {
        self.shape == other.shape
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }

    /// Elementwise `self * a + other * b`.
    pub fn lin_comb(&self, a: f64, other: &Tensor, b: f64) -> Tensor {
        debug_assert!(self.same_shape(other));
        Tensor {
            shape: self.shape.clone(),
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(x, y)| x * a + y * b)
                .collect(),
        }
    }

    pub fn scale(&self, a: f64) -> Tensor {
        Tensor {
            shape: self.shape.clone(),
            data: self.data.iter().map(|x| x * a).collect(),
        }
    }

    pub fn sub(&self, other: &Tensor) -> Tensor {
        self.lin_comb(1.0, other, -1.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frame_slicing_round_trips() {
        let mut a = Image::zeros(2, 3, 3);
        let mut b = Image::zeros(2, 3, 3);
        for i in 0..a.data.len() {
            a.data[i] = i as f64;
            b.data[i] = 100.0 + i as f64;
        }
        let t = Tensor::from_frames(&[&a, &b]).unwrap();
        assert_eq!(t.shape, vec![2, 2, 3, 3]);
        assert_eq!(t.frame_image(0), a);
        assert_eq!(t.frame_image(1), b);
    }

    #[test]
    fn shape_mismatch_rejected() {
        let a = Image::zeros(2, 2, 3);
        let b = Image::zeros(2, 3, 3);
        assert!(Tensor::from_frames(&[&a, &b]).is_err());
        assert!(a.mean_abs_diff(&b).is_err());
    }

    #[test]
    fn lin_comb_is_elementwise() {
        let a = Tensor {
            shape: vec![1, 1, 2, 1],
            data: vec![1.0, 2.0],
        };
        let b = Tensor {
            shape: vec![1, 1, 2, 1],
            data: vec![10.0, 20.0],
        };
        assert_eq!(a.lin_comb(2.0, &b, 0.5).data, vec![7.0, 14.0]);
    }
}
