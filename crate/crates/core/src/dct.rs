//! Orthonormal 8x8 DCT-II and its inverse.
//!
//! The transform is evaluated separably (rows then columns) against a
//! precomputed basis matrix; with the orthonormal scaling, Parseval holds and
//! the forward/inverse pair round-trips integer blocks exactly after
//! rounding. A constant block of value `c` maps to a lone DC term of `8c`.

use crate::block::{CoeffBlock, PixelBlock, BLOCK_SIZE};
use crate::scalar::Real;

const N: usize = BLOCK_SIZE;

/// Precomputed 8-point DCT basis; build once, use for many blocks.
#[derive(Debug, Clone)]
pub struct Dct8<S> {
    /// `basis[u][x] = alpha(u) * cos((2x+1) u pi / 16)`,
    /// `alpha(0) = sqrt(1/8)`, `alpha(u>0) = sqrt(2/8)`.
    basis: [[S; N]; N],
}

impl<S: Real> Dct8<S> {
    pub fn new() -> Self {
        let sixteen = S::from_u32(16).unwrap();
        let alpha0 = S::from_f64(0.125).unwrap().sqrt();
        let alpha = S::from_f64(0.25).unwrap().sqrt();
        let mut basis = [[S::zero(); N]; N];
        for (u, row) in basis.iter_mut().enumerate() {
            let a = if u == 0 { alpha0 } else { alpha };
            for (x, b) in row.iter_mut().enumerate() {
                let angle = S::from_usize((2 * x + 1) * u).unwrap() * S::PI() / sixteen;
                *b = a * angle.cos();
            }
        }
        Dct8 { basis }
    }

    /// Forward 2-D DCT-II of a level-shifted block.
    pub fn forward(&self, block: &PixelBlock) -> CoeffBlock<S> {
        let mut input = [S::zero(); 64];
        for (dst, &src) in input.iter_mut().zip(block.samples.iter()) {
            *dst = S::from_i16(src).unwrap();
        }
        // tmp = basis * samples (transform the columns' row index)
        let mut tmp = [S::zero(); 64];
        for u in 0..N {
            for c in 0..N {
                let mut acc = S::zero();
                for r in 0..N {
                    acc += self.basis[u][r] * input[r * N + c];
                }
                tmp[u * N + c] = acc;
            }
        }
        // coeffs = tmp * basis^T
        let mut coeffs = [S::zero(); 64];
        for u in 0..N {
            for v in 0..N {
                let mut acc = S::zero();
                for c in 0..N {
                    acc += tmp[u * N + c] * self.basis[v][c];
                }
                coeffs[u * N + v] = acc;
            }
        }
        CoeffBlock { coeffs }
    }

    /// Inverse 2-D DCT; the real-valued result is rounded half away from
    /// zero and clamped to the sample range `[-128, 127]`.
    pub fn inverse(&self, coeffs: &CoeffBlock<S>) -> PixelBlock {
        // tmp = basis^T * coeffs
        let mut tmp = [S::zero(); 64];
        for r in 0..N {
            for v in 0..N {
                let mut acc = S::zero();
                for u in 0..N {
                    acc += self.basis[u][r] * coeffs.coeffs[u * N + v];
                }
                tmp[r * N + v] = acc;
            }
        }
        // samples = tmp * basis
        let mut samples = [0i16; 64];
        for r in 0..N {
            for c in 0..N {
                let mut acc = S::zero();
                for v in 0..N {
                    acc += tmp[r * N + v] * self.basis[v][c];
                }
                let rounded = acc.round().to_i32().unwrap_or(0);
                samples[r * N + c] = rounded.clamp(-128, 127) as i16;
            }
        }
        PixelBlock { samples }
    }
}

impl<S: Real> Default for Dct8<S> {
    fn default() -> Self {
        Self::new()
    }
}

/// One-shot forward DCT. Prefer a shared [`Dct8`] in per-block loops.
pub fn dct2d<S: Real>(block: &PixelBlock) -> CoeffBlock<S> {
    Dct8::new().forward(block)
}

/// One-shot inverse DCT. Prefer a shared [`Dct8`] in per-block loops.
pub fn idct2d<S: Real>(coeffs: &CoeffBlock<S>) -> PixelBlock {
    Dct8::new().inverse(coeffs)
}
