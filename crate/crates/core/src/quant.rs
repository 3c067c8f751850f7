//! Quality-scaled quantization of coefficient blocks.
//!
//! This is the lossy step. Step sizes come from the standard luminance base
//! table scaled by the usual `5000/q` / `200-2q` quality convention, and all
//! coefficient rounding is half away from zero so independent
//! implementations agree bit for bit.

use crate::block::{BlockGrid, CoeffBlock};
use crate::error::{Error, Result};
use crate::image::GrayImage;
use crate::scalar::Real;

/// Compression quality in `[1, 100]`; lower is coarser.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QualityFactor(u8);

impl QualityFactor {
    pub fn new(q: u8) -> Result<Self> {
        if (1..=100).contains(&q) {
            Ok(QualityFactor(q))
        } else {
            Err(Error::Domain(format!("quality factor {q} outside [1, 100]")))
        }
    }

    pub fn get(self) -> u8 {
        self.0
    }
}

/// 8x8 grid of quantizer step sizes, each in `[1, 255]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantMatrix {
    pub steps: [u16; 64],
}

/// 8x8 grid of quantization indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuantizedBlock {
    pub levels: [i32; 64],
}

/// The de-facto standard luminance base table.
pub const BASE_LUMA_TABLE: [u16; 64] = [
    16, 11, 10, 16, 24, 40, 51, 61,
    12, 12, 14, 19, 26, 58, 60, 55,
    14, 13, 16, 24, 40, 57, 69, 56,
    14, 17, 22, 29, 51, 87, 80, 62,
    18, 22, 37, 56, 68, 109, 103, 77,
    24, 35, 55, 64, 81, 104, 113, 92,
    49, 64, 78, 87, 103, 121, 120, 101,
    72, 92, 95, 98, 112, 100, 103, 99,
];

/// Scales the base table for a quality factor.
///
/// `scale = 5000/q` below 50, `200 - 2q` from 50 up;
/// `step = clamp(floor((base * scale + 50) / 100), 1, 255)` with the `q < 50`
/// branch evaluated in exact integer arithmetic
/// (`floor((base*5000 + 50q) / (100q))`).
pub fn build_quant_matrix(quality: QualityFactor) -> QuantMatrix {
    let q = quality.get() as i64;
    let mut steps = [0u16; 64];
    for (step, &base) in steps.iter_mut().zip(BASE_LUMA_TABLE.iter()) {
        let b = base as i64;
        let scaled = if q < 50 {
            (b * 5000 + 50 * q) / (100 * q)
        } else {
            (b * (200 - 2 * q) + 50) / 100
        };
        *step = scaled.clamp(1, 255) as u16;
    }
    QuantMatrix { steps }
}

/// Divides each coefficient by its step and rounds half away from zero.
pub fn quantize_block<S: Real>(coeffs: &CoeffBlock<S>, qm: &QuantMatrix) -> QuantizedBlock {
    let mut levels = [0i32; 64];
    for i in 0..64 {
        let step = S::from_u16(qm.steps[i]).unwrap();
        levels[i] = (coeffs.coeffs[i] / step).round().to_i32().unwrap();
    }
    QuantizedBlock { levels }
}

/// Reconstructs coefficients as `level * step`.
pub fn dequantize_block<S: Real>(block: &QuantizedBlock, qm: &QuantMatrix) -> CoeffBlock<S> {
    let mut coeffs = [S::zero(); 64];
    for i in 0..64 {
        coeffs[i] = S::from_i32(block.levels[i]).unwrap() * S::from_u16(qm.steps[i]).unwrap();
    }
    CoeffBlock { coeffs }
}

/// Scan order: `ZIGZAG[k]` is the row-major index of the k-th coefficient.
pub const ZIGZAG: [usize; 64] = [
    0, 1, 8, 16, 9, 2, 3, 10,
    17, 24, 32, 25, 18, 11, 4, 5,
    12, 19, 26, 33, 40, 48, 41, 34,
    27, 20, 13, 6, 7, 14, 21, 28,
    35, 42, 49, 56, 57, 50, 43, 36,
    29, 22, 15, 23, 30, 37, 44, 51,
    58, 59, 52, 45, 38, 31, 39, 46,
    53, 60, 61, 54, 47, 55, 62, 63,
];

/// Reads a block in zig-zag order, low frequencies first.
pub fn zigzag_scan(block: &QuantizedBlock) -> [i32; 64] {
    let mut seq = [0i32; 64];
    for (k, &n) in ZIGZAG.iter().enumerate() {
        seq[k] = block.levels[n];
    }
    seq
}

/// Inverse of [`zigzag_scan`].
pub fn inverse_zigzag(seq: &[i32; 64]) -> QuantizedBlock {
    let mut levels = [0i32; 64];
    for (k, &n) in ZIGZAG.iter().enumerate() {
        levels[n] = seq[k];
    }
    QuantizedBlock { levels }
}

/// Quantizes every block of a coefficient grid.
pub fn quantize_grid<S: Real>(
    grid: &BlockGrid<CoeffBlock<S>>,
    qm: &QuantMatrix,
) -> BlockGrid<QuantizedBlock> {
    grid.map(|c| quantize_block(c, qm))
}

/// Convenience: the raw size of an image at 8 bits per pixel.
pub fn raw_bits(image: &GrayImage) -> u64 {
    8 * image.width() as u64 * image.height() as u64
}
