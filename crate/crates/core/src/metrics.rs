//! Image quality measures.
//!
//! MSE and PSNR are full-reference measures; the blockiness score is a
//! no-reference measure tuned to the fixed 8-pixel block grid. Blockiness
//! compares the mean gap across block boundaries against the mean gap
//! elsewhere, per orientation:
//!
//! ```text
//! D_b = mean |gap| over column pairs 7|8, 15|16, ...  (horizontal)
//!     + mean |gap| over row    pairs 7|8, 15|16, ...  (vertical)
//! D_i = the same sum over all remaining adjacent pairs
//! score = (D_b + 1) / (D_i + 1)
//! ```
//!
//! A constant image scores exactly 1.0; an image with nothing but block
//! edges scores high; noise scores near 1 since boundary pairs look like
//! any other pair.

use crate::error::{Error, Result};
use crate::image::GrayImage;
use crate::scalar::Real;

/// MSE, PSNR and blockiness for one image or pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QualityReport<S> {
    pub mse: S,
    /// `+inf` when the images are identical.
    pub psnr_db: S,
    pub blockiness: S,
}

impl<S: Real> QualityReport<S> {
    /// Full-reference MSE/PSNR of the pair plus the no-reference blockiness
    /// of the distorted image.
    pub fn measure(reference: &GrayImage, distorted: &GrayImage) -> Result<Self> {
        Ok(QualityReport {
            mse: mse(reference, distorted)?,
            psnr_db: psnr(reference, distorted)?,
            blockiness: blockiness_score(distorted)?,
        })
    }
}

fn check_dims(a: &GrayImage, b: &GrayImage) -> Result<()> {
    if a.width() != b.width() || a.height() != b.height() {
        return Err(Error::Domain(format!(
            "dimension mismatch: {}x{} vs {}x{}",
            a.width(),
            a.height(),
            b.width(),
            b.height()
        )));
    }
    Ok(())
}

/// Mean squared intensity difference.
pub fn mse<S: Real>(a: &GrayImage, b: &GrayImage) -> Result<S> {
    check_dims(a, b)?;
    let sum: u64 = a
        .pixels()
        .iter()
        .zip(b.pixels())
        .map(|(&x, &y)| {
            let d = x as i64 - y as i64;
            (d * d) as u64
        })
        .sum();
    Ok(S::from_u64(sum).unwrap() / S::from_usize(a.pixels().len()).unwrap())
}

/// Peak signal-to-noise ratio `10 log10(255^2 / mse)`, `+inf` for identical
/// images.
pub fn psnr<S: Real>(a: &GrayImage, b: &GrayImage) -> Result<S> {
    let mse = mse::<S>(a, b)?;
    if mse == S::zero() {
        return Ok(S::infinity());
    }
    let peak_sq = S::from_u32(255 * 255).unwrap();
    Ok(S::from_u32(10).unwrap() * (peak_sq / mse).log10())
}

/// No-reference blockiness score; 1.0 means boundary pairs look no different
/// from interior pairs. Needs at least one interior boundary each way
/// (width and height of 9 or more).
pub fn blockiness_score<S: Real>(image: &GrayImage) -> Result<S> {
    let (w, h) = (image.width(), image.height());
    if w < 9 || h < 9 {
        return Err(Error::Domain(format!(
            "blockiness needs at least 9x9 pixels, got {w}x{h}"
        )));
    }

    // [horizontal, vertical] x [interior, boundary]
    let mut sums = [[0u64; 2]; 2];
    let mut counts = [[0u64; 2]; 2];
    for y in 0..h {
        for x in 0..w - 1 {
            let d = (image.get(x + 1, y) as i64 - image.get(x, y) as i64).unsigned_abs();
            let b = usize::from(x % 8 == 7);
            sums[0][b] += d;
            counts[0][b] += 1;
        }
    }
    for y in 0..h - 1 {
        for x in 0..w {
            let d = (image.get(x, y + 1) as i64 - image.get(x, y) as i64).unsigned_abs();
            let b = usize::from(y % 8 == 7);
            sums[1][b] += d;
            counts[1][b] += 1;
        }
    }

    let mean = |o: usize, b: usize| -> S {
        S::from_u64(sums[o][b]).unwrap() / S::from_u64(counts[o][b]).unwrap()
    };
    let d_boundary = mean(0, 1) + mean(1, 1);
    let d_interior = mean(0, 0) + mean(1, 0);
    Ok((d_boundary + S::one()) / (d_interior + S::one()))
}
