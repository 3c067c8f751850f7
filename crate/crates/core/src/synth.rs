//! Deterministic synthetic test patterns.
//!
//! Used by the test suites and handy for experiments: a smooth gradient that
//! shows off blocking artifacts, and a reproducible "natural texture" made
//! from seeded noise smoothed into blobs and stretched back to full range.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::image::GrayImage;

/// Smooth diagonal gradient that sweeps up and down with period 128.
///
/// Intensity is a triangle wave of `x + y`, so the image is free of real
/// edges (adjacent pixels differ by at most 4) while still carrying enough
/// slope for very coarse quantizers to leave visible block structure behind.
pub fn smooth_gradient(width: usize, height: usize) -> GrayImage {
    GrayImage::from_fn(width, height, |x, y| {
        let t = (x + y) % 128;
        let tri = 64 - (t as i64 - 64).abs(); // 0..=64 and back
        ((tri * 255 + 32) / 64) as u8
    })
}

/// Smoothed full-contrast noise; the same seed always yields the same image.
pub fn natural_texture(width: usize, height: usize, seed: u64) -> GrayImage {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut buf = vec![0u8; width * height];
    rng.fill_bytes(&mut buf);
    for _ in 0..5 {
        buf = box_blur3(&buf, width, height);
    }
    stretch_contrast(&mut buf);
    GrayImage::new(width, height, buf).expect("buffer sized to dimensions")
}

/// 3x3 box blur with edge clamping; rounded integer means.
fn box_blur3(src: &[u8], width: usize, height: usize) -> Vec<u8> {
    let mut out = vec![0u8; src.len()];
    for y in 0..height {
        for x in 0..width {
            let mut sum = 0u32;
            let mut count = 0u32;
            for dy in -1i64..=1 {
                for dx in -1i64..=1 {
                    let sx = x as i64 + dx;
                    let sy = y as i64 + dy;
                    if (0..width as i64).contains(&sx) && (0..height as i64).contains(&sy) {
                        sum += src[sy as usize * width + sx as usize] as u32;
                        count += 1;
                    }
                }
            }
            out[y * width + x] = ((sum + count / 2) / count) as u8;
        }
    }
    out
}

/// Linearly rescales the buffer to span the full `[0, 255]` range.
fn stretch_contrast(buf: &mut [u8]) {
    let min = *buf.iter().min().unwrap();
    let max = *buf.iter().max().unwrap();
    if max == min {
        return;
    }
    let range = (max - min) as u32;
    for v in buf.iter_mut() {
        *v = (((*v - min) as u32 * 255 + range / 2) / range) as u8;
    }
}
