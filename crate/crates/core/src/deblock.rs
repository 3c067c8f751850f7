//! Edge-preserving spatial deblocking post-filter.
//!
//! Works directly on decoded pixel values at the fixed 8x8 block grid, so it
//! needs nothing from the encoder. Each boundary segment (4 pixels per side)
//! is classified from local differences and filtered accordingly:
//!
//! * `Smooth` - both sides are flat; the step is replaced by a short ramp
//!   across the four center pixels.
//! * `Mild` - some local activity; only the two pixels at the seam move, by
//!   a capped fraction of the gap.
//! * `Edge` - the gap is large enough to be a real edge and is left alone.
//!
//! Vertical boundaries are filtered first, then horizontal boundaries on the
//! intermediate result. All arithmetic is integer, so outputs are identical
//! across implementations.

use crate::error::{Error, Result};
use crate::image::GrayImage;

/// Classification thresholds and the Mild-mode correction cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DeblockParams {
    t_edge: u8,
    t_flat: u8,
    clip_c: u8,
}

impl DeblockParams {
    /// Validates `t_edge > t_flat >= 1` and `clip_c >= 1`.
    pub fn new(t_edge: u8, t_flat: u8, clip_c: u8) -> Result<Self> {
        if t_flat < 1 || t_edge <= t_flat {
            return Err(Error::Domain(format!(
                "thresholds must satisfy t_edge > t_flat >= 1, got t_edge={t_edge} t_flat={t_flat}"
            )));
        }
        if clip_c < 1 {
            return Err(Error::Domain("clip_c must be at least 1".into()));
        }
        Ok(DeblockParams { t_edge, t_flat, clip_c })
    }

    pub fn t_edge(self) -> u8 {
        self.t_edge
    }

    pub fn t_flat(self) -> u8 {
        self.t_flat
    }

    pub fn clip_c(self) -> u8 {
        self.clip_c
    }
}

impl Default for DeblockParams {
    fn default() -> Self {
        DeblockParams { t_edge: 20, t_flat: 8, clip_c: 4 }
    }
}

/// How one boundary segment gets treated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryMode {
    Smooth,
    Mild,
    Edge,
}

/// Classifies one segment. `p` holds the four pixels before the boundary
/// with the innermost last (`[p3, p2, p1, p0]`); `q` holds the four after it
/// with the innermost first (`[q0, q1, q2, q3]`).
pub fn classify_boundary(p: [u8; 4], q: [u8; 4], params: &DeblockParams) -> BoundaryMode {
    let d = (p[3] as i32 - q[0] as i32).abs();
    if d >= params.t_edge as i32 {
        return BoundaryMode::Edge;
    }
    let left_activity = (p[1] as i32 - p[2] as i32).abs().max((p[2] as i32 - p[3] as i32).abs());
    let right_activity = (q[1] as i32 - q[0] as i32).abs().max((q[2] as i32 - q[1] as i32).abs());
    let t_flat = params.t_flat as i32;
    if left_activity < t_flat && right_activity < t_flat {
        BoundaryMode::Smooth
    } else {
        BoundaryMode::Mild
    }
}

/// Filters one classified segment, returning the updated
/// `[p1, p0, q0, q1]`. `Edge` segments come back unchanged.
pub fn filter_segment(p: [u8; 4], q: [u8; 4], mode: BoundaryMode, params: &DeblockParams) -> [u8; 4] {
    let (p2, p1, p0) = (p[1] as i32, p[2] as i32, p[3] as i32);
    let (q0, q1, q2) = (q[0] as i32, q[1] as i32, q[2] as i32);
    match mode {
        BoundaryMode::Smooth => {
            let new_p0 = (p2 + 2 * p1 + 2 * p0 + 2 * q0 + q1 + 4) / 8;
            let new_q0 = (q2 + 2 * q1 + 2 * q0 + 2 * p0 + p1 + 4) / 8;
            let new_p1 = (2 * p2 + 3 * p1 + 2 * p0 + q0 + 4) / 8;
            let new_q1 = (2 * q2 + 3 * q1 + 2 * q0 + p0 + 4) / 8;
            [clamp255(new_p1), clamp255(new_p0), clamp255(new_q0), clamp255(new_q1)]
        }
        BoundaryMode::Mild => {
            let gap = q0 - p0;
            // round(gap / 4) half away from zero, in integers
            let delta = (gap.signum() * ((gap.abs() + 2) / 4)).clamp(
                -(params.clip_c as i32),
                params.clip_c as i32,
            );
            [clamp255(p1), clamp255(p0 + delta), clamp255(q0 - delta), clamp255(q1)]
        }
        BoundaryMode::Edge => [p[2], p[3], q[0], q[1]],
    }
}

fn clamp255(v: i32) -> u8 {
    v.clamp(0, 255) as u8
}

/// Filters every interior 8x8 block boundary of the image: vertical
/// boundaries row by row, then horizontal boundaries column by column on the
/// result. Boundaries without four support pixels on both sides are skipped.
pub fn deblock_image(image: &GrayImage, params: &DeblockParams) -> Result<GrayImage> {
    let (w, h) = (image.width(), image.height());
    if w < 16 || h < 16 {
        return Err(Error::Domain(format!(
            "deblocking needs at least 16x16 pixels, got {w}x{h}"
        )));
    }
    let mut px = image.pixels().to_vec();

    // Pass 1: vertical boundaries (between columns c-1 and c).
    for c in (8..w).step_by(8) {
        if c + 4 > w {
            continue; // fewer than 4 support pixels on the right
        }
        for y in 0..h {
            let row = y * w;
            let p = [px[row + c - 4], px[row + c - 3], px[row + c - 2], px[row + c - 1]];
            let q = [px[row + c], px[row + c + 1], px[row + c + 2], px[row + c + 3]];
            let mode = classify_boundary(p, q, params);
            let out = filter_segment(p, q, mode, params);
            px[row + c - 2] = out[0];
            px[row + c - 1] = out[1];
            px[row + c] = out[2];
            px[row + c + 1] = out[3];
        }
    }

    // Pass 2: horizontal boundaries, on the pass-1 result.
    for r in (8..h).step_by(8) {
        if r + 4 > h {
            continue;
        }
        for x in 0..w {
            let p = [
                px[(r - 4) * w + x],
                px[(r - 3) * w + x],
                px[(r - 2) * w + x],
                px[(r - 1) * w + x],
            ];
            let q = [px[r * w + x], px[(r + 1) * w + x], px[(r + 2) * w + x], px[(r + 3) * w + x]];
            let mode = classify_boundary(p, q, params);
            let out = filter_segment(p, q, mode, params);
            px[(r - 2) * w + x] = out[0];
            px[(r - 1) * w + x] = out[1];
            px[r * w + x] = out[2];
            px[(r + 1) * w + x] = out[3];
        }
    }

    GrayImage::new(w, h, px)
}
