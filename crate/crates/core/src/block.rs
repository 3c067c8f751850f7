//! 8x8 block tiling with level shift.
//!
//! Images are cut into non-overlapping 8x8 tiles. Dimensions that are not
//! multiples of 8 are padded by replicating the last row/column, which keeps
//! the padded boundary free of artificial discontinuities. Samples are level
//! shifted by -128 on the way in and shifted back (with clamping) on the way
//! out.

use crate::image::GrayImage;
use crate::scalar::Real;

/// Tile edge length in pixels.
pub const BLOCK_SIZE: usize = 8;

/// One 8x8 tile of level-shifted samples in `[-128, 127]`, row-major.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PixelBlock {
    pub samples: [i16; 64],
}

/// One 8x8 tile of transform coefficients, row-major with `(0,0)` the DC term.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoeffBlock<S> {
    pub coeffs: [S; 64],
}

impl<S: Real> CoeffBlock<S> {
    pub fn zero() -> Self {
        CoeffBlock { coeffs: [S::zero(); 64] }
    }
}

/// A row-major grid of blocks covering a (possibly padded) image.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockGrid<B> {
    blocks_w: usize,
    blocks_h: usize,
    orig_w: usize,
    orig_h: usize,
    blocks: Vec<B>,
}

impl<B> BlockGrid<B> {
    pub fn blocks_w(&self) -> usize {
        self.blocks_w
    }

    pub fn blocks_h(&self) -> usize {
        self.blocks_h
    }

    /// Width of the image the grid was tiled from, before padding.
    pub fn orig_w(&self) -> usize {
        self.orig_w
    }

    /// Height of the image the grid was tiled from, before padding.
    pub fn orig_h(&self) -> usize {
        self.orig_h
    }

    pub fn blocks(&self) -> &[B] {
        &self.blocks
    }

    pub fn block(&self, bx: usize, by: usize) -> &B {
        &self.blocks[by * self.blocks_w + bx]
    }

    /// Applies `f` to every block, preserving the grid geometry.
    pub fn map<T>(&self, mut f: impl FnMut(&B) -> T) -> BlockGrid<T> {
        BlockGrid {
            blocks_w: self.blocks_w,
            blocks_h: self.blocks_h,
            orig_w: self.orig_w,
            orig_h: self.orig_h,
            blocks: self.blocks.iter().map(|b| f(b)).collect(),
        }
    }
}

/// Cuts an image into level-shifted 8x8 blocks, edge-replicating as padding.
pub fn tile_blocks(image: &GrayImage) -> BlockGrid<PixelBlock> {
    let (w, h) = (image.width(), image.height());
    let blocks_w = w.div_ceil(BLOCK_SIZE);
    let blocks_h = h.div_ceil(BLOCK_SIZE);
    let mut blocks = Vec::with_capacity(blocks_w * blocks_h);
    for by in 0..blocks_h {
        for bx in 0..blocks_w {
            let mut samples = [0i16; 64];
            for ly in 0..BLOCK_SIZE {
                let sy = (by * BLOCK_SIZE + ly).min(h - 1);
                for lx in 0..BLOCK_SIZE {
                    let sx = (bx * BLOCK_SIZE + lx).min(w - 1);
                    samples[ly * BLOCK_SIZE + lx] = image.get(sx, sy) as i16 - 128;
                }
            }
            blocks.push(PixelBlock { samples });
        }
    }
    BlockGrid { blocks_w, blocks_h, orig_w: w, orig_h: h, blocks }
}

/// Undoes the level shift and reassembles the image, dropping any padding.
///
/// Samples are clamped into `[0, 255]` after the +128 shift, so blocks that
/// picked up out-of-range values survive reassembly.
pub fn assemble_blocks(grid: &BlockGrid<PixelBlock>) -> GrayImage {
    GrayImage::from_fn(grid.orig_w, grid.orig_h, |x, y| {
        let block = grid.block(x / BLOCK_SIZE, y / BLOCK_SIZE);
        let sample = block.samples[(y % BLOCK_SIZE) * BLOCK_SIZE + (x % BLOCK_SIZE)];
        (sample as i32 + 128).clamp(0, 255) as u8
    })
}
