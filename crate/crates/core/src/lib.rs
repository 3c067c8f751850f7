//! Block-DCT compression degradation, quality metrics, and deblocking.
//!
//! The crate reproduces the lossy half of a baseline 8x8 block-DCT codec on
//! grayscale images (tile, transform, coarse quantization, reconstruction),
//! estimates what the compressed size would have been, measures the damage
//! with full-reference (MSE/PSNR) and no-reference (blockiness) metrics, and
//! repairs block-boundary artifacts with an edge-preserving spatial
//! post-filter.
//!
//! Images travel as [`GrayImage`] and interchange as binary PGM. Coefficient
//! math is generic over the [`Real`] scalar; [`Coeff`] is the `f64` default
//! the accuracy bounds are stated for.

pub mod block;
pub mod codec;
pub mod dct;
pub mod deblock;
pub mod error;
pub mod image;
pub mod metrics;
pub mod pgm;
pub mod quant;
pub mod rate;
pub mod scalar;
pub mod synth;

pub use block::{assemble_blocks, tile_blocks, BlockGrid, CoeffBlock, PixelBlock, BLOCK_SIZE};
pub use codec::{degrade, DegradeResult};
pub use dct::{dct2d, idct2d, Dct8};
pub use deblock::{classify_boundary, deblock_image, filter_segment, BoundaryMode, DeblockParams};
pub use error::{Error, Result};
pub use image::GrayImage;
pub use metrics::{blockiness_score, mse, psnr, QualityReport};
pub use pgm::{read_pgm, write_pgm};
pub use quant::{
    build_quant_matrix, dequantize_block, inverse_zigzag, quantize_block, quantize_grid,
    zigzag_scan, QualityFactor, QuantMatrix, QuantizedBlock, BASE_LUMA_TABLE, ZIGZAG,
};
pub use rate::{estimate_bits, size_category, symbolize, AcSymbol, RateReport, SymbolStream};
pub use scalar::Real;

/// Default scalar type for coefficient and metric math.
pub type Coeff = f64;
