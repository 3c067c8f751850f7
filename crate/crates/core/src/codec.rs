//! Full degrade pipeline: tile, transform, quantize, reconstruct.
//!
//! Quantize and dequantize both happen here on the encode side; decoding is
//! just the inverse transform and reassembly, since the information removed
//! by quantization is gone for good. The output image carries whatever
//! blocking artifacts the chosen quality produces, and the rate report says
//! what storing it would roughly have cost.

use crate::block::{assemble_blocks, tile_blocks};
use crate::dct::Dct8;
use crate::image::GrayImage;
use crate::quant::{build_quant_matrix, dequantize_block, quantize_grid, QualityFactor};
use crate::rate::{estimate_bits, symbolize, RateReport};
use crate::scalar::Real;

/// Reconstructed image plus the estimated cost of encoding it.
#[derive(Debug, Clone, PartialEq)]
pub struct DegradeResult {
    pub image: GrayImage,
    pub rate: RateReport,
    pub quality: QualityFactor,
}

/// Runs the lossy round trip at the given quality.
///
/// The scalar parameter selects the coefficient precision; use
/// [`Coeff`](crate::Coeff) unless there is a reason not to.
pub fn degrade<S: Real>(image: &GrayImage, quality: QualityFactor) -> DegradeResult {
    let qm = build_quant_matrix(quality);
    let dct = Dct8::<S>::new();

    let tiles = tile_blocks(image);
    let coeffs = tiles.map(|b| dct.forward(b));
    let levels = quantize_grid(&coeffs, &qm);
    let recon = levels.map(|l| dct.inverse(&dequantize_block::<S>(l, &qm)));
    let output = assemble_blocks(&recon);

    let stream = symbolize(&levels);
    let rate = estimate_bits(&stream, image.width(), image.height())
        .expect("a valid image yields at least one block of symbols");
    DegradeResult { image: output, rate, quality }
}
