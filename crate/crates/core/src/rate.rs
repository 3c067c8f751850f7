//! Compressed-size estimation from quantized coefficients.
//!
//! Instead of emitting a real bitstream, the quantized grid is reduced to
//! baseline-style symbols (differential DC size categories; AC run/size
//! pairs with EOB and ZRL markers) and charged ideal entropy code lengths,
//! with a floor of one bit per emitted symbol since no prefix code goes
//! shorter. Magnitude bits are charged at face value. This tracks realistic
//! compression ratios without any Huffman machinery.

use crate::block::BlockGrid;
use crate::error::{Error, Result};
use crate::quant::{zigzag_scan, QuantizedBlock};

/// One AC symbol in baseline run/size form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AcSymbol {
    /// `run` zero coefficients (0..=15) followed by a value of `size` bits.
    Run { run: u8, size: u8 },
    /// Sixteen consecutive zero coefficients.
    Zrl,
    /// Rest of the block is zero.
    Eob,
}

impl AcSymbol {
    /// Packs the symbol into the conventional `(run << 4) | size` byte;
    /// EOB is 0x00 and ZRL is 0xF0, neither of which collides with a real
    /// run/size pair.
    pub fn code(self) -> u8 {
        match self {
            AcSymbol::Run { run, size } => (run << 4) | size,
            AcSymbol::Zrl => 0xF0,
            AcSymbol::Eob => 0x00,
        }
    }
}

/// Symbolized image: what the entropy coder would see.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolStream {
    /// One size category per block, for the differential DC values.
    pub dc_symbols: Vec<u8>,
    /// Run/size symbols for all blocks, in block raster order.
    pub ac_symbols: Vec<AcSymbol>,
    /// Total raw magnitude bits over every non-zero value.
    pub amplitude_bits: u64,
}

/// Estimated size and the resulting compression ratio.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateReport {
    pub estimated_bits: f64,
    /// 8 bits per pixel of the original image.
    pub raw_bits: u64,
    pub compression_ratio: f64,
}

/// Bits needed for a value's magnitude: 0 for 0, else `floor(log2|v|) + 1`.
pub fn size_category(v: i32) -> u8 {
    if v == 0 {
        0
    } else {
        (32 - v.unsigned_abs().leading_zeros()) as u8
    }
}

/// Reduces a quantized grid to DC/AC symbols in block raster order.
///
/// DC values are coded differentially (the first block predicts from 0);
/// AC values are scanned in zig-zag order as (zero-run, size) pairs, with
/// ZRL standing in for each full 16-zero run and EOB closing any block whose
/// tail is all zeros.
pub fn symbolize(grid: &BlockGrid<QuantizedBlock>) -> SymbolStream {
    let mut dc_symbols = Vec::with_capacity(grid.blocks().len());
    let mut ac_symbols = Vec::new();
    let mut amplitude_bits = 0u64;
    let mut dc_pred = 0i32;
    for block in grid.blocks() {
        let seq = zigzag_scan(block);
        let diff = seq[0] - dc_pred;
        dc_pred = seq[0];
        let dc_cat = size_category(diff);
        dc_symbols.push(dc_cat);
        amplitude_bits += dc_cat as u64;

        let mut run = 0u32;
        for &v in &seq[1..] {
            if v == 0 {
                run += 1;
                continue;
            }
            while run >= 16 {
                ac_symbols.push(AcSymbol::Zrl);
                run -= 16;
            }
            let size = size_category(v);
            ac_symbols.push(AcSymbol::Run { run: run as u8, size });
            amplitude_bits += size as u64;
            run = 0;
        }
        if run > 0 {
            ac_symbols.push(AcSymbol::Eob);
        }
    }
    SymbolStream { dc_symbols, ac_symbols, amplitude_bits }
}

/// Ideal code length of one symbol class: each occurrence costs
/// `max(-log2 p, 1)` bits against the class's empirical distribution.
fn class_bits(counts: &[u64], total: u64) -> f64 {
    if total == 0 {
        return 0.0;
    }
    counts
        .iter()
        .filter(|&&c| c > 0)
        .map(|&c| c as f64 * (total as f64 / c as f64).log2().max(1.0))
        .sum()
}

/// Charges the stream its entropy-coded size and relates it to the raw size
/// of a `width` x `height` 8-bit image.
pub fn estimate_bits(stream: &SymbolStream, width: usize, height: usize) -> Result<RateReport> {
    if stream.dc_symbols.is_empty() && stream.ac_symbols.is_empty() {
        return Err(Error::Domain("cannot estimate bits of an empty symbol stream".into()));
    }
    if width == 0 || height == 0 {
        return Err(Error::Domain("image dimensions must be positive".into()));
    }

    let mut dc_counts = [0u64; 16];
    for &cat in &stream.dc_symbols {
        dc_counts[cat as usize] += 1;
    }
    let mut ac_counts = [0u64; 256];
    for &sym in &stream.ac_symbols {
        ac_counts[sym.code() as usize] += 1;
    }

    let estimated_bits = class_bits(&dc_counts, stream.dc_symbols.len() as u64)
        + class_bits(&ac_counts, stream.ac_symbols.len() as u64)
        + stream.amplitude_bits as f64;
    let raw_bits = 8 * width as u64 * height as u64;
    Ok(RateReport {
        estimated_bits,
        raw_bits,
        compression_ratio: raw_bits as f64 / estimated_bits,
    })
}
