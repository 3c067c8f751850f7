//! Binary PGM (P5) reader and writer.
//!
//! Only 8-bit binary PGM is handled: magic `P5`, whitespace-separated
//! width/height/maxval with `#` comments allowed in the header, one
//! whitespace byte, then the raster. `write_pgm` always emits the header
//! as `P5\n<w> <h>\n255\n` so outputs are byte-stable.

use crate::error::{Error, Result};
use crate::image::GrayImage;

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    /// Skips whitespace and `#` comment lines. Returns how many bytes moved.
    fn skip_space_and_comments(&mut self) -> usize {
        let start = self.pos;
        while let Some(b) = self.peek() {
            if b.is_ascii_whitespace() {
                self.pos += 1;
            } else if b == b'#' {
                while let Some(b) = self.peek() {
                    self.pos += 1;
                    if b == b'\n' {
                        break;
                    }
                }
            } else {
                break;
            }
        }
        self.pos - start
    }

    fn read_number(&mut self, what: &str) -> Result<usize> {
        if self.skip_space_and_comments() == 0 {
            return Err(Error::Format(format!("missing whitespace before {what}")));
        }
        let start = self.pos;
        while matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(Error::Format(format!("expected {what}, found non-digit")));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Format(format!("{what} out of range")))
    }
}

/// Decodes a binary PGM byte stream.
pub fn read_pgm(bytes: &[u8]) -> Result<GrayImage> {
    if bytes.len() < 2 || &bytes[0..2] != b"P5" {
        return Err(Error::Format("not a binary PGM: magic is not \"P5\"".into()));
    }
    let mut cur = Cursor { bytes, pos: 2 };
    let width = cur.read_number("width")?;
    let height = cur.read_number("height")?;
    let maxval = cur.read_number("maxval")?;
    if maxval != 255 {
        return Err(Error::Unsupported(format!("maxval {maxval}, only 255 is handled")));
    }
    if width == 0 || height == 0 {
        return Err(Error::Format(format!("zero image dimension: {width}x{height}")));
    }
    // Exactly one whitespace byte separates the header from the raster.
    match cur.peek() {
        Some(b) if b.is_ascii_whitespace() => cur.pos += 1,
        _ => return Err(Error::Format("missing whitespace after maxval".into())),
    }
    let expected = width
        .checked_mul(height)
        .ok_or_else(|| Error::Format(format!("dimensions overflow: {width}x{height}")))?;
    let raster = &bytes[cur.pos..];
    if raster.len() < expected {
        return Err(Error::Truncated { expected, actual: raster.len() });
    }
    GrayImage::new(width, height, raster[..expected].to_vec())
}

/// Encodes an image as binary PGM.
pub fn write_pgm(image: &GrayImage) -> Vec<u8> {
    let header = format!("P5\n{} {}\n255\n", image.width(), image.height());
    let mut out = Vec::with_capacity(header.len() + image.pixels().len());
    out.extend_from_slice(header.as_bytes());
    out.extend_from_slice(image.pixels());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn reads_basic_image() {
        let mut data = b"P5\n2 2\n255\n".to_vec();
        data.extend_from_slice(&[0, 128, 255, 7]);
        let img = read_pgm(&data).unwrap();
        assert_eq!((img.width(), img.height()), (2, 2));
        assert_eq!(img.pixels(), &[0, 128, 255, 7]);
    }

    #[test]
    fn skips_header_comments() {
        let mut data = b"P5\n# c\n1 1\n255\n".to_vec();
        data.push(9);
        let img = read_pgm(&data).unwrap();
        assert_eq!((img.width(), img.height()), (1, 1));
        assert_eq!(img.pixels(), &[9]);
    }

    #[test]
    fn rejects_wide_maxval() {
        let data = b"P5\n1 1\n65535\n\x00\x00".to_vec();
        assert!(matches!(read_pgm(&data), Err(Error::Unsupported(_))));
    }

    #[test]
    fn rejects_bad_magic() {
        assert!(matches!(read_pgm(b"P2\n1 1\n255\n0"), Err(Error::Format(_))));
        assert!(matches!(read_pgm(b"JUNK"), Err(Error::Format(_))));
        assert!(matches!(read_pgm(b""), Err(Error::Format(_))));
    }

    #[test]
    fn reports_truncated_raster() {
        let mut data = b"P5\n2 2\n255\n".to_vec();
        data.extend_from_slice(&[1, 2, 3]);
        assert_eq!(
            read_pgm(&data),
            Err(Error::Truncated { expected: 4, actual: 3 })
        );
    }

    #[test]
    fn writes_exact_bytes() {
        let img = GrayImage::new(1, 1, vec![0]).unwrap();
        assert_eq!(write_pgm(&img), b"P5\n1 1\n255\n\x00");
        let img = GrayImage::new(2, 1, vec![5, 6]).unwrap();
        assert_eq!(write_pgm(&img), b"P5\n2 1\n255\n\x05\x06");
    }

    #[test]
    fn roundtrips_random_images() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5057);
        for _ in 0..100 {
            let w = rng.gen_range(1..40);
            let h = rng.gen_range(1..40);
            let pixels: Vec<u8> = (0..w * h).map(|_| rng.gen()).collect();
            let img = GrayImage::new(w, h, pixels).unwrap();
            let bytes = write_pgm(&img);
            // Header is "P5\n" + dims + "\n255\n"; raster follows directly.
            let header_len = format!("P5\n{w} {h}\n255\n").len();
            assert_eq!(bytes.len(), header_len + w * h);
            assert_eq!(read_pgm(&bytes).unwrap(), img);
        }
    }
}
