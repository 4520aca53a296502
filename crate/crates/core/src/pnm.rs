//! PGM (P2 ASCII / P5 binary) reader and writer for 8-bit grayscale images.
//!
//! Only `maxval = 255` is accepted. Header comments (`#` to end of line) are
//! skipped wherever whitespace is allowed, and in P2 pixel data as well.

use thiserror::Error;

use crate::error::Error as ImageError;
use crate::image::GrayImage;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum PgmVariant {
    AsciiP2,
    #[default]
    BinaryP5,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PgmError {
    #[error("bad magic number {found:?}, expected P2 or P5")]
    BadMagic { found: String },

    #[error("invalid {field} in header at byte {offset}")]
    BadHeader { field: &'static str, offset: usize },

    #[error("unsupported maxval {0}, only 255 is accepted")]
    UnsupportedMaxval(u64),

    #[error("truncated payload: expected {expected} pixels, found {actual}")]
    Truncated { expected: usize, actual: usize },

    #[error("pixel value {value} at byte {offset} exceeds maxval 255")]
    PixelOutOfRange { offset: usize, value: u64 },

    #[error("invalid pixel token at byte {offset}")]
    BadPixel { offset: usize },

    #[error(transparent)]
    Image(#[from] ImageError),
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_space_and_comments(&mut self) {
        while let Some(&b) = self.bytes.get(self.pos) {
            if b == b'#' {
                while let Some(&c) = self.bytes.get(self.pos) {
                    self.pos += 1;
                    if c == b'\n' || c == b'\r' {
                        break;
                    }
                }
            } else if b.is_ascii_whitespace() {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    // Next run of non-whitespace bytes, with its starting offset.
    fn token(&mut self) -> Option<(usize, &'a [u8])> {
        self.skip_space_and_comments();
        let start = self.pos;
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| !b.is_ascii_whitespace() && *b != b'#')
        {
            self.pos += 1;
        }
        (self.pos > start).then(|| (start, &self.bytes[start..self.pos]))
    }

    fn header_number(&mut self, field: &'static str) -> Result<u64, PgmError> {
        let offset = self.pos;
        let (start, tok) = self.token().ok_or(PgmError::BadHeader { field, offset })?;
        parse_decimal(tok).ok_or(PgmError::BadHeader {
            field,
            offset: start,
        })
    }
}

fn parse_decimal(tok: &[u8]) -> Option<u64> {
    if tok.is_empty() || !tok.iter().all(u8::is_ascii_digit) {
        return None;
    }
    std::str::from_utf8(tok).ok()?.parse().ok()
}

/// Decodes a P2 or P5 stream.
pub fn read_pgm(bytes: &[u8]) -> Result<GrayImage, PgmError> {
    let variant = match bytes.get(..2) {
        Some(b"P2") => PgmVariant::AsciiP2,
        Some(b"P5") => PgmVariant::BinaryP5,
        other => {
            return Err(PgmError::BadMagic {
                found: String::from_utf8_lossy(other.unwrap_or(bytes)).into_owned(),
            })
        }
    };
    let mut cur = Cursor { bytes, pos: 2 };
    if !cur
        .bytes
        .get(2)
        .is_some_and(|b| b.is_ascii_whitespace() || *b == b'#')
    {
        return Err(PgmError::BadMagic {
            found: String::from_utf8_lossy(&bytes[..bytes.len().min(3)]).into_owned(),
        });
    }
    let width = cur.header_number("width")?;
    let height = cur.header_number("height")?;
    let maxval = cur.header_number("maxval")?;
    if maxval != 255 {
        return Err(PgmError::UnsupportedMaxval(maxval));
    }
    let width = usize::try_from(width).map_err(|_| PgmError::BadHeader {
        field: "width",
        offset: 2,
    })?;
    let height = usize::try_from(height).map_err(|_| PgmError::BadHeader {
        field: "height",
        offset: 2,
    })?;
    if width == 0 || height == 0 {
        return Err(ImageError::ZeroDimension { width, height }.into());
    }
    let expected = width.checked_mul(height).ok_or(PgmError::BadHeader {
        field: "height",
        offset: 2,
    })?;

    let pixels = match variant {
        PgmVariant::BinaryP5 => {
            // exactly one whitespace byte separates maxval from the raster
            match cur.bytes.get(cur.pos) {
                Some(b) if b.is_ascii_whitespace() => cur.pos += 1,
                _ => {
                    return Err(PgmError::Truncated {
                        expected,
                        actual: 0,
                    })
                }
            }
            let payload = &bytes[cur.pos..];
            if payload.len() < expected {
                return Err(PgmError::Truncated {
                    expected,
                    actual: payload.len(),
                });
            }
            payload[..expected].to_vec()
        }
        PgmVariant::AsciiP2 => {
            let mut pixels = Vec::with_capacity(expected);
            while pixels.len() < expected {
                let Some((offset, tok)) = cur.token() else {
                    return Err(PgmError::Truncated {
                        expected,
                        actual: pixels.len(),
                    });
                };
                let value = parse_decimal(tok).ok_or(PgmError::BadPixel { offset })?;
                if value > 255 {
                    return Err(PgmError::PixelOutOfRange { offset, value });
                }
                pixels.push(value as u8);
            }
            pixels
        }
    };
    Ok(GrayImage::new(width, height, pixels)?)
}

/// Encodes `img` with the canonical header `P5\n<w> <h>\n255\n` (or `P2`,
/// with one image row per text line).
pub fn write_pgm(img: &GrayImage, variant: PgmVariant) -> Vec<u8> {
    let (w, h) = (img.width(), img.height());
    match variant {
        PgmVariant::BinaryP5 => {
            let mut out = format!("P5\n{w} {h}\n255\n").into_bytes();
            out.extend_from_slice(img.pixels());
            out
        }
        PgmVariant::AsciiP2 => {
            let mut out = format!("P2\n{w} {h}\n255\n");
            for y in 0..h {
                let row: Vec<String> = img.row(y).iter().map(u8::to_string).collect();
                out.push_str(&row.join(" "));
                out.push('\n');
            }
            out.into_bytes()
        }
    }
}
