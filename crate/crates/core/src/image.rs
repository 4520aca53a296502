//! Grayscale image model: the row-major 8-bit image, the 4x4 block that the
//! block transform operates on, replicate padding and 4x4 tiling.

use crate::error::{Error, Result};

/// Side length of the block kernel.
pub const BLOCK: usize = 4;

/// An 8-bit grayscale image stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GrayImage {
    width: usize,
    height: usize,
    pixels: Vec<u8>,
}

impl GrayImage {
    /// Wraps a row-major pixel buffer. Both dimensions must be positive and
    /// the buffer length must equal `width * height`.
    pub fn new(width: usize, height: usize, pixels: Vec<u8>) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::ZeroDimension { width, height });
        }
        let expected = width
            .checked_mul(height)
            .ok_or(Error::ZeroDimension { width, height })?;
        if pixels.len() != expected {
            return Err(Error::LengthMismatch {
                width,
                height,
                expected,
                actual: pixels.len(),
            });
        }
        Ok(Self {
            width,
            height,
            pixels,
        })
    }

    /// Image with every pixel set to `value`.
    pub fn filled(width: usize, height: usize, value: u8) -> Result<Self> {
        Self::new(width, height, vec![value; width.saturating_mul(height)])
    }

    /// Builds an image by evaluating `f(x, y)` at every pixel.
    pub fn from_fn(
        width: usize,
        height: usize,
        mut f: impl FnMut(usize, usize) -> u8,
    ) -> Result<Self> {
        let mut pixels = Vec::with_capacity(width.saturating_mul(height));
        for y in 0..height {
            for x in 0..width {
                pixels.push(f(x, y));
            }
        }
        Self::new(width, height, pixels)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn pixels(&self) -> &[u8] {
        &self.pixels
    }

    pub fn into_pixels(self) -> Vec<u8> {
        self.pixels
    }

    /// Pixel at column `x`, row `y`. Panics when out of bounds.
    #[inline]
    pub fn get(&self, x: usize, y: usize) -> u8 {
        assert!(
            x < self.width && y < self.height,
            "pixel ({x}, {y}) out of bounds"
        );
        self.pixels[y * self.width + x]
    }

    /// Pixel with coordinates clamped into the image (replicate border).
    #[inline]
    pub fn get_clamped(&self, x: isize, y: isize) -> u8 {
        let x = x.clamp(0, self.width as isize - 1) as usize;
        let y = y.clamp(0, self.height as isize - 1) as usize;
        self.pixels[y * self.width + x]
    }

    pub fn row(&self, y: usize) -> &[u8] {
        &self.pixels[y * self.width..(y + 1) * self.width]
    }

    /// Applies `f` to every intensity.
    pub fn map(&self, f: impl Fn(u8) -> u8) -> GrayImage {
        GrayImage {
            width: self.width,
            height: self.height,
            pixels: self.pixels.iter().map(|&p| f(p)).collect(),
        }
    }
}

/// Border extension rule used when an image must be grown.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum PadMode {
    /// Copy the nearest edge pixel.
    #[default]
    Replicate,
}

/// A padded image together with the dimensions it had before padding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Padded {
    pub image: GrayImage,
    pub original_width: usize,
    pub original_height: usize,
}

/// Grows `img` so both dimensions are multiples of `multiple`.
pub fn pad_to_multiple(img: &GrayImage, multiple: usize, mode: PadMode) -> Result<Padded> {
    if multiple == 0 {
        return Err(Error::ZeroMultiple);
    }
    let width = img.width.div_ceil(multiple) * multiple;
    let height = img.height.div_ceil(multiple) * multiple;
    let image = if width == img.width && height == img.height {
        img.clone()
    } else {
        match mode {
            PadMode::Replicate => {
                let mut pixels = Vec::with_capacity(width * height);
                for y in 0..height {
                    let src = img.row(y.min(img.height - 1));
                    pixels.extend_from_slice(src);
                    let last = src[img.width - 1];
                    pixels.resize(pixels.len() + (width - img.width), last);
                }
                GrayImage {
                    width,
                    height,
                    pixels,
                }
            }
        }
    };
    Ok(Padded {
        image,
        original_width: img.width,
        original_height: img.height,
    })
}

/// Top-left crop to `width` x `height`.
pub fn crop(img: &GrayImage, width: usize, height: usize) -> Result<GrayImage> {
    if width > img.width || height > img.height {
        return Err(Error::CropTooLarge {
            src_width: img.width,
            src_height: img.height,
            width,
            height,
        });
    }
    if width == img.width && height == img.height {
        return Ok(img.clone());
    }
    let mut pixels = Vec::with_capacity(width * height);
    for y in 0..height {
        pixels.extend_from_slice(&img.row(y)[..width]);
    }
    GrayImage::new(width, height, pixels)
}

/// A 4x4 tile of intensities, row-major. Position `(r, c)` maps to index
/// `r * 4 + c`, so the kernel letters A..P run in raster order.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Block4(pub [u8; 16]);

impl Block4 {
    pub fn from_rows(rows: [[u8; 4]; 4]) -> Self {
        let mut values = [0u8; 16];
        for (r, row) in rows.iter().enumerate() {
            values[r * BLOCK..(r + 1) * BLOCK].copy_from_slice(row);
        }
        Block4(values)
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> u8 {
        self.0[row * BLOCK + col]
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: u8) {
        self.0[row * BLOCK + col] = value;
    }

    pub fn values(&self) -> &[u8; 16] {
        &self.0
    }

    pub fn rows(&self) -> [[u8; 4]; 4] {
        let mut rows = [[0u8; 4]; 4];
        for (r, row) in rows.iter_mut().enumerate() {
            row.copy_from_slice(&self.0[r * BLOCK..(r + 1) * BLOCK]);
        }
        rows
    }
}

impl From<Block4> for GrayImage {
    fn from(block: Block4) -> Self {
        GrayImage {
            width: BLOCK,
            height: BLOCK,
            pixels: block.0.to_vec(),
        }
    }
}

impl TryFrom<&GrayImage> for Block4 {
    type Error = Error;

    fn try_from(img: &GrayImage) -> Result<Self> {
        if img.width != BLOCK || img.height != BLOCK {
            return Err(Error::BlockCountMismatch {
                width: img.width,
                height: img.height,
                expected: 1,
                actual: 0,
            });
        }
        let mut values = [0u8; 16];
        values.copy_from_slice(&img.pixels);
        Ok(Block4(values))
    }
}

fn check_multiple_of_4(width: usize, height: usize) -> Result<()> {
    if !width.is_multiple_of(BLOCK) || !height.is_multiple_of(BLOCK) {
        return Err(Error::NotMultipleOf4 { width, height });
    }
    Ok(())
}

/// Splits an image into non-overlapping 4x4 tiles in raster order.
pub fn tile_blocks(img: &GrayImage) -> Result<Vec<Block4>> {
    check_multiple_of_4(img.width, img.height)?;
    let tiles_x = img.width / BLOCK;
    let tiles_y = img.height / BLOCK;
    let mut blocks = Vec::with_capacity(tiles_x * tiles_y);
    for ty in 0..tiles_y {
        for tx in 0..tiles_x {
            let mut block = Block4::default();
            for r in 0..BLOCK {
                let start = (ty * BLOCK + r) * img.width + tx * BLOCK;
                block.0[r * BLOCK..(r + 1) * BLOCK]
                    .copy_from_slice(&img.pixels[start..start + BLOCK]);
            }
            blocks.push(block);
        }
    }
    Ok(blocks)
}

/// Inverse of [`tile_blocks`].
pub fn assemble_blocks(blocks: &[Block4], width: usize, height: usize) -> Result<GrayImage> {
    if width == 0 || height == 0 {
        return Err(Error::ZeroDimension { width, height });
    }
    check_multiple_of_4(width, height)?;
    let tiles_x = width / BLOCK;
    let expected = tiles_x * (height / BLOCK);
    if blocks.len() != expected {
        return Err(Error::BlockCountMismatch {
            width,
            height,
            expected,
            actual: blocks.len(),
        });
    }
    let mut pixels = vec![0u8; width * height];
    for (i, block) in blocks.iter().enumerate() {
        let (ty, tx) = (i / tiles_x, i % tiles_x);
        for r in 0..BLOCK {
            let start = (ty * BLOCK + r) * width + tx * BLOCK;
            pixels[start..start + BLOCK].copy_from_slice(&block.0[r * BLOCK..(r + 1) * BLOCK]);
        }
    }
    GrayImage::new(width, height, pixels)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ramp(width: usize, height: usize) -> GrayImage {
        GrayImage::from_fn(width, height, |x, y| (y * width + x) as u8).unwrap()
    }

    // Naive replicate padding: clamp every coordinate.
    fn pad_oracle(img: &GrayImage, w: usize, h: usize) -> GrayImage {
        GrayImage::from_fn(w, h, |x, y| {
            img.get(x.min(img.width() - 1), y.min(img.height() - 1))
        })
        .unwrap()
    }

    #[test]
    fn rejects_bad_construction() {
        assert!(matches!(
            GrayImage::new(0, 3, vec![]),
            Err(Error::ZeroDimension { .. })
        ));
        assert!(matches!(
            GrayImage::new(2, 2, vec![1, 2, 3]),
            Err(Error::LengthMismatch {
                expected: 4,
                actual: 3,
                ..
            })
        ));
    }

    #[test]
    fn pad_already_aligned_is_identity() {
        let img = ramp(4, 4);
        let padded = pad_to_multiple(&img, 4, PadMode::Replicate).unwrap();
        assert_eq!(padded.image, img);
        assert_eq!((padded.original_width, padded.original_height), (4, 4));
    }

    #[test]
    fn pad_single_pixel() {
        let img = GrayImage::new(1, 1, vec![77]).unwrap();
        let padded = pad_to_multiple(&img, 4, PadMode::Replicate).unwrap();
        assert_eq!(padded.image, GrayImage::filled(4, 4, 77).unwrap());
    }

    #[test]
    fn pad_5x6_to_8x8() {
        let img = ramp(5, 6);
        let padded = pad_to_multiple(&img, 4, PadMode::Replicate).unwrap().image;
        assert_eq!((padded.width(), padded.height()), (8, 8));
        assert_eq!(padded.get(7, 7), img.get(4, 5));
        assert_eq!(padded, pad_oracle(&img, 8, 8));
    }

    #[test]
    fn pad_zero_multiple_is_error() {
        assert_eq!(
            pad_to_multiple(&ramp(2, 2), 0, PadMode::Replicate),
            Err(Error::ZeroMultiple)
        );
    }

    #[test]
    fn tiling_order() {
        let img = ramp(4, 4);
        let blocks = tile_blocks(&img).unwrap();
        assert_eq!(blocks.len(), 1);
        assert_eq!(GrayImage::from(blocks[0]), img);

        let img = ramp(8, 8);
        let blocks = tile_blocks(&img).unwrap();
        assert_eq!(blocks.len(), 4);
        assert_eq!(blocks[0].rows()[1], [8, 9, 10, 11]);

        let img = ramp(12, 8);
        let blocks = tile_blocks(&img).unwrap();
        assert_eq!(blocks.len(), 6);
        // tile row 1, tile col 2 -> 1 * 3 + 2
        assert_eq!(blocks[5].get(0, 0), img.get(8, 4));
    }

    #[test]
    fn tiling_requires_multiple_of_4() {
        assert!(matches!(
            tile_blocks(&ramp(5, 4)),
            Err(Error::NotMultipleOf4 { .. })
        ));
    }

    #[test]
    fn assemble_checks_count() {
        let blocks = vec![Block4::default(); 3];
        assert!(matches!(
            assemble_blocks(&blocks, 8, 8),
            Err(Error::BlockCountMismatch {
                expected: 4,
                actual: 3,
                ..
            })
        ));
        let one = Block4([9; 16]);
        assert_eq!(
            assemble_blocks(&[one], 4, 4).unwrap(),
            GrayImage::filled(4, 4, 9).unwrap()
        );
    }

    #[test]
    fn crop_cases() {
        let img = ramp(6, 5);
        assert_eq!(crop(&img, 6, 5).unwrap(), img);
        assert!(matches!(crop(&img, 7, 5), Err(Error::CropTooLarge { .. })));

        let src = ramp(5, 6);
        let padded = pad_to_multiple(&src, 4, PadMode::Replicate).unwrap().image;
        let cropped = crop(&padded, 5, 6).unwrap();
        assert_eq!(cropped.get(4, 5), padded.get(4, 5));
        assert_eq!(cropped, src);
    }
}
