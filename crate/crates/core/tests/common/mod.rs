//! Test-only reference implementations. These are written from the rules
//! directly (clamped coordinates, groups re-derived from parity, one
//! comparison at a time into a bit string) and share no code with the
//! library's transform path.

#![allow(dead_code)]

use census4x4::GrayImage;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const GOLDEN_IN: [u8; 16] = [16, 2, 3, 13, 5, 11, 10, 8, 9, 7, 6, 12, 4, 14, 15, 1];
pub const GOLDEN_OUT: [u8; 16] = [
    0, 255, 191, 0, 251, 14, 67, 206, 140, 61, 143, 32, 255, 2, 0, 255,
];

/// (reference, ordered neighbor values, code) for the sixteen conversion rows,
/// A..P. The row for reference 3 uses 11 where the printed table shows 4.
pub const TABLE_ROWS: [(u8, [u8; 8], u8); 16] = [
    (16, [2, 3, 5, 11, 10, 9, 7, 6], 0),
    (2, [3, 13, 11, 10, 8, 7, 6, 12], 255),
    (3, [16, 2, 5, 11, 10, 9, 7, 6], 191),
    (13, [2, 3, 11, 10, 8, 7, 6, 12], 0),
    (5, [11, 10, 9, 7, 6, 4, 14, 15], 251),
    (11, [10, 8, 7, 6, 12, 14, 15, 1], 14),
    (10, [5, 11, 9, 7, 6, 4, 14, 15], 67),
    (8, [11, 10, 7, 6, 12, 14, 15, 1], 206),
    (9, [16, 2, 3, 5, 11, 10, 7, 6], 140),
    (7, [2, 3, 13, 11, 10, 8, 6, 12], 61),
    (6, [16, 2, 3, 5, 11, 10, 9, 7], 143),
    (12, [2, 3, 13, 11, 10, 8, 7, 6], 32),
    (4, [5, 11, 10, 9, 7, 6, 14, 15], 255),
    (14, [11, 10, 8, 7, 6, 12, 15, 1], 2),
    (15, [5, 11, 10, 9, 7, 6, 4, 14], 0),
    (1, [11, 10, 8, 7, 6, 12, 14, 15], 255),
];

pub fn golden_image() -> GrayImage {
    GrayImage::new(4, 4, GOLDEN_IN.to_vec()).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn bits_to_code(bits: &str) -> u8 {
    assert_eq!(bits.len(), 8);
    u8::from_str_radix(bits, 2).unwrap()
}

fn clamped(img: &GrayImage, x: i64, y: i64) -> u8 {
    let x = x.max(0).min(img.width() as i64 - 1) as usize;
    let y = y.max(0).min(img.height() as i64 - 1) as usize;
    img.pixels()[y * img.width() + x]
}

/// Start row/col of the 3x3 group used by local position (r, c).
pub fn oracle_group_origin(r: usize, c: usize) -> (usize, usize) {
    let top = if r.is_multiple_of(2) { 0 } else { 1 };
    let left = if c.is_multiple_of(2) { 0 } else { 1 };
    (top, left)
}

pub fn oracle_block(block: &[u8; 16]) -> [u8; 16] {
    let mut out = [0u8; 16];
    for r in 0..4 {
        for c in 0..4 {
            let (gr, gc) = oracle_group_origin(r, c);
            let reference = block[r * 4 + c];
            let mut bits = String::new();
            for nr in gr..gr + 3 {
                for nc in gc..gc + 3 {
                    if (nr, nc) == (r, c) {
                        continue;
                    }
                    bits.push(if reference > block[nr * 4 + nc] {
                        '0'
                    } else {
                        '1'
                    });
                }
            }
            out[r * 4 + c] = bits_to_code(&bits);
        }
    }
    out
}

pub fn oracle_ct4(img: &GrayImage) -> GrayImage {
    let mut pixels = Vec::new();
    for y in 0..img.height() {
        for x in 0..img.width() {
            let (tx, ty) = (x / 4 * 4, y / 4 * 4);
            let (r, c) = (y - ty, x - tx);
            let (gr, gc) = oracle_group_origin(r, c);
            let reference = img.get(x, y);
            let mut bits = String::new();
            for nr in gr..gr + 3 {
                for nc in gc..gc + 3 {
                    if (nr, nc) == (r, c) {
                        continue;
                    }
                    let n = clamped(img, (tx + nc) as i64, (ty + nr) as i64);
                    bits.push(if reference > n { '0' } else { '1' });
                }
            }
            pixels.push(bits_to_code(&bits));
        }
    }
    GrayImage::new(img.width(), img.height(), pixels).unwrap()
}

pub fn oracle_ct3(img: &GrayImage) -> GrayImage {
    let mut pixels = Vec::new();
    for y in 0..img.height() as i64 {
        for x in 0..img.width() as i64 {
            let reference = clamped(img, x, y);
            let mut bits = String::new();
            for dy in -1..=1 {
                for dx in -1..=1 {
                    if dx == 0 && dy == 0 {
                        continue;
                    }
                    bits.push(if reference > clamped(img, x + dx, y + dy) {
                        '0'
                    } else {
                        '1'
                    });
                }
            }
            pixels.push(bits_to_code(&bits));
        }
    }
    GrayImage::new(img.width(), img.height(), pixels).unwrap()
}

/// Plain two-pass population statistics, for cross-checking the metrics.
pub fn oracle_rms_contrast(pixels: &[u8]) -> f64 {
    let n = pixels.len() as f64;
    let mean: f64 = pixels.iter().map(|&p| p as f64).sum::<f64>() / n;
    (pixels
        .iter()
        .map(|&p| (p as f64 - mean).powi(2))
        .sum::<f64>()
        / n)
        .sqrt()
}

pub fn random_image<R: Rng>(rng: &mut R, max_side: usize) -> GrayImage {
    let w = rng.random_range(1..=max_side);
    let h = rng.random_range(1..=max_side);
    let pixels = (0..w * h).map(|_| rng.random()).collect();
    GrayImage::new(w, h, pixels).unwrap()
}

pub fn random_block<R: Rng>(rng: &mut R) -> [u8; 16] {
    let mut b = [0u8; 16];
    rng.fill(&mut b);
    b
}

/// Sixteen distinct intensities in random order.
pub fn random_distinct_block<R: Rng>(rng: &mut R) -> [u8; 16] {
    use rand::seq::index::sample;
    let idx = sample(rng, 256, 16);
    let mut b = [0u8; 16];
    for (slot, v) in b.iter_mut().zip(idx.iter()) {
        *slot = v as u8;
    }
    b
}

/// A random map that is strictly increasing on the intensities present in
/// `img`. A strictly increasing map on all of 0..=255 into 0..=255 is the
/// identity, so the map is drawn over the image's own value set.
pub fn random_monotone_map<R: Rng>(rng: &mut R, img: &GrayImage) -> [u8; 256] {
    use rand::seq::index::sample;
    let mut present: Vec<u8> = img.pixels().to_vec();
    present.sort_unstable();
    present.dedup();
    let mut targets: Vec<u8> = sample(rng, 256, present.len())
        .iter()
        .map(|v| v as u8)
        .collect();
    targets.sort_unstable();
    let mut table = [0u8; 256];
    for (i, v) in table.iter_mut().enumerate() {
        *v = i as u8;
    }
    for (&from, &to) in present.iter().zip(&targets) {
        table[from as usize] = to;
    }
    table
}

/// Random image using `levels` gray levels drawn from a random offset range.
pub fn random_leveled_image<R: Rng>(rng: &mut R, max_side: usize, levels: u8) -> GrayImage {
    let w = rng.random_range(1..=max_side);
    let h = rng.random_range(1..=max_side);
    let pixels = (0..w * h).map(|_| rng.random_range(0..levels)).collect();
    GrayImage::new(w, h, pixels).unwrap()
}
