//! Seeded synthetic images for benchmarks and reports.
//!
//! All generators use `ChaCha8Rng::seed_from_u64(seed)` from `rand_chacha`,
//! so a given seed reproduces the same pixels on every platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

use crate::image::GrayImage;

/// Uniformly random intensities.
pub fn random_image(width: usize, height: usize, seed: u64) -> crate::Result<GrayImage> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pixels = vec![0u8; width.saturating_mul(height)];
    rng.fill(&mut pixels[..]);
    GrayImage::new(width, height, pixels)
}

/// A diagonal ramp plus uniform noise in `[-noise, noise]`, clamped to 0..=255.
pub fn gradient_noise_image(
    width: usize,
    height: usize,
    noise: u8,
    seed: u64,
) -> crate::Result<GrayImage> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let span = (width + height).saturating_sub(2).max(1) as f64;
    let noise = noise as i32;
    GrayImage::from_fn(width, height, |x, y| {
        let base = ((x + y) as f64 / span * 255.0).round() as i32;
        let jitter = rng.random_range(-noise..=noise);
        (base + jitter).clamp(0, 255) as u8
    })
}

/// `count` gradient-plus-noise images; image `i` uses seed `seed + i`.
pub fn synthetic_corpus(
    count: usize,
    width: usize,
    height: usize,
    seed: u64,
) -> crate::Result<Vec<GrayImage>> {
    (0..count as u64)
        .map(|i| gradient_noise_image(width, height, 24, seed.wrapping_add(i)))
        .collect()
}

/// Hex SHA-256 of the dimensions and pixel bytes.
pub fn checksum(img: &GrayImage) -> String {
    let mut hasher = Sha256::new();
    hasher.update((img.width() as u64).to_le_bytes());
    hasher.update((img.height() as u64).to_le_bytes());
    hasher.update(img.pixels());
    hasher
        .finalize()
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}
