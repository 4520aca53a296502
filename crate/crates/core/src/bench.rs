//! Throughput measurement for both transforms on a seeded random image.

use std::fmt;
use std::hint::black_box;
use std::time::Instant;

use serde::Serialize;

use crate::census::{transform, transform_parallel, TransformKind};
use crate::image::{GrayImage, PadMode};
use crate::synth::{checksum, random_image};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BenchConfig {
    pub width: usize,
    pub height: usize,
    pub iters: usize,
    pub seed: u64,
    pub parallel: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct KernelTiming {
    pub kernel: TransformKind,
    pub seconds: f64,
    pub megapixels_per_second: f64,
    pub output_checksum: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchReport {
    pub width: usize,
    pub height: usize,
    pub iters: usize,
    pub seed: u64,
    pub input_checksum: String,
    pub ct3: KernelTiming,
    pub ct4x4: KernelTiming,
    /// ct4x4 throughput divided by ct3 throughput.
    pub ratio_ct4x4_over_ct3: f64,
}

fn time_kernel(img: &GrayImage, kind: TransformKind, iters: usize, parallel: bool) -> KernelTiming {
    let run = |img: &GrayImage| {
        if parallel {
            transform_parallel(img, kind, PadMode::Replicate)
        } else {
            transform(img, kind, PadMode::Replicate)
        }
    };
    let output = run(img);
    let start = Instant::now();
    for _ in 0..iters {
        black_box(run(black_box(img)));
    }
    // clamp so a sub-resolution timing on tiny inputs stays finite and positive
    let seconds = start.elapsed().as_secs_f64().max(1e-9);
    let megapixels = (img.pixels().len() * iters) as f64 / 1e6;
    KernelTiming {
        kernel: kind,
        seconds,
        megapixels_per_second: megapixels / seconds,
        output_checksum: checksum(&output),
    }
}

/// Panics if `width`, `height` or `iters` is zero; the CLI validates first.
pub fn run_bench(config: &BenchConfig) -> BenchReport {
    assert!(config.iters > 0, "iters must be positive");
    let img = random_image(config.width, config.height, config.seed)
        .expect("bench dimensions must be positive");
    let ct3 = time_kernel(&img, TransformKind::Ct3, config.iters, config.parallel);
    let ct4x4 = time_kernel(&img, TransformKind::Ct4x4, config.iters, config.parallel);
    BenchReport {
        width: config.width,
        height: config.height,
        iters: config.iters,
        seed: config.seed,
        input_checksum: checksum(&img),
        ratio_ct4x4_over_ct3: ct4x4.megapixels_per_second / ct3.megapixels_per_second,
        ct3,
        ct4x4,
    }
}

impl fmt::Display for BenchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "image {}x{} seed {} iters {}",
            self.width, self.height, self.seed, self.iters
        )?;
        writeln!(f, "input checksum {}", self.input_checksum)?;
        for t in [&self.ct3, &self.ct4x4] {
            writeln!(
                f,
                "{:<4} {:>10.3} MP/s  {:>9.4} s  output {}",
                t.kernel.label(),
                t.megapixels_per_second,
                t.seconds,
                t.output_checksum
            )?;
        }
        writeln!(f, "ratio ct4x4/ct3 {:.3}", self.ratio_ct4x4_over_ct3)
    }
}
