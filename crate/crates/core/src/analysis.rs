//! Image statistics used to compare census outputs, and the Hamming distance
//! between census codes.
//!
//! The metrics are proxies: `rms_contrast` for contrast, `mean_gradient_magnitude`
//! for crispness and `shannon_entropy_bits` for texture richness.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::census::{transform, CensusCode, TransformKind};
use crate::image::{GrayImage, PadMode};

/// Number of differing bits between two codes.
pub fn hamming_distance(a: CensusCode, b: CensusCode) -> u32 {
    (a.0 ^ b.0).count_ones()
}

fn is_true(b: &bool) -> bool {
    *b
}

fn default_true() -> bool {
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MetricsReport {
    /// Population standard deviation of the intensities.
    pub rms_contrast: f64,
    /// Mean of `|dx| + |dy|` over forward differences; the last row and
    /// column have no forward neighbor and are excluded.
    pub mean_gradient_magnitude: f64,
    /// Base-2 entropy of the 256-bin histogram.
    pub shannon_entropy_bits: f64,
    /// False when the image is narrower or shorter than 2 pixels, in which
    /// case the gradient term is reported as 0.
    #[serde(default = "default_true", skip_serializing_if = "is_true")]
    pub gradient_defined: bool,
}

pub fn compute_metrics(img: &GrayImage) -> MetricsReport {
    let pixels = img.pixels();
    let n = pixels.len() as f64;

    let mut histogram = [0u64; 256];
    for &p in pixels {
        histogram[p as usize] += 1;
    }

    let mean = pixels.iter().map(|&p| p as f64).sum::<f64>() / n;
    let variance = pixels
        .iter()
        .map(|&p| {
            let d = p as f64 - mean;
            d * d
        })
        .sum::<f64>()
        / n;

    let entropy = histogram
        .iter()
        .filter(|&&count| count > 0)
        .map(|&count| {
            let p = count as f64 / n;
            p * (1.0 / p).log2()
        })
        .sum::<f64>();

    let (w, h) = (img.width(), img.height());
    let gradient_defined = w >= 2 && h >= 2;
    let mean_gradient_magnitude = if gradient_defined {
        let mut total = 0u64;
        for y in 0..h - 1 {
            let row = img.row(y);
            let below = img.row(y + 1);
            for x in 0..w - 1 {
                total += row[x + 1].abs_diff(row[x]) as u64 + below[x].abs_diff(row[x]) as u64;
            }
        }
        total as f64 / ((w - 1) * (h - 1)) as f64
    } else {
        0.0
    };

    MetricsReport {
        rms_contrast: variance.sqrt(),
        mean_gradient_magnitude,
        shannon_entropy_bits: entropy.clamp(0.0, 8.0),
        gradient_defined,
    }
}

impl fmt::Display for MetricsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "rms_contrast            {:.6}", self.rms_contrast)?;
        write!(
            f,
            "mean_gradient_magnitude {:.6}",
            self.mean_gradient_magnitude
        )?;
        if !self.gradient_defined {
            write!(f, " (undefined: image smaller than 2x2)")?;
        }
        writeln!(f)?;
        writeln!(
            f,
            "shannon_entropy_bits    {:.6}",
            self.shannon_entropy_bits
        )
    }
}

/// Metrics of an input image and of both census outputs.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CompareReport {
    pub input: MetricsReport,
    pub ct3: MetricsReport,
    pub ct4x4: MetricsReport,
}

pub fn compare_transforms(img: &GrayImage) -> CompareReport {
    let ct3 = transform(img, TransformKind::Ct3, PadMode::Replicate);
    let ct4 = transform(img, TransformKind::Ct4x4, PadMode::Replicate);
    CompareReport {
        input: compute_metrics(img),
        ct3: compute_metrics(&ct3),
        ct4x4: compute_metrics(&ct4),
    }
}

impl fmt::Display for CompareReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "# proxies: rms_contrast ~ contrast, mean_gradient_magnitude ~ crispness, shannon_entropy_bits ~ texture"
        )?;
        writeln!(
            f,
            "{:<24} {:>14} {:>14} {:>14}",
            "metric", "input", "ct3", "ct4x4"
        )?;
        type Field = fn(&MetricsReport) -> f64;
        let rows: [(&str, Field); 3] = [
            ("rms_contrast", |m| m.rms_contrast),
            ("mean_gradient_magnitude", |m| m.mean_gradient_magnitude),
            ("shannon_entropy_bits", |m| m.shannon_entropy_bits),
        ];
        for (name, get) in rows {
            writeln!(
                f,
                "{:<24} {:>14.6} {:>14.6} {:>14.6}",
                name,
                get(&self.input),
                get(&self.ct3),
                get(&self.ct4x4)
            )?;
        }
        Ok(())
    }
}
