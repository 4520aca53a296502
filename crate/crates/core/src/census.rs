//! Census operators: the 8-bit comparison code, the overlapping-group
//! assignment of the 4x4 kernel, the block transform, and the whole-image
//! 3x3 and 4x4 transforms.
//!
//! Both transforms share one comparison convention: a bit is 0 when the
//! reference intensity is strictly greater than the neighbor and 1 otherwise
//! (ties give 1), and the first neighbor in traversal order lands in the most
//! significant bit.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::image::{crop, pad_to_multiple, Block4, GrayImage, PadMode, BLOCK};

/// One 8-bit census code.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CensusCode(pub u8);

impl CensusCode {
    pub fn value(self) -> u8 {
        self.0
    }
}

impl From<CensusCode> for u8 {
    fn from(code: CensusCode) -> u8 {
        code.0
    }
}

impl std::fmt::Binary for CensusCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Binary::fmt(&self.0, f)
    }
}

#[inline(always)]
fn bit(reference: u8, neighbor: u8) -> u8 {
    (reference <= neighbor) as u8
}

#[inline(always)]
fn encode(reference: u8, neighbors: [u8; 8]) -> u8 {
    let mut code = 0u8;
    for n in neighbors {
        code = (code << 1) | bit(reference, n);
    }
    code
}

/// Encodes `reference` against exactly eight ordered neighbors.
pub fn census_bits(reference: u8, neighbors: &[u8]) -> Result<CensusCode> {
    let neighbors: [u8; 8] = neighbors
        .try_into()
        .map_err(|_| Error::NeighborCount(neighbors.len()))?;
    Ok(CensusCode(encode(reference, neighbors)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RowBand {
    /// Block rows 0..=2.
    Top,
    /// Block rows 1..=3.
    Bottom,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ColBand {
    /// Block columns 0..=2.
    Left,
    /// Block columns 1..=3.
    Right,
}

/// One of the four overlapping 3x3 groups inside the 4x4 kernel.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroupSelector {
    pub row_band: RowBand,
    pub col_band: ColBand,
}

impl GroupSelector {
    pub const TOP_LEFT: Self = Self::new(RowBand::Top, ColBand::Left);
    pub const TOP_RIGHT: Self = Self::new(RowBand::Top, ColBand::Right);
    pub const BOTTOM_LEFT: Self = Self::new(RowBand::Bottom, ColBand::Left);
    pub const BOTTOM_RIGHT: Self = Self::new(RowBand::Bottom, ColBand::Right);

    pub const fn new(row_band: RowBand, col_band: ColBand) -> Self {
        Self { row_band, col_band }
    }

    /// Group used by the reference at `(row, col)`: even rows take the top
    /// band, odd rows the bottom band; even columns the left band, odd
    /// columns the right band.
    pub fn for_position(row: usize, col: usize) -> Result<Self> {
        if row >= BLOCK || col >= BLOCK {
            return Err(Error::PositionOutOfRange { row, col });
        }
        Ok(Self::for_position_unchecked(row, col))
    }

    const fn for_position_unchecked(row: usize, col: usize) -> Self {
        let row_band = if row.is_multiple_of(2) {
            RowBand::Top
        } else {
            RowBand::Bottom
        };
        let col_band = if col.is_multiple_of(2) {
            ColBand::Left
        } else {
            ColBand::Right
        };
        Self::new(row_band, col_band)
    }

    /// First row and column of the group.
    pub const fn origin(self) -> (usize, usize) {
        let r = match self.row_band {
            RowBand::Top => 0,
            RowBand::Bottom => 1,
        };
        let c = match self.col_band {
            ColBand::Left => 0,
            ColBand::Right => 1,
        };
        (r, c)
    }

    pub fn contains(self, row: usize, col: usize) -> bool {
        let (r0, c0) = self.origin();
        (r0..r0 + 3).contains(&row) && (c0..c0 + 3).contains(&col)
    }
}

const fn build_neighbor_table() -> [[(usize, usize); 8]; 16] {
    let mut table = [[(0, 0); 8]; 16];
    let mut idx = 0;
    while idx < 16 {
        let (row, col) = (idx / BLOCK, idx % BLOCK);
        let (r0, c0) = GroupSelector::for_position_unchecked(row, col).origin();
        let mut k = 0;
        let mut r = r0;
        while r < r0 + 3 {
            let mut c = c0;
            while c < c0 + 3 {
                if r != row || c != col {
                    table[idx][k] = (r, c);
                    k += 1;
                }
                c += 1;
            }
            r += 1;
        }
        idx += 1;
    }
    table
}

/// Ordered neighbor positions for every kernel position, indexed `r * 4 + c`.
pub const NEIGHBOR_TABLE: [[(usize, usize); 8]; 16] = build_neighbor_table();

const fn flatten(table: &[[(usize, usize); 8]; 16]) -> [[usize; 8]; 16] {
    let mut flat = [[0; 8]; 16];
    let mut i = 0;
    while i < 16 {
        let mut k = 0;
        while k < 8 {
            flat[i][k] = table[i][k].0 * BLOCK + table[i][k].1;
            k += 1;
        }
        i += 1;
    }
    flat
}

const FLAT_NEIGHBORS: [[usize; 8]; 16] = flatten(&NEIGHBOR_TABLE);

/// The eight members of the group assigned to `(row, col)`, excluding the
/// position itself, in raster order of the group.
pub fn group_neighbor_positions(row: usize, col: usize) -> Result<[(usize, usize); 8]> {
    if row >= BLOCK || col >= BLOCK {
        return Err(Error::PositionOutOfRange { row, col });
    }
    Ok(NEIGHBOR_TABLE[row * BLOCK + col])
}

#[inline(always)]
fn encode_block(v: &[u8; 16]) -> [u8; 16] {
    let mut out = [0u8; 16];
    for (idx, slot) in out.iter_mut().enumerate() {
        let n = &FLAT_NEIGHBORS[idx];
        let reference = v[idx];
        let mut code = 0u8;
        for &k in n {
            code = (code << 1) | bit(reference, v[k]);
        }
        *slot = code;
    }
    out
}

/// Applies the 4x4 census transform to one block. Every output position is
/// computed from the same input block.
pub fn transform_block_4x4(block: &Block4) -> Block4 {
    Block4(encode_block(block.values()))
}

/// Which whole-image operator to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TransformKind {
    /// Classic per-pixel 3x3 census transform.
    #[serde(rename = "3x3")]
    Ct3,
    /// Block-wise 4x4 census transform.
    #[serde(rename = "4x4")]
    Ct4x4,
}

impl TransformKind {
    pub fn label(self) -> &'static str {
        match self {
            TransformKind::Ct3 => "3x3",
            TransformKind::Ct4x4 => "4x4",
        }
    }
}

impl std::fmt::Display for TransformKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

impl std::str::FromStr for TransformKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "3x3" => Ok(TransformKind::Ct3),
            "4x4" => Ok(TransformKind::Ct4x4),
            other => Err(format!("unknown kernel '{other}', expected 3x3 or 4x4")),
        }
    }
}

// Transforms one band of four padded rows. `src` and `dst` are both
// `width * 4` long and `width` is a multiple of 4.
fn ct4_band(src: &[u8], dst: &mut [u8], width: usize) {
    let mut block = [0u8; 16];
    for tx in (0..width).step_by(BLOCK) {
        for r in 0..BLOCK {
            let start = r * width + tx;
            block[r * BLOCK..(r + 1) * BLOCK].copy_from_slice(&src[start..start + BLOCK]);
        }
        let out = encode_block(&block);
        for r in 0..BLOCK {
            let start = r * width + tx;
            dst[start..start + BLOCK].copy_from_slice(&out[r * BLOCK..(r + 1) * BLOCK]);
        }
    }
}

fn ct4_impl(img: &GrayImage, pad: PadMode, parallel: bool) -> GrayImage {
    let padded = pad_to_multiple(img, BLOCK, pad).expect("block size is nonzero");
    let src = padded.image;
    let width = src.width();
    let band = width * BLOCK;
    let mut dst = vec![0u8; src.pixels().len()];
    if parallel {
        dst.par_chunks_mut(band)
            .zip(src.pixels().par_chunks(band))
            .for_each(|(d, s)| ct4_band(s, d, width));
    } else {
        dst.chunks_mut(band)
            .zip(src.pixels().chunks(band))
            .for_each(|(d, s)| ct4_band(s, d, width));
    }
    let out = GrayImage::new(width, src.height(), dst).expect("dimensions unchanged");
    crop(&out, padded.original_width, padded.original_height).expect("crop to original size")
}

/// 4x4 census transform over the whole image: replicate-pad to a multiple of
/// four, transform each non-overlapping tile, crop back.
pub fn ct4_transform(img: &GrayImage, pad: PadMode) -> GrayImage {
    ct4_impl(img, pad, false)
}

fn ct3_row(img: &GrayImage, y: usize, dst: &mut [u8]) {
    let w = img.width();
    let up = img.row(y.saturating_sub(1));
    let mid = img.row(y);
    let down = img.row((y + 1).min(img.height() - 1));
    let clamped = |x: usize| {
        let l = x.saturating_sub(1);
        let r = (x + 1).min(w - 1);
        encode(
            mid[x],
            [
                up[l], up[x], up[r], mid[l], mid[r], down[l], down[x], down[r],
            ],
        )
    };
    dst[0] = clamped(0);
    if w > 1 {
        dst[w - 1] = clamped(w - 1);
    }
    if w > 2 {
        let interior = up
            .windows(3)
            .zip(mid.windows(3))
            .zip(down.windows(3))
            .zip(&mut dst[1..w - 1]);
        for (((u, m), d), out) in interior {
            *out = encode(m[1], [u[0], u[1], u[2], m[0], m[2], d[0], d[1], d[2]]);
        }
    }
}

fn ct3_impl(img: &GrayImage, parallel: bool) -> GrayImage {
    let w = img.width();
    let mut dst = vec![0u8; img.pixels().len()];
    if parallel {
        dst.par_chunks_mut(w)
            .enumerate()
            .for_each(|(y, row)| ct3_row(img, y, row));
    } else {
        dst.chunks_mut(w)
            .enumerate()
            .for_each(|(y, row)| ct3_row(img, y, row));
    }
    GrayImage::new(w, img.height(), dst).expect("dimensions unchanged")
}

/// Classic 3x3 census transform. Each pixel is compared against its eight
/// neighbors in raster order; out-of-image neighbors use the nearest edge
/// pixel.
pub fn ct3_transform(img: &GrayImage, pad: PadMode) -> GrayImage {
    match pad {
        PadMode::Replicate => ct3_impl(img, false),
    }
}

pub fn transform(img: &GrayImage, kind: TransformKind, pad: PadMode) -> GrayImage {
    match kind {
        TransformKind::Ct3 => ct3_transform(img, pad),
        TransformKind::Ct4x4 => ct4_transform(img, pad),
    }
}

/// Same result as [`transform`], with rows (3x3) or tile rows (4x4) spread
/// over the current rayon pool.
pub fn transform_parallel(img: &GrayImage, kind: TransformKind, pad: PadMode) -> GrayImage {
    match (kind, pad) {
        (TransformKind::Ct3, PadMode::Replicate) => ct3_impl(img, true),
        (TransformKind::Ct4x4, _) => ct4_impl(img, pad, true),
    }
}
