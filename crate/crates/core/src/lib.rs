//! Census transforms for 8-bit grayscale images.
//!
//! Two operators are provided:
//!
//! - [`census::ct3_transform`]: the classic census transform, where every pixel is
//!   encoded against its 3x3 neighborhood.
//! - [`census::ct4_transform`]: a block transform over non-overlapping 4x4 tiles.
//!   Each of the 16 positions in a tile is encoded against the other eight
//!   members of one of the four overlapping 3x3 groups inside the tile.
//!
//! Images larger than a tile are padded by edge replication, transformed and
//! cropped back, so output dimensions always equal input dimensions.
//!
//! Around the operators sit a PGM codec ([`pnm`]), image metrics used to compare
//! the two outputs ([`analysis`]), seeded synthetic inputs ([`synth`]), a
//! throughput harness ([`bench`]) and the `census` command line ([`cli`]).

pub mod analysis;
pub mod bench;
pub mod census;
pub mod cli;
pub mod error;
pub mod image;
pub mod pnm;
pub mod synth;

pub use analysis::{
    compare_transforms, compute_metrics, hamming_distance, CompareReport, MetricsReport,
};
pub use census::{
    census_bits, ct3_transform, ct4_transform, group_neighbor_positions, transform,
    transform_block_4x4, transform_parallel, CensusCode, GroupSelector, TransformKind,
};
pub use error::{Error, Result};
pub use image::{
    assemble_blocks, crop, pad_to_multiple, tile_blocks, Block4, GrayImage, PadMode, Padded,
};
pub use pnm::{read_pgm, write_pgm, PgmError, PgmVariant};
