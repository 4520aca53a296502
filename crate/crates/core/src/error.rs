use thiserror::Error;

/// Errors raised by the image model and the census operators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("image dimensions must be positive, got {width}x{height}")]
    ZeroDimension { width: usize, height: usize },

    #[error("pixel buffer holds {actual} values, expected {expected} for {width}x{height}")]
    LengthMismatch {
        width: usize,
        height: usize,
        expected: usize,
        actual: usize,
    },

    #[error("dimensions {width}x{height} are not multiples of 4")]
    NotMultipleOf4 { width: usize, height: usize },

    #[error("got {actual} blocks, expected {expected} for {width}x{height}")]
    BlockCountMismatch {
        width: usize,
        height: usize,
        expected: usize,
        actual: usize,
    },

    #[error("cannot crop {src_width}x{src_height} image to {width}x{height}")]
    CropTooLarge {
        src_width: usize,
        src_height: usize,
        width: usize,
        height: usize,
    },

    #[error("padding multiple must be at least 1")]
    ZeroMultiple,

    #[error("census comparison needs exactly 8 neighbors, got {0}")]
    NeighborCount(usize),

    #[error("block position ({row}, {col}) is outside the 4x4 kernel")]
    PositionOutOfRange { row: usize, col: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
