//! C ABI for census4x4.
//!
//! Images cross the boundary as opaque `CensusImage` handles created by
//! `census_image_new`, `census_read_pgm` or `census_transform` and released
//! with `census_image_free`. Every fallible call returns a `CensusStatus`;
//! on failure `census_last_error_message` describes the most recent error on
//! the calling thread.
//!
//! Enum arguments are passed as `uint32_t` and validated, so an out-of-range
//! value from C yields `CENSUS_STATUS_INVALID_ARGUMENT` instead of undefined
//! behavior.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use census4x4::{GrayImage, PadMode, PgmVariant, TransformKind};

/// Opaque image handle.
pub struct CensusImage(GrayImage);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CensusStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    InvalidDimensions = 3,
    BufferTooSmall = 4,
    FormatError = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CensusKernel {
    K3x3 = 0,
    K4x4 = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CensusPgmVariant {
    P2 = 0,
    P5 = 1,
}

/// Image statistics, see `census_compute_metrics`.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct CensusMetrics {
    pub rms_contrast: f64,
    pub mean_gradient_magnitude: f64,
    pub shannon_entropy_bits: f64,
    /// 0 when the image is smaller than 2x2 and the gradient term is 0.
    pub gradient_defined: u8,
}

/// Heap bytes owned by the library; release with `census_buffer_free`.
#[repr(C)]
#[derive(Debug)]
pub struct CensusBuffer {
    pub data: *mut u8,
    pub len: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(status: CensusStatus, msg: impl Into<String>) -> CensusStatus {
    set_error(msg);
    status
}

fn guard(f: impl FnOnce() -> CensusStatus) -> CensusStatus {
    catch_unwind(AssertUnwindSafe(f))
        .unwrap_or_else(|_| fail(CensusStatus::Panic, "internal panic"))
}

fn image_error(e: census4x4::Error) -> CensusStatus {
    fail(CensusStatus::InvalidDimensions, e.to_string())
}

fn kernel_from(raw: u32) -> Option<TransformKind> {
    match raw {
        x if x == CensusKernel::K3x3 as u32 => Some(TransformKind::Ct3),
        x if x == CensusKernel::K4x4 as u32 => Some(TransformKind::Ct4x4),
        _ => None,
    }
}

fn variant_from(raw: u32) -> Option<PgmVariant> {
    match raw {
        x if x == CensusPgmVariant::P2 as u32 => Some(PgmVariant::AsciiP2),
        x if x == CensusPgmVariant::P5 as u32 => Some(PgmVariant::BinaryP5),
        _ => None,
    }
}

unsafe fn out_image(out: *mut *mut CensusImage, img: GrayImage) {
    *out = Box::into_raw(Box::new(CensusImage(img)));
}

/// Message for the last failed call on this thread, or NULL. The pointer is
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn census_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Copies `len` row-major pixels into a new image.
#[no_mangle]
pub unsafe extern "C" fn census_image_new(
    width: usize,
    height: usize,
    pixels: *const u8,
    len: usize,
    out: *mut *mut CensusImage,
) -> CensusStatus {
    guard(|| {
        if pixels.is_null() || out.is_null() {
            return fail(CensusStatus::NullPointer, "pixels and out must be non-null");
        }
        let data = std::slice::from_raw_parts(pixels, len).to_vec();
        match GrayImage::new(width, height, data) {
            Ok(img) => {
                out_image(out, img);
                CensusStatus::Ok
            }
            Err(e) => image_error(e),
        }
    })
}

/// Releases an image. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn census_image_free(image: *mut CensusImage) {
    if !image.is_null() {
        drop(Box::from_raw(image));
    }
}

/// Width in pixels, or 0 for NULL.
#[no_mangle]
pub unsafe extern "C" fn census_image_width(image: *const CensusImage) -> usize {
    image.as_ref().map_or(0, |i| i.0.width())
}

/// Height in pixels, or 0 for NULL.
#[no_mangle]
pub unsafe extern "C" fn census_image_height(image: *const CensusImage) -> usize {
    image.as_ref().map_or(0, |i| i.0.height())
}

/// Copies the pixels into `dst`, which must hold at least width * height bytes.
#[no_mangle]
pub unsafe extern "C" fn census_image_copy_pixels(
    image: *const CensusImage,
    dst: *mut u8,
    dst_len: usize,
) -> CensusStatus {
    guard(|| {
        let Some(img) = image.as_ref() else {
            return fail(CensusStatus::NullPointer, "image is null");
        };
        if dst.is_null() {
            return fail(CensusStatus::NullPointer, "dst is null");
        }
        let src = img.0.pixels();
        if dst_len < src.len() {
            return fail(
                CensusStatus::BufferTooSmall,
                format!("need {} bytes, got {dst_len}", src.len()),
            );
        }
        ptr::copy_nonoverlapping(src.as_ptr(), dst, src.len());
        CensusStatus::Ok
    })
}

/// Runs the 3x3 (`kernel` = 0) or 4x4 (`kernel` = 1) census transform with
/// replicate borders. The result has the input's dimensions.
#[no_mangle]
pub unsafe extern "C" fn census_transform(
    image: *const CensusImage,
    kernel: u32,
    out: *mut *mut CensusImage,
) -> CensusStatus {
    guard(|| {
        let (Some(img), false) = (image.as_ref(), out.is_null()) else {
            return fail(CensusStatus::NullPointer, "image and out must be non-null");
        };
        let Some(kind) = kernel_from(kernel) else {
            return fail(
                CensusStatus::InvalidArgument,
                format!("unknown kernel {kernel}"),
            );
        };
        out_image(out, census4x4::transform(&img.0, kind, PadMode::Replicate));
        CensusStatus::Ok
    })
}

/// Transforms one row-major 4x4 block; `input` and `output` each point to
/// 16 bytes.
#[no_mangle]
pub unsafe extern "C" fn census_transform_block_4x4(
    input: *const u8,
    output: *mut u8,
) -> CensusStatus {
    guard(|| {
        if input.is_null() || output.is_null() {
            return fail(
                CensusStatus::NullPointer,
                "input and output must be non-null",
            );
        }
        let mut block = [0u8; 16];
        block.copy_from_slice(std::slice::from_raw_parts(input, 16));
        let result = census4x4::transform_block_4x4(&census4x4::Block4(block));
        ptr::copy_nonoverlapping(result.0.as_ptr(), output, 16);
        CensusStatus::Ok
    })
}

/// Encodes `reference` against `count` neighbors; `count` must be 8.
#[no_mangle]
pub unsafe extern "C" fn census_bits(
    reference: u8,
    neighbors: *const u8,
    count: usize,
    out: *mut u8,
) -> CensusStatus {
    guard(|| {
        if neighbors.is_null() || out.is_null() {
            return fail(
                CensusStatus::NullPointer,
                "neighbors and out must be non-null",
            );
        }
        let slice = std::slice::from_raw_parts(neighbors, count);
        match census4x4::census_bits(reference, slice) {
            Ok(code) => {
                *out = code.0;
                CensusStatus::Ok
            }
            Err(e) => fail(CensusStatus::InvalidArgument, e.to_string()),
        }
    })
}

#[no_mangle]
pub extern "C" fn census_hamming_distance(a: u8, b: u8) -> u32 {
    census4x4::hamming_distance(census4x4::CensusCode(a), census4x4::CensusCode(b))
}

/// Decodes a P2 or P5 byte stream with maxval 255.
#[no_mangle]
pub unsafe extern "C" fn census_read_pgm(
    bytes: *const u8,
    len: usize,
    out: *mut *mut CensusImage,
) -> CensusStatus {
    guard(|| {
        if bytes.is_null() || out.is_null() {
            return fail(CensusStatus::NullPointer, "bytes and out must be non-null");
        }
        match census4x4::read_pgm(std::slice::from_raw_parts(bytes, len)) {
            Ok(img) => {
                out_image(out, img);
                CensusStatus::Ok
            }
            Err(e) => fail(CensusStatus::FormatError, e.to_string()),
        }
    })
}

/// Encodes an image as P2 (`variant` = 0) or P5 (`variant` = 1).
#[no_mangle]
pub unsafe extern "C" fn census_write_pgm(
    image: *const CensusImage,
    variant: u32,
    out: *mut CensusBuffer,
) -> CensusStatus {
    guard(|| {
        let (Some(img), Some(out)) = (image.as_ref(), out.as_mut()) else {
            return fail(CensusStatus::NullPointer, "image and out must be non-null");
        };
        let Some(variant) = variant_from(variant) else {
            return fail(
                CensusStatus::InvalidArgument,
                format!("unknown PGM variant {variant}"),
            );
        };
        let bytes = census4x4::write_pgm(&img.0, variant).into_boxed_slice();
        out.len = bytes.len();
        out.data = Box::into_raw(bytes) as *mut u8;
        CensusStatus::Ok
    })
}

/// Releases a buffer from `census_write_pgm` and resets it to empty.
#[no_mangle]
pub unsafe extern "C" fn census_buffer_free(buffer: *mut CensusBuffer) {
    let Some(buffer) = buffer.as_mut() else {
        return;
    };
    if !buffer.data.is_null() {
        drop(Box::from_raw(ptr::slice_from_raw_parts_mut(
            buffer.data,
            buffer.len,
        )));
    }
    buffer.data = ptr::null_mut();
    buffer.len = 0;
}

#[no_mangle]
pub unsafe extern "C" fn census_compute_metrics(
    image: *const CensusImage,
    out: *mut CensusMetrics,
) -> CensusStatus {
    guard(|| {
        let (Some(img), Some(out)) = (image.as_ref(), out.as_mut()) else {
            return fail(CensusStatus::NullPointer, "image and out must be non-null");
        };
        let m = census4x4::compute_metrics(&img.0);
        *out = CensusMetrics {
            rms_contrast: m.rms_contrast,
            mean_gradient_magnitude: m.mean_gradient_magnitude,
            shannon_entropy_bits: m.shannon_entropy_bits,
            gradient_defined: m.gradient_defined as u8,
        };
        CensusStatus::Ok
    })
}
