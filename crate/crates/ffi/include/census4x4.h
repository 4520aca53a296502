#ifndef CENSUS4X4_H
#define CENSUS4X4_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CensusStatus {
  CENSUS_STATUS_OK = 0,
  CENSUS_STATUS_NULL_POINTER = 1,
  CENSUS_STATUS_INVALID_ARGUMENT = 2,
  CENSUS_STATUS_INVALID_DIMENSIONS = 3,
  CENSUS_STATUS_BUFFER_TOO_SMALL = 4,
  CENSUS_STATUS_FORMAT_ERROR = 5,
  CENSUS_STATUS_PANIC = 6,
} CensusStatus;

typedef enum CensusKernel {
  CENSUS_KERNEL_K3X3 = 0,
  CENSUS_KERNEL_K4X4 = 1,
} CensusKernel;

typedef enum CensusPgmVariant {
  CENSUS_PGM_VARIANT_P2 = 0,
  CENSUS_PGM_VARIANT_P5 = 1,
} CensusPgmVariant;

// Opaque image handle.
typedef struct CensusImage CensusImage;

// Heap bytes owned by the library; release with `census_buffer_free`.
typedef struct CensusBuffer {
  uint8_t *data;
  size_t len;
} CensusBuffer;

// Image statistics, see `census_compute_metrics`.
typedef struct CensusMetrics {
  double rms_contrast;
  double mean_gradient_magnitude;
  double shannon_entropy_bits;
  // 0 when the image is smaller than 2x2 and the gradient term is 0.
  uint8_t gradient_defined;
} CensusMetrics;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or NULL. The pointer is
// valid until the next failing call on the same thread.
const char *census_last_error_message(void);

// Copies `len` row-major pixels into a new image.
enum CensusStatus census_image_new(size_t width,
                                   size_t height,
                                   const uint8_t *pixels,
                                   size_t len,
                                   struct CensusImage **out);

// Releases an image. NULL is ignored.
void census_image_free(struct CensusImage *image);

// Width in pixels, or 0 for NULL.
size_t census_image_width(const struct CensusImage *image);

// Height in pixels, or 0 for NULL.
size_t census_image_height(const struct CensusImage *image);

// Copies the pixels into `dst`, which must hold at least width * height bytes.
enum CensusStatus census_image_copy_pixels(const struct CensusImage *image,
                                           uint8_t *dst,
                                           size_t dst_len);

// Runs the 3x3 (`kernel` = 0) or 4x4 (`kernel` = 1) census transform with
// replicate borders. The result has the input's dimensions.
enum CensusStatus census_transform(const struct CensusImage *image,
                                   uint32_t kernel,
                                   struct CensusImage **out);

// Transforms one row-major 4x4 block; `input` and `output` each point to
// 16 bytes.
enum CensusStatus census_transform_block_4x4(const uint8_t *input, uint8_t *output);

// Encodes `reference` against `count` neighbors; `count` must be 8.
enum CensusStatus census_bits(uint8_t reference,
                              const uint8_t *neighbors,
                              size_t count,
                              uint8_t *out);

uint32_t census_hamming_distance(uint8_t a, uint8_t b);

// Decodes a P2 or P5 byte stream with maxval 255.
enum CensusStatus census_read_pgm(const uint8_t *bytes, size_t len, struct CensusImage **out);

// Encodes an image as P2 (`variant` = 0) or P5 (`variant` = 1).
enum CensusStatus census_write_pgm(const struct CensusImage *image,
                                   uint32_t variant,
                                   struct CensusBuffer *out);

// Releases a buffer from `census_write_pgm` and resets it to empty.
void census_buffer_free(struct CensusBuffer *buffer);

enum CensusStatus census_compute_metrics(const struct CensusImage *image,
                                         struct CensusMetrics *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CENSUS4X4_H */
