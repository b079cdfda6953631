#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lfic/container.hpp"
#include "lfic/image.hpp"
#include "lfic/quant.hpp"
#include "lfic/rap.hpp"

namespace lfic {

struct EncodedImage {
  std::vector<uint8_t> bytes; // full container
  MaskGrid mask;
  IndexPlane mosaic; // quantized padded mosaic
  size_t mask_segment = 0;
  size_t residual_segment = 0;
  double bpp = 0.0; // over original (unpadded) pixels
};

// Pool/assemble/quantize under a fixed mask and serialize. The padded image
// must already cover the mask.
EncodedImage encode_padded(const ImageF& padded, int orig_height, int orig_width,
                           const MaskGrid& mask, const QuantSpec& spec);

EncodedImage encode_fixed(const ImageU8& img, const MaskGrid& mask,
                          const QuantSpec& spec);

struct DecodedImage {
  ImageU8 image;     // cropped to original dimensions, rounded to 8 bits
  IndexPlane mosaic; // padded quantized mosaic, bit-exact match of the encoder's
  MaskGrid mask;
  ContainerParams params;
};

DecodedImage decode_container(std::span<const uint8_t> bytes);

} // namespace lfic
