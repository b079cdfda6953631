#include "lfic/codec.hpp"

#include "lfic/error.hpp"
#include "lfic/residuals.hpp"

namespace lfic {

EncodedImage encode_padded(const ImageF& padded, int orig_height, int orig_width,
                           const MaskGrid& mask, const QuantSpec& spec) {
  const auto tiles = pool_tile_means(padded, mask);
  const ImageF mosaic =
      assemble_rap(tiles, mask, padded.height, padded.width, padded.channels);

  EncodedImage enc;
  enc.mask = mask;
  enc.mosaic = quantize(mosaic, spec);

  Container c;
  c.params.orig_height = static_cast<uint16_t>(orig_height);
  c.params.orig_width = static_cast<uint16_t>(orig_width);
  c.params.channels = static_cast<uint8_t>(padded.channels);
  c.params.max_block = static_cast<uint8_t>(mask.max_block);
  c.params.levels = static_cast<uint8_t>(spec.levels);
  c.mask_bytes = encode_mask(mask);
  c.residual_bytes = code_residuals(enc.mosaic, mask, spec);
  enc.mask_segment = c.mask_bytes.size();
  enc.residual_segment = c.residual_bytes.size();
  enc.bytes = write_container(c);
  enc.bpp = container_bpp(enc.bytes.size(), orig_height, orig_width);
  return enc;
}

EncodedImage encode_fixed(const ImageU8& img, const MaskGrid& mask,
                          const QuantSpec& spec) {
  if (img.height > 0xFFFF || img.width > 0xFFFF)
    fail(Errc::invalid_argument, "image dimensions exceed the container's 16-bit fields");
  const PaddedImage padded = pad_to_superblocks(img, mask.max_block);
  return encode_padded(padded.image, img.height, img.width, mask, spec);
}

DecodedImage decode_container(std::span<const uint8_t> bytes) {
  const Container c = read_container(bytes);
  const int n_max = c.params.max_block;
  const int super_rows = (c.params.orig_height + n_max - 1) / n_max;
  const int super_cols = (c.params.orig_width + n_max - 1) / n_max;

  DecodedImage dec;
  dec.params = c.params;
  dec.mask = decode_mask(c.mask_bytes, super_rows, super_cols, n_max);

  QuantSpec spec;
  spec.levels = c.params.levels;
  dec.mosaic = decode_residuals(c.residual_bytes, dec.mask, spec, c.params.channels);

  const ImageF padded = dequantize(dec.mosaic, spec);
  dec.image = crop(padded.to_u8(), c.params.orig_height, c.params.orig_width);
  return dec;
}

} // namespace lfic
