#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lfic/quant.hpp"
#include "lfic/rap.hpp"

namespace lfic {

// Mask segment: one symbol per superblock in raster order, the symbol being
// the index of the cell's block size in the allowed set, coded with a fresh
// order-0 adaptive model.
std::vector<uint8_t> encode_mask(const MaskGrid& mask);
MaskGrid decode_mask(std::span<const uint8_t> bytes, int super_rows, int super_cols,
                     int max_block);

// Residual segment. The mosaic is constant inside each tile, so only the
// tile's top-left sample is coded; everything else is recovered from the
// decoded mask. Coded samples are predicted on the full-resolution mosaic
// (left neighbour on the first image row, the sample above elsewhere), the
// residual is offset by +(L-1) into [0, 2L-2], and one adaptive model covers
// the whole segment. Scan order matches the canonical tile order: superblocks
// raster, tiles raster, channels innermost; coded-symbol count is therefore
// K * tile_count().
//
// code_residuals rejects a mosaic that is not constant inside some mask tile.
std::vector<uint8_t> code_residuals(const IndexPlane& q, const MaskGrid& mask,
                                    const QuantSpec& spec);
IndexPlane decode_residuals(std::span<const uint8_t> bytes, const MaskGrid& mask,
                            const QuantSpec& spec, int channels);

} // namespace lfic
