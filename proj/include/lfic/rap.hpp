#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lfic/image.hpp"

namespace lfic {

// Block sizes available under a maximum superblock size N: the divisors of N.
// N=8 -> {1,2,4,8}, N=4 -> {1,2,4}.
struct BlockSizeSet {
  int max_size = 8;

  static BlockSizeSet for_max(int n); // throws unless n is 4 or 8

  std::span<const int> allowed() const;
  int count() const { return static_cast<int>(allowed().size()); }
  int index_of(int n) const;   // throws if n not allowed
  int next_smaller(int n) const; // throws at n == 1
};

// One block-size decision per N x N superblock, shared across channels.
struct MaskGrid {
  int super_rows = 0;
  int super_cols = 0;
  int max_block = 8;
  std::vector<uint8_t> cells; // block size n, row-major over superblocks

  static MaskGrid uniform(int super_rows, int super_cols, int max_block, int cell);

  int cell(int r, int c) const { return cells[static_cast<size_t>(r) * super_cols + c]; }
  void set_cell(int r, int c, int n) {
    cells[static_cast<size_t>(r) * super_cols + c] = static_cast<uint8_t>(n);
  }
  size_t cell_count() const { return cells.size(); }
  // total tiles = sum over superblocks of (N/n)^2
  uint64_t tile_count() const;
  bool fully_refined() const; // all cells at n == 1
  void validate() const;

  bool operator==(const MaskGrid&) const = default;
};

struct PaddedImage {
  ImageF image;     // dimensions are multiples of max_block
  int orig_height = 0;
  int orig_width = 0;
};

// Edge-replication padding up to the next multiples of n_max.
PaddedImage pad_to_superblocks(const ImageU8& img, int n_max);

ImageU8 crop(const ImageU8& img, int height, int width);

// Per-tile, per-channel means in canonical scan order: superblocks in raster
// order, tiles inside a superblock in raster order, channels innermost.
// Length = K * tile_count(). Tile sums use pairwise reduction, which keeps
// pooling of an already piecewise-constant image exact.
std::vector<double> pool_tile_means(const ImageF& img, const MaskGrid& mask);

// Inverse of the scan: every pixel of a tile takes the tile's value.
ImageF assemble_rap(std::span<const double> tiles, const MaskGrid& mask, int height,
                    int width, int channels);

} // namespace lfic
