#include "lfic/rap.hpp"

#include <array>

#include "lfic/error.hpp"

namespace lfic {

namespace {

constexpr std::array<int, 3> kAllowed4{1, 2, 4};
constexpr std::array<int, 4> kAllowed8{1, 2, 4, 8};

} // namespace

BlockSizeSet BlockSizeSet::for_max(int n) {
  if (n != 4 && n != 8) fail(Errc::invalid_argument, "max block size must be 4 or 8");
  return BlockSizeSet{n};
}

std::span<const int> BlockSizeSet::allowed() const {
  if (max_size == 4) return kAllowed4;
  return kAllowed8;
}

int BlockSizeSet::index_of(int n) const {
  const auto sizes = allowed();
  for (int i = 0; i < static_cast<int>(sizes.size()); ++i)
    if (sizes[i] == n) return i;
  fail(Errc::invalid_argument, "block size not in allowed set");
}

int BlockSizeSet::next_smaller(int n) const {
  const int i = index_of(n);
  if (i == 0) fail(Errc::invalid_argument, "no block size below 1");
  return allowed()[i - 1];
}

MaskGrid MaskGrid::uniform(int super_rows, int super_cols, int max_block, int cell) {
  if (super_rows <= 0 || super_cols <= 0)
    fail(Errc::invalid_argument, "empty mask grid");
  BlockSizeSet::for_max(max_block).index_of(cell);
  MaskGrid m;
  m.super_rows = super_rows;
  m.super_cols = super_cols;
  m.max_block = max_block;
  m.cells.assign(static_cast<size_t>(super_rows) * super_cols,
                 static_cast<uint8_t>(cell));
  return m;
}

uint64_t MaskGrid::tile_count() const {
  uint64_t total = 0;
  for (const uint8_t n : cells) {
    const uint64_t per_side = static_cast<uint64_t>(max_block) / n;
    total += per_side * per_side;
  }
  return total;
}

bool MaskGrid::fully_refined() const {
  for (const uint8_t n : cells)
    if (n != 1) return false;
  return true;
}

void MaskGrid::validate() const {
  if (super_rows <= 0 || super_cols <= 0 ||
      cells.size() != static_cast<size_t>(super_rows) * super_cols)
    fail(Errc::invalid_argument, "mask grid dimensions inconsistent");
  const auto set = BlockSizeSet::for_max(max_block);
  for (const uint8_t n : cells) set.index_of(n);
}

PaddedImage pad_to_superblocks(const ImageU8& img, int n_max) {
  BlockSizeSet::for_max(n_max);
  const int ph = (img.height + n_max - 1) / n_max * n_max;
  const int pw = (img.width + n_max - 1) / n_max * n_max;
  PaddedImage out;
  out.orig_height = img.height;
  out.orig_width = img.width;
  if (ph == img.height && pw == img.width) {
    out.image = ImageF::from_u8(img);
    return out;
  }
  out.image = ImageF::make(ph, pw, img.channels);
  for (int y = 0; y < ph; ++y) {
    const int sy = y < img.height ? y : img.height - 1;
    for (int x = 0; x < pw; ++x) {
      const int sx = x < img.width ? x : img.width - 1;
      for (int c = 0; c < img.channels; ++c)
        out.image.at(y, x, c) = static_cast<double>(img.at(sy, sx, c));
    }
  }
  return out;
}

ImageU8 crop(const ImageU8& img, int height, int width) {
  if (height > img.height || width > img.width)
    fail(Errc::invalid_argument, "crop larger than image");
  if (height == img.height && width == img.width) return img;
  ImageU8 out = ImageU8::make(height, width, img.channels);
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x)
      for (int c = 0; c < img.channels; ++c) out.at(y, x, c) = img.at(y, x, c);
  return out;
}

namespace {

void check_mask_fits(const ImageF& img, const MaskGrid& mask) {
  mask.validate();
  if (img.height != mask.super_rows * mask.max_block ||
      img.width != mask.super_cols * mask.max_block)
    fail(Errc::shape_mismatch, "mask grid does not cover the image");
}

// pairwise tree sum of buf[0..n), n a power of two
double pairwise_sum(double* buf, int n) {
  for (int width = n; width > 1; width >>= 1) {
    const int half = width >> 1;
    for (int i = 0; i < half; ++i) buf[i] = buf[2 * i] + buf[2 * i + 1];
  }
  return buf[0];
}

} // namespace

std::vector<double> pool_tile_means(const ImageF& img, const MaskGrid& mask) {
  check_mask_fits(img, mask);
  const int n_max = mask.max_block;
  const int k = img.channels;
  std::vector<double> tiles;
  tiles.reserve(static_cast<size_t>(mask.tile_count()) * k);
  double buf[64];
  for (int sr = 0; sr < mask.super_rows; ++sr) {
    for (int sc = 0; sc < mask.super_cols; ++sc) {
      const int n = mask.cell(sr, sc);
      const int per_side = n_max / n;
      const double inv_area = 1.0 / (n * n);
      for (int tr = 0; tr < per_side; ++tr) {
        for (int tc = 0; tc < per_side; ++tc) {
          const int y0 = sr * n_max + tr * n;
          const int x0 = sc * n_max + tc * n;
          for (int c = 0; c < k; ++c) {
            int m = 0;
            for (int dy = 0; dy < n; ++dy)
              for (int dx = 0; dx < n; ++dx)
                buf[m++] = img.at(y0 + dy, x0 + dx, c);
            tiles.push_back(pairwise_sum(buf, m) * inv_area);
          }
        }
      }
    }
  }
  return tiles;
}

ImageF assemble_rap(std::span<const double> tiles, const MaskGrid& mask, int height,
                    int width, int channels) {
  mask.validate();
  if (height != mask.super_rows * mask.max_block ||
      width != mask.super_cols * mask.max_block)
    fail(Errc::shape_mismatch, "mask grid does not cover the requested shape");
  if (tiles.size() != mask.tile_count() * static_cast<uint64_t>(channels))
    fail(Errc::shape_mismatch, "tile list length does not match mask");
  ImageF out = ImageF::make(height, width, channels);
  const int n_max = mask.max_block;
  size_t t = 0;
  for (int sr = 0; sr < mask.super_rows; ++sr) {
    for (int sc = 0; sc < mask.super_cols; ++sc) {
      const int n = mask.cell(sr, sc);
      const int per_side = n_max / n;
      for (int tr = 0; tr < per_side; ++tr) {
        for (int tc = 0; tc < per_side; ++tc) {
          const int y0 = sr * n_max + tr * n;
          const int x0 = sc * n_max + tc * n;
          for (int c = 0; c < channels; ++c) {
            const double v = tiles[t++];
            for (int dy = 0; dy < n; ++dy)
              for (int dx = 0; dx < n; ++dx) out.at(y0 + dy, x0 + dx, c) = v;
          }
        }
      }
    }
  }
  return out;
}

} // namespace lfic
