#include "lfic/residuals.hpp"

#include "lfic/entropy.hpp"
#include "lfic/error.hpp"

namespace lfic {

std::vector<uint8_t> encode_mask(const MaskGrid& mask) {
  mask.validate();
  const auto set = BlockSizeSet::for_max(mask.max_block);
  AdaptiveModel model(set.count());
  RangeEncoder enc;
  for (const uint8_t n : mask.cells) {
    const int s = set.index_of(n);
    enc.encode(model.cum(s), model.freq(s), model.total());
    model.update(s);
  }
  return enc.finish();
}

MaskGrid decode_mask(std::span<const uint8_t> bytes, int super_rows, int super_cols,
                     int max_block) {
  const auto set = BlockSizeSet::for_max(max_block);
  MaskGrid mask = MaskGrid::uniform(super_rows, super_cols, max_block, max_block);
  AdaptiveModel model(set.count());
  RangeDecoder dec(bytes);
  for (auto& cell : mask.cells) {
    uint32_t cum = 0, freq = 0;
    const int s = model.find(dec.decode_target(model.total()), cum, freq);
    dec.consume(cum, freq);
    model.update(s);
    cell = static_cast<uint8_t>(set.allowed()[s]);
  }
  return mask;
}

namespace {

void check_plane_fits(const IndexPlane& q, const MaskGrid& mask) {
  if (q.height != mask.super_rows * mask.max_block ||
      q.width != mask.super_cols * mask.max_block)
    fail(Errc::shape_mismatch, "index plane does not match mask coverage");
}

int predictor(const IndexPlane& q, int y, int x, int c) {
  if (y == 0 && x == 0) return 0;
  if (y == 0) return q.at(0, x - 1, c);
  return q.at(y - 1, x, c);
}

} // namespace

std::vector<uint8_t> code_residuals(const IndexPlane& q, const MaskGrid& mask,
                                    const QuantSpec& spec) {
  spec.validate();
  mask.validate();
  check_plane_fits(q, mask);
  const int n_max = mask.max_block;
  const int offset = spec.levels - 1;
  AdaptiveModel model(2 * spec.levels - 1);
  RangeEncoder enc;
  for (int sr = 0; sr < mask.super_rows; ++sr) {
    for (int sc = 0; sc < mask.super_cols; ++sc) {
      const int n = mask.cell(sr, sc);
      const int per_side = n_max / n;
      for (int tr = 0; tr < per_side; ++tr) {
        for (int tc = 0; tc < per_side; ++tc) {
          const int y0 = sr * n_max + tr * n;
          const int x0 = sc * n_max + tc * n;
          for (int c = 0; c < q.channels; ++c) {
            const int32_t v = q.at(y0, x0, c);
            for (int dy = 0; dy < n; ++dy)
              for (int dx = 0; dx < n; ++dx)
                if (q.at(y0 + dy, x0 + dx, c) != v)
                  fail(Errc::inconsistent_mosaic,
                       "mosaic varies inside a mask tile");
            const int e = static_cast<int>(v) - predictor(q, y0, x0, c);
            const int s = e + offset;
            enc.encode(model.cum(s), model.freq(s), model.total());
            model.update(s);
          }
        }
      }
    }
  }
  return enc.finish();
}

IndexPlane decode_residuals(std::span<const uint8_t> bytes, const MaskGrid& mask,
                            const QuantSpec& spec, int channels) {
  spec.validate();
  mask.validate();
  if (channels != 1 && channels != 3)
    fail(Errc::invalid_argument, "channel count must be 1 or 3");
  const int n_max = mask.max_block;
  IndexPlane q;
  q.height = mask.super_rows * n_max;
  q.width = mask.super_cols * n_max;
  q.channels = channels;
  q.values.assign(static_cast<size_t>(q.height) * q.width * channels, 0);
  const int offset = spec.levels - 1;
  AdaptiveModel model(2 * spec.levels - 1);
  RangeDecoder dec(bytes);
  for (int sr = 0; sr < mask.super_rows; ++sr) {
    for (int sc = 0; sc < mask.super_cols; ++sc) {
      const int n = mask.cell(sr, sc);
      const int per_side = n_max / n;
      for (int tr = 0; tr < per_side; ++tr) {
        for (int tc = 0; tc < per_side; ++tc) {
          const int y0 = sr * n_max + tr * n;
          const int x0 = sc * n_max + tc * n;
          for (int c = 0; c < channels; ++c) {
            uint32_t cum = 0, freq = 0;
            const int s = model.find(dec.decode_target(model.total()), cum, freq);
            dec.consume(cum, freq);
            model.update(s);
            const int v = (s - offset) + predictor(q, y0, x0, c);
            if (v < 0 || v >= spec.levels)
              fail(Errc::out_of_range, "decoded index outside quantizer range");
            for (int dy = 0; dy < n; ++dy)
              for (int dx = 0; dx < n; ++dx)
                q.at(y0 + dy, x0 + dx, c) = v;
          }
        }
      }
    }
  }
  return q;
}

} // namespace lfic
