#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace lfic {

// Order-0 adaptive frequency model: every count starts at 1 and the coded
// symbol's count is incremented by 1. Counts are halved (floor, minimum 1)
// when the total reaches 1<<16, identically on both sides. Cumulative
// frequencies come from a Fenwick tree.
class AdaptiveModel {
public:
  explicit AdaptiveModel(int alphabet);

  int alphabet() const { return alphabet_; }
  uint32_t total() const { return total_; }

  uint32_t freq(int symbol) const { return counts_[symbol]; }
  uint32_t cum(int symbol) const; // sum of counts below symbol
  // largest symbol with cum(symbol) <= target; fills its (cum, freq)
  int find(uint32_t target, uint32_t& cum_out, uint32_t& freq_out) const;
  void update(int symbol);

private:
  void rebuild();

  int alphabet_;
  uint32_t total_;
  std::vector<uint32_t> counts_;
  std::vector<uint32_t> tree_; // 1-based Fenwick over counts_
};

// 32-bit range coder with carry handling (cache + pending-0xFF run) and a
// 5-byte termination; streams are byte-exact across platforms.
class RangeEncoder {
public:
  void encode(uint32_t cum, uint32_t freq, uint32_t total);
  std::vector<uint8_t> finish();

private:
  void shift_low();

  std::vector<uint8_t> out_;
  uint64_t low_ = 0;
  uint32_t range_ = 0xFFFFFFFFu;
  uint8_t cache_ = 0;
  uint64_t cache_size_ = 1;
};

class RangeDecoder {
public:
  explicit RangeDecoder(std::span<const uint8_t> bytes);

  uint32_t decode_target(uint32_t total); // in [0, total)
  void consume(uint32_t cum, uint32_t freq);

private:
  uint8_t next_byte();

  std::span<const uint8_t> bytes_;
  size_t pos_ = 0;
  uint32_t range_ = 0xFFFFFFFFu;
  uint32_t code_ = 0;
};

// One-shot adaptive coding of a symbol sequence over [0, alphabet).
std::vector<uint8_t> ac_encode(std::span<const int> symbols, int alphabet);
std::vector<int> ac_decode(std::span<const uint8_t> bytes, size_t count,
                           int alphabet);

} // namespace lfic
