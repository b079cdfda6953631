#include "lfic/entropy.hpp"

#include "lfic/error.hpp"

namespace lfic {

namespace {
constexpr uint32_t kTopValue = 1u << 24;
constexpr uint32_t kMaxTotal = 1u << 16;
} // namespace

AdaptiveModel::AdaptiveModel(int alphabet) : alphabet_(alphabet) {
  if (alphabet < 1 || static_cast<uint32_t>(alphabet) >= kMaxTotal)
    fail(Errc::invalid_argument, "alphabet size out of range");
  counts_.assign(alphabet_, 1);
  rebuild();
}

void AdaptiveModel::rebuild() {
  tree_.assign(alphabet_ + 1, 0);
  total_ = 0;
  for (int s = 0; s < alphabet_; ++s) {
    total_ += counts_[s];
    for (int i = s + 1; i <= alphabet_; i += i & -i) tree_[i] += counts_[s];
  }
}

uint32_t AdaptiveModel::cum(int symbol) const {
  uint32_t sum = 0;
  for (int i = symbol; i > 0; i -= i & -i) sum += tree_[i];
  return sum;
}

int AdaptiveModel::find(uint32_t target, uint32_t& cum_out, uint32_t& freq_out) const {
  int pos = 0;
  uint32_t rest = target;
  int step = 1;
  while (step * 2 <= alphabet_) step *= 2;
  for (; step > 0; step >>= 1) {
    const int next = pos + step;
    if (next <= alphabet_ && tree_[next] <= rest) {
      rest -= tree_[next];
      pos = next;
    }
  }
  if (pos >= alphabet_) pos = alphabet_ - 1; // unreachable for target < total
  cum_out = cum(pos);
  freq_out = counts_[pos];
  return pos;
}

void AdaptiveModel::update(int symbol) {
  counts_[symbol] += 1;
  for (int i = symbol + 1; i <= alphabet_; i += i & -i) tree_[i] += 1;
  total_ += 1;
  if (total_ >= kMaxTotal) {
    for (auto& c : counts_) c = (c + 1) >> 1;
    rebuild();
  }
}

void RangeEncoder::shift_low() {
  if (static_cast<uint32_t>(low_) < 0xFF000000u || (low_ >> 32) != 0) {
    uint8_t byte = cache_;
    const uint8_t carry = static_cast<uint8_t>(low_ >> 32);
    do {
      out_.push_back(static_cast<uint8_t>(byte + carry));
      byte = 0xFF;
    } while (--cache_size_ != 0);
    cache_ = static_cast<uint8_t>(low_ >> 24);
  }
  ++cache_size_;
  low_ = (low_ & 0x00FFFFFFull) << 8;
}

void RangeEncoder::encode(uint32_t cum, uint32_t freq, uint32_t total) {
  const uint32_t r = range_ / total;
  low_ += static_cast<uint64_t>(r) * cum;
  range_ = r * freq;
  while (range_ < kTopValue) {
    shift_low();
    range_ <<= 8;
  }
}

std::vector<uint8_t> RangeEncoder::finish() {
  for (int i = 0; i < 5; ++i) shift_low();
  return std::move(out_);
}

RangeDecoder::RangeDecoder(std::span<const uint8_t> bytes) : bytes_(bytes) {
  for (int i = 0; i < 5; ++i) code_ = (code_ << 8) | next_byte();
}

uint8_t RangeDecoder::next_byte() {
  if (pos_ >= bytes_.size())
    fail(Errc::truncated_payload, "range-coded stream ended early");
  return bytes_[pos_++];
}

uint32_t RangeDecoder::decode_target(uint32_t total) {
  range_ /= total;
  uint32_t t = code_ / range_;
  if (t >= total) t = total - 1; // malformed input; round-trips never hit this
  return t;
}

void RangeDecoder::consume(uint32_t cum, uint32_t freq) {
  code_ -= cum * range_;
  range_ *= freq;
  while (range_ < kTopValue) {
    code_ = (code_ << 8) | next_byte();
    range_ <<= 8;
  }
}

std::vector<uint8_t> ac_encode(std::span<const int> symbols, int alphabet) {
  AdaptiveModel model(alphabet);
  RangeEncoder enc;
  for (const int s : symbols) {
    if (s < 0 || s >= alphabet)
      fail(Errc::out_of_range, "symbol outside alphabet");
    enc.encode(model.cum(s), model.freq(s), model.total());
    model.update(s);
  }
  return enc.finish();
}

std::vector<int> ac_decode(std::span<const uint8_t> bytes, size_t count,
                           int alphabet) {
  AdaptiveModel model(alphabet);
  std::vector<int> symbols;
  symbols.reserve(count);
  if (count == 0) return symbols;
  RangeDecoder dec(bytes);
  for (size_t i = 0; i < count; ++i) {
    uint32_t cum = 0, freq = 0;
    const int s = model.find(dec.decode_target(model.total()), cum, freq);
    dec.consume(cum, freq);
    model.update(s);
    symbols.push_back(s);
  }
  return symbols;
}

} // namespace lfic
