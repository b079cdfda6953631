#include "lfic/embed.hpp"

#include <bit>
#include <cmath>
#include <cstring>

#include "lfic/error.hpp"
#include "lfic/kernels.hpp"
#include "lfic/pnm.hpp"
#include "lfic/rng.hpp"

namespace lfic {

namespace {

constexpr char kWeightsMagic[4] = {'L', 'F', 'W', '1'};

int conv_out(int n) { return (n - 1) / 2 + 1; } // 3x3, stride 2, pad 1

void put_u32le(std::vector<uint8_t>& out, uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<uint8_t>((v >> (8 * i)) & 0xFF));
}

void put_f64le(std::vector<uint8_t>& out, double v) {
  const uint64_t bits = std::bit_cast<uint64_t>(v);
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<uint8_t>((bits >> (8 * i)) & 0xFF));
}

struct Reader {
  std::span<const uint8_t> bytes;
  size_t pos = 0;

  void need(size_t n) const {
    if (bytes.size() - pos < n) fail(Errc::truncated_payload, "weights file ended early");
  }
  uint32_t u32() {
    need(4);
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(bytes[pos++]) << (8 * i);
    return v;
  }
  double f64() {
    need(8);
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(bytes[pos++]) << (8 * i);
    return std::bit_cast<double>(v);
  }
};

} // namespace

struct EmbeddingNet::Activations {
  // post-ReLU activation per stage, channel-interleaved [y][x][c]
  std::array<std::vector<double>, kStageCount> act;
  std::array<int, kStageCount> h{}, w{};
};

void EmbeddingNet::pack() {
  for (auto& st : stages_) {
    st.wf.assign(st.weights.size(), 0.0);
    st.wb.assign(st.weights.size(), 0.0);
    for (int oc = 0; oc < st.out_ch; ++oc)
      for (int ic = 0; ic < st.in_ch; ++ic)
        for (int ky = 0; ky < 3; ++ky)
          for (int kx = 0; kx < 3; ++kx) {
            const double v =
                st.weights[((static_cast<size_t>(oc) * st.in_ch + ic) * 3 + ky) * 3 + kx];
            st.wf[((static_cast<size_t>(ky) * 3 + kx) * st.in_ch + ic) * st.out_ch + oc] = v;
            st.wb[((static_cast<size_t>(ky) * 3 + kx) * st.out_ch + oc) * st.in_ch + ic] = v;
          }
  }
}

EmbeddingNet EmbeddingNet::load(std::span<const uint8_t> bytes) {
  Reader r{bytes};
  r.need(4);
  if (std::memcmp(bytes.data(), kWeightsMagic, 4) != 0)
    fail(Errc::bad_magic, "not an LFW1 weights file");
  r.pos = 4;
  const uint32_t stages = r.u32();
  if (stages != kStageCount)
    fail(Errc::bad_field, "weights file must describe exactly 3 stages");

  EmbeddingNet net;
  for (int s = 0; s < kStageCount; ++s) {
    net.stages_[s].in_ch = static_cast<int>(r.u32());
    net.stages_[s].out_ch = static_cast<int>(r.u32());
  }
  const int k0 = net.stages_[0].in_ch;
  if (k0 != 1 && k0 != 3) fail(Errc::bad_field, "first stage must take 1 or 3 channels");
  for (int s = 0; s < kStageCount; ++s) {
    if (net.stages_[s].out_ch != kWidths[s])
      fail(Errc::bad_field, "stage widths must be 8/16/32");
    if (s > 0 && net.stages_[s].in_ch != net.stages_[s - 1].out_ch)
      fail(Errc::bad_field, "stage input does not chain from previous output");
  }
  for (auto& st : net.stages_) {
    st.weights.resize(static_cast<size_t>(st.out_ch) * st.in_ch * 9);
    st.bias.resize(st.out_ch);
    for (auto& v : st.weights) v = r.f64();
    for (auto& v : st.bias) v = r.f64();
    for (const double v : st.weights)
      if (!std::isfinite(v)) fail(Errc::bad_field, "non-finite weight");
    for (const double v : st.bias)
      if (!std::isfinite(v)) fail(Errc::bad_field, "non-finite bias");
  }
  if (r.pos != bytes.size()) fail(Errc::bad_field, "trailing bytes in weights file");
  net.pack();
  return net;
}

EmbeddingNet EmbeddingNet::load_file(const std::filesystem::path& path) {
  return load(read_file(path));
}

std::vector<uint8_t> EmbeddingNet::serialize() const {
  std::vector<uint8_t> out;
  out.insert(out.end(), kWeightsMagic, kWeightsMagic + 4);
  put_u32le(out, kStageCount);
  for (const auto& st : stages_) {
    put_u32le(out, static_cast<uint32_t>(st.in_ch));
    put_u32le(out, static_cast<uint32_t>(st.out_ch));
  }
  for (const auto& st : stages_) {
    for (const double v : st.weights) put_f64le(out, v);
    for (const double v : st.bias) put_f64le(out, v);
  }
  return out;
}

EmbeddingNet EmbeddingNet::zero(int input_channels) {
  if (input_channels != 1 && input_channels != 3)
    fail(Errc::invalid_argument, "input channels must be 1 or 3");
  EmbeddingNet net;
  int in = input_channels;
  for (int s = 0; s < kStageCount; ++s) {
    auto& st = net.stages_[s];
    st.in_ch = in;
    st.out_ch = kWidths[s];
    st.weights.assign(static_cast<size_t>(st.out_ch) * st.in_ch * 9, 0.0);
    st.bias.assign(st.out_ch, 0.0);
    in = st.out_ch;
  }
  net.pack();
  return net;
}

EmbeddingNet EmbeddingNet::fixture(int input_channels, uint64_t seed) {
  EmbeddingNet net = zero(input_channels);
  SplitMix64 rng(seed);
  for (auto& st : net.stages_) {
    const double scale = std::sqrt(1.0 / (st.in_ch * 9));
    for (auto& v : st.weights) v = rng.next_range(-scale, scale);
    for (auto& v : st.bias) v = rng.next_range(-0.1, 0.1);
  }
  net.pack();
  return net;
}

EmbeddingNet::Activations EmbeddingNet::run_forward(const ImageF& img) const {
  if (img.channels != input_channels())
    fail(Errc::shape_mismatch, "image channels do not match the network input");
  const auto& k = kernels::active();

  std::vector<double> cur(img.samples.size());
  for (size_t i = 0; i < cur.size(); ++i) cur[i] = img.samples[i] / 255.0;
  int h = img.height, w = img.width;

  Activations a;
  for (int s = 0; s < kStageCount; ++s) {
    const auto& st = stages_[s];
    const int oh = conv_out(h), ow = conv_out(w);
    a.act[s].resize(static_cast<size_t>(oh) * ow * st.out_ch);
    k.conv3x3s2_fwd(cur.data(), h, w, st.in_ch, st.wf.data(), st.bias.data(),
                    a.act[s].data(), oh, ow, st.out_ch);
    k.relu(a.act[s].data(), a.act[s].size());
    a.h[s] = oh;
    a.w[s] = ow;
    cur = a.act[s];
    h = oh;
    w = ow;
  }
  return a;
}

std::array<double, EmbeddingNet::kEmbeddingDim> EmbeddingNet::forward(
    const ImageF& img) const {
  const Activations a = run_forward(img);
  const auto& top = a.act[kStageCount - 1];
  const int hw = a.h[kStageCount - 1] * a.w[kStageCount - 1];
  std::array<double, kEmbeddingDim> emb{};
  for (int p = 0; p < hw; ++p)
    for (int c = 0; c < kEmbeddingDim; ++c) emb[c] += top[static_cast<size_t>(p) * kEmbeddingDim + c];
  for (auto& v : emb) v /= hw;
  return emb;
}

ImageF EmbeddingNet::backward(const ImageF& img,
                              std::span<const double, kEmbeddingDim> grad_emb) const {
  const Activations a = run_forward(img);
  const auto& k = kernels::active();

  // d(embedding)/d(top activation): grad_emb / (h*w), broadcast spatially
  const int top = kStageCount - 1;
  const int hw_top = a.h[top] * a.w[top];
  std::vector<double> grad(static_cast<size_t>(hw_top) * kEmbeddingDim);
  for (int p = 0; p < hw_top; ++p)
    for (int c = 0; c < kEmbeddingDim; ++c)
      grad[static_cast<size_t>(p) * kEmbeddingDim + c] = grad_emb[c] / hw_top;

  for (int s = top; s >= 0; --s) {
    const auto& st = stages_[s];
    k.relu_mask(a.act[s].data(), grad.data(), grad.size());
    const int ih = s == 0 ? img.height : a.h[s - 1];
    const int iw = s == 0 ? img.width : a.w[s - 1];
    std::vector<double> din(static_cast<size_t>(ih) * iw * st.in_ch);
    k.conv3x3s2_bwd(grad.data(), a.h[s], a.w[s], st.out_ch, st.wb.data(), din.data(),
                    ih, iw, st.in_ch);
    grad = std::move(din);
  }

  ImageF out = ImageF::make(img.height, img.width, img.channels);
  // input normalization contributes 1/255
  for (size_t i = 0; i < grad.size(); ++i) out.samples[i] = grad[i] / 255.0;
  return out;
}

} // namespace lfic
