#include "lfic/container.hpp"

#include <array>
#include <cstdio>
#include <cstring>

#include "lfic/error.hpp"

namespace lfic {

namespace {

constexpr char kMagic[4] = {'L', 'F', 'I', 'C'};
constexpr uint8_t kVersion = 1;

std::array<uint32_t, 256> make_crc_table() {
  std::array<uint32_t, 256> table{};
  for (uint32_t i = 0; i < 256; ++i) {
    uint32_t c = i;
    for (int bit = 0; bit < 8; ++bit)
      c = (c & 1) ? 0xEDB88320u ^ (c >> 1) : c >> 1;
    table[i] = c;
  }
  return table;
}

void put_u16(std::vector<uint8_t>& out, uint16_t v) {
  out.push_back(static_cast<uint8_t>(v & 0xFF));
  out.push_back(static_cast<uint8_t>(v >> 8));
}

void put_u32(std::vector<uint8_t>& out, uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<uint8_t>((v >> (8 * i)) & 0xFF));
}

uint16_t get_u16(const uint8_t* p) {
  return static_cast<uint16_t>(p[0] | (p[1] << 8));
}

uint32_t get_u32(const uint8_t* p) {
  return static_cast<uint32_t>(p[0]) | (static_cast<uint32_t>(p[1]) << 8) |
         (static_cast<uint32_t>(p[2]) << 16) | (static_cast<uint32_t>(p[3]) << 24);
}

} // namespace

uint32_t crc32(std::span<const uint8_t> bytes) {
  static const auto table = make_crc_table();
  uint32_t c = 0xFFFFFFFFu;
  for (const uint8_t b : bytes) c = table[(c ^ b) & 0xFF] ^ (c >> 8);
  return c ^ 0xFFFFFFFFu;
}

void ContainerParams::validate() const {
  if (orig_height == 0 || orig_width == 0)
    fail(Errc::bad_field, "container dimensions must be positive");
  if (channels != 1 && channels != 3)
    fail(Errc::bad_field, "container channels must be 1 or 3");
  if (max_block != 4 && max_block != 8)
    fail(Errc::bad_field, "container max block must be 4 or 8");
  if (levels < 2) fail(Errc::bad_field, "container levels must be at least 2");
  if (flags & 0x01) fail(Errc::bad_field, "per-channel mask flag is reserved");
}

std::vector<uint8_t> write_container(const Container& c) {
  c.params.validate();
  std::vector<uint8_t> out;
  out.reserve(kContainerOverhead + c.mask_bytes.size() + c.residual_bytes.size());
  out.insert(out.end(), kMagic, kMagic + 4);
  out.push_back(kVersion);
  put_u16(out, c.params.orig_height);
  put_u16(out, c.params.orig_width);
  out.push_back(c.params.channels);
  out.push_back(c.params.max_block);
  out.push_back(c.params.levels);
  out.push_back(c.params.flags);
  put_u32(out, static_cast<uint32_t>(c.mask_bytes.size()));
  put_u32(out, static_cast<uint32_t>(c.residual_bytes.size()));
  out.insert(out.end(), c.mask_bytes.begin(), c.mask_bytes.end());
  out.insert(out.end(), c.residual_bytes.begin(), c.residual_bytes.end());
  put_u32(out, crc32(out));
  return out;
}

Container read_container(std::span<const uint8_t> bytes) {
  if (bytes.size() < 4) fail(Errc::truncated_container, "shorter than the magic");
  if (std::memcmp(bytes.data(), kMagic, 4) != 0)
    fail(Errc::bad_magic, "not an LFIC container");
  if (bytes.size() < kContainerHeaderSize)
    fail(Errc::truncated_container, "header incomplete");
  if (bytes[4] != kVersion) fail(Errc::unsupported_version, "unknown container version");

  Container c;
  c.params.orig_height = get_u16(bytes.data() + 5);
  c.params.orig_width = get_u16(bytes.data() + 7);
  c.params.channels = bytes[9];
  c.params.max_block = bytes[10];
  c.params.levels = bytes[11];
  c.params.flags = bytes[12];
  const uint32_t mask_len = get_u32(bytes.data() + 13);
  const uint32_t resid_len = get_u32(bytes.data() + 17);

  const size_t need = kContainerOverhead + static_cast<size_t>(mask_len) + resid_len;
  if (bytes.size() < need) fail(Errc::truncated_container, "payload incomplete");
  if (bytes.size() > need) fail(Errc::bad_field, "trailing bytes after checksum");

  const size_t body = need - 4;
  const uint32_t stored = get_u32(bytes.data() + body);
  const uint32_t computed = crc32(bytes.subspan(0, body));
  if (stored != computed) fail(Errc::checksum_mismatch, "container CRC does not match");

  c.params.validate();
  const uint8_t* p = bytes.data() + kContainerHeaderSize;
  c.mask_bytes.assign(p, p + mask_len);
  c.residual_bytes.assign(p + mask_len, p + mask_len + resid_len);
  return c;
}

double container_bpp(size_t total_bytes, int orig_height, int orig_width) {
  return 8.0 * static_cast<double>(total_bytes) /
         (static_cast<double>(orig_height) * orig_width);
}

std::string inspect(std::span<const uint8_t> bytes) {
  const Container c = read_container(bytes);
  const size_t mask = c.mask_bytes.size();
  const size_t resid = c.residual_bytes.size();
  const double bpp = container_bpp(bytes.size(), c.params.orig_height,
                                   c.params.orig_width);
  const double overhead =
      mask + resid == 0 ? 0.0 : static_cast<double>(mask) / (mask + resid);
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "LFIC container v1\n"
                "dims: %ux%ux%u\n"
                "max block: %u\n"
                "levels: %u\n"
                "mask bytes: %zu\n"
                "residual bytes: %zu\n"
                "total bytes: %zu\n"
                "bpp: %.6f\n"
                "mask overhead: %.6f\n",
                c.params.orig_height, c.params.orig_width, c.params.channels,
                c.params.max_block, c.params.levels, mask, resid, bytes.size(), bpp,
                overhead);
  return buf;
}

} // namespace lfic
