#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace lfic {

// Wire format, all multi-byte integers little-endian:
//   0  magic "LFIC"
//   4  version (1)
//   5  origHeight u16
//   7  origWidth  u16
//   9  channels   u8   (1 or 3)
//  10  maxBlock   u8   (4 or 8)
//  11  levels     u8   (2..255)
//  12  flags      u8   (bit0 reserved for per-channel masks, must be 0)
//  13  maskByteLen     u32
//  17  residualByteLen u32
//  21  mask segment, then residual segment
//  end CRC-32 (reflected, poly 0xEDB88320) over all preceding bytes
struct ContainerParams {
  uint16_t orig_height = 0;
  uint16_t orig_width = 0;
  uint8_t channels = 0;
  uint8_t max_block = 8;
  uint8_t levels = 8;
  uint8_t flags = 0;

  void validate() const;
};

struct Container {
  ContainerParams params;
  std::vector<uint8_t> mask_bytes;
  std::vector<uint8_t> residual_bytes;
};

constexpr size_t kContainerHeaderSize = 21;
constexpr size_t kContainerOverhead = kContainerHeaderSize + 4; // + checksum

uint32_t crc32(std::span<const uint8_t> bytes);

std::vector<uint8_t> write_container(const Container& c);
Container read_container(std::span<const uint8_t> bytes);

// Human-readable header/size summary; bpp counts every container byte over
// the original (unpadded) pixel count.
std::string inspect(std::span<const uint8_t> bytes);

double container_bpp(size_t total_bytes, int orig_height, int orig_width);

} // namespace lfic
