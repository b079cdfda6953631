#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "lfic/image.hpp"

namespace lfic {

// Binary PGM (P5) / PPM (P6), maxval 255 only. '#' comments are accepted in
// the header. No metadata survives a round trip.
ImageU8 load_pnm(std::span<const uint8_t> bytes);
std::vector<uint8_t> save_pnm(const ImageU8& img);

ImageU8 read_pnm_file(const std::filesystem::path& path);
// Writes to a temp file in the same directory and renames into place.
void write_pnm_file(const std::filesystem::path& path, const ImageU8& img);

std::vector<uint8_t> read_file(const std::filesystem::path& path);
void write_file_atomic(const std::filesystem::path& path,
                       std::span<const uint8_t> bytes);

} // namespace lfic
