#include "lfic/pnm.hpp"

#include <cstdio>
#include <cstring>
#include <fstream>
#include <string>

#include "lfic/error.hpp"

namespace lfic {

namespace {

struct Cursor {
  std::span<const uint8_t> bytes;
  size_t pos = 0;

  bool eof() const { return pos >= bytes.size(); }
  uint8_t peek() const { return bytes[pos]; }
  uint8_t take() { return bytes[pos++]; }
};

bool is_space(uint8_t c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

// whitespace and '#' comments between header tokens
void skip_separators(Cursor& cur) {
  for (;;) {
    while (!cur.eof() && is_space(cur.peek())) cur.take();
    if (!cur.eof() && cur.peek() == '#') {
      while (!cur.eof() && cur.take() != '\n') {
      }
      continue;
    }
    return;
  }
}

int read_header_int(Cursor& cur, const char* what) {
  skip_separators(cur);
  if (cur.eof() || cur.peek() < '0' || cur.peek() > '9')
    fail(Errc::malformed_header, std::string("expected integer for ") + what);
  long v = 0;
  while (!cur.eof() && cur.peek() >= '0' && cur.peek() <= '9') {
    v = v * 10 + (cur.take() - '0');
    if (v > 1 << 20) fail(Errc::malformed_header, std::string(what) + " out of range");
  }
  return static_cast<int>(v);
}

} // namespace

ImageU8 load_pnm(std::span<const uint8_t> bytes) {
  Cursor cur{bytes};
  if (bytes.size() < 2) fail(Errc::malformed_header, "input shorter than a magic number");
  const char m0 = static_cast<char>(cur.take());
  const char m1 = static_cast<char>(cur.take());
  if (m0 != 'P' || (m1 != '5' && m1 != '6'))
    fail(Errc::unsupported_format,
         std::string("magic '") + m0 + m1 + "' is not binary PGM/PPM");
  const int channels = m1 == '5' ? 1 : 3;

  const int width = read_header_int(cur, "width");
  const int height = read_header_int(cur, "height");
  const int maxval = read_header_int(cur, "maxval");
  if (width <= 0 || height <= 0) fail(Errc::malformed_header, "non-positive dimensions");
  if (maxval != 255) fail(Errc::unsupported_maxval, "maxval must be 255");
  if (cur.eof() || !is_space(cur.take()))
    fail(Errc::malformed_header, "missing whitespace before payload");

  const size_t need = static_cast<size_t>(width) * height * channels;
  if (bytes.size() - cur.pos < need)
    fail(Errc::truncated_payload, "payload shorter than width*height*channels");

  ImageU8 img = ImageU8::make(height, width, channels);
  std::memcpy(img.samples.data(), bytes.data() + cur.pos, need);
  return img;
}

std::vector<uint8_t> save_pnm(const ImageU8& img) {
  char header[64];
  const int n = std::snprintf(header, sizeof header, "P%c\n%d %d\n255\n",
                              img.channels == 1 ? '5' : '6', img.width, img.height);
  std::vector<uint8_t> out;
  out.reserve(static_cast<size_t>(n) + img.samples.size());
  out.insert(out.end(), header, header + n);
  out.insert(out.end(), img.samples.begin(), img.samples.end());
  return out;
}

std::vector<uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::io_failure, "cannot open " + path.string());
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
  if (in.bad()) fail(Errc::io_failure, "read failed for " + path.string());
  return bytes;
}

void write_file_atomic(const std::filesystem::path& path,
                       std::span<const uint8_t> bytes) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(Errc::io_failure, "cannot create " + tmp.string());
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      fail(Errc::io_failure, "write failed for " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    fail(Errc::io_failure, "rename failed for " + path.string());
  }
}

ImageU8 read_pnm_file(const std::filesystem::path& path) {
  return load_pnm(read_file(path));
}

void write_pnm_file(const std::filesystem::path& path, const ImageU8& img) {
  write_file_atomic(path, save_pnm(img));
}

} // namespace lfic
