#pragma once

#include <stdexcept>
#include <string>

namespace lfic {

enum class Errc {
  // pnm
  unsupported_format,
  malformed_header,
  unsupported_maxval,
  truncated_payload,
  // container
  bad_magic,
  unsupported_version,
  checksum_mismatch,
  truncated_container,
  bad_field,
  // general
  shape_mismatch,
  out_of_range,
  inconsistent_mosaic,
  invalid_argument,
  io_failure,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& msg);
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& msg);

} // namespace lfic
