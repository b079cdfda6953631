#include "lfic/error.hpp"

namespace lfic {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::unsupported_format: return "unsupported-format";
    case Errc::malformed_header: return "malformed-header";
    case Errc::unsupported_maxval: return "unsupported-maxval";
    case Errc::truncated_payload: return "truncated-payload";
    case Errc::bad_magic: return "bad-magic";
    case Errc::unsupported_version: return "unsupported-version";
    case Errc::checksum_mismatch: return "checksum-mismatch";
    case Errc::truncated_container: return "truncated-container";
    case Errc::bad_field: return "bad-field";
    case Errc::shape_mismatch: return "shape-mismatch";
    case Errc::out_of_range: return "out-of-range";
    case Errc::inconsistent_mosaic: return "inconsistent-mosaic";
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::io_failure: return "io-failure";
  }
  return "unknown";
}

Error::Error(Errc code, const std::string& msg)
    : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace lfic
