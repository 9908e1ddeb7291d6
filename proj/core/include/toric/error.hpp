#pragma once

#include <stdexcept>
#include <string>

namespace toric {

/// Failure categories surfaced by the library. `invalid_input` means the
/// caller handed us malformed data; everything else is a mathematical
/// precondition that the inputs fail to satisfy.
enum class errc {
  invalid_input,
  not_sharp,
  not_a_face,
  invalid_fan,
  not_full,
  not_big,
  box_unstable,
  empty_fan,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_input: return "INVALID_INPUT";
    case errc::not_sharp: return "NOT_SHARP";
    case errc::not_a_face: return "NOT_A_FACE";
    case errc::invalid_fan: return "INVALID_FAN";
    case errc::not_full: return "NOT_FULL";
    case errc::not_big: return "NOT_BIG";
    case errc::box_unstable: return "BOX_UNSTABLE";
    case errc::empty_fan: return "EMPTY_FAN";
  }
  return "UNKNOWN";
}

class toric_error : public std::runtime_error {
 public:
  toric_error(errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
        code_(code),
        detail_(detail) {}

  errc code() const { return code_; }
  const std::string& detail() const { return detail_; }
  const char* code_name() const { return errc_name(code_); }

 private:
  errc code_;
  std::string detail_;
};

}  // namespace toric
