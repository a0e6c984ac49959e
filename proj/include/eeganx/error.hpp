#pragma once

#include <stdexcept>
#include <string>

namespace eeganx {

// All toolkit failures carry a stable machine-parseable code plus human text.
// The CLI prints them as "error: <code>: <message>" on a single line.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

namespace errc {
inline constexpr const char* bad_format = "E_BAD_FORMAT";
inline constexpr const char* truncated = "E_TRUNCATED";
inline constexpr const char* unsupported = "E_UNSUPPORTED";
inline constexpr const char* bad_argument = "E_BAD_ARGUMENT";
inline constexpr const char* degenerate = "E_DEGENERATE";
inline constexpr const char* too_short = "E_TOO_SHORT";
inline constexpr const char* missing_artifact = "E_MISSING_ARTIFACT";
inline constexpr const char* fingerprint_mismatch = "E_FINGERPRINT_MISMATCH";
inline constexpr const char* io = "E_IO";
inline constexpr const char* diverged = "E_DIVERGED";
}  // namespace errc

}  // namespace eeganx
