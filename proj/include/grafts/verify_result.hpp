#pragma once

#include <cstddef>
#include <optional>
#include <string>

namespace grafts {

/// Verdict of a certificate replay; on failure names the first failing step
/// (nullopt when the failure concerns the whole object).
struct VerifyResult {
  bool ok = true;
  std::optional<std::size_t> failed_step;
  std::string reason;

  explicit operator bool() const { return ok; }
  static VerifyResult fail(std::optional<std::size_t> step, std::string why) {
    return {false, step, std::move(why)};
  }
};

}  // namespace grafts
