#pragma once

#include <stdexcept>
#include <string>

namespace wavekit {

// Domain error carrying a stable machine-readable code (EmptyWord,
// NotRealizable, BoundaryCompressible, ...). The CLI prints code() verbatim.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& detail)
      : std::runtime_error(detail.empty() ? code : code + ": " + detail),
        code_(std::move(code)),
        detail_(detail) {}

  const std::string& code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string code_;
  std::string detail_;
};

// Broken internal invariant; never expected on valid input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace wavekit
