#pragma once

#include <stdexcept>
#include <string>

namespace pentile {

// Error carrying a short machine-readable code ("no-pentagon", "closure-failure", ...).
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

} // namespace pentile
