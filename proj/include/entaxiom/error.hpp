#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace entaxiom {

/// Every validation failure in the library maps to exactly one of these.
enum class ErrorCode {
  negative_mass,
  bad_normalization,
  bad_size,
  bad_index,
  split_mass_mismatch,
  zero_mass_split,
  shape_mismatch,
  bad_permutation,
  bad_param,
  bad_config,
  degenerate_scale,
  parse_error,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace entaxiom
