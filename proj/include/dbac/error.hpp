#pragma once

#include <stdexcept>
#include <string>

namespace dbac {

enum class ErrorCode {
  size_out_of_range,
  malformed_arc_list,
  state_space_too_large,
  invalid_argument,
  not_periodic,
  mismatched_parts,
  inadmissible_context,
  unsupported_sign_combo,
  internal_inconsistency,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dbac
