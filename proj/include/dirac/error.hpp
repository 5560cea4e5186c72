#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dirac {

// Stable codes; the CLI prints code_name() verbatim, so never renumber or rename.
enum class ErrorCode {
  inadmissible_type,
  rank_mismatch,
  not_a_root,
  weyl_cap_exceeded,
  division_by_zero,
  not_dominant,
  not_integral,
  out_of_range,
  not_k_invariant,
  non_dominant_extraction,
  grading_violation,
  not_positive_root,
  no_genuine_representation,
  non_regular_element,
  config_syntax,
  unknown_family,
  unknown_preset,
  unknown_command,
  missing_parameter,
  cache_version,
  cache_key,
  cache_corrupt,
  io,
  bad_argument,
};

constexpr std::string_view code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::inadmissible_type: return "E_INADMISSIBLE_TYPE";
    case ErrorCode::rank_mismatch: return "E_RANK_MISMATCH";
    case ErrorCode::not_a_root: return "E_NOT_A_ROOT";
    case ErrorCode::weyl_cap_exceeded: return "E_WEYL_CAP";
    case ErrorCode::division_by_zero: return "E_DIVISION_BY_ZERO";
    case ErrorCode::not_dominant: return "E_NOT_DOMINANT";
    case ErrorCode::not_integral: return "E_NOT_INTEGRAL";
    case ErrorCode::out_of_range: return "E_OUT_OF_RANGE";
    case ErrorCode::not_k_invariant: return "E_NOT_K_INVARIANT";
    case ErrorCode::non_dominant_extraction: return "E_NON_DOMINANT_EXTRACTION";
    case ErrorCode::grading_violation: return "E_GRADING";
    case ErrorCode::not_positive_root: return "E_NOT_POSITIVE_ROOT";
    case ErrorCode::no_genuine_representation: return "E_NO_GENUINE_W";
    case ErrorCode::non_regular_element: return "E_NON_REGULAR";
    case ErrorCode::config_syntax: return "E_CONFIG_SYNTAX";
    case ErrorCode::unknown_family: return "E_UNKNOWN_FAMILY";
    case ErrorCode::unknown_preset: return "E_UNKNOWN_PRESET";
    case ErrorCode::unknown_command: return "E_UNKNOWN_COMMAND";
    case ErrorCode::missing_parameter: return "E_MISSING_PARAMETER";
    case ErrorCode::cache_version: return "E_CACHE_VERSION";
    case ErrorCode::cache_key: return "E_CACHE_KEY";
    case ErrorCode::cache_corrupt: return "E_CACHE_CORRUPT";
    case ErrorCode::io: return "E_IO";
    case ErrorCode::bad_argument: return "E_BAD_ARGUMENT";
  }
  return "E_UNKNOWN";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dirac
