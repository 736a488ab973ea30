#pragma once

#include <stdexcept>
#include <string>

namespace mbill {

enum class ErrorCode {
  invalid_dimension,
  invalid_parameter,
  degenerate_direction,
  not_unit_momentum,
  numeric_failure,
  outside_chart,
  degenerate_image,
  ray_escapes,
  singular_surface,
  grazing_incidence,
  ambiguous_oracle,
  invalid_input,
  fit_failure,
  not_an_ellipse,
  config_error,
  io_error,
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_dimension:    return "invalid-dimension";
    case ErrorCode::invalid_parameter:    return "invalid-parameter";
    case ErrorCode::degenerate_direction: return "degenerate-direction";
    case ErrorCode::not_unit_momentum:    return "not-unit-momentum";
    case ErrorCode::numeric_failure:      return "numeric-failure";
    case ErrorCode::outside_chart:        return "outside-chart";
    case ErrorCode::degenerate_image:     return "degenerate-image";
    case ErrorCode::ray_escapes:          return "ray-escapes";
    case ErrorCode::singular_surface:     return "singular-surface";
    case ErrorCode::grazing_incidence:    return "grazing-incidence";
    case ErrorCode::ambiguous_oracle:     return "ambiguous-oracle";
    case ErrorCode::invalid_input:        return "invalid-input";
    case ErrorCode::fit_failure:          return "fit-failure";
    case ErrorCode::not_an_ellipse:       return "not-an-ellipse";
    case ErrorCode::config_error:         return "config-error";
    case ErrorCode::io_error:             return "io-error";
  }
  return "unknown-error";
}

/// Library error with a stable machine-readable code; what() starts with the
/// code name so messages are grep-able in CLI output.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace mbill
