#ifndef POLLCTL_ERROR_HPP
#define POLLCTL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace pollctl {

enum class Errc {
  MALFORMED_DOCUMENT,
  UNKNOWN_CANDIDATE,
  DIMENSION_MISMATCH,
  NEGATIVE_BOUND,
  UNKNOWN_SITE,
  UNKNOWN_VOTER,
  MALFORMED_GRAPH,
  PRECONDITION_VIOLATED,
  OVERLAP_BUDGET_EXCEEDED,
  INSTANCE_TOO_LARGE,
  K_TOO_SMALL,
  NO_SITES,
  METRIC_NOT_EXACT,
  MISSING_QUERY,
  INVALID_ARGUMENT,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace pollctl

#endif
