#include "pollctl/error.hpp"

namespace pollctl {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::MALFORMED_DOCUMENT: return "MALFORMED_DOCUMENT";
    case Errc::UNKNOWN_CANDIDATE: return "UNKNOWN_CANDIDATE";
    case Errc::DIMENSION_MISMATCH: return "DIMENSION_MISMATCH";
    case Errc::NEGATIVE_BOUND: return "NEGATIVE_BOUND";
    case Errc::UNKNOWN_SITE: return "UNKNOWN_SITE";
    case Errc::UNKNOWN_VOTER: return "UNKNOWN_VOTER";
    case Errc::MALFORMED_GRAPH: return "MALFORMED_GRAPH";
    case Errc::PRECONDITION_VIOLATED: return "PRECONDITION_VIOLATED";
    case Errc::OVERLAP_BUDGET_EXCEEDED: return "OVERLAP_BUDGET_EXCEEDED";
    case Errc::INSTANCE_TOO_LARGE: return "INSTANCE_TOO_LARGE";
    case Errc::K_TOO_SMALL: return "K_TOO_SMALL";
    case Errc::NO_SITES: return "NO_SITES";
    case Errc::METRIC_NOT_EXACT: return "METRIC_NOT_EXACT";
    case Errc::MISSING_QUERY: return "MISSING_QUERY";
    case Errc::INVALID_ARGUMENT: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN_ERROR";
}

}  // namespace pollctl
