#ifndef POLLCTL_EXACT_JSON_HPP
#define POLLCTL_EXACT_JSON_HPP

#include <string>

#include "json.hpp"
#include "pollctl/rational.hpp"

namespace pollctl {

using ojson = nlohmann::ordered_json;

// Parses JSON with every float (and integer beyond 64 bits) kept as its raw
// token string, so "bound": 0.375 survives as the exact rational 3/8 instead
// of a binary double.  Throws Error(MALFORMED_DOCUMENT) on parse failure.
ojson parse_exact_json(const std::string& text);

// Reads a scalar produced by parse_exact_json (or hand-built) as an exact
// rational: integers directly, strings via rational_from_string.
Rational rational_from_json(const ojson& value, const std::string& context);

// Integer when the denominator is 1 and it fits, otherwise an "a/b" string.
ojson rational_to_json(const Rational& q);

}  // namespace pollctl

#endif
