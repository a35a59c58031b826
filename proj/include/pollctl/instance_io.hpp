#ifndef POLLCTL_INSTANCE_IO_HPP
#define POLLCTL_INSTANCE_IO_HPP

#include <optional>
#include <string>

#include "pollctl/geo.hpp"

namespace pollctl {

struct ParsedInstance {
  GeoInstance instance;
  std::optional<ControlQuery> query;
};

// Instance documents are JSON with exact numeric scalars: an integer, a
// decimal literal with terminating expansion, or a string "a/b".
//
//   {
//     "metric": {"dimension": 2, "norm": "EUCLIDEAN"},
//     "candidates": ["p", "r"],
//     "voters": [{"id": "v1", "location": [0, "3/8"], "bound": 1,
//                 "preferences": ["p", "r"]}],
//     "sites": [{"id": "A", "location": [1, 1]}],
//     "query": {"mode": "CONSTRUCTIVE", "target": "p", "min_sites": 2}
//   }
//
// "norm" defaults to EUCLIDEAN, "query" is optional.
ParsedInstance parse_instance(const std::string& text);

std::string serialize_instance(const GeoInstance& instance,
                               const std::optional<ControlQuery>& query = std::nullopt);

}  // namespace pollctl

#endif
