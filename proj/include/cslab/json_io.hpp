#ifndef CSLAB_JSON_IO_HPP
#define CSLAB_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "cslab/affine.hpp"
#include "cslab/brace.hpp"
#include "cslab/cycle_set.hpp"
#include "cslab/left_quasigroup.hpp"

namespace cslab {

using json = nlohmann::ordered_json;

json to_json(const LeftQuasigroup& x);
json to_json(const SolutionPair& s);
json to_json(const FiniteBrace& b);
json to_json(const AffineCycleSet& a);
json partition_to_json(const Partition& p);

LeftQuasigroup left_quasigroup_from_json(const json& j);
SolutionPair solution_from_json(const json& j);
FiniteBrace brace_from_json(const json& j);
AffineCycleSet affine_from_json(const json& j);

// Any known kind, normalized to a table for table-based commands.
struct LoadedObject {
  std::string kind;
  json raw;
};

LoadedObject load_object(const std::string& text);
// Converts any loaded kind to its left-quasigroup table.
LeftQuasigroup table_of(const LoadedObject& obj, long table_limit = kDefaultTableLimit);

}  // namespace cslab

#endif
