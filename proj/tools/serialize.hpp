#pragma once

#include <json.hpp>
#include <map>

#include "cluster/laurent.hpp"
#include "cluster/mutation.hpp"
#include "cluster/report.hpp"
#include "cluster/tilegraphs.hpp"

namespace cluster::io {

using nlohmann::ordered_json;

ordered_json to_json(const BeltLattice& lattice);
ordered_json to_json(const TileGraph& g);
ordered_json to_json(const MatchingGraph& g);
ordered_json to_json(const CheckResult& r, bool timings);
ordered_json to_json(const VerificationReport& r, bool timings);
ordered_json roots_json(const std::vector<RootVector>& roots);
ordered_json variables_json(DynkinType t, const std::map<RootVector, Laurent>& vars);

// "1,1,0" -> {1,1,0}; throws DomainError on malformed input.
RootVector parse_root(const std::string& text);
// "A3_1-1-0"
std::string graph_file_stem(DynkinType t, const RootVector& mu);

}  // namespace cluster::io
