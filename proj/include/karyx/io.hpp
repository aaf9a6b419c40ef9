#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "karyx/axioms.hpp"
#include "karyx/game.hpp"

namespace karyx::io {

/// Raised for unreadable files and content that violates the file schemas.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using json = nlohmann::ordered_json;

// Game file:
//   { "n": int, "k": int | [int,...],
//     "values": { "dense": [reals in flat order] }
//              | { "sparse": [{"x": [levels], "v": real}, ...], "default": real } }
// Attribute 1 is most significant in the dense flat order. A per-attribute k
// list is padded to the common top level by duplicating each attribute's top.
KAryGame game_from_json(const json& j, OriginPolicy policy);
KAryGame load_game(const std::string& path, OriginPolicy policy);

// GAI file:
//   { "n": int, "k": int | [int,...],
//     "terms": [{ "attrs": [1-based ints], "table": [reals] }, ...] }
// Term tables are dense over the term's own sub-lattice, first listed
// attribute most significant. The evaluated sum is always shifted so the
// origin lands at 0.
KAryGame gai_game_from_json(const json& j);
KAryGame load_gai_game(const std::string& path);

json game_to_json(const KAryGame& v);
json moebius_to_json(const MoebiusTable& m);
json report_to_json(const AxiomReport& report);

}  // namespace karyx::io
