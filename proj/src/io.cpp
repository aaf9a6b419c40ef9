#include "karyx/io.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <vector>

namespace karyx::io {

namespace {

[[noreturn]] void fail(const std::string& message) {
  throw SchemaError(message);
}

const json& require_key(const json& j, const char* key, const char* where) {
  if (!j.is_object()) fail(std::string(where) + ": expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) {
    fail(std::string(where) + ": missing required key \"" + key + "\"");
  }
  return *it;
}

int require_positive_int(const json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + ": expected an integer");
  const auto value = j.get<long long>();
  if (value < 1) fail(std::string(what) + ": must be >= 1");
  return static_cast<int>(value);
}

double require_finite_number(const json& j, const char* what) {
  if (!j.is_number()) fail(std::string(what) + ": expected a number");
  const double value = j.get<double>();
  if (!std::isfinite(value)) fail(std::string(what) + ": must be finite");
  return value;
}

// "k" may be a common top level or one per attribute.
std::vector<int> read_tops(const json& j, int n) {
  const json& k = require_key(j, "k", "input");
  if (k.is_number_integer()) {
    return std::vector<int>(static_cast<std::size_t>(n),
                            require_positive_int(k, "\"k\""));
  }
  if (!k.is_array()) fail("\"k\": expected an integer or a list of integers");
  if (static_cast<int>(k.size()) != n) {
    fail("\"k\": list length must equal n");
  }
  std::vector<int> tops;
  tops.reserve(k.size());
  for (const json& entry : k) {
    tops.push_back(require_positive_int(entry, "\"k\" entry"));
  }
  return tops;
}

bool uniform_tops(const std::vector<int>& tops) {
  for (int t : tops) {
    if (t != tops.front()) return false;
  }
  return true;
}

std::size_t hetero_table_size(const std::vector<int>& tops) {
  std::size_t size = 1;
  for (int t : tops) size *= static_cast<std::size_t>(t) + 1;
  return size;
}

std::vector<double> read_dense(const json& values, std::size_t expected) {
  const json& dense = values.at("dense");
  if (!dense.is_array()) fail("\"values.dense\": expected an array");
  if (dense.size() != expected) {
    fail("\"values.dense\": has " + std::to_string(dense.size()) +
         " entries, expected " + std::to_string(expected));
  }
  std::vector<double> table;
  table.reserve(dense.size());
  for (const json& entry : dense) {
    table.push_back(require_finite_number(entry, "\"values.dense\" entry"));
  }
  return table;
}

std::vector<double> read_sparse(const json& values,
                                const std::vector<int>& tops) {
  const json& sparse = values.at("sparse");
  if (!sparse.is_array()) fail("\"values.sparse\": expected an array");
  double fill = 0.0;
  if (values.contains("default")) {
    fill = require_finite_number(values.at("default"), "\"values.default\"");
  }
  std::vector<double> table(hetero_table_size(tops), fill);
  std::set<std::size_t> seen;
  for (const json& entry : sparse) {
    const json& x = require_key(entry, "x", "sparse entry");
    if (!x.is_array() || x.size() != tops.size()) {
      fail("sparse entry: \"x\" must list one level per attribute");
    }
    std::size_t index = 0;
    for (std::size_t i = 0; i < tops.size(); ++i) {
      if (!x[i].is_number_integer()) fail("sparse entry: levels must be integers");
      const auto level = x[i].get<long long>();
      if (level < 0 || level > tops[i]) {
        fail("sparse entry: level " + std::to_string(level) +
             " outside [0," + std::to_string(tops[i]) + "] for attribute " +
             std::to_string(i + 1));
      }
      index = index * (static_cast<std::size_t>(tops[i]) + 1) +
              static_cast<std::size_t>(level);
    }
    if (!seen.insert(index).second) {
      fail("sparse entry: duplicate point");
    }
    table[index] = require_finite_number(require_key(entry, "v", "sparse entry"),
                                         "sparse entry \"v\"");
  }
  return table;
}

KAryGame build_game(const std::vector<int>& tops, std::vector<double> table,
                    OriginPolicy policy) {
  try {
    if (uniform_tops(tops)) {
      return KAryGame(LatticeShape(static_cast<int>(tops.size()), tops.front()),
                      std::move(table), policy);
    }
    return pad_to_common_k(tops, table, policy);
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open \"" + path + "\"");
  try {
    return json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    fail("\"" + path + "\": " + e.what());
  }
}

}  // namespace

KAryGame game_from_json(const json& j, OriginPolicy policy) {
  const int n = require_positive_int(require_key(j, "n", "input"), "\"n\"");
  const std::vector<int> tops = read_tops(j, n);
  const json& values = require_key(j, "values", "input");
  if (!values.is_object()) fail("\"values\": expected an object");
  const bool has_dense = values.contains("dense");
  const bool has_sparse = values.contains("sparse");
  if (has_dense == has_sparse) {
    fail("\"values\": need exactly one of \"dense\" or \"sparse\"");
  }
  std::vector<double> table = has_dense
                                  ? read_dense(values, hetero_table_size(tops))
                                  : read_sparse(values, tops);
  return build_game(tops, std::move(table), policy);
}

KAryGame load_game(const std::string& path, OriginPolicy policy) {
  return game_from_json(parse_file(path), policy);
}

KAryGame gai_game_from_json(const json& j) {
  const int n = require_positive_int(require_key(j, "n", "input"), "\"n\"");
  const std::vector<int> tops = read_tops(j, n);
  const json& terms = require_key(j, "terms", "input");
  if (!terms.is_array()) fail("\"terms\": expected an array");

  struct RawTerm {
    std::vector<int> attrs;  // 0-based
    std::vector<double> table;
  };
  std::vector<RawTerm> parsed;
  for (const json& term : terms) {
    RawTerm raw;
    const json& attrs = require_key(term, "attrs", "term");
    if (!attrs.is_array() || attrs.empty()) {
      fail("term: \"attrs\" must be a nonempty array");
    }
    std::set<int> seen;
    std::size_t expected = 1;
    for (const json& a : attrs) {
      const int attr = require_positive_int(a, "term attribute");
      if (attr > n) fail("term: attribute " + std::to_string(attr) + " > n");
      if (!seen.insert(attr).second) fail("term: duplicate attribute");
      raw.attrs.push_back(attr - 1);
      expected *= static_cast<std::size_t>(tops[static_cast<std::size_t>(attr - 1)]) + 1;
    }
    const json& table = require_key(term, "table", "term");
    if (!table.is_array() || table.size() != expected) {
      fail("term: table over attrs needs " + std::to_string(expected) +
           " entries, got " + std::to_string(table.size()));
    }
    for (const json& entry : table) {
      raw.table.push_back(require_finite_number(entry, "term table entry"));
    }
    parsed.push_back(std::move(raw));
  }

  if (uniform_tops(tops)) {
    GaiModel model{LatticeShape(n, tops.front()), {}};
    for (RawTerm& raw : parsed) {
      model.terms.push_back(GaiTerm{std::move(raw.attrs), std::move(raw.table)});
    }
    try {
      return from_gai(model);
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }

  // Heterogeneous tops: evaluate the sum over the native lattice, then pad.
  std::vector<double> table(hetero_table_size(tops), 0.0);
  std::vector<int> x(static_cast<std::size_t>(n), 0);
  std::size_t index = 0;
  while (true) {
    double total = 0.0;
    for (const RawTerm& raw : parsed) {
      std::size_t sub = 0;
      for (int attr : raw.attrs) {
        sub = sub * (static_cast<std::size_t>(tops[static_cast<std::size_t>(attr)]) + 1) +
              static_cast<std::size_t>(x[static_cast<std::size_t>(attr)]);
      }
      total += raw.table[sub];
    }
    table[index] = total;

    int p = n - 1;
    for (; p >= 0; --p) {
      auto& c = x[static_cast<std::size_t>(p)];
      if (c < tops[static_cast<std::size_t>(p)]) {
        ++c;
        break;
      }
      c = 0;
    }
    if (p < 0) break;
    ++index;
  }
  try {
    return pad_to_common_k(tops, table, OriginPolicy::Normalize);
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

KAryGame load_gai_game(const std::string& path) {
  return gai_game_from_json(parse_file(path));
}

json game_to_json(const KAryGame& v) {
  json j;
  j["n"] = v.shape().n();
  j["k"] = v.shape().k();
  j["values"] = json{{"dense", v.values()}};
  return j;
}

json moebius_to_json(const MoebiusTable& m) {
  json j;
  j["n"] = m.shape().n();
  j["k"] = m.shape().k();
  j["values"] = json{{"dense", m.coeffs()}};
  return j;
}

json report_to_json(const AxiomReport& report) {
  json j;
  j["axiom"] = report.axiom;
  j["passed"] = report.passed;
  j["worst_violation"] = report.worst_violation;
  j["tolerance"] = report.tolerance;
  j["trials"] = report.trials;
  j["seed"] = report.seed;
  if (!report.note.empty()) j["note"] = report.note;
  if (!report.witnesses.empty()) {
    json witnesses = json::array();
    for (const KAryGame& w : report.witnesses) {
      witnesses.push_back(game_to_json(w));
    }
    j["witnesses"] = witnesses;
  }
  return j;
}

}  // namespace karyx::io
