#include "karyx/cli.hpp"

#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "karyx/axioms.hpp"
#include "karyx/indices.hpp"
#include "karyx/io.hpp"

namespace karyx::cli {

namespace {

using io::json;

struct Options {
  std::string input;
  std::string method = "paper";
  std::vector<double> weights;
  std::string format = "json";
  bool check = false;
  bool normalize = false;
  int n = 3;
  int k = 2;
  int trials = 200;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
};

// Shortest round-trip decimal form, identical to the JSON rendering.
std::string num(double value) { return json(value).dump(); }

void print_columns(std::ostream& out,
                   const std::vector<std::string>& headers,
                   const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& h : headers) widths.push_back(h.size());
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      widths[c] = std::max(widths[c], row[c].size());
    }
  }
  auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) out << "  ";
      out << std::string(widths[c] - cells[c].size(), ' ') << cells[c];
    }
    out << "\n";
  };
  emit(headers);
  for (const auto& row : rows) emit(row);
}

json vector_json(const std::string& command, const Options& opt,
                 const KAryGame& v, const ImportanceVector& values) {
  json j;
  j["command"] = command;
  j["method"] = opt.method;
  j["input"] = opt.input;
  j["n"] = v.shape().n();
  j["k"] = v.shape().k();
  json attrs = json::array();
  for (int i = 1; i <= v.shape().n(); ++i) attrs.push_back(i);
  j["attributes"] = attrs;
  j["values"] = values;
  return j;
}

json bi_json(const std::string& command, const Options& opt, const KAryGame& v,
             const BiIndexTable& table, const std::vector<double>* weights) {
  json j;
  j["command"] = command;
  j["method"] = opt.method;
  j["input"] = opt.input;
  j["n"] = table.n();
  j["k"] = table.k();
  if (weights) j["weights"] = *weights;
  json levels = json::array();
  for (int l = 1; l <= table.k(); ++l) levels.push_back(l);
  j["levels"] = levels;
  json rows = json::array();
  for (int i = 0; i < table.n(); ++i) {
    json row = json::array();
    for (int l = 1; l <= table.k(); ++l) row.push_back(table.at(i, l));
    rows.push_back(row);
  }
  j["rows"] = rows;
  j["row_sums"] = table.row_sums();
  j["total"] = table.total();
  (void)v;
  return j;
}

int render_vector(std::ostream& out, const Options& opt, const KAryGame& v,
                  const ImportanceVector& values, bool with_check) {
  if (opt.format == "json") {
    json j = vector_json("compute", opt, v, values);
    if (with_check) {
      double sum = 0.0;
      for (double x : values) sum += x;
      const double rhs = sum_identity_rhs(v);
      j["check"] = json{{"sum_of_values", sum},
                        {"diagonal_variation", rhs},
                        {"abs_difference", std::abs(sum - rhs)}};
    }
    out << j.dump(2) << "\n";
  } else if (opt.format == "csv") {
    out << "attribute,method,value\n";
    for (std::size_t i = 0; i < values.size(); ++i) {
      out << (i + 1) << "," << opt.method << "," << num(values[i]) << "\n";
    }
  } else {
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < values.size(); ++i) {
      rows.push_back({std::to_string(i + 1), num(values[i])});
    }
    print_columns(out, {"attribute", opt.method}, rows);
    if (with_check) {
      double sum = 0.0;
      for (double x : values) sum += x;
      const double rhs = sum_identity_rhs(v);
      out << "sum of values      = " << num(sum) << "\n";
      out << "diagonal variation = " << num(rhs) << "\n";
      out << "abs difference     = " << num(std::abs(sum - rhs)) << "\n";
    }
  }
  return kExitOk;
}

int render_bi(std::ostream& out, const Options& opt, const KAryGame& v,
              const BiIndexTable& table, const std::vector<double>* weights) {
  if (opt.format == "json") {
    out << bi_json("compute", opt, v, table, weights).dump(2) << "\n";
  } else if (opt.format == "csv") {
    // One row per (attribute, method); the per-level detail lives in JSON.
    out << "attribute,method,value\n";
    for (int i = 0; i < table.n(); ++i) {
      out << (i + 1) << "," << opt.method << "," << num(table.row_sum(i))
          << "\n";
    }
  } else {
    std::vector<std::string> headers = {"attribute"};
    for (int l = 1; l <= table.k(); ++l) {
      headers.push_back("level " + std::to_string(l));
    }
    headers.push_back("sum");
    std::vector<std::vector<std::string>> rows;
    for (int i = 0; i < table.n(); ++i) {
      std::vector<std::string> row = {std::to_string(i + 1)};
      for (int l = 1; l <= table.k(); ++l) row.push_back(num(table.at(i, l)));
      row.push_back(num(table.row_sum(i)));
      rows.push_back(row);
    }
    print_columns(out, headers, rows);
    out << "total = " << num(table.total()) << "\n";
  }
  return kExitOk;
}

int cmd_compute(const Options& opt, std::ostream& out, std::ostream& err) {
  if (!opt.weights.empty() && opt.method != "hsiao-raghavan") {
    err << "error: --weights applies to --method hsiao-raghavan only\n";
    return kExitUsage;
  }
  if (opt.check && opt.method != "paper") {
    err << "error: --check applies to --method paper only\n";
    return kExitUsage;
  }
  const KAryGame v = io::load_game(
      opt.input, opt.normalize ? OriginPolicy::Normalize : OriginPolicy::Strict);

  if (opt.method == "paper") {
    return render_vector(out, opt, v, importance(v), opt.check);
  }
  if (opt.method == "cells") {
    return render_vector(out, opt, v, importance_by_cells(v), false);
  }
  if (opt.method == "shapley") {
    return render_vector(out, opt, v, shapley_classical(v), false);
  }
  if (opt.method == "grabisch-lange") {
    return render_vector(out, opt, v, grabisch_lange(v), false);
  }
  if (opt.method == "peters-zank") {
    return render_bi(out, opt, v, peters_zank(v), nullptr);
  }
  // hsiao-raghavan
  const WeightScheme scheme = opt.weights.empty()
                                  ? WeightScheme::linear(v.shape().k())
                                  : WeightScheme(opt.weights);
  return render_bi(out, opt, v, hsiao_raghavan(v, scheme), &scheme.weights());
}

int cmd_moebius(const Options& opt, std::ostream& out, std::ostream&) {
  const KAryGame v = io::load_game(
      opt.input, opt.normalize ? OriginPolicy::Normalize : OriginPolicy::Strict);
  const MoebiusTable m = moebius(v);
  if (opt.format == "json") {
    out << io::moebius_to_json(m).dump(2) << "\n";
    return kExitOk;
  }
  const LatticeShape& shape = m.shape();
  const char sep = (opt.format == "csv") ? ',' : ' ';
  if (opt.format == "csv") {
    for (int i = 1; i <= shape.n(); ++i) out << "x" << i << ",";
    out << "value\n";
  }
  LatticePoint x(static_cast<std::size_t>(shape.n()), 0);
  std::size_t idx = 0;
  do {
    for (int c : x) out << c << sep;
    out << num(m[idx]) << "\n";
    ++idx;
  } while (advance_point(x, shape));
  return kExitOk;
}

int cmd_gai_eval(const Options& opt, std::ostream& out, std::ostream&) {
  const KAryGame v = io::load_gai_game(opt.input);
  if (opt.format == "json") {
    out << io::game_to_json(v).dump(2) << "\n";
    return kExitOk;
  }
  const LatticeShape& shape = v.shape();
  const char sep = (opt.format == "csv") ? ',' : ' ';
  if (opt.format == "csv") {
    for (int i = 1; i <= shape.n(); ++i) out << "x" << i << ",";
    out << "value\n";
  }
  LatticePoint x(static_cast<std::size_t>(shape.n()), 0);
  std::size_t idx = 0;
  do {
    for (int c : x) out << c << sep;
    out << num(v[idx]) << "\n";
    ++idx;
  } while (advance_point(x, shape));
  return kExitOk;
}

int cmd_compare(const Options& opt, std::ostream& out, std::ostream&) {
  const KAryGame v = io::load_game(
      opt.input, opt.normalize ? OriginPolicy::Normalize : OriginPolicy::Strict);
  const int n = v.shape().n();
  const int k = v.shape().k();

  std::vector<std::pair<std::string, ImportanceVector>> columns;
  columns.emplace_back("paper", importance(v));
  columns.emplace_back("cells", importance_by_cells(v));
  columns.emplace_back("grabisch-lange", grabisch_lange(v));
  if (k == 1) columns.emplace_back("shapley", shapley_classical(v));

  const WeightScheme scheme = opt.weights.empty() ? WeightScheme::linear(k)
                                                  : WeightScheme(opt.weights);
  const BiIndexTable hr = hsiao_raghavan(v, scheme);
  const BiIndexTable pz = peters_zank(v);
  columns.emplace_back("hsiao-raghavan", hr.row_sums());
  columns.emplace_back("peters-zank", pz.row_sums());

  const double reference = sum_identity_rhs(v);

  if (opt.format == "json") {
    json j;
    j["command"] = "compare";
    j["input"] = opt.input;
    j["n"] = n;
    j["k"] = k;
    json attrs = json::array();
    for (int i = 1; i <= n; ++i) attrs.push_back(i);
    j["attributes"] = attrs;
    json methods = json::array();
    json cols;
    json sums;
    for (const auto& [name, values] : columns) {
      methods.push_back(name);
      cols[name] = values;
      double total = 0.0;
      for (double x : values) total += x;
      sums[name] = total;
    }
    j["methods"] = methods;
    j["columns"] = cols;
    j["sums"] = sums;
    j["sum_identity_rhs"] = reference;
    json details;
    json levels = json::array();
    for (int l = 1; l <= k; ++l) levels.push_back(l);
    auto detail = [&](const BiIndexTable& table) {
      json d;
      d["levels"] = levels;
      json rows = json::array();
      for (int i = 0; i < n; ++i) {
        json row = json::array();
        for (int l = 1; l <= k; ++l) row.push_back(table.at(i, l));
        rows.push_back(row);
      }
      d["rows"] = rows;
      return d;
    };
    details["hsiao-raghavan"] = detail(hr);
    details["hsiao-raghavan"]["weights"] = scheme.weights();
    details["peters-zank"] = detail(pz);
    j["details"] = details;
    out << j.dump(2) << "\n";
    return kExitOk;
  }

  if (opt.format == "csv") {
    out << "attribute,method,value\n";
    for (const auto& [name, values] : columns) {
      for (std::size_t i = 0; i < values.size(); ++i) {
        out << (i + 1) << "," << name << "," << num(values[i]) << "\n";
      }
    }
    return kExitOk;
  }

  std::vector<std::string> headers = {"attribute"};
  for (const auto& [name, values] : columns) headers.push_back(name);
  std::vector<std::vector<std::string>> rows;
  for (int i = 0; i < n; ++i) {
    std::vector<std::string> row = {std::to_string(i + 1)};
    for (const auto& [name, values] : columns) {
      row.push_back(num(values[static_cast<std::size_t>(i)]));
    }
    rows.push_back(row);
  }
  std::vector<std::string> sum_row = {"sum"};
  for (const auto& [name, values] : columns) {
    double total = 0.0;
    for (double x : values) total += x;
    sum_row.push_back(num(total));
  }
  rows.push_back(sum_row);
  print_columns(out, headers, rows);
  out << "diagonal variation (paper reference) = " << num(reference) << "\n";
  auto print_detail = [&](const char* name, const BiIndexTable& table) {
    out << "\n" << name << " by level:\n";
    std::vector<std::string> h = {"attribute"};
    for (int l = 1; l <= k; ++l) h.push_back("level " + std::to_string(l));
    std::vector<std::vector<std::string>> r;
    for (int i = 0; i < n; ++i) {
      std::vector<std::string> row = {std::to_string(i + 1)};
      for (int l = 1; l <= k; ++l) row.push_back(num(table.at(i, l)));
      r.push_back(row);
    }
    print_columns(out, h, r);
  };
  print_detail("hsiao-raghavan", hr);
  print_detail("peters-zank", pz);
  return kExitOk;
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream&) {
  const LatticeShape shape(opt.n, opt.k);
  IndexFunctional functional;
  if (opt.method == "paper") {
    functional = [](const KAryGame& g) { return importance(g); };
  } else if (opt.method == "cells") {
    functional = [](const KAryGame& g) { return importance_by_cells(g); };
  } else if (opt.method == "grabisch-lange") {
    functional = [](const KAryGame& g) { return grabisch_lange(g); };
  } else {  // shapley
    if (opt.k != 1) {
      throw std::domain_error("verify: --method shapley requires --k 1");
    }
    functional = [](const KAryGame& g) { return shapley_classical(g); };
  }

  HarnessConfig cfg{shape, opt.trials, opt.seed, opt.tolerance};
  std::vector<AxiomReport> reports;
  reports.push_back(check_linearity(functional, cfg));
  reports.push_back(check_null(functional, cfg));
  reports.push_back(check_symmetry(functional, cfg));
  reports.push_back(check_invariance(functional, cfg));
  reports.push_back(check_efficiency_dirac(functional, shape, opt.tolerance));
  reports.push_back(check_cells_oracle(functional, cfg));

  bool all_passed = true;
  for (const AxiomReport& r : reports) all_passed = all_passed && r.passed;

  if (opt.format == "json") {
    json j;
    j["command"] = "verify";
    j["method"] = opt.method;
    j["n"] = opt.n;
    j["k"] = opt.k;
    j["trials"] = opt.trials;
    j["seed"] = opt.seed;
    j["tolerance"] = opt.tolerance;
    json rs = json::array();
    for (const AxiomReport& r : reports) rs.push_back(io::report_to_json(r));
    j["reports"] = rs;
    j["all_passed"] = all_passed;
    out << j.dump(2) << "\n";
  } else if (opt.format == "csv") {
    out << "axiom,passed,worst_violation\n";
    for (const AxiomReport& r : reports) {
      out << r.axiom << "," << (r.passed ? "true" : "false") << ","
          << num(r.worst_violation) << "\n";
    }
  } else {
    out << "method " << opt.method << ", n=" << opt.n << ", k=" << opt.k
        << ", trials=" << opt.trials << ", seed=" << opt.seed
        << ", tolerance=" << num(opt.tolerance) << "\n";
    for (const AxiomReport& r : reports) {
      out << (r.passed ? "PASS  " : "FAIL  ") << r.axiom
          << "  worst violation " << num(r.worst_violation);
      if (!r.note.empty()) out << "  [" << r.note << "]";
      out << "\n";
    }
    out << (all_passed ? "all checks passed" : "some checks FAILED") << "\n";
  }
  return all_passed ? kExitOk : kExitVerification;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"importance indices for k-ary (multichoice) games"};
  app.require_subcommand(1);

  Options opt;
  const std::vector<std::string> vector_methods = {"paper", "shapley", "cells",
                                                   "grabisch-lange"};
  const std::vector<std::string> all_methods = {
      "paper", "shapley", "cells", "grabisch-lange", "hsiao-raghavan",
      "peters-zank"};
  const std::vector<std::string> formats = {"json", "table", "csv"};

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("-i,--input", opt.input, "input file (JSON)")->required();
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("-f,--format", opt.format, "output format")
        ->check(CLI::IsMember(formats))
        ->capture_default_str();
  };
  auto add_normalize = [&](CLI::App* cmd) {
    cmd->add_flag("--normalize", opt.normalize,
                  "shift the table by -v(0_N) instead of rejecting a nonzero "
                  "origin");
  };

  CLI::App* compute =
      app.add_subcommand("compute", "compute one index for a game file");
  add_input(compute);
  compute->add_option("-m,--method", opt.method, "index to compute")
      ->check(CLI::IsMember(all_methods))
      ->capture_default_str();
  compute->add_option("--weights", opt.weights,
                      "hsiao-raghavan level weights w_1,...,w_k")
      ->delimiter(',');
  compute->add_flag("--check", opt.check,
                    "with --method paper, also report the sum identity");
  add_format(compute);
  add_normalize(compute);

  CLI::App* moebius_cmd = app.add_subcommand(
      "moebius", "Moebius transform of a game, in the game file schema");
  add_input(moebius_cmd);
  add_format(moebius_cmd);
  add_normalize(moebius_cmd);

  CLI::App* compare =
      app.add_subcommand("compare", "all applicable indices side by side");
  add_input(compare);
  compare->add_option("--weights", opt.weights,
                      "hsiao-raghavan level weights w_1,...,w_k")
      ->delimiter(',');
  add_format(compare);
  add_normalize(compare);

  CLI::App* verify = app.add_subcommand(
      "verify", "run the axiom checks against an index on random games");
  verify->add_option("-m,--method", opt.method, "index under test")
      ->check(CLI::IsMember(vector_methods))
      ->capture_default_str();
  verify->add_option("--n", opt.n, "number of attributes")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--k", opt.k, "top level")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--trials", opt.trials, "random trials per check")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--seed", opt.seed, "random seed")->capture_default_str();
  verify->add_option("--tol", opt.tolerance, "pass tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_format(verify);

  CLI::App* gai =
      app.add_subcommand("gai-eval", "expand a GAI model file to a dense game");
  add_input(gai);
  add_format(gai);

  std::vector<const char*> argv;
  argv.push_back("karyx");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (compute->parsed()) return cmd_compute(opt, out, err);
    if (moebius_cmd->parsed()) return cmd_moebius(opt, out, err);
    if (compare->parsed()) return cmd_compare(opt, out, err);
    if (verify->parsed()) return cmd_verify(opt, out, err);
    if (gai->parsed()) return cmd_gai_eval(opt, out, err);
  } catch (const io::SchemaError& e) {
    err << "error: " << e.what() << "\n";
    return kExitSchema;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return kExitOk;
}

}  // namespace karyx::cli
