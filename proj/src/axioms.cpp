#include "karyx/axioms.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace karyx {

namespace {

// Uniform in [0,1) from the top 53 bits; keeps draws identical across
// standard library implementations.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

double max_abs_diff(const ImportanceVector& a, const ImportanceVector& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = std::abs(a[i] - b[i]);
    if (d > worst) worst = d;
  }
  return worst;
}

std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> sigma(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) sigma[static_cast<std::size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(
        rng() % (static_cast<std::uint64_t>(i) + 1));
    std::swap(sigma[static_cast<std::size_t>(i)], sigma[j]);
  }
  return sigma;
}

AxiomReport make_report(const char* axiom, const HarnessConfig& cfg) {
  AxiomReport report;
  report.axiom = axiom;
  report.tolerance = cfg.tolerance;
  report.trials = cfg.trials;
  report.seed = cfg.seed;
  return report;
}

void require_trials(const HarnessConfig& cfg) {
  if (cfg.trials < 1) {
    throw std::invalid_argument("axiom check: trials must be >= 1");
  }
}

}  // namespace

KAryGame random_game(const LatticeShape& shape, std::mt19937_64& rng) {
  std::vector<double> values(shape.table_size());
  values[0] = 0.0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    values[i] = uniform(rng, -1.0, 1.0);
  }
  return KAryGame(shape, std::move(values));
}

KAryGame with_null_attribute(const KAryGame& v, int axis) {
  const LatticeShape& shape = v.shape();
  std::vector<double> values(shape.table_size());
  const std::size_t st = shape.stride(axis);
  for (const SlicePoint& sp : enumerate_slice(shape, axis)) {
    const double level0 = v[sp.base_index];
    for (int l = 0; l <= shape.k(); ++l) {
      values[sp.base_index + static_cast<std::size_t>(l) * st] = level0;
    }
  }
  return KAryGame(shape, std::move(values));
}

AxiomReport check_linearity(const IndexFunctional& phi,
                            const HarnessConfig& cfg) {
  require_trials(cfg);
  AxiomReport report = make_report("linearity", cfg);
  std::mt19937_64 rng(cfg.seed);
  for (int t = 0; t < cfg.trials; ++t) {
    const KAryGame v = random_game(cfg.shape, rng);
    const KAryGame w = random_game(cfg.shape, rng);
    const double alpha = (t == 0) ? 0.0 : uniform(rng, -2.0, 2.0);

    const ImportanceVector lhs = phi(v + alpha * w);
    ImportanceVector rhs = phi(v);
    const ImportanceVector pw = phi(w);
    for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] += alpha * pw[i];

    const double d = max_abs_diff(lhs, rhs);
    if (d > report.worst_violation) {
      report.worst_violation = d;
      if (d > cfg.tolerance) {
        report.note = "trial " + std::to_string(t) +
                      ", alpha = " + std::to_string(alpha);
        report.witnesses = {v, w};
      }
    }
  }
  report.passed = report.worst_violation <= cfg.tolerance;
  if (report.passed) report.witnesses.clear();
  return report;
}

AxiomReport check_null(const IndexFunctional& phi, const HarnessConfig& cfg) {
  require_trials(cfg);
  AxiomReport report = make_report("null", cfg);
  std::mt19937_64 rng(cfg.seed);
  for (int t = 0; t < cfg.trials; ++t) {
    const int axis = t % cfg.shape.n();
    const KAryGame v = with_null_attribute(random_game(cfg.shape, rng), axis);
    const double d = std::abs(phi(v)[static_cast<std::size_t>(axis)]);
    if (d > report.worst_violation) {
      report.worst_violation = d;
      if (d > cfg.tolerance) {
        report.note =
            "trial " + std::to_string(t) + ", null attribute " +
            std::to_string(axis + 1);
        report.witnesses = {v};
      }
    }
  }
  report.passed = report.worst_violation <= cfg.tolerance;
  if (report.passed) report.witnesses.clear();
  return report;
}

AxiomReport check_symmetry(const IndexFunctional& phi,
                           const HarnessConfig& cfg) {
  require_trials(cfg);
  AxiomReport report = make_report("symmetry", cfg);
  std::mt19937_64 rng(cfg.seed);
  for (int t = 0; t < cfg.trials; ++t) {
    const KAryGame v = random_game(cfg.shape, rng);
    const std::vector<int> sigma = random_permutation(cfg.shape.n(), rng);
    const KAryGame relabeled = permute(v, sigma);

    const ImportanceVector before = phi(v);
    const ImportanceVector after = phi(relabeled);
    double d = 0.0;
    for (std::size_t i = 0; i < before.size(); ++i) {
      d = std::max(d, std::abs(after[static_cast<std::size_t>(sigma[i])] -
                               before[i]));
    }
    if (d > report.worst_violation) {
      report.worst_violation = d;
      if (d > cfg.tolerance) {
        report.note = "trial " + std::to_string(t);
        report.witnesses = {v, relabeled};
      }
    }
  }
  report.passed = report.worst_violation <= cfg.tolerance;
  if (report.passed) report.witnesses.clear();
  return report;
}

KAryGame invariance_partner(const KAryGame& v, int axis) {
  const LatticeShape& shape = v.shape();
  if (shape.k() < 2) {
    throw std::invalid_argument(
        "invariance_partner: k >= 2 required (no interior levels)");
  }
  const std::size_t st = shape.stride(axis);
  const auto k = static_cast<std::size_t>(shape.k());
  std::vector<double> values(shape.table_size());
  for (const SlicePoint& sp : enumerate_slice(shape, axis)) {
    const std::size_t base = sp.base_index;
    values[base] = 0.0;
    // Shift v's increments down one level; the first increment wraps to the top.
    for (std::size_t l = 1; l < k; ++l) {
      const double inc = v[base + (l + 1) * st] - v[base + l * st];
      values[base + l * st] = values[base + (l - 1) * st] + inc;
    }
    const double wrap = v[base + st] - v[base];
    values[base + k * st] = values[base + (k - 1) * st] + wrap;
  }
  return KAryGame(shape, std::move(values));
}

AxiomReport check_invariance(const IndexFunctional& phi,
                             const HarnessConfig& cfg) {
  require_trials(cfg);
  AxiomReport report = make_report("invariance", cfg);
  if (cfg.shape.k() < 2) {
    report.passed = true;
    report.note = "skipped: k < 2 (the premise has no interior levels)";
    return report;
  }
  std::mt19937_64 rng(cfg.seed);
  for (int t = 0; t < cfg.trials; ++t) {
    const KAryGame v = random_game(cfg.shape, rng);
    const ImportanceVector before = phi(v);
    for (int i = 0; i < cfg.shape.n(); ++i) {
      const KAryGame partner = invariance_partner(v, i);
      const double d = std::abs(
          phi(partner)[static_cast<std::size_t>(i)] -
          before[static_cast<std::size_t>(i)]);
      if (d > report.worst_violation) {
        report.worst_violation = d;
        if (d > cfg.tolerance) {
          report.note = "trial " + std::to_string(t) + ", attribute " +
                        std::to_string(i + 1);
          report.witnesses = {v, partner};
        }
      }
    }
  }
  report.passed = report.worst_violation <= cfg.tolerance;
  if (report.passed) report.witnesses.clear();
  return report;
}

int dirac_efficiency_expected(const LatticePoint& y, const LatticeShape& shape) {
  const int s = support_size(y);
  const int kk = kernel_size(y, shape);
  if (s == 0) {
    throw std::invalid_argument("dirac_efficiency_expected: y must be nonzero");
  }
  if (kk != 0 && s == shape.n()) return 1;
  if (kk == 0 && s < shape.n()) return -1;
  return 0;
}

AxiomReport check_efficiency_dirac(const IndexFunctional& phi,
                                   const LatticeShape& shape,
                                   double tolerance) {
  AxiomReport report;
  report.axiom = "efficiency-dirac";
  report.tolerance = tolerance;
  report.trials = static_cast<int>(shape.table_size() - 1);

  LatticePoint y(static_cast<std::size_t>(shape.n()), 0);
  while (advance_point(y, shape)) {
    const KAryGame game = dirac(shape, y);
    const ImportanceVector values = phi(game);
    double sum = 0.0;
    for (double x : values) sum += x;
    const double d =
        std::abs(sum - static_cast<double>(dirac_efficiency_expected(y, shape)));
    if (d > report.worst_violation) {
      report.worst_violation = d;
      if (d > tolerance) {
        std::string coords;
        for (std::size_t i = 0; i < y.size(); ++i) {
          coords += (i ? "," : "") + std::to_string(y[i]);
        }
        report.note = "worst at y = (" + coords + ")";
        report.witnesses = {game};
      }
    }
  }
  report.passed = report.worst_violation <= tolerance;
  if (report.passed) report.witnesses.clear();
  return report;
}

AxiomReport check_cells_oracle(const IndexFunctional& phi,
                               const HarnessConfig& cfg) {
  require_trials(cfg);
  AxiomReport report = make_report("cells-oracle", cfg);
  std::mt19937_64 rng(cfg.seed);
  for (int t = 0; t < cfg.trials; ++t) {
    const KAryGame v = random_game(cfg.shape, rng);
    const double d = max_abs_diff(phi(v), importance_by_cells(v));
    if (d > report.worst_violation) {
      report.worst_violation = d;
      if (d > cfg.tolerance) {
        report.note = "trial " + std::to_string(t);
        report.witnesses = {v};
      }
    }
  }
  report.passed = report.worst_violation <= cfg.tolerance;
  if (report.passed) report.witnesses.clear();
  return report;
}

std::vector<ImportanceVector> brute_force_index_from_axioms(
    const LatticeShape& shape) {
  if (shape.n() > 3 || shape.k() > 2) {
    throw std::invalid_argument(
        "brute_force_index_from_axioms: oracle is limited to n <= 3, k <= 2");
  }
  std::vector<ImportanceVector> table(
      shape.table_size(),
      ImportanceVector(static_cast<std::size_t>(shape.n()), 0.0));
  LatticePoint y(static_cast<std::size_t>(shape.n()), 0);
  std::size_t idx = 0;
  while (advance_point(y, shape)) {
    ++idx;
    table[idx] = importance(dirac(shape, y));
  }
  return table;
}

ImportanceVector reconstruct_from_dirac_table(
    const std::vector<ImportanceVector>& table, const KAryGame& v) {
  if (table.size() != v.shape().table_size()) {
    throw std::invalid_argument(
        "reconstruct_from_dirac_table: table size mismatch");
  }
  ImportanceVector phi(static_cast<std::size_t>(v.shape().n()), 0.0);
  for (std::size_t idx = 1; idx < table.size(); ++idx) {
    const double value = v[idx];
    if (value == 0.0) continue;
    for (std::size_t i = 0; i < phi.size(); ++i) {
      phi[i] += value * table[idx][i];
    }
  }
  return phi;
}

namespace negative_controls {

IndexFunctional nonlinear() {
  return [](const KAryGame& v) {
    ImportanceVector phi(static_cast<std::size_t>(v.shape().n()), 0.0);
    phi[0] = v.top_value() * v.top_value();
    return phi;
  };
}

IndexFunctional ignores_null() {
  return [](const KAryGame& v) {
    return ImportanceVector(static_cast<std::size_t>(v.shape().n()), 1.0);
  };
}

IndexFunctional attribute_biased() {
  return [](const KAryGame& v) {
    ImportanceVector phi(static_cast<std::size_t>(v.shape().n()), 0.0);
    for (std::size_t i = 0; i < phi.size(); ++i) {
      phi[i] = static_cast<double>(i + 1) * v.top_value();
    }
    return phi;
  };
}

IndexFunctional first_increment() {
  return [](const KAryGame& v) {
    const LatticeShape& shape = v.shape();
    ImportanceVector phi(static_cast<std::size_t>(shape.n()), 0.0);
    for (int i = 0; i < shape.n(); ++i) {
      const std::size_t st = shape.stride(i);
      double acc = 0.0;
      for (const SlicePoint& sp : enumerate_slice(shape, i)) {
        acc += v[sp.base_index + st] - v[sp.base_index];
      }
      phi[static_cast<std::size_t>(i)] = acc;
    }
    return phi;
  };
}

}  // namespace negative_controls

}  // namespace karyx
