#include "karyx/indices.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <utility>

namespace karyx {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

cpp_int factorial(int n) {
  cpp_int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

double exact_ratio(const cpp_int& num, const cpp_int& den) {
  return cpp_rational(num, den).convert_to<double>();
}

}  // namespace

double importance_coefficient(int n, int support, int kernel) {
  if (n < 1 || support < 0 || support > n - 1 || kernel < 0 ||
      kernel > support) {
    throw std::invalid_argument("importance_coefficient: invalid (n, s, k)");
  }
  return exact_ratio(factorial(n - support - 1) * factorial(kernel),
                     factorial(n + kernel - support));
}

double shapley_coefficient(int n, int subset_size) {
  if (n < 1 || subset_size < 0 || subset_size > n - 1) {
    throw std::invalid_argument("shapley_coefficient: invalid (n, s)");
  }
  return exact_ratio(factorial(n - subset_size - 1) * factorial(subset_size),
                     factorial(n));
}

namespace {

// Coefficient lookup by (support, kernel), built once per call.
std::vector<std::vector<double>> importance_coefficients(int n) {
  std::vector<std::vector<double>> table(static_cast<std::size_t>(n));
  for (int s = 0; s <= n - 1; ++s) {
    auto& row = table[static_cast<std::size_t>(s)];
    row.resize(static_cast<std::size_t>(s) + 1);
    for (int kk = 0; kk <= s; ++kk) {
      row[static_cast<std::size_t>(kk)] = importance_coefficient(n, s, kk);
    }
  }
  return table;
}

}  // namespace

ImportanceVector importance(const KAryGame& v) {
  const LatticeShape& shape = v.shape();
  const int n = shape.n();
  const auto k = static_cast<std::size_t>(shape.k());
  const auto coeff = importance_coefficients(n);

  ImportanceVector phi(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    const std::size_t st = shape.stride(i);
    double acc = 0.0;
    for (const SlicePoint& sp : enumerate_slice(shape, i)) {
      const double diff = v[sp.base_index + k * st] - v[sp.base_index];
      acc += coeff[static_cast<std::size_t>(sp.support_size)]
                  [static_cast<std::size_t>(sp.kernel_size)] *
             diff;
    }
    phi[static_cast<std::size_t>(i)] = acc;
  }
  return phi;
}

ImportanceVector shapley_classical(const KAryGame& v) {
  const LatticeShape& shape = v.shape();
  if (shape.k() != 1) {
    throw std::domain_error("shapley_classical: requires a k=1 game");
  }
  const int n = shape.n();
  std::vector<double> coeff(static_cast<std::size_t>(n));
  for (int s = 0; s <= n - 1; ++s) {
    coeff[static_cast<std::size_t>(s)] = shapley_coefficient(n, s);
  }

  ImportanceVector phi(static_cast<std::size_t>(n), 0.0);
  std::vector<std::size_t> other_strides;
  for (int i = 0; i < n; ++i) {
    other_strides.clear();
    for (int j = 0; j < n; ++j) {
      if (j != i) other_strides.push_back(shape.stride(j));
    }
    const std::size_t own = shape.stride(i);
    const int m = n - 1;
    double acc = 0.0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      std::size_t base = 0;
      int members = 0;
      for (int p = 0; p < m; ++p) {
        if (mask & (std::uint64_t{1} << (m - 1 - p))) {
          base += other_strides[static_cast<std::size_t>(p)];
          ++members;
        }
      }
      acc += coeff[static_cast<std::size_t>(members)] * (v[base + own] - v[base]);
    }
    phi[static_cast<std::size_t>(i)] = acc;
  }
  return phi;
}

namespace {

// The local game of one unit cell, mu_x(S) = v((x+1)_S, x_{-S}) - v(x),
// laid out as a k=1 game.
KAryGame cell_game(const KAryGame& v, const LatticeShape& unit,
                   std::size_t origin_index, const LatticeShape& shape) {
  const int n = shape.n();
  std::vector<double> mu(unit.table_size(), 0.0);
  const double base_value = v[origin_index];
  for (std::uint64_t mask = 0; mask < unit.table_size(); ++mask) {
    std::size_t idx = origin_index;
    for (int j = 0; j < n; ++j) {
      if (mask & (std::uint64_t{1} << (n - 1 - j))) idx += shape.stride(j);
    }
    mu[mask] = v[idx] - base_value;
  }
  return KAryGame(unit, std::move(mu));
}

}  // namespace

ImportanceVector importance_by_cells(const KAryGame& v) {
  const LatticeShape& shape = v.shape();
  const int n = shape.n();
  const LatticeShape unit(n, 1);

  ImportanceVector phi(static_cast<std::size_t>(n), 0.0);
  // Cell origins are the points with every coordinate < k.
  LatticePoint x(static_cast<std::size_t>(n), 0);
  while (true) {
    const ImportanceVector local =
        shapley_classical(cell_game(v, unit, flat_index(x, shape), shape));
    for (std::size_t i = 0; i < phi.size(); ++i) phi[i] += local[i];

    int p = n - 1;
    for (; p >= 0; --p) {
      auto& c = x[static_cast<std::size_t>(p)];
      if (c < shape.k() - 1) {
        ++c;
        break;
      }
      c = 0;
    }
    if (p < 0) break;
  }
  return phi;
}

double sum_identity_rhs(const KAryGame& v) {
  const LatticeShape& shape = v.shape();
  const int n = shape.n();
  std::size_t diagonal = 0;
  for (int j = 0; j < n; ++j) diagonal += shape.stride(j);

  double acc = 0.0;
  LatticePoint x(static_cast<std::size_t>(n), 0);
  std::size_t idx = 0;
  do {
    bool full_cell = true;
    for (int c : x) {
      if (c == shape.k()) {
        full_cell = false;
        break;
      }
    }
    if (full_cell) acc += v[idx + diagonal] - v[idx];
    ++idx;
  } while (advance_point(x, shape));
  return acc;
}

ImportanceVector grabisch_lange(const KAryGame& v) {
  const LatticeShape& shape = v.shape();
  const int n = shape.n();
  const auto k = static_cast<std::size_t>(shape.k());
  std::vector<double> coeff(static_cast<std::size_t>(n));
  for (int s = 0; s <= n - 1; ++s) {
    coeff[static_cast<std::size_t>(s)] = shapley_coefficient(n, s);
  }

  ImportanceVector phi(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    const std::size_t own = shape.stride(i);
    double acc = 0.0;
    for (const LatticePoint& reduced : vertices_minus_i(shape, i)) {
      int kernel_count = 0;
      std::size_t base = 0;
      for (std::size_t p = 0; p < reduced.size(); ++p) {
        const int attr = (static_cast<int>(p) < i) ? static_cast<int>(p)
                                                   : static_cast<int>(p) + 1;
        if (reduced[p] == shape.k()) {
          ++kernel_count;
          base += k * shape.stride(attr);
        }
      }
      acc += coeff[static_cast<std::size_t>(kernel_count)] *
             (v[base + k * own] - v[base]);
    }
    phi[static_cast<std::size_t>(i)] = acc;
  }
  return phi;
}

WeightScheme::WeightScheme(std::vector<double> weights)
    : weights_(std::move(weights)) {
  if (weights_.empty()) {
    throw std::invalid_argument("WeightScheme: need at least one weight");
  }
  double previous = 0.0;
  for (double w : weights_) {
    if (!(w > previous)) {
      throw std::invalid_argument(
          "WeightScheme: weights must be positive and strictly increasing");
    }
    previous = w;
  }
}

WeightScheme WeightScheme::linear(int k) {
  std::vector<double> w(static_cast<std::size_t>(k));
  for (int j = 1; j <= k; ++j) {
    w[static_cast<std::size_t>(j - 1)] = static_cast<double>(j);
  }
  return WeightScheme(std::move(w));
}

double WeightScheme::level(int j) const {
  if (j < 0 || j > k()) {
    throw std::out_of_range("WeightScheme: level out of range");
  }
  return j == 0 ? 0.0 : weights_[static_cast<std::size_t>(j - 1)];
}

BiIndexTable::BiIndexTable(int n, int k) : n_(n), k_(k) {
  if (n_ < 1 || k_ < 1) {
    throw std::invalid_argument("BiIndexTable: invalid dimensions");
  }
  cells_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(k_),
                0.0);
}

double BiIndexTable::at(int attribute, int level) const {
  return const_cast<BiIndexTable*>(this)->at(attribute, level);
}

double& BiIndexTable::at(int attribute, int level) {
  if (attribute < 0 || attribute >= n_ || level < 1 || level > k_) {
    throw std::out_of_range("BiIndexTable: cell out of range");
  }
  return cells_[static_cast<std::size_t>(attribute) *
                    static_cast<std::size_t>(k_) +
                static_cast<std::size_t>(level - 1)];
}

double BiIndexTable::row_sum(int attribute) const {
  double acc = 0.0;
  for (int j = 1; j <= k_; ++j) acc += at(attribute, j);
  return acc;
}

std::vector<double> BiIndexTable::row_sums() const {
  std::vector<double> sums(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) sums[static_cast<std::size_t>(i)] = row_sum(i);
  return sums;
}

double BiIndexTable::total() const {
  double acc = 0.0;
  for (int i = 0; i < n_; ++i) acc += row_sum(i);
  return acc;
}

BiIndexTable hsiao_raghavan(const KAryGame& v, const WeightScheme& w,
                            ZeroLevelPolicy policy) {
  const LatticeShape& shape = v.shape();
  if (w.k() != shape.k()) {
    throw std::invalid_argument("hsiao_raghavan: need exactly k weights, got " +
                                std::to_string(w.k()));
  }
  const MoebiusTable m = moebius(v);
  BiIndexTable table(shape.n(), shape.k());

  LatticePoint x(static_cast<std::size_t>(shape.n()), 0);
  std::size_t idx = 0;
  do {
    const double mass = m[idx];
    ++idx;
    if (mass == 0.0) continue;
    if (policy == ZeroLevelPolicy::Reject && support_size(x) < shape.n()) {
      throw std::domain_error(
          "hsiao_raghavan: Moebius mass on a point with a zero coordinate "
          "(weights are undefined at level 0 under the strict reading)");
    }
    double denom = 0.0;
    for (int c : x) denom += w.level(c);
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] >= 1) {
        table.at(static_cast<int>(i), x[i]) += mass * (w.level(x[i]) / denom);
      }
    }
  } while (advance_point(x, shape));
  return table;
}

BiIndexTable peters_zank(const KAryGame& v) {
  const LatticeShape& shape = v.shape();
  const MoebiusTable m = moebius(v);
  BiIndexTable table(shape.n(), shape.k());

  LatticePoint x(static_cast<std::size_t>(shape.n()), 0);
  std::size_t idx = 0;
  do {
    const double mass = m[idx];
    ++idx;
    if (mass == 0.0) continue;
    const int s = support_size(x);
    const double share = mass / static_cast<double>(s);
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] >= 1) table.at(static_cast<int>(i), x[i]) += share;
    }
  } while (advance_point(x, shape));
  return table;
}

}  // namespace karyx
